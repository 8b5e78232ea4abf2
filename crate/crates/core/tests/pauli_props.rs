mod common;

use common::*;
use num_complex::Complex64;
use stabforge::pauli::{commute_phase, error_set_size, pauli_format, pauli_mul, pauli_parse, PauliOperator};

/// `M(E) M(E') = M(E E')` with phases, and `E E' = ±E' E` according to
/// `commute_phase`, for every pair of phase-0 operators.
fn check_all_pairs(q: usize, n: usize) {
    let f = gf(q);
    let ops = all_paulis(&f, n, 0);
    let mats: Vec<_> = ops.iter().map(dense).collect();
    let p = f.p() as f64;
    for (e, me) in ops.iter().zip(&mats) {
        for (g, mg) in ops.iter().zip(&mats) {
            let prod = pauli_mul(e, g).unwrap();
            assert!(max_diff(&matmul(me, mg), &dense(&prod)) < if q == 2 { f64::MIN_POSITIVE } else { 1e-12 }, "{e} * {g}");
            let c = commute_phase(e, g).unwrap();
            let eg = matmul(me, mg);
            let ge = matmul(mg, me);
            let w = if q == 2 {
                Complex64::new(if c == 0 { 1.0 } else { -1.0 }, 0.0)
            } else {
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * c as f64 / p)
            };
            let scaled: Vec<Vec<Complex64>> = ge.iter().map(|r| r.iter().map(|x| x * w).collect()).collect();
            assert!(max_diff(&eg, &scaled) < 1e-12, "{e} vs {g}");
            let commute = max_diff(&eg, &ge) < 1e-12;
            assert_eq!(commute, c == 0);
        }
    }
}

#[test]
fn qubit_products_match_dense_matrices() {
    for n in 1..=3 {
        check_all_pairs(2, n);
    }
}

#[test]
fn qutrit_products_match_dense_matrices() {
    for n in 1..=2 {
        check_all_pairs(3, n);
    }
}

#[test]
fn gf4_products_match_dense_matrices() {
    check_all_pairs(4, 1);
}

#[test]
fn letters_match_pauli_matrices() {
    let f = gf(2);
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    assert_eq!(dense(&pauli_parse("X", &f).unwrap()), vec![vec![z, one], vec![one, z]]);
    assert_eq!(dense(&pauli_parse("Z", &f).unwrap()), vec![vec![one, z], vec![z, -one]]);
    let y = dense(&pauli_parse("Y", &f).unwrap());
    assert!(max_diff(&y, &[vec![z, -i], vec![i, z]]) < 1e-15);
    for s in ["Y", "XZ", "-iY", "+iZZ", "-1XYZ", "IIII"] {
        let e = pauli_parse(s, &f).unwrap();
        assert_eq!(pauli_parse(&pauli_format(&e), &f).unwrap(), e);
    }
}

#[test]
fn phases_vanish_in_the_quotient() {
    let f = gf(3);
    let ops = all_paulis(&f, 1, 0);
    for e in &ops {
        for g in &ops {
            let prod = pauli_mul(e, g).unwrap();
            let sum: Vec<u8> = e.symplectic().iter().zip(g.symplectic()).map(|(&x, y)| f.add(x, y)).collect();
            assert_eq!(prod.symplectic(), sum);
        }
    }
}

#[test]
fn weight_is_subadditive() {
    let mut r = rng(5);
    for q in [2usize, 3, 4] {
        let f = gf(q);
        for _ in 0..100_000 / 3 + 1 {
            let n = r.random_range(1..9);
            let e = PauliOperator::from_symplectic(&f, &random_vec(&mut r, q, 2 * n), 0).unwrap();
            let g = PauliOperator::from_symplectic(&f, &random_vec(&mut r, q, 2 * n), 0).unwrap();
            let eg = pauli_mul(&e, &g).unwrap();
            assert!(eg.weights().quantum <= e.weights().quantum + g.weights().quantum);
        }
    }
}

#[test]
fn error_set_size_matches_enumeration() {
    for q in [2usize, 3] {
        let phases = if q == 2 { 4u64 } else { 3 };
        for n in 1..=6usize {
            if q == 3 && n > 4 {
                continue;
            }
            let mut counts = vec![0u64; n + 1];
            for v in all_vectors(q, 2 * n) {
                counts[quantum_weight(&v)] += 1;
            }
            let mut acc = 0u64;
            for (delta, c) in counts.iter().enumerate() {
                acc += c;
                assert_eq!(error_set_size(n, delta, q, true).unwrap(), acc.into(), "q={q} n={n} delta={delta}");
                assert_eq!(error_set_size(n, delta, q, false).unwrap(), (acc * phases).into());
            }
        }
    }
    assert_eq!(error_set_size(5, 1, 2, true).unwrap(), 16u32.into());
    assert!(error_set_size(3, 4, 2, true).is_err());
}
