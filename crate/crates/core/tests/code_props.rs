mod common;

use common::*;
use proptest::prelude::*;
use stabforge::code::format::{parse, render, CodeFile};
use stabforge::code::{
    check_self_orthogonal, dual, hull, is_subcode, min_weight, min_weight_diff, Budget, InnerProduct, LinearCode,
    Linearity, Phi, SymplecticCode, WeightFn,
};
use stabforge::Error;

fn same(a: &LinearCode, b: &LinearCode) -> bool {
    is_subcode(a, b).unwrap() && is_subcode(b, a).unwrap()
}

fn random_linear(seed: u64, q: usize, k: usize, n: usize) -> LinearCode {
    let mut r = rng(seed);
    LinearCode::new(&gf(q), n, &random_rows(&mut r, q, k, n)).unwrap()
}

fn random_additive(seed: u64, q: usize, k: usize, n: usize) -> LinearCode {
    let mut r = rng(seed);
    LinearCode::additive(&gf(q), n, &random_rows(&mut r, q, k, n)).unwrap()
}

fn weight(wfn: WeightFn, v: &[u8]) -> usize {
    match wfn {
        WeightFn::Hamming => hamming_weight(v),
        WeightFn::Quantum => quantum_weight(v),
    }
}

/// Minimum weight and lexicographically first minimal word, by enumeration.
fn naive_min(words: &[Vec<u8>], wfn: WeightFn) -> Option<(usize, Vec<u8>)> {
    words
        .iter()
        .filter(|w| w.iter().any(|&x| x != 0))
        .map(|w| (weight(wfn, w), w.clone()))
        .min()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_duals_are_nondegenerate(seed in any::<u64>(), q in prop::sample::select(vec![2usize, 3, 4, 5, 9]), k in 0usize..5, n in 1usize..7) {
        let c = random_linear(seed, q, k, n);
        let m = gf(q).m() as usize;
        for ip in InnerProduct::ALL {
            let Ok(d) = dual(&c, ip) else { continue };
            prop_assert_eq!(c.log_p_size() + d.log_p_size(), n * m, "{}", ip);
            let dd = dual(&d, ip).unwrap();
            prop_assert!(same(&c, &dd), "{}", ip);
        }
    }

    #[test]
    fn additive_trace_duals_are_nondegenerate(seed in any::<u64>(), q in prop::sample::select(vec![4usize, 9]), k in 0usize..6, n in 1usize..5) {
        let c = random_additive(seed, q, k, n);
        let m = gf(q).m() as usize;
        for ip in [InnerProduct::TraceEuclidean, InnerProduct::TraceHermitian, InnerProduct::TraceAlternating] {
            let d = dual(&c, ip).unwrap();
            prop_assert_eq!(c.log_p_size() + d.log_p_size(), n * m);
            prop_assert!(same(&c, &dual(&d, ip).unwrap()));
            for u in fp_generators(&c) {
                for v in fp_generators(&d) {
                    prop_assert_eq!(c.pairing(ip, &u, &v).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn alternating_dual_of_linear_code_is_hermitian_dual(seed in any::<u64>(), q in prop::sample::select(vec![4usize, 9]), k in 0usize..4, n in 1usize..6) {
        let c = random_linear(seed, q, k, n);
        let alt = dual(&c, InnerProduct::TraceAlternating).unwrap();
        let herm = dual(&c, InnerProduct::Hermitian).unwrap();
        prop_assert_eq!(alt.linearity(), Linearity::Linear);
        prop_assert!(same(&alt, &herm));
    }

    #[test]
    fn phi_preserves_symplectic_self_orthogonality(seed in any::<u64>(), q in prop::sample::select(vec![2usize, 3]), k in 1usize..5, n in 1usize..5) {
        let c = random_linear(seed, q, k, 2 * n);
        let h = hull(&c, InnerProduct::Symplectic).unwrap();
        for code in [c, h] {
            let sym_ok = check_self_orthogonal(&code, InnerProduct::Symplectic).is_ok();
            let add = SymplecticCode::from_code(code.clone()).unwrap().to_additive().unwrap();
            let alt_ok = check_self_orthogonal(&add, InnerProduct::TraceAlternating).is_ok();
            prop_assert_eq!(sym_ok, alt_ok);
            prop_assert_eq!(add.log_p_size(), code.log_p_size());
        }
    }

    #[test]
    fn exact_distance_matches_enumeration(seed in any::<u64>(), q in prop::sample::select(vec![2usize, 3, 4, 5]), k in 1usize..6, n in 1usize..9) {
        let c = random_linear(seed, q, k, n);
        let words = span(c.field(), &fp_generators(&c), n);
        let got = min_weight(&c, WeightFn::Hamming, Budget::default());
        match naive_min(&words, WeightFn::Hamming) {
            None => prop_assert_eq!(got, Err(Error::ZeroCode)),
            Some((w, first)) => {
                let got = got.unwrap();
                prop_assert!(got.is_exact());
                prop_assert_eq!(got.value, w);
                prop_assert_eq!(got.witness, Some(first));
            }
        }
    }

    #[test]
    fn exact_quantum_distance_matches_enumeration(seed in any::<u64>(), q in prop::sample::select(vec![2usize, 3]), k in 1usize..7, n in 1usize..5) {
        let c = random_linear(seed, q, k, 2 * n);
        let words = span(c.field(), &fp_generators(&c), 2 * n);
        if let Some((w, first)) = naive_min(&words, WeightFn::Quantum) {
            let got = min_weight(&c, WeightFn::Quantum, Budget::default()).unwrap();
            prop_assert_eq!(got.value, w);
            prop_assert_eq!(got.witness, Some(first));
        }
    }

    #[test]
    fn additive_distance_matches_enumeration(seed in any::<u64>(), k in 1usize..7, n in 1usize..5) {
        let c = random_additive(seed, 4, k, n);
        let words = span(c.field(), &fp_generators(&c), n);
        if let Some((w, _)) = naive_min(&words, WeightFn::Hamming) {
            let got = min_weight(&c, WeightFn::Hamming, Budget::default()).unwrap();
            prop_assert_eq!(got.value, w);
            let wit = got.witness.unwrap();
            prop_assert!(words.contains(&wit));
            prop_assert_eq!(hamming_weight(&wit), w);
        }
    }

    #[test]
    fn coset_distance_matches_enumeration(seed in any::<u64>(), q in prop::sample::select(vec![2usize, 3, 4]), k in 1usize..5, n in 2usize..8) {
        let a = random_linear(seed, q, k + 1, n);
        let rows = a.generator().row_vecs();
        let b = LinearCode::new(&gf(q), n, &rows[..rows.len().saturating_sub(1).min(k)]).unwrap();
        let wa = span(a.field(), &fp_generators(&a), n);
        let wb = span(b.field(), &fp_generators(&b), n);
        let diff: Vec<Vec<u8>> = wa.iter().filter(|w| !wb.contains(w)).cloned().collect();
        let got = min_weight_diff(&a, &b, WeightFn::Hamming, Budget::default());
        match naive_min(&diff, WeightFn::Hamming) {
            None => prop_assert!(got.is_err()),
            Some((w, first)) => {
                let got = got.unwrap();
                prop_assert_eq!(got.value, w);
                prop_assert_eq!(got.witness, Some(first));
            }
        }
    }

    #[test]
    fn format_round_trip(seed in any::<u64>(), q in prop::sample::select(vec![2usize, 3, 4, 9, 16]), k in 0usize..4, n in 1usize..6, kind in 0u8..3) {
        let file = match kind {
            0 => CodeFile::Linear(random_linear(seed, q, k, n)),
            1 if gf(q).square_root_field().is_some() => CodeFile::Additive(random_additive(seed, q, k, n)),
            _ => CodeFile::Symplectic(SymplecticCode::from_code(random_linear(seed, q, k, 2 * n)).unwrap()),
        };
        prop_assert_eq!(parse(&render(&file)).unwrap(), file);
    }
}

#[test]
fn phi_weights_and_forms_agree() {
    let mut r = rng(7);
    for q in [2usize, 3, 4] {
        let phi = Phi::over(&gf(q)).unwrap();
        let f = gf(q);
        for _ in 0..2000 {
            let n = r.random_range(1..6);
            let u = random_vec(&mut r, q, 2 * n);
            let v = random_vec(&mut r, q, 2 * n);
            let (pu, pv) = (phi.forward(&u).unwrap(), phi.forward(&v).unwrap());
            assert_eq!(quantum_weight(&u), hamming_weight(&pu));
            let sym = stabforge::code::pairing(&f, InnerProduct::Symplectic, &u, &v).unwrap();
            assert_eq!(f.trace_to_prime(sym), phi.alt(&pu, &pv));
            assert_eq!(phi.inverse(&pu), u);
        }
    }
}

/// Over GF(4), linear trace-Hermitian self-orthogonal codes are even, and
/// even additive codes are trace-Hermitian self-orthogonal.
#[test]
fn gf4_even_codes() {
    let f = gf(4);
    let mut r = rng(11);
    let mut linear_seen = 0;
    let mut additive_seen = 0;
    for _ in 0..400 {
        let n = r.random_range(2..7);
        let k = r.random_range(1..4);
        let c = LinearCode::new(&f, n, &random_rows(&mut r, 4, k, n)).unwrap();
        let h = hull(&c, InnerProduct::Hermitian).unwrap();
        if h.dim() > 0 {
            assert!(check_self_orthogonal(&h, InnerProduct::TraceHermitian).is_ok());
            let words = span(&f, &fp_generators(&h), n);
            assert!(words.iter().all(|w| hamming_weight(w) % 2 == 0));
            linear_seen += 1;
        }
        let a = LinearCode::additive(&f, n, &random_rows(&mut r, 4, k, n)).unwrap();
        let words = span(&f, &fp_generators(&a), n);
        if words.iter().all(|w| hamming_weight(w) % 2 == 0) {
            assert!(check_self_orthogonal(&a, InnerProduct::TraceHermitian).is_ok());
            additive_seen += 1;
        }
    }
    let hexa = hexacode();
    assert!(check_self_orthogonal(&hexa, InnerProduct::TraceHermitian).is_ok());
    assert!(span(&f, &fp_generators(&hexa), 6).iter().all(|w| hamming_weight(w) % 2 == 0));
    assert!(linear_seen > 20 && additive_seen > 20, "{linear_seen} {additive_seen}");
}

#[test]
fn hamming_dual_dimensions() {
    let h = hamming7();
    let d = dual(&h, InnerProduct::Euclidean).unwrap();
    assert_eq!(h.dim() + d.dim(), 7);
    assert!(is_subcode(&d, &h).unwrap());
    assert_eq!(min_weight(&d, WeightFn::Hamming, Budget::default()).unwrap().value, 4);
}

#[test]
fn hexacode_is_hermitian_self_dual() {
    let h = hexacode();
    assert!(same(&h, &dual(&h, InnerProduct::Hermitian).unwrap()));
    assert_eq!(min_weight(&h, WeightFn::Hamming, Budget::default()).unwrap().value, 4);
}

#[test]
fn budget_exhaustion_gives_lower_bound() {
    let c = random_linear(3, 2, 20, 40);
    let r = min_weight(&c, WeightFn::Hamming, Budget::from_log2(8)).unwrap();
    assert!(!r.is_exact());
    assert!(r.value >= 1);
    let exact = min_weight(&c, WeightFn::Hamming, Budget::default()).unwrap();
    assert!(exact.is_exact());
    assert!(r.value <= exact.value);
}
