mod common;

use common::*;
use stabforge::bounds::{hamming, singleton};
use stabforge::code::format::read;
use stabforge::code::{
    dual, min_weight, min_weight_diff, pairing, Budget, InnerProduct, LinearCode, SymplecticCode, WeightFn,
};
use stabforge::fmatrix::FqMatrix;
use stabforge::stabilizer::{
    certify_additive, certify_stabilizer, css, css_aqc, ea_ebits, propagate, steane_enlarge, CodeParams, Distance,
    Purity, Rule, StabilizerCode,
};
use stabforge::statevec::GeneratorSet;

/// Random symplectic self-orthogonal code of dimension at most `k`, grown
/// greedily from random vectors.
fn random_isotropic(seed: u64, q: usize, n: usize, k: usize) -> SymplecticCode {
    let f = gf(q);
    let mut r = rng(seed);
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for _ in 0..50 {
        if rows.len() == k {
            break;
        }
        let v = random_vec(&mut r, q, 2 * n);
        if rows.iter().all(|u| pairing(&f, InnerProduct::Symplectic, u, &v).unwrap() == 0) {
            let mut m = rows.clone();
            m.push(v.clone());
            if FqMatrix::from_rows(&f, 2 * n, &m).unwrap().rank() == m.len() {
                rows = m;
            }
        }
    }
    SymplecticCode::new(&f, n, &rows).unwrap()
}

fn suite() -> Vec<StabilizerCode> {
    let b = Budget::default();
    let mut out = vec![
        certify_stabilizer(&ex512(), b).unwrap(),
        css(&hamming7(), &hamming7(), b).unwrap(),
        css(&even(4), &even(4), b).unwrap(),
        css(&even(6), &even(6), b).unwrap(),
    ];
    for seed in 0..24 {
        let q = if seed % 3 == 0 { 3 } else { 2 };
        let n = 2 + (seed as usize % 5);
        let c = random_isotropic(seed, q, n, 1 + seed as usize % n);
        if let Ok(s) = certify_stabilizer(&c, b) {
            out.push(s);
        }
    }
    out
}

#[test]
fn dimension_law_and_self_orthogonality() {
    let all = suite();
    assert!(all.len() > 20);
    for s in all {
        let p = s.params();
        assert_eq!(p.k + s.code().dim(), p.n);
        s.code().check_self_orthogonal().unwrap();
        let g = s.code().generator();
        for u in g.iter_rows() {
            for v in g.iter_rows() {
                assert_eq!(pairing(s.code().field(), InnerProduct::Symplectic, u, v).unwrap(), 0);
            }
        }
    }
}

#[test]
fn css_code_certifies_to_the_same_parameters() {
    for (c1, c2) in [(hamming7(), hamming7()), (even(4), even(4)), (even(6), even(6))] {
        let s = css(&c1, &c2, Budget::default()).unwrap();
        s.code().check_self_orthogonal().unwrap();
        let again = certify_stabilizer(s.code(), Budget::default()).unwrap();
        assert!(s.params().same_parameters(again.params()), "{} vs {}", s.params(), again.params());
    }
}

#[test]
fn additive_route_agrees_with_symplectic_route() {
    for s in suite() {
        let add = s.code().to_additive().unwrap();
        let via = certify_additive(&add, Budget::default()).unwrap();
        assert!(via.params().same_parameters(s.params()), "{} vs {}", via.params(), s.params());
        let w = |c: &StabilizerCode| c.params().witnesses.iter().map(|(_, op)| op.weights().quantum).collect::<Vec<_>>();
        assert_eq!(w(&via), w(&s));
    }
}

#[test]
fn purity_follows_the_definition() {
    for s in suite() {
        let p = s.params();
        let Distance::Symmetric(d) = &p.distance else { panic!() };
        let dual_min = min_weight(s.dual().code(), WeightFn::Quantum, Budget::default()).unwrap();
        let expected = if dual_min.value == d.value { Purity::Pure } else { Purity::Impure };
        assert_eq!(p.pure, expected, "{p}");
    }
}

#[test]
fn distance_matches_enumeration() {
    for s in suite() {
        let p = s.params();
        let f = s.code().field().clone();
        let n = p.n;
        let code_words = span(&f, &fp_generators(s.code().code()), 2 * n);
        let dual_words = span(&f, &fp_generators(s.dual().code()), 2 * n);
        let pool: Vec<&Vec<u8>> = if p.k == 0 {
            dual_words.iter().filter(|w| w.iter().any(|&x| x != 0)).collect()
        } else {
            dual_words.iter().filter(|w| !code_words.contains(w)).collect()
        };
        let d = pool.iter().map(|w| quantum_weight(w)).min().unwrap();
        assert_eq!(p.distance.min(), d, "{p}");
    }
}

#[test]
fn hermitian_lift_gives_hermitian_generators() {
    for s in suite().into_iter().filter(|s| s.params().q == 2 && s.params().n <= 5) {
        let gens = GeneratorSet::from_code(&s).unwrap();
        for g in gens.operators() {
            let ab: usize = g.a().iter().zip(g.b()).filter(|(&x, &y)| x == 1 && y == 1).count();
            assert_eq!(g.phase() as usize % 2, ab % 2);
            let m = dense(g);
            for i in 0..m.len() {
                for j in 0..m.len() {
                    assert_eq!(m[i][j], m[j][i].conj());
                }
            }
        }
    }
}

#[test]
fn certified_codes_satisfy_the_bounds() {
    for s in suite() {
        let p = s.params();
        if p.k == 0 {
            continue;
        }
        assert_eq!(singleton(p).holds(), Some(true), "{p}");
        if p.pure == Purity::Pure {
            assert_eq!(hamming(p).holds(), Some(true), "{p}");
        }
    }
}

#[test]
fn steane_enlargement_of_reed_muller() {
    let rm = match read(&data("rm24.lin")).unwrap() {
        stabforge::code::format::CodeFile::Linear(c) => c,
        _ => panic!(),
    };
    assert_eq!(rm.dim(), 11);
    assert_eq!(min_weight(&rm, WeightFn::Hamming, Budget::default()).unwrap().value, 4);
    let p = steane_enlarge(&rm, &even(16), Budget::default()).unwrap();
    assert_eq!(p.label(), "[[16,10,>=3]]_2");
    assert!(!p.distance.is_exact());
}

#[test]
fn ea_ebits_rank_bounds() {
    let f = gf(4);
    let mut r = rng(99);
    for _ in 0..40 {
        let c = LinearCode::new(&f, 6, &random_rows(&mut r, 4, 3, 6)).unwrap();
        if c.dim() != 3 {
            continue;
        }
        let Ok(p) = ea_ebits(&c, Budget::default()) else { continue };
        let ebits = p.ebits.unwrap();
        assert!(ebits <= 3);
        assert_eq!(p.k + 6, 2 * 3 + ebits);
        // oracle: rank of H H^† from an independently built parity-check matrix
        let h = dual(&c, InnerProduct::Euclidean).unwrap().generator().clone();
        let mut prod = Vec::new();
        for u in h.iter_rows() {
            let row: Vec<u8> = h.iter_rows().map(|v| {
                u.iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, f.pow(y, 2))))
            }).collect();
            prod.push(row);
        }
        assert_eq!(FqMatrix::from_rows(&f, h.rows(), &prod).unwrap().rank(), ebits);
    }
}

#[test]
fn propagation_bookkeeping() {
    let mut r = rng(3);
    for _ in 0..500 {
        let n = r.random_range(2..30usize);
        let d = r.random_range(1..=(n / 2 + 1));
        let kmax = (n + 2).saturating_sub(2 * d);
        let k = r.random_range(0..=kmax);
        let Ok(p) = CodeParams::given(2, n, k, d, Purity::Unknown) else { continue };
        if let Ok(s) = propagate(&p, Rule::Subcode) {
            assert_eq!((s.n, s.k, s.distance.min()), (n, k - 1, d));
        } else {
            assert_eq!(k, 0);
        }
        let l = propagate(&p, Rule::Lengthen).unwrap();
        assert_eq!((l.n, l.k, l.distance.min()), (n + 1, k, d));
        if let Ok(pu) = propagate(&p, Rule::Puncture) {
            assert_eq!((pu.n, pu.k, pu.distance.min()), (n - 1, k, d - 1));
        }
        assert!(!l.distance.is_exact());
        assert_eq!(l.provenance.last().unwrap(), "lengthen");
    }
}

#[test]
fn hermitian_asymmetric_code_over_gf4() {
    let h = hexacode();
    let p = css_aqc(&h, &h, InnerProduct::Hermitian, Budget::default()).unwrap();
    assert_eq!((p.n, p.k), (6, 0));
    let even4 = LinearCode::new(&gf(4), 4, &[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]]).unwrap();
    let p = css_aqc(&even4, &even4, InnerProduct::Euclidean, Budget::default()).unwrap();
    assert_eq!(p.label(), "[[4,2,2,2]]_4");
}

#[test]
fn coset_weights_of_steane_code() {
    let h = hamming7();
    let d = dual(&h, InnerProduct::Euclidean).unwrap();
    let r = min_weight_diff(&h, &d, WeightFn::Hamming, Budget::default()).unwrap();
    assert_eq!(r.value, 3);
}
