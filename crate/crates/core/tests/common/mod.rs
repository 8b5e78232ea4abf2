#![allow(dead_code)]

use num_complex::Complex64;
use rand::rngs::StdRng;
pub use rand::{RngExt, SeedableRng};
use stabforge::code::{LinearCode, SymplecticCode};
use stabforge::gf::Field;
use stabforge::pauli::PauliOperator;

pub fn gf(q: usize) -> Field {
    Field::gf(q).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn hamming7() -> LinearCode {
    LinearCode::new(
        &gf(2),
        7,
        &[
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ],
    )
    .unwrap()
}

pub fn even(n: usize) -> LinearCode {
    let rows: Vec<Vec<u8>> = (1..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[0] = 1;
            r[i] = 1;
            r
        })
        .collect();
    LinearCode::new(&gf(2), n, &rows).unwrap()
}

pub fn ex512() -> SymplecticCode {
    let rows = vec![
        vec![1, 1, 0, 0, 0, 0, 0, 1, 0, 1],
        vec![0, 1, 1, 0, 0, 1, 0, 0, 1, 0],
        vec![0, 0, 1, 1, 0, 0, 1, 0, 0, 1],
        vec![0, 0, 0, 1, 1, 1, 0, 1, 0, 0],
    ];
    SymplecticCode::new(&gf(2), 5, &rows).unwrap()
}

pub fn hexacode() -> LinearCode {
    let w = 2;
    LinearCode::new(&gf(4), 6, &[vec![1, 0, 0, 1, w, w], vec![0, 1, 0, w, 1, w], vec![0, 0, 1, w, w, 1]]).unwrap()
}

pub fn data(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn random_vec(r: &mut StdRng, q: usize, n: usize) -> Vec<u8> {
    (0..n).map(|_| r.random_range(0..q) as u8).collect()
}

pub fn random_rows(r: &mut StdRng, q: usize, k: usize, n: usize) -> Vec<Vec<u8>> {
    (0..k).map(|_| random_vec(r, q, n)).collect()
}

/// All vectors of `F^n` in lexicographic order.
pub fn all_vectors(q: usize, n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(q.pow(n as u32));
    let mut v = vec![0u8; n];
    loop {
        out.push(v.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            v[i] += 1;
            if (v[i] as usize) < q {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Every `F_p`-combination of the rows, sorted.
pub fn span(field: &Field, rows: &[Vec<u8>], n: usize) -> Vec<Vec<u8>> {
    let p = field.p() as usize;
    let mut words = vec![vec![0u8; n]];
    for r in rows {
        let mut next = Vec::with_capacity(words.len() * p);
        for w in &words {
            let mut acc = w.clone();
            for _ in 0..p {
                next.push(acc.clone());
                acc = acc.iter().zip(r).map(|(&x, &y)| field.add(x, y)).collect();
            }
        }
        words = next;
    }
    words.sort();
    words.dedup();
    words
}

/// `F_p`-generators of a linear code: each row times each basis element `x^i`.
pub fn fp_generators(c: &LinearCode) -> Vec<Vec<u8>> {
    let f = c.field();
    let mut out = Vec::new();
    for r in c.generator().iter_rows() {
        match c.linearity() {
            stabforge::code::Linearity::Linear => {
                // x^i is encoded as p^i
                for i in 0..f.m() {
                    let s = (f.p() as usize).pow(i) as u8;
                    out.push(r.iter().map(|&x| f.mul(s, x)).collect());
                }
            }
            stabforge::code::Linearity::Additive => out.push(r.to_vec()),
        }
    }
    out
}

pub fn hamming_weight(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn quantum_weight(v: &[u8]) -> usize {
    let n = v.len() / 2;
    (0..n).filter(|&i| v[i] != 0 || v[n + i] != 0).count()
}

/// Dense matrix of `ω^phase X(a) Z(b)` on `(C^q)^{⊗n}`, with `ω = i` for
/// qubits and `e^{2πi/p}` otherwise. Index `Σ v_i q^{n-1-i}`.
pub fn dense(e: &PauliOperator) -> Vec<Vec<Complex64>> {
    let f = e.field();
    let q = f.q();
    let n = e.n();
    let dim = q.pow(n as u32);
    let root = if q == 2 { 4.0 } else { f.p() as f64 };
    let omega = |k: u64| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (k as f64) / root);
    let prime_root = |k: u64| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (k as f64) / f.p() as f64);
    let decode = |mut idx: usize| {
        let mut v = vec![0u8; n];
        for i in (0..n).rev() {
            v[i] = (idx % q) as u8;
            idx /= q;
        }
        v
    };
    let encode = |v: &[u8]| v.iter().fold(0usize, |acc, &x| acc * q + x as usize);
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for col in 0..dim {
        let v = decode(col);
        let tr = f.trace_to_prime(f.dot(e.b(), &v)) as u64;
        let target: Vec<u8> = v.iter().zip(e.a()).map(|(&x, &y)| f.add(x, y)).collect();
        m[encode(&target)][col] = if q == 2 {
            // exact: powers of i and signs
            let ph = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)][e.phase() as usize % 4];
            let s = if tr == 1 { -1.0 } else { 1.0 };
            Complex64::new(ph.0 * s, ph.1 * s)
        } else {
            omega(e.phase() as u64) * prime_root(tr)
        };
    }
    m
}

pub fn matmul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let n = a.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn max_diff(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> f64 {
    a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// All qubit operators on `n` qubits with the given phase, `(a | b)` in
/// lexicographic order.
pub fn all_paulis(field: &Field, n: usize, phase: u8) -> Vec<PauliOperator> {
    all_vectors(field.q(), 2 * n)
        .into_iter()
        .map(|v| PauliOperator::from_symplectic(field, &v, phase).unwrap())
        .collect()
}
