//! Dense qubit states: Pauli action, syndrome projectors, eigenspace
//! dimensions and the Knill–Laflamme check.
//!
//! Basis vectors `|v>` for `v ∈ F_2^n` are indexed by `Σ v_i 2^{n-1-i}`, so
//! `v_1` is the most significant bit and `|00>, |01>, |10>, |11>` come in
//! that order.

use num_complex::Complex64;

use crate::code::{pairing, InnerProduct, SymplecticCode};
use crate::error::{Error, Result};
use crate::fmatrix::FqMatrix;
use crate::gf::Field;
use crate::pauli::{pauli_mul, PauliOperator};
use crate::stabilizer::StabilizerCode;

pub const TOLERANCE: f64 = 1e-9;
const MAX_QUBITS: usize = 12;
const MAX_KL_QUBITS: usize = 10;

fn i_pow(k: u8) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn mask(bits: &[u8]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | (b & 1) as usize)
}

#[derive(Clone, Debug, PartialEq)]
pub struct State {
    n: usize,
    amps: Vec<Complex64>,
}

impl State {
    pub fn zeros(n: usize) -> Result<State> {
        if n > MAX_QUBITS {
            return Err(Error::TooLarge(format!("{n} qubits (at most {MAX_QUBITS})")));
        }
        Ok(State { n, amps: vec![Complex64::new(0.0, 0.0); 1 << n] })
    }

    /// `|v>` for `v ∈ F_2^n`.
    pub fn basis(v: &[u8]) -> Result<State> {
        let mut s = State::zeros(v.len())?;
        s.amps[mask(v)] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    fn basis_index(n: usize, idx: usize) -> State {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[idx] = Complex64::new(1.0, 0.0);
        State { n, amps }
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<State> {
        if amps.len() != 1 << n {
            return Err(Error::ShapeMismatch(format!("{} amplitudes for {n} qubits", amps.len())));
        }
        Ok(State { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &State) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, c: Complex64) -> State {
        State { n: self.n, amps: self.amps.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, other: &State) -> State {
        State { n: self.n, amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &State) -> State {
        State { n: self.n, amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a - b).collect() }
    }

    /// Largest absolute amplitude difference.
    pub fn max_diff(&self, other: &State) -> f64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

fn check_qubit(e: &PauliOperator) -> Result<()> {
    if e.field().q() != 2 {
        return Err(Error::UnsupportedField(e.field().q()));
    }
    Ok(())
}

/// `E|ψ>` for `E = i^λ X(a) Z(b)`: `|v> ↦ i^λ (-1)^{b·v} |v + a>`.
pub fn apply_pauli(e: &PauliOperator, s: &State) -> Result<State> {
    check_qubit(e)?;
    if e.n() != s.n {
        return Err(Error::ShapeMismatch(format!("operator on {} qubits, state on {}", e.n(), s.n)));
    }
    let am = mask(e.a());
    let bm = mask(e.b());
    let ph = i_pow(e.phase());
    let mut out = vec![Complex64::new(0.0, 0.0); s.amps.len()];
    for (v, &amp) in s.amps.iter().enumerate() {
        let sign = if (v & bm).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
        out[v ^ am] = amp * ph * sign;
    }
    Ok(State { n: s.n, amps: out })
}

/// Independent, pairwise commuting qubit generators `i^λ_j X(a_j) Z(b_j)`
/// with `λ_j ≡ a_j·b_j (mod 2)`.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    n: usize,
    ops: Vec<PauliOperator>,
}

impl GeneratorSet {
    pub fn new(n: usize, ops: Vec<PauliOperator>) -> Result<GeneratorSet> {
        for op in &ops {
            check_qubit(op)?;
            if op.n() != n {
                return Err(Error::ShapeMismatch(format!("generator on {} qubits, expected {n}", op.n())));
            }
            if !op.is_hermitian() {
                return Err(Error::BadInput(format!("generator {op} is not Hermitian (λ ≢ a·b mod 2)")));
            }
        }
        let f = Field::gf(2)?;
        for i in 0..ops.len() {
            for j in i + 1..ops.len() {
                let v = pairing(&f, InnerProduct::Symplectic, &ops[i].symplectic(), &ops[j].symplectic())?;
                if v != 0 {
                    return Err(Error::NotSelfOrthogonal { i, j, value: v });
                }
            }
        }
        let rows: Vec<Vec<u8>> = ops.iter().map(|o| o.symplectic()).collect();
        if !rows.is_empty() && FqMatrix::from_rows(&f, 2 * n, &rows)?.rank() != rows.len() {
            return Err(Error::BadInput("generators are linearly dependent".into()));
        }
        Ok(GeneratorSet { n, ops })
    }

    pub fn empty(n: usize) -> GeneratorSet {
        GeneratorSet { n, ops: Vec::new() }
    }

    /// Generators of a qubit symplectic self-orthogonal code, each phase the
    /// number of `Y` positions.
    pub fn from_symplectic(code: &SymplecticCode) -> Result<GeneratorSet> {
        if code.field().q() != 2 {
            return Err(Error::UnsupportedField(code.field().q()));
        }
        let n = code.n();
        let ops = code
            .generator()
            .iter_rows()
            .map(|r| {
                let ys = (0..n).filter(|&i| r[i] == 1 && r[n + i] == 1).count();
                PauliOperator::from_symplectic(code.field(), r, (ys % 4) as u8)
            })
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(n, ops)
    }

    pub fn from_code(code: &StabilizerCode) -> Result<GeneratorSet> {
        if code.code().field().q() != 2 {
            return Err(Error::UnsupportedField(code.code().field().q()));
        }
        GeneratorSet::new(code.code().n(), code.generators())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn operators(&self) -> &[PauliOperator] {
        &self.ops
    }

    /// Product of the generators selected by the bits of `m` (bit `j` for `g_j`).
    pub fn element(&self, m: usize) -> PauliOperator {
        let f = self.ops.first().map(|o| o.field().clone()).unwrap_or_else(|| Field::gf(2).unwrap());
        let mut acc = PauliOperator::identity(&f, self.n);
        for (j, g) in self.ops.iter().enumerate() {
            if m >> j & 1 == 1 {
                acc = pauli_mul(&acc, g).expect("same shape");
            }
        }
        acc
    }
}

/// `Π_j (I + (-1)^{s_j} g_j) / 2` applied to `v`.
pub fn projector_apply(g: &GeneratorSet, syndrome: &[u8], v: &State) -> Result<State> {
    if syndrome.len() != g.len() {
        return Err(Error::ShapeMismatch(format!("syndrome of length {} for {} generators", syndrome.len(), g.len())));
    }
    if v.n != g.n {
        return Err(Error::ShapeMismatch(format!("state on {} qubits, generators on {}", v.n, g.n)));
    }
    let mut cur = v.clone();
    for (op, &s) in g.ops.iter().zip(syndrome) {
        let gv = apply_pauli(op, &cur)?;
        let sign = if s & 1 == 1 { -0.5 } else { 0.5 };
        cur = cur.scaled(Complex64::new(0.5, 0.0)).add(&gv.scaled(Complex64::new(sign, 0.0)));
    }
    Ok(cur)
}

/// `Σ_{g ∈ G} g|ψ> = Π_j (I + g_j)|ψ>`.
pub fn group_sum(g: &GeneratorSet, v: &State) -> Result<State> {
    let p = projector_apply(g, &vec![0; g.len()], v)?;
    Ok(p.scaled(Complex64::new((1u64 << g.len()) as f64, 0.0)))
}

/// Trace of the dense matrix of `e`.
pub fn trace(e: &PauliOperator) -> Result<Complex64> {
    check_qubit(e)?;
    if e.n() > MAX_QUBITS {
        return Err(Error::TooLarge(format!("{} qubits", e.n())));
    }
    let am = mask(e.a());
    let bm = mask(e.b());
    let ph = i_pow(e.phase());
    let mut acc = Complex64::new(0.0, 0.0);
    for v in 0..1usize << e.n() {
        if v ^ am == v {
            let sign = if (v & bm).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
            acc += ph * sign;
        }
    }
    Ok(acc)
}

/// Syndrome vector for an index into [`eigenspace_dims`].
pub fn syndrome_bits(s: usize, r: usize) -> Vec<u8> {
    (0..r).map(|j| (s >> j & 1) as u8).collect()
}

/// Dimensions of the `2^{|G|}` joint eigenspaces, indexed by syndrome `s`
/// with bit `j` of the index giving `s_j`. Computed as the trace of the
/// projector, `(1/|G|) Σ_{g∈G} χ_s(g) Tr(g)`.
pub fn eigenspace_dims(g: &GeneratorSet) -> Result<Vec<usize>> {
    if g.n > MAX_QUBITS {
        return Err(Error::TooLarge(format!("{} qubits (at most {MAX_QUBITS})", g.n)));
    }
    let r = g.len();
    let size = 1usize << r;
    let traces: Vec<Complex64> = (0..size).map(|m| trace(&g.element(m))).collect::<Result<_>>()?;
    let mut dims = Vec::with_capacity(size);
    for s in 0..size {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, t) in traces.iter().enumerate() {
            let chi = if (m & s).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
            acc += t * chi;
        }
        acc /= size as f64;
        let rounded = acc.re.round();
        if (acc.re - rounded).abs() > TOLERANCE || acc.im.abs() > TOLERANCE || rounded < 0.0 {
            return Err(Error::Internal(format!("projector trace {acc} is not a dimension")));
        }
        dims.push(rounded as usize);
    }
    Ok(dims)
}

/// Orthonormal basis of the eigenspace with the given syndrome, from the
/// projections of `|0...0>, |0...1>, ...` in index order.
pub fn eigenspace_basis(g: &GeneratorSet, syndrome: &[u8]) -> Result<Vec<State>> {
    if g.n > MAX_QUBITS {
        return Err(Error::TooLarge(format!("{} qubits (at most {MAX_QUBITS})", g.n)));
    }
    let target = 1usize << (g.n - g.len());
    let mut basis: Vec<State> = Vec::new();
    for idx in 0..1usize << g.n {
        if basis.len() == target {
            break;
        }
        let mut v = projector_apply(g, syndrome, &State::basis_index(g.n, idx))?;
        for b in &basis {
            let c = b.inner(&v);
            v = v.sub(&b.scaled(c));
        }
        let norm = v.norm();
        if norm > 1e-6 {
            basis.push(v.scaled(Complex64::new(1.0 / norm, 0.0)));
        }
    }
    Ok(basis)
}

#[derive(Clone, Debug, PartialEq)]
pub struct KlFailure {
    pub error: PauliOperator,
    pub i: usize,
    pub j: usize,
    pub value: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum KlOutcome {
    Pass { errors_checked: usize, code_dim: usize },
    Fail(KlFailure),
}

impl KlOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, KlOutcome::Pass { .. })
    }
}

/// Checks `<c_i|E|c_j> = α_E δ_ij` on an orthonormal basis of the syndrome-0
/// space for every `E = X(a)Z(b)` with `w_Q(E) <= δ`. Errors run through
/// `(a | b)` in lexicographic order; the first violation is returned.
pub fn kl_verify(g: &GeneratorSet, delta: usize) -> Result<KlOutcome> {
    let n = g.n;
    if n > MAX_KL_QUBITS {
        return Err(Error::TooLarge(format!("{n} qubits (at most {MAX_KL_QUBITS})")));
    }
    if delta > n {
        return Err(Error::BadRange(format!("delta {delta} exceeds n {n}")));
    }
    let f = Field::gf(2)?;
    let basis = eigenspace_basis(g, &vec![0; g.len()])?;
    let mut checked = 0;
    for t in 0..1usize << (2 * n) {
        let bits: Vec<u8> = (0..2 * n).map(|i| (t >> (2 * n - 1 - i) & 1) as u8).collect();
        let e = PauliOperator::from_symplectic(&f, &bits, 0)?;
        if e.weights().quantum > delta {
            continue;
        }
        checked += 1;
        let images: Vec<State> = basis.iter().map(|c| apply_pauli(&e, c)).collect::<Result<_>>()?;
        let alpha = basis.first().map(|c| c.inner(&images[0]));
        for (i, ci) in basis.iter().enumerate() {
            for (j, ej) in images.iter().enumerate() {
                let value = ci.inner(ej);
                let expected = if i == j { alpha.unwrap() } else { Complex64::new(0.0, 0.0) };
                if (value - expected).norm() > TOLERANCE {
                    return Ok(KlOutcome::Fail(KlFailure { error: e, i, j, value }));
                }
            }
        }
    }
    Ok(KlOutcome::Pass { errors_checked: checked, code_dim: basis.len() })
}
