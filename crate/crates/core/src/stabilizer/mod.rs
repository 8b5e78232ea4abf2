//! Stabilizer codes from classical ingredients: symplectic and additive
//! certification, CSS, Steane enlargement, Construction X, propagation rules,
//! asymmetric CSS and entanglement-assisted codes.

mod certificate;

use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

pub use certificate::{render_human, render_kv};

use crate::code::format::{render, CodeFile};
use crate::code::{
    check_self_orthogonal, dual, hull, is_subcode, min_weight, min_weight_diff, Budget, DistanceResult,
    DistanceStatus, InnerProduct, LinearCode, Linearity, Phi, SymplecticCode, WeightFn,
};
use crate::error::{Error, Result};
use crate::fmatrix::FqMatrix;
use crate::pauli::PauliOperator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Purity {
    Pure,
    Impure,
    Unknown,
}

impl Purity {
    pub fn as_str(self) -> &'static str {
        match self {
            Purity::Pure => "true",
            Purity::Impure => "false",
            Purity::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distance {
    Symmetric(DistanceResult),
    Asymmetric { z: DistanceResult, x: DistanceResult },
}

impl Distance {
    /// The ordinary distance: `d`, or `min(d_z, d_x)`.
    pub fn min(&self) -> usize {
        match self {
            Distance::Symmetric(d) => d.value,
            Distance::Asymmetric { z, x } => z.value.min(x.value),
        }
    }

    pub fn is_exact(&self) -> bool {
        match self {
            Distance::Symmetric(d) => d.is_exact(),
            Distance::Asymmetric { z, x } => z.is_exact() && x.is_exact(),
        }
    }

    pub fn status(&self) -> DistanceStatus {
        if self.is_exact() {
            DistanceStatus::Exact
        } else {
            DistanceStatus::LowerBoundOnly
        }
    }
}

/// Certified parameters `[[n, k, d]]_q`, `[[n, k, d_z, d_x]]_q` or, with
/// ebits, `[[n, k, d; c]]_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub distance: Distance,
    pub pure: Purity,
    pub ebits: Option<usize>,
    /// Construction steps, oldest first.
    pub provenance: Vec<String>,
    pub notes: Vec<String>,
    /// Operators attaining the stated distances, labelled `d`, `d_z`, `d_x`.
    pub witnesses: Vec<(String, PauliOperator)>,
}

impl CodeParams {
    /// Parameters supplied directly, e.g. from the command line.
    pub fn given(q: usize, n: usize, k: usize, d: usize, pure: Purity) -> Result<CodeParams> {
        CodeParams {
            q,
            n,
            k,
            distance: Distance::Symmetric(DistanceResult::exact(d, None)),
            pure,
            ebits: None,
            provenance: vec!["given".into()],
            notes: Vec::new(),
            witnesses: Vec::new(),
        }
        .validated()
    }

    pub fn given_asymmetric(q: usize, n: usize, k: usize, dz: usize, dx: usize, pure: Purity) -> Result<CodeParams> {
        CodeParams {
            q,
            n,
            k,
            distance: Distance::Asymmetric { z: DistanceResult::exact(dz, None), x: DistanceResult::exact(dx, None) },
            pure,
            ebits: None,
            provenance: vec!["given".into()],
            notes: Vec::new(),
            witnesses: Vec::new(),
        }
        .validated()
    }

    /// Checks `k <= n` and, for exact distances with `k > 0`, the quantum
    /// Singleton bound (with its entanglement-assisted form when ebits are used).
    pub fn validated(self) -> Result<CodeParams> {
        if self.k > self.n {
            return Err(Error::BadRange(format!("k = {} exceeds n = {}", self.k, self.n)));
        }
        if self.distance.is_exact() && self.k > 0 {
            let d = self.distance.min();
            let c = self.ebits.unwrap_or(0);
            let applies = c == 0 || 2 * d <= self.n + 2;
            if applies && self.k + 2 * d > self.n + c + 2 {
                return Err(Error::Internal(format!(
                    "certified [[{},{},{}]] violates the quantum Singleton bound",
                    self.n, self.k, d
                )));
            }
        }
        Ok(self)
    }

    pub fn symmetric_distance(&self) -> Option<&DistanceResult> {
        match &self.distance {
            Distance::Symmetric(d) => Some(d),
            Distance::Asymmetric { .. } => None,
        }
    }

    /// `[[n,k,d]]_q` style label; bound-only distances are prefixed `>=`.
    pub fn label(&self) -> String {
        let show = |d: &DistanceResult| {
            if d.is_exact() {
                d.value.to_string()
            } else {
                format!(">={}", d.value)
            }
        };
        let ds = match &self.distance {
            Distance::Symmetric(d) => show(d),
            Distance::Asymmetric { z, x } => format!("{},{}", show(z), show(x)),
        };
        match self.ebits {
            Some(c) => format!("[[{},{},{};{}]]_{}", self.n, self.k, ds, c, self.q),
            None => format!("[[{},{},{}]]_{}", self.n, self.k, ds, self.q),
        }
    }

    /// Same code parameters, ignoring provenance, notes and witnesses.
    pub fn same_parameters(&self, other: &CodeParams) -> bool {
        let strip = |p: &CodeParams| {
            let dist = match &p.distance {
                Distance::Symmetric(d) => vec![(d.value, d.status)],
                Distance::Asymmetric { z, x } => vec![(z.value, z.status), (x.value, x.status)],
            };
            (p.q, p.n, p.k, dist, p.pure, p.ebits)
        };
        strip(self) == strip(other)
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} pure={} d.status={}", self.label(), self.pure.as_str(), self.distance.status().as_str())
    }
}

/// A certified stabilizer code with its symplectic dual and generator phases.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    code: SymplecticCode,
    dual: SymplecticCode,
    params: CodeParams,
    phases: Vec<u8>,
}

impl StabilizerCode {
    pub fn code(&self) -> &SymplecticCode {
        &self.code
    }

    pub fn dual(&self) -> &SymplecticCode {
        &self.dual
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn into_params(self) -> CodeParams {
        self.params
    }

    pub fn phases(&self) -> &[u8] {
        &self.phases
    }

    /// Generators `i^λ_j X(a_j) Z(b_j)`; for qubits `λ_j` is the number of
    /// `Y` positions, so each generator is a plain tensor product of Pauli
    /// matrices and is Hermitian.
    pub fn generators(&self) -> Vec<PauliOperator> {
        let f = self.code.field();
        self.code
            .generator()
            .iter_rows()
            .zip(&self.phases)
            .map(|(r, &ph)| PauliOperator::from_symplectic(f, r, ph).expect("valid row"))
            .collect()
    }
}

/// First 16 hex digits of the SHA-256 of the canonical file rendering.
pub fn digest(file: &CodeFile) -> String {
    let h = Sha256::digest(render(file).as_bytes());
    h.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn tag(file: CodeFile) -> String {
    format!("{}:{}", file.kind(), digest(&file))
}

fn hermitian_phases(code: &SymplecticCode) -> Vec<u8> {
    let n = code.n();
    code.generator()
        .iter_rows()
        .map(|r| {
            if code.field().q() == 2 {
                ((0..n).filter(|&i| r[i] != 0 && r[n + i] != 0).count() % 4) as u8
            } else {
                0
            }
        })
        .collect()
}

fn purity_of(dual_min: &DistanceResult, d: &DistanceResult) -> Purity {
    if !dual_min.is_exact() || !d.is_exact() {
        Purity::Unknown
    } else if dual_min.value == d.value {
        Purity::Pure
    } else {
        Purity::Impure
    }
}

fn witness_op(code: &SymplecticCode, d: &DistanceResult) -> Option<PauliOperator> {
    d.witness.as_ref().map(|w| PauliOperator::from_symplectic(code.field(), w, 0).expect("valid witness"))
}

const K0_NOTE: &str = "k = 0: d is the minimum quantum weight of C^⊥s \\ {0}";

/// `[[n, n - dim C, d]]_q` from a symplectic self-orthogonal `C`, with
/// `d = w_Q(C^⊥s \ C)`.
pub fn certify_stabilizer(c: &SymplecticCode, budget: Budget) -> Result<StabilizerCode> {
    c.check_self_orthogonal()?;
    let dual = c.dual();
    let n = c.n();
    let k = n - c.dim();
    let mut notes = Vec::new();
    let (d, pure) = if k == 0 {
        notes.push(K0_NOTE.to_string());
        let d = dual.min_weight(budget)?;
        let pure = if d.is_exact() { Purity::Pure } else { Purity::Unknown };
        (d, pure)
    } else {
        let d = min_weight_diff(dual.code(), c.code(), WeightFn::Quantum, budget)?;
        let dual_min = dual.min_weight(budget)?;
        let pure = purity_of(&dual_min, &d);
        (d, pure)
    };
    let witnesses = witness_op(c, &d).map(|w| vec![("d".to_string(), w)]).unwrap_or_default();
    let params = CodeParams {
        q: c.field().q(),
        n,
        k,
        distance: Distance::Symmetric(d),
        pure,
        ebits: None,
        provenance: vec![format!("certify_stabilizer({})", tag(CodeFile::Symplectic(c.clone())))],
        notes,
        witnesses,
    }
    .validated()?;
    let phases = hermitian_phases(c);
    Ok(StabilizerCode { code: c.clone(), dual, params, phases })
}

/// Certifies a trace-alternating self-orthogonal additive code over `GF(q²)`
/// (Hermitian self-orthogonality is accepted for linear codes) through Φ⁻¹.
pub fn certify_additive(c: &LinearCode, budget: Budget) -> Result<StabilizerCode> {
    let f = c.field();
    f.square_root_field().ok_or(Error::WrongFieldOrder(f.q()))?;
    match c.linearity() {
        Linearity::Linear => check_self_orthogonal(c, InnerProduct::Hermitian)?,
        Linearity::Additive => check_self_orthogonal(c, InnerProduct::TraceAlternating)?,
    }
    let sym = SymplecticCode::from_additive(c)?;
    let mut code = certify_stabilizer(&sym, budget)?;
    code.params.provenance.insert(0, format!("phi_inverse({})", tag(CodeFile::from_code(c.clone()))));
    Ok(code)
}

/// Minimum of two distances; exact when the smaller one is exact and no
/// larger than the other's bound.
fn min_distance(a: &DistanceResult, b: &DistanceResult) -> DistanceResult {
    if (a.value, !a.is_exact()) <= (b.value, !b.is_exact()) {
        a.clone()
    } else {
        b.clone()
    }
}

/// Hamming distance of `a \ b`, or of `a \ {0}` when `a = b`.
fn coset_distance(a: &LinearCode, b: &LinearCode, budget: Budget) -> Result<(DistanceResult, bool)> {
    match min_weight_diff(a, b, WeightFn::Hamming, budget) {
        Err(Error::EmptyDifference) => Ok((min_weight(a, WeightFn::Hamming, budget)?, true)),
        other => Ok((other?, false)),
    }
}

fn same_space(a: &LinearCode, b: &LinearCode) -> Result<()> {
    if a.field() != b.field() || a.n() != b.n() {
        return Err(Error::DimensionMismatch(format!(
            "length {} over {} vs length {} over {}",
            a.n(),
            a.field(),
            b.n(),
            b.field()
        )));
    }
    Ok(())
}

fn block_code(h1: &FqMatrix, h2: &FqMatrix) -> Result<SymplecticCode> {
    let f = h1.field();
    let n = h1.cols();
    let mut rows = Vec::new();
    for r in h1.iter_rows() {
        let mut v = r.to_vec();
        v.extend(std::iter::repeat_n(0, n));
        rows.push(v);
    }
    for r in h2.iter_rows() {
        let mut v = vec![0; n];
        v.extend_from_slice(r);
        rows.push(v);
    }
    SymplecticCode::new(f, n, &rows)
}

/// CSS code from `C1^⊥ ⊆ C2`, with stabilizer generator `[H1 0; 0 H2]`.
pub fn css(c1: &LinearCode, c2: &LinearCode, budget: Budget) -> Result<StabilizerCode> {
    same_space(c1, c2)?;
    if c1.linearity() != Linearity::Linear || c2.linearity() != Linearity::Linear {
        return Err(Error::BadInput("CSS ingredients must be linear".into()));
    }
    let d1 = dual(c1, InnerProduct::Euclidean)?;
    let d2 = dual(c2, InnerProduct::Euclidean)?;
    if !is_subcode(&d1, c2)? {
        return Err(Error::NotNested("C1^⊥ is not contained in C2".into()));
    }
    let n = c1.n();
    let k = c1.dim() + c2.dim() - n;
    let sym = block_code(d1.generator(), d2.generator())?;
    sym.check_self_orthogonal()?;

    let (dx, k0) = coset_distance(c2, &d1, budget)?;
    let (dz, _) = coset_distance(c1, &d2, budget)?;
    let d = min_distance(&dx, &dz);
    let mut notes = Vec::new();
    if k0 {
        notes.push(K0_NOTE.to_string());
    }

    let classical_min = min_distance(&min_weight(c1, WeightFn::Hamming, budget)?, &min_weight(c2, WeightFn::Hamming, budget)?);
    let pure = purity_of(&classical_min, &d);

    let f = c1.field();
    let witness = if d == dx {
        dx.witness.as_ref().map(|a| PauliOperator::new(f, a.clone(), vec![0; n], 0))
    } else {
        dz.witness.as_ref().map(|b| PauliOperator::new(f, vec![0; n], b.clone(), 0))
    }
    .transpose()?;
    let params = CodeParams {
        q: f.q(),
        n,
        k,
        distance: Distance::Symmetric(d),
        pure,
        ebits: None,
        provenance: vec![format!(
            "css({}, {})",
            tag(CodeFile::Linear(c1.clone())),
            tag(CodeFile::Linear(c2.clone()))
        )],
        notes,
        witnesses: witness.map(|w| vec![("d".to_string(), w)]).unwrap_or_default(),
    }
    .validated()?;
    let dual_sym = sym.dual();
    let phases = hermitian_phases(&sym);
    Ok(StabilizerCode { code: sym, dual: dual_sym, params, phases })
}

/// Steane enlargement of a Euclidean dual-containing `C` by `C ⊂ C'`:
/// `[[n, k + k' - n, >= min(d, ceil((q + 1) d' / q))]]_q`.
pub fn steane_enlarge(c: &LinearCode, c_prime: &LinearCode, budget: Budget) -> Result<CodeParams> {
    same_space(c, c_prime)?;
    let cd = dual(c, InnerProduct::Euclidean)?;
    if !is_subcode(&cd, c)? {
        return Err(Error::NotDualContaining);
    }
    if !is_subcode(c, c_prime)? || c_prime.dim() <= c.dim() {
        return Err(Error::NotEnlargement);
    }
    let (k, kp) = (c.dim(), c_prime.dim());
    if kp <= k + 1 {
        return Err(Error::EnlargementTooSmall { k, k_prime: kp });
    }
    let q = c.field().q();
    let d = min_weight(c, WeightFn::Hamming, budget)?;
    let dp = min_weight(c_prime, WeightFn::Hamming, budget)?;
    let enlarged = ((q + 1) * dp.value).div_ceil(q);
    let value = d.value.min(enlarged);
    let n = c.n();
    let mut notes = vec![format!("d(C) = {} ({}), d(C') = {} ({})", d.value, d.status.as_str(), dp.value, dp.status.as_str())];
    notes.push("distance is the guaranteed lower bound of the enlargement theorem".into());
    CodeParams {
        q,
        n,
        k: k + kp - n,
        distance: Distance::Symmetric(DistanceResult::lower_bound(value)),
        pure: if q == 2 { Purity::Pure } else { Purity::Unknown },
        ebits: None,
        provenance: vec![format!(
            "steane_enlarge({}, {})",
            tag(CodeFile::Linear(c.clone())),
            tag(CodeFile::Linear(c_prime.clone()))
        )],
        notes,
        witnesses: Vec::new(),
    }
    .validated()
}

/// Construction X for an `[n, k]_{q²}` linear code: with
/// `e = k - dim(C ∩ C^⊥H)`, an `[[n + e, n - 2k + e, d]]_q` code with
/// `d >= min(d(C^⊥H), d(C + C^⊥H) + 1)`.
pub fn construction_x(c: &LinearCode, budget: Budget) -> Result<CodeParams> {
    let f = c.field();
    let base = f.square_root_field().ok_or(Error::WrongFieldOrder(f.q()))?;
    if c.linearity() != Linearity::Linear {
        return Err(Error::BadInput("Construction X needs a linear code".into()));
    }
    let h = hull(c, InnerProduct::Hermitian)?;
    let e = c.dim() - h.dim();
    let n = c.n();
    let k = c.dim();
    let source = tag(CodeFile::Linear(c.clone()));
    if e == 0 {
        let mut p = certify_additive(c, budget)?.into_params();
        p.provenance.push(format!("construction_x({source}, e=0)"));
        return Ok(p);
    }
    let hd = dual(c, InnerProduct::Hermitian)?;
    let sum = c.sum(&hd)?;
    let mut bound = usize::MAX;
    let mut notes = vec![format!("e = {e}")];
    if !hd.is_zero() {
        let d1 = min_weight(&hd, WeightFn::Hamming, budget)?;
        notes.push(format!("d(C^⊥H) = {} ({})", d1.value, d1.status.as_str()));
        bound = bound.min(d1.value);
    }
    let d2 = min_weight(&sum, WeightFn::Hamming, budget)?;
    notes.push(format!("d(C + C^⊥H) = {} ({})", d2.value, d2.status.as_str()));
    bound = bound.min(d2.value + 1);
    CodeParams {
        q: base.q(),
        n: n + e,
        k: n + e - 2 * k,
        distance: Distance::Symmetric(DistanceResult::lower_bound(bound)),
        pure: Purity::Unknown,
        ebits: None,
        provenance: vec![format!("construction_x({source}, e={e})")],
        notes,
        witnesses: Vec::new(),
    }
    .validated()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Subcode,
    Lengthen,
    Puncture,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Subcode => "subcode",
            Rule::Lengthen => "lengthen",
            Rule::Puncture => "puncture",
        }
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rule> {
        match s {
            "subcode" => Ok(Rule::Subcode),
            "lengthen" => Ok(Rule::Lengthen),
            "puncture" => Ok(Rule::Puncture),
            _ => Err(Error::BadSyntax(format!("unknown rule '{s}'"))),
        }
    }
}

/// `[[n, k-1, >=d]]`, `[[n+1, k, >=d]]` or `[[n-1, k, >=d-1]]`.
pub fn propagate(p: &CodeParams, rule: Rule) -> Result<CodeParams> {
    let Distance::Symmetric(d) = &p.distance else {
        return Err(Error::BadRule("propagation applies to symmetric parameters".into()));
    };
    if p.ebits.is_some_and(|c| c > 0) {
        return Err(Error::BadRule("propagation does not apply to entanglement-assisted codes".into()));
    }
    let (n, k, dv) = match rule {
        Rule::Subcode => {
            if p.k == 0 {
                return Err(Error::BadRule("subcode needs k >= 1".into()));
            }
            (p.n, p.k - 1, d.value)
        }
        Rule::Lengthen => (p.n + 1, p.k, d.value),
        Rule::Puncture => {
            if p.n < 2 || d.value < 2 {
                return Err(Error::BadRule("puncture needs n >= 2 and d >= 2".into()));
            }
            if p.k > p.n - 1 {
                return Err(Error::BadRule("puncture needs k <= n - 1".into()));
            }
            (p.n - 1, p.k, d.value - 1)
        }
    };
    let mut provenance = p.provenance.clone();
    provenance.push(rule.name().to_string());
    CodeParams {
        q: p.q,
        n,
        k,
        distance: Distance::Symmetric(DistanceResult::lower_bound(dv)),
        pure: Purity::Unknown,
        ebits: p.ebits,
        provenance,
        notes: Vec::new(),
        witnesses: Vec::new(),
    }
    .validated()
}

/// Asymmetric CSS from `C1^⊥* ⊆ C2` under a Euclidean, Hermitian or trace
/// inner product: `[[n, k1 + k2 - n, d_z, d_x]]_q` with `d_z` the larger and
/// `d_x` the smaller of `w_H(C2 \ C1^⊥*)` and `w_H(C1 \ C2^⊥*)`.
pub fn css_aqc(c1: &LinearCode, c2: &LinearCode, ip: InnerProduct, budget: Budget) -> Result<CodeParams> {
    if matches!(ip, InnerProduct::TraceAlternating | InnerProduct::Symplectic) {
        return Err(Error::BadInput(format!("{ip} is not one of the asymmetric CSS inner products")));
    }
    same_space(c1, c2)?;
    let d1 = dual(c1, ip)?;
    let d2 = dual(c2, ip)?;
    if !is_subcode(&d1, c2)? {
        return Err(Error::NotNested(format!("C1^⊥ ({ip}) is not contained in C2")));
    }
    let f = c1.field();
    let m = f.m() as usize;
    let n = c1.n();
    let total = c1.log_p_size() + c2.log_p_size();
    if total % m != 0 || total / m < n {
        return Err(Error::BadInput("k1 + k2 - n is not a whole number of GF(q) symbols".into()));
    }
    let k = total / m - n;
    let (a, k0) = coset_distance(c2, &d1, budget)?;
    let (b, _) = coset_distance(c1, &d2, budget)?;
    let (z, x) = if (a.value, !a.is_exact()) >= (b.value, !b.is_exact()) { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };

    let m1 = min_weight(c1, WeightFn::Hamming, budget)?;
    let m2 = min_weight(c2, WeightFn::Hamming, budget)?;
    let all_exact = [&a, &b, &m1, &m2].iter().all(|d| d.is_exact());
    let pure = if !all_exact {
        Purity::Unknown
    } else if a.value == m2.value && b.value == m1.value {
        Purity::Pure
    } else {
        Purity::Impure
    };
    let mut notes = vec![format!("inner product: {ip}")];
    if k0 {
        notes.push(K0_NOTE.to_string());
    }
    CodeParams {
        q: f.q(),
        n,
        k,
        distance: Distance::Asymmetric { z, x },
        pure,
        ebits: None,
        provenance: vec![format!(
            "css_aqc({}, {}, {ip})",
            tag(CodeFile::from_code(c1.clone())),
            tag(CodeFile::from_code(c2.clone()))
        )],
        notes,
        witnesses: Vec::new(),
    }
    .validated()
}

/// Entanglement-assisted code stabilized by `C^⊥H` for a linear
/// `[n, k, d]_{q²}` code `C`: `[[n, 2k - n + c, d; c]]_q` with
/// `c = rank(H H†)` for a parity-check matrix `H` of `C`.
pub fn ea_ebits(c: &LinearCode, budget: Budget) -> Result<CodeParams> {
    let f = c.field();
    let base = f.square_root_field().ok_or(Error::WrongFieldOrder(f.q()))?;
    if c.linearity() != Linearity::Linear {
        return Err(Error::BadInput("entanglement-assisted construction needs a linear code".into()));
    }
    let h = dual(c, InnerProduct::Euclidean)?;
    let hg = h.generator();
    let hdag = hg.map(|x| f.conj(x)).transpose();
    let ebits = hg.mul(&hdag)?.rank();
    let n = c.n();
    let k2 = 2 * c.dim() + ebits;
    if k2 < n {
        return Err(Error::Internal("2k - n + c is negative".into()));
    }
    let d = min_weight(c, WeightFn::Hamming, budget)?;
    let phi = Phi::new(f)?;
    let witness = d
        .witness
        .as_ref()
        .map(|w| PauliOperator::from_symplectic(&base, &phi.inverse(w), 0))
        .transpose()?;
    CodeParams {
        q: base.q(),
        n,
        k: k2 - n,
        distance: Distance::Symmetric(d),
        pure: Purity::Unknown,
        ebits: Some(ebits),
        provenance: vec![format!("ea_ebits({})", tag(CodeFile::Linear(c.clone())))],
        notes: vec![format!("c = rank(H H†) = {ebits}")],
        witnesses: witness.map(|w| vec![("d".to_string(), w)]).unwrap_or_default(),
    }
    .validated()
}
