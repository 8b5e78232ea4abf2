//! Classical linear and additive codes: canonical generators, duals under
//! every inner product in use, hulls, the Φ isometry and weight searches.

pub mod distance;
pub mod format;
mod phi;

use std::fmt;
use std::str::FromStr;

pub use distance::{Budget, DistanceResult, DistanceStatus, WeightFn};
pub use phi::Phi;

use crate::error::{Error, Result};
use crate::fmatrix::FqMatrix;
use crate::gf::Field;
use distance::Search;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Linearity {
    /// Closed under multiplication by the field of the entries.
    Linear,
    /// Over `GF(q²)`, closed only under `GF(q)` scalars.
    Additive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InnerProduct {
    Euclidean,
    Hermitian,
    TraceEuclidean,
    TraceHermitian,
    TraceAlternating,
    Symplectic,
}

impl InnerProduct {
    pub const ALL: [InnerProduct; 6] = [
        InnerProduct::Euclidean,
        InnerProduct::Hermitian,
        InnerProduct::TraceEuclidean,
        InnerProduct::TraceHermitian,
        InnerProduct::TraceAlternating,
        InnerProduct::Symplectic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InnerProduct::Euclidean => "euclidean",
            InnerProduct::Hermitian => "hermitian",
            InnerProduct::TraceEuclidean => "trace_euclidean",
            InnerProduct::TraceHermitian => "trace_hermitian",
            InnerProduct::TraceAlternating => "trace_alternating",
            InnerProduct::Symplectic => "symplectic",
        }
    }
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InnerProduct {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InnerProduct::ALL
            .into_iter()
            .find(|ip| ip.name() == s)
            .ok_or_else(|| Error::BadSyntax(format!("unknown inner product '{s}'")))
    }
}

/// A code of length `n` held by its canonical generator matrix.
///
/// Linear codes keep their reduced row echelon form. Additive codes over
/// `GF(q²)` are canonicalised through Φ: the rows are the images of the
/// reduced `GF(q)` generator of the preimage in `GF(q)^{2n}`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    linearity: Linearity,
    gen: FqMatrix,
}

impl LinearCode {
    /// The linear span of `rows`.
    pub fn new(field: &Field, n: usize, rows: &[Vec<u8>]) -> Result<LinearCode> {
        Self::from_matrix(FqMatrix::from_rows(field, n, rows)?)
    }

    pub fn from_matrix(m: FqMatrix) -> Result<LinearCode> {
        let r = m.rref();
        let mut gen = r.matrix;
        gen.truncate_rows(r.rank);
        Ok(LinearCode { field: m.field().clone(), n: m.cols(), linearity: Linearity::Linear, gen })
    }

    /// The `GF(q)`-span of `rows` over the square-order field `field`.
    pub fn additive(field: &Field, n: usize, rows: &[Vec<u8>]) -> Result<LinearCode> {
        let phi = Phi::new(field)?;
        let m = FqMatrix::from_rows(field, n, rows)?;
        let pre: Vec<Vec<u8>> = m.iter_rows().map(|r| phi.inverse(r)).collect();
        Self::from_preimage(&phi, &FqMatrix::from_rows(phi.base(), 2 * n, &pre)?)
    }

    /// The additive code Φ(span(pre)), `pre` over `GF(q)` with `2n` columns.
    pub fn from_preimage(phi: &Phi, pre: &FqMatrix) -> Result<LinearCode> {
        if pre.field() != phi.base() {
            return Err(Error::DimensionMismatch(format!("preimage over {} for {}", pre.field(), phi.ext())));
        }
        let n = pre.cols() / 2;
        let r = pre.rref();
        let mut gen = FqMatrix::zeros(phi.ext(), 0, n);
        for i in 0..r.rank {
            gen.push_row(&phi.forward(r.matrix.row(i))?);
        }
        Ok(LinearCode { field: phi.ext().clone(), n, linearity: Linearity::Additive, gen })
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode { field: field.clone(), n, linearity: Linearity::Linear, gen: FqMatrix::zeros(field, 0, n) }
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        LinearCode { field: field.clone(), n, linearity: Linearity::Linear, gen: FqMatrix::identity(field, n) }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn linearity(&self) -> Linearity {
        self.linearity
    }

    pub fn generator(&self) -> &FqMatrix {
        &self.gen
    }

    /// Dimension over the field the code is linear over.
    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    /// Field of the scalars the code is closed under.
    pub fn scalar_field(&self) -> Field {
        match self.linearity {
            Linearity::Linear => self.field.clone(),
            Linearity::Additive => self.field.square_root_field().expect("additive codes live over GF(q²)"),
        }
    }

    /// `log_p |C|` for `p` the characteristic.
    pub fn log_p_size(&self) -> usize {
        self.dim() * self.scalar_field().m() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.gen.rows() == 0
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        if v.len() != self.n {
            return false;
        }
        match self.linearity {
            Linearity::Linear => self.gen.spans(v),
            Linearity::Additive => {
                let phi = Phi::new(&self.field).unwrap();
                self.preimage().unwrap().spans(&phi.inverse(v))
            }
        }
    }

    /// Reduced `GF(q)` generator of Φ⁻¹ of the code as a `GF(q)`-space; for
    /// linear codes over `GF(q²)` this is the span of the rows and γ·rows.
    pub fn preimage(&self) -> Result<FqMatrix> {
        let phi = Phi::new(&self.field)?;
        let mut rows: Vec<Vec<u8>> = self.gen.iter_rows().map(|r| phi.inverse(r)).collect();
        if self.linearity == Linearity::Linear {
            for r in self.gen.iter_rows() {
                let scaled: Vec<u8> = r.iter().map(|&x| self.field.mul(phi.gamma(), x)).collect();
                rows.push(phi.inverse(&scaled));
            }
        }
        let m = FqMatrix::from_rows(phi.base(), 2 * self.n, &rows)?;
        let r = m.rref();
        let mut out = r.matrix;
        out.truncate_rows(r.rank);
        Ok(out)
    }

    /// The same set of words as an additive code.
    pub fn to_additive(&self) -> Result<LinearCode> {
        match self.linearity {
            Linearity::Additive => Ok(self.clone()),
            Linearity::Linear => Self::from_preimage(&Phi::new(&self.field)?, &self.preimage()?),
        }
    }

    /// The same set as a linear code, if it is closed under `GF(q²)` scalars.
    pub fn to_linear(&self) -> Option<LinearCode> {
        match self.linearity {
            Linearity::Linear => Some(self.clone()),
            Linearity::Additive => {
                let span = LinearCode::from_matrix(self.gen.clone()).ok()?;
                (2 * span.dim() == self.dim()).then_some(span)
            }
        }
    }

    fn check_same_space(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field || self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "length {} over {} vs length {} over {}",
                self.n, self.field, other.n, other.field
            )));
        }
        Ok(())
    }

    /// Sum of two codes over the same space.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_same_space(other)?;
        if self.linearity == Linearity::Linear && other.linearity == Linearity::Linear {
            return Self::from_matrix(self.gen.vstack(&other.gen)?);
        }
        let phi = Phi::new(&self.field)?;
        Self::from_preimage(&phi, &self.preimage()?.vstack(&other.preimage()?)?)
    }

    /// Intersection of two codes over the same space.
    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_same_space(other)?;
        if self.linearity == Linearity::Linear && other.linearity == Linearity::Linear {
            return Self::from_matrix(self.gen.intersect(&other.gen)?);
        }
        let phi = Phi::new(&self.field)?;
        let both = Self::from_preimage(&phi, &self.preimage()?.intersect(&other.preimage()?)?)?;
        Ok(both.to_linear().filter(|_| self.linearity == Linearity::Linear).unwrap_or(both))
    }

    /// Value of the inner product on two words (base-field valued for the
    /// trace forms, entry-field valued otherwise).
    pub fn pairing(&self, ip: InnerProduct, u: &[u8], v: &[u8]) -> Result<u8> {
        pairing(&self.field, ip, u, v)
    }

    pub fn min_weight(&self, wfn: WeightFn, budget: Budget) -> Result<DistanceResult> {
        min_weight(self, wfn, budget)
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} code n={} dim={} over {}: {:?}", self.linearity, self.n, self.dim(), self.field, self.gen)
    }
}

/// Value of `ip` on `u`, `v`. Trace forms and the alternating form return
/// elements of `GF(q)` for entries in `GF(q²)`; the symplectic form reads
/// `u = (a | b)`, `v = (a' | b')` and returns `b·a' - b'·a`.
pub fn pairing(field: &Field, ip: InnerProduct, u: &[u8], v: &[u8]) -> Result<u8> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", u.len(), v.len())));
    }
    let f = field;
    let hermitian = |u: &[u8], v: &[u8]| u.iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, f.conj(y))));
    let square = || f.square_root_field().ok_or(Error::WrongFieldOrder(f.q()));
    Ok(match ip {
        InnerProduct::Euclidean => f.dot(u, v),
        InnerProduct::Hermitian => {
            square()?;
            hermitian(u, v)
        }
        InnerProduct::TraceEuclidean => f.trace(f.dot(u, v), &square()?)?,
        InnerProduct::TraceHermitian => f.trace(hermitian(u, v), &square()?)?,
        InnerProduct::TraceAlternating => Phi::new(f)?.alt_form(u, v),
        InnerProduct::Symplectic => {
            if u.len() % 2 != 0 {
                return Err(Error::OddLength(u.len()));
            }
            let n = u.len() / 2;
            f.sub(f.dot(&u[n..], &v[..n]), f.dot(&v[n..], &u[..n]))
        }
    })
}

fn conj_matrix(m: &FqMatrix) -> FqMatrix {
    let f = m.field().clone();
    m.map(|x| f.conj(x))
}

/// Symplectic Gram matrix `J` with `u J v^T = b·a' - b'·a`.
fn symplectic_gram(field: &Field, n: usize) -> FqMatrix {
    let mut j = FqMatrix::zeros(field, 2 * n, 2 * n);
    for i in 0..n {
        j.set(i, n + i, field.neg(1));
        j.set(n + i, i, 1);
    }
    j
}

/// Gram matrix over `GF(q)` of a trace form pulled back through Φ.
fn pulled_back_gram(phi: &Phi, n: usize, form: impl Fn(u8, u8) -> Result<u8>) -> Result<FqMatrix> {
    let basis = [1u8, phi.gamma()];
    let mut k = [[0u8; 2]; 2];
    for s in 0..2 {
        for t in 0..2 {
            k[s][t] = form(basis[s], basis[t])?;
        }
    }
    let mut m = FqMatrix::zeros(phi.base(), 2 * n, 2 * n);
    for i in 0..n {
        for s in 0..2 {
            for t in 0..2 {
                m.set(s * n + i, t * n + i, k[s][t]);
            }
        }
    }
    Ok(m)
}

/// Dual of `c` under `ip`.
///
/// Euclidean and Hermitian duals of additive codes are taken of their linear
/// span (the constraint is the same). Trace-form duals are computed in the
/// Φ-preimage and come back linear whenever the result is closed under
/// `GF(q²)` scalars, which is always the case for linear input.
pub fn dual(c: &LinearCode, ip: InnerProduct) -> Result<LinearCode> {
    let f = c.field().clone();
    let n = c.n();
    match ip {
        InnerProduct::Euclidean => {
            let g = linear_span(c)?;
            LinearCode::from_matrix(g.kernel())
        }
        InnerProduct::Hermitian => {
            f.square_root_field().ok_or(Error::WrongFieldOrder(f.q()))?;
            let g = linear_span(c)?;
            LinearCode::from_matrix(conj_matrix(&g).kernel())
        }
        InnerProduct::Symplectic => {
            if c.linearity() != Linearity::Linear {
                return Err(Error::BadInput("symplectic duals are taken of GF(q)-linear codes".into()));
            }
            if n % 2 != 0 {
                return Err(Error::OddLength(n));
            }
            let gj = c.generator().mul(&symplectic_gram(&f, n / 2))?;
            LinearCode::from_matrix(gj.kernel())
        }
        InnerProduct::TraceEuclidean | InnerProduct::TraceHermitian | InnerProduct::TraceAlternating => {
            let phi = Phi::new(&f)?;
            let gram = pulled_back_gram(&phi, n, |x, y| pairing(&f, ip, &[x], &[y]))?;
            let pre = c.preimage()?;
            let constraints = pre.mul(&gram)?;
            let d = LinearCode::from_preimage(&phi, &constraints.kernel())?;
            Ok(d.to_linear().unwrap_or(d))
        }
    }
}

fn linear_span(c: &LinearCode) -> Result<FqMatrix> {
    Ok(match c.linearity() {
        Linearity::Linear => c.generator().clone(),
        Linearity::Additive => LinearCode::from_matrix(c.generator().clone())?.gen,
    })
}

/// `C ∩ C^⊥` under `ip`.
pub fn hull(c: &LinearCode, ip: InnerProduct) -> Result<LinearCode> {
    c.intersect(&dual(c, ip)?)
}

/// Whether `b ⊆ a` as sets of words.
pub fn is_subcode(b: &LinearCode, a: &LinearCode) -> Result<bool> {
    a.check_same_space(b)?;
    if a.linearity() == Linearity::Linear {
        return Ok(b.generator().iter_rows().all(|r| a.generator().spans(r)));
    }
    let pa = a.preimage()?;
    Ok(b.preimage()?.iter_rows().all(|r| pa.spans(r)))
}

/// Whether every pair of generators pairs to zero under `ip`; on failure
/// reports the first offending pair.
pub fn check_self_orthogonal(c: &LinearCode, ip: InnerProduct) -> Result<()> {
    let g = c.generator();
    for i in 0..g.rows() {
        for j in i..g.rows() {
            let v = pairing(c.field(), ip, g.row(i), g.row(j))?;
            if v != 0 {
                return Err(Error::NotSelfOrthogonal { i, j, value: v });
            }
        }
    }
    // Sesquilinear forms are not symmetric; for linear codes the pairs
    // (r_i, γ r_j) also need checking under trace forms.
    if c.linearity() == Linearity::Linear
        && matches!(ip, InnerProduct::TraceEuclidean | InnerProduct::TraceHermitian | InnerProduct::TraceAlternating)
    {
        let f = c.field();
        let gamma = f.generator();
        for i in 0..g.rows() {
            for j in 0..g.rows() {
                let scaled: Vec<u8> = g.row(j).iter().map(|&x| f.mul(gamma, x)).collect();
                let v = pairing(f, ip, g.row(i), &scaled)?;
                if v != 0 {
                    return Err(Error::NotSelfOrthogonal { i, j, value: v });
                }
            }
        }
    }
    Ok(())
}

/// Minimum weight over the nonzero words of `c`.
///
/// Quantum weight reads the columns as `(a | b)`. Additive codes are searched
/// through their Φ-preimage, so Hamming weight there is the quantum weight of
/// the preimage; the witness is mapped back.
pub fn min_weight(c: &LinearCode, wfn: WeightFn, budget: Budget) -> Result<DistanceResult> {
    if c.is_zero() {
        return Err(Error::ZeroCode);
    }
    let (search, phi) = search_for(c, wfn, None)?;
    map_witness(search.run(budget)?, phi.as_ref())
}

/// Minimum weight over `a \ b` for `b ⊆ a`.
pub fn min_weight_diff(a: &LinearCode, b: &LinearCode, wfn: WeightFn, budget: Budget) -> Result<DistanceResult> {
    if !is_subcode(b, a)? {
        return Err(Error::NotNested("the second code is not contained in the first".into()));
    }
    if a.log_p_size() == b.log_p_size() {
        return Err(Error::EmptyDifference);
    }
    let a = match b.linearity() {
        Linearity::Additive => a.to_additive()?,
        Linearity::Linear => a.clone(),
    };
    let (mut search, phi) = search_for(&a, wfn, None)?;
    let sub_rows = match phi {
        Some(_) => b.preimage()?,
        None => b.generator().clone(),
    };
    // coordinates of b's rows in the systematic basis of a
    let coords = sub_rows.select_columns(&search.pivots);
    search.filter = Some(coords.kernel());
    map_witness(search.run(budget)?, phi.as_ref())
}

fn search_for(c: &LinearCode, wfn: WeightFn, filter: Option<FqMatrix>) -> Result<(Search, Option<Phi>)> {
    match c.linearity() {
        Linearity::Linear => {
            let r = c.generator().rref();
            Ok((Search { field: c.field().clone(), gen: c.generator().clone(), pivots: r.pivots, wfn, filter }, None))
        }
        Linearity::Additive => {
            if wfn == WeightFn::Quantum {
                return Err(Error::BadInput("quantum weight needs a (a | b) column layout".into()));
            }
            let phi = Phi::new(c.field())?;
            let pre = c.preimage()?;
            let r = pre.rref();
            let search = Search { field: phi.base().clone(), gen: pre, pivots: r.pivots, wfn: WeightFn::Quantum, filter };
            Ok((search, Some(phi)))
        }
    }
}

fn map_witness(mut d: DistanceResult, phi: Option<&Phi>) -> Result<DistanceResult> {
    if let (Some(phi), Some(w)) = (phi, &d.witness) {
        d.witness = Some(phi.forward(w)?);
    }
    Ok(d)
}

/// A `GF(q)`-linear code of length `2n` read as `(a | b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticCode {
    code: LinearCode,
}

impl SymplecticCode {
    pub fn new(field: &Field, n: usize, rows: &[Vec<u8>]) -> Result<SymplecticCode> {
        Self::from_code(LinearCode::new(field, 2 * n, rows)?)
    }

    pub fn from_code(code: LinearCode) -> Result<SymplecticCode> {
        if code.n() % 2 != 0 {
            return Err(Error::OddLength(code.n()));
        }
        if code.linearity() != Linearity::Linear {
            return Err(Error::BadInput("symplectic codes are GF(q)-linear".into()));
        }
        Ok(SymplecticCode { code })
    }

    pub fn zero(field: &Field, n: usize) -> SymplecticCode {
        SymplecticCode { code: LinearCode::zero(field, 2 * n) }
    }

    /// Number of qudits.
    pub fn n(&self) -> usize {
        self.code.n() / 2
    }

    pub fn dim(&self) -> usize {
        self.code.dim()
    }

    pub fn field(&self) -> &Field {
        self.code.field()
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn generator(&self) -> &FqMatrix {
        self.code.generator()
    }

    pub fn dual(&self) -> SymplecticCode {
        SymplecticCode { code: dual(&self.code, InnerProduct::Symplectic).expect("even length") }
    }

    pub fn check_self_orthogonal(&self) -> Result<()> {
        check_self_orthogonal(&self.code, InnerProduct::Symplectic)
    }

    pub fn is_subcode_of(&self, other: &SymplecticCode) -> bool {
        is_subcode(&self.code, &other.code).unwrap_or(false)
    }

    pub fn min_weight(&self, budget: Budget) -> Result<DistanceResult> {
        min_weight(&self.code, WeightFn::Quantum, budget)
    }

    /// Φ of the code, an additive code over `GF(q²)`.
    pub fn to_additive(&self) -> Result<LinearCode> {
        let phi = Phi::over(self.field())?;
        LinearCode::from_preimage(&phi, self.generator())
    }

    /// Φ⁻¹ of an additive (or linear) code over `GF(q²)`.
    pub fn from_additive(c: &LinearCode) -> Result<SymplecticCode> {
        Self::from_code(LinearCode::from_matrix(c.preimage()?)?)
    }
}
