//! Closed-form bounds on quantum code parameters, evaluated in exact integers.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf::prime_power;
use crate::stabilizer::{CodeParams, Distance, Purity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The bound cannot be evaluated on these parameters; carries the reason.
    Inapplicable(String),
}

/// Outcome of one bound check. `slack` is the margin by which the inequality
/// holds (negative when it fails); `extremal` names the equality case
/// (`qmds`, `perfect`) and whether it is attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: &'static str,
    pub verdict: Verdict,
    pub lhs: Option<BigInt>,
    pub rhs: Option<BigInt>,
    pub slack: Option<BigInt>,
    pub extremal: Option<(&'static str, bool)>,
    pub notes: Vec<String>,
}

impl BoundReport {
    fn inapplicable(name: &'static str, reason: impl Into<String>) -> BoundReport {
        BoundReport {
            name,
            verdict: Verdict::Inapplicable(reason.into()),
            lhs: None,
            rhs: None,
            slack: None,
            extremal: None,
            notes: Vec::new(),
        }
    }

    fn evaluated(name: &'static str, lhs: BigInt, rhs: BigInt, slack: BigInt, strict: bool) -> BoundReport {
        let holds = if strict { slack > BigInt::zero() } else { slack >= BigInt::zero() };
        BoundReport {
            name,
            verdict: if holds { Verdict::Holds } else { Verdict::Fails },
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(slack),
            extremal: None,
            notes: Vec::new(),
        }
    }

    pub fn holds(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Holds => Some(true),
            Verdict::Fails => Some(false),
            Verdict::Inapplicable(_) => None,
        }
    }

    fn pairs(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        match &self.verdict {
            Verdict::Holds | Verdict::Fails => {
                out.push(("holds".into(), self.holds().unwrap().to_string()));
                if let Some((flag, v)) = self.extremal {
                    out.push((flag.into(), v.to_string()));
                }
                for (k, v) in [("lhs", &self.lhs), ("rhs", &self.rhs), ("slack", &self.slack)] {
                    if let Some(v) = v {
                        out.push((k.into(), v.to_string()));
                    }
                }
            }
            Verdict::Inapplicable(reason) => {
                out.push(("holds".into(), "inapplicable".into()));
                out.push(("reason".into(), format!("\"{reason}\"")));
            }
        }
        out
    }

    /// `bound=<name> holds=.. lhs=.. rhs=.. slack=..` on one line.
    pub fn kv(&self) -> String {
        let mut s = format!("bound={}", self.name);
        for (k, v) in self.pairs() {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.pairs().into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}: {}", self.name, body.join(" "))?;
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn int(x: usize) -> BigInt {
    BigInt::from(x)
}

fn certifiable(p: &CodeParams, name: &'static str) -> Option<BoundReport> {
    if !p.distance.is_exact() {
        return Some(BoundReport::inapplicable(name, "not certifiable from bound-only distance"));
    }
    if p.ebits.is_some_and(|c| c > 0) {
        return Some(BoundReport::inapplicable(name, "entanglement-assisted parameters"));
    }
    if p.k == 0 {
        return Some(BoundReport::inapplicable(name, "requires k > 0"));
    }
    None
}

/// `k <= n - 2d + 2`; QMDS on equality.
pub fn singleton(p: &CodeParams) -> BoundReport {
    if let Some(r) = certifiable(p, "singleton") {
        return r;
    }
    let d = p.distance.min();
    let lhs = int(p.k);
    let rhs = int(p.n + 2) - int(2 * d);
    let slack = &rhs - &lhs;
    let mut r = BoundReport::evaluated("singleton", lhs, rhs, slack.clone(), false);
    r.extremal = Some(("qmds", slack.is_zero()));
    if let Distance::Asymmetric { .. } = p.distance {
        r.notes.push("evaluated with d = min(d_z, d_x)".into());
    }
    r
}

/// `q^{n-k} >= Σ_{j<=ℓ} (q²-1)^j C(n,j)` with `ℓ = ⌊(d-1)/2⌋`, for pure codes;
/// perfect on equality.
pub fn hamming(p: &CodeParams) -> BoundReport {
    if let Some(r) = certifiable(p, "hamming") {
        return r;
    }
    if p.pure != Purity::Pure {
        return BoundReport::inapplicable("hamming", "requires a pure code");
    }
    let d = p.distance.min();
    let ell = (d - 1) / 2;
    let q = BigUint::from(p.q);
    let lhs = q.pow((p.n - p.k) as u32);
    let base = BigUint::from(p.q * p.q - 1);
    let rhs: BigUint = (0..=ell.min(p.n)).map(|j| base.pow(j as u32) * binomial(p.n, j)).sum();
    let (lhs, rhs) = (BigInt::from(lhs), BigInt::from(rhs));
    let slack = &lhs - &rhs;
    let mut r = BoundReport::evaluated("hamming", lhs, rhs, slack.clone(), false);
    r.extremal = Some(("perfect", slack.is_zero()));
    r
}

/// `(q^{n-k+2} - 1)/(q² - 1) > Σ_{j=1}^{d-1} (q²-1)^{j-1} C(n,j)` implies a
/// pure `[[n, k, d]]_q` code exists. Needs `n > k >= 2`, `d >= 2`,
/// `n ≡ k (mod 2)`.
pub fn gv_exists(q: usize, n: usize, k: usize, d: usize) -> Result<BoundReport> {
    if prime_power(q).is_none() {
        return Err(Error::HypothesisViolated(format!("q = {q} is not a prime power")));
    }
    if k < 2 {
        return Err(Error::HypothesisViolated(format!("k >= 2 (k = {k})")));
    }
    if n <= k {
        return Err(Error::HypothesisViolated(format!("n > k (n = {n}, k = {k})")));
    }
    if d < 2 {
        return Err(Error::HypothesisViolated(format!("d >= 2 (d = {d})")));
    }
    if (n - k) % 2 != 0 {
        return Err(Error::HypothesisViolated(format!("n ≡ k (mod 2) (n = {n}, k = {k})")));
    }
    let qq = BigUint::from(q * q - 1);
    let lhs = (BigUint::from(q).pow((n - k + 2) as u32) - BigUint::one()) / &qq;
    let rhs: BigUint = (1..d).filter(|&j| j <= n).map(|j| qq.pow((j - 1) as u32) * binomial(n, j)).sum();
    let (lhs, rhs) = (BigInt::from(lhs), BigInt::from(rhs));
    let slack = &lhs - &rhs;
    let mut r = BoundReport::evaluated("gv", lhs, rhs, slack, true);
    if r.verdict == Verdict::Holds {
        r.notes.push(format!("a pure [[{n},{k},{d}]]_{q} code exists"));
    }
    Ok(r)
}

/// `k <= n - (d_x + d_z) + 2`.
pub fn aqc_singleton(p: &CodeParams) -> BoundReport {
    if let Some(r) = certifiable(p, "aqc_singleton") {
        return r;
    }
    let (dz, dx) = match &p.distance {
        Distance::Symmetric(d) => (d.value, d.value),
        Distance::Asymmetric { z, x } => (z.value, x.value),
    };
    let lhs = int(p.k);
    let rhs = int(p.n + 2) - int(dx + dz);
    let slack = &rhs - &lhs;
    let mut r = BoundReport::evaluated("aqc_singleton", lhs, rhs, slack, false);
    r.notes.push("evaluated with d_x + d_z".into());
    r
}

/// Which cases of the pure CSS AQMDS classification `(q, n, j, k)` matches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AqmdsMatch {
    pub cases: Vec<u8>,
}

impl AqmdsMatch {
    pub fn feasible(&self) -> bool {
        !self.cases.is_empty()
    }

    pub fn first(&self) -> Option<u8> {
        self.cases.first().copied()
    }
}

/// Whether a pure CSS AQMDS `[[n, j, d_z, d_x]]_q` with
/// `{d_z, d_x} = {n-k-j+1, k+1}` exists (under the MDS conjecture), by the
/// seven-case classification.
pub fn aqmds_feasible(q: usize, n: usize, j: usize, k: usize) -> Result<AqmdsMatch> {
    let (p, m) = prime_power(q).ok_or_else(|| Error::BadInput(format!("q = {q} is not a prime power")))?;
    if n < 2 {
        return Err(Error::BadInput(format!("n >= 2 (n = {n})")));
    }
    if k < 1 || k > n - 1 {
        return Err(Error::BadInput(format!("1 <= k <= n - 1 (k = {k}, n = {n})")));
    }
    let even_q = p == 2;
    let m = m as usize;
    let mut cases = Vec::new();
    if (k == 1 || k == n - 1) && (j == 0 || j == n - k) {
        cases.push(1);
    }
    if q == 2 && n % 2 == 0 && k == 1 && j + 2 == n {
        cases.push(2);
    }
    if q >= 3 && k == 1 && j + 2 == n {
        cases.push(3);
    }
    if q >= 3 && n <= q && j <= n - k {
        cases.push(4);
    }
    if q >= 3 && n == q + 1 && (j == 0 || (2..=n - k).contains(&j)) {
        cases.push(5);
    }
    if even_q && n == q + 1 && j == 1 && (k == 2 || k + 2 == q) {
        cases.push(6);
    }
    if even_q && m >= 2 && n == q + 2 {
        let hit = (k == 1 && (j == 2 || j + 2 == q))
            || (k == 3 && (j == 0 || j + 4 == q || j + 1 == q))
            || (k + 1 == q && (j == 0 || j == 3));
        if hit {
            cases.push(7);
        }
    }
    Ok(AqmdsMatch { cases })
}
