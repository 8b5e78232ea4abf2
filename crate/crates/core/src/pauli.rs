//! Error operators `i^λ X(a) Z(b)` (qubits) and `ω^β X(a) Z(b)` (qudits) in
//! symplectic form.
//!
//! `X(a)|v> = |v + a>` and `Z(b)|v> = ω^{Tr(b·v)}|v>`, so
//! `Z(b) X(a') = ω^{Tr(b·a')} X(a') Z(b)` and products compose as
//!
//! * qubits: `λ'' = λ + λ' + 2 (a'·b) mod 4`
//! * qudits: `β'' = β + β' + Tr(b·a') mod p`

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    field: Field,
    a: Vec<u8>,
    b: Vec<u8>,
    phase: u8,
}

/// `(w_Q, wt_X, wt_Z)`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weights {
    pub quantum: usize,
    pub x: usize,
    pub z: usize,
}

impl PauliOperator {
    pub fn new(field: &Field, a: Vec<u8>, b: Vec<u8>, phase: u8) -> Result<PauliOperator> {
        if a.len() != b.len() {
            return Err(Error::ShapeMismatch(format!("a has length {}, b has length {}", a.len(), b.len())));
        }
        if let Some(&x) = a.iter().chain(&b).find(|&&x| x as usize >= field.q()) {
            return Err(Error::BadRange(format!("entry {x} not in {field}")));
        }
        let modulus = phase_modulus(field);
        if phase >= modulus {
            return Err(Error::BadRange(format!("phase {phase} not below {modulus}")));
        }
        Ok(PauliOperator { field: field.clone(), a, b, phase })
    }

    pub fn identity(field: &Field, n: usize) -> PauliOperator {
        PauliOperator { field: field.clone(), a: vec![0; n], b: vec![0; n], phase: 0 }
    }

    /// From a `(a | b)` vector of length `2n`.
    pub fn from_symplectic(field: &Field, v: &[u8], phase: u8) -> Result<PauliOperator> {
        if v.len() % 2 != 0 {
            return Err(Error::OddLength(v.len()));
        }
        let n = v.len() / 2;
        Self::new(field, v[..n].to_vec(), v[n..].to_vec(), phase)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u8] {
        &self.a
    }

    pub fn b(&self) -> &[u8] {
        &self.b
    }

    /// `λ` mod 4 for qubits, `β` mod p otherwise.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn with_phase(&self, phase: u8) -> PauliOperator {
        PauliOperator { phase: phase % phase_modulus(&self.field), ..self.clone() }
    }

    pub fn symplectic(&self) -> Vec<u8> {
        let mut v = self.a.clone();
        v.extend_from_slice(&self.b);
        v
    }

    /// Number of positions acting as σ_y (qubits only meaningful).
    pub fn y_count(&self) -> usize {
        self.a.iter().zip(&self.b).filter(|(&x, &z)| x != 0 && z != 0).count()
    }

    pub fn weights(&self) -> Weights {
        Weights {
            quantum: self.a.iter().zip(&self.b).filter(|(&x, &z)| x != 0 || z != 0).count(),
            x: self.a.iter().filter(|&&x| x != 0).count(),
            z: self.b.iter().filter(|&&x| x != 0).count(),
        }
    }

    /// Qubit operators: Hermitian iff `λ ≡ a·b (mod 2)`.
    pub fn is_hermitian(&self) -> bool {
        self.field.q() == 2 && self.phase as usize % 2 == self.y_count() % 2
    }

    fn check_shape(&self, other: &PauliOperator) -> Result<()> {
        if self.field != other.field || self.n() != other.n() {
            return Err(Error::ShapeMismatch(format!(
                "{} on {} qudits vs {} on {}",
                self.field,
                self.n(),
                other.field,
                other.n()
            )));
        }
        Ok(())
    }
}

/// 4 for qubits, p otherwise.
pub fn phase_modulus(field: &Field) -> u8 {
    if field.q() == 2 {
        4
    } else {
        field.p() as u8
    }
}

pub fn pauli_mul(e: &PauliOperator, f: &PauliOperator) -> Result<PauliOperator> {
    e.check_shape(f)?;
    let fld = &e.field;
    let a: Vec<u8> = e.a.iter().zip(&f.a).map(|(&x, &y)| fld.add(x, y)).collect();
    let b: Vec<u8> = e.b.iter().zip(&f.b).map(|(&x, &y)| fld.add(x, y)).collect();
    let cross = fld.dot(&e.b, &f.a);
    let phase = if fld.q() == 2 {
        (e.phase + f.phase + 2 * cross) % 4
    } else {
        let p = fld.p() as u8;
        ((e.phase as u16 + f.phase as u16 + fld.trace_to_prime(cross) as u16) % p as u16) as u8
    };
    Ok(PauliOperator { field: fld.clone(), a, b, phase })
}

/// `c` with `E E' = ω^c E' E` (`(-1)^c` for qubits): `Tr(b·a' - b'·a)`.
pub fn commute_phase(e: &PauliOperator, f: &PauliOperator) -> Result<u8> {
    e.check_shape(f)?;
    let fld = &e.field;
    Ok(fld.trace_to_prime(fld.sub(fld.dot(&e.b, &f.a), fld.dot(&f.b, &e.a))))
}

/// `|ℰ_n(δ)|`, or `|ℰ̄_n(δ)|` with `bar`: the number of operators of quantum
/// weight at most `δ`, `Σ_{j≤δ} (q²-1)^j C(n,j)`, times the phase count
/// (4 for qubits, p otherwise) unless `bar`.
pub fn error_set_size(n: usize, delta: usize, q: usize, bar: bool) -> Result<BigUint> {
    if delta > n {
        return Err(Error::BadRange(format!("delta {delta} exceeds n {n}")));
    }
    let field = Field::gf(q)?;
    let base = BigUint::from(q * q - 1);
    let mut total = BigUint::zero();
    let mut binom = BigUint::one();
    for j in 0..=delta {
        if j > 0 {
            binom = binom * BigUint::from(n - j + 1) / BigUint::from(j);
        }
        total += &binom * base.pow(j as u32);
    }
    if !bar {
        total *= BigUint::from(phase_modulus(&field));
    }
    Ok(total)
}

const QUBIT_PREFIXES: [&str; 4] = ["", "+i", "-1", "-i"];

/// Qubits: an optional prefix (`+1`, `-1`, `+i`, `-i`, also `+`, `-`, `i`)
/// followed by letters `I X Y Z`, with `Y = i X Z`. Any field: the form
/// `X:a_1,...,a_n;Z:b_1,...,b_n;w:β`.
pub fn pauli_parse(s: &str, field: &Field) -> Result<PauliOperator> {
    let s = s.trim();
    if s.contains(':') {
        return parse_qudit(s, field);
    }
    if field.q() != 2 {
        return Err(Error::BadSyntax(format!("letter strings are for qubits; use X:..;Z:..;w:.. for {field}")));
    }
    let prefixes: [(&str, u8); 7] = [("+1", 0), ("-1", 2), ("+i", 1), ("-i", 3), ("+", 0), ("-", 2), ("i", 1)];
    let (mu, body) = prefixes
        .iter()
        .find_map(|&(p, m)| s.strip_prefix(p).map(|rest| (m, rest)))
        .unwrap_or((0, s));
    let mut a = Vec::with_capacity(body.len());
    let mut b = Vec::with_capacity(body.len());
    for ch in body.chars() {
        let (x, z) = match ch {
            'I' => (0, 0),
            'X' => (1, 0),
            'Z' => (0, 1),
            'Y' => (1, 1),
            _ => return Err(Error::BadAlphabet(format!("'{ch}' in '{s}'"))),
        };
        a.push(x);
        b.push(z);
    }
    let ys = a.iter().zip(&b).filter(|(&x, &z)| x == 1 && z == 1).count();
    let phase = ((mu as usize + ys) % 4) as u8;
    PauliOperator::new(field, a, b, phase)
}

fn parse_qudit(s: &str, field: &Field) -> Result<PauliOperator> {
    let parts: Vec<&str> = s.split(';').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::BadSyntax(format!("expected X:..;Z:..;w:.. in '{s}'")));
    }
    let list = |part: &str, tag: &str| -> Result<Vec<u8>> {
        let body = part
            .strip_prefix(tag)
            .and_then(|r| r.trim_start().strip_prefix(':'))
            .ok_or_else(|| Error::BadSyntax(format!("expected '{tag}:' in '{part}'")))?
            .trim();
        if body.is_empty() {
            return Ok(Vec::new());
        }
        body.split(',')
            .map(|t| {
                let t = t.trim();
                let v: usize = t.parse().map_err(|_| Error::BadAlphabet(format!("'{t}' in '{s}'")))?;
                if v >= field.q() {
                    return Err(Error::BadAlphabet(format!("{v} is not an element of {field}")));
                }
                Ok(v as u8)
            })
            .collect()
    };
    let a = list(parts[0], "X")?;
    let b = list(parts[1], "Z")?;
    let w = list(parts[2], "w")?;
    if w.len() != 1 {
        return Err(Error::BadSyntax(format!("phase needs one value in '{s}'")));
    }
    if w[0] >= phase_modulus(field) {
        return Err(Error::BadRange(format!("phase {} not below {}", w[0], phase_modulus(field))));
    }
    PauliOperator::new(field, a, b, w[0])
}

pub fn pauli_format(e: &PauliOperator) -> String {
    if e.field.q() == 2 {
        let mu = (e.phase as usize + 4 - e.y_count() % 4) % 4;
        let mut s = QUBIT_PREFIXES[mu].to_string();
        for (&x, &z) in e.a.iter().zip(&e.b) {
            s.push(match (x, z) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (0, _) => 'Z',
                _ => 'Y',
            });
        }
        s
    } else {
        let join = |v: &[u8]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("X:{};Z:{};w:{}", join(&e.a), join(&e.b), e.phase)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pauli_format(self))
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", pauli_format(self), self.field)
    }
}
