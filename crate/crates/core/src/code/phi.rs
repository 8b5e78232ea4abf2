use crate::error::{Error, Result};
use crate::gf::Field;

/// The isometry `(a | b) -> a + γ b` from `F_q^{2n}` onto `F_{q²}^n`, with `γ`
/// the Conway generator of `GF(q²)`.
#[derive(Clone, Debug)]
pub struct Phi {
    ext: Field,
    base: Field,
    gamma: u8,
    /// `(a, b)` with `x = a + γ b`, indexed by `x`.
    split: Vec<(u8, u8)>,
    /// `1 / (γ - γ^q)`
    alt_scale: u8,
}

impl Phi {
    /// Phi onto the square-order field `ext`.
    pub fn new(ext: &Field) -> Result<Phi> {
        let base = ext.square_root_field().ok_or(Error::WrongFieldOrder(ext.q()))?;
        let gamma = ext.generator();
        let diff = ext.sub(gamma, ext.conj(gamma));
        let alt_scale = ext.checked_inv(diff).ok_or_else(|| Error::Internal("γ lies in the subfield".into()))?;
        let mut split = vec![(0u8, 0u8); ext.q()];
        for a in base.elements() {
            for b in base.elements() {
                let x = ext.add(ext.embed(&base, a)?, ext.mul(gamma, ext.embed(&base, b)?));
                split[x as usize] = (a, b);
            }
        }
        Ok(Phi { ext: ext.clone(), base, gamma, split, alt_scale })
    }

    /// Phi from `F_q^{2n}`, i.e. onto `GF(q²)`.
    pub fn over(base: &Field) -> Result<Phi> {
        let q2 = base.q() * base.q();
        if q2 > 256 {
            return Err(Error::UnsupportedSize { p: base.p(), m: 2 * base.m() });
        }
        Phi::new(&Field::gf(q2)?)
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn gamma(&self) -> u8 {
        self.gamma
    }

    pub fn lift(&self, a: u8, b: u8) -> u8 {
        let e = &self.ext;
        e.add(e.embed(&self.base, a).unwrap(), e.mul(self.gamma, e.embed(&self.base, b).unwrap()))
    }

    pub fn split(&self, x: u8) -> (u8, u8) {
        self.split[x as usize]
    }

    pub fn forward(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() % 2 != 0 {
            return Err(Error::OddLength(v.len()));
        }
        let n = v.len() / 2;
        Ok((0..n).map(|i| self.lift(v[i], v[n + i])).collect())
    }

    pub fn inverse(&self, v: &[u8]) -> Vec<u8> {
        let n = v.len();
        let mut out = vec![0u8; 2 * n];
        for (i, &x) in v.iter().enumerate() {
            let (a, b) = self.split(x);
            out[i] = a;
            out[n + i] = b;
        }
        out
    }

    /// `(x y^q - x^q y) / (γ - γ^q)`, an element of the base field.
    pub fn alt_coord(&self, x: u8, y: u8) -> u8 {
        let e = &self.ext;
        let t = e.sub(e.mul(x, e.conj(y)), e.mul(e.conj(x), y));
        let v = e.mul(t, self.alt_scale);
        e.restrict(&self.base, v).unwrap().expect("alternating form is base-valued")
    }

    /// Base-field-valued alternating form on `F_{q²}^n`; equals the
    /// symplectic form `b·a' - b'·a` of the preimages.
    pub fn alt_form(&self, u: &[u8], v: &[u8]) -> u8 {
        u.iter().zip(v).fold(0, |acc, (&x, &y)| self.base.add(acc, self.alt_coord(x, y)))
    }

    /// Trace-alternating value in the prime field.
    pub fn alt(&self, u: &[u8], v: &[u8]) -> u8 {
        self.base.trace_to_prime(self.alt_form(u, v))
    }
}
