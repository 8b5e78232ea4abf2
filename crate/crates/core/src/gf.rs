//! Arithmetic in GF(p^m) for q = p^m <= 256.
//!
//! Elements are encoded as integers in `[0, q)`: the base-p digits of the
//! encoding are the coefficients of the polynomial residue, lowest degree
//! first. Every field uses the Conway polynomial of its order as modulus, so
//! the encoding (and every file written with it) is the same on every run.
//!
//! Fields are cheap handles onto immutable shared tables; `Field::gf(q)` hands
//! out the same tables for the same order.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Conway polynomials for the non-prime orders up to 256, coefficients lowest
/// degree first (monic).
const CONWAY: &[(u32, u32, &[u8])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: usize) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)? as u32;
    let mut rest = q;
    let mut m = 0;
    while rest % p as usize == 0 {
        rest /= p as usize;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

struct SubfieldMap {
    sub: Field,
    /// sub rep -> rep in this field
    embed: Vec<u8>,
    /// rep in this field -> sub rep, for elements of the image
    restrict: Vec<Option<u8>>,
}

struct FieldData {
    p: u32,
    m: u32,
    q: usize,
    modulus: Vec<u8>,
    generator: u8,
    exp: Vec<u8>,
    log: Vec<u8>,
    add: Vec<u8>,
    neg: Vec<u8>,
    subfields: Vec<SubfieldMap>,
}

/// A finite field GF(p^m) with a fixed Conway modulus.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

fn registry() -> &'static Mutex<HashMap<usize, Field>> {
    static REGISTRY: OnceLock<Mutex<HashMap<usize, Field>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

fn least_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let order = p - 1;
    let factors: Vec<u32> = (2..=order).filter(|d| order % d == 0 && is_prime(*d)).collect();
    (2..p)
        .find(|&g| {
            factors.iter().all(|f| {
                let mut acc = 1u64;
                for _ in 0..(order / f) {
                    acc = acc * g as u64 % p as u64;
                }
                acc != 1
            })
        })
        .expect("every prime has a primitive root")
}

fn digits(mut rep: usize, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = (rep % p as usize) as u32;
            rep /= p as usize;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> usize {
    ds.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize)
}

/// Remainder of `num` modulo a monic `den`, both over GF(p), lowest degree first.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    for deg in 1..=m / 2 {
        let count = (p as usize).pow(deg as u32);
        for low in 0..count {
            let mut cand = digits(low, p, deg as u32);
            cand.push(1);
            if poly_rem(modulus, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^m) with its Conway modulus.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || m > 8 || (p as u64).pow(m) > 256 {
            return Err(Error::UnsupportedSize { p, m });
        }
        let q = (p as usize).pow(m);
        if let Some(f) = registry().lock().unwrap().get(&q) {
            return Ok(f.clone());
        }
        let field = Field::build(p, m)?;
        let mut reg = registry().lock().unwrap();
        Ok(reg.entry(q).or_insert(field).clone())
    }

    /// Builds the field of order `q`.
    pub fn gf(q: usize) -> Result<Field> {
        match prime_power(q) {
            Some((p, m)) => Field::new(p, m),
            None if q > 256 => Err(Error::UnsupportedSize { p: q as u32, m: 1 }),
            None => Err(Error::NotPrime(q as u32)),
        }
    }

    fn build(p: u32, m: u32) -> Result<Field> {
        let q = (p as usize).pow(m);
        let (modulus, generator): (Vec<u32>, usize) = if m == 1 {
            let g = least_primitive_root(p);
            (vec![(p - g) % p, 1], g as usize)
        } else {
            let entry = CONWAY
                .iter()
                .find(|(pp, mm, _)| *pp == p && *mm == m)
                .ok_or(Error::UnsupportedSize { p, m })?;
            (entry.2.iter().map(|&c| c as u32).collect(), p as usize)
        };
        if !is_irreducible(&modulus, p) {
            return Err(Error::Internal(format!("modulus for GF({q}) is reducible")));
        }

        let mut add = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let da = digits(a, p, m);
            let na: Vec<u32> = da.iter().map(|&d| (p - d) % p).collect();
            neg[a] = undigits(&na, p) as u8;
            for b in 0..q {
                let db = digits(b, p, m);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&s, p) as u8;
            }
        }

        let order = q - 1;
        let mut exp = vec![0u8; 2 * order.max(1)];
        let mut log = vec![0u8; q];
        let mut cur = 1usize;
        let mut seen = vec![false; q];
        for i in 0..order {
            if seen[cur] {
                return Err(Error::Internal(format!("modulus for GF({q}) is not primitive")));
            }
            seen[cur] = true;
            exp[i] = cur as u8;
            exp[i + order] = cur as u8;
            log[cur] = i as u8;
            cur = Self::times_generator(cur, generator, &modulus, p, m);
        }
        if cur != 1 {
            return Err(Error::Internal(format!("generator of GF({q}) has wrong order")));
        }

        let mut data = FieldData {
            p,
            m,
            q,
            modulus: modulus.iter().map(|&c| c as u8).collect(),
            generator: generator as u8,
            exp,
            log,
            add,
            neg,
            subfields: Vec::new(),
        };
        for d in (1..m).filter(|d| m % d == 0) {
            let sub = Field::new(p, d)?;
            data.subfields.push(Self::embedding_into(&data, sub)?);
        }
        Ok(Field(Arc::new(data)))
    }

    fn times_generator(cur: usize, generator: usize, modulus: &[u32], p: u32, m: u32) -> usize {
        if m == 1 {
            return cur * generator % p as usize;
        }
        let mut prod = vec![0u32];
        prod.extend(digits(cur, p, m));
        undigits(&poly_rem(&prod, modulus, p), p)
    }

    fn embedding_into(data: &FieldData, sub: Field) -> Result<SubfieldMap> {
        let qs = sub.q();
        let r = (data.q - 1) / (qs - 1);
        let mut embed = vec![0u8; qs];
        let mut restrict = vec![None; data.q];
        restrict[0] = Some(0);
        for i in 0..qs - 1 {
            let s = sub.0.exp[i] as usize;
            let img = data.exp[(i * r) % (data.q - 1)];
            embed[s] = img;
            restrict[img as usize] = Some(s as u8);
        }
        for a in 0..qs {
            for b in 0..qs {
                let lhs = embed[sub.add(a as u8, b as u8) as usize];
                let rhs = data.add[embed[a] as usize * data.q + embed[b] as usize];
                if lhs != rhs {
                    return Err(Error::Internal(format!(
                        "moduli of GF({qs}) and GF({}) are not compatible",
                        data.q
                    )));
                }
            }
        }
        Ok(SubfieldMap { sub, embed, restrict })
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> usize {
        self.0.q
    }

    /// Monic modulus, lowest degree first.
    pub fn modulus(&self) -> &[u8] {
        &self.0.modulus
    }

    /// The multiplicative generator: the root of the modulus (the primitive
    /// root itself for prime fields).
    pub fn generator(&self) -> u8 {
        self.0.generator
    }

    pub fn elem(&self, rep: u8) -> FieldElement<'_> {
        debug_assert!((rep as usize) < self.q());
        FieldElement { field: self, rep }
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.q()).map(|x| x as u8)
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.0.add[a as usize * self.0.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &self.0;
        d.exp[d.log[a as usize] as usize + d.log[b as usize] as usize]
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        let d = &self.0;
        let order = d.q - 1;
        d.exp[(order - d.log[a as usize] as usize) % order]
    }

    pub fn checked_inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv(a))
    }

    pub fn pow(&self, a: u8, e: u64) -> u8 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.q() - 1) as u64;
        let l = self.0.log[a as usize] as u64 * (e % order) % order;
        self.0.exp[l as usize]
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: u8, k: u32) -> u8 {
        let mut x = a;
        for _ in 0..k % self.m() {
            x = self.pow(x, self.p() as u64);
        }
        x
    }

    /// Schoolbook polynomial product reduced by the modulus; independent of
    /// the log tables.
    pub fn mul_schoolbook(&self, a: u8, b: u8) -> u8 {
        let (p, m) = (self.p(), self.m());
        if m == 1 {
            return ((a as u32 * b as u32) % p) as u8;
        }
        let da = digits(a as usize, p, m);
        let db = digits(b as usize, p, m);
        let mut prod = vec![0u32; 2 * m as usize - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let modulus: Vec<u32> = self.modulus().iter().map(|&c| c as u32).collect();
        undigits(&poly_rem(&prod, &modulus, p), p) as u8
    }

    fn subfield_map(&self, sub: &Field) -> Result<Option<&SubfieldMap>> {
        if sub.p() != self.p() || self.m() % sub.m() != 0 {
            return Err(Error::NotSubfield { sub: sub.q(), field: self.q() });
        }
        if sub.m() == self.m() {
            return Ok(None);
        }
        Ok(self.0.subfields.iter().find(|s| s.sub.m() == sub.m()))
    }

    /// Image of a subfield element inside this field.
    pub fn embed(&self, sub: &Field, x: u8) -> Result<u8> {
        Ok(match self.subfield_map(sub)? {
            None => x,
            Some(map) => map.embed[x as usize],
        })
    }

    /// Preimage in `sub` of an element of this field, if it lies in the subfield.
    pub fn restrict(&self, sub: &Field, x: u8) -> Result<Option<u8>> {
        Ok(match self.subfield_map(sub)? {
            None => Some(x),
            Some(map) => map.restrict[x as usize],
        })
    }

    /// Relative trace onto `sub`, returned as an element of `sub`.
    pub fn trace(&self, x: u8, sub: &Field) -> Result<u8> {
        self.subfield_map(sub)?;
        let steps = self.m() / sub.m();
        let mut acc = 0u8;
        let mut conj = x;
        for _ in 0..steps {
            acc = self.add(acc, conj);
            conj = self.frobenius(conj, sub.m());
        }
        self.restrict(sub, acc)?
            .ok_or_else(|| Error::Internal("trace left the subfield".into()))
    }

    /// Absolute trace onto the prime field, as an integer in `[0, p)`.
    pub fn trace_to_prime(&self, x: u8) -> u8 {
        let mut acc = 0u8;
        let mut conj = x;
        for _ in 0..self.m() {
            acc = self.add(acc, conj);
            conj = self.pow(conj, self.p() as u64);
        }
        // prime-field elements are the constant residues 0..p
        acc
    }

    /// `Some(GF(sqrt q))` when the order is a square.
    pub fn square_root_field(&self) -> Option<Field> {
        (self.m() % 2 == 0).then(|| Field::new(self.p(), self.m() / 2).expect("subfield exists"))
    }

    /// `x^sqrt(q)` for square-order fields (the involution used by Hermitian forms).
    pub fn conj(&self, x: u8) -> u8 {
        debug_assert!(self.m() % 2 == 0);
        self.frobenius(x, self.m() / 2)
    }

    pub fn dot(&self, u: &[u8], v: &[u8]) -> u8 {
        u.iter().zip(v).fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q() == other.q()
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.q().hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

/// An element bound to its field, for readable arithmetic.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f Field,
    rep: u8,
}

impl<'f> FieldElement<'f> {
    pub fn rep(self) -> u8 {
        self.rep
    }

    pub fn field(self) -> &'f Field {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.rep == 0
    }

    pub fn inv(self) -> Option<Self> {
        self.field.checked_inv(self.rep).map(|r| self.field.elem(r))
    }

    pub fn pow(self, e: u64) -> Self {
        self.field.elem(self.field.pow(self.rep, e))
    }

    pub fn frobenius(self, k: u32) -> Self {
        self.field.elem(self.field.frobenius(self.rep, k))
    }

    pub fn trace<'s>(self, sub: &'s Field) -> Result<FieldElement<'s>> {
        Ok(sub.elem(self.field.trace(self.rep, sub)?))
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rep == other.rep
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.rep, self.field)
    }
}

/// Polynomial form in the root `x` of the modulus, e.g. `2x+1`.
impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.field.p() as usize;
        let mut digits = Vec::new();
        let mut r = self.rep as usize;
        while r > 0 {
            digits.push(r % p);
            r /= p;
        }
        let terms: Vec<String> = digits
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
                match i {
                    0 => coef,
                    1 => format!("{coef}x"),
                    _ => format!("{coef}x^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            f.pad("0")
        } else {
            f.pad(&terms.join("+"))
        }
    }
}

impl<'f> Add for FieldElement<'f> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.field.elem(self.field.add(self.rep, rhs.rep))
    }
}

impl<'f> Sub for FieldElement<'f> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.field.elem(self.field.sub(self.rep, rhs.rep))
    }
}

impl<'f> Mul for FieldElement<'f> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.field.elem(self.field.mul(self.rep, rhs.rep))
    }
}

impl<'f> Div for FieldElement<'f> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.field.elem(self.field.mul(self.rep, self.field.inv(rhs.rep)))
    }
}

impl<'f> Neg for FieldElement<'f> {
    type Output = Self;
    fn neg(self) -> Self {
        self.field.elem(self.field.neg(self.rep))
    }
}
