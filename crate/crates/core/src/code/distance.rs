//! Minimum-weight search over the message space of a code.
//!
//! Two strategies share one set of word kernels:
//!
//! * **Full enumeration.** When the code has at most `budget` nonzero
//!   codewords, every message is visited in r-ary Gray-code order so each step
//!   adds one scaled generator row. The result is exact and the witness is the
//!   lexicographically smallest codeword of minimum weight. Large spaces are
//!   split into contiguous Gray-code ranges and searched by several workers.
//! * **Information-set levels.** Otherwise the generator is used in systematic
//!   form and messages are visited in order of increasing Hamming weight. Once
//!   every message of weight `<= w` has been visited, any unvisited codeword
//!   has weight at least `w + 1` on the information set, hence Hamming weight
//!   `>= w + 1` and quantum weight `>= ceil((w + 1) / 2)`. The search stops as
//!   soon as the lightest word found meets that floor; if the budget runs out
//!   first, the floor is reported as a lower bound.
//!
//! Coset searches (`A \ B`) track the syndrome of the message against the
//! coordinates of `B`, so membership in `B` costs one zero test per visit.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::fmatrix::FqMatrix;
use crate::gf::Field;

/// Which weight to minimise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightFn {
    /// Number of nonzero coordinates.
    Hamming,
    /// For `(a | b)` of length `2n`: positions `i` with `a_i != 0` or `b_i != 0`.
    Quantum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistanceStatus {
    Exact,
    LowerBoundOnly,
}

impl DistanceStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceStatus::Exact => "exact",
            DistanceStatus::LowerBoundOnly => "lower_bound",
        }
    }
}

/// A certified distance. With `Exact` status the witness is a nonzero word of
/// exactly `value` weight; with `LowerBoundOnly` the witness, when present,
/// is the lightest word seen (its weight is an upper bound).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub value: usize,
    pub status: DistanceStatus,
    pub witness: Option<Vec<u8>>,
}

impl DistanceResult {
    pub fn exact(value: usize, witness: Option<Vec<u8>>) -> Self {
        DistanceResult { value, status: DistanceStatus::Exact, witness }
    }

    pub fn lower_bound(value: usize) -> Self {
        DistanceResult { value, status: DistanceStatus::LowerBoundOnly, witness: None }
    }

    pub fn is_exact(&self) -> bool {
        self.status == DistanceStatus::Exact
    }
}

/// Cap on the number of codewords visited by one search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT_LOG2: u32 = 26;

    pub fn from_log2(bits: u32) -> Budget {
        Budget(if bits >= 63 { u64::MAX } else { 1u64 << bits })
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_log2(Self::DEFAULT_LOG2)
    }
}

/// Worker count: `STABFORGE_THREADS` if set, else the available parallelism.
pub fn worker_count() -> usize {
    std::env::var("STABFORGE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Word arithmetic used by the search loops.
trait Kernel: Sync {
    type W: Clone + Send + Sync;
    fn pack(&self, v: &[u8]) -> Self::W;
    fn unpack(&self, w: &Self::W) -> Vec<u8>;
    fn add(&self, acc: &mut Self::W, row: &Self::W);
    fn weight(&self, w: &Self::W) -> usize;
    fn is_zero(&self, w: &Self::W) -> bool;
}

/// GF(2) words packed into u64; the quantum layout keeps `a` and `b` in
/// separate word blocks so the support union is one OR per word.
struct BinaryKernel {
    len: usize,
    quantum_half: Option<usize>,
}

impl BinaryKernel {
    fn block(&self) -> usize {
        match self.quantum_half {
            Some(h) => h.div_ceil(64).max(1),
            None => self.len.div_ceil(64).max(1),
        }
    }

    fn slot(&self, i: usize) -> usize {
        match self.quantum_half {
            Some(h) if i >= h => self.block() * 64 + (i - h),
            _ => i,
        }
    }
}

impl Kernel for BinaryKernel {
    type W = Vec<u64>;

    fn pack(&self, v: &[u8]) -> Vec<u64> {
        let words = if self.quantum_half.is_some() { 2 * self.block() } else { self.block() };
        let mut out = vec![0u64; words];
        for (i, &x) in v.iter().enumerate() {
            if x != 0 {
                let s = self.slot(i);
                out[s / 64] |= 1 << (s % 64);
            }
        }
        out
    }

    fn unpack(&self, w: &Vec<u64>) -> Vec<u8> {
        (0..self.len)
            .map(|i| {
                let s = self.slot(i);
                (w[s / 64] >> (s % 64) & 1) as u8
            })
            .collect()
    }

    #[inline]
    fn add(&self, acc: &mut Vec<u64>, row: &Vec<u64>) {
        for (a, r) in acc.iter_mut().zip(row) {
            *a ^= r;
        }
    }

    #[inline]
    fn weight(&self, w: &Vec<u64>) -> usize {
        match self.quantum_half {
            Some(_) => {
                let b = self.block();
                (0..b).map(|i| (w[i] | w[b + i]).count_ones() as usize).sum()
            }
            None => w.iter().map(|x| x.count_ones() as usize).sum(),
        }
    }

    fn is_zero(&self, w: &Vec<u64>) -> bool {
        w.iter().all(|&x| x == 0)
    }
}

struct FieldKernel {
    field: Field,
    quantum_half: Option<usize>,
}

impl Kernel for FieldKernel {
    type W = Vec<u8>;

    fn pack(&self, v: &[u8]) -> Vec<u8> {
        v.to_vec()
    }

    fn unpack(&self, w: &Vec<u8>) -> Vec<u8> {
        w.clone()
    }

    #[inline]
    fn add(&self, acc: &mut Vec<u8>, row: &Vec<u8>) {
        for (a, &r) in acc.iter_mut().zip(row) {
            *a = self.field.add(*a, r);
        }
    }

    fn weight(&self, w: &Vec<u8>) -> usize {
        match self.quantum_half {
            Some(h) => (0..h).filter(|&i| w[i] != 0 || w[h + i] != 0).count(),
            None => w.iter().filter(|&&x| x != 0).count(),
        }
    }

    fn is_zero(&self, w: &Vec<u8>) -> bool {
        w.iter().all(|&x| x == 0)
    }
}

/// A search instance: enumerate `span(gen)`, skipping messages `m` with
/// `K m^T = 0` when a coset filter `K` is present.
pub(crate) struct Search {
    pub field: Field,
    /// Systematic generator (rref rows, full rank).
    pub gen: FqMatrix,
    pub pivots: Vec<usize>,
    pub wfn: WeightFn,
    /// Rows spanning the annihilator of the excluded subspace, in message
    /// coordinates (`k` columns).
    pub filter: Option<FqMatrix>,
}

#[derive(Clone)]
struct Best {
    weight: usize,
    word: Option<Vec<u8>>,
}

impl Best {
    fn none() -> Best {
        Best { weight: usize::MAX, word: None }
    }

    fn offer(&mut self, weight: usize, word: impl FnOnce() -> Vec<u8>) {
        if weight > self.weight {
            return;
        }
        let w = word();
        if weight < self.weight || self.word.as_ref().is_none_or(|cur| w < *cur) {
            self.weight = weight;
            self.word = Some(w);
        }
    }

    fn merge(&mut self, other: Best) {
        if let Some(w) = other.word {
            self.offer(other.weight, || w);
        }
    }
}

struct Tables<K: Kernel> {
    kernel: K,
    syndrome: Option<K>,
    /// `scaled[i][c]` = c * row_i
    scaled: Vec<Vec<K::W>>,
    /// `syn_scaled[i][c]` = c * (column i of the filter)
    syn_scaled: Vec<Vec<K::W>>,
    syn_len: usize,
    r: usize,
    field: Field,
}

impl Search {
    pub fn run(&self, budget: Budget) -> Result<DistanceResult> {
        if self.gen.rows() == 0 {
            return Err(Error::ZeroCode);
        }
        let len = self.gen.cols();
        let half = match self.wfn {
            WeightFn::Quantum => {
                if len % 2 != 0 {
                    return Err(Error::OddLength(len));
                }
                Some(len / 2)
            }
            WeightFn::Hamming => None,
        };
        let syn_len = self.filter.as_ref().map_or(0, |f| f.rows());
        if self.field.q() == 2 {
            let kernel = BinaryKernel { len, quantum_half: half };
            let syndrome = self.filter.as_ref().map(|_| BinaryKernel { len: syn_len, quantum_half: None });
            self.run_with(self.tables(kernel, syndrome, syn_len), budget)
        } else {
            let kernel = FieldKernel { field: self.field.clone(), quantum_half: half };
            let syndrome =
                self.filter.as_ref().map(|_| FieldKernel { field: self.field.clone(), quantum_half: None });
            self.run_with(self.tables(kernel, syndrome, syn_len), budget)
        }
    }

    fn tables<K: Kernel>(&self, kernel: K, syndrome: Option<K>, syn_len: usize) -> Tables<K> {
        let f = &self.field;
        let r = f.q();
        let k = self.gen.rows();
        let scaled = (0..k)
            .map(|i| {
                let row = self.gen.row(i);
                (0..r)
                    .map(|c| kernel.pack(&row.iter().map(|&x| f.mul(c as u8, x)).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let syn_scaled = match (&self.filter, &syndrome) {
            (Some(filter), Some(sk)) => (0..k)
                .map(|i| {
                    (0..r)
                        .map(|c| {
                            let col: Vec<u8> = (0..filter.rows()).map(|j| f.mul(c as u8, filter.get(j, i))).collect();
                            sk.pack(&col)
                        })
                        .collect()
                })
                .collect(),
            _ => Vec::new(),
        };
        Tables { kernel, syndrome, scaled, syn_scaled, syn_len, r, field: f.clone() }
    }

    fn run_with<K: Kernel>(&self, t: Tables<K>, budget: Budget) -> Result<DistanceResult> {
        let k = self.gen.rows() as u32;
        let total = (t.r as u128).checked_pow(k).unwrap_or(u128::MAX);
        if total - 1 <= budget.0 as u128 {
            let best = self.gray_full(&t, total as u64);
            match best.word {
                Some(w) => Ok(DistanceResult::exact(best.weight, Some(w))),
                None => Err(Error::EmptyDifference),
            }
        } else {
            Ok(self.info_set(&t, budget))
        }
    }

    fn gray_full<K: Kernel>(&self, t: &Tables<K>, total: u64) -> Best {
        let workers = worker_count();
        if workers <= 1 || total < (1 << 15) {
            return self.gray_range(t, 0, total);
        }
        let chunks = (workers as u64 * 8).min(total);
        let chunk = total.div_ceil(chunks);
        let next = AtomicU64::new(0);
        let result = Mutex::new(Best::none());
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(|| {
                    let mut local = Best::none();
                    loop {
                        let start = next.fetch_add(chunk, Ordering::Relaxed);
                        if start >= total {
                            break;
                        }
                        local.merge(self.gray_range(t, start, (start + chunk).min(total)));
                    }
                    result.lock().unwrap().merge(local);
                });
            }
        });
        result.into_inner().unwrap()
    }

    /// Visits Gray-code positions `start..end`; digit `i` of the Gray code at
    /// position `t` is `(d_i - d_{i+1}) mod r` for the base-r digits `d` of `t`.
    fn gray_range<K: Kernel>(&self, t: &Tables<K>, start: u64, end: u64) -> Best {
        let k = self.gen.rows();
        let r = t.r as u64;
        let mut counter = vec![0u64; k + 1];
        let mut x = start;
        for d in counter.iter_mut().take(k) {
            *d = x % r;
            x /= r;
        }
        let mut gray: Vec<usize> = (0..k).map(|i| ((counter[i] + r - counter[i + 1]) % r) as usize).collect();

        let len = self.gen.cols();
        let mut word = t.kernel.pack(&vec![0u8; len]);
        let mut syn = t.syndrome.as_ref().map(|sk| sk.pack(&vec![0u8; t.syn_len]));
        for (i, &g) in gray.iter().enumerate() {
            if g != 0 {
                t.kernel.add(&mut word, &t.scaled[i][g]);
                if let (Some(s), Some(sk)) = (syn.as_mut(), t.syndrome.as_ref()) {
                    sk.add(s, &t.syn_scaled[i][g]);
                }
            }
        }

        let mut best = Best::none();
        let mut pos = start;
        loop {
            let skip = match (&syn, &t.syndrome) {
                (Some(s), Some(sk)) => sk.is_zero(s),
                _ => t.kernel.is_zero(&word),
            };
            if !skip {
                let w = t.kernel.weight(&word);
                best.offer(w, || t.kernel.unpack(&word));
            }
            pos += 1;
            if pos >= end {
                break;
            }
            let mut i = 0;
            let mut y = pos;
            while y % r == 0 {
                y /= r;
                i += 1;
            }
            let old = gray[i];
            let new = (old + 1) % t.r;
            gray[i] = new;
            let delta = t.field.sub(new as u8, old as u8) as usize;
            t.kernel.add(&mut word, &t.scaled[i][delta]);
            if let (Some(s), Some(sk)) = (syn.as_mut(), t.syndrome.as_ref()) {
                sk.add(s, &t.syn_scaled[i][delta]);
            }
        }
        best
    }

    fn floor_after_level(&self, w: usize) -> usize {
        match self.wfn {
            WeightFn::Hamming => w + 1,
            WeightFn::Quantum => (w + 1).div_ceil(2),
        }
    }

    fn info_set<K: Kernel>(&self, t: &Tables<K>, budget: Budget) -> DistanceResult {
        let k = self.gen.rows();
        let len = self.gen.cols();
        let mut best = Best::none();
        let mut visits: u64 = 0;
        let mut exact = false;
        let mut completed = 0usize;

        'levels: for level in 1..=k {
            if exact && self.floor_after_level(level - 1) > best.weight {
                break;
            }
            let mut support: Vec<usize> = (0..level).collect();
            loop {
                let mut coefs = vec![1usize; level];
                loop {
                    if visits >= budget.0 {
                        break 'levels;
                    }
                    visits += 1;
                    let mut word = t.kernel.pack(&vec![0u8; len]);
                    let mut syn = t.syndrome.as_ref().map(|sk| sk.pack(&vec![0u8; t.syn_len]));
                    for (&i, &c) in support.iter().zip(&coefs) {
                        t.kernel.add(&mut word, &t.scaled[i][c]);
                        if let (Some(s), Some(sk)) = (syn.as_mut(), t.syndrome.as_ref()) {
                            sk.add(s, &t.syn_scaled[i][c]);
                        }
                    }
                    let in_sub = match (&syn, &t.syndrome) {
                        (Some(s), Some(sk)) => sk.is_zero(s),
                        _ => false,
                    };
                    if !in_sub {
                        best.offer(t.kernel.weight(&word), || t.kernel.unpack(&word));
                    }
                    if !next_coefs(&mut coefs, t.r) {
                        break;
                    }
                }
                if !next_combination(&mut support, k) {
                    break;
                }
            }
            completed = level;
            if best.word.is_some() && best.weight <= self.floor_after_level(level) {
                exact = true;
            }
        }

        if completed == k && best.word.is_some() {
            exact = true;
        }
        if exact {
            DistanceResult::exact(best.weight, best.word)
        } else {
            let floor = self.floor_after_level(completed).max(1).min(best.weight);
            DistanceResult { value: floor, status: DistanceStatus::LowerBoundOnly, witness: best.word }
        }
    }
}

fn next_coefs(coefs: &mut [usize], r: usize) -> bool {
    for c in coefs.iter_mut() {
        *c += 1;
        if *c < r {
            return true;
        }
        *c = 1;
    }
    false
}

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
