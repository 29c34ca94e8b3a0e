//! Minimum distance and MDS verdicts.
//!
//! Three exact methods are tried in order of cost: enumerating the code,
//! enumerating the dual and transforming its weight distribution with the
//! MacWilliams identity, and checking that every maximal square minor of a
//! generator matrix is nonzero. Anything beyond the budget is reported as a
//! bracket between the BCH bound and the Singleton bound.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::code::NegacyclicCode;
use crate::field::{Elem, FieldSpec};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("enumeration of {words} words exceeds the budget of {budget}")]
    OverBudget { words: u128, budget: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest number of codewords enumerated on either side.
    pub words: u64,
    /// Largest number of square minors evaluated for an MDS certificate.
    pub minors: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            words: 10_000_000,
            minors: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Code,
    Dual,
}

/// How a distance claim was established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Evidence {
    /// Every codeword on `side` was enumerated.
    Enumeration { side: Side, words: u64 },
    /// The code's weight distribution came from the dual's by the MacWilliams identity.
    MacWilliams,
    /// `checked` maximal minors of a generator matrix on `side` were evaluated;
    /// `singular` records whether a vanishing one was found.
    Minors { side: Side, checked: u64, singular: bool },
    /// A codeword of this weight was exhibited.
    Witness { weight: u64 },
    BchBound { bound: u64 },
    Singleton { bound: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Exact(u64),
    Bracket { lo: u64, hi: u64 },
}

impl Distance {
    pub fn exact(self) -> Option<u64> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::Bracket { .. } => None,
        }
    }

    pub fn lower(self) -> u64 {
        match self {
            Distance::Exact(d) => d,
            Distance::Bracket { lo, .. } => lo,
        }
    }

    pub fn upper(self) -> u64 {
        match self {
            Distance::Exact(d) => d,
            Distance::Bracket { hi, .. } => hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub distance: Distance,
    pub evidence: Vec<Evidence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MdsVerdict {
    True,
    False,
    Unverified,
}

/// Additive structure used by the enumeration loop: an addition table for
/// small alphabets, field arithmetic otherwise.
struct Adder<'a> {
    field: &'a FieldSpec,
    table: Option<Vec<Elem>>,
    q: usize,
}

impl<'a> Adder<'a> {
    const TABLE_MAX: u32 = 1024;

    fn new(field: &'a FieldSpec) -> Self {
        let q = field.order() as usize;
        let table = (field.order() <= Self::TABLE_MAX && !field.is_prime_field()).then(|| {
            let mut t = vec![0; q * q];
            for a in 0..q {
                for b in 0..q {
                    t[a * q + b] = field.add(a as Elem, b as Elem);
                }
            }
            t
        });
        Self { field, table, q }
    }

    #[inline]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => t[a as usize * self.q + b as usize],
            None if self.field.is_prime_field() => {
                let s = a + b;
                if s >= self.q as u32 {
                    s - self.q as u32
                } else {
                    s
                }
            }
            None => self.field.add(a, b),
        }
    }
}

/// A sparse vector: positions and values.
type Sparse = Vec<(usize, Elem)>;

/// GF(p)-basis of the row space: `β_t · row_r` for the polynomial basis `β_t`.
fn prime_basis(field: &FieldSpec, rows: &[Vec<Elem>]) -> Vec<Sparse> {
    let p = field.characteristic();
    let mut out = Vec::new();
    for row in rows {
        let mut beta: Elem = 1;
        for _ in 0..field.degree() {
            out.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(j, &v)| (j, field.mul(beta, v)))
                    .collect(),
            );
            beta *= p;
        }
    }
    out
}

struct Tally {
    min: u64,
    hist: Option<Vec<u64>>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.min = self.min.min(other.min);
        if let (Some(a), Some(b)) = (&mut self.hist, other.hist) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        self
    }
}

/// Walks every vector of the span of `rows` in a p-ary Gray order, each
/// step adding one basis vector. Returns the minimum nonzero weight and,
/// when asked, the weight histogram.
fn enumerate_span(field: &FieldSpec, n: usize, rows: &[Vec<Elem>], histogram: bool, floor: u64) -> Tally {
    let p = field.characteristic() as u64;
    let basis = prime_basis(field, rows);
    let digits = basis.len();
    let adder = Adder::new(field);
    let total = arith::saturating_pow(p, digits as u64);
    // Split off high digits into independent chunks.
    let mut high = 0;
    if total > 4096 {
        while high < digits && arith::saturating_pow(p, high as u64 + 1) <= 64 {
            high += 1;
        }
    }
    let low = digits - high;
    let chunks = p.pow(high as u32);
    let low_words = p.pow(low as u32);

    let run_chunk = |c: u64| -> Tally {
        let mut word = vec![0 as Elem; n];
        let mut rest = c;
        for i in 0..high {
            let digit = (rest % p) as Elem;
            rest /= p;
            for &(j, v) in &basis[low + i] {
                word[j] = adder.add(word[j], field.mul(digit, v));
            }
        }
        let mut weight = word.iter().filter(|&&x| x != 0).count() as u64;
        let mut hist = histogram.then(|| vec![0u64; n + 1]);
        let mut min = if weight == 0 { u64::MAX } else { weight };
        if let Some(h) = &mut hist {
            h[weight as usize] += 1;
        }
        for t in 1..low_words {
            let mut v = 0;
            let mut x = t;
            while x % p == 0 {
                x /= p;
                v += 1;
            }
            for &(j, val) in &basis[v] {
                let old = word[j];
                let new = adder.add(old, val);
                word[j] = new;
                weight = weight + (new != 0) as u64 - (old != 0) as u64;
            }
            if weight > 0 && weight < min {
                min = weight;
                if hist.is_none() && min <= floor {
                    break;
                }
            }
            if let Some(h) = &mut hist {
                h[weight as usize] += 1;
            }
        }
        Tally { min, hist }
    };

    (0..chunks)
        .into_par_iter()
        .map(run_chunk)
        .reduce(
            || Tally {
                min: u64::MAX,
                hist: histogram.then(|| vec![0; n + 1]),
            },
            Tally::merge,
        )
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<Elem>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn word_count(q: u64, dim: u64) -> u128 {
    arith::saturating_pow(q, dim)
}

/// Weight distribution `A_0..A_n` of the code (`Side::Code`) or its Euclidean
/// dual (`Side::Dual`) by full enumeration.
pub fn weight_distribution(code: &NegacyclicCode, side: Side, budget: Budget) -> Result<Vec<u64>, DistanceError> {
    let (m, dim) = match side {
        Side::Code => (code.generator_matrix(), code.k()),
        Side::Dual => (code.dual_generator_matrix(), code.n() - code.k()),
    };
    let words = word_count(code.q(), dim);
    if words > budget.words as u128 {
        return Err(DistanceError::OverBudget {
            words,
            budget: budget.words,
        });
    }
    let t = enumerate_span(code.field(), code.n() as usize, &matrix_rows(&m), true, 0);
    Ok(t.hist.expect("histogram requested"))
}

/// `A_w` of `D^⊥` from the weight distribution of `D` (dimension `dual_dim` over GF(q)).
fn macwilliams_coefficient(dual: &[u64], q: u64, size: &BigInt, w: usize) -> BigUint {
    let n = dual.len() - 1;
    let qm1 = BigInt::from(q - 1);
    let binom = |a: usize, b: usize| -> BigInt {
        if b > a {
            return BigInt::zero();
        }
        let mut acc = BigInt::one();
        for i in 0..b {
            acc = acc * (a - i) / (i + 1);
        }
        acc
    };
    let mut total = BigInt::zero();
    for (i, &b) in dual.iter().enumerate() {
        if b == 0 {
            continue;
        }
        let mut kraw = BigInt::zero();
        for j in 0..=w.min(i) {
            if w - j > n - i {
                continue;
            }
            let term = binom(i, j) * binom(n - i, w - j) * qm1.pow((w - j) as u32);
            if j % 2 == 0 {
                kraw += term;
            } else {
                kraw -= term;
            }
        }
        total += kraw * BigInt::from(b);
    }
    assert!((&total % size).is_zero(), "MacWilliams transform is integral");
    let a = total / size;
    assert!(!a.is_negative(), "weight counts are nonnegative");
    a.to_biguint().expect("nonnegative")
}

/// MacWilliams transform: the weight distribution of `D^⊥` from that of `D`,
/// where `D` has dimension `dual_dim` over GF(q).
pub fn macwilliams(dual: &[u64], q: u64, dual_dim: u64) -> Vec<BigUint> {
    let size = BigInt::from(q).pow(dual_dim as u32);
    (0..dual.len())
        .map(|w| macwilliams_coefficient(dual, q, &size, w))
        .collect()
}

/// Smallest `w >= 1` with `A_w > 0` in `D^⊥`, computing only the coefficients needed.
pub fn macwilliams_min_weight(dual: &[u64], q: u64, dual_dim: u64) -> u64 {
    let size = BigInt::from(q).pow(dual_dim as u32);
    (1..dual.len())
        .find(|&w| !macwilliams_coefficient(dual, q, &size, w).is_zero())
        .expect("a nonzero code has a nonzero word") as u64
}

pub enum MinorsOutcome {
    AllNonzero { checked: u64 },
    Singular { columns: Vec<usize>, checked: u64 },
}

/// Checks every maximal square minor of `m` (rows ≤ cols) whose column set
/// contains column 0. For generator matrices of negacyclic codes this covers
/// all column sets, because the negacyclic shift rotates columns and only
/// rescales one of them.
pub fn maximal_minors_with_first_column(m: &Matrix) -> MinorsOutcome {
    let r = m.rows();
    let n = m.cols();
    assert!(r >= 1 && r <= n);
    let mut cols: Vec<usize> = (0..r).collect();
    let mut checked = 0u64;
    loop {
        checked += 1;
        if !m.columns(&cols).is_nonsingular() {
            return MinorsOutcome::Singular { columns: cols, checked };
        }
        // Next (r-1)-subset of 1..n in lexicographic order.
        let mut i = r - 1;
        loop {
            if i == 0 {
                return MinorsOutcome::AllNonzero { checked };
            }
            if cols[i] < n - (r - i) {
                cols[i] += 1;
                for t in i + 1..r {
                    cols[t] = cols[t - 1] + 1;
                }
                break;
            }
            i -= 1;
        }
    }
}

fn weight(v: &[Elem]) -> u64 {
    v.iter().filter(|&&x| x != 0).count() as u64
}

/// Exact minimum distance when one of the methods fits the budget, else a bracket.
pub fn minimum_distance(code: &NegacyclicCode, budget: Budget) -> Result<DistanceReport, DistanceError> {
    let (n, k, q) = (code.n(), code.k(), code.q());
    if k == 0 {
        return Err(DistanceError::ZeroCode);
    }
    let bch = code.bch_bound();
    let singleton = code.singleton_bound();
    let code_words = word_count(q, k);
    let dual_words = word_count(q, n - k);
    let fits = |w: u128| w <= budget.words as u128;

    if fits(code_words) && (code_words <= dual_words || !fits(dual_words)) {
        let g = code.generator_matrix();
        let t = enumerate_span(code.field(), n as usize, &matrix_rows(&g), false, bch);
        return Ok(DistanceReport {
            distance: Distance::Exact(t.min),
            evidence: vec![Evidence::Enumeration {
                side: Side::Code,
                words: code_words as u64,
            }],
        });
    }
    if fits(dual_words) {
        let b = weight_distribution(code, Side::Dual, budget)?;
        let d = macwilliams_min_weight(&b, q, n - k);
        return Ok(DistanceReport {
            distance: Distance::Exact(d),
            evidence: vec![
                Evidence::Enumeration {
                    side: Side::Dual,
                    words: dual_words as u64,
                },
                Evidence::MacWilliams,
            ],
        });
    }

    let code_minors = arith::binomial(n - 1, k - 1);
    let dual_minors = arith::binomial(n - 1, n - k - 1);
    let bracket_evidence = vec![
        Evidence::BchBound { bound: bch },
        Evidence::Singleton { bound: singleton },
    ];
    if code_minors.min(dual_minors) <= budget.minors as u128 {
        let (side, m) = if code_minors <= dual_minors {
            (Side::Code, code.generator_matrix())
        } else {
            (Side::Dual, code.dual_generator_matrix())
        };
        return Ok(match maximal_minors_with_first_column(&m) {
            MinorsOutcome::AllNonzero { checked } => DistanceReport {
                distance: Distance::Exact(singleton),
                evidence: vec![Evidence::Minors {
                    side,
                    checked,
                    singular: false,
                }],
            },
            MinorsOutcome::Singular { columns, checked } => {
                let mut evidence = vec![Evidence::Minors {
                    side,
                    checked,
                    singular: true,
                }];
                let mut hi = singleton - 1;
                if side == Side::Code {
                    // A vanishing minor gives a message whose codeword is zero on those columns.
                    let msg = m.columns(&columns).transpose().kernel_vector().expect("singular");
                    let w = weight(&m.vec_mul(&msg));
                    evidence.push(Evidence::Witness { weight: w });
                    hi = hi.min(w);
                }
                evidence.extend(bracket_evidence);
                DistanceReport {
                    distance: bracket(bch, hi),
                    evidence,
                }
            }
        });
    }
    Ok(DistanceReport {
        distance: bracket(bch, singleton),
        evidence: bracket_evidence,
    })
}

fn bracket(lo: u64, hi: u64) -> Distance {
    if lo == hi {
        Distance::Exact(lo)
    } else {
        Distance::Bracket { lo, hi }
    }
}

pub fn mds_verdict(code: &NegacyclicCode, report: &DistanceReport) -> MdsVerdict {
    let singleton = code.singleton_bound();
    match report.distance {
        Distance::Exact(d) if d == singleton => MdsVerdict::True,
        Distance::Exact(_) => MdsVerdict::False,
        Distance::Bracket { hi, .. } if hi < singleton => MdsVerdict::False,
        Distance::Bracket { .. } => MdsVerdict::Unverified,
    }
}

pub fn is_mds(code: &NegacyclicCode, budget: Budget) -> Result<MdsVerdict, DistanceError> {
    Ok(mds_verdict(code, &minimum_distance(code, budget)?))
}

/// Minimum weight by exhaustive enumeration over GF(q)-message vectors with
/// no Gray ordering or chunking. Slow; kept as a test oracle.
pub fn brute_force_distance(code: &NegacyclicCode) -> u64 {
    let k = code.k() as usize;
    let q = code.q();
    let total = q.pow(k as u32);
    let mut best = u64::MAX;
    for idx in 1..total {
        let mut x = idx;
        let msg: Vec<Elem> = (0..k)
            .map(|_| {
                let d = x % q;
                x /= q;
                d as Elem
            })
            .collect();
        best = best.min(weight(&code.encode(&msg).expect("valid message")));
    }
    best
}

/// Sum of the weight distribution, for sanity checks.
pub fn total_words(dist: &[BigUint]) -> u128 {
    dist.iter().map(|a| a.to_u128().unwrap_or(u128::MAX)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_code;
    use std::collections::BTreeSet;

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn small_distances() {
        let c = build_code(5, 3, &set(&[3])).unwrap();
        let r = minimum_distance(&c, Budget::default()).unwrap();
        assert_eq!(r.distance, Distance::Exact(2));
        assert_eq!(brute_force_distance(&c), 2);

        let c = build_code(13, 6, &set(&[3, 5, 7, 9])).unwrap();
        let r = minimum_distance(&c, Budget::default()).unwrap();
        assert_eq!(r.distance, Distance::Exact(5));
        assert_eq!(mds_verdict(&c, &r), MdsVerdict::True);

        let c = build_code(7, 3, &set(&[3])).unwrap();
        assert_eq!(minimum_distance(&c, Budget::default()).unwrap().distance, Distance::Exact(2));
    }

    #[test]
    fn all_methods_agree_on_small_codes() {
        let cases = [
            (9, 5, vec![1, 9]),
            (3, 4, vec![1, 3]),
            (5, 6, vec![1, 5]),
            (7, 4, vec![3, 5]),
            (25, 4, vec![1, 3]),
            (13, 6, vec![1, 11]),
        ];
        for (q, n, z) in cases {
            let c = build_code(q, n, &set(&z)).unwrap();
            let brute = brute_force_distance(&c);
            let direct = weight_distribution(&c, Side::Code, Budget::default()).unwrap();
            let dual = weight_distribution(&c, Side::Dual, Budget::default()).unwrap();
            let mw = macwilliams(&dual, q, n - c.k());
            let direct_big: Vec<BigUint> = direct.iter().map(|&a| BigUint::from(a)).collect();
            assert_eq!(mw, direct_big, "q={q} n={n} z={z:?}");
            assert_eq!(total_words(&mw), (q as u128).pow(c.k() as u32));
            let d = (1..direct.len()).find(|&w| direct[w] > 0).unwrap() as u64;
            assert_eq!(d, brute);
            assert_eq!(macwilliams_min_weight(&dual, q, n - c.k()), brute);

            let tiny = Budget { words: 1, minors: 1_000_000 };
            let r = minimum_distance(&c, tiny).unwrap();
            assert!(r.distance.lower() <= brute && brute <= r.distance.upper(), "{r:?} vs {brute}");
        }
    }

    #[test]
    fn minors_detect_non_mds() {
        // Roots at indices 0 and 2 only: BCH gives 2 while Singleton allows 3.
        let c = build_code(5, 6, &set(&[1, 5])).unwrap();
        let brute = brute_force_distance(&c);
        let r = minimum_distance(&c, Budget { words: 1, minors: 1000 }).unwrap();
        if brute < c.singleton_bound() {
            assert_eq!(mds_verdict(&c, &r), MdsVerdict::False);
            assert!(r.distance.upper() >= brute);
        } else {
            assert_eq!(r.distance, Distance::Exact(brute));
        }
    }

    #[test]
    fn bracket_when_nothing_fits() {
        let c = build_code(13, 6, &set(&[3, 5, 7, 9])).unwrap();
        let r = minimum_distance(&c, Budget { words: 1, minors: 0 }).unwrap();
        assert_eq!(r.distance, Distance::Exact(5));
        let c = build_code(5, 6, &set(&[1, 5])).unwrap();
        let r = minimum_distance(&c, Budget { words: 1, minors: 0 }).unwrap();
        assert_eq!(r.distance, bracket(c.bch_bound(), c.singleton_bound()));
    }
}
