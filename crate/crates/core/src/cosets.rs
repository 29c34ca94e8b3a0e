//! Cyclotomic cosets on the odd residues modulo 2n and the LCD closure tests
//! built on them.
//!
//! The roots of `x^n + 1` are the odd powers of a primitive 2n-th root of
//! unity, so every exponent set lives in `{1, 3, ..., 2n - 1}`. Cosets are the
//! orbits of that set under multiplication by the acting base (q for the
//! Euclidean case, q² for the Hermitian case).

use std::collections::BTreeSet;

use thiserror::Error;

use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("length must be positive")]
    ZeroLength,
    #[error("base {base} is not coprime to 2n = {two_n}")]
    NotCoprime { base: u64, two_n: u64 },
    #[error("{s} is not an odd residue modulo {two_n}")]
    NotOddResidue { s: u64, two_n: u64 },
    #[error("hermitian tests need the residue system of q^2 = {expected}, got base {base}")]
    HermitianBase { expected: u64, base: u64 },
    #[error("count precondition violated: {0}")]
    CountPrecondition(String),
}

/// Euclidean or Hermitian inner product; the Hermitian variant records the
/// square root `q` of the alphabet size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase", tag = "mode", content = "q")]
pub enum LcdMode {
    Euclidean,
    Hermitian(u64),
}

/// The odd residues `O = {1 + 2i : 0 <= i < n}` modulo `2n` acted on by `base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddResidueSystem {
    n: u64,
    base: u64,
}

impl OddResidueSystem {
    pub fn new(n: u64, base: u64) -> Result<Self, CosetError> {
        if n == 0 {
            return Err(CosetError::ZeroLength);
        }
        if arith::gcd(base % (2 * n), 2 * n) != 1 {
            return Err(CosetError::NotCoprime { base, two_n: 2 * n });
        }
        Ok(Self { n, base })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn two_n(&self) -> u64 {
        2 * self.n
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn residues(&self) -> impl Iterator<Item = u64> {
        (0..self.n).map(|i| 1 + 2 * i)
    }

    pub fn contains(&self, s: u64) -> bool {
        s % 2 == 1 && s < self.two_n()
    }

    fn check(&self, s: u64) -> Result<(), CosetError> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(CosetError::NotOddResidue { s, two_n: self.two_n() })
        }
    }

    /// Maps `1 + 2j` to `j`.
    pub fn index_of(&self, s: u64) -> u64 {
        (s % self.two_n()) / 2
    }

    /// Maps `j` (taken mod n) to `1 + 2j`.
    pub fn residue_at(&self, j: i64) -> u64 {
        1 + 2 * j.rem_euclid(self.n as i64) as u64
    }

    /// `-k * s mod 2n`.
    pub fn neg_mul(&self, k: u64, s: u64) -> u64 {
        let two_n = self.two_n();
        let prod = ((k % two_n) as u128 * (s % two_n) as u128 % two_n as u128) as u64;
        (two_n - prod) % two_n
    }
}

/// A q-cyclotomic coset, stored sorted with its minimum as representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicCoset {
    members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: u64) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

/// The orbit of `s` under multiplication by the system's base.
pub fn coset(s: u64, sys: &OddResidueSystem) -> Result<CyclotomicCoset, CosetError> {
    sys.check(s)?;
    let two_n = sys.two_n();
    let base = sys.base % two_n;
    let mut members = vec![s];
    let mut x = (s as u128 * base as u128 % two_n as u128) as u64;
    while x != s {
        members.push(x);
        x = (x as u128 * base as u128 % two_n as u128) as u64;
    }
    members.sort_unstable();
    Ok(CyclotomicCoset { members })
}

/// Partition of the odd residues into cosets, ordered by representative.
pub fn all_cosets(sys: &OddResidueSystem) -> Vec<CyclotomicCoset> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in sys.residues() {
        if seen.contains(&s) {
            continue;
        }
        let c = coset(s, sys).expect("odd residue");
        seen.extend(c.members.iter().copied());
        out.push(c);
    }
    out
}

/// The coset containing `-s`.
pub fn negate_coset(c: &CyclotomicCoset, sys: &OddResidueSystem) -> CyclotomicCoset {
    coset(sys.neg_mul(1, c.representative()), sys).expect("negation preserves odd residues")
}

/// The coset containing `-q s`; `sys` must be the q²-system.
pub fn negate_q_coset(
    c: &CyclotomicCoset,
    sys: &OddResidueSystem,
    q: u64,
) -> Result<CyclotomicCoset, CosetError> {
    if sys.base != q * q {
        return Err(CosetError::HermitianBase {
            expected: q * q,
            base: sys.base,
        });
    }
    Ok(coset(sys.neg_mul(q, c.representative()), sys).expect("-q preserves odd residues"))
}

/// Whether the coset is fixed by `s ↦ -s` (Euclidean) or `s ↦ -q s` (Hermitian).
pub fn lcd_coset_test(
    c: &CyclotomicCoset,
    sys: &OddResidueSystem,
    mode: LcdMode,
) -> Result<bool, CosetError> {
    Ok(match mode {
        LcdMode::Euclidean => negate_coset(c, sys) == *c,
        LcdMode::Hermitian(q) => negate_q_coset(c, sys, q)? == *c,
    })
}

/// Whether a residue set is mapped onto itself by the LCD involution.
pub fn is_lcd_closed(set: &BTreeSet<u64>, sys: &OddResidueSystem, mode: LcdMode) -> bool {
    let k = match mode {
        LcdMode::Euclidean => 1,
        LcdMode::Hermitian(q) => q,
    };
    set.iter().all(|&s| set.contains(&sys.neg_mul(k, s)))
}

/// Whether a residue set is a union of cosets of the system's base.
pub fn is_frobenius_closed(set: &BTreeSet<u64>, sys: &OddResidueSystem) -> bool {
    let two_n = sys.two_n();
    set.iter()
        .all(|&s| set.contains(&((s as u128 * (sys.base % two_n) as u128 % two_n as u128) as u64)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LcdCount {
    pub n: u64,
    pub q: u64,
    pub enumerated: u64,
    pub formula: u64,
}

impl LcdCount {
    pub fn agrees(&self) -> bool {
        self.enumerated == self.formula
    }
}

pub const COUNT_MAX_LENGTH: u64 = 30;

/// Number of nontrivial Euclidean LCD negacyclic codes of length `n | (q-1)/2`.
///
/// Enumerates every nonempty proper union of cosets and keeps those with
/// `-Z = Z`; the closed form `2(2^{(n-2)/2} - 1)` (n even) or
/// `2(2^{(n-1)/2} - 1)` (n odd) is reported beside it.
pub fn count_lcd_negacyclic(n: u64, q: u64) -> Result<LcdCount, CosetError> {
    if !arith::is_odd_prime_power(q) {
        return Err(CosetError::CountPrecondition(format!("{q} is not an odd prime power")));
    }
    if n < 3 || (q - 1) / 2 % n != 0 {
        return Err(CosetError::CountPrecondition(format!(
            "need n >= 3 and n | (q-1)/2, got n = {n}, q = {q}"
        )));
    }
    if n > COUNT_MAX_LENGTH {
        return Err(CosetError::CountPrecondition(format!(
            "enumeration is limited to n <= {COUNT_MAX_LENGTH}"
        )));
    }
    let sys = OddResidueSystem::new(n, q)?;
    let cosets = all_cosets(&sys);
    let c = cosets.len();
    let index_of = |s: u64| cosets.iter().position(|cs| cs.contains(s)).expect("partition");
    let image: Vec<usize> = cosets.iter().map(|cs| index_of(negate_coset(cs, &sys).representative())).collect();

    // Image of a mask under the coset permutation, split into two lookup
    // tables so each subset costs two loads.
    let lo_bits = c / 2;
    let hi_bits = c - lo_bits;
    let table = |offset: usize, bits: usize| -> Vec<u64> {
        (0..1u64 << bits)
            .map(|m| {
                (0..bits)
                    .filter(|b| m >> b & 1 == 1)
                    .fold(0u64, |acc, b| acc | 1 << image[offset + b])
            })
            .collect()
    };
    let lo_table = table(0, lo_bits);
    let hi_table = table(lo_bits, hi_bits);
    let lo_mask = (1u64 << lo_bits) - 1;
    let full = (1u64 << c) - 1;
    let enumerated = (1..full)
        .filter(|&m| (lo_table[(m & lo_mask) as usize] | hi_table[(m >> lo_bits) as usize]) == m)
        .count() as u64;

    let half = if n % 2 == 0 { (n - 2) / 2 } else { (n - 1) / 2 };
    let formula = 2 * ((1u64 << half) - 1);
    Ok(LcdCount {
        n,
        q,
        enumerated,
        formula,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn members(c: &CyclotomicCoset) -> Vec<u64> {
        c.members().to_vec()
    }

    #[test]
    fn coset_examples() {
        let sys = OddResidueSystem::new(6, 13).unwrap();
        assert_eq!(members(&coset(1, &sys).unwrap()), vec![1]);
        let sys = OddResidueSystem::new(3, 5).unwrap();
        assert_eq!(members(&coset(1, &sys).unwrap()), vec![1, 5]);
        let sys = OddResidueSystem::new(10, 9).unwrap();
        assert_eq!(members(&coset(5, &sys).unwrap()), vec![5]);
    }

    #[test]
    fn coset_rejects_bad_residues() {
        let sys = OddResidueSystem::new(3, 5).unwrap();
        assert_eq!(coset(2, &sys), Err(CosetError::NotOddResidue { s: 2, two_n: 6 }));
        assert_eq!(coset(7, &sys), Err(CosetError::NotOddResidue { s: 7, two_n: 6 }));
        assert_eq!(OddResidueSystem::new(3, 9), Err(CosetError::NotCoprime { base: 9, two_n: 6 }));
    }

    #[test]
    fn partitions() {
        let sys = OddResidueSystem::new(3, 5).unwrap();
        let all: Vec<_> = all_cosets(&sys).iter().map(members).collect();
        assert_eq!(all, vec![vec![1, 5], vec![3]]);
        let sys = OddResidueSystem::new(6, 13).unwrap();
        assert!(all_cosets(&sys).iter().all(|c| c.len() == 1));
        assert_eq!(all_cosets(&sys).len(), 6);
        let sys = OddResidueSystem::new(20, 19).unwrap();
        let all = all_cosets(&sys);
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn negation_examples() {
        let sys = OddResidueSystem::new(3, 5).unwrap();
        let c3 = coset(3, &sys).unwrap();
        assert_eq!(negate_coset(&c3, &sys), c3);
        assert!(lcd_coset_test(&c3, &sys, LcdMode::Euclidean).unwrap());

        // n = q + 1 = 20, q = 19: no coset is self-negating.
        let sys = OddResidueSystem::new(20, 19).unwrap();
        let c1 = coset(1, &sys).unwrap();
        assert!(!lcd_coset_test(&c1, &sys, LcdMode::Euclidean).unwrap());
        // -C_{1+2j} = C_{1+2((q+1)/2 + j)} at j = 0.
        assert_eq!(negate_coset(&c1, &sys), coset(21, &sys).unwrap());
    }

    #[test]
    fn hermitian_negation_examples() {
        let sys = OddResidueSystem::new(4, 25).unwrap();
        let c1 = coset(1, &sys).unwrap();
        assert_eq!(negate_q_coset(&c1, &sys, 5).unwrap(), coset(3, &sys).unwrap());

        let sys = OddResidueSystem::new(10, 9).unwrap();
        let c5 = coset(5, &sys).unwrap();
        assert_eq!(negate_q_coset(&c5, &sys, 3).unwrap(), c5);
        assert!(lcd_coset_test(&c5, &sys, LcdMode::Hermitian(3)).unwrap());

        let sys = OddResidueSystem::new(12, 169).unwrap();
        let c5 = coset(5, &sys).unwrap();
        assert_eq!(negate_q_coset(&c5, &sys, 13).unwrap(), coset(7, &sys).unwrap());

        let wrong = OddResidueSystem::new(12, 13).unwrap();
        assert!(matches!(
            negate_q_coset(&c5, &wrong, 13),
            Err(CosetError::HermitianBase { .. })
        ));
    }

    #[test]
    fn count_examples() {
        let c = count_lcd_negacyclic(5, 11).unwrap();
        assert_eq!((c.enumerated, c.formula), (6, 6));
        let c = count_lcd_negacyclic(4, 9).unwrap();
        assert_eq!((c.enumerated, c.formula), (2, 2));
        let c = count_lcd_negacyclic(3, 7).unwrap();
        assert_eq!((c.enumerated, c.formula), (2, 2));
        let c = count_lcd_negacyclic(6, 13).unwrap();
        assert_eq!((c.enumerated, c.formula), (6, 6));
        assert!(count_lcd_negacyclic(4, 11).is_err());
        assert!(count_lcd_negacyclic(2, 13).is_err());
        assert!(count_lcd_negacyclic(3, 15).is_err());
    }

    /// Direct oracle: test closure of every union by materialized sets.
    fn count_by_sets(n: u64, q: u64) -> u64 {
        let sys = OddResidueSystem::new(n, q).unwrap();
        let cs = all_cosets(&sys);
        let mut count = 0;
        for mask in 1..(1u64 << cs.len()) - 1 {
            let set: BTreeSet<u64> = cs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, c)| c.members().iter().copied())
                .collect();
            if is_lcd_closed(&set, &sys, LcdMode::Euclidean) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn count_matches_set_oracle() {
        for &(n, q) in &[(3, 7), (4, 9), (5, 11), (6, 13), (8, 17), (9, 19), (7, 29), (12, 25)] {
            assert_eq!(count_lcd_negacyclic(n, q).unwrap().enumerated, count_by_sets(n, q));
        }
    }

    proptest! {
        #[test]
        fn partition_and_closure(n in 1u64..60, qi in 0usize..12, hermitian in any::<bool>()) {
            let qs = [3u64, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29];
            let q = qs[qi];
            let base = if hermitian { q * q } else { q };
            prop_assume!(arith::gcd(q, 2 * n) == 1);
            let sys = OddResidueSystem::new(n, base).unwrap();
            let cosets = all_cosets(&sys);
            let mut covered: Vec<u64> = cosets.iter().flat_map(|c| c.members().to_vec()).collect();
            covered.sort_unstable();
            prop_assert_eq!(covered, sys.residues().collect::<Vec<_>>());
            for c in &cosets {
                prop_assert_eq!(c.representative(), *c.members().iter().min().unwrap());
                for &x in c.members() {
                    prop_assert!(c.contains(x * base % (2 * n)));
                }
                prop_assert_eq!(negate_coset(&negate_coset(c, &sys), &sys), c.clone());
                if hermitian {
                    let once = negate_q_coset(c, &sys, q).unwrap();
                    prop_assert_eq!(negate_q_coset(&once, &sys, q).unwrap(), c.clone());
                }
            }
        }
    }
}
