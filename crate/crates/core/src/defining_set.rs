//! The parametrized defining-set families and the consecutive-run analysis
//! that feeds the BCH bound.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::cosets::{coset, is_frobenius_closed, is_lcd_closed, CosetError, LcdMode, OddResidueSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DefiningSetError {
    #[error("q = {0} is not an odd prime power")]
    NotOddPrimePower(u64),
    #[error("{0}")]
    Precondition(String),
    #[error("{name} = {value} is outside the admissible range {lo}..={hi}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("family {family} needs parameter `{name}`")]
    MissingParameter { family: Construction, name: &'static str },
    #[error("parameters give {0}; trivial codes are excluded")]
    Degenerate(&'static str),
    #[error("run analysis of an empty defining set")]
    Empty,
    #[error("constructed set is not closed under {0}")]
    NotClosed(&'static str),
    #[error(transparent)]
    Coset(#[from] CosetError),
}

type Result<T> = std::result::Result<T, DefiningSetError>;

/// Tag recorded on every constructed set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "E1odd")]
    E1Odd,
    #[serde(rename = "E1even")]
    E1Even,
    #[serde(rename = "E2even")]
    E2Even,
    #[serde(rename = "E2odd")]
    E2Odd,
    E3,
    H1,
    #[serde(rename = "H1nonMDS")]
    H1NonMds,
    H2,
    #[serde(rename = "H2nonMDS")]
    H2NonMds,
    H3,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::E1Odd => "E1odd",
            Family::E1Even => "E1even",
            Family::E2Even => "E2even",
            Family::E2Odd => "E2odd",
            Family::E3 => "E3",
            Family::H1 => "H1",
            Family::H1NonMds => "H1nonMDS",
            Family::H2 => "H2",
            Family::H2NonMds => "H2nonMDS",
            Family::H3 => "H3",
        }
    }

    pub fn construction(self) -> Construction {
        match self {
            Family::E1Odd | Family::E1Even => Construction::E1,
            Family::E2Even | Family::E2Odd => Construction::E2,
            Family::E3 => Construction::E3,
            Family::H1 => Construction::H1,
            Family::H1NonMds => Construction::H1NonMds,
            Family::H2 => Construction::H2,
            Family::H2NonMds => Construction::H2NonMds,
            Family::H3 => Construction::H3,
        }
    }

    /// Whether the family asserts the MDS property.
    pub fn claims_mds(self) -> bool {
        !matches!(
            self,
            Family::E3 | Family::H1NonMds | Family::H2NonMds | Family::H3
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A constructor entry point. E1 and E2 pick their parity variant from n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Construction {
    E1,
    E2,
    E3,
    H1,
    H1NonMds,
    H2,
    H2NonMds,
    H3,
}

impl Construction {
    pub const ALL: [Construction; 8] = [
        Construction::E1,
        Construction::E2,
        Construction::E3,
        Construction::H1,
        Construction::H1NonMds,
        Construction::H2,
        Construction::H2NonMds,
        Construction::H3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::E1 => "E1",
            Construction::E2 => "E2",
            Construction::E3 => "E3",
            Construction::H1 => "H1",
            Construction::H1NonMds => "H1nonMDS",
            Construction::H2 => "H2",
            Construction::H2NonMds => "H2nonMDS",
            Construction::H3 => "H3",
        }
    }

    pub fn is_hermitian(self) -> bool {
        matches!(
            self,
            Construction::H1
                | Construction::H1NonMds
                | Construction::H2
                | Construction::H2NonMds
                | Construction::H3
        )
    }

    /// Builds the set named by `p`, reading only the parameters this family uses.
    pub fn build(self, p: &Params) -> Result<DefiningSet> {
        let need = |v: Option<u64>, name| {
            v.ok_or(DefiningSetError::MissingParameter { family: self, name })
        };
        match self {
            Construction::E1 => euclidean_family1(p.q, need(p.n, "n")?, need(p.lambda, "lambda")?),
            Construction::E2 => euclidean_family2(p.q, need(p.n, "n")?, need(p.lambda, "lambda")?),
            Construction::E3 => euclidean_family3(p.q, need(p.lambda, "lambda")?),
            Construction::H1 => hermitian_family1(p.q, need(p.gamma, "gamma")?, need(p.l, "l")?),
            Construction::H1NonMds => {
                hermitian_family1_nonmds(p.q, need(p.gamma, "gamma")?, need(p.l, "l")?)
            }
            Construction::H2 => hermitian_family2(p.q, need(p.gamma, "gamma")?, need(p.l, "l")?),
            Construction::H2NonMds => {
                hermitian_family2_nonmds(p.q, need(p.gamma, "gamma")?, need(p.l, "l")?)
            }
            Construction::H3 => hermitian_family3(p.q, need(p.l, "l")?),
        }
    }

    /// Every parameter tuple this family accepts at `q`, in a fixed order.
    pub fn admissible(self, q: u64) -> Vec<Params> {
        if !arith::is_odd_prime_power(q) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut keep = |p: Params| {
            if self.build(&p).is_ok() {
                out.push(p);
            }
        };
        match self {
            Construction::E1 | Construction::E2 => {
                let m = if self == Construction::E1 { (q - 1) / 2 } else { (q + 1) / 2 };
                for n in arith::divisors(m).into_iter().filter(|&n| n >= 3).rev() {
                    for lambda in 0..n {
                        keep(Params::lambda(q, Some(n), lambda));
                    }
                }
            }
            Construction::E3 => {
                for lambda in 0..=q {
                    keep(Params::lambda(q, None, lambda));
                }
            }
            Construction::H3 => {
                for l in 0..=(q * q) / 4 {
                    keep(Params::l(q, None, l));
                }
            }
            _ => {
                for gamma in arith::divisors(q - 1) {
                    let n = (q - 1) / gamma;
                    for l in 0..n {
                        keep(Params::gamma_l(q, gamma, l));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.to_ascii_lowercase();
        Ok(match key.as_str() {
            "e1" | "e1odd" | "e1even" => Construction::E1,
            "e2" | "e2odd" | "e2even" => Construction::E2,
            "e3" => Construction::E3,
            "h1" => Construction::H1,
            "h1nonmds" => Construction::H1NonMds,
            "h2" => Construction::H2,
            "h2nonmds" => Construction::H2NonMds,
            "h3" => Construction::H3,
            _ => return Err(format!("unknown family `{s}`")),
        })
    }
}

/// Family parameters. `q` is the base field size; Hermitian codes live over GF(q²).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Params {
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
}

impl Params {
    pub fn lambda(q: u64, n: Option<u64>, lambda: u64) -> Self {
        Self {
            q,
            n,
            lambda: Some(lambda),
            ..Self::default()
        }
    }

    pub fn gamma_l(q: u64, gamma: u64, l: u64) -> Self {
        Self {
            q,
            n: Some((q - 1) / gamma),
            gamma: Some(gamma),
            l: Some(l),
            ..Self::default()
        }
    }

    pub fn l(q: u64, n: Option<u64>, l: u64) -> Self {
        Self {
            q,
            n,
            l: Some(l),
            ..Self::default()
        }
    }
}

/// The minimum distance a family asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceClaim {
    Exact(u64),
    AtLeast(u64),
}

impl DistanceClaim {
    pub fn value(self) -> u64 {
        match self {
            DistanceClaim::Exact(d) | DistanceClaim::AtLeast(d) => d,
        }
    }
}

/// `[n, k, d]` as asserted by a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TheoremClaim {
    pub n: u64,
    pub k: u64,
    pub d: DistanceClaim,
    pub mds: bool,
}

impl fmt::Display for TheoremClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            DistanceClaim::Exact(d) => write!(f, "[{},{},{}]", self.n, self.k, d),
            DistanceClaim::AtLeast(d) => write!(f, "[{},{},>={}]", self.n, self.k, d),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSet {
    pub family: Family,
    pub params: Params,
    /// Size of the alphabet the code is defined over: q, or q² for Hermitian sets.
    pub alphabet: u64,
    pub n: u64,
    pub mode: LcdMode,
    pub elements: BTreeSet<u64>,
}

impl DefiningSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn run_analysis(&self) -> RunAnalysis {
        run_analysis(&self.elements, self.n).expect("family sets are nonempty")
    }

    /// Cardinality the family's closed form predicts.
    pub fn expected_size(&self) -> u64 {
        self.n - self.claim().k
    }

    /// `[n, k, d]` stated for this family.
    pub fn claim(&self) -> TheoremClaim {
        let n = self.n;
        let q = self.params.q;
        let lambda = self.params.lambda.unwrap_or(0);
        let l = self.params.l.unwrap_or(0);
        let exact = |k: u64| TheoremClaim {
            n,
            k,
            d: DistanceClaim::Exact(n - k + 1),
            mds: true,
        };
        let bound = |k: u64, d: u64| TheoremClaim {
            n,
            k,
            d: DistanceClaim::AtLeast(d),
            mds: false,
        };
        match self.family {
            Family::E1Odd => exact(n - 2 * lambda - 1),
            Family::E1Even => exact(n - 2 * lambda),
            Family::E2Even | Family::E2Odd => exact(2 * lambda),
            Family::E3 => bound(4 * lambda, (q + 3) / 2 - 2 * lambda),
            Family::H1 => {
                if n % 2 == 0 {
                    exact(n - 2 * l - 2)
                } else {
                    exact(n - 2 * l - 1)
                }
            }
            Family::H2 => exact(n - 2 * l - 1),
            Family::H1NonMds | Family::H2NonMds => bound(n - (n / 2 + 2 * l + 2), n / 2 + l + 2),
            Family::H3 => {
                let k = if q % 4 == 1 { 4 * l } else { 4 * l + 1 };
                bound(k, (q * q - 4 * l + 3) / 2)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunAnalysis {
    pub set_size: u64,
    pub longest_run: u64,
    pub bch_bound: u64,
}

/// Longest block `{1+2j, 1+2(j+1), ...}` inside `z`, with `j` taken mod n.
pub fn run_analysis(z: &BTreeSet<u64>, n: u64) -> Result<RunAnalysis> {
    if z.is_empty() {
        return Err(DefiningSetError::Empty);
    }
    let mut present = vec![false; n as usize];
    for &s in z {
        present[((s % (2 * n)) / 2) as usize] = true;
    }
    let longest = if present.iter().all(|&b| b) {
        n
    } else {
        // Start scanning just after a gap so wrapped runs are counted whole.
        let start = present.iter().position(|&b| !b).unwrap();
        let (mut best, mut cur) = (0u64, 0u64);
        for i in 1..=n as usize {
            if present[(start + i) % n as usize] {
                cur += 1;
                best = best.max(cur);
            } else {
                cur = 0;
            }
        }
        best
    };
    Ok(RunAnalysis {
        set_size: z.len() as u64,
        longest_run: longest,
        bch_bound: longest + 1,
    })
}

fn check_q(q: u64) -> Result<()> {
    if arith::is_odd_prime_power(q) {
        Ok(())
    } else {
        Err(DefiningSetError::NotOddPrimePower(q))
    }
}

fn check_range(name: &'static str, value: u64, lo: i64, hi: i64) -> Result<()> {
    let v = value as i64;
    if v < lo || v > hi {
        Err(DefiningSetError::OutOfRange { name, value: v, lo, hi })
    } else {
        Ok(())
    }
}

fn precondition(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(DefiningSetError::Precondition(msg()))
    }
}

/// Union of the cosets `C_{1+2j}` for `j` in each inclusive index range.
fn union_of(sys: &OddResidueSystem, ranges: &[(i64, i64)]) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for &(a, b) in ranges {
        for j in a..=b {
            let c = coset(sys.residue_at(j), sys).expect("odd residue");
            out.extend(c.members().iter().copied());
        }
    }
    out
}

fn finish(
    family: Family,
    params: Params,
    alphabet: u64,
    n: u64,
    mode: LcdMode,
    elements: BTreeSet<u64>,
) -> Result<DefiningSet> {
    if elements.is_empty() {
        return Err(DefiningSetError::Degenerate("an empty defining set"));
    }
    if elements.len() as u64 == n {
        return Err(DefiningSetError::Degenerate("the zero code"));
    }
    let sys = OddResidueSystem::new(n, alphabet)?;
    if !is_frobenius_closed(&elements, &sys) {
        return Err(DefiningSetError::NotClosed("the Frobenius action"));
    }
    if !is_lcd_closed(&elements, &sys, mode) {
        return Err(DefiningSetError::NotClosed("the LCD involution"));
    }
    Ok(DefiningSet {
        family,
        params,
        alphabet,
        n,
        mode,
        elements,
    })
}

/// Length `n | (q-1)/2`: a consecutive block centred on the middle of the index range.
pub fn euclidean_family1(q: u64, n: u64, lambda: u64) -> Result<DefiningSet> {
    check_q(q)?;
    precondition(n >= 3 && ((q - 1) / 2) % n == 0, || {
        format!("family E1 needs n >= 3 dividing (q-1)/2 = {}, got n = {n}", (q - 1) / 2)
    })?;
    let sys = OddResidueSystem::new(n, q)?;
    let (ni, li) = (n as i64, lambda as i64);
    let params = Params::lambda(q, Some(n), lambda);
    if n % 2 == 1 {
        check_range("lambda", lambda, 0, (ni - 3) / 2)?;
        let c = (ni - 1) / 2;
        let z = union_of(&sys, &[(c - li, c + li)]);
        finish(Family::E1Odd, params, q, n, LcdMode::Euclidean, z)
    } else {
        check_range("lambda", lambda, 1, (ni - 2) / 2)?;
        let z = union_of(&sys, &[(ni / 2 - li, ni / 2 - 1 + li)]);
        finish(Family::E1Even, params, q, n, LcdMode::Euclidean, z)
    }
}

/// Length `n | (q+1)/2`: indices `λ ..= n-1-λ`.
pub fn euclidean_family2(q: u64, n: u64, lambda: u64) -> Result<DefiningSet> {
    check_q(q)?;
    precondition(n >= 3 && ((q + 1) / 2) % n == 0, || {
        format!("family E2 needs n >= 3 dividing (q+1)/2 = {}, got n = {n}", (q + 1) / 2)
    })?;
    let sys = OddResidueSystem::new(n, q)?;
    let ni = n as i64;
    let (family, hi) = if n % 2 == 0 {
        (Family::E2Even, ni / 2 - 1)
    } else {
        (Family::E2Odd, (ni - 1) / 2)
    };
    check_range("lambda", lambda, 1, hi)?;
    let z = union_of(&sys, &[(lambda as i64, hi)]);
    finish(family, Params::lambda(q, Some(n), lambda), q, n, LcdMode::Euclidean, z)
}

/// Length `n = q+1` with `4 | n`.
pub fn euclidean_family3(q: u64, lambda: u64) -> Result<DefiningSet> {
    check_q(q)?;
    precondition((q + 1) % 4 == 0, || format!("family E3 needs 4 | q+1, got q = {q}"))?;
    let n = q + 1;
    let qi = q as i64;
    check_range("lambda", lambda, 1, (qi - 3) / 4)?;
    let sys = OddResidueSystem::new(n, q)?;
    let li = lambda as i64;
    let z = union_of(
        &sys,
        &[(li, (qi - 3) / 4), ((qi + 1) / 2 + li, (3 * qi - 1) / 4)],
    );
    finish(Family::E3, Params::lambda(q, Some(n), lambda), q, n, LcdMode::Euclidean, z)
}

fn hermitian_length(q: u64, gamma: u64, min_n: u64) -> Result<u64> {
    check_q(q)?;
    precondition(gamma >= 1 && (q - 1) % gamma == 0, || {
        format!("gamma = {gamma} must be a positive divisor of q-1 = {}", q - 1)
    })?;
    let n = (q - 1) / gamma;
    precondition(n > min_n, || {
        format!("n = (q-1)/gamma = {n} must exceed {min_n}")
    })?;
    Ok(n)
}

/// `q ≡ 1 (mod 4)`, `n = (q-1)/γ`; the variant follows the parities of γ and n.
pub fn hermitian_family1(q: u64, gamma: u64, l: u64) -> Result<DefiningSet> {
    check_q(q)?;
    precondition(q % 4 == 1, || format!("family H1 needs q ≡ 1 (mod 4), got q = {q}"))?;
    let n = hermitian_length(q, gamma, 2)?;
    let sys = OddResidueSystem::new(n, q * q)?;
    let (qi, gi, ni, li) = (q as i64, gamma as i64, n as i64, l as i64);
    let range = if gamma % 2 == 1 {
        check_range("l", l, 0, (qi - 4 * gi - 1).div_euclid(4 * gi))?;
        (ni / 4 - 1 - li, ni / 4 + li)
    } else if n % 2 == 0 {
        check_range("l", l, 0, (qi - 4 * gi - 1).div_euclid(2 * gi))?;
        (ni / 2 - 1 - li, ni / 2 + li)
    } else {
        check_range("l", l, 0, (qi - 3 * gi - 1).div_euclid(2 * gi))?;
        ((ni - 1) / 2 - li, (ni - 1) / 2 + li)
    };
    let z = union_of(&sys, &[range]);
    finish(Family::H1, Params::gamma_l(q, gamma, l), q * q, n, LcdMode::Hermitian(q), z)
}

/// Shared non-MDS layout: the first half of the indices plus `l+1` indices on
/// each side of the `-q` pairing `n/2 ↔ n-1`.
fn nonmds_set(sys: &OddResidueSystem, n: u64, l: u64) -> BTreeSet<u64> {
    let (ni, li) = (n as i64, l as i64);
    union_of(
        sys,
        &[(0, ni / 2 - 1), (ni / 2, ni / 2 + li), (ni - 1 - li, ni - 1)],
    )
}

/// Non-MDS extension for `q ≡ 1 (mod 4)`, odd γ.
pub fn hermitian_family1_nonmds(q: u64, gamma: u64, l: u64) -> Result<DefiningSet> {
    check_q(q)?;
    precondition(q % 4 == 1, || format!("family H1nonMDS needs q ≡ 1 (mod 4), got q = {q}"))?;
    precondition(gamma % 2 == 1, || format!("family H1nonMDS needs odd gamma, got {gamma}"))?;
    let n = hermitian_length(q, gamma, 4)?;
    let (qi, gi) = (q as i64, gamma as i64);
    check_range("l", l, 0, (qi - 8 * gi - 1).div_euclid(4 * gi))?;
    let sys = OddResidueSystem::new(n, q * q)?;
    let z = nonmds_set(&sys, n, l);
    finish(Family::H1NonMds, Params::gamma_l(q, gamma, l), q * q, n, LcdMode::Hermitian(q), z)
}

/// `q ≡ 3 (mod 4)`, `n = (q-1)/γ`: a block of `2l+1` indices around the `-q` fixed point.
pub fn hermitian_family2(q: u64, gamma: u64, l: u64) -> Result<DefiningSet> {
    check_q(q)?;
    precondition(q % 4 == 3, || format!("family H2 needs q ≡ 3 (mod 4), got q = {q}"))?;
    let n = hermitian_length(q, gamma, 2)?;
    let (qi, gi, ni, li) = (q as i64, gamma as i64, n as i64, l as i64);
    let centre = if gamma % 2 == 1 {
        check_range("l", l, 0, (qi - 2 * gi - 1).div_euclid(4 * gi))?;
        (ni - 2) / 4
    } else {
        check_range("l", l, 0, (qi - 3 * gi - 1).div_euclid(2 * gi))?;
        (ni - 1) / 2
    };
    let sys = OddResidueSystem::new(n, q * q)?;
    let z = union_of(&sys, &[(centre - li, centre + li)]);
    finish(Family::H2, Params::gamma_l(q, gamma, l), q * q, n, LcdMode::Hermitian(q), z)
}

/// Non-MDS extension for `q ≡ 3 (mod 4)`, odd γ.
pub fn hermitian_family2_nonmds(q: u64, gamma: u64, l: u64) -> Result<DefiningSet> {
    check_q(q)?;
    precondition(q % 4 == 3, || format!("family H2nonMDS needs q ≡ 3 (mod 4), got q = {q}"))?;
    precondition(gamma % 2 == 1, || format!("family H2nonMDS needs odd gamma, got {gamma}"))?;
    let n = hermitian_length(q, gamma, 4)?;
    let (qi, gi) = (q as i64, gamma as i64);
    check_range("l", l, 0, (qi - 6 * gi - 1).div_euclid(4 * gi))?;
    let sys = OddResidueSystem::new(n, q * q)?;
    let z = nonmds_set(&sys, n, l);
    finish(Family::H2NonMds, Params::gamma_l(q, gamma, l), q * q, n, LcdMode::Hermitian(q), z)
}

/// Length `n = q²+1`: `Z̄₁ ∪ -qZ̄₁` with `Z̄₁` the cosets `C_{1+2j}`, `l <= j <= (q²-1)/4`.
pub fn hermitian_family3(q: u64, l: u64) -> Result<DefiningSet> {
    check_q(q)?;
    let n = q * q + 1;
    let qi = q as i64;
    let floor = if q % 4 == 1 {
        (qi - 1) * (qi - 1) / 4
    } else {
        (qi - 1) * (qi - 3) / 4
    };
    let top = (qi * qi - 1) / 4;
    check_range("l", l, floor, top)?;
    let sys = OddResidueSystem::new(n, q * q)?;
    let z1 = union_of(&sys, &[(l as i64, top)]);
    let mut z = z1.clone();
    z.extend(z1.iter().map(|&s| sys.neg_mul(q, s)));
    finish(Family::H3, Params::l(q, Some(n), l), q * q, n, LcdMode::Hermitian(q), z)
}

/// `Z̄₁` and `-qZ̄₁` for the length-`q²+1` family, exposed for the overlap check.
pub fn hermitian_family3_halves(q: u64, l: u64) -> Result<(BTreeSet<u64>, BTreeSet<u64>)> {
    let full = hermitian_family3(q, l)?;
    let sys = OddResidueSystem::new(full.n, q * q)?;
    let top = ((q * q - 1) / 4) as i64;
    let z1 = union_of(&sys, &[(l as i64, top)]);
    let neg = z1.iter().map(|&s| sys.neg_mul(q, s)).collect();
    Ok((z1, neg))
}
