//! Serializable verification certificates for single codes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, NegacyclicCode};
use crate::cosets::LcdMode;
use crate::defining_set::{DistanceClaim, Family, Params, TheoremClaim};
use crate::distance::{self, Budget, Distance, DistanceError, Evidence, MdsVerdict};
use crate::field::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

/// Outcome of comparing a stated `[n, k, d]` against derived values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Unverified,
    PaperTypoSuspected,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Unverified => "unverified",
            Verdict::PaperTypoSuspected => "paper-typo-suspected",
            Verdict::Mismatch => "mismatch",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A field element: an integer over a prime field, a coefficient tuple otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(u32),
    Tuple(Vec<u32>),
}

impl Coefficient {
    fn of(field: &FieldSpec, x: u32) -> Self {
        if field.is_prime_field() {
            Coefficient::Int(x)
        } else {
            Coefficient::Tuple(field.coeffs(x))
        }
    }
}

impl std::fmt::Display for Coefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coefficient::Int(v) => write!(f, "{v}"),
            Coefficient::Tuple(t) => {
                let parts: Vec<String> = t.iter().map(u32::to_string).collect();
                write!(f, "({})", parts.join(" "))
            }
        }
    }
}

/// δ as its coefficient vector over the prime field in the splitting field's basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaRecord {
    pub splitting_degree: u32,
    pub coeffs: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcdRecord {
    /// Root-set criterion.
    pub lcd: bool,
    pub self_reciprocal: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hull: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hull_gram: Option<u64>,
}

impl LcdRecord {
    /// True when every oracle that ran says LCD.
    pub fn all_agree_lcd(&self) -> bool {
        self.lcd && self.self_reciprocal && self.hull.map_or(true, |h| h == 0) && self.hull_gram.map_or(true, |h| h == 0)
    }

    /// True when the oracles that ran give the same answer.
    pub fn consistent(&self) -> bool {
        let l = self.lcd;
        self.self_reciprocal == l
            && self.hull.map_or(true, |h| (h == 0) == l)
            && self.hull_gram.map_or(true, |h| (h == 0) == l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcdFlags {
    pub euclidean: LcdRecord,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hermitian: Option<LcdRecord>,
}

/// Which computation produced a reported value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldEvidence {
    pub field: String,
    pub method: String,
}

fn ev(field: &str, method: impl Into<String>) -> FieldEvidence {
    FieldEvidence {
        field: field.to_string(),
        method: method.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOptions {
    pub budget: Budget,
    /// Matrix hull oracles run only up to this length.
    pub hull_max_n: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            budget: Budget::default(),
            hull_max_n: 400,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<Params>,
    /// Alphabet size.
    pub q: u64,
    pub n: u64,
    #[serde(rename = "Z")]
    pub z: Vec<u64>,
    /// Generator coefficients, constant term first.
    pub g: Vec<Coefficient>,
    pub k: u64,
    pub delta: DeltaRecord,
    pub longest_run: u64,
    pub bch_bound: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d_exact: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d_bracket: Option<[u64; 2]>,
    pub lcd: LcdFlags,
    pub mds: MdsVerdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub claim: Option<TheoremClaim>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub claim_verdict: Option<Verdict>,
    pub distance_evidence: Vec<Evidence>,
    pub evidence: Vec<FieldEvidence>,
    pub notes: Vec<String>,
}

fn square_root(q: u64) -> Option<u64> {
    let r = crate::arith::exact_sqrt(q)?;
    crate::arith::prime_power(r).map(|_| r)
}

impl CodeReport {
    /// Runs every oracle on `code` and assembles the certificate.
    pub fn build(code: &NegacyclicCode, opts: ReportOptions) -> Result<Self, ReportError> {
        let field = code.field();
        let mut evidence = vec![
            ev("Z", "union of q-cyclotomic cosets; closure under multiplication by q mod 2n checked"),
            ev("g", "product of (x - delta^s) over Z in the splitting field, projected to GF(q)"),
            ev("k", "n - deg g; g divides x^n + 1 by exact division"),
            ev("bch_bound", "longest cyclic run of consecutive odd residues in Z, plus one"),
        ];
        let mut notes = Vec::new();

        let run_hull = code.n() <= opts.hull_max_n;
        let lcd_record = |mode: LcdMode| -> Result<LcdRecord, CodeError> {
            Ok(LcdRecord {
                lcd: code.is_lcd(mode)?,
                self_reciprocal: code.is_self_reciprocal(mode)?,
                hull: run_hull.then(|| code.hull_dimension(mode)).transpose()?,
                hull_gram: run_hull.then(|| code.hull_dimension_gram(mode)).transpose()?,
            })
        };
        let euclidean = lcd_record(LcdMode::Euclidean)?;
        let hermitian = square_root(code.q())
            .map(|r| lcd_record(LcdMode::Hermitian(r)))
            .transpose()?;
        let hull_note = if run_hull {
            "root-set test, reciprocal comparison, rank of [G; dual], rank of Gram matrix"
        } else {
            "root-set test and reciprocal comparison; rank oracles skipped at this length"
        };
        evidence.push(ev("lcd", hull_note));
        if !run_hull {
            notes.push(format!("hull rank oracles skipped: n = {} exceeds {}", code.n(), opts.hull_max_n));
        }
        for (name, rec) in [("euclidean", Some(euclidean)), ("hermitian", hermitian)] {
            if let Some(r) = rec {
                if !r.consistent() {
                    notes.push(format!("{name} LCD oracles disagree: {r:?}"));
                }
            }
        }

        let dist = distance::minimum_distance(code, opts.budget)?;
        let mds = distance::mds_verdict(code, &dist);
        let (d_exact, d_bracket) = match dist.distance {
            Distance::Exact(d) => (Some(d), None),
            Distance::Bracket { lo, hi } => (None, Some([lo, hi])),
        };
        evidence.push(ev("d", describe_distance(&dist.evidence, dist.distance)));
        evidence.push(ev("mds", "d compared with the Singleton bound n - k + 1"));
        if let Some(d) = d_exact {
            if d < code.bch_bound() || d > code.singleton_bound() {
                notes.push(format!(
                    "distance {d} outside [bch {}, singleton {}]",
                    code.bch_bound(),
                    code.singleton_bound()
                ));
            }
        }

        let claim = code.family().map(|_| family_claim(code));
        let mut claim_verdict = None;
        if let (Some(claim), Some(family)) = (claim, code.family()) {
            let native = native_lcd(&euclidean, hermitian.as_ref(), family);
            let v = compare(&claim, code.n(), code.k(), dist.distance, native, mds);
            if v == Verdict::Mismatch {
                notes.push(format!("derived {} disagrees with family formula {claim}", derived_label(code.n(), code.k(), dist.distance)));
            }
            claim_verdict = Some(v);
            if family == Family::E1Even {
                notes.push(
                    "even-length E1 uses 2*lambda middle cosets; the variant with 2*lambda+2 cosets, \
                     giving [n, n-2*lambda-2, 2*lambda+3], is this family at lambda+1"
                        .to_string(),
                );
            }
            if matches!(family, Family::H1NonMds | Family::H2NonMds) {
                notes.push(
                    "non-MDS Hermitian set built as [0, n/2-1] U [n/2, n/2+l] U [n-1-l, n-1] with l bounded by (q-c*gamma-1)/(4*gamma)"
                        .to_string(),
                );
            }
        }

        let big_p = field.characteristic() as u64;
        let total_digits = field.degree() * code.splitting_degree();
        let mut x = code.delta() as u64;
        let delta_coeffs = (0..total_digits)
            .map(|_| {
                let d = (x % big_p) as u32;
                x /= big_p;
                d
            })
            .collect();

        Ok(CodeReport {
            family: code.family(),
            params: code.params(),
            q: code.q(),
            n: code.n(),
            z: code.defining_set().iter().copied().collect(),
            g: code.generator().coeffs().iter().map(|&c| Coefficient::of(field, c)).collect(),
            k: code.k(),
            delta: DeltaRecord {
                splitting_degree: code.splitting_degree(),
                coeffs: delta_coeffs,
            },
            longest_run: code.run().longest_run,
            bch_bound: code.bch_bound(),
            d_exact,
            d_bracket,
            lcd: LcdFlags { euclidean, hermitian },
            mds,
            claim,
            claim_verdict,
            distance_evidence: dist.evidence,
            evidence,
            notes,
        })
    }

    pub fn distance(&self) -> Distance {
        match (self.d_exact, self.d_bracket) {
            (Some(d), _) => Distance::Exact(d),
            (None, Some([lo, hi])) => Distance::Bracket { lo, hi },
            (None, None) => unreachable!("a report always carries a distance"),
        }
    }

    /// `[n,k,d]_q`, `[n,k,lo..hi]_q` for a bracket.
    pub fn label(&self) -> String {
        format!("{}_{}", derived_label(self.n, self.k, self.distance()), self.q)
    }

    /// LCD result in the mode the family is defined for, Euclidean for raw codes.
    pub fn native_lcd(&self) -> bool {
        match self.family {
            Some(f) => native_lcd(&self.lcd.euclidean, self.lcd.hermitian.as_ref(), f),
            None => self.lcd.euclidean.all_agree_lcd(),
        }
    }

    pub const CSV_HEADER: [&'static str; 15] = [
        "family", "q", "n", "k", "Z", "g", "bch_bound", "d_exact", "d_bracket", "lcd_euclidean",
        "lcd_hermitian", "mds", "claim", "claim_verdict", "notes",
    ];

    pub fn csv_record(&self) -> Vec<String> {
        let join = |v: Vec<String>| v.join(" ");
        vec![
            self.family.map(|f| f.name().to_string()).unwrap_or_default(),
            self.q.to_string(),
            self.n.to_string(),
            self.k.to_string(),
            join(self.z.iter().map(u64::to_string).collect()),
            join(self.g.iter().map(Coefficient::to_string).collect()),
            self.bch_bound.to_string(),
            self.d_exact.map(|d| d.to_string()).unwrap_or_default(),
            self.d_bracket.map(|[lo, hi]| format!("{lo}..{hi}")).unwrap_or_default(),
            self.lcd.euclidean.lcd.to_string(),
            self.lcd.hermitian.map(|h| h.lcd.to_string()).unwrap_or_default(),
            mds_str(self.mds).to_string(),
            self.claim.map(|c| c.to_string()).unwrap_or_default(),
            self.claim_verdict.map(|v| v.to_string()).unwrap_or_default(),
            self.notes.join("; "),
        ]
    }
}

pub fn mds_str(m: MdsVerdict) -> &'static str {
    match m {
        MdsVerdict::True => "true",
        MdsVerdict::False => "false",
        MdsVerdict::Unverified => "unverified",
    }
}

fn family_claim(code: &NegacyclicCode) -> TheoremClaim {
    let family = code.family().expect("family code");
    let params = code.params().expect("family code");
    let set = family
        .construction()
        .build(&params)
        .expect("family codes come from valid parameters");
    set.claim()
}

fn native_lcd(e: &LcdRecord, h: Option<&LcdRecord>, family: Family) -> bool {
    if family.construction().is_hermitian() {
        h.is_some_and(LcdRecord::all_agree_lcd)
    } else {
        e.all_agree_lcd()
    }
}

pub fn derived_label(n: u64, k: u64, d: Distance) -> String {
    match d {
        Distance::Exact(d) => format!("[{n},{k},{d}]"),
        Distance::Bracket { lo, hi } => format!("[{n},{k},{lo}..{hi}]"),
    }
}

/// Whether derived `(n, k, d)` is consistent with `claim`, given that the code is LCD.
pub fn compare(claim: &TheoremClaim, n: u64, k: u64, d: Distance, lcd: bool, mds: MdsVerdict) -> Verdict {
    if !lcd || claim.n != n || claim.k != k {
        return Verdict::Mismatch;
    }
    if claim.mds && mds == MdsVerdict::False {
        return Verdict::Mismatch;
    }
    match claim.d {
        DistanceClaim::Exact(c) => match d {
            Distance::Exact(v) if v == c => Verdict::Match,
            Distance::Exact(_) => Verdict::Mismatch,
            Distance::Bracket { lo, hi } if lo <= c && c <= hi => Verdict::Unverified,
            Distance::Bracket { .. } => Verdict::Mismatch,
        },
        DistanceClaim::AtLeast(b) => {
            if d.lower() >= b {
                Verdict::Match
            } else if d.upper() < b {
                Verdict::Mismatch
            } else {
                Verdict::Unverified
            }
        }
    }
}

fn describe_distance(evidence: &[Evidence], d: Distance) -> String {
    let parts: Vec<String> = evidence
        .iter()
        .map(|e| match e {
            Evidence::Enumeration { side, words } => format!("enumeration of {words} {side:?} words").to_lowercase(),
            Evidence::MacWilliams => "MacWilliams transform of the dual weight distribution".to_string(),
            Evidence::Minors { side, checked, singular } => format!(
                "{checked} maximal minors of the {} generator matrix{}",
                format!("{side:?}").to_lowercase(),
                if *singular { ", one vanishing" } else { ", all nonzero" }
            ),
            Evidence::Witness { weight } => format!("codeword of weight {weight} exhibited"),
            Evidence::BchBound { bound } => format!("BCH bound {bound}"),
            Evidence::Singleton { bound } => format!("Singleton bound {bound}"),
        })
        .collect();
    let kind = match d {
        Distance::Exact(_) => "exact",
        Distance::Bracket { .. } => "bracket",
    };
    format!("{kind}: {}", parts.join("; "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_code, build_family_code};
    use crate::defining_set::Construction;
    use std::collections::BTreeSet;

    #[test]
    fn raw_code_report() {
        let z: BTreeSet<u64> = [3, 5].into_iter().collect();
        let r = CodeReport::build(&build_code(9, 4, &z).unwrap(), ReportOptions::default()).unwrap();
        assert_eq!(r.label(), "[4,2,3]_9");
        assert!(r.lcd.euclidean.lcd);
        assert_eq!(r.lcd.euclidean.hull, Some(0));
        assert_eq!(r.mds, MdsVerdict::True);
        assert!(r.lcd.hermitian.is_some());
        assert!(matches!(r.g[0], Coefficient::Tuple(_)));
        assert_eq!(r.claim, None);
    }

    #[test]
    fn family_report_matches_claim() {
        let set = Construction::H2.build(&Params::gamma_l(7, 1, 1)).unwrap();
        let r = CodeReport::build(&build_family_code(&set).unwrap(), ReportOptions::default()).unwrap();
        assert_eq!(r.label(), "[6,3,4]_49");
        assert!(r.lcd.hermitian.unwrap().all_agree_lcd());
        assert_eq!(r.claim_verdict, Some(Verdict::Match));
    }

    #[test]
    fn comparison_rules() {
        let exact = TheoremClaim {
            n: 5,
            k: 3,
            d: DistanceClaim::Exact(3),
            mds: true,
        };
        assert_eq!(compare(&exact, 5, 3, Distance::Exact(3), true, MdsVerdict::True), Verdict::Match);
        assert_eq!(compare(&exact, 5, 3, Distance::Exact(3), false, MdsVerdict::True), Verdict::Mismatch);
        assert_eq!(compare(&exact, 5, 2, Distance::Exact(3), true, MdsVerdict::True), Verdict::Mismatch);
        assert_eq!(
            compare(&exact, 5, 3, Distance::Bracket { lo: 2, hi: 3 }, true, MdsVerdict::Unverified),
            Verdict::Unverified
        );
        let bound = TheoremClaim {
            d: DistanceClaim::AtLeast(4),
            mds: false,
            ..exact
        };
        assert_eq!(
            compare(&bound, 5, 3, Distance::Bracket { lo: 4, hi: 5 }, true, MdsVerdict::Unverified),
            Verdict::Match
        );
        assert_eq!(compare(&bound, 5, 3, Distance::Exact(3), true, MdsVerdict::False), Verdict::Mismatch);
    }
}
