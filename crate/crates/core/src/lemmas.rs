//! Closed-form coset descriptions for the lengths used by the code families,
//! each checked member-for-member against direct orbit computation.

use std::collections::BTreeSet;

use crate::arith;
use crate::cosets::{coset, CosetError, OddResidueSystem};

/// A closed-form coset description and the lengths it applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CosetLemma {
    /// `n | (q-1)/2`: singleton cosets, `-C_{1+2j} = C_{1+2(n-1-j)}`.
    SingletonNegation,
    /// `n | (q+1)/2`: cosets `{1+2j, 1+2(n-1-j)}`, all self-negating.
    ReflectedPairs,
    /// `n = q+1`, `4 | n`: two pair shapes and `-C_{1+2j} = C_{1+2((q+1)/2+j)}`.
    LengthQPlusOne,
    /// `n = (q-1)/γ` under `q²`: singletons and the action of `-q`.
    HermitianDivisor,
    /// `n = q²+1` under `q²`: pair/singleton shapes and the `-q` fixed coset.
    HermitianQSquaredPlusOne,
}

impl CosetLemma {
    pub const ALL: [CosetLemma; 5] = [
        CosetLemma::SingletonNegation,
        CosetLemma::ReflectedPairs,
        CosetLemma::LengthQPlusOne,
        CosetLemma::HermitianDivisor,
        CosetLemma::HermitianQSquaredPlusOne,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CosetLemma::SingletonNegation => "singleton-negation",
            CosetLemma::ReflectedPairs => "reflected-pairs",
            CosetLemma::LengthQPlusOne => "length-q-plus-one",
            CosetLemma::HermitianDivisor => "hermitian-divisor",
            CosetLemma::HermitianQSquaredPlusOne => "hermitian-q-squared-plus-one",
        }
    }

    pub fn applies(&self, q: u64, n: u64) -> bool {
        if !arith::is_odd_prime_power(q) || n == 0 {
            return false;
        }
        match self {
            CosetLemma::SingletonNegation => n >= 3 && ((q - 1) / 2) % n == 0,
            CosetLemma::ReflectedPairs => n >= 3 && ((q + 1) / 2) % n == 0,
            CosetLemma::LengthQPlusOne => n == q + 1 && n % 4 == 0,
            CosetLemma::HermitianDivisor => n >= 2 && (q - 1) % n == 0,
            CosetLemma::HermitianQSquaredPlusOne => n == q * q + 1,
        }
    }

    /// Every `(q, n)` with `2n <= max_two_n` the description applies to, over
    /// odd prime powers `q <= q_max`.
    pub fn admissible(&self, max_two_n: u64, q_max: u64) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for q in (3..=q_max).filter(|&q| arith::is_odd_prime_power(q)) {
            for n in 1..=max_two_n / 2 {
                if self.applies(q, n) {
                    out.push((q, n));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub lemma: CosetLemma,
    pub q: u64,
    pub n: u64,
    pub statements: usize,
    pub mismatches: Vec<String>,
}

struct Checker {
    sys: OddResidueSystem,
    statements: usize,
    mismatches: Vec<String>,
}

impl Checker {
    fn orbit(&self, j: i64) -> BTreeSet<u64> {
        coset(self.sys.residue_at(j), &self.sys)
            .expect("odd residue")
            .members()
            .iter()
            .copied()
            .collect()
    }

    fn predicted(&self, js: &[i64]) -> BTreeSet<u64> {
        js.iter().map(|&j| self.sys.residue_at(j)).collect()
    }

    /// `C_{1+2j}` equals the set `{1+2i : i in js}`.
    fn shape(&mut self, j: i64, js: &[i64]) {
        self.statements += 1;
        let (got, want) = (self.orbit(j), self.predicted(js));
        if got != want {
            self.mismatches
                .push(format!("C_{} = {:?}, predicted {:?}", self.sys.residue_at(j), got, want));
        }
    }

    /// `-k C_{1+2j} = C_{1+2i}`.
    fn image(&mut self, k: u64, j: i64, i: i64) {
        self.statements += 1;
        let s = self.sys.neg_mul(k, self.sys.residue_at(j));
        let got: BTreeSet<u64> = coset(s, &self.sys).unwrap().members().iter().copied().collect();
        let want = self.orbit(i);
        if got != want {
            self.mismatches.push(format!(
                "-{k}·C_{} = {:?}, predicted C_{} = {:?}",
                self.sys.residue_at(j),
                got,
                self.sys.residue_at(i),
                want
            ));
        }
    }

    /// `-k C_{1+2j} != C_{1+2i}`.
    fn image_differs(&mut self, k: u64, j: i64, i: i64) {
        self.statements += 1;
        let s = self.sys.neg_mul(k, self.sys.residue_at(j));
        let got: BTreeSet<u64> = coset(s, &self.sys).unwrap().members().iter().copied().collect();
        if got == self.orbit(i) {
            self.mismatches.push(format!(
                "-{k}·C_{} unexpectedly equals C_{}",
                self.sys.residue_at(j),
                self.sys.residue_at(i)
            ));
        }
    }

    /// The cosets named by `reps` cover every odd residue.
    fn covers(&mut self, reps: &[i64]) {
        self.statements += 1;
        let union: BTreeSet<u64> = reps.iter().flat_map(|&j| self.orbit(j)).collect();
        if union.len() as u64 != self.sys.n() {
            self.mismatches.push(format!(
                "listed cosets cover {} of {} residues",
                union.len(),
                self.sys.n()
            ));
        }
    }
}

/// Checks every statement of `lemma` at `(q, n)` against orbit computation.
pub fn check_lemma(lemma: CosetLemma, q: u64, n: u64) -> Result<LemmaCheck, CosetError> {
    if !lemma.applies(q, n) {
        return Err(CosetError::CountPrecondition(format!(
            "{} does not apply to q = {q}, n = {n}",
            lemma.name()
        )));
    }
    let hermitian = matches!(
        lemma,
        CosetLemma::HermitianDivisor | CosetLemma::HermitianQSquaredPlusOne
    );
    let base = if hermitian { q * q } else { q };
    let mut c = Checker {
        sys: OddResidueSystem::new(n, base)?,
        statements: 0,
        mismatches: Vec::new(),
    };
    let ni = n as i64;
    let qi = q as i64;
    match lemma {
        CosetLemma::SingletonNegation => {
            for j in 0..ni {
                c.shape(j, &[j]);
                c.image(1, j, ni - j - 1);
            }
            if ni % 2 == 1 {
                let j = (ni - 1) / 2;
                c.image(1, j, j);
            }
        }
        CosetLemma::ReflectedPairs => {
            let last_pair = if ni % 2 == 0 { ni / 2 - 1 } else { (ni - 3) / 2 };
            let mut reps = Vec::new();
            for j in 0..=last_pair {
                c.shape(j, &[j, ni - 1 - j]);
                reps.push(j);
            }
            if ni % 2 == 1 {
                let j = (ni - 1) / 2;
                c.shape(j, &[j]);
                reps.push(j);
            }
            c.covers(&reps);
            for j in 0..ni {
                c.image(1, j, j);
            }
        }
        CosetLemma::LengthQPlusOne => {
            let mut reps = Vec::new();
            for j in 0..=(qi - 3) / 4 {
                c.shape(j, &[j, (qi - 1) / 2 - j]);
                reps.push(j);
            }
            for j in (qi + 1) / 2..=(3 * qi - 1) / 4 {
                c.shape(j, &[j, ni + (qi - 1) / 2 - j]);
                reps.push(j);
            }
            c.covers(&reps);
            for j in 0..=(qi - 3) / 4 {
                c.image(1, j, (qi + 1) / 2 + j);
            }
            for j in 0..ni {
                c.image_differs(1, j, j);
            }
        }
        CosetLemma::HermitianDivisor => {
            let gamma = (qi - 1) / ni;
            for j in 0..ni {
                c.shape(j, &[j]);
            }
            if gamma % 2 == 1 {
                for j in 0..=ni / 2 - 1 {
                    c.image(q, j, ni / 2 - 1 - j);
                }
                for j in ni / 2 + 1..ni {
                    c.image(q, j, 3 * ni / 2 - 1 - j);
                }
            } else {
                for j in 0..ni {
                    c.image(q, j, ni - 1 - j);
                }
            }
        }
        CosetLemma::HermitianQSquaredPlusOne => {
            // Residues: the pair {1+2j, n-1-2j} is indices {j, (n-2)/2 - j};
            // {1+2j, 3n-1-2j} is indices {j, (3n-2)/2 - j}.
            let mut reps = Vec::new();
            for j in 0..(ni - 2) / 4 {
                c.shape(j, &[j, (ni - 2) / 2 - j]);
                reps.push(j);
            }
            c.shape((ni - 2) / 4, &[(ni - 2) / 4]);
            reps.push((ni - 2) / 4);
            for j in ni / 2..(3 * ni - 2) / 4 {
                c.shape(j, &[j, (3 * ni - 2) / 2 - j]);
                reps.push(j);
            }
            c.shape((3 * ni - 2) / 4, &[(3 * ni - 2) / 4]);
            reps.push((3 * ni - 2) / 4);
            c.covers(&reps);
            if qi % 4 == 3 {
                let top = (qi * qi - 1) / 4;
                c.image(q, top, top);
                let low = (qi - 1) * (qi - 3) / 4;
                for j in low..top {
                    for k in low..top {
                        c.image_differs(q, j, k);
                    }
                }
            }
        }
    }
    Ok(LemmaCheck {
        lemma,
        q,
        n,
        statements: c.statements,
        mismatches: c.mismatches,
    })
}
