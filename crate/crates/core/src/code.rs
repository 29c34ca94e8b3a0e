//! Negacyclic codes from defining sets: generator polynomials, matrices,
//! duals, LCD tests and hull dimensions.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::arith;
use crate::cosets::{is_frobenius_closed, CosetError, LcdMode, OddResidueSystem};
use crate::defining_set::{run_analysis, DefiningSet, DefiningSetError, Family, Params, RunAnalysis};
use crate::field::{primitive_2n_root, splitting_degree, Elem, FieldError, FieldSpec};
use crate::linalg::Matrix;
use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    DefiningSet(#[from] DefiningSetError),
    #[error("{s} is not an odd residue modulo 2n = {two_n}")]
    BadResidue { s: u64, two_n: u64 },
    #[error("coefficients not in base field: the defining set is not closed under multiplication by {q} mod {two_n}")]
    NotInBaseField { q: u64, two_n: u64 },
    #[error("empty defining set excluded: it gives the whole space")]
    EmptyDefiningSet,
    #[error("defining set contains every odd residue: the zero code is excluded")]
    ZeroCode,
    #[error("hermitian mode needs alphabet {expected} = {root}^2, code is over GF({alphabet})")]
    NotSquare { root: u64, expected: u64, alphabet: u64 },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("symbol {0} is not an element of the alphabet")]
    BadSymbol(Elem),
}

type Result<T> = std::result::Result<T, CodeError>;

/// GF(q), the splitting field GF(q^m) of `x^n + 1`, and the canonical δ.
#[derive(Debug, Clone)]
pub struct SplittingField {
    q: u64,
    n: u64,
    degree: u32,
    base: Arc<FieldSpec>,
    big: Arc<FieldSpec>,
    delta: Elem,
}

impl SplittingField {
    pub fn new(q: u64, n: u64) -> Result<Self> {
        let base = FieldSpec::of_order(q)?;
        let degree = splitting_degree(q, n)?;
        let big = if degree == 1 {
            Arc::clone(&base)
        } else {
            FieldSpec::extension(&base, degree)?
        };
        let delta = primitive_2n_root(&big, n)?;
        Ok(Self {
            q,
            n,
            degree,
            base,
            big,
            delta,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    pub fn big(&self) -> &Arc<FieldSpec> {
        &self.big
    }

    pub fn delta(&self) -> Elem {
        self.delta
    }

    /// `∏_{s ∈ Z} (x - δ^s)` over GF(q).
    pub fn generator(&self, z: &BTreeSet<u64>) -> Result<Polynomial> {
        let two_n = 2 * self.n;
        if let Some(&s) = z.iter().find(|&&s| s % 2 == 0 || s >= two_n) {
            return Err(CodeError::BadResidue { s, two_n });
        }
        let roots: Vec<Elem> = z
            .iter()
            .map(|&s| self.big.pow(self.delta, s as i64).expect("delta is nonzero"))
            .collect();
        let g = Polynomial::from_roots(&self.big, &roots);
        if self.degree == 1 {
            return Ok(g);
        }
        g.project().map_err(|_| CodeError::NotInBaseField { q: self.q, two_n })
    }
}

/// Generator polynomial of the negacyclic code of length `n` over GF(q) with defining set `z`.
pub fn generator_poly(q: u64, n: u64, z: &BTreeSet<u64>) -> Result<Polynomial> {
    SplittingField::new(q, n)?.generator(z)
}

#[derive(Debug, Clone)]
pub struct NegacyclicCode {
    q: u64,
    n: u64,
    z: BTreeSet<u64>,
    g: Polynomial,
    h: Polynomial,
    delta: Elem,
    splitting_degree: u32,
    run: RunAnalysis,
    family: Option<Family>,
    params: Option<Params>,
}

pub fn build_code(q: u64, n: u64, z: &BTreeSet<u64>) -> Result<NegacyclicCode> {
    build_code_in(&SplittingField::new(q, n)?, z)
}

/// Builds the code for a family set.
pub fn build_family_code(set: &DefiningSet) -> Result<NegacyclicCode> {
    let mut code = build_code(set.alphabet, set.n, &set.elements)?;
    code.family = Some(set.family);
    code.params = Some(set.params);
    Ok(code)
}

/// Builds a code reusing an existing splitting field.
pub fn build_code_in(split: &SplittingField, z: &BTreeSet<u64>) -> Result<NegacyclicCode> {
    if z.is_empty() {
        return Err(CodeError::EmptyDefiningSet);
    }
    let n = split.n;
    let g = split.generator(z)?;
    if z.len() as u64 == n {
        return Err(CodeError::ZeroCode);
    }
    let (h, r) = Polynomial::x_n_plus_one(split.base(), n as usize).div_rem(&g)?;
    debug_assert!(r.is_zero(), "g divides x^n + 1");
    let run = run_analysis(z, n)?;
    Ok(NegacyclicCode {
        q: split.q,
        n,
        z: z.clone(),
        g,
        h,
        delta: split.delta,
        splitting_degree: split.degree,
        run,
        family: None,
        params: None,
    })
}

impl NegacyclicCode {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.n - self.z.len() as u64
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        self.g.field()
    }

    pub fn defining_set(&self) -> &BTreeSet<u64> {
        &self.z
    }

    pub fn generator(&self) -> &Polynomial {
        &self.g
    }

    /// `h(x) = (x^n + 1) / g(x)`.
    pub fn check_polynomial(&self) -> &Polynomial {
        &self.h
    }

    /// δ as an element of the splitting field.
    pub fn delta(&self) -> Elem {
        self.delta
    }

    pub fn splitting_degree(&self) -> u32 {
        self.splitting_degree
    }

    pub fn run(&self) -> RunAnalysis {
        self.run
    }

    pub fn bch_bound(&self) -> u64 {
        self.run.bch_bound
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn params(&self) -> Option<Params> {
        self.params
    }

    /// `n - k + 1`.
    pub fn singleton_bound(&self) -> u64 {
        self.n - self.k() + 1
    }

    fn shifts(&self, p: &Polynomial, count: u64) -> Matrix {
        let n = self.n as usize;
        let rows: Vec<Vec<Elem>> = (0..count as usize)
            .map(|i| {
                let mut row = vec![0; n];
                for (j, &c) in p.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect();
        if rows.is_empty() {
            Matrix::zeros(self.field(), 0, n)
        } else {
            Matrix::from_rows(self.field(), &rows)
        }
    }

    /// `k × n` matrix whose rows are `x^i g(x)`.
    pub fn generator_matrix(&self) -> Matrix {
        self.shifts(&self.g, self.k())
    }

    /// `(n-k) × n` generator matrix of the Euclidean dual, rows `x^i h*(x)`.
    pub fn dual_generator_matrix(&self) -> Matrix {
        let h_star = self.h.reciprocal().expect("h(0) != 0 since h divides x^n + 1");
        self.shifts(&h_star, self.n - self.k())
    }

    /// Exponent `t` with `root = p^t` for Hermitian mode.
    fn conjugation(&self, root: u64) -> Result<u32> {
        let expected = root.checked_mul(root).unwrap_or(u64::MAX);
        let p = self.field().characteristic() as u64;
        if expected != self.q {
            return Err(CodeError::NotSquare {
                root,
                expected,
                alphabet: self.q,
            });
        }
        let (rp, t) = arith::prime_power(root).ok_or(CodeError::NotSquare {
            root,
            expected,
            alphabet: self.q,
        })?;
        debug_assert_eq!(rp, p);
        Ok(t)
    }

    /// Generator matrix of the dual under `mode`.
    pub fn dual_matrix(&self, mode: LcdMode) -> Result<Matrix> {
        let d = self.dual_generator_matrix();
        match mode {
            LcdMode::Euclidean => Ok(d),
            LcdMode::Hermitian(r) => Ok(d.frobenius(self.conjugation(r)?)),
        }
    }

    /// LCD by the root-set criterion: `-Z = Z` or `-rZ = Z` modulo 2n.
    pub fn is_lcd(&self, mode: LcdMode) -> Result<bool> {
        let k = match mode {
            LcdMode::Euclidean => 1,
            LcdMode::Hermitian(r) => {
                self.conjugation(r)?;
                r
            }
        };
        let sys = OddResidueSystem::new(self.n, self.q)?;
        Ok(self.z.iter().all(|&s| self.z.contains(&sys.neg_mul(k, s))))
    }

    /// Whether `g` equals its (Hermitian-conjugated) normalized reciprocal.
    pub fn is_self_reciprocal(&self, mode: LcdMode) -> Result<bool> {
        let rec = self.g.reciprocal()?;
        Ok(match mode {
            LcdMode::Euclidean => rec == self.g,
            LcdMode::Hermitian(r) => rec.map_frobenius(self.conjugation(r)?) == self.g,
        })
    }

    /// `dim(C ∩ C^⊥) = n - rank([G; D])` with `D` the dual generator matrix.
    pub fn hull_dimension(&self, mode: LcdMode) -> Result<u64> {
        let stacked = self.generator_matrix().stack(&self.dual_matrix(mode)?);
        Ok(self.n - stacked.rank() as u64)
    }

    /// `k - rank(G · Ḡᵀ)`, an independent hull computation.
    pub fn hull_dimension_gram(&self, mode: LcdMode) -> Result<u64> {
        let g = self.generator_matrix();
        let conj = match mode {
            LcdMode::Euclidean => g.clone(),
            LcdMode::Hermitian(r) => g.frobenius(self.conjugation(r)?),
        };
        Ok(self.k() - g.mul(&conj.transpose()).rank() as u64)
    }

    /// Coefficients of `m(x) g(x) mod (x^n + 1)`.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        let k = self.k() as usize;
        if message.len() != k {
            return Err(CodeError::LengthMismatch {
                expected: k,
                got: message.len(),
            });
        }
        self.check_symbols(message)?;
        let f = self.field();
        let m = Polynomial::new(f, message.to_vec());
        Ok(self.reduce(&m.mul(&self.g)))
    }

    /// Reduction modulo `x^n + 1` to a length-n vector.
    fn reduce(&self, p: &Polynomial) -> Vec<Elem> {
        let f = self.field();
        let n = self.n as usize;
        let mut out = vec![0; n];
        for (i, &c) in p.coeffs().iter().enumerate() {
            let (slot, wraps) = (i % n, (i / n) % 2 == 1);
            let c = if wraps { f.neg(c) } else { c };
            out[slot] = f.add(out[slot], c);
        }
        out
    }

    fn check_symbols(&self, v: &[Elem]) -> Result<()> {
        let f = self.field();
        match v.iter().find(|&&x| !f.contains(x)) {
            Some(&x) => Err(CodeError::BadSymbol(x)),
            None => Ok(()),
        }
    }

    /// Membership by syndrome against the Euclidean dual.
    pub fn is_codeword(&self, c: &[Elem]) -> Result<bool> {
        if c.len() != self.n as usize {
            return Err(CodeError::LengthMismatch {
                expected: self.n as usize,
                got: c.len(),
            });
        }
        self.check_symbols(c)?;
        let f = self.field();
        let d = self.dual_generator_matrix();
        Ok((0..d.rows()).all(|r| {
            d.row(r)
                .iter()
                .zip(c)
                .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
                == 0
        }))
    }

    /// `(c_0, …, c_{n-1}) ↦ (-c_{n-1}, c_0, …, c_{n-2})`.
    pub fn negacyclic_shift(&self, c: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut out = Vec::with_capacity(c.len());
        if let Some(&last) = c.last() {
            out.push(f.neg(last));
            out.extend_from_slice(&c[..c.len() - 1]);
        }
        out
    }

    /// Whether `z` is closed under multiplication by q modulo 2n.
    pub fn frobenius_closed(q: u64, n: u64, z: &BTreeSet<u64>) -> Result<bool> {
        Ok(is_frobenius_closed(z, &OddResidueSystem::new(n, q)?))
    }
}
