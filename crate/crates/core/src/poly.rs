//! Dense univariate polynomials over a [`FieldSpec`].

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{Elem, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial has zero constant term; its reciprocal is undefined")]
    ZeroConstantTerm,
    #[error("coefficient {0} does not lie in the base field")]
    NotInBaseField(Elem),
}

/// Coefficients are stored constant term first with no trailing zeros; the
/// zero polynomial has an empty coefficient vector.
#[derive(Clone)]
pub struct Polynomial {
    field: Arc<FieldSpec>,
    coeffs: Vec<Elem>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.field == *other.field
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({:?} over GF({}))", self.coeffs, self.field.order())
    }
}

impl Polynomial {
    pub fn new(field: &Arc<FieldSpec>, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn zero(field: &Arc<FieldSpec>) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Arc<FieldSpec>) -> Self {
        Self::new(field, vec![1])
    }

    /// `x^n + 1`.
    pub fn x_n_plus_one(field: &Arc<FieldSpec>, n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = 1;
        c[n] = 1;
        Self::new(field, c)
    }

    /// `x - root`.
    pub fn linear(field: &Arc<FieldSpec>, root: Elem) -> Self {
        Self::new(field, vec![field.neg(root), 1])
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check_field(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field,
            "polynomials over different fields"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Polynomial::new(f, c)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Polynomial::new(f, c)
    }

    pub fn scale(&self, s: Elem) -> Polynomial {
        let f = &self.field;
        Polynomial::new(f, self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Polynomial::new(f, out)
    }

    /// Quotient and remainder of long division.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        self.check_field(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(PolyError::ZeroDivisor)?;
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(f), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Polynomial::new(f, quot), Polynomial::new(f, rem)))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// `g(0)^{-1} x^{deg g} g(1/x)`: the reciprocal normalized to be monic.
    pub fn reciprocal(&self) -> Result<Polynomial, PolyError> {
        let c0 = self.coeff(0);
        if c0 == 0 {
            return Err(PolyError::ZeroConstantTerm);
        }
        let rev: Vec<Elem> = self.coeffs.iter().rev().copied().collect();
        Ok(Polynomial::new(&self.field, rev).monic())
    }

    /// Applies `x ↦ x^(p^times)` to every coefficient.
    pub fn map_frobenius(&self, times: u32) -> Polynomial {
        let f = &self.field;
        Polynomial::new(f, self.coeffs.iter().map(|&c| f.frobenius(c, times)).collect())
    }

    /// Rewrites every coefficient through the subfield projection of its field.
    pub fn project(&self) -> Result<Polynomial, PolyError> {
        let sub = self
            .field
            .subfield()
            .map(|s| Arc::clone(s.field()))
            .expect("projection needs a field with an embedded subfield");
        let c = self
            .coeffs
            .iter()
            .map(|&c| self.field.project(c).map_err(|_| PolyError::NotInBaseField(c)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(&sub, c))
    }

    /// Product of `x - r` over `roots`.
    pub fn from_roots(field: &Arc<FieldSpec>, roots: &[Elem]) -> Polynomial {
        let mut c: Vec<Elem> = vec![1];
        for &r in roots {
            let neg_r = field.neg(r);
            let mut next = vec![0; c.len() + 1];
            for (i, &a) in c.iter().enumerate() {
                next[i + 1] = field.add(next[i + 1], a);
                next[i] = field.add(next[i], field.mul(a, neg_r));
            }
            c = next;
        }
        Polynomial::new(field, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u64) -> Arc<FieldSpec> {
        FieldSpec::of_order(q).unwrap()
    }

    #[test]
    fn reciprocal_examples() {
        let f5 = gf(5);
        let g = Polynomial::new(&f5, vec![1, 1]);
        assert_eq!(g.reciprocal().unwrap(), g);

        let f13 = gf(13);
        let g = Polynomial::new(&f13, vec![1, 9, 2, 9, 1]);
        assert_eq!(g.reciprocal().unwrap(), g);

        // x - 3 over GF(7): (1 - 3x) normalized is x - 5.
        let f7 = gf(7);
        let g = Polynomial::new(&f7, vec![4, 1]);
        assert_eq!(g.reciprocal().unwrap(), Polynomial::new(&f7, vec![2, 1]));

        let g = Polynomial::new(&f7, vec![0, 1]);
        assert_eq!(g.reciprocal(), Err(PolyError::ZeroConstantTerm));
    }

    #[test]
    fn division() {
        let f13 = gf(13);
        let g = Polynomial::new(&f13, vec![1, 9, 2, 9, 1]);
        let xn = Polynomial::x_n_plus_one(&f13, 6);
        let (h, r) = xn.div_rem(&g).unwrap();
        assert!(r.is_zero());
        assert_eq!(h.mul(&g), xn);
        assert!(g.divides(&xn));
        assert_eq!(xn.div_rem(&Polynomial::zero(&f13)), Err(PolyError::ZeroDivisor));
    }

    #[test]
    fn from_roots_matches_manual_product() {
        let f13 = gf(13);
        // Roots 2^3, 2^5, 2^7, 2^9 mod 13.
        let g = Polynomial::from_roots(&f13, &[8, 6, 11, 5]);
        assert_eq!(g.coeffs(), &[1, 9, 2, 9, 1]);
        for r in [8, 6, 11, 5] {
            assert_eq!(g.eval(r), 0);
        }
    }

    fn arb_poly(q: u64) -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0..q as u32, 0..8)
    }

    proptest! {
        #[test]
        fn division_identity(a in arb_poly(9), b in arb_poly(9)) {
            let f = gf(9);
            let a = Polynomial::new(&f, a);
            let b = Polynomial::new(&f, b);
            prop_assume!(!b.is_zero());
            let (qt, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(qt.mul(&b).add(&r), a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }

        #[test]
        fn reciprocal_is_involutive(mut c in arb_poly(7)) {
            let f = gf(7);
            c.insert(0, 3);
            let g = Polynomial::new(&f, c).monic();
            let r = g.reciprocal().unwrap();
            prop_assert_eq!(r.reciprocal().unwrap(), g);
        }
    }
}
