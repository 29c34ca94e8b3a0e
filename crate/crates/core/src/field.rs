//! Exact arithmetic in GF(p^m) for odd primes p.
//!
//! Elements are encoded as `u32` values: the coefficient vector
//! `(c_0, ..., c_{m-1})` of the polynomial-basis representation read as the
//! base-p integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. The same encoding
//! orders candidates when searching for the modulus and the primitive element,
//! so every run agrees on representations.
//!
//! Fields of order at most 2^20 carry exp/log tables; larger fields fall back
//! to schoolbook arithmetic on the coefficient digits.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith;

/// A field element in the `u32` encoding of its owning [`FieldSpec`].
pub type Elem = u32;

const MAX_DEGREE: usize = 20;
const TABLE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{m}) does not fit the 32-bit element encoding")]
    TooLarge { p: u64, m: u32 },
    #[error("modulus is not a monic irreducible polynomial of the stated degree")]
    Reducible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedOwners,
    #[error("2n = {two_n} does not divide |F| - 1 = {group_order}; the splitting field is larger")]
    NoRootOfUnity { two_n: u64, group_order: u64 },
    #[error("gcd(n = {n}, q = {q}) != 1: x^n + 1 has repeated roots")]
    RepeatedRoots { n: u64, q: u64 },
    #[error("element {0} does not lie in the embedded subfield")]
    NotInSubfield(Elem),
    #[error("field carries no subfield embedding")]
    NoSubfield,
}

/// Embedding of a subfield `GF(p^s)` into its owning field.
#[derive(Debug)]
pub struct Subfield {
    field: Arc<FieldSpec>,
    images: Vec<Elem>,
    preimages: HashMap<Elem, Elem>,
}

impl Subfield {
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }
}

#[derive(Debug)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field GF(p^m) with a fixed monic irreducible modulus.
pub struct FieldSpec {
    p: u32,
    degree: u32,
    order: u32,
    /// Monic modulus, constant term first, length `degree + 1`.
    modulus: Vec<u32>,
    primitive: Elem,
    tables: Option<LogTables>,
    subfield: Option<Subfield>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .field("subfield_order", &self.subfield.as_ref().map(|s| s.field.order))
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds GF(p^m) using the lexicographically smallest monic irreducible
    /// modulus of degree `m`.
    pub fn new(p: u64, m: u32) -> Result<Arc<Self>, FieldError> {
        Self::build(p, m).map(Arc::new)
    }

    /// Builds GF(q) for an odd prime power `q`.
    pub fn of_order(q: u64) -> Result<Arc<Self>, FieldError> {
        match arith::prime_power(q) {
            Some((p, s)) if p % 2 == 1 => Self::new(p, s),
            _ => Err(FieldError::NotOddPrimePower(q)),
        }
    }

    /// Builds GF(p^m) over an explicit modulus (constant term first, monic).
    pub fn with_modulus(p: u64, modulus: &[u32]) -> Result<Arc<Self>, FieldError> {
        check_prime(p)?;
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(FieldError::Reducible);
        }
        let m = (modulus.len() - 1) as u32;
        check_size(p, m)?;
        if modulus.iter().any(|&c| c as u64 >= p) || !is_irreducible(modulus, p as u32) {
            return Err(FieldError::Reducible);
        }
        Ok(Arc::new(Self::assemble(p as u32, modulus.to_vec())))
    }

    /// Builds GF(p^{s m}) together with an explicit embedding of
    /// `base = GF(p^s)`.
    pub fn extension(base: &Arc<FieldSpec>, m: u32) -> Result<Arc<Self>, FieldError> {
        let mut big = Self::build(base.p as u64, base.degree * m)?;
        big.subfield = Some(embed_subfield(&big, base));
        Ok(Arc::new(big))
    }

    fn build(p: u64, m: u32) -> Result<Self, FieldError> {
        check_prime(p)?;
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        check_size(p, m)?;
        let p32 = p as u32;
        let count = p.pow(m);
        let modulus = (0..count)
            .map(|idx| {
                let mut f = digits_of(idx, p, m as usize);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p32))
            .expect("an irreducible polynomial exists in every degree");
        Ok(Self::assemble(p32, modulus))
    }

    fn assemble(p: u32, modulus: Vec<u32>) -> Self {
        let degree = (modulus.len() - 1) as u32;
        let order = (p as u64).pow(degree) as u32;
        let mut field = FieldSpec {
            p,
            degree,
            order,
            modulus,
            primitive: 0,
            tables: None,
            subfield: None,
        };
        field.primitive = (2..order)
            .find(|&g| field.has_full_order(g))
            .expect("every finite field has a primitive element");
        if (order as u64) <= TABLE_LIMIT {
            field.tables = Some(field.make_tables());
        }
        field
    }

    fn make_tables(&self) -> LogTables {
        let n = (self.order - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; self.order as usize];
        let mut x: Elem = 1;
        for i in 0..n {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, self.primitive);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        LogTables { exp, log }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements `p^m`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn subfield(&self) -> Option<&Subfield> {
        self.subfield.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// Encodes an integer as an element of the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        v.rem_euclid(self.p as i64) as Elem
    }

    /// Polynomial-basis coefficients of `x`, constant term first.
    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        digits_of(x as u64, self.p as u64, self.degree as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Elem {
        coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + (c % self.p) as u64) as Elem
    }

    pub fn contains(&self, x: Elem) -> bool {
        x < self.order
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            return ((a as u64 + b as u64) % self.p as u64) as Elem;
        }
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for i in 0..self.degree {
            let d = (a % p + b % p) % p;
            out += d * place;
            a /= p;
            b /= p;
            if i + 1 < self.degree {
                place *= p;
            }
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.degree == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let p = self.p;
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for i in 0..self.degree {
            let d = a % p;
            out += ((p - d) % p) * place;
            a /= p;
            if i + 1 < self.degree {
                place *= p;
            }
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as Elem;
        }
        let m = self.degree as usize;
        let p = self.p as u64;
        let da = digit_array(a, self.p, m);
        let db = digit_array(b, self.p, m);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] += da[i] as u64 * db[j] as u64;
            }
        }
        for i in (m..2 * m - 1).rev() {
            let c = prod[i] % p;
            prod[i] = 0;
            if c == 0 {
                continue;
            }
            for j in 0..m {
                prod[i - m + j] += c * ((p - self.modulus[j] as u64) % p);
            }
        }
        let mut out = 0u64;
        for i in (0..m).rev() {
            out = out * p + prod[i] % p;
        }
        out as Elem
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => t.exp[((self.order - 1 - t.log[a as usize]) % (self.order - 1)) as usize],
            None => self.pow_u(a, self.order as u64 - 2),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn pow_u(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let n = (self.order - 1) as u64;
            let l = (t.log[a as usize] as u64 * (e % n)) % n;
            return t.exp[l as usize];
        }
        let mut acc: Elem = 1;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for any integer exponent; negative exponents go through the inverse.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem, FieldError> {
        if e >= 0 {
            Ok(self.pow_u(a, e as u64))
        } else {
            let inv = self.inv(a)?;
            Ok(self.pow_u(inv, e.unsigned_abs()))
        }
    }

    /// `x ↦ x^(p^times)`.
    pub fn frobenius(&self, x: Elem, times: u32) -> Elem {
        (0..times).fold(x, |acc, _| self.pow_u(acc, self.p as u64))
    }

    /// The canonical primitive element: the first encoding, starting at 2,
    /// whose multiplicative order is `p^m - 1`.
    pub fn primitive_element(&self) -> Elem {
        self.primitive
    }

    pub fn element_order(&self, x: Elem) -> Option<u64> {
        if x == 0 {
            return None;
        }
        let n = self.order as u64 - 1;
        let mut ord = n;
        for r in arith::prime_factors(n) {
            while ord % r == 0 && self.pow_u(x, ord / r) == 1 {
                ord /= r;
            }
        }
        Some(ord)
    }

    fn has_full_order(&self, g: Elem) -> bool {
        let n = self.order as u64 - 1;
        g != 0
            && self.pow_u(g, n) == 1
            && arith::prime_factors(n).into_iter().all(|r| self.pow_u(g, n / r) != 1)
    }

    /// Maps an element of the embedded subfield into this field.
    pub fn embed(&self, x: Elem) -> Result<Elem, FieldError> {
        let sub = self.subfield.as_ref().ok_or(FieldError::NoSubfield)?;
        sub.images.get(x as usize).copied().ok_or(FieldError::NotInSubfield(x))
    }

    /// Inverse of [`embed`](Self::embed); rejects exactly the elements with
    /// `x^|sub| != x`.
    pub fn project(&self, x: Elem) -> Result<Elem, FieldError> {
        let sub = self.subfield.as_ref().ok_or(FieldError::NoSubfield)?;
        if self.pow_u(x, sub.field.order as u64) != x {
            return Err(FieldError::NotInSubfield(x));
        }
        sub.preimages.get(&x).copied().ok_or(FieldError::NotInSubfield(x))
    }
}

fn check_prime(p: u64) -> Result<(), FieldError> {
    if p % 2 == 0 || !arith::is_prime(p) {
        Err(FieldError::NotOddPrime(p))
    } else {
        Ok(())
    }
}

fn check_size(p: u64, m: u32) -> Result<(), FieldError> {
    let fits = (m as usize) <= MAX_DEGREE
        && p.checked_pow(m).is_some_and(|o| o < u32::MAX as u64)
        && (m == 1 || p < (1 << 16));
    if fits {
        Ok(())
    } else {
        Err(FieldError::TooLarge { p, m })
    }
}

fn digits_of(mut x: u64, p: u64, m: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push((x % p) as u32);
        x /= p;
    }
    out
}

fn digit_array(mut x: u32, p: u32, m: usize) -> [u32; MAX_DEGREE] {
    let mut out = [0u32; MAX_DEGREE];
    for d in out.iter_mut().take(m) {
        *d = x % p;
        x /= p;
    }
    out
}

fn embed_subfield(big: &FieldSpec, base: &Arc<FieldSpec>) -> Subfield {
    let q = base.order;
    let images: Vec<Elem> = if base.degree == 1 {
        (0..q).collect()
    } else {
        // Roots of the base modulus all lie in the unique subfield of order q,
        // generated by alpha^((P-1)/(q-1)); scanning it finds every root.
        let beta = big.pow_u(big.primitive, (big.order as u64 - 1) / (q as u64 - 1));
        let eval = |r: Elem| {
            base.modulus
                .iter()
                .rev()
                .fold(0, |acc, &c| big.add(big.mul(acc, r), c))
        };
        let mut r: Elem = 1;
        let mut root = None;
        for _ in 0..q - 1 {
            if eval(r) == 0 && root.is_none_or(|best| r < best) {
                root = Some(r);
            }
            r = big.mul(r, beta);
        }
        let root = root.expect("base modulus splits in the extension");
        (0..q)
            .map(|a| {
                base.coeffs(a)
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| big.add(big.mul(acc, root), c))
            })
            .collect()
    };
    let preimages = images.iter().enumerate().map(|(i, &e)| (e, i as Elem)).collect();
    Subfield {
        field: Arc::clone(base),
        images,
        preimages,
    }
}

// Arithmetic in GF(p)[x] on plain coefficient vectors, used only for the
// irreducibility test.

fn trim(f: &mut Vec<u64>) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = arith::pow_mod(f[df], p - 2, p);
    while r.len() > df && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for i in 0..=df {
            let idx = dr - df + i;
            r[idx] = (r[idx] + p - c * f[i] % p) % p;
        }
        trim(&mut r);
        if r.len() - 1 < df {
            break;
        }
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility over GF(p): root check for degree at most 3, Rabin's test
/// (x^(p^m) = x mod f and gcd(x^(p^(m/r)) - x, f) = 1 for primes r | m)
/// otherwise.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m == 0 || f[m] == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    let p64 = p as u64;
    let fl: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    if m <= 3 {
        return (0..p64).all(|a| fl.iter().rev().fold(0, |acc, &c| (acc * a + c) % p64) != 0);
    }
    let x = vec![0u64, 1];
    // frob[i] = x^(p^i) mod f
    let mut frob = vec![poly_rem(&x, &fl, p64)];
    for i in 1..=m {
        let next = poly_powmod(&frob[i - 1], p64, &fl, p64);
        frob.push(next);
    }
    let mut top = frob[m].clone();
    trim(&mut top);
    if top != x {
        return false;
    }
    arith::prime_factors(m as u64).into_iter().all(|r| {
        let mut h = frob[m / r as usize].clone();
        h.resize(h.len().max(2), 0);
        h[1] = (h[1] + p64 - 1) % p64;
        trim(&mut h);
        let g = poly_gcd(&fl, &h, p64);
        g.len() == 1
    })
}

/// An element bundled with its owning field, for checked arithmetic.
#[derive(Clone, Debug)]
pub struct FieldElement {
    owner: Arc<FieldSpec>,
    value: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(i64),
}

impl FieldElement {
    pub fn new(owner: &Arc<FieldSpec>, value: Elem) -> Self {
        assert!(owner.contains(value), "element {value} outside GF({})", owner.order);
        Self {
            owner: Arc::clone(owner),
            value,
        }
    }

    pub fn owner(&self) -> &Arc<FieldSpec> {
        &self.owner
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.owner.coeffs(self.value)
    }

    fn same_owner(&self, other: &FieldElement) -> Result<(), FieldError> {
        if Arc::ptr_eq(&self.owner, &other.owner) || *self.owner == *other.owner {
            Ok(())
        } else {
            Err(FieldError::MixedOwners)
        }
    }

    /// Applies `op`; binary operations take `other`, unary ones ignore it.
    pub fn apply(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement, FieldError> {
        let f = &self.owner;
        let (a, b) = (self.value, other.value);
        let value = match op {
            ArithOp::Neg => f.neg(a),
            ArithOp::Inv => f.inv(a)?,
            ArithOp::Pow(e) => f.pow(a, e)?,
            ArithOp::Add | ArithOp::Sub | ArithOp::Mul | ArithOp::Div => {
                self.same_owner(other)?;
                match op {
                    ArithOp::Add => f.add(a, b),
                    ArithOp::Sub => f.sub(a, b),
                    ArithOp::Mul => f.mul(a, b),
                    _ => f.div(a, b)?,
                }
            }
        };
        Ok(FieldElement {
            owner: Arc::clone(f),
            value,
        })
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.owner == *other.owner
    }
}

/// Checked arithmetic on owned elements.
pub fn field_arith(
    a: &FieldElement,
    b: &FieldElement,
    op: ArithOp,
) -> Result<FieldElement, FieldError> {
    a.apply(b, op)
}

/// The canonical primitive 2n-th root of unity: `alpha^((|F|-1)/2n)`.
pub fn primitive_2n_root(field: &FieldSpec, n: u64) -> Result<Elem, FieldError> {
    let group_order = field.order as u64 - 1;
    let two_n = 2 * n;
    if n == 0 || group_order % two_n != 0 {
        return Err(FieldError::NoRootOfUnity { two_n, group_order });
    }
    Ok(field.pow_u(field.primitive, group_order / two_n))
}

/// Multiplicative order of `q` modulo `2n`: the degree of the splitting field
/// of `x^n + 1` over GF(q).
pub fn splitting_degree(q: u64, n: u64) -> Result<u32, FieldError> {
    if n == 0 || arith::gcd(n, q) != 1 {
        return Err(FieldError::RepeatedRoots { n, q });
    }
    arith::mult_order(q, 2 * n)
        .map(|m| m as u32)
        .ok_or(FieldError::RepeatedRoots { n, q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn prime_fields() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 5);
        let f13 = FieldSpec::new(13, 1).unwrap();
        assert_eq!(f13.order(), 13);
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), FieldError::NotOddPrime(4));
        assert_eq!(FieldSpec::new(2, 3).unwrap_err(), FieldError::NotOddPrime(2));
        assert_eq!(FieldSpec::new(9, 1).unwrap_err(), FieldError::NotOddPrime(9));
        assert_eq!(FieldSpec::new(3, 0).unwrap_err(), FieldError::ZeroDegree);
        assert!(matches!(FieldSpec::new(3, 40), Err(FieldError::TooLarge { .. })));
        assert!(matches!(FieldSpec::of_order(12), Err(FieldError::NotOddPrimePower(12))));
    }

    /// Brute-force oracle: f has no monic factor of degree 1..=deg/2.
    fn irreducible_by_trial_division(f: &[u32], p: u32) -> bool {
        let m = f.len() - 1;
        let fl: Vec<u64> = f.iter().map(|&c| c as u64).collect();
        for d in 1..=m / 2 {
            for idx in 0..(p as u64).pow(d as u32) {
                let mut g = digits_of(idx, p as u64, d)
                    .into_iter()
                    .map(|c| c as u64)
                    .collect::<Vec<_>>();
                g.push(1);
                let r = poly_rem(&fl, &g, p as u64);
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn gf81_modulus_is_first_irreducible() {
        // Oracle: walk monic quartics over GF(3) in encoding order and stop at
        // the first one with no factor of degree 1 or 2.
        let expected = (0..81u64)
            .map(|idx| {
                let mut f = digits_of(idx, 3, 4);
                f.push(1);
                f
            })
            .find(|f| irreducible_by_trial_division(f, 3))
            .unwrap();
        assert_eq!(expected, vec![2, 1, 0, 0, 1]);
        let f = FieldSpec::new(3, 4).unwrap();
        assert_eq!(f.modulus(), expected.as_slice());
        assert_eq!(f.order(), 81);
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for &(p, m) in &[(3u32, 4usize), (3, 5), (5, 4), (3, 6), (7, 3)] {
            for idx in 0..(p as u64).pow(m as u32) {
                let mut f = digits_of(idx, p as u64, m);
                f.push(1);
                assert_eq!(
                    is_irreducible(&f, p),
                    irreducible_by_trial_division(&f, p),
                    "p={p} f={f:?}"
                );
            }
        }
    }

    #[test]
    fn modular_arithmetic_examples() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.add(3, 5), 1);
        let f13 = FieldSpec::new(13, 1).unwrap();
        assert_eq!(f13.pow(2, 6).unwrap(), 12);
        assert_eq!(f13.pow(2, -1).unwrap(), 7);
        assert_eq!(f13.inv(0), Err(FieldError::DivisionByZero));
        for a in 1..13 {
            assert_eq!(f13.mul(a, f13.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(FieldSpec::new(13, 1).unwrap().primitive_element(), 2);
        assert_eq!(FieldSpec::new(5, 1).unwrap().primitive_element(), 2);
        assert_eq!(FieldSpec::new(7, 1).unwrap().primitive_element(), 3);
        assert_eq!(FieldSpec::new(3, 1).unwrap().primitive_element(), 2);
        for &(p, m) in &[(3u64, 2u32), (5, 2), (7, 2), (13, 2), (3, 4), (13, 4), (29, 4)] {
            let f = FieldSpec::new(p, m).unwrap();
            let g = f.primitive_element();
            assert_eq!(f.element_order(g), Some(f.order() as u64 - 1), "GF({p}^{m})");
            assert!((2..g).all(|c| f.element_order(c) != Some(f.order() as u64 - 1)));
        }
    }

    #[test]
    fn roots_of_unity() {
        let f13 = FieldSpec::new(13, 1).unwrap();
        assert_eq!(primitive_2n_root(&f13, 6).unwrap(), 2);
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(primitive_2n_root(&f7, 3).unwrap(), 3);
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(
            primitive_2n_root(&f5, 3),
            Err(FieldError::NoRootOfUnity { two_n: 6, group_order: 4 })
        );
        for &(p, m, n) in &[(5u64, 2u32, 3u64), (3, 4, 10), (13, 4, 170), (29, 2, 28)] {
            let f = FieldSpec::new(p, m).unwrap();
            let d = primitive_2n_root(&f, n).unwrap();
            assert_eq!(f.pow(d, n as i64).unwrap(), f.neg(1));
            assert_eq!(f.pow(d, 2 * n as i64).unwrap(), 1);
            assert_eq!(f.element_order(d), Some(2 * n));
        }
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree(5, 3), Ok(2));
        assert_eq!(splitting_degree(13, 6), Ok(1));
        assert_eq!(splitting_degree(9, 10), Ok(2));
        assert_eq!(splitting_degree(169, 170), Ok(2));
        assert_eq!(splitting_degree(9, 3), Err(FieldError::RepeatedRoots { n: 3, q: 9 }));
    }

    #[test]
    fn embeddings_round_trip() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        let f25 = FieldSpec::extension(&f5, 2).unwrap();
        assert_eq!(f25.project(f25.embed(3).unwrap()), Ok(3));
        assert_eq!(f25.project(1), Ok(1));
        let delta = primitive_2n_root(&f25, 3).unwrap();
        assert_eq!(f25.project(delta), Err(FieldError::NotInSubfield(delta)));

        for &(p, s, m) in &[(3u64, 2u32, 2u32), (3, 2, 3), (5, 2, 2), (7, 2, 2), (3, 1, 4)] {
            let small = FieldSpec::new(p, s).unwrap();
            let big = FieldSpec::extension(&small, m).unwrap();
            assert_eq!(big.embed(1), Ok(1));
            for a in 0..small.order() {
                for b in 0..small.order() {
                    let (ea, eb) = (big.embed(a).unwrap(), big.embed(b).unwrap());
                    assert_eq!(big.embed(small.add(a, b)).unwrap(), big.add(ea, eb));
                    assert_eq!(big.embed(small.mul(a, b)).unwrap(), big.mul(ea, eb));
                }
                assert_eq!(big.project(big.embed(a).unwrap()), Ok(a));
            }
            let members = (0..big.order()).filter(|&x| big.project(x).is_ok()).count();
            assert_eq!(members as u32, small.order());
        }
    }

    #[test]
    fn degree_one_extension_is_identity() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let same = FieldSpec::extension(&f9, 1).unwrap();
        assert_eq!(*same, *f9);
        for a in 0..9 {
            assert_eq!(same.embed(a), Ok(a));
        }
    }

    #[test]
    fn checked_arith_on_elements() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        let f5 = FieldSpec::new(5, 1).unwrap();
        let a = FieldElement::new(&f7, 3);
        let b = FieldElement::new(&f7, 5);
        assert_eq!(field_arith(&a, &b, ArithOp::Add).unwrap().value(), 1);
        assert_eq!(field_arith(&a, &b, ArithOp::Pow(-1)).unwrap().value(), 5);
        let zero = FieldElement::new(&f7, 0);
        assert_eq!(field_arith(&zero, &zero, ArithOp::Inv).unwrap_err(), FieldError::DivisionByZero);
        assert_eq!(field_arith(&a, &zero, ArithOp::Div).unwrap_err(), FieldError::DivisionByZero);
        let c = FieldElement::new(&f5, 2);
        assert_eq!(field_arith(&a, &c, ArithOp::Mul).unwrap_err(), FieldError::MixedOwners);
        assert_eq!(FieldElement::new(&FieldSpec::new(3, 2).unwrap(), 5).coeffs(), vec![2, 1]);
    }

    #[test]
    fn table_and_digit_paths_agree() {
        let f = FieldSpec::new(13, 2).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..2000 {
            let a = rng.gen_range(0..f.order());
            let b = rng.gen_range(0..f.order());
            assert_eq!(f.mul(a, b), f.mul_slow(a, b));
        }
    }

    #[test]
    fn field_axioms_randomized() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        for &(p, m) in &[(5u64, 1u32), (7, 1), (3, 2), (13, 1), (5, 2), (7, 2), (3, 4), (13, 4)] {
            let f = FieldSpec::new(p, m).unwrap();
            let g = f.primitive_element();
            assert_eq!(f.pow(g, f.order() as i64 - 1).unwrap(), 1);
            for _ in 0..1000 {
                let a = rng.gen_range(0..f.order());
                let b = rng.gen_range(0..f.order());
                let c = rng.gen_range(0..f.order());
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.sub(f.add(a, b), b), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }
}
