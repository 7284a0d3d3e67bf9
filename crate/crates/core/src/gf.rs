//! Finite fields as extension towers.
//!
//! A [`Field`] is either a prime field `GF(p)` or an extension of degree `k`
//! over another [`Field`], defined by a monic irreducible polynomial with
//! coefficients in the subfield. Elements are `u32` indices: the coordinate
//! vector over the immediate subfield in the power basis `1, α, …, α^{k-1}`,
//! little-endian, read as a base-|subfield| integer. Since subfield elements
//! use the same encoding one level down, every index is ultimately a vector of
//! base-`p` digits, so
//!
//! - addition is digit-wise modulo `p` (plain XOR in characteristic 2), and
//! - an element of a subfield keeps its index when embedded in an extension.

use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::matrix::Matrix;

/// Largest order for which exp/log tables are built.
const TABLE_LIMIT: u64 = 1 << 16;
/// Largest order served by the built-in irreducible search.
const DEFAULT_POLY_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("polynomial {coeffs:?} is not a monic polynomial of degree {degree}")]
    BadPolynomial { coeffs: Vec<u32>, degree: u32 },
    #[error("coefficient {0} is not an element of GF({1})")]
    BadCoefficient(u32, u32),
    #[error("polynomial {0:?} is reducible over GF({1})")]
    Reducible(Vec<u32>, u32),
    #[error("no built-in irreducible polynomial for order {0}; supply one explicitly")]
    UnsupportedOrder(u64),
    #[error("field order overflows 32 bits")]
    Overflow,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("basis elements are linearly dependent over the subfield")]
    DependentBasis,
    #[error("basis has {got} elements, expected {expected}")]
    BasisSize { got: usize, expected: usize },
    #[error("{0} is not an element of GF({1})")]
    BadElement(u32, u32),
}

struct Tables {
    /// `exp[i] = g^i`, stored twice over so `log a + log b` needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    p: u32,
    order: u32,
    degree: u32,
    abs_degree: u32,
    sub: Option<Field>,
    modulus: Vec<u32>,
    generator: u32,
    tables: Option<Tables>,
}

/// A finite field, cheap to clone and immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl Field {
    /// The prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<Field, GfError> {
        if !arith::is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if p > u32::MAX as u64 / 2 {
            return Err(GfError::Overflow);
        }
        let mut inner = Inner {
            p: p as u32,
            order: p as u32,
            degree: 1,
            abs_degree: 1,
            sub: None,
            modulus: Vec::new(),
            generator: 0,
            tables: None,
        };
        inner.generator = find_generator(&inner);
        if p <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    /// Extension of `sub` of the given degree. With `modulus = None` the
    /// lexicographically smallest monic irreducible of that degree is used
    /// (coefficients compared from the highest degree down). `modulus` lists
    /// coefficients little-endian; the leading 1 may be included or omitted.
    /// A degree-1 extension is `sub` itself.
    pub fn extension(sub: &Field, degree: u32, modulus: Option<&[u32]>) -> Result<Field, GfError> {
        if degree == 0 {
            return Err(GfError::ZeroDegree);
        }
        if degree == 1 {
            return Ok(sub.clone());
        }
        let order = (sub.order() as u64)
            .checked_pow(degree)
            .filter(|&o| o <= u32::MAX as u64)
            .ok_or(GfError::Overflow)?;
        let modulus = match modulus {
            Some(coeffs) => {
                let poly = normalize_modulus(sub, coeffs, degree)?;
                if !poly::is_irreducible(sub, &poly) {
                    return Err(GfError::Reducible(poly, sub.order()));
                }
                poly
            }
            None => {
                if order > DEFAULT_POLY_LIMIT {
                    return Err(GfError::UnsupportedOrder(order));
                }
                poly::smallest_irreducible(sub, degree)
            }
        };
        let mut inner = Inner {
            p: sub.p(),
            order: order as u32,
            degree,
            abs_degree: sub.abs_degree() * degree,
            sub: Some(sub.clone()),
            modulus,
            generator: 0,
            tables: None,
        };
        inner.generator = find_generator(&inner);
        if order <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    /// Builds `GF(p) ⊂ GF(p^{d_1}) ⊂ GF(p^{d_1 d_2}) ⊂ …` and returns the top.
    /// `polynomials`, when given, must align with `degrees`.
    pub fn tower(p: u64, degrees: &[u32], polynomials: Option<&[Vec<u32>]>) -> Result<Field, GfError> {
        let mut field = Field::prime(p)?;
        for (i, &d) in degrees.iter().enumerate() {
            let poly = polynomials.and_then(|ps| ps.get(i)).map(|v| v.as_slice());
            field = Field::extension(&field, d, poly)?;
        }
        Ok(field)
    }

    /// `GF(q)` as a single extension of its prime field.
    pub fn from_order(q: u64) -> Result<Field, GfError> {
        let (p, k) = arith::prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        Field::tower(p, &[k], None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Degree over the immediate subfield.
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// Degree over the prime field.
    pub fn abs_degree(&self) -> u32 {
        self.0.abs_degree
    }

    pub fn subfield(&self) -> Option<&Field> {
        self.0.sub.as_ref()
    }

    /// Order of the immediate subfield (`p` for prime fields, which are their own base).
    pub fn sub_order(&self) -> u32 {
        match &self.0.sub {
            Some(s) => s.order(),
            None => self.0.p,
        }
    }

    /// Monic defining polynomial over the subfield, little-endian; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.sub.is_none()
    }

    /// The designated primitive element: the smallest index generating `GF*`.
    pub fn generator(&self) -> u32 {
        self.0.generator
    }

    /// Degrees of the tower from the prime field up, e.g. `[2, 2]` for GF(16)/GF(4)/GF(2).
    pub fn tower_degrees(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut f = Some(self);
        while let Some(field) = f {
            if !field.is_prime_field() {
                out.push(field.degree());
            }
            f = field.subfield();
        }
        out.reverse();
        out
    }

    /// Defining polynomials of the tower from the bottom up.
    pub fn tower_polynomials(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut f = Some(self);
        while let Some(field) = f {
            if !field.is_prime_field() {
                out.push(field.modulus().to_vec());
            }
            f = field.subfield();
        }
        out.reverse();
        out
    }

    /// True when `other` is this field or one of its subfields.
    pub fn extends(&self, other: &Field) -> bool {
        let mut f = Some(self);
        while let Some(field) = f {
            if field == other {
                return true;
            }
            f = field.subfield();
        }
        false
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.0.order
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.order
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            return a ^ b;
        }
        digit_add(p, a, b)
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let mut out = 0u32;
        let mut scale = 1u32;
        let mut x = a;
        while x > 0 {
            let d = x % p;
            out += ((p - d) % p) * scale;
            x /= p;
            scale = scale.wrapping_mul(p);
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => slow_mul(&self.0, a, b),
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32, GfError> {
        if a == 0 {
            return Err(GfError::ZeroInverse);
        }
        match &self.0.tables {
            Some(t) => {
                let n = self.0.order - 1;
                Ok(t.exp[((n - t.log[a as usize]) % n) as usize])
            }
            None => Ok(self.pow(a, self.0.order as u64 - 2)),
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let n = (self.0.order - 1) as u64;
            let l = (t.log[a as usize] as u64 * (e % n)) % n;
            return t.exp[l as usize];
        }
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^{q^e}` where `q` is the order of the immediate subfield.
    pub fn frobenius(&self, a: u32, e: u32) -> u32 {
        let q = self.sub_order() as u64;
        let e = if self.is_prime_field() { 0 } else { e % self.degree() };
        let mut x = a;
        for _ in 0..e {
            x = self.pow(x, q);
        }
        x
    }

    /// Coordinates over the immediate subfield in the power basis.
    pub fn coords(&self, a: u32) -> Vec<u32> {
        let q = self.sub_order();
        let mut x = a;
        (0..self.degree())
            .map(|_| {
                let d = x % q;
                x /= q;
                d
            })
            .collect()
    }

    /// Inverse of [`Field::coords`].
    pub fn from_coords(&self, coords: &[u32]) -> u32 {
        let q = self.sub_order();
        coords.iter().rev().fold(0u32, |acc, &c| acc * q + c)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> u64 {
        let n = (self.0.order - 1) as u64;
        let mut ord = n;
        for l in arith::prime_factors(n) {
            while ord.is_multiple_of(l) && self.pow(a, ord / l) == 1 {
                ord /= l;
            }
        }
        ord
    }

    pub fn element(&self, value: u32) -> Result<FieldElement, GfError> {
        if !self.contains(value) {
            return Err(GfError::BadElement(value, self.order()));
        }
        Ok(FieldElement { field: self.clone(), value })
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        self.0.p == other.0.p
            && self.0.order == other.0.order
            && self.0.modulus == other.0.modulus
            && self.0.sub == other.0.sub
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())?;
        if let Some(s) = self.subfield() {
            write!(f, "/{:?}", s)?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

fn digit_add(p: u32, a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    let mut out = 0u32;
    let mut scale = 1u32;
    while a > 0 || b > 0 {
        let d = (a % p + b % p) % p;
        out += d * scale;
        a /= p;
        b /= p;
        scale = scale.wrapping_mul(p);
    }
    out
}

fn normalize_modulus(sub: &Field, coeffs: &[u32], degree: u32) -> Result<Vec<u32>, GfError> {
    let d = degree as usize;
    let bad = || GfError::BadPolynomial { coeffs: coeffs.to_vec(), degree };
    let mut poly = match coeffs.len() {
        l if l == d => {
            let mut v = coeffs.to_vec();
            v.push(1);
            v
        }
        l if l == d + 1 => coeffs.to_vec(),
        _ => return Err(bad()),
    };
    if poly[d] != 1 {
        return Err(bad());
    }
    for &c in &poly {
        if !sub.contains(c) {
            return Err(GfError::BadCoefficient(c, sub.order()));
        }
    }
    poly.truncate(d + 1);
    Ok(poly)
}

/// Multiplication by polynomial arithmetic over the subfield.
fn slow_mul(inner: &Inner, a: u32, b: u32) -> u32 {
    match &inner.sub {
        None => ((a as u64 * b as u64) % inner.p as u64) as u32,
        Some(sub) => {
            let d = inner.degree as usize;
            let q = sub.order();
            let split = |mut x: u32| -> Vec<u32> {
                (0..d)
                    .map(|_| {
                        let c = x % q;
                        x /= q;
                        c
                    })
                    .collect()
            };
            let (ca, cb) = (split(a), split(b));
            let mut prod = vec![0u32; 2 * d - 1];
            for (i, &x) in ca.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in cb.iter().enumerate() {
                    if y != 0 {
                        prod[i + j] = sub.add(prod[i + j], sub.mul(x, y));
                    }
                }
            }
            for i in (d..2 * d - 1).rev() {
                let c = prod[i];
                if c == 0 {
                    continue;
                }
                prod[i] = 0;
                for j in 0..d {
                    let m = inner.modulus[j];
                    if m != 0 {
                        prod[i - d + j] = sub.sub(prod[i - d + j], sub.mul(c, m));
                    }
                }
            }
            prod[..d].iter().rev().fold(0u32, |acc, &c| acc * q + c)
        }
    }
}

fn slow_pow(inner: &Inner, a: u32, mut e: u64) -> u32 {
    let mut base = a;
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(inner, acc, base);
        }
        base = slow_mul(inner, base, base);
        e >>= 1;
    }
    acc
}

fn find_generator(inner: &Inner) -> u32 {
    let n = inner.order as u64 - 1;
    if n == 1 {
        return 1;
    }
    let factors = arith::prime_factors(n);
    (2..inner.order)
        .find(|&g| factors.iter().all(|&l| slow_pow(inner, g, n / l) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

fn build_tables(inner: &Inner) -> Tables {
    let n = (inner.order - 1) as usize;
    let mut exp = vec![0u32; 2 * n.max(1)];
    let mut log = vec![0u32; inner.order as usize];
    let mut x = 1u32;
    for i in 0..n {
        exp[i] = x;
        log[x as usize] = i as u32;
        x = slow_mul(inner, x, inner.generator);
    }
    for i in n..2 * n {
        exp[i] = exp[i - n];
    }
    Tables { exp, log }
}

/// An element bundled with its field, for checked arithmetic at API boundaries.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coords(&self) -> Vec<u32> {
        self.field.coords(self.value)
    }

    fn same(&self, other: &FieldElement) -> Result<(), GfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    fn wrap(&self, value: u32) -> FieldElement {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement, GfError> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(self.field.pow(self.value, e))
    }

    pub fn frobenius(&self, e: u32) -> FieldElement {
        self.wrap(self.field.frobenius(self.value, e))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈{}", self.value, self.field)
    }
}

/// A basis of a field over its immediate subfield.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    field: Field,
    elements: Vec<u32>,
    /// Inverse of the matrix whose rows are the power-basis coordinates of `elements`.
    inverse: Matrix,
}

impl Basis {
    /// The power basis `1, α, …, α^{k-1}`.
    pub fn power(field: &Field) -> Basis {
        let k = field.degree() as usize;
        let q = field.sub_order();
        let elements = (0..k).map(|i| q.pow(i as u32)).collect();
        Basis { field: field.clone(), elements, inverse: Matrix::identity(k) }
    }

    pub fn new(field: &Field, elements: Vec<u32>) -> Result<Basis, GfError> {
        let k = field.degree() as usize;
        if elements.len() != k {
            return Err(GfError::BasisSize { got: elements.len(), expected: k });
        }
        if let Some(&bad) = elements.iter().find(|&&e| !field.contains(e)) {
            return Err(GfError::BadElement(bad, field.order()));
        }
        let rows: Vec<Vec<u32>> = elements.iter().map(|&e| field.coords(e)).collect();
        let sub = subfield_or_self(field);
        let inverse = Matrix::from_rows(&rows).inverse(&sub).ok_or(GfError::DependentBasis)?;
        Ok(Basis { field: field.clone(), elements, inverse })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Coordinates of `a` over the subfield: `Σ coords[i]·basis[i] = a`.
    pub fn coords(&self, a: u32) -> Vec<u32> {
        let sub = subfield_or_self(&self.field);
        self.inverse.left_mul_vec(&self.field.coords(a), &sub)
    }

    /// Inverse of [`Basis::coords`].
    pub fn element(&self, coords: &[u32]) -> u32 {
        let sub = subfield_or_self(&self.field);
        self.elements.iter().zip(coords).fold(0u32, |acc, (&b, &c)| {
            // c·b for c in the subfield: scale power-basis coordinates.
            let scaled: Vec<u32> = self.field.coords(b).iter().map(|&x| sub.mul(c, x)).collect();
            self.field.add(acc, self.field.from_coords(&scaled))
        })
    }
}

/// The immediate subfield, or the field itself when it is prime.
pub fn subfield_or_self(field: &Field) -> Field {
    field.subfield().cloned().unwrap_or_else(|| field.clone())
}

/// Polynomials over a field as little-endian coefficient vectors.
pub mod poly {
    use super::Field;

    pub fn trim(p: &mut Vec<u32>) {
        while p.last() == Some(&0) {
            p.pop();
        }
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(p: &[u32]) -> Option<usize> {
        p.iter().rposition(|&c| c != 0)
    }

    pub fn add(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let mut out: Vec<u32> = (0..n)
            .map(|i| f.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect();
        trim(&mut out);
        out
    }

    pub fn sub(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        let nb: Vec<u32> = b.iter().map(|&c| f.neg(c)).collect();
        add(f, a, &nb)
    }

    pub fn mul(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        trim(&mut out);
        out
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(f: &Field, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let db = degree(b).expect("division by the zero polynomial");
        let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
        let mut r: Vec<u32> = a.to_vec();
        trim(&mut r);
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![0u32; r.len() - db];
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = f.mul(r[dr], lead_inv);
            q[dr - db] = c;
            for (j, &bj) in b[..=db].iter().enumerate() {
                let idx = dr - db + j;
                r[idx] = f.sub(r[idx], f.mul(c, bj));
            }
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub fn rem(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        divrem(f, a, b).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(f, &x, &y);
            x = y;
            y = r;
        }
        if let Some(d) = degree(&x) {
            let inv = f.inv(x[d]).expect("nonzero");
            x.iter_mut().for_each(|c| *c = f.mul(*c, inv));
        }
        x
    }

    pub fn pow_mod(f: &Field, base: &[u32], mut e: u64, modulus: &[u32]) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut b = rem(f, base, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(f, &mul(f, &acc, &b), modulus);
            }
            b = rem(f, &mul(f, &b, &b), modulus);
            e >>= 1;
        }
        acc
    }

    pub fn eval(f: &Field, p: &[u32], x: u32) -> u32 {
        p.iter().rev().fold(0u32, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Ben-Or test: `p` has no irreducible factor of degree `i ≤ deg/2`
    /// iff `gcd(x^{Q^i} - x, p) = 1` for all such `i`.
    pub fn is_irreducible(f: &Field, p: &[u32]) -> bool {
        let d = match degree(p) {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        if d == 1 {
            return true;
        }
        if p[0] == 0 {
            return false;
        }
        let q = f.order() as u64;
        let x = vec![0u32, 1];
        let mut h = x.clone();
        for _ in 1..=d / 2 {
            h = pow_mod(f, &h, q, p);
            let g = gcd(f, &sub(f, &h, &x), p);
            if degree(&g) != Some(0) {
                return false;
            }
        }
        true
    }

    /// Smallest monic irreducible of the given degree, ordering candidates by
    /// their coefficient vector read from the highest non-leading term down.
    pub fn smallest_irreducible(f: &Field, degree: u32) -> Vec<u32> {
        let q = f.order() as u64;
        let d = degree as usize;
        let count = q.pow(degree);
        (0..count)
            .map(|code| {
                let mut c = Vec::with_capacity(d + 1);
                let mut x = code;
                for _ in 0..d {
                    c.push((x % q) as u32);
                    x /= q;
                }
                c.push(1);
                c
            })
            .find(|c| c[0] != 0 && is_irreducible(f, c))
            .expect("irreducible polynomials exist in every degree")
    }
}
