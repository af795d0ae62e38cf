//! Finite fields `F_{p^t} = F_p[z]/(m(z))` and their Frobenius powers.
//!
//! A [`Field`] is a cheap, immutable, shareable handle. Elements are plain
//! [`Elem`] indices (the base-`p` integer `c_0 + c_1 p + ... + c_{t-1} p^{t-1}`
//! of the coefficient tuple), so every hot loop runs on `Copy` values and
//! table lookups. [`FieldElem`] pairs an element with its field for the
//! checked, owner-aware API.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fp_poly::{is_prime, FpPoly};
use crate::parse;

/// Largest supported field order; discrete-log tables are dense.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct FieldData {
    p: u32,
    t: usize,
    q: u32,
    modulus: Vec<u32>,
    symbol: char,
    /// multiplicative order of the class of `z`
    gen_order: u32,
    /// `exp[i] = g^i` for the primitive element `g` used by the tables
    exp: Vec<Elem>,
    /// `log[a]` for `a != 0`
    log: Vec<u32>,
    add: Option<Vec<Elem>>,
    neg: Vec<Elem>,
    /// discrete log of `z` with respect to `g`, used for `w^k` display
    z_log: u32,
}

/// `F_{p^t}` as a quotient by a monic irreducible modulus.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "GF({}^{}; {})", self.0.p, self.0.t, m.join(","))
    }
}

impl Field {
    /// Builds `F_p[z]/(modulus)`; `modulus` lists ascending coefficients
    /// and must be monic of degree `t` and irreducible.
    pub fn new(p: u32, t: usize, modulus: &[i64]) -> Result<Field> {
        Field::with_symbol(p, t, modulus, 'w')
    }

    pub fn with_symbol(p: u32, t: usize, modulus: &[i64], symbol: char) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let m = FpPoly::new(p, modulus.iter().copied());
        if t == 0 || m.degree() != Some(t) || !m.is_monic() || modulus.len() != t + 1 {
            return Err(Error::DegreeMismatch {
                expected: t,
                found: m.degree().unwrap_or(0),
            });
        }
        let q = (p as u64).checked_pow(t as u32).unwrap_or(u64::MAX);
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        if !m.is_irreducible() {
            return Err(Error::ReducibleModulus { p });
        }
        Ok(Field(Arc::new(FieldData::build(
            p,
            t,
            m.coeffs().to_vec(),
            symbol,
        ))))
    }

    /// The prime field `F_p` (modulus `z`).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, &[0, 1])
    }

    /// `F_4` with `w^2 = w + 1`.
    pub fn gf4() -> Field {
        Field::new(2, 2, &[1, 1, 1]).expect("z^2+z+1 is irreducible over F_2")
    }

    /// `F_9` with `w^2 = w + 1`.
    pub fn gf9() -> Field {
        Field::new(3, 2, &[2, 2, 1]).expect("z^2-z-1 is irreducible over F_3")
    }

    /// `F_16` with `w^4 = w + 1`.
    pub fn gf16() -> Field {
        Field::new(2, 4, &[1, 1, 0, 0, 1]).expect("z^4+z+1 is irreducible over F_2")
    }

    /// Default field of order `p^t`: the shipped moduli for 4, 9 and 16,
    /// otherwise the first primitive monic polynomial in lexicographic order.
    pub fn default_for(p: u32, t: usize) -> Result<Field> {
        match (p, t) {
            (2, 2) => return Ok(Field::gf4()),
            (3, 2) => return Ok(Field::gf9()),
            (2, 4) => return Ok(Field::gf16()),
            (_, 1) => return Field::prime(p),
            _ => {}
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut fallback = None;
        for cand in FpPoly::monics_of_degree(p, t) {
            if cand.coeffs()[0] == 0 || !cand.is_irreducible() {
                continue;
            }
            let m: Vec<i64> = cand.coeffs().iter().map(|&c| c as i64).collect();
            let field = Field::new(p, t, &m)?;
            if field.is_generator_primitive() {
                return Ok(field);
            }
            fallback.get_or_insert(field);
        }
        fallback.ok_or(Error::ReducibleModulus { p })
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    /// Extension degree over `F_p`.
    pub fn t(&self) -> usize {
        self.0.t
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn symbol(&self) -> char {
        self.0.symbol
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The class of `z`.
    pub fn generator(&self) -> Elem {
        if self.0.t == 1 {
            // z = 0 in F_p[z]/(z); the useful "generator" is the primitive root
            return self.0.exp[1 % self.0.exp.len()];
        }
        Elem(self.0.p)
    }

    pub fn generator_order(&self) -> u32 {
        self.0.gen_order
    }

    /// True when `z` generates the multiplicative group, enabling `w^k` display.
    pub fn is_generator_primitive(&self) -> bool {
        self.0.gen_order == self.0.q - 1
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.q
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.q).map(Elem)
    }

    pub fn units(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.0.q).map(Elem)
    }

    pub fn from_int(&self, c: i64) -> Elem {
        Elem(c.rem_euclid(self.0.p as i64) as u32)
    }

    /// Element from an ascending coefficient tuple (reduced mod `m(z)` if long).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Elem {
        let z = self.generator_poly_basis();
        coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| {
            self.add(self.mul(acc, z), self.from_int(c))
        })
    }

    fn generator_poly_basis(&self) -> Elem {
        if self.0.t == 1 {
            // z reduces to -m_0
            self.from_int(-(self.0.modulus[0] as i64))
        } else {
            Elem(self.0.p)
        }
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut v = a.0;
        (0..self.0.t)
            .map(|_| {
                let c = v % self.0.p;
                v /= self.0.p;
                c
            })
            .collect()
    }

    /// `g^k` for the primitive element `g` of the internal tables.
    pub fn exp(&self, k: i64) -> Elem {
        let n = (self.0.q - 1) as i64;
        self.0.exp[k.rem_euclid(n) as usize]
    }

    /// `w^k` where `w` is the class of `z`.
    pub fn gen_pow(&self, k: i64) -> Elem {
        self.pow_signed(self.generator(), k)
    }

    /// Discrete log with respect to the class of `z`, when `z` is primitive.
    pub fn gen_log(&self, a: Elem) -> Option<u32> {
        if a.is_zero() || !self.is_generator_primitive() {
            return None;
        }
        let n = self.0.q - 1;
        // log_g(a) = k * log_g(z)  =>  k = log_g(a) * log_g(z)^{-1} mod n
        let inv = mod_inverse(self.0.z_log as u64, n as u64)?;
        Some(((self.0.log[a.index()] as u64 * inv) % n as u64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.add {
            Some(t) => t[a.index() * self.0.q as usize + b.index()],
            None => self.add_digits(a, b),
        }
    }

    fn add_digits(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        for _ in 0..self.0.t {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a.index()]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let n = self.0.q - 1;
        let s = self.0.log[a.index()] + self.0.log[b.index()];
        self.0.exp[(if s >= n { s - n } else { s }) as usize]
    }

    pub fn try_inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.0.q - 1;
        Ok(self.0.exp[((n - self.0.log[a.index()]) % n) as usize])
    }

    /// Inverse of a unit; panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.try_inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let n = (self.0.q - 1) as u64;
        let l = (self.0.log[a.index()] as u64 * (e % n)) % n;
        self.0.exp[l as usize]
    }

    /// `a^k` for signed `k`; negative powers of zero panic.
    pub fn pow_signed(&self, a: Elem, k: i64) -> Elem {
        if k >= 0 {
            self.pow(a, k as u64)
        } else {
            self.pow(self.inv(a), k.unsigned_abs())
        }
    }

    /// `theta_r(a) = a^{p^r}`.
    #[inline]
    pub fn frobenius(&self, a: Elem, r: usize) -> Elem {
        if a.is_zero() {
            return a;
        }
        let n = (self.0.q - 1) as u64;
        let pr = mod_pow(self.0.p as u64, (r % self.0.t) as u64, n);
        self.0.exp[((self.0.log[a.index()] as u64 * pr) % n) as usize]
    }

    /// All `a` with `a^{p^r} = a`.
    pub fn fixed_subfield(&self, r: usize) -> Vec<Elem> {
        self.elements()
            .filter(|&a| self.frobenius(a, r) == a)
            .collect()
    }

    pub fn in_fixed_subfield(&self, a: Elem, r: usize) -> bool {
        self.frobenius(a, r) == a
    }

    /// Hermitian conjugation `a -> a^{p^{t/2}}`.
    pub fn conj(&self, a: Elem) -> Result<Elem> {
        if !self.0.t.is_multiple_of(2) {
            return Err(Error::OddExtensionDegree(self.0.t));
        }
        Ok(self.frobenius(a, self.0.t / 2))
    }

    pub fn is_square(&self, a: Elem) -> bool {
        a.is_zero() || self.0.p == 2 || self.0.log[a.index()].is_multiple_of(2)
    }

    /// Prime-subfield elements print as integers, others as `w^k` when the
    /// modulus class is primitive, otherwise as `c0+c1*w+...`.
    pub fn format(&self, a: Elem) -> String {
        if a.0 < self.0.p {
            return a.0.to_string();
        }
        if let Some(k) = self.gen_log(a) {
            return if k == 1 {
                self.0.symbol.to_string()
            } else {
                format!("{}^{}", self.0.symbol, k)
            };
        }
        let terms: Vec<String> = self
            .coeffs(a)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let c = if c == 1 && i > 0 {
                    String::new()
                } else {
                    c.to_string()
                };
                let sep = if c.is_empty() { "" } else { "*" };
                match i {
                    0 => c,
                    1 => format!("{c}{sep}{}", self.0.symbol),
                    _ => format!("{c}{sep}{}^{i}", self.0.symbol),
                }
            })
            .collect();
        terms.join("+")
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        parse::parse_field_elem(self, s)
    }

    /// Parses `GF(p^t; m0,...,mt)`, `GF(p^t)` (default modulus) or `GF(q)`.
    pub fn parse(s: &str) -> Result<Field> {
        parse::parse_field_spec(s)
    }

    pub fn elem(&self, a: Elem) -> FieldElem {
        FieldElem {
            field: self.clone(),
            value: a,
        }
    }
}

impl FieldData {
    fn build(p: u32, t: usize, modulus: Vec<u32>, symbol: char) -> FieldData {
        let q = p.pow(t as u32);
        let to_digits = |v: u32| -> Vec<u32> {
            let mut v = v;
            (0..t)
                .map(|_| {
                    let c = v % p;
                    v /= p;
                    c
                })
                .collect()
        };
        let from_digits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        // schoolbook multiply-and-reduce; only used while building tables
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (to_digits(a), to_digits(b));
            let mut prod = vec![0u64; 2 * t];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
                }
            }
            for d in (t..2 * t).rev() {
                let c = prod[d];
                if c == 0 {
                    continue;
                }
                for (k, &m) in modulus.iter().enumerate() {
                    let idx = d - t + k;
                    prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
                }
            }
            let low: Vec<u32> = prod[..t].iter().map(|&c| c as u32).collect();
            from_digits(&low)
        };
        let order_of = |a: u32| -> u32 {
            let mut x = a;
            let mut k = 1;
            while x != 1 {
                x = slow_mul(x, a);
                k += 1;
            }
            k
        };
        let z = if t == 1 { (p - modulus[0]) % p } else { p };
        let gen_order = if z == 0 { 0 } else { order_of(z) };
        let g = if gen_order == q - 1 {
            z
        } else {
            (1..q)
                .find(|&a| order_of(a) == q - 1)
                .expect("multiplicative group is cyclic")
        };
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(Elem(x));
            log[x as usize] = i;
            x = slow_mul(x, g);
        }
        let z_log = if z == 0 { 0 } else { log[z as usize] };
        let neg = (0..q)
            .map(|a| {
                Elem(from_digits(
                    &to_digits(a)
                        .iter()
                        .map(|&c| (p - c) % p)
                        .collect::<Vec<_>>(),
                ))
            })
            .collect();
        let add = (q <= 256).then(|| {
            let mut table = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                let da = to_digits(a);
                for b in 0..q {
                    let db = to_digits(b);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    table.push(Elem(from_digits(&s)));
                }
            }
            table
        });
        FieldData {
            p,
            t,
            q,
            modulus,
            symbol,
            gen_order,
            exp,
            log,
            add,
            neg,
            z_log,
        }
    }
}

/// The automorphism `theta_r : a -> a^{p^r}` of `F_{p^t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Automorphism {
    pub r: usize,
}

impl Automorphism {
    pub fn new(r: usize) -> Self {
        Automorphism { r }
    }

    /// `t / gcd(t, r)`.
    pub fn order(&self, t: usize) -> usize {
        t / gcd(t, self.r)
    }

    pub fn is_identity(&self, t: usize) -> bool {
        self.r.is_multiple_of(t)
    }

    pub fn apply(&self, field: &Field, a: Elem) -> Elem {
        field.frobenius(a, self.r)
    }

    /// `theta_r^i`.
    pub fn apply_pow(&self, field: &Field, a: Elem, i: usize) -> Elem {
        field.frobenius(a, (self.r * i) % field.t())
    }
}

/// An element together with its field, for owner-checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    field: Field,
    value: Elem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Pow(i64),
}

impl FieldElem {
    pub fn new(field: &Field, value: Elem) -> Result<Self> {
        if !field.contains(value) {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElem {
            field: field.clone(),
            value,
        })
    }

    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        Ok(FieldElem {
            field: field.clone(),
            value: field.parse_elem(s)?,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    /// Binary ops use `other`; `Inv` and `Pow` ignore it.
    pub fn arith(&self, op: ArithOp, other: &FieldElem) -> Result<FieldElem> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (a, b) = (self.value, other.value);
        let value = match op {
            ArithOp::Add => f.add(a, b),
            ArithOp::Sub => f.sub(a, b),
            ArithOp::Mul => f.mul(a, b),
            ArithOp::Div => f.div(a, b)?,
            ArithOp::Inv => f.try_inv(a)?,
            ArithOp::Pow(k) => {
                if k < 0 && a.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                f.pow_signed(a, k)
            }
        };
        Ok(FieldElem {
            field: f.clone(),
            value,
        })
    }

    pub fn frobenius(&self, r: usize) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            value: self.field.frobenius(self.value, r),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.value))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format(self.value), self.field)
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn mod_pow(base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    (r == 1).then(|| t.rem_euclid(m as i64) as u64)
}
