//! The skew polynomial ring `F_q[x; theta_r]` with `x a = theta_r(a) x`.

use std::fmt;
use std::ops;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{gcd, Elem, Field};
use crate::parse::{self, Algebra};

/// Default cap on exhaustive candidate scans.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, PartialEq, Eq)]
pub struct SkewRing {
    field: Field,
    r: usize,
}

impl fmt::Debug for SkewRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[x; theta_{}]", self.field, self.r)
    }
}

impl SkewRing {
    pub fn new(field: &Field, r: usize) -> SkewRing {
        SkewRing {
            field: field.clone(),
            r,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Order `m` of `theta_r`; the center is `F_q^theta[x^m]`.
    pub fn order(&self) -> usize {
        let t = self.field.t();
        t / gcd(t, self.r % t)
    }

    /// `theta_r^i(a)`; negative `i` applies the inverse automorphism.
    #[inline]
    pub fn theta(&self, a: Elem, i: i64) -> Elem {
        let t = self.field.t() as i64;
        let e = (self.r as i64 * i).rem_euclid(t);
        self.field.frobenius(a, e as usize)
    }

    /// `theta^{n-1}(c) ... theta(c) c`.
    pub fn norm(&self, c: Elem, n: usize) -> Elem {
        (0..n).fold(self.field.one(), |acc, i| {
            self.field.mul(acc, self.theta(c, i as i64))
        })
    }

    pub fn poly(&self, coeffs: Vec<Elem>) -> SkewPoly {
        SkewPoly::from_coeffs(self, coeffs)
    }

    pub fn zero(&self) -> SkewPoly {
        self.poly(Vec::new())
    }

    pub fn one(&self) -> SkewPoly {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: Elem) -> SkewPoly {
        self.poly(vec![c])
    }

    /// `c x^j`.
    pub fn monomial(&self, c: Elem, j: usize) -> SkewPoly {
        let mut coeffs = vec![Elem::ZERO; j + 1];
        coeffs[j] = c;
        self.poly(coeffs)
    }

    pub fn x_pow(&self, j: usize) -> SkewPoly {
        self.monomial(self.field.one(), j)
    }

    /// `x^n - lambda`.
    pub fn xn_minus(&self, n: usize, lambda: Elem) -> SkewPoly {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[n] = self.field.one();
        coeffs[0] = self.field.add(coeffs[0], self.field.neg(lambda));
        self.poly(coeffs)
    }

    /// Polynomial from ascending coefficients given in element grammar.
    pub fn parse(&self, s: &str) -> Result<SkewPoly> {
        parse::parse_expr(&SkewAlg(self), s)
    }

    /// Monic polynomial of degree `d` whose lower coefficients are the
    /// base-`q` digits of `index`.
    pub fn monic_from_index(&self, d: usize, mut index: u128) -> SkewPoly {
        let q = self.field.q() as u128;
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(Elem((index % q) as u32));
            index /= q;
        }
        coeffs.push(self.field.one());
        self.poly(coeffs)
    }

    fn check(&self, other: &SkewRing) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }
}

struct SkewAlg<'a>(&'a SkewRing);

impl Algebra for SkewAlg<'_> {
    type V = SkewPoly;
    fn integer(&self, c: i64) -> SkewPoly {
        self.0.constant(self.0.field.from_int(c))
    }
    fn symbol(&self, c: char) -> Option<SkewPoly> {
        if c == 'x' {
            Some(self.0.x_pow(1))
        } else if c == self.0.field.symbol() {
            Some(self.0.constant(self.0.field.generator()))
        } else {
            None
        }
    }
    fn add(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        a + b
    }
    fn neg(&self, a: &SkewPoly) -> SkewPoly {
        -a
    }
    fn mul(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        a * b
    }
    fn pow(&self, a: &SkewPoly, e: i64) -> Result<SkewPoly> {
        if e >= 0 {
            return Ok((0..e).fold(self.0.one(), |acc, _| &acc * a));
        }
        // negative powers only make sense for nonzero constants
        match a.degree() {
            Some(0) => Ok(self.0.constant(self.0.field.pow_signed(a.coeffs[0], e))),
            _ => Err(Error::parse("^", "negative exponent on a non-constant")),
        }
    }
}

/// An element of `F_q[x; theta_r]`, coefficients ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    ring: SkewRing,
    coeffs: Vec<Elem>,
}

impl SkewPoly {
    pub fn from_coeffs(ring: &SkewRing, mut coeffs: Vec<Elem>) -> SkewPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        &self.ring.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Elem::ONE
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }

    /// `c * self` (left scalar multiplication).
    pub fn scale_left(&self, c: Elem) -> SkewPoly {
        let f = &self.ring.field;
        self.ring
            .poly(self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// Left multiple by the inverse of the leading coefficient.
    pub fn monic(&self) -> SkewPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale_left(self.ring.field.inv(self.lead()))
    }

    pub fn skew_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.ring.check(&other.ring)?;
        let f = &self.ring.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.ring.poly(
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    /// `(a x^i)(b x^j) = a theta^i(b) x^{i+j}`.
    pub fn skew_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.ring.check(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let f = &self.ring.field;
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = f.mul(a, self.ring.theta(b, i as i64));
                out[i + j] = f.add(out[i + j], term);
            }
        }
        Ok(self.ring.poly(out))
    }

    /// `self = q * g + rem` with `deg rem < deg g`.
    pub fn right_divmod(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.ring.check(&g.ring)?;
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.ring.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((self.ring.zero(), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dg];
        for s in (0..quot.len()).rev() {
            let top = rem[s + dg];
            if top.is_zero() {
                continue;
            }
            // (c x^s) g has leading coefficient c theta^s(lead g)
            let c = f.mul(top, f.inv(self.ring.theta(g.lead(), s as i64)));
            quot[s] = c;
            for (i, &gi) in g.coeffs.iter().enumerate() {
                let t = f.mul(c, self.ring.theta(gi, s as i64));
                rem[s + i] = f.sub(rem[s + i], t);
            }
        }
        Ok((self.ring.poly(quot), self.ring.poly(rem)))
    }

    /// `self = g * q + rem` with `deg rem < deg g`.
    pub fn left_divmod(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.ring.check(&g.ring)?;
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.ring.field;
        let mut rem = self.clone();
        if self.coeffs.len() <= dg {
            return Ok((self.ring.zero(), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; self.coeffs.len() - dg];
        let inv_lead = f.inv(g.lead());
        for s in (0..quot.len()).rev() {
            let top = rem.coeff(s + dg);
            if top.is_zero() {
                continue;
            }
            // g (c x^s) has leading coefficient lead(g) theta^dg(c)
            let c = self.ring.theta(f.mul(inv_lead, top), -(dg as i64));
            quot[s] = c;
            let sub = g.skew_mul(&self.ring.monomial(c, s))?;
            rem = &rem - &sub;
        }
        Ok((self.ring.poly(quot), rem))
    }

    /// True when `self` right-divides `f`.
    pub fn right_divides(&self, f: &SkewPoly) -> bool {
        !self.is_zero()
            && f.right_divmod(self)
                .map(|(_, r)| r.is_zero())
                .unwrap_or(false)
    }

    /// Monic greatest common right divisor (right Euclidean algorithm).
    pub fn gcrd(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.ring.check(&other.ring)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.right_divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Skew reciprocal: coefficient `i` is `theta^i(h_{k-i})`, `k = deg h`.
    pub fn skew_reciprocal(&self) -> Result<SkewPoly> {
        let k = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.ring.poly(
            (0..=k)
                .map(|i| self.ring.theta(self.coeffs[k - i], i as i64))
                .collect(),
        ))
    }

    /// Coefficientwise `a -> a^{p^{t/2}}`.
    pub fn conjugate(&self) -> Result<SkewPoly> {
        let f = &self.ring.field;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| f.conj(a))
            .collect::<Result<Vec<_>>>()?;
        if !f.t().is_multiple_of(2) {
            return Err(Error::OddExtensionDegree(f.t()));
        }
        Ok(self.ring.poly(coeffs))
    }

    /// Membership in the center `F_q^theta[x^m]`.
    pub fn is_central(&self) -> bool {
        let m = self.ring.order();
        let f = &self.ring.field;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .all(|(i, &c)| i % m == 0 && self.ring.theta(c, 1) == c && f.contains(c))
    }

    /// Some monic central polynomial of positive degree right-divides `self`.
    ///
    /// Central polynomials commute with everything, so it suffices to scan
    /// monic elements of `F_q^theta[x^m]` up to `deg self`.
    pub fn has_central_divisor(&self) -> bool {
        self.central_divisor().is_some()
    }

    /// A monic central right divisor of positive degree, lowest degree first.
    pub fn central_divisor(&self) -> Option<SkewPoly> {
        let deg = self.degree()?;
        let m = self.ring.order();
        let fixed = self
            .ring
            .field
            .fixed_subfield(self.ring.r % self.ring.field.t().max(1));
        for e in 1..=deg / m {
            let count = (fixed.len() as u128).checked_pow(e as u32)?;
            for mut idx in 0..count {
                let mut coeffs = vec![Elem::ZERO; e * m + 1];
                for j in 0..e {
                    coeffs[j * m] = fixed[(idx % fixed.len() as u128) as usize];
                    idx /= fixed.len() as u128;
                }
                coeffs[e * m] = Elem::ONE;
                let c = self.ring.poly(coeffs);
                if c.right_divides(self) {
                    return Some(c);
                }
            }
        }
        None
    }

    /// Evaluates whether `self` (monic) right-divides `target` without allocating a quotient.
    fn right_divides_monic_fast(&self, target: &[Elem], buf: &mut Vec<Elem>) -> bool {
        let d = self.coeffs.len() - 1;
        let f = &self.ring.field;
        buf.clear();
        buf.extend_from_slice(target);
        for top in (d..buf.len()).rev() {
            let c = buf[top];
            if c.is_zero() {
                continue;
            }
            let s = (top - d) as i64;
            for (i, &gi) in self.coeffs.iter().enumerate() {
                if gi.is_zero() {
                    continue;
                }
                let t = f.mul(c, self.ring.theta(gi, s));
                buf[top - d + i] = f.sub(buf[top - d + i], t);
            }
        }
        buf[..d].iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for SkewPoly {
    /// Descending terms, e.g. `x^2+w*x+w^6`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let f = &self.ring.field;
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, "+")?;
            }
            first = false;
            let mut cs = f.format(c);
            if cs.contains('+') {
                cs = format!("({cs})");
            }
            match (j, c == Elem::ONE) {
                (0, _) => write!(out, "{cs}")?,
                (1, true) => write!(out, "x")?,
                (1, false) => write!(out, "{cs}*x")?,
                (_, true) => write!(out, "x^{j}")?,
                (_, false) => write!(out, "{cs}*x^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ops::Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        self.skew_add(rhs)
            .expect("operands from different skew rings")
    }
}

impl ops::Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        let f = &self.ring.field;
        self.ring
            .poly(self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }
}

impl ops::Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self + &(-rhs)
    }
}

/// Panics on ring mismatch; use [`SkewPoly::skew_mul`] for the checked form.
impl ops::Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        self.skew_mul(rhs)
            .expect("operands from different skew rings")
    }
}

/// `x^n - lambda` together with its parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstaModulus {
    n: usize,
    lambda: Elem,
    poly: SkewPoly,
}

impl ConstaModulus {
    pub fn new(ring: &SkewRing, n: usize, lambda: Elem) -> Result<ConstaModulus> {
        if lambda.is_zero() || !ring.field().contains(lambda) {
            return Err(Error::NonUnit);
        }
        if n == 0 {
            return Err(Error::Dimension("length must be positive".into()));
        }
        Ok(ConstaModulus {
            n,
            lambda,
            poly: ring.xn_minus(n, lambda),
        })
    }

    pub fn ring(&self) -> &SkewRing {
        self.poly.ring()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    pub fn poly(&self) -> &SkewPoly {
        &self.poly
    }

    pub fn lambda_is_involutive(&self) -> bool {
        let f = self.ring().field();
        f.mul(self.lambda, self.lambda) == f.one()
    }

    pub fn order_divides_length(&self) -> bool {
        self.n.is_multiple_of(self.ring().order())
    }

    /// Verified membership of `x^n - lambda` in the center.
    pub fn is_central(&self) -> bool {
        self.poly.is_central()
    }

    /// All monic degree-`d` right divisors of `x^n - lambda`, by exhaustive
    /// scan of the `q^d` candidates. Sorted lexicographically on the
    /// ascending coefficient tuple.
    pub fn right_divisors(&self, d: usize, budget: u128) -> Result<Vec<SkewPoly>> {
        let ring = self.ring();
        if d > self.n {
            return Ok(Vec::new());
        }
        let q = ring.field().q() as u128;
        let needed = q.checked_pow(d as u32).unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let target = self.poly.coeffs().to_vec();
        let mut found: Vec<SkewPoly> = (0..needed as u64)
            .into_par_iter()
            .map_init(Vec::new, |buf, idx| {
                let g = ring.monic_from_index(d, idx as u128);
                g.right_divides_monic_fast(&target, buf).then_some(g)
            })
            .flatten()
            .collect();
        found.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        Ok(found)
    }

    /// All monic right divisors with degree in `degrees`.
    pub fn right_divisors_in(
        &self,
        degrees: impl IntoIterator<Item = usize>,
        budget: u128,
    ) -> Result<Vec<SkewPoly>> {
        let mut out = Vec::new();
        for d in degrees {
            out.extend(self.right_divisors(d, budget)?);
        }
        Ok(out)
    }

    /// The `h` with `h g = x^n - lambda`; also requires `g h = x^n - lambda`.
    pub fn cofactor(&self, g: &SkewPoly) -> Result<SkewPoly> {
        let (h, rem) = self.poly.right_divmod(g)?;
        if !rem.is_zero() {
            return Err(Error::NotADivisor(g.to_string()));
        }
        if g.skew_mul(&h)? != self.poly {
            return Err(Error::TwoSidedMismatch);
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f16_ring() -> SkewRing {
        SkewRing::new(&Field::gf16(), 2)
    }

    fn f9_ring() -> SkewRing {
        SkewRing::new(&Field::gf9(), 1)
    }

    #[test]
    fn f16_factorizations() {
        let r = f16_ring();
        let one = r.field().one();
        let xm1 = r.xn_minus(4, one);
        let a = r.parse("x^2+w*x+w^9").unwrap();
        let b = r.parse("x^2+w*x+w^6").unwrap();
        assert_eq!(&a * &b, xm1);
        let c = r.parse("x^3+w^12*x^2+x+w^12").unwrap();
        let d = r.parse("x+w^3").unwrap();
        assert_eq!(&c * &d, xm1);
        assert_eq!(&a * &r.one(), a);
        assert!((&a * &r.zero()).is_zero());
    }

    #[test]
    fn f9_factorization() {
        let r = f9_ring();
        let g = r.parse("x^4+w*x^2+1").unwrap();
        let h = r.parse("x^6+w^5*x^4+w*x^2+2").unwrap();
        assert_eq!(&g * &h, r.xn_minus(10, r.field().one()));
    }

    #[test]
    fn divisions() {
        let r = f16_ring();
        let xm1 = r.xn_minus(4, r.field().one());
        let g = r.parse("x^2+w*x+w^6").unwrap();
        let (q, rem) = xm1.right_divmod(&g).unwrap();
        assert_eq!(q, r.parse("x^2+w*x+w^9").unwrap());
        assert!(rem.is_zero());
        let (q, rem) = g.right_divmod(&g).unwrap();
        assert!(q.is_one() && rem.is_zero());

        let g9 = r.parse("x^2+w*x+w^9").unwrap();
        let (q, rem) = xm1.left_divmod(&g9).unwrap();
        assert_eq!(q, r.parse("x^2+w*x+w^6").unwrap());
        assert!(rem.is_zero());
        assert_eq!(xm1.right_divmod(&r.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn norm_oracle_for_linear_divisors() {
        let r = SkewRing::new(&Field::gf4(), 1);
        let f = r.field().clone();
        for c in f.elements() {
            for a in f.units() {
                let modp = r.xn_minus(6, a);
                let lin = r.poly(vec![f.neg(c), f.one()]);
                let (_, rem) = modp.right_divmod(&lin).unwrap();
                let expected = f.sub(r.norm(c, 6), a);
                assert_eq!(
                    rem,
                    r.constant(expected),
                    "c={} a={}",
                    f.format(c),
                    f.format(a)
                );
            }
        }
        let w = f.generator();
        let lin = r.poly(vec![w, f.one()]);
        assert!(lin.right_divides(&r.xn_minus(6, f.one())));
    }

    #[test]
    fn gcrd_basics() {
        let r = f9_ring();
        let f = r.parse("2*x^2+w").unwrap();
        assert_eq!(f.gcrd(&r.zero()).unwrap(), f.monic());
        assert_eq!(r.zero().gcrd(&r.zero()), Err(Error::BothZero));
        let g = r.parse("x+w^3").unwrap();
        let a = &r.parse("x^2+1").unwrap() * &g;
        let b = &r.parse("w*x+2").unwrap() * &g;
        let gc = a.gcrd(&b).unwrap();
        assert!(g.right_divides(&gc));
    }

    #[test]
    fn reciprocal_and_conjugate() {
        let r = f9_ring();
        let c = r.constant(r.field().gen_pow(3));
        assert_eq!(c.skew_reciprocal().unwrap(), c);
        assert_eq!(r.zero().skew_reciprocal(), Err(Error::ZeroPolynomial));
        let f = r.parse("w*x+1").unwrap();
        assert_eq!(f.conjugate().unwrap(), r.parse("w^3*x+1").unwrap());
        assert_eq!(f.conjugate().unwrap().conjugate().unwrap(), f);
        let odd = SkewRing::new(&Field::new(2, 3, &[1, 1, 0, 1]).unwrap(), 1);
        assert_eq!(odd.x_pow(1).conjugate(), Err(Error::OddExtensionDegree(3)));
    }

    #[test]
    fn centrality() {
        let r = f9_ring();
        assert!(r.parse("x^2-1").unwrap().is_central());
        assert!(!r.parse("w*x^2").unwrap().is_central());
        assert!(!r.parse("x+1").unwrap().is_central());
        let g = r.parse("x^2-1").unwrap();
        assert!(g.has_central_divisor());
        assert_eq!(g.central_divisor().unwrap(), g);
        assert!(!r.parse("x+w").unwrap().has_central_divisor());
        let m = ConstaModulus::new(&r, 10, r.field().from_int(-1)).unwrap();
        assert!(m.is_central() && m.lambda_is_involutive() && m.order_divides_length());
    }

    #[test]
    fn divisor_enumeration() {
        let r = f16_ring();
        let m = ConstaModulus::new(&r, 4, r.field().one()).unwrap();
        let ds = m.right_divisors(2, DEFAULT_BUDGET).unwrap();
        assert!(ds.contains(&r.parse("x^2+w*x+w^6").unwrap()));
        assert_eq!(m.right_divisors(0, DEFAULT_BUDGET).unwrap(), vec![r.one()]);
        assert!(matches!(
            m.right_divisors(4, 100),
            Err(Error::BudgetExceeded { .. })
        ));
        for g in &ds {
            let h = m.cofactor(g).unwrap();
            assert_eq!(&h * g, *m.poly());
        }

        let r4 = SkewRing::new(&Field::gf4(), 1);
        let m4 = ConstaModulus::new(&r4, 6, r4.field().one()).unwrap();
        let lin = m4.right_divisors(1, DEFAULT_BUDGET).unwrap();
        assert!(lin.contains(&r4.parse("x+w").unwrap()));
        assert!(lin.contains(&r4.parse("x+w^2").unwrap()));
    }

    #[test]
    fn cofactors() {
        let r = f16_ring();
        let m = ConstaModulus::new(&r, 4, r.field().one()).unwrap();
        let g = r.parse("x^2+w*x+w^6").unwrap();
        assert_eq!(m.cofactor(&g).unwrap(), r.parse("x^2+w*x+w^9").unwrap());
        assert_eq!(m.cofactor(&r.one()).unwrap(), *m.poly());
        assert!(matches!(
            m.cofactor(&r.parse("x+w").unwrap()),
            Err(Error::NotADivisor(_))
        ));

        let r9 = f9_ring();
        let m9 = ConstaModulus::new(&r9, 10, r9.field().one()).unwrap();
        let g = r9.parse("x^4+w^3*x^2+1").unwrap();
        assert_eq!(
            m9.cofactor(&g).unwrap(),
            r9.parse("x^6+w^7*x^4+w^3*x^2+2").unwrap()
        );
    }

    #[test]
    fn two_sided_mismatch_when_not_central() {
        // lambda outside the fixed field: x^3 - w is not central over F_4
        let r = SkewRing::new(&Field::gf4(), 1);
        let w = r.field().generator();
        let m = ConstaModulus::new(&r, 3, w).unwrap();
        assert!(!m.is_central());
        let g = r.parse("x+w").unwrap();
        assert!(g.right_divides(m.poly()));
        assert_eq!(m.cofactor(&g), Err(Error::TwoSidedMismatch));
    }

    #[test]
    fn ring_mismatch() {
        let a = f9_ring().x_pow(1);
        let b = SkewRing::new(&Field::gf9(), 2).x_pow(1);
        assert_eq!(a.skew_mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn display_descending() {
        let r = f16_ring();
        let g = r.parse("w^6+x^2+w*x").unwrap();
        assert_eq!(g.to_string(), "x^2+w*x+w^6");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(r.parse(&g.to_string()).unwrap(), g);
    }
}
