//! Dense commutative polynomials over the prime field `Z_p`.
//!
//! Coefficients are stored ascending and kept trimmed (no trailing zeros);
//! the zero polynomial is the empty vector. Used for modulus validation in
//! [`crate::gf`] and for factoring `y^k -/+ 1` in [`crate::census`].

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl FpPoly {
    pub fn new(p: u32, coeffs: impl IntoIterator<Item = i64>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.rem_euclid(p as i64) as u32)
            .collect();
        let mut f = FpPoly { p, coeffs };
        f.trim();
        f
    }

    pub fn zero(p: u32) -> Self {
        FpPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u32) -> Self {
        FpPoly { p, coeffs: vec![1] }
    }

    /// `y^deg + sign` with `sign` in `{1, -1}`.
    pub fn binomial(p: u32, deg: usize, sign: i64) -> Self {
        let mut c = vec![0i64; deg + 1];
        c[0] = sign;
        c[deg] += 1;
        FpPoly::new(p, c)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        let mut f = FpPoly { p: self.p, coeffs };
        f.trim();
        f
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect();
        FpPoly { p: self.p, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        let mut f = FpPoly {
            p: self.p,
            coeffs: out.into_iter().map(|c| c as u32).collect(),
        };
        f.trim();
        f
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(FpPoly::one(self.p), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lead = inv_mod(divisor.lead(), self.p);
        let p = self.p as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return (FpPoly::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = rem[shift + dd] * inv_lead as u64 % p;
            quot[shift] = c;
            if c == 0 {
                continue;
            }
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                let sub = c * dc as u64 % p;
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        let mut q = FpPoly {
            p: self.p,
            coeffs: quot.into_iter().map(|c| c as u32).collect(),
        };
        let mut r = FpPoly {
            p: self.p,
            coeffs: rem.into_iter().map(|c| c as u32).collect(),
        };
        q.trim();
        r.trim();
        (q, r)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lead(), self.p) as u64;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| (c as u64 * inv % self.p as u64) as u32)
            .collect();
        FpPoly { p: self.p, coeffs }
    }

    /// `y^d f(1/y)`, normalized monic. Requires `f(0) != 0`.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        let mut f = FpPoly { p: self.p, coeffs };
        f.trim();
        f.monic()
    }

    /// Monic polynomials of exact degree `d`, in lexicographic order of the
    /// lower coefficients.
    pub fn monics_of_degree(p: u32, d: usize) -> impl Iterator<Item = FpPoly> {
        let count = (p as u64).pow(d as u32);
        (0..count).map(move |mut idx| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push((idx % p as u64) as u32);
                idx /= p as u64;
            }
            coeffs.push(1);
            FpPoly { p, coeffs }
        })
    }

    /// Irreducibility by exhaustive search for a monic factor of degree at most half.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else {
            return false;
        };
        if deg == 0 {
            return false;
        }
        (1..=deg / 2).all(|d| FpPoly::monics_of_degree(self.p, d).all(|g| !g.divides(self)))
    }

    /// Complete factorization into monic irreducibles with multiplicity, by
    /// trial division against monic candidates of increasing degree. The
    /// first divisor found at each degree is necessarily irreducible.
    pub fn factor(&self) -> Vec<(FpPoly, usize)> {
        let mut rest = self.monic();
        let mut out: Vec<(FpPoly, usize)> = Vec::new();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            for cand in FpPoly::monics_of_degree(self.p, d) {
                let mut mult = 0;
                loop {
                    let (q, r) = rest.div_rem(&cand);
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    out.push((cand, mult));
                }
                if rest.degree().unwrap_or(0) < 2 * d {
                    break;
                }
            }
            d += 1;
        }
        if rest.degree().unwrap_or(0) >= 1 {
            match out.iter_mut().find(|(f, _)| *f == rest) {
                Some(entry) => entry.1 += 1,
                None => out.push((rest, 1)),
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for FpPoly {
    /// Descending terms in the variable `y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "y")?,
                (1, c) => write!(f, "{c}*y")?,
                (i, 1) => write!(f, "y^{i}")?,
                (i, c) => write!(f, "{c}*y^{i}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_y2_minus_1_over_f3() {
        let f = FpPoly::binomial(3, 2, -1);
        let fac = f.factor();
        assert_eq!(
            fac,
            vec![(FpPoly::new(3, [1, 1]), 1), (FpPoly::new(3, [2, 1]), 1)]
        );
    }

    #[test]
    fn factor_reconstructs() {
        for p in [2u32, 3, 5, 7] {
            for k in 1..=12usize {
                for sign in [-1i64, 1] {
                    let f = FpPoly::binomial(p, k, sign);
                    let prod = f.factor().iter().fold(FpPoly::one(p), |acc, (g, m)| {
                        assert!(g.is_irreducible(), "{g} over F_{p}");
                        acc.mul(&g.pow(*m as u32))
                    });
                    assert_eq!(prod, f, "p={p} k={k} sign={sign}");
                }
            }
        }
    }

    #[test]
    fn irreducibility() {
        assert!(FpPoly::new(2, [1, 1, 0, 0, 1]).is_irreducible());
        assert!(FpPoly::new(3, [2, 2, 1]).is_irreducible());
        assert!(!FpPoly::new(2, [1, 0, 1]).is_irreducible());
        assert!(FpPoly::new(3, [1, 0, 1]).is_irreducible());
    }

    #[test]
    fn reciprocal_pairs() {
        // y - 2 over F_5 has reciprocal y + 2
        assert_eq!(FpPoly::new(5, [-2, 1]).reciprocal(), FpPoly::new(5, [2, 1]));
        assert_eq!(
            FpPoly::new(3, [1, 0, 1]).reciprocal(),
            FpPoly::new(3, [1, 0, 1])
        );
    }

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
