//! Counting Euclidean and Hermitian LCD skew cyclic and negacyclic codes of
//! length `n = 2k` and dimension `k` over `F_{p^2}` (with `theta: a -> a^p`)
//! whose generator has no central factor, and the derived counts over
//! `F_{p^2} + vF_{p^2}`.
//!
//! The closed forms work in `F_p[y]`, `y = x^2`. Write `k = p^s t` with
//! `p` not dividing `t`; then `y^k -+ 1 = (y^t -+ 1)^{p^s}` and every
//! distinct irreducible factor of `y^t -+ 1` is either self-reciprocal or
//! paired with its reciprocal. The degree `d` in the product terms is the
//! degree in `y`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{Inner, SkewConstaCode};
use crate::error::{Error, Result};
use crate::fp_poly::{is_prime, FpPoly};
use crate::gf::Field;
use crate::ring_r::RLambda;
use crate::skewpoly::{ConstaModulus, SkewRing};

/// Default candidate budget for [`brute_force_census`].
pub const ORACLE_BUDGET: u128 = 1_000_000;

/// `x^n - 1` or `x^n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Modulus {
    Cyclic,
    Negacyclic,
}

impl Modulus {
    /// Constant term `c` in `y^k + c`.
    fn constant(self) -> i64 {
        match self {
            Modulus::Cyclic => -1,
            Modulus::Negacyclic => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "euclid-cyclic")]
    EuclidCyclic,
    #[serde(rename = "herm-cyclic")]
    HermCyclic,
    #[serde(rename = "euclid-nega")]
    EuclidNega,
    #[serde(rename = "herm-nega")]
    HermNega,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::EuclidCyclic,
        Variant::HermCyclic,
        Variant::EuclidNega,
        Variant::HermNega,
    ];

    pub fn new(modulus: Modulus, inner: Inner) -> Variant {
        match (modulus, inner) {
            (Modulus::Cyclic, Inner::Euclidean) => Variant::EuclidCyclic,
            (Modulus::Cyclic, Inner::Hermitian) => Variant::HermCyclic,
            (Modulus::Negacyclic, Inner::Euclidean) => Variant::EuclidNega,
            (Modulus::Negacyclic, Inner::Hermitian) => Variant::HermNega,
        }
    }

    pub fn modulus(self) -> Modulus {
        match self {
            Variant::EuclidCyclic | Variant::HermCyclic => Modulus::Cyclic,
            Variant::EuclidNega | Variant::HermNega => Modulus::Negacyclic,
        }
    }

    pub fn inner(self) -> Inner {
        match self {
            Variant::EuclidCyclic | Variant::EuclidNega => Inner::Euclidean,
            Variant::HermCyclic | Variant::HermNega => Inner::Hermitian,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::EuclidCyclic => "euclid-cyclic",
            Variant::HermCyclic => "herm-cyclic",
            Variant::EuclidNega => "euclid-nega",
            Variant::HermNega => "herm-nega",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        Variant::ALL
            .into_iter()
            .find(|v| v.to_string() == s)
            .ok_or_else(|| Error::UnsupportedVariant(s.to_string()))
    }
}

/// `p`, `n = 2k`, and `k = p^s t` with `p` not dividing `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusInput {
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub s: u32,
    pub t: usize,
}

impl CensusInput {
    pub fn new(p: u32, n: usize) -> Result<CensusInput> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::Dimension(format!(
                "census length must be even and positive, got {n}"
            )));
        }
        let k = n / 2;
        let (mut s, mut t) = (0, k);
        while t % p as usize == 0 {
            t /= p as usize;
            s += 1;
        }
        Ok(CensusInput { p, n, k, s, t })
    }

    /// `p^s`.
    pub fn ps(&self) -> u64 {
        (self.p as u64).pow(self.s)
    }

    /// `F_{p^2}` with the default modulus and the Frobenius twist.
    pub fn ring(&self) -> Result<SkewRing> {
        Ok(SkewRing::new(&Field::default_for(self.p, 2)?, 1))
    }
}

/// Irreducible factors of `y^k -+ 1` over `F_p`, classified by reciprocity.
/// Every listed factor occurs with multiplicity `p^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorClasses {
    pub modulus: Modulus,
    pub input: CensusInput,
    /// Self-reciprocal factors of degree 1.
    pub linear: Vec<FpPoly>,
    /// Self-reciprocal irreducibles of degree > 1.
    pub f_ir: Vec<FpPoly>,
    /// Products `f f^rec` with `f != f^rec`, each as `(product, f, f^rec)`.
    pub f_red: Vec<(FpPoly, FpPoly, FpPoly)>,
}

pub fn factor_classes(input: &CensusInput, modulus: Modulus) -> FactorClasses {
    let p = input.p;
    let base = FpPoly::binomial(p, input.t, modulus.constant());
    let mut classes = FactorClasses {
        modulus,
        input: *input,
        linear: Vec::new(),
        f_ir: Vec::new(),
        f_red: Vec::new(),
    };
    let factors: Vec<FpPoly> = base.factor().into_iter().map(|(f, _)| f).collect();
    for f in &factors {
        let rec = f.reciprocal();
        if rec == *f {
            if f.degree() == Some(1) {
                classes.linear.push(f.clone());
            } else {
                classes.f_ir.push(f.clone());
            }
        } else if f < &rec {
            classes.f_red.push((f.mul(&rec), f.clone(), rec));
        }
    }
    classes
}

impl FactorClasses {
    /// The polynomial `y^k -+ 1` being classified.
    pub fn target(&self) -> FpPoly {
        FpPoly::binomial(self.input.p, self.input.k, self.modulus.constant())
    }

    /// Product of every class member raised to `p^s`.
    pub fn reconstruct(&self) -> FpPoly {
        let p = self.input.p;
        let all = self
            .linear
            .iter()
            .chain(&self.f_ir)
            .chain(self.f_red.iter().map(|(prod, _, _)| prod));
        all.fold(FpPoly::one(p), |acc, f| acc.mul(f))
            .pow(self.input.ps() as u32)
    }

    /// Number of monic divisors of `y^k -+ 1` in `F_p[y]`.
    pub fn divisor_count(&self) -> u128 {
        let e = self.input.ps() as u128 + 1;
        let singles = self.linear.len() + self.f_ir.len() + 2 * self.f_red.len();
        e.pow(singles as u32)
    }

    /// `prod_{F_ir} (p^d - p^{d/2}) p^{d(p^s - 1)} * prod_{F_red} (1 + p^{d/2}) p^{(2p^s - 1)d/2}`.
    pub fn product_term(&self) -> Result<u128> {
        let p = self.input.p as u128;
        let ps = self.input.ps() as u32;
        let pw = |e: u32| p.checked_pow(e).ok_or(Error::CountOverflow);
        let mut acc: u128 = 1;
        for f in &self.f_ir {
            let d = deg(f);
            let term = (pw(d)? - pw(d / 2)?)
                .checked_mul(pw(d * (ps - 1))?)
                .ok_or(Error::CountOverflow)?;
            acc = acc.checked_mul(term).ok_or(Error::CountOverflow)?;
        }
        for (f, _, _) in &self.f_red {
            let d = deg(f);
            let term = (1 + pw(d / 2)?)
                .checked_mul(pw((2 * ps - 1) * d / 2)?)
                .ok_or(Error::CountOverflow)?;
            acc = acc.checked_mul(term).ok_or(Error::CountOverflow)?;
        }
        Ok(acc)
    }
}

fn deg(f: &FpPoly) -> u32 {
    f.degree().unwrap_or(0) as u32
}

/// The leading factors `N_1..N_4`. In characteristic 2, `x^n + 1 = x^n - 1`,
/// so the negacyclic variants take the cyclic values.
pub fn leading_factor(input: &CensusInput, variant: Variant) -> Result<u128> {
    let p = input.p as u128;
    let base = p
        .checked_pow(input.ps() as u32 - 1)
        .ok_or(Error::CountOverflow)?;
    let k_even = input.k.is_multiple_of(2);
    let variant = if input.p == 2 {
        Variant::new(Modulus::Cyclic, variant.inner())
    } else {
        variant
    };
    let n = match variant {
        Variant::EuclidCyclic if input.p == 2 => 2u128
            .checked_pow(input.ps() as u32)
            .ok_or(Error::CountOverflow)?,
        Variant::EuclidCyclic if k_even => base
            .checked_mul(base)
            .and_then(|b| b.checked_mul(p * p - 1))
            .ok_or(Error::CountOverflow)?,
        Variant::EuclidCyclic => base * p_minus_unit_power(p, p.div_ceil(2)),
        Variant::HermCyclic if input.p == 2 || k_even => 0,
        Variant::HermCyclic => base * (p + 1),
        Variant::EuclidNega if k_even => 1,
        Variant::EuclidNega => base * p_minus_unit_power(p, (p - 1) / 2),
        Variant::HermNega if k_even => 1,
        Variant::HermNega => 0,
    };
    Ok(n)
}

/// `p - (-1)^e`.
fn p_minus_unit_power(p: u128, e: u128) -> u128 {
    if e.is_multiple_of(2) {
        p - 1
    } else {
        p + 1
    }
}

/// Number of LCD codes of the given variant (closed form).
pub fn base_count(input: &CensusInput, variant: Variant) -> Result<u128> {
    let classes = factor_classes(input, variant.modulus());
    leading_factor(input, variant)?
        .checked_mul(classes.product_term()?)
        .ok_or(Error::CountOverflow)
}

/// Number of LCD skew `lambda`-constacyclic codes over `F_{p^2} + vF_{p^2}` (closed form).
pub fn r_count(input: &CensusInput, lambda: RLambda, inner: Inner) -> Result<u128> {
    if input.p == 2 && lambda == RLambda::OneMinusTwoV {
        return Err(Error::CharacteristicTwoWithOneMinusTwoV);
    }
    let minus = factor_classes(input, Modulus::Cyclic).product_term()?;
    let plus = factor_classes(input, Modulus::Negacyclic).product_term()?;
    let n = |v: Variant| leading_factor(input, v);
    let mul = |xs: &[u128]| {
        xs.iter()
            .try_fold(1u128, |a, &b| a.checked_mul(b))
            .ok_or(Error::CountOverflow)
    };
    match (inner, lambda) {
        (Inner::Euclidean, RLambda::One) => mul(&[
            n(Variant::EuclidCyclic)?,
            n(Variant::EuclidCyclic)?,
            minus,
            minus,
        ]),
        (Inner::Euclidean, RLambda::MinusOne) => {
            mul(&[n(Variant::EuclidNega)?, n(Variant::EuclidNega)?, plus, plus])
        }
        (Inner::Euclidean, RLambda::OneMinusTwoV) => mul(&[
            n(Variant::EuclidCyclic)?,
            n(Variant::EuclidNega)?,
            minus,
            plus,
        ]),
        (Inner::Hermitian, RLambda::One) => mul(&[
            n(Variant::HermCyclic)?,
            n(Variant::HermCyclic)?,
            minus,
            minus,
        ]),
        // printed with an unsquared leading factor; N_4 is 0 or 1
        (Inner::Hermitian, RLambda::MinusOne) => mul(&[n(Variant::HermNega)?, plus, plus]),
        (Inner::Hermitian, RLambda::OneMinusTwoV) => {
            mul(&[n(Variant::HermNega)?, n(Variant::HermCyclic)?, plus, minus])
        }
    }
}

/// Exhaustive count: monic degree-`k` right divisors of `x^n -+ 1` over
/// `F_{p^2}` with no central right factor that pass the gcrd LCD test.
pub fn brute_force_census(input: &CensusInput, variant: Variant, budget: u128) -> Result<u128> {
    let ring = input.ring()?;
    let f = ring.field();
    let lambda = match variant.modulus() {
        Modulus::Cyclic => f.one(),
        Modulus::Negacyclic => f.from_int(-1),
    };
    let modulus = ConstaModulus::new(&ring, input.n, lambda)?;
    let divisors = modulus.right_divisors(input.k, budget)?;
    let inner = variant.inner();
    let verdicts: Vec<Result<bool>> = divisors
        .par_iter()
        .filter(|g| !g.has_central_divisor())
        .map(|g| SkewConstaCode::from_generator_poly(&modulus, g)?.is_skew_lcd(inner))
        .collect();
    let mut count = 0u128;
    for v in verdicts {
        count += v? as u128;
    }
    Ok(count)
}

/// Componentwise oracle: `C_1` is `(alpha + beta)`-constacyclic, `C_2` is `alpha`-constacyclic.
pub fn brute_force_r_census(
    input: &CensusInput,
    lambda: RLambda,
    inner: Inner,
    budget: u128,
) -> Result<u128> {
    let (c1, c2) = match lambda {
        RLambda::One => (Modulus::Cyclic, Modulus::Cyclic),
        RLambda::MinusOne => (Modulus::Negacyclic, Modulus::Negacyclic),
        RLambda::OneMinusTwoV if input.p == 2 => {
            return Err(Error::CharacteristicTwoWithOneMinusTwoV)
        }
        RLambda::OneMinusTwoV => (Modulus::Negacyclic, Modulus::Cyclic),
    };
    let a = brute_force_census(input, Variant::new(c1, inner), budget)?;
    let b = brute_force_census(input, Variant::new(c2, inner), budget)?;
    a.checked_mul(b).ok_or(Error::CountOverflow)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub poly: String,
    pub deg: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesReport {
    pub modulus: Modulus,
    pub linear: Vec<ClassEntry>,
    #[serde(rename = "F_ir")]
    pub f_ir: Vec<ClassEntry>,
    #[serde(rename = "F_red")]
    pub f_red: Vec<ClassEntry>,
}

impl From<&FactorClasses> for ClassesReport {
    fn from(c: &FactorClasses) -> Self {
        let entry = |f: &FpPoly| ClassEntry {
            poly: f.to_string(),
            deg: f.degree().unwrap_or(0),
        };
        ClassesReport {
            modulus: c.modulus,
            linear: c.linear.iter().map(entry).collect(),
            f_ir: c.f_ir.iter().map(entry).collect(),
            f_red: c.f_red.iter().map(|(prod, _, _)| entry(prod)).collect(),
        }
    }
}

/// JSON census report. Exactly one of `variant` and `r_lambda` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub p: u32,
    pub n: usize,
    pub s: u32,
    pub t: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<Variant>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_lambda: Option<RLambda>,
    pub inner: Inner,
    pub formula_count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    pub factor_classes: Vec<ClassesReport>,
}

/// What to count: a base variant over `F_{p^2}` or an R-level `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusTarget {
    Base(Variant),
    Ring(RLambda, Inner),
}

pub fn census_report(
    input: &CensusInput,
    target: CensusTarget,
    oracle: Option<u128>,
) -> Result<CensusReport> {
    let (formula, variant, r_lambda, inner, moduli) = match target {
        CensusTarget::Base(v) => (
            base_count(input, v)?,
            Some(v),
            None,
            v.inner(),
            vec![v.modulus()],
        ),
        CensusTarget::Ring(l, i) => {
            let moduli = match l {
                RLambda::One => vec![Modulus::Cyclic],
                RLambda::MinusOne => vec![Modulus::Negacyclic],
                RLambda::OneMinusTwoV => vec![Modulus::Cyclic, Modulus::Negacyclic],
            };
            (r_count(input, l, i)?, None, Some(l), i, moduli)
        }
    };
    let oracle_count = match oracle {
        None => None,
        Some(budget) => Some(match target {
            CensusTarget::Base(v) => brute_force_census(input, v, budget)?,
            CensusTarget::Ring(l, i) => brute_force_r_census(input, l, i, budget)?,
        }),
    };
    Ok(CensusReport {
        p: input.p,
        n: input.n,
        s: input.s,
        t: input.t,
        variant,
        r_lambda,
        inner,
        formula_count: formula.to_string(),
        oracle_count: oracle_count.map(|c| c.to_string()),
        agree: oracle_count.map(|c| c == formula),
        factor_classes: moduli
            .iter()
            .map(|&m| ClassesReport::from(&factor_classes(input, m)))
            .collect(),
    })
}
