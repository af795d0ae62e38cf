//! The ring `R = F_q + vF_q` with `v^2 = v`, and skew constacyclic codes over it.
//!
//! `R` splits as `F_q x F_q` through the idempotents `v` and `1 - v`:
//! `a + vb = v(a + b) + (1 - v)a`. A code `C = vC_1 + (1 - v)C_2` is stored by
//! its two components; `C_1` sits on the `v` side.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::codes::{twisted_shift, Distance, Inner, LinearCode, SkewConstaCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldElem};
use crate::matrix::{self, Row};
use crate::parse::{parse_expr, Algebra};
use crate::skewpoly::{ConstaModulus, SkewPoly, SkewRing};

/// `a + vb`.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElem {
    a: FieldElem,
    b: FieldElem,
}

impl RingElem {
    pub fn new(a: FieldElem, b: FieldElem) -> Result<RingElem> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(RingElem { a, b })
    }

    pub fn from_elems(field: &Field, a: Elem, b: Elem) -> Result<RingElem> {
        RingElem::new(FieldElem::new(field, a)?, FieldElem::new(field, b)?)
    }

    pub fn zero(field: &Field) -> RingElem {
        RingElem::from_elems(field, Elem::ZERO, Elem::ZERO).expect("zero lies in every field")
    }

    pub fn one(field: &Field) -> RingElem {
        RingElem::from_elems(field, field.one(), Elem::ZERO).expect("one lies in every field")
    }

    pub fn v(field: &Field) -> RingElem {
        RingElem::from_elems(field, Elem::ZERO, field.one()).expect("one lies in every field")
    }

    /// Parses `a+v*b` and any expression in `v` and the field symbol.
    pub fn parse(field: &Field, s: &str) -> Result<RingElem> {
        let (a, b) = parse_expr(&RAlg(field), s)?;
        RingElem::from_elems(field, a, b)
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn a(&self) -> &FieldElem {
        &self.a
    }

    pub fn b(&self) -> &FieldElem {
        &self.b
    }

    fn pair(&self) -> (Elem, Elem) {
        (self.a.value(), self.b.value())
    }

    fn check(&self, other: &RingElem) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        let f = self.field();
        let ((a, b), (c, d)) = (self.pair(), other.pair());
        RingElem::from_elems(f, f.add(a, c), f.add(b, d))
    }

    pub fn neg(&self) -> RingElem {
        let f = self.field();
        let (a, b) = self.pair();
        RingElem::from_elems(f, f.neg(a), f.neg(b)).expect("same field")
    }

    pub fn sub(&self, other: &RingElem) -> Result<RingElem> {
        self.add(&other.neg())
    }

    /// `(a + vb)(c + vd) = ac + v(ad + bc + bd)`.
    pub fn mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        let f = self.field();
        let ((a, b), (c, d)) = (self.pair(), other.pair());
        let vb = f.add(f.add(f.mul(a, d), f.mul(b, c)), f.mul(b, d));
        RingElem::from_elems(f, f.mul(a, c), vb)
    }

    pub fn is_unit(&self) -> bool {
        let (u, z) = self.split();
        !u.is_zero() && !z.is_zero()
    }

    pub fn inv(&self) -> Result<RingElem> {
        if !self.is_unit() {
            return Err(Error::NonUnit);
        }
        let f = self.field();
        let (u, z) = self.split();
        Ok(RingElem::join(f, f.inv(u), f.inv(z)))
    }

    /// CRT components `(u, z)` with `x = vu + (1 - v)z`: `u = a + b`, `z = a`.
    pub fn split(&self) -> (Elem, Elem) {
        let (a, b) = self.pair();
        (self.field().add(a, b), a)
    }

    pub fn join(field: &Field, u: Elem, z: Elem) -> RingElem {
        RingElem::from_elems(field, z, field.sub(u, z)).expect("CRT components lie in the field")
    }

    /// Conjugates both field components; `v` is fixed.
    pub fn conj(&self) -> Result<RingElem> {
        let f = self.field();
        let (a, b) = self.pair();
        RingElem::from_elems(f, f.conj(a)?, f.conj(b)?)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.pair();
        let f = self.field();
        match (a.is_zero(), b.is_zero()) {
            (_, true) => write!(out, "{}", f.format(a)),
            (true, false) => write!(out, "v*({})", f.format(b)),
            (false, false) => write!(out, "{}+v*({})", f.format(a), f.format(b)),
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{self}")
    }
}

struct RAlg<'a>(&'a Field);

impl Algebra for RAlg<'_> {
    type V = (Elem, Elem);
    fn integer(&self, c: i64) -> (Elem, Elem) {
        (self.0.from_int(c), Elem::ZERO)
    }
    fn symbol(&self, c: char) -> Option<(Elem, Elem)> {
        if c == 'v' {
            Some((Elem::ZERO, self.0.one()))
        } else {
            (c == self.0.symbol()).then(|| (self.0.generator(), Elem::ZERO))
        }
    }
    fn add(&self, x: &(Elem, Elem), y: &(Elem, Elem)) -> (Elem, Elem) {
        (self.0.add(x.0, y.0), self.0.add(x.1, y.1))
    }
    fn neg(&self, x: &(Elem, Elem)) -> (Elem, Elem) {
        (self.0.neg(x.0), self.0.neg(x.1))
    }
    fn mul(&self, x: &(Elem, Elem), y: &(Elem, Elem)) -> (Elem, Elem) {
        let f = self.0;
        let vb = f.add(f.add(f.mul(x.0, y.1), f.mul(x.1, y.0)), f.mul(x.1, y.1));
        (f.mul(x.0, y.0), vb)
    }
    fn pow(&self, x: &(Elem, Elem), e: i64) -> Result<(Elem, Elem)> {
        let f = self.0;
        let (u, z) = (f.add(x.0, x.1), x.0);
        if e < 0 && (u.is_zero() || z.is_zero()) {
            return Err(Error::NonUnit);
        }
        let (u, z) = (f.pow_signed(u, e), f.pow_signed(z, e));
        Ok((z, f.sub(u, z)))
    }
}

/// `Phi(a + vb) = (a | a + b)` coordinatewise: the `a` block, then the `a + b` block.
pub fn gray_map(x: &[RingElem]) -> Vec<Elem> {
    let mut left = Vec::with_capacity(2 * x.len());
    let mut right = Vec::with_capacity(x.len());
    for e in x {
        let (u, z) = e.split();
        left.push(z);
        right.push(u);
    }
    left.extend(right);
    left
}

/// Inverse of [`gray_map`].
pub fn gray_inverse(field: &Field, y: &[Elem]) -> Result<Vec<RingElem>> {
    if !y.len().is_multiple_of(2) {
        return Err(Error::Dimension(format!(
            "odd Gray image length {}",
            y.len()
        )));
    }
    let n = y.len() / 2;
    Ok((0..n)
        .map(|i| RingElem::join(field, y[n + i], y[i]))
        .collect())
}

pub fn lee_weight(x: &[RingElem]) -> usize {
    matrix::weight(&gray_map(x))
}

/// Parameters `[2n, k, d]` of a Gray image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayParams {
    pub len: usize,
    pub k: usize,
    pub d: Distance,
}

impl fmt::Display for GrayParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.len, self.k, self.d)
    }
}

/// `C = vC_1 + (1 - v)C_2`, skew `(alpha + v beta)`-constacyclic over `R`.
#[derive(Clone, PartialEq, Eq)]
pub struct RSkewCode {
    alpha: Elem,
    beta: Elem,
    c1: SkewConstaCode,
    c2: SkewConstaCode,
}

impl fmt::Debug for RSkewCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R-code n={} g1=<{}> g2=<{}>",
            self.n(),
            self.g1(),
            self.g2()
        )
    }
}

/// Builds `C = <v g1 + (1 - v) g2>`, with `g1 | x^n - (alpha + beta)` and `g2 | x^n - alpha`.
pub fn r_code(
    ring: &SkewRing,
    n: usize,
    alpha: Elem,
    beta: Elem,
    g1: &SkewPoly,
    g2: &SkewPoly,
) -> Result<RSkewCode> {
    let field = ring.field();
    if !field.contains(alpha) || !field.contains(beta) {
        return Err(Error::FieldMismatch);
    }
    let m1 = ConstaModulus::new(ring, n, field.add(alpha, beta))?;
    let m2 = ConstaModulus::new(ring, n, alpha)?;
    let c1 = SkewConstaCode::from_generator_poly(&m1, g1)?;
    let c2 = SkewConstaCode::from_generator_poly(&m2, g2)?;
    Ok(RSkewCode {
        alpha,
        beta,
        c1,
        c2,
    })
}

/// `lambda` values named on the command line; `1 - 2v` needs odd characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RLambda {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "-1")]
    MinusOne,
    #[serde(rename = "1-2v")]
    OneMinusTwoV,
}

impl RLambda {
    pub const ALL: [RLambda; 3] = [RLambda::One, RLambda::MinusOne, RLambda::OneMinusTwoV];

    /// `(alpha, beta)` with `lambda = alpha + v beta`.
    pub fn alpha_beta(self, field: &Field) -> Result<(Elem, Elem)> {
        match self {
            RLambda::One => Ok((field.one(), Elem::ZERO)),
            RLambda::MinusOne => Ok((field.from_int(-1), Elem::ZERO)),
            RLambda::OneMinusTwoV if field.p() == 2 => {
                Err(Error::CharacteristicTwoWithOneMinusTwoV)
            }
            RLambda::OneMinusTwoV => Ok((field.one(), field.from_int(-2))),
        }
    }
}

impl fmt::Display for RLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RLambda::One => "1",
            RLambda::MinusOne => "-1",
            RLambda::OneMinusTwoV => "1-2v",
        })
    }
}

impl std::str::FromStr for RLambda {
    type Err = Error;
    fn from_str(s: &str) -> Result<RLambda> {
        match s.replace([' ', '*'], "").as_str() {
            "1" => Ok(RLambda::One),
            "-1" => Ok(RLambda::MinusOne),
            "1-2v" => Ok(RLambda::OneMinusTwoV),
            _ => Err(Error::parse(s, "expected 1, -1 or 1-2v")),
        }
    }
}

impl RSkewCode {
    pub fn n(&self) -> usize {
        self.c1.n()
    }

    pub fn ring(&self) -> &SkewRing {
        self.c1.ring()
    }

    pub fn field(&self) -> &Field {
        self.c1.ring().field()
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    pub fn beta(&self) -> Elem {
        self.beta
    }

    pub fn lambda(&self) -> RingElem {
        RingElem::from_elems(self.field(), self.alpha, self.beta).expect("checked at construction")
    }

    /// The `v`-side component, skew `(alpha + beta)`-constacyclic.
    pub fn c1(&self) -> &SkewConstaCode {
        &self.c1
    }

    /// The `(1 - v)`-side component, skew `alpha`-constacyclic.
    pub fn c2(&self) -> &SkewConstaCode {
        &self.c2
    }

    pub fn g1(&self) -> &SkewPoly {
        self.c1.generator_poly()
    }

    pub fn g2(&self) -> &SkewPoly {
        self.c2.generator_poly()
    }

    /// `|C| = q^{2n - deg g1 - deg g2}`.
    pub fn cardinality(&self) -> Result<u128> {
        let e = 2 * self.n() - self.g1().deg() - self.g2().deg();
        (self.field().q() as u128)
            .checked_pow(e as u32)
            .ok_or(Error::CountOverflow)
    }

    /// Rows `v G_1` followed by `(1 - v) G_2`.
    pub fn generator_matrix(&self) -> Vec<Vec<RingElem>> {
        let f = self.field();
        let side = |rows: Vec<Row>, on_v: bool| -> Vec<Vec<RingElem>> {
            rows.into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|c| {
                            if on_v {
                                RingElem::join(f, c, Elem::ZERO)
                            } else {
                                RingElem::join(f, Elem::ZERO, c)
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let mut rows = side(self.c1.polynomial_rows(), true);
        rows.extend(side(self.c2.polynomial_rows(), false));
        rows
    }

    /// `diag(G_2, G_1)` over `F_q`, length `2n`.
    pub fn gray_generator(&self) -> Vec<Row> {
        let n = self.n();
        let mut rows = Vec::with_capacity(self.c1.dim() + self.c2.dim());
        for row in self.c2.code().generator() {
            let mut r = row.clone();
            r.resize(2 * n, Elem::ZERO);
            rows.push(r);
        }
        for row in self.c1.code().generator() {
            let mut r = vec![Elem::ZERO; n];
            r.extend_from_slice(row);
            rows.push(r);
        }
        rows
    }

    pub fn gray_code(&self) -> Result<LinearCode> {
        LinearCode::from_rows(self.field(), 2 * self.n(), &self.gray_generator())
    }

    /// Whether `x` lies in `C`.
    pub fn contains(&self, x: &[RingElem]) -> Result<bool> {
        Ok(self.gray_code()?.contains(&gray_map(x)))
    }

    /// Every codeword, as the span of the stacked generator rows under
    /// `R`-scalars. Refuses when `|C|` exceeds `budget`.
    pub fn codewords(&self, budget: u128) -> Result<Vec<Vec<RingElem>>> {
        let size = self.cardinality()?;
        if size > budget {
            return Err(Error::BudgetExceeded {
                needed: size,
                budget,
            });
        }
        let f = self.field();
        let scalars: Vec<(Elem, Elem)> = f
            .elements()
            .flat_map(|a| f.elements().map(move |b| (a, b)))
            .collect();
        let rows: Vec<Vec<(Elem, Elem)>> = self
            .generator_matrix()
            .iter()
            .map(|r| r.iter().map(|e| e.pair()).collect())
            .collect();
        let alg = RAlg(f);
        let mut span: HashSet<Vec<(Elem, Elem)>> =
            HashSet::from([vec![(Elem::ZERO, Elem::ZERO); self.n()]]);
        for row in &rows {
            let mut next = HashSet::with_capacity(span.len() * scalars.len());
            for word in &span {
                for s in &scalars {
                    next.insert(
                        word.iter()
                            .zip(row)
                            .map(|(w, x)| alg.add(w, &alg.mul(s, x)))
                            .collect::<Vec<_>>(),
                    );
                }
            }
            span = next;
        }
        let mut words: Vec<_> = span.into_iter().collect();
        words.sort();
        Ok(words
            .into_iter()
            .map(|w| {
                w.into_iter()
                    .map(|(a, b)| RingElem::from_elems(f, a, b).expect("same field"))
                    .collect()
            })
            .collect())
    }

    /// LCD iff both components are, by the gcrd criterion; cross-checked
    /// against the Gray image's block matrix.
    pub fn is_lcd(&self, inner: Inner) -> Result<bool> {
        let by_components = self.c1.is_skew_lcd(inner)? && self.c2.is_skew_lcd(inner)?;
        let by_gray = self.gray_code()?.is_lcd_matrix(inner)?;
        if by_components != by_gray {
            return Err(Error::CriterionDisagreement {
                criterion: "R-code lcd",
                detail: format!(
                    "components say {by_components}, Gray image says {by_gray} for {self:?}"
                ),
            });
        }
        Ok(by_components)
    }

    /// `[2n, k_1 + k_2, min(d_1, d_2)]`, distances searched up to `w_max`.
    pub fn gray_params(&self, w_max: usize) -> Result<GrayParams> {
        let comp = |c: &SkewConstaCode| -> Result<Option<Distance>> {
            if c.dim() == 0 {
                Ok(None)
            } else {
                c.code().min_distance_bounded(w_max).map(Some)
            }
        };
        let d = match (comp(&self.c1)?, comp(&self.c2)?) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return Err(Error::ZeroCode),
        };
        Ok(GrayParams {
            len: 2 * self.n(),
            k: self.c1.dim() + self.c2.dim(),
            d,
        })
    }

    /// `C^perp = vC_1^perp + (1 - v)C_2^perp`, a skew `lambda^{-1}`-constacyclic code.
    pub fn dual(&self, inner: Inner) -> Result<RSkewCode> {
        let f = self.field();
        let (d1, d2) = match inner {
            Inner::Euclidean => (self.c1.dual_code()?, self.c2.dual_code()?),
            Inner::Hermitian => (hermitian_dual(&self.c1)?, hermitian_dual(&self.c2)?),
        };
        let (u, z) = (d1.lambda(), d2.lambda());
        let dual = RSkewCode {
            alpha: z,
            beta: f.sub(u, z),
            c1: d1,
            c2: d2,
        };
        if dual.gray_code()? != self.gray_code()?.dual(inner)? {
            return Err(Error::CriterionDisagreement {
                criterion: "R-code dual",
                detail: format!("Gray image of the dual of {self:?} is not the dual Gray image"),
            });
        }
        Ok(dual)
    }

    /// Simultaneous twisted shift of both Gray blocks.
    pub fn gray_shift(&self, y: &[Elem]) -> Vec<Elem> {
        let n = self.n();
        let mut out = twisted_shift(self.ring(), self.c2.lambda(), &y[..n]);
        out.extend(twisted_shift(self.ring(), self.c1.lambda(), &y[n..]));
        out
    }

    pub fn is_gray_quasi_cyclic(&self) -> Result<bool> {
        let gray = self.gray_code()?;
        Ok(gray
            .generator()
            .iter()
            .all(|row| gray.contains(&self.gray_shift(row))))
    }

    pub fn report(&self, w_max: usize) -> Result<RCodeReport> {
        let f = self.field();
        let lcd = |inner| self.is_lcd(inner).ok();
        let params = self.gray_params(w_max).ok();
        Ok(RCodeReport {
            field: f.to_string(),
            r: self.ring().r(),
            n: self.n(),
            alpha: f.format(self.alpha),
            beta: f.format(self.beta),
            g1: self.g1().to_string(),
            g2: self.g2().to_string(),
            c1: self.c1.report(w_max)?,
            c2: self.c2.report(w_max)?,
            gray: GrayReport {
                params: params.as_ref().map(|p| [p.len, p.k, p.d.value()]),
                d_exact: params.as_ref().map(|p| p.d.exact().is_some()),
                lcd: crate::codes::LcdFlags {
                    euclidean: lcd(Inner::Euclidean),
                    hermitian: lcd(Inner::Hermitian),
                },
            },
        })
    }
}

/// Hermitian dual of a skew constacyclic code: the conjugate of the euclidean dual.
fn hermitian_dual(c: &SkewConstaCode) -> Result<SkewConstaCode> {
    let e = c.dual_code()?;
    let ring = c.ring();
    let f = ring.field();
    let g = e.generator_poly().conjugate()?;
    let m = ConstaModulus::new(ring, c.n(), f.conj(e.lambda())?)?;
    let h = SkewConstaCode::from_generator_poly(&m, &g)?;
    if *h.code() != c.code().dual(Inner::Hermitian)? {
        return Err(Error::CriterionDisagreement {
            criterion: "hermitian dual",
            detail: format!("<{g}> is not the hermitian dual of {c:?}"),
        });
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrayReport {
    pub params: Option<[usize; 3]>,
    pub d_exact: Option<bool>,
    pub lcd: crate::codes::LcdFlags,
}

/// JSON form of an R-code: both component reports plus the Gray image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RCodeReport {
    pub field: String,
    pub r: usize,
    pub n: usize,
    pub alpha: String,
    pub beta: String,
    pub g1: String,
    pub g2: String,
    pub c1: crate::codes::CodeReport,
    pub c2: crate::codes::CodeReport,
    pub gray: GrayReport,
}
