//! Linear codes over `F_q` and skew constacyclic codes.
//!
//! A [`LinearCode`] keeps its generator matrix in reduced row echelon form,
//! so code equality is matrix equality. A [`SkewConstaCode`] is the left
//! ideal generated by a right divisor `g` of `x^n - lambda`, expanded into
//! the rows `x^i g`, `i = 0..n - deg g`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::{self, Row};
use crate::skewpoly::{ConstaModulus, SkewPoly, SkewRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Inner {
    Euclidean,
    Hermitian,
}

impl Inner {
    pub const ALL: [Inner; 2] = [Inner::Euclidean, Inner::Hermitian];
}

impl fmt::Display for Inner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inner::Euclidean => "euclidean",
            Inner::Hermitian => "hermitian",
        })
    }
}

impl FromStr for Inner {
    type Err = Error;
    fn from_str(s: &str) -> Result<Inner> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" | "e" => Ok(Inner::Euclidean),
            "hermitian" | "h" => Ok(Inner::Hermitian),
            _ => Err(Error::parse(s, "expected euclidean or hermitian")),
        }
    }
}

/// Outcome of a bounded minimum-distance search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distance {
    /// Minimum distance found, with a codeword of that weight.
    Exact { d: usize, witness: Vec<Elem> },
    /// No nonzero codeword of weight `< bound` exists.
    AtLeast(usize),
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Distance::Exact { d, .. } => Some(*d),
            Distance::AtLeast(_) => None,
        }
    }

    /// The exact value, or the certified lower bound.
    pub fn value(&self) -> usize {
        match self {
            Distance::Exact { d, .. } => *d,
            Distance::AtLeast(b) => *b,
        }
    }

    /// Minimum of two component distances.
    pub fn min(self, other: Distance) -> Distance {
        match (self, other) {
            (a @ Distance::Exact { .. }, b @ Distance::Exact { .. }) => {
                if b.value() < a.value() {
                    b
                } else {
                    a
                }
            }
            (Distance::Exact { d, witness }, Distance::AtLeast(b))
            | (Distance::AtLeast(b), Distance::Exact { d, witness }) => {
                if d <= b {
                    Distance::Exact { d, witness }
                } else {
                    Distance::AtLeast(b)
                }
            }
            (Distance::AtLeast(a), Distance::AtLeast(b)) => Distance::AtLeast(a.min(b)),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact { d, .. } => write!(f, "{d}"),
            Distance::AtLeast(b) => write!(f, ">={b}"),
        }
    }
}

/// Row space of a generator matrix over `F_q`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    gen: Vec<Row>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] code over {}", self.n, self.dim(), self.field)
    }
}

impl LinearCode {
    pub fn from_rows(field: &Field, n: usize, rows: &[Row]) -> Result<LinearCode> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension(format!(
                "row of length {} in a length-{n} code",
                bad.len()
            )));
        }
        let (gen, _) = matrix::rref(field, rows, n);
        Ok(LinearCode {
            field: field.clone(),
            n,
            gen,
        })
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        let gen = (0..n)
            .map(|i| {
                let mut r = vec![Elem::ZERO; n];
                r[i] = field.one();
                r
            })
            .collect();
        LinearCode {
            field: field.clone(),
            n,
            gen,
        }
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            field: field.clone(),
            n,
            gen: Vec::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.gen.len()
    }

    /// Canonical (reduced echelon) generator matrix.
    pub fn generator(&self) -> &[Row] {
        &self.gen
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut rows = self.gen.clone();
        rows.push(v.to_vec());
        matrix::rank(&self.field, &rows, self.n) == self.dim()
    }

    /// Generator matrix with `conj` applied entrywise for the hermitian form.
    fn paired_rows(&self, inner: Inner) -> Result<Vec<Row>> {
        match inner {
            Inner::Euclidean => Ok(self.gen.clone()),
            Inner::Hermitian => {
                let t = self.field.t();
                if !t.is_multiple_of(2) {
                    return Err(Error::OddExtensionDegree(t));
                }
                Ok(matrix::map_rows(&self.gen, |a| {
                    self.field.frobenius(a, t / 2)
                }))
            }
        }
    }

    pub fn dual(&self, inner: Inner) -> Result<LinearCode> {
        let rows = self.paired_rows(inner)?;
        let basis = matrix::nullspace(&self.field, &rows, self.n);
        LinearCode::from_rows(&self.field, self.n, &basis)
    }

    /// `dim(C ∩ C^⊥)`.
    pub fn hull_dim(&self, inner: Inner) -> Result<usize> {
        let dual = self.dual(inner)?;
        let mut rows = self.gen.clone();
        rows.extend(dual.gen.iter().cloned());
        let sum = matrix::rank(&self.field, &rows, self.n);
        Ok(self.dim() + dual.dim() - sum)
    }

    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.field != other.field || self.n != other.n {
            return Err(Error::FieldMismatch);
        }
        // C ∩ D = (C^⊥ + D^⊥)^⊥
        let mut rows = self.dual(Inner::Euclidean)?.gen;
        rows.extend(other.dual(Inner::Euclidean)?.gen);
        let sum = LinearCode::from_rows(&self.field, self.n, &rows)?;
        sum.dual(Inner::Euclidean)
    }

    /// Massey's criterion: `G G^T` (resp. `G conj(G)^T`) is nonsingular.
    pub fn is_lcd_matrix(&self, inner: Inner) -> Result<bool> {
        let paired = self.paired_rows(inner)?;
        let gram = matrix::mul_transpose(&self.field, &self.gen, &paired);
        Ok(matrix::is_nonsingular(&self.field, &gram))
    }

    /// Exact minimum Hamming distance when it is at most `w_max`, otherwise
    /// the certified lower bound `w_max + 1`. Scans every support of weight
    /// `w <= w_max` (first nonzero entry normalized to 1) for a vector with
    /// zero syndrome.
    pub fn min_distance_bounded(&self, w_max: usize) -> Result<Distance> {
        if self.dim() == 0 {
            return Err(Error::ZeroCode);
        }
        let parity = self.dual(Inner::Euclidean)?;
        let r = parity.dim();
        // columns of the parity-check matrix
        let cols: Vec<Vec<Elem>> = (0..self.n)
            .map(|j| parity.gen.iter().map(|row| row[j]).collect())
            .collect();
        let field = &self.field;
        for w in 1..=w_max.min(self.n) {
            let found = (0..self.n).into_par_iter().find_map_first(|first| {
                let mut support = vec![first];
                let mut coeffs = vec![field.one()];
                let syndrome = cols[first].clone();
                search_weight(field, &cols, r, w, &mut support, &mut coeffs, syndrome)
            });
            if let Some((support, coeffs)) = found {
                let mut witness = vec![Elem::ZERO; self.n];
                for (&j, &c) in support.iter().zip(&coeffs) {
                    witness[j] = c;
                }
                debug_assert!(self.contains(&witness));
                return Ok(Distance::Exact { d: w, witness });
            }
        }
        Ok(Distance::AtLeast(w_max.min(self.n) + 1))
    }

    /// Weight distribution by enumerating all `q^k` codewords.
    pub fn weight_distribution(&self, budget: u128) -> Result<Vec<u128>> {
        let q = self.field.q() as u128;
        let total = q.checked_pow(self.dim() as u32).unwrap_or(u128::MAX);
        if total > budget {
            return Err(Error::BudgetExceeded {
                needed: total,
                budget,
            });
        }
        let mut dist = vec![0u128; self.n + 1];
        for mut idx in 0..total {
            let mut v = vec![Elem::ZERO; self.n];
            for row in &self.gen {
                let c = Elem((idx % q) as u32);
                idx /= q;
                if c.is_zero() {
                    continue;
                }
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = self.field.add(*x, self.field.mul(c, y));
                }
            }
            dist[matrix::weight(&v)] += 1;
        }
        Ok(dist)
    }
}

fn search_weight(
    field: &Field,
    cols: &[Vec<Elem>],
    r: usize,
    w: usize,
    support: &mut Vec<usize>,
    coeffs: &mut Vec<Elem>,
    syndrome: Vec<Elem>,
) -> Option<(Vec<usize>, Vec<Elem>)> {
    if support.len() == w {
        return syndrome
            .iter()
            .all(|s| s.is_zero())
            .then(|| (support.clone(), coeffs.clone()));
    }
    let start = support.last().map_or(0, |&l| l + 1);
    let remaining = w - support.len();
    for j in start..=cols.len().saturating_sub(remaining) {
        for c in field.units() {
            let next: Vec<Elem> = (0..r)
                .map(|i| field.add(syndrome[i], field.mul(c, cols[j][i])))
                .collect();
            support.push(j);
            coeffs.push(c);
            if let Some(hit) = search_weight(field, cols, r, w, support, coeffs, next) {
                return Some(hit);
            }
            support.pop();
            coeffs.pop();
        }
    }
    None
}

/// Left ideal `<g>` of `F_q[x; theta]/(x^n - lambda)` as a linear code.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewConstaCode {
    base: LinearCode,
    modulus: ConstaModulus,
    g: SkewPoly,
    h: SkewPoly,
}

impl fmt::Debug for SkewConstaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "skew {}-constacyclic [{}, {}] <{}>",
            self.modulus.ring().field().format(self.modulus.lambda()),
            self.n(),
            self.dim(),
            self.g
        )
    }
}

impl SkewConstaCode {
    /// The code generated by a right divisor `g` of `x^n - lambda`.
    /// Non-monic `g` is left-normalized (same left ideal).
    pub fn from_generator_poly(modulus: &ConstaModulus, g: &SkewPoly) -> Result<SkewConstaCode> {
        if g.ring() != modulus.ring() {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::NotADivisor(g.to_string()));
        }
        let g = g.monic();
        let (h, rem) = modulus.poly().right_divmod(&g)?;
        if !rem.is_zero() {
            return Err(Error::NotADivisor(g.to_string()));
        }
        let n = modulus.n();
        let ring = modulus.ring();
        let k = n - g.deg();
        let rows: Vec<Row> = (0..k)
            .map(|i| coefficient_row(&(&ring.x_pow(i) * &g), n))
            .collect();
        let base = LinearCode::from_rows(ring.field(), n, &rows)?;
        Ok(SkewConstaCode {
            base,
            modulus: modulus.clone(),
            g,
            h,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.base
    }

    pub fn modulus(&self) -> &ConstaModulus {
        &self.modulus
    }

    pub fn ring(&self) -> &SkewRing {
        self.modulus.ring()
    }

    pub fn generator_poly(&self) -> &SkewPoly {
        &self.g
    }

    /// `h` with `h g = x^n - lambda`.
    pub fn cofactor(&self) -> &SkewPoly {
        &self.h
    }

    pub fn n(&self) -> usize {
        self.modulus.n()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn lambda(&self) -> Elem {
        self.modulus.lambda()
    }

    /// The rows `x^i g` as generated (not echelon-reduced).
    pub fn polynomial_rows(&self) -> Vec<Row> {
        let ring = self.ring();
        (0..self.dim())
            .map(|i| coefficient_row(&(&ring.x_pow(i) * &self.g), self.n()))
            .collect()
    }

    /// `(c_0..c_{n-1}) -> (lambda theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))`.
    pub fn twisted_shift(&self, c: &[Elem]) -> Vec<Elem> {
        twisted_shift(self.ring(), self.lambda(), c)
    }

    pub fn is_closed_under_shift(&self) -> bool {
        self.base
            .generator()
            .iter()
            .all(|row| self.base.contains(&self.twisted_shift(row)))
    }

    fn check_lcd_preconditions(&self) -> Result<()> {
        if !self.modulus.lambda_is_involutive() {
            return Err(Error::LambdaNotInvolutive);
        }
        if !self.modulus.order_divides_length() {
            return Err(Error::LengthNotMultipleOfOrder {
                n: self.n(),
                order: self.ring().order(),
            });
        }
        Ok(())
    }

    /// `gcrd(g, h^♮)` (euclidean) or `gcrd(g, conj(h^♮))` (hermitian).
    pub fn lcd_gcrd(&self, inner: Inner) -> Result<SkewPoly> {
        self.check_lcd_preconditions()?;
        let mut recip = self.h.skew_reciprocal()?;
        if inner == Inner::Hermitian {
            recip = recip.conjugate()?;
        }
        self.g.gcrd(&recip)
    }

    /// Gcrd criterion, cross-checked against Massey's matrix criterion.
    pub fn is_skew_lcd(&self, inner: Inner) -> Result<bool> {
        let by_gcrd = self.lcd_gcrd(inner)?.is_one();
        let by_matrix = self.base.is_lcd_matrix(inner)?;
        if by_gcrd != by_matrix {
            return Err(Error::CriterionDisagreement {
                criterion: "lcd",
                detail: format!(
                    "gcrd says {by_gcrd}, G G^T says {by_matrix} for {self:?} ({inner})"
                ),
            });
        }
        Ok(by_gcrd)
    }

    /// Monic generator of the euclidean dual: the normalized skew reciprocal of `h`.
    pub fn dual_generator(&self) -> Result<SkewPoly> {
        Ok(self.h.skew_reciprocal()?.monic())
    }

    /// The euclidean dual as a skew `lambda^{-1}`-constacyclic code,
    /// verified against the matrix dual.
    pub fn dual_code(&self) -> Result<SkewConstaCode> {
        let field = self.ring().field();
        let dual_mod = ConstaModulus::new(self.ring(), self.n(), field.inv(self.lambda()))?;
        let dual = SkewConstaCode::from_generator_poly(&dual_mod, &self.dual_generator()?)?;
        if dual.base != self.base.dual(Inner::Euclidean)? {
            return Err(Error::CriterionDisagreement {
                criterion: "dual generator",
                detail: format!("<{}> is not the dual of {self:?}", dual.g),
            });
        }
        Ok(dual)
    }

    pub fn report(&self, w_max: usize) -> Result<CodeReport> {
        let field = self.ring().field();
        let lcd = |inner| {
            self.is_skew_lcd(inner)
                .ok()
                .or_else(|| self.base.is_lcd_matrix(inner).ok())
        };
        let d = if self.dim() == 0 {
            None
        } else {
            Some(self.base.min_distance_bounded(w_max)?)
        };
        Ok(CodeReport {
            field: field.to_string(),
            r: self.ring().r(),
            n: self.n(),
            lambda: field.format(self.lambda()),
            generator: self.g.to_string(),
            g_matrix: self
                .base
                .generator()
                .iter()
                .map(|row| row.iter().map(|&a| field.format(a)).collect())
                .collect(),
            k: self.dim(),
            lcd: LcdFlags {
                euclidean: lcd(Inner::Euclidean),
                hermitian: lcd(Inner::Hermitian),
            },
            d_bounded: d.map(DistanceReport::from),
        })
    }
}

pub(crate) fn coefficient_row(f: &SkewPoly, n: usize) -> Row {
    let mut row = f.coeffs().to_vec();
    row.resize(n, Elem::ZERO);
    row
}

pub fn twisted_shift(ring: &SkewRing, lambda: Elem, c: &[Elem]) -> Vec<Elem> {
    let n = c.len();
    let field = ring.field();
    (0..n)
        .map(|i| {
            if i == 0 {
                field.mul(lambda, ring.theta(c[n - 1], 1))
            } else {
                ring.theta(c[i - 1], 1)
            }
        })
        .collect()
}

/// `[i] = (p^{ri} - 1)/(p^r - 1) = 1 + p^r + ... + p^{r(i-1)}`, reduced mod `q - 1`.
pub fn twisted_exponent(field: &Field, r: usize, i: usize) -> u64 {
    let m = (field.q() - 1) as u64;
    let pr = crate::gf::mod_pow(field.p() as u64, r as u64, m.max(1));
    (0..i).fold(0u64, |acc, _| (acc * pr + 1) % m.max(1))
}

/// Coordinate scaling `c_i -> delta^{-[i]} c_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleMap {
    field: Field,
    delta: Elem,
    /// `[i] mod (q - 1)` for `i = 0..n`
    exponents: Vec<u64>,
}

impl ScaleMap {
    pub fn new(field: &Field, r: usize, n: usize, delta: Elem) -> Result<ScaleMap> {
        if delta.is_zero() || !field.contains(delta) {
            return Err(Error::NonUnitDelta);
        }
        let exponents = (0..n).map(|i| twisted_exponent(field, r, i)).collect();
        Ok(ScaleMap {
            field: field.clone(),
            delta,
            exponents,
        })
    }

    pub fn delta(&self) -> Elem {
        self.delta
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `delta^{-[i]}`.
    pub fn factor(&self, i: usize) -> Elem {
        self.field
            .inv(self.field.pow(self.delta, self.exponents[i]))
    }

    pub fn apply(&self, c: &[Elem]) -> Vec<Elem> {
        c.iter()
            .enumerate()
            .map(|(i, &x)| self.field.mul(self.factor(i), x))
            .collect()
    }

    pub fn apply_inverse(&self, c: &[Elem]) -> Vec<Elem> {
        c.iter()
            .enumerate()
            .map(|(i, &x)| {
                self.field
                    .mul(self.field.pow(self.delta, self.exponents[i]), x)
            })
            .collect()
    }
}

/// All `delta` with `delta^{[n]} = lambda`.
pub fn lambda_roots(field: &Field, r: usize, n: usize, lambda: Elem) -> Vec<Elem> {
    let e = twisted_exponent(field, r, n);
    field
        .units()
        .filter(|&d| field.pow(d, e) == lambda)
        .collect()
}

/// Maps a skew `lambda`-constacyclic code to the equivalent skew
/// `lambda delta^{[n]}`-constacyclic code through `c_i -> delta^{-[i]} c_i`.
/// Hamming weights are preserved.
pub fn scale_equivalence(code: &SkewConstaCode, delta: Elem) -> Result<SkewConstaCode> {
    let ring = code.ring();
    let field = ring.field();
    let n = code.n();
    let map = ScaleMap::new(field, ring.r(), n, delta)?;
    let image_lambda = field.mul(
        code.lambda(),
        field.pow(delta, twisted_exponent(field, ring.r(), n)),
    );
    let modulus = ConstaModulus::new(ring, n, image_lambda)?;
    let g = code.generator_poly();
    let scaled: Vec<Elem> = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, &c)| field.mul(map.factor(i), c))
        .collect();
    let image = SkewConstaCode::from_generator_poly(&modulus, &ring.poly(scaled))?;
    let mapped_rows: Vec<Row> = code
        .code()
        .generator()
        .iter()
        .map(|row| map.apply(row))
        .collect();
    if LinearCode::from_rows(field, n, &mapped_rows)? != image.base {
        return Err(Error::CriterionDisagreement {
            criterion: "scale equivalence",
            detail: format!(
                "image of {code:?} under delta = {} is not <{}>",
                field.format(delta),
                image.g
            ),
        });
    }
    Ok(image)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcdFlags {
    pub euclidean: Option<bool>,
    pub hermitian: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub exact: bool,
    pub value: usize,
}

impl From<Distance> for DistanceReport {
    fn from(d: Distance) -> Self {
        DistanceReport {
            exact: d.exact().is_some(),
            value: d.value(),
        }
    }
}

/// JSON form of a skew constacyclic code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub field: String,
    pub r: usize,
    pub n: usize,
    pub lambda: String,
    pub generator: String,
    #[serde(rename = "G")]
    pub g_matrix: Vec<Vec<String>>,
    pub k: usize,
    pub lcd: LcdFlags,
    pub d_bounded: Option<DistanceReport>,
}
