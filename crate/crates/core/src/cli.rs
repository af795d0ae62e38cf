//! The `skewlcd` command line: argument definitions, the `cmd_*` operations
//! and their text, JSON and CSV renderings.
//!
//! Exit codes: 0 ok, 1 mismatch (a table row, an oracle or a cross-check
//! disagreed), 2 error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, CatalogEntry};
use crate::census::{
    census_report, CensusInput, CensusReport, CensusTarget, Variant, ORACLE_BUDGET,
};
use crate::codes::{lambda_roots, scale_equivalence, Inner, LcdFlags, SkewConstaCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::ring_r::{r_code, RCodeReport, RLambda, RSkewCode};
use crate::skewpoly::{ConstaModulus, SkewPoly, SkewRing, DEFAULT_BUDGET};
use crate::tables::{self, TableId, TableReport};

#[derive(Debug, Parser)]
#[command(
    name = "skewlcd",
    version,
    about = "Skew constacyclic and LCD codes over F_q and F_q + vF_q"
)]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print CSV instead of text.
    #[arg(long, global = true, conflicts_with = "json")]
    pub csv: bool,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct RingArgs {
    /// Field, e.g. "GF(3^2; 2,2,1)", "GF(2^4)" or "GF(4)".
    #[arg(long, default_value = "GF(4)")]
    pub field: String,
    /// theta = Frobenius^r.
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Code length.
    #[arg(long)]
    pub n: usize,
}

impl RingArgs {
    pub fn ring(&self) -> Result<SkewRing> {
        Ok(SkewRing::new(&Field::parse(&self.field)?, self.r))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List monic right divisors of x^n - lambda with cofactors and LCD verdicts.
    Factor {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 0)]
        min_deg: usize,
        #[arg(long)]
        max_deg: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Certify a code (--lambda, --g) or an R-code (--alpha, --beta, --g1, --g2) as LCD.
    LcdCheck {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        g1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        g2: Option<String>,
        #[arg(long, default_value = "euclidean")]
        inner: Inner,
    },
    /// Recompute reference tables: 1, 2, 3, examples (default: all).
    Tables { which: Vec<TableId> },
    /// Count LCD codes of length n = 2k, dimension k over GF(p^2) or GF(p^2)+vGF(p^2).
    Census {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        /// euclid-cyclic, herm-cyclic, euclid-nega or herm-nega.
        #[arg(long, conflicts_with = "lambda")]
        variant: Option<Variant>,
        /// R-level lambda: 1, -1 or 1-2v.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<RLambda>,
        #[arg(long, default_value = "euclidean")]
        inner: Inner,
        /// Also run the exhaustive count.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = ORACLE_BUDGET)]
        budget: u128,
    },
    /// Sweep divisor pairs for LCD R-codes and record their Gray images.
    Search {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value_t = 0)]
        min_deg: usize,
        #[arg(long)]
        max_deg: usize,
        #[arg(long, default_value = "euclidean")]
        inner: Inner,
        /// Largest weight searched when computing minimum distances.
        #[arg(long, default_value_t = 4)]
        wmax: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// JSON catalog to merge results into.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Map a skew lambda-constacyclic code to its scaled images with constant target.
    Equiv {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },
    /// Gray image parameters, duality and quasi-cyclicity of an R-code.
    Gray {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        g1: String,
        #[arg(long, allow_hyphen_values = true)]
        g2: String,
        #[arg(long, default_value_t = 4)]
        wmax: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
        }
    }
}

pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::CriterionDisagreement { .. } | Error::RowMismatch { .. } => 1,
        _ => 2,
    }
}

/// Text and CSV renderings of a command report.
pub trait Render: Serialize {
    fn text(&self) -> String;
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>);
    fn status(&self) -> Status {
        Status::Ok
    }

    fn csv(&self) -> Result<String> {
        let (header, rows) = self.csv_rows();
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&header).map_err(io)?;
        for row in rows {
            w.write_record(&row).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }
}

fn opt(b: Option<bool>) -> String {
    b.map_or("n/a".into(), |b| b.to_string())
}

fn parse_elem(field: &Field, s: &str) -> Result<Elem> {
    field.parse_elem(s)
}

// ---------------------------------------------------------------- factor

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorEntry {
    pub g: String,
    pub h: String,
    pub deg: usize,
    pub k: usize,
    pub lcd_euclidean: Option<bool>,
    pub lcd_hermitian: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub field: String,
    pub r: usize,
    pub n: usize,
    pub lambda: String,
    pub central: bool,
    pub divisors: Vec<DivisorEntry>,
}

/// Verdict by the gcrd criterion (cross-checked); `None` when its preconditions fail.
fn lcd_verdict(code: &SkewConstaCode, inner: Inner) -> Result<Option<bool>> {
    match code.is_skew_lcd(inner) {
        Ok(v) => Ok(Some(v)),
        Err(
            Error::LambdaNotInvolutive
            | Error::LengthNotMultipleOfOrder { .. }
            | Error::OddExtensionDegree(_),
        ) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn cmd_factor(
    ring: &SkewRing,
    n: usize,
    lambda: Elem,
    degrees: std::ops::RangeInclusive<usize>,
    budget: u128,
) -> Result<FactorReport> {
    let f = ring.field();
    let modulus = ConstaModulus::new(ring, n, lambda)?;
    let divisors = modulus.right_divisors_in(degrees, budget)?;
    let entries = divisors
        .par_iter()
        .map(|g| {
            let code = SkewConstaCode::from_generator_poly(&modulus, g)?;
            Ok(DivisorEntry {
                g: g.to_string(),
                h: code.cofactor().to_string(),
                deg: g.deg(),
                k: code.dim(),
                lcd_euclidean: lcd_verdict(&code, Inner::Euclidean)?,
                lcd_hermitian: lcd_verdict(&code, Inner::Hermitian)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorReport {
        field: f.to_string(),
        r: ring.r(),
        n,
        lambda: f.format(lambda),
        central: modulus.is_central(),
        divisors: entries,
    })
}

impl Render for FactorReport {
    fn text(&self) -> String {
        let mut s = format!(
            "x^{}-({}) over {} with theta = Frobenius^{} ({}central)\n",
            self.n,
            self.lambda,
            self.field,
            self.r,
            if self.central { "" } else { "not " }
        );
        let _ = writeln!(s, "{} right divisors", self.divisors.len());
        for d in &self.divisors {
            let _ = writeln!(
                s,
                "  g = {}\n    h = {}\n    k = {}, euclidean LCD: {}, hermitian LCD: {}",
                d.g,
                d.h,
                d.k,
                opt(d.lcd_euclidean),
                opt(d.lcd_hermitian)
            );
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .divisors
            .iter()
            .map(|d| {
                vec![
                    d.g.clone(),
                    d.h.clone(),
                    d.deg.to_string(),
                    d.k.to_string(),
                    opt(d.lcd_euclidean),
                    opt(d.lcd_hermitian),
                ]
            })
            .collect();
        (
            vec!["g", "h", "deg", "k", "lcd_euclidean", "lcd_hermitian"],
            rows,
        )
    }
}

// ---------------------------------------------------------------- lcd-check

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCheck {
    pub label: String,
    pub lambda: String,
    pub g: String,
    pub h: String,
    pub k: usize,
    /// `gcrd(g, h^♮)` (or its conjugate form); `None` when the criterion does not apply.
    pub gcrd: Option<String>,
    pub lcd_gcrd: Option<bool>,
    pub hull_dim: usize,
    pub lcd_matrix: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcdCheckReport {
    pub field: String,
    pub r: usize,
    pub n: usize,
    pub inner: Inner,
    pub components: Vec<ComponentCheck>,
    pub gray_lcd: Option<bool>,
    pub lcd: bool,
    pub agree: bool,
}

pub fn check_component(code: &SkewConstaCode, inner: Inner, label: &str) -> Result<ComponentCheck> {
    let f = code.ring().field();
    let gcrd = match code.lcd_gcrd(inner) {
        Ok(g) => Some(g),
        Err(Error::LambdaNotInvolutive | Error::LengthNotMultipleOfOrder { .. }) => None,
        Err(e) => return Err(e),
    };
    let hull_dim = code.code().hull_dim(inner)?;
    let lcd_matrix = code.code().is_lcd_matrix(inner)?;
    let lcd_gcrd = gcrd.as_ref().map(SkewPoly::is_one);
    let agree = lcd_gcrd.is_none_or(|v| v == lcd_matrix) && (hull_dim == 0) == lcd_matrix;
    Ok(ComponentCheck {
        label: label.into(),
        lambda: f.format(code.lambda()),
        g: code.generator_poly().to_string(),
        h: code.cofactor().to_string(),
        k: code.dim(),
        gcrd: gcrd.map(|g| g.to_string()),
        lcd_gcrd,
        hull_dim,
        lcd_matrix,
        agree,
    })
}

pub fn cmd_lcd_check_single(
    ring: &SkewRing,
    n: usize,
    lambda: Elem,
    g: &SkewPoly,
    inner: Inner,
) -> Result<LcdCheckReport> {
    let modulus = ConstaModulus::new(ring, n, lambda)?;
    let code = SkewConstaCode::from_generator_poly(&modulus, g)?;
    let c = check_component(&code, inner, "C")?;
    Ok(LcdCheckReport {
        field: ring.field().to_string(),
        r: ring.r(),
        n,
        inner,
        lcd: c.lcd_matrix,
        agree: c.agree,
        components: vec![c],
        gray_lcd: None,
    })
}

pub fn cmd_lcd_check_r(code: &RSkewCode, inner: Inner) -> Result<LcdCheckReport> {
    let c1 = check_component(code.c1(), inner, "C1 (v)")?;
    let c2 = check_component(code.c2(), inner, "C2 (1-v)")?;
    let gray = code.gray_code()?.is_lcd_matrix(inner)?;
    let lcd = c1.lcd_matrix && c2.lcd_matrix;
    Ok(LcdCheckReport {
        field: code.field().to_string(),
        r: code.ring().r(),
        n: code.n(),
        inner,
        agree: c1.agree && c2.agree && gray == lcd,
        lcd,
        components: vec![c1, c2],
        gray_lcd: Some(gray),
    })
}

impl Render for LcdCheckReport {
    fn text(&self) -> String {
        let mut s = format!(
            "{} LCD check, n = {} over {}\n",
            self.inner, self.n, self.field
        );
        for c in &self.components {
            let _ = writeln!(
                s,
                "  {}: <{}>, lambda = {}, k = {}",
                c.label, c.g, c.lambda, c.k
            );
            let _ = writeln!(s, "    h = {}", c.h);
            match &c.gcrd {
                Some(g) => {
                    let _ = writeln!(
                        s,
                        "    gcrd = {g}{}",
                        if g == "1" {
                            ""
                        } else {
                            "  (failure certificate)"
                        }
                    );
                }
                None => {
                    let _ = writeln!(s, "    gcrd criterion not applicable");
                }
            }
            let _ = writeln!(
                s,
                "    hull dim = {}, Gram matrix nonsingular = {}",
                c.hull_dim, c.lcd_matrix
            );
        }
        if let Some(g) = self.gray_lcd {
            let _ = writeln!(s, "  Gray image LCD = {g}");
        }
        let _ = writeln!(
            s,
            "LCD = {}{}",
            self.lcd,
            if self.agree {
                ""
            } else {
                "  (criteria DISAGREE)"
            }
        );
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .components
            .iter()
            .map(|c| {
                vec![
                    c.label.clone(),
                    c.lambda.clone(),
                    c.g.clone(),
                    c.gcrd.clone().unwrap_or_default(),
                    c.hull_dim.to_string(),
                    c.lcd_matrix.to_string(),
                    c.agree.to_string(),
                ]
            })
            .collect();
        (
            vec![
                "component",
                "lambda",
                "g",
                "gcrd",
                "hull_dim",
                "lcd",
                "agree",
            ],
            rows,
        )
    }

    fn status(&self) -> Status {
        if self.agree {
            Status::Ok
        } else {
            Status::Mismatch
        }
    }
}

// ---------------------------------------------------------------- tables

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesReport {
    pub tables: Vec<TableReport>,
    pub ok: bool,
}

pub fn cmd_tables(which: &[TableId]) -> Result<TablesReport> {
    let which = if which.is_empty() {
        TableId::ALL.to_vec()
    } else {
        which.to_vec()
    };
    let tables = which
        .iter()
        .map(|&t| tables::table(t))
        .collect::<Result<Vec<_>>>()?;
    let ok = tables.iter().all(TableReport::ok);
    Ok(TablesReport { tables, ok })
}

impl Render for TablesReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for t in &self.tables {
            let _ = writeln!(s, "table {}: {}", t.table, t.title);
            for r in &t.rows {
                let mark = if r.ok { "ok  " } else { "FAIL" };
                let _ = writeln!(s, "  {mark} {}: {}", r.label, r.computed);
                if !r.ok {
                    let _ = writeln!(s, "       expected {}", r.expected);
                }
            }
        }
        let _ = writeln!(
            s,
            "{}",
            if self.ok {
                "all rows reproduced"
            } else {
                "MISMATCH"
            }
        );
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .tables
            .iter()
            .flat_map(|t| {
                t.rows.iter().map(move |r| {
                    vec![
                        t.table.to_string(),
                        r.label.clone(),
                        r.expected.clone(),
                        r.computed.clone(),
                        r.ok.to_string(),
                    ]
                })
            })
            .collect();
        (vec!["table", "row", "expected", "computed", "ok"], rows)
    }

    fn status(&self) -> Status {
        if self.ok {
            Status::Ok
        } else {
            Status::Mismatch
        }
    }
}

// ---------------------------------------------------------------- census

pub fn cmd_census(
    p: u32,
    n: usize,
    target: CensusTarget,
    oracle: Option<u128>,
) -> Result<CensusReport> {
    census_report(&CensusInput::new(p, n)?, target, oracle)
}

impl Render for CensusReport {
    fn text(&self) -> String {
        let what = match (self.variant, self.r_lambda) {
            (Some(v), _) => format!("{v} over GF({}^2)", self.p),
            (None, Some(l)) => format!(
                "{} lambda = {l} over GF({p}^2)+vGF({p}^2)",
                self.inner,
                p = self.p
            ),
            (None, None) => String::new(),
        };
        let mut s = format!(
            "p = {}, n = {} (k = {}^{} * {}), {what}\n",
            self.p, self.n, self.p, self.s, self.t
        );
        for c in &self.factor_classes {
            let list = |v: &[crate::census::ClassEntry]| {
                if v.is_empty() {
                    "none".to_string()
                } else {
                    v.iter()
                        .map(|e| e.poly.clone())
                        .collect::<Vec<_>>()
                        .join(", ")
                }
            };
            let _ = writeln!(
                s,
                "  {:?}: F_ir = {}; F_red = {}",
                c.modulus,
                list(&c.f_ir),
                list(&c.f_red)
            );
        }
        let _ = writeln!(s, "formula count = {}", self.formula_count);
        if let Some(o) = &self.oracle_count {
            let agree = self.agree.unwrap_or(false);
            let _ = writeln!(
                s,
                "oracle count  = {o} ({})",
                if agree { "agree" } else { "DISAGREE" }
            );
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let target = match (self.variant, self.r_lambda) {
            (Some(v), _) => v.to_string(),
            (None, Some(l)) => format!("R:{l}"),
            (None, None) => String::new(),
        };
        let row = vec![
            self.p.to_string(),
            self.n.to_string(),
            target,
            self.inner.to_string(),
            self.formula_count.clone(),
            self.oracle_count.clone().unwrap_or_default(),
            opt(self.agree),
        ];
        (
            vec!["p", "n", "target", "inner", "formula", "oracle", "agree"],
            vec![row],
        )
    }

    fn status(&self) -> Status {
        if self.agree == Some(false) {
            Status::Mismatch
        } else {
            Status::Ok
        }
    }
}

// ---------------------------------------------------------------- search

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub field: String,
    pub n: usize,
    pub inner: Inner,
    pub pairs_checked: usize,
    pub found: Vec<CatalogEntry>,
    pub catalog: Option<String>,
    pub added: usize,
    pub catalog_size: Option<usize>,
}

pub struct SearchParams {
    pub n: usize,
    pub alpha: Elem,
    pub beta: Elem,
    pub degrees: std::ops::RangeInclusive<usize>,
    pub inner: Inner,
    pub w_max: usize,
    pub budget: u128,
}

/// All LCD R-codes `<v g1 + (1 - v) g2>` with both degrees in range.
pub fn search(ring: &SkewRing, params: &SearchParams) -> Result<(usize, Vec<CatalogEntry>)> {
    let f = ring.field();
    let m1 = ConstaModulus::new(ring, params.n, f.add(params.alpha, params.beta))?;
    let m2 = ConstaModulus::new(ring, params.n, params.alpha)?;
    let d1 = m1.right_divisors_in(params.degrees.clone(), params.budget)?;
    let d2 = m2.right_divisors_in(params.degrees.clone(), params.budget)?;
    let pairs: Vec<(&SkewPoly, &SkewPoly)> = d1
        .iter()
        .flat_map(|a| d2.iter().map(move |b| (a, b)))
        .collect();
    let found = pairs
        .par_iter()
        .map(|&(g1, g2)| -> Result<Option<CatalogEntry>> {
            let code = r_code(ring, params.n, params.alpha, params.beta, g1, g2)?;
            if !code.is_lcd(params.inner)? {
                return Ok(None);
            }
            let p = match code.gray_params(params.w_max) {
                Ok(p) => p,
                Err(Error::ZeroCode) => return Ok(None),
                Err(e) => return Err(e),
            };
            let lcd = match params.inner {
                Inner::Euclidean => LcdFlags {
                    euclidean: Some(true),
                    hermitian: lcd_verdict_r(&code, Inner::Hermitian),
                },
                Inner::Hermitian => LcdFlags {
                    euclidean: lcd_verdict_r(&code, Inner::Euclidean),
                    hermitian: Some(true),
                },
            };
            Ok(Some(CatalogEntry::new(
                &code,
                [p.len, p.k, p.d.value()],
                p.d.exact().is_some(),
                lcd,
            )?))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut unique = Catalog::default();
    unique.merge(found.into_iter().flatten());
    Ok((pairs.len(), unique.entries().to_vec()))
}

fn lcd_verdict_r(code: &RSkewCode, inner: Inner) -> Option<bool> {
    code.is_lcd(inner).ok()
}

pub fn cmd_search(
    ring: &SkewRing,
    params: &SearchParams,
    catalog: Option<&std::path::Path>,
) -> Result<SearchReport> {
    let (pairs_checked, found) = if params.degrees.is_empty() {
        (0, Vec::new())
    } else {
        search(ring, params)?
    };
    let (added, catalog_size) = match catalog {
        Some(path) => {
            let mut cat = Catalog::load(path)?;
            let added = cat.merge(found.iter().cloned());
            cat.save(path)?;
            (added, Some(cat.len()))
        }
        None => (0, None),
    };
    Ok(SearchReport {
        field: ring.field().to_string(),
        n: params.n,
        inner: params.inner,
        pairs_checked,
        found,
        catalog: catalog.map(|p| p.display().to_string()),
        added,
        catalog_size,
    })
}

impl Render for SearchReport {
    fn text(&self) -> String {
        let mut s = format!(
            "{} LCD R-codes of length {} over {} ({} pairs checked)\n",
            self.found.len(),
            self.n,
            self.field,
            self.pairs_checked
        );
        for e in &self.found {
            let [len, k, d] = e.gray_params;
            let d = if e.d_exact {
                d.to_string()
            } else {
                format!(">={d}")
            };
            let _ = writeln!(s, "  [{len}, {k}, {d}]  g1 = {}  g2 = {}", e.g1, e.g2);
        }
        if let (Some(path), Some(size)) = (&self.catalog, self.catalog_size) {
            let _ = writeln!(s, "catalog {path}: {} added, {size} total", self.added);
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .found
            .iter()
            .map(|e| {
                vec![
                    e.gray_params[0].to_string(),
                    e.gray_params[1].to_string(),
                    e.gray_params[2].to_string(),
                    e.d_exact.to_string(),
                    e.g1.clone(),
                    e.g2.clone(),
                    e.hash.clone(),
                ]
            })
            .collect();
        (vec!["len", "k", "d", "d_exact", "g1", "g2", "hash"], rows)
    }
}

// ---------------------------------------------------------------- equiv

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivImage {
    pub delta: String,
    pub lambda: String,
    pub generator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivReport {
    pub field: String,
    pub r: usize,
    pub n: usize,
    pub source_lambda: String,
    pub source: String,
    pub target_lambda: String,
    pub images: Vec<EquivImage>,
}

pub fn cmd_equiv(
    ring: &SkewRing,
    n: usize,
    lambda: Elem,
    g: &SkewPoly,
    target: Elem,
) -> Result<EquivReport> {
    let f = ring.field();
    let modulus = ConstaModulus::new(ring, n, lambda)?;
    let code = SkewConstaCode::from_generator_poly(&modulus, g)?;
    let ratio = f.div(target, lambda)?;
    let mut roots = lambda_roots(f, ring.r(), n, ratio);
    roots.sort_by_key(|&d| f.gen_log(d));
    let images = roots
        .iter()
        .map(|&delta| {
            let img = scale_equivalence(&code, delta)?;
            Ok(EquivImage {
                delta: f.format(delta),
                lambda: f.format(img.lambda()),
                generator: img.generator_poly().to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivReport {
        field: f.to_string(),
        r: ring.r(),
        n,
        source_lambda: f.format(lambda),
        source: code.generator_poly().to_string(),
        target_lambda: f.format(target),
        images,
    })
}

impl Render for EquivReport {
    fn text(&self) -> String {
        let mut s = format!(
            "<{}> (lambda = {}) as skew {}-constacyclic codes, n = {} over {}\n",
            self.source, self.source_lambda, self.target_lambda, self.n, self.field
        );
        if self.images.is_empty() {
            let _ = writeln!(s, "  no delta with delta^[n] = target/lambda");
        }
        for i in &self.images {
            let _ = writeln!(s, "  delta = {}: <{}>", i.delta, i.generator);
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .images
            .iter()
            .map(|i| vec![i.delta.clone(), i.lambda.clone(), i.generator.clone()])
            .collect();
        (vec!["delta", "lambda", "generator"], rows)
    }
}

// ---------------------------------------------------------------- gray

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrayCmdReport {
    pub code: RCodeReport,
    pub cardinality: String,
    /// `Phi(C^perp) = Phi(C)^perp`, when the dual is computable.
    pub dual_commutes: Option<bool>,
    pub quasi_cyclic: bool,
}

pub fn cmd_gray(code: &RSkewCode, w_max: usize) -> Result<GrayCmdReport> {
    let dual_commutes = match code.dual(Inner::Euclidean) {
        Ok(_) => Some(true),
        Err(Error::CriterionDisagreement { .. }) => Some(false),
        Err(_) => None,
    };
    Ok(GrayCmdReport {
        code: code.report(w_max)?,
        cardinality: code
            .cardinality()
            .map_or("overflow".into(), |c| c.to_string()),
        dual_commutes,
        quasi_cyclic: code.is_gray_quasi_cyclic()?,
    })
}

impl Render for GrayCmdReport {
    fn text(&self) -> String {
        let c = &self.code;
        let mut s = format!(
            "R-code n = {} over {} with lambda = {}+v*({})\n",
            c.n, c.field, c.alpha, c.beta
        );
        let _ = writeln!(s, "  g1 = {}  (k1 = {})", c.g1, c.c1.k);
        let _ = writeln!(s, "  g2 = {}  (k2 = {})", c.g2, c.c2.k);
        let _ = writeln!(s, "  |C| = {}", self.cardinality);
        match (c.gray.params, c.gray.d_exact) {
            (Some([len, k, d]), Some(exact)) => {
                let d = if exact {
                    d.to_string()
                } else {
                    format!(">={d}")
                };
                let _ = writeln!(s, "  Gray image [{len}, {k}, {d}]");
            }
            _ => {
                let _ = writeln!(s, "  Gray image is the zero code");
            }
        }
        let _ = writeln!(
            s,
            "  Gray LCD: euclidean {}, hermitian {}",
            opt(c.gray.lcd.euclidean),
            opt(c.gray.lcd.hermitian)
        );
        let _ = writeln!(
            s,
            "  Phi(C^perp) = Phi(C)^perp: {}",
            opt(self.dual_commutes)
        );
        let _ = writeln!(s, "  skew 2-quasi-cyclic: {}", self.quasi_cyclic);
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let c = &self.code;
        let [len, k, d] = c.gray.params.unwrap_or([2 * c.n, 0, 0]);
        let row = vec![
            c.g1.clone(),
            c.g2.clone(),
            len.to_string(),
            k.to_string(),
            d.to_string(),
            opt(c.gray.d_exact),
            opt(c.gray.lcd.euclidean),
            opt(c.gray.lcd.hermitian),
            self.quasi_cyclic.to_string(),
        ];
        (
            vec![
                "g1",
                "g2",
                "len",
                "k",
                "d",
                "d_exact",
                "lcd_euclidean",
                "lcd_hermitian",
                "quasi_cyclic",
            ],
            vec![row],
        )
    }
}

// ---------------------------------------------------------------- dispatch

/// Rendered output and exit status of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub status: Status,
}

fn render<R: Render>(report: &R, out: &OutputArgs) -> Result<Output> {
    let body = if out.json {
        serde_json::to_string_pretty(report)? + "\n"
    } else if out.csv {
        report.csv()?
    } else {
        report.text()
    };
    Ok(Output {
        body,
        status: report.status(),
    })
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str> {
    v.as_deref()
        .ok_or_else(|| Error::parse("", format!("missing --{flag}")))
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let out = &cli.output;
    match &cli.command {
        Command::Factor {
            ring,
            lambda,
            min_deg,
            max_deg,
            budget,
        } => {
            let sr = ring.ring()?;
            let lambda = parse_elem(sr.field(), lambda)?;
            render(
                &cmd_factor(&sr, ring.n, lambda, *min_deg..=*max_deg, *budget)?,
                out,
            )
        }
        Command::LcdCheck {
            ring,
            lambda,
            g,
            alpha,
            beta,
            g1,
            g2,
            inner,
        } => {
            let sr = ring.ring()?;
            let f = sr.field();
            let report = if let Some(g) = g {
                let lambda = parse_elem(f, lambda.as_deref().unwrap_or("1"))?;
                cmd_lcd_check_single(&sr, ring.n, lambda, &sr.parse(g)?, *inner)?
            } else {
                let alpha = parse_elem(f, alpha.as_deref().unwrap_or("1"))?;
                let beta = parse_elem(f, beta.as_deref().unwrap_or("0"))?;
                let g1 = sr.parse(required(g1, "g1")?)?;
                let g2 = sr.parse(required(g2, "g2")?)?;
                cmd_lcd_check_r(&r_code(&sr, ring.n, alpha, beta, &g1, &g2)?, *inner)?
            };
            render(&report, out)
        }
        Command::Tables { which } => render(&cmd_tables(which)?, out),
        Command::Census {
            p,
            n,
            variant,
            lambda,
            inner,
            oracle,
            budget,
        } => {
            let target = match (variant, lambda) {
                (Some(v), _) => CensusTarget::Base(*v),
                (None, Some(l)) => CensusTarget::Ring(*l, *inner),
                (None, None) => {
                    CensusTarget::Base(Variant::new(crate::census::Modulus::Cyclic, *inner))
                }
            };
            render(&cmd_census(*p, *n, target, oracle.then_some(*budget))?, out)
        }
        Command::Search {
            ring,
            alpha,
            beta,
            min_deg,
            max_deg,
            inner,
            wmax,
            budget,
            catalog,
        } => {
            let sr = ring.ring()?;
            let params = SearchParams {
                n: ring.n,
                alpha: parse_elem(sr.field(), alpha)?,
                beta: parse_elem(sr.field(), beta)?,
                degrees: *min_deg..=*max_deg,
                inner: *inner,
                w_max: *wmax,
                budget: *budget,
            };
            render(&cmd_search(&sr, &params, catalog.as_deref())?, out)
        }
        Command::Equiv {
            ring,
            lambda,
            g,
            target,
        } => {
            let sr = ring.ring()?;
            let f = sr.field();
            render(
                &cmd_equiv(
                    &sr,
                    ring.n,
                    parse_elem(f, lambda)?,
                    &sr.parse(g)?,
                    parse_elem(f, target)?,
                )?,
                out,
            )
        }
        Command::Gray {
            ring,
            alpha,
            beta,
            g1,
            g2,
            wmax,
        } => {
            let sr = ring.ring()?;
            let f = sr.field();
            let code = r_code(
                &sr,
                ring.n,
                parse_elem(f, alpha)?,
                parse_elem(f, beta)?,
                &sr.parse(g1)?,
                &sr.parse(g2)?,
            )?;
            render(&cmd_gray(&code, *wmax)?, out)
        }
    }
}

/// Parses `args`, runs the command and prints its output; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = cli.output.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return 2;
        }
    }
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.body);
            out.status.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            error_exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Output> {
        let cli =
            Cli::try_parse_from(std::iter::once("skewlcd").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    #[test]
    fn factor_lists_known_divisors() {
        let out = run(&[
            "factor",
            "--field",
            "GF(2^4)",
            "--r",
            "2",
            "--n",
            "4",
            "--max-deg",
            "3",
        ])
        .unwrap();
        assert!(out.body.contains("g = x^2+w*x+w^6"));
        assert!(out.body.contains("g = x+w^3"));
        let out = run(&[
            "factor",
            "--field",
            "GF(2^4)",
            "--r",
            "2",
            "--n",
            "4",
            "--max-deg",
            "0",
            "--json",
        ])
        .unwrap();
        let report: FactorReport = serde_json::from_str(&out.body).unwrap();
        assert_eq!(report.divisors.len(), 1);
        assert_eq!(report.divisors[0].g, "1");
    }

    #[test]
    fn lcd_check_outcomes() {
        let base = ["lcd-check", "--field", "GF(3^2)", "--n", "10"];
        let mut args = base.to_vec();
        args.extend(["--g1", "x^4+w*x^2+1", "--g2", "x^6+w^7*x^4+w^3*x^2+2"]);
        let out = run(&args).unwrap();
        assert_eq!(out.status, Status::Ok);
        assert!(out.body.contains("LCD = true"));

        let mut args = base.to_vec();
        args.extend(["--g", "x^10-1"]);
        let out = run(&[&args[..], &["--json"]].concat()).unwrap();
        let r: LcdCheckReport = serde_json::from_str(&out.body).unwrap();
        assert!(r.lcd && r.components[0].hull_dim == 0);
    }

    #[test]
    fn census_and_search() {
        let out = run(&[
            "census",
            "--p",
            "3",
            "--n",
            "4",
            "--variant",
            "euclid-cyclic",
            "--oracle",
        ])
        .unwrap();
        assert!(out.body.contains("formula count = 8"));
        assert_eq!(out.status, Status::Ok);
        let out = run(&[
            "census", "--p", "3", "--n", "4", "--lambda", "1-2v", "--csv",
        ])
        .unwrap();
        assert!(out.body.starts_with("p,n,target"));
        let out = run(&["search", "--n", "6", "--max-deg", "1", "--json"]).unwrap();
        let r: SearchReport = serde_json::from_str(&out.body).unwrap();
        assert!(r.found.iter().any(|e| e.gray_params == [12, 10, 2]));
        let out = run(&["search", "--n", "6", "--min-deg", "2", "--max-deg", "1"]).unwrap();
        assert!(out.body.starts_with("0 LCD R-codes"));
    }

    #[test]
    fn errors_map_to_exit_codes() {
        assert!(run(&["factor", "--field", "GF(6)", "--n", "4", "--max-deg", "1"]).is_err());
        assert_eq!(error_exit_code(&Error::ZeroCode), 2);
        assert_eq!(
            error_exit_code(&Error::RowMismatch {
                table: "1".into(),
                expected: "a".into(),
                computed: "b".into()
            }),
            1
        );
    }
}
