//! Persisted list of LCD codes found by search, as a JSON array.

use std::fs;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::codes::LcdFlags;
use crate::error::Result;
use crate::ring_r::RSkewCode;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub field: String,
    pub r: usize,
    pub n: usize,
    pub alpha: String,
    pub beta: String,
    pub g1: String,
    pub g2: String,
    /// `[2n, k, d]` of the Gray image; `d` is a lower bound unless `d_exact`.
    pub gray_params: [usize; 3],
    pub d_exact: bool,
    pub lcd: LcdFlags,
    /// SHA-256 of the field and the reduced Gray generator matrix.
    pub hash: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl CatalogEntry {
    pub fn new(
        code: &RSkewCode,
        gray_params: [usize; 3],
        d_exact: bool,
        lcd: LcdFlags,
    ) -> Result<CatalogEntry> {
        let f = code.field();
        Ok(CatalogEntry {
            field: f.to_string(),
            r: code.ring().r(),
            n: code.n(),
            alpha: f.format(code.alpha()),
            beta: f.format(code.beta()),
            g1: code.g1().to_string(),
            g2: code.g2().to_string(),
            gray_params,
            d_exact,
            lcd,
            hash: canonical_hash(code)?,
            timestamp: now(),
        })
    }

    fn sort_key(&self) -> (usize, usize, std::cmp::Reverse<usize>, String) {
        (
            self.gray_params[0],
            self.gray_params[1],
            std::cmp::Reverse(self.gray_params[2]),
            self.hash.clone(),
        )
    }
}

pub fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Hash of the canonical (reduced echelon) Gray generator matrix.
pub fn canonical_hash(code: &RSkewCode) -> Result<String> {
    let gray = code.gray_code()?;
    let mut h = Sha256::new();
    h.update(code.field().to_string().as_bytes());
    h.update((gray.len() as u64).to_le_bytes());
    for row in gray.generator() {
        h.update([0xff]);
        for e in row {
            h.update((e.index() as u32).to_le_bytes());
        }
    }
    Ok(h.finalize().iter().map(|b| format!("{b:02x}")).collect())
}

/// Entries sorted by `(2n, k, -d)`, unique by hash.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn load(path: &Path) -> Result<Catalog> {
        if !path.exists() {
            return Ok(Catalog::default());
        }
        let text = fs::read_to_string(path)?;
        if text.trim().is_empty() {
            return Ok(Catalog::default());
        }
        let mut c: Catalog = serde_json::from_str(&text)?;
        c.normalize();
        Ok(c)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds entries whose hash is new; returns how many were added.
    pub fn merge(&mut self, new: impl IntoIterator<Item = CatalogEntry>) -> usize {
        let before = self.entries.len();
        self.entries.extend(new);
        self.normalize();
        self.entries.len() - before
    }

    fn normalize(&mut self) {
        // keep the earliest entry per hash
        self.entries
            .sort_by(|a, b| a.hash.cmp(&b.hash).then(a.timestamp.cmp(&b.timestamp)));
        self.entries.dedup_by(|a, b| a.hash == b.hash);
        self.entries.sort_by_key(|e| e.sort_key());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::ring_r::r_code;
    use crate::skewpoly::SkewRing;

    fn entry(g1: &str, g2: &str) -> CatalogEntry {
        let f = Field::gf4();
        let ring = SkewRing::new(&f, 1);
        let c = r_code(
            &ring,
            6,
            f.one(),
            f.zero(),
            &ring.parse(g1).unwrap(),
            &ring.parse(g2).unwrap(),
        )
        .unwrap();
        let p = c.gray_params(3).unwrap();
        CatalogEntry::new(
            &c,
            [p.len, p.k, p.d.value()],
            true,
            LcdFlags {
                euclidean: Some(true),
                hermitian: None,
            },
        )
        .unwrap()
    }

    #[test]
    fn dedup_and_order() {
        let mut cat = Catalog::default();
        assert_eq!(cat.merge([entry("x+w^2", "x+w"), entry("x+w^2", "x+w")]), 1);
        assert_eq!(cat.merge([entry("x+w^2", "x+w")]), 0);
        assert_eq!(cat.merge([entry("x^2+w*x+1", "x+w")]), 1);
        let ks: Vec<usize> = cat.entries().iter().map(|e| e.gray_params[1]).collect();
        assert_eq!(ks, vec![9, 10]);
    }

    #[test]
    fn json_round_trip() {
        let mut cat = Catalog::default();
        cat.merge([entry("x+w^2", "x+w")]);
        let dir = std::env::temp_dir().join(format!("skewlcd-catalog-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.json");
        cat.save(&path).unwrap();
        assert_eq!(Catalog::load(&path).unwrap(), cat);
        let text = fs::read_to_string(&path).unwrap();
        let again: Catalog = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&again).unwrap() + "\n", text);
        fs::remove_dir_all(&dir).unwrap();
    }
}
