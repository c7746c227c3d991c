//! JSON storage for harmonic polynomial maps.
//!
//! Coefficients are listed 1-indexed as `[re, im]` pairs: `a[0]` is the
//! coefficient of z and must be `[1.0, 0.0]`, `b[0]` is the coefficient of
//! the conjugated linear term. Serialization uses shortest round-trip
//! float formatting, so write followed by read reproduces every bit.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use harmkit::{AnalyticSeries, Complex, HarmonicPolyMap};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapFile {
    pub version: u32,
    pub degree: usize,
    pub a: Vec<[f64; 2]>,
    pub b: Vec<[f64; 2]>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl MapFile {
    pub fn from_map(map: &HarmonicPolyMap, metadata: BTreeMap<String, String>) -> Self {
        let degree = map.degree();
        let pair = |c: Complex| [c.re, c.im];
        MapFile {
            version: FORMAT_VERSION,
            degree,
            a: (1..=degree).map(|n| pair(map.a(n))).collect(),
            b: (1..=degree).map(|n| pair(map.b(n))).collect(),
            metadata,
        }
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let file: MapFile = serde_json::from_str(&text)
            .map_err(|e| format!("{} is not a valid map file: {e}", path.display()))?;
        file.validate()?;
        Ok(file)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.version != FORMAT_VERSION {
            return Err(format!(
                "unsupported map file version {} (expected {FORMAT_VERSION})",
                self.version
            ));
        }
        if self.degree == 0 {
            return Err("degree must be at least 1".into());
        }
        if self.a.len() != self.degree || self.b.len() != self.degree {
            return Err(format!(
                "coefficient arrays must each hold {} entries, got {} and {}",
                self.degree,
                self.a.len(),
                self.b.len()
            ));
        }
        for (name, list) in [("a", &self.a), ("b", &self.b)] {
            for (i, [re, im]) in list.iter().enumerate() {
                if !re.is_finite() || !im.is_finite() {
                    return Err(format!("{name}[{}] is not finite", i + 1));
                }
            }
        }
        let [re, im] = self.a[0];
        if (Complex::new(re, im) - Complex::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(format!(
                "leading coefficient a[1] must be [1, 0], got [{re}, {im}]"
            ));
        }
        Ok(())
    }

    pub fn to_map(&self) -> Result<HarmonicPolyMap, String> {
        let series = |list: &[[f64; 2]]| {
            AnalyticSeries::new(list.iter().map(|[re, im]| Complex::new(*re, *im)).collect())
        };
        let h = series(&self.a).map_err(|e| e.to_string())?;
        let g = series(&self.b).map_err(|e| e.to_string())?;
        HarmonicPolyMap::new(h, g).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("map file serializes");
        text.push('\n');
        text
    }

    pub fn save(&self, path: &Path) -> Result<(), String> {
        fs::write(path, self.to_json())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))
    }
}
