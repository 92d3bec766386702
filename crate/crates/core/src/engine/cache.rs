use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use serde::{Deserialize, Serialize};

use super::universal::{check_held_out, held_out_degrees, parse_term_label, SamplePoint, Witness};
use super::{universal_integral, UniversalIntegral};
use crate::algebra::parse_rational;
use crate::error::{Error, Result};
use crate::geometry::eval_expr_on_union;
use crate::{Expr, Poly2, Rational};

type Key = (u32, String);

/// Memoising front end for [`universal_integral`], optionally backed by a
/// JSON-lines file. Entries read from the file are re-checked on their
/// held-out points before use; entries that fail are dropped and recomputed.
#[derive(Debug, Default)]
pub struct Engine {
    cache: RwLock<HashMap<Key, Arc<UniversalIntegral>>>,
    file: Option<Mutex<PathBuf>>,
    loaded: usize,
    rejected: usize,
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    expr: String,
    k: u32,
    degree_bound: u32,
    coefficients: serde_json::Map<String, serde_json::Value>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Loads `path` if it exists and appends every new result to it.
    pub fn with_cache_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut engine = Self::new();
        if path.exists() {
            let file = File::open(&path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
            for line in BufReader::new(file).lines() {
                let line = line.map_err(|e| Error::Cache(e.to_string()))?;
                if line.trim().is_empty() {
                    continue;
                }
                match restore(&line) {
                    Ok(u) => {
                        let key = (u.k(), u.expr().to_string());
                        engine.cache.get_mut().expect("fresh lock").insert(key, Arc::new(u));
                        engine.loaded += 1;
                    }
                    Err(_) => engine.rejected += 1,
                }
            }
        }
        engine.file = Some(Mutex::new(path));
        Ok(engine)
    }

    /// Entries restored from the cache file, and entries rejected on load.
    pub fn load_stats(&self) -> (usize, usize) {
        (self.loaded, self.rejected)
    }

    pub fn cached(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    /// Every memoised integral, in key order.
    pub fn entries(&self) -> Vec<Arc<UniversalIntegral>> {
        let map = self.cache.read().expect("cache lock");
        let mut keys: Vec<_> = map.keys().cloned().collect();
        keys.sort();
        keys.iter().map(|k| Arc::clone(&map[k])).collect()
    }

    pub fn universal(&self, expr: &Expr, k: u32) -> Result<Arc<UniversalIntegral>> {
        let key = (k, expr.to_string());
        if let Some(u) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(u));
        }
        let fresh = Arc::new(universal_integral(expr, k, None)?);
        let (stored, inserted) = {
            let mut map = self.cache.write().expect("cache lock");
            match map.get(&key) {
                Some(existing) => (Arc::clone(existing), false),
                None => {
                    map.insert(key, Arc::clone(&fresh));
                    (fresh, true)
                }
            }
        };
        if inserted {
            self.append(&stored)?;
        }
        Ok(stored)
    }

    /// `∫_{C^{[k]}} expr` at degree `d` and genus `g`.
    pub fn integral(&self, expr: &Expr, k: u32, d: i64, g: i64) -> Result<Rational> {
        Ok(self.universal(expr, k)?.eval(d, g))
    }

    fn append(&self, u: &UniversalIntegral) -> Result<()> {
        let Some(path) = &self.file else {
            return Ok(());
        };
        let path = path.lock().expect("cache file lock");
        let line = CacheLine {
            expr: u.expr().to_string(),
            k: u.k(),
            degree_bound: u.degree_bound(),
            coefficients: match u.coefficient_json() {
                serde_json::Value::Object(m) => m,
                _ => unreachable!("coefficients serialise to an object"),
            },
        };
        let text = serde_json::to_string(&line).map_err(|e| Error::Cache(e.to_string()))?;
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&*path)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        writeln!(f, "{text}").map_err(|e| Error::Cache(e.to_string()))
    }
}

fn restore(line: &str) -> Result<UniversalIntegral> {
    let parsed: CacheLine = serde_json::from_str(line).map_err(|e| Error::Cache(e.to_string()))?;
    let expr = Expr::parse(&parsed.expr)?;
    if !expr.has_weight(parsed.k) {
        return Err(Error::Cache(format!("{} does not have weight {}", parsed.expr, parsed.k)));
    }
    let mut terms = Vec::new();
    for (label, value) in &parsed.coefficients {
        let (i, j) = parse_term_label(label)?;
        if i + j > parsed.degree_bound {
            return Err(Error::Cache(format!("term {label} exceeds degree bound")));
        }
        let text = value
            .as_str()
            .ok_or_else(|| Error::Cache(format!("coefficient of {label} is not a string")))?;
        terms.push(((i, j), parse_rational(text)?));
    }
    let polynomial = Poly2::from_terms(parsed.degree_bound, terms);
    let held_out = held_out_degrees(parsed.degree_bound)
        .into_iter()
        .map(|degrees| {
            let value = eval_expr_on_union(&expr, &degrees, parsed.k)?;
            Ok(SamplePoint {
                d: degrees.iter().sum(),
                g: 1 - degrees.len() as i64,
                degrees,
                value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    check_held_out(&expr, &polynomial, &held_out)?;
    Ok(UniversalIntegral::from_parts(
        expr,
        parsed.k,
        polynomial,
        parsed.degree_bound,
        Witness {
            samples: Vec::new(),
            held_out,
        },
    ))
}
