//! On-disk store for generic `E_λ`, one JSON file per weight.
//!
//! Layout: `dir/{n}/{λ joined by ','}.json` for generic polynomials and
//! `dir/{n}-{k}-{r}/{λ joined by ','}.json` for specialized ones. Files are written once through
//! a temporary file and a rename, and carry a SHA-256 of their payload so a
//! truncated or edited file is detected and recomputed rather than trusted.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::polyrep::{spec_poly_from_json, spec_poly_to_json, LaurentPoly};
use crate::scalars::json::{generic_from_json_factored, generic_to_json_factored};
use crate::scalars::{GenericScalar, ParamSpec, SpecScalar};

pub const CACHE_ENV: &str = "WHEEL_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

fn payload(f: &LaurentPoly<GenericScalar>) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(e, c)| json!([e, generic_to_json_factored(c)]))
        .collect();
    json!({"n": f.nvars(), "terms": terms})
}

fn file_name(lambda: &[i64]) -> String {
    let name: Vec<String> = lambda.iter().map(|v| v.to_string()).collect();
    format!("{}.json", name.join(","))
}

fn digest(v: &Value) -> String {
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> DiskCache {
        DiskCache { dir: dir.into() }
    }

    /// `WHEEL_CACHE_DIR` if set, else `fallback`.
    pub fn from_env_or(fallback: impl Into<PathBuf>) -> DiskCache {
        match std::env::var_os(CACHE_ENV) {
            Some(d) => DiskCache::new(d),
            None => DiskCache::new(fallback),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, lambda: &[i64]) -> PathBuf {
        self.dir
            .join(lambda.len().to_string())
            .join(file_name(lambda))
    }

    pub fn spec_path_for(&self, lambda: &[i64], p: &ParamSpec) -> PathBuf {
        self.dir
            .join(format!("{}-{}-{}", p.n(), p.k(), p.r()))
            .join(file_name(lambda))
    }

    fn read_checked(path: &Path, lambda: &[i64]) -> Option<Value> {
        let text = fs::read_to_string(path).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        if v["lambda"] != json!(lambda) || v["sha256"].as_str()? != digest(&v["poly"]) {
            return None;
        }
        Some(v)
    }

    fn write_atomic(path: &Path, lambda: &[i64], poly: Value) -> Result<()> {
        let parent = path.parent().unwrap();
        fs::create_dir_all(parent)
            .map_err(|e| Error::Cache(format!("{}: {e}", parent.display())))?;
        let doc = json!({"lambda": lambda, "sha256": digest(&poly), "poly": poly});
        let tmp =
            tempfile::NamedTempFile::new_in(parent).map_err(|e| Error::Cache(e.to_string()))?;
        fs::write(tmp.path(), doc.to_string()).map_err(|e| Error::Cache(e.to_string()))?;
        tmp.persist(path).map_err(|e| Error::Cache(e.to_string()))?;
        Ok(())
    }

    pub fn load_spec(&self, lambda: &[i64], p: &ParamSpec) -> Option<LaurentPoly<SpecScalar>> {
        let v = Self::read_checked(&self.spec_path_for(lambda, p), lambda)?;
        spec_poly_from_json(&v["poly"]).ok()
    }

    pub fn store_spec(
        &self,
        lambda: &[i64],
        p: &ParamSpec,
        f: &LaurentPoly<SpecScalar>,
    ) -> Result<()> {
        Self::write_atomic(
            &self.spec_path_for(lambda, p),
            lambda,
            spec_poly_to_json(f, p),
        )
    }

    /// The stored polynomial, or `None` when absent or failing its checksum.
    pub fn load(&self, lambda: &[i64]) -> Option<LaurentPoly<GenericScalar>> {
        let v = Self::read_checked(&self.path_for(lambda), lambda)?;
        let n = v["poly"]["n"].as_u64()? as usize;
        let mut terms = Vec::new();
        for t in v["poly"]["terms"].as_array()? {
            let e: Vec<i32> = t[0]
                .as_array()?
                .iter()
                .map(|x| x.as_i64().map(|y| y as i32))
                .collect::<Option<_>>()?;
            terms.push((e, generic_from_json_factored(&t[1]).ok()?));
        }
        Some(LaurentPoly::from_terms(n, terms))
    }

    pub fn store(&self, lambda: &[i64], f: &LaurentPoly<GenericScalar>) -> Result<()> {
        Self::write_atomic(&self.path_for(lambda), lambda, payload(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_integrity() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let f = LaurentPoly::from_terms(
            2,
            vec![
                (vec![1, 0], GenericScalar::one()),
                (vec![0, 1], GenericScalar::binomial(2, 1).inv().unwrap()),
            ],
        );
        assert!(cache.load(&[1, 0]).is_none());
        cache.store(&[1, 0], &f).unwrap();
        assert_eq!(cache.load(&[1, 0]).unwrap(), f);
        let path = cache.path_for(&[1, 0]);
        let text = fs::read_to_string(&path).unwrap().replace("\"1\"", "\"2\"");
        fs::write(&path, text).unwrap();
        assert!(cache.load(&[1, 0]).is_none());
    }

    #[test]
    fn specialized_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let p = ParamSpec::new(2, 1, 3).unwrap();
        let f = crate::macdonald::e_by_projection(&[1, 0]).unwrap();
        let s = crate::polyrep::specialize_poly(&f, &p).unwrap();
        assert!(cache.load_spec(&[1, 0], &p).is_none());
        cache.store_spec(&[1, 0], &p, &s).unwrap();
        assert_eq!(cache.load_spec(&[1, 0], &p).unwrap(), s);
        assert!(cache.spec_path_for(&[1, 0], &p).ends_with("2-1-3/1,0.json"));
    }
}
