//! On-disk cache of `Exp(ch_t(V))`, one JSON file per (caps, method, fingerprint).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{ExpMethod, FORMULA_FINGERPRINT};
use crate::charseries::CharSeries;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{SymFn, Q};

const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    t: usize,
    partition: Partition,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct File {
    version: u32,
    fingerprint: String,
    method: String,
    sym_cap: usize,
    t_cap: usize,
    terms: Vec<Entry>,
}

#[derive(Debug, Clone)]
pub struct ExpCache {
    dir: PathBuf,
}

impl ExpCache {
    pub fn new(dir: PathBuf) -> Self {
        ExpCache { dir }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, s: usize, t: usize, method: ExpMethod) -> PathBuf {
        self.dir
            .join(format!("exp_ch_v-{}-S{s}-T{t}-v{VERSION}.json", method.tag()))
    }

    /// `Ok(None)` on a miss; an error when the file exists but cannot be used.
    pub fn load(&self, s: usize, t: usize, method: ExpMethod) -> Result<Option<CharSeries>> {
        let path = self.path(s, t, method);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let bad = |why: String| Error::Cache(format!("{}: {why}", path.display()));
        let file: File = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
        if file.version != VERSION
            || file.fingerprint != FORMULA_FINGERPRINT
            || file.method != method.tag()
            || (file.sym_cap, file.t_cap) != (s, t)
        {
            return Err(bad("stale entry".into()));
        }
        let mut coeffs = vec![SymFn::zero(s); t + 1];
        for e in file.terms {
            let num: BigInt = e.num.parse().map_err(|_| bad(format!("bad numerator {:?}", e.num)))?;
            let den: BigInt = e.den.parse().map_err(|_| bad(format!("bad denominator {:?}", e.den)))?;
            if e.t > t || e.partition.weight() > s || den == BigInt::from(0) {
                return Err(bad("term outside caps".into()));
            }
            coeffs[e.t].add_term(e.partition, Q::new(num, den));
        }
        Ok(Some(CharSeries::from_coeffs(coeffs, s, t)))
    }

    /// Writes through a temporary file and a rename, so readers never see a partial file.
    pub fn store(&self, s: usize, t: usize, method: ExpMethod, value: &CharSeries) -> Result<()> {
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", self.dir.display()));
        fs::create_dir_all(&self.dir).map_err(io)?;
        let terms = value
            .sorted_terms()
            .into_iter()
            .map(|(t, partition, c)| Entry {
                t,
                partition,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        let file = File {
            version: VERSION,
            fingerprint: FORMULA_FINGERPRINT.to_string(),
            method: method.tag().to_string(),
            sym_cap: s,
            t_cap: t,
            terms,
        };
        let body = serde_json::to_string(&file).map_err(|e| Error::Cache(e.to_string()))?;
        let path = self.path(s, t, method);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(body.as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(())
    }
}
