use std::fs;
use std::path::Path;

use spinmod_core::category::{io, parse_builtin, CategoryData};
use spinmod_core::corpus::{e8, lens_chain};
use spinmod_core::{LinkingMatrix, PlumbingForest};

fn read(path: &str) -> Result<Option<String>, String> {
    if Path::new(path).is_file() {
        fs::read_to_string(path).map(Some).map_err(|e| format!("{path}: {e}"))
    } else {
        Ok(None)
    }
}

pub fn category(spec: &str) -> Result<CategoryData, String> {
    match read(spec)? {
        Some(text) => io::from_json(&text).map_err(|e| format!("{spec}: {e}")),
        None => parse_builtin(spec).map_err(|e| e.to_string()),
    }
}

pub fn manifold(spec: &str) -> Result<PlumbingForest, String> {
    if let Some(text) = read(spec)? {
        return PlumbingForest::parse(&text).map_err(|e| format!("{spec}: {e}"));
    }
    let bad = || format!("{spec}: no such file, and not one of e8, lens:<p>:<q>, chain:<m>,...");
    let fields: Vec<&str> = spec.split(':').collect();
    match fields.as_slice() {
        ["e8"] => Ok(e8()),
        ["lens", p, q] => {
            let (p, q): (i64, i64) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
            if !(p > q && q >= 1 && num_integer::gcd(p, q) == 1) {
                return Err(format!("lens:{p}:{q} needs p > q >= 1 coprime"));
            }
            Ok(lens_chain(p, q))
        }
        ["chain", ms] => {
            let ms: Vec<i64> = ms
                .split(',')
                .map(|m| m.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            Ok(PlumbingForest::chain(&ms))
        }
        _ => Err(bad()),
    }
}

pub fn matrix(spec: &str) -> Result<LinkingMatrix, String> {
    let text = read(spec)?.unwrap_or_else(|| spec.to_string());
    LinkingMatrix::parse(&text).map_err(|e| e.to_string())
}
