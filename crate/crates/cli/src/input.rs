use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::Args;
use poisson_core::{bracket_preset, instantiate, split, Algebra, MultilinearMap, Params, PoissonPair};
use serde::de::DeserializeOwned;

/// Operational failure: bad flags, unreadable files, malformed JSON.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<poisson_core::Error> for InputError {
    fn from(e: poisson_core::Error) -> Self {
        InputError(e.to_string())
    }
}

pub fn read_text(path: &Path) -> Result<String, InputError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| InputError(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Where the structure under study comes from.
#[derive(Args, Debug)]
pub struct Source {
    /// Algebra or Poisson-pair JSON file (`-` for stdin).
    pub file: Option<PathBuf>,
    /// Catalog entry name, e.g. `P_5^2`.
    #[arg(long, conflicts_with = "file")]
    pub catalog: Option<String>,
    /// Catalog parameters, e.g. `a=1,b=0`.
    #[arg(long, requires = "catalog")]
    pub params: Option<String>,
    /// Lie bracket for `P_12^3`: a multilinear-map JSON file or a preset name.
    #[arg(long, requires = "catalog")]
    pub bracket: Option<String>,
}

impl Source {
    pub fn load(&self) -> Result<PoissonPair, InputError> {
        if let Some(name) = &self.catalog {
            let mut params = match &self.params {
                Some(s) => Params::parse(s)?,
                None => Params::new(),
            };
            if let Some(b) = &self.bracket {
                params = params.with_bracket(load_bracket(b)?);
            }
            return Ok(instantiate(name, &params)?);
        }
        let path = self.file.as_deref().ok_or_else(|| InputError("give an input file or --catalog NAME".into()))?;
        load_structure(path)
    }
}

fn load_bracket(arg: &str) -> Result<MultilinearMap, InputError> {
    let path = Path::new(arg);
    if path.exists() || arg == "-" {
        read_json(path)
    } else {
        bracket_preset(arg).map_err(|_| InputError(format!("{arg}: no such file or bracket preset")))
    }
}

/// Reads either JSON shape; an algebra is split into its two parts.
pub fn load_structure(path: &Path) -> Result<PoissonPair, InputError> {
    let text = read_text(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let wrap = |e: serde_json::Error| InputError(format!("{}: {e}", path.display()));
    if value.get("product").is_some() {
        let a: Algebra = serde_json::from_value(value).map_err(wrap)?;
        Ok(split(&a))
    } else {
        serde_json::from_value(value).map_err(wrap)
    }
}
