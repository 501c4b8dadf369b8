//! Browser bindings. Every export takes a catalog entry name plus a parameter
//! string (`a=1,b=0`, `bracket=heisenberg`) and returns a JSON string.

use poisson_core::deformation::describe;
use poisson_core::{
    combine, decompose_delta2, instantiate, list_entries, prop3_check, rigidity_probe, verify, MultilinearMap, Params,
    PoissonPair, Rational, RigidityReport,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wasm_bindgen::prelude::*;

const MAX_SAMPLES: u32 = 500;

fn load(name: &str, params: &str) -> Result<PoissonPair, String> {
    let params = Params::parse(params).map_err(|e| e.to_string())?;
    instantiate(name, &params).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct EntryView {
    name: &'static str,
    dim: usize,
    signature: String,
}

/// Catalog names with their parameter signatures.
#[wasm_bindgen]
pub fn catalog() -> Result<String, String> {
    let entries: Vec<EntryView> =
        list_entries().into_iter().map(|e| EntryView { name: e.name, dim: e.dim, signature: e.to_string() }).collect();
    to_json(&entries)
}

#[derive(Serialize)]
struct VerifyView {
    bullet: String,
    bracket: String,
    product: String,
    report: poisson_core::AxiomReport,
}

#[wasm_bindgen]
pub fn verify_entry(name: &str, params: &str) -> Result<String, String> {
    let p = load(name, params)?;
    to_json(&VerifyView {
        bullet: describe(p.bullet()),
        bracket: describe(p.bracket()),
        product: describe(combine(&p).product()),
        report: verify(&p),
    })
}

#[wasm_bindgen]
pub fn rigidity(name: &str, params: &str) -> Result<String, String> {
    let r: RigidityReport = rigidity_probe(&load(name, params)?).map_err(|e| e.to_string())?;
    to_json(&r)
}

#[derive(Serialize, Debug, PartialEq, Eq)]
struct DecompositionView {
    samples: u32,
    decomposition_holds: u32,
    projections_hold: u32,
    /// First sampled cochain for which either check failed.
    counterexample: Option<String>,
}

/// Samples random bilinear cochains with small rational entries and checks
/// the splitting of the degree-2 coboundary on each.
#[wasm_bindgen]
pub fn decomposition_check(name: &str, params: &str, seed: u64, samples: u32) -> Result<String, String> {
    to_json(&run_decomposition(name, params, seed, samples)?)
}

fn run_decomposition(name: &str, params: &str, seed: u64, samples: u32) -> Result<DecompositionView, String> {
    let samples = samples.min(MAX_SAMPLES);
    let a = combine(&load(name, params)?);
    let n = a.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut view = DecompositionView { samples, decomposition_holds: 0, projections_hold: 0, counterexample: None };
    for _ in 0..samples {
        let phi = MultilinearMap::from_fn(2, n, |_| {
            (0..n).map(|_| Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect()
        });
        let split_ok = decompose_delta2(&a, &phi).map_err(|e| e.to_string())?.equal;
        let proj_ok = prop3_check(&a, &phi).map_err(|e| e.to_string())?;
        view.decomposition_holds += u32::from(split_ok);
        view.projections_hold += u32::from(proj_ok);
        if !(split_ok && proj_ok) && view.counterexample.is_none() {
            view.counterexample = Some(describe(&phi));
        }
    }
    Ok(view)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports_return_json() {
        let entries: serde_json::Value = serde_json::from_str(&catalog().unwrap()).unwrap();
        assert_eq!(entries.as_array().unwrap().len(), 17);
        let v: serde_json::Value = serde_json::from_str(&verify_entry("P_5^3", "a=0").unwrap()).unwrap();
        assert_eq!(v["report"]["markl_remm"], true);
        let r: serde_json::Value = serde_json::from_str(&rigidity("P_12^3", "bracket=sl2").unwrap()).unwrap();
        assert_eq!(r["assoc_rigid_order1"], true);
    }

    #[test]
    fn decomposition_is_seeded() {
        let first = run_decomposition("P_10^3", "a=2,b=-1", 7, 20).unwrap();
        assert_eq!(first.decomposition_holds, 20);
        assert_eq!(first.projections_hold, 20);
        assert_eq!(first, run_decomposition("P_10^3", "a=2,b=-1", 7, 20).unwrap());
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(verify_entry("P_0^2", "").is_err());
        assert!(rigidity("P_5^2", "a=3").is_err());
    }
}
