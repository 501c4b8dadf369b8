//! The complex Poisson algebras of dimension 2 and 3, up to isomorphism,
//! with rational structure constants.
//!
//! Products not listed are zero. Products are stored symmetrized and
//! brackets skew-completed.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{verify, PoissonPair};
use crate::error::{Error, Result};
use crate::multilinear::{is_skew_bilinear, MultilinearMap};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamDomain {
    /// `0` or `1`: switches a bracket off or on.
    Binary,
    /// Any rational number.
    Rational,
    /// A Lie bracket on `Q^3`, given as a tensor or a preset name.
    LieBracket,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: ParamDomain,
    /// Used when the caller leaves the parameter unset.
    pub default: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntrySignature {
    pub name: &'static str,
    pub dim: usize,
    pub params: Vec<ParamSpec>,
}

impl fmt::Display for EntrySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim)?;
        for p in &self.params {
            let dom = match p.domain {
                ParamDomain::Binary => "{0,1}",
                ParamDomain::Rational => "Q",
                ParamDomain::LieBracket => "Lie bracket",
            };
            write!(f, " {} in {dom} [default {}]", p.name, p.default)?;
        }
        Ok(())
    }
}

const A_BINARY: ParamSpec = ParamSpec { name: "a", domain: ParamDomain::Binary, default: "1" };

fn sig(name: &'static str, dim: usize, params: Vec<ParamSpec>) -> EntrySignature {
    EntrySignature { name, dim, params }
}

pub fn list_entries() -> Vec<EntrySignature> {
    let rat = |name, default| ParamSpec { name, domain: ParamDomain::Rational, default };
    vec![
        sig("P_1^2", 2, vec![]),
        sig("P_2^2", 2, vec![]),
        sig("P_3^2", 2, vec![]),
        sig("P_4^2", 2, vec![]),
        sig("P_5^2", 2, vec![A_BINARY]),
        sig("P_1^3", 3, vec![]),
        sig("P_2^3", 3, vec![]),
        sig("P_3^3", 3, vec![]),
        sig("P_4^3", 3, vec![]),
        sig("P_5^3", 3, vec![A_BINARY]),
        sig("P_6^3", 3, vec![]),
        sig("P_7^3", 3, vec![A_BINARY]),
        sig("P_8^3", 3, vec![]),
        sig("P_9^3", 3, vec![]),
        sig("P_10^3", 3, vec![rat("a", "1"), rat("b", "0")]),
        sig("P_11^3", 3, vec![]),
        sig("P_12^3", 3, vec![ParamSpec { name: "bracket", domain: ParamDomain::LieBracket, default: "sl2" }]),
    ]
}

/// Parameter values for [`instantiate`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    pub values: BTreeMap<String, Rational>,
    pub bracket: Option<MultilinearMap>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: Rational) -> Self {
        self.values.insert(name.to_string(), value);
        self
    }

    pub fn with_bracket(mut self, bracket: MultilinearMap) -> Self {
        self.bracket = Some(bracket);
        self
    }

    /// Parses `a=1,b=-1/2`. The value `bracket=NAME` selects a preset.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Params::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::BadParameter(format!("expected name=value, got {part:?}")))?;
            let (k, v) = (k.trim(), v.trim());
            if k == "bracket" {
                out.bracket = Some(bracket_preset(v)?);
            } else {
                out.values.insert(k.to_string(), v.parse()?);
            }
        }
        Ok(out)
    }
}

/// Named brackets on `Q^3`: `sl2`, `heisenberg`, `abelian`.
pub fn bracket_preset(name: &str) -> Result<MultilinearMap> {
    let entries: &[(usize, usize, usize, i64)] = match name {
        "sl2" => &[(1, 2, 2, 2), (1, 3, 3, -2), (2, 3, 1, 1)],
        "heisenberg" => &[(1, 2, 3, 1)],
        "abelian" => &[],
        _ => return Err(Error::BadParameter(format!("unknown bracket preset {name:?}"))),
    };
    Ok(PoissonPair::from_entries(3, &[], &ints(entries)).expect("preset entries are in range").bracket().clone())
}

fn ints(e: &[(usize, usize, usize, i64)]) -> Vec<(usize, usize, usize, Rational)> {
    e.iter().map(|&(i, j, k, v)| (i, j, k, Rational::from_integer(v))).collect()
}

fn scaled(e: &[(usize, usize, usize, i64)], a: &Rational) -> Vec<(usize, usize, usize, Rational)> {
    e.iter().map(|&(i, j, k, v)| (i, j, k, Rational::from_integer(v) * a)).collect()
}

/// e1 is a unit for the commutative product.
const E1_UNIT: [(usize, usize, usize, i64); 3] = [(1, 1, 1, 1), (1, 2, 2, 1), (1, 3, 3, 1)];

pub fn instantiate(name: &str, params: &Params) -> Result<PoissonPair> {
    let signature =
        list_entries().into_iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    for k in params.values.keys() {
        if !signature.params.iter().any(|p| p.name == k && p.domain != ParamDomain::LieBracket) {
            return Err(Error::BadParameter(format!("{name} takes no parameter {k:?}")));
        }
    }
    let takes_bracket = signature.params.iter().any(|p| p.domain == ParamDomain::LieBracket);
    if params.bracket.is_some() && !takes_bracket {
        return Err(Error::BadParameter(format!("{name} takes no bracket")));
    }
    let value = |p: &str| -> Result<Rational> {
        let spec = signature.params.iter().find(|s| s.name == p).expect("declared");
        let v = match params.values.get(p) {
            Some(v) => v.clone(),
            None => spec.default.parse()?,
        };
        if spec.domain == ParamDomain::Binary && !(v.is_zero() || v.is_one()) {
            return Err(Error::BadParameter(format!("{name}: {p} must be 0 or 1, got {v}")));
        }
        Ok(v)
    };
    let pair = |dim, bullet: &[(usize, usize, usize, i64)], bracket: Vec<(usize, usize, usize, Rational)>| {
        PoissonPair::from_entries(dim, &ints(bullet), &bracket)
    };
    let cat = |a: &[(usize, usize, usize, i64)], b: &[(usize, usize, usize, i64)]| -> Vec<(usize, usize, usize, i64)> {
        a.iter().chain(b).copied().collect()
    };
    match name {
        "P_1^2" => pair(2, &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 2, 2, 1)], vec![]),
        "P_2^2" => pair(2, &[(1, 1, 1, 1), (1, 2, 2, 1)], vec![]),
        "P_3^2" => pair(2, &[(1, 1, 2, 1)], vec![]),
        "P_4^2" => pair(2, &[(1, 1, 1, 1)], vec![]),
        "P_5^2" => pair(2, &[], scaled(&[(1, 2, 2, 1)], &value("a")?)),
        "P_1^3" => pair(3, &cat(&E1_UNIT, &[(2, 2, 2, 1), (3, 3, 3, 1)]), vec![]),
        // e3•e3 = e2 − e1, as tabulated
        "P_2^3" => pair(3, &cat(&E1_UNIT, &[(2, 2, 2, 1), (3, 3, 2, 1), (3, 3, 1, -1)]), vec![]),
        "P_3^3" => pair(3, &cat(&E1_UNIT, &[(2, 2, 2, 1)]), vec![]),
        "P_4^3" => pair(3, &cat(&E1_UNIT, &[(3, 3, 2, 1)]), vec![]),
        "P_5^3" => pair(3, &E1_UNIT, scaled(&[(2, 3, 3, 1)], &value("a")?)),
        "P_6^3" => pair(3, &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 2, 2, 1)], vec![]),
        "P_7^3" => pair(3, &[(1, 1, 1, 1)], scaled(&[(2, 3, 3, 1)], &value("a")?)),
        "P_8^3" => pair(3, &[(1, 1, 1, 1), (1, 2, 2, 1)], vec![]),
        "P_9^3" => pair(3, &[(1, 1, 1, 1), (2, 2, 3, 1)], vec![]),
        "P_10^3" => {
            let (a, b) = (value("a")?, value("b")?);
            pair(3, &[(1, 1, 2, 1)], vec![(1, 3, 2, a), (1, 3, 3, b)])
        }
        "P_11^3" => pair(3, &[(1, 1, 2, 1), (1, 2, 3, 1)], vec![]),
        "P_12^3" => {
            let bracket = match &params.bracket {
                Some(b) => b.clone(),
                None => bracket_preset("sl2")?,
            };
            lie_only(bracket)
        }
        _ => unreachable!("every listed entry is handled"),
    }
}

/// Zero commutative product with the given bracket, which must be a Lie
/// bracket on `Q^3`.
fn lie_only(bracket: MultilinearMap) -> Result<PoissonPair> {
    if bracket.arity() != 2 || bracket.dim() != 3 {
        return Err(Error::BadParameter(format!(
            "bracket must be bilinear on Q^3, got arity {} dim {}",
            bracket.arity(),
            bracket.dim()
        )));
    }
    if !is_skew_bilinear(&bracket) {
        return Err(Error::BadParameter("bracket is not skew-symmetric".into()));
    }
    let p = PoissonPair::new(MultilinearMap::zero(2, 3), bracket)?;
    if !verify(&p).jacobi {
        return Err(Error::BadParameter("bracket fails the Jacobi identity".into()));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::z;

    #[test]
    fn seventeen_families() {
        let l = list_entries();
        assert_eq!(l.len(), 17);
        assert_eq!(l.iter().filter(|s| s.dim == 2).count(), 5);
        let p52 = l.iter().find(|s| s.name == "P_5^2").unwrap();
        assert_eq!(p52.params[0].domain, ParamDomain::Binary);
        let p10 = l.iter().find(|s| s.name == "P_10^3").unwrap();
        assert_eq!(p10.params.iter().map(|p| p.name).collect::<Vec<_>>(), ["a", "b"]);
    }

    #[test]
    fn p12_and_p102() {
        let p = instantiate("P_1^2", &Params::new()).unwrap();
        assert_eq!(p.bullet().get(&[0, 1], 1), &z(1));
        assert_eq!(p.bullet().get(&[1, 1], 1), &z(1));
        assert!(p.bracket().is_zero());
        let p10 = instantiate("P_10^3", &Params::new().with("a", z(1)).with("b", z(0))).unwrap();
        assert_eq!(p10.bullet().get(&[0, 0], 1), &z(1));
        assert_eq!(p10.bracket().get(&[0, 2], 1), &z(1));
        assert_eq!(p10.bracket().get(&[2, 0], 1), &z(-1));
        assert_eq!(p10.bracket().get(&[0, 2], 2), &z(0));
    }

    #[test]
    fn sl2_entry() {
        let p = instantiate("P_12^3", &Params::new().with_bracket(bracket_preset("sl2").unwrap())).unwrap();
        assert!(p.bullet().is_zero());
        assert_eq!(p.bracket().get(&[1, 2], 0), &z(1));
    }

    #[test]
    fn errors() {
        assert!(matches!(instantiate("P_13^3", &Params::new()), Err(Error::UnknownEntry(_))));
        assert!(matches!(instantiate("P_5^2", &Params::new().with("a", z(2))), Err(Error::BadParameter(_))));
        assert!(matches!(instantiate("P_1^2", &Params::new().with("a", z(1))), Err(Error::BadParameter(_))));
        // {e1,e2} = e3, {e1,e3} = e1, {e2,e3} = e2 fails Jacobi
        let bad = PoissonPair::from_entries(3, &[], &ints(&[(1, 2, 3, 1), (1, 3, 1, 1), (2, 3, 2, 1)]))
            .unwrap()
            .bracket()
            .clone();
        assert!(matches!(instantiate("P_12^3", &Params::new().with_bracket(bad)), Err(Error::BadParameter(_))));
    }

    #[test]
    fn params_parse() {
        let p = Params::parse("a=2, b=-1/2").unwrap();
        assert_eq!(p.values["b"], crate::rational::q(-1, 2));
        assert!(Params::parse("bracket=heisenberg").unwrap().bracket.is_some());
        assert!(Params::parse("a").is_err());
        assert!(Params::parse("bracket=so3").is_err());
    }
}
