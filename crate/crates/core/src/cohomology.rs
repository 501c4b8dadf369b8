//! Coboundary operators on cochains of a Poisson algebra and the cocycle
//! spaces they cut out.
//!
//! Notation: `·` is the nonassociative product, `•` its symmetric part and
//! `{,}` its skew part. Operators evaluated from explicit formulas live on
//! [`Operators`]; the `*_group_form` functions rebuild some of them from
//! `comp` and the symmetric-group action, as an independent route.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{split, Algebra, PoissonPair};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{kernel_basis, Matrix, Subspace, Vector};
use crate::multilinear::{
    act, axpy, comp, constants, insert_product, is_skew_bilinear, s3, sigma3, sym_skew_parts, BasisTuples,
    MultilinearMap, SparseBilinear,
};
use crate::rational::Rational;

/// Overall factor in the splitting of the Poisson coboundary into its
/// Chevalley, Hochschild and mixed pieces; see [`decompose_delta2`].
pub const DECOMPOSITION_FACTOR: i64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OperatorKind {
    P1,
    P2,
    C2,
    H2,
    L1,
    L2,
    LP2,
    Chevalley(usize),
    Hochschild(usize),
}

impl OperatorKind {
    /// Arity of the cochains the operator takes.
    pub fn input_arity(self) -> usize {
        match self {
            OperatorKind::P1 => 1,
            OperatorKind::Chevalley(k) | OperatorKind::Hochschild(k) => k,
            _ => 2,
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorKind::P1 => write!(f, "P1"),
            OperatorKind::P2 => write!(f, "P2"),
            OperatorKind::C2 => write!(f, "C2"),
            OperatorKind::H2 => write!(f, "H2"),
            OperatorKind::L1 => write!(f, "L1"),
            OperatorKind::L2 => write!(f, "L2"),
            OperatorKind::LP2 => write!(f, "LP2"),
            OperatorKind::Chevalley(k) => write!(f, "Chevalley{k}"),
            OperatorKind::Hochschild(k) => write!(f, "Hochschild{k}"),
        }
    }
}

impl FromStr for OperatorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown operator {s:?}"));
        let arity = |rest: &str| -> Result<usize> {
            let k: usize = rest.parse().map_err(|_| bad())?;
            if (1..=3).contains(&k) {
                Ok(k)
            } else {
                Err(Error::UnsupportedArity(k))
            }
        };
        Ok(match s {
            "P1" => OperatorKind::P1,
            "P2" => OperatorKind::P2,
            "C2" => OperatorKind::C2,
            "H2" => OperatorKind::H2,
            "L1" => OperatorKind::L1,
            "L2" => OperatorKind::L2,
            "LP2" => OperatorKind::LP2,
            _ => {
                if let Some(rest) = s.strip_prefix("Chevalley") {
                    OperatorKind::Chevalley(arity(rest)?)
                } else if let Some(rest) = s.strip_prefix("Hochschild") {
                    OperatorKind::Hochschild(arity(rest)?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

/// Restriction of bilinear cochains to their symmetric or skew slice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryFilter {
    #[default]
    None,
    Symmetric,
    Skew,
}

impl FromStr for SymmetryFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(SymmetryFilter::None),
            "symmetric" | "sym" => Ok(SymmetryFilter::Symmetric),
            "skew" => Ok(SymmetryFilter::Skew),
            _ => Err(Error::Parse(format!("unknown symmetry filter {s:?}"))),
        }
    }
}

/// A basis of the (filtered) space of k-linear maps. Only bilinear maps can
/// be filtered.
pub fn slice_basis(arity: usize, dim: usize, filter: SymmetryFilter) -> Result<Vec<MultilinearMap>> {
    if filter == SymmetryFilter::None {
        return Ok(MultilinearMap::standard_basis(arity, dim));
    }
    if arity != 2 {
        return Err(Error::WrongArity { expected: 2, found: arity });
    }
    let sign = if filter == SymmetryFilter::Skew { Rational::from_integer(-1) } else { Rational::one() };
    let mut out = Vec::new();
    for i in 0..dim {
        let start = if filter == SymmetryFilter::Skew { i + 1 } else { i };
        for j in start..dim {
            for s in 0..dim {
                let mut m = MultilinearMap::zero(2, dim);
                m.set(&[i, j], s, Rational::one());
                if i != j {
                    m.set(&[j, i], s, sign.clone());
                }
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Whether a bilinear map lies in the given slice.
pub fn passes_filter(phi: &MultilinearMap, filter: SymmetryFilter) -> bool {
    match filter {
        SymmetryFilter::None => true,
        SymmetryFilter::Symmetric => crate::multilinear::is_symmetric_bilinear(phi),
        SymmetryFilter::Skew => is_skew_bilinear(phi),
    }
}

/// The products of one algebra, prepared for repeated operator evaluation.
#[derive(Clone, Debug)]
pub struct Operators {
    dim: usize,
    mu: SparseBilinear,
    dot: SparseBilinear,
    br: SparseBilinear,
}

fn scaled_into(acc: &mut Vector, k: i64, v: Vector) {
    let k = Rational::from_integer(k);
    axpy(acc, &k, &v);
}

impl Operators {
    pub fn new(a: &Algebra) -> Self {
        let p = split(a);
        Operators {
            dim: a.dim(),
            mu: a.sparse(),
            dot: SparseBilinear::new(p.bullet()),
            br: SparseBilinear::new(p.bracket()),
        }
    }

    pub fn from_pair(p: &PoissonPair) -> Self {
        Self::new(&crate::algebra::combine(p))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check(&self, t: &MultilinearMap, arity: usize) -> Result<()> {
        if t.arity() != arity {
            return Err(Error::WrongArity { expected: arity, found: t.arity() });
        }
        check_dim(self.dim, t.dim())
    }

    fn trilinear<F>(&self, mut f: F) -> MultilinearMap
    where
        F: FnMut(usize, usize, usize, &mut Vector),
    {
        let n = self.dim;
        MultilinearMap::from_fn(3, n, |t| {
            let mut out = vec![Rational::zero(); n];
            f(t[0], t[1], t[2], &mut out);
            out
        })
    }

    // φ(a·b, c)
    fn pl(phi: &MultilinearMap, m: &SparseBilinear, a: usize, b: usize, c: usize) -> Vector {
        insert_product(phi, &[0, c], 0, m, a, b)
    }

    // φ(a, b·c)
    fn pr(phi: &MultilinearMap, m: &SparseBilinear, a: usize, b: usize, c: usize) -> Vector {
        insert_product(phi, &[a, 0], 1, m, b, c)
    }

    // φ(a, b)·c
    fn lp(phi: &MultilinearMap, m: &SparseBilinear, a: usize, b: usize, c: usize) -> Vector {
        m.vec_basis(phi.value(&[a, b]), c)
    }

    // a·φ(b, c)
    fn rp(phi: &MultilinearMap, m: &SparseBilinear, a: usize, b: usize, c: usize) -> Vector {
        m.basis_vec(a, phi.value(&[b, c]))
    }

    /// `f(X)·Y + X·f(Y) − f(X·Y)`.
    pub fn delta1_p(&self, f: &MultilinearMap) -> Result<MultilinearMap> {
        self.check(f, 1)?;
        let n = self.dim;
        Ok(MultilinearMap::from_fn(2, n, |t| {
            let (x, y) = (t[0], t[1]);
            let mut out = self.mu.vec_basis(f.value(&[x]), y);
            axpy(&mut out, &Rational::one(), &self.mu.basis_vec(x, f.value(&[y])));
            let minus = Rational::from_integer(-1);
            for (l, c) in self.mu.row(x, y) {
                axpy(&mut out, &(&minus * c), f.value(&[*l]));
            }
            out
        }))
    }

    /// The twelve-term linearization of the Markl-Remm identity.
    pub fn delta2_p(&self, phi: &MultilinearMap) -> Result<MultilinearMap> {
        self.check(phi, 2)?;
        let m = &self.mu;
        Ok(self.trilinear(|x, y, z, out| {
            scaled_into(out, 3, Self::pl(phi, m, x, y, z));
            scaled_into(out, -3, Self::pr(phi, m, x, y, z));
            scaled_into(out, -1, Self::pl(phi, m, x, z, y));
            scaled_into(out, -1, Self::pl(phi, m, y, z, x));
            scaled_into(out, 1, Self::pl(phi, m, y, x, z));
            scaled_into(out, 1, Self::pl(phi, m, z, x, y));
            scaled_into(out, 3, Self::lp(phi, m, x, y, z));
            scaled_into(out, -3, Self::rp(phi, m, x, y, z));
            scaled_into(out, -1, Self::lp(phi, m, x, z, y));
            scaled_into(out, -1, Self::lp(phi, m, y, z, x));
            scaled_into(out, 1, Self::lp(phi, m, y, x, z));
            scaled_into(out, 1, Self::lp(phi, m, z, x, y));
        }))
    }

    /// `Σ_cyc φ({X,Y},Z) + {φ(X,Y),Z}`.
    pub fn delta2_c(&self, phi: &MultilinearMap) -> Result<MultilinearMap> {
        self.check(phi, 2)?;
        let b = &self.br;
        Ok(self.trilinear(|x, y, z, out| {
            for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                scaled_into(out, 1, Self::pl(phi, b, p, q, r));
                scaled_into(out, 1, Self::lp(phi, b, p, q, r));
            }
        }))
    }

    /// `φ(X,Y)•Z − X•φ(Y,Z) + φ(X•Y,Z) − φ(X,Y•Z)`.
    pub fn delta2_h(&self, phi: &MultilinearMap) -> Result<MultilinearMap> {
        self.check(phi, 2)?;
        let d = &self.dot;
        Ok(self.trilinear(|x, y, z, out| {
            scaled_into(out, 1, Self::lp(phi, d, x, y, z));
            scaled_into(out, -1, Self::rp(phi, d, x, y, z));
            scaled_into(out, 1, Self::pl(phi, d, x, y, z));
            scaled_into(out, -1, Self::pr(phi, d, x, y, z));
        }))
    }

    /// `φ(X•Y,Z) − φ(X,Z)•Y − X•φ(Y,Z)`.
    pub fn l1(&self, phi: &MultilinearMap) -> Result<MultilinearMap> {
        self.check(phi, 2)?;
        let d = &self.dot;
        Ok(self.trilinear(|x, y, z, out| {
            scaled_into(out, 1, Self::pl(phi, d, x, y, z));
            scaled_into(out, -1, Self::lp(phi, d, x, z, y));
            scaled_into(out, -1, Self::rp(phi, d, x, y, z));
        }))
    }

    /// `−3φ(X,{Y,Z}) + {φ(X,Y),Z} − {φ(X,Z),Y}`.
    pub fn l2(&self, phi: &MultilinearMap) -> Result<MultilinearMap> {
        self.check(phi, 2)?;
        let b = &self.br;
        Ok(self.trilinear(|x, y, z, out| {
            scaled_into(out, -3, Self::pr(phi, b, x, y, z));
            scaled_into(out, 1, Self::lp(phi, b, x, y, z));
            scaled_into(out, -1, Self::lp(phi, b, x, z, y));
        }))
    }

    /// The Lichnerowicz-Poisson formula with the bracket as product. Defined
    /// for any bilinear map; [`lichnerowicz_delta2`] restricts to skew ones.
    fn lp2(&self, phi: &MultilinearMap) -> Result<MultilinearMap> {
        self.check(phi, 2)?;
        let b = &self.br;
        Ok(self.trilinear(|x, y, z, out| {
            scaled_into(out, 2, Self::pl(phi, b, x, y, z));
            scaled_into(out, 2, Self::pl(phi, b, y, z, x));
            scaled_into(out, -2, Self::pl(phi, b, x, z, y));
            scaled_into(out, 2, Self::lp(phi, b, x, y, z));
            scaled_into(out, 2, Self::lp(phi, b, y, z, x));
            scaled_into(out, -2, Self::lp(phi, b, x, z, y));
        }))
    }

    /// Chevalley-Eilenberg coboundary for the bracket, on arbitrary (not
    /// necessarily alternating) k-linear maps.
    pub fn chevalley_delta(&self, psi: &MultilinearMap) -> Result<MultilinearMap> {
        let k = psi.arity();
        if !(1..=3).contains(&k) {
            return Err(Error::UnsupportedArity(k));
        }
        check_dim(self.dim, psi.dim())?;
        let n = self.dim;
        Ok(MultilinearMap::from_fn(k + 1, n, |t| {
            let mut out = vec![Rational::zero(); n];
            for i in 0..=k {
                let rest: Vec<usize> = t.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &v)| v).collect();
                let sign = if i % 2 == 0 { 1 } else { -1 };
                scaled_into(&mut out, sign, self.br.basis_vec(t[i], psi.value(&rest)));
            }
            for i in 0..=k {
                for j in i + 1..=k {
                    let mut args = vec![0];
                    args.extend(t.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &v)| v));
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    scaled_into(&mut out, sign, insert_product(psi, &args, 0, &self.br, t[i], t[j]));
                }
            }
            out
        }))
    }

    /// Hochschild coboundary for the commutative product.
    pub fn hochschild_delta(&self, psi: &MultilinearMap) -> Result<MultilinearMap> {
        let k = psi.arity();
        if !(1..=3).contains(&k) {
            return Err(Error::UnsupportedArity(k));
        }
        check_dim(self.dim, psi.dim())?;
        let n = self.dim;
        Ok(MultilinearMap::from_fn(k + 1, n, |t| {
            let mut out = self.dot.basis_vec(t[0], psi.value(&t[1..]));
            for i in 0..k {
                let mut args: Vec<usize> = t[..i].to_vec();
                args.push(0);
                args.extend_from_slice(&t[i + 2..]);
                let sign = if i % 2 == 0 { -1 } else { 1 };
                scaled_into(&mut out, sign, insert_product(psi, &args, i, &self.dot, t[i], t[i + 1]));
            }
            let sign = if (k + 1).is_multiple_of(2) { 1 } else { -1 };
            scaled_into(&mut out, sign, self.dot.vec_basis(psi.value(&t[..k]), t[k]));
            out
        }))
    }

    pub fn apply(&self, kind: OperatorKind, phi: &MultilinearMap) -> Result<MultilinearMap> {
        match kind {
            OperatorKind::P1 => self.delta1_p(phi),
            OperatorKind::P2 => self.delta2_p(phi),
            OperatorKind::C2 => self.delta2_c(phi),
            OperatorKind::H2 => self.delta2_h(phi),
            OperatorKind::L1 => self.l1(phi),
            OperatorKind::L2 => self.l2(phi),
            OperatorKind::LP2 => self.lp2(phi),
            OperatorKind::Chevalley(k) | OperatorKind::Hochschild(k) if phi.arity() != k => {
                Err(Error::WrongArity { expected: k, found: phi.arity() })
            }
            OperatorKind::Chevalley(_) => self.chevalley_delta(phi),
            OperatorKind::Hochschild(_) => self.hochschild_delta(phi),
        }
    }

    /// Kernel of a linear operator on the (filtered) cochain space, in the
    /// full coordinate system of k-linear maps.
    pub fn cocycle_space(&self, kind: OperatorKind, filter: SymmetryFilter) -> Result<Subspace> {
        let arity = kind.input_arity();
        let basis = slice_basis(arity, self.dim, filter)?;
        let images = basis
            .iter()
            .map(|b| self.apply(kind, b).map(MultilinearMap::into_coordinates))
            .collect::<Result<Vec<_>>>()?;
        kernel_in_slice(self.dim.pow(arity as u32 + 1), &basis, &images)
    }
}

/// Given a basis of a slice and the operator's image of each element,
/// returns the kernel pulled back into ambient coordinates.
pub(crate) fn kernel_in_slice(ambient: usize, basis: &[MultilinearMap], images: &[Vector]) -> Result<Subspace> {
    let rows = images.first().map_or(0, Vec::len);
    let m = Matrix::from_column_vectors(rows, images)?;
    let k = kernel_basis(&m);
    let vectors: Vec<Vector> = k
        .basis()
        .iter()
        .map(|coeffs| {
            let mut v = vec![Rational::zero(); ambient];
            for (c, b) in coeffs.iter().zip(basis) {
                if !c.is_zero() {
                    axpy(&mut v, c, b.coordinates());
                }
            }
            v
        })
        .collect();
    Subspace::span(ambient, &vectors)
}

pub fn delta1_p(a: &Algebra, f: &MultilinearMap) -> Result<MultilinearMap> {
    Operators::new(a).delta1_p(f)
}

pub fn delta2_p(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap> {
    Operators::new(a).delta2_p(phi)
}

pub fn delta2_c(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap> {
    Operators::new(a).delta2_c(phi)
}

pub fn delta2_h(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap> {
    Operators::new(a).delta2_h(phi)
}

pub fn l1(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap> {
    Operators::new(a).l1(phi)
}

pub fn l2(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap> {
    Operators::new(a).l2(phi)
}

pub fn chevalley_delta(p: &PoissonPair, psi: &MultilinearMap) -> Result<MultilinearMap> {
    Operators::from_pair(p).chevalley_delta(psi)
}

pub fn hochschild_delta(p: &PoissonPair, psi: &MultilinearMap) -> Result<MultilinearMap> {
    Operators::from_pair(p).hochschild_delta(psi)
}

pub fn cocycle_space(a: &Algebra, kind: OperatorKind, filter: SymmetryFilter) -> Result<Subspace> {
    Operators::new(a).cocycle_space(kind, filter)
}

/// `2δ²_C φ = ... ∘ φ_{v_L}` for skew φ, evaluated with the bracket as the
/// product, through `comp` and the group action.
pub fn delta2_c_group_form(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap> {
    let br = split(a).bracket().clone();
    let inner = &comp(1, phi, &br)? + &comp(1, &br, phi)?;
    Ok(act(&constants().v_l, &inner)?.scale(&Rational::new(1, 2)))
}

/// `(μ₀∘₁φ + φ∘₁μ₀)∘φ_{v_P} − 3(μ₀∘₂φ + φ∘₂μ₀)`.
pub fn delta2_p_group_form(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap> {
    let mu = a.product();
    let first = act(&constants().v_p, &(&comp(1, mu, phi)? + &comp(1, phi, mu)?))?;
    let second = &comp(2, mu, phi)? + &comp(2, phi, mu)?;
    Ok(&first - &second.scale(&Rational::from_integer(3)))
}

/// `½[φ∘₁μ₀∘φ_{Id+τ12} − μ₀∘₁φ∘φ_{τ23+c} − μ₀∘₂φ∘φ_{Id+τ12}]`.
pub fn l1_group_form(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap> {
    use sigma3::*;
    let mu = a.product();
    let t1 = act(&s3(&[(id(), 1), (t12(), 1)]), &comp(1, phi, mu)?)?;
    let t2 = act(&s3(&[(t23(), 1), (c(), 1)]), &comp(1, mu, phi)?)?;
    let t3 = act(&s3(&[(id(), 1), (t12(), 1)]), &comp(2, mu, phi)?)?;
    Ok((&(&t1 - &t2) - &t3).scale(&Rational::new(1, 2)))
}

/// `½[φ∘₁μ₀∘φ_{−3Id+3τ23} + μ₀∘₁φ∘φ_{τ12−c²} + μ₀∘₂φ∘φ_{Id+τ13}]`.
///
/// This does not agree with [`l2`] in general; it is kept so the
/// difference stays visible in tests.
pub fn l2_group_form(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap> {
    use sigma3::*;
    let mu = a.product();
    let t1 = act(&s3(&[(id(), -3), (t23(), 3)]), &comp(1, phi, mu)?)?;
    let t2 = act(&s3(&[(t12(), 1), (c2(), -1)]), &comp(1, mu, phi)?)?;
    let t3 = act(&s3(&[(id(), 1), (t13(), 1)]), &comp(2, mu, phi)?)?;
    Ok((&(&t1 + &t2) + &t3).scale(&Rational::new(1, 2)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub lhs: MultilinearMap,
    pub rhs: MultilinearMap,
    pub equal: bool,
}

/// `δ²_P φ` against
/// `2(δ²_C φ_a + δ²_C φ_s + δ²_H φ_a + 2δ²_H φ_s + L₁(φ_a) + L₂(φ_s))`.
pub fn decompose_delta2(a: &Algebra, phi: &MultilinearMap) -> Result<Decomposition> {
    let ops = Operators::new(a);
    let lhs = ops.delta2_p(phi)?;
    let (s, sk) = sym_skew_parts(phi)?;
    let two = Rational::from_integer(2);
    let mut inner = &ops.delta2_c(&sk)? + &ops.delta2_c(&s)?;
    inner = &inner + &ops.delta2_h(&sk)?;
    inner = &inner + &ops.delta2_h(&s)?.scale(&two);
    inner = &inner + &ops.l1(&sk)?;
    inner = &inner + &ops.l2(&s)?;
    let rhs = inner.scale(&Rational::from_integer(DECOMPOSITION_FACTOR));
    let equal = lhs == rhs;
    Ok(Decomposition { lhs, rhs, equal })
}

/// The same splitting written on `φ` and `φ̃` directly:
/// `2δ²_C φ + 3δ²_H φ + δ²_H φ̃ + (L₁ + L₂)φ − (L₁ − L₂)φ̃`.
pub fn decompose_delta2_unsplit(a: &Algebra, phi: &MultilinearMap) -> Result<Decomposition> {
    let ops = Operators::new(a);
    let lhs = ops.delta2_p(phi)?;
    let t = phi.swapped()?;
    let mut rhs = ops.delta2_c(phi)?.scale(&Rational::from_integer(2));
    rhs = &rhs + &ops.delta2_h(phi)?.scale(&Rational::from_integer(3));
    rhs = &rhs + &ops.delta2_h(&t)?;
    rhs = &rhs + &(&ops.l1(phi)? + &ops.l2(phi)?);
    rhs = &rhs - &(&ops.l1(&t)? - &ops.l2(&t)?);
    let equal = lhs == rhs;
    Ok(Decomposition { lhs, rhs, equal })
}

/// Recovers `12δ²_C φ_a` and `12δ²_H φ_s` from signed permutation sums of
/// `δ²_P φ`; true iff both identities hold.
pub fn prop3_check(a: &Algebra, phi: &MultilinearMap) -> Result<bool> {
    use sigma3::*;
    let ops = Operators::new(a);
    let p = ops.delta2_p(phi)?;
    let (s, sk) = sym_skew_parts(phi)?;
    let twelve = Rational::from_integer(12);
    let chev = act(&constants().v_l, &p)? == ops.delta2_c(&sk)?.scale(&twelve);
    let hoch_v = s3(&[(id(), 1), (t13(), -1), (t23(), 1), (c2(), -1)]);
    let hoch = act(&hoch_v, &p)? == ops.delta2_h(&s)?.scale(&twelve);
    Ok(chev && hoch)
}

/// `2φ(X·Y,Z) + 2φ(Y·Z,X) − 2φ(X·Z,Y) + 2φ(X,Y)·Z + 2φ(Y,Z)·X − 2φ(X,Z)·Y`
/// with `·` the bracket.
pub fn lichnerowicz_delta2(p: &PoissonPair, phi: &MultilinearMap) -> Result<MultilinearMap> {
    if phi.arity() != 2 {
        return Err(Error::WrongArity { expected: 2, found: phi.arity() });
    }
    if !is_skew_bilinear(phi) {
        return Err(Error::NotSkew);
    }
    Operators::from_pair(p).lp2(phi)
}

/// Image of `δ¹_P`: the trivial first-order deformations.
pub fn coboundary_space(a: &Algebra) -> Subspace {
    let ops = Operators::new(a);
    let n = a.dim();
    let images: Vec<Vector> = MultilinearMap::standard_basis(1, n)
        .iter()
        .map(|f| ops.delta1_p(f).expect("shapes agree").into_coordinates())
        .collect();
    Subspace::span(n.pow(3), &images).expect("lengths agree")
}

/// Derivations of the nonassociative product, `ker δ¹_P`.
pub fn derivations(a: &Algebra) -> Subspace {
    cocycle_space(a, OperatorKind::P1, SymmetryFilter::None).expect("arity 1 needs no filter")
}

/// Common derivations of the bracket and of the commutative product.
pub fn derivations_of_both(a: &Algebra) -> Result<Subspace> {
    let ops = Operators::new(a);
    let c = ops.cocycle_space(OperatorKind::Chevalley(1), SymmetryFilter::None)?;
    let h = ops.cocycle_space(OperatorKind::Hochschild(1), SymmetryFilter::None)?;
    crate::linalg::intersect(&c, &h)
}

/// Evaluates both sides of: `δ²_P φ = 0` iff (`δ²_C φ_a = 0`, `δ²_H φ_s = 0`
/// and `δ²_C φ_s + δ²_H φ_a + L₁(φ_a) + L₂(φ_s) = 0`). True when they agree.
pub fn theorem5_check(a: &Algebra, phi: &MultilinearMap) -> Result<bool> {
    let ops = Operators::new(a);
    let lhs = ops.delta2_p(phi)?.is_zero();
    let (s, sk) = sym_skew_parts(phi)?;
    let mixed = &(&(&ops.delta2_c(&s)? + &ops.delta2_h(&sk)?) + &ops.l1(&sk)?) + &ops.l2(&s)?;
    let rhs = ops.delta2_c(&sk)?.is_zero() && ops.delta2_h(&s)?.is_zero() && mixed.is_zero();
    Ok(lhs == rhs)
}

/// Lists `(tuple, value)` pairs of nonzero outputs; handy in reports.
pub fn support(m: &MultilinearMap) -> Vec<(Vec<usize>, Vector)> {
    BasisTuples::new(m.arity(), m.dim())
        .filter_map(|t| {
            let v = m.value(&t);
            if v.iter().all(Rational::is_zero) {
                None
            } else {
                Some((t.iter().map(|i| i + 1).collect(), v.to_vec()))
            }
        })
        .collect()
}
