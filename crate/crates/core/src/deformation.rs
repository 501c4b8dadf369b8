//! Formal deformations `μ = μ₀ + tμ₁ + t²μ₂ + …` truncated at a finite
//! order, their order-by-order conditions, and the first-order spaces of
//! the two restricted deformation types.

use serde::{Deserialize, Serialize};

use crate::algebra::{combine, split, verify_algebra, Algebra, PoissonPair};
use crate::cohomology::{kernel_in_slice, slice_basis, OperatorKind, Operators, SymmetryFilter};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{solve_affine, Matrix, Subspace, Vector};
use crate::multilinear::{
    act, alternator, axpy, comp, constants, insert_product, is_v_symmetric, BasisTuples, MultilinearMap, Permutation,
    SparseBilinear, MAX_ARITY,
};
use crate::rational::Rational;

/// Highest order a jet may carry.
pub const MAX_ORDER: usize = 6;

/// Which part of the product a deformation keeps fixed.
///
/// `Lie` deformations keep the commutative product, so every higher term is
/// skew; `Associative` deformations keep the bracket, so every higher term
/// is symmetric.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeformationKind {
    #[default]
    General,
    Lie,
    Associative,
}

impl DeformationKind {
    pub fn filter(self) -> SymmetryFilter {
        match self {
            DeformationKind::General => SymmetryFilter::None,
            DeformationKind::Lie => SymmetryFilter::Skew,
            DeformationKind::Associative => SymmetryFilter::Symmetric,
        }
    }
}

impl std::str::FromStr for DeformationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(DeformationKind::General),
            "lie" => Ok(DeformationKind::Lie),
            "associative" | "assoc" => Ok(DeformationKind::Associative),
            _ => Err(Error::Parse(format!("unknown deformation kind {s:?}"))),
        }
    }
}

fn require_poisson(a: &Algebra) -> Result<()> {
    if verify_algebra(a).markl_remm {
        Ok(())
    } else {
        Err(Error::NotPoisson)
    }
}

/// `μ₀` together with `μ₁, …, μ_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    base: Algebra,
    terms: Vec<MultilinearMap>,
}

impl Jet {
    pub fn new(base: Algebra, terms: Vec<MultilinearMap>) -> Result<Self> {
        require_poisson(&base)?;
        if terms.len() > MAX_ORDER {
            return Err(Error::OrderCap(MAX_ORDER));
        }
        for t in &terms {
            if t.arity() != 2 {
                return Err(Error::WrongArity { expected: 2, found: t.arity() });
            }
            check_dim(base.dim(), t.dim())?;
        }
        Ok(Jet { base, terms })
    }

    pub fn zero(base: Algebra) -> Result<Self> {
        Jet::new(base, Vec::new())
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn terms(&self) -> &[MultilinearMap] {
        &self.terms
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// `μ_i`, zero past the order.
    pub fn coefficient(&self, i: usize) -> MultilinearMap {
        match i {
            0 => self.base.product().clone(),
            _ => self.terms.get(i - 1).cloned().unwrap_or_else(|| MultilinearMap::zero(2, self.dim())),
        }
    }

    pub fn push(&mut self, term: MultilinearMap) -> Result<()> {
        let mut terms = self.terms.clone();
        terms.push(term);
        *self = Jet::new(self.base.clone(), terms)?;
        Ok(())
    }
}

/// `Σ_{i+j=k} (μ_i∘₁μ_j)∘φ_{v_P} − 3 Σ_{i+j=k} μ_i∘₂μ_j`; zero exactly when
/// the order-k condition holds.
pub fn dk_residual(j: &Jet, k: usize) -> MultilinearMap {
    let v_p = constants().v_p;
    let n = j.dim();
    let mut first = MultilinearMap::zero(3, n);
    let mut second = MultilinearMap::zero(3, n);
    for i in 0..=k {
        let (a, b) = (j.coefficient(i), j.coefficient(k - i));
        if a.is_zero() || b.is_zero() {
            continue;
        }
        first = &first + &comp(1, &a, &b).expect("shapes agree");
        second = &second + &comp(2, &a, &b).expect("shapes agree");
    }
    let lhs = act(&v_p, &first).expect("trilinear");
    &lhs - &second.scale(&Rational::from_integer(3))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    /// The term is not skew (Lie) or not symmetric (associative).
    Symmetry,
    /// The order-k condition has a nonzero residual.
    Condition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JetFailure {
    pub order: usize,
    pub reason: FailureReason,
    pub residual: Option<MultilinearMap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JetCheck {
    pub ok: bool,
    pub first_failure: Option<JetFailure>,
}

pub fn verify_jet(j: &Jet, kind: DeformationKind) -> JetCheck {
    let fail = |f: JetFailure| JetCheck { ok: false, first_failure: Some(f) };
    let filter = kind.filter();
    for (i, t) in j.terms.iter().enumerate() {
        if !crate::cohomology::passes_filter(t, filter) {
            return fail(JetFailure { order: i + 1, reason: FailureReason::Symmetry, residual: None });
        }
    }
    for k in 1..=j.order() {
        let r = dk_residual(j, k);
        if !r.is_zero() {
            return fail(JetFailure { order: k, reason: FailureReason::Condition, residual: Some(r) });
        }
    }
    JetCheck { ok: true, first_failure: None }
}

/// All admissible next terms, or the obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Extension {
    /// Every `particular + k` with `k` in `kernel` extends the jet.
    Solutions { particular: MultilinearMap, kernel: Subspace },
    /// The cross terms of the next order that no admissible term cancels.
    Obstructed { residual: MultilinearMap },
}

/// Solves the next-order condition for `μ_{N+1}` within the slice allowed by
/// `kind`.
pub fn extend_jet(j: &Jet, kind: DeformationKind) -> Result<Extension> {
    let check = verify_jet(j, kind);
    if let Some(f) = check.first_failure {
        return Err(Error::InvalidJet(f.order));
    }
    if j.order() >= MAX_ORDER {
        return Err(Error::OrderCap(MAX_ORDER));
    }
    let n = j.dim();
    let cross = dk_residual(j, j.order() + 1);
    let ops = Operators::new(&j.base);
    let basis = slice_basis(2, n, kind.filter())?;
    let images: Vec<Vector> =
        basis.iter().map(|b| ops.delta2_p(b).map(MultilinearMap::into_coordinates)).collect::<Result<_>>()?;
    let m = Matrix::from_column_vectors(n.pow(4), &images)?;
    let rhs: Vector = cross.coordinates().iter().map(|x| -x).collect();
    match solve_affine(&m, &rhs) {
        Ok(sol) => {
            let mut particular = vec![Rational::zero(); n.pow(3)];
            for (c, b) in sol.particular.iter().zip(&basis) {
                if !c.is_zero() {
                    axpy(&mut particular, c, b.coordinates());
                }
            }
            Ok(Extension::Solutions {
                particular: MultilinearMap::new(2, n, particular)?,
                kernel: kernel_in_slice(n.pow(3), &basis, &images)?,
            })
        }
        Err(Error::Inconsistent) => Ok(Extension::Obstructed { residual: cross }),
        Err(e) => Err(e),
    }
}

/// `{X : solutions of one operator family}` on a slice: kernel of the
/// stacked images.
fn joint_kernel<F>(n: usize, filter: SymmetryFilter, arity: usize, mut f: F) -> Result<Subspace>
where
    F: FnMut(&MultilinearMap) -> Result<Vector>,
{
    let basis = slice_basis(arity, n, filter)?;
    let images = basis.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
    kernel_in_slice(n.pow(arity as u32 + 1), &basis, &images)
}

fn concat(parts: Vec<MultilinearMap>) -> Vector {
    parts.into_iter().flat_map(MultilinearMap::into_coordinates).collect()
}

/// Skew `φ` with `δ²_C φ = 0` and `L₁(φ) = 0`.
pub fn lie_first_order_space(a: &Algebra) -> Result<Subspace> {
    require_poisson(a)?;
    let ops = Operators::new(a);
    joint_kernel(a.dim(), SymmetryFilter::Skew, 2, |b| Ok(concat(vec![ops.delta2_c(b)?, ops.l1(b)?])))
}

/// Symmetric `φ` with `δ²_H φ = 0` that are Lie biderivations.
pub fn assoc_first_order_space(a: &Algebra) -> Result<Subspace> {
    require_poisson(a)?;
    let ops = Operators::new(a);
    let br = SparseBilinear::new(split(a).bracket());
    joint_kernel(a.dim(), SymmetryFilter::Symmetric, 2, |b| {
        Ok(concat(vec![ops.delta2_h(b)?, biderivation_defect(&br, b)]))
    })
}

/// `{φ(x₁,x₂),x₃} − φ({x₂,x₃},x₁) − φ({x₁,x₃},x₂)`.
fn biderivation_defect(br: &SparseBilinear, phi: &MultilinearMap) -> MultilinearMap {
    MultilinearMap::from_fn(3, phi.dim(), |t| {
        let (x1, x2, x3) = (t[0], t[1], t[2]);
        let mut out = br.vec_basis(phi.value(&[x1, x2]), x3);
        let minus = Rational::from_integer(-1);
        axpy(&mut out, &minus, &insert_product(phi, &[0, x1], 0, br, x2, x3));
        axpy(&mut out, &minus, &insert_product(phi, &[0, x2], 0, br, x1, x3));
        out
    })
}

/// `{ψ(x₁..x_k), x_{k+1}} − Σ_i ψ(x₁, …, {x_i, x_{k+1}}, …, x_k)` on one
/// basis tuple of length k + 1.
fn k_derivation_defect_at(br: &SparseBilinear, psi: &MultilinearMap, t: &[usize]) -> Vector {
    let k = psi.arity();
    let last = t[k];
    let mut out = br.vec_basis(psi.value(&t[..k]), last);
    let minus = Rational::from_integer(-1);
    for i in 0..k {
        axpy(&mut out, &minus, &insert_product(psi, &t[..k], i, br, t[i], last));
    }
    out
}

fn k_derivation_defect(br: &SparseBilinear, psi: &MultilinearMap) -> MultilinearMap {
    MultilinearMap::from_fn(psi.arity() + 1, psi.dim(), |t| k_derivation_defect_at(br, psi, t))
}

/// Tuple-by-tuple check; works one arity past the map cap.
fn k_derivation_holds(br: &SparseBilinear, psi: &MultilinearMap) -> bool {
    BasisTuples::new(psi.arity() + 1, psi.dim())
        .all(|t| k_derivation_defect_at(br, psi, &t).iter().all(Rational::is_zero))
}

fn check_pair(p: &PoissonPair, psi: &MultilinearMap) -> Result<()> {
    check_dim(p.dim(), psi.dim())?;
    if psi.arity() >= MAX_ARITY {
        return Err(Error::UnsupportedArity(psi.arity()));
    }
    Ok(())
}

/// Whether `{ψ(x₁..x_k), x_{k+1}} = Σ_i ψ(x₁, …, {x_i, x_{k+1}}, …, x_k)`.
pub fn is_lie_k_derivation(p: &PoissonPair, psi: &MultilinearMap) -> Result<bool> {
    check_pair(p, psi)?;
    Ok(k_derivation_holds(&SparseBilinear::new(p.bracket()), psi))
}

/// Whether `{φ(x₁,x₂),x₃} = φ({x₂,x₃},x₁) + φ({x₁,x₃},x₂)`.
pub fn is_lie_biderivation(p: &PoissonPair, phi: &MultilinearMap) -> Result<bool> {
    check_pair(p, phi)?;
    if phi.arity() != 2 {
        return Err(Error::WrongArity { expected: 2, found: phi.arity() });
    }
    Ok(biderivation_defect(&SparseBilinear::new(p.bracket()), phi).is_zero())
}

pub fn lie_biderivation_space(p: &PoissonPair, filter: SymmetryFilter) -> Result<Subspace> {
    let br = SparseBilinear::new(p.bracket());
    joint_kernel(p.dim(), filter, 2, |b| Ok(biderivation_defect(&br, b).into_coordinates()))
}

/// Lie k-derivations of the given arity.
pub fn lie_k_derivation_space(p: &PoissonPair, k: usize, filter: SymmetryFilter) -> Result<Subspace> {
    if !(1..MAX_ARITY).contains(&k) {
        return Err(Error::UnsupportedArity(k));
    }
    let br = SparseBilinear::new(p.bracket());
    joint_kernel(p.dim(), filter, k, |b| Ok(k_derivation_defect(&br, b).into_coordinates()))
}

/// Which notion of symmetry cuts out the Poisson-Hochschild cochains.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CochainSymmetry {
    /// `act(V_k, ψ) = 0`.
    #[default]
    Alternator,
    /// Invariant under every permutation of arguments.
    Full,
}

/// k-linear maps that are symmetric and Lie k-derivations.
pub fn ph_cochain_space(p: &PoissonPair, k: usize, symmetry: CochainSymmetry) -> Result<Subspace> {
    if !(1..=3).contains(&k) {
        return Err(Error::UnsupportedArity(k));
    }
    let br = SparseBilinear::new(p.bracket());
    let v = alternator(k);
    joint_kernel(p.dim(), SymmetryFilter::None, k, |b| {
        let mut parts = vec![k_derivation_defect(&br, b)];
        match symmetry {
            CochainSymmetry::Alternator => parts.push(act(&v, b)?),
            CochainSymmetry::Full => {
                for i in 1..k {
                    parts.push(b - &b.permuted(&Permutation::transposition(k, i, i + 1)));
                }
            }
        }
        Ok(concat(parts))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhDeltaReport {
    pub image: MultilinearMap,
    pub is_lie_derivation: bool,
    pub is_v_symmetric: bool,
}

/// Applies the Hochschild coboundary and tests the image.
pub fn ph_delta_check(p: &PoissonPair, psi: &MultilinearMap) -> Result<PhDeltaReport> {
    check_pair(p, psi)?;
    let image = Operators::from_pair(p).hochschild_delta(psi)?;
    let br = SparseBilinear::new(p.bracket());
    Ok(PhDeltaReport {
        is_lie_derivation: k_derivation_holds(&br, &image),
        is_v_symmetric: is_v_symmetric(&image)?,
        image,
    })
}

/// Dimensions certifying (or ruling out) rigidity at first order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    pub assoc_rigid_order1: bool,
    pub lie_order1_dim: usize,
    pub sym_order1_dim: usize,
    pub biderivation_dim: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
}

pub fn rigidity_probe(p: &PoissonPair) -> Result<RigidityReport> {
    let a = combine(p);
    require_poisson(&a)?;
    let sym = assoc_first_order_space(&a)?.dim();
    Ok(RigidityReport {
        assoc_rigid_order1: sym == 0,
        lie_order1_dim: lie_first_order_space(&a)?.dim(),
        sym_order1_dim: sym,
        biderivation_dim: lie_biderivation_space(p, SymmetryFilter::None)?.dim(),
        cocycle_dim: crate::cohomology::cocycle_space(&a, OperatorKind::P2, SymmetryFilter::None)?.dim(),
        coboundary_dim: crate::cohomology::coboundary_space(&a).dim(),
    })
}

/// Lists the nonzero entries of a map (one-based), for text reports.
pub fn describe(m: &MultilinearMap) -> String {
    let mut parts = Vec::new();
    for t in BasisTuples::new(m.arity(), m.dim()) {
        for (s, v) in m.value(&t).iter().enumerate() {
            if !v.is_zero() {
                let args: Vec<String> = t.iter().map(|i| format!("e{}", i + 1)).collect();
                parts.push(format!("({}) -> {v}·e{}", args.join(","), s + 1));
            }
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

#[derive(Serialize, Deserialize)]
struct JetWire {
    base: Algebra,
    #[serde(default)]
    terms: Vec<MultilinearMap>,
}

impl Serialize for Jet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JetWire { base: self.base.clone(), terms: self.terms.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Jet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = JetWire::deserialize(d)?;
        Jet::new(w.base, w.terms).map_err(serde::de::Error::custom)
    }
}
