//! Poisson algebras in two presentations: a pair (commutative product,
//! bracket) and a single nonassociative product `xy = x•y + {x,y}`.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{kernel_basis, Matrix, Subspace, Vector};
use crate::multilinear::{is_skew_bilinear, is_symmetric_bilinear, BasisTuples, MultilinearMap, SparseBilinear};
use crate::rational::Rational;

/// An algebra on `Q^n` given by the structure constants of one bilinear
/// product: `e_i e_j = Σ_k Γ_ij^k e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    product: MultilinearMap,
}

impl Algebra {
    pub fn new(product: MultilinearMap) -> Result<Self> {
        if product.arity() != 2 {
            return Err(Error::WrongArity { expected: 2, found: product.arity() });
        }
        Ok(Algebra { product })
    }

    pub fn zero(dim: usize) -> Self {
        Algebra { product: MultilinearMap::zero(2, dim) }
    }

    /// From one-based `(i, j, k, Γ_ij^k)` entries; repeated positions add.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut m = MultilinearMap::zero(2, dim);
        for (pos, (i, j, k, v)) in entries.iter().enumerate() {
            check_index(dim, &[*i, *j, *k], || format!("entry[{pos}]"))?;
            let cur = m.get(&[i - 1, j - 1], k - 1).clone();
            m.set(&[i - 1, j - 1], k - 1, cur + v);
        }
        Ok(Algebra { product: m })
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn product(&self) -> &MultilinearMap {
        &self.product
    }

    /// `Γ_ij^k`, zero-based.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.product.get(&[i, j], k)
    }

    pub fn sparse(&self) -> SparseBilinear {
        SparseBilinear::new(&self.product)
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.product.apply(&[x, y])
    }
}

fn check_index(dim: usize, idx: &[usize], at: impl Fn() -> String) -> Result<()> {
    if idx.iter().all(|i| (1..=dim).contains(i)) {
        Ok(())
    } else {
        Err(Error::Shape(format!("{}: index out of range 1..={dim}", at())))
    }
}

/// A commutative product and a bracket on the same space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoissonPair {
    bullet: MultilinearMap,
    bracket: MultilinearMap,
}

impl PoissonPair {
    pub fn new(bullet: MultilinearMap, bracket: MultilinearMap) -> Result<Self> {
        for m in [&bullet, &bracket] {
            if m.arity() != 2 {
                return Err(Error::WrongArity { expected: 2, found: m.arity() });
            }
        }
        check_dim(bullet.dim(), bracket.dim())?;
        if !is_symmetric_bilinear(&bullet) {
            return Err(Error::Shape("commutative product is not symmetric".into()));
        }
        if !is_skew_bilinear(&bracket) {
            return Err(Error::Shape("bracket is not skew-symmetric".into()));
        }
        Ok(PoissonPair { bullet, bracket })
    }

    pub fn zero(dim: usize) -> Self {
        PoissonPair { bullet: MultilinearMap::zero(2, dim), bracket: MultilinearMap::zero(2, dim) }
    }

    /// From one-based entries. An entry for `(i, j)` fills in its partner
    /// `(j, i)` (symmetrically for the product, with a sign for the
    /// bracket); an explicit partner must agree.
    pub fn from_entries(
        dim: usize,
        bullet: &[(usize, usize, usize, Rational)],
        bracket: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let b = complete(dim, bullet, false, "bullet")?;
        let k = complete(dim, bracket, true, "bracket")?;
        Ok(PoissonPair { bullet: b, bracket: k })
    }

    pub fn dim(&self) -> usize {
        self.bullet.dim()
    }

    pub fn bullet(&self) -> &MultilinearMap {
        &self.bullet
    }

    pub fn bracket(&self) -> &MultilinearMap {
        &self.bracket
    }
}

fn complete(
    dim: usize,
    entries: &[(usize, usize, usize, Rational)],
    skew: bool,
    field: &str,
) -> Result<MultilinearMap> {
    // explicit[(i, j, k)] = value as written
    let mut explicit = std::collections::BTreeMap::new();
    for (pos, (i, j, k, v)) in entries.iter().enumerate() {
        check_index(dim, &[*i, *j, *k], || format!("{field}[{pos}]"))?;
        let slot = explicit.entry((*i, *j, *k)).or_insert_with(Rational::zero);
        *slot += v;
    }
    let mut m = MultilinearMap::zero(2, dim);
    for (&(i, j, k), v) in &explicit {
        let partner = if skew { -v } else { v.clone() };
        if i == j && skew && !v.is_zero() {
            return Err(Error::Shape(format!("{field}: bracket of e{i} with itself must vanish")));
        }
        if let Some(w) = explicit.get(&(j, i, k)) {
            if *w != partner {
                return Err(Error::Shape(format!("{field}: entries ({i},{j},{k}) and ({j},{i},{k}) conflict")));
            }
        }
        m.set(&[i - 1, j - 1], k - 1, v.clone());
        m.set(&[j - 1, i - 1], k - 1, partner);
    }
    Ok(m)
}

/// `xy = x•y + {x,y}`.
pub fn combine(p: &PoissonPair) -> Algebra {
    Algebra { product: &p.bullet + &p.bracket }
}

/// `x•y = (xy + yx)/2`, `{x,y} = (xy − yx)/2`.
pub fn split(a: &Algebra) -> PoissonPair {
    let (bullet, bracket) = crate::multilinear::sym_skew_parts(&a.product).expect("algebra product is bilinear");
    PoissonPair { bullet, bracket }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Commutative,
    Associative,
    Jacobi,
    Leibniz,
    MarklRemm,
}

/// First failing basis tuple of one axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub axiom: Axiom,
    /// One-based basis indices.
    pub triple: Vec<usize>,
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub commutative: bool,
    pub associative: bool,
    pub jacobi: bool,
    pub leibniz: bool,
    pub markl_remm: bool,
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.commutative && self.associative && self.jacobi && self.leibniz && self.markl_remm
    }

    pub fn pair_axioms_hold(&self) -> bool {
        self.commutative && self.associative && self.jacobi && self.leibniz
    }
}

fn first_failure<F>(arity: usize, dim: usize, axiom: Axiom, mut f: F) -> Option<Witness>
where
    F: FnMut(&[usize]) -> Vector,
{
    BasisTuples::new(arity, dim).find_map(|t| {
        let r = f(&t);
        if r.iter().all(Rational::is_zero) {
            None
        } else {
            Some(Witness { axiom, triple: t.iter().map(|i| i + 1).collect(), residual: r })
        }
    })
}

fn sub(a: Vector, b: &[Rational]) -> Vector {
    a.into_iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: Vector, b: &[Rational]) -> Vector {
    a.into_iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Checks the pair axioms and, on the combined product, the Markl-Remm
/// identity.
pub fn verify(p: &PoissonPair) -> AxiomReport {
    let n = p.dim();
    let dot = SparseBilinear::new(&p.bullet);
    let br = SparseBilinear::new(&p.bracket);
    let unit = |i: usize| crate::multilinear::unit(n, i);

    let comm = first_failure(2, n, Axiom::Commutative, |t| {
        sub(p.bullet.value(&[t[0], t[1]]).to_vec(), p.bullet.value(&[t[1], t[0]]))
    });
    let assoc = first_failure(3, n, Axiom::Associative, |t| {
        let xy = dot.vec_basis(&unit(t[0]), t[1]);
        let left = dot.vec_basis(&xy, t[2]);
        let yz = dot.vec_basis(&unit(t[1]), t[2]);
        sub(left, &dot.basis_vec(t[0], &yz))
    });
    let jacobi = first_failure(3, n, Axiom::Jacobi, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let a = br.vec_basis(&unit_vec(br.row(x, y), n), z);
        let b = br.vec_basis(&unit_vec(br.row(y, z), n), x);
        let c = br.vec_basis(&unit_vec(br.row(z, x), n), y);
        add(add(a, &b), &c)
    });
    // {x•y, z} − x•{y, z} − {x, z}•y
    let leibniz = first_failure(3, n, Axiom::Leibniz, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let a = br.vec_basis(&unit_vec(dot.row(x, y), n), z);
        let b = dot.basis_vec(x, &unit_vec(br.row(y, z), n));
        let c = dot.vec_basis(&unit_vec(br.row(x, z), n), y);
        sub(sub(a, &b), &c)
    });
    let residual = markl_remm_residual(&combine(p));
    let mr = first_failure(3, n, Axiom::MarklRemm, |t| residual.value(t).to_vec());

    let mut report = AxiomReport {
        commutative: comm.is_none(),
        associative: assoc.is_none(),
        jacobi: jacobi.is_none(),
        leibniz: leibniz.is_none(),
        markl_remm: mr.is_none(),
        witnesses: Vec::new(),
    };
    report.witnesses = [comm, assoc, jacobi, leibniz, mr].into_iter().flatten().collect();
    report
}

pub fn verify_algebra(a: &Algebra) -> AxiomReport {
    verify(&split(a))
}

fn unit_vec(sparse: &[(usize, Rational)], n: usize) -> Vector {
    let mut v = vec![Rational::zero(); n];
    for (s, x) in sparse {
        v[*s] = x.clone();
    }
    v
}

/// `(xz)y + (yz)x − (yx)z − (zx)y − 3A(x,y,z)` on basis triples, computed
/// from the structure constants. Zero exactly when the product is Poisson.
pub fn markl_remm_residual(a: &Algebra) -> MultilinearMap {
    let n = a.dim();
    let g = |i: usize, j: usize, k: usize| a.gamma(i, j, k);
    MultilinearMap::from_fn(3, n, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        (0..n)
            .map(|s| {
                let mut acc = Rational::zero();
                for l in 0..n {
                    // 3(xy)z − 3x(yz) − (xz)y − (yz)x + (yx)z + (zx)y, negated
                    acc += Rational::from_integer(3) * g(i, j, l) * g(l, k, s);
                    acc -= Rational::from_integer(3) * g(i, l, s) * g(j, k, l);
                    acc -= g(i, k, l) * g(l, j, s);
                    acc -= g(j, k, l) * g(l, i, s);
                    acc += g(j, i, l) * g(l, k, s);
                    acc += g(k, i, l) * g(l, j, s);
                }
                -acc
            })
            .collect()
    })
}

/// `A(x, y, z) = (xy)z − x(yz)`.
pub fn associator(a: &Algebra, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vector> {
    let n = a.dim();
    for v in [x, y, z] {
        if v.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: v.len() });
        }
    }
    let m = a.sparse();
    let left = m.vec_vec(&m.vec_vec(x, y), z);
    let right = m.vec_vec(x, &m.vec_vec(y, z));
    Ok(sub(left, &right))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Side {
    /// `X·Y = 0` and `Y·X = 0` for all `Y`.
    #[default]
    TwoSided,
    /// `X·Y = 0` for all `Y` only.
    Left,
}

/// `{X : X·Y = Y·X = 0 for all Y}`.
pub fn annihilator(a: &Algebra) -> Subspace {
    annihilator_with(a, Side::TwoSided)
}

pub fn annihilator_with(a: &Algebra, side: Side) -> Subspace {
    let n = a.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for s in 0..n {
            rows.push((0..n).map(|i| a.gamma(i, j, s).clone()).collect::<Vector>());
            if side == Side::TwoSided {
                rows.push((0..n).map(|i| a.gamma(j, i, s).clone()).collect());
            }
        }
    }
    let m = Matrix::from_row_vectors(n, &rows).expect("rows have length n");
    kernel_basis(&m)
}

/// For an idempotent `e` of the commutative product, whether `e` is central
/// for the bracket.
pub fn idempotent_central_check(p: &PoissonPair, e: &[Rational]) -> Result<bool> {
    let n = p.dim();
    if e.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: e.len() });
    }
    if p.bullet.apply(&[e, e])? != e {
        return Err(Error::NotIdempotent);
    }
    let br = SparseBilinear::new(&p.bracket);
    Ok((0..n).all(|j| br.vec_basis(e, j).iter().all(Rational::is_zero)))
}

// JSON wire forms.

#[derive(Serialize, Deserialize)]
struct ConstEntry {
    i: usize,
    j: usize,
    k: usize,
    val: Rational,
}

fn to_entries(m: &MultilinearMap) -> Vec<ConstEntry> {
    let mut out = Vec::new();
    for t in BasisTuples::new(2, m.dim()) {
        for (k, v) in m.value(&t).iter().enumerate() {
            if !v.is_zero() {
                out.push(ConstEntry { i: t[0] + 1, j: t[1] + 1, k: k + 1, val: v.clone() });
            }
        }
    }
    out
}

fn from_entries(e: Vec<ConstEntry>) -> Vec<(usize, usize, usize, Rational)> {
    e.into_iter().map(|c| (c.i, c.j, c.k, c.val)).collect()
}

#[derive(Serialize, Deserialize)]
struct AlgebraWire {
    dim: usize,
    product: Vec<ConstEntry>,
}

#[derive(Serialize, Deserialize)]
struct PairWire {
    dim: usize,
    #[serde(default)]
    bullet: Vec<ConstEntry>,
    #[serde(default)]
    bracket: Vec<ConstEntry>,
}

impl Serialize for Algebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraWire { dim: self.dim(), product: to_entries(&self.product) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Algebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = AlgebraWire::deserialize(d)?;
        let entries = from_entries(w.product);
        Algebra::from_entries(w.dim, &entries)
            .map_err(|e| serde::de::Error::custom(e.to_string().replace("entry[", "product[")))
    }
}

impl Serialize for PoissonPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PairWire { dim: self.dim(), bullet: to_entries(&self.bullet), bracket: to_entries(&self.bracket) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PoissonPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = PairWire::deserialize(d)?;
        PoissonPair::from_entries(w.dim, &from_entries(w.bullet), &from_entries(w.bracket))
            .map_err(serde::de::Error::custom)
    }
}
