//! Multilinear maps on `Q^n` and the action of permutations on their
//! arguments.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * A permutation `σ` acts on a k-linear map by permuting arguments,
//!   `act(σ, T)(x_1, …, x_k) = T(x_σ(1), …, x_σ(k))`.
//! * The group-algebra product `σ * τ` is "σ first, then τ":
//!   `(σ * τ)(i) = τ(σ(i))`. With this choice
//!   `act(v, act(w, T)) = act(w * v, T)`.
//! * `c` is the cycle `1 → 2 → 3 → 1`, so `act(c, T)(x, y, z) = T(y, z, x)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::linalg::Vector;
use crate::rational::Rational;

/// Largest arity accepted by the public constructors.
pub const MAX_ARITY: usize = 4;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // zero-based images: images[i] = σ(i + 1) - 1
    images: Vec<usize>,
}

impl Permutation {
    /// From one-line notation `(σ(1), …, σ(k))`, one-based.
    pub fn new(one_based: &[usize]) -> Result<Self> {
        let k = one_based.len();
        let mut seen = vec![false; k];
        let mut images = Vec::with_capacity(k);
        for &x in one_based {
            if x == 0 || x > k || seen[x - 1] {
                return Err(Error::Shape(format!("{one_based:?} is not a permutation of 1..{k}")));
            }
            seen[x - 1] = true;
            images.push(x - 1);
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation { images: (0..k).collect() }
    }

    /// Transposition of the one-based positions `i` and `j` in `Σ_k`.
    pub fn transposition(k: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= k && j <= k && i != j);
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of a zero-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn sign(&self) -> i64 {
        let mut inversions = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self` first, then `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.arity(), other.arity());
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// All of `Σ_k`, lexicographic in one-line notation.
    pub fn all(k: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation { images: prefix.clone() });
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; k], &mut out);
        out
    }

    /// Permuted argument list: `(args[σ(1)], …, args[σ(k)])`.
    fn permute_args(&self, args: &[usize]) -> Vec<usize> {
        self.images.iter().map(|&i| args[i]).collect()
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ{:?}", self.images_one_based())
    }
}

/// The transpositions and 3-cycles of `Σ_3` under the names used in the
/// Markl-Remm literature.
pub mod sigma3 {
    use super::Permutation;

    pub fn id() -> Permutation {
        Permutation::identity(3)
    }
    pub fn t12() -> Permutation {
        Permutation::transposition(3, 1, 2)
    }
    pub fn t13() -> Permutation {
        Permutation::transposition(3, 1, 3)
    }
    pub fn t23() -> Permutation {
        Permutation::transposition(3, 2, 3)
    }
    /// 1 → 2 → 3 → 1
    pub fn c() -> Permutation {
        Permutation::new(&[2, 3, 1]).unwrap()
    }
    pub fn c2() -> Permutation {
        Permutation::new(&[3, 1, 2]).unwrap()
    }
}

/// A rational combination of permutations of the same arity.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    arity: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(arity: usize) -> Self {
        GroupAlgebraElement { arity, terms: BTreeMap::new() }
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let arity = p.arity();
        let mut terms = BTreeMap::new();
        terms.insert(p, Rational::one());
        GroupAlgebraElement { arity, terms }
    }

    pub fn identity(arity: usize) -> Self {
        Self::from_permutation(Permutation::identity(arity))
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Rational)>,
    {
        let mut out = GroupAlgebraElement::zero(arity);
        for (p, c) in terms {
            if p.arity() != arity {
                return Err(Error::ArityMismatch { left: arity, right: p.arity() });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    /// Integer-coefficient shorthand for the constants below.
    fn small(arity: usize, terms: &[(Permutation, i64)]) -> Self {
        Self::from_terms(arity, terms.iter().map(|(p, c)| (p.clone(), Rational::from_integer(*c))))
            .expect("constant terms share arity")
    }

    fn add_term(&mut self, p: Permutation, c: Rational) {
        let entry = self.terms.entry(p).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).expect("just inserted");
            self.terms.remove(&key);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn total_coefficient(&self) -> Rational {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = GroupAlgebraElement::zero(self.arity);
        if k.is_zero() {
            return out;
        }
        for (p, c) in &self.terms {
            out.terms.insert(p.clone(), c * k);
        }
        out
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.arity, rhs.arity, "group algebra arity");
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self + &rhs.scale(&Rational::from_integer(-1))
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.arity, rhs.arity, "group algebra arity");
        let mut out = GroupAlgebraElement::zero(self.arity);
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                out.add_term(p * q, a * b);
            }
        }
        out
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("{c}·{p:?}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The fixed group-algebra elements the operators are built from.
#[derive(Clone, Debug)]
pub struct Constants {
    /// `3Id − τ23 + τ12 − c + c²`, the Markl-Remm element.
    pub v_p: GroupAlgebraElement,
    /// `Id − τ12 − τ13 − τ23 + c + c²`.
    pub v_l: GroupAlgebraElement,
    /// `V_k = Σ ε(σ) σ` for k = 1..=4, at index k - 1.
    pub alternators: Vec<GroupAlgebraElement>,
}

impl Constants {
    pub fn alternator(&self, k: usize) -> &GroupAlgebraElement {
        &self.alternators[k - 1]
    }
}

pub fn alternator(k: usize) -> GroupAlgebraElement {
    GroupAlgebraElement::from_terms(
        k,
        Permutation::all(k).into_iter().map(|p| {
            let s = p.sign();
            (p, Rational::from_integer(s))
        }),
    )
    .expect("same arity")
}

pub fn constants() -> Constants {
    use sigma3::*;
    Constants {
        v_p: GroupAlgebraElement::small(3, &[(id(), 3), (t23(), -1), (t12(), 1), (c(), -1), (c2(), 1)]),
        v_l: GroupAlgebraElement::small(3, &[(id(), 1), (t12(), -1), (t13(), -1), (t23(), -1), (c(), 1), (c2(), 1)]),
        alternators: (1..=MAX_ARITY).map(alternator).collect(),
    }
}

/// Integer combination of `Σ_3` elements; used to transcribe operator
/// formulas.
pub fn s3(terms: &[(Permutation, i64)]) -> GroupAlgebraElement {
    GroupAlgebraElement::small(3, terms)
}

/// A k-linear map `(Q^n)^k → Q^n` given by its values on basis tuples.
///
/// Coefficient layout: the value on `(e_{i1}, …, e_{ik})` has its `s`-th
/// coordinate at `((i1·n + i2)·n + … + ik)·n + s` (all zero-based). This is
/// also the coordinate system of every cochain [`Subspace`](crate::Subspace).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultilinearMap {
    arity: usize,
    dim: usize,
    coeffs: Vec<Rational>,
}

impl MultilinearMap {
    pub fn zero(arity: usize, dim: usize) -> Self {
        assert!((1..=MAX_ARITY).contains(&arity), "arity {arity} outside 1..={MAX_ARITY}");
        MultilinearMap { arity, dim, coeffs: vec![Rational::zero(); dim.pow(arity as u32 + 1)] }
    }

    pub fn new(arity: usize, dim: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if !(1..=MAX_ARITY).contains(&arity) {
            return Err(Error::UnsupportedArity(arity));
        }
        let expected = dim.pow(arity as u32 + 1);
        if coeffs.len() != expected {
            return Err(Error::LengthMismatch { expected, found: coeffs.len() });
        }
        Ok(MultilinearMap { arity, dim, coeffs })
    }

    /// Builds a map from its value on every basis tuple.
    pub fn from_fn<F>(arity: usize, dim: usize, mut f: F) -> Self
    where
        F: FnMut(&[usize]) -> Vector,
    {
        let mut out = MultilinearMap::zero(arity, dim);
        for (t, args) in BasisTuples::new(arity, dim).enumerate() {
            let v = f(&args);
            debug_assert_eq!(v.len(), dim);
            for (s, x) in v.into_iter().enumerate() {
                out.coeffs[t * dim + s] = x;
            }
        }
        out
    }

    pub fn identity(dim: usize) -> Self {
        MultilinearMap::from_fn(1, dim, |a| unit(dim, a[0]))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coordinates(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn num_tuples(&self) -> usize {
        self.dim.pow(self.arity as u32)
    }

    fn offset(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        args.iter().fold(0, |acc, &i| acc * self.dim + i) * self.dim
    }

    /// Value on a tuple of basis vectors (zero-based indices).
    pub fn value(&self, args: &[usize]) -> &[Rational] {
        let o = self.offset(args);
        &self.coeffs[o..o + self.dim]
    }

    pub fn get(&self, args: &[usize], s: usize) -> &Rational {
        &self.coeffs[self.offset(args) + s]
    }

    pub fn set(&mut self, args: &[usize], s: usize, v: Rational) {
        let o = self.offset(args);
        self.coeffs[o + s] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Evaluates on arbitrary vectors by multilinear expansion.
    pub fn apply(&self, args: &[&[Rational]]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::WrongArity { expected: self.arity, found: args.len() });
        }
        for a in args {
            check_dim(a.len(), self.dim)?;
        }
        let mut out = vec![Rational::zero(); self.dim];
        for idx in BasisTuples::new(self.arity, self.dim) {
            let mut w = Rational::one();
            for (a, &i) in args.iter().zip(&idx) {
                if a[i].is_zero() {
                    w = Rational::zero();
                    break;
                }
                w *= &a[i];
            }
            if w.is_zero() {
                continue;
            }
            axpy(&mut out, &w, self.value(&idx));
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        MultilinearMap { arity: self.arity, dim: self.dim, coeffs: self.coeffs.iter().map(|x| x * k).collect() }
    }

    /// `φ̃(x, y) = φ(y, x)` for bilinear maps.
    pub fn swapped(&self) -> Result<Self> {
        if self.arity != 2 {
            return Err(Error::WrongArity { expected: 2, found: self.arity });
        }
        Ok(self.permuted(&sigma_swap()))
    }

    /// `act(σ, self)` for a single permutation.
    pub fn permuted(&self, p: &Permutation) -> Self {
        assert_eq!(p.arity(), self.arity);
        MultilinearMap::from_fn(self.arity, self.dim, |args| self.value(&p.permute_args(args)).to_vec())
    }

    /// Standard basis of the cochain space, in coordinate order.
    pub fn standard_basis(arity: usize, dim: usize) -> Vec<MultilinearMap> {
        let total = dim.pow(arity as u32 + 1);
        (0..total)
            .map(|t| {
                let mut m = MultilinearMap::zero(arity, dim);
                m.coeffs[t] = Rational::one();
                m
            })
            .collect()
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: other.arity });
        }
        check_dim(self.dim, other.dim)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self - other)
    }
}

fn sigma_swap() -> Permutation {
    Permutation::transposition(2, 1, 2)
}

impl Add for &MultilinearMap {
    type Output = MultilinearMap;
    fn add(self, rhs: &MultilinearMap) -> MultilinearMap {
        assert!(self.arity == rhs.arity && self.dim == rhs.dim, "shape mismatch");
        MultilinearMap {
            arity: self.arity,
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &MultilinearMap {
    type Output = MultilinearMap;
    fn sub(self, rhs: &MultilinearMap) -> MultilinearMap {
        assert!(self.arity == rhs.arity && self.dim == rhs.dim, "shape mismatch");
        MultilinearMap {
            arity: self.arity,
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &MultilinearMap {
    type Output = MultilinearMap;
    fn neg(self) -> MultilinearMap {
        self.scale(&Rational::from_integer(-1))
    }
}

impl fmt::Debug for MultilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultilinearMap(arity={}, dim={}) {{", self.arity, self.dim)?;
        for idx in BasisTuples::new(self.arity, self.dim) {
            for (s, x) in self.value(&idx).iter().enumerate() {
                if !x.is_zero() {
                    let one: Vec<usize> = idx.iter().map(|i| i + 1).collect();
                    write!(f, " {one:?}->{}:{x}", s + 1)?;
                }
            }
        }
        write!(f, " }}")
    }
}

/// Iterates over all k-tuples of basis indices in coordinate order.
pub struct BasisTuples {
    dim: usize,
    next: Option<Vec<usize>>,
}

impl BasisTuples {
    pub fn new(arity: usize, dim: usize) -> Self {
        BasisTuples { dim, next: if dim == 0 { None } else { Some(vec![0; arity]) } }
    }
}

impl Iterator for BasisTuples {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.dim {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(cur)
    }
}

pub fn unit(dim: usize, i: usize) -> Vector {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

pub(crate) fn axpy(acc: &mut [Rational], k: &Rational, x: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += k * b;
        }
    }
}

/// Nonzero output coordinates of a bilinear map on each pair of basis
/// vectors. Products in operator formulas are evaluated through this view.
#[derive(Clone, Debug)]
pub struct SparseBilinear {
    dim: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl SparseBilinear {
    pub fn new(m: &MultilinearMap) -> Self {
        assert_eq!(m.arity, 2, "sparse view needs a bilinear map");
        let n = m.dim;
        let rows = (0..n * n)
            .map(|t| {
                m.coeffs[t * n..(t + 1) * n]
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(s, x)| (s, x.clone()))
                    .collect()
            })
            .collect();
        SparseBilinear { dim: n, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// `e_i · e_j` as a sparse list.
    pub fn row(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.rows[i * self.dim + j]
    }

    /// `v · e_j`.
    pub fn vec_basis(&self, v: &[Rational], j: usize) -> Vector {
        let mut out = vec![Rational::zero(); self.dim];
        for (l, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (s, x) in self.row(l, j) {
                out[*s] += c * x;
            }
        }
        out
    }

    /// `e_i · v`.
    pub fn basis_vec(&self, i: usize, v: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim];
        for (l, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (s, x) in self.row(i, l) {
                out[*s] += c * x;
            }
        }
        out
    }

    /// `u · v` for arbitrary vectors.
    pub fn vec_vec(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (s, x) in self.row(i, j) {
                    out[*s] += &ab * x;
                }
            }
        }
        out
    }
}

/// `ψ(args)` with the basis vector in `slot` replaced by the product
/// `e_a · e_b`, expanded linearly.
pub fn insert_product(
    psi: &MultilinearMap,
    args: &[usize],
    slot: usize,
    prod: &SparseBilinear,
    a: usize,
    b: usize,
) -> Vector {
    let mut out = vec![Rational::zero(); psi.dim];
    let mut idx = args.to_vec();
    for (l, c) in prod.row(a, b) {
        idx[slot] = *l;
        axpy(&mut out, c, psi.value(&idx));
    }
    out
}

/// `T ∘ φ_v`: `act(σ, T)(x_1, …, x_k) = T(x_σ(1), …, x_σ(k))`, extended
/// linearly in `v`.
pub fn act(v: &GroupAlgebraElement, t: &MultilinearMap) -> Result<MultilinearMap> {
    if v.arity() != t.arity() {
        return Err(Error::ArityMismatch { left: v.arity(), right: t.arity() });
    }
    let mut out = MultilinearMap::zero(t.arity, t.dim);
    for (p, c) in v.terms() {
        let moved = t.permuted(p);
        for (a, b) in out.coeffs.iter_mut().zip(&moved.coeffs) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }
    Ok(out)
}

/// `comp_1`: `(μ ∘₁ ν)(x, y, z) = μ(ν(x, y), z)`;
/// `comp_2`: `(μ ∘₂ ν)(x, y, z) = μ(x, ν(y, z))`.
pub fn comp(i: usize, mu: &MultilinearMap, nu: &MultilinearMap) -> Result<MultilinearMap> {
    for m in [mu, nu] {
        if m.arity != 2 {
            return Err(Error::WrongArity { expected: 2, found: m.arity });
        }
    }
    check_dim(mu.dim, nu.dim)?;
    let n = mu.dim;
    match i {
        1 => Ok(MultilinearMap::from_fn(3, n, |a| {
            let mut out = vec![Rational::zero(); n];
            for (l, c) in nu.value(&[a[0], a[1]]).iter().enumerate() {
                if !c.is_zero() {
                    axpy(&mut out, c, mu.value(&[l, a[2]]));
                }
            }
            out
        })),
        2 => Ok(MultilinearMap::from_fn(3, n, |a| {
            let mut out = vec![Rational::zero(); n];
            for (l, c) in nu.value(&[a[1], a[2]]).iter().enumerate() {
                if !c.is_zero() {
                    axpy(&mut out, c, mu.value(&[a[0], l]));
                }
            }
            out
        })),
        _ => Err(Error::Shape(format!("comp index must be 1 or 2, got {i}"))),
    }
}

/// Symmetric and skew parts `((φ + φ̃)/2, (φ − φ̃)/2)` of a bilinear map.
pub fn sym_skew_parts(phi: &MultilinearMap) -> Result<(MultilinearMap, MultilinearMap)> {
    let t = phi.swapped()?;
    let half = Rational::new(1, 2);
    Ok(((phi + &t).scale(&half), (phi - &t).scale(&half)))
}

/// `act(V_k, T) = 0`, the alternating-sum notion of symmetry.
pub fn is_v_symmetric(t: &MultilinearMap) -> Result<bool> {
    if t.arity > MAX_ARITY {
        return Err(Error::UnsupportedArity(t.arity));
    }
    Ok(act(&alternator(t.arity), t)?.is_zero())
}

/// Invariant under every transposition of arguments.
pub fn fully_symmetric(t: &MultilinearMap) -> bool {
    (1..t.arity).all(|i| t.permuted(&Permutation::transposition(t.arity, i, i + 1)) == *t)
}

pub fn is_symmetric_bilinear(phi: &MultilinearMap) -> bool {
    phi.arity == 2 && fully_symmetric(phi)
}

pub fn is_skew_bilinear(phi: &MultilinearMap) -> bool {
    phi.arity == 2 && phi.permuted(&sigma_swap()) == -phi
}

// JSON wire form: one-based indices, zero entries omitted.

#[derive(Serialize, Deserialize)]
struct MapEntry {
    #[serde(rename = "in")]
    input: Vec<usize>,
    out: usize,
    val: Rational,
}

#[derive(Serialize, Deserialize)]
struct MapWire {
    arity: usize,
    dim: usize,
    entries: Vec<MapEntry>,
}

impl Serialize for MultilinearMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut entries = Vec::new();
        for idx in BasisTuples::new(self.arity, self.dim) {
            for (s, x) in self.value(&idx).iter().enumerate() {
                if !x.is_zero() {
                    entries.push(MapEntry { input: idx.iter().map(|i| i + 1).collect(), out: s + 1, val: x.clone() });
                }
            }
        }
        MapWire { arity: self.arity, dim: self.dim, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultilinearMap {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = MapWire::deserialize(deserializer)?;
        if !(1..=MAX_ARITY).contains(&wire.arity) {
            return Err(D::Error::custom(Error::UnsupportedArity(wire.arity)));
        }
        let mut m = MultilinearMap::zero(wire.arity, wire.dim);
        for (pos, e) in wire.entries.into_iter().enumerate() {
            if e.input.len() != wire.arity {
                return Err(D::Error::custom(format!(
                    "entries[{pos}].in has {} indices, expected {}",
                    e.input.len(),
                    wire.arity
                )));
            }
            let in_range = |i: usize| (1..=wire.dim).contains(&i);
            if !e.input.iter().copied().all(in_range) || !in_range(e.out) {
                return Err(D::Error::custom(format!("entries[{pos}] index out of range 1..={}", wire.dim)));
            }
            let idx: Vec<usize> = e.input.iter().map(|i| i - 1).collect();
            let cur = m.get(&idx, e.out - 1).clone();
            m.set(&idx, e.out - 1, cur + e.val);
        }
        Ok(m)
    }
}
