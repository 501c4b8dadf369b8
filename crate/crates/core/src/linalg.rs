//! Dense exact linear algebra over the rationals.
//!
//! Everything here is Gauss-Jordan elimination. Cochain spaces stay below a
//! few hundred coordinates, so dense row-major storage is all we need.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Vector = Vec<Rational>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from integer rows; panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            entries.extend(r.as_ref().iter().map(|&x| Rational::from_integer(x)));
        }
        Matrix { rows: rows.len(), cols, entries }
    }

    /// Stacks vectors as the rows of a matrix with `cols` columns.
    pub fn from_row_vectors(cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: r.len() });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, entries })
    }

    /// Uses vectors as the columns of a matrix with `rows` rows.
    pub fn from_column_vectors(rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::LengthMismatch { expected: rows, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn mul_vector(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Appends the rows of `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { left: self.cols, right: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Gauss-Jordan elimination restricted to the first `limit` columns.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.entries[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.entries.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.entries[r * cols + c].recip().expect("nonzero pivot");
            for j in c..cols {
                let x = &self.entries[r * cols + j];
                if !x.is_zero() {
                    self.entries[r * cols + j] = x * &inv;
                }
            }
            let pivot_row: Vec<Rational> = self.entries[r * cols..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.entries[i * cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                for (j, p) in pivot_row.iter().enumerate().skip(c) {
                    if !p.is_zero() {
                        self.entries[i * cols + j] -= &factor * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `Q^ambient_dim`.
///
/// The basis is always kept as the nonzero rows of the reduced row echelon
/// form of any spanning set, so two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::span(ambient_dim, &Matrix::identity(ambient_dim).row_vectors())
            .expect("identity rows have the ambient length")
    }

    /// Canonical subspace spanned by `vectors` (which may be dependent).
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        let m = Matrix::from_row_vectors(ambient_dim, vectors)?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::LengthMismatch { expected: self.ambient_dim, found: v.len() });
        }
        if v.iter().all(Rational::is_zero) {
            return Ok(true);
        }
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        Ok(Subspace::span(self.ambient_dim, &vs)?.dim() == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: other.ambient_dim });
        }
        let mut vs = other.basis.clone();
        vs.extend(self.basis.iter().cloned());
        Ok(Subspace::span(self.ambient_dim, &vs)?.dim() == other.dim())
    }

    /// Linear equations cutting out this subspace: rows `w` with `w . v = 0`.
    pub fn equations(&self) -> Matrix {
        let m = Matrix::from_row_vectors(self.ambient_dim, &self.basis).expect("basis vectors have the ambient length");
        let ann = kernel_basis(&m);
        Matrix::from_row_vectors(self.ambient_dim, &ann.basis).expect("kernel vectors")
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: other.ambient_dim });
        }
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &vs)
    }
}

impl Matrix {
    fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Exact kernel `{v : m v = 0}` in canonical form.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (r, pivots) = m.rref();
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vector> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, f)];
            }
            v
        })
        .collect();
    Subspace::span(cols, &vectors).expect("kernel vectors have length cols")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vector,
    pub kernel: Subspace,
}

/// Solves `m x = rhs`. Free variables of the particular solution are zero.
pub fn solve_affine(m: &Matrix, rhs: &[Rational]) -> Result<AffineSolution> {
    if rhs.len() != m.rows() {
        return Err(Error::LengthMismatch { expected: m.rows(), found: rhs.len() });
    }
    let cols = m.cols();
    let mut aug = Matrix::zeros(m.rows(), cols + 1);
    for i in 0..m.rows() {
        for j in 0..cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, cols)] = rhs[i].clone();
    }
    let pivots = aug.rref_in_place(cols);
    for i in pivots.len()..m.rows() {
        if !aug[(i, cols)].is_zero() {
            return Err(Error::Inconsistent);
        }
    }
    let mut particular = vec![Rational::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = aug[(row, cols)].clone();
    }
    Ok(AffineSolution { particular, kernel: kernel_basis(m) })
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch { left: a.ambient_dim, right: b.ambient_dim });
    }
    let eqs = a.equations().vstack(&b.equations())?;
    if eqs.rows() == 0 {
        return Ok(Subspace::full(a.ambient_dim));
    }
    Ok(kernel_basis(&eqs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::z;
    use proptest::prelude::*;

    fn vecz(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| z(x)).collect()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(kernel_basis(&Matrix::identity(3)).dim(), 0);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = kernel_basis(&Matrix::zeros(2, 5));
        assert_eq!(k.dim(), 5);
        assert_eq!(k, Subspace::full(5));
    }

    #[test]
    fn kernel_rank_one() {
        let k = kernel_basis(&Matrix::from_rows(&[[1, 1], [2, 2]]));
        assert_eq!(k.basis(), &[vecz(&[1, -1])]);
    }

    #[test]
    fn affine_identity() {
        let s = solve_affine(&Matrix::identity(2), &vecz(&[3, -1])).unwrap();
        assert_eq!(s.particular, vecz(&[3, -1]));
        assert_eq!(s.kernel.dim(), 0);
    }

    #[test]
    fn affine_inconsistent() {
        let m = Matrix::from_rows(&[[1, 1], [1, 1]]);
        assert_eq!(solve_affine(&m, &vecz(&[1, 2])), Err(Error::Inconsistent));
    }

    #[test]
    fn affine_with_kernel() {
        let m = Matrix::from_rows(&[[1, 1], [1, 1]]);
        let s = solve_affine(&m, &vecz(&[2, 2])).unwrap();
        assert_eq!(s.particular, vecz(&[2, 0]));
        assert_eq!(s.kernel.basis(), &[vecz(&[1, -1])]);
    }

    #[test]
    fn affine_rejects_bad_rhs() {
        let m = Matrix::identity(2);
        assert!(matches!(solve_affine(&m, &vecz(&[1])), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn intersections() {
        let full = Subspace::full(2);
        assert_eq!(intersect(&full, &full).unwrap(), full);
        let x = Subspace::span(2, &[vecz(&[1, 0])]).unwrap();
        let y = Subspace::span(2, &[vecz(&[0, 1])]).unwrap();
        assert_eq!(intersect(&x, &y).unwrap().dim(), 0);
        let diag = Subspace::span(2, &[vecz(&[1, 1])]).unwrap();
        let both = Subspace::span(2, &[vecz(&[1, 0]), vecz(&[0, 1])]).unwrap();
        assert_eq!(intersect(&both, &diag).unwrap(), diag);
        let z3 = Subspace::zero(3);
        assert!(matches!(intersect(&x, &z3), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn contains_and_inclusion() {
        let plane = Subspace::span(3, &[vecz(&[1, 0, 1]), vecz(&[0, 1, 1])]).unwrap();
        assert!(plane.contains(&vecz(&[2, 3, 5])).unwrap());
        assert!(!plane.contains(&vecz(&[0, 0, 1])).unwrap());
        let line = Subspace::span(3, &[vecz(&[1, 1, 2])]).unwrap();
        assert!(line.is_subspace_of(&plane).unwrap());
        assert!(!plane.is_subspace_of(&line).unwrap());
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |xs| Matrix::from_entries(r, c, xs.into_iter().map(z).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix(8)) {
            let k = kernel_basis(&m);
            for v in k.basis() {
                prop_assert!(m.mul_vector(v).unwrap().iter().all(Rational::is_zero));
            }
            prop_assert_eq!(m.rank() + k.dim(), m.cols());
        }

        #[test]
        fn particular_solution_solves(m in small_matrix(7), seed in proptest::collection::vec(-4i64..=4, 7)) {
            // consistent right-hand side by construction
            let x: Vector = seed.iter().take(m.cols()).map(|&v| z(v)).chain(std::iter::repeat(z(0))).take(m.cols()).collect();
            let rhs = m.mul_vector(&x).unwrap();
            let sol = solve_affine(&m, &rhs).unwrap();
            prop_assert_eq!(m.mul_vector(&sol.particular).unwrap(), rhs);
        }
    }
}
