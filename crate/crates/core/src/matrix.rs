//! Exact linear algebra over a coefficient ring: fraction-free Bareiss
//! determinants, adjugate inverses with entries in the fraction field, and
//! reduced row echelon computations for span membership, rank, and kernels.

use crate::error::{Error, Result};
use crate::ring::{Coefficient, FieldCoefficient, ToField};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coefficient> Mat<C> {
    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: (0..rows * cols).map(|_| C::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = C::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Mat<D> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Mat<C> {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Mat<C>) -> Mat<C> {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = C::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &C) -> Mat<C> {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn add(&self, other: &Mat<C>) -> Mat<C> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// Determinant by fraction-free Bareiss elimination: every intermediate
    /// division is exact in the ring.
    pub fn det_bareiss(&self) -> C {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let n = self.rows;
        if n == 0 {
            return C::one();
        }
        let mut m = self.clone();
        let mut prev = C::one();
        let mut sign = false;
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return C::zero();
                };
                for j in 0..n {
                    let a = m[(k, j)].clone();
                    let b = m[(p, j)].clone();
                    m[(k, j)] = b;
                    m[(p, j)] = a;
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m[(k, k)].clone() * m[(i, j)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = t
                        .exact_div(&prev)
                        .expect("Bareiss pivot divides exactly");
                }
                m[(i, k)] = C::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        if sign {
            -det
        } else {
            det
        }
    }

    /// Minor with row `i` and column `j` removed.
    fn minor(&self, i: usize, j: usize) -> Mat<C> {
        let mut rows = Vec::with_capacity(self.rows - 1);
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            let mut row = Vec::with_capacity(self.cols - 1);
            for c in 0..self.cols {
                if c == j {
                    continue;
                }
                row.push(self[(r, c)].clone());
            }
            rows.push(row);
        }
        Mat::from_rows(rows)
    }
}

impl<C: Coefficient + ToField> Mat<C> {
    pub fn to_field(&self) -> Mat<C::Field> {
        self.map(|c| c.to_field())
    }

    /// Inverse with entries cofactor/determinant in the fraction field.
    /// [`Error::SingularMatrix`] signals a determinant that vanishes
    /// identically, i.e. the nondegeneracy hypothesis fails.
    pub fn invert(&self) -> Result<Mat<C::Field>> {
        assert_eq!(self.rows, self.cols, "inverse of a square matrix");
        let n = self.rows;
        let det = self.det_bareiss();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let det = det.to_field();
        let mut out = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                // adj(M)[j][i] = (-1)^{i+j} det(minor(i, j))
                let mut c = self.minor(i, j).det_bareiss().to_field();
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                out[(j, i)] = c.exact_div(&det).expect("field division");
            }
        }
        Ok(out)
    }
}

impl<C> std::ops::Index<(usize, usize)> for Mat<C> {
    type Output = C;
    fn index(&self, (i, j): (usize, usize)) -> &C {
        &self.data[i * self.cols + j]
    }
}

impl<C> std::ops::IndexMut<(usize, usize)> for Mat<C> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: FieldCoefficient>(m: &mut Mat<F>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols() {
        if row == m.rows() {
            break;
        }
        let Some(p) = (row..m.rows()).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..m.cols() {
                let a = m[(row, j)].clone();
                let b = m[(p, j)].clone();
                m[(row, j)] = b;
                m[(p, j)] = a;
            }
        }
        let inv = m[(row, col)].inverse().expect("nonzero pivot");
        for j in 0..m.cols() {
            m[(row, j)] = m[(row, j)].clone() * inv.clone();
        }
        for i in 0..m.rows() {
            if i != row && !m[(i, col)].is_zero() {
                let f = m[(i, col)].clone();
                for j in 0..m.cols() {
                    let t = m[(row, j)].clone() * f.clone();
                    m[(i, j)] = m[(i, j)].clone() - t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: FieldCoefficient>(m: &Mat<F>) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// Outcome of expressing a vector in a spanning set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanResult<F> {
    InSpan(Vec<F>),
    NotInSpan,
}

/// Solve `sum_i c_i span[i] = v` exactly over the fraction field.
///
/// Errors with [`Error::RankDeficient`] when the spanning set is linearly
/// dependent over the field (a malformed subbundle specification).
pub fn solve_in_span<C: Coefficient + ToField>(
    v: &[C],
    span: &[Vec<C>],
) -> Result<SpanResult<C::Field>> {
    let len = v.len();
    if span.iter().any(|s| s.len() != len) {
        return Err(Error::Shape("span vectors of unequal length".into()));
    }
    let k = span.len();
    // Columns are the spanning vectors; the last column is v.
    let mut aug: Mat<C::Field> = Mat::zero(len, k + 1);
    for (j, s) in span.iter().enumerate() {
        for (i, c) in s.iter().enumerate() {
            aug[(i, j)] = c.to_field();
        }
    }
    for (i, c) in v.iter().enumerate() {
        aug[(i, k)] = c.to_field();
    }
    let pivots = rref(&mut aug);
    if pivots.iter().any(|&p| p == k) {
        return Ok(SpanResult::NotInSpan);
    }
    if pivots.len() < k {
        return Err(Error::RankDeficient);
    }
    let mut coeffs = vec![C::Field::zero(); k];
    for (row, &col) in pivots.iter().enumerate() {
        coeffs[col] = aug[(row, k)].clone();
    }
    Ok(SpanResult::InSpan(coeffs))
}

/// Basis of the right kernel `{ x : m x = 0 }`, one vector per free column,
/// in the canonical free-variable convention.
pub fn kernel_basis<F: FieldCoefficient>(m: &Mat<F>) -> Vec<Vec<F>> {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let n = m.cols();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut x = vec![F::zero(); n];
        x[free] = F::one();
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = -r[(row, free)].clone();
        }
        basis.push(x);
    }
    basis
}

/// Canonical basis of the row span: nonzero rows of the reduced row echelon
/// form. Two lists of vectors span the same subspace iff these agree.
pub fn canonical_span<F: FieldCoefficient>(vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Mat::from_rows(vectors.to_vec());
    let pivots = rref(&mut m);
    (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::RationalFunction;
    use crate::scalar::Scalar;

    fn x() -> Scalar {
        Scalar::coord(0)
    }

    #[test]
    fn identity_inverts_to_identity() {
        let m: Mat<Scalar> = Mat::identity(3);
        let inv = m.invert().unwrap();
        assert_eq!(inv, Mat::<RationalFunction>::identity(3));
    }

    #[test]
    fn skew_with_polynomial_entry() {
        // [[0, 1+x], [-(1+x), 0]] inverts to [[0, -1/(1+x)], [1/(1+x), 0]]
        let a = &Scalar::one() + &x();
        let m = Mat::from_rows(vec![
            vec![Scalar::zero(), a.clone()],
            vec![-&a, Scalar::zero()],
        ]);
        let inv = m.invert().unwrap();
        let r = RationalFunction::new(Scalar::one(), a.clone());
        assert!(inv[(0, 0)].is_zero());
        assert_eq!(inv[(0, 1)], -&r);
        assert_eq!(inv[(1, 0)], r);
        // and M * M^{-1} = I over the fraction field
        assert_eq!(m.to_field().mul(&inv), Mat::identity(2));
    }

    #[test]
    fn singular_matrix_is_detected() {
        let m = Mat::from_rows(vec![vec![x(), x()], vec![Scalar::one(), Scalar::one()]]);
        assert!(matches!(m.invert(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn span_membership() {
        let s1 = vec![Scalar::one(), Scalar::zero()];
        let s2 = vec![Scalar::zero(), Scalar::one()];
        // v = x s1 + s2
        let v = vec![x(), Scalar::one()];
        match solve_in_span(&v, &[s1.clone(), s2.clone()]).unwrap() {
            SpanResult::InSpan(c) => {
                assert_eq!(c[0], RationalFunction::from_scalar(x()));
                assert!(c[1].is_one());
            }
            SpanResult::NotInSpan => panic!("should be in span"),
        }
        // v = s1 alone
        match solve_in_span(&s1, &[s1.clone()]).unwrap() {
            SpanResult::InSpan(c) => assert!(c[0].is_one()),
            SpanResult::NotInSpan => panic!(),
        }
    }

    #[test]
    fn rank4_escape_is_rejected() {
        // span {dx2, dx4 - x1 dx3} does not contain the dx3 direction
        let s1 = vec![Scalar::zero(), Scalar::one(), Scalar::zero(), Scalar::zero()];
        let s2 = vec![Scalar::zero(), Scalar::zero(), -&x(), Scalar::one()];
        let v = vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::zero()];
        assert_eq!(
            solve_in_span(&v, &[s1, s2]).unwrap(),
            SpanResult::NotInSpan
        );
    }

    #[test]
    fn dependent_span_is_rank_deficient() {
        let s1 = vec![x(), Scalar::zero()];
        let s2 = vec![&x() * &x(), Scalar::zero()];
        let v = vec![Scalar::one(), Scalar::zero()];
        assert!(matches!(
            solve_in_span(&v, &[s1, s2]),
            Err(Error::RankDeficient)
        ));
    }

    #[test]
    fn kernel_of_rank_one_map() {
        // kernel of (1  x) is spanned by (-x, 1)
        let m = Mat::from_rows(vec![vec![
            RationalFunction::from_scalar(Scalar::one()),
            RationalFunction::from_scalar(x()),
        ]]);
        let basis = kernel_basis(&m);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0][0], RationalFunction::from_scalar(-&x()));
        assert!(basis[0][1].is_one());
    }
}
