//! Dense exact linear algebra over the integers and rationals.
//!
//! Determinants use fraction-free (Bareiss) elimination, so every
//! intermediate entry is a minor of the input. Smith normal forms are
//! computed by unimodular row/column elimination with a minimal-absolute-value
//! pivot heuristic. Solves run over exact rationals. A 0x0 matrix is legal
//! and has determinant 1; empty products are 1 throughout.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Dense row-major matrix with arbitrary-precision integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Dense row-major matrix with exact rational entries (always reduced,
/// positive denominators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

/// Invariant factors d_1 | d_2 | ... of an integer matrix; nonnegative with
/// any zeros trailing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged row lengths".into()));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_fn(rows.len(), rows.first().map_or(0, |r| r.len()), |r, c| {
            BigInt::from(rows[r][c])
        })
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = IntMatrix::zero(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(IntMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += &self[(r, k)] * &other[(k, c)];
            }
            acc
        }))
    }

    /// Submatrix with the given rows and columns, in the listed order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        IntMatrix::from_fn(rows.len(), cols.len(), |r, c| {
            self[(rows[r], cols[c])].clone()
        })
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| BigRational::from(v.clone()))
                .collect(),
        }
    }

    /// Exact determinant by fraction-free elimination; det of 0x0 is 1.
    pub fn det(&self) -> Result<BigInt, Error> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev; // exact: Bareiss
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Smith normal form (invariant factors) of any-shape matrix.
    pub fn snf(&self) -> SnfResult {
        let k = self.rows.min(self.cols);
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut factors = Vec::with_capacity(k);
        let mut t = 0;
        while t < k {
            match pivot_position(&m, t) {
                None => break,
                Some((pr, pc)) => {
                    m.swap(t, pr);
                    for row in m.iter_mut() {
                        row.swap(t, pc);
                    }
                }
            }
            loop {
                // clear column t by division with remainder; a nonzero
                // remainder becomes the new (smaller) pivot
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if m[i][t].is_zero() {
                        continue;
                    }
                    let q = div_nearest(&m[i][t], &m[t][t]);
                    for j in t..self.cols {
                        let v = &m[i][j] - &q * &m[t][j];
                        m[i][j] = v;
                    }
                    if !m[i][t].is_zero() {
                        m.swap(t, i);
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // same for row t
                for j in t + 1..self.cols {
                    if m[t][j].is_zero() {
                        continue;
                    }
                    let q = div_nearest(&m[t][j], &m[t][t]);
                    for row in m.iter_mut().skip(t) {
                        let v = &row[j] - &q * &row[t];
                        row[j] = v;
                    }
                    if !m[t][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // ensure the pivot divides everything that remains
                let mut offender = None;
                'scan: for i in t + 1..self.rows {
                    for j in t + 1..self.cols {
                        if !(&m[i][j] % &m[t][t]).is_zero() {
                            offender = Some(i);
                            break 'scan;
                        }
                    }
                }
                match offender {
                    Some(i) => {
                        for j in t..self.cols {
                            let v = &m[t][j] + &m[i][j];
                            m[t][j] = v;
                        }
                    }
                    None => break,
                }
            }
            factors.push(m[t][t].abs());
            t += 1;
        }
        factors.resize(k, BigInt::zero());
        SnfResult {
            invariant_factors: factors,
        }
    }

    /// Solve X * A = B for X over the rationals (A = self, square
    /// nonsingular; B has the same number of columns).
    pub fn solve_right(&self, b: &IntMatrix) -> Result<RatMatrix, Error> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if b.cols != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "X*A=B needs B with {} columns, got {}",
                self.cols, b.cols
            )));
        }
        // X*A = B  <=>  A^t * X^t = B^t
        let xt = gauss_solve(&self.transpose().to_rational(), &b.transpose().to_rational())?;
        Ok(xt.transpose())
    }

    pub fn is_lower_triangular(&self) -> Option<bool> {
        self.triangular_flags(false, false)
    }

    pub fn is_upper_triangular(&self) -> Option<bool> {
        self.triangular_flags(true, false)
    }

    /// Lower triangular with unit diagonal; `None` when not square.
    pub fn is_lower_unitriangular(&self) -> Option<bool> {
        self.triangular_flags(false, true)
    }

    /// Upper triangular with unit diagonal; `None` when not square.
    pub fn is_upper_unitriangular(&self) -> Option<bool> {
        self.triangular_flags(true, true)
    }

    fn triangular_flags(&self, upper: bool, unit: bool) -> Option<bool> {
        if !self.is_square() {
            return None;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = &self[(r, c)];
                if r == c {
                    if unit && !v.is_one() {
                        return Some(false);
                    }
                } else {
                    let below = r > c;
                    if below == upper && !v.is_zero() {
                        return Some(false);
                    }
                }
            }
        }
        Some(true)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

// smallest |entry| != 0 in the trailing submatrix starting at (t, t)
fn pivot_position(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

// quotient with remainder of minimal magnitude; keeps SNF entries small
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if r.abs() * 2u8 > b.abs() {
        if (r.sign() == b.sign()) || r.is_zero() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

// Solve A * Y = B over the rationals by Gaussian elimination.
fn gauss_solve(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix, Error> {
    let n = a.rows;
    debug_assert_eq!(a.rows, a.cols);
    if b.rows != n {
        return Err(Error::ShapeMismatch(format!(
            "A*Y=B needs B with {} rows, got {}",
            n, b.rows
        )));
    }
    let w = b.cols;
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = a.row(r).to_vec();
            row.extend_from_slice(b.row(r));
            row
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(Error::Singular)?;
        m.swap(k, pivot);
        let inv = m[k][k].recip();
        for j in k..n + w {
            let v = &m[k][j] * &inv;
            m[k][j] = v;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone();
            for j in k..n + w {
                let v = &m[i][j] - &factor * &m[k][j];
                m[i][j] = v;
            }
        }
    }
    Ok(RatMatrix::from_fn(n, w, |r, c| m[r][n + c].clone()))
}

impl RatMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(RatMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = BigRational::zero();
            for k in 0..self.cols {
                acc += &self[(r, k)] * &other[(k, c)];
            }
            acc
        }))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.is_integer())
    }

    /// Integer form, when every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].to_integer()
        }))
    }

    pub fn det(&self) -> Result<BigRational, Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m: Vec<Vec<BigRational>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut det = BigRational::one();
        for k in 0..n {
            let pivot = match (k..n).find(|&r| !m[r][k].is_zero()) {
                Some(p) => p,
                None => return Ok(BigRational::zero()),
            };
            if pivot != k {
                m.swap(k, pivot);
                det = -det;
            }
            det *= m[k][k].clone();
            let inv = m[k][k].recip();
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let factor = &m[i][k] * &inv;
                for j in k..n {
                    let v = &m[i][j] - &factor * &m[k][j];
                    m[i][j] = v;
                }
            }
        }
        Ok(det)
    }

    pub fn is_lower_unitriangular(&self) -> Option<bool> {
        if self.rows != self.cols {
            return None;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = &self[(r, c)];
                if r == c {
                    if !v.is_one() {
                        return Some(false);
                    }
                } else if c > r && !v.is_zero() {
                    return Some(false);
                }
            }
        }
        Some(true)
    }

    pub fn is_upper_unitriangular(&self) -> Option<bool> {
        self.transpose().is_lower_unitriangular()
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (r, c): (usize, usize)) -> &BigRational {
        &self.data[r * self.cols + c]
    }
}

impl SnfResult {
    /// SNF of the diagonal matrix with the given entries.
    pub fn of_list(xs: &[BigInt]) -> SnfResult {
        IntMatrix::diagonal(xs).snf()
    }

    pub fn is_valid_chain(&self) -> bool {
        let f = &self.invariant_factors;
        f.iter().all(|d| !d.is_negative())
            && f.windows(2).all(|w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    (&w[1] % &w[0]).is_zero()
                }
            })
    }
}

impl fmt::Display for SnfResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.invariant_factors.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", items.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn snf_vec(m: &IntMatrix) -> Vec<i64> {
        m.snf()
            .invariant_factors
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    // cofactor-expansion oracle, exponential but independent
    fn det_cofactor(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = BigInt::zero();
        for c in 0..n {
            if m[(0, c)].is_zero() {
                continue;
            }
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&j| j != c).collect();
            let minor = det_cofactor(&m.submatrix(&rows, &cols));
            let term = &m[(0, c)] * minor;
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn random_matrix(rng: &mut StdRng, n: usize, lo: i64, hi: i64) -> IntMatrix {
        IntMatrix::from_fn(n, n, |_, _| big(rng.random_range(lo..=hi)))
    }

    #[test]
    fn det_s5_small_block() {
        let a3 = IntMatrix::from_i64(&[&[1, -1, 1], &[4, -2, 0], &[5, -1, 1]]);
        assert_eq!(a3.det().unwrap(), big(8));
    }

    #[test]
    fn det_identity_and_empty() {
        assert_eq!(IntMatrix::identity(4).det().unwrap(), big(1));
        assert_eq!(IntMatrix::zero(0, 0).det().unwrap(), big(1));
    }

    #[test]
    fn det_matches_cofactor_oracle() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 5, -9, 9);
            assert_eq!(m.det().unwrap(), det_cofactor(&m));
        }
    }

    #[test]
    fn det_rejects_non_square() {
        assert!(IntMatrix::zero(2, 3).det().is_err());
    }

    #[test]
    fn det_transpose_invariant() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..10 {
            let m = random_matrix(&mut rng, 4, -5, 5);
            assert_eq!(m.det().unwrap(), m.transpose().det().unwrap());
        }
    }

    #[test]
    fn det_block_triangular() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..10 {
            let a = random_matrix(&mut rng, 3, -4, 4);
            let b = random_matrix(&mut rng, 2, -4, 4);
            // assemble [[A, 0], [C, B]]
            let mut m = IntMatrix::zero(5, 5);
            for r in 0..3 {
                for c in 0..3 {
                    m[(r, c)] = a[(r, c)].clone();
                }
            }
            for r in 0..2 {
                for c in 0..2 {
                    m[(3 + r, 3 + c)] = b[(r, c)].clone();
                }
                for c in 0..3 {
                    m[(3 + r, c)] = big(rng.random_range(-4..=4));
                }
            }
            assert_eq!(m.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        }
    }

    #[test]
    fn snf_printed_examples() {
        // the two complementary S5 blocks for alpha = (1^2,3)
        let large = IntMatrix::from_i64(&[
            &[0, 0, 0, 1],
            &[-1, 1, -1, 0],
            &[1, -1, 0, -1],
            &[1, 1, 1, 1],
        ]);
        assert_eq!(snf_vec(&large), [1, 1, 1, 2]);
        assert_eq!(large.det().unwrap(), big(2));

        let small = IntMatrix::from_i64(&[&[1, -1, 1], &[4, -2, 0], &[5, -1, 1]]);
        assert_eq!(snf_vec(&small), [1, 2, 4]);
    }

    #[test]
    fn snf_of_diagonals() {
        let d = SnfResult::of_list(&[big(2), big(3)]);
        assert_eq!(d.invariant_factors, vec![big(1), big(6)]);
        let d = SnfResult::of_list(&[big(2), big(1), big(1), big(1)]);
        assert_eq!(d.invariant_factors, vec![big(1), big(1), big(1), big(2)]);
        let d = SnfResult::of_list(&[big(1), big(1), big(1)]);
        assert_eq!(d.invariant_factors, vec![big(1), big(1), big(1)]);
        let d = SnfResult::of_list(&[big(4), big(6)]);
        assert_eq!(d.invariant_factors, vec![big(2), big(12)]);
        let d = SnfResult::of_list(&[]);
        assert!(d.invariant_factors.is_empty());
    }

    #[test]
    fn snf_handles_zero_rows_and_rectangles() {
        let m = IntMatrix::from_i64(&[&[2, 4, 6], &[4, 8, 12]]);
        assert_eq!(snf_vec(&m), [2, 0]);
        let m = IntMatrix::zero(3, 2);
        assert_eq!(snf_vec(&m), [0, 0]);
    }

    #[test]
    fn snf_product_is_abs_det() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..15 {
            let m = random_matrix(&mut rng, 4, -6, 6);
            let d = m.det().unwrap();
            if d.is_zero() {
                continue;
            }
            let product: BigInt = m.snf().invariant_factors.iter().product();
            assert_eq!(product, d.abs());
            assert!(m.snf().is_valid_chain());
        }
    }

    // random unimodular matrix as a product of elementary operations
    fn random_unimodular(rng: &mut StdRng, n: usize) -> IntMatrix {
        let mut m = IntMatrix::identity(n);
        for _ in 0..3 * n {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n);
            if i == j {
                j = (j + 1) % n;
            }
            let c = big(rng.random_range(-3..=3));
            for col in 0..n {
                let v = &m[(i, col)] + &c * &m[(j, col)];
                m[(i, col)] = v;
            }
        }
        m
    }

    #[test]
    fn snf_invariant_under_unimodular_factors() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..10 {
            let m = random_matrix(&mut rng, 4, -5, 5);
            let u = random_unimodular(&mut rng, 4);
            let v = random_unimodular(&mut rng, 4);
            let transformed = u.mul(&m).unwrap().mul(&v).unwrap();
            assert_eq!(m.snf(), transformed.snf());
        }
    }

    #[test]
    fn solve_right_identity() {
        let b = IntMatrix::from_i64(&[&[3, -1, 7], &[0, 2, 5]]);
        let x = IntMatrix::identity(3).solve_right(&b).unwrap();
        assert_eq!(x.to_int().unwrap(), b);
    }

    #[test]
    fn solve_right_round_trip() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..10 {
            let a = loop {
                let a = random_matrix(&mut rng, 4, -5, 5);
                if !a.det().unwrap().is_zero() {
                    break a;
                }
            };
            let x0 = IntMatrix::from_fn(3, 4, |_, _| big(rng.random_range(-5..=5)));
            let b = x0.mul(&a).unwrap();
            let x = a.solve_right(&b).unwrap();
            assert_eq!(x.to_int().unwrap(), x0);
            // multiplying back reproduces B exactly
            assert_eq!(
                x.mul(&a.to_rational()).unwrap().to_int().unwrap(),
                b
            );
        }
    }

    #[test]
    fn solve_right_singular() {
        let a = IntMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let b = IntMatrix::identity(2);
        assert!(matches!(a.solve_right(&b), Err(Error::Singular)));
    }

    #[test]
    fn structure_flags() {
        let id = IntMatrix::identity(3);
        assert_eq!(id.is_lower_unitriangular(), Some(true));
        assert_eq!(id.is_upper_unitriangular(), Some(true));
        assert!(id.to_rational().is_integral());

        let rect = IntMatrix::zero(2, 3);
        assert_eq!(rect.is_lower_unitriangular(), None);

        let half = RatMatrix::from_fn(1, 1, |_, _| BigRational::new(big(1), big(2)));
        assert!(!half.is_integral());
        assert!(half.to_int().is_none());

        let lower = IntMatrix::from_i64(&[&[1, 0], &[5, 1]]);
        assert_eq!(lower.is_lower_unitriangular(), Some(true));
        assert_eq!(lower.is_upper_unitriangular(), Some(false));
        assert_eq!(lower.is_upper_triangular(), Some(false));
        assert_eq!(lower.is_lower_triangular(), Some(true));
    }

    #[test]
    fn rational_det() {
        let m = IntMatrix::from_i64(&[&[1, -1, 1], &[4, -2, 0], &[5, -1, 1]]).to_rational();
        assert_eq!(m.det().unwrap(), BigRational::from(big(8)));
    }
}
