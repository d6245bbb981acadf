//! Exact integer and rational linear algebra.
//!
//! Everything downstream (polytopes, gradings, tropical tests) reduces to
//! arithmetic over arbitrary-precision integers and rationals; no floating
//! point is used anywhere. Hermite normal form is the workhorse for kernels
//! and integer solving, Smith normal form is computed only where torsion
//! matters (divisor class groups).

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer scalar.
pub type Int = BigInt;
/// Arbitrary-precision rational scalar, always kept in lowest terms.
pub type Rat = BigRational;

/// Shorthand for small integer constants.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for small rational constants.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// A point of the lattice `Z^n` (or of its dual; the ambient rank is the
/// entry count).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<Int>);

impl LatticeVector {
    pub fn from_i64(entries: &[i64]) -> Self {
        LatticeVector(entries.iter().map(|&v| Int::from(v)).collect())
    }

    pub fn zeros(rank: usize) -> Self {
        LatticeVector(vec![Int::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    pub fn dot(&self, other: &LatticeVector) -> Int {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in dot product");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_rat(&self, other: &RationalVector) -> Rat {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in dot product");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| Rat::from(a.clone()) * b)
            .sum()
    }

    pub fn scale(&self, c: &Int) -> LatticeVector {
        LatticeVector(self.0.iter().map(|e| e * c).collect())
    }

    /// Divides by the gcd of the entries; the zero vector is returned as is.
    pub fn primitive(&self) -> LatticeVector {
        let g = self
            .0
            .iter()
            .fold(Int::zero(), |acc, e| acc.gcd(e));
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        LatticeVector(self.0.iter().map(|e| e / &g).collect())
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|e| Rat::from(e.clone())).collect())
    }
}

impl Index<usize> for LatticeVector {
    type Output = Int;
    fn index(&self, i: usize) -> &Int {
        &self.0[i]
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, other: &LatticeVector) -> LatticeVector {
        assert_eq!(self.rank(), other.rank());
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, other: &LatticeVector) -> LatticeVector {
        assert_eq!(self.rank(), other.rank());
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|e| -e).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// A point of `Q^n`, used for barycenters, interior points and rational
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(pub Vec<Rat>);

impl RationalVector {
    pub fn from_i64(entries: &[i64]) -> Self {
        RationalVector(entries.iter().map(|&v| Rat::from(Int::from(v))).collect())
    }

    pub fn zeros(rank: usize) -> Self {
        RationalVector(vec![Rat::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &RationalVector) -> Rat {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in dot product");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: &Rat) -> RationalVector {
        RationalVector(self.0.iter().map(|e| e * c).collect())
    }

    /// Exact integrality test: every entry has denominator one.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|e| e.denom().is_one())
    }

    /// Converts to a lattice vector; panics unless integral.
    pub fn to_lattice(&self) -> LatticeVector {
        assert!(self.is_integral(), "vector is not integral: {:?}", self);
        LatticeVector(self.0.iter().map(|e| e.numer().clone()).collect())
    }

    /// Scales by the lcm of denominators and divides by the content,
    /// yielding a primitive integer vector pointing the same way.
    pub fn primitive_direction(&self) -> LatticeVector {
        let lcm = self
            .0
            .iter()
            .fold(Int::one(), |acc, e| acc.lcm(e.denom()));
        let ints: Vec<Int> = self.0.iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
        LatticeVector(ints).primitive()
    }
}

impl Index<usize> for RationalVector {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, other: &RationalVector) -> RationalVector {
        assert_eq!(self.rank(), other.rank());
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, other: &RationalVector) -> RationalVector {
        assert_eq!(self.rank(), other.rank());
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// Dense matrix over the integers, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Int>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<LatticeVector>, cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.rank(), cols, "row length mismatch");
            for j in 0..cols {
                *m.at_mut(i, j) = r[j].clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                *m.at_mut(i, j) = Int::from(v);
            }
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &Int {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Int {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> LatticeVector {
        LatticeVector(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn col(&self, c: usize) -> LatticeVector {
        LatticeVector((0..self.rows).map(|r| self.at(r, c).clone()).collect())
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut p = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                *p.at_mut(i, j) = acc;
            }
        }
        p
    }

    pub fn mul_vec(&self, v: &LatticeVector) -> LatticeVector {
        assert_eq!(self.cols, v.rank(), "dimension mismatch in product");
        LatticeVector(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
                .collect(),
        )
    }

    pub fn mul_vec_rat(&self, v: &RationalVector) -> RationalVector {
        assert_eq!(self.cols, v.rank(), "dimension mismatch in product");
        RationalVector(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| Rat::from(self.at(i, j).clone()) * &v[j])
                        .sum()
                })
                .collect(),
        )
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let i = a * self.cols + c;
            let j = b * self.cols + c;
            self.data.swap(i, j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            let i = r * self.cols + a;
            let j = r * self.cols + b;
            self.data.swap(i, j);
        }
    }

    /// row[a] += k * row[b]
    fn add_row_multiple(&mut self, a: usize, b: usize, k: &Int) {
        for c in 0..self.cols {
            let v = self.at(b, c) * k;
            *self.at_mut(a, c) += v;
        }
    }

    /// col[a] += k * col[b]
    fn add_col_multiple(&mut self, a: usize, b: usize, k: &Int) {
        for r in 0..self.rows {
            let v = self.at(r, b) * k;
            *self.at_mut(r, a) += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c).clone();
            *self.at_mut(r, c) = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, c).clone();
            *self.at_mut(r, c) = v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Exact rank via fraction-free Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            for r in row + 1..m.rows {
                if m.at(r, col).is_zero() {
                    continue;
                }
                // r <- pivot*r - entry*pivot_row, zeroing column `col`
                let a = m.at(row, col).clone();
                let b = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c) * &a - m.at(row, c) * &b;
                    *m.at_mut(r, c) = v;
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    /// Exact determinant (Bareiss fraction-free elimination).
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m.at(r, k).is_zero()) else {
                    return Int::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                    *m.at_mut(i, j) = &num / &prev;
                }
                *m.at_mut(i, k) = Int::zero();
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }
}

/// Unimodular `left * original * right = diag(entries)` with each diagonal
/// entry dividing the next.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
    /// The elementary divisors, nonnegative, padded with zeros up to
    /// `min(rows, cols)`.
    pub diagonal: Vec<Int>,
}

impl SmithDecomposition {
    /// Checks `left * m * right == diag` bit-exactly.
    pub fn verify(&self, m: &IntegerMatrix) -> bool {
        let prod = self.left.mul(m).mul(&self.right);
        for r in 0..prod.rows {
            for c in 0..prod.cols {
                let expect = if r == c && r < self.diagonal.len() {
                    self.diagonal[r].clone()
                } else {
                    Int::zero()
                };
                if *prod.at(r, c) != expect {
                    return false;
                }
            }
        }
        let chain = self
            .diagonal
            .iter()
            .zip(self.diagonal.iter().skip(1))
            .all(|(a, b)| b.is_zero() || (!a.is_zero() && (b % a).is_zero()));
        chain
            && self.left.det().abs().is_one()
            && self.right.det().abs().is_one()
    }
}

/// Smith normal form over `Z`.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let mut a = m.clone();
    let mut left = IntegerMatrix::identity(m.rows);
    let mut right = IntegerMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);

    for t in 0..n {
        loop {
            // Move a nonzero entry of smallest absolute value into the pivot.
            let mut best: Option<(usize, usize)> = None;
            for r in t..a.rows {
                for c in t..a.cols {
                    if a.at(r, c).is_zero() {
                        continue;
                    }
                    if best.is_none()
                        || a.at(r, c).abs() < a.at(best.unwrap().0, best.unwrap().1).abs()
                    {
                        best = Some((r, c));
                    }
                }
            }
            let Some((r, c)) = best else { break };
            a.swap_rows(t, r);
            left.swap_rows(t, r);
            a.swap_cols(t, c);
            right.swap_cols(t, c);

            let mut clean = true;
            for r in t + 1..a.rows {
                if a.at(r, t).is_zero() {
                    continue;
                }
                let q = -(a.at(r, t) / a.at(t, t));
                a.add_row_multiple(r, t, &q);
                left.add_row_multiple(r, t, &q);
                if !a.at(r, t).is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..a.cols {
                if a.at(t, c).is_zero() {
                    continue;
                }
                let q = -(a.at(t, c) / a.at(t, t));
                a.add_col_multiple(c, t, &q);
                right.add_col_multiple(c, t, &q);
                if !a.at(t, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                // Enforce divisibility towards the remaining block: if some
                // entry is not divisible by the pivot, mix its row in and
                // restart the reduction at this pivot.
                let mut fixed = true;
                'outer: for r in t + 1..a.rows {
                    for c in t + 1..a.cols {
                        if !(a.at(r, c) % a.at(t, t)).is_zero() {
                            a.add_row_multiple(t, r, &Int::one());
                            left.add_row_multiple(t, r, &Int::one());
                            fixed = false;
                            break 'outer;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
        }
        if a.at(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    let diagonal = (0..n).map(|i| a.at(i, i).clone()).collect();
    SmithDecomposition {
        left,
        right,
        diagonal,
    }
}

/// Column Hermite form: returns (H, U) with `m * U = H` and U unimodular;
/// H is in column echelon form with strictly increasing pivot rows.
fn column_hermite(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(m.cols);
    let mut col = 0;
    for row in 0..h.rows {
        if col == h.cols {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for c in col..h.cols {
                if h.at(row, c).is_zero() {
                    continue;
                }
                if best.is_none() || h.at(row, c).abs() < h.at(row, best.unwrap()).abs() {
                    best = Some(c);
                }
            }
            let Some(b) = best else { break };
            h.swap_cols(col, b);
            u.swap_cols(col, b);
            let mut clean = true;
            for c in col + 1..h.cols {
                if h.at(row, c).is_zero() {
                    continue;
                }
                let q = -(h.at(row, c) / h.at(row, col));
                h.add_col_multiple(c, col, &q);
                u.add_col_multiple(c, col, &q);
                if !h.at(row, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !h.at(row, col).is_zero() {
            if h.at(row, col).is_negative() {
                h.negate_col(col);
                u.negate_col(col);
            }
            col += 1;
        }
    }
    (h, u)
}

/// Basis of the integer kernel `{x : m x = 0}`, returned as the columns of a
/// matrix (cols = kernel rank). The kernel of an integer matrix is always a
/// saturated sublattice, so the quotient is torsion-free.
pub fn kernel_basis(m: &IntegerMatrix) -> IntegerMatrix {
    let (h, u) = column_hermite(m);
    let mut zero_cols = Vec::new();
    for c in 0..h.cols {
        if (0..h.rows).all(|r| h.at(r, c).is_zero()) {
            zero_cols.push(c);
        }
    }
    let mut k = IntegerMatrix::zeros(m.cols, zero_cols.len());
    for (j, &c) in zero_cols.iter().enumerate() {
        for r in 0..m.cols {
            *k.at_mut(r, j) = u.at(r, c).clone();
        }
    }
    k
}

/// Solves `m x = rhs` over the integers, returning one solution if any.
pub fn solve_integer(m: &IntegerMatrix, rhs: &LatticeVector) -> Option<LatticeVector> {
    assert_eq!(m.rows, rhs.rank(), "rhs length mismatch");
    let (h, u) = column_hermite(m);
    // Forward substitution along the pivot structure of the echelon form.
    let mut y = vec![Int::zero(); m.cols];
    let mut residual = rhs.0.clone();
    let mut col = 0;
    for row in 0..h.rows {
        if col < h.cols && !h.at(row, col).is_zero() {
            let (q, r) = residual[row].div_rem(h.at(row, col));
            if !r.is_zero() {
                return None;
            }
            for rr in row..h.rows {
                let v = h.at(rr, col) * &q;
                residual[rr] -= v;
            }
            y[col] = q;
            col += 1;
        }
        if !residual[row].is_zero() {
            return None;
        }
    }
    let x = u.mul_vec(&LatticeVector(y));
    debug_assert_eq!(m.mul_vec(&x), *rhs);
    Some(x)
}

/// Solves `m x = rhs` over the rationals (one solution, if consistent).
pub fn solve_rational(m: &IntegerMatrix, rhs: &RationalVector) -> Option<RationalVector> {
    assert_eq!(m.rows, rhs.rank(), "rhs length mismatch");
    // Gaussian elimination on the augmented rational matrix.
    let mut a: Vec<Vec<Rat>> = (0..m.rows)
        .map(|r| {
            let mut row: Vec<Rat> = (0..m.cols)
                .map(|c| Rat::from(m.at(r, c).clone()))
                .collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let rows = m.rows;
    let cols = m.cols;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].clone();
        for c in col..=cols {
            a[row][c] = &a[row][c] / &inv;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=cols {
                    let v = &a[row][c] * &f;
                    a[r][c] = &a[r][c] - &v;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == rows {
            break;
        }
    }
    // Consistency: zero rows must carry zero rhs.
    for r in row..rows {
        if !a[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for &(r, c) in &pivots {
        x[c] = a[r][cols].clone();
    }
    Some(RationalVector(x))
}
