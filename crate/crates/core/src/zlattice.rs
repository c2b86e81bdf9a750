//! Exact integer linear algebra: extended GCD, Smith normal form with
//! unimodular witnesses, integer left null spaces and the one linear
//! Diophantine helper the conic analysis needs.
//!
//! All entries are `BigInt`; intermediate SNF entries can grow well past
//! machine words even for small matrices, so no fixed-width shortcuts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Dimension("matrix must be nonempty".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(IntMat {
            rows: rows.len(),
            cols,
            entries: rows.iter().flat_map(|r| r.iter().map(|&x| BigInt::from(x))).collect(),
        })
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Dimension("matrix must be nonempty".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(IntMat { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = IntMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMat {
        let mut out = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &t / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        if sign < 0 {
            -m[n - 1][n - 1].clone()
        } else {
            m[n - 1][n - 1].clone()
        }
    }

    /// Exact inverse of a unimodular integer matrix (|det| = 1), via the
    /// adjugate. Errors if the determinant is not a unit.
    pub fn unimodular_inverse(&self) -> Result<IntMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let d = self.det();
        if !(d.clone().abs().is_one()) {
            return Err(Error::Singular(format!("matrix has determinant {d}, not a unit")));
        }
        let mut adj = IntMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let c = minor.det();
                let s = if (i + j) % 2 == 0 { c } else { -c };
                adj[(j, i)] = s;
            }
        }
        if d < BigInt::zero() {
            for e in adj.entries.iter_mut() {
                *e = -std::mem::take(e);
            }
        }
        Ok(adj)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMat {
        let n = self.rows;
        let mut out = IntMat::zero(n - 1, n - 1);
        let mut r = 0;
        for i in 0..n {
            if i == skip_row {
                continue;
            }
            let mut c = 0;
            for j in 0..n {
                if j == skip_col {
                    continue;
                }
                out[(r, c)] = self[(i, j)].clone();
                c += 1;
            }
            r += 1;
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let (ia, ib) = (a * self.cols + j, b * self.cols + j);
            self.entries.swap(ia, ib);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let (ia, ib) = (i * self.cols + a, i * self.cols + b);
            self.entries.swap(ia, ib);
        }
    }

    /// Replace rows (a, b) by (p*row_a + q*row_b, r*row_a + s*row_b).
    fn rotate_rows(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for j in 0..self.cols {
            let x = self[(a, j)].clone();
            let y = self[(b, j)].clone();
            self[(a, j)] = p * &x + q * &y;
            self[(b, j)] = r * &x + s * &y;
        }
    }

    fn rotate_cols(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for i in 0..self.rows {
            let x = self[(i, a)].clone();
            let y = self[(i, b)].clone();
            self[(i, a)] = p * &x + q * &y;
            self[(i, b)] = r * &x + s * &y;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// Extended GCD with the sign convention `g >= 0` and `ext_gcd(0, 0) = (0, 0, 0)`.
///
/// Returns `(g, u, w)` with `u*a + w*b = g = gcd(a, b)`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if a.is_zero() && b.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    let e = a.extended_gcd(b);
    // num-integer already normalizes gcd >= 0.
    (e.gcd, e.x, e.y)
}

/// `ext_gcd` on machine integers, for callers that stay small.
pub fn ext_gcd_i64(a: i64, b: i64) -> (i64, i64, i64) {
    let (g, u, w) = ext_gcd(&BigInt::from(a), &BigInt::from(b));
    use num_traits::ToPrimitive;
    (g.to_i64().unwrap(), u.to_i64().unwrap(), w.to_i64().unwrap())
}

/// Smith normal form `U * A * V = diag(d_1, .., d_r, 0, ..)` with unimodular
/// witnesses and nonnegative diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub u: IntMat,
    pub v: IntMat,
    pub diag: Vec<BigInt>,
}

impl SnfDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Rebuild the padded diagonal matrix with the shape of the original input.
    pub fn diag_matrix(&self, rows: usize, cols: usize) -> IntMat {
        let mut d = IntMat::zero(rows, cols);
        for (i, di) in self.diag.iter().enumerate() {
            d[(i, i)] = di.clone();
        }
        d
    }
}

/// Bezout-rotation elimination: repeatedly clear the pivot row and column with
/// 2x2 unimodular transforms built from `ext_gcd`, then repair divisibility.
pub fn smith_normal_form(a: &IntMat) -> SnfDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = a.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let k = rows.min(cols);

    for t in 0..k {
        // Pivot: nonzero entry of least absolute value in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if w[(i, j)].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if w[(pi, pj)].abs() <= w[(i, j)].abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        w.swap_rows(t, pi);
        u.swap_rows(t, pi);
        w.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Clear column t below the pivot. Entries the pivot divides are
            // removed by plain subtractions, which leave row t untouched;
            // otherwise a Bezout rotation strictly shrinks the pivot.
            for i in t + 1..rows {
                if w[(i, t)].is_zero() {
                    continue;
                }
                if (&w[(i, t)] % &w[(t, t)]).is_zero() {
                    let q = &w[(i, t)] / &w[(t, t)];
                    for j in 0..cols {
                        let s = &q * &w[(t, j)];
                        w[(i, j)] -= s;
                    }
                    for j in 0..rows {
                        let s = &q * &u[(t, j)];
                        u[(i, j)] -= s;
                    }
                } else {
                    let (g, p, q) = ext_gcd(&w[(t, t)], &w[(i, t)]);
                    let r = -(&w[(i, t)] / &g);
                    let s = &w[(t, t)] / &g;
                    w.rotate_rows(t, i, &p, &q, &r, &s);
                    u.rotate_rows(t, i, &p, &q, &r, &s);
                }
            }
            // Clear row t to the right of the pivot, same discipline.
            let mut rotated = false;
            for j in t + 1..cols {
                if w[(t, j)].is_zero() {
                    continue;
                }
                if (&w[(t, j)] % &w[(t, t)]).is_zero() {
                    let q = &w[(t, j)] / &w[(t, t)];
                    for i in 0..rows {
                        let s = &q * &w[(i, t)];
                        w[(i, j)] -= s;
                    }
                    for i in 0..cols {
                        let s = &q * &v[(i, t)];
                        v[(i, j)] -= s;
                    }
                } else {
                    let (g, p, q) = ext_gcd(&w[(t, t)], &w[(t, j)]);
                    let r = -(&w[(t, j)] / &g);
                    let s = &w[(t, t)] / &g;
                    w.rotate_cols(t, j, &p, &q, &r, &s);
                    v.rotate_cols(t, j, &p, &q, &r, &s);
                    rotated = true;
                }
            }
            // Only a rotation can refill the pivot column; each repeat
            // strictly shrank |pivot|, so this terminates.
            if !rotated || (t + 1..rows).all(|i| w[(i, t)].is_zero()) {
                break;
            }
        }
    }

    // Divisibility repair: take adjacent pairs (d_i, d_j) with d_i not
    // dividing d_j to (gcd, lcm) by one column addition, one row rotation
    // and one column subtraction; scan until a full pass is clean.
    loop {
        let mut fixed = true;
        for i in 0..k.saturating_sub(1) {
            let j = i + 1;
            let di = w[(i, i)].clone();
            let dj = w[(j, j)].clone();
            if dj.is_zero() || (!di.is_zero() && (&dj % &di).is_zero()) {
                continue;
            }
            if di.is_zero() {
                // Zero before nonzero: swap into place.
                w.swap_rows(i, j);
                u.swap_rows(i, j);
                w.swap_cols(i, j);
                v.swap_cols(i, j);
                fixed = false;
                continue;
            }
            // C_i += C_j turns diag(d_i, d_j) into [[d_i, 0], [d_j, d_j]].
            for r in 0..rows {
                let t = w[(r, j)].clone();
                w[(r, i)] += t;
            }
            for r in 0..cols {
                let t = v[(r, j)].clone();
                v[(r, i)] += t;
            }
            // Row rotation gives [[g, q*d_j], [0, lcm]].
            let (g, p, q) = ext_gcd(&w[(i, i)], &w[(j, i)]);
            let rr = -(&w[(j, i)] / &g);
            let ss = &w[(i, i)] / &g;
            w.rotate_rows(i, j, &p, &q, &rr, &ss);
            u.rotate_rows(i, j, &p, &q, &rr, &ss);
            // g divides the fill-in, so a plain column subtraction clears it.
            let t = &w[(i, j)] / &g;
            if !t.is_zero() {
                for r in 0..rows {
                    let s = &t * &w[(r, i)];
                    w[(r, j)] -= s;
                }
                for r in 0..cols {
                    let s = &t * &v[(r, i)];
                    v[(r, j)] -= s;
                }
            }
            fixed = false;
        }
        if fixed {
            break;
        }
    }

    // Nonnegative diagonal, sign flips absorbed into U.
    for i in 0..k {
        if w[(i, i)] < BigInt::zero() {
            w.negate_row(i);
            u.negate_row(i);
        }
    }

    let diag = (0..k).map(|i| w[(i, i)].clone()).collect();
    SnfDecomposition { u, v, diag }
}

/// Basis of the left null lattice `{ X : X * A = 0 }`, as rows.
///
/// The rows of `U` below the rank of `A` satisfy `row * A = 0`; with `A`
/// of full row rank the result has zero rows and is returned as an empty
/// 0 x rows matrix.
pub fn left_null_basis(a: &IntMat) -> IntMat {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let rows = a.rows();
    let mut out = IntMat::zero(rows - rank, rows);
    for i in rank..rows {
        for j in 0..rows {
            out[(i - rank, j)] = snf.u[(i, j)].clone();
        }
    }
    out
}

/// One-parameter solution family of `a*x + b*y = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineFamily {
    pub particular: (BigInt, BigInt),
    /// Homogeneous generator `(-b/g, a/g)`; every solution is
    /// `particular + t * generator`.
    pub generator: (BigInt, BigInt),
}

/// Solve `a*x + b*y = rhs` over the integers; `None` iff `gcd(a,b)` does not
/// divide `rhs`. Requires `(a, b) != (0, 0)`.
pub fn solve_linear_diophantine(a: &BigInt, b: &BigInt, rhs: &BigInt) -> Option<DiophantineFamily> {
    assert!(!(a.is_zero() && b.is_zero()), "(a, b) = (0, 0) is not allowed");
    let (g, u, w) = ext_gcd(a, b);
    if !(rhs % &g).is_zero() {
        return None;
    }
    let q = rhs / &g;
    Some(DiophantineFamily {
        particular: (&u * &q, &w * &q),
        generator: (-(b / &g), a / &g),
    })
}
