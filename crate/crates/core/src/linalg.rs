//! Exact linear algebra over the rationals.
//!
//! Everything here is fraction-free at the elimination core: rows are cleared
//! to integers and reduced with the Bareiss one-step scheme, so pivots stay
//! exact and the determinant criterion is never subject to rounding. Rational
//! back-substitution happens only after the echelon form is fixed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Shorthand for an integer as an exact rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zeros(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn identity(n: usize) -> Vec<Vec<Rat>> {
    let mut m = vec![zeros(n); n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    m
}

pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = zeros(cols);
            for (x, brow) in row.iter().zip(b) {
                if !x.is_zero() {
                    for (o, y) in out.iter_mut().zip(brow) {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

pub fn mat_add(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn scale_mat(m: &[Vec<Rat>], c: &Rat) -> Vec<Vec<Rat>> {
    m.iter()
        .map(|row| row.iter().map(|x| x * c).collect())
        .collect()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

/// Clears denominators of one row, returning integer entries.
fn clear_row(row: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Fraction-free (Bareiss) row echelon form of an integer matrix.
/// Returns the pivot columns; `mat` is left in echelon form.
fn bareiss_echelon(mat: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = mat.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // smallest nonzero pivot keeps the integers short
        let pivot_row = (r..rows)
            .filter(|&i| !mat[i][c].is_zero())
            .min_by_key(|&i| mat[i][c].abs());
        let Some(p) = pivot_row else { continue };
        mat.swap(r, p);
        for i in r + 1..rows {
            // the rescale runs even when mat[i][c] is zero: Bareiss needs every
            // entry below the pivot row to stay a minor of the original matrix
            for j in c + 1..cols {
                let num = &mat[r][c] * &mat[i][j] - &mat[i][c] * &mat[r][j];
                mat[i][j] = num / &prev;
            }
            mat[i][c] = BigInt::zero();
        }
        prev = mat[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rat>], cols: usize) -> usize {
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| clear_row(r))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    bareiss_echelon(&mut mat, cols).len()
}

/// Determinant of a square rational matrix, computed fraction-free after
/// clearing each row to integers.
pub fn det(square: &[Vec<Rat>]) -> Rat {
    let n = square.len();
    if n == 0 {
        return Rat::one();
    }
    let mut scale = Rat::one();
    let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in square {
        let mut lcm = BigInt::one();
        for x in row {
            lcm = num_integer::lcm(lcm, x.denom().clone());
        }
        scale *= Rat::new(BigInt::one(), lcm.clone());
        mat.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
    }
    // track row swaps for the sign
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..n {
        let pivot_row = (c..n)
            .filter(|&i| !mat[i][c].is_zero())
            .min_by_key(|&i| mat[i][c].abs());
        let Some(p) = pivot_row else {
            return Rat::zero();
        };
        if p != c {
            mat.swap(c, p);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let num = &mat[c][c] * &mat[i][j] - &mat[i][c] * &mat[c][j];
                mat[i][j] = num / &prev;
            }
            mat[i][c] = BigInt::zero();
        }
        prev = mat[c][c].clone();
    }
    Rat::from_integer(sign * prev) * scale
}

/// Basis of the right nullspace of the linear map given by `rows` (each row is
/// one equation over `cols` unknowns). Echelon is fraction-free; the basis is
/// recovered by rational back-substitution, one vector per free column.
pub fn nullspace(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    nullspace_with_free(rows, cols).0
}

/// Like [`nullspace`], also returning the free column of each basis vector:
/// `basis[t][free[t]] = 1` and `basis[u][free[t]] = 0` for `u ≠ t`, so the
/// coordinates of any nullspace member in this basis can be read off its
/// free-column entries.
pub fn nullspace_with_free(rows: &[Vec<Rat>], cols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| clear_row(r))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let pivots = bareiss_echelon(&mut mat, cols);
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; cols];
        for &p in &pivots {
            s[p] = true;
        }
        s
    };
    let mut basis = Vec::new();
    let mut free_cols = Vec::new();
    for free in (0..cols).filter(|&c| !pivot_set[c]) {
        let mut v = zeros(cols);
        v[free] = Rat::one();
        for (t, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rat::zero();
            for j in pc + 1..cols {
                if !v[j].is_zero() && !mat[t][j].is_zero() {
                    acc += Rat::from_integer(mat[t][j].clone()) * &v[j];
                }
            }
            v[pc] = -acc / Rat::from_integer(mat[t][pc].clone());
        }
        basis.push(v);
        free_cols.push(free);
    }
    (basis, free_cols)
}

/// Reduced row echelon form over the rationals; returns (rows, pivot columns).
/// The output rows are a canonical basis of the row space.
pub fn rref(rows: Vec<Vec<Rat>>, cols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut mat: Vec<Vec<Rat>> = rows
        .into_iter()
        .filter(|r| !is_zero_vec(r))
        .collect();
    let n = mat.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].clone();
        for x in mat[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..n {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &mat[r][j];
                    mat[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    mat.truncate(r);
    (mat, pivots)
}

/// A linear subspace of Q^ambient, stored as canonical RREF rows so that two
/// subspaces are equal exactly when the representations are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn from_spanning(ambient: usize, spanning: Vec<Vec<Rat>>) -> Self {
        let (basis, _) = rref(spanning, ambient);
        Subspace { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        // reduce v against the RREF rows
        let mut v = v.to_vec();
        for row in &self.basis {
            let pc = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    let sub = &f * y;
                    *x -= sub;
                }
            }
        }
        is_zero_vec(&v)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, rows)
    }
}
