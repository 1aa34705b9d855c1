//! Small dense linear algebra over a generic scalar. Pivot selection uses the
//! largest magnitude entry, which is deterministic in both numeric modes and
//! harmless for rationals (any nonzero pivot is exact).

use crate::scalar::Scalar;

/// Row-major matrix as plain nested vectors; every routine here is O(n^3)
/// on matrices that never exceed a handful of rows.
pub type Matrix<S> = Vec<Vec<S>>;

fn pivot_row<S: Scalar>(rows: &Matrix<S>, col: usize, start: usize) -> Option<usize> {
    let mut best: Option<(usize, S)> = None;
    for (r, row) in rows.iter().enumerate().skip(start) {
        let mag = row[col].abs();
        if mag.is_zero() {
            continue;
        }
        match &best {
            Some((_, m)) if m.total_cmp(&mag) != std::cmp::Ordering::Less => {}
            _ => best = Some((r, mag)),
        }
    }
    best.map(|(r, _)| r)
}

/// Reduces `rows` in place to row echelon form; returns the pivot columns.
pub fn row_echelon<S: Scalar>(rows: &mut Matrix<S>) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = pivot_row(rows, c, r) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for j in c..ncols {
            let v = rows[r][j].clone() / inv.clone();
            rows[r][j] = v;
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..ncols {
                let v = rows[i][j].clone() - f.clone() * rows[r][j].clone();
                rows[i][j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(rows: &Matrix<S>) -> usize {
    let mut m = rows.clone();
    row_echelon(&mut m).len()
}

/// Indices of a maximal linearly independent subset of `vectors`, greedy in
/// input order so the result is deterministic.
pub fn independent_subset<S: Scalar>(vectors: &[Vec<S>]) -> Vec<usize> {
    let mut chosen: Matrix<S> = Vec::new();
    let mut idx = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        chosen.push(v.clone());
        if rank(&chosen) == chosen.len() {
            idx.push(i);
        } else {
            chosen.pop();
        }
    }
    idx
}

/// Solves `A x = b` for one solution (free variables set to zero).
/// Returns None when the system is inconsistent.
pub fn solve<S: Scalar>(a: &Matrix<S>, b: &[S]) -> Option<Vec<S>> {
    let nrows = a.len();
    assert_eq!(nrows, b.len(), "row count mismatch");
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut aug: Matrix<S> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_echelon(&mut aug);
    // A pivot in the rhs column marks an inconsistent row.
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![S::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Basis of `{x : row . x = 0 for every row}`, via free columns of the RREF.
pub fn nullspace<S: Scalar>(rows: &Matrix<S>, dim: usize) -> Vec<Vec<S>> {
    if rows.is_empty() {
        return (0..dim)
            .map(|i| {
                let mut e = vec![S::zero(); dim];
                e[i] = S::one();
                e
            })
            .collect();
    }
    let mut m = rows.clone();
    let pivots = row_echelon(&mut m);
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![S::zero(); dim];
        v[free] = S::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant by elimination. Square input required.
pub fn determinant<S: Scalar>(mat: &Matrix<S>) -> S {
    let n = mat.len();
    for row in mat {
        assert_eq!(row.len(), n, "determinant needs a square matrix");
    }
    let mut m = mat.clone();
    let mut det = S::one();
    for c in 0..n {
        let Some(p) = pivot_row(&m, c, c) else {
            return S::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = det * m[c][c].clone();
        let inv = m[c][c].clone();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() / inv.clone();
            for j in c..n {
                let v = m[i][j].clone() - f.clone() * m[c][j].clone();
                m[i][j] = v;
            }
        }
    }
    det
}
