//! Dense linear algebra over the base field.

use crate::scalar::Scalar;

/// Reduced row echelon form; returns the nonzero rows and their pivot
/// columns.
pub fn rref(rows: &[Vec<Scalar>]) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for v in m[r].iter_mut() {
            *v = v.mul(&inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                for (v, p) in m[i].iter_mut().zip(&pivot) {
                    *v = v.sub(&p.mul(&f));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Indices of a maximal set of linearly independent rows, chosen greedily
/// in order.
pub fn independent_rows(rows: &[Vec<Scalar>]) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(row.clone());
        let (red, _) = rref(&trial);
        if red.len() > basis.len() {
            basis = red;
            chosen.push(i);
        }
    }
    chosen
}
