//! Gaussian elimination over any [`FieldOps`] on row-major `Vec<Vec<_>>`
//! matrices. These are the workhorses behind [`super::Matrix`] and the
//! enumeration code in `rankcodes`.

use crate::gf::FieldOps;

/// Reduce `rows` to reduced row echelon form in place and return the pivot
/// columns. Zero rows end up at the bottom.
pub fn rref<F: FieldOps>(f: &F, rows: &mut [Vec<F::Elem>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = f.inv(&rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                let t = f.mul(&factor, y);
                *x = f.sub(x, &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: FieldOps>(f: &F, rows: &[Vec<F::Elem>], cols: usize) -> usize {
    let mut work = rows.to_vec();
    rref(f, &mut work, cols).len()
}

/// Basis of `{v : A v = 0}`, one vector per free column, in increasing order of
/// the free column.
pub fn kernel<F: FieldOps>(f: &F, rows: &[Vec<F::Elem>], cols: usize) -> Vec<Vec<F::Elem>> {
    let mut work = rows.to_vec();
    let pivots = rref(f, &mut work, cols);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); cols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&work[r][free]);
            }
            v
        })
        .collect()
}

/// Determinant of a square matrix by elimination.
pub fn det<F: FieldOps>(f: &F, rows: &[Vec<F::Elem>]) -> F::Elem {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut d = f.one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !f.is_zero(&a[i][c])) else {
            return f.zero();
        };
        if piv != c {
            a.swap(piv, c);
            d = f.neg(&d);
        }
        d = f.mul(&d, &a[c][c]);
        let inv = f.inv(&a[c][c]).unwrap();
        for i in c + 1..n {
            if f.is_zero(&a[i][c]) {
                continue;
            }
            let factor = f.mul(&a[i][c], &inv);
            for j in c..n {
                let t = f.mul(&factor, &a[c][j]);
                a[i][j] = f.sub(&a[i][j], &t);
            }
        }
    }
    d
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<F: FieldOps>(f: &F, rows: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<F::Elem>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            row
        })
        .collect();
    let pivots = rref(f, &mut aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Some solution of `A x = b`, or `None` if the system is inconsistent.
pub fn solve<F: FieldOps>(f: &F, rows: &[Vec<F::Elem>], cols: usize, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let mut aug: Vec<Vec<F::Elem>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = rref(f, &mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

/// Rank of a flat row-major `rows x cols` buffer, destroying its contents.
/// Used on the hot path of minimum-rank enumeration.
pub fn rank_flat_in_place<F: FieldOps>(f: &F, buf: &mut [F::Elem], rows: usize, cols: usize) -> usize
where
    F::Elem: Copy,
{
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !f.is_zero(&buf[i * cols + c])) else {
            continue;
        };
        if piv != r {
            for j in c..cols {
                buf.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(&buf[r * cols + c]).unwrap();
        for i in r + 1..rows {
            let lead = buf[i * cols + c];
            if f.is_zero(&lead) {
                continue;
            }
            let factor = f.mul(&lead, &inv);
            for j in c..cols {
                let t = f.mul(&factor, &buf[r * cols + j]);
                buf[i * cols + j] = f.sub(&buf[i * cols + j], &t);
            }
        }
        r += 1;
    }
    r
}
