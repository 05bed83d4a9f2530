//! Exact dense linear algebra over one level of a [`FieldTower`].

pub mod dense;

use thiserror::Error;

use crate::gf::{FieldElement, FieldTower, Level, LevelField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("entry at ({row}, {col}) is at level {found:?}, expected {expected:?}")]
    WrongLevel {
        row: usize,
        col: usize,
        expected: Level,
        found: Level,
    },
    #[error("matrix is singular")]
    Singular,
    #[error("linear system has no solution")]
    Inconsistent,
}

/// Dense row-major matrix whose entries all live at one tower level.
///
/// A matrix may have zero rows (the generator of the zero code); it always has
/// a definite column count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    level: Level,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn from_rows(level: Level, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, x) in row.into_iter().enumerate() {
                if x.level() != level {
                    return Err(LinalgError::WrongLevel {
                        row: i,
                        col: j,
                        expected: level,
                        found: x.level(),
                    });
                }
                entries.push(x);
            }
        }
        Ok(Self {
            level,
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn zeros(tower: &FieldTower, level: Level, rows: usize, cols: usize) -> Self {
        Self {
            level,
            rows,
            cols,
            entries: vec![tower.zero(level); rows * cols],
        }
    }

    pub fn identity(tower: &FieldTower, level: Level, n: usize) -> Self {
        let mut m = Self::zeros(tower, level, n, n);
        for i in 0..n {
            m.entries[i * n + i] = tower.one(level);
        }
        m
    }

    /// Build from small integers (reduced mod p).
    pub fn from_ints(tower: &FieldTower, level: Level, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&v| tower.from_int(level, v)).collect())
            .collect();
        Self::from_rows(level, cols, converted)
    }

    pub fn level(&self) -> Level {
        self.level
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

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: FieldElement) {
        assert_eq!(x.level(), self.level);
        self.entries[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self {
            level: self.level,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, tower: &FieldTower, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.level != other.level {
            return Err(LinalgError::WrongLevel {
                row: 0,
                col: 0,
                expected: self.level,
                found: other.level,
            });
        }
        let mut out = Matrix::zeros(tower, self.level, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if tower.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = tower.mul(a, other.get(k, j));
                    let idx = i * other.cols + j;
                    out.entries[idx] = tower.add(&out.entries[idx], &t);
                }
            }
        }
        Ok(out)
    }

    /// Entrywise image in a higher level.
    pub fn embed(&self, tower: &FieldTower, to: Level) -> Matrix {
        Matrix {
            level: to,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| tower.embed(x, to)).collect(),
        }
    }

    pub fn is_zero(&self, tower: &FieldTower) -> bool {
        self.entries.iter().all(|x| tower.is_zero(x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Row-major flattening into a single vector.
    pub fn flatten(&self) -> Vec<FieldElement> {
        self.entries.clone()
    }
}

/// Result of [`rref_rank`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref_rank(tower: &FieldTower, a: &Matrix) -> Rref {
    let f = LevelField::new(tower, a.level);
    let mut rows = a.to_rows();
    let pivots = dense::rref(&f, &mut rows, a.cols);
    let matrix = Matrix::from_rows(a.level, a.cols, rows).expect("shape preserved");
    Rref {
        rank: pivots.len(),
        matrix,
        pivots,
    }
}

pub fn rank(tower: &FieldTower, a: &Matrix) -> usize {
    dense::rank(&LevelField::new(tower, a.level), &a.to_rows(), a.cols)
}

/// Basis of the right null space `{v : A v = 0}`.
pub fn kernel(tower: &FieldTower, a: &Matrix) -> Vec<Vec<FieldElement>> {
    dense::kernel(&LevelField::new(tower, a.level), &a.to_rows(), a.cols)
}

pub fn det(tower: &FieldTower, a: &Matrix) -> Result<FieldElement, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    Ok(dense::det(&LevelField::new(tower, a.level), &a.to_rows()))
}

pub fn inverse(tower: &FieldTower, a: &Matrix) -> Result<Matrix, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let inv = dense::inverse(&LevelField::new(tower, a.level), &a.to_rows()).ok_or(LinalgError::Singular)?;
    Matrix::from_rows(a.level, a.cols, inv)
}

/// Some `x` with `A x = b`.
pub fn solve(tower: &FieldTower, a: &Matrix, b: &[FieldElement]) -> Result<Vec<FieldElement>, LinalgError> {
    if b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            a.rows
        )));
    }
    dense::solve(&LevelField::new(tower, a.level), &a.to_rows(), a.cols, b).ok_or(LinalgError::Inconsistent)
}

/// Gram matrix `(pairing(v_i, v_j))_{ij}`; the result level is that of the
/// pairing's values.
pub fn gram<P>(vectors: &[Vec<FieldElement>], pairing: P) -> Result<Matrix, LinalgError>
where
    P: Fn(&[FieldElement], &[FieldElement]) -> FieldElement,
{
    let Some(first) = vectors.first() else {
        return Err(LinalgError::DimensionMismatch("no vectors".into()));
    };
    if let Some(bad) = vectors.iter().find(|v| v.len() != first.len()) {
        return Err(LinalgError::DimensionMismatch(format!(
            "vector lengths {} and {} differ",
            first.len(),
            bad.len()
        )));
    }
    let rows: Vec<Vec<FieldElement>> = vectors
        .iter()
        .map(|u| vectors.iter().map(|v| pairing(u, v)).collect())
        .collect();
    let level = rows[0][0].level();
    Matrix::from_rows(level, vectors.len(), rows)
}

/// `sum_i u_i v_i` at the vectors' level.
pub fn dot(tower: &FieldTower, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
    assert_eq!(u.len(), v.len());
    let level = u.first().map_or(Level::Top, |x| x.level());
    u.iter()
        .zip(v)
        .fold(tower.zero(level), |acc, (a, b)| tower.add(&acc, &tower.mul(a, b)))
}

/// `u B v^t` for a square matrix `B` at the same level as the vectors.
pub fn bilinear(tower: &FieldTower, u: &[FieldElement], b: &Matrix, v: &[FieldElement]) -> FieldElement {
    let level = b.level();
    let mut acc = tower.zero(level);
    for (i, ui) in u.iter().enumerate() {
        if tower.is_zero(ui) {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            let bij = b.get(i, j);
            if tower.is_zero(bij) {
                continue;
            }
            acc = tower.add(&acc, &tower.mul(&tower.mul(ui, bij), vj));
        }
    }
    acc
}

/// Canonical form of the row space: nonzero rows of the RREF.
pub fn row_space_canonical(tower: &FieldTower, a: &Matrix) -> Vec<Vec<FieldElement>> {
    let r = rref_rank(tower, a);
    r.matrix.to_rows().into_iter().take(r.rank).collect()
}

/// Whether two matrices with the same column count span the same row space.
pub fn same_row_space(tower: &FieldTower, a: &Matrix, b: &Matrix) -> bool {
    a.cols == b.cols && a.level == b.level && row_space_canonical(tower, a) == row_space_canonical(tower, b)
}
