//! Random field elements, vectors, matrices, bases and codes.

use std::sync::Arc;

use rand::Rng;

use crate::gf::{FieldElement, FieldTower, Level};
use crate::linalg::{self, Matrix};
use crate::rankcodes::{GabidulinCode, LBasis};

pub fn element<R: Rng + ?Sized>(rng: &mut R, tower: &FieldTower, level: Level) -> FieldElement {
    tower.from_index(level, rng.gen_range(0..tower.order(level)))
}

pub fn nonzero_element<R: Rng + ?Sized>(rng: &mut R, tower: &FieldTower, level: Level) -> FieldElement {
    tower.from_index(level, rng.gen_range(1..tower.order(level)))
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R, tower: &FieldTower, level: Level, n: usize) -> Vec<FieldElement> {
    (0..n).map(|_| element(rng, tower, level)).collect()
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, tower: &FieldTower, level: Level, rows: usize, cols: usize) -> Matrix {
    let entries = (0..rows).map(|_| vector(rng, tower, level, cols)).collect();
    Matrix::from_rows(level, cols, entries).expect("uniform shape")
}

/// Uniform element of `GL_n` at `level`, by rejection.
pub fn invertible_matrix<R: Rng + ?Sized>(rng: &mut R, tower: &FieldTower, level: Level, n: usize) -> Matrix {
    loop {
        let a = matrix(rng, tower, level, n, n);
        if linalg::rank(tower, &a) == n {
            return a;
        }
    }
}

/// Random invertible symmetric matrix over `F_q`.
pub fn invertible_symmetric<R: Rng + ?Sized>(rng: &mut R, tower: &FieldTower, n: usize) -> Matrix {
    loop {
        let mut a = Matrix::zeros(tower, Level::Base, n, n);
        for i in 0..n {
            for j in i..n {
                let x = element(rng, tower, Level::Base);
                a.set(i, j, x.clone());
                a.set(j, i, x);
            }
        }
        if linalg::rank(tower, &a) == n {
            return a;
        }
    }
}

/// Random `F_q`-basis of `L`.
pub fn basis<R: Rng + ?Sized>(rng: &mut R, tower: &FieldTower) -> LBasis {
    loop {
        let alpha = vector(rng, tower, Level::Top, tower.m());
        if let Ok(b) = LBasis::new(tower, alpha) {
            return b;
        }
    }
}

/// Code spanned by `k` random vectors; its dimension may fall below `k`.
pub fn code<R: Rng + ?Sized>(rng: &mut R, tower: &Arc<FieldTower>, n: usize, k: usize) -> GabidulinCode {
    let rows = (0..k).map(|_| vector(rng, tower, Level::Top, n)).collect();
    GabidulinCode::from_span(tower.clone(), n, rows).expect("n <= m")
}
