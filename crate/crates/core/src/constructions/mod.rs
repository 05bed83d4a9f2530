//! Explicit constructions: Frobenius-power (Gabidulin) codes, self-dual
//! normal bases, dual and orthonormal bases for twisted trace forms, and the
//! self-dual / Lagrangian MRD codes built from them.

mod orthonormal;

use std::sync::Arc;

use thiserror::Error;

use crate::gf::{FieldElement, FieldTower, GfError, Level, Subfield};
use crate::linalg::{self, Matrix};
use crate::rankcodes::{self, BilinearForm, GabidulinCode, LBasis, RankCodeError};

pub use orthonormal::{orthonormal_basis, orthonormal_basis_twisted_trace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("coordinates of the seed vector are linearly dependent over F_q (rank weight {weight} < {n})")]
    CoordinatesDependent { weight: usize, n: usize },
    #[error("dimension {k} is outside 1..={n}")]
    BadDimension { k: usize, n: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no such code exists: {0}")]
    NoSuchCode(String),
    #[error("form is alternating on a subspace with no anisotropic vector to borrow")]
    AlternatingObstruction,
    #[error("search exhausted: {0}")]
    NotFound(String),
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Code(#[from] RankCodeError),
    #[error(transparent)]
    Linalg(#[from] linalg::LinalgError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

/// Code with rows `sigma^j(c0)`, `j < k`, where `sigma(x) = x^q`.
pub fn gabidulin_code(tower: &Arc<FieldTower>, c0: &[FieldElement], k: usize) -> Result<GabidulinCode> {
    let n = c0.len();
    if k == 0 || k > n {
        return Err(ConstructionError::BadDimension { k, n });
    }
    let weight = rankcodes::rank_weight(tower, c0);
    if weight != n {
        return Err(ConstructionError::CoordinatesDependent { weight, n });
    }
    let mut rows = Vec::with_capacity(k);
    let mut row = c0.to_vec();
    for _ in 0..k {
        let next = row.iter().map(|x| tower.frobenius(x, 1)).collect();
        rows.push(std::mem::replace(&mut row, next));
    }
    Ok(GabidulinCode::new(tower.clone(), Matrix::from_rows(Level::Top, n, rows)?)?)
}

/// `(a, tau(a), .., tau^{d-1}(a))` with `Tr_{M/F}(a tau^j(a)) = [j = 0]`, for
/// `M = F_{q^d}` inside `L`. The first such `a` in enumeration order is used.
pub fn self_dual_normal_basis(tower: &FieldTower, d: usize) -> Result<Vec<FieldElement>> {
    if tower.p() == 2 {
        if d.is_multiple_of(4) {
            return Err(ConstructionError::PreconditionViolated(format!(
                "in characteristic 2 the degree must not be divisible by 4, got {d}"
            )));
        }
    } else if d.is_multiple_of(2) {
        return Err(ConstructionError::PreconditionViolated(format!(
            "in odd characteristic the degree must be odd, got {d}"
        )));
    }
    let sub = Subfield::new(tower, d)?;
    let zero = tower.zero(Level::Base);
    let one = tower.one(Level::Base);
    let gram_row = |a: &FieldElement, j: usize| sub.trace(tower, &tower.mul(a, &tower.frobenius(a, j)));
    for a in sub.elements(tower) {
        let mut ok = true;
        for j in 0..d {
            let expected = if j == 0 { &one } else { &zero };
            if &gram_row(&a, j)? != expected {
                ok = false;
                break;
            }
        }
        if ok {
            let v: Vec<FieldElement> = (0..d).map(|j| tower.frobenius(&a, j)).collect();
            check_self_dual_normal(tower, &sub, &v)?;
            return Ok(v);
        }
    }
    Err(ConstructionError::NotFound(format!("no self-dual normal basis of F_{{q^{d}}}")))
}

/// Independent check: full Gram matrix `Tr_{M/F}(v_i v_j)` is the identity.
fn check_self_dual_normal(tower: &FieldTower, sub: &Subfield, v: &[FieldElement]) -> Result<()> {
    for (i, x) in v.iter().enumerate() {
        for (j, y) in v.iter().enumerate() {
            let t = sub.trace(tower, &tower.mul(x, y))?;
            let expected = tower.from_int(Level::Base, (i == j) as i64);
            if t != expected {
                return Err(ConstructionError::PostconditionFailed(format!(
                    "normal basis Gram entry ({i},{j}) is {t}"
                )));
            }
        }
    }
    Ok(())
}

/// Gram matrix of `(x, y) -> Tr_{L/F}(lambda x y)` on the given elements.
pub fn twisted_trace_gram(tower: &FieldTower, lambda: &FieldElement, elems: &[FieldElement]) -> Matrix {
    let vectors: Vec<Vec<FieldElement>> = elems.iter().map(|x| vec![x.clone()]).collect();
    linalg::gram(&vectors, |u, v| tower.trace(&tower.mul(lambda, &tower.mul(&u[0], &v[0]))))
        .expect("nonempty basis")
}

/// `alpha'` with `Tr(lambda alpha_i alpha'_j) = [i = j]`, as `alpha * Gram^{-1}`.
pub fn dual_basis(tower: &FieldTower, alpha: &LBasis, lambda: &FieldElement) -> Result<LBasis> {
    if tower.is_zero(lambda) {
        return Err(ConstructionError::PreconditionViolated("lambda must be nonzero".into()));
    }
    let gram = twisted_trace_gram(tower, lambda, alpha.elements());
    let inv = linalg::inverse(tower, &gram)?;
    let m = tower.m();
    let dual: Vec<FieldElement> = (0..m)
        .map(|j| {
            let col: Vec<FieldElement> = (0..m).map(|i| inv.get(i, j).clone()).collect();
            alpha.combine(tower, &col)
        })
        .collect();
    let dual = LBasis::new(tower, dual)?;
    let pairing = Matrix::from_rows(
        Level::Base,
        m,
        alpha
            .elements()
            .iter()
            .map(|a| {
                dual.elements()
                    .iter()
                    .map(|b| tower.trace(&tower.mul(lambda, &tower.mul(a, b))))
                    .collect()
            })
            .collect(),
    )?;
    if pairing != Matrix::identity(tower, Level::Base, m) {
        return Err(ConstructionError::PostconditionFailed("dual basis pairing is not the identity".into()));
    }
    Ok(dual)
}

/// A constructed MRD code together with the data it was built from.
#[derive(Debug, Clone)]
pub struct MrdConstruction {
    pub code: GabidulinCode,
    /// The seed vector `(v, t v)`.
    pub seed: Vec<FieldElement>,
    /// `i` with `i^2 = -1` (odd characteristic) or the Artin-Schreier root.
    pub twist: FieldElement,
    /// Self-dual normal basis of the middle field.
    pub normal_basis: Vec<FieldElement>,
    /// Minimum distance, when an exhaustive search fit in the budget.
    pub verified_distance: Option<usize>,
}

fn even_length(n: usize) -> Result<usize> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(ConstructionError::PreconditionViolated(format!(
            "self-dual codes need an even positive length, got {n}"
        )));
    }
    Ok(n / 2)
}

fn verify_mrd(code: &GabidulinCode, budget: u64) -> Result<Option<usize>> {
    if code.projective_count() > budget as u128 {
        return Ok(None);
    }
    let d = code.rank_distance(budget)?;
    if d != code.singleton_bound() {
        return Err(ConstructionError::PostconditionFailed(format!(
            "minimum distance {d}, expected {}",
            code.singleton_bound()
        )));
    }
    Ok(Some(d))
}

/// Self-dual MRD code in `L^n`, `L = F_{q^n}`, for `q = 3 mod 4` and
/// `n = 2 mod 4`. MRD is checked exhaustively when the search fits `budget`.
pub fn self_dual_mrd_code(q: u64, n: usize, budget: u64) -> Result<MrdConstruction> {
    let d = even_length(n)?;
    let (p, _) = crate::gf::prime_power(q).ok_or(GfError::NotPrime(q))?;
    if p == 2 {
        return Err(ConstructionError::NoSuchCode(
            "in characteristic 2 every self-dual code contains a vector of weight 1".into(),
        ));
    }
    if q % 4 == 1 {
        return Err(ConstructionError::NoSuchCode(format!(
            "q = {q} is 1 mod 4, so -1 is a square in F_q"
        )));
    }
    if n.is_multiple_of(4) {
        return Err(ConstructionError::NoSuchCode(format!(
            "n = {n} is 0 mod 4 and -1 is a sum of two squares in F_q"
        )));
    }
    let tower = Arc::new(FieldTower::for_order(q, n)?);
    let i = tower.find_sqrt_minus_one()?;
    if tower.frobenius(&i, 1) != tower.neg(&i) {
        return Err(ConstructionError::PostconditionFailed("i^q != -i".into()));
    }
    let v = self_dual_normal_basis(&tower, d)?;
    let seed: Vec<FieldElement> = v.iter().cloned().chain(v.iter().map(|x| tower.mul(&i, x))).collect();
    let code = gabidulin_code(&tower, &seed, d)?;

    let identity = BilinearForm::identity(&tower, n);
    if !code.gram(&identity)?.is_zero(&tower) {
        return Err(ConstructionError::PostconditionFailed("G G^t != 0".into()));
    }
    if !code.is_self_dual(&identity)? {
        return Err(ConstructionError::PostconditionFailed("code is not self-dual".into()));
    }
    let verified_distance = verify_mrd(&code, budget)?;
    Ok(MrdConstruction {
        code,
        seed,
        twist: i,
        normal_basis: v,
        verified_distance,
    })
}

/// Lagrangian (self-dual for `H_n`) MRD code in `L^n`, `L = F_{q^n}`, for
/// `q` even and `n = 2 mod 4`.
pub fn lagrangian_mrd_code(q: u64, n: usize, budget: u64) -> Result<MrdConstruction> {
    let d = even_length(n)?;
    let (p, _) = crate::gf::prime_power(q).ok_or(GfError::NotPrime(q))?;
    if p != 2 {
        return Err(ConstructionError::NoSuchCode(
            "in odd characteristic no Lagrangian code is MRD".into(),
        ));
    }
    if n.is_multiple_of(4) {
        return Err(ConstructionError::PreconditionViolated(format!(
            "over finite fields the construction needs n = 2 mod 4, got {n}"
        )));
    }
    let tower = Arc::new(FieldTower::for_order(q, n)?);
    let (alpha, _) = tower.find_artin_schreier()?;
    let v = self_dual_normal_basis(&tower, d)?;
    let seed: Vec<FieldElement> = v.iter().cloned().chain(v.iter().map(|x| tower.mul(&alpha, x))).collect();
    let code = gabidulin_code(&tower, &seed, d)?;

    let hyperbolic = BilinearForm::hyperbolic(&tower, n)?;
    if !code.gram(&hyperbolic)?.is_zero(&tower) {
        return Err(ConstructionError::PostconditionFailed("G H G^t != 0".into()));
    }
    if !code.is_self_dual(&hyperbolic)? {
        return Err(ConstructionError::PostconditionFailed("code is not Lagrangian".into()));
    }
    let verified_distance = verify_mrd(&code, budget)?;
    Ok(MrdConstruction {
        code,
        seed,
        twist: alpha,
        normal_basis: v,
        verified_distance,
    })
}

/// Least number of squares summing to `-1` in the given level (1 or 2 for
/// finite fields of odd characteristic).
pub fn field_level(tower: &FieldTower, level: Level) -> Result<u32> {
    if tower.p() == 2 {
        return Err(GfError::EvenCharacteristic.into());
    }
    let minus_one = tower.from_int(level, -1);
    let squares: Vec<FieldElement> = tower.elements(level).map(|x| tower.square(&x)).collect();
    if squares.contains(&minus_one) {
        return Ok(1);
    }
    for a in &squares {
        let b = tower.sub(&minus_one, a);
        if squares.contains(&b) {
            return Ok(2);
        }
    }
    Err(ConstructionError::NotFound("-1 is not a sum of two squares".into()))
}

/// Whether `-1` is a sum of `2^s` squares in the given level.
pub fn level_of_field(tower: &FieldTower, level: Level, s: u32) -> Result<bool> {
    let l = field_level(tower, level)?;
    Ok(2u64.checked_pow(s).is_none_or(|x| x >= l as u64))
}
