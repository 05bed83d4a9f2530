//! Gabidulin codes (`L`-subspaces of `L^n`) and Delsarte codes
//! (`F`-subspaces of `m x n` matrices over `F`), with rank weights,
//! minimum distances and duals under symmetric bilinear forms.

mod scan;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{BaseField, FieldElement, FieldOps, FieldTower, GfError, Level};
use crate::linalg::{self, dense, LinalgError, Matrix};

use scan::Family;

/// Default cap on the number of codewords a minimum-distance search may visit.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RankCodeError {
    #[error("the given elements are not an F_q-basis of L")]
    NotABasis,
    #[error("generator rows are not linearly independent (rank {rank}, {rows} rows)")]
    RowsDependent { rank: usize, rows: usize },
    #[error("block length {n} exceeds the extension degree {m}")]
    LengthExceedsDegree { n: usize, m: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bilinear form is not symmetric")]
    FormNotSymmetric,
    #[error("bilinear form is degenerate")]
    FormDegenerate,
    #[error("hyperbolic form needs an even size, got {0}")]
    OddHyperbolic(usize),
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("enumeration needs {required} codewords, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("expected entries at level {expected:?}, found {found:?}")]
    WrongLevel { expected: Level, found: Level },
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

// ---- bases of L over F --------------------------------------------------

/// An `F_q`-basis `alpha = (alpha_1, .., alpha_m)` of `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LBasis {
    alpha: Vec<FieldElement>,
    /// Inverse of the matrix whose column `j` holds the power-basis
    /// coordinates of `alpha_j`, as base indices.
    to_alpha: Vec<Vec<u32>>,
}

impl LBasis {
    pub fn new(tower: &FieldTower, alpha: Vec<FieldElement>) -> Result<Self, RankCodeError> {
        let m = tower.m();
        if alpha.len() != m {
            return Err(RankCodeError::NotABasis);
        }
        if let Some(x) = alpha.iter().find(|x| x.level() != Level::Top) {
            return Err(RankCodeError::WrongLevel {
                expected: Level::Top,
                found: x.level(),
            });
        }
        let cols: Vec<Vec<u32>> = (0..m)
            .map(|i| alpha.iter().map(|a| tower.top_coords(a)[i]).collect())
            .collect();
        let to_alpha = dense::inverse(tower.base_field(), &cols).ok_or(RankCodeError::NotABasis)?;
        Ok(Self { alpha, to_alpha })
    }

    /// `(1, x, .., x^{m-1})`.
    pub fn power_basis(tower: &FieldTower) -> Self {
        let m = tower.m();
        let alpha = (0..m)
            .map(|i| {
                let mut c = vec![0; m];
                c[i] = 1;
                tower.top_from_coords(c)
            })
            .collect();
        Self::new(tower, alpha).expect("power basis")
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// Coordinates of `x` in this basis, as base indices.
    pub fn coordinates(&self, tower: &FieldTower, x: &FieldElement) -> Vec<u32> {
        let base = tower.base_field();
        let c = tower.top_coords(x);
        self.to_alpha
            .iter()
            .map(|row| dense_dot(base, row, c))
            .collect()
    }

    /// `sum_i coeffs_i alpha_i`.
    pub fn combine(&self, tower: &FieldTower, coeffs: &[FieldElement]) -> FieldElement {
        assert_eq!(coeffs.len(), self.alpha.len());
        coeffs.iter().zip(&self.alpha).fold(tower.zero(Level::Top), |acc, (c, a)| {
            tower.add(&acc, &tower.mul(&tower.embed(c, Level::Top), a))
        })
    }
}

fn dense_dot(base: &BaseField, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (x, y)| base.add(&acc, &base.mul(x, y)))
}

// ---- bilinear forms -----------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormTag {
    Identity,
    Hyperbolic,
    Custom,
}

/// An invertible symmetric `B` in `M_n(F)`; it defines `c B c'^t` on `L^n`
/// and `tr(M B N^t)` on `m x n` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    tag: FormTag,
    matrix: Matrix,
}

impl BilinearForm {
    pub fn identity(tower: &FieldTower, n: usize) -> Self {
        Self {
            tag: FormTag::Identity,
            matrix: Matrix::identity(tower, Level::Base, n),
        }
    }

    /// `H_n = [[0, I], [I, 0]]`.
    pub fn hyperbolic(tower: &FieldTower, n: usize) -> Result<Self, RankCodeError> {
        if !n.is_multiple_of(2) {
            return Err(RankCodeError::OddHyperbolic(n));
        }
        let d = n / 2;
        let mut matrix = Matrix::zeros(tower, Level::Base, n, n);
        for i in 0..d {
            matrix.set(i, i + d, tower.one(Level::Base));
            matrix.set(i + d, i, tower.one(Level::Base));
        }
        Ok(Self {
            tag: FormTag::Hyperbolic,
            matrix,
        })
    }

    pub fn custom(tower: &FieldTower, b: Matrix) -> Result<Self, RankCodeError> {
        if b.level() != Level::Base {
            return Err(RankCodeError::WrongLevel {
                expected: Level::Base,
                found: b.level(),
            });
        }
        if !b.is_square() {
            return Err(LinalgError::NotSquare {
                rows: b.rows(),
                cols: b.cols(),
            }
            .into());
        }
        if !b.is_symmetric() {
            return Err(RankCodeError::FormNotSymmetric);
        }
        if tower.is_zero(&linalg::det(tower, &b)?) {
            return Err(RankCodeError::FormDegenerate);
        }
        Ok(Self {
            tag: FormTag::Custom,
            matrix: b,
        })
    }

    /// Build from a tag; `Custom` needs the matrix.
    pub fn from_tag(tower: &FieldTower, tag: FormTag, n: usize, b: Option<Matrix>) -> Result<Self, RankCodeError> {
        let form = match tag {
            FormTag::Identity => Self::identity(tower, n),
            FormTag::Hyperbolic => Self::hyperbolic(tower, n)?,
            FormTag::Custom => Self::custom(
                tower,
                b.ok_or_else(|| RankCodeError::DimensionMismatch("custom form needs a matrix".into()))?,
            )?,
        };
        if form.size() != n {
            return Err(RankCodeError::DimensionMismatch(format!(
                "form has size {}, code has length {n}",
                form.size()
            )));
        }
        Ok(form)
    }

    pub fn tag(&self) -> FormTag {
        self.tag
    }
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    fn check_size(&self, n: usize) -> Result<(), RankCodeError> {
        if self.size() != n {
            return Err(RankCodeError::DimensionMismatch(format!(
                "form has size {}, expected {n}",
                self.size()
            )));
        }
        Ok(())
    }

    /// `u B v^t` for vectors in `L^n`.
    pub fn pair_top(&self, tower: &FieldTower, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
        linalg::bilinear(tower, u, &self.matrix.embed(tower, Level::Top), v)
    }

    /// `tr(M B N^t)` for `m x n` matrices over `F`.
    pub fn pair_matrices(&self, tower: &FieldTower, a: &Matrix, b: &Matrix) -> FieldElement {
        let ab = a.mul(tower, &self.matrix).expect("shapes checked by caller");
        ab.entries()
            .iter()
            .zip(b.entries())
            .fold(tower.zero(Level::Base), |acc, (x, y)| tower.add(&acc, &tower.mul(x, y)))
    }
}

// ---- vectors ------------------------------------------------------------

/// `M_alpha(c)`: the unique `m x n` matrix over `F` with `c = alpha M`.
pub fn expansion_matrix(tower: &FieldTower, c: &[FieldElement], alpha: &LBasis) -> Result<Matrix, RankCodeError> {
    if alpha.len() != tower.m() {
        return Err(RankCodeError::NotABasis);
    }
    let m = tower.m();
    let cols: Vec<Vec<u32>> = c.iter().map(|x| alpha.coordinates(tower, x)).collect();
    let rows = (0..m)
        .map(|i| cols.iter().map(|col| tower.base_from_index(col[i])).collect())
        .collect();
    Ok(Matrix::from_rows(Level::Base, c.len(), rows)?)
}

/// Power-basis coordinate matrix of `c`, flat row-major `m x n` base indices.
fn coord_buffer(tower: &FieldTower, c: &[FieldElement]) -> Vec<u32> {
    let m = tower.m();
    let n = c.len();
    let mut buf = vec![0u32; m * n];
    for (j, x) in c.iter().enumerate() {
        for (i, &v) in tower.top_coords(x).iter().enumerate() {
            buf[i * n + j] = v;
        }
    }
    buf
}

/// Rank weight: `dim_F` of the span of the coordinates of `c`.
pub fn rank_weight(tower: &FieldTower, c: &[FieldElement]) -> usize {
    if c.is_empty() {
        return 0;
    }
    let mut buf = coord_buffer(tower, c);
    dense::rank_flat_in_place(tower.base_field(), &mut buf, tower.m(), c.len())
}

/// Singleton bound `n - k + 1` for an `[n, k]` Gabidulin code.
pub fn singleton_bound(n: usize, k: usize) -> usize {
    n + 1 - k
}

// ---- Gabidulin codes ----------------------------------------------------

/// An `L`-linear code `C ⊆ L^n` with a full-row-rank generator matrix.
#[derive(Debug, Clone)]
pub struct GabidulinCode {
    tower: Arc<FieldTower>,
    generator: Matrix,
}

impl PartialEq for GabidulinCode {
    /// Equality of codes as subspaces.
    fn eq(&self, other: &Self) -> bool {
        *self.tower == *other.tower && linalg::same_row_space(&self.tower, &self.generator, &other.generator)
    }
}

/// Outcome of a minimum-distance search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: usize,
    /// Number of codewords whose weight was computed.
    pub visited: u64,
    /// A codeword of minimum weight.
    pub witness: Vec<FieldElement>,
}

impl GabidulinCode {
    /// Checked constructor: generator rows must be independent and `n <= m`.
    pub fn new(tower: Arc<FieldTower>, generator: Matrix) -> Result<Self, RankCodeError> {
        if generator.level() != Level::Top {
            return Err(RankCodeError::WrongLevel {
                expected: Level::Top,
                found: generator.level(),
            });
        }
        if generator.cols() > tower.m() {
            return Err(RankCodeError::LengthExceedsDegree {
                n: generator.cols(),
                m: tower.m(),
            });
        }
        let r = linalg::rank(&tower, &generator);
        if r != generator.rows() {
            return Err(RankCodeError::RowsDependent {
                rank: r,
                rows: generator.rows(),
            });
        }
        Ok(Self { tower, generator })
    }

    /// The span of arbitrary rows (possibly dependent or empty); the generator
    /// is the reduced echelon basis.
    pub fn from_span(tower: Arc<FieldTower>, n: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self, RankCodeError> {
        let g = Matrix::from_rows(Level::Top, n, rows)?;
        let basis = linalg::row_space_canonical(&tower, &g);
        Self::new(tower, Matrix::from_rows(Level::Top, n, basis)?)
    }

    pub fn zero(tower: Arc<FieldTower>, n: usize) -> Result<Self, RankCodeError> {
        Self::from_span(tower, n, Vec::new())
    }

    pub fn full(tower: Arc<FieldTower>, n: usize) -> Result<Self, RankCodeError> {
        let id = Matrix::identity(&tower, Level::Top, n);
        Self::new(tower, id)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }
    pub fn n(&self) -> usize {
        self.generator.cols()
    }
    /// `dim_L(C)`.
    pub fn dim(&self) -> usize {
        self.generator.rows()
    }
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Reduced echelon generator rows (canonical for the subspace).
    pub fn canonical_rows(&self) -> Vec<Vec<FieldElement>> {
        linalg::row_space_canonical(&self.tower, &self.generator)
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        let mut rows = self.generator.to_rows();
        rows.push(v.to_vec());
        let m = Matrix::from_rows(Level::Top, self.n(), rows).expect("same length");
        linalg::rank(&self.tower, &m) == self.dim()
    }

    pub fn singleton_bound(&self) -> usize {
        singleton_bound(self.n(), self.dim())
    }

    /// Number of codewords a projective search visits: `(q^{mk} - 1)/(q^m - 1)`.
    pub fn projective_count(&self) -> u128 {
        let qm = self.tower.order(Level::Top) as u128;
        (0..self.dim()).fold(0u128, |acc, _| acc.saturating_mul(qm).saturating_add(1))
    }

    /// One family per leading row `j0`: `g_{j0} + span_{F_p}{ b x^u g_j : j > j0 }`.
    fn projective_families(&self) -> Vec<Family> {
        let t = &*self.tower;
        let base = t.base_field();
        let rows = self.generator.to_rows();
        let k = rows.len();
        let m = t.m();
        let scalars: Vec<FieldElement> = (0..m)
            .flat_map(|u| {
                (0..t.e()).map(move |b| {
                    let mut c = vec![0; m];
                    c[u] = base.basis_element(b);
                    c
                })
            })
            .map(|c| t.top_from_coords(c))
            .collect();
        (0..k)
            .map(|j0| {
                let generators = rows[j0 + 1..]
                    .iter()
                    .flat_map(|row| {
                        scalars.iter().map(move |s| {
                            let scaled: Vec<FieldElement> = row.iter().map(|x| t.mul(s, x)).collect();
                            coord_buffer(t, &scaled)
                        })
                    })
                    .collect();
                Family {
                    offset: coord_buffer(t, &rows[j0]),
                    generators,
                    include_offset: true,
                }
            })
            .collect()
    }

    fn scan(&self, budget: u64, stop_at: usize) -> Result<DistanceReport, RankCodeError> {
        if self.dim() == 0 {
            return Err(RankCodeError::ZeroCode);
        }
        let required = self.projective_count();
        if required > budget as u128 {
            return Err(RankCodeError::BudgetExceeded { required, budget });
        }
        let t = &*self.tower;
        let families = self.projective_families();
        debug_assert_eq!(scan::family_count(t.p(), &families), required);
        let out = scan::min_rank(t.base_field(), t.m(), self.n(), &families, stop_at).expect("nonzero code");
        let n = self.n();
        let witness = (0..n)
            .map(|j| t.top_from_coords((0..t.m()).map(|i| out.witness[i * n + j]).collect()))
            .collect();
        Ok(DistanceReport {
            distance: out.min_rank,
            visited: out.visited,
            witness,
        })
    }

    /// Exact minimum rank distance with one codeword per `L`-line.
    pub fn rank_distance(&self, budget: u64) -> Result<usize, RankCodeError> {
        Ok(self.scan(budget, 1)?.distance)
    }

    /// Like [`rank_distance`](Self::rank_distance) but also reports the visit
    /// count and a minimum-weight witness. With `exhaustive` the search never
    /// stops early, so `visited` equals the projective count.
    pub fn rank_distance_report(&self, budget: u64, exhaustive: bool) -> Result<DistanceReport, RankCodeError> {
        self.scan(budget, if exhaustive { 0 } else { 1 })
    }

    /// `d_1(C) = n - k + 1`. Stops at the first codeword below the bound.
    pub fn is_mrd(&self, budget: u64) -> Result<bool, RankCodeError> {
        let bound = self.singleton_bound();
        let out = self.scan(budget, bound - 1)?;
        Ok(out.distance == bound)
    }

    /// `{x : G B x^t = 0}`.
    pub fn dual(&self, form: &BilinearForm) -> Result<GabidulinCode, RankCodeError> {
        form.check_size(self.n())?;
        let t = &*self.tower;
        let gb = self.generator.mul(t, &form.matrix().embed(t, Level::Top))?;
        let ker = if gb.rows() == 0 {
            Matrix::identity(t, Level::Top, self.n()).to_rows()
        } else {
            linalg::kernel(t, &gb)
        };
        Self::new(self.tower.clone(), Matrix::from_rows(Level::Top, self.n(), ker)?)
    }

    /// `G B G^t`.
    pub fn gram(&self, form: &BilinearForm) -> Result<Matrix, RankCodeError> {
        form.check_size(self.n())?;
        let t = &*self.tower;
        let gb = self.generator.mul(t, &form.matrix().embed(t, Level::Top))?;
        Ok(gb.mul(t, &self.generator.transpose())?)
    }

    /// `n = 2k`, `G B G^t = 0` and the dual spans the same space.
    pub fn is_self_dual(&self, form: &BilinearForm) -> Result<bool, RankCodeError> {
        form.check_size(self.n())?;
        if self.n() != 2 * self.dim() {
            return Ok(false);
        }
        if !self.gram(form)?.is_zero(&self.tower) {
            return Ok(false);
        }
        Ok(self.dual(form)? == *self)
    }

    /// `M_alpha(C)`: spanned by `M_alpha(x^u g_v)`; dimension `m k` over `F`.
    pub fn to_delsarte(&self, alpha: &LBasis) -> Result<DelsarteCode, RankCodeError> {
        let t = &*self.tower;
        let m = t.m();
        let mut basis = Vec::with_capacity(m * self.dim());
        for g in self.generator.to_rows() {
            for u in 0..m {
                let mut c = vec![0; m];
                c[u] = 1;
                let xu = t.top_from_coords(c);
                let scaled: Vec<FieldElement> = g.iter().map(|x| t.mul(&xu, x)).collect();
                basis.push(expansion_matrix(t, &scaled, alpha)?);
            }
        }
        let code = DelsarteCode::new(self.tower.clone(), m, self.n(), basis)?;
        debug_assert_eq!(code.dim(), m * self.dim());
        Ok(code)
    }
}

// ---- Delsarte codes -----------------------------------------------------

/// An `F`-linear code in `M_{rows x cols}(F)` with an explicit basis.
#[derive(Debug, Clone)]
pub struct DelsarteCode {
    tower: Arc<FieldTower>,
    rows: usize,
    cols: usize,
    basis: Vec<Matrix>,
}

impl PartialEq for DelsarteCode {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && *self.tower == *other.tower
            && linalg::same_row_space(&self.tower, &self.flat(), &other.flat())
    }
}

impl DelsarteCode {
    /// Checked constructor: basis matrices must be independent over `F`.
    pub fn new(tower: Arc<FieldTower>, rows: usize, cols: usize, basis: Vec<Matrix>) -> Result<Self, RankCodeError> {
        for b in &basis {
            if b.level() != Level::Base {
                return Err(RankCodeError::WrongLevel {
                    expected: Level::Base,
                    found: b.level(),
                });
            }
            if b.rows() != rows || b.cols() != cols {
                return Err(RankCodeError::DimensionMismatch(format!(
                    "basis matrix is {}x{}, code is {rows}x{cols}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        let code = Self {
            tower,
            rows,
            cols,
            basis,
        };
        let r = linalg::rank(&code.tower, &code.flat());
        if r != code.basis.len() {
            return Err(RankCodeError::RowsDependent {
                rank: r,
                rows: code.basis.len(),
            });
        }
        Ok(code)
    }

    /// Span of arbitrary matrices; the stored basis is the reduced echelon
    /// form of their flattenings.
    pub fn from_span(tower: Arc<FieldTower>, rows: usize, cols: usize, mats: Vec<Matrix>) -> Result<Self, RankCodeError> {
        let flat: Vec<Vec<FieldElement>> = mats.iter().map(Matrix::flatten).collect();
        let fm = Matrix::from_rows(Level::Base, rows * cols, flat)?;
        let basis = linalg::row_space_canonical(&tower, &fm)
            .into_iter()
            .map(|v| unflatten(cols, v))
            .collect();
        Self::new(tower, rows, cols, basis)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }
    /// Matrix shape `(rows, cols)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Basis matrices flattened row-major into the rows of one matrix.
    pub fn flat(&self) -> Matrix {
        Matrix::from_rows(
            Level::Base,
            self.rows * self.cols,
            self.basis.iter().map(Matrix::flatten).collect(),
        )
        .expect("shapes checked")
    }

    /// Orthogonal complement under `tr(M B N^t)`.
    pub fn dual(&self, form: &BilinearForm) -> Result<DelsarteCode, RankCodeError> {
        form.check_size(self.cols)?;
        let t = &*self.tower;
        let mn = self.rows * self.cols;
        let functionals: Vec<Vec<FieldElement>> = self
            .basis
            .iter()
            .map(|b| b.mul(t, form.matrix()).map(|mb| mb.flatten()))
            .collect::<Result<_, _>>()?;
        let ker = if functionals.is_empty() {
            Matrix::identity(t, Level::Base, mn).to_rows()
        } else {
            linalg::kernel(t, &Matrix::from_rows(Level::Base, mn, functionals)?)
        };
        let basis = ker.into_iter().map(|v| unflatten(self.cols, v)).collect();
        Self::new(self.tower.clone(), self.rows, self.cols, basis)
    }

    /// `dim = rows*cols/2`, pairwise orthogonal basis, dual equal to the code.
    pub fn is_self_dual(&self, form: &BilinearForm) -> Result<bool, RankCodeError> {
        form.check_size(self.cols)?;
        if 2 * self.dim() != self.rows * self.cols {
            return Ok(false);
        }
        let t = &*self.tower;
        for a in &self.basis {
            for b in &self.basis {
                if !t.is_zero(&form.pair_matrices(t, a, b)) {
                    return Ok(false);
                }
            }
        }
        Ok(self.dual(form)? == *self)
    }

    pub fn codeword_count(&self) -> u128 {
        (self.tower.q() as u128).saturating_pow(self.dim() as u32) - 1
    }

    fn scan(&self, budget: u64, stop_at: usize) -> Result<DistanceReport, RankCodeError> {
        if self.dim() == 0 {
            return Err(RankCodeError::ZeroCode);
        }
        let required = self.codeword_count();
        if required > budget as u128 {
            return Err(RankCodeError::BudgetExceeded { required, budget });
        }
        let t = &*self.tower;
        let base = t.base_field();
        let generators = self
            .basis
            .iter()
            .flat_map(|b| {
                (0..t.e()).map(move |s| {
                    let y = base.basis_element(s);
                    b.entries()
                        .iter()
                        .map(|x| base.mul(&t.base_index(x), &y))
                        .collect::<Vec<u32>>()
                })
            })
            .collect();
        let fam = Family {
            offset: vec![0; self.rows * self.cols],
            generators,
            include_offset: false,
        };
        let out = scan::min_rank(base, self.rows, self.cols, &[fam], stop_at).expect("nonzero code");
        let witness = out.witness.iter().map(|&i| t.base_from_index(i)).collect();
        Ok(DistanceReport {
            distance: out.min_rank,
            visited: out.visited,
            witness,
        })
    }

    /// Exact minimum rank over all nonzero codewords.
    pub fn rank_distance(&self, budget: u64) -> Result<usize, RankCodeError> {
        Ok(self.scan(budget, 1)?.distance)
    }

    /// Minimum rank with visit count; the witness is flattened row-major.
    pub fn rank_distance_report(&self, budget: u64, exhaustive: bool) -> Result<DistanceReport, RankCodeError> {
        self.scan(budget, if exhaustive { 0 } else { 1 })
    }

    /// Right-hand side of the Singleton bound `cols - dim/rows + 1`, as a
    /// fraction `(numerator, rows)`.
    pub fn singleton_bound(&self) -> (usize, usize) {
        ((self.cols + 1) * self.rows - self.dim(), self.rows)
    }

    pub fn is_mrd(&self, budget: u64) -> Result<bool, RankCodeError> {
        let (num, den) = self.singleton_bound();
        if num % den != 0 {
            return Ok(false);
        }
        let bound = num / den;
        let out = self.scan(budget, bound.saturating_sub(1))?;
        Ok(out.distance == bound)
    }
}

fn unflatten(cols: usize, v: Vec<FieldElement>) -> Matrix {
    let rs = v.chunks(cols).map(<[FieldElement]>::to_vec).collect();
    Matrix::from_rows(Level::Base, cols, rs).expect("flat length is rows*cols")
}
