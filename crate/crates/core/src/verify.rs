//! Exhaustive and randomized checks of the nonexistence and existence
//! results for self-dual and Lagrangian MRD codes, run over small grids.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::constructions::{
    self, dual_basis, field_level, gabidulin_code, lagrangian_mrd_code, orthonormal_basis_twisted_trace,
    self_dual_mrd_code, ConstructionError,
};
use crate::gf::{prime_power, FieldElement, FieldTower, GfError, Level};
use crate::linalg::{self, Matrix};
use crate::rankcodes::{rank_weight, BilinearForm, DelsarteCode, GabidulinCode, RankCodeError};
use crate::sample;

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "singleton",
    "transfer",
    "finite-thm",
    "lagrangian-thm",
    "char2",
    "constructions",
    "fixture",
];

const SEED: u64 = 0x6d72_6463;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}; expected one of {SUITES:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Code(#[from] RankCodeError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Field(#[from] GfError),
}

type Result<T> = std::result::Result<T, VerifyError>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremReport {
    pub theorem: String,
    pub grid: Vec<Value>,
    pub instances: u64,
    pub counterexamples: Vec<Value>,
    pub passed: bool,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl TheoremReport {
    pub fn new(theorem: &str) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            grid: Vec::new(),
            instances: 0,
            counterexamples: Vec::new(),
            passed: true,
            notes: Vec::new(),
            wall_time_ms: None,
        }
    }

    fn fail(&mut self, v: Value) {
        self.counterexamples.push(v);
        self.passed = false;
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn absorb(&mut self, other: TheoremReport) {
        self.grid.extend(other.grid);
        self.instances += other.instances;
        self.counterexamples.extend(other.counterexamples);
        self.notes.extend(other.notes);
        self.passed = self.counterexamples.is_empty();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub q_max: u64,
    pub n_max: usize,
    pub budget: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            q_max: 7,
            n_max: 6,
            budget: crate::rankcodes::DEFAULT_BUDGET,
        }
    }
}

fn prime_powers(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| prime_power(q).is_some()).collect()
}

fn to_ints(t: &FieldTower, v: &[FieldElement]) -> Vec<u64> {
    v.iter().map(|x| t.index_of(x)).collect()
}

// ---- line enumeration ---------------------------------------------------

/// A 1-dimensional code `<vector>` in `L^2` together with its rank distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfDualLine {
    pub vector: Vec<FieldElement>,
    pub distance: usize,
}

/// All isotropic lines of `L^2` for `form`, scanned as `<(1, b)>` for every
/// `b` followed by `<(0, 1)>`.
pub fn enumerate_self_dual_lines(tower: &FieldTower, form: &BilinearForm, budget: u64) -> Result<Vec<SelfDualLine>> {
    if form.size() != 2 {
        return Err(RankCodeError::DimensionMismatch(format!("line enumeration needs n = 2, got {}", form.size())).into());
    }
    let required = tower.order(Level::Top) as u128 + 1;
    if required > budget as u128 {
        return Err(RankCodeError::BudgetExceeded { required, budget }.into());
    }
    let one = tower.one(Level::Top);
    let zero = tower.zero(Level::Top);
    let lines = tower
        .elements(Level::Top)
        .map(|b| vec![one.clone(), b])
        .chain(std::iter::once(vec![zero, one.clone()]));
    Ok(lines
        .filter(|v| tower.is_zero(&form.pair_top(tower, v, v)))
        .map(|v| SelfDualLine {
            distance: rank_weight(tower, &v),
            vector: v,
        })
        .collect())
}

// ---- characteristic 2 ---------------------------------------------------

/// In characteristic 2, every code contained in its dual has the all-ones
/// vector in its dual, so its dual has distance at most 1.
///
/// For `n = 2` every isotropic line is checked. For larger `n`, random
/// self-orthogonal codes are built by rejection sampling, and the
/// Lagrangian construction is checked against the identity form.
pub fn check_char2_selfdual(q: u64, m: usize, n: usize, budget: u64) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("char2-self-dual");
    let tower = FieldTower::for_order(q, m)?;
    if tower.p() != 2 {
        return Err(ConstructionError::PreconditionViolated(format!("q = {q} is odd")).into());
    }
    report.grid.push(json!({"q": q, "m": m, "n": n}));
    let identity = BilinearForm::identity(&tower, n);
    if n == 2 {
        let lines = enumerate_self_dual_lines(&tower, &identity, budget)?;
        report.instances += tower.order(Level::Top) + 1;
        for line in &lines {
            let ones_orthogonal = tower.is_zero(&tower.add(&line.vector[0], &line.vector[1]));
            if !ones_orthogonal || line.distance > 1 {
                report.fail(json!({"q": q, "m": m, "line": to_ints(&tower, &line.vector), "distance": line.distance}));
            }
        }
        report.note(format!("q={q} m={m}: {} self-dual lines, all of distance 1", lines.len()));
    } else {
        spot_check_self_orthogonal(&tower, n, &mut report);
    }
    if m == n && n % 4 == 2 {
        let c = lagrangian_mrd_code(q, n, budget)?;
        report.instances += 1;
        let self_dual = c.code.is_self_dual(&BilinearForm::identity(c.code.tower(), n))?;
        if self_dual && c.verified_distance.is_some() {
            report.fail(json!({"q": q, "n": n, "lagrangianCodeIsSelfDualMrd": true}));
        }
        report.note(format!(
            "q={q} n={n}: Lagrangian MRD code is {}self-dual for the identity form",
            if self_dual { "" } else { "not " }
        ));
    }
    Ok(report)
}

fn spot_check_self_orthogonal(tower: &FieldTower, n: usize, report: &mut TheoremReport) {
    const CODES: usize = 20;
    const ATTEMPTS: usize = 20_000;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (n as u64));
    let mut built = 0;
    for _ in 0..CODES {
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        for _ in 0..ATTEMPTS {
            if rows.len() == n / 2 {
                break;
            }
            let gen = Matrix::from_rows(Level::Top, n, rows.clone()).expect("rectangular");
            let kernel = linalg::kernel(tower, &gen);
            let mut v = vec![tower.zero(Level::Top); n];
            for k in &kernel {
                let c = sample::element(&mut rng, tower, Level::Top);
                for (vi, ki) in v.iter_mut().zip(k) {
                    *vi = tower.add(vi, &tower.mul(&c, ki));
                }
            }
            if v.iter().all(|x| tower.is_zero(x)) || !tower.is_zero(&linalg::dot(tower, &v, &v)) {
                continue;
            }
            let mut grown = rows.clone();
            grown.push(v);
            let m = Matrix::from_rows(Level::Top, n, grown.clone()).expect("rectangular");
            if linalg::rank(tower, &m) == grown.len() {
                rows = grown;
            }
        }
        if rows.is_empty() {
            continue;
        }
        built += 1;
        report.instances += 1;
        let ones = vec![tower.one(Level::Top); n];
        if rows.iter().any(|r| !tower.is_zero(&linalg::dot(tower, r, &ones))) {
            report.fail(json!({"q": tower.q(), "m": tower.m(), "n": n,
                "code": rows.iter().map(|r| to_ints(tower, r)).collect::<Vec<_>>()}));
        }
    }
    report.note(format!("q={} m={} n={n}: {built} random self-orthogonal codes spot-checked", tower.q(), tower.m()));
}

// ---- transfer law -------------------------------------------------------

/// Random checks of `M_{a'}(C^perp) = M_a(C)^perp` with `a'` the dual basis
/// of `a` for the twisted trace form, and of the orthonormal-basis
/// consequence: `C` self-dual iff its expansion is.
pub fn check_transfer(tower: &Arc<FieldTower>, trials: usize, seed: u64) -> Result<TheoremReport> {
    let t = tower;
    let mut report = TheoremReport::new("transfer");
    report.grid.push(json!({"q": t.q(), "m": t.m(), "trials": trials}));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (_, ortho) = orthonormal_basis_twisted_trace(t)?;
    for trial in 0..trials {
        let n = rng.gen_range(1..=t.m());
        let k = rng.gen_range(0..=n);
        let code = sample::code(&mut rng, t, n, k);
        let form = BilinearForm::custom(t, sample::invertible_symmetric(&mut rng, t, n))?;
        let lambda = sample::nonzero_element(&mut rng, t, Level::Top);
        let alpha = sample::basis(&mut rng, t);
        let alpha_dual = dual_basis(t, &alpha, &lambda)?;
        let lhs = code.dual(&form)?.to_delsarte(&alpha_dual)?;
        let rhs = code.to_delsarte(&alpha)?.dual(&form)?;
        report.instances += 1;
        if lhs != rhs {
            report.fail(json!({"law": "transfer", "trial": trial, "n": n, "k": k}));
        }
        let gab = code.is_self_dual(&form)?;
        let del = code.to_delsarte(&ortho)?.is_self_dual(&form)?;
        if gab != del {
            report.fail(json!({"law": "orthonormal", "trial": trial, "n": n, "k": k}));
        }
    }
    if t.p() != 2 && t.q() % 4 == 3 && t.m() % 4 == 2 {
        let c = self_dual_mrd_code(t.q(), t.m(), 0)?;
        if **c.code.tower() == **t {
            let form = BilinearForm::identity(t, t.m());
            let del = c.code.to_delsarte(&ortho)?.is_self_dual(&form)?;
            report.instances += 1;
            if !del {
                report.fail(json!({"law": "orthonormal", "constructed": true, "q": t.q(), "n": t.m()}));
            }
        }
    }
    Ok(report)
}

// ---- the 4x2 fixture over F_5 -------------------------------------------

const FIXTURE_4X2: [[[i64; 2]; 4]; 4] = [
    [[-1, -1], [0, 2], [0, 1], [-2, 2]],
    [[-1, 0], [0, 0], [0, 1], [-1, 1]],
    [[2, 0], [1, 0], [2, 2], [-1, -1]],
    [[-2, 0], [-2, -1], [1, 1], [-2, 0]],
];

fn fixture_code(mats: &[[[i64; 2]; 4]; 4]) -> Result<DelsarteCode> {
    let t = Arc::new(FieldTower::new(5, 1, 1)?);
    let basis = mats
        .iter()
        .map(|m| Matrix::from_ints(&t, Level::Base, &m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(RankCodeError::from)?;
    Ok(DelsarteCode::from_span(t, 4, 2, basis)?)
}

/// The four-matrix code in `M_{4x2}(F_5)` published as self-dual MRD.
pub fn fixture_4x2() -> Result<DelsarteCode> {
    fixture_code(&FIXTURE_4X2)
}

/// The same code with the sign of one entry flipped.
pub fn fixture_4x2_perturbed() -> Result<DelsarteCode> {
    let mut mats = FIXTURE_4X2;
    mats[0][0][0] = -mats[0][0][0];
    fixture_code(&mats)
}

pub fn check_fixture_4x2(budget: u64) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("fixture-4x2");
    report.grid.push(json!({"q": 5, "rows": 4, "cols": 2}));
    let code = fixture_4x2()?;
    let identity = BilinearForm::identity(code.tower(), 2);
    let dim = code.dim();
    let self_dual = code.is_self_dual(&identity)?;
    let dist = code.rank_distance_report(budget, true)?;
    report.instances += dist.visited;
    report.note(format!(
        "fixture: dim {dim}, self-dual {self_dual}, distance {} over {} codewords",
        dist.distance, dist.visited
    ));
    if dim != 4 {
        report.fail(json!({"check": "dimension", "found": dim, "expected": 4}));
    }
    if !self_dual {
        report.fail(json!({"check": "self-dual", "found": false}));
    }
    if dist.distance != 2 {
        let w = dist.witness.iter().map(|x| x.coeffs()[0]).collect::<Vec<_>>();
        report.fail(json!({"check": "distance", "found": dist.distance, "expected": 2, "witness": w}));
    }
    let perturbed = fixture_4x2_perturbed()?;
    let control = perturbed.dim() == 4 && perturbed.is_self_dual(&identity)?;
    report.note(format!("perturbed fixture: self-dual {control}"));
    if control {
        report.fail(json!({"check": "negative control", "perturbedSelfDual": true}));
    }
    Ok(report)
}

// ---- n = 0 mod 4 --------------------------------------------------------

/// Samples random self-dual 2-dimensional codes `<[I | A]>` in `L^4`,
/// `L = F_{q^4}`, with `A A^t = -I`, and checks none is MRD. Also checks the
/// level of `F_q` against `q mod 4`.
pub fn check_zero_mod_four(q: u64, samples: usize, seed: u64, budget: u64) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("self-dual-n0mod4");
    report.grid.push(json!({"q": q, "m": 4, "n": 4, "samples": samples}));
    let t = Arc::new(FieldTower::for_order(q, 4)?);
    if t.p() == 2 {
        return Err(ConstructionError::PreconditionViolated(format!("q = {q} is even")).into());
    }
    let expected_level = if q % 4 == 1 { 1 } else { 2 };
    let level = field_level(&t, Level::Base)?;
    report.instances += 1;
    if level != expected_level {
        report.fail(json!({"check": "level", "q": q, "found": level, "expected": expected_level}));
    }
    if !constructions::level_of_field(&t, Level::Base, 1)? {
        report.fail(json!({"check": "level", "q": q, "sumOfTwoSquares": false}));
    }

    let size = t.order(Level::Top) as usize;
    let mut roots: Vec<Option<FieldElement>> = vec![None; size];
    for x in t.elements(Level::Top) {
        let i = t.index_of(&t.square(&x)) as usize;
        if roots[i].is_none() {
            roots[i] = Some(x);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let minus_one = t.from_int(Level::Top, -1);
    let one = t.one(Level::Top);
    let zero = t.zero(Level::Top);
    let identity = BilinearForm::identity(&t, 4);
    let mut checked = 0;
    while checked < samples {
        let x = sample::element(&mut rng, &t, Level::Top);
        let Some(y) = roots[t.index_of(&t.sub(&minus_one, &t.square(&x))) as usize].clone() else {
            continue;
        };
        let (z, w) = if rng.gen_bool(0.5) { (t.neg(&y), x.clone()) } else { (y.clone(), t.neg(&x)) };
        let rows = vec![
            vec![one.clone(), zero.clone(), x, y],
            vec![zero.clone(), one.clone(), z, w],
        ];
        let code = GabidulinCode::new(t.clone(), Matrix::from_rows(Level::Top, 4, rows.clone()).map_err(RankCodeError::from)?)?;
        checked += 1;
        report.instances += 1;
        if !code.gram(&identity)?.is_zero(&t) {
            report.fail(json!({"check": "sampler", "code": rows.iter().map(|r| to_ints(&t, r)).collect::<Vec<_>>()}));
            continue;
        }
        if code.is_mrd(budget)? {
            report.fail(json!({"check": "mrd", "code": rows.iter().map(|r| to_ints(&t, r)).collect::<Vec<_>>()}));
        }
    }
    report.note(format!(
        "q={q}: level {level}; {samples} sampled self-dual codes of the form [I | A], none MRD (not exhaustive)"
    ));
    Ok(report)
}

// ---- suites -------------------------------------------------------------

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<TheoremReport> {
    let mut report = match name {
        "singleton" => singleton_suite(cfg)?,
        "transfer" => transfer_suite(cfg)?,
        "finite-thm" => finite_suite(cfg)?,
        "lagrangian-thm" => lagrangian_suite(cfg)?,
        "char2" => char2_suite(cfg)?,
        "constructions" => constructions_suite(cfg)?,
        "fixture" => check_fixture_4x2(cfg.budget)?,
        _ => return Err(VerifyError::UnknownSuite(name.to_string())),
    };
    report.theorem = name.to_string();
    report.passed = report.counterexamples.is_empty();
    Ok(report)
}

fn independent_vector(rng: &mut ChaCha8Rng, t: &FieldTower, n: usize) -> Vec<FieldElement> {
    loop {
        let v = sample::vector(rng, t, Level::Top, n);
        if rank_weight(t, &v) == n {
            return v;
        }
    }
}

fn singleton_suite(cfg: &SuiteConfig) -> Result<TheoremReport> {
    const MAX_FIELD: u64 = 4096;
    let mut report = TheoremReport::new("singleton");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut skipped = 0;
    for q in prime_powers(cfg.q_max) {
        for m in 1..=cfg.n_max {
            if q.checked_pow(m as u32).is_none_or(|x| x > MAX_FIELD) {
                continue;
            }
            let t = Arc::new(FieldTower::for_order(q, m)?);
            report.grid.push(json!({"q": q, "m": m}));
            for n in 1..=m {
                for k in 0..=n {
                    if k == 0 {
                        continue;
                    }
                    let code = sample::code(&mut rng, &t, n, k);
                    if code.projective_count() > cfg.budget as u128 {
                        skipped += 1;
                        continue;
                    }
                    if code.dim() > 0 {
                        let d = code.rank_distance(cfg.budget)?;
                        report.instances += 1;
                        if d > code.singleton_bound() {
                            report.fail(json!({"q": q, "m": m, "n": n, "k": code.dim(), "distance": d, "kind": "random"}));
                        }
                    }
                    let c0 = independent_vector(&mut rng, &t, n);
                    let gab = gabidulin_code(&t, &c0, k)?;
                    let d = gab.rank_distance(cfg.budget)?;
                    report.instances += 1;
                    if d != n - k + 1 {
                        report.fail(json!({"q": q, "m": m, "n": n, "k": k, "distance": d, "kind": "gabidulin"}));
                    }
                }
            }
        }
    }
    report.note(format!("{skipped} codes skipped: enumeration exceeds the budget"));
    Ok(report)
}

fn transfer_suite(cfg: &SuiteConfig) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("transfer");
    for q in prime_powers(cfg.q_max) {
        for m in 2..=cfg.n_max.min(3) {
            if q.pow(m as u32) > 512 {
                continue;
            }
            let t = Arc::new(FieldTower::for_order(q, m)?);
            report.absorb(check_transfer(&t, 100, SEED ^ q ^ (m as u64) << 8)?);
        }
    }
    Ok(report)
}

fn finite_suite(cfg: &SuiteConfig) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("finite-thm");
    for q in prime_powers(cfg.q_max) {
        let odd3 = q % 2 == 1 && q % 4 == 3;
        let t = FieldTower::for_order(q, 2)?;
        if t.order(Level::Top) < cfg.budget {
            let lines = enumerate_self_dual_lines(&t, &BilinearForm::identity(&t, 2), cfg.budget)?;
            let mrd = lines.iter().filter(|l| l.distance == 2).count();
            report.grid.push(json!({"q": q, "m": 2, "n": 2, "selfDualLines": lines.len(), "mrd": mrd}));
            report.instances += t.order(Level::Top) + 1;
            if (mrd > 0) != odd3 {
                report.fail(json!({"q": q, "m": 2, "n": 2, "mrdSelfDualLines": mrd}));
            }
        }
        if q % 2 == 1 {
            let expected = if q % 4 == 1 { 1 } else { 2 };
            let base = field_level(&t, Level::Base)?;
            let top = field_level(&t, Level::Top)?;
            report.instances += 1;
            if base != expected || top != 1 {
                report.fail(json!({"q": q, "levelFq": base, "levelFq2": top}));
            }
        }
        for n in (2..=cfg.n_max).step_by(2) {
            let expected = odd3 && n % 4 == 2;
            report.grid.push(json!({"q": q, "n": n, "exists": expected}));
            existence_point(&mut report, q, n, expected, self_dual_mrd_code(q, n, cfg.budget), "identity")?;
        }
        if odd3 && cfg.n_max >= 4 && q.pow(4) < cfg.budget {
            report.absorb(check_zero_mod_four(q, 200, SEED ^ q, cfg.budget)?);
        }
    }
    report.note("n = 0 mod 4 is spot-checked by sampling, not enumerated");
    Ok(report)
}

/// Records one constructor outcome against the expected existence.
fn existence_point(
    report: &mut TheoremReport,
    q: u64,
    n: usize,
    expected: bool,
    outcome: std::result::Result<constructions::MrdConstruction, ConstructionError>,
    form: &str,
) -> Result<()> {
    report.instances += 1;
    match outcome {
        Ok(c) => {
            if !expected {
                report.fail(json!({"q": q, "n": n, "form": form, "unexpectedCode": true}));
            }
            let t = c.code.tower();
            let b = if form == "identity" { BilinearForm::identity(t, n) } else { BilinearForm::hyperbolic(t, n)? };
            if !c.code.is_self_dual(&b)? {
                report.fail(json!({"q": q, "n": n, "form": form, "selfDual": false}));
            }
            match c.verified_distance {
                Some(d) => report.note(format!("q={q} n={n} {form}: MRD verified, distance {d}")),
                None => report.note(format!(
                    "q={q} n={n} {form}: {} codewords exceed the budget, MRD not exhaustively verified",
                    c.code.projective_count()
                )),
            }
        }
        Err(ConstructionError::NoSuchCode(_)) | Err(ConstructionError::PreconditionViolated(_)) if !expected => {}
        Err(e) => report.fail(json!({"q": q, "n": n, "form": form, "error": e.to_string()})),
    }
    Ok(())
}

fn lagrangian_suite(cfg: &SuiteConfig) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("lagrangian-thm");
    for q in prime_powers(cfg.q_max).into_iter().filter(|q| q % 2 == 1) {
        for m in (2..=cfg.n_max).step_by(2) {
            let t = FieldTower::for_order(q, m)?;
            if t.order(Level::Top) + 1 > cfg.budget {
                continue;
            }
            let lines = enumerate_self_dual_lines(&t, &BilinearForm::hyperbolic(&t, 2)?, cfg.budget)?;
            report.grid.push(json!({"q": q, "m": m, "n": 2, "lagrangianLines": lines.len()}));
            report.instances += t.order(Level::Top) + 1;
            for l in lines.iter().filter(|l| l.distance > 1) {
                report.fail(json!({"q": q, "m": m, "line": to_ints(&t, &l.vector), "distance": l.distance}));
            }
        }
        existence_point(&mut report, q, 2, false, lagrangian_mrd_code(q, 2, cfg.budget), "hyperbolic")?;
    }
    Ok(report)
}

fn char2_suite(cfg: &SuiteConfig) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("char2");
    for q in prime_powers(cfg.q_max).into_iter().filter(|q| q % 2 == 0) {
        for m in (2..=cfg.n_max).step_by(2) {
            if q.pow(m as u32) < cfg.budget {
                report.absorb(check_char2_selfdual(q, m, 2, cfg.budget)?);
            }
        }
        for n in (4..=cfg.n_max).step_by(2) {
            if q.pow(n as u32) <= 256 {
                report.absorb(check_char2_selfdual(q, n, n, cfg.budget)?);
            }
        }
        existence_point(&mut report, q, 2, false, self_dual_mrd_code(q, 2, cfg.budget), "identity")?;
    }
    if cfg.q_max >= 2 && cfg.n_max >= 4 {
        report.instances += 1;
        match lagrangian_mrd_code(2, 4, cfg.budget) {
            Err(ConstructionError::PreconditionViolated(_)) => {}
            other => report.fail(json!({"q": 2, "n": 4, "expected": "precondition error", "got": format!("{other:?}")})),
        }
    }
    Ok(report)
}

fn constructions_suite(cfg: &SuiteConfig) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("constructions");
    for q in prime_powers(cfg.q_max) {
        let even = q % 2 == 0;
        for n in (2..=cfg.n_max).step_by(2) {
            report.grid.push(json!({"q": q, "n": n}));
            let sd = !even && q % 4 == 3 && n % 4 == 2;
            existence_point(&mut report, q, n, sd, self_dual_mrd_code(q, n, cfg.budget), "identity")?;
            let lag = even && n % 4 == 2;
            existence_point(&mut report, q, n, lag, lagrangian_mrd_code(q, n, cfg.budget), "hyperbolic")?;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
