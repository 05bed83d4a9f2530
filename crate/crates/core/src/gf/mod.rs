//! Exact arithmetic in a tower `F_p ⊆ F_q = F_{p^e} ⊆ L = F_{q^m}`.
//!
//! The tower keeps the base field `F_q` and the top field `L` as separate
//! levels so that Frobenius, trace and norm are naturally relative to `F_q`.
//! Elements are plain coefficient vectors tagged with their level; every
//! operation goes through [`FieldTower`].
//!
//! Coefficient conventions (constant term first everywhere):
//! - prime level: `[v]` with `0 <= v < p`;
//! - base level: `e` digits over `F_p` (coefficients of `1, y, .., y^{e-1}`);
//! - top level: `m` base-field elements, each stored by its base index
//!   (`sum_i digit_i p^i`), the coefficients of `1, x, .., x^{m-1}`.
//!
//! The index of an element (`sum coefficient * radix^position`) defines the
//! enumeration order used by every deterministic search in this crate.

mod base;
mod ops;
pub(crate) mod poly;
mod subfield;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use base::BaseField;
pub use ops::{is_prime, prime_power, FieldOps, PrimeField};
pub use subfield::Subfield;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{what}: expected degree {expected}, got a coefficient list of length {len}")]
    BadDegree {
        what: &'static str,
        expected: usize,
        len: usize,
    },
    #[error("{0} is not monic")]
    NotMonic(&'static str),
    #[error("{which} {poly} is reducible")]
    ReduciblePolynomial { which: &'static str, poly: String },
    #[error("invalid coefficient {value} (modulus {modulus})")]
    InvalidCoefficient { value: u32, modulus: u32 },
    #[error("extension degrees must be at least 1")]
    ZeroDegree,
    #[error("tower is too large for exact enumeration")]
    TowerTooLarge,
    #[error("division by zero")]
    DivisionByZero,
    #[error("level mismatch: {0:?} vs {1:?}")]
    LevelMismatch(Level, Level),
    #[error("malformed element at level {level:?}: {reason}")]
    MalformedElement { level: Level, reason: String },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("-1 has no square root in this field")]
    NoSquareRootOfMinusOne,
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("no such element: {0}")]
    NoSuchElement(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("{d} does not divide the top degree {m}")]
    NotADivisor { d: usize, m: usize },
}

/// Which field of the tower an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Prime,
    Base,
    Top,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    level: Level,
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn level(&self) -> Level {
        self.level
    }

    /// Coefficients over the level beneath; see the module docs.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Pow(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceNorm {
    Trace,
    Norm,
}

/// A validated tower `F_p ⊆ F_q ⊆ L`.
#[derive(Debug, Clone)]
pub struct FieldTower {
    base: BaseField,
    m: usize,
    /// Monic, length `m + 1`, coefficients are base indices.
    top_poly: Vec<u32>,
    top_order: u64,
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p()
            && self.base.modulus() == other.base.modulus()
            && self.top_poly == other.top_poly
    }
}

impl Eq for FieldTower {}

/// Accept a monic polynomial either with its leading 1 or with it omitted.
fn normalize_monic(what: &'static str, coeffs: &[u32], degree: usize) -> Result<Vec<u32>, GfError> {
    if coeffs.len() == degree {
        let mut v = coeffs.to_vec();
        v.push(1);
        Ok(v)
    } else if coeffs.len() == degree + 1 {
        if coeffs[degree] != 1 {
            return Err(GfError::NotMonic(what));
        }
        Ok(coeffs.to_vec())
    } else {
        Err(GfError::BadDegree {
            what,
            expected: degree,
            len: coeffs.len(),
        })
    }
}

/// Enumerate monic polynomials of the given degree by index
/// (`sum c_j r^j` over the non-leading coefficients) and return the first
/// irreducible one.
fn first_irreducible<F: FieldOps<Elem = u32>>(f: &F, radix: u32, degree: usize) -> Vec<u32> {
    let field_size = radix as u64;
    let mut coeffs = vec![0u32; degree];
    loop {
        let mut candidate = coeffs.clone();
        candidate.push(1);
        if poly::is_irreducible(f, &candidate, field_size) {
            return candidate;
        }
        // odometer, constant term least significant
        let mut i = 0;
        loop {
            coeffs[i] += 1;
            if coeffs[i] < radix {
                break;
            }
            coeffs[i] = 0;
            i += 1;
            assert!(i < degree, "an irreducible polynomial exists in every degree");
        }
    }
}

impl FieldTower {
    /// Tower with automatically selected defining polynomials.
    pub fn new(p: u64, e: usize, m: usize) -> Result<Self, GfError> {
        Self::build(p, e, m, None, None)
    }

    /// Tower for `F_q ⊆ F_{q^m}` with `q` a prime power.
    pub fn for_order(q: u64, m: usize) -> Result<Self, GfError> {
        match prime_power(q) {
            Some((p, e)) => Self::new(p as u64, e, m),
            None => Err(GfError::NotPrime(q)),
        }
    }

    /// Validate (or select) the defining polynomials.
    ///
    /// `base_poly` has `F_p` coefficients; each coefficient of `top_poly` is a
    /// base element given by its `e` digits. Either polynomial may include or
    /// omit its leading 1. Missing polynomials are the first monic irreducible
    /// ones in index order.
    pub fn build(
        p: u64,
        e: usize,
        m: usize,
        base_poly: Option<&[u32]>,
        top_poly: Option<&[Vec<u32>]>,
    ) -> Result<Self, GfError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(GfError::NotPrime(p));
        }
        if e == 0 || m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q = p.checked_pow(e as u32).filter(|&q| q <= u32::MAX as u64).ok_or(GfError::TowerTooLarge)?;
        let top_order = q
            .checked_pow(m as u32)
            .filter(|&n| n < (1u64 << 62))
            .ok_or(GfError::TowerTooLarge)?;
        let prime = PrimeField::new(p as u32);

        let base_modulus = match base_poly {
            Some(coeffs) => {
                let poly = normalize_monic("base_poly", coeffs, e)?;
                for &c in &poly {
                    if c >= p as u32 {
                        return Err(GfError::InvalidCoefficient { value: c, modulus: p as u32 });
                    }
                }
                if !poly::is_irreducible(&prime, &poly, p) {
                    return Err(GfError::ReduciblePolynomial {
                        which: "base_poly",
                        poly: format!("{poly:?}"),
                    });
                }
                poly
            }
            None => first_irreducible(&prime, p as u32, e),
        };
        let base = BaseField::new(prime, base_modulus);

        let top = match top_poly {
            Some(coeffs) => {
                let mut idx = Vec::with_capacity(coeffs.len());
                for digits in coeffs {
                    if digits.len() != e {
                        return Err(GfError::MalformedElement {
                            level: Level::Base,
                            reason: format!("expected {e} digits, got {}", digits.len()),
                        });
                    }
                    if let Some(&bad) = digits.iter().find(|&&d| d >= p as u32) {
                        return Err(GfError::InvalidCoefficient { value: bad, modulus: p as u32 });
                    }
                    idx.push(base.from_digits(digits));
                }
                let poly = normalize_monic("top_poly", &idx, m)?;
                if !poly::is_irreducible(&base, &poly, q) {
                    return Err(GfError::ReduciblePolynomial {
                        which: "top_poly",
                        poly: format!("{poly:?}"),
                    });
                }
                poly
            }
            None => first_irreducible(&base, q as u32, m),
        };

        Ok(Self {
            base,
            m,
            top_poly: top,
            top_order,
        })
    }

    pub fn p(&self) -> u32 {
        self.base.p()
    }
    /// Degree of `F_q` over `F_p`.
    pub fn e(&self) -> usize {
        self.base.degree()
    }
    /// Degree of `L` over `F_q`.
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn q(&self) -> u64 {
        self.base.order() as u64
    }
    pub fn characteristic(&self) -> u32 {
        self.p()
    }
    pub fn base_field(&self) -> &BaseField {
        &self.base
    }
    pub fn prime_field(&self) -> PrimeField {
        self.base.prime()
    }
    /// Defining polynomial of `F_q` over `F_p`, monic, constant term first.
    pub fn base_poly(&self) -> &[u32] {
        self.base.modulus()
    }
    /// Defining polynomial of `L` over `F_q`, coefficients as base indices.
    pub fn top_poly(&self) -> &[u32] {
        &self.top_poly
    }

    pub fn order(&self, level: Level) -> u64 {
        match level {
            Level::Prime => self.p() as u64,
            Level::Base => self.q(),
            Level::Top => self.top_order,
        }
    }

    fn width(&self, level: Level) -> usize {
        match level {
            Level::Prime => 1,
            Level::Base => self.e(),
            Level::Top => self.m,
        }
    }

    fn coeff_bound(&self, level: Level) -> u32 {
        match level {
            Level::Prime | Level::Base => self.p(),
            Level::Top => self.base.order(),
        }
    }

    /// Checked constructor from raw coefficients.
    pub fn element(&self, level: Level, coeffs: Vec<u32>) -> Result<FieldElement, GfError> {
        if coeffs.len() != self.width(level) {
            return Err(GfError::MalformedElement {
                level,
                reason: format!("expected {} coefficients, got {}", self.width(level), coeffs.len()),
            });
        }
        let bound = self.coeff_bound(level);
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= bound) {
            return Err(GfError::InvalidCoefficient { value: bad, modulus: bound });
        }
        Ok(FieldElement { level, coeffs })
    }

    pub fn zero(&self, level: Level) -> FieldElement {
        FieldElement {
            level,
            coeffs: vec![0; self.width(level)],
        }
    }

    pub fn one(&self, level: Level) -> FieldElement {
        let mut coeffs = vec![0; self.width(level)];
        coeffs[0] = 1;
        FieldElement { level, coeffs }
    }

    /// Image of an integer.
    pub fn from_int(&self, level: Level, v: i64) -> FieldElement {
        let mut x = self.zero(level);
        x.coeffs[0] = self.prime_field().reduce(v);
        x
    }

    pub fn is_zero(&self, x: &FieldElement) -> bool {
        x.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, x: &FieldElement) -> bool {
        x.coeffs[0] == 1 && x.coeffs[1..].iter().all(|&c| c == 0)
    }

    // ---- index / enumeration -------------------------------------------

    /// Position of `x` in the enumeration order of its level.
    pub fn index_of(&self, x: &FieldElement) -> u64 {
        let radix = self.coeff_bound(x.level) as u64;
        x.coeffs.iter().rev().fold(0u64, |acc, &c| acc * radix + c as u64)
    }

    pub fn from_index(&self, level: Level, mut idx: u64) -> FieldElement {
        debug_assert!(idx < self.order(level));
        let radix = self.coeff_bound(level) as u64;
        let coeffs = (0..self.width(level))
            .map(|_| {
                let c = (idx % radix) as u32;
                idx /= radix;
                c
            })
            .collect();
        FieldElement { level, coeffs }
    }

    /// All elements of a level, each exactly once, in index order starting at 0.
    pub fn elements(&self, level: Level) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order(level)).map(move |i| self.from_index(level, i))
    }

    // ---- conversions between levels ------------------------------------

    pub fn base_index(&self, x: &FieldElement) -> u32 {
        assert_eq!(x.level, Level::Base);
        self.base.from_digits(&x.coeffs)
    }

    pub fn base_from_index(&self, idx: u32) -> FieldElement {
        FieldElement {
            level: Level::Base,
            coeffs: self.base.digits(idx),
        }
    }

    /// Top-level element with the given base-index coordinates in the power basis.
    pub fn top_from_coords(&self, coords: Vec<u32>) -> FieldElement {
        debug_assert_eq!(coords.len(), self.m);
        FieldElement {
            level: Level::Top,
            coeffs: coords,
        }
    }

    /// Coordinates of a top element in the power basis `1, x, .., x^{m-1}`.
    pub fn top_coords<'a>(&self, x: &'a FieldElement) -> &'a [u32] {
        assert_eq!(x.level, Level::Top);
        &x.coeffs
    }

    /// Canonical embedding into a higher level.
    pub fn embed(&self, x: &FieldElement, to: Level) -> FieldElement {
        assert!(x.level <= to, "cannot embed {:?} into {:?}", x.level, to);
        let mut cur = x.clone();
        while cur.level < to {
            cur = match cur.level {
                Level::Prime => {
                    let mut coeffs = vec![0; self.e()];
                    coeffs[0] = cur.coeffs[0];
                    FieldElement {
                        level: Level::Base,
                        coeffs,
                    }
                }
                Level::Base => {
                    let mut coeffs = vec![0; self.m];
                    coeffs[0] = self.base.from_digits(&cur.coeffs);
                    FieldElement {
                        level: Level::Top,
                        coeffs,
                    }
                }
                Level::Top => unreachable!(),
            };
        }
        cur
    }

    /// Inverse of [`embed`](Self::embed) into the base level: `Some` iff the
    /// top element has only a constant coordinate.
    pub fn top_to_base(&self, x: &FieldElement) -> Option<FieldElement> {
        assert_eq!(x.level, Level::Top);
        if x.coeffs[1..].iter().any(|&c| c != 0) {
            return None;
        }
        Some(self.base_from_index(x.coeffs[0]))
    }

    // ---- arithmetic ----------------------------------------------------

    fn check_same(&self, a: &FieldElement, b: &FieldElement) -> Result<(), GfError> {
        if a.level != b.level {
            Err(GfError::LevelMismatch(a.level, b.level))
        } else {
            Ok(())
        }
    }

    /// Checked arithmetic entry point.
    pub fn arith(&self, a: &FieldElement, b: Option<&FieldElement>, op: ArithOp) -> Result<FieldElement, GfError> {
        let need_b = |b: Option<&FieldElement>| -> Result<FieldElement, GfError> {
            let b = b.ok_or_else(|| GfError::MalformedElement {
                level: a.level,
                reason: "binary operation needs two operands".into(),
            })?;
            self.check_same(a, b)?;
            Ok(b.clone())
        };
        match op {
            ArithOp::Add => Ok(self.add(a, &need_b(b)?)),
            ArithOp::Sub => Ok(self.sub(a, &need_b(b)?)),
            ArithOp::Mul => Ok(self.mul(a, &need_b(b)?)),
            ArithOp::Div => {
                let b = need_b(b)?;
                let inv = self.inv(&b).ok_or(GfError::DivisionByZero)?;
                Ok(self.mul(a, &inv))
            }
            ArithOp::Inv => self.inv(a).ok_or(GfError::DivisionByZero),
            ArithOp::Pow(k) => Ok(self.pow(a, k)),
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        assert_eq!(a.level, b.level, "level mismatch");
        let coeffs = match a.level {
            Level::Prime | Level::Base => {
                let f = self.prime_field();
                a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f.add(x, y)).collect()
            }
            Level::Top => a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.base.add(x, y)).collect(),
        };
        FieldElement { level: a.level, coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = match a.level {
            Level::Prime | Level::Base => {
                let f = self.prime_field();
                a.coeffs.iter().map(|x| f.neg(x)).collect()
            }
            Level::Top => a.coeffs.iter().map(|x| self.base.neg(x)).collect(),
        };
        FieldElement { level: a.level, coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        assert_eq!(a.level, b.level, "level mismatch");
        match a.level {
            Level::Prime => FieldElement {
                level: Level::Prime,
                coeffs: vec![self.prime_field().mul(&a.coeffs[0], &b.coeffs[0])],
            },
            Level::Base => {
                let ia = self.base.from_digits(&a.coeffs);
                let ib = self.base.from_digits(&b.coeffs);
                self.base_from_index(self.base.mul(&ia, &ib))
            }
            Level::Top => {
                let r = poly::mulmod(&self.base, &a.coeffs, &b.coeffs, &self.top_poly);
                self.pad_top(r)
            }
        }
    }

    fn pad_top(&self, mut r: Vec<u32>) -> FieldElement {
        r.resize(self.m, 0);
        FieldElement {
            level: Level::Top,
            coeffs: r,
        }
    }

    /// `None` for zero. Top-level inverses use the extended Euclidean algorithm.
    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if self.is_zero(a) {
            return None;
        }
        match a.level {
            Level::Prime => Some(FieldElement {
                level: Level::Prime,
                coeffs: vec![self.prime_field().inv(&a.coeffs[0])?],
            }),
            Level::Base => {
                let ia = self.base.from_digits(&a.coeffs);
                Some(self.base_from_index(self.base.inv(&ia)?))
            }
            Level::Top => {
                let r = poly::inv_mod(&self.base, &a.coeffs, &self.top_poly)?;
                Some(self.pad_top(r))
            }
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.arith(a, Some(b), ArithOp::Div)
    }

    pub fn square(&self, a: &FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut result = self.one(a.level);
        let mut b = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(&result, &b);
            }
            exp >>= 1;
            if exp > 0 {
                b = self.mul(&b, &b);
            }
        }
        result
    }

    /// Relative Frobenius `x -> x^{q^k}` on the top level, computed as `e*k`
    /// successive `p`-th powers.
    pub fn frobenius(&self, x: &FieldElement, k: usize) -> FieldElement {
        assert_eq!(x.level, Level::Top, "frobenius acts on the top level");
        let p = self.p() as u64;
        let steps = (k % self.m) * self.e();
        let mut y = x.clone();
        for _ in 0..steps {
            y = self.pow(&y, p);
        }
        y
    }

    /// `Tr_{L/F}` or `N_{L/F}` of a top element, returned at the base level.
    pub fn trace_norm(&self, x: &FieldElement, kind: TraceNorm) -> Result<FieldElement, GfError> {
        assert_eq!(x.level, Level::Top);
        let mut acc = match kind {
            TraceNorm::Trace => self.zero(Level::Top),
            TraceNorm::Norm => self.one(Level::Top),
        };
        let mut conj = x.clone();
        for _ in 0..self.m {
            acc = match kind {
                TraceNorm::Trace => self.add(&acc, &conj),
                TraceNorm::Norm => self.mul(&acc, &conj),
            };
            conj = self.frobenius(&conj, 1);
        }
        if self.frobenius(&acc, 1) != acc {
            return Err(GfError::Inconsistent(format!("{kind:?} of {x} is not Frobenius-fixed")));
        }
        self.top_to_base(&acc)
            .ok_or_else(|| GfError::Inconsistent(format!("{kind:?} of {x} is not a base element")))
    }

    pub fn trace(&self, x: &FieldElement) -> FieldElement {
        self.trace_norm(x, TraceNorm::Trace).expect("trace lands in the base field")
    }

    pub fn norm(&self, x: &FieldElement) -> FieldElement {
        self.trace_norm(x, TraceNorm::Norm).expect("norm lands in the base field")
    }

    // ---- deterministic searches ----------------------------------------

    /// First top element (in enumeration order) with `x^2 = -1`.
    pub fn find_sqrt_minus_one(&self) -> Result<FieldElement, GfError> {
        if self.p() == 2 {
            return Err(GfError::EvenCharacteristic);
        }
        let minus_one = self.from_int(Level::Top, -1);
        self.elements(Level::Top)
            .find(|x| self.square(x) == minus_one)
            .ok_or(GfError::NoSquareRootOfMinusOne)
    }

    /// Characteristic 2 only: returns `(alpha, c)` where `c ∈ F_q` is the first
    /// element of absolute trace 1 and `alpha` is the first top element with
    /// `alpha^2 + alpha = c`. The identity `alpha^q = alpha + 1` is checked.
    pub fn find_artin_schreier(&self) -> Result<(FieldElement, FieldElement), GfError> {
        if self.p() != 2 {
            return Err(GfError::NoSuchElement("Artin-Schreier generator needs characteristic 2".into()));
        }
        if !self.m.is_multiple_of(2) {
            return Err(GfError::NoSuchElement(format!(
                "top degree {} is odd, so L has no quadratic subextension over F_q",
                self.m
            )));
        }
        let c_idx = (0..self.base.order())
            .find(|&c| self.base.absolute_trace(c) == 1)
            .ok_or_else(|| GfError::Inconsistent("no element of absolute trace 1".into()))?;
        let c = self.base_from_index(c_idx);
        let c_top = self.embed(&c, Level::Top);
        let alpha = self
            .elements(Level::Top)
            .find(|a| self.add(&self.square(a), a) == c_top)
            .ok_or_else(|| GfError::Inconsistent("x^2 + x = c has no root in L".into()))?;
        let shifted = self.add(&alpha, &self.one(Level::Top));
        if self.frobenius(&alpha, 1) != shifted {
            return Err(GfError::Inconsistent("alpha^q != alpha + 1".into()));
        }
        Ok((alpha, c))
    }

    /// First top element in enumeration order with norm `delta`.
    pub fn find_norm_preimage(&self, delta: &FieldElement) -> Result<FieldElement, GfError> {
        assert_eq!(delta.level, Level::Base);
        if self.is_zero(delta) {
            return Err(GfError::NotFound("norm preimage of 0 among units".into()));
        }
        self.elements(Level::Top)
            .skip(1)
            .find(|x| &self.norm(x) == delta)
            .ok_or_else(|| GfError::Inconsistent(format!("norm map misses {delta}")))
    }

    /// Whether `x` lies in `F_{q^d}`, i.e. `x^{q^d} = x`.
    pub fn subfield_membership(&self, x: &FieldElement, d: usize) -> Result<bool, GfError> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(GfError::NotADivisor { d, m: self.m });
        }
        Ok(&self.frobenius(x, d) == x)
    }
}

/// One level of a tower viewed as a [`FieldOps`] instance.
#[derive(Debug, Clone, Copy)]
pub struct LevelField<'a> {
    pub tower: &'a FieldTower,
    pub level: Level,
}

impl<'a> LevelField<'a> {
    pub fn new(tower: &'a FieldTower, level: Level) -> Self {
        Self { tower, level }
    }
}

impl FieldOps for LevelField<'_> {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        self.tower.zero(self.level)
    }
    fn one(&self) -> FieldElement {
        self.tower.one(self.level)
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.tower.add(a, b)
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.tower.sub(a, b)
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        self.tower.neg(a)
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.tower.mul(a, b)
    }
    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        self.tower.inv(a)
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        self.tower.is_zero(a)
    }
    fn characteristic(&self) -> u32 {
        self.tower.p()
    }
}
