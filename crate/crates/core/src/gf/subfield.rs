use super::{FieldElement, FieldTower, GfError, Level};
use crate::gf::FieldOps;
use crate::linalg::dense;

/// The intermediate field `M = F_{q^d}` inside `L`, realized as the fixed
/// space of `x -> x^{q^d}` with an explicit `F_q`-basis.
#[derive(Debug, Clone)]
pub struct Subfield {
    d: usize,
    basis: Vec<FieldElement>,
    /// Rows of `Frob^d - I` acting on power-basis coordinates.
    fixed_map: Vec<Vec<u32>>,
}

impl Subfield {
    pub fn new(tower: &FieldTower, d: usize) -> Result<Self, GfError> {
        let m = tower.m();
        if d == 0 || !m.is_multiple_of(d) {
            return Err(GfError::NotADivisor { d, m });
        }
        let base = tower.base_field();
        // column j = coordinates of Frob^d(x^j) - x^j
        let mut map = vec![vec![0u32; m]; m];
        for j in 0..m {
            let mut coords = vec![0u32; m];
            coords[j] = 1;
            let xj = tower.top_from_coords(coords);
            let image = tower.sub(&tower.frobenius(&xj, d), &xj);
            for (i, c) in tower.top_coords(&image).iter().enumerate() {
                map[i][j] = *c;
            }
        }
        let basis: Vec<FieldElement> = dense::kernel(base, &map, m)
            .into_iter()
            .map(|v| tower.top_from_coords(v))
            .collect();
        if basis.len() != d {
            return Err(GfError::Inconsistent(format!(
                "fixed space of Frobenius^{d} has dimension {}",
                basis.len()
            )));
        }
        Ok(Self {
            d,
            basis,
            fixed_map: map,
        })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// `F_q`-basis of the subfield.
    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    /// Linear-map membership test, equivalent to `x^{q^d} = x`.
    pub fn contains(&self, tower: &FieldTower, x: &FieldElement) -> bool {
        let base = tower.base_field();
        let coords = tower.top_coords(x);
        self.fixed_map.iter().all(|row| {
            let s = row
                .iter()
                .zip(coords)
                .fold(0u32, |acc, (a, b)| base.add(&acc, &base.mul(a, b)));
            s == 0
        })
    }

    /// Elements of the subfield in the enumeration order of `L`.
    pub fn elements<'a>(&'a self, tower: &'a FieldTower) -> impl Iterator<Item = FieldElement> + 'a {
        tower.elements(Level::Top).filter(move |x| self.contains(tower, x))
    }

    /// `Tr_{M/F}(x) = sum_{k<d} x^{q^k}` for `x` in the subfield, at the base level.
    pub fn trace(&self, tower: &FieldTower, x: &FieldElement) -> Result<FieldElement, GfError> {
        let mut acc = tower.zero(Level::Top);
        let mut conj = x.clone();
        for _ in 0..self.d {
            acc = tower.add(&acc, &conj);
            conj = tower.frobenius(&conj, 1);
        }
        tower
            .top_to_base(&acc)
            .ok_or_else(|| GfError::Inconsistent(format!("Tr_M/F({x}) is not in F_q")))
    }
}
