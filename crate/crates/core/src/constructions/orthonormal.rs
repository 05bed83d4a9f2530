use crate::gf::{FieldElement, FieldTower, Level};
use crate::linalg::{self, Matrix};
use crate::rankcodes::LBasis;

use super::{twisted_trace_gram, ConstructionError, Result};

/// `lambda` and an orthonormal basis for `(x, y) -> Tr_{L/F}(lambda x y)`.
///
/// Odd characteristic: `lambda` is the first element whose norm is the
/// determinant of the plain trace form, which makes the twisted form's
/// determinant a square. Characteristic 2: `lambda = 1`.
pub fn orthonormal_basis_twisted_trace(tower: &FieldTower) -> Result<(FieldElement, LBasis)> {
    let lambda = if tower.p() == 2 {
        tower.one(Level::Top)
    } else {
        let power = LBasis::power_basis(tower);
        let one = tower.one(Level::Top);
        let delta = linalg::det(tower, &twisted_trace_gram(tower, &one, power.elements()))?;
        tower.find_norm_preimage(&delta)?
    };
    let basis = orthonormal_basis(tower, &lambda)?;
    Ok((lambda, basis))
}

/// Orthonormal basis for the twisted trace form with the given `lambda`.
pub fn orthonormal_basis(tower: &FieldTower, lambda: &FieldElement) -> Result<LBasis> {
    if tower.is_zero(lambda) {
        return Err(ConstructionError::PreconditionViolated("lambda must be nonzero".into()));
    }
    let form = Form { tower, lambda };
    let start = LBasis::power_basis(tower).elements().to_vec();
    let vectors = if tower.p() == 2 {
        form.orthonormalize_char2(start)?
    } else {
        form.orthonormalize_odd(start)?
    };
    let basis = LBasis::new(tower, vectors)?;
    let gram = twisted_trace_gram(tower, lambda, basis.elements());
    if gram != Matrix::identity(tower, Level::Base, tower.m()) {
        return Err(ConstructionError::PostconditionFailed("Gram matrix is not the identity".into()));
    }
    Ok(basis)
}

struct Form<'a> {
    tower: &'a FieldTower,
    lambda: &'a FieldElement,
}

impl Form<'_> {
    fn b(&self, u: &FieldElement, v: &FieldElement) -> FieldElement {
        let t = self.tower;
        t.trace(&t.mul(self.lambda, &t.mul(u, v)))
    }

    fn scale(&self, c: &FieldElement, v: &FieldElement) -> FieldElement {
        self.tower.mul(&self.tower.embed(c, Level::Top), v)
    }

    /// First `x` in `F_q` with `x^2 = a`.
    fn sqrt(&self, a: &FieldElement) -> Option<FieldElement> {
        let t = self.tower;
        t.elements(Level::Base).find(|x| &t.square(x) == a)
    }

    /// `w -> w - b(w, v)/b(v, v) v` for every remaining vector.
    fn project_out(&self, rest: &mut [FieldElement], v: &FieldElement, bvv_inv: &FieldElement) {
        let t = self.tower;
        for w in rest.iter_mut() {
            let c = t.mul(&self.b(w, v), bvv_inv);
            *w = t.sub(w, &self.scale(&c, v));
        }
    }

    /// Orthogonal basis with diagonal entries, in odd characteristic.
    fn diagonalize(&self, mut rest: Vec<FieldElement>) -> Result<Vec<(FieldElement, FieldElement)>> {
        let t = self.tower;
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let pick = match (0..rest.len()).find(|&i| !t.is_zero(&self.b(&rest[i], &rest[i]))) {
                Some(i) => i,
                None => {
                    // all remaining vectors isotropic: some pair is not orthogonal
                    let (i, j) = (0..rest.len())
                        .flat_map(|i| (i + 1..rest.len()).map(move |j| (i, j)))
                        .find(|&(i, j)| !t.is_zero(&self.b(&rest[i], &rest[j])))
                        .ok_or_else(|| ConstructionError::PostconditionFailed("form is degenerate".into()))?;
                    rest[i] = t.add(&rest[i], &rest[j]);
                    i
                }
            };
            let v = rest.remove(pick);
            let bvv = self.b(&v, &v);
            let inv = t.inv(&bvv).expect("nonzero");
            self.project_out(&mut rest, &v, &inv);
            out.push((v, bvv));
        }
        Ok(out)
    }

    fn orthonormalize_odd(&self, start: Vec<FieldElement>) -> Result<Vec<FieldElement>> {
        let t = self.tower;
        let diag = self.diagonalize(start)?;
        let mut out: Vec<Option<FieldElement>> = vec![None; diag.len()];
        let mut nonsquares = Vec::new();
        for (k, (v, d)) in diag.iter().enumerate() {
            match self.sqrt(d) {
                Some(r) => out[k] = Some(self.scale(&t.inv(&r).expect("nonzero"), v)),
                None => nonsquares.push(k),
            }
        }
        if nonsquares.len() % 2 != 0 {
            return Err(ConstructionError::PreconditionViolated(
                "the form's determinant is not a square, so no orthonormal basis exists".into(),
            ));
        }
        let one = t.one(Level::Base);
        for pair in nonsquares.chunks(2) {
            let (i, j) = (pair[0], pair[1]);
            let (vi, di) = &diag[i];
            let (vj, dj) = &diag[j];
            // d_i x^2 + d_j y^2 = 1 has a solution: binary forms over F_q are universal
            let (x, y) = t
                .elements(Level::Base)
                .flat_map(|x| t.elements(Level::Base).map(move |y| (x.clone(), y)))
                .find(|(x, y)| t.add(&t.mul(di, &t.square(x)), &t.mul(dj, &t.square(y))) == one)
                .ok_or_else(|| ConstructionError::NotFound("binary form does not represent 1".into()))?;
            let u = t.add(&self.scale(&x, vi), &self.scale(&y, vj));
            let w = t.sub(&self.scale(&t.mul(&y, dj), vi), &self.scale(&t.mul(&x, di), vj));
            let r = self
                .sqrt(&t.mul(di, dj))
                .ok_or_else(|| ConstructionError::NotFound("product of non-squares has no root".into()))?;
            out[i] = Some(u);
            out[j] = Some(self.scale(&t.inv(&r).expect("nonzero"), &w));
        }
        Ok(out.into_iter().map(|v| v.expect("filled")).collect())
    }

    /// Characteristic 2: `b(v, v)` is additive in `v`, so a vector with
    /// `b(v, v) != 0` exists among the basis vectors unless the remaining form
    /// is alternating. In that case a hyperbolic pair `(e, f)` is absorbed by a
    /// previously found unit vector `u`: `u+e, u+f, u+e+f` are orthonormal.
    fn orthonormalize_char2(&self, mut rest: Vec<FieldElement>) -> Result<Vec<FieldElement>> {
        let t = self.tower;
        let mut out: Vec<FieldElement> = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            if let Some(i) = (0..rest.len()).find(|&i| !t.is_zero(&self.b(&rest[i], &rest[i]))) {
                let v = rest.remove(i);
                let r = self.sqrt(&self.b(&v, &v)).expect("squaring is bijective");
                let v = self.scale(&t.inv(&r).expect("nonzero"), &v);
                self.project_out(&mut rest, &v, &t.one(Level::Base));
                out.push(v);
                continue;
            }
            let u = out.pop().ok_or(ConstructionError::AlternatingObstruction)?;
            let e = rest.remove(0);
            let j = (0..rest.len())
                .find(|&j| !t.is_zero(&self.b(&e, &rest[j])))
                .ok_or_else(|| ConstructionError::PostconditionFailed("form is degenerate".into()))?;
            let f = rest.remove(j);
            let f = self.scale(&t.inv(&self.b(&e, &f)).expect("nonzero"), &f);
            for w in rest.iter_mut() {
                let we = self.b(w, &e);
                let wf = self.b(w, &f);
                *w = t.sub(&t.sub(w, &self.scale(&wf, &e)), &self.scale(&we, &f));
            }
            let ue = t.add(&u, &e);
            let uf = t.add(&u, &f);
            let uef = t.add(&ue, &f);
            out.extend([ue, uf, uef]);
        }
        Ok(out)
    }
}
