//! Dense univariate polynomials over any [`FieldOps`], stored constant term
//! first. Only what the tower needs: reduction, modular powers, gcd and the
//! irreducibility test.

use super::ops::FieldOps;

pub(crate) fn trim<F: FieldOps>(f: &F, a: &mut Vec<F::Elem>) {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
}

pub(crate) fn degree<F: FieldOps>(f: &F, a: &[F::Elem]) -> Option<usize> {
    a.iter().rposition(|c| !f.is_zero(c))
}

pub(crate) fn sub<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let len = a.len().max(b.len());
    let zero = f.zero();
    let mut out: Vec<F::Elem> = (0..len)
        .map(|i| f.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(f, &mut out);
    out
}

pub(crate) fn mul<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &t);
        }
    }
    trim(f, &mut out);
    out
}

/// Remainder of `a` modulo a nonzero polynomial `m`.
pub(crate) fn rem<F: FieldOps>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
    let dm = degree(f, m).expect("modulus must be nonzero");
    let lead_inv = f.inv(&m[dm]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(f, &mut r);
    while let Some(dr) = degree(f, &r) {
        if dr < dm {
            break;
        }
        let factor = f.mul(&r[dr], &lead_inv);
        let shift = dr - dm;
        for (i, c) in m.iter().enumerate().take(dm + 1) {
            let t = f.mul(&factor, c);
            r[i + shift] = f.sub(&r[i + shift], &t);
        }
        trim(f, &mut r);
    }
    r
}

pub(crate) fn mulmod<F: FieldOps>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    m: &[F::Elem],
) -> Vec<F::Elem> {
    rem(f, &mul(f, a, b), m)
}

pub(crate) fn powmod<F: FieldOps>(f: &F, base: &[F::Elem], mut exp: u64, m: &[F::Elem]) -> Vec<F::Elem> {
    let mut result = vec![f.one()];
    let mut b = rem(f, base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(f, &result, &b, m);
        }
        exp >>= 1;
        if exp > 0 {
            b = mulmod(f, &b, &b, m);
        }
    }
    rem(f, &result, m)
}

/// Monic gcd (empty for gcd(0, 0)).
pub(crate) fn gcd<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(f, &x) {
        let inv = f.inv(&x[d]).unwrap();
        for c in x.iter_mut() {
            *c = f.mul(c, &inv);
        }
    }
    x
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub(crate) fn inv_mod<F: FieldOps>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let mut r0 = m.to_vec();
    let mut r1 = rem(f, a, m);
    trim(f, &mut r0);
    let mut t0: Vec<F::Elem> = Vec::new();
    let mut t1: Vec<F::Elem> = vec![f.one()];
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    // r0 is the gcd; invertible iff it is a nonzero constant
    if degree(f, &r0) != Some(0) {
        return None;
    }
    let c = f.inv(&r0[0])?;
    let out: Vec<F::Elem> = t0.iter().map(|t| f.mul(t, &c)).collect();
    Some(rem(f, &out, m))
}

fn divrem<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(f, b).expect("division by zero polynomial");
    let lead_inv = f.inv(&b[db]).unwrap();
    let mut r = a.to_vec();
    trim(f, &mut r);
    let mut q = vec![f.zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(f, &r) {
        if dr < db {
            break;
        }
        let factor = f.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        q[shift] = f.add(&q[shift], &factor);
        for (i, c) in b.iter().enumerate().take(db + 1) {
            let t = f.mul(&factor, c);
            r[i + shift] = f.sub(&r[i + shift], &t);
        }
        trim(f, &mut r);
    }
    trim(f, &mut q);
    (q, r)
}

/// Rabin-style test: a polynomial of degree `d` over a field with `r` elements
/// is irreducible iff it shares no factor with `x^{r^i} - x` for `1 <= i <= d/2`.
pub(crate) fn is_irreducible<F: FieldOps>(f: &F, poly: &[F::Elem], field_size: u64) -> bool {
    let Some(d) = degree(f, poly) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    let x = vec![f.zero(), f.one()];
    let mut h = rem(f, &x, poly);
    for _ in 1..=d / 2 {
        h = powmod(f, &h, field_size, poly);
        let g = gcd(f, poly, &sub(f, &h, &x));
        if degree(f, &g).is_some_and(|dg| dg > 0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::ops::PrimeField;

    fn has_root(p: u32, poly: &[u32]) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for c in poly.iter().rev() {
                acc = (acc * x as u64 + *c as u64) % p as u64;
            }
            acc == 0
        })
    }

    #[test]
    fn low_degree_irreducibility_matches_root_test() {
        // degree 2 and 3: irreducible iff no root
        for p in [2u32, 3, 5] {
            let f = PrimeField::new(p);
            for d in 2..=3usize {
                let count = (p as usize).pow(d as u32);
                for idx in 0..count {
                    let mut poly = Vec::new();
                    let mut t = idx;
                    for _ in 0..d {
                        poly.push((t % p as usize) as u32);
                        t /= p as usize;
                    }
                    poly.push(1);
                    assert_eq!(is_irreducible(&f, &poly, p as u64), !has_root(p, &poly), "{poly:?} mod {p}");
                }
            }
        }
    }

    #[test]
    fn quartic_product_of_quadratics_is_reducible() {
        let f = PrimeField::new(2);
        // (x^2+x+1)^2 = x^4+x^2+1 has no root but is reducible
        assert!(!is_irreducible(&f, &[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&f, &[1, 1, 0, 0, 1], 2));
    }

    #[test]
    fn inverse_mod_poly() {
        let f = PrimeField::new(3);
        let m = [1, 0, 1]; // x^2 + 1
        let a = [0, 1]; // x
        let inv = inv_mod(&f, &a, &m).unwrap();
        assert_eq!(inv, vec![0, 2]);
        assert_eq!(mulmod(&f, &a, &inv, &m), vec![1]);
    }
}
