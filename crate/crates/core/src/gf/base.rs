use super::ops::{FieldOps, PrimeField};
use super::poly;

/// Largest base field for which full addition/multiplication tables are kept.
const TABLE_LIMIT: u32 = 256;

/// The base field `F_q = F_p[y]/(base_poly)`.
///
/// Elements are addressed by their index `sum_i c_i p^i`, where `c_i` is the
/// coefficient of `y^i`. Index order is the enumeration order of the field.
#[derive(Debug, Clone)]
pub struct BaseField {
    prime: PrimeField,
    e: usize,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl BaseField {
    /// `modulus` is monic of degree `e`, constant term first, and irreducible.
    pub(crate) fn new(prime: PrimeField, modulus: Vec<u32>) -> Self {
        let e = modulus.len() - 1;
        let q = (prime.p() as u64).pow(e as u32);
        assert!(q <= u32::MAX as u64, "base field too large");
        let mut field = Self {
            prime,
            e,
            q: q as u32,
            modulus,
            tables: None,
        };
        if e > 1 && field.q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        field
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for a in 0..q as u32 {
            neg[a as usize] = self.slow_neg(a);
            inv[a as usize] = self.slow_inv(a).unwrap_or(0);
            for b in 0..q as u32 {
                add[a as usize * q + b as usize] = self.slow_add(a, b);
                mul[a as usize * q + b as usize] = self.slow_mul(a, b);
            }
        }
        Tables { add, mul, neg, inv }
    }

    pub fn prime(&self) -> PrimeField {
        self.prime
    }
    pub fn p(&self) -> u32 {
        self.prime.p()
    }
    pub fn degree(&self) -> usize {
        self.e
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn digits(&self, mut idx: u32) -> Vec<u32> {
        let p = self.p();
        (0..self.e)
            .map(|_| {
                let d = idx % p;
                idx /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        let p = self.p();
        digits.iter().rev().fold(0u32, |acc, d| acc * p + d % p)
    }

    /// Image of the prime-field element `v`.
    pub fn from_prime(&self, v: u32) -> u32 {
        v % self.p()
    }

    /// The element `y^i` (power basis vector).
    pub fn basis_element(&self, i: usize) -> u32 {
        self.p().pow(i as u32)
    }

    /// `Some(v)` when the element lies in the prime field.
    pub fn to_prime(&self, a: u32) -> Option<u32> {
        (a < self.p()).then_some(a)
    }

    pub fn pow(&self, a: u32, mut exp: u64) -> u32 {
        let mut result = self.one();
        let mut b = a;
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

    /// Absolute trace `F_q -> F_p`, as a prime-field value.
    pub fn absolute_trace(&self, a: u32) -> u32 {
        let p = self.p() as u64;
        let mut acc = 0;
        let mut conj = a;
        for _ in 0..self.e {
            acc = self.add(&acc, &conj);
            conj = self.pow(conj, p);
        }
        self.to_prime(acc).expect("absolute trace lies in the prime field")
    }

    fn slow_add(&self, a: u32, b: u32) -> u32 {
        let da = self.digits(a);
        let db = self.digits(b);
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| self.prime.add(x, y)).collect();
        self.from_digits(&s)
    }

    fn slow_neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self.digits(a).iter().map(|x| self.prime.neg(x)).collect();
        self.from_digits(&d)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let r = poly::mulmod(&self.prime, &self.digits(a), &self.digits(b), &self.modulus);
        self.from_digits(&r)
    }

    fn slow_inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let r = poly::inv_mod(&self.prime, &self.digits(a), &self.modulus)?;
        Some(self.from_digits(&r))
    }
}

impl FieldOps for BaseField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        if self.e == 1 {
            return self.prime.add(a, b);
        }
        match &self.tables {
            Some(t) => t.add[*a as usize * self.q as usize + *b as usize],
            None => self.slow_add(*a, *b),
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if self.e == 1 {
            return self.prime.sub(a, b);
        }
        let nb = self.neg(b);
        self.add(a, &nb)
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if self.e == 1 {
            return self.prime.neg(a);
        }
        match &self.tables {
            Some(t) => t.neg[*a as usize],
            None => self.slow_neg(*a),
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if self.e == 1 {
            return self.prime.mul(a, b);
        }
        match &self.tables {
            Some(t) => t.mul[*a as usize * self.q as usize + *b as usize],
            None => self.slow_mul(*a, *b),
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        if self.e == 1 {
            return self.prime.inv(a);
        }
        match &self.tables {
            Some(t) => Some(t.inv[*a as usize]),
            None => self.slow_inv(*a),
        }
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u32 {
        self.p()
    }
}
