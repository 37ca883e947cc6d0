//! Univariate polynomials over a generic coefficient scalar.
//!
//! The exact instantiation `UniPoly<Rat>` is the public face of the
//! univariate layer (eliminants, restrictions, parametrizations); the
//! heavy gcd work is delegated to the integer kernel after clearing
//! denominators. The generic Euclidean gcd here stays as the small-input
//! route and as an independent cross-check of the modular one.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::intpoly::{modular_gcd, IntPoly};
use crate::scalar::Coeff;
use crate::{Int, Rat, Result};

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`, no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Coeff> UniPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().map(Zero::is_zero) == Some(true) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![S::one()] }
    }

    pub fn constant(c: S) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn var() -> Self {
        UniPoly { coeffs: vec![S::zero(), S::one()] }
    }

    /// `c * x^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> &S {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![S::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c.clone();
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::from_usize(i).expect("small index"))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = S::one() / self.leading().clone();
        self.scale(&inv)
    }

    /// Euclidean division over the coefficient field.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let dr = rhs.coeffs.len() - 1;
        if self.coeffs.len() < rhs.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![S::zero(); self.coeffs.len() - dr];
        let inv = S::one() / rhs.leading().clone();
        for i in (dr..rem.len()).rev() {
            let c = rem[i].clone() * inv.clone();
            if c.is_zero() {
                continue;
            }
            quot[i - dr] = c.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = c.clone() * b.clone();
                rem[i - dr + j] -= t;
            }
        }
        rem.truncate(dr);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Remainder modulo `m`.
    pub fn rem(&self, m: &Self) -> Self {
        self.div_rem(m).1
    }

    /// Plain Euclidean gcd, monic. Exact only over an exact scalar; kept
    /// generic as the small-input route and the oracle for the modular
    /// path.
    pub fn euclid_gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl UniPoly<Rat> {
    /// Clear denominators: returns the primitive integer polynomial and
    /// does not keep the (irrelevant for roots) rational unit.
    pub fn clear_denominators(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut den = Int::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        IntPoly::new(
            self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect(),
        )
        .primitive()
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        UniPoly::new(p.coeffs.iter().map(|c| Rat::from(c.clone())).collect())
    }

    /// Monic gcd over the rationals, via the certified modular kernel.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(rhs.monic());
        }
        if rhs.is_zero() {
            return Ok(self.monic());
        }
        let g = modular_gcd(&self.clear_denominators(), &rhs.clear_denominators())?;
        Ok(UniPoly::from_int_poly(&g).monic())
    }

    /// Monic squarefree part over the rationals.
    pub fn squarefree_part(&self) -> Result<Self> {
        assert!(!self.is_zero(), "squarefree part of zero");
        let f = self.clear_denominators();
        Ok(UniPoly::from_int_poly(&f.squarefree_part()?).monic())
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        self.clear_denominators().is_squarefree()
    }

    pub fn to_f64(&self) -> UniPoly<f64> {
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let n = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
                    let d = c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
                    n / d
                })
                .collect(),
        )
    }
}

/// Extended Euclid over the rationals: returns `(g, s, t)` monic with
/// `g = gcd(a, b) = s a + t b`.
pub fn extended_gcd(a: &UniPoly<Rat>, b: &UniPoly<Rat>) -> (UniPoly<Rat>, UniPoly<Rat>, UniPoly<Rat>) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = UniPoly::one();
    let mut s1 = UniPoly::zero();
    let mut t0 = UniPoly::zero();
    let mut t1 = UniPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let lead = r0.leading().clone();
    let inv = Rat::one() / lead;
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::new(coeffs.iter().map(|c| Rat::from(Int::from(*c))).collect())
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = q(&[1, 2, 3]);
        let b = q(&[0, -1]);
        assert_eq!(a.mul(&b), q(&[0, -1, -2, -3]));
        assert_eq!(a.add(&b), q(&[1, 1, 3]));
        let two = Rat::from(Int::from(2));
        assert_eq!(a.eval(&two), Rat::from(Int::from(17)));
        assert_eq!(a.derivative(), q(&[2, 6]));
    }

    #[test]
    fn division_invariant() {
        let a = q(&[3, 1, 4, 1, 5]);
        let b = q(&[2, 0, 1]);
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn gcd_routes_agree() {
        // (x^2+1)(x-3) and (x^2+1)(x+5)
        let common = q(&[1, 0, 1]);
        let a = common.mul(&q(&[-3, 1]));
        let b = common.mul(&q(&[5, 1]));
        let euclid = a.euclid_gcd(&b);
        let modular = a.gcd(&b).unwrap();
        assert_eq!(euclid, modular);
        assert_eq!(modular, common.monic());
    }

    #[test]
    fn squarefree_part_strips_powers() {
        let a = q(&[0, 0, 1]); // x^2
        assert_eq!(a.squarefree_part().unwrap(), q(&[0, 1]));
        assert!(!a.is_squarefree().unwrap());
        assert!(q(&[0, 1]).is_squarefree().unwrap());
    }

    #[test]
    fn denominator_clearing_is_primitive() {
        let a = UniPoly::new(vec![
            Rat::new(Int::from(1), Int::from(2)),
            Rat::new(Int::from(3), Int::from(4)),
        ]);
        let z = a.clear_denominators();
        assert_eq!(z, IntPoly::from_i64(&[2, 3]));
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = q(&[-1, 0, 1]); // (x-1)(x+1)
        let b = q(&[2, 1]);
        let (g, s, t) = extended_gcd(&a, &b);
        assert_eq!(g, UniPoly::one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), UniPoly::one());
    }
}
