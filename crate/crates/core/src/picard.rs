//! Picard lattice of the Hirzebruch surface `F_h`.
//!
//! `Pic(F_h)` is free of rank 2 on the negative section `e` (with
//! `e^2 = -h`) and the fiber `f`, paired by `e.f = 1`, `f^2 = 0`. On
//! `F_1`, the blowup of the plane at a point, the same basis is written
//! `(E, F)` with `E` the exceptional curve and `H = E + F` the pullback
//! of a line; we identify the two notations and keep one code path for
//! every `h >= 0`.
//!
//! Coefficients are arbitrary-precision integers so parameter sweeps can
//! never overflow silently.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::Zero;

use crate::Int;

/// The rational ruled surface with a section of self-intersection `-h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HirzebruchSurface {
    h: u32,
}

impl HirzebruchSurface {
    pub fn new(h: u32) -> Self {
        HirzebruchSurface { h }
    }

    /// The blowup of the plane at one point.
    pub fn f1() -> Self {
        HirzebruchSurface { h: 1 }
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    /// Intersection pairing in the (negative section, fiber) basis:
    /// `(a1 e + b1 f).(a2 e + b2 f) = -h a1 a2 + a1 b2 + a2 b1`.
    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Int {
        let h = Int::from(self.h);
        -h * &d1.sigma * &d2.sigma + &d1.sigma * &d2.phi + &d2.sigma * &d1.phi
    }

    /// Canonical class `K = -2e - (h+2)f`.
    pub fn canonical(&self) -> DivisorClass {
        DivisorClass::new(-2, -(Int::from(self.h) + 2))
    }

    /// Arithmetic genus `D.(D+K)/2 + 1` of a curve of class `D`.
    ///
    /// The numerator is even on every rank-2 lattice of this shape; the
    /// division is asserted exact anyway.
    pub fn arithmetic_genus(&self, d: &DivisorClass) -> Int {
        let k = self.canonical();
        let num = self.intersect(d, d) + self.intersect(d, &k);
        assert!(num.is_even(), "adjunction parity violated for {d} on F_{}", self.h);
        num / 2 + 1
    }

    /// Euler characteristic `chi(O(D)) = 1 + D.(D-K)/2` by Riemann-Roch
    /// (`chi(O) = 1` on a rational surface).
    pub fn riemann_roch_chi(&self, d: &DivisorClass) -> Int {
        let k = self.canonical();
        let num = self.intersect(d, d) - self.intersect(d, &k);
        assert!(num.is_even(), "Riemann-Roch parity violated for {d} on F_{}", self.h);
        num / 2 + 1
    }
}

/// Element of `Pic(F_h)` in the (negative section, fiber) basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    /// Coefficient of the negative section class.
    pub sigma: Int,
    /// Coefficient of the fiber class.
    pub phi: Int,
}

impl DivisorClass {
    pub fn new(sigma: impl Into<Int>, phi: impl Into<Int>) -> Self {
        DivisorClass { sigma: sigma.into(), phi: phi.into() }
    }

    /// The negative section itself.
    pub fn negative_section() -> Self {
        DivisorClass::new(1, 0)
    }

    /// The fiber class.
    pub fn fiber() -> Self {
        DivisorClass::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.sigma.is_zero() && self.phi.is_zero()
    }

    pub fn scaled(&self, n: impl Into<Int>) -> Self {
        let n = n.into();
        DivisorClass { sigma: &self.sigma * &n, phi: &self.phi * n }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sigma, self.phi)
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass { sigma: &self.sigma + &rhs.sigma, phi: &self.phi + &rhs.phi }
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass { sigma: &self.sigma - &rhs.sigma, phi: &self.phi - &rhs.phi }
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass { sigma: -&self.sigma, phi: -&self.phi }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: i64, p: i64) -> DivisorClass {
        DivisorClass::new(s, p)
    }

    #[test]
    fn pairing_values() {
        let f1 = HirzebruchSurface::f1();
        // branch class against a fiber: 4 branch points
        assert_eq!(f1.intersect(&d(4, 8), &d(0, 1)), Int::from(4));
        // defining relation E^2 = -1
        assert_eq!(f1.intersect(&d(1, 0), &d(1, 0)), Int::from(-1));
        // bidegree pairing on F_0
        let f0 = HirzebruchSurface::new(0);
        assert_eq!(f0.intersect(&d(3, 1), &d(3, 2)), Int::from(9));
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(HirzebruchSurface::f1().canonical(), d(-2, -3));
        assert_eq!(HirzebruchSurface::new(0).canonical(), d(-2, -2));
        assert_eq!(HirzebruchSurface::new(5).canonical(), d(-2, -7));
    }

    #[test]
    fn canonical_is_the_unique_small_class_with_rational_rulings() {
        // Independent oracle: K is pinned by adjunction-genus 0 on both the
        // negative section and the fiber; brute-force the small lattice box.
        for h in [0u32, 1, 2, 5, 11] {
            let s = HirzebruchSurface::new(h);
            let mut found = Vec::new();
            for a in -20i64..=20 {
                for b in -20i64..=20 {
                    let k = d(a, b);
                    let genus_on = |c: &DivisorClass| {
                        let num = s.intersect(c, c) + s.intersect(c, &k);
                        if num.is_even() {
                            Some(num / 2 + Int::from(1))
                        } else {
                            None
                        }
                    };
                    let ge = genus_on(&DivisorClass::negative_section());
                    let gf = genus_on(&DivisorClass::fiber());
                    if ge == Some(Int::zero()) && gf == Some(Int::zero()) {
                        found.push(k);
                    }
                }
            }
            assert_eq!(found, vec![s.canonical()], "h = {h}");
        }
    }

    #[test]
    fn arithmetic_genus_values() {
        let f1 = HirzebruchSurface::f1();
        // branch curve at e = 4: p_a = 6e - 9
        assert_eq!(f1.arithmetic_genus(&d(4, 8)), Int::from(15));
        // fibers are rational
        assert_eq!(f1.arithmetic_genus(&d(0, 1)), Int::from(0));
        // (3,1) on F_0: Gbar^2 = 6, Gbar.K = -8, genus 0
        let f0 = HirzebruchSurface::new(0);
        assert_eq!(f0.arithmetic_genus(&d(3, 1)), Int::from(0));
    }

    #[test]
    fn adjunction_on_rulings_for_all_small_h() {
        for h in 0..=50 {
            let s = HirzebruchSurface::new(h);
            assert_eq!(s.arithmetic_genus(&DivisorClass::negative_section()), Int::zero());
            assert_eq!(s.arithmetic_genus(&DivisorClass::fiber()), Int::zero());
        }
    }

    #[test]
    fn riemann_roch_values() {
        assert_eq!(HirzebruchSurface::new(7).riemann_roch_chi(&d(0, 0)), Int::from(1));
        // (3,2) on F_0: monomial count (3+1)(2+1)
        assert_eq!(HirzebruchSurface::new(0).riemann_roch_chi(&d(3, 2)), Int::from(12));
        // (1,2) on F_1: five monomials
        assert_eq!(HirzebruchSurface::f1().riemann_roch_chi(&d(1, 2)), Int::from(5));
    }

    #[test]
    fn class_arithmetic() {
        let a = d(4, 8);
        let b = d(-2, -3);
        assert_eq!(&a + &b, d(2, 5));
        assert_eq!(&a - &b, d(6, 11));
        assert_eq!(-&b, d(2, 3));
        assert_eq!(b.scaled(2), d(-4, -6));
    }
}
