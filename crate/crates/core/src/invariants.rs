//! Closed-form invariants of the triple covers `S -> F_1` with split
//! Tschirnhausen bundle `O(-E-xF) + O(-E-yF)`.
//!
//! Everything here depends only on `e = x + y`. The cover surface `S` has
//! `chi(O_S) = 1`, `K^2 = 11 - 3e`, and the branch curve acquires
//! `3c_2 = 3e - 3` cusps; the preimages of the fiber, the negative
//! section and the line class carry the genus bookkeeping that drives the
//! geometric construction.
//!
//! The topological Euler number is computed along two independent routes
//! (the triple-cover formula and Noether's formula) and the two are
//! asserted equal; both give `3e + 1`.

use num_integer::Integer;
use num_traits::One;

use crate::picard::{DivisorClass, HirzebruchSurface};
use crate::{Error, Int, Result};

/// Fiber-degree pair `(x, y)` of the split Tschirnhausen bundle.
///
/// The constructor enforces `x, y >= 2`, `2x > y` and `2y > x`, which is
/// exactly the range where all four section bundles of the cover are very
/// ample; `e = x + y >= 4` follows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TschirnhausenSplit {
    x: Int,
    y: Int,
}

impl TschirnhausenSplit {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> Result<Self> {
        let x: Int = x.into();
        let y: Int = y.into();
        if x < Int::from(2) {
            return Err(Error::Constraint(format!("x >= 2 violated (x = {x})")));
        }
        if y < Int::from(2) {
            return Err(Error::Constraint(format!("y >= 2 violated (y = {y})")));
        }
        if Int::from(2) * &x <= y {
            return Err(Error::Constraint(format!("2x > y violated (x = {x}, y = {y})")));
        }
        if Int::from(2) * &y <= x {
            return Err(Error::Constraint(format!("2y > x violated (x = {x}, y = {y})")));
        }
        Ok(TschirnhausenSplit { x, y })
    }

    pub fn x(&self) -> &Int {
        &self.x
    }

    pub fn y(&self) -> &Int {
        &self.y
    }

    pub fn e(&self) -> Int {
        &self.x + &self.y
    }
}

/// Chern data of the split bundle: `c_1 = -2E - eF`, `c_2 = e - 1`.
pub fn chern_of_split(t: &TschirnhausenSplit) -> (DivisorClass, Int) {
    let e = t.e();
    (DivisorClass::new(-2, -&e), e - 1)
}

/// Numerical invariants of the cover and its distinguished curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInvariants {
    pub e: Int,
    /// `c_1` of the Tschirnhausen bundle.
    pub c1: DivisorClass,
    pub c1_sq: Int,
    pub c1_dot_k: Int,
    pub c2: Int,
    /// `chi(O_S)`.
    pub chi: Int,
    pub k2: Int,
    /// Topological Euler number of `S`.
    pub euler_top: Int,
    /// Number of cusps of the branch curve, `3c_2`.
    pub cusps: Int,
    /// Arithmetic genus of the branch curve.
    pub pa_b: Int,
    /// Geometric genus of the branch curve.
    pub g_b: Int,
    /// Genus of the ramification divisor on `S`.
    pub g_r: Int,
    /// Genus of the preimage of the negative section.
    pub g_g: Int,
    pub g_sq: Int,
    /// Genus of the preimage of the line class.
    pub g_m: Int,
    pub m_sq: Int,
    pub h0_m: Int,
    pub h1_m: Int,
    pub chi_m: Int,
}

/// All invariants of the cover attached to a valid split, in closed form.
pub fn cover_invariants(t: &TschirnhausenSplit) -> CoverInvariants {
    let e = t.e();
    let (c1, c2) = chern_of_split(t);
    let f1 = HirzebruchSurface::f1();
    let c1_sq = f1.intersect(&c1, &c1);
    let c1_dot_k = f1.intersect(&c1, &f1.canonical());

    // chi(O_S) = 3 chi(O_Y) + c1^2/2 - c1.K/2 - c2
    let chi = Int::from(3) + (&c1_sq - &c1_dot_k) / 2 - &c2;
    // K_S^2 = 3 K_Y^2 - 4 c1.K + 2 c1^2 - 3 c2
    let k2 = Int::from(3) * 8 - Int::from(4) * &c1_dot_k + Int::from(2) * &c1_sq
        - Int::from(3) * &c2;
    // e(S) two ways: the triple-cover formula with e(F_1) = 4, and Noether.
    let euler_cover = Int::from(3) * 4 - Int::from(2) * &c1_dot_k + Int::from(4) * &c1_sq
        - Int::from(9) * &c2;
    let euler_noether = Int::from(12) * &chi - &k2;
    assert_eq!(euler_cover, euler_noether, "Euler number routes disagree at e = {e}");

    let cusps = Int::from(3) * &c2;
    let pa_b = f1.arithmetic_genus(&DivisorClass::new(4, Int::from(2) * &e));
    let g_b = &pa_b - &cusps;
    // g(R) = 2 c1^2 - c1.K + 1 - 3 c2
    let g_r = Int::from(2) * &c1_sq - &c1_dot_k + 1 - Int::from(3) * &c2;

    let g_g = riemann_hurwitz_genus(3, &Int::from(0), &(Int::from(2) * &e - 4))
        .expect("section preimage genus");
    let g_m = riemann_hurwitz_genus(3, &Int::from(0), &(Int::from(2) * &e))
        .expect("line preimage genus");
    let h0_m = Int::from(3);
    let h1_m = &e - 4;
    let chi_m = Int::from(7) - &e;
    assert_eq!(chi_m, &h0_m - &h1_m);

    CoverInvariants {
        e,
        c1,
        c1_sq,
        c1_dot_k,
        c2,
        chi,
        k2,
        euler_top: euler_noether,
        cusps,
        pa_b,
        g_b,
        g_r,
        g_g,
        g_sq: Int::from(-3),
        g_m,
        m_sq: Int::from(3),
        h0_m,
        h1_m,
        chi_m,
    }
}

/// Solve `2g - 2 = degree (2 g_0 - 2) + branch_count` for the genus of a
/// degree-`degree` cover of a genus-`g_0` curve.
///
/// Errors on data that would force a fractional or negative genus.
pub fn riemann_hurwitz_genus(degree: u32, base_genus: &Int, branch_count: &Int) -> Result<Int> {
    if degree < 1 {
        return Err(Error::Constraint("cover degree must be >= 1".into()));
    }
    let rhs = Int::from(degree) * (Int::from(2) * base_genus - 2) + branch_count;
    let num = rhs + 2;
    if num.is_odd() {
        return Err(Error::InconsistentRamification);
    }
    let g = num / 2;
    if g < Int::from(0) {
        return Err(Error::InconsistentRamification);
    }
    Ok(g)
}

/// The unique `c_2` making `chi(O_S) = 1` given `c_1 = -2E - eF`.
///
/// Running the triple-cover chi formula backwards pins `c_2 = e - 1`, so
/// a cover with rational total space and this `c_1` has a branch curve
/// with `3e - 3` cusps.
pub fn c2_from_chi_one(e: impl Into<Int>) -> Result<Int> {
    let e: Int = e.into();
    if e < Int::from(4) {
        return Err(Error::Constraint(format!("e >= 4 violated (e = {e})")));
    }
    let f1 = HirzebruchSurface::f1();
    let c1 = DivisorClass::new(-2, -&e);
    let c1_sq = f1.intersect(&c1, &c1);
    let c1_dot_k = f1.intersect(&c1, &f1.canonical());
    // 1 = 3 + c1^2/2 - c1.K/2 - c2
    Ok(Int::from(3) + (c1_sq - c1_dot_k) / 2 - Int::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(x: i64, y: i64) -> TschirnhausenSplit {
        TschirnhausenSplit::new(x, y).unwrap()
    }

    #[test]
    fn split_constraints() {
        assert!(TschirnhausenSplit::new(2, 2).is_ok());
        assert!(TschirnhausenSplit::new(1, 2).is_err());
        assert!(TschirnhausenSplit::new(2, 1).is_err());
        // 2x > y fails
        assert!(TschirnhausenSplit::new(2, 5).is_err());
        assert!(TschirnhausenSplit::new(5, 2).is_err());
        assert!(TschirnhausenSplit::new(3, 5).is_ok());
    }

    #[test]
    fn chern_values() {
        assert_eq!(chern_of_split(&split(2, 2)), (DivisorClass::new(-2, -4), Int::from(3)));
        assert_eq!(chern_of_split(&split(2, 3)), (DivisorClass::new(-2, -5), Int::from(4)));
        assert_eq!(chern_of_split(&split(3, 3)), (DivisorClass::new(-2, -6), Int::from(5)));
    }

    #[test]
    fn invariants_at_e4() {
        let inv = cover_invariants(&split(2, 2));
        assert_eq!(inv.chi, Int::from(1));
        assert_eq!(inv.k2, Int::from(-1));
        assert_eq!(inv.euler_top, Int::from(13));
        assert_eq!(inv.cusps, Int::from(9));
        assert_eq!(inv.pa_b, Int::from(15));
        assert_eq!(inv.g_b, Int::from(6));
        assert_eq!(inv.g_g, Int::from(0));
        assert_eq!(inv.g_m, Int::from(2));
        assert_eq!(inv.h0_m, Int::from(3));
        assert_eq!(inv.h1_m, Int::from(0));
    }

    #[test]
    fn invariants_at_e5() {
        let inv = cover_invariants(&split(2, 3));
        assert_eq!(inv.k2, Int::from(-4));
        assert_eq!(inv.cusps, Int::from(12));
        assert_eq!(inv.g_g, Int::from(1));
        assert_eq!(inv.chi_m, Int::from(2));
        assert_eq!(inv.h1_m, Int::from(1));
    }

    #[test]
    fn noether_at_e7() {
        let inv = cover_invariants(&split(3, 4));
        assert_eq!(inv.euler_top, Int::from(22));
        assert_eq!(Int::from(12) * &inv.chi, &inv.k2 + &inv.euler_top);
    }

    #[test]
    fn invariants_depend_only_on_e() {
        assert_eq!(cover_invariants(&split(2, 5)), cover_invariants(&split(3, 4)));
    }

    #[test]
    fn riemann_hurwitz_cases() {
        // triple cover of a line branched at 4 points is rational
        assert_eq!(riemann_hurwitz_genus(3, &Int::from(0), &Int::from(4)).unwrap(), Int::from(0));
        // 2e branch points at e = 4 give genus e - 2
        assert_eq!(riemann_hurwitz_genus(3, &Int::from(0), &Int::from(8)).unwrap(), Int::from(2));
        // unramified degree-1 cover keeps the genus
        assert_eq!(riemann_hurwitz_genus(1, &Int::from(7), &Int::from(0)).unwrap(), Int::from(7));
        // odd branch count over genus 0 is inconsistent
        assert!(riemann_hurwitz_genus(3, &Int::from(0), &Int::from(3)).is_err());
        // negative genus is inconsistent
        assert!(riemann_hurwitz_genus(3, &Int::from(0), &Int::from(-4)).is_err());
    }

    #[test]
    fn c2_recovery() {
        assert_eq!(c2_from_chi_one(4).unwrap(), Int::from(3));
        assert_eq!(c2_from_chi_one(10).unwrap(), Int::from(9));
        assert!(c2_from_chi_one(3).is_err());
        // consistency with the forward Chern computation
        assert_eq!(c2_from_chi_one(4).unwrap(), chern_of_split(&split(2, 2)).1);
    }

    #[test]
    fn identity_sweep() {
        for e in 4..=200i64 {
            let x = e / 2;
            let y = e - x;
            let inv = cover_invariants(&split(x, y));
            assert_eq!(Int::from(12) * &inv.chi, &inv.k2 + &inv.euler_top);
            assert_eq!(inv.g_b, &inv.pa_b - &inv.cusps);
            assert_eq!(inv.g_r, inv.g_b);
            assert_eq!(inv.chi_m, &inv.h0_m - &inv.h1_m);
            assert_eq!(inv.chi_m, Int::from(7 - e));
            let rh_g = riemann_hurwitz_genus(3, &Int::from(0), &Int::from(2 * e - 4)).unwrap();
            let rh_m = riemann_hurwitz_genus(3, &Int::from(0), &Int::from(2 * e)).unwrap();
            assert_eq!(rh_g, inv.g_g);
            assert_eq!(rh_m, inv.g_m);
            assert_eq!(c2_from_chi_one(e).unwrap(), inv.c2);
        }
    }
}
