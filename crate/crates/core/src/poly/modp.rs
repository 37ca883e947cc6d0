//! Word-size prime fields and dense polynomials over them.
//!
//! The exact kernel computes resultants, gcds and squarefree splittings
//! of integer polynomials modulo a pool of 62-bit primes and lifts the
//! results back with CRT. Primes stay below `2^62` so that products fit
//! in `u128`.

/// Pool of 62-bit primes for CRT reconstruction, largest first.
pub const PRIMES: &[u64] = &[
    include!("modp_primes.inc")
];

/// Arithmetic modulo a fixed odd prime `p < 2^62`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        PrimeField { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b; // < 2^63, no overflow
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat; `a` must be nonzero.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.p - 2)
    }

    /// Reduce a signed machine integer.
    pub fn from_i64(&self, a: i64) -> u64 {
        let r = a.rem_euclid(self.p as i64);
        r as u64
    }
}

/// Dense polynomial over `F_p`; `coeffs[i]` multiplies `x^i`, no trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    pub field: PrimeField,
    pub coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        ModPoly { field, coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), *c);
        }
        acc
    }

    pub fn scale(&self, c: u64) -> ModPoly {
        let f = self.field;
        ModPoly::new(f, self.coeffs.iter().map(|a| f.mul(*a, c)).collect())
    }

    pub fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    pub fn derivative(&self) -> ModPoly {
        let f = self.field;
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(f);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(*c, (i as u64) % f.p))
            .collect();
        ModPoly::new(f, coeffs)
    }

    pub fn add(&self, rhs: &ModPoly) -> ModPoly {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = *c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = f.add(out[i], *c);
        }
        ModPoly::new(f, out)
    }

    pub fn sub(&self, rhs: &ModPoly) -> ModPoly {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = *c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = f.sub(out[i], *c);
        }
        ModPoly::new(f, out)
    }

    pub fn mul(&self, rhs: &ModPoly) -> ModPoly {
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return ModPoly::zero(f);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(*a, *b));
            }
        }
        ModPoly::new(f, out)
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, rhs: &ModPoly) -> (ModPoly, ModPoly) {
        let f = self.field;
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let dr = rhs.coeffs.len() - 1;
        if self.coeffs.len() < rhs.coeffs.len() {
            return (ModPoly::zero(f), self.clone());
        }
        let inv_lead = f.inv(rhs.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len() - dr];
        for i in (dr..rem.len()).rev() {
            let c = f.mul(rem[i], inv_lead);
            if c == 0 {
                continue;
            }
            quot[i - dr] = c;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let idx = i - dr + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, *b));
            }
        }
        rem.truncate(dr);
        (ModPoly::new(f, quot), ModPoly::new(f, rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Resultant of `self` and `rhs` via the remainder sequence.
    ///
    /// Conventions: `Res(a, b) = lc(a)^deg(b)` when `b` is a nonzero
    /// constant (and symmetrically), `Res` of two constants is 1, and the
    /// resultant vanishes iff the polynomials share a root.
    pub fn resultant(&self, rhs: &ModPoly) -> u64 {
        let f = self.field;
        let mut a = self.clone();
        let mut b = rhs.clone();
        if a.is_zero() || b.is_zero() {
            return 0;
        }
        let mut acc = 1u64;
        let mut sign_neg = false;
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if db == 0 {
                acc = f.mul(acc, f.pow(b.leading(), da as u64));
                return if sign_neg { f.neg(acc) } else { acc };
            }
            if da < db {
                if da % 2 == 1 && db % 2 == 1 {
                    sign_neg = !sign_neg;
                }
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let r = a.div_rem(&b).1;
            if r.is_zero() {
                // positive-degree common factor
                return 0;
            }
            let dr = r.degree().unwrap();
            // Res(a,b) = lc(b)^(da-dr) * (-1)^(da*db) * Res(b,r)
            acc = f.mul(acc, f.pow(b.leading(), (da - dr) as u64));
            if da % 2 == 1 && db % 2 == 1 {
                sign_neg = !sign_neg;
            }
            a = b;
            b = r;
        }
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(field: PrimeField, points: &[(u64, u64)]) -> ModPoly {
        let f = field;
        let n = points.len();
        // Newton's divided differences: stable ordering, O(n^2).
        let xs: Vec<u64> = points.iter().map(|(x, _)| *x).collect();
        let mut coef: Vec<u64> = points.iter().map(|(_, y)| *y).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = f.sub(coef[i], coef[i - 1]);
                let den = f.sub(xs[i], xs[i - j]);
                coef[i] = f.mul(num, f.inv(den));
            }
        }
        // expand the Newton form
        let mut out = ModPoly::zero(f);
        for i in (0..n).rev() {
            // out = out * (x - x_i) + coef[i]
            let mut shifted = vec![0u64; out.coeffs.len() + 1];
            for (k, c) in out.coeffs.iter().enumerate() {
                shifted[k + 1] = f.add(shifted[k + 1], *c);
                shifted[k] = f.sub(shifted[k], f.mul(*c, xs[i]));
            }
            let mut np = ModPoly::new(f, shifted);
            if np.coeffs.is_empty() {
                np.coeffs.push(0);
            }
            np.coeffs[0] = f.add(np.coeffs[0], coef[i]);
            out = ModPoly::new(f, np.coeffs);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 4611686018427387847;

    fn fp() -> PrimeField {
        PrimeField::new(P)
    }

    fn poly(coeffs: &[i64]) -> ModPoly {
        let f = fp();
        ModPoly::new(f, coeffs.iter().map(|c| f.from_i64(*c)).collect())
    }

    #[test]
    fn field_ops() {
        let f = fp();
        assert_eq!(f.mul(f.inv(7), 7), 1);
        assert_eq!(f.add(P - 1, 1), 0);
        assert_eq!(f.sub(0, 1), P - 1);
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = poly(&[1, 2, 3, 4, 5]);
        let b = poly(&[7, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_common_factor() {
        // (x+1)^2 (x+2) and (x+1)(x+3)
        let a = poly(&[1, 1]).mul(&poly(&[1, 1])).mul(&poly(&[2, 1]));
        let b = poly(&[1, 1]).mul(&poly(&[3, 1]));
        assert_eq!(a.gcd(&b), poly(&[1, 1]));
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(x^2 - 1, x - 2) = (2^2 - 1) = 3
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[-2, 1]);
        assert_eq!(a.resultant(&b), 3);
        // shared root kills it
        let c = poly(&[-1, 1]);
        assert_eq!(a.resultant(&c), 0);
        // Res(x+1, x+2) = lc^0 * (value of x+2 at -1) = 1
        assert_eq!(poly(&[1, 1]).resultant(&poly(&[2, 1])), 1);
    }

    #[test]
    fn resultant_antisymmetry_and_scaling() {
        let a = poly(&[3, 1, 4, 1]);
        let b = poly(&[2, 7, 1]);
        let f = fp();
        // Res(a,b) = (-1)^(da db) Res(b,a)
        assert_eq!(a.resultant(&b), b.resultant(&a));
        // Res(ca, b) = c^db Res(a,b)
        let ca = a.scale(5);
        assert_eq!(ca.resultant(&b), f.mul(f.pow(5, 2), a.resultant(&b)));
    }

    #[test]
    fn interpolation_recovers() {
        let a = poly(&[9, -3, 0, 1, 17]);
        let f = fp();
        let pts: Vec<(u64, u64)> = (0..5u64).map(|x| (x, a.eval(x))).collect();
        let b = ModPoly::interpolate(f, &pts);
        assert_eq!(a, b);
    }
}
