//! Univariate polynomials over the integers and the certified modular
//! kernel: CRT reconstruction, gcd, squarefree decomposition, and Sturm
//! root isolation.
//!
//! Gcds are computed modulo word-size primes and lifted by CRT. A lifted
//! candidate `G` is accepted only after an exact divisibility check
//! against both inputs together with a degree comparison at a prime not
//! dividing the leading coefficients; the pair of checks makes the result
//! a certificate, not a heuristic. Unlucky primes only delay the loop.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::modp::{ModPoly, PrimeField, PRIMES};
use crate::{Error, Int, Rat, Result};

/// Dense integer polynomial; `coeffs[i]` multiplies `x^i`, no trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    pub coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map(Zero::is_zero) == Some(true) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![Int::one()] }
    }

    pub fn constant(c: impl Into<Int>) -> Self {
        IntPoly::new(vec![c.into()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|c| Int::from(*c)).collect())
    }

    /// `x` itself.
    pub fn var() -> Self {
        IntPoly { coeffs: vec![Int::zero(), Int::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> &Int {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut c = Int::zero();
        for a in &self.coeffs {
            c = c.gcd(a);
            if c.is_one() {
                break;
            }
        }
        c
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a / &c).collect() }
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Int::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in rhs.coeffs.iter().enumerate() {
            out[i] += b;
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &Int) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Int::from(i)).collect(),
        )
    }

    pub fn eval(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from(c.clone());
        }
        acc
    }

    /// Exact quotient, or `None` when `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &IntPoly) -> Option<IntPoly> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dr = rhs.coeffs.len() - 1;
        if self.coeffs.len() < rhs.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); self.coeffs.len() - dr];
        let lead = rhs.leading().clone();
        for i in (dr..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &q * b;
                rem[i - dr + j] -= t;
            }
            quot[i - dr] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Reduce modulo `p`.
    pub fn reduce(&self, field: PrimeField) -> ModPoly {
        let p = Int::from(field.p);
        ModPoly::new(
            field,
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(&p);
                    u64::try_from(&r).expect("residue fits u64")
                })
                .collect(),
        )
    }

    /// Largest-degree squarefree divisor, `self` assumed nonzero.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        let f = self.primitive();
        if f.is_constant() {
            return Ok(IntPoly::one());
        }
        let g = modular_gcd(&f, &f.derivative())?;
        Ok(f.div_exact(&g).expect("gcd divides").primitive())
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        let f = self.primitive();
        if f.is_constant() {
            return Ok(true);
        }
        Ok(modular_gcd(&f, &f.derivative())?.is_constant())
    }
}

/// Incremental Chinese-remainder state for one integer.
struct CrtInt {
    value: Int,
    modulus: Int,
}

impl CrtInt {
    fn new() -> Self {
        CrtInt { value: Int::zero(), modulus: Int::one() }
    }

    fn push(&mut self, residue: u64, field: PrimeField) {
        let p = Int::from(field.p);
        let m_mod_p = u64::try_from(&self.modulus.mod_floor(&p)).unwrap();
        let v_mod_p = u64::try_from(&self.value.mod_floor(&p)).unwrap();
        let t = field.mul(field.sub(residue, v_mod_p), field.inv(m_mod_p));
        self.value += &self.modulus * Int::from(t);
        self.modulus *= p;
    }

    /// Representative in `(-M/2, M/2]`.
    fn symmetric(&self) -> Int {
        if &self.value * 2 > self.modulus {
            &self.value - &self.modulus
        } else {
            self.value.clone()
        }
    }
}

/// Incremental CRT for polynomial coefficients.
pub struct CrtPoly {
    slots: Vec<CrtInt>,
    pub modulus: Int,
}

impl CrtPoly {
    pub fn new(len: usize) -> Self {
        CrtPoly { slots: (0..len).map(|_| CrtInt::new()).collect(), modulus: Int::one() }
    }

    /// Push the image of the target modulo one more prime. Short images
    /// are padded with zero residues.
    pub fn push(&mut self, image: &ModPoly) {
        assert!(image.coeffs.len() <= self.slots.len(), "image longer than CRT window");
        for (i, slot) in self.slots.iter_mut().enumerate() {
            let r = image.coeffs.get(i).copied().unwrap_or(0);
            slot.push(r, image.field);
        }
        self.modulus *= Int::from(image.field.p);
    }

    /// Symmetric-range reconstruction of the accumulated polynomial.
    pub fn reconstruct(&self) -> IntPoly {
        IntPoly::new(self.slots.iter().map(CrtInt::symmetric).collect())
    }
}

/// Primes suitable for `a`, `b`: dividing neither leading coefficient.
fn good_primes<'a>(a: &'a IntPoly, b: &'a IntPoly) -> impl Iterator<Item = PrimeField> + 'a {
    PRIMES.iter().copied().filter_map(move |p| {
        let pi = Int::from(p);
        if (a.leading() % &pi).is_zero() || (b.leading() % &pi).is_zero() {
            None
        } else {
            Some(PrimeField::new(p))
        }
    })
}

/// Certified gcd in `Z[x]`, primitive with positive leading coefficient.
pub fn modular_gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if a.is_zero() {
        return Ok(b.primitive());
    }
    if b.is_zero() {
        return Ok(a.primitive());
    }
    let a = a.primitive();
    let b = b.primitive();
    if a.is_constant() || b.is_constant() {
        return Ok(IntPoly::one());
    }
    let lc_bound = a.leading().gcd(b.leading());

    let mut d_min = usize::MAX;
    let mut crt: Option<CrtPoly> = None;
    let mut previous: Option<IntPoly> = None;
    for field in good_primes(&a, &b) {
        let ga = a.reduce(field).gcd(&b.reduce(field));
        let d = ga.degree().expect("gcd of nonzero polynomials");
        if d == 0 {
            // This prime certifies deg gcd = 0.
            return Ok(IntPoly::one());
        }
        if d > d_min {
            continue; // unlucky prime
        }
        if d < d_min {
            d_min = d;
            crt = None;
            previous = None;
        }
        // Scale the monic image so it lifts to lc_bound/lc(G) * G.
        let lcb = u64::try_from(&lc_bound.mod_floor(&Int::from(field.p))).unwrap();
        let scaled = ga.scale(lcb);
        let crt = crt.get_or_insert_with(|| CrtPoly::new(d_min + 1));
        crt.push(&scaled);
        let candidate = crt.reconstruct().primitive();
        if previous.as_ref() == Some(&candidate) {
            if a.div_exact(&candidate).is_some() && b.div_exact(&candidate).is_some() {
                // candidate | gcd, and deg gcd <= d_min at a good prime
                if candidate.degree() == Some(d_min) {
                    return Ok(candidate);
                }
            }
        }
        previous = Some(candidate);
    }
    Err(Error::PrimesExhausted)
}

/// Yun's squarefree decomposition of a nonzero polynomial:
/// `f = c * prod f_k^k` with the `f_k` squarefree, pairwise coprime,
/// primitive with positive leading coefficient.
pub fn yun_squarefree(f: &IntPoly) -> Result<Vec<(IntPoly, u32)>> {
    assert!(!f.is_zero(), "squarefree decomposition of zero");
    let f = f.primitive();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let g = modular_gcd(&f, &f.derivative())?;
    let mut w = f.div_exact(&g).expect("gcd divides f").primitive();
    let mut y = f.derivative().div_exact(&g).expect("gcd divides f'");
    let mut k = 1u32;
    let mut out = Vec::new();
    loop {
        let z = y.sub(&w.derivative());
        if z.is_zero() {
            if !w.is_constant() {
                out.push((w, k));
            }
            break;
        }
        let a = modular_gcd(&w, &z)?;
        if !a.is_constant() {
            out.push((a.clone(), k));
        }
        w = w.div_exact(&a).expect("factor divides w").primitive();
        y = z.div_exact(&a).expect("factor divides z");
        k += 1;
        if w.is_constant() {
            break;
        }
    }
    let total: usize = out.iter().map(|(p, k)| p.degree().unwrap() * *k as usize).sum();
    assert_eq!(total, f.degree().unwrap(), "squarefree degrees must sum to deg f");
    Ok(out)
}

/// Location of one real root.
#[derive(Debug, Clone, PartialEq)]
pub enum RootLoc {
    Exact(Rat),
    /// Open interval with a sign change and exactly one root.
    Interval(Rat, Rat),
}

/// Sturm chain of a squarefree polynomial.
pub struct Sturm {
    chain: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(f: &IntPoly) -> Self {
        let mut chain = vec![f.primitive(), f.derivative().primitive()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].is_constant() {
                break;
            }
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            // positive-multiple pseudo-remainder keeps the sign pattern
            let d = a.degree().unwrap() - b.degree().unwrap();
            let mut m = num_traits::pow::pow(b.leading().clone(), d + 1);
            if m.is_negative() {
                m = -m;
            }
            let mut r = a.scale(&m);
            while !r.is_zero() && r.degree() >= b.degree() {
                let shift = r.degree().unwrap() - b.degree().unwrap();
                let (q, rem) = r.leading().div_rem(b.leading());
                assert!(rem.is_zero(), "pseudo-remainder scaling is exact");
                let mut sub = vec![Int::zero(); shift];
                sub.extend(b.coeffs.iter().map(|c| c * &q));
                r = r.sub(&IntPoly::new(sub));
            }
            let next = r.neg().primitive();
            if next.is_zero() {
                break;
            }
            chain.push(next);
        }
        Sturm { chain }
    }

    fn variations(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval_rat(x);
            let s = if v.is_zero() {
                continue;
            } else if v.is_negative() {
                -1i8
            } else {
                1i8
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// Isolate all real roots of a squarefree polynomial into disjoint open
/// intervals whose endpoints are not roots.
pub fn isolate_real_roots(f: &IntPoly) -> Vec<RootLoc> {
    let f = f.primitive();
    if f.is_constant() {
        return Vec::new();
    }
    // Cauchy bound: all roots lie strictly inside (-B, B)
    let lead = f.leading().abs();
    let max = f.coeffs.iter().map(Signed::abs).max().unwrap();
    let bound = Rat::from(max / &lead + 2);
    let sturm = Sturm::new(&f);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        // endpoints are never roots, so this is the open-interval count
        let n = sturm.count_roots(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RootLoc::Interval(lo, hi));
            continue;
        }
        // split at a non-root interior point; at most deg f probes fail
        let width = &hi - &lo;
        let mut split = None;
        'probe: for den in 2u32.. {
            for num in 1..den {
                let t = &lo + &width * Rat::new(Int::from(num), Int::from(den));
                if !f.eval_rat(&t).is_zero() {
                    split = Some(t);
                    break 'probe;
                }
            }
        }
        let t = split.expect("non-root split point exists");
        stack.push((lo, t.clone()));
        stack.push((t, hi));
    }
    out.sort_by(|a, b| {
        let key = |r: &RootLoc| match r {
            RootLoc::Exact(x) => x.clone(),
            RootLoc::Interval(lo, _) => lo.clone(),
        };
        key(a).cmp(&key(b))
    });
    out
}

/// Shrink an isolating interval by bisection.
pub fn refine_root(f: &IntPoly, loc: &RootLoc, steps: u32) -> (Rat, Rat) {
    match loc {
        RootLoc::Exact(x) => (x.clone(), x.clone()),
        RootLoc::Interval(lo, hi) => {
            let mut lo = lo.clone();
            let mut hi = hi.clone();
            let sign_lo = f.eval_rat(&lo).is_negative();
            for _ in 0..steps {
                let mid = (&lo + &hi) / Rat::from(Int::from(2));
                let v = f.eval_rat(&mid);
                if v.is_zero() {
                    return (mid.clone(), mid);
                }
                if v.is_negative() == sign_lo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            (lo, hi)
        }
    }
}
