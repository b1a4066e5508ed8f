//! Dense univariate polynomials over the rationals: exact arithmetic,
//! Euclidean structure, Sturm chains, resultants and the helpers the
//! algebraic-number kernel is built on.

use crate::rat::{rat_height, Rat};
use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use std::fmt;

/// Coefficients lowest degree first; the leading coefficient of a nonzero
/// polynomial is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", c)?;
            } else if i == 1 {
                write!(f, "{}*x", c)?;
            } else {
                write!(f, "{}*x^{}", c, i)?;
            }
        }
        Ok(())
    }
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = RatPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial x.
    pub fn x() -> Self {
        RatPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    /// c * x^k
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        RatPoly { coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree as usize, panicking on zero; callers that may see zero use `degree`.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().expect("leading of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading().is_one()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        RatPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        RatPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder with deg r < deg divisor.
    pub fn divrem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.deg();
        if self.is_zero() || self.deg() < dd {
            return (RatPoly::zero(), self.clone());
        }
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let qd = rem.len() - 1 - dd;
        let mut q = vec![Rat::zero(); qd + 1];
        for k in (0..=qd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let t = &c * b;
                    rem[k + i] -= t;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (RatPoly::from_coeffs(q), RatPoly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &RatPoly) -> RatPoly {
        self.divrem(divisor).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &RatPoly) -> RatPoly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * Rat::from_integer(BigInt::from(i)));
        }
        RatPoly::from_coeffs(out)
    }

    /// j-th derivative.
    pub fn derivative_n(&self, j: usize) -> RatPoly {
        let mut p = self.clone();
        for _ in 0..j {
            p = p.derivative();
        }
        p
    }

    /// Monic associate.
    pub fn monic(&self) -> RatPoly {
        assert!(!self.is_zero());
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Monic gcd; gcd(0, g) = monic g.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// lcm normalized monic.
    pub fn lcm(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let g = self.gcd(other);
        self.mul(other).div_exact(&g).monic()
    }

    /// p(x + q) by Horner-style synthetic shifts.
    pub fn shift(&self, q: &Rat) -> RatPoly {
        // compose with (x + q)
        let mut out = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            out = out.mul(&RatPoly::from_coeffs(vec![q.clone(), Rat::one()]));
            out = out.add(&RatPoly::constant(c.clone()));
        }
        out
    }

    /// p(c * x).
    pub fn dilate(&self, c: &Rat) -> RatPoly {
        let mut pow = Rat::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        RatPoly::from_coeffs(out)
    }

    /// p(-x).
    pub fn reflect(&self) -> RatPoly {
        let mut out = self.coeffs.clone();
        for (i, c) in out.iter_mut().enumerate() {
            if i % 2 == 1 {
                *c = -c.clone();
            }
        }
        RatPoly::from_coeffs(out)
    }

    /// x^deg * p(1/x).
    pub fn reverse(&self) -> RatPoly {
        let mut out = self.coeffs.clone();
        out.reverse();
        RatPoly::from_coeffs(out)
    }

    /// p(x^2).
    pub fn compose_square(&self) -> RatPoly {
        let mut out = vec![Rat::zero(); self.coeffs.len() * 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        RatPoly::from_coeffs(out)
    }

    /// General composition p(q(x)).
    pub fn compose(&self, q: &RatPoly) -> RatPoly {
        let mut out = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            out = out.mul(q).add(&RatPoly::constant(c.clone()));
        }
        out
    }

    /// Squarefree part p / gcd(p, p').
    pub fn squarefree_part(&self) -> RatPoly {
        assert!(!self.is_zero());
        if self.deg() == 0 {
            return RatPoly::one();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.monic()
        } else {
            self.div_exact(&g).monic()
        }
    }

    /// Yun's algorithm: returns [(f1,1),(f2,2),...] with p ~ prod fi^i, each
    /// fi squarefree and pairwise coprime (unit factors dropped).
    pub fn squarefree_decomposition(&self) -> Vec<(RatPoly, u32)> {
        assert!(!self.is_zero());
        let f = self.monic();
        if f.deg() == 0 {
            return vec![];
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        if a0.degree() == Some(0) {
            return vec![(f, 1)];
        }
        let mut out = vec![];
        let mut b = f.div_exact(&a0);
        let mut c = df.div_exact(&a0);
        let mut i = 1u32;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.deg() > 0 {
                    out.push((b.monic(), i));
                }
                break;
            }
            let a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            i += 1;
            if b.degree() == Some(0) {
                break;
            }
        }
        out
    }

    /// Clear denominators and content: primitive integer coefficients with
    /// positive leading coefficient, same roots.
    pub fn primitive_int(&self) -> Vec<BigInt> {
        assert!(!self.is_zero());
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = num::integer::lcm(l, c.denom().clone());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = num::integer::gcd(g, c.clone());
        }
        let mut out: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        if out.last().unwrap().is_negative() {
            for c in out.iter_mut() {
                *c = -c.clone();
            }
        }
        out
    }

    pub fn from_int_coeffs(coeffs: &[BigInt]) -> RatPoly {
        RatPoly::from_coeffs(coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Height per the classical definition on the primitive integer form:
    /// max |coefficient|.
    pub fn int_height(&self) -> BigInt {
        self.primitive_int()
            .iter()
            .map(|c| c.abs())
            .max()
            .expect("nonzero polynomial")
    }

    /// Height on the rational coefficients directly: max over |numerator|
    /// and denominator of each coefficient.
    pub fn rat_height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(rat_height)
            .max()
            .unwrap_or_else(BigInt::one)
    }

    /// Cauchy bound: all complex roots have |z| < bound.
    pub fn cauchy_root_bound(&self) -> Rat {
        assert!(!self.is_zero() && self.deg() >= 1);
        let lead = self.leading();
        let mut m = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = (c / &lead).abs();
            if r > m {
                m = r;
            }
        }
        m + Rat::one()
    }

    /// Resultant of two univariate rational polynomials.
    pub fn resultant(&self, other: &RatPoly) -> Rat {
        resultant(self, other)
    }
}

/// Classical PRS resultant. Res(f, g) = lc(g)^deg f if deg g = 0.
pub fn resultant(f: &RatPoly, g: &RatPoly) -> Rat {
    if f.is_zero() || g.is_zero() {
        return Rat::zero();
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = Rat::one();
    let mut sign = 1i32;
    loop {
        let da = a.deg();
        let db = b.deg();
        if db == 0 {
            let r = num::pow::Pow::pow(b.leading(), da as u32);
            let v = acc * r;
            return if sign < 0 { -v } else { v };
        }
        if da < db {
            if (da * db) % 2 == 1 {
                sign = -sign;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Rat::zero();
        }
        // Res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * Res(b,r)
        acc *= num::pow::Pow::pow(b.leading(), (da - r.deg()) as u32);
        if (da * db) % 2 == 1 {
            sign = -sign;
        }
        a = b;
        b = r;
    }
}

/// Sturm chain of a squarefree polynomial (contents stripped each step to
/// keep coefficients small; signs are preserved).
pub fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![];
    let p0 = normalize_signs(p);
    let p1 = normalize_signs(&p.derivative());
    chain.push(p0);
    if p1.is_zero() {
        return chain;
    }
    chain.push(p1);
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(normalize_signs(&r.neg()));
        if chain.last().unwrap().degree() == Some(0) {
            break;
        }
    }
    chain
}

/// Divide by the positive content so coefficients are small integers.
fn normalize_signs(p: &RatPoly) -> RatPoly {
    if p.is_zero() {
        return p.clone();
    }
    let ints = p.primitive_int();
    let sign_flip = p.leading().is_negative();
    let q = RatPoly::from_int_coeffs(&ints);
    if sign_flip {
        q.neg()
    } else {
        q
    }
}

fn sign_variations(chain: &[RatPoly], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of the (squarefree) chain polynomial in
/// (a, b], requiring p(a) != 0 and p(b) != 0 from callers that need
/// exactness at endpoints.
pub fn count_real_roots_in(chain: &[RatPoly], a: &Rat, b: &Rat) -> usize {
    assert!(a <= b);
    let va = sign_variations(chain, a);
    let vb = sign_variations(chain, b);
    va.saturating_sub(vb)
}

/// Isolating intervals (a_i, b_i] for every real root of a squarefree p,
/// each containing exactly one root, pairwise disjoint, endpoints non-roots.
pub fn isolate_real_roots(p: &RatPoly) -> Vec<(Rat, Rat)> {
    assert!(!p.is_zero());
    if p.deg() == 0 {
        return vec![];
    }
    let chain = sturm_chain(p);
    let mut bound = p.cauchy_root_bound();
    // nudge the bound until the endpoints are not roots (they cannot be,
    // Cauchy's bound is strict, but keep the guard cheap)
    while p.eval(&(-bound.clone())).is_zero() || p.eval(&bound).is_zero() {
        bound += Rat::one();
    }
    let mut out = vec![];
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = count_real_roots_in(&chain, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mut mid = (&a + &b) / Rat::from_integer(BigInt::from(2));
        // midpoint must not be a root for the count to split cleanly
        let mut adj = (&b - &a) / Rat::from_integer(BigInt::from(4));
        while p.eval(&mid).is_zero() {
            mid += &adj;
            adj /= Rat::from_integer(BigInt::from(2));
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Shrink an isolating interval (a, b] of a squarefree p below `width`,
/// by sign bisection. p(a) and p(b) must have opposite signs or p(b) = 0 is
/// excluded by the isolation contract.
pub fn refine_real_root(p: &RatPoly, mut a: Rat, mut b: Rat, width: &Rat) -> (Rat, Rat) {
    let two = Rat::from_integer(BigInt::from(2));
    let sa = p.eval(&a).is_positive();
    debug_assert!(!p.eval(&a).is_zero() && !p.eval(&b).is_zero());
    while &b - &a > *width {
        let mid = (&a + &b) / &two;
        let v = p.eval(&mid);
        if v.is_zero() {
            // root exactly at mid: return a degenerate tight interval around it
            let eps = width / &two;
            return (&mid - &eps, &mid + &eps);
        }
        if v.is_positive() == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}

/// n-th cyclotomic polynomial by the recursive quotient formula.
pub fn cyclotomic(n: u64) -> RatPoly {
    assert!(n >= 1);
    // x^n - 1 divided by the product of cyclotomic(d) for proper divisors d
    let mut num = RatPoly::monomial(Rat::one(), n as usize).sub(&RatPoly::one());
    for d in 1..n {
        if n % d == 0 {
            num = num.div_exact(&cyclotomic(d));
        }
    }
    num
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    fn p(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_i64(coeffs)
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-4, 5]);
        let prod = a.mul(&b);
        let (q, r) = prod.divrem(&b);
        assert_eq!(q, a);
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        let g = f.gcd(&f.derivative());
        assert_eq!(g, p(&[-1, 1]).monic());
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[2, 1])).monic());
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (p(&[2, 1]), 1));
        assert_eq!(dec[1], (p(&[-1, 1]), 2));
    }

    #[test]
    fn resultants() {
        // Res(x^2-2, x^2-3) = product of (a^2 - 3) over roots a of x^2-2 = 1
        let f = p(&[-2, 0, 1]);
        let g = p(&[-3, 0, 1]);
        assert_eq!(resultant(&f, &g), rat_i(1));
        // Res(x-2, x-3) = (2 - 3) = -1 up to convention: lc^... = g(2) = -1
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])), rat_i(-1));
        // common root => 0
        assert_eq!(resultant(&f, &p(&[-2, 0, 1]).mul(&p(&[1, 1]))), rat_i(0));
    }

    #[test]
    fn sturm_isolation() {
        // (x-1)(x-2)(x-3)
        let f = p(&[-1, 1]).mul(&p(&[-2, 1])).mul(&p(&[-3, 1]));
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        for (i, (a, b)) in roots.iter().enumerate() {
            let target = rat_i(i as i64 + 1);
            assert!(*a < target && target <= *b);
        }
        // x^2 + 1 has no real roots
        assert!(isolate_real_roots(&p(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn refine_sqrt2() {
        let f = p(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        let (a, b) = roots
            .iter()
            .find(|(a, _)| *a >= rat_i(0) || a.is_zero() || *a > rat_i(-1))
            .map(|(a, b)| (a.clone(), b.clone()))
            .unwrap();
        let pos = if b > rat_i(0) && f.eval(&rat_i(0)) < rat_i(0) {
            (a, b)
        } else {
            roots.last().map(|(a, b)| (a.clone(), b.clone())).unwrap()
        };
        let w = rat(1, 1_000_000);
        let (lo, hi) = refine_real_root(&f, pos.0, pos.1, &w);
        assert!(&hi - &lo <= w);
        // 1.414213 < sqrt 2 < 1.414214
        assert!(lo < rat(1_414_214, 1_000_000));
        assert!(hi > rat(1_414_213, 1_000_000));
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(5), p(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn transforms() {
        let f = p(&[-2, 0, 1]); // x^2 - 2
        let shifted = f.shift(&rat_i(1)); // (x+1)^2 - 2 = x^2 + 2x - 1
        assert_eq!(shifted, p(&[-1, 2, 1]));
        assert_eq!(f.reflect(), f);
        assert_eq!(p(&[1, 2]).reverse(), p(&[2, 1]));
        assert_eq!(f.compose_square(), p(&[-2, 0, 0, 0, 1]));
    }
}
