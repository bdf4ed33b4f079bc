//! Integer polynomials, Sturm chains, and certified real-root bounds.
//!
//! The Sturm chain is computed over the integers with primitive
//! pseudo-remainders, keeping each element a positive multiple of the true
//! negative remainder so sign counts stay valid. Variations are taken as
//! right limits, which makes `V(a) - V(b)` count roots in the half-open
//! interval `(a, b]` even when an endpoint is itself a root.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Polynomial with big-integer coefficients, ascending degree, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Ascending coefficients; empty means the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        IntPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Divides by the (positive) content, preserving signs.
    pub fn primitive(&self) -> IntPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut content = BigInt::zero();
        for c in &self.coeffs {
            content = content.gcd(c);
        }
        if content.is_one() {
            return self.clone();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    /// `p(num/den) * den^deg` as an exact integer.
    fn scaled_value(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * num + c * &den_pow;
            if i > 0 {
                den_pow *= den;
            }
        }
        acc
    }

    /// Sign of the value at a rational point, computed exactly.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        match self.scaled_value(x.numer(), x.denom()).sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Pseudo-remainder `lc(g)^(deg f - deg g + 1) * f mod g`, with a flag
/// telling whether that multiplier is negative.
fn pseudo_rem(f: &IntPolynomial, g: &IntPolynomial) -> (IntPolynomial, bool) {
    let deg_f = f.degree().expect("f nonzero");
    let deg_g = g.degree().expect("g nonzero");
    assert!(deg_f >= deg_g);
    let lc_g = g.leading().unwrap().clone();
    let full_power = (deg_f - deg_g + 1) as u32;

    let mut r = f.coeffs.clone();
    let mut reductions = 0u32;
    loop {
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.len() < g.coeffs.len() {
            break;
        }
        reductions += 1;
        let shift = r.len() - g.coeffs.len();
        let lead = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lc_g;
        }
        for (i, gc) in g.coeffs.iter().enumerate() {
            r[shift + i] -= &lead * gc;
        }
        debug_assert!(r.last().unwrap().is_zero());
        r.pop();
    }
    let mut rem = IntPolynomial::from_coeffs(r);
    if reductions < full_power && !rem.is_zero() {
        let scale = lc_g.pow(full_power - reductions);
        rem = IntPolynomial {
            coeffs: rem.coeffs.iter().map(|c| c * &scale).collect(),
        };
    }
    let negative = lc_g.is_negative() && full_power % 2 == 1;
    (rem, negative)
}

/// Primitive gcd, leading coefficient normalized positive.
pub fn gcd_primitive(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut f = a.primitive();
    let mut g = b.primitive();
    if f.is_zero() {
        return normalize_leading(g);
    }
    while !g.is_zero() {
        if f.degree() < g.degree() {
            core::mem::swap(&mut f, &mut g);
            continue;
        }
        let (rem, _) = pseudo_rem(&f, &g);
        f = g;
        g = rem.primitive();
    }
    normalize_leading(f)
}

fn normalize_leading(p: IntPolynomial) -> IntPolynomial {
    if p.leading().is_some_and(|c| c.is_negative()) {
        p.neg()
    } else {
        p
    }
}

/// Exact division `f / g` over the integers; panics if not exact (callers
/// only divide by known factors).
fn div_exact(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let deg_g = g.degree().expect("divisor nonzero");
    let deg_f = f.degree().expect("dividend nonzero");
    assert!(deg_f >= deg_g);
    let lc_g = g.leading().unwrap();
    let mut rem = f.coeffs.clone();
    let mut quot = vec![BigInt::zero(); deg_f - deg_g + 1];
    for qi in (0..quot.len()).rev() {
        let lead = rem[qi + deg_g].clone();
        if lead.is_zero() {
            continue;
        }
        let (c, r) = lead.div_rem(lc_g);
        assert!(r.is_zero(), "division is not exact");
        for (i, gc) in g.coeffs.iter().enumerate() {
            rem[qi + i] -= &c * gc;
        }
        quot[qi] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division is not exact");
    IntPolynomial::from_coeffs(quot)
}

/// The squarefree part `p / gcd(p, p')`, primitive.
pub fn squarefree_part(p: &IntPolynomial) -> IntPolynomial {
    let pp = p.primitive();
    if pp.degree().unwrap_or(0) <= 1 {
        return pp;
    }
    let g = gcd_primitive(&pp, &pp.derivative());
    if g.degree() == Some(0) {
        pp
    } else {
        div_exact(&pp, &g)
    }
}

/// Sturm chain of a squarefree primitive polynomial.
pub fn sturm_chain(sf: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![sf.clone()];
    let deriv = sf.derivative().primitive();
    if deriv.is_zero() {
        return chain;
    }
    chain.push(deriv);
    loop {
        let f = &chain[chain.len() - 2];
        let g = &chain[chain.len() - 1];
        if g.degree().is_none() || f.degree() < g.degree() {
            break;
        }
        let (rem, multiplier_negative) = pseudo_rem(f, g);
        if rem.is_zero() {
            break;
        }
        // Keep each element a positive multiple of -(f mod g).
        let next = if multiplier_negative { rem } else { rem.neg() };
        chain.push(next.primitive());
        if chain.last().unwrap().degree() == Some(0) {
            break;
        }
    }
    chain
}

/// Right-limit sign variations of the chain at `x`: a zero of the head is
/// replaced by the sign it takes just right of `x`, interior zeros are
/// dropped. With this convention `variations(a) - variations(b)` counts the
/// roots in `(a, b]`.
pub fn variations_at(chain: &[IntPolynomial], x: &Rational) -> usize {
    let mut signs: Vec<i32> = chain.iter().map(|p| p.sign_at(x)).collect();
    if signs.first() == Some(&0) {
        if let Some(&next) = signs.get(1) {
            signs[0] = next;
        }
    }
    let nonzero: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of roots of the chain's head in `(a, b]`.
pub fn count_roots(chain: &[IntPolynomial], a: &Rational, b: &Rational) -> usize {
    variations_at(chain, a).saturating_sub(variations_at(chain, b))
}

/// A power of two strictly larger than every root magnitude.
pub fn dyadic_root_bound(p: &IntPolynomial) -> Rational {
    let lc = p.leading().expect("nonzero polynomial").magnitude();
    let max_ratio = p
        .coeffs
        .iter()
        .rev()
        .skip(1)
        .map(|c| (c.magnitude() + lc - 1u32) / lc) // ceil(|c| / |lc|)
        .max()
        .unwrap_or_default();
    let bound = max_ratio + 1u32; // Cauchy: 1 + max |a_i / a_d|
    let bits = bound.bits() as u32;
    Rational::from(BigInt::from(2).pow(bits))
}

/// Certified enclosure of a single real number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lo: Rational,
    pub hi: Rational,
    /// True when the root was hit exactly (`lo == hi`).
    pub exact: bool,
}

/// Encloses the largest real root of `p` to within `tol`, or `None` if `p`
/// has no real root. Exact rational roots are detected and returned with
/// zero width.
pub fn max_real_root(p: &IntPolynomial, tol: &Rational) -> Option<RootEnclosure> {
    let sf = squarefree_part(p);
    sf.degree().filter(|&d| d > 0)?;
    let chain = sturm_chain(&sf);
    let bound = dyadic_root_bound(&sf);
    let mut a = -bound.clone();
    let mut b = bound;
    if count_roots(&chain, &a, &b) == 0 {
        return None;
    }
    let two = Rational::from(BigInt::from(2));
    loop {
        if &b - &a <= *tol {
            return Some(RootEnclosure {
                lo: a,
                hi: b,
                exact: false,
            });
        }
        let mid = (&a + &b) / &two;
        if sf.sign_at(&mid) == 0 {
            if count_roots(&chain, &mid, &b) == 0 {
                return Some(RootEnclosure {
                    lo: mid.clone(),
                    hi: mid,
                    exact: true,
                });
            }
            a = mid;
        } else if count_roots(&chain, &mid, &b) >= 1 {
            a = mid;
        } else {
            b = mid;
        }
    }
}

/// Counts distinct real roots on the whole line.
pub fn count_real_roots(p: &IntPolynomial) -> usize {
    let sf = squarefree_part(p);
    if sf.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let bound = dyadic_root_bound(&sf);
    count_roots(&chain, &-bound.clone(), &bound)
}

/// Rational square-root enclosure: returns `(r_lo, r_hi)` with
/// `r_lo^2 <= lo` and `r_hi^2 >= hi`, each end within `tol` of the truth.
/// Perfect squares come back exact.
pub fn sqrt_enclosure(lo: &Rational, hi: &Rational, tol: &Rational) -> (Rational, Rational) {
    assert!(!lo.is_negative() && lo <= hi);
    let r_lo = sqrt_one_sided(lo, tol, false);
    let r_hi = sqrt_one_sided(hi, tol, true);
    (r_lo, r_hi)
}

/// Largest (resp. smallest) dyadic `r` with `r^2 <= s` (resp. `r^2 >= s`),
/// up to `tol`; exact rational square roots are returned directly.
fn sqrt_one_sided(s: &Rational, tol: &Rational, round_up: bool) -> Rational {
    if s.is_zero() {
        return Rational::zero();
    }
    let ns = s.numer().magnitude().sqrt();
    let ds = s.denom().magnitude().sqrt();
    if &(&ns * &ns) == s.numer().magnitude() && &(&ds * &ds) == s.denom().magnitude() {
        return Rational::new(ns.into(), ds.into());
    }
    let one = Rational::one();
    let two = Rational::from(BigInt::from(2));
    let mut hi = one.clone();
    while &hi * &hi < *s {
        hi = &hi * &two;
    }
    let mut lo = Rational::zero();
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if &mid * &mid <= *s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if round_up {
        hi
    } else {
        lo
    }
}
