//! Transfer matrices and certified spectral radii.
//!
//! Every twist acts linearly on the cocore class lattice. Three matrix
//! kinds track different data through a word:
//!
//! * `Unsigned` counts components (nonnegative big integers);
//! * `Signed` is the degree-`n` homology action, entries signed by the
//!   parity `(-1)^d` of the rewriting shifts at a concrete `n`;
//! * `Weighted` keeps the whole shift multiset per entry, evaluated to
//!   `sum e^{t d}` only at the boundary.
//!
//! Later-applied letters multiply on the left, so a word product reads
//! like function composition.
//!
//! Spectral radii come back as rational enclosures from one of two
//! certified routes: characteristic polynomial plus Sturm root isolation
//! for small dimensions, and Collatz-Wielandt power bounds (per strongly
//! connected component, after adding the identity to beat periodicity)
//! otherwise. For signed matrices the largest root *magnitude* is the
//! square root of the largest real root of the polynomial whose roots are
//! all pairwise eigenvalue products; that polynomial is recovered exactly
//! from power sums `tr(A^k)^2` by Newton's identities.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed as _, Zero};

use crate::error::Error;
use crate::mat::{ShiftMultiset, SignedMatrix, UnsignedMatrix, WeightedMatrix};
use crate::plumbing::{PlumbingSpec, Vertex};
use crate::poly::{self, IntPolynomial};
use crate::scc::strongly_connected_components;
use crate::shift::ShiftExpr;
use crate::word::{Sign, TwistWord};
use crate::Rational;

/// Which linear action to build.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixKind {
    Unsigned,
    Signed { n: i64 },
    Weighted { n: i64, t: Rational },
}

/// A transfer matrix tagged with its kind.
#[derive(Debug, Clone, PartialEq)]
pub enum TransferMatrix {
    Unsigned(UnsignedMatrix),
    Signed { n: i64, matrix: SignedMatrix },
    Weighted { n: i64, t: Rational, matrix: WeightedMatrix },
}

/// How a radius enclosure was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusMethod {
    CharPoly,
    CollatzWielandt,
}

/// Two-sided rational bound on a spectral radius.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusEnclosure {
    pub lo: Rational,
    pub hi: Rational,
    pub method: RadiusMethod,
}

impl RadiusEnclosure {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, value: &Rational) -> bool {
        &self.lo <= value && value <= &self.hi
    }

    pub fn intersects(&self, other: &RadiusEnclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

fn check_kind(kind: &MatrixKind) -> Result<(), Error> {
    match kind {
        MatrixKind::Unsigned => Ok(()),
        MatrixKind::Signed { n } | MatrixKind::Weighted { n, .. } => {
            if *n < 3 {
                Err(Error::DimensionTooSmall(*n))
            } else {
                Ok(())
            }
        }
    }
}

fn shift_parity_sign(shift: ShiftExpr, n: i64) -> BigInt {
    if shift.eval(n).rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Rewriting shift increments for a twist at `u`: the constant-loop
/// increment and one per neighbor.
fn twist_increments(
    u: Vertex,
    sign: Sign,
    spec: &PlumbingSpec,
) -> (ShiftExpr, Vec<(Vertex, ShiftExpr)>) {
    let self_incr = match sign {
        Sign::Pos => ShiftExpr::new(1, -1),
        Sign::Neg => ShiftExpr::new(-1, 1),
    };
    let neighbors = spec
        .tree()
        .neighbors(u)
        .map(|x| {
            let s = spec.s(u, x).expect("neighbor has a grading");
            let incr = match sign {
                Sign::Pos => ShiftExpr::new(1, -1) + s,
                Sign::Neg => s + ShiftExpr::new(-1, 0),
            };
            (x, incr)
        })
        .collect();
    (self_incr, neighbors)
}

/// The elementary matrix of one twist: identity outside column `u`.
pub fn elementary_matrix(
    u: Vertex,
    sign: Sign,
    kind: &MatrixKind,
    spec: &PlumbingSpec,
) -> Result<TransferMatrix, Error> {
    spec.check_vertex(u)?;
    check_kind(kind)?;
    let dim = spec.vertex_count();
    let col = u.index();
    let (self_incr, neighbor_incrs) = twist_increments(u, sign, spec);
    Ok(match kind {
        MatrixKind::Unsigned => {
            let mut m = UnsignedMatrix::identity(dim);
            for (x, _) in &neighbor_incrs {
                m.set(x.index(), col, BigUint::one());
            }
            TransferMatrix::Unsigned(m)
        }
        MatrixKind::Signed { n } => {
            let mut m = SignedMatrix::identity(dim);
            m.set(col, col, shift_parity_sign(self_incr, *n));
            for (x, incr) in &neighbor_incrs {
                m.set(x.index(), col, shift_parity_sign(*incr, *n));
            }
            TransferMatrix::Signed { n: *n, matrix: m }
        }
        MatrixKind::Weighted { n, t } => {
            let mut m = WeightedMatrix::identity(dim);
            m.set(col, col, ShiftMultiset::singleton(self_incr));
            for (x, incr) in &neighbor_incrs {
                m.set(x.index(), col, ShiftMultiset::singleton(*incr));
            }
            TransferMatrix::Weighted {
                n: *n,
                t: t.clone(),
                matrix: m,
            }
        }
    })
}

/// Identity of the requested kind.
pub fn identity_matrix(kind: &MatrixKind, dim: usize) -> Result<TransferMatrix, Error> {
    check_kind(kind)?;
    Ok(match kind {
        MatrixKind::Unsigned => TransferMatrix::Unsigned(UnsignedMatrix::identity(dim)),
        MatrixKind::Signed { n } => TransferMatrix::Signed {
            n: *n,
            matrix: SignedMatrix::identity(dim),
        },
        MatrixKind::Weighted { n, t } => TransferMatrix::Weighted {
            n: *n,
            t: t.clone(),
            matrix: WeightedMatrix::identity(dim),
        },
    })
}

/// Product over `word^m` with the first-applied letter rightmost; `m = 0`
/// or the empty word give the identity.
pub fn word_matrix(
    word: &TwistWord,
    m: u32,
    kind: &MatrixKind,
    spec: &PlumbingSpec,
) -> Result<TransferMatrix, Error> {
    let mut acc = identity_matrix(kind, spec.vertex_count())?;
    for _ in 0..m {
        for letter in word.letters() {
            let e = elementary_matrix(letter.vertex, letter.sign, kind, spec)?;
            acc = e.mul(&acc)?;
        }
    }
    Ok(acc)
}

impl TransferMatrix {
    pub fn dim(&self) -> usize {
        match self {
            TransferMatrix::Unsigned(m) => m.dim(),
            TransferMatrix::Signed { matrix, .. } => matrix.dim(),
            TransferMatrix::Weighted { matrix, .. } => matrix.dim(),
        }
    }

    pub fn kind(&self) -> MatrixKind {
        match self {
            TransferMatrix::Unsigned(_) => MatrixKind::Unsigned,
            TransferMatrix::Signed { n, .. } => MatrixKind::Signed { n: *n },
            TransferMatrix::Weighted { n, t, .. } => MatrixKind::Weighted {
                n: *n,
                t: t.clone(),
            },
        }
    }

    pub fn mul(&self, rhs: &TransferMatrix) -> Result<TransferMatrix, Error> {
        match (self, rhs) {
            (TransferMatrix::Unsigned(a), TransferMatrix::Unsigned(b)) => {
                Ok(TransferMatrix::Unsigned(a.mul(b)))
            }
            (
                TransferMatrix::Signed { n, matrix: a },
                TransferMatrix::Signed { n: n2, matrix: b },
            ) if n == n2 => Ok(TransferMatrix::Signed {
                n: *n,
                matrix: a.mul(b),
            }),
            (
                TransferMatrix::Weighted { n, t, matrix: a },
                TransferMatrix::Weighted {
                    n: n2,
                    t: t2,
                    matrix: b,
                },
            ) if n == n2 && t == t2 => Ok(TransferMatrix::Weighted {
                n: *n,
                t: t.clone(),
                matrix: a.mul(b),
            }),
            _ => Err(Error::WeightedUnsupported),
        }
    }

    /// Exact power by repeated squaring.
    pub fn pow(&self, m: u32) -> TransferMatrix {
        match self {
            TransferMatrix::Unsigned(a) => TransferMatrix::Unsigned(a.pow(m)),
            TransferMatrix::Signed { n, matrix } => TransferMatrix::Signed {
                n: *n,
                matrix: matrix.pow(m),
            },
            TransferMatrix::Weighted { n, t, matrix } => TransferMatrix::Weighted {
                n: *n,
                t: t.clone(),
                matrix: matrix.pow(m),
            },
        }
    }

    pub fn as_unsigned(&self) -> Option<&UnsignedMatrix> {
        match self {
            TransferMatrix::Unsigned(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_signed(&self) -> Option<&SignedMatrix> {
        match self {
            TransferMatrix::Signed { matrix, .. } => Some(matrix),
            _ => None,
        }
    }

    pub fn as_weighted(&self) -> Option<&WeightedMatrix> {
        match self {
            TransferMatrix::Weighted { matrix, .. } => Some(matrix),
            _ => None,
        }
    }

    /// Monic `det(lambda I - A)`; integer kinds only.
    pub fn char_poly(&self) -> Result<IntPolynomial, Error> {
        match self {
            TransferMatrix::Unsigned(m) => Ok(char_poly(&m.to_signed())),
            TransferMatrix::Signed { matrix, .. } => Ok(char_poly(matrix)),
            TransferMatrix::Weighted { .. } => Err(Error::WeightedUnsupported),
        }
    }

    /// Certified spectral-radius enclosure of width at most `tol`.
    ///
    /// Unsigned matrices take the characteristic-polynomial route up to
    /// dimension 12 and Collatz-Wielandt beyond; signed matrices always go
    /// through the characteristic polynomial (their largest root magnitude
    /// may be complex); weighted matrices are evaluated at their `(t, n)`
    /// into rational interval bounds first.
    pub fn spectral_radius(&self, tol: &Rational) -> Result<RadiusEnclosure, Error> {
        assert!(tol > &Rational::zero(), "tolerance must be positive");
        match self {
            TransferMatrix::Unsigned(m) => {
                if m.dim() <= CHARPOLY_DIM_CUTOFF {
                    Ok(unsigned_radius_charpoly(m, tol))
                } else {
                    unsigned_radius_collatz_wielandt(m, tol)
                }
            }
            TransferMatrix::Signed { matrix, .. } => Ok(signed_radius_charpoly(matrix, tol)),
            TransferMatrix::Weighted { n, t, matrix } => weighted_radius(matrix, t, *n, tol),
        }
    }
}

/// Beyond this dimension, root isolation on the characteristic polynomial
/// gives way to Collatz-Wielandt bounds.
pub const CHARPOLY_DIM_CUTOFF: usize = 12;

/// Characteristic polynomial by Faddeev-LeVerrier; all divisions are exact
/// over the integers.
pub fn char_poly(a: &SignedMatrix) -> IntPolynomial {
    let d = a.dim();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    let mut m = SignedMatrix::identity(d);
    for k in 1..=d {
        let am = a.mul(&m);
        let (c, r) = (-am.trace()).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[d - k] = c.clone();
        if k < d {
            m = am;
            for i in 0..d {
                let v = m.get(i, i) + &c;
                m.set(i, i, v);
            }
        }
    }
    IntPolynomial::from_coeffs(coeffs)
}

fn rational_zero_clamp(x: Rational) -> Rational {
    if x.is_negative() {
        Rational::zero()
    } else {
        x
    }
}

/// Perron route for nonnegative matrices: the radius is the largest real
/// root of the characteristic polynomial.
pub fn unsigned_radius_charpoly(m: &UnsignedMatrix, tol: &Rational) -> RadiusEnclosure {
    let p = char_poly(&m.to_signed());
    let enc = poly::max_real_root(&p, tol).expect("a nonnegative matrix has a real Perron root");
    RadiusEnclosure {
        lo: rational_zero_clamp(enc.lo),
        hi: rational_zero_clamp(enc.hi),
        method: RadiusMethod::CharPoly,
    }
}

/// Largest root magnitude of an integer matrix, via the polynomial whose
/// roots are all pairwise eigenvalue products. Its largest real root is
/// exactly the squared spectral radius.
pub fn signed_radius_charpoly(a: &SignedMatrix, tol: &Rational) -> RadiusEnclosure {
    let d = a.dim();
    let dd = d * d;
    // Power sums of the product eigenvalues: tr(A^k)^2.
    let mut power_sums = Vec::with_capacity(dd);
    let mut p = a.clone();
    power_sums.push(&p.trace() * &p.trace());
    for _ in 1..dd {
        p = p.mul(a);
        let t = p.trace();
        power_sums.push(&t * &t);
    }
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} p_i e_{k-i}.
    let mut elementary = vec![BigInt::one()];
    for k in 1..=dd {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &power_sums[i - 1] * &elementary[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        elementary.push(q);
    }
    let mut coeffs = vec![BigInt::zero(); dd + 1];
    for (k, e) in elementary.into_iter().enumerate() {
        coeffs[dd - k] = if k % 2 == 0 { e } else { -e };
    }
    let q = IntPolynomial::from_coeffs(coeffs);

    let half = tol / Rational::from(BigInt::from(2));
    let tol_sq = &half * &half;
    let enc = poly::max_real_root(&q, &tol_sq)
        .expect("the squared radius is always a real root");
    let lo_sq = rational_zero_clamp(enc.lo);
    let hi_sq = rational_zero_clamp(enc.hi);
    let quarter = &half / Rational::from(BigInt::from(2));
    let (lo, hi) = poly::sqrt_enclosure(&lo_sq, &hi_sq, &quarter);
    RadiusEnclosure {
        lo,
        hi,
        method: RadiusMethod::CharPoly,
    }
}

const MAX_SQUARINGS: usize = 16;

/// Collatz-Wielandt enclosure for a nonnegative matrix: decomposes into
/// strongly connected components (zero rows would break the lower bound),
/// adds the identity to each nontrivial block so the iteration cannot
/// oscillate, and brackets the Perron root by min/max ratios of power
/// iterates.
pub fn unsigned_radius_collatz_wielandt(
    m: &UnsignedMatrix,
    tol: &Rational,
) -> Result<RadiusEnclosure, Error> {
    let dim = m.dim();
    let adj: Vec<Vec<usize>> = (0..dim)
        .map(|i| (0..dim).filter(|&j| !m.get(i, j).is_zero()).collect())
        .collect();
    let components = strongly_connected_components(&adj);

    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    let mut hit_cap = false;
    for component in &components {
        let (comp_lo, comp_hi) = if component.len() == 1 {
            let i = component[0];
            let exact = Rational::from(BigInt::from(m.get(i, i).clone()));
            (exact.clone(), exact)
        } else {
            let sub = m.submatrix(component);
            let mut b = sub;
            b.add_identity();
            let one = Rational::one();
            let ones = vec![BigUint::one(); component.len()];
            let mut best_lo = Rational::zero();
            let mut best_hi: Option<Rational> = None;
            let mut power = b.clone();
            for round in 0..=MAX_SQUARINGS {
                let v = power.mul_vec(&ones);
                let bv = b.mul_vec(&v);
                let mut round_lo: Option<Rational> = None;
                let mut round_hi: Option<Rational> = None;
                for (num, den) in bv.iter().zip(v.iter()) {
                    let ratio = Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()));
                    if round_lo.as_ref().is_none_or(|r| &ratio < r) {
                        round_lo = Some(ratio.clone());
                    }
                    if round_hi.as_ref().is_none_or(|r| &ratio > r) {
                        round_hi = Some(ratio);
                    }
                }
                let round_lo = round_lo.unwrap() - &one;
                let round_hi = round_hi.unwrap() - &one;
                if round_lo > best_lo {
                    best_lo = round_lo;
                }
                if best_hi.as_ref().is_none_or(|h| &round_hi < h) {
                    best_hi = Some(round_hi);
                }
                let done = best_hi
                    .as_ref()
                    .is_some_and(|h| h - &best_lo <= *tol);
                if done {
                    break;
                }
                if round == MAX_SQUARINGS {
                    hit_cap = true;
                } else {
                    power = power.mul(&power);
                }
            }
            (best_lo, best_hi.expect("at least one round"))
        };
        if comp_lo > lo {
            lo = comp_lo;
        }
        if comp_hi > hi {
            hi = comp_hi;
        }
    }
    let enclosure = RadiusEnclosure {
        lo,
        hi,
        method: RadiusMethod::CollatzWielandt,
    };
    if hit_cap {
        Err(Error::IterationLimit(alloc::boxed::Box::new(enclosure)))
    } else {
        Ok(enclosure)
    }
}

/// Certified enclosure of `e^x` for rational `x`: argument halving, a
/// 24-term Taylor tail bound on `(0, 1/2]`, then interval squaring.
pub fn exp_enclosure(x: &Rational) -> (Rational, Rational) {
    if x.is_zero() {
        return (Rational::one(), Rational::one());
    }
    if x.is_negative() {
        let (lo, hi) = exp_enclosure(&-x.clone());
        return (hi.recip(), lo.recip());
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut halvings = 0usize;
    let mut y = x.clone();
    while y > half {
        y /= Rational::from(BigInt::from(2));
        halvings += 1;
    }
    const TERMS: u32 = 24;
    let mut sum = Rational::zero();
    let mut term = Rational::one(); // y^i / i!
    for i in 0..=TERMS {
        sum += &term;
        term = term * &y / Rational::from(BigInt::from(i as i64 + 1));
    }
    // Tail: y^{T+1}/(T+1)! * 1/(1 - y) <= 2 * current term, for y <= 1/2.
    let tail = &term + &term;
    let mut lo = sum.clone();
    let mut hi = sum + tail;
    for _ in 0..halvings {
        lo = &lo * &lo;
        hi = &hi * &hi;
    }
    (lo, hi)
}

/// Spectral radius of a weighted matrix evaluated at `(t, n)`. Entries are
/// enclosed in rational intervals; the Perron root is monotone in the
/// entries of a nonnegative matrix, so the two scaled integer radii
/// bracket the truth.
pub fn weighted_radius(
    matrix: &WeightedMatrix,
    t: &Rational,
    n: i64,
    tol: &Rational,
) -> Result<RadiusEnclosure, Error> {
    if n < 3 {
        return Err(Error::DimensionTooSmall(n));
    }
    let dim = matrix.dim();
    let mut lo_entries = vec![Rational::zero(); dim * dim];
    let mut hi_entries = vec![Rational::zero(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let mut lo = Rational::zero();
            let mut hi = Rational::zero();
            for (shift, count) in matrix.get(i, j).iter() {
                let exponent = t * Rational::from(BigInt::from(shift.eval(n)));
                let (e_lo, e_hi) = exp_enclosure(&exponent);
                let count = Rational::from(BigInt::from(count.clone()));
                lo += &count * e_lo;
                hi += &count * e_hi;
            }
            lo_entries[i * dim + j] = lo;
            hi_entries[i * dim + j] = hi;
        }
    }

    let radius_side = |entries: &[Rational], upper: bool| -> Result<Rational, Error> {
        let mut denom = BigInt::one();
        for e in entries {
            denom = denom.lcm(e.denom());
        }
        let mut scaled = UnsignedMatrix::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = &entries[i * dim + j] * Rational::from(denom.clone());
                debug_assert!(v.is_integer());
                scaled.set(i, j, v.to_integer().magnitude().clone());
            }
        }
        let scaled_tol = tol * Rational::from(denom.clone());
        let enclosure = if dim <= CHARPOLY_DIM_CUTOFF {
            unsigned_radius_charpoly(&scaled, &scaled_tol)
        } else {
            unsigned_radius_collatz_wielandt(&scaled, &scaled_tol)?
        };
        let pick = if upper { enclosure.hi } else { enclosure.lo };
        Ok(pick / Rational::from(denom))
    };

    let lo = radius_side(&lo_entries, false)?;
    let hi = radius_side(&hi_entries, true)?;
    Ok(RadiusEnclosure {
        lo,
        hi,
        method: if dim <= CHARPOLY_DIM_CUTOFF {
            RadiusMethod::CharPoly
        } else {
            RadiusMethod::CollatzWielandt
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plumbing::build_plumbing;
    use num_traits::ToPrimitive;

    fn a3(n: i64) -> PlumbingSpec {
        build_plumbing(&["1", "2", "3"], &[("1", "2"), ("2", "3")], n, &[]).unwrap()
    }

    fn a3_word(spec: &PlumbingSpec) -> TwistWord {
        TwistWord::from_named(
            spec,
            &[("3", Sign::Pos), ("2", Sign::Neg), ("1", Sign::Pos)],
        )
        .unwrap()
    }

    fn signed_rows(m: &SignedMatrix) -> Vec<Vec<i64>> {
        (0..m.dim())
            .map(|i| (0..m.dim()).map(|j| m.get(i, j).to_i64().unwrap()).collect())
            .collect()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn elementary_signed_matrices_match_both_parities() {
        for (n, b1, b2, b3) in [
            (
                5, // odd
                vec![vec![1, 0, 0], vec![-1, 1, 0], vec![0, 0, 1]],
                vec![vec![1, -1, 0], vec![0, 1, 0], vec![0, 1, 1]],
                vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]],
            ),
            (
                4, // even
                vec![vec![-1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]],
                vec![vec![1, 1, 0], vec![0, -1, 0], vec![0, 1, 1]],
                vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, -1]],
            ),
        ] {
            let spec = a3(n);
            let kind = MatrixKind::Signed { n };
            let v = |s: &str| spec.vertex(s).unwrap();
            let e1 = elementary_matrix(v("1"), Sign::Pos, &kind, &spec).unwrap();
            let e2 = elementary_matrix(v("2"), Sign::Neg, &kind, &spec).unwrap();
            let e3 = elementary_matrix(v("3"), Sign::Pos, &kind, &spec).unwrap();
            assert_eq!(signed_rows(e1.as_signed().unwrap()), b1, "n = {n}");
            assert_eq!(signed_rows(e2.as_signed().unwrap()), b2, "n = {n}");
            assert_eq!(signed_rows(e3.as_signed().unwrap()), b3, "n = {n}");
        }
    }

    #[test]
    fn word_products_match_both_parities() {
        let spec = a3(5);
        let word = a3_word(&spec);
        let odd = word_matrix(&word, 1, &MatrixKind::Signed { n: 5 }, &spec).unwrap();
        assert_eq!(
            signed_rows(odd.as_signed().unwrap()),
            vec![vec![1, -1, -1], vec![-1, 2, 2], vec![0, 1, 2]]
        );
        let even = word_matrix(&word, 1, &MatrixKind::Signed { n: 4 }, &spec).unwrap();
        assert_eq!(
            signed_rows(even.as_signed().unwrap()),
            vec![vec![-1, -1, -1], vec![1, 0, 0], vec![0, 1, 0]]
        );
        let unsigned = word_matrix(&word, 1, &MatrixKind::Unsigned, &spec).unwrap();
        assert_eq!(unsigned.as_signed(), None);
        let u = unsigned.as_unsigned().unwrap();
        let expected: [[u32; 3]; 3] = [[1, 1, 1], [1, 2, 2], [0, 1, 2]];
        for (i, row) in expected.iter().enumerate() {
            for (j, value) in row.iter().enumerate() {
                assert_eq!(u.get(i, j), &BigUint::from(*value));
            }
        }
        // Entrywise |signed at odd n| equals unsigned.
        assert_eq!(&odd.as_signed().unwrap().abs(), u);
    }

    #[test]
    fn char_polys_of_the_word_products() {
        let spec = a3(5);
        let word = a3_word(&spec);
        let unsigned = word_matrix(&word, 1, &MatrixKind::Unsigned, &spec).unwrap();
        assert_eq!(
            unsigned.char_poly().unwrap(),
            IntPolynomial::from_i64(&[-1, 5, -5, 1])
        );
        let even = word_matrix(&word, 1, &MatrixKind::Signed { n: 4 }, &spec).unwrap();
        assert_eq!(
            even.char_poly().unwrap(),
            IntPolynomial::from_i64(&[1, 1, 1, 1])
        );
        let id = identity_matrix(&MatrixKind::Unsigned, 3).unwrap();
        assert_eq!(
            id.char_poly().unwrap(),
            IntPolynomial::from_i64(&[-1, 3, -3, 1])
        );
        let weighted =
            word_matrix(&word, 1, &MatrixKind::Weighted { n: 5, t: rat(0, 1) }, &spec).unwrap();
        assert_eq!(weighted.char_poly(), Err(Error::WeightedUnsupported));
    }

    #[test]
    fn radius_of_the_unsigned_product() {
        let spec = a3(5);
        let word = a3_word(&spec);
        let unsigned = word_matrix(&word, 1, &MatrixKind::Unsigned, &spec).unwrap();
        let tol = rat(1, 1_000_000_000);
        let enc = unsigned.spectral_radius(&tol).unwrap();
        assert!(enc.width() <= tol);
        let target = 2.0 + 1.732050807568877;
        assert!(enc.lo.to_f64().unwrap() <= target && target <= enc.hi.to_f64().unwrap());

        // Identity: exactly [1, 1].
        let id = identity_matrix(&MatrixKind::Unsigned, 3).unwrap();
        let enc = id.spectral_radius(&tol).unwrap();
        assert_eq!(enc.lo, rat(1, 1));
        assert_eq!(enc.hi, rat(1, 1));
    }

    #[test]
    fn radius_of_the_even_signed_product_is_one() {
        let spec = a3(4);
        let word = a3_word(&spec);
        let even = word_matrix(&word, 1, &MatrixKind::Signed { n: 4 }, &spec).unwrap();
        let tol = rat(1, 1_000_000_000);
        let enc = even.spectral_radius(&tol).unwrap();
        assert!(enc.contains(&rat(1, 1)));
        assert!(enc.width() <= tol);
    }

    #[test]
    fn collatz_wielandt_agrees_with_charpoly() {
        let spec = a3(5);
        let word = a3_word(&spec);
        let m = word_matrix(&word, 1, &MatrixKind::Unsigned, &spec).unwrap();
        let m = m.as_unsigned().unwrap();
        let tol = rat(1, 1_000_000);
        let cp = unsigned_radius_charpoly(m, &tol);
        let cw = unsigned_radius_collatz_wielandt(m, &tol).unwrap();
        assert!(cp.intersects(&cw));
        assert!(cw.width() <= tol);
        assert_eq!(cw.method, RadiusMethod::CollatzWielandt);
    }

    #[test]
    fn matrix_power_matches_count_route() {
        let spec = a3(5);
        let word = a3_word(&spec);
        let m1 = word_matrix(&word, 1, &MatrixKind::Unsigned, &spec).unwrap();
        let m2 = word_matrix(&word, 2, &MatrixKind::Unsigned, &spec).unwrap();
        assert_eq!(m1.pow(2), m2);
        let counts = crate::twist::count_matrix(&word, 2, &spec).unwrap();
        assert_eq!(m1.pow(2).as_unsigned().unwrap(), &counts);
        assert_eq!(m1.pow(0), identity_matrix(&MatrixKind::Unsigned, 3).unwrap());
    }

    #[test]
    fn weighted_at_t_zero_is_unsigned() {
        let spec = a3(5);
        let word = a3_word(&spec);
        let w = word_matrix(&word, 2, &MatrixKind::Weighted { n: 5, t: rat(0, 1) }, &spec)
            .unwrap();
        let u = word_matrix(&word, 2, &MatrixKind::Unsigned, &spec).unwrap();
        assert_eq!(&w.as_weighted().unwrap().totals(), u.as_unsigned().unwrap());
        let tol = rat(1, 1_000_000_000);
        let wr = w.spectral_radius(&tol).unwrap();
        let ur = u.spectral_radius(&tol).unwrap();
        assert!(wr.intersects(&ur));
    }

    #[test]
    fn exp_enclosure_brackets_known_values() {
        let (lo, hi) = exp_enclosure(&rat(0, 1));
        assert_eq!((lo, hi), (rat(1, 1), rat(1, 1)));
        let (lo, hi) = exp_enclosure(&rat(1, 1));
        let e = core::f64::consts::E;
        assert!(lo.to_f64().unwrap() <= e && e <= hi.to_f64().unwrap());
        assert!((&hi - &lo).to_f64().unwrap() < 1e-20);
        let (lo, hi) = exp_enclosure(&rat(-3, 2));
        let v = libm::exp(-1.5);
        assert!(lo.to_f64().unwrap() <= v && v <= hi.to_f64().unwrap());
    }
}
