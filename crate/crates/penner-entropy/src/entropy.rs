//! Entropy reports: empirical growth sequences, exact entropy as the log
//! of a certified spectral-radius enclosure, and parity comparisons.
//!
//! For a Penner-type word the categorical entropy equals
//! `log rad(unsigned word matrix)`; the unsigned product never references
//! the dimension, which is why the reported value is identical for every
//! `n >= 3` over a fixed tree and word. Floating point enters only at the
//! final `log`, with the rounding slop absorbed by a fixed padding.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::mat::UnsignedMatrix;
use crate::plumbing::PlumbingSpec;
use crate::transfer::{
    word_matrix, MatrixKind, RadiusEnclosure, TransferMatrix, CHARPOLY_DIM_CUTOFF,
};
use crate::twist::count_matrix;
use crate::word::{validate_penner, PennerReport, TwistWord};
use crate::Rational;

/// Two-sided float bound on a logarithm of an enclosed quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogEnclosure {
    pub lo: f64,
    pub hi: f64,
}

impl LogEnclosure {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lo <= value && value <= self.hi
    }
}

/// Natural log of a positive big integer, good to a few ulps at any size.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 53 {
        return libm::log(x.to_u64().expect("fits in 53 bits") as f64);
    }
    let shift = bits - 53;
    let top = (x >> shift).to_u64().expect("exactly 53 bits") as f64;
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

/// Natural log of a positive rational.
pub fn ln_rational(x: &Rational) -> f64 {
    debug_assert!(x > &Rational::zero());
    ln_biguint(x.numer().magnitude()) - ln_biguint(x.denom().magnitude())
}

/// Absolute slop added around each log endpoint to cover float rounding in
/// [`ln_rational`]; orders of magnitude below every tolerance in use.
const LOG_PAD: f64 = 1e-13;

/// Maps a radius enclosure through `log`, padding outward. An endpoint that
/// is exactly 1 maps to exactly 0, so unit radii produce entropy 0 with no
/// width at all.
pub fn log_enclosure(radius: &RadiusEnclosure, clamp_nonnegative: bool) -> LogEnclosure {
    let one = Rational::one();
    let lo = if radius.lo == one {
        0.0
    } else if radius.lo.is_zero() {
        f64::NEG_INFINITY
    } else {
        ln_rational(&radius.lo) - LOG_PAD
    };
    let hi = if radius.hi == one {
        0.0
    } else {
        ln_rational(&radius.hi) + LOG_PAD
    };
    let lo = if clamp_nonnegative && lo < 0.0 { 0.0 } else { lo };
    LogEnclosure { lo, hi }
}

fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x).filter(|r| r > &Rational::zero())
}

/// `(m, (1/m) log(total count of word^m))` for `m = 1..=m_max`, with the
/// counts taken from exact matrix powers of the one-step count matrix.
pub fn empirical_entropy_sequence(
    word: &TwistWord,
    spec: &PlumbingSpec,
    m_max: u32,
) -> Result<Vec<(u32, f64)>, Error> {
    let step = count_matrix(word, 1, spec)?;
    let mut power = UnsignedMatrix::identity(spec.vertex_count());
    let mut out = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        power = power.mul(&step);
        let total = power.entry_sum();
        out.push((m, ln_biguint(&total) / f64::from(m)));
    }
    Ok(out)
}

/// The exact entropy of a Penner word: the log of a certified enclosure of
/// the unsigned transfer radius, with total log-width at most `tol`.
/// Returns the radius enclosure alongside the log so no information is
/// lost. Non-Penner words are rejected unless `allow_non_penner` is set,
/// in which case the same number is computed but is only an upper-route
/// heuristic.
pub fn exact_entropy(
    word: &TwistWord,
    spec: &PlumbingSpec,
    tol: f64,
    allow_non_penner: bool,
) -> Result<(RadiusEnclosure, LogEnclosure), Error> {
    let penner = validate_penner(word, spec)?;
    if !penner.is_penner && !allow_non_penner {
        return Err(Error::NotPennerType);
    }
    let matrix = word_matrix(word, 1, &MatrixKind::Unsigned, spec)?;
    unsigned_log_radius(&matrix, tol)
}

/// Radius and log enclosure of an unsigned word product. Every elementary
/// unsigned matrix has unit diagonal, so the radius is at least 1 and the
/// lower end is clamped there; that keeps `log` Lipschitz and the entropy
/// nonnegative.
fn unsigned_log_radius(
    matrix: &TransferMatrix,
    tol: f64,
) -> Result<(RadiusEnclosure, LogEnclosure), Error> {
    let half_tol = rational_from_f64(tol / 2.0)
        .expect("tolerance must be positive and finite");
    let mut radius = matrix.spectral_radius(&half_tol)?;
    let one = Rational::one();
    if radius.lo < one {
        radius.lo = one;
    }
    let log = log_enclosure(&radius, true);
    Ok((radius, log))
}

/// A signed-homology radius at a concrete dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedRadius {
    pub n: i64,
    pub enclosure: RadiusEnclosure,
}

/// One exploratory weighted-radius entry.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedEntry {
    pub t: Rational,
    pub radius: RadiusEnclosure,
    pub log: LogEnclosure,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportOptions {
    pub m_max: u32,
    pub tol: f64,
    pub t_values: Vec<Rational>,
    pub allow_non_penner: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            m_max: 30,
            tol: 1e-9,
            t_values: Vec::new(),
            allow_non_penner: false,
        }
    }
}

/// Everything the CLI prints about one word on one plumbing.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    pub word: TwistWord,
    pub penner: PennerReport,
    pub empirical: Vec<(u32, f64)>,
    pub unsigned_radius: RadiusEnclosure,
    /// The categorical entropy: log of `unsigned_radius`.
    pub exact: LogEnclosure,
    pub signed_odd: Option<SignedRadius>,
    pub signed_even: Option<SignedRadius>,
    pub t_weighted: Vec<WeightedEntry>,
    pub notes: Vec<String>,
}

/// Assembles the full report: empirical sequence, exact entropy, signed
/// radii at one odd and one even dimension, and optional weighted radii.
pub fn entropy_report(
    spec: &PlumbingSpec,
    word: &TwistWord,
    options: &ReportOptions,
) -> Result<EntropyReport, Error> {
    let penner = validate_penner(word, spec)?;
    if !penner.is_penner && !options.allow_non_penner {
        return Err(Error::NotPennerType);
    }
    let unsigned = word_matrix(word, 1, &MatrixKind::Unsigned, spec)?;
    let (unsigned_radius, exact) = unsigned_log_radius(&unsigned, options.tol)?;
    let empirical = empirical_entropy_sequence(word, spec, options.m_max)?;

    let half_tol = rational_from_f64(options.tol / 2.0)
        .expect("tolerance must be positive and finite");
    let odd_n = if spec.n() % 2 != 0 { spec.n() } else { spec.n() + 1 };
    let even_n = if spec.n() % 2 == 0 { spec.n() } else { spec.n() + 1 };
    let mut notes: Vec<String> = Vec::new();

    let (signed_odd, signed_even) = if spec.vertex_count() <= CHARPOLY_DIM_CUTOFF {
        let signed_at = |n: i64| -> Result<SignedRadius, Error> {
            let m = word_matrix(word, 1, &MatrixKind::Signed { n }, spec)?;
            Ok(SignedRadius {
                n,
                enclosure: m.spectral_radius(&half_tol)?,
            })
        };
        (Some(signed_at(odd_n)?), Some(signed_at(even_n)?))
    } else {
        notes.push(format!(
            "signed homology radii omitted: tree has {} vertices, root isolation is limited to {}",
            spec.vertex_count(),
            CHARPOLY_DIM_CUTOFF
        ));
        (None, None)
    };

    let mut t_weighted = Vec::with_capacity(options.t_values.len());
    for t in &options.t_values {
        let kind = MatrixKind::Weighted {
            n: spec.n(),
            t: t.clone(),
        };
        let m = word_matrix(word, 1, &kind, spec)?;
        let radius = m.spectral_radius(&half_tol)?;
        let log = log_enclosure(&radius, false);
        t_weighted.push(WeightedEntry {
            t: t.clone(),
            radius,
            log,
        });
    }

    if penner.is_penner {
        notes.push(
            "Penner-type word: the categorical entropy is a lower bound for the topological entropy (h_cat <= h_top)"
                .into(),
        );
    } else {
        notes.push(
            "word is not of Penner type: the reported radius is an upper-route heuristic, not a proven entropy"
                .into(),
        );
    }
    notes.push(
        "the compact and wrapped Fukaya categories give the same entropy; a single value is reported"
            .into(),
    );
    if !t_weighted.is_empty() {
        notes.push(
            "t-weighted radii are EXPLORATORY growth rates of weighted complex lengths; only t = 0 is the entropy"
                .into(),
        );
    }

    Ok(EntropyReport {
        word: word.clone(),
        penner,
        empirical,
        unsigned_radius,
        exact,
        signed_odd,
        signed_even,
        t_weighted,
        notes,
    })
}
