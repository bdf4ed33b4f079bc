//! Symbolic homological shifts of the form `a + b*n`.
//!
//! Keeping shifts symbolic in the plumbing dimension means a rewritten
//! complex is computed once and is valid for every `n >= 3` at the same
//! time; concrete integers appear only at evaluation boundaries.

use core::fmt;
use core::ops::{Add, AddAssign, Neg};

/// The shift `a + b*n`, symbolic in the dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ShiftExpr {
    /// Constant part.
    pub a: i64,
    /// Coefficient of `n`.
    pub b: i64,
}

impl ShiftExpr {
    pub const ZERO: ShiftExpr = ShiftExpr { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        ShiftExpr { a, b }
    }

    /// Evaluate at a concrete dimension.
    pub const fn eval(self, n: i64) -> i64 {
        self.a + self.b * n
    }

    pub const fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl Add for ShiftExpr {
    type Output = ShiftExpr;
    fn add(self, rhs: ShiftExpr) -> ShiftExpr {
        ShiftExpr::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for ShiftExpr {
    fn add_assign(&mut self, rhs: ShiftExpr) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Neg for ShiftExpr {
    type Output = ShiftExpr;
    fn neg(self) -> ShiftExpr {
        ShiftExpr::new(-self.a, -self.b)
    }
}

/// Normal form used everywhere shifts are printed: `"0"`, `"-1"`, `"1-n"`,
/// `"n-2"`, `"2-2n"`, `"n+1"`, ...  The `n` part leads when its coefficient
/// is positive.
impl fmt::Display for ShiftExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_n_part(f: &mut fmt::Formatter<'_>, b: i64) -> fmt::Result {
            match b {
                1 => write!(f, "n"),
                -1 => write!(f, "-n"),
                _ => write!(f, "{b}n"),
            }
        }
        if self.b == 0 {
            return write!(f, "{}", self.a);
        }
        if self.b > 0 {
            write_n_part(f, self.b)?;
            match self.a {
                0 => Ok(()),
                a if a > 0 => write!(f, "+{a}"),
                a => write!(f, "{a}"),
            }
        } else {
            if self.a != 0 {
                write!(f, "{}", self.a)?;
            }
            write_n_part(f, self.b)
        }
    }
}
