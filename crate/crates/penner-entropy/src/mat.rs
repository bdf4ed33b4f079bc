//! Exact square matrices: big-integer entries for counts and homology
//! actions, shift multisets for length weights.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::shift::ShiftExpr;

/// Square matrix with nonnegative big-integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsignedMatrix {
    dim: usize,
    data: Vec<BigUint>,
}

impl UnsignedMatrix {
    pub fn zero(dim: usize) -> Self {
        UnsignedMatrix {
            dim,
            data: vec![BigUint::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, BigUint::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigUint {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigUint) {
        self.data[row * self.dim + col] = value;
    }

    pub fn mul(&self, rhs: &UnsignedMatrix) -> UnsignedMatrix {
        assert_eq!(self.dim, rhs.dim);
        let dim = self.dim;
        let mut out = UnsignedMatrix::zero(dim);
        for i in 0..dim {
            for k in 0..dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * dim + j] += a * b;
                }
            }
        }
        out
    }

    /// Exact power by repeated squaring; `m = 0` gives the identity.
    pub fn pow(&self, m: u32) -> UnsignedMatrix {
        let mut result = UnsignedMatrix::identity(self.dim);
        let mut base = self.clone();
        let mut exp = m;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Sum of all entries.
    pub fn entry_sum(&self) -> BigUint {
        self.data.iter().sum()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigUint]) -> Vec<BigUint> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn to_signed(&self) -> SignedMatrix {
        SignedMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| BigInt::from(x.clone())).collect(),
        }
    }

    /// The principal submatrix on `rows` (used per strongly connected
    /// component).
    pub fn submatrix(&self, rows: &[usize]) -> UnsignedMatrix {
        let dim = rows.len();
        let mut out = UnsignedMatrix::zero(dim);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in rows.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Adds the identity in place.
    pub fn add_identity(&mut self) {
        for i in 0..self.dim {
            self.data[i * self.dim + i] += BigUint::one();
        }
    }
}

/// Square matrix with signed big-integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl SignedMatrix {
    pub fn zero(dim: usize) -> Self {
        SignedMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.data[row * self.dim + col] = value;
    }

    pub fn mul(&self, rhs: &SignedMatrix) -> SignedMatrix {
        assert_eq!(self.dim, rhs.dim);
        let dim = self.dim;
        let mut out = SignedMatrix::zero(dim);
        for i in 0..dim {
            for k in 0..dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * dim + j] += a * b;
                }
            }
        }
        out
    }

    pub fn pow(&self, m: u32) -> SignedMatrix {
        let mut result = SignedMatrix::identity(self.dim);
        let mut base = self.clone();
        let mut exp = m;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Entrywise absolute value.
    pub fn abs(&self) -> UnsignedMatrix {
        UnsignedMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .map(|x| x.magnitude().clone())
                .collect(),
        }
    }

    /// Conjugate by a diagonal `+-1` matrix: `D A D^{-1}`. Leaves every
    /// spectral quantity unchanged.
    pub fn conjugate_diag_signs(&self, signs: &[bool]) -> SignedMatrix {
        assert_eq!(signs.len(), self.dim);
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if signs[i] != signs[j] {
                    let v = out.get(i, j).clone();
                    out.set(i, j, -v);
                }
            }
        }
        out
    }
}

/// A finite multiset of symbolic shifts; the weighted transfer matrices
/// store one per entry so that evaluation at concrete `(t, n)` happens only
/// at the boundary.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShiftMultiset {
    counts: BTreeMap<ShiftExpr, BigUint>,
}

impl ShiftMultiset {
    pub fn empty() -> Self {
        ShiftMultiset::default()
    }

    pub fn singleton(shift: ShiftExpr) -> Self {
        let mut counts = BTreeMap::new();
        counts.insert(shift, BigUint::one());
        ShiftMultiset { counts }
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn insert(&mut self, shift: ShiftExpr, multiplicity: BigUint) {
        if multiplicity.is_zero() {
            return;
        }
        *self.counts.entry(shift).or_insert_with(BigUint::zero) += multiplicity;
    }

    /// Total multiplicity; equals the unsigned count of the same entry.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ShiftExpr, &BigUint)> {
        self.counts.iter()
    }

    /// Minkowski sum: all pairwise shift sums, multiplicities multiplied.
    pub fn convolve(&self, rhs: &ShiftMultiset) -> ShiftMultiset {
        let mut out = ShiftMultiset::empty();
        for (&s1, c1) in &self.counts {
            for (&s2, c2) in &rhs.counts {
                out.insert(s1 + s2, c1 * c2);
            }
        }
        out
    }

    pub fn union_with(&mut self, rhs: &ShiftMultiset) {
        for (&s, c) in &rhs.counts {
            self.insert(s, c.clone());
        }
    }
}

/// Square matrix of shift multisets, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedMatrix {
    dim: usize,
    data: Vec<ShiftMultiset>,
}

impl WeightedMatrix {
    pub fn zero(dim: usize) -> Self {
        WeightedMatrix {
            dim,
            data: vec![ShiftMultiset::empty(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, ShiftMultiset::singleton(ShiftExpr::ZERO));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &ShiftMultiset {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: ShiftMultiset) {
        self.data[row * self.dim + col] = value;
    }

    pub fn mul(&self, rhs: &WeightedMatrix) -> WeightedMatrix {
        assert_eq!(self.dim, rhs.dim);
        let dim = self.dim;
        let mut out = WeightedMatrix::zero(dim);
        for i in 0..dim {
            for k in 0..dim {
                let a = self.get(i, k);
                if a.is_empty() {
                    continue;
                }
                for j in 0..dim {
                    let b = rhs.get(k, j);
                    if b.is_empty() {
                        continue;
                    }
                    let prod = a.convolve(b);
                    out.data[i * dim + j].union_with(&prod);
                }
            }
        }
        out
    }

    pub fn pow(&self, m: u32) -> WeightedMatrix {
        let mut result = WeightedMatrix::identity(self.dim);
        let mut base = self.clone();
        let mut exp = m;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Forgets the shifts: total multiplicities per entry.
    pub fn totals(&self) -> UnsignedMatrix {
        UnsignedMatrix {
            dim: self.dim,
            data: self.data.iter().map(|m| m.total()).collect(),
        }
    }
}
