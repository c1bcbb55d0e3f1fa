//! Exact 2x2 integer matrices.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[BigInt; 2]; 2]);

impl Mat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self([[a.into(), b.into()], [c.into(), d.into()]])
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn zero() -> Self {
        Self::new(0, 0, 0, 0)
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.0[i][j]
    }

    pub fn det(&self) -> BigInt {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    pub fn trace(&self) -> BigInt {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Exact inverse via the adjugate; requires `det = ±1`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotInvertible);
        }
        let [[a, b], [c, d]] = &self.0;
        Ok(Self([[d * &det, -b * &det], [-c * &det, a * &det]]))
    }

    /// `A^e`, negative exponents through the exact inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut base = base;
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `A (h_1, h_2)^T`.
    pub fn apply(&self, h: &[BigInt; 2]) -> [BigInt; 2] {
        [
            &self.0[0][0] * &h[0] + &self.0[0][1] * &h[1],
            &self.0[1][0] * &h[0] + &self.0[1][1] * &h[1],
        ]
    }

    /// Order in `GL(2, Z)` if finite and at most `limit`.
    pub fn finite_order(&self, limit: u32) -> Option<u32> {
        let id = Self::identity();
        let mut cur = self.clone();
        for k in 1..=limit {
            if cur == id {
                return Some(k);
            }
            cur = &cur * self;
        }
        None
    }

    pub fn to_i64(&self) -> Option<[[i64; 2]; 2]> {
        let e = |i: usize, j: usize| i64::try_from(&self.0[i][j]).ok();
        Some([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]])
    }

    pub fn entries(&self) -> Vec<BigInt> {
        self.0.iter().flatten().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &self.0[i][0] * &rhs.0[0][j] + &self.0[i][1] * &rhs.0[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        let [[a, b], [c, d]] = &self.0;
        Mat2([[-a, -b], [-c, -d]])
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.0;
        write!(f, "(({a},{b}),({c},{d}))")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_and_inverse() {
        let a = Mat2::new(-3, 1, -11, 4);
        assert_eq!(a.det(), BigInt::from(-1));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Mat2::identity());
        assert_eq!(a.pow(-2).unwrap(), &inv * &inv);
        assert_eq!(a.pow(0).unwrap(), Mat2::identity());
        assert_eq!(a.pow(3).unwrap(), &(&a * &a) * &a);
        assert_eq!(Mat2::new(2, 0, 0, 1).inverse(), Err(Error::NotInvertible));
        assert_eq!(a.finite_order(12), None);
        assert_eq!(Mat2::new(-4, 1, -17, 4).finite_order(12), Some(4));
        assert_eq!(a.to_string(), "((-3,1),(-11,4))");
    }
}
