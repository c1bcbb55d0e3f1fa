//! Integer polynomials modulo `t(x) = x^n + p_{n-1} x^{n-1} + ... + p_1 x - q`.
//!
//! Elements of `Z^n` are identified with residues `r_0 + r_1 x + ... + r_{n-1} x^{n-1}`
//! of the quotient ring `Z[x]/<t>`. Two polynomials are equivalent when `t`
//! divides their difference.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Presentation parameters `(p_1, ..., p_{n-1}; q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReprParams {
    p: Vec<i64>,
    q: i64,
}

impl ReprParams {
    /// Validated constructor; `p` holds `p_1, ..., p_{n-1}` so `n = p.len() + 1`.
    pub fn new(p: Vec<i64>, q: i64) -> Result<Self> {
        let params = Self::new_unchecked(p, q);
        params.validate()?;
        Ok(params)
    }

    /// Builds parameters without checking the dominance inequality. Useful for
    /// exploring what goes wrong without it; every compilation entry point
    /// re-validates.
    pub fn new_unchecked(p: Vec<i64>, q: i64) -> Self {
        Self { p, q }
    }

    /// Convenience for the quadratic case `t(x) = x^2 + p x - q`.
    pub fn quadratic(p: i64, q: i64) -> Result<Self> {
        Self::new(vec![p], q)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p.is_empty() {
            return Err(Error::InvalidParams("degree n must be at least 2 (give p_1)".into()));
        }
        if self.q == 0 {
            return Err(Error::InvalidParams("q must be nonzero".into()));
        }
        let lhs: i128 = 1 + self.p.iter().map(|&p| (p as i128).abs()).sum::<i128>();
        let rhs = (self.q as i128).abs();
        if lhs >= rhs {
            let name = if self.p.len() == 1 {
                "1+|p| < |q|".into()
            } else {
                format!("1+|p_1|+...+|p_{}| < |q|", self.p.len())
            };
            return Err(Error::InvalidParams(format!("{name} fails ({lhs} >= {rhs})")));
        }
        Ok(())
    }

    /// The degree `n` of `t`, i.e. the rank of the presented group.
    pub fn degree(&self) -> usize {
        self.p.len() + 1
    }

    pub fn p(&self) -> &[i64] {
        &self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Largest digit magnitude `|q| - 1`.
    pub fn digit_bound(&self) -> u32 {
        (self.q.unsigned_abs() - 1) as u32
    }

    /// `gcd(p_1, q) = 1`, the condition under which no cyclic component is recognizable.
    pub fn has_coprime_p1_q(&self) -> bool {
        self.p.first().map_or(false, |&p1| p1.gcd(&self.q) == 1)
    }

    /// The modulus `t(x)`.
    pub fn modulus(&self) -> Polynomial {
        let mut c: Vec<BigInt> = Vec::with_capacity(self.degree() + 1);
        c.push(BigInt::from(-self.q));
        c.extend(self.p.iter().map(|&p| BigInt::from(p)));
        c.push(BigInt::one());
        Polynomial::from_coeffs(c)
    }

    /// `x^n - t(x) = q - p_1 x - ... - p_{n-1} x^{n-1}`: what `x^n` reduces to.
    fn top_rewrite(&self) -> Vec<BigInt> {
        let mut c = Vec::with_capacity(self.degree());
        c.push(BigInt::from(self.q));
        c.extend(self.p.iter().map(|&p| BigInt::from(-p)));
        c
    }
}

/// Integer polynomial, coefficients low degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs([c.into()])
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c.into());
        Self::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `sum |a_i|`, the quantity the reduction sweep strictly decreases.
    pub fn abs_sum(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn max_abs(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Every coefficient strictly below `|q|` in magnitude.
    pub fn is_reduced(&self, params: &ReprParams) -> bool {
        let q = BigInt::from(params.q()).abs();
        self.coeffs.iter().all(|c| c.abs() < q)
    }

    /// Leading zero coefficients, i.e. the largest `k` with `x^k | f` (0 for the zero polynomial).
    pub fn low_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

/// An element of `Z^n`: the residue coefficients `(r_0, ..., r_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![BigInt::zero(); n])
    }

    /// The unit vector for `x^i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = BigInt::one();
        v
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(self.0.iter().cloned())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// If `self = k * generator` for some integer `k`, returns `k`.
    pub fn multiple_of(&self, generator: &IntVec) -> Option<BigInt> {
        if generator.is_zero() {
            return self.is_zero().then(BigInt::zero);
        }
        let pivot = generator.0.iter().position(|c| !c.is_zero())?;
        let (k, rem) = self.0[pivot].div_rem(&generator.0[pivot]);
        if !rem.is_zero() {
            return None;
        }
        (generator.scale(&k) == *self).then_some(k)
    }
}

impl Add for &IntVec {
    type Output = IntVec;
    fn add(self, rhs: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVec {
    type Output = IntVec;
    fn sub(self, rhs: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Integral part of `num/den`, truncated toward zero: the largest integer
/// below a nonnegative ratio, the smallest above a negative one.
pub fn integral_part(num: &BigInt, den: &BigInt) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    // BigInt division truncates toward zero.
    Ok(num / den)
}

/// Exact remainder of `f` modulo the monic `t`, as an element of `Z^n`.
pub fn residue(f: &Polynomial, params: &ReprParams) -> IntVec {
    let n = params.degree();
    let rewrite = params.top_rewrite();
    let mut c: Vec<BigInt> = f.coeffs().to_vec();
    for d in (n..c.len()).rev() {
        let lead = core::mem::take(&mut c[d]);
        if lead.is_zero() {
            continue;
        }
        for (j, r) in rewrite.iter().enumerate() {
            c[d - n + j] += &lead * r;
        }
    }
    c.resize(n, BigInt::zero());
    IntVec(c)
}

pub fn equivalent(f: &Polynomial, g: &Polynomial, params: &ReprParams) -> bool {
    residue(&(f - g), params).is_zero()
}

/// One upward sweep of the elimination: at each index `i` with `k = [a_i / q]`
/// nonzero, rewrite `k q x^i` as `k (x^{i+n} + p_{n-1} x^{i+n-1} + ... + p_1 x^{i+1})`.
///
/// Fails once more than `budget` coefficients have been rewritten; this only
/// happens when the dominance inequality is violated.
pub fn reduction_sweep(f: &Polynomial, params: &ReprParams, budget: u64) -> Result<Polynomial> {
    let n = params.degree();
    let q = BigInt::from(params.q());
    let mut c: Vec<BigInt> = f.coeffs().to_vec();
    let mut steps = 0u64;
    let mut i = 0;
    while i < c.len() {
        let k = &c[i] / &q;
        if !k.is_zero() {
            steps += 1;
            if steps > budget {
                return Err(Error::ReductionBudgetExceeded { budget });
            }
            if c.len() < i + n + 1 {
                c.resize(i + n + 1, BigInt::zero());
            }
            c[i] -= &k * &q;
            for (l, &p) in params.p().iter().enumerate() {
                c[i + l + 1] += &k * p;
            }
            c[i + n] += &k;
        }
        i += 1;
    }
    Ok(Polynomial::from_coeffs(c))
}

/// Step budget `(deg f + 1)(1 + max |a_i|)`, saturated to `u64`.
fn reduction_budget(f: &Polynomial) -> u64 {
    let len = BigInt::from(f.coeffs().len().max(1));
    let b = len * (BigInt::one() + f.max_abs());
    u64::try_from(b).unwrap_or(u64::MAX)
}

/// An equivalent polynomial with every coefficient of magnitude below `|q|`.
pub fn reduce(f: &Polynomial, params: &ReprParams) -> Result<Polynomial> {
    params.validate()?;
    reduce_with_budget(f, params, reduction_budget(f))
}

/// Runs sweeps until one makes no change, without validating the parameters.
pub fn reduce_with_budget(f: &Polynomial, params: &ReprParams, budget: u64) -> Result<Polynomial> {
    let mut cur = f.clone();
    loop {
        let next = reduction_sweep(&cur, params, budget)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p13() -> ReprParams {
        ReprParams::quadratic(1, 3).unwrap()
    }

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn integral_part_truncates_toward_zero() {
        let ip = |a: i64, b: i64| integral_part(&a.into(), &b.into()).unwrap();
        assert_eq!(ip(4, 3), BigInt::from(1));
        assert_eq!(ip(-4, 3), BigInt::from(-1));
        assert_eq!(ip(0, 5), BigInt::from(0));
        assert_eq!(ip(4, -3), BigInt::from(-1));
        assert_eq!(integral_part(&1.into(), &0.into()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn params_validation() {
        assert!(ReprParams::quadratic(1, 3).is_ok());
        assert!(ReprParams::quadratic(7, -11).is_ok());
        let err = ReprParams::quadratic(2, 3).unwrap_err();
        assert!(matches!(&err, Error::InvalidParams(m) if m.contains("1+|p| < |q|")));
        assert!(ReprParams::new(vec![], 5).is_err());
        assert!(ReprParams::new(vec![1, 1], 5).is_ok());
        assert!(ReprParams::new(vec![2, 2], 5).is_err());
        assert!(p13().has_coprime_p1_q());
        assert!(!ReprParams::quadratic(2, 4).map(|p| p.has_coprime_p1_q()).unwrap_or(false));
        assert!(!ReprParams::quadratic(3, 6).unwrap().has_coprime_p1_q());
    }

    #[test]
    fn reduce_four_over_psi_1_3() {
        let r = reduce(&poly(&[4]), &p13()).unwrap();
        assert_eq!(r, poly(&[1, 1, 1]));
        // t divides (x^2 + x + 1) - 4 = x^2 + x - 3 exactly.
        assert_eq!(&r - &poly(&[4]), p13().modulus());
    }

    #[test]
    fn reduce_zero_and_invalid_params() {
        assert_eq!(reduce(&Polynomial::zero(), &p13()).unwrap(), Polynomial::zero());
        let bad = ReprParams::new_unchecked(vec![2], 3);
        assert!(matches!(reduce(&poly(&[6, 2]), &bad), Err(Error::InvalidParams(_))));
        // Without validation the sweep produces 2x^{i+1} + 6x^i forever.
        assert!(matches!(
            reduce_with_budget(&poly(&[6, 2]), &bad, 1000),
            Err(Error::ReductionBudgetExceeded { .. })
        ));
    }

    #[test]
    fn residue_examples() {
        let p = p13();
        assert_eq!(residue(&poly(&[1, 1, 1]), &p), IntVec::from_i64s(&[4, 0]));
        assert_eq!(residue(&poly(&[0, 1]), &p), IntVec::from_i64s(&[0, 1]));
        assert_eq!(residue(&p.modulus(), &p), IntVec::from_i64s(&[0, 0]));
        let p3 = ReprParams::new(vec![1, 1], 5).unwrap();
        assert_eq!(residue(&p3.modulus(), &p3), IntVec::zero(3));
        // x^3 = 5 - x - x^2 mod x^3 + x^2 + x - 5.
        assert_eq!(residue(&poly(&[0, 0, 0, 1]), &p3), IntVec::from_i64s(&[5, -1, -1]));
    }

    #[test]
    fn equivalence_examples() {
        let p = p13();
        assert!(equivalent(&poly(&[4]), &poly(&[1, 1, 1]), &p));
        assert!(equivalent(&poly(&[3, -5, 2]), &poly(&[3, -5, 2]), &p));
        assert!(!equivalent(&poly(&[1]), &poly(&[0, 1]), &p));
    }

    #[test]
    fn display_polynomial() {
        assert_eq!(poly(&[1, -1, 0, 2]).to_string(), "2x^3 - x + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn multiple_of() {
        let g = IntVec::from_i64s(&[2, -1]);
        assert_eq!(IntVec::from_i64s(&[-6, 3]).multiple_of(&g), Some(BigInt::from(-3)));
        assert_eq!(IntVec::from_i64s(&[-6, 2]).multiple_of(&g), None);
        assert_eq!(IntVec::zero(2).multiple_of(&IntVec::zero(2)), Some(BigInt::zero()));
        assert_eq!(IntVec::from_i64s(&[1, 0]).multiple_of(&IntVec::zero(2)), None);
    }
}
