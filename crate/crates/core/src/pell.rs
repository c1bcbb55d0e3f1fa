//! Pell and Pell-type equations `x^2 - n y^2 = ±1`, `c^2 - n a^2 = ±4`, the
//! families of matrices `A = (((c - ap)/2, a), (aq, (c + ap)/2))` with
//! `c^2 - n a^2 = ±4` and `n = p^2 + 4q`, and the monoids `S_{p,q}` they form.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Mat2;

/// `sqrt(n) = [a0; period, period, ...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfExpansion {
    pub a0: u64,
    pub period: Vec<u64>,
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn check_nonsquare(n: i64) -> Result<u64> {
    if n <= 0 {
        return Err(Error::Pell(format!("n = {n} must be positive")));
    }
    let r = (n as u64).sqrt();
    if r * r == n as u64 {
        return Err(Error::Pell(format!("n = {n} is a perfect square")));
    }
    Ok(n as u64)
}

pub fn continued_fraction_sqrt(n: i64) -> Result<CfExpansion> {
    let n = check_nonsquare(n)?;
    let a0 = n.sqrt();
    let (mut m, mut d, mut a) = (0u64, 1u64, a0);
    let mut period = Vec::new();
    while a != 2 * a0 {
        m = d * a - m;
        d = (n - m * m) / d;
        a = (a0 + m) / d;
        period.push(a);
    }
    Ok(CfExpansion { a0, period })
}

/// A positive solution of `x^2 - n y^2 = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellSolution {
    x: BigInt,
    y: BigInt,
    rhs: i64,
    n: i64,
}

impl PellSolution {
    pub fn new(n: i64, rhs: i64, x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self> {
        let (x, y) = (x.into(), y.into());
        if x.is_negative() || y.is_negative() {
            return Err(Error::Pell("solutions are taken nonnegative".into()));
        }
        if &x * &x - BigInt::from(n) * &y * &y != BigInt::from(rhs) {
            return Err(Error::Pell(format!("({x}, {y}) does not solve x^2 - {n}y^2 = {rhs}")));
        }
        Ok(Self { x, y, rhs, n })
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn rhs(&self) -> i64 {
        self.rhs
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn satisfies(&self) -> bool {
        &self.x * &self.x - BigInt::from(self.n) * &self.y * &self.y == BigInt::from(self.rhs)
    }

    /// Brahmagupta composition, halved for the `±4` equations.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.rhs.abs() != other.rhs.abs() {
            return Err(Error::Pell("composing solutions of different equations".into()));
        }
        let n = BigInt::from(self.n);
        let mut x = &self.x * &other.x + &n * &self.y * &other.y;
        let mut y = &self.x * &other.y + &self.y * &other.x;
        if self.rhs.abs() == 4 {
            x /= 2;
            y /= 2;
        }
        Self::new(self.n, self.rhs * other.rhs / self.rhs.abs(), x, y)
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Least positive solution of `x^2 - n y^2 = ±1` over the convergents of
/// `sqrt(n)`: the fundamental unit of `Z[sqrt n]`.
fn fundamental_unit(n: i64) -> Result<PellSolution> {
    let cf = continued_fraction_sqrt(n)?;
    let nn = BigInt::from(n);
    let (mut h0, mut h1) = (BigInt::one(), BigInt::from(cf.a0));
    let (mut k0, mut k1) = (BigInt::zero(), BigInt::one());
    for &a in cf.period.iter().cycle().take(2 * cf.period.len() + 1) {
        let norm = &h1 * &h1 - &nn * &k1 * &k1;
        if norm.abs().is_one() {
            let rhs = if norm.is_positive() { 1 } else { -1 };
            return PellSolution::new(n, rhs, h1, k1);
        }
        let a = BigInt::from(a);
        (h0, h1) = (h1.clone(), &a * &h1 + &h0);
        (k0, k1) = (k1.clone(), &a * &k1 + &k0);
    }
    Err(Error::Pell(format!("no unit among the convergents of sqrt({n})")))
}

/// Least positive solution of `c^2 - n a^2 = ±4`. These are the units
/// `(c + a sqrt n)/2` of a quadratic order containing `Z[sqrt n]`; when that
/// order is strictly larger its fundamental unit cubes to the one of `Z[sqrt n]`.
fn fundamental_quarter_unit(n: i64) -> Result<PellSolution> {
    if n % 4 == 0 {
        let e = fundamental_unit(n / 4)?;
        return PellSolution::new(n, 4 * e.rhs, 2 * e.x, e.y);
    }
    let e = fundamental_unit(n)?;
    if n % 4 == 1 {
        let nu = e.rhs;
        let target = BigInt::from(2) * &e.x;
        let guess = target.cbrt();
        let lo = if guess > BigInt::one() { &guess - 1 } else { BigInt::one() };
        let mut c = lo;
        while c <= &guess + 2 {
            if &c * &c * &c - BigInt::from(3 * nu) * &c == target {
                let rest = &c * &c - BigInt::from(4 * nu);
                if rest.is_positive() && (&rest % BigInt::from(n)).is_zero() {
                    if let Some(a) = exact_sqrt(&(rest / BigInt::from(n))) {
                        return PellSolution::new(n, 4 * nu, c, a);
                    }
                }
            }
            c += 1;
        }
    }
    PellSolution::new(n, 4 * e.rhs, 2 * e.x, 2 * e.y)
}

/// The least positive solution of `x^2 - n y^2 = rhs`, `rhs ∈ {1, -1, 4, -4}`,
/// if there is one.
pub fn fundamental_solution(n: i64, rhs: i64) -> Result<Option<PellSolution>> {
    check_nonsquare(n)?;
    let unit = match rhs {
        1 | -1 => fundamental_unit(n)?,
        4 | -4 => fundamental_quarter_unit(n)?,
        _ => return Err(Error::Pell(format!("right-hand side {rhs} not in {{1, -1, 4, -4}}"))),
    };
    Ok(if unit.rhs == rhs {
        Some(unit)
    } else if rhs > 0 {
        Some(unit.compose(&unit)?)
    } else {
        None
    })
}

/// The first `count` solutions generated from `fund`, increasing.
pub fn generate_solutions(fund: &PellSolution, count: usize) -> Result<Vec<PellSolution>> {
    let step = if fund.rhs < 0 { fund.compose(fund)? } else { fund.clone() };
    let mut out = Vec::with_capacity(count);
    let mut cur = fund.clone();
    for _ in 0..count {
        let next = cur.compose(&step)?;
        out.push(core::mem::replace(&mut cur, next));
    }
    Ok(out)
}

/// `((u^2 ∓ 3) u / 2, (u^2 ∓ 1) v / 2)`: an odd solution of
/// `c^2 - n a^2 = ±4` sent to a solution of `x^2 - n y^2 = ±1`.
pub fn cayley_lift(sol: &PellSolution) -> Result<PellSolution> {
    let sign = match sol.rhs {
        4 => -1,
        -4 => 1,
        _ => return Err(Error::Pell("lift applies to c^2 - n a^2 = ±4".into())),
    };
    if sol.x.is_even() || sol.y.is_even() {
        return Err(Error::Pell(format!("{sol} is not odd")));
    }
    let u2 = &sol.x * &sol.x;
    let x = (&u2 + 3 * sign) * &sol.x / 2;
    let y = (&u2 + sign) * &sol.y / 2;
    PellSolution::new(sol.n, sol.rhs / 4, x, y)
}

/// The matrix `(((c - ap)/2, a), (aq, (c + ap)/2))`, when `c ≡ ap (mod 2)`.
pub fn solution_matrix(p: i64, q: i64, c: &BigInt, a: &BigInt) -> Option<Mat2> {
    let ap = a * p;
    if (c - &ap).is_odd() {
        return None;
    }
    Some(Mat2([[(c - &ap) / 2, a.clone()], [a * q, (c + &ap) / 2]]))
}

/// `1 + |p| < |q|` and `gcd(p, q) = 1`.
pub fn is_admissible(p: i64, q: i64) -> bool {
    1 + p.unsigned_abs() < q.unsigned_abs() && p.gcd(&q) == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyCase {
    MinusFour,
    MinusThree,
    One,
    Four,
    ZeroModFour,
    OneModFour,
}

impl FamilyCase {
    pub fn name(&self) -> &'static str {
        match self {
            Self::MinusFour => "n=-4",
            Self::MinusThree => "n=-3",
            Self::One => "n=1",
            Self::Four => "n=4",
            Self::ZeroModFour => "n=0 mod 4",
            Self::OneModFour => "n=1 mod 4",
        }
    }
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMatrix {
    pub c: BigInt,
    pub a: BigInt,
    pub matrix: Mat2,
}

/// The nontrivial matrices for one admissible `(p, q)` with `p^2 + 4q = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedFamily {
    pub n: i64,
    pub case: FamilyCase,
    pub p: i64,
    pub q: i64,
    pub r: Option<i64>,
    pub s: Option<i64>,
    pub matrices: Vec<FamilyMatrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyBounds {
    pub max_abs_p: i64,
    pub max_abs_c: u64,
}

fn fm(matrix: Mat2) -> FamilyMatrix {
    let c = matrix.trace();
    let a = matrix.entry(0, 1).clone();
    FamilyMatrix { c, a, matrix }
}

fn plus_minus(m: Mat2) -> [FamilyMatrix; 2] {
    let neg = -&m;
    [fm(m), fm(neg)]
}

/// `|r| in [lo, ∞)` as a list within `|2r + shift| <= bound`.
fn r_range(bound: i64, shift: i64) -> impl Iterator<Item = i64> {
    let lim = bound.abs() + 2;
    (-lim..=lim).filter(move |r| (2 * r + shift).abs() <= bound)
}

/// Positive solutions `(x, y)` with `x <= max_x` of `x^2 - n y^2 = ±rhs`,
/// increasing in `x`.
fn solutions_up_to(n: i64, rhs: i64, max_x: &BigInt) -> Result<Vec<PellSolution>> {
    let mut out = Vec::new();
    for r in [rhs, -rhs] {
        if let Some(f) = fundamental_solution(n, r)? {
            let step = if r < 0 { f.compose(&f)? } else { f.clone() };
            let mut cur = f;
            while cur.x <= *max_x {
                let next = cur.compose(&step)?;
                out.push(core::mem::replace(&mut cur, next));
            }
        }
    }
    out.sort_by(|a, b| a.x.cmp(&b.x));
    Ok(out)
}

/// The families of nontrivial (`a != 0`) matrices of the classification,
/// for all admissible `(p, q)` with `p^2 + 4q = n` and `|p| <= max_abs_p`,
/// listing the matrices with `|c| <= max_abs_c`.
pub fn enumerate_families(n: i64, bounds: &ClassifyBounds) -> Result<Vec<ClassifiedFamily>> {
    let pb = bounds.max_abs_p;
    let cb = BigInt::from(bounds.max_abs_c);
    let mut out = Vec::new();
    match n {
        -4 => {
            for r in r_range(pb, 0).filter(|r| r.abs() >= 4 && r % 2 == 0) {
                let q = -(r * r + 1);
                let a = Mat2::new(-r, 1, q, r);
                out.push(family(n, FamilyCase::MinusFour, 2 * r, q, r, plus_minus(a).into()));
            }
        }
        -3 => {
            for r in r_range(pb, 1).filter(|&r| (r <= -3 || r >= 2) && r.rem_euclid(3) != 1) {
                let q = -(r * r + r + 1);
                let mut ms = plus_minus(Mat2::new(-r, 1, q, r + 1)).to_vec();
                ms.extend(plus_minus(Mat2::new(-(r + 1), 1, q, r)));
                out.push(family(n, FamilyCase::MinusThree, 2 * r + 1, q, r, ms));
            }
        }
        1 => {
            for r in r_range(pb, 1).filter(|&r| r <= -4 || r >= 3) {
                let q = -(r * r + r);
                let m = Mat2::new(-(2 * r + 1), 2, -2 * (r * r + r), 2 * r + 1);
                out.push(family(n, FamilyCase::One, 2 * r + 1, q, r, plus_minus(m).into()));
            }
        }
        4 => {
            for r in r_range(pb, 0).filter(|r| r.abs() >= 4 && r % 2 == 0) {
                let q = 1 - r * r;
                let m = Mat2::new(-r, 1, q, r);
                out.push(family(n, FamilyCase::Four, 2 * r, q, r, plus_minus(m).into()));
            }
        }
        _ if n <= 0 || exact_sqrt(&BigInt::from(n)).is_some() => {}
        _ if n % 4 == 0 => {
            let s = n / 4;
            let sols = solutions_up_to(s, 1, &(&cb / 2))?;
            for r in r_range(pb, 0) {
                let ra = r.unsigned_abs();
                let inner = (ra + 1) * (ra + 1) < s as u64;
                let outer = ra >= 1 && (ra - 1) * (ra - 1) > s as u64 + 2;
                if !(inner || outer) || r.gcd(&s) != 1 || (r - s).rem_euclid(2) == 0 {
                    continue;
                }
                let q = s - r * r;
                let mut ms = Vec::new();
                for sol in &sols {
                    let (x, a) = (sol.x.clone(), sol.y.clone());
                    let ra = &a * r;
                    let lower = &a * q;
                    ms.extend(plus_minus(Mat2([[&x - &ra, a.clone()], [lower.clone(), &x + &ra]])));
                    ms.extend(plus_minus(Mat2([[-&x - &ra, a.clone()], [lower, -&x + &ra]])));
                }
                out.push(ClassifiedFamily { n, case: FamilyCase::ZeroModFour, p: 2 * r, q, r: Some(r), s: Some(s), matrices: ms });
            }
        }
        _ if n % 4 == 1 => {
            let sols = solutions_up_to(n, 4, &cb)?;
            for p in (-pb..=pb).filter(|p| p % 2 != 0) {
                let pa = p.unsigned_abs();
                let inner = (pa + 2) * (pa + 2) < n as u64;
                let outer = pa >= 2 && (pa - 2) * (pa - 2) > n as u64 + 8;
                if !(inner || outer) || p.gcd(&n) != 1 {
                    continue;
                }
                let q = (n - p * p) / 4;
                let mut ms = Vec::new();
                for sol in &sols {
                    let (c, a) = (&sol.x, &sol.y);
                    let pa = a * p;
                    let lower = a * q;
                    ms.extend(plus_minus(Mat2([[(c - &pa) / 2, a.clone()], [lower.clone(), (c + &pa) / 2]])));
                    ms.extend(plus_minus(Mat2([[(-c - &pa) / 2, a.clone()], [lower, (-c + &pa) / 2]])));
                }
                out.push(ClassifiedFamily { n, case: FamilyCase::OneModFour, p, q, r: None, s: None, matrices: ms });
            }
        }
        _ => {}
    }
    for f in &mut out {
        f.matrices.retain(|m| m.c.abs() <= cb);
    }
    Ok(out)
}

fn family(n: i64, case: FamilyCase, p: i64, q: i64, r: i64, matrices: Vec<FamilyMatrix>) -> ClassifiedFamily {
    ClassifiedFamily { n, case, p, q, r: Some(r), s: None, matrices }
}

/// All `(c, a)` with `|c| <= max_abs_c` and `c^2 - n a^2 = ±4`, found by
/// scanning `a`; the trivial `(±2, 0)` included.
fn quarter_solutions(n: i64, max_abs_c: u64) -> Result<Vec<(BigInt, BigInt)>> {
    if n == 0 {
        return Err(Error::Pell("n = 0 admits infinitely many solutions".into()));
    }
    let cb = BigInt::from(max_abs_c);
    let nn = BigInt::from(n);
    let mut out = Vec::new();
    let mut a = BigInt::zero();
    loop {
        let na2 = &nn * &a * &a;
        if n < 0 && -&na2 > BigInt::from(4) {
            break;
        }
        if n > 0 && na2 > &cb * &cb + 4 {
            break;
        }
        for rhs in [4, -4] {
            if let Some(c) = exact_sqrt(&(&na2 + rhs)) {
                if c <= cb {
                    for sc in [c.clone(), -c.clone()] {
                        for sa in [a.clone(), -a.clone()] {
                            if !out.contains(&(sc.clone(), sa.clone())) {
                                out.push((sc.clone(), sa));
                            }
                        }
                    }
                }
            }
        }
        a += 1;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoidKind {
    Z4,
    Z6,
    Z2xZ2,
    ZxZ2,
    Unclassified,
}

impl fmt::Display for MonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Z4 => "Z4",
            Self::Z6 => "Z6",
            Self::Z2xZ2 => "Z2xZ2",
            Self::ZxZ2 => "ZxZ2",
            Self::Unclassified => "unclassified",
        })
    }
}

#[derive(Clone, Debug)]
pub struct MonoidReport {
    pub p: i64,
    pub q: i64,
    pub n: i64,
    pub elements: Vec<Mat2>,
    /// Finite orders, `None` for elements of infinite order.
    pub orders: Vec<Option<u32>>,
    /// Every product of two collected elements lies in `S_{p,q}`, and is
    /// among the collected ones whenever its trace is within the bound.
    pub closed: bool,
    pub kind: MonoidKind,
}

/// Membership in `S_{p,q}`: the shape of [`solution_matrix`] and `det = ±1`.
pub fn in_monoid(m: &Mat2, p: i64, q: i64) -> bool {
    let c = m.trace();
    let a = m.entry(0, 1);
    solution_matrix(p, q, &c, a).as_ref() == Some(m) && m.is_unimodular()
}

/// Collects `S_{p,q}` up to `|c| <= bound`, checks closure and classifies it
/// by torsion data.
pub fn monoid_structure(p: i64, q: i64, bound: u64) -> Result<MonoidReport> {
    if !is_admissible(p, q) {
        return Err(Error::InvalidParams(format!("(p, q) = ({p}, {q}) is not admissible")));
    }
    let n = p * p + 4 * q;
    let elements: Vec<Mat2> = quarter_solutions(n, bound.max(2))?
        .iter()
        .filter_map(|(c, a)| solution_matrix(p, q, c, a))
        .collect();
    let cb = BigInt::from(bound.max(2));
    let set: BTreeSet<Vec<BigInt>> = elements.iter().map(Mat2::entries).collect();
    let closed = elements.iter().all(|x| {
        elements.iter().all(|y| {
            let z = x * y;
            in_monoid(&z, p, q) && (z.trace().abs() > cb || set.contains(&z.entries()))
        })
    });
    let orders: Vec<Option<u32>> = elements.iter().map(|m| m.finite_order(12)).collect();
    let finite: Vec<u32> = orders.iter().flatten().copied().collect();
    let infinite = finite.len() < orders.len();
    let max_order = finite.iter().copied().max().unwrap_or(0);
    let kind = match (infinite, finite.len(), max_order) {
        (true, 2, 2) => MonoidKind::ZxZ2,
        (false, 4, 4) => MonoidKind::Z4,
        (false, 6, 6) => MonoidKind::Z6,
        (false, 4, 2) => MonoidKind::Z2xZ2,
        _ => MonoidKind::Unclassified,
    };
    Ok(MonoidReport { p, q, n, elements, orders, closed, kind })
}

/// Irreducibility of `x^2 + px - q` over the integers.
pub fn is_irreducible_quadratic(p: i64, q: i64) -> bool {
    exact_sqrt(&BigInt::from(p * p + 4 * q)).is_none()
}

/// The representative matrices of a family: for each `(c, a)` with
/// `c, a > 0`, the matrix with that `(c, a)`.
pub fn positive_representatives(fam: &ClassifiedFamily) -> Vec<&FamilyMatrix> {
    fam.matrices.iter().filter(|m| m.c.is_positive() && m.a.is_positive()).collect()
}

impl ClassifiedFamily {
    /// Every listed matrix has the required shape, `det = ±1`, `a != 0`,
    /// and `(p, q)` is admissible with `p^2 + 4q = n`.
    pub fn is_valid(&self) -> bool {
        is_admissible(self.p, self.q)
            && self.p * self.p + 4 * self.q == self.n
            && self.matrices.iter().all(|m| {
                let c2 = &m.c * &m.c - BigInt::from(self.n) * &m.a * &m.a;
                !m.a.is_zero()
                    && (c2 == BigInt::from(4) || c2 == BigInt::from(-4))
                    && solution_matrix(self.p, self.q, &m.c, &m.a).as_ref() == Some(&m.matrix)
                    && m.matrix.is_unimodular()
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(s: &PellSolution) -> (i64, i64) {
        (i64::try_from(s.x()).unwrap(), i64::try_from(s.y()).unwrap())
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(continued_fraction_sqrt(5).unwrap(), CfExpansion { a0: 2, period: vec![4] });
        assert_eq!(continued_fraction_sqrt(2).unwrap(), CfExpansion { a0: 1, period: vec![2] });
        assert_eq!(continued_fraction_sqrt(7).unwrap(), CfExpansion { a0: 2, period: vec![1, 1, 1, 4] });
        assert!(continued_fraction_sqrt(4).is_err());
        assert!(continued_fraction_sqrt(0).is_err());
    }

    #[test]
    fn fundamental_solutions_for_five() {
        let f = |rhs| sol(&fundamental_solution(5, rhs).unwrap().unwrap());
        assert_eq!(f(1), (9, 4));
        assert_eq!(f(-1), (2, 1));
        assert_eq!(f(4), (3, 1));
        assert_eq!(f(-4), (1, 1));
        assert_eq!(fundamental_solution(3, -1).unwrap(), None);
        assert_eq!(sol(&fundamental_solution(8, -4).unwrap().unwrap()), (2, 1));
        assert_eq!(sol(&fundamental_solution(20, -4).unwrap().unwrap()), (4, 1));
        assert_eq!(fundamental_solution(20, -1).unwrap(), None);
    }

    #[test]
    fn lifts_and_generation() {
        let m = PellSolution::new(5, -4, 1, 1).unwrap();
        assert_eq!(sol(&cayley_lift(&m).unwrap()), (2, 1));
        let p = PellSolution::new(5, 4, 3, 1).unwrap();
        assert_eq!(sol(&cayley_lift(&p).unwrap()), (9, 4));
        assert!(cayley_lift(&PellSolution::new(5, 4, 18, 8).unwrap()).is_err());
        let g = generate_solutions(&PellSolution::new(5, 1, 9, 4).unwrap(), 2).unwrap();
        assert_eq!(g.iter().map(sol).collect::<Vec<_>>(), vec![(9, 4), (161, 72)]);
        assert!(generate_solutions(&m, 0).unwrap().is_empty());
    }

    #[test]
    fn spot_families() {
        let b = ClassifyBounds { max_abs_p: 12, max_abs_c: 50 };
        let fams = enumerate_families(-4, &b).unwrap();
        let f = fams.iter().find(|f| f.r == Some(4)).unwrap();
        assert_eq!((f.p, f.q), (8, -17));
        assert!(f.matrices.iter().any(|m| m.matrix == Mat2::new(-4, 1, -17, 4)));
        assert!(enumerate_families(0, &b).unwrap().is_empty());
        let fams = enumerate_families(5, &b).unwrap();
        let f = fams.iter().find(|f| f.p == 7).unwrap();
        assert_eq!(f.q, -11);
        assert!(f.matrices.iter().any(|m| m.matrix == Mat2::new(-3, 1, -11, 4)));
        assert!(fams.iter().all(ClassifiedFamily::is_valid));
    }

    #[test]
    fn monoid_kinds() {
        assert_eq!(monoid_structure(8, -17, 10).unwrap().kind, MonoidKind::Z4);
        assert_eq!(monoid_structure(5, -7, 10).unwrap().kind, MonoidKind::Z6);
        assert_eq!(monoid_structure(7, -12, 10).unwrap().kind, MonoidKind::Z2xZ2);
        let r = monoid_structure(7, -11, 200).unwrap();
        assert_eq!(r.kind, MonoidKind::ZxZ2);
        assert!(r.closed);
    }
}
