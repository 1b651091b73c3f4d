//! Exact arithmetic in `Z[v, v^-1]` with `v = q^(1/2)`.
//!
//! Every ring element that appears in the Hecke algebra (structure constants,
//! Kazhdan-Lusztig polynomials, the normalisations `q^(-l/2)`) is a Laurent
//! polynomial in the single variable `v`, so exponents are always integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Laurent polynomial in `v = q^(1/2)` with integer coefficients.
///
/// Terms are kept sorted by ascending exponent and zero coefficients are never
/// stored, so two equal polynomials always have equal representations.
/// Coefficient arithmetic is checked; an overflow panics rather than wrapping.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(i32, i64)>", from = "Vec<(i32, i64)>")]
pub struct LaurentPoly {
    terms: Vec<(i32, i64)>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `coeff * v^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            Self { terms: vec![(exp, coeff)] }
        }
    }

    /// `v = q^(1/2)`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `q = v^2`.
    pub fn q() -> Self {
        Self::monomial(1, 2)
    }

    /// The quantum integer `[2] = q^(1/2) + q^(-1/2)`.
    pub fn quantum_two() -> Self {
        Self::from_terms([(1, 1), (-1, 1)])
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut v: Vec<(i32, i64)> = terms.into_iter().collect();
        v.sort_unstable_by_key(|&(e, _)| e);
        let mut out: Vec<(i32, i64)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = checked_add(*lc, c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(0, 1)]
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    /// Coefficient of `v^exp`.
    pub fn coeff(&self, exp: i32) -> i64 {
        match self.terms.binary_search_by_key(&exp, |&(e, _)| e) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    /// Highest exponent of `v`, `None` for zero.
    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Lowest exponent of `v`, `None` for zero.
    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|&(e, _)| e)
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e, checked_mul(c, k))).collect(),
        }
    }

    /// `self += coeff * v^shift * other`, the workhorse of the Hecke module code.
    pub fn add_scaled_shift(&mut self, other: &LaurentPoly, coeff: i64, shift: i32) {
        if other.is_zero() || coeff == 0 {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let next_b = b.get(j).map(|&(e, c)| (e + shift, checked_mul(c, coeff)));
            match (a.get(i), next_b) {
                (Some(&(ea, ca)), Some((eb, cb))) => match ea.cmp(&eb) {
                    Ordering::Less => {
                        out.push((ea, ca));
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push((eb, cb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        let c = checked_add(ca, cb);
                        if c != 0 {
                            out.push((ea, c));
                        }
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&t), None) => {
                    out.push(t);
                    i += 1;
                }
                (None, Some(t)) => {
                    out.push(t);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.terms = out;
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|&(e, c)| (-e, c)).collect();
        terms.reverse();
        Self { terms }
    }

    /// Exact quotient `self / d` in `Z[v, v^-1]`.
    ///
    /// Fails with [`Error::NotDivisible`] when `d` does not divide `self`, and
    /// also for `d = 0`.
    pub fn divide_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: d.to_string(),
            });
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Strip the unit v^k from both sides and divide ordinary polynomials
        // over Z, from the top degree down.
        let d_lo = d.min_exp().unwrap();
        let d_hi = d.max_exp().unwrap();
        let lead = d.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot: Vec<(i32, i64)> = Vec::new();
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: d.to_string(),
        };
        let self_lo = self.min_exp().unwrap();
        while let Some(top) = rem.max_exp() {
            if top - (d_hi - d_lo) < self_lo {
                return Err(not_divisible());
            }
            let c = rem.coeff(top);
            if c % lead != 0 {
                return Err(not_divisible());
            }
            let qc = c / lead;
            let qe = top - d_hi;
            quot.push((qe, qc));
            rem.add_scaled_shift(d, -qc, qe);
        }
        Ok(Self::from_terms(quot))
    }

    /// Evaluates the polynomial as an integer when it is a constant.
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(0, c)] => Some(*c),
            _ => None,
        }
    }

    /// Writes `self = sign * [2]^k` if possible, for pretty-printing.
    pub fn as_signed_quantum_two_power(&self) -> Option<(i64, u32)> {
        if self.is_zero() {
            return None;
        }
        let two = Self::quantum_two();
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            if let Some(c) = cur.as_constant() {
                return (c == 1 || c == -1).then_some((c, k));
            }
            cur = cur.divide_exact(&two).ok()?;
            k += 1;
        }
    }

    /// `[2]^k`.
    pub fn quantum_two_pow(k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * &Self::quantum_two())
    }
}

impl From<LaurentPoly> for Vec<(i32, i64)> {
    fn from(p: LaurentPoly) -> Self {
        p.terms
    }
}

impl From<Vec<(i32, i64)>> for LaurentPoly {
    fn from(v: Vec<(i32, i64)>) -> Self {
        Self::from_terms(v)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shift(rhs, 1, 0);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_scaled_shift(&rhs, 1, 0);
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shift(rhs, 1, 0);
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shift(rhs, -1, 0);
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_scaled_shift(&rhs, -1, 0);
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shift(rhs, -1, 0);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut dense = vec![0i64; (hi - lo + 1) as usize];
        for &(ea, ca) in &self.terms {
            for &(eb, cb) in &rhs.terms {
                let slot = &mut dense[(ea + eb - lo) as usize];
                *slot = checked_add(*slot, checked_mul(ca, cb));
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn fmt_q_power(exp: i32) -> String {
    if exp % 2 == 0 {
        match exp / 2 {
            1 => "q".to_string(),
            k => format!("q^{k}"),
        }
    } else {
        format!("q^({exp}/2)")
    }
}

/// Terms by descending `v`-exponent, in powers of `q`: `q + 2 + q^-1`,
/// `q^(1/2) + q^(-1/2)`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            let abs = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if e == 0 {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", fmt_q_power(e))?;
            } else {
                write!(f, "{abs}{}", fmt_q_power(e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
