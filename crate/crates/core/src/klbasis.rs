//! Kazhdan-Lusztig basis `C_x = q^{-l(x)/2} sum_{y <= x} P_{y,x} T_y`.
//!
//! `C_x` is built from the left multiplication rule for `C_g`: for
//! `g` in `L(x)` and `x' = gx`,
//!
//! ```text
//! C_x = C_g C_{x'} - sum_{y < x', gy < y} mu(y, x') C_y
//! ```
//!
//! where `mu(y, x')` is read off the already computed `C_{x'}`. Elements of the
//! `w`-coset use `C_{w x} = T_w C_x`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::coxeter::{Generator, GroupElement, DEFAULT_LENGTH_BUDGET};
use crate::error::{Error, Result};
use crate::hecke::{t_multiply, Basis, HeckeElement};
use crate::laurent::LaurentPoly;

/// Memo table for the `T`-expansions of `C_x`, keyed by Coxeter-group
/// elements. Lengths above the budget are refused.
pub struct KlCache {
    budget: usize,
    c: HashMap<GroupElement, Arc<HeckeElement>>,
}

impl Default for KlCache {
    fn default() -> Self {
        Self::new(DEFAULT_LENGTH_BUDGET)
    }
}

/// `mu` from the `T_y` coefficient `v^{-l(x)} P_{y,x}` of `C_x`: the
/// coefficient of `v^{l(x)-l(y)-1}` in `P`, i.e. of `v^{-l(y)-1}` here.
fn mu_from_coefficient(coeff: &LaurentPoly, ly: usize, lx: usize) -> i64 {
    if ly >= lx || (lx - ly).is_multiple_of(2) {
        return 0;
    }
    coeff.coeff(-(ly as i32) - 1)
}

impl KlCache {
    pub fn new(budget: usize) -> Self {
        Self { budget, c: HashMap::new() }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Number of memoised `C_x`.
    pub fn cached(&self) -> usize {
        self.c.len()
    }

    fn check_budget(&self, x: &GroupElement) -> Result<()> {
        let length = x.length();
        if length > self.budget {
            return Err(Error::BudgetExceeded { length, budget: self.budget });
        }
        Ok(())
    }

    /// `T`-basis expansion of `C_x`.
    pub fn c_basis(&mut self, x: &GroupElement) -> Result<Arc<HeckeElement>> {
        if x.omega_exponent() == 1 {
            let inner = self.c_coxeter(x.coxeter_part())?;
            return Ok(Arc::new(inner.t_left_mul_omega()?));
        }
        self.c_coxeter(*x)
    }

    fn c_coxeter(&mut self, x: GroupElement) -> Result<Arc<HeckeElement>> {
        if let Some(h) = self.c.get(&x) {
            return Ok(Arc::clone(h));
        }
        self.check_budget(&x)?;
        let h = match Generator::ALL.into_iter().find(|&g| x.has_left_descent(g)) {
            None => HeckeElement::one(),
            Some(g) => self.c_basis_via(&x, g)?,
        };
        let h = Arc::new(h);
        self.c.insert(x, Arc::clone(&h));
        Ok(h)
    }

    /// `C_x` computed through the left descent `g`, without memoising the
    /// result. Used to check that the outcome does not depend on `g`.
    pub fn c_basis_via(&mut self, x: &GroupElement, g: Generator) -> Result<HeckeElement> {
        let x = x.coxeter_part();
        if !x.has_left_descent(g) {
            return Err(Error::InvalidArgument(format!("{g} is not a left descent of {x}")));
        }
        self.check_budget(&x)?;
        let shorter = x.gen_mul(g);
        let c_shorter = self.c_coxeter(shorter)?;
        let mut h = c_shorter.c_gen_left_mul(g)?;
        let l_shorter = shorter.length();
        let mut corrections: Vec<(GroupElement, i64)> = c_shorter
            .iter()
            .filter(|(y, _)| y.has_left_descent(g))
            .map(|(y, c)| (*y, mu_from_coefficient(c, y.length(), l_shorter)))
            .filter(|&(_, m)| m != 0)
            .collect();
        corrections.sort_by_key(|(y, _)| y.shortlex_key());
        for (y, m) in corrections {
            let cy = self.c_coxeter(y)?;
            h.axpy(&cy, &LaurentPoly::constant(-m), 0);
        }
        Ok(h)
    }

    /// `P_{y,x}` as a polynomial in `v` (only even powers occur); zero unless
    /// `y <= x`.
    pub fn kl_polynomial(&mut self, y: &GroupElement, x: &GroupElement) -> Result<LaurentPoly> {
        if y.omega_exponent() != x.omega_exponent() {
            return Ok(LaurentPoly::zero());
        }
        let cx = self.c_basis(x)?;
        Ok(cx.coefficient_of(y).shift(x.length() as i32))
    }

    /// Leading coefficient `mu(y, x)`; zero unless `y < x` with odd length gap.
    pub fn mu(&mut self, y: &GroupElement, x: &GroupElement) -> Result<i64> {
        if y.omega_exponent() != x.omega_exponent() {
            return Ok(0);
        }
        let (ly, lx) = (y.length(), x.length());
        if ly >= lx {
            return Ok(0);
        }
        let cx = self.c_basis(x)?;
        Ok(mu_from_coefficient(&cx.coefficient_of(y), ly, lx))
    }

    /// `mu(y, x)` if `y <= x`, else `mu(x, y)`.
    pub fn mu_tilde(&mut self, y: &GroupElement, x: &GroupElement) -> Result<i64> {
        if y.length() <= x.length() {
            self.mu(y, x)
        } else {
            self.mu(x, y)
        }
    }

    /// Rewrites a `T`-basis element in the `C`-basis by peeling off the
    /// longest remaining terms.
    pub fn t_to_c(&mut self, h: &HeckeElement) -> Result<HeckeElement> {
        h.expect_basis(Basis::T)?;
        let mut rest = h.clone();
        let mut out = HeckeElement::zero(Basis::C);
        let top = rest.max_length();
        for len in (0..=top).rev() {
            let mut layer: Vec<GroupElement> = rest.iter().map(|(x, _)| *x).filter(|x| x.length() == len).collect();
            layer.sort_by_key(|x| x.shortlex_key());
            for x in layer {
                let coeff = rest.coefficient_of(&x).shift(len as i32);
                if coeff.is_zero() {
                    continue;
                }
                let cx = self.c_basis(&x)?;
                rest.axpy(&cx, &-&coeff, 0);
                out.add_term(x, &coeff);
            }
        }
        debug_assert!(rest.is_zero());
        Ok(out)
    }

    /// Expands a `C`-basis element in the `T`-basis.
    pub fn c_to_t(&mut self, h: &HeckeElement) -> Result<HeckeElement> {
        h.expect_basis(Basis::C)?;
        let mut out = HeckeElement::zero(Basis::T);
        for (x, c) in h.sorted_terms() {
            let cx = self.c_basis(&x)?;
            out.axpy(&cx, &c, 0);
        }
        Ok(out)
    }

    /// `C_x C_y` in the `C`-basis.
    pub fn c_multiply(&mut self, x: &GroupElement, y: &GroupElement) -> Result<HeckeElement> {
        let cx = self.c_basis(x)?;
        let cy = self.c_basis(y)?;
        let prod = t_multiply(&cx, &cy)?;
        self.t_to_c(&prod)
    }

    /// Product of two `C`-basis combinations, in the `C`-basis.
    pub fn c_product(&mut self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        let ta = self.c_to_t(a)?;
        let tb = self.c_to_t(b)?;
        let prod = t_multiply(&ta, &tb)?;
        self.t_to_c(&prod)
    }
}
