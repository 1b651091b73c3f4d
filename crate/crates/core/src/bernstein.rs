//! Bernstein elements `theta_x`, the orbit sums `z_x` and the central
//! elements `S_x = sum d_{x'}(x) z_{x'}`.
//!
//! For dominant `x'`, `x''` with `x = x' - x''`,
//!
//! ```text
//! theta_x = (q^{-l(x')/2} T_{x'}) (q^{-l(x'')/2} T_{x''})^{-1}
//! ```
//!
//! where `T_{x'}` is the basis element of the translation by `x'`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coxeter::{Generator, GroupElement};
use crate::error::{Error, Result};
use crate::hecke::{t_multiply, Basis, HeckeElement};
use crate::laurent::LaurentPoly;
use crate::weights::{self, Weight};

/// The translation `t_mu` for dominant `mu`; equals `(stsr)^a (w rsr)^b` and
/// has length `4a + 3b`.
pub fn translation_element(mu: Weight) -> Result<GroupElement> {
    mu.ensure_dominant()?;
    Ok(GroupElement::translation_by(mu))
}

/// `h * T_y^-1`, peeling `y` letter by letter.
fn t_right_mul_inverse(h: &HeckeElement, y: &GroupElement) -> Result<HeckeElement> {
    let mut out = h.clone();
    for g in y.word().into_iter().rev() {
        out = out.t_right_mul_gen_inverse(g)?;
    }
    if y.omega_exponent() == 1 {
        out = out.t_right_mul_omega()?;
    }
    Ok(out)
}

/// `theta_{x' - x''}` computed from the given dominant pair.
pub fn theta_with(x1: Weight, x2: Weight) -> Result<HeckeElement> {
    let t1 = translation_element(x1)?;
    let t2 = translation_element(x2)?;
    let h = HeckeElement::t(t1).shift(-(t1.length() as i32));
    Ok(t_right_mul_inverse(&h, &t2)?.shift(t2.length() as i32))
}

/// The canonical dominant pair `(x', x'')` with `x = x' - x''`.
pub fn canonical_decomposition(x: Weight) -> (Weight, Weight) {
    let plus = Weight::new(x.a.max(0), x.b.max(0));
    (plus, plus - x)
}

/// `theta_x` in the `T`-basis.
pub fn theta(x: Weight) -> HeckeElement {
    let (p, m) = canonical_decomposition(x);
    theta_with(p, m).expect("canonical decomposition is dominant")
}

/// `z_x`, the sum of `theta` over the `W0`-orbit of `x`.
pub fn z_element(x: Weight) -> Result<HeckeElement> {
    x.ensure_dominant()?;
    let mut out = HeckeElement::zero(Basis::T);
    for y in weights::orbit(x) {
        out.axpy(&theta(y), &LaurentPoly::one(), 0);
    }
    Ok(out)
}

/// A central element `S_lambda`, stored in the `T`-basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralElement {
    pub weight: Weight,
    pub expansion: HeckeElement,
}

/// `S_lambda = sum_{x dominant} d_x(lambda) z_x`.
pub fn s_element(lambda: Weight) -> Result<CentralElement> {
    lambda.ensure_dominant()?;
    let mut out = HeckeElement::zero(Basis::T);
    for (x, m) in weights::character(lambda)? {
        if x.is_dominant() {
            out.axpy(&z_element(x)?, &LaurentPoly::constant(m as i64), 0);
        }
    }
    Ok(CentralElement { weight: lambda, expansion: out })
}

/// Whether `h` commutes with `T_r`, `T_s`, `T_t` and `T_w`.
pub fn is_central(h: &HeckeElement) -> Result<bool> {
    for g in Generator::ALL {
        if h.t_left_mul_gen(g)? != h.t_right_mul_gen(g)? {
            return Ok(false);
        }
    }
    Ok(h.t_left_mul_omega()? == h.t_right_mul_omega()?)
}

/// `S_lambda S_lambda' = sum m_z S_z`: the multiplicities from the character
/// side, after checking the identity in the Hecke algebra.
pub fn central_product(lambda: Weight, lambda2: Weight) -> Result<BTreeMap<Weight, u64>> {
    let predicted = weights::tensor_decompose(lambda, lambda2)?;
    let lhs = t_multiply(&s_element(lambda)?.expansion, &s_element(lambda2)?.expansion)?;
    let mut rhs = HeckeElement::zero(Basis::T);
    for (&z, &m) in &predicted {
        rhs.axpy(&s_element(z)?.expansion, &LaurentPoly::constant(m as i64), 0);
    }
    if lhs != rhs {
        return Err(Error::Mismatch {
            what: format!("S_({lambda}) S_({lambda2})"),
            expected: rhs.to_string(),
            actual: lhs.to_string(),
        });
    }
    Ok(predicted)
}
