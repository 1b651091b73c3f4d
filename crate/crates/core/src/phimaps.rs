//! The map `phi` from the centre to `A (x) R_F`, the products `C_rt S_lambda`
//! modulo `H_{c0}`, and the verifications built on them.
//!
//! `H_1` is spanned by `b_{m,p} = (1/[2]^2) C^_{rt(srt)^m w^p}` in the
//! quotient `H_{>=2} / H_{c0}`; `phi_1` sends `b_{m,p}` to `V(m) e^p`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bernstein::s_element;
use crate::cells::{a_value, c0_part, h1_element, parse_h1_index, project_to_quotient, reduce_mod_c0};
use crate::coxeter::{enumerate, BruhatOrder, Cosets, Generator, GroupElement};
use crate::error::{Error, Result};
use crate::hecke::{Basis, HeckeElement};
use crate::klbasis::KlCache;
use crate::laurent::LaurentPoly;
use crate::repring::{monomial_to_irrep, phi_tilde_theta, rf_multiply, MonomialElt, RepRingElt};
use crate::weights::{self, Weight};

/// The coefficients `a_{k,p}` of `phi(S_lambda) = sum a_{k,p} V(k) e^p`.
pub type AkpTable = RepRingElt;

fn two_squared() -> LaurentPoly {
    LaurentPoly::quantum_two_pow(2)
}

/// `phi_1` on coordinates in the basis `b_{m,p}`.
pub fn phi1(coords: &BTreeMap<GroupElement, LaurentPoly>) -> Result<RepRingElt> {
    let mut terms = Vec::with_capacity(coords.len());
    for (x, c) in coords {
        let (m, p) = parse_h1_index(x).ok_or_else(|| Error::NotInH1(x.to_string()))?;
        terms.push(((m as u32, p), c.clone()));
    }
    Ok(RepRingElt::from_terms(terms))
}

/// Inverse of [`phi1`].
pub fn phi1_inverse(u: &RepRingElt) -> BTreeMap<GroupElement, LaurentPoly> {
    u.terms()
        .iter()
        .map(|(&(k, p), c)| (h1_element(k as usize, p), c.clone()))
        .collect()
}

/// `b`-coordinates of the image of `h` in the quotient: `C^_x = [2]^2 b_x`.
pub fn h1_coordinates(h: &HeckeElement) -> Result<BTreeMap<GroupElement, LaurentPoly>> {
    let d = two_squared();
    Ok(project_to_quotient(h)?.into_iter().map(|(x, c)| (x, &c * &d)).collect())
}

/// `b_{m,p} b_{n,p'}` in `b`-coordinates: the image of the product in `H`,
/// which is `[2]^4 b_{m,p} b_{n,p'}`, divided by `[2]^2`.
pub fn h1_product(kl: &mut KlCache, m: usize, p: u8, n: usize, p2: u8) -> Result<BTreeMap<GroupElement, LaurentPoly>> {
    let prod = kl.c_multiply(&h1_element(m, p), &h1_element(n, p2))?;
    let d = two_squared();
    project_to_quotient(&prod)?
        .into_iter()
        .map(|(x, c)| Ok((x, c.divide_exact(&d)?)))
        .collect()
}

/// `phi(S_lambda)` from the character of `V(lambda)` and `phi~` on the
/// Bernstein elements.
pub fn phi_s(lambda: Weight) -> Result<AkpTable> {
    let mut total = MonomialElt::zero();
    for (x, m) in weights::character(lambda)? {
        total = total.add(&phi_tilde_theta(x).scale(&LaurentPoly::constant(m as i64)));
    }
    monomial_to_irrep(&total)
}

/// `phi(S_lambda)` as the polynomial `f` with `S_lambda = f(S_x1, S_x2)`,
/// evaluated on `phi(S_x1)` and `phi(S_x2)`.
pub fn phi_s_method1(lambda: Weight) -> Result<AkpTable> {
    let p1 = phi_s(Weight::X1)?;
    let p2 = phi_s(Weight::X2)?;
    let mut out = RepRingElt::zero();
    for ((i, j), c) in weights::fundamental_polynomial(lambda)? {
        let mut term = RepRingElt::one();
        for _ in 0..i {
            term = rf_multiply(&term, &p1);
        }
        for _ in 0..j {
            term = rf_multiply(&term, &p2);
        }
        out = out.add(&term.scale(&LaurentPoly::constant(c)));
    }
    Ok(out)
}

/// `C_rt S_lambda` in the `C`-basis, optionally reduced modulo `H_{c0}`.
pub fn crt_s_product(kl: &mut KlCache, lambda: Weight, mod_c0: bool) -> Result<HeckeElement> {
    let s = s_element(lambda)?.expansion;
    let mut prod = s.c_gen_right_mul(Generator::R)?.c_gen_right_mul(Generator::T)?;
    if let Some(top) = prod.support().into_iter().max_by_key(|x| x.length()) {
        if top.length() > kl.budget() {
            return Err(Error::BudgetExceeded { length: top.length(), budget: kl.budget() });
        }
    }
    prod = kl.t_to_c(&prod)?;
    if mod_c0 {
        reduce_mod_c0(&prod)
    } else {
        Ok(prod)
    }
}

/// Both sides of `C_rt S_lambda = sum a_{k,p} C_{rt(srt)^k w^p} mod H_{c0}`.
#[derive(Clone, Debug, Serialize)]
pub struct Theorem36Report {
    pub weight: Weight,
    pub holds: bool,
    pub product_mod_c0: HeckeElement,
    pub predicted: HeckeElement,
    pub a_kp: AkpTable,
    pub c0_part: HeckeElement,
}

pub fn theorem36_verify(kl: &mut KlCache, lambda: Weight) -> Result<Theorem36Report> {
    let full = crt_s_product(kl, lambda, false)?;
    let product_mod_c0 = reduce_mod_c0(&full)?;
    let a_kp = phi_s(lambda)?;
    let predicted = HeckeElement::from_terms(Basis::C, phi1_inverse(&a_kp));
    Ok(Theorem36Report {
        weight: lambda,
        holds: product_mod_c0 == predicted,
        product_mod_c0,
        predicted,
        a_kp,
        c0_part: c0_part(&full)?,
    })
}

/// `C_rt S_x1` and `C_rt S_x2` against their closed forms.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma32Report {
    pub holds: bool,
    pub x1_product: HeckeElement,
    pub x1_expected: HeckeElement,
    pub x2_product: HeckeElement,
    pub x2_expected: HeckeElement,
}

pub fn lemma32_verify(kl: &mut KlCache) -> Result<Lemma32Report> {
    let el = |s: &str| s.parse::<GroupElement>().expect("valid word");
    let two = LaurentPoly::quantum_two();
    let x1_expected = HeckeElement::from_terms(
        Basis::C,
        [
            (el("rststr"), LaurentPoly::one()),
            (el("tsrsrt"), LaurentPoly::one()),
            (el("rtsrt"), -&two),
            (el("rt"), LaurentPoly::one()),
        ],
    );
    let inner = HeckeElement::from_terms(Basis::C, [(el("rtsrt"), LaurentPoly::one()), (el("rt"), -&two)]);
    let x2_expected = kl.c_product(&inner, &HeckeElement::basis_element(Basis::C, GroupElement::omega()))?;
    let x1_product = crt_s_product(kl, Weight::X1, false)?;
    let x2_product = crt_s_product(kl, Weight::X2, false)?;
    Ok(Lemma32Report {
        holds: x1_product == x1_expected && x2_product == x2_expected,
        x1_product,
        x1_expected,
        x2_product,
        x2_expected,
    })
}

/// `C_{rt(srt)^m} C_{rt(srt)^n} = [2]^2 sum_{i <= min(m,n)} C_{rt(srt)^{m+n-2i}} mod H_{c0}`.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma31Report {
    pub m: usize,
    pub n: usize,
    pub holds: bool,
    pub product_mod_c0: HeckeElement,
    pub expected: HeckeElement,
}

pub fn lemma31_verify(kl: &mut KlCache, m: usize, n: usize) -> Result<Lemma31Report> {
    let prod = kl.c_multiply(&h1_element(m, 0), &h1_element(n, 0))?;
    let product_mod_c0 = reduce_mod_c0(&prod)?;
    let expected = HeckeElement::from_terms(
        Basis::C,
        (0..=m.min(n)).map(|i| (h1_element(m + n - 2 * i, 0), two_squared())),
    );
    Ok(Lemma31Report { m, n, holds: product_mod_c0 == expected, product_mod_c0, expected })
}

/// Every term of `C_rt S_lambda mod H_{c0}` has `L(w) = R(w) = {r, t}` and
/// is of the form `rt(srt)^m w^p`.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma35Report {
    pub weight: Weight,
    pub holds: bool,
    pub terms: Vec<String>,
    pub offending: Vec<String>,
}

pub fn lemma35_check(kl: &mut KlCache, lambda: Weight) -> Result<Lemma35Report> {
    let prod = crt_s_product(kl, lambda, true)?;
    let rt = [Generator::R, Generator::T].into();
    let mut terms = Vec::new();
    let mut offending = Vec::new();
    for (x, _) in prod.sorted_terms() {
        terms.push(x.to_string());
        let ok = x.left_descents() == rt && x.right_descents() == rt && parse_h1_index(&x).is_some();
        if !ok {
            offending.push(x.to_string());
        }
    }
    Ok(Lemma35Report { weight: lambda, holds: offending.is_empty(), terms, offending })
}

#[derive(Clone, Debug, Serialize)]
pub struct MuPair {
    pub y: String,
    pub w: String,
    pub a_y: u32,
    pub a_w: u32,
    pub length_gap: usize,
    pub mu: i64,
}

/// `mu(y, w)` for `y < w` in the Coxeter group, `a(y) = 4`, `a(w)` in
/// `{1, 2}`, both minimal in their `<s,t>` double cosets and
/// `l(w) - l(y) <= 3`.
#[derive(Clone, Debug, Serialize)]
pub struct MuScanReport {
    pub min_length: usize,
    pub max_length: usize,
    pub pairs: Vec<MuPair>,
    pub counterexamples: Vec<MuPair>,
}

fn double_coset_minimal(x: &GroupElement) -> bool {
    [Generator::S, Generator::T]
        .iter()
        .all(|&g| !x.has_left_descent(g) && !x.has_right_descent(g))
}

pub fn mu_conjecture_scan(kl: &mut KlCache, min_length: usize, max_length: usize) -> Result<MuScanReport> {
    let mut report = MuScanReport { min_length, max_length, pairs: Vec::new(), counterexamples: Vec::new() };
    if min_length > max_length {
        return Ok(report);
    }
    let minimal: Vec<GroupElement> = enumerate(max_length, kl.budget(), Cosets::Both)?
        .into_iter()
        .filter(double_coset_minimal)
        .collect();
    let ys: Vec<_> = minimal.iter().filter(|y| a_value(y) == 4).collect();
    let ws: Vec<_> = minimal
        .iter()
        .filter(|w| w.length() >= min_length && matches!(a_value(w), 1 | 2))
        .collect();
    let mut bruhat = BruhatOrder::new();
    for w in ws {
        for y in &ys {
            let (ly, lw) = (y.length(), w.length());
            if ly >= lw || lw - ly > 3 || !bruhat.leq(y, w) {
                continue;
            }
            let pair = MuPair {
                y: y.to_string(),
                w: w.to_string(),
                a_y: 4,
                a_w: a_value(w),
                length_gap: lw - ly,
                mu: kl.mu(y, w)?,
            };
            if pair.mu != 0 {
                report.counterexamples.push(pair.clone());
            }
            report.pairs.push(pair);
        }
    }
    Ok(report)
}
