//! The generic Hecke algebra of the extended group `W`, in the standard basis
//! `T_x` with quadratic relation `(T_g - q)(T_g + 1) = 0` and `T_w T_x = T_{wx}`.

use std::collections::HashMap;
use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::coxeter::{Generator, GroupElement, Letter};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Standard basis `T_x`.
    T,
    /// Kazhdan-Lusztig basis `C_x`.
    C,
}

impl Basis {
    pub fn tag(self) -> char {
        match self {
            Basis::T => 'T',
            Basis::C => 'C',
        }
    }
}

/// A finite `Z[v, v^-1]`-linear combination of basis elements.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    basis: Basis,
    terms: HashMap<GroupElement, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(basis: Basis) -> Self {
        Self { basis, terms: HashMap::new() }
    }

    /// The basis element `T_x` or `C_x`.
    pub fn basis_element(basis: Basis, x: GroupElement) -> Self {
        Self::monomial(basis, x, LaurentPoly::one())
    }

    pub fn monomial(basis: Basis, x: GroupElement, coeff: LaurentPoly) -> Self {
        let mut h = Self::zero(basis);
        h.add_term(x, &coeff);
        h
    }

    pub fn t(x: GroupElement) -> Self {
        Self::basis_element(Basis::T, x)
    }

    pub fn one() -> Self {
        Self::t(GroupElement::identity())
    }

    pub fn from_terms<I: IntoIterator<Item = (GroupElement, LaurentPoly)>>(basis: Basis, terms: I) -> Self {
        let mut h = Self::zero(basis);
        for (x, c) in terms {
            h.add_term(x, &c);
        }
        h
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Terms sorted by `(length, w-exponent, shortlex word)`.
    pub fn sorted_terms(&self) -> Vec<(GroupElement, LaurentPoly)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(x, c)| (x.shortlex_key(), *x, c.clone()))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, x, c)| (x, c)).collect()
    }

    pub fn support(&self) -> Vec<GroupElement> {
        self.sorted_terms().into_iter().map(|(x, _)| x).collect()
    }

    pub fn coefficient_of(&self, x: &GroupElement) -> LaurentPoly {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn max_length(&self) -> usize {
        self.terms.keys().map(|x| x.length()).max().unwrap_or(0)
    }

    /// `self += coeff * v^shift * B_x`.
    pub(crate) fn add_scaled_term(&mut self, x: GroupElement, coeff: &LaurentPoly, scale: i64, shift: i32) {
        if coeff.is_zero() || scale == 0 {
            return;
        }
        let entry = self.terms.entry(x).or_default();
        entry.add_scaled_shift(coeff, scale, shift);
        if entry.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub(crate) fn add_term(&mut self, x: GroupElement, coeff: &LaurentPoly) {
        self.add_scaled_term(x, coeff, 1, 0);
    }

    /// `self += c * v^shift * other`, basis tags unchecked.
    pub(crate) fn axpy(&mut self, other: &HeckeElement, c: &LaurentPoly, shift: i32) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            for (x, k) in &other.terms {
                self.add_scaled_term(*x, k, 1, shift);
            }
            return;
        }
        for (x, k) in &other.terms {
            self.add_term(*x, &(c * k).shift(shift));
        }
    }

    fn check_same_basis(&self, other: &HeckeElement) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.tag(),
                found: other.basis.tag(),
            });
        }
        Ok(())
    }

    pub(crate) fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::BasisMismatch {
                expected: basis.tag(),
                found: self.basis.tag(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_same_basis(other)?;
        let mut out = self.clone();
        out.axpy(other, &LaurentPoly::one(), 0);
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_same_basis(other)?;
        let mut out = self.clone();
        out.axpy(other, &LaurentPoly::constant(-1), 0);
        Ok(out)
    }

    pub fn neg(&self) -> HeckeElement {
        self.scale(&LaurentPoly::constant(-1))
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        let mut out = HeckeElement::zero(self.basis);
        out.axpy(self, c, 0);
        out
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> HeckeElement {
        HeckeElement {
            basis: self.basis,
            terms: self.terms.iter().map(|(x, c)| (*x, c.shift(k))).collect(),
        }
    }

    /// Replaces every index `x` by `f(x)`; `f` must be injective.
    pub(crate) fn map_support(&self, f: impl Fn(&GroupElement) -> GroupElement) -> HeckeElement {
        HeckeElement {
            basis: self.basis,
            terms: self.terms.iter().map(|(x, c)| (f(x), c.clone())).collect(),
        }
    }

    /// `T_g * self`.
    pub fn t_left_mul_gen(&self, g: Generator) -> Result<HeckeElement> {
        self.expect_basis(Basis::T)?;
        let mut out = HeckeElement::zero(Basis::T);
        for (y, c) in &self.terms {
            let gy = y.gen_mul(g);
            if gy.length() > y.length() {
                out.add_term(gy, c);
            } else {
                out.add_scaled_term(gy, c, 1, 2);
                out.add_scaled_term(*y, c, 1, 2);
                out.add_scaled_term(*y, c, -1, 0);
            }
        }
        Ok(out)
    }

    /// `self * T_g`.
    pub fn t_right_mul_gen(&self, g: Generator) -> Result<HeckeElement> {
        self.expect_basis(Basis::T)?;
        let mut out = HeckeElement::zero(Basis::T);
        for (y, c) in &self.terms {
            let yg = y.mul_gen(g);
            if yg.length() > y.length() {
                out.add_term(yg, c);
            } else {
                out.add_scaled_term(yg, c, 1, 2);
                out.add_scaled_term(*y, c, 1, 2);
                out.add_scaled_term(*y, c, -1, 0);
            }
        }
        Ok(out)
    }

    /// `self * T_g^-1`, using `T_y T_g^-1 = T_{yg}` when `yg < y`.
    pub fn t_right_mul_gen_inverse(&self, g: Generator) -> Result<HeckeElement> {
        self.expect_basis(Basis::T)?;
        let mut out = HeckeElement::zero(Basis::T);
        for (y, c) in &self.terms {
            let yg = y.mul_gen(g);
            if yg.length() < y.length() {
                out.add_term(yg, c);
            } else {
                out.add_scaled_term(yg, c, 1, -2);
                out.add_scaled_term(*y, c, 1, -2);
                out.add_scaled_term(*y, c, -1, 0);
            }
        }
        Ok(out)
    }

    /// `T_w * self`.
    pub fn t_left_mul_omega(&self) -> Result<HeckeElement> {
        self.expect_basis(Basis::T)?;
        let o = GroupElement::omega();
        Ok(self.map_support(|x| o.mul(x)))
    }

    /// `self * T_w`.
    pub fn t_right_mul_omega(&self) -> Result<HeckeElement> {
        self.expect_basis(Basis::T)?;
        let o = GroupElement::omega();
        Ok(self.map_support(|x| x.mul(&o)))
    }

    pub fn t_left_mul_letter(&self, l: Letter) -> Result<HeckeElement> {
        match l {
            Letter::Gen(g) => self.t_left_mul_gen(g),
            Letter::Omega => self.t_left_mul_omega(),
        }
    }

    pub fn t_right_mul_letter(&self, l: Letter) -> Result<HeckeElement> {
        match l {
            Letter::Gen(g) => self.t_right_mul_gen(g),
            Letter::Omega => self.t_right_mul_omega(),
        }
    }

    /// `C_g * self` with `C_g = v^-1 (T_g + T_e)`.
    pub fn c_gen_left_mul(&self, g: Generator) -> Result<HeckeElement> {
        let mut out = self.t_left_mul_gen(g)?;
        out.axpy(self, &LaurentPoly::one(), 0);
        Ok(out.shift(-1))
    }

    /// `self * C_g`.
    pub fn c_gen_right_mul(&self, g: Generator) -> Result<HeckeElement> {
        let mut out = self.t_right_mul_gen(g)?;
        out.axpy(self, &LaurentPoly::one(), 0);
        Ok(out.shift(-1))
    }

    /// `self * T_y`, peeling `y` one right descent at a time.
    pub fn t_right_mul_basis(&self, y: &GroupElement) -> Result<HeckeElement> {
        self.expect_basis(Basis::T)?;
        let mut letters = Vec::new();
        let mut z = *y;
        while let Some(g) = Generator::ALL.into_iter().find(|&g| z.has_right_descent(g)) {
            letters.push(g);
            z = z.mul_gen(g);
        }
        let mut out = if z.is_identity() { self.clone() } else { self.t_right_mul_omega()? };
        for g in letters.into_iter().rev() {
            out = out.t_right_mul_gen(g)?;
        }
        Ok(out)
    }

    /// Display with a custom name for the basis symbol.
    pub fn display_with(&self, symbol: &str) -> String {
        format_combination(self.sorted_terms().iter().map(|(x, c)| (format!("{symbol}[{x}]"), c)))
    }
}

/// Product of two `T`-basis elements.
///
/// `a * T_y` is memoised over the right-descent prefixes of every `y` in the
/// support of `b`.
pub fn t_multiply(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    a.expect_basis(Basis::T)?;
    b.expect_basis(Basis::T)?;
    let mut memo: HashMap<GroupElement, HeckeElement> = HashMap::new();
    fn prefix_product(
        a: &HeckeElement,
        y: GroupElement,
        memo: &mut HashMap<GroupElement, HeckeElement>,
    ) -> Result<HeckeElement> {
        if let Some(h) = memo.get(&y) {
            return Ok(h.clone());
        }
        let h = match Generator::ALL.into_iter().find(|&g| y.has_right_descent(g)) {
            Some(g) => prefix_product(a, y.mul_gen(g), memo)?.t_right_mul_gen(g)?,
            None if y.is_identity() => a.clone(),
            None => a.t_right_mul_omega()?,
        };
        memo.insert(y, h.clone());
        Ok(h)
    }
    let mut out = HeckeElement::zero(Basis::T);
    let mut support: Vec<_> = b.terms.iter().collect();
    support.sort_by_key(|(y, _)| y.length());
    for (y, c) in support {
        let p = prefix_product(a, *y, &mut memo)?;
        out.axpy(&p, c, 0);
    }
    Ok(out)
}

/// `T_g^-1`: `q^-1 T_g + (q^-1 - 1) T_e` for a simple reflection, `T_w` for `w`.
pub fn t_inverse_generator(l: Letter) -> HeckeElement {
    match l {
        Letter::Omega => HeckeElement::t(GroupElement::omega()),
        Letter::Gen(g) => HeckeElement::from_terms(
            Basis::T,
            [
                (GroupElement::generator(g), LaurentPoly::monomial(1, -2)),
                (GroupElement::identity(), LaurentPoly::from_terms([(-2, 1), (0, -1)])),
            ],
        ),
    }
}

/// `T_x^-1` expanded in the `T`-basis.
pub fn t_inverse(x: &GroupElement) -> HeckeElement {
    // x = w^p g_1 ... g_k, so T_x^-1 = T_{g_k}^-1 ... T_{g_1}^-1 T_w^p.
    let mut h = HeckeElement::one();
    for g in x.word().into_iter().rev() {
        h = h.t_right_mul_gen_inverse(g).expect("T-basis");
    }
    if x.omega_exponent() == 1 {
        h = h.t_right_mul_omega().expect("T-basis");
    }
    h
}

pub(crate) fn format_coefficient_prefix(c: &LaurentPoly) -> (bool, String) {
    if let Some((sign, k)) = c.as_signed_quantum_two_power() {
        let body = match k {
            0 => String::new(),
            1 => "[2]·".to_string(),
            k => format!("[2]^{k}·"),
        };
        return (sign < 0, body);
    }
    if let Some(n) = c.as_constant() {
        return (n < 0, format!("{}·", n.abs()));
    }
    let terms = c.terms();
    if terms.len() == 1 && terms[0].1 < 0 {
        return (true, format!("({})·", c.scale(-1)));
    }
    (false, format!("({c})·"))
}

/// Renders `sum c_i * name_i` as `C[rt] - [2]·C[rtsrt]`.
pub(crate) fn format_combination<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a LaurentPoly)>,
{
    let mut out = String::new();
    for (i, (name, c)) in terms.into_iter().enumerate() {
        let (negative, prefix) = format_coefficient_prefix(c);
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&prefix);
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.tag().to_string();
        write!(f, "{}", self.display_with(&sym))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement({self})")
    }
}

/// `{"basis": "T", "terms": [["rt", [[exp, coeff], ...]], ...]}`.
impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(String, LaurentPoly)> = self
            .sorted_terms()
            .into_iter()
            .map(|(x, c)| (x.to_string(), c))
            .collect();
        let mut st = serializer.serialize_struct("HeckeElement", 2)?;
        st.serialize_field("basis", &self.basis.tag().to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
