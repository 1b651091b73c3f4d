//! The affine Weyl group `W'` of type `B~2` on `S = {r, s, t}` and its
//! extension `W = {e, w} x W'`.
//!
//! Elements are stored as affine maps `x -> u(x) + mu` of the weight lattice,
//! `u` in the finite Weyl group `W0 = <s, t>` and `mu` a weight. Reduced words
//! are derived from this normal form, never stored as the primary data.
//!
//! Conventions, all pinned by tests:
//!
//! * `s`, `t` are the linear reflections in the simple roots `alpha1`, `alpha2`;
//! * the base alcove is the anti-dominant one,
//!   `{ <x, alpha_i^vee> < 0, <x, theta^vee> > -1 }` with `theta = alpha1 + alpha2`;
//! * `r` is the reflection in its third wall, `x -> s_theta(x) - theta`;
//! * `w` (printed `w`, the element omega) is the unique non-identity element of
//!   length zero.
//!
//! With these choices `stsr` is the translation by `x1` and `w.rsr` the
//! translation by `x2`, and `w r = t w`, `w s = s w`, `w t = r w`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{RootData, Weight};

/// Default length budget for enumerations and Kazhdan-Lusztig computations.
pub const DEFAULT_LENGTH_BUDGET: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    R,
    S,
    T,
}

impl Generator {
    /// In shortlex order `r < s < t`.
    pub const ALL: [Generator; 3] = [Generator::R, Generator::S, Generator::T];

    pub fn letter(self) -> char {
        match self {
            Generator::R => 'r',
            Generator::S => 's',
            Generator::T => 't',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'r' => Some(Generator::R),
            's' => Some(Generator::S),
            't' => Some(Generator::T),
            _ => None,
        }
    }

    /// `w g w^-1`: swaps `r` and `t`, fixes `s`.
    pub fn conjugate_by_omega(self) -> Self {
        match self {
            Generator::R => Generator::T,
            Generator::S => Generator::S,
            Generator::T => Generator::R,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Either a simple reflection or the length-zero element `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Gen(Generator),
    Omega,
}

/// An element of the finite Weyl group `W0 = <s, t>`, dihedral of order 8,
/// acting linearly on weights in `(x1, x2)` coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct W0Element {
    m: [[i64; 2]; 2],
}

impl W0Element {
    pub const fn identity() -> Self {
        Self { m: [[1, 0], [0, 1]] }
    }

    /// `s(a, b) = (-a, 2a + b)`, the reflection in `alpha1 = 2x1 - 2x2`.
    pub const fn s() -> Self {
        Self { m: [[-1, 0], [2, 1]] }
    }

    /// `t(a, b) = (a + b, -b)`, the reflection in `alpha2 = -x1 + 2x2`.
    pub const fn t() -> Self {
        Self { m: [[1, 1], [0, -1]] }
    }

    /// The longest element `(st)^2`, acting as `-1`.
    pub fn longest() -> Self {
        let st = Self::s().mul(Self::t());
        st.mul(st)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, o: Self) -> Self {
        let (a, b) = (self.m, o.m);
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self { m }
    }

    pub fn apply(self, mu: Weight) -> Weight {
        Weight::new(
            self.m[0][0] * mu.a + self.m[0][1] * mu.b,
            self.m[1][0] * mu.a + self.m[1][1] * mu.b,
        )
    }

    pub fn inverse(self) -> Self {
        // det = +-1 for every element
        let [[a, b], [c, d]] = self.m;
        let det = a * d - b * c;
        Self { m: [[d * det, -b * det], [-c * det, a * det]] }
    }

    pub fn matrix(self) -> [[i64; 2]; 2] {
        self.m
    }

    /// All eight elements, sorted by their shortlex word over `s < t`.
    pub fn all() -> Vec<W0Element> {
        let mut seen = vec![Self::identity()];
        let mut i = 0;
        while i < seen.len() {
            for g in [Self::s(), Self::t()] {
                let x = seen[i].mul(g);
                if !seen.contains(&x) {
                    seen.push(x);
                }
            }
            i += 1;
        }
        seen.sort_by_key(|u| {
            let w = u.word();
            (w.len(), w)
        });
        seen
    }

    /// Shortlex reduced word over `{s, t}`.
    pub fn word(self) -> Vec<Generator> {
        GroupElement::from_finite(self).word()
    }

    pub fn length(self) -> usize {
        GroupElement::from_finite(self).length()
    }
}

/// An element of the extended affine Weyl group `W`, as the affine map
/// `x -> finite_part(x) + translation`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    finite_part: W0Element,
    translation: Weight,
}

impl GroupElement {
    pub const fn identity() -> Self {
        Self {
            finite_part: W0Element::identity(),
            translation: Weight::ZERO,
        }
    }

    pub const fn from_parts(finite_part: W0Element, translation: Weight) -> Self {
        Self { finite_part, translation }
    }

    pub const fn from_finite(u: W0Element) -> Self {
        Self::from_parts(u, Weight::ZERO)
    }

    /// The translation `t_mu`.
    pub const fn translation_by(mu: Weight) -> Self {
        Self::from_parts(W0Element::identity(), mu)
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::S => Self::from_finite(W0Element::s()),
            Generator::T => Self::from_finite(W0Element::t()),
            Generator::R => {
                let s_theta = W0Element::s().mul(W0Element::t()).mul(W0Element::s());
                Self::from_parts(s_theta, -Weight::X1)
            }
        }
    }

    /// The length-zero element `w`, which is `t_{x2} (rsr)^-1`.
    pub fn omega() -> Self {
        Self::from_parts(W0Element { m: [[1, 0], [-2, -1]] }, Weight::new(0, -1))
    }

    pub fn letter(l: Letter) -> Self {
        match l {
            Letter::Gen(g) => Self::generator(g),
            Letter::Omega => Self::omega(),
        }
    }

    pub fn from_word(word: &[Generator]) -> Self {
        word.iter()
            .fold(Self::identity(), |acc, &g| acc.mul(&Self::generator(g)))
    }

    pub fn finite_part(&self) -> W0Element {
        self.finite_part
    }

    pub fn translation(&self) -> Weight {
        self.translation
    }

    /// Exponent `p` of `w` in `w^p * x'`, `x'` in the Coxeter group.
    pub fn omega_exponent(&self) -> u8 {
        (!self.translation.in_root_lattice()) as u8
    }

    /// The component `x'` in `self = w^p x'`.
    pub fn coxeter_part(&self) -> GroupElement {
        if self.omega_exponent() == 1 {
            Self::omega().mul(self)
        } else {
            *self
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        GroupElement {
            finite_part: self.finite_part.mul(o.finite_part),
            translation: self.finite_part.apply(o.translation) + self.translation,
        }
    }

    pub fn mul_gen(&self, g: Generator) -> GroupElement {
        self.mul(&Self::generator(g))
    }

    pub fn gen_mul(&self, g: Generator) -> GroupElement {
        Self::generator(g).mul(self)
    }

    pub fn inverse(&self) -> GroupElement {
        let inv = self.finite_part.inverse();
        GroupElement {
            finite_part: inv,
            translation: -inv.apply(self.translation),
        }
    }

    /// Conjugation `w x w^-1`.
    pub fn conjugate_by_omega(&self) -> GroupElement {
        let o = Self::omega();
        o.mul(self).mul(&o)
    }

    pub fn apply(&self, mu: Weight) -> Weight {
        self.finite_part.apply(mu) + self.translation
    }

    /// Coxeter length, counting the affine hyperplanes `<x, beta^vee> = k`
    /// separating the base alcove from its image (Iwahori-Matsumoto).
    ///
    /// The base alcove contains `p = (-1/8, -1/8)`, whose coroot pairings are
    /// never integers; an image point `y` lies on the far side of
    /// `|floor(<y, beta^vee>) + 1|` hyperplanes of direction `beta`.
    pub fn length(&self) -> usize {
        let scaled = self.finite_part.apply(Weight::new(-1, -1)) + 8 * self.translation;
        RootData::coroot_pairings(scaled)
            .iter()
            .map(|&c| (c.div_euclid(8) + 1).unsigned_abs() as usize)
            .sum()
    }

    pub fn has_left_descent(&self, g: Generator) -> bool {
        self.gen_mul(g).length() < self.length()
    }

    pub fn has_right_descent(&self, g: Generator) -> bool {
        self.mul_gen(g).length() < self.length()
    }

    pub fn left_descents(&self) -> BTreeSet<Generator> {
        Generator::ALL.into_iter().filter(|&g| self.has_left_descent(g)).collect()
    }

    pub fn right_descents(&self) -> BTreeSet<Generator> {
        Generator::ALL.into_iter().filter(|&g| self.has_right_descent(g)).collect()
    }

    pub fn descents(&self, side: Side) -> BTreeSet<Generator> {
        match side {
            Side::Left => self.left_descents(),
            Side::Right => self.right_descents(),
        }
    }

    /// Shortlex-least reduced word of the Coxeter part.
    pub fn word(&self) -> Vec<Generator> {
        let mut x = self.coxeter_part();
        let mut len = x.length();
        let mut out = Vec::with_capacity(len);
        while len > 0 {
            let g = Generator::ALL
                .into_iter()
                .find(|&g| x.gen_mul(g).length() < len)
                .expect("nonidentity element has a left descent");
            out.push(g);
            x = x.gen_mul(g);
            len -= 1;
        }
        out
    }

    pub fn word_string(&self) -> String {
        self.word().iter().map(|g| g.letter()).collect()
    }

    /// Sort key `(length, omega, word)` used for all deterministic output.
    pub fn shortlex_key(&self) -> (usize, u8, Vec<Generator>) {
        (self.length(), self.omega_exponent(), self.word())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `e`, `rst`, `w`, `w.rsr`.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.word_string();
        match (self.omega_exponent(), word.is_empty()) {
            (0, true) => write!(f, "e"),
            (0, false) => write!(f, "{word}"),
            (_, true) => write!(f, "w"),
            (_, false) => write!(f, "w.{word}"),
        }
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (omega, rest) = match s {
            "w" => (true, ""),
            _ => match s.strip_prefix("w.") {
                Some(rest) => (true, rest),
                None => (false, s),
            },
        };
        let mut x = GroupElement::identity();
        if rest != "e" {
            if rest.is_empty() && !omega {
                return Err(Error::Parse("empty element".into()));
            }
            for c in rest.chars() {
                let g = Generator::from_letter(c)
                    .ok_or_else(|| Error::Parse(format!("unexpected letter {c:?} in {s:?}")))?;
                x = x.mul_gen(g);
            }
        }
        if omega {
            x = GroupElement::omega().mul(&x);
        }
        Ok(x)
    }
}

pub fn multiply(a: &GroupElement, b: &GroupElement) -> GroupElement {
    a.mul(b)
}

pub fn invert(w: &GroupElement) -> GroupElement {
    w.inverse()
}

pub fn length(w: &GroupElement) -> usize {
    w.length()
}

/// Which cosets of the Coxeter group to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cosets {
    CoxeterOnly,
    Both,
}

/// All elements of length `<= max_len`, sorted by `(length, shortlex)`.
pub fn enumerate(max_len: usize, budget: usize, cosets: Cosets) -> Result<Vec<GroupElement>> {
    if max_len > budget {
        return Err(Error::BudgetExceeded { length: max_len, budget });
    }
    let mut out = Vec::new();
    let mut level = vec![GroupElement::identity()];
    for len in 0..=max_len {
        let mut keyed: Vec<_> = level.iter().map(|x| (x.word(), *x)).collect();
        keyed.sort();
        for (_, x) in &keyed {
            out.push(*x);
        }
        if cosets == Cosets::Both {
            for (_, x) in &keyed {
                out.push(GroupElement::omega().mul(x));
            }
        }
        if len == max_len {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for x in &level {
            for g in Generator::ALL {
                let y = x.mul_gen(g);
                if y.length() == len + 1 && seen.insert(y) {
                    next.push(y);
                }
            }
        }
        level = next;
    }
    Ok(out)
}

/// Memoised Bruhat order.
#[derive(Default)]
pub struct BruhatOrder {
    memo: HashMap<(GroupElement, GroupElement), bool>,
}

impl BruhatOrder {
    pub fn new() -> Self {
        Self::default()
    }

    /// `y <= w`; false whenever the `w`-exponents differ.
    pub fn leq(&mut self, y: &GroupElement, w: &GroupElement) -> bool {
        if y.omega_exponent() != w.omega_exponent() {
            return false;
        }
        self.leq_coxeter(y.coxeter_part(), w.coxeter_part())
    }

    fn leq_coxeter(&mut self, y: GroupElement, w: GroupElement) -> bool {
        let (ly, lw) = (y.length(), w.length());
        if ly > lw {
            return false;
        }
        if ly == lw {
            return y == w;
        }
        if ly == 0 {
            return true;
        }
        if let Some(&b) = self.memo.get(&(y, w)) {
            return b;
        }
        let g = Generator::ALL
            .into_iter()
            .find(|&g| w.has_left_descent(g))
            .expect("w != e has a left descent");
        let sw = w.gen_mul(g);
        let res = if y.has_left_descent(g) {
            self.leq_coxeter(y.gen_mul(g), sw)
        } else {
            self.leq_coxeter(y, sw)
        };
        self.memo.insert((y, w), res);
        res
    }
}

pub fn bruhat_leq(y: &GroupElement, w: &GroupElement) -> bool {
    BruhatOrder::new().leq(y, w)
}
