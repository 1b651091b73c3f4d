//! The weight lattice of `Sp4(C)` and the finite-dimensional representation
//! theory needed for the central elements `S_lambda`.
//!
//! Weights are written `a*x1 + b*x2` in the fundamental weights. The simple
//! roots are obtained by inverting `x1 = alpha1 + alpha2` and
//! `x2 = alpha1/2 + alpha2`:
//!
//! ```text
//! alpha1 = 2x1 - 2x2   (long, reflection s)
//! alpha2 = -x1 + 2x2   (short, reflection t)
//! ```
//!
//! so that `<x_i, alpha_j^vee> = delta_ij`. With this labelling the
//! 4-dimensional module has highest weight `x2` and the 5-dimensional one has
//! highest weight `x1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::coxeter::W0Element;
use crate::error::{Error, Result};

/// `a*x1 + b*x2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };
    pub const X1: Weight = Weight { a: 1, b: 0 };
    pub const X2: Weight = Weight { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn ensure_dominant(self) -> Result<Self> {
        if self.is_dominant() {
            Ok(self)
        } else {
            Err(Error::NotDominant(self))
        }
    }

    /// Whether the weight lies in the root lattice, i.e. is a translation of
    /// the Coxeter group rather than of its extension.
    pub fn in_root_lattice(self) -> bool {
        self.b.rem_euclid(2) == 0
    }

    /// Height-like functional strictly increasing along positive roots;
    /// `4a + 3b` is four times the height in simple-root coordinates.
    pub fn height4(self) -> i64 {
        4 * self.a + 3 * self.b
    }

    /// Coordinates in the simple roots, if `self` is in the root lattice.
    pub fn root_coordinates(self) -> Option<(i64, i64)> {
        self.in_root_lattice()
            .then(|| (self.a + self.b / 2, self.a + self.b))
    }

    /// The dominant weight in the `W0`-orbit of `self`.
    pub fn dominant_representative(self) -> Weight {
        let mut w = self;
        loop {
            if w.a < 0 {
                w = W0Element::s().apply(w);
            } else if w.b < 0 {
                w = W0Element::t().apply(w);
            } else {
                return w;
            }
        }
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;

    fn mul(self, w: Weight) -> Weight {
        Weight::new(self * w.a, self * w.b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*x1{}{}*x2", self.a, if self.b < 0 { "-" } else { "+" }, self.b.abs())
    }
}

/// Root datum of type `C2` in fundamental-weight coordinates.
pub struct RootData;

impl RootData {
    pub const ALPHA1: Weight = Weight::new(2, -2);
    pub const ALPHA2: Weight = Weight::new(-1, 2);
    pub const RHO: Weight = Weight::new(1, 1);

    /// `alpha1, alpha2, alpha1 + alpha2, alpha1 + 2 alpha2`.
    pub const POSITIVE_ROOTS: [Weight; 4] = [
        Weight::new(2, -2),
        Weight::new(-1, 2),
        Weight::new(1, 0),
        Weight::new(0, 2),
    ];

    /// `<mu, beta^vee>` for each positive root `beta`, in the order of
    /// [`RootData::POSITIVE_ROOTS`]. The coroots are `alpha1^vee`,
    /// `alpha2^vee`, `2 alpha1^vee + alpha2^vee` and `alpha1^vee + alpha2^vee`.
    pub fn coroot_pairings(mu: Weight) -> [i64; 4] {
        [mu.a, mu.b, 2 * mu.a + mu.b, mu.a + mu.b]
    }

    /// Twice the `W0`-invariant form normalised by `(alpha2, alpha2) = 1`.
    pub fn form(x: Weight, y: Weight) -> i64 {
        2 * x.a * y.a + x.a * y.b + x.b * y.a + x.b * y.b
    }

    /// `lambda >= mu` in the dominance order.
    pub fn dominates(lambda: Weight, mu: Weight) -> bool {
        matches!((lambda - mu).root_coordinates(), Some((c1, c2)) if c1 >= 0 && c2 >= 0)
    }

    /// Checks the inverted root data against the defining pairings and the
    /// Cartan matrix of `C2`. Returns a description of the first failure.
    pub fn self_check() -> std::result::Result<(), String> {
        for j in 0..2 {
            let coroot = |mu: Weight| Self::coroot_pairings(mu)[j];
            if coroot(Weight::X1) != (j == 0) as i64 || coroot(Weight::X2) != (j == 1) as i64 {
                return Err(format!("<x_i, alpha_{}^vee> != delta", j + 1));
            }
        }
        // Cartan matrix a_ij = <alpha_i, alpha_j^vee>.
        let cartan = [
            [Self::coroot_pairings(Self::ALPHA1)[0], Self::coroot_pairings(Self::ALPHA1)[1]],
            [Self::coroot_pairings(Self::ALPHA2)[0], Self::coroot_pairings(Self::ALPHA2)[1]],
        ];
        if cartan != [[2, -2], [-1, 2]] {
            return Err(format!("unexpected Cartan matrix {cartan:?}"));
        }
        if Self::ALPHA1 + Self::ALPHA2 != Weight::X1
            || Self::ALPHA1 + 2 * Self::ALPHA2 != 2 * Weight::X2
        {
            return Err("x-definitions not inverted exactly".into());
        }
        for beta in Self::POSITIVE_ROOTS {
            for g in [W0Element::s(), W0Element::t()] {
                for mu in [Weight::X1, Weight::X2, beta] {
                    if Self::form(g.apply(mu), g.apply(beta)) != Self::form(mu, beta) {
                        return Err("form is not W0-invariant".into());
                    }
                }
            }
        }
        Ok(())
    }
}

/// `u(mu)` for `u` in the finite Weyl group.
pub fn w0_act(u: W0Element, mu: Weight) -> Weight {
    u.apply(mu)
}

pub fn orbit(mu: Weight) -> BTreeSet<Weight> {
    W0Element::all().iter().map(|u| u.apply(mu)).collect()
}

/// Dominant weights `mu <= lambda`, highest first.
fn dominant_weights_below(lambda: Weight) -> Vec<Weight> {
    let h = lambda.height4();
    let mut out = Vec::new();
    for a in 0..=h / 4 {
        for b in 0..=(h - 4 * a) / 3 {
            let mu = Weight::new(a, b);
            if RootData::dominates(lambda, mu) {
                out.push(mu);
            }
        }
    }
    out.sort_by_key(|mu| std::cmp::Reverse(mu.height4()));
    out
}

/// Multiplicities of the dominant weights of `V(lambda)` by Freudenthal's
/// recursion.
fn freudenthal_dominant(lambda: Weight) -> BTreeMap<Weight, u64> {
    let lr = lambda + RootData::RHO;
    let lr_norm = RootData::form(lr, lr);
    let lambda_norm = RootData::form(lambda, lambda);
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for mu in dominant_weights_below(lambda) {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut rhs: i64 = 0;
        for alpha in RootData::POSITIVE_ROOTS {
            for k in 1.. {
                let nu = mu + k * alpha;
                if RootData::form(nu, nu) > lambda_norm {
                    break;
                }
                let m = mult.get(&nu.dominant_representative()).copied().unwrap_or(0) as i64;
                rhs += 2 * RootData::form(nu, alpha) * m;
            }
        }
        let mr = mu + RootData::RHO;
        let denom = lr_norm - RootData::form(mr, mr);
        assert!(denom > 0 && rhs % denom == 0, "Freudenthal recursion is not integral at {mu}");
        let m = rhs / denom;
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    mult
}

/// The multiplicity `d_mu(lambda)` of the weight `mu` in `V(lambda)`.
pub fn weight_multiplicity(lambda: Weight, mu: Weight) -> Result<u64> {
    lambda.ensure_dominant()?;
    let dom = mu.dominant_representative();
    Ok(freudenthal_dominant(lambda).get(&dom).copied().unwrap_or(0))
}

/// The formal character of `V(lambda)` as weight -> multiplicity.
pub fn character(lambda: Weight) -> Result<BTreeMap<Weight, u64>> {
    lambda.ensure_dominant()?;
    let mut out = BTreeMap::new();
    for (mu, m) in freudenthal_dominant(lambda) {
        for nu in orbit(mu) {
            out.insert(nu, m);
        }
    }
    Ok(out)
}

/// Dimension of `V(lambda)` as the sum of its weight multiplicities.
pub fn dim(lambda: Weight) -> Result<u64> {
    Ok(character(lambda)?.values().sum())
}

/// Weyl's dimension formula, `prod <lambda+rho, beta^vee> / <rho, beta^vee>`.
pub fn weyl_dimension(lambda: Weight) -> Result<u64> {
    lambda.ensure_dominant()?;
    let num: i64 = RootData::coroot_pairings(lambda + RootData::RHO).iter().product();
    let den: i64 = RootData::coroot_pairings(RootData::RHO).iter().product();
    Ok((num / den) as u64)
}

/// Product of two formal characters.
pub fn character_product(
    x: &BTreeMap<Weight, u64>,
    y: &BTreeMap<Weight, u64>,
) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    for (&mu, &m) in x {
        for (&nu, &n) in y {
            *out.entry(mu + nu).or_insert(0) += m * n;
        }
    }
    out
}

/// Writes a `W0`-invariant character as a sum of irreducible characters by
/// repeatedly removing the character of the highest remaining dominant weight.
pub fn decompose_character(chr: &BTreeMap<Weight, i64>) -> Result<BTreeMap<Weight, i64>> {
    let mut rest: BTreeMap<Weight, i64> = chr.iter().filter(|(_, &m)| m != 0).map(|(&k, &v)| (k, v)).collect();
    let mut out = BTreeMap::new();
    while let Some(top) = rest
        .keys()
        .copied()
        .filter(|w| w.is_dominant())
        .max_by_key(|w| (w.height4(), *w))
    {
        let m = rest[&top];
        out.insert(top, m);
        for (nu, k) in character(top)? {
            let e = rest.entry(nu).or_insert(0);
            *e -= m * k as i64;
            if *e == 0 {
                rest.remove(&nu);
            }
        }
    }
    if !rest.is_empty() {
        return Err(Error::Mismatch {
            what: "character decomposition".into(),
            expected: "a W0-invariant character".into(),
            actual: format!("{} leftover weights", rest.len()),
        });
    }
    Ok(out)
}

/// Multiplicities `m_{lambda, lambda', z}` of `V(z)` in `V(lambda) (x) V(lambda')`.
pub fn tensor_decompose(lambda: Weight, lambda2: Weight) -> Result<BTreeMap<Weight, u64>> {
    let prod = character_product(&character(lambda)?, &character(lambda2)?);
    let signed: BTreeMap<Weight, i64> = prod.into_iter().map(|(w, m)| (w, m as i64)).collect();
    decompose_character(&signed)?
        .into_iter()
        .map(|(z, m)| {
            if m > 0 {
                Ok((z, m as u64))
            } else {
                Err(Error::Mismatch {
                    what: format!("tensor product {lambda} x {lambda2}"),
                    expected: "nonnegative multiplicities".into(),
                    actual: format!("{m} at {z}"),
                })
            }
        })
        .collect()
}

/// Writes `S_lambda` as an integer polynomial in `S_x1` and `S_x2`:
/// returns `(i, j) -> c` with `char(lambda) = sum c * char(x1)^i * char(x2)^j`.
pub fn fundamental_polynomial(lambda: Weight) -> Result<BTreeMap<(u32, u32), i64>> {
    lambda.ensure_dominant()?;
    let mut rest: BTreeMap<Weight, i64> = character(lambda)?.into_iter().map(|(w, m)| (w, m as i64)).collect();
    let mut poly = BTreeMap::new();
    let x1 = character(Weight::X1)?;
    let x2 = character(Weight::X2)?;
    while let Some(top) = rest
        .keys()
        .copied()
        .filter(|w| w.is_dominant())
        .max_by_key(|w| (w.height4(), *w))
    {
        let c = rest[&top];
        let (i, j) = (top.a as u32, top.b as u32);
        *poly.entry((i, j)).or_insert(0) += c;
        let mut monomial: BTreeMap<Weight, u64> = [(Weight::ZERO, 1)].into();
        for _ in 0..i {
            monomial = character_product(&monomial, &x1);
        }
        for _ in 0..j {
            monomial = character_product(&monomial, &x2);
        }
        for (nu, k) in monomial {
            let e = rest.entry(nu).or_insert(0);
            *e -= c * k as i64;
            if *e == 0 {
                rest.remove(&nu);
            }
        }
    }
    poly.retain(|_, c| *c != 0);
    Ok(poly)
}
