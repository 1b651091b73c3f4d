//! The ring `A (x) R_F` for `F = SL2(C) x Z/2`, on the basis `V(k) e^p`, and
//! the monomial ring `A (x) Z[Z xi] x {1, e}` that receives the Bernstein
//! elements.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hecke::format_combination;
use crate::laurent::LaurentPoly;
use crate::weights::Weight;

fn insert_add<K: Ord>(map: &mut BTreeMap<K, LaurentPoly>, key: K, c: LaurentPoly) {
    let e = map.entry(key).or_insert_with(LaurentPoly::zero);
    *e += &c;
}

fn prune<K: Ord + Copy>(map: &mut BTreeMap<K, LaurentPoly>) {
    map.retain(|_, c| !c.is_zero());
}

/// `sum c_{k,p} V(k) e^p`, keyed by `(k, p)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepRingElt {
    terms: BTreeMap<(u32, u8), LaurentPoly>,
}

impl RepRingElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::irrep(0, 0)
    }

    /// `V(k) e^p`.
    pub fn irrep(k: u32, p: u8) -> Self {
        Self::from_terms([((k, p % 2), LaurentPoly::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u8), LaurentPoly)>>(terms: I) -> Self {
        let mut out = BTreeMap::new();
        for ((k, p), c) in terms {
            insert_add(&mut out, (k, p % 2), c);
        }
        prune(&mut out);
        Self { terms: out }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u8), LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, k: u32, p: u8) -> LaurentPoly {
        self.terms.get(&(k, p)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &RepRingElt) -> RepRingElt {
        Self::from_terms(self.terms.iter().chain(&other.terms).map(|(&k, c)| (k, c.clone())))
    }

    pub fn scale(&self, c: &LaurentPoly) -> RepRingElt {
        Self::from_terms(self.terms.iter().map(|(&k, x)| (k, x * c)))
    }

    pub fn mul(&self, other: &RepRingElt) -> RepRingElt {
        rf_multiply(self, other)
    }
}

/// Clebsch-Gordan: `V(m) e^p * V(n) e^p' = sum_{i <= min(m, n)} V(m+n-2i) e^{p+p'}`.
pub fn rf_multiply(u: &RepRingElt, w: &RepRingElt) -> RepRingElt {
    let mut out = BTreeMap::new();
    for (&(m, p), c) in &u.terms {
        for (&(n, p2), d) in &w.terms {
            let cd = c * d;
            for i in 0..=m.min(n) {
                insert_add(&mut out, (m + n - 2 * i, (p + p2) % 2), cd.clone());
            }
        }
    }
    prune(&mut out);
    RepRingElt { terms: out }
}

impl fmt::Display for RepRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.terms.iter().map(|(&(k, p), c)| {
            let name = if p == 1 { format!("V({k})ε") } else { format!("V({k})") };
            (name, c)
        });
        f.write_str(&format_combination(names))
    }
}

#[derive(Serialize)]
struct KpEntry<'a> {
    k: u32,
    p: u8,
    coefficient: &'a LaurentPoly,
}

impl Serialize for RepRingElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&(k, p), coefficient) in &self.terms {
            seq.serialize_element(&KpEntry { k, p, coefficient })?;
        }
        seq.end()
    }
}

/// `sum c_{m,p} theta'_{m xi} e^p`, keyed by `(m, p)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialElt {
    terms: BTreeMap<(i64, u8), LaurentPoly>,
}

impl MonomialElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: i64, p: u8, c: LaurentPoly) -> Self {
        Self::from_terms([((m, p), c)])
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, u8), LaurentPoly)>>(terms: I) -> Self {
        let mut out = BTreeMap::new();
        for ((m, p), c) in terms {
            insert_add(&mut out, (m, p % 2), c);
        }
        prune(&mut out);
        Self { terms: out }
    }

    pub fn terms(&self) -> &BTreeMap<(i64, u8), LaurentPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &MonomialElt) -> MonomialElt {
        Self::from_terms(self.terms.iter().chain(&other.terms).map(|(&k, c)| (k, c.clone())))
    }

    pub fn scale(&self, c: &LaurentPoly) -> MonomialElt {
        Self::from_terms(self.terms.iter().map(|(&k, x)| (k, x * c)))
    }

    pub fn mul(&self, other: &MonomialElt) -> MonomialElt {
        let mut out = BTreeMap::new();
        for (&(m, p), c) in &self.terms {
            for (&(n, p2), d) in &other.terms {
                insert_add(&mut out, (m + n, (p + p2) % 2), c * d);
            }
        }
        prune(&mut out);
        MonomialElt { terms: out }
    }
}

impl fmt::Display for MonomialElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.terms.iter().map(|(&(m, p), c)| {
            let eps = if p == 1 { "ε" } else { "" };
            (format!("θ'({m}){eps}"), c)
        });
        f.write_str(&format_combination(names))
    }
}

/// `V(k) -> sum_{j=0}^{k} theta'_{(k-2j) xi}`, the `SL2` character.
pub fn irrep_to_monomial(u: &RepRingElt) -> MonomialElt {
    let mut out = BTreeMap::new();
    for (&(k, p), c) in &u.terms {
        for j in 0..=k as i64 {
            insert_add(&mut out, (k as i64 - 2 * j, p), c.clone());
        }
    }
    prune(&mut out);
    MonomialElt { terms: out }
}

/// Inverse of [`irrep_to_monomial`] on elements symmetric under `m -> -m`.
pub fn monomial_to_irrep(w: &MonomialElt) -> Result<RepRingElt> {
    let mut rest = w.terms.clone();
    let mut out = BTreeMap::new();
    for p in [0u8, 1] {
        while let Some((&(top, _), c)) = rest.iter().filter(|((_, q), _)| *q == p).max_by_key(|((m, _), _)| *m) {
            if top < 0 {
                return Err(Error::NotSymmetric);
            }
            let c = c.clone();
            for j in 0..=top {
                insert_add(&mut rest, (top - 2 * j, p), -&c);
            }
            prune(&mut rest);
            out.insert((top as u32, p), c);
        }
    }
    Ok(RepRingElt { terms: out })
}

/// `theta_{a x1 + b x2} -> (-1)^a q^{a/2} theta'_{(a+b) xi} e^b`.
pub fn phi_tilde_theta(x: Weight) -> MonomialElt {
    let sign = if x.a.rem_euclid(2) == 0 { 1 } else { -1 };
    let p = x.b.rem_euclid(2) as u8;
    MonomialElt::monomial(x.a + x.b, p, LaurentPoly::monomial(sign, x.a as i32))
}
