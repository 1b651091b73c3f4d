//! Brute-force oracles shared by the integration tests. None of them reuse
//! the library's length formula, Freudenthal recursion, Bruhat order, KL
//! recursion or cell classifier.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use affine_hecke::coxeter::{Generator, GroupElement, W0Element};
use affine_hecke::weights::Weight;

pub fn el(s: &str) -> GroupElement {
    s.parse().unwrap()
}

/// Word lengths by breadth-first search on the Cayley graph of `W` with the
/// generators `r, s, t` (cost 1) and `w` (cost 0).
pub fn bfs_lengths(max_len: usize) -> HashMap<GroupElement, usize> {
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(GroupElement::identity(), 0);
    queue.push_back(GroupElement::identity());
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        let xo = x.mul(&GroupElement::omega());
        if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(xo) {
            e.insert(d);
            queue.push_front(xo);
        }
        if d == max_len {
            continue;
        }
        for g in Generator::ALL {
            let y = x.mul_gen(g);
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(y) {
                e.insert(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

const POSITIVE_ROOTS: [(i64, i64); 4] = [(2, -2), (-1, 2), (1, 0), (0, 2)];

fn kostant(nu: (i64, i64), memo: &mut HashMap<((i64, i64), usize), u64>, from: usize) -> u64 {
    if nu == (0, 0) {
        return 1;
    }
    if 4 * nu.0 + 3 * nu.1 <= 0 || from == POSITIVE_ROOTS.len() {
        return 0;
    }
    if let Some(&v) = memo.get(&(nu, from)) {
        return v;
    }
    let (ra, rb) = POSITIVE_ROOTS[from];
    let mut total = 0;
    let mut rest = nu;
    loop {
        total += kostant(rest, memo, from + 1);
        rest = (rest.0 - ra, rest.1 - rb);
        if 4 * rest.0 + 3 * rest.1 < 0 {
            break;
        }
    }
    memo.insert((nu, from), total);
    total
}

fn sign(u: W0Element) -> i64 {
    let m = u.matrix();
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Character of `V(lambda)` by Kostant's multiplicity formula, an alternating
/// sum over `W0` of partition-function values.
pub fn brute_character(lambda: Weight) -> BTreeMap<Weight, u64> {
    let rho = Weight::new(1, 1);
    let lr = lambda + rho;
    let orbit: Vec<Weight> = W0Element::all().iter().map(|u| u.apply(lambda)).collect();
    let amax = orbit.iter().map(|w| w.a.abs()).max().unwrap();
    let bmax = orbit.iter().map(|w| w.b.abs()).max().unwrap();
    let mut memo = HashMap::new();
    let mut out = BTreeMap::new();
    for a in -amax..=amax {
        for b in -bmax..=bmax {
            let mu = Weight::new(a, b);
            let mr = mu + rho;
            let m: i64 = W0Element::all()
                .into_iter()
                .map(|u| {
                    let d = u.apply(lr) - mr;
                    sign(u) * kostant((d.a, d.b), &mut memo, 0) as i64
                })
                .sum();
            assert!(m >= 0);
            if m > 0 {
                out.insert(mu, m as u64);
            }
        }
    }
    out
}

/// `V(l1) (x) V(l2)` decomposed by peeling brute-force characters.
pub fn brute_tensor(l1: Weight, l2: Weight) -> BTreeMap<Weight, u64> {
    let c1 = brute_character(l1);
    let c2 = brute_character(l2);
    let mut rest: BTreeMap<Weight, i64> = BTreeMap::new();
    for (&x, &m) in &c1 {
        for (&y, &n) in &c2 {
            *rest.entry(x + y).or_default() += (m * n) as i64;
        }
    }
    let mut out = BTreeMap::new();
    loop {
        rest.retain(|_, m| *m != 0);
        let Some(top) = rest.keys().copied().filter(|w| w.a >= 0 && w.b >= 0).max_by_key(|w| (4 * w.a + 3 * w.b, *w))
        else {
            break;
        };
        let m = rest[&top];
        assert!(m > 0);
        out.insert(top, m as u64);
        for (x, k) in brute_character(top) {
            *rest.entry(x).or_default() -= m * k as i64;
        }
    }
    assert!(rest.is_empty());
    out
}

fn letter(g: Generator) -> char {
    g.letter()
}

fn gen_of(c: char) -> Generator {
    Generator::from_letter(c).unwrap()
}

/// All reduced words of the Coxeter part of `x`, closing one reduced word
/// under the braid relations `rsrs = srsr`, `stst = tsts`, `rt = tr`.
pub fn reduced_words(x: &GroupElement) -> BTreeSet<String> {
    let start: String = x.coxeter_part().word().into_iter().map(letter).collect();
    let moves: [(&str, &str); 6] =
        [("rsrs", "srsr"), ("srsr", "rsrs"), ("stst", "tsts"), ("tsts", "stst"), ("rt", "tr"), ("tr", "rt")];
    let mut seen = BTreeSet::new();
    let mut stack = vec![start];
    while let Some(w) = stack.pop() {
        if !seen.insert(w.clone()) {
            continue;
        }
        for (from, to) in moves {
            let mut i = 0;
            while let Some(pos) = w[i..].find(from) {
                let at = i + pos;
                let next = format!("{}{}{}", &w[..at], to, &w[at + from.len()..]);
                if !seen.contains(&next) {
                    stack.push(next);
                }
                i = at + 1;
            }
        }
    }
    seen
}

/// The a-value from reduced words alone: `4` if some reduced word contains
/// the longest element of `<r,s>` or `<s,t>`, `1` if the element has a single
/// reduced word, `0` for the identity, `2` otherwise.
pub fn a_value_oracle(x: &GroupElement) -> u32 {
    let words = reduced_words(x);
    if words.iter().any(|w| w.is_empty()) {
        return 0;
    }
    if words.iter().any(|w| ["rsrs", "srsr", "stst", "tsts"].iter().any(|p| w.contains(p))) {
        return 4;
    }
    if words.len() == 1 {
        1
    } else {
        2
    }
}

/// Products of all subwords of one reduced word of `w`: the Bruhat interval
/// below `w`.
pub fn subword_interval(w: &GroupElement) -> HashSet<GroupElement> {
    let word = w.coxeter_part().word();
    let mut set: HashSet<GroupElement> = [GroupElement::identity()].into();
    for g in word {
        let extended: Vec<_> = set.iter().map(|x| x.mul_gen(g)).collect();
        set.extend(extended);
    }
    if w.omega_exponent() == 1 {
        set = set.into_iter().map(|x| GroupElement::omega().mul(&x)).collect();
    }
    set
}

/// Polynomials in `q`, lowest degree first.
pub type QPoly = Vec<i64>;

fn trim(mut p: QPoly) -> QPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut QPoly, p: &QPoly, shift: usize, scale: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += scale * c;
    }
}

/// Kazhdan-Lusztig polynomials from the classical pair recursion
/// `P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_z mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}`,
/// for `w = sv > v`, with Bruhat order from subwords and lengths from BFS.
pub struct KlOracle {
    len: HashMap<GroupElement, usize>,
    intervals: HashMap<GroupElement, HashSet<GroupElement>>,
    memo: HashMap<(GroupElement, GroupElement), QPoly>,
}

impl KlOracle {
    pub fn new(max_len: usize) -> Self {
        Self { len: bfs_lengths(max_len), intervals: HashMap::new(), memo: HashMap::new() }
    }

    fn l(&self, x: &GroupElement) -> usize {
        self.len[x]
    }

    fn leq(&mut self, x: &GroupElement, w: &GroupElement) -> bool {
        self.intervals.entry(*w).or_insert_with(|| subword_interval(w)).contains(x)
    }

    pub fn mu(&mut self, z: &GroupElement, v: &GroupElement) -> i64 {
        let (lz, lv) = (self.l(z), self.l(v));
        if lz >= lv || (lv - lz) % 2 == 0 {
            return 0;
        }
        let p = self.p(z, v);
        p.get((lv - lz - 1) / 2).copied().unwrap_or(0)
    }

    pub fn p(&mut self, x: &GroupElement, w: &GroupElement) -> QPoly {
        if x == w {
            return vec![1];
        }
        if !self.leq(x, w) {
            return vec![];
        }
        if let Some(p) = self.memo.get(&(*x, *w)) {
            return p.clone();
        }
        let lw = self.l(w);
        let s = Generator::ALL
            .into_iter()
            .find(|&g| self.l(&w.gen_mul(g)) < lw)
            .expect("nonidentity has a left descent");
        let v = w.gen_mul(s);
        let sx = x.gen_mul(s);
        let c = usize::from(self.l(&sx) < self.l(x));
        let mut out = QPoly::new();
        add_shifted(&mut out, &self.p(&sx, &v), 1 - c, 1);
        add_shifted(&mut out, &self.p(x, &v), c, 1);
        let below: Vec<GroupElement> = self.intervals.entry(v).or_insert_with(|| subword_interval(&v)).iter().copied().collect();
        for z in below {
            if z == v || self.l(&z.gen_mul(s)) > self.l(&z) || !self.leq(x, &z) {
                continue;
            }
            let m = self.mu(&z, &v);
            if m != 0 {
                let px = self.p(x, &z);
                add_shifted(&mut out, &px, (lw - self.l(&z)) / 2, -m);
            }
        }
        let out = trim(out);
        self.memo.insert((*x, *w), out.clone());
        out
    }
}

/// `w` words of the form `g_1 ... g_k`, turned into letters.
pub fn word_of(letters: &str) -> Vec<Generator> {
    letters.chars().map(gen_of).collect()
}
