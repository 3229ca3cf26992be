//! Casimir eigenvalues, the Weyl dimension formula, and a brute-force
//! character/branching oracle for small rank.
//!
//! The oracle works in doubled integer coordinates (so half-integral spin
//! weights become integral) and computes dominant weight multiplicities with
//! the Freudenthal recursion, then expands Weyl orbits to get full characters.
//! Branching is done by restricting the full character along the torus map
//! and greedily peeling highest weights. It exists to verify the fast
//! interlacing/Laurent branching rules independently and is guarded against
//! large weight systems.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{doubled, rat, Integer, Rational};
use crate::weight::{
    canonical_form, check_weight, delta, inner, is_dominant, positive_roots, two_delta,
    GroupDescriptor, Series, Weight, WeightForm,
};

/// Default cap on the number of weights the oracle will enumerate.
pub const DEFAULT_ORACLE_LIMIT: usize = 1_000_000;

/// Reads the oracle guard, honoring the `SPINSPEC_ORACLE_LIMIT` override.
pub fn oracle_limit() -> usize {
    std::env::var("SPINSPEC_ORACLE_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
}

/// Freudenthal/Casimir eigenvalue `<lam + 2δ, lam>` of the Casimir operator
/// on the irreducible module of highest weight `lam`.
pub fn casimir_eigenvalue(lam: &Weight, g: &GroupDescriptor, f: &WeightForm) -> Result<Rational> {
    if !is_dominant(lam, g)? {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
            group: g.to_string(),
        });
    }
    let shifted = lam.add(&two_delta(g))?;
    inner(&shifted, lam, f)
}

/// Weyl dimension formula: `dim V_lam = prod_{a>0} <lam+δ, a> / <δ, a>`.
pub fn weyl_dimension(lam: &Weight, g: &GroupDescriptor) -> Result<Integer> {
    weyl_dimension_with_form(lam, g, &canonical_form(g))
}

/// Same, against an explicit Weyl-invariant form (the ratio is invariant
/// under global rescaling, which the tests exercise).
pub fn weyl_dimension_with_form(
    lam: &Weight,
    g: &GroupDescriptor,
    form: &WeightForm,
) -> Result<Integer> {
    if !is_dominant(lam, g)? {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
            group: g.to_string(),
        });
    }
    let d = delta(g);
    let shifted = lam.add(&d)?;
    let mut acc = rat(1);
    for root in positive_roots(g) {
        acc *= inner(&shifted, &root, form)? / inner(&d, &root, form)?;
    }
    if !acc.denom().is_one() || !acc.numer().is_positive() {
        return Err(Error::InvalidParameter(format!(
            "Weyl product for {lam} on {g} is not a positive integer: {acc}"
        )));
    }
    Ok(acc.to_integer())
}

/// Dominant weight multiplicities of an irreducible module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantCharacter {
    pub entries: BTreeMap<Weight, Integer>,
}

/// K-decomposition of a restricted module: (K-highest weight, multiplicity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub summands: BTreeMap<Weight, Integer>,
}

impl Decomposition {
    /// Σ m(μ)·dim(μ) for dimension bookkeeping, given a per-label dimension.
    pub fn total_dimension<F: Fn(&Weight) -> Result<Integer>>(&self, dim: F) -> Result<Integer> {
        let mut acc = BigInt::zero();
        for (mu, m) in &self.summands {
            acc += m * dim(mu)?;
        }
        Ok(acc)
    }
}

/// Supported restriction maps for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingKind {
    /// Spin(2m+1) ↓ Spin(2m): B_m down to D_m, identity on the torus.
    SpinOddToEven,
    /// Spin(2m) ↓ Spin(2m-1): D_m down to B_{m-1}, drop the last coordinate.
    SpinEvenToOdd,
    /// SU(n+1) ↓ S(U(n)×U(1)); K-labels emitted in the length-n paper
    /// convention (torus weight minus the U(1) charge).
    SuToUnU1,
    /// Sp(n+1) ↓ Sp(1)×Sp(n); coordinate 1 is the Sp(1) label.
    SpToSp1Sp,
}

// ----------------------------------------------------------------------
// oracle internals: doubled i64 coordinates
// ----------------------------------------------------------------------

/// Root data in doubled coordinates. The A series is handled in full
/// (rank+1)-coordinates here so the symmetric group acts by permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct OracleGroup {
    series: Series,
    /// Coordinate length (A: rank+1; B/C/D: rank).
    len: usize,
}

type Key = Vec<i64>;

impl OracleGroup {
    fn rank(&self) -> usize {
        match self.series {
            Series::A => self.len - 1,
            _ => self.len,
        }
    }

    /// Doubled simple roots.
    fn simple_roots(&self) -> Vec<Key> {
        let len = self.len;
        let r = self.rank();
        let mut roots = Vec::new();
        let mut chain = |count: usize| {
            for i in 0..count {
                let mut v = vec![0i64; len];
                v[i] = 2;
                v[i + 1] = -2;
                roots.push(v);
            }
        };
        match self.series {
            Series::A => chain(r),
            Series::B => {
                chain(r - 1);
                let mut v = vec![0i64; len];
                v[r - 1] = 2;
                roots.push(v);
            }
            Series::C => {
                chain(r - 1);
                let mut v = vec![0i64; len];
                v[r - 1] = 4;
                roots.push(v);
            }
            Series::D => {
                chain(r - 1);
                let mut v = vec![0i64; len];
                v[r - 2] = 2;
                v[r - 1] = 2;
                roots.push(v);
            }
        }
        roots
    }

    /// Doubled positive roots.
    fn positive_roots(&self) -> Vec<Key> {
        let len = self.len;
        let mut roots = Vec::new();
        match self.series {
            Series::A => {
                for i in 0..len {
                    for j in (i + 1)..len {
                        let mut v = vec![0i64; len];
                        v[i] = 2;
                        v[j] = -2;
                        roots.push(v);
                    }
                }
            }
            _ => {
                for i in 0..len {
                    for j in (i + 1)..len {
                        let mut p = vec![0i64; len];
                        p[i] = 2;
                        p[j] = 2;
                        roots.push(p);
                        let mut m = vec![0i64; len];
                        m[i] = 2;
                        m[j] = -2;
                        roots.push(m);
                    }
                }
                match self.series {
                    Series::B => (0..len).for_each(|i| {
                        let mut v = vec![0i64; len];
                        v[i] = 2;
                        roots.push(v);
                    }),
                    Series::C => (0..len).for_each(|i| {
                        let mut v = vec![0i64; len];
                        v[i] = 4;
                        roots.push(v);
                    }),
                    _ => {}
                }
            }
        }
        roots
    }

    /// δ in doubled coordinates (= sum of positive roots / 2, i.e. the plain
    /// 2δ vector, which is integral for every series).
    fn delta_doubled(&self) -> Key {
        let mut d = vec![0i64; self.len];
        for root in self.positive_roots() {
            for (a, b) in d.iter_mut().zip(&root) {
                *a += b / 2;
            }
        }
        d
    }

    fn is_dominant(&self, w: &[i64]) -> bool {
        let len = self.len;
        for i in 0..len - 1 {
            if w[i] < w[i + 1] {
                return false;
            }
        }
        match self.series {
            Series::A => true,
            Series::D => len >= 2 && w[len - 2] >= w[len - 1].abs(),
            _ => w[len - 1] >= 0,
        }
    }

    /// Dominant Weyl-chamber representative of an arbitrary weight.
    fn dominant_rep(&self, w: &[i64]) -> Key {
        let mut v = w.to_vec();
        match self.series {
            Series::A => {
                v.sort_unstable_by(|a, b| b.cmp(a));
            }
            Series::B | Series::C => {
                for x in v.iter_mut() {
                    *x = x.abs();
                }
                v.sort_unstable_by(|a, b| b.cmp(a));
            }
            Series::D => {
                let negatives = v.iter().filter(|x| x.is_negative()).count();
                for x in v.iter_mut() {
                    *x = x.abs();
                }
                v.sort_unstable_by(|a, b| b.cmp(a));
                let n = v.len();
                if negatives % 2 == 1 && v[n - 1] != 0 {
                    v[n - 1] = -v[n - 1];
                }
            }
        }
        v
    }

    /// Coefficients of `v` in the simple-root basis; `None` unless all are
    /// nonnegative integers (v in doubled coordinates).
    fn root_coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        let len = self.len;
        let mut s = Vec::with_capacity(len);
        let mut acc = 0i64;
        for &x in v {
            acc += x;
            s.push(acc);
        }
        let ok = |x: i64, div: i64| (x >= 0 && x % div == 0).then_some(x / div);
        let mut c = Vec::new();
        match self.series {
            Series::A => {
                if s[len - 1] != 0 {
                    return None;
                }
                for &si in &s[..len - 1] {
                    c.push(ok(si, 2)?);
                }
            }
            Series::B => {
                for &si in &s {
                    c.push(ok(si, 2)?);
                }
            }
            Series::C => {
                for &si in &s[..len - 1] {
                    c.push(ok(si, 2)?);
                }
                c.push(ok(s[len - 1], 4)?);
            }
            Series::D => {
                for &si in &s[..len - 2] {
                    c.push(ok(si, 2)?);
                }
                // c_{r-1} = (s_{r-1} - v_r)/2, c_r = (s_{r-1} + v_r)/2
                let sr1 = s[len - 2];
                let vr = v[len - 1];
                c.push(ok(sr1 - vr, 4)?);
                c.push(ok(sr1 + vr, 4)?);
            }
        }
        Some(c)
    }

    fn dot(&self, u: &[i64], v: &[i64]) -> i64 {
        u.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    /// Weyl orbit of a weight, by closing under simple reflections.
    fn orbit(&self, w: &[i64], limit: usize) -> Result<Vec<Key>> {
        let mut seen: HashSet<Key> = HashSet::new();
        let mut queue: VecDeque<Key> = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        let len = self.len;
        while let Some(v) = queue.pop_front() {
            let push = |img: Key, seen: &mut HashSet<Key>, queue: &mut VecDeque<Key>| {
                if !seen.contains(&img) {
                    seen.insert(img.clone());
                    queue.push_back(img);
                }
            };
            for i in 0..len - 1 {
                let mut img = v.clone();
                img.swap(i, i + 1);
                push(img, &mut seen, &mut queue);
            }
            match self.series {
                Series::A => {}
                Series::B | Series::C => {
                    let mut img = v.clone();
                    img[len - 1] = -img[len - 1];
                    push(img, &mut seen, &mut queue);
                }
                Series::D => {
                    let mut img = v.clone();
                    img.swap(len - 2, len - 1);
                    img[len - 2] = -img[len - 2];
                    img[len - 1] = -img[len - 1];
                    push(img, &mut seen, &mut queue);
                }
            }
            if seen.len() > limit {
                return Err(Error::ResourceGuard { limit });
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Full weight system of V_lam (no multiplicities), BFS downward from the
    /// highest weight by simple-root subtraction with the saturation test.
    fn weight_system(&self, lam: &[i64], limit: usize) -> Result<Vec<Key>> {
        let simple = self.simple_roots();
        let mut seen: HashSet<Key> = HashSet::new();
        let mut queue: VecDeque<Key> = VecDeque::new();
        seen.insert(lam.to_vec());
        queue.push_back(lam.to_vec());
        while let Some(v) = queue.pop_front() {
            for a in &simple {
                let child: Key = v.iter().zip(a).map(|(x, y)| x - y).collect();
                if seen.contains(&child) {
                    continue;
                }
                let rep = self.dominant_rep(&child);
                let diff: Key = lam.iter().zip(&rep).map(|(x, y)| x - y).collect();
                if self.root_coords(&diff).is_some() {
                    seen.insert(child.clone());
                    queue.push_back(child);
                    if seen.len() > limit {
                        return Err(Error::ResourceGuard { limit });
                    }
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Dominant weight multiplicities via the Freudenthal recursion.
    fn dominant_multiplicities(&self, lam: &[i64], limit: usize) -> Result<BTreeMap<Key, Integer>> {
        let system = self.weight_system(lam, limit)?;
        let mut dominants: Vec<Key> = system
            .iter()
            .filter(|w| self.is_dominant(w))
            .cloned()
            .collect();
        // Height of lam - mu, ascending: multiplicities of higher weights are
        // available when a lower one is processed.
        let height = |mu: &Key| -> i64 {
            let diff: Key = lam.iter().zip(mu).map(|(x, y)| x - y).collect();
            self.root_coords(&diff)
                .expect("dominant weight below highest weight")
                .iter()
                .sum()
        };
        dominants.sort_by_key(|mu| (height(mu), mu.clone()));

        let delta = self.delta_doubled();
        let pos = self.positive_roots();
        let shifted_norm = |mu: &Key| -> i64 {
            let s: Key = mu.iter().zip(&delta).map(|(x, d)| x + d).collect();
            self.dot(&s, &s)
        };
        let top = shifted_norm(&lam.to_vec());

        let mut mult: BTreeMap<Key, Integer> = BTreeMap::new();
        for mu in dominants {
            if mu == lam {
                mult.insert(mu, BigInt::one());
                continue;
            }
            let mut num = BigInt::zero();
            for a in &pos {
                let mut k = 1i64;
                loop {
                    let up: Key = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                    let rep = self.dominant_rep(&up);
                    let Some(m) = mult.get(&rep) else { break };
                    num += m * BigInt::from(self.dot(&up, a));
                    k += 1;
                }
            }
            num *= BigInt::from(2);
            let den = BigInt::from(top - shifted_norm(&mu));
            debug_assert!(den.is_positive());
            let (q, r) = num_integer::Integer::div_rem(&num, &den);
            debug_assert!(r.is_zero(), "Freudenthal division must be exact");
            let _ = r;
            mult.insert(mu, q);
        }
        Ok(mult)
    }

    /// Full character: weight -> multiplicity.
    fn character(&self, lam: &[i64], limit: usize) -> Result<HashMap<Key, Integer>> {
        let dominant = self.dominant_multiplicities(lam, limit)?;
        let mut chi: HashMap<Key, Integer> = HashMap::new();
        let mut total = 0usize;
        for (mu, m) in &dominant {
            for w in self.orbit(mu, limit)? {
                total += 1;
                if total > limit {
                    return Err(Error::ResourceGuard { limit });
                }
                chi.insert(w, m.clone());
            }
        }
        Ok(chi)
    }
}

fn to_doubled(w: &Weight) -> Result<Key> {
    w.coords()
        .iter()
        .map(|c| {
            let d = doubled(c)?;
            i64::try_from(&d).map_err(|_| {
                Error::InvalidParameter(format!("coordinate {c} too large for the oracle"))
            })
        })
        .collect()
}

fn from_doubled(v: &[i64]) -> Weight {
    Weight::new(v.iter().map(|&x| crate::rational::half(x)).collect())
}

fn oracle_group(g: &GroupDescriptor) -> OracleGroup {
    match g.series {
        Series::A => OracleGroup {
            series: Series::A,
            len: g.rank + 1,
        },
        s => OracleGroup {
            series: s,
            len: g.rank,
        },
    }
}

/// Lifts a weight into oracle coordinates (A: append the implicit 0).
fn oracle_weight(w: &Weight, g: &GroupDescriptor) -> Result<Key> {
    let mut v = to_doubled(w)?;
    if g.series == Series::A {
        v.push(0);
    }
    Ok(v)
}

/// Dominant weight multiplicities of `V_lam` (public oracle entry point).
pub fn dominant_character(lam: &Weight, g: &GroupDescriptor) -> Result<DominantCharacter> {
    dominant_character_guarded(lam, g, oracle_limit())
}

pub fn dominant_character_guarded(
    lam: &Weight,
    g: &GroupDescriptor,
    limit: usize,
) -> Result<DominantCharacter> {
    if !is_dominant(lam, g)? {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
            group: g.to_string(),
        });
    }
    let og = oracle_group(g);
    let lam_d = oracle_weight(lam, g)?;
    let mults = og.dominant_multiplicities(&lam_d, limit)?;
    let mut entries = BTreeMap::new();
    for (mu, m) in mults {
        let w = if g.series == Series::A {
            // back to normalized coordinates
            let last = mu[g.rank];
            from_doubled(&mu[..g.rank].iter().map(|x| x - last).collect::<Vec<_>>())
        } else {
            from_doubled(&mu)
        };
        entries.insert(w, m);
    }
    Ok(DominantCharacter { entries })
}

/// Weyl-orbit size of a dominant weight (oracle-backed).
pub fn orbit_size(mu: &Weight, g: &GroupDescriptor) -> Result<usize> {
    let og = oracle_group(g);
    let v = oracle_weight(mu, g)?;
    Ok(og.orbit(&v, oracle_limit())?.len())
}

// ----------------------------------------------------------------------
// branching by character restriction
// ----------------------------------------------------------------------

/// Restricts `V_lam` along the given embedding by torus-character
/// bookkeeping and greedy highest-weight peeling. Labels come back as:
/// Spin: plain K-weights; SU: the length-n paper convention; Sp: length n+1
/// with coordinate 1 the Sp(1) label.
pub fn branch_by_restriction(
    lam: &Weight,
    g: &GroupDescriptor,
    embedding: EmbeddingKind,
) -> Result<Decomposition> {
    branch_by_restriction_guarded(lam, g, embedding, oracle_limit())
}

pub fn branch_by_restriction_guarded(
    lam: &Weight,
    g: &GroupDescriptor,
    embedding: EmbeddingKind,
    limit: usize,
) -> Result<Decomposition> {
    check_weight(lam, g)?;
    if !is_dominant(lam, g)? {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
            group: g.to_string(),
        });
    }
    let og = oracle_group(g);
    match (embedding, g.series) {
        (EmbeddingKind::SpinOddToEven, Series::B) if g.rank >= 2 => {}
        (EmbeddingKind::SpinEvenToOdd, Series::D) => {}
        (EmbeddingKind::SuToUnU1, Series::A) => {}
        (EmbeddingKind::SpToSp1Sp, Series::C) if g.rank >= 2 => {}
        _ => {
            return Err(Error::UnsupportedEmbedding(format!(
                "{embedding:?} does not apply to {g}"
            )))
        }
    }

    let lam_d = oracle_weight(lam, g)?;
    let chi = og.character(&lam_d, limit)?;

    // Restricted character on the K-torus.
    let mut rest: BTreeMap<Key, Integer> = BTreeMap::new();
    for (w, m) in chi {
        let key: Key = match embedding {
            EmbeddingKind::SpinEvenToOdd => w[..w.len() - 1].to_vec(),
            _ => w,
        };
        *rest.entry(key).or_insert_with(BigInt::zero) += m;
    }
    rest.retain(|_, m| !m.is_zero());

    // K-character generator per embedding.
    let mut cache: HashMap<Key, HashMap<Key, Integer>> = HashMap::new();
    let k_char = |hw: &Key, cache: &mut HashMap<Key, HashMap<Key, Integer>>| -> Result<HashMap<Key, Integer>> {
        if let Some(c) = cache.get(hw) {
            return Ok(c.clone());
        }
        let chi = match embedding {
            EmbeddingKind::SpinOddToEven => OracleGroup {
                series: Series::D,
                len: og.len,
            }
            .character(hw, limit)?,
            EmbeddingKind::SpinEvenToOdd => OracleGroup {
                series: Series::B,
                len: og.len - 1,
            }
            .character(hw, limit)?,
            EmbeddingKind::SuToUnU1 => {
                // U(n) on the first n coordinates, U(1) fixed on the last.
                let n = og.len - 1;
                let shift = hw[n - 1];
                let shifted: Key = hw[..n].iter().map(|x| x - shift).collect();
                let inner_chi = OracleGroup {
                    series: Series::A,
                    len: n,
                }
                .character(&shifted, limit)?;
                let mut out = HashMap::new();
                for (w, m) in inner_chi {
                    let mut full: Key = w.iter().map(|x| x + shift).collect();
                    full.push(hw[n]);
                    out.insert(full, m);
                }
                out
            }
            EmbeddingKind::SpToSp1Sp => {
                let sp_n = OracleGroup {
                    series: Series::C,
                    len: og.len - 1,
                }
                .character(&hw[1..], limit)?;
                let mut out = HashMap::new();
                let a = hw[0];
                let mut t = a;
                while t >= -a {
                    for (w, m) in &sp_n {
                        let mut full = vec![t];
                        full.extend_from_slice(w);
                        out.insert(full, m.clone());
                    }
                    t -= 4; // doubled coordinates: the Sp(1) string steps by 2
                }
                out
            }
        };
        cache.insert(hw.clone(), chi.clone());
        Ok(chi)
    };

    let mut summands: BTreeMap<Key, Integer> = BTreeMap::new();
    while let Some((hw, mult)) = rest.iter().max_by(|a, b| a.0.cmp(b.0)).map(|(k, v)| (k.clone(), v.clone())) {
        if !mult.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "negative coefficient while peeling {lam} on {g}"
            )));
        }
        let chi = k_char(&hw, &mut cache)?;
        for (w, m) in &chi {
            let entry = rest.entry(w.clone()).or_insert_with(BigInt::zero);
            *entry -= &mult * m;
            if entry.is_negative() {
                return Err(Error::InvalidParameter(format!(
                    "inconsistent restriction of {lam} on {g}"
                )));
            }
        }
        rest.retain(|_, m| !m.is_zero());
        summands.insert(hw, mult);
    }

    // Convert labels back to exact-rational weights.
    let mut out = BTreeMap::new();
    for (hw, m) in summands {
        let w = match embedding {
            EmbeddingKind::SuToUnU1 => {
                let n = og.len - 1;
                let charge = hw[n];
                from_doubled(&hw[..n].iter().map(|x| x - charge).collect::<Vec<_>>())
            }
            _ => from_doubled(&hw),
        };
        out.insert(w, m);
    }
    Ok(Decomposition { summands: out })
}
