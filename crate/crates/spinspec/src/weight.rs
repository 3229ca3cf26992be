//! Weight-lattice arithmetic for the classical series A/B/C/D.
//!
//! Weights are exact-rational coordinate vectors in the standard dual basis
//! `e_i`. A-series weights are carried in the normalized form with an
//! implicit last coordinate 0, so an `A_r` weight has length `r` and
//! represents an `SU(r+1)` highest weight with nonnegative entries.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// A classical group: series letter plus rank, e.g. `D4` for Spin(8).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupDescriptor {
    pub series: Series,
    pub rank: usize,
}

impl GroupDescriptor {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if rank < 1 {
            return Err(Error::InvalidParameter("rank must be >= 1".into()));
        }
        if series == Series::D && rank < 2 {
            return Err(Error::InvalidParameter("D series requires rank >= 2".into()));
        }
        Ok(Self { series, rank })
    }

    /// Parses "D4", "A3", "b2".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next() {
            Some('A') | Some('a') => Series::A,
            Some('B') | Some('b') => Series::B,
            Some('C') | Some('c') => Series::C,
            Some('D') | Some('d') => Series::D,
            _ => return Err(Error::Parse(format!("bad group descriptor {s:?}"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        GroupDescriptor::new(series, rank)
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// Exact-rational weight vector in the standard dual basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(len: usize) -> Self {
        Self::new(vec![Rational::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn scale(&self, s: &Rational) -> Weight {
        Weight::new(self.coords.iter().map(|c| c * s).collect())
    }

    /// Parses a comma-separated weight string like "3/2,1/2,1/2,1/2".
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        Ok(Self::new(coords))
    }

    /// All coordinates in Z, or all in Z+1/2.
    pub fn integrality_class(&self) -> Option<IntegralityClass> {
        let mut class = None;
        for c in &self.coords {
            let this = if c.denom() == &num_bigint::BigInt::from(1) {
                IntegralityClass::Integral
            } else if c.denom() == &num_bigint::BigInt::from(2) {
                IntegralityClass::HalfIntegral
            } else {
                return None;
            };
            match class {
                None => class = Some(this),
                Some(prev) if prev != this => return None,
                _ => {}
            }
        }
        class
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralityClass {
    Integral,
    HalfIntegral,
}

/// Checks rank and coordinate class of a weight against a group.
pub fn check_weight(w: &Weight, g: &GroupDescriptor) -> Result<()> {
    if w.len() != g.rank {
        return Err(Error::DimensionMismatch {
            expected: g.rank,
            got: w.len(),
        });
    }
    let class = w.integrality_class();
    match (g.series, class) {
        (Series::A | Series::C, Some(IntegralityClass::Integral)) => Ok(()),
        (Series::B | Series::D, Some(_)) => Ok(()),
        _ => Err(Error::InvalidParameter(format!(
            "weight {w} has coordinates outside the lattice of {g}"
        ))),
    }
}

/// Dominance chain for the series: A/B/C weakly decreasing with last >= 0,
/// D weakly decreasing down to |last|.
pub fn is_dominant(w: &Weight, g: &GroupDescriptor) -> Result<bool> {
    check_weight(w, g)?;
    let c = w.coords();
    let r = g.rank;
    for i in 0..r.saturating_sub(1) {
        if c[i] < c[i + 1] {
            return Ok(false);
        }
    }
    match g.series {
        Series::A | Series::B | Series::C => Ok(!c[r - 1].is_negative()),
        Series::D => {
            if r >= 2 {
                Ok(c[r - 2] >= c[r - 1].abs())
            } else {
                Ok(true)
            }
        }
    }
}

/// The vector 2δ (sum of the positive roots) in `e_i` coordinates.
///
/// Concretely: A_r (normalized) -> (2r, 2(r-1), ..., 2);
/// B_r -> (2r-1, 2r-3, ..., 1); C_r -> (2r, 2r-2, ..., 2);
/// D_r -> (2r-2, 2r-4, ..., 0).
pub fn two_delta(g: &GroupDescriptor) -> Weight {
    let r = g.rank as i64;
    let coords: Vec<Rational> = match g.series {
        Series::A | Series::C => (0..r).map(|i| rat(2 * (r - i))).collect(),
        Series::B => (0..r).map(|i| rat(2 * (r - i) - 1)).collect(),
        Series::D => (0..r).map(|i| rat(2 * (r - i) - 2)).collect(),
    };
    Weight::new(coords)
}

/// δ = half the sum of the positive roots.
pub fn delta(g: &GroupDescriptor) -> Weight {
    two_delta(g).scale(&crate::rational::ratio(1, 2))
}

/// Rational Gram matrix realizing a Weyl-invariant inner product on weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightForm {
    gram: Vec<Vec<Rational>>,
}

impl WeightForm {
    pub fn new(gram: Vec<Vec<Rational>>) -> Result<Self> {
        let n = gram.len();
        for row in &gram {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidParameter("gram matrix not symmetric".into()));
                }
            }
        }
        Ok(Self { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    /// Identity Gram of given size (the `<e_i, e_j> = δ_ij` normalization).
    pub fn identity(n: usize) -> Self {
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { rat(1) } else { rat(0) })
                    .collect()
            })
            .collect();
        Self { gram }
    }

    /// Scalar multiple `s * I`.
    pub fn scaled_identity(n: usize, s: Rational) -> Self {
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { s.clone() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Self { gram }
    }

    /// The SU(r+1) form on normalized length-r coordinates:
    /// `<e_i, e_j> = ((r+1)δ_ij - 1)/(r+1)`, which encodes the trace-zero
    /// projection of the standard form.
    pub fn su_normalized(r: usize) -> Self {
        let np1 = rat(r as i64 + 1);
        let gram = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let d = if i == j { np1.clone() } else { Rational::zero() };
                        (d - rat(1)) / np1.clone()
                    })
                    .collect()
            })
            .collect();
        Self { gram }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(|x| x * s).collect())
                .collect(),
        }
    }
}

/// Exact bilinear form `u^T G v`.
pub fn inner(u: &Weight, v: &Weight, f: &WeightForm) -> Result<Rational> {
    if u.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: u.len(),
        });
    }
    if v.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: v.len(),
        });
    }
    let mut acc = Rational::zero();
    for (i, ui) in u.coords().iter().enumerate() {
        for (j, vj) in v.coords().iter().enumerate() {
            acc += ui * &f.gram[i][j] * vj;
        }
    }
    Ok(acc)
}

/// Positive roots of the series in `e_i` coordinates.
///
/// For the A series the roots are given in the same normalized length-r
/// coordinates as the weights (last full coordinate subtracted off), so
/// `e_i - e_{r+1}` appears as the vector with 2 in slot i and 1 elsewhere.
pub fn positive_roots(g: &GroupDescriptor) -> Vec<Weight> {
    let r = g.rank;
    let mut roots = Vec::new();
    let e = |i: usize, s: i64| -> Vec<i64> {
        let mut v = vec![0i64; r];
        v[i] = s;
        v
    };
    match g.series {
        Series::A => {
            for i in 0..r {
                for j in (i + 1)..r {
                    let mut v = vec![0i64; r];
                    v[i] = 1;
                    v[j] = -1;
                    roots.push(Weight::from_i64(&v));
                }
                // e_i - e_{r+1}, normalized
                let mut v = vec![1i64; r];
                v[i] = 2;
                roots.push(Weight::from_i64(&v));
            }
        }
        Series::B | Series::C | Series::D => {
            for i in 0..r {
                for j in (i + 1)..r {
                    let mut p = vec![0i64; r];
                    p[i] = 1;
                    p[j] = 1;
                    roots.push(Weight::from_i64(&p));
                    let mut m = vec![0i64; r];
                    m[i] = 1;
                    m[j] = -1;
                    roots.push(Weight::from_i64(&m));
                }
            }
            match g.series {
                Series::B => (0..r).for_each(|i| roots.push(Weight::from_i64(&e(i, 1)))),
                Series::C => (0..r).for_each(|i| roots.push(Weight::from_i64(&e(i, 2)))),
                Series::D => {}
                Series::A => unreachable!(),
            }
        }
    }
    roots
}

/// Canonical Weyl-invariant form for a series, used where only the
/// normalization-independent ratio matters (Weyl dimension formula).
pub fn canonical_form(g: &GroupDescriptor) -> WeightForm {
    match g.series {
        Series::A => WeightForm::su_normalized(g.rank),
        _ => WeightForm::identity(g.rank),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{half, ratio};

    fn w(coords: &[Rational]) -> Weight {
        Weight::new(coords.to_vec())
    }

    #[test]
    fn dominance_examples() {
        let d4 = GroupDescriptor::new(Series::D, 4).unwrap();
        let b2 = GroupDescriptor::new(Series::B, 2).unwrap();
        let d3 = GroupDescriptor::new(Series::D, 3).unwrap();
        assert!(is_dominant(&w(&[half(3), half(1), half(1), half(1)]), &d4).unwrap());
        assert!(!is_dominant(&w(&[half(1), half(3)]), &b2).unwrap());
        assert!(is_dominant(&w(&[half(3), half(1), half(-1)]), &d3).unwrap());
        // rank mismatch
        assert!(is_dominant(&w(&[half(1)]), &b2).is_err());
        // mixed integrality class rejected
        assert!(is_dominant(&w(&[rat(1), half(1)]), &b2).is_err());
    }

    #[test]
    fn two_delta_examples() {
        // Spin(8) = D4 (sphere n = 7)
        let d4 = GroupDescriptor::new(Series::D, 4).unwrap();
        assert_eq!(two_delta(&d4), Weight::from_i64(&[6, 4, 2, 0]));
        // SU(4) = A3 (CP^3)
        let a3 = GroupDescriptor::new(Series::A, 3).unwrap();
        assert_eq!(two_delta(&a3), Weight::from_i64(&[6, 4, 2]));
        // Sp(3) = C3 (HP^2)
        let c3 = GroupDescriptor::new(Series::C, 3).unwrap();
        assert_eq!(two_delta(&c3), Weight::from_i64(&[6, 4, 2]));
        // Spin(5) = B2
        let b2 = GroupDescriptor::new(Series::B, 2).unwrap();
        assert_eq!(two_delta(&b2), Weight::from_i64(&[3, 1]));
    }

    #[test]
    fn inner_examples() {
        let sphere = WeightForm::identity(4);
        let e1 = Weight::from_i64(&[1, 0, 0, 0]);
        let e2 = Weight::from_i64(&[0, 1, 0, 0]);
        assert_eq!(inner(&e1, &e2, &sphere).unwrap(), rat(0));
        assert_eq!(inner(&e1, &e1, &sphere).unwrap(), rat(1));

        let cp3 = WeightForm::su_normalized(3);
        let e1 = Weight::from_i64(&[1, 0, 0]);
        let e2 = Weight::from_i64(&[0, 1, 0]);
        assert_eq!(inner(&e1, &e1, &cp3).unwrap(), ratio(3, 4));
        assert_eq!(inner(&e1, &e2, &cp3).unwrap(), ratio(-1, 4));

        let hp2 = WeightForm::scaled_identity(3, ratio(1, 16));
        let e1 = Weight::from_i64(&[1, 0, 0]);
        assert_eq!(inner(&e1, &e1, &hp2).unwrap(), ratio(1, 16));

        assert!(inner(&e1, &Weight::from_i64(&[1, 0]), &hp2).is_err());
    }

    #[test]
    fn positive_root_counts() {
        let a1 = GroupDescriptor::new(Series::A, 1).unwrap();
        assert_eq!(positive_roots(&a1).len(), 1);
        assert_eq!(positive_roots(&a1)[0], Weight::from_i64(&[2]));
        let b2 = GroupDescriptor::new(Series::B, 2).unwrap();
        assert_eq!(positive_roots(&b2).len(), 4);
        let d4 = GroupDescriptor::new(Series::D, 4).unwrap();
        assert_eq!(positive_roots(&d4).len(), 12);
        let c3 = GroupDescriptor::new(Series::C, 3).unwrap();
        assert_eq!(positive_roots(&c3).len(), 9);
    }

    #[test]
    fn two_delta_is_root_sum_and_dominant() {
        for g in [
            GroupDescriptor::new(Series::A, 1).unwrap(),
            GroupDescriptor::new(Series::A, 3).unwrap(),
            GroupDescriptor::new(Series::B, 2).unwrap(),
            GroupDescriptor::new(Series::B, 4).unwrap(),
            GroupDescriptor::new(Series::C, 3).unwrap(),
            GroupDescriptor::new(Series::C, 5).unwrap(),
            GroupDescriptor::new(Series::D, 2).unwrap(),
            GroupDescriptor::new(Series::D, 4).unwrap(),
            GroupDescriptor::new(Series::D, 6).unwrap(),
        ] {
            let mut sum = Weight::zero(g.rank);
            for root in positive_roots(&g) {
                sum = sum.add(&root).unwrap();
            }
            assert_eq!(sum, two_delta(&g), "root sum mismatch for {g}");
            assert!(is_dominant(&two_delta(&g), &g).unwrap());
        }
    }

    #[test]
    fn inner_symmetric_and_positive() {
        let f = WeightForm::su_normalized(3);
        let u = Weight::from_i64(&[3, 1, 0]);
        let v = Weight::from_i64(&[1, 1, 1]);
        assert_eq!(inner(&u, &v, &f).unwrap(), inner(&v, &u, &f).unwrap());
        assert!(inner(&u, &u, &f).unwrap() > rat(0));
        assert!(inner(&v, &v, &f).unwrap() > rat(0));
    }

    #[test]
    fn parse_round_trip() {
        let w = Weight::parse("3/2,1/2,1/2,1/2").unwrap();
        assert_eq!(w.to_string(), "3/2,1/2,1/2,1/2");
        let g = GroupDescriptor::parse("D4").unwrap();
        assert_eq!(g.to_string(), "D4");
        assert!(GroupDescriptor::parse("E8").is_err());
        assert!(GroupDescriptor::parse("D1").is_err());
    }
}
