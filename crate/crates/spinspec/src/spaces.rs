//! The three symmetric-space models: groups, invariant forms, curvature
//! constants, eigenvalue-family labels for each spectral sector, and the
//! closed-form / Casimir-based eigenvalue maps.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::{half, rat, ratio, Integer, Rational};
use crate::rep::{casimir_eigenvalue, weyl_dimension};
use crate::weight::{is_dominant, GroupDescriptor, Series, Weight, WeightForm};

/// Which homogeneous space is being modelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SpaceKind {
    Sphere,
    ComplexProjective,
    QuaternionicProjective,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::Sphere => write!(f, "sphere"),
            SpaceKind::ComplexProjective => write!(f, "cpn"),
            SpaceKind::QuaternionicProjective => write!(f, "hpn"),
        }
    }
}

/// Spectral sector of the squared operator being enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sector {
    ImP,
    KerPStar,
    FullSpinor,
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sector::ImP => write!(f, "im-p"),
            Sector::KerPStar => write!(f, "ker-pstar"),
            Sector::FullSpinor => write!(f, "dirac"),
        }
    }
}

/// A fully populated space model. Immutable; all operations on it are pure.
#[derive(Debug, Clone)]
pub struct SpaceModel {
    pub kind: SpaceKind,
    /// The space parameter: S^n, CP^n, HP^n.
    pub n: usize,
    /// Real dimension N: n, 2n, 4n respectively.
    pub real_dim: usize,
    pub group: GroupDescriptor,
    pub form: WeightForm,
    /// scal/8 in the normalization where D² = Casimir + scal/8.
    pub scal_eighth: Rational,
    /// Spheres with n ∈ {3, 4}: some family blocks degenerate to empty strings.
    pub reduced_rank: bool,
}

/// Builds a model, enforcing the parameter constraints of each space.
pub fn make_space(kind: SpaceKind, n: usize) -> Result<SpaceModel> {
    match kind {
        SpaceKind::Sphere => {
            if n < 3 {
                return Err(Error::InvalidParameter(
                    "sphere requires n >= 3".to_string(),
                ));
            }
            let group = if n % 2 == 1 {
                GroupDescriptor::new(Series::D, (n + 1) / 2)?
            } else {
                GroupDescriptor::new(Series::B, n / 2)?
            };
            Ok(SpaceModel {
                kind,
                n,
                real_dim: n,
                group,
                form: WeightForm::identity(group.rank),
                scal_eighth: ratio((n * (n - 1)) as i64, 8),
                reduced_rank: n <= 4,
            })
        }
        SpaceKind::ComplexProjective => {
            if n % 2 == 0 {
                return Err(Error::InvalidParameter(format!(
                    "CP^{n} has no spin structure (n must be odd)"
                )));
            }
            if n < 3 {
                return Err(Error::InvalidParameter(
                    "CP^n requires odd n >= 3".to_string(),
                ));
            }
            let group = GroupDescriptor::new(Series::A, n)?;
            Ok(SpaceModel {
                kind,
                n,
                real_dim: 2 * n,
                group,
                form: WeightForm::su_normalized(n),
                scal_eighth: ratio((n * (n + 1)) as i64, 4),
                reduced_rank: false,
            })
        }
        SpaceKind::QuaternionicProjective => {
            if n < 2 {
                return Err(Error::InvalidParameter(
                    "HP^n requires n >= 2".to_string(),
                ));
            }
            let group = GroupDescriptor::new(Series::C, n + 1)?;
            Ok(SpaceModel {
                kind,
                n,
                real_dim: 4 * n,
                group,
                form: WeightForm::scaled_identity(n + 1, ratio(1, 4 * (n as i64 + 2))),
                scal_eighth: ratio(n as i64, 4),
                reduced_rank: false,
            })
        }
    }
}

/// Parses a CLI space spec such as "sphere:7", "cpn:3", "hpn:2".
pub fn parse_space_spec(s: &str) -> Result<SpaceModel> {
    let (kind, num) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("space spec {s:?} must look like sphere:7")))?;
    let n: usize = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad space parameter {num:?}")))?;
    let kind = match kind {
        "sphere" => SpaceKind::Sphere,
        "cpn" => SpaceKind::ComplexProjective,
        "hpn" => SpaceKind::QuaternionicProjective,
        other => {
            return Err(Error::Parse(format!(
                "unknown space {other:?} (expected sphere, cpn, or hpn)"
            )))
        }
    };
    make_space(kind, n)
}

/// Sign of the last coordinate for the odd-sphere ± label pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    fn sign(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Plus => write!(f, "+"),
            Parity::Minus => write!(f, "-"),
        }
    }
}

/// One eigenvalue family, identified by its discrete parameters. Ordering is
/// lexicographic on (variant, parameters), which fixes the deterministic
/// contributor order in all output.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyLabel {
    SphereSpinor { k: i64, parity: Option<Parity> },
    SphereRarita { l: i64, parity: Option<Parity> },
    /// CP^n spinor family λ(k,ε,l).
    CpSpinor { k: usize, eps: i64, l: i64 },
    /// CP^n family λ⁺(k,ε,ε₁,l).
    CpPlus { k: usize, eps: i64, eps1: i64, l: i64 },
    /// CP^n family λ⁻(k,ε,ε₂,l).
    CpMinus { k: usize, eps: i64, eps2: i64, l: i64 },
    /// HP^n family λ(m,l,ε) = (m+l, m, 1_{n−1−l−ε}, 0_{l+ε}).
    HpLambda { m: i64, l: i64, eps: i64 },
    /// HP^n family λ̃(m,l,ε) = (m+l, m, 2, 1_{n−2−l−ε}, 0_{l+ε}).
    HpTilde { m: i64, l: i64, eps: i64 },
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLabel::SphereSpinor { k, parity } => match parity {
                Some(p) => write!(f, "spinor(k={k},{p})"),
                None => write!(f, "spinor(k={k})"),
            },
            FamilyLabel::SphereRarita { l, parity } => match parity {
                Some(p) => write!(f, "rarita(l={l},{p})"),
                None => write!(f, "rarita(l={l})"),
            },
            FamilyLabel::CpSpinor { k, eps, l } => write!(f, "lambda(k={k},eps={eps},l={l})"),
            FamilyLabel::CpPlus { k, eps, eps1, l } => {
                write!(f, "lambda+(k={k},eps={eps},eps1={eps1},l={l})")
            }
            FamilyLabel::CpMinus { k, eps, eps2, l } => {
                write!(f, "lambda-(k={k},eps={eps},eps2={eps2},l={l})")
            }
            FamilyLabel::HpLambda { m, l, eps } => write!(f, "hp-lambda(m={m},l={l},eps={eps})"),
            FamilyLabel::HpTilde { m, l, eps } => write!(f, "hp-tilde(m={m},l={l},eps={eps})"),
        }
    }
}

/// Builds a weight from constant blocks: (value, repeat) pairs.
fn blocks(parts: &[(i64, usize)]) -> Weight {
    let mut c = Vec::new();
    for &(v, rep) in parts {
        c.extend(std::iter::repeat(rat(v)).take(rep));
    }
    Weight::new(c)
}

fn bad_label(label: &FamilyLabel, why: &str) -> Error {
    Error::InvalidLabel(format!("{label}: {why}"))
}

/// The explicit highest-weight string of a family label, with all block
/// lengths resolved. Errors on parameters outside the family's range or
/// producing a negative block length.
pub fn label_to_weight(space: &SpaceModel, label: &FamilyLabel) -> Result<Weight> {
    let n = space.n as i64;
    let w = match (space.kind, label) {
        (SpaceKind::Sphere, FamilyLabel::SphereSpinor { k, parity }) => {
            if *k < 0 {
                return Err(bad_label(label, "k must be >= 0"));
            }
            sphere_spinor_weight(space.n, *k, *parity, label)?
        }
        (SpaceKind::Sphere, FamilyLabel::SphereRarita { l, parity }) => {
            if *l < 0 {
                return Err(bad_label(label, "l must be >= 0"));
            }
            sphere_rarita_weight(space.n, *l, *parity, label)?
        }
        (SpaceKind::ComplexProjective, FamilyLabel::CpSpinor { k, eps, l }) => {
            cp_spinor_weight(n, *k as i64, *eps, *l, label)?
        }
        (SpaceKind::ComplexProjective, FamilyLabel::CpPlus { k, eps, eps1, l }) => {
            cp_plus_weight(n, *k as i64, *eps, *eps1, *l, label)?
        }
        (SpaceKind::ComplexProjective, FamilyLabel::CpMinus { k, eps, eps2, l }) => {
            cp_minus_weight(n, *k as i64, *eps, *eps2, *l, label)?
        }
        (SpaceKind::QuaternionicProjective, FamilyLabel::HpLambda { m, l, eps }) => {
            hp_lambda_weight(n, *m, *l, *eps, label)?
        }
        (SpaceKind::QuaternionicProjective, FamilyLabel::HpTilde { m, l, eps }) => {
            hp_tilde_weight(n, *m, *l, *eps, label)?
        }
        _ => return Err(bad_label(label, "label does not belong to this space")),
    };
    if !is_dominant(&w, &space.group)? {
        return Err(bad_label(label, "realized weight is not dominant"));
    }
    Ok(w)
}

fn sphere_spinor_weight(
    n: usize,
    k: i64,
    parity: Option<Parity>,
    label: &FamilyLabel,
) -> Result<Weight> {
    if n % 2 == 1 {
        // G = D_m, m = (n+1)/2: (k+1/2, (1/2)_{m−2}, ±1/2)
        let m = (n + 1) / 2;
        let p = parity.ok_or_else(|| bad_label(label, "odd spheres need a ± parity"))?;
        let mut c = vec![half(2 * k + 1)];
        c.extend(std::iter::repeat(half(1)).take(m - 2));
        c.push(half(p.sign()));
        Ok(Weight::new(c))
    } else {
        // G = B_m, m = n/2: (k+1/2, (1/2)_{m−1})
        if parity.is_some() {
            return Err(bad_label(label, "even spheres have a single component"));
        }
        let m = n / 2;
        let mut c = vec![half(2 * k + 1)];
        c.extend(std::iter::repeat(half(1)).take(m - 1));
        Ok(Weight::new(c))
    }
}

fn sphere_rarita_weight(
    n: usize,
    l: i64,
    parity: Option<Parity>,
    label: &FamilyLabel,
) -> Result<Weight> {
    if n % 2 == 1 {
        let m = (n + 1) / 2;
        let p = parity.ok_or_else(|| bad_label(label, "odd spheres need a ± parity"))?;
        if m == 2 {
            // n = 3: the 3/2 block and the ± coordinate coincide
            return Ok(Weight::new(vec![half(2 * l + 3), half(3 * p.sign())]));
        }
        let mut c = vec![half(2 * l + 3), half(3)];
        c.extend(std::iter::repeat(half(1)).take(m - 3));
        c.push(half(p.sign()));
        Ok(Weight::new(c))
    } else {
        if parity.is_some() {
            return Err(bad_label(label, "even spheres have a single component"));
        }
        let m = n / 2;
        let mut c = vec![half(2 * l + 3), half(3)];
        c.extend(std::iter::repeat(half(1)).take(m - 2));
        Ok(Weight::new(c))
    }
}

fn cp_spinor_weight(n: i64, k: i64, eps: i64, l: i64, label: &FamilyLabel) -> Result<Weight> {
    let h = (n + 1) / 2; // (n+1)/2, exact since n is odd
    let range_err = |why: &str| bad_label(label, why);
    let w = if k == 0 {
        if eps != 0 || l < 0 {
            return Err(range_err("k=0 requires eps=0 and l >= 0"));
        }
        blocks(&[(h + 2 * l, 1), (h + l, n as usize - 1)])
    } else if k < n {
        if !(0..=1).contains(&eps) || l < eps.max(k - (n - 1) / 2) {
            return Err(range_err("parameters outside the family range"));
        }
        blocks(&[
            (h - k + 2 * l - eps, 1),
            (h - k + l, (n - k - 1) as usize),
            (h - 1 - k + l + eps, 1),
            (h - 1 - k + l, (k - 1) as usize),
        ])
    } else if k == n {
        if eps != 1 || l < (n + 1) / 2 {
            return Err(range_err("k=n requires eps=1 and l >= (n+1)/2"));
        }
        blocks(&[(h - 1 - n + 2 * l, 1), (h - 1 - n + l, n as usize - 1)])
    } else {
        return Err(range_err("k must satisfy 0 <= k <= n"));
    };
    Ok(w)
}

fn cp_plus_weight(
    n: i64,
    k: i64,
    eps: i64,
    eps1: i64,
    l: i64,
    label: &FamilyLabel,
) -> Result<Weight> {
    let range_err = |why: &str| bad_label(label, why);
    let w = if k == 0 {
        if eps != 0 || !(0..=1).contains(&eps1) || l < eps1 {
            return Err(range_err("k=0 requires eps=0, eps1 in {0,1}, l >= eps1"));
        }
        blocks(&[
            ((n + 5) / 2 + 2 * l - eps1, 1),
            ((n + 3) / 2 + l + eps1, 1),
            ((n + 3) / 2 + l, n as usize - 2),
        ])
    } else if k <= n - 2 {
        if !(0..=1).contains(&eps)
            || !(0..=1).contains(&eps1)
            || l < (eps + eps1).max(k - (n + 1) / 2)
        {
            return Err(range_err("parameters outside the family range"));
        }
        blocks(&[
            ((n + 5) / 2 - k + 2 * l - eps - eps1, 1),
            ((n + 3) / 2 - k + l + eps1, 1),
            ((n + 3) / 2 - k + l, (n - k - 2) as usize),
            ((n + 1) / 2 - k + l + eps, 1),
            ((n + 1) / 2 - k + l, (k - 1) as usize),
        ])
    } else if k == n - 1 {
        if eps != 1 || !(-1..=1).contains(&eps1) || l < (1 + eps1).max((n - 3) / 2) {
            return Err(range_err(
                "k=n-1 requires eps=1, eps1 in {-1,0,1}, l >= max{1+eps1,(n-3)/2}",
            ));
        }
        blocks(&[
            ((n + 5) / 2 - (n - 1) + 2 * l - 1 - eps1, 1),
            ((n + 1) / 2 - (n - 1) + l + 1 + eps1, 1),
            ((n + 1) / 2 - (n - 1) + l, n as usize - 2),
        ])
    } else {
        return Err(range_err("k must satisfy 0 <= k <= n-1"));
    };
    Ok(w)
}

fn cp_minus_weight(
    n: i64,
    k: i64,
    eps: i64,
    eps2: i64,
    l: i64,
    label: &FamilyLabel,
) -> Result<Weight> {
    let range_err = |why: &str| bad_label(label, why);
    let w = if k == 1 {
        if eps != 0 || !(0..=2).contains(&eps2) || l < eps2.max((7 - n) / 2) {
            return Err(range_err(
                "k=1 requires eps=0, eps2 in {0,1,2}, l >= max{eps2,(7-n)/2}",
            ));
        }
        blocks(&[
            ((n - 1) / 2 - 1 + 2 * l - eps2, 1),
            ((n - 1) / 2 - 1 + l, n as usize - 2),
            ((n - 5) / 2 - 1 + l + eps2, 1),
        ])
    } else if k <= n - 1 {
        if !(0..=1).contains(&eps)
            || !(0..=1).contains(&eps2)
            || l < (eps + eps2).max(k - (n - 5) / 2)
        {
            return Err(range_err("parameters outside the family range"));
        }
        blocks(&[
            ((n - 1) / 2 - k + 2 * l - eps - eps2, 1),
            ((n - 1) / 2 - k + l, (n - k - 1) as usize),
            ((n - 3) / 2 - k + l + eps, 1),
            ((n - 3) / 2 - k + l, (k - 2) as usize),
            ((n - 5) / 2 - k + l + eps2, 1),
        ])
    } else if k == n {
        if eps != 1 || !(0..=1).contains(&eps2) || l < (n + 5) / 2 {
            return Err(range_err("k=n requires eps=1, eps2 in {0,1}, l >= (n+5)/2"));
        }
        blocks(&[
            ((n - 3) / 2 - n + 2 * l - eps2, 1),
            ((n - 3) / 2 - n + l, n as usize - 2),
            ((n - 5) / 2 - n + l + eps2, 1),
        ])
    } else {
        return Err(range_err("k must satisfy 1 <= k <= n"));
    };
    Ok(w)
}

fn hp_lambda_weight(n: i64, m: i64, l: i64, eps: i64, label: &FamilyLabel) -> Result<Weight> {
    let ones = n - 1 - l - eps;
    let zeros = l + eps;
    if m < 0 || l < 0 || ones < 0 || zeros < 0 {
        return Err(bad_label(label, "negative parameter or block length"));
    }
    if ones > 0 && m < 1 {
        return Err(bad_label(label, "m >= 1 required when the 1-block is nonempty"));
    }
    Ok(blocks(&[
        (m + l, 1),
        (m, 1),
        (1, ones as usize),
        (0, zeros as usize),
    ]))
}

fn hp_tilde_weight(n: i64, m: i64, l: i64, eps: i64, label: &FamilyLabel) -> Result<Weight> {
    let ones = n - 2 - l - eps;
    let zeros = l + eps;
    if m < 2 || l < 0 || ones < 0 || zeros < 0 {
        return Err(bad_label(label, "needs m >= 2 and nonnegative block lengths"));
    }
    Ok(blocks(&[
        (m + l, 1),
        (m, 1),
        (2, 1),
        (1, ones as usize),
        (0, zeros as usize),
    ]))
}

/// The eigenvalue families of a sector, with their coefficients, every free
/// index bounded by `cutoff`. Labels that a family display generates but
/// whose weight string is invalid (negative block length) are skipped and
/// reported, not fatal.
pub struct LabelSet {
    pub labels: Vec<(FamilyLabel, i64)>,
    pub skipped: Vec<String>,
}

pub fn enumerate_labels(space: &SpaceModel, sector: Sector, cutoff: i64) -> LabelSet {
    let mut out: std::collections::BTreeMap<FamilyLabel, i64> = std::collections::BTreeMap::new();
    let mut skipped = Vec::new();
    let mut push = |label: FamilyLabel, coeff: i64| {
        *out.entry(label).or_insert(0) += coeff;
    };
    let n = space.n as i64;
    match (space.kind, sector) {
        (SpaceKind::Sphere, Sector::ImP | Sector::FullSpinor) => {
            // k = 0 is the Killing-spinor component: in Ker P, hence absent from Im P
            let k0 = if sector == Sector::ImP { 1 } else { 0 };
            for k in k0..=cutoff {
                for p in sphere_parities(space.n) {
                    push(FamilyLabel::SphereSpinor { k, parity: p }, 1);
                }
            }
        }
        (SpaceKind::Sphere, Sector::KerPStar) => {
            for l in 0..=cutoff {
                for p in sphere_parities(space.n) {
                    push(FamilyLabel::SphereRarita { l, parity: p }, 1);
                }
            }
        }
        (SpaceKind::ComplexProjective, Sector::ImP | Sector::FullSpinor) => {
            for k in 0..=n {
                let eps_range: &[i64] = if k == 0 {
                    &[0]
                } else if k == n {
                    &[1]
                } else {
                    &[0, 1]
                };
                for &eps in eps_range {
                    let lo = if k == n {
                        (n + 1) / 2
                    } else {
                        eps.max(k - (n - 1) / 2)
                    };
                    for l in lo..=cutoff {
                        push(
                            FamilyLabel::CpSpinor {
                                k: k as usize,
                                eps,
                                l,
                            },
                            1,
                        );
                    }
                }
            }
        }
        (SpaceKind::ComplexProjective, Sector::KerPStar) => {
            // (Ker P*)⁺ over k = 0..n-1
            for k in 0..=n - 1 {
                let eps_range: &[i64] = if k == 0 {
                    &[0]
                } else if k == n - 1 {
                    &[1]
                } else {
                    &[0, 1]
                };
                for &eps in eps_range {
                    for eps1 in [0, 1] {
                        let lo = (eps + eps1).max(k - (n + 1) / 2);
                        for l in lo..=cutoff {
                            push(
                                FamilyLabel::CpPlus {
                                    k: k as usize,
                                    eps,
                                    eps1,
                                    l,
                                },
                                1,
                            );
                        }
                    }
                }
            }
            // (Ker P*)⁻ over k = 1..n-1 and k = n; the bundle bookkeeping
            // requires the k = n-1 family even though it is easy to drop
            // when reading the branching tables
            let mut minus_ks: Vec<i64> = vec![1];
            minus_ks.extend(2..=n - 1);
            minus_ks.push(n);
            for k in minus_ks {
                let eps_range: Vec<i64> = if k == 1 {
                    vec![0]
                } else if k == n {
                    vec![1]
                } else {
                    vec![0, 1]
                };
                for &eps in &eps_range {
                    for eps2 in [0, 1] {
                        let lo = if k == n {
                            (n + 5) / 2
                        } else {
                            (eps + eps2).max(k - (n - 5) / 2)
                        };
                        for l in lo..=cutoff {
                            push(
                                FamilyLabel::CpMinus {
                                    k: k as usize,
                                    eps,
                                    eps2,
                                    l,
                                },
                                1,
                            );
                        }
                    }
                }
            }
        }
        (SpaceKind::QuaternionicProjective, Sector::ImP | Sector::FullSpinor) => {
            let bands: &[(i64, i64, i64, i64, i64)] = &[
                // (l_from, l_to, eps, m_min, coeff)
                (1, n, -1, 1, 2),
                (0, n - 2, 1, 1, 2),
            ];
            hp_emit_lambda(space, bands, cutoff, &mut push, &mut skipped);
            hp_emit_one(
                space,
                FamilyLabel::HpLambda { m: 0, l: n, eps: -1 },
                2,
                &mut push,
                &mut skipped,
            );
        }
        (SpaceKind::QuaternionicProjective, Sector::KerPStar) => {
            let tilde_bands: &[(i64, i64, i64, i64, i64)] = &[
                (1, n - 2, 0, 2, 2),
                (0, n - 2, 0, 2, 2),
                (0, n - 4, 2, 2, 2),
                (2, n, -2, 2, 2),
            ];
            let lambda_bands: &[(i64, i64, i64, i64, i64)] = &[
                (0, n - 4, 3, 2, 2),
                (0, n - 4, 3, 1, 2),
                (3, n + 1, -3, 1, 2),
                (0, n + 2, -3, 1, 2),
                (0, n - 3, 1, 2, 2),
                (0, n - 2, 1, 2, 2),
                (1, n - 2, 1, 2, 4),
                (1, n - 1, -1, 2, 2),
                (2, n - 1, -1, 1, 2),
                (1, n, -1, 1, 2),
                (2, n, -1, 1, 2),
            ];
            for &(lf, lt, eps, m0, coeff) in tilde_bands {
                for l in lf..=lt {
                    let probe = FamilyLabel::HpTilde { m: m0, l, eps };
                    if let Err(e) = label_to_weight(space, &probe) {
                        skipped.push(e.to_string());
                        continue;
                    }
                    for m in m0..=cutoff {
                        push(FamilyLabel::HpTilde { m, l, eps }, coeff);
                    }
                }
            }
            hp_emit_lambda(space, lambda_bands, cutoff, &mut push, &mut skipped);
            hp_emit_one(
                space,
                FamilyLabel::HpLambda { m: 0, l: n + 2, eps: -3 },
                2,
                &mut push,
                &mut skipped,
            );
            hp_emit_one(
                space,
                FamilyLabel::HpLambda { m: 0, l: n - 2, eps: 1 },
                2,
                &mut push,
                &mut skipped,
            );
        }
    }
    LabelSet {
        labels: out.into_iter().collect(),
        skipped,
    }
}

fn sphere_parities(n: usize) -> Vec<Option<Parity>> {
    if n % 2 == 1 {
        vec![Some(Parity::Plus), Some(Parity::Minus)]
    } else {
        vec![None]
    }
}

fn hp_emit_lambda(
    space: &SpaceModel,
    bands: &[(i64, i64, i64, i64, i64)],
    cutoff: i64,
    push: &mut impl FnMut(FamilyLabel, i64),
    skipped: &mut Vec<String>,
) {
    for &(lf, lt, eps, m0, coeff) in bands {
        for l in lf..=lt {
            let probe = FamilyLabel::HpLambda { m: m0, l, eps };
            if let Err(e) = label_to_weight(space, &probe) {
                skipped.push(e.to_string());
                continue;
            }
            for m in m0..=cutoff {
                push(FamilyLabel::HpLambda { m, l, eps }, coeff);
            }
        }
    }
}

fn hp_emit_one(
    space: &SpaceModel,
    label: FamilyLabel,
    coeff: i64,
    push: &mut impl FnMut(FamilyLabel, i64),
    skipped: &mut Vec<String>,
) {
    match label_to_weight(space, &label) {
        Ok(_) => push(label, coeff),
        Err(e) => skipped.push(e.to_string()),
    }
}

/// Families that the λ⁺/λ⁻ parameter displays generate but which belong to
/// Im P rather than Ker P*; listed for the validation report.
pub fn exclusion_notes(space: &SpaceModel) -> Vec<String> {
    match space.kind {
        SpaceKind::ComplexProjective => vec![
            format!(
                "lambda+(k={},eps=1,eps1=-1,*) realizes L2(S_1/2(0)) and is attributed to Im P",
                space.n - 1
            ),
            "lambda-(k=1,eps=0,eps2=2,*) realizes L2(S_1/2(n)) and is attributed to Im P"
                .to_string(),
        ],
        _ => Vec::new(),
    }
}

/// The closed-form D² eigenvalue of a spinor-family label.
pub fn dirac_squared(space: &SpaceModel, label: &FamilyLabel) -> Result<Rational> {
    let n = space.n as i64;
    match (space.kind, label) {
        (SpaceKind::Sphere, FamilyLabel::SphereSpinor { k, .. }) => {
            // (k + n/2)²
            Ok(ratio((2 * k + n) * (2 * k + n), 4))
        }
        (SpaceKind::ComplexProjective, FamilyLabel::CpSpinor { k, eps, l }) => {
            let k = *k as i64;
            Ok(rat((l + n - k) * (2 * l + n + 1 - 2 * eps)))
        }
        (SpaceKind::QuaternionicProjective, FamilyLabel::HpLambda { m, l, eps })
            if *eps == 1 || *eps == -1 =>
        {
            Ok(ratio((n + m - eps) * (n + m + l + 1 + eps), 2 * (n + 2)))
        }
        _ => Err(bad_label(label, "not a spinor-bundle family")),
    }
}

/// The closed-form R² eigenvalue of a label in its sector.
pub fn r_squared_closed(space: &SpaceModel, sector: Sector, label: &FamilyLabel) -> Result<Rational> {
    let n = space.n as i64;
    let nn = space.real_dim as i64;
    match sector {
        Sector::ImP => {
            let scale = ratio((nn - 2) * (nn - 2), nn * nn);
            Ok(scale * dirac_squared(space, label)?)
        }
        Sector::FullSpinor => dirac_squared(space, label),
        Sector::KerPStar => match (space.kind, label) {
            (SpaceKind::Sphere, FamilyLabel::SphereRarita { l, .. }) => {
                // (l + 1 + n/2)²
                Ok(ratio((2 * l + 2 + n) * (2 * l + 2 + n), 4))
            }
            (SpaceKind::ComplexProjective, FamilyLabel::CpPlus { k, eps, eps1, l }) => {
                let k = *k as i64;
                Ok(rat(
                    (l + 1 + n - k - eps1) * (2 * (l + 1) + n + 1 - 2 * eps)
                        - (n + 1) * (1 - eps1),
                ))
            }
            (SpaceKind::ComplexProjective, FamilyLabel::CpMinus { k, eps, eps2, l }) => {
                let k = *k as i64;
                Ok(rat(
                    (l - 1 + n - k + 1 - eps2) * (2 * (l - 1) + n + 1 - 2 * eps)
                        - (n + 1) * eps2,
                ))
            }
            (SpaceKind::QuaternionicProjective, FamilyLabel::HpTilde { m, l, eps }) => {
                let core = rat((n + m - eps) * (n + m + l + 1 + eps)) + ratio(eps * eps - 4, 2);
                Ok(core / rat(2 * (n + 2)))
            }
            (SpaceKind::QuaternionicProjective, FamilyLabel::HpLambda { m, l, eps }) => {
                let core = rat((n + m - eps) * (n + m + l + 1 + eps)) + ratio(eps * eps - 4, 2)
                    - ratio(2 * n + 1, 2);
                Ok(core / rat(2 * (n + 2)))
            }
            _ => Err(bad_label(label, "not a Ker P* family for this space")),
        },
    }
}

/// The Casimir-based eigenvalue map of the abstract Weitzenböck identities:
/// ((N−2)/N)²·(Casimir + scal/8) on Im P, Casimir + (N−8)/N·scal/8 on
/// Ker P*, Casimir + scal/8 on the spinor bundle itself.
pub fn r_squared_from_casimir(space: &SpaceModel, sector: Sector, lam: &Weight) -> Result<Rational> {
    let nn = space.real_dim as i64;
    let cas = casimir_eigenvalue(lam, &space.group, &space.form)?;
    match sector {
        Sector::ImP => Ok(ratio((nn - 2) * (nn - 2), nn * nn) * (cas + &space.scal_eighth)),
        Sector::KerPStar => Ok(cas + ratio(nn - 8, nn) * &space.scal_eighth),
        Sector::FullSpinor => Ok(cas + &space.scal_eighth),
    }
}

/// The squared Killing-spinor constant N·scal/(4(N−1)).
pub fn killing_eigenvalue(space: &SpaceModel) -> Rational {
    let nn = space.real_dim as i64;
    rat(2 * nn) * &space.scal_eighth / rat(nn - 1)
}

/// K-highest weights of the spinor bundle S_{1/2}, in the K-label
/// convention of the space (HP: first coordinate is the Sp(1) label).
pub fn s12_constituents(space: &SpaceModel) -> Vec<Weight> {
    let n = space.n;
    match space.kind {
        SpaceKind::Sphere => {
            if n % 2 == 1 {
                let rk = (n - 1) / 2;
                vec![Weight::new(vec![half(1); rk])]
            } else {
                let rk = n / 2;
                let plus = vec![half(1); rk];
                let mut minus = plus.clone();
                minus[rk - 1] = half(-1);
                vec![Weight::new(plus), Weight::new(minus)]
            }
        }
        SpaceKind::ComplexProjective => (0..=n)
            .map(|k| crate::branching::cp_spinor_bundle(k, n))
            .collect(),
        SpaceKind::QuaternionicProjective => {
            (0..=n).map(|k| hp_k_label(k as i64, &[(1, n - k), (0, k)])).collect()
        }
    }
}

/// K-highest weights of the Rarita-Schwinger bundle S_{3/2}.
pub fn s32_constituents(space: &SpaceModel) -> Vec<Weight> {
    let n = space.n;
    match space.kind {
        SpaceKind::Sphere => {
            if n % 2 == 1 {
                let rk = (n - 1) / 2;
                let mut c = vec![half(1); rk];
                c[0] = half(3);
                vec![Weight::new(c)]
            } else {
                let rk = n / 2;
                let mut plus = vec![half(1); rk];
                plus[0] = half(3);
                let mut minus = plus.clone();
                minus[rk - 1] = half(-1);
                vec![Weight::new(plus), Weight::new(minus)]
            }
        }
        SpaceKind::ComplexProjective => {
            let mut v: Vec<Weight> = (1..n)
                .map(|k| crate::branching::cp_spinor_bundle(k, n))
                .collect();
            v.extend((0..n).map(|k| crate::branching::cp_plus_bundle(k, n)));
            v.extend((1..=n).map(|k| crate::branching::cp_minus_bundle(k, n)));
            v
        }
        SpaceKind::QuaternionicProjective => {
            let mut v = Vec::new();
            for k in 0..=n.saturating_sub(2) {
                v.push(hp_k_label(k as i64, &[(2, 1), (1, n - k - 2), (0, k + 1)]));
            }
            for k in 1..=n {
                v.push(hp_k_label(k as i64, &[(2, 1), (1, n - k), (0, k - 1)]));
            }
            for k in 0..=n.saturating_sub(2) {
                v.push(hp_k_label(k as i64, &[(1, n - k - 2), (0, k + 2)]));
            }
            for k in 2..=n + 1 {
                v.push(hp_k_label(k as i64, &[(1, n + 2 - k), (0, k - 2)]));
            }
            for k in 1..n {
                v.push(hp_k_label(k as i64, &[(1, n - k), (0, k)]));
            }
            v
        }
    }
}

/// K-highest weights of S_{1/2} ⊗ TM^C = S_{1/2} ⊕ S_{3/2} (counted with
/// repetition across the sub-bundle splittings).
pub fn s12_tm_constituents(space: &SpaceModel) -> Vec<Weight> {
    let n = space.n;
    match space.kind {
        SpaceKind::Sphere => {
            let mut v = s12_constituents(space);
            v.extend(s32_constituents(space));
            v
        }
        SpaceKind::ComplexProjective => {
            let mut v = Vec::new();
            for k in 0..=n {
                if k < n {
                    v.push(crate::branching::cp_plus_bundle(k, n));
                }
                if k >= 1 {
                    v.push(crate::branching::cp_spinor_bundle(k - 1, n));
                }
                if k < n {
                    v.push(crate::branching::cp_spinor_bundle(k + 1, n));
                }
                if k >= 1 {
                    v.push(crate::branching::cp_minus_bundle(k, n));
                }
            }
            v
        }
        SpaceKind::QuaternionicProjective => {
            let mut v = Vec::new();
            for k in 0..=n.saturating_sub(2) {
                v.push(hp_k_label(k as i64, &[(2, 1), (1, n - k - 2), (0, k + 1)]));
            }
            for k in 1..=n {
                v.push(hp_k_label(k as i64, &[(2, 1), (1, n - k), (0, k - 1)]));
            }
            for k in 0..=n.saturating_sub(2) {
                v.push(hp_k_label(k as i64, &[(1, n - k - 2), (0, k + 2)]));
            }
            for k in 2..=n + 1 {
                v.push(hp_k_label(k as i64, &[(1, n + 2 - k), (0, k - 2)]));
            }
            for k in 0..n {
                v.push(hp_k_label(k as i64, &[(1, n - k), (0, k)]));
            }
            for k in 1..=n {
                v.push(hp_k_label(k as i64, &[(1, n - k), (0, k)]));
            }
            v
        }
    }
}

fn hp_k_label(sp1: i64, sp_n_blocks: &[(i64, usize)]) -> Weight {
    let mut c = vec![rat(sp1)];
    c.extend(blocks(sp_n_blocks).coords().iter().cloned());
    Weight::new(c)
}

/// Dimension of a K-irreducible from its label in the space's convention.
pub fn k_dimension(space: &SpaceModel, kw: &Weight) -> Result<Integer> {
    let n = space.n;
    match space.kind {
        SpaceKind::Sphere => {
            let kg = if n % 2 == 1 {
                GroupDescriptor::new(Series::B, (n - 1) / 2)?
            } else {
                GroupDescriptor::new(Series::D, n / 2)?
            };
            weyl_dimension(kw, &kg)
        }
        SpaceKind::ComplexProjective => {
            // a U(n) label: dimension depends on successive differences only
            if kw.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: kw.len(),
                });
            }
            let base = kw.coord(n - 1).clone();
            let shifted = Weight::new(
                kw.coords()[..n - 1]
                    .iter()
                    .map(|c| c - &base)
                    .collect::<Vec<_>>(),
            );
            weyl_dimension(&shifted, &GroupDescriptor::new(Series::A, n - 1)?)
        }
        SpaceKind::QuaternionicProjective => {
            // (k; mu): Sp(1) factor of dimension k+1 times the Sp(n) factor
            if kw.len() != n + 1 {
                return Err(Error::DimensionMismatch {
                    expected: n + 1,
                    got: kw.len(),
                });
            }
            let sp1 = kw.coord(0);
            if sp1.is_negative() {
                return Err(Error::InvalidLabel(format!("negative Sp(1) label in {kw}")));
            }
            let mu = Weight::new(kw.coords()[1..].to_vec());
            let d = weyl_dimension(&mu, &GroupDescriptor::new(Series::C, n)?)?;
            Ok((sp1 + rat(1)).to_integer() * d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn sphere(n: usize) -> SpaceModel {
        make_space(SpaceKind::Sphere, n).unwrap()
    }
    fn cp(n: usize) -> SpaceModel {
        make_space(SpaceKind::ComplexProjective, n).unwrap()
    }
    fn hp(n: usize) -> SpaceModel {
        make_space(SpaceKind::QuaternionicProjective, n).unwrap()
    }

    #[test]
    fn make_space_examples() {
        let s7 = sphere(7);
        assert_eq!(s7.group, GroupDescriptor::new(Series::D, 4).unwrap());
        assert_eq!(s7.real_dim, 7);
        assert_eq!(s7.scal_eighth, ratio(21, 4));

        let c3 = cp(3);
        assert_eq!(c3.group, GroupDescriptor::new(Series::A, 3).unwrap());
        assert_eq!(c3.real_dim, 6);
        assert_eq!(c3.scal_eighth, rat(3));

        let err = make_space(SpaceKind::ComplexProjective, 4).unwrap_err();
        assert!(err.to_string().contains("no spin structure"));

        assert!(make_space(SpaceKind::Sphere, 2).is_err());
        assert!(make_space(SpaceKind::QuaternionicProjective, 1).is_err());
    }

    #[test]
    fn parse_space_specs() {
        assert_eq!(parse_space_spec("sphere:7").unwrap().real_dim, 7);
        assert_eq!(parse_space_spec("hpn:2").unwrap().real_dim, 8);
        assert!(parse_space_spec("sphere").is_err());
        assert!(parse_space_spec("torus:3").is_err());
    }

    #[test]
    fn label_weights() {
        let s7 = sphere(7);
        let w = label_to_weight(
            &s7,
            &FamilyLabel::SphereSpinor {
                k: 2,
                parity: Some(Parity::Plus),
            },
        )
        .unwrap();
        assert_eq!(w, Weight::new(vec![half(5), half(1), half(1), half(1)]));

        let c3 = cp(3);
        let w = label_to_weight(
            &c3,
            &FamilyLabel::CpPlus {
                k: 0,
                eps: 0,
                eps1: 0,
                l: 0,
            },
        )
        .unwrap();
        assert_eq!(w, Weight::from_i64(&[4, 3, 3]));

        let h2 = hp(2);
        for m in 2..6 {
            let w = label_to_weight(&h2, &FamilyLabel::HpTilde { m, l: 0, eps: 0 }).unwrap();
            assert_eq!(w, Weight::from_i64(&[m, m, 2]));
        }

        // degenerate n=3 Rarita-Schwinger labels
        let s3 = sphere(3);
        let w = label_to_weight(
            &s3,
            &FamilyLabel::SphereRarita {
                l: 1,
                parity: Some(Parity::Minus),
            },
        )
        .unwrap();
        assert_eq!(w, Weight::new(vec![half(5), half(-3)]));

        // out-of-range parameters are invalid labels
        assert!(label_to_weight(&c3, &FamilyLabel::CpSpinor { k: 3, eps: 1, l: 0 }).is_err());
        assert!(label_to_weight(&h2, &FamilyLabel::HpTilde { m: 1, l: 0, eps: 0 }).is_err());
        assert!(label_to_weight(&h2, &FamilyLabel::HpLambda { m: 1, l: 0, eps: 3 }).is_err());
    }

    #[test]
    fn dirac_examples() {
        let s7 = sphere(7);
        let lab = FamilyLabel::SphereSpinor {
            k: 1,
            parity: Some(Parity::Plus),
        };
        assert_eq!(dirac_squared(&s7, &lab).unwrap(), ratio(81, 4));

        let c3 = cp(3);
        let lab = FamilyLabel::CpSpinor { k: 0, eps: 0, l: 0 };
        assert_eq!(dirac_squared(&c3, &lab).unwrap(), rat(12));

        let h2 = hp(2);
        let lab = FamilyLabel::HpLambda { m: 1, l: 0, eps: 1 };
        assert_eq!(dirac_squared(&h2, &lab).unwrap(), ratio(5, 4));
    }

    #[test]
    fn r_squared_closed_examples() {
        let s7 = sphere(7);
        let lab = FamilyLabel::SphereSpinor {
            k: 1,
            parity: Some(Parity::Plus),
        };
        assert_eq!(
            r_squared_closed(&s7, Sector::ImP, &lab).unwrap(),
            ratio(2025, 196)
        );

        let c3 = cp(3);
        let lab = FamilyLabel::CpPlus {
            k: 0,
            eps: 0,
            eps1: 0,
            l: 0,
        };
        assert_eq!(r_squared_closed(&c3, Sector::KerPStar, &lab).unwrap(), rat(20));

        let h2 = hp(2);
        for m in 2..8 {
            let lab = FamilyLabel::HpTilde { m, l: 0, eps: 0 };
            assert_eq!(
                r_squared_closed(&h2, Sector::KerPStar, &lab).unwrap(),
                ratio(m * m + 5 * m + 4, 8)
            );
        }
    }

    #[test]
    fn casimir_based_map_matches_closed_forms() {
        let s7 = sphere(7);
        let lam = Weight::new(vec![half(3), half(3), half(1), half(1)]);
        assert_eq!(
            r_squared_from_casimir(&s7, Sector::KerPStar, &lam).unwrap(),
            ratio(81, 4)
        );

        let c3 = cp(3);
        assert_eq!(
            r_squared_from_casimir(&c3, Sector::KerPStar, &Weight::from_i64(&[4, 3, 3])).unwrap(),
            rat(20)
        );

        let h2 = hp(2);
        for m in 2..6 {
            assert_eq!(
                r_squared_from_casimir(&h2, Sector::KerPStar, &Weight::from_i64(&[m, m, 2]))
                    .unwrap(),
                ratio(m * m + 5 * m + 4, 8)
            );
        }
    }

    #[test]
    fn killing_values() {
        assert_eq!(killing_eigenvalue(&sphere(7)), ratio(49, 4));
        assert_eq!(killing_eigenvalue(&sphere(3)), ratio(9, 4));
        assert_eq!(killing_eigenvalue(&cp(3)), parse_rational("36/5").unwrap());
        // 36/5 is never a CP³ Dirac eigenvalue, so Ker P = 0 there
        let c3 = cp(3);
        let killing = killing_eigenvalue(&c3);
        let set = enumerate_labels(&c3, Sector::FullSpinor, 8);
        for (lab, _) in &set.labels {
            assert!(dirac_squared(&c3, lab).unwrap() > killing);
        }
    }

    #[test]
    fn sphere_label_sets() {
        let s7 = sphere(7);
        let set = enumerate_labels(&s7, Sector::KerPStar, 1);
        assert_eq!(set.labels.len(), 4); // l = 0, 1 with ± each
        assert!(set.skipped.is_empty());

        let imp = enumerate_labels(&s7, Sector::ImP, 1);
        assert_eq!(imp.labels.len(), 2); // k = 1, ± only (k=0 is Ker P)
        let full = enumerate_labels(&s7, Sector::FullSpinor, 1);
        assert_eq!(full.labels.len(), 4);

        let s4 = sphere(4);
        let set = enumerate_labels(&s4, Sector::KerPStar, 2);
        assert_eq!(set.labels.len(), 3); // single component per l
    }

    #[test]
    fn hp_label_sets() {
        let h2 = hp(2);
        let set = enumerate_labels(&h2, Sector::KerPStar, 3);
        // the l=0, eps=0 tilde band survives at n=2
        assert!(set
            .labels
            .iter()
            .any(|(l, c)| *l == FamilyLabel::HpTilde { m: 2, l: 0, eps: 0 } && *c == 2));
        // exceptional isolated modules
        assert!(set
            .labels
            .iter()
            .any(|(l, c)| *l == FamilyLabel::HpLambda { m: 0, l: 4, eps: -3 } && *c == 2));
        assert!(set
            .labels
            .iter()
            .any(|(l, c)| *l == FamilyLabel::HpLambda { m: 0, l: 0, eps: 1 } && *c == 2));
        // bands invalid at n=2 were skipped and reported
        assert!(!set.skipped.is_empty());

        // the trivial weight appears via lambda(0, n-2, 1): a genuine zero mode
        let w = label_to_weight(&h2, &FamilyLabel::HpLambda { m: 0, l: 0, eps: 1 }).unwrap();
        assert!(w.is_zero());
        assert_eq!(
            r_squared_closed(&h2, Sector::KerPStar, &FamilyLabel::HpLambda { m: 0, l: 0, eps: 1 })
                .unwrap(),
            rat(0)
        );
    }

    #[test]
    fn bundle_dimension_bookkeeping() {
        for space in [sphere(3), sphere(4), sphere(7), cp(3), hp(2), hp(3)] {
            let nn = space.real_dim;
            let full: Integer = Integer::from(1) << (nn / 2);
            let s12: Integer = s12_constituents(&space)
                .iter()
                .map(|w| k_dimension(&space, w).unwrap())
                .sum();
            assert_eq!(s12, full, "S_1/2 rank failed for {}:{}", space.kind, space.n);
            let s32: Integer = s32_constituents(&space)
                .iter()
                .map(|w| k_dimension(&space, w).unwrap())
                .sum();
            assert_eq!(
                s32,
                Integer::from(nn as i64 - 1) * &full,
                "S_3/2 rank failed for {}:{}",
                space.kind,
                space.n
            );
            let tm: Integer = s12_tm_constituents(&space)
                .iter()
                .map(|w| k_dimension(&space, w).unwrap())
                .sum();
            assert_eq!(
                tm,
                Integer::from(nn as i64) * &full,
                "S_1/2 x TM rank failed for {}:{}",
                space.kind,
                space.n
            );
        }
    }
}
