//! Fast branching rules: Spin interlacing, the SU(n+1) interlacing-with-level
//! rule, and the Sp(n+1) ↓ Sp(1)×Sp(n) multiplicity via Laurent coefficient
//! extraction. These are the production predicates; `rep::branch_by_restriction`
//! is the independent oracle they are checked against.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, half, rat, Integer, Rational};
use crate::weight::{check_weight, is_dominant, GroupDescriptor, Series, Weight};

/// Spinor-bundle selector on the sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphereBundleKind {
    SpinHalf,
    SpinThreeHalf,
}

/// Interlacing test for Spin(r+1) ↓ Spin(r) type restrictions.
///
/// `lam` is a G-dominant weight, `mu` a K-dominant weight; the pair must
/// have ranks (m, m) for B ↓ D and (m, m-1) for D ↓ B. Multiplicity is 1
/// when the chain holds, 0 otherwise.
pub fn spin_interlaces(lam: &Weight, g: &GroupDescriptor, mu: &Weight) -> Result<bool> {
    check_weight(lam, g)?;
    let m = g.rank;
    let chain = match g.series {
        Series::B => {
            // lam_1 >= mu_1 >= lam_2 >= ... >= mu_{m-1} >= lam_m >= |mu_m|
            if mu.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    got: mu.len(),
                });
            }
            let mut ok = true;
            for i in 0..m - 1 {
                ok &= lam.coord(i) >= mu.coord(i) && mu.coord(i) >= lam.coord(i + 1);
            }
            ok && *lam.coord(m - 1) >= mu.coord(m - 1).abs()
        }
        Series::D => {
            // lam_1 >= mu_1 >= lam_2 >= ... >= lam_{m-1} >= mu_{m-1} >= |lam_m|
            if mu.len() != m - 1 {
                return Err(Error::DimensionMismatch {
                    expected: m - 1,
                    got: mu.len(),
                });
            }
            let mut ok = true;
            for i in 0..m - 1 {
                ok &= lam.coord(i) >= mu.coord(i);
            }
            for i in 0..m - 2 {
                ok &= mu.coord(i) >= lam.coord(i + 1);
            }
            ok && *mu.coord(m - 2) >= lam.coord(m - 1).abs()
        }
        _ => {
            return Err(Error::UnsupportedEmbedding(format!(
                "spin interlacing does not apply to {g}"
            )))
        }
    };
    // branching preserves the half-integer class
    let same_class = lam.integrality_class() == mu.integrality_class();
    Ok(chain && same_class)
}

/// Constituent K-weights of the sphere spinor bundles, as Spin(n) weights.
pub fn sphere_bundle_weights(bundle: SphereBundleKind, n: usize) -> Vec<Weight> {
    let top = match bundle {
        SphereBundleKind::SpinHalf => half(1),
        SphereBundleKind::SpinThreeHalf => half(3),
    };
    if n % 2 == 1 {
        // K = Spin(n) odd, rank (n-1)/2, single component
        let rk = (n - 1) / 2;
        let mut c = vec![half(1); rk];
        if rk > 0 {
            c[0] = top;
        }
        vec![Weight::new(c)]
    } else {
        // K = Spin(n) even = D_{n/2}, two components with last coordinate ±1/2
        let rk = n / 2;
        let mut plus = vec![half(1); rk];
        plus[0] = top;
        let mut minus = plus.clone();
        minus[rk - 1] = half(-1);
        vec![Weight::new(plus), Weight::new(minus)]
    }
}

/// True iff `lam` appears in `L²` of the given sphere spinor bundle, i.e.
/// it interlaces one of the bundle's K-components. The Frobenius
/// multiplicity is 1 when true.
pub fn spin_contains(lam: &Weight, bundle: SphereBundleKind, n: usize) -> Result<bool> {
    let g = sphere_group(n)?;
    if !is_dominant(lam, &g)? {
        return Ok(false);
    }
    for mu in sphere_bundle_weights(bundle, n) {
        if spin_interlaces(lam, &g, &mu)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Spin(n+1) for the n-sphere: D_{(n+1)/2} when n is odd, B_{n/2} otherwise.
pub fn sphere_group(n: usize) -> Result<GroupDescriptor> {
    if n < 3 {
        return Err(Error::InvalidParameter("sphere requires n >= 3".into()));
    }
    if n % 2 == 1 {
        GroupDescriptor::new(Series::D, (n + 1) / 2)
    } else {
        GroupDescriptor::new(Series::B, n / 2)
    }
}

/// General SU(n+1) ↓ S(U(n)×U(1)) containment: `mu_label` is a K-highest
/// weight in the length-n paper convention. The coupled (ν, l) system is
/// solved in closed form: the total charge determines l, then ν = mu + l·1
/// must interlace lam. Multiplicity is 1 when true.
pub fn su_branch_contains(lam: &Weight, mu_label: &Weight, n: usize) -> Result<bool> {
    let g = GroupDescriptor::new(Series::A, n)?;
    check_weight(lam, &g)?;
    if mu_label.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: mu_label.len(),
        });
    }
    if !is_dominant(lam, &g)? {
        return Ok(false);
    }
    let total_lam: Rational = lam.coords().iter().sum();
    let total_mu: Rational = mu_label.coords().iter().sum();
    let diff = total_lam - total_mu;
    let level = diff / rat(n as i64 + 1);
    if !level.denom().is_one() {
        return Ok(false);
    }
    let nu: Vec<Rational> = mu_label.coords().iter().map(|c| c + &level).collect();
    // lam_1 >= nu_1 >= lam_2 >= ... >= lam_n >= nu_n >= 0
    for i in 0..n {
        if lam.coord(i) < &nu[i] {
            return Ok(false);
        }
        if i + 1 < n && &nu[i] < lam.coord(i + 1) {
            return Ok(false);
        }
    }
    Ok(!nu[n - 1].is_negative())
}

/// Brute-force second oracle for `su_branch_contains`: search the finite
/// interlacing box of ν directly.
pub fn su_branch_contains_bruteforce(lam: &Weight, mu_label: &Weight, n: usize) -> Result<bool> {
    let g = GroupDescriptor::new(Series::A, n)?;
    check_weight(lam, &g)?;
    if !is_dominant(lam, &g)? {
        return Ok(false);
    }
    let lam_i: Vec<i64> = lam
        .coords()
        .iter()
        .map(|c| c.to_integer().try_into().unwrap())
        .collect();
    let mut nu = vec![0i64; n];
    fn search(
        lam: &[i64],
        nu: &mut Vec<i64>,
        depth: usize,
        n: usize,
        target: &Weight,
    ) -> bool {
        if depth == n {
            let total_lam: i64 = lam.iter().sum();
            let total_nu: i64 = nu.iter().sum();
            let level = total_lam - total_nu;
            return (0..n).all(|i| rat(nu[i] - level) == *target.coord(i));
        }
        let hi = lam[depth];
        let lo = if depth + 1 < n { lam[depth + 1] } else { 0 };
        for v in lo..=hi {
            nu[depth] = v;
            if search(lam, nu, depth + 1, n, target) {
                return true;
            }
        }
        false
    }
    Ok(search(&lam_i, &mut nu, 0, n, mu_label))
}

/// The spinor sub-bundle S_{1/2}(k) of CP^n as a K-label:
/// (((n+1)/2-k)_{n-k}, ((n-1)/2-k)_k).
pub fn cp_spinor_bundle(k: usize, n: usize) -> Weight {
    let a = rat((n as i64 + 1) / 2 - k as i64);
    let b = rat((n as i64 - 1) / 2 - k as i64);
    let mut c = vec![a; n - k];
    c.extend(vec![b; k]);
    Weight::new(c)
}

/// S⁺_{3/2}(k) of CP^n: ((n+5)/2-k, ((n+3)/2-k)_{n-k-1}, ((n+1)/2-k)_k),
/// defined for 0 <= k <= n-1.
pub fn cp_plus_bundle(k: usize, n: usize) -> Weight {
    let mut c = vec![rat((n as i64 + 5) / 2 - k as i64)];
    c.extend(vec![rat((n as i64 + 3) / 2 - k as i64); n - k - 1]);
    c.extend(vec![rat((n as i64 + 1) / 2 - k as i64); k]);
    Weight::new(c)
}

/// S⁻_{3/2}(k) of CP^n: (((n-1)/2-k)_{n-k}, ((n-3)/2-k)_{k-1}, (n-5)/2-k),
/// defined for 1 <= k <= n.
pub fn cp_minus_bundle(k: usize, n: usize) -> Weight {
    let mut c = vec![rat((n as i64 - 1) / 2 - k as i64); n - k];
    c.extend(vec![rat((n as i64 - 3) / 2 - k as i64); k - 1]);
    c.push(rat((n as i64 - 5) / 2 - k as i64));
    Weight::new(c)
}

/// True iff `lam` appears in L²(S_{1/2}(k)) on CP^n.
pub fn su_contains(lam: &Weight, k: usize, n: usize) -> Result<bool> {
    if n % 2 == 0 || n < 3 || k > n {
        return Err(Error::InvalidParameter(format!(
            "CP^n spinor bundle needs odd n >= 3 and 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    su_branch_contains(lam, &cp_spinor_bundle(k, n), n)
}

/// Bookkeeping for the Sp branching multiplicity: the exact l-values and the
/// exponent whose Laurent coefficient is the multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpBranchData {
    pub l_values: Vec<i64>,
    pub target_exponent: i64,
}

impl SpBranchData {
    /// l_1 = λ_1 - max(λ_2, μ_2); l_i = min(λ_i, μ_i) - max(λ_{i+1}, μ_{i+1});
    /// l_{n+1} = min(λ_{n+1}, μ_{n+1}).
    pub fn new(lam: &[i64], mu: &[i64], n: usize) -> Self {
        let mut l = Vec::with_capacity(n + 1);
        l.push(lam[0] - lam[1].max(mu[1]));
        for i in 1..n {
            l.push(lam[i].min(mu[i]) - lam[i + 1].max(mu[i + 1]));
        }
        l.push(lam[n].min(mu[n]));
        Self {
            l_values: l,
            target_exponent: mu[0] + 1,
        }
    }

    /// Coefficient of X^{target} in (X - X^{-1})^{-n} Π (X^{l_i+1} - X^{-(l_i+1)}).
    ///
    /// The series factor is X^{-n} Σ_j C(n-1+j, j) X^{-2j}; the truncation
    /// depth is exactly the one needed for exponents reaching the target from
    /// the finite numerator, never a heuristic cutoff.
    pub fn coefficient(&self, n: usize) -> Integer {
        if self.l_values.iter().any(|&l| l < 0) {
            return BigInt::zero();
        }
        // numerator Π (X^{l_i+1} - X^{-(l_i+1)}) as exponent -> coefficient
        let mut numer: std::collections::BTreeMap<i64, BigInt> = std::collections::BTreeMap::new();
        numer.insert(0, BigInt::one());
        for &l in &self.l_values {
            let e = l + 1;
            let mut next: std::collections::BTreeMap<i64, BigInt> =
                std::collections::BTreeMap::new();
            for (&exp, c) in &numer {
                *next.entry(exp + e).or_insert_with(BigInt::zero) += c;
                *next.entry(exp - e).or_insert_with(BigInt::zero) -= c;
            }
            next.retain(|_, c| !c.is_zero());
            numer = next;
        }
        // coefficient of X^t in numer * X^{-n} Σ_j C(n-1+j, j) X^{-2j}
        let t = self.target_exponent;
        let mut acc = BigInt::zero();
        for (&exp, c) in &numer {
            let gap = exp - n as i64 - t;
            if gap < 0 || gap % 2 != 0 {
                continue;
            }
            let j = (gap / 2) as u64;
            acc += c * binomial(n as u64 - 1 + j, j);
        }
        acc
    }
}

/// Sp(n+1) ↓ Sp(1)×Sp(n) branching multiplicity of the K-module
/// `mu = (μ_1; μ_2, ..., μ_{n+1})` in `V_lam` (Sp(1) label first).
pub fn sp_branch_multiplicity(lam: &Weight, mu: &Weight, n: usize) -> Result<Integer> {
    let g = GroupDescriptor::new(Series::C, n + 1)?;
    check_weight(lam, &g)?;
    if mu.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            got: mu.len(),
        });
    }
    if !is_dominant(lam, &g)? {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
            group: g.to_string(),
        });
    }
    let to_i64 = |w: &Weight| -> Result<Vec<i64>> {
        w.coords()
            .iter()
            .map(|c| {
                if !c.denom().is_one() {
                    return Err(Error::InvalidLabel(format!("non-integral label {w}")));
                }
                i64::try_from(&c.to_integer())
                    .map_err(|_| Error::InvalidLabel(format!("label {w} out of range")))
            })
            .collect()
    };
    let lam_i = to_i64(lam)?;
    let mu_i = to_i64(mu)?;
    // K-dominance of the label: μ_1 >= 0 and μ_2 >= ... >= μ_{n+1} >= 0
    if mu_i[0] < 0 || mu_i[1..].windows(2).any(|w| w[0] < w[1]) || mu_i[n] < 0 {
        return Err(Error::InvalidLabel(format!("mu = {mu} is not K-dominant")));
    }
    // interlacing precondition: λ_i >= μ_{i+1} >= λ_{i+2}, λ_n >= μ_{n+1}
    for i in 0..n.saturating_sub(1) {
        if lam_i[i] < mu_i[i + 1] || (i + 2 <= n && mu_i[i + 1] < lam_i[i + 2]) {
            return Ok(BigInt::zero());
        }
    }
    if lam_i[n - 1] < mu_i[n] {
        return Ok(BigInt::zero());
    }
    Ok(SpBranchData::new(&lam_i, &mu_i, n).coefficient(n))
}
