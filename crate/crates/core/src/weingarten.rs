//! Exact unitary Weingarten calculus: Gram matrices over the Baik-Rains
//! set, Weingarten tables by exact inversion, by characters, and as
//! truncated Jucys-Murphy series, plus the correlation-function formula for
//! Haar-unitary matrix-entry moments.

use crate::characters::{self, content_product, dimension};
use crate::class_algebra::{jm_eigenvalue_expansion, JmKind};
use crate::error::{Error, Result};
use crate::linalg::exact_inverse;
use crate::partition::Partition;
use crate::permutation::{enumerate_restricted, Permutation};
use crate::{factorial, Int, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// Largest Baik-Rains set we are willing to materialize as a dense matrix.
pub const MAX_GRAM_ROWS: usize = 5040;

/// Exact Weingarten values for fixed (d, N).
///
/// In the stable range d ≤ N the value depends only on the cycle type of
/// ρ⁻¹σ and the table collapses to one entry per partition; in the unstable
/// range d > N the restricted basis breaks class symmetry and the table is
/// keyed by permutation pairs over S_N(d).
pub enum WeingartenTable {
    Stable {
        d: usize,
        n: u32,
        by_class: BTreeMap<Partition, Rat>,
    },
    Unstable {
        d: usize,
        n: u32,
        perms: Vec<Permutation>,
        matrix: Vec<Vec<Rat>>,
    },
}

impl WeingartenTable {
    pub fn degree(&self) -> usize {
        match self {
            WeingartenTable::Stable { d, .. } | WeingartenTable::Unstable { d, .. } => *d,
        }
    }

    pub fn dimension_n(&self) -> u32 {
        match self {
            WeingartenTable::Stable { n, .. } | WeingartenTable::Unstable { n, .. } => *n,
        }
    }

    pub fn is_stable(&self) -> bool {
        matches!(self, WeingartenTable::Stable { .. })
    }

    /// Wg value for a cycle type; stable range only.
    pub fn class_value(&self, mu: &Partition) -> Option<&Rat> {
        match self {
            WeingartenTable::Stable { by_class, .. } => by_class.get(mu),
            WeingartenTable::Unstable { .. } => None,
        }
    }

    /// W_{ρσ} for a pair of permutations in S_N(d).
    pub fn pair_value(&self, rho: &Permutation, sigma: &Permutation) -> Result<Rat> {
        match self {
            WeingartenTable::Stable { by_class, .. } => {
                let t = rho.inverse().compose(sigma)?.cycle_type();
                Ok(by_class.get(&t).cloned().unwrap_or_else(Rat::zero))
            }
            WeingartenTable::Unstable { perms, matrix, .. } => {
                let i = perms
                    .iter()
                    .position(|p| p == rho)
                    .ok_or_else(|| Error::InvalidArgument(format!("{rho:?} not in S_N(d)")))?;
                let j = perms
                    .iter()
                    .position(|p| p == sigma)
                    .ok_or_else(|| Error::InvalidArgument(format!("{sigma:?} not in S_N(d)")))?;
                Ok(matrix[i][j].clone())
            }
        }
    }

    /// JSON export: {d, N, range, entries: [{class or pair, numerator,
    /// denominator}]}.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            WeingartenTable::Stable { d, n, by_class } => {
                let entries: Vec<_> = by_class
                    .iter()
                    .map(|(mu, v)| {
                        serde_json::json!({
                            "class": mu.parts(),
                            "numerator": v.numer().to_string(),
                            "denominator": v.denom().to_string(),
                        })
                    })
                    .collect();
                serde_json::json!({"d": d, "N": n, "range": "stable", "entries": entries})
            }
            WeingartenTable::Unstable { d, n, perms, matrix } => {
                let mut entries = Vec::new();
                for (i, rho) in perms.iter().enumerate() {
                    for (j, sigma) in perms.iter().enumerate() {
                        entries.push(serde_json::json!({
                            "pair": [rho.one_line(), sigma.one_line()],
                            "numerator": matrix[i][j].numer().to_string(),
                            "denominator": matrix[i][j].denom().to_string(),
                        }));
                    }
                }
                serde_json::json!({"d": d, "N": n, "range": "unstable", "entries": entries})
            }
        }
    }
}

/// The Gram matrix [N^{c(ρ⁻¹σ)}] over S_N(d) × S_N(d), together with its
/// index set.
pub fn gram_matrix(d: usize, n: u32) -> Result<(Vec<Permutation>, Vec<Vec<Int>>)> {
    let perms = enumerate_restricted(d, n as usize);
    if perms.len() > MAX_GRAM_ROWS {
        return Err(Error::Capacity(format!(
            "|S_{n}({d})| = {} exceeds the {MAX_GRAM_ROWS}-row materialization guard",
            perms.len()
        )));
    }
    let nn = Int::from(n);
    let matrix = perms
        .iter()
        .map(|rho| {
            let rho_inv = rho.inverse();
            perms
                .iter()
                .map(|sigma| nn.pow(rho_inv.compose(sigma).unwrap().cycle_count() as u32))
                .collect()
        })
        .collect();
    Ok((perms, matrix))
}

/// Exact rational inverse of the Gram matrix by fraction-free elimination.
/// In the stable range the result is additionally collapsed to a
/// per-cycle-type table, and the collapse is cross-checked entrywise.
pub fn weingarten_exact(d: usize, n: u32) -> Result<WeingartenTable> {
    let (perms, gram) = gram_matrix(d, n)?;
    let inverse = exact_inverse(&gram).map_err(|e| match e {
        Error::Singular(_) => Error::Singular(format!(
            "Gram matrix singular at (d={d}, N={n}); the restricted basis makes this impossible \
             unless the restriction was misapplied"
        )),
        other => other,
    })?;
    if d <= n as usize {
        let mut by_class: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (i, rho) in perms.iter().enumerate() {
            let rho_inv = rho.inverse();
            for (j, sigma) in perms.iter().enumerate() {
                let t = rho_inv.compose(sigma)?.cycle_type();
                match by_class.get(&t) {
                    Some(v) => {
                        if *v != inverse[i][j] {
                            return Err(Error::InvalidArgument(format!(
                                "stable-range Weingarten failed to collapse by cycle type at {t}"
                            )));
                        }
                    }
                    None => {
                        by_class.insert(t, inverse[i][j].clone());
                    }
                }
            }
        }
        Ok(WeingartenTable::Stable { d, n, by_class })
    } else {
        Ok(WeingartenTable::Unstable {
            d,
            n,
            perms,
            matrix: inverse,
        })
    }
}

/// Stable-range Weingarten table by characters:
/// Wg(π) = N^{−d} Σ_λ (dim λ/d!) χ^λ(π) Π_□ (1 + c(□)/N)^{−1}.
pub fn weingarten_by_characters(d: usize, n: u32) -> Result<WeingartenTable> {
    if (n as usize) < d {
        return Err(Error::InvalidArgument(format!(
            "character formula requires N >= d (got d={d}, N={n}): the content products hit \
             De Wit-'t Hooft poles below the stable range"
        )));
    }
    let table = characters::shared_table(d);
    let dfact = Rat::from(Int::from(factorial(d)));
    let n_rat = Rat::from(Int::from(n));
    let q = Rat::one() / &n_rat;
    let scale = n_rat.pow(d as i32).recip();
    let mut by_class = BTreeMap::new();
    // cache per-λ factors
    let factors: Vec<(Rat, Rat)> = table
        .partitions
        .iter()
        .map(|lambda| {
            let dim = Rat::from(Int::from(dimension(lambda)));
            let prod = content_product(lambda, &q);
            (dim, prod)
        })
        .collect();
    for mu in &table.partitions {
        let mut acc = Rat::zero();
        for (lambda, (dim, prod)) in table.partitions.iter().zip(&factors) {
            acc += dim / &dfact * Rat::from(table.value(lambda, mu).clone()) / prod;
        }
        by_class.insert(mu.clone(), acc * &scale);
    }
    Ok(WeingartenTable::Stable { d, n, by_class })
}

/// Truncated Jucys-Murphy series for the Weingarten function.
#[derive(Clone, Debug, Serialize)]
pub struct WeingartenSeries {
    pub d: usize,
    pub n: u32,
    pub order: usize,
    /// coefficient of (−q)^r per cycle type: [C_μ] h_r(Ξ_d)
    #[serde(skip)]
    pub coefficients: BTreeMap<Partition, Vec<Int>>,
    /// partial sums at q = 1/N, scaled by N^{−d}, per cycle type and order
    #[serde(skip)]
    pub partial_sums: BTreeMap<Partition, Vec<Rat>>,
    /// geometric tail-bound factor: converges iff (d−1)/N < 1
    pub ratio: f64,
}

/// Series coefficients (−1)^r [C_μ] h_r(Ξ_d) and the partial sums at
/// q = 1/N scaled by N^{−d}, through the given order.
pub fn weingarten_series(d: usize, n: u32, order: usize) -> WeingartenSeries {
    let mut coefficients: BTreeMap<Partition, Vec<Int>> = BTreeMap::new();
    let mut partial_sums: BTreeMap<Partition, Vec<Rat>> = BTreeMap::new();
    let n_rat = Rat::from(Int::from(n));
    let scale = n_rat.pow(d as i32).recip();
    for r in 0..=order {
        let h = jm_eigenvalue_expansion(r, d, JmKind::Complete);
        for mu in crate::partition::enumerate_partitions(d) {
            let c = h.coeff(&mu);
            assert!(c.is_integer(), "JM expansion coefficients are integers");
            let coeffs = coefficients.entry(mu.clone()).or_default();
            coeffs.push(c.to_integer());
            let term = {
                let sign = if r % 2 == 0 { Rat::one() } else { -Rat::one() };
                sign * &c / n_rat.pow(r as i32) * &scale
            };
            let sums = partial_sums.entry(mu.clone()).or_default();
            let prev = sums.last().cloned().unwrap_or_else(Rat::zero);
            sums.push(prev + term);
        }
    }
    WeingartenSeries {
        d,
        n,
        order,
        coefficients,
        partial_sums,
        ratio: (d as f64 - 1.0) / n as f64,
    }
}

/// ⟨II'|JJ'⟩ = Σ_{ρ·I=I'} Σ_{σ·J=J'} W_{ρσ} with ρ,σ ∈ S_N(d),
/// where (ρ·i)(k) = i(ρ(k)).  Index functions use 0-based values in 0..N.
/// Unbalanced degrees (|I| ≠ |I'|) integrate to zero.
pub fn correlation(
    i_un: &[usize],
    i_conj: &[usize],
    j_un: &[usize],
    j_conj: &[usize],
    n: u32,
) -> Result<Rat> {
    if i_un.len() != j_un.len() || i_conj.len() != j_conj.len() {
        return Err(Error::InvalidArgument(
            "row and column index lists must pair up".into(),
        ));
    }
    if i_un.len() != i_conj.len() {
        // r unconjugated vs s conjugated entries with r ≠ s
        return Ok(Rat::zero());
    }
    let d = i_un.len();
    if d == 0 {
        return Ok(Rat::one());
    }
    for &v in i_un.iter().chain(i_conj).chain(j_un).chain(j_conj) {
        if v >= n as usize {
            return Err(Error::InvalidArgument(format!(
                "index {v} out of range for N = {n}"
            )));
        }
    }
    let table = weingarten_exact(d, n)?;
    let perms = enumerate_restricted(d, n as usize);
    let acts = |p: &Permutation, from: &[usize], to: &[usize]| -> bool {
        (0..d).all(|k| from[p.apply(k)] == to[k])
    };
    let rhos: Vec<&Permutation> = perms.iter().filter(|p| acts(p, i_un, i_conj)).collect();
    let sigmas: Vec<&Permutation> = perms.iter().filter(|p| acts(p, j_un, j_conj)).collect();
    let mut acc = Rat::zero();
    for rho in &rhos {
        for sigma in &sigmas {
            acc += table.pair_value(rho, sigma)?;
        }
    }
    Ok(acc)
}
