//! The centre Z(d) of the symmetric group algebra: Jucys-Murphy
//! specializations e_r(Ξ_d) and h_r(Ξ_d), central-element arithmetic,
//! q-distance matrices of Cayley graphs of S(d), and their determinant
//! identities.
//!
//! Convention: a [`CentralElement`] stores the *per-permutation*
//! coefficient, keyed by cycle type — the common coefficient of every
//! permutation in the class, not the class-sum coefficient.  The two differ
//! by the class size |C_μ|.

use crate::characters::{self, central_eigenvalue, dimension, CharacterTable, SymmetricFunction};
use crate::error::{Error, Result};
use crate::linalg::{bareiss_determinant, bareiss_determinant_poly, determinant_mod_p};
use crate::partition::{enumerate_partitions, Partition};
use crate::permutation::{enumerate_symmetric_group, Permutation};
use crate::poly::IntPoly;
use crate::{factorial, Int, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// An element of the centre of ℚ[S(d)], as per-permutation coefficients
/// keyed by cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralElement {
    pub d: usize,
    coeffs: BTreeMap<Partition, Rat>,
}

/// Which Jucys-Murphy specialization to expand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JmKind {
    /// e_r(Ξ_d): strictly increasing larger entries.
    Elementary,
    /// h_r(Ξ_d): weakly increasing larger entries.
    Complete,
}

impl CentralElement {
    pub fn zero(d: usize) -> Self {
        CentralElement {
            d,
            coeffs: BTreeMap::new(),
        }
    }

    /// The identity of the group algebra.
    pub fn identity(d: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Partition::ones(d), Rat::one());
        CentralElement { d, coeffs }
    }

    /// The class sum C_μ (per-permutation coefficient 1 on the class).
    pub fn class_sum(mu: &Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mu.clone(), Rat::one());
        CentralElement {
            d: mu.degree(),
            coeffs,
        }
    }

    pub fn from_coeffs(d: usize, coeffs: BTreeMap<Partition, Rat>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        CentralElement { d, coeffs }
    }

    /// Per-permutation coefficient of the class μ.
    pub fn coeff(&self, mu: &Partition) -> Rat {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rat> {
        &self.coeffs
    }

    /// Coefficient of the identity permutation.
    pub fn identity_coeff(&self) -> Rat {
        self.coeff(&Partition::ones(self.d))
    }

    /// The scalar by which this element acts on V^λ:
    /// ω_λ = Σ_μ f_μ |C_μ| χ^λ(μ) / dim λ.
    pub fn eigenvalue(&self, lambda: &Partition, table: &CharacterTable) -> Rat {
        let mut acc = Rat::zero();
        for (mu, f) in &self.coeffs {
            acc += f * Rat::from(Int::from(mu.class_size())) * Rat::from(table.value(lambda, mu).clone());
        }
        acc / Rat::from(Int::from(dimension(lambda)))
    }

    /// Reconstructs the central element with prescribed eigenvalues:
    /// [π of type μ] = Σ_λ (dim λ / d!) χ^λ(μ) ω_λ.
    pub fn from_eigenvalues(
        d: usize,
        table: &CharacterTable,
        omega: &BTreeMap<Partition, Rat>,
    ) -> Self {
        let dfact = Rat::from(Int::from(factorial(d)));
        let mut coeffs = BTreeMap::new();
        for mu in &table.partitions {
            let mut acc = Rat::zero();
            for lambda in &table.partitions {
                let w = match omega.get(lambda) {
                    Some(w) if !w.is_zero() => w,
                    _ => continue,
                };
                acc += Rat::from(Int::from(dimension(lambda)))
                    * Rat::from(table.value(lambda, mu).clone())
                    * w;
            }
            let c = acc / &dfact;
            if !c.is_zero() {
                coeffs.insert(mu.clone(), c);
            }
        }
        CentralElement { d, coeffs }
    }

    /// Product in the group algebra via eigenvalue multiplication and
    /// reconstruction (Schur's lemma: central elements multiply by
    /// multiplying their per-irreducible scalars).
    pub fn multiply(&self, other: &CentralElement) -> Result<CentralElement> {
        if self.d != other.d {
            return Err(Error::DegreeMismatch(self.d, other.d));
        }
        let table = characters::shared_table(self.d);
        let mut omega = BTreeMap::new();
        for lambda in &table.partitions {
            let w = self.eigenvalue(lambda, &table) * other.eigenvalue(lambda, &table);
            omega.insert(lambda.clone(), w);
        }
        Ok(CentralElement::from_eigenvalues(self.d, &table, &omega))
    }

    /// Oracle product by direct convolution over permutation pairs;
    /// quadratic in d!, guarded at d <= 5.
    pub fn multiply_convolution(&self, other: &CentralElement) -> Result<CentralElement> {
        if self.d != other.d {
            return Err(Error::DegreeMismatch(self.d, other.d));
        }
        if self.d > 5 {
            return Err(Error::Capacity(format!(
                "convolution product materializes S({})^2",
                self.d
            )));
        }
        let group = enumerate_symmetric_group(self.d);
        let types: Vec<Partition> = group.iter().map(|p| p.cycle_type()).collect();
        let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (i, pi) in group.iter().enumerate() {
            let a = self.coeff(&types[i]);
            if a.is_zero() {
                continue;
            }
            for (j, rho) in group.iter().enumerate() {
                let b = other.coeff(&types[j]);
                if b.is_zero() {
                    continue;
                }
                let prod_type = pi.compose(rho)?.cycle_type();
                *acc.entry(prod_type).or_insert_with(Rat::zero) += &a * &b;
            }
        }
        // acc now holds total coefficient per class; divide by class size
        // to return to per-permutation convention.
        let mut coeffs = BTreeMap::new();
        for (mu, total) in acc {
            let per = total / Rat::from(Int::from(mu.class_size()));
            if !per.is_zero() {
                coeffs.insert(mu, per);
            }
        }
        Ok(CentralElement { d: self.d, coeffs })
    }

    pub fn add(&self, other: &CentralElement) -> Result<CentralElement> {
        if self.d != other.d {
            return Err(Error::DegreeMismatch(self.d, other.d));
        }
        let mut coeffs = self.coeffs.clone();
        for (mu, c) in &other.coeffs {
            *coeffs.entry(mu.clone()).or_insert_with(Rat::zero) += c;
        }
        Ok(CentralElement::from_coeffs(self.d, coeffs))
    }

    pub fn scale(&self, s: &Rat) -> CentralElement {
        CentralElement::from_coeffs(
            self.d,
            self.coeffs.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Exact class expansion of e_r(Ξ_d) or h_r(Ξ_d).
///
/// Two engines, both exposed:
/// - [`jm_walk_expansion`] enumerates the monotone transposition walks
///   directly (feasible for d ≤ 6, r ≤ 8);
/// - [`jm_eigenvalue_expansion`] reconstructs the element from its content
///   eigenvalues (feasible through d ≈ 14).
pub fn jm_action_coefficients(r: usize, d: usize, kind: JmKind) -> CentralElement {
    jm_eigenvalue_expansion(r, d, kind)
}

/// Engine (b): coefficient of any π of type μ is
/// Σ_λ (dim λ/d!) f(A_λ) χ^λ(μ) with f = e_r or h_r.
pub fn jm_eigenvalue_expansion(r: usize, d: usize, kind: JmKind) -> CentralElement {
    let table = characters::shared_table(d);
    let f = match kind {
        JmKind::Elementary => SymmetricFunction::Elementary(r),
        JmKind::Complete => SymmetricFunction::Complete(r),
    };
    let mut omega = BTreeMap::new();
    for lambda in &table.partitions {
        omega.insert(lambda.clone(), central_eigenvalue(f, lambda));
    }
    CentralElement::from_eigenvalues(d, &table, &omega)
}

/// Engine (a): direct enumeration of transposition words (s_1 t_1)...(s_r t_r)
/// with s_i < t_i and the t's strictly (elementary) or weakly (complete)
/// increasing.  Returns the per-permutation coefficients; panics if a class
/// fails to receive a constant coefficient (a sanity check on centrality).
pub fn jm_walk_expansion(r: usize, d: usize, kind: JmKind) -> Result<CentralElement> {
    if d > 6 || r > 8 {
        return Err(Error::Capacity(format!(
            "monotone walk enumeration guarded at d <= 6, r <= 8 (got d={d}, r={r})"
        )));
    }
    let group = enumerate_symmetric_group(d);
    let mut counts = vec![0u64; group.len()];
    let mut product: Vec<usize> = (0..d).collect();
    walk(&mut product, r, 1, kind, &mut counts, d);
    let mut per_class: BTreeMap<Partition, u64> = BTreeMap::new();
    for (idx, perm) in group.iter().enumerate() {
        if counts[idx] == 0 {
            continue;
        }
        let t = perm.cycle_type();
        match per_class.get(&t) {
            Some(&c) => assert_eq!(c, counts[idx], "non-central walk expansion at {t}"),
            None => {
                per_class.insert(t, counts[idx]);
            }
        }
    }
    // classes that received zero count on some permutation must be zero on all
    for (idx, perm) in group.iter().enumerate() {
        let t = perm.cycle_type();
        if let Some(&c) = per_class.get(&t) {
            assert_eq!(c, counts[idx], "non-central walk expansion at {t}");
        }
    }
    Ok(CentralElement::from_coeffs(
        d,
        per_class
            .into_iter()
            .map(|(mu, c)| (mu, Rat::from(Int::from(c))))
            .collect(),
    ))
}

fn walk(product: &mut Vec<usize>, remaining: usize, min_t: usize, kind: JmKind, counts: &mut [u64], d: usize) {
    if remaining == 0 {
        counts[Permutation::from_images(product.clone()).rank()] += 1;
        return;
    }
    for t in min_t..d {
        for s in 0..t {
            product.swap(s, t);
            let next_min = match kind {
                JmKind::Elementary => t + 1,
                JmKind::Complete => t,
            };
            walk(product, remaining - 1, next_min, kind, counts, d);
            product.swap(s, t);
        }
    }
}

/// True iff Σ_{i+j=r} (−1)^j e_i(Ξ_d) h_j(Ξ_d) = δ_{r,0}·id exactly in Z(d)
/// for every r ≤ r_max.
pub fn eh_reciprocity_check(d: usize, r_max: usize) -> bool {
    let e: Vec<CentralElement> = (0..=r_max)
        .map(|r| jm_eigenvalue_expansion(r, d, JmKind::Elementary))
        .collect();
    let h: Vec<CentralElement> = (0..=r_max)
        .map(|r| jm_eigenvalue_expansion(r, d, JmKind::Complete))
        .collect();
    for r in 0..=r_max {
        let mut acc = CentralElement::zero(d);
        for j in 0..=r {
            let i = r - j;
            let term = e[i].multiply(&h[j]).unwrap();
            let signed = if j % 2 == 0 { term } else { term.scale(&-Rat::one()) };
            acc = acc.add(&signed).unwrap();
        }
        let expected = if r == 0 {
            CentralElement::identity(d)
        } else {
            CentralElement::zero(d)
        };
        if acc != expected {
            return false;
        }
    }
    true
}

/// Generating set of the Cayley graph behind a q-distance matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratingSet {
    /// All transpositions; word norm |π| = d − c(π).
    AllTranspositions,
    /// Adjacent transpositions (Coxeter generators); word norm = inversions.
    AdjacentTranspositions,
}

/// The q-distance matrix Ω_q of Cay(S(d), T): entry (g,h) = q^{|g⁻¹h|}.
pub struct QDistanceMatrix {
    pub d: usize,
    pub generating_set: GeneratingSet,
    /// Permutations indexing rows/columns, in Lehmer-rank order.
    pub permutations: Vec<Permutation>,
    /// entries[i][j] = q^{|g_i⁻¹ g_j|} as a polynomial in q.
    pub entries: Vec<Vec<IntPoly>>,
}

/// Materializes the full d!×d! q-distance matrix; guarded at d ≤ 6.
pub fn q_distance_matrix(d: usize, generating_set: GeneratingSet) -> Result<QDistanceMatrix> {
    if d > 6 {
        return Err(Error::Capacity(format!(
            "q-distance matrices materialize d! x d! entries; d = {d} > 6"
        )));
    }
    let permutations = enumerate_symmetric_group(d);
    let entries: Vec<Vec<IntPoly>> = permutations
        .iter()
        .map(|g| {
            let g_inv = g.inverse();
            permutations
                .iter()
                .map(|h| {
                    let word = g_inv.compose(h).unwrap();
                    let norm = match generating_set {
                        GeneratingSet::AllTranspositions => word.transposition_norm(),
                        GeneratingSet::AdjacentTranspositions => word.inversions(),
                    };
                    IntPoly::monomial(Int::one(), norm)
                })
                .collect()
        })
        .collect();
    Ok(QDistanceMatrix {
        d,
        generating_set,
        permutations,
        entries,
    })
}

impl QDistanceMatrix {
    /// For the all-transpositions set, the equivalent Gram form
    /// N^d · Ω_{1/N} = [N^{c(ρ⁻¹σ)}] as an exact integer matrix.
    pub fn gram_form(&self, n: u32) -> Vec<Vec<Int>> {
        assert_eq!(self.generating_set, GeneratingSet::AllTranspositions);
        let nn = Int::from(n);
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| nn.pow((self.d - p.degree()) as u32))
                    .collect()
            })
            .collect()
    }

    /// Entries evaluated at a rational q.
    pub fn evaluate(&self, q: &Rat) -> Vec<Vec<Rat>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| {
                        let mut acc = Rat::zero();
                        let mut qk = Rat::one();
                        for c in &p.coeffs {
                            acc += Rat::from(c.clone()) * &qk;
                            qk *= q;
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}

/// Zagier's product formula for the adjacent-transposition q-distance
/// matrix: det Ω_q(A_{d−1}) = Π_{i=1}^{d−1} (1−q^{i(i+1)})^{C(d,i+1)(i−1)!(d−i)!}.
pub fn zagier_product_formula(d: usize) -> IntPoly {
    let mut acc = IntPoly::one();
    for i in 1..d {
        let exponent = (crate::binomial(d, i + 1) * factorial(i.saturating_sub(1)) * factorial(d - i))
            .to_usize()
            .expect("Zagier exponent fits usize");
        let factor = IntPoly::one_minus_power(i * (i + 1), exponent);
        acc = &acc * &factor;
    }
    acc
}

/// Symbolic check of Zagier's identity: the determinant of the
/// adjacent-transposition q-distance matrix equals the product formula as
/// polynomials in q.  Exact Bareiss over ℤ[q]; guarded at d ≤ 4 (the d!×d!
/// symbolic determinant grows steeply).
pub fn zagier_determinant_check(d: usize) -> Result<bool> {
    if !(2..=4).contains(&d) {
        return Err(Error::Capacity(format!(
            "symbolic Zagier check guarded at 2 <= d <= 4 (got {d}); use the modular check beyond"
        )));
    }
    let omega = q_distance_matrix(d, GeneratingSet::AdjacentTranspositions)?;
    let det = bareiss_determinant_poly(&omega.entries);
    Ok(det == zagier_product_formula(d))
}

/// Certified modular check of Zagier's identity, usable through d = 5.
///
/// Both sides are polynomials of degree D = Σ i(i+1)·C(d,i+1)(i−1)!(d−i)!
/// whose coefficients are bounded in absolute value by (d!)!: the
/// determinant expands into (d!)! monomials of coefficient ±1, and the
/// product side is one of the two polynomials being compared.  The sides
/// are compared at D+1 distinct integer points modulo enough 61-bit primes
/// that the combined modulus exceeds twice the bound, which certifies
/// equality over ℤ[q].
pub fn zagier_determinant_check_modular(d: usize) -> Result<bool> {
    if !(2..=5).contains(&d) {
        return Err(Error::Capacity(format!("modular Zagier check guarded at d <= 5 (got {d})")));
    }
    let omega = q_distance_matrix(d, GeneratingSet::AdjacentTranspositions)?;
    let rhs_factors: Vec<(u64, u64)> = (1..d)
        .map(|i| {
            let e = (crate::binomial(d, i + 1) * factorial(i.saturating_sub(1)) * factorial(d - i))
                .to_u64()
                .unwrap();
            ((i * (i + 1)) as u64, e)
        })
        .collect();
    let degree: u64 = rhs_factors.iter().map(|&(k, e)| k * e).sum();
    let group_order = omega.permutations.len();
    let coeff_bound_bits = factorial(group_order).bits() as usize + 2;
    let primes = prime_list(coeff_bound_bits / 61 + 1);
    let norms: Vec<Vec<usize>> = omega
        .entries
        .iter()
        .map(|row| row.iter().map(|p| p.degree()).collect())
        .collect();
    use rayon::prelude::*;
    for &p in &primes {
        let ok = (0..=degree).into_par_iter().all(|q| {
            let qm = q % p;
            let maxn = d * (d - 1) / 2;
            let mut pow = vec![1u64; maxn + 1];
            for k in 1..=maxn {
                pow[k] = ((pow[k - 1] as u128 * qm as u128) % p as u128) as u64;
            }
            let m: Vec<Vec<u64>> = norms
                .iter()
                .map(|row| row.iter().map(|&nr| pow[nr]).collect())
                .collect();
            let det = determinant_mod_p(&m, p);
            let mut rhs_val: u64 = 1;
            for &(k, e) in &rhs_factors {
                let qk = mod_pow(qm, k, p);
                let factor = (p + 1 - qk) % p;
                rhs_val = ((rhs_val as u128 * mod_pow(factor, e, p) as u128) % p as u128) as u64;
            }
            det == rhs_val
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn prime_list(count: usize) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut candidate = (1u64 << 61) + 1;
    while primes.len() < count {
        if is_prime(candidate) {
            primes.push(candidate);
        }
        candidate += 2;
    }
    primes
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % modulus as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus as u128;
        }
        b = b * b % modulus as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Exact check that det[N^{c(ρ⁻¹σ)}] over the full S(d) equals the
/// content-product formula Π_{λ⊢d} [Π_□ (N + c(□))]^{dim²λ}.
pub fn gram_determinant_check(d: usize, n: u32) -> Result<bool> {
    if d > 5 {
        return Err(Error::Capacity(format!("full Gram determinant guarded at d <= 5 (got {d})")));
    }
    let omega = q_distance_matrix(d, GeneratingSet::AllTranspositions)?;
    let gram = omega.gram_form(n);
    let det = bareiss_determinant(&gram);
    let mut formula = Int::one();
    for lambda in enumerate_partitions(d) {
        let dim = dimension(&lambda);
        let e =
            (&dim * &dim).to_u32().expect("dim^2 fits u32 for d <= 5");
        let mut base = Int::one();
        for c in characters::contents(&lambda) {
            base *= Int::from(n as i64 + c);
        }
        formula *= base.pow(e);
    }
    Ok(det == formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn e1_of_xi2_is_the_transposition_class() {
        let e1 = jm_eigenvalue_expansion(1, 2, JmKind::Elementary);
        assert_eq!(e1.coeff(&Partition::from([2])), Rat::one());
        assert_eq!(e1.coeff(&Partition::from([1, 1])), Rat::zero());
    }

    #[test]
    fn elementary_expansion_is_norm_filter() {
        // e_r(Ξ_d) = Σ_{|π|=r} π for d ≤ 5, r ≤ 4: the per-permutation
        // coefficient is 1 exactly on classes at transposition-norm r.
        for d in 1..=5 {
            for r in 0..=4usize {
                let e = jm_eigenvalue_expansion(r, d, JmKind::Elementary);
                for mu in enumerate_partitions(d) {
                    let norm = d - mu.len();
                    let expected = if norm == r { Rat::one() } else { Rat::zero() };
                    assert_eq!(e.coeff(&mu), expected, "d={d} r={r} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn walk_and_eigenvalue_engines_agree() {
        for d in 1..=5 {
            for r in 0..=6.min(8) {
                for kind in [JmKind::Elementary, JmKind::Complete] {
                    let a = jm_walk_expansion(r, d, kind).unwrap();
                    let b = jm_eigenvalue_expansion(r, d, kind);
                    assert_eq!(a, b, "d={d} r={r} {kind:?}");
                }
            }
        }
    }

    #[test]
    fn h2_of_xi3_identity_coefficient() {
        // Hand enumeration: h_2(Ξ_3) = J2² + J2J3 + J3²; the words landing
        // on the identity are (12)(12), (13)(13), (23)(23), so the
        // coefficient of id is 3.
        let h2 = jm_eigenvalue_expansion(2, 3, JmKind::Complete);
        assert_eq!(h2.identity_coeff(), rat(3, 1));
        let walk = jm_walk_expansion(2, 3, JmKind::Complete).unwrap();
        assert_eq!(walk.identity_coeff(), rat(3, 1));
    }

    #[test]
    fn multiply_examples() {
        // Z · identity = Z
        let z = CentralElement::class_sum(&Partition::from([3, 2]));
        let id = CentralElement::identity(5);
        assert_eq!(z.multiply(&id).unwrap(), z);

        // C_(2)² = id in S(2)
        let c2 = CentralElement::class_sum(&Partition::from([2]));
        assert_eq!(c2.multiply(&c2).unwrap(), CentralElement::identity(2));

        // C_(2,1)² = 3 C_(1³) + 3 C_(3) in S(3), in class-sum normalization;
        // per-permutation coefficients are 3 on id and 3 on each 3-cycle.
        let c21 = CentralElement::class_sum(&Partition::from([2, 1]));
        let sq = c21.multiply(&c21).unwrap();
        assert_eq!(sq.coeff(&Partition::from([1, 1, 1])), rat(3, 1));
        assert_eq!(sq.coeff(&Partition::from([3])), rat(3, 1));
        assert_eq!(sq.coeff(&Partition::from([2, 1])), Rat::zero());
    }

    #[test]
    fn multiply_agrees_with_convolution_oracle() {
        for d in 2..=5 {
            let parts = enumerate_partitions(d);
            for a in &parts {
                for b in &parts {
                    let za = CentralElement::class_sum(a);
                    let zb = CentralElement::class_sum(b);
                    let fast = za.multiply(&zb).unwrap();
                    let slow = za.multiply_convolution(&zb).unwrap();
                    assert_eq!(fast, slow, "d={d} {a}·{b}");
                }
            }
        }
    }

    #[test]
    fn multiply_commutative_and_associative_on_class_sums() {
        let d = 5;
        let parts = enumerate_partitions(d);
        let picks = [
            (&parts[0], &parts[2], &parts[4]),
            (&parts[1], &parts[3], &parts[5]),
            (&parts[6], &parts[2], &parts[1]),
        ];
        for (a, b, c) in picks {
            let (za, zb, zc) = (
                CentralElement::class_sum(a),
                CentralElement::class_sum(b),
                CentralElement::class_sum(c),
            );
            assert_eq!(za.multiply(&zb).unwrap(), zb.multiply(&za).unwrap());
            let left = za.multiply(&zb).unwrap().multiply(&zc).unwrap();
            let right = za.multiply(&zb.multiply(&zc).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn eigenvalue_of_product_is_product_of_eigenvalues() {
        for d in 2..=6 {
            let table = characters::shared_table(d);
            let a = CentralElement::class_sum(&Partition::transposition(d));
            let b = jm_eigenvalue_expansion(2, d, JmKind::Complete);
            let prod = a.multiply(&b).unwrap();
            for lambda in &table.partitions {
                assert_eq!(
                    prod.eigenvalue(lambda, &table),
                    a.eigenvalue(lambda, &table) * b.eigenvalue(lambda, &table),
                    "d={d} λ={lambda}"
                );
            }
        }
    }

    #[test]
    fn reciprocity_small_degrees() {
        assert!(eh_reciprocity_check(1, 6));
        assert!(eh_reciprocity_check(2, 6));
        assert!(eh_reciprocity_check(5, 6));
    }

    #[test]
    fn q_distance_examples() {
        // d=2, all transpositions: [[1,q],[q,1]]
        let m = q_distance_matrix(2, GeneratingSet::AllTranspositions).unwrap();
        assert_eq!(m.entries[0][0], IntPoly::one());
        assert_eq!(m.entries[0][1], IntPoly::monomial(Int::one(), 1));
        // Gram form at N: [[N²,N],[N,N²]]
        let gram = m.gram_form(3);
        assert_eq!(gram[0][0], Int::from(9));
        assert_eq!(gram[0][1], Int::from(3));
        // d=3 adjacent: entry (id, reversal) = q³
        let m3 = q_distance_matrix(3, GeneratingSet::AdjacentTranspositions).unwrap();
        let rev = Permutation::from_one_line(&[3, 2, 1]);
        let j = m3.permutations.iter().position(|p| *p == rev).unwrap();
        assert_eq!(m3.entries[0][j], IntPoly::monomial(Int::one(), 3));
    }

    #[test]
    fn zagier_identity_small() {
        // d=2: det = 1 − q²
        let omega = q_distance_matrix(2, GeneratingSet::AdjacentTranspositions).unwrap();
        let det = bareiss_determinant_poly(&omega.entries);
        assert_eq!(det, IntPoly::one_minus_power(2, 1));
        assert!(zagier_determinant_check(2).unwrap());
        // d=3: det = (1−q²)⁶(1−q⁶), exponents C(3,2)·0!·2! = 6 and
        // C(3,3)·1!·1! = 1
        let omega3 = q_distance_matrix(3, GeneratingSet::AdjacentTranspositions).unwrap();
        let det3 = bareiss_determinant_poly(&omega3.entries);
        let expected = &IntPoly::one_minus_power(2, 6) * &IntPoly::one_minus_power(6, 1);
        assert_eq!(det3, expected);
        assert!(zagier_determinant_check(3).unwrap());
    }

    #[test]
    fn zagier_modular_agrees_with_symbolic_at_d4() {
        assert!(zagier_determinant_check(4).unwrap());
        assert!(zagier_determinant_check_modular(4).unwrap());
    }

    #[test]
    fn gram_determinant_examples() {
        // d=2, N=3: det = 81−9 = 72 = (3·4)(3·2)
        assert!(gram_determinant_check(2, 3).unwrap());
        let omega = q_distance_matrix(2, GeneratingSet::AllTranspositions).unwrap();
        assert_eq!(bareiss_determinant(&omega.gram_form(3)), Int::from(72));
        // d=2, N=1: singular below the stable range
        assert_eq!(bareiss_determinant(&omega.gram_form(1)), Int::zero());
        assert!(gram_determinant_check(2, 1).unwrap());
        // d=3, N=2: both sides vanish
        assert!(gram_determinant_check(3, 2).unwrap());
        let omega3 = q_distance_matrix(3, GeneratingSet::AllTranspositions).unwrap();
        assert_eq!(bareiss_determinant(&omega3.gram_form(2)), Int::zero());
    }

    #[test]
    fn gram_singular_exactly_below_stable_range() {
        for d in 2..=5usize {
            let omega = q_distance_matrix(d, GeneratingSet::AllTranspositions).unwrap();
            for n in 1..=(d as u32 + 2) {
                let det = bareiss_determinant(&omega.gram_form(n));
                if (n as usize) < d {
                    assert!(det.is_zero(), "d={d} N={n} should be singular");
                } else {
                    assert!(!det.is_zero(), "d={d} N={n} should be invertible");
                }
            }
        }
    }
}
