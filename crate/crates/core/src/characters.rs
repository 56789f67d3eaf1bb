//! Irreducible character theory of the symmetric group: dimensions by hook
//! lengths, content multisets, Murnaghan-Nakayama character values, and
//! central eigenvalues of symmetric functions specialized on Jucys-Murphy
//! elements.
//!
//! All arithmetic in this module is exact; no floating point anywhere.

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::{factorial, Int, Nat, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Shared per-degree character tables: built once (single-threaded), then
/// handed out read-only behind an `Arc` for concurrent lookups.
pub fn shared_table(d: usize) -> Arc<CharacterTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(d)
        .or_insert_with(|| Arc::new(CharacterTable::build(d)))
        .clone()
}

/// A Young diagram: shape plus its derived content multiset and dimension.
#[derive(Clone, Debug)]
pub struct YoungDiagram {
    pub shape: Partition,
    /// Multiset of contents {column − row} over boxes, 0-indexed.
    pub contents: Vec<i64>,
    /// Number of standard Young tableaux of this shape.
    pub dim: Nat,
}

impl YoungDiagram {
    pub fn new(shape: Partition) -> Self {
        let contents = contents(&shape);
        let dim = dimension(&shape);
        YoungDiagram { shape, contents, dim }
    }
}

/// Contents {j − i : box (i,j)}, 0-indexed, row-major.
pub fn contents(shape: &Partition) -> Vec<i64> {
    let mut out = Vec::with_capacity(shape.degree());
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            out.push(j as i64 - i as i64);
        }
    }
    out
}

/// Hook lengths of every box, row-major.
pub fn hook_lengths(shape: &Partition) -> Vec<usize> {
    let conj = shape.conjugate();
    let mut out = Vec::with_capacity(shape.degree());
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - 1 - j;
            let leg = conj.parts()[j] - 1 - i;
            out.push(arm + leg + 1);
        }
    }
    out
}

/// dim V^λ = d! / Π hooks(λ).
pub fn dimension(shape: &Partition) -> Nat {
    let mut hooks = Nat::one();
    for h in hook_lengths(shape) {
        hooks *= Nat::from(h);
    }
    factorial(shape.degree()) / hooks
}

/// χ^λ(μ) by the Murnaghan-Nakayama border-strip recursion, memoized.
///
/// Build one table per degree and share it; lookups after [`build`] are
/// read-only and safe from any thread.
pub struct CharacterTable {
    pub d: usize,
    values: HashMap<(Partition, Partition), Int>,
    pub partitions: Vec<Partition>,
}

impl CharacterTable {
    pub fn build(d: usize) -> Self {
        let partitions = enumerate_partitions(d);
        let mut values = HashMap::new();
        let mut memo: HashMap<(Vec<usize>, Vec<usize>), Int> = HashMap::new();
        for lambda in &partitions {
            for mu in &partitions {
                let v = mn_value(lambda.parts(), mu.parts(), &mut memo);
                values.insert((lambda.clone(), mu.clone()), v);
            }
        }
        CharacterTable { d, values, partitions }
    }

    /// χ^λ(μ); both arguments must be partitions of `self.d`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> &Int {
        self.values
            .get(&(lambda.clone(), mu.clone()))
            .expect("character table lookup outside degree")
    }

    /// Test-fixture hook: overwrite a single entry.  Used by the
    /// verification suite's negative control; never called on the normal
    /// computation paths.
    pub fn corrupt(&mut self, lambda: &Partition, mu: &Partition, v: Int) {
        self.values.insert((lambda.clone(), mu.clone()), v);
    }
}

/// χ^λ(μ) for a pair of partitions of the same degree.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<Int> {
    if lambda.degree() != mu.degree() {
        return Err(Error::DegreeMismatch(lambda.degree(), mu.degree()));
    }
    let mut memo = HashMap::new();
    Ok(mn_value(lambda.parts(), mu.parts(), &mut memo))
}

/// Recursive Murnaghan-Nakayama: strip a border strip of length mu[0] from
/// λ in every legal way, recurse on the rest of μ.
fn mn_value(
    lambda: &[usize],
    mu: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), Int>,
) -> Int {
    if mu.is_empty() {
        return if lambda.is_empty() { Int::one() } else { Int::zero() };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let strip = mu[0];
    let rest = &mu[1..];
    let rows = lambda.len();
    let mut total = Int::zero();
    // A border strip of length `strip` is removed by choosing the rows
    // start..=end it touches; in the beta-set picture this is subtracting
    // `strip` from one first-column hook length.
    // Work with first-column hook lengths (beta-set) for a clean bijection.
    let beta: Vec<i64> = (0..rows)
        .map(|i| lambda[i] as i64 + (rows - 1 - i) as i64)
        .collect();
    for i in 0..rows {
        let target = beta[i] - strip as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        // height of the strip = number of beta entries jumped over
        let height = beta.iter().filter(|&&b| target < b && b < beta[i]).count();
        let sign = if height % 2 == 0 { Int::one() } else { -Int::one() };
        // convert back to a partition, dropping trailing zeros
        let m = nb.len();
        let mut next: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (m - 1 - j) as i64) as usize)
            .collect();
        while next.last() == Some(&0) {
            next.pop();
        }
        total += sign * mn_value(&next, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Symmetric functions we specialize on content multisets.
#[derive(Clone, Copy, Debug)]
pub enum SymmetricFunction {
    /// e_r: sum of products over strictly increasing index tuples.
    Elementary(usize),
    /// h_r: sum of products over weakly increasing index tuples.
    Complete(usize),
}

/// f(A_λ): the scalar by which f(Ξ_d) acts on V^λ.  Padding the content
/// multiset with zeros is inert for e_r, h_r and monomials, so the finite
/// content list is used as-is.
pub fn central_eigenvalue(f: SymmetricFunction, shape: &Partition) -> Rat {
    let c = contents(shape);
    match f {
        SymmetricFunction::Elementary(r) => Rat::from(elementary_on(&c, r)),
        SymmetricFunction::Complete(r) => Rat::from(complete_on(&c, r)),
    }
}

/// e_r evaluated on an integer multiset.
pub fn elementary_on(xs: &[i64], r: usize) -> Int {
    if r > xs.len() {
        return Int::zero();
    }
    // dp[k] = e_k of the prefix
    let mut dp = vec![Int::zero(); r + 1];
    dp[0] = Int::one();
    for &x in xs {
        for k in (1..=r).rev() {
            let add = &dp[k - 1] * Int::from(x);
            dp[k] += add;
        }
    }
    dp[r].clone()
}

/// h_r evaluated on an integer multiset.
pub fn complete_on(xs: &[i64], r: usize) -> Int {
    complete_series(xs, r).pop().unwrap()
}

/// [h_0, h_1, ..., h_r] on an integer multiset, via the product of
/// geometric series Π 1/(1 − x t).
pub fn complete_series(xs: &[i64], r: usize) -> Vec<Int> {
    let mut h = vec![Int::zero(); r + 1];
    h[0] = Int::one();
    for &x in xs {
        for k in 1..=r {
            let add = &h[k - 1] * Int::from(x);
            h[k] += add;
        }
    }
    h
}

/// Π over boxes of (1 + q·c(□)) at a rational q.
pub fn content_product(shape: &Partition, q: &Rat) -> Rat {
    let mut prod = Rat::one();
    for c in contents(shape) {
        prod *= Rat::one() + q * Rat::from(Int::from(c));
    }
    prod
}

/// Sign of the conjugacy class μ: (−1)^{d − ℓ(μ)}.
pub fn class_sign(mu: &Partition) -> Int {
    if (mu.degree() - mu.len()) % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use num_traits::ToPrimitive;

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&Partition::from([4])), Nat::one());
        // standard tableaux of (2,1): 2 (counted by hand)
        assert_eq!(dimension(&Partition::from([2, 1])), Nat::from(2u8));
        // standard tableaux of (2,2): 2 (counted by hand)
        assert_eq!(dimension(&Partition::from([2, 2])), Nat::from(2u8));
    }

    #[test]
    fn dimension_squares_sum_to_group_order() {
        for d in 1..=8 {
            let total: Nat = enumerate_partitions(d)
                .iter()
                .map(|p| {
                    let dim = dimension(p);
                    &dim * &dim
                })
                .sum();
            assert_eq!(total, factorial(d), "d = {d}");
        }
    }

    #[test]
    fn contents_examples() {
        let sort = |mut v: Vec<i64>| {
            v.sort_unstable();
            v
        };
        assert_eq!(sort(contents(&Partition::from([2]))), vec![0, 1]);
        assert_eq!(sort(contents(&Partition::from([1, 1]))), vec![-1, 0]);
        assert_eq!(sort(contents(&Partition::from([3, 2]))), vec![-1, 0, 0, 1, 2]);
    }

    #[test]
    fn contents_of_conjugate_are_negated() {
        for d in 1..=8 {
            for p in enumerate_partitions(d) {
                let mut a = contents(&p);
                let mut b: Vec<i64> = contents(&p.conjugate()).iter().map(|c| -c).collect();
                a.sort_unstable();
                b.sort_unstable();
                assert_eq!(a, b, "{p}");
            }
        }
    }

    /// The full 3x3 character table of S(3), derived independently from
    /// column orthogonality plus the known trivial/sign rows.
    #[test]
    fn s3_table_matches_orthogonality_solution() {
        // classes (1^3), (2,1), (3); irreducibles (3), (2,1), (1^3).
        // Trivial row: 1 1 1.  Sign row: 1 -1 1.  Remaining row (a,b,c):
        // orthogonality with z-weights 6,2,3 forces (2,0,-1).
        let t = CharacterTable::build(3);
        let triv = Partition::from([3]);
        let std = Partition::from([2, 1]);
        let sgn = Partition::from([1, 1, 1]);
        let c1 = Partition::from([1, 1, 1]);
        let c2 = Partition::from([2, 1]);
        let c3 = Partition::from([3]);
        for mu in [&c1, &c2, &c3] {
            assert_eq!(t.value(&triv, mu), &Int::one());
        }
        assert_eq!(t.value(&sgn, &c1), &Int::one());
        assert_eq!(t.value(&sgn, &c2), &(-Int::one()));
        assert_eq!(t.value(&sgn, &c3), &Int::one());
        assert_eq!(t.value(&std, &c1), &Int::from(2));
        assert_eq!(t.value(&std, &c2), &Int::zero());
        assert_eq!(t.value(&std, &c3), &(-Int::one()));
    }

    #[test]
    fn trivial_and_sign_characters() {
        for d in 1..=7 {
            let t = CharacterTable::build(d);
            let triv = Partition::from(vec![d].as_slice());
            let sgn = Partition::ones(d);
            for mu in &t.partitions {
                assert_eq!(t.value(&triv, mu), &Int::one(), "trivial at {mu}");
                assert_eq!(t.value(&sgn, mu), &class_sign(mu), "sign at {mu}");
            }
        }
    }

    #[test]
    fn column_orthogonality_exact() {
        for d in 1..=7 {
            let t = CharacterTable::build(d);
            for mu in &t.partitions {
                for nu in &t.partitions {
                    let mut sum = Int::zero();
                    for lambda in &t.partitions {
                        sum += t.value(lambda, mu) * t.value(lambda, nu);
                    }
                    let expected = if mu == nu {
                        Int::from(mu.centralizer_order())
                    } else {
                        Int::zero()
                    };
                    assert_eq!(sum, expected, "d={d} mu={mu} nu={nu}");
                }
            }
        }
    }

    #[test]
    fn character_at_identity_is_dimension() {
        for d in 1..=7 {
            let t = CharacterTable::build(d);
            let id = Partition::ones(d);
            for lambda in &t.partitions {
                assert_eq!(
                    t.value(lambda, &id).to_biguint().unwrap(),
                    dimension(lambda),
                    "{lambda}"
                );
            }
        }
    }

    /// Brute-force character of the permutation representation of S(d) on
    /// functions [d] -> [d] restricted to... simplest honest check: the
    /// regular-representation decomposition Σ_λ dim(λ)·χ^λ(μ) must equal
    /// d!·[μ = identity class].
    #[test]
    fn regular_representation_trace() {
        for d in 1..=6 {
            let t = CharacterTable::build(d);
            for mu in &t.partitions {
                let mut sum = Int::zero();
                for lambda in &t.partitions {
                    sum += Int::from(dimension(lambda)) * t.value(lambda, mu);
                }
                let expected = if *mu == Partition::ones(d) {
                    Int::from(factorial(d))
                } else {
                    Int::zero()
                };
                assert_eq!(sum, expected, "d={d} mu={mu}");
            }
        }
    }

    /// χ^{(2,1)}((3)) = −1, cross-checked against an explicit trace: the
    /// standard representation is the permutation representation minus the
    /// trivial one, so χ(μ) = fix(μ) − 1.
    #[test]
    fn standard_representation_is_fixed_points_minus_one() {
        for d in 2..=6 {
            let t = CharacterTable::build(d);
            let std = if d == 2 {
                Partition::from([1, 1])
            } else {
                Partition::new(vec![d - 1, 1])
            };
            for mu in &t.partitions {
                let fixed = mu.parts().iter().filter(|&&p| p == 1).count() as i64;
                assert_eq!(
                    t.value(&std, mu).to_i64().unwrap(),
                    fixed - 1,
                    "d={d} mu={mu}"
                );
            }
        }
    }

    #[test]
    fn central_eigenvalue_examples() {
        // e_1 on (2): contents {0,1} -> 1
        assert_eq!(
            central_eigenvalue(SymmetricFunction::Elementary(1), &Partition::from([2])),
            Rat::from(Int::from(1))
        );
        // h_2 on (1,1): contents {0,-1}: monomials 0·0, 0·(-1), (-1)(-1) -> 1
        assert_eq!(
            central_eigenvalue(SymmetricFunction::Complete(2), &Partition::from([1, 1])),
            Rat::from(Int::from(1))
        );
        // Π(1 + q c) on (2,1) at q = 1/2: (1)(3/2)(1/2) = 3/4
        assert_eq!(
            content_product(&Partition::from([2, 1]), &crate::rat(1, 2)),
            crate::rat(3, 4)
        );
    }

    /// Independent oracle for h_r and e_r: direct monomial expansion over
    /// all (weakly) increasing index tuples.
    fn monomial_sum(xs: &[i64], r: usize, strict: bool) -> Int {
        fn rec(xs: &[i64], r: usize, start: usize, strict: bool) -> Int {
            if r == 0 {
                return Int::one();
            }
            let mut acc = Int::zero();
            for i in start..xs.len() {
                let next = if strict { i + 1 } else { i };
                acc += Int::from(xs[i]) * rec(xs, r - 1, next, strict);
            }
            acc
        }
        rec(xs, r, 0, strict)
    }

    #[test]
    fn symmetric_function_dp_matches_monomial_expansion() {
        let xs = [0i64, 1, -1, 2, 3];
        for r in 0..=5 {
            assert_eq!(elementary_on(&xs, r), monomial_sum(&xs, r, true), "e_{r}");
            assert_eq!(complete_on(&xs, r), monomial_sum(&xs, r, false), "h_{r}");
        }
    }

    #[test]
    fn zero_padding_is_inert() {
        let xs = [1i64, -2, 3];
        let padded = [1i64, -2, 3, 0, 0, 0];
        for r in 0..=4 {
            assert_eq!(elementary_on(&xs, r), elementary_on(&padded, r));
            assert_eq!(complete_on(&xs, r), complete_on(&padded, r));
        }
    }
}
