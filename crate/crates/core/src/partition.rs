//! Integer partitions: cycle types of permutations, shapes of Young
//! diagrams, and index sets for all sums over `alpha, beta ⊢ d`.

use crate::{factorial, Nat};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition of a non-negative integer: weakly decreasing positive parts.
///
/// The empty partition (of 0) is allowed; it is the unit for
/// [`Partition::merge`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^d)`: the cycle type of the identity.
    pub fn ones(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    /// `(2, 1^{d-2})`: the class of transpositions; requires d >= 2.
    pub fn transposition(d: usize) -> Self {
        assert!(d >= 2);
        let mut parts = vec![1; d - 1];
        parts[0] = 2;
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts (the degree d).
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts ℓ.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(value, multiplicity)` pairs, values strictly decreasing.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// |Aut(α)|: product of m_v! over distinct part values v.
    pub fn aut_order(&self) -> Nat {
        self.multiplicities()
            .iter()
            .map(|&(_, m)| factorial(m))
            .product()
    }

    /// z_α = Π v^{m_v} m_v!, the order of the centralizer of a permutation
    /// of cycle type α.
    pub fn centralizer_order(&self) -> Nat {
        let mut z = Nat::one();
        for (v, m) in self.multiplicities() {
            z *= Nat::from(v).pow(m as u32) * factorial(m);
        }
        z
    }

    /// |C_α| = d!/z_α, the size of the conjugacy class with this cycle type.
    pub fn class_size(&self) -> Nat {
        factorial(self.degree()) / self.centralizer_order()
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Multiset union of two partitions.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Multiset difference `self \ sub`; None when `sub` is not contained
    /// in `self` as a multiset.
    pub fn remove(&self, sub: &Partition) -> Option<Partition> {
        let mut remaining = self.parts.clone();
        for &p in &sub.parts {
            let idx = remaining.iter().position(|&q| q == p)?;
            remaining.remove(idx);
        }
        Some(Partition { parts: remaining })
    }

    /// All distinct sub-multisets, each exactly once (including the empty
    /// partition and `self`).
    pub fn sub_multisets(&self) -> Vec<Partition> {
        let mult = self.multiplicities();
        let mut out = vec![Vec::new()];
        for (v, m) in mult {
            let mut next = Vec::with_capacity(out.len() * (m + 1));
            for chosen in &out {
                for take in 0..=m {
                    let mut c = chosen.clone();
                    c.extend(std::iter::repeat(v).take(take));
                    next.push(c);
                }
            }
            out = next;
        }
        out.into_iter().map(Partition::new).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// All partitions of `d` in reverse lexicographic order, so `(d)` comes
/// first and `(1^d)` last.  `d = 0` yields the single empty partition.
pub fn enumerate_partitions(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(d, d, &mut current, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        descend(remaining - p, p, current, out);
        current.pop();
    }
}

/// p(d), the number of partitions of d (by direct enumeration).
pub fn partition_count(d: usize) -> usize {
    enumerate_partitions(d).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorial;
    use proptest::prelude::*;

    /// Independent oracle for p(d): the Euler recurrence with generalized
    /// pentagonal numbers, sharing no code with the enumerator.
    fn partition_count_pentagonal(n: usize) -> i64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[m - g1 as usize];
                if g2 as usize <= m {
                    acc += sign * p[m - g2 as usize];
                }
                k += 1;
            }
            p[m] = acc;
        }
        p[n]
    }

    #[test]
    fn enumerate_counts_match_pentagonal_recurrence() {
        // d=4 -> 5 and d=8 -> 22 are the spec examples; the oracle covers
        // the whole range.
        assert_eq!(enumerate_partitions(1).len(), 1);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(8).len(), 22);
        for d in 0..=20 {
            assert_eq!(
                enumerate_partitions(d).len() as i64,
                partition_count_pentagonal(d),
                "p({d})"
            );
        }
    }

    #[test]
    fn enumerate_is_reverse_lexicographic_and_valid() {
        let parts = enumerate_partitions(4);
        let listed: Vec<Vec<usize>> = parts.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            listed,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        for p in &parts {
            assert_eq!(p.degree(), 4);
            assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn enumerate_zero() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn aut_order_examples() {
        assert_eq!(Partition::from([1, 1, 1]).aut_order(), Nat::from(6u8));
        assert_eq!(Partition::from([2, 1]).aut_order(), Nat::from(1u8));
        // 2!·3! = 12
        assert_eq!(Partition::from([2, 2, 1, 1, 1]).aut_order(), Nat::from(12u8));
    }

    #[test]
    fn class_size_examples() {
        assert_eq!(Partition::from([1, 1]).class_size(), Nat::from(1u8));
        assert_eq!(Partition::from([2]).class_size(), Nat::from(1u8));
        // transpositions in S(3)
        assert_eq!(Partition::from([2, 1]).class_size(), Nat::from(3u8));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for d in 1..=7 {
            let total: Nat = enumerate_partitions(d).iter().map(|a| a.class_size()).sum();
            assert_eq!(total, factorial(d), "d = {d}");
        }
    }

    #[test]
    fn conjugate_involution_and_shape() {
        let p = Partition::from([3, 2]);
        assert_eq!(p.conjugate(), Partition::from([2, 2, 1]));
        for d in 0..=8 {
            for p in enumerate_partitions(d) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn sub_multisets_counts() {
        // (2,2,1): (2+1)·(1+1) = 6 distinct sub-multisets
        let subs = Partition::from([2, 2, 1]).sub_multisets();
        assert_eq!(subs.len(), 6);
        let p = Partition::from([2, 2, 1]);
        for s in &subs {
            let rest = p.remove(s).expect("sub-multiset must be removable");
            assert_eq!(rest.merge(s), p);
        }
    }

    proptest! {
        #[test]
        fn merge_remove_roundtrip(a in proptest::collection::vec(1usize..6, 0..5),
                                  b in proptest::collection::vec(1usize..6, 0..5)) {
            let pa = Partition::new(a);
            let pb = Partition::new(b);
            let merged = pa.merge(&pb);
            prop_assert_eq!(merged.degree(), pa.degree() + pb.degree());
            prop_assert_eq!(merged.remove(&pb).unwrap(), pa);
        }

        #[test]
        fn centralizer_times_class_is_group_order(d in 1usize..8, idx in 0usize..100) {
            let parts = enumerate_partitions(d);
            let p = &parts[idx % parts.len()];
            prop_assert_eq!(p.class_size() * p.centralizer_order(), factorial(d));
        }
    }
}
