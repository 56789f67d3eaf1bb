//! Permutations of {1..d} in one-line form, with the handful of predicates
//! the factorization counts and Gram matrices need.
//!
//! Composition convention, fixed globally: `(π∘ρ)(k) = π(ρ(k))` — the right
//! factor acts first.  All factorization conditions in this crate are stated
//! relative to this convention.

use crate::error::{Error, Result};
use crate::partition::Partition;
use std::fmt;

/// A permutation of {1..d}.  Internally images are 0-based:
/// `images[k] = π(k)` with both sides in `0..d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds from 0-based images; panics unless they form a bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            assert!(i < d && !seen[i], "images must be a bijection of 0..d");
            seen[i] = true;
        }
        Permutation { images }
    }

    /// Builds from the 1-based one-line form `[π(1), ..., π(d)]`.
    pub fn from_one_line(line: &[usize]) -> Self {
        Permutation::from_images(line.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d).collect(),
        }
    }

    /// The transposition (s t), 0-based, s != t.
    pub fn transposition(d: usize, s: usize, t: usize) -> Self {
        assert!(s < d && t < d && s != t);
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(s, t);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// `(self∘other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v] = k;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles, each rotated to start at its smallest point (0-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut cycles = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut k = self.images[start];
            while k != start {
                seen[k] = true;
                cycle.push(k);
                k = self.images[k];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle type as a partition of d.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len()).collect())
    }

    /// Number of cycles c(π), counting fixed points.
    pub fn cycle_count(&self) -> usize {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut count = 0;
        for start in 0..d {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k];
            }
        }
        count
    }

    /// Word norm |π| = d − c(π) with respect to all transpositions.
    pub fn transposition_norm(&self) -> usize {
        self.degree() - self.cycle_count()
    }

    /// Number of inversions, the word norm with respect to adjacent
    /// transpositions.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Length of the longest strictly decreasing subsequence of the
    /// one-line form (patience sorting on the reversed order).
    pub fn longest_decreasing_subsequence(&self) -> usize {
        // piles[i] holds the largest tail value of a decreasing subsequence
        // of length i+1; tails are strictly increasing across piles.
        let mut piles: Vec<usize> = Vec::new();
        for &v in &self.images {
            // first pile whose tail is <= v gets replaced by v
            match piles.binary_search_by(|tail| {
                if *tail > v {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            }) {
                Ok(_) => unreachable!(),
                Err(pos) => {
                    if pos == piles.len() {
                        piles.push(v);
                    } else {
                        piles[pos] = v;
                    }
                }
            }
        }
        piles.len()
    }

    /// Lehmer rank of the permutation in 0..d!, with the identity at 0.
    pub fn rank(&self) -> usize {
        let d = self.degree();
        let mut rank = 0;
        let mut fact = 1;
        for i in 1..=d {
            fact *= i;
        }
        let mut remaining: Vec<usize> = (0..d).collect();
        for k in 0..d {
            fact /= d - k;
            let pos = remaining.iter().position(|&v| v == self.images[k]).unwrap();
            rank += pos * fact;
            remaining.remove(pos);
        }
        rank
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // cycle form for display only
        let mut wrote = false;
        for c in self.cycles() {
            if c.len() < 2 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (i, k) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", k + 1)?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

/// All of S(d) in Lehmer-rank order (identity first).
pub fn enumerate_symmetric_group(d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(d);
    let mut used = vec![false; d];
    build(d, &mut images, &mut used, &mut out);
    out
}

fn build(d: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
    if images.len() == d {
        out.push(Permutation {
            images: images.clone(),
        });
        return;
    }
    for v in 0..d {
        if !used[v] {
            used[v] = true;
            images.push(v);
            build(d, images, used, out);
            images.pop();
            used[v] = false;
        }
    }
}

/// The Baik-Rains set S_N(d): permutations of d with no strictly decreasing
/// subsequence of length N+1.  Equals all of S(d) when N >= d.
pub fn enumerate_restricted(d: usize, n: usize) -> Vec<Permutation> {
    enumerate_symmetric_group(d)
        .into_iter()
        .filter(|p| p.longest_decreasing_subsequence() <= n)
        .collect()
}

/// Union-find over {0..d-1} with union by size.
#[derive(Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl DisjointSets {
    pub fn new(d: usize) -> Self {
        DisjointSets {
            parent: (0..d).collect(),
            size: vec![1; d],
            components: d,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the union reduced the component count.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Joins all points within every cycle of π.
    pub fn absorb_cycles(&mut self, pi: &Permutation) {
        for (k, &v) in pi.images().iter().enumerate() {
            if k != v {
                self.union(k, v);
            }
        }
    }
}

/// True iff the group generated by `gens` acts transitively on {1..d}.
/// Orbit computation over generator images only; the group is never
/// enumerated.
pub fn is_transitive(gens: &[Permutation], d: usize) -> Result<bool> {
    for g in gens {
        if g.degree() != d {
            return Err(Error::DegreeMismatch(g.degree(), d));
        }
    }
    if d == 0 {
        return Ok(true);
    }
    let mut dsu = DisjointSets::new(d);
    for g in gens {
        dsu.absorb_cycles(g);
    }
    Ok(dsu.components() == 1)
}
