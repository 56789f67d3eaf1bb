//! A computational laboratory for monotone Hurwitz numbers, exact unitary
//! Weingarten calculus, and the genus expansion of the HCIZ matrix model.
//!
//! Every headline quantity is computable along at least two independent
//! routes (brute-force enumeration vs. character theory, exact Gram-matrix
//! inversion vs. content-product formulas, determinantal evaluation vs.
//! Monte Carlo), and the [`suite`] module wires those routes into a
//! self-verification harness.
//!
//! Module map:
//!
//! - [`partition`], [`permutation`]: partitions, permutations and the
//!   group-theoretic predicates everything else consumes.
//! - [`characters`]: irreducible characters of the symmetric group,
//!   dimensions, contents, central eigenvalues.
//! - [`class_algebra`]: the centre of the group algebra, Jucys-Murphy
//!   specializations, q-distance matrices and determinant identities.
//! - [`hurwitz`]: monotone simple/single/double Hurwitz numbers by brute
//!   force, by characters + exponential formula, and in closed form.
//! - [`weingarten`], [`haar`]: exact Weingarten tables and Haar-unitary
//!   Monte Carlo verification.
//! - [`hciz`]: the HCIZ integral, its free energy, derivative series and
//!   the convergence experiment.
//! - [`genfun`]: exact truncated power series, the algebraic function s(z),
//!   the multivariate functional system, and radius-of-convergence
//!   estimation.
//! - [`zeros`]: zero lattices of the partition function for
//!   arithmetic-progression spectra.

pub mod characters;
pub mod class_algebra;
pub mod error;
pub mod genfun;
pub mod haar;
pub mod hciz;
pub mod hurwitz;
pub mod linalg;
pub mod mp;
pub mod partition;
pub mod permutation;
pub mod poly;
pub mod suite;
pub mod weingarten;
pub mod zeros;

pub use error::Error;
pub use partition::Partition;
pub use permutation::Permutation;

/// Exact rational scalar used throughout the exact layers.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision unsigned integer.
pub type Nat = num_bigint::BigUint;

use num_traits::{One, Zero};

/// d! as a big integer.
pub fn factorial(d: usize) -> Nat {
    let mut f = Nat::one();
    for k in 2..=d {
        f *= Nat::from(k);
    }
    f
}

/// Binomial coefficient C(n, k) as a big integer (0 when k > n).
pub fn binomial(n: usize, k: usize) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let k = k.min(n - k);
    let mut num = Nat::one();
    for i in 0..k {
        num *= Nat::from(n - i);
    }
    num / factorial(k)
}

/// Exact rational from an integer numerator/denominator pair.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), Nat::from(1u8));
        assert_eq!(factorial(5), Nat::from(120u8));
        assert_eq!(factorial(10), Nat::from(3628800u64));
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), Nat::from(6u8));
        assert_eq!(binomial(10, 3), Nat::from(120u8));
        assert_eq!(binomial(3, 5), Nat::from(0u8));
        assert_eq!(binomial(6, 0), Nat::from(1u8));
    }
}
