//! Dense univariate polynomials over the big integers, used for symbolic
//! q-distance matrices and their determinants.

use crate::Int;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in one variable with BigInt coefficients, lowest degree first.
/// The zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    pub coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![Int::one()],
        }
    }

    pub fn constant(c: Int) -> Self {
        let mut p = IntPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// q^k with coefficient c.
    pub fn monomial(c: Int, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Int>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or_else(Int::zero)
    }

    pub fn eval(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division; panics if the division leaves a remainder.  Used by
    /// fraction-free elimination, where divisibility is guaranteed.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lead = divisor.coeffs[dd].clone();
        assert!(rem.len() >= dd + 1, "degree underflow in exact division");
        let mut quot = vec![Int::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            assert_eq!(&c * &lead, rem[k + dd], "inexact leading division");
            if !c.is_zero() {
                for (i, dcoef) in divisor.coeffs.iter().enumerate() {
                    let sub = &c * dcoef;
                    rem[k + i] -= sub;
                }
            }
            quot[k] = c;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        IntPoly::from_coeffs(quot)
    }

    /// (1 − q^k)^e as a polynomial.
    pub fn one_minus_power(k: usize, e: usize) -> IntPoly {
        let base = IntPoly::from_coeffs({
            let mut v = vec![Int::zero(); k + 1];
            v[0] = Int::one();
            v[k] = -Int::one();
            v
        });
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * &base;
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
