//! Minimal arbitrary-precision binary floating point, just enough for the
//! cancellation-heavy determinant evaluations: add/sub/mul/div, complex
//! arithmetic, and the complex exponential.  Values are mantissa·2^exp with
//! a BigInt mantissa truncated to the working precision after every
//! operation.

use crate::{Int, Rat};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

/// 2^-53, for converting f64 mantissas.
const F64_SCALE: i64 = 53;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpFloat {
    mantissa: Int,
    exp: i64,
}

impl MpFloat {
    pub fn zero() -> Self {
        MpFloat { mantissa: Int::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        MpFloat { mantissa: Int::from(1), exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            return MpFloat::zero();
        }
        assert!(x.is_finite(), "cannot lift non-finite f64");
        let (mantissa, exponent) = {
            // decompose via frexp-style scaling
            let bits = x.abs();
            let e = bits.log2().floor() as i64;
            let scaled = x / 2f64.powi(e as i32); // in [1, 2)
            let m = (scaled * 2f64.powi(F64_SCALE as i32)) as i128;
            (Int::from(m), e - F64_SCALE)
        };
        MpFloat { mantissa, exp: exponent }.normalized(120)
    }

    /// Exact rational to float at the given precision.
    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        if r.is_zero() {
            return MpFloat::zero();
        }
        let shift = prec as i64 + 8;
        let scaled = (r.numer() << shift as usize) / r.denom();
        MpFloat { mantissa: scaled, exp: -shift }.normalized(prec)
    }

    pub fn from_int(i: i64) -> Self {
        MpFloat { mantissa: Int::from(i), exp: 0 }
    }

    fn normalized(mut self, prec: u32) -> Self {
        if self.mantissa.is_zero() {
            self.exp = 0;
            return self;
        }
        let bits = self.mantissa.bits() as i64;
        let excess = bits - prec as i64;
        if excess > 0 {
            self.mantissa >>= excess as usize;
            self.exp += excess;
        }
        self
    }

    pub fn neg(&self) -> Self {
        MpFloat { mantissa: -&self.mantissa, exp: self.exp }
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // when magnitudes differ beyond precision, the smaller vanishes
        let self_top = self.exp + self.mantissa.bits() as i64;
        let other_top = other.exp + other.mantissa.bits() as i64;
        let window = prec as i64 + 8;
        if self_top - other_top > window {
            return self.clone().normalized(prec);
        }
        if other_top - self_top > window {
            return other.clone().normalized(prec);
        }
        let exp = self.exp.min(other.exp);
        let a = &self.mantissa << (self.exp - exp) as usize;
        let b = &other.mantissa << (other.exp - exp) as usize;
        MpFloat { mantissa: a + b, exp }.normalized(prec)
    }

    pub fn sub(&self, other: &Self, prec: u32) -> Self {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        if self.is_zero() || other.is_zero() {
            return MpFloat::zero();
        }
        MpFloat {
            mantissa: &self.mantissa * &other.mantissa,
            exp: self.exp + other.exp,
        }
        .normalized(prec)
    }

    pub fn div(&self, other: &Self, prec: u32) -> Self {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return MpFloat::zero();
        }
        let shift = prec as i64 + other.mantissa.bits() as i64 + 8;
        let num = &self.mantissa << shift as usize;
        MpFloat {
            mantissa: num / &other.mantissa,
            exp: self.exp - other.exp - shift,
        }
        .normalized(prec)
    }

    /// Halve the value exactly (exponent decrement).
    pub fn half(&self) -> Self {
        MpFloat { mantissa: self.mantissa.clone(), exp: self.exp - 1 }
    }

    /// (mantissa as f64 in [0.5, 1), power-of-two exponent): the value is
    /// m·2^e with 0.5 ≤ |m| < 1.
    pub fn to_mantissa_exponent(&self) -> (f64, i64) {
        if self.is_zero() {
            return (0.0, 0);
        }
        let bits = self.mantissa.bits() as i64;
        let take = 64.min(bits);
        let top: Int = &self.mantissa >> (bits - take) as usize;
        let m = top.to_f64().unwrap() / 2f64.powi(take as i32);
        (m, self.exp + bits)
    }

    pub fn to_f64(&self) -> f64 {
        let (m, e) = self.to_mantissa_exponent();
        if e > 1024 {
            return if m >= 0.0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if e < -1060 {
            return 0.0;
        }
        m * 2f64.powi(e as i32)
    }

    /// Natural log of |x|, in f64 (the value may be far outside f64 range).
    pub fn ln_abs(&self) -> f64 {
        assert!(!self.is_zero(), "ln of zero");
        let (m, e) = self.to_mantissa_exponent();
        m.abs().ln() + e as f64 * std::f64::consts::LN_2
    }

    /// log2 of |x| (floor-ish, for magnitude planning).
    pub fn log2_abs(&self) -> i64 {
        if self.is_zero() {
            return i64::MIN / 2;
        }
        self.exp + self.mantissa.bits() as i64
    }

    pub fn abs_gt(&self, other: &Self) -> bool {
        match self.log2_abs().cmp(&other.log2_abs()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => {
                // compare exactly
                let exp = self.exp.min(other.exp);
                let a = self.mantissa.abs() << (self.exp - exp) as usize;
                let b = other.mantissa.abs() << (other.exp - exp) as usize;
                a > b
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpComplex {
    pub re: MpFloat,
    pub im: MpFloat,
}

impl MpComplex {
    pub fn zero() -> Self {
        MpComplex { re: MpFloat::zero(), im: MpFloat::zero() }
    }

    pub fn one() -> Self {
        MpComplex { re: MpFloat::one(), im: MpFloat::zero() }
    }

    pub fn new(re: MpFloat, im: MpFloat) -> Self {
        MpComplex { re, im }
    }

    pub fn from_f64(z: Complex64) -> Self {
        MpComplex { re: MpFloat::from_f64(z.re), im: MpFloat::from_f64(z.im) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        MpComplex {
            re: self.re.add(&other.re, prec),
            im: self.im.add(&other.im, prec),
        }
    }

    pub fn sub(&self, other: &Self, prec: u32) -> Self {
        MpComplex {
            re: self.re.sub(&other.re, prec),
            im: self.im.sub(&other.im, prec),
        }
    }

    pub fn neg(&self) -> Self {
        MpComplex { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        let re = self.re.mul(&other.re, prec).sub(&self.im.mul(&other.im, prec), prec);
        let im = self.re.mul(&other.im, prec).add(&self.im.mul(&other.re, prec), prec);
        MpComplex { re, im }
    }

    pub fn div(&self, other: &Self, prec: u32) -> Self {
        let denom = other.norm_sqr(prec);
        let conj = MpComplex { re: other.re.clone(), im: other.im.neg() };
        let num = self.mul(&conj, prec);
        MpComplex {
            re: num.re.div(&denom, prec),
            im: num.im.div(&denom, prec),
        }
    }

    pub fn norm_sqr(&self, prec: u32) -> MpFloat {
        self.re.mul(&self.re, prec).add(&self.im.mul(&self.im, prec), prec)
    }

    pub fn half(&self) -> Self {
        MpComplex { re: self.re.half(), im: self.im.half() }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// max(log2|re|, log2|im|): magnitude estimate for planning.
    pub fn log2_mag(&self) -> i64 {
        self.re.log2_abs().max(self.im.log2_abs())
    }

    /// exp(z) by argument halving, Taylor summation, and repeated squaring.
    pub fn exp(&self, prec: u32) -> Self {
        if self.is_zero() {
            return MpComplex::one();
        }
        // halve until |z| <= 1/4 (log2_mag <= -2)
        let halvings = (self.log2_mag() + 2).max(0) as u32;
        // guard bits: squaring can lose ~1 bit per step, Taylor a few more
        let work = prec + 32 + 2 * halvings;
        let mut w = self.clone();
        for _ in 0..halvings {
            w = w.half();
        }
        // Taylor sum Σ w^k / k!
        let mut sum = MpComplex::one();
        let mut term = MpComplex::one();
        let mut k: i64 = 1;
        loop {
            term = term.mul(&w, work);
            term = MpComplex {
                re: term.re.div(&MpFloat::from_int(k), work),
                im: term.im.div(&MpFloat::from_int(k), work),
            };
            sum = sum.add(&term, work);
            if term.log2_mag() < -(work as i64) && k > 2 {
                break;
            }
            k += 1;
            assert!(k < 10_000, "exp Taylor series failed to converge");
        }
        // square back up
        let mut result = sum;
        for _ in 0..halvings {
            result = result.mul(&result, work);
        }
        MpComplex {
            re: result.re.normalized(prec),
            im: result.im.normalized(prec),
        }
    }
}

/// Decimal digits to binary precision with guard bits.
pub fn digits_to_bits(digits: u32) -> u32 {
    (digits as f64 * 3.3219280948873626).ceil() as u32 + 16
}

/// Determinant of a complex matrix at the given binary precision, by
/// Gaussian elimination with partial pivoting.
pub fn mp_determinant(matrix: &[Vec<MpComplex>], prec: u32) -> MpComplex {
    let n = matrix.len();
    let mut m: Vec<Vec<MpComplex>> = matrix.to_vec();
    let mut det = MpComplex::one();
    for k in 0..n {
        let mut pivot = k;
        for r in k + 1..n {
            if m[r][k].norm_sqr(64).abs_gt(&m[pivot][k].norm_sqr(64)) {
                pivot = r;
            }
        }
        if m[pivot][k].is_zero() {
            return MpComplex::zero();
        }
        if pivot != k {
            m.swap(k, pivot);
            det = det.neg();
        }
        det = det.mul(&m[k][k], prec);
        for r in k + 1..n {
            if m[r][k].is_zero() {
                continue;
            }
            let factor = m[r][k].div(&m[k][k], prec);
            for c in k..n {
                let sub = factor.mul(&m[k][c], prec);
                m[r][c] = m[r][c].sub(&sub, prec);
            }
        }
    }
    det
}
