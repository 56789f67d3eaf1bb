//! Exact and numeric dense linear algebra: fraction-free (Bareiss)
//! determinants and inverses over the integers, Bareiss over ℤ[q], modular
//! determinants, and a plain f64 LU solver for the large numeric systems.

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer division that must be exact; Bareiss guarantees divisibility,
/// and this guard turns any violation into a loud failure instead of a
/// silently truncated quotient.
fn div_checked(num: Int, den: &Int) -> Int {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "fraction-free elimination produced an inexact division");
    q
}

/// Determinant of an integer matrix by fraction-free Gaussian elimination.
/// Intermediate entries are k×k minors, so every division is exact.
pub fn bareiss_determinant(matrix: &[Vec<Int>]) -> Int {
    let n = matrix.len();
    if n == 0 {
        return Int::one();
    }
    let mut m: Vec<Vec<Int>> = matrix.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = div_checked(num, &prev);
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Exact inverse of an integer matrix, as rationals.
///
/// Fraction-free forward elimination (Bareiss) on the augmented system
/// keeps every intermediate entry an integer minor; back-substitution then
/// produces the exact rational inverse.
pub fn exact_inverse(matrix: &[Vec<Int>]) -> Result<Vec<Vec<Rat>>> {
    let n = matrix.len();
    // augmented [A | I], width 2n
    let mut m: Vec<Vec<Int>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Int::one() } else { Int::zero() }));
            r
        })
        .collect();
    let w = 2 * n;
    let mut prev = Int::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => m.swap(k, r),
                None => {
                    return Err(Error::Singular(
                        "exact elimination hit a zero column".into(),
                    ))
                }
            }
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..w {
                if j == k {
                    continue;
                }
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = div_checked(num, &prev);
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    // The left block is now diagonal; row i of the right block divided by
    // its diagonal entry is row i of the inverse.
    Ok((0..n)
        .map(|i| {
            let diag = m[i][i].clone();
            (0..n)
                .map(|j| Rat::new(m[i][n + j].clone(), diag.clone()))
                .collect()
        })
        .collect())
}

/// Bareiss determinant over ℤ[q]; all divisions are exact polynomial
/// divisions.  Feasible for small matrices with modest degrees.
pub fn bareiss_determinant_poly(matrix: &[Vec<IntPoly>]) -> IntPoly {
    let n = matrix.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut m: Vec<Vec<IntPoly>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Determinant of an integer matrix reduced mod a prime, via LU over F_p.
/// `p` must fit in 62 bits so products fit in u128.
pub fn determinant_mod_p(matrix: &[Vec<u64>], p: u64) -> u64 {
    let n = matrix.len();
    let mut m: Vec<Vec<u64>> = matrix.to_vec();
    let mut det: u64 = 1;
    let mulp = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| m[r][k] % p != 0) {
            Some(r) => r,
            None => return 0,
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            det = p - det;
            if det == p {
                det = 0;
            }
        }
        let pivot = m[k][k] % p;
        det = mulp(det, pivot);
        let inv = mod_inverse(pivot, p);
        for i in k + 1..n {
            let factor = mulp(m[i][k] % p, inv);
            if factor == 0 {
                continue;
            }
            for j in k..n {
                let sub = mulp(factor, m[k][j] % p);
                m[i][j] = (m[i][j] % p + p - sub) % p;
            }
        }
    }
    det % p
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Solves A x = b in f64 by LU with partial pivoting; A is consumed.
pub fn lu_solve_f64(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = a.len();
    for k in 0..n {
        let (pivot_row, pivot) = (k..n)
            .map(|r| (r, a[r][k].abs()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pivot == 0.0 {
            return Err(Error::Singular("f64 LU pivot vanished".into()));
        }
        a.swap(k, pivot_row);
        b.swap(k, pivot_row);
        let inv = 1.0 / a[k][k];
        for i in k + 1..n {
            let factor = a[i][k] * inv;
            if factor == 0.0 {
                continue;
            }
            a[i][k] = 0.0;
            for j in k + 1..n {
                a[i][j] -= factor * a[k][j];
            }
            b[i] -= factor * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = b[i];
        for j in i + 1..n {
            acc -= a[i][j] * x[j];
        }
        x[i] = acc / a[i][i];
    }
    Ok(x)
}

/// Exact determinant of a rational matrix (used only on small systems).
pub fn rational_determinant(matrix: &[Vec<Rat>]) -> Rat {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = Rat::one();
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| !m[r][k].is_zero()) {
            Some(r) => r,
            None => return Rat::zero(),
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &pivot;
            for j in k..n {
                let sub = &factor * &m[k][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Int::from(v)).collect())
            .collect()
    }

    #[test]
    fn bareiss_matches_cofactor_3x3() {
        let m = int_matrix(&[&[2, -1, 0], &[1, 3, 2], &[0, 5, -4]]);
        // cofactor expansion by hand: 2(3·-4 − 2·5) − (−1)(1·−4 − 0) + 0 = −44 − 4 = −48
        assert_eq!(bareiss_determinant(&m), Int::from(-48));
    }

    #[test]
    fn bareiss_singular() {
        let m = int_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(bareiss_determinant(&m), Int::zero());
    }

    #[test]
    fn exact_inverse_roundtrip() {
        let m = int_matrix(&[&[4, 2, 1], &[2, 5, 3], &[1, 3, 6]]);
        let inv = exact_inverse(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Rat::zero();
                for k in 0..3 {
                    acc += Rat::from(m[i][k].clone()) * &inv[k][j];
                }
                let expected = if i == j { Rat::one() } else { Rat::zero() };
                assert_eq!(acc, expected);
            }
        }
    }

    #[test]
    fn mod_p_determinant_matches_exact() {
        let m = int_matrix(&[&[7, 3, 1], &[2, 9, 4], &[5, 8, 6]]);
        let p = 1_000_000_007u64;
        let exact = bareiss_determinant(&m);
        let rows: Vec<Vec<u64>> = m
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        let mut x = v.clone() % Int::from(p);
                        if x.is_negative() {
                            x += Int::from(p);
                        }
                        u64::try_from(x).unwrap()
                    })
                    .collect()
            })
            .collect();
        let modp = determinant_mod_p(&rows, p);
        let mut exact_mod = exact % Int::from(p);
        if exact_mod.is_negative() {
            exact_mod += Int::from(p);
        }
        assert_eq!(Int::from(modp), exact_mod);
    }

    #[test]
    fn lu_solves_small_system() {
        let a = vec![vec![3.0, 1.0], vec![1.0, 2.0]];
        let b = vec![9.0, 8.0];
        let x = lu_solve_f64(a, b).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-12 && (x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn poly_bareiss_matches_scalar_evaluation() {
        use crate::poly::IntPoly;
        // random-ish small polynomial matrix
        let entries = |i: usize, j: usize| {
            IntPoly::from_coeffs(vec![Int::from((i + 2 * j) as i64 % 3), Int::from((i * j) as i64 % 2)])
        };
        let m: Vec<Vec<IntPoly>> = (0..4).map(|i| (0..4).map(|j| entries(i, j)).collect()).collect();
        let det = bareiss_determinant_poly(&m);
        for q in [-2i64, 0, 1, 3] {
            let evaluated: Vec<Vec<Int>> = m
                .iter()
                .map(|row| row.iter().map(|p| p.eval(&Int::from(q))).collect())
                .collect();
            assert_eq!(det.eval(&Int::from(q)), bareiss_determinant(&evaluated), "q={q}");
        }
    }
}
