//! Small exact linear algebra: integer rank, rank modulo a prime, rational solves.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A prime close to 2^61 used for modular rank certificates.
pub const CERT_PRIME: u64 = 2_305_843_009_213_693_951;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix (Bareiss).
pub fn det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut prev = BigInt::one();
    let mut sign = 1;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    prev * sign
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Reduce a big integer into `[0, p)`.
pub fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((x % &m) + &m) % &m;
    u64::try_from(r).expect("residue fits in u64")
}

/// Rank of a matrix over `F_p`. A lower bound for the rank over `Q`.
pub fn rank_mod(rows: &[Vec<u64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        for j in c..ncols {
            a[r][j] = mul_mod(a[r][j], inv, p);
        }
        for i in 0..nrows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in c..ncols {
                    let sub = mul_mod(f, a[r][j], p);
                    a[i][j] = (a[i][j] + p - sub) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Solve `A x = b` exactly. Returns `None` when the system is inconsistent,
/// otherwise the solution with free variables set to zero and the rank of `A`.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<(Vec<BigRational>, usize)> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..=ncols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=ncols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][ncols].clone();
    }
    Some((x, pivots.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&big(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&big(&[&[0, 0, 0]])), 0);
        assert_eq!(rank(&big(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
        assert_eq!(rank(&big(&[&[2, 4, 1], &[1, 3, 5], &[3, 7, 6], &[0, 1, 1]])), 3);
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&big(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(det(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det(&big(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), BigInt::from(6));
        assert_eq!(det(&big(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn modular_rank_agrees_on_small_matrices() {
        let m = big(&[&[2, 4, 1], &[1, 3, 5], &[3, 7, 6], &[0, 1, 1]]);
        let reduced: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|x| reduce_mod(x, CERT_PRIME)).collect()).collect();
        assert_eq!(rank_mod(&reduced, CERT_PRIME), rank(&m));
        assert_eq!(reduce_mod(&BigInt::from(-1), 7), 6);
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let (x, r) = solve(&a, &[rat(3), rat(1)]).unwrap();
        assert_eq!(r, 2);
        assert_eq!(x, vec![rat(2), rat(1)]);
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert!(solve(&a, &[rat(1), rat(3)]).is_none());
    }
}
