//! Exact linear algebra over the rationals: fraction-free determinants,
//! rank certificates and nullspace computation.

use crate::scalar::{rat_int, Rat};
use num::bigint::BigInt;
use num::{One, Signed, Zero};

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_bareiss(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Cofactor-expansion determinant; the slow independent oracle.
pub fn det_cofactor(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c])
                    .collect::<Vec<_>>()
            })
            .collect();
        let term = BigInt::from(m[0][j]) * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Exact rank of a rational matrix via Gaussian elimination with pivoting.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].clone();
        for r in rank + 1..nrows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &inv;
            for c in col..ncols {
                let sub = &factor * &a[rank][c];
                a[r][c] -= sub;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// One nonzero rational nullspace vector of a square matrix, if any.
pub fn nullspace_vector(m: &[Vec<i64>]) -> Option<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|&x| rat_int(x)).collect())
        .collect();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].clone();
        for c in col..n {
            a[row][c] = &a[row][c] / &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..n {
                    let sub = &factor * &a[row][c];
                    a[r][c] -= sub;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivots: Vec<usize> = pivot_col_of_row;
    let free_col = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rat::zero(); n];
    v[free_col] = Rat::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -a[r][free_col].clone();
    }
    Some(v)
}

/// Clears denominators and common factors, preferring a positive vector.
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<i64> {
    use num::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        gcd = BigInt::one();
    }
    let mut out: Vec<BigInt> = ints.iter().map(|x| x / &gcd).collect();
    if out.iter().any(|x| x.is_negative()) && out.iter().all(|x| !x.is_positive() || x.is_zero()) {
        for x in &mut out {
            *x = -x.clone();
        }
    }
    out.iter()
        .map(|x| i64::try_from(x).expect("vector entry fits in i64"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_matches_cofactor_oracle() {
        let m = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, -1],
            vec![0, -1, -1, 2],
        ];
        assert_eq!(det_bareiss(&m), det_cofactor(&m));
    }

    #[test]
    fn rank_of_singular_matrix() {
        let rows: Vec<Vec<Rat>> = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ];
        assert_eq!(rank(&rows), 1);
    }

    #[test]
    fn nullspace_of_affine_a2() {
        let m = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        let v = nullspace_vector(&m).unwrap();
        let ints = primitive_integer_vector(&v);
        assert_eq!(ints, vec![1, 1, 1]);
    }
}
