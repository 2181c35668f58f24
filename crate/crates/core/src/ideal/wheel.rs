//! Symmetric polynomials vanishing whenever `k+1` variables coincide.

use super::IdealError;
use crate::arith::BigRat;
use crate::partitions::partitions_of;
use crate::sympoly::{Exponent, MSymPoly};
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| rows[r][col] != zero) else {
            continue;
        };
        rows.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = &rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c];
                rows[r][c] = v / &prev;
            }
            rows[r][col] = zero.clone();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Dimension of the degree-`d` symmetric polynomials in `n` variables that
/// vanish at `x_1 = ⋯ = x_{k+1}`. With `n ≤ k` the condition is empty.
pub fn wheel_dimension(k: u32, n: usize, d: u32) -> Result<usize, IdealError> {
    let basis = partitions_of(d, n);
    let c = k as usize + 1;
    if n < c {
        return Ok(basis.len());
    }
    // columns: monomial symmetric functions; rows: monomials after the
    // substitution. Coefficients are orbit counts, so integral.
    let mut row_of: BTreeMap<Exponent, usize> = BTreeMap::new();
    let mut entries: Vec<Vec<(usize, BigInt)>> = Vec::with_capacity(basis.len());
    for lambda in &basis {
        let image = MSymPoly::<BigRat>::monomial(n, lambda.clone()).substitute_coincident(c)?;
        let mut col = Vec::new();
        for (e, v) in image.terms() {
            let next = row_of.len();
            let r = *row_of.entry(e.clone()).or_insert(next);
            debug_assert!(v.is_integer());
            col.push((r, v.to_integer()));
        }
        entries.push(col);
    }
    let mut matrix = vec![vec![BigInt::from(0); basis.len()]; row_of.len()];
    for (j, col) in entries.into_iter().enumerate() {
        for (r, v) in col {
            matrix[r][j] = v;
        }
    }
    Ok(basis.len() - integer_rank(matrix))
}

/// Whether a symmetric polynomial with rational coefficients vanishes at
/// `x_1 = ⋯ = x_c`.
pub fn vanishes_on_coincidence(p: &MSymPoly<BigRat>, c: usize) -> Result<bool, IdealError> {
    if c > p.nvars() {
        return Ok(true);
    }
    Ok(p.substitute_coincident(c)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn bareiss_rank() {
        assert_eq!(integer_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(m(&[&[0, 1, 2], &[1, 0, 3], &[1, 1, 5]])), 2);
        assert_eq!(integer_rank(m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])), 3);
        assert_eq!(integer_rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(integer_rank(Vec::new()), 0);
    }

    #[test]
    fn wheel_examples() {
        assert_eq!(wheel_dimension(1, 2, 2).unwrap(), 1);
        assert_eq!(wheel_dimension(1, 2, 1).unwrap(), 0);
        assert_eq!(wheel_dimension(1, 2, 0).unwrap(), 0);
        // no three coinciding variables among two
        assert_eq!(wheel_dimension(2, 2, 3).unwrap(), 2);
        // a·m_(2) + b·m_(1,1) at (t, t, x3) contains a·x3² + 2b·t·x3
        assert_eq!(wheel_dimension(1, 3, 2).unwrap(), 0);
    }
}
