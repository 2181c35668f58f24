//! Closed-form coefficients of `p_1`, `l_1` and `l_{-1}` acting on Jack
//! polynomials.

use super::IdealError;
use crate::arith::{BetaPoly, BetaRatFunc, Scalar};
use crate::partitions::Partition;

/// One factor pair of the Pieri product for a given `i`:
/// `first = a/b`, `second = c/d` as linear polynomials in `β`.
#[derive(Debug, Clone, PartialEq)]
pub struct PieriFactor {
    pub i: usize,
    pub first: (BetaPoly, BetaPoly),
    pub second: (BetaPoly, BetaPoly),
}

fn addable(mu: &Partition, j: usize) -> bool {
    j >= 1 && (j == 1 || mu.part(j - 1) > mu.part(j))
}

fn invalid(mu: &Partition, row: usize) -> IdealError {
    IdealError::InvalidNode {
        partition: mu.clone(),
        row,
    }
}

/// The factors of `ψ′_{λ/μ}` where `λ` adds a node in row `j`.
pub fn pieri_factors(mu: &Partition, j: usize) -> Result<Vec<PieriFactor>, IdealError> {
    if !addable(mu, j) {
        return Err(invalid(mu, j));
    }
    let mj = mu.part(j) as i64;
    Ok((1..j)
        .map(|i| {
            let d = mu.part(i) as i64 - mj;
            let g = (j - i) as i64;
            PieriFactor {
                i,
                first: (BetaPoly::linear(g - 1, d), BetaPoly::linear(g, d - 1)),
                second: (BetaPoly::linear(g + 1, d - 1), BetaPoly::linear(g, d)),
            }
        })
        .collect())
}

/// `ψ′_{λ/μ}`: the coefficient of `P_λ` in `p_1 P_μ`, `λ_j = μ_j + 1`.
pub fn pieri_coefficient(mu: &Partition, j: usize) -> Result<BetaRatFunc, IdealError> {
    let (mut num, mut den) = (BetaPoly::one(), BetaPoly::one());
    for f in pieri_factors(mu, j)? {
        num = &(&num * &f.first.0) * &f.second.0;
        den = &(&den * &f.first.1) * &f.second.1;
    }
    Ok(BetaRatFunc::new(num, den))
}

/// `ψ″_{λ/μ} = ψ′_{λ/μ}·(μ_j − (j−1)β)`: the coefficient of `P_λ` in `l_1 P_μ`.
pub fn lassalle_up(mu: &Partition, j: usize) -> Result<BetaRatFunc, IdealError> {
    let psi = pieri_coefficient(mu, j)?;
    Ok(psi.mul(&BetaRatFunc::linear(-(j as i64 - 1), mu.part(j) as i64)))
}

/// The pieces of `ψ̃′_{μ/λ}` for removing the node at the end of row `i`
/// of `μ` in `n` variables: the prefactor
/// `((n−i)β + μ_i)((n−i+1)β + μ_i − 1)/β`, then the factors of the product
/// over `j = i+1..n` and of the product over `j = 1..μ_i − 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LassalleDownFactors {
    pub prefactor: [BetaPoly; 2],
    pub row_product: Vec<(BetaPoly, BetaPoly)>,
    pub column_product: Vec<(usize, BetaPoly, BetaPoly)>,
}

pub fn lassalle_down_factors(mu: &Partition, i: usize, n: usize) -> Result<LassalleDownFactors, IdealError> {
    mu.require_fits(n)?;
    if i == 0 || i > n || mu.part(i) == 0 || mu.part(i) <= mu.part(i + 1) {
        return Err(invalid(mu, i));
    }
    let mi = mu.part(i) as i64;
    let (ni, ii) = (n as i64, i as i64);
    let conj = mu.conjugate();
    let row_product = (i + 1..=n)
        .map(|j| {
            let d = mi - mu.part(j) as i64;
            let g = (j - i) as i64;
            (BetaPoly::linear(g - 1, d), BetaPoly::linear(g, d))
        })
        .collect();
    let column_product = (1..mu.part(i) as usize)
        .map(|j| {
            let a = conj.part(j) as i64 - ii + 1;
            let b = mi - j as i64;
            (j, BetaPoly::linear(a, b - 1), BetaPoly::linear(a, b))
        })
        .collect();
    Ok(LassalleDownFactors {
        prefactor: [BetaPoly::linear(ni - ii, mi), BetaPoly::linear(ni - ii + 1, mi - 1)],
        row_product,
        column_product,
    })
}

/// `ψ̃′_{μ/λ}`: the coefficient of `P_λ` in `l_{-1} P_μ` (`n` variables),
/// where `λ_i = μ_i − 1`.
pub fn lassalle_down(mu: &Partition, i: usize, n: usize) -> Result<BetaRatFunc, IdealError> {
    let f = lassalle_down_factors(mu, i, n)?;
    let mut num = &f.prefactor[0] * &f.prefactor[1];
    let mut den = BetaPoly::beta();
    for (a, b) in &f.row_product {
        num = &num * a;
        den = &den * b;
    }
    for (_, a, b) in &f.column_product {
        num = &num * a;
        den = &den * b;
    }
    Ok(BetaRatFunc::new(num, den))
}
