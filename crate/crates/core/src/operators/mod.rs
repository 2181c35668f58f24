//! Exact operators on polynomials: exchanges, Dunkl and Cherednik operators,
//! the Sekiguchi generating operator, the Calogero-Sutherland Hamiltonian,
//! the Virasoro generators `l_m` and the higher operators `w^(t)_m`.
//!
//! Every function is generic over the coefficient ring and takes the
//! coupling `β` as a value of that ring. Use `BetaPoly::beta()` for
//! identities in an indeterminate `β`, or a rational constant for a fixed
//! coupling. Variable indices are 1-based.

mod commutators;
mod random;

pub use commutators::{verify_commutators, CommutatorConfig};
pub use random::{random_general, random_symmetric};

use crate::arith::{rat, Scalar};
use crate::sympoly::{ExpandedPoly, MSymPoly, SymPolyError};
use std::fmt;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OperatorError {
    #[error("variable index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("exchange needs two distinct indices, got {0} twice")]
    RepeatedIndex(usize),
    #[error("operator parameters out of range: {0}")]
    Parameter(String),
    #[error("the Sekiguchi operator yields a polynomial in u; use apply_sekiguchi")]
    NotSinglePolynomial,
    #[error(transparent)]
    SymPoly(#[from] SymPolyError),
}

/// A named member of the operator family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorTag {
    Exchange(usize, usize),
    Dunkl(usize),
    Cherednik(usize),
    Sekiguchi,
    Hamiltonian,
    L(i64),
    W { t: u32, m: i64 },
    MulPowerSum(u32),
}

impl OperatorTag {
    pub fn validate(&self, n: usize) -> Result<(), OperatorError> {
        match *self {
            OperatorTag::Exchange(i, j) => {
                check_index(i, n)?;
                check_index(j, n)?;
                if i == j {
                    return Err(OperatorError::RepeatedIndex(i));
                }
            }
            OperatorTag::Dunkl(i) | OperatorTag::Cherednik(i) => check_index(i, n)?,
            OperatorTag::Sekiguchi | OperatorTag::Hamiltonian => {}
            OperatorTag::L(m) => check_l(m)?,
            OperatorTag::W { t, m } => {
                if t < 2 {
                    return Err(OperatorError::Parameter(format!("w needs t ≥ 2, got t = {t}")));
                }
                check_w(t, m)?;
            }
            OperatorTag::MulPowerSum(m) => {
                if m < 1 {
                    return Err(OperatorError::Parameter("p_m needs m ≥ 1".into()));
                }
            }
        }
        Ok(())
    }

    /// Applies the operator. Symmetric-only operators check their input.
    pub fn apply<C: Scalar>(&self, p: &ExpandedPoly<C>, beta: &C) -> Result<ExpandedPoly<C>, OperatorError> {
        self.validate(p.nvars())?;
        Ok(match *self {
            OperatorTag::Exchange(i, j) => p.swap_vars(i, j),
            OperatorTag::Dunkl(i) => dunkl(p, i, beta),
            OperatorTag::Cherednik(i) => cherednik(p, i, beta),
            OperatorTag::Sekiguchi => return Err(OperatorError::NotSinglePolynomial),
            OperatorTag::Hamiltonian => hamiltonian_expanded(p, beta)?,
            OperatorTag::L(m) => virasoro(p, m),
            OperatorTag::W { t, m } => w_operator(p, t, m, beta),
            OperatorTag::MulPowerSum(m) => mul_power_sum(p, m),
        })
    }
}

impl fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorTag::Exchange(i, j) => write!(f, "K({i},{j})"),
            OperatorTag::Dunkl(i) => write!(f, "Dunkl({i})"),
            OperatorTag::Cherednik(i) => write!(f, "Cherednik({i})"),
            OperatorTag::Sekiguchi => write!(f, "Sekiguchi"),
            OperatorTag::Hamiltonian => write!(f, "Hamiltonian"),
            OperatorTag::L(m) => write!(f, "l({m})"),
            OperatorTag::W { t, m } => write!(f, "w({t},{m})"),
            OperatorTag::MulPowerSum(m) => write!(f, "p({m})"),
        }
    }
}

fn check_index(i: usize, n: usize) -> Result<(), OperatorError> {
    if i == 0 || i > n {
        Err(OperatorError::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

fn check_l(m: i64) -> Result<(), OperatorError> {
    if m < -1 {
        Err(OperatorError::Parameter(format!("l_m needs m ≥ -1, got {m}")))
    } else {
        Ok(())
    }
}

fn check_w(t: u32, m: i64) -> Result<(), OperatorError> {
    if t == 0 || m < 1 - t as i64 {
        Err(OperatorError::Parameter(format!(
            "w^({t})_m needs m ≥ {}, got {m}",
            1 - t as i64
        )))
    } else {
        Ok(())
    }
}

pub fn apply_exchange<C: Scalar>(p: &ExpandedPoly<C>, i: usize, j: usize) -> Result<ExpandedPoly<C>, OperatorError> {
    OperatorTag::Exchange(i, j).validate(p.nvars())?;
    Ok(p.swap_vars(i, j))
}

/// `(P − K_ij P)/(x_i − x_j)`, computed monomial by monomial:
/// `(x^a y^b − x^b y^a)/(x − y) = x^b y^b Σ_{t<a−b} x^t y^{a−b−1−t}` for `a > b`.
pub fn divided_difference<C: Scalar>(
    p: &ExpandedPoly<C>,
    i: usize,
    j: usize,
) -> Result<ExpandedPoly<C>, OperatorError> {
    OperatorTag::Exchange(i, j).validate(p.nvars())?;
    Ok(divdiff(p, i, j))
}

fn divdiff<C: Scalar>(p: &ExpandedPoly<C>, i: usize, j: usize) -> ExpandedPoly<C> {
    let (ii, jj) = (i - 1, j - 1);
    let mut out = ExpandedPoly::zero(p.nvars());
    for (e, c) in p.terms() {
        let (a, b) = (e[ii], e[jj]);
        if a == b {
            continue;
        }
        let (lo, gap, coeff) = if a > b {
            (b, a - b, c.clone())
        } else {
            (a, b - a, c.neg())
        };
        for t in 0..gap {
            let mut f = e.clone();
            f[ii] = lo + t;
            f[jj] = lo + gap - 1 - t;
            out.add_term(f, coeff.clone());
        }
    }
    out
}

pub fn apply_dunkl<C: Scalar>(p: &ExpandedPoly<C>, i: usize, beta: &C) -> Result<ExpandedPoly<C>, OperatorError> {
    check_index(i, p.nvars())?;
    Ok(dunkl(p, i, beta))
}

fn dunkl<C: Scalar>(p: &ExpandedPoly<C>, i: usize, beta: &C) -> ExpandedPoly<C> {
    let mut out = p.derivative(i);
    if beta.is_zero() {
        return out;
    }
    let mut exch = ExpandedPoly::zero(p.nvars());
    for j in (1..=p.nvars()).filter(|&j| j != i) {
        exch = exch.add(&divdiff(p, i, j));
    }
    out = out.add(&exch.scale(beta));
    out
}

fn dunkl_power<C: Scalar>(p: &ExpandedPoly<C>, i: usize, times: u32, beta: &C) -> ExpandedPoly<C> {
    let mut q = p.clone();
    for _ in 0..times {
        if q.is_zero() {
            break;
        }
        q = dunkl(&q, i, beta);
    }
    q
}

/// `D̂_i = x_i ∇_i + β Σ_{j>i} K_ij`.
pub fn apply_cherednik<C: Scalar>(p: &ExpandedPoly<C>, i: usize, beta: &C) -> Result<ExpandedPoly<C>, OperatorError> {
    check_index(i, p.nvars())?;
    Ok(cherednik(p, i, beta))
}

fn cherednik<C: Scalar>(p: &ExpandedPoly<C>, i: usize, beta: &C) -> ExpandedPoly<C> {
    let mut out = dunkl(p, i, beta).mul_var_power(i, 1);
    let mut exch = ExpandedPoly::zero(p.nvars());
    for j in i + 1..=p.nvars() {
        exch = exch.add(&p.swap_vars(i, j));
    }
    out = out.add(&exch.scale(beta));
    out
}

/// `S(u) P = Π_i (u + D̂_i) P`, returned as the coefficients of `u^0, …, u^n`.
pub fn apply_sekiguchi<C: Scalar>(p: &ExpandedPoly<C>, beta: &C) -> Vec<ExpandedPoly<C>> {
    let n = p.nvars();
    let mut coeffs = vec![p.clone()];
    for i in (1..=n).rev() {
        let mut next = vec![ExpandedPoly::zero(n); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d] = next[d].add(&cherednik(c, i, beta));
            next[d + 1] = next[d + 1].add(c);
        }
        coeffs = next;
    }
    coeffs
}

/// `H = Σ (x_i∂_i)² + β Σ_{i<j} (x_i + x_j)/(x_i − x_j) (x_i∂_i − x_j∂_j)` on
/// symmetric input.
pub fn apply_hamiltonian<C: Scalar>(p: &MSymPoly<C>, beta: &C) -> Result<MSymPoly<C>, OperatorError> {
    let e = p.to_expanded()?;
    Ok(MSymPoly::from_expanded(&hamiltonian_expanded(&e, beta)?)?)
}

/// The Hamiltonian on an expanded polynomial that must be symmetric. For
/// such `P` the numerator `Q = (x_i∂_i − x_j∂_j)P` is antisymmetric in
/// `(i, j)`, so `Q/(x_i − x_j)` equals half the divided difference of `Q`.
pub fn hamiltonian_expanded<C: Scalar>(p: &ExpandedPoly<C>, beta: &C) -> Result<ExpandedPoly<C>, OperatorError> {
    p.check_symmetric()?;
    let n = p.nvars();
    let mut out = ExpandedPoly::zero(n);
    for (e, c) in p.terms() {
        let w: u64 = e.iter().map(|&a| (a as u64) * (a as u64)).sum();
        if w != 0 {
            out.add_term(e.clone(), c.scale_int(w as i64));
        }
    }
    if beta.is_zero() {
        return Ok(out);
    }
    let half = C::from_rational(&rat(1, 2));
    let mut pair_sum = ExpandedPoly::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let mut q = ExpandedPoly::zero(n);
            for (e, c) in p.terms() {
                let d = e[i - 1] as i64 - e[j - 1] as i64;
                if d != 0 {
                    q.add_term(e.clone(), c.scale_int(d));
                }
            }
            let quot = divdiff(&q, i, j);
            let lifted = quot.mul_var_power(i, 1).add(&quot.mul_var_power(j, 1));
            pair_sum = pair_sum.add(&lifted);
        }
    }
    out = out.add(&pair_sum.scale(&half.mul(beta)));
    Ok(out)
}

/// `l_m = Σ_j x_j^{m+1} ∂_j`, `m ≥ −1`.
pub fn apply_l<C: Scalar>(p: &MSymPoly<C>, m: i64) -> Result<MSymPoly<C>, OperatorError> {
    check_l(m)?;
    let e = p.to_expanded()?;
    Ok(MSymPoly::from_expanded(&virasoro(&e, m))?)
}

pub fn apply_l_expanded<C: Scalar>(p: &ExpandedPoly<C>, m: i64) -> Result<ExpandedPoly<C>, OperatorError> {
    check_l(m)?;
    Ok(virasoro(p, m))
}

fn virasoro<C: Scalar>(p: &ExpandedPoly<C>, m: i64) -> ExpandedPoly<C> {
    let mut out = ExpandedPoly::zero(p.nvars());
    for j in 1..=p.nvars() {
        out = out.add(&p.derivative(j).mul_var_power(j, (m + 1) as u32));
    }
    out
}

/// `w^(t)_m = Σ_j x_j^{m+t−1} ∇_j^{t−1}` for `t ≥ 2`, `m ≥ −t+1`.
pub fn apply_w<C: Scalar>(p: &MSymPoly<C>, t: u32, m: i64, beta: &C) -> Result<MSymPoly<C>, OperatorError> {
    OperatorTag::W { t, m }.validate(p.nvars())?;
    let e = p.to_expanded()?;
    Ok(MSymPoly::from_expanded(&w_operator(&e, t, m, beta))?)
}

/// As [`apply_w`] on an expanded polynomial, additionally allowing `t = 1`
/// where `w^(1)_m` is multiplication by the power sum `p_m` (`p_0 = n`).
pub fn apply_w_expanded<C: Scalar>(
    p: &ExpandedPoly<C>,
    t: u32,
    m: i64,
    beta: &C,
) -> Result<ExpandedPoly<C>, OperatorError> {
    check_w(t, m)?;
    Ok(w_operator(p, t, m, beta))
}

fn w_operator<C: Scalar>(p: &ExpandedPoly<C>, t: u32, m: i64, beta: &C) -> ExpandedPoly<C> {
    if t == 1 {
        return mul_power_sum(p, m as u32);
    }
    let shift = (m + t as i64 - 1) as u32;
    let mut out = ExpandedPoly::zero(p.nvars());
    for j in 1..=p.nvars() {
        out = out.add(&dunkl_power(p, j, t - 1, beta).mul_var_power(j, shift));
    }
    out
}

/// Multiplication by `p_m = Σ_j x_j^m`; `p_0 = n`.
pub fn apply_power_sum<C: Scalar>(p: &ExpandedPoly<C>, m: u32) -> ExpandedPoly<C> {
    mul_power_sum(p, m)
}

fn mul_power_sum<C: Scalar>(p: &ExpandedPoly<C>, m: u32) -> ExpandedPoly<C> {
    let mut out = ExpandedPoly::zero(p.nvars());
    for j in 1..=p.nvars() {
        out = out.add(&p.mul_var_power(j, m));
    }
    out
}
