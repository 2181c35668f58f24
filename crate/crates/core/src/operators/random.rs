use crate::arith::Scalar;
use crate::partitions::{partitions_of, Partition};
use crate::sympoly::{ExpandedPoly, MSymPoly};
use rand::Rng;

fn small_coeff<R: Rng>(rng: &mut R) -> i64 {
    let c = rng.gen_range(1..=9);
    if rng.gen_bool(0.5) {
        c
    } else {
        -c
    }
}

fn random_exponent<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for _ in 0..degree {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

/// A polynomial with up to `terms` monomials of total degree at most
/// `degree`, at least one of them of degree exactly `degree`, and nonzero
/// integer coefficients with `|c| ≤ 9`.
pub fn random_general<C: Scalar, R: Rng>(rng: &mut R, n: usize, degree: u32, terms: usize) -> ExpandedPoly<C> {
    let mut p = ExpandedPoly::zero(n);
    while p.is_zero() || p.total_degree() != Some(degree) {
        let mut q = ExpandedPoly::zero(n);
        q.add_term(random_exponent(rng, n, degree), C::from_int(small_coeff(rng)));
        for _ in 1..terms.max(1) {
            let d = rng.gen_range(0..=degree);
            q.add_term(random_exponent(rng, n, d), C::from_int(small_coeff(rng)));
        }
        p = q;
    }
    p
}

/// A symmetric polynomial combining up to `terms` monomial symmetric
/// functions of degree at most `degree`, one of them of degree exactly
/// `degree`.
pub fn random_symmetric<C: Scalar, R: Rng>(rng: &mut R, n: usize, degree: u32, terms: usize) -> MSymPoly<C> {
    let pick = |rng: &mut R, d: u32| -> Partition {
        let ps = partitions_of(d, n);
        ps[rng.gen_range(0..ps.len())].clone()
    };
    let mut p = MSymPoly::zero(n);
    while p.is_zero() || p.degrees().last() != Some(&degree) {
        let mut q = MSymPoly::zero(n);
        q.add_term(pick(rng, degree), C::from_int(small_coeff(rng)));
        for _ in 1..terms.max(1) {
            let d = rng.gen_range(0..=degree);
            q.add_term(pick(rng, d), C::from_int(small_coeff(rng)));
        }
        p = q;
    }
    p
}
