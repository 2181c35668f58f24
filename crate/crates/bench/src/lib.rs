//! Benchmark fixtures shared by the criterion benches.

use jackideal::arith::{BigRat, Scalar};
use jackideal::{IdealBasis, MSymPoly, Partition};

/// A random-looking member of the ideal: the basis elements of the top
/// degree with small integer weights.
pub fn top_degree_member(basis: &IdealBasis) -> MSymPoly<BigRat> {
    let n = basis.params().n;
    basis
        .degree(basis.dmax())
        .iter()
        .enumerate()
        .fold(MSymPoly::zero(n), |acc, (i, j)| {
            acc.add(&j.poly.scale(&BigRat::from_int(i as i64 % 5 + 1)))
        })
}

/// Partitions of `d` with at most `n` parts, largest first.
pub fn partitions(d: u32, n: usize) -> Vec<Partition> {
    jackideal::partitions::partitions_of(d, n)
}
