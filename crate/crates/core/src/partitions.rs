//! Partition combinatorics: conjugation, dominance, admissibility, node
//! moves, and the β-dependent scalars attached to a partition.

use crate::arith::{beta_kr, BetaPoly, BigRat, Scalar};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("degree mismatch: |μ| = {0}, |λ| = {1}")]
    DegreeMismatch(u32, u32),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("partition {partition} has more than n = {n} parts")]
    TooLong { partition: Partition, n: usize },
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored; the ambient number of variables is supplied by callers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping zero parts. Errors if the nonzero parts
    /// are not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let trimmed: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        let zeros_inside = parts
            .iter()
            .position(|&p| p == 0)
            .is_some_and(|z| parts[z..].iter().any(|&p| p > 0));
        if zeros_inside || trimmed.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(trimmed))
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        debug_assert!(i >= 1);
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn fits(&self, n: usize) -> bool {
        self.len() <= n
    }

    pub fn require_fits(&self, n: usize) -> Result<(), PartitionError> {
        if self.fits(n) {
            Ok(())
        } else {
            Err(PartitionError::TooLong {
                partition: self.clone(),
                n,
            })
        }
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1) as usize;
        let conj = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition(conj)
    }

    /// Nodes `(i, j)` of the Young diagram, 1-based, row-major.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    pub fn dominance_compare(&self, other: &Partition) -> Result<Dominance, PartitionError> {
        if self.size() != other.size() {
            return Err(PartitionError::DegreeMismatch(self.size(), other.size()));
        }
        let len = self.len().max(other.len());
        let (mut below, mut above) = (false, false);
        let (mut s, mut t) = (0u32, 0u32);
        for i in 1..=len {
            s += self.part(i);
            t += other.part(i);
            match s.cmp(&t) {
                Ordering::Less => below = true,
                Ordering::Greater => above = true,
                Ordering::Equal => {}
            }
        }
        Ok(match (below, above) {
            (false, false) => Dominance::Equal,
            (true, false) => Dominance::Less,
            (false, true) => Dominance::Greater,
            (true, true) => Dominance::Incomparable,
        })
    }

    /// `self ≤ other` in dominance order (false across degrees).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        matches!(self.dominance_compare(other), Ok(Dominance::Less | Dominance::Equal))
    }

    /// Partitions obtained by adding or removing one node, keeping at most
    /// `n` parts.
    pub fn node_moves(&self, n: usize) -> NodeMoves {
        let mut addable = Vec::new();
        let mut removable = Vec::new();
        let rows = self.len();
        for row in 1..=(rows + 1).min(n) {
            if row == 1 || self.part(row - 1) > self.part(row) {
                let mut v = self.padded(row);
                v[row - 1] += 1;
                addable.push(NodeMove {
                    row,
                    partition: Partition::from_unsorted(v),
                });
            }
        }
        for row in 1..=rows {
            if self.part(row) > self.part(row + 1) {
                let mut v = self.0.clone();
                v[row - 1] -= 1;
                removable.push(NodeMove {
                    row,
                    partition: Partition::from_unsorted(v),
                });
            }
        }
        NodeMoves { addable, removable }
    }

    /// `c_λ(β) = Π_{(i,j)∈λ} ((λ′_j − i + 1)β + λ_i − j)`.
    pub fn c_lambda(&self) -> BetaPoly {
        let conj = self.conjugate();
        self.nodes().fold(BetaPoly::one(), |acc, (i, j)| {
            let a = conj.part(j) as i64 - i as i64 + 1;
            let b = self.part(i) as i64 - j as i64;
            &acc * &BetaPoly::linear(a, b)
        })
    }

    /// `ε_λ = Σ_i (λ_i + β(n+1−2i)) λ_i`.
    pub fn cs_eigenvalue(&self, n: usize) -> BetaPoly {
        let (mut c0, mut c1) = (0i64, 0i64);
        for i in 1..=self.len() {
            let p = self.part(i) as i64;
            c0 += p * p;
            c1 += (n as i64 + 1 - 2 * i as i64) * p;
        }
        BetaPoly::from_ints(&[c0, c1])
    }

    /// `Π_{i=1..n} (u + λ_i + (n−i)β)` as coefficients of `u^0, …, u^n`.
    pub fn sekiguchi_eigenvalue(&self, n: usize) -> Vec<BetaPoly> {
        let mut acc = vec![BetaPoly::one()];
        for i in 1..=n {
            let c = BetaPoly::linear((n - i) as i64, self.part(i) as i64);
            let mut next = vec![BetaPoly::zero(); acc.len() + 1];
            for (d, a) in acc.iter().enumerate() {
                next[d + 1] = &next[d + 1] + a;
                next[d] = &next[d] + &(a * &c);
            }
            acc = next;
        }
        acc
    }

    /// Parses `"4,2,0"` or `"4 2"`; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self, PartitionError> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Shorthand for tests and examples; panics on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeMove {
    /// 1-based row of the added or removed node.
    pub row: usize,
    pub partition: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeMoves {
    pub addable: Vec<NodeMove>,
    pub removable: Vec<NodeMove>,
}

impl NodeMoves {
    pub fn all(&self) -> impl Iterator<Item = &NodeMove> {
        self.addable.iter().chain(&self.removable)
    }
}

/// All partitions of `d` with at most `max_len` parts, in decreasing
/// lexicographic order (a linear extension of dominance, largest first).
pub fn partitions_of(d: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rem: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            // remaining parts can hold at most p each
            if (p as u64) * (slots as u64) < rem as u64 {
                break;
            }
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, max_len, &mut Vec::new(), &mut out);
    out
}

/// The triple `(k, r, n)` with `k ≥ 1`, `r ≥ 2`, `gcd(k+1, r−1) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdmissibleParams {
    pub k: u32,
    pub r: u32,
    pub n: usize,
}

impl AdmissibleParams {
    pub fn new(k: u32, r: u32, n: usize) -> Result<Self, PartitionError> {
        validate_kr(k, r)?;
        Ok(AdmissibleParams { k, r, n })
    }

    /// `β(k,r) = −(r−1)/(k+1)`.
    pub fn beta(&self) -> BigRat {
        beta_kr(self.k, self.r)
    }

    pub fn with_n(&self, n: usize) -> Self {
        AdmissibleParams { n, ..*self }
    }

    /// `λ_i − λ_{i+k} ≥ r` for `1 ≤ i ≤ n−k`, with `λ` padded by zeros to
    /// length `n`. Partitions with more than `n` parts are never admissible.
    pub fn admits(&self, lambda: &Partition) -> bool {
        if !lambda.fits(self.n) {
            return false;
        }
        let k = self.k as usize;
        (1..=self.n.saturating_sub(k)).all(|i| lambda.part(i) >= lambda.part(i + k) + self.r)
    }
}

pub fn validate_kr(k: u32, r: u32) -> Result<(), PartitionError> {
    if k < 1 {
        return Err(PartitionError::InvalidParameters(format!("k must be ≥ 1, got {k}")));
    }
    if r < 2 {
        return Err(PartitionError::InvalidParameters(format!("r must be ≥ 2, got {r}")));
    }
    if (k + 1).gcd(&(r - 1)) != 1 {
        return Err(PartitionError::InvalidParameters(format!(
            "k+1 = {} and r−1 = {} must be coprime",
            k + 1,
            r - 1
        )));
    }
    Ok(())
}

/// Checks `(k,r,n)`-admissibility, validating the parameters and the length
/// of `λ`.
pub fn is_admissible(lambda: &Partition, k: u32, r: u32, n: usize) -> Result<bool, PartitionError> {
    let params = AdmissibleParams::new(k, r, n)?;
    lambda.require_fits(n)?;
    Ok(params.admits(lambda))
}

/// Degree-graded list of admissible partitions up to a maximum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleFamily {
    pub params: AdmissibleParams,
    pub dmax: u32,
    pub by_degree: BTreeMap<u32, Vec<Partition>>,
}

impl AdmissibleFamily {
    /// Number of admissible partitions in each degree `0..=dmax`.
    pub fn character(&self) -> Vec<usize> {
        (0..=self.dmax)
            .map(|d| self.by_degree.get(&d).map_or(0, Vec::len))
            .collect()
    }

    pub fn degree(&self, d: u32) -> &[Partition] {
        self.by_degree.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Partition> {
        self.by_degree.values().flatten()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let parts: serde_json::Map<String, serde_json::Value> = self
            .by_degree
            .iter()
            .map(|(d, ps)| (d.to_string(), serde_json::to_value(ps).expect("serializable")))
            .collect();
        serde_json::json!({
            "k": self.params.k,
            "r": self.params.r,
            "n": self.params.n,
            "character": self.character(),
            "partitions": parts,
        })
    }
}

/// Enumerates all `(k,r,n)`-admissible partitions with `|λ| ≤ dmax`.
///
/// Parts are chosen left to right; the window `λ_i ≤ λ_{i−k} − r` prunes
/// the search, so only admissible prefixes are ever extended.
pub fn enumerate_admissible(k: u32, r: u32, n: usize, dmax: u32) -> Result<AdmissibleFamily, PartitionError> {
    let params = AdmissibleParams::new(k, r, n)?;
    let mut by_degree: BTreeMap<u32, Vec<Partition>> = BTreeMap::new();
    let mut cur = Vec::with_capacity(n);
    descend(&params, dmax, 0, &mut cur, &mut by_degree);
    for list in by_degree.values_mut() {
        list.sort_by(|a, b| b.cmp(a));
    }
    Ok(AdmissibleFamily {
        params,
        dmax,
        by_degree,
    })
}

fn descend(
    params: &AdmissibleParams,
    dmax: u32,
    sum: u32,
    cur: &mut Vec<u32>,
    out: &mut BTreeMap<u32, Vec<Partition>>,
) {
    let i = cur.len();
    if i == params.n {
        out.entry(sum)
            .or_default()
            .push(Partition::new(cur.clone()).expect("decreasing by construction"));
        return;
    }
    let k = params.k as usize;
    let mut hi = cur.last().copied().unwrap_or(dmax - sum).min(dmax - sum);
    if i >= k {
        match cur[i - k].checked_sub(params.r) {
            Some(cap) => hi = hi.min(cap),
            None => return,
        }
    }
    for p in 0..=hi {
        cur.push(p);
        descend(params, dmax, sum + p, cur, out);
        cur.pop();
    }
}

/// Direct check that none of the denominators controlling regularity at
/// `β(k,r)` vanish:
///
/// - `(j−i)β + λ_i − λ_j ≠ 0` for `1 ≤ i < j ≤ n`;
/// - `(λ′_j − i + 1)β + λ_i − j ≠ 0` for every node `(i, j)`;
/// - `(j−i)β + λ_i − λ_j ≠ 1` for `i < j` whenever `λ_j < λ_{j−1}`.
pub fn check_nonvanishing(lambda: &Partition, params: &AdmissibleParams) -> bool {
    let beta = params.beta();
    let n = params.n.max(lambda.len());
    let lin = |a: i64, b: i64| BigRat::from_int(a) * &beta + BigRat::from_int(b);
    let part = |i: usize| lambda.part(i) as i64;
    for j in 2..=n {
        for i in 1..j {
            let v = lin((j - i) as i64, part(i) - part(j));
            if v.is_zero() {
                return false;
            }
            if part(j) < part(j - 1) && v.is_one() {
                return false;
            }
        }
    }
    let conj = lambda.conjugate();
    lambda
        .nodes()
        .all(|(i, j)| !lin(conj.part(j) as i64 - i as i64 + 1, part(i) - j as i64).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    #[test]
    fn conjugation() {
        assert_eq!(partition![3, 1].conjugate(), partition![2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(partition![2, 2].conjugate(), partition![2, 2]);
    }

    #[test]
    fn construction_rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![4, 2, 0]).unwrap(), partition![4, 2]);
        assert_eq!(Partition::parse("4,2,0").unwrap(), partition![4, 2]);
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        use Dominance::*;
        let cmp = |a: Partition, b: Partition| a.dominance_compare(&b).unwrap();
        assert_eq!(cmp(partition![1, 1, 1, 1], partition![4]), Less);
        assert_eq!(cmp(partition![3, 1, 1, 1], partition![2, 2, 2]), Incomparable);
        assert_eq!(cmp(partition![2, 1], partition![2, 1]), Equal);
        assert_eq!(
            partition![2].dominance_compare(&partition![1]),
            Err(PartitionError::DegreeMismatch(2, 1))
        );
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&partition![4, 2], 1, 2, 3).unwrap());
        assert!(!is_admissible(&partition![3, 2], 1, 2, 2).unwrap());
        assert!(is_admissible(&partition![3, 3], 2, 3, 4).unwrap());
        assert!(matches!(
            is_admissible(&partition![1], 1, 3, 2),
            Err(PartitionError::InvalidParameters(_))
        ));
        assert!(matches!(
            is_admissible(&partition![1, 1, 1], 2, 2, 2),
            Err(PartitionError::TooLong { .. })
        ));
    }

    #[test]
    fn zero_padding_counts() {
        // (1,0) fails 1−0 ≥ 2, and ∅ = (0,0) fails 0−0 ≥ 2
        assert!(!is_admissible(&partition![1], 1, 2, 2).unwrap());
        assert!(!is_admissible(&Partition::empty(), 1, 2, 2).unwrap());
        // n ≤ k: condition is vacuous
        assert!(is_admissible(&Partition::empty(), 2, 2, 2).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let fam = enumerate_admissible(1, 2, 2, 4).unwrap();
        assert_eq!(fam.character(), vec![0, 0, 1, 1, 2]);
        assert_eq!(fam.degree(4), &[partition![4], partition![3, 1]]);
        assert_eq!(enumerate_admissible(2, 2, 2, 1).unwrap().character(), vec![1, 1]);
        // k+1 = 2 and r−1 = 2 share a factor
        assert!(enumerate_admissible(1, 3, 3, 3).is_err());
        // first (1,4,3)-admissible partition is (8,4)
        let fam = enumerate_admissible(1, 4, 3, 12).unwrap();
        assert_eq!(fam.character().iter().position(|&c| c > 0), Some(12));
        assert_eq!(fam.degree(12), &[partition![8, 4]]);
        assert!(enumerate_admissible(1, 1, 2, 3).is_err());
    }

    #[test]
    fn family_json() {
        let v = enumerate_admissible(1, 2, 2, 4).unwrap().to_json();
        assert_eq!(v["character"], serde_json::json!([0, 0, 1, 1, 2]));
        assert_eq!(v["partitions"]["4"], serde_json::json!([[4], [3, 1]]));
    }

    #[test]
    fn c_lambda_examples() {
        assert_eq!(Partition::empty().c_lambda(), BetaPoly::one());
        assert_eq!(partition![1].c_lambda(), BetaPoly::beta());
        assert_eq!(partition![2].c_lambda(), BetaPoly::from_ints(&[0, 1, 1]));
        assert_eq!(partition![2].c_lambda().eval(&rat(-1, 3)), rat(-2, 9));
    }

    #[test]
    fn cs_eigenvalue_examples() {
        assert!(Partition::empty().cs_eigenvalue(3).is_zero());
        assert_eq!(partition![2].cs_eigenvalue(2), BetaPoly::from_ints(&[4, 2]));
        assert_eq!(partition![1, 1].cs_eigenvalue(2), BetaPoly::from_ints(&[2]));
    }

    #[test]
    fn sekiguchi_eigenvalue_examples() {
        let one = BetaPoly::one();
        assert_eq!(
            Partition::empty().sekiguchi_eigenvalue(1),
            vec![BetaPoly::zero(), one.clone()]
        );
        // (u + 2 + β)·u
        assert_eq!(
            partition![2].sekiguchi_eigenvalue(2),
            vec![BetaPoly::zero(), BetaPoly::from_ints(&[2, 1]), one.clone()]
        );
        // (u + 1 + β)(u + 1) = u² + (2+β)u + (1+β)
        assert_eq!(
            partition![1, 1].sekiguchi_eigenvalue(2),
            vec![BetaPoly::from_ints(&[1, 1]), BetaPoly::from_ints(&[2, 1]), one]
        );
    }

    #[test]
    fn node_move_examples() {
        let names = |v: &[NodeMove]| v.iter().map(|m| m.partition.clone()).collect::<Vec<_>>();
        let m = partition![2, 1].node_moves(3);
        assert_eq!(
            names(&m.addable),
            vec![partition![3, 1], partition![2, 2], partition![2, 1, 1]]
        );
        assert_eq!(names(&m.removable), vec![partition![1, 1], partition![2]]);
        let m = Partition::empty().node_moves(2);
        assert_eq!(names(&m.addable), vec![partition![1]]);
        assert!(m.removable.is_empty());
        let m = partition![2, 2].node_moves(2);
        assert_eq!(names(&m.addable), vec![partition![3, 2]]);
        assert_eq!(names(&m.removable), vec![partition![2, 1]]);
    }

    #[test]
    fn nonvanishing_examples() {
        let p = AdmissibleParams::new(1, 2, 2).unwrap();
        assert!(check_nonvanishing(&partition![2], &p));
        assert!(check_nonvanishing(
            &Partition::empty(),
            &AdmissibleParams::new(3, 2, 2).unwrap()
        ));
        assert!(check_nonvanishing(&partition![4, 2], &p.with_n(3)));
        // (2,1) is not admissible and hits 2β + 1 = 0 at the node (1,1)
        assert!(!check_nonvanishing(&partition![2, 1], &p));
    }

    #[test]
    fn partitions_of_counts() {
        assert_eq!(partitions_of(0, 3), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4, 2),
            vec![partition![4], partition![3, 1], partition![2, 2]]
        );
        assert_eq!(partitions_of(10, 4).len(), 23);
        assert_eq!(partitions_of(8, 8).len(), 22);
    }

    /// Independent oracle: every composition of `d` into `n` nonnegative
    /// parts, kept when weakly decreasing and passing the definition.
    fn brute_force(k: u32, r: u32, n: usize, d: u32) -> Vec<Partition> {
        fn comps(d: u32, n: usize) -> Vec<Vec<u32>> {
            if n == 0 {
                return if d == 0 { vec![vec![]] } else { vec![] };
            }
            (0..=d)
                .flat_map(|first| {
                    comps(d - first, n - 1).into_iter().map(move |mut rest| {
                        rest.insert(0, first);
                        rest
                    })
                })
                .collect()
        }
        let k = k as usize;
        let mut out: Vec<Partition> = comps(d, n)
            .into_iter()
            .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
            .filter(|v| (0..n.saturating_sub(k)).all(|i| v[i] >= v[i + k] + r))
            .map(|v| Partition::new(v).unwrap())
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (k, r) in [(1, 2), (2, 2), (2, 3), (3, 2), (2, 5), (1, 4), (4, 3)] {
            for n in 1..=4 {
                let fam = enumerate_admissible(k, r, n, 12).unwrap();
                for d in 0..=12 {
                    assert_eq!(
                        fam.degree(d),
                        brute_force(k, r, n, d).as_slice(),
                        "k={k} r={r} n={n} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn admissible_partitions_pass_nonvanishing() {
        for (k, r) in [(1, 2), (2, 2), (2, 3), (3, 2), (2, 5), (1, 4)] {
            for n in 1..=5 {
                let fam = enumerate_admissible(k, r, n, 14).unwrap();
                for lam in fam.iter() {
                    assert!(check_nonvanishing(lam, &fam.params), "{lam} k={k} r={r} n={n}");
                    let c = lam.c_lambda().eval(&fam.params.beta());
                    assert!(!c.is_zero(), "c_λ vanishes for {lam}");
                }
            }
        }
    }

    fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugation_is_involution(p in arb_partition(7, 6)) {
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(p.conjugate().size(), p.size());
        }

        #[test]
        fn dominance_is_partial_order(d in 1u32..9, a in 0usize..30, b in 0usize..30, c in 0usize..30) {
            let all = partitions_of(d, d as usize);
            let (x, y, z) = (&all[a % all.len()], &all[b % all.len()], &all[c % all.len()]);
            prop_assert!(x.dominated_by(x));
            if x.dominated_by(y) && y.dominated_by(x) {
                prop_assert_eq!(x, y);
            }
            if x.dominated_by(y) && y.dominated_by(z) {
                prop_assert!(x.dominated_by(z));
            }
        }

        #[test]
        fn shift_preserves_admissibility(p in arb_partition(12, 4), kr in 0usize..4) {
            let (k, r) = [(1, 2), (2, 3), (1, 4), (3, 2)][kr];
            let params = AdmissibleParams::new(k, r, 4).unwrap();
            if params.admits(&p) {
                let shifted = Partition::from_unsorted(p.padded(4).iter().map(|x| x + r).collect());
                prop_assert!(params.admits(&shifted));
            }
        }

        #[test]
        fn lex_order_extends_dominance(d in 1u32..10) {
            let all = partitions_of(d, 4);
            for (i, a) in all.iter().enumerate() {
                for b in &all[i + 1..] {
                    prop_assert!(!a.dominated_by(b) || a == b);
                }
            }
        }
    }
}
