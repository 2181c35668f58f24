//! Jack polynomials `P_λ(x; β)` over `ℚ(β)`, computed as the unitriangular
//! eigenvectors of the Calogero-Sutherland Hamiltonian in the monomial
//! basis, and their specialization at a rational coupling.

use crate::arith::{BetaPoly, BetaRatFunc, BigRat, RatJson, Scalar};
use crate::operators::{apply_hamiltonian, apply_sekiguchi, OperatorError};
use crate::partitions::{partitions_of, validate_kr, Partition, PartitionError};
use crate::sympoly::{MSymPoly, SymPolyError};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum JackError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    SymPoly(#[from] SymPolyError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("Hamiltonian eigenvalues of {lambda} and {mu} coincide")]
    DegenerateEigenvalue { lambda: Partition, mu: Partition },
    #[error("coefficient of m_{mu} has a pole of order {order} at β = {at}")]
    SpecializationPole { mu: Partition, order: u32, at: BigRat },
    #[error("jack cache: {0}")]
    Cache(String),
}

/// Row `μ` of the Hamiltonian in the monomial basis: `H m_μ = Σ_ν h_{μν} m_ν`.
pub fn hamiltonian_matrix_row(mu: &Partition, n: usize) -> Result<BTreeMap<Partition, BetaPoly>, JackError> {
    mu.require_fits(n)?;
    let h = apply_hamiltonian(&MSymPoly::monomial(n, mu.clone()), &BetaPoly::beta())?;
    Ok(h.terms().clone())
}

/// `P_λ = m_λ + Σ_{μ<λ} u_{λμ}(β) m_μ` in `n` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct JackPoly {
    lambda: Partition,
    poly: MSymPoly<BetaRatFunc>,
}

impl JackPoly {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &MSymPoly<BetaRatFunc> {
        &self.poly
    }

    /// `u_{λμ}`, zero off the support.
    pub fn coeff(&self, mu: &Partition) -> BetaRatFunc {
        self.poly.coeff(mu)
    }

    /// Least common multiple of the coefficient denominators, monic.
    pub fn common_denominator(&self) -> BetaPoly {
        self.poly
            .terms()
            .values()
            .fold(BetaPoly::one(), |acc, c| poly_lcm(&acc, c.den()))
    }

    /// `f·P_λ`, provided every coefficient becomes a polynomial in `β`.
    pub fn scaled_to_polynomial(&self, f: &BetaPoly) -> Option<MSymPoly<BetaPoly>> {
        let fr = BetaRatFunc::from_poly(f.clone());
        self.poly
            .try_map_coeffs(|_, c| {
                let v = c.mul(&fr);
                if v.is_polynomial() {
                    Ok(v.num().clone())
                } else {
                    Err(())
                }
            })
            .ok()
    }

    /// `c_λ(β)·P_λ` when it has polynomial coefficients.
    pub fn cleared_by_c_lambda(&self) -> Option<MSymPoly<BetaPoly>> {
        self.scaled_to_polynomial(&self.lambda.c_lambda())
    }

    /// Largest pole order of any coefficient at `at`; 0 when all are regular.
    pub fn pole_order_at(&self, at: &BigRat) -> u32 {
        self.poly
            .terms()
            .values()
            .filter_map(|c| c.pole_order(at))
            .max()
            .map_or(0, |o| o.max(0) as u32)
    }

    /// Evaluates every coefficient at `β = at`.
    pub fn specialize_at(&self, at: &BigRat) -> Result<MSymPoly<BigRat>, JackError> {
        self.poly.try_map_coeffs(|mu, c| {
            c.evaluate_at(at).map_err(|e| JackError::SpecializationPole {
                mu: mu.clone(),
                order: e.order,
                at: e.at,
            })
        })
    }

    /// `P_λ(1, …, 1)` by summing coefficients times orbit sizes.
    pub fn evaluate_all_ones(&self) -> BetaRatFunc {
        let ones = vec![BigRat::from_int(1); self.nvars()];
        self.poly.evaluate(&ones).expect("dimension matches")
    }

    /// Checks `H P_λ = ε_λ P_λ` identically in `β`.
    pub fn check_hamiltonian(&self) -> Result<bool, JackError> {
        let den = self.common_denominator();
        let p = self.scaled_to_polynomial(&den).expect("lcm clears denominators");
        let hp = apply_hamiltonian(&p, &BetaPoly::beta())?;
        Ok(hp == p.scale(&self.lambda.cs_eigenvalue(self.nvars())))
    }

    /// Checks the Sekiguchi eigen-equation `S(u) P_λ = c_λλ(u) P_λ`
    /// identically in `u` and `β`.
    pub fn check_sekiguchi(&self) -> Result<bool, JackError> {
        let n = self.nvars();
        let den = self.common_denominator();
        let p = self
            .scaled_to_polynomial(&den)
            .expect("lcm clears denominators")
            .to_expanded()?;
        let s = apply_sekiguchi(&p, &BetaPoly::beta());
        let ev = self.lambda.sekiguchi_eigenvalue(n);
        Ok(s.len() == ev.len() && s.iter().zip(&ev).all(|(lhs, e)| *lhs == p.scale(e)))
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.poly.to_json();
        v["lambda"] = json!(self.lambda);
        v
    }

    pub fn from_json(v: &Value) -> Result<Self, JackError> {
        let lambda: Partition =
            serde_json::from_value(v["lambda"].clone()).map_err(|e| JackError::Cache(format!("bad lambda: {e}")))?;
        let poly: MSymPoly<BetaRatFunc> = MSymPoly::from_json(v)?;
        if !poly.coeff(&lambda).is_one() {
            return Err(JackError::Cache("stored polynomial is not monic in m_λ".into()));
        }
        Ok(JackPoly { lambda, poly })
    }
}

fn poly_lcm(a: &BetaPoly, b: &BetaPoly) -> BetaPoly {
    if b.is_constant() {
        return a.clone();
    }
    let g = a.gcd(b);
    (a * &b.div_rem(&g).0).monic()
}

/// A Jack polynomial with its coefficients evaluated at `β(k, r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecializedJack {
    pub lambda: Partition,
    pub k: u32,
    pub r: u32,
    pub poly: MSymPoly<BigRat>,
}

impl SpecializedJack {
    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn beta(&self) -> BigRat {
        crate::arith::beta_kr(self.k, self.r)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.poly.to_json();
        v["lambda"] = json!(self.lambda);
        v["k"] = json!(self.k);
        v["r"] = json!(self.r);
        v["beta"] = json!(RatJson::from(&self.beta()));
        v
    }

    pub fn from_json(v: &Value) -> Result<Self, JackError> {
        let field = |name: &str| -> Result<u32, JackError> {
            v[name]
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| JackError::Cache(format!("missing or bad field {name}")))
        };
        let lambda: Partition =
            serde_json::from_value(v["lambda"].clone()).map_err(|e| JackError::Cache(format!("bad lambda: {e}")))?;
        let (k, r) = (field("k")?, field("r")?);
        validate_kr(k, r)?;
        let poly: MSymPoly<BigRat> = MSymPoly::from_json(v)?;
        if !poly.coeff(&lambda).is_one() {
            return Err(JackError::Cache("stored polynomial is not monic in m_λ".into()));
        }
        Ok(SpecializedJack { lambda, k, r, poly })
    }
}

/// Principal specialization `P_λ(1, …, 1)` from the product formula
/// `Π_{(i,j)∈λ} ((n−i+1)β + j − 1) / ((λ′_j − i + 1)β + λ_i − j)`.
pub fn principal_specialization(lambda: &Partition, n: usize) -> Result<BetaRatFunc, JackError> {
    lambda.require_fits(n)?;
    let conj = lambda.conjugate();
    let (mut num, mut den) = (BetaPoly::one(), BetaPoly::one());
    for (i, j) in lambda.nodes() {
        num = &num * &BetaPoly::linear(n as i64 - i as i64 + 1, j as i64 - 1);
        den = &den * &BetaPoly::linear(conj.part(j) as i64 - i as i64 + 1, lambda.part(i) as i64 - j as i64);
    }
    Ok(BetaRatFunc::new(num, den))
}

type RowKey = (Partition, usize);

/// Memo of Jack polynomials and Hamiltonian rows keyed by `(λ, n)`. Safe
/// for concurrent readers and writers; a duplicate insertion keeps the
/// first value. With a directory attached, Jack polynomials are also
/// persisted as one JSON file per key.
#[derive(Debug, Default)]
pub struct JackCache {
    jacks: RwLock<HashMap<RowKey, Arc<JackPoly>>>,
    rows: RwLock<HashMap<RowKey, Arc<BTreeMap<Partition, BetaPoly>>>>,
    dir: Option<PathBuf>,
}

impl JackCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Result<Self, JackError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| JackError::Cache(format!("{}: {e}", dir.display())))?;
        Ok(JackCache {
            dir: Some(dir),
            ..Self::default()
        })
    }

    pub fn len(&self) -> usize {
        self.jacks.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn file_for(dir: &Path, lambda: &Partition, n: usize) -> PathBuf {
        let parts: Vec<String> = lambda.parts().iter().map(u32::to_string).collect();
        let stem = if parts.is_empty() {
            "empty".to_string()
        } else {
            parts.join("-")
        };
        dir.join(format!("jack_n{n}_{stem}.json"))
    }

    fn load(&self, lambda: &Partition, n: usize) -> Option<JackPoly> {
        let path = Self::file_for(self.dir.as_ref()?, lambda, n);
        let text = fs::read_to_string(path).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        let j = JackPoly::from_json(&v).ok()?;
        (j.lambda == *lambda && j.nvars() == n).then_some(j)
    }

    fn store(&self, j: &JackPoly) -> Result<(), JackError> {
        let Some(dir) = &self.dir else { return Ok(()) };
        let path = Self::file_for(dir, &j.lambda, j.nvars());
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let io = |e: std::io::Error| JackError::Cache(format!("{}: {e}", path.display()));
        fs::write(&tmp, j.to_json().to_string()).map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)
    }

    pub fn hamiltonian_row(&self, mu: &Partition, n: usize) -> Result<Arc<BTreeMap<Partition, BetaPoly>>, JackError> {
        let key = (mu.clone(), n);
        if let Some(r) = self.rows.read().expect("cache lock").get(&key) {
            return Ok(r.clone());
        }
        let row = Arc::new(hamiltonian_matrix_row(mu, n)?);
        Ok(self.rows.write().expect("cache lock").entry(key).or_insert(row).clone())
    }

    pub fn jack(&self, lambda: &Partition, n: usize) -> Result<Arc<JackPoly>, JackError> {
        let key = (lambda.clone(), n);
        if let Some(j) = self.jacks.read().expect("cache lock").get(&key) {
            return Ok(j.clone());
        }
        let j = match self.load(lambda, n) {
            Some(j) => j,
            None => {
                let j = solve_jack(lambda, n, self)?;
                self.store(&j)?;
                j
            }
        };
        Ok(self
            .jacks
            .write()
            .expect("cache lock")
            .entry(key)
            .or_insert(Arc::new(j))
            .clone())
    }

    pub fn specialize(&self, lambda: &Partition, n: usize, k: u32, r: u32) -> Result<SpecializedJack, JackError> {
        validate_kr(k, r)?;
        let j = self.jack(lambda, n)?;
        Ok(SpecializedJack {
            lambda: lambda.clone(),
            k,
            r,
            poly: j.specialize_at(&crate::arith::beta_kr(k, r))?,
        })
    }
}

fn solve_jack(lambda: &Partition, n: usize, cache: &JackCache) -> Result<JackPoly, JackError> {
    lambda.require_fits(n)?;
    let below: Vec<Partition> = partitions_of(lambda.size(), n)
        .into_iter()
        .filter(|mu| mu.dominated_by(lambda))
        .collect();
    let eps_lambda = lambda.cs_eigenvalue(n);
    let mut u: BTreeMap<Partition, BetaRatFunc> = BTreeMap::new();
    let mut rows: Vec<(Partition, Arc<BTreeMap<Partition, BetaPoly>>)> = Vec::new();
    // decreasing lexicographic order refines dominance, so every ν > μ is
    // solved before μ
    for mu in &below {
        let val = if mu == lambda {
            BetaRatFunc::one()
        } else {
            let gap = &eps_lambda - &mu.cs_eigenvalue(n);
            if gap.is_zero() {
                return Err(JackError::DegenerateEigenvalue {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                });
            }
            let mut acc = BetaRatFunc::zero();
            for (nu, row) in &rows {
                if let (Some(h), Some(unu)) = (row.get(mu), u.get(nu)) {
                    acc = acc.add(&unu.mul(&BetaRatFunc::from_poly(h.clone())));
                }
            }
            acc.div(&BetaRatFunc::from_poly(gap))
        };
        if !val.is_zero() {
            rows.push((mu.clone(), cache.hamiltonian_row(mu, n)?));
            u.insert(mu.clone(), val);
        }
    }
    Ok(JackPoly {
        lambda: lambda.clone(),
        poly: MSymPoly::from_terms(n, u),
    })
}

/// `P_λ` in `n` variables, computed without a shared cache.
pub fn jack_symbolic(lambda: &Partition, n: usize) -> Result<JackPoly, JackError> {
    solve_jack(lambda, n, &JackCache::new())
}

pub fn verify_sekiguchi(lambda: &Partition, n: usize) -> Result<bool, JackError> {
    jack_symbolic(lambda, n)?.check_sekiguchi()
}

pub fn specialize(lambda: &Partition, n: usize, k: u32, r: u32) -> Result<SpecializedJack, JackError> {
    JackCache::new().specialize(lambda, n, k, r)
}

/// Maximum pole order of the coefficients of `P_λ` at `β0`.
pub fn pole_profile(lambda: &Partition, n: usize, beta0: &BigRat) -> Result<u32, JackError> {
    Ok(jack_symbolic(lambda, n)?.pole_order_at(beta0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::partition;

    fn bp(c: &[i64]) -> BetaPoly {
        BetaPoly::from_ints(c)
    }

    #[test]
    fn hamiltonian_rows() {
        let r = hamiltonian_matrix_row(&partition![1, 1], 2).unwrap();
        assert_eq!(r, BTreeMap::from([(partition![1, 1], bp(&[2]))]));
        let r = hamiltonian_matrix_row(&partition![2], 2).unwrap();
        assert_eq!(
            r,
            BTreeMap::from([(partition![2], bp(&[4, 2])), (partition![1, 1], bp(&[0, 4]))])
        );
        let r = hamiltonian_matrix_row(&partition![1], 1).unwrap();
        assert_eq!(r, BTreeMap::from([(partition![1], bp(&[1]))]));
        assert!(hamiltonian_matrix_row(&partition![1, 1, 1], 2).is_err());
    }

    #[test]
    fn hamiltonian_is_triangular_with_eigenvalue_diagonal() {
        for n in 1..=4 {
            for d in 0..=6 {
                for mu in partitions_of(d, n) {
                    let row = hamiltonian_matrix_row(&mu, n).unwrap();
                    assert_eq!(
                        row.get(&mu).cloned().unwrap_or_default(),
                        mu.cs_eigenvalue(n),
                        "{mu} n={n}"
                    );
                    assert!(row.keys().all(|nu| nu.dominated_by(&mu)), "{mu} n={n}");
                }
            }
        }
    }

    #[test]
    fn small_jacks() {
        let j = jack_symbolic(&partition![1], 3).unwrap();
        assert_eq!(j.poly(), &MSymPoly::monomial(3, partition![1]));
        let j = jack_symbolic(&partition![1, 1], 2).unwrap();
        assert_eq!(j.poly(), &MSymPoly::monomial(2, partition![1, 1]));
        let j = jack_symbolic(&partition![2], 2).unwrap();
        assert_eq!(j.coeff(&partition![2]), BetaRatFunc::one());
        assert_eq!(j.coeff(&partition![1, 1]), BetaRatFunc::new(bp(&[0, 2]), bp(&[1, 1])));
        let e = jack_symbolic(&Partition::empty(), 2).unwrap();
        assert_eq!(e.poly(), &MSymPoly::constant(2, BetaRatFunc::one()));
    }

    #[test]
    fn beta_one_gives_schur_functions() {
        // at β = 1, P_(2,1) in 3 variables is s_(2,1) = m_(2,1) + 2 m_(1,1,1)
        let j = jack_symbolic(&partition![2, 1], 3).unwrap();
        let s = j.specialize_at(&rat(1, 1)).unwrap();
        assert_eq!(s.coeff(&partition![1, 1, 1]), rat(2, 1));
        // at β = 0, P_λ is the monomial symmetric function
        let m = j.specialize_at(&rat(0, 1)).unwrap();
        assert_eq!(m, MSymPoly::monomial(3, partition![2, 1]));
    }

    #[test]
    fn eigen_equations_hold() {
        for (l, n) in [
            (partition![1], 2),
            (partition![2], 2),
            (partition![2, 1], 3),
            (partition![3, 1], 3),
            (partition![2, 2], 3),
        ] {
            let j = jack_symbolic(&l, n).unwrap();
            assert!(j.check_hamiltonian().unwrap(), "{l}");
            assert!(j.check_sekiguchi().unwrap(), "{l}");
            assert!(j.cleared_by_c_lambda().is_some(), "{l}");
        }
        assert!(verify_sekiguchi(&partition![2, 1], 3).unwrap());
    }

    #[test]
    fn specialization_examples() {
        let s = specialize(&partition![2], 2, 1, 2).unwrap();
        assert_eq!(
            s.poly,
            MSymPoly::from_terms(2, [(partition![2], rat(1, 1)), (partition![1, 1], rat(-2, 1))])
        );
        let s = specialize(&partition![1, 1], 2, 3, 4).unwrap();
        assert_eq!(s.poly, MSymPoly::monomial(2, partition![1, 1]));
        let s = specialize(&Partition::empty(), 2, 1, 2).unwrap();
        assert_eq!(s.poly, MSymPoly::constant(2, rat(1, 1)));
        let v = s.to_json();
        assert_eq!(v["beta"]["num"], "-1");
        assert_eq!(v["beta"]["den"], "2");
        // P_(2) at β = −1: coefficient 2β/(1+β) has a simple pole
        let j = jack_symbolic(&partition![2], 2).unwrap();
        assert_eq!(
            j.specialize_at(&rat(-1, 1)),
            Err(JackError::SpecializationPole {
                mu: partition![1, 1],
                order: 1,
                at: rat(-1, 1)
            })
        );
        assert_eq!(pole_profile(&partition![2], 2, &rat(-1, 1)).unwrap(), 1);
        assert_eq!(pole_profile(&partition![1], 2, &rat(-1, 2)).unwrap(), 0);
    }

    #[test]
    fn principal_specialization_examples() {
        assert_eq!(
            principal_specialization(&partition![1], 4).unwrap(),
            BetaRatFunc::from_int(4)
        );
        assert_eq!(
            principal_specialization(&Partition::empty(), 3).unwrap(),
            BetaRatFunc::one()
        );
        let expect = BetaRatFunc::new(bp(&[2, 4]), bp(&[1, 1]));
        assert_eq!(principal_specialization(&partition![2], 2).unwrap(), expect);
        assert_eq!(jack_symbolic(&partition![2], 2).unwrap().evaluate_all_ones(), expect);
        for (l, n) in [(partition![2, 1], 3), (partition![3, 1], 2), (partition![2, 2, 1], 4)] {
            let j = jack_symbolic(&l, n).unwrap();
            assert_eq!(j.evaluate_all_ones(), principal_specialization(&l, n).unwrap(), "{l}");
        }
    }

    #[test]
    fn stability_under_restriction() {
        let big = jack_symbolic(&partition![2, 1], 4).unwrap();
        let small = jack_symbolic(&partition![2, 1], 3).unwrap();
        assert_eq!(big.poly().restrict_last_var(), *small.poly());
    }

    #[test]
    fn cache_reuses_and_persists() {
        let dir = tempfile::tempdir().unwrap();
        let c = JackCache::with_dir(dir.path()).unwrap();
        let a = c.jack(&partition![3, 1], 3).unwrap();
        let b = c.jack(&partition![3, 1], 3).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        let c2 = JackCache::with_dir(dir.path()).unwrap();
        let d = c2.jack(&partition![3, 1], 3).unwrap();
        assert_eq!(*a, *d);
        assert_eq!(JackPoly::from_json(&a.to_json()).unwrap(), *a);
    }

    #[test]
    fn cache_concurrent_inserts() {
        use rayon::prelude::*;
        let c = JackCache::new();
        let ls = partitions_of(4, 3);
        let out: Vec<_> = ls
            .par_iter()
            .chain(ls.par_iter())
            .map(|l| c.jack(l, 3).unwrap())
            .collect();
        assert_eq!(c.len(), ls.len());
        for (a, l) in out.iter().zip(&ls) {
            assert_eq!(a.lambda(), l);
        }
    }
}
