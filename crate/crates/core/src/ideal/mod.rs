//! The ideal `I^(k,r)_n` spanned by Jack polynomials of admissible
//! partitions at `β = β(k,r)`: basis construction, membership by triangular
//! reduction, and the verification suites.

mod coefficients;
mod suites;
mod wheel;

pub use coefficients::{
    lassalle_down, lassalle_down_factors, lassalle_up, pieri_coefficient, pieri_factors, LassalleDownFactors,
    PieriFactor,
};
pub use suites::*;
pub use wheel::{integer_rank, vanishes_on_coincidence, wheel_dimension};

use crate::arith::{BigRat, Scalar};
use crate::jack::{JackCache, JackError, SpecializedJack};
use crate::operators::OperatorError;
use crate::partitions::{enumerate_admissible, AdmissibleParams, Dominance, Partition, PartitionError};
use crate::sympoly::{MSymPoly, SymPolyError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IdealError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Jack(#[from] JackError),
    #[error(transparent)]
    SymPoly(#[from] SymPolyError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("no node can be added or removed in row {row} of {partition}")]
    InvalidNode { partition: Partition, row: usize },
    #[error("polynomial has degree {degree}, basis only reaches {dmax}")]
    DegreeOverflow { degree: u32, dmax: u32 },
    #[error("polynomial has {got} variables, basis has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis directory: {0}")]
    Storage(String),
}

/// Specialized Jack polynomials of all admissible partitions up to a degree.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealBasis {
    params: AdmissibleParams,
    dmax: u32,
    elements: BTreeMap<u32, Vec<SpecializedJack>>,
    index: HashMap<Partition, (u32, usize)>,
}

impl IdealBasis {
    fn from_elements(params: AdmissibleParams, dmax: u32, elements: BTreeMap<u32, Vec<SpecializedJack>>) -> Self {
        let index = elements
            .iter()
            .flat_map(|(d, v)| v.iter().enumerate().map(move |(i, j)| (j.lambda.clone(), (*d, i))))
            .collect();
        IdealBasis {
            params,
            dmax,
            elements,
            index,
        }
    }

    pub fn build(params: AdmissibleParams, dmax: u32, cache: &JackCache) -> Result<Self, IdealError> {
        let family = enumerate_admissible(params.k, params.r, params.n, dmax)?;
        let lambdas: Vec<Partition> = family.iter().cloned().collect();
        let jacks: Vec<SpecializedJack> = lambdas
            .par_iter()
            .map(|l| cache.specialize(l, params.n, params.k, params.r))
            .collect::<Result<_, _>>()?;
        let mut elements: BTreeMap<u32, Vec<SpecializedJack>> = (0..=dmax).map(|d| (d, Vec::new())).collect();
        for j in jacks {
            elements.entry(j.lambda.size()).or_default().push(j);
        }
        Ok(Self::from_elements(params, dmax, elements))
    }

    pub fn params(&self) -> &AdmissibleParams {
        &self.params
    }

    pub fn dmax(&self) -> u32 {
        self.dmax
    }

    pub fn beta(&self) -> BigRat {
        self.params.beta()
    }

    pub fn degree(&self, d: u32) -> &[SpecializedJack] {
        self.elements.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &SpecializedJack> {
        self.elements.values().flatten()
    }

    pub fn get(&self, lambda: &Partition) -> Option<&SpecializedJack> {
        let (d, i) = self.index.get(lambda)?;
        self.elements.get(d).and_then(|v| v.get(*i))
    }

    /// Number of elements in each degree `0..=dmax`.
    pub fn character(&self) -> Vec<usize> {
        (0..=self.dmax).map(|d| self.degree(d).len()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.params.k, "r": self.params.r, "n": self.params.n, "dmax": self.dmax,
            "beta": crate::arith::RatJson::from(&self.beta()),
            "character": self.character(),
            "degrees": self.elements.iter().map(|(d, v)| {
                json!({"degree": d, "elements": v.iter().map(SpecializedJack::to_json).collect::<Vec<_>>()})
            }).collect::<Vec<_>>(),
        })
    }

    /// Writes `basis.json` (parameters) and one `degree_<d>.json` per degree.
    pub fn save(&self, dir: &Path) -> Result<(), IdealError> {
        let io = |e: std::io::Error| IdealError::Storage(format!("{}: {e}", dir.display()));
        fs::create_dir_all(dir).map_err(io)?;
        let meta = json!({"k": self.params.k, "r": self.params.r, "n": self.params.n, "dmax": self.dmax});
        fs::write(dir.join("basis.json"), meta.to_string()).map_err(io)?;
        for (d, v) in &self.elements {
            let doc = Value::Array(v.iter().map(SpecializedJack::to_json).collect());
            fs::write(dir.join(format!("degree_{d}.json")), doc.to_string()).map_err(io)?;
        }
        Ok(())
    }

    pub fn load(dir: &Path) -> Result<Self, IdealError> {
        let read = |name: &str| -> Result<Value, IdealError> {
            let path = dir.join(name);
            let text =
                fs::read_to_string(&path).map_err(|e| IdealError::Storage(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| IdealError::Storage(format!("{}: {e}", path.display())))
        };
        let meta = read("basis.json")?;
        let num = |name: &str| {
            meta[name]
                .as_u64()
                .ok_or_else(|| IdealError::Storage(format!("basis.json: missing {name}")))
        };
        let params = AdmissibleParams::new(num("k")? as u32, num("r")? as u32, num("n")? as usize)?;
        let dmax = num("dmax")? as u32;
        let mut elements = BTreeMap::new();
        for d in 0..=dmax {
            let doc = read(&format!("degree_{d}.json"))?;
            let items = doc
                .as_array()
                .ok_or_else(|| IdealError::Storage(format!("degree_{d}.json: expected an array")))?;
            let v = items
                .iter()
                .map(SpecializedJack::from_json)
                .collect::<Result<Vec<_>, _>>()?;
            elements.insert(d, v);
        }
        Ok(Self::from_elements(params, dmax, elements))
    }
}

pub fn build_basis(k: u32, r: u32, n: usize, dmax: u32) -> Result<IdealBasis, IdealError> {
    IdealBasis::build(AdmissibleParams::new(k, r, n)?, dmax, &JackCache::new())
}

/// Witness for a membership decision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MembershipCertificate {
    pub member: bool,
    /// Coefficients of the admissible Jack polynomials summing to the input.
    #[serde(with = "rat_map")]
    pub combination: BTreeMap<Partition, BigRat>,
    /// A dominance-maximal, non-admissible partition left in the support.
    pub obstruction: Option<Partition>,
}

mod rat_map {
    use crate::arith::{BigRat, RatJson};
    use crate::partitions::Partition;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        partition: Partition,
        coeff: RatJson,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Partition, BigRat>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m
            .iter()
            .map(|(p, c)| Entry {
                partition: p.clone(),
                coeff: RatJson::from(c),
            })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Partition, BigRat>, D::Error> {
        let v: Vec<Entry> = Vec::deserialize(d)?;
        v.into_iter()
            .map(|e| Ok((e.partition, e.coeff.to_rat().map_err(serde::de::Error::custom)?)))
            .collect()
    }
}

fn maximal_elements(support: &[Partition]) -> Vec<Partition> {
    support
        .iter()
        .filter(|mu| {
            !support.iter().any(|nu| {
                nu.size() == mu.size() && nu != *mu && matches!(mu.dominance_compare(nu), Ok(Dominance::Less))
            })
        })
        .cloned()
        .collect()
}

/// Decides whether `p` lies in the span of the basis by repeatedly
/// cancelling dominance-maximal terms against admissible Jack polynomials.
pub fn reduce_membership(p: &MSymPoly<BigRat>, basis: &IdealBasis) -> Result<MembershipCertificate, IdealError> {
    if p.nvars() != basis.params.n {
        return Err(IdealError::DimensionMismatch {
            expected: basis.params.n,
            got: p.nvars(),
        });
    }
    if let Some(&degree) = p.degrees().last() {
        if degree > basis.dmax {
            return Err(IdealError::DegreeOverflow {
                degree,
                dmax: basis.dmax,
            });
        }
    }
    let mut rest = p.clone();
    let mut combination = BTreeMap::new();
    while !rest.is_zero() {
        let support: Vec<Partition> = rest.support().cloned().collect();
        let tops = maximal_elements(&support);
        if let Some(bad) = tops.iter().find(|l| basis.get(l).is_none()) {
            return Ok(MembershipCertificate {
                member: false,
                combination,
                obstruction: Some(bad.clone()),
            });
        }
        // maximal elements are pairwise incomparable, so cancelling one
        // never touches another
        for lambda in tops {
            let c = rest.coeff(&lambda);
            let jack = basis.get(&lambda).expect("checked above");
            rest = rest.sub(&jack.poly.scale(&c));
            let slot = combination.entry(lambda).or_insert_with(BigRat::zero);
            *slot = slot.add(&c);
        }
    }
    combination.retain(|_, c: &mut BigRat| !c.is_zero());
    Ok(MembershipCertificate {
        member: true,
        combination,
        obstruction: None,
    })
}
