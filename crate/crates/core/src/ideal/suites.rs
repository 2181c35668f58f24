//! Verification suites. Each returns a [`Report`] with one case per checked
//! instance; no suite stops at the first failure.

use super::coefficients::{lassalle_down, lassalle_down_factors, lassalle_up, pieri_coefficient, pieri_factors};
use super::wheel::{vanishes_on_coincidence, wheel_dimension};
use super::{reduce_membership, IdealBasis, IdealError};
use crate::arith::{BetaRatFunc, BigRat, RatJson, Scalar};
use crate::jack::{principal_specialization, JackCache};
use crate::operators::{apply_hamiltonian, apply_l, apply_l_expanded, apply_power_sum, apply_w_expanded};
use crate::partitions::{check_nonvanishing, enumerate_admissible, partitions_of, AdmissibleParams, Partition};
use crate::report::{Case, Report};
use crate::sympoly::{power_sum, ExpandedPoly, MSymPoly};
use rayon::prelude::*;
use serde_json::{json, Value};

fn params_json(p: &AdmissibleParams, extra: Value) -> Value {
    let mut v = json!({"k": p.k, "r": p.r, "n": p.n, "beta": RatJson::from(&p.beta())});
    if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
        obj.extend(more);
    }
    v
}

fn error_case(id: String, e: impl std::fmt::Display) -> Case {
    Case::new(id, false, json!({"error": e.to_string()}))
}

/// All partitions with at most `n` parts and size at most `dmax`.
fn all_partitions(n: usize, dmax: u32) -> Vec<Partition> {
    (0..=dmax).flat_map(|d| partitions_of(d, n)).collect()
}

fn addable_rows(mu: &Partition, n: usize) -> impl Iterator<Item = (usize, Partition)> + '_ {
    mu.node_moves(n).addable.into_iter().map(|m| (m.row, m.partition))
}

fn removable_rows(mu: &Partition, n: usize) -> impl Iterator<Item = (usize, Partition)> + '_ {
    mu.node_moves(n).removable.into_iter().map(|m| (m.row, m.partition))
}

fn run_cases<T: Sync>(items: &[T], f: impl Fn(&T) -> Case + Sync + Send) -> Vec<Case> {
    items.par_iter().map(f).collect()
}

/// Hamiltonian and Sekiguchi eigen-equations and polynomiality of
/// `c_λ·P_λ`, for every `λ` with `|λ| ≤ dmax` in `1..=nmax` variables.
pub fn verify_jack_eigen(nmax: usize, dmax: u32, cache: &JackCache) -> Report {
    let items: Vec<(usize, Partition)> = (1..=nmax)
        .flat_map(|n| all_partitions(n, dmax).into_iter().map(move |l| (n, l)))
        .collect();
    let cases = run_cases(&items, |(n, l)| {
        let id = format!("n={n}/{l}");
        let checks = cache.jack(l, *n).map_err(IdealError::from).and_then(|j| {
            Ok((
                j.check_hamiltonian()?,
                j.check_sekiguchi()?,
                j.cleared_by_c_lambda().is_some(),
            ))
        });
        match checks {
            Ok((h, s, c)) => Case::new(
                id,
                h && s && c,
                json!({"hamiltonian": h, "sekiguchi": s, "c_lambda_clears_denominators": c}),
            ),
            Err(e) => error_case(id, e),
        }
    });
    Report::new("jack-eigen", json!({"nmax": nmax, "dmax": dmax}), cases)
}

/// `p_1 P_μ = Σ ψ′_{λ/μ} P_λ` over `ℚ(β)`.
pub fn verify_pieri_symbolic(nmax: usize, dmax: u32, cache: &JackCache) -> Report {
    let items: Vec<(usize, Partition)> = (1..=nmax)
        .flat_map(|n| all_partitions(n, dmax).into_iter().map(move |l| (n, l)))
        .collect();
    let cases = run_cases(&items, |(n, mu)| {
        let id = format!("n={n}/{mu}");
        let run = || -> Result<bool, IdealError> {
            let lhs = power_sum::<BetaRatFunc>(1, *n).multiply(cache.jack(mu, *n)?.poly())?;
            let mut rhs = MSymPoly::zero(*n);
            for (j, lambda) in addable_rows(mu, *n) {
                rhs = rhs.add(&cache.jack(&lambda, *n)?.poly().scale(&pieri_coefficient(mu, j)?));
            }
            Ok(lhs == rhs)
        };
        match run() {
            Ok(ok) => Case::new(id, ok, json!({"mu": mu, "n": n})),
            Err(e) => error_case(id, e),
        }
    });
    Report::new("pieri-symbolic", json!({"nmax": nmax, "dmax": dmax}), cases)
}

/// `l_1 P_μ = Σ ψ″ P_λ` and `l_{-1} P_μ = Σ ψ̃′ P_λ` over `ℚ(β)`.
pub fn verify_lassalle_symbolic(nmax: usize, dmax: u32, cache: &JackCache) -> Report {
    let items: Vec<(usize, Partition, i64)> = (1..=nmax)
        .flat_map(|n| {
            all_partitions(n, dmax)
                .into_iter()
                .flat_map(move |l| [(n, l.clone(), 1), (n, l, -1)])
        })
        .collect();
    let cases = run_cases(&items, |(n, mu, m)| {
        let id = format!("n={n}/l_{m}/{mu}");
        let run = || -> Result<bool, IdealError> {
            let lhs = apply_l(cache.jack(mu, *n)?.poly(), *m)?;
            let mut rhs = MSymPoly::zero(*n);
            if *m == 1 {
                for (j, lambda) in addable_rows(mu, *n) {
                    rhs = rhs.add(&cache.jack(&lambda, *n)?.poly().scale(&lassalle_up(mu, j)?));
                }
            } else {
                for (i, lambda) in removable_rows(mu, *n) {
                    rhs = rhs.add(&cache.jack(&lambda, *n)?.poly().scale(&lassalle_down(mu, i, *n)?));
                }
            }
            Ok(lhs == rhs)
        };
        match run() {
            Ok(ok) => Case::new(id, ok, json!({"mu": mu, "n": n, "m": m})),
            Err(e) => error_case(id, e),
        }
    });
    Report::new("lassalle-symbolic", json!({"nmax": nmax, "dmax": dmax}), cases)
}

fn pole_json(f: &BetaRatFunc, at: &BigRat) -> Value {
    json!({"value": f.to_json(), "pole_order": f.pole_order(at)})
}

/// Vanishing of `ψ′_{λ/μ}` at `β(k,r)` towards non-admissible `λ`,
/// regularity towards admissible `λ`, and the specialized Pieri identity
/// checked both directly and through [`reduce_membership`].
pub fn verify_pieri_specialization(
    k: u32,
    r: u32,
    n: usize,
    dmax: u32,
    cache: &JackCache,
) -> Result<Report, IdealError> {
    let params = AdmissibleParams::new(k, r, n)?;
    let basis = IdealBasis::build(params, dmax, cache)?;
    let b0 = params.beta();
    let mus: Vec<Partition> = basis
        .iter()
        .filter(|j| j.lambda.size() < dmax)
        .map(|j| j.lambda.clone())
        .collect();
    let mut items = Vec::new();
    for mu in &mus {
        for (j, lambda) in addable_rows(mu, n) {
            items.push((mu.clone(), Some((j, lambda))));
        }
        items.push((mu.clone(), None));
    }
    let cases = run_cases(&items, |(mu, step)| match step {
        Some((j, lambda)) => {
            let id = format!("psi/{mu}->{lambda}");
            let psi = match pieri_coefficient(mu, *j) {
                Ok(p) => p,
                Err(e) => return error_case(id, e),
            };
            let order = psi.pole_order(&b0).unwrap_or(i32::MIN);
            let admissible = params.admits(lambda);
            let mut detail = json!({"mu": mu, "lambda": lambda, "row": j, "admissible": admissible,
                                    "psi": pole_json(&psi, &b0)});
            let ok = if admissible {
                order <= 0
            } else {
                // the zero comes from the second numerator at i = j − k
                let mechanism = *j > k as usize
                    && pieri_factors(mu, *j)
                        .ok()
                        .and_then(|fs| fs.into_iter().find(|f| f.i == j - k as usize))
                        .is_some_and(|f| f.second.0.eval(&b0).is_zero());
                detail["second_numerator_vanishes"] = json!(mechanism);
                order < 0 && mechanism
            };
            Case::new(id, ok, detail)
        }
        None => {
            let id = format!("identity/{mu}");
            let run = || -> Result<(bool, Value), IdealError> {
                let p_mu = &basis.get(mu).expect("admissible").poly;
                let lhs = power_sum::<BigRat>(1, n).multiply(p_mu)?;
                let mut rhs = MSymPoly::zero(n);
                let mut expected = std::collections::BTreeMap::new();
                for (j, lambda) in addable_rows(mu, n) {
                    if let Some(pl) = basis.get(&lambda) {
                        let c = pieri_coefficient(mu, j)?.evaluate_at(&b0).map_err(|e| {
                            IdealError::Jack(crate::jack::JackError::SpecializationPole {
                                mu: lambda.clone(),
                                order: e.order,
                                at: e.at,
                            })
                        })?;
                        rhs = rhs.add(&pl.poly.scale(&c));
                        if !c.is_zero() {
                            expected.insert(lambda, c);
                        }
                    }
                }
                let cert = reduce_membership(&lhs, &basis)?;
                let ok = lhs == rhs && cert.member && cert.combination == expected;
                Ok((ok, json!({"direct": lhs == rhs, "certificate": cert})))
            };
            match run() {
                Ok((ok, detail)) => Case::new(id, ok, detail),
                Err(e) => error_case(id, e),
            }
        }
    });
    Ok(Report::new(
        "pieri-specialization",
        params_json(&params, json!({"dmax": dmax})),
        cases,
    ))
}

/// At `β(k,r)`: for admissible `μ`, `ψ″` and `ψ̃′` vanish towards
/// non-admissible `λ` through the specific factors that carry the zero,
/// and `l_{±1} P_μ` reduce to members.
pub fn verify_lassalle_specialization(
    k: u32,
    r: u32,
    n: usize,
    dmax: u32,
    cache: &JackCache,
) -> Result<Report, IdealError> {
    let params = AdmissibleParams::new(k, r, n)?;
    let basis = IdealBasis::build(params, dmax, cache)?;
    let b0 = params.beta();
    let ku = k as usize;
    let mut items = Vec::new();
    for mu in basis.iter().map(|j| j.lambda.clone()) {
        if mu.size() < dmax {
            for (j, lambda) in addable_rows(&mu, n) {
                items.push((mu.clone(), 1i64, j, lambda));
            }
        }
        for (i, lambda) in removable_rows(&mu, n) {
            items.push((mu.clone(), -1, i, lambda));
        }
        items.push((mu, 0, 0, Partition::empty()));
    }
    let cases = run_cases(&items, |(mu, kind, row, lambda)| {
        if *kind == 0 {
            let id = format!("membership/{mu}");
            let run = || -> Result<(bool, Value), IdealError> {
                let p = &basis.get(mu).expect("admissible").poly;
                let mut ok = true;
                let mut detail = json!({});
                for m in [-1i64, 1] {
                    if m == 1 && mu.size() >= dmax {
                        continue;
                    }
                    let cert = reduce_membership(&apply_l(p, m)?, &basis)?;
                    ok &= cert.member;
                    detail[format!("l_{m}")] = serde_json::to_value(&cert).expect("serializable");
                }
                Ok((ok, detail))
            };
            return match run() {
                Ok((ok, d)) => Case::new(id, ok, d),
                Err(e) => error_case(id, e),
            };
        }
        let admissible = params.admits(lambda);
        let (id, coeff) = if *kind == 1 {
            (format!("up/{mu}->{lambda}"), lassalle_up(mu, *row))
        } else {
            (format!("down/{mu}->{lambda}"), lassalle_down(mu, *row, n))
        };
        let coeff = match coeff {
            Ok(c) => c,
            Err(e) => return error_case(id, e),
        };
        let order = coeff.pole_order(&b0).unwrap_or(i32::MIN);
        let mut detail = json!({"mu": mu, "lambda": lambda, "row": row, "admissible": admissible,
                                "coefficient": pole_json(&coeff, &b0)});
        if admissible {
            return Case::new(id, order <= 0, detail);
        }
        let mechanism = if *kind == 1 {
            *row > ku
                && pieri_factors(mu, *row)
                    .ok()
                    .and_then(|fs| fs.into_iter().find(|f| f.i == row - ku))
                    .is_some_and(|f| f.second.0.eval(&b0).is_zero())
        } else {
            // λ fails at rows (i, i+k), so μ_{i+k} = μ_i − r. If that part
            // is positive the column factor j = μ_{i+k} carries the zero;
            // otherwise i + k = n and the prefactor (n−i+1)β + μ_i − 1 does.
            let i = *row;
            let target = mu.part(i + ku);
            match lassalle_down_factors(mu, i, n) {
                Ok(f) if target >= 1 => {
                    let hit = f.column_product.iter().find(|(j, _, _)| *j == target as usize);
                    detail["vanishing_factor"] = json!(format!("column j={target}"));
                    hit.is_some_and(|(_, num, _)| num.eval(&b0).is_zero())
                }
                Ok(f) => {
                    detail["vanishing_factor"] = json!("prefactor (n-i+1)beta + mu_i - 1");
                    f.prefactor[1].eval(&b0).is_zero()
                }
                Err(_) => false,
            }
        };
        detail["mechanism"] = json!(mechanism);
        Case::new(id, order < 0 && mechanism, detail)
    });
    Ok(Report::new(
        "lassalle-specialization",
        params_json(&params, json!({"dmax": dmax})),
        cases,
    ))
}

#[derive(Debug, Clone, Copy)]
enum ClosureOp {
    P(u32),
    L(i64),
    W(u32, i64),
}

impl ClosureOp {
    fn shift(&self) -> i64 {
        match *self {
            ClosureOp::P(m) => m as i64,
            ClosureOp::L(m) | ClosureOp::W(_, m) => m,
        }
    }

    fn label(&self) -> String {
        match self {
            ClosureOp::P(m) => format!("p_{m}"),
            ClosureOp::L(m) => format!("l_{m}"),
            ClosureOp::W(t, m) => format!("w^({t})_{m}"),
        }
    }

    fn apply(&self, p: &ExpandedPoly<BigRat>, beta: &BigRat) -> Result<ExpandedPoly<BigRat>, IdealError> {
        Ok(match *self {
            ClosureOp::P(m) => apply_power_sum(p, m),
            ClosureOp::L(m) => apply_l_expanded(p, m)?,
            ClosureOp::W(t, m) => apply_w_expanded(p, t, m, beta)?,
        })
    }
}

/// Every `p_m P_λ`, `l_m P_λ` and `w^(t)_m P_λ` of degree at most `dmax`
/// reduces to a member of the ideal.
pub fn verify_closure(
    k: u32,
    r: u32,
    n: usize,
    dmax: u32,
    mmax: i64,
    tmax: u32,
    cache: &JackCache,
) -> Result<Report, IdealError> {
    let params = AdmissibleParams::new(k, r, n)?;
    let basis = IdealBasis::build(params, dmax, cache)?;
    let b0 = params.beta();
    let mut ops: Vec<ClosureOp> = (1..=mmax.max(0) as u32).map(ClosureOp::P).collect();
    ops.extend((-1..=mmax).map(ClosureOp::L));
    for t in 2..=tmax {
        ops.extend((1 - t as i64..=mmax).map(|m| ClosureOp::W(t, m)));
    }
    let mut items = Vec::new();
    for j in basis.iter() {
        let d = j.lambda.size() as i64;
        for op in &ops {
            let out = d + op.shift();
            if (0..=dmax as i64).contains(&out) {
                items.push((j.lambda.clone(), *op));
            }
        }
    }
    let cases = run_cases(&items, |(lambda, op)| {
        let id = format!("{}/{lambda}", op.label());
        let run = || -> Result<(bool, Value), IdealError> {
            let p = basis.get(lambda).expect("basis element").poly.to_expanded()?;
            let image = MSymPoly::from_expanded(&op.apply(&p, &b0)?)?;
            let cert = reduce_membership(&image, &basis)?;
            let ok = cert.member;
            let mut detail = json!({"lambda": lambda, "operator": op.label(), "image_terms": image.len()});
            if !ok {
                detail["obstruction"] = json!(cert.obstruction);
                detail["image"] = image.to_json();
            }
            Ok((ok, detail))
        };
        match run() {
            Ok((ok, d)) => Case::new(id, ok, d),
            Err(e) => error_case(id, e),
        }
    });
    Ok(Report::new(
        "closure",
        params_json(&params, json!({"dmax": dmax, "mmax": mmax, "tmax": tmax})),
        cases,
    ))
}

/// `(∂_n^j P)(x_1, …, x_{n−1}, 0)` lies in the ideal in `n − 1` variables.
pub fn verify_restriction(
    k: u32,
    r: u32,
    n: usize,
    dmax: u32,
    jmax: u32,
    cache: &JackCache,
) -> Result<Report, IdealError> {
    if n < 2 {
        return Err(IdealError::DimensionMismatch { expected: 2, got: n });
    }
    let params = AdmissibleParams::new(k, r, n)?;
    let basis = IdealBasis::build(params, dmax, cache)?;
    let lower = IdealBasis::build(params.with_n(n - 1), dmax, cache)?;
    let items: Vec<(Partition, u32)> = basis
        .iter()
        .flat_map(|e| (0..=jmax.min(e.lambda.size())).map(move |j| (e.lambda.clone(), j)))
        .collect();
    let cases = run_cases(&items, |(lambda, j)| {
        let id = format!("d^{j}/{lambda}");
        let run = || -> Result<(bool, Value), IdealError> {
            let mut p = basis.get(lambda).expect("basis element").poly.to_expanded()?;
            for _ in 0..*j {
                p = p.derivative(n);
            }
            let q = MSymPoly::from_expanded(&p.restrict_last_var())?;
            let cert = reduce_membership(&q, &lower)?;
            Ok((cert.member, json!({"lambda": lambda, "j": j, "certificate": cert})))
        };
        match run() {
            Ok((ok, d)) => Case::new(id, ok, d),
            Err(e) => error_case(id, e),
        }
    });
    Ok(Report::new(
        "restriction",
        params_json(&params, json!({"dmax": dmax, "jmax": jmax})),
        cases,
    ))
}

/// Identification of the ideal at `r = 2` with the symmetric polynomials
/// vanishing on `x_1 = ⋯ = x_{k+1}`: inclusion element by element, then
/// equality of dimensions degree by degree.
pub fn verify_wheel_theorem(k: u32, n: usize, dmax: u32, cache: &JackCache) -> Result<Report, IdealError> {
    let params = AdmissibleParams::new(k, 2, n)?;
    let basis = IdealBasis::build(params, dmax, cache)?;
    let c = k as usize + 1;
    let mut cases: Vec<Case> = basis
        .iter()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|e| {
            let id = format!("vanishes/{}", e.lambda);
            match vanishes_on_coincidence(&e.poly, c) {
                Ok(ok) => Case::new(id, ok, json!({"lambda": e.lambda})),
                Err(err) => error_case(id, err),
            }
        })
        .collect();
    let empty_admissible = params.admits(&Partition::empty());
    let dims: Vec<Case> = (0..=dmax)
        .into_par_iter()
        .map(|d| {
            let id = format!("dimension/d={d}");
            match wheel_dimension(k, n, d) {
                Ok(w) => {
                    let count = basis.degree(d).len();
                    let mut detail = json!({"degree": d, "wheel_dimension": w, "admissible_count": count});
                    if d == 0 {
                        // the alternative reading counts the empty partition
                        // in every n
                        let lenient = if empty_admissible { count } else { count + 1 };
                        detail["count_if_empty_always_admissible"] = json!(lenient);
                        detail["lenient_reading_matches"] = json!(lenient == w);
                    }
                    Case::new(id, w == count, detail)
                }
                Err(e) => error_case(id, e),
            }
        })
        .collect();
    cases.extend(dims);
    Ok(Report::new("wheel", params_json(&params, json!({"dmax": dmax})), cases))
}

/// For `λ = (r, 0, 0)` at `β(2, r)`: `l_0 P = rP`, `H P = ε_λ P`, `l_{-1} P = 0`.
pub fn verify_phi3(r: u32, cache: &JackCache) -> Result<Report, IdealError> {
    let params = AdmissibleParams::new(2, r, 3)?;
    let b0 = params.beta();
    let lambda = Partition::new(vec![r])?;
    let p = cache.specialize(&lambda, 3, 2, r)?.poly;
    let eps = lambda.cs_eigenvalue(3).eval(&b0);
    let l0 = apply_l(&p, 0)?;
    let h = apply_hamiltonian(&p, &b0)?;
    let lm1 = apply_l(&p, -1)?;
    let cases = vec![
        Case::new(
            "l_0 P = r P",
            l0 == p.scale(&BigRat::from_int(r as i64)),
            json!({"lambda": lambda}),
        ),
        Case::new(
            "H P = eps P",
            h == p.scale(&eps),
            json!({"lambda": lambda, "eigenvalue": RatJson::from(&eps)}),
        ),
        Case::new("l_-1 P = 0", lm1.is_zero(), json!({"lambda": lambda})),
        Case::new("admissible", params.admits(&lambda), json!({"lambda": lambda})),
    ];
    Ok(Report::new(
        "phi3",
        params_json(&params, json!({"lambda": lambda})),
        cases,
    ))
}

/// Regularity at `β(k,r)` of every admissible `P_μ` and of every
/// one-node neighbour, and the order of the zero of `c_λ` for the
/// non-admissible neighbours.
pub fn verify_regularity(k: u32, r: u32, n: usize, dmax: u32, cache: &JackCache) -> Result<Report, IdealError> {
    let params = AdmissibleParams::new(k, r, n)?;
    let b0 = params.beta();
    let family = enumerate_admissible(k, r, n, dmax)?;
    let mut items: Vec<(Partition, Option<Partition>)> = Vec::new();
    for mu in family.iter() {
        items.push((mu.clone(), None));
        for mv in mu.node_moves(n).all() {
            if mv.partition.size() <= dmax {
                items.push((mu.clone(), Some(mv.partition.clone())));
            }
        }
    }
    let cases = run_cases(&items, |(mu, nb)| {
        let lambda = nb.as_ref().unwrap_or(mu);
        let id = match nb {
            None => format!("admissible/{mu}"),
            Some(l) => format!("neighbour/{mu}->{l}"),
        };
        let jack = match cache.jack(lambda, n) {
            Ok(j) => j,
            Err(e) => return error_case(id, e),
        };
        let poles = jack.pole_order_at(&b0);
        let admissible = params.admits(lambda);
        let mut detail = json!({"mu": mu, "lambda": lambda, "admissible": admissible, "pole_order": poles});
        let mut ok = poles == 0;
        if !admissible {
            let zero = lambda.c_lambda().root_multiplicity(&b0).unwrap_or(0);
            detail["c_lambda_zero_order"] = json!(zero);
            ok &= zero == 1;
        }
        Case::new(id, ok, detail)
    });
    Ok(Report::new(
        "regularity",
        params_json(&params, json!({"dmax": dmax})),
        cases,
    ))
}

/// The nonvanishing conditions on every admissible partition up to `dmax`.
pub fn verify_nonvanishing(k: u32, r: u32, n: usize, dmax: u32) -> Result<Report, IdealError> {
    let params = AdmissibleParams::new(k, r, n)?;
    let family = enumerate_admissible(k, r, n, dmax)?;
    let cases = family
        .iter()
        .map(|l| {
            let c = l.c_lambda().eval(&params.beta());
            Case::new(
                format!("{l}"),
                check_nonvanishing(l, &params) && !c.is_zero(),
                json!({"lambda": l, "c_lambda_at_beta": RatJson::from(&c)}),
            )
        })
        .collect();
    Ok(Report::new(
        "nonvanishing",
        params_json(&params, json!({"dmax": dmax})),
        cases,
    ))
}

/// The product formula for `P_λ(1, …, 1)` against direct evaluation, for
/// every `λ` with `|λ| ≤ dmax` in `1..=nmax` variables.
pub fn verify_principal_symbolic(nmax: usize, dmax: u32, cache: &JackCache) -> Report {
    let items: Vec<(usize, Partition)> = (1..=nmax)
        .flat_map(|n| all_partitions(n, dmax).into_iter().map(move |l| (n, l)))
        .collect();
    let cases = run_cases(&items, |(n, l)| {
        let id = format!("n={n}/{l}");
        match (cache.jack(l, *n), principal_specialization(l, *n)) {
            (Ok(j), Ok(formula)) => {
                let direct = j.evaluate_all_ones();
                Case::new(
                    id,
                    direct == formula,
                    json!({"formula": formula.to_json(), "direct": direct.to_json()}),
                )
            }
            (Err(e), _) | (_, Err(e)) => error_case(id, e),
        }
    });
    Report::new("principal-symbolic", json!({"nmax": nmax, "dmax": dmax}), cases)
}

/// In `n = k + 1` variables every admissible `P_λ(β(k,r))` vanishes at
/// `x_1 = ⋯ = x_n`, seen both in the product formula and by substitution.
pub fn verify_principal_vanishing(k: u32, r: u32, dmax: u32, cache: &JackCache) -> Result<Report, IdealError> {
    let n = k as usize + 1;
    let params = AdmissibleParams::new(k, r, n)?;
    let b0 = params.beta();
    let family = enumerate_admissible(k, r, n, dmax)?;
    let lambdas: Vec<Partition> = family.iter().cloned().collect();
    let cases = run_cases(&lambdas, |l| {
        let id = format!("{l}");
        let run = || -> Result<(bool, Value), IdealError> {
            let formula = principal_specialization(l, n)?;
            let value = formula.evaluate_at(&b0);
            let spec = cache.specialize(l, n, k, r)?;
            let coincident = spec.poly.substitute_coincident(n)?.is_zero();
            let zero = matches!(&value, Ok(v) if v.is_zero());
            Ok((
                zero && coincident,
                json!({"lambda": l, "formula_value": value.as_ref().map(RatJson::from).map_err(|e| e.to_string()),
                       "vanishes_on_diagonal": coincident}),
            ))
        };
        match run() {
            Ok((ok, d)) => Case::new(id, ok, d),
            Err(e) => error_case(id, e),
        }
    });
    Ok(Report::new(
        "principal-vanishing",
        params_json(&params, json!({"dmax": dmax})),
        cases,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(r: Report) {
        let failures: Vec<_> = r.failures().map(|c| c.id.clone()).collect();
        assert!(!r.cases.is_empty(), "{} is empty", r.suite);
        assert!(r.all_pass(), "{}: {failures:?}", r.suite);
    }

    #[test]
    fn symbolic_suites_small() {
        let cache = JackCache::new();
        assert_pass(verify_jack_eigen(3, 4, &cache));
        assert_pass(verify_pieri_symbolic(3, 4, &cache));
        assert_pass(verify_lassalle_symbolic(3, 4, &cache));
        assert_pass(verify_principal_symbolic(3, 4, &cache));
    }

    #[test]
    fn specialized_suites_small() {
        let cache = JackCache::new();
        assert_pass(verify_pieri_specialization(1, 2, 2, 7, &cache).unwrap());
        assert_pass(verify_lassalle_specialization(1, 2, 2, 7, &cache).unwrap());
        assert_pass(verify_pieri_specialization(2, 3, 3, 7, &cache).unwrap());
        assert_pass(verify_lassalle_specialization(2, 3, 3, 7, &cache).unwrap());
        assert_pass(verify_closure(1, 2, 3, 8, 2, 3, &cache).unwrap());
        assert_pass(verify_restriction(1, 2, 3, 8, 2, &cache).unwrap());
        assert_pass(verify_wheel_theorem(1, 3, 8, &cache).unwrap());
        assert_pass(verify_principal_vanishing(1, 2, 6, &cache).unwrap());
        assert_pass(verify_phi3(2, &cache).unwrap());
        assert_pass(verify_nonvanishing(2, 3, 3, 8).unwrap());
    }

    #[test]
    fn regularity_reports_c_lambda_order() {
        let cache = JackCache::new();
        let r = verify_regularity(1, 2, 2, 4, &cache).unwrap();
        // every admissible partition is regular
        assert!(r
            .cases
            .iter()
            .filter(|c| c.id.starts_with("admissible/"))
            .all(|c| c.status == crate::report::Status::Pass));
    }

    #[test]
    fn invalid_parameters_rejected() {
        let cache = JackCache::new();
        assert!(verify_closure(1, 3, 3, 4, 1, 2, &cache).is_err());
        assert!(verify_phi3(4, &cache).is_err());
    }
}
