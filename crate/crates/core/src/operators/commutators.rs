//! Randomized verification of the commutation relations of the operator
//! family, identically in an indeterminate `β`.

use super::random::{random_general, random_symmetric};
use super::{cherednik, divdiff, dunkl, hamiltonian_expanded, mul_power_sum, virasoro, w_operator};
use crate::arith::{BetaPoly, Scalar};
use crate::report::{Case, Report};
use crate::sympoly::ExpandedPoly;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

type Poly = ExpandedPoly<BetaPoly>;
type Op = Box<dyn Fn(&Poly) -> Poly + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutatorConfig {
    pub n: usize,
    pub degree: u32,
    pub trials: usize,
    pub seed: u64,
    /// Largest `t` in the `w^(t)` relations.
    pub tmax: u32,
    /// Largest index in the Virasoro and `l_m ∼ w^(2)_m` relations.
    pub mmax: i64,
}

impl CommutatorConfig {
    pub fn new(n: usize, degree: u32, trials: usize, seed: u64) -> Self {
        CommutatorConfig {
            n,
            degree,
            trials,
            seed,
            tmax: 3,
            mmax: 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Domain {
    General,
    Symmetric,
}

struct Identity {
    id: String,
    domain: Domain,
    lhs: Op,
    rhs: Op,
    /// Right-hand side with operator products composed in the opposite
    /// order, tried only when the written order fails.
    reversed_rhs: Option<Op>,
}

impl Identity {
    fn new(id: String, domain: Domain, lhs: Op, rhs: Op) -> Self {
        Identity {
            id,
            domain,
            lhs,
            rhs,
            reversed_rhs: None,
        }
    }
}

fn beta() -> BetaPoly {
    BetaPoly::beta()
}

fn op(f: impl Fn(&Poly) -> Poly + Send + Sync + 'static) -> Op {
    Box::new(f)
}

fn commutator(a: Op, b: Op) -> Op {
    op(move |p| a(&b(p)).sub(&b(&a(p))))
}

fn l_op(m: i64) -> Op {
    op(move |p| virasoro(p, m))
}

fn w_op(t: u32, m: i64) -> Op {
    op(move |p| w_operator(p, t, m, &beta()))
}

fn p_op(m: u32) -> Op {
    op(move |p| mul_power_sum(p, m))
}

fn dunkl_op(i: usize) -> Op {
    op(move |p| dunkl(p, i, &beta()))
}

fn exchange(p: &Poly, i: usize, j: usize) -> Poly {
    if i == j {
        p.clone()
    } else {
        p.swap_vars(i, j)
    }
}

fn transpose(i: usize, j: usize, m: usize) -> usize {
    if m == i {
        j
    } else if m == j {
        i
    } else {
        m
    }
}

/// Right-hand side of `[w^(t+1)_m, p_2]`, with each product
/// `w^(i+1)_a w^(s)_b` composed as written (`w^(s)_b` first) or reversed.
fn w_p2_rhs(t: u32, m: i64, reversed: bool) -> Op {
    op(move |p| {
        let b = beta();
        let ti = t as i64;
        let mut out = w_operator(p, t, m + 2, &b).scale(&BetaPoly::from_int(2 * ti));
        let c2 = BetaPoly::linear(-(ti * (ti - 1)), ti * (ti - 1));
        out = out.add(&w_operator(p, t - 1, m + 2, &b).scale(&c2));
        let mut sum = ExpandedPoly::zero(p.nvars());
        for i in 0..=(t - 2) {
            let (t1, m1) = (i + 1, m + ti - i as i64);
            let (t2, m2) = (t - 1 - i, -ti + 2 + i as i64);
            let prod = if reversed {
                w_operator(&w_operator(p, t1, m1, &b), t2, m2, &b)
            } else {
                w_operator(&w_operator(p, t2, m2, &b), t1, m1, &b)
            };
            sum = sum.add(&prod.scale(&BetaPoly::from_int((t - 1 - i) as i64)));
        }
        out.add(&sum.scale(&BetaPoly::linear(2, 0)))
    })
}

fn identities(cfg: &CommutatorConfig) -> Vec<Identity> {
    let n = cfg.n;
    let mut out = Vec::new();
    let g = Domain::General;
    let s = Domain::Symmetric;

    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                out.push(Identity::new(
                    format!("[dunkl_{i},dunkl_{j}] = 0"),
                    g,
                    commutator(dunkl_op(i), dunkl_op(j)),
                    op(|p| ExpandedPoly::zero(p.nvars())),
                ));
                out.push(Identity::new(
                    format!("(x_{i} - x_{j}) divdiff_{i}{j} = 1 - K_{i}{j}"),
                    g,
                    op(move |p| {
                        let q = divdiff(p, i, j);
                        q.mul_var_power(i, 1).sub(&q.mul_var_power(j, 1))
                    }),
                    op(move |p| p.sub(&p.swap_vars(i, j))),
                ));
                out.push(Identity::new(
                    format!("[cherednik_{i},cherednik_{j}] = 0"),
                    g,
                    op(move |p| {
                        let b = beta();
                        cherednik(&cherednik(p, j, &b), i, &b).sub(&cherednik(&cherednik(p, i, &b), j, &b))
                    }),
                    op(|p| ExpandedPoly::zero(p.nvars())),
                ));
                for m in 1..=n {
                    let sm = transpose(i, j, m);
                    out.push(Identity::new(
                        format!("K_{i}{j} dunkl_{m} = dunkl_{sm} K_{i}{j}"),
                        g,
                        op(move |p| dunkl(p, m, &beta()).swap_vars(i, j)),
                        op(move |p| dunkl(&p.swap_vars(i, j), sm, &beta())),
                    ));
                }
            }
            out.push(Identity::new(
                format!("[dunkl_{i},x_{j}] = delta_{i}{j}(1 + beta sum_t K_{i}t) - beta K_{i}{j}"),
                g,
                op(move |p| {
                    let b = beta();
                    dunkl(&p.mul_var_power(j, 1), i, &b).sub(&dunkl(p, i, &b).mul_var_power(j, 1))
                }),
                op(move |p| {
                    let b = beta();
                    let mut r = exchange(p, i, j).scale(&b.neg());
                    if i == j {
                        let mut ks = ExpandedPoly::zero(p.nvars());
                        for t in 1..=p.nvars() {
                            ks = ks.add(&exchange(p, i, t));
                        }
                        r = r.add(p).add(&ks.scale(&b));
                    }
                    r
                }),
            ));
        }
    }

    for a in -1..=cfg.mmax {
        for b in a..=cfg.mmax {
            out.push(Identity::new(
                format!("[l_{a},l_{b}] = {} l_{}", b - a, a + b),
                g,
                commutator(l_op(a), l_op(b)),
                op(move |p| {
                    if a == b {
                        ExpandedPoly::zero(p.nvars())
                    } else {
                        virasoro(p, a + b).scale(&BetaPoly::from_int(b - a))
                    }
                }),
            ));
        }
    }
    for m in 1..=4u32 {
        out.push(Identity::new(
            format!("[l_1,p_{m}] = {m} p_{}", m + 1),
            g,
            commutator(l_op(1), p_op(m)),
            op(move |p| mul_power_sum(p, m + 1).scale(&BetaPoly::from_int(m as i64))),
        ));
    }

    for m in -1..=cfg.mmax {
        out.push(Identity::new(format!("l_{m} ~ w^(2)_{m}"), s, l_op(m), w_op(2, m)));
    }
    out.push(Identity::new(
        "w^(3)_0 ~ H + (beta-1) l_0 - beta p_1 l_-1".into(),
        s,
        w_op(3, 0),
        op(|p| {
            let b = beta();
            let h = hamiltonian_expanded(p, &b).expect("symmetric input");
            let l0 = virasoro(p, 0).scale(&BetaPoly::linear(1, -1));
            let pl = mul_power_sum(&virasoro(p, -1), 1).scale(&b.neg());
            h.add(&l0).add(&pl)
        }),
    ));
    // these two hold as operator identities, so they are also checked on
    // general polynomials
    for (dom, rel) in [(s, "~"), (g, "=")] {
        out.push(Identity::new(
            format!("[l_-1,w^(3)_0] {rel} 2 w^(3)_-1"),
            dom,
            commutator(l_op(-1), w_op(3, 0)),
            op(|p| w_operator(p, 3, -1, &beta()).scale(&BetaPoly::from_int(2))),
        ));
        for t in 2..=cfg.tmax {
            let ti = t as i64;
            out.push(Identity::new(
                format!("[w^({t})_{},w^(3)_-1] {rel} {} w^({})_{}", 1 - ti, t - 1, t + 1, -ti),
                dom,
                commutator(w_op(t, 1 - ti), w_op(3, -1)),
                op(move |p| w_operator(p, t + 1, -ti, &beta()).scale(&BetaPoly::from_int(ti - 1))),
            ));
        }
    }
    for t in 2..=cfg.tmax {
        let ti = t as i64;
        for m in -ti..=0 {
            out.push(Identity {
                id: format!("[w^({})_{m},p_2] ~ w-expansion (t={t})", t + 1),
                domain: s,
                lhs: commutator(w_op(t + 1, m), p_op(2)),
                rhs: w_p2_rhs(t, m, false),
                reversed_rhs: Some(w_p2_rhs(t, m, true)),
            });
        }
    }
    out.push(Identity::new(
        "[w^(3)_0,p_2] ~ 4 l_2 + 2((n-1) beta + 1) p_2".into(),
        s,
        commutator(w_op(3, 0), p_op(2)),
        op(|p| {
            let n = p.nvars() as i64;
            let l2 = virasoro(p, 2).scale(&BetaPoly::from_int(4));
            l2.add(&mul_power_sum(p, 2).scale(&BetaPoly::linear(2 * (n - 1), 2)))
        }),
    ));
    out
}

fn first_failure(lhs: &Op, rhs: &Op, pool: &[Poly]) -> Option<serde_json::Value> {
    pool.iter().enumerate().find_map(|(k, p)| {
        let d = lhs(p).sub(&rhs(p));
        (!d.is_zero()).then(|| json!({"trial": k, "input": p.to_json(), "lhs_minus_rhs": d.to_json()}))
    })
}

/// Checks every relation on `trials` seeded pseudo-random polynomials.
/// Relations that hold as operator identities are checked on general
/// polynomials, the `∼` relations on symmetric ones.
pub fn verify_commutators(cfg: &CommutatorConfig) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let general: Vec<Poly> = (0..cfg.trials)
        .map(|_| random_general(&mut rng, cfg.n, cfg.degree, 6))
        .collect();
    let symmetric: Vec<Poly> = (0..cfg.trials)
        .map(|_| {
            random_symmetric::<BetaPoly, _>(&mut rng, cfg.n, cfg.degree, 4)
                .to_expanded()
                .expect("small symmetric polynomial expands")
        })
        .collect();

    let ids = identities(cfg);
    let cases: Vec<Case> = ids
        .par_iter()
        .map(|idn| {
            let (pool, domain) = match idn.domain {
                Domain::General => (&general, "general"),
                Domain::Symmetric => (&symmetric, "symmetric"),
            };
            let mut detail = json!({
                "identity": idn.id,
                "domain": domain,
                "trials": cfg.trials,
                "seed": cfg.seed,
            });
            let written = first_failure(&idn.lhs, &idn.rhs, pool);
            let ok = match (&written, &idn.reversed_rhs) {
                (None, Some(_)) => {
                    detail["composition_order"] = json!("written");
                    true
                }
                (None, None) => true,
                (Some(cx), Some(rev)) => {
                    let reversed = first_failure(&idn.lhs, rev, pool);
                    detail["written_order_counterexample"] = cx.clone();
                    match reversed {
                        None => {
                            detail["composition_order"] = json!("reversed");
                            true
                        }
                        Some(rcx) => {
                            detail["counterexample"] = rcx;
                            false
                        }
                    }
                }
                (Some(cx), None) => {
                    detail["counterexample"] = cx.clone();
                    false
                }
            };
            Case::new(idn.id.clone(), ok, detail)
        })
        .collect();
    Report::new(
        "commutators",
        json!({"n": cfg.n, "degree": cfg.degree, "trials": cfg.trials, "seed": cfg.seed,
               "tmax": cfg.tmax, "mmax": cfg.mmax}),
        cases,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dunkl_x_relation_on_constant() {
        // [∇_1, x_1] 1 = 1 + β for n = 2
        let cfg = CommutatorConfig::new(2, 1, 1, 0);
        let ids = identities(&cfg);
        let idn = ids.iter().find(|i| i.id.starts_with("[dunkl_1,x_1]")).unwrap();
        let one = ExpandedPoly::constant(2, BetaPoly::one());
        assert_eq!((idn.lhs)(&one), ExpandedPoly::constant(2, BetaPoly::linear(1, 1)));
        assert_eq!((idn.rhs)(&one), (idn.lhs)(&one));
    }

    #[test]
    fn all_relations_hold_small() {
        let r = verify_commutators(&CommutatorConfig::new(3, 4, 2, 11));
        let bad: Vec<_> = r.failures().map(|c| c.id.clone()).collect();
        assert!(bad.is_empty(), "failing: {bad:?}");
        let orders: Vec<_> = r
            .cases
            .iter()
            .filter_map(|c| c.detail.get("composition_order"))
            .collect();
        assert!(!orders.is_empty() && orders.iter().all(|o| *o == "written"));
    }

    #[test]
    fn reversed_composition_is_detected() {
        let cfg = CommutatorConfig::new(3, 4, 2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pool: Vec<Poly> = (0..2)
            .map(|_| {
                random_symmetric::<BetaPoly, _>(&mut rng, 3, 4, 4)
                    .to_expanded()
                    .unwrap()
            })
            .collect();
        let ids = identities(&cfg);
        let idn = ids
            .iter()
            .find(|i| i.id == "[w^(4)_0,p_2] ~ w-expansion (t=3)")
            .unwrap();
        assert!(first_failure(&idn.lhs, &idn.rhs, &pool).is_none());
        assert!(first_failure(&idn.lhs, idn.reversed_rhs.as_ref().unwrap(), &pool).is_some());
    }

    #[test]
    fn report_is_reproducible() {
        let cfg = CommutatorConfig {
            tmax: 2,
            mmax: 0,
            ..CommutatorConfig::new(2, 3, 2, 99)
        };
        assert_eq!(verify_commutators(&cfg), verify_commutators(&cfg));
    }
}
