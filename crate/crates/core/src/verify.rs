//! Verification suites: each runs a family of exact checks and returns
//! deterministic reports.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::compositions::{enumerate_box, BoxFilter, Composition};
use crate::error::{Error, Result};
use crate::macdonald::{
    check_duality, check_eigen, check_monic_triangular, e_by_intertwiners, e_by_projection,
    e_generic, u0_factored,
};
use crate::polyrep::{eval_at_weight, random_laurent, relation_checks, LaurentPoly, Sign};
use crate::scalars::{ParamSpec, SpecScalar};
use crate::wheel_ideal::{
    basis_b_specialized, duality_vanishing_check, ideal_in_box, ideal_witness, in_ideal_with,
    invariance_check, key_lemma_check, quotient_dimension, quotient_nk1_check, relation_for,
    relation_soundness, rewrite_to_b, scattered_one_wheel_examples, spec_poly_rank,
    zeta_count_check, Check, Counts, Direction, Params, Report,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Operators,
    Macdonald,
    Wheel,
    Rewrite,
    Nk1,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "operators" => Suite::Operators,
            "macdonald" => Suite::Macdonald,
            "wheel" => Suite::Wheel,
            "rewrite" => Suite::Rewrite,
            "nk1" => Suite::Nk1,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Operators => "operators",
            Suite::Macdonald => "macdonald",
            Suite::Wheel => "wheel",
            Suite::Rewrite => "rewrite",
            Suite::Nk1 => "nk1",
            Suite::All => "all",
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n: usize,
    /// `(k, r)`; suites about the ideal need it
    pub point: Option<(usize, usize)>,
    pub bound: i64,
    /// random operator samples and duality pairs
    pub samples: usize,
    pub seed: u64,
    pub direction: Direction,
}

impl VerifyConfig {
    pub fn new(n: usize) -> VerifyConfig {
        VerifyConfig {
            n,
            point: None,
            bound: 2,
            samples: 20,
            seed: 0,
            direction: Direction::Ascending,
        }
    }

    fn params(&self) -> Result<ParamSpec> {
        let (k, r) = self
            .point
            .ok_or_else(|| Error::InvalidParams("this suite needs --k and --r".into()))?;
        ParamSpec::new(self.n, k, r)
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = match suite {
        Suite::Operators => vec![operators(cfg)?],
        Suite::Macdonald => vec![macdonald(cfg)?],
        Suite::Wheel => vec![wheel(cfg)?],
        Suite::Rewrite => vec![rewrite(cfg)?],
        Suite::Nk1 => vec![quotient_nk1_check(&cfg.params()?, cfg.bound)?],
        Suite::All => {
            let mut v = vec![operators(cfg)?, macdonald(cfg)?];
            if cfg.point.is_some() {
                v.push(wheel(cfg)?);
                v.push(rewrite(cfg)?);
                let p = cfg.params()?;
                if p.k() + 1 == p.n() {
                    v.push(quotient_nk1_check(&p, cfg.bound)?);
                }
            }
            v
        }
    };
    for r in &mut out {
        r.sort();
    }
    Ok(out)
}

fn generic_params(n: usize) -> Params {
    Params {
        n,
        k: None,
        r: None,
    }
}

/// Every relation on seeded random polynomials of degree at most 3.
pub fn operators(cfg: &VerifyConfig) -> Result<Report> {
    if cfg.n < 2 {
        return Err(Error::InvalidParams("n must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let samples: Vec<_> = (0..cfg.samples)
        .map(|_| random_laurent(&mut rng, cfg.n, 3, 4))
        .collect();
    let results: Vec<Vec<(String, bool)>> = samples.par_iter().map(relation_checks).collect();
    let mut report = Report::new(generic_params(cfg.n), 3);
    for (x, (name, _)) in results[0].iter().enumerate() {
        let bad: Vec<usize> = results
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[x].1)
            .map(|(s, _)| s)
            .collect();
        report.checks.push(if bad.is_empty() {
            Check::pass(name.clone(), None)
        } else {
            Check::fail(name.clone(), None, format!("fails on samples {bad:?}"))
        });
    }
    Ok(report)
}

/// Both constructions agree, eigen-equations, monic triangularity and the
/// factored `u_0` on the box; duality on random pairs.
pub fn macdonald(cfg: &VerifyConfig) -> Result<Report> {
    let weights = box_weights(cfg.n, cfg.bound);
    let per: Vec<Result<Vec<Check>>> = weights
        .par_iter()
        .map(|lam| {
            let a = e_by_projection(lam)?;
            let b = e_by_intertwiners(lam)?;
            let u0 =
                u0_factored(lam)?.expand() == eval_at_weight(&a, &vec![0; lam.len()], Sign::Minus);
            Ok(vec![
                Check::new("routes_agree", Some(lam), a == b),
                Check::new("eigen_equations", Some(lam), check_eigen(&a, lam)),
                Check::new(
                    "monic_triangular",
                    Some(lam),
                    check_monic_triangular(&a, lam),
                ),
                Check::new("u0_recursion", Some(lam), u0),
            ])
        })
        .collect();
    let mut report = Report::new(generic_params(cfg.n), cfg.bound);
    for r in per {
        report.checks.extend(r?);
    }
    for (l, m) in random_pairs(&weights, cfg.samples, cfg.seed) {
        let ok = check_duality(&l, &m)?;
        report.checks.push(Check {
            witness: Some(format!("with {m:?}")),
            ..Check::new("duality", Some(&l), ok)
        });
    }
    Ok(report)
}

/// All weights in `[−bound, bound]^n`, in `>′` order.
pub fn box_weights(n: usize, bound: i64) -> Vec<Composition> {
    let mut out: Vec<Composition> = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| (-bound..=bound).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out.sort_by(|a, b| crate::compositions::total_compare(a, b));
    out
}

/// Distinct seeded pairs of distinct weights.
pub fn random_pairs(
    weights: &[Composition],
    count: usize,
    seed: u64,
) -> Vec<(Composition, Composition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(Composition, Composition)> = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < 100 * count.max(1) && weights.len() > 1 {
        tries += 1;
        let pair: Vec<&Composition> = weights.choose_multiple(&mut rng, 2).collect();
        let p = (pair[0].clone(), pair[1].clone());
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// The basis of `I_1` in the box and everything known about it.
pub fn wheel(cfg: &VerifyConfig) -> Result<Report> {
    let p = cfg.params()?;
    let bound = cfg.bound;
    let mut report = Report::new((&p).into(), bound);
    let b_set = enumerate_box(&p, bound, BoxFilter::B);
    let s_count = enumerate_box(&p, bound, BoxFilter::S).len();

    // pole-free, wheel vanishing, stable under the generators
    let per: Vec<(Vec<Check>, Option<LaurentPoly<SpecScalar>>)> = b_set
        .par_iter()
        .map(|lam| match crate::macdonald::e_specialized(lam, &p) {
            Err(e) => (
                vec![Check::fail("pole_free", Some(lam), e.to_string())],
                None,
            ),
            Ok(f) => {
                let cleared = crate::polyrep::clear_denominators(&f);
                let mut v = vec![Check::pass("pole_free", Some(lam))];
                v.push(match ideal_witness(&cleared, &p, 1, Direction::Ascending) {
                    None => Check::pass("wheel_vanishing", Some(lam)),
                    Some(w) => Check::fail("wheel_vanishing", Some(lam), w.to_string()),
                });
                let bad = invariance_check(&f, &p, 1, Direction::Ascending);
                v.push(match bad.first() {
                    None => Check::pass("invariance", Some(lam)),
                    Some(x) => Check::fail(
                        "invariance",
                        Some(lam),
                        format!("{}: {}", x.operator, x.witness),
                    ),
                });
                (v, Some(f))
            }
        })
        .collect();
    let mut polys = Vec::new();
    for (c, f) in per {
        report.checks.extend(c);
        polys.extend(f);
    }
    let refs: Vec<_> = polys.iter().collect();
    let rank = spec_poly_rank(&refs);
    report
        .checks
        .push(Check::new("independent", None, rank == b_set.len()));
    let kernel_dim = ideal_in_box(&p, bound, 1, Direction::Ascending).len();
    report.checks.push(Check {
        witness: Some(format!(
            "dim I_1 in box = {kernel_dim}, |B| = {}",
            b_set.len()
        )),
        ..Check::new("ideal_dimension", None, kernel_dim == b_set.len())
    });
    let qd = quotient_dimension(&p, bound)?;
    report
        .checks
        .push(Check::new("rewrite_dimension", None, qd == b_set.len()));

    report.checks.extend(zeta_count_check(
        &p,
        bound,
        &scattered_one_wheel_examples(&p, 5),
    )?);
    report.checks.extend(key_lemma_check(&p, bound)?);
    let scattered = scattered_one_wheel_examples(&p, 3);
    for (lam, mu) in b_set
        .iter()
        .take(cfg.samples.min(b_set.len()))
        .zip(scattered.iter().cycle())
    {
        report.checks.push(duality_vanishing_check(&p, lam, mu)?);
    }
    report
        .checks
        .extend(chain_checks(&p, bound, cfg.direction, &polys)?);
    report.counts = Counts {
        b: Some(b_set.len()),
        s: Some(s_count),
        dim: Some(kernel_dim),
    };
    Ok(report)
}

/// `I_1 ⊆ I_2 ⊆ …`: the `I_1` basis lies in every `I_m`, each box basis of
/// `I_m` lies in `I_{m+1}` and is stable, and the constant 1 enters exactly
/// at `m = ⌊n/(k+1)⌋ + 1`.
pub fn chain_checks(
    p: &ParamSpec,
    bound: i64,
    dir: Direction,
    i1_basis: &[LaurentPoly<SpecScalar>],
) -> Result<Vec<Check>> {
    let top = p.max_wheels();
    let one = LaurentPoly::<SpecScalar>::one(p.n());
    let mut out = vec![
        Check::new(
            format!("one_outside_I{top}"),
            None,
            !in_ideal_with(&one, p, top, dir),
        ),
        Check::new(
            format!("one_inside_I{}", top + 1),
            None,
            in_ideal_with(&one, p, top + 1, dir),
        ),
    ];
    for m in 2..=top {
        let ok = i1_basis.par_iter().all(|f| in_ideal_with(f, p, m, dir));
        out.push(Check::new(format!("I1_inside_I{m}"), None, ok));
        let span = ideal_in_box(p, bound, m, dir);
        let stable: Vec<String> = span
            .par_iter()
            .enumerate()
            .filter_map(|(x, f)| {
                invariance_check(f, p, m, dir)
                    .first()
                    .map(|v| format!("element {x}: {} {}", v.operator, v.witness))
            })
            .collect();
        out.push(match stable.first() {
            None => Check::pass(format!("invariance_I{m}"), None),
            Some(w) => Check::fail(format!("invariance_I{m}"), None, w.clone()),
        });
        let lower = ideal_in_box(p, bound, m - 1, dir);
        let up = lower.par_iter().all(|f| in_ideal_with(f, p, m, dir));
        out.push(Check {
            witness: Some(format!(
                "dim I{} = {}, dim I{m} = {} in box",
                m - 1,
                lower.len(),
                span.len()
            )),
            ..Check::new(
                format!("span_I{}_inside_I{m}", m - 1),
                None,
                up && lower.len() <= span.len(),
            )
        });
    }
    Ok(out)
}

/// Every `S` symbol rewrites into `B` symbols, the relations used kill the
/// limit ideal, and the count matches the rank of the `B`-basis.
pub fn rewrite(cfg: &VerifyConfig) -> Result<Report> {
    let p = cfg.params()?;
    let bound = cfg.bound;
    let mut report = Report::new((&p).into(), bound);
    let s_set = enumerate_box(&p, bound, BoxFilter::S);
    let per: Vec<Check> = s_set
        .par_iter()
        .map(|lam| match rewrite_to_b(lam, &p, bound) {
            Ok(st) => Check::pass("rewrites_into_B", Some(lam))
                .with_witness(format!("{} steps", st.history.len())),
            Err(e) => Check::fail("rewrites_into_B", Some(lam), e.to_string()),
        })
        .collect();
    report.checks.extend(per);
    let rels: Vec<_> = s_set
        .iter()
        .filter_map(|l| relation_for(l, &p, bound))
        .collect();
    let (tested, bad) = relation_soundness(&rels, &p, bound);
    report.checks.push(if bad.is_empty() {
        Check::pass("relations_annihilate_limit_ideal", None)
            .with_witness(format!("{tested} pairings"))
    } else {
        Check::fail("relations_annihilate_limit_ideal", None, format!("{bad:?}"))
    });
    let b = basis_b_specialized(&p, bound)?;
    let refs: Vec<_> = b.iter().map(|(_, f)| f).collect();
    let rank = spec_poly_rank(&refs);
    let dim = quotient_dimension(&p, bound)?;
    report.checks.push(Check {
        witness: Some(format!("rewrite bound {dim}, rank of E over B {rank}")),
        ..Check::new("dimension_agreement", None, dim == rank && rank == b.len())
    });
    report.counts = Counts {
        b: Some(b.len()),
        s: Some(s_set.len()),
        dim: Some(dim),
    };
    Ok(report)
}

impl Check {
    pub fn with_witness(mut self, w: impl Into<String>) -> Check {
        self.witness = Some(w.into());
        self
    }
}

/// Builds the generic polynomials for a box in parallel, warming the caches.
pub fn warm(n: usize, bound: i64) -> Result<()> {
    box_weights(n, bound)
        .par_iter()
        .try_for_each(|l| e_generic(l).map(|_| ()))
}

/// Sizes the global worker pool; only the first call has an effect.
pub fn configure_threads(threads: usize) {
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build_global();
}
