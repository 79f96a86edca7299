//! The quotient `V / I_1` in the case `n = k + 1`.

use rayon::prelude::*;

use super::basis::basis_b_specialized;
use super::linalg::spec_poly_rank;
use super::report::{Check, Counts, Report};
use crate::compositions::{enumerate_box, sharp, BoxFilter};
use crate::error::{Error, Result};
use crate::macdonald::e_specialized;
use crate::scalars::ParamSpec;

/// For every `λ ∈ S ∩ box`: at most one wheel and a pole-free specialized
/// `E_λ`; then the images of these `E_λ` modulo the span of the `B`-basis are
/// independent.
pub fn quotient_nk1_check(p: &ParamSpec, bound: i64) -> Result<Report> {
    if p.k() + 1 != p.n() {
        return Err(Error::InvalidParams(format!(
            "{p}: this check needs k = n − 1"
        )));
    }
    let mut report = Report::new(p.into(), bound);
    let s_set = enumerate_box(p, bound, BoxFilter::S);
    let per: Vec<(Check, Check, Option<_>)> = s_set
        .par_iter()
        .map(|lam| {
            let w = sharp(lam, p);
            let c1 = if w <= 1 {
                Check::pass("at_most_one_wheel", Some(lam))
            } else {
                Check::fail("at_most_one_wheel", Some(lam), format!("{w} wheels"))
            };
            match e_specialized(lam, p) {
                Ok(e) => (c1, Check::pass("pole_free", Some(lam)), Some(e)),
                Err(err) => (
                    c1,
                    Check::fail("pole_free", Some(lam), err.to_string()),
                    None,
                ),
            }
        })
        .collect();
    let mut s_polys = Vec::new();
    for (a, b, e) in per {
        report.checks.push(a);
        report.checks.push(b);
        s_polys.extend(e);
    }
    let basis = basis_b_specialized(p, bound)?;
    let b_polys: Vec<_> = basis.iter().map(|(_, e)| e).collect();
    let all: Vec<_> = b_polys.iter().copied().chain(s_polys.iter()).collect();
    let rb = spec_poly_rank(&b_polys);
    let rall = spec_poly_rank(&all);
    let ok = s_polys.len() == s_set.len() && rall - rb == s_set.len();
    report.checks.push(if ok {
        Check::pass("independent_mod_ideal", None)
    } else {
        Check::fail(
            "independent_mod_ideal",
            None,
            format!(
                "rank {rall} of B and S together, {rb} of B alone, |S| = {}",
                s_set.len()
            ),
        )
    });
    let total = enumerate_box(p, bound, BoxFilter::All).len();
    report.checks.push(Check::new(
        "box_partition",
        None,
        s_set.len() + basis.len() == total,
    ));
    report.counts = Counts {
        b: Some(basis.len()),
        s: Some(s_set.len()),
        dim: Some(rall - rb),
    };
    report.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_variables() {
        let r = quotient_nk1_check(&ParamSpec::new(2, 1, 2).unwrap(), 1).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(quotient_nk1_check(&ParamSpec::new(3, 1, 2).unwrap(), 1).is_err());
    }
}
