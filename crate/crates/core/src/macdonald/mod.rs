//! Nonsymmetric Macdonald polynomials `E_λ`: two independent constructions,
//! evaluation at weights, the factored `u_0` recursion and duality.

mod cache;
mod path;
mod projection;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub use cache::{DiskCache, CACHE_ENV};
pub use path::{e_by_intertwiners, u0_factored, IntertwinerPath, MoveKind, PathMove};
pub use projection::{e_by_projection, e_by_projector_product, weights_below, y_column};

use crate::compositions::{eigenvalue, succ};
use crate::error::Result;
use crate::polyrep::{
    apply_yi, clear_generic_denominators, eval_at_weight, specialize_poly, HeckeParams,
    LaurentPoly, Sign,
};
use crate::scalars::{zeta_factored, BiPoly, GenericScalar, ParamSpec, SpecScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Projection,
    Intertwiners,
}

impl std::str::FromStr for Route {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "projection" => Ok(Route::Projection),
            "intertwiners" => Ok(Route::Intertwiners),
            _ => Err(format!("unknown route {s:?}")),
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Route::Projection => "projection",
            Route::Intertwiners => "intertwiners",
        })
    }
}

pub fn e_by_route(lambda: &[i64], route: Route) -> Result<LaurentPoly<GenericScalar>> {
    match route {
        Route::Projection => e_by_projection(lambda),
        Route::Intertwiners => e_by_intertwiners(lambda),
    }
}

type Memo = Mutex<HashMap<Vec<i64>, Arc<LaurentPoly<GenericScalar>>>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(Default::default)
}

fn disk() -> &'static Mutex<Option<DiskCache>> {
    static D: OnceLock<Mutex<Option<DiskCache>>> = OnceLock::new();
    D.get_or_init(|| Mutex::new(std::env::var_os(CACHE_ENV).map(DiskCache::new)))
}

/// Routes [`e_generic`] through an on-disk cache (or stops doing so).
pub fn set_disk_cache(cache: Option<DiskCache>) {
    *disk().lock().unwrap() = cache;
}

/// `E_λ` at generic parameters, memoized in memory and, when configured, on
/// disk. Built by the triangular eigen-solve, which is much cheaper than
/// replaying intertwiners for weights far from the origin.
pub fn e_generic(lambda: &[i64]) -> Result<Arc<LaurentPoly<GenericScalar>>> {
    if let Some(e) = memo().lock().unwrap().get(lambda) {
        return Ok(e.clone());
    }
    let cache = disk().lock().unwrap().clone();
    let loaded = cache.as_ref().and_then(|c| c.load(lambda));
    let e = match loaded {
        Some(e) => e,
        None => {
            let e = e_by_projection(lambda)?;
            if let Some(c) = &cache {
                c.store(lambda, &e)?;
            }
            e
        }
    };
    let e = Arc::new(e);
    memo().lock().unwrap().insert(lambda.to_vec(), e.clone());
    Ok(e)
}

/// `E_λ` with every coefficient specialized; a pole is reported with the
/// offending exponents.
pub fn e_specialized(lambda: &[i64], p: &ParamSpec) -> Result<LaurentPoly<SpecScalar>> {
    assert_eq!(lambda.len(), p.n());
    let cache = disk().lock().unwrap().clone();
    if let Some(f) = cache.as_ref().and_then(|c| c.load_spec(lambda, p)) {
        return Ok(f);
    }
    let f = specialize_poly(e_generic(lambda)?.as_ref(), p)?;
    if let Some(c) = &cache {
        c.store_spec(lambda, p, &f)?;
    }
    Ok(f)
}

/// `ζ(u_0(E_λ))` from the factored recursion.
pub fn zeta_u0(lambda: &[i64], p: &ParamSpec) -> Result<i64> {
    Ok(zeta_factored(&u0_factored(lambda)?, p))
}

/// `u_μ(E_λ)`.
pub fn u_at(lambda: &[i64], mu: &[i64]) -> Result<GenericScalar> {
    Ok(eval_at_weight(e_generic(lambda)?.as_ref(), mu, Sign::Minus))
}

/// `u_μ(E_λ) / u_0(E_λ) = u_λ(E_μ) / u_0(E_μ)`, evaluated exactly.
pub fn check_duality(lambda: &[i64], mu: &[i64]) -> Result<bool> {
    let zero = vec![0; lambda.len()];
    let l = u_at(lambda, mu)?.div(&u_at(lambda, &zero)?);
    let r = u_at(mu, lambda)?.div(&u_at(mu, &zero)?);
    Ok(l == r)
}

/// `Y_i f = t^{ρ(λ)_i} q^{λ_i} f` for every `i`, checked on the numerator
/// after clearing denominators.
pub fn check_eigen(f: &LaurentPoly<GenericScalar>, lambda: &[i64]) -> bool {
    let (p, _) = clear_generic_denominators(f);
    let h = HeckeParams::laurent();
    (0..lambda.len()).all(|i| {
        let (e, g) = eigenvalue(lambda, i);
        apply_yi(&p, i, &h) == p.scale(&BiPoly::mono(e as i32, g as i32))
    })
}

/// Leading coefficient 1 at `x^λ` and every other exponent strictly below.
pub fn check_monic_triangular(f: &LaurentPoly<GenericScalar>, lambda: &[i64]) -> bool {
    f.coeff_of(lambda).is_one()
        && f.support()
            .iter()
            .all(|mu| mu == lambda || succ(lambda, mu))
}
