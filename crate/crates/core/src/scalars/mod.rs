//! Exact scalars: the generic field ℚ(t^{1/2}, q), its image ℚ(ζ_{r-1})(u^{1/2})
//! at a specialization point, factored products of binomials, and the order
//! of vanishing along the specialization component.

mod bipoly;
mod cyclo;
mod factored;
mod generic;
pub mod json;
mod params;
mod rat;
mod ring;
mod spec;
mod wpoly;
mod zeta;
mod zpoly;

pub use bipoly::{BiPoly, Exp2};
pub use cyclo::{cyclotomic, euler_phi, CycloElem};
pub use factored::FactoredScalar;
pub use generic::{CycloFactor, Den, GenericScalar};
pub use params::ParamSpec;
pub use rat::Rat;
pub use ring::{Field, Ring};
pub use spec::SpecScalar;
pub use wpoly::WPoly;
pub use zeta::{
    deformation_coefficient, is_regular_at_spec, poly_order, specialize, specialize_bipoly,
    zeta_series,
};

/// ζ of a factored scalar; see [`FactoredScalar::zeta`].
pub fn zeta_factored(f: &FactoredScalar, p: &ParamSpec) -> i64 {
    f.zeta(p)
}
