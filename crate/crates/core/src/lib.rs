//! Exact computer algebra for the polynomial representation of the double
//! affine Hecke algebra of type GL_n, nonsymmetric Macdonald polynomials, and
//! the ideals cut out by wheel conditions at `t^{k+1} q^{r-1} = 1`.

pub mod compositions;
pub mod error;
pub mod macdonald;
pub mod polyrep;
pub mod scalars;
pub mod verify;
pub mod wheel_ideal;

pub use error::{Error, Result};

/// The guide's snippets, compiled and run as doc-tests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/compositions.md")]
    mod compositions {}
    #[doc = include_str!("../../../book/src/polyrep.md")]
    mod polyrep {}
    #[doc = include_str!("../../../book/src/macdonald.md")]
    mod macdonald {}
    #[doc = include_str!("../../../book/src/wheel_ideal.md")]
    mod wheel_ideal {}
    #[doc = include_str!("../../../book/src/verify.md")]
    mod verify {}
}
