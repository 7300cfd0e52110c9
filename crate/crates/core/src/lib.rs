//! Exact exterior calculus for the natural G₂ structure on the unit tangent
//! bundle `SM` of an oriented Riemannian 4-manifold.
//!
//! Scalars are polynomials with rational coefficients in the curvature
//! constant `k` (or in the Riemann symbols of a general base). Forms live on
//! the adapted coframe `e0, …, e6` of `SM`. Every identity is decided by exact
//! equality, never by a tolerance.
//!
//! ```
//! use gwistor::{AltForm, LeviCivita, NamedFormCatalog};
//!
//! let c = NamedFormCatalog::new();
//! let lc = LeviCivita::symbolic_k();
//! assert_eq!(lc.ext_d(&c.mu).unwrap(), c.dmu);
//! assert_eq!(c.dmu, AltForm::from_terms(&[(1, &[4, 1]), (1, &[5, 2]), (1, &[6, 3])]));
//! ```

pub mod connection;
pub mod contact;
pub mod curvature;
pub mod error;
pub mod flat;
pub mod form;
pub mod frame;
pub mod generator_derivatives;
pub mod octonion;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod stiefel;
pub mod tensor;
pub mod torsion;
pub mod vector;
pub mod verify;

pub use connection::LeviCivita;
pub use curvature::CurvatureSpec;
pub use error::{Error, Result};
pub use form::{AltForm, Blade};
pub use frame::{named_form, NamedFormCatalog};
pub use report::{Check, CheckReport, Status};
pub use scalar::{Scalar, Symbol};
pub use torsion::{CharacteristicConnection, TorsionData};
pub use vector::{AmbientVector, SkewEndo};
pub use verify::{run_verify, KMode, Suite};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    struct Intro;
    #[doc = include_str!("../../../book/src/forms.md")]
    struct Forms;
    #[doc = include_str!("../../../book/src/frame.md")]
    struct Frame;
    #[doc = include_str!("../../../book/src/connection.md")]
    struct Connection;
    #[doc = include_str!("../../../book/src/torsion.md")]
    struct Torsion;
    #[doc = include_str!("../../../book/src/contact.md")]
    struct Contact;
    #[doc = include_str!("../../../book/src/homogeneous.md")]
    struct Homogeneous;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
