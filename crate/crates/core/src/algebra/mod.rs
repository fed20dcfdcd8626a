//! Exact polynomial arithmetic: over `Z`, over `F_p`, over the cyclotomic
//! integers `Z[ζ]`, and the multivariate U-polynomial.

mod bivariate;
mod cyclotomic;
mod int_poly;
mod mod_poly;
mod upoly;

pub use bivariate::{format_bivariate, TwoVarPoly, TwoVarTermJson};
pub use cyclotomic::{CycElem, CycPoly};
pub use int_poly::{IntPoly, PolyJson};
pub use mod_poly::{check_odd_prime, residue, ModPoly};
pub use upoly::{
    fold_exponent, u_normal_form, NormalMonomial, NormalUPoly, UMonomial, UPoly, UTermJson,
};
