//! Commutative substrate: polynomials in the even variables, Gröbner bases
//! of ideals and submodules of free modules, syzygies, dimension and
//! univariate factorization.

pub mod factor;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod syzygy;

pub use factor::{factor_mod_p, irreducible_cert, IrreducibleCert, UPoly};
pub use groebner::{groebner, ideal_groebner, with_deadline, GroebnerBasis, Limits};
pub use ideal::{
    eliminate, ideal_colon, ideal_intersect, jacobian_ideal, radical_contains, CIdeal,
};
pub use module::{MTerm, ModOrder, ModVec};
pub use poly::Poly;
pub use syzygy::{module_intersect, preimage, syzygies};
