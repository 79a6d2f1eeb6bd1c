//! Exact verification engines.
//!
//! * Weighted inner products with the Dunkl weight
//!   `|x1|^(2mu1) |x2|^(2mu2) |x3|^(2mu3) exp(-r^2)`, valued as rational
//!   multiples of `Gamma(mu1+1/2) Gamma(mu2+1/2) Gamma(mu3+1/2)`.
//! * Orthogonality and squared-norm checks against closed-form norms.
//! * Operator relation suites decided on the degree-capped monomial basis.
//! * Structure-constant discovery: an exact linear fit of a bracket over the
//!   symmetry basis `{1, J, K, L} x {reflection monomials}`.
//!
//! Operator equality is equality of the action on every monomial of total
//! degree at most the cap. That is equality on a filtered subspace, not a
//! proof for all degrees; every report records its cap.

mod discover;
mod eigen;
mod inner;
mod linalg;
mod relations;

pub use discover::{
    discover_named_pair, discover_relation, discover_sd3_all, gellmann_table_at_zero, named_operator, AnsatzTerm,
    ComparisonStatus, DiscoveredRelation, FTableEntry, PublishedComparison, SD3_GENERATORS,
};
pub use eigen::{
    check_eigenstate, check_hermiticity, verify_eigen_suite, EigenCheck, EigenReport,
};
pub use inner::{
    check_orthonormality, inner_product, squared_norm_oracle, GammaScaledRational,
    OrthonormalityReport, PairFailure,
};
pub use relations::{
    verify_relation_suite, CheckMode, RelationReport, RelationSuite, Verdict, WitnessReport,
};
