//! Exact computation of Jack polynomials over `ℚ(β)`, their specialization at
//! `β = −(r−1)/(k+1)`, and the ideal spanned by the Jack polynomials indexed
//! by `(k,r,n)`-admissible partitions.

pub mod arith;
pub mod ideal;
pub mod jack;
pub mod operators;
pub mod partitions;
pub mod report;
pub mod sympoly;

pub use arith::{beta_kr, parse_rat, BetaPoly, BetaRatFunc, BigRat, Scalar};
pub use ideal::{build_basis, reduce_membership, IdealBasis, IdealError, MembershipCertificate};
pub use jack::{jack_symbolic, pole_profile, specialize, JackCache, JackError, JackPoly, SpecializedJack};
pub use partitions::{
    enumerate_admissible, is_admissible, AdmissibleFamily, AdmissibleParams, Partition, PartitionError,
};
pub use report::{Case, Report, Status};
pub use sympoly::{ExpandedPoly, MSymPoly};
