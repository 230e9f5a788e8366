//! Wall-and-chamber computations for tilt and Bridgeland stability on P³.

pub mod chern;
pub mod chow;
pub mod idealsuite;
pub mod lambdawalls;
pub mod rational;
pub mod symbolic;
pub mod tiltwalls;

pub use chern::{
    bott_cohomology, euler_pairing, sheaf_library, ChernCharacter, ChernError, ExtendedSlope, SheafSpec,
    StabilityPoint,
};
pub use rational::{format_significant, parse_rational, rat, Rational};
pub use tiltwalls::{
    enumerate_destabilizers, nu_wall, nu_zero_locus, refine_point_lengths, ConicLocus, DestabilizerCandidate,
    TiltError, TwistedClass, WallLocus,
};
pub use lambdawalls::{
    classify_chamber, phi, phi_alpha_derivative_at, sample_wall, skew_lines_class, skew_lines_wall, wall_slope_at,
    ChamberLabel, LambdaError, WallId, WallPolynomial,
};
pub use chow::{
    dual_curve_basis, grr_c1_pushforward, mori_report, named_divisors, pair, todd_p3, BigradedClass, ChowError,
    CurveClass, DivisorClass, MoriReport,
};
pub use idealsuite::{
    embedded_point_ideal, limit_ideal, parse_manifest, restrict_to_plane, run_manifest, run_paper_suite, ManifestError,
    Scenario, VerificationReport, VerificationStep,
};
