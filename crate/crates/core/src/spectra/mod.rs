//! Central limit and Poisson laws of the hierarchy: moments, Jacobi
//! parameters, Cauchy transforms, densities and atoms.

pub mod cauchy;
pub mod jacobi;
pub mod measure;
pub mod poisson;
pub mod series;

pub use cauchy::{
    asymptotic_series, cauchy, cauchy_boundary, cauchy_continued_fraction, contour_moments, density, sqrt_branch,
    support_edge,
};
pub use jacobi::{clt_moment, jacobi_for_m, moments_from_jacobi, moments_from_jacobi_truncated, JacobiSequence};
pub use measure::{atoms, integrate_on_support, Atom, MeasureSummary};
pub use poisson::{poisson_moment, poisson_moment_by_recurrence, poisson_series, PoissonSeries, POISSON_ORDER_CAP};
pub use series::{FormalSeries, LambdaPoly};
