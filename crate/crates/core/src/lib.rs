//! Disk bounds for the zeros of real polynomials, computed from coefficient
//! inequalities and verified against an independent root solver.
//!
//! The classical starting point is the Eneström–Kakeya theorem: a real
//! polynomial with positive nondecreasing coefficients has all its zeros in
//! the closed unit disk. This crate implements that bound, its monotone and
//! unimodal relatives, and the shifted-chain generalizations with free
//! parameters (`α, β` for the monotone chain; `s, t, λ` for the unimodal
//! one), together with:
//!
//! * closed-form selection of the free parameters minimizing
//!   `|center| + radius`, guarded by an exhaustive grid oracle in tests;
//! * a deterministic Aberth–Ehrlich solver used to check every disk against
//!   the actual zeros (containment, tightness, Vieta residuals);
//! * seeded fuzz campaigns generating hypothesis-satisfying polynomials;
//! * a CLI (`zerobound`) producing JSON reports and SVG plots.
//!
//! Coefficients are everywhere in ascending power order `[a_0, ..., a_n]`
//! with `a_n != 0` and degree ≥ 1.

pub mod cli;
pub mod disk;
pub mod fuzz;
pub mod optimizer;
pub mod poly;
pub mod roots;
pub mod svg;
pub mod theorems;

pub use disk::Disk;
pub use optimizer::{
    best_bound, grid_oracle, optimize_t1, optimize_t2, optimize_t3, quality, BoundEntry,
    BoundReport, ContainmentTag, FeasibleRegion, GridRanges, OptError,
};
pub use poly::{PolyError, Polynomial};
pub use roots::{
    cauchy_bound, containment, find_roots, find_roots_default, tightness, vieta_check, Containment,
    RootSet, RootsError,
};
pub use theorems::{
    baseline_disk, disk_cor1, disk_t1, disk_t2, disk_t3, feasible_lambdas, hypothesis_t1,
    hypothesis_t3, theorem_disk, TheoremError, TheoremId, TheoremParams,
};
