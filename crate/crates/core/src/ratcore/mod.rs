//! Exact rational arithmetic, polynomials, rational functions and real roots.

mod multipoly;
mod ratfunc;
mod rational;
mod resultant;
mod roots;
mod unipoly;

pub use multipoly::{poly_arith, MultiPoly, PolyOp};
pub use ratfunc::RationalFunction;
pub use rational::{
    int, parse_rational, rat, simplest_between, sqrt_exact, to_f64, Rational,
};
pub use resultant::{resultant, PolyOverPoly};
pub use roots::{
    count_roots_open, real_roots, real_roots_with_width, root_bound, RealRoot, DEFAULT_WIDTH_EXP,
};
pub use unipoly::UniPoly;
