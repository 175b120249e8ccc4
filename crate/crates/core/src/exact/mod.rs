//! Exact scalar, polynomial and series arithmetic.

pub mod laurent;
pub mod linalg;
pub mod poly;
pub mod ratfn;
pub mod ring;
pub mod series;

pub use laurent::YLaurent;
pub use poly::MultiPoly;
pub use ratfn::YRationalFn;
pub use ring::{frac, parse_rational, rat, rational_to_string, Integer, Rational, Ring};
pub use series::TruncSeries;
