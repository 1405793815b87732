//! Compute one algebraic degree.
//!
//!     cargo run --example single_degree

use sdpdeg::{delta, ProblemTriple, Specialization};

fn main() -> Result<(), sdpdeg::Error> {
    let triple = ProblemTriple::new(7, 4, 2)?;
    let value = delta(&triple, &Specialization::sequential(triple.n()))?;
    println!(
        "delta({}, {}, {}) = {}    [k = {}, l = {}, {} fixed points on G({}, {})]",
        triple.m(),
        triple.n(),
        triple.r(),
        value,
        triple.k(),
        triple.l(),
        triple.fixed_point_count()?,
        triple.r(),
        triple.n(),
    );
    Ok(())
}
