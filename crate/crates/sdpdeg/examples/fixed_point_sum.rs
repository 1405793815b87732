//! The fixed-point sum, opened up: each coordinate r-subset I of {1,…,n}
//! contributes A_{k,I^c}·A_{l,I}/T_I — a rational number — and the sum of
//! the C(n,r) terms is an integer up to the global sign (−1)^l.
//!
//!     cargo run --example fixed_point_sum

use num_traits::Zero;
use sdpdeg::localization::{euler_t, fixed_point_term, weights_for};
use sdpdeg::subsets::SubsetIndex;
use sdpdeg::{delta, ExactRational, ProblemTriple, Specialization};

fn main() -> Result<(), sdpdeg::Error> {
    let triple = ProblemTriple::new(4, 3, 1)?;
    let spec = Specialization::sequential(triple.n());
    println!(
        "delta({}, {}, {}) at lambda = {:?}:",
        triple.m(),
        triple.n(),
        triple.r(),
        spec.lambda()
    );

    let mut subset = SubsetIndex::unrank(0, triple.n(), triple.r())?;
    let mut sum = ExactRational::zero();
    loop {
        let term = fixed_point_term(&subset, &triple, &spec)?;
        println!(
            "  I = {:?}: square weights {:?}, T_I = {}, term = {}",
            subset.members(),
            weights_for(&subset, &spec).weights(),
            euler_t(&subset, &spec)?,
            term
        );
        sum += term;
        if !subset.advance() {
            break;
        }
    }
    println!(
        "  sum = {}, so delta = (-1)^{} * ({}) = {}",
        sum,
        triple.l(),
        sum,
        delta(&triple, &spec)?
    );
    Ok(())
}
