//! The fixed-point sum is a rational function of (λ₁,…,λₙ) that is secretly
//! constant: any pairwise-distinct integers yield the same degree. Watch it
//! hold for hand-picked and for randomly drawn specializations.
//!
//!     cargo run --example specialization_invariance

use sdpdeg::{delta, BigInt, ProblemTriple, Specialization, SpecializationStrategy};

fn main() -> Result<(), sdpdeg::Error> {
    let triple = ProblemTriple::new(4, 3, 1)?;

    for lambda in [
        vec![0, 1, 2],
        vec![2, 1, 0],
        vec![-7, 3, 40],
        vec![1000, -1000, 1],
    ] {
        let spec = Specialization::new(lambda.iter().map(|&v| BigInt::from(v)).collect())?;
        println!("lambda = {lambda:?} -> {}", delta(&triple, &spec)?);
    }

    let strategy = SpecializationStrategy::Random { seed: 7 };
    for spec in strategy.specializations(triple.n(), 3)? {
        println!("lambda = {:?} -> {}", spec.lambda(), delta(&triple, &spec)?);
    }
    Ok(())
}
