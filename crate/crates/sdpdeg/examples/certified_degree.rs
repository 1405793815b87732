//! A degree with its certificate: three random specializations must agree,
//! and the Schubert-calculus oracle must reproduce the value. The result is
//! rendered as the same JSON the CLI emits.
//!
//!     cargo run --example certified_degree

use sdpdeg::report::{render_degree, DegreeReport, OutputFormat};
use sdpdeg::{cross_check, delta_certified, ProblemTriple, SpecializationStrategy};

fn main() -> Result<(), sdpdeg::Error> {
    let triple = ProblemTriple::new(5, 4, 2)?;
    let strategy = SpecializationStrategy::Random { seed: 42 };
    let mut result = delta_certified(&triple, &strategy, 3)?;
    cross_check(&triple, &result.value)?;
    result.oracle_checked = true;
    print!(
        "{}",
        render_degree(&DegreeReport::from_result(&result), OutputFormat::Json)
    );
    Ok(())
}
