//! Cross-verification: the one place the localization engine and the
//! Schubert oracle meet.
//!
//! Three independent consequences of the theory are checked over every valid
//! triple up to a bound: the fixed-point sum is the same integer at every
//! specialization (constancy), δ(m,n,r) = δ(C(n+1,2)−m, n, n−r) (duality),
//! and the sum agrees with the ring-theoretic intersection number (oracle).
//! A failure of any of them means the engine contradicted itself — an
//! internal error, never a usage error.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, InternalError};
use crate::localization::{
    delta, window_triples, ProblemTriple, Specialization, SpecializationStrategy,
};
use crate::schubert::delta_via_schubert;

/// Compare a localization value against the independent Schubert evaluation.
pub fn cross_check(triple: &ProblemTriple, value: &BigInt) -> Result<(), InternalError> {
    let oracle = delta_via_schubert(triple);
    if *value == oracle {
        Ok(())
    } else {
        Err(InternalError::OracleMismatch {
            m: triple.m(),
            n: triple.n(),
            r: triple.r(),
            localization: value.clone(),
            schubert: oracle,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Check every valid triple with n up to this bound.
    pub max_n: u32,
    /// Run the Schubert oracle only for n up to this (it is exact but slow
    /// at larger n; it exists for correctness, not throughput).
    pub oracle_max_n: u32,
    /// Random specializations per triple, on top of the sequential one.
    pub random_checks: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 6,
            oracle_max_n: 6,
            random_checks: 2,
            seed: 42,
        }
    }
}

/// Outcome of one family of checks across all triples it applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSummary {
    pub name: &'static str,
    pub triples: usize,
    pub failures: Vec<String>,
}

impl CheckSummary {
    fn new(name: &'static str) -> Self {
        CheckSummary {
            name,
            triples: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub options: VerifyOptions,
    pub constancy: CheckSummary,
    pub duality: CheckSummary,
    pub oracle: CheckSummary,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.constancy.passed() && self.duality.passed() && self.oracle.passed()
    }

    pub fn checks(&self) -> [&CheckSummary; 3] {
        [&self.constancy, &self.duality, &self.oracle]
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verifying all valid (m, n, r) with n <= {} (oracle up to n = {})",
            self.options.max_n,
            self.options.oracle_max_n.min(self.options.max_n)
        )?;
        for check in self.checks() {
            writeln!(
                f,
                "  {:<11} {:>4} triples  {}",
                check.name,
                check.triples,
                if check.passed() { "pass" } else { "FAIL" }
            )?;
            for detail in &check.failures {
                writeln!(f, "    {detail}")?;
            }
        }
        writeln!(
            f,
            "overall: {}",
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Sweep every valid triple with n ≤ `max_n` through the constancy, duality
/// and (up to `oracle_max_n`) oracle checks. Inconsistencies are collected
/// into the report rather than returned as errors; the `Err` path is for
/// malformed options only.
pub fn verify_window(options: &VerifyOptions) -> Result<VerifyReport, Error> {
    if options.max_n == 0 {
        return Err(crate::error::ParamError::MatrixSizeZero.into());
    }
    let mut constancy = CheckSummary::new("constancy");
    let mut duality = CheckSummary::new("duality");
    let mut oracle = CheckSummary::new("oracle");

    for n in 1..=options.max_n {
        let sequential = Specialization::sequential(n);
        let random = SpecializationStrategy::Random { seed: options.seed }
            .specializations(n, options.random_checks.max(1))?;
        let random = &random[..options.random_checks];

        for triple in window_triples(n) {
            constancy.triples += 1;
            let value = match delta(&triple, &sequential) {
                Ok(v) => v,
                Err(e) => {
                    constancy.failures.push(e.to_string());
                    continue;
                }
            };
            for spec in random {
                match delta(&triple, spec) {
                    Ok(v) if v == value => {}
                    Ok(v) => constancy.failures.push(
                        InternalError::SpecializationDisagreement {
                            m: triple.m(),
                            n: triple.n(),
                            r: triple.r(),
                            lambda_a: sequential.lambda().into(),
                            value_a: value.clone(),
                            lambda_b: spec.lambda().into(),
                            value_b: v,
                        }
                        .to_string(),
                    ),
                    Err(e) => constancy.failures.push(e.to_string()),
                }
            }

            duality.triples += 1;
            let dual = triple.dual();
            match delta(&dual, &sequential) {
                Ok(v) if v == value => {}
                Ok(v) => duality.failures.push(
                    InternalError::DualityMismatch {
                        m: triple.m(),
                        n: triple.n(),
                        r: triple.r(),
                        value: value.clone(),
                        dual_m: dual.m(),
                        dual_r: dual.r(),
                        dual_value: v,
                    }
                    .to_string(),
                ),
                Err(e) => duality.failures.push(e.to_string()),
            }

            if n <= options.oracle_max_n {
                oracle.triples += 1;
                if let Err(e) = cross_check(&triple, &value) {
                    oracle.failures.push(e.to_string());
                }
            }
        }
    }

    Ok(VerifyReport {
        options: options.clone(),
        constancy,
        duality,
        oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_check_agrees_on_golden_triple() {
        let t = ProblemTriple::new(3, 3, 1).unwrap();
        assert!(cross_check(&t, &BigInt::from(4)).is_ok());
        let err = cross_check(&t, &BigInt::from(5)).unwrap_err();
        assert!(matches!(err, InternalError::OracleMismatch { .. }));
        assert!(err.to_string().contains("(3,3,1)"));
    }

    #[test]
    fn small_window_verifies_clean() {
        let report = verify_window(&VerifyOptions {
            max_n: 4,
            oracle_max_n: 4,
            random_checks: 1,
            seed: 42,
        })
        .unwrap();
        assert!(report.passed(), "{report}");
        // 1 + 3 + 7 + 14 valid triples for n = 1..=4
        assert_eq!(report.constancy.triples, 25);
        assert_eq!(report.oracle.triples, 25);
        let text = report.to_string();
        assert!(text.contains("overall: pass"));
    }

    #[test]
    fn zero_bound_is_a_parameter_error() {
        let err = verify_window(&VerifyOptions {
            max_n: 0,
            ..VerifyOptions::default()
        })
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn oracle_bound_caps_oracle_work() {
        let report = verify_window(&VerifyOptions {
            max_n: 4,
            oracle_max_n: 2,
            random_checks: 0,
            seed: 1,
        })
        .unwrap();
        assert_eq!(report.oracle.triples, 4); // n = 1 has 1 triple, n = 2 has 3
        assert_eq!(report.constancy.triples, 25);
        assert!(report.passed());
    }
}
