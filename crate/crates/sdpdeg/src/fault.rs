//! Failpoint hook for negative-control testing.
//!
//! Setting `SDPDEG_FAULT=sign-flip` in the environment makes the
//! localization engine negate its result. The Schubert path is untouched, so
//! any cross-check must then fail — used to prove the verification machinery
//! actually detects a wrong engine. Read once per process.

use std::sync::OnceLock;

pub(crate) fn sign_flip() -> bool {
    static FLAG: OnceLock<bool> = OnceLock::new();
    *FLAG.get_or_init(|| std::env::var_os("SDPDEG_FAULT").is_some_and(|v| v == *"sign-flip"))
}
