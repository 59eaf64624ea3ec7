//! Parallel driver for the per-permutation checks.

use elnitsky::forced::{check_permutation, verify_theorem, Counterexample};
use elnitsky::{Error, Limits, Permutation, Theorem, VerifyReport};
use rayon::prelude::*;

/// Same report as [`verify_theorem`], with the permutations of `S_size` split across threads.
pub fn verify_parallel(
    theorem: Theorem,
    size: usize,
    limits: &Limits,
) -> Result<VerifyReport, Error> {
    if theorem.sized_by_m() {
        return verify_theorem(theorem, size, limits);
    }
    if size == 0 {
        return Err(Error::DomainViolation("n must be at least 1"));
    }
    let perms: Vec<Permutation> = Permutation::all(size)
        .filter(Permutation::is_fully_supported)
        .collect();
    let outcomes = perms
        .par_iter()
        .map(|w| check_permutation(theorem, w, limits))
        .collect::<Result<Vec<_>, _>>()?;
    let counterexamples = perms
        .iter()
        .zip(outcomes)
        .filter_map(|(w, detail)| {
            detail.map(|detail| Counterexample {
                permutation: w.clone(),
                detail,
            })
        })
        .collect();
    Ok(VerifyReport {
        theorem,
        size,
        checked: perms.len(),
        counterexamples,
    })
}
