//! Complete-intersection decisions, by generator counting and by pattern
//! avoidance, with exhaustive cross-validation of the two.

use serde::Serialize;

use crate::error::Error;
use crate::generators::elusive_minors;
use crate::perm::{all_permutations, Permutation};

/// The matrix Schubert variety of `w` is a complete intersection exactly when
/// `w` avoids these three patterns.
pub const CI_PATTERNS: [[usize; 4]; 3] = [[1, 3, 4, 2], [1, 4, 3, 2], [1, 4, 2, 3]];

/// Longer patterns whose avoidance follows from avoiding [`CI_PATTERNS`];
/// kept as a standing regression check.
pub const IMPLIED_PATTERNS: [&[usize]; 3] =
    [&[3, 1, 5, 2, 4], &[2, 4, 1, 5, 3], &[3, 5, 1, 6, 2, 4]];

/// An embedding of a forbidden pattern, as evidence against CI-ness.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PatternWitness {
    pub pattern: Vec<usize>,
    pub positions: Vec<usize>,
}

/// Both CI deciders side by side. `by_count` is the ground truth (minimal
/// generator count against the codimension); `by_pattern` is the fast path,
/// cross-checked rather than trusted.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CiVerdict {
    pub by_count: bool,
    pub by_pattern: bool,
    pub elusive_count: usize,
    pub length: usize,
    pub pattern_witness: Option<PatternWitness>,
}

/// CI by counting: the minimal generating set has exactly `ℓ(w)` elements.
pub fn is_ci_by_count(w: &Permutation) -> (bool, usize, usize) {
    let elusive_count = elusive_minors(w).elusive_count();
    let length = w.length();
    (elusive_count == length, elusive_count, length)
}

/// CI by pattern avoidance of 1342, 1432 and 1423; on failure returns one
/// embedding as witness.
pub fn is_ci_by_pattern(w: &Permutation) -> (bool, Option<PatternWitness>) {
    for pattern in CI_PATTERNS {
        let u = Permutation::from_word(pattern.to_vec()).unwrap();
        if let Some(positions) = w.contains_pattern(&u) {
            return (
                false,
                Some(PatternWitness {
                    pattern: pattern.to_vec(),
                    positions,
                }),
            );
        }
    }
    (true, None)
}

/// Runs both deciders and insists they agree.
pub fn ci_verdict(w: &Permutation) -> Result<CiVerdict, Error> {
    let (by_count, elusive_count, length) = is_ci_by_count(w);
    let (by_pattern, pattern_witness) = is_ci_by_pattern(w);
    if by_count != by_pattern {
        return Err(Error::InvariantViolation {
            msg: format!(
                "CI deciders disagree on w = {w}: by_count = {by_count} \
                 (elusive {elusive_count}, length {length}), by_pattern = {by_pattern}"
            ),
        });
    }
    Ok(CiVerdict {
        by_count,
        by_pattern,
        elusive_count,
        length,
        pattern_witness,
    })
}

/// Per-degree summary of a full cross-check over the symmetric group.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CrossCheckReport {
    pub n: usize,
    pub total: usize,
    pub ci_count: usize,
    pub disagreements: Vec<Vec<usize>>,
}

/// For every `w` in `S_n`: checks that the two deciders agree and that
/// avoiding the size-4 patterns implies avoiding [`IMPLIED_PATTERNS`].
/// Any failure is an internal invariant violation naming the offending `w`.
pub fn cross_check(n: usize, max_n: usize) -> Result<CrossCheckReport, Error> {
    if n < 1 || n > max_n {
        return Err(Error::LimitsExceeded {
            msg: format!("cross-check size {n} outside 1..={max_n}"),
        });
    }
    let implied: Vec<Permutation> = IMPLIED_PATTERNS
        .iter()
        .map(|word| Permutation::from_word(word.to_vec()).unwrap())
        .collect();
    let mut total = 0;
    let mut ci_count = 0;
    let mut disagreements = Vec::new();
    for w in all_permutations(n) {
        total += 1;
        let (by_count, ..) = is_ci_by_count(&w);
        let (by_pattern, _) = is_ci_by_pattern(&w);
        if by_count != by_pattern {
            disagreements.push(w.word().to_vec());
        }
        if by_count {
            ci_count += 1;
        }
        if by_pattern {
            for u in &implied {
                if let Some(positions) = w.contains_pattern(u) {
                    return Err(Error::InvariantViolation {
                        msg: format!(
                            "w = {w} avoids the size-4 patterns but contains {u} at {positions:?}"
                        ),
                    });
                }
            }
        }
    }
    if disagreements.is_empty() {
        Ok(CrossCheckReport {
            n,
            total,
            ci_count,
            disagreements,
        })
    } else {
        Err(Error::InvariantViolation {
            msg: format!(
                "CI deciders disagree for {} permutations of S_{n}: {disagreements:?}",
                disagreements.len()
            ),
        })
    }
}
