//! Restricted monotone 3-SAT instances.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generate::GENERATION_BUDGET;

/// Positive clauses `C_i` and negative clauses `D_j` over variables
/// `0..n_vars`. A positive clause is satisfied by a true member, a negative
/// clause by a false member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatInstance {
    pub n_vars: usize,
    pub positive: Vec<[usize; 3]>,
    pub negative: Vec<[usize; 3]>,
}

impl SatInstance {
    /// The six-variable instance with four clauses of each sign used as the
    /// running example for the 4P1 reduction.
    pub fn figure() -> SatInstance {
        SatInstance {
            n_vars: 6,
            positive: vec![[0, 1, 2], [0, 2, 3], [1, 4, 5], [3, 4, 5]],
            negative: vec![[0, 1, 3], [0, 2, 4], [1, 3, 5], [2, 4, 5]],
        }
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.positive.iter().all(|c| c.iter().any(|&x| assignment[x]))
            && self.negative.iter().all(|c| c.iter().any(|&x| !assignment[x]))
    }

    /// A random shape-valid instance: each sign's clauses are a random
    /// grouping into triples of every variable listed twice, resampled until
    /// no triple repeats a variable.
    pub fn random(n_vars: usize, seed: u64) -> Result<SatInstance> {
        if n_vars == 0 || !n_vars.is_multiple_of(3) {
            return Err(Error::InvalidSatInstance(format!(
                "variable count {n_vars} must be a positive multiple of 3"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sample = || -> Result<Vec<[usize; 3]>> {
            let mut pool: Vec<usize> = (0..n_vars).flat_map(|x| [x, x]).collect();
            for _ in 0..GENERATION_BUDGET {
                pool.shuffle(&mut rng);
                let clauses: Vec<[usize; 3]> =
                    pool.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
                if clauses.iter().all(|c| c[0] != c[1] && c[1] != c[2] && c[0] != c[2]) {
                    return Ok(clauses);
                }
            }
            Err(Error::GenerationTimeout(GENERATION_BUDGET))
        };
        let positive = sample()?;
        let negative = sample()?;
        Ok(SatInstance {
            n_vars,
            positive,
            negative,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

/// Checks that every clause has three distinct in-range variables and every
/// variable occurs in exactly two clauses of each sign.
pub fn validate_sat_shape(inst: &SatInstance) -> ShapeReport {
    let mut violations = Vec::new();
    if inst.n_vars == 0 {
        violations.push("instance has no variables".to_string());
    }
    let mut pos = vec![0usize; inst.n_vars];
    let mut neg = vec![0usize; inst.n_vars];
    for (label, clauses, counts) in [
        ("positive", &inst.positive, &mut pos),
        ("negative", &inst.negative, &mut neg),
    ] {
        for (i, c) in clauses.iter().enumerate() {
            if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
                violations.push(format!("{label} clause {i} repeats a variable"));
            }
            for &x in c {
                match counts.get_mut(x) {
                    Some(k) => *k += 1,
                    None => violations.push(format!("{label} clause {i} uses unknown variable {x}")),
                }
            }
        }
    }
    for x in 0..inst.n_vars {
        if pos[x] != 2 {
            violations.push(format!("variable {x} occurs in {} positive clauses", pos[x]));
        }
        if neg[x] != 2 {
            violations.push(format!("variable {x} occurs in {} negative clauses", neg[x]));
        }
    }
    ShapeReport {
        valid: violations.is_empty(),
        violations,
    }
}
