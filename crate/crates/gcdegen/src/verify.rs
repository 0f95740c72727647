//! Batch verification sweeps over permutations, subsets, and weights.
//!
//! Each check returns a [`CheckOutcome`] carrying a pass/fail verdict,
//! summary statistics, and the first few counterexamples on failure. The
//! command-line `verify` subcommands and the acceptance suite both drive
//! these functions, so they agree by construction. Bounds errors surface
//! as `Err`; mathematical failures surface as `Ok` with `passed = false`.

use std::time::Instant;

use num_bigint::BigInt;

use crate::error::Result;
use crate::gcpattern::{
    enumerate_patterns, face_from_pipe_dream, gc_character, greedy_decompose, interlacing_weights,
    pattern_count, phi, psi, union_face_count, ExponentArray, FaceOrientation,
    FROZEN_FACE_ORIENTATION,
};
use crate::grid::{enumerate_pipe_dreams, Permutation};
use crate::ideals::{verify_degeneration_all, DegenerationReport};
use crate::parallel::map_collect;
use crate::polyalg::{
    demazure_character, demazure_dim, schubert_divided_difference, schubert_pipedreams,
    schur_ssyt, weyl_dim, HighestWeight,
};
use crate::sagbi::{
    alpha, antidiagonal_is_min, binomial_relation_holds, binomial_relation_holds_antidiagonal,
    conjugation_t_exponent, lattice_join, lattice_leq, lattice_meet, semigroup_rank,
    t_valuations, upsilon, ColumnSet, ExponentVector, MinorSpec,
};

const MAX_COUNTEREXAMPLES: usize = 5;

/// Result of one verification sweep.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub description: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
    pub millis: u128,
}

struct Tally {
    id: &'static str,
    description: String,
    cases: u64,
    counterexamples: Vec<String>,
    notes: Vec<String>,
    start: Instant,
}

impl Tally {
    fn new(id: &'static str, description: impl Into<String>) -> Self {
        Tally {
            id,
            description: description.into(),
            cases: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
            start: Instant::now(),
        }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(detail());
            } else if self.counterexamples.len() == MAX_COUNTEREXAMPLES {
                self.counterexamples.push("... (more omitted)".into());
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            id: self.id,
            description: self.description,
            passed: self.counterexamples.is_empty(),
            cases: self.cases,
            counterexamples: self.counterexamples,
            notes: self.notes,
            millis: self.start.elapsed().as_millis(),
        }
    }
}

/// Acceptance check A1: the antidiagonal initial ideal equals the intersection of
/// pipe-dream primes for every `w` in `S_n`, `2 <= n <= max_n`.
pub fn check_initial_ideal(max_n: usize) -> Result<CheckOutcome> {
    let mut tally = Tally::new("A1", format!("in(I_w) = intersection of primes, n <= {max_n}"));
    for n in 2..=max_n {
        let reports = verify_degeneration_all(n, max_n.max(crate::ideals::DEGENERATION_BOUND))?;
        for report in &reports {
            tally.case(report.equal, || degeneration_failure(report));
        }
        tally.note(format!("n = {n}: {} permutations", reports.len()));
    }
    Ok(tally.finish())
}

/// The A1 check for a single permutation.
pub fn check_initial_ideal_single(w: &Permutation) -> Result<CheckOutcome> {
    let report = crate::ideals::verify_degeneration_bounded(w, 6)?;
    let mut tally = Tally::new("A1", format!("in(I_w) = intersection of primes at w = {w}"));
    tally.case(report.equal, || degeneration_failure(&report));
    tally.note(format!(
        "{} pipe dreams, initial gens {:?}, intersection gens {:?}",
        report.pipe_dream_count, report.initial_generators, report.intersection_generators
    ));
    Ok(tally.finish())
}

fn degeneration_failure(report: &DegenerationReport) -> String {
    format!(
        "w = {}: initial {:?} != intersection {:?}",
        report.w, report.initial_generators, report.intersection_generators
    )
}

/// Acceptance check A2: the pipe-dream sum equals the divided-difference recursion
/// for every `w` in `S_n`, `n <= max_n`.
pub fn check_schubert_double(max_n: usize) -> Result<CheckOutcome> {
    let mut tally = Tally::new(
        "A2",
        format!("Schubert pipe-dream sum = divided-difference recursion, n <= {max_n}"),
    );
    for n in 1..=max_n {
        let results = map_collect(Permutation::all(n), |w| {
            let dd = schubert_divided_difference(&w);
            let pd = schubert_pipedreams(&w)?;
            Ok::<_, crate::Error>((w, dd == pd))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        for (w, ok) in results {
            tally.case(ok, || format!("w = {w}: pipe-dream sum differs"));
        }
    }
    Ok(tally.finish())
}

/// One dimension-identity sweep: all weakly decreasing weights with
/// `n` parts in `0..=max_part`.
#[derive(Clone, Copy, Debug)]
pub struct DimSweep {
    pub n: usize,
    pub max_part: i64,
    pub with_upsilon: bool,
}

/// Acceptance check A3: `|Pi_lambda| = weyl_dim(lambda)`, and `= |Upsilon_lambda|`
/// where requested.
pub fn check_dims(sweeps: &[DimSweep]) -> Result<CheckOutcome> {
    let mut tally = Tally::new("A3", "pattern count = Weyl dim = weight-set size".to_string());
    for sweep in sweeps {
        let weights = HighestWeight::all_bounded(sweep.n, sweep.max_part);
        let count = weights.len();
        let results = map_collect(weights, |lam| {
            let pi = pattern_count(&lam)?;
            let weyl = weyl_dim(&lam);
            let ups = if sweep.with_upsilon {
                Some(BigInt::from(upsilon(&lam)?.len()))
            } else {
                None
            };
            Ok::<_, crate::Error>((lam, pi, weyl, ups))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        for (lam, pi, weyl, ups) in results {
            tally.case(pi == weyl, || {
                format!("lambda = {lam}: |Pi| = {pi} but Weyl dim = {weyl}")
            });
            if let Some(u) = ups {
                tally.case(pi == u, || {
                    format!("lambda = {lam}: |Pi| = {pi} but |Upsilon| = {u}")
                });
            }
        }
        tally.note(format!(
            "n = {}, parts <= {}, upsilon = {}: {count} weights",
            sweep.n, sweep.max_part, sweep.with_upsilon
        ));
    }
    Ok(tally.finish())
}

/// A3 supplement: the branching recursion
/// `|Pi_lambda| = sum over interlacing mu of |Pi_mu|`.
pub fn check_branching(max_n: usize, max_part: i64) -> Result<CheckOutcome> {
    let mut tally = Tally::new("A3b", format!("branching recursion, n <= {max_n}"));
    for n in 2..=max_n {
        for lam in HighestWeight::all_bounded(n, max_part) {
            let direct = pattern_count(&lam)?;
            let mut via_branching = BigInt::from(0);
            for mu in interlacing_weights(&lam) {
                via_branching += pattern_count(&mu)?;
            }
            tally.case(direct == via_branching, || {
                format!("lambda = {lam}: |Pi| = {direct} but branching sum = {via_branching}")
            });
        }
    }
    Ok(tally.finish())
}

/// Acceptance check A4: the phi/psi correspondence and greedy decomposition,
/// exhaustive for `lambda_1 <= max_part`, `n <= max_n`.
pub fn check_gc_prop(max_n: usize, max_part: i64) -> Result<CheckOutcome> {
    let mut tally = Tally::new(
        "A4",
        format!("phi/psi bijection and greedy decomposition, n <= {max_n}, parts <= {max_part}"),
    );
    for n in 1..=max_n {
        for lam in HighestWeight::all_bounded(n, max_part) {
            let patterns = enumerate_patterns(&lam)?;
            let ups = upsilon(&lam)?;

            // psi embeds the lattice points into the weight set and phi
            // inverts it
            for p in &patterns {
                let a = psi(p);
                tally.case(a.is_nonnegative(), || {
                    format!("lambda = {lam}: psi({p}) has a negative entry")
                });
                tally.case(phi(&a) == *p, || {
                    format!("lambda = {lam}: phi(psi({p})) differs")
                });
                let grid = a.to_grid()?;
                tally.case(ups.contains(&grid), || {
                    format!("lambda = {lam}: psi({p}) is not in Upsilon")
                });

                // greedy decomposition reconstructs psi with the right
                // size profile
                let sets = greedy_decompose(p);
                let gaps = lam.gaps();
                let profile_ok = (1..=n).all(|k| {
                    sets.iter().filter(|s| s.len() == k).count() as i64 == gaps[k - 1]
                });
                tally.case(profile_ok, || {
                    format!("lambda = {lam}: greedy profile wrong at {p}")
                });
                let mut sum = ExponentVector::zero(n);
                for s in &sets {
                    sum = sum.add(&alpha(s, n));
                }
                tally.case(sum == grid, || {
                    format!("lambda = {lam}: greedy alphas do not sum to psi at {p}")
                });
            }

            // phi embeds the weight set into the lattice points and psi
            // inverts it
            for u in &ups {
                let a = ExponentArray::from_grid(u)?;
                let p = phi(&a);
                tally.case(p.is_pattern(&lam)?, || {
                    format!("lambda = {lam}: phi of a weight vector is not a pattern")
                });
                tally.case(psi(&p) == a, || {
                    format!("lambda = {lam}: psi(phi(a)) differs")
                });
            }

            tally.case(patterns.len() == ups.len(), || {
                format!(
                    "lambda = {lam}: |Pi| = {} but |Upsilon| = {}",
                    patterns.len(),
                    ups.len()
                )
            });
        }
    }
    Ok(tally.finish())
}

/// Acceptance check A5: for every Pluecker column set the antidiagonal term is the
/// strict weight minimizer and all `t`-valuations are nonnegative with a
/// unique zero.
pub fn check_lemma_weights(max_n: usize) -> Result<CheckOutcome> {
    let mut tally = Tally::new(
        "A5",
        format!("antidiagonal term is the unique weight minimum, n <= {max_n}"),
    );
    for n in 1..=max_n {
        let results = map_collect(ColumnSet::all_nonempty(n), |cols| {
            let spec = MinorSpec::plucker(&cols);
            // a hypothesis violation would itself falsify the sweep, so it
            // is reported as a counterexample rather than bubbling up
            let is_min = match antidiagonal_is_min(&spec, n) {
                Ok(b) => Ok(b),
                Err(crate::Error::LemmaHypothesisNotMet(msg)) => Err(msg),
                Err(other) => return Err(other),
            };
            let terms = t_valuations(&cols, n)?;
            let nonneg = terms.iter().all(|t| t.valuation >= BigInt::from(0));
            let zeros = terms
                .iter()
                .filter(|t| t.valuation == BigInt::from(0))
                .count();
            Ok::<_, crate::Error>((cols, is_min, nonneg, zeros))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        for (cols, is_min, nonneg, zeros) in results {
            match is_min {
                Ok(is_min) => tally.case(is_min, || {
                    format!("n = {n}, J = {cols}: antidiagonal not the strict minimum")
                }),
                Err(msg) => tally.case(false, || format!("n = {n}, J = {cols}: {msg}")),
            }
            tally.case(nonneg, || format!("n = {n}, J = {cols}: negative t-valuation"));
            tally.case(zeros == 1, || {
                format!("n = {n}, J = {cols}: {zeros} zero valuations")
            });
        }
    }
    Ok(tally.finish())
}

/// Acceptance check A6: lattice laws with glb/lub semantics (exhaustive triples up
/// to `triple_max_n`) and the degenerate binomial identity in both
/// conventions (all pairs up to `pair_max_n`).
pub fn check_lattice_suite(pair_max_n: usize, triple_max_n: usize) -> Result<CheckOutcome> {
    let mut tally = Tally::new(
        "A6",
        format!(
            "distributive lattice laws (n <= {triple_max_n}) and binomial identities (n <= {pair_max_n})"
        ),
    );
    for n in 1..=triple_max_n {
        let subsets = ColumnSet::all_nonempty(n);
        for a in &subsets {
            for b in &subsets {
                let meet = lattice_meet(a, b);
                let join = lattice_join(a, b);
                tally.case(
                    lattice_leq(&meet, a) && lattice_leq(&meet, b),
                    || format!("n = {n}: meet({a}, {b}) = {meet} is not a lower bound"),
                );
                tally.case(
                    lattice_leq(a, &join) && lattice_leq(b, &join),
                    || format!("n = {n}: join({a}, {b}) = {join} is not an upper bound"),
                );
                tally.case(
                    lattice_meet(b, a) == meet && lattice_join(b, a) == join,
                    || format!("n = {n}: meet/join not commutative at ({a}, {b})"),
                );
                // absorption
                tally.case(
                    lattice_meet(a, &join) == *a && lattice_join(a, &meet) == *a,
                    || format!("n = {n}: absorption fails at ({a}, {b})"),
                );
                for c in &subsets {
                    // glb: every common lower bound sits under the meet
                    if lattice_leq(c, a) && lattice_leq(c, b) {
                        tally.case(lattice_leq(c, &meet), || {
                            format!("n = {n}: {c} <= {a},{b} but not <= meet {meet}")
                        });
                    }
                    // lub dually
                    if lattice_leq(a, c) && lattice_leq(b, c) {
                        tally.case(lattice_leq(&join, c), || {
                            format!("n = {n}: {c} >= {a},{b} but not >= join {join}")
                        });
                    }
                    // associativity and distributivity
                    tally.case(
                        lattice_meet(&lattice_meet(a, b), c) == lattice_meet(a, &lattice_meet(b, c)),
                        || format!("n = {n}: meet not associative at ({a}, {b}, {c})"),
                    );
                    tally.case(
                        lattice_join(&lattice_join(a, b), c) == lattice_join(a, &lattice_join(b, c)),
                        || format!("n = {n}: join not associative at ({a}, {b}, {c})"),
                    );
                    tally.case(
                        lattice_meet(a, &lattice_join(b, c))
                            == lattice_join(&lattice_meet(a, b), &lattice_meet(a, c)),
                        || format!("n = {n}: distributivity fails at ({a}, {b}, {c})"),
                    );
                }
            }
        }
    }
    for n in 1..=pair_max_n {
        let subsets = ColumnSet::all_nonempty(n);
        for a in &subsets {
            for b in &subsets {
                tally.case(binomial_relation_holds(a, b, n), || {
                    format!("n = {n}: diagonal binomial fails at ({a}, {b})")
                });
                tally.case(binomial_relation_holds_antidiagonal(a, b, n), || {
                    format!("n = {n}: antidiagonal binomial fails at ({a}, {b})")
                });
            }
        }
    }
    Ok(tally.finish())
}

/// Acceptance check A7: the span of the antidiagonal exponent vectors has rank
/// `n(n+1)/2`.
pub fn check_semigroup_rank(max_n: usize) -> Result<CheckOutcome> {
    let mut tally = Tally::new("A7", format!("rank of span(alpha_I) = n(n+1)/2, n <= {max_n}"));
    for n in 1..=max_n {
        let rank = semigroup_rank(n)?;
        tally.case(rank == n * (n + 1) / 2, || {
            format!("n = {n}: rank = {rank}, expected {}", n * (n + 1) / 2)
        });
    }
    Ok(tally.finish())
}

/// Acceptance check A8: conjugation exponents are nonnegative with the exact
/// zero/positive pattern, and the `n = 5` exponent matrices match the
/// frozen values.
pub fn check_conjugation(max_n: usize) -> Result<CheckOutcome> {
    let mut tally = Tally::new(
        "A8",
        format!("conjugation exponents nonnegative with exact zero pattern, n <= {max_n}"),
    );
    for n in 1..=max_n {
        for j in 1..=n {
            for i in 1..=n {
                for k in 1..=i {
                    let e = conjugation_t_exponent(i, k, j, n)?;
                    tally.case(e >= BigInt::from(0), || {
                        format!("n = {n}: exponent({i},{k},{j}) = {e} < 0")
                    });
                    let should_be_positive = i > k && k + j <= n;
                    tally.case((e > BigInt::from(0)) == should_be_positive, || {
                        format!(
                            "n = {n}: exponent({i},{k},{j}) = {e}, positivity should be {should_be_positive}"
                        )
                    });
                }
            }
        }
    }
    if max_n >= 5 {
        // frozen n = 5 exponent matrices, one per column component;
        // entries (i, k) for i >= k
        let expected: [&[(usize, usize, i64)]; 5] = [
            &[
                (2, 1, 18),
                (3, 1, 24),
                (3, 2, 6),
                (4, 1, 26),
                (4, 2, 8),
                (4, 3, 2),
                (5, 1, 27),
                (5, 2, 9),
                (5, 3, 3),
                (5, 4, 1),
            ],
            &[
                (2, 1, 6),
                (3, 1, 8),
                (3, 2, 2),
                (4, 1, 9),
                (4, 2, 3),
                (4, 3, 1),
                (5, 1, 9),
                (5, 2, 3),
                (5, 3, 1),
                (5, 4, 0),
            ],
            &[
                (2, 1, 2),
                (3, 1, 3),
                (3, 2, 1),
                (4, 1, 3),
                (4, 2, 1),
                (4, 3, 0),
                (5, 1, 3),
                (5, 2, 1),
                (5, 3, 0),
                (5, 4, 0),
            ],
            &[
                (2, 1, 1),
                (3, 1, 1),
                (3, 2, 0),
                (4, 1, 1),
                (4, 2, 0),
                (4, 3, 0),
                (5, 1, 1),
                (5, 2, 0),
                (5, 3, 0),
                (5, 4, 0),
            ],
            &[
                (2, 1, 0),
                (3, 1, 0),
                (3, 2, 0),
                (4, 1, 0),
                (4, 2, 0),
                (4, 3, 0),
                (5, 1, 0),
                (5, 2, 0),
                (5, 3, 0),
                (5, 4, 0),
            ],
        ];
        for (j0, entries) in expected.iter().enumerate() {
            for &(i, k, value) in *entries {
                let e = conjugation_t_exponent(i, k, j0 + 1, 5)?;
                tally.case(e == BigInt::from(value), || {
                    format!(
                        "n = 5 display: exponent({i},{k},{}) = {e}, expected {value}",
                        j0 + 1
                    )
                });
            }
        }
        tally.note("n = 5 display matrices reproduced".to_string());
    }
    Ok(tally.finish())
}

/// Acceptance check A9: rc-face dimensions and the union-count/Demazure match.
///
/// For the staircase weight and all `w`, every rc-face must be nonempty of
/// dimension `n(n-1)/2 - length(w)`. The orientation is re-derived at
/// `n = 2, 3`; if no candidate validates, the check fails loudly. The
/// frozen orientation must be among the valid ones and must match the
/// union counts for every `n <= max_n`.
pub fn check_faces(max_n: usize) -> Result<CheckOutcome> {
    let mut tally = Tally::new(
        "A9",
        format!("rc-face dimensions and Demazure union counts, n <= {max_n}"),
    );

    for n in 2..=max_n {
        let lam = HighestWeight::staircase(n);
        let results = map_collect(Permutation::all(n), |w| {
            let mut rows = Vec::new();
            for dream in enumerate_pipe_dreams(&w)? {
                let face = face_from_pipe_dream(&dream, &lam)?;
                rows.push((w.clone(), dream.len(), face.dimension()?));
            }
            Ok::<_, crate::Error>(rows)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        for rows in results {
            for (w, _size, dim) in rows {
                let expected = (n * (n - 1) / 2 - w.length()) as i64;
                tally.case(dim == expected, || {
                    format!("n = {n}, w = {w}: face dimension {dim}, expected {expected}")
                });
            }
        }
    }

    // orientation resolution at n = 2, 3
    let mut valid = Vec::new();
    for orientation in FaceOrientation::ALL {
        let mut all_match = true;
        for n in 2..=3.min(max_n) {
            let lam = HighestWeight::staircase(n);
            for w in Permutation::all(n) {
                let count = union_face_count(&w, &lam)?;
                let dim = demazure_dim(&orientation.apply(&w), &lam)?;
                if count != dim {
                    all_match = false;
                    break;
                }
            }
            if !all_match {
                break;
            }
        }
        if all_match {
            valid.push(orientation);
        }
    }
    tally.case(!valid.is_empty(), || {
        "no orientation among {w, w^-1, w0*w, w*w0} matches the Demazure dimensions at n = 2, 3"
            .to_string()
    });
    tally.case(valid.contains(&FROZEN_FACE_ORIENTATION), || {
        format!(
            "frozen orientation {} is not among the validated ones {:?}",
            FROZEN_FACE_ORIENTATION.label(),
            valid.iter().map(|o| o.label()).collect::<Vec<_>>()
        )
    });
    tally.note(format!(
        "orientations validated at n <= 3: {:?}; frozen: {}",
        valid.iter().map(|o| o.label()).collect::<Vec<_>>(),
        FROZEN_FACE_ORIENTATION.label()
    ));

    // the frozen orientation must match the union counts at every n
    for n in 2..=max_n {
        let lam = HighestWeight::staircase(n);
        let results = map_collect(Permutation::all(n), |w| {
            let count = union_face_count(&w, &lam)?;
            let dim = demazure_dim(&FROZEN_FACE_ORIENTATION.apply(&w), &lam)?;
            Ok::<_, crate::Error>((w, count, dim))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        for (w, count, dim) in results {
            tally.case(count == dim, || {
                format!("n = {n}, w = {w}: union count {count} != Demazure dim {dim}")
            });
        }
    }
    Ok(tally.finish())
}

/// Acceptance check A10: the pattern-weight character equals the Schur polynomial
/// and the Demazure character of the longest element, for the standard
/// small weights.
pub fn check_characters() -> Result<CheckOutcome> {
    let mut tally = Tally::new("A10", "character identities on the standard weights".to_string());
    let weights = ["1,0", "1,1", "2,1,0", "2,1,1,0"];
    for s in weights {
        let lam: HighestWeight = s.parse()?;
        let gc = gc_character(&lam)?;
        let schur = schur_ssyt(&lam);
        let w0 = Permutation::longest(lam.n());
        let demazure = demazure_character(&w0, &lam)?;
        tally.case(gc == schur, || {
            format!("lambda = {lam}: pattern character != Schur")
        });
        tally.case(schur == demazure, || {
            format!("lambda = {lam}: Schur != Demazure(w0)")
        });
    }
    Ok(tally.finish())
}

/// All ten acceptance sweeps at their contract bounds, optionally capped.
pub fn run_all(cap: usize) -> Result<Vec<CheckOutcome>> {
    let c = |bound: usize| bound.min(cap);
    Ok(vec![
        check_initial_ideal(c(5))?,
        check_schubert_double(c(5))?,
        check_dims(&[
            DimSweep {
                n: c(4),
                max_part: 2,
                with_upsilon: true,
            },
            DimSweep {
                n: c(3),
                max_part: 4,
                with_upsilon: true,
            },
            DimSweep {
                n: c(4),
                max_part: 4,
                with_upsilon: false,
            },
        ])?,
        check_gc_prop(c(4), 2)?,
        check_lemma_weights(c(6))?,
        check_lattice_suite(c(6), c(5))?,
        check_semigroup_rank(c(6))?,
        check_conjugation(c(8))?,
        check_faces(c(4))?,
        check_characters()?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        assert!(check_initial_ideal(3).unwrap().passed);
        assert!(check_schubert_double(3).unwrap().passed);
        assert!(check_semigroup_rank(4).unwrap().passed);
        assert!(check_conjugation(5).unwrap().passed);
        assert!(check_characters().unwrap().passed);
        assert!(check_lemma_weights(4).unwrap().passed);
        assert!(check_branching(3, 3).unwrap().passed);
    }

    #[test]
    fn gc_prop_small() {
        let outcome = check_gc_prop(3, 2).unwrap();
        assert!(outcome.passed, "{:?}", outcome.counterexamples);
    }

    #[test]
    fn lattice_small() {
        let outcome = check_lattice_suite(4, 3).unwrap();
        assert!(outcome.passed, "{:?}", outcome.counterexamples);
    }

    #[test]
    fn faces_small() {
        let outcome = check_faces(3).unwrap();
        assert!(outcome.passed, "{:?}", outcome.counterexamples);
    }
}
