//! Schubert determinantal ideals and their degeneration: Fulton generators,
//! antidiagonal initial monomial ideals, pipe-dream coordinate primes,
//! squarefree monomial-ideal algebra, and the verifier checking that the
//! initial ideal equals the intersection of the pipe-dream primes.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grid::{enumerate_pipe_dreams, for_each_combination, Permutation, PipeDream};
use crate::parallel::map_collect;
use crate::sagbi::{ColumnSet, MinorSpec};

pub mod buchberger;

/// Cap on `n` for the bit-mask monomial representation (`n^2 <= 64`).
pub const MONOMIAL_GRID_BOUND: usize = 8;

/// Cap on `n` for Fulton generator enumeration.
pub const FULTON_BOUND: usize = 6;

/// Default cap on `n` for the degeneration verifier; 6 needs an explicit
/// override via [`verify_degeneration_bounded`].
pub const DEGENERATION_BOUND: usize = 5;

/// A squarefree monomial in the grid variables `z_{ij}`, stored as a bit
/// mask over the `n x n` cells.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SqfMonomial {
    n: usize,
    mask: u64,
}

impl SqfMonomial {
    pub fn new(n: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MONOMIAL_GRID_BOUND {
            return Err(Error::BoundExceeded {
                what: "squarefree monomial grid",
                limit: MONOMIAL_GRID_BOUND,
                requested: n,
            });
        }
        let mut mask = 0u64;
        for (i, j) in cells {
            if i == 0 || i > n || j == 0 || j > n {
                return Err(Error::OutOfRange(format!(
                    "cell ({i}, {j}) outside the {n} x {n} grid"
                )));
            }
            mask |= 1 << ((i - 1) * n + (j - 1));
        }
        Ok(SqfMonomial { n, mask })
    }

    pub fn variable(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::new(n, [(i, j)])
    }

    pub fn one(n: usize) -> Self {
        SqfMonomial { n, mask: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn support(&self) -> Vec<(usize, usize)> {
        (0..self.n * self.n)
            .filter(|b| self.mask >> b & 1 == 1)
            .map(|b| (b / self.n + 1, b % self.n + 1))
            .collect()
    }

    pub fn divides(&self, other: &SqfMonomial) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.mask & other.mask == self.mask
    }

    pub fn lcm(&self, other: &SqfMonomial) -> SqfMonomial {
        debug_assert_eq!(self.n, other.n);
        SqfMonomial {
            n: self.n,
            mask: self.mask | other.mask,
        }
    }
}

impl fmt::Display for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .support()
            .iter()
            .map(|&(i, j)| format!("z{i}{j}"))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A squarefree monomial ideal, stored by its minimal generators (no
/// generator divides another).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: BTreeSet<SqfMonomial>,
}

impl MonomialIdeal {
    /// The zero ideal (no generators).
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: BTreeSet::new(),
        }
    }

    pub fn from_generators(n: usize, gens: impl IntoIterator<Item = SqfMonomial>) -> Self {
        let mut ideal = MonomialIdeal::zero(n);
        ideal.gens = minimalize(gens.into_iter().collect());
        ideal
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &BTreeSet<SqfMonomial> {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Monomial ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &SqfMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment `self` in `other`: every generator of `self` is
    /// divisible by some generator of `other`.
    pub fn contained_in(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

fn minimalize(gens: BTreeSet<SqfMonomial>) -> BTreeSet<SqfMonomial> {
    let mut out = BTreeSet::new();
    for g in &gens {
        if gens.iter().any(|h| h != g && h.divides(g)) {
            continue;
        }
        out.insert(*g);
    }
    out
}

/// Minimal generators of `a` intersect `b`: the pairwise lcms, minimalized.
pub fn intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    assert_eq!(a.n, b.n);
    let gens: BTreeSet<SqfMonomial> = a
        .gens
        .iter()
        .flat_map(|g| b.gens.iter().map(move |h| g.lcm(h)))
        .collect();
    MonomialIdeal {
        n: a.n,
        gens: minimalize(gens),
    }
}

/// Intersection of many ideals, folded pairwise in increasing generator
/// count with interleaved minimalization.
pub fn intersect_all(n: usize, ideals: Vec<MonomialIdeal>) -> Option<MonomialIdeal> {
    let mut ideals = ideals;
    ideals.sort_by_key(|i| i.num_generators());
    let mut iter = ideals.into_iter();
    let mut acc = iter.next()?;
    for next in iter {
        assert_eq!(next.n, n);
        acc = intersect(&acc, &next);
    }
    Some(acc)
}

/// Equality via mutual divisibility of generator sets.
pub fn ideal_equals(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a.contained_in(b) && b.contained_in(a)
}

/// All Fulton generators of the Schubert determinantal ideal: for every
/// `(q, p)`, the minors of size `1 + w_qp` in the top-left `q x p`
/// submatrix. Duplicates across boxes removed.
pub fn fulton_generators(w: &Permutation) -> Result<Vec<MinorSpec>> {
    fulton_generators_with(w, false)
}

/// Fulton generators, optionally restricted to the essential set of `w`
/// (the southeast corners of the diagram); the reduction leaves the
/// antidiagonal initial ideal unchanged.
pub fn fulton_generators_with(w: &Permutation, essential_only: bool) -> Result<Vec<MinorSpec>> {
    let n = w.n();
    if n > FULTON_BOUND {
        return Err(Error::BoundExceeded {
            what: "Fulton generators",
            limit: FULTON_BOUND,
            requested: n,
        });
    }
    let boxes: Vec<(usize, usize)> = if essential_only {
        essential_set(w)
    } else {
        (1..=n).flat_map(|q| (1..=n).map(move |p| (q, p))).collect()
    };
    let mut minors: BTreeSet<MinorSpec> = BTreeSet::new();
    for (q, p) in boxes {
        let size = 1 + w.rank_fn(q, p)?;
        if size > q.min(p) {
            continue;
        }
        for_each_combination(q, size, |row_choice| {
            let rows: Vec<usize> = row_choice.iter().map(|&r| r + 1).collect();
            for_each_combination(p, size, |col_choice| {
                let cols: Vec<usize> = col_choice.iter().map(|&c| c + 1).collect();
                minors.insert(MinorSpec::new(rows.clone(), cols).unwrap());
            });
        });
    }
    Ok(minors.into_iter().collect())
}

/// The essential set: southeast corners `(q, p)` of the diagram
/// `{(q, p) : w(q) > p, w^{-1}(p) > q}`.
pub fn essential_set(w: &Permutation) -> Vec<(usize, usize)> {
    let n = w.n();
    let winv = w.inverse();
    let in_diagram =
        |q: usize, p: usize| q >= 1 && p >= 1 && q <= n && p <= n && w.apply(q) > p && winv.apply(p) > q;
    let mut out = Vec::new();
    for q in 1..=n {
        for p in 1..=n {
            if in_diagram(q, p) && !in_diagram(q + 1, p) && !in_diagram(q, p + 1) {
                out.push((q, p));
            }
        }
    }
    out
}

/// The antidiagonal monomial of a minor: cells `(i_s, j_{k+1-s})`.
pub fn antidiag_monomial(spec: &MinorSpec, n: usize) -> Result<SqfMonomial> {
    let k = spec.size();
    SqfMonomial::new(
        n,
        (0..k).map(|s| (spec.rows()[s], spec.cols()[k - 1 - s])),
    )
}

/// The antidiagonal initial ideal of the Schubert determinantal ideal:
/// generated by the antidiagonal terms of the Fulton minors (these form a
/// Groebner basis for any antidiagonal term order), minimalized.
pub fn initial_ideal(w: &Permutation) -> Result<MonomialIdeal> {
    let n = w.n();
    let gens = fulton_generators(w)?
        .iter()
        .map(|m| antidiag_monomial(m, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::from_generators(n, gens))
}

/// The coordinate prime of a pipe dream: one variable generator per
/// crossing.
pub fn pipe_dream_prime(dream: &PipeDream) -> Result<MonomialIdeal> {
    let n = dream.n();
    let gens = dream
        .cells()
        .iter()
        .map(|&(i, j)| SqfMonomial::variable(n, i, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::from_generators(n, gens))
}

/// Outcome of the degeneration check for one permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegenerationReport {
    pub w: Permutation,
    pub equal: bool,
    pub initial_generators: Vec<String>,
    pub intersection_generators: Vec<String>,
    pub pipe_dream_count: usize,
    pub millis: u128,
}

impl DegenerationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "w": self.w.to_string(),
            "equal": self.equal,
            "initial_generators": self.initial_generators,
            "intersection_generators": self.intersection_generators,
            "pipe_dream_count": self.pipe_dream_count,
            "millis": self.millis,
        })
    }
}

/// Computes the initial ideal and the intersection of the pipe-dream primes
/// of `w` and reports whether they agree, generator set by generator set.
pub fn verify_degeneration(w: &Permutation) -> Result<DegenerationReport> {
    verify_degeneration_bounded(w, DEGENERATION_BOUND)
}

pub fn verify_degeneration_bounded(w: &Permutation, bound: usize) -> Result<DegenerationReport> {
    let n = w.n();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "degeneration verification",
            limit: bound,
            requested: n,
        });
    }
    let start = Instant::now();
    let initial = initial_ideal(w)?;
    let dreams = enumerate_pipe_dreams(w)?;
    let primes = dreams
        .iter()
        .map(pipe_dream_prime)
        .collect::<Result<Vec<_>>>()?;
    let intersection = intersect_all(n, primes).expect("every w has at least one pipe dream");
    let equal = ideal_equals(&initial, &intersection);
    Ok(DegenerationReport {
        w: w.clone(),
        equal,
        initial_generators: initial.generator_strings(),
        intersection_generators: intersection.generator_strings(),
        pipe_dream_count: dreams.len(),
        millis: start.elapsed().as_millis(),
    })
}

/// Runs [`verify_degeneration`] over all of `S_n`, in one-line-notation
/// order; the sweep parallelizes per permutation.
pub fn verify_degeneration_all(n: usize, bound: usize) -> Result<Vec<DegenerationReport>> {
    map_collect(Permutation::all(n), |w| verify_degeneration_bounded(&w, bound))
        .into_iter()
        .collect()
}

/// Column sets `I` whose Pluecker coordinate vanishes identically on the
/// Schubert variety of `w`: those with `rank_fn(w, |I|, i_s) < s` for some
/// `s`.
pub fn vanishing_pluckers(w: &Permutation) -> Vec<ColumnSet> {
    let n = w.n();
    ColumnSet::all_nonempty(n)
        .into_iter()
        .filter(|cols| {
            let k = cols.len();
            cols.elems()
                .iter()
                .enumerate()
                .any(|(s0, &c)| w.rank_fn(k, c).unwrap() < s0 + 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Diagram;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn mono(n: usize, cells: &[(usize, usize)]) -> SqfMonomial {
        SqfMonomial::new(n, cells.iter().copied()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[(usize, usize)]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(n, gens.iter().map(|g| mono(n, g)))
    }

    #[test]
    fn monomial_basics() {
        let m = mono(3, &[(1, 2), (2, 1)]);
        assert_eq!(m.to_string(), "z12*z21");
        assert_eq!(m.degree(), 2);
        assert!(mono(3, &[(1, 2)]).divides(&m));
        assert!(!mono(3, &[(3, 3)]).divides(&m));
        assert_eq!(
            mono(3, &[(1, 2)]).lcm(&mono(3, &[(2, 1)])),
            m
        );
        assert_eq!(SqfMonomial::one(3).to_string(), "1");
        assert!(SqfMonomial::new(9, [(1, 1)]).is_err());
    }

    #[test]
    fn minimality() {
        let i = ideal(2, &[&[(1, 1)], &[(1, 1), (1, 2)]]);
        assert_eq!(i.num_generators(), 1);
        assert!(i.contains(&mono(2, &[(1, 1), (2, 2)])));
        assert!(!i.contains(&mono(2, &[(1, 2)])));
    }

    #[test]
    fn intersect_examples() {
        let zero = MonomialIdeal::zero(3);
        let a = ideal(3, &[&[(1, 1)]]);
        assert!(intersect(&a, &zero).is_zero());

        let b = ideal(3, &[&[(1, 2)]]);
        assert_eq!(intersect(&a, &b), ideal(3, &[&[(1, 1), (1, 2)]]));

        let a = ideal(3, &[&[(1, 1)], &[(1, 2)]]);
        let b = ideal(3, &[&[(1, 1)], &[(2, 1)]]);
        assert_eq!(
            intersect(&a, &b),
            ideal(3, &[&[(1, 1)], &[(1, 2), (2, 1)]])
        );
    }

    #[test]
    fn intersect_matches_membership_oracle() {
        // m lies in the intersection iff some generator of each ideal
        // divides it; exhaustive over the squarefree universe at n = 2
        let universe: Vec<SqfMonomial> = (0..16u64)
            .map(|mask| SqfMonomial { n: 2, mask })
            .collect();
        let gen_choices: Vec<Vec<SqfMonomial>> = vec![
            vec![mono(2, &[(1, 1)])],
            vec![mono(2, &[(1, 1)]), mono(2, &[(1, 2)])],
            vec![mono(2, &[(1, 1), (2, 2)]), mono(2, &[(1, 2)])],
            vec![mono(2, &[(2, 1)]), mono(2, &[(1, 2), (2, 2)])],
            vec![mono(2, &[(1, 1), (1, 2), (2, 1)])],
        ];
        for ga in &gen_choices {
            for gb in &gen_choices {
                let a = MonomialIdeal::from_generators(2, ga.iter().copied());
                let b = MonomialIdeal::from_generators(2, gb.iter().copied());
                let meet = intersect(&a, &b);
                for m in &universe {
                    assert_eq!(
                        meet.contains(m),
                        a.contains(m) && b.contains(m),
                        "membership mismatch at {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn ideal_equality_examples() {
        let a = ideal(2, &[&[(1, 1)]]);
        assert!(ideal_equals(&a, &a));
        let b = MonomialIdeal::from_generators(
            2,
            [mono(2, &[(1, 1)]), mono(2, &[(1, 1), (1, 2)])],
        );
        assert!(ideal_equals(&a, &b));
        let c = ideal(2, &[&[(1, 2)]]);
        assert!(!ideal_equals(&a, &c));
    }

    #[test]
    fn fulton_examples() {
        assert!(fulton_generators(&Permutation::identity(4))
            .unwrap()
            .is_empty());

        let gens = fulton_generators(&perm("21")).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0], MinorSpec::new(vec![1], vec![1]).unwrap());

        let gens = fulton_generators(&perm("321")).unwrap();
        let expected = vec![
            MinorSpec::new(vec![1], vec![1]).unwrap(),
            MinorSpec::new(vec![1], vec![2]).unwrap(),
            MinorSpec::new(vec![2], vec![1]).unwrap(),
            MinorSpec::new(vec![1, 2], vec![1, 2]).unwrap(),
        ];
        assert_eq!(gens.len(), 4);
        for m in expected {
            assert!(gens.contains(&m));
        }
    }

    #[test]
    fn antidiag_examples() {
        let m = MinorSpec::new(vec![1], vec![1]).unwrap();
        assert_eq!(antidiag_monomial(&m, 3).unwrap(), mono(3, &[(1, 1)]));

        let m = MinorSpec::new(vec![1, 2], vec![1, 2]).unwrap();
        assert_eq!(
            antidiag_monomial(&m, 3).unwrap(),
            mono(3, &[(1, 2), (2, 1)])
        );

        let m = MinorSpec::new(vec![1, 2, 3], vec![1, 3, 4]).unwrap();
        assert_eq!(
            antidiag_monomial(&m, 4).unwrap(),
            mono(4, &[(1, 4), (2, 3), (3, 1)])
        );
    }

    #[test]
    fn initial_ideal_examples() {
        assert!(initial_ideal(&Permutation::identity(3)).unwrap().is_zero());
        assert_eq!(
            initial_ideal(&perm("21")).unwrap(),
            ideal(2, &[&[(1, 1)]])
        );
        // the 2x2 antidiagonal z12*z21 is absorbed by z12
        assert_eq!(
            initial_ideal(&perm("321")).unwrap(),
            ideal(3, &[&[(1, 1)], &[(1, 2)], &[(2, 1)]])
        );
    }

    #[test]
    fn pipe_dream_prime_examples() {
        let empty = PipeDream::new(Diagram::empty(3)).unwrap();
        assert!(pipe_dream_prime(&empty).unwrap().is_zero());

        let d = PipeDream::new(Diagram::new(3, [(1, 1), (1, 2), (2, 1)]).unwrap()).unwrap();
        assert_eq!(
            pipe_dream_prime(&d).unwrap(),
            ideal(3, &[&[(1, 1)], &[(1, 2)], &[(2, 1)]])
        );
    }

    #[test]
    fn degeneration_examples() {
        let r = verify_degeneration(&perm("21")).unwrap();
        assert!(r.equal);
        assert_eq!(r.initial_generators, vec!["z11"]);
        assert_eq!(r.pipe_dream_count, 1);

        let r = verify_degeneration(&perm("321")).unwrap();
        assert!(r.equal);
        assert_eq!(r.initial_generators, vec!["z11", "z12", "z21"]);

        let r = verify_degeneration(&Permutation::identity(3)).unwrap();
        assert!(r.equal);
        assert!(r.initial_generators.is_empty());
        assert_eq!(r.pipe_dream_count, 1);
    }

    #[test]
    fn degeneration_all_s3_s4() {
        for n in [3, 4] {
            for report in verify_degeneration_all(n, DEGENERATION_BOUND).unwrap() {
                assert!(report.equal, "degeneration fails at w = {}", report.w);
            }
        }
    }

    #[test]
    fn initial_contained_in_every_prime() {
        for w in Permutation::all(4) {
            let initial = initial_ideal(&w).unwrap();
            for dream in enumerate_pipe_dreams(&w).unwrap() {
                let prime = pipe_dream_prime(&dream).unwrap();
                assert!(
                    initial.contained_in(&prime),
                    "initial ideal not inside prime of {dream:?}"
                );
            }
        }
    }

    #[test]
    fn essential_set_reduction_preserves_initial_ideal() {
        for w in Permutation::all(4) {
            let full = fulton_generators_with(&w, false).unwrap();
            let ess = fulton_generators_with(&w, true).unwrap();
            assert!(ess.len() <= full.len());
            let to_ideal = |minors: &[MinorSpec]| {
                MonomialIdeal::from_generators(
                    4,
                    minors
                        .iter()
                        .map(|m| antidiag_monomial(m, 4).unwrap()),
                )
            };
            assert!(
                ideal_equals(&to_ideal(&full), &to_ideal(&ess)),
                "essential-set reduction changed in(I_w) at w = {w}"
            );
        }
    }

    #[test]
    fn vanishing_examples() {
        assert!(vanishing_pluckers(&Permutation::identity(3)).is_empty());

        let v = vanishing_pluckers(&perm("21"));
        assert_eq!(v, vec![ColumnSet::new(vec![1]).unwrap()]);

        let v = vanishing_pluckers(&perm("321"));
        let expected: BTreeSet<ColumnSet> = [
            ColumnSet::new(vec![1]).unwrap(),
            ColumnSet::new(vec![2]).unwrap(),
            ColumnSet::new(vec![1, 2]).unwrap(),
            ColumnSet::new(vec![1, 3]).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(v.into_iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn vanishing_monotone_along_length_chains() {
        // the count of non-vanishing coordinates of each size weakly
        // decreases when the length goes up by a simple reflection
        for n in 2..=4usize {
            let total_by_size =
                |w: &Permutation, k: usize| {
                    let vanishing = vanishing_pluckers(w);
                    ColumnSet::all_nonempty(n)
                        .into_iter()
                        .filter(|c| c.len() == k && !vanishing.contains(c))
                        .count()
                };
            for w in Permutation::all(n) {
                for i in 1..n {
                    let ws = w.right_simple(i);
                    if ws.length() > w.length() {
                        for k in 1..=n {
                            assert!(
                                total_by_size(&ws, k) <= total_by_size(&w, k),
                                "monotonicity fails at w = {w}, i = {i}, k = {k}"
                            );
                        }
                    }
                }
            }
        }
    }

    mod random_intersections {
        use super::*;
        use proptest::prelude::*;

        fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
            let cells = n * n;
            proptest::collection::vec(1u64..(1 << cells), 1..5).prop_map(move |masks| {
                MonomialIdeal::from_generators(
                    n,
                    masks.into_iter().map(|mask| SqfMonomial { n, mask }),
                )
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn intersection_matches_oracle_n3((a, b, probe) in (arb_ideal(3), arb_ideal(3), 0u64..(1 << 9))) {
                let meet = intersect(&a, &b);
                let m = SqfMonomial { n: 3, mask: probe };
                prop_assert_eq!(meet.contains(&m), a.contains(&m) && b.contains(&m));
            }
        }

        proptest! {
            // 1000 random pairs at n = 5, probing within the union of
            // generator supports
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn intersection_matches_oracle_n5((a, b, bits) in (arb_ideal(5), arb_ideal(5), proptest::collection::vec(any::<bool>(), 25))) {
                let meet = intersect(&a, &b);
                let support: u64 = a
                    .generators()
                    .iter()
                    .chain(b.generators())
                    .fold(0, |acc, g| acc | g.mask);
                let mut mask = 0u64;
                for (bit, &keep) in bits.iter().enumerate() {
                    if support >> bit & 1 == 1 && keep {
                        mask |= 1 << bit;
                    }
                }
                let m = SqfMonomial { n: 5, mask };
                prop_assert_eq!(meet.contains(&m), a.contains(&m) && b.contains(&m));
            }
        }
    }
}
