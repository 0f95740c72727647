//! The weight matrix driving the sagbi degeneration of Pluecker
//! coordinates, together with its combinatorial shadows: (anti)diagonal
//! exponent vectors, Leibniz expansions with t-valuations, the distributive
//! lattice on column sets with its degenerate binomial relations, the
//! weight sets `Upsilon_lambda`, and the conjugation exponents of the
//! deformed Borel action.
//!
//! Weights are `3^(n-i-j)` above the antidiagonal and zero elsewhere; they
//! are kept in arbitrary precision throughout since they outgrow `u64`
//! around `n = 40`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::int_rank;
use crate::polyalg::HighestWeight;

/// Default cap on minor size for Leibniz expansion (`k!` terms).
pub const MINOR_EXPANSION_BOUND: usize = 8;

/// Default cap on the number of index multisets enumerated by
/// [`upsilon_bounded`].
pub const UPSILON_LIMIT: u64 = 10_000_000;

/// The weight matrix with `omega[i][j] = 3^(n-i-j)` for `i + j <= n` and
/// zero below the antidiagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl WeightMatrix {
    pub fn new(n: usize) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                if i + j <= n {
                    entries.push(BigInt::from(3).pow((n - i - j) as u32));
                } else {
                    entries.push(BigInt::zero());
                }
            }
        }
        WeightMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `omega_{ij}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Total weight `sum e_{ij} * omega_{ij}` of an exponent vector.
    pub fn weight_of(&self, e: &ExponentVector) -> BigInt {
        assert_eq!(self.n, e.n);
        let mut total = BigInt::zero();
        for (i, j, mult) in e.support() {
            total += self.entry(i, j) * BigInt::from(mult);
        }
        total
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }
}

/// Shorthand for [`WeightMatrix::new`].
pub fn omega(n: usize) -> WeightMatrix {
    WeightMatrix::new(n)
}

/// A nonnegative integer vector over the `n x n` grid of matrix entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExponentVector {
    n: usize,
    entries: Vec<u32>,
}

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_support(n: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut e = Self::zero(n);
        for (i, j) in cells {
            e.bump(i, j, 1);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn bump(&mut self, i: usize, j: usize, by: u32) {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.entries[(i - 1) * self.n + (j - 1)] += by;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        ExponentVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Nonzero cells `(i, j, multiplicity)` in row-major order.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.n;
        self.entries.iter().enumerate().filter_map(move |(idx, &m)| {
            (m > 0).then_some((idx / n + 1, idx % n + 1, m))
        })
    }

    /// True iff all mass sits on the triangle `i + j <= n + 1`.
    pub fn is_triangular(&self) -> bool {
        self.support().all(|(i, j, _)| i + j <= self.n + 1)
    }

    /// Sparse JSON `{"n": .., "entries": [[i, j, e], ..]}` sorted
    /// lexicographically.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self.support().map(|(i, j, m)| json!([i, j, m])).collect();
        json!({ "n": self.n, "entries": entries })
    }
}

/// A nonempty subset of `{1..n}`, stored sorted ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColumnSet {
    elems: Vec<usize>,
}

impl ColumnSet {
    pub fn new(mut elems: Vec<usize>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::InvalidInput {
                what: "column set",
                detail: "must be nonempty".into(),
            });
        }
        elems.sort_unstable();
        if elems[0] == 0 || elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput {
                what: "column set",
                detail: format!("{elems:?} must be distinct positive integers"),
            });
        }
        Ok(ColumnSet { elems })
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max(&self) -> usize {
        *self.elems.last().unwrap()
    }

    /// The column reflection `iota(J) = { n + 1 - j : j in J }`.
    pub fn reflect(&self, n: usize) -> Self {
        let elems: Vec<usize> = self.elems.iter().rev().map(|&x| n + 1 - x).collect();
        ColumnSet { elems }
    }

    /// All nonempty subsets of `{1..n}` in ascending bitmask order.
    pub fn all_nonempty(n: usize) -> Vec<ColumnSet> {
        (1u32..1 << n)
            .map(|mask| ColumnSet {
                elems: (1..=n).filter(|&x| mask >> (x - 1) & 1 == 1).collect(),
            })
            .collect()
    }
}

impl fmt::Display for ColumnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.elems.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ColumnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Row and column sets of a square minor, both sorted ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        rows.sort_unstable();
        cols.sort_unstable();
        let distinct =
            |v: &[usize]| !v.is_empty() && v[0] >= 1 && v.windows(2).all(|w| w[0] < w[1]);
        if rows.len() != cols.len() || !distinct(&rows) || !distinct(&cols) {
            return Err(Error::InvalidInput {
                what: "minor spec",
                detail: format!("rows {rows:?} and cols {cols:?}"),
            });
        }
        Ok(MinorSpec { rows, cols })
    }

    /// The Pluecker minor for `J`: top-justified rows `1..=|J|`, columns `J`.
    pub fn plucker(cols: &ColumnSet) -> Self {
        MinorSpec {
            rows: (1..=cols.len()).collect(),
            cols: cols.elems().to_vec(),
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

/// Exponent vector of the antidiagonal monomial of the Pluecker coordinate
/// `p_J`: a one at `(s, j_{k+1-s})` for each `s`.
pub fn alpha(cols: &ColumnSet, n: usize) -> ExponentVector {
    let k = cols.len();
    ExponentVector::from_support(
        n,
        (1..=k).map(|s| (s, cols.elems()[k - s])),
    )
}

/// Diagonal analogue of [`alpha`]: a one at `(s, j_s)`.
pub fn delta(cols: &ColumnSet, n: usize) -> ExponentVector {
    ExponentVector::from_support(
        n,
        cols.elems().iter().enumerate().map(|(s, &j)| (s + 1, j)),
    )
}

/// Weight of an exponent vector under `omega`.
pub fn omega_weight(e: &ExponentVector) -> BigInt {
    WeightMatrix::new(e.n()).weight_of(e)
}

/// `omega_J`: the weight of the antidiagonal exponent vector of `p_J`.
pub fn omega_j(cols: &ColumnSet, n: usize) -> BigInt {
    omega_weight(&alpha(cols, n))
}

/// Leibniz expansion of a minor: `k!` terms `(exponent vector, sign)`.
pub fn minor_terms(spec: &MinorSpec) -> Result<Vec<(ExponentVector, i8)>> {
    minor_terms_in(spec, max_index(spec))
}

/// Leibniz expansion with the ambient grid size given explicitly.
pub fn minor_terms_in(spec: &MinorSpec, n: usize) -> Result<Vec<(ExponentVector, i8)>> {
    let k = spec.size();
    if k > MINOR_EXPANSION_BOUND {
        return Err(Error::BoundExceeded {
            what: "minor expansion",
            limit: MINOR_EXPANSION_BOUND,
            requested: k,
        });
    }
    let mut out = Vec::with_capacity((1..=k).product());
    for sigma in crate::grid::Permutation::all(k) {
        let sign = if sigma.length() % 2 == 0 { 1 } else { -1 };
        let e = ExponentVector::from_support(
            n,
            (1..=k).map(|s| (spec.rows()[s - 1], spec.cols()[sigma.apply(s) - 1])),
        );
        out.push((e, sign));
    }
    out.sort();
    Ok(out)
}

fn max_index(spec: &MinorSpec) -> usize {
    spec.rows()
        .iter()
        .chain(spec.cols())
        .copied()
        .max()
        .unwrap()
}

/// One Leibniz term of the `t`-rescaled Pluecker coordinate `q_J`:
/// its exponent vector, Leibniz sign, and `t`-valuation
/// `weight(term) - omega_J`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValuedTerm {
    pub exponents: ExponentVector,
    pub sign: i8,
    pub valuation: BigInt,
}

/// Leibniz terms of the Pluecker minor `Delta_J` with their `t`-valuations
/// relative to the antidiagonal weight `omega_J`.
pub fn t_valuations(cols: &ColumnSet, n: usize) -> Result<Vec<ValuedTerm>> {
    let spec = MinorSpec::plucker(cols);
    let omega = WeightMatrix::new(n);
    let base = omega.weight_of(&alpha(cols, n));
    Ok(minor_terms_in(&spec, n)?
        .into_iter()
        .map(|(exponents, sign)| {
            let valuation = omega.weight_of(&exponents) - &base;
            ValuedTerm {
                exponents,
                sign,
                valuation,
            }
        })
        .collect())
}

/// Whether the antidiagonal term of the minor is the strict unique
/// `omega`-minimizer among all Leibniz terms.
///
/// Errors with [`Error::LemmaHypothesisNotMet`] unless every antidiagonal
/// cell of the minor lies on or above the main antidiagonal of the grid.
pub fn antidiagonal_is_min(spec: &MinorSpec, n: usize) -> Result<bool> {
    let k = spec.size();
    let anti_cells: Vec<(usize, usize)> = (0..k)
        .map(|s| (spec.rows()[s], spec.cols()[k - 1 - s]))
        .collect();
    if let Some(&(i, j)) = anti_cells.iter().find(|&&(i, j)| i + j > n + 1) {
        return Err(Error::LemmaHypothesisNotMet(format!(
            "antidiagonal cell ({i}, {j}) lies below the main antidiagonal for n = {n}"
        )));
    }
    let omega = WeightMatrix::new(n);
    let anti = ExponentVector::from_support(n, anti_cells);
    let anti_weight = omega.weight_of(&anti);
    for (e, _) in minor_terms_in(spec, n)? {
        if e != anti && omega.weight_of(&e) <= anti_weight {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The GL96 partial order: `I >= J` iff `|I| <= |J|` and `i_s >= j_s`
/// for all `s <= |I|`.
pub fn lattice_geq(a: &ColumnSet, b: &ColumnSet) -> bool {
    a.len() <= b.len()
        && a.elems()
            .iter()
            .zip(b.elems())
            .all(|(x, y)| x >= y)
}

/// `a <= b` in the GL96 order.
pub fn lattice_leq(a: &ColumnSet, b: &ColumnSet) -> bool {
    lattice_geq(b, a)
}

/// Meet (greatest lower bound): entrywise minima padded by the tail of the
/// longer set.
pub fn lattice_meet(a: &ColumnSet, b: &ColumnSet) -> ColumnSet {
    if a.len() > b.len() {
        return lattice_meet(b, a);
    }
    let k = a.len();
    let mut elems: Vec<usize> = a
        .elems()
        .iter()
        .zip(b.elems())
        .map(|(&x, &y)| x.min(y))
        .collect();
    elems.extend_from_slice(&b.elems()[k..]);
    ColumnSet { elems }
}

/// Join (least upper bound): entrywise maxima over the shorter length.
pub fn lattice_join(a: &ColumnSet, b: &ColumnSet) -> ColumnSet {
    if a.len() > b.len() {
        return lattice_join(b, a);
    }
    let elems: Vec<usize> = a
        .elems()
        .iter()
        .zip(b.elems())
        .map(|(&x, &y)| x.max(y))
        .collect();
    ColumnSet { elems }
}

/// The degenerate Pluecker relation on diagonal exponents:
/// `delta_I + delta_J = delta_{I meet J} + delta_{I join J}`.
pub fn binomial_relation_holds(a: &ColumnSet, b: &ColumnSet, n: usize) -> bool {
    let lhs = delta(a, n).add(&delta(b, n));
    let rhs = delta(&lattice_meet(a, b), n).add(&delta(&lattice_join(a, b), n));
    lhs == rhs
}

/// The antidiagonal variant: the same relation on `alpha` exponents, with
/// meet and join taken in the column-reflected lattice.
pub fn binomial_relation_holds_antidiagonal(a: &ColumnSet, b: &ColumnSet, n: usize) -> bool {
    let ra = a.reflect(n);
    let rb = b.reflect(n);
    let meet = lattice_meet(&ra, &rb).reflect(n);
    let join = lattice_join(&ra, &rb).reflect(n);
    let lhs = alpha(a, n).add(&alpha(b, n));
    let rhs = alpha(&meet, n).add(&alpha(&join, n));
    lhs == rhs
}

/// The weight set `Upsilon_lambda`: all sums of `alpha_I` over multisets of
/// column sets containing exactly `a_k = lambda_k - lambda_{k+1}` sets of
/// each size `k`. Duplicate sums are collapsed.
pub fn upsilon(lambda: &HighestWeight) -> Result<BTreeSet<ExponentVector>> {
    upsilon_bounded(lambda, UPSILON_LIMIT)
}

pub fn upsilon_bounded(
    lambda: &HighestWeight,
    limit: u64,
) -> Result<BTreeSet<ExponentVector>> {
    let n = lambda.n();
    let gaps = lambda.gaps();
    let mut sums: BTreeSet<ExponentVector> = BTreeSet::new();
    sums.insert(ExponentVector::zero(n));
    let mut budget = limit;

    for k in 1..=n {
        let count = gaps[k - 1];
        if count == 0 {
            continue;
        }
        // the alpha vectors of all size-k subsets, in a fixed order
        let mut subset_alphas = Vec::new();
        crate::grid::for_each_combination(n, k, |choice| {
            let cols = ColumnSet {
                elems: choice.iter().map(|&i| i + 1).collect(),
            };
            subset_alphas.push(alpha(&cols, n));
        });

        let mut next: BTreeSet<ExponentVector> = BTreeSet::new();
        for base in &sums {
            add_multisets(
                &subset_alphas,
                0,
                count as usize,
                base,
                &mut next,
                &mut budget,
                limit,
            )?;
        }
        sums = next;
    }
    Ok(sums)
}

// Adds to `out` every base + sum over a size-`remaining` multiset of
// `alphas[from..]`, counting each emitted sum against the budget.
#[allow(clippy::too_many_arguments)]
fn add_multisets(
    alphas: &[ExponentVector],
    from: usize,
    remaining: usize,
    acc: &ExponentVector,
    out: &mut BTreeSet<ExponentVector>,
    budget: &mut u64,
    limit: u64,
) -> Result<()> {
    if remaining == 0 {
        if *budget == 0 {
            return Err(Error::EnumerationLimitExceeded { limit });
        }
        *budget -= 1;
        out.insert(acc.clone());
        return Ok(());
    }
    for idx in from..alphas.len() {
        let acc = acc.add(&alphas[idx]);
        add_multisets(alphas, idx, remaining - 1, &acc, out, budget, limit)?;
    }
    Ok(())
}

/// Integer rank of the span of all `alpha_I`; equals `n(n+1)/2`.
pub fn semigroup_rank(n: usize) -> Result<usize> {
    if n > 8 {
        return Err(Error::BoundExceeded {
            what: "semigroup rank",
            limit: 8,
            requested: n,
        });
    }
    let rows: Vec<Vec<BigInt>> = ColumnSet::all_nonempty(n)
        .iter()
        .map(|cols| {
            let e = alpha(cols, n);
            (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .map(|(i, j)| BigInt::from(e.get(i, j)))
                .collect()
        })
        .collect();
    Ok(int_rank(rows))
}

/// The `tau`-exponent acquired by lower-triangular entry `(i, k)` of the
/// `j`-th component under conjugation: `omega_{kj} - omega_{ij}`. Always
/// nonnegative; strictly positive exactly when `i > k` and `k + j <= n`.
pub fn conjugation_t_exponent(i: usize, k: usize, j: usize, n: usize) -> Result<BigInt> {
    if !(1 <= k && k <= i && i <= n) {
        return Err(Error::OutOfRange(format!(
            "(i, k) = ({i}, {k}) is not a lower-triangular position for n = {n}"
        )));
    }
    if !(1 <= j && j <= n) {
        return Err(Error::OutOfRange(format!("column j = {j} not in 1..={n}")));
    }
    let omega = WeightMatrix::new(n);
    Ok(omega.entry(k, j) - omega.entry(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn cs(elems: &[usize]) -> ColumnSet {
        ColumnSet::new(elems.to_vec()).unwrap()
    }

    fn support_of(e: &ExponentVector) -> Vec<(usize, usize)> {
        e.support().map(|(i, j, _)| (i, j)).collect()
    }

    #[test]
    fn omega_examples() {
        let w5 = omega(5);
        let expected: [[i64; 5]; 5] = [
            [27, 9, 3, 1, 0],
            [9, 3, 1, 0, 0],
            [3, 1, 0, 0, 0],
            [1, 0, 0, 0, 0],
            [0, 0, 0, 0, 0],
        ];
        for i in 1..=5 {
            for j in 1..=5 {
                assert_eq!(*w5.entry(i, j), BigInt::from(expected[i - 1][j - 1]));
            }
        }

        let w2 = omega(2);
        assert_eq!(*w2.entry(1, 1), BigInt::one());
        assert_eq!(*w2.entry(1, 2), BigInt::zero());
        assert_eq!(*w2.entry(2, 1), BigInt::zero());
        assert_eq!(*w2.entry(2, 2), BigInt::zero());

        assert_eq!(*omega(3).entry(1, 2), BigInt::one());
    }

    #[test]
    fn alpha_delta_examples() {
        assert_eq!(
            support_of(&alpha(&cs(&[1, 2, 4]), 4)),
            vec![(1, 4), (2, 2), (3, 1)]
        );
        assert_eq!(support_of(&alpha(&cs(&[1, 3]), 4)), vec![(1, 3), (2, 1)]);
        assert_eq!(support_of(&alpha(&cs(&[1]), 4)), vec![(1, 1)]);
        assert_eq!(
            support_of(&delta(&cs(&[1, 2, 4]), 4)),
            vec![(1, 1), (2, 2), (3, 4)]
        );
    }

    #[test]
    fn omega_j_examples() {
        assert_eq!(omega_j(&cs(&[1, 2]), 5), BigInt::from(18));
        for n in 1..=6 {
            assert_eq!(omega_j(&cs(&[n]), n), BigInt::zero());
            let full = ColumnSet::new((1..=n).collect()).unwrap();
            assert_eq!(omega_j(&full, n), BigInt::zero());
        }
    }

    #[test]
    fn minor_terms_examples() {
        let one = MinorSpec::new(vec![1], vec![1]).unwrap();
        let terms = minor_terms(&one).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].1, 1);
        assert_eq!(support_of(&terms[0].0), vec![(1, 1)]);

        let two = MinorSpec::new(vec![1, 2], vec![1, 2]).unwrap();
        let terms = minor_terms(&two).unwrap();
        assert_eq!(terms.len(), 2);
        let diag = terms
            .iter()
            .find(|(e, _)| support_of(e) == vec![(1, 1), (2, 2)])
            .unwrap();
        let anti = terms
            .iter()
            .find(|(e, _)| support_of(e) == vec![(1, 2), (2, 1)])
            .unwrap();
        assert_eq!(diag.1, 1);
        assert_eq!(anti.1, -1);

        let three = MinorSpec::new(vec![1, 2, 3], vec![1, 2, 3]).unwrap();
        let terms = minor_terms(&three).unwrap();
        assert_eq!(terms.len(), 6);
        assert_eq!(terms.iter().map(|(_, s)| *s as i64).sum::<i64>(), 0);
    }

    #[test]
    fn t_valuation_examples() {
        let terms = t_valuations(&cs(&[1, 2]), 2).unwrap();
        let vals: Vec<BigInt> = terms.iter().map(|t| t.valuation.clone()).collect();
        assert!(vals.contains(&BigInt::zero()));
        assert!(vals.contains(&BigInt::one()));

        let terms = t_valuations(&cs(&[5]), 5).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].valuation, BigInt::zero());

        let terms = t_valuations(&cs(&[1, 2]), 5).unwrap();
        let mut vals: Vec<BigInt> = terms.iter().map(|t| t.valuation.clone()).collect();
        vals.sort();
        assert_eq!(vals, vec![BigInt::zero(), BigInt::from(12)]);
    }

    #[test]
    fn antidiagonal_min_examples() {
        for n in 1..=4 {
            for c in 1..=n {
                let spec = MinorSpec::new(vec![1], vec![c]).unwrap();
                assert!(antidiagonal_is_min(&spec, n).unwrap());
            }
        }
        let spec = MinorSpec::new(vec![1, 2], vec![1, 2]).unwrap();
        assert!(antidiagonal_is_min(&spec, 5).unwrap());

        // hypothesis violation is reported distinctly
        let low = MinorSpec::new(vec![2, 3], vec![2, 3]).unwrap();
        assert!(matches!(
            antidiagonal_is_min(&low, 3),
            Err(Error::LemmaHypothesisNotMet(_))
        ));
    }

    #[test]
    fn two_by_two_weight_inequality() {
        // the 2x2 exchange strictly increases weight whenever the top-left
        // cell is on or above the antidiagonal
        let n = 6;
        let w = omega(n);
        for i in 1..=n - 1 {
            for j in 1..=n - i {
                for k in 1..=n - i {
                    for l in 1..=n - j {
                        if i + k > n || j + l > n {
                            continue;
                        }
                        let diag = w.entry(i, j) + w.entry(i + k, j + l);
                        let anti = w.entry(i + k, j) + w.entry(i, j + l);
                        assert!(diag > anti, "(i,j,k,l) = ({i},{j},{k},{l})");
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_examples() {
        let i = cs(&[1, 4]);
        let j = cs(&[2, 3]);
        assert_eq!(lattice_meet(&i, &j), cs(&[1, 3]));
        assert_eq!(lattice_join(&i, &j), cs(&[2, 4]));

        let i = cs(&[2, 5]);
        let j = cs(&[1, 3, 4]);
        assert!(lattice_geq(&i, &j));
        assert_eq!(lattice_meet(&i, &j), j);
        assert_eq!(lattice_join(&i, &j), i);

        let i = cs(&[2, 3]);
        assert_eq!(lattice_meet(&i, &i), i);
        assert_eq!(lattice_join(&i, &i), i);
    }

    #[test]
    fn binomial_examples() {
        assert!(binomial_relation_holds(&cs(&[1, 4]), &cs(&[2, 3, 4]), 4));
        assert!(binomial_relation_holds(&cs(&[2, 5]), &cs(&[1, 3, 4]), 5));
        assert!(binomial_relation_holds(&cs(&[2, 3]), &cs(&[1, 4]), 4));
        assert!(binomial_relation_holds_antidiagonal(
            &cs(&[2, 3]),
            &cs(&[1, 4]),
            4
        ));
    }

    #[test]
    fn binomial_all_pairs_n4() {
        for a in ColumnSet::all_nonempty(4) {
            for b in ColumnSet::all_nonempty(4) {
                assert!(binomial_relation_holds(&a, &b, 4), "diag fails {a} {b}");
                assert!(
                    binomial_relation_holds_antidiagonal(&a, &b, 4),
                    "antidiag fails {a} {b}"
                );
            }
        }
    }

    #[test]
    fn reflection_intertwiner() {
        // alpha(iota(I)) = delta(I) with columns reflected
        for n in 1..=5 {
            for i in ColumnSet::all_nonempty(n) {
                let lhs = alpha(&i.reflect(n), n);
                let d = delta(&i, n);
                let rhs = ExponentVector::from_support(
                    n,
                    d.support().map(|(r, c, _)| (r, n + 1 - c)),
                );
                assert_eq!(lhs, rhs, "intertwiner fails at {i}, n = {n}");
            }
        }
    }

    #[test]
    fn upsilon_examples() {
        let u = upsilon(&"1,0".parse().unwrap()).unwrap();
        let expected: BTreeSet<ExponentVector> = [
            ExponentVector::from_support(2, [(1, 1)]),
            ExponentVector::from_support(2, [(1, 2)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(u, expected);

        let u = upsilon(&"1,1".parse().unwrap()).unwrap();
        assert_eq!(u.len(), 1);
        assert!(u.contains(&alpha(&cs(&[1, 2]), 2)));

        let u = upsilon(&HighestWeight::zero(3)).unwrap();
        assert_eq!(u.len(), 1);
        assert!(u.contains(&ExponentVector::zero(3)));
    }

    #[test]
    fn semigroup_rank_examples() {
        assert_eq!(semigroup_rank(1).unwrap(), 1);
        assert_eq!(semigroup_rank(2).unwrap(), 3);
        assert_eq!(semigroup_rank(3).unwrap(), 6);
        assert!(semigroup_rank(9).is_err());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(
            conjugation_t_exponent(2, 1, 1, 5).unwrap(),
            BigInt::from(18)
        );
        assert_eq!(conjugation_t_exponent(5, 4, 1, 5).unwrap(), BigInt::one());
        for k in 1..=5 {
            for j in 1..=5 {
                assert_eq!(
                    conjugation_t_exponent(k, k, j, 5).unwrap(),
                    BigInt::zero()
                );
            }
        }
        assert!(conjugation_t_exponent(1, 2, 1, 5).is_err());
        assert!(conjugation_t_exponent(2, 1, 6, 5).is_err());
    }

    #[test]
    fn exponent_vector_json() {
        let e = ExponentVector::from_support(3, [(1, 2), (2, 1), (1, 2)]);
        assert_eq!(
            e.to_json(),
            serde_json::json!({ "n": 3, "entries": [[1, 2, 2], [2, 1, 1]] })
        );
    }
}
