//! Permutations, diagrams, pipe tracing, reducedness, and exhaustive
//! pipe-dream enumeration.
//!
//! A diagram is a set of grid cells read as pipe crossings. Pipe `i` enters
//! the grid at the west edge of row `i` and exits on the north edge; cells
//! in the diagram let both strands pass straight through (west-east and
//! south-north), cells outside it are double elbows (west turns north,
//! south turns east). The diagram is reduced when no two pipes cross twice.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Default cap on `n` for exhaustive pipe-dream enumeration.
pub const PIPE_DREAM_ENUM_BOUND: usize = 7;

/// A permutation of `{1..n}` in one-line notation: `word[i-1] = w(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "word {word:?} is not a bijection of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element `w0`, sending `i` to `n+1-i`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n());
        Permutation {
            word: (1..=self.n()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    /// Right multiplication by the simple transposition `s_i`, swapping the
    /// entries in positions `i` and `i+1` (1-based, `i < n`).
    pub fn right_simple(&self, i: usize) -> Self {
        debug_assert!(i >= 1 && i < self.n());
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// Inversion count `#{(i,j) : i < j, w(i) > w(j)}`.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Positions `i` with `w(i) > w(i+1)` (1-based).
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    /// The rank function `w_qp = #{i <= q : w(i) <= p}`.
    pub fn rank_fn(&self, q: usize, p: usize) -> Result<usize> {
        let n = self.n();
        if q == 0 || q > n || p == 0 || p > n {
            return Err(Error::OutOfRange(format!(
                "(q, p) = ({q}, {p}) not in 1..={n}"
            )));
        }
        Ok((1..=q).filter(|&i| self.apply(i) <= p).count())
    }

    /// All of `S_n` in lexicographic order of one-line words.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            // next_permutation in lex order
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| word[i] < word[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad permutation entry {p:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_word(word)
    }
}

/// A finite set of crossing cells `(i, j)` in the `n x n` grid,
/// 1-based, row `i` from the top and column `j` from the left.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    n: usize,
    cells: BTreeSet<(usize, usize)>,
}

impl Diagram {
    pub fn new(n: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput {
                what: "diagram",
                detail: "n must be positive".into(),
            });
        }
        let cells: BTreeSet<(usize, usize)> = cells.into_iter().collect();
        for &(i, j) in &cells {
            if i == 0 || i > n || j == 0 || j > n {
                return Err(Error::OutOfRange(format!(
                    "cell ({i}, {j}) outside the {n} x {n} grid"
                )));
            }
        }
        Ok(Diagram { n, cells })
    }

    pub fn empty(n: usize) -> Self {
        Diagram {
            n,
            cells: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells sorted lexicographically, for deterministic ordering.
    pub fn sorted_cells(&self) -> Vec<(usize, usize)> {
        self.cells.iter().copied().collect()
    }

    /// Traces the pipes and returns the permutation sending each row to its
    /// exit column.
    ///
    /// Pipes that leave the east edge (possible only for crossings at or
    /// below the antidiagonal) keep zigzagging through virtual elbows past
    /// column `n`; the exit columns of all `n` pipes are then renumbered
    /// order-isomorphically to `1..n`. Diagrams inside the staircase
    /// `i + j <= n` never trigger this.
    pub fn trace_pipes(&self) -> Permutation {
        self.trace_detail().permutation
    }

    fn trace_detail(&self) -> Trace {
        let n = self.n;
        let mut horizontal: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut vertical: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut exits = vec![0usize; n];

        for pipe in 1..=n {
            // (row, col), entering the cell from the west or from the south
            let mut row = pipe;
            let mut col = 1usize;
            let mut from_west = true;
            loop {
                let crossing = col <= n && self.cells.contains(&(row, col));
                if crossing {
                    if from_west {
                        horizontal.insert((row, col), pipe);
                    } else {
                        vertical.insert((row, col), pipe);
                    }
                }
                // crossings pass straight through, elbows turn
                let exit_north = if from_west { !crossing } else { crossing };
                if exit_north {
                    if row == 1 {
                        exits[pipe - 1] = col;
                        break;
                    }
                    row -= 1;
                    from_west = false;
                } else {
                    col += 1;
                    from_west = true;
                }
            }
        }

        // order-isomorphic renumbering of the exit columns
        let mut sorted = exits.clone();
        sorted.sort_unstable();
        let word = exits
            .iter()
            .map(|c| sorted.binary_search(c).unwrap() + 1)
            .collect();

        Trace {
            permutation: Permutation { word },
            horizontal,
            vertical,
        }
    }

    /// True iff every cell is a genuine crossing of two pipes and no two
    /// pipes cross twice. Equivalent to `|cells| = length(trace_pipes())`.
    pub fn is_reduced(&self) -> bool {
        self.reduced_from_trace(&self.trace_detail())
    }

    fn reduced_from_trace(&self, trace: &Trace) -> bool {
        let mut met = BTreeSet::new();
        for cell in &self.cells {
            let (Some(&h), Some(&v)) = (trace.horizontal.get(cell), trace.vertical.get(cell))
            else {
                return false;
            };
            if !met.insert((h.min(v), h.max(v))) {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self.sorted_cells().iter().map(|&(i, j)| json!([i, j])).collect();
        json!({ "n": self.n, "cells": cells })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("diagram JSON must be {\"n\": .., \"cells\": [[i, j], ..]}".into());
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let cells = v
            .get("cells")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|pair| {
                let pair = pair.as_array().ok_or_else(bad)?;
                if pair.len() != 2 {
                    return Err(bad());
                }
                let i = pair[0].as_u64().ok_or_else(bad)? as usize;
                let j = pair[1].as_u64().ok_or_else(bad)? as usize;
                Ok((i, j))
            })
            .collect::<Result<Vec<_>>>()?;
        Diagram::new(n, cells)
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram(n={}, {:?})", self.n, self.cells)
    }
}

struct Trace {
    permutation: Permutation,
    horizontal: BTreeMap<(usize, usize), usize>,
    vertical: BTreeMap<(usize, usize), usize>,
}

/// A reduced diagram: no two pipes cross twice, so the crossing count
/// equals the length of the traced permutation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PipeDream {
    diagram: Diagram,
}

impl PipeDream {
    pub fn new(diagram: Diagram) -> Result<Self> {
        if !diagram.is_reduced() {
            return Err(Error::InvalidInput {
                what: "pipe dream",
                detail: format!("{:?} is not reduced", diagram.sorted_cells()),
            });
        }
        Ok(PipeDream { diagram })
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        self.diagram.cells()
    }

    pub fn len(&self) -> usize {
        self.diagram.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagram.is_empty()
    }

    pub fn permutation(&self) -> Permutation {
        self.diagram.trace_pipes()
    }
}

/// The staircase cells `{(i, j) : i + j <= n}` in lexicographic order.
/// Every reduced pipe dream for `w` in `S_n` lives inside it.
pub fn staircase_cells(n: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 1..n {
        for j in 1..=n - i {
            cells.push((i, j));
        }
    }
    cells
}

/// All reduced pipe dreams tracing to `w`, by brute force over staircase
/// subsets of size `length(w)`, in lexicographic order of sorted cell lists.
pub fn enumerate_pipe_dreams(w: &Permutation) -> Result<Vec<PipeDream>> {
    enumerate_pipe_dreams_bounded(w, PIPE_DREAM_ENUM_BOUND)
}

/// Same as [`enumerate_pipe_dreams`] with an explicit bound on `n`.
pub fn enumerate_pipe_dreams_bounded(w: &Permutation, bound: usize) -> Result<Vec<PipeDream>> {
    let n = w.n();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "pipe-dream enumeration",
            limit: bound,
            requested: n,
        });
    }
    let cells = staircase_cells(n);
    let k = w.length();
    let mut found = Vec::new();
    for_each_combination(cells.len(), k, |choice| {
        let subset: BTreeSet<(usize, usize)> = choice.iter().map(|&i| cells[i]).collect();
        let diagram = Diagram {
            n,
            cells: subset,
        };
        let trace = diagram.trace_detail();
        if trace.permutation == *w && diagram.reduced_from_trace(&trace) {
            found.push(PipeDream { diagram });
        }
    });
    // combinations over lex-sorted cells already arrive in lexicographic
    // order of sorted cell lists
    Ok(found)
}

/// Calls `f` on every size-`k` index combination of `0..m` in
/// lexicographic order.
pub(crate) fn for_each_combination(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        if k == 0 {
            return;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
