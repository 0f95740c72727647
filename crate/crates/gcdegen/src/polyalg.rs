//! Sparse integer multivariate polynomials and the representation-theoretic
//! oracles built on them: divided differences, Schubert polynomials (both
//! the operator recursion and the pipe-dream sum), Demazure characters, the
//! Weyl dimension formula, and Schur polynomials via semistandard tableaux.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grid::{enumerate_pipe_dreams, Permutation};

/// Sparse polynomial in `x_1..x_n` with arbitrary-precision integer
/// coefficients. Terms are keyed by exponent tuple; zero coefficients are
/// never stored, and the `BTreeMap` ordering doubles as the canonical
/// serialization order.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPolynomial {
    pub fn zero(nvars: usize) -> Self {
        MultiPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars);
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, BigInt::one());
        p
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: BigInt) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// Applies the transposition of variables `x_i` and `x_j` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, j - 1);
            out.add_term(e, c.clone());
        }
        out
    }

    /// The divided difference `(f - s_i f) / (x_i - x_{i+1})`, 1-based
    /// `i < nvars`. The quotient is computed term by term via the telescope
    /// `(x^a y^b - x^b y^a) / (x - y) = sign * sum x^p y^q`, so the division
    /// is exact by construction.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.nvars, "divided difference index {i}");
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let a = e[i - 1];
            let b = e[i];
            if a == b {
                continue;
            }
            let (hi, lo, coeff) = if a > b {
                (a, b, c.clone())
            } else {
                (b, a, -c.clone())
            };
            // exponents (hi-1, lo), (hi-2, lo+1), ..., (lo, hi-1) at x_i, x_{i+1}
            for t in 0..hi - lo {
                let mut exps = e.clone();
                exps[i - 1] = hi - 1 - t;
                exps[i] = lo + t;
                out.add_term(exps, coeff.clone());
            }
        }
        out
    }

    /// The isobaric divided difference (Demazure operator)
    /// `pi_i f = d_i(x_i * f)`.
    pub fn demazure_pi(&self, i: usize) -> Self {
        self.mul(&Self::var(self.nvars, i)).divided_difference(i)
    }

    /// Evaluation at `x_1 = ... = x_n = 1`, i.e. the sum of coefficients.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True iff `f` is invariant under every adjacent variable swap.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// Term list `[{"exponents": [..], "coeff": "<decimal>"}, ..]` sorted by
    /// exponent tuple.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({ "exponents": e, "coeff": c.to_string() }))
            .collect();
        Value::Array(terms)
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let mut factors: Vec<String> = Vec::new();
            for (idx, &exp) in e.iter().enumerate() {
                match exp {
                    0 => {}
                    1 => factors.push(format!("x{}", idx + 1)),
                    _ => factors.push(format!("x{}^{}", idx + 1, exp)),
                }
            }
            let mono = factors.join("*");
            if first {
                first = false;
                if mono.is_empty() {
                    write!(f, "{c}")?;
                } else if c.is_one() {
                    write!(f, "{mono}")?;
                } else if (-c).is_one() {
                    write!(f, "-{mono}")?;
                } else {
                    write!(f, "{c}*{mono}")?;
                }
            } else {
                let (sign, abs) = if c < &BigInt::zero() {
                    ("-", -c)
                } else {
                    ("+", c.clone())
                };
                if mono.is_empty() {
                    write!(f, " {sign} {abs}")?;
                } else if abs.is_one() {
                    write!(f, " {sign} {mono}")?;
                } else {
                    write!(f, " {sign} {abs}*{mono}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A weakly decreasing sequence of `n` nonnegative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight {
    parts: Vec<i64>,
}

impl HighestWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput {
                what: "highest weight",
                detail: "needs at least one part".into(),
            });
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidInput {
                what: "highest weight",
                detail: format!("negative part in {parts:?}"),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput {
                what: "highest weight",
                detail: format!("{parts:?} is not weakly decreasing"),
            });
        }
        Ok(HighestWeight { parts })
    }

    /// The staircase weight `(n-1, n-2, ..., 1, 0)`.
    pub fn staircase(n: usize) -> Self {
        HighestWeight {
            parts: (0..n as i64).rev().collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        HighestWeight {
            parts: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> i64 {
        self.parts[i - 1]
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Consecutive differences `a_k = lambda_k - lambda_{k+1}` with
    /// `lambda_{n+1} = 0`, so `a_n = lambda_n`.
    pub fn gaps(&self) -> Vec<i64> {
        let n = self.n();
        (0..n)
            .map(|k| self.parts[k] - if k + 1 < n { self.parts[k + 1] } else { 0 })
            .collect()
    }

    /// The monomial `x^lambda`.
    pub fn monomial(&self) -> MultiPolynomial {
        let exps: Vec<u32> = self
            .parts
            .iter()
            .map(|&p| u32::try_from(p).expect("desk-scale weight"))
            .collect();
        MultiPolynomial::monomial(self.n(), exps, BigInt::one())
    }

    /// All weakly decreasing weights with `n` parts in `0..=max_part`,
    /// lexicographically by part vector.
    pub fn all_bounded(n: usize, max_part: i64) -> Vec<HighestWeight> {
        let mut out = Vec::new();
        let mut parts = vec![0i64; n];
        fn rec(parts: &mut Vec<i64>, pos: usize, hi: i64, out: &mut Vec<HighestWeight>) {
            if pos == parts.len() {
                out.push(HighestWeight {
                    parts: parts.clone(),
                });
                return;
            }
            for v in 0..=hi {
                parts[pos] = v;
                rec(parts, pos + 1, v, out);
            }
        }
        rec(&mut parts, 0, max_part, &mut out);
        out
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HighestWeight({self})")
    }
}

impl FromStr for HighestWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad weight part {p:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        HighestWeight::new(parts)
    }
}

/// Descent-extraction rule for reduced words; the two rules must produce the
/// same Demazure character, which the tests assert.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordRule {
    LeftmostDescent,
    RightmostDescent,
}

/// A reduced word for `w`: repeatedly strip a descent `i` (by the given
/// rule), recording `i`; reading the record backwards spells `w` as a
/// product of simple transpositions.
pub fn reduced_word(w: &Permutation, rule: WordRule) -> Vec<usize> {
    let mut v = w.clone();
    let mut stripped = Vec::new();
    loop {
        let descents = v.descents();
        let Some(&i) = (match rule {
            WordRule::LeftmostDescent => descents.first(),
            WordRule::RightmostDescent => descents.last(),
        }) else {
            break;
        };
        stripped.push(i);
        v = v.right_simple(i);
    }
    stripped
}

/// Schubert polynomial by the divided-difference recursion:
/// `S_{w0} = prod x_i^(n-i)` and `S_{w s_i} = d_i S_w` at each descent.
pub fn schubert_divided_difference(w: &Permutation) -> MultiPolynomial {
    schubert_dd_with_rule(w, WordRule::LeftmostDescent)
}

/// Same recursion with a configurable ascent choice, used to check that the
/// result does not depend on the reduced word.
pub fn schubert_dd_with_rule(w: &Permutation, rule: WordRule) -> MultiPolynomial {
    let n = w.n();
    let longest = Permutation::longest(n);
    // build the chain w = v_0 < v_1 < ... < w0 by appending ascents, then
    // apply the divided differences back down from S_{w0}
    let mut chain = Vec::new();
    let mut v = w.clone();
    while v != longest {
        let i = ascent_by_rule(&v, rule);
        chain.push(i);
        v = v.right_simple(i);
    }
    let mut poly = {
        let exps: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
        MultiPolynomial::monomial(n, exps, BigInt::one())
    };
    for &i in chain.iter().rev() {
        poly = poly.divided_difference(i);
    }
    poly
}

fn ascent_by_rule(v: &Permutation, rule: WordRule) -> usize {
    let ascents: Vec<usize> = (1..v.n())
        .filter(|&i| v.apply(i) < v.apply(i + 1))
        .collect();
    match rule {
        WordRule::LeftmostDescent => *ascents.first().expect("non-longest element has an ascent"),
        WordRule::RightmostDescent => *ascents.last().expect("non-longest element has an ascent"),
    }
}

/// Schubert polynomial as the pipe-dream sum: one monomial `prod x_i` per
/// crossing row, summed over the reduced pipe dreams of `w`.
pub fn schubert_pipedreams(w: &Permutation) -> Result<MultiPolynomial> {
    let n = w.n();
    let mut out = MultiPolynomial::zero(n);
    for dream in enumerate_pipe_dreams(w)? {
        let mut exps = vec![0u32; n];
        for &(i, _) in dream.cells() {
            exps[i - 1] += 1;
        }
        out.add_term(exps, BigInt::one());
    }
    Ok(out)
}

/// Demazure character `pi_{i1} ... pi_{il} (x^lambda)` over a reduced word
/// for `w`.
pub fn demazure_character(w: &Permutation, lambda: &HighestWeight) -> Result<MultiPolynomial> {
    demazure_character_with_rule(w, lambda, WordRule::LeftmostDescent)
}

pub fn demazure_character_with_rule(
    w: &Permutation,
    lambda: &HighestWeight,
    rule: WordRule,
) -> Result<MultiPolynomial> {
    if w.n() != lambda.n() {
        return Err(Error::ShapeMismatch(format!(
            "permutation in S_{} vs weight of length {}",
            w.n(),
            lambda.n()
        )));
    }
    // stripping descents d_1, d_2, ... turns w into the identity, so
    // w = s_{d_l} ... s_{d_1} and the innermost operator is pi_{d_1}
    let mut char_poly = lambda.monomial();
    for &i in &reduced_word(w, rule) {
        char_poly = char_poly.demazure_pi(i);
    }
    Ok(char_poly)
}

/// Dimension of the Demazure module: the character evaluated at all ones.
pub fn demazure_dim(w: &Permutation, lambda: &HighestWeight) -> Result<BigInt> {
    Ok(demazure_character(w, lambda)?.eval_all_ones())
}

/// Weyl dimension formula
/// `prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)`, exact.
pub fn weyl_dim(lambda: &HighestWeight) -> BigInt {
    let n = lambda.n();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=n {
        for j in i + 1..=n {
            num *= BigInt::from(lambda.part(i) - lambda.part(j) + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "Weyl dimension must divide exactly");
    q
}

/// Schur polynomial as the content generating function of semistandard
/// Young tableaux of shape `lambda` with entries in `1..=n`.
pub fn schur_ssyt(lambda: &HighestWeight) -> MultiPolynomial {
    let n = lambda.n();
    let shape: Vec<usize> = lambda
        .parts()
        .iter()
        .take_while(|&&p| p > 0)
        .map(|&p| p as usize)
        .collect();
    let mut out = MultiPolynomial::zero(n);
    if shape.is_empty() {
        return MultiPolynomial::one(n);
    }
    if shape.len() > n {
        return out;
    }

    // fill cells row-major; rows weakly increase, columns strictly increase
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u32; n];
    fill_ssyt(&mut rows, &shape, 0, 0, n, &mut content, &mut out);
    out
}

fn fill_ssyt(
    rows: &mut Vec<Vec<usize>>,
    shape: &[usize],
    r: usize,
    c: usize,
    n: usize,
    content: &mut Vec<u32>,
    out: &mut MultiPolynomial,
) {
    if r == shape.len() {
        out.add_term(content.clone(), BigInt::one());
        return;
    }
    let (next_r, next_c) = if c + 1 < shape[r] {
        (r, c + 1)
    } else {
        (r + 1, 0)
    };
    let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
    let min_above = if r > 0 && c < shape[r - 1] {
        rows[r - 1][c] + 1
    } else {
        1
    };
    for v in min_left.max(min_above)..=n {
        rows[r][c] = v;
        content[v - 1] += 1;
        fill_ssyt(rows, shape, next_r, next_c, n, content, out);
        content[v - 1] -= 1;
    }
}
