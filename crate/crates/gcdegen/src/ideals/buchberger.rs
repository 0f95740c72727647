//! A tiny Buchberger oracle over exact rational coefficients, for `n <= 3`
//! only: checks that the Fulton minors already form a Groebner basis under
//! an antidiagonal term order realized as a weight order built from the
//! degeneration weights (ties broken by an antidiagonal lexicographic
//! order).
//!
//! Smaller weight means larger monomial, so within each degree the leading
//! term of a minor is its antidiagonal term; grading by total degree first
//! keeps the comparison a genuine term order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grid::Permutation;
use crate::ideals::fulton_generators;
use crate::sagbi::{minor_terms_in, MinorSpec, WeightMatrix};

/// Cap on `n` for the Buchberger spot-check.
pub const BUCHBERGER_BOUND: usize = 3;

/// Graded order on grid monomials: total degree, then smaller
/// omega-weight, then antidiagonal lex (rows top-down, columns
/// right-to-left).
pub struct AntidiagonalOrder {
    n: usize,
    omega: WeightMatrix,
    // cell priority: (row ascending, column descending)
    priority: Vec<usize>,
}

impl AntidiagonalOrder {
    pub fn new(n: usize) -> Self {
        let mut priority = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in (0..n).rev() {
                priority.push(i * n + j);
            }
        }
        AntidiagonalOrder {
            n,
            omega: WeightMatrix::new(n),
            priority,
        }
    }

    fn weight(&self, exps: &[u32]) -> BigInt {
        let mut total = BigInt::zero();
        for (idx, &e) in exps.iter().enumerate() {
            if e > 0 {
                total += self.omega.entry(idx / self.n + 1, idx % self.n + 1) * BigInt::from(e);
            }
        }
        total
    }

    /// `Greater` means `a` is the more leading monomial.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let deg_a: u32 = a.iter().sum();
        let deg_b: u32 = b.iter().sum();
        deg_a
            .cmp(&deg_b)
            .then_with(|| self.weight(b).cmp(&self.weight(a)))
            .then_with(|| {
                for &idx in &self.priority {
                    match a[idx].cmp(&b[idx]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            })
    }
}

/// A polynomial in the grid variables over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl RatPoly {
    pub fn zero(n: usize) -> Self {
        RatPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    /// The minor as a polynomial, via its Leibniz expansion.
    pub fn from_minor(spec: &MinorSpec, n: usize) -> Result<Self> {
        let mut poly = RatPoly::zero(n);
        for (e, sign) in minor_terms_in(spec, n)? {
            let mut exps = vec![0u32; n * n];
            for (i, j, m) in e.support() {
                exps[(i - 1) * n + (j - 1)] = m;
            }
            poly.add_term(exps, BigRational::from_integer(BigInt::from(sign)));
        }
        Ok(poly)
    }

    fn leading<'a>(&'a self, ord: &AntidiagonalOrder) -> Option<(&'a Vec<u32>, &'a BigRational)> {
        self.terms
            .iter()
            .max_by(|(ea, _), (eb, _)| ord.cmp(ea, eb))
    }

    /// `self - coeff * x^shift * other`.
    fn sub_scaled_shifted(&mut self, coeff: &BigRational, shift: &[u32], other: &RatPoly) {
        for (e, c) in &other.terms {
            let exps: Vec<u32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(exps, -(coeff * c));
        }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Full reduction of `p` modulo `basis`; returns the remainder.
fn reduce(mut p: RatPoly, basis: &[RatPoly], ord: &AntidiagonalOrder) -> RatPoly {
    let leads: Vec<(Vec<u32>, BigRational)> = basis
        .iter()
        .map(|g| {
            let (e, c) = g.leading(ord).expect("basis elements are nonzero");
            (e.clone(), c.clone())
        })
        .collect();
    let mut remainder = RatPoly::zero(p.n);
    while let Some((lt, lc)) = p.leading(ord).map(|(e, c)| (e.clone(), c.clone())) {
        let mut reduced = false;
        for (g, (ge, gc)) in basis.iter().zip(&leads) {
            if divides(ge, &lt) {
                let shift: Vec<u32> = lt.iter().zip(ge).map(|(a, b)| a - b).collect();
                let factor = &lc / gc;
                p.sub_scaled_shifted(&factor, &shift, g);
                reduced = true;
                break;
            }
        }
        if !reduced {
            remainder.add_term(lt.clone(), lc.clone());
            p.terms.remove(&lt);
        }
    }
    remainder
}

fn s_poly(f: &RatPoly, g: &RatPoly, ord: &AntidiagonalOrder) -> RatPoly {
    let (ef, cf) = f.leading(ord).expect("nonzero");
    let (eg, cg) = g.leading(ord).expect("nonzero");
    let lcm: Vec<u32> = ef.iter().zip(eg).map(|(a, b)| *a.max(b)).collect();
    let shift_f: Vec<u32> = lcm.iter().zip(ef).map(|(a, b)| a - b).collect();
    let shift_g: Vec<u32> = lcm.iter().zip(eg).map(|(a, b)| a - b).collect();
    let mut out = RatPoly::zero(f.n);
    let inv_cf = BigRational::one() / cf;
    let inv_cg = BigRational::one() / cg;
    for (e, c) in &f.terms {
        let exps: Vec<u32> = e.iter().zip(&shift_f).map(|(a, b)| a + b).collect();
        out.add_term(exps, c * &inv_cf);
    }
    for (e, c) in &g.terms {
        let exps: Vec<u32> = e.iter().zip(&shift_g).map(|(a, b)| a + b).collect();
        out.add_term(exps, -(c * &inv_cg));
    }
    out
}

/// Checks that every S-pair of the Fulton minors reduces to zero under the
/// antidiagonal weight order, i.e. that the minors are already a Groebner
/// basis.
pub fn fulton_is_groebner(w: &Permutation) -> Result<bool> {
    let n = w.n();
    if n > BUCHBERGER_BOUND {
        return Err(Error::BoundExceeded {
            what: "Buchberger spot-check",
            limit: BUCHBERGER_BOUND,
            requested: n,
        });
    }
    let ord = AntidiagonalOrder::new(n);
    let basis: Vec<RatPoly> = fulton_generators(w)?
        .iter()
        .map(|m| RatPoly::from_minor(m, n))
        .collect::<Result<_>>()?;
    if basis.is_empty() {
        return Ok(true);
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_poly(&basis[i], &basis[j], &ord);
            if !reduce(s, &basis, &ord).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::antidiag_monomial;

    #[test]
    fn leading_term_of_minor_is_antidiagonal() {
        for n in 1..=3 {
            for w in Permutation::all(n) {
                for spec in fulton_generators(&w).unwrap() {
                    let ord = AntidiagonalOrder::new(n);
                    let poly = RatPoly::from_minor(&spec, n).unwrap();
                    let (lead, _) = poly.leading(&ord).unwrap();
                    let anti = antidiag_monomial(&spec, n).unwrap();
                    let mut expected = vec![0u32; n * n];
                    for (i, j) in anti.support() {
                        expected[(i - 1) * n + (j - 1)] = 1;
                    }
                    assert_eq!(*lead, expected, "minor {spec:?} in S_{n}");
                }
            }
        }
    }

    #[test]
    fn order_prefers_antidiagonal_in_flat_region() {
        // weight ties below the antidiagonal are broken toward the
        // antidiagonal term
        let ord = AntidiagonalOrder::new(3);
        let mut diag = vec![0u32; 9];
        diag[4] = 1; // z22
        diag[8] = 1; // z33
        let mut anti = vec![0u32; 9];
        anti[5] = 1; // z23
        anti[7] = 1; // z32
        assert_eq!(ord.cmp(&anti, &diag), Ordering::Greater);
    }

    #[test]
    fn fulton_minors_are_groebner_up_to_n3() {
        for n in 1..=3 {
            for w in Permutation::all(n) {
                assert!(
                    fulton_is_groebner(&w).unwrap(),
                    "S-pair failed to reduce for w = {w}"
                );
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(fulton_is_groebner(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn reducer_detects_non_groebner_input() {
        // {z11 + z12, z12} is not a Groebner basis: the S-pair leaves the
        // remainder z11
        let n = 2;
        let ord = AntidiagonalOrder::new(n);
        let mut f = RatPoly::zero(n);
        f.add_term(vec![1, 0, 0, 0], BigRational::one());
        f.add_term(vec![0, 1, 0, 0], BigRational::one());
        let mut g = RatPoly::zero(n);
        g.add_term(vec![0, 1, 0, 0], BigRational::one());
        let basis = vec![f.clone(), g.clone()];
        let s = s_poly(&f, &g, &ord);
        let remainder = reduce(s, &basis, &ord);
        assert!(!remainder.is_zero());
    }
}
