//! Tutte polynomials by deletion–contraction and by spanning-forest activities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::edge_set::EdgeId;
use crate::error::Result;
use crate::multigraph::GraphView;

/// Points at which the CLI reports evaluations.
pub const SPECIAL_POINTS: [(i64, i64); 7] =
    [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 0), (0, 2)];

/// `T(x, y) = sum t_ij x^i y^j` with exact nonnegative coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(usize, usize), BigUint>,
}

impl TuttePolynomial {
    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn monomial(i: usize, j: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((i, j), BigUint::one());
        TuttePolynomial { coeffs }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigUint {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms `(i, j, t_ij)` in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, i: usize, j: usize, c: &BigUint) {
        if c.is_zero() {
            return;
        }
        *self.coeffs.entry((i, j)).or_default() += c;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut sum = self.clone();
        for (i, j, c) in other.terms() {
            sum.add_term(i, j, c);
        }
        sum
    }

    pub fn times_x(&self) -> Self {
        self.shifted(1, 0)
    }

    pub fn times_y(&self) -> Self {
        self.shifted(0, 1)
    }

    fn shifted(&self, di: usize, dj: usize) -> Self {
        TuttePolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms().fold(BigInt::zero(), |acc, (i, j, c)| {
            acc + BigInt::from(c.clone()) * x.pow(i as u32) * y.pow(j as u32)
        })
    }
}

/// Exact evaluation at integer arguments.
pub fn evaluate(p: &TuttePolynomial, x: i64, y: i64) -> BigInt {
    p.evaluate(&BigInt::from(x), &BigInt::from(y))
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&(i, j, _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        for (k, (i, j, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let power = |var: &str, p: usize| match p {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, p),
            };
            let mono = format!("{}{}", power("x", i), power("y", j));
            match (c.is_one(), mono.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&mono)?,
                (false, _) => write!(f, "{}{}", c, mono)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TuttePolynomial({})", self)
    }
}

/// Deletion–contraction on the smallest present edge, memoized on the
/// multiset of (merged) endpoint pairs.
pub fn tutte_deletion_contraction(view: &GraphView) -> TuttePolynomial {
    let mut memo = HashMap::new();
    recurse(view, &mut Some(&mut memo))
}

/// The same recursion without memoization.
pub fn tutte_deletion_contraction_unmemoized(view: &GraphView) -> TuttePolynomial {
    recurse(view, &mut None)
}

type Memo = HashMap<Vec<(usize, usize)>, TuttePolynomial>;

fn signature(view: &GraphView) -> Vec<(usize, usize)> {
    let mut sig: Vec<_> = view
        .present()
        .iter()
        .map(|e| {
            let (a, b) = view.endpoints(e);
            (a.min(b), a.max(b))
        })
        .collect();
    sig.sort_unstable();
    sig
}

fn recurse(view: &GraphView, memo: &mut Option<&mut Memo>) -> TuttePolynomial {
    let Some(e) = view.present().min() else {
        return TuttePolynomial::one();
    };
    let key = memo.as_ref().map(|_| signature(view));
    if let (Some(m), Some(k)) = (memo.as_deref(), key.as_ref()) {
        if let Some(p) = m.get(k) {
            return p.clone();
        }
    }
    let result = pivot(view, e, memo);
    if let (Some(m), Some(k)) = (memo.as_deref_mut(), key) {
        m.insert(k, result.clone());
    }
    result
}

fn pivot(view: &GraphView, e: EdgeId, memo: &mut Option<&mut Memo>) -> TuttePolynomial {
    let deleted = || view.delete(e).expect("pivot edge is present");
    let contracted = || view.contract(e).expect("pivot edge is present");
    if view.is_loop(e).expect("pivot edge is present") {
        recurse(&deleted(), memo).times_y()
    } else if view.is_bridge(e).expect("pivot edge is present") {
        recurse(&contracted(), memo).times_x()
    } else {
        recurse(&deleted(), memo).add(&recurse(&contracted(), memo))
    }
}

/// `t_ij` counts the spanning forests with internal activity `i` and
/// external activity `j` under the view's edge order.
pub fn tutte_activity_expansion(view: &GraphView, forest_cap: usize) -> Result<TuttePolynomial> {
    let mut p = TuttePolynomial::default();
    for forest in view.spanning_forests(forest_cap)? {
        let a = view.activities(&forest)?;
        p.add_term(a.internal, a.external, &BigUint::one());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{Multigraph, DEFAULT_FOREST_CAP};
    use crate::named;

    /// Builds a polynomial from `(i, j, t_ij)` triples.
    fn poly(terms: &[(usize, usize, u32)]) -> TuttePolynomial {
        let mut p = TuttePolynomial::default();
        for &(i, j, c) in terms {
            p.add_term(i, j, &BigUint::from(c));
        }
        p
    }

    #[test]
    fn base_cases() {
        assert_eq!(
            tutte_deletion_contraction(&named::b1().view()),
            TuttePolynomial::monomial(1, 0)
        );
        assert_eq!(
            tutte_deletion_contraction(&named::l1().view()),
            TuttePolynomial::monomial(0, 1)
        );
        let edgeless = Multigraph::new(4, vec![]).unwrap();
        assert_eq!(
            tutte_deletion_contraction(&edgeless.view()),
            TuttePolynomial::one()
        );
    }

    #[test]
    fn triangle() {
        let expected = poly(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        let c3 = named::c3();
        assert_eq!(tutte_deletion_contraction(&c3.view()), expected);
        assert_eq!(
            tutte_activity_expansion(&c3.view(), DEFAULT_FOREST_CAP).unwrap(),
            expected
        );
        assert_eq!(expected.to_string(), "x^2 + x + y");
    }

    #[test]
    fn k4_from_both_methods() {
        // x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
        let expected = poly(&[
            (3, 0, 1),
            (2, 0, 3),
            (1, 0, 2),
            (1, 1, 4),
            (0, 1, 2),
            (0, 2, 3),
            (0, 3, 1),
        ]);
        let k4 = named::k4();
        assert_eq!(tutte_deletion_contraction(&k4.view()), expected);
        assert_eq!(tutte_deletion_contraction_unmemoized(&k4.view()), expected);
        assert_eq!(
            tutte_activity_expansion(&k4.view(), DEFAULT_FOREST_CAP).unwrap(),
            expected
        );
    }

    #[test]
    fn digon_and_loop_by_activities() {
        assert_eq!(
            tutte_activity_expansion(&named::d2().view(), DEFAULT_FOREST_CAP).unwrap(),
            poly(&[(1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(
            tutte_activity_expansion(&named::l1().view(), DEFAULT_FOREST_CAP).unwrap(),
            TuttePolynomial::monomial(0, 1)
        );
    }

    #[test]
    fn evaluations_of_the_triangle() {
        let p = tutte_deletion_contraction(&named::c3().view());
        assert_eq!(evaluate(&p, 0, 1), BigInt::from(1));
        assert_eq!(evaluate(&p, 2, 1), BigInt::from(7));
        assert_eq!(evaluate(&p, 1, 1), BigInt::from(3));
        assert_eq!(evaluate(&p, -1, -1), BigInt::from(-1));
    }

    #[test]
    fn recursion_consistency_on_minors() {
        let k4 = named::k4();
        let v = k4.view();
        let e = EdgeId(0);
        let sum = tutte_deletion_contraction(&v.delete(e).unwrap())
            .add(&tutte_deletion_contraction(&v.contract(e).unwrap()));
        assert_eq!(sum, tutte_deletion_contraction(&v));
    }

    #[test]
    fn disconnected_graph_is_a_product() {
        // Triangle plus a disjoint loop: (x^2 + x + y) * y
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 0), (3, 3)]).unwrap();
        let expected = poly(&[(2, 1, 1), (1, 1, 1), (0, 2, 1)]);
        assert_eq!(tutte_deletion_contraction(&g.view()), expected);
        assert_eq!(
            tutte_activity_expansion(&g.view(), DEFAULT_FOREST_CAP).unwrap(),
            expected
        );
    }
}
