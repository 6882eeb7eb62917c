use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The variables of a polynomial ring: `x1..xn`, optionally followed by `t`.
///
/// Variable `i < x` is `x{i+1}`; when `t` is present it is the last variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vars {
    pub x: usize,
    pub t: bool,
}

impl Vars {
    pub fn with_t(x: usize) -> Self {
        Vars { x, t: true }
    }

    pub fn without_t(x: usize) -> Self {
        Vars { x, t: false }
    }

    /// Total number of variables.
    pub fn len(&self) -> usize {
        self.x + usize::from(self.t)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index of `t`, if present.
    pub fn t_index(&self) -> Option<usize> {
        self.t.then_some(self.x)
    }

    pub fn name(&self, i: usize) -> String {
        if i < self.x {
            format!("x{}", i + 1)
        } else {
            "t".to_string()
        }
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names = match self.x {
            0 => vec![],
            1 => vec!["x1".to_string()],
            n => vec![format!("x1..x{n}")],
        };
        if self.t {
            names.push("t".to_string());
        }
        write!(f, "Q[{}]", names.join(","))
    }
}

/// Exponent vector. The derived `Ord` is plain lexicographic on the vector and
/// is only used for map storage; algorithms compare with a [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The single variable this monomial is a pure power of, if any.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = support.next()?;
        support.next().is_none().then_some(i)
    }

    /// All monomials of total degree `d` in `nvars` variables, in descending
    /// order for `order`.
    pub fn all_of_degree(nvars: usize, d: u32, order: MonomialOrder) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(vec![]));
            }
            return out;
        }
        rec(0, d, &mut vec![0; nvars], &mut out);
        out.sort_by(|a, b| order.cmp(b, a));
        out
    }
}

/// Monomial orders with variable precedence `x1 > x2 > ... > xn > t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GRevLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] =
        [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GRevLex];

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| lex(a, b)),
            MonomialOrder::GRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // smaller exponent in the last differing variable wins
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.0.cmp(&b.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn orders_disagree_where_expected() {
        // x1*t^2 vs x2^3 (vars x1,x2,t)
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 3, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GrLex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GRevLex.cmp(&a, &b), Ordering::Less);
        // degree dominates in graded orders
        let c = m(&[0, 0, 4]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &c), Ordering::Greater);
        assert_eq!(MonomialOrder::GRevLex.cmp(&a, &c), Ordering::Less);
    }

    #[test]
    fn degree_listing() {
        let ms = Monomial::all_of_degree(3, 2, MonomialOrder::GRevLex);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], m(&[2, 0, 0]));
        assert_eq!(ms[5], m(&[0, 0, 2]));
        assert_eq!(Monomial::all_of_degree(4, 0, MonomialOrder::Lex).len(), 1);
    }

    #[test]
    fn divisibility() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(m(&[1, 0, 1])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert_eq!(m(&[0, 3, 0]).pure_power_var(), Some(1));
        assert_eq!(a.pure_power_var(), None);
    }
}
