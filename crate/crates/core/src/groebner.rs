//! Buchberger's algorithm, normal forms, ideal comparison and quotient
//! dimensions over `Q`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::algebra::{MPoly, Monomial, MonomialOrder, Rational, Vars};
use crate::error::{invalid, Error, Result};

/// A Gröbner basis together with the order it was computed for.
///
/// Generators are monic. When `reduced` is set no monomial of a generator is
/// divisible by another generator's leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<MPoly>,
    leading: Vec<Monomial>,
    order: MonomialOrder,
    vars: Vars,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }
}

/// Polynomial keyed for fast leading-term access under a fixed order.
struct Sorted {
    order: MonomialOrder,
    terms: BTreeMap<Key, Rational>,
}

#[derive(Clone, PartialEq, Eq)]
struct Key(Monomial, MonomialOrder);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.1.cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Sorted {
    fn new(p: &MPoly, order: MonomialOrder) -> Self {
        Sorted {
            order,
            terms: p.terms().map(|(m, c)| (Key(m.clone(), order), c.clone())).collect(),
        }
    }

    fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop_last().map(|(k, c)| (k.0, c))
    }

    /// `self -= c * m * g`.
    fn sub_multiple(&mut self, c: &Rational, m: &Monomial, g: &MPoly) {
        for (gm, gc) in g.terms() {
            let key = Key(gm.mul(m), self.order);
            let delta = c * gc;
            match self.terms.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
    }
}

/// Full reduction of `f` by monic polynomials `basis` with leading monomials
/// `leading`.
fn reduce(f: &MPoly, basis: &[MPoly], leading: &[Monomial], order: MonomialOrder) -> MPoly {
    let mut work = Sorted::new(f, order);
    let mut rem = MPoly::zero(f.vars());
    while let Some((m, c)) = work.pop_leading() {
        let hit = leading.iter().enumerate().find_map(|(i, lm)| lm.quotient_of(&m).map(|q| (i, q)));
        match hit {
            Some((i, q)) => {
                // the leading term cancels exactly; subtract the tail only
                let lc = basis[i].coefficient(&leading[i]);
                let factor = &c / &lc;
                let mut tail = basis[i].clone();
                tail.add_term(leading[i].clone(), -lc);
                work.sub_multiple(&factor, &q, &tail);
            }
            None => rem.add_term(m, c),
        }
    }
    rem
}

fn s_polynomial(f: &MPoly, lf: &Monomial, g: &MPoly, lg: &Monomial) -> MPoly {
    let l = lf.lcm(lg);
    let a = f.mul_monomial(&lf.quotient_of(&l).unwrap());
    let b = g.mul_monomial(&lg.quotient_of(&l).unwrap());
    &a - &b
}

fn check_vars(gens: &[MPoly]) -> Result<Vars> {
    let vars = gens.first().ok_or_else(|| invalid("empty generator list"))?.vars();
    if let Some(g) = gens.iter().find(|g| g.vars() != vars) {
        return Err(Error::VarMismatch(vars, g.vars()));
    }
    Ok(vars)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed smallest lcm first (normal strategy; ties broken by
/// index), with the coprime criterion and the chain criterion for pruning.
pub fn buchberger(gens: &[MPoly], order: MonomialOrder) -> Result<GroebnerBasis> {
    let vars = check_vars(gens)?;
    let mut basis: Vec<MPoly> = Vec::new();
    let mut leading: Vec<Monomial> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |p: MPoly, basis: &mut Vec<MPoly>, leading: &mut Vec<Monomial>, pending: &mut BTreeSet<_>| {
        let p = p.monic(order);
        let lm = p.leading_term(order).unwrap().0.clone();
        let idx = basis.len();
        basis.push(p);
        leading.push(lm);
        for i in 0..idx {
            pending.insert((i, idx));
        }
    };

    for g in gens {
        let r = reduce(g, &basis, &leading, order);
        if !r.is_zero() {
            push(r, &mut basis, &mut leading, &mut pending);
        }
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = leading[a.0].lcm(&leading[a.1]);
        let lb = leading[b.0].lcm(&leading[b.1]);
        la.degree()
            .cmp(&lb.degree())
            .then_with(|| order.cmp(&la, &lb))
            .then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        if leading[i].is_coprime(&leading[j]) {
            continue;
        }
        let lcm = leading[i].lcm(&leading[j]);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leading[k].divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &leading[i], &basis[j], &leading[j]);
        let r = reduce(&s, &basis, &leading, order);
        if !r.is_zero() {
            push(r, &mut basis, &mut leading, &mut pending);
        }
    }

    Ok(interreduce(basis, leading, order, vars))
}

fn interreduce(basis: Vec<MPoly>, leading: Vec<Monomial>, order: MonomialOrder, vars: Vars) -> GroebnerBasis {
    // drop generators whose leading monomial is divisible by another's
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|j| {
            j != i
                && leading[j].divides(&leading[i])
                && (leading[j] != leading[i] || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let mut gens: Vec<MPoly> = keep.iter().map(|&i| basis[i].clone()).collect();
    let lms: Vec<Monomial> = keep.iter().map(|&i| leading[i].clone()).collect();
    for idx in 0..gens.len() {
        let others: Vec<usize> = (0..gens.len()).filter(|&j| j != idx).collect();
        let ob: Vec<MPoly> = others.iter().map(|&j| gens[j].clone()).collect();
        let ol: Vec<Monomial> = others.iter().map(|&j| lms[j].clone()).collect();
        let mut tail = gens[idx].clone();
        tail.add_term(lms[idx].clone(), -Rational::from_integer(1.into()));
        let mut g = reduce(&tail, &ob, &ol, order);
        g.add_term(lms[idx].clone(), Rational::from_integer(1.into()));
        gens[idx] = g;
    }
    let mut pairs: Vec<(MPoly, Monomial)> = gens.into_iter().zip(lms).collect();
    pairs.sort_by(|a, b| order.cmp(&b.1, &a.1));
    let (generators, leading) = pairs.into_iter().unzip();
    GroebnerBasis { generators, leading, order, vars, reduced: true }
}

/// Remainder of `f` on division by the basis.
pub fn normal_form(f: &MPoly, gb: &GroebnerBasis) -> Result<MPoly> {
    if f.vars() != gb.vars {
        return Err(Error::VarMismatch(gb.vars, f.vars()));
    }
    Ok(reduce(f, &gb.generators, &gb.leading, gb.order))
}

pub fn contains(gb: &GroebnerBasis, f: &MPoly) -> Result<bool> {
    Ok(normal_form(f, gb)?.is_zero())
}

/// Which side of an [`ideal_equal`] comparison a witness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// A generator of the first list that is not in the second ideal.
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub side: Side,
    pub index: usize,
    pub generator: MPoly,
    pub remainder: MPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealComparison {
    pub equal: bool,
    pub witness: Option<Witness>,
}

/// Compares the ideals generated by `a` and `b` by mutual containment.
pub fn ideal_equal(a: &[MPoly], b: &[MPoly], order: MonomialOrder) -> Result<IdealComparison> {
    let va = check_vars(a)?;
    let vb = check_vars(b)?;
    if va != vb {
        return Err(Error::VarMismatch(va, vb));
    }
    let gb_a = buchberger(a, order)?;
    let gb_b = buchberger(b, order)?;
    for (side, gens, gb) in [(Side::Left, a, &gb_b), (Side::Right, b, &gb_a)] {
        for (index, g) in gens.iter().enumerate() {
            let remainder = normal_form(g, gb)?;
            if !remainder.is_zero() {
                return Ok(IdealComparison {
                    equal: false,
                    witness: Some(Witness { side, index, generator: g.clone(), remainder }),
                });
            }
        }
    }
    Ok(IdealComparison { equal: true, witness: None })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientDimension {
    /// Dimension over `Q` with the standard monomials, ascending by order.
    Finite { dimension: usize, standard_monomials: Vec<Monomial> },
    Infinite,
}

impl QuotientDimension {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            QuotientDimension::Finite { dimension, .. } => Some(*dimension),
            QuotientDimension::Infinite => None,
        }
    }
}

/// Dimension of `Q[vars]/(gens)` as a `Q`-vector space.
pub fn quotient_dimension(gens: &[MPoly], order: MonomialOrder) -> Result<QuotientDimension> {
    let gb = buchberger(gens, order)?;
    Ok(standard_monomials(&gb))
}

pub fn standard_monomials(gb: &GroebnerBasis) -> QuotientDimension {
    let nvars = gb.vars.len();
    // finite iff every variable has a pure power among the leading monomials
    let mut bound = vec![u32::MAX; nvars];
    for lm in &gb.leading {
        if lm.is_one() {
            return QuotientDimension::Finite { dimension: 0, standard_monomials: vec![] };
        }
        if let Some(v) = lm.pure_power_var() {
            bound[v] = bound[v].min(lm.exponent(v));
        }
    }
    if bound.contains(&u32::MAX) {
        return QuotientDimension::Infinite;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    collect_standard(0, &mut cur, &bound, &gb.leading, &mut out);
    out.sort_by(|a, b| gb.order.cmp(a, b));
    QuotientDimension::Finite { dimension: out.len(), standard_monomials: out }
}

fn collect_standard(i: usize, cur: &mut Vec<u32>, bound: &[u32], leading: &[Monomial], out: &mut Vec<Monomial>) {
    if i == cur.len() {
        out.push(Monomial::from_exponents(cur.clone()));
        return;
    }
    for e in 0..bound[i] {
        cur[i] = e;
        // prune: if the partial monomial (zeros after i) is already divisible,
        // every extension is too
        let m = Monomial::from_exponents(cur.clone());
        if leading.iter().any(|lm| lm.divides(&m)) {
            break;
        }
        collect_standard(i + 1, cur, bound, leading, out);
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat};
    use proptest::prelude::*;

    fn polys(v: Vars, ss: &[&str]) -> Vec<MPoly> {
        ss.iter().map(|s| parse_poly(s, v).unwrap()).collect()
    }

    #[test]
    fn already_reduced() {
        let v = Vars::without_t(2);
        let gb = buchberger(&polys(v, &["x1", "x2"]), MonomialOrder::GRevLex).unwrap();
        assert_eq!(gb.generators(), polys(v, &["x1", "x2"]).as_slice());
        assert!(gb.is_reduced());
    }

    #[test]
    fn linear_elimination() {
        let v = Vars::without_t(2);
        for order in MonomialOrder::ALL {
            let gb = buchberger(&polys(v, &["x1 + x2", "x1 - x2"]), order).unwrap();
            assert_eq!(gb.generators(), polys(v, &["x1", "x2"]).as_slice());
        }
    }

    #[test]
    fn small_j_ideal() {
        // J for n=2, k=1
        let v = Vars::without_t(2);
        let gens = polys(v, &["x1 + x2", "x1^2", "x2^2", "x1*x2"]);
        let gb = buchberger(&gens, MonomialOrder::GRevLex).unwrap();
        let qd = standard_monomials(&gb);
        assert_eq!(
            qd,
            QuotientDimension::Finite {
                dimension: 2,
                standard_monomials: vec![Monomial::one(2), Monomial::var(2, 1)],
            }
        );
        for g in &gens {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
        assert!(normal_form(&parse_poly("x1^2", v).unwrap(), &gb).unwrap().is_zero());
        assert_eq!(normal_form(&MPoly::one(v), &gb).unwrap(), MPoly::one(v));
    }

    #[test]
    fn empty_and_mismatched_inputs() {
        assert!(buchberger(&[], MonomialOrder::Lex).is_err());
        let a = MPoly::x(Vars::without_t(2), 1);
        let b = MPoly::x(Vars::without_t(3), 1);
        assert!(matches!(buchberger(&[a.clone(), b.clone()], MonomialOrder::Lex), Err(Error::VarMismatch(..))));
        let gb = buchberger(&[a], MonomialOrder::Lex).unwrap();
        assert!(normal_form(&b, &gb).is_err());
    }

    #[test]
    fn infinite_and_unit_quotients() {
        let v = Vars::without_t(2);
        assert_eq!(quotient_dimension(&polys(v, &["x1"]), MonomialOrder::Lex).unwrap(), QuotientDimension::Infinite);
        let unit = quotient_dimension(&polys(v, &["x1", "x1 - 1"]), MonomialOrder::Lex).unwrap();
        assert_eq!(unit.dimension(), Some(0));
        let points = quotient_dimension(&polys(v, &["x1", "x2"]), MonomialOrder::Lex).unwrap();
        assert_eq!(points.dimension(), Some(1));
    }

    #[test]
    fn cyclic_three_is_order_independent() {
        let v = Vars::without_t(3);
        let gens = polys(v, &["x1 + x2 + x3", "x1*x2 + x2*x3 + x1*x3", "x1*x2*x3 - 1"]);
        let dims: Vec<_> = MonomialOrder::ALL
            .iter()
            .map(|&o| quotient_dimension(&gens, o).unwrap().dimension())
            .collect();
        assert_eq!(dims, vec![Some(6); 3]);
    }

    #[test]
    fn inequality_has_witness() {
        let v = Vars::without_t(2);
        let a = polys(v, &["x1", "x2^2"]);
        let b = polys(v, &["x1", "x2"]);
        let cmp = ideal_equal(&a, &b, MonomialOrder::GRevLex).unwrap();
        assert!(!cmp.equal);
        let w = cmp.witness.unwrap();
        assert_eq!(w.side, Side::Right);
        assert_eq!(w.generator, b[1]);
        assert!(ideal_equal(&a, &a, MonomialOrder::Lex).unwrap().equal);
    }

    fn arb_poly(v: Vars) -> impl Strategy<Value = MPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, v.len()), -5i64..6), 0..5).prop_map(move |ts| {
            MPoly::from_terms(v, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(e), rat(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ideal_elements_reduce_to_zero(
            a in arb_poly(Vars::without_t(3)),
            b in arb_poly(Vars::without_t(3)),
            e in prop::collection::vec(0u32..3, 3),
        ) {
            let v = Vars::without_t(3);
            let gens = polys(v, &["x1^2 - x2*x3", "x2^2 - x1", "x1*x3 + x3^2 - 2*x2"]);
            let gb = buchberger(&gens, MonomialOrder::GRevLex).unwrap();
            let f = &(&a * &gens[0]) + &(&b * &gens[2]);
            let g = &b * &gens[1];
            prop_assert!(normal_form(&(&f + &g), &gb).unwrap().is_zero());
            let m = Monomial::from_exponents(e);
            prop_assert!(normal_form(&f.mul_monomial(&m), &gb).unwrap().is_zero());
        }

        #[test]
        fn normal_form_is_linear(
            f in arb_poly(Vars::without_t(3)),
            g in arb_poly(Vars::without_t(3)),
            a in -4i64..5,
            b in -4i64..5,
        ) {
            let v = Vars::without_t(3);
            let gens = polys(v, &["x1^2 - x2*x3", "x2^2 - x1", "x1*x3 + x3^2 - 2*x2"]);
            let gb = buchberger(&gens, MonomialOrder::GRevLex).unwrap();
            let lhs = normal_form(&(&f.scale(&rat(a)) + &g.scale(&rat(b))), &gb).unwrap();
            let rhs = &normal_form(&f, &gb).unwrap().scale(&rat(a)) + &normal_form(&g, &gb).unwrap().scale(&rat(b));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduced_basis_invariants(gens in prop::collection::vec(arb_poly(Vars::without_t(2)), 1..4)) {
            prop_assume!(gens.iter().any(|g| !g.is_zero()));
            let gb = buchberger(&gens, MonomialOrder::GrLex).unwrap();
            let lms = gb.leading_monomials();
            for (i, g) in gb.generators().iter().enumerate() {
                prop_assert_eq!(g.leading_term(MonomialOrder::GrLex).unwrap().1, &rat(1));
                for (m, _) in g.terms() {
                    for (j, lm) in lms.iter().enumerate() {
                        prop_assert!(i == j || !lm.divides(m));
                    }
                }
            }
            for i in 0..lms.len() {
                for j in i + 1..lms.len() {
                    let s = s_polynomial(&gb.generators()[i], &lms[i], &gb.generators()[j], &lms[j]);
                    prop_assert!(normal_form(&s, &gb).unwrap().is_zero());
                }
            }
            for g in &gens {
                prop_assert!(normal_form(g, &gb).unwrap().is_zero());
            }
        }
    }
}
