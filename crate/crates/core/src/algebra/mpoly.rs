use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational, Vars};
use crate::error::{invalid, Error, Result};

/// Sparse multivariate polynomial over `Q` in the variables of a [`Vars`].
///
/// No zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(vars: Vars) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vars, c: Rational) -> Self {
        Self::term(vars, c, Monomial::one(vars.len()))
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn term(vars: Vars, c: Rational, m: Monomial) -> Self {
        assert_eq!(m.nvars(), vars.len(), "monomial length does not match {vars}");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { vars, terms }
    }

    /// The variable with index `i` (0-based; `t` is `vars.x`).
    pub fn var(vars: Vars, i: usize) -> Self {
        Self::term(vars, Rational::one(), Monomial::var(vars.len(), i))
    }

    /// `x_i` with the 1-based index used throughout the crate.
    pub fn x(vars: Vars, i: usize) -> Self {
        assert!(i >= 1 && i <= vars.x, "x{i} not in {vars}");
        Self::var(vars, i - 1)
    }

    pub fn t(vars: Vars) -> Self {
        Self::var(vars, vars.t_index().expect("ring has no t"))
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms sorted descending by `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, other: &MPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarMismatch(self.vars, other.vars))
        }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check(other)?;
        let mut out = MPoly::zero(self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.vars);
        }
        MPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces every variable by the corresponding polynomial in `values`.
    /// All values must share one variable set, which becomes the result's.
    pub fn substitute(&self, values: &[MPoly]) -> Result<MPoly> {
        if values.len() != self.vars.len() {
            return Err(invalid(format!(
                "substitution needs {} values, got {}",
                self.vars.len(),
                values.len()
            )));
        }
        let target = match values.first() {
            Some(v) => v.vars,
            None => return Ok(self.clone()),
        };
        if let Some(v) = values.iter().find(|v| v.vars != target) {
            return Err(Error::VarMismatch(target, v.vars));
        }
        // cache powers per variable
        let mut powers: Vec<Vec<MPoly>> = values.iter().map(|v| vec![MPoly::one(target), v.clone()]).collect();
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut acc = MPoly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &values[i];
                    powers[i].push(next);
                }
                acc = &acc * &powers[i][e as usize];
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Sets `t = 0` and moves the result into the ring without `t`.
    pub fn specialize_t_zero(&self) -> Result<MPoly> {
        let ti = self.vars.t_index().ok_or_else(|| invalid("polynomial has no t variable"))?;
        let vars = Vars::without_t(self.vars.x);
        Ok(MPoly::from_terms(
            vars,
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(ti) == 0)
                .map(|(m, c)| (Monomial::from_exponents(m.exponents()[..ti].to_vec()), c.clone())),
        ))
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.keys().map(Monomial::degree).all_equal()
    }

    /// Splits into homogeneous components, ascending by degree.
    pub fn homogeneous_components(&self) -> Vec<(u32, MPoly)> {
        let mut parts: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.degree())
                .or_insert_with(|| MPoly::zero(self.vars))
                .add_term(m.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self, order: MonomialOrder) -> MPoly {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Canonical text form with terms sorted descending by `order`.
    pub fn to_string_with(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono = format_monomial(self.vars, m);
            match (abs.is_one(), mono.is_empty()) {
                (true, false) => s.push_str(&mono),
                (_, true) => s.push_str(&abs.to_string()),
                (false, false) => {
                    s.push_str(&abs.to_string());
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }
}

fn format_monomial(vars: Vars, m: &Monomial) -> String {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars.name(i)
            } else {
                format!("{}^{e}", vars.name(i))
            }
        })
        .join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(MonomialOrder::GRevLex))
    }
}

// Operator impls panic on mismatched variable sets; use the `try_*` methods
// where inputs are not known to agree.
impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.try_add(rhs).expect("polynomial variable sets differ")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.try_sub(rhs).expect("polynomial variable sets differ")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.try_mul(rhs).expect("polynomial variable sets differ")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

/// `e_d` in the given variables (0-based indices). Zero when `d` exceeds the
/// number of variables; `e_0 = 1`.
pub fn elementary_symmetric(vars: Vars, d: usize, indices: &[usize]) -> MPoly {
    MPoly::from_terms(
        vars,
        indices.iter().combinations(d).map(|combo| {
            let mut e = vec![0; vars.len()];
            for &i in combo {
                e[i] += 1;
            }
            (Monomial::from_exponents(e), Rational::one())
        }),
    )
}
