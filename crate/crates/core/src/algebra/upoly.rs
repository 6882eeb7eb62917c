use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, MPoly, Monomial, Rational, Vars};
use crate::error::{Error, Result};

/// Univariate polynomial in `t` over `Q`; `coeffs[i]` is the coefficient of
/// `t^i`. The coefficient list never ends in a zero, so the zero polynomial is
/// the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPolyT {
    coeffs: Vec<Rational>,
}

impl UPolyT {
    pub fn zero() -> Self {
        UPolyT { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^e`.
    pub fn monomial(c: Rational, e: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPolyT { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// `Some((c, e))` when the polynomial is the single term `c * t^e`.
    pub fn as_monomial(&self) -> Option<(Rational, usize)> {
        let d = self.degree()?;
        self.coeffs[..d].iter().all(Zero::is_zero).then(|| (self.coeffs[d].clone(), d))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; fails only for a zero divisor.
    pub fn div_rem(&self, divisor: &UPolyT) -> Result<(UPolyT, UPolyT)> {
        let dd = divisor.degree().ok_or(Error::Singular)?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let q = &rem[top] * &lead_inv;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= &q * c;
                }
                quot[top - dd] = q;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// `self / divisor` if the division is exact.
    pub fn exact_div(&self, divisor: &UPolyT) -> Option<UPolyT> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Embeds into `Q[x1..xn, t]`.
    pub fn to_mpoly(&self, vars: Vars) -> MPoly {
        let ti = vars.t_index().expect("target ring has no t");
        MPoly::from_terms(
            vars,
            self.coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; vars.len()];
                e[ti] = i as u32;
                (Monomial::from_exponents(e), c.clone())
            }),
        )
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }
}

impl From<i64> for UPolyT {
    fn from(n: i64) -> Self {
        UPolyT::constant(rat(n))
    }
}

impl Add for &UPolyT {
    type Output = UPolyT;
    fn add(self, rhs: &UPolyT) -> UPolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPolyT::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPolyT {
    type Output = UPolyT;
    fn sub(self, rhs: &UPolyT) -> UPolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPolyT::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UPolyT {
    type Output = UPolyT;
    fn mul(self, rhs: &UPolyT) -> UPolyT {
        if self.is_zero() || rhs.is_zero() {
            return UPolyT::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPolyT::from_coeffs(out)
    }
}

impl Neg for &UPolyT {
    type Output = UPolyT;
    fn neg(self) -> UPolyT {
        UPolyT { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl fmt::Display for UPolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let abs = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            match (abs.is_one(), var.is_empty()) {
                (true, false) => write!(f, "{sign}{var}")?,
                (_, true) => write!(f, "{sign}{abs}")?,
                (false, false) => write!(f, "{sign}{abs}*{var}")?,
            }
        }
        Ok(())
    }
}
