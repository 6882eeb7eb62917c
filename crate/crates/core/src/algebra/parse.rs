//! Text form of polynomials.
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := INT ('/' INT)? | var ('^' INT)?
//! var    := 'x' INT | 't'
//! ```
//!
//! Example: `3/2*x1^2*t - x2*x3 + 5*t^2`. Whitespace between tokens is ignored.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MPoly, Monomial, Rational, Vars};
use crate::error::{Error, Result};

pub fn parse_poly(text: &str, vars: Vars) -> Result<MPoly> {
    Parser { src: text.as_bytes(), pos: 0, vars }.poly()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: Vars,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.digits()?;
        u32::try_from(n).or_else(|_| {
            self.pos = start;
            self.err("integer too large")
        })
    }

    fn poly(&mut self) -> Result<MPoly> {
        let mut out = MPoly::zero(self.vars);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(_) if first => false,
                Some(c) => return self.err(format!("expected '+' or '-', found '{}'", c as char)),
            };
            first = false;
            let (m, c) = self.term()?;
            out.add_term(m, if negative { -c } else { c });
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = Rational::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits()?;
                    let den = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let at = self.pos;
                        let d = self.digits()?;
                        if d.is_zero() {
                            self.pos = at;
                            return self.err("zero denominator");
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    coeff *= Rational::new(num, den);
                }
                Some(b'x') => {
                    self.pos += 1;
                    let at = self.pos;
                    let i = self.small()? as usize;
                    if i == 0 || i > self.vars.x {
                        self.pos = at;
                        return self.err(format!("x{i} is not a variable of {}", self.vars));
                    }
                    exps[i - 1] += self.exponent()?;
                }
                Some(b't') => {
                    let Some(ti) = self.vars.t_index() else {
                        return self.err("t is not a variable here");
                    };
                    self.pos += 1;
                    exps[ti] += self.exponent()?;
                }
                Some(c) => return self.err(format!("unexpected '{}'", c as char)),
                None => return self.err("unexpected end of input"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.small()
        } else {
            Ok(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, MonomialOrder};
    use proptest::prelude::*;

    #[test]
    fn canonical_example() {
        let v = Vars::with_t(3);
        let f = parse_poly("3/2*x1^2*t - x2*x3 + 5*t^2", v).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.to_string(), "3/2*x1^2*t - x2*x3 + 5*t^2");
    }

    #[test]
    fn constants_and_signs() {
        let v = Vars::with_t(1);
        assert_eq!(parse_poly("-3", v).unwrap(), MPoly::constant(v, rat(-3)));
        assert_eq!(parse_poly("x1 - x1", v).unwrap().to_string(), "0");
        assert_eq!(parse_poly("-x1+ 2 * t", v).unwrap().to_string(), "-x1 + 2*t");
    }

    #[test]
    fn diagnostics_carry_positions() {
        let v = Vars::with_t(2);
        assert_eq!(
            parse_poly("x1 + x3", v),
            Err(Error::Parse { pos: 6, msg: "x3 is not a variable of Q[x1..x2,t]".into() })
        );
        assert!(matches!(parse_poly("x1 +", v), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("x1 ** x2", v), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("1/0", v), Err(Error::Parse { pos: 2, .. })));
        assert!(parse_poly("t", Vars::without_t(2)).is_err());
        assert!(parse_poly("", v).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        let v = Vars::with_t(3);
        prop::collection::vec((prop::collection::vec(0u32..4, 4), -20i64..20, 1i64..6), 0..6).prop_map(
            move |ts| {
                MPoly::from_terms(
                    v,
                    ts.into_iter()
                        .map(|(e, n, d)| (Monomial::from_exponents(e), rat(n) / rat(d))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(f in arb_poly()) {
            for order in MonomialOrder::ALL {
                let text = f.to_string_with(order);
                prop_assert_eq!(&parse_poly(&text, f.vars()).unwrap(), &f);
            }
        }
    }
}
