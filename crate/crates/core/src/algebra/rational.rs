use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn rationals_normalize() {
        let r = Rational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(rat(0).to_string(), "0");
    }
}
