//! Partitions, two-row fillings, standard tableaux and hook lengths.
//!
//! Rows and columns are 1-indexed, English notation (row 1 on top).

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{binomial, Monomial, Vars};
use crate::error::{invalid, Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// The two-row shape `(n - l, l)`; a single row when `l = 0`.
    pub fn two_row(n: usize, l: usize) -> Result<Self> {
        if 2 * l > n {
            return Err(invalid(format!("({}, {l}) is not a partition", n as i64 - l as i64)));
        }
        Partition::new([n - l, l].into_iter().filter(|&p| p > 0).collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    fn column_length(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= j).count()
    }

    /// Number of boxes in the hook of box `(i, j)`: the box, the arm to its
    /// right and the leg below it.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || j == 0 || i > self.0.len() || j > self.0[i - 1] {
            return Err(invalid(format!("({i}, {j}) is not a box of {self}")));
        }
        let arm = self.0[i - 1] - j;
        let leg = self.column_length(j) - i;
        Ok(arm + leg + 1)
    }

    /// `f^λ = n! / ∏ h(i, j)`, the number of standard tableaux of this shape.
    pub fn hook_count(&self) -> BigUint {
        let n = self.size();
        let factorial: BigUint = (1..=n).map(BigUint::from).product();
        let hooks: BigUint = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
            .map(|(i, j)| BigUint::from(self.hook_length(i, j).unwrap()))
            .product();
        let (q, r) = factorial.div_rem(&hooks);
        assert!(r.is_zero(), "hook product does not divide n!");
        q
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An injective placement of `1..=n` into the shape `(n - l, l)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwoRowFilling {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TwoRowFilling {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        let n = top.len() + bottom.len();
        if bottom.len() > top.len() {
            return Err(invalid("bottom row is longer than top row"));
        }
        let mut seen = vec![false; n + 1];
        for &v in top.iter().chain(&bottom) {
            if v == 0 || v > n {
                return Err(invalid(format!("entry {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(invalid(format!("entry {v} repeated")));
            }
        }
        Ok(TwoRowFilling { top, bottom })
    }

    /// The filling whose bottom row is `bottom` (sorted) and whose top row is
    /// the complement in `1..=n`, ascending.
    pub fn from_bottom(n: usize, bottom: &[usize]) -> Result<Self> {
        let mut bottom = bottom.to_vec();
        bottom.sort_unstable();
        let top = (1..=n).filter(|v| bottom.binary_search(v).is_err()).collect();
        TwoRowFilling::new(top, bottom)
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn n(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    /// Rows strictly increase.
    pub fn is_permissible(&self) -> bool {
        self.top.windows(2).all(|w| w[0] < w[1]) && self.bottom.windows(2).all(|w| w[0] < w[1])
    }

    /// Permissible and every full column strictly increases downwards.
    pub fn is_standard(&self) -> bool {
        self.is_permissible() && self.first_bad_column().is_none()
    }

    /// Smallest 1-based column `r` with `top[r] > bottom[r]`.
    pub fn first_bad_column(&self) -> Option<usize> {
        self.top.iter().zip(&self.bottom).position(|(a, b)| a > b).map(|r| r + 1)
    }

    /// `x_T`, the product of the variables indexed by the bottom row.
    pub fn monomial(&self, vars: Vars) -> Monomial {
        assert!(vars.x >= self.n(), "ring {vars} too small for filling");
        let mut e = vec![0; vars.len()];
        for &b in &self.bottom {
            e[b - 1] += 1;
        }
        Monomial::from_exponents(e)
    }

    /// Builds the filling with bottom row the support of a squarefree
    /// monomial in the `x` variables.
    pub fn from_monomial(m: &Monomial, vars: Vars) -> Result<Self> {
        if m.nvars() != vars.len() {
            return Err(invalid("monomial length does not match the ring"));
        }
        if vars.t_index().is_some_and(|ti| m.exponent(ti) > 0) {
            return Err(invalid("monomial contains t"));
        }
        if m.exponents().iter().any(|&e| e > 1) {
            return Err(invalid("monomial is not squarefree"));
        }
        let bottom: Vec<usize> = (0..vars.x).filter(|&i| m.exponent(i) == 1).map(|i| i + 1).collect();
        TwoRowFilling::from_bottom(vars.x, &bottom)
    }
}

impl fmt::Display for TwoRowFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "[[{}],[{}]]", row(&self.top), row(&self.bottom))
    }
}

/// A two-row filling that is standard. Ordered by bottom-row length, then
/// lexicographically by bottom row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct StandardTableau(TwoRowFilling);

impl StandardTableau {
    pub fn new(filling: TwoRowFilling) -> Result<Self> {
        if filling.is_standard() {
            Ok(StandardTableau(filling))
        } else {
            Err(invalid(format!("{filling} is not a standard tableau")))
        }
    }

    pub fn filling(&self) -> &TwoRowFilling {
        &self.0
    }

    pub fn bottom(&self) -> &[usize] {
        &self.0.bottom
    }

    pub fn bottom_len(&self) -> usize {
        self.0.bottom.len()
    }

    pub fn monomial(&self, vars: Vars) -> Monomial {
        self.0.monomial(vars)
    }
}

impl Ord for StandardTableau {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bottom_len()
            .cmp(&other.bottom_len())
            .then_with(|| self.bottom().cmp(other.bottom()))
            .then_with(|| self.0.n().cmp(&other.0.n()))
    }
}

impl PartialOrd for StandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All standard tableaux of shape `(n - l, l)`, lexicographic by bottom row.
///
/// With bottom row `b_1 < ... < b_l` and the complement on top, column `r` is
/// increasing exactly when `b_r >= 2r`.
pub fn enumerate_standard_tableaux(n: usize, l: usize) -> Result<Vec<StandardTableau>> {
    if 2 * l > n {
        return Err(invalid(format!("bottom row length {l} exceeds half of {n}")));
    }
    fn rec(n: usize, l: usize, bottom: &mut Vec<usize>, out: &mut Vec<StandardTableau>) {
        let r = bottom.len() + 1;
        if r > l {
            let f = TwoRowFilling::from_bottom(n, bottom).expect("valid bottom row");
            out.push(StandardTableau(f));
            return;
        }
        let lo = bottom.last().map_or(1, |&b| b + 1).max(2 * r);
        // leave room for the remaining l - r entries
        for b in lo..=n - (l - r) {
            bottom.push(b);
            rec(n, l, bottom, out);
            bottom.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, l, &mut Vec::with_capacity(l), &mut out);
    Ok(out)
}

/// The basis `{x_T : T standard of shape (n - l, l), 0 <= l <= k}` in order.
pub fn standard_basis(n: usize, k: usize) -> Result<Vec<StandardTableau>> {
    let mut out = Vec::new();
    for l in 0..=k {
        out.extend(enumerate_standard_tableaux(n, l)?);
    }
    Ok(out)
}

/// Both sides of `C(n, k) = Σ_{l <= k} f^(n-l, l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialHookIdentity {
    pub n: usize,
    pub k: usize,
    pub binomial: u64,
    pub hook_sum: BigUint,
    pub holds: bool,
}

pub fn verify_binomial_hook_identity(n: usize, k: usize) -> Result<BinomialHookIdentity> {
    if 2 * k > n {
        return Err(Error::InvalidInput(format!("k = {k} exceeds n/2 for n = {n}")));
    }
    let hook_sum: BigUint = (0..=k)
        .map(|l| Partition::two_row(n, l).map(|p| p.hook_count()))
        .sum::<Result<BigUint>>()?;
    let binomial = binomial(n as u64, k as u64);
    let holds = hook_sum == BigUint::from(binomial);
    Ok(BinomialHookIdentity { n, k, binomial, hook_sum, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn filling(top: &[usize], bottom: &[usize]) -> TwoRowFilling {
        TwoRowFilling::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    #[test]
    fn predicates() {
        let a = filling(&[1, 3, 4], &[2]);
        assert!(a.is_permissible() && a.is_standard());
        let b = filling(&[2, 3, 4], &[1]);
        assert!(b.is_permissible() && !b.is_standard());
        assert_eq!(b.first_bad_column(), Some(1));
        assert!(!filling(&[1, 4, 3], &[2]).is_permissible());
        assert!(TwoRowFilling::new(vec![1, 1, 3], vec![2]).is_err());
        assert!(TwoRowFilling::new(vec![1], vec![2, 3]).is_err());
    }

    #[test]
    fn enumeration_small_cases() {
        let single = enumerate_standard_tableaux(4, 0).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].to_string(), "[[1,2,3,4],[]]");
        let bottoms = |l| {
            enumerate_standard_tableaux(4, l).unwrap().iter().map(|t| t.bottom().to_vec()).collect::<Vec<_>>()
        };
        assert_eq!(bottoms(1), vec![vec![2], vec![3], vec![4]]);
        assert_eq!(bottoms(2), vec![vec![2, 4], vec![3, 4]]);
        assert!(enumerate_standard_tableaux(3, 2).is_err());
    }

    /// Filter every choice of bottom row through the predicates.
    fn brute_force(n: usize, l: usize) -> Vec<Vec<usize>> {
        (1..=n)
            .combinations(l)
            .filter(|b| TwoRowFilling::from_bottom(n, b).unwrap().is_standard())
            .collect()
    }

    #[test]
    fn enumeration_matches_brute_force_and_hooks() {
        for n in 0..=10 {
            for l in 0..=n / 2 {
                let fast: Vec<Vec<usize>> =
                    enumerate_standard_tableaux(n, l).unwrap().iter().map(|t| t.bottom().to_vec()).collect();
                assert_eq!(fast, brute_force(n, l), "n={n} l={l}");
                let shape = Partition::two_row(n, l).unwrap();
                assert_eq!(shape.hook_count(), BigUint::from(fast.len()), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn hook_lengths() {
        let lambda = Partition::new(vec![4, 3, 2, 1, 1]).unwrap();
        assert_eq!(lambda.hook_length(2, 1).unwrap(), 6);
        assert_eq!(lambda.hook_length(1, 1).unwrap(), 8);
        assert!(lambda.hook_length(2, 4).is_err());
        assert!(lambda.hook_length(0, 1).is_err());
        assert_eq!(Partition::new(vec![5]).unwrap().hook_count(), BigUint::from(1u32));
        let square = Partition::new(vec![2, 2]).unwrap();
        let hooks: Vec<usize> =
            [(1, 1), (1, 2), (2, 1), (2, 2)].iter().map(|&(i, j)| square.hook_length(i, j).unwrap()).collect();
        assert_eq!(hooks, vec![3, 2, 2, 1]);
        assert_eq!(square.hook_count(), BigUint::from(2u32));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        (1..=max.min(n))
            .rev()
            .flat_map(|p| {
                partitions(n - p, p).into_iter().map(move |mut rest| {
                    rest.insert(0, p);
                    rest
                })
            })
            .collect()
    }

    #[test]
    fn hook_counts_integral_up_to_ten() {
        // hook_count asserts divisibility internally
        let mut total = 0usize;
        for n in 0..=10 {
            let sum_sq: BigUint = partitions(n, n)
                .into_iter()
                .map(|p| {
                    let f = Partition::new(p).unwrap().hook_count();
                    &f * &f
                })
                .sum();
            // Σ (f^λ)^2 = n!
            assert_eq!(sum_sq, (1..=n).map(BigUint::from).product::<BigUint>());
            total += 1;
        }
        assert_eq!(total, 11);
    }

    #[test]
    fn binomial_identity() {
        let r = verify_binomial_hook_identity(4, 2).unwrap();
        assert_eq!((r.binomial, r.hook_sum.clone(), r.holds), (6, BigUint::from(6u32), true));
        assert_eq!(
            (0..=2).map(|l| Partition::two_row(4, l).unwrap().hook_count()).collect::<Vec<_>>(),
            vec![BigUint::from(1u32), BigUint::from(3u32), BigUint::from(2u32)]
        );
        assert!(verify_binomial_hook_identity(7, 0).unwrap().holds);
        let big = verify_binomial_hook_identity(12, 6).unwrap();
        assert_eq!(big.binomial, 924);
        assert!(big.holds);
        for n in 0..=12 {
            for k in 0..=n / 2 {
                assert!(verify_binomial_hook_identity(n, k).unwrap().holds);
            }
        }
        assert!(verify_binomial_hook_identity(4, 3).is_err());
    }

    #[test]
    fn monomial_round_trip() {
        let v = Vars::with_t(4);
        let f = TwoRowFilling::from_monomial(&Monomial::var(5, 1), v).unwrap();
        assert_eq!((f.top(), f.bottom()), (&[1, 3, 4][..], &[2][..]));
        let m = Monomial::from_exponents(vec![0, 0, 1, 1, 0]);
        let g = TwoRowFilling::from_monomial(&m, v).unwrap();
        assert_eq!((g.top(), g.bottom()), (&[1, 2][..], &[3, 4][..]));
        assert!(g.is_standard());
        assert_eq!(g.monomial(v), m);
        let t0 = TwoRowFilling::from_monomial(&Monomial::one(5), v).unwrap();
        assert_eq!(t0.to_string(), "[[1,2,3,4],[]]");
        assert!(t0.monomial(v).is_one());
        assert!(TwoRowFilling::from_monomial(&Monomial::from_exponents(vec![2, 0, 0, 0, 0]), v).is_err());
        assert!(TwoRowFilling::from_monomial(&Monomial::var(5, 4), v).is_err());
        // three of four variables do not fit a two-row shape
        assert!(TwoRowFilling::from_monomial(&Monomial::from_exponents(vec![1, 1, 1, 0, 0]), v).is_err());
    }
}
