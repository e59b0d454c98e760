//! Partitions, compositions, cycle types and permutations, together with the
//! index arithmetic (`σ·μ`, `σ∗μ`, `Σμ`, `μ[n]`, conjugation, `z_α`) used by
//! the character, series and tableau modules.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().take_while(|&&p| p >= c).count()).collect())
    }

    /// `r(μ)`: the partition with its first row removed.
    pub fn remove_first_row(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Parts padded with zeros to length `d`.
    pub fn padded(&self, d: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(d.max(v.len()), 0);
        v
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_partition(self)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"5,4,3,3"`; the empty string and `"0"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        if parts.contains(&0) {
            return Err(Error::ParsePartition(s.to_string()));
        }
        Partition::new(parts).map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

/// All partitions of `n` in reverse lexicographic order, starting from `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(n, n, &mut current, &mut out);
    out
}

fn partitions_rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop();
    }
}

/// A finite sequence of integers read as row lengths. Zero parts are empty
/// rows; any negative part makes the composition invalid, and consumers read
/// an invalid composition as the empty set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<i64>);

impl Composition {
    pub fn new(parts: Vec<i64>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_valid(&self) -> bool {
        self.0.iter().all(|&p| p >= 0)
    }

    /// Row lengths when valid.
    pub fn lengths(&self) -> Option<Vec<usize>> {
        self.is_valid().then(|| self.0.iter().map(|&p| p as usize).collect())
    }

    /// The partition with these parts, if they are nonnegative and weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        let lengths = self.lengths()?;
        if lengths.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Partition::new(lengths).ok()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts().iter().map(|&x| x as i64).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        s.split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Composition)
            .map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

/// Cycle counts `x_i` of a conjugacy class, stored as `x[i-1] = x_i`.
///
/// Trailing zeros are trimmed so that equal classes compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn from_multiplicities(mut x: Vec<usize>) -> Self {
        while x.last() == Some(&0) {
            x.pop();
        }
        CycleType(x)
    }

    pub fn from_partition(p: &Partition) -> Self {
        let mut x = vec![0; p.parts().first().copied().unwrap_or(0)];
        for &part in p.parts() {
            x[part - 1] += 1;
        }
        CycleType(x)
    }

    /// The identity class `1^n`.
    pub fn identity(n: usize) -> Self {
        CycleType::from_multiplicities(vec![n])
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.0
    }

    /// `x_i` for `i ≥ 1`.
    pub fn x(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &x)| (i + 1) * x).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, &x) in self.0.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, x));
        }
        Partition(parts)
    }

    /// Number of cycles.
    pub fn num_cycles(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> =
            self.0.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, x)| format!("{}^{}", i + 1, x)).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Parses exponential notation such as `"1^2 3^1"`. A bare `"3"` means `3^1`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseCycleType(s.to_string());
        let mut x: Vec<usize> = Vec::new();
        for tok in s.split_whitespace() {
            let (len, count) = match tok.split_once('^') {
                Some((l, c)) => (l.parse::<usize>().map_err(|_| err())?, c.parse::<usize>().map_err(|_| err())?),
                None => (tok.parse::<usize>().map_err(|_| err())?, 1),
            };
            if len == 0 {
                return Err(err());
            }
            if x.len() < len {
                x.resize(len, 0);
            }
            x[len - 1] += count;
        }
        Ok(CycleType::from_multiplicities(x))
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `binom(n, k)` for nonnegative arguments.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Centralizer order `z_α = Π_i i^{x_i} x_i!`.
pub fn z_of(ct: &CycleType) -> BigInt {
    ct.multiplicities()
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (i, &x)| acc * BigInt::from(i + 1).pow(x as u32) * factorial(x))
}

/// `μ[n] = (n - |μ|, μ_1, …)`, or `None` when `n < |μ| + μ_1`.
pub fn mu_bracket_n(mu: &Partition, n: usize) -> Option<Partition> {
    let size = mu.size();
    if n < size + mu.part(1) {
        return None;
    }
    let mut parts = vec![n - size];
    parts.extend_from_slice(mu.parts());
    Partition::new(parts).ok()
}

/// A permutation of `{1..d}` stored by its images `(σ(1), …, σ(d))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &v in &images {
            if v == 0 || v > d || seen[v - 1] {
                return Err(Error::ParsePermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(d: usize) -> Self {
        Permutation((1..=d).collect())
    }

    /// The transposition `(a b)` in `S_d`.
    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(d);
        p.0.swap(a - 1, b - 1);
        p
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Pairs `(j, i)` with `j < i` and `σ(j) > σ(i)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let d = self.0.len();
        let mut inv = Vec::new();
        for j in 0..d {
            for i in j + 1..d {
                if self.0[j] > self.0[i] {
                    inv.push((j + 1, i + 1));
                }
            }
        }
        inv
    }

    pub fn sign(&self) -> i32 {
        if self.inversions().len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    /// `(a b) ∘ self`: swaps the values `a` and `b` among the images.
    pub fn left_transpose(&self, a: usize, b: usize) -> Permutation {
        Permutation(
            self.0
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePermutation(s.to_string()))?;
        Permutation::new(images)
    }
}

/// All `d!` permutations of `{1..d}` in lexicographic order of their images.
pub fn permutations_of(d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d);
    let mut used = vec![false; d];
    permutations_rec(d, &mut current, &mut used, &mut out);
    out
}

fn permutations_rec(d: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if current.len() == d {
        out.push(Permutation(current.clone()));
        return;
    }
    for v in 1..=d {
        if !used[v - 1] {
            used[v - 1] = true;
            current.push(v);
            permutations_rec(d, current, used, out);
            current.pop();
            used[v - 1] = false;
        }
    }
}

/// `(σ·μ)_i = μ_i - i + σ(i)`, with `μ` padded by zeros to the degree of `σ`.
pub fn sigma_dot(sigma: &Permutation, mu: &Partition) -> Vec<i64> {
    let mu = mu.padded(sigma.degree());
    (1..=sigma.degree()).map(|i| mu[i - 1] as i64 - i as i64 + sigma.apply(i) as i64).collect()
}

/// `(σ∗μ)_i = μ_{σ⁻¹(i)} - σ⁻¹(i) + i`, so that `(σ∗μ)_{σ(i)} = (σ·μ)_i`.
pub fn sigma_star(sigma: &Permutation, mu: &Partition) -> Composition {
    let dot = sigma_dot(sigma, mu);
    let mut parts = vec![0; sigma.degree()];
    for (i, v) in dot.into_iter().enumerate() {
        parts[sigma.apply(i + 1) - 1] = v;
    }
    Composition(parts)
}

/// Suffix sums: `(Σμ)_i = μ_i + … + μ_d`.
pub fn sum_mu(mu: &Partition) -> Vec<usize> {
    let mut out: Vec<usize> = mu
        .parts()
        .iter()
        .rev()
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    out.reverse();
    out
}

/// The hook `(a|b) = (a+1, 1^b)` in Frobenius notation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookShape {
    pub arm: usize,
    pub leg: usize,
}

impl HookShape {
    pub fn new(arm: usize, leg: usize) -> Self {
        HookShape { arm, leg }
    }

    pub fn size(&self) -> usize {
        self.arm + self.leg + 1
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = vec![self.arm + 1];
        parts.extend(std::iter::repeat_n(1, self.leg));
        Partition(parts)
    }
}

impl fmt::Display for HookShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.arm, self.leg)
    }
}

impl FromStr for HookShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseHook(s.to_string());
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t.split_once([',', '|']).ok_or_else(err)?;
        Ok(HookShape::new(a.trim().parse().map_err(|_| err())?, b.trim().parse().map_err(|_| err())?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4), vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[5, 4, 3, 3]).conjugate(), p(&[4, 4, 4, 2, 1]));
        assert_eq!(p(&[6]).conjugate(), Partition::column(6));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        for n in 0..=10 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(z_of(&"1^3".parse().unwrap()), BigInt::from(6));
        assert_eq!(z_of(&"3^1".parse().unwrap()), BigInt::from(3));
        assert_eq!(z_of(&"1^1 2^1".parse().unwrap()), BigInt::from(2));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=8 {
            let total: BigInt = partitions_of(n).iter().map(|a| factorial(n) / z_of(&a.cycle_type())).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn bracket() {
        assert_eq!(mu_bracket_n(&Partition::empty(), 5), Some(p(&[5])));
        assert_eq!(mu_bracket_n(&p(&[2, 1]), 5), Some(p(&[2, 2, 1])));
        assert_eq!(mu_bracket_n(&p(&[3]), 5), None);
    }

    #[test]
    fn dot_and_star() {
        let id = Permutation::identity(2);
        assert_eq!(sigma_dot(&id, &p(&[5, 3])), vec![5, 3]);
        let s = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(sigma_dot(&s, &p(&[3, 2, 2])), vec![4, 1, 2]);
        assert_eq!(sigma_star(&s, &p(&[3, 2, 2])).parts(), &[1, 4, 2]);
        let t = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(sigma_dot(&t, &p(&[1, 1])), vec![2, 0]);
        assert_eq!(sigma_star(&Permutation::identity(3), &p(&[3, 2, 2])).parts(), &[3, 2, 2]);
    }

    #[test]
    fn star_rearranges_dot() {
        for n in 1..=7 {
            for mu in partitions_of(n).into_iter().filter(|m| m.len() <= 4) {
                for sigma in permutations_of(mu.len()) {
                    let mut a = sigma_dot(&sigma, &mu);
                    let mut b = sigma_star(&sigma, &mu).parts().to_vec();
                    assert_eq!(b.iter().sum::<i64>(), n as i64);
                    a.sort();
                    b.sort();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn suffix_sums() {
        assert_eq!(sum_mu(&p(&[5, 3])), vec![8, 3]);
        assert_eq!(sum_mu(&p(&[3, 2, 2])), vec![7, 4, 2]);
        assert_eq!(sum_mu(&p(&[6])), vec![6]);
    }

    #[test]
    fn permutation_signs() {
        let s2 = permutations_of(2);
        assert_eq!(s2, vec![Permutation::identity(2), Permutation::new(vec![2, 1]).unwrap()]);
        assert_eq!(s2.iter().map(|s| s.sign()).collect::<Vec<_>>(), vec![1, -1]);
        assert_eq!(Permutation::new(vec![2, 3, 1]).unwrap().sign(), 1);
        assert_eq!(permutations_of(4).len(), 24);
        assert_eq!(permutations_of(0), vec![Permutation::identity(0)]);
    }

    #[test]
    fn left_transposition_matches_compose() {
        for sigma in permutations_of(4) {
            let t = Permutation::transposition(4, 2, 3);
            assert_eq!(sigma.left_transpose(2, 3), t.compose(&sigma));
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("5,4,3,3".parse::<Partition>().unwrap(), p(&[5, 4, 3, 3]));
        assert!("3,4".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        let ct: CycleType = "1^2 3^1".parse().unwrap();
        assert_eq!(ct.x(1), 2);
        assert_eq!(ct.x(3), 1);
        assert_eq!(ct.n(), 5);
        assert_eq!(ct.to_string(), "1^2 3^1");
        assert_eq!(ct.to_partition(), p(&[3, 1, 1]));
        assert_eq!("1,1".parse::<HookShape>().unwrap(), HookShape::new(1, 1));
        assert_eq!(HookShape::new(2, 1).to_partition(), p(&[3, 1]));
    }
}
