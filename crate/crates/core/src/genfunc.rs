//! Generating functions: the tableau series `F(q, v, t)`, its coefficients
//! `κ^α_(a|b)`, the alternating sums over `S_d`, the `Υ` identity and the
//! polynomial `P_d(w)`.
//!
//! Variable order in every series built here is `(q, v, t_1, …, t_d)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{permutations_of, sigma_dot, Composition, HookShape, Partition};
use crate::error::{Error, Result};
use crate::series::{LaurentSeries, MultiSeries};

/// `F = Π_i Π_{j≥0} (1 + q^j t_i) / (1 - q^j v t_i)` truncated to the given
/// bounds. Factors with `j > max_q` only contribute their constant term
/// inside the box, so the product stops at `j = max_q`.
pub fn expand_f(d: usize, max_q: u32, max_v: u32, max_t: &[u32]) -> MultiSeries {
    expand_f_capped(d, max_q, max_v, max_t, max_q)
}

/// [`expand_f`] with an explicit cap on `j`.
pub fn expand_f_capped(d: usize, max_q: u32, max_v: u32, max_t: &[u32], j_cap: u32) -> MultiSeries {
    assert_eq!(max_t.len(), d, "one t-bound per row");
    let mut bounds = vec![max_q, max_v];
    bounds.extend_from_slice(max_t);
    let arity = bounds.len();
    let mut f = MultiSeries::one(bounds.clone());
    for i in 0..d {
        for j in 0..=j_cap {
            let mut red = vec![0u32; arity];
            red[0] = j;
            red[2 + i] = 1;
            let plus = &MultiSeries::one(bounds.clone()) + &MultiSeries::monomial(bounds.clone(), red, BigInt::one());
            f = &f * &plus;

            let mut blue = vec![0u32; arity];
            blue[0] = j;
            blue[1] = 1;
            blue[2 + i] = 1;
            let geo = MultiSeries::geometric(bounds.clone(), &blue).expect("v-exponent is positive");
            f = &f * &geo;
        }
    }
    f
}

/// Cached coefficients of the one-row factor `F_1(q, v, t)`.
///
/// `F` is a product of identical one-row factors, so `κ^α_(a|b)` is the
/// convolution over the parts of `α` of the one-row coefficients
/// `[q^a v^b t^m] F_1`. Values are cached per sorted `α`.
pub struct KappaTable {
    max_part: usize,
    max_a: usize,
    max_b: usize,
    /// `row[m][a][b]`
    row: Vec<Vec<Vec<BigInt>>>,
    cache: RwLock<HashMap<(Vec<usize>, usize, usize), BigInt>>,
}

impl KappaTable {
    pub fn new(max_part: usize, max_a: usize, max_b: usize) -> Self {
        let f1 = expand_f(1, max_a as u32, max_b as u32, &[max_part as u32]);
        let row = (0..=max_part)
            .map(|m| {
                (0..=max_a).map(|a| (0..=max_b).map(|b| f1.coeff(&[a as i64, b as i64, m as i64])).collect()).collect()
            })
            .collect();
        KappaTable { max_part, max_a, max_b, row, cache: RwLock::new(HashMap::new()) }
    }

    pub fn covers(&self, max_part: usize, a: usize, b: usize) -> bool {
        max_part <= self.max_part && a <= self.max_a && b <= self.max_b
    }

    /// `κ^α_(a|b)`; zero when `α` has a negative part.
    pub fn kappa(&self, alpha: &[i64], a: usize, b: usize) -> BigInt {
        if alpha.iter().any(|&p| p < 0) {
            return BigInt::zero();
        }
        let mut parts: Vec<usize> = alpha.iter().map(|&p| p as usize).collect();
        parts.sort_unstable();
        let largest = parts.last().copied().unwrap_or(0);
        assert!(self.covers(largest, a, b), "kappa table too small for {alpha:?}, a={a}, b={b}");
        let key = (parts, a, b);
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.convolve(&key.0, a, b);
        self.cache.write().unwrap().insert(key, v.clone());
        v
    }

    fn convolve(&self, parts: &[usize], a: usize, b: usize) -> BigInt {
        // acc[x][y] = coefficient of q^x v^y over the parts processed so far
        let mut acc = vec![vec![BigInt::zero(); b + 1]; a + 1];
        acc[0][0] = BigInt::one();
        for &m in parts {
            let mut next = vec![vec![BigInt::zero(); b + 1]; a + 1];
            for x in 0..=a {
                for y in 0..=b {
                    if acc[x][y].is_zero() {
                        continue;
                    }
                    for dx in 0..=a - x {
                        for dy in 0..=b - y {
                            let c = &self.row[m][dx][dy];
                            if !c.is_zero() {
                                next[x + dx][y + dy] += &acc[x][y] * c;
                            }
                        }
                    }
                }
            }
            acc = next;
        }
        acc[a][b].clone()
    }

    /// `Σ_{σ ∈ S_d} sgn(σ) κ^{σ·μ}_(a|b)` with `d = l(μ)`.
    pub fn signed_sum(&self, mu: &Partition, a: usize, b: usize) -> BigInt {
        permutations_of(mu.len())
            .iter()
            .map(|sigma| {
                let k = self.kappa(&sigma_dot(sigma, mu), a, b);
                if sigma.sign() > 0 {
                    k
                } else {
                    -k
                }
            })
            .sum()
    }

    /// `Σ_{j=0}^{b} (-1)^j Σ_σ sgn(σ) κ^{σ·μ}_(a+1+j | b-j)`.
    pub fn restriction(&self, mu: &Partition, h: HookShape) -> Result<BigInt> {
        if mu.is_empty() || mu.parts().iter().all(|&p| p == 1) {
            return Err(Error::Gate(format!("mu=({mu}) must differ from (1^n)")));
        }
        Ok((0..=h.leg)
            .map(|j| {
                let s = self.signed_sum(mu, h.arm + 1 + j, h.leg - j);
                if j % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .sum())
    }
}

/// Table large enough for every `κ` needed by partitions of `n` and hooks with
/// arm `≤ a_max`, leg `≤ b_max`.
pub fn kappa_table_for(n: usize, a_max: usize, b_max: usize) -> KappaTable {
    KappaTable::new(n, a_max + 1 + b_max, b_max)
}

/// `κ^α_(a|b) = [q^a v^b t^α] F`.
pub fn kappa(alpha: &Composition, a: usize, b: usize) -> BigInt {
    if !alpha.is_valid() {
        return BigInt::zero();
    }
    let largest = alpha.parts().iter().copied().max().unwrap_or(0) as usize;
    KappaTable::new(largest, a, b).kappa(alpha.parts(), a, b)
}

/// `Σ_{σ ∈ S_d} sgn(σ) κ^{σ·μ}_(a|b)`.
pub fn kappa_signed_sum(mu: &Partition, a: usize, b: usize) -> BigInt {
    KappaTable::new(mu.size(), a, b).signed_sum(mu, a, b)
}

/// The alternating double sum over `j` and `σ`, evaluated at `μ ≠ (1^n)`.
/// It equals the multiplicity of `V_{μ^t}` in `W_(a|b)`.
pub fn restriction_by_kappa(mu: &Partition, h: HookShape) -> Result<BigInt> {
    kappa_table_for(mu.size(), h.arm, h.leg).restriction(mu, h)
}

/// `Υ = Π_{i>j} (1 - t_i/t_j)` over `d` variables, fully expanded.
pub fn upsilon(d: usize, window: i64) -> LaurentSeries {
    upsilon_padded(d, 0, window)
}

/// `Υ` over `prefix + d` variables, the first `prefix` of which are untouched.
fn upsilon_padded(d: usize, prefix: usize, window: i64) -> LaurentSeries {
    let arity = prefix + d;
    let mut u = LaurentSeries::one(arity, window);
    for j in 0..d {
        for i in j + 1..d {
            let mut factor = LaurentSeries::one(arity, window);
            let mut e = vec![0i64; arity];
            e[prefix + i] = 1;
            e[prefix + j] = -1;
            factor.add_term(e, -BigInt::one());
            u = &u * &factor;
        }
    }
    u
}

/// Checks `[t^μ](Υ F) = Σ_σ sgn(σ) [t^{σ·μ}] F` coefficientwise in the
/// remaining variables. The last `d` variables of `f` are `t_1..t_d`.
pub fn verify_upsilon(d: usize, f: &MultiSeries, mu: &Partition) -> Result<bool> {
    if d > f.arity() || mu.len() > d {
        return Err(Error::Precondition(format!(
            "need l(mu) <= d <= arity, got l(mu)={}, d={d}, arity={}",
            mu.len(),
            f.arity()
        )));
    }
    let prefix = f.arity() - d;
    let window = f.bounds().iter().copied().max().unwrap_or(0) as i64 + d as i64;
    let product = &upsilon_padded(d, prefix, window) * &LaurentSeries::from_multi(f, window);
    let target: Vec<i64> = mu.padded(d).iter().map(|&x| x as i64).collect();

    let mut lhs: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (e, c) in product.terms() {
        if e[prefix..] == target[..] {
            lhs.insert(e[..prefix].to_vec(), c.clone());
        }
    }

    let mut rhs: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for sigma in permutations_of(d) {
        let shifted = sigma_dot(&sigma, mu);
        for (e, c) in f.terms() {
            if e[prefix..].iter().zip(&shifted).all(|(&x, &y)| x as i64 == y) {
                let key: Vec<i64> = e[..prefix].iter().map(|&x| x as i64).collect();
                let entry = rhs.entry(key).or_insert_with(BigInt::zero);
                *entry += if sigma.sign() > 0 { c.clone() } else { -c.clone() };
            }
        }
    }
    rhs.retain(|_, c| !c.is_zero());
    Ok(lhs == rhs)
}

/// `P_d(w) = (1-w_1)(1-w_1w_2)⋯(1-w_1⋯w_d) · P_{d-1}(w_2, …, w_d)`, `P_1(w) = 1 - w`.
pub fn expand_pd(d: usize, max_w: &[u32]) -> MultiSeries {
    assert_eq!(max_w.len(), d, "one bound per variable");
    let bounds = max_w.to_vec();
    let mut p = MultiSeries::one(bounds.clone());
    for start in 0..d {
        for end in start..d {
            let mut e = vec![0u32; d];
            for slot in &mut e[start..=end] {
                *slot = 1;
            }
            let factor = &MultiSeries::one(bounds.clone()) - &MultiSeries::monomial(bounds.clone(), e, BigInt::one());
            p = &p * &factor;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn comp(parts: &[i64]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn single_row_coefficients() {
        let f = expand_f(1, 3, 3, &[3]);
        assert_eq!(f.coeff(&[0, 0, 1]), BigInt::one());
        assert_eq!(f.coeff(&[1, 1, 2]), BigInt::from(2));
        assert_eq!(f.coeff(&[0, 0, 4]), BigInt::zero());
        assert_eq!(kappa(&comp(&[1]), 0, 0), BigInt::one());
        assert_eq!(kappa(&comp(&[2]), 1, 1), BigInt::from(2));
        assert_eq!(kappa(&comp(&[-1, 3]), 2, 1), BigInt::zero());
    }

    #[test]
    fn raising_the_j_cap_changes_nothing() {
        let a = expand_f(2, 3, 2, &[3, 2]);
        let b = expand_f_capped(2, 3, 2, &[3, 2], 6);
        assert_eq!(a, b);
    }

    #[test]
    fn kappa_table_matches_full_expansion() {
        let f = expand_f(3, 4, 3, &[3, 3, 3]);
        let table = KappaTable::new(3, 4, 3);
        for (e, c) in f.terms() {
            let alpha: Vec<i64> = e[2..].iter().map(|&x| x as i64).collect();
            assert_eq!(&table.kappa(&alpha, e[0] as usize, e[1] as usize), c);
        }
        // and the zero coefficients too
        for a in 0..=4 {
            for b in 0..=3 {
                for t in 0..=3i64 {
                    let exps = [a as i64, b as i64, t, 3 - t, 1];
                    assert_eq!(f.coeff(&exps), table.kappa(&exps[2..], a, b));
                }
            }
        }
    }

    #[test]
    fn degenerate_signed_sum_is_plain_kappa() {
        for n in 1..=5 {
            for a in 0..=3 {
                for b in 0..=2 {
                    assert_eq!(kappa_signed_sum(&p(&[n]), a, b), kappa(&comp(&[n as i64]), a, b));
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(restriction_by_kappa(&p(&[2, 1]), HookShape::new(1, 1)).unwrap(), BigInt::from(3));
        assert_eq!(restriction_by_kappa(&p(&[2]), HookShape::new(0, 1)).unwrap(), BigInt::one());
        assert!(restriction_by_kappa(&p(&[1, 1]), HookShape::new(0, 1)).is_err());
        // b + 1 > n forces zero
        assert_eq!(restriction_by_kappa(&p(&[2]), HookShape::new(1, 2)).unwrap(), BigInt::zero());
        assert_eq!(restriction_by_kappa(&p(&[3]), HookShape::new(0, 3)).unwrap(), BigInt::zero());
    }

    #[test]
    fn upsilon_has_one_monomial_per_permutation() {
        for d in 1..=4 {
            let u = upsilon(d, d as i64);
            assert_eq!(u.len(), (1..=d).product::<usize>());
            for sigma in permutations_of(d) {
                let e: Vec<i64> = (1..=d).map(|i| i as i64 - sigma.apply(i) as i64).collect();
                assert_eq!(u.coeff(&e), BigInt::from(sigma.sign()));
            }
        }
    }

    #[test]
    fn upsilon_identity_on_f() {
        let f1 = expand_f(1, 3, 2, &[3]);
        assert!(verify_upsilon(1, &f1, &p(&[2])).unwrap());
        let f2 = expand_f(2, 3, 2, &[3, 3]);
        assert!(verify_upsilon(2, &f2, &p(&[2, 1])).unwrap());
        for mu in partitions_of(4).into_iter().filter(|m| m.len() <= 2) {
            assert!(verify_upsilon(2, &f2, &mu).unwrap());
        }
    }

    #[test]
    fn pd_expansions() {
        let p1 = expand_pd(1, &[3]);
        let mut expect = MultiSeries::one(vec![3]);
        expect.add_term(vec![1], -BigInt::one());
        assert_eq!(p1, expect);

        let b = vec![3, 3];
        let one = MultiSeries::one(b.clone());
        let w1 = &one - &MultiSeries::monomial(b.clone(), vec![1, 0], BigInt::one());
        let w12 = &one - &MultiSeries::monomial(b.clone(), vec![1, 1], BigInt::one());
        let w2 = &one - &MultiSeries::monomial(b.clone(), vec![0, 1], BigInt::one());
        assert_eq!(expand_pd(2, &b), &(&w1 * &w12) * &w2);

        for d in 1..=4 {
            let pd = expand_pd(d, &vec![2; d]);
            assert_eq!(pd.coeff(&vec![0; d]), BigInt::one());
        }
    }
}
