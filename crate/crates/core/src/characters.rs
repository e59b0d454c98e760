//! Class functions on `S_n`: irreducible characters via Murnaghan–Nakayama,
//! the tensor-space character polynomials `H_k` and `E_l`, the hook
//! character `S_(a|b)`, two evaluations of the Specht polynomial `q_μ`, and
//! the `z_α`-weighted inner product.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binomial, factorial, partitions_of, sum_mu, z_of, CycleType, HookShape, Partition};
use crate::error::{Error, Result};
use crate::genfunc::expand_pd;
use crate::series::MultiSeries;

/// A class function of `S_n`, one exact value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<CycleType, BigRational>,
}

impl ClassFunction {
    /// Tabulates `f` on every cycle type of `S_n`.
    pub fn from_fn<F>(n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&CycleType) -> Result<BigInt>,
    {
        let mut values = BTreeMap::new();
        for alpha in partitions_of(n) {
            let ct = alpha.cycle_type();
            let v = f(&ct)?;
            values.insert(ct, BigRational::from_integer(v));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn character(lambda: &Partition) -> Result<Self> {
        ClassFunction::from_fn(lambda.size(), |ct| chi_irreducible(lambda, ct))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, ct: &CycleType) -> Option<&BigRational> {
        self.values.get(ct)
    }

    pub fn values(&self) -> impl Iterator<Item = (&CycleType, &BigRational)> {
        self.values.iter()
    }

    /// Pointwise product.
    pub fn product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        let values = self.values.iter().map(|(ct, v)| (ct.clone(), v * &other.values[ct])).collect();
        Ok(ClassFunction { n: self.n, values })
    }
}

/// `⟨f, g⟩_n = Σ_{α ⊢ n} f(α) g(α) / z_α`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.n != g.n {
        return Err(Error::SizeMismatch { expected: f.n, found: g.n });
    }
    let mut acc = BigRational::zero();
    for (ct, fv) in &f.values {
        let gv = g.values.get(ct).ok_or(Error::SizeMismatch { expected: f.n, found: ct.n() })?;
        acc += fv * gv / BigRational::from_integer(z_of(ct));
    }
    Ok(acc)
}

/// Inner product that must be a nonnegative integer (a multiplicity).
pub fn multiplicity(f: &ClassFunction, g: &ClassFunction) -> Result<BigInt> {
    let ip = inner_product(f, g)?;
    if !ip.is_integer() {
        return Err(Error::NonIntegral(ip.to_string()));
    }
    let v = ip.to_integer();
    if v.is_negative() {
        return Err(Error::NegativeMultiplicity(v.to_string()));
    }
    Ok(v)
}

static CHI_MEMO: LazyLock<RwLock<HashMap<(Partition, Partition), BigInt>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// `χ_λ(α)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn chi_irreducible(lambda: &Partition, alpha: &CycleType) -> Result<BigInt> {
    if lambda.size() != alpha.n() {
        return Err(Error::SizeMismatch { expected: lambda.size(), found: alpha.n() });
    }
    Ok(chi_rec(lambda, &alpha.to_partition()))
}

fn chi_rec(lambda: &Partition, alpha: &Partition) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), alpha.clone());
    if let Some(v) = CHI_MEMO.read().unwrap().get(&key) {
        return v.clone();
    }
    let r = alpha.part(1);
    let rest = alpha.remove_first_row();
    let len = lambda.len();
    let beta: Vec<usize> = (1..=len).map(|i| lambda.part(i) + len - i).collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&g| g > target && g < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = moved.iter().enumerate().map(|(i, &g)| g - (len - 1 - i)).collect();
        let smaller = Partition::new(parts).expect("rim hook removal yields a partition");
        let v = chi_rec(&smaller, &rest);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    CHI_MEMO.write().unwrap().insert(key, total.clone());
    total
}

/// `sgn(α) = Π_i (-1)^{(i-1) x_i}`.
pub fn sgn_value(alpha: &CycleType) -> i32 {
    let odd: usize = alpha.multiplicities().iter().enumerate().map(|(i, &x)| i * x).sum();
    if odd.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `dim V_λ = n! / Π hook lengths`.
pub fn hook_length_dimension(lambda: &Partition) -> BigInt {
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= row - j + conj.parts()[j] - i - 1;
        }
    }
    factorial(lambda.size()) / hooks
}

fn multichoose(x: usize, b: usize) -> BigInt {
    if b == 0 {
        BigInt::one()
    } else {
        binomial(x + b - 1, b)
    }
}

/// Multiplicity vectors `b` of the partitions of `k`.
fn multiplicity_vectors(k: usize) -> Vec<Vec<usize>> {
    partitions_of(k).iter().map(|p| p.cycle_type().multiplicities().to_vec()).collect()
}

fn x_at(x: &[usize], i: usize) -> usize {
    x.get(i - 1).copied().unwrap_or(0)
}

/// `H_k(x) = Σ_{β ⊢ k} Π_i multichoose(x_i, b_i)`, the character of `Sym^k`.
pub fn h_poly(k: usize, x: &[usize]) -> BigInt {
    multiplicity_vectors(k)
        .iter()
        .map(|b| b.iter().enumerate().fold(BigInt::one(), |acc, (i, &bi)| acc * multichoose(x_at(x, i + 1), bi)))
        .sum()
}

/// `E_l(x) = Σ_{β ⊢ l} Π_i (-1)^{(i-1) b_i} binom(x_i, b_i)`, the character of `∧^l`.
pub fn e_poly(l: usize, x: &[usize]) -> BigInt {
    multiplicity_vectors(l)
        .iter()
        .map(|b| {
            b.iter().enumerate().fold(BigInt::one(), |acc, (i, &bi)| {
                let term = binomial(x_at(x, i + 1), bi);
                if (i * bi) % 2 == 1 {
                    acc * -term
                } else {
                    acc * term
                }
            })
        })
        .sum()
}

pub fn h_value(k: usize, alpha: &CycleType) -> BigInt {
    h_poly(k, alpha.multiplicities())
}

pub fn e_value(l: usize, alpha: &CycleType) -> BigInt {
    e_poly(l, alpha.multiplicities())
}

/// `S_(a|b) = Σ_{0≤j≤b} (-1)^j H_{a+1+j} E_{b-j}`, the character of `W_(a|b)`.
pub fn s_hook(h: HookShape, alpha: &CycleType) -> BigInt {
    (0..=h.leg)
        .map(|j| {
            let t = h_value(h.arm + 1 + j, alpha) * e_value(h.leg - j, alpha);
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

static SPECHT_MEMO: LazyLock<RwLock<HashMap<(Partition, CycleType), BigInt>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// `q_μ(x)` by the Garsia–Goupil recursion with the umbral operator expanded:
///
/// `q_μ(x) = Σ_{α ⊢ |μ|} q_{r(μ)}(α)/z_α · Π_i Σ_{b ≤ a_i} binom(a_i,b) (-1)^{a_i-b} i^b b! binom(x_i,b)`.
///
/// `x` is any vector of nonnegative integers, `x[i-1] = x_i`.
pub fn specht_eval_recursive(mu: &Partition, x: &[usize]) -> Result<BigInt> {
    if mu.is_empty() {
        return Ok(BigInt::one());
    }
    let inner = mu.remove_first_row();
    let mut acc = BigRational::zero();
    for alpha in partitions_of(mu.size()) {
        let ct = alpha.cycle_type();
        let q_inner = specht_memo(&inner, &ct)?;
        if q_inner.is_zero() {
            continue;
        }
        let mut prod = BigInt::one();
        for (idx, &a) in ct.multiplicities().iter().enumerate() {
            let i = idx + 1;
            let xi = x_at(x, i);
            let factor: BigInt = (0..=a)
                .map(|b| {
                    let t = binomial(a, b) * BigInt::from(i).pow(b as u32) * factorial(b) * binomial(xi, b);
                    if (a - b) % 2 == 1 {
                        -t
                    } else {
                        t
                    }
                })
                .sum();
            prod *= factor;
            if prod.is_zero() {
                break;
            }
        }
        acc += BigRational::new(q_inner * prod, z_of(&ct));
    }
    if !acc.is_integer() {
        return Err(Error::NonIntegral(acc.to_string()));
    }
    Ok(acc.to_integer())
}

fn specht_memo(mu: &Partition, ct: &CycleType) -> Result<BigInt> {
    let key = (mu.clone(), ct.clone());
    if let Some(v) = SPECHT_MEMO.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = specht_eval_recursive(mu, ct.multiplicities())?;
    SPECHT_MEMO.write().unwrap().insert(key, v.clone());
    Ok(v)
}

/// `q_μ(x)` as the coefficient of `w^{Σμ}` in
/// `P_d(w) · Π_i (1 + w_1^i + w_1^i w_2^i + … + w_1^i⋯w_d^i)^{x_i}`,
/// the product being the closed form of the chained-binomial sum over
/// `β_1 ⊇ … ⊇ β_d`.
pub fn specht_eval_series(mu: &Partition, x: &[usize]) -> BigInt {
    let d = mu.len();
    if d == 0 {
        return BigInt::one();
    }
    let target = sum_mu(mu);
    let bounds: Vec<u32> = target.iter().map(|&t| t as u32).collect();
    let mut g = MultiSeries::one(bounds.clone());
    for i in 1..=mu.size() {
        let xi = x_at(x, i);
        if xi == 0 {
            continue;
        }
        let mut chain = MultiSeries::one(bounds.clone());
        for k in 1..=d {
            let mut e = vec![0u32; d];
            for slot in e.iter_mut().take(k) {
                *slot = i as u32;
            }
            chain.add_term(e, BigInt::one());
        }
        g = &g * &chain.pow(xi as u32);
    }
    let p = expand_pd(d, &bounds);
    let target: Vec<i64> = target.iter().map(|&t| t as i64).collect();
    (&p * &g).coeff(&target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_sign_and_standard() {
        for n in 1..=6 {
            for alpha in partitions_of(n) {
                let c = alpha.cycle_type();
                assert_eq!(chi_irreducible(&Partition::row(n), &c).unwrap(), BigInt::one());
                assert_eq!(chi_irreducible(&Partition::column(n), &c).unwrap(), BigInt::from(sgn_value(&c)));
            }
        }
        assert_eq!(chi_irreducible(&p(&[2, 1]), &ct("3^1")).unwrap(), BigInt::from(-1));
        assert!(chi_irreducible(&p(&[2, 1]), &ct("1^2")).is_err());
    }

    #[test]
    fn sign_values() {
        assert_eq!(sgn_value(&ct("1^5")), 1);
        assert_eq!(sgn_value(&ct("2^1")), -1);
        assert_eq!(sgn_value(&ct("3^1")), 1);
    }

    #[test]
    fn sign_twist_conjugates() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                for alpha in partitions_of(n) {
                    let c = alpha.cycle_type();
                    let lhs = BigInt::from(sgn_value(&c)) * chi_irreducible(&mu, &c).unwrap();
                    assert_eq!(lhs, chi_irreducible(&mu.conjugate(), &c).unwrap());
                }
            }
        }
    }

    #[test]
    fn orthonormality() {
        for n in 1..=6 {
            let chars: Vec<_> = partitions_of(n).iter().map(|l| ClassFunction::character(l).unwrap()).collect();
            for (i, f) in chars.iter().enumerate() {
                for (j, g) in chars.iter().enumerate() {
                    let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(inner_product(f, g).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn dimensions_match_identity_character() {
        for n in 1..=7 {
            for lam in partitions_of(n) {
                assert_eq!(hook_length_dimension(&lam), chi_irreducible(&lam, &CycleType::identity(n)).unwrap());
            }
        }
    }

    #[test]
    fn small_tensor_characters() {
        for n in 1..=5 {
            for alpha in partitions_of(n) {
                let c = alpha.cycle_type();
                assert_eq!(h_value(0, &c), BigInt::one());
                assert_eq!(h_value(1, &c), BigInt::from(c.x(1)));
                assert_eq!(e_value(0, &c), BigInt::one());
                assert_eq!(e_value(1, &c), BigInt::from(c.x(1)));
            }
            let id = CycleType::identity(n);
            assert_eq!(h_value(2, &id), BigInt::from(n * (n + 1) / 2));
            assert_eq!(e_value(2, &id), BigInt::from(n * (n - 1) / 2));
        }
    }

    #[test]
    fn hook_character_values() {
        for n in 1..=5 {
            for alpha in partitions_of(n) {
                let c = alpha.cycle_type();
                assert_eq!(s_hook(HookShape::new(0, 0), &c), BigInt::from(c.x(1)));
            }
        }
        assert_eq!(s_hook(HookShape::new(1, 1), &ct("1^3")), BigInt::from(8));
        assert_eq!(s_hook(HookShape::new(1, 1), &ct("3^1")), BigInt::from(-1));
    }

    #[test]
    fn hook_inner_product_example() {
        let s = ClassFunction::from_fn(3, |c| Ok(s_hook(HookShape::new(1, 1), c))).unwrap();
        let chi = ClassFunction::character(&p(&[2, 1])).unwrap();
        assert_eq!(inner_product(&s, &chi).unwrap(), BigRational::from_integer(BigInt::from(3)));
    }

    #[test]
    fn specht_small_cases() {
        for x in [vec![], vec![3], vec![0, 2, 1], vec![5, 1]] {
            assert_eq!(specht_eval_recursive(&Partition::empty(), &x).unwrap(), BigInt::one());
            assert_eq!(specht_eval_series(&Partition::empty(), &x), BigInt::one());
            let x1 = x.first().copied().unwrap_or(0) as i64;
            assert_eq!(specht_eval_recursive(&p(&[1]), &x).unwrap(), BigInt::from(x1 - 1));
            assert_eq!(specht_eval_series(&p(&[1]), &x), BigInt::from(x1 - 1));
        }
        // dim V_(3,2,1) = 16
        assert_eq!(specht_eval_recursive(&p(&[2, 1]), &[6]).unwrap(), BigInt::from(16));
        assert_eq!(specht_eval_series(&p(&[1]), &[4]), BigInt::from(3));
        let x = [1, 1, 1];
        assert_eq!(specht_eval_series(&p(&[2, 1]), &x), specht_eval_recursive(&p(&[2, 1]), &x).unwrap());
    }

    #[test]
    fn specht_below_stable_range_is_still_a_polynomial() {
        // x = 1^1 (n = 1) is below the stable range for μ = (1); the value is x_1 - 1 = 0.
        assert_eq!(specht_eval_recursive(&p(&[1]), &[1]).unwrap(), BigInt::zero());
        for x in [vec![0, 0, 2], vec![2, 3], vec![0, 1, 0, 1]] {
            for mu in [p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 1])] {
                assert_eq!(specht_eval_series(&mu, &x), specht_eval_recursive(&mu, &x).unwrap());
            }
        }
    }
}
