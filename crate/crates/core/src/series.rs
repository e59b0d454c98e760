//! Sparse truncated multivariate power series with big-integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn accumulate<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, coeff: BigInt) {
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// A power series truncated at a per-variable degree bound.
///
/// Exponent vectors never exceed their bounds and absent keys are zero, so
/// multiplication discards every product term that leaves the box.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiSeries {
    bounds: Vec<u32>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiSeries {
    pub fn zero(bounds: Vec<u32>) -> Self {
        MultiSeries { bounds, terms: BTreeMap::new() }
    }

    pub fn one(bounds: Vec<u32>) -> Self {
        let arity = bounds.len();
        MultiSeries::monomial(bounds, vec![0; arity], BigInt::one())
    }

    /// `coeff · x^exps`, or zero if `exps` leaves the bounds.
    pub fn monomial(bounds: Vec<u32>, exps: Vec<u32>, coeff: BigInt) -> Self {
        assert_eq!(bounds.len(), exps.len(), "monomial arity");
        let mut s = MultiSeries::zero(bounds);
        s.add_term(exps, coeff);
        s
    }

    /// `1 / (1 - x^exps) = Σ_k x^{k·exps}`, truncated. The monomial must be nonconstant.
    pub fn geometric(bounds: Vec<u32>, exps: &[u32]) -> Result<Self> {
        if exps.iter().all(|&e| e == 0) {
            return Err(Error::SeriesShape("geometric series of a constant".into()));
        }
        let mut s = MultiSeries::zero(bounds);
        let mut k = 0u32;
        loop {
            let e: Vec<u32> = exps.iter().map(|&x| x * k).collect();
            if !s.in_bounds(&e) {
                break;
            }
            s.terms.insert(e, BigInt::one());
            k += 1;
        }
        Ok(s)
    }

    pub fn arity(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    fn in_bounds(&self, exps: &[u32]) -> bool {
        exps.iter().zip(&self.bounds).all(|(e, b)| e <= b)
    }

    /// Adds `coeff · x^exps` in place, dropping it when out of bounds.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() || !self.in_bounds(&exps) {
            return;
        }
        accumulate(&mut self.terms, exps, coeff);
    }

    /// Coefficient of `x^exps`; negative or out-of-bounds exponents give zero.
    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        if exps.len() != self.arity() || exps.iter().any(|&e| e < 0) {
            return BigInt::zero();
        }
        let key: Vec<u32> = exps.iter().map(|&e| e as u32).collect();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    fn check_shape(&self, other: &MultiSeries) -> Result<()> {
        if self.bounds != other.bounds {
            return Err(Error::SeriesShape(format!("bounds {:?} vs {:?}", self.bounds, other.bounds)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check_shape(other)?;
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            'inner: for (eb, cb) in &other.terms {
                let mut e = Vec::with_capacity(ea.len());
                for ((x, y), b) in ea.iter().zip(eb).zip(&self.bounds) {
                    let s = x + y;
                    if s > *b {
                        continue 'inner;
                    }
                    e.push(s);
                }
                *acc.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(MultiSeries { bounds: self.bounds.clone(), terms: acc })
    }

    pub fn pow(&self, mut k: u32) -> MultiSeries {
        let mut result = MultiSeries::one(self.bounds.clone());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> MultiSeries {
        let mut out = MultiSeries::zero(self.bounds.clone());
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    /// The same series viewed under larger (or equal) bounds.
    pub fn with_bounds(&self, bounds: Vec<u32>) -> MultiSeries {
        let mut out = MultiSeries::zero(bounds);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Add for &'a MultiSeries {
    type Output = MultiSeries;
    fn add(self, rhs: &'a MultiSeries) -> MultiSeries {
        self.try_add(rhs).expect("series bounds must agree")
    }
}

impl<'a> Sub for &'a MultiSeries {
    type Output = MultiSeries;
    fn sub(self, rhs: &'a MultiSeries) -> MultiSeries {
        self.try_add(&-rhs).expect("series bounds must agree")
    }
}

impl<'a> Mul for &'a MultiSeries {
    type Output = MultiSeries;
    fn mul(self, rhs: &'a MultiSeries) -> MultiSeries {
        self.try_mul(rhs).expect("series bounds must agree")
    }
}

impl Neg for &MultiSeries {
    type Output = MultiSeries;
    fn neg(self) -> MultiSeries {
        MultiSeries { bounds: self.bounds.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiSeries(bounds={:?}, ", self.bounds)?;
        f.debug_map().entries(self.terms.iter()).finish()?;
        write!(f, ")")
    }
}

/// A Laurent polynomial whose exponents all lie in the window `[-window, window]`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    arity: usize,
    window: i64,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentSeries {
    pub fn zero(arity: usize, window: i64) -> Self {
        LaurentSeries { arity, window, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize, window: i64) -> Self {
        let mut s = LaurentSeries::zero(arity, window);
        s.add_term(vec![0; arity], BigInt::one());
        s
    }

    pub fn from_multi(series: &MultiSeries, window: i64) -> Self {
        let mut s = LaurentSeries::zero(series.arity(), window);
        for (e, c) in series.terms() {
            s.add_term(e.iter().map(|&x| x as i64).collect(), c.clone());
        }
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, coeff: BigInt) {
        assert_eq!(exps.len(), self.arity, "laurent arity");
        if coeff.is_zero() || exps.iter().any(|e| e.abs() > self.window) {
            return;
        }
        accumulate(&mut self.terms, exps, coeff);
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn try_mul(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        if self.arity != other.arity || self.window != other.window {
            return Err(Error::SeriesShape("laurent arity/window mismatch".into()));
        }
        let mut out = LaurentSeries::zero(self.arity, self.window);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }
}

impl<'a> Mul for &'a LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &'a LaurentSeries) -> LaurentSeries {
        self.try_mul(rhs).expect("laurent shapes must agree")
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentSeries(window={}, ", self.window)?;
        f.debug_map().entries(self.terms.iter()).finish()?;
        write!(f, ")")
    }
}
