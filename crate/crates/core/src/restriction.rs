//! Hook restriction coefficients `r_{λ,(a|b)}`, the multiplicity of the
//! Specht module `V_λ` in `W_(a|b)(C^n)` restricted to `S_n`, computed three
//! independent ways:
//!
//! * `oracle`: the inner product `⟨S_(a|b), χ_λ⟩_n`,
//! * `kappa`: the alternating `κ`-sum evaluated at `μ = λ^t`,
//! * `tableau`: supertableaux of shape `λ` in `ST(λ, b, a+1)` with a red
//!   entry at the bottom of the first column.
//!
//! The two combinatorial paths exclude `λ = (n)`.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::characters::{hook_length_dimension, multiplicity, s_hook, ClassFunction};
use crate::combinatorics::{partitions_of, CycleType, HookShape, Partition};
use crate::error::{Error, Result};
use crate::genfunc::{kappa_table_for, KappaTable};
use crate::involutions::inner_sum;
use crate::tableaux::enumerate_st;

/// Class function of `W_(a|b)(C^n)` on `S_n`.
pub fn hook_class_function(n: usize, h: HookShape) -> Result<ClassFunction> {
    ClassFunction::from_fn(n, |ct| Ok(s_hook(h, ct)))
}

/// `⟨S_(a|b), χ_λ⟩_n`, defined for every `λ ⊢ n ≥ 1`.
pub fn r_oracle(lambda: &Partition, h: HookShape) -> Result<BigInt> {
    if lambda.is_empty() {
        return Err(Error::Precondition("lambda must be a partition of n >= 1".into()));
    }
    let s = hook_class_function(lambda.size(), h)?;
    multiplicity(&s, &ClassFunction::character(lambda)?)
}

fn gate(lambda: &Partition) -> Result<()> {
    if lambda.len() <= 1 {
        return Err(Error::Gate(format!(
            "lambda=(n) excluded by Theorem: lambda=({lambda}) has a single row, only the oracle applies"
        )));
    }
    Ok(())
}

/// The `κ` path, indexed by `λ` itself.
pub fn r_kappa(lambda: &Partition, h: HookShape) -> Result<BigInt> {
    gate(lambda)?;
    r_kappa_with(&kappa_table_for(lambda.size(), h.arm, h.leg), lambda, h)
}

fn r_kappa_with(table: &KappaTable, lambda: &Partition, h: HookShape) -> Result<BigInt> {
    gate(lambda)?;
    table.restriction(&lambda.conjugate(), h)
}

/// Supertableaux in `ST(λ, b, a+1)` whose cell `(l(λ), 1)` is red.
pub fn red_foot_supertableaux(lambda: &Partition, h: HookShape) -> Result<Vec<crate::tableaux::Tableau>> {
    gate(lambda)?;
    let l = lambda.len();
    Ok(enumerate_st(lambda, h.leg, (h.arm + 1) as u32)
        .into_iter()
        .filter(|t| t.get(l, 1).is_some_and(|e| e.is_red()))
        .collect())
}

/// The tableau path: the number of [`red_foot_supertableaux`].
pub fn r_tableau(lambda: &Partition, h: HookShape) -> Result<BigInt> {
    Ok(BigInt::from(red_foot_supertableaux(lambda, h)?.len()))
}

/// `Σ_j (-1)^j Δ_j` with `Δ_j = Σ_σ sgn(σ) |Ξ(λ^t, σ, b-j, a+1+j)|`,
/// counted tableau by tableau.
pub fn inner_sum_chain(lambda: &Partition, h: HookShape) -> Result<i64> {
    gate(lambda)?;
    let mu = lambda.conjugate();
    Ok((0..=h.leg)
        .map(|j| {
            let delta = inner_sum(&mu, h.leg - j, (h.arm + 1 + j) as u32);
            if j % 2 == 0 {
                delta
            } else {
                -delta
            }
        })
        .sum())
}

/// `(Σ_λ r(λ, h) dim V_λ, s_(a|b)(1^n))`; the two agree.
pub fn dimension_check(n: usize, h: HookShape) -> Result<(BigInt, BigInt)> {
    let s = hook_class_function(n, h)?;
    let mut total = BigInt::zero();
    for lambda in partitions_of(n) {
        total += multiplicity(&s, &ClassFunction::character(&lambda)?)? * hook_length_dimension(&lambda);
    }
    Ok((total, s_hook(h, &CycleType::identity(n))))
}

fn as_number<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.collect_str(v),
    }
}

fn opt_as_number<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => as_number(x, s),
        None => s.serialize_none(),
    }
}

/// One cell of the sweep. The combinatorial paths are `None` for `λ = (n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientRecord {
    pub n: usize,
    pub lambda: Partition,
    pub hook: HookShape,
    #[serde(serialize_with = "as_number")]
    pub oracle: BigInt,
    #[serde(serialize_with = "opt_as_number")]
    pub kappa_path: Option<BigInt>,
    #[serde(serialize_with = "opt_as_number")]
    pub tableau_path: Option<BigInt>,
    pub agree: bool,
}

impl CoefficientRecord {
    /// Computes every applicable path for one `(λ, h)`.
    pub fn compute(lambda: &Partition, h: HookShape) -> Result<Self> {
        let table = kappa_table_for(lambda.size(), h.arm, h.leg);
        let oracle = r_oracle(lambda, h)?;
        Self::assemble(lambda, h, oracle, &table)
    }

    fn assemble(lambda: &Partition, h: HookShape, oracle: BigInt, table: &KappaTable) -> Result<Self> {
        let (kappa_path, tableau_path) = if lambda.len() <= 1 {
            (None, None)
        } else {
            (Some(r_kappa_with(table, lambda, h)?), Some(r_tableau(lambda, h)?))
        };
        let agree = kappa_path.iter().chain(&tableau_path).all(|v| *v == oracle);
        Ok(CoefficientRecord {
            n: lambda.size(),
            lambda: lambda.clone(),
            hook: h,
            oracle,
            kappa_path,
            tableau_path,
            agree,
        })
    }
}

/// Result of [`cross_validate`], records in `(n, λ, a, b)` order.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub a_max: usize,
    pub b_max: usize,
    pub cells_checked: usize,
    pub gated_cells: usize,
    pub disagreements: usize,
    pub records: Vec<CoefficientRecord>,
}

impl SweepReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements == 0
    }

    pub fn disagreeing(&self) -> impl Iterator<Item = &CoefficientRecord> {
        self.records.iter().filter(|r| !r.agree)
    }

    /// CSV with the fixed header `n,lambda,a,b,oracle,kappa,tableau,agree`.
    /// Not-applicable paths are empty fields.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        write_records_csv(&self.records, out)
    }
}

pub fn write_records_csv<W: Write>(records: &[CoefficientRecord], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "lambda", "a", "b", "oracle", "kappa", "tableau", "agree"]).map_err(io)?;
    let opt = |v: &Option<BigInt>| v.as_ref().map(BigInt::to_string).unwrap_or_default();
    for r in records {
        w.write_record([
            r.n.to_string(),
            r.lambda.to_string(),
            r.hook.arm.to_string(),
            r.hook.leg.to_string(),
            r.oracle.to_string(),
            opt(&r.kappa_path),
            opt(&r.tableau_path),
            r.agree.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

/// Every `n ≤ n_max`, `λ ⊢ n`, `a ≤ a_max`, `b ≤ b_max`, computed on the
/// current rayon pool. Disagreements are recorded, not raised.
pub fn cross_validate(n_max: usize, a_max: usize, b_max: usize) -> Result<SweepReport> {
    let table = kappa_table_for(n_max, a_max, b_max);
    let mut cells = Vec::new();
    for n in 1..=n_max {
        for lambda in partitions_of(n) {
            for a in 0..=a_max {
                for b in 0..=b_max {
                    cells.push((lambda.clone(), HookShape::new(a, b)));
                }
            }
        }
    }
    let hooks: Vec<((usize, HookShape), ClassFunction)> = (1..=n_max)
        .flat_map(|n| (0..=a_max).flat_map(move |a| (0..=b_max).map(move |b| (n, HookShape::new(a, b)))))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, h)| hook_class_function(n, h).map(|s| ((n, h), s)))
        .collect::<Result<_>>()?;
    let hooks: std::collections::HashMap<_, _> = hooks.into_iter().collect();

    let records: Vec<CoefficientRecord> = cells
        .par_iter()
        .map(|(lambda, h)| {
            let oracle = multiplicity(&hooks[&(lambda.size(), *h)], &ClassFunction::character(lambda)?)?;
            CoefficientRecord::assemble(lambda, *h, oracle, &table)
        })
        .collect::<Result<_>>()?;

    let gated_cells = records.iter().filter(|r| r.kappa_path.is_none()).count();
    let disagreements = records.iter().filter(|r| !r.agree).count();
    Ok(SweepReport { n_max, a_max, b_max, cells_checked: records.len(), gated_cells, disagreements, records })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn h(a: usize, b: usize) -> HookShape {
        HookShape::new(a, b)
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(r_oracle(&p(&[2, 1]), h(1, 1)).unwrap(), BigInt::from(3));
        assert_eq!(r_oracle(&p(&[1, 1]), h(0, 1)).unwrap(), BigInt::from(1));
        assert_eq!(r_oracle(&p(&[2, 1]), h(0, 2)).unwrap(), BigInt::zero());
        assert!(r_oracle(&Partition::empty(), h(0, 0)).is_err());
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(r_kappa(&p(&[2, 1]), h(1, 1)).unwrap(), BigInt::from(3));
        assert_eq!(r_kappa(&p(&[1, 1]), h(0, 1)).unwrap(), BigInt::from(1));
        let column = Partition::column(4);
        assert_eq!(r_kappa(&column, h(2, 1)).unwrap(), r_oracle(&column, h(2, 1)).unwrap());
        let err = r_kappa(&p(&[3]), h(1, 1)).unwrap_err();
        assert!(err.to_string().contains("lambda=(n) excluded by Theorem"));
    }

    #[test]
    fn tableau_examples() {
        let found: Vec<String> =
            red_foot_supertableaux(&p(&[2, 1]), h(1, 1)).unwrap().iter().map(|t| t.to_string()).collect();
        let mut sorted = found.clone();
        sorted.sort();
        assert_eq!(sorted, ["b0 r1 | r1", "r0 b0 | r2", "r0 b1 | r1"]);
        let single: Vec<String> =
            red_foot_supertableaux(&p(&[1, 1]), h(0, 1)).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(single, ["b0 | r1"]);
        assert_eq!(r_tableau(&p(&[1, 1]), h(0, 2)).unwrap(), BigInt::zero());
        assert!(r_tableau(&p(&[3]), h(1, 1)).is_err());
    }

    #[test]
    fn small_sweeps() {
        let rep = cross_validate(3, 2, 2).unwrap();
        assert!(rep.all_agree());
        assert_eq!(rep.cells_checked, (1 + 2 + 3) * 9);
        assert_eq!(rep.gated_cells, 3 * 9);
        let rep = cross_validate(2, 1, 1).unwrap();
        let col = rep.records.iter().find(|r| r.lambda == p(&[1, 1]) && r.hook == h(0, 1)).unwrap();
        assert_eq!(col.oracle, BigInt::from(1));
        assert_eq!(col.kappa_path, Some(BigInt::from(1)));
        let row = rep.records.iter().find(|r| r.lambda == p(&[2])).unwrap();
        assert_eq!((row.kappa_path.clone(), row.tableau_path.clone()), (None, None));
    }

    #[test]
    fn chain_matches_kappa() {
        for lambda in [p(&[2, 1]), p(&[2, 2]), p(&[3, 1]), p(&[2, 1, 1])] {
            for a in 0..=2 {
                for b in 0..=2 {
                    let chain = inner_sum_chain(&lambda, h(a, b)).unwrap();
                    assert_eq!(BigInt::from(chain), r_kappa(&lambda, h(a, b)).unwrap());
                }
            }
        }
    }

    #[test]
    fn conjugate_readings_are_rejected_by_the_oracle() {
        let h11 = h(1, 1);
        let lambda = p(&[2, 1, 1]);
        let oracle = r_oracle(&lambda, h11).unwrap();
        assert_eq!(r_kappa(&lambda, h11).unwrap(), oracle);
        assert_eq!(r_tableau(&lambda, h11).unwrap(), oracle);
        // the same sums taken at lambda instead of its conjugate
        let kappa_unconjugated = kappa_table_for(4, 1, 1).restriction(&lambda, h11).unwrap();
        assert_ne!(kappa_unconjugated, oracle);
        let tableau_conjugated = BigInt::from(red_foot_supertableaux(&lambda.conjugate(), h11).unwrap().len());
        assert_ne!(tableau_conjugated, oracle);
    }

    #[test]
    fn dimensions_add_up() {
        for n in 1..=4 {
            for a in 0..=2 {
                for b in 0..=2 {
                    let (lhs, rhs) = dimension_check(n, h(a, b)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn record_json_and_csv() {
        let r = CoefficientRecord::compute(&p(&[2, 1]), h(1, 1)).unwrap();
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(
            js,
            r#"{"n":3,"lambda":[2,1],"hook":{"arm":1,"leg":1},"oracle":3,"kappa_path":3,"tableau_path":3,"agree":true}"#
        );
        let gated = CoefficientRecord::compute(&p(&[3]), h(1, 1)).unwrap();
        let mut buf = Vec::new();
        write_records_csv(&[r, gated], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,lambda,a,b,oracle,kappa,tableau,agree\n3,\"2,1\",1,1,3,3,3,true\n3,3,1,1,1,,,true\n"
        );
    }
}
