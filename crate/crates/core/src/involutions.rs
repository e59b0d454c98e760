//! The inner involution on `⊔_σ Ξ(μ, σ, b, a)` (the two-row algorithm and the
//! general site/spot algorithm), the outer involution on supertableaux, and a
//! harness that checks a map is a sign-reversing involution on a finite
//! signed family.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::combinatorics::{permutations_of, sigma_star, Partition, Permutation};
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::tableaux::{
    conjugate_tableau, enumerate_st, enumerate_xi_sigma, is_row_standard, is_supertableau, Color, ColoredEntry, Tableau,
};

/// Result of applying an involution to one tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InvolutionOutcome {
    Fixed,
    Matched {
        partner: Tableau,
        /// Spot of the inner involution, or the foot `(l, 1)` of the outer one.
        pivot: (usize, usize),
    },
}

impl InvolutionOutcome {
    pub fn is_fixed(&self) -> bool {
        matches!(self, InvolutionOutcome::Fixed)
    }

    pub fn partner(&self) -> Option<&Tableau> {
        match self {
            InvolutionOutcome::Fixed => None,
            InvolutionOutcome::Matched { partner, .. } => Some(partner),
        }
    }
}

/// `site_i` for rows `i = 2..d`: the smallest column `j` with
/// `T(i,j) ⩽ T(i-1,j)`, where equality only counts when `T(i-1,j)` is blue.
pub fn find_sites(t: &Tableau) -> BTreeMap<usize, Option<usize>> {
    (2..=t.num_rows()).map(|i| (i, site_in_row(t, i))).collect()
}

fn site_in_row(t: &Tableau, i: usize) -> Option<usize> {
    (1..=t.row_len(i)).find(|&j| match t.get(i - 1, j) {
        None => true,
        Some(above) => {
            let here = t.get(i, j).expect("cell in shape");
            here < above || (here == above && above.is_blue())
        }
    })
}

/// `(i0, j0)`: `j0` the leftmost site, `i0` the lowest row holding a site in
/// column `j0`.
pub fn find_spot(t: &Tableau) -> Option<(usize, usize)> {
    let sites = find_sites(t);
    let j0 = sites.values().flatten().copied().min()?;
    let i0 = sites.iter().filter(|(_, s)| **s == Some(j0)).map(|(&i, _)| i).max()?;
    Some((i0, j0))
}

fn check_inner_input(t: &Tableau, mu: &Partition) -> Result<Permutation> {
    if mu.len() < 2 || mu.part(1) < 2 {
        return Err(Error::Precondition(format!("inner involution needs l(mu) >= 2 and mu_1 >= 2, got ({mu})")));
    }
    let sigma = t.perm.clone().ok_or_else(|| Error::Precondition("tableau carries no permutation".into()))?;
    if sigma.degree() != mu.len() {
        return Err(Error::Precondition(format!("perm {sigma} is not in S_{}", mu.len())));
    }
    if t.shape() != sigma_star(&sigma, mu) {
        return Err(Error::Precondition(format!("shape {} is not sigma*mu", t.shape())));
    }
    if !is_row_standard(t, Color::Red) {
        return Err(Error::Precondition(format!("{t} is not row-standard in red")));
    }
    Ok(sigma)
}

/// Exchanges the tails of rows `i0-1` and `i0` at the spot `(i0, j0)`.
///
/// Row `i0-1` keeps its first `j0-1` cells and then takes `T(i0, j0+1..)`;
/// row `i0` keeps its first `j0` cells and then takes `T(i0-1, j0..)`.
fn swap_tails(t: &Tableau, i0: usize, j0: usize) -> Vec<Vec<ColoredEntry>> {
    let upper = &t.rows[i0 - 2];
    let lower = &t.rows[i0 - 1];
    let mut new_upper: Vec<ColoredEntry> = upper[..j0 - 1].to_vec();
    new_upper.extend_from_slice(&lower[j0..]);
    let mut new_lower: Vec<ColoredEntry> = lower[..j0].to_vec();
    new_lower.extend_from_slice(&upper[j0 - 1..]);
    let mut rows = t.rows.clone();
    rows[i0 - 2] = new_upper;
    rows[i0 - 1] = new_lower;
    rows
}

/// The general inner involution. A tableau with no spot is fixed; otherwise
/// the tails of rows `i0-1, i0` are exchanged and the permutation becomes
/// `(i0-1 i0) σ`.
pub fn inner_involution(t: &Tableau, mu: &Partition) -> Result<InvolutionOutcome> {
    let sigma = check_inner_input(t, mu)?;
    let Some((i0, j0)) = find_spot(t) else {
        return Ok(InvolutionOutcome::Fixed);
    };
    let partner = Tableau { rows: swap_tails(t, i0, j0), perm: Some(sigma.left_transpose(i0 - 1, i0)) };
    Ok(InvolutionOutcome::Matched { partner, pivot: (i0, j0) })
}

/// The two-row algorithm, written out cell by cell.
pub fn inner_involution_2col(t: &Tableau, mu: &Partition) -> Result<InvolutionOutcome> {
    if mu.len() != 2 {
        return Err(Error::Precondition(format!("two-row algorithm needs l(mu) = 2, got ({mu})")));
    }
    let sigma = check_inner_input(t, mu)?;
    let Some(site) = site_in_row(t, 2) else {
        return Ok(InvolutionOutcome::Fixed);
    };
    let alpha = sigma_star(&sigma, mu);
    let (a1, a2) = (alpha.parts()[0] as usize, alpha.parts()[1] as usize);
    // new row lengths: a2 - 1 and a1 + 1
    let mut first: Vec<Option<ColoredEntry>> = vec![None; a2 - 1];
    let mut second: Vec<Option<ColoredEntry>> = vec![None; a1 + 1];
    for j in 1..site {
        first[j - 1] = t.get(1, j);
        second[j - 1] = t.get(2, j);
    }
    second[site - 1] = t.get(2, site);
    for j in site..a2 {
        first[j - 1] = t.get(2, j + 1);
    }
    for j in site..=a1 {
        second[j] = t.get(1, j);
    }
    let collect = |row: Vec<Option<ColoredEntry>>| -> Vec<ColoredEntry> {
        row.into_iter().map(|e| e.expect("every cell assigned")).collect()
    };
    let partner = Tableau { rows: vec![collect(first), collect(second)], perm: Some(sigma.left_transpose(1, 2)) };
    Ok(InvolutionOutcome::Matched { partner, pivot: (2, site) })
}

/// The outer involution on supertableaux with blue budget `b`.
///
/// With `l` the number of rows: a blue `c` at `(l,1)` becomes red `c+1`; a red
/// `c` there becomes blue `c-1` while `bl(T) < b`; a red foot with
/// `bl(T) = b` is fixed.
pub fn outer_involution(t: &Tableau, blue_budget: usize) -> Result<InvolutionOutcome> {
    let l = t.num_rows();
    if l < 2 {
        return Err(Error::Precondition("outer involution needs at least two rows".into()));
    }
    if !is_supertableau(t)? {
        return Err(Error::Precondition(format!("{t} is not a supertableau")));
    }
    if t.bl() > blue_budget {
        return Err(Error::Precondition(format!("bl(T) = {} exceeds the budget {blue_budget}", t.bl())));
    }
    let foot = t.get(l, 1).ok_or(Error::CellOutOfShape { row: l, col: 1 })?;
    let replacement = if foot.is_blue() {
        ColoredEntry::red(foot.value + 1)
    } else if t.bl() < blue_budget {
        let value = foot
            .value
            .checked_sub(1)
            .ok_or_else(|| Error::Precondition(format!("red 0 at the foot of {t} is unreachable")))?;
        ColoredEntry::blue(value)
    } else {
        return Ok(InvolutionOutcome::Fixed);
    };
    let mut partner = t.clone();
    partner.rows[l - 1][0] = replacement;
    Ok(InvolutionOutcome::Matched { partner, pivot: (l, 1) })
}

/// Fixed tableaux of the inner involution on `⊔_σ Ξ(μ, σ, b, a)`.
pub fn inner_fixed_points(mu: &Partition, blue: usize, weight: u32) -> Result<Vec<Tableau>> {
    let mut fixed = Vec::new();
    for sigma in permutations_of(mu.len()) {
        for t in enumerate_xi_sigma(mu, &sigma, blue, weight) {
            if inner_involution(&t, mu)?.is_fixed() {
                fixed.push(t);
            }
        }
    }
    Ok(fixed)
}

/// Inner sum `Δ = Σ_σ sgn(σ) |Ξ(μ, σ, b, a)|`, counted directly.
pub fn inner_sum(mu: &Partition, blue: usize, weight: u32) -> i64 {
    permutations_of(mu.len())
        .iter()
        .map(|sigma| sigma.sign() as i64 * enumerate_xi_sigma(mu, sigma, blue, weight).len() as i64)
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyMember {
    pub sign: i32,
    /// Which summand of the disjoint union the tableau belongs to.
    pub label: String,
    pub tableau: Tableau,
}

/// A finite disjoint union of tableau sets, each with a sign.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SignedFamily {
    pub members: Vec<FamilyMember>,
}

impl SignedFamily {
    pub fn push(&mut self, sign: i32, label: impl Into<String>, tableau: Tableau) {
        self.members.push(FamilyMember { sign, label: label.into(), tableau });
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn signed_cardinality(&self) -> i64 {
        self.members.iter().map(|m| m.sign as i64).sum()
    }
}

/// `⊔_{σ ∈ S_d} Ξ(μ, σ, b, a)` signed by `sgn(σ)`.
pub fn inner_family(mu: &Partition, blue: usize, weight: u32) -> SignedFamily {
    let mut family = SignedFamily::default();
    for sigma in permutations_of(mu.len()) {
        let label = format!("Xi(mu={mu}, sigma={sigma}, b={blue}, a={weight})");
        for t in enumerate_xi_sigma(mu, &sigma, blue, weight) {
            family.push(sigma.sign(), label.clone(), t);
        }
    }
    family
}

/// `ST^b_a(μ) = ⊔_{j=0}^{b} ST(μ, b-j, a+1+j)` signed by `(-1)^j`.
pub fn outer_family(mu: &Partition, blue: usize, a: u32) -> SignedFamily {
    let mut family = SignedFamily::default();
    for j in 0..=blue {
        let weight = a + 1 + j as u32;
        let label = format!("ST(mu={mu}, b={}, a={weight})", blue - j);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for t in enumerate_st(mu, blue - j, weight) {
            family.push(sign, label.clone(), t);
        }
    }
    family
}

/// Checks that `map` is a sign-reversing involution on `family` whose fixed
/// points are all positive:
///
/// 1. every matched tableau's partner is a member with the opposite sign,
/// 2. the partner maps back to the original,
/// 3. fixed members carry sign `+1`,
/// 4. the signed cardinality equals the number of fixed members.
///
/// The first failure is reported as a counterexample.
pub fn verify_involution<F>(
    check: &str,
    parameters: BTreeMap<String, String>,
    family: &SignedFamily,
    map: F,
) -> ValidationReport
where
    F: Fn(&Tableau) -> Result<InvolutionOutcome>,
{
    let mut report = ValidationReport::new(check, parameters);
    let index: HashMap<String, usize> = family.members.iter().enumerate().map(|(i, m)| (m.tableau.key(), i)).collect();
    if index.len() != family.len() {
        return report.fail("family contains duplicate tableaux");
    }
    let mut fixed = 0i64;
    let mut matched = 0usize;
    for member in &family.members {
        let t = &member.tableau;
        let outcome = match map(t) {
            Ok(o) => o,
            Err(e) => return report.fail(format!("{} [{}]: {e}", t.key(), member.label)),
        };
        match outcome {
            InvolutionOutcome::Fixed => {
                if member.sign != 1 {
                    return report.fail(format!("{} [{}] is fixed with sign {}", t.key(), member.label, member.sign));
                }
                fixed += 1;
            }
            InvolutionOutcome::Matched { partner, .. } => {
                if &partner == t {
                    return report.fail(format!("{} [{}] is matched to itself", t.key(), member.label));
                }
                let Some(&pi) = index.get(&partner.key()) else {
                    return report.fail(format!(
                        "{} [{}] maps outside the family to {}",
                        t.key(),
                        member.label,
                        partner.key()
                    ));
                };
                let pm = &family.members[pi];
                if pm.sign != -member.sign {
                    return report.fail(format!(
                        "{} [{}] and its partner {} [{}] have the same sign",
                        t.key(),
                        member.label,
                        partner.key(),
                        pm.label
                    ));
                }
                match map(&partner) {
                    Ok(InvolutionOutcome::Matched { partner: back, .. }) if &back == t => {}
                    Ok(other) => {
                        return report.fail(format!(
                            "{} -> {} does not map back (got {:?})",
                            t.key(),
                            partner.key(),
                            other.partner().map(Tableau::key)
                        ))
                    }
                    Err(e) => return report.fail(format!("{}: {e}", partner.key())),
                }
                matched += 1;
            }
        }
    }
    let signed = family.signed_cardinality();
    report.stats(family.len(), matched, fixed as usize, signed);
    if signed != fixed {
        return report.fail(format!("signed cardinality {signed} differs from fixed count {fixed}"));
    }
    report.pass()
}

/// Runs the inner-involution harness on `⊔_σ Ξ(μ, σ, b, a)`.
pub fn check_inner(mu: &Partition, blue: usize, weight: u32) -> ValidationReport {
    let family = inner_family(mu, blue, weight);
    verify_involution("inner", params(mu, blue, weight), &family, |t| inner_involution(t, mu))
}

/// Runs the two-row algorithm through the harness; needs `l(μ) = 2`.
pub fn check_inner_2col(mu: &Partition, blue: usize, weight: u32) -> ValidationReport {
    let family = inner_family(mu, blue, weight);
    verify_involution("2col", params(mu, blue, weight), &family, |t| inner_involution_2col(t, mu))
}

/// Runs the outer-involution harness on `ST^b_a(μ)`.
pub fn check_outer(mu: &Partition, blue: usize, a: u32) -> ValidationReport {
    let family = outer_family(mu, blue, a);
    verify_involution("outer", params(mu, blue, a), &family, |t| outer_involution(t, blue))
}

fn params(mu: &Partition, blue: usize, weight: u32) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("mu".to_string(), mu.to_string()),
        ("blue".to_string(), blue.to_string()),
        ("weight".to_string(), weight.to_string()),
    ])
}

/// Fixed points of the inner involution, shown as supertableaux by conjugation.
pub fn inner_fixed_points_as_supertableaux(mu: &Partition, blue: usize, weight: u32) -> Result<Vec<Tableau>> {
    inner_fixed_points(mu, blue, weight)?.iter().map(conjugate_tableau).collect()
}
