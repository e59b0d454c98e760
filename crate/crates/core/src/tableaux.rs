//! Two-coloured tableaux over the alphabet `r0 < b0 < r1 < b1 < …`, their
//! standardness predicates, and exhaustive enumeration of the `Ξ` families
//! and of supertableaux.
//!
//! Cells are addressed 1-based as `(row, column)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{sigma_star, Composition, Partition, Permutation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

/// An element of the coloured alphabet. Field order makes the derived
/// ordering `red(k) < blue(k) < red(k+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredEntry {
    pub value: u32,
    pub color: Color,
}

impl ColoredEntry {
    pub fn red(value: u32) -> Self {
        ColoredEntry { value, color: Color::Red }
    }

    pub fn blue(value: u32) -> Self {
        ColoredEntry { value, color: Color::Blue }
    }

    pub fn is_red(&self) -> bool {
        self.color == Color::Red
    }

    pub fn is_blue(&self) -> bool {
        self.color == Color::Blue
    }

    /// Position in the alphabet: `r0 = 0, b0 = 1, r1 = 2, …`.
    fn code(&self) -> u32 {
        2 * self.value + u32::from(self.is_blue())
    }

    fn from_code(code: u32) -> Self {
        ColoredEntry { value: code / 2, color: if code.is_multiple_of(2) { Color::Red } else { Color::Blue } }
    }
}

impl fmt::Display for ColoredEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.is_red() { 'r' } else { 'b' };
        write!(f, "{c}{}", self.value)
    }
}

impl FromStr for ColoredEntry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseEntry(s.to_string());
        let s = s.trim();
        let color = match s.chars().next() {
            Some('r') => Color::Red,
            Some('b') => Color::Blue,
            _ => return Err(err()),
        };
        let value = s[1..].parse().map_err(|_| err())?;
        Ok(ColoredEntry { value, color })
    }
}

impl Serialize for ColoredEntry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ColoredEntry {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A filling of a composition-shaped diagram. Empty rows are kept so that row
/// indices stay aligned with the shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<ColoredEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Permutation>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<ColoredEntry>>) -> Self {
        Tableau { rows, perm: None }
    }

    pub fn with_perm(mut self, perm: Permutation) -> Self {
        self.perm = Some(perm);
        self
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.len() as i64).collect())
    }

    /// The shape as a partition, if the row lengths weakly decrease.
    pub fn partition_shape(&self) -> Option<Partition> {
        self.shape().as_partition()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.rows.get(row - 1).map_or(0, Vec::len)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.row_len(row)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<ColoredEntry> {
        if self.contains(row, col) {
            Some(self.rows[row - 1][col - 1])
        } else {
            None
        }
    }

    /// Sum of the numerical values.
    pub fn wt(&self) -> u32 {
        self.rows.iter().flatten().map(|e| e.value).sum()
    }

    /// Number of blue entries.
    pub fn bl(&self) -> usize {
        self.rows.iter().flatten().filter(|e| e.is_blue()).count()
    }

    /// Rows only, e.g. `"r0 b1 | r1"`.
    pub fn canonical(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" | ")
    }

    /// Rows together with the permutation statistic; distinct for distinct
    /// members of a disjoint union over permutations.
    pub fn key(&self) -> String {
        match &self.perm {
            Some(p) => format!("[{p}] {}", self.canonical()),
            None => self.canonical(),
        }
    }

    /// `T(i,j) ⩽ T(l,m)`: `(i,j)` must be in the shape; true when `(l,m)` is
    /// outside it, otherwise the alphabet order decides.
    pub fn compare_extended(&self, first: (usize, usize), second: (usize, usize)) -> Result<bool> {
        let a = self.get(first.0, first.1).ok_or(Error::CellOutOfShape { row: first.0, col: first.1 })?;
        Ok(match self.get(second.0, second.1) {
            None => true,
            Some(b) => a <= b,
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Parses the canonical text form `"r0 b1 | r1 b2"`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Tableau::new(Vec::new()));
        }
        let rows = s
            .split('|')
            .map(|row| row.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau::new(rows))
    }
}

pub fn compare(e1: ColoredEntry, e2: ColoredEntry) -> Ordering {
    e1.cmp(&e2)
}

fn weakly_increasing_with_distinct(line: &[ColoredEntry], color: Color) -> bool {
    line.windows(2).all(|w| w[0] < w[1] || (w[0] == w[1] && w[0].color != color))
}

/// Rows weakly increase and entries of `color` are distinct within each row.
pub fn is_row_standard(t: &Tableau, color: Color) -> bool {
    t.rows.iter().all(|r| weakly_increasing_with_distinct(r, color))
}

fn require_partition_shape(t: &Tableau) -> Result<Partition> {
    t.partition_shape().ok_or_else(|| Error::NotPartitionShape(t.shape().to_string()))
}

/// Columns weakly increase and entries of `color` are distinct within each
/// column. Needs a partition shape.
pub fn is_column_standard(t: &Tableau, color: Color) -> Result<bool> {
    let shape = require_partition_shape(t)?;
    let width = shape.part(1);
    Ok((1..=width).all(|c| {
        let column: Vec<ColoredEntry> = (1..=t.num_rows()).map_while(|r| t.get(r, c)).collect();
        weakly_increasing_with_distinct(&column, color)
    }))
}

/// Row-standard in blue and column-standard in red.
pub fn is_supertableau(t: &Tableau) -> Result<bool> {
    Ok(is_column_standard(t, Color::Red)? && is_row_standard(t, Color::Blue))
}

/// Transpose of a partition-shaped tableau. The permutation statistic is dropped.
pub fn conjugate_tableau(t: &Tableau) -> Result<Tableau> {
    let shape = require_partition_shape(t)?;
    let rows = shape
        .conjugate()
        .parts()
        .iter()
        .enumerate()
        .map(|(c, &len)| (0..len).map(|r| t.rows[r][c]).collect())
        .collect();
    Ok(Tableau::new(rows))
}

/// All rows of length `len` that are weakly increasing with distinct reds,
/// weight `≤ max_weight` and at most `max_blue` blue entries.
fn red_standard_rows(len: usize, max_weight: u32, max_blue: usize) -> Vec<Vec<ColoredEntry>> {
    fn go(
        len: usize,
        weight_left: u32,
        blue_left: usize,
        current: &mut Vec<ColoredEntry>,
        out: &mut Vec<Vec<ColoredEntry>>,
    ) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let remaining = (len - current.len()) as u32;
        let start = match current.last() {
            None => 0,
            Some(prev) if prev.is_red() => prev.code() + 1,
            Some(prev) => prev.code(),
        };
        let mut code = start;
        loop {
            let e = ColoredEntry::from_code(code);
            if e.value * remaining > weight_left {
                break;
            }
            if !(e.is_blue() && blue_left == 0) {
                current.push(e);
                go(len, weight_left - e.value, blue_left - usize::from(e.is_blue()), current, out);
                current.pop();
            }
            code += 1;
        }
    }
    let mut out = Vec::new();
    go(len, max_weight, max_blue, &mut Vec::with_capacity(len), &mut out);
    out
}

/// `Ξ(α, b, a)`: tableaux of shape `α`, row-standard in red, with `b` blue
/// entries and weight `a`. Empty when `α` has a negative part.
pub fn enumerate_xi(shape: &Composition, blue: usize, weight: u32) -> Vec<Tableau> {
    let Some(lengths) = shape.lengths() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut rows = Vec::with_capacity(lengths.len());
    xi_rows(&lengths, blue, weight, &mut rows, &mut out);
    out
}

fn xi_rows(
    lengths: &[usize],
    blue_left: usize,
    weight_left: u32,
    rows: &mut Vec<Vec<ColoredEntry>>,
    out: &mut Vec<Tableau>,
) {
    let k = rows.len();
    if k == lengths.len() {
        if blue_left == 0 && weight_left == 0 {
            out.push(Tableau::new(rows.clone()));
        }
        return;
    }
    let cells_after: usize = lengths[k + 1..].iter().sum();
    for row in red_standard_rows(lengths[k], weight_left, blue_left) {
        let w: u32 = row.iter().map(|e| e.value).sum();
        let b = row.iter().filter(|e| e.is_blue()).count();
        if blue_left - b > cells_after {
            continue;
        }
        rows.push(row);
        xi_rows(lengths, blue_left - b, weight_left - w, rows, out);
        rows.pop();
    }
}

/// `Ξ(μ, σ, b, a) = Ξ(σ∗μ, b, a)` with `perm = σ` recorded on every tableau.
pub fn enumerate_xi_sigma(mu: &Partition, sigma: &Permutation, blue: usize, weight: u32) -> Vec<Tableau> {
    enumerate_xi(&sigma_star(sigma, mu), blue, weight).into_iter().map(|t| t.with_perm(sigma.clone())).collect()
}

/// Supertableaux of the given shape with `b` blue entries and weight `a`.
pub fn enumerate_st(shape: &Partition, blue: usize, weight: u32) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<ColoredEntry>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    st_cells(shape.parts(), &cells, 0, blue, weight, &mut rows, &mut out);
    out
}

fn st_cells(
    lengths: &[usize],
    cells: &[(usize, usize)],
    idx: usize,
    blue_left: usize,
    weight_left: u32,
    rows: &mut Vec<Vec<ColoredEntry>>,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        if blue_left == 0 && weight_left == 0 {
            out.push(Tableau::new(rows.clone()));
        }
        return;
    }
    if blue_left > cells.len() - idx {
        return;
    }
    let (r, c) = cells[idx];
    let left = if c > 0 { Some(rows[r][c - 1]) } else { None };
    let up = if r > 0 { Some(rows[r - 1][c]) } else { None };
    let mut start = 0;
    if let Some(l) = left {
        // blues distinct along rows
        start = start.max(if l.is_blue() { l.code() + 1 } else { l.code() });
    }
    if let Some(u) = up {
        // reds distinct down columns
        start = start.max(if u.is_red() { u.code() + 1 } else { u.code() });
    }
    let remaining_in_row = (lengths[r] - c) as u32;
    let mut code = start;
    loop {
        let e = ColoredEntry::from_code(code);
        if e.value * remaining_in_row > weight_left {
            break;
        }
        if !(e.is_blue() && blue_left == 0) {
            rows[r].push(e);
            st_cells(lengths, cells, idx + 1, blue_left - usize::from(e.is_blue()), weight_left - e.value, rows, out);
            rows[r].pop();
        }
        code += 1;
    }
}
