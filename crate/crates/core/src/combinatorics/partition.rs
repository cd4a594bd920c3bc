use std::fmt;

use crate::error::{Error, Result};

/// A box `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }
}

/// Arm, leg, arm-colength and leg-colength of a cell.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ArmLeg {
    pub arm: usize,
    pub leg: usize,
    pub arm_colength: usize,
    pub leg_colength: usize,
}

/// Weakly decreasing sequence of positive parts (trailing zeros trimmed).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Accepts zero-padded input; fails on increasing parts.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing: {parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals known to be valid.
    pub fn from_slice(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition")
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts zero-padded to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(self.length() <= n, "length {} exceeds n = {n}", self.length());
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `<λ, δ> = Σ (n-i) λ_i`.
    pub fn dot_delta(&self, n: usize) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| (n - 1 - i) * p).sum()
    }

    /// `<λ, λ> = Σ λ_i^2`.
    pub fn dot_self(&self) -> usize {
        self.0.iter().map(|&p| p * p).sum()
    }

    /// The staircase `δ = (n-1, n-2, ..., 0)`.
    pub fn staircase(n: usize) -> Self {
        Self::from_slice(&(0..n).rev().collect::<Vec<_>>())
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=cols)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains_cell(&self, s: Cell) -> bool {
        s.row >= 1 && s.col >= 1 && s.col <= self.part(s.row)
    }

    /// Cells in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell { row: i + 1, col: j }))
    }

    pub fn arm_leg(&self, s: Cell) -> Result<ArmLeg> {
        if !self.contains_cell(s) {
            return Err(Error::CellOutside {
                row: s.row,
                col: s.col,
                shape: self.to_string(),
            });
        }
        let leg = self.0[s.row..].iter().take_while(|&&p| p >= s.col).count();
        Ok(ArmLeg {
            arm: self.part(s.row) - s.col,
            leg,
            arm_colength: s.col - 1,
            leg_colength: s.row - 1,
        })
    }

    /// Cellwise inclusion `μ ⊆ λ` with `self = μ`.
    pub fn is_contained_in(&self, lambda: &Partition) -> bool {
        self.length() <= lambda.length() && self.0.iter().zip(&lambda.0).all(|(m, l)| m <= l)
    }

    /// Dominance `self ≤ λ` on zero-padded partial sums, without requiring equal weight.
    pub fn is_dominated_by(&self, lambda: &Partition, n: usize) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=n {
            a += self.part(i);
            b += lambda.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `λ - μ` is a horizontal strip (`self = λ`).
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        mu.is_contained_in(self) && (1..=self.length()).all(|i| mu.part(i) >= self.part(i + 1))
    }

    /// All `μ ⊆ self`, by weight and then lexicographically.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(i: usize, bound: usize, lam: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                out.push(Partition::new(cur.clone()).expect("bounded by the previous part"));
                return;
            }
            for v in 0..=lam[i].min(bound) {
                cur.push(v);
                go(i + 1, v, lam, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, usize::MAX, &self.0, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
        out
    }

    /// `λ - c·1^n`, requires `c ≤ λ_n`.
    pub fn remove_columns(&self, c: usize, n: usize) -> Partition {
        Partition::new(self.padded(n).iter().map(|p| p - c).collect::<Vec<_>>())
            .expect("still a partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Result of comparing two partitions in both orders.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrderRelations {
    pub contains: bool,
    pub dominates: bool,
}

/// Inclusion `μ ⊆ λ` and dominance `μ ≤ λ` for partitions of length ≤ n.
pub fn order_relations(mu: &Partition, lambda: &Partition, n: usize) -> OrderRelations {
    OrderRelations {
        contains: mu.is_contained_in(lambda),
        dominates: mu.is_dominated_by(lambda, n),
    }
}

/// All partitions with weight ≤ `max_weight` and length ≤ `max_length`,
/// by weight, then reverse-lexicographically within a weight.
pub fn enumerate_partitions(max_weight: usize, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        let mut cur = Vec::new();
        partitions_of(w, w, max_length, &mut cur, &mut out);
    }
    out
}

fn partitions_of(
    rest: usize,
    max_part: usize,
    slots: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        cur.push(p);
        partitions_of(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// Cells in rows of `λ` meeting the strip `λ - μ` but not in columns meeting it.
pub fn r_minus_c(lambda: &Partition, mu: &Partition) -> Result<Vec<Cell>> {
    if !lambda.is_horizontal_strip_over(mu) {
        return Err(Error::NotHorizontalStrip {
            outer: lambda.to_string(),
            inner: mu.to_string(),
        });
    }
    Ok(r_minus_c_unchecked(lambda, mu))
}

pub(crate) fn r_minus_c_unchecked(lambda: &Partition, mu: &Partition) -> Vec<Cell> {
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let col_meets = |j: usize| lc.part(j) > mc.part(j);
    let mut out = Vec::new();
    for i in 1..=lambda.length() {
        if lambda.part(i) == mu.part(i) {
            continue;
        }
        for j in 1..=lambda.part(i) {
            if !col_meets(j) {
                out.push(Cell { row: i, col: j });
            }
        }
    }
    out
}
