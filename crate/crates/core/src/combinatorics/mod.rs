//! Partitions, cells, orderings, horizontal strips and reverse tableaux.

mod partition;
mod tableau;

pub use partition::{enumerate_partitions, order_relations, r_minus_c, ArmLeg, Cell, OrderRelations, Partition};
pub use tableau::{enumerate_reverse_tableaux, horizontal_strip_inners, ReverseTableau};

/// A skew diagram `outer - inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewStrip {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewStrip {
    pub fn new(outer: Partition, inner: Partition) -> Option<Self> {
        inner.is_contained_in(&outer).then_some(SkewStrip { outer, inner })
    }

    pub fn is_horizontal(&self) -> bool {
        self.outer.is_horizontal_strip_over(&self.inner)
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Cells of `outer` not in `inner`, row by row.
    pub fn cells(&self) -> Vec<Cell> {
        self.outer
            .cells()
            .filter(|&s| !self.inner.contains_cell(s))
            .collect()
    }

    pub fn r_minus_c(&self) -> crate::error::Result<Vec<Cell>> {
        r_minus_c(&self.outer, &self.inner)
    }
}
