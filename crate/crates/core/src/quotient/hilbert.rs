use std::fmt;

use serde::Serialize;

/// Dimensions of graded pieces `(m, w)` for `0 ≤ m ≤ max_degree`, `0 ≤ w < d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    max_degree: u32,
    torsion_order: u32,
    entries: Vec<Vec<u64>>,
}

impl HilbertTable {
    /// `entries[m][w]`; every row must have `torsion_order` entries.
    pub fn new(torsion_order: u32, entries: Vec<Vec<u64>>) -> Self {
        assert!(!entries.is_empty() && entries.iter().all(|r| r.len() == torsion_order as usize));
        HilbertTable { max_degree: entries.len() as u32 - 1, torsion_order, entries }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn torsion_order(&self) -> u32 {
        self.torsion_order
    }

    pub fn get(&self, m: u32, w: u32) -> u64 {
        self.entries[m as usize][w as usize]
    }

    pub fn row(&self, m: u32) -> &[u64] {
        &self.entries[m as usize]
    }

    pub fn total(&self, m: u32) -> u64 {
        self.row(m).iter().sum()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries
    }
}

impl fmt::Display for HilbertTable {
    /// Fixed-width table with one row per degree and a total column.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}", "m")?;
        for w in 0..self.torsion_order {
            write!(f, " {:>8}", format!("w={w}"))?;
        }
        writeln!(f, " {:>8}", "total")?;
        for (m, row) in self.entries.iter().enumerate() {
            write!(f, "{m:>4}")?;
            for x in row {
                write!(f, " {x:>8}")?;
            }
            writeln!(f, " {:>8}", row.iter().sum::<u64>())?;
        }
        Ok(())
    }
}
