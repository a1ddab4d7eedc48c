/// Rough storage needed for a nearly complete relation basis of rank `n`:
/// `n!` terms of 4 cells each, 2 terms per row on average, 8-byte cells.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MemoryEstimate {
    pub rank: usize,
    /// Millions of cells.
    pub mcells: f64,
    /// Megabytes, with one megabyte taken as 1024·1000 bytes.
    pub mbytes: f64,
}

const CELLS_PER_TERM: f64 = 4.0;
const TERMS_PER_ROW: f64 = 2.0;
const BYTES_PER_CELL: f64 = 8.0;

pub fn estimate_memory(n: usize) -> MemoryEstimate {
    let factorial = (1..=n).fold(1.0f64, |acc, k| acc * k as f64);
    let cells = factorial * CELLS_PER_TERM * TERMS_PER_ROW;
    MemoryEstimate {
        rank: n,
        mcells: cells / 1e6,
        mbytes: cells * BYTES_PER_CELL / (1024.0 * 1000.0),
    }
}
