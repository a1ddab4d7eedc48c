//! Basis dumps and the memory table.

use serde::{Deserialize, Serialize};
use tcanon_core::texpr::estimate_memory;
use tcanon_core::{KBasis, TensorExpr, TensorHeader};

use crate::frontend::printer;

/// Structured form of a basis. Row `perms` are 1-based image lists of the
/// permutations applied to `header.indices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDump {
    pub header: HeaderDump,
    pub degree: usize,
    pub dim: usize,
    pub rows: Vec<RowDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeaderDump {
    pub factors: Vec<FactorDump>,
    pub indices: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDump {
    pub name: String,
    pub arity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDump {
    pub degree: usize,
    /// Exact rationals as `p` or `p/q`.
    pub coeffs: Vec<String>,
    pub perms: Vec<Vec<usize>>,
}

pub fn dump(header: &TensorHeader, basis: &KBasis) -> BasisDump {
    BasisDump {
        header: HeaderDump {
            factors: header
                .factors()
                .iter()
                .map(|f| FactorDump { name: f.name.clone(), arity: f.arity })
                .collect(),
            indices: header.indices().iter().map(|i| i.original().to_string()).collect(),
        },
        degree: basis.degree(),
        dim: basis.dim(),
        rows: basis
            .rows()
            .map(|row| RowDump {
                degree: row.degree(),
                coeffs: row.terms().iter().map(|(c, _)| c.to_string()).collect(),
                perms: row.terms().iter().map(|(_, p)| p.images().collect()).collect(),
            })
            .collect(),
    }
}

pub fn to_json(header: &TensorHeader, basis: &KBasis) -> String {
    serde_json::to_string_pretty(&dump(header, basis)).expect("basis dumps serialize")
}

/// The `kbasis` listing: one line per row, then the dimension.
pub fn to_text(header: &TensorHeader, basis: &KBasis) -> String {
    let mut s = String::new();
    for row in basis.rows() {
        let e = TensorExpr::new(header.clone(), row.clone()).expect("basis degree matches header");
        s.push_str(&printer::print(&e, false));
        s.push('\n');
    }
    s.push_str(&format!("{}\n", basis.dim()));
    s
}

pub const MAX_TABLE_RANK: usize = 20;

/// Estimated storage for ranks `1..=max_rank`.
pub fn memtable(max_rank: usize) -> Option<String> {
    if max_rank > MAX_TABLE_RANK {
        return None;
    }
    let mut s = format!("{:>4}  {:>18}  {:>18}\n", "rank", "Mcells", "Mbyte");
    for n in 1..=max_rank {
        let e = estimate_memory(n);
        s.push_str(&format!("{:>4}  {:>18.6}  {:>18.6}\n", n, e.mcells, e.mbytes));
    }
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn memtable_rows() {
        let t = memtable(11).unwrap();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 12);
        assert!(lines[1].ends_with("0.000063"));
        assert!(lines[1].contains("0.000008"));
        assert!(lines[11].trim_start().starts_with("11"));
        assert!(memtable(21).is_none());
    }
}
