//! S-diagrams: integer matrices whose rows spell out the decomposition of a
//! source partition and whose column sums are its image.

use std::fmt;

use crate::bijection::g_shift;
use crate::classes::ClassSpec;
use crate::error::Result;
use crate::partition::{Decomposition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramVariant {
    /// Row `i` ends in `R_i` twos; column sums give `f(π)`.
    Plain,
    /// Row `i` ends in `R_i − 1` twos and two ones; column sums give `f̄(π)`.
    Barred,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SDiagram {
    rows: Vec<Vec<u64>>,
    variant: DiagramVariant,
}

impl SDiagram {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn variant(&self) -> DiagramVariant {
        self.variant
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.width())
            .map(|c| self.rows.iter().map(|row| row[c]).sum())
            .collect()
    }

    /// Column sums read as a partition.
    pub fn image(&self) -> Partition {
        Partition::from_parts(self.column_sums())
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    /// `[[40,37,...],[0,0,...]]`
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Right-aligned, space-separated rows with zeros printed.
impl fmt::Display for SDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// The S-diagram of `p ∈ G(3,2)`: `D(p)+1` rows, `ℓ(π⁽⁰⁾) + R₁` columns.
pub fn s_diagram(p: &Partition) -> Result<SDiagram> {
    ClassSpec::Gordon { k: 3, i: 2 }.require(p)?;
    let dec = p.decompose()?;
    Ok(layout(&dec, DiagramVariant::Plain))
}

/// The barred S-diagram of `p ∈ G(3,3)`, laid out from `p`'s own
/// decomposition; its column sums equal `f̄(p)`.
pub fn sbar_diagram(p: &Partition) -> Result<SDiagram> {
    g_shift(p)?;
    let dec = p.decompose()?;
    Ok(layout(&dec, DiagramVariant::Barred))
}

fn layout(dec: &Decomposition, variant: DiagramVariant) -> SDiagram {
    let depth = dec.depth();
    let r1 = dec.repeated(1) as usize;
    let width = match variant {
        DiagramVariant::Plain => dec.prefix.len() + r1,
        // with no repeated part there is no run of twos and ones at all
        DiagramVariant::Barred if depth == 0 => dec.prefix.len(),
        DiagramVariant::Barred => dec.prefix.len() + r1 + 1,
    };
    let mut rows = Vec::with_capacity(depth + 1);
    let mut offset = 0;
    for i in 1..=depth + 1 {
        let mut row = vec![0u64; width];
        let tail = dec.tail(i - 1);
        row[offset..offset + tail.len()].copy_from_slice(tail.parts());
        offset += tail.len();
        let repeated = dec.repeated(i) as usize;
        if repeated > 0 {
            match variant {
                DiagramVariant::Plain => row[offset..offset + repeated].fill(2),
                DiagramVariant::Barred => {
                    row[offset..offset + repeated - 1].fill(2);
                    row[offset + repeated - 1..offset + repeated + 1].fill(1);
                }
            }
        }
        rows.push(row);
    }
    SDiagram { rows, variant }
}
