//! Weight-4 codeword tables for a seed and its eight companions, the
//! intersection properties between them, and the incidence structure they
//! form.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::component::{CompanionFamily, G78Choices, ParitySubmatrix};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// Integer value of an 8-tuple, reading the leftmost symbol as the least
/// significant bit.
pub fn to_decimal(v: &BitVector) -> Result<u8> {
    if v.len() != 8 {
        return Err(Error::LengthMismatch {
            expected: 8,
            found: v.len(),
        });
    }
    Ok(v.as_u64() as u8)
}

pub fn from_decimal(value: u8) -> BitVector {
    BitVector::from_u64(value as u64, 8)
}

pub const ROW_LABELS: [&str; 9] = [
    "C1", "C'(1)", "C'(2)", "C'(3)", "C'(4)", "C'(5)", "C'(6)", "C'(7)", "C'(8)",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub values: Vec<u8>,
}

/// Sorted decimal renderings of the weight-4 words of `C1, C'(1)..C'(8)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight4Table {
    pub rows: Vec<TableRow>,
}

impl Weight4Table {
    pub fn from_family(fam: &CompanionFamily) -> Self {
        let codes = std::iter::once(&fam.seed).chain(&fam.companions);
        let rows = ROW_LABELS
            .iter()
            .zip(codes)
            .map(|(label, code)| TableRow {
                label: label.to_string(),
                values: code.weight4().iter().map(|w| w.as_u64() as u8).collect(),
            })
            .collect();
        Self { rows }
    }

    /// Row `i`, where 0 is the seed and `1..=8` are the companions.
    pub fn set(&self, i: usize) -> BTreeSet<u8> {
        self.rows[i].values.iter().copied().collect()
    }

    /// `label,v1,...,v14` per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&r.label);
            for v in &r.values {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Aligned columns, label first.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            write!(out, "{:<6}", r.label).unwrap();
            for v in &r.values {
                write!(out, " {v:>3}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

pub fn table1(p: &ParitySubmatrix, ch: &G78Choices) -> Result<Weight4Table> {
    Ok(Weight4Table::from_family(&CompanionFamily::build(p, ch)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    /// Every set has 14 entries.
    pub sizes_ok: bool,
    /// No companion shares a word with the seed.
    pub seed_disjoint: bool,
    /// Every pair of companions shares exactly two words.
    pub pairwise_two: bool,
    /// Each shared pair is complementary (values sum to 255).
    pub pairs_complementary: bool,
    pub companion_union: usize,
    pub total_union: usize,
}

impl PropertyReport {
    pub fn all_ok(&self) -> bool {
        self.sizes_ok
            && self.seed_disjoint
            && self.pairwise_two
            && self.pairs_complementary
            && self.companion_union == 56
            && self.total_union == 70
    }

    pub fn to_text(&self) -> String {
        format!(
            "sizes_ok: {}\nseed_disjoint: {}\npairwise_two: {}\npairs_complementary: {}\ncompanion_union: {}\ntotal_union: {}\n",
            self.sizes_ok,
            self.seed_disjoint,
            self.pairwise_two,
            self.pairs_complementary,
            self.companion_union,
            self.total_union
        )
    }
}

pub fn verify_properties(t: &Weight4Table) -> PropertyReport {
    let sets: Vec<BTreeSet<u8>> = (0..t.rows.len()).map(|i| t.set(i)).collect();
    let sizes_ok = t
        .rows
        .iter()
        .zip(&sets)
        .all(|(r, s)| r.values.len() == 14 && s.len() == 14);
    let seed_disjoint = sets[1..].iter().all(|s| s.is_disjoint(&sets[0]));
    let mut pairwise_two = true;
    let mut pairs_complementary = true;
    for i in 1..sets.len() {
        for j in i + 1..sets.len() {
            let common: Vec<u8> = sets[i].intersection(&sets[j]).copied().collect();
            if common.len() != 2 {
                pairwise_two = false;
                pairs_complementary = false;
            } else if common[0] as u16 + common[1] as u16 != 255 {
                pairs_complementary = false;
            }
        }
    }
    let companion_union = sets[1..].iter().flatten().collect::<BTreeSet<_>>().len();
    let total_union = sets.iter().flatten().collect::<BTreeSet<_>>().len();
    PropertyReport {
        sizes_ok,
        seed_disjoint,
        pairwise_two,
        pairs_complementary,
        companion_union,
        total_union,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParams {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub lambda: usize,
}

/// Rows are the companion sets, columns the words they cover in ascending
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub entries: BitMatrix,
    pub columns: Vec<u8>,
    /// `None` if row sums, column sums or row inner products are not
    /// constant.
    pub params: Option<DesignParams>,
}

fn constant<I: IntoIterator<Item = usize>>(it: I) -> Option<usize> {
    let mut it = it.into_iter();
    let first = it.next()?;
    it.all(|x| x == first).then_some(first)
}

impl IncidenceMatrix {
    pub fn row_sums(&self) -> Vec<usize> {
        self.entries.rows().iter().map(BitVector::weight).collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        self.entries
            .transpose()
            .rows()
            .iter()
            .map(BitVector::weight)
            .collect()
    }

    pub fn row_inner_products(&self) -> Vec<usize> {
        let rows = self.entries.rows();
        let mut out = Vec::new();
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let both = (0..rows[i].len())
                    .filter(|&c| rows[i].get(c) && rows[j].get(c))
                    .count();
                out.push(both);
            }
        }
        out
    }
}

pub fn incidence_matrix(t: &Weight4Table) -> Result<IncidenceMatrix> {
    let report = verify_properties(t);
    if !report.all_ok() {
        return Err(Error::PropertyFailure(format!("{report:?}")));
    }
    let sets: Vec<BTreeSet<u8>> = (1..t.rows.len()).map(|i| t.set(i)).collect();
    let columns: Vec<u8> = sets
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows = sets
        .iter()
        .map(|s| BitVector::from_bits(columns.iter().map(|c| s.contains(c))))
        .collect::<Result<Vec<_>>>()?;
    let mut q = IncidenceMatrix {
        entries: BitMatrix::new(rows)?,
        columns,
        params: None,
    };
    q.params = (|| {
        Some(DesignParams {
            v: q.entries.n_rows(),
            b: q.entries.n_cols(),
            r: constant(q.row_sums())?,
            k: constant(q.column_sums())?,
            lambda: constant(q.row_inner_products())?,
        })
    })();
    Ok(q)
}
