//! Oracle Betti numbers of `S/I` read off the homology of Taylor
//! subcomplexes: `b_{i,m}(S/I) = dim H̃_{i-2}(Θ_{<m})` for lcm-closed `m`.

use std::collections::BTreeMap;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::homology::{reduced_homology_dims, HomologyError};
use crate::path_ideal::{path_ideal, IdealError, MonomialIdeal};
use crate::DEFAULT_PRIME;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BettiError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("betti table entry (i={i}, j={j}) must be positive")]
    ZeroEntry { i: usize, j: usize },
    #[error("betti table lacks the entry b_00 = 1")]
    MissingUnit,
}

/// Graded Betti numbers `b_{i,j}(S/I)`; zero entries are not stored and
/// `b_{0,0} = 1` is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: usize,
    j: usize,
    b: u64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    entries: Vec<EntryJson>,
}

impl Default for BettiTable {
    fn default() -> Self {
        Self::unit()
    }
}

impl BettiTable {
    /// The table of `S/0`.
    pub fn unit() -> Self {
        BettiTable { entries: BTreeMap::from([((0, 0), 1)]) }
    }

    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), u64)>>(entries: I) -> Result<Self, BettiError> {
        let mut t = BettiTable { entries: BTreeMap::new() };
        for ((i, j), b) in entries {
            if b == 0 {
                return Err(BettiError::ZeroEntry { i, j });
            }
            t.add(i, j, b);
        }
        if t.get(0, 0) != 1 {
            return Err(BettiError::MissingUnit);
        }
        Ok(t)
    }

    pub fn add(&mut self, i: usize, j: usize, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_i(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn max_j(&self) -> usize {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// `i ↦ b_{i,j}` for one total degree.
    pub fn column(&self, j: usize) -> BTreeMap<usize, u64> {
        self.entries.iter().filter(|(&(_, jj), _)| jj == j).map(|(&(i, _), &b)| (i, b)).collect()
    }

    /// The table with every entry of degree `j >= bound` removed.
    pub fn degrees_below(&self, bound: usize) -> BettiTable {
        BettiTable { entries: self.entries.iter().filter(|(&(_, j), _)| j < bound).map(|(&k, &b)| (k, b)).collect() }
    }

    pub fn to_json(&self) -> String {
        let entries = self.entries.iter().map(|(&(i, j), &b)| EntryJson { i, j, b }).collect();
        serde_json::to_string(&TableJson { entries }).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        let parsed: TableJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
        Self::from_entries(parsed.entries.into_iter().map(|e| ((e.i, e.j), e.b))).map_err(|e| e.to_string())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,b\n");
        for (&(i, j), &b) in &self.entries {
            out.push_str(&format!("{i},{j},{b}\n"));
        }
        out
    }
}

/// Multigraded Betti numbers `b_{i,W}(S/I)` over squarefree multidegrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultigradedRecord {
    entries: BTreeMap<(usize, VertexSet), u64>,
}

impl MultigradedRecord {
    pub fn get(&self, i: usize, w: VertexSet) -> u64 {
        self.entries.get(&(i, w)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, VertexSet), u64> {
        &self.entries
    }

    /// Graded table by summing over multidegrees of equal size.
    pub fn graded(&self) -> BettiTable {
        let mut table = BettiTable::unit();
        for (&(i, w), &b) in &self.entries {
            if i > 0 {
                table.add(i, w.len(), b);
            }
        }
        table
    }
}

/// `i ↦ b_{i,m}(S/I)` for `i >= 1`, nonzero entries only.
pub fn multigraded_betti(i: &MonomialIdeal, m: VertexSet, prime: u32) -> Result<BTreeMap<usize, u64>, BettiError> {
    if !m.is_subset(i.lcm()) || !i.is_lcm_closed(m) {
        return Ok(BTreeMap::new());
    }
    let sub = i.taylor_strict_sub(m)?;
    let profile = reduced_homology_dims(&sub, prime)?;
    Ok(profile
        .dims()
        .iter()
        .filter(|&(&p, _)| p >= -1)
        .map(|(&p, &d)| ((p + 2) as usize, d as u64))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub prime: u32,
    /// Reuse results for multidegrees whose induced subgraphs coincide up
    /// to order-preserving relabelling.
    pub memo: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { prime: DEFAULT_PRIME, memo: false }
    }
}

type MemoKey = (usize, usize, Vec<(u32, u32)>);

fn memo_key(g: &Graph, t: usize, w: VertexSet) -> MemoKey {
    let rank: BTreeMap<u32, u32> = w.iter().enumerate().map(|(k, v)| (v, k as u32 + 1)).collect();
    let edges = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| w.contains(u) && w.contains(v))
        .map(|(u, v)| (rank[&u], rank[&v]))
        .collect();
    (t, w.len(), edges)
}

/// All nonzero `b_{i,W}(S/I_t(G))` with `i >= 1`.
pub fn multigraded_record(g: &Graph, t: usize, opts: &OracleOptions) -> Result<MultigradedRecord, BettiError> {
    let ideal = path_ideal(g, t);
    let memo: DashMap<MemoKey, BTreeMap<usize, u64>> = DashMap::new();
    let candidates: Vec<VertexSet> =
        ideal.lcm().subsets().filter(|w| !w.is_empty() && ideal.is_lcm_closed(*w)).collect();
    let columns: Vec<(VertexSet, BTreeMap<usize, u64>)> = candidates
        .into_par_iter()
        .map(|w| {
            let column = if opts.memo {
                let key = memo_key(g, t, w);
                if let Some(hit) = memo.get(&key) {
                    hit.clone()
                } else {
                    let col = multigraded_betti(&ideal, w, opts.prime)?;
                    memo.insert(key, col.clone());
                    col
                }
            } else {
                multigraded_betti(&ideal, w, opts.prime)?
            };
            Ok((w, column))
        })
        .collect::<Result<_, BettiError>>()?;
    let mut record = MultigradedRecord::default();
    for (w, column) in columns {
        for (i, b) in column {
            record.entries.insert((i, w), b);
        }
    }
    Ok(record)
}

/// Graded Betti table of `S/I_t(G)`, summing multigraded numbers over
/// multidegrees of each total degree.
pub fn graded_betti_table(g: &Graph, t: usize, prime: u32) -> Result<BettiTable, BettiError> {
    graded_betti_table_with(g, t, &OracleOptions { prime, memo: false })
}

pub fn graded_betti_table_with(g: &Graph, t: usize, opts: &OracleOptions) -> Result<BettiTable, BettiError> {
    Ok(multigraded_record(g, t, opts)?.graded())
}

/// Convolution of top-degree Betti vectors of ideals in disjoint sets of
/// variables: the top-degree vector of their sum.
pub fn top_betti_product(vectors: &[BTreeMap<usize, u64>]) -> BTreeMap<usize, u64> {
    let mut acc = BTreeMap::from([(0usize, 1u64)]);
    for v in vectors {
        let mut next = BTreeMap::new();
        for (&a, &x) in &acc {
            for (&b, &y) in v {
                *next.entry(a + b).or_insert(0) += x * y;
            }
        }
        acc = next;
    }
    acc.retain(|_, b| *b != 0);
    acc
}
