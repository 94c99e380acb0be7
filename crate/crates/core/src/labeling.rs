//! Edge labelings of Hasse diagrams and the unique-rising-chain test.
//!
//! A chain `x₀ ⋖ x₁ ⋖ … ⋖ xₘ` is rising when its labels are non-decreasing.
//! A labeling is a U-labeling when every comparable pair `x ≤ y` is joined
//! by exactly one rising chain; injective U-labelings are exactly what
//! [`compile_zeta_edges`](crate::transforms::compile_zeta_edges) needs.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::{JirOrder, LatticeInfo};
use crate::par::Strategy;
use crate::poset::{ElemId, Poset};

/// Integer label per cover edge, index-aligned with [`Poset::covers`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: Vec<i64>,
}

impl EdgeLabeling {
    pub fn new(poset: &Poset, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != poset.edge_count() {
            return Err(Error::LabelCount {
                got: labels.len(),
                want: poset.edge_count(),
            });
        }
        Ok(EdgeLabeling { labels })
    }

    /// Labels `1..=e` in edge order.
    pub fn by_edge_index(poset: &Poset) -> Self {
        EdgeLabeling {
            labels: (1..=poset.edge_count() as i64).collect(),
        }
    }

    /// Looks up labels by edge name pairs; every cover edge must appear once.
    pub fn from_pairs(poset: &Poset, pairs: &[(&str, &str, i64)]) -> Result<Self> {
        let mut labels = vec![None; poset.edge_count()];
        for &(a, b, value) in pairs {
            let k = edge_by_names(poset, a, b)?;
            if labels[k].replace(value).is_some() {
                return Err(Error::DuplicateLabel(a.into(), b.into()));
            }
        }
        collect_labels(poset, labels)
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn get(&self, edge: usize) -> i64 {
        self.labels[edge]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        self.repeated_label().is_none()
    }

    pub(crate) fn repeated_label(&self) -> Option<i64> {
        let mut seen = HashSet::with_capacity(self.labels.len());
        self.labels.iter().copied().find(|&l| !seen.insert(l))
    }

    /// Parses `label A B VALUE` lines against the covers of `poset`.
    pub fn parse(poset: &Poset, text: &str) -> Result<Self> {
        let mut labels = vec![None; poset.edge_count()];
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                ["label", a, b, value] => {
                    let value: i64 = value.parse().map_err(|_| Error::Syntax {
                        line: lineno + 1,
                        message: format!("label value `{value}` is not an integer"),
                    })?;
                    let k = edge_by_names(poset, a, b)?;
                    if labels[k].replace(value).is_some() {
                        return Err(Error::DuplicateLabel(a.to_string(), b.to_string()));
                    }
                }
                _ => {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        message: "expected `label A B VALUE`".into(),
                    })
                }
            }
        }
        collect_labels(poset, labels)
    }

    pub fn to_text(&self, poset: &Poset) -> String {
        let mut out = String::new();
        for (&(x, y), label) in poset.covers().iter().zip(&self.labels) {
            writeln!(out, "label {} {} {}", poset.name(x), poset.name(y), label).unwrap();
        }
        out
    }
}

fn edge_by_names(poset: &Poset, a: &str, b: &str) -> Result<usize> {
    let x = poset
        .id_of(a)
        .ok_or_else(|| Error::UnknownElement(a.to_string()))?;
    let y = poset
        .id_of(b)
        .ok_or_else(|| Error::UnknownElement(b.to_string()))?;
    poset
        .edge_index(x, y)
        .ok_or_else(|| Error::NotACover(a.to_string(), b.to_string()))
}

fn collect_labels(poset: &Poset, labels: Vec<Option<i64>>) -> Result<EdgeLabeling> {
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(k, l)| {
            l.ok_or_else(|| {
                let (x, y) = poset.covers()[k];
                Error::MissingLabel(poset.name(x).into(), poset.name(y).into())
            })
        })
        .collect::<Result<_>>()?;
    Ok(EdgeLabeling { labels })
}

/// `λ(s, t) = min { i : s ∨ i = t }` over join-irreducible names.
///
/// Requires a semimodular lattice and an order in which `h ≤ h'` implies
/// `name(h) ≤ name(h')`.
pub fn semimodular_labeling(lattice: &LatticeInfo, order: &JirOrder) -> Result<EdgeLabeling> {
    let p = lattice.poset();
    if let Some((x, y)) = lattice.semimodularity_witness() {
        return Err(Error::NotSemimodular {
            x: p.name(x).into(),
            y: p.name(y).into(),
        });
    }
    if let Some((lower, upper)) = order.compatibility_witness(lattice) {
        return Err(Error::IncompatibleOrder {
            lower: p.name(lower).into(),
            upper: p.name(upper).into(),
        });
    }
    let labels = p
        .covers()
        .iter()
        .map(|&(s, t)| {
            let name = order
                .elements()
                .iter()
                .position(|&i| lattice.join(s, i) == t)
                .expect("some join-irreducible below t is not below s");
            name as i64 + 1
        })
        .collect();
    Ok(EdgeLabeling { labels })
}

/// `λ*(s, t) = −λ(t, s)` on the dual poset (same edge indices).
pub fn dual_labeling(labeling: &EdgeLabeling) -> EdgeLabeling {
    EdgeLabeling {
        labels: labeling.labels.iter().map(|l| -l).collect(),
    }
}

/// Relabels edges `1..=e` sorted by (old label, source position in the
/// `(height, id)` linear extension, edge index). A U-labeling stays a
/// U-labeling with the same rising chains.
pub fn make_injective(poset: &Poset, labeling: &EdgeLabeling) -> EdgeLabeling {
    let mut position = vec![0; poset.len()];
    for (pos, &x) in poset.linear_extension().iter().enumerate() {
        position[x] = pos;
    }
    let mut edges: Vec<usize> = (0..poset.edge_count()).collect();
    edges.sort_by_key(|&k| (labeling.labels[k], position[poset.covers()[k].0], k));
    let mut labels = vec![0; edges.len()];
    for (rank, &k) in edges.iter().enumerate() {
        labels[k] = rank as i64 + 1;
    }
    EdgeLabeling { labels }
}

/// Rising chain counts for every comparable pair, saturated at 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RisingChainReport {
    size: usize,
    /// Row-major `size × size`; `None` when `x ≰ y`.
    counts: Vec<Option<u8>>,
}

impl RisingChainReport {
    /// Number of rising chains from `x` to `y` (2 means "two or more").
    pub fn count(&self, x: ElemId, y: ElemId) -> Option<u8> {
        self.counts[x * self.size + y]
    }

    /// First comparable pair (by `x`, then `y`) without exactly one rising chain.
    pub fn witness(&self) -> Option<(ElemId, ElemId, u8)> {
        self.counts.iter().enumerate().find_map(|(k, c)| match c {
            Some(c) if *c != 1 => Some((k / self.size, k % self.size, *c)),
            _ => None,
        })
    }

    pub fn is_u_labeling(&self) -> bool {
        self.witness().is_none()
    }
}

pub fn is_u_labeling(poset: &Poset, labeling: &EdgeLabeling) -> RisingChainReport {
    is_u_labeling_with(poset, labeling, Strategy::default())
}

/// Counts rising chains out of every source `x` with a forward pass over the
/// cover edges in topological order: `chains[k]` is the (saturated) number of
/// rising chains from `x` whose last edge is `k`.
pub fn is_u_labeling_with(
    poset: &Poset,
    labeling: &EdgeLabeling,
    strategy: Strategy,
) -> RisingChainReport {
    assert_eq!(labeling.len(), poset.edge_count(), "labeling does not match poset");
    let v = poset.len();
    let covers = poset.covers();
    let order = poset.linear_extension();

    let rows = strategy.map_indices(v, |x| {
        let mut chains = vec![0u8; covers.len()];
        let mut row = vec![None; v];
        for &w in order {
            if !poset.leq(x, w) {
                continue;
            }
            for &k in poset.upper_edges(w) {
                let label = labeling.labels[k];
                let mut total = u8::from(w == x);
                for &j in poset.lower_edges(w) {
                    if labeling.labels[j] <= label {
                        total = total.saturating_add(chains[j]).min(2);
                    }
                }
                chains[k] = total;
            }
            let into_w = poset.lower_edges(w).iter().map(|&j| chains[j]);
            let count = into_w.fold(u8::from(w == x), |acc, c| acc.saturating_add(c).min(2));
            row[w] = Some(count);
        }
        row
    });

    RisingChainReport {
        size: v,
        counts: rows.into_iter().flatten().collect(),
    }
}

/// Every rising chain starting at `x`, as sequences of edge indices
/// (the empty chain included). Stops after `limit` chains.
pub fn rising_chains_from(
    poset: &Poset,
    labeling: &EdgeLabeling,
    x: ElemId,
    limit: usize,
) -> Vec<Vec<usize>> {
    fn walk(
        poset: &Poset,
        labeling: &EdgeLabeling,
        at: ElemId,
        floor: Option<i64>,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        out.push(path.clone());
        for &k in poset.upper_edges(at) {
            let label = labeling.get(k);
            if floor.is_some_and(|f| label < f) {
                continue;
            }
            path.push(k);
            walk(poset, labeling, poset.covers()[k].1, Some(label), path, out, limit);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(poset, labeling, x, None, &mut Vec::new(), &mut out, limit);
    out
}
