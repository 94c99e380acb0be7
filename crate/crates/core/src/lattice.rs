//! Lattice structure on top of a [`Poset`]: join and meet tables,
//! join-irreducibles, spectra and the structural predicates.

use std::collections::BTreeSet;

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::par::Strategy;
use crate::poset::{ElemId, Poset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeInfo {
    poset: Poset,
    bottom: ElemId,
    top: ElemId,
    join: Vec<ElemId>,
    meet: Vec<ElemId>,
    join_irreducibles: Vec<ElemId>,
}

/// Outcome of searching for the least upper (or greatest lower) bound of a pair.
enum Bound {
    Unique(ElemId),
    Ambiguous(usize),
}

/// Least element of `bounds` with respect to the order whose "up sets" are
/// given by `up`, or the number of minimal elements when there is none.
/// A least element must be the strict minimum of `depth`, a strictly monotone
/// rank for that order, so only one candidate is tested.
fn least_of<'a>(
    bounds: &BitRow,
    up: impl Fn(ElemId) -> &'a BitRow,
    depth: impl Fn(ElemId) -> isize,
) -> Bound {
    if let Some(z) = bounds.iter().min_by_key(|&z| depth(z)) {
        if bounds.is_subset(up(z)) {
            return Bound::Unique(z);
        }
    }
    let minimal = bounds
        .iter()
        .filter(|&z| !bounds.iter().any(|w| w != z && up(w).contains(z)))
        .count();
    Bound::Ambiguous(minimal)
}

impl LatticeInfo {
    /// Fills join and meet tables by brute-force bound search; fails with a
    /// witness pair when some pair lacks a unique lub or glb.
    pub fn new(poset: &Poset) -> Result<Self> {
        Self::with_strategy(poset, Strategy::default())
    }

    pub fn with_strategy(poset: &Poset, strategy: Strategy) -> Result<Self> {
        let v = poset.len();
        if v == 0 {
            return Err(Error::EmptyPoset);
        }

        let rows = strategy.map_indices(v, |x| -> Result<(Vec<ElemId>, Vec<ElemId>)> {
            let mut join_row = Vec::with_capacity(v);
            let mut meet_row = Vec::with_capacity(v);
            for y in 0..v {
                let mut upper = poset.up_set(x).clone();
                upper.intersect_with(poset.up_set(y));
                match least_of(&upper, |z| poset.up_set(z), |z| poset.height(z) as isize) {
                    Bound::Unique(z) => join_row.push(z),
                    Bound::Ambiguous(minimal) => {
                        return Err(not_a_lattice(poset, x, y, "upper", minimal))
                    }
                }
                let mut lower = poset.down_set(x).clone();
                lower.intersect_with(poset.down_set(y));
                match least_of(&lower, |z| poset.down_set(z), |z| -(poset.height(z) as isize)) {
                    Bound::Unique(z) => meet_row.push(z),
                    Bound::Ambiguous(minimal) => {
                        return Err(not_a_lattice(poset, x, y, "lower", minimal))
                    }
                }
            }
            Ok((join_row, meet_row))
        });

        let mut join = Vec::with_capacity(v * v);
        let mut meet = Vec::with_capacity(v * v);
        for row in rows {
            let (j, m) = row?;
            join.extend(j);
            meet.extend(m);
        }

        let bottom = (0..v)
            .find(|&x| poset.up_set(x).count() == v)
            .expect("a lattice has a bottom");
        let top = (0..v)
            .find(|&x| poset.down_set(x).count() == v)
            .expect("a lattice has a top");

        Ok(LatticeInfo {
            join_irreducibles: poset.join_irreducibles(),
            poset: poset.clone(),
            bottom,
            top,
            join,
            meet,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> ElemId {
        self.bottom
    }

    pub fn top(&self) -> ElemId {
        self.top
    }

    #[inline]
    pub fn join(&self, x: ElemId, y: ElemId) -> ElemId {
        self.join[x * self.len() + y]
    }

    #[inline]
    pub fn meet(&self, x: ElemId, y: ElemId) -> ElemId {
        self.meet[x * self.len() + y]
    }

    pub fn join_irreducibles(&self) -> &[ElemId] {
        &self.join_irreducibles
    }

    /// `n`, the number of join-irreducible elements.
    pub fn rank_parameter(&self) -> usize {
        self.join_irreducibles.len()
    }

    pub fn height(&self, x: ElemId) -> usize {
        self.poset.height(x)
    }

    pub fn atoms(&self) -> Vec<ElemId> {
        self.poset.upper_covers(self.bottom).collect()
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.len()).all(|x| {
            let joined = atoms
                .iter()
                .filter(|&&a| self.poset.leq(a, x))
                .fold(self.bottom, |acc, &a| self.join(acc, a));
            joined == x
        })
    }

    /// First pair `(x, y)` with `x ⋗ x ∧ y` but `x ∨ y` not covering `y`.
    pub fn semimodularity_witness(&self) -> Option<(ElemId, ElemId)> {
        let v = self.len();
        (0..v)
            .flat_map(|x| (0..v).map(move |y| (x, y)))
            .find(|&(x, y)| {
                self.poset.is_cover(self.meet(x, y), x) && !self.poset.is_cover(y, self.join(x, y))
            })
    }

    pub fn is_semimodular(&self) -> bool {
        self.semimodularity_witness().is_none()
    }

    pub fn is_geometric(&self) -> bool {
        self.is_atomic() && self.is_semimodular()
    }

    /// For every `x` and join-irreducible `i` with `x ≱ i`, `x ∨ i` covers `x`.
    pub fn satisfies_cover_condition(&self) -> bool {
        (0..self.len()).all(|x| {
            self.join_irreducibles
                .iter()
                .filter(|&&i| !self.poset.leq(i, x))
                .all(|&i| self.poset.is_cover(x, self.join(x, i)))
        })
    }

    /// Set of names `h` (1-based) whose join-irreducible lies below `x`.
    pub fn spectrum(&self, order: &JirOrder, x: ElemId) -> BTreeSet<usize> {
        self.prefix_spectrum(order, order.len(), x)
    }

    /// [`spectrum`](Self::spectrum) restricted to names `1..=prefix`.
    pub fn prefix_spectrum(&self, order: &JirOrder, prefix: usize, x: ElemId) -> BTreeSet<usize> {
        assert!(prefix <= order.len(), "prefix {prefix} exceeds n = {}", order.len());
        order.elements()[..prefix]
            .iter()
            .enumerate()
            .filter(|&(_, &h)| self.poset.leq(h, x))
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Spectrum of every element as a bit row over name positions (bit `k` is name `k + 1`).
    pub(crate) fn spectrum_rows(&self, order: &JirOrder) -> Vec<BitRow> {
        let n = order.len();
        (0..self.len())
            .map(|x| {
                let mut row = BitRow::new(n);
                for (k, &h) in order.elements().iter().enumerate() {
                    if self.poset.leq(h, x) {
                        row.insert(k);
                    }
                }
                row
            })
            .collect()
    }
}

fn not_a_lattice(poset: &Poset, x: ElemId, y: ElemId, bound: &'static str, minimal: usize) -> Error {
    Error::NotALattice {
        x: poset.name(x).to_string(),
        y: poset.name(y).to_string(),
        bound,
        minimal,
    }
}

/// Naming of the join-irreducibles: position `k` holds the element named `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JirOrder {
    elements: Vec<ElemId>,
}

impl JirOrder {
    /// Checks that `elements` is a permutation of the join-irreducibles of `lattice`.
    pub fn new(lattice: &LatticeInfo, elements: Vec<ElemId>) -> Result<Self> {
        let mut sorted = elements.clone();
        sorted.sort_unstable();
        if sorted != lattice.join_irreducibles() {
            return Err(Error::InvalidOrder);
        }
        Ok(JirOrder { elements })
    }

    /// Join-irreducibles sorted by `(height, id)`.
    pub fn by_height(lattice: &LatticeInfo) -> Self {
        let mut elements = lattice.join_irreducibles().to_vec();
        elements.sort_by_key(|&x| (lattice.height(x), x));
        JirOrder { elements }
    }

    /// Join-irreducibles in ascending id.
    pub fn by_id(lattice: &LatticeInfo) -> Self {
        JirOrder {
            elements: lattice.join_irreducibles().to_vec(),
        }
    }

    /// The height order reversed (top-down traversal).
    pub fn by_reverse_height(lattice: &LatticeInfo) -> Self {
        let mut order = Self::by_height(lattice);
        order.elements.reverse();
        order
    }

    pub fn elements(&self) -> &[ElemId] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Name (1-based) of a join-irreducible element.
    pub fn name_of(&self, x: ElemId) -> Option<usize> {
        self.elements.iter().position(|&h| h == x).map(|k| k + 1)
    }

    /// First pair `(h, h')` with `h ≤ h'` as elements but `name(h) > name(h')`.
    pub fn compatibility_witness(&self, lattice: &LatticeInfo) -> Option<(ElemId, ElemId)> {
        let p = lattice.poset();
        for (a, &later) in self.elements.iter().enumerate() {
            for &earlier in &self.elements[..a] {
                if earlier != later && p.leq(later, earlier) {
                    return Some((later, earlier));
                }
            }
        }
        None
    }
}
