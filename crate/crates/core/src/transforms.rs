//! Compilers from lattices and labeled posets to straight-line programs.
//!
//! The lattice compilers scan, for each join-irreducible `i` in the given
//! order, every `x ≱ i` and emit an operation `x → x ∨ i` exactly when
//! `x` and `x ∨ i` agree on the join-irreducibles named before `i`. They
//! are correct for any order; with [`JirOrder::by_height`] on a semimodular
//! lattice every operation runs along a distinct cover edge, `e` in total.
//!
//! The edge compilers emit one operation per cover edge in label order.

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::labeling::EdgeLabeling;
use crate::lattice::{JirOrder, LatticeInfo};
use crate::poset::Poset;
use crate::slp::{Kind, Op, Slp, Statement};

/// Join-irreducibles by `(height, id)`.
pub fn order_by_height(lattice: &LatticeInfo) -> JirOrder {
    JirOrder::by_height(lattice)
}

/// Statements of one phase `i`, with `x` scanned in ascending id.
fn phase(lattice: &LatticeInfo, spectra: &[BitRow], order: &JirOrder, k: usize, op: Op) -> Vec<Statement> {
    let p = lattice.poset();
    let i = order.elements()[k];
    (0..lattice.len())
        .filter(|&x| !p.leq(i, x))
        .filter_map(|x| {
            let y = lattice.join(x, i);
            spectra[x]
                .eq_prefix(&spectra[y], k)
                .then_some(Statement { op, target: y, source: x })
        })
        .collect()
}

/// Fast zeta transform: phases `1..=n` in `order`, additions.
pub fn compile_zeta_bjorklund(lattice: &LatticeInfo, order: &JirOrder) -> Slp {
    let spectra = lattice.spectrum_rows(order);
    let statements = (0..order.len())
        .flat_map(|k| phase(lattice, &spectra, order, k, Op::Add))
        .collect();
    Slp::new(lattice.len(), statements, Kind::Zeta).expect("compiled statements are in range")
}

/// Fast Möbius transform: phases `n..=1`, subtractions.
///
/// Within a phase `x` is scanned in descending id, so the whole program is
/// the exact reverse of [`compile_zeta_bjorklund`] for the same order.
/// Statements inside one phase never read a register another one writes
/// (sources satisfy `x ≱ i`, targets `y ≥ i`), so the scan order there has
/// no effect on the result.
pub fn compile_mobius_bjorklund(lattice: &LatticeInfo, order: &JirOrder) -> Slp {
    let spectra = lattice.spectrum_rows(order);
    let statements = (0..order.len())
        .rev()
        .flat_map(|k| {
            let mut ops = phase(lattice, &spectra, order, k, Op::Sub);
            ops.reverse();
            ops
        })
        .collect();
    Slp::new(lattice.len(), statements, Kind::Moebius).expect("compiled statements are in range")
}

fn edges_by_label(poset: &Poset, labeling: &EdgeLabeling) -> Result<Vec<usize>> {
    if labeling.len() != poset.edge_count() {
        return Err(Error::LabelCount { got: labeling.len(), want: poset.edge_count() });
    }
    if let Some(label) = labeling.repeated_label() {
        return Err(Error::NonInjective(label));
    }
    let mut edges: Vec<usize> = (0..poset.edge_count()).collect();
    edges.sort_by_key(|&k| labeling.get(k));
    Ok(edges)
}

/// One addition per cover edge in increasing label order.
pub fn compile_zeta_edges(poset: &Poset, labeling: &EdgeLabeling) -> Result<Slp> {
    let statements = edges_by_label(poset, labeling)?
        .into_iter()
        .map(|k| {
            let (x, y) = poset.covers()[k];
            Statement::add(y, x)
        })
        .collect();
    Slp::new(poset.len(), statements, Kind::Zeta)
}

/// One subtraction per cover edge in decreasing label order.
pub fn compile_mobius_edges(poset: &Poset, labeling: &EdgeLabeling) -> Result<Slp> {
    let statements = edges_by_label(poset, labeling)?
        .into_iter()
        .rev()
        .map(|k| {
            let (x, y) = poset.covers()[k];
            Statement::sub(y, x)
        })
        .collect();
    Slp::new(poset.len(), statements, Kind::Moebius)
}
