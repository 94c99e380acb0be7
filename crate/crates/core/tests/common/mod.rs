#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeta_slp::{generators, JirOrder, LatticeInfo, Poset, Value};

pub struct Instance {
    pub name: String,
    pub poset: Poset,
}

fn instance(name: impl Into<String>, poset: Poset) -> Instance {
    Instance { name: name.into(), poset }
}

/// The semimodular families used for the exact-length checks.
pub fn semimodular_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for v in 2..=64 {
        out.push(instance(format!("chain({v})"), generators::chain(v).unwrap()));
    }
    for n in 0..=8 {
        out.push(instance(format!("boolean({n})"), generators::boolean(n).unwrap()));
    }
    for n in [12, 30, 360, 1024] {
        out.push(instance(format!("divisor({n})"), generators::divisor(n).unwrap()));
    }
    for m in 3..=5 {
        out.push(instance(format!("partition({m})"), generators::partition(m).unwrap()));
    }
    out.push(instance("figure1", generators::figure1()));
    out
}

/// Every lattice instance used across the suites.
pub fn lattice_corpus() -> Vec<Instance> {
    let mut out = semimodular_corpus();
    out.push(instance("chain(1)", generators::chain(1).unwrap()));
    out.push(instance("pentagon", generators::pentagon()));
    out.push(instance("hexagon", generators::hexagon()));
    out.push(instance("diamond", generators::diamond()));
    out.push(instance("dual(figure1)", generators::figure1().dual()));
    out.push(instance("dual(pentagon)", generators::pentagon().dual()));
    for k in 1..=4 {
        out.push(instance(
            format!("parallel-chains({k})"),
            generators::parallel_chains(k).unwrap(),
        ));
    }
    out
}

/// All naturally labeled posets on `size` elements, one per strict order
/// relation in which `i < j` only if `i < j` as integers. Returned as dense
/// relation matrices `less[i][j]`.
pub fn natural_orders(size: usize) -> Vec<Vec<Vec<bool>>> {
    fn extend(k: usize, size: usize, less: &mut Vec<Vec<bool>>, out: &mut Vec<Vec<Vec<bool>>>) {
        if k == size {
            out.push(less.clone());
            return;
        }
        // strict down-set of the new element k: any down-closed subset of 0..k
        for mask in 0u32..(1 << k) {
            let down_closed = (0..k).filter(|&j| mask >> j & 1 == 1).all(|j| {
                (0..j).all(|i| !less[i][j] || mask >> i & 1 == 1)
            });
            if !down_closed {
                continue;
            }
            for (i, row) in less.iter_mut().enumerate().take(k) {
                row[k] = mask >> i & 1 == 1;
            }
            extend(k + 1, size, less, out);
        }
        for row in less.iter_mut().take(k) {
            row[k] = false;
        }
    }
    let mut out = Vec::new();
    let mut less = vec![vec![false; size]; size];
    extend(0, size, &mut less, &mut out);
    out
}

/// Cover pairs of a strict order relation, by definition.
pub fn covers_of(less: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = less.len();
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if less[a][b] && !(0..n).any(|c| less[a][c] && less[c][b]) {
                covers.push((a, b));
            }
        }
    }
    covers
}

pub fn poset_from_relation(less: &[Vec<bool>]) -> Poset {
    let names = (0..less.len()).map(|i| format!("e{i}")).collect();
    Poset::new(names, covers_of(less)).unwrap()
}

/// Every lattice among the naturally labeled posets on `1..=max` elements.
pub fn small_lattices(max: usize) -> Vec<LatticeInfo> {
    (1..=max)
        .flat_map(natural_orders)
        .filter_map(|less| LatticeInfo::new(&poset_from_relation(&less)).ok())
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_order(lattice: &LatticeInfo, rng: &mut ChaCha8Rng) -> JirOrder {
    let mut elements = lattice.join_irreducibles().to_vec();
    elements.shuffle(rng);
    JirOrder::new(lattice, elements).unwrap()
}

pub fn random_vector(width: usize, rng: &mut ChaCha8Rng) -> Vec<Value> {
    (0..width)
        .map(|_| rng.random_range(-1_000_000_000i64..=1_000_000_000) as Value)
        .collect()
}

/// Calls `f` on each permutation of `items` (Heap-free swap recursion).
pub fn for_each_permutation<T: Clone>(items: &mut [T], f: &mut impl FnMut(&[T])) {
    fn go<T: Clone>(items: &mut [T], k: usize, f: &mut impl FnMut(&[T])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, f);
            items.swap(k, i);
        }
    }
    go(items, 0, f);
}
