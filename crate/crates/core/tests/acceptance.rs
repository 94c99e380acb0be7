//! Acceptance criteria, one line of output per criterion.
//!
//! Run with `cargo test -p zeta-slp --test acceptance`.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use zeta_slp::labeling::{
    dual_labeling, is_u_labeling, make_injective, rising_chains_from, semimodular_labeling,
};
use zeta_slp::oracle::{mobius_matrix, verify_slp, zeta_matrix};
use zeta_slp::transforms::{
    compile_mobius_bjorklund, compile_mobius_edges, compile_zeta_bjorklund, compile_zeta_edges,
    order_by_height,
};
use zeta_slp::{generators, EdgeLabeling, JirOrder, Kind, LatticeInfo, Poset, Slp};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const FIGURE1_ZETA: &str = include_str!("golden/figure1_zeta.slp");
const FIGURE1_MOEBIUS: &str = include_str!("golden/figure1_moebius.slp");

fn lattice(p: &Poset) -> LatticeInfo {
    LatticeInfo::new(p).expect("corpus instance is a lattice")
}

fn golden(kind: Kind) -> Outcome {
    let l = lattice(&generators::figure1());
    let order = order_by_height(&l);
    let (program, want) = match kind {
        Kind::Zeta => (compile_zeta_bjorklund(&l, &order), FIGURE1_ZETA),
        _ => (compile_mobius_bjorklund(&l, &order), FIGURE1_MOEBIUS),
    };
    let text = program.to_text();
    ensure!(text == want, "emitted program differs from golden file:\n{text}");
    ensure!(program.len() == 9, "expected 9 statements, got {}", program.len());
    ensure!(
        verify_slp(l.poset(), &program, kind).unwrap().is_match(),
        "program does not verify"
    );
    Ok("9 statements, byte-identical, verified".into())
}

fn edge_bijection(p: &Poset, program: &Slp) -> Result<(), String> {
    let mut used = vec![false; p.edge_count()];
    for s in program.statements() {
        let k = p.edge_index(s.source, s.target).ok_or_else(|| {
            format!("statement {} {} is not on a cover edge", s.target, s.source)
        })?;
        ensure!(!used[k], "edge {k} used twice");
        used[k] = true;
    }
    ensure!(used.iter().all(|&u| u), "some edge unused");
    Ok(())
}

fn semimodular_lengths() -> Outcome {
    let corpus = semimodular_corpus();
    for inst in &corpus {
        let l = lattice(&inst.poset);
        ensure!(l.is_semimodular(), "{} is not semimodular", inst.name);
        let order = order_by_height(&l);
        let e = inst.poset.edge_count();
        for program in [compile_zeta_bjorklund(&l, &order), compile_mobius_bjorklund(&l, &order)] {
            ensure!(
                program.len() == e,
                "{} {}: length {} != e = {e}",
                inst.name,
                program.kind(),
                program.len()
            );
            edge_bijection(&inst.poset, &program).map_err(|m| format!("{}: {m}", inst.name))?;
        }
    }
    Ok(format!("{} lattices, zeta and Möbius length = e on cover edges", corpus.len()))
}

fn cover_condition_equivalence() -> Outcome {
    let mut lattices = small_lattices(6);
    let enumerated = lattices.len();
    lattices.extend(semimodular_corpus().iter().map(|i| lattice(&i.poset)));
    let mut geometric = 0;
    for l in &lattices {
        let cond = l.satisfies_cover_condition();
        let geo = l.is_geometric();
        ensure!(cond == geo, "mismatch on\n{}", l.poset().to_text());
        geometric += usize::from(geo);
    }
    Ok(format!(
        "{} lattices ({enumerated} enumerated on ≤ 6 elements), {geometric} geometric, 0 exceptions",
        lattices.len()
    ))
}

fn oracle_any_order() -> Outcome {
    let mut rng = rng(0x5eed_0005);
    let corpus = lattice_corpus();
    let mut checked = 0;
    for inst in &corpus {
        let l = lattice(&inst.poset);
        let zeta = zeta_matrix(&inst.poset);
        let mu = mobius_matrix(&inst.poset);
        for _ in 0..5 {
            let order = random_order(&l, &mut rng);
            let z = compile_zeta_bjorklund(&l, &order).to_matrix().unwrap();
            let m = compile_mobius_bjorklund(&l, &order).to_matrix().unwrap();
            ensure!(z.entries() == zeta.entries(), "{}: zeta mismatch for {:?}", inst.name, order);
            ensure!(m.entries() == mu.entries(), "{}: Möbius mismatch for {:?}", inst.name, order);
            checked += 1;
        }
    }
    Ok(format!("{} lattices × 5 random orders = {checked} order checks", corpus.len()))
}

fn chain_contrast() -> Outcome {
    let small = lattice(&generators::chain(4).unwrap());
    let hand = compile_zeta_bjorklund(&small, &JirOrder::by_reverse_height(&small)).len();
    ensure!(hand == 6, "chain(4) top-down length {hand}, expected 3+2+1 = 6");
    let l = lattice(&generators::chain(16).unwrap());
    let e = l.poset().edge_count();
    let up = compile_zeta_bjorklund(&l, &JirOrder::by_height(&l)).len();
    let down = compile_zeta_bjorklund(&l, &JirOrder::by_reverse_height(&l));
    ensure!(up == 15 && up == e, "bottom-up length {up}");
    ensure!(down.len() == 120 && down.len() == e * (e + 1) / 2, "top-down length {}", down.len());
    ensure!(
        verify_slp(l.poset(), &down, Kind::Zeta).unwrap().is_match(),
        "top-down program is wrong"
    );
    Ok(format!("bottom-up {up} = e, top-down {} = e(e+1)/2", down.len()))
}

/// Rising chains grouped by `(x, y)`.
fn rising_chain_sets(p: &Poset, lab: &EdgeLabeling) -> BTreeMap<(usize, usize), Vec<Vec<usize>>> {
    let mut sets: BTreeMap<_, Vec<Vec<usize>>> = BTreeMap::new();
    for x in 0..p.len() {
        for chain in rising_chains_from(p, lab, x, usize::MAX) {
            let y = chain.last().map_or(x, |&k| p.covers()[k].1);
            sets.entry((x, y)).or_default().push(chain);
        }
    }
    for chains in sets.values_mut() {
        chains.sort();
    }
    sets
}

fn u_labeling_suite() -> Outcome {
    let mut count = 0;
    for inst in lattice_corpus() {
        let l = lattice(&inst.poset);
        if !l.is_semimodular() {
            continue;
        }
        let lab = semimodular_labeling(&l, &order_by_height(&l)).unwrap();
        ensure!(is_u_labeling(&inst.poset, &lab).is_u_labeling(), "{}: not a U-labeling", inst.name);
        let inj = make_injective(&inst.poset, &lab);
        ensure!(inj.is_injective(), "{}: not injective", inst.name);
        ensure!(
            rising_chain_sets(&inst.poset, &lab) == rising_chain_sets(&inst.poset, &inj),
            "{}: injectivization changed rising chains",
            inst.name
        );
        count += 1;
    }

    let pentagon = generators::pentagon();
    let reference = EdgeLabeling::from_pairs(
        &pentagon,
        &[("p", "q", 1), ("q", "r", 2), ("r", "s", 3), ("t", "s", 4), ("p", "t", 5)],
    )
    .unwrap();
    ensure!(is_u_labeling(&pentagon, &reference).is_u_labeling(), "pentagon labeling rejected");
    let program = compile_zeta_edges(&pentagon, &reference).unwrap();
    ensure!(program.len() == 5, "pentagon program has {} ops", program.len());
    ensure!(
        verify_slp(&pentagon, &program, Kind::Zeta).unwrap().is_match(),
        "pentagon program is not ζ"
    );

    let diamond = generators::diamond();
    let left = EdgeLabeling::from_pairs(
        &diamond,
        &[("a", "b", 1), ("a", "c", 2), ("b", "d", 3), ("c", "d", 4)],
    )
    .unwrap();
    let report = is_u_labeling(&diamond, &left);
    let (a, d) = (diamond.id_of("a").unwrap(), diamond.id_of("d").unwrap());
    ensure!(report.witness() == Some((a, d, 2)), "diamond witness {:?}", report.witness());
    Ok(format!(
        "{count} semimodular labelings are U-labelings with stable rising chains; pentagon 5 ops; diamond witness (a,d)"
    ))
}

fn hexagon_impossibility() -> Outcome {
    let hex = generators::hexagon();
    let mut labels: Vec<i64> = (1..=6).collect();
    let mut total = 0;
    let mut failure = None;
    for_each_permutation(&mut labels, &mut |perm| {
        let lab = EdgeLabeling::new(&hex, perm.to_vec()).unwrap();
        let u = is_u_labeling(&hex, &lab).is_u_labeling();
        let program = compile_zeta_edges(&hex, &lab).unwrap();
        let ok = verify_slp(&hex, &program, Kind::Zeta).unwrap().is_match();
        if (u || ok) && failure.is_none() {
            failure = Some(perm.to_vec());
        }
        total += 1;
    });
    ensure!(failure.is_none(), "labeling {:?} succeeded", failure.unwrap());
    ensure!(total == 720, "enumerated {total} labelings");
    Ok("720/720 injective labelings fail the U-test and ζ verification".into())
}

fn duality() -> Outcome {
    let p = generators::figure1();
    let l = lattice(&p);
    let lab = semimodular_labeling(&l, &order_by_height(&l)).unwrap();
    let dual = p.dual();
    let dual_lab = dual_labeling(&lab);
    ensure!(is_u_labeling(&dual, &dual_lab).is_u_labeling(), "dual labeling is not a U-labeling");
    let program = compile_zeta_edges(&dual, &make_injective(&dual, &dual_lab)).unwrap();
    ensure!(program.len() == 9, "dual program has {} additions", program.len());
    ensure!(
        verify_slp(&dual, &program, Kind::Zeta).unwrap().is_match(),
        "dual program is not ζ of the dual"
    );
    Ok("9-addition zeta program on the dual verifies".into())
}

fn inverse_composition() -> Outcome {
    let mut rng = rng(0x5eed_0010);
    let corpus = lattice_corpus();
    let mut pairs = 0;
    for inst in &corpus {
        let p = &inst.poset;
        let l = lattice(p);
        let order = order_by_height(&l);
        let labeling = if l.is_semimodular() {
            make_injective(p, &semimodular_labeling(&l, &order).unwrap())
        } else {
            EdgeLabeling::by_edge_index(p)
        };
        let families = [
            ("bjorklund", compile_zeta_bjorklund(&l, &order), compile_mobius_bjorklund(&l, &order)),
            (
                "edges",
                compile_zeta_edges(p, &labeling).unwrap(),
                compile_mobius_edges(p, &labeling).unwrap(),
            ),
        ];
        for (family, zeta, mobius) in &families {
            for (first, second) in [(zeta, mobius), (mobius, zeta)] {
                let composed = first.then(second).unwrap();
                for _ in 0..100 {
                    let x = random_vector(p.len(), &mut rng);
                    ensure!(
                        composed.evaluate(&x).unwrap() == x,
                        "{} {family}: composition is not the identity",
                        inst.name
                    );
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} compositions × 100 random vectors are the identity"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "figure1 zeta golden program", budget: Duration::from_secs(1), run: || golden(Kind::Zeta) },
        Criterion { id: 2, name: "figure1 Möbius golden program", budget: Duration::from_secs(1), run: || golden(Kind::Moebius) },
        Criterion { id: 3, name: "length e on semimodular lattices", budget: Duration::from_secs(30), run: semimodular_lengths },
        Criterion { id: 4, name: "cover condition iff geometric", budget: Duration::from_secs(300), run: cover_condition_equivalence },
        Criterion { id: 5, name: "oracle equivalence for random orders", budget: Duration::from_secs(120), run: oracle_any_order },
        Criterion { id: 6, name: "chain ordering contrast", budget: Duration::from_secs(1), run: chain_contrast },
        Criterion { id: 7, name: "U-labeling suite", budget: Duration::from_secs(30), run: u_labeling_suite },
        Criterion { id: 8, name: "hexagon has no U-labeling", budget: Duration::from_secs(10), run: hexagon_impossibility },
        Criterion { id: 9, name: "duality on figure1", budget: Duration::from_secs(1), run: duality },
        Criterion { id: 10, name: "zeta/Möbius programs are mutually inverse", budget: Duration::from_secs(60), run: inverse_composition },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(c.run)
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > c.budget => Err(format!("took {elapsed:.2?}, budget {:?}", c.budget)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {} ({elapsed:.2?}): {detail}", c.id, c.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{:>2}] {} ({elapsed:.2?}): {detail}", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
