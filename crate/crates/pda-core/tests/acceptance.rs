//! One line per acceptance criterion. Runs as a plain binary so the
//! summary is printed even when everything passes.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::{computed, d_of, read, torsion, DIAGRAMS};
use pda_core::algebra::{Element, FreeMfDGA, Mode, Term};
use pda_core::diagram::parse_diagram;
use pda_core::disks::{enumerate_disks, is_admissible, oracle_enumerate, Limits};
use pda_core::inscription::inscribe;
use pda_core::invariants::{
    augmentation_tree, augmentations, bilinearized_complex, cochain_complex, degree_zero,
    fundamental_class_zero, poincare_polynomial, spectral_poincare, spectral_sequence, tau_aug,
    tau_vanishing, Augmentation, Direction, Tau, Vanishing,
};
use pda_core::laurent::Monomial;
use pda_core::moves::{double_point_phi, parse_move_spec, verify_triple_point, Side};
use pda_core::words::is_admissible_word;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn hopf() -> Check {
    let (_, c) = computed("hopf");
    let dga = &c.dga;
    for (s, want) in [
        ("(k3)", "1 + T2^-1"),
        ("(k4)", "1 + T1"),
        ("(k1 k2)", "T2^-1"),
        ("(k2 k1)", "T2^-1"),
    ] {
        let got = d_of(dga, s);
        ensure!(got == want, "d{s} = {got}, expected {want}");
    }
    ensure!(tau_aug(dga) == Tau::Finite(1), "tau_aug = {:?}", tau_aug(dga));
    match tau_vanishing(dga, 2, 1) {
        Vanishing::Vanishes(x) => ensure!(dga.d(&x) == Element::one(), "bad certificate"),
        other => return Err(format!("no certificate at level 2: {other:?}")),
    }
    ensure!(augmentations(dga, 1).len() == 1, "level-1 augmentations are not unique");
    Ok(())
}

const POLY: &[(&str, usize, i64, &str)] = &[
    ("(k11_1)", 1, 0, "0"),
    ("(k11_2)", 1, 0, "0"),
    ("(k11_3)", 1, 0, "0"),
    ("(k11_4)", 1, 1, "1 + (k11_1) + (k11_1) (k11_2) (k11_3) + (k11_3)"),
    ("(k11_5)", 1, 1, "1 + (k11_1) + (k11_3) + (k11_3) (k11_2) (k11_1)"),
    ("(k22_1)", 1, 1, "0"),
    ("(k12_1 k21_2)", 2, 1, "1 + (k12_1 k21_1) (k11_1)"),
    ("(k12_1 k21_1)", 2, 0, "0"),
    ("(k21_2 k12_1)", 2, 1, "1 + (k11_1) (k21_1 k12_1)"),
    ("(k21_2 k12_2)", 2, 2, "(k11_1) (k21_1 k12_2) + (k21_2 k12_1) (k11_1)"),
    ("(k12_2 k21_2)", 2, 2, "(k12_1 k21_2) (k11_1) + (k12_2 k21_1) (k11_1)"),
    ("(k12_2 k21_1)", 2, 1, "1 + (k12_1 k21_1) (k11_1)"),
    ("(k21_1 k12_1)", 2, 0, "0"),
    ("(k21_1 k12_2)", 2, 1, "1 + (k21_1 k12_1) (k11_1)"),
];

fn restrict(e: &Augmentation, dga: &FreeMfDGA, level: usize) -> Augmentation {
    Augmentation {
        level,
        ones: e.ones.iter().copied().filter(|&g| dga.generators[g].level <= level).collect(),
    }
}

fn polyfillable() -> Check {
    let (_, c) = computed("polyfillable");
    let dga = &c.dga;
    ensure!(dga.len() == POLY.len(), "{} generators", dga.len());
    for (gen, &(s, l, deg, d)) in dga.generators.iter().zip(POLY) {
        ensure!(
            (gen.symbol.as_str(), gen.level, gen.degree) == (s, l, deg),
            "generator {} at level {} degree {}, expected {s} {l} {deg}",
            gen.symbol,
            gen.level,
            gen.degree
        );
        let got = d_of(dga, s);
        ensure!(got == d, "d{s} = {got}");
    }
    let bits = |level| -> Vec<String> {
        let over = degree_zero(dga, level);
        augmentations(dga, level).iter().map(|e| e.bits(&over)).collect()
    };
    ensure!(bits(1) == ["001", "011", "100", "110", "111"], "level 1: {:?}", bits(1));
    ensure!(bits(2) == ["10011", "11011", "11111"], "level 2: {:?}", bits(2));
    let tree = augmentation_tree(dga).map_err(|e| e.to_string())?;
    let over = degree_zero(dga, 1);
    let mut parents: Vec<String> = tree
        .at_level(2)
        .iter()
        .map(|&v| tree.vertices[tree.vertices[v].parent.unwrap()].representative.bits(&over))
        .collect();
    parents.sort();
    ensure!(tree.at_level(1).len() == 5 && parents == ["100", "110", "111"], "tree shape {parents:?}");

    let p = |el: &Augmentation, er: &Augmentation, level| -> Result<BTreeMap<i64, usize>, String> {
        let cx = bilinearized_complex(dga, el, er, level).map_err(|e| e.to_string())?;
        Ok(poincare_polynomial(&cx, dga.ring))
    };
    let one_plus_t: BTreeMap<i64, usize> = [(0, 1), (1, 1)].into();
    let two_plus_2t: BTreeMap<i64, usize> = [(0, 2), (1, 2)].into();
    let a1 = augmentations(dga, 1);
    for (i, el) in a1.iter().enumerate() {
        for (j, er) in a1.iter().enumerate() {
            let want = if i == j { &two_plus_2t } else { &one_plus_t };
            ensure!(&p(el, er, 1)? == want, "level 1 pair ({i}, {j})");
        }
    }
    let a2 = augmentations(dga, 2);
    for el in &a2 {
        for er in &a2 {
            let top = p(el, er, 2)?;
            ensure!(top == p(&restrict(el, dga, 1), &restrict(er, dga, 1), 1)?, "level 2 differs from level 1");
            let cx = bilinearized_complex(dga, el, er, 2).map_err(|e| e.to_string())?;
            let pages = spectral_sequence(&cx, dga.ring, Direction::Homology, 3);
            let mut want = BTreeMap::new();
            for (&t, &n) in &top {
                want.insert((t, 0, 0), n);
                want.insert((t, 1, 0), n);
            }
            ensure!(spectral_poincare(&pages, 2) == want, "spectral polynomial is not (1 + x) P");
        }
    }
    Ok(())
}

fn high_torsion() -> Check {
    for k in 2..=5 {
        let dga = torsion(k);
        ensure!(tau_aug(&dga) == Tau::Finite(k), "k = {k}: tau_aug = {:?}", tau_aug(&dga));
        match tau_vanishing(&dga, k + 1, 3) {
            Vanishing::Vanishes(x) => ensure!(dga.d(&x) == Element::one(), "k = {k}: bad certificate"),
            other => return Err(format!("k = {k}: {other:?}")),
        }
    }
    Ok(())
}

fn structure(name: &str, rng: &mut ChaCha8Rng) -> Check {
    let (d, c) = computed(name);
    let dga = &c.dga;
    ensure!(dga.check_square_zero().is_empty(), "{name}: d^2 != 0");
    for (g, gen) in dga.generators.iter().enumerate() {
        for t in dga.differential[g].terms() {
            ensure!(dga.ring.eq(dga.term_degree(t), gen.degree - 1), "{name}: degree of d{}", gen.symbol);
            ensure!(
                t.word.iter().all(|&h| dga.generators[h].level <= gen.level),
                "{name}: d{} raises the filtration",
                gen.symbol
            );
        }
    }

    let comp_piece: Vec<usize> = d.components.iter().map(|x| x.piece).collect();
    let end_piece: Vec<usize> = c.chords.iter().map(|x| x.end_piece).collect();
    for u in c.disks.disks.iter().filter(|u| is_admissible(u, &d, &c.chords)) {
        for w in &c.words {
            if let Some(r) = inscribe(u, &w.chords, &comp_piece, &end_piece) {
                ensure!(
                    r.words.iter().all(|o| is_admissible_word(o, &c.chords) && o.len() <= w.len()),
                    "{name}: bad inscription output"
                );
            }
        }
    }

    let com = dga.quotient(Mode::Com).map_err(|e| e.to_string())?;
    let cyc = com.quotient(Mode::Cyc).map_err(|e| e.to_string())?;
    ensure!(com.check_square_zero().is_empty() && cyc.check_square_zero().is_empty(), "{name}: quotient d^2 != 0");
    for g in 0..dga.len() {
        let x = Element::letter(g);
        ensure!(com.normalize(&dga.d(&x)) == com.d(&x), "{name}: full -> com");
    }

    for m in [1, 2, 8] {
        let limits = Limits {
            max_face_multiplicity: m,
        };
        ensure!(
            enumerate_disks(&d, limits).map_err(|e| e.to_string())? == oracle_enumerate(&d, limits).map_err(|e| e.to_string())?,
            "{name}: fast path differs from oracle at multiplicity {m}"
        );
    }

    let n = dga.pieces;
    for level in 1..=n {
        let augs = augmentations(dga, level);
        for e in &augs {
            ensure!(fundamental_class_zero(dga, e, e).map_err(|x| x.to_string())?, "{name}: not self-homotopic");
        }
        for e in augs.iter().take(3) {
            for (cx, dir) in [
                (bilinearized_complex(dga, e, e, level), Direction::Homology),
                (cochain_complex(dga, e, e, level), Direction::Cohomology),
            ] {
                let cx = cx.map_err(|x| x.to_string())?;
                let pages = spectral_sequence(&cx, dga.ring, dir, n + 1);
                ensure!(pages.stable_from().is_some_and(|r| r <= n), "{name}: pages still move after r = {n}");
            }
        }
    }

    let (s1, hi1, lo1) = dga.stabilize(1, 1);
    let (s2, hi2, lo2) = s1.stabilize(n, 0);
    let pairs = [(hi1, lo1), (hi2, lo2)];
    for _ in 0..500 {
        let len = rng.gen_range(0..=4);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..s2.len())).collect();
        let coef = Monomial((0..s2.t_names.len()).map(|_| rng.gen_range(-2..=2)).collect());
        let x = Element::from_term(Term::new(coef, word));
        let h = |y: &Element| s2.stab_homotopy(y, &pairs).map_err(|e| e.to_string());
        let lhs = s2.d(&h(&x)?).add(&h(&s2.d(&x))?);
        ensure!(lhs == x.add(&s2.stab_projection(&x, &pairs)), "{name}: homotopy identity fails");
    }
    Ok(())
}

fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in DIAGRAMS {
        structure(name, &mut rng)?;
    }
    Ok(())
}

fn moves() -> Check {
    let load = |prefix: &str| -> Result<_, String> {
        let mut out = Vec::new();
        for tag in ["minus", "plus"] {
            let d = parse_diagram(&read(&format!("moves/{prefix}_{tag}.json"))).map_err(|e| e.to_string())?;
            let c = common::compute(&d);
            out.push((d, c));
        }
        Ok(out)
    };
    let spec = |name: &str| parse_move_spec(&read(&format!("moves/{name}.json"))).map_err(|e| e.to_string());
    let t = load("triple")?;
    verify_triple_point(
        Side { diagram: &t[0].0, comp: &t[0].1 },
        Side { diagram: &t[1].0, comp: &t[1].1 },
        &spec("triple_spec")?,
    )
    .map_err(|e| format!("triple point: {e}"))?;
    let dp = load("double")?;
    let report = double_point_phi(
        Side { diagram: &dp[0].0, comp: &dp[0].1 },
        Side { diagram: &dp[1].0, comp: &dp[1].1 },
        &spec("double_spec")?,
    )
    .map_err(|e| format!("double point: {e}"))?;
    let minus = &dp[0].1.dga;
    for g in 0..minus.len() {
        let lhs = report.target.d(&report.phi[g]);
        let rhs = report.target.substitute(&minus.differential[g], &report.phi);
        ensure!(lhs == rhs, "double point: not a chain map at {}", minus.generators[g].symbol);
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Option<fn() -> Check>, Duration); 6] = [
        ("1 hopf link", Some(hopf), Duration::from_secs(1)),
        ("2 polyfillable link", Some(polyfillable), Duration::from_secs(10)),
        ("3 high-torsion presentations", Some(high_torsion), Duration::from_secs(4)),
        ("4 property suite", Some(properties), Duration::MAX),
        ("5 move verification", Some(moves), Duration::MAX),
        ("6 full-scale geometric claims", None, Duration::MAX),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let Some(check) = check else {
            println!("SKIP  {name}: out of scope, not reproducible by computation");
            continue;
        };
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(()) => {
                // runtime budgets refer to optimized builds
                let note = if took > budget && !cfg!(debug_assertions) { " (over budget)" } else { "" };
                println!("PASS  {name} [{:.2?}]{note}", took);
            }
            Err(e) => {
                failed += 1;
                println!("FAIL  {name} [{:.2?}]: {e}", took);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
