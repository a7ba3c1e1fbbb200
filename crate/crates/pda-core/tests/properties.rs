//! Structural properties checked on every bundled diagram.

mod common;

use std::collections::BTreeMap;

use common::{computed, DIAGRAMS};
use pda_core::algebra::{Element, FreeMfDGA, Mode, Term};
use pda_core::disks::{enumerate_disks, is_admissible, oracle_enumerate, Limits};
use pda_core::inscription::inscribe;
use pda_core::invariants::{
    augmentations, bilinearized_complex, cochain_complex, fundamental_class_zero, spectral_sequence,
    Augmentation, Direction,
};
use pda_core::laurent::Monomial;
use pda_core::words::is_admissible_word;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn differential_squares_to_zero() {
    for name in DIAGRAMS {
        let (_, c) = computed(name);
        assert!(c.dga.warnings.is_empty(), "{name}: {:?}", c.dga.warnings);
        assert!(c.dga.check_square_zero().is_empty(), "{name}");
        for g in 0..c.dga.len() {
            assert!(c.dga.d(&c.dga.d(&Element::letter(g))).is_zero(), "{name}");
        }
    }
}

#[test]
fn differential_lowers_degree_and_keeps_filtration() {
    for name in DIAGRAMS {
        let (_, c) = computed(name);
        let dga = &c.dga;
        for (g, gen) in dga.generators.iter().enumerate() {
            for t in dga.differential[g].terms() {
                assert!(dga.ring.eq(dga.term_degree(t), gen.degree - 1), "{name} {}", gen.symbol);
                assert!(
                    t.word.iter().all(|&h| dga.generators[h].level <= gen.level),
                    "{name} {}",
                    gen.symbol
                );
            }
        }
    }
}

#[test]
fn inscriptions_are_admissible_and_do_not_lengthen() {
    for name in DIAGRAMS {
        let (d, c) = computed(name);
        let comp_piece: Vec<usize> = d.components.iter().map(|x| x.piece).collect();
        let end_piece: Vec<usize> = c.chords.iter().map(|x| x.end_piece).collect();
        let mut count = 0;
        for u in c.disks.disks.iter().filter(|u| is_admissible(u, &d, &c.chords)) {
            for w in &c.words {
                let Some(r) = inscribe(u, &w.chords, &comp_piece, &end_piece) else {
                    continue;
                };
                count += 1;
                for out in &r.words {
                    assert!(is_admissible_word(out, &c.chords), "{name}");
                    assert!(out.len() <= w.len(), "{name}");
                }
            }
        }
        assert!(count > 0, "{name} has no inscriptions");
    }
}

/// The cyc generator of every full generator, matched by rotation.
fn rotation_classes(full: &FreeMfDGA, cyc: &FreeMfDGA) -> Vec<usize> {
    full.generators
        .iter()
        .map(|g| {
            let w = g.chords.as_ref().unwrap();
            cyc.generators
                .iter()
                .position(|h| {
                    let v = h.chords.as_ref().unwrap();
                    v.len() == w.len() && (0..w.len()).any(|r| {
                        let mut x = w.clone();
                        x.rotate_left(r);
                        &x == v
                    })
                })
                .unwrap()
        })
        .collect()
}

#[test]
fn quotients_are_chain_maps() {
    for name in DIAGRAMS {
        let (_, c) = computed(name);
        let full = &c.dga;
        let com = full.quotient(Mode::Com).unwrap();
        let cyc = com.quotient(Mode::Cyc).unwrap();
        assert!(com.check_square_zero().is_empty() && cyc.check_square_zero().is_empty(), "{name}");
        let class = rotation_classes(full, &cyc);
        for g in 0..full.len() {
            let x = Element::letter(g);
            // full -> com is the identity on letters
            assert_eq!(com.normalize(&full.d(&x)), com.d(&x), "{name} com");
            let down = |y: &Element| cyc.normalize(&y.map_letters(|&h| class[h]));
            assert_eq!(down(&full.d(&x)), cyc.d(&down(&x)), "{name} cyc at {}", full.generators[g].symbol);
        }
    }
}

#[test]
fn fast_path_matches_oracle() {
    for name in DIAGRAMS {
        let d = common::diagram(name);
        for m in [1, 2, 8] {
            let limits = Limits {
                max_face_multiplicity: m,
            };
            assert_eq!(
                enumerate_disks(&d, limits).unwrap(),
                oracle_enumerate(&d, limits).unwrap(),
                "{name} at multiplicity {m}"
            );
        }
    }
}

/// At most `k` augmentations per level, spread over the list.
fn sample(augs: Vec<Augmentation>, k: usize) -> Vec<Augmentation> {
    if augs.len() <= k {
        return augs;
    }
    let step = augs.len() / k;
    augs.into_iter().step_by(step).take(k).collect()
}

#[test]
fn spectral_pages_stabilize_by_piece_count() {
    for name in DIAGRAMS {
        let (_, c) = computed(name);
        let dga = &c.dga;
        let n = dga.pieces;
        for level in 1..=n {
            let augs = sample(augmentations(dga, level), 4);
            for el in &augs {
                for er in &augs {
                    for (cx, dir) in [
                        (bilinearized_complex(dga, el, er, level).unwrap(), Direction::Homology),
                        (cochain_complex(dga, el, er, level).unwrap(), Direction::Cohomology),
                    ] {
                        assert!(cx.is_square_zero(), "{name}");
                        let pages = spectral_sequence(&cx, dga.ring, dir, n + 1);
                        assert_eq!(pages.pages[n], pages.pages[n + 1], "{name} level {level}");
                        assert!(pages.stable_from().is_some_and(|r| r <= n), "{name} level {level}");
                    }
                }
            }
        }
    }
}

#[test]
fn augmentations_are_self_homotopic() {
    for name in DIAGRAMS {
        let (_, c) = computed(name);
        for level in 1..=c.dga.pieces {
            for eps in augmentations(&c.dga, level) {
                assert!(fundamental_class_zero(&c.dga, &eps, &eps).unwrap(), "{name} level {level}");
            }
        }
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, dga: &FreeMfDGA) -> Element {
    let len = rng.gen_range(0..=4);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..dga.len())).collect();
    let coef = Monomial((0..dga.t_names.len()).map(|_| rng.gen_range(-2..=2)).collect());
    Element::from_term(Term::new(coef, word))
}

#[test]
fn stabilization_homotopy_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in DIAGRAMS {
        let (_, c) = computed(name);
        let base = &c.dga;
        // one canceling pair at the bottom level and one at the top
        let (s1, hi1, lo1) = base.stabilize(1, 1);
        let (s2, hi2, lo2) = s1.stabilize(base.pieces, 0);
        let pairs = [(hi1, lo1), (hi2, lo2)];
        assert!(s2.check_square_zero().is_empty());
        assert_eq!(s2.stab_homotopy(&Element::one(), &pairs).unwrap(), Element::zero());
        assert_eq!(
            s2.stab_homotopy(&Element::letter(lo1), &pairs).unwrap(),
            Element::letter(hi1)
        );
        for _ in 0..500 {
            let x = random_monomial(&mut rng, &s2);
            let h = |y: &Element| s2.stab_homotopy(y, &pairs).unwrap();
            let lhs = s2.d(&h(&x)).add(&h(&s2.d(&x)));
            let rhs = x.add(&s2.stab_projection(&x, &pairs));
            assert_eq!(lhs, rhs, "{name}");
        }
    }
}

#[test]
fn stabilization_keeps_homology() {
    for name in DIAGRAMS {
        let (_, c) = computed(name);
        let base = &c.dga;
        let (stab, _, _) = base.stabilize(1, 1);
        for level in 1..=base.pieces {
            let augs = sample(augmentations(base, level), 3);
            for eps in &augs {
                let p = |dga: &FreeMfDGA| -> BTreeMap<i64, usize> {
                    let e = Augmentation {
                        level,
                        ones: eps.ones.clone(),
                    };
                    let cx = bilinearized_complex(dga, &e, &e, level).unwrap();
                    pda_core::invariants::poincare_polynomial(&cx, dga.ring)
                };
                assert_eq!(p(base), p(&stab), "{name} level {level}");
            }
        }
    }
}
