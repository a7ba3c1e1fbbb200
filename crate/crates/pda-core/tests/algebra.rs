mod common;

use std::collections::BTreeSet;

use common::{computed, d_of, diagram};
use pda_core::algebra::{parse_element, parse_presentation, render_element, to_presentation, Element, FreeMfDGA};
use pda_core::diagram::{Chord, Sign};
use pda_core::disks::DiskBoundaryWord;
use pda_core::inscription::inscribe;
use pda_core::invariants::{augmentation_tree, combine_ce_augmentations, degree_zero};
use pda_core::words::{generate_words, is_admissible_word, restrict_to_pieces, word_grading};
use pda_core::AlgebraError;

fn presentation(gens: &[(&str, i64, usize)], diff: &[(&str, &str)]) -> String {
    let generators: Vec<_> = gens
        .iter()
        .map(|(s, d, l)| serde_json::json!({ "symbol": s, "degree": d, "level": l }))
        .collect();
    let differential: serde_json::Map<String, serde_json::Value> =
        diff.iter().map(|(k, v)| (k.to_string(), (*v).into())).collect();
    serde_json::json!({ "schema_version": 1, "generators": generators, "differential": differential }).to_string()
}

fn el(dga: &FreeMfDGA, text: &str) -> Element {
    parse_element(text, &dga.symbols(), &dga.t_names).unwrap()
}

#[test]
fn leibniz_rule() {
    let dga = parse_presentation(&presentation(&[("g", 1, 1), ("h", 0, 1)], &[("g", "1")])).unwrap();
    assert_eq!(dga.d(&Element::one()), Element::zero());
    assert_eq!(dga.d(&el(&dga, "g h")), el(&dga, "h"));
    assert_eq!(dga.d(&el(&dga, "h g")), el(&dga, "h"));
    assert_eq!(dga.d(&el(&dga, "g g")), Element::zero());
}

#[test]
fn constructed_violation_is_reported() {
    let text = presentation(&[("g", 3, 1), ("h", 2, 1), ("k", 1, 1)], &[("g", "h"), ("h", "k"), ("k", "1")]);
    match parse_presentation(&text) {
        Err(pda_core::algebra::PresentationError::Algebra(AlgebraError::Invariant { generator, .. })) => {
            assert_eq!(generator, "g")
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn filtration_raising_presentation_is_rejected() {
    let text = presentation(&[("g", 1, 1), ("h", 0, 2)], &[("g", "h")]);
    assert!(parse_presentation(&text).is_err());
}

#[test]
fn presentation_round_trip() {
    for name in ["hopf", "polyfillable", "venn3"] {
        let (_, c) = computed(name);
        let text = serde_json::to_string(&to_presentation(&c.dga)).unwrap();
        let back = parse_presentation(&text).unwrap();
        assert_eq!(back.symbols(), c.dga.symbols(), "{name}");
        assert_eq!(back.differential, c.dga.differential, "{name}");
        assert_eq!(back.pieces, c.dga.pieces);
        assert_eq!(to_presentation(&back), to_presentation(&c.dga));
    }
}

#[test]
fn tame_substitutions() {
    let (_, c) = computed("polyfillable");
    let dga = &c.dga;
    assert_eq!(dga.apply_tame(&[]).unwrap(), *dga);
    let g = dga.index_of("(k11_4)").unwrap();
    // (k11_4) -> (k11_4) + (k11_5): same degree and level
    let moved = dga.apply_tame(&[(g, el(dga, "(k11_5)"))]).unwrap();
    assert!(moved.check_square_zero().is_empty());
    assert!(matches!(dga.apply_tame(&[(g, el(dga, "(k11_4) (k11_1)"))]), Err(AlgebraError::Tame(_))));
    assert!(matches!(dga.apply_tame(&[(g, el(dga, "(k11_1)"))]), Err(AlgebraError::Tame(_))));
    let low = dga.index_of("(k11_1)").unwrap();
    assert!(matches!(
        dga.apply_tame(&[(low, el(dga, "(k12_1 k21_1)"))]),
        Err(AlgebraError::Tame(_))
    ));
}

#[test]
fn stabilize_then_project() {
    let (_, c) = computed("hopf");
    let (s, hi, lo) = c.dga.stabilize(2, 1);
    assert_eq!((s.generators[hi].level, s.generators[lo].level), (2, 2));
    assert_eq!(s.generators[hi].degree, 1);
    assert_eq!(s.generators[lo].degree, 0);
    for g in 0..c.dga.len() {
        assert_eq!(s.stab_projection(&s.differential[g], &[(hi, lo)]), c.dga.differential[g]);
    }
}

#[test]
fn expression_errors() {
    let (_, c) = computed("hopf");
    let dga = &c.dga;
    assert!(matches!(
        parse_element("(k9)", &dga.symbols(), &dga.t_names),
        Err(AlgebraError::UnknownGenerator(_))
    ));
    assert!(matches!(
        parse_element("(k3) +", &dga.symbols(), &dga.t_names),
        Err(AlgebraError::Expression { .. })
    ));
    let x = el(dga, "T1^2 T2^-1 (k3) (k4) + 1 + 1");
    assert_eq!(render_element(dga, &x), "T1^2 T2^-1 (k3) (k4)");
}

#[test]
fn words_of_the_polyfillable_link() {
    let (d, c) = computed("polyfillable");
    let sym = |w: &[usize]| pda_core::words::word_symbol(w, &c.chords);
    let ring = c.ring;
    let find = |s: &str| c.words.iter().find(|w| sym(&w.chords) == s).unwrap().chords.clone();
    assert_eq!(word_grading(&find("(k12_1 k21_1)"), &c.chords, &d, ring), 0);
    assert_eq!(word_grading(&find("(k12_2 k21_2)"), &c.chords, &d, ring), 2);
    let single = find("(k11_4)");
    assert_eq!(word_grading(&single, &c.chords, &d, ring), c.chords[single[0]].grading);
    // rotations are distinct generators
    assert_ne!(find("(k12_1 k21_1)"), find("(k21_1 k12_1)"));
    for w in &c.words {
        assert!(is_admissible_word(&w.chords, &c.chords));
    }
}

#[test]
fn one_piece_gives_single_chords() {
    let (_, c) = computed("polyfillable_single");
    assert_eq!(c.words.len(), c.chords.len());
    assert!(c.words.iter().all(|w| w.len() == 1));
    let d = diagram("polyfillable_single");
    assert_eq!(generate_words(&c.chords, &d, c.ring), c.words);
}

#[test]
fn restriction_to_pieces() {
    let (_, c) = computed("hopf");
    let sym = |ws: &[pda_core::words::CyclicWord]| -> Vec<String> { ws.iter().map(|w| w.symbol(&c.chords)).collect() };
    let two: BTreeSet<usize> = [2].into();
    assert_eq!(sym(&restrict_to_pieces(&c.words, &c.chords, &two).unwrap()), ["(k3)"]);
    let one: BTreeSet<usize> = [1].into();
    assert_eq!(sym(&restrict_to_pieces(&c.words, &c.chords, &one).unwrap()), ["(k4)"]);
    let all: BTreeSet<usize> = [1, 2].into();
    assert_eq!(restrict_to_pieces(&c.words, &c.chords, &all).unwrap(), c.words);
    assert!(restrict_to_pieces(&c.words, &c.chords, &BTreeSet::new()).is_none());
}

fn chord(k: usize, start: usize, end: usize) -> Chord {
    Chord {
        crossing: k,
        id: format!("c{}", k + 1),
        start_comp: start,
        end_comp: end,
        start_piece: start,
        end_piece: end,
        sigma: 0,
        grading: 0,
    }
}

#[test]
fn inscription_into_a_four_chord_word() {
    // Pieces 0..4 with one component each. w = (c1 c2 c3 c4) runs 3 -> 0 -> 1 -> 2 -> 3.
    let chords = vec![
        chord(0, 3, 0),
        chord(1, 0, 1),
        chord(2, 1, 2),
        chord(3, 2, 3),
        chord(4, 0, 0),
        chord(5, 2, 1),
        chord(6, 3, 2),
    ];
    let pieces: Vec<usize> = (0..4).collect();
    let ends: Vec<usize> = chords.iter().map(|c| c.end_piece).collect();
    let w = [0, 1, 2, 3];
    assert!(is_admissible_word(&w, &chords));
    let u = DiskBoundaryWord::abstract_word(
        &[(0, Sign::Pos), (4, Sign::Neg), (1, Sign::Pos), (5, Sign::Neg), (6, Sign::Neg)],
        &chords,
    )
    .unwrap();
    let r = inscribe(&u, &w, &pieces, &ends).unwrap();
    assert_eq!(r.words, vec![vec![4], vec![5, 2], vec![6, 3]]);
    for out in &r.words {
        assert!(is_admissible_word(out, &chords));
    }
    // positive chords that are not in w
    let v = DiskBoundaryWord::abstract_word(&[(4, Sign::Pos)], &chords).unwrap();
    assert!(inscribe(&v, &w, &pieces, &ends).is_none());
}

#[test]
fn inscription_of_strips_and_one_positive_disks() {
    let chords = vec![chord(0, 0, 0), chord(1, 0, 0), chord(2, 0, 0)];
    let pieces = [0];
    let ends = [0, 0, 0];
    let strip = DiskBoundaryWord::abstract_word(&[(0, Sign::Pos), (0, Sign::Neg)], &chords).unwrap();
    assert_eq!(inscribe(&strip, &[0], &pieces, &ends).unwrap().words, vec![vec![0]]);
    let ce = DiskBoundaryWord::abstract_word(&[(0, Sign::Pos), (1, Sign::Neg), (2, Sign::Neg)], &chords).unwrap();
    assert_eq!(inscribe(&ce, &[0], &pieces, &ends).unwrap().words, vec![vec![1], vec![2]]);
}

#[test]
fn hopf_inscriptions() {
    let (d, c) = computed("hopf");
    let comp_piece: Vec<usize> = d.components.iter().map(|x| x.piece).collect();
    let ends: Vec<usize> = c.chords.iter().map(|x| x.end_piece).collect();
    let disk = |s: &str| c.disks.disks.iter().find(|u| u.word_string(&d) == s).unwrap();
    let k = |id: &str| d.crossing_index(id).unwrap();
    let r = inscribe(disk("k1+ k2+"), &[k("k1"), k("k2")], &comp_piece, &ends).unwrap();
    assert!(r.words.is_empty());
    assert_eq!(r.coefficient.render(&d.t_names()), "T2^-1");
    assert!(inscribe(disk("k1- k2- k3+"), &[k("k3")], &comp_piece, &ends).is_none());
    assert_eq!(d_of(&c.dga, "(k3)"), "1 + T2^-1");
}

#[test]
fn combined_augmentations() {
    let (_, c) = computed("polyfillable");
    let dga = &c.dga;
    let k1 = dga.index_of("(k11_1)").unwrap();
    let eps = combine_ce_augmentations(dga, &[[k1].into(), BTreeSet::new()]).unwrap();
    assert_eq!(eps.bits(&degree_zero(dga, 1)), "100");
    assert!(combine_ce_augmentations(dga, &[BTreeSet::new(), BTreeSet::new()]).is_err());
    let (_, h) = computed("hopf");
    let e = combine_ce_augmentations(&h.dga, &[BTreeSet::new(), BTreeSet::new()]).unwrap();
    assert!(e.ones.is_empty());
}

#[test]
fn tree_of_an_empty_algebra() {
    let dga = parse_presentation(&presentation(&[], &[])).unwrap();
    let tree = augmentation_tree(&dga).unwrap();
    assert_eq!(tree.vertices.len(), 1);
}
