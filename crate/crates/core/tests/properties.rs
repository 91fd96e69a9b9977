use ant_core::render::{render_states, render_truchet, truchet_region, Palette, TruchetStyle};
use ant_core::rules::Turn;
use ant_core::snapshot;
use ant_core::symmetry::{Isometry, IsometryKind};
use ant_core::truchet::{contours_through, diagonals_graph, tile_geometry};
use ant_core::{Cell, RuleString, Universe};
use proptest::prelude::*;
use rustc_hash::FxHashMap;

fn letters(max: usize) -> impl Strategy<Value = Vec<Turn>> {
    prop::collection::vec(prop_oneof![Just(Turn::L), Just(Turn::R)], 1..=max)
}

fn rule_starting_with_l(max: usize) -> impl Strategy<Value = RuleString> {
    letters(max).prop_map(|mut v| {
        v[0] = Turn::L;
        RuleString::from_letters(v).unwrap()
    })
}

/// Even run-length rules, built run by run and rotated.
fn even_run_rule() -> impl Strategy<Value = RuleString> {
    (prop::collection::vec(1usize..=3, 1..=4), 0usize..16).prop_map(|(runs, rot)| {
        let mut v = Vec::new();
        for (i, half) in runs.iter().enumerate() {
            let t = if i % 2 == 0 { Turn::L } else { Turn::R };
            v.extend(std::iter::repeat_n(t, 2 * half));
        }
        let r = rot % v.len();
        v.rotate_left(r);
        RuleString::from_letters(v).unwrap()
    })
}

fn run(rule: &RuleString, t: u64) -> Universe {
    let mut u = Universe::new(rule.clone());
    u.run(t);
    u
}

fn kind() -> impl Strategy<Value = IsometryKind> {
    prop_oneof![
        Just(IsometryKind::PointReflection),
        Just(IsometryKind::MirrorVertical),
        Just(IsometryKind::MirrorHorizontal),
        Just(IsometryKind::MirrorDiagonal),
        Just(IsometryKind::MirrorAntiDiagonal),
    ]
}

proptest! {
    #[test]
    fn code_round_trip(rule in rule_starting_with_l(16)) {
        let again = RuleString::from_code(rule.code()).unwrap();
        prop_assert_eq!(&again, &rule);
        prop_assert_eq!(RuleString::parse(&rule.to_string()).unwrap(), rule.clone());
        prop_assert_eq!(RuleString::parse_spec(&rule.code().to_string()).unwrap(), rule);
    }

    #[test]
    fn even_runs_divisible_by_three(rule in even_run_rule()) {
        prop_assert!(rule.has_even_run_length());
        // Read as binary with the rotation of the letters, the code is a sum
        // of blocks 11·4^k or 00·4^k, each a multiple of 3.
        prop_assert_eq!(rule.code() % 3, 0);
    }

    #[test]
    fn cyclic_runs_concatenate_to_a_rotation(v in letters(16)) {
        let rule = RuleString::from_letters(v.clone()).unwrap();
        let rs = rule.run_structure();
        let joined: Vec<Turn> = rs
            .cyclic_runs
            .iter()
            .flat_map(|&(t, len)| std::iter::repeat_n(t, len))
            .collect();
        let mut rotated = v.clone();
        rotated.rotate_left(rs.start_state - 1);
        prop_assert_eq!(joined, rotated);
        prop_assert_eq!(rs.even_run_length, rs.cyclic_runs.iter().all(|&(_, l)| l % 2 == 0));
    }

    #[test]
    fn cold_xor_hot(rule in even_run_rule()) {
        let heat = rule.heat().unwrap();
        let start = rule.run_structure().start_state;
        for s in 1..=rule.n() as u8 {
            prop_assert!(heat.cold(s) ^ heat.hot(s));
            let offset = (usize::from(s) + rule.n() - start) % rule.n();
            prop_assert_eq!(heat.cold(s), offset % 2 == 0);
            if heat.cold(s) {
                prop_assert_eq!(rule.turn(s), rule.turn(rule.next_state(s)));
            }
        }
    }

    #[test]
    fn engine_invariants(rule in rule_starting_with_l(8), t in 0u64..3_000) {
        let mut u = Universe::new(rule.clone());
        for _ in 0..t {
            // Horizontal headings only ever target H-cells.
            prop_assert!(u.pose().is_lattice_consistent());
            prop_assert_eq!(u.pose().target.is_h_cell(), u.time().is_multiple_of(2));
            let before = u.visited_count();
            u.step();
            prop_assert!(u.visited_count() - before <= 1);
        }
        for (_, s, _) in u.cells() {
            prop_assert!((1..=rule.n() as u8).contains(&s));
        }
    }

    #[test]
    fn contours_partition_arcs(rule in rule_starting_with_l(6), t in 0u64..400) {
        let u = run(&rule, t);
        let region = truchet_region(&u, &TruchetStyle { margin: 0, ..TruchetStyle::default() }).unwrap();
        let contours = contours_through(&u, region, 1_000_000).unwrap();
        let mut owner: FxHashMap<_, usize> = FxHashMap::default();
        for (i, c) in contours.iter().enumerate() {
            prop_assert!(c.is_closed());
            for a in c.arcs() {
                if let Some(j) = owner.insert(a.undirected(), i) {
                    prop_assert_eq!(j, i, "arc in two contours");
                }
            }
        }
        for c in region.cells_top_down() {
            let (arcs, _) = tile_geometry(c, rule.turn(u.state(c)));
            for a in arcs {
                prop_assert!(owner.contains_key(&a.undirected()));
            }
        }
    }

    #[test]
    fn handshake(rule in even_run_rule(), t in 0u64..5_000) {
        let g = diagonals_graph(&run(&rule, t)).unwrap();
        prop_assert_eq!(g.odd_vertex_count() % 2, 0);
        let total: u32 = g.degrees().values().sum();
        prop_assert_eq!(total as usize, 2 * g.edge_count());
    }

    #[test]
    fn isometries_are_involutions(k in kind(), ax in -20i64..20, ay in -20i64..20, x in -50i64..50, y in -50i64..50) {
        let iso = Isometry::new(k, (ax, ay));
        let c = Cell::new(x, y);
        if let Some(m) = iso.apply(c) {
            prop_assert_eq!(iso.apply(m), Some(c));
        }
    }

    #[test]
    fn outputs_are_deterministic(rule in rule_starting_with_l(6), t in 1u64..2_000) {
        let u = run(&rule, t);
        let text = snapshot::to_string(&u);
        prop_assert_eq!(snapshot::to_string(&snapshot::from_str(&text).unwrap()), text.clone());
        prop_assert_eq!(&snapshot::from_str(&text).unwrap(), &u);
        let palette = Palette::evenly_spaced(rule.n());
        prop_assert_eq!(render_states(&u, &palette, 2).unwrap(), render_states(&run(&rule, t), &palette, 2).unwrap());
        let style = TruchetStyle::default();
        prop_assert_eq!(render_truchet(&u, &style).unwrap(), render_truchet(&run(&rule, t), &style).unwrap());
    }

    #[test]
    fn svg_has_two_arcs_per_cell(rule in rule_starting_with_l(6), t in 0u64..1_000, margin in 0i64..3) {
        let u = run(&rule, t);
        let style = TruchetStyle { margin, ..TruchetStyle::default() };
        let svg = render_truchet(&u, &style).unwrap();
        let bb = truchet_region(&u, &style).unwrap();
        prop_assert_eq!(svg.matches("<path").count() as u64, 2 * bb.width() * bb.height());
    }

    #[test]
    fn resume_equals_straight_run(rule in rule_starting_with_l(6), t in 0u64..1_000, t2 in 0u64..1_000) {
        let mut resumed = snapshot::from_str(&snapshot::to_string(&run(&rule, t))).unwrap();
        resumed.run(t2);
        prop_assert_eq!(snapshot::to_string(&resumed), snapshot::to_string(&run(&rule, t + t2)));
    }
}
