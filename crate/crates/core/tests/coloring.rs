use ktern::classify::enumerate_kt;
use ktern::coloring::{
    catalog_order4, compile_system, count_bruteforce, count_colorings, enumerate_colorings,
    invariant_vector, DEFAULT_BRUTE_BUDGET,
};
use ktern::diagram::{builtin, random_diagram, Diagram, BUILTIN_NAMES};
use ktern::ternary::{parse_kt_spec, CanonicalKt, TernaryOps};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn reps_up_to(n: u64) -> Vec<CanonicalKt> {
    (1..=n).flat_map(|k| enumerate_kt(k).unwrap().representatives).collect()
}

/// Count under every rotation and the reversal of each crossing.
fn re_encodings(d: &Diagram) -> Vec<Diagram> {
    let mut out: Vec<Diagram> = (0..4).map(|k| d.map_crossings(|_, c| c.rotated(k))).collect();
    out.push(d.map_crossings(|_, c| c.reversed()));
    out
}

#[test]
fn re_encoding_invariance_on_builtins_and_random_diagrams() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xface);
    let mut diagrams: Vec<Diagram> = BUILTIN_NAMES.iter().map(|n| builtin(n).unwrap()).collect();
    diagrams.extend((0..50).map(|_| random_diagram(&mut rng, 5, 5, true)));
    for kt in reps_up_to(4) {
        for virt in reps_up_to(4).into_iter().filter(|v| v.group() == kt.group()) {
            for d in &diagrams {
                let base = count_colorings(d, &kt, Some(&virt)).unwrap().count;
                for e in re_encodings(d) {
                    let c = count_bruteforce(&e, &kt, Some(&virt), DEFAULT_BRUTE_BUDGET)
                        .unwrap()
                        .count;
                    assert_eq!(c, base, "{} over {kt}/{virt}", d.name);
                }
            }
        }
    }
}

#[test]
fn crossingless_diagrams_count_all_assignments() {
    for kt in reps_up_to(6) {
        for r in 1..=4u32 {
            let d = Diagram::new("free", r as usize, vec![]);
            let m = kt.order() as u128;
            assert_eq!(count_colorings(&d, &kt, None).unwrap().count, m.pow(r));
        }
    }
}

#[test]
fn rows_are_alternating_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let kt = parse_kt_spec("Z4@2").unwrap();
    for _ in 0..50 {
        let d = random_diagram(&mut rng, 6, 6, true);
        let sys = compile_system(&d, &kt, Some(&kt)).unwrap();
        for i in 0..sys.matrix.rows() {
            assert_eq!(sys.matrix.row(i).iter().sum::<i64>(), 0);
        }
    }
}

#[test]
fn enumerated_colorings_satisfy_every_crossing() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (f, v) = (parse_kt_spec("Z4@0").unwrap(), parse_kt_spec("Z4@2").unwrap());
    for _ in 0..40 {
        let d = random_diagram(&mut rng, 5, 5, true);
        let list = enumerate_colorings(&d, &f, Some(&v), 1 << 12).unwrap();
        for col in &list {
            for c in &d.crossings {
                let op = if c.kind == ktern::diagram::CrossingKind::Flat { &f } else { &v };
                let [c0, c1, c2, c3] = c.corners;
                assert_eq!(col[c0], op.bracket(col[c1], col[c2], col[c3]));
            }
        }
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn order_four_vectors() {
    let cat = catalog_order4();
    assert_eq!(invariant_vector(&builtin("unlink2").unwrap(), &cat).unwrap(), vec![64; 4]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn disjoint_union_count_is_the_product(s1 in any::<u64>(), s2 in any::<u64>(), pick in 0usize..16) {
        let reps = reps_up_to(6);
        let kt = &reps[pick % reps.len()];
        let a = random_diagram(&mut ChaCha8Rng::seed_from_u64(s1), 4, 5, false);
        let b = random_diagram(&mut ChaCha8Rng::seed_from_u64(s2), 4, 5, false);
        let ca = count_colorings(&a, kt, None).unwrap().count;
        let cb = count_colorings(&b, kt, None).unwrap().count;
        let u = a.disjoint_union(&b);
        prop_assert_eq!(count_colorings(&u, kt, None).unwrap().count, ca * cb);
        prop_assert_eq!(count_bruteforce(&u, kt, None, DEFAULT_BRUTE_BUDGET).unwrap().count, ca * cb);
    }
}
