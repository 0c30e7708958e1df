use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use valquiver::annihilator::{preprojective_representation, s_m_from_tag, s_m_of_sum, shortest_annihilator_bfs};
use valquiver::dot::{hasse_dot, quiver_dot, slice_dot};
use valquiver::filters::{all_filters, hull, is_filter};
use valquiver::io::{emit_quiver, parse_quiver, parse_representation};
use valquiver::knitting::{dim_reflect, knit_preprojectives, projective_dims, DimVector};
use valquiver::sequences::{
    canonical_form, compare_tight, is_tight, join, meet, precedes, principal_generator, principal_sequence, realize,
    remainder, swap_class,
};
use valquiver::translation::{build_slice, principal_hasse};
use valquiver::verify::{random_admissible, random_dims};
use valquiver::weyl::{cartan_matrix, is_reduced, Word};
use valquiver::{fixtures, AdmissibleSequence, PrincipalCoordinate, Representation, ValuedQuiver};

fn quivers() -> Vec<ValuedQuiver> {
    vec![
        fixtures::a3(),
        fixtures::a3().reflect(3).unwrap(),
        fixtures::k2(),
        fixtures::b2(),
        fixtures::triangle(),
        // a star with a doubled edge: 1 -> 2 <- 3, 2 -> 4 with b = 2
        ValuedQuiver::new(
            &[1, 2, 3, 4],
            &[(1, 2, 1, 1), (2, 3, 1, 1), (2, 4, 2, 2)],
            &[(1, 1), (2, 1), (3, 1), (4, 1)],
            &[(1, 2), (3, 2), (2, 4)],
        )
        .unwrap(),
    ]
}

fn symmetric_quivers() -> Vec<ValuedQuiver> {
    quivers().into_iter().filter(|q| q.graph().is_symmetric()).collect()
}

fn pick(qs: Vec<ValuedQuiver>, i: usize) -> ValuedQuiver {
    let n = qs.len();
    qs.into_iter().nth(i % n).unwrap()
}

fn sequence(q: &ValuedQuiver, seed: u64, len: usize) -> AdmissibleSequence {
    random_admissible(q, len, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflecting_twice_is_the_identity(i in 0usize..6, seed in any::<u64>(), len in 0usize..6) {
        let q = pick(quivers(), i);
        let end = sequence(&q, seed, len).end_quiver();
        for x in end.sinks() {
            let r = end.reflect(x).unwrap();
            prop_assert!(r.is_source(x));
            prop_assert_eq!(r.reflect(x).unwrap(), end.clone());
        }
    }

    #[test]
    fn hull_is_an_enlarging_filter(i in 0usize..6) {
        let q = pick(quivers(), i);
        let poset = q.vertex_poset();
        let filters = all_filters(&poset);
        for f in &filters {
            let h = hull(&q, f).unwrap();
            prop_assert!(is_filter(&poset, h.members()).unwrap());
            prop_assert!(f.is_subset(&h));
            for g in &filters {
                if f.is_subset(g) {
                    prop_assert!(h.is_subset(&hull(&q, g).unwrap()));
                }
            }
        }
    }

    #[test]
    fn canonical_form_is_equivalent_and_stable(i in 0usize..6, seed in any::<u64>(), len in 0usize..10) {
        let q = pick(quivers(), i);
        let s = sequence(&q, seed, len);
        let c = canonical_form(&s);
        let back = c.to_sequence();
        prop_assert!(back.equivalent(&s).unwrap());
        prop_assert_eq!(canonical_form(&back), c.clone());
        let supports = c.supports();
        prop_assert!(realize(&q, &supports).unwrap().equivalent(&s).unwrap());
        for pair in supports.windows(2) {
            prop_assert!(hull(&q, &pair[1]).unwrap().is_subset(&pair[0]));
        }
    }

    #[test]
    fn swap_class_members_are_equivalent(i in 0usize..6, seed in any::<u64>(), len in 0usize..7) {
        let q = pick(quivers(), i);
        let s = sequence(&q, seed, len);
        for w in swap_class(&s) {
            prop_assert!(AdmissibleSequence::new(&q, &w).unwrap().equivalent(&s).unwrap());
        }
    }

    #[test]
    fn lattice_laws(i in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>(), la in 0usize..7, lb in 0usize..7, lc in 0usize..7) {
        let q = pick(quivers(), i);
        let (s, t, u) = (sequence(&q, a, la), sequence(&q, b, lb), sequence(&q, c, lc));
        let m = meet(&s, &t).unwrap();
        let j = join(&s, &t).unwrap();
        prop_assert!(m.equivalent(&meet(&t, &s).unwrap()).unwrap());
        prop_assert!(j.equivalent(&join(&t, &s).unwrap()).unwrap());
        prop_assert!(meet(&s, &j).unwrap().equivalent(&s).unwrap());
        prop_assert!(join(&s, &m).unwrap().equivalent(&s).unwrap());
        prop_assert!(meet(&m, &u).unwrap().equivalent(&meet(&s, &meet(&t, &u).unwrap()).unwrap()).unwrap());
        prop_assert!(join(&j, &u).unwrap().equivalent(&join(&s, &join(&t, &u).unwrap()).unwrap()).unwrap());
        prop_assert_eq!(precedes(&s, &t).unwrap(), m.equivalent(&s).unwrap());
    }

    #[test]
    fn prefixes_precede(i in 0usize..6, seed in any::<u64>(), len in 0usize..8, cut in 0usize..8) {
        let q = pick(quivers(), i);
        let s = sequence(&q, seed, len);
        let k = cut.min(s.len());
        let prefix = AdmissibleSequence::new(&q, &s.verts()[..k]).unwrap();
        prop_assert!(precedes(&prefix, &s).unwrap());
        let rest = remainder(&s, &prefix).unwrap();
        prop_assert!(prefix.concat(&rest).unwrap().equivalent(&s).unwrap());
    }

    #[test]
    fn principal_coordinates_round_trip(i in 0usize..6, r in 1u32..6, k in 0usize..4) {
        let q = pick(quivers(), i);
        let x = q.vertices()[k % q.len()];
        let c = PrincipalCoordinate::new(r, x).unwrap();
        let s = principal_sequence(&q, c).unwrap();
        prop_assert!(is_tight(&s).unwrap());
        prop_assert_eq!(principal_generator(&s).unwrap(), Some(c));
        for &y in q.vertices() {
            for r2 in 1..=4 {
                let t = principal_sequence(&q, PrincipalCoordinate::new(r2, y).unwrap()).unwrap();
                prop_assert_eq!(compare_tight(&s, &t).unwrap(), precedes(&s, &t).unwrap());
            }
        }
    }

    #[test]
    fn functor_is_constant_on_classes(i in 0usize..4, seed in any::<u64>(), len in 1usize..7) {
        let q = pick(symmetric_quivers(), i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_admissible(&q, len, &mut rng);
        let rep = Representation::random(&q, &random_dims(&q, 6, &mut rng), &mut rng).unwrap();
        let image = rep.apply_sequence(&s).unwrap();
        for w in swap_class(&s) {
            let t = AdmissibleSequence::new(&q, &w).unwrap();
            prop_assert_eq!(rep.apply_sequence(&t).unwrap().dim_vector(), image.dim_vector());
        }
        if image.is_zero() {
            let support = s.support();
            prop_assert!(rep.dim_vector().support().iter().all(|v| support.contains(*v)));
        }
    }

    #[test]
    fn reflections_at_a_sink(i in 0usize..4, seed in any::<u64>()) {
        let q = pick(symmetric_quivers(), i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = Representation::random(&q, &random_dims(&q, 6, &mut rng), &mut rng).unwrap();
        for x in q.sinks() {
            let plus = rep.reflect_plus(x).unwrap();
            let lower = q.graph().neighbors(x).map(|y| q.graph().b(x, y) as usize * rep.dim(y)).sum::<usize>();
            prop_assert!(plus.dim(x) + rep.dim(x) >= lower);
            let back = plus.reflect_minus(x).unwrap();
            prop_assert_eq!(back.quiver(), &q);
            for &v in q.vertices() {
                if v == x {
                    prop_assert!(back.dim(v) <= rep.dim(v));
                } else {
                    prop_assert_eq!(back.dim(v), rep.dim(v));
                }
            }
        }
    }

    #[test]
    fn reduced_words_reverse(i in 0usize..6, letters in proptest::collection::vec(0usize..4, 0..10)) {
        let q = pick(quivers(), i);
        let a = cartan_matrix(q.graph());
        let w = Word(letters.iter().map(|&k| q.vertices()[k % q.len()]).collect());
        prop_assert_eq!(is_reduced(&a, &w).unwrap(), is_reduced(&a, &w.reversed()).unwrap());
        if is_reduced(&a, &w).unwrap() && !w.is_empty() {
            prop_assert!(is_reduced(&a, &Word(w.letters()[..w.len() - 1].to_vec())).unwrap());
        }
    }

    #[test]
    fn text_round_trip(i in 0usize..6, seed in any::<u64>(), len in 0usize..6) {
        let q = pick(quivers(), i);
        let end = sequence(&q, seed, len).end_quiver();
        prop_assert_eq!(parse_quiver(&emit_quiver(&end)).unwrap(), end.clone());
        prop_assert_eq!(quiver_dot(&end), quiver_dot(&parse_quiver(&emit_quiver(&end)).unwrap()));
    }

    #[test]
    fn representation_text_round_trip(i in 0usize..4, seed in any::<u64>()) {
        let q = pick(symmetric_quivers(), i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = Representation::random(&q, &random_dims(&q, 6, &mut rng), &mut rng).unwrap();
        prop_assert_eq!(parse_representation(&q, &rep.to_string()).unwrap(), rep);
    }
}

/// Steps along `S_M` for every knitted indecomposable: dimension counts agree until the last letter kills a simple.
#[test]
fn dimension_reflection_tracks_reflection_functors() {
    for q in symmetric_quivers() {
        for (tag, d) in knit_preprojectives(&q, 3) {
            let mut rep = preprojective_representation(&q, tag).unwrap();
            assert_eq!(rep.dim_vector(), d);
            let s = s_m_from_tag(&q, tag).unwrap();
            let (last, prefix) = s.verts().split_last().unwrap();
            for &x in prefix {
                let predicted = dim_reflect(rep.quiver(), x, &rep.dim_vector()).unwrap();
                rep = rep.reflect_plus(x).unwrap();
                assert_eq!(rep.dim_vector(), predicted, "{tag} at {x}");
            }
            assert_eq!(rep.dim_vector(), Representation::simple(rep.quiver(), *last).unwrap().dim_vector());
            assert!(dim_reflect(rep.quiver(), *last, &rep.dim_vector()).is_err());
            assert!(rep.reflect_plus(*last).unwrap().is_zero());
        }
    }
}

#[test]
fn projective_incoming_maps_are_isomorphisms() {
    for q in symmetric_quivers() {
        for &x in q.vertices() {
            let p = Representation::projective(&q, x).unwrap();
            assert_eq!(p.dim_vector(), projective_dims(&q, x).unwrap());
            for z in q.sinks().into_iter().filter(|&z| z != x && !q.predecessors(z).is_empty()) {
                let h = p.incoming_map(z).unwrap();
                assert_eq!(h.rows(), h.cols());
                assert_eq!(h.rank(), h.rows());
            }
        }
    }
}

#[test]
fn sums_of_tags_take_pointwise_maxima() {
    let q = fixtures::a3();
    let tags: Vec<_> = knit_preprojectives(&q, 10).into_iter().map(|(t, _)| t).collect();
    for a in &tags {
        for b in &tags {
            let joined = s_m_of_sum(&q, &[*a, *b]).unwrap();
            let want = s_m_from_tag(&q, *a).unwrap().multiplicity().pointwise_max(&s_m_from_tag(&q, *b).unwrap().multiplicity());
            assert_eq!(joined.multiplicity(), want);
            let rep = preprojective_representation(&q, *a).unwrap().direct_sum(&preprojective_representation(&q, *b).unwrap()).unwrap();
            assert!(shortest_annihilator_bfs(&rep).unwrap().equivalent(&joined).unwrap());
        }
    }
}

#[test]
fn b2_knitting_is_dimension_level_only() {
    let q = fixtures::b2();
    let dims: Vec<DimVector> = knit_preprojectives(&q, 5).into_iter().map(|(_, d)| d).collect();
    let entries: Vec<Vec<u64>> = dims.iter().map(DimVector::entries).collect();
    assert_eq!(entries, [vec![0, 1], vec![1, 2], vec![1, 1], vec![1, 0]]);
    assert!(Representation::projective(&q, 1).is_err());
}

#[test]
fn dot_is_reproducible() {
    for q in quivers() {
        assert_eq!(slice_dot(&build_slice(&q, 2)), slice_dot(&build_slice(&q, 2)));
        assert_eq!(hasse_dot(&principal_hasse(&q, 3).unwrap()), hasse_dot(&principal_hasse(&q, 3).unwrap()));
    }
}
