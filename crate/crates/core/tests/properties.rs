mod common;

use std::collections::BTreeSet;
use std::sync::atomic::AtomicBool;

use common::{consum, face_set, handles, linear, shift, suspension};
use normpm::bounds::{dehn_sommerville_residuals_of, glbc_fvector, lbt_bound, lbt_check, mpw_incidence};
use normpm::moves::{self, Bijection};
use normpm::rigidity;
use normpm::stacked::{self, StackScript};
use normpm::{binomial, catalog, iso, verify, Complex, Face, VertexId};
use proptest::prelude::*;

fn stacked_strategy() -> impl Strategy<Value = Complex> {
    (2i32..=3, 0usize..10, any::<u64>())
        .prop_map(|(d, steps, seed)| stacked::generate_stacked(&StackScript::random(d, steps, seed)).unwrap())
}

/// Surfaces and 3-dimensional normal pseudomanifolds that are not spheres,
/// together with stacked spheres.
fn normal_pm_strategy() -> impl Strategy<Value = Complex> {
    let fixed: Vec<Complex> = {
        let mut v = vec![
            catalog::octahedron(),
            catalog::icosahedron(),
            catalog::torus_7(),
            catalog::rp2_6(),
            catalog::cycle_join_cycle(),
            suspension(&catalog::torus_7()),
            suspension(&catalog::rp2_6()),
            consum(&catalog::torus_7(), &catalog::rp2_6(), 1),
        ];
        v.extend(handles(&linear(2, 12), 3));
        v.extend(handles(&linear(3, 13), 1));
        v
    };
    prop_oneof![stacked_strategy(), proptest::sample::select(fixed)]
}

fn random_pure(max_n: usize) -> impl Strategy<Value = Complex> {
    (1usize..=3, proptest::collection::vec(proptest::collection::btree_set(0..max_n, 4), 1..8)).prop_map(
        |(d, sets)| {
            let facets: Vec<Vec<String>> = sets
                .into_iter()
                .map(|s| s.into_iter().take(d + 1).map(|v| v.to_string()).collect())
                .collect();
            let c = Complex::generated_by(facets).unwrap();
            // Keep the top-dimensional part so the complex is pure.
            let top: Vec<Vec<&str>> = c.top_facets().map(|f| c.tokens(f)).collect();
            Complex::from_facets(top).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn faces_are_downward_closed(c in normal_pm_strategy()) {
        for f in c.all_faces() {
            for v in f.iter() {
                prop_assert!(c.contains_face(&f.without(v)));
            }
        }
    }

    #[test]
    fn join_face_vector_is_convolution(a in stacked_strategy(), b in 3usize..7) {
        let y = catalog::cycle(b).unwrap();
        let j = common::join(&a, &y);
        prop_assert_eq!(j.f_vector(), a.f_vector().join(&y.f_vector()));
    }

    #[test]
    fn star_and_antistar_meet_in_the_link(c in normal_pm_strategy(), pick in any::<u32>()) {
        let v = VertexId(pick % c.vertex_count() as u32);
        let st = face_set(&c.star(v).unwrap());
        let ast = face_set(&c.antistar(&Face::new(vec![v])).unwrap());
        let lk = face_set(&c.vertex_link(v));
        let all = face_set(&c);
        prop_assert_eq!(st.union(&ast).cloned().collect::<BTreeSet<_>>(), all);
        prop_assert_eq!(st.intersection(&ast).cloned().collect::<BTreeSet<_>>(), lk);
    }

    #[test]
    fn one_point_suspension_links(c in normal_pm_strategy(), pick in any::<u32>()) {
        let u = VertexId(pick % c.vertex_count() as u32);
        let s = c.one_point_suspension(u, "apex").unwrap();
        prop_assert_eq!(s.vertex_link(s.vertex("apex").unwrap()), c.clone());
        let lk_u = face_set(&s.vertex_link(s.vertex(c.label(u)).unwrap()));
        let ast = face_set(&c.antistar(&Face::new(vec![u])).unwrap());
        prop_assert!(ast.is_subset(&lk_u));
        prop_assert!(verify::is_normal_pm(&s));
    }

    #[test]
    fn normal_implies_strongly_connected(c in normal_pm_strategy()) {
        prop_assert!(verify::is_normal_pm(&c));
        prop_assert!(verify::is_strongly_connected(&c).unwrap());
    }

    #[test]
    fn ball_boundaries_are_weak_pms(c in stacked_strategy(), pick in any::<u32>()) {
        let v = VertexId(pick % c.vertex_count() as u32);
        let ball = c.antistar(&Face::new(vec![v])).unwrap();
        prop_assert!(verify::is_weak_pm_with_boundary(&ball));
        let bd = verify::boundary(&ball).unwrap();
        prop_assert!(verify::is_weak_pm(&bd));
        prop_assert_eq!(bd, c.vertex_link(v));
    }

    #[test]
    fn closed_surfaces_have_euler_at_most_two(i in 0usize..4, j in 0usize..4, rot in 0usize..3) {
        let s = [catalog::octahedron(), catalog::torus_7(), catalog::rp2_6(), catalog::icosahedron()];
        let c = consum(&s[i], &s[j], rot);
        prop_assert!(verify::is_closed_2manifold(&c));
        prop_assert!(c.euler_characteristic() <= 2);
    }

    #[test]
    fn seams_split_into_at_most_two_pieces(k in 0usize..40) {
        let x = if k % 2 == 0 { linear(2, 12) } else { linear(3, 14) };
        let psis = common::admissible_bijections(&x, 40);
        let psi = &psis[k % psis.len()];
        let y = moves::handle_add(&x, psi).unwrap();
        let a = y.vertex_set(&psi.domain_tokens()).unwrap();
        let n = y.induced(&a).unwrap();
        let rest = y.simplicial_complement(&n).unwrap();
        prop_assert!(rest.connected_components().len() <= 2);
        let cg = verify::crossing_graph(&y, &a).unwrap();
        prop_assert!((1..=2).contains(&cg.component_count()));
        prop_assert_eq!(cg.component_count(), 2);
    }

    #[test]
    fn found_spheres_are_standard(k in 0usize..6) {
        let x = linear(2 + (k % 2) as i32, 15);
        let psis = common::admissible_bijections(&x, 6);
        let psi = psis[k / 2 % psis.len()].clone();
        let y = moves::handle_add(&x, &psi).unwrap();
        let a = verify::find_induced_standard_sphere(&y).expect("the seam is an induced sphere");
        let induced = y.induced(&a).unwrap();
        let d = y.dim();
        prop_assert_eq!(induced.facets().len(), d as usize + 1);
        prop_assert!(induced.facets().iter().all(|f| f.len() == d as usize));
        prop_assert_eq!(induced.vertex_count(), d as usize + 1);
    }

    #[test]
    fn starring_adds_binomials_and_collapse_undoes_it(c in normal_pm_strategy(), pick in any::<u32>()) {
        let sigma = c.facets()[pick as usize % c.facets().len()].clone();
        let s = moves::star_vertex(&c, &sigma, "new").unwrap();
        prop_assert!(verify::is_weak_pm(&s));
        let d = c.dim() as usize;
        for j in 0..=d {
            let delta = s.f_vector().get(j as i32) as i128 - c.f_vector().get(j as i32) as i128;
            let expected = if j < d { binomial(d as i64 + 1, j as i64) } else { d as i128 };
            prop_assert_eq!(delta, expected);
        }
        let back = moves::collapse_vertex(&s, s.vertex("new").unwrap()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn handle_addition_deltas_and_inverse(k in 0usize..30) {
        let x = if k % 3 == 0 { catalog::icosahedron() } else if k % 3 == 1 { linear(2, 13) } else { linear(3, 15) };
        let psis = common::admissible_bijections(&x, 30);
        let psi: &Bijection = &psis[k % psis.len()];
        let y = moves::handle_add(&x, psi).unwrap();
        prop_assert!(verify::is_weak_pm(&y));
        let d = x.dim() as usize;
        for j in 0..=d {
            let delta = x.f_vector().get(j as i32) as i128 - y.f_vector().get(j as i32) as i128;
            let expected = if j < d { binomial(d as i64 + 1, j as i64 + 1) } else { 2 };
            prop_assert_eq!(delta, expected);
        }
        let seam = y.vertex_set(&psi.domain_tokens()).unwrap();
        let h = moves::handle_deletion(&y, &seam).unwrap();
        prop_assert!(iso::is_isomorphic(&h.complex, &x));
        prop_assert_eq!(h.readd.replay(&h.complex).unwrap(), y.clone());
        let map: std::collections::BTreeMap<&str, &str> =
            psi.pairs().iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        for (a, b) in psi.pairs() {
            let la = x.vertex_link(x.vertex(a).unwrap());
            let lb = shift(&x.vertex_link(x.vertex(b).unwrap()), 100);
            let glue = Bijection::new(psi.pairs().iter().filter(|p| p.0 != *a).map(|p| {
                (p.0.clone(), (map[p.0.as_str()].parse::<u64>().unwrap() + 100).to_string())
            }))
            .unwrap();
            let sum = moves::connected_sum(&la, &lb, &glue).unwrap();
            let lk = y.vertex_link(y.vertex(a).unwrap());
            prop_assert!(iso::is_isomorphic(&lk, &sum), "seam link of {} is not lk({}) # lk({})", a, a, b);
        }
    }

    #[test]
    fn gbm_is_undone_by_swapping_the_balls(c in normal_pm_strategy(), pick in any::<u32>()) {
        let edges = c.faces(1).unwrap();
        let e = &edges[pick as usize % edges.len()];
        let b1 = Complex::from_facets(c.facets().iter().filter(|f| e.is_subset(f)).map(|f| c.tokens(f))).unwrap();
        let b2 = verify::boundary(&b1).unwrap().cone("apex").unwrap();
        let after = moves::gbm(&c, &b1, &b2).unwrap();
        prop_assert!(verify::is_weak_pm(&after));
        prop_assert_eq!(moves::gbm(&after, &b2, &b1).unwrap(), c);
    }

    #[test]
    fn stacked_links_are_stacked(c in stacked_strategy(), pick in any::<u32>()) {
        prop_assume!(c.dim() == 3);
        let v = VertexId(pick % c.vertex_count() as u32);
        prop_assert!(stacked::is_stacked(&c.vertex_link(v)).unwrap().stacked);
    }

    #[test]
    fn low_degree_vertices_are_not_adjacent(c in stacked_strategy()) {
        prop_assume!(c.vertex_count() > c.dim() as usize + 2);
        let d = c.dim() as usize;
        let low: Vec<VertexId> = c.vertices().filter(|&v| c.vertex_degree(v) == d + 1).collect();
        let g = c.edge_graph();
        for (i, a) in low.iter().enumerate() {
            for b in &low[i + 1..] {
                prop_assert!(!g.is_adjacent(a.index(), b.index()));
            }
        }
    }

    #[test]
    fn collapse_order_does_not_matter(c in stacked_strategy(), seed in any::<u64>()) {
        let mut state = seed;
        let verdict = stacked::is_stacked_by(&c, |eligible| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % eligible.len()
        })
        .unwrap();
        prop_assert!(verdict.stacked);
    }

    #[test]
    fn generated_stacked_face_vectors(c in stacked_strategy()) {
        let f = stacked::stacked_fvector(c.dim(), c.vertex_count()).unwrap();
        prop_assert_eq!(c.f_vector(), f.clone());
        prop_assert!(dehn_sommerville_residuals_of(&f).iter().all(|&r| r == 0));
        for j in 1..=c.dim() as usize {
            prop_assert_eq!(lbt_bound(c.dim() as usize, c.vertex_count(), j).unwrap(), f.get(j as i32) as i128);
        }
        let g = glbc_fvector(c.dim() as usize, 1, &[c.vertex_count() as u64]).unwrap();
        prop_assert_eq!(g, f);
    }

    #[test]
    fn lbt_holds_with_equality_exactly_for_stacked(c in normal_pm_strategy()) {
        let r = lbt_check(&c).unwrap();
        prop_assert!(r.holds);
        if c.dim() == 3 {
            prop_assert_eq!(r.equality_any, stacked::is_stacked(&c).unwrap().stacked);
        }
    }

    #[test]
    fn incidences_double_count(c in random_pure(8), j in 0usize..4) {
        prop_assert!(mpw_incidence(&c, j).holds());
    }

    #[test]
    fn sweep_parts_merge_to_the_sequential_report(c in random_pure(9), q in 1usize..4, parts in 1usize..9) {
        let seq = rigidity::is_q_rigid(&c, q).unwrap();
        let (ctx, early) = rigidity::precheck(&c, q, rigidity::DEFAULT_EXHAUSTIVE_LIMIT).unwrap();
        let merged = match early {
            Some(r) => r,
            None => {
                let bits = ctx.prefix_bits(parts);
                let stop = AtomicBool::new(false);
                let outcomes: Vec<_> = (0..1u64 << bits).map(|p| ctx.sweep_part(p, bits, &stop)).collect();
                ctx.report(&c, &outcomes)
            }
        };
        prop_assert_eq!(merged.verdict, seq.verdict);
        prop_assert_eq!(merged.witness, seq.witness);
    }

    #[test]
    fn rigidity_matches_the_definition(c in random_pure(9), q in 1usize..4) {
        let n = c.vertex_count();
        let edges = c.faces(1).unwrap_or(&[]);
        let brute = c.is_connected()
            && (0u64..1 << n).all(|m| {
                let a = Face::from_indices((0..n).filter(|i| m >> i & 1 == 1));
                let avoids = c.facets().iter().filter(|f| f.dim() == c.dim()).any(|f| f.is_disjoint(&a));
                let meeting = edges.iter().filter(|e| e.iter().any(|v| a.contains(v))).count();
                !avoids || meeting >= q * a.len()
            });
        prop_assert_eq!(rigidity::is_q_rigid(&c, q).unwrap().verdict, brute);
    }
}
