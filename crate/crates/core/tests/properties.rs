//! Property tests for the structural invariants: free reduction, gauge
//! action, spanning tree normalization, subdivision, and the local chart.

use proptest::prelude::*;

use stokes_core::cocycle::{pullback_cocycle, Cocycle, CocycleSystem, GaugeTransform};
use stokes_core::complex::StratComplex2;
use stokes_core::glp::GlpChart;
use stokes_core::group::LabelGroup;
use stokes_core::stratum::StratumGroups;
use stokes_core::word::{Letter, Sign, Word};

fn arb_letters(gens: usize, len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (0..gens, prop::bool::ANY).prop_map(|(g, s)| Letter {
            gen: g,
            sign: if s { Sign::Pos } else { Sign::Neg },
        }),
        0..len,
    )
}

proptest! {
    // reduce is a retraction and kills w . w^{-1}
    #[test]
    fn reduction_is_a_retraction(letters in arb_letters(5, 24)) {
        // words over a bouquet of loops are always composable
        let w = Word { src: 0, dst: 0, letters };
        let r = w.reduced();
        prop_assert_eq!(r.reduced(), r.clone());
        prop_assert!(r.is_reduced());
        let cancel = w.then(&w.inverse()).reduced();
        prop_assert!(cancel.is_identity());
    }

    // gauge transforms preserve cocycle validity on the triangle
    #[test]
    fn gauge_preserves_validity(
        u01 in 0usize..3, u12 in 0usize..3,
        h in prop::collection::vec(0usize..3, 3),
    ) {
        let t = StratComplex2::triangle();
        let z3 = LabelGroup::cyclic(3).unwrap();
        let groups = StratumGroups::uniform(t.poset(), z3);
        let sys = CocycleSystem::new(&t, &groups);
        let u02 = (u12 + u01) % 3;
        let c = Cocycle { labels: vec![u01, u12, u02] };
        prop_assert!(sys.validate(&c.labels).unwrap().is_ok());
        let moved = sys.gauge_apply(&c, &GaugeTransform { values: h });
        prop_assert!(sys.validate(&moved.labels).unwrap().is_ok());
    }

    // tree normalization returns a gauge sending the input to the output,
    // and the output is tree-trivial with the full holonomy on the residue
    #[test]
    fn tree_normalization_is_gauge_equivalent(
        labels in prop::collection::vec(0usize..5, 6),
    ) {
        let c6 = StratComplex2::cycle(6).unwrap();
        let z5 = LabelGroup::cyclic(5).unwrap();
        let groups = StratumGroups::uniform(c6.poset(), z5);
        let sys = CocycleSystem::new(&c6, &groups);
        let c = Cocycle { labels };
        let (n, gauge) = sys.tree_normalize(&c).unwrap();
        prop_assert_eq!(sys.gauge_apply(&c, &gauge), n.clone());
        let residue: usize = n.labels.iter().sum();
        let holonomy: usize = c.labels.iter().sum();
        prop_assert_eq!(residue % 5, holonomy % 5);
        prop_assert!(n.labels[..5].iter().all(|&x| x == 0));
    }

    // pullback along subdivision preserves holonomy on cycles
    #[test]
    fn subdivision_pullback_preserves_holonomy(
        labels in prop::collection::vec(0usize..4, 5),
    ) {
        let c5 = StratComplex2::cycle(5).unwrap();
        let z4 = LabelGroup::cyclic(4).unwrap();
        let groups = StratumGroups::uniform(c5.poset(), z4.clone());
        let sys = CocycleSystem::new(&c5, &groups);
        let (sub, map) = c5.barycentric_subdivide();
        let sub_groups = StratumGroups::uniform(sub.poset(), z4);
        let sub_sys = CocycleSystem::new(&sub, &sub_groups);
        let c = Cocycle { labels };
        let p = pullback_cocycle(&sys, &sub_sys, &map, &c).unwrap();
        let before: usize = c.labels.iter().sum::<usize>() % 4;
        let after: usize = p.labels.iter().sum::<usize>() % 4;
        prop_assert_eq!(before, after);
    }

    // the local chart: inverses round-trip and double inversion restores the
    // arrow, for random parameters in the supported region
    #[test]
    fn glp_inverse_round_trips(
        zr in 0.1f64..0.9, zth in 0.0f64..6.28,
        ur in 0.0f64..1.0, uth in 0.0f64..6.28,
        k in 2u32..5, n in 1u32..3,
    ) {
        use num_complex::Complex64;
        let chart = GlpChart::new(k, n, 1e-9).unwrap();
        let a = chart
            .arrow(Complex64::from_polar(zr, zth), Complex64::from_polar(ur, uth))
            .unwrap();
        let inv = chart.inverse(&a);
        let round = chart.compose(&inv, &a).unwrap();
        prop_assert!(round.u.norm() < 1e-12, "round trip u = {}", round.u);
        prop_assert_eq!(round.z, a.z);
        let double = chart.inverse(&inv);
        prop_assert!((double.u - a.u).norm() < 1e-9 * (1.0 + a.u.norm()));
        prop_assert!((double.z - a.z).norm() < 1e-9 * (1.0 + a.z.norm()));
    }

    // Euler characteristic is preserved by barycentric subdivision
    #[test]
    fn subdivision_preserves_euler_characteristic(m in 1usize..3, n in 1usize..3) {
        let t = StratComplex2::torus_chambers(&[m, n]).unwrap();
        let chi = |k: &StratComplex2| {
            k.vertices().len() as i64 - k.edges().len() as i64 + k.faces().len() as i64
        };
        let (s, _) = t.barycentric_subdivide();
        prop_assert_eq!(chi(&t), chi(&s));
    }
}
