mod common;

use fspectra::search::{
    enumerate_connected, extremal, verify_theorem, GraphClass, Objective, Outcome, Theorem,
};
use fspectra::spectral::rho_f;
use fspectra::weights::NamedWeight;
use fspectra::{FamilySpec, Graph, WeightSpec};
use proptest::prelude::*;
use rand::Rng;

use common::{increasing_convex, named, random_connected, rng};

fn positive_weights() -> Vec<WeightSpec> {
    vec![
        named(NamedWeight::Sombor),
        named(NamedWeight::Abc),
        named(NamedWeight::Zagreb1),
    ]
}

#[test]
fn main_theorem_and_equality() {
    for thm in [Theorem::Main, Theorem::ThetaInftyEquality] {
        let report = verify_theorem(thm, &thm.default_params(), &positive_weights()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.rows.iter().all(|r| r.outcome == Outcome::Pass));
    }
}

#[test]
fn minimality_for_increasing_weights() {
    let weights = [
        named(NamedWeight::Sombor),
        named(NamedWeight::Zagreb1),
        named(NamedWeight::Zagreb2),
        named(NamedWeight::RecipRandic),
    ];
    for thm in [Theorem::ThetaMinimal, Theorem::InftyMinimal] {
        let report = verify_theorem(thm, &thm.default_params(), &weights).unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn abc_breaks_theta_minimality_at_small_size() {
    // abc is not increasing in x, and at size 6 the unbalanced theta wins
    let f = named(NamedWeight::Abc);
    assert!(f.eval(2, 3).unwrap() < f.eval(1, 3).unwrap());
    let balanced = rho_f(&FamilySpec::Theta(2, 2, 2).build().unwrap(), &f).unwrap();
    let skewed = rho_f(&FamilySpec::Theta(1, 2, 3).build().unwrap(), &f).unwrap();
    assert!(skewed < balanced);
}

#[test]
fn base_graph_reduction_at_eight() {
    let report = verify_theorem(
        Theorem::BaseGraph,
        &Theorem::BaseGraph.default_params(),
        &positive_weights(),
    )
    .unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn infty_star_is_dominated() {
    let report = verify_theorem(
        Theorem::InftyStarDominated,
        &Theorem::InftyStarDominated.default_params(),
        &[named(NamedWeight::Sombor)],
    )
    .unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn randic_radius_is_one_everywhere() {
    let f = named(NamedWeight::Randic);
    for g in enumerate_connected(7, 8).unwrap() {
        assert!((rho_f(&g, &f).unwrap() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn maximizers_avoid_forbidden_subgraphs() {
    let report = verify_theorem(
        Theorem::Forbidden,
        &Theorem::Forbidden.default_params(),
        &increasing_convex(),
    )
    .unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn tree_maximizer_is_the_star() {
    // weights favouring unbalanced degree pairs
    let weights = [
        named(NamedWeight::Sombor),
        named(NamedWeight::Zagreb1),
        WeightSpec::constant(1.0).unwrap(),
    ];
    for f in weights {
        let r = extremal(GraphClass::Trees, 8, &f, Objective::Max).unwrap();
        assert_eq!(r.winners.len(), 1);
        assert_eq!(r.winners[0].family, Some(FamilySpec::Star(8)));
    }
}

#[test]
fn edge_list_round_trip() {
    let mut rng = rng(7);
    for _ in 0..50 {
        let n = rng.gen_range(1..=12);
        let g = random_connected(&mut rng, n, 4);
        let back: Graph = g.to_string().parse().unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn graph_file_rejects_bad_input() {
    for text in [
        "3 2\n0 1\n1 1\n",
        "3 2\n0 1\n0 1\n",
        "3 1\n0 3\n",
        "3 2\n0 1\n",
        "2 1\n0 1\n1 0\n",
    ] {
        assert!(text.parse::<Graph>().is_err(), "{text:?}");
    }
}

proptest! {
    #[test]
    fn isomorphic_relabelings_share_canonical_form(seed in any::<u64>(), n in 2usize..=10) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, 5);
        let perm = {
            use rand::seq::SliceRandom;
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut r);
            p
        };
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
        prop_assert!((rho_f(&g, &named(NamedWeight::Sombor)).unwrap()
            - rho_f(&h, &named(NamedWeight::Sombor)).unwrap()).abs() < 1e-9);
    }
}

#[test]
fn small_orders_are_observed_for_main() {
    let f: WeightSpec = "table:2,2=1;3,2=2;4,2=2".parse().unwrap();
    let params = fspectra::search::TheoremParams {
        n: 5..=8,
        ..Theorem::Main.default_params()
    };
    let report = verify_theorem(Theorem::Main, &params, &[f]).unwrap();
    let outcomes: Vec<Outcome> = report.rows.iter().map(|r| r.outcome).collect();
    assert_eq!(
        outcomes,
        [
            Outcome::Observed,
            Outcome::Observed,
            Outcome::Observed,
            Outcome::Pass
        ]
    );
    assert!(report.rows[0].detail.ends_with("winners=infty-star:3,3"));
}
