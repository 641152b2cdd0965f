//! Wildness witnesses and the orthogonal-pair checker on the built-in
//! fixtures: each fixture quiver is wild, carries a proper Euclidean
//! subquiver as evidence, and supports a qualifying module pair.

use qamen::fixtures::{pair_fixture, FIXTURE_NAMES};
use qamen::functors::{exceptional_pair_check, wild_witness, WildWitness};
use qamen::quiver::Quiver;

fn main() {
    // the 3-arrow quiver carries the cheapest witness
    let w = wild_witness(&Quiver::kronecker_n(3)).unwrap();
    match w {
        Some(WildWitness::MultiArrow { from, to, count }) => {
            println!("3-arrow quiver: {count} parallel arrows {from} -> {to}");
        }
        other => panic!("unexpected witness {other:?}"),
    }
    assert!(wild_witness(&Quiver::kronecker()).unwrap().is_none());

    for name in FIXTURE_NAMES {
        let fx = pair_fixture(name).unwrap();
        match wild_witness(&fx.quiver).unwrap() {
            Some(WildWitness::ProperEuclideanSubquiver(sub)) => {
                println!(
                    "{name}: Euclidean subquiver on {} of {} vertices",
                    sub.num_vertices(),
                    fx.quiver.num_vertices()
                );
            }
            other => panic!("{name}: unexpected witness {other:?}"),
        }
        let report = exceptional_pair_check(&fx.euler, &fx.x, &fx.y).unwrap();
        println!(
            "{name}: x dimv {}, y dimv {}, m = {}, qualifies = {}",
            fx.x.dim_vector(),
            fx.y.dim_vector(),
            report.m,
            report.qualifies
        );
        assert!(report.qualifies);
    }
}
