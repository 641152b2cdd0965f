//! The certificate combinators: direct sums, bounded-codimension extension,
//! transport through a dimension-bounded functor, JSON round trips, and the
//! profile search — everything re-checked by the independent verifier.

use num::rational::BigRational;
use num::BigInt;
use qamen::functors::{FunctorDescriptor, SubquiverEmbedding};
use qamen::hyperfinite::{
    combine_direct_sum, extend_bounded_codim, profile_search, pushforward, verify_certificate,
    HyperfiniteCertificate,
};
use qamen::kronecker::{gen_block, kronecker_quiver, shrink_preprojective, KroneckerBlock};
use qamen::quiver::Quiver;
use qamen::rep::{direct_sum, Subrepresentation};
use qamen::scalar::FieldSpec;
use std::sync::Arc;

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn main() {
    let f = FieldSpec::prime_field(2).unwrap();
    let q = kronecker_quiver();
    let eps = ratio(1, 4);

    // two certificates with identical bookkeeping combine into one for the
    // direct sum, preserving (eps, L) exactly
    let c1 = shrink_preprojective(f, 8, &eps).unwrap().cert;
    let c2 = shrink_preprojective(f, 12, &eps).unwrap().cert;
    let bound = c1.bound;
    let combined = combine_direct_sum(&q, f, &eps, bound, &[c1, c2]).unwrap();
    println!(
        "combined: dim {} of {} with {} blocks",
        combined.dim_p(),
        combined.dim_m(),
        combined.blocks.len()
    );
    verify_certificate(&combined.ambient, &combined).unwrap();

    // a certificate for a submodule of small codimension extends to the
    // ambient module at a slightly weaker tolerance
    let big = gen_block(&KroneckerBlock::Pre(9), f).unwrap();
    let small = gen_block(&KroneckerBlock::Pre(0), f).unwrap();
    let (sum, injections) = direct_sum(&[big, small]).unwrap();
    let inclusion =
        Subrepresentation::new(sum.clone(), injections[0].components.clone()).unwrap();
    let inner = shrink_preprojective(f, 9, &ratio(1, 5)).unwrap().cert;
    let (extended, eps_eff) = extend_bounded_codim(&inclusion, &inner, &ratio(1, 4)).unwrap();
    println!(
        "extended: dim {} of {}, effective eps {}",
        extended.dim_p(),
        extended.dim_m(),
        eps_eff
    );
    verify_certificate(&sum, &extended).unwrap();

    // transport through the zero-extension into a larger quiver: dims are
    // padded, (eps, L) unchanged since K1 = K2 = 1
    let ambient3 = Arc::new(Quiver::kronecker_n(3));
    let emb = SubquiverEmbedding::new(q.clone(), ambient3, vec![0, 1], vec![0, 1]).unwrap();
    let fd = FunctorDescriptor::zero_extension(emb);
    let pushed = pushforward(&extended, &fd).unwrap();
    println!(
        "pushed into the 3-arrow quiver: dim {} of {}, eps {}, L {}",
        pushed.dim_p(),
        pushed.dim_m(),
        pushed.epsilon,
        pushed.bound
    );
    verify_certificate(&pushed.ambient, &pushed).unwrap();

    // certificates survive a JSON round trip unchanged
    let json = pushed.to_json();
    let back = HyperfiniteCertificate::from_json(&pushed.ambient, &json).unwrap();
    verify_certificate(&pushed.ambient, &back).unwrap();
    println!("JSON round trip verified");

    // profile search: exhaustive in the tiny regime, greedy beyond it
    let p2 = gen_block(&KroneckerBlock::Pre(2), f).unwrap();
    let r = profile_search(&p2, 3);
    println!(
        "profile search on dims {:?} with L=3: best {} of {} (exact: {})",
        p2.dims,
        r.best_dim,
        p2.total_dim(),
        r.exact
    );
    verify_certificate(&p2, &r.certificate).unwrap();
}
