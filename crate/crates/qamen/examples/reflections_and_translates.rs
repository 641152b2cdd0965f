//! Reflection functors and the translate built from them: reflect at a sink,
//! check the dimension bound, and walk the preprojective component of the
//! two-arrow quiver with the inverse translate.

use qamen::functors::{ar_translate, ar_translate_inverse, reflect, ReflectionDirection};
use qamen::kronecker::{gen_block, kronecker_quiver, pencil_canonical_form, KroneckerBlock};
use qamen::rep::{make_injective, make_projective, make_simple};
use qamen::scalar::FieldSpec;

fn main() {
    let q = kronecker_quiver();
    let f = FieldSpec::prime_field(5).unwrap();

    // reflecting at the sink kills the simple there
    let s2 = make_simple(&q, f, 1).unwrap();
    let (reflected_quiver, image) = reflect(&s2, 1, ReflectionDirection::Plus).unwrap();
    println!(
        "S(2) reflected at the sink: dims {:?} over the reversed quiver {:?}",
        image.dims,
        reflected_quiver.arrows.iter().map(|a| (a.source, a.target)).collect::<Vec<_>>()
    );

    // the dimension bound dim S(m) <= (|arrows|+1) dim m
    let p = make_projective(&q, f, 0).unwrap();
    let (_, rp) = reflect(&p, 1, ReflectionDirection::Plus).unwrap();
    assert!(rp.total_dim() <= (q.arrows.len() + 1) * p.total_dim());

    // the inverse translate climbs the preprojective family two steps at a
    // time; the canonical form names each stop
    let mut m = make_projective(&q, f, 1).unwrap(); // this is Pre(0)
    for _ in 0..4 {
        let form = pencil_canonical_form(&m).unwrap();
        println!("dims {:?} -> {}", m.dims, serde_json::to_string(&form.to_json()).unwrap());
        m = ar_translate_inverse(&m).unwrap();
    }

    // injectives die under the inverse translate, projectives under the
    // forward one
    let i = make_injective(&q, f, 0).unwrap();
    assert!(ar_translate_inverse(&i).unwrap().is_zero());
    assert!(ar_translate(&make_projective(&q, f, 1).unwrap()).unwrap().is_zero());
    println!("translate kills the boundary families as expected");

    // round trip: reflecting back recovers the module up to isomorphism
    let m = gen_block(&KroneckerBlock::Pre(3), f).unwrap();
    let (_, plus) = reflect(&m, 1, ReflectionDirection::Plus).unwrap();
    let (_, back) = reflect(&plus, 1, ReflectionDirection::Minus).unwrap();
    assert_eq!(back.dim_vector(), m.dim_vector());
    println!("S- after S+ restores the dimension vector of Pre(3)");
}
