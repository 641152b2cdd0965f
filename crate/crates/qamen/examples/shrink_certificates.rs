//! The shrinking constructions for the three two-arrow families: produce a
//! certified large submodule with small blocks for preprojective, regular,
//! and preinjective inputs, then sweep the preprojective family to show the
//! block bound is uniform in the module size.

use num::rational::BigRational;
use num::BigInt;
use qamen::hyperfinite::verify_certificate;
use qamen::kronecker::{
    block_bound_pre, gen_block, shrink_any, shrink_preinjective, shrink_preprojective,
    shrink_regular, KroneckerBlock,
};
use qamen::poly::Poly;
use qamen::scalar::FieldSpec;

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn main() {
    let f = FieldSpec::prime_field(2).unwrap();
    let eps = ratio(1, 4);

    let shrink = shrink_preprojective(f, 10, &eps).unwrap();
    println!(
        "preprojective i=10, eps=1/4: dim {} of {}, max block {}, L = {}",
        shrink.cert.dim_p(),
        shrink.cert.dim_m(),
        shrink.cert.max_block(),
        shrink.cert.bound
    );
    verify_certificate(&shrink.cert.ambient, &shrink.cert).unwrap();

    let reg = gen_block(&KroneckerBlock::Reg { p: Poly::from_ints(f, &[1, 1, 1]), e: 3 }, f)
        .unwrap();
    let shrink = shrink_regular(&reg, &eps).unwrap();
    println!(
        "regular (p^3, deg p = 2): dim {} of {}, max block {}, L = {}",
        shrink.cert.dim_p(),
        shrink.cert.dim_m(),
        shrink.cert.max_block(),
        shrink.cert.bound
    );
    verify_certificate(&shrink.cert.ambient, &shrink.cert).unwrap();

    let shrink = shrink_preinjective(f, 9, &eps).unwrap();
    println!(
        "preinjective i=9: dim {} of {}, max block {}, L = {}",
        shrink.cert.dim_p(),
        shrink.cert.dim_m(),
        shrink.cert.max_block(),
        shrink.cert.bound
    );
    verify_certificate(&shrink.cert.ambient, &shrink.cert).unwrap();

    // mixed input: shrink_any decomposes first and dispatches per block
    let parts = vec![
        gen_block(&KroneckerBlock::Pre(6), f).unwrap(),
        gen_block(&KroneckerBlock::Inj(4), f).unwrap(),
        gen_block(&KroneckerBlock::RegInf(3), f).unwrap(),
    ];
    let (sum, _) = qamen::rep::direct_sum(&parts).unwrap();
    let shrink = shrink_any(&sum, &eps).unwrap();
    println!(
        "mixed sum: dim {} of {}, {} blocks, max {}",
        shrink.cert.dim_p(),
        shrink.cert.dim_m(),
        shrink.cert.blocks.len(),
        shrink.cert.max_block()
    );
    verify_certificate(&sum, &shrink.cert).unwrap();

    // the headline uniformity: one L works for every preprojective index
    println!();
    for (a, b) in [(1, 2), (1, 4), (1, 10)] {
        let eps = ratio(a, b);
        let l = block_bound_pre(&eps);
        let worst = (0..=60u64)
            .map(|i| {
                let s = shrink_preprojective(f, i as usize, &eps).unwrap();
                verify_certificate(&s.cert.ambient, &s.cert).unwrap();
                s.cert.max_block()
            })
            .max()
            .unwrap();
        println!("eps = {a}/{b}: L = {l}, largest block over i <= 60 is {worst}");
    }
}
