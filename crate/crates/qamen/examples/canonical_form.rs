//! Matrix-pencil canonical form as a decomposition oracle: build a direct
//! sum of canonical two-arrow blocks, hide it behind a change of basis, and
//! recover the block multiset exactly.

use qamen::kronecker::{decompose, gen_block, iso_test, pencil_canonical_form, KroneckerBlock};
use qamen::linalg::Matrix;
use qamen::poly::Poly;
use qamen::rep::{direct_sum, Representation};
use qamen::scalar::FieldSpec;

/// Conjugates by fixed invertible per-vertex matrices.
fn scramble(m: &Representation) -> Representation {
    let f = m.field;
    let basis = |n: usize| -> Matrix {
        Matrix::from_fn(f, n, n, |i, j| {
            if i == j {
                f.one()
            } else if j == i + 1 {
                f.from_int(1)
            } else if j + 2 == i {
                f.from_int(1)
            } else {
                f.zero()
            }
        })
    };
    let g: Vec<Matrix> = m.dims.iter().map(|&d| basis(d)).collect();
    let ginv: Vec<Matrix> = g.iter().map(|x| x.inverse().unwrap()).collect();
    let maps = m
        .quiver
        .arrows
        .iter()
        .zip(&m.maps)
        .map(|(a, mat)| g[a.target].mul(mat).mul(&ginv[a.source]))
        .collect();
    Representation::new(m.quiver.clone(), f, m.dims.clone(), maps).unwrap()
}

fn main() {
    let f = FieldSpec::prime_field(5).unwrap();
    let blocks = vec![
        KroneckerBlock::Pre(2),
        KroneckerBlock::Inj(1),
        KroneckerBlock::Reg { p: Poly::from_ints(f, &[1, 1]), e: 2 },
        KroneckerBlock::RegInf(2),
    ];
    let parts: Vec<Representation> =
        blocks.iter().map(|b| gen_block(b, f).unwrap()).collect();
    let (sum, _) = direct_sum(&parts).unwrap();
    let hidden = scramble(&sum);

    let form = pencil_canonical_form(&hidden).unwrap();
    println!("input dims {:?}", hidden.dims);
    println!("recovered blocks:");
    for b in &form.blocks {
        println!("  {}", serde_json::to_string(&b.to_json()).unwrap());
    }
    let mut expected = blocks.clone();
    expected.sort_by(|a, b| a.cmp_canonical(b));
    assert_eq!(form.blocks, expected);

    assert!(iso_test(&hidden, &sum).unwrap());
    println!("isomorphism to the unscrambled sum confirmed");

    // decompose goes further and returns internal subrepresentations that
    // realize each block inside the scrambled module
    let pieces = decompose(&hidden).unwrap();
    for (b, sub) in &pieces {
        println!("block {:?} realized with vertex dims {:?}", b, sub.dims());
    }
}
