//! Classify a spread of quivers by their Tits form and print the Euler
//! calculus attached to each: radical generator, tubular type, Coxeter
//! number, and the defect values of a few dimension vectors.

use qamen::quiver::{DimVector, EulerData, Quiver, QuiverClass};

fn star(arms: usize) -> Quiver {
    let labels: Vec<String> = std::iter::once("c".to_string())
        .chain((1..=arms).map(|i| i.to_string()))
        .collect();
    let arrows = (1..=arms)
        .map(|i| (format!("a{i}"), i.to_string(), "c".to_string()))
        .collect();
    Quiver::new(labels, arrows).unwrap()
}

fn main() {
    let cases: Vec<(&str, Quiver)> = vec![
        ("A3 path", Quiver::parse(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap()),
        ("2-Kronecker", Quiver::kronecker()),
        ("3-Kronecker", Quiver::kronecker_n(3)),
        ("4-arm star (D~4)", star(4)),
        ("5-arm star (wild)", star(5)),
    ];

    for (name, q) in cases {
        let e = EulerData::new(&q).unwrap();
        print!("{name:<22}");
        match &e.classification {
            QuiverClass::Dynkin => println!("Dynkin"),
            QuiverClass::Euclidean { tubular_type } => {
                let h = e.radical_generator.clone().unwrap();
                println!("Euclidean, tubular type {tubular_type:?}, h = {h}");
            }
            QuiverClass::Wild => println!("Wild"),
        }
        if let Ok(d) = e.coxeter_number() {
            println!("{:<22}Coxeter number {d}", "");
        }
    }

    // defect trichotomy on the 2-Kronecker quiver: negative on the
    // preprojective slice, positive on the preinjective one, zero on the
    // homogeneous dimension vectors
    println!();
    let e = EulerData::new(&Quiver::kronecker()).unwrap();
    for x in [
        DimVector(vec![2, 3]),
        DimVector(vec![3, 2]),
        DimVector(vec![4, 4]),
    ] {
        println!("defect{} = {}", x, e.defect(&x).unwrap());
    }
}
