//! Built-in quiver fixtures for the pair checker: a five-subspace star and
//! three one-point extensions of extended Dynkin quivers, each with a module
//! pair produced from translates of projectives.

use crate::error::{Error, Result};
use crate::functors::{ar_translate_inverse, extend_by_zero, SubquiverEmbedding};
use crate::quiver::{EulerData, Quiver};
use crate::rep::{make_projective, make_simple, Representation};
use crate::scalar::FieldSpec;
use std::sync::Arc;

pub const FIXTURE_NAMES: [&str; 4] = ["example1", "example2", "example3", "example4"];

/// A fixture quiver with its designated module pair (x, y).
pub struct PairFixture {
    pub name: &'static str,
    pub quiver: Arc<Quiver>,
    pub euler: EulerData,
    pub x: Representation,
    pub y: Representation,
}

/// Raw JSON of the fixture quiver, as shipped with the crate.
pub fn fixture_quiver_json(name: &str) -> Result<&'static str> {
    match name {
        "example1" => Ok(include_str!("../fixtures/example1.json")),
        "example2" => Ok(include_str!("../fixtures/example2.json")),
        "example3" => Ok(include_str!("../fixtures/example3.json")),
        "example4" => Ok(include_str!("../fixtures/example4.json")),
        _ => Err(Error::InvalidInput(format!("unknown fixture {name:?}"))),
    }
}

pub fn fixture_quiver(name: &str) -> Result<Quiver> {
    let raw = fixture_quiver_json(name)?;
    let v: serde_json::Value =
        serde_json::from_str(raw).map_err(|e| Error::Parse(e.to_string()))?;
    Quiver::from_json(&v)
}

/// Drops the extension vertex "inf" and its arrow, recovering the underlying
/// extended Dynkin quiver.
fn quiver_without_extension(q: &Quiver) -> Result<Quiver> {
    let keep: Vec<usize> = (0..q.num_vertices())
        .filter(|&v| q.vertices[v] != "inf")
        .collect();
    let vertices: Vec<String> = keep.iter().map(|&v| q.vertices[v].clone()).collect();
    let arrows = q
        .arrows
        .iter()
        .filter(|a| keep.contains(&a.source) && keep.contains(&a.target))
        .map(|a| (a.name.clone(), q.vertices[a.source].clone(), q.vertices[a.target].clone()))
        .collect();
    Quiver::new(vertices, arrows)
}

/// Builds the named fixture with its module pair over the rationals.
pub fn pair_fixture(name: &str) -> Result<PairFixture> {
    let static_name = FIXTURE_NAMES
        .iter()
        .copied()
        .find(|&n| n == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown fixture {name:?}")))?;
    let quiver = Arc::new(fixture_quiver(static_name)?);
    let f = FieldSpec::Rationals;
    let (x, y) = match static_name {
        "example1" => {
            // star quiver: x is the simple at arm 5, y the translate of the
            // projective there
            let v5 = quiver.vertex_index("5")?;
            let x = make_simple(&quiver, f, v5)?;
            let y = ar_translate_inverse(&make_projective(&quiver, f, v5)?)?;
            (x, y)
        }
        _ => {
            let sub = Arc::new(quiver_without_extension(&quiver)?);
            let emb = SubquiverEmbedding::by_labels(sub.clone(), quiver.clone())?;
            // the translate power and the starting projective are chosen so
            // that the induced module has dimension >= 3 over the extension
            // point, which is exactly what the pair report's m measures
            let (proj_vertex, power) = match static_name {
                "example2" => ("3", 6),
                _ => ("3", 3),
            };
            let mut t = make_projective(&sub, f, sub.vertex_index(proj_vertex)?)?;
            for _ in 0..power {
                t = ar_translate_inverse(&t)?;
            }
            let induced = extend_by_zero(&emb, &t)?;
            let simple = make_simple(&quiver, f, quiver.vertex_index("inf")?)?;
            if static_name == "example4" {
                (induced, simple)
            } else {
                (simple, induced)
            }
        }
    };
    let euler = EulerData::new(&quiver)?;
    Ok(PairFixture { name: static_name, quiver, euler, x, y })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::exceptional_pair_check;

    #[test]
    fn all_fixture_pairs_qualify() {
        for name in FIXTURE_NAMES {
            let fx = pair_fixture(name).unwrap();
            let report = exceptional_pair_check(&fx.euler, &fx.x, &fx.y).unwrap();
            assert!(report.qualifies, "{name}: {report:?}");
            assert!(report.m >= 3, "{name}: m = {}", report.m);
            if name == "example1" {
                assert_eq!(report.m, 3);
            }
        }
    }
}
