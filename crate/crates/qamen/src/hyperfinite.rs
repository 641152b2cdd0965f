//! Hyperfiniteness certificates: a submodule of relative dimension ≥ 1−ε
//! together with an internal direct decomposition into blocks of dimension
//! ≤ L, plus an independent verifier and the certificate combinators.

use crate::error::{Error, Result};
use crate::functors::{
    extend_by_zero, extend_subrep, reflect, reflect_subrep_plus, FunctorDescriptor, FunctorKind,
    ReflectionDirection,
};
use crate::linalg::Matrix;
use crate::quiver::Quiver;
use crate::rep::{check_subrep_basis, direct_sum, sub_generated, Representation, Subrepresentation};
use crate::scalar::{format_rational, parse_rational, FieldSpec};
use num::rational::BigRational;
use num::{BigInt, One, Zero};
use std::sync::Arc;

/// A concrete hyperfiniteness witness for one module.
#[derive(Debug, Clone)]
pub struct HyperfiniteCertificate {
    pub ambient: Representation,
    pub epsilon: BigRational,
    /// The declared block bound L.
    pub bound: u64,
    pub submodule: Subrepresentation,
    pub blocks: Vec<Subrepresentation>,
}

impl HyperfiniteCertificate {
    /// The whole module as its own single block (valid when dim ≤ L).
    pub fn trivial(m: &Representation, epsilon: BigRational, bound: u64) -> HyperfiniteCertificate {
        let blocks = if m.total_dim() > 0 {
            vec![Subrepresentation::full(m)]
        } else {
            Vec::new()
        };
        HyperfiniteCertificate {
            ambient: m.clone(),
            epsilon,
            bound,
            submodule: Subrepresentation::full(m),
            blocks,
        }
    }

    pub fn dim_m(&self) -> usize {
        self.ambient.total_dim()
    }

    pub fn dim_p(&self) -> usize {
        self.submodule.total_dim()
    }

    pub fn max_block(&self) -> usize {
        self.blocks.iter().map(|b| b.total_dim()).max().unwrap_or(0)
    }

    /// Returns the same certificate declared at a weaker (larger) bound.
    pub fn with_bound(&self, bound: u64) -> HyperfiniteCertificate {
        let mut c = self.clone();
        c.bound = bound;
        c
    }

    pub fn to_json(&self) -> serde_json::Value {
        let subrep_json = |s: &Subrepresentation| -> serde_json::Value {
            serde_json::json!(s.basis.iter().map(|b| b.to_string_rows()).collect::<Vec<_>>())
        };
        serde_json::json!({
            "epsilon": format_rational(&self.epsilon),
            "L": self.bound,
            "submodule": subrep_json(&self.submodule),
            "blocks": self.blocks.iter().map(subrep_json).collect::<Vec<_>>(),
            "achieved": {
                "dim_P": self.dim_p(),
                "dim_M": self.dim_m(),
                "max_block": self.max_block(),
            },
        })
    }

    pub fn from_json(ambient: &Representation, v: &serde_json::Value) -> Result<HyperfiniteCertificate> {
        let epsilon = parse_rational(
            v.get("epsilon")
                .and_then(|e| e.as_str())
                .ok_or_else(|| Error::Parse("missing epsilon".into()))?,
        )?;
        let bound = v
            .get("L")
            .and_then(|l| l.as_u64())
            .ok_or_else(|| Error::Parse("missing L".into()))?;
        let read_subrep = |sv: &serde_json::Value| -> Result<Subrepresentation> {
            let per_vertex: Vec<Vec<Vec<String>>> =
                serde_json::from_value(sv.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            if per_vertex.len() != ambient.quiver.num_vertices() {
                return Err(Error::Parse("wrong number of vertex bases".into()));
            }
            let basis = per_vertex
                .iter()
                .enumerate()
                .map(|(vi, rows)| {
                    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
                    Matrix::from_string_rows(ambient.field, ambient.dims[vi], cols, rows)
                })
                .collect::<Result<Vec<_>>>()?;
            Subrepresentation::new(ambient.clone(), basis)
        };
        let submodule = read_subrep(
            v.get("submodule").ok_or_else(|| Error::Parse("missing submodule".into()))?,
        )?;
        let blocks = v
            .get("blocks")
            .and_then(|b| b.as_array())
            .ok_or_else(|| Error::Parse("missing blocks".into()))?
            .iter()
            .map(read_subrep)
            .collect::<Result<Vec<_>>>()?;
        Ok(HyperfiniteCertificate {
            ambient: ambient.clone(),
            epsilon,
            bound,
            submodule,
            blocks,
        })
    }
}

/// Structured verification failures, named after the violated invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    NotSubrep(String),
    NotDirect,
    SpanMismatch,
    BlockTooBig { block: usize, dim: usize, bound: u64 },
    EpsilonViolated { dim_p: usize, dim_m: usize },
}

impl std::fmt::Display for VerifyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyError::NotSubrep(s) => write!(f, "NOT_SUBREP: {s}"),
            VerifyError::NotDirect => write!(f, "NOT_DIRECT"),
            VerifyError::SpanMismatch => write!(f, "SPAN_MISMATCH"),
            VerifyError::BlockTooBig { block, dim, bound } => {
                write!(f, "BLOCK_TOO_BIG: block {block} has dimension {dim} > L = {bound}")
            }
            VerifyError::EpsilonViolated { dim_p, dim_m } => {
                write!(f, "EPSILON_VIOLATED: dim P = {dim_p}, dim M = {dim_m}")
            }
        }
    }
}

/// Re-checks every certificate invariant from scratch, trusting nothing from
/// the producer.
pub fn verify_certificate(
    m: &Representation,
    c: &HyperfiniteCertificate,
) -> std::result::Result<(), VerifyError> {
    // arrow-stability and per-vertex independence of the submodule and of
    // every block
    check_subrep_basis(m, &c.submodule.basis)
        .map_err(|e| VerifyError::NotSubrep(format!("submodule: {e}")))?;
    for (i, b) in c.blocks.iter().enumerate() {
        check_subrep_basis(m, &b.basis)
            .map_err(|e| VerifyError::NotSubrep(format!("block {i}: {e}")))?;
    }
    // internal direct sum: per vertex, concatenated block bases independent
    // and spanning exactly the submodule's space
    for v in 0..m.quiver.num_vertices() {
        let zero = Matrix::zero(m.field, m.dims[v], 0);
        let mut parts: Vec<&Matrix> = vec![&zero];
        parts.extend(c.blocks.iter().map(|b| &b.basis[v]));
        let concat = Matrix::hstack_all(&parts);
        if concat.rank() != concat.cols {
            return Err(VerifyError::NotDirect);
        }
        let sub = &c.submodule.basis[v];
        if concat.cols != sub.cols
            || !sub.contains_columns(&concat)
            || !concat.contains_columns(sub)
        {
            return Err(VerifyError::SpanMismatch);
        }
    }
    for (i, b) in c.blocks.iter().enumerate() {
        let dim = b.total_dim();
        if dim as u64 > c.bound {
            return Err(VerifyError::BlockTooBig { block: i, dim, bound: c.bound });
        }
    }
    // exact rational comparison dim P ≥ (1−ε)·dim M
    let dim_p = c.submodule.total_dim();
    let dim_m = m.total_dim();
    let lhs = BigRational::from_integer(BigInt::from(dim_p as i64));
    let rhs = (BigRational::one() - &c.epsilon)
        * BigRational::from_integer(BigInt::from(dim_m as i64));
    if lhs < rhs {
        return Err(VerifyError::EpsilonViolated { dim_p, dim_m });
    }
    Ok(())
}

/// Certificate for the direct sum of the ambients, with blocks the disjoint
/// union of the embedded blocks. All inputs must share (ε, L); the list may
/// be empty, yielding the zero module's empty certificate.
pub fn combine_direct_sum(
    quiver: &Arc<Quiver>,
    field: FieldSpec,
    epsilon: &BigRational,
    bound: u64,
    certs: &[HyperfiniteCertificate],
) -> Result<HyperfiniteCertificate> {
    for c in certs {
        if &c.epsilon != epsilon || c.bound != bound {
            return Err(Error::EpsilonMismatch);
        }
        if *c.ambient.quiver != **quiver || c.ambient.field != field {
            return Err(Error::QuiverMismatch);
        }
    }
    if certs.is_empty() {
        let zero = Representation::zero(quiver.clone(), field);
        return Ok(HyperfiniteCertificate {
            ambient: zero.clone(),
            epsilon: epsilon.clone(),
            bound,
            submodule: Subrepresentation::zero(&zero),
            blocks: Vec::new(),
        });
    }
    let parts: Vec<Representation> = certs.iter().map(|c| c.ambient.clone()).collect();
    let (sum, _) = direct_sum(&parts)?;
    let n = quiver.num_vertices();
    // per-vertex row offsets of each part inside the sum
    let mut offsets = vec![vec![0usize; n]];
    for p in &parts {
        let last = offsets.last().unwrap().clone();
        offsets.push((0..n).map(|v| last[v] + p.dims[v]).collect());
    }
    let embed = |part: usize, s: &Subrepresentation| -> Result<Subrepresentation> {
        let basis = (0..n)
            .map(|v| {
                let b = &s.basis[v];
                Matrix::from_fn(field, sum.dims[v], b.cols, |r, c| {
                    if r >= offsets[part][v] && r < offsets[part][v] + parts[part].dims[v] {
                        b.get(r - offsets[part][v], c).clone()
                    } else {
                        field.zero()
                    }
                })
            })
            .collect();
        Subrepresentation::new(sum.clone(), basis)
    };
    let mut sub_bases: Vec<Matrix> = (0..n).map(|v| Matrix::zero(field, sum.dims[v], 0)).collect();
    let mut blocks = Vec::new();
    for (pi, c) in certs.iter().enumerate() {
        let emb = embed(pi, &c.submodule)?;
        for v in 0..n {
            sub_bases[v] = sub_bases[v].hstack(&emb.basis[v]);
        }
        for b in &c.blocks {
            blocks.push(embed(pi, b)?);
        }
    }
    let submodule = Subrepresentation::new(sum.clone(), sub_bases)?;
    Ok(HyperfiniteCertificate {
        ambient: sum,
        epsilon: epsilon.clone(),
        bound,
        submodule,
        blocks,
    })
}

/// Pushes a certificate for P forward along an inclusion P ↪ M of bounded
/// codimension. The certificate `c` must be for the subrepresentation in its
/// own coordinates (c.ambient ≅ induced rep of `inclusion`). Succeeds iff
/// the effective epsilon (codim + inner loss over dim M) is ≤ the target;
/// returns the certificate (declared at the target ε) and the achieved ε_eff.
pub fn extend_bounded_codim(
    inclusion: &Subrepresentation,
    c: &HyperfiniteCertificate,
    target_epsilon: &BigRational,
) -> Result<(HyperfiniteCertificate, BigRational)> {
    let m = &inclusion.ambient;
    let n = m.quiver.num_vertices();
    for v in 0..n {
        if c.ambient.dims[v] != inclusion.basis[v].cols {
            return Err(Error::DimensionMismatch(
                "certificate ambient does not match the inclusion's subrepresentation".into(),
            ));
        }
    }
    let dim_m = m.total_dim();
    let dim_p = inclusion.total_dim();
    let dim_y = c.submodule.total_dim();
    let codim = dim_m - dim_p;
    let eps_eff = if dim_m == 0 {
        BigRational::zero()
    } else {
        BigRational::new(
            BigInt::from((codim + (dim_p - dim_y)) as i64),
            BigInt::from(dim_m as i64),
        )
    };
    if &eps_eff > target_epsilon {
        return Err(Error::EpsilonUnachievable(
            format_rational(&eps_eff),
            format_rational(target_epsilon),
        ));
    }
    let push = |s: &Subrepresentation| -> Result<Subrepresentation> {
        let basis = (0..n)
            .map(|v| inclusion.basis[v].mul(&s.basis[v]))
            .collect();
        Subrepresentation::new(m.clone(), basis)
    };
    let cert = HyperfiniteCertificate {
        ambient: m.clone(),
        epsilon: target_epsilon.clone(),
        bound: c.bound,
        submodule: push(&c.submodule)?,
        blocks: c.blocks.iter().map(&push).collect::<Result<Vec<_>>>()?,
    };
    Ok((cert, eps_eff))
}

/// Transports a certificate through a functor with dimension sandwich
/// K_1·dim X ≤ dim F(X) ≤ K_2·dim X: ε' = (K_2/K_1)·ε and L' = ⌈K_2·L⌉.
pub fn pushforward(
    c: &HyperfiniteCertificate,
    f: &FunctorDescriptor,
) -> Result<HyperfiniteCertificate> {
    let eps = &c.epsilon * &f.k2 / &f.k1;
    let l_rat = BigRational::from_integer(BigInt::from(c.bound)) * &f.k2;
    let bound = num::ToPrimitive::to_u64(&crate::scalar::ceil_rational(&l_rat))
        .ok_or_else(|| Error::InvalidInput("L overflow".into()))?;
    match &f.kind {
        FunctorKind::ZeroExtension(e) => {
            let ambient = extend_by_zero(e, &c.ambient)?;
            let submodule = extend_subrep(e, &c.submodule, &ambient)?;
            let blocks = c
                .blocks
                .iter()
                .map(|b| extend_subrep(e, b, &ambient))
                .collect::<Result<Vec<_>>>()?;
            Ok(HyperfiniteCertificate {
                ambient,
                epsilon: eps,
                bound,
                submodule,
                blocks,
            })
        }
        FunctorKind::Reflection { vertex, direction } => {
            // only the left-exact S⁺ transports subrepresentations
            if *direction != ReflectionDirection::Plus {
                return Err(Error::UnsupportedFunctor);
            }
            let (_, ambient) = reflect(&c.ambient, *vertex, ReflectionDirection::Plus)?;
            let submodule = reflect_subrep_plus(&c.submodule, *vertex, &ambient)?;
            let blocks = c
                .blocks
                .iter()
                .map(|b| reflect_subrep_plus(b, *vertex, &ambient))
                .collect::<Result<Vec<_>>>()?;
            Ok(HyperfiniteCertificate {
                ambient,
                epsilon: eps,
                bound,
                submodule,
                blocks,
            })
        }
    }
}

/// Result of a profile search: the best certified submodule dimension for a
/// given block bound, and whether the search space was exhausted.
#[derive(Debug, Clone)]
pub struct ProfileResult {
    pub best_dim: usize,
    pub certificate: HyperfiniteCertificate,
    pub exact: bool,
}

/// Searches for the largest submodule admitting an internal decomposition
/// into coordinate-generated blocks of dimension ≤ L. Exhaustive over all
/// subsets of standard basis generators when total dim ≤ 12 over GF(2);
/// greedy otherwise. The returned dimension is a lower bound for the true
/// optimum.
pub fn profile_search(m: &Representation, bound: u64) -> ProfileResult {
    let dim_m = m.total_dim();
    let mk_eps = |best: usize| -> BigRational {
        if dim_m == 0 {
            BigRational::zero()
        } else {
            BigRational::one()
                - BigRational::new(BigInt::from(best as i64), BigInt::from(dim_m as i64))
        }
    };
    if bound as usize >= dim_m {
        let cert = HyperfiniteCertificate::trivial(m, mk_eps(dim_m), bound);
        return ProfileResult { best_dim: dim_m, certificate: cert, exact: true };
    }
    if bound == 0 {
        let cert = HyperfiniteCertificate {
            ambient: m.clone(),
            epsilon: mk_eps(0),
            bound,
            submodule: Subrepresentation::zero(m),
            blocks: Vec::new(),
        };
        return ProfileResult { best_dim: 0, certificate: cert, exact: true };
    }
    // standard basis generators (vertex, coordinate) with their cyclic
    // closures
    let gens: Vec<(usize, usize)> = (0..m.quiver.num_vertices())
        .flat_map(|v| (0..m.dims[v]).map(move |i| (v, i)))
        .collect();
    let closures: Vec<Subrepresentation> = gens
        .iter()
        .map(|&(v, i)| {
            let mut vec = vec![m.field.zero(); m.dims[v]];
            vec[i] = m.field.one();
            sub_generated(m, &[(v, vec)]).expect("standard generator")
        })
        .collect();
    let eval = |subset: &[usize]| -> Option<(usize, Vec<usize>)> {
        // blocks must fit the bound and be jointly independent per vertex
        let mut total = 0usize;
        for &g in subset {
            let d = closures[g].total_dim();
            if d as u64 > bound {
                return None;
            }
            total += d;
        }
        for v in 0..m.quiver.num_vertices() {
            let mut concat = Matrix::zero(m.field, m.dims[v], 0);
            for &g in subset {
                concat = concat.hstack(&closures[g].basis[v]);
            }
            if concat.rank() != concat.cols {
                return None;
            }
        }
        Some((total, subset.to_vec()))
    };
    let exact = dim_m <= 12 && m.field == FieldSpec::PrimeField(2);
    let mut best: (usize, Vec<usize>) = (0, Vec::new());
    if exact {
        let k = gens.len();
        for mask in 0u32..(1 << k) {
            let subset: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
            if let Some((total, sel)) = eval(&subset) {
                if total > best.0 {
                    best = (total, sel);
                }
            }
        }
    } else {
        // greedy: grow the block list generator by generator
        let mut current: Vec<usize> = Vec::new();
        for g in 0..gens.len() {
            let mut attempt = current.clone();
            attempt.push(g);
            if let Some((total, sel)) = eval(&attempt) {
                if total > best.0 {
                    best = (total, sel.clone());
                    current = sel;
                }
            }
        }
    }
    let blocks: Vec<Subrepresentation> = best.1.iter().map(|&g| closures[g].clone()).collect();
    let mut sub_bases: Vec<Matrix> = (0..m.quiver.num_vertices())
        .map(|v| Matrix::zero(m.field, m.dims[v], 0))
        .collect();
    for b in &blocks {
        for v in 0..m.quiver.num_vertices() {
            sub_bases[v] = sub_bases[v].hstack(&b.basis[v]);
        }
    }
    let submodule = Subrepresentation::new(m.clone(), sub_bases).expect("independent blocks");
    let cert = HyperfiniteCertificate {
        ambient: m.clone(),
        epsilon: mk_eps(best.0),
        bound,
        submodule,
        blocks,
    };
    debug_assert!(verify_certificate(m, &cert).is_ok());
    ProfileResult { best_dim: best.0, certificate: cert, exact }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::SubquiverEmbedding;
    use crate::rep::make_simple;
    use crate::scalar::rational;

    fn kron() -> Arc<Quiver> {
        Arc::new(Quiver::kronecker())
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    fn pre_block(q: &Arc<Quiver>, f: FieldSpec, i: usize) -> Representation {
        let a = Matrix::from_fn(f, i + 1, i, |r, c| if r == c { f.one() } else { f.zero() });
        let b = Matrix::from_fn(f, i + 1, i, |r, c| {
            if r == c + 1 { f.one() } else { f.zero() }
        });
        Representation::new(q.clone(), f, vec![i, i + 1], vec![a, b]).unwrap()
    }

    #[test]
    fn trivial_certificate_verifies() {
        let q = kron();
        let f = gf(2);
        let m = pre_block(&q, f, 2);
        let c = HyperfiniteCertificate::trivial(&m, rational(1, 4), 5);
        assert!(verify_certificate(&m, &c).is_ok());
        // L smaller than the single block
        let c_small = c.with_bound(1);
        assert!(matches!(
            verify_certificate(&m, &c_small),
            Err(VerifyError::BlockTooBig { dim: 5, bound: 1, .. })
        ));
    }

    #[test]
    fn verifier_catches_violations() {
        let q = kron();
        let f = gf(2);
        let m = pre_block(&q, f, 2);
        let full = Subrepresentation::full(&m);
        // a "block" missing an arrow image: vertex-1 vector e_1 with an
        // incomplete vertex-2 space
        let bad_block = vec![
            Matrix::from_int_rows(f, &[vec![1], vec![0]]),
            Matrix::from_int_rows(f, &[vec![1], vec![0], vec![0]]),
        ];
        let c = HyperfiniteCertificate {
            ambient: m.clone(),
            epsilon: rational(1, 4),
            bound: 5,
            submodule: full.clone(),
            blocks: vec![HyperfiniteCertificate {
                ambient: m.clone(),
                epsilon: rational(1, 4),
                bound: 5,
                submodule: full.clone(),
                blocks: vec![],
            }
            .submodule
            .clone()],
        };
        // sanity: well-formed trivial clone still passes
        assert!(verify_certificate(&m, &c).is_ok());
        let broken = HyperfiniteCertificate {
            blocks: vec![Subrepresentation {
                ambient: m.clone(),
                basis: bad_block,
            }],
            ..c.clone()
        };
        assert!(matches!(
            verify_certificate(&m, &broken),
            Err(VerifyError::NotSubrep(_))
        ));
        // duplicated block: dependent columns
        let dup = HyperfiniteCertificate {
            blocks: vec![full.clone(), full.clone()],
            ..c.clone()
        };
        assert!(matches!(verify_certificate(&m, &dup), Err(VerifyError::NotDirect)));
        // block span smaller than the submodule
        let small = HyperfiniteCertificate { blocks: vec![], ..c.clone() };
        assert!(matches!(
            verify_certificate(&m, &small),
            Err(VerifyError::SpanMismatch)
        ));
        // epsilon violation: empty submodule at ε = 1/4
        let empty = HyperfiniteCertificate {
            submodule: Subrepresentation::zero(&m),
            blocks: vec![],
            ..c.clone()
        };
        assert!(matches!(
            verify_certificate(&m, &empty),
            Err(VerifyError::EpsilonViolated { dim_p: 0, dim_m: 5 })
        ));
    }

    #[test]
    fn combine_two_copies() {
        let q = kron();
        let f = gf(2);
        let m = pre_block(&q, f, 2);
        let c = HyperfiniteCertificate::trivial(&m, rational(1, 4), 5);
        let combined =
            combine_direct_sum(&q, f, &rational(1, 4), 5, &[c.clone(), c.clone()]).unwrap();
        assert_eq!(combined.dim_m(), 10);
        assert_eq!(combined.dim_p(), 10);
        assert_eq!(combined.blocks.len(), 2);
        assert!(verify_certificate(&combined.ambient, &combined).is_ok());
        // mismatched parameters rejected
        assert!(matches!(
            combine_direct_sum(&q, f, &rational(1, 2), 5, &[c.clone()]),
            Err(Error::EpsilonMismatch)
        ));
        // empty list: zero module certificate
        let empty = combine_direct_sum(&q, f, &rational(1, 4), 5, &[]).unwrap();
        assert_eq!(empty.dim_m(), 0);
        assert!(verify_certificate(&empty.ambient, &empty).is_ok());
    }

    #[test]
    fn extend_codim_arithmetic() {
        let q = kron();
        let f = gf(2);
        let m = pre_block(&q, f, 2);
        // inclusion: the submodule generated by e_1, isomorphic to Pre(1)
        let inc = crate::rep::sub_generated(&m, &[(0, vec![f.one(), f.zero()])]).unwrap();
        let (p, _) = inc.induced().unwrap();
        let c = HyperfiniteCertificate::trivial(&p, rational(0, 1), 3);
        // codim 2, no inner loss: eps_eff = 2/5
        let (ext, eps_eff) = extend_bounded_codim(&inc, &c, &rational(1, 2)).unwrap();
        assert_eq!(eps_eff, rational(2, 5));
        assert!(verify_certificate(&m, &ext).is_ok());
        assert_eq!(ext.dim_p(), 3);
        // target below the achievable epsilon
        assert!(matches!(
            extend_bounded_codim(&inc, &c, &rational(1, 4)),
            Err(Error::EpsilonUnachievable(_, _))
        ));
        // codim 0 round trip
        let full = Subrepresentation::full(&m);
        let cm = HyperfiniteCertificate::trivial(&m, rational(1, 4), 5);
        let (same, eff) = extend_bounded_codim(&full, &cm, &rational(1, 4)).unwrap();
        assert_eq!(eff, rational(0, 1));
        assert_eq!(same.dim_p(), 5);
    }

    #[test]
    fn pushforward_zero_extension() {
        let sub = kron();
        let ambient = Arc::new(
            Quiver::parse(
                &["1", "2", "3"],
                &[("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3")],
            )
            .unwrap(),
        );
        let e = SubquiverEmbedding::by_labels(sub.clone(), ambient).unwrap();
        let f = gf(2);
        let m = pre_block(&sub, f, 2);
        let c = HyperfiniteCertificate::trivial(&m, rational(1, 4), 5);
        let fd = FunctorDescriptor::zero_extension(e);
        let pushed = pushforward(&c, &fd).unwrap();
        assert_eq!(pushed.dim_m(), c.dim_m());
        assert_eq!(pushed.dim_p(), c.dim_p());
        assert_eq!(pushed.epsilon, c.epsilon);
        assert_eq!(pushed.bound, c.bound);
        assert!(verify_certificate(&pushed.ambient, &pushed).is_ok());
    }

    #[test]
    fn pushforward_reflection_bookkeeping() {
        let q = kron();
        let f = gf(2);
        let m = pre_block(&q, f, 2);
        let c = HyperfiniteCertificate::trivial(&m, rational(1, 10), 5);
        let fd = crate::functors::FunctorDescriptor::reflection(
            &q,
            1,
            ReflectionDirection::Plus,
            rational(1, 1),
        );
        // K_2 = |Q_1| + 1 = 3
        let pushed = pushforward(&c, &fd).unwrap();
        assert_eq!(pushed.bound, 15);
        assert_eq!(pushed.epsilon, rational(3, 10));
        assert!(verify_certificate(&pushed.ambient, &pushed).is_ok());
    }

    #[test]
    fn profile_search_examples() {
        let q = kron();
        let f = gf(2);
        let m = pre_block(&q, f, 2);
        // L >= dim: whole module
        let r = profile_search(&m, 5);
        assert_eq!(r.best_dim, 5);
        assert!(r.exact);
        // L = 0: nothing
        let r0 = profile_search(&m, 0);
        assert_eq!(r0.best_dim, 0);
        // L = 3: exact search finds 4 of 5 (P_1 ⊕ P_0)
        let r3 = profile_search(&m, 3);
        assert!(r3.exact);
        assert_eq!(r3.best_dim, 4);
        assert!(verify_certificate(&m, &r3.certificate).is_ok());
        assert_eq!(r3.certificate.max_block(), 3);
        // greedy over GF(5) still verifies and is a lower bound
        let f5 = gf(5);
        let m5 = pre_block(&q, f5, 2);
        let g = profile_search(&m5, 3);
        assert!(!g.exact);
        assert!(g.best_dim <= 5);
        assert!(verify_certificate(&m5, &g.certificate).is_ok());
    }

    #[test]
    fn certificate_json_round_trip() {
        let q = kron();
        let f = gf(2);
        let m = pre_block(&q, f, 2);
        let r = profile_search(&m, 3);
        let json = r.certificate.to_json();
        let back = HyperfiniteCertificate::from_json(&m, &json).unwrap();
        assert_eq!(back.epsilon, r.certificate.epsilon);
        assert_eq!(back.bound, r.certificate.bound);
        assert_eq!(back.dim_p(), r.certificate.dim_p());
        assert!(verify_certificate(&m, &back).is_ok());
    }

    #[test]
    fn zero_module_certificates() {
        let q = kron();
        let f = gf(2);
        let z = Representation::zero(q.clone(), f);
        let c = HyperfiniteCertificate::trivial(&z, rational(1, 2), 1);
        assert!(verify_certificate(&z, &c).is_ok());
        let s = make_simple(&q, f, 0).unwrap();
        let r = profile_search(&s, 1);
        assert_eq!(r.best_dim, 1);
    }
}
