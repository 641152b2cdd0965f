//! Functor plumbing between quivers: zero-extension and restriction along
//! subquiver embeddings, BGP reflections, the inverse AR translate as a
//! reflection composite, wild-witness search, and the orthogonal
//! exceptional-pair checker.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{EulerData, Quiver, QuiverClass};
use crate::rep::{ext1_dim, hom_basis, Representation, Subrepresentation};
use num::rational::BigRational;
use num::BigInt;
use std::sync::Arc;

/// An embedding of a quiver into a larger one, by explicit vertex and arrow
/// injections.
#[derive(Debug, Clone)]
pub struct SubquiverEmbedding {
    pub sub: Arc<Quiver>,
    pub ambient: Arc<Quiver>,
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl SubquiverEmbedding {
    pub fn new(
        sub: Arc<Quiver>,
        ambient: Arc<Quiver>,
        vertex_map: Vec<usize>,
        arrow_map: Vec<usize>,
    ) -> Result<SubquiverEmbedding> {
        if vertex_map.len() != sub.num_vertices() || arrow_map.len() != sub.arrows.len() {
            return Err(Error::ShapeMismatch("injection lengths".into()));
        }
        let mut seen_v = std::collections::HashSet::new();
        for &v in &vertex_map {
            if v >= ambient.num_vertices() || !seen_v.insert(v) {
                return Err(Error::InvalidInput("vertex injection invalid".into()));
            }
        }
        let mut seen_a = std::collections::HashSet::new();
        for (i, &ai) in arrow_map.iter().enumerate() {
            if ai >= ambient.arrows.len() || !seen_a.insert(ai) {
                return Err(Error::InvalidInput("arrow injection invalid".into()));
            }
            let sa = &sub.arrows[i];
            let aa = &ambient.arrows[ai];
            if vertex_map[sa.source] != aa.source || vertex_map[sa.target] != aa.target {
                return Err(Error::InvalidInput(format!(
                    "arrow {} endpoints do not match under the embedding",
                    sa.name
                )));
            }
        }
        Ok(SubquiverEmbedding { sub, ambient, vertex_map, arrow_map })
    }

    /// Matches vertices and arrows by label.
    pub fn by_labels(sub: Arc<Quiver>, ambient: Arc<Quiver>) -> Result<SubquiverEmbedding> {
        let vertex_map = sub
            .vertices
            .iter()
            .map(|v| ambient.vertex_index(v))
            .collect::<Result<Vec<_>>>()?;
        let arrow_map = sub
            .arrows
            .iter()
            .map(|a| ambient.arrow_index(&a.name))
            .collect::<Result<Vec<_>>>()?;
        SubquiverEmbedding::new(sub, ambient, vertex_map, arrow_map)
    }
}

/// Extends a representation of the subquiver by zero vertex spaces and zero
/// arrow maps. Dimension is preserved.
pub fn extend_by_zero(e: &SubquiverEmbedding, m: &Representation) -> Result<Representation> {
    if m.quiver != e.sub {
        return Err(Error::QuiverMismatch);
    }
    let f = m.field;
    let n = e.ambient.num_vertices();
    let mut dims = vec![0usize; n];
    for (sv, &av) in e.vertex_map.iter().enumerate() {
        dims[av] = m.dims[sv];
    }
    let mut maps: Vec<Matrix> = e
        .ambient
        .arrows
        .iter()
        .map(|a| Matrix::zero(f, dims[a.target], dims[a.source]))
        .collect();
    for (sa, &aa) in e.arrow_map.iter().enumerate() {
        maps[aa] = m.maps[sa].clone();
    }
    Representation::new(e.ambient.clone(), f, dims, maps)
}

/// Forgets the vertices and arrows outside the embedded subquiver.
pub fn restrict(e: &SubquiverEmbedding, m: &Representation) -> Result<Representation> {
    if m.quiver != e.ambient {
        return Err(Error::QuiverMismatch);
    }
    let dims: Vec<usize> = e.vertex_map.iter().map(|&av| m.dims[av]).collect();
    let maps: Vec<Matrix> = e.arrow_map.iter().map(|&aa| m.maps[aa].clone()).collect();
    Representation::new(e.sub.clone(), m.field, dims, maps)
}

/// Transports a subrepresentation of m (over sub) to a subrepresentation of
/// extend_by_zero(m).
pub fn extend_subrep(
    e: &SubquiverEmbedding,
    s: &Subrepresentation,
    extended_ambient: &Representation,
) -> Result<Subrepresentation> {
    let f = extended_ambient.field;
    let n = e.ambient.num_vertices();
    let mut basis: Vec<Matrix> = (0..n)
        .map(|v| Matrix::zero(f, extended_ambient.dims[v], 0))
        .collect();
    for (sv, &av) in e.vertex_map.iter().enumerate() {
        basis[av] = s.basis[sv].clone();
    }
    Subrepresentation::new(extended_ambient.clone(), basis)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectionDirection {
    /// S_i^+ at a sink: the vertex space becomes the kernel of the total
    /// in-map.
    Plus,
    /// S_i^- at a source: the vertex space becomes the cokernel of the total
    /// out-map.
    Minus,
}

/// The quiver with all arrows incident to `vertex` reversed.
pub fn reflected_quiver(q: &Quiver, vertex: usize) -> Quiver {
    let arrows = q
        .arrows
        .iter()
        .map(|a| {
            if a.source == vertex || a.target == vertex {
                (a.name.clone(), q.vertices[a.target].clone(), q.vertices[a.source].clone())
            } else {
                (a.name.clone(), q.vertices[a.source].clone(), q.vertices[a.target].clone())
            }
        })
        .collect();
    Quiver::new(q.vertices.clone(), arrows).expect("reflection preserves acyclicity")
}

/// BGP reflection of a representation at a sink (Plus) or source (Minus).
pub fn reflect(
    m: &Representation,
    vertex: usize,
    dir: ReflectionDirection,
) -> Result<(Arc<Quiver>, Representation)> {
    let q = &m.quiver;
    let f = m.field;
    match dir {
        ReflectionDirection::Plus => {
            if !q.is_sink(vertex) {
                return Err(Error::NotSinkOrSource(q.vertices[vertex].clone()));
            }
            let in_arrows: Vec<usize> = (0..q.arrows.len())
                .filter(|&i| q.arrows[i].target == vertex)
                .collect();
            // total map ⊕ V_{s(a)} -> V_i
            let mut total = Matrix::zero(f, m.dims[vertex], 0);
            for &ai in &in_arrows {
                total = total.hstack(&m.maps[ai]);
            }
            let kernel_cols = total.kernel_basis();
            let src_total: usize = in_arrows.iter().map(|&ai| m.dims[q.arrows[ai].source]).sum();
            let kernel = if kernel_cols.is_empty() {
                Matrix::zero(f, src_total, 0)
            } else {
                Matrix::from_columns(f, src_total, &kernel_cols)
            };
            let new_q = Arc::new(reflected_quiver(q, vertex));
            let mut dims = m.dims.clone();
            dims[vertex] = kernel.cols;
            let mut maps: Vec<Matrix> = m.maps.clone();
            let mut row0 = 0usize;
            for &ai in &in_arrows {
                let d = m.dims[q.arrows[ai].source];
                maps[ai] = Matrix::from_fn(f, d, kernel.cols, |r, c| {
                    kernel.get(row0 + r, c).clone()
                });
                row0 += d;
            }
            let rep = Representation::new(new_q.clone(), f, dims, maps)?;
            Ok((new_q, rep))
        }
        ReflectionDirection::Minus => {
            if !q.is_source(vertex) {
                return Err(Error::NotSinkOrSource(q.vertices[vertex].clone()));
            }
            let out_arrows: Vec<usize> = (0..q.arrows.len())
                .filter(|&i| q.arrows[i].source == vertex)
                .collect();
            // total map V_i -> ⊕ V_{t(a)}
            let mut total = Matrix::zero(f, 0, m.dims[vertex]);
            for &ai in &out_arrows {
                total = total.vstack(&m.maps[ai]);
            }
            let tgt_total = total.rows;
            // cokernel projection: complete a column-space basis and project
            // onto the complementary coordinates
            let im = total.column_space_basis();
            let r = im.cols;
            let aug = im.hstack(&Matrix::identity(f, tgt_total));
            let mut reduced = aug.clone();
            let pivots = reduced.rref_in_place();
            let comp_cols: Vec<usize> = pivots
                .iter()
                .filter(|&&c| c >= r)
                .map(|&c| c - r)
                .collect();
            let comp = Matrix::from_fn(f, tgt_total, comp_cols.len(), |row, c| {
                if row == comp_cols[c] { f.one() } else { f.zero() }
            });
            let full = im.hstack(&comp);
            let inv = full.inverse().expect("completed basis is invertible");
            let c = tgt_total - r;
            let proj = Matrix::from_fn(f, c, tgt_total, |row, col| inv.get(r + row, col).clone());
            let new_q = Arc::new(reflected_quiver(q, vertex));
            let mut dims = m.dims.clone();
            dims[vertex] = c;
            let mut maps: Vec<Matrix> = m.maps.clone();
            let mut col0 = 0usize;
            for &ai in &out_arrows {
                let d = m.dims[q.arrows[ai].target];
                maps[ai] = Matrix::from_fn(f, c, d, |row, col| {
                    proj.get(row, col0 + col).clone()
                });
                col0 += d;
            }
            let rep = Representation::new(new_q.clone(), f, dims, maps)?;
            Ok((new_q, rep))
        }
    }
}

/// Transports a subrepresentation through S_i^+ (left exact): the new vertex
/// space of the subrepresentation is the kernel of the restricted total map,
/// expressed in the ambient kernel's coordinates.
pub fn reflect_subrep_plus(
    s: &Subrepresentation,
    vertex: usize,
    reflected_ambient: &Representation,
) -> Result<Subrepresentation> {
    let m = &s.ambient;
    let q = &m.quiver;
    let f = m.field;
    if !q.is_sink(vertex) {
        return Err(Error::NotSinkOrSource(q.vertices[vertex].clone()));
    }
    let in_arrows: Vec<usize> = (0..q.arrows.len())
        .filter(|&i| q.arrows[i].target == vertex)
        .collect();
    let mut total = Matrix::zero(f, m.dims[vertex], 0);
    let mut restricted = Matrix::zero(f, m.dims[vertex], 0);
    let mut blocks: Vec<Matrix> = Vec::new();
    for &ai in &in_arrows {
        let src = q.arrows[ai].source;
        total = total.hstack(&m.maps[ai]);
        restricted = restricted.hstack(&m.maps[ai].mul(&s.basis[src]));
        blocks.push(s.basis[src].clone());
    }
    let src_total: usize = in_arrows.iter().map(|&ai| m.dims[q.arrows[ai].source]).sum();
    let kernel_cols = total.kernel_basis();
    let kernel = if kernel_cols.is_empty() {
        Matrix::zero(f, src_total, 0)
    } else {
        Matrix::from_columns(f, src_total, &kernel_cols)
    };
    // kernel of the restricted total map, pushed into ambient coordinates
    let sub_cols: usize = blocks.iter().map(|b| b.cols).sum();
    let sub_kernel_cols = restricted.kernel_basis();
    let sub_kernel = if sub_kernel_cols.is_empty() {
        Matrix::zero(f, sub_cols, 0)
    } else {
        Matrix::from_columns(f, sub_cols, &sub_kernel_cols)
    };
    // block-diagonal inclusion ⊕ U_{s(a)} -> ⊕ V_{s(a)}
    let mut incl = Matrix::zero(f, src_total, sub_cols);
    let mut row0 = 0usize;
    let mut col0 = 0usize;
    for b in &blocks {
        for rr in 0..b.rows {
            for cc in 0..b.cols {
                incl.set(row0 + rr, col0 + cc, b.get(rr, cc).clone());
            }
        }
        row0 += b.rows;
        col0 += b.cols;
    }
    let embedded = incl.mul(&sub_kernel);
    let coords = kernel
        .solve(&embedded)
        .expect("restricted kernel lies in the ambient kernel");
    let mut basis = s.basis.clone();
    basis[vertex] = coords;
    Subrepresentation::new(reflected_ambient.clone(), basis)
}

/// τ⁻ as the composite of source reflections over a topological ordering;
/// lands back on the original quiver. Injective indecomposables go to zero.
pub fn ar_translate_inverse(m: &Representation) -> Result<Representation> {
    let original = m.quiver.clone();
    let order = m.quiver.topological_order().ok_or(Error::NotAcyclic)?;
    let mut current = m.clone();
    for v in order {
        let (_, next) = reflect(&current, v, ReflectionDirection::Minus)?;
        current = next;
    }
    debug_assert_eq!(*current.quiver, *original, "composite returns to the original quiver");
    // re-anchor on the original Arc so quiver pointer equality holds
    Representation::new(original, current.field, current.dims.clone(), current.maps.clone())
}

/// τ as the composite of sink reflections over a reverse topological
/// ordering. Projective indecomposables go to zero.
pub fn ar_translate(m: &Representation) -> Result<Representation> {
    let original = m.quiver.clone();
    let mut order = m.quiver.topological_order().ok_or(Error::NotAcyclic)?;
    order.reverse();
    let mut current = m.clone();
    for v in order {
        let (_, next) = reflect(&current, v, ReflectionDirection::Plus)?;
        current = next;
    }
    debug_assert_eq!(*current.quiver, *original);
    Representation::new(original, current.field, current.dims.clone(), current.maps.clone())
}

/// Descriptor for a functor with dimension sandwich bounds
/// K_1·dim X ≤ dim F(X) ≤ K_2·dim X.
#[derive(Debug, Clone)]
pub enum FunctorKind {
    ZeroExtension(SubquiverEmbedding),
    Reflection { vertex: usize, direction: ReflectionDirection },
}

#[derive(Debug, Clone)]
pub struct FunctorDescriptor {
    pub kind: FunctorKind,
    pub k1: BigRational,
    pub k2: BigRational,
}

impl FunctorDescriptor {
    pub fn zero_extension(e: SubquiverEmbedding) -> FunctorDescriptor {
        let one = BigRational::from_integer(BigInt::from(1));
        FunctorDescriptor {
            kind: FunctorKind::ZeroExtension(e),
            k1: one.clone(),
            k2: one,
        }
    }

    /// Reflection with the declared upper bound K_2 = |Q_1| + 1; K_1 is
    /// supplied per use.
    pub fn reflection(
        q: &Quiver,
        vertex: usize,
        direction: ReflectionDirection,
        k1: BigRational,
    ) -> FunctorDescriptor {
        let k2 = BigRational::from_integer(BigInt::from(q.arrows.len() as i64 + 1));
        FunctorDescriptor {
            kind: FunctorKind::Reflection { vertex, direction },
            k1,
            k2,
        }
    }
}

/// Witness that a quiver is wild.
#[derive(Debug, Clone, PartialEq)]
pub enum WildWitness {
    MultiArrow { from: String, to: String, count: usize },
    ProperEuclideanSubquiver(Quiver),
}

/// Finds a wildness witness: a vertex pair with ≥ 3 parallel arrows, or a
/// proper subquiver of Euclidean type. Returns None iff the quiver is not
/// wild.
pub fn wild_witness(q: &Quiver) -> Result<Option<WildWitness>> {
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    let e = EulerData::new(q)?;
    if !matches!(e.classification, QuiverClass::Wild) {
        return Ok(None);
    }
    let n = q.num_vertices();
    for i in 0..n {
        for j in 0..n {
            let c = q.arrows_between(i, j);
            if c >= 3 {
                return Ok(Some(WildWitness::MultiArrow {
                    from: q.vertices[i].clone(),
                    to: q.vertices[j].clone(),
                    count: c,
                }));
            }
        }
    }
    // induced subquivers over proper vertex subsets, smallest first
    if n <= 10 {
        for size in 2..n {
            let mut found: Option<Quiver> = None;
            enumerate_subsets(n, size, &mut |subset| {
                if found.is_some() {
                    return;
                }
                if let Some(sub) = induced_subquiver(q, subset) {
                    if sub.is_connected() {
                        if let Ok(ed) = EulerData::new(&sub) {
                            if matches!(ed.classification, QuiverClass::Euclidean { .. }) {
                                found = Some(sub);
                            }
                        }
                    }
                }
            });
            if let Some(sub) = found {
                return Ok(Some(WildWitness::ProperEuclideanSubquiver(sub)));
            }
        }
    }
    // fallback: all vertices, one arrow dropped
    for drop in 0..q.arrows.len() {
        let arrows = q
            .arrows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, a)| {
                (a.name.clone(), q.vertices[a.source].clone(), q.vertices[a.target].clone())
            })
            .collect();
        if let Ok(sub) = Quiver::new(q.vertices.clone(), arrows) {
            if sub.is_connected() {
                if let Ok(ed) = EulerData::new(&sub) {
                    if matches!(ed.classification, QuiverClass::Euclidean { .. }) {
                        return Ok(Some(WildWitness::ProperEuclideanSubquiver(sub)));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn enumerate_subsets(n: usize, size: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, size: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == size {
            f(acc);
            return;
        }
        for v in start..n {
            acc.push(v);
            go(n, size, v + 1, acc, f);
            acc.pop();
        }
    }
    go(n, size, 0, &mut Vec::new(), f);
}

fn induced_subquiver(q: &Quiver, subset: &[usize]) -> Option<Quiver> {
    let vertices: Vec<String> = subset.iter().map(|&v| q.vertices[v].clone()).collect();
    let arrows = q
        .arrows
        .iter()
        .filter(|a| subset.contains(&a.source) && subset.contains(&a.target))
        .map(|a| {
            (a.name.clone(), q.vertices[a.source].clone(), q.vertices[a.target].clone())
        })
        .collect();
    Quiver::new(vertices, arrows).ok()
}

/// Report of the orthogonal exceptional-pair conditions for (x, y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub end_x: usize,
    pub end_y: usize,
    pub ext_xx: usize,
    pub ext_yy: usize,
    pub hom_xy: usize,
    pub hom_yx: usize,
    pub ext_yx: usize,
    /// dim Ext¹(x, y)
    pub m: usize,
    pub qualifies: bool,
}

/// Checks the orthogonality conditions Hom(X,Y) = Hom(Y,X) = 0 = Ext¹(Y,X),
/// self-extension vanishing, and m = dim Ext¹(X,Y) ≥ 3.
pub fn exceptional_pair_check(
    e: &EulerData,
    x: &Representation,
    y: &Representation,
) -> Result<PairReport> {
    let end_x = hom_basis(x, x)?.len();
    let end_y = hom_basis(y, y)?.len();
    let ext_xx = ext1_dim(e, x, x)?;
    let ext_yy = ext1_dim(e, y, y)?;
    let hom_xy = hom_basis(x, y)?.len();
    let hom_yx = hom_basis(y, x)?.len();
    let ext_yx = ext1_dim(e, y, x)?;
    let m = ext1_dim(e, x, y)?;
    let qualifies =
        hom_xy == 0 && hom_yx == 0 && ext_yx == 0 && ext_xx == 0 && ext_yy == 0 && m >= 3;
    Ok(PairReport {
        end_x,
        end_y,
        ext_xx,
        ext_yy,
        hom_xy,
        hom_yx,
        ext_yx,
        m,
        qualifies,
    })
}

pub fn pair_report_json(r: &PairReport) -> serde_json::Value {
    serde_json::json!({
        "end_x": r.end_x,
        "end_y": r.end_y,
        "ext_xx": r.ext_xx,
        "ext_yy": r.ext_yy,
        "hom_xy": r.hom_xy,
        "hom_yx": r.hom_yx,
        "ext_yx": r.ext_yx,
        "m": r.m,
        "qualifies": r.qualifies,
    })
}
