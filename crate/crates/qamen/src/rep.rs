//! Representations of acyclic quivers: construction, morphisms, hom spaces,
//! sub- and quotient objects, and Ext^1 dimensions.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{DimVector, EulerData, Quiver};
use crate::scalar::{FieldSpec, Scalar};
use std::sync::Arc;

/// A finite-dimensional representation: a vector space per vertex and a
/// linear map per arrow, acting on column vectors. The matrix for an arrow
/// has shape dims(target) x dims(source).
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub quiver: Arc<Quiver>,
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        quiver: Arc<Quiver>,
        field: FieldSpec,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Representation> {
        if dims.len() != quiver.num_vertices() || maps.len() != quiver.arrows.len() {
            return Err(Error::ShapeMismatch(
                "dims/maps must match vertex/arrow counts".into(),
            ));
        }
        for (a, m) in quiver.arrows.iter().zip(&maps) {
            if m.rows != dims[a.target] || m.cols != dims[a.source] {
                return Err(Error::ShapeMismatch(format!(
                    "arrow {} expects {}x{}, got {}x{}",
                    a.name, dims[a.target], dims[a.source], m.rows, m.cols
                )));
            }
            if m.field != field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Representation { quiver, field, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>, field: FieldSpec) -> Representation {
        let dims = vec![0; quiver.num_vertices()];
        let maps = quiver
            .arrows
            .iter()
            .map(|_| Matrix::zero(field, 0, 0))
            .collect();
        Representation { quiver, field, dims, maps }
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map_for(&self, arrow_name: &str) -> Result<&Matrix> {
        let idx = self.quiver.arrow_index(arrow_name)?;
        Ok(&self.maps[idx])
    }

    pub fn same_shape(&self, other: &Representation) -> Result<()> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dims: serde_json::Map<String, serde_json::Value> = self
            .quiver
            .vertices
            .iter()
            .zip(&self.dims)
            .map(|(v, &d)| (v.clone(), serde_json::json!(d)))
            .collect();
        let maps: serde_json::Map<String, serde_json::Value> = self
            .quiver
            .arrows
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| (a.name.clone(), serde_json::json!(m.to_string_rows())))
            .collect();
        serde_json::json!({
            "quiver": self.quiver.to_json(),
            "field": self.field,
            "dims": dims,
            "maps": maps,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Representation> {
        let quiver = Arc::new(Quiver::from_json(
            v.get("quiver").ok_or_else(|| Error::Parse("missing quiver".into()))?,
        )?);
        let field: FieldSpec = serde_json::from_value(
            v.get("field").ok_or_else(|| Error::Parse("missing field".into()))?.clone(),
        )
        .map_err(|e| Error::Parse(e.to_string()))?;
        let dims_obj = v
            .get("dims")
            .and_then(|d| d.as_object())
            .ok_or_else(|| Error::Parse("missing dims".into()))?;
        let mut dims = vec![0usize; quiver.num_vertices()];
        for (label, dv) in dims_obj {
            let i = quiver.vertex_index(label)?;
            dims[i] = dv
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("bad dim for {label}")))?
                as usize;
        }
        let maps_obj = v
            .get("maps")
            .and_then(|m| m.as_object())
            .ok_or_else(|| Error::Parse("missing maps".into()))?;
        let mut maps = Vec::new();
        for a in &quiver.arrows {
            let rows = maps_obj
                .get(&a.name)
                .ok_or_else(|| Error::Parse(format!("missing map for arrow {}", a.name)))?;
            let rows: Vec<Vec<String>> = serde_json::from_value(rows.clone())
                .map_err(|e| Error::Parse(e.to_string()))?;
            maps.push(Matrix::from_string_rows(
                field,
                dims[a.target],
                dims[a.source],
                &rows,
            )?);
        }
        Representation::new(quiver, field, dims, maps)
    }
}

/// Enumerates all paths starting at `from` (including the lazy path) in DFS
/// order, following arrows in declaration order. A path is the list of arrow
/// indices traversed; paired with its endpoint.
fn paths_from(quiver: &Quiver, from: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), from)];
    // explicit stack; children pushed in reverse arrow order to mimic
    // recursive DFS order
    while let Some((path, at)) = stack.pop() {
        out.push((path.clone(), at));
        for (i, a) in quiver.arrows.iter().enumerate().rev() {
            if a.source == at {
                let mut next = path.clone();
                next.push(i);
                stack.push((next, a.target));
            }
        }
    }
    out
}

/// All paths ending at `to`, as (arrow indices in traversal order, start
/// vertex), in DFS order walking arrows backwards.
fn paths_into(quiver: &Quiver, to: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), to)];
    while let Some((path, at)) = stack.pop() {
        out.push((path.clone(), at));
        for (i, a) in quiver.arrows.iter().enumerate().rev() {
            if a.target == at {
                let mut next = vec![i];
                next.extend(path.iter().copied());
                stack.push((next, a.source));
            }
        }
    }
    out
}

/// The indecomposable projective P(i): basis at vertex j is the set of paths
/// i -> j; arrows act by path composition.
pub fn make_projective(quiver: &Arc<Quiver>, field: FieldSpec, vertex: usize) -> Result<Representation> {
    if vertex >= quiver.num_vertices() {
        return Err(Error::VertexUnknown(format!("index {vertex}")));
    }
    let paths = paths_from(quiver, vertex);
    let n = quiver.num_vertices();
    // per-vertex list of path positions
    let mut basis: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, (_, end)) in paths.iter().enumerate() {
        basis[*end].push(idx);
    }
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let maps = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zero(field, dims[a.target], dims[a.source]);
            for (col, &pidx) in basis[a.source].iter().enumerate() {
                let mut extended = paths[pidx].0.clone();
                extended.push(ai);
                let row = basis[a.target]
                    .iter()
                    .position(|&q| paths[q].0 == extended)
                    .expect("extended path present");
                m.set(row, col, field.one());
            }
            m
        })
        .collect();
    Representation::new(quiver.clone(), field, dims, maps)
}

/// The indecomposable injective I(i): basis at vertex j is the set of paths
/// j -> i; an arrow a maps a path p to the path q with p = q after a, when
/// p starts with a.
pub fn make_injective(quiver: &Arc<Quiver>, field: FieldSpec, vertex: usize) -> Result<Representation> {
    if vertex >= quiver.num_vertices() {
        return Err(Error::VertexUnknown(format!("index {vertex}")));
    }
    let paths = paths_into(quiver, vertex);
    let n = quiver.num_vertices();
    let mut basis: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, (_, start)) in paths.iter().enumerate() {
        basis[*start].push(idx);
    }
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let maps = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zero(field, dims[a.target], dims[a.source]);
            for (col, &pidx) in basis[a.source].iter().enumerate() {
                let p = &paths[pidx].0;
                if p.first() == Some(&ai) {
                    let tail: Vec<usize> = p[1..].to_vec();
                    let row = basis[a.target]
                        .iter()
                        .position(|&q| paths[q].0 == tail)
                        .expect("truncated path present");
                    m.set(row, col, field.one());
                }
            }
            m
        })
        .collect();
    Representation::new(quiver.clone(), field, dims, maps)
}

/// The simple S(i): one-dimensional at i, zero elsewhere.
pub fn make_simple(quiver: &Arc<Quiver>, field: FieldSpec, vertex: usize) -> Result<Representation> {
    if vertex >= quiver.num_vertices() {
        return Err(Error::VertexUnknown(format!("index {vertex}")));
    }
    let n = quiver.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| (v == vertex) as usize).collect();
    let maps = quiver
        .arrows
        .iter()
        .map(|a| Matrix::zero(field, dims[a.target], dims[a.source]))
        .collect();
    Representation::new(quiver.clone(), field, dims, maps)
}

/// A morphism of representations; the intertwining relations are re-verified
/// at construction.
#[derive(Debug, Clone)]
pub struct Morphism {
    pub source: Representation,
    pub target: Representation,
    pub components: Vec<Matrix>,
}

impl Morphism {
    pub fn new(
        source: Representation,
        target: Representation,
        components: Vec<Matrix>,
    ) -> Result<Morphism> {
        source.same_shape(&target)?;
        let n = source.quiver.num_vertices();
        if components.len() != n {
            return Err(Error::ShapeMismatch("one component per vertex".into()));
        }
        for v in 0..n {
            let c = &components[v];
            if c.rows != target.dims[v] || c.cols != source.dims[v] {
                return Err(Error::ShapeMismatch(format!(
                    "component at vertex {v}: expected {}x{}, got {}x{}",
                    target.dims[v], source.dims[v], c.rows, c.cols
                )));
            }
        }
        for (ai, a) in source.quiver.arrows.iter().enumerate() {
            let lhs = components[a.target].mul(&source.maps[ai]);
            let rhs = target.maps[ai].mul(&components[a.source]);
            if lhs != rhs {
                return Err(Error::ShapeMismatch(format!(
                    "intertwining fails at arrow {}",
                    a.name
                )));
            }
        }
        Ok(Morphism { source, target, components })
    }

    pub fn identity(rep: &Representation) -> Morphism {
        let components = rep
            .dims
            .iter()
            .map(|&d| Matrix::identity(rep.field, d))
            .collect();
        Morphism {
            source: rep.clone(),
            target: rep.clone(),
            components,
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Result<Morphism> {
        source.same_shape(target)?;
        let components = (0..source.quiver.num_vertices())
            .map(|v| Matrix::zero(source.field, target.dims[v], source.dims[v]))
            .collect();
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            components,
        })
    }

    /// other after self (self: A -> B, other: B -> C).
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if self.target != other.source {
            return Err(Error::ShapeMismatch("composition endpoints differ".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(f, g)| g.mul(f))
            .collect();
        Morphism::new(self.source.clone(), other.target.clone(), components)
    }

    pub fn is_iso(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.rows == c.cols && c.rank() == c.rows)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let components: Option<Vec<Matrix>> =
            self.components.iter().map(|c| c.inverse()).collect();
        Some(Morphism {
            source: self.target.clone(),
            target: self.source.clone(),
            components: components?,
        })
    }
}

/// Basis of Hom(m, n): solves the intertwining system
/// { f_{t(a)} M_a = N_a f_{s(a)} } for all arrows a.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    m.same_shape(n)?;
    let f = m.field;
    let nv = m.quiver.num_vertices();
    // variable layout: per vertex, the entries of f_v row-major
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let num_vars = offsets[nv];
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims[v] + c;

    let num_eqs: usize = m
        .quiver
        .arrows
        .iter()
        .map(|a| n.dims[a.target] * m.dims[a.source])
        .sum();
    let mut system = Matrix::zero(f, num_eqs, num_vars);
    let mut eq = 0usize;
    for (ai, a) in m.quiver.arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                // sum_k N_a[r,k] f_s[k,c] - sum_k f_t[r,k] M_a[k,c] = 0
                for k in 0..n.dims[s] {
                    let coeff = n.maps[ai].get(r, k).clone();
                    if !coeff.is_zero() {
                        let j = var(s, k, c);
                        system.set(eq, j, system.get(eq, j).add(&coeff));
                    }
                }
                for k in 0..m.dims[t] {
                    let coeff = m.maps[ai].get(k, c).neg();
                    if !coeff.is_zero() {
                        let j = var(t, r, k);
                        system.set(eq, j, system.get(eq, j).add(&coeff));
                    }
                }
                eq += 1;
            }
        }
    }
    debug_assert_eq!(eq, num_eqs);
    let kernel = system.kernel_basis();
    kernel
        .into_iter()
        .map(|vecb| {
            let components = (0..nv)
                .map(|v| {
                    Matrix::from_fn(f, n.dims[v], m.dims[v], |r, c| {
                        vecb[var(v, r, c)].clone()
                    })
                })
                .collect();
            Morphism::new(m.clone(), n.clone(), components)
        })
        .collect()
}

/// dim Ext^1(m, n) for a hereditary path algebra:
/// dim Hom(m, n) - <dimv m, dimv n>.
pub fn ext1_dim(e: &EulerData, m: &Representation, n: &Representation) -> Result<usize> {
    m.same_shape(n)?;
    let hom = hom_basis(m, n)?.len() as i64;
    let pairing = e.euler_form(&m.dim_vector(), &n.dim_vector())?;
    let ext = hom - pairing;
    debug_assert!(ext >= 0, "hereditary Ext^1 cannot be negative");
    Ok(ext as usize)
}

/// True iff Hom(t, m) = 0 and Ext^1(t, m) = 0.
pub fn in_perp(e: &EulerData, t: &Representation, m: &Representation) -> Result<bool> {
    let hom = hom_basis(t, m)?.len();
    if hom != 0 {
        return Ok(false);
    }
    Ok(ext1_dim(e, t, m)? == 0)
}

/// Validates that a per-vertex basis family cuts out a subrepresentation of
/// `ambient`: right shapes, independent columns, and arrow stability.
pub fn check_subrep_basis(ambient: &Representation, basis: &[Matrix]) -> Result<()> {
    let n = ambient.quiver.num_vertices();
    if basis.len() != n {
        return Err(Error::ShapeMismatch("one basis matrix per vertex".into()));
    }
    for v in 0..n {
        let b = &basis[v];
        if b.rows != ambient.dims[v] || b.field != ambient.field {
            return Err(Error::ShapeMismatch(format!(
                "basis at vertex {v} must have {} rows",
                ambient.dims[v]
            )));
        }
        if b.rank() != b.cols {
            return Err(Error::NotSubrep(format!(
                "basis vectors at vertex {v} are dependent"
            )));
        }
    }
    for (ai, a) in ambient.quiver.arrows.iter().enumerate() {
        let image = ambient.maps[ai].mul(&basis[a.source]);
        if !basis[a.target].contains_columns(&image) {
            return Err(Error::NotSubrep(format!(
                "arrow {} leaves the subspace family",
                ambient.quiver.arrows[ai].name
            )));
        }
    }
    Ok(())
}

/// Arrow-stable family of subspaces of an ambient representation, given by a
/// basis matrix per vertex (columns independent).
#[derive(Debug, Clone)]
pub struct Subrepresentation {
    pub ambient: Representation,
    pub basis: Vec<Matrix>,
}

impl Subrepresentation {
    pub fn new(ambient: Representation, basis: Vec<Matrix>) -> Result<Subrepresentation> {
        check_subrep_basis(&ambient, &basis)?;
        Ok(Subrepresentation { ambient, basis })
    }

    pub fn zero(ambient: &Representation) -> Subrepresentation {
        let basis = ambient
            .dims
            .iter()
            .map(|&d| Matrix::zero(ambient.field, d, 0))
            .collect();
        Subrepresentation {
            ambient: ambient.clone(),
            basis,
        }
    }

    pub fn full(ambient: &Representation) -> Subrepresentation {
        let basis = ambient
            .dims
            .iter()
            .map(|&d| Matrix::identity(ambient.field, d))
            .collect();
        Subrepresentation {
            ambient: ambient.clone(),
            basis,
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.cols).collect()
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.basis.iter().map(|b| b.cols as i64).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.basis.iter().map(|b| b.cols).sum()
    }

    /// The subrepresentation in its own coordinates, with its inclusion into
    /// the ambient.
    pub fn induced(&self) -> Result<(Representation, Morphism)> {
        let amb = &self.ambient;
        let dims = self.dims();
        let maps = amb
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let image = amb.maps[ai].mul(&self.basis[a.source]);
                self.basis[a.target]
                    .solve(&image)
                    .expect("stability was checked")
            })
            .collect();
        let rep = Representation::new(amb.quiver.clone(), amb.field, dims, maps)?;
        let inc = Morphism::new(rep.clone(), amb.clone(), self.basis.clone())?;
        Ok((rep, inc))
    }
}

/// Smallest subrepresentation of m containing the given vectors, computed by
/// closure under the arrow maps.
pub fn sub_generated(
    m: &Representation,
    generators: &[(usize, Vec<Scalar>)],
) -> Result<Subrepresentation> {
    let n = m.quiver.num_vertices();
    let mut columns: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n];
    for (v, vecv) in generators {
        if *v >= n || vecv.len() != m.dims[*v] {
            return Err(Error::ShapeMismatch(format!(
                "generator at vertex {v} has wrong length"
            )));
        }
        columns[*v].push(vecv.clone());
    }
    let reduce = |cols: &Vec<Vec<Scalar>>, rows: usize| -> Matrix {
        if cols.is_empty() {
            return Matrix::zero(m.field, rows, 0);
        }
        Matrix::from_columns(m.field, rows, cols).column_space_basis()
    };
    let mut basis: Vec<Matrix> = (0..n).map(|v| reduce(&columns[v], m.dims[v])).collect();
    loop {
        let mut changed = false;
        for (ai, a) in m.quiver.arrows.iter().enumerate() {
            let image = m.maps[ai].mul(&basis[a.source]);
            if !basis[a.target].contains_columns(&image) {
                let merged = basis[a.target].hstack(&image).column_space_basis();
                basis[a.target] = merged;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Subrepresentation::new(m.clone(), basis)
}

/// Per-vertex complement coordinates for a subrepresentation: the standard
/// basis vectors completing each basis matrix to a full basis, plus the
/// projection onto those coordinates in the completed basis.
fn complement_data(s: &Subrepresentation) -> Vec<(Matrix, Matrix)> {
    let amb = &s.ambient;
    let f = amb.field;
    (0..amb.quiver.num_vertices())
        .map(|v| {
            let d = amb.dims[v];
            let k = s.basis[v].cols;
            let aug = s.basis[v].hstack(&Matrix::identity(f, d));
            let mut reduced = aug.clone();
            let pivots = reduced.rref_in_place();
            // pivots beyond the basis block pick the complementary standard
            // basis vectors
            let comp_cols: Vec<usize> = pivots
                .iter()
                .filter(|&&c| c >= k)
                .map(|&c| c - k)
                .collect();
            let comp = Matrix::from_fn(f, d, comp_cols.len(), |r, c| {
                if r == comp_cols[c] { f.one() } else { f.zero() }
            });
            let full = s.basis[v].hstack(&comp);
            let inv = full.inverse().expect("completed basis is invertible");
            // last d-k rows of the inverse give coordinates along the
            // complement
            let proj = Matrix::from_fn(f, d - k, d, |r, c| inv.get(k + r, c).clone());
            (comp, proj)
        })
        .collect()
}

/// Quotient representation m / s; dims are per-vertex codimensions.
pub fn quotient(m: &Representation, s: &Subrepresentation) -> Result<Representation> {
    if &s.ambient != m {
        return Err(Error::NotSubrep("subrepresentation of a different module".into()));
    }
    let data = complement_data(s);
    let dims: Vec<usize> = (0..m.quiver.num_vertices())
        .map(|v| m.dims[v] - s.basis[v].cols)
        .collect();
    let maps = m
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| data[a.target].1.mul(&m.maps[ai]).mul(&data[a.source].0))
        .collect();
    Representation::new(m.quiver.clone(), m.field, dims, maps)
}

/// Kernel of a morphism as a subrepresentation of its source.
pub fn kernel(f: &Morphism) -> Subrepresentation {
    let field = f.source.field;
    let basis = f
        .components
        .iter()
        .enumerate()
        .map(|(v, c)| {
            let cols = c.kernel_basis();
            if cols.is_empty() {
                Matrix::zero(field, f.source.dims[v], 0)
            } else {
                Matrix::from_columns(field, f.source.dims[v], &cols)
            }
        })
        .collect();
    Subrepresentation::new(f.source.clone(), basis).expect("kernel is arrow-stable")
}

/// Image of a morphism as a subrepresentation of its target.
pub fn image(f: &Morphism) -> Subrepresentation {
    let basis = f.components.iter().map(|c| c.column_space_basis()).collect();
    Subrepresentation::new(f.target.clone(), basis).expect("image is arrow-stable")
}

/// Direct sum with the canonical inclusion morphisms.
pub fn direct_sum(parts: &[Representation]) -> Result<(Representation, Vec<Morphism>)> {
    let (quiver, field) = match parts.first() {
        Some(p) => (p.quiver.clone(), p.field),
        None => {
            return Err(Error::InvalidInput(
                "direct_sum of an empty list needs a quiver; use Representation::zero".into(),
            ))
        }
    };
    for p in parts {
        parts[0].same_shape(p)?;
    }
    let n = quiver.num_vertices();
    let dims: Vec<usize> = (0..n)
        .map(|v| parts.iter().map(|p| p.dims[v]).sum())
        .collect();
    let maps: Vec<Matrix> = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zero(field, dims[a.target], dims[a.source]);
            let mut row0 = 0;
            let mut col0 = 0;
            for p in parts {
                let block = &p.maps[ai];
                for r in 0..block.rows {
                    for c in 0..block.cols {
                        m.set(row0 + r, col0 + c, block.get(r, c).clone());
                    }
                }
                row0 += p.dims[a.target];
                col0 += p.dims[a.source];
            }
            m
        })
        .collect();
    let sum = Representation::new(quiver.clone(), field, dims.clone(), maps)?;
    let mut offsets = vec![vec![0usize; n]];
    for p in parts {
        let last = offsets.last().unwrap().clone();
        offsets.push((0..n).map(|v| last[v] + p.dims[v]).collect());
    }
    let inclusions = parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let components = (0..n)
                .map(|v| {
                    Matrix::from_fn(field, dims[v], p.dims[v], |r, c| {
                        if r == offsets[i][v] + c {
                            field.one()
                        } else {
                            field.zero()
                        }
                    })
                })
                .collect();
            Morphism::new(p.clone(), sum.clone(), components)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((sum, inclusions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::quiver::Quiver;
    use proptest::prelude::*;

    fn kron() -> Arc<Quiver> {
        Arc::new(Quiver::kronecker())
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    /// Pre(i): dims (i, i+1), maps [I; 0] and [0; I].
    fn pre_block(q: &Arc<Quiver>, f: FieldSpec, i: usize) -> Representation {
        let a = Matrix::from_fn(f, i + 1, i, |r, c| {
            if r == c { f.one() } else { f.zero() }
        });
        let b = Matrix::from_fn(f, i + 1, i, |r, c| {
            if r == c + 1 { f.one() } else { f.zero() }
        });
        Representation::new(q.clone(), f, vec![i, i + 1], vec![a, b]).unwrap()
    }

    #[test]
    fn projective_injective_simple_dims() {
        let q = kron();
        let f = gf(5);
        let p1 = make_projective(&q, f, 0).unwrap();
        assert_eq!(p1.dims, vec![1, 2]);
        let p2 = make_projective(&q, f, 1).unwrap();
        assert_eq!(p2.dims, vec![0, 1]);
        let i1 = make_injective(&q, f, 0).unwrap();
        assert_eq!(i1.dims, vec![1, 0]);
        let i2 = make_injective(&q, f, 1).unwrap();
        assert_eq!(i2.dims, vec![2, 1]);
        let s1 = make_simple(&q, f, 0).unwrap();
        assert_eq!(s1.dims, vec![1, 0]);
        assert!(make_projective(&q, f, 7).is_err());
    }

    #[test]
    fn projective_on_a_chain() {
        // 1 -> 2 -> 3: P(1) has one path to each vertex
        let q = Arc::new(
            Quiver::parse(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap(),
        );
        let f = FieldSpec::Rationals;
        let p = make_projective(&q, f, 0).unwrap();
        assert_eq!(p.dims, vec![1, 1, 1]);
        // composition of both arrow maps is the identity path action
        assert!(!p.maps[1].mul(&p.maps[0]).get(0, 0).is_zero());
        let i = make_injective(&q, f, 2).unwrap();
        assert_eq!(i.dims, vec![1, 1, 1]);
        assert!(!i.maps[1].mul(&i.maps[0]).get(0, 0).is_zero());
    }

    #[test]
    fn hom_examples() {
        let q = kron();
        let f = gf(5);
        let s1 = make_simple(&q, f, 0).unwrap();
        let s2 = make_simple(&q, f, 1).unwrap();
        assert_eq!(hom_basis(&s1, &s2).unwrap().len(), 0);

        let p1 = pre_block(&q, f, 1);
        let p2 = pre_block(&q, f, 2);
        assert_eq!(hom_basis(&p1, &p2).unwrap().len(), 2);

        // homogeneous regular R_1(lambda): A = [1], B = [0]; a brick
        let r = Representation::new(
            q.clone(),
            f,
            vec![1, 1],
            vec![Matrix::from_int_rows(f, &[vec![1]]), Matrix::from_int_rows(f, &[vec![0]])],
        )
        .unwrap();
        assert_eq!(hom_basis(&r, &r).unwrap().len(), 1);
    }

    #[test]
    fn ext_examples() {
        let q = kron();
        let f = gf(5);
        let e = EulerData::new(&q).unwrap();
        let s1 = make_simple(&q, f, 0).unwrap();
        let s2 = make_simple(&q, f, 1).unwrap();
        assert_eq!(ext1_dim(&e, &s1, &s2).unwrap(), 2);
        assert_eq!(ext1_dim(&e, &s2, &s1).unwrap(), 0);
    }

    #[test]
    fn in_perp_examples() {
        let q = kron();
        let f = gf(5);
        let e = EulerData::new(&q).unwrap();
        let r = Representation::new(
            q.clone(),
            f,
            vec![1, 1],
            vec![Matrix::from_int_rows(f, &[vec![1]]), Matrix::from_int_rows(f, &[vec![0]])],
        )
        .unwrap();
        let zero = Representation::zero(q.clone(), f);
        assert!(in_perp(&e, &r, &zero).unwrap());
        assert!(!in_perp(&e, &r, &r).unwrap());
        let s2 = make_simple(&q, f, 1).unwrap();
        assert!(!in_perp(&e, &r, &s2).unwrap());
    }

    #[test]
    fn sub_generated_examples() {
        let q = kron();
        let f = gf(5);
        let p2 = pre_block(&q, f, 2);
        let empty = sub_generated(&p2, &[]).unwrap();
        assert_eq!(empty.total_dim(), 0);

        let s = sub_generated(&p2, &[(0, vec![f.one(), f.zero()])]).unwrap();
        assert_eq!(s.dims(), vec![1, 2]);
        // the generated submodule is isomorphic to Pre(1), a brick
        let (induced, inc) = s.induced().unwrap();
        let homs = hom_basis(&pre_block(&q, f, 1), &induced).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(homs[0].is_iso());
        assert!(inc.components.iter().all(|c| c.rank() == c.cols));
    }

    #[test]
    fn sub_generated_regular_codim_one() {
        // R_n with companion matrix: generated by e_1..e_{n-1} at vertex 1
        // the result has total dimension 2n - 1
        let q = kron();
        let f = gf(5);
        let n = 4;
        let a = Matrix::identity(f, n);
        // companion of lambda^n (nilpotent shift)
        let b = Matrix::from_fn(f, n, n, |r, c| {
            if r == c + 1 { f.one() } else { f.zero() }
        });
        let rn = Representation::new(q.clone(), f, vec![n, n], vec![a, b]).unwrap();
        let gens: Vec<(usize, Vec<Scalar>)> = (0..n - 1)
            .map(|i| {
                (0, (0..n).map(|j| if j == i { f.one() } else { f.zero() }).collect())
            })
            .collect();
        let s = sub_generated(&rn, &gens).unwrap();
        assert_eq!(s.total_dim(), 2 * n - 1);
    }

    #[test]
    fn quotient_round_trip() {
        let q = kron();
        let f = gf(5);
        let p2 = pre_block(&q, f, 2);
        assert_eq!(quotient(&p2, &Subrepresentation::full(&p2)).unwrap().total_dim(), 0);
        assert_eq!(
            quotient(&p2, &Subrepresentation::zero(&p2)).unwrap().total_dim(),
            p2.total_dim()
        );
        let s = sub_generated(&p2, &[(0, vec![f.one(), f.zero()])]).unwrap();
        let quo = quotient(&p2, &s).unwrap();
        assert_eq!(quo.total_dim() + s.total_dim(), p2.total_dim());
        for v in 0..2 {
            assert_eq!(quo.dims[v] + s.dims()[v], p2.dims[v]);
        }
    }

    #[test]
    fn kernel_image_exactness() {
        let q = kron();
        let f = gf(5);
        let p1 = pre_block(&q, f, 1);
        let p2 = pre_block(&q, f, 2);
        let id = Morphism::identity(&p2);
        assert_eq!(kernel(&id).total_dim(), 0);
        let z = Morphism::zero(&p1, &p2).unwrap();
        assert_eq!(image(&z).total_dim(), 0);
        for h in hom_basis(&p1, &p2).unwrap() {
            assert_eq!(
                kernel(&h).total_dim() + image(&h).total_dim(),
                p1.total_dim()
            );
        }
    }

    #[test]
    fn kernel_of_projection_to_injective() {
        // theta: Q_i -> I(1) projecting the vertex-1 space onto one
        // coordinate; the kernel has dimension vector (i, i)
        let q = kron();
        let f = gf(5);
        let i = 3;
        // Inj(i): dims (i+1, i), maps [I 0] and [0 I]
        let a = Matrix::from_fn(f, i, i + 1, |r, c| {
            if r == c { f.one() } else { f.zero() }
        });
        let b = Matrix::from_fn(f, i, i + 1, |r, c| {
            if r + 1 == c { f.one() } else { f.zero() }
        });
        let qi = Representation::new(q.clone(), f, vec![i + 1, i], vec![a, b]).unwrap();
        let i1 = make_injective(&q, f, 0).unwrap();
        let theta = Morphism::new(
            qi.clone(),
            i1,
            vec![
                Matrix::from_fn(f, 1, i + 1, |_, c| {
                    if c == i { f.one() } else { f.zero() }
                }),
                Matrix::zero(f, 0, i),
            ],
        )
        .unwrap();
        assert_eq!(kernel(&theta).dims(), vec![i, i]);
    }

    #[test]
    fn direct_sum_blocks() {
        let q = kron();
        let f = gf(5);
        let s1 = make_simple(&q, f, 0).unwrap();
        let s2 = make_simple(&q, f, 1).unwrap();
        let (sum, incs) = direct_sum(&[s1, s2]).unwrap();
        assert_eq!(sum.dims, vec![1, 1]);
        assert!(sum.maps.iter().all(|m| m.rank() == 0));
        assert_eq!(incs.len(), 2);
        assert!(direct_sum(&[]).is_err());
    }

    #[test]
    fn representation_json_round_trip() {
        let q = kron();
        let f = gf(5);
        let p = pre_block(&q, f, 2);
        let json = p.to_json();
        let back = Representation::from_json(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn morphism_verification_rejects_bad_components() {
        let q = kron();
        let f = gf(5);
        let p1 = pre_block(&q, f, 1);
        let p2 = pre_block(&q, f, 2);
        // arbitrary full components almost surely violate intertwining
        let bad = Morphism::new(
            p1.clone(),
            p2.clone(),
            vec![
                Matrix::from_int_rows(f, &[vec![1], vec![1]]),
                Matrix::from_int_rows(f, &[vec![1, 0], vec![0, 1], vec![1, 1]]),
            ],
        );
        assert!(bad.is_err());
    }

    /// Random representation of the Kronecker quiver over GF(5).
    fn arb_kron_rep() -> impl Strategy<Value = Representation> {
        (1usize..4, 1usize..4).prop_flat_map(|(d1, d2)| {
            let entries = proptest::collection::vec(0i64..5, 2 * d1 * d2);
            entries.prop_map(move |es| {
                let q = kron();
                let f = gf(5);
                let a = Matrix::from_fn(f, d2, d1, |r, c| f.from_int(es[r * d1 + c]));
                let b = Matrix::from_fn(f, d2, d1, |r, c| {
                    f.from_int(es[d1 * d2 + r * d1 + c])
                });
                Representation::new(q, f, vec![d1, d2], vec![a, b]).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn hom_euler_identity(m in arb_kron_rep(), n in arb_kron_rep()) {
            let e = EulerData::new(&m.quiver).unwrap();
            let hom = hom_basis(&m, &n).unwrap().len() as i64;
            let ext = ext1_dim(&e, &m, &n).unwrap() as i64;
            let pairing = e.euler_form(&m.dim_vector(), &n.dim_vector()).unwrap();
            prop_assert_eq!(hom - ext, pairing);
        }

        #[test]
        fn hom_closed_under_composition(m in arb_kron_rep(), n in arb_kron_rep()) {
            let mn = hom_basis(&m, &n).unwrap();
            let nm = hom_basis(&n, &m).unwrap();
            for f in mn.iter().take(2) {
                for g in nm.iter().take(2) {
                    // Morphism::new re-verifies intertwining
                    prop_assert!(f.then(g).is_ok());
                }
            }
        }

        #[test]
        fn exactness_for_random_morphisms(m in arb_kron_rep(), n in arb_kron_rep()) {
            for h in hom_basis(&m, &n).unwrap().iter().take(3) {
                let k = kernel(h).total_dim();
                let im = image(h).total_dim();
                prop_assert_eq!(k + im, m.total_dim());
            }
        }
    }
}
