//! Exact polynomials, companion matrices, and factorization over prime fields.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use std::cmp::Ordering;
use std::fmt;

/// Dense polynomial, coefficients lowest degree first. The zero polynomial is
/// the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Poly {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: FieldSpec) -> Poly {
        Poly::new(field, vec![field.one()])
    }

    pub fn constant(c: Scalar) -> Poly {
        let field = c.field();
        Poly::new(field, vec![c])
    }

    /// The monomial x.
    pub fn x(field: FieldSpec) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// x - c.
    pub fn x_minus(c: &Scalar) -> Poly {
        let field = c.field();
        Poly::new(field, vec![c.neg(), field.one()])
    }

    pub fn from_ints(field: FieldSpec, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::new(self.field, coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut r = Poly::one(self.field);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Euclidean division: (quotient, remainder).
    pub fn divmod(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.deg();
        let lead_inv = divisor.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() >= dd + 1 {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().mul(&lead_inv);
            if !factor.is_zero() {
                quot[k] = factor.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&factor.mul(c));
                }
            }
            rem.pop();
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divmod(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Normalizes to the monic associate (zero stays zero).
    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field);
        }
        Poly::new(
            self.field,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&self.field.from_int((i + 1) as i64)))
                .collect(),
        )
    }

    /// self^e mod m by binary exponentiation.
    pub fn powmod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut result = Poly::one(self.field).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        result
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Companion matrix: subdiagonal ones, last column the negated
    /// coefficients. Characteristic polynomial equals `self`.
    pub fn companion(&self) -> Result<Matrix> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = self.deg();
        if n == 0 {
            return Err(Error::InvalidInput("companion of a constant".into()));
        }
        let mut m = Matrix::zero(self.field, n, n);
        for i in 1..n {
            m.set(i, i - 1, self.field.one());
        }
        for i in 0..n {
            m.set(i, n - 1, self.coeff(i).neg());
        }
        Ok(m)
    }

    /// Total ordering used for deterministic factor lists: degree first, then
    /// coefficients from the top down.
    pub fn cmp_canonical(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| {
                for i in (0..self.coeffs.len()).rev() {
                    let o = scalar_key(&self.coeffs[i]).cmp(&scalar_key(&other.coeffs[i]));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

fn scalar_key(s: &Scalar) -> (num::BigInt, num::BigInt) {
    match s {
        Scalar::Fp { value, .. } => (num::BigInt::from(*value), num::BigInt::from(1)),
        Scalar::Rat(r) => (r.numer().clone(), r.denom().clone()),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if c.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Factors a monic polynomial over a prime field into irreducible powers,
/// deterministically ordered (degree, then coefficients).
///
/// Squarefree split, then distinct-degree, then equal-degree with
/// deterministically enumerated splitting candidates.
pub fn factor_monic(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let q = match p.field {
        FieldSpec::PrimeField(q) => q,
        FieldSpec::Rationals => {
            return Err(Error::UnsupportedField(
                "polynomial factorization is only available over prime fields".into(),
            ))
        }
    };
    let mut factors: Vec<(Poly, usize)> = Vec::new();
    squarefree_decompose(p, q, 1, &mut factors)?;
    // merge duplicates and sort canonically
    factors.sort_by(|a, b| a.0.cmp_canonical(&b.0));
    let mut merged: Vec<(Poly, usize)> = Vec::new();
    for (f, e) in factors {
        match merged.last_mut() {
            Some((g, ge)) if *g == f => *ge += e,
            _ => merged.push((f, e)),
        }
    }
    Ok(merged)
}

/// Splits into squarefree parts with multiplicities and factors each.
fn squarefree_decompose(p: &Poly, q: u64, mult: usize, out: &mut Vec<(Poly, usize)>) -> Result<()> {
    if p.deg() == 0 {
        return Ok(());
    }
    let d = p.derivative();
    if d.is_zero() {
        // p = g(x^q); take the q-th root (coefficients are fixed by Frobenius)
        let mut root = Vec::new();
        for i in (0..p.coeffs().len()).step_by(q as usize) {
            root.push(p.coeff(i));
        }
        let g = Poly::new(p.field, root);
        return squarefree_decompose(&g, q, mult * q as usize, out);
    }
    let g = p.gcd(&d);
    let squarefree = p.divmod(&g).0.make_monic();
    for f in factor_squarefree(&squarefree, q) {
        out.push((f, mult));
    }
    if g.deg() > 0 {
        squarefree_decompose(&g, q, mult, out)?;
    }
    Ok(())
}

/// Distinct-degree then equal-degree factorization of a squarefree monic.
fn factor_squarefree(p: &Poly, q: u64) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut rest = p.clone();
    let x = Poly::x(p.field);
    let mut xq = x.clone(); // x^(q^d) mod rest, updated per degree
    let mut d = 0usize;
    while rest.deg() > 0 {
        d += 1;
        if rest.deg() < 2 * d {
            out.push(rest.make_monic());
            break;
        }
        xq = xq.powmod(q as u128, &rest);
        let g = rest.gcd(&xq.sub(&x));
        if g.deg() > 0 {
            equal_degree_split(&g, d, q, &mut out);
            rest = rest.divmod(&g).0.make_monic();
            xq = xq.rem(&rest);
        }
    }
    out
}

/// Splits a product of distinct irreducibles of known degree `d`.
/// Candidates are enumerated deterministically rather than sampled.
fn equal_degree_split(p: &Poly, d: usize, q: u64, out: &mut Vec<Poly>) {
    if p.deg() == d {
        out.push(p.make_monic());
        return;
    }
    for candidate in candidate_polys(p.field, p.deg()) {
        let g = if q == 2 {
            // trace map over GF(2): r + r^2 + ... + r^(2^(d-1))
            let mut trace = Poly::zero(p.field);
            let mut term = candidate.rem(p);
            for _ in 0..d {
                trace = trace.add(&term).rem(p);
                term = term.mul(&term).rem(p);
            }
            p.gcd(&trace)
        } else {
            let e = (pow_u128(q as u128, d as u32) - 1) / 2;
            let r = candidate.powmod(e, p);
            p.gcd(&r.sub(&Poly::one(p.field)))
        };
        if g.deg() > 0 && g.deg() < p.deg() {
            equal_degree_split(&g, d, q, out);
            equal_degree_split(&p.divmod(&g).0.make_monic(), d, q, out);
            return;
        }
    }
    unreachable!("equal-degree split exhausted its candidate space");
}

fn pow_u128(base: u128, e: u32) -> u128 {
    base.checked_pow(e).expect("prime power overflow")
}

/// All monic non-constant polynomials of degree < bound, smallest first.
fn candidate_polys(field: FieldSpec, bound: usize) -> impl Iterator<Item = Poly> {
    let q = match field {
        FieldSpec::PrimeField(q) => q,
        _ => unreachable!(),
    };
    (1..bound).flat_map(move |deg| {
        let count = pow_u128(q as u128, deg as u32);
        (0..count).map(move |code| {
            let mut coeffs = Vec::with_capacity(deg + 1);
            let mut c = code;
            for _ in 0..deg {
                coeffs.push(field.from_int((c % q as u128) as i64));
                c /= q as u128;
            }
            coeffs.push(field.one());
            Poly::new(field, coeffs)
        })
    })
}

/// All monic irreducibles of a given degree, canonically ordered.
pub fn monic_irreducibles(field: FieldSpec, degree: usize) -> Result<Vec<Poly>> {
    let q = match field {
        FieldSpec::PrimeField(q) => q,
        FieldSpec::Rationals => {
            return Err(Error::UnsupportedField("irreducible enumeration needs a prime field".into()))
        }
    };
    let count = pow_u128(q as u128, degree as u32);
    let mut out = Vec::new();
    for code in 0..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut c = code;
        for _ in 0..degree {
            coeffs.push(field.from_int((c % q as u128) as i64));
            c /= q as u128;
        }
        coeffs.push(field.one());
        let p = Poly::new(field, coeffs);
        if is_irreducible(&p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Irreducibility over a prime field via the factorization machinery.
pub fn is_irreducible(p: &Poly) -> Result<bool> {
    if p.is_zero() || p.deg() == 0 {
        return Ok(false);
    }
    let f = factor_monic(&p.make_monic())?;
    Ok(f.len() == 1 && f[0].1 == 1)
}

/// Characteristic polynomial of a square matrix, monic, via Hessenberg
/// reduction (works over any exact field).
pub fn char_poly(m: &Matrix) -> Poly {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let field = m.field;
    if n == 0 {
        return Poly::one(field);
    }
    // reduce to upper Hessenberg by exact similarity transforms
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        // find a nonzero pivot below the subdiagonal
        let pivot = (col + 1..n).find(|&r| !h.get(r, col).is_zero());
        let Some(pr) = pivot else { continue };
        if pr != col + 1 {
            swap_sym(&mut h, pr, col + 1);
        }
        let inv = h.get(col + 1, col).inv();
        for r in col + 2..n {
            if h.get(r, col).is_zero() {
                continue;
            }
            let factor = h.get(r, col).mul(&inv);
            // row r -= factor * row col+1 ; col col+1 += factor * col r
            for j in 0..n {
                let v = h.get(r, j).sub(&factor.mul(h.get(col + 1, j)));
                h.set(r, j, v);
            }
            for i in 0..n {
                let v = h.get(i, col + 1).add(&factor.mul(h.get(i, r)));
                h.set(i, col + 1, v);
            }
        }
    }
    // char polys of leading principal Hessenberg blocks by recurrence
    let mut polys: Vec<Poly> = vec![Poly::one(field)];
    for k in 1..=n {
        // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_{i} h[i-1][k-1] * (prod subdiag) p_{i-1}
        let mut p = Poly::x_minus(h.get(k - 1, k - 1)).mul(&polys[k - 1]);
        let mut beta = field.one();
        for i in (1..k).rev() {
            beta = beta.mul(h.get(i, i - 1));
            if beta.is_zero() {
                break;
            }
            let term = polys[i - 1].scale(&beta.mul(h.get(i - 1, k - 1)));
            p = p.sub(&term);
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

fn swap_sym(h: &mut Matrix, a: usize, b: usize) {
    let n = h.rows;
    for j in 0..n {
        let x = h.get(a, j).clone();
        let y = h.get(b, j).clone();
        h.set(a, j, y);
        h.set(b, j, x);
    }
    for i in 0..n {
        let x = h.get(i, a).clone();
        let y = h.get(i, b).clone();
        h.set(i, a, y);
        h.set(i, b, x);
    }
}

/// Minimal polynomial of a square matrix: the lowest-degree monic dependency
/// among I, M, M^2, ...
pub fn min_poly(m: &Matrix) -> Poly {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let field = m.field;
    if n == 0 {
        return Poly::one(field);
    }
    // lcm over the standard basis vectors of the minimal polynomial of each
    // Krylov sequence; the lcm annihilates everything, and anything that
    // annihilates everything is divisible by each factor
    let mut result = Poly::one(field);
    for k in 0..n {
        if result.deg() == n {
            break;
        }
        let p_k = krylov_min_poly(m, k);
        let g = result.gcd(&p_k);
        result = result.mul(&p_k).divmod(&g).0.make_monic();
    }
    result
}

/// Monic polynomial of least degree with p(m)·e_k = 0, found by reducing the
/// Krylov sequence e_k, m·e_k, … against an incremental echelon basis while
/// tracking how each reduced vector is written in the power sequence.
fn krylov_min_poly(m: &Matrix, k: usize) -> Poly {
    let n = m.rows;
    let field = m.field;
    // (reduced vector with unit pivot, pivot row, expression in powers)
    let mut echelon: Vec<(Vec<Scalar>, usize, Vec<Scalar>)> = Vec::new();
    let mut v = Matrix::from_fn(field, n, 1, |r, _| {
        if r == k { field.one() } else { field.zero() }
    });
    for t in 0..=n {
        let mut w: Vec<Scalar> = (0..n).map(|r| v.get(r, 0).clone()).collect();
        let mut expr = vec![field.zero(); t + 1];
        expr[t] = field.one();
        // stored vectors were reduced against their predecessors at
        // insertion, so one ordered pass eliminates every stored pivot
        for (r, piv, rexpr) in &echelon {
            if w[*piv].is_zero() {
                continue;
            }
            let f = w[*piv].clone();
            for i in 0..n {
                if !r[i].is_zero() {
                    w[i] = w[i].sub(&f.mul(&r[i]));
                }
            }
            for (i, c) in rexpr.iter().enumerate() {
                if !c.is_zero() {
                    expr[i] = expr[i].sub(&f.mul(c));
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(piv) => {
                let inv = w[piv].inv();
                for x in w.iter_mut() {
                    *x = x.mul(&inv);
                }
                for c in expr.iter_mut() {
                    *c = c.mul(&inv);
                }
                echelon.push((w, piv, expr));
                v = m.mul(&v);
            }
            // the reductions only touch positions below t, so expr is monic
            // of degree t and expresses the dependency exactly
            None => return Poly::new(field, expr),
        }
    }
    unreachable!("a Krylov sequence in dimension n is dependent by step n");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    #[test]
    fn companion_examples() {
        let q = FieldSpec::Rationals;
        // x^2 -> [[0,0],[1,0]]
        let c = Poly::from_ints(q, &[0, 0, 1]).companion().unwrap();
        assert_eq!(c, Matrix::from_int_rows(q, &[vec![0, 0], vec![1, 0]]));
        // x - c -> [c]
        let c = Poly::from_ints(q, &[-5, 1]).companion().unwrap();
        assert_eq!(c, Matrix::from_int_rows(q, &[vec![5]]));
        // x^2+x+1 over GF(2) -> [[0,1],[1,1]]
        let f = gf(2);
        let c = Poly::from_ints(f, &[1, 1, 1]).companion().unwrap();
        assert_eq!(c, Matrix::from_int_rows(f, &[vec![0, 1], vec![1, 1]]));
        // not monic
        assert_eq!(Poly::from_ints(q, &[1, 2]).companion(), Err(Error::NotMonic));
    }

    #[test]
    fn companion_char_poly_round_trip() {
        let q = FieldSpec::Rationals;
        for coeffs in [vec![2, -3, 1], vec![1, 0, 0, 1], vec![-1, 2, -3, 4, 1], vec![0, 1, 2, 3, 4, 5, 1]] {
            let p = Poly::from_ints(q, &coeffs);
            let c = p.companion().unwrap();
            assert_eq!(char_poly(&c), p, "char poly of companion of {p}");
        }
    }

    #[test]
    fn factor_examples() {
        let f = gf(2);
        // x^2 + x = x(x+1)
        let p = Poly::from_ints(f, &[0, 1, 1]);
        let fac = factor_monic(&p).unwrap();
        assert_eq!(
            fac,
            vec![
                (Poly::from_ints(f, &[0, 1]), 1),
                (Poly::from_ints(f, &[1, 1]), 1),
            ]
        );
        // (x^2+x+1)^2 = x^4 + x^2 + 1 over GF(2)
        let p = Poly::from_ints(f, &[1, 0, 1, 0, 1]);
        let fac = factor_monic(&p).unwrap();
        assert_eq!(fac, vec![(Poly::from_ints(f, &[1, 1, 1]), 2)]);
        // x^4 + x = x(x+1)(x^2+x+1)
        let p = Poly::from_ints(f, &[0, 1, 0, 0, 1]);
        let fac = factor_monic(&p).unwrap();
        assert_eq!(
            fac,
            vec![
                (Poly::from_ints(f, &[0, 1]), 1),
                (Poly::from_ints(f, &[1, 1]), 1),
                (Poly::from_ints(f, &[1, 1, 1]), 1),
            ]
        );
    }

    #[test]
    fn factor_remultiplies() {
        for p in [2u64, 3, 5] {
            let f = gf(p);
            // a fixed bag of polynomials incl. repeated and inseparable-looking parts
            let polys = [
                Poly::from_ints(f, &[1, 2, 3, 1]),
                Poly::from_ints(f, &[0, 0, 1, 0, 0, 1]),
                Poly::from_ints(f, &[2, 0, 0, 0, 1]),
                Poly::from_ints(f, &[1, 1, 1, 1, 1, 1, 1, 1, 1]),
            ];
            for p in polys {
                let p = p.make_monic();
                if p.is_zero() || p.deg() == 0 {
                    continue;
                }
                let fac = factor_monic(&p).unwrap();
                let mut prod = Poly::one(f);
                for (g, e) in &fac {
                    assert!(is_irreducible(g).unwrap(), "factor {g} not irreducible");
                    prod = prod.mul(&g.pow(*e));
                }
                assert_eq!(prod, p, "factors re-multiply to {p}");
            }
        }
    }

    #[test]
    fn factor_rationals_rejected() {
        let p = Poly::from_ints(FieldSpec::Rationals, &[1, 0, 1]);
        assert!(matches!(factor_monic(&p), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn irreducible_enumeration() {
        let f = gf(2);
        let deg2 = monic_irreducibles(f, 2).unwrap();
        assert_eq!(deg2, vec![Poly::from_ints(f, &[1, 1, 1])]);
        let deg3 = monic_irreducibles(f, 3).unwrap();
        assert_eq!(deg3.len(), 2);
        let deg4 = monic_irreducibles(f, 4).unwrap();
        assert_eq!(deg4.len(), 3);
    }

    #[test]
    fn char_poly_matches_det_expansion() {
        // verified against direct determinant expansion for small sizes
        let q = FieldSpec::Rationals;
        let m = Matrix::from_int_rows(q, &[vec![1, 2], vec![3, 4]]);
        // det(xI - M) = x^2 - 5x - 2
        assert_eq!(char_poly(&m), Poly::from_ints(q, &[-2, -5, 1]));
        let f = gf(5);
        let m = Matrix::from_int_rows(f, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]);
        assert_eq!(char_poly(&m), Poly::from_ints(f, &[-1, -1, -1, 1]));
    }

    #[test]
    fn min_poly_of_nilpotent_shift() {
        let q = FieldSpec::Rationals;
        let shift = Poly::from_ints(q, &[0, 0, 0, 1]).companion().unwrap();
        assert_eq!(min_poly(&shift), Poly::from_ints(q, &[0, 0, 0, 1]));
        assert_eq!(min_poly(&Matrix::identity(q, 3)), Poly::from_ints(q, &[-1, 1]));
    }
}
