//! Indecomposability certificates and Krull-Schmidt decomposition.
//!
//! A split is exhibited through the Fitting decomposition of an endomorphism
//! or through an idempotent lifted from the semisimple quotient of the
//! endomorphism algebra; locality is certified by the radical computation
//! (`dim End/Rad = 1`, or over a prime field a commutative quotient whose
//! Frobenius-fixed subspace is one-dimensional, which is a finite field by
//! Wedderburn).

use super::endo::RadicalField;
use super::{hom, EndAlgebra, QuiverRep, RepMap};
use crate::linalg::{Field, Mat};
use crate::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Indecomposability {
    Yes,
    No,
    Inconclusive,
}

enum Analysis<F: Field> {
    Zero,
    Local,
    /// Two complementary invariant families of vertex subspaces.
    Split(SubspaceFamily<F>, SubspaceFamily<F>),
    Unknown,
}

type SubspaceFamily<F> = Vec<Vec<Vec<<F as Field>::Elem>>>;

fn random_elem<F: Field>(field: &F, rng: &mut impl Rng) -> F::Elem {
    match field.characteristic() {
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
        None => field.from_i64(rng.gen_range(-2i64..=2)),
    }
}

/// Kernel and image of an endomorphism, as vertexwise column bases; None if
/// one side is trivial.
fn kernel_image_split<F: Field>(
    endo: &RepMap<F>,
) -> Option<(SubspaceFamily<F>, SubspaceFamily<F>)> {
    let mut kernels = Vec::new();
    let mut images = Vec::new();
    let (mut kdim, mut idim) = (0usize, 0usize);
    for block in &endo.blocks {
        let k = block.kernel_basis();
        let i = block.column_space_basis();
        kdim += k.len();
        idim += i.len();
        kernels.push(k);
        images.push(i);
    }
    if kdim == 0 || idim == 0 {
        return None;
    }
    Some((kernels, images))
}

/// Fitting split: kernel and image of a stabilized power of an endomorphism.
fn fitting_split<F: Field>(
    rep: &QuiverRep<F>,
    endo: &RepMap<F>,
) -> Option<(SubspaceFamily<F>, SubspaceFamily<F>)> {
    let max_dim = rep.dims().iter().copied().max().unwrap_or(0);
    let mut power = endo.clone();
    let mut reach = 1usize;
    while reach < max_dim.max(1) {
        power = power.compose(&power);
        reach *= 2;
    }
    kernel_image_split(&power)
}

/// Quotient-algebra scaffolding: a radical basis and a complement giving
/// coordinates in the semisimple quotient of End.
struct Quotient<'a, F: Field> {
    end: &'a EndAlgebra<F>,
    field: F,
    /// columns: radical basis then complement unit vectors, in End coords
    change: Mat<F>,
    rad_dim: usize,
    ss_dim: usize,
    complement: Vec<usize>,
}

impl<'a, F: Field> Quotient<'a, F> {
    fn new(end: &'a EndAlgebra<F>, rad: &[Vec<F::Elem>]) -> Self {
        let field = end.field().clone();
        let m = end.dim();
        let pivot_cols = if rad.is_empty() {
            vec![]
        } else {
            let mut mat = Mat::from_rows(field.clone(), rad.to_vec());
            mat.rref()
        };
        let complement: Vec<usize> = (0..m).filter(|i| !pivot_cols.contains(i)).collect();
        let mut cols: Vec<Vec<F::Elem>> = rad.to_vec();
        for &i in &complement {
            let mut v = vec![field.zero(); m];
            v[i] = field.one();
            cols.push(v);
        }
        let change = Mat::from_columns(field.clone(), m, &cols);
        Quotient {
            end,
            field,
            change,
            rad_dim: rad.len(),
            ss_dim: complement.len(),
            complement,
        }
    }

    /// Quotient coordinates of an element given by End coordinates.
    fn project(&self, end_coords: &[F::Elem]) -> Vec<F::Elem> {
        let x = self
            .change
            .solve(end_coords)
            .expect("change of basis is invertible");
        x[self.rad_dim..].to_vec()
    }

    fn lift_coords(&self, s_coords: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.end.dim()];
        for (k, &i) in self.complement.iter().enumerate() {
            v[i] = s_coords[k].clone();
        }
        v
    }

    fn repmap_of(&self, s_coords: &[F::Elem]) -> RepMap<F> {
        self.end.from_coords(&self.lift_coords(s_coords))
    }

    fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let prod = self.repmap_of(a).compose(&self.repmap_of(b));
        let coords = self
            .end
            .coords(&prod)
            .expect("product stays in the endomorphism algebra");
        self.project(&coords)
    }

    fn one(&self) -> Vec<F::Elem> {
        let id = RepMap {
            blocks: self
                .end
                .vertex_dims()
                .iter()
                .map(|&d| Mat::identity(self.field.clone(), d))
                .collect(),
        };
        let coords = self.end.coords(&id).expect("identity is an endomorphism");
        self.project(&coords)
    }

    fn unit_basis(&self) -> Vec<Vec<F::Elem>> {
        (0..self.ss_dim)
            .map(|k| {
                let mut v = vec![self.field.zero(); self.ss_dim];
                v[k] = self.field.one();
                v
            })
            .collect()
    }

    fn is_commutative(&self) -> bool {
        let basis = self.unit_basis();
        for a in 0..self.ss_dim {
            for b in a + 1..self.ss_dim {
                if self.mul(&basis[a], &basis[b]) != self.mul(&basis[b], &basis[a]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Iterate `e <- 3e^2 - 2e^3` until exactly idempotent; the defect lies in
/// the nil radical and squares each round.
fn lift_idempotent<F: Field>(
    end: &EndAlgebra<F>,
    start: RepMap<F>,
    max_rounds: usize,
) -> Option<RepMap<F>> {
    let f = end.field().clone();
    let three = f.from_i64(3);
    let minus_two = f.from_i64(-2);
    let mut e = start;
    for _ in 0..max_rounds {
        let e2 = e.compose(&e);
        if e2 == e {
            return Some(e);
        }
        let e3 = e2.compose(&e);
        e = e2.scale(&three).add(&e3.scale(&minus_two));
    }
    None
}

fn analyze<F: RadicalField>(rep: &QuiverRep<F>, rng: &mut ChaCha8Rng) -> Result<Analysis<F>> {
    if rep.total_dim() == 0 {
        return Ok(Analysis::Zero);
    }
    let end = EndAlgebra::of(rep)?;
    if end.dim() == 1 {
        return Ok(Analysis::Local);
    }
    let f = rep.field().clone();

    // Fitting attempts: basis elements, a few pairwise products, random combos
    let mut candidates: Vec<RepMap<F>> = end.basis.clone();
    for i in 0..end.basis.len().min(6) {
        for j in 0..end.basis.len().min(6) {
            candidates.push(end.basis[i].compose(&end.basis[j]));
        }
    }
    for _ in 0..24 {
        let coords: Vec<F::Elem> = (0..end.dim()).map(|_| random_elem(&f, rng)).collect();
        candidates.push(end.from_coords(&coords));
    }
    for endo in &candidates {
        if let Some((k, i)) = fitting_split(rep, endo) {
            return Ok(Analysis::Split(k, i));
        }
    }

    // radical analysis of End
    let blocks: Vec<Mat<F>> = end.basis.iter().map(|e| end.block_matrix(e)).collect();
    let rad = F::radical(&f, &blocks)?;
    let ss_dim = end.dim() - rad.len();
    if ss_dim == 1 {
        return Ok(Analysis::Local);
    }
    let quotient = Quotient::new(&end, &rad);

    let split_via = |s_coords: &[F::Elem]| -> Option<(SubspaceFamily<F>, SubspaceFamily<F>)> {
        let lifted = lift_idempotent(&end, quotient.repmap_of(s_coords), 64)?;
        if lifted.is_zero() {
            return None;
        }
        kernel_image_split(&lifted)
    };

    if let Some(p) = f.characteristic() {
        if quotient.is_commutative() {
            // Frobenius fixed space: x -> x^p is linear on the quotient
            let frob = |v: &[F::Elem]| -> Vec<F::Elem> {
                let mut acc = v.to_vec();
                for _ in 1..p {
                    acc = quotient.mul(&acc, v);
                }
                acc
            };
            let basis = quotient.unit_basis();
            let cols: Vec<Vec<F::Elem>> = basis
                .iter()
                .map(|b| {
                    frob(b)
                        .iter()
                        .zip(b)
                        .map(|(x, y)| f.sub(x, y))
                        .collect::<Vec<_>>()
                })
                .collect();
            let frob_minus_id = Mat::from_columns(f.clone(), ss_dim, &cols);
            let fixed = frob_minus_id.kernel_basis();
            if fixed.len() == 1 {
                // the quotient is a finite field: End is local
                return Ok(Analysis::Local);
            }
            let one = quotient.one();
            for x in &fixed {
                let pair = Mat::from_columns(f.clone(), ss_dim, &[one.clone(), x.clone()]);
                if pair.rank() < 2 {
                    continue;
                }
                // Lagrange idempotents of the split element x
                for a in 0..p {
                    let mut e = one.clone();
                    let mut denom = f.one();
                    for b in 0..p {
                        if b == a {
                            continue;
                        }
                        let shift: Vec<F::Elem> = x
                            .iter()
                            .zip(&one)
                            .map(|(xi, oi)| f.sub(xi, &f.mul(&f.from_i64(b as i64), oi)))
                            .collect();
                        e = quotient.mul(&e, &shift);
                        denom =
                            f.mul(&denom, &f.sub(&f.from_i64(a as i64), &f.from_i64(b as i64)));
                    }
                    let inv = f.inv(&denom).expect("distinct scalars");
                    let e: Vec<F::Elem> = e.iter().map(|c| f.mul(c, &inv)).collect();
                    let is_zero = e.iter().all(|c| f.is_zero(c));
                    let is_one = e.iter().zip(&one).all(|(a, b)| a == b);
                    if is_zero || is_one {
                        continue;
                    }
                    if let Some((k, i)) = split_via(&e) {
                        return Ok(Analysis::Split(k, i));
                    }
                }
            }
            return Ok(Analysis::Unknown);
        }
        // noncommutative semisimple quotient over a finite field is never a
        // division ring (Wedderburn); hunt for a proper left ideal and its
        // right unit, which is a nontrivial idempotent
        let basis = quotient.unit_basis();
        let mut seeds: Vec<Vec<F::Elem>> = Vec::new();
        for a in &basis {
            for b in &basis {
                seeds.push(quotient.mul(a, b));
            }
        }
        for _ in 0..200 {
            let v: Vec<F::Elem> = (0..ss_dim).map(|_| random_elem(&f, rng)).collect();
            seeds.push(v);
        }
        for y in &seeds {
            if y.iter().all(|c| f.is_zero(c)) {
                continue;
            }
            let ideal_gens: Vec<Vec<F::Elem>> = basis.iter().map(|b| quotient.mul(b, y)).collect();
            let ideal_basis = Mat::from_columns(f.clone(), ss_dim, &ideal_gens).column_space_basis();
            let dim_l = ideal_basis.len();
            if dim_l == 0 || dim_l == ss_dim {
                continue;
            }
            // solve z e = z for all z in a basis of L, with e in L
            let mut rows: Vec<Vec<F::Elem>> = Vec::new();
            let mut rhs: Vec<F::Elem> = Vec::new();
            for z in &ideal_basis {
                let products: Vec<Vec<F::Elem>> =
                    ideal_basis.iter().map(|bk| quotient.mul(z, bk)).collect();
                for coord in 0..ss_dim {
                    rows.push(products.iter().map(|pr| pr[coord].clone()).collect());
                    rhs.push(z[coord].clone());
                }
            }
            let sys = Mat::from_rows(f.clone(), rows);
            let Some(sol) = sys.solve(&rhs) else {
                continue;
            };
            let mut e = vec![f.zero(); ss_dim];
            for (c, b) in sol.iter().zip(&ideal_basis) {
                for (acc, bv) in e.iter_mut().zip(b) {
                    *acc = f.add(acc, &f.mul(c, bv));
                }
            }
            if e.iter().all(|c| f.is_zero(c)) {
                continue;
            }
            if let Some((k, i)) = split_via(&e) {
                return Ok(Analysis::Split(k, i));
            }
        }
        return Ok(Analysis::Unknown);
    }

    // characteristic zero: a semisimple quotient of dimension > 1 without an
    // exhibited splitting stays undecided (division-algebra quotients exist)
    Ok(Analysis::Unknown)
}

/// Decide indecomposability. `Yes` is certified by locality of the
/// endomorphism algebra, `No` by an exhibited splitting.
pub fn is_indecomposable<F: RadicalField>(
    rep: &QuiverRep<F>,
    seed: u64,
) -> Result<Indecomposability> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match analyze(rep, &mut rng)? {
        Analysis::Zero => Indecomposability::No,
        Analysis::Local => Indecomposability::Yes,
        Analysis::Split(..) => Indecomposability::No,
        Analysis::Unknown => Indecomposability::Inconclusive,
    })
}

/// Full Krull-Schmidt decomposition into indecomposable summands,
/// deterministic for a fixed seed; summands sorted canonically.
pub fn decompose<F: RadicalField>(rep: &QuiverRep<F>, seed: u64) -> Result<Vec<QuiverRep<F>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    decompose_into(rep, &mut rng, &mut out)?;
    out.sort_by(|a, b| canonical_key(a).cmp(&canonical_key(b)));
    Ok(out)
}

fn canonical_key<F: Field>(rep: &QuiverRep<F>) -> (Vec<usize>, Vec<F::Elem>) {
    let mut entries = Vec::new();
    for m in rep.maps().values() {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                entries.push(m.at(r, c).clone());
            }
        }
    }
    (rep.dim_vector(), entries)
}

fn decompose_into<F: RadicalField>(
    rep: &QuiverRep<F>,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<QuiverRep<F>>,
) -> Result<()> {
    match analyze(rep, rng)? {
        Analysis::Zero => Ok(()),
        Analysis::Local => {
            out.push(rep.clone());
            Ok(())
        }
        Analysis::Split(kernels, images) => {
            let total: usize = kernels.iter().map(|k| k.len()).sum::<usize>()
                + images.iter().map(|i| i.len()).sum::<usize>();
            debug_assert_eq!(total, rep.total_dim());
            let left = rep.sub_rep(&kernels)?;
            let right = rep.sub_rep(&images)?;
            decompose_into(&left, rng, out)?;
            decompose_into(&right, rng, out)
        }
        Analysis::Unknown => Err(Error::DecompositionFailed(
            "no splitting idempotent found and locality not certified".into(),
        )),
    }
}

/// Isomorphism test: dimension filters, Hom-dimension symmetry, then a
/// search for an invertible morphism (exhaustive over small prime-field Hom
/// spaces, randomized otherwise).
pub fn isomorphic<F: RadicalField>(
    r1: &QuiverRep<F>,
    r2: &QuiverRep<F>,
    seed: u64,
) -> Result<bool> {
    if r1.dim_vector() != r2.dim_vector() {
        return Ok(false);
    }
    if r1.total_dim() == 0 {
        return Ok(true);
    }
    let h12 = hom(r1, r2)?;
    let h21 = hom(r2, r1)?;
    let e1 = hom(r1, r1)?;
    let e2 = hom(r2, r2)?;
    if h12.dim() != h21.dim() || e1.dim() != e2.dim() || h12.dim() != e1.dim() {
        return Ok(false);
    }
    if h12.dim() == 0 {
        return Ok(false);
    }
    for phi in &h12.basis {
        if phi.is_invertible() {
            return Ok(true);
        }
    }
    let f = r1.field().clone();
    if let Some(p) = f.characteristic() {
        if (p as u128).checked_pow(h12.dim() as u32).is_some_and(|t| t <= 4096) {
            let mut coeffs = vec![0u64; h12.dim()];
            loop {
                let mut k = 0;
                loop {
                    if k == coeffs.len() {
                        return Ok(false);
                    }
                    coeffs[k] += 1;
                    if coeffs[k] < p {
                        break;
                    }
                    coeffs[k] = 0;
                    k += 1;
                }
                let mut acc = h12.basis[0].scale(&f.from_i64(coeffs[0] as i64));
                for (c, b) in coeffs.iter().zip(&h12.basis).skip(1) {
                    acc = acc.add(&b.scale(&f.from_i64(*c as i64)));
                }
                if acc.is_invertible() {
                    return Ok(true);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let mut acc = h12.basis[0].scale(&random_elem(&f, &mut rng));
        for b in h12.basis.iter().skip(1) {
            acc = acc.add(&b.scale(&random_elem(&f, &mut rng)));
        }
        if acc.is_invertible() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Group representations into isomorphism classes; returns (representative
/// index, multiplicity) pairs in first-seen order.
pub fn iso_classes<F: RadicalField>(
    reps: &[QuiverRep<F>],
    seed: u64,
) -> Result<Vec<(usize, usize)>> {
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for (i, rep) in reps.iter().enumerate() {
        let mut placed = false;
        for entry in classes.iter_mut() {
            if isomorphic(rep, &reps[entry.0], seed)? {
                entry.1 += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((i, 1));
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Fp, QQ};
    use std::collections::BTreeMap;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn simples_are_indecomposable() {
        let f = f2();
        for v in 0..4u32 {
            let s = QuiverRep::simple(f, 2, v);
            assert_eq!(is_indecomposable(&s, 0).unwrap(), Indecomposability::Yes);
        }
        let p = QuiverRep::projective(f, 2, 0);
        assert_eq!(is_indecomposable(&p, 0).unwrap(), Indecomposability::Yes);
        assert_eq!(
            is_indecomposable(&QuiverRep::projective(QQ, 2, 0), 0).unwrap(),
            Indecomposability::Yes
        );
    }

    #[test]
    fn sums_split() {
        let f = f2();
        let p = QuiverRep::projective(f, 2, 0);
        let s = QuiverRep::simple(f, 2, 3);
        let sum = p.direct_sum(&s).unwrap();
        assert_eq!(is_indecomposable(&sum, 0).unwrap(), Indecomposability::No);
        let parts = decompose(&sum, 0).unwrap();
        assert_eq!(parts.len(), 2);
        let dims: Vec<Vec<usize>> = parts.iter().map(|r| r.dim_vector()).collect();
        assert!(dims.contains(&vec![0, 0, 0, 1]));
        assert!(dims.contains(&vec![1, 1, 1, 1]));
        let rr = s.direct_sum(&s).unwrap();
        assert_eq!(is_indecomposable(&rr, 0).unwrap(), Indecomposability::No);
        assert_eq!(decompose(&rr, 0).unwrap().len(), 2);
    }

    #[test]
    fn zero_rep_decomposes_to_nothing() {
        let f = f2();
        let z = QuiverRep::zero(f, 2);
        assert!(decompose(&z, 0).unwrap().is_empty());
    }

    #[test]
    fn regular_representation_of_a2_algebra() {
        // ⊕_Y P(Y) has dimension 9 = 4 + 2 + 2 + 1 with four local summands
        let f = f2();
        let mut reg = QuiverRep::zero(f, 2);
        for y in 0..4u32 {
            reg = reg.direct_sum(&QuiverRep::projective(f, 2, y)).unwrap();
        }
        assert_eq!(reg.total_dim(), 9);
        let parts = decompose(&reg, 0).unwrap();
        assert_eq!(parts.len(), 4);
        let mut dims: Vec<usize> = parts.iter().map(|p| p.total_dim()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2, 2, 4]);
        for part in &parts {
            let y = part
                .dims()
                .iter()
                .enumerate()
                .find(|&(_, &d)| d == 1)
                .map(|(v, _)| v as u32)
                .unwrap();
            assert!(isomorphic(part, &QuiverRep::projective(f, 2, y), 0).unwrap());
        }
    }

    #[test]
    fn projective_decomposition_over_q() {
        let mut reg = QuiverRep::zero(QQ, 2);
        for y in 0..4u32 {
            reg = reg.direct_sum(&QuiverRep::projective(QQ, 2, y)).unwrap();
        }
        let parts = decompose(&reg, 0).unwrap();
        assert_eq!(parts.len(), 4);
        for part in &parts {
            assert_eq!(is_indecomposable(part, 1).unwrap(), Indecomposability::Yes);
        }
    }

    #[test]
    fn iso_testing() {
        let f = f2();
        let p = QuiverRep::projective(f, 2, 0);
        let s = QuiverRep::simple(f, 2, 0);
        assert!(isomorphic(&p, &p, 0).unwrap());
        assert!(!isomorphic(&p, &s, 0).unwrap());
        // same dimension vector, different modules
        let conn = QuiverRep::indicator(f, 1, &[0, 1]).unwrap();
        let split = QuiverRep::simple(f, 1, 0)
            .direct_sum(&QuiverRep::simple(f, 1, 1))
            .unwrap();
        assert_eq!(conn.dim_vector(), split.dim_vector());
        assert!(!isomorphic(&conn, &split, 0).unwrap());
        // a conjugated copy is isomorphic
        let mut maps = BTreeMap::new();
        maps.insert(
            (0u32, 1u32),
            crate::linalg::Mat::from_rows(f, vec![vec![1], vec![1]]),
        );
        let a = QuiverRep::new(1, f, vec![1, 2], maps).unwrap();
        let mut maps = BTreeMap::new();
        maps.insert(
            (0u32, 1u32),
            crate::linalg::Mat::from_rows(f, vec![vec![0], vec![1]]),
        );
        let b = QuiverRep::new(1, f, vec![1, 2], maps).unwrap();
        assert!(isomorphic(&a, &b, 0).unwrap());
    }

    #[test]
    fn krull_schmidt_seed_independence_smoke() {
        let f = f2();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..30 {
            let rep = QuiverRep::random_valid(f, 2, 3, &mut rng).unwrap();
            let d1 = decompose(&rep, 0).unwrap();
            let d2 = decompose(&rep, 1).unwrap();
            assert_eq!(d1.len(), d2.len());
            let mut used = vec![false; d2.len()];
            for part in &d1 {
                let j = d2
                    .iter()
                    .enumerate()
                    .find(|(j, cand)| !used[*j] && isomorphic(part, cand, 0).unwrap())
                    .map(|(j, _)| j)
                    .expect("matching summand");
                used[j] = true;
            }
            assert!(used.iter().all(|&u| u));
        }
    }
}
