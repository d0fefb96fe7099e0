//! Matrix representations of the bound Boolean quiver: relation checking,
//! Hom spaces, endomorphism analysis, Krull-Schmidt decomposition,
//! classification for small `n`, and the three-case analysis for `n = 3`.

mod a3;
mod classify;
mod decomp;
mod endo;

pub use a3::{a3_trichotomy_check, check_case_a, check_case_b, check_case_c, sweep_dim_vector_debug, A3Report, CaseAReport, CaseBReport, CaseCReport};
pub use classify::{classify, lift_to_q};
pub use decomp::{decompose, is_indecomposable, isomorphic, Indecomposability};
pub use endo::matrix_algebra_radical;

use crate::linalg::{Field, Mat};
use crate::quiver::{hasse_quiver, BoundQuiver};
use crate::{Error, Result};
use rand::Rng;
use std::collections::BTreeMap;

/// A representation of the bound quiver on subsets of an `n`-set: one space
/// per vertex mask, one `dims[dst] x dims[src]` matrix per arrow.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverRep<F: Field> {
    n: usize,
    field: F,
    dims: Vec<usize>,
    maps: BTreeMap<(u32, u32), Mat<F>>,
}

impl<F: Field> QuiverRep<F> {
    pub fn new(
        n: usize,
        field: F,
        dims: Vec<usize>,
        mut given: BTreeMap<(u32, u32), Mat<F>>,
    ) -> Result<Self> {
        if dims.len() != 1 << n {
            return Err(Error::ShapeMismatch(format!(
                "expected {} vertex dimensions, got {}",
                1 << n,
                dims.len()
            )));
        }
        let quiver = hasse_quiver(n)?;
        let mut maps = BTreeMap::new();
        for &(src, dst) in quiver.arrows() {
            let mat = given.remove(&(src, dst)).unwrap_or_else(|| {
                Mat::zero(field.clone(), dims[dst as usize], dims[src as usize])
            });
            if mat.rows() != dims[dst as usize] || mat.cols() != dims[src as usize] {
                return Err(Error::ShapeMismatch(format!(
                    "map {src}->{dst} must be {}x{}, got {}x{}",
                    dims[dst as usize],
                    dims[src as usize],
                    mat.rows(),
                    mat.cols()
                )));
            }
            maps.insert((src, dst), mat);
        }
        if let Some((&(src, dst), _)) = given.iter().next() {
            return Err(Error::ShapeMismatch(format!(
                "{src}->{dst} is not an arrow of the quiver"
            )));
        }
        Ok(QuiverRep {
            n,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(field: F, n: usize) -> Self {
        QuiverRep::new(n, field, vec![0; 1 << n], BTreeMap::new()).expect("zero rep shape")
    }

    /// Simple representation concentrated at one vertex.
    pub fn simple(field: F, n: usize, vertex: u32) -> Self {
        let mut dims = vec![0; 1 << n];
        dims[vertex as usize] = 1;
        QuiverRep::new(n, field, dims, BTreeMap::new()).expect("simple rep shape")
    }

    /// Indicator representation of a set of vertices with identity maps on
    /// internal arrows. Valid whenever the induced composites agree; the
    /// constructor does not re-check relations.
    pub fn indicator(field: F, n: usize, vertices: &[u32]) -> Result<Self> {
        let mut dims = vec![0; 1 << n];
        for &v in vertices {
            dims[v as usize] = 1;
        }
        let quiver = hasse_quiver(n)?;
        let mut maps = BTreeMap::new();
        for &(src, dst) in quiver.arrows() {
            if dims[src as usize] == 1 && dims[dst as usize] == 1 {
                maps.insert((src, dst), Mat::identity(field.clone(), 1));
            }
        }
        QuiverRep::new(n, field, dims, maps)
    }

    /// The right projective at a vertex: the interval `[Y, X]` indicator.
    pub fn projective(field: F, n: usize, y: u32) -> Self {
        let vertices: Vec<u32> = (0..1u32 << n).filter(|&z| y & !z == 0).collect();
        QuiverRep::indicator(field, n, &vertices).expect("projective shape")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        self.dims.clone()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, src: u32, dst: u32) -> &Mat<F> {
        &self.maps[&(src, dst)]
    }

    pub fn maps(&self) -> &BTreeMap<(u32, u32), Mat<F>> {
        &self.maps
    }

    pub fn quiver(&self) -> BoundQuiver {
        hasse_quiver(self.n).expect("rep rank validated at construction")
    }

    /// Composite map along any monotone path between two vertices, or the
    /// identity if they coincide. Callers rely on relations holding.
    pub fn composite(&self, src: u32, dst: u32) -> Mat<F> {
        assert_eq!(src & !dst, 0);
        let mut cur = Mat::identity(self.field.clone(), self.dims[src as usize]);
        let mut at = src;
        while at != dst {
            let i = (dst & !at).trailing_zeros();
            let next = at | (1 << i);
            cur = self.map(at, next).mul(&cur);
            at = next;
        }
        cur
    }

    /// Every parallelogram commutes exactly.
    pub fn check_relations(&self) -> bool {
        let quiver = self.quiver();
        quiver.relations().iter().all(|r| {
            let via_low = self.map(r.mid_low, r.end).mul(self.map(r.start, r.mid_low));
            let via_high = self
                .map(r.mid_high, r.end)
                .mul(self.map(r.start, r.mid_high));
            via_low == via_high
        })
    }

    pub fn direct_sum(&self, other: &QuiverRep<F>) -> Result<QuiverRep<F>> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::ShapeMismatch("different quivers".into()));
        }
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let mut maps = BTreeMap::new();
        for (&(src, dst), a) in &self.maps {
            let b = other.map(src, dst);
            let block = Mat::from_fn(
                self.field.clone(),
                a.rows() + b.rows(),
                a.cols() + b.cols(),
                |r, c| {
                    if r < a.rows() && c < a.cols() {
                        a.at(r, c).clone()
                    } else if r >= a.rows() && c >= a.cols() {
                        b.at(r - a.rows(), c - a.cols()).clone()
                    } else {
                        self.field.zero()
                    }
                },
            );
            maps.insert((src, dst), block);
        }
        QuiverRep::new(self.n, self.field.clone(), dims, maps)
    }

    /// Restrict to an invariant family of subspaces, one column basis per
    /// vertex. Fails if the maps do not preserve the family.
    pub fn sub_rep(&self, bases: &[Vec<Vec<F::Elem>>]) -> Result<QuiverRep<F>> {
        let f = self.field.clone();
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let base_mats: Vec<Mat<F>> = bases
            .iter()
            .enumerate()
            .map(|(v, cols)| Mat::from_columns(f.clone(), self.dims[v], cols))
            .collect();
        let mut maps = BTreeMap::new();
        for (&(src, dst), m) in &self.maps {
            let (bs, bt) = (&base_mats[src as usize], &base_mats[dst as usize]);
            let mut out = Mat::zero(f.clone(), dims[dst as usize], dims[src as usize]);
            for c in 0..dims[src as usize] {
                let col: Vec<F::Elem> = (0..self.dims[src as usize])
                    .map(|r| bs.at(r, c).clone())
                    .collect();
                let image = m.apply(&col);
                let coords = bt.solve(&image).ok_or_else(|| {
                    Error::DecompositionFailed("subspace family is not invariant".into())
                })?;
                for (r, val) in coords.into_iter().enumerate() {
                    *out.at_mut(r, c) = val;
                }
            }
            maps.insert((src, dst), out);
        }
        QuiverRep::new(self.n, f, dims, maps)
    }

    /// Random representation satisfying the relations: maps are built level
    /// by level, each battery of maps into a target drawn uniformly from the
    /// solution space of its commutation constraints.
    pub fn random_valid(field: F, n: usize, dim_bound: usize, rng: &mut impl Rng) -> Result<Self>
    where
        F: Clone,
    {
        let size = 1usize << n;
        let dims: Vec<usize> = (0..size).map(|_| rng.gen_range(0..=dim_bound)).collect();
        Self::random_valid_with_dims(field, n, &dims, rng)
    }

    pub fn random_valid_with_dims(
        field: F,
        n: usize,
        dims: &[usize],
        rng: &mut impl Rng,
    ) -> Result<Self> {
        let size = 1usize << n;
        if dims.len() != size {
            return Err(Error::ShapeMismatch("dimension vector length".into()));
        }
        fn rand_elem<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> F::Elem {
            match field.characteristic() {
                Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
                None => field.from_i64(rng.gen_range(-3i64..=3)),
            }
        }
        let mut maps: BTreeMap<(u32, u32), Mat<F>> = BTreeMap::new();
        // composites into already-finished vertices are well defined; masks
        // in increasing popcount order
        let mut order: Vec<u32> = (0..size as u32).collect();
        order.sort_by_key(|v| v.count_ones());
        for &target in &order {
            let level = target.count_ones();
            if level == 0 {
                continue;
            }
            let sources: Vec<u32> = (0..n)
                .filter(|&i| target & (1 << i) != 0)
                .map(|i| target & !(1 << i))
                .collect();
            let dt = dims[target as usize];
            // unknowns: the stacked entries of all maps source -> target
            let widths: Vec<usize> = sources.iter().map(|&s| dims[s as usize]).collect();
            let unknowns: usize = widths.iter().map(|w| dt * w).sum();
            if unknowns == 0 {
                for &s in &sources {
                    maps.insert(
                        (s, target),
                        Mat::zero(field.clone(), dt, dims[s as usize]),
                    );
                }
                continue;
            }
            // constraints: for every grandparent g = target minus two bits,
            // map(s1,t) * comp(g,s1) = map(s2,t) * comp(g,s2)
            let offset = |k: usize| -> usize { widths[..k].iter().map(|w| dt * w).sum() };
            let mut rows: Vec<Vec<F::Elem>> = Vec::new();
            if level >= 2 {
                let comp = |g: u32, s: u32| -> Mat<F> {
                    // composite from g to s through recorded maps
                    let mut cur = Mat::identity(field.clone(), dims[g as usize]);
                    let mut at = g;
                    while at != s {
                        let i = (s & !at).trailing_zeros();
                        let next = at | (1 << i);
                        cur = maps[&(at, next)].mul(&cur);
                        at = next;
                    }
                    cur
                };
                for a in 0..sources.len() {
                    for b in a + 1..sources.len() {
                        let g = sources[a] & sources[b];
                        if (sources[a] | sources[b]) != target
                            || g.count_ones() != level - 2
                        {
                            continue;
                        }
                        let ca = comp(g, sources[a]);
                        let cb = comp(g, sources[b]);
                        let dg = dims[g as usize];
                        // rows indexed by (target row r, source-of-g col c)
                        for r in 0..dt {
                            for c in 0..dg {
                                let mut row = vec![field.zero(); unknowns];
                                for (k, &w) in widths.iter().enumerate() {
                                    let (mat, sign) = if sources[k] == sources[a] {
                                        (&ca, 1)
                                    } else if sources[k] == sources[b] {
                                        (&cb, -1)
                                    } else {
                                        continue;
                                    };
                                    for m in 0..w {
                                        let coef = if sign > 0 {
                                            mat.at(m, c).clone()
                                        } else {
                                            field.neg(mat.at(m, c))
                                        };
                                        row[offset(k) + r * w + m] = coef;
                                    }
                                }
                                rows.push(row);
                            }
                        }
                    }
                }
            }
            let solution: Vec<F::Elem> = if rows.is_empty() {
                (0..unknowns).map(|_| rand_elem(&field, rng)).collect()
            } else {
                let sys = Mat::from_rows(field.clone(), rows);
                let kernel = sys.kernel_basis();
                let mut sol = vec![field.zero(); unknowns];
                for basis_vec in &kernel {
                    let coef = rand_elem(&field, rng);
                    for (i, v) in basis_vec.iter().enumerate() {
                        sol[i] = field.add(&sol[i], &field.mul(&coef, v));
                    }
                }
                sol
            };
            for (k, &s) in sources.iter().enumerate() {
                let w = widths[k];
                let base = offset(k);
                let mat = Mat::from_fn(field.clone(), dt, w, |r, c| {
                    solution[base + r * w + c].clone()
                });
                maps.insert((s, target), mat);
            }
        }
        QuiverRep::new(n, field, dims.to_vec(), maps)
    }
}

/// A morphism of representations: one block per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMap<F: Field> {
    pub blocks: Vec<Mat<F>>,
}

impl<F: Field> RepMap<F> {
    pub fn identity(rep: &QuiverRep<F>) -> Self {
        RepMap {
            blocks: rep
                .dims()
                .iter()
                .map(|&d| Mat::identity(rep.field().clone(), d))
                .collect(),
        }
    }

    pub fn compose(&self, inner: &RepMap<F>) -> RepMap<F> {
        RepMap {
            blocks: self
                .blocks
                .iter()
                .zip(&inner.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &RepMap<F>) -> RepMap<F> {
        RepMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &F::Elem) -> RepMap<F> {
        RepMap {
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }
}

/// Basis of the space of morphisms between two representations.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub basis: Vec<RepMap<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solve the intertwining system `phi_dst f = g phi_src` over all arrows.
pub fn hom<F: Field>(r1: &QuiverRep<F>, r2: &QuiverRep<F>) -> Result<HomSpace<F>> {
    if r1.field() != r2.field() {
        return Err(Error::FieldMismatch);
    }
    if r1.n() != r2.n() {
        return Err(Error::ShapeMismatch("different quivers".into()));
    }
    let f = r1.field().clone();
    let size = 1usize << r1.n();
    // unknowns: per vertex v a dims2[v] x dims1[v] block, flattened row-major
    let block_size: Vec<usize> = (0..size).map(|v| r2.dims()[v] * r1.dims()[v]).collect();
    let offsets: Vec<usize> = block_size
        .iter()
        .scan(0, |acc, &s| {
            let out = *acc;
            *acc += s;
            Some(out)
        })
        .collect();
    let unknowns: usize = block_size.iter().sum();
    if unknowns == 0 {
        return Ok(HomSpace { basis: vec![] });
    }
    let quiver = r1.quiver();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for &(src, dst) in quiver.arrows() {
        let f1 = r1.map(src, dst);
        let f2 = r2.map(src, dst);
        let (d1s, d1t) = (r1.dims()[src as usize], r1.dims()[dst as usize]);
        let d2t = r2.dims()[dst as usize];
        // equation block: phi_dst * f1 - f2 * phi_src = 0, entries (r, c)
        for r in 0..d2t {
            for c in 0..d1s {
                let mut row = vec![f.zero(); unknowns];
                // phi_dst(r, k) * f1(k, c)
                for k in 0..d1t {
                    let coef = f1.at(k, c).clone();
                    if !f.is_zero(&coef) {
                        row[offsets[dst as usize] + r * d1t + k] =
                            f.add(&row[offsets[dst as usize] + r * d1t + k], &coef);
                    }
                }
                // - f2(r, k) * phi_src(k, c)
                for k in 0..r2.dims()[src as usize] {
                    let coef = f.neg(f2.at(r, k));
                    if !f.is_zero(&coef) {
                        row[offsets[src as usize] + k * d1s + c] =
                            f.add(&row[offsets[src as usize] + k * d1s + c], &coef);
                    }
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        // no constraints: the whole space
        let mut basis = Vec::new();
        for i in 0..unknowns {
            let mut v = vec![f.zero(); unknowns];
            v[i] = f.one();
            basis.push(v);
        }
        basis
    } else {
        Mat::from_rows(f.clone(), rows).kernel_basis()
    };
    let basis = kernel
        .into_iter()
        .map(|v| RepMap {
            blocks: (0..size)
                .map(|vert| {
                    let (d2, d1) = (r2.dims()[vert], r1.dims()[vert]);
                    Mat::from_fn(f.clone(), d2, d1, |r, c| {
                        v[offsets[vert] + r * d1 + c].clone()
                    })
                })
                .collect(),
        })
        .collect();
    Ok(HomSpace { basis })
}

/// Endomorphism algebra of a representation, with its basis and coordinate
/// solver; the faithful module is the total space of the representation.
pub struct EndAlgebra<F: Field> {
    pub basis: Vec<RepMap<F>>,
    coord_solver: Mat<F>,
    field: F,
    dims: Vec<usize>,
}

impl<F: Field> EndAlgebra<F> {
    pub fn of(rep: &QuiverRep<F>) -> Result<EndAlgebra<F>> {
        let space = hom(rep, rep)?;
        let f = rep.field().clone();
        let total: usize = rep.dims().iter().map(|d| d * d).sum();
        let cols: Vec<Vec<F::Elem>> = space
            .basis
            .iter()
            .map(|e| flatten_endo(e))
            .collect();
        let coord_solver = Mat::from_columns(f.clone(), total, &cols);
        Ok(EndAlgebra {
            basis: space.basis,
            coord_solver,
            field: f,
            dims: rep.dims().to_vec(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Total dimension of the underlying module.
    pub fn module_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Per-vertex dimensions of the underlying representation.
    pub fn vertex_dims(&self) -> &[usize] {
        &self.dims
    }

    /// Coordinates of an endomorphism in the computed basis.
    pub fn coords(&self, endo: &RepMap<F>) -> Option<Vec<F::Elem>> {
        self.coord_solver.solve(&flatten_endo(endo))
    }

    pub fn from_coords(&self, coords: &[F::Elem]) -> RepMap<F> {
        let f = &self.field;
        let mut acc: Option<RepMap<F>> = None;
        for (c, e) in coords.iter().zip(&self.basis) {
            let term = e.scale(c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.unwrap_or_else(|| RepMap {
            blocks: self
                .dims
                .iter()
                .map(|&d| Mat::zero(f.clone(), d, d))
                .collect(),
        })
    }

    /// Block-diagonal matrix of an endomorphism on the total space.
    pub fn block_matrix(&self, endo: &RepMap<F>) -> Mat<F> {
        let f = &self.field;
        let total = self.module_dim();
        let mut out = Mat::zero(f.clone(), total, total);
        let mut base = 0usize;
        for (v, &d) in self.dims.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    *out.at_mut(base + r, base + c) = endo.blocks[v].at(r, c).clone();
                }
            }
            base += d;
        }
        out
    }
}

fn flatten_endo<F: Field>(endo: &RepMap<F>) -> Vec<F::Elem> {
    let mut out = Vec::new();
    for b in &endo.blocks {
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                out.push(b.at(r, c).clone());
            }
        }
    }
    out
}
