//! Three-case analysis of representations of the bound 3-cube quiver,
//! split by the behaviour of the corner spaces `V_∅` and `V_X`.
//!
//! * Case (a): both corner spaces vanish. Every relation generator has its
//!   source at `∅` or target at `X`, so all six relations are vacuous and
//!   the middle six vertices carry an unconstrained hexagon representation.
//! * Case (b): both corners are nonzero. The constant representation `P(∅)`
//!   is projective and injective with scalar endomorphisms, so any valid
//!   representation whose full corner composite `V_∅ -> V_X` is nonzero
//!   splits off a copy of it. The exhaustive sweep below enumerates all
//!   remaining candidates (corner composite zero) up to isomorphism inside
//!   a dimension box and tests each for indecomposability.
//! * Case (c): exactly one corner vanishes. Sampled indecomposables are
//!   checked for injectivity of the nine middle maps, with degenerate
//!   (zero-target) maps tallied separately.

use super::decomp::{decompose, is_indecomposable, isomorphic, Indecomposability};
use super::{hom, QuiverRep};
use crate::linalg::{Field, Fp, Mat};
use crate::quiver::hasse_quiver;
use crate::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

const SINGLES: [u32; 3] = [1, 2, 4];
const DOUBLES: [u32; 3] = [3, 5, 6];

#[derive(Clone, Debug, Serialize)]
pub struct CaseAReport {
    pub samples: usize,
    pub relations_auto_satisfied: usize,
    pub hom_pairs_checked: usize,
    pub hom_dims_match: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseBReport {
    pub dim_bound: usize,
    pub complete: bool,
    pub dim_vectors_scanned: usize,
    pub triples_enumerated: u64,
    pub corner_split_reps: u64,
    pub survivors_tested: u64,
    pub projective_found: bool,
    /// Dimension vectors of indecomposables other than the constant
    /// representation; expected empty.
    pub extra_indecomposables: Vec<Vec<usize>>,
    pub corner_split_samples: usize,
    pub corner_split_verified: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseCReport {
    pub samples: usize,
    pub indecomposables_found: usize,
    pub with_all_nine_injective: usize,
    pub degenerate_exceptions: usize,
    pub nondegenerate_exceptions: usize,
    pub max_singleton_dim: usize,
    pub max_doubleton_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct A3Report {
    pub case_a: CaseAReport,
    pub case_b: CaseBReport,
    pub case_c: CaseCReport,
}

/// Run all three case checks. `dim_bound` controls the exhaustive case-(b)
/// box (at most 2); `samples` the randomized case-(a)/(c) sweeps.
pub fn a3_trichotomy_check(dim_bound: usize, samples: usize, seed: u64) -> Result<A3Report> {
    if !(1..=2).contains(&dim_bound) {
        return Err(Error::InvalidInput(
            "the exhaustive corner sweep supports dim_bound 1 or 2".into(),
        ));
    }
    let case_a = check_case_a(samples, seed)?;
    let case_b = check_case_b(dim_bound, u64::MAX, seed)?;
    let case_c = check_case_c(samples, seed)?;
    Ok(A3Report {
        case_a,
        case_b,
        case_c,
    })
}

// ---------------------------------------------------------------------------
// case (a)

pub fn check_case_a(samples: usize, seed: u64) -> Result<CaseAReport> {
    let f = Fp::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quiver = hasse_quiver(3)?;
    let mut reps = Vec::new();
    let mut auto = 0usize;
    for _ in 0..samples {
        // unconstrained random maps on a corner-free dimension vector
        let mut dims = vec![0usize; 8];
        for &v in SINGLES.iter().chain(DOUBLES.iter()) {
            dims[v as usize] = rng.gen_range(0..=2);
        }
        let mut maps = BTreeMap::new();
        for &(s, d) in quiver.arrows() {
            let mat = Mat::from_fn(f, dims[d as usize], dims[s as usize], |_, _| {
                rng.gen_range(0..2u64)
            });
            maps.insert((s, d), mat);
        }
        let rep = QuiverRep::new(3, f, dims, maps)?;
        if rep.check_relations() {
            auto += 1;
        }
        reps.push(rep);
    }
    // Hom computed on the full cube agrees with the hexagon restriction
    let mut pairs = 0usize;
    let mut matching = 0usize;
    for i in 0..reps.len().min(12) {
        for j in 0..reps.len().min(12) {
            pairs += 1;
            let full = hom(&reps[i], &reps[j])?.dim();
            let restricted = hexagon_hom_dim(&reps[i], &reps[j]);
            if full == restricted {
                matching += 1;
            }
        }
    }
    Ok(CaseAReport {
        samples,
        relations_auto_satisfied: auto,
        hom_pairs_checked: pairs,
        hom_dims_match: matching,
    })
}

/// Intertwiner dimension over the middle hexagon only, built independently
/// of the full-quiver Hom solver.
fn hexagon_hom_dim(r1: &QuiverRep<Fp>, r2: &QuiverRep<Fp>) -> usize {
    let f = *r1.field();
    let middles: Vec<u32> = SINGLES.iter().chain(DOUBLES.iter()).copied().collect();
    let index: BTreeMap<u32, usize> = middles.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let block: Vec<usize> = middles
        .iter()
        .map(|&v| r2.dims()[v as usize] * r1.dims()[v as usize])
        .collect();
    let offsets: Vec<usize> = block
        .iter()
        .scan(0, |acc, &s| {
            let out = *acc;
            *acc += s;
            Some(out)
        })
        .collect();
    let unknowns: usize = block.iter().sum();
    if unknowns == 0 {
        return 0;
    }
    let mut rows = Vec::new();
    for &s in &SINGLES {
        for &d in &DOUBLES {
            if s & !d != 0 {
                continue;
            }
            let f1 = r1.map(s, d);
            let f2 = r2.map(s, d);
            let (d1s, d1t) = (r1.dims()[s as usize], r1.dims()[d as usize]);
            let d2t = r2.dims()[d as usize];
            let (si, di) = (index[&s], index[&d]);
            for r in 0..d2t {
                for c in 0..d1s {
                    let mut row = vec![0u64; unknowns];
                    for k in 0..d1t {
                        let coef = *f1.at(k, c);
                        if coef != 0 {
                            let idx = offsets[di] + r * d1t + k;
                            row[idx] = f.add(&row[idx], &coef);
                        }
                    }
                    for k in 0..r2.dims()[s as usize] {
                        let coef = f.neg(f2.at(r, k));
                        if coef != 0 {
                            let idx = offsets[si] + k * d1s + c;
                            row[idx] = f.add(&row[idx], &coef);
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return unknowns;
    }
    Mat::from_rows(f, rows).kernel_basis().len()
}

// ---------------------------------------------------------------------------
// tiny F_2 matrices packed in sixteen bits (dimensions stay at most 6)

#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
struct M2 {
    rows: u8,
    cols: u8,
    bits: u64,
}

impl M2 {
    fn zero(rows: usize, cols: usize) -> Self {
        M2 {
            rows: rows as u8,
            cols: cols as u8,
            bits: 0,
        }
    }

    fn get(self, r: usize, c: usize) -> u64 {
        (self.bits >> (r * self.cols as usize + c)) & 1
    }

    fn set(&mut self, r: usize, c: usize, v: u64) {
        let pos = r * self.cols as usize + c;
        self.bits = (self.bits & !(1 << pos)) | ((v & 1) << pos);
    }

    fn row(self, r: usize) -> u64 {
        (self.bits >> (r * self.cols as usize)) & ((1 << self.cols) - 1).max(0)
    }

    fn from_rows(rows: &[u64], cols: usize) -> Self {
        let mut m = M2::zero(rows.len(), cols);
        for (r, &bits) in rows.iter().enumerate() {
            m.bits |= (bits & ((1u64 << cols) - 1)) << (r * cols);
        }
        m
    }

    fn mul(self, other: M2) -> M2 {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = M2::zero(self.rows as usize, other.cols as usize);
        for r in 0..self.rows as usize {
            for c in 0..other.cols as usize {
                let mut acc = 0u64;
                for k in 0..self.cols as usize {
                    acc ^= self.get(r, k) & other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    fn vstack(self, bottom: M2) -> M2 {
        debug_assert_eq!(self.cols, bottom.cols);
        let mut rows: Vec<u64> = (0..self.rows as usize).map(|r| self.row(r)).collect();
        rows.extend((0..bottom.rows as usize).map(|r| bottom.row(r)));
        M2::from_rows(&rows, self.cols as usize)
    }

    fn hstack(self, right: M2) -> M2 {
        debug_assert_eq!(self.rows, right.rows);
        let cols = (self.cols + right.cols) as usize;
        let rows: Vec<u64> = (0..self.rows as usize)
            .map(|r| self.row(r) | (right.row(r) << self.cols))
            .collect();
        M2::from_rows(&rows, cols)
    }

    fn column_block(self, start: usize, width: usize) -> M2 {
        let mut out = M2::zero(self.rows as usize, width);
        for r in 0..self.rows as usize {
            for c in 0..width {
                out.set(r, c, self.get(r, start + c));
            }
        }
        out
    }

    fn is_zero(self) -> bool {
        self.bits == 0
    }

    fn rank(self) -> usize {
        let rows: Vec<u64> = (0..self.rows as usize).map(|r| self.row(r)).collect();
        span_rank(&rows)
    }

    /// Kernel basis as bit-vectors over the columns.
    fn kernel_basis(self) -> Vec<u64> {
        let rows: Vec<u64> = (0..self.rows as usize).map(|r| self.row(r)).collect();
        kernel_of_rows(&rows, self.cols as usize)
    }

    /// Column-space basis as bit-vectors over the rows.
    fn column_space(self) -> Vec<u64> {
        let cols: Vec<u64> = (0..self.cols as usize)
            .map(|c| {
                let mut v = 0u64;
                for r in 0..self.rows as usize {
                    v |= self.get(r, c) << r;
                }
                v
            })
            .collect();
        canonical_basis(&cols)
    }

    fn apply(self, v: u64) -> u64 {
        let mut out = 0u64;
        for r in 0..self.rows as usize {
            out |= (((self.row(r) & v).count_ones() as u64) & 1) << r;
        }
        out
    }
}

fn reduce_span(vectors: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vectors {
        let mut cur = v;
        for &b in &basis {
            let pivot = 63 - b.leading_zeros();
            if (cur >> pivot) & 1 == 1 {
                cur ^= b;
            }
        }
        if cur != 0 {
            basis.push(cur);
        }
    }
    basis
}

/// Unique reduced basis of a span: echelon form with every pivot cleared
/// from the other rows, sorted.
fn canonical_basis(vectors: &[u64]) -> Vec<u64> {
    let mut basis = reduce_span(vectors);
    let pivots: Vec<u32> = basis.iter().map(|b| 63 - b.leading_zeros()).collect();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && (basis[j] >> pivots[i]) & 1 == 1 {
                basis[j] ^= basis[i];
            }
        }
    }
    basis.sort_unstable();
    basis
}

fn span_rank(vectors: &[u64]) -> usize {
    reduce_span(vectors).len()
}

fn span_contains(basis: &[u64], v: u64) -> bool {
    let mut cur = v;
    for &b in basis {
        let pivot = 63 - b.leading_zeros();
        if (cur >> pivot) & 1 == 1 {
            cur ^= b;
        }
    }
    cur == 0
}


/// Kernel basis of a system given by row bitmasks over `cols` unknowns.
fn kernel_of_rows(rows: &[u64], cols: usize) -> Vec<u64> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut reduced: Vec<u64> = Vec::new();
    for &orig in rows {
        let mut row = orig;
        for (p, &prow) in pivots.iter().zip(&reduced) {
            if (row >> p) & 1 == 1 {
                row ^= prow;
            }
        }
        if row != 0 {
            let p = row.trailing_zeros() as usize;
            for r in reduced.iter_mut() {
                if (*r >> p) & 1 == 1 {
                    *r ^= row;
                }
            }
            pivots.push(p);
            reduced.push(row);
        }
    }
    let mut kernel = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = 1u64 << free;
        for (p, row) in pivots.iter().zip(&reduced) {
            if (row >> free) & 1 == 1 {
                v |= 1 << p;
            }
        }
        kernel.push(v);
    }
    kernel
}

/// All invertible matrices of the given size over F_2.
fn gl_elements(d: usize) -> Vec<M2> {
    let mut out = Vec::new();
    let entries = d * d;
    for bits in 0..1u64 << entries {
        let m = M2 {
            rows: d as u8,
            cols: d as u8,
            bits,
        };
        if m.rank() == d {
            out.push(m);
        }
    }
    out
}

/// Subspaces of the span of `basis` (ambient bit-vectors) with dimension at
/// most `max_dim`, each returned as a reduced basis.
fn subspaces_within(basis: &[u64], max_dim: usize) -> Vec<Vec<u64>> {
    let dim = basis.len();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut out = vec![vec![]];
    if max_dim == 0 || dim == 0 {
        return out;
    }
    // enumerate all subsets of coordinate space F_2^dim as generator sets
    let points: Vec<u64> = (1..1u64 << dim)
        .map(|coords| {
            let mut v = 0u64;
            for (i, &b) in basis.iter().enumerate() {
                if (coords >> i) & 1 == 1 {
                    v ^= b;
                }
            }
            v
        })
        .collect();
    let k_max = max_dim.min(dim);
    let mut stack: Vec<Vec<u64>> = vec![vec![]];
    while let Some(gens) = stack.pop() {
        for &p in &points {
            if span_contains(&gens, p) {
                continue;
            }
            let mut next = gens.clone();
            next.push(p);
            let reduced = canonical_basis(&next);
            if seen.insert(reduced.clone()) {
                out.push(reduced.clone());
                if reduced.len() < k_max {
                    stack.push(reduced);
                }
            }
        }
    }
    out.retain(|s| s.len() <= k_max);
    out
}

// ---------------------------------------------------------------------------
// case (b): exhaustive corner sweep

struct DimVec {
    d: [usize; 8],
}

impl DimVec {
    fn canonical_under_axes(&self) -> bool {
        // lexicographically minimal under the six axis permutations
        let key = |perm: &[usize; 3]| -> Vec<usize> {
            let map_mask = |v: u32| -> usize {
                let mut out = 0u32;
                for (axis, &to) in perm.iter().enumerate() {
                    if v & (1 << axis) != 0 {
                        out |= 1 << to;
                    }
                }
                out as usize
            };
            (0..8u32).map(|v| self.d[map_mask(v)]).collect()
        };
        let id_key = key(&[0, 1, 2]);
        for perm in [
            [0usize, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            if key(&perm) < id_key {
                return false;
            }
        }
        true
    }
}

/// Canonical representatives of corner-map tuples `(a_1, a_2, a_4)` with the
/// stacked map injective, under base change at the corner and the singleton
/// layers. Cached per dimension shape.
fn canonical_corner_maps(d0: usize, ds: [usize; 3]) -> Vec<[M2; 3]> {
    let gl0 = gl_elements(d0);
    let gls: Vec<Vec<M2>> = ds.iter().map(|&d| gl_elements(d)).collect();
    let entry_bits: usize = ds.iter().map(|&d| d * d0).sum();
    let mut canonical: BTreeSet<(u64, u64, u64)> = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0..1u64 << entry_bits {
        let mut offset = 0usize;
        let mats: Vec<M2> = ds
            .iter()
            .map(|&d| {
                let width = d * d0;
                let m = M2 {
                    rows: d as u8,
                    cols: d0 as u8,
                    bits: (bits >> offset) & ((1u64 << width) - 1).max(0),
                };
                offset += width;
                m
            })
            .collect();
        // injectivity of the stacked map
        let stacked_rows: Vec<u64> = mats
            .iter()
            .flat_map(|m| (0..m.rows as usize).map(move |r| m.row(r)))
            .collect();
        let stacked = M2::from_rows(&stacked_rows, d0);
        if stacked.rank() != d0 {
            continue;
        }
        // orbit minimum under (g0, g1, g2, g4)
        let mut best = (u64::MAX, u64::MAX, u64::MAX);
        for g0 in &gl0 {
            let base: Vec<M2> = mats.iter().map(|m| m.mul(*g0)).collect();
            for g1 in &gls[0] {
                let b1 = g1.mul(base[0]);
                for g2 in &gls[1] {
                    let b2 = g2.mul(base[1]);
                    for g4 in &gls[2] {
                        let b4 = g4.mul(base[2]);
                        let cand = (b1.bits, b2.bits, b4.bits);
                        if cand < best {
                            best = cand;
                        }
                    }
                }
            }
        }
        if best == (mats[0].bits, mats[1].bits, mats[2].bits) && canonical.insert(best) {
            out.push([mats[0], mats[1], mats[2]]);
        }
    }
    out
}

/// Exhaustive sweep over valid representations with both corners nonzero and
/// all dimensions at most `dim_bound`, up to isomorphism. Every enumerated
/// representation either splits off a simple summand (pruned), has a nonzero
/// corner composite (splits off the constant representation), or is tested
/// for indecomposability in full.
pub fn check_case_b(dim_bound: usize, triple_budget: u64, seed: u64) -> Result<CaseBReport> {
    if !(1..=2).contains(&dim_bound) {
        return Err(Error::InvalidInput(
            "the exhaustive corner sweep supports dim_bound 1 or 2".into(),
        ));
    }
    let b = dim_bound;
    // canonical dimension vectors under the axis symmetries
    let mut dim_vecs: Vec<[usize; 8]> = Vec::new();
    for d0 in 1..=b {
        for d7 in 1..=b {
            for d1 in 0..=b {
                for d2 in 0..=b {
                    for d4 in 0..=b {
                        for d3 in 0..=b {
                            for d5 in 0..=b {
                                for d6 in 0..=b {
                                    let d = [d0, d1, d2, d3, d4, d5, d6, d7];
                                    if (DimVec { d }).canonical_under_axes() {
                                        dim_vecs.push(d);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    dim_vecs.sort_unstable();

    let per_vector_budget = (triple_budget / dim_vecs.len().max(1) as u64).saturating_add(1);
    let results: Vec<SweepOutcome> = dim_vecs
        .par_iter()
        .map(|d| sweep_dim_vector(*d, per_vector_budget, seed))
        .collect::<Result<Vec<_>>>()?;

    let mut report = CaseBReport {
        dim_bound,
        complete: true,
        dim_vectors_scanned: dim_vecs.len(),
        triples_enumerated: 0,
        corner_split_reps: 0,
        survivors_tested: 0,
        projective_found: false,
        extra_indecomposables: Vec::new(),
        corner_split_samples: 0,
        corner_split_verified: 0,
    };
    let mut split_samples: Vec<QuiverRep<Fp>> = Vec::new();
    for r in results {
        report.complete &= r.complete;
        report.triples_enumerated += r.triples;
        report.corner_split_reps += r.corner_splits;
        report.survivors_tested += r.survivors;
        report.projective_found |= r.projective_found;
        report
            .extra_indecomposables
            .extend(r.extra_indecomposables);
        split_samples.extend(r.corner_split_witnesses);
    }
    // verify on a sample that nonzero corner composites really split off the
    // constant representation
    let f = Fp::new(2).unwrap();
    let constant = QuiverRep::projective(f, 3, 0);
    for rep in split_samples.iter().take(60) {
        report.corner_split_samples += 1;
        let parts = decompose(rep, seed)?;
        if parts
            .iter()
            .any(|p| isomorphic(p, &constant, seed).unwrap_or(false))
        {
            report.corner_split_verified += 1;
        }
    }
    Ok(report)
}

struct SweepOutcome {
    complete: bool,
    triples: u64,
    corner_splits: u64,
    survivors: u64,
    projective_found: bool,
    extra_indecomposables: Vec<Vec<usize>>,
    corner_split_witnesses: Vec<QuiverRep<Fp>>,
    witness_reps: Vec<QuiverRep<Fp>>,
    keep_reps: bool,
}


/// Debug hook: sweep one dimension vector and return the claimed
/// indecomposables themselves.
pub fn sweep_dim_vector_debug(
    d: [usize; 8],
    seed: u64,
) -> Result<(u64, u64, Vec<QuiverRep<Fp>>)> {
    let out = sweep_dim_vector_impl(d, u64::MAX, seed, true)?;
    Ok((out.triples, out.survivors, out.witness_reps))
}
fn sweep_dim_vector(d: [usize; 8], budget: u64, seed: u64) -> Result<SweepOutcome> {
    sweep_dim_vector_impl(d, budget, seed, false)
}

fn sweep_dim_vector_impl(d: [usize; 8], budget: u64, seed: u64, keep_reps: bool) -> Result<SweepOutcome> {
    let f = Fp::new(2).unwrap();
    let mut out = SweepOutcome {
        complete: true,
        triples: 0,
        corner_splits: 0,
        survivors: 0,
        projective_found: false,
        extra_indecomposables: Vec::new(),
        corner_split_witnesses: Vec::new(),
        witness_reps: Vec::new(),
        keep_reps,
    };
    let d0 = d[0];
    let ds = [d[1], d[2], d[4]];
    // a-layer: canonical injective corner tuples (cached by shape)
    let corner_maps = corner_cache(d0, ds);
    if corner_maps.is_empty() {
        return Ok(out);
    }
    // doubleton data: subsets of each doubleton in fixed order
    let parts: [(u32, u32); 3] = [(1, 2), (1, 4), (2, 4)];
    let ddims = [d[3], d[5], d[6]];
    let sdim = |mask: u32| -> usize { d[mask as usize] };

    for a in corner_maps.iter() {
        let a_of = |mask: u32| -> M2 {
            match mask {
                1 => a[0],
                2 => a[1],
                _ => a[2],
            }
        };
        // per doubleton: row space constraint and admissible stacks
        let mut m_choices: Vec<Vec<M2>> = Vec::new();
        for (k, &(s1, s2)) in parts.iter().enumerate() {
            let amb = sdim(s1) + sdim(s2);
            let dd = ddims[k];
            if dd == 0 {
                m_choices.push(vec![M2::zero(0, amb)]);
                continue;
            }
            // rows r with r . [a_{s1}; a_{s2}] = 0
            let constraint = a_of(s1).vstack(a_of(s2));
            let null_rows = constraint_left_null(constraint);
            let subs = subspaces_within(&null_rows, dd);
            let mut choices = Vec::new();
            for basis in subs {
                let mut rows: Vec<u64> = basis.clone();
                rows.resize(dd, 0);
                choices.push(M2::from_rows(&rows, amb));
            }
            m_choices.push(choices);
        }
        // iterate over products of the three independent m-stacks
        let mut idx = [0usize; 3];
        'mloop: loop {
            let stacks = [
                m_choices[0][idx[0]],
                m_choices[1][idx[1]],
                m_choices[2][idx[2]],
            ];
            if middle_prune_passes(&d, &parts, &stacks, a_of) {
                scan_t_layer(
                    &f, &d, &parts, &ddims, a_of, &stacks, budget, seed, &mut out,
                )?;
                if !out.complete {
                    return Ok(out);
                }
            }
            // odometer over the three doubleton choices
            let mut k = 0;
            loop {
                if k == 3 {
                    break 'mloop;
                }
                idx[k] += 1;
                if idx[k] < m_choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
    Ok(out)
}

fn corner_cache(d0: usize, ds: [usize; 3]) -> Vec<[M2; 3]> {
    use std::sync::OnceLock;
    type Cache = std::sync::Mutex<BTreeMap<(usize, [usize; 3]), Vec<[M2; 3]>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| std::sync::Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry((d0, ds))
        .or_insert_with(|| canonical_corner_maps(d0, ds))
        .clone()
}

/// Left null space of a stacked matrix: the row space available to maps out
/// of the corner-constrained doubleton.
fn constraint_left_null(constraint: M2) -> Vec<u64> {
    // rows r (length constraint.rows) with r^T * constraint = 0, i.e. the
    // kernel of the transpose
    let mut transpose = M2::zero(constraint.cols as usize, constraint.rows as usize);
    for r in 0..constraint.rows as usize {
        for c in 0..constraint.cols as usize {
            transpose.set(c, r, constraint.get(r, c));
        }
    }
    transpose.kernel_basis()
}

/// No singleton has a direction killed by both outgoing maps yet missed by
/// the corner map (such a direction splits off the simple there).
fn middle_prune_passes(
    d: &[usize; 8],
    parts: &[(u32, u32); 3],
    stacks: &[M2; 3],
    a_of: impl Fn(u32) -> M2,
) -> bool {
    for &s in &SINGLES {
        let dsng = d[s as usize];
        if dsng == 0 {
            continue;
        }
        // stack the maps out of s (extracted from the doubleton stacks)
        let mut rows: Vec<u64> = Vec::new();
        for (k, &(s1, s2)) in parts.iter().enumerate() {
            if s != s1 && s != s2 {
                continue;
            }
            let offset = if s == s1 { 0 } else { d[s1 as usize] };
            let block = stacks[k].column_block(offset, dsng);
            rows.extend((0..block.rows as usize).map(|r| block.row(r)));
        }
        let out_stack = M2::from_rows(&rows, dsng);
        let kernel = out_stack.kernel_basis();
        if kernel.is_empty() {
            continue;
        }
        let image = a_of(s).column_space();
        if kernel.iter().any(|&v| !span_contains(&image, v)) {
            return false;
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn scan_t_layer(
    f: &Fp,
    d: &[usize; 8],
    parts: &[(u32, u32); 3],
    ddims: &[usize; 3],
    a_of: impl Fn(u32) -> M2 + Copy,
    stacks: &[M2; 3],
    budget: u64,
    seed: u64,
    out: &mut SweepOutcome,
) -> Result<()> {
    let d7 = d[7];
    let unknowns: usize = ddims.iter().map(|&dd| d7 * dd).sum();
    let offsets: [usize; 3] = [0, d7 * ddims[0], d7 * (ddims[0] + ddims[1])];
    // top relations: for each singleton s with doubletons D_a, D_b:
    // t_a m^s_a = t_b m^s_b
    let mut rows: Vec<u64> = Vec::new();
    for &s in &SINGLES {
        let dsng = d[s as usize];
        if dsng == 0 {
            continue;
        }
        let touching: Vec<usize> = (0..3)
            .filter(|&k| parts[k].0 == s || parts[k].1 == s)
            .collect();
        debug_assert_eq!(touching.len(), 2);
        let (ka, kb) = (touching[0], touching[1]);
        let m_of = |k: usize| -> M2 {
            let (s1, _) = parts[k];
            let offset = if s == s1 { 0 } else { d[s1 as usize] };
            stacks[k].column_block(offset, dsng)
        };
        let (ma, mb) = (m_of(ka), m_of(kb));
        // equations over entries of t_a, t_b: row (r, c) for r < d7, c < dsng
        for r in 0..d7 {
            for c in 0..dsng {
                let mut row = 0u64;
                for k in 0..ddims[ka] {
                    if ma.get(k, c) == 1 {
                        row ^= 1 << (offsets[ka] + r * ddims[ka] + k);
                    }
                }
                for k in 0..ddims[kb] {
                    if mb.get(k, c) == 1 {
                        row ^= 1 << (offsets[kb] + r * ddims[kb] + k);
                    }
                }
                if row != 0 {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if unknowns == 0 {
        vec![]
    } else {
        kernel_of_rows(&rows, unknowns)
    };
    let kdim = kernel.len();
    // iterate the solution space
    for combo in 0..1u64 << kdim {
        let mut bits = 0u64;
        for (i, &kv) in kernel.iter().enumerate() {
            if (combo >> i) & 1 == 1 {
                bits ^= kv;
            }
        }
        out.triples += 1;
        if out.triples > budget {
            out.complete = false;
            return Ok(());
        }
        let ts: [M2; 3] = [
            M2 {
                rows: d7 as u8,
                cols: ddims[0] as u8,
                bits: bits & ((1u64 << (d7 * ddims[0])) - 1).max(0),
            },
            M2 {
                rows: d7 as u8,
                cols: ddims[1] as u8,
                bits: (bits >> offsets[1]) & ((1u64 << (d7 * ddims[1])) - 1).max(0),
            },
            M2 {
                rows: d7 as u8,
                cols: ddims[2] as u8,
                bits: (bits >> offsets[2]) & ((1u64 << (d7 * ddims[2])) - 1).max(0),
            },
        ];
        // corner-space surjectivity: otherwise the simple at X splits off
        let mut t_rows_cols: Vec<u64> = Vec::new();
        for r in 0..d7 {
            let mut row = 0u64;
            let mut shift = 0usize;
            for (k, t) in ts.iter().enumerate() {
                row |= t.row(r) << shift;
                shift += ddims[k];
            }
            t_rows_cols.push(row);
        }
        let t_stacked = M2::from_rows(&t_rows_cols, ddims.iter().sum::<usize>());
        if t_stacked.rank() != d7 {
            continue;
        }
        // doubleton dead directions: kernel of t_D outside the incoming image
        let mut pruned = false;
        for k in 0..3 {
            if ddims[k] == 0 {
                continue;
            }
            let kern = ts[k].kernel_basis();
            if kern.is_empty() {
                continue;
            }
            let image = stacks[k].column_space();
            if kern.iter().any(|&v| !span_contains(&image, v)) {
                pruned = true;
                break;
            }
        }
        if pruned {
            continue;
        }
        // corner composite along any populated chain
        let composite = corner_composite(d, parts, ddims, a_of, stacks, &ts);
        if !composite.is_zero() {
            out.corner_splits += 1;
            if d.iter().all(|&x| x == 1) {
                out.projective_found = true;
            } else if out.corner_split_witnesses.len() < 2 {
                out.corner_split_witnesses
                    .push(assemble_rep(f, d, parts, ddims, a_of, stacks, &ts)?);
            }
            continue;
        }
        // survivor: full indecomposability test
        out.survivors += 1;
        let rep = assemble_rep(f, d, parts, ddims, a_of, stacks, &ts)?;
        if !rep.check_relations() {
            return Err(Error::DecompositionFailed(
                "sweep produced a representation violating the relations".into(),
            ));
        }
        if is_indecomposable(&rep, seed)? == Indecomposability::Yes {
            out.extra_indecomposables.push(rep.dim_vector());
            if out.keep_reps {
                out.witness_reps.push(rep);
            }
        }
    }
    Ok(())
}

fn corner_composite(
    d: &[usize; 8],
    parts: &[(u32, u32); 3],
    ddims: &[usize; 3],
    a_of: impl Fn(u32) -> M2,
    stacks: &[M2; 3],
    ts: &[M2; 3],
) -> M2 {
    for (k, &(s1, s2)) in parts.iter().enumerate() {
        if ddims[k] == 0 {
            continue;
        }
        for (s, offset) in [(s1, 0usize), (s2, d[s1 as usize])] {
            if d[s as usize] == 0 {
                continue;
            }
            let m = stacks[k].column_block(offset, d[s as usize]);
            return ts[k].mul(m).mul(a_of(s));
        }
    }
    M2::zero(d[7], d[0])
}

fn assemble_rep(
    f: &Fp,
    d: &[usize; 8],
    parts: &[(u32, u32); 3],
    ddims: &[usize; 3],
    a_of: impl Fn(u32) -> M2,
    stacks: &[M2; 3],
    ts: &[M2; 3],
) -> Result<QuiverRep<Fp>> {
    let to_mat = |m: M2| -> Mat<Fp> {
        Mat::from_fn(*f, m.rows as usize, m.cols as usize, |r, c| m.get(r, c))
    };
    let mut maps: BTreeMap<(u32, u32), Mat<Fp>> = BTreeMap::new();
    for &s in &SINGLES {
        maps.insert((0, s), to_mat(a_of(s)));
    }
    for (k, &(s1, s2)) in parts.iter().enumerate() {
        let dmask = DOUBLES[k];
        let m1 = stacks[k].column_block(0, d[s1 as usize]);
        let m2 = stacks[k].column_block(d[s1 as usize], d[s2 as usize]);
        maps.insert((s1, dmask), to_mat(m1));
        maps.insert((s2, dmask), to_mat(m2));
        maps.insert((dmask, 7), to_mat(ts[k]));
        let _ = ddims;
    }
    QuiverRep::new(3, *f, d.to_vec(), maps)
}

// ---------------------------------------------------------------------------
// case (c)

pub fn check_case_c(samples: usize, seed: u64) -> Result<CaseCReport> {
    let f = Fp::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0ffee);
    let mut report = CaseCReport {
        samples,
        indecomposables_found: 0,
        with_all_nine_injective: 0,
        degenerate_exceptions: 0,
        nondegenerate_exceptions: 0,
        max_singleton_dim: 0,
        max_doubleton_dim: 0,
    };
    for _ in 0..samples {
        let mut dims = vec![0usize; 8];
        for &v in SINGLES.iter().chain(DOUBLES.iter()) {
            dims[v as usize] = rng.gen_range(0..=2);
        }
        dims[7] = rng.gen_range(1..=2);
        let rep = QuiverRep::random_valid_with_dims(f, 3, &dims, &mut rng)?;
        for part in decompose(&rep, seed)? {
            if part.dims()[7] == 0 || part.dims()[0] != 0 {
                continue;
            }
            report.indecomposables_found += 1;
            for &s in &SINGLES {
                report.max_singleton_dim = report.max_singleton_dim.max(part.dims()[s as usize]);
            }
            for &dd in &DOUBLES {
                report.max_doubleton_dim = report.max_doubleton_dim.max(part.dims()[dd as usize]);
            }
            // the nine middle maps: singleton -> doubleton and doubleton -> X
            let mut all_injective = true;
            let mut degenerate = false;
            let mut check = |m: &Mat<Fp>| {
                if m.cols() == 0 {
                    return;
                }
                if m.rows() == 0 {
                    degenerate = true;
                    all_injective = false;
                } else if m.rank() < m.cols() {
                    all_injective = false;
                }
            };
            for &s in &SINGLES {
                for &dd in &DOUBLES {
                    if s & !dd == 0 {
                        check(part.map(s, dd));
                    }
                }
            }
            for &dd in &DOUBLES {
                check(part.map(dd, 7));
            }
            if all_injective {
                report.with_all_nine_injective += 1;
            } else if degenerate {
                report.degenerate_exceptions += 1;
            } else {
                report.nondegenerate_exceptions += 1;
            }
        }
    }
    Ok(report)
}
