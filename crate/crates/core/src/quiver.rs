//! The Hasse quiver of the Boolean lattice bound by parallelogram relations,
//! its Tits form, and box-restricted weak-positivity searches.
//!
//! Vertices are subset masks; arrows add one element; one relation generator
//! per two-step interval identifies the two extreme paths through it. Path
//! normal forms collapse every path to its endpoint interval, which realizes
//! the quotient as the incidence algebra on the same ground set.

use crate::subset::SubsetMask;
use crate::{Error, Result};
use num::BigRational;
use serde::Serialize;
use std::collections::BTreeMap;

/// One relation generator: the two length-two paths through the interval
/// `[start, end]`, via `mid_low < mid_high`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub start: u32,
    pub end: u32,
    pub mid_low: u32,
    pub mid_high: u32,
}

/// The bound quiver `(Q, I)` on the subsets of an `n`-element set.
#[derive(Clone, Debug)]
pub struct BoundQuiver {
    n: usize,
    arrows: Vec<(u32, u32)>,
    arrow_index: BTreeMap<(u32, u32), usize>,
    relations: Vec<Relation>,
}

pub fn hasse_quiver(n: usize) -> Result<BoundQuiver> {
    if n > crate::incidence::MAX_GROUND_SET {
        return Err(Error::CapExceeded {
            cap: crate::incidence::MAX_GROUND_SET,
        });
    }
    let full = SubsetMask::full(n);
    let mut arrows = Vec::new();
    for y in full.subsets() {
        for i in 0..n {
            if !y.contains(i) {
                arrows.push((y.0, y.with(i).0));
            }
        }
    }
    arrows.sort_unstable();
    let arrow_index = arrows
        .iter()
        .enumerate()
        .map(|(k, &a)| (a, k))
        .collect();
    let mut relations = Vec::new();
    for y in full.subsets() {
        let rest = y.complement_in(full);
        for i in rest.iter() {
            for j in rest.iter() {
                if i < j {
                    relations.push(Relation {
                        start: y.0,
                        end: y.with(i).with(j).0,
                        mid_low: y.with(i).0.min(y.with(j).0),
                        mid_high: y.with(i).0.max(y.with(j).0),
                    });
                }
            }
        }
    }
    relations.sort_by_key(|r| (r.start, r.end));
    Ok(BoundQuiver {
        n,
        arrows,
        arrow_index,
        relations,
    })
}

impl BoundQuiver {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.n
    }

    pub fn arrows(&self) -> &[(u32, u32)] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn arrow_id(&self, src: u32, dst: u32) -> Option<usize> {
        self.arrow_index.get(&(src, dst)).copied()
    }

    /// Normal form of a path given as a vertex sequence: its endpoint pair.
    /// Every pair of parallel paths is identified by the relations, so the
    /// interval is a complete invariant.
    pub fn path_normal_form(&self, vertices: &[u32]) -> Result<(u32, u32)> {
        let Some(&start) = vertices.first() else {
            return Err(Error::InvalidPath("empty vertex sequence".into()));
        };
        if start >= self.vertex_count() as u32 {
            return Err(Error::InvalidPath(format!("vertex {start} out of range")));
        }
        for pair in vertices.windows(2) {
            if self.arrow_id(pair[0], pair[1]).is_none() {
                return Err(Error::InvalidPath(format!(
                    "no arrow {} -> {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok((start, *vertices.last().unwrap()))
    }

    /// All monotone paths between two vertices, as vertex sequences.
    pub fn paths_between(&self, start: u32, end: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        if start & !end != 0 {
            return out;
        }
        let mut stack = vec![vec![start]];
        while let Some(path) = stack.pop() {
            let last = *path.last().unwrap();
            if last == end {
                out.push(path);
                continue;
            }
            for i in SubsetMask(end & !last).iter() {
                let mut next = path.clone();
                next.push(last | (1 << i));
                stack.push(next);
            }
        }
        out.sort();
        out
    }

    /// Whether all parallel paths from `start` to `end` are connected by
    /// elementary parallelogram swaps (single relation applications).
    pub fn parallel_paths_single_class(&self, start: u32, end: u32) -> bool {
        let paths = self.paths_between(start, end);
        if paths.len() <= 1 {
            return true;
        }
        let index: BTreeMap<&Vec<u32>, usize> =
            paths.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let mut reached = vec![false; paths.len()];
        let mut stack = vec![0usize];
        reached[0] = true;
        while let Some(k) = stack.pop() {
            let path = &paths[k];
            for w in 0..path.len().saturating_sub(2) {
                let (a, b, c) = (path[w], path[w + 1], path[w + 2]);
                // b = a ∪ {i}; the other midpoint of [a, c] is a | (c & !b)
                let alt = a | (c & !b);
                if alt != b {
                    let mut swapped = path.clone();
                    swapped[w + 1] = alt;
                    if let Some(&idx) = index.get(&swapped) {
                        if !reached[idx] {
                            reached[idx] = true;
                            stack.push(idx);
                        }
                    }
                }
            }
        }
        reached.iter().all(|&r| r)
    }

    /// Deterministic DOT rendering: vertices in mask order, arrows sorted,
    /// relation generators as comments.
    pub fn emit_dot(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "digraph boolean_hasse_{} {{", self.n).unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        for v in 0..self.vertex_count() as u32 {
            writeln!(out, "  v{} [label=\"{}\"];", v, SubsetMask(v)).unwrap();
        }
        for &(src, dst) in &self.arrows {
            writeln!(
                out,
                "  v{src} -> v{dst} [label=\"α_{},{}\"];",
                SubsetMask(src),
                SubsetMask(dst)
            )
            .unwrap();
        }
        for r in &self.relations {
            writeln!(
                out,
                "  // relation: {} -> {} via {} equals via {}",
                SubsetMask(r.start),
                SubsetMask(r.end),
                SubsetMask(r.mid_low),
                SubsetMask(r.mid_high)
            )
            .unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// The Tits form of the bound quiver: `q(x) = Σ x_Y² − Σ_covers x_Y x_Z +
/// Σ_{2-intervals} x_Y x_Z`, kept both as pair lists for fast integer
/// evaluation and as a symmetric rational Gram matrix.
#[derive(Clone, Debug)]
pub struct TitsForm {
    n: usize,
    cover_pairs: Vec<(usize, usize)>,
    interval_pairs: Vec<(usize, usize)>,
}

pub fn tits_form(n: usize) -> Result<TitsForm> {
    let quiver = hasse_quiver(n)?;
    let cover_pairs = quiver
        .arrows()
        .iter()
        .map(|&(y, z)| (y as usize, z as usize))
        .collect();
    let interval_pairs = quiver
        .relations()
        .iter()
        .map(|r| (r.start as usize, r.end as usize))
        .collect();
    Ok(TitsForm {
        n,
        cover_pairs,
        interval_pairs,
    })
}

impl TitsForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.n
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        assert_eq!(x.len(), self.vertex_count());
        let mut q: i64 = x.iter().map(|&v| v * v).sum();
        for &(a, b) in &self.cover_pairs {
            q -= x[a] * x[b];
        }
        for &(a, b) in &self.interval_pairs {
            q += x[a] * x[b];
        }
        q
    }

    /// Symmetric Gram matrix with `q(x) = x^T G x`.
    pub fn gram(&self) -> Vec<Vec<BigRational>> {
        let m = self.vertex_count();
        let half = BigRational::new(1.into(), 2.into());
        let one = BigRational::from_integer(1.into());
        let mut g = vec![vec![BigRational::from_integer(0.into()); m]; m];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = one.clone();
        }
        for &(a, b) in &self.cover_pairs {
            g[a][b] -= &half;
            g[b][a] -= &half;
        }
        for &(a, b) in &self.interval_pairs {
            g[a][b] += &half;
            g[b][a] += &half;
        }
        g
    }
}

/// Outcome of a box-restricted scan for negative values.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub bound: i64,
    /// Points covered, whether evaluated or excluded by a sound lower bound.
    pub covered: u64,
    pub total: u64,
    pub complete: bool,
    pub violations: Vec<Vec<i64>>,
    pub min_value: i64,
    pub min_vector: Vec<i64>,
}

struct SearchState<'a> {
    form: &'a TitsForm,
    bound: i64,
    budget: u64,
    nodes: u64,
    covered: u64,
    violations: Vec<Vec<i64>>,
    min_value: i64,
    min_vector: Vec<i64>,
    /// adjacency with signed coefficients; adj[i] = (j, c) over pairs {i, j}
    adj: Vec<Vec<(usize, i64)>>,
    neg_pairs: Vec<(usize, usize)>,
    start: Vec<i64>,
    start_active: bool,
    cursor: Vec<i64>,
}

impl SearchState<'_> {
    /// Depth-first scan in lexicographic order. Returns false when the node
    /// budget ran out; `x[..k]` then holds the prefix of the next unviewed
    /// point.
    fn dfs(&mut self, k: usize, partial: i64, x: &mut Vec<i64>) -> bool {
        let m = self.form.vertex_count();
        self.nodes += 1;
        if self.nodes > self.budget {
            // next unvisited point: this prefix, completed by the pending
            // start suffix while still on the leftmost path, zeros otherwise
            self.cursor = x.clone();
            if self.start_active {
                self.cursor.extend_from_slice(&self.start[k..]);
            } else {
                self.cursor.resize(m, 0);
            }
            return false;
        }
        if k == m {
            self.covered += 1;
            if partial < self.min_value {
                self.min_value = partial;
                self.min_vector = x.clone();
            }
            if partial < 0 {
                self.violations.push(x.clone());
            }
            return true;
        }
        // sound lower bound over all completions of the prefix
        if !self.start_active {
            let mut lb = partial;
            for i in k..m {
                let mut a = 0i64;
                for &(j, c) in &self.adj[i] {
                    if j < k {
                        a += c * x[j];
                    }
                }
                // min over t in [0, bound] of t^2 + a t
                let mut best = 0i64;
                for t in [0, self.bound, (-a / 2).clamp(0, self.bound)] {
                    best = best.min(t * t + a * t);
                }
                lb += best;
            }
            let open_neg = self
                .neg_pairs
                .iter()
                .filter(|&&(a, b)| a >= k && b >= k)
                .count() as i64;
            lb -= open_neg * self.bound * self.bound;
            if lb >= 0 {
                self.covered += ((self.bound + 1) as u64).pow((m - k) as u32);
                return true;
            }
        }
        let from = if self.start_active { self.start[k] } else { 0 };
        for v in from..=self.bound {
            if self.start_active && v > from {
                self.start_active = false;
            }
            let mut delta = v * v;
            for &(j, c) in &self.adj[k] {
                if j < k {
                    delta += c * v * x[j];
                }
            }
            x.push(v);
            let ok = self.dfs(k + 1, partial + delta, x);
            if !ok {
                return false;
            }
            x.pop();
        }
        if self.start_active {
            self.start_active = false;
        }
        true
    }
}

/// Exhaustively scan `[0, bound]^{2^n}` for negative Tits-form values.
/// An empty violation list certifies box-level weak positivity. The scan is
/// lexicographic with sound partial-sum pruning; when the node budget runs
/// out a `BudgetExceeded` error carries a resume cursor.
pub fn weak_positivity_search(
    form: &TitsForm,
    bound: i64,
    budget: u64,
    resume: Option<&str>,
) -> Result<SearchReport> {
    if bound < 0 {
        return Err(Error::InvalidInput("bound must be nonnegative".into()));
    }
    let m = form.vertex_count();
    let total = ((bound + 1) as u64)
        .checked_pow(m as u32)
        .ok_or_else(|| Error::InvalidInput("box too large to enumerate".into()))?;
    let start: Vec<i64> = match resume {
        None => vec![0; m],
        Some(s) => {
            let vals: Vec<i64> = s
                .split(',')
                .map(|t| t.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidInput(format!("bad resume cursor '{s}'")))?;
            if vals.len() != m || vals.iter().any(|&v| v < 0 || v > bound) {
                return Err(Error::InvalidInput(format!("bad resume cursor '{s}'")));
            }
            vals
        }
    };
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in &form.cover_pairs {
        adj[a].push((b, -1));
        adj[b].push((a, -1));
    }
    for &(a, b) in &form.interval_pairs {
        adj[a].push((b, 1));
        adj[b].push((a, 1));
    }
    let neg_pairs = form.cover_pairs.clone();
    let mut state = SearchState {
        form,
        bound,
        budget,
        nodes: 0,
        covered: 0,
        violations: Vec::new(),
        min_value: i64::MAX,
        min_vector: vec![],
        adj,
        neg_pairs,
        start,
        start_active: resume.is_some(),
        cursor: vec![],
    };
    let mut x = Vec::with_capacity(m);
    let complete = state.dfs(0, 0, &mut x);
    state.violations.sort();
    if !complete {
        let cursor: Vec<String> = state.cursor.iter().map(|v| v.to_string()).collect();
        return Err(Error::BudgetExceeded {
            scanned: state.covered,
            resume: cursor.join(","),
        });
    }
    Ok(SearchReport {
        n: form.n,
        bound,
        covered: state.covered,
        total,
        complete,
        violations: state.violations,
        min_value: if state.min_value == i64::MAX {
            0
        } else {
            state.min_value
        },
        min_vector: state.min_vector,
    })
}

/// The paper-figure vertex numbering for `n = 3`: position `k` is the mask of
/// figure vertex `k + 1`.
pub const N3_FIGURE_MASKS: [u32; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

/// The profile vector on the 4-cube taking values (0, 1, 2, 1, 0) by level.
pub fn n4_level_profile() -> Vec<i64> {
    (0u32..16)
        .map(|y| match y.count_ones() {
            0 | 4 => 0,
            1 | 3 => 1,
            _ => 2,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SubstitutionReport {
    pub samples: usize,
    /// max |2 q(x) − 2 rhs(x)| over the sample; the identity predicts 0.
    pub max_discrepancy: i64,
    pub nonnegative_samples: usize,
    pub min_q_on_nonnegative: Option<i64>,
    /// The rewritten expression has coupled variables (the y_i satisfy a
    /// linear relation), so only the substitution identity itself and
    /// box-constrained nonnegativity are checked here.
    pub unconstrained_claim_checked: bool,
    pub figure_masks: Vec<u32>,
}

/// Check the `n = 3` rewriting of the Tits form on random integer vectors
/// with coordinates in `[-10, 10]`.
///
/// With figure numbering `x_1..x_8`, the substitution is `x = x_1 - x_8`,
/// `z = x_8`, `y_1 = x_2-x_5`, `y_2 = x_2-x_6`, `y_3 = x_3-x_5`,
/// `y_4 = x_3-x_7`, `y_5 = x_4-x_6`, `y_6 = x_4-x_7`, and the claim is
/// `q = x² + 2xz + 2z² − ½·x·Σy_i + ½·Σy_i²`.
pub fn substitution_report(samples: usize, seed: u64) -> Result<SubstitutionReport> {
    use rand::Rng;
    use rand::SeedableRng;
    let form = tits_form(3)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut max_discrepancy = 0i64;
    let mut nonneg = 0usize;
    let mut min_q_nonneg: Option<i64> = None;
    let eval_pair = |x: &[i64]| -> (i64, i64) {
        let q = form.eval(x);
        let fig: Vec<i64> = N3_FIGURE_MASKS.iter().map(|&m| x[m as usize]).collect();
        let (x1, x2, x3, x4, x5, x6, x7, x8) =
            (fig[0], fig[1], fig[2], fig[3], fig[4], fig[5], fig[6], fig[7]);
        let (xx, zz) = (x1 - x8, x8);
        let ys = [x2 - x5, x2 - x6, x3 - x5, x3 - x7, x4 - x6, x4 - x7];
        let sum_y: i64 = ys.iter().sum();
        let sum_y2: i64 = ys.iter().map(|y| y * y).sum();
        let rhs2 = 2 * xx * xx + 4 * xx * zz + 4 * zz * zz - xx * sum_y + sum_y2;
        (2 * q, rhs2)
    };
    // frozen special points: all-ones gives 2, the extreme unit vectors 1
    let mut all_ones = vec![1i64; 8];
    let (q2, rhs2) = eval_pair(&all_ones);
    if q2 != 4 || rhs2 != 4 {
        return Err(Error::InvalidInput("all-ones check failed".into()));
    }
    all_ones = vec![0; 8];
    all_ones[0] = 1;
    let (q2, rhs2) = eval_pair(&all_ones);
    if q2 != 2 || rhs2 != 2 {
        return Err(Error::InvalidInput("unit-vector check failed".into()));
    }
    for _ in 0..samples {
        let x: Vec<i64> = (0..8).map(|_| rng.gen_range(-10i64..=10)).collect();
        let (q2, rhs2) = eval_pair(&x);
        max_discrepancy = max_discrepancy.max((q2 - rhs2).abs());
        if x.iter().all(|&v| v >= 0) {
            nonneg += 1;
            let q = q2 / 2;
            min_q_nonneg = Some(min_q_nonneg.map_or(q, |m: i64| m.min(q)));
        }
    }
    Ok(SubstitutionReport {
        samples,
        max_discrepancy,
        nonnegative_samples: nonneg,
        min_q_on_nonnegative: min_q_nonneg,
        unconstrained_claim_checked: false,
        figure_masks: N3_FIGURE_MASKS.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::build_incidence;

    #[test]
    fn quiver_counts() {
        for (n, vertices, arrows, relations) in
            [(1usize, 2, 1, 0), (2, 4, 4, 1), (3, 8, 12, 6)]
        {
            let q = hasse_quiver(n).unwrap();
            assert_eq!(q.vertex_count(), vertices);
            assert_eq!(q.arrows().len(), arrows);
            assert_eq!(q.relations().len(), relations);
        }
        // closed forms n * 2^(n-1) and C(n,2) * 2^(n-2)
        for n in 1..=6usize {
            let q = hasse_quiver(n).unwrap();
            assert_eq!(q.arrows().len(), n << (n - 1));
            let expected = if n >= 2 {
                (n * (n - 1) / 2) << (n - 2)
            } else {
                0
            };
            assert_eq!(q.relations().len(), expected);
        }
    }

    #[test]
    fn path_normal_forms() {
        let q = hasse_quiver(2).unwrap();
        // length-0 path
        assert_eq!(q.path_normal_form(&[2]).unwrap(), (2, 2));
        // both length-2 paths share the endpoint normal form
        assert_eq!(q.path_normal_form(&[0, 1, 3]).unwrap(), (0, 3));
        assert_eq!(q.path_normal_form(&[0, 2, 3]).unwrap(), (0, 3));
        assert!(q.path_normal_form(&[0, 3]).is_err());
        assert!(q.path_normal_form(&[]).is_err());

        // all six paths through the 3-cube are one relation class
        let q3 = hasse_quiver(3).unwrap();
        assert_eq!(q3.paths_between(0, 7).len(), 6);
        for start in 0..8u32 {
            for end in 0..8u32 {
                assert!(q3.parallel_paths_single_class(start, end));
            }
        }
        for (start, end) in [(0u32, 15u32), (0, 7), (1, 15)] {
            let q4 = hasse_quiver(4).unwrap();
            assert!(q4.parallel_paths_single_class(start, end));
        }
    }

    #[test]
    fn normal_form_span_matches_incidence_dimension() {
        for n in 0..=5 {
            let q = hasse_quiver(n).unwrap();
            let alg = build_incidence(n).unwrap();
            // normal forms = interval pairs = incidence basis
            let mut intervals = 0usize;
            let full = SubsetMask::full(n);
            for z in full.subsets() {
                for y in z.subsets() {
                    intervals += 1;
                    let paths = q.paths_between(y.0, z.0);
                    assert!(!paths.is_empty());
                    for p in &paths {
                        assert_eq!(q.path_normal_form(p).unwrap(), (y.0, z.0));
                    }
                }
            }
            assert_eq!(intervals, alg.dim());
        }
    }

    /// Structure constants of the path normal forms match the incidence
    /// algebra: composing intervals concatenates exactly when the inner
    /// endpoints agree.
    #[test]
    fn normal_form_structure_constants() {
        for n in 0..=5 {
            let alg = build_incidence(n).unwrap();
            for &(y, u) in alg.pairs() {
                for &(l, z) in alg.pairs() {
                    let composable = u == l;
                    let e1 = alg.unit(y, u).unwrap();
                    let e2 = alg.unit(l, z).unwrap();
                    let prod = crate::incidence::multiply(&e1, &e2).unwrap();
                    if composable {
                        assert_eq!(prod, alg.unit(y, z).unwrap());
                    } else {
                        assert!(prod.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn tits_values() {
        let t2 = tits_form(2).unwrap();
        assert_eq!(t2.eval(&[1, 1, 1, 1]), 1);
        let t3 = tits_form(3).unwrap();
        assert_eq!(t3.eval(&[1; 8]), 2);
        let t4 = tits_form(4).unwrap();
        assert_eq!(t4.eval(&n4_level_profile()), -4);
    }

    #[test]
    fn gram_matrix_matches_eval() {
        use num::Zero;
        let t3 = tits_form(3).unwrap();
        let g = t3.gram();
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let x: Vec<i64> = (0..8).map(|_| rng.gen_range(-6i64..=6)).collect();
            let mut xgx = BigRational::zero();
            for a in 0..8 {
                for b in 0..8 {
                    xgx += &g[a][b] * BigRational::from_integer((x[a] * x[b]).into());
                }
            }
            assert_eq!(xgx, BigRational::from_integer(t3.eval(&x).into()));
        }
    }

    #[test]
    fn q2_on_the_eleven_classes() {
        let t2 = tits_form(2).unwrap();
        let classes: [[i64; 4]; 11] = [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 1, 0, 0],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [0, 0, 1, 1],
            [1, 1, 1, 0],
            [0, 1, 1, 1],
            [1, 1, 1, 1],
        ];
        for v in classes {
            assert_eq!(t2.eval(&v), 1, "{v:?}");
        }
    }

    #[test]
    fn search_small_boxes() {
        let t2 = tits_form(2).unwrap();
        let report = weak_positivity_search(&t2, 6, u64::MAX, None).unwrap();
        assert!(report.complete);
        assert!(report.violations.is_empty());
        assert_eq!(report.covered, report.total);

        let t3 = tits_form(3).unwrap();
        let report = weak_positivity_search(&t3, 3, u64::MAX, None).unwrap();
        assert!(report.violations.is_empty());
        assert_eq!(report.min_value, 0);
    }

    #[test]
    fn search_finds_the_n4_witness() {
        let t4 = tits_form(4).unwrap();
        let report = weak_positivity_search(&t4, 2, u64::MAX, None).unwrap();
        assert!(report.complete);
        let witness = n4_level_profile();
        assert!(report.violations.contains(&witness));
        assert!(report.min_value <= -4);
    }

    #[test]
    fn budget_and_resume_cover_everything() {
        let t2 = tits_form(2).unwrap();
        // run with a tiny budget, then resume until complete; the union of
        // covered counts must equal the box size and find no violations
        let mut resume: Option<String> = None;
        let mut covered = 0u64;
        let mut rounds = 0;
        loop {
            match weak_positivity_search(&t2, 3, 64, resume.as_deref()) {
                Ok(report) => {
                    covered += report.covered;
                    assert!(report.violations.is_empty());
                    break;
                }
                Err(Error::BudgetExceeded { scanned, resume: r }) => {
                    covered += scanned;
                    resume = Some(r);
                    rounds += 1;
                    assert!(rounds < 10_000);
                }
                Err(e) => panic!("unexpected {e:?}"),
            }
        }
        assert_eq!(covered, 4u64.pow(4));
    }

    #[test]
    fn substitution_identity_holds() {
        let report = substitution_report(2000, 0).unwrap();
        assert_eq!(report.max_discrepancy, 0);
        assert!(report.nonnegative_samples > 0);
        assert!(report.min_q_on_nonnegative.unwrap() >= 0);
    }

    #[test]
    fn dot_output() {
        let q1 = hasse_quiver(1).unwrap();
        let dot = q1.emit_dot();
        assert_eq!(dot.matches("->").count(), 1);
        let q2 = hasse_quiver(2).unwrap();
        let dot = q2.emit_dot();
        assert_eq!(dot.matches(" [label=\"α").count(), 4);
        assert_eq!(dot.matches("// relation").count(), 1);
        let q3 = hasse_quiver(3).unwrap();
        let dot3 = q3.emit_dot();
        assert_eq!(dot3.matches(" [label=\"α").count(), 12);
        // deterministic
        assert_eq!(dot3, q3.emit_dot());
    }
}
