//! Cartan matrices, root data, and a fully enumerated Weyl group.
//!
//! Elements are canonically identified by the images of the simple roots under
//! their action on the weight lattice, so equality is a tuple comparison and
//! no word-problem normal form is needed. One reduced word per element is kept
//! for display and for folding actions letter by letter.

use crate::poly::IntPoly;
use crate::subset::SubsetMask;
use crate::{Error, Result};
use num::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;
pub const MAX_RANK: usize = 12;

/// Integer Cartan matrix of finite type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_RANK {
            return Err(Error::InvalidCartan(format!(
                "rank {n} exceeds supported maximum {MAX_RANK}"
            )));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        let c = CartanMatrix { n, entries };
        c.validate()?;
        Ok(c)
    }

    /// Built-in types: `a1`..`a8`, `b2`..`b8`, `c2`..`c8`, `d2`..`d8`, `g2`.
    pub fn preset(name: &str) -> Result<Self> {
        let name = name.to_ascii_lowercase();
        let bad = || Error::InvalidCartan(format!("unknown preset '{name}'"));
        if name.len() != 2 || !name.is_ascii() {
            return Err(bad());
        }
        let (family, rank) = name.split_at(1);
        let n: usize = rank.parse().map_err(|_| bad())?;
        if n == 0 || n > 8 {
            return Err(bad());
        }
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
        }
        fn link(c: &mut [Vec<i64>], i: usize, j: usize) {
            c[i][j] = -1;
            c[j][i] = -1;
        }
        match family {
            "a" => {
                for i in 0..n.saturating_sub(1) {
                    link(&mut c, i, i + 1);
                }
            }
            "b" | "c" if n >= 2 => {
                for i in 0..n - 1 {
                    link(&mut c, i, i + 1);
                }
                if family == "b" {
                    c[n - 2][n - 1] = -2;
                } else {
                    c[n - 1][n - 2] = -2;
                }
            }
            "d" if n == 2 => {}
            "d" if n >= 3 => {
                for i in 0..n - 2 {
                    link(&mut c, i, i + 1);
                }
                link(&mut c, n - 3, n - 1);
            }
            "g" if n == 2 => {
                c[0][1] = -1;
                c[1][0] = -3;
            }
            _ => return Err(bad()),
        }
        CartanMatrix::new(c)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if self.entry(i, i) != 2 {
                return Err(Error::InvalidCartan(format!("C[{i}][{i}] != 2")));
            }
            for j in 0..n {
                if i != j {
                    if self.entry(i, j) > 0 {
                        return Err(Error::InvalidCartan(format!(
                            "C[{i}][{j}] = {} > 0",
                            self.entry(i, j)
                        )));
                    }
                    if (self.entry(i, j) == 0) != (self.entry(j, i) == 0) {
                        return Err(Error::InvalidCartan(format!(
                            "C[{i}][{j}] and C[{j}][{i}] must vanish together"
                        )));
                    }
                }
            }
        }
        self.check_finite_type()
    }

    /// Finite type means the symmetrization is positive definite; this keeps
    /// canonical-form dedup sound during enumeration.
    fn check_finite_type(&self) -> Result<()> {
        let n = self.n;
        let err = || Error::InvalidCartan("matrix is not of finite type".into());
        // symmetrize: find positive rational d with d_i C[i][j] = d_j C[j][i]
        let mut d: Vec<Option<BigRational>> = vec![None; n];
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(BigRational::from_integer(1.into()));
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let di = d[i].clone().unwrap();
                for j in 0..n {
                    if i == j || self.entry(i, j) == 0 {
                        continue;
                    }
                    let ratio = BigRational::new(self.entry(i, j).into(), self.entry(j, i).into());
                    let dj = &di * ratio;
                    match &d[j] {
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                        Some(prev) => {
                            if *prev != dj {
                                return Err(err());
                            }
                        }
                    }
                }
            }
        }
        let d: Vec<BigRational> = d.into_iter().map(|x| x.unwrap()).collect();
        use num::Signed;
        if d.iter().any(|x| !x.is_positive()) {
            return Err(err());
        }
        // leading principal minors of S = diag(d) * C must be positive
        use crate::linalg::{Mat, QQ};
        for k in 1..=n {
            let minor = Mat::from_fn(QQ, k, k, |r, c| {
                &d[r] * BigRational::from_integer(self.entry(r, c).into())
            });
            if !minor.det().is_positive() {
                return Err(err());
            }
        }
        Ok(())
    }
}

/// Realization of a Cartan matrix: simple roots and coroots in a lattice `Z^d`
/// pairing to the Cartan entries, `dot(a_j, b_i) = C[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    dim: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
}

impl RootDatum {
    /// Simply connected realization: the lattice is spanned by fundamental
    /// weights, so `b_i = e_i` and the coordinates of `a_j` are the j-th
    /// column of the Cartan matrix.
    pub fn simply_connected(cartan: &CartanMatrix) -> Self {
        let n = cartan.rank();
        RootDatum {
            dim: n,
            simple_roots: (0..n)
                .map(|j| (0..n).map(|i| cartan.entry(i, j)).collect())
                .collect(),
            simple_coroots: (0..n)
                .map(|i| (0..n).map(|k| i64::from(k == i)).collect())
                .collect(),
        }
    }

    pub fn new(
        cartan: &CartanMatrix,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let n = cartan.rank();
        if simple_roots.len() != n || simple_coroots.len() != n {
            return Err(Error::InvalidDatum("expected one (co)root per index".into()));
        }
        let dim = simple_roots.first().map_or(0, |v| v.len());
        if simple_roots.iter().any(|v| v.len() != dim)
            || simple_coroots.iter().any(|v| v.len() != dim)
        {
            return Err(Error::InvalidDatum("inconsistent lattice rank".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let dot: i64 = simple_roots[j]
                    .iter()
                    .zip(&simple_coroots[i])
                    .map(|(a, b)| a * b)
                    .sum();
                if dot != cartan.entry(i, j) {
                    return Err(Error::InvalidDatum(format!(
                        "pairing <a_{j}, b_{i}> = {dot} != C[{i}][{j}]"
                    )));
                }
            }
        }
        Ok(RootDatum {
            dim,
            simple_roots,
            simple_coroots,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.simple_coroots[i]
    }

    /// `<x, b_i>` for a lattice vector `x`.
    pub fn pair_coroot(&self, x: &[i64], i: usize) -> i64 {
        x.iter()
            .zip(&self.simple_coroots[i])
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Index of a Weyl group element inside its table.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

/// Fully enumerated Weyl group. Immutable after construction.
#[derive(Clone, Debug)]
pub struct WeylGroupTable {
    cartan: CartanMatrix,
    datum: RootDatum,
    /// d*d row-major action matrix per element
    mats: Vec<Vec<i64>>,
    words: Vec<Vec<u8>>,
    lengths: Vec<u32>,
    rmul: Vec<Vec<u32>>,
    rdesc: Vec<SubsetMask>,
    ldesc: Vec<SubsetMask>,
    inverse: Vec<u32>,
}

fn mat_mul(a: &[i64], b: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; d * d];
    for r in 0..d {
        for k in 0..d {
            let v = a[r * d + k];
            if v == 0 {
                continue;
            }
            for c in 0..d {
                out[r * d + c] += v * b[k * d + c];
            }
        }
    }
    out
}

impl WeylGroupTable {
    pub fn build(cartan: CartanMatrix, datum: RootDatum, cap: usize) -> Result<Self> {
        if datum.rank() != cartan.rank() {
            return Err(Error::InvalidDatum("datum rank differs from Cartan rank".into()));
        }
        let n = cartan.rank();
        let d = datum.dim();
        // reflection matrices R_i = Id - a_i b_i^T
        let gens: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut m = vec![0i64; d * d];
                for r in 0..d {
                    m[r * d + r] = 1;
                }
                for r in 0..d {
                    for c in 0..d {
                        m[r * d + c] -= datum.simple_roots[i][r] * datum.simple_coroots[i][c];
                    }
                }
                m
            })
            .collect();

        let key_of = |m: &[i64]| -> Vec<i64> {
            let mut key = Vec::with_capacity(n * d);
            for a in &datum.simple_roots {
                for r in 0..d {
                    let mut acc = 0i64;
                    for c in 0..d {
                        acc += m[r * d + c] * a[c];
                    }
                    key.push(acc);
                }
            }
            key
        };

        let mut mats: Vec<Vec<i64>> = Vec::new();
        let mut words: Vec<Vec<u8>> = Vec::new();
        let mut lengths: Vec<u32> = Vec::new();
        let mut rmul: Vec<Vec<u32>> = Vec::new();
        let mut index: HashMap<Vec<i64>, u32> = HashMap::new();

        let id_mat: Vec<i64> = {
            let mut m = vec![0i64; d * d];
            for r in 0..d {
                m[r * d + r] = 1;
            }
            m
        };
        index.insert(key_of(&id_mat), 0);
        mats.push(id_mat);
        words.push(vec![]);
        lengths.push(0);
        rmul.push(vec![u32::MAX; n]);

        let mut head = 0usize;
        while head < mats.len() {
            for i in 0..n {
                if rmul[head][i] != u32::MAX {
                    continue;
                }
                let prod = mat_mul(&mats[head], &gens[i], d);
                let key = key_of(&prod);
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        if mats.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        let id = mats.len() as u32;
                        index.insert(key, id);
                        mats.push(prod);
                        let mut w = words[head].clone();
                        w.push(i as u8);
                        words.push(w);
                        lengths.push(lengths[head] + 1);
                        rmul.push(vec![u32::MAX; n]);
                        id
                    }
                };
                rmul[head][i] = id;
            }
            head += 1;
        }

        let order = mats.len();
        let rdesc: Vec<SubsetMask> = (0..order)
            .map(|w| {
                let mut m = SubsetMask::EMPTY;
                for i in 0..n {
                    if lengths[rmul[w][i] as usize] < lengths[w] {
                        m = m.with(i);
                    }
                }
                m
            })
            .collect();

        // inverse: fold the reversed word through rmul from the identity
        let inverse: Vec<u32> = (0..order)
            .map(|w| {
                let mut cur = 0u32;
                for &i in words[w].iter().rev() {
                    cur = rmul[cur as usize][i as usize];
                }
                cur
            })
            .collect();

        // left descents via lookup of s_i * w
        let ldesc: Vec<SubsetMask> = (0..order)
            .map(|w| {
                let mut m = SubsetMask::EMPTY;
                for i in 0..n {
                    let prod = mat_mul(&gens[i], &mats[w], d);
                    let id = index[&key_of(&prod)];
                    if lengths[id as usize] < lengths[w] {
                        m = m.with(i);
                    }
                }
                m
            })
            .collect();

        Ok(WeylGroupTable {
            cartan,
            datum,
            mats,
            words,
            lengths,
            rmul,
            rdesc,
            ldesc,
            inverse,
        })
    }

    pub fn build_simply_connected(cartan: CartanMatrix, cap: usize) -> Result<Self> {
        let datum = RootDatum::simply_connected(&cartan);
        WeylGroupTable::build(cartan, datum, cap)
    }

    pub fn from_preset(name: &str) -> Result<Self> {
        let cartan = CartanMatrix::preset(name)?;
        WeylGroupTable::build_simply_connected(cartan, DEFAULT_ELEMENT_CAP)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// Mask of the full index set `I`.
    pub fn simple_mask(&self) -> SubsetMask {
        SubsetMask::full(self.rank())
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order() as u32).map(ElementId)
    }

    pub fn identity(&self) -> ElementId {
        ElementId(0)
    }

    pub fn generator(&self, i: usize) -> ElementId {
        ElementId(self.rmul[0][i])
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.lengths[w.0 as usize] as usize
    }

    pub fn max_length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn word(&self, w: ElementId) -> &[u8] {
        &self.words[w.0 as usize]
    }

    pub fn right_descents(&self, w: ElementId) -> SubsetMask {
        self.rdesc[w.0 as usize]
    }

    pub fn left_descents(&self, w: ElementId) -> SubsetMask {
        self.ldesc[w.0 as usize]
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        ElementId(self.inverse[w.0 as usize])
    }

    /// `w * s_i`
    pub fn rmul_gen(&self, w: ElementId, i: usize) -> ElementId {
        ElementId(self.rmul[w.0 as usize][i])
    }

    /// `s_i * w`
    pub fn lmul_gen(&self, i: usize, w: ElementId) -> ElementId {
        // s_i w = (w^{-1} s_i)^{-1}
        self.inverse(self.rmul_gen(self.inverse(w), i))
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        let mut cur = a;
        for &i in self.word(b) {
            cur = self.rmul_gen(cur, i as usize);
        }
        cur
    }

    /// Row-major `d x d` action matrix on the lattice.
    pub fn matrix(&self, w: ElementId) -> &[i64] {
        &self.mats[w.0 as usize]
    }

    pub fn apply(&self, w: ElementId, v: &[i64]) -> Vec<i64> {
        let d = self.datum.dim();
        let m = self.matrix(w);
        (0..d)
            .map(|r| (0..d).map(|c| m[r * d + c] * v[c]).sum())
            .collect()
    }

    /// Longest element of the standard parabolic subgroup `W_J`.
    pub fn longest_element(&self, j: SubsetMask) -> ElementId {
        let mut w = self.identity();
        loop {
            let asc = j.minus(self.right_descents(w));
            match asc.iter().next() {
                Some(i) => w = self.rmul_gen(w, i),
                None => return w,
            }
        }
    }

    /// Unique factorization `w = x * y` with `x` of minimal length in `x W_J`
    /// and `y` in `W_J`; lengths add.
    pub fn coset_factorize(&self, w: ElementId, j: SubsetMask) -> (ElementId, ElementId) {
        let mut x = w;
        let mut y = self.identity();
        loop {
            let desc = self.right_descents(x).intersect(j);
            match desc.iter().next() {
                Some(i) => {
                    x = self.rmul_gen(x, i);
                    y = self.lmul_gen(i, y);
                }
                None => return (x, y),
            }
        }
    }

    pub fn is_in_parabolic(&self, w: ElementId, j: SubsetMask) -> bool {
        self.coset_factorize(w, j).0 == self.identity()
    }

    /// `X_J`: minimal length representatives of the cosets `x W_J`.
    pub fn min_coset_reps(&self, j: SubsetMask) -> Vec<ElementId> {
        self.elements()
            .filter(|&w| self.right_descents(w).intersect(j).is_empty())
            .collect()
    }

    pub fn parabolic_order(&self, j: SubsetMask) -> usize {
        self.elements()
            .filter(|&w| self.is_in_parabolic(w, j))
            .count()
    }

    /// Poincaré polynomial: coefficient of `v^k` counts elements of length `k`.
    pub fn poincare(&self) -> IntPoly {
        let mut coeffs = vec![0i64; self.max_length() + 1];
        for w in self.elements() {
            coeffs[self.length(w)] += 1;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn word_string(&self, w: ElementId) -> String {
        if self.word(w).is_empty() {
            "e".to_string()
        } else {
            self.word(w)
                .iter()
                .map(|&i| format!("s{i}"))
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Lookup an element by an explicit word in the generators.
    pub fn element_from_word(&self, word: &[usize]) -> ElementId {
        let mut cur = self.identity();
        for &i in word {
            cur = self.rmul_gen(cur, i);
        }
        cur
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: multiply reflection matrices over all words up to a
    /// fixed length and dedupe, with no length or descent bookkeeping.
    fn brute_force_order(cartan: &CartanMatrix, max_len: usize) -> (usize, Vec<usize>) {
        let datum = RootDatum::simply_connected(cartan);
        let n = cartan.rank();
        let d = datum.dim();
        let gens: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut m = vec![0i64; d * d];
                for r in 0..d {
                    m[r * d + r] = 1;
                }
                for r in 0..d {
                    for c in 0..d {
                        m[r * d + c] -= datum.simple_root(i)[r] * datum.simple_coroot(i)[c];
                    }
                }
                m
            })
            .collect();
        let mut id = vec![0i64; d * d];
        for r in 0..d {
            id[r * d + r] = 1;
        }
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        seen.insert(id.clone(), 0);
        let mut frontier = vec![id];
        for len in 1..=max_len {
            let mut next = Vec::new();
            for m in &frontier {
                for g in &gens {
                    let prod = mat_mul(m, g, d);
                    if !seen.contains_key(&prod) {
                        seen.insert(prod.clone(), len);
                        next.push(prod);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        let mut lengths: Vec<usize> = seen.values().copied().collect();
        lengths.sort_unstable();
        (seen.len(), lengths)
    }

    #[test]
    fn orders_match_brute_force() {
        for (name, order, max_len) in [
            ("a1", 2, 1),
            ("a2", 6, 3),
            ("b2", 8, 4),
            ("a3", 24, 6),
            ("g2", 12, 6),
        ] {
            let cartan = CartanMatrix::preset(name).unwrap();
            let (bf_order, _) = brute_force_order(&cartan, 12);
            assert_eq!(bf_order, order, "{name} brute-force order");
            let table = WeylGroupTable::from_preset(name).unwrap();
            assert_eq!(table.order(), order, "{name} table order");
            assert_eq!(table.max_length(), max_len, "{name} longest element");
        }
    }

    #[test]
    fn preset_orders() {
        for (name, order) in [
            ("a4", 120),
            ("b3", 48),
            ("b4", 384),
            ("c3", 48),
            ("c4", 384),
            ("d2", 4),
            ("d3", 24),
            ("d4", 192),
        ] {
            let table = WeylGroupTable::from_preset(name).unwrap();
            assert_eq!(table.order(), order, "{name}");
        }
    }

    #[test]
    fn poincare_a2() {
        let table = WeylGroupTable::from_preset("a2").unwrap();
        assert_eq!(table.poincare().coeffs(), &[1, 2, 2, 1]);
    }

    #[test]
    fn descents_a2() {
        let table = WeylGroupTable::from_preset("a2").unwrap();
        assert_eq!(table.right_descents(table.identity()), SubsetMask::EMPTY);
        // longest element s0 s1 s0 has full descent set
        let w0 = table.element_from_word(&[0, 1, 0]);
        assert_eq!(table.length(w0), 3);
        assert_eq!(table.right_descents(w0), SubsetMask::full(2));
        // s1 s0 descends only at s0
        let w = table.element_from_word(&[1, 0]);
        assert_eq!(table.right_descents(w), SubsetMask::singleton(0));
    }

    #[test]
    fn longest_elements() {
        let table = WeylGroupTable::from_preset("a2").unwrap();
        assert_eq!(table.longest_element(SubsetMask::EMPTY), table.identity());
        assert_eq!(
            table.longest_element(SubsetMask::singleton(0)),
            table.generator(0)
        );
        let wj = table.longest_element(SubsetMask::full(2));
        assert_eq!(table.length(wj), 3);
        // involution with descent set J
        for j in SubsetMask::full(2).subsets() {
            let wj = table.longest_element(j);
            assert_eq!(table.mul(wj, wj), table.identity());
            assert_eq!(table.right_descents(wj), j);
        }
    }

    #[test]
    fn coset_reps_a2() {
        let table = WeylGroupTable::from_preset("a2").unwrap();
        let j = SubsetMask::singleton(0);
        let reps = table.min_coset_reps(j);
        assert_eq!(reps.len(), 3);
        let mut words: Vec<&[u8]> = reps.iter().map(|&w| table.word(w)).collect();
        words.sort();
        assert_eq!(words, vec![&[][..], &[0, 1][..], &[1][..]]);
        assert_eq!(table.min_coset_reps(SubsetMask::EMPTY).len(), 6);
        assert_eq!(table.min_coset_reps(SubsetMask::full(2)).len(), 1);
    }

    #[test]
    fn factorization_is_length_additive() {
        for name in ["a2", "b2", "a3", "g2", "b3"] {
            let table = WeylGroupTable::from_preset(name).unwrap();
            let full = table.simple_mask();
            for j in full.subsets() {
                let wj_order = table.parabolic_order(j);
                let reps = table.min_coset_reps(j);
                assert_eq!(reps.len() * wj_order, table.order(), "{name} J={j}");
                for w in table.elements() {
                    let (x, y) = table.coset_factorize(w, j);
                    assert_eq!(table.mul(x, y), w);
                    assert!(table.right_descents(x).intersect(j).is_empty());
                    assert!(table.is_in_parabolic(y, j));
                    assert_eq!(table.length(x) + table.length(y), table.length(w));
                }
            }
        }
    }

    #[test]
    fn descent_duality() {
        for name in ["a1", "a2", "b2", "a3", "b3", "c3", "g2"] {
            let table = WeylGroupTable::from_preset(name).unwrap();
            for w in table.elements() {
                assert_eq!(
                    table.left_descents(w),
                    table.right_descents(table.inverse(w)),
                    "{name} element {}",
                    table.word_string(w)
                );
                assert_eq!(table.mul(w, table.inverse(w)), table.identity());
            }
        }
    }

    #[test]
    fn reduced_word_lengths() {
        let table = WeylGroupTable::from_preset("b2").unwrap();
        for w in table.elements() {
            assert_eq!(table.word(w).len(), table.length(w));
            assert_eq!(table.element_from_word(
                &table.word(w).iter().map(|&i| i as usize).collect::<Vec<_>>()
            ), w);
        }
    }

    #[test]
    fn invalid_cartan_rejected() {
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![1]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        // affine A_1^(1) is not finite type
        assert!(CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).is_err());
        // rank-0 matrix is the trivial group
        let c = CartanMatrix::new(vec![]).unwrap();
        let t = WeylGroupTable::build_simply_connected(c, 10).unwrap();
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let c = CartanMatrix::preset("a3").unwrap();
        match WeylGroupTable::build_simply_connected(c, 10) {
            Err(Error::CapExceeded { cap: 10 }) => {}
            other => panic!("expected CapExceeded, got {other:?}"),
        }
    }
}
