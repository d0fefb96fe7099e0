//! The incidence algebra of the Boolean lattice on `n` points: matrix units
//! `e_{Y,Z}` for `Y ⊆ Z ⊆ X`, multiplication `e_{K,M} e_{L,J} = [M = L] e_{K,J}`,
//! radical filtration, projectives, heredity chains and BGG-style reciprocity.
//!
//! Layer ideals of diagonal idempotent chains are monomial (spanned by basis
//! units), so the heredity axioms reduce to exact set combinatorics; the
//! left-projectivity of a layer is decided by a column-splitting dimension
//! count, and the radical of a monomial quotient is the span of its surviving
//! strict pairs (cross-checked against the characteristic-zero trace form in
//! the tests).

use crate::chars::ThetaContext;
use crate::subset::SubsetMask;
use crate::{Error, Result};
use num::BigRational;
use num::Zero;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

pub const MAX_GROUND_SET: usize = 12;

/// The incidence algebra `A_n` with basis `e_{Y,Z}`, `Y ⊆ Z ⊆ {0,..,n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceAlgebra {
    n: usize,
    pairs: Vec<(u32, u32)>,
}

/// Build the algebra on an `n`-element ground set; the basis has size `3^n`.
pub fn build_incidence(n: usize) -> Result<IncidenceAlgebra> {
    if n > MAX_GROUND_SET {
        return Err(Error::CapExceeded {
            cap: 3usize.pow(MAX_GROUND_SET as u32),
        });
    }
    let full = SubsetMask::full(n);
    let mut pairs = Vec::new();
    for z in full.subsets() {
        for y in z.subsets() {
            pairs.push((y.0, z.0));
        }
    }
    pairs.sort_unstable();
    Ok(IncidenceAlgebra { n, pairs })
}

impl IncidenceAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn contains_pair(&self, y: u32, z: u32) -> bool {
        y & !z == 0 && SubsetMask(z).is_subset_of(self.full_mask())
    }

    /// Identity element: the sum of all diagonal units.
    pub fn identity(&self) -> AlgElement {
        let mut coeffs = BTreeMap::new();
        for s in self.full_mask().subsets() {
            coeffs.insert((s.0, s.0), BigRational::from_integer(1.into()));
        }
        AlgElement { n: self.n, coeffs }
    }

    pub fn unit(&self, y: u32, z: u32) -> Result<AlgElement> {
        if !self.contains_pair(y, z) {
            return Err(Error::InvalidInput(format!(
                "({y},{z}) is not a basis pair of A_{}",
                self.n
            )));
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert((y, z), BigRational::from_integer(1.into()));
        Ok(AlgElement { n: self.n, coeffs })
    }

    /// Basis of the Jacobson radical: the strict pairs.
    pub fn radical_basis(&self) -> Vec<(u32, u32)> {
        self.pairs.iter().copied().filter(|&(y, z)| y != z).collect()
    }

    /// Dimensions of the radical powers `Rad^0 ⊇ Rad^1 ⊇ ...` down to zero,
    /// computed by multiplying out basis sets.
    pub fn radical_power_dims(&self) -> Vec<usize> {
        let mut dims = vec![self.dim()];
        let mut current: BTreeSet<(u32, u32)> = self.radical_basis().into_iter().collect();
        let strict: Vec<(u32, u32)> = self.radical_basis();
        while !current.is_empty() {
            dims.push(current.len());
            let mut next = BTreeSet::new();
            for &(y, z) in &current {
                for &(l, j) in &strict {
                    if z == l {
                        next.insert((y, j));
                    }
                }
            }
            current = next;
        }
        dims.push(0);
        dims
    }

    /// The right projective `e_{Y,Y} A`: basis pairs `(Y, Z)` over `Z ⊇ Y`.
    pub fn projective(&self, y: SubsetMask) -> ProjectiveModule {
        assert!(y.is_subset_of(self.full_mask()));
        let basis: Vec<(u32, u32)> = self
            .pairs
            .iter()
            .copied()
            .filter(|&(p, _)| p == y.0)
            .collect();
        ProjectiveModule { vertex: y, basis }
    }

    /// Cartan matrix `dim e_Y A e_Z`, rows and columns in mask order.
    pub fn cartan_matrix(&self) -> Vec<Vec<u64>> {
        let size = 1usize << self.n;
        let mut c = vec![vec![0u64; size]; size];
        for &(y, z) in &self.pairs {
            c[y as usize][z as usize] += 1;
        }
        c
    }

    pub fn cartan_determinant(&self) -> BigRational {
        use crate::linalg::{Mat, QQ};
        let c = self.cartan_matrix();
        let size = c.len();
        Mat::from_fn(QQ, size, size, |r, col| {
            BigRational::from_integer((c[r][col] as i64).into())
        })
        .det()
    }
}

/// Sparse element with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElement {
    n: usize,
    coeffs: BTreeMap<(u32, u32), BigRational>,
}

impl AlgElement {
    pub fn zero(alg: &IncidenceAlgebra) -> Self {
        AlgElement {
            n: alg.n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.coeffs
    }

    pub fn coeff(&self, y: u32, z: u32) -> BigRational {
        self.coeffs.get(&(y, z)).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert(&mut self, key: (u32, u32), value: BigRational) {
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
    }

    pub fn add(&self, other: &AlgElement) -> Result<AlgElement> {
        if self.n != other.n {
            return Err(Error::AlgebraMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            let cur = out.coeff(k.0, k.1);
            out.insert(*k, cur + v);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &BigRational) -> AlgElement {
        let mut out = AlgElement {
            n: self.n,
            coeffs: BTreeMap::new(),
        };
        for (k, v) in &self.coeffs {
            out.insert(*k, v * s);
        }
        out
    }
}

/// Bilinear extension of the matrix-unit rule `e_{K,M} e_{L,J} = [M = L] e_{K,J}`.
pub fn multiply(x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
    if x.n != y.n {
        return Err(Error::AlgebraMismatch(x.n, y.n));
    }
    let mut out = AlgElement {
        n: x.n,
        coeffs: BTreeMap::new(),
    };
    for (&(k, m), a) in &x.coeffs {
        for (&(l, j), b) in &y.coeffs {
            if m == l {
                let cur = out.coeff(k, j);
                out.insert((k, j), cur + a * b);
            }
        }
    }
    Ok(out)
}

/// Right projective module data for a vertex.
#[derive(Clone, Debug)]
pub struct ProjectiveModule {
    pub vertex: SubsetMask,
    pub basis: Vec<(u32, u32)>,
}

impl ProjectiveModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `[P(Y) : L(Z)]`.
    pub fn composition_multiplicity(&self, z: SubsetMask) -> u64 {
        u64::from(self.vertex.is_subset_of(z))
    }
}

/// The weight poset of a block: elements `(theta, J)` for `J ⊆ I(theta)`,
/// ordered by reverse containment (`J_1 ⊇ J_2` means `(theta,J_1) ≤ (theta,J_2)`).
#[derive(Clone, Debug)]
pub struct WeightPoset {
    universe: SubsetMask,
}

impl WeightPoset {
    pub fn new(universe: SubsetMask) -> Self {
        WeightPoset { universe }
    }

    pub fn of_theta(ctx: &ThetaContext) -> Self {
        WeightPoset {
            universe: ctx.i_theta,
        }
    }

    pub fn universe(&self) -> SubsetMask {
        self.universe
    }

    pub fn elements(&self) -> Vec<SubsetMask> {
        self.universe.subsets().collect()
    }

    pub fn leq(&self, j1: SubsetMask, j2: SubsetMask) -> bool {
        j2.is_subset_of(j1)
    }

    pub fn maximum(&self) -> SubsetMask {
        SubsetMask::EMPTY
    }

    pub fn minimum(&self) -> SubsetMask {
        self.universe
    }

    /// Default heredity order: maximal weights first, i.e. increasing size.
    pub fn default_order(&self) -> Vec<SubsetMask> {
        let mut elems = self.elements();
        elems.sort_by_key(|j| (j.len(), j.0));
        elems
    }

    /// Whether `order` lists every weight once, larger weights first.
    pub fn is_linear_extension(&self, order: &[SubsetMask]) -> bool {
        let elems: BTreeSet<u32> = self.elements().iter().map(|j| j.0).collect();
        let listed: BTreeSet<u32> = order.iter().map(|j| j.0).collect();
        if elems != listed || order.len() != elems.len() {
            return false;
        }
        for (a, ja) in order.iter().enumerate() {
            for jb in order.iter().skip(a + 1) {
                // a strictly bigger weight (= strictly smaller subset) must
                // not appear later
                if jb.is_subset_of(*ja) && *jb != *ja {
                    return false;
                }
            }
        }
        true
    }
}

/// The block algebra of `theta` realized as the incidence algebra on
/// `|I(theta)|` points: `phi_{K ⊆ J} |-> e_{K', J'}` with masks compressed
/// into low bits.
#[derive(Clone, Debug)]
pub struct AThetaIso {
    pub algebra: IncidenceAlgebra,
    pub i_theta: SubsetMask,
}

pub fn build_a_theta(ctx: &ThetaContext) -> Result<AThetaIso> {
    let algebra = build_incidence(ctx.i_theta.len())?;
    Ok(AThetaIso {
        algebra,
        i_theta: ctx.i_theta,
    })
}

impl AThetaIso {
    /// Image of the basis morphism `phi_{K ⊆ J}` under the isomorphism.
    pub fn phi_to_pair(&self, k: SubsetMask, j: SubsetMask) -> Result<(u32, u32)> {
        if !j.is_subset_of(self.i_theta) {
            return Err(Error::InvalidSubset {
                subset: j,
                universe: self.i_theta,
            });
        }
        if !k.is_subset_of(j) {
            return Err(Error::InvalidSubset {
                subset: k,
                universe: j,
            });
        }
        Ok((
            k.compress_in(self.i_theta) as u32,
            j.compress_in(self.i_theta) as u32,
        ))
    }

    /// Exhaustively verify that the matrix-unit structure constants agree
    /// with the composition rule for the `phi` basis.
    pub fn verify_structure_constants(&self) -> Result<bool> {
        let subsets: Vec<SubsetMask> = self.i_theta.subsets().collect();
        for &j in &subsets {
            for k in j.subsets() {
                for &j2 in &subsets {
                    for l in j2.subsets() {
                        // phi_{K ⊆ M} phi_{L ⊆ J} = [L = M] phi_{K ⊆ J}
                        let (m, j_big) = (j, j2);
                        let a = self.phi_to_pair(k, m)?;
                        let b = self.phi_to_pair(l, j_big)?;
                        let ea = self.algebra.unit(a.0, a.1)?;
                        let eb = self.algebra.unit(b.0, b.1)?;
                        let prod = multiply(&ea, &eb)?;
                        let expected = if l == m {
                            let c = self.phi_to_pair(k, j_big)?;
                            self.algebra.unit(c.0, c.1)?
                        } else {
                            AlgElement::zero(&self.algebra)
                        };
                        if prod != expected {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Per-layer outcome of the heredity-chain verification.
#[derive(Clone, Debug, Serialize)]
pub struct HeredityLayer {
    pub idempotent_vertex: u32,
    pub idempotent_ideal: bool,
    pub radical_sandwich_zero: bool,
    pub layer_projective: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HeredityReport {
    pub order: Vec<u32>,
    pub is_linear_extension: bool,
    pub layers: Vec<HeredityLayer>,
    pub all_pass: bool,
}

/// Verify the heredity-chain axioms for the idempotent order given by
/// `order` (a permutation of the vertex masks). For each layer `t`, with
/// `J_t` the two-sided ideal of the first `t` diagonal idempotents:
/// `J_t` idempotent mod `J_{t-1}`, `J_t Rad(A/J_{t-1}) J_t = 0`, and
/// `J_t/J_{t-1}` projective as a left module over `A/J_{t-1}`.
pub fn heredity_check(alg: &IncidenceAlgebra, order: &[SubsetMask]) -> Result<HeredityReport> {
    let poset = WeightPoset::new(alg.full_mask());
    let expected: BTreeSet<u32> = poset.elements().iter().map(|j| j.0).collect();
    let given: BTreeSet<u32> = order.iter().map(|j| j.0).collect();
    if expected != given || order.len() != expected.len() {
        return Err(Error::InvalidInput(
            "order must list each vertex subset exactly once".into(),
        ));
    }
    let is_linear_extension = poset.is_linear_extension(order);

    // ideal(t) = span{ (A,D) : A ⊆ L_u ⊆ D for some u < t }, as a pair set
    let in_interval = |l: SubsetMask, a: u32, d: u32| -> bool {
        a & !l.0 == 0 && l.0 & !d == 0
    };
    let mut layers = Vec::new();
    let mut prev_ideal: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut ideal = BTreeSet::new();
    for (t, &lt) in order.iter().enumerate() {
        ideal.extend(
            alg.pairs
                .iter()
                .copied()
                .filter(|&(a, d)| in_interval(lt, a, d)),
        );

        // axiom 1: the set-span of J_t * J_t together with J_{t-1} is J_t
        let mut square: BTreeSet<(u32, u32)> = prev_ideal.clone();
        for &(a, d) in &ideal {
            for &(c, f) in &ideal {
                if d == c {
                    square.insert((a, f));
                }
            }
        }
        let idempotent_ideal = square == ideal;

        // surviving basis pairs of B = A / J_{t-1}
        let survives = |p: &(u32, u32)| !prev_ideal.contains(p);
        let layer: Vec<(u32, u32)> = ideal.iter().copied().filter(|p| survives(p)).collect();
        let rad_b: Vec<(u32, u32)> = alg
            .pairs
            .iter()
            .copied()
            .filter(|&(y, z)| y != z && survives(&(y, z)))
            .collect();

        // axiom 2: H Rad(B) H = 0 inside B
        let mut hr: BTreeSet<(u32, u32)> = BTreeSet::new();
        for &(a, d) in &layer {
            for &(y, z) in &rad_b {
                if d == y && survives(&(a, z)) {
                    hr.insert((a, z));
                }
            }
        }
        let mut hrh_zero = true;
        'outer: for &(a, z) in &hr {
            for &(c, f) in &layer {
                if z == c && survives(&(a, f)) {
                    hrh_zero = false;
                    break 'outer;
                }
            }
        }

        // axiom 3: H = ⊕_S H_S by right index; each column H_S is covered by
        // the left projective B e_{L_t,L_t}, so projectivity is the exact
        // dimension count |H| = |B e_t| * |e_t B|
        let b_et = layer.iter().filter(|&&(_, d)| d == lt.0).count();
        let et_b = layer.iter().filter(|&&(a, _)| a == lt.0).count();
        let layer_projective = layer.len() == b_et * et_b;

        let pass = idempotent_ideal && hrh_zero && layer_projective;
        layers.push(HeredityLayer {
            idempotent_vertex: lt.0,
            idempotent_ideal,
            radical_sandwich_zero: hrh_zero,
            layer_projective,
            pass,
        });
        let _ = t;
        prev_ideal = ideal.clone();
    }
    let all_pass = layers.iter().all(|l| l.pass);
    Ok(HeredityReport {
        order: order.iter().map(|j| j.0).collect(),
        is_linear_extension,
        layers,
        all_pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReciprocityReport {
    pub n: usize,
    pub projective_table: Vec<Vec<u64>>,
    pub injective_table: Vec<Vec<u64>>,
    pub tables_equal: bool,
    pub matches_containment: bool,
}

/// `[P(J) : L(K)]` from right projectives and `[I(K) : L(J)]` from left
/// projectives of the opposite algebra; both must equal the containment
/// indicator.
pub fn reciprocity_check(alg: &IncidenceAlgebra) -> ReciprocityReport {
    let size = 1usize << alg.n();
    // right projective P(J) has basis {(J, Z)}; multiplicity of L(K) is the
    // dimension of P(J) e_K
    let mut p_table = vec![vec![0u64; size]; size];
    for j in alg.full_mask().subsets() {
        let proj = alg.projective(j);
        for &(_, z) in &proj.basis {
            p_table[j.0 as usize][z as usize] += 1;
        }
    }
    // injective I(K) is the dual of the left projective A e_K with basis
    // {(Y, K)}; multiplicity of L(J) is the dimension of e_J (A e_K)
    let mut i_table = vec![vec![0u64; size]; size];
    for &(y, z) in alg.pairs() {
        i_table[z as usize][y as usize] += 1;
    }
    let mut tables_equal = true;
    let mut matches_containment = true;
    for j in 0..size {
        for k in 0..size {
            if p_table[j][k] != i_table[k][j] {
                tables_equal = false;
            }
            let expected = u64::from(j as u32 & !(k as u32) == 0);
            if p_table[j][k] != expected {
                matches_containment = false;
            }
        }
    }
    ReciprocityReport {
        n: alg.n(),
        projective_table: p_table,
        injective_table: i_table,
        tables_equal,
        matches_containment,
    }
}
