//! Dimension polynomials in `v` (the order of the level field) and
//! composition-factor bookkeeping over the block of a fixed character.
//!
//! Dimensions are counted over the level-`a` field, so `v` stands for `q^a`:
//! a point group of an `l`-dimensional unipotent piece contributes `v^l`.

use crate::chars::ThetaContext;
use crate::poly::IntPoly;
use crate::roots::WeylGroupTable;
use crate::sets::{y_set, z_set};
use crate::subset::SubsetMask;
use crate::{Error, Result};

/// Names of the modules whose classes live in a block.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum LabelKind {
    /// Full induced module.
    M,
    /// Irreducible constituent `E(theta)_J`.
    E,
    /// Projective cover `Delta(theta)_J`.
    Delta,
    /// Injective envelope `Nabla(theta)_J` (induced from the complement).
    Nabla,
    /// Parabolically induced `M(theta, K)`.
    ParaM,
}

/// A symbolic module label inside the block of `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleLabel {
    pub kind: LabelKind,
    pub subset: SubsetMask,
}

impl ModuleLabel {
    pub fn new(kind: LabelKind, subset: SubsetMask) -> Self {
        ModuleLabel { kind, subset }
    }
}

/// Composition-factor multiplicities of a label: one entry per `J` inside
/// `I(theta)`, indexed by the compressed submask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothClass {
    pub i_theta: SubsetMask,
    mult: Vec<u64>,
}

impl GrothClass {
    fn from_indicator(i_theta: SubsetMask, pred: impl Fn(SubsetMask) -> bool) -> Self {
        let mult = i_theta
            .subsets()
            .map(|j| u64::from(pred(j)))
            .collect();
        GrothClass { i_theta, mult }
    }

    pub fn multiplicity(&self, j: SubsetMask) -> u64 {
        assert!(j.is_subset_of(self.i_theta));
        self.mult[j.compress_in(self.i_theta)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (SubsetMask, u64)> + '_ {
        self.i_theta
            .subsets()
            .map(move |j| (j, self.mult[j.compress_in(self.i_theta)]))
    }

    pub fn total(&self) -> u64 {
        self.mult.iter().sum()
    }
}

/// Dimension of the full induced module: the Poincaré polynomial of `W`.
pub fn dim_m(table: &WeylGroupTable) -> IntPoly {
    table.poincare()
}

/// Dimension of the irreducible `E(theta)_J`:
/// sum over `w` in `Z_J` of `v^{l(w_J w^{-1})}`.
pub fn dim_e(table: &WeylGroupTable, ctx: &ThetaContext, j: SubsetMask) -> Result<IntPoly> {
    let z = z_set(table, ctx, j)?;
    let wj = table.longest_element(j);
    let mut poly = IntPoly::zero();
    for w in z {
        let len = table.length(table.mul(wj, table.inverse(w)));
        poly += &IntPoly::monomial(1, len);
    }
    Ok(poly)
}

/// Dimension of the parabolically induced module `M(theta, K)`:
/// sum over `w` in `Y_K` of `v^{l(w)}`.
pub fn dim_para_m(table: &WeylGroupTable, ctx: &ThetaContext, k: SubsetMask) -> Result<IntPoly> {
    if !k.is_subset_of(ctx.i_theta) {
        return Err(Error::InvalidSubset {
            subset: k,
            universe: ctx.i_theta,
        });
    }
    let mut poly = IntPoly::zero();
    for w in y_set(table, k) {
        poly += &IntPoly::monomial(1, table.length(w));
    }
    Ok(poly)
}

/// Composition factors as a multiplicity vector over the simples of the block.
pub fn comp_factors(ctx: &ThetaContext, label: &ModuleLabel) -> Result<GrothClass> {
    let i_theta = ctx.i_theta;
    if !label.subset.is_subset_of(i_theta) {
        return Err(Error::InvalidSubset {
            subset: label.subset,
            universe: i_theta,
        });
    }
    let s = label.subset;
    Ok(match label.kind {
        LabelKind::M => GrothClass::from_indicator(i_theta, |_| true),
        LabelKind::E => GrothClass::from_indicator(i_theta, |j| j == s),
        LabelKind::Delta => GrothClass::from_indicator(i_theta, |j| s.is_subset_of(j)),
        LabelKind::Nabla => GrothClass::from_indicator(i_theta, |j| j.is_subset_of(s)),
        LabelKind::ParaM => {
            let window = s.complement_in(i_theta);
            GrothClass::from_indicator(i_theta, |j| j.is_subset_of(window))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{all_characters, small_moduli_contexts, CharacterValue, ThetaContext};
    use crate::roots::{CartanMatrix, WeylGroupTable};

    fn trivial_ctx(table: &WeylGroupTable) -> ThetaContext {
        let theta = CharacterValue::trivial(2, 1, table.datum().dim()).unwrap();
        ThetaContext::new(table, theta).unwrap()
    }

    #[test]
    fn dim_m_examples() {
        let t1 = WeylGroupTable::from_preset("a1").unwrap();
        assert_eq!(dim_m(&t1).coeffs(), &[1, 1]);
        let t2 = WeylGroupTable::from_preset("a2").unwrap();
        assert_eq!(dim_m(&t2).coeffs(), &[1, 2, 2, 1]);
        let t0 = WeylGroupTable::build_simply_connected(
            CartanMatrix::new(vec![]).unwrap(),
            10,
        )
        .unwrap();
        assert_eq!(dim_m(&t0).coeffs(), &[1]);
    }

    #[test]
    fn dim_e_examples() {
        let t1 = WeylGroupTable::from_preset("a1").unwrap();
        let ctx = trivial_ctx(&t1);
        assert_eq!(dim_e(&t1, &ctx, SubsetMask::EMPTY).unwrap().coeffs(), &[1]);
        // Steinberg: dim v
        assert_eq!(
            dim_e(&t1, &ctx, SubsetMask::singleton(0)).unwrap().coeffs(),
            &[0, 1]
        );
        let t2 = WeylGroupTable::from_preset("a2").unwrap();
        let ctx = trivial_ctx(&t2);
        assert_eq!(
            dim_e(&t2, &ctx, SubsetMask::singleton(0)).unwrap().coeffs(),
            &[0, 1, 1]
        );
    }

    #[test]
    fn dim_para_m_examples() {
        let t2 = WeylGroupTable::from_preset("a2").unwrap();
        let ctx = trivial_ctx(&t2);
        assert_eq!(
            dim_para_m(&t2, &ctx, SubsetMask::EMPTY).unwrap(),
            dim_m(&t2)
        );
        assert_eq!(
            dim_para_m(&t2, &ctx, SubsetMask::full(2)).unwrap().coeffs(),
            &[1]
        );
        assert_eq!(
            dim_para_m(&t2, &ctx, SubsetMask::singleton(0))
                .unwrap()
                .coeffs(),
            &[1, 1, 1]
        );
    }

    #[test]
    fn comp_factor_examples() {
        let t2 = WeylGroupTable::from_preset("a2").unwrap();
        let ctx = trivial_ctx(&t2);
        let m = comp_factors(&ctx, &ModuleLabel::new(LabelKind::M, SubsetMask::EMPTY)).unwrap();
        assert_eq!(m.total(), 4);
        assert!(m.entries().all(|(_, c)| c == 1));

        let delta_top =
            comp_factors(&ctx, &ModuleLabel::new(LabelKind::Delta, SubsetMask::full(2))).unwrap();
        assert_eq!(delta_top.total(), 1);
        assert_eq!(delta_top.multiplicity(SubsetMask::full(2)), 1);

        let nabla_bot =
            comp_factors(&ctx, &ModuleLabel::new(LabelKind::Nabla, SubsetMask::EMPTY)).unwrap();
        assert_eq!(nabla_bot.total(), 1);
        assert_eq!(nabla_bot.multiplicity(SubsetMask::EMPTY), 1);
    }

    /// Sum identity, parabolic identity, and the Euler specialization at
    /// v = 1, swept over small groups and all small-modulus characters.
    #[test]
    fn identity_sweep() {
        for name in ["a1", "a2", "b2", "a3"] {
            let table = WeylGroupTable::from_preset(name).unwrap();
            let d = table.datum().dim();
            let dm = dim_m(&table);
            assert_eq!(dm.eval(1), table.order() as i64);
            for (q, a) in small_moduli_contexts(6) {
                for theta in all_characters(q, a, d).unwrap() {
                    let ctx = ThetaContext::new(&table, theta).unwrap();
                    let mut sum = IntPoly::zero();
                    for j in ctx.i_theta.subsets() {
                        let de = dim_e(&table, &ctx, j).unwrap();
                        assert_eq!(
                            de.eval(1),
                            z_set(&table, &ctx, j).unwrap().len() as i64
                        );
                        sum += &de;
                    }
                    assert_eq!(sum, dm, "{name} sum identity");
                    for k in ctx.i_theta.subsets() {
                        let lhs = dim_para_m(&table, &ctx, k).unwrap();
                        let window = k.complement_in(ctx.i_theta);
                        let mut rhs = IntPoly::zero();
                        for j in window.subsets() {
                            rhs += &dim_e(&table, &ctx, j).unwrap();
                        }
                        assert_eq!(lhs, rhs, "{name} parabolic identity");
                    }
                }
            }
        }
    }

    /// comp_factors paired with dim_e reproduces the module dimensions.
    #[test]
    fn factors_match_dimensions() {
        let table = WeylGroupTable::from_preset("b2").unwrap();
        let ctx = trivial_ctx(&table);
        let weigh = |class: &GrothClass| {
            let mut total = IntPoly::zero();
            for (j, c) in class.entries() {
                if c > 0 {
                    let de = dim_e(&table, &ctx, j).unwrap();
                    for _ in 0..c {
                        total += &de;
                    }
                }
            }
            total
        };
        let m = comp_factors(&ctx, &ModuleLabel::new(LabelKind::M, SubsetMask::EMPTY)).unwrap();
        assert_eq!(weigh(&m), dim_m(&table));
        for k in ctx.i_theta.subsets() {
            let para = comp_factors(&ctx, &ModuleLabel::new(LabelKind::ParaM, k)).unwrap();
            assert_eq!(weigh(&para), dim_para_m(&table, &ctx, k).unwrap());
            // Nabla(theta)_J = M(theta, I(theta) \ J)
            let nabla = comp_factors(
                &ctx,
                &ModuleLabel::new(LabelKind::Nabla, k.complement_in(ctx.i_theta)),
            )
            .unwrap();
            assert_eq!(weigh(&nabla), dim_para_m(&table, &ctx, k).unwrap());
        }
    }
}
