//! Derived subsets of the Weyl group attached to a character: descent-window
//! filters, parabolic summand labels, and the descent-complementing
//! involution on them.

use crate::chars::{CharacterValue, ThetaContext};
use crate::roots::{ElementId, WeylGroupTable};
use crate::subset::SubsetMask;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Label `(theta^w, J_{w,theta})` of one induced summand.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SummandLabel {
    pub character: CharacterValue,
    pub parabolic_set: SubsetMask,
}

impl SummandLabel {
    pub fn new(table: &WeylGroupTable, character: CharacterValue, parabolic_set: SubsetMask) -> Self {
        debug_assert!(parabolic_set.is_subset_of(character.i_theta(table.datum())));
        SummandLabel {
            character,
            parabolic_set,
        }
    }
}

/// `Y_K`: elements with no right descent inside `K`.
pub fn y_set(table: &WeylGroupTable, k: SubsetMask) -> Vec<ElementId> {
    table
        .elements()
        .filter(|&w| table.right_descents(w).intersect(k).is_empty())
        .collect()
}

/// `Z_J`: the subset of `X_J` with all descents of `w * w_J` inside
/// `J ∪ (I \ I(theta))`.
pub fn z_set(table: &WeylGroupTable, ctx: &ThetaContext, j: SubsetMask) -> Result<Vec<ElementId>> {
    if !j.is_subset_of(ctx.i_theta) {
        return Err(Error::InvalidSubset {
            subset: j,
            universe: ctx.i_theta,
        });
    }
    let wj = table.longest_element(j);
    let window = j.union(ctx.i_theta.complement_in(table.simple_mask()));
    Ok(table
        .min_coset_reps(j)
        .into_iter()
        .filter(|&w| {
            table
                .right_descents(table.mul(w, wj))
                .is_subset_of(window)
        })
        .collect())
}

/// `J_{w,theta} = R(w) ∩ I(theta^w)`.
pub fn j_w_theta(table: &WeylGroupTable, w: ElementId, theta: &CharacterValue) -> SubsetMask {
    let tw = theta.w_action(table, w);
    table.right_descents(w).intersect(tw.i_theta(table.datum()))
}

/// Multiset of summand labels `(theta^w, J_{w,theta})`, one per `w in W`.
pub fn x_theta_summands(
    table: &WeylGroupTable,
    theta: &CharacterValue,
) -> BTreeMap<SummandLabel, usize> {
    let mut out: BTreeMap<SummandLabel, usize> = BTreeMap::new();
    for w in table.elements() {
        let tw = theta.w_action(table, w);
        let j = table.right_descents(w).intersect(tw.i_theta(table.datum()));
        *out.entry(SummandLabel::new(table, tw, j)).or_insert(0) += 1;
    }
    out
}

/// `Omega_theta(lambda, J)`: elements sending `theta` to `lambda` whose
/// descent set lies in the window `[J, J ∪ (I \ I(lambda))]`.
pub fn omega(
    table: &WeylGroupTable,
    theta: &CharacterValue,
    lambda: &CharacterValue,
    j: SubsetMask,
) -> Result<Vec<ElementId>> {
    if !theta.same_context(lambda) {
        return Err(Error::ContextMismatch);
    }
    let i_lambda = lambda.i_theta(table.datum());
    if !j.is_subset_of(i_lambda) {
        return Err(Error::InvalidSubset {
            subset: j,
            universe: i_lambda,
        });
    }
    let window = j.union(i_lambda.complement_in(table.simple_mask()));
    Ok(table
        .elements()
        .filter(|&w| {
            let r = table.right_descents(w);
            j.is_subset_of(r) && r.is_subset_of(window) && theta.w_action(table, w) == *lambda
        })
        .collect())
}

/// The involution `w = x y  |->  x w_{I(lambda)} y` through the minimal-coset
/// factorization over `W_{I(lambda)}`.
pub fn xi(table: &WeylGroupTable, lambda: &CharacterValue, w: ElementId) -> ElementId {
    let k = lambda.i_theta(table.datum());
    let (x, y) = table.coset_factorize(w, k);
    let wk = table.longest_element(k);
    table.mul(table.mul(x, wk), y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{all_characters, small_moduli_contexts};
    use crate::roots::WeylGroupTable;

    fn trivial_ctx(table: &WeylGroupTable) -> ThetaContext {
        let theta = CharacterValue::trivial(2, 1, table.datum().dim()).unwrap();
        ThetaContext::new(table, theta).unwrap()
    }

    #[test]
    fn y_set_examples() {
        let table = WeylGroupTable::from_preset("a2").unwrap();
        assert_eq!(y_set(&table, SubsetMask::EMPTY).len(), 6);
        assert_eq!(y_set(&table, SubsetMask::full(2)).len(), 1);
        let ys = y_set(&table, SubsetMask::singleton(0));
        let mut words: Vec<&[u8]> = ys.iter().map(|&w| table.word(w)).collect();
        words.sort();
        assert_eq!(words, vec![&[][..], &[0, 1][..], &[1][..]]);
    }

    #[test]
    fn z_set_examples() {
        // A1, trivial theta, J = {}: R(w) must be empty, so only e
        let t1 = WeylGroupTable::from_preset("a1").unwrap();
        let ctx = trivial_ctx(&t1);
        let z = z_set(&t1, &ctx, SubsetMask::EMPTY).unwrap();
        assert_eq!(z, vec![t1.identity()]);

        // A2, trivial theta, J = {0}: {e, s1}
        let t2 = WeylGroupTable::from_preset("a2").unwrap();
        let ctx = trivial_ctx(&t2);
        let z = z_set(&t2, &ctx, SubsetMask::singleton(0)).unwrap();
        let mut words: Vec<&[u8]> = z.iter().map(|&w| t2.word(w)).collect();
        words.sort();
        assert_eq!(words, vec![&[][..], &[1][..]]);

        // J = I: X_I = {e} and the condition holds
        let z = z_set(&t2, &ctx, SubsetMask::full(2)).unwrap();
        assert_eq!(z, vec![t2.identity()]);

        // J not inside I(theta) is rejected
        let theta = CharacterValue::new(3, 1, vec![1, 0]).unwrap();
        let ctx = ThetaContext::new(&t2, theta).unwrap();
        assert!(z_set(&t2, &ctx, SubsetMask::full(2)).is_err());
    }

    #[test]
    fn z_set_empty_j_equals_y_set_of_itheta() {
        for name in ["a2", "b2", "a3"] {
            let table = WeylGroupTable::from_preset(name).unwrap();
            let d = table.datum().dim();
            for (q, a) in small_moduli_contexts(4) {
                for theta in all_characters(q, a, d).unwrap() {
                    let ctx = ThetaContext::new(&table, theta).unwrap();
                    let z = z_set(&table, &ctx, SubsetMask::EMPTY).unwrap();
                    let y = y_set(&table, ctx.i_theta);
                    assert_eq!(z, y);
                }
            }
        }
    }

    #[test]
    fn j_w_theta_examples() {
        let t1 = WeylGroupTable::from_preset("a1").unwrap();
        let tr = CharacterValue::trivial(2, 1, 1).unwrap();
        assert_eq!(j_w_theta(&t1, t1.identity(), &tr), SubsetMask::EMPTY);
        assert_eq!(
            j_w_theta(&t1, t1.generator(0), &tr),
            SubsetMask::singleton(0)
        );
        // m = 4, c = (1): I(theta^s) is empty so the intersection vanishes
        let c = CharacterValue::new(5, 1, vec![1]).unwrap();
        assert_eq!(j_w_theta(&t1, t1.generator(0), &c), SubsetMask::EMPTY);
    }

    #[test]
    fn summand_examples() {
        let t1 = WeylGroupTable::from_preset("a1").unwrap();
        let tr = CharacterValue::trivial(2, 1, 1).unwrap();
        let summands = x_theta_summands(&t1, &tr);
        assert_eq!(summands.len(), 2);
        let keys: Vec<(Vec<u64>, u32)> = summands
            .keys()
            .map(|l| (l.character.coords().to_vec(), l.parabolic_set.0))
            .collect();
        assert_eq!(keys, vec![(vec![0], 0), (vec![0], 1)]);

        let c = CharacterValue::new(5, 1, vec![1]).unwrap();
        let summands = x_theta_summands(&t1, &c);
        let keys: Vec<(Vec<u64>, u32)> = summands
            .keys()
            .map(|l| (l.character.coords().to_vec(), l.parabolic_set.0))
            .collect();
        assert_eq!(keys, vec![(vec![1], 0), (vec![3], 0)]);
    }

    #[test]
    fn summand_multiset_size_is_group_order() {
        for name in ["a2", "b2", "g2"] {
            let table = WeylGroupTable::from_preset(name).unwrap();
            for theta in all_characters(4, 1, 2).unwrap() {
                let total: usize = x_theta_summands(&table, &theta).values().sum();
                assert_eq!(total, table.order());
            }
        }
    }

    #[test]
    fn omega_examples() {
        let t1 = WeylGroupTable::from_preset("a1").unwrap();
        let tr = CharacterValue::trivial(2, 1, 1).unwrap();
        let o = omega(&t1, &tr, &tr, SubsetMask::EMPTY).unwrap();
        assert_eq!(o, vec![t1.identity()]);
        let o = omega(&t1, &tr, &tr, SubsetMask::singleton(0)).unwrap();
        assert_eq!(o, vec![t1.generator(0)]);

        let t2 = WeylGroupTable::from_preset("a2").unwrap();
        let tr = CharacterValue::trivial(2, 1, 2).unwrap();
        let o = omega(&t2, &tr, &tr, SubsetMask::singleton(0)).unwrap();
        let mut words: Vec<&[u8]> = o.iter().map(|&w| t2.word(w)).collect();
        words.sort();
        // descent set exactly {s0}: s0 and s1 s0
        assert_eq!(words, vec![&[0][..], &[1, 0][..]]);

        // mismatched contexts and oversized J are rejected
        let other = CharacterValue::trivial(3, 1, 2).unwrap();
        assert!(matches!(
            omega(&t2, &tr, &other, SubsetMask::EMPTY),
            Err(Error::ContextMismatch)
        ));
        let nontrivial = CharacterValue::new(3, 1, vec![1, 0]).unwrap();
        assert!(omega(&t2, &nontrivial, &nontrivial, SubsetMask::full(2)).is_err());
    }

    #[test]
    fn xi_examples() {
        let t1 = WeylGroupTable::from_preset("a1").unwrap();
        let tr = CharacterValue::trivial(2, 1, 1).unwrap();
        assert_eq!(xi(&t1, &tr, t1.identity()), t1.generator(0));
        assert_eq!(xi(&t1, &tr, t1.generator(0)), t1.identity());
        // I(lambda) empty: xi is the identity map
        let c = CharacterValue::new(5, 1, vec![1]).unwrap();
        for w in t1.elements() {
            assert_eq!(xi(&t1, &c, w), w);
        }
    }

    /// Exhaustive invariants: xi is an involution restricting to a bijection
    /// between complementary descent windows, and the summand-label count
    /// equals the window count.
    #[test]
    fn xi_bijection_sweep() {
        for name in ["a1", "a2", "b2", "g2", "a3", "b3", "c3", "d3"] {
            let table = WeylGroupTable::from_preset(name).unwrap();
            let d = table.datum().dim();
            for (q, a) in small_moduli_contexts(4) {
                for theta in all_characters(q, a, d).unwrap() {
                    let (orbit, _) = theta.orbit_and_stabilizer(&table);
                    for lambda in &orbit {
                        let i_lambda = lambda.i_theta(table.datum());
                        for j in i_lambda.subsets() {
                            let jc = j.complement_in(i_lambda);
                            let om = omega(&table, &theta, lambda, j).unwrap();
                            let om_c = omega(&table, &theta, lambda, jc).unwrap();
                            assert_eq!(om.len(), om_c.len(), "{name} |Omega| mismatch");
                            for &w in &om {
                                let img = xi(&table, lambda, w);
                                assert!(om_c.contains(&img), "{name}: xi leaves the window");
                                assert_eq!(xi(&table, lambda, img), w, "{name}: not involutive");
                            }
                            // Hom-dimension agreement: labels with
                            // J_{w,theta} = I(lambda) \ J match the window
                            let count = table
                                .elements()
                                .filter(|&w| {
                                    theta.w_action(&table, w) == *lambda
                                        && j_w_theta(&table, w, &theta) == jc
                                })
                                .count();
                            assert_eq!(count, om_c.len(), "{name}: label count");
                        }
                    }
                }
            }
        }
    }
}
