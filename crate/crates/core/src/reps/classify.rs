//! Exhaustive classification of indecomposables for the ground sets of size
//! one and two, by enumerating all matrix tuples in a dimension box over a
//! prime field and deduplicating up to isomorphism.

use super::decomp::{is_indecomposable, isomorphic, Indecomposability};
use super::QuiverRep;
use crate::linalg::{Fp, Mat, QQ};
use crate::quiver::hasse_quiver;
use crate::{Error, Result};
use std::collections::BTreeMap;

pub const DEFAULT_ENUMERATION_CAP: u64 = 20_000_000;

/// All indecomposable representations with vertex dimensions at most
/// `dim_bound`, up to isomorphism, sorted by dimension vector. Only the
/// ground sets classified in closed form (`n <= 2`) are accepted.
pub fn classify(field: Fp, n: usize, dim_bound: usize, cap: u64) -> Result<Vec<QuiverRep<Fp>>> {
    if n > 2 {
        return Err(Error::InvalidInput(
            "classification is exhaustive only for n <= 2".into(),
        ));
    }
    let quiver = hasse_quiver(n)?;
    let size = 1usize << n;
    let p = field.p;
    let mut found: Vec<QuiverRep<Fp>> = Vec::new();
    let mut dims = vec![0usize; size];
    loop {
        // skip the zero dimension vector
        if dims.iter().any(|&d| d > 0) {
            let entries: usize = quiver
                .arrows()
                .iter()
                .map(|&(s, d)| dims[s as usize] * dims[d as usize])
                .sum();
            let points = (p as u128).checked_pow(entries as u32);
            match points {
                Some(pts) if pts <= cap as u128 => {}
                _ => return Err(Error::CapExceeded { cap: cap as usize }),
            }
            enumerate_dim_vector(field, n, &quiver, &dims, &mut found)?;
        }
        // odometer over dimension vectors
        let mut k = 0;
        loop {
            if k == size {
                found.sort_by_key(|r| r.dim_vector());
                return Ok(found);
            }
            dims[k] += 1;
            if dims[k] <= dim_bound {
                break;
            }
            dims[k] = 0;
            k += 1;
        }
    }
}

fn enumerate_dim_vector(
    field: Fp,
    n: usize,
    quiver: &crate::quiver::BoundQuiver,
    dims: &[usize],
    found: &mut Vec<QuiverRep<Fp>>,
) -> Result<()> {
    let p = field.p;
    let arrow_entries: Vec<usize> = quiver
        .arrows()
        .iter()
        .map(|&(s, d)| dims[s as usize] * dims[d as usize])
        .collect();
    let total_entries: usize = arrow_entries.iter().sum();
    let mut entries = vec![0u64; total_entries];
    loop {
        // build the representation for the current entry vector
        let mut maps = BTreeMap::new();
        let mut base = 0usize;
        for (a, &(s, d)) in quiver.arrows().iter().enumerate() {
            let (rows, cols) = (dims[d as usize], dims[s as usize]);
            let mat = Mat::from_fn(field, rows, cols, |r, c| entries[base + r * cols + c]);
            base += arrow_entries[a];
            maps.insert((s, d), mat);
        }
        let rep = QuiverRep::new(n, field, dims.to_vec(), maps)?;
        if rep.check_relations()
            && is_indecomposable(&rep, 0)? == Indecomposability::Yes
            && !found
                .iter()
                .filter(|r| r.dim_vector() == rep.dim_vector())
                .any(|r| isomorphic(r, &rep, 0).unwrap_or(false))
        {
            found.push(rep);
        }
        // odometer over matrix entries
        let mut k = 0;
        loop {
            if k == total_entries {
                return Ok(());
            }
            entries[k] += 1;
            if entries[k] < p {
                break;
            }
            entries[k] = 0;
            k += 1;
        }
        if total_entries == 0 {
            return Ok(());
        }
    }
}

/// Entrywise lift of a prime-field representation to the rationals, for
/// exact re-verification of representatives.
pub fn lift_to_q(rep: &QuiverRep<Fp>) -> Result<QuiverRep<QQ>> {
    let mut maps = BTreeMap::new();
    for (&(s, d), m) in rep.maps() {
        maps.insert(
            (s, d),
            Mat::from_fn(QQ, m.rows(), m.cols(), |r, c| {
                use crate::linalg::Field;
                QQ.from_i64(*m.at(r, c) as i64)
            }),
        );
    }
    QuiverRep::new(rep.n(), QQ, rep.dim_vector(), maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::decompose;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn three_classes_for_n1() {
        let classes = classify(f2(), 1, 2, DEFAULT_ENUMERATION_CAP).unwrap();
        let dims: Vec<Vec<usize>> = classes.iter().map(|r| r.dim_vector()).collect();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        // a bigger box finds nothing new
        let classes = classify(f2(), 1, 3, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(classes.len(), 3);
    }

    #[test]
    fn eleven_classes_for_n2() {
        let classes = classify(f2(), 2, 1, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(classes.len(), 11);
        let mut dims: Vec<Vec<usize>> = classes.iter().map(|r| r.dim_vector()).collect();
        dims.sort();
        // vertex order by mask: (∅, {0}, {1}, X)
        let mut expected = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 1],
            vec![1, 1, 1, 0],
            vec![0, 1, 1, 1],
            vec![1, 1, 1, 1],
        ];
        expected.sort();
        assert_eq!(dims, expected);
        // exact rational re-verification of every representative
        for rep in &classes {
            let lifted = lift_to_q(rep).unwrap();
            assert!(lifted.check_relations());
            assert_eq!(
                is_indecomposable(&lifted, 0).unwrap(),
                Indecomposability::Yes
            );
        }
    }

    #[test]
    fn n2_classes_closed_under_middle_swap() {
        // relabeling the two middle vertices permutes the class list
        let classes = classify(f2(), 2, 1, DEFAULT_ENUMERATION_CAP).unwrap();
        let swap = |rep: &QuiverRep<Fp>| -> QuiverRep<Fp> {
            let perm = |v: u32| -> u32 {
                match v {
                    1 => 2,
                    2 => 1,
                    v => v,
                }
            };
            let mut dims = vec![0usize; 4];
            for v in 0..4u32 {
                dims[perm(v) as usize] = rep.dims()[v as usize];
            }
            let mut maps = BTreeMap::new();
            for (&(s, d), m) in rep.maps() {
                maps.insert((perm(s), perm(d)), m.clone());
            }
            QuiverRep::new(2, f2(), dims, maps).unwrap()
        };
        for rep in &classes {
            let swapped = swap(rep);
            assert!(swapped.check_relations());
            assert!(classes
                .iter()
                .any(|r| isomorphic(r, &swapped, 0).unwrap()));
        }
    }

    #[test]
    fn random_decompositions_land_in_the_classes() {
        let classes = classify(f2(), 2, 1, DEFAULT_ENUMERATION_CAP).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let rep = QuiverRep::random_valid(f2(), 2, 2, &mut rng).unwrap();
            for part in decompose(&rep, 0).unwrap() {
                assert!(
                    classes
                        .iter()
                        .any(|c| isomorphic(c, &part, 0).unwrap()),
                    "summand with dims {:?} not among the classes",
                    part.dim_vector()
                );
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            classify(f2(), 2, 3, 100),
            Err(Error::CapExceeded { .. })
        ));
        assert!(classify(f2(), 3, 1, DEFAULT_ENUMERATION_CAP).is_err());
    }
}
