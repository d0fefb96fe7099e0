//! Radicals of matrix algebras over exact fields.
//!
//! Over a characteristic-zero field the radical is the kernel of the trace
//! form `(x, y) -> Tr(xy)`. Over a prime field that form can degenerate, so
//! the chain of divided trace forms is used instead: lift to integer
//! matrices, and at stage `i` demand `Tr((X Y)^{p^(i-1)}) ≡ 0 mod p^i` for
//! all `y` in the previous stage. After `floor(log_p N) + 1` stages the
//! chain stabilizes at the radical. Each stage is a linear system because
//! the divided trace is additive on the previous stage.

use crate::linalg::{Field, Fp, Mat, QQ};
use crate::{Error, Result};

/// Radical of the span of `basis` (a unital subalgebra of `N x N` matrices),
/// as coordinate vectors over `basis`.
pub fn matrix_algebra_radical_qq(basis: &[Mat<QQ>]) -> Result<Vec<Vec<num::BigRational>>> {
    let m = basis.len();
    if m == 0 {
        return Ok(vec![]);
    }
    let gram = Mat::from_fn(QQ, m, m, |r, c| {
        let prod = basis[r].mul(&basis[c]);
        let mut tr = QQ.zero();
        for k in 0..prod.rows() {
            tr = QQ.add(&tr, prod.at(k, k));
        }
        tr
    });
    Ok(gram.kernel_basis())
}

/// Radical over a prime field by the divided-trace chain, as coordinate
/// vectors over `basis`.
pub fn matrix_algebra_radical_fp(field: Fp, basis: &[Mat<Fp>]) -> Result<Vec<Vec<u64>>> {
    let m = basis.len();
    if m == 0 {
        return Ok(vec![]);
    }
    let n = basis[0].rows();
    if n == 0 {
        // zero module: everything is radical (the zero algebra)
        return Ok((0..m)
            .map(|i| {
                let mut v = vec![0u64; m];
                v[i] = 1;
                v
            })
            .collect());
    }
    let p = field.p;
    // stages 1..=l+1 with p^l <= n < p^(l+1)
    let mut stages = 1u32;
    let mut pow = p;
    while pow <= n as u64 {
        pow = pow.saturating_mul(p);
        stages += 1;
    }

    // current subspace R, as coordinate vectors over `basis`
    let mut current: Vec<Vec<u64>> = (0..m)
        .map(|i| {
            let mut v = vec![0u64; m];
            v[i] = 1;
            v
        })
        .collect();

    for stage in 1..=stages {
        if current.is_empty() {
            break;
        }
        let power = p.pow(stage - 1);
        let modulus = p.pow(stage) as u128;
        // integer-lift matrices of the current basis
        let lifts: Vec<Vec<u128>> = current
            .iter()
            .map(|coords| lift_combination(field, basis, coords, n))
            .collect();
        let k = current.len();
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(k);
        for y in &lifts {
            let mut row = Vec::with_capacity(k);
            for x in &lifts {
                let prod = mat_mul_mod(x, y, n, modulus);
                let powmat = mat_pow_mod(&prod, power, n, modulus);
                let tr: u128 = (0..n).map(|i| powmat[i * n + i]).sum::<u128>() % modulus;
                let divided = tr / (power as u128);
                if tr % (power as u128) != 0 {
                    return Err(Error::DecompositionFailed(
                        "divided trace not integral; radical chain invariant broken".into(),
                    ));
                }
                row.push((divided % (p as u128)) as u64);
            }
            rows.push(row);
        }
        let sys = Mat::from_rows(field, rows);
        let kernel = sys.kernel_basis();
        // kernel vectors are coordinates over `current`
        let next: Vec<Vec<u64>> = kernel
            .into_iter()
            .map(|kv| {
                let mut v = vec![0u64; m];
                for (ci, coef) in kv.iter().enumerate() {
                    for (j, base) in current[ci].iter().enumerate() {
                        v[j] = (v[j] + coef * base) % p;
                    }
                }
                v
            })
            .collect();
        current = next;
    }
    Ok(current)
}

/// Entry-wise integer lift of the combination `sum coords[i] * basis[i]`
/// computed over `F_p` first.
fn lift_combination(field: Fp, basis: &[Mat<Fp>], coords: &[u64], n: usize) -> Vec<u128> {
    let mut acc = vec![0u64; n * n];
    for (c, b) in coords.iter().zip(basis) {
        if *c == 0 {
            continue;
        }
        for r in 0..n {
            for col in 0..n {
                acc[r * n + col] = field.add(&acc[r * n + col], &field.mul(c, b.at(r, col)));
            }
        }
    }
    acc.into_iter().map(|v| v as u128).collect()
}

fn mat_mul_mod(a: &[u128], b: &[u128], n: usize, modulus: u128) -> Vec<u128> {
    let mut out = vec![0u128; n * n];
    for r in 0..n {
        for k in 0..n {
            let v = a[r * n + k];
            if v == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] = (out[r * n + c] + v * b[k * n + c]) % modulus;
            }
        }
    }
    out
}

fn mat_pow_mod(a: &[u128], mut e: u64, n: usize, modulus: u128) -> Vec<u128> {
    let mut result = vec![0u128; n * n];
    for i in 0..n {
        result[i * n + i] = 1 % modulus;
    }
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul_mod(&result, &base, n, modulus);
        }
        base = mat_mul_mod(&base, &base, n, modulus);
        e >>= 1;
    }
    result
}

/// Field-dispatched radical of a matrix algebra span; returns coordinates
/// over the given basis.
pub fn matrix_algebra_radical<F: Field>(field: &F, basis: &[Mat<F>]) -> Result<Vec<Vec<F::Elem>>>
where
    F: RadicalField,
{
    F::radical(field, basis)
}

/// Dispatch trait: the two supported coefficient fields compute radicals by
/// different methods.
pub trait RadicalField: Field + Sized {
    fn radical(field: &Self, basis: &[Mat<Self>]) -> Result<Vec<Vec<Self::Elem>>>;
}

impl RadicalField for QQ {
    fn radical(_field: &QQ, basis: &[Mat<QQ>]) -> Result<Vec<Vec<num::BigRational>>> {
        matrix_algebra_radical_qq(basis)
    }
}

impl RadicalField for Fp {
    fn radical(field: &Fp, basis: &[Mat<Fp>]) -> Result<Vec<Vec<u64>>> {
        matrix_algebra_radical_fp(*field, basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fpmat(field: Fp, rows: Vec<Vec<u64>>) -> Mat<Fp> {
        Mat::from_rows(field, rows)
    }

    /// Brute-force radical of a small algebra over F_p: the elements `x`
    /// such that `1 - a x` is invertible (in the span) for every `a`.
    fn brute_force_radical_dim(field: Fp, basis: &[Mat<Fp>]) -> usize {
        let p = field.p;
        let m = basis.len();
        let n = basis[0].rows();
        let elements: Vec<Vec<u64>> = {
            let mut out = vec![vec![0u64; m]];
            for i in 0..m {
                let mut next = Vec::new();
                for v in &out {
                    for c in 0..p {
                        let mut w = v.clone();
                        w[i] = c;
                        next.push(w);
                    }
                }
                out = next;
            }
            out
        };
        let realize = |coords: &[u64]| -> Mat<Fp> {
            let mut acc = Mat::zero(field, n, n);
            for (c, b) in coords.iter().zip(basis) {
                acc = acc.add(&b.scale(c));
            }
            acc
        };
        let id = Mat::identity(field, n);
        let count = elements
            .iter()
            .filter(|x| {
                let xm = realize(x);
                elements.iter().all(|a| {
                    let am = realize(a);
                    id.sub(&am.mul(&xm)).is_invertible()
                })
            })
            .count();
        // |Rad| = p^dim
        let mut dim = 0;
        let mut size = 1usize;
        while size < count {
            size *= p as usize;
            dim += 1;
        }
        assert_eq!(size, count, "radical candidate set is not a subspace");
        dim
    }

    #[test]
    fn radical_of_f4_is_zero() {
        // F_4 acting on F_2^2: generated by 1 and t with t^2 = t + 1;
        // the naive trace form degenerates here, the divided chain must not
        let f = Fp::new(2).unwrap();
        let one = Mat::identity(f, 2);
        let t = fpmat(f, vec![vec![0, 1], vec![1, 1]]);
        let rad = matrix_algebra_radical_fp(f, &[one.clone(), t.clone()]).unwrap();
        assert_eq!(rad.len(), 0);
        assert_eq!(brute_force_radical_dim(f, &[one, t]), 0);
    }

    #[test]
    fn radical_of_dual_numbers() {
        // F_2[t]/t^2 in its regular representation: radical is (t)
        let f = Fp::new(2).unwrap();
        let one = Mat::identity(f, 2);
        let t = fpmat(f, vec![vec![0, 0], vec![1, 0]]);
        let rad = matrix_algebra_radical_fp(f, &[one.clone(), t.clone()]).unwrap();
        assert_eq!(rad.len(), 1);
        assert_eq!(rad[0], vec![0, 1]);
        assert_eq!(brute_force_radical_dim(f, &[one, t]), 1);
    }

    #[test]
    fn radical_of_matrix_algebra_is_zero() {
        let f = Fp::new(2).unwrap();
        let basis = vec![
            fpmat(f, vec![vec![1, 0], vec![0, 0]]),
            fpmat(f, vec![vec![0, 1], vec![0, 0]]),
            fpmat(f, vec![vec![0, 0], vec![1, 0]]),
            fpmat(f, vec![vec![0, 0], vec![0, 1]]),
        ];
        let rad = matrix_algebra_radical_fp(f, &basis).unwrap();
        assert_eq!(rad.len(), 0);
    }

    #[test]
    fn radical_of_upper_triangular() {
        for p in [2u64, 3, 5] {
            let f = Fp::new(p).unwrap();
            let basis = vec![
                fpmat(f, vec![vec![1, 0], vec![0, 0]]),
                fpmat(f, vec![vec![0, 0], vec![0, 1]]),
                fpmat(f, vec![vec![0, 1], vec![0, 0]]),
            ];
            let rad = matrix_algebra_radical_fp(f, &basis).unwrap();
            assert_eq!(rad.len(), 1, "p = {p}");
            assert_eq!(rad[0], vec![0, 0, 1]);
        }
    }

    #[test]
    fn radical_of_product_field() {
        // F_2[t]/(t^3 + 1) = F_2 x F_4: semisimple, radical zero
        let f = Fp::new(2).unwrap();
        let one = Mat::identity(f, 3);
        let t = fpmat(f, vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let t2 = t.mul(&t);
        let rad = matrix_algebra_radical_fp(f, &[one.clone(), t.clone(), t2.clone()]).unwrap();
        assert_eq!(rad.len(), 0);
        assert_eq!(brute_force_radical_dim(f, &[one, t, t2]), 0);
    }

    #[test]
    fn radical_of_truncated_polynomials() {
        // F_2[t]/t^4: radical (t) has dimension 3, needs three chain stages
        let f = Fp::new(2).unwrap();
        let n = 4;
        let mut shift = Mat::zero(f, n, n);
        for i in 0..n - 1 {
            *shift.at_mut(i + 1, i) = 1;
        }
        let mut basis = vec![Mat::identity(f, n)];
        let mut cur = shift.clone();
        for _ in 0..3 {
            basis.push(cur.clone());
            cur = cur.mul(&shift);
        }
        let rad = matrix_algebra_radical_fp(f, &basis).unwrap();
        assert_eq!(rad.len(), 3);
        for v in &rad {
            assert_eq!(v[0], 0, "radical avoids the identity component");
        }
    }

    #[test]
    fn radical_of_two_variable_square_zero() {
        // F_p[x,y]/(x,y)^2, dim 3, radical (x,y) of dim 2
        for p in [2u64, 3] {
            let f = Fp::new(p).unwrap();
            // regular representation on basis {1, x, y}
            let one = Mat::identity(f, 3);
            let x = fpmat(f, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]]);
            let y = fpmat(f, vec![vec![0, 0, 0], vec![0, 0, 0], vec![1, 0, 0]]);
            let rad = matrix_algebra_radical_fp(f, &[one.clone(), x.clone(), y.clone()]).unwrap();
            assert_eq!(rad.len(), 2, "p = {p}");
            if p <= 3 {
                assert_eq!(brute_force_radical_dim(f, &[one, x, y]), 2);
            }
        }
    }

    #[test]
    fn radical_char_zero() {
        // upper triangular 2x2 over Q
        let q = QQ;
        let e = |r: usize, c: usize| {
            Mat::from_fn(q, 2, 2, |i, j| {
                if (i, j) == (r, c) {
                    q.one()
                } else {
                    q.zero()
                }
            })
        };
        let rad = matrix_algebra_radical_qq(&[e(0, 0), e(1, 1), e(0, 1)]).unwrap();
        assert_eq!(rad.len(), 1);
        // full matrix algebra is semisimple
        let rad = matrix_algebra_radical_qq(&[e(0, 0), e(0, 1), e(1, 0), e(1, 1)]).unwrap();
        assert_eq!(rad.len(), 0);
    }
}
