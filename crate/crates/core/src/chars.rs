//! Characters of the split torus at a fixed finite level.
//!
//! A character is an integer coordinate vector modulo `m = q^a - 1` over the
//! lattice basis of the root datum. The Weyl group acts through its lattice
//! action; the composition convention is fixed once here: acting by the
//! letters of a reduced word of `w` from left to right realizes
//! `(theta^w)^{w'} = theta^{w w'}`, equivalently `theta^w` has coordinates
//! `matrix(w^{-1}) * c  (mod m)`.

use crate::roots::{ElementId, RootDatum, WeylGroupTable};
use crate::subset::SubsetMask;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

pub const MAX_MODULUS: u64 = 1 << 62;

/// A character of `T(F_{q^a})`, stored with reduced coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct CharacterValue {
    q: u64,
    level: u32,
    modulus: u64,
    coords: Vec<u64>,
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 0u64;
    let mut d = 2u64;
    while d * d <= q && d <= 1_000_000 {
        if q % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        // no small factor: treat q as prime
        return true;
    }
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
    }
    rest == 1
}

impl CharacterValue {
    pub fn new(q: u64, level: u32, coords: Vec<i64>) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::InvalidCharacter(format!(
                "q = {q} is not a prime power"
            )));
        }
        if level == 0 {
            return Err(Error::InvalidCharacter("level must be at least 1".into()));
        }
        let modulus = q
            .checked_pow(level)
            .and_then(|m| m.checked_sub(1))
            .filter(|&m| m >= 1 && m <= MAX_MODULUS)
            .ok_or_else(|| {
                Error::InvalidCharacter(format!(
                    "modulus q^a - 1 out of range for q={q}, a={level}"
                ))
            })?;
        let coords = coords
            .into_iter()
            .map(|c| c.rem_euclid(modulus as i64) as u64)
            .collect();
        Ok(CharacterValue {
            q,
            level,
            modulus,
            coords,
        })
    }

    pub fn trivial(q: u64, level: u32, dim: usize) -> Result<Self> {
        CharacterValue::new(q, level, vec![0; dim])
    }

    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn level(&self) -> u32 {
        self.level
    }
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn same_context(&self, other: &CharacterValue) -> bool {
        self.q == other.q && self.level == other.level && self.coords.len() == other.coords.len()
    }

    /// `<c, b_i> mod m` against a simple coroot.
    fn pair_coroot(&self, datum: &RootDatum, i: usize) -> u64 {
        let m = self.modulus as i128;
        let mut acc: i128 = 0;
        for (c, b) in self.coords.iter().zip(datum.simple_coroot(i)) {
            acc += (*c as i128) * (*b as i128) % m;
        }
        acc.rem_euclid(m) as u64
    }

    /// Triviality set: indices whose rank-one subtorus (through the coroot)
    /// pairs to zero.
    pub fn i_theta(&self, datum: &RootDatum) -> SubsetMask {
        assert_eq!(self.coords.len(), datum.dim(), "coordinate length");
        let mut mask = SubsetMask::EMPTY;
        for i in 0..datum.rank() {
            if self.pair_coroot(datum, i) == 0 {
                mask = mask.with(i);
            }
        }
        mask
    }

    /// Reflection action of a single simple index: `c - <c, b_i> a_i mod m`.
    pub fn reflect(&self, datum: &RootDatum, i: usize) -> CharacterValue {
        let m = self.modulus as i128;
        let pairing = self.pair_coroot(datum, i) as i128;
        let coords = self
            .coords
            .iter()
            .zip(datum.simple_root(i))
            .map(|(&c, &a)| ((c as i128) - pairing * (a as i128) % m).rem_euclid(m) as u64)
            .collect();
        CharacterValue {
            q: self.q,
            level: self.level,
            modulus: self.modulus,
            coords,
        }
    }

    /// `theta^w`, with `(theta^w)^{w'} = theta^{w w'}`.
    pub fn w_action(&self, table: &WeylGroupTable, w: ElementId) -> CharacterValue {
        let mut cur = self.clone();
        for &i in table.word(w) {
            cur = cur.reflect(table.datum(), i as usize);
        }
        cur
    }

    /// Orbit under the whole group, plus the stabilizer order counted by a
    /// direct sweep (so orbit-stabilizer is a genuine cross-check).
    pub fn orbit_and_stabilizer(&self, table: &WeylGroupTable) -> (Vec<CharacterValue>, u64) {
        let mut orbit: BTreeSet<CharacterValue> = BTreeSet::new();
        orbit.insert(self.clone());
        let mut frontier = vec![self.clone()];
        while let Some(c) = frontier.pop() {
            for i in 0..table.rank() {
                let next = c.reflect(table.datum(), i);
                if orbit.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let stab = table
            .elements()
            .filter(|&w| self.w_action(table, w) == *self)
            .count() as u64;
        (orbit.into_iter().collect(), stab)
    }
}

/// A character together with its cached triviality set and stabilizer order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaContext {
    pub theta: CharacterValue,
    pub i_theta: SubsetMask,
    pub stab_order: u64,
}

impl ThetaContext {
    pub fn new(table: &WeylGroupTable, theta: CharacterValue) -> Result<Self> {
        if theta.dim() != table.datum().dim() {
            return Err(Error::InvalidCharacter(format!(
                "expected {} coordinates, got {}",
                table.datum().dim(),
                theta.dim()
            )));
        }
        let i_theta = theta.i_theta(table.datum());
        let stab_order = table
            .elements()
            .filter(|&w| theta.w_action(table, w) == theta)
            .count() as u64;
        Ok(ThetaContext {
            theta,
            i_theta,
            stab_order,
        })
    }
}

/// All characters for a given context, for exhaustive sweeps. The count is
/// `m^d`; callers keep `m` small.
pub fn all_characters(q: u64, level: u32, dim: usize) -> Result<Vec<CharacterValue>> {
    let probe = CharacterValue::trivial(q, level, dim)?;
    let m = probe.modulus();
    let total = (m as u128).pow(dim as u32);
    if total > 4_000_000 {
        return Err(Error::InvalidInput(format!(
            "character sweep of size {total} refused"
        )));
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut coords = vec![0i64; dim];
    loop {
        out.push(CharacterValue::new(q, level, coords.clone())?);
        let mut k = 0;
        loop {
            if k == dim {
                return Ok(out);
            }
            coords[k] += 1;
            if coords[k] < m as i64 {
                break;
            }
            coords[k] = 0;
            k += 1;
        }
    }
}

/// The `(q, level)` pairs with modulus at most `max_m`, one per modulus value.
pub fn small_moduli_contexts(max_m: u64) -> Vec<(u64, u32)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for q in 2..=(max_m + 1) {
        if !is_prime_power(q) {
            continue;
        }
        let mut a = 1u32;
        loop {
            let Some(m) = q.checked_pow(a).map(|x| x - 1) else {
                break;
            };
            if m > max_m {
                break;
            }
            if seen.insert(m) {
                out.push((q, a));
            }
            a += 1;
        }
    }
    out.sort_by_key(|&(q, a)| (q.pow(a) - 1, q));
    out
}
