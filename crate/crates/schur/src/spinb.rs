//! The odd orthogonal spin module in full: the norm statistic on dominant
//! weights, the layer sets `W_m`, spin tensor-power highest-weight sets, and
//! the saturation check for every power up to a bound.
//!
//! Dominant weights split into two classes by the parity of the pairing with
//! the last coroot: the integral class is spanned by `varpi_1, ...,
//! varpi_{n-1}, 2 varpi_n`, and the half-integral (spin) class is its shift
//! by `varpi_n`. The norm of a weight is the coefficient sum in that basis,
//! with the spin shift discarded first.

use crate::characters::Engine;
use crate::error::{Result, SchurError};
use crate::rootdata::{RootDatum, Weight};
use crate::weylgroup::SaturatedSet;
use serde::Serialize;
use std::collections::BTreeSet;

fn require_spin_b(datum: &RootDatum) -> Result<()> {
    if datum.label().ends_with("spin") {
        Ok(())
    } else {
        Err(SchurError::UnsupportedPreset(format!(
            "{} is not an odd orthogonal spin datum",
            datum.label()
        )))
    }
}

/// Coordinates `(t_1, ..., t_n)` of a weight in the basis `varpi_1, ...,
/// varpi_{n-1}, 2 varpi_n`, plus whether the weight sits in the spin class
/// (in which case `varpi_n` was subtracted first).
pub fn omega_coords(datum: &RootDatum, omega: &Weight) -> Result<(Vec<i64>, bool)> {
    require_spin_b(datum)?;
    let n = datum.num_simple();
    let mut t: Vec<i64> = (0..n).map(|i| datum.pair_coroot(i, omega)).collect();
    let spin_class = t[n - 1].rem_euclid(2) == 1;
    if spin_class {
        t[n - 1] -= 1;
    }
    t[n - 1] /= 2;
    Ok((t, spin_class))
}

/// `|omega| = sum t_i`, with the convention `|varpi_n + omega| = |omega|`.
pub fn omega_norm(datum: &RootDatum, omega: &Weight) -> Result<i64> {
    let (t, _) = omega_coords(datum, omega)?;
    Ok(t.iter().sum())
}

/// `|omega - alpha_i| <= |omega|` for a simple root index `i`.
pub fn check_lemma_c1(datum: &RootDatum, omega: &Weight, i: usize) -> Result<bool> {
    let lhs = omega_norm(datum, &omega.sub(datum.simple_root(i)))?;
    let rhs = omega_norm(datum, omega)?;
    Ok(lhs <= rhs)
}

/// The set `W_m`: dominant integral-class weights with norm `m`.
pub fn sets_w_m(datum: &RootDatum, m: i64) -> Result<Vec<Weight>> {
    require_spin_b(datum)?;
    let n = datum.num_simple();
    let mut basis = Vec::with_capacity(n);
    for i in 0..n - 1 {
        basis.push(datum.fundamental_weight(i)?);
    }
    let last = datum.fundamental_weight(n - 1)?;
    basis.push(last.add(&last));
    let mut out = Vec::new();
    let mut t = vec![0i64; n];
    fn rec(
        basis: &[Weight],
        t: &mut Vec<i64>,
        idx: usize,
        left: i64,
        out: &mut Vec<Weight>,
        rank: usize,
    ) {
        if idx == basis.len() - 1 {
            t[idx] = left;
            let mut w = Weight::zero(rank);
            for (c, b) in t.iter().zip(basis) {
                w = w.scaled_add(*c, b);
            }
            out.push(w);
            return;
        }
        for c in 0..=left {
            t[idx] = c;
            rec(basis, t, idx + 1, left - c, out, rank);
        }
    }
    rec(&basis, &mut t, 0, m, &mut out, datum.rank());
    out.sort();
    Ok(out)
}

/// Distinct highest weights of the composition factors of the `r`-th spin
/// tensor power.
pub fn spin_tensor_highest_weights(datum: &RootDatum, r: usize) -> Result<Vec<Weight>> {
    require_spin_b(datum)?;
    let engine = Engine::new(datum)?;
    let spin = datum.fundamental_weight(datum.num_simple() - 1)?;
    let factors = engine.tensor_power_factors(&spin, r)?;
    Ok(factors.highest_weights())
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinRow {
    pub r: usize,
    pub saturated: bool,
    /// highest-weight set equals the predicted union of layers (with the
    /// spin shift on odd powers)
    pub matches_layers: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinReport {
    pub n: usize,
    pub rows: Vec<SpinRow>,
}

impl SpinReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|row| row.saturated && row.matches_layers)
    }
}

/// For every `r <= r_max`: the spin power is saturated and its highest
/// weights are exactly the union of the first `floor(r/2) + 1` layers,
/// shifted by `varpi_n` when `r` is odd.
pub fn check_spin_saturation(datum: &RootDatum, r_max: usize) -> Result<SpinReport> {
    require_spin_b(datum)?;
    let engine = Engine::new(datum)?;
    let n = datum.num_simple();
    let spin = datum.fundamental_weight(n - 1)?;
    let mut rows = Vec::new();
    for r in 0..=r_max {
        let factors = engine.tensor_power_factors(&spin, r)?;
        let hw: BTreeSet<Weight> = factors.entries.keys().cloned().collect();
        let pi: BTreeSet<Weight> = engine.pi_plus(&factors)?.into_iter().collect();
        let m = (r / 2) as i64;
        let mut predicted = BTreeSet::new();
        for j in 0..=m {
            for w in sets_w_m(datum, j)? {
                if r % 2 == 1 {
                    predicted.insert(w.add(&spin));
                } else {
                    predicted.insert(w);
                }
            }
        }
        rows.push(SpinRow {
            r,
            saturated: hw == pi,
            matches_layers: hw == predicted,
        });
    }
    Ok(SpinReport { n, rows })
}

/// The layer unions are saturated sets in their own right.
pub fn layers_are_saturated(datum: &RootDatum, m_max: i64) -> Result<bool> {
    require_spin_b(datum)?;
    for m in 0..=m_max {
        let mut union = Vec::new();
        for j in 0..=m {
            union.extend(sets_w_m(datum, j)?);
        }
        if SaturatedSet::verify(datum, &union).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{preset, PresetKind};
    use num::BigInt;

    #[test]
    fn norms() {
        let d = preset(PresetKind::SpinB, 2).unwrap();
        assert_eq!(omega_norm(&d, &Weight::zero(2)).unwrap(), 0);
        let w1 = d.fundamental_weight(0).unwrap();
        assert_eq!(omega_norm(&d, &w1).unwrap(), 1);
        let wn = d.fundamental_weight(1).unwrap();
        assert_eq!(omega_norm(&d, &wn.add(&wn)).unwrap(), 1);
        // spin shift is discarded
        assert_eq!(omega_norm(&d, &wn).unwrap(), 0);
        assert_eq!(omega_norm(&d, &w1.add(&wn)).unwrap(), 1);
    }

    #[test]
    fn lemma_c1_exhaustive() {
        for n in [2usize, 3] {
            let d = preset(PresetKind::SpinB, n).unwrap();
            for m in 0..=4i64 {
                for w in sets_w_m(&d, m).unwrap() {
                    for i in 0..n {
                        assert!(check_lemma_c1(&d, &w, i).unwrap(), "n={n} m={m} {w} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn layer_sets() {
        let d = preset(PresetKind::SpinB, 2).unwrap();
        assert_eq!(sets_w_m(&d, 0).unwrap(), vec![Weight::zero(2)]);
        let w1 = sets_w_m(&d, 1).unwrap();
        assert_eq!(w1.len(), 2);
        let wn = d.fundamental_weight(1).unwrap();
        assert!(w1.contains(&d.fundamental_weight(0).unwrap()));
        assert!(w1.contains(&wn.add(&wn)));
        assert!(layers_are_saturated(&d, 3).unwrap());
    }

    #[test]
    fn spin_square_factors() {
        // S tensor S decomposes into exterior powers: one factor per layer
        // weight of norm <= 1, total dimension (2^n)^2
        for n in [2usize, 3] {
            let d = preset(PresetKind::SpinB, n).unwrap();
            let engine = Engine::new(&d).unwrap();
            let hw = spin_tensor_highest_weights(&d, 2).unwrap();
            let mut expected = sets_w_m(&d, 0).unwrap();
            expected.extend(sets_w_m(&d, 1).unwrap());
            expected.sort();
            assert_eq!(hw, expected);
            let total: BigInt = hw.iter().map(|w| engine.weyl_dim(w).unwrap()).sum();
            assert_eq!(total, BigInt::from(1 << n).pow(2));
        }
    }

    #[test]
    fn saturation_small_ranks() {
        let d2 = preset(PresetKind::SpinB, 2).unwrap();
        let rep = check_spin_saturation(&d2, 5).unwrap();
        assert!(rep.ok(), "{:?}", rep.rows);
        let d3 = preset(PresetKind::SpinB, 3).unwrap();
        let rep = check_spin_saturation(&d3, 4).unwrap();
        assert!(rep.ok(), "{:?}", rep.rows);
    }

    #[test]
    fn rejects_non_spin_datum() {
        let d = preset(PresetKind::Gl, 3).unwrap();
        assert!(omega_norm(&d, &Weight::zero(3)).is_err());
        assert!(sets_w_m(&d, 1).is_err());
    }
}
