//! Weyl group orbits, dominance, and saturated weight sets.
//!
//! The Weyl group acts through simple reflections
//! `s_i(lambda) = lambda - <h_i, lambda> alpha_i`; orbits are enumerated by
//! breadth-first closure, which terminates because orbits of integral weights
//! are finite in finite type. Saturated sets are closed downward under the
//! dominance order within each orbit pattern, so their closure is computed by
//! intersecting the dominant cone with `{mu : mu <= lambda, lambda - mu in
//! root lattice}` for each generator.

use crate::error::{Result, SchurError};
use crate::linalg;
use crate::rootdata::{RootDatum, Weight};
use num::{BigRational, Zero};
use std::collections::{BTreeSet, VecDeque};

/// `s_i(lambda) = lambda - <h_i, lambda> alpha_i`.
pub fn reflect(datum: &RootDatum, i: usize, lambda: &Weight) -> Weight {
    let c = datum.pair_coroot(i, lambda);
    lambda.scaled_add(-c, datum.simple_root(i))
}

/// `<h_i, lambda> >= 0` for every simple coroot.
pub fn is_dominant(datum: &RootDatum, lambda: &Weight) -> bool {
    (0..datum.num_simple()).all(|i| datum.pair_coroot(i, lambda) >= 0)
}

/// The Weyl group orbit of `lambda`, sorted.
pub fn orbit(datum: &RootDatum, lambda: &Weight) -> Vec<Weight> {
    let mut seen = BTreeSet::new();
    seen.insert(lambda.clone());
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for i in 0..datum.num_simple() {
            let nu = reflect(datum, i, &mu);
            if seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    seen.into_iter().collect()
}

/// The unique dominant weight in the orbit of `lambda`, found by applying
/// simple reflections that strictly raise the weight.
pub fn dominant_representative(datum: &RootDatum, lambda: &Weight) -> Weight {
    let mut mu = lambda.clone();
    loop {
        let Some(i) = (0..datum.num_simple()).find(|&i| datum.pair_coroot(i, &mu) < 0) else {
            return mu;
        };
        mu = reflect(datum, i, &mu);
    }
}

/// Dominant representative together with the sign `(-1)^{l(w)}` of the
/// minimal `w` moving `lambda` there, and `None` when `lambda` lies on a
/// wall under the dot action conventions are not applied here; this is the
/// plain action, so walls mean a repeated reflection is possible but the
/// sign is still well defined off walls.
pub fn signed_dominant_representative(datum: &RootDatum, lambda: &Weight) -> (Weight, i64) {
    let mut mu = lambda.clone();
    let mut sign = 1i64;
    loop {
        let Some(i) = (0..datum.num_simple()).find(|&i| datum.pair_coroot(i, &mu) < 0) else {
            return (mu, sign);
        };
        mu = reflect(datum, i, &mu);
        sign = -sign;
    }
}

/// Express `lambda - mu` in the simple-root basis; `None` when it is not a
/// rational combination, `Some(None)` never occurs: integrality is reported
/// through the inner option.
fn root_coords(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Option<Vec<BigRational>> {
    let n = datum.rank();
    let m = datum.num_simple();
    let a: Vec<Vec<BigRational>> = (0..n)
        .map(|row| (0..m).map(|j| linalg::rat(datum.simple_root(j).0[row])).collect())
        .collect();
    let b: Vec<BigRational> = (0..n)
        .map(|row| linalg::rat(lambda.0[row] - mu.0[row]))
        .collect();
    linalg::solve(&a, &b)
}

/// `mu <= lambda` in the dominance order: `lambda - mu` is a nonnegative
/// integer combination of simple roots.
pub fn leq_dominance(datum: &RootDatum, mu: &Weight, lambda: &Weight) -> bool {
    match root_coords(datum, lambda, mu) {
        Some(coords) => coords
            .iter()
            .all(|c| c.is_integer() && *c >= BigRational::zero()),
        None => false,
    }
}

/// `lambda - mu` lies in the root lattice.
pub fn same_coset(datum: &RootDatum, mu: &Weight, lambda: &Weight) -> bool {
    match root_coords(datum, lambda, mu) {
        Some(coords) => coords.iter().all(|c| c.is_integer()),
        None => false,
    }
}

/// A finite set of weights, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    weights: BTreeSet<Weight>,
}

impl WeightSet {
    pub fn new() -> Self {
        WeightSet {
            weights: BTreeSet::new(),
        }
    }

    pub fn from_iter<I: IntoIterator<Item = Weight>>(it: I) -> Self {
        WeightSet {
            weights: it.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, w: Weight) -> bool {
        self.weights.insert(w)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.weights.contains(w)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.weights.iter()
    }

    pub fn to_vec(&self) -> Vec<Weight> {
        self.weights.iter().cloned().collect()
    }
}

impl Default for WeightSet {
    fn default() -> Self {
        WeightSet::new()
    }
}

/// All dominant `mu <= lambda` with `lambda - mu` in the root lattice,
/// including `lambda` itself. Enumerated by downward closure along simple
/// roots through orbit dominant representatives.
pub fn dominant_below(datum: &RootDatum, lambda: &Weight) -> Vec<Weight> {
    let mut out = BTreeSet::new();
    let mut queue = VecDeque::new();
    let top = dominant_representative(datum, lambda);
    out.insert(top.clone());
    queue.push_back(top);
    while let Some(mu) = queue.pop_front() {
        // step down by a simple root anywhere in the orbit of mu, then take
        // dominant representatives of the results
        for nu in orbit(datum, &mu) {
            for i in 0..datum.num_simple() {
                let cand = nu.sub(datum.simple_root(i));
                let dom = dominant_representative(datum, &cand);
                if leq_dominance(datum, &dom, &lambda) && out.insert(dom.clone()) {
                    queue.push_back(dom);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// A saturated set of dominant weights: closed under `mu <= lambda`,
/// `lambda - mu` in the root lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedSet {
    dominant: Vec<Weight>,
}

impl SaturatedSet {
    /// Saturated closure of the given dominant generators.
    pub fn closure(datum: &RootDatum, generators: &[Weight]) -> Result<Self> {
        if generators.is_empty() {
            return Err(SchurError::EmptyPi);
        }
        let mut all = BTreeSet::new();
        for g in generators {
            if !is_dominant(datum, g) {
                return Err(SchurError::NotDominant(g.0.clone()));
            }
            all.extend(dominant_below(datum, g));
        }
        Ok(SaturatedSet {
            dominant: all.into_iter().collect(),
        })
    }

    /// Wrap an explicit list after checking it really is saturated.
    pub fn verify(datum: &RootDatum, weights: &[Weight]) -> Result<Self> {
        if weights.is_empty() {
            return Err(SchurError::EmptyPi);
        }
        let set: BTreeSet<Weight> = weights.iter().cloned().collect();
        for w in &set {
            if !is_dominant(datum, w) {
                return Err(SchurError::NotDominant(w.0.clone()));
            }
            for mu in dominant_below(datum, w) {
                if !set.contains(&mu) {
                    return Err(SchurError::NotInOrbitSet(mu.0.clone()));
                }
            }
        }
        Ok(SaturatedSet {
            dominant: set.into_iter().collect(),
        })
    }

    pub fn dominant_weights(&self) -> &[Weight] {
        &self.dominant
    }

    pub fn len(&self) -> usize {
        self.dominant.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominant.is_empty()
    }

    /// `W pi`: union of the orbits of the members, sorted.
    pub fn orbit_union(&self, datum: &RootDatum) -> Vec<Weight> {
        let mut all = BTreeSet::new();
        for w in &self.dominant {
            all.extend(orbit(datum, w));
        }
        all.into_iter().collect()
    }
}

/// `W pi` for an arbitrary list of weights (dominance not required).
pub fn orbit_union(datum: &RootDatum, weights: &[Weight]) -> Vec<Weight> {
    let mut all = BTreeSet::new();
    for w in weights {
        all.extend(orbit(datum, w));
    }
    all.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{preset, PresetKind};

    #[test]
    fn gl2_orbit() {
        let d = preset(PresetKind::Gl, 2).unwrap();
        let orb = orbit(&d, &Weight(vec![2, 0]));
        assert_eq!(orb, vec![Weight(vec![0, 2]), Weight(vec![2, 0])]);
    }

    #[test]
    fn gl3_orbit_sizes() {
        let d = preset(PresetKind::Gl, 3).unwrap();
        assert_eq!(orbit(&d, &Weight(vec![1, 0, 0])).len(), 3);
        assert_eq!(orbit(&d, &Weight(vec![2, 1, 0])).len(), 6);
        assert_eq!(orbit(&d, &Weight(vec![1, 1, 1])).len(), 1);
    }

    #[test]
    fn dominant_rep_is_dominant() {
        let d = preset(PresetKind::Sp, 2).unwrap();
        let w = Weight(vec![-3, 2]);
        let rep = dominant_representative(&d, &w);
        assert!(is_dominant(&d, &rep));
        assert!(orbit(&d, &w).contains(&rep));
    }

    #[test]
    fn sp4_orbit_of_natural() {
        let d = preset(PresetKind::Sp, 2).unwrap();
        // natural module weights: +-eps_1, +-eps_2
        let orb = orbit(&d, &Weight(vec![1, 0]));
        assert_eq!(orb.len(), 4);
        assert!(orb.contains(&Weight(vec![0, -1])));
    }

    #[test]
    fn dominance_gl3() {
        let d = preset(PresetKind::Gl, 3).unwrap();
        let l = Weight(vec![2, 0, 0]);
        let m = Weight(vec![1, 1, 0]);
        assert!(leq_dominance(&d, &m, &l));
        assert!(!leq_dominance(&d, &l, &m));
        // different coset
        assert!(!leq_dominance(&d, &Weight(vec![1, 0, 0]), &l));
        assert!(!same_coset(&d, &Weight(vec![1, 0, 0]), &l));
        assert!(same_coset(&d, &m, &l));
    }

    #[test]
    fn saturation_gl3_degree2() {
        let d = preset(PresetKind::Gl, 3).unwrap();
        let pi = SaturatedSet::closure(&d, &[Weight(vec![2, 0, 0])]).unwrap();
        assert_eq!(
            pi.dominant_weights(),
            &[Weight(vec![1, 1, 0]), Weight(vec![2, 0, 0])]
        );
        // |W pi| = 3 + 3 = 6 signed compositions of 2 into 3 parts
        assert_eq!(pi.orbit_union(&d).len(), 6);
    }

    #[test]
    fn saturation_b2_natural() {
        let d = preset(PresetKind::SpinB, 2).unwrap();
        // natural module highest weight eps_1 = b_1 -> coords (1,0)
        let pi = SaturatedSet::closure(&d, &[Weight(vec![1, 0])]).unwrap();
        assert_eq!(
            pi.dominant_weights(),
            &[Weight(vec![0, 0]), Weight(vec![1, 0])]
        );
        // W pi = {0, +-eps_1, +-eps_2}
        assert_eq!(pi.orbit_union(&d).len(), 5);
    }

    #[test]
    fn closure_is_idempotent() {
        let d = preset(PresetKind::Sp, 2).unwrap();
        let pi = SaturatedSet::closure(&d, &[Weight(vec![2, 1])]).unwrap();
        let again = SaturatedSet::closure(&d, pi.dominant_weights()).unwrap();
        assert_eq!(pi, again);
        assert!(SaturatedSet::verify(&d, pi.dominant_weights()).is_ok());
    }

    #[test]
    fn verify_rejects_unsaturated() {
        let d = preset(PresetKind::Gl, 3).unwrap();
        assert!(SaturatedSet::verify(&d, &[Weight(vec![2, 0, 0])]).is_err());
        assert!(SaturatedSet::closure(&d, &[]).is_err());
        assert!(SaturatedSet::closure(&d, &[Weight(vec![0, 2, 0])]).is_err());
    }

    #[test]
    fn spin_b2_closure() {
        let d = preset(PresetKind::SpinB, 2).unwrap();
        // spin weight varpi_2 -> coords (0,1); orbit has 4 elements and no
        // smaller dominant weight shares its coset
        let pi = SaturatedSet::closure(&d, &[Weight(vec![0, 1])]).unwrap();
        assert_eq!(pi.dominant_weights(), &[Weight(vec![0, 1])]);
        assert_eq!(pi.orbit_union(&d).len(), 4);
    }
}
