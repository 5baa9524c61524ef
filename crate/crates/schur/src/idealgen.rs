//! Point varieties, vanishing-ideal generators, interpolation idempotents,
//! and the finite verification suite for the zero part of the algebra.
//!
//! A saturated orbit set `W pi` determines points `p_lambda` with coordinates
//! `<H_a, lambda>` in a chosen basis of `Y`. Everything downstream works
//! through the evaluation homomorphism onto value vectors over these points:
//! two Laurent polynomials in the `K_a` agree modulo the vanishing ideal
//! exactly when their value vectors agree, which turns every identity in
//! scope into a finite exact computation.

use crate::error::{Result, SchurError};
use crate::exec;
use crate::laurent::{qint_i, KPolynomial, VLaurent};
use crate::linalg;
use crate::rootdata::{RootDatum, Weight};
use crate::weylgroup::{orbit_union, SaturatedSet};
use num::{BigRational, One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Which basis `{H_a}` of `Y` indexes the point coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BasisChoice {
    /// The stored dual basis of the `X`-basis; always a `Z`-basis of `Y`.
    Canonical,
    /// The simple coroots; requires them to span `Y`.
    Coroot,
    /// The ambient epsilon basis; half-integral for the spin-type presets,
    /// so the quantized path may reject it.
    Epsilon,
}

/// Point coordinates of one weight, scaled by `scale` so that storage stays
/// integral: stored value is `scale * <H_a, lambda>`.
fn scaled_exps(datum: &RootDatum, basis: BasisChoice, w: &Weight) -> Result<Vec<i64>> {
    match basis {
        BasisChoice::Canonical => Ok(w.0.iter().map(|&c| 2 * c).collect()),
        BasisChoice::Coroot => {
            if datum.num_simple() != datum.rank() {
                return Err(SchurError::BadBasis(
                    "simple coroots do not span Y for this datum".into(),
                ));
            }
            Ok((0..datum.num_simple())
                .map(|i| 2 * datum.pair_coroot(i, w))
                .collect())
        }
        BasisChoice::Epsilon => datum
            .epsilon_coords2(w)
            .ok_or_else(|| SchurError::BadBasis("no epsilon view for this datum".into())),
    }
}

/// The finite point set `P_{W pi}`, one point per weight, injective.
#[derive(Clone, Debug)]
pub struct PointSet {
    basis: BasisChoice,
    /// 1 when all pairings are integral, 2 when half-integers occur.
    scale: i64,
    entries: Vec<(Weight, Vec<i64>)>,
}

impl PointSet {
    /// Classical-path constructor: any of the basis choices, half-integral
    /// coordinates allowed (kept doubled internally).
    pub fn new(datum: &RootDatum, weights: &[Weight], basis: BasisChoice) -> Result<Self> {
        if weights.is_empty() {
            return Err(SchurError::EmptyPi);
        }
        let mut entries = Vec::with_capacity(weights.len());
        for w in weights {
            entries.push((w.clone(), scaled_exps(datum, basis, w)?));
        }
        entries.sort();
        entries.dedup();
        let mut seen = BTreeSet::new();
        for (_, e) in &entries {
            if !seen.insert(e.clone()) {
                return Err(SchurError::BadBasis(
                    "point coordinates are not injective in this basis".into(),
                ));
            }
        }
        let scale = if entries.iter().all(|(_, e)| e.iter().all(|x| x % 2 == 0)) {
            1
        } else {
            2
        };
        if scale == 1 {
            for (_, e) in entries.iter_mut() {
                for x in e.iter_mut() {
                    *x /= 2;
                }
            }
        }
        Ok(PointSet {
            basis,
            scale,
            entries,
        })
    }

    /// Quantized-path constructor: additionally requires every coordinate to
    /// be integral (the basis must be a `Z`-basis of `Y`).
    pub fn quantized(datum: &RootDatum, weights: &[Weight], basis: BasisChoice) -> Result<Self> {
        let p = PointSet::new(datum, weights, basis)?;
        if p.scale != 1 {
            return Err(SchurError::HalfIntegralExponent);
        }
        if basis == BasisChoice::Coroot {
            let m: Vec<Vec<BigRational>> = (0..datum.num_simple())
                .map(|i| datum.simple_coroot(i).iter().map(|&x| linalg::rat(x)).collect())
                .collect();
            let d = linalg::det(&m);
            if !d.is_one() && !(-d.clone()).is_one() {
                return Err(SchurError::BadBasis(
                    "simple coroots are not a Z-basis of Y".into(),
                ));
            }
        }
        Ok(p)
    }

    pub fn basis(&self) -> BasisChoice {
        self.basis
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn num_vars(&self) -> usize {
        self.entries[0].1.len()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Weight, Vec<i64>)> {
        self.entries.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.entries.iter().map(|(w, _)| w)
    }

    pub fn exps_of(&self, w: &Weight) -> Option<&[i64]> {
        self.entries
            .iter()
            .find(|(l, _)| l == w)
            .map(|(_, e)| e.as_slice())
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.entries.iter().position(|(l, _)| l == w)
    }

    /// `<h, lambda>` for `h` in basis coordinates; integral only when
    /// `scale == 1`.
    fn pair(&self, h: &[i64], idx: usize) -> i64 {
        h.iter().zip(&self.entries[idx].1).map(|(a, b)| a * b).sum()
    }
}

fn v_pow_str(c: i64) -> String {
    match c {
        0 => "1".into(),
        1 => "v".into(),
        _ => format!("v^{c}"),
    }
}

fn k_monomial_str(h: &[i64]) -> String {
    let mut parts = Vec::new();
    for (a, &e) in h.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("K{}", a + 1)),
            _ => parts.push(format!("K{}^{e}", a + 1)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn h_linear_str(h: &[i64]) -> String {
    let mut out = String::new();
    for (a, &c) in h.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push(if c > 0 { '+' } else { '-' });
        } else if c < 0 {
            out.push('-');
        }
        let abs = c.abs();
        if abs != 1 {
            let _ = write!(out, "{abs}");
        }
        let _ = write!(out, "H{}", a + 1);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// One emitted ideal generator, factored display plus expanded polynomial.
#[derive(Clone, Debug)]
pub struct GeneratorReport {
    pub h: Vec<i64>,
    pub display: String,
    pub poly: KPolynomial,
}

fn distinct_or_full(values: Vec<i64>, reduced: bool) -> Vec<i64> {
    let mut vals = values;
    vals.sort();
    if reduced {
        vals.dedup();
    }
    vals
}

/// `F_h`: product of `(K_h - v^{<h,lambda>})` over `W pi` (or over the
/// distinct pairing values when `reduced`).
pub fn generator_f(points: &PointSet, h: &[i64], reduced: bool) -> Result<GeneratorReport> {
    if points.scale() != 1 {
        return Err(SchurError::HalfIntegralExponent);
    }
    let n = points.num_vars();
    if h.len() != n {
        return Err(SchurError::LengthMismatch {
            expected: n,
            got: h.len(),
        });
    }
    if h.iter().all(|&c| c == 0) {
        return Ok(GeneratorReport {
            h: h.to_vec(),
            display: "0".into(),
            poly: KPolynomial::zero(n),
        });
    }
    let vals = distinct_or_full((0..points.len()).map(|i| points.pair(h, i)).collect(), reduced);
    let kname = k_monomial_str(h);
    let mut poly = KPolynomial::one(n);
    let mut factors = Vec::new();
    for c in &vals {
        let f = &KPolynomial::monomial(h.to_vec(), VLaurent::one())
            - &KPolynomial::constant(n, VLaurent::v_pow(*c));
        poly = &poly * &f;
        factors.push(format!("({kname}-{})", v_pow_str(*c)));
    }
    let display = if factors.len() == 1 {
        format!("{kname}-{}", v_pow_str(vals[0]))
    } else {
        factors.concat()
    };
    Ok(GeneratorReport {
        h: h.to_vec(),
        display,
        poly,
    })
}

/// `G_h`: with `h = h_+ - h_-` (both nonnegative), the product of
/// `(K_{h_+} - v^{<h,lambda>} K_{h_-})`; a true polynomial in the `K_a`.
pub fn generator_g(points: &PointSet, h: &[i64], reduced: bool) -> Result<GeneratorReport> {
    if points.scale() != 1 {
        return Err(SchurError::HalfIntegralExponent);
    }
    let n = points.num_vars();
    if h.len() != n {
        return Err(SchurError::LengthMismatch {
            expected: n,
            got: h.len(),
        });
    }
    if h.iter().all(|&c| c == 0) {
        return Ok(GeneratorReport {
            h: h.to_vec(),
            display: "0".into(),
            poly: KPolynomial::zero(n),
        });
    }
    let hp: Vec<i64> = h.iter().map(|&c| c.max(0)).collect();
    let hm: Vec<i64> = h.iter().map(|&c| (-c).max(0)).collect();
    let vals = distinct_or_full((0..points.len()).map(|i| points.pair(h, i)).collect(), reduced);
    let pname = k_monomial_str(&hp);
    let mname = k_monomial_str(&hm);
    let mut poly = KPolynomial::one(n);
    let mut factors = Vec::new();
    for c in &vals {
        let f = &KPolynomial::monomial(hp.clone(), VLaurent::one())
            - &KPolynomial::monomial(hm.clone(), VLaurent::v_pow(*c));
        poly = &poly * &f;
        let tail = match (*c, mname.as_str()) {
            (_, "1") => v_pow_str(*c),
            (0, _) => mname.clone(),
            _ => format!("{}*{}", v_pow_str(*c), mname),
        };
        factors.push(format!("({pname}-{tail})"));
    }
    let display = if factors.len() == 1 {
        factors[0][1..factors[0].len() - 1].to_string()
    } else {
        factors.concat()
    };
    Ok(GeneratorReport {
        h: h.to_vec(),
        display,
        poly,
    })
}

/// Exact identity relating the two generator forms: multiplying `F_h` by the
/// monomial with exponent `N * h_-` (one `h_-` per factor) recovers `G_h`.
pub fn verify_fg_identity(points: &PointSet, h: &[i64], reduced: bool) -> Result<bool> {
    let f = generator_f(points, h, reduced)?;
    let g = generator_g(points, h, reduced)?;
    if h.iter().all(|&c| c == 0) {
        return Ok(true);
    }
    let vals = distinct_or_full(
        (0..points.len()).map(|i| points.pair(h, i)).collect(),
        reduced,
    );
    let nfac = vals.len() as i64;
    let hm: Vec<i64> = h.iter().map(|&c| nfac * (-c).max(0)).collect();
    let shifted = &KPolynomial::monomial(hm, VLaurent::one()) * &f.poly;
    Ok(shifted == g.poly)
}

/// A classical generator: the product of `(h - <h,lambda>)` over the chosen
/// value set, stored by its rational roots.
#[derive(Clone, Debug)]
pub struct ClassicalGenerator {
    pub h: Vec<i64>,
    pub roots: Vec<BigRational>,
    pub display: String,
}

impl ClassicalGenerator {
    /// Value of the generator at `x = <h, lambda>`.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut out = BigRational::one();
        for r in &self.roots {
            out *= x - r;
        }
        out
    }

    /// Value at a stored point of the set.
    pub fn eval_at_point(&self, points: &PointSet, idx: usize) -> BigRational {
        let x = linalg::rat(points.pair(&self.h, idx)) / linalg::rat(points.scale());
        self.eval(&x)
    }
}

fn rational_str(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `prod (h - <h,lambda>)` over `W pi` (or distinct values when `reduced`).
pub fn classical_generator(
    points: &PointSet,
    h: &[i64],
    reduced: bool,
) -> Result<ClassicalGenerator> {
    let n = points.num_vars();
    if h.len() != n {
        return Err(SchurError::LengthMismatch {
            expected: n,
            got: h.len(),
        });
    }
    if h.iter().all(|&c| c == 0) {
        return Ok(ClassicalGenerator {
            h: h.to_vec(),
            roots: vec![],
            display: "0".into(),
        });
    }
    let scaled = distinct_or_full(
        (0..points.len()).map(|i| points.pair(h, i)).collect(),
        reduced,
    );
    let roots: Vec<BigRational> = scaled
        .iter()
        .map(|&c| linalg::rat(c) / linalg::rat(points.scale()))
        .collect();
    let base = h_linear_str(h);
    let single_term = h.iter().filter(|&&c| c != 0).count() == 1 && h.iter().all(|&c| c.abs() <= 1);
    let mut factors = Vec::new();
    for r in &roots {
        if r.is_zero() {
            if single_term {
                factors.push(base.clone());
            } else {
                factors.push(format!("({base})"));
            }
        } else if r.is_negative() {
            factors.push(format!("({base}+{})", rational_str(&-r.clone())));
        } else {
            factors.push(format!("({base}-{})", rational_str(r)));
        }
    }
    let display = if factors.len() == 1 {
        let f = &factors[0];
        if f.starts_with('(') && f.ends_with(')') {
            f[1..f.len() - 1].to_string()
        } else {
            f.clone()
        }
    } else {
        factors.concat()
    };
    Ok(ClassicalGenerator {
        h: h.to_vec(),
        roots,
        display,
    })
}

/// The evaluation homomorphism: value vector of `p` over all points.
pub fn evaluation_hom(points: &PointSet, p: &KPolynomial) -> Result<Vec<VLaurent>> {
    if points.scale() != 1 {
        return Err(SchurError::HalfIntegralExponent);
    }
    let exps: Vec<Vec<i64>> = points.iter().map(|(_, e)| e.clone()).collect();
    Ok(exec::map_collect(exps, |e| p.evaluate(&e)))
}

/// Interpolation idempotent `1_lambda`, stored as an exact
/// numerator/denominator pair; the denominator is the nonzero value of the
/// numerator at `p_lambda`.
#[derive(Clone, Debug)]
pub struct Idempotent {
    pub lambda: Weight,
    pub num: KPolynomial,
    pub den: VLaurent,
}

impl Idempotent {
    /// Exact value at a point; errors when the division leaves the Laurent
    /// ring (possible off the interpolation set).
    pub fn value_at(&self, exps: &[i64]) -> Result<VLaurent> {
        self.num.evaluate(exps).exact_div(&self.den)
    }

    pub fn value_vector(&self, points: &PointSet) -> Result<Vec<VLaurent>> {
        points
            .iter()
            .map(|(_, e)| self.value_at(e))
            .collect()
    }
}

/// Build `1_lambda` for `lambda` in the point set: per coordinate `a`, the
/// factor `J_a` kills every point whose `a`-th coordinate differs, and the
/// product is normalized by its value at `p_lambda`.
pub fn idempotent(points: &PointSet, lambda: &Weight) -> Result<Idempotent> {
    if points.scale() != 1 {
        return Err(SchurError::HalfIntegralExponent);
    }
    let Some(target) = points.exps_of(lambda).map(|e| e.to_vec()) else {
        return Err(SchurError::NotInOrbitSet(lambda.0.clone()));
    };
    let n = points.num_vars();
    let mut num = KPolynomial::one(n);
    for a in 0..n {
        let mut others: Vec<i64> = points
            .iter()
            .map(|(_, e)| e[a])
            .filter(|&x| x != target[a])
            .collect();
        others.sort();
        others.dedup();
        for c in others {
            let f = &KPolynomial::k_var(n, a) - &KPolynomial::constant(n, VLaurent::v_pow(c));
            num = &num * &f;
        }
    }
    let den = num.evaluate(&target);
    if den.is_zero() {
        return Err(SchurError::Oracle("idempotent normalizer vanished".into()));
    }
    Ok(Idempotent {
        lambda: lambda.clone(),
        num,
        den,
    })
}

/// One named pass/fail line of a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Default)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn push(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            pass,
        });
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Default finite family of `h` vectors: the full sum, the basis vectors,
/// and (for the symplectic/orthogonal presets) every sign vector.
pub fn default_h_family(datum: &RootDatum, n: usize) -> Vec<Vec<i64>> {
    let mut family = Vec::new();
    family.push(vec![1i64; n]);
    for a in 0..n {
        let mut h = vec![0i64; n];
        h[a] = 1;
        family.push(h);
    }
    let label = datum.label();
    if label.starts_with("sp(") || label.starts_with("so(") {
        for mask in 0..(1u32 << n) {
            let h: Vec<i64> = (0..n)
                .map(|a| if mask & (1 << a) != 0 { -1 } else { 1 })
                .collect();
            if !family.contains(&h) {
                family.push(h);
            }
        }
    }
    family
}

/// Vanishing of `F_h` on every point, for every `h` in the family.
pub fn verify_vanishing(points: &PointSet, family: &[Vec<i64>], reduced: bool) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for h in family {
        let f = generator_f(points, h, reduced)?;
        let values = evaluation_hom(points, &f.poly)?;
        report.push(
            format!("F[{}] vanishes on P", h_linear_str(h)),
            values.iter().all(|x| x.is_zero()),
        );
    }
    Ok(report)
}

/// The zero-part identity suite: monomial multiplicativity, the idempotent
/// decomposition of `K_h`, orthogonality and partition of unity, and the
/// quantum-integer commutator scalar.
pub fn verify_zero_part_identities(
    datum: &RootDatum,
    points: &PointSet,
    family: &[Vec<i64>],
) -> Result<CheckReport> {
    if points.scale() != 1 {
        return Err(SchurError::HalfIntegralExponent);
    }
    let mut report = CheckReport::default();

    let idems: Vec<Idempotent> = points
        .weights()
        .map(|w| idempotent(points, w))
        .collect::<Result<_>>()?;
    let vectors: Vec<Vec<VLaurent>> = idems
        .iter()
        .map(|i| i.value_vector(points))
        .collect::<Result<_>>()?;

    let deltas = vectors.iter().enumerate().all(|(i, vec)| {
        vec.iter()
            .enumerate()
            .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    });
    report.push("1_lambda value vectors are delta vectors", deltas);

    let mut sum = vec![VLaurent::zero(); points.len()];
    for vec in &vectors {
        for (s, x) in sum.iter_mut().zip(vec) {
            *s = &*s + x;
        }
    }
    report.push("sum of idempotents maps to all-ones", sum.iter().all(|x| x.is_one()));

    let ortho = vectors.iter().enumerate().all(|(i, vi)| {
        vectors.iter().enumerate().all(|(j, vj)| {
            vi.iter().zip(vj).enumerate().all(|(p, (a, b))| {
                let prod = a * b;
                if i == j && p == i {
                    prod.is_one()
                } else if i == j {
                    prod.is_zero()
                } else {
                    prod.is_zero()
                }
            })
        })
    });
    report.push("idempotents are mutually orthogonal", ortho);

    let mut mono_ok = true;
    let mut decomp_ok = true;
    for h in family {
        for h2 in family {
            let sum_h: Vec<i64> = h.iter().zip(h2).map(|(a, b)| a + b).collect();
            let lhs = evaluation_hom(
                points,
                &(&KPolynomial::monomial(h.clone(), VLaurent::one())
                    * &KPolynomial::monomial(h2.clone(), VLaurent::one())),
            )?;
            let rhs = evaluation_hom(points, &KPolynomial::monomial(sum_h, VLaurent::one()))?;
            mono_ok &= lhs == rhs;
        }
        let kh = evaluation_hom(points, &KPolynomial::monomial(h.clone(), VLaurent::one()))?;
        let expected: Vec<VLaurent> = (0..points.len())
            .map(|i| VLaurent::v_pow(points.pair(h, i)))
            .collect();
        decomp_ok &= kh == expected;
    }
    report.push("K_h K_h' = K_{h+h'} on value vectors", mono_ok);
    report.push("K_h = sum of v^{<h,lambda>} 1_lambda", decomp_ok);

    let mut comm_ok = true;
    for i in 0..datum.num_simple() {
        let di = datum.d_i(i);
        for (w, _) in points.iter() {
            let c = datum.pair_coroot(i, w);
            let num = &VLaurent::v_pow(di * c) - &VLaurent::v_pow(-di * c);
            let den = &VLaurent::v_pow(di) - &VLaurent::v_pow(-di);
            let lhs = if num.is_zero() {
                VLaurent::zero()
            } else {
                num.exact_div(&den)?
            };
            comm_ok &= lhs == qint_i(c, di);
        }
    }
    report.push("commutator scalar equals [<h_i,lambda>]_i per point", comm_ok);
    Ok(report)
}

/// Outcome of the brute-force zero-set scan over a coordinate box.
#[derive(Clone, Debug, Serialize)]
pub struct ZeroSetReport {
    pub radius: i64,
    pub box_size: usize,
    pub orbit_size: usize,
    pub extra_h: Vec<Vec<i64>>,
    pub mismatches: Vec<Weight>,
    pub ok: bool,
}

fn box_weights(rank: usize, radius: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut coords = vec![-radius; rank];
    loop {
        out.push(Weight(coords.clone()));
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            coords[i] += 1;
            if coords[i] <= radius {
                break;
            }
            coords[i] = -radius;
            i += 1;
        }
    }
}

/// Brute-force check that the common zero set of the `F_h` family inside the
/// coordinate box is exactly `W pi`. Starts from all `h` with entries in
/// `{-1,0,1}` and greedily adds separating vectors when needed.
pub fn verify_zero_set(
    datum: &RootDatum,
    wpi: &[Weight],
    radius: i64,
    basis: BasisChoice,
) -> Result<ZeroSetReport> {
    let points = PointSet::quantized(datum, wpi, basis)?;
    let n = points.num_vars();
    let member: BTreeSet<&Weight> = wpi.iter().collect();

    let mut family: Vec<Vec<i64>> = box_weights(n, 1)
        .into_iter()
        .map(|w| w.0)
        .filter(|h| h.iter().any(|&c| c != 0))
        .collect();
    let value_sets = |family: &[Vec<i64>]| -> Vec<BTreeSet<i64>> {
        family
            .iter()
            .map(|h| (0..points.len()).map(|i| points.pair(h, i)).collect())
            .collect()
    };

    let cells = box_weights(datum.rank(), radius);
    let box_size = cells.len();
    let mut extra_h: Vec<Vec<i64>> = Vec::new();
    let mut mismatches: Vec<Weight> = Vec::new();

    loop {
        let sets = value_sets(&family);
        let fam = family.clone();
        let flags = exec::map_collect(cells.clone(), |w| {
            let exps = match scaled_exps(datum, basis, &w) {
                Ok(e) => e,
                Err(_) => return (w, false, false),
            };
            if exps.iter().any(|x| x % 2 != 0) {
                // half-integral point: cannot be in the integral zero set
                return (w, false, false);
            }
            let exps: Vec<i64> = exps.iter().map(|x| x / 2).collect();
            let vanishes = fam.iter().zip(&sets).all(|(h, s)| {
                let val: i64 = h.iter().zip(&exps).map(|(a, b)| a * b).sum();
                s.contains(&val)
            });
            (w.clone(), member.contains(&w), vanishes)
        });
        mismatches.clear();
        let mut unresolved: Vec<Weight> = Vec::new();
        for (w, inside, vanishes) in flags {
            if inside != vanishes {
                if inside {
                    mismatches.push(w);
                } else {
                    unresolved.push(w);
                }
            }
        }
        if unresolved.is_empty() {
            return Ok(ZeroSetReport {
                radius,
                box_size,
                orbit_size: points.len(),
                extra_h,
                mismatches: mismatches.clone(),
                ok: mismatches.is_empty(),
            });
        }
        // search a separating h for the first unresolved cell
        let w = &unresolved[0];
        let exps: Vec<i64> = scaled_exps(datum, basis, w)?
            .iter()
            .map(|x| x / 2)
            .collect();
        let mut found = None;
        'search: for r in 2..=6i64 {
            for h in box_weights(n, r) {
                let h = h.0;
                if h.iter().all(|&c| c == 0) || family.contains(&h) {
                    continue;
                }
                let val: i64 = h.iter().zip(&exps).map(|(a, b)| a * b).sum();
                let set: BTreeSet<i64> = (0..points.len()).map(|i| points.pair(&h, i)).collect();
                if !set.contains(&val) {
                    found = Some(h);
                    break 'search;
                }
            }
        }
        match found {
            Some(h) => {
                extra_h.push(h.clone());
                family.push(h);
            }
            None => {
                mismatches.push(w.clone());
                return Ok(ZeroSetReport {
                    radius,
                    box_size,
                    orbit_size: points.len(),
                    extra_h,
                    mismatches,
                    ok: false,
                });
            }
        }
    }
}

/// Report of the shift-substitution check on an enlarged point set.
#[derive(Clone, Debug, Serialize)]
pub struct ShiftReport {
    pub j: usize,
    pub enlarged_size: usize,
    pub checks: Vec<Check>,
}

impl ShiftReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// On `D = W pi` together with all `omega +- alpha_j`, check that the
/// substitution `K_a -> v^{-<H_a,alpha_j>} K_a` turns each `1_lambda` into
/// the indicator of `lambda + alpha_j` on `W pi` (zero when that weight left
/// the orbit set).
pub fn verify_shift_lemma(
    datum: &RootDatum,
    wpi: &[Weight],
    j: usize,
    basis: BasisChoice,
) -> Result<ShiftReport> {
    let alpha = datum.simple_root(j);
    let mut enlarged: BTreeSet<Weight> = wpi.iter().cloned().collect();
    for w in wpi {
        enlarged.insert(w.add(alpha));
        enlarged.insert(w.sub(alpha));
    }
    let enlarged: Vec<Weight> = enlarged.into_iter().collect();
    let points_d = PointSet::quantized(datum, &enlarged, basis)?;
    let alpha_exps = scaled_exps(datum, basis, alpha)?;
    if alpha_exps.iter().any(|x| x % 2 != 0) {
        return Err(SchurError::HalfIntegralExponent);
    }
    let alpha_exps: Vec<i64> = alpha_exps.iter().map(|x| x / 2).collect();
    let wpi_set: BTreeSet<&Weight> = wpi.iter().collect();

    let mut checks = Vec::new();
    for lambda in &enlarged {
        let idem = idempotent(&points_d, lambda)?;
        let shifted = idem.num.shift_substitute(&alpha_exps, -1);
        let target = lambda.add(alpha);
        let mut pass = true;
        for mu in wpi {
            let value = shifted
                .evaluate(points_d.exps_of(mu).unwrap())
                .exact_div(&idem.den)?;
            let expect_one = *mu == target && wpi_set.contains(&target);
            pass &= if expect_one {
                value.is_one()
            } else {
                value.is_zero()
            };
        }
        checks.push(Check {
            name: format!("shift of 1_{lambda} along alpha_{}", j + 1),
            pass,
        });
    }
    Ok(ShiftReport {
        j,
        enlarged_size: enlarged.len(),
        checks,
    })
}

/// Separating-matrix spot check: a nonnegative integer matrix of determinant
/// one whose every row separates `lambda` from the rest of the point set,
/// grown from the identity by row additions.
#[derive(Clone, Debug, Serialize)]
pub struct JacobianReport {
    pub lambda: Weight,
    pub rows: Vec<Vec<i64>>,
    pub det_is_one: bool,
    pub separates: bool,
}

pub fn jacobian_spot_check(points: &PointSet, lambda: &Weight) -> Result<JacobianReport> {
    if points.scale() != 1 {
        return Err(SchurError::HalfIntegralExponent);
    }
    let n = points.num_vars();
    let Some(target) = points.exps_of(lambda).map(|e| e.to_vec()) else {
        return Err(SchurError::NotInOrbitSet(lambda.0.clone()));
    };
    let diffs: Vec<Vec<i64>> = points
        .iter()
        .filter(|(w, _)| w != lambda)
        .map(|(_, e)| e.iter().zip(&target).map(|(a, b)| b - a).collect())
        .collect();
    let dot = |h: &[i64], d: &[i64]| -> i64 { h.iter().zip(d).map(|(a, b)| a * b).sum() };

    let mut c: Vec<Vec<i64>> = (0..n)
        .map(|a| (0..n).map(|b| i64::from(a == b)).collect())
        .collect();
    for a in 0..n {
        for _ in 0..64 {
            let missed: Vec<&Vec<i64>> = diffs.iter().filter(|d| dot(&c[a], d) == 0).collect();
            if missed.is_empty() {
                break;
            }
            let Some(b) = (0..n).find(|&b| b != a && dot(&c[b], missed[0]) != 0) else {
                return Err(SchurError::Oracle(
                    "no separating row available in spot check".into(),
                ));
            };
            // choose m >= 1 so the repaired row misses none of the already
            // separated differences
            let mut m = 1i64;
            loop {
                let row: Vec<i64> = c[a]
                    .iter()
                    .zip(&c[b])
                    .map(|(x, y)| x + m * y)
                    .collect();
                let fixed_first = dot(&row, missed[0]) != 0;
                let kept = diffs
                    .iter()
                    .filter(|d| dot(&c[a], d) != 0)
                    .all(|d| dot(&row, d) != 0);
                if fixed_first && kept {
                    c[a] = row;
                    break;
                }
                m += 1;
                if m > 2 * (points.len() as i64) + 4 {
                    return Err(SchurError::Oracle("row repair did not converge".into()));
                }
            }
        }
    }
    let det = linalg::det(
        &c.iter()
            .map(|row| row.iter().map(|&x| linalg::rat(x)).collect())
            .collect::<Vec<_>>(),
    );
    let separates = c
        .iter()
        .all(|row| diffs.iter().all(|d| dot(row, d) != 0));
    Ok(JacobianReport {
        lambda: lambda.clone(),
        rows: c,
        det_is_one: det.is_one(),
        separates,
    })
}

/// One emitted extra generator of a presentation.
#[derive(Clone, Debug, Serialize)]
pub struct ExtraGenerator {
    pub h: Vec<i64>,
    pub display: String,
}

/// A presentation: standard relations as text plus the extra ideal
/// generators, all verified to vanish on the point set before emission.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub datum: String,
    pub quantized: bool,
    pub reduced: bool,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub extra_generators: Vec<ExtraGenerator>,
}

fn standard_relations(quantized: bool) -> Vec<String> {
    if quantized {
        vec![
            "K_h K_h' = K_{h+h'},  K_0 = 1".into(),
            "K_h E_i K_{-h} = v^{<h,alpha_i>} E_i".into(),
            "K_h F_i K_{-h} = v^{-<h,alpha_i>} F_i".into(),
            "E_i F_j - F_j E_i = delta_{ij} (K~_i - K~_{-i})/(v_i - v_i^{-1})".into(),
            "quantum Serre relations in the E_i and in the F_i".into(),
        ]
    } else {
        vec![
            "[h, h'] = 0".into(),
            "[h, e_i] = <h,alpha_i> e_i".into(),
            "[h, f_i] = -<h,alpha_i> f_i".into(),
            "[e_i, f_j] = delta_{ij} h_i".into(),
            "Serre relations in the e_i and in the f_i".into(),
        ]
    }
}

/// Assemble the presentation data for `pi` over the chosen basis.
pub fn presentation(
    datum: &RootDatum,
    pi: &SaturatedSet,
    quantized: bool,
    reduced: bool,
    basis: BasisChoice,
) -> Result<PresentationReport> {
    let wpi = orbit_union(datum, pi.dominant_weights());
    let points = if quantized {
        PointSet::quantized(datum, &wpi, basis)?
    } else {
        PointSet::new(datum, &wpi, basis)?
    };
    let n = points.num_vars();
    let family = default_h_family(datum, n);
    let mut extra = Vec::new();
    for h in &family {
        if quantized {
            let gen = generator_f(&points, h, reduced)?;
            if gen.poly.is_zero() {
                continue;
            }
            let values = evaluation_hom(&points, &gen.poly)?;
            if values.iter().any(|x| !x.is_zero()) {
                return Err(SchurError::Oracle(format!(
                    "generator for h={h:?} does not vanish on P"
                )));
            }
            extra.push(ExtraGenerator {
                h: h.clone(),
                display: gen.display,
            });
        } else {
            let gen = classical_generator(&points, h, reduced)?;
            if gen.roots.is_empty() && gen.display == "0" {
                continue;
            }
            let vanish = (0..points.len()).all(|i| gen.eval_at_point(&points, i).is_zero());
            if !vanish {
                return Err(SchurError::Oracle(format!(
                    "classical generator for h={h:?} does not vanish"
                )));
            }
            extra.push(ExtraGenerator {
                h: h.clone(),
                display: gen.display,
            });
        }
    }
    let m = datum.num_simple();
    let generators = if quantized {
        let mut g: Vec<String> = (1..=m).flat_map(|i| [format!("E{i}"), format!("F{i}")]).collect();
        g.extend((1..=n).flat_map(|a| [format!("K{a}"), format!("K{a}^-1")]));
        g
    } else {
        let mut g: Vec<String> = (1..=m).flat_map(|i| [format!("e{i}"), format!("f{i}")]).collect();
        g.extend((1..=n).map(|a| format!("H{a}")));
        g
    };
    Ok(PresentationReport {
        datum: datum.label().to_string(),
        quantized,
        reduced,
        generators,
        relations: standard_relations(quantized),
        extra_generators: extra,
    })
}

/// Signed-composition style direct enumeration of the orbit set sizes for
/// the classical presets: tuples with given absolute-value sum parity and
/// bound. Used as an independent oracle for `|W pi|` counts.
pub fn count_signed_tuples(n: usize, r: i64, same_parity: bool) -> usize {
    // tuples (c_1..c_n) of integers with sum |c_i| <= r and, when
    // `same_parity`, sum |c_i| congruent to r mod 2
    fn rec(n: usize, budget: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for c in -budget..=budget {
            acc.push(c);
            rec(n - 1, budget - c.abs(), acc, out);
            acc.pop();
        }
    }
    let mut all = Vec::new();
    rec(n, r, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|t| {
            let s: i64 = t.iter().map(|c| c.abs()).sum();
            !same_parity || (r - s) % 2 == 0
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::Engine;
    use crate::rootdata::{preset, PresetKind};
    use crate::weylgroup;

    fn tensor_pi(datum: &RootDatum, v: &Weight, r: usize) -> SaturatedSet {
        let engine = Engine::new(datum).unwrap();
        let factors = engine.tensor_power_factors(v, r).unwrap();
        let piplus = engine.pi_plus(&factors).unwrap();
        SaturatedSet::closure(datum, &piplus).unwrap()
    }

    fn gl2_r2_points() -> (RootDatum, PointSet) {
        let d = preset(PresetKind::Gl, 2).unwrap();
        let pi = tensor_pi(&d, &Weight(vec![1, 0]), 2);
        let wpi = weylgroup::orbit_union(&d, pi.dominant_weights());
        let p = PointSet::quantized(&d, &wpi, BasisChoice::Canonical).unwrap();
        (d, p)
    }

    #[test]
    fn point_coordinates() {
        let (_, p) = gl2_r2_points();
        assert_eq!(p.len(), 3);
        assert_eq!(p.exps_of(&Weight(vec![2, 0])).unwrap(), &[2, 0]);
        assert_eq!(p.exps_of(&Weight(vec![1, 1])).unwrap(), &[1, 1]);
        assert_eq!(p.scale(), 1);
    }

    #[test]
    fn c2_r1_points() {
        let d = preset(PresetKind::Sp, 2).unwrap();
        let pi = tensor_pi(&d, &Weight(vec![1, 0]), 1);
        let wpi = weylgroup::orbit_union(&d, pi.dominant_weights());
        let p = PointSet::quantized(&d, &wpi, BasisChoice::Canonical).unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn spin_point_basis_rules() {
        let d = preset(PresetKind::SpinB, 2).unwrap();
        let pi = tensor_pi(&d, &Weight(vec![0, 1]), 1);
        let wpi = weylgroup::orbit_union(&d, pi.dominant_weights());
        // canonical dual basis stays integral
        assert!(PointSet::quantized(&d, &wpi, BasisChoice::Canonical).is_ok());
        // epsilon view is half-integral on the spin orbit
        let eps = PointSet::new(&d, &wpi, BasisChoice::Epsilon).unwrap();
        assert_eq!(eps.scale(), 2);
        assert!(PointSet::quantized(&d, &wpi, BasisChoice::Epsilon).is_err());
    }

    #[test]
    fn generator_displays_gl2() {
        let (_, p) = gl2_r2_points();
        let f1 = generator_f(&p, &[1, 0], true).unwrap();
        assert_eq!(f1.display, "(K1-1)(K1-v)(K1-v^2)");
        let fsum = generator_f(&p, &[1, 1], true).unwrap();
        assert_eq!(fsum.display, "K1*K2-v^2");
        let c1 = classical_generator(&p, &[1, 0], true).unwrap();
        assert_eq!(c1.display, "H1(H1-1)(H1-2)");
        let csum = classical_generator(&p, &[1, 1], true).unwrap();
        assert_eq!(csum.display, "H1+H2-2");
    }

    #[test]
    fn generators_vanish() {
        let (d, p) = gl2_r2_points();
        for h in default_h_family(&d, 2) {
            let f = generator_f(&p, &h, true).unwrap();
            assert!(evaluation_hom(&p, &f.poly).unwrap().iter().all(|x| x.is_zero()));
            let full = generator_f(&p, &h, false).unwrap();
            assert!(evaluation_hom(&p, &full.poly).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn fg_identity() {
        let (_, p) = gl2_r2_points();
        for h in [vec![1, 0], vec![1, -1], vec![-1, 1], vec![0, -1], vec![0, 0]] {
            assert!(verify_fg_identity(&p, &h, true).unwrap());
            assert!(verify_fg_identity(&p, &h, false).unwrap());
        }
        // G_h is a true polynomial
        let g = generator_g(&p, &[1, -1], true).unwrap();
        assert!(g.poly.is_polynomial());
    }

    #[test]
    fn idempotents_are_deltas() {
        let (_, p) = gl2_r2_points();
        let idem = idempotent(&p, &Weight(vec![1, 1])).unwrap();
        let vals = idem.value_vector(&p).unwrap();
        let idx = p.index_of(&Weight(vec![1, 1])).unwrap();
        for (i, v) in vals.iter().enumerate() {
            assert_eq!(v.is_one(), i == idx);
            assert_eq!(v.is_zero(), i != idx);
        }
        assert!(idempotent(&p, &Weight(vec![5, 5])).is_err());
    }

    #[test]
    fn zero_part_suite_gl2() {
        let (d, p) = gl2_r2_points();
        let fam = default_h_family(&d, 2);
        let rep = verify_zero_part_identities(&d, &p, &fam).unwrap();
        assert!(rep.ok(), "{:?}", rep.checks);
    }

    #[test]
    fn zero_part_suite_trivial() {
        let d = preset(PresetKind::Gl, 2).unwrap();
        let p = PointSet::quantized(&d, &[Weight(vec![0, 0])], BasisChoice::Canonical).unwrap();
        let rep = verify_zero_part_identities(&d, &p, &default_h_family(&d, 2)).unwrap();
        assert!(rep.ok());
        let idem = idempotent(&p, &Weight(vec![0, 0])).unwrap();
        assert!(idem.num.is_zero() == false);
        assert!(idem.value_at(&[0, 0]).unwrap().is_one());
    }

    #[test]
    fn zero_part_suite_spin_coroot_basis() {
        let d = preset(PresetKind::SpinB, 2).unwrap();
        let pi = tensor_pi(&d, &Weight(vec![0, 1]), 1);
        let wpi = weylgroup::orbit_union(&d, pi.dominant_weights());
        let p = PointSet::quantized(&d, &wpi, BasisChoice::Coroot).unwrap();
        let rep = verify_zero_part_identities(&d, &p, &default_h_family(&d, 2)).unwrap();
        assert!(rep.ok(), "{:?}", rep.checks);
    }

    #[test]
    fn shift_lemma_gl2() {
        let d = preset(PresetKind::Gl, 2).unwrap();
        let pi = tensor_pi(&d, &Weight(vec![1, 0]), 2);
        let wpi = weylgroup::orbit_union(&d, pi.dominant_weights());
        let rep = verify_shift_lemma(&d, &wpi, 0, BasisChoice::Canonical).unwrap();
        assert!(rep.ok(), "{:?}", rep.checks);
    }

    #[test]
    fn zero_set_box_gl2() {
        let d = preset(PresetKind::Gl, 2).unwrap();
        let pi = tensor_pi(&d, &Weight(vec![1, 0]), 2);
        let wpi = weylgroup::orbit_union(&d, pi.dominant_weights());
        let rep = verify_zero_set(&d, &wpi, 4, BasisChoice::Canonical).unwrap();
        assert!(rep.ok, "{rep:?}");
        assert_eq!(rep.orbit_size, 3);
    }

    #[test]
    fn zero_set_trivial() {
        let d = preset(PresetKind::Gl, 2).unwrap();
        let rep = verify_zero_set(&d, &[Weight(vec![0, 0])], 2, BasisChoice::Canonical).unwrap();
        assert!(rep.ok, "{rep:?}");
    }

    #[test]
    fn jacobian_gl2() {
        let (_, p) = gl2_r2_points();
        let rep = jacobian_spot_check(&p, &Weight(vec![2, 0])).unwrap();
        assert!(rep.det_is_one);
        assert!(rep.separates);
        assert!(rep.rows.iter().all(|r| r.iter().all(|&x| x >= 0)));
    }

    #[test]
    fn presentation_gl2_quantized() {
        let d = preset(PresetKind::Gl, 2).unwrap();
        let pi = tensor_pi(&d, &Weight(vec![1, 0]), 2);
        let rep = presentation(&d, &pi, true, true, BasisChoice::Canonical).unwrap();
        let displays: Vec<&str> = rep
            .extra_generators
            .iter()
            .map(|g| g.display.as_str())
            .collect();
        assert_eq!(
            displays,
            vec!["K1*K2-v^2", "(K1-1)(K1-v)(K1-v^2)", "(K2-1)(K2-v)(K2-v^2)"]
        );
    }

    #[test]
    fn presentation_spin_classical_epsilon() {
        let d = preset(PresetKind::SpinB, 2).unwrap();
        let pi = tensor_pi(&d, &Weight(vec![0, 1]), 2);
        let rep = presentation(&d, &pi, false, true, BasisChoice::Epsilon).unwrap();
        let h1 = rep
            .extra_generators
            .iter()
            .find(|g| g.h == vec![1, 0])
            .unwrap();
        assert_eq!(h1.display, "(H1+1)H1(H1-1)");
    }

    #[test]
    fn signed_tuple_counts() {
        // parity-matched: only the signed compositions of 1 itself
        assert_eq!(count_signed_tuples(2, 1, true), 4);
        // without the parity filter the zero tuple joins in
        assert_eq!(count_signed_tuples(2, 1, false), 5);
        // signed compositions of 2 and 0 into two parts
        assert_eq!(count_signed_tuples(2, 2, true), 9);
    }
}
