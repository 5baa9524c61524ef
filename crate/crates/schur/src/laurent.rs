//! Exact scalar arithmetic: Laurent polynomials in `v` over arbitrary-precision
//! rationals, quantum integers and Gaussian binomials, and sparse multivariate
//! Laurent polynomials in the variables `K1..Kn`.
//!
//! Both polynomial types keep a canonical sparse form (no zero terms stored),
//! so structural equality is semantic equality. Division is exact-or-error;
//! nothing here ever leaves the Laurent ring silently.

use crate::error::{Result, SchurError};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Laurent polynomial in `v` with rational coefficients.
///
/// Invariant: no zero coefficient is ever stored, so the map is a canonical
/// form and `==` decides ring equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct VLaurent {
    terms: BTreeMap<i64, BigRational>,
}

impl VLaurent {
    pub fn zero() -> Self {
        VLaurent::default()
    }

    pub fn one() -> Self {
        VLaurent::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        VLaurent { terms }
    }

    /// The monomial `c * v^exp`.
    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        VLaurent { terms }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, BigRational::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert_add(&mut self, exp: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = VLaurent::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The classical specialization at `v = 1`.
    pub fn eval_at_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, b| a + b)
    }

    /// Substitute `v -> v^d`.
    pub fn specialize(&self, d: i64) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e * d, c.clone());
        }
        VLaurent { terms }
    }

    /// The bar involution `v <-> v^-1`.
    pub fn bar(&self) -> Self {
        self.specialize(-1)
    }

    /// Exact division; errors if the quotient leaves the Laurent ring.
    pub fn exact_div(&self, divisor: &VLaurent) -> Result<VLaurent> {
        if divisor.is_zero() {
            return Err(SchurError::InexactDivision);
        }
        if self.is_zero() {
            return Ok(VLaurent::zero());
        }
        let (na, da) = self.dense();
        let (nb, db) = divisor.dense();
        // ordinary polynomial long division on the shifted forms
        let mut rem = na;
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(nb.len()) + 1];
        let lead_b = nb.last().unwrap().clone();
        while rem.len() >= nb.len() {
            let lead_r = rem.last().unwrap().clone();
            let deg = rem.len() - nb.len();
            let q = &lead_r / &lead_b;
            quot[deg] = q.clone();
            for (i, b) in nb.iter().enumerate() {
                rem[deg + i] -= &q * b;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        if !rem.is_empty() {
            return Err(SchurError::InexactDivision);
        }
        let shift = da - db;
        let mut out = VLaurent::zero();
        for (i, c) in quot.into_iter().enumerate() {
            out.insert_add(i as i64 + shift, &c);
        }
        Ok(out)
    }

    /// Dense ascending coefficients plus the exponent shift that was factored out.
    fn dense(&self) -> (Vec<BigRational>, i64) {
        let min = *self.terms.keys().next().unwrap();
        let max = *self.terms.keys().next_back().unwrap();
        let mut v = vec![BigRational::zero(); (max - min + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - min) as usize] = c.clone();
        }
        (v, min)
    }
}

impl Neg for &VLaurent {
    type Output = VLaurent;
    fn neg(self) -> VLaurent {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        VLaurent { terms }
    }
}

impl Add for &VLaurent {
    type Output = VLaurent;
    fn add(self, rhs: &VLaurent) -> VLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c);
        }
        out
    }
}

impl Sub for &VLaurent {
    type Output = VLaurent;
    fn sub(self, rhs: &VLaurent) -> VLaurent {
        self + &(-rhs)
    }
}

impl Mul for &VLaurent {
    type Output = VLaurent;
    fn mul(self, rhs: &VLaurent) -> VLaurent {
        let mut out = VLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert_add(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

/// The quantum integer `[a] = (v^a - v^-a)/(v - v^-1)`.
pub fn qint(a: i64) -> VLaurent {
    if a == 0 {
        return VLaurent::zero();
    }
    let n = a.abs();
    let mut p = VLaurent::zero();
    for k in 0..n {
        p.insert_add(n - 1 - 2 * k, &BigRational::one());
    }
    if a < 0 {
        -&p
    } else {
        p
    }
}

/// `[a]` in the `v_i = v^d` normalization.
pub fn qint_i(a: i64, d: i64) -> VLaurent {
    qint(a).specialize(d)
}

/// The Gaussian binomial, via the defining product with exact division.
pub fn qbinom(a: i64, t: u64) -> VLaurent {
    let mut num = VLaurent::one();
    for s in 1..=t as i64 {
        let e = a - s + 1;
        let factor = &VLaurent::v_pow(e) - &VLaurent::v_pow(-e);
        num = &num * &factor;
    }
    for s in 1..=t as i64 {
        let den = &VLaurent::v_pow(s) - &VLaurent::v_pow(-s);
        // division of the full numerator product is always exact here
        num = num.exact_div(&den).expect("Gaussian binomial division is exact");
    }
    num
}

fn fmt_rational(q: &BigRational) -> String {
    q.to_string()
}

impl fmt::Display for VLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vpart = match e {
                0 => None,
                1 => Some("v".to_string()),
                _ => Some(format!("v^{e}")),
            };
            match (vpart, abs.is_one()) {
                (None, _) => write!(f, "{}", fmt_rational(&abs))?,
                (Some(vp), true) => write!(f, "{vp}")?,
                (Some(vp), false) => write!(f, "{}*{vp}", fmt_rational(&abs))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for VLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for VLaurent {
    type Err = SchurError;

    fn from_str(s: &str) -> Result<VLaurent> {
        let mut out = VLaurent::zero();
        for (sign, term) in split_terms(s)? {
            let mut coeff = BigRational::one();
            let mut exp: i64 = 0;
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(SchurError::Parse(format!("empty factor in '{s}'")));
                }
                if let Some(rest) = factor.strip_prefix('v') {
                    if rest.is_empty() {
                        exp += 1;
                    } else if let Some(e) = rest.strip_prefix('^') {
                        exp += e
                            .parse::<i64>()
                            .map_err(|_| SchurError::Parse(format!("bad exponent '{e}'")))?;
                    } else {
                        return Err(SchurError::Parse(format!("bad factor '{factor}'")));
                    }
                } else {
                    let q = BigRational::from_str(factor)
                        .map_err(|_| SchurError::Parse(format!("bad coefficient '{factor}'")))?;
                    coeff *= q;
                }
            }
            if sign < 0 {
                coeff = -coeff;
            }
            out.insert_add(exp, &coeff);
        }
        Ok(out)
    }
}

/// Split a polynomial string into signed top-level terms (no parentheses).
fn split_terms(s: &str) -> Result<Vec<(i32, String)>> {
    let s = s.trim();
    if s == "0" {
        return Ok(vec![]);
    }
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut sign = 1;
    let mut prev_was_op = true;
    let mut depth = 0usize;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
                prev_was_op = false;
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| SchurError::Parse(format!("unbalanced parens in '{s}'")))?;
                current.push(ch);
                prev_was_op = false;
            }
            '+' | '-' if depth == 0 && !prev_was_op => {
                // '-' inside an exponent like v^-2 is not a term separator
                if current.ends_with('^') {
                    current.push(ch);
                } else {
                    if !current.trim().is_empty() {
                        terms.push((sign, current.trim().to_string()));
                    }
                    current = String::new();
                    sign = if ch == '-' { -1 } else { 1 };
                    prev_was_op = true;
                }
            }
            '-' if depth == 0 && prev_was_op => {
                sign = -sign;
            }
            ' ' => {}
            _ => {
                current.push(ch);
                prev_was_op = false;
            }
        }
    }
    if !current.trim().is_empty() {
        terms.push((sign, current.trim().to_string()));
    }
    if depth != 0 {
        return Err(SchurError::Parse(format!("unbalanced parens in '{s}'")));
    }
    Ok(terms)
}

/// Sparse Laurent polynomial in the commuting variables `K1..Kn` with
/// `VLaurent` coefficients. Negative exponents are allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct KPolynomial {
    n: usize,
    terms: BTreeMap<Vec<i64>, VLaurent>,
}

impl KPolynomial {
    pub fn zero(n: usize) -> Self {
        KPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, VLaurent::one())
    }

    pub fn constant(n: usize, c: VLaurent) -> Self {
        Self::monomial(vec![0; n], c)
    }

    /// The monomial `c * K^exps`.
    pub fn monomial(exps: Vec<i64>, c: VLaurent) -> Self {
        let n = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        KPolynomial { n, terms }
    }

    /// The variable `K_{a+1}` (zero-based index).
    pub fn k_var(n: usize, a: usize) -> Self {
        let mut exps = vec![0; n];
        exps[a] = 1;
        Self::monomial(exps, VLaurent::one())
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &VLaurent)> {
        self.terms.iter()
    }

    /// True when every exponent is nonnegative (a true polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    fn insert_add(&mut self, exps: Vec<i64>, c: &VLaurent) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(VLaurent::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scalar_mul(&self, c: &VLaurent) -> Self {
        let mut out = KPolynomial::zero(self.n);
        for (e, q) in &self.terms {
            out.insert_add(e.clone(), &(q * c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = KPolynomial::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `K_a -> v^{e_a}`; `point_exps` are the integer exponents.
    pub fn evaluate(&self, point_exps: &[i64]) -> VLaurent {
        assert_eq!(point_exps.len(), self.n);
        let mut out = VLaurent::zero();
        for (exps, c) in &self.terms {
            let shift: i64 = exps.iter().zip(point_exps).map(|(a, b)| a * b).sum();
            out = &out + &(c * &VLaurent::v_pow(shift));
        }
        out
    }

    /// Substitute `K_a -> v^{sign * s_a} K_a` for a shift vector `s`.
    pub fn shift_substitute(&self, shift: &[i64], sign: i64) -> Self {
        assert_eq!(shift.len(), self.n);
        let mut out = KPolynomial::zero(self.n);
        for (exps, c) in &self.terms {
            let e: i64 = exps.iter().zip(shift).map(|(a, b)| a * b).sum();
            out.insert_add(exps.clone(), &(c * &VLaurent::v_pow(sign * e)));
        }
        out
    }
}

impl Neg for &KPolynomial {
    type Output = KPolynomial;
    fn neg(self) -> KPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        KPolynomial { n: self.n, terms }
    }
}

impl Add for &KPolynomial {
    type Output = KPolynomial;
    fn add(self, rhs: &KPolynomial) -> KPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c);
        }
        out
    }
}

impl Sub for &KPolynomial {
    type Output = KPolynomial;
    fn sub(self, rhs: &KPolynomial) -> KPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &KPolynomial {
    type Output = KPolynomial;
    fn mul(self, rhs: &KPolynomial) -> KPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = KPolynomial::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, &(c1 * c2));
            }
        }
        out
    }
}

fn fmt_k_monomial(exps: &[i64]) -> String {
    let mut parts = Vec::new();
    for (a, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(format!("K{}", a + 1));
        } else {
            parts.push(format!("K{}^{e}", a + 1));
        }
    }
    parts.join("*")
}

impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (exps, c) in &self.terms {
            let kpart = fmt_k_monomial(exps);
            if kpart.is_empty() {
                parts.push(c.to_string());
            } else if c.is_one() {
                parts.push(kpart);
            } else if c.terms.len() == 1 {
                parts.push(format!("{c}*{kpart}"));
            } else {
                parts.push(format!("({c})*{kpart}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl KPolynomial {
    /// Parse the grammar produced by `Display`. `n` fixes the variable count.
    pub fn parse(s: &str, n: usize) -> Result<KPolynomial> {
        let mut out = KPolynomial::zero(n);
        for (sign, term) in split_terms(s)? {
            let mut coeff = VLaurent::one();
            let mut exps = vec![0i64; n];
            for factor in split_factors(&term) {
                let factor = factor.trim();
                if let Some(inner) = factor.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                    coeff = &coeff * &VLaurent::from_str(inner)?;
                } else if let Some(rest) = factor.strip_prefix('K') {
                    let (idx, e) = match rest.split_once('^') {
                        Some((i, e)) => (
                            i.parse::<usize>()
                                .map_err(|_| SchurError::Parse(format!("bad index '{i}'")))?,
                            e.parse::<i64>()
                                .map_err(|_| SchurError::Parse(format!("bad exponent '{e}'")))?,
                        ),
                        None => (
                            rest.parse::<usize>()
                                .map_err(|_| SchurError::Parse(format!("bad index '{rest}'")))?,
                            1,
                        ),
                    };
                    if idx == 0 || idx > n {
                        return Err(SchurError::Parse(format!("variable K{idx} out of range")));
                    }
                    exps[idx - 1] += e;
                } else {
                    coeff = &coeff * &VLaurent::from_str(factor)?;
                }
            }
            if sign < 0 {
                coeff = -&coeff;
            }
            out.insert_add(exps, &coeff);
        }
        Ok(out)
    }
}

/// Split a term on `*` at paren depth zero.
fn split_factors(term: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for ch in term.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(ch);
            }
            '*' if depth == 0 => {
                parts.push(current.clone());
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    if !current.is_empty() {
        parts.push(current);
    }
    parts
}
