//! Exact arithmetic for Laurent polynomials, rational functions, and
//! truncated power series in the variable `z = q^{-s}`.
//!
//! Coefficients are cyclotomic numbers ([`Cyclo`]); complex rationals embed as
//! the fourth-root subfield and are the only coefficients accepted by the JSON
//! interchange format. Rational functions are kept reduced with denominator
//! constant term 1, so L-factor comparison is structural equality.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::exact::{qrat_from_str, qrat_to_string, CRat, Cyclo};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QseriesError {
    /// Denominator vanishes identically at z = 0 even after factoring out
    /// the monomial part, so no Taylor expansion exists.
    #[error("rational function has a pole at z = 0")]
    PoleAtZero,
    /// Numeric evaluation requested exactly at a pole.
    #[error("division by zero: evaluation point is a pole")]
    DivisionByZero,
    #[error("denominator polynomial is identically zero")]
    ZeroDenominator,
    #[error("malformed serialized data: {0}")]
    BadSerialization(String),
    /// JSON interchange carries complex-rational coefficients only.
    #[error("coefficient is outside Q(i) and cannot be serialized")]
    NonRationalCoefficient,
}

/// Laurent polynomial: finitely many exact coefficients indexed by integer
/// exponent. Stored coefficients are nonzero.
#[derive(Clone)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Cyclo>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, Cyclo::one())
    }

    pub fn monomial(exp: i64, coeff: Cyclo) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_coeffs(coeffs: &[(i64, Cyclo)]) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    /// Convenience: integer coefficients for z^0, z^1, ... .
    pub fn from_ints(coeffs: &[i64]) -> Self {
        LaurentPoly::from_coeffs(
            &coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as i64, Cyclo::from_int(c)))
                .collect::<Vec<_>>(),
        )
    }

    fn add_term(&mut self, exp: i64, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Cyclo {
        self.terms.get(&exp).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Cyclo)> {
        self.terms.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v.mul(c));
        }
        out
    }

    /// Multiply by z^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute z ↦ c/z (used to realize s ↦ 1−s on z = q^{-s} with c = 1/q).
    pub fn subst_inv(&self, c: &Cyclo) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, v) in &self.terms {
            let factor = if *e >= 0 {
                c.pow(*e as u32)
            } else {
                c.inv().expect("substitution constant must be nonzero")
                    .pow((-e) as u32)
            };
            out.add_term(-e, v.mul(&factor));
        }
        out
    }

    /// Substitute z ↦ c·z (realizes s ↦ s + u for c = q^{-u}).
    pub fn scale_var(&self, c: &Cyclo) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, v) in &self.terms {
            let factor = if *e >= 0 {
                c.pow(*e as u32)
            } else {
                c.inv().expect("substitution constant must be nonzero")
                    .pow((-e) as u32)
            };
            out.add_term(*e, v.mul(&factor));
        }
        out
    }

    /// Formal derivative d/dz.
    pub fn derivative(&self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            if *e != 0 {
                out.add_term(e - 1, c.scale(&CRat::from_int(*e)));
            }
        }
        out
    }

    pub fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            acc += c.to_c64() * z.powi(*e as i32);
        }
        acc
    }

    /// Sum of coefficient magnitudes, a rigorous bound for |value| on |z| ≤ 1
    /// when all exponents are nonnegative.
    pub fn coeff_abs_sum(&self) -> f64 {
        self.terms.values().map(|c| c.abs_upper_bound()).sum()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => format!("({c:?})"),
                1 => format!("({c:?})z"),
                _ => format!("({c:?})z^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Truncated power series: exact coefficients for z^0..z^N.
#[derive(Clone, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Cyclo>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Cyclo>) -> Self {
        assert!(!coeffs.is_empty());
        PowerSeries { coeffs }
    }

    /// Truncation order N (the series carries z^0..z^N).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Cyclo {
        self.coeffs.get(k).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.coeffs
    }

    /// Arithmetic truncates to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        PowerSeries::new(
            (0..=n)
                .map(|k| self.coeff(k).add(&other.coeff(k)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Cyclo::zero(); n + 1];
        for i in 0..=n {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let t = a.mul(&other.coeff(j));
                out[i + j] = out[i + j].add(&t);
            }
        }
        PowerSeries::new(out)
    }
}

/// Reduced rational function `num/den` in z.
///
/// Normal form: `den` is an ordinary polynomial with constant term 1 and
/// gcd(num·z^-ord, den) = 1; any monomial mismatch lives in `num`, which may
/// have negative exponents.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QseriesError> {
        if den.is_zero() {
            return Err(QseriesError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn zero() -> Self {
        RationalFn {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFn {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RationalFn::zero();
        }
        // Shift both to ordinary polynomials with nonzero constant term.
        let a = num.min_exp().unwrap();
        let b = den.min_exp().unwrap();
        let n = num.shift(-a);
        let d = den.shift(-b);
        let g = poly_gcd(&n, &d);
        let n = poly_div_exact(&n, &g);
        let d = poly_div_exact(&d, &g);
        // Scale so den(0) = 1.
        let c0 = d.coeff(0);
        debug_assert!(!c0.is_zero());
        let inv = c0.inv().unwrap();
        RationalFn {
            num: n.scale(&inv).shift(a - b),
            den: d.scale(&inv),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is trivial (the function is a Laurent polynomial).
    pub fn is_laurent_poly(&self) -> bool {
        self.den.eq(&LaurentPoly::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self, QseriesError> {
        if other.is_zero() {
            return Err(QseriesError::ZeroDenominator);
        }
        Ok(Self::normalize(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }

    pub fn shift(&self, k: i64) -> Self {
        RationalFn {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn eq(&self, other: &Self) -> bool {
        // Cross-multiplied equality avoids relying on normal-form uniqueness.
        self.num.mul(&other.den).eq(&other.num.mul(&self.den))
    }

    /// Substitute z ↦ c/z and renormalize.
    pub fn subst_inv(&self, c: &Cyclo) -> Self {
        Self::normalize(self.num.subst_inv(c), self.den.subst_inv(c))
    }

    /// Substitute z ↦ c·z and renormalize.
    pub fn scale_var(&self, c: &Cyclo) -> Self {
        Self::normalize(self.num.scale_var(c), self.den.scale_var(c))
    }

    /// First N+1 Taylor coefficients at z = 0. The function must be
    /// holomorphic at 0 (no monomial pole left after reduction).
    pub fn expand(&self, n: usize) -> Result<PowerSeries, QseriesError> {
        if self.is_zero() {
            return Ok(PowerSeries::new(vec![Cyclo::zero(); n + 1]));
        }
        if self.num.min_exp().unwrap() < 0 {
            return Err(QseriesError::PoleAtZero);
        }
        Ok(PowerSeries::new(self.laurent_coeffs(0, n as i64)))
    }

    /// Laurent coefficients for exponents lo..=hi at z = 0.
    ///
    /// The expansion is the one valid near 0: den has constant term 1, so
    /// 1/den is a formal power series and num may shift it into negative
    /// exponents.
    pub fn laurent_coeffs(&self, lo: i64, hi: i64) -> Vec<Cyclo> {
        assert!(lo <= hi);
        let len = (hi - lo + 1) as usize;
        if self.is_zero() {
            return vec![Cyclo::zero(); len];
        }
        let shift = self.num.min_exp().unwrap();
        // Need series of num·z^{-shift}/den up to exponent hi − shift.
        let top = hi - shift;
        if top < 0 {
            return vec![Cyclo::zero(); len];
        }
        let order = top as usize;
        // Invert den as a power series: den = 1 + Σ d_k z^k.
        let mut inv = vec![Cyclo::zero(); order + 1];
        inv[0] = Cyclo::one();
        for k in 1..=order {
            let mut acc = Cyclo::zero();
            for (e, c) in self.den.terms() {
                let e = *e as usize;
                if e >= 1 && e <= k {
                    acc = acc.add(&c.mul(&inv[k - e]));
                }
            }
            inv[k] = acc.neg();
        }
        // Multiply by the shifted numerator.
        let mut series = vec![Cyclo::zero(); order + 1];
        for (e, c) in self.num.terms() {
            let e = (e - shift) as usize;
            for k in e..=order {
                let t = c.mul(&inv[k - e]);
                series[k] = series[k].add(&t);
            }
        }
        (lo..=hi)
            .map(|k| {
                let idx = k - shift;
                if idx < 0 {
                    Cyclo::zero()
                } else {
                    series[idx as usize].clone()
                }
            })
            .collect()
    }

    /// Single Laurent coefficient at z = 0.
    pub fn laurent_coeff(&self, k: i64) -> Cyclo {
        self.laurent_coeffs(k, k).pop().unwrap()
    }

    /// Floating Laurent coefficients (same expansion as `laurent_coeffs`,
    /// run in f64 for large sweeps where exactness is not required).
    pub fn laurent_coeffs_f64(&self, lo: i64, hi: i64) -> Vec<Complex64> {
        assert!(lo <= hi);
        let len = (hi - lo + 1) as usize;
        if self.is_zero() {
            return vec![Complex64::new(0.0, 0.0); len];
        }
        let shift = self.num.min_exp().unwrap();
        let top = hi - shift;
        if top < 0 {
            return vec![Complex64::new(0.0, 0.0); len];
        }
        let order = top as usize;
        let den: Vec<(usize, Complex64)> = self
            .den
            .terms()
            .filter(|(e, _)| **e >= 1)
            .map(|(e, c)| (*e as usize, c.to_c64()))
            .collect();
        let mut inv = vec![Complex64::new(0.0, 0.0); order + 1];
        inv[0] = Complex64::new(1.0, 0.0);
        for k in 1..=order {
            let mut acc = Complex64::new(0.0, 0.0);
            for (e, c) in &den {
                if *e <= k {
                    acc += c * inv[k - e];
                }
            }
            inv[k] = -acc;
        }
        let mut series = vec![Complex64::new(0.0, 0.0); order + 1];
        for (e, c) in self.num.terms() {
            let e = (e - shift) as usize;
            let cv = c.to_c64();
            for k in e..=order {
                series[k] += cv * inv[k - e];
            }
        }
        (lo..=hi)
            .map(|k| {
                let idx = k - shift;
                if idx < 0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    series[idx as usize]
                }
            })
            .collect()
    }

    /// Coefficient of z^{-1} in the Laurent expansion at z = 0; zero when the
    /// function is holomorphic there.
    pub fn residue_at_zero(&self) -> Cyclo {
        self.laurent_coeff(-1)
    }

    /// Floating evaluation away from poles, with a crude condition-number
    /// estimate (|num'|·eps-style sensitivity of the quotient).
    pub fn eval(&self, z: Complex64) -> Result<(Complex64, f64), QseriesError> {
        let dv = self.den.eval(z);
        let nv = self.num.eval(z);
        if dv.norm() == 0.0 {
            return Err(QseriesError::DivisionByZero);
        }
        let value = nv / dv;
        // Condition estimate: sum of term magnitudes over |result·den|.
        let zn = z.norm();
        let mag = |p: &LaurentPoly| -> f64 {
            p.terms()
                .map(|(e, c)| c.to_c64().norm() * zn.powi(*e as i32))
                .sum::<f64>()
        };
        let cond = (mag(&self.num) + value.norm() * mag(&self.den)) / dv.norm();
        Ok((value, cond * f64::EPSILON))
    }

    // ---- JSON interchange ----
    //
    // Shape: {"num": {"<exp>": ["re", "im"], ...}, "den": {...}} with the
    // entries rational strings like "3/4". Coefficients must lie in Q(i).

    pub fn to_json(&self) -> Result<Value, QseriesError> {
        Ok(json!({
            "num": poly_to_json(&self.num)?,
            "den": poly_to_json(&self.den)?,
        }))
    }

    pub fn from_json(v: &Value) -> Result<Self, QseriesError> {
        let num = poly_from_json(
            v.get("num")
                .ok_or_else(|| QseriesError::BadSerialization("missing num".into()))?,
        )?;
        let den = poly_from_json(
            v.get("den")
                .ok_or_else(|| QseriesError::BadSerialization("missing den".into()))?,
        )?;
        RationalFn::new(num, den)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> Result<Value, QseriesError> {
    let mut map = Map::new();
    for (e, c) in p.terms() {
        let c = c.as_crat().ok_or(QseriesError::NonRationalCoefficient)?;
        map.insert(
            e.to_string(),
            json!([qrat_to_string(&c.re), qrat_to_string(&c.im)]),
        );
    }
    Ok(Value::Object(map))
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly, QseriesError> {
    let obj = v
        .as_object()
        .ok_or_else(|| QseriesError::BadSerialization("polynomial must be an object".into()))?;
    let mut out = LaurentPoly::zero();
    for (k, entry) in obj {
        let exp: i64 = k
            .parse()
            .map_err(|_| QseriesError::BadSerialization(format!("bad exponent {k}")))?;
        let pair = entry
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| QseriesError::BadSerialization("coefficient must be [re, im]".into()))?;
        let re = pair[0]
            .as_str()
            .and_then(qrat_from_str)
            .ok_or_else(|| QseriesError::BadSerialization("bad rational".into()))?;
        let im = pair[1]
            .as_str()
            .and_then(qrat_from_str)
            .ok_or_else(|| QseriesError::BadSerialization("bad rational".into()))?;
        out = out.add(&LaurentPoly::monomial(
            exp,
            Cyclo::from_crat(CRat::new(re, im)),
        ));
    }
    Ok(out)
}

/// Monic gcd of two ordinary polynomials (nonnegative exponents) over the
/// cyclotomic field.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    while !r1.is_zero() {
        let r = poly_rem_laurent(&r0, &r1);
        r0 = r1;
        r1 = r;
    }
    // Normalize monic.
    let lead = r0.coeff(r0.max_exp().unwrap());
    r0.scale(&lead.inv().unwrap())
}

fn poly_rem_laurent(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = b.max_exp().expect("gcd of zero polynomial");
    let lead_inv = b.coeff(db).inv().unwrap();
    let mut r = a.clone();
    loop {
        let dr = match r.max_exp() {
            Some(d) if d >= db => d,
            _ => return r,
        };
        let c = r.coeff(dr).mul(&lead_inv);
        r = r.sub(&b.shift(dr - db).scale(&c));
    }
}

fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (q, r) = poly_divmod_laurent(a, b);
    debug_assert!(r.is_zero(), "inexact polynomial division");
    q
}

/// Division with remainder for ordinary polynomials; also used to test
/// L-factor membership (remainder zero ⇔ divisible).
pub fn poly_divmod_laurent(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let db = b.max_exp().expect("division by zero polynomial");
    let lead_inv = b.coeff(db).inv().unwrap();
    let mut r = a.clone();
    let mut q = LaurentPoly::zero();
    loop {
        let dr = match r.max_exp() {
            Some(d) if d >= db => d,
            _ => return (q, r),
        };
        let c = r.coeff(dr).mul(&lead_inv);
        q = q.add(&LaurentPoly::monomial(dr - db, c.clone()));
        r = r.sub(&b.shift(dr - db).scale(&c));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Turn;

    fn geom() -> RationalFn {
        // 1/(1−z)
        RationalFn::new(LaurentPoly::one(), LaurentPoly::from_ints(&[1, -1])).unwrap()
    }

    #[test]
    fn expand_geometric_series() {
        let s = geom().expand(3).unwrap();
        for k in 0..=3 {
            assert!(s.coeff(k).eq(&Cyclo::one()));
        }
    }

    #[test]
    fn expand_two_pole_product() {
        // 1/((1−2z)(1−3z)) — coefficients are 2^{k+1} − 3^{k+1} over −1,
        // computed here by the convolution oracle in PowerSeries::mul.
        let a = RationalFn::new(LaurentPoly::one(), LaurentPoly::from_ints(&[1, -2])).unwrap();
        let b = RationalFn::new(LaurentPoly::one(), LaurentPoly::from_ints(&[1, -3])).unwrap();
        let oracle = a.expand(2).unwrap().mul(&b.expand(2).unwrap());
        let direct = a.mul(&b).expand(2).unwrap();
        let expected = [1i64, 5, 19];
        for (k, e) in expected.iter().enumerate() {
            assert!(direct.coeff(k).eq(&Cyclo::from_int(*e)));
            assert!(oracle.coeff(k).eq(&Cyclo::from_int(*e)));
        }
    }

    #[test]
    fn expand_polynomial_passthrough() {
        let p = RationalFn::from_poly(LaurentPoly::from_ints(&[1, 1]));
        let s = p.expand(5).unwrap();
        let want = [1i64, 1, 0, 0, 0, 0];
        for (k, e) in want.iter().enumerate() {
            assert!(s.coeff(k).eq(&Cyclo::from_int(*e)));
        }
    }

    #[test]
    fn expand_rejects_pole_at_zero() {
        let r = RationalFn::new(LaurentPoly::one(), LaurentPoly::monomial(1, Cyclo::one()))
            .unwrap();
        assert_eq!(r.expand(2).unwrap_err(), QseriesError::PoleAtZero);
    }

    #[test]
    fn residues() {
        // 1/z → 1
        let r = RationalFn::new(LaurentPoly::one(), LaurentPoly::monomial(1, Cyclo::one()))
            .unwrap();
        assert!(r.residue_at_zero().eq(&Cyclo::one()));
        // z^{-2}/(1−z) → coefficient of z^1 in geometric series = 1
        let r2 = geom().shift(-2);
        assert!(r2.residue_at_zero().eq(&Cyclo::one()));
        // holomorphic at 0 → 0
        assert!(geom().residue_at_zero().is_zero());
    }

    #[test]
    fn eval_and_pole_detection() {
        let (v, _) = geom().eval(Complex64::new(0.5, 0.0)).unwrap();
        assert!((v.re - 2.0).abs() < 1e-12 && v.im.abs() < 1e-15);
        assert_eq!(
            geom().eval(Complex64::new(1.0, 0.0)).unwrap_err(),
            QseriesError::DivisionByZero
        );
        // (1−z²)/(1−z) reduces to 1+z, which evaluates at the former pole.
        let r = RationalFn::new(
            LaurentPoly::from_ints(&[1, 0, -1]),
            LaurentPoly::from_ints(&[1, -1]),
        )
        .unwrap();
        assert!(r.is_laurent_poly());
        let (v, _) = r.eval(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v.re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn normal_form_den_constant_term_one() {
        let r = RationalFn::new(
            LaurentPoly::from_ints(&[0, 6]),
            LaurentPoly::from_ints(&[2, 4]),
        )
        .unwrap();
        assert!(r.den().coeff(0).eq(&Cyclo::one()));
        let (v, _) = r.eval(Complex64::new(0.25, 0.0)).unwrap();
        assert!((v.re - 0.5).abs() < 1e-12);
    }

    #[test]
    fn subst_inv_realizes_one_minus_s() {
        // L(s) = 1/(1−z); in the dual variable L(1−s) = 1/(1−q^{-1}/z).
        let q_inv = Cyclo::from_ratio(1, 3);
        let l = geom();
        let dual = l.subst_inv(&q_inv);
        // At s = 1/2 both sides agree numerically: z = 3^{-1/2} is self-dual.
        let z0 = Complex64::new(3f64.powf(-0.5), 0.0);
        let (a, _) = l.eval(z0).unwrap();
        let (b, _) = dual.eval(z0).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn json_round_trip() {
        let r = RationalFn::new(
            LaurentPoly::from_coeffs(&[
                (-1, Cyclo::from_ratio(2, 3)),
                (1, Cyclo::from_crat(CRat::new(
                    crate::exact::qrat_from_str("1/2").unwrap(),
                    crate::exact::qrat_from_str("-5").unwrap(),
                ))),
            ]),
            LaurentPoly::from_ints(&[1, 0, 7]),
        )
        .unwrap();
        let j = r.to_json().unwrap();
        let back = RationalFn::from_json(&j).unwrap();
        assert!(r.eq(&back));
        // cyclotomic coefficients refuse to serialize
        let bad = RationalFn::from_poly(LaurentPoly::monomial(
            0,
            Cyclo::root_of_unity(Turn::new(1, 3)),
        ));
        assert_eq!(
            bad.to_json().unwrap_err(),
            QseriesError::NonRationalCoefficient
        );
    }
}
