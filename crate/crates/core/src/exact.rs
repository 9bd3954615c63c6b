//! Exact scalar arithmetic: complex rationals and cyclotomic numbers.
//!
//! The local identities this crate checks are rational in `q^{±s}` with
//! coefficients built from roots of unity, `i`, and half-integer powers of
//! primes (`√p` enters through Gauss sums and the `|x|^{1/2}` measure shift).
//! All of those live in the universal cyclotomic field, represented here as
//! finite ℚ(i)-linear combinations of `e(t) = exp(2πi·t)` with `t ∈ ℚ/ℤ`.
//! Zero testing reduces an element modulo the appropriate cyclotomic
//! polynomial, so equality checks are exact.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Exact rational scalar.
pub type QRat = BigRational;

/// Parse a rational from `"a/b"` or `"a"` form.
pub fn qrat_from_str(s: &str) -> Option<QRat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(QRat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(QRat::from_integer(n))
        }
    }
}

/// Render a rational as `"a"` or `"a/b"`.
pub fn qrat_to_string(q: &QRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn qrat_to_f64(q: &QRat) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq)]
pub struct CRat {
    pub re: QRat,
    pub im: QRat,
}

impl CRat {
    pub fn new(re: QRat, im: QRat) -> Self {
        CRat { re, im }
    }

    pub fn zero() -> Self {
        CRat::new(QRat::zero(), QRat::zero())
    }

    pub fn one() -> Self {
        CRat::new(QRat::one(), QRat::zero())
    }

    pub fn i() -> Self {
        CRat::new(QRat::zero(), QRat::one())
    }

    pub fn from_int(n: i64) -> Self {
        CRat::new(QRat::from_integer(BigInt::from(n)), QRat::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        CRat::new(
            QRat::new(BigInt::from(num), BigInt::from(den)),
            QRat::zero(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        CRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        CRat::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        CRat::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn neg(&self) -> Self {
        CRat::new(-self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        CRat::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = &self.re * &self.re + &self.im * &self.im;
        if n.is_zero() {
            return None;
        }
        Some(CRat::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(qrat_to_f64(&self.re), qrat_to_f64(&self.im))
    }
}

impl fmt::Debug for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", qrat_to_string(&self.re))
        } else {
            write!(
                f,
                "({}+{}i)",
                qrat_to_string(&self.re),
                qrat_to_string(&self.im)
            )
        }
    }
}

/// A rational number of turns `t ∈ ℚ/ℤ`, meaning the root of unity `e^{2πi·t}`.
/// Stored reduced with `0 ≤ num < den`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Turn {
    num: i64,
    den: i64,
}

impl Turn {
    pub const ZERO: Turn = Turn { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in turn");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        num = num.rem_euclid(den);
        let g = gcd_i64(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        Turn { num, den }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn add(&self, other: &Turn) -> Turn {
        let den = self.den / gcd_i64(self.den, other.den) * other.den;
        Turn::new(
            self.num * (den / self.den) + other.num * (den / other.den),
            den,
        )
    }

    pub fn neg(&self) -> Turn {
        Turn::new(-self.num, self.den)
    }

    /// `t` scaled by an integer `k` (the root of unity raised to the k-th power).
    pub fn scale(&self, k: i64) -> Turn {
        // Reduce k modulo den first so num*k stays well inside i64.
        let k = k.rem_euclid(self.den);
        Turn::new(self.num.wrapping_mul(k) % self.den, self.den)
    }

    pub fn as_qrat(&self) -> QRat {
        QRat::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    pub fn to_c64(&self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI * (self.num as f64) / (self.den as f64);
        Complex64::new(theta.cos(), theta.sin())
    }
}

impl fmt::Debug for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.num, self.den)
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm_i64(a: i64, b: i64) -> i64 {
    a / gcd_i64(a, b) * b
}

/// Element of the universal cyclotomic field with ℚ(i) coefficients:
/// a finite sum `Σ c_t · e^{2πi·t}`.
///
/// No canonical form is maintained between operations; equality and zero
/// tests reduce modulo the cyclotomic polynomial of the common root order.
#[derive(Clone)]
pub struct Cyclo {
    terms: BTreeMap<Turn, CRat>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Cyclo::from_crat(CRat::one())
    }

    pub fn from_crat(c: CRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Turn::ZERO, c);
        }
        Cyclo { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclo::from_crat(CRat::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Cyclo::from_crat(CRat::from_ratio(num, den))
    }

    pub fn from_qrat(q: QRat) -> Self {
        Cyclo::from_crat(CRat::new(q, QRat::zero()))
    }

    /// The root of unity `e^{2πi·t}`.
    pub fn root_of_unity(t: Turn) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(t, CRat::one());
        Cyclo { terms }
    }

    /// `√p` for a prime `p`, expressed through quadratic Gauss sums.
    pub fn sqrt_prime(p: u64) -> Self {
        assert!(is_prime_u64(p), "sqrt_prime wants a prime, got {p}");
        if p == 2 {
            // e(1/8) + e(7/8) = 2cos(π/4) = √2
            return Cyclo::root_of_unity(Turn::new(1, 8))
                .add(&Cyclo::root_of_unity(Turn::new(7, 8)));
        }
        // Quadratic Gauss sum g = Σ (v|p) e(v/p); g = √p when p ≡ 1 (mod 4)
        // and g = i√p when p ≡ 3 (mod 4).
        let mut g = Cyclo::zero();
        for v in 1..p {
            let chi = legendre(v, p);
            let c = if chi == 1 {
                CRat::one()
            } else {
                CRat::from_int(-1)
            };
            g.add_term(Turn::new(v as i64, p as i64), c);
        }
        if p % 4 == 1 {
            g
        } else {
            g.mul(&Cyclo::from_crat(CRat::new(QRat::zero(), -QRat::one())))
        }
    }

    /// `p^{k/2}` for integer `k` (possibly negative).
    pub fn prime_half_power(p: u64, k: i64) -> Self {
        let whole = k.div_euclid(2);
        let rem = k.rem_euclid(2);
        let mut base = Cyclo::from_crat(CRat::new(
            pow_qrat(&QRat::from_integer(BigInt::from(p)), whole),
            QRat::zero(),
        ));
        if rem == 1 {
            base = base.mul(&Cyclo::sqrt_prime(p));
        }
        base
    }

    fn add_term(&mut self, t: Turn, c: CRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t).or_insert_with(CRat::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(*t, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclo {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (*t, c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Cyclo::zero();
        for (t1, c1) in &self.terms {
            for (t2, c2) in &other.terms {
                out.add_term(t1.add(t2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &CRat) -> Self {
        if c.is_zero() {
            return Cyclo::zero();
        }
        Cyclo {
            terms: self
                .terms
                .iter()
                .map(|(t, v)| (*t, v.mul(c)))
                .collect(),
        }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        let mut out = Cyclo::zero();
        for (t, c) in &self.terms {
            out.add_term(t.neg(), c.conj());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Cyclo::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Try to express the element in ℚ(i) without reduction machinery;
    /// succeeds whenever every turn is a fourth root of unity.
    fn small_crat(&self) -> Option<CRat> {
        let mut acc = CRat::zero();
        for (t, c) in &self.terms {
            let unit = match (t.num, t.den) {
                (0, 1) => CRat::one(),
                (1, 2) => CRat::from_int(-1),
                (1, 4) => CRat::i(),
                (3, 4) => CRat::i().neg(),
                _ => return None,
            };
            acc = acc.add(&c.mul(&unit));
        }
        Some(acc)
    }

    /// Common fold order: lcm of all turn denominators and 4 (so `i` folds in).
    fn fold_order(&self) -> i64 {
        let mut m = 4i64;
        for t in self.terms.keys() {
            m = lcm_i64(m, t.den);
        }
        m
    }

    /// Fold into a polynomial in `ζ_M` of degree < M with rational
    /// coefficients, absorbing `i = ζ_M^{M/4}`.
    fn fold_to_poly(&self, m: i64) -> Vec<QRat> {
        debug_assert!(m % 4 == 0);
        let mut coeffs = vec![QRat::zero(); m as usize];
        for (t, c) in &self.terms {
            let idx = (t.num * (m / t.den)).rem_euclid(m) as usize;
            coeffs[idx] += &c.re;
            let idx_i = (idx + (m / 4) as usize) % m as usize;
            coeffs[idx_i] += &c.im;
        }
        coeffs
    }

    pub fn is_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        if let Some(c) = self.small_crat() {
            return c.is_zero();
        }
        // Numeric pre-check: the input is exact, so a computed value safely
        // above the float-error envelope certifies nonzero without touching
        // the cyclotomic reduction.
        let v = self.to_c64();
        let envelope = self.abs_upper_bound() * 1e-9;
        if v.norm() > envelope {
            return false;
        }
        let m = self.fold_order();
        let poly = self.fold_to_poly(m);
        let phi = cyclotomic_poly_qrat(m as u64);
        poly_rem(&poly, &phi).iter().all(|c| c.is_zero())
    }

    pub fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// Exact extraction of a ℚ(i) value, if the element lies in ℚ(i).
    pub fn as_crat(&self) -> Option<CRat> {
        if let Some(c) = self.small_crat() {
            return Some(c);
        }
        let m = self.fold_order();
        let phi = cyclotomic_poly_qrat(m as u64);
        let reduced = poly_rem(&self.fold_to_poly(m), &phi);
        // Basis of the candidate subfield: 1 and the reduction of ζ^{M/4}.
        let mut i_poly = vec![QRat::zero(); (m / 4) as usize + 1];
        i_poly[(m / 4) as usize] = QRat::one();
        let i_red = poly_rem(&i_poly, &phi);
        // Solve reduced = a·1 + b·i_red, then verify all coordinates.
        let deg = phi.len() - 1;
        let mut red = reduced;
        red.resize(deg.max(1), QRat::zero());
        let mut ired = i_red;
        ired.resize(deg.max(1), QRat::zero());
        let pivot = (1..deg).find(|&j| !ired[j].is_zero());
        let b = match pivot {
            Some(j) => {
                if red[j].is_zero() {
                    QRat::zero()
                } else {
                    &red[j] / &ired[j]
                }
            }
            None => QRat::zero(),
        };
        let a = &red[0] - &b * &ired[0];
        for j in 0..deg.max(1) {
            let expect = if j == 0 {
                &a + &b * &ired[0]
            } else {
                &b * &ired[j]
            };
            if red[j] != expect {
                return None;
            }
        }
        Some(CRat::new(a, b))
    }

    /// Multiplicative inverse via extended Euclid modulo the cyclotomic
    /// polynomial of the fold order. `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if let Some(c) = self.small_crat() {
            return Some(Cyclo::from_crat(c.inv()?));
        }
        let m = self.fold_order();
        let phi = cyclotomic_poly_qrat(m as u64);
        let poly = poly_rem(&self.fold_to_poly(m), &phi);
        if poly.iter().all(|c| c.is_zero()) {
            return None;
        }
        let inv = poly_inverse_mod(&poly, &phi)?;
        let mut out = Cyclo::zero();
        for (j, c) in inv.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(Turn::new(j as i64, m), CRat::new(c.clone(), QRat::zero()));
            }
        }
        Some(out)
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }

    pub fn to_c64(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, c) in &self.terms {
            acc += c.to_c64() * t.to_c64();
        }
        acc
    }

    pub fn abs(&self) -> f64 {
        self.to_c64().norm()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Upper bound on |self| by the triangle inequality; exact-rational input,
    /// so it is a rigorous overestimate unlike `abs`.
    pub fn abs_upper_bound(&self) -> f64 {
        self.terms
            .values()
            .map(|c| {
                let r = qrat_to_f64(&c.re).abs();
                let i = qrat_to_f64(&c.im).abs();
                (r * r + i * i).sqrt() * (1.0 + 1e-12) + 1e-300
            })
            .sum()
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| {
                if t.is_zero() {
                    format!("{c:?}")
                } else {
                    format!("{c:?}*{t:?}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `q^k` for integer `k` of a rational `q`.
pub fn pow_qrat(q: &QRat, k: i64) -> QRat {
    if k >= 0 {
        let mut out = QRat::one();
        for _ in 0..k {
            out *= q;
        }
        out
    } else {
        pow_qrat(q, -k).recip()
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Legendre symbol (a|p) for odd prime p, via Euler's criterion.
pub fn legendre(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    let e = pow_mod(a, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        -1
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
        base = 0;
    }
    let _ = base;
    acc as u64
}

// ---- cyclotomic polynomials and rational polynomial helpers ----

fn cyclotomic_cache() -> &'static Mutex<BTreeMap<u64, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u64, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// Integer coefficients of the n-th cyclotomic polynomial, ascending degree.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    if let Some(hit) = cyclotomic_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // Φ_n = (x^n − 1) / ∏_{d|n, d<n} Φ_d
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::from(1);
        let mut quot = num;
        for d in 1..n {
            if n % d == 0 {
                let phi_d = cyclotomic_poly(d);
                quot = poly_div_exact_int(&quot, &phi_d);
            }
        }
        quot
    };
    cyclotomic_cache()
        .lock()
        .unwrap()
        .insert(n, result.clone());
    result
}

fn cyclotomic_poly_qrat(n: u64) -> Vec<QRat> {
    cyclotomic_poly(n)
        .into_iter()
        .map(QRat::from_integer)
        .collect()
}

/// Exact division of integer polynomials (callers guarantee divisibility).
fn poly_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    let lead = den[dd].clone();
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] / &lead;
        quot[k] = c.clone();
        if !c.is_zero() {
            for j in 0..=dd {
                let t = &den[j] * &c;
                rem[k + j] -= t;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    while quot.len() > 1 && quot.last().unwrap().is_zero() {
        quot.pop();
    }
    quot
}

fn poly_deg(p: &[QRat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Remainder of `a` modulo `b` over ℚ.
fn poly_rem(a: &[QRat], b: &[QRat]) -> Vec<QRat> {
    let db = poly_deg(b).expect("division by zero polynomial");
    let mut r: Vec<QRat> = a.to_vec();
    loop {
        let dr = match poly_deg(&r) {
            Some(d) if d >= db => d,
            _ => break,
        };
        let scale = &r[dr] / &b[db];
        let shift = dr - db;
        for j in 0..=db {
            let t = &b[j] * &scale;
            r[shift + j] -= t;
        }
        r[dr] = QRat::zero();
    }
    r.truncate(db.max(1));
    if r.is_empty() {
        r.push(QRat::zero());
    }
    r
}

/// Inverse of `a` modulo `m` (extended Euclid over ℚ[x]).
fn poly_inverse_mod(a: &[QRat], m: &[QRat]) -> Option<Vec<QRat>> {
    // Invariants: r0 = t0·a (mod m), r1 = t1·a (mod m).
    let mut r0: Vec<QRat> = m.to_vec();
    let mut r1: Vec<QRat> = a.to_vec();
    let mut t0: Vec<QRat> = vec![QRat::zero()];
    let mut t1: Vec<QRat> = vec![QRat::one()];
    while let Some(d1) = poly_deg(&r1) {
        if d1 == 0 {
            let c = r1[0].clone();
            return Some(t1.iter().map(|x| x / &c).collect());
        }
        let (q, r) = poly_divmod(&r0, &r1);
        let t_next = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = poly_rem(&t_next, m);
    }
    None
}

fn poly_divmod(a: &[QRat], b: &[QRat]) -> (Vec<QRat>, Vec<QRat>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let da = match poly_deg(a) {
        Some(d) => d,
        None => return (vec![QRat::zero()], vec![QRat::zero()]),
    };
    if da < db {
        return (vec![QRat::zero()], a.to_vec());
    }
    let mut r: Vec<QRat> = a.to_vec();
    let mut q = vec![QRat::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        if r[k + db].is_zero() {
            continue;
        }
        let c = &r[k + db] / &b[db];
        q[k] = c.clone();
        for j in 0..=db {
            let t = &b[j] * &c;
            r[k + j] -= t;
        }
    }
    (q, r)
}

fn poly_mul(a: &[QRat], b: &[QRat]) -> Vec<QRat> {
    let mut out = vec![QRat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[QRat], b: &[QRat]) -> Vec<QRat> {
    let mut out = vec![QRat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// |q|-style magnitude of a CRat as f64, for diagnostics.
pub fn crat_abs(c: &CRat) -> f64 {
    c.to_c64().norm()
}

/// Integer square-and-multiply for rationals is above; this is the i64 gcd.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turn_arithmetic_reduces() {
        let t = Turn::new(3, 6);
        assert_eq!((t.numer(), t.denom()), (1, 2));
        let s = Turn::new(-1, 4);
        assert_eq!((s.numer(), s.denom()), (3, 4));
        assert_eq!(t.add(&s), Turn::new(1, 4));
    }

    #[test]
    fn cyclo_zero_detection_uses_relations() {
        // 1 + ζ_3 + ζ_3² = 0
        let z = Cyclo::one()
            .add(&Cyclo::root_of_unity(Turn::new(1, 3)))
            .add(&Cyclo::root_of_unity(Turn::new(2, 3)));
        assert!(z.is_zero());
        // 1 + ζ_5 ≠ 0
        let nz = Cyclo::one().add(&Cyclo::root_of_unity(Turn::new(1, 5)));
        assert!(!nz.is_zero());
    }

    #[test]
    fn sqrt_prime_squares_to_p() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let r = Cyclo::sqrt_prime(p);
            assert!(r.mul(&r).sub(&Cyclo::from_int(p as i64)).is_zero());
            // numerically the positive square root
            assert!((r.to_c64().re - (p as f64).sqrt()).abs() < 1e-9);
            assert!(r.to_c64().im.abs() < 1e-9);
        }
    }

    #[test]
    fn cyclo_inverse_round_trips() {
        let x = Cyclo::root_of_unity(Turn::new(1, 3))
            .scale(&CRat::from_ratio(2, 5))
            .add(&Cyclo::from_int(1));
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).sub(&Cyclo::one()).is_zero());
    }

    #[test]
    fn as_crat_recognizes_hidden_rationals() {
        // ζ_3 + ζ_3² = −1
        let z = Cyclo::root_of_unity(Turn::new(1, 3))
            .add(&Cyclo::root_of_unity(Turn::new(2, 3)));
        assert_eq!(z.as_crat().unwrap(), CRat::from_int(-1));
        // √5 is not in ℚ(i)
        assert!(Cyclo::sqrt_prime(5).as_crat().is_none());
    }

    #[test]
    fn cyclotomic_poly_basics() {
        // Φ_12 = x^4 − x^2 + 1
        let phi = cyclotomic_poly(12);
        let want: Vec<BigInt> = [1, 0, -1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(phi, want);
    }
}
