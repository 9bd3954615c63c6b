//! p-adic scaffolding for ℚ_p: valuation/unit decomposition, finite-order
//! multiplicative characters with conductor, the standard additive character
//! ψ_p(x) = e^{2πi{x}_p}, and Gauss sums.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::exact::{
    gcd_u64, is_prime_u64, pow_mod, qrat_from_str, qrat_to_string, CRat, Cyclo, QRat, Turn,
};
use num_traits::ToPrimitive;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LocalFieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unit residue {u} is not a unit modulo {p}^{c}")]
    NotAUnit { u: u64, p: u64, c: u32 },
    #[error("point precision {have} is below the required conductor exponent {need}")]
    InsufficientPrecision { have: u32, need: u32 },
    #[error("character table is not multiplicative at ({a}, {b})")]
    NotMultiplicative { a: u64, b: u64 },
    #[error("character table does not cover (Z/p^c)^× exactly")]
    BadTable,
    #[error("conductor exponent {0} is not minimal for the table")]
    ConductorNotMinimal(u32),
    #[error("gauss sum needs a ramified character (conductor ≥ 1)")]
    UnramifiedGaussSum,
    #[error("malformed character JSON: {0}")]
    BadSerialization(String),
}

/// Point of ℚ_p^×: x = p^m · u with the unit residue u known modulo p^c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAdicPoint {
    p: u64,
    m: i64,
    u: u64,
    c: u32,
}

impl PAdicPoint {
    pub fn new(p: u64, m: i64, u: u64, c: u32) -> Result<Self, LocalFieldError> {
        if !is_prime_u64(p) {
            return Err(LocalFieldError::NotPrime(p));
        }
        assert!(c >= 1, "precision exponent must be at least 1");
        let pc = p.pow(c);
        let u = u % pc;
        if gcd_u64(u, p) != 1 {
            return Err(LocalFieldError::NotAUnit { u, p, c });
        }
        Ok(PAdicPoint { p, m, u, c })
    }

    /// The unit 1 ∈ ℤ_p^× at default precision.
    pub fn one(p: u64) -> Self {
        PAdicPoint::new(p, 0, 1, 8).unwrap()
    }

    /// p^m (valuation shift of 1).
    pub fn prime_power(p: u64, m: i64) -> Self {
        PAdicPoint::new(p, m, 1, 8).unwrap()
    }

    /// Embed a nonzero rational a/b into ℚ_p^× at precision c.
    pub fn from_rational(p: u64, mut a: i64, mut b: i64, c: u32) -> Result<Self, LocalFieldError> {
        assert!(a != 0 && b != 0);
        if !is_prime_u64(p) {
            return Err(LocalFieldError::NotPrime(p));
        }
        let mut m = 0i64;
        while a % p as i64 == 0 {
            a /= p as i64;
            m += 1;
        }
        while b % p as i64 == 0 {
            b /= p as i64;
            m -= 1;
        }
        let pc = p.pow(c) as i64;
        let ar = a.rem_euclid(pc) as u64;
        let br = b.rem_euclid(pc) as u64;
        let binv = inv_mod(br, pc as u64).expect("b is a unit");
        PAdicPoint::new(p, m, (ar as u128 * binv as u128 % pc as u128) as u64, c)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// ord_p(x).
    pub fn ord(&self) -> i64 {
        self.m
    }

    pub fn unit_residue(&self) -> u64 {
        self.u
    }

    pub fn precision(&self) -> u32 {
        self.c
    }

    /// |x|_p = p^{-m}, derived.
    pub fn abs(&self) -> f64 {
        (self.p as f64).powi(-self.m as i32)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let c = self.c.min(other.c);
        let pc = self.p.pow(c);
        PAdicPoint {
            p: self.p,
            m: self.m + other.m,
            u: (self.u as u128 * other.u as u128 % pc as u128) as u64,
            c,
        }
    }

    pub fn inv(&self) -> Self {
        let pc = self.p.pow(self.c);
        PAdicPoint {
            p: self.p,
            m: -self.m,
            u: inv_mod(self.u, pc).expect("unit residue"),
            c: self.c,
        }
    }
}

/// Modular inverse via extended Euclid; `None` when gcd(a, m) ≠ 1.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_t, mut t) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_t.rem_euclid(m as i128) as u64)
}

/// Finite-order character of the unit group (ℤ/p^c)^×, values stored as exact
/// turns (t such that ω(u) = e^{2πi·t}). `cond = 0` is the trivial finite part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct UnitChar {
    p: u64,
    cond: u32,
    table: BTreeMap<u64, Turn>,
}

impl UnitChar {
    pub fn trivial(p: u64) -> Self {
        UnitChar {
            p,
            cond: 0,
            table: BTreeMap::new(),
        }
    }

    /// Build from an explicit table on (ℤ/p^c)^×; checks multiplicativity and
    /// conductor minimality.
    pub fn from_table(p: u64, cond: u32, table: BTreeMap<u64, Turn>) -> Result<Self, LocalFieldError> {
        if !is_prime_u64(p) {
            return Err(LocalFieldError::NotPrime(p));
        }
        if cond == 0 {
            if !table.is_empty() {
                return Err(LocalFieldError::BadTable);
            }
            return Ok(UnitChar::trivial(p));
        }
        let pc = p.pow(cond);
        let units: Vec<u64> = (1..pc).filter(|u| gcd_u64(*u, p) == 1).collect();
        if table.len() != units.len() || units.iter().any(|u| !table.contains_key(u)) {
            return Err(LocalFieldError::BadTable);
        }
        if table.get(&(1 % pc)).map(|t| !t.is_zero()).unwrap_or(true) {
            return Err(LocalFieldError::NotMultiplicative { a: 1, b: 1 });
        }
        for &a in &units {
            for &b in &units {
                let ab = (a as u128 * b as u128 % pc as u128) as u64;
                if table[&a].add(&table[&b]) != table[&ab] {
                    return Err(LocalFieldError::NotMultiplicative { a, b });
                }
            }
        }
        let chi = UnitChar { p, cond, table };
        if !chi.conductor_is_minimal() {
            return Err(LocalFieldError::ConductorNotMinimal(cond));
        }
        Ok(chi)
    }

    /// Nontriviality on the deepest unit subgroup: for c ≥ 2 the character
    /// must be nontrivial on 1 + p^{c−1}ℤ_p; for c = 1 nontrivial somewhere.
    pub fn conductor_is_minimal(&self) -> bool {
        if self.cond == 0 {
            return true;
        }
        let pc = self.p.pow(self.cond);
        if self.cond == 1 {
            return self.table.values().any(|t| !t.is_zero());
        }
        let step = self.p.pow(self.cond - 1);
        (1..self.p)
            .map(|k| (1 + k * step) % pc)
            .any(|u| !self.table[&u].is_zero())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn conductor_exp(&self) -> u32 {
        self.cond
    }

    pub fn is_trivial(&self) -> bool {
        self.cond == 0
    }

    /// Exact value ω(u) as a turn; `u` is reduced modulo p^cond.
    pub fn value(&self, u: u64) -> Result<Turn, LocalFieldError> {
        if self.cond == 0 {
            return Ok(Turn::ZERO);
        }
        let pc = self.p.pow(self.cond);
        let r = u % pc;
        if gcd_u64(r, self.p) != 1 {
            return Err(LocalFieldError::NotAUnit {
                u,
                p: self.p,
                c: self.cond,
            });
        }
        Ok(self.table[&r])
    }

    /// ω(−1) sign as a turn (parity of the character).
    pub fn value_at_minus_one(&self) -> Turn {
        if self.cond == 0 {
            return Turn::ZERO;
        }
        let pc = self.p.pow(self.cond);
        self.table[&(pc - 1)]
    }

    pub fn inverse(&self) -> Self {
        UnitChar {
            p: self.p,
            cond: self.cond,
            table: self.table.iter().map(|(u, t)| (*u, t.neg())).collect(),
        }
    }

    /// Pointwise product, re-minimalizing the conductor.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let c = self.cond.max(other.cond);
        if c == 0 {
            return UnitChar::trivial(self.p);
        }
        let pc = self.p.pow(c);
        let mut table = BTreeMap::new();
        for u in 1..pc {
            if gcd_u64(u, self.p) != 1 {
                continue;
            }
            let a = self.value(u).unwrap();
            let b = other.value(u).unwrap();
            table.insert(u, a.add(&b));
        }
        Self::minimize(self.p, c, table)
    }

    /// Drop to the true conductor by restriction.
    fn minimize(p: u64, c: u32, table: BTreeMap<u64, Turn>) -> UnitChar {
        let mut chi = UnitChar { p, cond: c, table };
        'outer: while chi.cond >= 1 {
            if chi.cond == 1 {
                if chi.table.values().all(|t| t.is_zero()) {
                    return UnitChar::trivial(p);
                }
                break;
            }
            // Trivial on 1 + p^{c−1}? Then the table factors through p^{c−1}.
            let pc = p.pow(chi.cond);
            let step = p.pow(chi.cond - 1);
            for k in 1..p {
                if !chi.table[&((1 + k * step) % pc)].is_zero() {
                    break 'outer;
                }
            }
            let pc_down = p.pow(chi.cond - 1);
            let mut down = BTreeMap::new();
            for u in 1..pc_down {
                if gcd_u64(u, p) != 1 {
                    continue;
                }
                // any lift represents the class
                down.insert(u, chi.table[&u]);
            }
            chi = UnitChar {
                p,
                cond: chi.cond - 1,
                table: down,
            };
        }
        chi
    }

    /// All characters of (ℤ/p^c)^× of conductor exactly c... or any conductor
    /// dividing: this enumerates the full dual group of (ℤ/p^c)^×.
    pub fn all_mod(p: u64, c: u32) -> Vec<UnitChar> {
        if c == 0 {
            return vec![UnitChar::trivial(p)];
        }
        let pc = p.pow(c);
        let units: Vec<u64> = (1..pc).filter(|u| gcd_u64(*u, p) == 1).collect();
        // Generators of (ℤ/p^c)^×: cyclic for odd p or p^c ∈ {2,4};
        // ⟨−1⟩×⟨5⟩ for p = 2, c ≥ 3.
        let gens: Vec<(u64, u64)> = if p > 2 {
            let g = primitive_root_mod_pc(p, c);
            vec![(g, units.len() as u64)]
        } else if c == 1 {
            return vec![UnitChar::trivial(2)];
        } else if c == 2 {
            vec![(3, 2)]
        } else {
            vec![(pc - 1, 2), (5, pc / 4)]
        };
        let mut chars = Vec::new();
        let mut exps = vec![0u64; gens.len()];
        loop {
            // Build the table for this exponent tuple.
            let mut table = BTreeMap::new();
            for &u in &units {
                let logs = unit_logs(u, &gens, pc);
                let mut t = Turn::ZERO;
                for ((l, (_, ord)), e) in logs.iter().zip(&gens).zip(&exps) {
                    t = t.add(&Turn::new(
                        ((l % ord) as i64).wrapping_mul((e % ord) as i64) % *ord as i64,
                        *ord as i64,
                    ));
                }
                table.insert(u, t);
            }
            chars.push(Self::minimize(p, c, table));
            // increment exponent tuple
            let mut i = 0;
            loop {
                if i == gens.len() {
                    // drop duplicates (same character reached from induced ones)
                    chars.sort();
                    chars.dedup();
                    return chars;
                }
                exps[i] += 1;
                if exps[i] < gens[i].1 {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// The quadratic character mod p (odd p): the Legendre symbol.
    pub fn quadratic(p: u64) -> Result<UnitChar, LocalFieldError> {
        if p == 2 {
            // The character mod 4: ω(u) = (−1)^{(u−1)/2}.
            let mut table = BTreeMap::new();
            table.insert(1, Turn::ZERO);
            table.insert(3, Turn::new(1, 2));
            return UnitChar::from_table(2, 2, table);
        }
        let mut table = BTreeMap::new();
        for u in 1..p {
            let t = if crate::exact::legendre(u, p) == 1 {
                Turn::ZERO
            } else {
                Turn::new(1, 2)
            };
            table.insert(u, t);
        }
        UnitChar::from_table(p, 1, table)
    }
}

fn primitive_root_mod_pc(p: u64, c: u32) -> u64 {
    debug_assert!(p > 2);
    let g = primitive_root_mod_p(p);
    // Lift: g is primitive mod p^c unless g^{p−1} ≡ 1 mod p², then g+p works.
    if c == 1 {
        return g;
    }
    let p2 = p * p;
    if pow_mod(g, p - 1, p2) != 1 {
        g
    } else {
        g + p
    }
}

fn primitive_root_mod_p(p: u64) -> u64 {
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut n = phi;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    'g: for g in 2..p {
        for f in &factors {
            if pow_mod(g, phi / f, p) == 1 {
                continue 'g;
            }
        }
        return g;
    }
    unreachable!("no primitive root found")
}

/// Discrete log of u in ⟨g⟩ of order `ord` modulo `m` (brute force; desk scale).
fn dlog(u: u64, g: u64, ord: u64, m: u64) -> Option<u64> {
    let mut acc = 1u64;
    for k in 0..ord {
        if acc == u % m {
            return Some(k);
        }
        acc = (acc as u128 * g as u128 % m as u128) as u64;
    }
    None
}

/// Write u against the generator list: a single generator for odd p, the
/// ⟨−1⟩ × ⟨5⟩ split for p = 2, c ≥ 3.
fn unit_logs(u: u64, gens: &[(u64, u64)], pc: u64) -> Vec<u64> {
    match gens {
        [(g, ord)] => vec![dlog(u, *g, *ord, pc).expect("generator covers the unit group")],
        [(_, _), (five, ord5)] => match dlog(u, *five, *ord5, pc) {
            Some(b) => vec![0, b],
            None => {
                let b = dlog(pc - u, *five, *ord5, pc).expect("−u lies in ⟨5⟩");
                vec![1, b]
            }
        },
        _ => unreachable!("at most two generators"),
    }
}

/// Quasi-character χ = |·|^u · ω(ac(·)) of ℚ_p^×.
#[derive(Clone, Debug)]
pub struct MultChar {
    pub omega: UnitChar,
    /// Unramified exponent, exact (complex rational).
    pub u: CRat,
}

impl MultChar {
    pub fn unramified(p: u64, u: CRat) -> Self {
        MultChar {
            omega: UnitChar::trivial(p),
            u,
        }
    }

    pub fn norm_power(p: u64, k: i64) -> Self {
        MultChar::unramified(p, CRat::from_int(k))
    }

    pub fn from_finite(omega: UnitChar) -> Self {
        MultChar {
            omega,
            u: CRat::zero(),
        }
    }

    pub fn prime(&self) -> u64 {
        self.omega.prime()
    }

    pub fn inverse(&self) -> Self {
        MultChar {
            omega: self.omega.inverse(),
            u: self.u.neg(),
        }
    }

    /// JSON shape: {"p":3,"cond":1,"table":{"1":"0","2":"1/2"},"u":["0","0"]}.
    pub fn to_json(&self) -> Value {
        let mut table = Map::new();
        if self.omega.cond >= 1 {
            for (u, t) in &self.omega.table {
                table.insert(u.to_string(), json!(qrat_to_string(&t.as_qrat())));
            }
        }
        json!({
            "p": self.omega.p,
            "cond": self.omega.cond,
            "table": Value::Object(table),
            "u": [qrat_to_string(&self.u.re), qrat_to_string(&self.u.im)],
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, LocalFieldError> {
        let bad = |m: &str| LocalFieldError::BadSerialization(m.to_string());
        let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| bad("p"))?;
        let cond = v
            .get("cond")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("cond"))? as u32;
        let mut table = BTreeMap::new();
        if let Some(obj) = v.get("table").and_then(Value::as_object) {
            for (k, t) in obj {
                let u: u64 = k.parse().map_err(|_| bad("table key"))?;
                let q: QRat = t
                    .as_str()
                    .and_then(qrat_from_str)
                    .ok_or_else(|| bad("table value"))?;
                let num = q.numer().to_i64().ok_or_else(|| bad("turn range"))?;
                let den = q.denom().to_i64().ok_or_else(|| bad("turn range"))?;
                table.insert(u, Turn::new(num, den));
            }
        }
        let omega = UnitChar::from_table(p, cond, table)?;
        let u = match v.get("u").and_then(Value::as_array) {
            Some(pair) if pair.len() == 2 => CRat::new(
                pair[0].as_str().and_then(qrat_from_str).ok_or_else(|| bad("u re"))?,
                pair[1].as_str().and_then(qrat_from_str).ok_or_else(|| bad("u im"))?,
            ),
            None => CRat::zero(),
            _ => return Err(bad("u")),
        };
        Ok(MultChar { omega, u })
    }
}

/// Value of a quasi-character at a point: exact root-of-unity part plus the
/// floating norm part |x|^u.
#[derive(Clone, Debug)]
pub struct CharValue {
    pub root_of_unity: Turn,
    pub norm_part: Complex64,
}

impl CharValue {
    pub fn to_c64(&self) -> Complex64 {
        self.norm_part * self.root_of_unity.to_c64()
    }
}

/// χ(x) = |x|^u · ω(ac x). The point must carry at least cond(ω) digits.
pub fn eval_char(chi: &MultChar, x: &PAdicPoint) -> Result<CharValue, LocalFieldError> {
    assert_eq!(chi.prime(), x.prime(), "prime mismatch");
    if x.precision() < chi.omega.conductor_exp() {
        return Err(LocalFieldError::InsufficientPrecision {
            have: x.precision(),
            need: chi.omega.conductor_exp(),
        });
    }
    let root = chi.omega.value(x.unit_residue())?;
    // |x|^u = p^{-m·u} as a float.
    let lp = (x.prime() as f64).ln();
    let exponent = Complex64::new(
        crate::exact::qrat_to_f64(&chi.u.re),
        crate::exact::qrat_to_f64(&chi.u.im),
    ) * (-(x.ord() as f64) * lp);
    Ok(CharValue {
        root_of_unity: root,
        norm_part: exponent.exp(),
    })
}

/// Standard additive character ψ_p(x) = e^{2πi·{x}_p}, trivial on ℤ_p and
/// nontrivial on p^{-1}ℤ_p. `sign = −1` gives the conjugate ψ^{-1} used by
/// the inverse Fourier operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdditiveChar {
    pub p: u64,
    pub sign: i8,
}

impl AdditiveChar {
    pub fn standard(p: u64) -> Self {
        AdditiveChar { p, sign: 1 }
    }

    pub fn conjugate(&self) -> Self {
        AdditiveChar {
            p: self.p,
            sign: -self.sign,
        }
    }

    /// ψ(v/p^c) as an exact turn.
    pub fn value_at(&self, v: u64, c: u32) -> Turn {
        let pc = self.p.pow(c) as i64;
        Turn::new(self.sign as i64 * (v % pc as u64) as i64, pc)
    }
}

/// Gauss sum g(ω, ψ) = Σ_{v ∈ (ℤ/p^c)^×} ω(v)·ψ(v/p^c), exact cyclotomic form
/// plus the float and |g| (unitarity check: |g| = p^{c/2} for primitive ω).
#[derive(Clone, Debug)]
pub struct GaussSum {
    pub exact: Cyclo,
    pub value: Complex64,
    pub abs: f64,
}

pub fn gauss_sum(omega: &UnitChar, psi: &AdditiveChar) -> Result<GaussSum, LocalFieldError> {
    assert_eq!(omega.prime(), psi.p, "prime mismatch");
    let c = omega.conductor_exp();
    if c == 0 {
        return Err(LocalFieldError::UnramifiedGaussSum);
    }
    let pc = omega.prime().pow(c);
    let mut exact = Cyclo::zero();
    for v in 1..pc {
        if gcd_u64(v, omega.prime()) != 1 {
            continue;
        }
        let t = omega.value(v)?.add(&psi.value_at(v, c));
        exact = exact.add(&Cyclo::root_of_unity(t));
    }
    let value = exact.to_c64();
    Ok(GaussSum {
        exact,
        value,
        abs: value.norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qrat_to_f64;

    #[test]
    fn padic_point_invariants() {
        let x = PAdicPoint::new(3, 2, 5, 3).unwrap();
        assert_eq!(x.abs(), 1.0 / 9.0);
        assert!(PAdicPoint::new(3, 0, 6, 2).is_err());
        let y = PAdicPoint::from_rational(3, 18, 5, 3).unwrap();
        assert_eq!(y.ord(), 2);
        // 2/5 mod 27: 5^{-1} = 11, 2·11 = 22
        assert_eq!(y.unit_residue(), 22);
    }

    #[test]
    fn trivial_and_norm_characters() {
        let triv = MultChar::from_finite(UnitChar::trivial(3));
        let x = PAdicPoint::new(3, 2, 1, 3).unwrap();
        let v = eval_char(&triv, &x).unwrap();
        assert!((v.to_c64() - Complex64::new(1.0, 0.0)).norm() < 1e-15);

        let norm = MultChar::norm_power(3, 1);
        let v = eval_char(&norm, &x).unwrap();
        assert!((v.to_c64().re - 1.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn quadratic_character_mod_3() {
        let chi = MultChar::from_finite(UnitChar::quadratic(3).unwrap());
        let x = PAdicPoint::new(3, 0, 2, 1).unwrap();
        let v = eval_char(&chi, &x).unwrap();
        assert!((v.to_c64().re + 1.0).abs() < 1e-15);
    }

    #[test]
    fn insufficient_precision_is_an_error() {
        let chi = MultChar::from_finite(UnitChar::quadratic(2).unwrap()); // cond 2
        let x = PAdicPoint::new(2, 0, 1, 1).unwrap();
        assert!(matches!(
            eval_char(&chi, &x),
            Err(LocalFieldError::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn character_multiplicativity_on_roots_of_unity() {
        for chi in UnitChar::all_mod(5, 1) {
            for a in [1u64, 2, 3, 4] {
                for b in [1u64, 2, 3, 4] {
                    let ab = a * b % 5;
                    assert_eq!(
                        chi.value(a).unwrap().add(&chi.value(b).unwrap()),
                        chi.value(ab).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn gauss_sum_quadratic_mod_3() {
        let omega = UnitChar::quadratic(3).unwrap();
        let g = gauss_sum(&omega, &AdditiveChar::standard(3)).unwrap();
        // e^{2πi/3} − e^{4πi/3} = i√3
        assert!(g.value.re.abs() < 1e-14);
        assert!((g.value.im - 3f64.sqrt()).abs() < 1e-14);
        // exact check: g² = −3
        assert!(g.exact.mul(&g.exact).sub(&Cyclo::from_int(-3)).is_zero());
    }

    #[test]
    fn gauss_sum_quadratic_mod_4() {
        let omega = UnitChar::quadratic(2).unwrap();
        let g = gauss_sum(&omega, &AdditiveChar::standard(2)).unwrap();
        assert!((g.value - Complex64::new(0.0, 2.0)).norm() < 1e-14);
    }

    #[test]
    fn gauss_sum_magnitude_for_primitive_characters() {
        // |g|² = p^c over every primitive character with p^c up to a desk bound.
        for (p, c) in [(3u64, 1u32), (3, 2), (5, 1), (7, 1), (2, 2), (2, 3), (11, 1)] {
            for omega in UnitChar::all_mod(p, c) {
                if omega.conductor_exp() != c {
                    continue; // induced from lower level: not primitive mod p^c
                }
                let g = gauss_sum(&omega, &AdditiveChar::standard(p)).unwrap();
                let want = (p as f64).powi(c as i32);
                assert!(
                    (g.abs * g.abs - want).abs() / want < 1e-12,
                    "|g|² ≠ p^c for p={p}, c={c}"
                );
            }
        }
    }

    #[test]
    fn conductor_minimality_enforced() {
        // A table trivial on 1+3ℤ/9 pretending to have conductor 2.
        let mut table = BTreeMap::new();
        for u in [1u64, 2, 4, 5, 7, 8] {
            let t = if crate::exact::legendre(u, 3) == 1 {
                Turn::ZERO
            } else {
                Turn::new(1, 2)
            };
            table.insert(u, t);
        }
        assert_eq!(
            UnitChar::from_table(3, 2, table).unwrap_err(),
            LocalFieldError::ConductorNotMinimal(2)
        );
    }

    #[test]
    fn character_enumeration_counts() {
        assert_eq!(UnitChar::all_mod(7, 1).len(), 6);
        assert_eq!(UnitChar::all_mod(2, 3).len(), 4);
        assert_eq!(UnitChar::all_mod(3, 2).len(), 6);
    }

    #[test]
    fn multchar_json_round_trip() {
        let chi = MultChar::from_finite(UnitChar::quadratic(3).unwrap());
        let j = chi.to_json();
        let back = MultChar::from_json(&j).unwrap();
        assert_eq!(back.omega, chi.omega);
        assert!(qrat_to_f64(&back.u.re).abs() < 1e-15);
    }
}
