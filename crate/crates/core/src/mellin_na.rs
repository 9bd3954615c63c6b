//! Non-Archimedean local theory on GL(1): Schwartz functions in Mellin
//! coordinates, zeta integrals, basic functions, γ-factors, and the Fourier
//! operator.
//!
//! A Schwartz function φ is stored through its zeta integrals
//! `Z(s,φ,ω) = ∫ φ(x) ω(ac x) |x|^{s−1/2} d^×x`, one rational function of
//! `z = q^{-s}` per unit character ω. Pointwise values come back through the
//! residue formula: for `x = p^m·u`,
//! `φ(x) = q^{-m/2} · Σ_ω [z^m] Z(s,φ,ω) · ω(u)^{-1}`,
//! which stays exact because `√q` and the root-of-unity values live in the
//! cyclotomic scalars.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::exact::{CRat, Cyclo, QRat};
use crate::localfield::{gauss_sum, AdditiveChar, LocalFieldError, MultChar, PAdicPoint, UnitChar};
use crate::qseries::{LaurentPoly, QseriesError, RationalFn};
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, thiserror::Error)]
pub enum MellinError {
    #[error(transparent)]
    Qseries(#[from] QseriesError),
    #[error(transparent)]
    LocalField(#[from] LocalFieldError),
    #[error("γ-multiplied data fails the fractional-ideal membership test at key with conductor {0}")]
    NotInSchwartzSpace(u32),
    #[error("exact arithmetic requires half-integer unramified exponents, got {0}")]
    ExponentNotHalfInteger(String),
    #[error("ramified data beyond GL(1) character twists is not supported")]
    NotImplemented,
    #[error("point precision is below the largest conductor carried by the data")]
    InsufficientPrecision,
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
}

/// Unramified local representation, carried as the exact inverse L-factor
/// `∏_j (1 − α_j z)` together with derived float Satake values.
#[derive(Clone, Debug)]
pub struct UnramifiedRep {
    p: u64,
    /// ∏_j (1 − α_j z); ordinary polynomial, constant term 1.
    l_den: LaurentPoly,
    satake: Vec<Complex64>,
    kappa: f64,
}

impl UnramifiedRep {
    pub fn new(p: u64, l_den: LaurentPoly, kappa: f64) -> Result<Self, MellinError> {
        assert!(
            l_den.min_exp() == Some(0) && l_den.coeff(0).eq(&Cyclo::one()),
            "inverse L-factor must have constant term 1"
        );
        let n = l_den.max_exp().unwrap() as usize;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        for (e, c) in l_den.terms() {
            coeffs[*e as usize] = c.to_c64();
        }
        let zeros = poly_roots(&coeffs);
        let satake: Vec<Complex64> = zeros.iter().map(|z| 1.0 / z).collect();
        let rep = UnramifiedRep {
            p,
            l_den,
            satake,
            kappa,
        };
        rep.check_bound()?;
        Ok(rep)
    }

    /// The trivial character of ℚ_p^× (the GL(1) datum behind ζ).
    pub fn trivial(p: u64) -> Self {
        UnramifiedRep::new(p, LaurentPoly::from_ints(&[1, -1]), 0.6).unwrap()
    }

    /// Build from exact Satake values α_j.
    pub fn from_satake_exact(p: u64, alphas: &[Cyclo], kappa: f64) -> Result<Self, MellinError> {
        let mut l_den = LaurentPoly::one();
        for a in alphas {
            let factor = LaurentPoly::one().sub(&LaurentPoly::monomial(1, a.clone()));
            l_den = l_den.mul(&factor);
        }
        UnramifiedRep::new(p, l_den, kappa)
    }

    fn check_bound(&self) -> Result<(), MellinError> {
        let lq = (self.p as f64).ln();
        let max_re = self
            .satake
            .iter()
            .map(|a| a.norm().ln() / lq)
            .fold(f64::NEG_INFINITY, f64::max);
        if max_re >= self.kappa {
            return Err(MellinError::NotInSchwartzSpace(0));
        }
        Ok(())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.l_den.max_exp().unwrap_or(0) as usize
    }

    pub fn inverse_l_factor(&self) -> &LaurentPoly {
        &self.l_den
    }

    pub fn satake(&self) -> &[Complex64] {
        &self.satake
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// max_j Re(s_j) computed from |α_j| (< kappa by the standing assumption).
    pub fn max_re_exponent(&self) -> f64 {
        let lq = (self.p as f64).ln();
        self.satake
            .iter()
            .map(|a| a.norm().ln() / lq)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// ∏_j α_j, exact: (−1)^n times the top coefficient of the inverse L-factor.
    pub fn satake_product(&self) -> Cyclo {
        let n = self.rank() as i64;
        let top = self.l_den.coeff(n);
        if n % 2 == 0 {
            top
        } else {
            top.neg()
        }
    }

    /// Contragredient: Satake values inverted.
    pub fn contragredient(&self) -> Self {
        // ∏(1−α_j^{-1}z) = (−1)^n (∏α_j)^{-1} z^n · l_den(1/z)
        let n = self.rank() as i64;
        let prod_inv = self.satake_product().inv().expect("nonzero Satake product");
        let mut flipped = self.l_den.subst_inv(&Cyclo::one()).shift(n);
        flipped = flipped.scale(&prod_inv);
        if n % 2 == 1 {
            flipped = flipped.neg();
        }
        UnramifiedRep::new(self.p, flipped, self.kappa).expect("dual keeps the bound")
    }
}

/// Local representation datum: an unramified GL(n) rep or a (possibly
/// ramified) GL(1) quasi-character.
#[derive(Clone, Debug)]
pub enum LocalRep {
    Unramified(UnramifiedRep),
    Char(MultChar),
}

impl LocalRep {
    pub fn prime(&self) -> u64 {
        match self {
            LocalRep::Unramified(r) => r.prime(),
            LocalRep::Char(c) => c.prime(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            LocalRep::Unramified(r) => r.rank(),
            LocalRep::Char(_) => 1,
        }
    }

    pub fn contragredient(&self) -> Self {
        match self {
            LocalRep::Unramified(r) => LocalRep::Unramified(r.contragredient()),
            LocalRep::Char(c) => LocalRep::Char(c.inverse()),
        }
    }

    /// L(s, π×ω) as a rational function of z; the trivial factor 1 for
    /// ramified combinations.
    pub fn l_factor(&self, omega: &UnitChar) -> Result<RationalFn, MellinError> {
        match self {
            LocalRep::Unramified(r) => {
                if omega.is_trivial() {
                    Ok(RationalFn::new(LaurentPoly::one(), r.inverse_l_factor().clone())?)
                } else {
                    Ok(RationalFn::one())
                }
            }
            LocalRep::Char(eta) => {
                let combined = eta.omega.mul(omega);
                if combined.is_trivial() {
                    // 1/(1 − q^{-u_η} z)
                    let c = q_power_exact(self.prime(), &eta.u.neg())?;
                    let den = LaurentPoly::one().sub(&LaurentPoly::monomial(1, c));
                    Ok(RationalFn::new(LaurentPoly::one(), den)?)
                } else {
                    Ok(RationalFn::one())
                }
            }
        }
    }

    /// Keys with a nontrivial L-factor (where basic-type data lives).
    fn unramified_twist_key(&self) -> UnitChar {
        match self {
            LocalRep::Unramified(r) => UnitChar::trivial(r.prime()),
            LocalRep::Char(eta) => eta.omega.inverse(),
        }
    }

    pub fn max_re_exponent(&self) -> f64 {
        match self {
            LocalRep::Unramified(r) => r.max_re_exponent(),
            LocalRep::Char(eta) => -crate::exact::qrat_to_f64(&eta.u.re),
        }
    }

    pub fn kappa(&self) -> f64 {
        match self {
            LocalRep::Unramified(r) => r.kappa(),
            LocalRep::Char(eta) => crate::exact::qrat_to_f64(&eta.u.re).abs() + 0.6,
        }
    }
}

/// `q^{-u}` as an exact scalar; supports half-integer real exponents.
fn q_power_exact(p: u64, minus_u: &CRat) -> Result<Cyclo, MellinError> {
    if !minus_u.im.is_zero() {
        return Err(MellinError::ExponentNotHalfInteger(format!("{minus_u:?}")));
    }
    let twice = &minus_u.re * QRat::from_integer(2.into());
    if !twice.denom().is_one() {
        return Err(MellinError::ExponentNotHalfInteger(format!("{minus_u:?}")));
    }
    let k = twice
        .numer()
        .to_i64()
        .ok_or_else(|| MellinError::ExponentNotHalfInteger(format!("{minus_u:?}")))?;
    // q^{-u} = p^{k/2} with k = −2u … the caller passes −u directly.
    Ok(Cyclo::prime_half_power(p, k))
}

/// Local γ-factor as an exact rational function of z, with the s ↦ 1−s
/// convention realized by z ↦ q^{-1}/z on the dual side.
#[derive(Clone, Debug)]
pub struct GammaFactor {
    pub rational: RationalFn,
    /// Conductor exponent of the twisting data (0 for the unramified branch).
    pub conductor_exp: u32,
}

impl GammaFactor {
    pub fn eval_at_s(&self, p: u64, s: Complex64) -> Result<(Complex64, f64), QseriesError> {
        let z = Complex64::new(-(p as f64).ln(), 0.0) * s;
        self.rational.eval(z.exp())
    }
}

/// γ(s, π×χ, ψ): the multiplier in the local functional equation
/// `Z(1−s, F φ, χ^{-1}) = γ(s, π×χ, ψ) · Z(s, φ, χ)`.
///
/// Unramified combinations give the exact L-quotient `L(1−s,π̃×ω^{-1})/L(s,π×ω)`;
/// ramified GL(1) combinations give a monomial in z times a Gauss-sum unit.
pub fn gamma_na(
    rep: &LocalRep,
    chi: &MultChar,
    psi: &AdditiveChar,
) -> Result<GammaFactor, MellinError> {
    if rep.prime() != chi.prime() {
        return Err(MellinError::PrimeMismatch(rep.prime(), chi.prime()));
    }
    let p = rep.prime();
    match rep {
        LocalRep::Unramified(r) => {
            if chi.omega.is_trivial() {
                // L(1−s, π̃)/L(s, π) shifted by the unramified exponent u.
                let dual = r.contragredient();
                let dual_den_at_dual_var = dual
                    .inverse_l_factor()
                    .subst_inv(&Cyclo::prime_half_power(p, -2));
                let gamma0 = RationalFn::new(r.inverse_l_factor().clone(), dual_den_at_dual_var)?;
                let scale = q_power_exact(p, &chi.u.neg())?;
                Ok(GammaFactor {
                    rational: gamma0.scale_var(&scale),
                    conductor_exp: 0,
                })
            } else {
                // ∏_j γ(ω|·|^{s+s_j}) = g(ω^{-1},ψ)^n (∏α_j)^{-c} z^{cn},
                // then the exponent shift z ↦ q^{-u}z.
                let n = r.rank() as u32;
                let c = chi.omega.conductor_exp();
                let g = gauss_sum(&chi.omega.inverse(), psi)?;
                let unit = g
                    .exact
                    .pow(n)
                    .mul(&r.satake_product().inv().expect("nonzero").pow(c));
                let mono = RationalFn::from_poly(LaurentPoly::monomial((c * n) as i64, unit));
                let scale = q_power_exact(p, &chi.u.neg())?;
                Ok(GammaFactor {
                    rational: mono.scale_var(&scale),
                    conductor_exp: c,
                })
            }
        }
        LocalRep::Char(eta) => {
            let combined_fin = eta.omega.mul(&chi.omega);
            let u_total = eta.u.add(&chi.u);
            if combined_fin.is_trivial() {
                let triv = UnramifiedRep::trivial(p);
                let dual_den_at_dual_var = triv
                    .inverse_l_factor()
                    .subst_inv(&Cyclo::prime_half_power(p, -2));
                let gamma0 =
                    RationalFn::new(triv.inverse_l_factor().clone(), dual_den_at_dual_var)?;
                let scale = q_power_exact(p, &u_total.neg())?;
                Ok(GammaFactor {
                    rational: gamma0.scale_var(&scale),
                    conductor_exp: 0,
                })
            } else {
                let c = combined_fin.conductor_exp();
                let g = gauss_sum(&combined_fin.inverse(), psi)?;
                // γ = g((ωη)^{-1}, ψ) · q^{-c·u_total} · z^c
                let shift = q_power_exact(p, &u_total.neg())?.pow(c);
                let mono =
                    RationalFn::from_poly(LaurentPoly::monomial(c as i64, g.exact.mul(&shift)));
                Ok(GammaFactor {
                    rational: mono,
                    conductor_exp: c,
                })
            }
        }
    }
}

/// π-Schwartz function on ℚ_p^× in Mellin coordinates: finitely many unit
/// characters ω, each carrying `Z(s,φ,ω)` as a rational function of z.
#[derive(Clone, Debug)]
pub struct NASchwartz {
    rep: LocalRep,
    entries: BTreeMap<UnitChar, RationalFn>,
}

impl NASchwartz {
    /// Validates the fractional-ideal membership: every entry must be a
    /// Laurent-polynomial multiple of the matching local L-factor.
    pub fn new(
        rep: LocalRep,
        entries: BTreeMap<UnitChar, RationalFn>,
    ) -> Result<Self, MellinError> {
        let mut clean = BTreeMap::new();
        for (omega, data) in entries {
            if data.is_zero() {
                continue;
            }
            let l = rep.l_factor(&omega)?;
            let ratio = data.div(&l)?;
            if !ratio.is_laurent_poly() {
                return Err(MellinError::NotInSchwartzSpace(omega.conductor_exp()));
            }
            clean.insert(omega, data);
        }
        Ok(NASchwartz { rep, entries: clean })
    }

    /// The zero function: empty Mellin data.
    pub fn zero(rep: LocalRep) -> Self {
        NASchwartz {
            rep,
            entries: BTreeMap::new(),
        }
    }

    /// The basic function: Mellin data `L(s,π)` at the unramified-twist key.
    pub fn basic(rep: &LocalRep) -> Result<Self, MellinError> {
        let key = rep.unramified_twist_key();
        let l = rep.l_factor(&key)?;
        let mut entries = BTreeMap::new();
        entries.insert(key, l);
        NASchwartz::new(rep.clone(), entries)
    }

    /// Indicator of the unit group (as Mellin data: the constant 1 at the
    /// trivial key).
    pub fn unit_indicator(rep: &LocalRep) -> Result<Self, MellinError> {
        let mut entries = BTreeMap::new();
        entries.insert(UnitChar::trivial(rep.prime()), RationalFn::one());
        NASchwartz::new(rep.clone(), entries)
    }

    pub fn rep(&self) -> &LocalRep {
        &self.rep
    }

    pub fn prime(&self) -> u64 {
        self.rep.prime()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&UnitChar, &RationalFn)> {
        self.entries.iter()
    }

    pub fn is_zero_function(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_conductor(&self) -> u32 {
        self.entries
            .keys()
            .map(|k| k.conductor_exp())
            .max()
            .unwrap_or(0)
    }

    /// Z(s,φ,ω): stored-data lookup (zero off the carried keys).
    pub fn mellin(&self, omega: &UnitChar) -> RationalFn {
        self.entries
            .get(omega)
            .cloned()
            .unwrap_or_else(RationalFn::zero)
    }

    /// Lowest shell ord_p carrying support (None for the zero function).
    pub fn support_min_ord(&self) -> Option<i64> {
        self.entries
            .values()
            .filter_map(|d| d.num().min_exp())
            .min()
    }

    /// Largest shell with support when the data is compact.
    pub fn support_max_ord(&self) -> Option<i64> {
        if !self.is_compact() {
            return None;
        }
        self.entries
            .values()
            .filter_map(|d| d.num().max_exp())
            .max()
    }

    pub fn is_compact(&self) -> bool {
        self.entries.values().all(|d| d.is_laurent_poly())
    }

    /// Exact pointwise value φ(p^m u); includes the q^{-m/2} half-power.
    pub fn eval_exact(&self, x: &PAdicPoint) -> Result<Cyclo, MellinError> {
        if x.prime() != self.prime() {
            return Err(MellinError::PrimeMismatch(x.prime(), self.prime()));
        }
        if x.precision() < self.max_conductor() {
            return Err(MellinError::InsufficientPrecision);
        }
        let m = x.ord();
        let mut acc = Cyclo::zero();
        for (omega, data) in &self.entries {
            let coeff = data.laurent_coeff(m);
            if coeff.is_zero() {
                continue;
            }
            let unit = omega.value(x.unit_residue())?.neg();
            acc = acc.add(&coeff.mul(&Cyclo::root_of_unity(unit)));
        }
        if acc.is_zero() {
            return Ok(Cyclo::zero());
        }
        Ok(acc.mul(&Cyclo::prime_half_power(self.prime(), -m)))
    }

    pub fn eval(&self, x: &PAdicPoint) -> Result<Complex64, MellinError> {
        Ok(self.eval_exact(x)?.to_c64())
    }

    /// Floating evaluation; skips cyclotomic arithmetic, for large sweeps.
    pub fn eval_f64(&self, x: &PAdicPoint) -> Result<Complex64, MellinError> {
        if x.prime() != self.prime() {
            return Err(MellinError::PrimeMismatch(x.prime(), self.prime()));
        }
        if x.precision() < self.max_conductor() {
            return Err(MellinError::InsufficientPrecision);
        }
        let m = x.ord();
        let mut acc = Complex64::new(0.0, 0.0);
        for (omega, data) in &self.entries {
            let coeff = data.laurent_coeffs_f64(m, m)[0];
            if coeff.norm() == 0.0 {
                continue;
            }
            acc += coeff * omega.value(x.unit_residue())?.neg().to_c64();
        }
        Ok(acc * (self.prime() as f64).powf(-(m as f64) / 2.0))
    }

    /// Floating shell coefficients q^{-m/2}·[z^m] for m in a range, per key.
    pub fn shell_coeffs_f64(&self, lo: i64, hi: i64) -> Vec<(&UnitChar, Vec<Complex64>)> {
        self.entries
            .iter()
            .map(|(omega, data)| {
                let mut cs = data.laurent_coeffs_f64(lo, hi);
                for (i, c) in cs.iter_mut().enumerate() {
                    let m = lo + i as i64;
                    *c *= (self.prime() as f64).powf(-(m as f64) / 2.0);
                }
                (omega, cs)
            })
            .collect()
    }

    /// Rigorous upper bound for |φ| on the shell ord = m (triangle inequality
    /// on the expansion coefficients; Satake magnitudes bound the L-part).
    pub fn shell_bound(&self, m: i64) -> f64 {
        let mut total = 0.0f64;
        for data in self.entries.values() {
            if data.is_zero() {
                continue;
            }
            if data.is_laurent_poly() {
                total += data.num().coeff(m).abs_upper_bound();
                continue;
            }
            // |[z^m] P·L| ≤ Σ_k |P_k|·h_{m−k}, h_j ≤ C(j+r−1, r−1)·ρ^j
            let r = data.den().max_exp().unwrap() as u64;
            let rho = match &self.rep {
                LocalRep::Unramified(rep) => rep
                    .satake
                    .iter()
                    .map(|a| a.norm())
                    .fold(0.0f64, f64::max)
                    .max(1e-12)
                    * (1.0 + 1e-9),
                LocalRep::Char(eta) => (self.prime() as f64)
                    .powf(-crate::exact::qrat_to_f64(&eta.u.re))
                    * (1.0 + 1e-9),
            };
            for (k, c) in data.num().terms() {
                let j = m - k;
                if j < 0 {
                    continue;
                }
                total += c.abs_upper_bound() * binomial_f64(j as u64 + r - 1, r - 1)
                    * rho.powi(j as i32);
            }
        }
        total * (self.prime() as f64).powf(-(m as f64) / 2.0)
    }

    /// Mellin image of the ω-twist-compatible membership test: true iff the
    /// data is a family of Laurent polynomials, i.e. φ ∈ C_c^∞(ℚ_p^×).
    pub fn membership_compact(&self) -> bool {
        self.is_compact()
    }

    /// The Fourier operator F_{π,ψ}: transports each entry by the γ-factor
    /// and the substitution s ↦ 1−s, landing in the contragredient space.
    pub fn fourier(&self, psi: &AdditiveChar) -> Result<NASchwartz, MellinError> {
        let p = self.prime();
        let dual_rep = self.rep.contragredient();
        let q_inv = Cyclo::prime_half_power(p, -2);
        let mut entries = BTreeMap::new();
        for (omega, data) in &self.entries {
            let chi = MultChar::from_finite(omega.clone());
            let gamma = gamma_na(&self.rep, &chi, psi)?;
            let image = gamma.rational.mul(data).subst_inv(&q_inv);
            if !image.is_zero() {
                entries.insert(omega.inverse(), image);
            }
        }
        NASchwartz::new(dual_rep, entries)
    }

    /// Translate by y: φ^y(x) = φ(xy). Mellin side:
    /// Z(s, φ^y, ω) = ω(ac y)^{-1} q^{k/2} z^{-k} Z(s,φ,ω) for ord(y) = k.
    pub fn translate(&self, y: &PAdicPoint) -> Result<NASchwartz, MellinError> {
        if y.prime() != self.prime() {
            return Err(MellinError::PrimeMismatch(y.prime(), self.prime()));
        }
        if y.precision() < self.max_conductor() {
            return Err(MellinError::InsufficientPrecision);
        }
        let k = y.ord();
        let half = Cyclo::prime_half_power(self.prime(), -k);
        let mut entries = BTreeMap::new();
        for (omega, data) in &self.entries {
            let unit = Cyclo::root_of_unity(omega.value(y.unit_residue())?.neg());
            let moved = data.shift(-k).scale(&unit.mul(&half));
            entries.insert(omega.clone(), moved);
        }
        NASchwartz::new(self.rep.clone(), entries)
    }

    /// Exact equality of Mellin data over the same prime.
    pub fn eq_data(&self, other: &NASchwartz) -> bool {
        if self.prime() != other.prime() || self.entries.len() != other.entries.len() {
            return false;
        }
        self.entries.iter().all(|(k, v)| {
            other
                .entries
                .get(k)
                .map(|w| v.eq(w))
                .unwrap_or(false)
        })
    }
}

/// Recover Mellin data from pointwise values on shells lo..=hi at unit
/// precision c: the finite-shell zeta integral
/// `Z(s,φ,ω) = Σ_m z^m · q^{m/2} · avg_{u mod p^c} φ(p^m u) ω(u)`.
///
/// This is the independent re-Mellin direction of the round-trip oracle; it
/// never touches the stored coordinates of the function being probed.
pub fn mellin_from_values(
    p: u64,
    c: u32,
    shells: std::ops::RangeInclusive<i64>,
    value: impl Fn(&PAdicPoint) -> Result<Cyclo, MellinError>,
) -> Result<BTreeMap<UnitChar, LaurentPoly>, MellinError> {
    let pc = p.pow(c);
    let units: Vec<u64> = (1..pc).filter(|u| crate::exact::gcd_u64(*u, p) == 1).collect();
    let phi_pc = CRat::from_ratio(1, units.len() as i64);
    let mut values: BTreeMap<(i64, u64), Cyclo> = BTreeMap::new();
    for m in shells.clone() {
        for &u in &units {
            let x = PAdicPoint::new(p, m, u, c)?;
            values.insert((m, u), value(&x)?);
        }
    }
    let mut out = BTreeMap::new();
    for omega in UnitChar::all_mod(p, c) {
        let mut poly = LaurentPoly::zero();
        for m in shells.clone() {
            let mut acc = Cyclo::zero();
            for &u in &units {
                let w = Cyclo::root_of_unity(omega.value(u).unwrap());
                acc = acc.add(&values[&(m, u)].mul(&w));
            }
            let coeff = acc
                .scale(&phi_pc)
                .mul(&Cyclo::prime_half_power(p, m));
            poly = poly.add(&LaurentPoly::monomial(m, coeff));
        }
        if !poly.is_zero() {
            out.insert(omega, poly);
        }
    }
    Ok(out)
}

/// log2 C(t+n−1, n−1)/t maximized over t ≥ 1: the constant c₀ in the basic
/// function bound, so any b > κ + c₀ satisfies |𝕃(x)|x|^b| ≤ 1.
pub fn basic_bound_exponent(rank: usize, kappa: f64) -> f64 {
    if rank <= 1 {
        return kappa;
    }
    let mut c0 = 0.0f64;
    for t in 1..=400u64 {
        let v = binomial_f64(t + rank as u64 - 1, rank as u64 - 1).log2() / t as f64;
        c0 = c0.max(v);
    }
    kappa + c0
}

pub fn binomial_f64(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Durand–Kerner root finder for small complex polynomials (ascending
/// coefficients, nonzero leading term).
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..200 {
        let mut shift = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            shift = shift.max(delta.norm());
        }
        if shift < 1e-14 {
            break;
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qrat_to_f64;

    fn delta_rep_at_2() -> UnramifiedRep {
        // Inverse L-factor 1 − τ(2)·2^{-11/2} z + z² with τ(2) = −24.
        let a2 = Cyclo::prime_half_power(2, -11).scale(&CRat::from_int(-24));
        let l_den = LaurentPoly::from_coeffs(&[
            (0, Cyclo::one()),
            (1, a2.neg()),
            (2, Cyclo::one()),
        ]);
        UnramifiedRep::new(2, l_den, 1.0).unwrap()
    }

    #[test]
    fn basic_of_trivial_rep_takes_half_power_values() {
        let rep = LocalRep::Unramified(UnramifiedRep::trivial(3));
        let basic = NASchwartz::basic(&rep).unwrap();
        for m in 0..6 {
            let x = PAdicPoint::prime_power(3, m);
            let v = basic.eval_exact(&x).unwrap();
            assert!(v.eq(&Cyclo::prime_half_power(3, -m)));
        }
        // support in o − {0}
        for m in 1..4 {
            let x = PAdicPoint::prime_power(3, -m);
            assert!(basic.eval_exact(&x).unwrap().is_zero());
        }
        // value 1 on units
        let u = PAdicPoint::new(3, 0, 2, 2).unwrap();
        assert!(basic.eval_exact(&u).unwrap().eq(&Cyclo::one()));
    }

    #[test]
    fn basic_of_delta_at_2() {
        let rep = LocalRep::Unramified(delta_rep_at_2());
        let basic = NASchwartz::basic(&rep).unwrap();
        let x = PAdicPoint::prime_power(2, 1);
        // τ(2)·2^{-6} = −3/8
        let want = Cyclo::from_ratio(-3, 8);
        assert!(basic.eval_exact(&x).unwrap().eq(&want));
        assert!(!basic.membership_compact());
    }

    #[test]
    fn unit_indicator_is_compact_and_unit_valued() {
        let rep = LocalRep::Unramified(UnramifiedRep::trivial(5));
        let ind = NASchwartz::unit_indicator(&rep).unwrap();
        assert!(ind.membership_compact());
        let u = PAdicPoint::new(5, 0, 3, 2).unwrap();
        assert!(ind.eval_exact(&u).unwrap().eq(&Cyclo::one()));
        let x = PAdicPoint::prime_power(5, 2);
        assert!(ind.eval_exact(&x).unwrap().is_zero());
        assert!(ind.mellin(&UnitChar::trivial(5)).eq(&RationalFn::one()));
        assert!(ind.mellin(&UnitChar::quadratic(5).unwrap()).is_zero());
    }

    #[test]
    fn gamma_unramified_is_one_at_center() {
        let rep = LocalRep::Unramified(UnramifiedRep::trivial(7));
        let chi = MultChar::unramified(7, CRat::zero());
        let g = gamma_na(&rep, &chi, &AdditiveChar::standard(7)).unwrap();
        let (v, _) = g.eval_at_s(7, Complex64::new(0.5, 0.0)).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn gamma_duality_is_exact() {
        // γ(s,π,ψ)·γ(1−s,π̃,ψ^{-1}) = 1 as rational functions.
        let rep = LocalRep::Unramified(delta_rep_at_2());
        let psi = AdditiveChar::standard(2);
        let chi = MultChar::unramified(2, CRat::zero());
        let g = gamma_na(&rep, &chi, &psi).unwrap();
        let gd = gamma_na(&rep.contragredient(), &chi, &psi.conjugate()).unwrap();
        let q_inv = Cyclo::prime_half_power(2, -2);
        let product = g.rational.mul(&gd.rational.subst_inv(&q_inv));
        assert!(product.eq(&RationalFn::one()));
    }

    #[test]
    fn gamma_ramified_is_unitary_on_the_line() {
        let rep = LocalRep::Unramified(UnramifiedRep::trivial(3));
        let chi = MultChar::from_finite(UnitChar::quadratic(3).unwrap());
        let g = gamma_na(&rep, &chi, &AdditiveChar::standard(3)).unwrap();
        let (v, _) = g.eval_at_s(3, Complex64::new(0.5, 0.0)).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fourier_takes_basic_to_dual_basic() {
        for rep in [
            LocalRep::Unramified(UnramifiedRep::trivial(5)),
            LocalRep::Unramified(delta_rep_at_2()),
        ] {
            let basic = NASchwartz::basic(&rep).unwrap();
            let image = basic.fourier(&AdditiveChar::standard(rep.prime())).unwrap();
            let dual_basic = NASchwartz::basic(&rep.contragredient()).unwrap();
            assert!(image.eq_data(&dual_basic));
        }
    }

    #[test]
    fn fourier_involution_on_compact_data() {
        let p = 3;
        let rep = LocalRep::Unramified(UnramifiedRep::trivial(p));
        let psi = AdditiveChar::standard(p);
        let mut entries = BTreeMap::new();
        entries.insert(
            UnitChar::trivial(p),
            RationalFn::from_poly(LaurentPoly::from_coeffs(&[
                (-1, Cyclo::from_ratio(2, 7)),
                (3, Cyclo::from_int(5)),
            ])),
        );
        entries.insert(
            UnitChar::quadratic(p).unwrap(),
            RationalFn::from_poly(LaurentPoly::from_ints(&[0, 1, -4])),
        );
        let phi = NASchwartz::new(rep, entries).unwrap();
        let round = phi
            .fourier(&psi)
            .unwrap()
            .fourier(&psi.conjugate())
            .unwrap();
        assert!(round.eq_data(&phi));
    }

    #[test]
    fn translate_matches_pointwise_shift() {
        let rep = LocalRep::Unramified(delta_rep_at_2());
        let basic = NASchwartz::basic(&rep).unwrap();
        let y = PAdicPoint::new(2, 1, 3, 4).unwrap();
        let moved = basic.translate(&y).unwrap();
        for m in -1..5 {
            let x = PAdicPoint::new(2, m, 5, 4).unwrap();
            let lhs = moved.eval_exact(&x).unwrap();
            let rhs = basic.eval_exact(&x.mul(&y)).unwrap();
            assert!(lhs.eq(&rhs));
        }
    }

    #[test]
    fn shell_bound_dominates_values() {
        let rep = LocalRep::Unramified(delta_rep_at_2());
        let basic = NASchwartz::basic(&rep).unwrap();
        for m in 0..12 {
            let x = PAdicPoint::prime_power(2, m);
            let v = basic.eval(&x).unwrap().norm();
            assert!(v <= basic.shell_bound(m) + 1e-12);
        }
    }

    #[test]
    fn zero_function_is_valid() {
        let rep = LocalRep::Unramified(UnramifiedRep::trivial(2));
        let z = NASchwartz::zero(rep);
        assert!(z.is_zero_function());
        assert!(z.membership_compact());
        let x = PAdicPoint::prime_power(2, 0);
        assert!(z.eval_exact(&x).unwrap().is_zero());
    }

    #[test]
    fn satake_floats_track_l_poly() {
        let rep = delta_rep_at_2();
        let sum: Complex64 = rep.satake().iter().sum();
        assert!((sum.re - (-24.0 * 2f64.powf(-5.5))).abs() < 1e-9);
        for a in rep.satake() {
            assert!((a.norm() - 1.0).abs() < 1e-9, "Deligne bound at p=2");
        }
        assert!(qrat_to_f64(&QRat::one()) == 1.0);
    }

    #[test]
    fn mellin_from_values_round_trips_unit_indicator() {
        let rep = LocalRep::Unramified(UnramifiedRep::trivial(3));
        let ind = NASchwartz::unit_indicator(&rep).unwrap();
        let data = mellin_from_values(3, 1, -1..=2, |x| ind.eval_exact(x)).unwrap();
        assert_eq!(data.len(), 1);
        let got = data.get(&UnitChar::trivial(3)).unwrap();
        assert!(got.eq(&LaurentPoly::one()));
    }
}
