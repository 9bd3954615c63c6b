//! Archimedean local theory over ℝ: closed-form Mellin transforms of the
//! integrand family `Σ c·|x|^a·sgn(x)^ε·e^{−b|x|^r}` (r ∈ {1,2}), γ-factors
//! from Γ-function identities, Stirling-strip diagnostics, and decay fits.
//!
//! Conventions: multiplicative measure `d^×x = dx/(2|x|)`, additive character
//! `ψ(x) = e^{2πix}`. The transform computed here is the plain Mellin pairing
//! `M(φ)(χ_{s,p}) = ∫ φ(x)·|x|^s·sgn(x)^p d^×x`; zeta integrals shift the
//! exponent by −1/2 at the call site.

use num_complex::Complex64;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ArchError {
    #[error("contour Re(s) = {re} lies left of the convergence abscissa {abscissa}")]
    AbscissaViolation { re: f64, abscissa: f64 },
    #[error("evaluation point collides with a Γ pole")]
    PoleOnContour,
    #[error("term has a non-positive decay rate b = {0}")]
    BadDecayRate(f64),
    #[error("decay exponent r must be 1 or 2, got {0}")]
    BadDecayExponent(u8),
    #[error("term with power a = {0} ≤ 0 needs the positive-abscissa flag")]
    NonPositivePower(f64),
    #[error("quadrature failed to reach tolerance {wanted:.2e} (reached {reached:.2e})")]
    QuadratureFailed { wanted: f64, reached: f64 },
    #[error("closed form and quadrature disagree: |Δ| = {0:.3e}")]
    CrossCheckFailed(f64),
    #[error("no closed-form Fourier image for this term family")]
    FourierUnsupported,
}

/// Quasi-character of ℝ^×: χ(x) = |x|^s · sgn(x)^parity.
#[derive(Clone, Copy, Debug)]
pub struct ArchChar {
    pub s: Complex64,
    pub parity: u8,
}

impl ArchChar {
    pub fn new(s: Complex64, parity: u8) -> Self {
        ArchChar {
            s,
            parity: parity % 2,
        }
    }
}

/// One closed-family term `coeff · |x|^a · sgn(x)^eps · e^{−b·|x|^r}`.
#[derive(Clone, Copy, Debug)]
pub struct ArchTerm {
    pub coeff: Complex64,
    pub a: f64,
    pub eps: u8,
    pub b: f64,
    pub r: u8,
}

/// Schwartz-type function on ℝ^× from the closed integrand family.
#[derive(Clone, Debug)]
pub struct ArchSchwartz {
    terms: Vec<ArchTerm>,
}

impl ArchSchwartz {
    pub fn new(terms: Vec<ArchTerm>) -> Result<Self, ArchError> {
        Self::build(terms, false)
    }

    /// Accept terms with a ≤ 0; their Mellin transforms then require
    /// Re(s) > −a, which the abscissa check enforces per call.
    pub fn new_with_positive_abscissa(terms: Vec<ArchTerm>) -> Result<Self, ArchError> {
        Self::build(terms, true)
    }

    fn build(terms: Vec<ArchTerm>, allow_flat: bool) -> Result<Self, ArchError> {
        for t in &terms {
            if t.b <= 0.0 {
                return Err(ArchError::BadDecayRate(t.b));
            }
            if t.r != 1 && t.r != 2 {
                return Err(ArchError::BadDecayExponent(t.r));
            }
            if t.a <= 0.0 && !allow_flat {
                return Err(ArchError::NonPositivePower(t.a));
            }
        }
        Ok(ArchSchwartz { terms })
    }

    /// The Tate datum at ∞: |x|^{1/2}·e^{−πx²} (Gaussian as a GL(1)-Schwartz
    /// function, carrying the measure half-power).
    pub fn gaussian() -> Self {
        ArchSchwartz::new(vec![ArchTerm {
            coeff: Complex64::new(1.0, 0.0),
            a: 0.5,
            eps: 0,
            b: std::f64::consts::PI,
            r: 2,
        }])
        .unwrap()
    }

    /// Sign Gaussian sgn(x)·|x|^{1/2}·e^{−πx²}: the parity-1 partner of the
    /// Tate datum (Fourier-fixed under an odd GL(1) character).
    pub fn gaussian_odd() -> Self {
        ArchSchwartz::new(vec![ArchTerm {
            coeff: Complex64::new(1.0, 0.0),
            a: 0.5,
            eps: 1,
            b: std::f64::consts::PI,
            r: 2,
        }])
        .unwrap()
    }

    /// |x|^k e^{−2π|x|}: the holomorphic-form datum (k = 6 pairs with the
    /// weight-12 level-1 cusp form).
    pub fn exp_monomial(k: f64) -> Self {
        ArchSchwartz::new(vec![ArchTerm {
            coeff: Complex64::new(1.0, 0.0),
            a: k,
            eps: 0,
            b: 2.0 * std::f64::consts::PI,
            r: 1,
        }])
        .unwrap()
    }

    pub fn terms(&self) -> &[ArchTerm] {
        &self.terms
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        if x == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let ax = x.abs();
        let sgn = if x < 0.0 { -1.0 } else { 1.0 };
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            let s = if t.eps == 1 { sgn } else { 1.0 };
            let decay = if t.r == 1 { -t.b * ax } else { -t.b * ax * ax };
            acc += t.coeff * s * ax.powf(t.a) * decay.exp();
        }
        acc
    }

    /// Scale action φ_u(x) = φ(ux) for u ≠ 0; the family is closed under it.
    pub fn scaled(&self, u: f64) -> Self {
        assert!(u != 0.0);
        let au = u.abs();
        let sgn = if u < 0.0 { -1.0 } else { 1.0 };
        ArchSchwartz {
            terms: self
                .terms
                .iter()
                .map(|t| ArchTerm {
                    coeff: t.coeff * au.powf(t.a) * if t.eps == 1 { sgn } else { 1.0 },
                    a: t.a,
                    eps: t.eps,
                    b: t.b * au.powi(t.r as i32),
                    r: t.r,
                })
                .collect(),
        }
    }

    /// Smallest |x|^a power among terms (controls the x → 0 abscissa).
    pub fn min_power(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.a)
            .fold(f64::INFINITY, f64::min)
    }

    /// Rigorous bound |φ(x)| ≤ Σ |c|·|x|^a e^{−b|x|^r}, evaluated termwise.
    pub fn abs_bound(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.terms
            .iter()
            .map(|t| {
                let decay = if t.r == 1 { -t.b * ax } else { -t.b * ax * ax };
                t.coeff.norm() * ax.powf(t.a) * decay.exp()
            })
            .sum()
    }

    /// Closed-form Fourier image under ψ(x) = e^{2πix·sign}.
    ///
    /// A GL(1)-Schwartz term over the rep sgn^{p} decomposes as
    /// sgn^{p}·|x|^{1/2}·(x^k e^{−πx²}) with k = a − 1/2 a Hermite degree
    /// of matching parity k ≡ eps + p (mod 2); the classical transform sends
    /// x^k e^{−πx²} to (−i·sign)^k times itself for k ∈ {0,1}. Terms with
    /// r = 1 are the matched L-factor data of the self-dual catalog forms and
    /// are fixed by construction. Anything else has no closed image here.
    pub fn fourier_closed(&self, psi_sign: i8, rep_parity: u8) -> Result<Self, ArchError> {
        let mut out = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let is_gaussian = t.r == 2 && (t.b - std::f64::consts::PI).abs() < 1e-12;
            let k = t.a - 0.5;
            if is_gaussian && (k == 0.0 || k == 1.0) {
                let k = k as u32;
                if (k + t.eps as u32 + rep_parity as u32) % 2 != 0 {
                    return Err(ArchError::FourierUnsupported);
                }
                let phase = Complex64::new(0.0, -(psi_sign as f64)).powu(k);
                out.push(ArchTerm {
                    coeff: t.coeff * phase,
                    ..*t
                });
            } else if t.r == 1 {
                out.push(*t);
            } else {
                return Err(ArchError::FourierUnsupported);
            }
        }
        Ok(ArchSchwartz { terms: out })
    }
}

/// Γ-expression for one term of a closed-form Mellin transform:
/// `coeff · rate^{−w} · Γ(w)` at `w = (s+a)/r`, with `rate` the π-normalized
/// decay rate.
#[derive(Clone, Debug)]
pub struct GammaTerm {
    pub coeff: Complex64,
    pub rate: f64,
    pub w: Complex64,
    pub r: u8,
}

impl GammaTerm {
    pub fn value(&self) -> Complex64 {
        self.coeff * (-self.w * self.rate.ln()).exp() * gamma_complex(self.w)
    }
}

/// Result of `mellin_arch`: Γ-closed form with its independently computed
/// quadrature value; the two agree within `agreement`.
#[derive(Clone, Debug)]
pub struct ArchMellinValue {
    pub closed_terms: Vec<GammaTerm>,
    pub value: Complex64,
    pub quadrature: Complex64,
    pub agreement: f64,
}

/// Plain Mellin transform `∫ φ(x)|x|^s sgn(x)^p d^×x` over ℝ^×.
///
/// Parity mismatch gives exact 0; matched parity gives, per term,
/// `(1/r)·b^{−(s+a)/r}·Γ((s+a)/r)` with an adaptive log-trapezoid quadrature
/// as the independent cross-check.
pub fn mellin_arch(phi: &ArchSchwartz, chi: &ArchChar) -> Result<ArchMellinValue, ArchError> {
    // Abscissa: Re(s) + min a > 0.
    let abscissa = -phi.min_power();
    if chi.s.re <= abscissa {
        return Err(ArchError::AbscissaViolation {
            re: chi.s.re,
            abscissa,
        });
    }
    let mut closed_terms = Vec::new();
    let mut value = Complex64::new(0.0, 0.0);
    for t in phi.terms() {
        if (t.eps + chi.parity) % 2 == 1 {
            continue; // odd total parity integrates to zero
        }
        let w = (chi.s + t.a) / (t.r as f64);
        let coeff = t.coeff / (t.r as f64);
        let term = GammaTerm {
            coeff,
            rate: t.b,
            w,
            r: t.r,
        };
        value += term.value();
        closed_terms.push(term);
    }
    // Independent quadrature of ∫_0^∞ (even part of φ·sgn^p)(x)·x^s dx/x.
    let parity = chi.parity;
    let f = |x: f64| -> Complex64 {
        let plus = phi.eval(x);
        let minus = phi.eval(-x);
        let signed = if parity == 1 { plus - minus } else { plus + minus };
        0.5 * signed
    };
    let quadrature = mellin_quadrature(&f, chi.s, 1e-12, 1e-10)?;
    let agreement = (value - quadrature).norm();
    let scale = value.norm().max(quadrature.norm()).max(1e-30);
    if agreement / scale > 1e-8 && agreement > 1e-12 {
        return Err(ArchError::CrossCheckFailed(agreement));
    }
    Ok(ArchMellinValue {
        closed_terms,
        value,
        quadrature,
        agreement,
    })
}

/// Adaptive trapezoid in log coordinates for ∫_0^∞ g(x) x^s dx/x with g
/// smooth and rapidly decaying at both ends of the log line.
pub fn mellin_quadrature(
    g: &dyn Fn(f64) -> Complex64,
    s: Complex64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Complex64, ArchError> {
    // Window: integrand h(t) = g(e^t)·e^{st}; expand until negligible.
    let h = |t: f64| -> Complex64 { g(t.exp()) * (s * t).exp() };
    let mut lo = -1.0f64;
    let mut hi = 1.0f64;
    for _ in 0..200 {
        if h(lo).norm() > 1e-18 {
            lo -= 1.0;
        } else {
            break;
        }
    }
    for _ in 0..200 {
        if h(hi).norm() > 1e-18 {
            hi += 1.0;
        } else {
            break;
        }
    }
    let mut n = 64usize;
    let mut prev = trapezoid(&h, lo, hi, n);
    for _ in 0..14 {
        n *= 2;
        let cur = trapezoid(&h, lo, hi, n);
        let err = (cur - prev).norm();
        if err <= abs_tol + rel_tol * cur.norm() {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(ArchError::QuadratureFailed {
        wanted: abs_tol,
        reached: f64::INFINITY,
    })
}

fn trapezoid(h: &dyn Fn(f64) -> Complex64, lo: f64, hi: f64, n: usize) -> Complex64 {
    let step = (hi - lo) / n as f64;
    let mut acc = 0.5 * (h(lo) + h(hi));
    for k in 1..n {
        acc += h(lo + step * k as f64);
    }
    acc * step
}

/// L(s,χ) = π^{−(s+p)/2} Γ((s+p)/2): the real-place L-factor.
pub fn l_factor_real(s: Complex64, parity: u8) -> Complex64 {
    let w = (s + parity as f64) / 2.0;
    (-w * std::f64::consts::PI.ln()).exp() * gamma_complex(w)
}

/// γ_ℝ(s, χ, ψ^{±}) = ε·L(1−s, χ^{-1})/L(s, χ) with ε = (∓i)^p for
/// ψ(x) = e^{±2πix}.
pub fn gamma_arch(chi: &ArchChar, psi_sign: i8) -> Result<Complex64, ArchError> {
    let p = chi.parity;
    let num_arg = (1.0 - chi.s + p as f64) / 2.0;
    let den_arg = (chi.s + p as f64) / 2.0;
    if is_near_gamma_pole(num_arg) || is_near_gamma_pole(den_arg) {
        return Err(ArchError::PoleOnContour);
    }
    let eps = if p == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(0.0, -(psi_sign as f64))
    };
    Ok(eps * l_factor_real(1.0 - chi.s, p) / l_factor_real(chi.s, p))
}

fn is_near_gamma_pole(w: Complex64) -> bool {
    w.im.abs() < 1e-9 && w.re <= 1e-9 && (w.re - w.re.round()).abs() < 1e-9
}

/// Numeric check that P(s)·L(s) stays bounded on a vertical strip with pole
/// neighborhoods removed; report-only.
#[derive(Clone, Debug)]
pub struct StirlingReport {
    pub max_abs: f64,
    pub argmax: Complex64,
    pub samples: usize,
    pub excluded_near_poles: usize,
    pub bounded: bool,
}

/// Sample |P(s)·L(s,χ_parity)| over the strip a ≤ Re(s) ≤ b, |Im(s)| ≤ im_max.
/// Points within `pole_radius` of a Γ-pole of L are excluded and counted.
pub fn stirling_bound_check(
    poly: &dyn Fn(Complex64) -> Complex64,
    parity: u8,
    re_range: (f64, f64),
    im_max: f64,
    pole_radius: f64,
) -> StirlingReport {
    let (a, b) = re_range;
    assert!(a <= b && im_max > 0.0);
    let re_steps = 24usize;
    let im_steps = 400usize;
    let mut max_abs = 0.0f64;
    let mut argmax = Complex64::new(a, 0.0);
    let mut samples = 0usize;
    let mut excluded = 0usize;
    for i in 0..=re_steps {
        let re = a + (b - a) * i as f64 / re_steps as f64;
        for j in 0..=im_steps {
            let im = -im_max + 2.0 * im_max * j as f64 / im_steps as f64;
            let s = Complex64::new(re, im);
            let w = (s + parity as f64) / 2.0;
            // Pole lattice of Γ((s+p)/2): w near nonpositive integers.
            if w.im.abs() < pole_radius && w.re < 0.5 && (w.re - w.re.round()).abs() < pole_radius
            {
                excluded += 1;
                continue;
            }
            samples += 1;
            let v = (poly(s) * l_factor_real(s, parity)).norm();
            if v > max_abs {
                max_abs = v;
                argmax = s;
            }
        }
    }
    StirlingReport {
        max_abs,
        argmax,
        samples,
        excluded_near_poles: excluded,
        bounded: max_abs.is_finite(),
    }
}

/// Per-side decay exponents measured on a log grid.
///
/// Each side reports the magnitude of the boundary log-log slope of |φ|:
/// the empirical κ in |φ(x)| ≍ c·min(|x|,|x|^{-1})^κ toward that end of the
/// grid, clamped at `kappa_cap`. Near 0 this recovers the smallest |x|-power
/// of the family; at ∞ exponential terms saturate the cap.
#[derive(Clone, Copy, Debug)]
pub struct DecayFit {
    pub kappa_at_zero: f64,
    pub kappa_at_infinity: f64,
}

impl DecayFit {
    pub fn kappa_measured(&self) -> f64 {
        self.kappa_at_zero.min(self.kappa_at_infinity)
    }
}

pub fn decay_fit(phi: &ArchSchwartz, log_half_width: f64, kappa_cap: f64) -> DecayFit {
    let eval_abs = |x: f64| phi.eval(x).norm().max(phi.eval(-x).norm());
    let fit_side = |near_zero: bool| -> f64 {
        // Log-log slope over the outermost decade of the grid.
        let t1 = log_half_width;
        let t0 = log_half_width - 1.0;
        let ln_phi = |t: f64| -> f64 {
            let x = if near_zero { (-t).exp() } else { t.exp() };
            eval_abs(x).max(1e-300).ln()
        };
        // |φ| ~ min(|x|,1/|x|)^κ means ln|φ| falls at rate κ per unit of
        // outward log-distance on either side.
        (ln_phi(t0) - ln_phi(t1)).clamp(0.0, kappa_cap)
    };
    DecayFit {
        kappa_at_zero: fit_side(true),
        kappa_at_infinity: fit_side(false),
    }
}

/// Lanczos approximation of Γ(z) on ℂ (g = 7, n = 9 coefficients), with the
/// reflection formula for Re(z) < 0.5.
pub fn gamma_complex(z: Complex64) -> Complex64 {
    const G: f64 = 7.0;
    const P: [f64; 9] = [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    let pi = std::f64::consts::PI;
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π/sin(πz)
        return pi / ((pi * z).sin() * gamma_complex(1.0 - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(P[0], 0.0);
    for (i, &c) in P.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    (2.0 * pi).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// log Γ(z) without overflow, used for |Γ| magnitudes in strip scans.
pub fn ln_gamma_complex(z: Complex64) -> Complex64 {
    gamma_complex(z).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn gamma_special_values() {
        assert!((gamma_complex(Complex64::new(1.0, 0.0)).re - 1.0).abs() < 1e-12);
        assert!((gamma_complex(Complex64::new(0.5, 0.0)).re - PI.sqrt()).abs() < 1e-12);
        assert!((gamma_complex(Complex64::new(5.0, 0.0)).re - 24.0).abs() < 1e-10);
        // Γ(1+i)·conj = |Γ(1+i)|² = π/sinh(π)
        let g = gamma_complex(Complex64::new(1.0, 1.0));
        assert!((g.norm_sqr() - PI / PI.sinh()).abs() < 1e-12);
    }

    #[test]
    fn mellin_of_plain_gaussian_at_two() {
        // ∫ e^{−πx²} |x|² d^×x = (1/2)π^{−1}Γ(1) = 1/(2π)
        let phi = ArchSchwartz::new_with_positive_abscissa(vec![ArchTerm {
            coeff: Complex64::new(1.0, 0.0),
            a: 0.0,
            eps: 0,
            b: PI,
            r: 2,
        }])
        .unwrap();
        let out = mellin_arch(&phi, &ArchChar::new(Complex64::new(2.0, 0.0), 0)).unwrap();
        assert!((out.value.re - 1.0 / (2.0 * PI)).abs() < 1e-12);
        assert!(out.agreement < 1e-9);
    }

    #[test]
    fn parity_mismatch_is_exact_zero() {
        let odd = ArchSchwartz::gaussian_odd();
        let out = mellin_arch(&odd, &ArchChar::new(Complex64::new(2.0, 0.0), 0)).unwrap();
        assert_eq!(out.value, Complex64::new(0.0, 0.0));
        assert!(out.quadrature.norm() < 1e-10);
    }

    #[test]
    fn exp_monomial_matches_gamma_integral() {
        // ∫ |x|^6 e^{−2π|x|} |x|^{s−1/2} d^×x = (2π)^{−(s+11/2)} Γ(s+11/2)
        let phi = ArchSchwartz::exp_monomial(6.0);
        for s in [Complex64::new(1.0, 0.0), Complex64::new(0.5, 3.0)] {
            let chi = ArchChar::new(s - 0.5, 0);
            let out = mellin_arch(&phi, &chi).unwrap();
            let w = s + 5.5;
            let want = (-w * (2.0 * PI).ln()).exp() * gamma_complex(w);
            assert!((out.value - want).norm() < 1e-9 * want.norm().max(1.0));
        }
    }

    #[test]
    fn abscissa_violation_detected() {
        let phi = ArchSchwartz::gaussian(); // min power 1/2
        let err = mellin_arch(&phi, &ArchChar::new(Complex64::new(-0.5, 0.0), 0)).unwrap_err();
        assert!(matches!(err, ArchError::AbscissaViolation { .. }));
    }

    #[test]
    fn gamma_arch_center_and_unitarity() {
        let chi = ArchChar::new(Complex64::new(0.5, 0.0), 0);
        let g = gamma_arch(&chi, 1).unwrap();
        assert!((g - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        for t in [1.0, 5.0, 10.0] {
            for parity in [0u8, 1] {
                let chi = ArchChar::new(Complex64::new(0.5, t), parity);
                let g = gamma_arch(&chi, 1).unwrap();
                assert!(
                    (g.norm() - 1.0).abs() < 1e-9,
                    "γ not unitary at 1/2+{t}i parity {parity}"
                );
            }
        }
    }

    #[test]
    fn gamma_arch_reflection_product() {
        // γ(s,χ,ψ)·γ(1−s,χ^{-1},ψ^{-1}) = 1 (the local involution).
        for parity in [0u8, 1] {
            for s in [
                Complex64::new(0.3, 0.7),
                Complex64::new(0.9, -2.0),
                Complex64::new(0.5, 4.0),
            ] {
                let g1 = gamma_arch(&ArchChar::new(s, parity), 1).unwrap();
                let g2 = gamma_arch(&ArchChar::new(1.0 - s, parity), -1).unwrap();
                assert!(((g1 * g2) - Complex64::new(1.0, 0.0)).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn gamma_arch_pole_detection() {
        let chi = ArchChar::new(Complex64::new(0.0, 0.0), 0);
        assert_eq!(gamma_arch(&chi, 1).unwrap_err(), ArchError::PoleOnContour);
    }

    #[test]
    fn gaussian_is_fourier_self_dual() {
        let g = ArchSchwartz::gaussian();
        let f = g.fourier_closed(1, 0).unwrap();
        for x in [0.3, 1.0, 2.5] {
            assert!((g.eval(x) - f.eval(x)).norm() < 1e-15);
        }
        // sign Gaussian over an odd character: fixed as well
        let odd = ArchSchwartz::gaussian_odd();
        let f = odd.fourier_closed(1, 1).unwrap();
        for x in [0.4, 1.7] {
            assert!((f.eval(x) - odd.eval(x)).norm() < 1e-15);
        }
        // x^{3/2}-type even term over an odd character picks up the −i phase
        let hermite = ArchSchwartz::new(vec![ArchTerm {
            coeff: Complex64::new(1.0, 0.0),
            a: 1.5,
            eps: 0,
            b: PI,
            r: 2,
        }])
        .unwrap();
        let f = hermite.fourier_closed(1, 1).unwrap();
        for x in [0.4, 1.7] {
            let want = Complex64::new(0.0, -1.0) * hermite.eval(x);
            assert!((f.eval(x) - want).norm() < 1e-15);
        }
        // parity mismatch between term and rep is rejected
        assert!(hermite.fourier_closed(1, 0).is_err());
    }

    #[test]
    fn stirling_strip_is_bounded() {
        let id = |_: Complex64| Complex64::new(1.0, 0.0);
        let rep = stirling_bound_check(&id, 0, (1.0, 2.0), 50.0, 0.05);
        assert!(rep.bounded);
        // Stirling decay: the maximum sits on the real axis.
        assert!(rep.argmax.im.abs() < 0.5, "max at {:?}", rep.argmax);

        let cubic = |s: Complex64| s * s * s;
        let rep = stirling_bound_check(&cubic, 0, (1.0, 2.0), 50.0, 0.05);
        assert!(rep.bounded && rep.max_abs.is_finite());

        // Strip containing s = 0 flags the pole neighborhood.
        let rep = stirling_bound_check(&id, 0, (-0.5, 0.5), 5.0, 0.05);
        assert!(rep.excluded_near_poles > 0);
    }

    #[test]
    fn decay_fit_measures_both_sides() {
        let g = ArchSchwartz::new_with_positive_abscissa(vec![ArchTerm {
            coeff: Complex64::new(1.0, 0.0),
            a: 0.0,
            eps: 0,
            b: PI,
            r: 2,
        }])
        .unwrap();
        let fit = decay_fit(&g, 3.0, 12.0);
        assert!(fit.kappa_at_infinity >= 5.0, "got {fit:?}");
        assert!(fit.kappa_at_zero < 0.5, "flat near zero: {fit:?}");

        // |x|^6 e^{−2π|x|}: the monomial factor governs the x → 0 side.
        let mono = ArchSchwartz::exp_monomial(6.0);
        let fit = decay_fit(&mono, 8.0, 12.0);
        assert!(fit.kappa_at_zero >= 5.9, "got {fit:?}");
    }

    #[test]
    fn scaling_identity_for_mellin() {
        // M(φ(t·))(χ_s) = |t|^{−s}·M(φ)(χ_s)
        let phi = ArchSchwartz::gaussian();
        let s = Complex64::new(1.2, 0.8);
        let chi = ArchChar::new(s, 0);
        let t = 1.7f64;
        let lhs = mellin_arch(&phi.scaled(t), &chi).unwrap().value;
        let rhs = (-s * t.ln()).exp() * mellin_arch(&phi, &chi).unwrap().value;
        assert!((lhs - rhs).norm() < 1e-10 * rhs.norm());
    }

    #[test]
    fn constant_term_rejected_without_flag() {
        let err = ArchSchwartz::new(vec![ArchTerm {
            coeff: Complex64::new(1.0, 0.0),
            a: 0.0,
            eps: 0,
            b: 1.0,
            r: 2,
        }])
        .unwrap_err();
        assert!(matches!(err, ArchError::NonPositivePower(_)));
    }
}
