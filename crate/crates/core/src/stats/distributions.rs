//! Gamma-family special functions and the two quantiles the tests need.
//!
//! The regularized incomplete gamma uses the power series below `a + 1` and a
//! Lentz continued fraction above it.

use std::f64::consts::{LN_2, PI};

use super::StatsError;

const EPS: f64 = 1e-15;
const MAX_ITER: usize = 1000;
const TINY: f64 = 1e-300;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection.
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Returns `(P(a, x), Q(a, x))`.
fn gamma_pq(a: f64, x: f64) -> (f64, f64) {
    debug_assert!(a > 0.0 && x >= 0.0);
    if x == 0.0 {
        return (0.0, 1.0);
    }
    let log_prefactor = a * x.ln() - x - ln_gamma(a);
    if x < a + 1.0 {
        let mut term = 1.0 / a;
        let mut sum = term;
        let mut ap = a;
        for _ in 0..MAX_ITER {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if term.abs() < sum.abs() * EPS {
                break;
            }
        }
        let p = (sum.ln() + log_prefactor).exp().min(1.0);
        (p, 1.0 - p)
    } else {
        let mut b = x + 1.0 - a;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..MAX_ITER {
            let an = -(i as f64) * (i as f64 - a);
            b += 2.0;
            d = an * d + b;
            if d.abs() < TINY {
                d = TINY;
            }
            c = b + an / c;
            if c.abs() < TINY {
                c = TINY;
            }
            d = 1.0 / d;
            let delta = d * c;
            h *= delta;
            if (delta - 1.0).abs() < EPS {
                break;
            }
        }
        let q = (h.ln() + log_prefactor).exp().min(1.0);
        (1.0 - q, q)
    }
}

/// Regularized lower incomplete gamma `P(a, x)`.
pub fn gamma_p(a: f64, x: f64) -> f64 {
    gamma_pq(a, x).0
}

/// Regularized upper incomplete gamma `Q(a, x) = 1 - P(a, x)`.
pub fn gamma_q(a: f64, x: f64) -> f64 {
    gamma_pq(a, x).1
}

pub fn chi_square_cdf(df: u32, x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        gamma_p(df as f64 / 2.0, x / 2.0)
    }
}

/// Upper tail `1 - CDF`.
pub fn chi_square_sf(df: u32, x: f64) -> f64 {
    if x <= 0.0 {
        1.0
    } else {
        gamma_q(df as f64 / 2.0, x / 2.0)
    }
}

pub fn chi_square_pdf(df: u32, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let k = df as f64 / 2.0;
    ((k - 1.0) * x.ln() - x / 2.0 - k * LN_2 - ln_gamma(k)).exp()
}

/// The `x` whose upper-tail probability under chi-square(`df`) is `alpha`.
///
/// Brackets by doubling, bisects to a relative width of 1e-6, then polishes
/// with Newton steps until they fall below 1e-12 relative.
pub fn chi_square_critical(df: u32, alpha: f64) -> Result<f64, StatsError> {
    if df == 0 {
        return Err(StatsError::InvalidDegreesOfFreedom);
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(StatsError::InvalidAlpha(alpha));
    }
    let mut lo = 0.0;
    let mut hi = df as f64 + 1.0;
    while chi_square_sf(df, hi) > alpha {
        lo = hi;
        hi *= 2.0;
    }
    while hi - lo > 1e-6 * hi {
        let mid = 0.5 * (lo + hi);
        if chi_square_sf(df, mid) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..50 {
        let pdf = chi_square_pdf(df, x);
        if pdf <= 0.0 {
            break;
        }
        let step = (chi_square_sf(df, x) - alpha) / pdf;
        let next = (x + step).clamp(lo, hi);
        let moved = (next - x).abs();
        x = next;
        if moved <= 1e-12 * x {
            break;
        }
    }
    Ok(x)
}

/// Complementary error function via `Q(1/2, z^2)`.
pub fn erfc(z: f64) -> f64 {
    let q = gamma_q(0.5, z * z);
    if z >= 0.0 {
        q
    } else {
        2.0 - q
    }
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// Inverse standard normal CDF.
///
/// Acklam's rational approximation (relative error about 1.15e-9) followed by
/// one Halley step against the exact CDF.
pub fn normal_quantile(p: f64) -> Result<f64, StatsError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(StatsError::InvalidAlpha(p));
    }
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_69e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.024_25;

    let tail = |q: f64| {
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    let mut x = if p < P_LOW {
        tail((-2.0 * p.ln()).sqrt())
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        -tail((-2.0 * (1.0 - p).ln()).sqrt())
    };

    let e = normal_cdf(x) - p;
    let u = e * (2.0 * PI).sqrt() * (x * x / 2.0).exp();
    x -= u / (1.0 + x * u / 2.0);
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn ln_gamma_integers() {
        let mut fact = 1.0f64;
        for k in 1..20u32 {
            assert!(close(ln_gamma(k as f64), fact.ln(), 1e-13) || fact == 1.0);
            fact *= k as f64;
        }
        assert!(close(ln_gamma(0.5), PI.sqrt().ln(), 1e-14));
    }

    #[test]
    fn gamma_p_exponential_case() {
        for x in [0.1, 0.9, 1.5, 3.0, 10.0] {
            assert!(close(gamma_p(1.0, x), 1.0 - (-x).exp(), 1e-13));
        }
        assert_eq!(gamma_pq(3.0, 0.0), (0.0, 1.0));
    }

    #[test]
    fn df2_survival_is_exponential() {
        // Survival for two degrees of freedom is e^{-x/2}.
        let x = chi_square_critical(2, (-1.0f64).exp()).unwrap();
        assert!((x - 2.0).abs() < 1e-10, "{x}");
    }

    #[test]
    fn df15_alpha_001() {
        let x = chi_square_critical(15, 0.01).unwrap();
        assert!((x - 30.578).abs() < 0.005, "{x}");
        assert!(close(chi_square_sf(15, x), 0.01, 1e-10));
    }

    #[test]
    fn df1_alpha_005() {
        let x = chi_square_critical(1, 0.05).unwrap();
        assert!((x - 3.841).abs() < 0.005, "{x}");
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(
            chi_square_critical(0, 0.05),
            Err(StatsError::InvalidDegreesOfFreedom)
        );
        for a in [0.0, 1.0, -0.5, f64::NAN] {
            assert!(matches!(
                chi_square_critical(3, a),
                Err(StatsError::InvalidAlpha(_))
            ));
        }
        assert!(normal_quantile(1.0).is_err());
    }

    #[test]
    fn normal_quantile_values() {
        let z = normal_quantile(0.95).unwrap();
        assert!((z - 1.644_853_626_951_472_2).abs() < 1e-12, "{z}");
        assert_eq!(format!("{z:.2}"), "1.64");
        assert!(normal_quantile(0.5).unwrap().abs() < 1e-15);
        let lo = normal_quantile(0.001).unwrap();
        assert!((lo + 3.090_232_306_167_813_5).abs() < 1e-10, "{lo}");
    }

    #[test]
    fn pdf_integrates_to_cdf() {
        // Trapezoid check on df = 5 over [0, 4].
        let steps = 20_000;
        let h = 4.0 / steps as f64;
        let mut area = 0.0;
        for i in 0..steps {
            let a = i as f64 * h;
            area += 0.5 * h * (chi_square_pdf(5, a) + chi_square_pdf(5, a + h));
        }
        assert!((area - chi_square_cdf(5, 4.0)).abs() < 1e-7);
    }
}
