use super::distributions::normal_quantile;
use super::StatsError;

/// `2 * asin(sqrt(p))`, in radians.
pub fn angular_transform(p: f64) -> f64 {
    2.0 * p.sqrt().asin()
}

#[derive(Debug, Clone, PartialEq)]
pub struct FisherResult {
    pub p1: f64,
    pub n1: u64,
    pub p2: f64,
    pub n2: u64,
    pub phi1: f64,
    pub phi2: f64,
    pub phi_emp: f64,
    pub alpha: f64,
    /// One-sided standard normal quantile at `1 - alpha`.
    pub phi_crit: f64,
    pub significant: bool,
}

/// Angular-transform comparison of two sample proportions.
pub fn fisher_angular_test(
    p1: f64,
    n1: u64,
    p2: f64,
    n2: u64,
    alpha: f64,
) -> Result<FisherResult, StatsError> {
    for p in [p1, p2] {
        if !(0.0..=1.0).contains(&p) {
            return Err(StatsError::InvalidProportion(p));
        }
    }
    if n1 == 0 || n2 == 0 {
        return Err(StatsError::InvalidSampleSize);
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(StatsError::InvalidAlpha(alpha));
    }
    let phi1 = angular_transform(p1);
    let phi2 = angular_transform(p2);
    let (a, b) = (n1 as f64, n2 as f64);
    let phi_emp = (phi1 - phi2).abs() * (a * b / (a + b)).sqrt();
    let phi_crit = normal_quantile(1.0 - alpha)?;
    Ok(FisherResult {
        p1,
        n1,
        p2,
        n2,
        phi1,
        phi2,
        phi_emp,
        alpha,
        phi_crit,
        significant: phi_emp > phi_crit,
    })
}
