/// `−(1/β) log Σ exp(−β θ)`, shifted by the minimum for stability.
///
/// Bounds the true minimum from below: `soft_min ≤ min ≤ soft_min + ln(T)/β`
/// for `T` values.
pub fn soft_min(values: &[f64], beta: f64) -> f64 {
    let m = values.iter().copied().fold(f64::INFINITY, f64::min);
    if !m.is_finite() {
        return m;
    }
    let sum: f64 = values.iter().map(|v| (-beta * (v - m)).exp()).sum();
    m - sum.ln() / beta
}
