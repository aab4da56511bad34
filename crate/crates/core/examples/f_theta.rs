//! The closed form `F_theta` of the path recurrence `x_n = 1 - alpha'/x_(n-1)`.

use fspectra::luman::{check_recurrence, inequality_oracles, recurrence_error, FThetaContext};
use fspectra::Result;

pub fn run_example() -> Result<()> {
    for ap in [0.05, 0.1, 0.2, 0.25] {
        let ctx = FThetaContext::from_alpha_prime(ap)?;
        let err = recurrence_error(&ctx, 3, 4, -8..=8);
        println!(
            "alpha'={ap:<5} theta={:.6} F(0)={:.3} F(2)={:.6} recurrence ok={} (max err {err:.1e})",
            ctx.theta,
            ctx.f_theta(0.0),
            ctx.f_theta(2.0),
            check_recurrence(&ctx, 3, 4, -8..=8)
        );
    }
    let ab: Vec<f64> = (0..=10).map(f64::from).collect();
    let xs: Vec<f64> = (0..=14).map(|i| 3.0 + 0.5 * f64::from(i)).collect();
    for theta in [0.1, 0.66, 2.0] {
        let r = inequality_oracles(theta, &ab, &xs);
        println!(
            "theta={theta:<4} F(a)+F(-b)-F(a-b)-F(0) >= {:.3e} over {} pairs; 4F(2x)-3F(x) >= {:.3e} over {} points",
            r.convexity_margin, r.convexity_cases, r.doubling_margin, r.doubling_cases
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
