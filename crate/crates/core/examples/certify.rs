//! Weighted incidence certificates.
//!
//! The principal incidence matrix certifies `rho_f` exactly. Assignments built from
//! `F_theta` along internal paths certify that Θ(s,s,t) and ∞(s,s,t) share a spectral
//! radius, and bound the radius of other graphs from one side.

use fspectra::luman::{
    alpha_of, assemble_certificate, classify_normality, principal_incidence, similar_splits,
    FThetaContext, NORMALITY_TOL,
};
use fspectra::spectral::rho_f;
use fspectra::weights::NamedWeight;
use fspectra::{FamilySpec, Result, WeightSpec};

pub fn run_example() -> Result<()> {
    let f = WeightSpec::Named(NamedWeight::Sombor);

    let g = FamilySpec::Theta(2, 3, 4).build()?;
    let b = principal_incidence(&g, &f)?;
    let report = classify_normality(&g, &f, &b, alpha_of(&g, &f)?, NORMALITY_TOL)?;
    println!(
        "theta:2,3,4 principal incidence: {} consistent={} rho={:.6}",
        report.classification,
        report.consistent,
        rho_f(&g, &f)?
    );

    // ∞(s,s,t) is exactly normal at the alpha of Θ(s,s,t)
    for (s, t) in [(3, 2), (4, 3), (5, 5)] {
        let theta = FamilySpec::Theta(s, s, t).build()?;
        let infty = FamilySpec::Infty(s, s, t).build()?;
        let ctx = FThetaContext::new(&f, alpha_of(&theta, &f)?)?;
        let cert =
            assemble_certificate(&infty, &ctx, &similar_splits(&infty), false, NORMALITY_TOL)?;
        println!(
            "infty:{s},{s},{t} at alpha(theta:{s},{s},{t}): {} consistent={} bound={:.6} rho={:.6}",
            cert.report.classification,
            cert.report.consistent,
            ctx.alpha().powf(-0.5),
            rho_f(&infty, &f)?
        );
    }

    // an unbalanced Θ certifies an upper bound on the balanced one of the same size
    let g = FamilySpec::Theta(2, 2, 5).build()?;
    let target = FamilySpec::Theta(3, 3, 3).build()?;
    let ctx = FThetaContext::new(&f, alpha_of(&g, &f)?)?;
    let cert = assemble_certificate(
        &target,
        &ctx,
        &similar_splits(&target),
        false,
        NORMALITY_TOL,
    )?;
    println!(
        "theta:3,3,3 at alpha(theta:2,2,5): {} so rho <= {:.6} (actual {:.6})",
        cert.report.classification,
        cert.report.upper_bound().unwrap_or(f64::NAN),
        rho_f(&target, &f)?
    );
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
