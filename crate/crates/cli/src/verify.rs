//! The one-shot verification suite behind `heunlab verify`.
//!
//! Runs every exact identity up to the requested ℓ, the tangency
//! multipliers, sampled polynomial solutions with system residuals, and
//! the monodromy/quadrature checks; prints one report line per check and
//! returns whether everything passed.

use anyhow::Result;
use heunlab_core::josephson::{self, TorusParams};
use heunlab_core::monodromy::{self, LinearSystem, ModelKind};
use heunlab_core::painleve;
use heunlab_core::polysol::{self, Surface, MEMBERSHIP_TOL};
use heunlab_core::ratpoly::{rat, rat_int, MPoly};
use heunlab_core::spectral::{self, IdentityReport, Sign, SurfaceSpec};
use heunlab_core::Complex64;
use rayon::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn report_from(name: &str, ell: u32, ok: bool, detail: String) -> IdentityReport {
    if ok {
        let mut r = IdentityReport::pass(name, ell, None);
        r.detail = Some(detail);
        r
    } else {
        IdentityReport::fail(name, ell, detail)
    }
}

/// The (0, 0, s) value of the surface polynomial must be ε·(s/2)^ℓ/2 with
/// ε a recorded sign.
fn s_axis_report(ell: u32, sign: Sign, p: &MPoly) -> Result<IdentityReport> {
    let name = format!("s-axis-value[{sign}]");
    let restricted = p.subst(
        &[
            ("chi", MPoly::zero(&["s"])),
            ("a", MPoly::zero(&["s"])),
            ("s", MPoly::var(&["s"], "s")?),
        ],
        &["s"],
    )?;
    let mut expect = MPoly::from_terms(&["s"], vec![(vec![ell], rat(1, 2))])?;
    for _ in 0..ell {
        expect = expect.scale(&rat(1, 2));
    }
    let rep = if restricted == expect {
        IdentityReport::pass(&name, ell, Some(rat_int(1)))
    } else if restricted == expect.neg() {
        IdentityReport::pass(&name, ell, Some(rat_int(-1)))
    } else {
        IdentityReport::fail(&name, ell, format!("got {restricted}"))
    };
    Ok(rep)
}

fn exact_identities_for_ell(ell: u32) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    // Construction gates: the anti-diagonal relation and the parity/degree
    // law are enforced at build time.
    out.push(report_from(
        "gcal-relation",
        ell,
        spectral::build_gcal(ell).is_ok(),
        "Gcal^2 = mu^2 Id - H".into(),
    ));
    out.push(report_from(
        "q-parity-degree",
        ell,
        spectral::build_q(ell).is_ok(),
        "even mu-powers, (u,v)-degree = ell".into(),
    ));
    out.push(spectral::verify_factorization(ell)?);
    let pp = spectral::build_p(ell, Sign::Plus)?;
    let pm = spectral::build_p(ell, Sign::Minus)?;
    out.push(report_from(
        "surface-structure",
        ell,
        true,
        format!("degree {}, leading chi^{}*a^{}", 2 * ell + 1, ell + 1, ell),
    ));
    for (sign, p) in [(Sign::Plus, &pp), (Sign::Minus, &pm)] {
        let q = spectral::build_qpm(ell, sign)?;
        out.push(spectral::restriction_report(
            &format!("restriction[{sign}]"),
            ell,
            p,
            &q,
        )?);
        out.push(s_axis_report(ell, sign, p)?);
    }
    out.push(spectral::verify_involution(ell)?);
    if ell <= 8 {
        for (sign, p) in [(Sign::Plus, &pp), (Sign::Minus, &pm)] {
            let rep = match painleve::multiplier_of(p, ell) {
                Ok(h) => {
                    let mut r = IdentityReport::pass(&format!("tangency[{sign}]"), ell, None);
                    r.detail = Some(format!("h = {h}"));
                    r
                }
                Err(e) => IdentityReport::fail(&format!("tangency[{sign}]"), ell, e.to_string()),
            };
            out.push(rep);
        }
    }
    Ok(out)
}

fn scaled_form_reports() -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        let p1 = spectral::build_p(1, sign)?.scale(&rat_int(4));
        let d1 = spectral::p1_scaled(sign);
        let ok = p1 == d1 || p1 == d1.neg();
        out.push(report_from(
            &format!("l1-scaled-form[{sign}]"),
            1,
            ok,
            "4P vs (a±s)(1-4chi^2)+4chi".into(),
        ));
        let p2 = spectral::build_p(2, sign)?.scale(&rat_int(8));
        let d2 = spectral::p2_scaled(sign);
        let ok = p2 == d2 || p2 == d2.neg();
        out.push(report_from(
            &format!("l2-scaled-form[{sign}]"),
            2,
            ok,
            "8P vs (2chi±1)^2(2chi∓1)(a^2-s^2)-2a(2chi±1)(6chi∓1)+16chi".into(),
        ));
    }
    for sign in [Sign::Plus, Sign::Minus] {
        out.push(spectral::verify_l2_discriminant(sign)?);
        // Branch points at s=1: (±1 ± i)/2 depending on the sign branch.
        let pts = spectral::l2_branch_points(sign, c(1.0, 0.0))?;
        let sgn = match sign {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        };
        let expect = [c(sgn * 0.5, -0.5), c(sgn * 0.5, 0.5)];
        let ok = pts.len() == 2
            && pts
                .iter()
                .zip(expect.iter())
                .all(|(p, e)| (p - e).norm() < 1e-10);
        out.push(report_from(
            &format!("l2-branch-points[{sign}]"),
            2,
            ok,
            format!("{} roots of odd multiplicity", pts.len()),
        ));
    }
    Ok(out)
}

fn multiplier_reference_reports() -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        let h1 = painleve::multiplier(SurfaceSpec::new(1, sign)?)?;
        out.push(report_from(
            &format!("h1-closed-form[{sign}]"),
            1,
            h1 == painleve::h1_reference(sign),
            "1 - 2chi(a±s)".into(),
        ));
        let h2 = painleve::multiplier(SurfaceSpec::new(2, sign)?)?;
        out.push(report_from(
            &format!("h2-closed-form[{sign}]"),
            2,
            h2 == painleve::h2_reference(sign),
            "2 - a(2chi∓1)".into(),
        ));
    }
    Ok(out)
}

fn genus_report() -> IdentityReport {
    let table = [(1, 0), (2, 0), (3, 0), (4, 1), (5, 2), (6, 4)];
    let ok = table.iter().all(|&(l, g)| spectral::genus(l) == g);
    report_from("genus-table", 6, ok, "{1:0, 2:0, 3:0, 4:1, 5:2, 6:4}".into())
}

fn solution_reports(ell_max: u32) -> Result<Vec<IdentityReport>> {
    let slices = [(c(0.4, 0.2), c(1.3, -0.4)), (c(0.25, 0.15), c(1.0, 0.3))];
    let samples = polysol::unit_circle_samples(8);
    let cases: Vec<(u32, Sign)> = (1..=ell_max.min(6))
        .flat_map(|ell| [(ell, Sign::Plus), (ell, Sign::Minus)])
        .collect();
    let reports: Vec<Result<IdentityReport>> = cases
        .par_iter()
        .map(|&(ell, sign)| {
            let surface = Surface::new(SurfaceSpec::new(ell, sign)?)?;
            let mut n_points = 0usize;
            let mut worst = 0.0f64;
            let mut degree_ok = true;
            for &(chi, s) in &slices {
                for point in surface.sample(chi, s, MEMBERSHIP_TOL)? {
                    let sol = polysol::solve_polynomial_solution(&surface, &point, MEMBERSHIP_TOL)?;
                    degree_ok &= sol.degree() == ell as usize;
                    worst = worst.max(polysol::verify_solution(&point, &sol, &samples)?);
                    n_points += 1;
                }
            }
            let ok = n_points > 0 && degree_ok && worst < 1e-9;
            Ok(report_from(
                &format!("polynomial-solutions[{sign}]"),
                ell,
                ok,
                format!("{n_points} points, max residual {worst:.2e}"),
            ))
        })
        .collect();
    reports.into_iter().collect()
}

fn monodromy_reports() -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    // Determinant law at non-integer ell = 0.3.
    let ell = c(0.3, 0.0);
    let expect = (c(0.0, 2.0 * std::f64::consts::PI) * ell).exp();
    let draws = [
        (c(0.2, 0.1), c(0.7, -0.3), c(1.1, 0.2)),
        (c(-0.4, 0.2), c(0.3, 0.5), c(0.8, -0.5)),
        (c(0.1, -0.6), c(-0.8, 0.1), c(1.4, 0.3)),
    ];
    let mut worst = 0.0f64;
    for (chi, a, s) in draws {
        let sys = LinearSystem::Extended { ell, chi, a, s };
        let res = monodromy::monodromy_matrix(&sys, 1.0, 1e-12)?;
        worst = worst.max((res.det - expect).norm());
    }
    out.push(report_from(
        "monodromy-det-law",
        0,
        worst < 1e-8,
        format!("max |det M - e^(2*pi*i*0.3)| = {worst:.2e}"),
    ));
    // Unipotent trace at verified surface points.
    let mut worst = 0.0f64;
    let mut n = 0usize;
    for (ell, sign) in [(1, Sign::Plus), (2, Sign::Minus)] {
        let surface = Surface::new(SurfaceSpec::new(ell, sign)?)?;
        for point in surface.sample(c(0.3, 0.1), c(1.0, 0.2), MEMBERSHIP_TOL)? {
            let res = monodromy::monodromy_matrix(&point.system(), 1.0, 1e-12)?;
            worst = worst.max((res.trace - c(2.0, 0.0)).norm());
            n += 1;
        }
    }
    out.push(report_from(
        "monodromy-surface-trace",
        2,
        n > 0 && worst < 1e-6,
        format!("{n} points, max |tr M - 2| = {worst:.2e}"),
    ));
    // Auxiliary system: unipotent Jordan cell and the multiplier product.
    let (c0c1, res) = monodromy::stokes_product_check(1e-12)?;
    let ok = (res.trace - c(2.0, 0.0)).norm() < 1e-6
        && res.unipotence_gap > 0.1
        && (c0c1 - c(-4.0, 0.0)).norm() < 1e-5;
    out.push(report_from(
        "stokes-product",
        0,
        ok,
        format!("tr = {}, gap = {:.3}, c0c1 = {}", res.trace, res.unipotence_gap, c0c1),
    ));
    // Residue quadrature against the closed form.
    let mut worst = 0.0f64;
    for ell in 1..=4 {
        let err = (monodromy::residue_quadrature(ell, c(1.0, 0.0), 256)
            - monodromy::residue_closed_form(ell, c(1.0, 0.0)))
        .norm();
        worst = worst.max(err);
    }
    out.push(report_from(
        "residue-quadrature",
        4,
        worst < 1e-10,
        format!("max error {worst:.2e} at 256 nodes"),
    ));
    // Model-system residuals.
    let samples = [c(1.0, 0.0), c(1.2, 0.3), c(0.9, -0.2)];
    let r0 = monodromy::model_solution_residual(ModelKind::Model0, 1, c(1.0, 0.0), c(1.0, 0.0), &samples)?;
    let ri = monodromy::model_solution_residual(ModelKind::ModelInf, 1, c(1.0, 0.0), c(1.0, 0.0), &samples)?;
    out.push(report_from(
        "model-solutions",
        1,
        r0 < 1e-8 && ri < 1e-8,
        format!("residuals {r0:.2e}, {ri:.2e}"),
    ));
    Ok(out)
}

fn rotation_report() -> Result<IdentityReport> {
    // Quick growth-point shadow: rho(√2, 0) = 1 at ω = 1.
    let params = TorusParams::new(2f64.sqrt(), 0.0, 1.0)?;
    let est = josephson::rotation_number(&params, 100, 1e-8)?;
    let ok = (est.rho - 1.0).abs() < est.bound + 1e-2;
    Ok(report_from(
        "rotation-closed-form",
        1,
        ok,
        format!("rho(B=sqrt2, A=0) = {:.6} ± {:.1e}", est.rho, est.bound),
    ))
}

/// Runs every check up to `ell_max`, printing one line per report.
pub fn run_suite(ell_max: u32) -> Result<bool> {
    let ell_cap = ell_max.clamp(1, 10);
    let per_ell: Vec<Result<Vec<IdentityReport>>> = (1..=ell_cap)
        .into_par_iter()
        .map(exact_identities_for_ell)
        .collect();
    let mut reports = Vec::new();
    for r in per_ell {
        reports.extend(r?);
    }
    reports.extend(scaled_form_reports()?);
    reports.extend(multiplier_reference_reports()?);
    reports.push(genus_report());
    reports.extend(solution_reports(ell_cap)?);
    reports.extend(monodromy_reports()?);
    reports.push(rotation_report()?);
    let mut all_pass = true;
    for rep in &reports {
        println!("{rep}");
        all_pass &= rep.passed();
    }
    let n = reports.len();
    println!(
        "{}: {n} checks",
        if all_pass { "ALL PASS" } else { "FAILURES PRESENT" }
    );
    Ok(all_pass)
}
