use serde::Serialize;
use tqm_core::bound::{gho_estimate, hydrogen_momentum_moments, lho_sigma, AtomSpec};
use tqm_core::constants::A0_PM;
use tqm_core::numgrid::run_propagation_matrix;
use tqm_core::photon::{expansion_error, residue_check, residue_grid};

use crate::args::{Format, ResolvedValidate, Suite, ValidateArgs};
use crate::render::{self, CliError};

#[derive(Serialize)]
struct ValidationCase {
    case: String,
    max_error: f64,
    tolerance: f64,
    passed: bool,
}

impl ValidationCase {
    fn strict(case: String, max_error: f64, tolerance: f64) -> Self {
        Self { case, max_error, tolerance, passed: max_error < tolerance }
    }
}

#[derive(Serialize)]
struct SuiteReport {
    suite: &'static str,
    cases: Vec<ValidationCase>,
    passed: bool,
}

fn seal(suite: &'static str, cases: Vec<ValidationCase>) -> SuiteReport {
    let passed = cases.iter().all(|c| c.passed);
    SuiteReport { suite, cases, passed }
}

#[derive(Serialize)]
struct ValidateReport<'a> {
    config: &'a ResolvedValidate,
    suites: Vec<SuiteReport>,
    passed: bool,
}

/// FFT slice propagation against the closed-form evolution, on the pinned
/// sigma x tau matrix.
fn propagation_suite() -> Result<SuiteReport, CliError> {
    let mut cases = Vec::new();
    for report in run_propagation_matrix()? {
        cases.push(ValidationCase::strict(
            format!("{} density error", report.case),
            report.max_error,
            1e-6,
        ));
        cases.push(ValidationCase::strict(
            format!("{} norm drift", report.case),
            report.max_norm_drift,
            1e-9,
        ));
    }
    Ok(seal("propagation", cases))
}

/// Closed-contour quadrature against the pole formula -(2 pi / kappa) sin(kappa tau).
fn residues_suite() -> Result<SuiteReport, CliError> {
    let mut cases = Vec::new();
    for (kappa, tau) in residue_grid() {
        let (numeric, analytic) = residue_check(kappa, tau)?;
        let rel = (numeric - analytic).norm() / analytic.norm();
        cases.push(ValidationCase::strict(
            format!("kappa={kappa} tau={tau}"),
            rel,
            1e-6,
        ));
    }
    Ok(seal("residues", cases))
}

/// Ground-state momentum moments by quadrature against their closed forms.
fn moments_suite() -> Result<SuiteReport, CliError> {
    let (p2, p4) = hydrogen_momentum_moments()?;
    let cases = vec![
        ValidationCase::strict("<p^2> vs 1/a0^2".to_string(), (p2 - 1.0).abs(), 1e-4),
        ValidationCase::strict("<p^4> vs 5/a0^4".to_string(), (p4 - 5.0).abs() / 5.0, 1e-4),
    ];
    Ok(seal("moments", cases))
}

/// Quadratic expansion of 1/sqrt(t^2 + r^2): the error must stay under the
/// next-order term (3/8) t^4 / r^5 across t in [0, r/2].
fn taylor_suite() -> Result<SuiteReport, CliError> {
    let mut cases = Vec::new();
    for &r in &[0.5, 1.0, 3.0] {
        let mut margin = f64::NEG_INFINITY;
        for i in 0..50 {
            let t = 0.5 * r * i as f64 / 49.0;
            let bound = 0.375 * t.powi(4) / r.powi(5);
            margin = margin.max(expansion_error(t, r)? - bound);
        }
        cases.push(ValidationCase {
            case: format!("expansion bound margin r={r}"),
            max_error: margin,
            tolerance: 0.0,
            passed: margin <= 0.0,
        });
    }
    Ok(seal("taylor", cases))
}

/// The local-oscillator width at the Bohr radius must reproduce the global
/// width exactly when mu = 1.
fn mu_calibration_suite(mu: f64) -> Result<SuiteReport, CliError> {
    let hydrogen = AtomSpec::hydrogen();
    let lho = lho_sigma(A0_PM, mu, &hydrogen)?;
    let gho = gho_estimate(&hydrogen).sigma_t2_as2;
    let rel = (lho - gho).abs() / gho;
    let cases = vec![ValidationCase {
        case: format!("lho at a0 with mu={mu} vs gho width"),
        max_error: rel,
        tolerance: 1e-12,
        passed: rel <= 1e-12,
    }];
    Ok(seal("mu-calibration", cases))
}

pub fn run(args: ValidateArgs) -> Result<(), CliError> {
    let cfg = args.resolve()?;
    let suites: Vec<SuiteReport> = match cfg.suite {
        Suite::All => vec![
            propagation_suite()?,
            residues_suite()?,
            moments_suite()?,
            taylor_suite()?,
            mu_calibration_suite(cfg.mu)?,
        ],
        Suite::Propagation => vec![propagation_suite()?],
        Suite::Residues => vec![residues_suite()?],
        Suite::Moments => vec![moments_suite()?],
        Suite::Taylor => vec![taylor_suite()?],
        Suite::MuCalibration => vec![mu_calibration_suite(cfg.mu)?],
    };
    let passed = suites.iter().all(|s| s.passed);
    let report = ValidateReport { config: &cfg, suites, passed };

    let artifact = match cfg.common.format {
        Format::Json => render::json(&report),
        Format::Csv | Format::Table => {
            let body: Vec<Vec<String>> = report
                .suites
                .iter()
                .flat_map(|s| {
                    s.cases.iter().map(|c| {
                        vec![
                            s.suite.to_string(),
                            c.case.clone(),
                            render::sci12(c.max_error),
                            render::sci12(c.tolerance),
                            c.passed.to_string(),
                        ]
                    })
                })
                .collect();
            let headers = ["suite", "case", "max_error", "tolerance", "passed"];
            let out = render::config_line(&cfg);
            match cfg.common.format {
                Format::Table => out + &render::table(&headers, &body),
                _ => out + &render::csv(&headers, &body),
            }
        }
    };
    render::finish(&cfg.common, artifact)?;

    let failed = report
        .suites
        .iter()
        .flat_map(|s| s.cases.iter())
        .filter(|c| !c.passed)
        .count();
    if failed > 0 {
        return Err(CliError::ValidationFailed { failed });
    }
    Ok(())
}
