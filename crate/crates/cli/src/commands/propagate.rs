use serde::Serialize;
use serde_json::json;
use tqm_core::constants::HBAR_EV_AS;
use tqm_core::freeprop::evolve_gtf;
use tqm_core::wavepacket::{Domain, GaussianPacket};

use crate::args::{Format, PropagateArgs};
use crate::render::{self, CliError};

const DENSITY_POINTS: usize = 101;
const DENSITY_HALF_WIDTH_SIGMAS: f64 = 5.0;

/// Evolved-packet parameters, converted back from natural units to as.
#[derive(Serialize)]
struct Evolved {
    center_as: f64,
    drift_as: f64,
    spread_sigma2_as2: f64,
    sigma_tau_as: f64,
}

pub fn run(args: PropagateArgs) -> Result<(), CliError> {
    let cfg = args.resolve()?;
    // Natural units with the energy scale in eV: times convert by hbar.
    let sigma_nat = cfg.sigma_t_as / HBAR_EV_AS;
    let tau_nat = cfg.tau_as / HBAR_EV_AS;
    let packet = GaussianPacket::new(Domain::Time, 0.0, cfg.e0_ev, sigma_nat)?;
    let ev = evolve_gtf(&packet, cfg.m_ev, cfg.e0_ev, tau_nat)?;

    let evolved = Evolved {
        center_as: ev.center() * HBAR_EV_AS,
        drift_as: ev.drift * HBAR_EV_AS,
        spread_sigma2_as2: ev.spread_sigma2() * HBAR_EV_AS * HBAR_EV_AS,
        sigma_tau_as: ev.spread_sigma2().sqrt() * HBAR_EV_AS,
    };

    let half = DENSITY_HALF_WIDTH_SIGMAS * evolved.sigma_tau_as;
    let rows: Vec<(f64, f64)> = (0..DENSITY_POINTS)
        .map(|i| {
            let t_as = evolved.center_as - half
                + 2.0 * half * i as f64 / (DENSITY_POINTS - 1) as f64;
            let rho = ev.density(t_as / HBAR_EV_AS) / HBAR_EV_AS;
            (t_as, rho)
        })
        .collect();

    let artifact = match cfg.common.format {
        Format::Json => render::json(&json!({
            "config": cfg,
            "evolved": evolved,
            "density": {
                "columns": ["t_as", "density_per_as"],
                "rows": rows,
            },
        })),
        Format::Csv => {
            let mut out = render::config_line(&cfg);
            out += &format!("# center_as = {}\n", render::sci12(evolved.center_as));
            out += &format!("# drift_as = {}\n", render::sci12(evolved.drift_as));
            out += &format!(
                "# spread_sigma2_as2 = {}\n",
                render::sci12(evolved.spread_sigma2_as2)
            );
            out += &format!("# sigma_tau_as = {}\n", render::sci12(evolved.sigma_tau_as));
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(t, rho)| vec![render::sci12(*t), render::sci12(*rho)])
                .collect();
            out + &render::csv(&["t_as", "density_per_as"], &body)
        }
        Format::Table => {
            let params = vec![
                vec!["center_as".to_string(), render::sci12(evolved.center_as), "as".into()],
                vec!["drift_as".to_string(), render::sci12(evolved.drift_as), "as".into()],
                vec![
                    "spread_sigma2_as2".to_string(),
                    render::sci12(evolved.spread_sigma2_as2),
                    "as^2".into(),
                ],
                vec![
                    "sigma_tau_as".to_string(),
                    render::sci12(evolved.sigma_tau_as),
                    "as".into(),
                ],
            ];
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(t, rho)| vec![render::sci12(*t), render::sci12(*rho)])
                .collect();
            render::config_line(&cfg)
                + &render::table(&["quantity", "value", "unit"], &params)
                + "\n"
                + &render::table(&["t_as", "density_per_as"], &body)
        }
    };
    render::finish(&cfg.common, artifact)
}
