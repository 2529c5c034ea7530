use serde_json::json;
use tqm_core::photon::{bessel_greens, kappa_bar, quadratic_greens, retarded_shell_with_width};
use tqm_core::Complex;

use crate::args::{Format, GreensForm, PhotonArgs, ResolvedPhoton};
use crate::render::{self, CliError};

/// One sample of the chosen Green's function at relative time t (as).
/// Values are in natural units (hbar = c = 1).
fn sample(cfg: &ResolvedPhoton, t: f64) -> Result<Complex, CliError> {
    Ok(match cfg.form {
        GreensForm::Quadratic => quadratic_greens(t, cfg.r_as, cfg.tau_as, cfg.mu)?.value,
        // The Bessel form takes absolute time; the sweep variable is t - tau.
        GreensForm::Bessel => {
            let kb = kappa_bar(cfg.r_as, cfg.mu)?;
            bessel_greens(cfg.tau_as + t, kb, cfg.tau_as)?
        }
        GreensForm::Shell => {
            let width = cfg.width_as.unwrap_or(cfg.r_as / 1000.0);
            // Real shell on the light cone: sweep the clock past tau = r.
            Complex::new(retarded_shell_with_width(cfg.r_as, cfg.tau_as + t, width)?, 0.0)
        }
    })
}

pub fn run(args: PhotonArgs) -> Result<(), CliError> {
    let cfg = args.resolve()?;
    let n = cfg.t_points;
    let rows: Vec<(f64, Complex)> = (0..n)
        .map(|i| {
            let t = if n == 1 {
                cfg.t_start_as
            } else {
                cfg.t_start_as
                    + (cfg.t_end_as - cfg.t_start_as) * i as f64 / (n - 1) as f64
            };
            sample(&cfg, t).map(|v| (t, v))
        })
        .collect::<Result<_, _>>()?;

    let kb = match cfg.form {
        GreensForm::Shell => None,
        _ => Some(kappa_bar(cfg.r_as, cfg.mu)?),
    };

    let artifact = match cfg.common.format {
        Format::Json => {
            let data: Vec<[f64; 4]> =
                rows.iter().map(|(t, v)| [*t, v.re, v.im, v.norm()]).collect();
            render::json(&json!({
                "config": cfg,
                "kappa_bar_per_as": kb,
                "value_unit": "natural (hbar = c = 1)",
                "columns": ["t_as", "re", "im", "abs"],
                "rows": data,
            }))
        }
        Format::Csv | Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(t, v)| {
                    vec![
                        render::sci12(*t),
                        render::sci12(v.re),
                        render::sci12(v.im),
                        render::sci12(v.norm()),
                    ]
                })
                .collect();
            let mut out = render::config_line(&cfg);
            if let Some(kb) = kb {
                out += &format!("# kappa_bar_per_as = {}\n", render::sci12(kb));
            }
            out += "# value unit: natural (hbar = c = 1)\n";
            let headers = ["t_as", "re", "im", "abs"];
            match cfg.common.format {
                Format::Table => out + &render::table(&headers, &body),
                _ => out + &render::csv(&headers, &body),
            }
        }
    };
    render::finish(&cfg.common, artifact)
}
