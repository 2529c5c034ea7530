use serde::Serialize;
use tqm_core::bound::{
    cesium_candidates, entropic_estimate, gho_estimate, lho_estimate, naive_estimate,
    rydberg_scaling, CesiumCandidates, DispersionEstimate, EstimateMethod,
};
use tqm_core::constants::HBAR_EV_AS;

use crate::args::{Atom, EstimateArgs, Format, Method, ResolvedEstimate};
use crate::render::{self, CliError};

#[derive(Serialize)]
struct EstimateRecord<'a> {
    config: &'a ResolvedEstimate,
    method: EstimateMethod,
    sigma_t2_as2: f64,
    delta_t_as: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta_e_ev: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    approximate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    candidates: Option<CesiumCandidates>,
}

pub fn run(args: EstimateArgs) -> Result<(), CliError> {
    let cfg = args.resolve()?;
    let atom = cfg.atom.spec();

    let base: DispersionEstimate = match cfg.method {
        Method::Naive => naive_estimate(&atom),
        Method::Entropic => entropic_estimate(&atom)?,
        Method::Gho => gho_estimate(&atom),
        Method::Lho => lho_estimate(&atom)?,
    };
    let est = if cfg.n > 1 { rydberg_scaling(cfg.n, &base)? } else { base };

    // The quadrature path is hydrogen's ground state; other atoms only
    // inherit its scale.
    let delta_e_ev = (cfg.method == Method::Entropic)
        .then(|| HBAR_EV_AS / (2.0 * est.delta_t_as));
    let approximate = (cfg.method == Method::Entropic && cfg.atom != Atom::Hydrogen).then_some(true);
    let candidates = match cfg.atom {
        Atom::Cesium => Some(cesium_candidates()?),
        Atom::Hydrogen => None,
    };

    let record = EstimateRecord {
        config: &cfg,
        method: est.method,
        sigma_t2_as2: est.sigma_t2_as2,
        delta_t_as: est.delta_t_as,
        delta_e_ev,
        approximate,
        candidates,
    };

    let artifact = match cfg.common.format {
        Format::Json => render::json(&record),
        Format::Table | Format::Csv => {
            let mut body: Vec<Vec<String>> = vec![
                vec!["method".into(), format!("{:?}", est.method).to_lowercase(), "".into()],
                vec!["sigma_t2_as2".into(), render::sci12(est.sigma_t2_as2), "as^2".into()],
                vec!["delta_t_as".into(), render::sci12(est.delta_t_as), "as".into()],
            ];
            if let Some(de) = record.delta_e_ev {
                body.push(vec!["delta_e_ev".into(), render::sci12(de), "eV".into()]);
            }
            if record.approximate == Some(true) {
                body.push(vec!["approximate".into(), "true".into(), "".into()]);
            }
            if let Some(c) = &record.candidates {
                body.push(vec!["claimed_as".into(), render::sci12(c.claimed_as), "as".into()]);
                body.push(vec!["naive_as".into(), render::sci12(c.naive_as), "as".into()]);
                body.push(vec![
                    "r_scaling_as".into(),
                    render::sci12(c.r_scaling_as),
                    "as".into(),
                ]);
                body.push(vec!["valence_as".into(), render::sci12(c.valence_as), "as".into()]);
            }
            let header = render::config_line(&cfg);
            match cfg.common.format {
                Format::Table => header + &render::table(&["quantity", "value", "unit"], &body),
                _ => header + &render::csv(&["quantity", "value", "unit"], &body),
            }
        }
    };
    render::finish(&cfg.common, artifact)
}
