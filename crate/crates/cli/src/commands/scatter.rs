use serde_json::json;
use tqm_core::bound::lho_estimate;
use tqm_core::scatter::{DispersionLedger, RelaxationPolicy, ScatterEvent};

use crate::args::{Format, ScatterArgs};
use crate::render::{self, CliError};

enum ChainOp {
    Absorb(f64),
    Emit(f64),
    RelaxInstant,
    RelaxFor(f64),
    Resonant { g_in: f64, g_out: f64, dwell: f64 },
}

/// Comma-separated events: absorb:<s2>, emit:<s2>, relax:instant,
/// relax:<elapsed>, resonant:<in>:<out>:<dwell>.
fn parse_chain(chain: &str) -> Result<Vec<ChainOp>, CliError> {
    let bad = |item: &str| CliError::Usage(format!("bad chain item {item:?}"));
    let num = |item: &str, s: &str| s.trim().parse::<f64>().map_err(|_| bad(item));
    chain
        .split(',')
        .map(|item| {
            let item = item.trim();
            let parts: Vec<&str> = item.split(':').collect();
            match parts.as_slice() {
                ["absorb", g] => Ok(ChainOp::Absorb(num(item, g)?)),
                ["emit", g] => Ok(ChainOp::Emit(num(item, g)?)),
                ["relax", "instant"] => Ok(ChainOp::RelaxInstant),
                ["relax", elapsed] => Ok(ChainOp::RelaxFor(num(item, elapsed)?)),
                ["resonant", g_in, g_out, dwell] => Ok(ChainOp::Resonant {
                    g_in: num(item, g_in)?,
                    g_out: num(item, g_out)?,
                    dwell: num(item, dwell)?,
                }),
                _ => Err(bad(item)),
            }
        })
        .collect()
}

fn event_name(e: ScatterEvent) -> &'static str {
    match e {
        ScatterEvent::Absorb => "absorb",
        ScatterEvent::Emit => "emit",
        ScatterEvent::Relax => "relax",
        ScatterEvent::Resonant => "resonant",
    }
}

pub fn run(args: ScatterArgs) -> Result<(), CliError> {
    let mut cfg = args.resolve()?;
    // An atom sources the relaxation target from its local-oscillator
    // width; the resolved value is what gets echoed.
    if let Some(atom) = cfg.target_atom {
        cfg.target = lho_estimate(&atom.spec())?.sigma_t2_as2;
    }
    let ops = parse_chain(&cfg.chain)?;

    let mut ledger = DispersionLedger::new(cfg.init)?;
    for op in &ops {
        ledger = match *op {
            ChainOp::Absorb(g) => ledger.absorb(g)?,
            ChainOp::Emit(g) => ledger.emit(g)?,
            ChainOp::RelaxInstant => {
                ledger.relax(&RelaxationPolicy::instant(cfg.target)?, 0.0)?
            }
            ChainOp::RelaxFor(elapsed) => {
                ledger.relax(&RelaxationPolicy::exponential(cfg.target, cfg.rate)?, elapsed)?
            }
            ChainOp::Resonant { g_in, g_out, dwell } => ledger.resonant(
                g_in,
                g_out,
                dwell,
                &RelaxationPolicy::exponential(cfg.target, cfg.rate)?,
            )?,
        };
    }

    let artifact = match cfg.common.format {
        Format::Json => render::json(&json!({ "config": cfg, "ledger": ledger })),
        Format::Csv | Format::Table => {
            let body: Vec<Vec<String>> = ledger
                .entries
                .iter()
                .enumerate()
                .map(|(step, e)| {
                    vec![
                        step.to_string(),
                        event_name(e.event).to_string(),
                        render::sci12(e.sigma2_in),
                        render::sci12(e.sigma2_out),
                    ]
                })
                .collect();
            let headers = ["step", "event", "sigma2_in", "sigma2_out"];
            let out = render::config_line(&cfg);
            match cfg.common.format {
                Format::Table => out + &render::table(&headers, &body),
                _ => out + &render::csv(&headers, &body),
            }
        }
    };
    render::finish(&cfg.common, artifact)
}
