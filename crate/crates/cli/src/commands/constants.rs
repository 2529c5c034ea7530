use serde_json::json;
use tqm_core::constants::PhysicalConstants;

use crate::args::{ConstantsArgs, Format};
use crate::render::{self, CliError};

pub fn run(args: ConstantsArgs) -> Result<(), CliError> {
    let cfg = args.resolve()?;
    let rows = PhysicalConstants::default().table();

    let artifact = match cfg.common.format {
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(name, value, unit)| vec![name.to_string(), format!("{value} {unit}")])
                .collect();
            render::config_line(&cfg) + &render::table(&["name", "value"], &body)
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(name, value, unit)| {
                    vec![name.to_string(), render::sci12(*value), unit.to_string()]
                })
                .collect();
            render::config_line(&cfg) + &render::csv(&["name", "value", "unit"], &body)
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (name, value, unit) in &rows {
                map.insert(name.to_string(), json!({ "value": value, "unit": unit }));
            }
            render::json(&json!({ "config": cfg, "constants": map }))
        }
    };
    render::finish(&cfg.common, artifact)
}
