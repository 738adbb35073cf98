//! Runs the whole pipeline from a JSON config, as the binary does.

use std::error::Error;

use cqg_kac::cli::{render, run, RunConfig, Verb};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/one_block.json");
    let mut config = RunConfig::from_path(std::path::Path::new(path))?;
    config.verb = Verb::Match;
    let (code, report) = run(&config);
    println!("{}", render(&report));
    println!("exit code {code}");
    let json = report.to_json_without_timings();
    println!("report is {} bytes of JSON", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
