//! Dump a family's generators as JSON and run a suite report.
use symcheck::realizations::{export_json, family_by_name};
use symcheck::suites::{run_suite, SuiteOptions};

fn main() -> symcheck::Result<()> {
    let fam = family_by_name("so32-5d", 6)?;
    let json = export_json(&fam);
    println!("{} matrices of dimension {}", json["matrices"].as_array().unwrap().len(), json["matrices"][0]["dim"]);
    let report = run_suite("isomorphism", &SuiteOptions::default())?;
    print!("{}", report.to_text());
    Ok(())
}
