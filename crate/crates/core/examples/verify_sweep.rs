//! Exhaustive sweep of one order, printing the certificate as JSON lines.
//!
//! Usage: `cargo run --release --example verify_sweep -- [n]`

use ndb::enumerate::verify::{verify_classification, SweepSpec};

fn main() -> ndb::error::Result<()> {
    let n = std::env::args().nth(1).map_or(9, |s| s.parse().expect("order"));
    let cert = verify_classification(&SweepSpec::all(n))?;
    print!("{}", cert.to_json_lines()?);
    eprintln!("order {n}: survivors {:?}, status {:?}", cert.survivor_names(), cert.status);
    Ok(())
}
