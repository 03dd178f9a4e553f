//! Filter chains over generated regular graphs.
//!
//! Usage: `cargo run --release --example census -- [n] [k] [predicate...]`
//! Defaults to the cubic graphs on 10 vertices with
//! `diameter=3 girth>=4 all-ecc=3`.

use ndb::enumerate::census::{filter_census, Predicate};
use ndb::enumerate::generate::generate_regular;

fn main() -> ndb::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().map_or(10, |s| s.parse().expect("order"));
    let k = args.get(1).map_or(3, |s| s.parse().expect("valency"));
    let predicates: Vec<Predicate> = if args.len() > 2 {
        args[2..].iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    } else {
        vec![Predicate::Diameter(3), Predicate::MinGirth(4), Predicate::AllEccentricities(3)]
    };
    let result = filter_census(generate_regular(n, k)?, &predicates)?;
    println!("connected {k}-regular graphs on {n} vertices: {}", result.total);
    for (p, count) in &result.chain {
        println!("  {p:<14}{count}");
    }
    Ok(())
}
