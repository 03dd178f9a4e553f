//! Balance parameters of every named graph in the atlas.

use ndb::atlas;
use ndb::balance::{analyze, transmissions};

fn main() -> ndb::error::Result<()> {
    println!("{:<22}{:>4}{:>4}{:>4}{:>7}{:>7}{:>8}", "graph", "n", "k", "d", "gamma", "ndb", "median");
    for name in atlas::list() {
        let g = atlas::by_name(&name)?;
        let r = analyze(&g)?;
        let t = transmissions(&g)?;
        println!(
            "{name:<22}{:>4}{:>4}{:>4}{:>7}{:>7}{:>8}",
            r.order,
            r.valency.map_or("-".into(), |k| k.to_string()),
            r.diameter,
            r.gamma.map_or("-".into(), |x| x.to_string()),
            r.is_ndb,
            t.self_median,
        );
    }
    Ok(())
}
