//! Audits the structural conditions forced on NDB graphs with gamma = d + 1.

use ndb::atlas;
use ndb::balance::{necessary_conditions, Audit};

fn main() -> ndb::error::Result<()> {
    for name in ["q3", "lq3", "icosahedron", "petersen", "prism-5"] {
        match necessary_conditions(&atlas::by_name(name)?) {
            Audit::NotApplicable(why) => println!("{name}: not applicable ({why})"),
            Audit::Evaluated(results) => {
                println!("{name}:");
                for r in results {
                    println!("  {:<28}{}", r.name, if r.passed { "pass" } else { "FAIL" });
                }
            }
        }
    }
    Ok(())
}
