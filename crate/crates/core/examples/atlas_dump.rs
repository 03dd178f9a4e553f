//! Prints a named graph as an edge list and as graph6.
//!
//! Usage: `cargo run --example atlas_dump -- [name]`

use ndb::atlas;
use ndb::edgelist::emit_edge_list;
use ndb::enumerate::graph6::emit_graph6;

fn main() -> ndb::error::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "icosahedron".into());
    let g = atlas::by_name(&name)?;
    print!("{}", emit_edge_list(&g));
    println!("{}", emit_graph6(&g)?);
    Ok(())
}
