//! The D-cell partition around one edge, and the containment checks on it.
//!
//! Usage: `cargo run --example cell_partition -- [atlas-name] [u] [v]`

use ndb::atlas;
use ndb::balance::{check_cell_adjacency, d_cell_partition, gamma_from_cells};
use ndb::graph::bits;

fn main() -> ndb::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "q3".into());
    let u: usize = args.next().map_or(0, |s| s.parse().expect("vertex"));
    let g = atlas::by_name(&name)?;
    let v = args.next().map_or_else(|| bits(g.neighbors(u)).next().expect("u has a neighbour"), |s| s.parse().expect("vertex"));

    let p = d_cell_partition(&g, u, v)?;
    println!("{name}, edge {u}-{v}: |W(u,v)| = {}, |W(v,u)| = {}, ties = {}", p.w_uv_size, p.w_vu_size, p.tie_count);
    for c in &p.cells {
        let m: Vec<usize> = bits(c.members).collect();
        println!("  D({},{}) = {m:?}", c.i, c.j);
    }
    println!("sums from the cells: {} and {}", p.near_u_sum(), p.near_v_sum());
    println!("containments hold: {}", check_cell_adjacency(&g, u, v)?);
    println!("gamma from the cells: {:?}", gamma_from_cells(&g)?);
    Ok(())
}
