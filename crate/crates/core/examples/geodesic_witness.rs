//! Diametral geodesic profiles and the structural witness along each one.

use ndb::atlas;
use ndb::balance::{ell_spectrum, geodesic_profile, structural_witness};
use ndb::graph::bits;

fn main() -> ndb::error::Result<()> {
    for name in ["q3", "lq3", "icosahedron"] {
        let g = atlas::by_name(name)?;
        println!("{name}: ell spectrum {:?}", ell_spectrum(&g)?);
        let x1 = bits(g.neighbors(0)).next().expect("regular graph");
        let p = geodesic_profile(&g, 0, x1)?;
        let w = structural_witness(&g, &p)?;
        println!(
            "  geodesic {:?}, ell = {}, u = {}, |A| = {}, |B| = {}, holds = {}",
            p.geodesic,
            p.ell,
            p.u_extra,
            w.set_a.count_ones(),
            w.set_b.count_ones(),
            w.holds()
        );
    }
    Ok(())
}
