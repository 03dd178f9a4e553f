//! Canonical forms and isomorphism tests between atlas constructions.

use ndb::atlas;
use ndb::canon::{canonical_labeling, is_isomorphic};

fn main() -> ndb::error::Result<()> {
    let m6 = atlas::mobius_ladder(6)?;
    let k33 = atlas::complete_multipartite(&[3, 3])?;
    println!("mobius-6 ~ K(3,3): {}", is_isomorphic(&m6, &k33)?);
    println!("prism-3 ~ K(3,3): {}", is_isomorphic(&atlas::prism(3)?, &k33)?);
    println!("Q3 ~ prism-4: {}", is_isomorphic(&atlas::hypercube(3)?, &atlas::prism(4)?)?);

    let (form, labeling) = canonical_labeling(&atlas::petersen())?;
    println!("petersen canonical form {} via labeling {labeling:?}", form.to_hex());
    Ok(())
}
