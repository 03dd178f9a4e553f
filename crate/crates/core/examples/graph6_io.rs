//! Writes the cubic graphs on 8 vertices as graph6, reads them back in a
//! shuffled relabelling, and checks the two corpora agree up to isomorphism.

use std::collections::BTreeSet;

use ndb::canon::canonical_form;
use ndb::enumerate::generate::generate_regular;
use ndb::enumerate::graph6::{emit_graph6, read_graph6};

fn main() -> ndb::error::Result<()> {
    let graphs = generate_regular(8, 3)?;
    let mut corpus = String::new();
    for g in &graphs {
        let perm: Vec<usize> = (0..8).rev().collect();
        corpus += &emit_graph6(&g.relabel(&perm)?)?;
        corpus.push('\n');
    }
    print!("{corpus}");
    let back = read_graph6(corpus.as_bytes())?;
    let a: BTreeSet<_> = graphs.iter().map(canonical_form).collect::<Result<_, _>>()?;
    let b: BTreeSet<_> = back.iter().map(canonical_form).collect::<Result<_, _>>()?;
    println!("{} graphs, same isomorphism classes: {}", back.len(), a == b);
    Ok(())
}
