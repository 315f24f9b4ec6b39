//! Write a labelled instance as JSON and a plain edge list, then read both
//! back.
//!
//! ```bash
//! cargo run --example file_formats
//! ```

use cdt::gen::{self, LabelMode};
use cdt::io::{parse_edge_list, parse_json, write_edge_list, GraphFile};
use cdt::Group;

fn main() -> cdt::Result<()> {
    let eg = gen::gen_stacked_triangulation(6, 2)?;
    let labels = gen::gen_labels(eg.graph(), &Group::cyclic(3), LabelMode::NonIdentity, 2)?;

    let json = serde_json::to_string(&GraphFile::from_embedded(&eg, Some(&labels)))?;
    println!("{json}");
    let back = parse_json(&json)?;
    assert_eq!(back.embedded()?, eg);
    assert_eq!(back.group_labels(eg.graph())?, Some(labels));

    let text = write_edge_list(eg.graph());
    print!("{text}");
    assert_eq!(&parse_edge_list(&text)?, eg.graph());
    Ok(())
}
