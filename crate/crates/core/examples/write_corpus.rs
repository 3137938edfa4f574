//! Writes the bundled loop tables to a directory (default `data/`).
//!
//! ```text
//! cargo run -p rightloop --example write_corpus -- crates/core/data
//! ```

use rightloop::corpus;
use rightloop::looptab::{self, FileKind};
use rightloop::table::{validate, LoopKind};

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "data".into());
    std::fs::create_dir_all(&dir)?;
    for (name, l) in corpus::all_loops() {
        let is_group =
            validate(l.table(), l.identity(), LoopKind::Group).map(|r| r.is_valid()) == Ok(true);
        let kind = if is_group {
            FileKind::Group
        } else {
            FileKind::Loop
        };
        let path = format!("{dir}/{name}.looptab");
        std::fs::write(&path, looptab::write(l.table(), l.identity(), kind, &[]))?;
        println!(
            "{path} ({} elements, {})",
            l.order(),
            if is_group { "group" } else { "loop" }
        );
    }
    Ok(())
}
