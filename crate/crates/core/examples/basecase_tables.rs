//! Regenerates the shipped Version B base-case table by exhaustive search.
//!
//!     cargo run --release --example basecase_tables > data/basecase_b_v1.txt
//!
//! Pass `--check` to compare against the shipped copy instead.

use oooooob::classify::basecase::{BaseCaseTable, SHIPPED_SECTIONS, SHIPPED_TABLE};

fn main() {
    let table = BaseCaseTable::generate(&SHIPPED_SECTIONS).expect("generation bounds are large enough");
    let text = table.render();
    if std::env::args().any(|a| a == "--check") {
        let same = text == SHIPPED_TABLE;
        for s in table.sections() {
            eprintln!(
                "{} n={}: {} entries, periodic from {:?}",
                s.variant,
                s.n,
                s.entries.len(),
                s.periodic_from
            );
        }
        eprintln!("{}", if same { "matches shipped table" } else { "DIFFERS from shipped table" });
        std::process::exit(if same { 0 } else { 1 });
    }
    print!("{text}");
}
