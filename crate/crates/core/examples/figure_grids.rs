//! Emits the Version C grids from the oracle and compares them with the
//! published figures cell by cell.

use oooooob::verify::figures::{published_ones_big, published_small_piles};
use oooooob::verify::grid::{emit_grid, GridBounds, GridFormat, GridKind, GridSource};
use oooooob::MemoTable;

fn main() {
    let mut memo = MemoTable::new();

    let ones = emit_grid(GridKind::OnesBig, GridBounds::new(12, 6, 0), GridSource::Oracle, &mut memo).unwrap();
    print!("{}", ones.render(GridFormat::Ascii, false));
    println!("differences from the published grid: {:?}\n", ones.diff(&published_ones_big()));

    let small = emit_grid(GridKind::SmallPiles, GridBounds::new(6, 6, 5), GridSource::Oracle, &mut memo).unwrap();
    print!("{}", small.render(GridFormat::Ascii, false));
    for (a3, a2, a1) in small.diff(&published_small_piles()) {
        println!(
            "published grid differs at a1={a1} a2={a2} a3={a3}: oracle says {}",
            if small.is_p(a3, a2, a1) { "P" } else { "N" }
        );
    }
}
