//! Outcome classes, winning moves and Grundy values from the search oracle,
//! plus a small region solved and written as CSV.

use oooooob::solver::{solve_region, write_csv};
use oooooob::{MemoTable, Position, Region, Variant};

fn main() {
    let mut memo = MemoTable::new();
    for (v, s) in [(Variant::A, "2,4,6"), (Variant::B, "1,1,2"), (Variant::B, "1,2"), (Variant::C, "3,1,1"), (Variant::C, "1,2,3")] {
        let p: Position = s.parse().expect("valid position");
        let o = memo.outcome(v, &p);
        let mv = memo.p_option(v, &p).map_or("none".to_string(), |m| format!("({m})"));
        let g = memo.grundy(v, &p);
        println!("{v} ({p}): {o}, grundy {g}, winning move {mv}");
    }

    // Deep positions are fine: the search keeps its own stack.
    let deep = Position::from([250, 251, 260]);
    println!("B ({deep}): {}", memo.outcome(Variant::B, &deep));

    let entries = solve_region(Variant::C, &Region::pile_count(3, 3), &mut memo).expect("small region");
    write_csv(&entries, std::io::stdout()).expect("stdout");
}
