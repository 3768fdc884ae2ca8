//! Every closed-form rule that applies to a few positions, next to the
//! oracle's answer.

use oooooob::classify::{self, b_strip_ones, ClassifierId};
use oooooob::{MemoTable, Position, Variant};

fn main() {
    let mut memo = MemoTable::new();
    for s in ["2,3,3,3", "1,1,2,2", "1,1,1,1,2,3", "2,4,4,5,5", "1,3,4,6,7"] {
        let p: Position = s.parse().expect("valid position");
        println!("({p})");
        for v in Variant::ALL {
            let verdicts: Vec<String> = classify::applicable(v, &p)
                .into_iter()
                .map(|(id, o)| format!("{id}={o}"))
                .collect();
            println!("  {v}: oracle {} | {}", memo.outcome(v, &p), verdicts.join(" "));
        }
    }

    let p = Position::from([1, 1, 1, 1, 5]);
    println!("strip pairs of ones under B: ({p}) -> ({})", b_strip_ones(&p));
    println!("known rules: {}", ClassifierId::ALL.iter().map(|id| id.name()).collect::<Vec<_>>().join(", "));
}
