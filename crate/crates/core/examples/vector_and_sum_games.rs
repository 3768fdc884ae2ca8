//! The two-dimensional vector subtraction games behind the two-pile and
//! ones-plus-big-pile families, and the nim sum that breaks decomposition.

use oooooob::classify::c_ones_big;
use oooooob::solver::{outcome_sum, sum_p_options, SumMemo, SumPosition, VectorGame, VectorMemo};
use oooooob::verify::check_sum_counterexample;

fn main() {
    let mut memo = VectorMemo::new();
    let classic = VectorGame::classic();
    for x in [[2u64, 4], [3, 4], [0, 0]] {
        println!("classic {x:?}: {}", memo.outcome(&classic, &x).unwrap());
    }

    let mut memo = VectorMemo::new();
    let g = VectorGame::ones_big();
    for (k, n) in [(4u32, 2u32), (7, 2), (1, 2), (9, 0)] {
        let v = memo.outcome(&g, &[k as u64, n as u64]).unwrap();
        println!("ones-big k={k} n={n}: vector game {v}, rule {}", c_ones_big(k, n));
    }

    let mut sums = SumMemo::new();
    let s = SumPosition::new(vec![3, 1, 1], [1, 2]).unwrap();
    let opts: Vec<String> = sum_p_options(&s, &mut sums).iter().map(|p| format!("({p})")).collect();
    println!("nim sum (3,1,1), one or two components per move: {}, P-options {}", outcome_sum(&s, &mut sums), opts.join(" "));
    print!("{}", check_sum_counterexample().to_text());
}
