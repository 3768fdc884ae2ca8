//! Searches for counterexamples to the three conjectures and prints any
//! that turn up.

use oooooob::verify::{check_classifier, check_parity_function};
use oooooob::{ClassifierId, Region, SweepOptions, Variant};

fn main() {
    let opts = SweepOptions::default();

    for k in 3..=9 {
        let r = check_classifier(ClassifierId::ConjectureBParity, Variant::B, &Region::pile_count(k, 10), &opts).unwrap();
        println!("odd-pile parity, {k} piles <= 10: {} ({} positions in scope)", r.status, r.applicable);
    }

    for (n, bounds) in [(3, vec![5, 5, 5]), (4, vec![5, 5, 5, 5]), (5, vec![5, 5, 5, 5, 10])] {
        let r = check_parity_function(n, &Region::counts(bounds), &opts).unwrap();
        println!("parity function, largest pile {n}: {} ({} positions, {})", r.status, r.applicable, r.notes.join("; "));
    }

    for n in 1..=5 {
        let region = Region::counts_between(vec![2; n], vec![5; n]).unwrap();
        let r = check_classifier(ClassifierId::ConjectureCMod3, Variant::C, &region, &opts).unwrap();
        println!("tokens mod 3, sizes 1..={n}: {} ({} positions)", r.status, r.applicable);
        for m in &r.mismatches {
            println!("  counterexample ({}): conjectured {}, actually {}", m.position, m.claimed, m.oracle);
        }
    }
}
