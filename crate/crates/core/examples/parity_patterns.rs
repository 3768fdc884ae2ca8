//! Parity patterns: multiset matching for `e2,o3,...` lists, positional
//! matching for `<e,o,...>` lists.

use oooooob::{ParityPattern, Position};

fn main() {
    let cases = [
        ("e2,o3,o3,o3", "2,3,3,3"),
        ("e2,o1,o1", "1,1,2"),
        ("1,e4,e4,o5,o5", "1,4,6,5,7"),
        ("<o,o,e,e,o>", "1,3,4,6,7"),
        ("<e,e,o,o,o>", "1,3,4,6,7"),
    ];
    for (pat, pos) in cases {
        let q: ParityPattern = pat.parse().unwrap();
        let p: Position = pos.parse().unwrap();
        println!("{q:<16} ({p}): {}", q.matches(&p));
    }
}
