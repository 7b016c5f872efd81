//! Simple groups up to a bound, counted by kind.
//!
//!     cargo run --release --example enumerate -- 1000000000

use std::collections::BTreeMap;

use num_bigint::BigInt;
use sp2g::catalog::{sp_order, GroupId};
use sp2g::enumerate::enumerate_simple_below;

fn kind(g: &GroupId) -> String {
    match g {
        GroupId::Lie(l) => format!("{:?}", l.family()),
        GroupId::Alternating(_) => "alternating".into(),
        GroupId::Sporadic(_) => "sporadic".into(),
        GroupId::Tits => "Tits".into(),
        GroupId::Cyclic(_) => "cyclic".into(),
    }
}

fn main() {
    let bounds: Vec<BigInt> = match std::env::args().nth(1) {
        Some(a) => vec![a.parse().expect("integer bound")],
        None => (3..=5).map(sp_order).collect(),
    };
    for n in bounds {
        let res = match enumerate_simple_below(&n) {
            Ok(r) => r,
            Err(e) => {
                println!("N = {n}: {e}");
                continue;
            }
        };
        let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
        for (g, _) in &res.groups {
            *kinds.entry(kind(g)).or_default() += 1;
        }
        println!("N = {n}: {} simple groups", res.groups.len());
        for (k, c) in kinds {
            println!("    {c:>6}  {k}");
        }
        let tail: Vec<String> = res.groups.iter().rev().take(3).map(|(g, o)| format!("{g} ({o})")).collect();
        println!("    largest: {}", tail.join(", "));
    }
}
