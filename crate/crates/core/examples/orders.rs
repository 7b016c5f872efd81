//! Orders of named groups, with simplicity and canonical names.
//!
//!     cargo run --example orders -- "Sp(6,2)" "L(3,4)" "2E6(2)" M

use sp2g::catalog::{canonicalize, is_simple, order, sp_order, Catalog, GroupId};
use sp2g::enumerate::g_of;

fn main() {
    let names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        println!("{:>3}  |Sp_2g(2)|", "g");
        for g in 2..=10 {
            println!("{g:>3}  {}", sp_order(g));
        }
        println!();
        for r in Catalog::embedded().records() {
            let gk = r.g_k.map_or("-".to_string(), |g| g.to_string());
            println!("{:>6}  g(K) {gk:>2}  {}", r.name.to_string(), r.order);
        }
        return;
    }
    for name in names {
        match name.parse::<GroupId>() {
            Ok(k) => {
                let o = order(&k).expect("order");
                println!(
                    "{name}: {} = {o}, simple {}, g(K) {}",
                    canonicalize(k),
                    is_simple(&k),
                    g_of(&o)
                );
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
}
