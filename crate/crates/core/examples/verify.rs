//! Every verification, summarized by check family.
//!
//!     cargo run --release --example verify

use std::collections::BTreeMap;
use std::time::Instant;

use sp2g::catalog::Catalog;
use sp2g::report::{verify_all, Status};

fn main() {
    let t = Instant::now();
    let doc = verify_all(Catalog::embedded(), vec!["verify".into()]);
    let mut families: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for c in &doc.checks {
        let family = c.id.split('.').next().unwrap_or_default().to_string();
        let e = families.entry(family).or_default();
        e.0 += 1;
        if c.status == Status::Fail {
            e.1 += 1;
        }
    }
    for (f, (n, bad)) in families {
        println!("{f:>12}  {n:>3} checks  {bad} failed");
    }
    for id in doc.failed_ids() {
        println!("failed: {id}");
    }
    println!("{:?} in {:.2?}", doc.status, t.elapsed());
}
