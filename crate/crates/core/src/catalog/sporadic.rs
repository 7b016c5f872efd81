use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Signed;

use super::group::{GroupId, Sporadic};
use super::CatalogError;

pub const EMBEDDED_DATA: &str = include_str!("../../data/sporadic.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SporadicRecord {
    pub name: Sporadic,
    pub order: BigInt,
    pub g_k: Option<u32>,
    pub centralizer_factors: Option<Vec<GroupId>>,
}

/// The sporadic table, as loaded from a data file.
#[derive(Clone, Debug)]
pub struct Catalog {
    records: BTreeMap<Sporadic, SporadicRecord>,
}

fn data_err(line: usize, message: impl Into<String>) -> CatalogError {
    CatalogError::Data {
        line,
        message: message.into(),
    }
}

impl Catalog {
    pub fn embedded() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::parse(EMBEDDED_DATA).expect("embedded sporadic data"))
    }

    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut records = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (name, order, extra) = match fields[..] {
                [n, o] => (n, o, None),
                [n, o, g, f] => (n, o, Some((g, f))),
                _ => return Err(data_err(line_no, "expected 2 or 4 fields")),
            };
            let name = Sporadic::from_token(name)
                .ok_or_else(|| data_err(line_no, format!("unknown sporadic group {name:?}")))?;
            let order: BigInt = order
                .parse()
                .map_err(|_| data_err(line_no, format!("bad order {order:?}")))?;
            if !order.is_positive() {
                return Err(data_err(line_no, "order must be positive"));
            }
            let (g_k, centralizer_factors) = match extra {
                None => (None, None),
                Some((g, f)) => {
                    let g: u32 = g
                        .parse()
                        .map_err(|_| data_err(line_no, format!("bad genus {g:?}")))?;
                    let factors = f
                        .split(';')
                        .map(|s| {
                            s.parse::<GroupId>()
                                .map_err(|e| data_err(line_no, format!("factor {s:?}: {e}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    (Some(g), Some(factors))
                }
            };
            let rec = SporadicRecord {
                name,
                order,
                g_k,
                centralizer_factors,
            };
            if records.insert(name, rec).is_some() {
                return Err(data_err(line_no, format!("duplicate entry for {name}")));
            }
        }
        if records.len() != Sporadic::ALL.len() {
            return Err(data_err(
                0,
                format!("expected 26 sporadic groups, found {}", records.len()),
            ));
        }
        Ok(Catalog { records })
    }

    pub fn record(&self, s: Sporadic) -> &SporadicRecord {
        &self.records[&s]
    }

    /// Records in order of increasing cardinality.
    pub fn records(&self) -> impl Iterator<Item = &SporadicRecord> {
        let mut v: Vec<_> = self.records.values().collect();
        v.sort_by(|a, b| a.order.cmp(&b.order).then(a.name.cmp(&b.name)));
        v.into_iter()
    }

    pub fn sporadic_order(&self, s: Sporadic) -> &BigInt {
        &self.record(s).order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_loads() {
        let c = Catalog::embedded();
        assert_eq!(c.sporadic_order(Sporadic::M11), &BigInt::from(7920));
        assert_eq!(c.records().filter(|r| r.g_k.is_some()).count(), 11);
        let m = c.record(Sporadic::M);
        assert_eq!(m.g_k, Some(10));
        assert_eq!(m.centralizer_factors.as_ref().unwrap().len(), 5);
    }

    #[test]
    fn rejects_malformed() {
        assert!(Catalog::parse("M11 7920\n").is_err());
        let dup = format!("{EMBEDDED_DATA}\nM11 7920\n");
        assert!(matches!(Catalog::parse(&dup), Err(CatalogError::Data { .. })));
        let bad = EMBEDDED_DATA.replace("J4    86775571046077562880", "J4 x");
        assert!(Catalog::parse(&bad).is_err());
        let bad = EMBEDDED_DATA.replace("Alt_5;Alt_8", "Alt_5;Nope");
        assert!(Catalog::parse(&bad).is_err());
    }
}
