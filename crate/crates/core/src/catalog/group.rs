use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::family::{FieldRestriction, LieFamily, Version};
use super::CatalogError;
use crate::arith::nt;

/// The 26 sporadic simple groups, in order of increasing cardinality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sporadic {
    M11,
    M12,
    J1,
    M22,
    J2,
    M23,
    HS,
    J3,
    M24,
    McL,
    He,
    Ru,
    Suz,
    ON,
    Co3,
    Co2,
    Fi22,
    HN,
    Ly,
    Th,
    Fi23,
    Co1,
    J4,
    Fi24,
    B,
    M,
}

impl Sporadic {
    pub const ALL: [Sporadic; 26] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::J1,
        Sporadic::M22,
        Sporadic::J2,
        Sporadic::M23,
        Sporadic::HS,
        Sporadic::J3,
        Sporadic::M24,
        Sporadic::McL,
        Sporadic::He,
        Sporadic::Ru,
        Sporadic::Suz,
        Sporadic::ON,
        Sporadic::Co3,
        Sporadic::Co2,
        Sporadic::Fi22,
        Sporadic::HN,
        Sporadic::Ly,
        Sporadic::Th,
        Sporadic::Fi23,
        Sporadic::Co1,
        Sporadic::J4,
        Sporadic::Fi24,
        Sporadic::B,
        Sporadic::M,
    ];

    /// Short token used in data files and on the command line.
    pub fn token(self) -> &'static str {
        use Sporadic::*;
        match self {
            M11 => "M11",
            M12 => "M12",
            J1 => "J1",
            M22 => "M22",
            J2 => "J2",
            M23 => "M23",
            HS => "HS",
            J3 => "J3",
            M24 => "M24",
            McL => "McL",
            He => "He",
            Ru => "Ru",
            Suz => "Suz",
            ON => "O'N",
            Co3 => "Co3",
            Co2 => "Co2",
            Fi22 => "Fi22",
            HN => "HN",
            Ly => "Ly",
            Th => "Th",
            Fi23 => "Fi23",
            Co1 => "Co1",
            J4 => "J4",
            Fi24 => "Fi24'",
            B => "B",
            M => "M",
        }
    }

    /// Display name with subscripts marked by `_`.
    pub fn name(self) -> &'static str {
        use Sporadic::*;
        match self {
            M11 => "M_11",
            M12 => "M_12",
            J1 => "J_1",
            M22 => "M_22",
            J2 => "J_2",
            M23 => "M_23",
            M24 => "M_24",
            J3 => "J_3",
            Co3 => "Co_3",
            Co2 => "Co_2",
            Fi22 => "Fi_22",
            Fi23 => "Fi_23",
            Co1 => "Co_1",
            J4 => "J_4",
            Fi24 => "Fi_24'",
            other => other.token(),
        }
    }

    pub fn from_token(s: &str) -> Option<Sporadic> {
        let squashed: String = s.chars().filter(|&c| c != '_').collect();
        let squashed = match squashed.as_str() {
            "ON" => "O'N",
            "Fi24" => "Fi24'",
            "MCL" => "McL",
            other => other,
        };
        Sporadic::ALL.into_iter().find(|sp| sp.token() == squashed)
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A group of Lie type: family, rank, field size and version.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LieGroup {
    family: LieFamily,
    rank: u32,
    q: u64,
    version: Version,
}

impl LieGroup {
    pub fn new(
        family: LieFamily,
        rank: u32,
        q: u64,
        version: Version,
    ) -> Result<LieGroup, CatalogError> {
        let invalid = |why: String| CatalogError::InvalidParameters(why);
        match family.fixed_rank() {
            Some(r) if r != rank => {
                return Err(invalid(format!("{family} has rank {r}, not {rank}")));
            }
            None if rank < family.min_alias_rank() => {
                return Err(invalid(format!(
                    "{} requires rank >= {}, got {rank}",
                    family.symbol(),
                    family.min_alias_rank()
                )));
            }
            _ => {}
        }
        let (p, k) =
            nt::prime_power(q).ok_or_else(|| invalid(format!("q = {q} is not a prime power")))?;
        if let FieldRestriction::OddPowerOf(r) = family.field_restriction() {
            if p != r || k % 2 == 0 {
                return Err(invalid(format!(
                    "{family} is only defined over fields of order {r}^(2m+1), got q = {q}"
                )));
            }
        }
        Ok(LieGroup {
            family,
            rank,
            q,
            version,
        })
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn version(&self) -> Version {
        self.version
    }

    /// Characteristic of the field.
    pub fn characteristic(&self) -> u64 {
        nt::prime_power(self.q).expect("validated at construction").0
    }

    pub(crate) fn with_version(self, version: Version) -> LieGroup {
        LieGroup { version, ..self }
    }
}

impl fmt::Display for LieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}({})", self.family.symbol(), self.rank, self.q)?;
        if self.version == Version::Universal {
            f.write_str(UNIVERSAL_SUFFIX)?;
        }
        Ok(())
    }
}

/// Identifier of a finite simple group (or one of the few non-simple groups
/// that naturally sit inside the families).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupId {
    Cyclic(u64),
    Alternating(u32),
    Lie(LieGroup),
    Sporadic(Sporadic),
    Tits,
}

impl GroupId {
    /// Adjoint version of a group of Lie type.
    pub fn lie(family: LieFamily, rank: u32, q: u64) -> Result<GroupId, CatalogError> {
        LieGroup::new(family, rank, q, Version::Adjoint).map(GroupId::Lie)
    }

    pub fn lie_universal(family: LieFamily, rank: u32, q: u64) -> Result<GroupId, CatalogError> {
        LieGroup::new(family, rank, q, Version::Universal).map(GroupId::Lie)
    }

    pub fn cyclic(p: u64) -> Result<GroupId, CatalogError> {
        if nt::is_prime(p) {
            Ok(GroupId::Cyclic(p))
        } else {
            Err(CatalogError::InvalidParameters(format!(
                "cyclic parameter {p} is not prime"
            )))
        }
    }

    pub fn alternating(n: u32) -> Result<GroupId, CatalogError> {
        if n >= 3 {
            Ok(GroupId::Alternating(n))
        } else {
            Err(CatalogError::InvalidParameters(format!(
                "Alt_{n} is trivial; need n >= 3"
            )))
        }
    }

    /// Re-checks the parameter invariants (the variants are public, so a
    /// value may have been built by hand).
    pub fn validate(&self) -> Result<(), CatalogError> {
        match *self {
            GroupId::Cyclic(p) => GroupId::cyclic(p).map(drop),
            GroupId::Alternating(n) => GroupId::alternating(n).map(drop),
            GroupId::Lie(l) => LieGroup::new(l.family, l.rank, l.q, l.version).map(drop),
            GroupId::Sporadic(_) | GroupId::Tits => Ok(()),
        }
    }

    pub fn as_lie(&self) -> Option<&LieGroup> {
        match self {
            GroupId::Lie(l) => Some(l),
            _ => None,
        }
    }

    /// Shorthand used by tests and examples; panics on invalid parameters.
    pub fn parse_or_panic(s: &str) -> GroupId {
        s.parse()
            .unwrap_or_else(|e| panic!("bad group name {s:?}: {e}"))
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Cyclic(p) => write!(f, "Z_{p}"),
            GroupId::Alternating(n) => write!(f, "Alt_{n}"),
            GroupId::Lie(l) => l.fmt(f),
            GroupId::Sporadic(s) => s.fmt(f),
            GroupId::Tits => f.write_str("Tits"),
        }
    }
}

/// Error from the group-name parser; `position` is a byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected '{token}'"))
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected a number");
        }
        let text = &self.rest()[..digits];
        let value = text.parse().or_else(|_| self.err("number out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn at_end(&self) -> Result<(), ParseError> {
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    /// `( a )` or `( a , b )`.
    fn args(&mut self) -> Result<Vec<(usize, u64)>, ParseError> {
        self.expect("(")?;
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let at = self.pos;
            out.push((at, self.number()?));
            self.skip_ws();
            if self.eat(")") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(' ') {
            self.pos += 1;
        }
    }
}

fn lie_at(
    pos: usize,
    family: LieFamily,
    rank: u64,
    q: u64,
) -> Result<GroupId, ParseError> {
    let rank = u32::try_from(rank).map_err(|_| ParseError {
        position: pos,
        message: "rank out of range".into(),
    })?;
    GroupId::lie(family, rank, q).map_err(|e| ParseError {
        position: pos,
        message: e.to_string(),
    })
}

/// Classical-notation names: `L(n,q)`, `U(n,q)`, `Sp(2n,q)`, `S(2n,q)`,
/// `O(2n+1,q)`, `O+(2n,q)`, `O-(2n,q)`.
fn parse_classical_notation(cur: &mut Cursor<'_>) -> Option<Result<GroupId, ParseError>> {
    const FORMS: [&str; 7] = ["Sp(", "S(", "L(", "U(", "O+(", "O-(", "O("];
    let head = FORMS.into_iter().find(|f| cur.rest().starts_with(f))?;
    let start = cur.pos;
    cur.pos += head.len() - 1;
    Some((|| {
        let args = cur.args()?;
        let [(dim_at, dim), (q_at, q)] = args[..] else {
            return Err(ParseError {
                position: start,
                message: format!("{}dimension,q) takes two parameters", head),
            });
        };
        let bad_dim = |what: &str| ParseError {
            position: dim_at,
            message: format!("dimension {dim} is not {what}"),
        };
        let g = match head {
            "Sp(" | "S(" if dim % 2 == 0 => lie_at(start, LieFamily::C, dim / 2, q),
            "Sp(" | "S(" => Err(bad_dim("even")),
            "L(" if dim >= 2 => lie_at(start, LieFamily::A, dim - 1, q),
            "U(" if dim >= 3 => lie_at(start, LieFamily::TwistedA, dim - 1, q),
            "L(" | "U(" => Err(bad_dim("large enough")),
            "O(" if dim % 2 == 1 => lie_at(start, LieFamily::B, dim / 2, q),
            "O(" => Err(bad_dim("odd")),
            "O+(" if dim % 2 == 0 => lie_at(start, LieFamily::D, dim / 2, q),
            "O-(" if dim % 2 == 0 => lie_at(start, LieFamily::TwistedD, dim / 2, q),
            _ => Err(bad_dim("even")),
        }?;
        let _ = q_at;
        cur.at_end()?;
        Ok(g)
    })())
}

fn parse_group(src: &str) -> Result<GroupId, ParseError> {
    let trimmed = src.trim();
    let offset = src.len() - src.trim_start().len();
    let (body, universal) = match trimmed.strip_suffix(UNIVERSAL_SUFFIX) {
        Some(b) => (b, true),
        None => (trimmed, false),
    };
    let mut cur = Cursor { src: body, pos: 0 };
    let shift = |e: ParseError| ParseError {
        position: e.position + offset,
        ..e
    };
    let g = parse_group_inner(&mut cur).map_err(shift)?;
    if !universal {
        return Ok(g);
    }
    match g {
        GroupId::Lie(l) => Ok(GroupId::Lie(LieGroup {
            version: Version::Universal,
            ..l
        })),
        _ => Err(ParseError {
            position: offset + body.len(),
            message: format!("{UNIVERSAL_SUFFIX} applies only to groups of Lie type"),
        }),
    }
}

const UNIVERSAL_SUFFIX: &str = "~univ";

fn parse_group_inner(cur: &mut Cursor<'_>) -> Result<GroupId, ParseError> {
    if cur.src.is_empty() {
        return cur.err("empty group name");
    }
    if cur.src == "Tits" || cur.src == "2F4(2)'" {
        return Ok(GroupId::Tits);
    }
    if let Some(s) = Sporadic::from_token(cur.src) {
        return Ok(GroupId::Sporadic(s));
    }
    if cur.eat("Alt") {
        let at = cur.pos;
        let n = if cur.eat("_") {
            cur.number()?
        } else {
            let args = cur.args()?;
            match args[..] {
                [(_, n)] => n,
                _ => return cur.err("Alt takes one parameter"),
            }
        };
        cur.at_end()?;
        let n = u32::try_from(n).or_else(|_| cur.err("degree out of range"))?;
        return GroupId::alternating(n).map_err(|e| ParseError {
            position: at,
            message: e.to_string(),
        });
    }
    for head in ["Z", "Cyc"] {
        if cur.rest().starts_with(&format!("{head}(")) || cur.rest().starts_with(&format!("{head}_"))
        {
            cur.eat(head);
            let at = cur.pos;
            let p = if cur.eat("_") {
                cur.number()?
            } else {
                match cur.args()?[..] {
                    [(_, p)] => p,
                    _ => return cur.err("cyclic group takes one parameter"),
                }
            };
            cur.at_end()?;
            return GroupId::cyclic(p).map_err(|e| ParseError {
                position: at,
                message: e.to_string(),
            });
        }
    }
    if let Some(res) = parse_classical_notation(cur) {
        return res;
    }
    parse_lie_notation(cur)
}

/// `A(3,2)`, `A_3(2)`, `A3(2)`, `2A(5,2)`, `G2(3)`, `3D4(2)`, `2B2(8)`, `E_8(2)`.
fn parse_lie_notation(cur: &mut Cursor<'_>) -> Result<GroupId, ParseError> {
    const SYMBOLS: [&str; 14] = [
        "2A", "2B", "2D", "2E", "2F", "2G", "3D", "A", "B", "C", "D", "E", "F", "G",
    ];
    let start = cur.pos;
    let Some(symbol) = SYMBOLS.into_iter().find(|s| cur.rest().starts_with(s)) else {
        return cur.err("unknown group name");
    };
    cur.pos += symbol.len();
    cur.eat("_");
    let rank_in_name = if cur.rest().starts_with(|c: char| c.is_ascii_digit()) {
        Some(cur.number()?)
    } else {
        None
    };
    let args = cur.args()?;
    let (rank, q) = match (rank_in_name, &args[..]) {
        (Some(r), [(_, q)]) => (r, *q),
        (None, [(_, r), (_, q)]) => (*r, *q),
        (None, [(_, q)]) if LieFamily::is_fixed_rank_symbol(symbol) && symbol != "E" => {
            let fam = LieFamily::ALL
                .into_iter()
                .find(|f| f.symbol() == symbol)
                .unwrap();
            (u64::from(fam.fixed_rank().unwrap()), *q)
        }
        _ => {
            return Err(ParseError {
                position: start,
                message: format!("{symbol}: expected '{symbol}(rank,q)' or '{symbol}_rank(q)'"),
            })
        }
    };
    cur.at_end()?;
    let rank_u32 = u32::try_from(rank).unwrap_or(u32::MAX);
    let family = LieFamily::from_symbol(symbol, rank_u32).ok_or_else(|| ParseError {
        position: start,
        message: format!("no Lie family {symbol} of rank {rank}"),
    })?;
    lie_at(start, family, rank, q)
}

impl FromStr for GroupId {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> GroupId {
        GroupId::parse_or_panic(s)
    }

    #[test]
    fn parses_all_notations() {
        let c32 = GroupId::lie(LieFamily::C, 3, 2).unwrap();
        assert_eq!(p("Sp(6,2)"), c32);
        assert_eq!(p("C(3,2)"), c32);
        assert_eq!(p("C_3(2)"), c32);
        assert_eq!(p("C3(2)"), c32);
        assert_eq!(p("S(6,2)"), c32);
        assert_eq!(p("2A(5,2)"), GroupId::lie(LieFamily::TwistedA, 5, 2).unwrap());
        assert_eq!(p("U(6,2)"), GroupId::lie(LieFamily::TwistedA, 5, 2).unwrap());
        assert_eq!(p("L(3,4)"), GroupId::lie(LieFamily::A, 2, 4).unwrap());
        assert_eq!(p("O(7,3)"), GroupId::lie(LieFamily::B, 3, 3).unwrap());
        assert_eq!(p("O+(8,2)"), GroupId::lie(LieFamily::D, 4, 2).unwrap());
        assert_eq!(p("O-(8,2)"), GroupId::lie(LieFamily::TwistedD, 4, 2).unwrap());
        assert_eq!(p("2B2(2)"), GroupId::lie(LieFamily::SuzukiB2, 2, 2).unwrap());
        assert_eq!(p("2B_2(8)"), GroupId::lie(LieFamily::SuzukiB2, 2, 8).unwrap());
        assert_eq!(p("3D4(2)"), GroupId::lie(LieFamily::TrialityD4, 4, 2).unwrap());
        assert_eq!(p("G2(3)"), GroupId::lie(LieFamily::G2, 2, 3).unwrap());
        assert_eq!(p("G(3)"), GroupId::lie(LieFamily::G2, 2, 3).unwrap());
        assert_eq!(p("E8(2)"), GroupId::lie(LieFamily::E8, 8, 2).unwrap());
        assert_eq!(p("2E_6(2)"), GroupId::lie(LieFamily::TwistedE6, 6, 2).unwrap());
        assert_eq!(p("Alt(5)"), GroupId::Alternating(5));
        assert_eq!(p("Alt_8"), GroupId::Alternating(8));
        assert_eq!(p("Z(7)"), GroupId::Cyclic(7));
        assert_eq!(p("M11"), GroupId::Sporadic(Sporadic::M11));
        assert_eq!(p("A(1,7)~univ"), GroupId::lie_universal(LieFamily::A, 1, 7).unwrap());
        assert!("M11~univ".parse::<GroupId>().is_err());
        assert_eq!(p("M_11"), GroupId::Sporadic(Sporadic::M11));
        assert_eq!(p("Fi24'"), GroupId::Sporadic(Sporadic::Fi24));
        assert_eq!(p("O'N"), GroupId::Sporadic(Sporadic::ON));
        assert_eq!(p("B"), GroupId::Sporadic(Sporadic::B));
        assert_eq!(p("M"), GroupId::Sporadic(Sporadic::M));
        assert_eq!(p("Tits"), GroupId::Tits);
        assert_eq!(p("  M12 "), GroupId::Sporadic(Sporadic::M12));
    }

    #[test]
    fn display_round_trips_through_parser() {
        for s in ["C_3(2)", "2A_5(2)", "3D_4(2)", "2B_2(8)", "E_8(2)", "Alt_6", "Fi_24'", "Tits"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = "Sp(5,2)".parse::<GroupId>().unwrap_err();
        assert_eq!(e.position, 3);
        let e = "A(3,6)".parse::<GroupId>().unwrap_err();
        assert!(e.message.contains("prime power"), "{e}");
        let e = "Alt(5".parse::<GroupId>().unwrap_err();
        assert_eq!(e.position, 5);
        let e = "Q(2)".parse::<GroupId>().unwrap_err();
        assert_eq!(e.position, 0);
        let e = "2B2(4)".parse::<GroupId>().unwrap_err();
        assert!(e.message.contains("2^(2m+1)"), "{e}");
        let e = "C(3,2)x".parse::<GroupId>().unwrap_err();
        assert_eq!(e.position, 6);
        assert!("Z(6)".parse::<GroupId>().is_err());
        assert!("E(5,2)".parse::<GroupId>().is_err());
        assert!("A(0,2)".parse::<GroupId>().is_err());
    }

    #[test]
    fn rank_aliases_are_accepted_but_not_below() {
        assert!(GroupId::lie(LieFamily::C, 2, 3).is_ok());
        assert!(GroupId::lie(LieFamily::TwistedD, 3, 2).is_ok());
        assert!(GroupId::lie(LieFamily::D, 2, 2).is_err());
        assert!(GroupId::lie(LieFamily::TwistedA, 1, 2).is_err());
        assert!(GroupId::lie(LieFamily::ReeG2, 2, 9).is_err());
        assert!(GroupId::lie(LieFamily::ReeG2, 2, 27).is_ok());
    }
}
