use super::family::{LieFamily, Version};
use super::group::{GroupId, LieGroup};
use super::orders::center_divisor;

fn one_step(g: GroupId) -> GroupId {
    use LieFamily::*;
    let GroupId::Lie(l) = g else { return g };
    let (fam, n, q) = (l.family(), l.rank(), l.q());
    if l.version() == Version::Universal {
        return if center_divisor(fam, n, q) == 1 {
            GroupId::Lie(l.with_version(Version::Adjoint))
        } else {
            g
        };
    }
    let lie = |f, r, q| GroupId::lie(f, r, q).expect("alias targets are valid");
    match (fam, n, q) {
        (A, 1, 4) | (A, 1, 5) => GroupId::Alternating(5),
        (A, 1, 9) => GroupId::Alternating(6),
        (A, 2, 2) => lie(A, 1, 7),
        (A, 3, 2) => GroupId::Alternating(8),
        (TwistedA, 3, 2) => lie(C, 2, 3),
        (B, 2, _) => lie(C, 2, q),
        (B, _, _) if q % 2 == 0 => lie(C, n, q),
        (D, 3, _) => lie(A, 3, q),
        (TwistedD, 3, _) => lie(TwistedA, 3, q),
        _ => g,
    }
}

/// Representative of the isomorphism class, modulo the exceptional
/// isomorphisms between small members of different families.
pub fn canonicalize(g: GroupId) -> GroupId {
    let mut cur = g;
    loop {
        let next = one_step(cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn adjoint_is_simple(l: &LieGroup) -> bool {
    use LieFamily::*;
    !matches!(
        (l.family(), l.rank(), l.q()),
        (A, 1, 2)
            | (A, 1, 3)
            | (B, 2, 2)
            | (C, 2, 2)
            | (TwistedA, 2, 2)
            | (G2, 2, 2)
            | (SuzukiB2, 2, 2)
            | (ReeG2, 2, 3)
            | (ReeF4, 4, 2)
    )
}

pub fn is_simple(g: &GroupId) -> bool {
    match g {
        GroupId::Cyclic(_) | GroupId::Sporadic(_) | GroupId::Tits => true,
        GroupId::Alternating(n) => *n >= 5,
        GroupId::Lie(l) => match l.version() {
            Version::Adjoint => adjoint_is_simple(l),
            Version::Universal => {
                center_divisor(l.family(), l.rank(), l.q()) == 1 && adjoint_is_simple(l)
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> GroupId {
        GroupId::parse_or_panic(s)
    }

    #[test]
    fn folds_listed_isomorphisms() {
        assert_eq!(canonicalize(p("A_1(4)")), p("Alt_5"));
        assert_eq!(canonicalize(p("A_1(5)")), p("Alt_5"));
        assert_eq!(canonicalize(p("A_1(9)")), p("Alt_6"));
        assert_eq!(canonicalize(p("A_2(2)")), p("A_1(7)"));
        assert_eq!(canonicalize(p("A_3(2)")), p("Alt_8"));
        assert_eq!(canonicalize(p("2A_3(2)")), p("C_2(3)"));
        assert_eq!(canonicalize(p("B_3(2)")), p("C_3(2)"));
        assert_eq!(canonicalize(p("B_2(5)")), p("C_2(5)"));
        assert_eq!(canonicalize(p("B_3(3)")), p("B_3(3)"));
        assert_eq!(canonicalize(p("D_3(2)")), p("Alt_8"));
        assert_eq!(canonicalize(p("2D_3(2)")), p("C_2(3)"));
        assert_eq!(canonicalize(p("M11")), p("M11"));
        assert_eq!(canonicalize(p("Alt_3")), p("Alt_3"));
    }

    #[test]
    fn universal_with_trivial_center_becomes_adjoint() {
        let u = GroupId::lie_universal(LieFamily::A, 1, 4).unwrap();
        assert_eq!(canonicalize(u), p("Alt_5"));
        let u = GroupId::lie_universal(LieFamily::A, 1, 7).unwrap();
        assert_eq!(canonicalize(u), u);
        assert!(!is_simple(&u));
    }

    #[test]
    fn simplicity_exceptions() {
        for s in ["A_1(2)", "A_1(3)", "B_2(2)", "C_2(2)", "2A_2(2)", "G_2(2)", "2B_2(2)", "2G_2(3)", "2F_4(2)", "Alt_4", "Alt_3"] {
            assert!(!is_simple(&p(s)), "{s}");
        }
        for s in ["Tits", "Alt_5", "2B_2(8)", "2G_2(27)", "2F_4(8)", "C_3(2)", "M", "Z_2"] {
            assert!(is_simple(&p(s)), "{s}");
        }
    }
}
