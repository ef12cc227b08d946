//! Published coalgebra and algebra types of the catalog instances.

use polyhopf::reptheory::TypeMultiset;

fn t(s: &str) -> TypeMultiset {
    s.parse().expect("well-formed table entry")
}

fn dihedral_n(rest: &str) -> Option<usize> {
    rest.strip_prefix('D')?.parse().ok()
}

/// Irreducible degrees of the binary cover, i.e. the coalgebra type of k^{Γ̃}.
fn cover_type(letter: &str) -> Option<TypeMultiset> {
    match letter {
        "T" => Some(t("(1, 3; 2, 3; 3, 1)")),
        "O" => Some(t("(1, 2; 2, 3; 3, 2; 4, 1)")),
        "I" => Some(t("(1, 1; 2, 2; 3, 2; 4, 2; 5, 1; 6, 1)")),
        _ => dihedral_n(letter).map(|n| TypeMultiset(vec![(1, 4), (2, n - 1)])),
    }
}

fn cover_order(letter: &str) -> Option<usize> {
    match letter {
        "T" => Some(24),
        "O" => Some(48),
        "I" => Some(120),
        _ => dihedral_n(letter).map(|n| 4 * n),
    }
}

fn deformation_letter(name: &str) -> Option<&str> {
    if name == "H8" {
        return Some("D2");
    }
    let rest = name.strip_prefix("A2").or_else(|| name.strip_prefix("B2"))?;
    cover_type(rest).map(|_| rest)
}

pub fn coalgebra_type(name: &str) -> Option<TypeMultiset> {
    if let Some(l) = deformation_letter(name) {
        return cover_type(l);
    }
    if let Some(l) = name.strip_prefix("FUN2") {
        return cover_type(l);
    }
    if let Some(l) = name.strip_prefix("GRP2") {
        return cover_order(l).map(|o| TypeMultiset(vec![(1, o)]));
    }
    match name {
        "TWA5" => Some(t("(1, 12; 4, 3)")),
        "TWD3D5" => Some(t("(1, 4; 2, 6; 4, 2)")),
        _ => None,
    }
}

pub fn algebra_type(name: &str) -> Option<TypeMultiset> {
    match name {
        "A2T" => return Some(t("(1, 4; 2, 5)")),
        "B2T" => return Some(t("(1, 8; 2, 4)")),
        "A2O" => return Some(t("(1, 8; 2, 10)")),
        "B2O" => return Some(t("(1, 16; 2, 8)")),
        "B2I" => return Some(t("(1, 8; 2, 28)")),
        "TWA5" => return Some(t("(1, 1; 3, 2; 4, 1; 5, 1)")),
        _ => {}
    }
    if let Some(l) = deformation_letter(name) {
        return dihedral_n(l).map(|n| TypeMultiset(vec![(1, 4), (2, n - 1)]));
    }
    if let Some(l) = name.strip_prefix("FUN2") {
        return cover_order(l).map(|o| TypeMultiset(vec![(1, o)]));
    }
    name.strip_prefix("GRP2").and_then(cover_type)
}

/// Coalgebra types of k^Γ for the polyhedral groups.
pub fn function_algebra_type(gamma: &str) -> Option<TypeMultiset> {
    match gamma {
        "A4" => Some(t("(1, 3; 3, 1)")),
        "S4" => Some(t("(1, 2; 2, 1; 3, 2)")),
        "A5" => Some(t("(1, 1; 3, 2; 4, 1; 5, 1)")),
        _ => {
            let n = dihedral_n(gamma)?;
            Some(if n % 2 == 1 { TypeMultiset(vec![(1, 2), (2, (n - 1) / 2)]) } else { TypeMultiset(vec![(1, 4), (2, n / 2 - 1)]) })
        }
    }
}
