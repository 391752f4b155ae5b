use std::sync::OnceLock;

use super::term::Identity;
use crate::error::{Error, Result};

/// Name and defining equation chain of every built-in identity.
const DEFINITIONS: &[(&str, &str)] = &[
    ("A3L", "[[abc]cd] = [[ab[bcd]][bcd]d]"),
    ("A3R", "[ab[bcd]] = [a[abc][[abc]cd]]"),
    ("assoc12", "[[abc]de] = [a[bcd]e]"),
    ("assoc23", "[a[bcd]e] = [ab[cde]]"),
    ("assoc_full", "[[abc]de] = [a[bcd]e] = [ab[cde]]"),
    ("idempotent", "[aaa] = a"),
    ("semicommutative", "[abc] = [cba]"),
    ("commutative", "[abc] = [bac] = [acb] = [cba]"),
    ("malcev", "[abb] = [bba] = a"),
    (
        "entropic",
        "[[a1a2a3][b1b2b3][c1c2c3]] = [[a1b1c1][a2b2c2][a3b3c3]]",
    ),
    ("sk1", "[a'aa] = [aa'a] = [aaa'] = a"),
    ("sk2", "[baa'] = [ba'a] = [aa'b] = [a'ab] = b"),
    ("sk3", "[abc]' = [c'b'a']"),
    ("sk4", "a'' = a"),
    ("eq22", "[abb] = a' = [bba]"),
    ("eq4", "[a'bc] = [ab'c] = [abc']"),
    ("eq23", "[abb] = a'"),
    ("a1_exchange", "[[abc]de] = [[adc]be]"),
    ("a2_exchange", "[a[bcd]e] = [a[bed]c]"),
    ("a3_neutral", "[a'ax] = [xaa'] = x"),
    ("dud80", "[aba'] = b"),
    ("all_neutral", "[eea] = [eae] = [aee] = a"),
    // Mal'cev laws of a derived operation P, written with P as the bracket.
    ("malcev_1M", "[[xyz]zt] = [xyt]"),
    ("malcev_2M", "[xy[yzt]] = [xzt]"),
];

/// The built-in identities in fixed catalog order.
pub fn catalog() -> &'static [Identity] {
    static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        DEFINITIONS
            .iter()
            .map(|(name, text)| Identity::parse(name, text).expect("catalog identity parses"))
            .collect()
    })
}

pub fn catalog_identity(name: &str) -> Result<&'static Identity> {
    catalog()
        .iter()
        .find(|id| id.name() == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete_and_parses() {
        let names: Vec<&str> = catalog().iter().map(Identity::name).collect();
        assert_eq!(names.len(), 24);
        assert_eq!(catalog_identity("entropic").unwrap().nvars(), 9);
        assert_eq!(catalog_identity("A3L").unwrap().nvars(), 4);
        assert_eq!(catalog_identity("sk4").unwrap().nvars(), 1);
        assert!(catalog_identity("nope").is_err());
        for (name, text) in DEFINITIONS {
            let printed = catalog_identity(name).unwrap().to_string();
            assert_eq!(printed.replace(' ', ""), text.replace(' ', ""));
        }
    }
}
