use super::catalog::catalog_identity;
use super::check::{check_identity, CheckMode, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TUPLE_BUDGET};
use super::table::check_quasigroup;
use super::TernaryOps;

/// Budgets for the identity checks behind a property report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckPolicy {
    pub tuple_budget: u128,
    pub samples: u64,
    pub seed: u64,
}

impl Default for CheckPolicy {
    fn default() -> Self {
        CheckPolicy {
            tuple_budget: DEFAULT_TUPLE_BUDGET,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

impl CheckPolicy {
    pub fn mode(&self) -> CheckMode {
        CheckMode::Auto {
            budget: self.tuple_budget,
            samples: self.samples,
            seed: self.seed,
        }
    }
}

/// Report keys in rendering order.
pub const PROPERTY_NAMES: [&str; 12] = [
    "quasigroup",
    "associative",
    "ternary_group",
    "knot_theoretic",
    "semicommutative",
    "entropic",
    "idempotent",
    "commutative",
    "malcev",
    "eq23",
    "all_elements_neutral",
    "derived_from_binary_group",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flag {
    pub value: bool,
    /// Some contributing identity was only sampled.
    pub sampled: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    entries: Vec<(&'static str, Flag)>,
    /// Violated implications between the flags; empty unless something is
    /// wrong with the checker itself.
    pub findings: Vec<String>,
}

impl PropertyReport {
    pub fn entries(&self) -> &[(&'static str, Flag)] {
        &self.entries
    }

    pub fn flag(&self, name: &str) -> Flag {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, f)| *f)
            .unwrap_or_else(|| panic!("unknown property {name}"))
    }

    pub fn get(&self, name: &str) -> bool {
        self.flag(name).value
    }
}

fn check(s: &dyn TernaryOps, name: &str, policy: &CheckPolicy) -> Flag {
    let id = catalog_identity(name).expect("catalog identity");
    match check_identity(s, id, policy.mode()) {
        Ok(r) => Flag {
            value: r.holds,
            sampled: r.sampled,
        },
        // Skew-based identities are false when the skew is undefined.
        Err(_) => Flag {
            value: false,
            sampled: false,
        },
    }
}

fn and(a: Flag, b: Flag) -> Flag {
    Flag {
        value: a.value && b.value,
        sampled: a.sampled || b.sampled,
    }
}

/// Evaluates the named structural properties of `s`.
pub fn property_report(s: &dyn TernaryOps, policy: &CheckPolicy) -> PropertyReport {
    let quasigroup = Flag {
        value: check_quasigroup(s),
        sampled: false,
    };
    let associative = check(s, "assoc_full", policy);
    let ternary_group = and(quasigroup, associative);
    let knot_theoretic = and(
        ternary_group,
        and(check(s, "A3L", policy), check(s, "A3R", policy)),
    );
    let semicommutative = check(s, "semicommutative", policy);
    let entropic = check(s, "entropic", policy);
    let idempotent = check(s, "idempotent", policy);
    let commutative = check(s, "commutative", policy);
    let malcev = check(s, "malcev", policy);
    let eq23 = check(s, "eq23", policy);
    let all_neutral = check(s, "all_neutral", policy);
    // Commutative Mal'cev ternary groups are exactly those derived from a
    // binary (elementary 2-) group.
    let derived = and(ternary_group, and(commutative, malcev));

    let entries = vec![
        ("quasigroup", quasigroup),
        ("associative", associative),
        ("ternary_group", ternary_group),
        ("knot_theoretic", knot_theoretic),
        ("semicommutative", semicommutative),
        ("entropic", entropic),
        ("idempotent", idempotent),
        ("commutative", commutative),
        ("malcev", malcev),
        ("eq23", eq23),
        ("all_elements_neutral", all_neutral),
        ("derived_from_binary_group", derived),
    ];

    let mut findings = Vec::new();
    let exact = |f: &[Flag]| f.iter().all(|x| !x.sampled);
    if ternary_group.value && exact(&[ternary_group]) {
        let sc_eq23 = and(semicommutative, eq23);
        if exact(&[knot_theoretic, sc_eq23]) && knot_theoretic.value != sc_eq23.value {
            findings.push("knot_theoretic differs from semicommutative and eq23".into());
        }
        if exact(&[semicommutative, entropic]) && semicommutative.value != entropic.value {
            findings.push("semicommutative differs from entropic".into());
        }
        if exact(&[idempotent, malcev]) && idempotent.value != malcev.value {
            findings.push("idempotent differs from malcev".into());
        }
        if idempotent.value && exact(&[knot_theoretic]) && !knot_theoretic.value {
            findings.push("idempotent ternary group is not knot_theoretic".into());
        }
        let eq22 = check(s, "eq22", policy);
        let eq4 = check(s, "eq4", policy);
        if exact(&[eq22, eq4]) && eq22.value != eq4.value {
            findings.push("eq22 differs from eq4".into());
        }
    }
    let a1 = check(s, "a1_exchange", policy);
    let by_neutral = and(a1, all_neutral);
    let kt_derived = and(knot_theoretic, derived);
    if exact(&[by_neutral, kt_derived]) && by_neutral.value != kt_derived.value {
        findings.push(
            "derived_from_binary_group differs from a1_exchange with every element neutral".into(),
        );
    }
    PropertyReport { entries, findings }
}
