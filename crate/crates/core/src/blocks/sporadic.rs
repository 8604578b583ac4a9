//! Small simply connected minimal symplectic manifolds taken from the
//! literature, keyed by (c1^2, chi_h).

use super::{Block, Fact, TorusKind, TorusMarker};
use crate::invariants::CharNumbers;

pub struct Sporadic {
    pub name: &'static str,
    pub c: i64,
    pub chi: i64,
    pub e: i64,
    pub sigma: i64,
    /// Square-zero symplectic torus with simply connected complement.
    pub torus: Option<&'static str>,
    pub citation: &'static str,
}

pub const SPORADIC: &[Sporadic] = &[
    Sporadic {
        name: "Barlow",
        c: 1,
        chi: 1,
        e: 11,
        sigma: -7,
        torus: None,
        citation: "Barlow surface; minimality by Kotschick",
    },
    Sporadic {
        name: "StipsiczSzabo",
        c: 3,
        chi: 1,
        e: 9,
        sigma: -5,
        torus: None,
        citation: "Stipsicz-Szabo exotic CP2#6(-CP2)",
    },
    Sporadic {
        name: "S11",
        c: 1,
        chi: 2,
        e: 23,
        sigma: -15,
        torus: Some("T"),
        citation: "Gompf's S_{1,1}; minimality by Stipsicz",
    },
    Sporadic {
        name: "R21",
        c: 3,
        chi: 2,
        e: 21,
        sigma: -13,
        torus: None,
        citation: "Gompf's R_{2,1}; minimality by J. Park",
    },
    Sporadic {
        name: "R22",
        c: 5,
        chi: 2,
        e: 19,
        sigma: -11,
        torus: None,
        citation: "Gompf's R_{2,2}; minimality by Szabo",
    },
    Sporadic {
        name: "X3_12",
        c: 7,
        chi: 2,
        e: 17,
        sigma: -9,
        torus: Some("T"),
        citation: "exotic 3CP2#12(-CP2) containing the torus T_{2,4}",
    },
    Sporadic {
        name: "X5_14",
        c: 15,
        chi: 3,
        e: 21,
        sigma: -9,
        torus: None,
        citation: "exotic 5CP2#14(-CP2) from B and Luttinger surgery",
    },
    Sporadic {
        name: "X5_12",
        c: 17,
        chi: 3,
        e: 19,
        sigma: -7,
        torus: None,
        citation: "exotic 5CP2#12(-CP2) from B and Luttinger surgery",
    },
    Sporadic {
        name: "X5_10",
        c: 19,
        chi: 3,
        e: 17,
        sigma: -5,
        torus: None,
        citation: "exotic 5CP2#10(-CP2) from B and Luttinger surgery",
    },
];

fn to_block(s: &Sporadic) -> Block {
    let mut facts = vec![Fact::SimplyConnected, Fact::Minimal, Fact::OddSquareSurfaceDisjointFromTori];
    let tori = match s.torus {
        Some(t) => {
            facts.push(Fact::SimplyConnectedComplementOf(t.into()));
            vec![TorusMarker { name: t.into(), kind: TorusKind::Symplectic, words: None }]
        }
        None => vec![],
    };
    Block {
        name: s.name.into(),
        citation: s.citation.into(),
        char: CharNumbers::new(s.e, s.sigma),
        complement_presentation: None,
        presentation_complete: false,
        ambient_relators: vec![],
        tori,
        surfaces: vec![],
        facts,
    }
}

pub(crate) fn by_name(name: &str) -> Option<Block> {
    SPORADIC.iter().find(|s| s.name == name).map(to_block)
}

pub fn sporadic_lookup(c: i64, chi: i64) -> Option<Block> {
    SPORADIC.iter().find(|s| s.c == c && s.chi == chi).map(to_block)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::char_from_c_chi;

    #[test]
    fn lookups() {
        let s = sporadic_lookup(1, 2).unwrap();
        assert_eq!((s.name.as_str(), s.char), ("S11", CharNumbers::new(23, -15)));
        assert!(s.torus("T").is_some());
        assert_eq!(sporadic_lookup(19, 3).unwrap().char, CharNumbers::new(17, -5));
        assert!(sporadic_lookup(2, 2).is_none());
    }

    #[test]
    fn table_is_consistent() {
        for s in SPORADIC {
            assert_eq!(char_from_c_chi(s.c, s.chi), CharNumbers::new(s.e, s.sigma), "{}", s.name);
        }
    }
}
