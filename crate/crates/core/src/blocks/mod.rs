//! Catalog of model manifolds: exact characteristic numbers, marked tori and
//! surfaces, and either complement presentations or asserted group facts.

mod product;
mod sporadic;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpgroup::{commutator, Presentation, Word};
use crate::invariants::CharNumbers;

pub use product::product_surface_complement;
pub use sporadic::{sporadic_lookup, SPORADIC};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TorusKind {
    Lagrangian,
    Symplectic,
}

/// Meridian and the two push-offs of a marked torus, as words in the owning
/// complement presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusWords {
    pub meridian: Word,
    pub m: Word,
    pub l: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusMarker {
    pub name: String,
    pub kind: TorusKind,
    /// Absent for tori of axiom blocks that carry no presentation.
    pub words: Option<TorusWords>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Duality {
    pub surface: String,
    pub intersections: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceMarker {
    pub name: String,
    pub genus: u32,
    pub square: i64,
    /// Images of the standard generators a1, b1, ..., ag, bg, when known.
    pub pi1_images: Option<Vec<Word>>,
    /// True when the meridian is known to be null-homotopic in the complement.
    pub meridian_trivial: bool,
    pub dual: Option<Duality>,
}

/// Marker arguments name a single marker or several joined by `+`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "fact", content = "marker")]
pub enum Fact {
    Minimal,
    RelativelyMinimalAlong(String),
    OddSquareSurfaceDisjointFromTori,
    SimplyConnected,
    SimplyConnectedComplementOf(String),
    Pi1IsZ,
    Pi1SurjectionFrom(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub citation: String,
    pub char: CharNumbers,
    /// Complement of the marked tori. `None` for axiom blocks.
    pub complement_presentation: Option<Presentation>,
    /// False when the relator list is only known to hold, so the group it
    /// presents surjects onto the true one.
    pub presentation_complete: bool,
    /// Relators of the ambient closed manifold that become valid once every
    /// marked torus meridian is trivial.
    pub ambient_relators: Vec<Word>,
    pub tori: Vec<TorusMarker>,
    pub surfaces: Vec<SurfaceMarker>,
    pub facts: Vec<Fact>,
}

impl Block {
    pub fn torus(&self, name: &str) -> Option<&TorusMarker> {
        self.tori.iter().find(|t| t.name == name)
    }

    pub fn surface(&self, name: &str) -> Option<&SurfaceMarker> {
        self.surfaces.iter().find(|s| s.name == name)
    }

    pub fn has_fact(&self, f: &Fact) -> bool {
        self.facts.contains(f)
    }

    pub fn is_axiom(&self) -> bool {
        self.complement_presentation.is_none()
    }

    /// Label used for display, e.g. `E(2)`.
    pub fn label(&self) -> &str {
        &self.name
    }
}

pub(crate) fn w(text: &str) -> Word {
    Word::parse(text)
}

pub(crate) fn lagrangian(name: &str, meridian: Word, m: Word, l: Word) -> TorusMarker {
    TorusMarker { name: name.into(), kind: TorusKind::Lagrangian, words: Some(TorusWords { meridian, m, l }) }
}

fn surface(name: &str, genus: u32, square: i64, images: Option<Vec<Word>>, meridian_trivial: bool) -> SurfaceMarker {
    SurfaceMarker { name: name.into(), genus, square, pi1_images: images, meridian_trivial, dual: None }
}

fn abelian_pair(a: &str, b: &str) -> Presentation {
    Presentation::new([a, b], [commutator(&Word::gen(a), &Word::gen(b))]).expect("distinct generators")
}

/// Every name accepted by [`catalog`], with the parameter it needs if any.
pub const CATALOG_NAMES: &[(&str, Option<&str>)] = &[
    ("B", None),
    ("C", None),
    ("D", None),
    ("A", None),
    ("E", Some("k")),
    ("E'", Some("k")),
    ("Z", None),
    ("ProductComplement", Some("f,g")),
    ("Xtilde35", None),
    ("H_lefschetz", None),
    ("Barlow", None),
    ("StipsiczSzabo", None),
    ("S11", None),
    ("R21", None),
    ("R22", None),
    ("X3_12", None),
    ("X5_14", None),
    ("X5_12", None),
    ("X5_10", None),
];

/// Looks up a block. `E` and `E'` take `[k]` with k >= 1; `ProductComplement`
/// takes `[f, g]`; everything else takes no parameters.
pub fn catalog(name: &str, params: &[i64]) -> Result<Block> {
    let no_params = || -> Result<()> {
        if params.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidParameter { block: name.into(), reason: "takes no parameters".into() })
        }
    };
    match name {
        "B" => no_params().map(|_| block_b()),
        "C" => no_params().map(|_| block_c()),
        "D" => no_params().map(|_| block_d()),
        "A" => no_params().map(|_| block_a()),
        "E" | "E'" => {
            let k = single_param(name, params)?;
            if k < 1 {
                return Err(Error::InvalidParameter { block: name.into(), reason: format!("k = {k} < 1") });
            }
            Ok(if name == "E" { elliptic(k) } else { elliptic_log_transformed(k) })
        }
        "Z" => no_params().map(|_| block_z()),
        "ProductComplement" => match params {
            [f, g] => {
                let (f, g) = (param_u32(name, *f)?, param_u32(name, *g)?);
                product::product_block(f, g)
            }
            _ => Err(Error::InvalidParameter { block: name.into(), reason: "expects [f, g]".into() }),
        },
        "Xtilde35" => no_params().map(|_| xtilde35()),
        "H_lefschetz" => no_params().map(|_| h_lefschetz()),
        _ => match sporadic::by_name(name) {
            Some(b) => no_params().map(|_| b),
            None => Err(Error::UnknownBlock(name.into())),
        },
    }
}

fn single_param(name: &str, params: &[i64]) -> Result<i64> {
    match params {
        [k] => Ok(*k),
        _ => Err(Error::InvalidParameter { block: name.into(), reason: "expects [k]".into() }),
    }
}

fn param_u32(name: &str, v: i64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::InvalidParameter { block: name.into(), reason: format!("{v} is out of range") })
}

fn block_b() -> Block {
    let one = Word::identity();
    let t1 = w("t1");
    let t2 = w("t2");
    let mut f = surface("F", 2, 0, Some(vec![one.clone(), one.clone(), one.clone(), t2.clone()]), true);
    f.dual = Some(Duality { surface: "H1".into(), intersections: 1 });
    let h1 = surface("H1", 1, -1, Some(vec![one.clone(), t1.clone()]), false);
    let mut g = surface("G", 2, 0, None, false);
    g.dual = Some(Duality { surface: "F".into(), intersections: 1 });
    Block {
        name: "B".into(),
        citation: "telescoping triple with Lagrangian tori T1, T2; pi_1 data recorded as input".into(),
        char: CharNumbers::new(6, -2),
        complement_presentation: Some(abelian_pair("t1", "t2")),
        presentation_complete: true,
        ambient_relators: vec![],
        tori: vec![lagrangian("T1", one.clone(), one.clone(), t2.clone()), lagrangian("T2", one, t1, t2)],
        surfaces: vec![f, h1, g],
        facts: vec![Fact::Minimal],
    }
}

fn block_c() -> Block {
    let one = Word::identity();
    Block {
        name: "C".into(),
        citation: "telescoping triple from a torus bundle construction; pi_1 data recorded as input".into(),
        char: CharNumbers::new(8, -4),
        complement_presentation: Some(abelian_pair("y", "a2")),
        presentation_complete: true,
        ambient_relators: vec![],
        tori: vec![lagrangian("T1", one.clone(), one.clone(), w("a2")), lagrangian("T2", one, w("y"), w("a2"))],
        surfaces: vec![surface("E1", 1, -1, None, false)],
        facts: vec![Fact::Minimal],
    }
}

fn block_d() -> Block {
    let one = Word::identity();
    Block {
        name: "D".into(),
        citation: "telescoping triple from a torus bundle construction; pi_1 data recorded as input".into(),
        char: CharNumbers::new(10, -6),
        complement_presentation: Some(abelian_pair("s1", "t1")),
        presentation_complete: true,
        ambient_relators: vec![],
        tori: vec![lagrangian("T1", one.clone(), w("s1"), w("s1^-1")), lagrangian("T2", one, w("t1"), w("s1"))],
        surfaces: vec![surface("E1", 1, -1, None, false)],
        facts: vec![Fact::Minimal],
    }
}

fn block_a() -> Block {
    let mut a = block_b();
    let one = Word::identity();
    a.name = "A".into();
    a.citation = "blow-up of B with the resolved genus 3 surface".into();
    a.char = CharNumbers::new(7, -3);
    a.surfaces =
        vec![surface("F3", 3, 0, Some(vec![one.clone(), one.clone(), one.clone(), w("t2"), one, w("t1")]), true)];
    a.facts = vec![Fact::RelativelyMinimalAlong("F3".into())];
    a
}

fn elliptic(k: i64) -> Block {
    let mut facts = vec![Fact::SimplyConnectedComplementOf("Tf".into())];
    facts.push(if k >= 2 { Fact::Minimal } else { Fact::RelativelyMinimalAlong("Tf".into()) });
    Block {
        name: format!("E({k})"),
        citation: "elliptic surface E(k); the fiber has simply connected complement".into(),
        char: CharNumbers::new(12 * k, -8 * k),
        complement_presentation: None,
        presentation_complete: false,
        ambient_relators: vec![],
        tori: vec![TorusMarker { name: "Tf".into(), kind: TorusKind::Symplectic, words: None }],
        surfaces: vec![],
        facts,
    }
}

fn elliptic_log_transformed(k: i64) -> Block {
    Block {
        name: format!("E'({k})"),
        citation: "Gompf: E(k) with log transforms of orders 2 and 3".into(),
        char: CharNumbers::new(12 * k, -8 * k),
        complement_presentation: None,
        presentation_complete: false,
        ambient_relators: vec![],
        tori: vec![],
        surfaces: vec![],
        facts: vec![Fact::SimplyConnected, Fact::Minimal, Fact::OddSquareSurfaceDisjointFromTori],
    }
}

fn block_z() -> Block {
    let gens = ["x1", "y1", "x2", "y2", "a1", "b1", "a2", "b2"];
    let presentation = Presentation::free(gens).expect("distinct generators");
    let c = |u: &str, v: &str| commutator(&w(u), &w(v));
    let tori = vec![
        lagrangian("S1", c("b1^-1", "y1^-1"), w("x1"), w("a1")),
        lagrangian("S2", c("x1^-1", "b1"), w("y1"), w("b1 a1 b1^-1")),
        lagrangian("S3", c("b2^-1", "y1^-1"), w("x1"), w("a2")),
        lagrangian("S4", c("x1^-1", "b2"), w("y1"), w("b2 a2 b2^-1")),
        lagrangian("S5", c("b1 a1^-1 b1^-1", "y2^-1"), w("x2"), w("b1^-1")),
        lagrangian("S6", c("x2^-1", "b1 a1 b1^-1"), w("y2"), w("b1 a1 b1^-1 a1^-1 b1^-1")),
        lagrangian("S7", c("b2 a2^-1 b2^-1", "y2^-1"), w("x2"), w("b2^-1")),
        lagrangian("S8", c("x2^-1", "b2 a2 b2^-1"), w("y2"), w("b2 a2 b2^-1 a2^-1 b2^-1")),
    ];
    Block {
        name: "Z".into(),
        citation: "product of two genus 2 surfaces with eight Lagrangian tori".into(),
        char: CharNumbers::new(4, 0),
        complement_presentation: Some(presentation),
        presentation_complete: false,
        ambient_relators: product::ambient_relators(2, 2),
        tori,
        surfaces: vec![],
        facts: vec![Fact::Minimal],
    }
}

fn xtilde35() -> Block {
    Block {
        name: "Xtilde35".into(),
        citation: "exotic 3CP2#5(-CP2) with two symplectic tori".into(),
        char: CharNumbers::new(10, -2),
        complement_presentation: None,
        presentation_complete: false,
        ambient_relators: vec![],
        tori: vec![
            TorusMarker { name: "T3".into(), kind: TorusKind::Symplectic, words: None },
            TorusMarker { name: "T4".into(), kind: TorusKind::Symplectic, words: None },
        ],
        surfaces: vec![],
        facts: vec![Fact::Minimal, Fact::SimplyConnectedComplementOf("T3+T4".into())],
    }
}

/// Generator names used for the images of the Lefschetz fiber and section.
pub fn lefschetz_generators() -> (Vec<String>, Vec<String>) {
    let fiber = (1..=32).map(|i| format!("f{i}")).collect();
    let section = (1..=4).map(|i| format!("s{i}")).collect();
    (fiber, section)
}

fn h_lefschetz() -> Block {
    let (fiber, section) = lefschetz_generators();
    let images = |names: &[String]| names.iter().map(|n| Word::gen(n)).collect::<Vec<_>>();
    let mut fib = surface("fiber", 16, 0, Some(images(&fiber)), false);
    fib.dual = Some(Duality { surface: "section".into(), intersections: 1 });
    let sec = surface("section", 2, -1, Some(images(&section)), false);
    Block {
        name: "H_lefschetz".into(),
        citation: "Stipsicz: genus 16 Lefschetz fibration over a genus 2 surface with a -1 section".into(),
        char: CharNumbers::new(75, 25),
        complement_presentation: None,
        presentation_complete: false,
        ambient_relators: vec![],
        tori: vec![],
        surfaces: vec![fib, sec],
        facts: vec![Fact::Minimal, Fact::Pi1SurjectionFrom("fiber+section".into())],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::AbelianInvariants;

    #[test]
    fn b_matches_table() {
        let b = catalog("B", &[]).unwrap();
        assert_eq!(b.char, CharNumbers::new(6, -2));
        let t1 = b.torus("T1").unwrap().words.clone().unwrap();
        assert!(t1.meridian.is_identity() && t1.m.is_identity());
        assert_eq!(t1.l, w("t2"));
        let t2 = b.torus("T2").unwrap().words.clone().unwrap();
        assert_eq!((t2.m, t2.l), (w("t1"), w("t2")));
        assert_eq!(b.surface("F").unwrap().pi1_images.as_ref().unwrap().len(), 4);
        assert!(b.surface("G").unwrap().pi1_images.is_none());
    }

    #[test]
    fn elliptic_families() {
        let e = catalog("E'", &[2]).unwrap();
        assert_eq!(e.char, CharNumbers::new(24, -16));
        assert!(e.has_fact(&Fact::SimplyConnected));
        assert!(catalog("E", &[1]).unwrap().has_fact(&Fact::RelativelyMinimalAlong("Tf".into())));
        assert!(catalog("E", &[2]).unwrap().has_fact(&Fact::Minimal));
        assert!(matches!(catalog("E'", &[0]), Err(Error::InvalidParameter { .. })));
        assert!(matches!(catalog("E", &[]), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn z_tori() {
        let z = catalog("Z", &[]).unwrap();
        assert_eq!(z.char, CharNumbers::new(4, 0));
        let s5 = z.torus("S5").unwrap().words.clone().unwrap();
        assert_eq!(s5.m, w("x2"));
        assert_eq!(s5.l, w("b1^-1"));
        // each meridian is the commutator of the listed pair
        assert_eq!(z.torus("S1").unwrap().words.as_ref().unwrap().meridian, w("b1^-1 y1^-1 b1 y1"));
        for t in &z.tori {
            let p = z.complement_presentation.as_ref().unwrap();
            let words = t.words.as_ref().unwrap();
            for x in [&words.meridian, &words.m, &words.l] {
                p.check_word(x).unwrap();
            }
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(catalog("Q", &[]), Err(Error::UnknownBlock("Q".into())));
        assert!(catalog("B", &[1]).is_err());
    }

    #[test]
    fn every_entry_is_symplectic_and_above_noether() {
        for (name, param) in CATALOG_NAMES {
            let params: Vec<i64> = match param {
                None => vec![],
                Some("k") => vec![3],
                Some(_) => vec![2, 2],
            };
            let b = catalog(name, &params).unwrap();
            assert!(b.char.symplectic_parity(), "{name}");
            assert!(b.char.c1sq() >= 0, "{name}");
        }
    }

    #[test]
    fn telescoping_blocks_have_rank_two_h1_and_trivial_meridians() {
        for name in ["B", "C", "D"] {
            let b = catalog(name, &[]).unwrap();
            let p = b.complement_presentation.as_ref().unwrap();
            assert_eq!(p.abelianization(), AbelianInvariants { rank: 2, torsion: vec![] }, "{name}");
            for t in &b.tori {
                assert!(t.words.as_ref().unwrap().meridian.is_identity());
            }
        }
    }
}
