//! Complements of marked tori in a product of surfaces F x G.

use super::{lagrangian, Block, Duality, Fact, SurfaceMarker, TorusMarker};
use crate::error::{Error, Result};
use crate::fpgroup::{commutator, Presentation, Word};
use crate::invariants::CharNumbers;

fn surface_generators(f: u32, g: u32) -> (Vec<String>, Vec<String>) {
    let fs = (1..=f).flat_map(|i| [format!("x{i}"), format!("y{i}")]).collect();
    let gs = (1..=g).flat_map(|j| [format!("a{j}"), format!("b{j}")]).collect();
    (fs, gs)
}

fn surface_relator(gens: &[String]) -> Word {
    gens.chunks(2).fold(Word::identity(), |acc, p| acc.mul(&commutator(&Word::gen(&p[0]), &Word::gen(&p[1]))))
}

/// Relators of the closed product: both surface relations and every mixed
/// commutator between the two factors.
pub(crate) fn ambient_relators(f: u32, g: u32) -> Vec<Word> {
    let (fs, gs) = surface_generators(f, g);
    let mut out = vec![surface_relator(&fs)];
    if g > 0 {
        out.push(surface_relator(&gs));
    }
    for u in &fs {
        for v in &gs {
            out.push(commutator(&Word::gen(u), &Word::gen(v)));
        }
    }
    out
}

/// Free presentation on the 2f + 2g loops together with the 2g Lagrangian tori
/// `Y1xAj` and `Y2xBj`. The loops generate the complement group; its relators
/// are not all known, so the presentation is a cover.
pub fn product_surface_complement(f: u32, g: u32) -> Result<(Presentation, Vec<TorusMarker>)> {
    if f < 2 {
        return Err(Error::InvalidParameter {
            block: "ProductComplement".into(),
            reason: format!("genus f = {f} must be at least 2"),
        });
    }
    let (fs, gs) = surface_generators(f, g);
    let p = Presentation::free(fs.iter().chain(gs.iter()).cloned()).expect("distinct generators");
    let gen = |s: String| Word::gen(&s);
    let mut tori = Vec::with_capacity(2 * g as usize);
    for j in 1..=g {
        let (a, b) = (gen(format!("a{j}")), gen(format!("b{j}")));
        tori.push(lagrangian(&format!("Y1xA{j}"), commutator(&gen("x1".into()), &b), gen("y1".into()), a.clone()));
        tori.push(lagrangian(&format!("Y2xB{j}"), commutator(&gen("x2".into()), &a), gen("y2".into()), b));
    }
    Ok((p, tori))
}

pub(crate) fn product_block(f: u32, g: u32) -> Result<Block> {
    let (presentation, tori) = product_surface_complement(f, g)?;
    let (fs, gs) = surface_generators(f, g);
    let images = |names: &[String]| Some(names.iter().map(|n| Word::gen(n)).collect());
    let mut surfaces = vec![SurfaceMarker {
        name: "F".into(),
        genus: f,
        square: 0,
        pi1_images: images(&fs),
        meridian_trivial: false,
        dual: (g > 0).then(|| Duality { surface: "G".into(), intersections: 1 }),
    }];
    if g > 0 {
        surfaces.push(SurfaceMarker {
            name: "G".into(),
            genus: g,
            square: 0,
            pi1_images: images(&gs),
            meridian_trivial: false,
            dual: Some(Duality { surface: "F".into(), intersections: 1 }),
        });
    }
    let e = 4 * (i64::from(f) - 1) * (i64::from(g) - 1);
    Ok(Block {
        name: format!("ProductComplement({f},{g})"),
        citation: "product of closed surfaces of genus f and g with Lagrangian tori Y1xAj, Y2xBj".into(),
        char: CharNumbers::new(e, 0),
        complement_presentation: Some(presentation),
        presentation_complete: false,
        ambient_relators: ambient_relators(f, g),
        tori,
        surfaces,
        facts: if g >= 1 { vec![Fact::Minimal] } else { vec![] },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_by_one() {
        let (p, tori) = product_surface_complement(2, 1).unwrap();
        assert_eq!(p.generators(), ["x1", "y1", "x2", "y2", "a1", "b1"]);
        assert_eq!(tori.len(), 2);
        let w = tori[0].words.as_ref().unwrap();
        assert_eq!(w.meridian, Word::parse("x1 b1 x1^-1 b1^-1"));
        assert_eq!((w.m.clone(), w.l.clone()), (Word::gen("y1"), Word::gen("a1")));
        let w = tori[1].words.as_ref().unwrap();
        assert_eq!(w.meridian, Word::parse("x2 a1 x2^-1 a1^-1"));
        assert_eq!(w.l, Word::gen("b1"));
    }

    #[test]
    fn sphere_factor_has_no_tori() {
        let (p, tori) = product_surface_complement(3, 0).unwrap();
        assert_eq!(p.generators().len(), 6);
        assert!(tori.is_empty());
    }

    #[test]
    fn genus_two_by_two() {
        let (p, tori) = product_surface_complement(2, 2).unwrap();
        assert_eq!(p.generators().len(), 8);
        assert_eq!(tori.len(), 4);
    }

    #[test]
    fn rejects_small_f() {
        assert!(product_surface_complement(1, 3).is_err());
    }

    #[test]
    fn ambient_relators_give_product_homology() {
        let b = product_block(2, 3).unwrap();
        assert_eq!(b.char, CharNumbers::new(8, 0));
        let closed = b.complement_presentation.unwrap().add_relators(b.ambient_relators).unwrap();
        assert_eq!(closed.abelianization().rank, 10);
    }
}
