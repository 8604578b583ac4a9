use super::*;
use crate::blocks::catalog;
use crate::error::Error;
use crate::fpgroup::{AbelianInvariants, Word};
use crate::invariants::CharNumbers;

fn base(name: &str) -> ManifoldState {
    instantiate(&catalog(name, &[]).unwrap())
}

fn closed_h1(x: &ManifoldState) -> AbelianInvariants {
    x.closed_presentation().unwrap().abelianization()
}

fn x13() -> Recipe {
    Recipe::base("B").luttinger("T1", PushOff::L, 1).luttinger("T2", PushOff::M, 1)
}

fn z_seven() -> Recipe {
    [
        ("S1", PushOff::M),
        ("S2", PushOff::L),
        ("S3", PushOff::L),
        ("S4", PushOff::M),
        ("S5", PushOff::L),
        ("S6", PushOff::M),
        ("S7", PushOff::M),
    ]
    .into_iter()
    .fold(Recipe::base("Z"), |r, (t, c)| r.luttinger(t, c, 1))
}

fn x35() -> Recipe {
    Recipe::sum_glued(
        Recipe::base("B").luttinger("T2", PushOff::M, 1),
        "T1",
        z_seven(),
        "S8",
        vec![Gluing::new(CurveRef::L, CurveRef::M, 1), Gluing::new(CurveRef::M, CurveRef::L, -1)],
    )
}

#[test]
fn genus_one_sum_of_two_b() {
    let b = base("B");
    let s = symplectic_sum(&b, "T2", &b, "T1", &[]).unwrap();
    assert_eq!(s.char, CharNumbers::new(12, -4));
    assert_eq!(closed_h1(&s), AbelianInvariants { rank: 2, torsion: vec![] });
    let names: Vec<&str> = s.marker_names().collect();
    assert_eq!(names, ["T1", "T2", "F", "H1", "G", "F'", "H1'", "G'"]);
    assert!(s.group.as_ref().unwrap().presentation.has_generator("t1_2"));
    assert_eq!(s.torus("T2").unwrap().marker.words.as_ref().unwrap().m, Word::gen("t1_2"));
}

#[test]
fn sum_along_genus_two_surfaces() {
    for g in 0..4 {
        let z = instantiate(&catalog("ProductComplement", &[2, g]).unwrap());
        let s = symplectic_sum(&base("B"), "F", &z, "F", &[]).unwrap();
        assert_eq!(s.char, CharNumbers::new(6 + 4 * g, -2));
    }
}

#[test]
fn luttinger_kills_generators() {
    let b = base("B");
    let r = luttinger(&b, "T1", PushOff::L, 1).unwrap();
    assert_eq!(r.char, b.char);
    assert_eq!(closed_h1(&r), AbelianInvariants { rank: 1, torsion: vec![] });
    let x = evaluate(&x13()).unwrap();
    assert_eq!(x.char, CharNumbers::new(6, -2));
    assert_eq!(x.pi1_status(), Pi1Status::ProvedTrivial);
    assert!(x.has_odd_form_witness());
    assert!(x.minimality_chain.iter().any(|s| s.contains("Luttinger surgery on T1 of B")));
}

#[test]
fn luttinger_on_z_adds_commutator_relator() {
    let z = luttinger(&base("Z"), "S1", PushOff::M, 1).unwrap();
    let expected = Word::parse("b1^-1 y1^-1 b1 y1 x1").cyclic_reduce();
    assert!(z.group.unwrap().presentation.relators().contains(&expected));
}

#[test]
fn luttinger_errors() {
    let e = instantiate(&catalog("E", &[1]).unwrap());
    assert_eq!(luttinger(&e, "Tf", PushOff::M, 1), Err(Error::NotLagrangian("Tf".into())));
    let b = base("B");
    assert_eq!(luttinger(&b, "T9", PushOff::M, 1), Err(Error::MarkerNotFound("T9".into())));
    let once = luttinger(&b, "T1", PushOff::M, 1).unwrap();
    assert!(matches!(luttinger(&once, "T1", PushOff::M, 1), Err(Error::MarkerNotFound(_))));
    assert!(matches!(luttinger(&b, "T1", PushOff::M, 2), Err(Error::Precondition(_))));
}

#[test]
fn blow_up_accounting() {
    let b = base("B");
    assert_eq!(blow_up(&b, None).unwrap().char, CharNumbers::new(7, -3));
    let r = resolve(&b, &["F".into(), "H1".into()], 1, Some("F3")).unwrap();
    let f3 = r.surface("F3").unwrap();
    assert_eq!((f3.genus, f3.square), (3, 1));
    let images: Vec<String> = f3.pi1_images.as_ref().unwrap().iter().map(|w| w.to_string()).collect();
    assert_eq!(images, ["1", "1", "1", "t2", "1", "t1"]);
    let t = blow_up(&r, Some("F3")).unwrap();
    let f3 = t.surface("F3").unwrap();
    assert_eq!((f3.square, f3.meridian_trivial), (0, true));
    assert!(matches!(blow_up(&b, Some("nope")), Err(Error::MarkerNotFound(_))));
}

#[test]
fn resolution_genus_and_square() {
    let b = base("B");
    let parallel = resolve(&b, &["F".into(), "F".into(), "G".into()], 2, None).unwrap();
    let s = parallel.surface("F+F+G").unwrap();
    assert_eq!((s.genus, s.square), (6, 4));
    assert!(s.pi1_images.is_none());

    let mut comps: Vec<String> = vec!["F".into(); 8];
    comps.push("G".into());
    let sigma = resolve(&b, &comps, 8, Some("Sigma")).unwrap();
    let s = sigma.surface("Sigma").unwrap();
    assert_eq!((s.genus, s.square), (18, 16));

    assert_eq!(
        resolve(&b, &["F".into(), "H1".into(), "G".into()], 1, None),
        Err(Error::DisconnectedResolution { count: 3, intersections: 1 })
    );
    assert_eq!(resolve(&b, &["H1".into(), "H1".into()], 1, None), Err(Error::NonParallelCopies("H1".into())));
}

#[test]
fn sum_preconditions() {
    let b = base("B");
    let c = base("C");
    assert_eq!(symplectic_sum(&b, "F", &b, "H1", &[]), Err(Error::GenusMismatch(2, 1)));
    assert_eq!(symplectic_sum(&b, "H1", &c, "E1", &[]), Err(Error::SquareMismatch(-1, -1)));
    assert!(matches!(symplectic_sum(&b, "T1", &b, "F", &[]), Err(Error::Precondition(_))));
    let bad = [Gluing::new(CurveRef::Img(1), CurveRef::M, 1)];
    assert!(matches!(symplectic_sum(&b, "T2", &b, "T1", &bad), Err(Error::BadGluing { .. })));
    let bad = [Gluing::new(CurveRef::Img(5), CurveRef::Img(1), 1)];
    assert!(matches!(symplectic_sum(&b, "F", &b, "F", &bad), Err(Error::BadGluing { .. })));
}

#[test]
fn x35_is_simply_connected() {
    let x = evaluate(&x35()).unwrap();
    assert_eq!(x.char, CharNumbers::new(10, -2));
    assert_eq!(x.pi1_status(), Pi1Status::ProvedTrivial);
    let pi1 = x.pi1.as_ref().unwrap();
    assert!(pi1.certificate.as_ref().unwrap().replay(pi1.examined.as_ref().unwrap()));
}

#[test]
fn base_b_is_not_simply_connected() {
    let b = evaluate(&Recipe::base("B")).unwrap();
    assert_eq!(b.pi1_status(), Pi1Status::NotSimplyConnected);
    assert_eq!(b.pi1.unwrap().abelianization.unwrap(), AbelianInvariants { rank: 2, torsion: vec![] });
}

#[test]
fn axiom_blocks() {
    let e = evaluate(&Recipe::base_with("E'", &[3])).unwrap();
    assert_eq!(e.char, CharNumbers::new(36, -24));
    assert_eq!(e.pi1_status(), Pi1Status::ProvedTrivial);
    let h = evaluate(&Recipe::base("H_lefschetz")).unwrap();
    assert_eq!(h.pi1_status(), Pi1Status::Inconclusive);
    assert_eq!(h.group.unwrap().presentation.generators().len(), 36);
}

#[test]
fn trace_records_every_step() {
    let x = evaluate(&x13()).unwrap();
    let steps: Vec<(usize, &str)> = x.trace.iter().map(|t| (t.depth, t.step.as_str())).collect();
    assert_eq!(steps, [(0, "luttinger T2 m +1"), (1, "luttinger T1 l +1"), (2, "base B")]);
    assert!(x.trace.iter().all(|t| (t.e, t.sigma) == (6, -2)));
}

#[test]
fn unknown_meridians_lose_group_data() {
    let z = instantiate(&catalog("ProductComplement", &[2, 1]).unwrap());
    let s = symplectic_sum(&z, "F", &z, "F", &[]).unwrap();
    assert!(s.group.is_none());
}
