use std::collections::{BTreeMap, BTreeSet};

use super::recipe::{CurveRef, Gluing, PushOff, Recipe};
use super::state::{AmbientTier, GroupData, ManifoldState, MarkedTorus, Pi1Status, Pi1Summary, TraceEntry};
use crate::blocks::{catalog, Block, Fact, SurfaceMarker, TorusKind, TorusWords};
use crate::error::{Error, Result};
use crate::fpgroup::{eliminate_to_trivial, CertificateStatus, Presentation, Word, DEFAULT_BUDGET};
use crate::invariants::CharNumbers;

/// Blocks whose tori keep the manifold minimal under +-1 Luttinger surgery.
const TELESCOPING: [&str; 3] = ["B", "C", "D"];

fn marker_set(s: &str) -> BTreeSet<&str> {
    s.split('+').collect()
}

/// Group data for an axiom block, if its facts determine one.
fn axiom_group(block: &Block) -> Option<GroupData> {
    let tori: BTreeSet<&str> = block.tori.iter().map(|t| t.name.as_str()).collect();
    let trivial = block.facts.iter().any(|f| match f {
        Fact::SimplyConnected => tori.is_empty(),
        Fact::SimplyConnectedComplementOf(m) => marker_set(m) == tori,
        _ => false,
    });
    if trivial {
        return Some(GroupData { presentation: Presentation::trivial(), cover: false, tiers: vec![] });
    }
    // Images of the named surfaces generate the group.
    block.facts.iter().find_map(|f| match f {
        Fact::Pi1SurjectionFrom(m) if tori.is_empty() => {
            let mut gens: Vec<String> = Vec::new();
            for name in marker_set(m) {
                for w in block.surface(name)?.pi1_images.as_ref()? {
                    for g in w.generators() {
                        if !gens.iter().any(|x| x == g) {
                            gens.push(g.to_string());
                        }
                    }
                }
            }
            let presentation = Presentation::free(gens).ok()?;
            Some(GroupData { presentation, cover: true, tiers: vec![] })
        }
        _ => None,
    })
}

/// State of a catalogued block before any construction step.
pub fn instantiate(block: &Block) -> ManifoldState {
    let mut tori: Vec<MarkedTorus> =
        block.tori.iter().map(|t| MarkedTorus { marker: t.clone(), origin: block.name.clone() }).collect();
    let mut surfaces = block.surfaces.clone();
    let group = match &block.complement_presentation {
        Some(p) => {
            let tiers = if block.ambient_relators.is_empty() {
                vec![]
            } else {
                vec![AmbientTier {
                    block: block.name.clone(),
                    meridians: block.tori.iter().filter_map(|t| t.words.as_ref().map(|w| w.meridian.clone())).collect(),
                    relators: block.ambient_relators.clone(),
                }]
            };
            Some(GroupData { presentation: p.clone(), cover: !block.presentation_complete && tiers.is_empty(), tiers })
        }
        None => {
            let g = axiom_group(block);
            if matches!(&g, Some(g) if g.presentation.generators().is_empty()) {
                let one = Word::identity();
                for t in &mut tori {
                    t.marker.words = Some(TorusWords { meridian: one.clone(), m: one.clone(), l: one.clone() });
                }
                for s in &mut surfaces {
                    s.pi1_images = Some(vec![one.clone(); 2 * s.genus as usize]);
                }
            }
            g
        }
    };

    let mut minimality_chain = Vec::new();
    let mut odd_form_witness = None;
    for f in &block.facts {
        match f {
            Fact::Minimal => minimality_chain.push(format!("{}: minimal ({})", block.name, block.citation)),
            Fact::RelativelyMinimalAlong(m) => {
                minimality_chain.push(format!("{}: relatively minimal along {m} ({})", block.name, block.citation))
            }
            Fact::OddSquareSurfaceDisjointFromTori => {
                odd_form_witness = Some(format!("{} contains a surface of odd square", block.name))
            }
            _ => {}
        }
    }
    ManifoldState {
        char: block.char,
        group,
        tori,
        surfaces,
        odd_form_witness,
        minimality_chain,
        trace: vec![],
        pi1: None,
    }
}

enum Marker<'a> {
    Torus(&'a MarkedTorus),
    Surface(&'a SurfaceMarker),
}

fn find_marker<'a>(x: &'a ManifoldState, name: &str) -> Result<Marker<'a>> {
    if let Some(t) = x.torus(name) {
        return Ok(Marker::Torus(t));
    }
    x.surface(name).map(Marker::Surface).ok_or_else(|| Error::MarkerNotFound(name.into()))
}

fn torus_curve(words: &TorusWords, marker: &str, c: CurveRef) -> Result<Word> {
    match c {
        CurveRef::M => Ok(words.m.clone()),
        CurveRef::L => Ok(words.l.clone()),
        CurveRef::Mu => Ok(words.meridian.clone()),
        CurveRef::Img(_) => Err(Error::BadGluing { marker: marker.into(), curve: c.to_string() }),
    }
}

fn surface_curve(images: &[Word], marker: &str, c: CurveRef) -> Result<Word> {
    match c {
        CurveRef::Img(k) if k <= images.len() => Ok(images[k - 1].clone()),
        _ => Err(Error::BadGluing { marker: marker.into(), curve: c.to_string() }),
    }
}

/// Images of a surface's generators, or identity words when the group of
/// the side is certifiably trivial.
fn known_images(x: &ManifoldState, s: &SurfaceMarker) -> Option<Vec<Word>> {
    if let Some(images) = &s.pi1_images {
        return Some(images.clone());
    }
    let g = x.group.as_ref()?;
    let cert = eliminate_to_trivial(&g.presentation, DEFAULT_BUDGET);
    (cert.status == CertificateStatus::ProvedTrivial).then(|| vec![Word::identity(); 2 * s.genus as usize])
}

fn primed(name: &str, taken: &BTreeSet<String>) -> String {
    let mut n = name.to_string();
    while taken.contains(&n) {
        n.push('\'');
    }
    n
}

/// Symplectic sum along two markers of equal genus and opposite squares.
/// Both tori or both surfaces. Right-side generators and surviving marker
/// names that collide with the left side are renamed.
pub fn symplectic_sum(
    a: &ManifoldState,
    fa: &str,
    b: &ManifoldState,
    fb: &str,
    gluing: &[Gluing],
) -> Result<ManifoldState> {
    let ma = find_marker(a, fa)?;
    let mb = find_marker(b, fb)?;
    let (genus, sq_a, sq_b) = match (&ma, &mb) {
        (Marker::Torus(_), Marker::Torus(_)) => (1u32, 0, 0),
        (Marker::Surface(sa), Marker::Surface(sb)) => {
            if sa.genus != sb.genus {
                return Err(Error::GenusMismatch(sa.genus, sb.genus));
            }
            (sa.genus, sa.square, sb.square)
        }
        _ => return Err(Error::Precondition(format!("cannot sum torus with surface ({fa}, {fb})"))),
    };
    if sq_a + sq_b != 0 {
        return Err(Error::SquareMismatch(sq_a, sq_b));
    }
    for g in gluing {
        if g.exponent != 1 && g.exponent != -1 {
            return Err(Error::Precondition(format!("gluing exponent {} is not +-1", g.exponent)));
        }
    }

    // Rename the right side's generators away from the left's.
    let mut b = b.clone();
    let mut group = None;
    if let (Some(ga), Some(gb)) = (&a.group, &b.group) {
        let (merged, ren) = ga.presentation.amalgamate(&gb.presentation, &[])?;
        let gb = gb.rename(&ren);
        b.rename_words(&ren);
        b.group = Some(gb.clone());
        let mut tiers = ga.tiers.clone();
        tiers.extend(gb.tiers.iter().cloned());
        group = Some((merged, ga.cover || gb.cover, tiers));
    }
    let ma = find_marker(a, fa)?;
    let mb = find_marker(&b, fb)?;

    let group = match (group, &ma, &mb) {
        (None, _, _) => None,
        (Some((p, cover, tiers)), Marker::Torus(ta), Marker::Torus(tb)) => match (&ta.marker.words, &tb.marker.words) {
            (Some(wa), Some(wb)) => {
                let mut pairs: Vec<Gluing> = if gluing.is_empty() {
                    vec![Gluing::new(CurveRef::M, CurveRef::M, 1), Gluing::new(CurveRef::L, CurveRef::L, 1)]
                } else {
                    gluing.to_vec()
                };
                if !pairs.iter().any(|g| g.left == CurveRef::Mu || g.right == CurveRef::Mu) {
                    pairs.push(Gluing::new(CurveRef::Mu, CurveRef::Mu, 1));
                }
                let mut rels = Vec::new();
                for g in &pairs {
                    let x = torus_curve(wa, fa, g.left)?;
                    let y = torus_curve(wb, fb, g.right)?.power(g.exponent);
                    rels.push(x.mul(&y.inverse()));
                }
                Some(GroupData { presentation: p.add_relators(rels)?, cover, tiers })
            }
            _ => None,
        },
        (Some((p, mut cover, tiers)), Marker::Surface(sa), Marker::Surface(sb)) => {
            if !(sa.meridian_trivial || sb.meridian_trivial) {
                None
            } else {
                let pairs: Vec<Gluing> = if gluing.is_empty() {
                    (1..=2 * genus as usize).map(|k| Gluing::new(CurveRef::Img(k), CurveRef::Img(k), 1)).collect()
                } else {
                    gluing.to_vec()
                };
                let lefts: BTreeSet<CurveRef> = pairs.iter().map(|g| g.left).collect();
                if lefts.len() < 2 * genus as usize {
                    cover = true;
                }
                let mut rels = Vec::new();
                match (known_images(a, sa), known_images(&b, sb)) {
                    (Some(ia), Some(ib)) => {
                        for g in &pairs {
                            let x = surface_curve(&ia, fa, g.left)?;
                            let y = surface_curve(&ib, fb, g.right)?.power(g.exponent);
                            rels.push(x.mul(&y.inverse()));
                        }
                    }
                    _ => {
                        let dummy = vec![Word::identity(); 2 * genus as usize];
                        for g in &pairs {
                            surface_curve(&dummy, fa, g.left)?;
                            surface_curve(&dummy, fb, g.right)?;
                        }
                        cover = true;
                    }
                }
                Some(GroupData { presentation: p.add_relators(rels)?, cover, tiers })
            }
        }
        _ => unreachable!("marker kinds checked above"),
    };

    let mut tori: Vec<MarkedTorus> = a.tori.iter().filter(|t| t.marker.name != fa).cloned().collect();
    let mut surfaces: Vec<SurfaceMarker> = a.surfaces.iter().filter(|s| s.name != fa).cloned().collect();
    for s in &mut surfaces {
        if matches!(&s.dual, Some(d) if d.surface == fa) {
            s.dual = None;
        }
    }
    let mut taken: BTreeSet<String> =
        tori.iter().map(|t| t.marker.name.clone()).chain(surfaces.iter().map(|s| s.name.clone())).collect();
    let mut renamed: BTreeMap<String, String> = BTreeMap::new();
    for t in b.tori.iter().filter(|t| t.marker.name != fb) {
        let mut t = t.clone();
        let n = primed(&t.marker.name, &taken);
        renamed.insert(t.marker.name.clone(), n.clone());
        taken.insert(n.clone());
        t.marker.name = n;
        tori.push(t);
    }
    let right_surfaces: Vec<SurfaceMarker> = b.surfaces.iter().filter(|s| s.name != fb).cloned().collect();
    for s in &right_surfaces {
        let n = primed(&s.name, &taken);
        renamed.insert(s.name.clone(), n.clone());
        taken.insert(n);
    }
    for mut s in right_surfaces {
        s.name = renamed[&s.name].clone();
        if let Some(d) = &mut s.dual {
            match renamed.get(&d.surface) {
                Some(n) => d.surface = n.clone(),
                None => s.dual = None,
            }
        }
        surfaces.push(s);
    }

    let mut minimality_chain = a.minimality_chain.clone();
    minimality_chain.extend(b.minimality_chain.iter().cloned());
    minimality_chain.push(format!("sum along {fa} ~ {fb}: minimal by Usher's theorem"));
    Ok(ManifoldState {
        char: a.char + b.char + CharNumbers::new(4 * i64::from(genus) - 4, 0),
        group,
        tori,
        surfaces,
        odd_form_witness: a.odd_form_witness.clone().or_else(|| b.odd_form_witness.clone()),
        minimality_chain,
        trace: vec![],
        pi1: None,
    })
}

/// +-1 Luttinger surgery on a Lagrangian torus along one push-off.
pub fn luttinger(x: &ManifoldState, torus: &str, curve: PushOff, sign: i64) -> Result<ManifoldState> {
    if sign != 1 && sign != -1 {
        return Err(Error::Precondition(format!("Luttinger sign {sign} is not +-1")));
    }
    let t = x.torus(torus).ok_or_else(|| Error::MarkerNotFound(torus.into()))?;
    if t.marker.kind != TorusKind::Lagrangian {
        return Err(Error::NotLagrangian(torus.into()));
    }
    let words = t.marker.words.as_ref().ok_or_else(|| Error::TorusLacksWordData(torus.into()))?;
    let c = match curve {
        PushOff::M => &words.m,
        PushOff::L => &words.l,
    };
    let mut out = x.clone();
    if let Some(g) = &mut out.group {
        g.presentation = g.presentation.add_relators([words.meridian.mul(&c.power(sign))])?;
    }
    let origin = t.origin.clone();
    out.tori.retain(|t| t.marker.name != torus);
    let note = if TELESCOPING.contains(&origin.as_str()) {
        format!("{sign:+} Luttinger surgery on {torus} of {origin} along {curve}: minimality preserved")
    } else {
        format!("Luttinger surgery on {torus} of {origin} along {curve}: pieces stay aspherical, hence minimal")
    };
    out.minimality_chain.push(note);
    out.pi1 = None;
    Ok(out)
}

/// Blow-up, optionally at a point of a marked surface (proper transform).
pub fn blow_up(x: &ManifoldState, at: Option<&str>) -> Result<ManifoldState> {
    let mut out = x.clone();
    out.char = out.char + CharNumbers::new(1, -1);
    match at {
        Some(name) => {
            let s =
                out.surfaces.iter_mut().find(|s| s.name == name).ok_or_else(|| Error::MarkerNotFound(name.into()))?;
            s.square -= 1;
            s.meridian_trivial = true;
            out.minimality_chain.push(format!("blow-up at {name}: every -1 sphere meets {name} (Li's theorem)"));
        }
        None => {
            out.odd_form_witness.get_or_insert_with(|| "exceptional sphere of a blow-up".into());
            out.minimality_chain.push("blow-up away from markers: not minimal".into());
        }
    }
    out.pi1 = None;
    Ok(out)
}

/// Symplectic resolution of transversally intersecting surfaces into one.
/// A name may repeat for parallel copies of a square-zero surface.
pub fn resolve(x: &ManifoldState, components: &[String], n: u32, into: Option<&str>) -> Result<ManifoldState> {
    if components.is_empty() {
        return Err(Error::Precondition("resolve needs at least one component".into()));
    }
    let count = components.len() as u32;
    if n + 1 < count {
        return Err(Error::DisconnectedResolution { count: components.len(), intersections: n });
    }
    let mut seen = BTreeSet::new();
    let mut parts = Vec::new();
    for c in components {
        let s = x.surface(c).ok_or_else(|| Error::MarkerNotFound(c.clone()))?;
        if !seen.insert(c.as_str()) && s.square != 0 {
            return Err(Error::NonParallelCopies(c.clone()));
        }
        parts.push(s);
    }
    let genus = parts.iter().map(|s| s.genus).sum::<u32>() + n - (count - 1);
    let square = parts.iter().map(|s| s.square).sum::<i64>() + 2 * i64::from(n);
    let pi1_images = if n == count - 1 && parts.iter().all(|s| s.pi1_images.is_some()) {
        Some(parts.iter().flat_map(|s| s.pi1_images.clone().unwrap_or_default()).collect())
    } else {
        None
    };
    let name = into.map(String::from).unwrap_or_else(|| components.join("+"));
    let mut out = x.clone();
    out.surfaces.retain(|s| !seen.contains(s.name.as_str()));
    if out.marker_names().any(|m| m == name) {
        return Err(Error::Precondition(format!("marker name {name} already in use")));
    }
    for s in &mut out.surfaces {
        if matches!(&s.dual, Some(d) if seen.contains(d.surface.as_str())) {
            s.dual = None;
        }
    }
    out.surfaces.push(SurfaceMarker { name, genus, square, pi1_images, meridian_trivial: false, dual: None });
    out.pi1 = None;
    Ok(out)
}

/// Runs elimination on the closed presentation. Ambient relator tiers are
/// released once all of their meridians reduce to the identity.
pub fn certify(state: &mut ManifoldState, budget: usize) {
    let (Some(g), Some(mut pres)) = (state.group.clone(), state.closed_presentation()) else {
        state.pi1 = Some(Pi1Summary {
            status: Pi1Status::Unknown,
            abelianization: None,
            cover: false,
            steps: 0,
            used_cyclic_rotation: false,
            released_tiers: vec![],
            certificate: None,
            examined: None,
        });
        return;
    };
    let mut pending: Vec<AmbientTier> = g.tiers.clone();
    let mut released = Vec::new();
    let cert = loop {
        let cert = eliminate_to_trivial(&pres, budget);
        if cert.status == CertificateStatus::ProvedTrivial || pending.is_empty() {
            break cert;
        }
        let (now, still): (Vec<AmbientTier>, Vec<AmbientTier>) =
            pending.into_iter().partition(|t| t.meridians.iter().all(|m| cert.reduce(m).is_identity()));
        pending = still;
        if now.is_empty() {
            break cert;
        }
        for t in now {
            pres = pres.add_relators(t.relators).expect("tier relators use known generators");
            released.push(t.block);
        }
    };
    let complete = !g.cover && pending.is_empty();
    let status = match cert.status {
        CertificateStatus::ProvedTrivial => Pi1Status::ProvedTrivial,
        CertificateStatus::ProvedAbelianizationNontrivial if complete => Pi1Status::NotSimplyConnected,
        _ => Pi1Status::Inconclusive,
    };
    state.pi1 = Some(Pi1Summary {
        status,
        abelianization: Some(cert.abelianization.clone()),
        cover: !complete,
        steps: cert.elimination_order.len(),
        used_cyclic_rotation: cert.used_cyclic_rotation(),
        released_tiers: released,
        certificate: Some(cert),
        examined: Some(pres),
    });
}

pub fn evaluate(r: &Recipe) -> Result<ManifoldState> {
    evaluate_with_budget(r, DEFAULT_BUDGET)
}

/// Folds the recipe tree, then certifies the fundamental group.
pub fn evaluate_with_budget(r: &Recipe, budget: usize) -> Result<ManifoldState> {
    let mut trace = Vec::new();
    let mut state = eval_rec(r, 0, &mut trace)?;
    certify(&mut state, budget);
    state.trace = trace;
    Ok(state)
}

fn eval_rec(r: &Recipe, depth: usize, trace: &mut Vec<TraceEntry>) -> Result<ManifoldState> {
    let idx = trace.len();
    trace.push(TraceEntry { depth, step: r.step_label(), e: 0, sigma: 0 });
    let st = match r {
        Recipe::Base { block, params } => instantiate(&catalog(block, params)?),
        Recipe::Sum { left, left_surface, right, right_surface, gluing } => {
            let a = eval_rec(left, depth + 1, trace)?;
            let b = eval_rec(right, depth + 1, trace)?;
            symplectic_sum(&a, left_surface, &b, right_surface, gluing)?
        }
        Recipe::Luttinger { child, torus, curve, sign } => {
            luttinger(&eval_rec(child, depth + 1, trace)?, torus, *curve, *sign)?
        }
        Recipe::BlowUp { child, at } => blow_up(&eval_rec(child, depth + 1, trace)?, at.as_deref())?,
        Recipe::Resolve { child, components, intersections, into } => {
            resolve(&eval_rec(child, depth + 1, trace)?, components, *intersections, into.as_deref())?
        }
    };
    trace[idx].e = st.char.e;
    trace[idx].sigma = st.char.sigma;
    Ok(st)
}
