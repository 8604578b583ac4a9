//! Recipe builders for the construction families.

use super::arith::{arith_decompose, Decomposition};
use crate::blocks::{Block, Fact, TorusMarker};
use crate::error::{Error, Result};
use crate::fpgroup::Word;
use crate::invariants::in_geography_cone;
use crate::surgery::{evaluate, CurveRef, Gluing, Pi1Status, PushOff, Recipe};

/// Swap the push-offs across a torus sum: `l = m'` and `m = l'^exponent`.
pub fn crossed_gluing(m_exponent: i64) -> Vec<Gluing> {
    vec![Gluing::new(CurveRef::L, CurveRef::M, 1), Gluing::new(CurveRef::M, CurveRef::L, m_exponent)]
}

/// Product complement of genus (f, g) with -1 Luttinger surgery along the
/// l push-off of every torus.
pub fn surgered_product(f: u32, g: u32) -> Recipe {
    (1..=g).fold(Recipe::base_with("ProductComplement", &[i64::from(f), i64::from(g)]), |r, j| {
        r.luttinger(&format!("Y1xA{j}"), PushOff::L, -1).luttinger(&format!("Y2xB{j}"), PushOff::L, -1)
    })
}

/// B summed along its genus 2 surface F with the surgered genus (2, g)
/// product: e = 6 + 4g, sigma = -2.
pub fn b_g(g: u32) -> Recipe {
    if g == 0 {
        return Recipe::base("B");
    }
    Recipe::sum(Recipe::base("B"), "F", surgered_product(2, g), "F")
}

/// Telescoping chain of [B_g] + B's + C's + D's summed along (T2, T1), or
/// `None` when there are no pieces. Residual tori are T1 and T2.
pub fn chain(dec: &Decomposition) -> Option<Recipe> {
    let mut pieces = Vec::new();
    let mut bs = dec.b;
    if dec.g > 0 {
        pieces.push(b_g(dec.g));
        bs -= 1;
    }
    pieces.extend((0..bs).map(|_| Recipe::base("B")));
    pieces.extend((0..dec.c).map(|_| Recipe::base("C")));
    pieces.extend((0..dec.d).map(|_| Recipe::base("D")));
    let mut it = pieces.into_iter();
    let first = it.next()?;
    Some(it.fold(first, |acc, next| Recipe::sum(acc, "T2", next, "T1")))
}

/// Even-c recipe for a decomposition.
pub fn even_recipe(dec: &Decomposition) -> Recipe {
    match chain(dec) {
        None => Recipe::base_with("E'", &[i64::from(dec.k)]),
        Some(ch) if dec.k == 0 => ch.luttinger("T1", PushOff::L, 1).luttinger("T2", PushOff::M, 1),
        // The chain is summed with E(k) along its fiber, not with E'(k).
        Some(ch) => Recipe::sum(ch.luttinger("T2", PushOff::M, 1), "T1", elliptic(dec.k), "Tf"),
    }
}

fn elliptic(k: u32) -> Recipe {
    Recipe::base_with("E", &[i64::from(k)])
}

/// Chain with T1 disposed of (surgery when k = 0, E(k) otherwise), leaving
/// the torus T2.
pub fn chain_with_t2(dec: &Decomposition) -> Option<Recipe> {
    let ch = chain(dec)?;
    Some(if dec.k == 0 { ch.luttinger("T1", PushOff::L, 1) } else { Recipe::sum(ch, "T1", elliptic(dec.k), "Tf") })
}

/// A manifold with a marked torus whose complement is simply connected or
/// whose group is Z; used to absorb a residual chain torus.
#[derive(Debug, Clone)]
pub struct Seed {
    pub name: &'static str,
    pub recipe: Recipe,
    pub torus: &'static str,
    pub gluing: Vec<Gluing>,
    pub c: i64,
    pub chi: i64,
}

/// Odd seeds in the order they are tried.
pub fn odd_seeds() -> Vec<Seed> {
    vec![
        Seed { name: "S11", recipe: Recipe::base("S11"), torus: "T", gluing: vec![], c: 1, chi: 2 },
        Seed { name: "X3_12", recipe: Recipe::base("X3_12"), torus: "T", gluing: vec![], c: 7, chi: 2 },
        // The push-off generating Z on the P side meets the direction killed
        // on the chain side.
        Seed { name: "P(2)", recipe: p_block_recipe(2), torus: "T2", gluing: crossed_gluing(1), c: 21, chi: 3 },
    ]
}

/// Even (c', chi') construction with its T2 summed into `seed`. When the
/// even part has no blocks, E(k') is summed along its fiber instead.
pub fn seeded(seed: &Seed, c_even: i64, chi_even: i64) -> Result<(Recipe, Decomposition)> {
    let dec = arith_decompose(c_even / 2, chi_even)?;
    let recipe = match chain_with_t2(&dec) {
        Some(z) => Recipe::sum_glued(z, "T2", seed.recipe.clone(), seed.torus, seed.gluing.clone()),
        None => Recipe::sum(elliptic(dec.k), "Tf", seed.recipe.clone(), seed.torus),
    };
    Ok((recipe, dec))
}

/// Shared core of the signature -3 family and the P-blocks.
fn sig3_core(k: u32, surger_t2: bool) -> Result<Recipe> {
    if k < 2 {
        return Err(Error::Precondition(format!("k = {k} must be at least 2")));
    }
    let b_hat = if surger_t2 { Recipe::base("B").luttinger("T2", PushOff::M, 1) } else { Recipe::base("B") };
    let (x, g) = if k.is_multiple_of(2) {
        (b_hat.luttinger("T1", PushOff::L, 1), k / 2)
    } else {
        (Recipe::sum_glued(b_hat, "T1", y_manifold(), "S8", crossed_gluing(-1)), (k - 1) / 2)
    };
    let x = x.resolve(&["F", "H1"], 1, Some("F3")).blow_up(Some("F3"));
    Ok(Recipe::sum(x, "F3", surgered_product(3, g), "F"))
}

/// Z with +1 surgeries on S1..S7; S8 survives.
pub fn y_manifold() -> Recipe {
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

/// B with both +1 surgeries: e = 6, sigma = -2.
pub fn x13_recipe() -> Recipe {
    Recipe::base("B").luttinger("T1", PushOff::L, 1).luttinger("T2", PushOff::M, 1)
}

/// B with T2 surgered, summed with Y along (T1, S8): e = 10, sigma = -2.
pub fn x35_recipe() -> Recipe {
    Recipe::sum_glued(Recipe::base("B").luttinger("T2", PushOff::M, 1), "T1", y_manifold(), "S8", crossed_gluing(-1))
}

/// Simply connected, e = 7 + 4k, sigma = -3.
pub fn plan_sig_minus_3(k: u32) -> Result<Recipe> {
    sig3_core(k, true)
}

/// Like [`plan_sig_minus_3`] without the T2 surgery: group Z, residual T2.
pub fn p_block_recipe(k: u32) -> Recipe {
    sig3_core(k.max(2), false).expect("k >= 2")
}

/// Evaluates the P-block recipe into a catalog-style block with residual
/// torus T2.
pub fn plan_p_block(k: u32) -> Result<Block> {
    if k < 2 {
        return Err(Error::Precondition(format!("k = {k} must be at least 2")));
    }
    let st = evaluate(&p_block_recipe(k))?;
    let group = st.group.clone().expect("P-block recipes keep group data");
    let pi1 = st.pi1.as_ref().expect("evaluate certifies");
    let mut facts = vec![Fact::Pi1SurjectionFrom("T2".into())];
    let remaining = pi1.certificate.as_ref().map(|c| &c.remaining);
    if pi1.status == Pi1Status::NotSimplyConnected
        && remaining.is_some_and(|r| r.generators().len() == 1 && r.relators().is_empty())
    {
        facts.push(Fact::Pi1IsZ);
    }
    let tori: Vec<TorusMarker> = st.tori.iter().map(|t| t.marker.clone()).collect();
    let presentation_complete = group.is_complete();
    Ok(Block {
        name: format!("P({k})"),
        citation: "B with one surgery, resolved and summed with a surgered genus 3 product".into(),
        char: st.char,
        complement_presentation: Some(group.presentation),
        presentation_complete,
        ambient_relators: vec![],
        tori,
        surfaces: st.surfaces,
        facts,
    })
}

/// Positive-signature seed: e = 176, sigma = 4, residual symplectic torus T4
/// with simply connected complement.
pub fn s_block_recipe() -> Recipe {
    let r = Recipe::base("B").luttinger("T1", PushOff::L, 1);
    let q = Recipe::sum(r, "T2", Recipe::base("Xtilde35"), "T3");
    let mut comps = vec!["F"; 8];
    comps.push("G");
    let q = (0..16).fold(q.resolve(&comps, 8, Some("Sigma")), |acc, _| acc.blow_up(Some("Sigma")));
    let h = Recipe::base("H_lefschetz").resolve(&["fiber", "section"], 1, Some("Sigma")).blow_up(Some("Sigma"));
    Recipe::sum(q, "Sigma", h, "Sigma")
}

/// Sums a manifold realizing (c, chi) into `base` along `torus`, which must
/// have trivial image in the group of `base`. Adds char_from_c_chi(c, chi).
pub fn wedge_extend(base: &Recipe, torus: &str, c: i64, chi: i64) -> Result<Recipe> {
    let even_ok = c % 2 == 0 && 0 <= c && c <= 8 * chi - 2;
    let odd_ok = c % 2 != 0 && 1 <= c && c <= 8 * chi - 7;
    if !(even_ok || odd_ok) {
        return Err(Error::Precondition(format!("(c, chi) = ({c}, {chi}) outside the extension range")));
    }
    let st = evaluate(base)?;
    let words = st
        .torus(torus)
        .ok_or_else(|| Error::MarkerNotFound(torus.into()))?
        .marker
        .words
        .clone()
        .ok_or_else(|| Error::TorusLacksWordData(torus.into()))?;
    let cert = st.pi1.as_ref().and_then(|p| p.certificate.as_ref());
    let trivial = |w: &Word| w.is_identity() || cert.is_some_and(|c| c.reduce(w).is_identity());
    if !(trivial(&words.m) && trivial(&words.l)) {
        return Err(Error::Precondition(format!("torus {torus} does not have trivial image")));
    }
    if even_ok {
        let dec = arith_decompose(c / 2, chi)?;
        return Ok(match chain_with_t2(&dec) {
            Some(z) => Recipe::sum(z, "T2", base.clone(), torus),
            None => Recipe::sum(elliptic(dec.k), "Tf", base.clone(), torus),
        });
    }
    // Odd c: a chain absorbs a seed at T2 and keeps T1 for the base.
    for seed in odd_seeds() {
        let (ce, chie) = (c - seed.c, chi - seed.chi);
        if ce <= 0 || chie < 1 || !in_geography_cone(ce, chie) {
            continue;
        }
        let dec = arith_decompose(ce / 2, chie)?;
        if dec.k > 0 {
            continue;
        }
        if let Some(ch) = chain(&dec) {
            let z = Recipe::sum_glued(ch, "T2", seed.recipe.clone(), seed.torus, seed.gluing.clone());
            return Ok(Recipe::sum(z, "T1", base.clone(), torus));
        }
    }
    Err(Error::Unplannable { c, chi })
}

/// e = 4k + 4, sigma = 0 for k >= 45.
pub fn plan_signature_zero(k: i64) -> Result<Recipe> {
    if k < 45 {
        return Err(Error::Precondition(format!("k = {k} must be at least 45")));
    }
    let chi = k - 44;
    wedge_extend(&s_block_recipe(), "T4", 8 * chi - 4, chi)
}

/// e = 4k + 1, sigma = -1 for k >= 49.
pub fn plan_signature_minus_one(k: i64) -> Result<Recipe> {
    if k < 49 {
        return Err(Error::Precondition(format!("k = {k} must be at least 49")));
    }
    let p = p_block_recipe(u32::try_from(k - 47).map_err(|_| Error::Precondition(format!("k = {k} too large")))?);
    let y = Recipe::sum_glued(Recipe::base("B"), "T1", p, "T2", crossed_gluing(1));
    Ok(Recipe::sum(y, "T2", s_block_recipe(), "T4"))
}
