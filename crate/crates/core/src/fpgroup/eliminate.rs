//! Deterministic generator elimination (Tietze moves) that certifies
//! triviality of a finitely presented group.
//!
//! Each step picks the first relator, in (length, lexicographic) order, in
//! which some live generator occurs exactly once with exponent +-1, rotates the
//! relator so that generator leads, and eliminates it: `g u = 1` gives
//! `g := u^-1`. Single-letter relators are the special case `u = 1`. The
//! engine only ever certifies triviality; a leftover presentation is checked
//! against its abelianization and is otherwise reported inconclusive.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::presentation::{AbelianInvariants, Presentation};
use super::word::Word;

pub const DEFAULT_BUDGET: usize = 10_000;

/// Relators longer than this abort the search as inconclusive.
const MAX_RELATOR_LEN: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationStep {
    pub generator: String,
    /// Word in the still-live generators that `generator` is replaced by.
    pub word: Word,
    /// True when the solved generator was not the leading letter of the stored
    /// relator, i.e. the conjugacy-insensitive fallback was needed.
    pub rotated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateStatus {
    ProvedTrivial,
    ProvedAbelianizationNontrivial,
    Inconclusive,
}

impl CertificateStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateStatus::ProvedTrivial => "proved-trivial",
            CertificateStatus::ProvedAbelianizationNontrivial => "proved-abelianization-nontrivial",
            CertificateStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialityCertificate {
    pub elimination_order: Vec<EliminationStep>,
    pub status: CertificateStatus,
    /// What is left after elimination; same group as the input.
    pub remaining: Presentation,
    pub abelianization: AbelianInvariants,
}

impl TrivialityCertificate {
    pub fn used_cyclic_rotation(&self) -> bool {
        self.elimination_order.iter().any(|s| s.rotated)
    }

    /// Rewrites `w` through the elimination substitutions, giving an equal
    /// element as a word in the remaining generators.
    pub fn reduce(&self, w: &Word) -> Word {
        self.elimination_order.iter().fold(w.clone(), |acc, s| {
            if acc.mentions(&s.generator) {
                acc.substitute(&BTreeMap::from([(s.generator.clone(), s.word.clone())]))
            } else {
                acc
            }
        })
    }

    /// Re-derives the elimination from `original` without the search: every
    /// step must be justified by some current relator that is a cyclic
    /// conjugate of `g w^-1` or its inverse. Returns true iff all steps check
    /// and, for a proved-trivial status, no generator is left.
    pub fn replay(&self, original: &Presentation) -> bool {
        replay_certificate(original, &self.elimination_order, self.status == CertificateStatus::ProvedTrivial)
    }
}

pub fn eliminate_to_trivial(p: &Presentation, budget: usize) -> TrivialityCertificate {
    assert!(budget > 0, "elimination budget must be positive");
    let mut alive: Vec<String> = p.generators().to_vec();
    let mut rels: Vec<Word> = p.relators().to_vec();
    let mut order = Vec::new();

    while order.len() < budget && !alive.is_empty() {
        normalize(&mut rels);
        let Some((ri, g)) = pick(&rels, &alive) else { break };
        let (image, rotated) = solve_for(&rels[ri], &g);
        let map = BTreeMap::from([(g.clone(), image.clone())]);
        for r in rels.iter_mut() {
            if r.mentions(&g) {
                *r = r.substitute(&map);
            }
        }
        alive.retain(|x| *x != g);
        order.push(EliminationStep { generator: g, word: image, rotated });
        if rels.iter().any(|r| r.len() > MAX_RELATOR_LEN) {
            break;
        }
    }
    normalize(&mut rels);

    let remaining = Presentation::new(alive, rels).expect("elimination keeps relators over live generators");
    let abelianization = remaining.abelianization();
    let status = if remaining.generators().is_empty() {
        CertificateStatus::ProvedTrivial
    } else if !abelianization.is_trivial() {
        CertificateStatus::ProvedAbelianizationNontrivial
    } else {
        CertificateStatus::Inconclusive
    };
    if status == CertificateStatus::ProvedTrivial {
        assert!(p.abelianization().is_trivial(), "elimination claims triviality but H1 of the input is nonzero");
    }
    TrivialityCertificate { elimination_order: order, status, remaining, abelianization }
}

fn normalize(rels: &mut Vec<Word>) {
    for r in rels.iter_mut() {
        *r = r.cyclic_reduce();
    }
    rels.retain(|r| !r.is_identity());
    rels.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    rels.dedup();
}

/// First relator with a solvable generator; among its solvable generators the
/// one latest in the live order is chosen, so earlier generators survive.
fn pick(rels: &[Word], alive: &[String]) -> Option<(usize, String)> {
    rels.iter().enumerate().find_map(|(i, r)| {
        let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
        for l in r.letters() {
            *counts.entry(l.gen.as_str()).or_default() += l.exp.unsigned_abs();
        }
        alive.iter().rev().find(|g| counts.get(g.as_str()) == Some(&1)).map(|g| (i, g.clone()))
    })
}

/// Solves the cyclically reduced relator `r` for `g`, which occurs once.
fn solve_for(r: &Word, g: &str) -> (Word, bool) {
    let letters = r.letters();
    let i = letters.iter().position(|l| l.gen == g).expect("generator occurs in relator");
    let exp = letters[i].exp;
    let rest: Vec<(&str, i64)> =
        letters[i + 1..].iter().chain(letters[..i].iter()).map(|l| (l.gen.as_str(), l.exp)).collect();
    let rest = Word::from_syllables(rest);
    let image = if exp == 1 { rest.inverse() } else { rest };
    (image, i != 0)
}

/// Independent checker for an elimination order.
pub fn replay_certificate(original: &Presentation, steps: &[EliminationStep], expect_trivial: bool) -> bool {
    let mut alive: Vec<&str> = original.generators().iter().map(String::as_str).collect();
    let mut rels: Vec<Word> = original.relators().to_vec();
    for step in steps {
        let g = step.generator.as_str();
        if !alive.contains(&g) || step.word.mentions(g) {
            return false;
        }
        if step.word.generators().any(|x| !alive.contains(&x)) {
            return false;
        }
        let target = Word::gen(g).mul(&step.word.inverse());
        let target_inv = target.inverse();
        let justified = rels.iter().any(|r| {
            let r = r.cyclic_reduce();
            r.rotations().iter().any(|rot| *rot == target || *rot == target_inv)
        });
        if !justified {
            return false;
        }
        let map = BTreeMap::from([(g.to_string(), step.word.clone())]);
        rels = rels.iter().map(|r| r.substitute(&map)).collect();
        alive.retain(|x| *x != g);
    }
    !expect_trivial || alive.is_empty()
}

#[cfg(test)]
mod tests {
    use super::super::word::commutator;
    use super::*;

    fn g(n: &str) -> Word {
        Word::gen(n)
    }

    #[test]
    fn single_generator_killed() {
        let p = Presentation::new(["g"], [g("g")]).unwrap();
        let c = eliminate_to_trivial(&p, DEFAULT_BUDGET);
        assert_eq!(c.status, CertificateStatus::ProvedTrivial);
        assert_eq!(c.elimination_order.len(), 1);
        assert_eq!(c.elimination_order[0].generator, "g");
        assert!(c.elimination_order[0].word.is_identity());
        assert!(c.replay(&p));
    }

    #[test]
    fn torus_group_is_nontrivial() {
        let p = Presentation::new(["t1", "t2"], [commutator(&g("t1"), &g("t2"))]).unwrap();
        let c = eliminate_to_trivial(&p, DEFAULT_BUDGET);
        assert_eq!(c.status, CertificateStatus::ProvedAbelianizationNontrivial);
        assert_eq!(c.abelianization.rank, 2);
        assert!(c.elimination_order.is_empty());
    }

    #[test]
    fn luttinger_style_relators_collapse() {
        // [x, b] a^-1 with x = 1 forces a = 1; [y, a] b^-1 then forces b = 1.
        let p = Presentation::new(
            ["x", "y", "a", "b"],
            [
                commutator(&g("x"), &g("b")).mul(&g("a").inverse()),
                commutator(&g("y"), &g("a")).mul(&g("b").inverse()),
                g("x"),
                g("y"),
            ],
        )
        .unwrap();
        let c = eliminate_to_trivial(&p, DEFAULT_BUDGET);
        assert_eq!(c.status, CertificateStatus::ProvedTrivial);
        assert!(c.replay(&p));
    }

    #[test]
    fn torsion_is_not_eliminated() {
        let p = Presentation::new(["x"], [Word::pow("x", 3)]).unwrap();
        let c = eliminate_to_trivial(&p, DEFAULT_BUDGET);
        assert_eq!(c.status, CertificateStatus::ProvedAbelianizationNontrivial);
        assert_eq!(c.abelianization.torsion, vec![3]);
    }

    #[test]
    fn perfect_group_presentation_is_inconclusive() {
        // Binary icosahedral group <s, t | (st)^2 = s^3 = t^5>: perfect and nontrivial.
        let p = Presentation::new(
            ["s", "t"],
            [Word::parse("s t").power(2).mul(&Word::pow("s", -3)), Word::pow("s", 3).mul(&Word::pow("t", -5))],
        )
        .unwrap();
        assert!(p.abelianization().is_trivial());
        let c = eliminate_to_trivial(&p, DEFAULT_BUDGET);
        assert_eq!(c.status, CertificateStatus::Inconclusive);
    }

    #[test]
    fn budget_limits_steps() {
        let p = Presentation::new(["a", "b", "c"], [g("a"), g("b"), g("c")]).unwrap();
        let c = eliminate_to_trivial(&p, 2);
        assert_eq!(c.elimination_order.len(), 2);
        assert_ne!(c.status, CertificateStatus::ProvedTrivial);
    }

    #[test]
    fn replay_rejects_forged_steps() {
        let p = Presentation::new(["a", "b"], [commutator(&g("a"), &g("b"))]).unwrap();
        let forged = vec![
            EliminationStep { generator: "a".into(), word: Word::identity(), rotated: false },
            EliminationStep { generator: "b".into(), word: Word::identity(), rotated: false },
        ];
        assert!(!replay_certificate(&p, &forged, true));
    }

    #[test]
    fn rotation_fallback_is_flagged() {
        // stored as b^4 a, so solving for a needs a rotation
        let p = Presentation::new(["a", "b"], [Word::parse("b^2 a b^2")]).unwrap();
        let c = eliminate_to_trivial(&p, DEFAULT_BUDGET);
        assert_eq!(c.elimination_order[0].generator, "a");
        assert!(c.used_cyclic_rotation());
        assert!(c.replay(&p));
    }
}
