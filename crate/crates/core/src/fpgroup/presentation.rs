use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::snf::smith_normal_form;
use super::word::Word;
use crate::error::{Error, Result};

/// Generators plus relators. Relators are stored freely and cyclically
/// reduced, without duplicates or identity words.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Deserialize)]
struct RawPresentation {
    generators: Vec<String>,
    #[serde(default)]
    relators: Vec<Word>,
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPresentation::deserialize(d)?;
        Presentation::new(raw.generators, raw.relators).map_err(serde::de::Error::custom)
    }
}

/// Rank and torsion coefficients of the abelianization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Presentation {
    pub fn new<G, R>(generators: G, relators: R) -> Result<Self>
    where
        G: IntoIterator,
        G::Item: Into<String>,
        R: IntoIterator<Item = Word>,
    {
        let mut p = Presentation::default();
        let mut seen = BTreeSet::new();
        for g in generators {
            let g = g.into();
            if !seen.insert(g.clone()) {
                return Err(Error::DuplicateGenerator(g));
            }
            p.generators.push(g);
        }
        p.push_relators(relators)?;
        Ok(p)
    }

    /// The trivial group with no generators.
    pub fn trivial() -> Self {
        Presentation::default()
    }

    /// Free group on the given generators.
    pub fn free<G>(generators: G) -> Result<Self>
    where
        G: IntoIterator,
        G::Item: Into<String>,
    {
        Presentation::new(generators, std::iter::empty())
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn has_generator(&self, g: &str) -> bool {
        self.generators.iter().any(|x| x == g)
    }

    /// Checks that every generator in `w` belongs to this presentation.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.generators().find(|g| !self.has_generator(g)) {
            Some(g) => Err(Error::UnknownGenerator(g.to_string())),
            None => Ok(()),
        }
    }

    fn push_relators<R: IntoIterator<Item = Word>>(&mut self, rs: R) -> Result<()> {
        for r in rs {
            self.check_word(&r)?;
            let r = r.cyclic_reduce();
            if !r.is_identity() && !self.relators.contains(&r) {
                self.relators.push(r);
            }
        }
        Ok(())
    }

    /// Quotient by the normal closure of `rs`.
    pub fn add_relators<R: IntoIterator<Item = Word>>(&self, rs: R) -> Result<Presentation> {
        let mut p = self.clone();
        p.push_relators(rs)?;
        Ok(p)
    }

    /// Applies a generator renaming to generators and relators.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Presentation {
        let generators = self.generators.iter().map(|g| map.get(g).cloned().unwrap_or_else(|| g.clone())).collect();
        let relators = self.relators.iter().map(|r| r.rename(map)).collect();
        Presentation { generators, relators }
    }

    /// Free product with amalgamating relators `wA wB^-1`. Generators of `other`
    /// that collide with ours are renamed with a `_N` suffix first; the renaming
    /// is returned so callers can translate further words from `other`.
    pub fn amalgamate(
        &self,
        other: &Presentation,
        identifications: &[(Word, Word)],
    ) -> Result<(Presentation, BTreeMap<String, String>)> {
        let taken: BTreeSet<&str> = self.generators.iter().map(String::as_str).collect();
        let mut renaming = BTreeMap::new();
        let mut used: BTreeSet<String> = taken.iter().map(|s| s.to_string()).collect();
        used.extend(other.generators.iter().cloned());
        for g in &other.generators {
            if taken.contains(g.as_str()) {
                let fresh = (2..)
                    .map(|n| format!("{g}_{n}"))
                    .find(|cand| !used.contains(cand))
                    .expect("unbounded suffix search");
                used.insert(fresh.clone());
                renaming.insert(g.clone(), fresh);
            }
        }
        let other = other.rename(&renaming);
        let mut out = self.clone();
        out.generators.extend(other.generators.iter().cloned());
        out.push_relators(other.relators.iter().cloned())?;
        for (wa, wb) in identifications {
            self.check_word(wa)?;
            let wb = wb.rename(&renaming);
            other.check_word(&wb)?;
            out.push_relators([wa.mul(&wb.inverse())])?;
        }
        Ok((out, renaming))
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        let index: BTreeMap<&str, usize> = self.generators.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators.len()];
                for l in r.letters() {
                    row[index[l.gen.as_str()]] += l.exp;
                }
                row
            })
            .collect()
    }

    pub fn abelianization(&self) -> AbelianInvariants {
        let diag = smith_normal_form(&self.exponent_matrix());
        AbelianInvariants {
            rank: self.generators.len() - diag.len(),
            torsion: diag.into_iter().filter(|&d| d > 1).collect(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

pub fn add_relators<R: IntoIterator<Item = Word>>(p: &Presentation, rs: R) -> Result<Presentation> {
    p.add_relators(rs)
}

pub fn amalgamate(pa: &Presentation, pb: &Presentation, identifications: &[(Word, Word)]) -> Result<Presentation> {
    pa.amalgamate(pb, identifications).map(|(p, _)| p)
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    p.abelianization()
}

#[cfg(test)]
mod tests {
    use super::super::word::commutator;
    use super::*;

    fn g(n: &str) -> Word {
        Word::gen(n)
    }

    fn torus_group(a: &str, b: &str) -> Presentation {
        Presentation::new([a, b], [commutator(&g(a), &g(b))]).unwrap()
    }

    #[test]
    fn quotient_of_z2_by_generator() {
        let p = torus_group("t1", "t2").add_relators([g("t1")]).unwrap();
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.abelianization(), AbelianInvariants { rank: 1, torsion: vec![] });
    }

    #[test]
    fn empty_relator_set_is_noop() {
        let p = torus_group("t1", "t2");
        assert_eq!(p.add_relators(std::iter::empty()).unwrap(), p);
    }

    #[test]
    fn unknown_generator_rejected() {
        let p = torus_group("t1", "t2");
        assert_eq!(p.add_relators([g("z")]), Err(Error::UnknownGenerator("z".into())));
    }

    #[test]
    fn telescoping_sum_group_is_z2() {
        let p =
            Presentation::new(["s", "t", "s'", "t'"], [commutator(&g("s"), &g("t")), commutator(&g("s'"), &g("t'"))])
                .unwrap();
        let q = p.add_relators([g("s"), g("t").mul(&g("t'").inverse())]).unwrap();
        assert_eq!(q.abelianization(), AbelianInvariants { rank: 2, torsion: vec![] });
    }

    #[test]
    fn amalgamation_examples() {
        let a = Presentation::free(["a"]).unwrap();
        let b = Presentation::free(["b"]).unwrap();
        let p = amalgamate(&a, &b, &[(g("a"), g("b"))]).unwrap();
        assert_eq!(p.generators(), ["a", "b"]);
        assert_eq!(p.relators(), [Word::parse("a b^-1")]);
        assert_eq!(p.abelianization().rank, 1);

        let a = Presentation::new(["a"], [g("a")]).unwrap();
        let p = amalgamate(&a, &b, &[(g("a"), g("b"))]).unwrap();
        assert!(p.abelianization().is_trivial());
    }

    #[test]
    fn amalgamation_renames_collisions() {
        let b1 = torus_group("t1", "t2");
        let (p, ren) = b1.amalgamate(&b1, &[(g("t1"), g("t1"))]).unwrap();
        assert_eq!(p.generators(), ["t1", "t2", "t1_2", "t2_2"]);
        assert_eq!(ren["t1"], "t1_2");
        assert!(p.relators().contains(&Word::parse("t1 t1_2^-1")));
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(torus_group("t1", "t2").abelianization(), AbelianInvariants { rank: 2, torsion: vec![] });
        let p = Presentation::new(["x"], [Word::pow("x", 2)]).unwrap();
        assert_eq!(p.abelianization(), AbelianInvariants { rank: 0, torsion: vec![2] });
        assert_eq!(p.abelianization().to_string(), "Z/2");
    }

    #[test]
    fn abelianization_ignores_consequences() {
        let p = Presentation::new(["x", "y", "z"], [Word::parse("x y^2 z"), Word::parse("y^3")]).unwrap();
        let base = p.abelianization();
        // conjugate of a relator, and a product of relators
        let conj = Word::parse("z x").mul(&Word::parse("y^3")).mul(&Word::parse("z x").inverse());
        let prod = Word::parse("x y^2 z").mul(&Word::parse("y^3"));
        assert_eq!(p.add_relators([conj, prod]).unwrap().abelianization(), base);
    }

    #[test]
    fn json_format() {
        let p = torus_group("t1", "t2");
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"generators":["t1","t2"],"relators":[["t1",1,"t2",1,"t1",-1,"t2",-1]]}"#);
        let back: Presentation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let bad = r#"{"generators":["a"],"relators":[["b",1]]}"#;
        assert!(serde_json::from_str::<Presentation>(bad).is_err());
    }
}
