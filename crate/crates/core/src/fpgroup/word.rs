use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A syllable `gen^exp` with nonzero exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: String,
    pub exp: i64,
}

/// A freely reduced word in named generators. The empty word is the identity.
///
/// Every constructor reduces, so adjacent syllables always carry distinct
/// generators and no exponent is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(name: &str) -> Self {
        Word::pow(name, 1)
    }

    pub fn pow(name: &str, exp: i64) -> Self {
        Word::from_syllables([(name, exp)])
    }

    pub fn from_syllables<'a, I>(syllables: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, i64)>,
    {
        let letters = syllables.into_iter().map(|(g, exp)| Letter { gen: g.to_string(), exp }).collect();
        Word::reduce_letters(letters)
    }

    /// Parses a compact textual form: space separated `g`, `g^-1`, `g^3`.
    pub fn parse(text: &str) -> Self {
        let letters = text
            .split_whitespace()
            .map(|tok| match tok.split_once('^') {
                Some((g, e)) => Letter { gen: g.to_string(), exp: e.parse().expect("exponent") },
                None => Letter { gen: tok.to_string(), exp: 1 },
            })
            .collect();
        Word::reduce_letters(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Syllable count.
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Length counted with multiplicity, sum of |exp|.
    pub fn len(&self) -> usize {
        self.letters.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mentions(&self, gen: &str) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    pub fn generators(&self) -> impl Iterator<Item = &str> {
        self.letters.iter().map(|l| l.gen.as_str())
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| Letter { gen: l.gen.clone(), exp: -l.exp }).collect() }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word::reduce_letters(letters)
    }

    pub fn power(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Replaces every occurrence of a mapped generator by its image word.
    pub fn substitute(&self, map: &BTreeMap<String, Word>) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            match map.get(&l.gen) {
                Some(img) => {
                    let piece = img.power(l.exp);
                    letters.extend(piece.letters);
                }
                None => letters.push(l.clone()),
            }
        }
        Word::reduce_letters(letters)
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter { gen: map.get(&l.gen).cloned().unwrap_or_else(|| l.gen.clone()), exp: l.exp })
                .collect(),
        }
    }

    /// Cyclically reduced representative of the conjugacy class.
    pub fn cyclic_reduce(&self) -> Word {
        let mut letters = self.letters.clone();
        loop {
            if letters.len() >= 2 && letters[0].gen == letters[letters.len() - 1].gen {
                let last = letters.pop().expect("nonempty");
                letters[0].exp += last.exp;
                if letters[0].exp == 0 {
                    letters.remove(0);
                }
                continue;
            }
            break;
        }
        Word { letters }
    }

    /// All cyclic rotations at syllable boundaries of a cyclically reduced word,
    /// including splits inside a syllable so that any single letter can lead.
    pub fn rotations(&self) -> Vec<Word> {
        let flat = self.flatten();
        (0..flat.len())
            .map(|i| {
                let rotated: Vec<Letter> = flat[i..].iter().chain(flat[..i].iter()).cloned().collect();
                Word::reduce_letters(rotated)
            })
            .collect()
    }

    fn flatten(&self) -> Vec<Letter> {
        self.letters
            .iter()
            .flat_map(|l| {
                let unit = l.exp.signum();
                std::iter::repeat_n(Letter { gen: l.gen.clone(), exp: unit }, l.exp.unsigned_abs() as usize)
            })
            .collect()
    }

    fn reduce_letters(input: Vec<Letter>) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(input.len());
        for l in input {
            if l.exp == 0 {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.gen == l.gen => {
                    top.exp += l.exp;
                    if top.exp == 0 {
                        out.pop();
                    }
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }
}

/// Freely reduced form. Words are kept reduced, so this is a normalising clone.
pub fn free_reduce(w: &Word) -> Word {
    Word::reduce_letters(w.letters.clone())
}

/// u v u^-1 v^-1.
pub fn commutator(u: &Word, v: &Word) -> Word {
    u.mul(v).mul(&u.inverse()).mul(&v.inverse())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.exp == 1 { l.gen.clone() } else { format!("{}^{}", l.gen, l.exp) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

// Serialized as a flat array alternating generator and exponent: ["x",1,"y",-1].
impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2 * self.letters.len()))?;
        for l in &self.letters {
            seq.serialize_element(&l.gen)?;
            seq.serialize_element(&l.exp)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct WordVisitor;

        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Item {
            Gen(String),
            Exp(i64),
        }

        impl<'de> Visitor<'de> for WordVisitor {
            type Value = Word;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a flat array alternating generator names and integer exponents")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Word, A::Error> {
                let mut letters = Vec::new();
                loop {
                    let gen = match seq.next_element::<Item>()? {
                        None => break,
                        Some(Item::Gen(g)) => g,
                        Some(Item::Exp(_)) => return Err(de::Error::custom("expected generator name")),
                    };
                    let exp = match seq.next_element::<Item>()? {
                        Some(Item::Exp(e)) => e,
                        _ => return Err(de::Error::custom(format!("missing exponent after `{gen}`"))),
                    };
                    letters.push(Letter { gen, exp });
                }
                Ok(Word::reduce_letters(letters))
            }
        }

        deserializer.deserialize_seq(WordVisitor)
    }
}
