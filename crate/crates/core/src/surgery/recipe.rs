use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Push-off curve of a Lagrangian torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PushOff {
    M,
    L,
}

impl fmt::Display for PushOff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PushOff::M => "m",
            PushOff::L => "l",
        })
    }
}

/// A curve on the boundary of a marker neighborhood: a torus push-off, the
/// meridian, or the k-th (1-based) standard generator of a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum CurveRef {
    M,
    L,
    Mu,
    Img(usize),
}

impl fmt::Display for CurveRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveRef::M => f.write_str("m"),
            CurveRef::L => f.write_str("l"),
            CurveRef::Mu => f.write_str("mu"),
            CurveRef::Img(k) => write!(f, "img{k}"),
        }
    }
}

impl FromStr for CurveRef {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "m" => Ok(CurveRef::M),
            "l" => Ok(CurveRef::L),
            "mu" => Ok(CurveRef::Mu),
            _ => s
                .strip_prefix("img")
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .map(CurveRef::Img)
                .ok_or_else(|| format!("unknown curve `{s}`; expected m, l, mu or img<k>")),
        }
    }
}

impl TryFrom<String> for CurveRef {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<CurveRef> for String {
    fn from(c: CurveRef) -> String {
        c.to_string()
    }
}

/// Identification `left = right^exponent` across a symplectic sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gluing {
    pub left: CurveRef,
    pub right: CurveRef,
    #[serde(default = "one")]
    pub exponent: i64,
}

fn one() -> i64 {
    1
}

impl Gluing {
    pub fn new(left: CurveRef, right: CurveRef, exponent: i64) -> Self {
        Gluing { left, right, exponent }
    }
}

/// A construction as a tree of steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Recipe {
    Base {
        block: String,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        params: Vec<i64>,
    },
    Sum {
        left: Box<Recipe>,
        #[serde(rename = "leftSurface")]
        left_surface: String,
        right: Box<Recipe>,
        #[serde(rename = "rightSurface")]
        right_surface: String,
        /// Empty means the default convention.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        gluing: Vec<Gluing>,
    },
    Luttinger {
        child: Box<Recipe>,
        torus: String,
        curve: PushOff,
        sign: i64,
    },
    BlowUp {
        child: Box<Recipe>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        at: Option<String>,
    },
    Resolve {
        child: Box<Recipe>,
        components: Vec<String>,
        intersections: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        into: Option<String>,
    },
}

impl Recipe {
    pub fn base(block: &str) -> Recipe {
        Recipe::Base { block: block.into(), params: vec![] }
    }

    pub fn base_with(block: &str, params: &[i64]) -> Recipe {
        Recipe::Base { block: block.into(), params: params.to_vec() }
    }

    pub fn sum(left: Recipe, left_surface: &str, right: Recipe, right_surface: &str) -> Recipe {
        Recipe::sum_glued(left, left_surface, right, right_surface, vec![])
    }

    pub fn sum_glued(
        left: Recipe,
        left_surface: &str,
        right: Recipe,
        right_surface: &str,
        gluing: Vec<Gluing>,
    ) -> Recipe {
        Recipe::Sum {
            left: Box::new(left),
            left_surface: left_surface.into(),
            right: Box::new(right),
            right_surface: right_surface.into(),
            gluing,
        }
    }

    pub fn luttinger(self, torus: &str, curve: PushOff, sign: i64) -> Recipe {
        Recipe::Luttinger { child: Box::new(self), torus: torus.into(), curve, sign }
    }

    pub fn blow_up(self, at: Option<&str>) -> Recipe {
        Recipe::BlowUp { child: Box::new(self), at: at.map(Into::into) }
    }

    pub fn resolve(self, components: &[&str], intersections: u32, into: Option<&str>) -> Recipe {
        Recipe::Resolve {
            child: Box::new(self),
            components: components.iter().map(|s| s.to_string()).collect(),
            intersections,
            into: into.map(Into::into),
        }
    }

    /// Number of steps in the tree.
    pub fn size(&self) -> usize {
        1 + match self {
            Recipe::Base { .. } => 0,
            Recipe::Sum { left, right, .. } => left.size() + right.size(),
            Recipe::Luttinger { child, .. } | Recipe::BlowUp { child, .. } | Recipe::Resolve { child, .. } => {
                child.size()
            }
        }
    }

    /// Compact JSON with a fixed field order; stable input for content hashes.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("recipes always serialize")
    }

    /// One-line description of the top step.
    pub fn step_label(&self) -> String {
        match self {
            Recipe::Base { block, params } if params.is_empty() => format!("base {block}"),
            Recipe::Base { block, params } => {
                let ps: Vec<String> = params.iter().map(|p| p.to_string()).collect();
                format!("base {block}({})", ps.join(","))
            }
            Recipe::Sum { left_surface, right_surface, gluing, .. } => {
                let mut s = format!("sum {left_surface} ~ {right_surface}");
                if !gluing.is_empty() {
                    let gs: Vec<String> = gluing
                        .iter()
                        .map(|g| {
                            if g.exponent == 1 {
                                format!("{}={}", g.left, g.right)
                            } else {
                                format!("{}={}^{}", g.left, g.right, g.exponent)
                            }
                        })
                        .collect();
                    s.push_str(&format!(" [{}]", gs.join(", ")));
                }
                s
            }
            Recipe::Luttinger { torus, curve, sign, .. } => format!("luttinger {torus} {curve} {sign:+}"),
            Recipe::BlowUp { at: Some(at), .. } => format!("blowup at {at}"),
            Recipe::BlowUp { at: None, .. } => "blowup".into(),
            Recipe::Resolve { components, intersections, into, .. } => {
                let mut s = format!("resolve {} n={intersections}", components.join(" "));
                if let Some(into) = into {
                    s.push_str(&format!(" -> {into}"));
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = Recipe::base("B").luttinger("T1", PushOff::L, 1);
        let s = r.canonical_json();
        assert_eq!(s, r#"{"op":"luttinger","child":{"op":"base","block":"B"},"torus":"T1","curve":"l","sign":1}"#);
        assert_eq!(serde_json::from_str::<Recipe>(&s).unwrap(), r);
    }

    #[test]
    fn sum_json_uses_camel_case_markers() {
        let r = Recipe::sum_glued(
            Recipe::base("B"),
            "T1",
            Recipe::base("Z"),
            "S8",
            vec![Gluing::new(CurveRef::L, CurveRef::M, 1), Gluing::new(CurveRef::M, CurveRef::L, -1)],
        );
        let s = r.canonical_json();
        assert!(s.contains(r#""leftSurface":"T1""#));
        assert!(s.contains(r#"{"left":"m","right":"l","exponent":-1}"#));
        assert_eq!(serde_json::from_str::<Recipe>(&s).unwrap(), r);
    }

    #[test]
    fn curve_refs() {
        assert_eq!("img12".parse::<CurveRef>().unwrap(), CurveRef::Img(12));
        assert!("img0".parse::<CurveRef>().is_err());
        assert!("x".parse::<CurveRef>().is_err());
        let g: Gluing = serde_json::from_str(r#"{"left":"mu","right":"mu"}"#).unwrap();
        assert_eq!(g.exponent, 1);
    }

    #[test]
    fn blowup_and_resolve_round_trip() {
        let r = Recipe::base("B").resolve(&["F", "H1"], 1, Some("F3")).blow_up(Some("F3"));
        let s = r.canonical_json();
        assert!(s.starts_with(r#"{"op":"blowup""#));
        assert_eq!(serde_json::from_str::<Recipe>(&s).unwrap(), r);
        assert_eq!(r.size(), 3);
        assert_eq!(r.step_label(), "blowup at F3");
    }
}
