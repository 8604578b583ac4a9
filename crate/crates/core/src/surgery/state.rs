use std::collections::BTreeMap;

use serde::Serialize;

use crate::blocks::{SurfaceMarker, TorusMarker};
use crate::fpgroup::{AbelianInvariants, Presentation, TrivialityCertificate, Word};
use crate::invariants::CharNumbers;

/// Relators of a closed ambient manifold (e.g. a surface product) that hold
/// once every meridian in `meridians` is trivial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AmbientTier {
    pub block: String,
    pub meridians: Vec<Word>,
    pub relators: Vec<Word>,
}

impl AmbientTier {
    fn rename(&self, map: &BTreeMap<String, String>) -> AmbientTier {
        AmbientTier {
            block: self.block.clone(),
            meridians: self.meridians.iter().map(|w| w.rename(map)).collect(),
            relators: self.relators.iter().map(|w| w.rename(map)).collect(),
        }
    }
}

/// Presentation of the group of the manifold with its unconsumed tori
/// removed. Marked surfaces are not removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupData {
    pub presentation: Presentation,
    /// Some relators may be missing: the presented group surjects onto the
    /// true one. Triviality still transfers; nontriviality does not.
    pub cover: bool,
    pub tiers: Vec<AmbientTier>,
}

impl GroupData {
    pub fn is_complete(&self) -> bool {
        !self.cover && self.tiers.is_empty()
    }

    pub(crate) fn rename(&self, map: &BTreeMap<String, String>) -> GroupData {
        GroupData {
            presentation: self.presentation.rename(map),
            cover: self.cover,
            tiers: self.tiers.iter().map(|t| t.rename(map)).collect(),
        }
    }
}

/// A surviving torus together with the block it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkedTorus {
    #[serde(flatten)]
    pub marker: TorusMarker,
    pub origin: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pi1Status {
    ProvedTrivial,
    NotSimplyConnected,
    Inconclusive,
    Unknown,
}

impl Pi1Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Pi1Status::ProvedTrivial => "proved-trivial",
            Pi1Status::NotSimplyConnected => "not-simply-connected",
            Pi1Status::Inconclusive => "inconclusive",
            Pi1Status::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi1Summary {
    pub status: Pi1Status,
    /// Abelianization of the presentation that was examined. When `cover` is
    /// set the true first homology is a quotient of this.
    pub abelianization: Option<AbelianInvariants>,
    pub cover: bool,
    pub steps: usize,
    pub used_cyclic_rotation: bool,
    pub released_tiers: Vec<String>,
    #[serde(skip)]
    pub certificate: Option<TrivialityCertificate>,
    /// The closed presentation the certificate refers to.
    #[serde(skip)]
    pub examined: Option<Presentation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub depth: usize,
    pub step: String,
    pub e: i64,
    pub sigma: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldState {
    pub char: CharNumbers,
    pub group: Option<GroupData>,
    pub tori: Vec<MarkedTorus>,
    pub surfaces: Vec<SurfaceMarker>,
    /// Reason the intersection form is known to be odd, if any.
    pub odd_form_witness: Option<String>,
    pub minimality_chain: Vec<String>,
    pub trace: Vec<TraceEntry>,
    /// Filled in by certification.
    pub pi1: Option<Pi1Summary>,
}

impl ManifoldState {
    pub fn torus(&self, name: &str) -> Option<&MarkedTorus> {
        self.tori.iter().find(|t| t.marker.name == name)
    }

    pub fn surface(&self, name: &str) -> Option<&SurfaceMarker> {
        self.surfaces.iter().find(|s| s.name == name)
    }

    pub fn marker_names(&self) -> impl Iterator<Item = &str> {
        self.tori.iter().map(|t| t.marker.name.as_str()).chain(self.surfaces.iter().map(|s| s.name.as_str()))
    }

    /// Group presentation of the closed manifold: the tori complement with
    /// every remaining torus meridian killed.
    pub fn closed_presentation(&self) -> Option<Presentation> {
        let g = self.group.as_ref()?;
        let meridians: Vec<Word> =
            self.tori.iter().filter_map(|t| t.marker.words.as_ref().map(|w| w.meridian.clone())).collect();
        Some(g.presentation.add_relators(meridians).expect("torus words live in the presentation"))
    }

    pub fn pi1_status(&self) -> Pi1Status {
        self.pi1.as_ref().map_or(Pi1Status::Unknown, |p| p.status)
    }

    /// True when a marker of odd square survives, a block asserted an odd
    /// class, or the signature is not divisible by 8 on a simply connected
    /// manifold.
    pub fn has_odd_form_witness(&self) -> bool {
        self.odd_form_witness.is_some()
            || self.surfaces.iter().any(|s| s.square.rem_euclid(2) == 1)
            || (self.char.sigma.rem_euclid(8) != 0 && self.pi1_status() == Pi1Status::ProvedTrivial)
    }

    pub(crate) fn rename_words(&mut self, map: &BTreeMap<String, String>) {
        if map.is_empty() {
            return;
        }
        for t in &mut self.tori {
            if let Some(w) = &mut t.marker.words {
                w.meridian = w.meridian.rename(map);
                w.m = w.m.rename(map);
                w.l = w.l.rename(map);
            }
        }
        for s in &mut self.surfaces {
            if let Some(images) = &mut s.pi1_images {
                for w in images.iter_mut() {
                    *w = w.rename(map);
                }
            }
        }
    }
}
