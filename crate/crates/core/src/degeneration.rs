//! The degeneration order on ε-diagrams and its covering relations.
//!
//! `σ ≤ η` holds exactly when every prefix sum of σ is bounded by the
//! corresponding prefix sum of η. Minimal degenerations are found by brute
//! force over all diagrams of the same size.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::classification::DegenType;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_eps_diagrams_within, EpsDiagram, FormType, Limits, Partition};

/// Dominance order on partitions of the same size.
pub fn dominates(top: &Partition, bottom: &Partition) -> Result<bool> {
    if top.size() != bottom.size() {
        return Err(Error::contract(format!(
            "cannot compare [{top}] (size {}) with [{bottom}] (size {})",
            top.size(),
            bottom.size()
        )));
    }
    Ok(dominates_unchecked(top, bottom))
}

pub(crate) fn dominates_unchecked(top: &Partition, bottom: &Partition) -> bool {
    let len = top.len().max(bottom.len());
    let (mut t, mut b) = (0, 0);
    for i in 0..len {
        t += top.part(i);
        b += bottom.part(i);
        if b > t {
            return false;
        }
    }
    true
}

/// An ε-degeneration `bottom ≤ top`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegenPair {
    eps: FormType,
    top: Partition,
    bottom: Partition,
}

impl DegenPair {
    pub fn new(eps: FormType, bottom: Partition, top: Partition) -> Result<Self> {
        for p in [&bottom, &top] {
            if let Some(rule) = p.parity_violation(eps) {
                return Err(Error::InvalidDiagram {
                    partition: p.clone(),
                    eps,
                    rule,
                });
            }
        }
        if !dominates(&top, &bottom)? {
            return Err(Error::contract(format!(
                "[{bottom}] is not a degeneration of [{top}]"
            )));
        }
        Ok(DegenPair { eps, top, bottom })
    }

    pub(crate) fn new_unchecked(eps: FormType, bottom: Partition, top: Partition) -> Self {
        debug_assert!(DegenPair::new(eps, bottom.clone(), top.clone()).is_ok());
        DegenPair { eps, top, bottom }
    }

    pub fn eps(&self) -> FormType {
        self.eps
    }

    pub fn top(&self) -> &Partition {
        &self.top
    }

    pub fn bottom(&self) -> &Partition {
        &self.bottom
    }

    pub fn size(&self) -> usize {
        self.top.size()
    }

    pub fn is_trivial(&self) -> bool {
        self.top == self.bottom
    }
}

impl<'de> Deserialize<'de> for DegenPair {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            eps: FormType,
            top: Partition,
            bottom: Partition,
        }
        let raw = Raw::deserialize(deserializer)?;
        DegenPair::new(raw.eps, raw.bottom, raw.top).map_err(serde::de::Error::custom)
    }
}

/// Every diagram strictly below `eta`, in enumeration order.
pub fn degenerations(eta: &EpsDiagram) -> Result<Vec<EpsDiagram>> {
    degenerations_within(eta, &Limits::default())
}

pub fn degenerations_within(eta: &EpsDiagram, limits: &Limits) -> Result<Vec<EpsDiagram>> {
    let top = eta.partition();
    Ok(enumerate_eps_diagrams_within(eta.size(), eta.eps(), limits)?
        .into_iter()
        .filter(|d| d.partition() != top && dominates_unchecked(top, d.partition()))
        .collect())
}

/// The maximal elements of [`degenerations`], each paired with `eta`.
pub fn minimal_degenerations(eta: &EpsDiagram) -> Result<Vec<DegenPair>> {
    minimal_degenerations_within(eta, &Limits::default())
}

pub fn minimal_degenerations_within(eta: &EpsDiagram, limits: &Limits) -> Result<Vec<DegenPair>> {
    let below = degenerations_within(eta, limits)?;
    Ok(maximal_elements(&below)
        .into_iter()
        .map(|sigma| DegenPair::new_unchecked(eta.eps(), sigma.clone(), eta.partition().clone()))
        .collect())
}

fn maximal_elements(diagrams: &[EpsDiagram]) -> Vec<&Partition> {
    diagrams
        .iter()
        .map(EpsDiagram::partition)
        .filter(|&sigma| {
            !diagrams
                .iter()
                .map(EpsDiagram::partition)
                .any(|nu| nu != sigma && dominates_unchecked(nu, sigma))
        })
        .collect()
}

/// A covering relation `top → bottom`, optionally classified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub top: Partition,
    pub bottom: Partition,
    pub class: Option<DegenType>,
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Edge", 5)?;
        s.serialize_field("top", &self.top)?;
        s.serialize_field("bottom", &self.bottom)?;
        s.serialize_field("type", &self.class.map(|t| t.family().letter()))?;
        s.serialize_field("n", &self.class.and_then(|t| t.n()))?;
        s.serialize_field("codim", &self.class.map(|t| t.codim()))?;
        s.end()
    }
}

/// The Hasse diagram of the degeneration order on diagrams of one size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetGraph {
    pub eps: FormType,
    pub n: usize,
    pub nodes: Vec<Partition>,
    pub edges: Vec<Edge>,
}

impl PosetGraph {
    pub fn node_index(&self, p: &Partition) -> Option<usize> {
        self.nodes.iter().position(|q| q == p)
    }
}

pub fn hasse(n: usize, eps: FormType) -> Result<PosetGraph> {
    hasse_within(n, eps, &Limits::default())
}

/// Nodes in enumeration order; edges grouped by top node in the same order.
pub fn hasse_within(n: usize, eps: FormType, limits: &Limits) -> Result<PosetGraph> {
    limits.check_poset(n)?;
    let diagrams = enumerate_eps_diagrams_within(n, eps, limits)?;
    let edges = diagrams
        .par_iter()
        .map(|eta| minimal_degenerations_within(eta, limits))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .map(|pair| Edge {
            top: pair.top,
            bottom: pair.bottom,
            class: None,
        })
        .collect();
    Ok(PosetGraph {
        eps,
        n,
        nodes: diagrams.into_iter().map(EpsDiagram::into_partition).collect(),
        edges,
    })
}
