//! Partitions, their Young-diagram operations, and ε-diagrams.
//!
//! A partition labels the Jordan type of a nilpotent matrix. Which partitions
//! occur for a given bilinear form is decided purely by multiplicity parity:
//! for a symmetric form every even part occurs an even number of times, for
//! an alternating form every odd part does.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Size bounds for the exhaustive and exact computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for enumerating diagrams of size `n`.
    pub enumeration: usize,
    /// Largest `n` for building a whole Hasse diagram.
    pub poset: usize,
    /// Largest dimension of a matrix model.
    pub oracle: usize,
}

impl Limits {
    pub const DEFAULT_ENUMERATION: usize = 40;
    pub const DEFAULT_POSET: usize = 26;
    pub const DEFAULT_ORACLE: usize = 24;

    /// Same defaults, with the enumeration and poset bounds replaced by `max`.
    pub fn with_max_size(max: usize) -> Self {
        Limits {
            enumeration: max,
            poset: max,
            ..Limits::default()
        }
    }

    pub(crate) fn check_enumeration(&self, n: usize) -> Result<()> {
        check_bound("enumeration size", n, self.enumeration)
    }

    pub(crate) fn check_poset(&self, n: usize) -> Result<()> {
        check_bound("poset size", n, self.poset)
    }

    pub(crate) fn check_oracle(&self, n: usize) -> Result<()> {
        check_bound("oracle dimension", n, self.oracle)
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: Self::DEFAULT_ENUMERATION,
            poset: Self::DEFAULT_POSET,
            oracle: Self::DEFAULT_ORACLE,
        }
    }
}

fn check_bound(what: &'static str, requested: usize, bound: usize) -> Result<()> {
    if requested > bound {
        Err(Error::Capacity {
            what,
            requested,
            bound,
        })
    } else {
        Ok(())
    }
}

/// Type of the nondegenerate form: symmetric (`+1`) or alternating (`-1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormType {
    Orthogonal,
    Symplectic,
}

impl FormType {
    pub fn sign(self) -> i8 {
        match self {
            FormType::Orthogonal => 1,
            FormType::Symplectic => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Option<Self> {
        match sign {
            1 => Some(FormType::Orthogonal),
            -1 => Some(FormType::Symplectic),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            FormType::Orthogonal => FormType::Symplectic,
            FormType::Symplectic => FormType::Orthogonal,
        }
    }

    /// `(-1)^s · self`.
    pub fn flip_times(self, s: usize) -> Self {
        if s % 2 == 0 {
            self
        } else {
            self.flip()
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormType::Orthogonal => "orthogonal",
            FormType::Symplectic => "symplectic",
        }
    }

    /// Parts of this parity must come in pairs.
    fn paired_parity(self) -> usize {
        match self {
            FormType::Orthogonal => 0,
            FormType::Symplectic => 1,
        }
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({:+})", self.name(), self.sign())
    }
}

impl FromStr for FormType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "o" | "orthogonal" => Ok(FormType::Orthogonal),
            "-1" | "sp" | "symplectic" => Ok(FormType::Symplectic),
            other => Err(Error::Parse {
                token: other.to_string(),
                reason: "form type must be +1 or -1".into(),
            }),
        }
    }
}

impl Serialize for FormType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.sign())
    }
}

impl<'de> Deserialize<'de> for FormType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let sign = i64::deserialize(deserializer)?;
        FormType::from_sign(sign)
            .ok_or_else(|| serde::de::Error::custom(format!("form type must be ±1, got {sign}")))
    }
}

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse {
                token: "0".into(),
                reason: "parts must be positive".into(),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Drops zero parts and sorts.
    pub fn from_parts_lossy(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `[1^n]`.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn largest(&self) -> usize {
        self.part(0)
    }

    /// Column heights of the Young diagram.
    pub fn dual(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Part size → number of occurrences.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts
    }

    pub fn from_multiplicities(counts: &BTreeMap<usize, usize>) -> Self {
        Partition::from_parts_lossy(
            counts
                .iter()
                .flat_map(|(&part, &count)| std::iter::repeat(part).take(count)),
        )
    }

    /// Whether this is the zero orbit `[1^n]`.
    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Removes the first column: every part shrinks by one.
    pub fn erase_first_column(&self) -> Partition {
        self.erase_columns(1)
    }

    /// Removes the first `s` columns.
    pub fn erase_columns(&self, s: usize) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|&&p| p > s)
                .map(|&p| p - s)
                .collect(),
        }
    }

    /// Removes the first `r` rows.
    pub fn erase_rows(&self, r: usize) -> Partition {
        Partition {
            parts: self.parts.iter().skip(r).copied().collect(),
        }
    }

    /// Prepends columns of the given heights (tallest first). Each height
    /// must be at least the current number of rows.
    pub fn add_columns(&self, heights: &[usize]) -> Partition {
        let mut dual = heights.to_vec();
        dual.extend_from_slice(self.dual().parts());
        Partition { parts: dual }.dual()
    }

    /// Prepends rows of the given lengths (longest first).
    pub fn add_rows(&self, rows: &[usize]) -> Partition {
        let mut parts = rows.to_vec();
        parts.extend_from_slice(&self.parts);
        Partition { parts }
    }

    /// First multiplicity-parity violation for the given form type, if any.
    pub fn parity_violation(&self, eps: FormType) -> Option<String> {
        let paired = eps.paired_parity();
        self.multiplicities()
            .into_iter()
            .rev()
            .find(|&(part, count)| part % 2 == paired && count % 2 == 1)
            .map(|(part, count)| {
                let kind = if paired == 0 { "even" } else { "odd" };
                format!("{kind} part {part} has odd multiplicity {count}")
            })
    }

    pub fn is_eps_diagram(&self, eps: FormType) -> bool {
        self.parity_violation(eps).is_none()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Parses comma- or whitespace-separated positive integers in any order.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let mut parts = Vec::new();
    for token in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let value: i64 = token.parse().map_err(|_| Error::Parse {
            token: token.to_string(),
            reason: "not an integer".into(),
        })?;
        if value <= 0 {
            return Err(Error::Parse {
                token: token.to_string(),
                reason: "parts must be positive".into(),
            });
        }
        parts.push(value as usize);
    }
    Partition::new(parts)
}

/// A partition together with the type of form it is a Jordan type for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EpsDiagram {
    eps: FormType,
    partition: Partition,
}

impl EpsDiagram {
    pub fn new(partition: Partition, eps: FormType) -> Result<Self> {
        match partition.parity_violation(eps) {
            Some(rule) => Err(Error::InvalidDiagram {
                partition,
                eps,
                rule,
            }),
            None => Ok(EpsDiagram { eps, partition }),
        }
    }

    pub fn eps(&self) -> FormType {
        self.eps
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn size(&self) -> usize {
        self.partition.size()
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }
}

impl<'de> Deserialize<'de> for EpsDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            eps: FormType,
            partition: Partition,
        }
        let raw = Raw::deserialize(deserializer)?;
        EpsDiagram::new(raw.partition, raw.eps).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for EpsDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ({:+})", self.partition, self.eps.sign())
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn descend(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            descend(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    descend(n, n, &mut Vec::new(), &mut out);
    out
}

/// The ε-diagrams of size `n`, reverse-lexicographic.
pub fn enumerate_eps_diagrams(n: usize, eps: FormType) -> Result<Vec<EpsDiagram>> {
    enumerate_eps_diagrams_within(n, eps, &Limits::default())
}

pub fn enumerate_eps_diagrams_within(
    n: usize,
    eps: FormType,
    limits: &Limits,
) -> Result<Vec<EpsDiagram>> {
    limits.check_enumeration(n)?;
    Ok(partitions_of(n)
        .into_iter()
        .filter(|p| p.is_eps_diagram(eps))
        .map(|partition| EpsDiagram { eps, partition })
        .collect())
}
