//! The eight families of minimal irreducible degenerations.
//!
//! | family | algebra      | ε  | top η              | bottom σ             | codim |
//! |--------|--------------|----|--------------------|----------------------|-------|
//! | a      | sp₂          | −1 | (2)                | (1,1)                | 2     |
//! | b      | sp₂ₙ, n ≥ 2  | −1 | (2n)               | (2n−2,2)             | 2     |
//! | c      | so₂ₙ₊₁       | +1 | (2n+1)             | (2n−1,1,1)           | 2     |
//! | d      | sp₄ₙ₊₂       | −1 | (2n+1,2n+1)        | (2n,2n,2)            | 2     |
//! | e      | so₄ₙ         | +1 | (2n,2n)            | (2n−1,2n−1,1,1)      | 2     |
//! | f      | so₂ₙ₊₁, n ≥ 2| +1 | (2,2,1^{2n−3})     | (1^{2n+1})           | 4n−4  |
//! | g      | sp₂ₙ         | −1 | (2,1^{2n−2})       | (1^{2n})             | 2n    |
//! | h      | so₂ₙ, n ≥ 3  | +1 | (2,2,1^{2n−4})     | (1^{2n})             | 4n−6  |
//!
//! The published table prints `4n−2` as the codimension of both f and h.
//! The exact matrix computation gives the values in the last column (the
//! dimension of the minimal orbit, `2N−6` in `so_N`); [`DegenType::codim`]
//! reports those and [`DegenType::table_codim`] keeps the printed ones.
//!
//! Shapes overlap in two places. `g` at `n = 1` is the same pair as `a` and
//! is reported as `a`. `h` at `n = 2` would be the pair `e` at `n = 1`; the
//! range of `h` starts at 3, so the pair is reported as `e`.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::degeneration::{DegenPair, PosetGraph};
use crate::error::{Error, Result};
use crate::partitions::{FormType, Partition};
use crate::reduction::{irreducible_core, ReductionResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
        Family::H,
    ];

    pub fn letter(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::D => "d",
            Family::E => "e",
            Family::F => "f",
            Family::G => "g",
            Family::H => "h",
        }
    }

    pub fn eps(self) -> FormType {
        match self {
            Family::A | Family::B | Family::D | Family::G => FormType::Symplectic,
            Family::C | Family::E | Family::F | Family::H => FormType::Orthogonal,
        }
    }

    /// Smallest admissible parameter; `None` for the unparametrized family a.
    pub fn min_n(self) -> Option<usize> {
        match self {
            Family::A => None,
            Family::C | Family::D | Family::E | Family::G => Some(1),
            Family::B | Family::F => Some(2),
            Family::H => Some(3),
        }
    }

    /// The parameter a pair of total size `size` would need, if any.
    fn n_for_size(self, size: usize) -> Option<usize> {
        let n = match self {
            Family::A => return None,
            Family::B | Family::G | Family::H if size % 2 == 0 => size / 2,
            Family::C | Family::F if size % 2 == 1 => size / 2,
            Family::D if size % 4 == 2 => size / 4,
            Family::E if size % 4 == 0 => size / 4,
            _ => return None,
        };
        Some(n)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse {
                token: s.to_string(),
                reason: "family must be one of a..h".into(),
            })
    }
}

/// A family together with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegenType {
    family: Family,
    n: Option<usize>,
}

impl DegenType {
    pub fn new(family: Family, n: Option<usize>) -> Result<Self> {
        match (family.min_n(), n) {
            (None, None) => Ok(DegenType { family, n }),
            (Some(min), Some(n)) if n >= min => Ok(DegenType { family, n: Some(n) }),
            (None, Some(_)) => Err(Error::contract("family a takes no parameter")),
            (Some(min), _) => Err(Error::contract(format!(
                "family {family} needs a parameter n >= {min}"
            ))),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn n(self) -> Option<usize> {
        self.n
    }

    fn param(self) -> usize {
        self.n.unwrap_or(1)
    }

    /// Codimension as printed in the classification table.
    pub fn table_codim(self) -> usize {
        let n = self.param();
        match self.family {
            Family::A | Family::B | Family::C | Family::D | Family::E => 2,
            Family::F | Family::H => 4 * n - 2,
            Family::G => 2 * n,
        }
    }

    /// Codimension confirmed by the matrix oracle. Differs from
    /// [`table_codim`](Self::table_codim) only for f and h.
    pub fn codim(self) -> usize {
        let n = self.param();
        match self.family {
            Family::F => 4 * n - 4,
            Family::H => 4 * n - 6,
            _ => self.table_codim(),
        }
    }

    pub fn codim_disagrees_with_table(self) -> bool {
        self.codim() != self.table_codim()
    }

    /// The Lie algebra the family lives in, e.g. `sp8`.
    pub fn algebra_label(self) -> String {
        let n = self.param();
        match self.family {
            Family::A => "sp2".to_string(),
            Family::B | Family::G => format!("sp{}", 2 * n),
            Family::C | Family::F => format!("so{}", 2 * n + 1),
            Family::D => format!("sp{}", 4 * n + 2),
            Family::E => format!("so{}", 4 * n),
            Family::H => format!("so{}", 2 * n),
        }
    }

    /// The pair `(σ, η)` of this family.
    pub fn instantiate(self) -> DegenPair {
        let n = self.param();
        let ones = |k: usize| vec![1; k];
        let (top, bottom): (Vec<usize>, Vec<usize>) = match self.family {
            Family::A => (vec![2], vec![1, 1]),
            Family::B => (vec![2 * n], vec![2 * n - 2, 2]),
            Family::C => (vec![2 * n + 1], vec![2 * n - 1, 1, 1]),
            Family::D => (vec![2 * n + 1, 2 * n + 1], vec![2 * n, 2 * n, 2]),
            Family::E => (vec![2 * n, 2 * n], vec![2 * n - 1, 2 * n - 1, 1, 1]),
            Family::F => ([vec![2, 2], ones(2 * n - 3)].concat(), ones(2 * n + 1)),
            Family::G => ([vec![2], ones(2 * n - 2)].concat(), ones(2 * n)),
            Family::H => ([vec![2, 2], ones(2 * n - 4)].concat(), ones(2 * n)),
        };
        DegenPair::new_unchecked(
            self.family.eps(),
            Partition::from_parts_lossy(bottom),
            Partition::from_parts_lossy(top),
        )
    }
}

impl fmt::Display for DegenType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            Some(n) => write!(f, "{} (n={n})", self.family),
            None => write!(f, "{}", self.family),
        }
    }
}

impl Serialize for DegenType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let extra = usize::from(self.n.is_some()) + usize::from(self.codim_disagrees_with_table());
        let mut s = serializer.serialize_struct("DegenType", 2 + extra)?;
        s.serialize_field("family", &self.family)?;
        if let Some(n) = self.n {
            s.serialize_field("n", &n)?;
        }
        s.serialize_field("codim", &self.codim())?;
        if self.codim_disagrees_with_table() {
            s.serialize_field("table_codim", &self.table_codim())?;
        }
        s.end()
    }
}

impl<'de> Deserialize<'de> for DegenType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            family: Family,
            n: Option<usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        DegenType::new(raw.family, raw.n).map_err(serde::de::Error::custom)
    }
}

/// Matches an irreducible minimal degeneration against the table.
pub fn classify_core(pair: &DegenPair) -> Result<DegenType> {
    let size = pair.size();
    for family in Family::ALL {
        if family.eps() != pair.eps() {
            continue;
        }
        let candidate = match family.n_for_size(size) {
            Some(n) => DegenType::new(family, Some(n)),
            None if family == Family::A && size == 2 => DegenType::new(family, None),
            None => continue,
        };
        let Ok(candidate) = candidate else { continue };
        if &candidate.instantiate() == pair {
            return Ok(candidate);
        }
    }
    Err(Error::NotMinimalIrreducible {
        eps: pair.eps(),
        top: pair.top().clone(),
        bottom: pair.bottom().clone(),
    })
}

/// A minimal degeneration together with its core and the family of the core.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classified {
    pub reduction: ReductionResult,
    pub degen_type: DegenType,
}

impl Classified {
    /// Codimension of the original pair; cancellation preserves it.
    pub fn codim(&self) -> usize {
        self.degen_type.codim()
    }
}

pub fn classify_minimal_degeneration(pair: &DegenPair) -> Result<Classified> {
    let reduction = irreducible_core(pair)?;
    let degen_type = classify_core(&reduction.core)?;
    Ok(Classified {
        reduction,
        degen_type,
    })
}

/// Fills in the family of every edge of a Hasse diagram.
pub fn annotate(graph: &mut PosetGraph) -> Result<()> {
    for edge in &mut graph.edges {
        let pair = DegenPair::new_unchecked(graph.eps, edge.bottom.clone(), edge.top.clone());
        edge.class = Some(classify_minimal_degeneration(&pair)?.degen_type);
    }
    Ok(())
}
