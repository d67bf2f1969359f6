//! Normality verdicts for orbit closures.
//!
//! Normality of a closure is decided at its codimension-2 orbits, and
//! those are minimal degenerations. After cancellation each one is a
//! table family: a, b and c are normal there, e is not, and d is not
//! decided. So a closure is not normal as soon as one minimal degeneration
//! has a family-e core, normal when no core is of family d or e, and
//! undetermined otherwise.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classification::{classify_minimal_degeneration, DegenType, Family};
use crate::degeneration::{minimal_degenerations_within, DegenPair};
use crate::error::Result;
use crate::matrix_oracle::OrbitDims;
use crate::partitions::{enumerate_eps_diagrams_within, EpsDiagram, FormType, Limits, Partition};
use crate::reduction::ReductionResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Normal,
    NotNormal,
    Undetermined,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Normal => "Normal",
            Verdict::NotNormal => "NotNormal",
            Verdict::Undetermined => "Undetermined",
        }
    }

    fn from_families(families: impl IntoIterator<Item = Family>) -> Self {
        let (mut d, mut e) = (false, false);
        for family in families {
            d |= family == Family::D;
            e |= family == Family::E;
        }
        if e {
            Verdict::NotNormal
        } else if d {
            Verdict::Undetermined
        } else {
            Verdict::Normal
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One minimal degeneration of the analyzed orbit, classified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub sigma: Partition,
    #[serde(flatten)]
    pub reduction: ReductionResult,
    #[serde(flatten)]
    pub degen_type: DegenType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_codim: Option<usize>,
}

impl Witness {
    pub fn family(&self) -> Family {
        self.degen_type.family()
    }

    pub fn codim(&self) -> usize {
        self.degen_type.codim()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityVerdict {
    #[serde(flatten)]
    pub eta: EpsDiagram,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl NormalityVerdict {
    pub fn witness_families(&self) -> Vec<Family> {
        self.witnesses.iter().map(Witness::family).collect()
    }

    /// Fills `oracle_codim` of every witness from exact orbit dimensions.
    /// Fails when the oracle disagrees with the family's codimension.
    pub fn attach_oracle_codims(&mut self, dims: &mut OrbitDims) -> Result<()> {
        for w in &mut self.witnesses {
            let pair = DegenPair::new(self.eta.eps(), w.sigma.clone(), self.eta.partition().clone())?;
            let codim = dims.codim(&pair)?;
            if codim != w.codim() {
                return Err(crate::Error::Internal(format!(
                    "oracle codimension {codim} for [{}] < [{}] disagrees with family {} ({})",
                    w.sigma,
                    self.eta.partition(),
                    w.degen_type,
                    w.codim()
                )));
            }
            w.oracle_codim = Some(codim);
        }
        Ok(())
    }
}

pub fn decide(eta: &EpsDiagram) -> Result<NormalityVerdict> {
    decide_within(eta, &Limits::default())
}

pub fn decide_within(eta: &EpsDiagram, limits: &Limits) -> Result<NormalityVerdict> {
    let witnesses = minimal_degenerations_within(eta, limits)?
        .iter()
        .map(|pair| {
            let classified = classify_minimal_degeneration(pair)?;
            Ok(Witness {
                sigma: pair.bottom().clone(),
                reduction: classified.reduction,
                degen_type: classified.degen_type,
                oracle_codim: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = Verdict::from_families(witnesses.iter().map(Witness::family));
    Ok(NormalityVerdict {
        eta: eta.clone(),
        verdict,
        witnesses,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveySummary {
    pub normal: usize,
    pub not_normal: usize,
    pub undetermined: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survey {
    pub eps: FormType,
    pub n: usize,
    pub verdicts: Vec<NormalityVerdict>,
    pub summary: SurveySummary,
}

impl Survey {
    pub fn from_verdicts(eps: FormType, n: usize, verdicts: Vec<NormalityVerdict>) -> Self {
        let mut summary = SurveySummary::default();
        for v in &verdicts {
            match v.verdict {
                Verdict::Normal => summary.normal += 1,
                Verdict::NotNormal => summary.not_normal += 1,
                Verdict::Undetermined => summary.undetermined += 1,
            }
        }
        Survey {
            eps,
            n,
            verdicts,
            summary,
        }
    }

    pub fn get(&self, partition: &Partition) -> Option<&NormalityVerdict> {
        self.verdicts.iter().find(|v| v.eta.partition() == partition)
    }
}

pub fn survey(n: usize, eps: FormType) -> Result<Survey> {
    survey_within(n, eps, &Limits::default())
}

/// Decides every diagram of size `n`, in enumeration order.
pub fn survey_within(n: usize, eps: FormType, limits: &Limits) -> Result<Survey> {
    let verdicts = enumerate_eps_diagrams_within(n, eps, limits)?
        .par_iter()
        .map(|eta| decide_within(eta, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(Survey::from_verdicts(eps, n, verdicts))
}
