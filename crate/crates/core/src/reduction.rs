//! Cancelling common leading rows and columns of a degeneration.
//!
//! Erasing `r` common rows keeps the form type; erasing `s` common columns
//! multiplies it by `(-1)^s`. Both operations preserve the codimension of
//! the degeneration, so a pair can be studied through its irreducible core.

use serde::{Deserialize, Serialize};

use crate::degeneration::DegenPair;
use crate::error::{Error, Result};

/// Number of leading rows on which both members agree.
pub fn common_leading_rows(pair: &DegenPair) -> usize {
    pair.top()
        .parts()
        .iter()
        .zip(pair.bottom().parts())
        .take_while(|(t, b)| t == b)
        .count()
}

/// Number of leading columns on which both members agree.
pub fn common_leading_columns(pair: &DegenPair) -> usize {
    let (top, bottom) = (pair.top().dual(), pair.bottom().dual());
    top.parts()
        .iter()
        .zip(bottom.parts())
        .take_while(|(t, b)| t == b)
        .count()
}

fn erase_rows(pair: &DegenPair, r: usize) -> DegenPair {
    DegenPair::new_unchecked(
        pair.eps(),
        pair.bottom().erase_rows(r),
        pair.top().erase_rows(r),
    )
}

fn erase_columns(pair: &DegenPair, s: usize) -> DegenPair {
    DegenPair::new_unchecked(
        pair.eps().flip_times(s),
        pair.bottom().erase_columns(s),
        pair.top().erase_columns(s),
    )
}

/// Erases the first `r` rows, then the first `s` columns of what remains.
pub fn erase(pair: &DegenPair, r: usize, s: usize) -> Result<DegenPair> {
    let rows = common_leading_rows(pair);
    if r > rows {
        return Err(Error::contract(format!(
            "cannot erase {r} rows: only {rows} leading rows are common"
        )));
    }
    let row_erased = erase_rows(pair, r);
    let columns = common_leading_columns(&row_erased);
    if s > columns {
        return Err(Error::contract(format!(
            "cannot erase {s} columns: only {columns} leading columns are common"
        )));
    }
    Ok(erase_columns(&row_erased, s))
}

fn require_strict(pair: &DegenPair) -> Result<()> {
    if pair.is_trivial() {
        Err(Error::contract(format!(
            "[{}] = [{}] is not a strict degeneration",
            pair.bottom(),
            pair.top()
        )))
    } else {
        Ok(())
    }
}

/// A strict degeneration with nothing left to cancel.
pub fn is_irreducible(pair: &DegenPair) -> Result<bool> {
    require_strict(pair)?;
    Ok(common_leading_rows(pair) == 0 && common_leading_columns(pair) == 0)
}

/// One cancellation, recorded with the lengths of what was removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cancellation {
    /// Row lengths, longest first.
    Rows(Vec<usize>),
    /// Column heights, tallest first.
    Columns(Vec<usize>),
}

/// The irreducible core of a degeneration with its cancellation ledger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionResult {
    pub core: DegenPair,
    /// Total rows erased.
    pub r: usize,
    /// Total columns erased.
    pub s: usize,
    /// Lengths of the erased rows as they appeared when erased.
    pub erased_rows: Vec<usize>,
    /// Heights of the erased columns as they appeared when erased.
    pub erased_columns: Vec<usize>,
    /// Cancellations in the order they were applied.
    pub steps: Vec<Cancellation>,
}

impl ReductionResult {
    /// Re-adds the erased columns and rows, undoing the steps in reverse.
    pub fn reconstruct(&self) -> DegenPair {
        let mut eps = self.core.eps();
        let mut top = self.core.top().clone();
        let mut bottom = self.core.bottom().clone();
        for step in self.steps.iter().rev() {
            match step {
                Cancellation::Rows(rows) => {
                    top = top.add_rows(rows);
                    bottom = bottom.add_rows(rows);
                }
                Cancellation::Columns(heights) => {
                    top = top.add_columns(heights);
                    bottom = bottom.add_columns(heights);
                    eps = eps.flip_times(heights.len());
                }
            }
        }
        DegenPair::new_unchecked(eps, bottom, top)
    }

    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Axis {
    Rows,
    Columns,
}

/// Cancels rows then columns until nothing common remains.
pub fn irreducible_core(pair: &DegenPair) -> Result<ReductionResult> {
    reduce(pair, Axis::Rows)
}

/// Same fixpoint, cancelling columns before rows in every round.
pub fn irreducible_core_columns_first(pair: &DegenPair) -> Result<ReductionResult> {
    reduce(pair, Axis::Columns)
}

fn reduce(pair: &DegenPair, first: Axis) -> Result<ReductionResult> {
    require_strict(pair)?;
    let order = match first {
        Axis::Rows => [Axis::Rows, Axis::Columns],
        Axis::Columns => [Axis::Columns, Axis::Rows],
    };
    let mut current = pair.clone();
    let mut steps = Vec::new();
    loop {
        let mut changed = false;
        for axis in order {
            match axis {
                Axis::Rows => {
                    let r = common_leading_rows(&current);
                    if r > 0 {
                        steps.push(Cancellation::Rows(current.top().parts()[..r].to_vec()));
                        current = erase_rows(&current, r);
                        changed = true;
                    }
                }
                Axis::Columns => {
                    let s = common_leading_columns(&current);
                    if s > 0 {
                        steps.push(Cancellation::Columns(current.top().dual().parts()[..s].to_vec()));
                        current = erase_columns(&current, s);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    assert!(
        !current.top().is_empty(),
        "strict degeneration [{}] < [{}] cancelled to nothing",
        pair.bottom(),
        pair.top()
    );

    let mut erased_rows = Vec::new();
    let mut erased_columns = Vec::new();
    for step in &steps {
        match step {
            Cancellation::Rows(rows) => erased_rows.extend_from_slice(rows),
            Cancellation::Columns(heights) => erased_columns.extend_from_slice(heights),
        }
    }
    Ok(ReductionResult {
        core: current,
        r: erased_rows.len(),
        s: erased_columns.len(),
        erased_rows,
        erased_columns,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{FormType, Partition};

    const SP: FormType = FormType::Symplectic;
    const O: FormType = FormType::Orthogonal;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pair(eps: FormType, bottom: &[usize], top: &[usize]) -> DegenPair {
        DegenPair::new(eps, p(bottom), p(top)).unwrap()
    }

    #[test]
    fn leading_rows() {
        assert_eq!(common_leading_rows(&pair(O, &[7, 1, 1, 1, 1], &[7, 2, 2])), 1);
        assert_eq!(common_leading_rows(&pair(SP, &[4, 2, 2], &[6, 1, 1])), 0);
        assert_eq!(common_leading_rows(&pair(SP, &[4, 2, 2], &[4, 2, 2])), 3);
    }

    #[test]
    fn leading_columns() {
        assert_eq!(common_leading_columns(&pair(SP, &[4, 2, 2], &[6, 1, 1])), 1);
        assert_eq!(common_leading_columns(&pair(O, &[1, 1, 1, 1], &[2, 2])), 0);
        assert_eq!(common_leading_columns(&pair(SP, &[4, 2, 2], &[4, 2, 2])), 4);
    }

    #[test]
    fn erase_examples() {
        assert_eq!(
            erase(&pair(SP, &[4, 2, 2], &[6, 1, 1]), 0, 1).unwrap(),
            pair(O, &[3, 1, 1], &[5])
        );
        assert_eq!(
            erase(&pair(O, &[7, 1, 1, 1, 1], &[7, 2, 2]), 1, 0).unwrap(),
            pair(O, &[1, 1, 1, 1], &[2, 2])
        );
        let x = pair(SP, &[4, 2, 2], &[6, 1, 1]);
        assert_eq!(erase(&x, 0, 0).unwrap(), x);
        assert!(matches!(erase(&x, 1, 0), Err(Error::Contract(_))));
        assert!(matches!(erase(&x, 0, 2), Err(Error::Contract(_))));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&pair(O, &[1, 1, 1, 1], &[2, 2])).unwrap());
        assert!(!is_irreducible(&pair(O, &[7, 1, 1, 1, 1], &[7, 2, 2])).unwrap());
        assert!(!is_irreducible(&pair(SP, &[4, 2, 2], &[6, 1, 1])).unwrap());
        assert!(matches!(
            is_irreducible(&pair(SP, &[2], &[2])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn core_examples() {
        let res = irreducible_core(&pair(SP, &[4, 4, 2, 2, 2], &[4, 4, 3, 3])).unwrap();
        assert_eq!(res.core, pair(SP, &[2, 2, 2], &[3, 3]));
        assert_eq!((res.r, res.s), (2, 0));
        assert_eq!(res.erased_rows, vec![4, 4]);

        let res = irreducible_core(&pair(SP, &[4, 2, 2], &[6, 1, 1])).unwrap();
        assert_eq!(res.core, pair(O, &[3, 1, 1], &[5]));
        assert_eq!((res.r, res.s), (0, 1));
        assert_eq!(res.erased_columns, vec![3]);

        let input = pair(SP, &[1, 1], &[2]);
        let res = irreducible_core(&input).unwrap();
        assert_eq!(res.core, input);
        assert!(res.is_identity());
        assert!(matches!(
            irreducible_core(&pair(SP, &[2], &[2])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn core_json_shape() {
        let res = irreducible_core(&pair(SP, &[4, 2, 2], &[6, 1, 1])).unwrap();
        let v = serde_json::to_value(&res).unwrap();
        assert_eq!(v["core"], serde_json::json!({"eps": 1, "top": [5], "bottom": [3, 1, 1]}));
        assert_eq!(v["r"], 0);
        assert_eq!(v["s"], 1);
        assert_eq!(v["erased_rows"], serde_json::json!([]));
        let back: ReductionResult = serde_json::from_value(v).unwrap();
        assert_eq!(back, res);
    }

    #[test]
    fn reconstruction_and_sign_rule() {
        for n in 1..=12 {
            for eps in [O, SP] {
                for eta in crate::partitions::enumerate_eps_diagrams(n, eps).unwrap() {
                    for sigma in crate::degeneration::degenerations(&eta).unwrap() {
                        let input = DegenPair::new(eps, sigma.into_partition(), eta.partition().clone()).unwrap();
                        let res = irreducible_core(&input).unwrap();
                        assert_eq!(res.reconstruct(), input);
                        assert_eq!(res.core.eps(), eps.flip_times(res.s));
                        assert!(is_irreducible(&res.core).unwrap());
                    }
                }
            }
        }
    }
}
