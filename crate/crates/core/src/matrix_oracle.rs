//! Explicit nilpotent matrices in `so(V)` and `sp(V)` over the rationals.
//!
//! This module recomputes orbit dimensions from scratch: it builds a
//! nilpotent `D` of a prescribed Jordan type preserving a form `J`, then
//! solves the linear system for the centralizer of `D` inside the Lie
//! algebra of `J`. Nothing here consults the combinatorial modules beyond
//! partition arithmetic, so agreement between the two is a real check.
//!
//! Block conventions. A part `m` that may occur singly (odd `m` for a
//! symmetric form, even `m` for an alternating one) gets a block with basis
//! `e_1..e_m`, `D e_i = e_{i+1}` and `(e_i, e_j) = (-1)^i δ_{i+j,m+1}`. Parts
//! that must be paired get a `2m`-dimensional block spanned by `e_1..e_m`
//! and `f_1..f_m` with `(e_i, f_j) = δ_{i+j,m+1}`, `D e_i = e_{i+1}` and
//! `D f_j = -f_{j+1}`. The forms are `(x, y) = xᵀ J y`; `D` acts on columns.
//!
//! Everything runs in characteristic 0.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::degeneration::DegenPair;
use crate::error::{Error, Result};
use crate::linalg::{q, rank_of_rows, QMatrix, Q, SparseRow};
use crate::partitions::{FormType, Limits, Partition};

/// A nilpotent element `D` of the Lie algebra of the form `J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentModel {
    pub dim: usize,
    pub eps: FormType,
    pub gram: QMatrix,
    pub nilpotent: QMatrix,
}

impl NilpotentModel {
    /// Checks `Jᵀ = εJ`, `J` invertible, `DᵀJ + JD = 0`, `D` nilpotent.
    pub fn check_invariants(&self) -> Result<()> {
        let (j, d) = (&self.gram, &self.nilpotent);
        let n = self.dim;
        if (j.rows(), j.cols(), d.rows(), d.cols()) != (n, n, n, n) {
            return Err(Error::contract("model matrices have the wrong shape"));
        }
        if j.transpose() != j.scale(&q(self.eps.sign() as i64)) {
            return Err(Error::contract(format!("Gram matrix is not of type {}", self.eps)));
        }
        if j.determinant_is_zero() {
            return Err(Error::contract("Gram matrix is singular"));
        }
        if !(&d.transpose() * j).add(&(j * d)).is_zero() {
            return Err(Error::contract("D does not preserve the form"));
        }
        if !d.pow(n).is_zero() {
            return Err(Error::contract("D is not nilpotent"));
        }
        Ok(())
    }

    pub fn jordan_type(&self) -> Result<Partition> {
        jordan_type(&self.nilpotent)
    }
}

fn needs_pairing(part: usize, eps: FormType) -> bool {
    match eps {
        FormType::Orthogonal => part % 2 == 0,
        FormType::Symplectic => part % 2 == 1,
    }
}

fn single_block(m: usize) -> (QMatrix, QMatrix) {
    let mut gram = QMatrix::zeros(m, m);
    let mut d = QMatrix::zeros(m, m);
    for k in 0..m {
        // 1-based index i = k + 1
        gram[(k, m - 1 - k)] = q(if k % 2 == 0 { -1 } else { 1 });
        if k + 1 < m {
            d[(k + 1, k)] = q(1);
        }
    }
    (gram, d)
}

fn paired_block(m: usize, eps: FormType) -> (QMatrix, QMatrix) {
    let mut gram = QMatrix::zeros(2 * m, 2 * m);
    let mut d = QMatrix::zeros(2 * m, 2 * m);
    for k in 0..m {
        gram[(k, m + (m - 1 - k))] = q(1);
        gram[(m + (m - 1 - k), k)] = q(eps.sign() as i64);
        if k + 1 < m {
            d[(k + 1, k)] = q(1);
            d[(m + k + 1, m + k)] = q(-1);
        }
    }
    (gram, d)
}

pub fn build_nilpotent_model(lambda: &Partition, eps: FormType) -> Result<NilpotentModel> {
    build_nilpotent_model_within(lambda, eps, &Limits::default())
}

/// Direct sum of blocks, largest parts first.
pub fn build_nilpotent_model_within(
    lambda: &Partition,
    eps: FormType,
    limits: &Limits,
) -> Result<NilpotentModel> {
    if let Some(rule) = lambda.parity_violation(eps) {
        return Err(Error::InvalidDiagram {
            partition: lambda.clone(),
            eps,
            rule,
        });
    }
    let n = lambda.size();
    limits.check_oracle(n)?;

    let mut gram = QMatrix::zeros(n, n);
    let mut d = QMatrix::zeros(n, n);
    let mut offset = 0;
    for (part, count) in lambda.multiplicities().into_iter().rev() {
        let blocks = if needs_pairing(part, eps) {
            vec![paired_block(part, eps); count / 2]
        } else {
            vec![single_block(part); count]
        };
        for (bg, bd) in blocks {
            gram.set_block(offset, offset, &bg);
            d.set_block(offset, offset, &bd);
            offset += bg.rows();
        }
    }
    debug_assert_eq!(offset, n);
    Ok(NilpotentModel {
        dim: n,
        eps,
        gram,
        nilpotent: d,
    })
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(m: &QMatrix) -> Result<Partition> {
    if !m.is_square() {
        return Err(Error::contract("Jordan type needs a square matrix"));
    }
    let n = m.rows();
    let mut ranks = vec![n];
    let mut power = QMatrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(Error::contract("matrix is not nilpotent"));
        }
        power = &power * m;
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            return Err(Error::contract("matrix is not nilpotent"));
        }
        ranks.push(r);
    }
    let columns: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::from_parts_lossy(columns).dual())
}

/// Dimension of `so_N` or `sp_N`.
pub fn algebra_dim(n: usize, eps: FormType) -> Result<usize> {
    match eps {
        FormType::Orthogonal => Ok(n * n.saturating_sub(1) / 2),
        FormType::Symplectic if n % 2 == 0 => Ok(n * (n + 1) / 2),
        FormType::Symplectic => Err(Error::contract(format!(
            "no symplectic form in odd dimension {n}"
        ))),
    }
}

/// Dimension of `{Y : YᵀJ + JY = 0, YD = DY}`, by exact rank of the full
/// `N²`-unknown system.
pub fn centralizer_dim(model: &NilpotentModel) -> usize {
    let n = model.dim;
    let (j, d) = (&model.gram, &model.nilpotent);
    let var = |a: usize, b: usize| a * n + b;
    let mut rows: Vec<SparseRow> = Vec::with_capacity(2 * n * n);
    let mut push = |coeffs: BTreeMap<usize, Q>| {
        let row: SparseRow = coeffs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if !row.is_empty() {
            rows.push(row);
        }
    };
    for i in 0..n {
        for k in 0..n {
            // (YᵀJ + JY)_{ik} = Σ_a Y_{ai} J_{ak} + Σ_a J_{ia} Y_{ak}
            let mut eq: BTreeMap<usize, Q> = BTreeMap::new();
            for a in 0..n {
                if !j[(a, k)].is_zero() {
                    *eq.entry(var(a, i)).or_insert_with(Q::zero) += &j[(a, k)];
                }
                if !j[(i, a)].is_zero() {
                    *eq.entry(var(a, k)).or_insert_with(Q::zero) += &j[(i, a)];
                }
            }
            push(eq);

            // (YD - DY)_{ik} = Σ_a Y_{ia} D_{ak} - Σ_a D_{ia} Y_{ak}
            let mut eq: BTreeMap<usize, Q> = BTreeMap::new();
            for a in 0..n {
                if !d[(a, k)].is_zero() {
                    *eq.entry(var(i, a)).or_insert_with(Q::zero) += &d[(a, k)];
                }
                if !d[(i, a)].is_zero() {
                    *eq.entry(var(a, k)).or_insert_with(Q::zero) -= &d[(i, a)];
                }
            }
            push(eq);
        }
    }
    n * n - rank_of_rows(rows, n * n)
}

pub fn orbit_dim(lambda: &Partition, eps: FormType) -> Result<usize> {
    orbit_dim_within(lambda, eps, &Limits::default())
}

pub fn orbit_dim_within(lambda: &Partition, eps: FormType, limits: &Limits) -> Result<usize> {
    let model = build_nilpotent_model_within(lambda, eps, limits)?;
    Ok(algebra_dim(model.dim, eps)? - centralizer_dim(&model))
}

pub fn codim_oracle(pair: &DegenPair) -> Result<usize> {
    OrbitDims::new(Limits::default()).codim(pair)
}

/// Memoized orbit dimensions for repeated codimension queries.
#[derive(Debug, Default)]
pub struct OrbitDims {
    limits: Limits,
    known: HashMap<(FormType, Partition), usize>,
}

impl OrbitDims {
    pub fn new(limits: Limits) -> Self {
        OrbitDims {
            limits,
            known: HashMap::new(),
        }
    }

    pub fn orbit_dim(&mut self, lambda: &Partition, eps: FormType) -> Result<usize> {
        if let Some(&dim) = self.known.get(&(eps, lambda.clone())) {
            return Ok(dim);
        }
        let dim = orbit_dim_within(lambda, eps, &self.limits)?;
        self.known.insert((eps, lambda.clone()), dim);
        Ok(dim)
    }

    /// `dim O_top - dim O_bottom`.
    pub fn codim(&mut self, pair: &DegenPair) -> Result<usize> {
        let top = self.orbit_dim(pair.top(), pair.eps())?;
        let bottom = self.orbit_dim(pair.bottom(), pair.eps())?;
        top.checked_sub(bottom).ok_or_else(|| {
            Error::contract(format!(
                "orbit of [{}] is smaller than the orbit of [{}]",
                pair.top(),
                pair.bottom()
            ))
        })
    }
}

/// The model induced on `U = Im D` by the form `|u, v| = (v, Dw)`: the form
/// type flips and the Jordan type loses its first column.
pub fn restrict_to_image(model: &NilpotentModel) -> Result<NilpotentModel> {
    let d = &model.nilpotent;
    if d.is_zero() {
        return Err(Error::contract("D = 0 has an empty image"));
    }
    let cols = d.pivot_columns();
    // basis b_i = D e_{c_i}; the induced form is <b_i, b_j> = (e_{c_j}, D e_{c_i})
    let basis = d.select_columns(&cols);
    let jd = &model.gram * d;
    let mut gram = QMatrix::zeros(cols.len(), cols.len());
    for (i, &ci) in cols.iter().enumerate() {
        for (k, &ck) in cols.iter().enumerate() {
            gram[(i, k)] = jd[(ck, ci)].clone();
        }
    }
    let image_of_basis = d * &basis;
    let restricted = basis
        .solve_full_column_rank(&image_of_basis)
        .ok_or_else(|| Error::contract("image of D is not D-stable"))?;
    Ok(NilpotentModel {
        dim: cols.len(),
        eps: model.eps.flip(),
        gram,
        nilpotent: restricted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_eps_diagrams;
    use rand::{Rng, SeedableRng};

    const SP: FormType = FormType::Symplectic;
    const O: FormType = FormType::Orthogonal;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Centralizer dimension from column heights:
    /// `(Σ λ*_i² − ε·#odd parts) / 2`.
    fn centralizer_by_formula(lambda: &Partition, eps: FormType) -> usize {
        let squares: i64 = lambda.dual().parts().iter().map(|&c| (c * c) as i64).sum();
        let odd = lambda.parts().iter().filter(|&&x| x % 2 == 1).count() as i64;
        ((squares - eps.sign() as i64 * odd) / 2) as usize
    }

    #[test]
    fn model_examples() {
        let m = build_nilpotent_model(&p(&[2, 2]), O).unwrap();
        assert_eq!(m.dim, 4);
        m.check_invariants().unwrap();
        assert_eq!(m.jordan_type().unwrap(), p(&[2, 2]));

        let m = build_nilpotent_model(&p(&[1, 1, 1]), O).unwrap();
        assert!(m.nilpotent.is_zero());
        m.check_invariants().unwrap();

        let m = build_nilpotent_model(&p(&[2]), SP).unwrap();
        assert_eq!(m.nilpotent, QMatrix::from_i64(2, 2, &[0, 0, 1, 0]));
        assert_eq!(m.gram, QMatrix::from_i64(2, 2, &[0, -1, 1, 0]));
        m.check_invariants().unwrap();

        assert!(matches!(
            build_nilpotent_model(&p(&[3, 1]), SP),
            Err(Error::InvalidDiagram { .. })
        ));
        assert!(matches!(
            build_nilpotent_model(&Partition::ones(25), O),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn every_model_up_to_twelve_is_valid() {
        for n in 0..=12 {
            for eps in [O, SP] {
                for d in enumerate_eps_diagrams(n, eps).unwrap() {
                    let m = build_nilpotent_model(d.partition(), eps).unwrap();
                    m.check_invariants().unwrap_or_else(|e| panic!("{d}: {e}"));
                    assert_eq!(&m.jordan_type().unwrap(), d.partition());
                }
            }
        }
    }

    #[test]
    fn jordan_type_examples() {
        // Jordan matrix of shape [3,1]
        let mut jm = QMatrix::zeros(4, 4);
        jm[(0, 1)] = q(1);
        jm[(1, 2)] = q(1);
        assert_eq!(jordan_type(&jm).unwrap(), p(&[3, 1]));
        assert_eq!(jordan_type(&QMatrix::zeros(4, 4)).unwrap(), p(&[1, 1, 1, 1]));
        assert!(jordan_type(&QMatrix::identity(2)).is_err());
        assert!(jordan_type(&QMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn jordan_type_is_conjugation_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let d = build_nilpotent_model(&p(&[4, 2, 2]), SP).unwrap().nilpotent;
        let mut tried = 0;
        while tried < 5 {
            let entries: Vec<i64> = (0..64).map(|_| rng.gen_range(-3..=3)).collect();
            let g = QMatrix::from_i64(8, 8, &entries);
            let Some(g_inv) = g.solve_full_column_rank(&QMatrix::identity(8)) else {
                continue;
            };
            tried += 1;
            let conj = &(&g * &d) * &g_inv;
            assert_eq!(jordan_type(&conj).unwrap(), p(&[4, 2, 2]));
        }
    }

    #[test]
    fn algebra_dims() {
        assert_eq!(algebra_dim(8, SP).unwrap(), 36);
        assert_eq!(algebra_dim(11, O).unwrap(), 55);
        assert_eq!(algebra_dim(0, O).unwrap(), 0);
        assert!(algebra_dim(3, SP).is_err());
    }

    #[test]
    fn centralizer_examples() {
        let c = |parts: &[usize], eps| centralizer_dim(&build_nilpotent_model(&p(parts), eps).unwrap());
        assert_eq!(c(&[1, 1], SP), 3);
        assert_eq!(c(&[2], SP), 1);
        assert_eq!(c(&[2, 1, 1], SP), 6);
    }

    #[test]
    fn centralizers_match_the_column_formula() {
        for n in 0..=9 {
            for eps in [O, SP] {
                for d in enumerate_eps_diagrams(n, eps).unwrap() {
                    let m = build_nilpotent_model(d.partition(), eps).unwrap();
                    assert_eq!(centralizer_dim(&m), centralizer_by_formula(d.partition(), eps), "{d}");
                }
            }
        }
    }

    #[test]
    fn orbit_dim_examples() {
        for eps in [O, SP] {
            assert_eq!(orbit_dim(&Partition::ones(6), eps).unwrap(), 0);
        }
        assert_eq!(orbit_dim(&p(&[2, 1, 1]), SP).unwrap(), 4);
        assert_eq!(orbit_dim(&p(&[2, 2, 1]), O).unwrap(), 4);
    }

    #[test]
    fn codim_examples() {
        let pair = |eps, b: &[usize], t: &[usize]| DegenPair::new(eps, p(b), p(t)).unwrap();
        assert_eq!(codim_oracle(&pair(SP, &[4, 2, 2], &[6, 1, 1])).unwrap(), 2);
        assert_eq!(codim_oracle(&pair(O, &[1, 1, 1, 1], &[2, 2])).unwrap(), 2);
        assert_eq!(codim_oracle(&pair(SP, &[4, 2], &[4, 2])).unwrap(), 0);
    }

    #[test]
    fn codims_are_positive_even_and_additive() {
        for n in 1..=8 {
            for eps in [O, SP] {
                let mut dims = OrbitDims::default();
                let all = enumerate_eps_diagrams(n, eps).unwrap();
                for top in &all {
                    for nu in crate::degeneration::degenerations(top).unwrap() {
                        let upper = DegenPair::new(eps, nu.partition().clone(), top.partition().clone()).unwrap();
                        let c_upper = dims.codim(&upper).unwrap();
                        assert!(c_upper > 0 && c_upper % 2 == 0);
                        for sigma in crate::degeneration::degenerations(&nu).unwrap() {
                            let lower = DegenPair::new(eps, sigma.partition().clone(), nu.partition().clone()).unwrap();
                            let whole = DegenPair::new(eps, sigma.partition().clone(), top.partition().clone()).unwrap();
                            assert_eq!(
                                dims.codim(&whole).unwrap(),
                                c_upper + dims.codim(&lower).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let m = build_nilpotent_model(&p(&[6, 1, 1]), SP).unwrap();
        let r = restrict_to_image(&m).unwrap();
        assert_eq!(r.eps, O);
        r.check_invariants().unwrap();
        assert_eq!(r.jordan_type().unwrap(), p(&[5]));

        let r = restrict_to_image(&build_nilpotent_model(&p(&[2, 2]), O).unwrap()).unwrap();
        assert_eq!((r.eps, r.jordan_type().unwrap()), (SP, p(&[1, 1])));
        r.check_invariants().unwrap();

        let r = restrict_to_image(&build_nilpotent_model(&p(&[3, 1]), O).unwrap()).unwrap();
        assert_eq!((r.eps, r.jordan_type().unwrap()), (SP, p(&[2])));
        r.check_invariants().unwrap();

        assert!(restrict_to_image(&build_nilpotent_model(&p(&[1, 1]), SP).unwrap()).is_err());
    }

    #[test]
    fn model_json_round_trip() {
        let m = build_nilpotent_model(&p(&[2]), SP).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            r#"{"dim":2,"eps":-1,"gram":[["0/1","-1/1"],["1/1","0/1"]],"nilpotent":[["0/1","0/1"],["1/1","0/1"]]}"#
        );
        let back: NilpotentModel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }
}
