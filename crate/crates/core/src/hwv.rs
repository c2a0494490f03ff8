//! Highest weight vectors without a torus: `v` is a highest weight vector
//! exactly when `v ⊗ v` generates an irreducible submodule, and then `H_v`
//! represents its weight.
//!
//! The compact pairing is modelled over the rationals by a symmetric form
//! for which the adjoint of `X` is its transpose `X^T`. In the split
//! realizations this sends `e_α` to `f_α` and fixes the Cartan.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::dimform::{weyl_dim, IrrepLabel};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::matrep::{generated_span, realize, MatrixLieAlgebra};
use crate::rational::{qi, Q};
use crate::rootsys::{AlgebraId, RootSystem, Weight};

/// A module with explicit action matrices and contravariant form.
#[derive(Clone, Debug)]
pub struct RealizedModule {
    alg: Arc<MatrixLieAlgebra>,
    rs: Arc<RootSystem>,
    action: Vec<Matrix>,
    form: Matrix,
    hw_label: IrrepLabel,
    /// Weight of each basis vector of the module.
    weights: Vec<Weight>,
}

fn dot(u: &[Q], v: &[Q]) -> Q {
    u.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
}

fn check_nonzero(v: &[Q]) -> Result<()> {
    if v.iter().all(Zero::is_zero) {
        Err(Error::ZeroVector)
    } else {
        Ok(())
    }
}

impl RealizedModule {
    /// The spin-`ℓ` module `D^ℓ` of su(2), dimension `2ℓ+1`, with basis
    /// `v_k` of `h`-weight `2ℓ-2k`.
    pub fn su2_spin(l: u32) -> Result<Self> {
        let alg = Arc::new(realize(AlgebraId::su(2)?)?);
        let rs = Arc::new(RootSystem::new(alg.algebra())?);
        let m = 2 * l as usize + 1;
        let two_l = 2 * l as i64;
        let mut e = Matrix::zeros(m, m);
        let mut f = Matrix::zeros(m, m);
        let mut h = Matrix::zeros(m, m);
        let mut form = Matrix::zeros(m, m);
        form[(0, 0)] = Q::one();
        for k in 0..m {
            let kk = k as i64;
            h[(k, k)] = qi(two_l - 2 * kk);
            if k + 1 < m {
                f[(k + 1, k)] = Q::one();
                e[(k, k + 1)] = qi((kk + 1) * (two_l - kk));
                form[(k + 1, k + 1)] = &form[(k, k)] * qi((kk + 1) * (two_l - kk));
            }
        }
        let mut action = vec![Matrix::zeros(m, m); 3];
        for (a, x) in alg.basis().iter().enumerate() {
            action[a] = if x[(0, 1)] == Q::one() {
                e.clone()
            } else if x[(1, 0)] == Q::one() {
                f.clone()
            } else {
                h.clone()
            };
        }
        let weights = (0..m)
            .map(|k| {
                let c = l as i64 - k as i64;
                Weight::from_ints(&[c, -c])
            })
            .collect();
        let hw_label = IrrepLabel::new(rs.clone(), Weight::from_ints(&[l as i64, -(l as i64)]))?;
        Self::checked(alg, rs, action, form, hw_label, weights)
    }

    /// The adjoint module of a realized algebra with form `tr(X^T Y)`.
    pub fn adjoint(algebra: AlgebraId) -> Result<Self> {
        let alg = Arc::new(realize(algebra)?);
        let rs = Arc::new(RootSystem::new(algebra)?);
        let d = alg.dim();
        let action = (0..d).map(|a| alg.ad(a).clone()).collect();
        let b = alg.basis();
        let form = Matrix::from_fn(d, d, |x, y| b[x].transpose().matmul(&b[y]).trace());
        let hw_label = IrrepLabel::theta_multiple(rs.clone(), 1);
        let weights = (0..d).map(|a| alg.basis_weight(a)).collect();
        Self::checked(alg, rs, action, form, hw_label, weights)
    }

    fn checked(
        alg: Arc<MatrixLieAlgebra>,
        rs: Arc<RootSystem>,
        action: Vec<Matrix>,
        form: Matrix,
        hw_label: IrrepLabel,
        weights: Vec<Weight>,
    ) -> Result<Self> {
        let m = RealizedModule { alg, rs, action, form, hw_label, weights };
        if !m.respects_brackets() || !m.form_is_contravariant() {
            return Err(Error::BadParam("module data is inconsistent".into()));
        }
        Ok(m)
    }

    pub fn algebra(&self) -> &Arc<MatrixLieAlgebra> {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.form.rows()
    }

    pub fn action(&self, a: usize) -> &Matrix {
        &self.action[a]
    }

    pub fn hw_label(&self) -> &IrrepLabel {
        &self.hw_label
    }

    /// Weight of the `i`-th basis vector.
    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn pairing(&self, u: &[Q], v: &[Q]) -> Q {
        dot(u, &self.form.mul_vec(v))
    }

    /// `ρ(X)` for `X` given by coordinates.
    pub fn represent(&self, coords: &[Q]) -> Matrix {
        let m = self.dim();
        let mut out = Matrix::zeros(m, m);
        for (c, a) in coords.iter().zip(&self.action) {
            if !c.is_zero() {
                out = &out + &a.scale(c);
            }
        }
        out
    }

    /// `ρ([X_a, X_b]) = [ρ(X_a), ρ(X_b)]`.
    pub fn respects_brackets(&self) -> bool {
        let d = self.alg.dim();
        (0..d).all(|a| {
            (0..d).all(|b| {
                let lhs = self.represent(&self.alg.ad(a).column(b));
                lhs == self.action[a].commutator(&self.action[b])
            })
        })
    }

    /// `⟨X u, w⟩ = ⟨u, X^T w⟩`.
    pub fn form_is_contravariant(&self) -> bool {
        (0..self.alg.dim()).all(|a| {
            let star = match self.alg.coords_of(&self.alg.basis()[a].transpose()) {
                Some(c) => self.represent(&c),
                None => return false,
            };
            self.action[a].transpose().matmul(&self.form) == self.form.matmul(&star)
        })
    }

    /// Basis vector `i` as a coordinate vector.
    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    /// Whether the weight of basis vector `i` is on the Weyl orbit of the
    /// highest weight.
    pub fn is_extremal(&self, i: usize) -> Result<bool> {
        let w = dominant_representative(&self.rs, &self.weights[i])?;
        Ok(w == *self.hw_label.hw())
    }
}

/// The dominant weight on the Weyl orbit of `w`.
pub fn dominant_representative(rs: &RootSystem, w: &Weight) -> Result<Weight> {
    let mut w = rs.normalize(w)?;
    loop {
        let pairings = rs.coroot_pairings(&w)?;
        match pairings.iter().position(|p| *p < Q::zero()) {
            Some(i) => w = rs.reflect(i, &w),
            None => return Ok(w),
        }
    }
}

/// `H_v = Σ g^{ab} ⟨v, X_a v⟩ X_b`, in algebra coordinates.
pub fn h_vector(m: &RealizedModule, v: &[Q]) -> Result<Vec<Q>> {
    check_nonzero(v)?;
    let d = m.alg.dim();
    let vals: Vec<Q> = (0..d).map(|a| m.pairing(v, &m.action[a].mul_vec(v))).collect();
    let ginv = m.alg.gram_inv();
    Ok((0..d)
        .map(|b| (0..d).map(|a| &ginv[(a, b)] * &vals[a]).sum())
        .collect())
}

fn tensor_ops(m: &RealizedModule, power: usize) -> Vec<Matrix> {
    let id = Matrix::identity(m.dim());
    m.action
        .iter()
        .map(|x| {
            let mut total: Option<Matrix> = None;
            for slot in 0..power {
                let mut term: Option<Matrix> = None;
                for k in 0..power {
                    let f = if k == slot { x } else { &id };
                    term = Some(match term {
                        None => f.clone(),
                        Some(t) => t.kron(f),
                    });
                }
                let term = term.unwrap();
                total = Some(match total {
                    None => term,
                    Some(t) => &t + &term,
                });
            }
            total.unwrap()
        })
        .collect()
}

fn tensor_power(v: &[Q], power: usize) -> Vec<Q> {
    let mut out = vec![Q::one()];
    for _ in 0..power {
        out = out.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect();
    }
    out
}

/// Dimension of the submodule of `M ⊗ M` generated by `w`.
pub fn generated_dim(m: &RealizedModule, w: &[Q]) -> Result<usize> {
    check_nonzero(w)?;
    Ok(generated_span(&tensor_ops(m, 2), &[w.to_vec()]))
}

/// Dimension of the submodule of `M^{⊗k}` generated by `v^{⊗k}`.
pub fn generated_dim_power(m: &RealizedModule, v: &[Q], k: usize) -> Result<usize> {
    check_nonzero(v)?;
    Ok(generated_span(&tensor_ops(m, k), &[tensor_power(v, k)]))
}

/// `v ⊗ v` generates a module of the dimension of the Cartan square.
pub fn is_highest_weight_vector(m: &RealizedModule, v: &[Q]) -> Result<bool> {
    let cartan_square = IrrepLabel::new(m.rs.clone(), m.hw_label.hw().scale(&qi(2)))?;
    Ok(generated_dim(m, &tensor_power(v, 2))? as u64 == weyl_dim(&cartan_square))
}

/// `Σ_{j=|m|}^{ℓ} (4j+1)`: the dimension generated by `v ⊗ v` for a vector
/// `v` of weight `m` in `D^ℓ`.
pub fn so3_law(l: u32, m: i64) -> Result<u64> {
    if m.unsigned_abs() > l as u64 {
        return Err(Error::BadParam(format!("|m| = {} exceeds l = {l}", m.abs())));
    }
    Ok((m.unsigned_abs()..=l as u64).map(|j| 4 * j + 1).sum())
}
