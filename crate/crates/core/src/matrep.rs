//! Explicit matrix realizations of small classical algebras, the split
//! Casimir on the symmetric and alternating squares of the adjoint module,
//! and the contraction maps on `S²(∧²V)` for orthogonal algebras.
//!
//! All three families use a weight basis: the Cartan subalgebra is diagonal
//! and every other basis element is a root vector. The orthogonal and
//! symplectic forms are antidiagonal (`J` and `[[0, J], [-J, 0]]`), which
//! keeps the split real form and all spectra over the rationals.

use num_traits::{One, Zero};

use crate::casdecomp::Part;
use crate::error::{Error, Result};
use crate::linalg::{CoordinateMap, EchelonBasis, Matrix};
use crate::rational::{qi, Q};
use crate::rootsys::{AlgebraId, Family, Weight};

/// Sparse column view: `cols[j]` lists `(i, m_ij)` with `m_ij != 0`.
pub type SparseCols = Vec<Vec<(usize, Q)>>;

fn sparse_cols(m: &Matrix) -> SparseCols {
    (0..m.cols())
        .map(|j| {
            (0..m.rows())
                .filter(|&i| !m[(i, j)].is_zero())
                .map(|i| (i, m[(i, j)].clone()))
                .collect()
        })
        .collect()
}

fn flatten(m: &Matrix) -> Vec<Q> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Q::one();
    m
}

/// Coordinate map for a matrix basis and the adjoint matrices `ad(X_a)`.
fn structure(basis: &[Matrix]) -> Result<(CoordinateMap, Vec<Matrix>)> {
    let n = basis.first().map_or(0, Matrix::rows);
    let d = basis.len();
    let cols: Vec<Vec<Q>> = basis.iter().map(flatten).collect();
    let coords = CoordinateMap::new(Matrix::from_columns(n * n, &cols))
        .ok_or_else(|| Error::BadParam("basis is linearly dependent".into()))?;
    let mut ad = vec![Matrix::zeros(d, d); d];
    for a in 0..d {
        for b in 0..d {
            let br = basis[a].commutator(&basis[b]);
            if br.is_zero() {
                continue;
            }
            let c = coords
                .coords(&flatten(&br))
                .ok_or_else(|| Error::BadParam("brackets leave the span".into()))?;
            for (k, x) in c.into_iter().enumerate() {
                ad[a][(k, b)] = x;
            }
        }
    }
    Ok((coords, ad))
}

fn trace_gram(basis: &[Matrix]) -> Matrix {
    let d = basis.len();
    Matrix::from_fn(d, d, |a, b| basis[a].matmul(&basis[b]).trace())
}

/// Nonzero entries of a symmetric matrix as `(a, b, value)`.
fn entries(m: &Matrix) -> Vec<(usize, usize, Q)> {
    let mut out = Vec::new();
    for a in 0..m.rows() {
        for b in 0..m.cols() {
            if !m[(a, b)].is_zero() {
                out.push((a, b, m[(a, b)].clone()));
            }
        }
    }
    out
}

/// `Σ g^{ab} (ad_a e_i) ⊗ (ad_b e_j)` as a dense `d × d` array.
fn kappa_hat_on(ad: &[SparseCols], ginv: &[(usize, usize, Q)], i: usize, j: usize, t: &mut [Q], d: usize, sign: &Q) {
    for (a, b, g) in ginv {
        for (k, x) in &ad[*a][i] {
            let gx = g * x * sign;
            for (l, y) in &ad[*b][j] {
                t[k * d + l] += &gx * y;
            }
        }
    }
}

/// The scale `c` with `κ = c·tr` for which the split Casimir has
/// eigenvalue 2 on `e_θ ⊗ e_θ`.
pub fn calibrate(basis: &[Matrix], theta: usize) -> Result<Q> {
    let (_, ad) = structure(basis)?;
    let d = basis.len();
    let killing = Matrix::from_fn(d, d, |a, b| ad[a].matmul(&ad[b]).trace());
    if killing.inverse().is_none() {
        return Err(Error::DegenerateForm);
    }
    let ginv = trace_gram(basis).inverse().ok_or(Error::DegenerateForm)?;
    let sparse: Vec<SparseCols> = ad.iter().map(sparse_cols).collect();
    let mut t = vec![Q::zero(); d * d];
    kappa_hat_on(&sparse, &entries(&ginv), theta, theta, &mut t, d, &Q::one());
    let mu = t[theta * d + theta].clone();
    let rest_zero = t.iter().enumerate().all(|(k, x)| k == theta * d + theta || x.is_zero());
    if mu.is_zero() || !rest_zero {
        return Err(Error::DegenerateForm);
    }
    Ok(mu / qi(2))
}

/// A matrix Lie algebra with its calibrated invariant form.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    algebra: AlgebraId,
    basis: Vec<Matrix>,
    calib: Q,
    gram: Matrix,
    gram_inv: Matrix,
    ad: Vec<Matrix>,
    ad_sparse: Vec<SparseCols>,
    coords: CoordinateMap,
    theta: usize,
    cartan: Vec<usize>,
}

impl MatrixLieAlgebra {
    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Size of the defining matrices.
    pub fn size(&self) -> usize {
        self.basis[0].rows()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn calib(&self) -> &Q {
        &self.calib
    }

    /// `κ(X_a, X_b) = c·tr(X_a X_b)`.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix {
        &self.gram_inv
    }

    /// `ad(X_a)` in the basis.
    pub fn ad(&self, a: usize) -> &Matrix {
        &self.ad[a]
    }

    /// Index of the highest-root vector.
    pub fn theta_index(&self) -> usize {
        self.theta
    }

    /// Indices of the diagonal basis elements.
    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan
    }

    pub fn coords_of(&self, m: &Matrix) -> Option<Vec<Q>> {
        self.coords.coords(&flatten(m))
    }

    pub fn element(&self, coords: &[Q]) -> Matrix {
        let n = self.size();
        let mut m = Matrix::zeros(n, n);
        for (c, x) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = &m + &x.scale(c);
            }
        }
        m
    }

    /// Weight of a basis element in ambient coordinates (basis elements are
    /// weight vectors).
    pub fn basis_weight(&self, a: usize) -> Weight {
        let n = self.size();
        let x = &self.basis[a];
        let (i, j) = (0..n * n)
            .map(|k| (k / n, k % n))
            .find(|&(i, j)| !x[(i, j)].is_zero())
            .expect("basis elements are nonzero");
        if i == j {
            return Weight::zero(self.defining_weight(0).dim());
        }
        let w = |k: usize| self.defining_weight(k);
        &w(i) - &w(j)
    }

    /// Weight of the `k`-th standard basis vector of the defining module.
    pub fn defining_weight(&self, k: usize) -> Weight {
        let n = self.size();
        if self.algebra.family() == Family::A {
            let mut v = vec![0; n];
            v[k] = 1;
            return Weight::from_ints(&v);
        }
        let m = self.algebra.rank();
        let mut v = vec![0; m];
        if k < m {
            v[k] = 1;
        } else if k >= n - m {
            v[n - 1 - k] = -1;
        }
        Weight::from_ints(&v)
    }

    pub fn kappa(&self, x: &Matrix, y: &Matrix) -> Q {
        x.matmul(y).trace() * &self.calib
    }

    /// Every bracket of basis elements lies in the span (already enforced
    /// at construction; re-checked from scratch here).
    pub fn check_closure(&self) -> bool {
        let d = self.dim();
        (0..d).all(|a| {
            (0..d).all(|b| {
                let br = self.basis[a].commutator(&self.basis[b]);
                let c = self.ad[a].column(b);
                self.element(&c) == br
            })
        })
    }

    /// `κ([X,Y],Z) + κ(Y,[X,Z]) = 0` on all basis triples.
    pub fn check_invariance(&self) -> bool {
        let d = self.dim();
        let b = &self.basis;
        (0..d).all(|x| {
            (0..d).all(|y| {
                let xy = b[x].commutator(&b[y]);
                (0..d).all(|z| {
                    let xz = b[x].commutator(&b[z]);
                    (self.kappa(&xy, &b[z]) + self.kappa(&b[y], &xz)).is_zero()
                })
            })
        })
    }

    /// `Σ g^{ab} κ(X_a, Y) X_b = Y` for every basis `Y`.
    pub fn check_expansion(&self) -> bool {
        let d = self.dim();
        (0..d).all(|y| {
            let mut c = vec![Q::zero(); d];
            for (a, b, g) in entries(&self.gram_inv) {
                c[b] += g * &self.gram[(a, y)];
            }
            c.iter().enumerate().all(|(k, x)| *x == if k == y { Q::one() } else { Q::zero() })
        })
    }
}

fn su_basis(n: usize) -> Vec<Matrix> {
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(unit(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        basis.push(&unit(n, i, i) - &unit(n, i + 1, i + 1));
    }
    basis
}

fn antidiag(m: usize) -> Matrix {
    Matrix::from_fn(m, m, |i, j| if i + j + 1 == m { Q::one() } else { Q::zero() })
}

fn so_basis(n: usize) -> Vec<Matrix> {
    let j = antidiag(n);
    let mut basis = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            basis.push(j.matmul(&(&unit(n, a, b) - &unit(n, b, a))));
        }
    }
    basis
}

fn sp_basis(n: usize) -> Vec<Matrix> {
    let m = n / 2;
    let jm = antidiag(m);
    let mut omega = Matrix::zeros(n, n);
    for i in 0..m {
        for k in 0..m {
            omega[(i, m + k)] = jm[(i, k)].clone();
            omega[(m + i, k)] = -jm[(i, k)].clone();
        }
    }
    let omega_inv = omega.inverse().expect("symplectic form is invertible");
    let mut basis = Vec::new();
    for a in 0..n {
        for b in a..n {
            let s = if a == b { unit(n, a, a) } else { &unit(n, a, b) + &unit(n, b, a) };
            basis.push(omega_inv.matmul(&s));
        }
    }
    basis
}

fn is_diagonal(m: &Matrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_zero()))
}

/// Builds the realization of `algebra`.
pub fn realize(algebra: AlgebraId) -> Result<MatrixLieAlgebra> {
    let n = algebra.n().unwrap_or(0) as usize;
    let basis = match algebra.family() {
        Family::A if (2..=6).contains(&n) => su_basis(n),
        Family::B | Family::D if (5..=8).contains(&n) => so_basis(n),
        Family::C if matches!(n, 2 | 4 | 6) => sp_basis(n),
        _ => return Err(Error::UnsupportedRealization(algebra.to_string())),
    };
    assert_eq!(basis.len(), algebra.dim());
    let (coords, ad) = structure(&basis)?;
    let cartan: Vec<usize> = (0..basis.len()).filter(|&a| is_diagonal(&basis[a])).collect();

    // A regular dominant diagonal element ranks root vectors by height.
    let h0 = Matrix::from_fn(n, n, |i, j| if i == j { qi(n as i64 - 1 - 2 * i as i64) } else { Q::zero() });
    debug_assert!(coords.coords(&flatten(&h0)).is_some());
    let mut best: Option<(Q, usize)> = None;
    for (a, x) in basis.iter().enumerate() {
        let br = h0.commutator(x);
        let lam = (0..n * n)
            .map(|k| (k / n, k % n))
            .find(|&(i, j)| !x[(i, j)].is_zero())
            .map(|(i, j)| &br[(i, j)] / &x[(i, j)])
            .unwrap();
        debug_assert_eq!(br, x.scale(&lam));
        if best.as_ref().is_none_or(|(b, _)| lam > *b) {
            best = Some((lam, a));
        }
    }
    let theta = best.unwrap().1;
    let calib = calibrate(&basis, theta)?;
    let gram = trace_gram(&basis).scale(&calib);
    let gram_inv = gram.inverse().ok_or(Error::DegenerateForm)?;
    let ad_sparse = ad.iter().map(sparse_cols).collect();
    Ok(MatrixLieAlgebra {
        algebra,
        basis,
        calib,
        gram,
        gram_inv,
        ad,
        ad_sparse,
        coords,
        theta,
        cartan,
    })
}

/// Index bookkeeping for a basis of `S²W` or `∧²W`.
#[derive(Clone, Debug)]
pub struct PairBasis {
    part: Part,
    d: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
}

impl PairBasis {
    /// Basis `e_i⊗e_j + e_j⊗e_i` (`i<j`), `e_i⊗e_i` for sym; `e_i⊗e_j - e_j⊗e_i` for alt.
    pub fn new(d: usize, part: Part) -> Self {
        let mut pairs = Vec::new();
        let mut index = vec![None; d * d];
        for i in 0..d {
            let start = if part == Part::Sym { i } else { i + 1 };
            for j in start..d {
                index[i * d + j] = Some(pairs.len());
                pairs.push((i, j));
            }
        }
        PairBasis { part, d, pairs, index }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Coordinates of a dense `d × d` tensor assumed to lie in the part.
    pub fn read(&self, t: &[Q]) -> Vec<Q> {
        self.pairs.iter().map(|&(i, j)| t[i * self.d + j].clone()).collect()
    }

    /// Dense tensor of a coordinate vector.
    pub fn write(&self, c: &[Q]) -> Vec<Q> {
        let d = self.d;
        let mut t = vec![Q::zero(); d * d];
        for (x, &(i, j)) in c.iter().zip(&self.pairs) {
            t[i * d + j] += x;
            if i != j {
                match self.part {
                    Part::Sym => t[j * d + i] += x,
                    Part::Alt => t[j * d + i] -= x,
                }
            }
        }
        t
    }

    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        self.index[i * self.d + j]
    }

    /// Matrix of a map given by its action on `e_i ⊗ e_j`, which adds the
    /// image (scaled by the given sign) into a dense buffer.
    fn operator(&self, apply: impl Fn(usize, usize, &Q, &mut [Q])) -> Matrix {
        let d = self.d;
        let dim = self.len();
        let mut m = Matrix::zeros(dim, dim);
        let minus = match self.part {
            Part::Sym => Q::one(),
            Part::Alt => -Q::one(),
        };
        for (col, &(i, j)) in self.pairs.iter().enumerate() {
            let mut t = vec![Q::zero(); d * d];
            apply(i, j, &Q::one(), &mut t);
            if i != j {
                apply(j, i, &minus, &mut t);
            }
            for (row, x) in self.read(&t).into_iter().enumerate() {
                m[(row, col)] = x;
            }
        }
        m
    }
}

/// `κ̂` restricted to one half of `g ⊗ g`.
#[derive(Clone, Debug)]
pub struct TensorSquareOperator {
    pub part: Part,
    pub dim: usize,
    pub matrix: Matrix,
}

pub fn split_casimir_matrix(l: &MatrixLieAlgebra, part: Part) -> TensorSquareOperator {
    let pb = PairBasis::new(l.dim(), part);
    let ginv = entries(&l.gram_inv);
    let d = l.dim();
    let matrix = pb.operator(|i, j, s, t| kappa_hat_on(&l.ad_sparse, &ginv, i, j, t, d, s));
    TensorSquareOperator { part, dim: pb.len(), matrix }
}

/// Matrix of `X_a` acting diagonally on the part.
pub fn diagonal_action(l: &MatrixLieAlgebra, part: Part, a: usize) -> Matrix {
    let pb = PairBasis::new(l.dim(), part);
    let d = l.dim();
    let ad = &l.ad_sparse[a];
    pb.operator(|i, j, s, t| {
        for (k, x) in &ad[i] {
            t[k * d + j] += x * s;
        }
        for (k, x) in &ad[j] {
            t[i * d + k] += x * s;
        }
    })
}

/// Max-abs entry of `∏ (op - r)`; zero means the roots annihilate `op`.
pub fn verify_annihilation(op: &TensorSquareOperator, roots: &[Q]) -> Q {
    product_of_shifts(&op.matrix, roots).max_abs()
}

fn product_of_shifts(m: &Matrix, roots: &[Q]) -> Matrix {
    let mut acc = Matrix::identity(m.rows());
    for r in roots {
        acc = acc.matmul(&m.add_identity(&-r.clone()));
    }
    acc
}

/// The candidate roots that are actually eigenvalues: those whose removal
/// breaks annihilation.
pub fn minimal_roots(op: &TensorSquareOperator, candidates: &[Q]) -> Result<Vec<Q>> {
    if !verify_annihilation(op, candidates).is_zero() {
        return Err(Error::IncompleteSpectrum(format!("{candidates:?}")));
    }
    let mut keep = candidates.to_vec();
    let mut i = 0;
    while i < keep.len() {
        let mut without = keep.clone();
        without.remove(i);
        if verify_annihilation(op, &without).is_zero() {
            keep = without;
        } else {
            i += 1;
        }
    }
    Ok(keep)
}

/// `P_r = p_r(op)` for the Lagrange polynomial `p_r`; fails unless `P_r` is
/// idempotent.
pub fn projector(op: &TensorSquareOperator, eigs: &[Q], r: usize) -> Result<Matrix> {
    let p = crate::casdecomp::lagrange_projector_poly(eigs, r)?;
    let m = p.eval_matrix(&op.matrix);
    if m.matmul(&m) != m {
        return Err(Error::IncompleteSpectrum(format!("projector for {} is not idempotent", eigs[r])));
    }
    Ok(m)
}

pub fn projector_rank(op: &TensorSquareOperator, eigs: &[Q], r: usize) -> Result<usize> {
    Ok(projector(op, eigs, r)?.rank())
}

/// Highest weight vectors inside the image of a projector `p` on the part,
/// one per irreducible summand, with their weights.
///
/// Basis pairs are weight vectors, so the search runs weight by weight over
/// dominant weights: a vector is kept when `p` fixes it and every simple
/// root vector kills it.
pub fn highest_weight_vectors(
    l: &MatrixLieAlgebra,
    part: Part,
    p: &Matrix,
) -> Result<Vec<(Weight, Vec<Q>)>> {
    let rs = crate::rootsys::RootSystem::new(l.algebra)?;
    let simple: Vec<Weight> = rs.simple_roots().iter().map(|a| rs.normalize(a)).collect::<Result<_>>()?;
    let raising: Vec<Matrix> = (0..l.dim())
        .filter(|&a| {
            rs.normalize(&l.basis_weight(a))
                .map(|w| simple.contains(&w))
                .unwrap_or(false)
        })
        .map(|a| diagonal_action(l, part, a))
        .collect();
    let pb = PairBasis::new(l.dim(), part);
    let weights: Vec<Weight> = (0..l.dim()).map(|a| l.basis_weight(a)).collect();
    let mut by_weight: std::collections::BTreeMap<Weight, Vec<usize>> = Default::default();
    for (k, &(i, j)) in pb.pairs().iter().enumerate() {
        let w = rs.normalize(&(&weights[i] + &weights[j]))?;
        by_weight.entry(w).or_default().push(k);
    }
    let dim = pb.len();
    let fix = p.add_identity(&-Q::one());
    let mut out = Vec::new();
    for (w, support) in by_weight {
        if !rs.is_dominant(&w)? {
            continue;
        }
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for op in raising.iter().chain(std::iter::once(&fix)) {
            for r in 0..dim {
                let row: Vec<Q> = support.iter().map(|&c| op[(r, c)].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let restricted = if rows.is_empty() {
            Matrix::zeros(1, support.len())
        } else {
            Matrix::from_rows(rows)
        };
        for v in restricted.nullspace() {
            let mut full = vec![Q::zero(); dim];
            for (x, &c) in v.into_iter().zip(&support) {
                full[c] = x;
            }
            out.push((w.clone(), full));
        }
    }
    Ok(out)
}

/// Dimension of the submodule of the part generated by `v`.
pub fn generated_in_part(l: &MatrixLieAlgebra, part: Part, v: &[Q]) -> usize {
    let ops: Vec<Matrix> = (0..l.dim()).map(|a| diagonal_action(l, part, a)).collect();
    generated_span(&ops, &[v.to_vec()])
}

/// Contraction maps between `S²(∧²V)` and `S²V` for `so(V, b)` with the
/// antidiagonal `b = J`.
#[derive(Clone, Debug)]
pub struct HarmonicOps {
    pub n: usize,
    /// `S²(∧²V) → S²V`, contracting the first and third factors.
    pub b13: Matrix,
    /// Projected insertion `Π b̂₁₃ : S²V → S²(∧²V)` before rescaling.
    pub insert: Matrix,
    /// `S²V → S²(∧²V)` with `b13 ∘ b13_dual = n`.
    pub b13_dual: Matrix,
    /// `n⁻¹ b13_dual ∘ b13`.
    pub p13: Matrix,
    /// Trace projection on `S²V`.
    pub p24: Matrix,
    /// `S²V →` scalars, `S ↦ tr(bS)`.
    pub b24: Vec<Q>,
    /// `b̂` in `S²V` coordinates.
    pub b_hat: Vec<Q>,
    wedge2: PairBasis,
    s2w: PairBasis,
    s2v: PairBasis,
}

impl HarmonicOps {
    pub fn s2w_dim(&self) -> usize {
        self.s2w.len()
    }

    pub fn s2v_dim(&self) -> usize {
        self.s2v.len()
    }

    /// Dense `⊗⁴V` tensor of a coordinate vector.
    fn tensor4(&self, c: &[Q]) -> Vec<Q> {
        let n = self.n;
        let w = self.wedge2.pairs();
        let outer = self.s2w.write(c);
        let m = w.len();
        let mut t = vec![Q::zero(); n.pow(4)];
        for p in 0..m {
            for q in 0..m {
                let x = &outer[p * m + q];
                if x.is_zero() {
                    continue;
                }
                let (i, j) = w[p];
                let (k, l) = w[q];
                for (a, b, sa) in [(i, j, 1), (j, i, -1)] {
                    for (c2, d2, sb) in [(k, l, 1), (l, k, -1)] {
                        let idx = ((a * n + b) * n + c2) * n + d2;
                        t[idx] += x * qi(sa * sb);
                    }
                }
            }
        }
        t
    }

    fn read4(&self, t: &[Q]) -> Vec<Q> {
        let n = self.n;
        let w = self.wedge2.pairs();
        self.s2w
            .pairs()
            .iter()
            .map(|&(p, q)| {
                let (i, j) = w[p];
                let (k, l) = w[q];
                t[((i * n + j) * n + k) * n + l].clone()
            })
            .collect()
    }

    /// Coordinates of the image of `e_i ∧ e_j ∧ e_k ∧ e_l` in `S²(∧²V)`.
    pub fn wedge4_element(&self, idx: [usize; 4]) -> Vec<Q> {
        let n = self.n;
        let mut t = vec![Q::zero(); n.pow(4)];
        for perm in permutations4() {
            let (p, s) = perm;
            let e = p.map(|k| idx[k]);
            t[((e[0] * n + e[1]) * n + e[2]) * n + e[3]] += qi(s);
        }
        self.read4(&t)
    }

    /// `∧⁴V` spanning set.
    pub fn wedge4_span(&self) -> Vec<Vec<Q>> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        out.push(self.wedge4_element([i, j, k, l]));
                    }
                }
            }
        }
        out
    }
}

fn permutations4() -> Vec<([usize; 4], i64)> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    if p.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                        let mut inv = 0;
                        for x in 0..4 {
                            for y in x + 1..4 {
                                if p[x] > p[y] {
                                    inv += 1;
                                }
                            }
                        }
                        out.push((p, if inv % 2 == 0 { 1 } else { -1 }));
                    }
                }
            }
        }
    }
    out
}

/// `(b13 ∘ b̂13)` on `⊗²V`, computed entrywise; equals `n·id`.
pub fn raw_contraction_factor(n: usize) -> Option<Q> {
    let j = antidiag(n);
    // b13 b̂13 S = (Σ_ik b_ik b̂^{ik}) S
    let jinv = j.inverse()?;
    let mut s = Q::zero();
    for i in 0..n {
        for k in 0..n {
            s += &j[(i, k)] * &jinv[(i, k)];
        }
    }
    Some(s)
}

pub fn harmonic_ops(n: usize) -> Result<HarmonicOps> {
    if !(5..=8).contains(&n) {
        return Err(Error::UnsupportedRealization(format!("harmonic maps for so({n})")));
    }
    let b = antidiag(n);
    let b_inv = b.inverse().expect("antidiagonal form is invertible");
    let wedge2 = PairBasis::new(n, Part::Alt);
    let s2w = PairBasis::new(wedge2.len(), Part::Sym);
    let s2v = PairBasis::new(n, Part::Sym);
    let mut ops = HarmonicOps {
        n,
        b13: Matrix::zeros(0, 0),
        insert: Matrix::zeros(0, 0),
        b13_dual: Matrix::zeros(0, 0),
        p13: Matrix::zeros(0, 0),
        p24: Matrix::zeros(0, 0),
        b24: Vec::new(),
        b_hat: Vec::new(),
        wedge2,
        s2w,
        s2v,
    };
    let (dw, dv) = (ops.s2w.len(), ops.s2v.len());

    // b13
    let mut b13 = Matrix::zeros(dv, dw);
    for col in 0..dw {
        let mut e = vec![Q::zero(); dw];
        e[col] = Q::one();
        let t = ops.tensor4(&e);
        let mut out = vec![Q::zero(); n * n];
        for i in 0..n {
            let k = n - 1 - i;
            let bik = &b[(i, k)];
            for j in 0..n {
                for l in 0..n {
                    let x = &t[((i * n + j) * n + k) * n + l];
                    if !x.is_zero() {
                        out[j * n + l] += bik * x;
                    }
                }
            }
        }
        for (row, x) in ops.s2v.read(&out).into_iter().enumerate() {
            b13[(row, col)] = x;
        }
    }

    // Π b̂13: insert b̂ in slots 1,3 then project to S²(∧²V).
    let mut insert = Matrix::zeros(dw, dv);
    for col in 0..dv {
        let mut e = vec![Q::zero(); dv];
        e[col] = Q::one();
        let s = ops.s2v.write(&e);
        let mut t = vec![Q::zero(); n.pow(4)];
        for i in 0..n {
            for k in 0..n {
                let bh = &b_inv[(i, k)];
                if bh.is_zero() {
                    continue;
                }
                for j in 0..n {
                    for l in 0..n {
                        let x = &s[j * n + l];
                        if !x.is_zero() {
                            t[((i * n + j) * n + k) * n + l] += bh * x;
                        }
                    }
                }
            }
        }
        let pt = project_s2w(&t, n);
        for (row, x) in ops.read4(&pt).into_iter().enumerate() {
            insert[(row, col)] = x;
        }
    }

    // tr(bS) and b̂ in S²V coordinates
    let b24: Vec<Q> = ops
        .s2v
        .pairs()
        .iter()
        .map(|&(j, l)| if j == l { b[(j, j)].clone() } else { &b[(j, l)] + &b[(l, j)] })
        .collect();
    let b_hat_dense: Vec<Q> = (0..n * n).map(|k| b_inv[(k / n, k % n)].clone()).collect();
    let b_hat = ops.s2v.read(&b_hat_dense);

    // Closed-form inverse of b13 ∘ Π b̂13 = ¼[(n-2) + b̂ tr(b·)].
    let nq = qi(n as i64);
    let q_inv = Matrix::from_fn(dv, dv, |r, c| {
        let id = if r == c { Q::one() } else { Q::zero() };
        (id - &b_hat[r] * &b24[c] / qi(2 * n as i64 - 2)) * qi(4) / qi(n as i64 - 2)
    });
    let b13_dual = insert.matmul(&q_inv).scale(&nq);
    let p13 = b13_dual.matmul(&b13).scale(&(Q::one() / &nq));
    let p24 = Matrix::from_fn(dv, dv, |r, c| &b_hat[r] * &b24[c] / &nq);
    ops.b13 = b13;
    ops.insert = insert;
    ops.b13_dual = b13_dual;
    ops.p13 = p13;
    ops.p24 = p24;
    ops.b24 = b24;
    ops.b_hat = b_hat;
    Ok(ops)
}

/// Average over the signed symmetries of `S²(∧²V)` inside `⊗⁴V`.
fn project_s2w(t: &[Q], n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); t.len()];
    let eighth = Q::new(1.into(), 8.into());
    for (idx, x) in t.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let l = idx % n;
        let k = (idx / n) % n;
        let j = (idx / (n * n)) % n;
        let i = idx / (n * n * n);
        for s1 in [false, true] {
            for s2 in [false, true] {
                for s3 in [false, true] {
                    let (mut a, mut b) = ((i, j), (k, l));
                    let mut sign = 1;
                    if s1 {
                        a = (a.1, a.0);
                        sign = -sign;
                    }
                    if s2 {
                        b = (b.1, b.0);
                        sign = -sign;
                    }
                    if s3 {
                        std::mem::swap(&mut a, &mut b);
                    }
                    let target = ((a.0 * n + a.1) * n + b.0) * n + b.1;
                    out[target] += x * &eighth * qi(sign);
                }
            }
        }
    }
    out
}

/// The three harmonic pieces of `A ∈ S²(∧²V)`: `(1-p13)A`,
/// `n⁻¹ b13_dual (1-p24) b13 A`, and `n⁻² b13_dual (b̂ · b24 b13 A)`.
pub fn harmonic_decompose(ops: &HarmonicOps, a: &[Q]) -> [Vec<Q>; 3] {
    let n = qi(ops.n as i64);
    let pa = ops.p13.mul_vec(a);
    let c1: Vec<Q> = a.iter().zip(&pa).map(|(x, y)| x - y).collect();
    let ba = ops.b13.mul_vec(a);
    let p24ba = ops.p24.mul_vec(&ba);
    let traceless: Vec<Q> = ba.iter().zip(&p24ba).map(|(x, y)| x - y).collect();
    let c2: Vec<Q> = ops.b13_dual.mul_vec(&traceless).iter().map(|x| x / &n).collect();
    let tr: Q = ops.b24.iter().zip(&ba).map(|(x, y)| x * y).sum();
    let inserted: Vec<Q> = ops.b_hat.iter().map(|x| x * &tr).collect();
    let c3: Vec<Q> = ops
        .b13_dual
        .mul_vec(&inserted)
        .iter()
        .map(|x| x / (&n * &n))
        .collect();
    [c1, c2, c3]
}

/// Dimension of the span of `start` under repeated application of `ops`.
pub fn generated_span(ops: &[Matrix], start: &[Vec<Q>]) -> usize {
    let dim = start.first().map_or(0, Vec::len);
    let mut basis = EchelonBasis::new(dim);
    let mut frontier: Vec<Vec<Q>> = start.iter().filter_map(|v| basis.insert(v)).collect();
    while let Some(v) = frontier.pop() {
        for op in ops {
            let w = op.mul_vec(&v);
            if let Some(r) = basis.insert(&w) {
                frontier.push(r);
            }
        }
    }
    basis.len()
}
