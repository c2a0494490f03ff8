//! Root systems of the simple Lie algebras in ambient ε-coordinates.
//!
//! Every root system is generated the same way: simple roots are placed in
//! a fixed ambient space, their Cartan matrix is read off, and the full root
//! set is obtained by closing the simple roots under simple reflections.
//!
//! Ambient conventions:
//!
//! * `su(n)` (A_{n-1}): `n` coordinates summing to zero, simple roots
//!   `ε_i - ε_{i+1}`.
//! * `so(n)` (B_m, n = 2m+1 and D_m, n = 2m): `m` coordinates, simple roots
//!   `ε_i - ε_{i+1}` and `ε_m` (B) or `ε_{m-1} + ε_m` (D).
//! * `sp(n)` (C_m, n = 2m): `m` coordinates, last simple root `2ε_m`.
//! * `G2`: three coordinates summing to zero, embedded through `su(3)`,
//!   with short simple root `(1,-1,0)` and long simple root `(-2,1,1)`.
//! * `F4`, `E6`, `E7`, `E8`: Bourbaki's coordinates (`R^4` for F4 and `R^8`
//!   for the E series, E6 and E7 living in the span of their simple roots).
//!
//! The invariant form is the Euclidean dot product rescaled so that the
//! highest root has squared length 2. This rescaling is 1 except for
//! `sp(n)` (1/2) and `G2` (1/3).

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{fmt_q, q, qi, to_i64, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// Identifies a simple Lie algebra.
///
/// For the classical families `param` is the dimension `n` of the natural
/// module: `su(n)` is type A, `so(n)` type B or D by parity, `sp(n)` type C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraId {
    family: Family,
    param: Option<u32>,
}

impl AlgebraId {
    pub fn new(family: Family, param: Option<u32>) -> Result<Self> {
        let bad = |why: &str| Err(Error::UnsupportedAlgebra(format!("{family:?} {param:?}: {why}")));
        match (family, param) {
            (Family::A, Some(n)) if n >= 2 => {}
            (Family::A, _) => return bad("type A needs n >= 2"),
            (Family::B, Some(n)) if n >= 5 && n % 2 == 1 => {}
            (Family::B, _) => return bad("type B needs odd n >= 5"),
            (Family::D, Some(n)) if n >= 4 && n % 2 == 0 => {}
            (Family::D, _) => return bad("type D needs even n >= 4"),
            (Family::C, Some(n)) if n >= 2 && n % 2 == 0 => {}
            (Family::C, _) => return bad("type C needs even n >= 2"),
            (_, None) => {}
            (_, Some(_)) => return bad("exceptional types take no parameter"),
        }
        Ok(AlgebraId { family, param })
    }

    pub fn su(n: u32) -> Result<Self> {
        Self::new(Family::A, Some(n))
    }

    /// `so(n)`, type B for odd `n` and D for even `n`.
    pub fn so(n: u32) -> Result<Self> {
        let family = if n % 2 == 1 { Family::B } else { Family::D };
        Self::new(family, Some(n))
    }

    pub fn sp(n: u32) -> Result<Self> {
        Self::new(Family::C, Some(n))
    }

    pub fn exceptional(family: Family) -> Result<Self> {
        Self::new(family, None)
    }

    /// Parses a CLI-style family name (`su`, `so`, `sp`, `g2`, ...).
    pub fn parse(name: &str, n: Option<u32>) -> Result<Self> {
        let need = || n.ok_or_else(|| Error::UnsupportedAlgebra(format!("{name} needs --n")));
        match name.to_ascii_lowercase().as_str() {
            "su" | "a" => Self::su(need()?),
            "so" => Self::so(need()?),
            "sp" | "c" => Self::sp(need()?),
            "g2" => Self::exceptional(Family::G2),
            "f4" => Self::exceptional(Family::F4),
            "e6" => Self::exceptional(Family::E6),
            "e7" => Self::exceptional(Family::E7),
            "e8" => Self::exceptional(Family::E8),
            other => Err(Error::UnsupportedAlgebra(other.to_string())),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Natural-module dimension for classical families.
    pub fn n(&self) -> Option<u32> {
        self.param
    }

    pub fn rank(&self) -> usize {
        let n = self.param.unwrap_or(0) as usize;
        match self.family {
            Family::A => n - 1,
            Family::B => (n - 1) / 2,
            Family::C | Family::D => n / 2,
            Family::G2 => 2,
            Family::F4 => 4,
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
        }
    }

    /// Number of positive roots, from the closed forms per type.
    pub fn positive_root_count(&self) -> usize {
        let n = self.param.unwrap_or(0) as usize;
        let m = self.rank();
        match self.family {
            Family::A => n * (n - 1) / 2,
            Family::B | Family::C => m * m,
            Family::D => m * (m - 1),
            Family::G2 => 6,
            Family::F4 => 24,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
        }
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        2 * self.positive_root_count() + self.rank()
    }

    pub fn name(&self) -> String {
        match (self.family, self.param) {
            (Family::A, Some(n)) => format!("su({n})"),
            (Family::B | Family::D, Some(n)) => format!("so({n})"),
            (Family::C, Some(n)) => format!("sp({n})"),
            (f, _) => format!("{f:?}").to_ascii_lowercase(),
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A vector of rational coordinates in the ambient ε-basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Q>);

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&x| qi(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Q::zero(); dim])
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * s).collect())
    }

    pub fn dot(&self, other: &Weight) -> Q {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Q::zero(), |a, b| a + b)
    }

    pub fn coord_sum(&self) -> Q {
        self.0.iter().fold(Q::zero(), |a, b| a + b)
    }

    /// Projection onto the hyperplane of coordinates summing to zero.
    pub fn project_sum_zero(&self) -> Weight {
        if self.0.is_empty() {
            return self.clone();
        }
        let mean = self.coord_sum() / qi(self.0.len() as i64);
        Weight(self.0.iter().map(|x| x - &mean).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_q).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Root data and normalized inner product for one simple algebra.
#[derive(Clone, Debug)]
pub struct RootSystem {
    algebra: AlgebraId,
    ambient_dim: usize,
    /// Dot-product rescaling giving the highest root squared length 2.
    scale: Q,
    /// `cartan[i][j] = <α_i, α_j^∨>`.
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    /// Simple-root coordinates of each positive root.
    positive_coords: Vec<Vec<i64>>,
    two_delta: Weight,
    gram: Matrix,
    fundamental_weights: Vec<Weight>,
    highest_root: usize,
}

/// Bourbaki Cartan matrices for the exceptional types.
fn exceptional_cartan(family: Family) -> Vec<Vec<i64>> {
    let rows: &[&[i64]] = match family {
        Family::G2 => &[&[2, -1], &[-3, 2]],
        Family::F4 => &[&[2, -1, 0, 0], &[-1, 2, -2, 0], &[0, -1, 2, -1], &[0, 0, -1, 2]],
        Family::E6 | Family::E7 | Family::E8 => &[
            &[2, 0, -1, 0, 0, 0, 0, 0],
            &[0, 2, 0, -1, 0, 0, 0, 0],
            &[-1, 0, 2, -1, 0, 0, 0, 0],
            &[0, -1, -1, 2, -1, 0, 0, 0],
            &[0, 0, 0, -1, 2, -1, 0, 0],
            &[0, 0, 0, 0, -1, 2, -1, 0],
            &[0, 0, 0, 0, 0, -1, 2, -1],
            &[0, 0, 0, 0, 0, 0, -1, 2],
        ],
        _ => unreachable!("classical Cartan matrices are derived from the embedding"),
    };
    let r = match family {
        Family::E6 => 6,
        Family::E7 => 7,
        _ => rows.len(),
    };
    rows[..r].iter().map(|row| row[..r].to_vec()).collect()
}

/// `ε_i` in an ambient space of dimension `dim`, scaled by `s`.
fn unit(dim: usize, i: usize, s: Q) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = s;
    v
}

fn simple_roots_for(algebra: &AlgebraId) -> (usize, Vec<Weight>) {
    let m = algebra.rank();
    let diff = |dim: usize, i: usize| -> Weight {
        let mut v = unit(dim, i, Q::one());
        v[i + 1] = -Q::one();
        Weight(v)
    };
    match algebra.family() {
        Family::A => {
            let n = m + 1;
            (n, (0..m).map(|i| diff(n, i)).collect())
        }
        Family::B | Family::C | Family::D => {
            let mut roots: Vec<Weight> = (0..m - 1).map(|i| diff(m, i)).collect();
            let last = match algebra.family() {
                Family::B => Weight(unit(m, m - 1, Q::one())),
                Family::C => Weight(unit(m, m - 1, qi(2))),
                _ => {
                    let mut v = unit(m, m - 1, Q::one());
                    v[m - 2] = Q::one();
                    Weight(v)
                }
            };
            roots.push(last);
            (m, roots)
        }
        Family::G2 => (
            3,
            vec![Weight::from_ints(&[1, -1, 0]), Weight::from_ints(&[-2, 1, 1])],
        ),
        Family::F4 => {
            let h = q(1, 2);
            (
                4,
                vec![
                    Weight::from_ints(&[0, 1, -1, 0]),
                    Weight::from_ints(&[0, 0, 1, -1]),
                    Weight::from_ints(&[0, 0, 0, 1]),
                    Weight(vec![h.clone(), -h.clone(), -h.clone(), -h]),
                ],
            )
        }
        Family::E6 | Family::E7 | Family::E8 => {
            let h = q(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut roots = vec![Weight(a1), Weight::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0])];
            for i in 0..6 {
                let mut v = unit(8, i + 1, Q::one());
                v[i] = -Q::one();
                roots.push(Weight(v));
            }
            roots.truncate(m);
            (8, roots)
        }
    }
}

/// All roots, in simple-root coordinates, by closing the simple roots under
/// the simple reflections `s_j(β) = β - <β, α_j^∨> α_j`.
fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    let mut order = Vec::new();
    while let Some(beta) = queue.pop_front() {
        for j in 0..r {
            let pairing: i64 = (0..r).map(|i| beta[i] * cartan[i][j]).sum();
            let mut image = beta.clone();
            image[j] -= pairing;
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
        order.push(beta);
    }
    order
}

impl RootSystem {
    pub fn new(algebra: AlgebraId) -> Result<Self> {
        // Re-validate in case the id was built without going through `new`.
        let algebra = AlgebraId::new(algebra.family(), algebra.n())?;
        let (ambient_dim, simple_roots) = simple_roots_for(&algebra);
        let r = simple_roots.len();

        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let v = qi(2) * simple_roots[i].dot(&simple_roots[j])
                            / simple_roots[j].dot(&simple_roots[j]);
                        to_i64(&v).expect("Cartan integers are integral")
                    })
                    .collect()
            })
            .collect();
        if !algebra.family().is_classical() {
            assert_eq!(
                cartan,
                exceptional_cartan(algebra.family()),
                "embedding of {algebra} does not reproduce its Cartan matrix"
            );
        }

        let mut positive_coords: Vec<Vec<i64>> = reflection_closure(&cartan)
            .into_iter()
            .filter(|c| c.iter().all(|&x| x >= 0))
            .collect();
        positive_coords.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));

        let embed = |c: &[i64]| -> Weight {
            let mut w = Weight::zero(ambient_dim);
            for (ci, alpha) in c.iter().zip(&simple_roots) {
                if *ci != 0 {
                    w = &w + &alpha.scale(&qi(*ci));
                }
            }
            w
        };
        let positive_roots: Vec<Weight> = positive_coords.iter().map(|c| embed(c)).collect();

        let two_delta = positive_roots
            .iter()
            .fold(Weight::zero(ambient_dim), |acc, a| &acc + a);

        // The unique root of maximal height; for D_2 the tie is broken by the
        // larger ambient coordinates, giving ε_1 + ε_2.
        let max_height = positive_coords.iter().map(|c| c.iter().sum::<i64>()).max().unwrap();
        let highest_root = (0..positive_roots.len())
            .filter(|&i| positive_coords[i].iter().sum::<i64>() == max_height)
            .max_by(|&a, &b| positive_roots[a].cmp(&positive_roots[b]))
            .unwrap();
        let theta = &positive_roots[highest_root];
        let scale = qi(2) / theta.dot(theta);

        let gram = Matrix::from_fn(r, r, |i, j| &scale * simple_roots[i].dot(&simple_roots[j]));
        let ginv = gram.inverse().expect("simple roots are independent");
        let fundamental_weights = (0..r)
            .map(|i| {
                let half_len = &gram[(i, i)] / qi(2);
                (0..r).fold(Weight::zero(ambient_dim), |acc, k| {
                    &acc + &simple_roots[k].scale(&(&half_len * &ginv[(i, k)]))
                })
            })
            .collect();

        Ok(RootSystem {
            algebra,
            ambient_dim,
            scale,
            cartan,
            simple_roots,
            positive_roots,
            positive_coords,
            two_delta,
            gram,
            fundamental_weights,
            highest_root,
        })
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Simple-root coordinates of the positive roots, in the same order.
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_coords
    }

    /// Sum of the positive roots.
    pub fn two_delta(&self) -> &Weight {
        &self.two_delta
    }

    /// Normalized inner products of the simple roots.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    /// Factor by which the ambient dot product is rescaled.
    pub fn form_scale(&self) -> &Q {
        &self.scale
    }

    pub fn highest_root(&self) -> &Weight {
        &self.positive_roots[self.highest_root]
    }

    pub fn dim(&self) -> usize {
        2 * self.positive_roots.len() + self.rank()
    }

    pub fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.dim() == self.ambient_dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                actual: w.dim(),
            })
        }
    }

    /// The normalized invariant inner product.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Q> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.inner_unchecked(a, b))
    }

    pub(crate) fn inner_unchecked(&self, a: &Weight, b: &Weight) -> Q {
        &self.scale * a.dot(b)
    }

    /// `2(λ, α_i)/(α_i, α_i)` for every simple root.
    pub fn coroot_pairings(&self, w: &Weight) -> Result<Vec<Q>> {
        self.check_dim(w)?;
        Ok((0..self.rank())
            .map(|i| qi(2) * self.inner_unchecked(w, &self.simple_roots[i]) / &self.gram[(i, i)])
            .collect())
    }

    /// Dynkin labels of an integral weight.
    pub fn dynkin_labels(&self, w: &Weight) -> Result<Vec<i64>> {
        self.coroot_pairings(w)?
            .iter()
            .map(|x| to_i64(x).ok_or_else(|| Error::NonIntegralWeight(w.to_string())))
            .collect()
    }

    /// `Σ a_i ω_i`.
    pub fn from_labels(&self, labels: &[i64]) -> Weight {
        assert_eq!(labels.len(), self.rank());
        labels
            .iter()
            .zip(&self.fundamental_weights)
            .filter(|(a, _)| **a != 0)
            .fold(Weight::zero(self.ambient_dim), |acc, (a, w)| &acc + &w.scale(&qi(*a)))
    }

    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        Ok(self
            .coroot_pairings(w)?
            .iter()
            .all(|x| !x.is_negative()))
    }

    /// Simple reflection `s_i`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let alpha = &self.simple_roots[i];
        let c = qi(2) * self.inner_unchecked(w, alpha) / &self.gram[(i, i)];
        w - &alpha.scale(&c)
    }

    /// Coordinates of a weight in the basis of simple roots. For G2 this is
    /// the two-coordinate rank basis.
    pub fn simple_root_coords(&self, w: &Weight) -> Result<Vec<Q>> {
        let pairings: Vec<Q> = self
            .simple_roots
            .iter()
            .map(|a| self.inner(w, a))
            .collect::<Result<_>>()?;
        let ginv = self.gram.inverse().expect("gram is nondegenerate");
        Ok(ginv.mul_vec(&pairings))
    }

    /// All roots (positive then negative).
    pub fn roots(&self) -> Vec<Weight> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|a| -a));
        all
    }

    /// Normalizes a user-supplied weight: type A weights are projected to
    /// the sum-zero hyperplane.
    pub fn normalize(&self, w: &Weight) -> Result<Weight> {
        self.check_dim(w)?;
        Ok(match self.algebra.family() {
            Family::A | Family::G2 => w.project_sum_zero(),
            _ => w.clone(),
        })
    }
}

/// Builds the root system of `algebra`.
pub fn build_root_system(algebra: AlgebraId) -> Result<RootSystem> {
    RootSystem::new(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_ids() -> Vec<AlgebraId> {
        let mut ids: Vec<AlgebraId> = (2..=9).map(|n| AlgebraId::su(n).unwrap()).collect();
        ids.extend((4..=12).map(|n| AlgebraId::so(n).unwrap()));
        ids.extend((1..=5).map(|m| AlgebraId::sp(2 * m).unwrap()));
        for f in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
            ids.push(AlgebraId::exceptional(f).unwrap());
        }
        ids
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(AlgebraId::su(1).is_err());
        assert!(AlgebraId::so(3).is_err());
        assert!(AlgebraId::sp(3).is_err());
        assert!(AlgebraId::new(Family::B, Some(6)).is_err());
        assert!(AlgebraId::new(Family::G2, Some(3)).is_err());
        assert!(AlgebraId::parse("xx", None).is_err());
        assert!(AlgebraId::parse("su", None).is_err());
    }

    #[test]
    fn counts_and_invariants_for_every_type() {
        for id in all_ids() {
            let rs = RootSystem::new(id).unwrap();
            assert_eq!(rs.positive_roots().len(), id.positive_root_count(), "{id}");
            assert_eq!(rs.rank(), id.rank());
            let sum = rs
                .positive_roots()
                .iter()
                .fold(Weight::zero(rs.ambient_dim()), |a, b| &a + b);
            assert_eq!(&sum, rs.two_delta(), "{id}");
            let theta = rs.highest_root();
            assert_eq!(rs.inner(theta, theta).unwrap(), qi(2), "{id}");
            assert!(rs.is_dominant(theta).unwrap());
            // Long roots have squared length 2, and nothing is longer.
            for a in rs.positive_roots() {
                let len = rs.inner(a, a).unwrap();
                assert!(len <= qi(2) && len.is_positive(), "{id} {a}");
            }
            if id.family() == Family::A {
                for a in rs.roots() {
                    assert!(a.coord_sum().is_zero());
                }
            }
        }
    }

    #[test]
    fn reflection_closure_is_closed() {
        for id in all_ids() {
            let rs = RootSystem::new(id).unwrap();
            let roots: HashSet<Weight> = rs.roots().into_iter().collect();
            for a in &roots {
                for i in 0..rs.rank() {
                    assert!(roots.contains(&rs.reflect(i, a)), "{id}");
                }
            }
        }
    }

    #[test]
    fn reference_examples() {
        let a3 = RootSystem::new(AlgebraId::su(3).unwrap()).unwrap();
        assert_eq!(a3.two_delta(), &Weight::from_ints(&[2, 0, -2]));

        let g2 = RootSystem::new(AlgebraId::exceptional(Family::G2).unwrap()).unwrap();
        assert_eq!(g2.two_delta(), &Weight::from_ints(&[-2, -4, 6]));
        assert_eq!(g2.highest_root(), &Weight::from_ints(&[-1, -1, 2]));

        let e8 = RootSystem::new(AlgebraId::exceptional(Family::E8).unwrap()).unwrap();
        assert_eq!(e8.positive_roots().len(), 120);

        let a2 = RootSystem::new(AlgebraId::su(2).unwrap()).unwrap();
        assert_eq!(a2.positive_roots(), &[Weight::from_ints(&[1, -1])]);
        assert_eq!(a2.two_delta(), &Weight::from_ints(&[1, -1]));

        let a5 = RootSystem::new(AlgebraId::su(5).unwrap()).unwrap();
        assert_eq!(a5.highest_root(), &Weight::from_ints(&[1, 0, 0, 0, -1]));
        for n in [5, 6, 7, 8, 9, 10] {
            let rs = RootSystem::new(AlgebraId::so(n).unwrap()).unwrap();
            let mut e12 = vec![0; rs.ambient_dim()];
            e12[0] = 1;
            e12[1] = 1;
            assert_eq!(rs.highest_root(), &Weight::from_ints(&e12));
        }
    }

    #[test]
    fn inner_products() {
        let a4 = RootSystem::new(AlgebraId::su(4).unwrap()).unwrap();
        let t = Weight::from_ints(&[1, 0, 0, -1]);
        assert_eq!(a4.inner(&t, &t).unwrap(), qi(2));
        assert_eq!(a4.inner(&Weight::zero(4), &t).unwrap(), qi(0));
        assert!(matches!(
            a4.inner(&Weight::zero(3), &t),
            Err(Error::DimensionMismatch { .. })
        ));

        let d4 = RootSystem::new(AlgebraId::so(8).unwrap()).unwrap();
        let l = Weight::from_ints(&[1, 1, 1, 1]);
        assert_eq!(d4.inner(&l, d4.two_delta()).unwrap(), qi(12));
        // 2δ = Σ (n - 2j) ε_j for orthogonal algebras.
        for n in [7u32, 8, 11] {
            let rs = RootSystem::new(AlgebraId::so(n).unwrap()).unwrap();
            let expect: Vec<i64> = (1..=rs.rank() as i64).map(|j| n as i64 - 2 * j).collect();
            assert_eq!(rs.two_delta(), &Weight::from_ints(&expect));
        }
    }

    #[test]
    fn labels_round_trip() {
        for id in all_ids() {
            let rs = RootSystem::new(id).unwrap();
            for (i, w) in rs.fundamental_weights().iter().enumerate() {
                let mut e = vec![0; rs.rank()];
                e[i] = 1;
                assert_eq!(rs.dynkin_labels(w).unwrap(), e);
            }
            let theta = rs.highest_root().clone();
            let labels = rs.dynkin_labels(&theta).unwrap();
            assert_eq!(rs.from_labels(&labels), theta);
        }
        let a3 = RootSystem::new(AlgebraId::su(3).unwrap()).unwrap();
        assert!(matches!(
            a3.dynkin_labels(&Weight::new(vec![q(1, 2), q(-1, 2), qi(0)])),
            Err(Error::NonIntegralWeight(_))
        ));
    }

    #[test]
    fn g2_rank_basis() {
        let g2 = RootSystem::new(AlgebraId::exceptional(Family::G2).unwrap()).unwrap();
        let c = g2.simple_root_coords(g2.highest_root()).unwrap();
        assert_eq!(c, vec![qi(3), qi(2)]);
    }
}
