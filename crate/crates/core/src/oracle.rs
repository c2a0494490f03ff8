//! Brute-force decomposition by formal characters: Freudenthal's
//! multiplicity recursion, symmetric and alternating squares, and stripping
//! of dominant weights.
//!
//! Weights are keyed by Dynkin labels, which are integers for every weight
//! of a finite-dimensional module; inner products go through an integer
//! Gram matrix of fundamental weights scaled by a common denominator.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::casdecomp::multiset;
use crate::dimform::{weyl_dim, IrrepLabel};
use crate::error::{Error, Result};
use crate::rational::common_denominator;
use crate::rootsys::{RootSystem, Weight};

/// Default bound on the dimension of a single irreducible character.
pub const DEFAULT_CAP: u64 = 5000;

/// Integer data shared by all characters of one root system.
#[derive(Debug)]
struct LabelGeometry {
    rank: usize,
    /// `D (ω_i, ω_j)` as integers.
    form: Vec<Vec<i64>>,
    simple: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
}

impl LabelGeometry {
    fn new(rs: &RootSystem) -> Self {
        let rank = rs.rank();
        let fw = rs.fundamental_weights();
        let raw: Vec<Vec<_>> = (0..rank)
            .map(|i| (0..rank).map(|j| rs.inner(&fw[i], &fw[j]).unwrap()).collect())
            .collect();
        let den = common_denominator(raw.iter().flatten());
        let form = raw
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * num_rational::BigRational::from_integer(den.clone())).to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect();
        let labels = |w: &Weight| rs.dynkin_labels(w).expect("roots are integral");
        LabelGeometry {
            rank,
            form,
            simple: rs.simple_roots().iter().map(labels).collect(),
            positive: rs.positive_roots().iter().map(labels).collect(),
        }
    }

    fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (&ai, row) in a.iter().zip(&self.form) {
            if ai != 0 {
                s += ai * row.iter().zip(b).map(|(f, bj)| f * bj).sum::<i64>();
            }
        }
        s
    }

    fn height(&self, a: &[i64]) -> i64 {
        self.inner(a, &vec![2; self.rank])
    }
}

/// Geometry is cached per root system pointer.
fn geometry(rs: &Arc<RootSystem>) -> Arc<LabelGeometry> {
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<LabelGeometry>>>> = OnceLock::new();
    let key = rs.algebra().name();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().unwrap().get(&key) {
        return g.clone();
    }
    let g = Arc::new(LabelGeometry::new(rs));
    cache.lock().unwrap().insert(key, g.clone());
    g
}

fn add(a: &[i64], b: &[i64], k: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

/// Finitely supported weight multiplicities.
#[derive(Clone, Debug)]
pub struct FormalCharacter {
    rs: Arc<RootSystem>,
    weights: BTreeMap<Vec<i64>, i64>,
}

impl PartialEq for FormalCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.rs.algebra() == other.rs.algebra() && self.weights == other.weights
    }
}

impl FormalCharacter {
    pub fn zero(rs: Arc<RootSystem>) -> Self {
        FormalCharacter { rs, weights: BTreeMap::new() }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// `(Dynkin labels, multiplicity)` pairs with nonzero multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, i64)> {
        self.weights.iter().map(|(k, &v)| (k, v))
    }

    /// Ambient-coordinate weights with their multiplicities.
    pub fn ambient(&self) -> Vec<(Weight, i64)> {
        self.iter().map(|(l, m)| (self.rs.from_labels(l), m)).collect()
    }

    pub fn mult(&self, labels: &[i64]) -> i64 {
        self.weights.get(labels).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.weights.values().sum()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn add_term(&mut self, w: Vec<i64>, m: i64) {
        use std::collections::btree_map::Entry;
        match self.weights.entry(w) {
            Entry::Vacant(e) => {
                if m != 0 {
                    e.insert(m);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &FormalCharacter, k: i64) -> FormalCharacter {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.add_term(w.clone(), k * m);
        }
        out
    }

    pub fn product(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut acc: HashMap<Vec<i64>, i64> = HashMap::new();
        for (a, ma) in self.iter() {
            for (b, mb) in other.iter() {
                *acc.entry(add(a, b, 1)).or_insert(0) += ma * mb;
            }
        }
        FormalCharacter {
            rs: self.rs.clone(),
            weights: acc.into_iter().filter(|(_, m)| *m != 0).collect(),
        }
    }

    /// Every weight doubled.
    pub fn adams2(&self) -> FormalCharacter {
        FormalCharacter {
            rs: self.rs.clone(),
            weights: self
                .iter()
                .map(|(w, m)| (w.iter().map(|x| 2 * x).collect(), m))
                .collect(),
        }
    }

    /// Whether multiplicities are invariant under every simple reflection.
    pub fn is_weyl_invariant(&self) -> bool {
        let g = geometry(&self.rs);
        self.iter().all(|(w, m)| {
            (0..g.rank).all(|i| self.mult(&add(w, &g.simple[i], -w[i])) == m)
        })
    }

    fn halve(&self) -> Result<FormalCharacter> {
        let mut weights = BTreeMap::new();
        for (w, m) in self.iter() {
            if m.is_odd() {
                return Err(Error::NotACharacter(format!("odd coefficient at {w:?}")));
            }
            weights.insert(w.clone(), m / 2);
        }
        Ok(FormalCharacter { rs: self.rs.clone(), weights })
    }
}

/// Character of an irreducible module by Freudenthal's formula.
pub fn irrep_character(label: &IrrepLabel) -> Result<FormalCharacter> {
    irrep_character_capped(label, DEFAULT_CAP)
}

pub fn irrep_character_capped(label: &IrrepLabel, cap: u64) -> Result<FormalCharacter> {
    let dim = weyl_dim(label);
    if dim > cap {
        return Err(Error::TooLarge { dim, cap });
    }
    let rs = label.root_system().clone();
    let g = geometry(&rs);
    let hw = rs.dynkin_labels(label.hw())?;
    let rho = vec![1; g.rank];
    let hr = add(&hw, &rho, 1);
    let top = g.inner(&hr, &hr);

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    mult.insert(hw.clone(), 1);
    let mut layer = vec![hw];
    while !layer.is_empty() {
        let mut candidates: Vec<Vec<i64>> = layer
            .iter()
            .flat_map(|w| g.simple.iter().map(move |a| add(w, a, -1)))
            .collect();
        candidates.sort();
        candidates.dedup();
        let mut next = Vec::new();
        for mu in candidates {
            let mr = add(&mu, &rho, 1);
            let den = top - g.inner(&mr, &mr);
            let mut num = 0;
            for alpha in &g.positive {
                let mut k = 1;
                loop {
                    let shifted = add(&mu, alpha, k);
                    match mult.get(&shifted) {
                        Some(&m) => num += m * g.inner(&shifted, alpha),
                        None => break,
                    }
                    k += 1;
                }
            }
            if num == 0 {
                continue;
            }
            debug_assert!(den > 0);
            let m = 2 * num / den;
            debug_assert_eq!(2 * num % den, 0);
            if m > 0 {
                mult.insert(mu.clone(), m);
                next.push(mu);
            }
        }
        layer = next;
    }
    let ch = FormalCharacter { rs, weights: mult.into_iter().collect() };
    debug_assert_eq!(ch.total() as u64, dim);
    Ok(ch)
}

/// Symmetric and alternating squares.
pub fn sym_alt_square(chi: &FormalCharacter) -> (FormalCharacter, FormalCharacter) {
    let sq = chi.product(chi);
    let psi = chi.adams2();
    let sym = sq.add_scaled(&psi, 1).halve().expect("sym square coefficients are even");
    let alt = sq.add_scaled(&psi, -1).halve().expect("alt square coefficients are even");
    (sym, alt)
}

/// An irreducible summand with its multiplicity.
#[derive(Clone, Debug)]
pub struct Term {
    pub label: IrrepLabel,
    pub labels: Vec<i64>,
    pub dim: u64,
    pub multiplicity: u64,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub terms: Vec<Term>,
}

impl Decomposition {
    pub fn total(&self) -> u64 {
        self.terms.iter().map(|t| t.dim * t.multiplicity).sum()
    }

    /// Sorted `(dim, multiplicity)` pairs, counting repeated summands.
    pub fn dim_multiset(&self) -> Vec<(u64, usize)> {
        multiset(
            self.terms
                .iter()
                .flat_map(|t| std::iter::repeat_n(t.dim, t.multiplicity as usize)),
        )
    }
}

pub fn decompose(chi: &FormalCharacter) -> Result<Decomposition> {
    decompose_capped(chi, DEFAULT_CAP)
}

/// Strips the character of the highest surviving dominant weight until
/// nothing is left.
pub fn decompose_capped(chi: &FormalCharacter, cap: u64) -> Result<Decomposition> {
    let rs = chi.rs.clone();
    let g = geometry(&rs);
    let mut rest = chi.clone();
    let mut terms = Vec::new();
    while let Some((w, m)) = rest
        .iter()
        .filter(|(w, _)| w.iter().all(|&x| x >= 0))
        .max_by(|(a, _), (b, _)| g.height(a).cmp(&g.height(b)).then(a.cmp(b)))
        .map(|(w, m)| (w.clone(), m))
    {
        if m < 0 {
            return Err(Error::NotACharacter(format!("negative multiplicity {m} at {w:?}")));
        }
        let label = IrrepLabel::from_labels(rs.clone(), &w)?;
        let irrep = irrep_character_capped(&label, cap)?;
        rest = rest.add_scaled(&irrep, -m);
        terms.push(Term {
            dim: irrep.total() as u64,
            label,
            labels: w,
            multiplicity: m as u64,
        });
    }
    if !rest.is_empty() {
        return Err(Error::NotACharacter("non-dominant weights left after stripping".into()));
    }
    Ok(Decomposition { terms })
}

/// Character of the adjoint module.
pub fn adjoint_character(rs: Arc<RootSystem>) -> FormalCharacter {
    let label = IrrepLabel::theta_multiple(rs, 1);
    irrep_character(&label).expect("adjoint is within the cap")
}
