//! Casimir and split-Casimir eigenvalues, the decomposition tables of the
//! symmetric and alternating squares of the adjoint representation, and
//! the polynomial identities built from them.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dimform::{
    cartan_power_dim, hook_content_dim, mixed_dim, so_rect_dim, weyl_dim, IrrepLabel, Partition,
};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{binomial, q, qi, to_u64, Q};
use crate::rootsys::{AlgebraId, Family, RootSystem, Weight};

/// Which half of `g ⊗ g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Sym,
    Alt,
}

impl Part {
    pub fn parse(s: &str) -> Result<Part> {
        match s {
            "sym" | "S" | "s" => Ok(Part::Sym),
            "alt" | "A" | "a" | "wedge" => Ok(Part::Alt),
            _ => Err(Error::BadParam(format!("unknown part {s:?}, expected sym or alt"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Part::Sym => "sym",
            Part::Alt => "alt",
        }
    }

    /// `d(d+1)/2` or `d(d-1)/2`.
    pub fn parent_dim(self, d: u64) -> u64 {
        match self {
            Part::Sym => d * (d + 1) / 2,
            Part::Alt => d * (d - 1) / 2,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct Constituent {
    pub tag: String,
    pub label: Option<IrrepLabel>,
    pub dim: u64,
    /// Quadratic Casimir; unknown when the highest weight is not identified.
    pub casimir: Option<Q>,
    /// Eigenvalue of the split Casimir inside `g ⊗ g`.
    pub split_eig: Option<Q>,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct DecompTable {
    pub algebra: AlgebraId,
    pub part: Part,
    pub constituents: Vec<Constituent>,
    pub parent_dim: u64,
}

impl DecompTable {
    pub fn dim_sum(&self) -> u64 {
        self.constituents.iter().map(|c| c.dim).sum()
    }

    /// Sorted `(dim, multiplicity)` pairs.
    pub fn dim_multiset(&self) -> Vec<(u64, usize)> {
        multiset(self.constituents.iter().map(|c| c.dim))
    }

    /// Distinct split eigenvalues, in table order.
    pub fn split_eigs(&self) -> Vec<Q> {
        let mut out: Vec<Q> = Vec::new();
        for e in self.constituents.iter().filter_map(|c| c.split_eig.clone()) {
            if !out.contains(&e) {
                out.push(e);
            }
        }
        out
    }

    pub fn get(&self, tag: &str) -> Option<&Constituent> {
        self.constituents.iter().find(|c| c.tag == tag)
    }
}

pub(crate) fn multiset(dims: impl Iterator<Item = u64>) -> Vec<(u64, usize)> {
    let mut v: Vec<u64> = dims.collect();
    v.sort_unstable();
    let mut out: Vec<(u64, usize)> = Vec::new();
    for d in v {
        match out.last_mut() {
            Some((last, m)) if *last == d => *m += 1,
            _ => out.push((d, 1)),
        }
    }
    out
}

/// Distinct roots of a monic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    roots: Vec<Q>,
}

impl CharPoly {
    /// Repeated roots are collapsed.
    pub fn new(roots: impl IntoIterator<Item = Q>) -> Self {
        let mut out: Vec<Q> = Vec::new();
        for r in roots {
            if !out.contains(&r) {
                out.push(r);
            }
        }
        CharPoly { roots: out }
    }

    pub fn roots(&self) -> &[Q] {
        &self.roots
    }

    pub fn poly(&self) -> Poly {
        Poly::from_roots(&self.roots)
    }
}

/// Minimal polynomial (roots actually present) and the generic form.
#[derive(Clone, Debug)]
pub struct CharPolys {
    pub minimal: CharPoly,
    pub generic: CharPoly,
}

/// `(λ, λ + 2δ)`.
pub fn casimir_eigenvalue(rs: &RootSystem, hw: &Weight) -> Result<Q> {
    let hw = rs.normalize(hw)?;
    if !rs.is_dominant(&hw)? {
        return Err(Error::NonDominantWeight(hw.to_string()));
    }
    rs.inner(&hw, &(&hw + rs.two_delta()))
}

/// `½(c_sub - c1 - c2)`.
pub fn split_eigenvalue(c_sub: &Q, c1: &Q, c2: &Q) -> Q {
    (c_sub - c1 - c2) / qi(2)
}

struct Builder {
    rs: Arc<RootSystem>,
    c_ad: Q,
    out: Vec<Constituent>,
}

impl Builder {
    fn new(algebra: AlgebraId) -> Result<Self> {
        let rs = Arc::new(RootSystem::new(algebra)?);
        let c_ad = casimir_eigenvalue(&rs, rs.highest_root())?;
        Ok(Builder { rs, c_ad, out: Vec::new() })
    }

    /// Pushes a constituent with highest weight given in ambient
    /// coordinates. Zero-dimensional entries are skipped.
    fn push(&mut self, tag: &str, dim: u64, hw: Option<Vec<i64>>) -> Result<()> {
        if dim == 0 {
            return Ok(());
        }
        let hw = hw.expect("present constituent needs a weight");
        let label = IrrepLabel::new(self.rs.clone(), Weight::from_ints(&hw))?;
        let wd = weyl_dim(&label);
        assert_eq!(wd, dim, "closed form for {tag} disagrees with the Weyl dimension");
        let c = casimir_eigenvalue(&self.rs, label.hw())?;
        let split = split_eigenvalue(&c, &self.c_ad, &self.c_ad);
        self.out.push(Constituent {
            tag: tag.to_string(),
            label: Some(label),
            dim,
            casimir: Some(c),
            split_eig: Some(split),
            note: None,
        });
        Ok(())
    }

    fn finish(self, part: Part) -> Result<DecompTable> {
        let algebra = self.rs.algebra();
        let parent_dim = part.parent_dim(algebra.dim() as u64);
        let table = DecompTable {
            algebra,
            part,
            constituents: self.out,
            parent_dim,
        };
        if table.dim_sum() != parent_dim {
            return Err(Error::DimensionMismatch {
                expected: parent_dim as usize,
                actual: table.dim_sum() as usize,
            });
        }
        Ok(table)
    }
}

fn weight(rank: usize, head: &[i64]) -> Vec<i64> {
    let mut w = vec![0; rank];
    w[..head.len()].copy_from_slice(head);
    w
}

fn su_table(n: u32, part: Part) -> Result<DecompTable> {
    let mut b = Builder::new(AlgebraId::su(n)?)?;
    let nn = n as usize;
    let ends = |front: &[i64], back: &[i64]| {
        let mut w = vec![0; nn];
        w[..front.len()].copy_from_slice(front);
        let k = back.len();
        w[nn - k..].copy_from_slice(back);
        w
    };
    match part {
        Part::Sym => {
            b.push("g^(2)", cartan_power_dim(n, 2)?, Some(ends(&[2], &[-2])))?;
            let w2 = if n >= 4 { crate::dimform::wedge_power_dim(n, 2)? } else { 0 };
            b.push("g^(1^2)", w2, (n >= 4).then(|| ends(&[1, 1], &[-1, -1])))?;
            // The copy of the adjoint needs the cubic invariant, absent for su(2).
            let ad = if n >= 3 { (n * n - 1) as u64 } else { 0 };
            b.push("adjoint", ad, Some(ends(&[1], &[-1])))?;
            b.push("trivial", 1, Some(vec![0; nn]))?;
        }
        Part::Alt => {
            let m = if n >= 3 { mixed_dim(n, 2)? } else { 0 };
            b.push("g^(2,1^2)", m, (n >= 3).then(|| ends(&[2], &[-1, -1])))?;
            b.push("g^(1^2,2)", m, (n >= 3).then(|| ends(&[1, 1], &[-2])))?;
            b.push("adjoint", (n * n - 1) as u64, Some(ends(&[1], &[-1])))?;
        }
    }
    b.finish(part)
}

fn so_table(n: u32, part: Part) -> Result<DecompTable> {
    if n < 5 {
        return Err(Error::UnsupportedAlgebra(format!(
            "so({n}) tables need n >= 5 (so(3) is su(2), so(4) is not simple)"
        )));
    }
    let mut b = Builder::new(AlgebraId::so(n)?)?;
    let r = b.rs.rank();
    let nn = n as i64;
    match part {
        Part::Sym => {
            b.push("g^(2)", so_rect_dim(n, 2, 2)?, Some(weight(r, &[2, 2])))?;
            let w4 = to_u64(&Q::from_integer(binomial(nn, 4))).unwrap();
            match n {
                8 => {
                    b.push("wedge4V_plus", w4 / 2, Some(vec![1, 1, 1, 1]))?;
                    b.push("wedge4V_minus", w4 / 2, Some(vec![1, 1, 1, -1]))?;
                }
                5 => b.push("wedge4V", w4, Some(weight(r, &[1])))?,
                6 => b.push("wedge4V", w4, Some(weight(r, &[1, 1])))?,
                7 => b.push("wedge4V", w4, Some(weight(r, &[1, 1, 1])))?,
                _ => b.push("wedge4V", w4, Some(weight(r, &[1, 1, 1, 1])))?,
            }
            let s2b = ((nn * nn + nn - 2) / 2) as u64;
            b.push("S2bV", s2b, Some(weight(r, &[2])))?;
            b.push("trivial", 1, Some(vec![0; r]))?;
        }
        Part::Alt => {
            b.push("adjoint", (nn * (nn - 1) / 2) as u64, Some(weight(r, &[1, 1])))?;
            let other = (nn * (nn - 1) * (nn - 3) * (nn + 2) / 8) as u64;
            match n {
                // so(6) = su(4): the partner splits into a dual pair.
                6 => {
                    b.push("star_plus", other / 2, Some(vec![2, 1, 1]))?;
                    b.push("star_minus", other / 2, Some(vec![2, 1, -1]))?;
                }
                5 => b.push("star", other, Some(weight(r, &[2, 1])))?,
                _ => b.push("star", other, Some(weight(r, &[2, 1, 1])))?,
            }
        }
    }
    b.finish(part)
}

fn sp_table(n: u32, part: Part) -> Result<DecompTable> {
    let mut b = Builder::new(AlgebraId::sp(n)?)?;
    let r = b.rs.rank();
    let nn = n as i64;
    match part {
        Part::Sym => {
            let s4 = to_u64(&Q::from_integer(binomial(nn + 3, 4))).unwrap();
            b.push("S4V", s4, Some(weight(r, &[4])))?;
            let g11 = (nn * (nn - 1) * (nn - 2) * (nn + 3) / 12) as u64;
            b.push("g^(1^2)", g11, (r >= 2).then(|| weight(r, &[2, 2])))?;
            let w2b = ((nn * nn - nn - 2) / 2) as u64;
            b.push("wedge2bV", w2b, (r >= 2).then(|| weight(r, &[1, 1])))?;
            if let Some(c) = b.out.iter_mut().find(|c| c.tag == "wedge2bV") {
                c.note = Some(
                    "dimension (n^2-n-2)/2; a coefficient of 1/8 would violate the dimension sum"
                        .into(),
                );
            }
            b.push("trivial", 1, Some(vec![0; r]))?;
        }
        Part::Alt => {
            b.push("adjoint", (nn * (nn + 1) / 2) as u64, Some(weight(r, &[2])))?;
            let other = (nn * (nn + 1) * (nn + 3) * (nn - 2) / 8) as u64;
            b.push("star", other, (r >= 2).then(|| weight(r, &[3, 1])))?;
        }
    }
    b.finish(part)
}

/// The decomposition of `S²g` or `∧²g` into irreducibles.
pub fn tensor_square_table(algebra: AlgebraId, part: Part) -> Result<DecompTable> {
    let n = algebra.n().unwrap_or(0);
    match algebra.family() {
        Family::A => su_table(n, part),
        Family::B | Family::D => so_table(n, part),
        Family::C => sp_table(n, part),
        _ => {
            let (sym, alt) = exceptional_pair(algebra)?;
            Ok(match part {
                Part::Sym => sym,
                Part::Alt => alt,
            })
        }
    }
}

fn exceptional_pair(algebra: AlgebraId) -> Result<(DecompTable, DecompTable)> {
    let rs = Arc::new(RootSystem::new(algebra)?);
    let d = algebra.dim() as u64;
    let c_ad = casimir_eigenvalue(&rs, rs.highest_root())?;
    let known = |tag: &str, label: IrrepLabel| {
        let c = casimir_eigenvalue(&rs, label.hw()).expect("dominant");
        Constituent {
            tag: tag.into(),
            dim: weyl_dim(&label),
            split_eig: Some(split_eigenvalue(&c, &c_ad, &c_ad)),
            casimir: Some(c),
            label: Some(label),
            note: None,
        }
    };
    let star = |dim: u64, note: &str| Constituent {
        tag: "star".into(),
        label: None,
        dim,
        casimir: None,
        split_eig: None,
        note: Some(note.into()),
    };
    let trivial = known("trivial", IrrepLabel::theta_multiple(rs.clone(), 0));
    let square = known("g^(2)", IrrepLabel::theta_multiple(rs.clone(), 2));
    let star_sym = d * (d + 1) / 2 - 1 - square.dim;
    let sym = DecompTable {
        algebra,
        part: Part::Sym,
        constituents: vec![
            trivial,
            square,
            star(star_sym, "dimension by complement; highest weight not identified"),
        ],
        parent_dim: Part::Sym.parent_dim(d),
    };
    let mut alt_star = star(d * (d - 1) / 2 - d, "dimension by complement; highest weight not identified");
    // The alternating partner shares its split eigenvalue 0 with every
    // classical family.
    alt_star.split_eig = Some(Q::zero());
    alt_star.casimir = Some(&c_ad * qi(2));
    let alt = DecompTable {
        algebra,
        part: Part::Alt,
        constituents: vec![known("adjoint", IrrepLabel::theta_multiple(rs.clone(), 1)), alt_star],
        parent_dim: Part::Alt.parent_dim(d),
    };
    Ok((sym, alt))
}

/// Tables for the five exceptional algebras, sym then alt for each.
pub fn exceptional_table() -> Vec<DecompTable> {
    [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8]
        .into_iter()
        .flat_map(|f| {
            let (s, a) = exceptional_pair(AlgebraId::exceptional(f).unwrap()).unwrap();
            [s, a]
        })
        .collect()
}

/// Generic split-Casimir roots as closed forms in `n`.
fn generic_roots(algebra: AlgebraId, part: Part) -> Result<Vec<Q>> {
    let n = algebra.n().map(|n| n as i64).ok_or_else(|| {
        Error::UnsupportedAlgebra(format!("{algebra}: characteristic polynomials are classical only"))
    })?;
    Ok(match (algebra.family(), part) {
        (Family::A, Part::Sym) => vec![qi(2), qi(-2), qi(-n), qi(-2 * n)],
        (Family::A, Part::Alt) => vec![qi(0), qi(-n)],
        (Family::B | Family::D, Part::Sym) => vec![qi(2), qi(-4), qi(4 - n), qi(4 - 2 * n)],
        (Family::B | Family::D, Part::Alt) => vec![qi(0), qi(2 - n)],
        (Family::C, Part::Sym) => vec![qi(2), qi(-1), q(-n - 4, 2), qi(-n - 2)],
        (Family::C, Part::Alt) => vec![qi(0), q(-n - 2, 2)],
        _ => unreachable!(),
    })
}

pub fn characteristic_poly(algebra: AlgebraId, part: Part) -> Result<CharPolys> {
    let generic = CharPoly::new(generic_roots(algebra, part)?);
    let table = tensor_square_table(algebra, part)?;
    Ok(CharPolys {
        minimal: CharPoly::new(table.split_eigs()),
        generic,
    })
}

/// `∏_{j≠r} (x - c_j)/(c_r - c_j)`.
pub fn lagrange_projector_poly(eigs: &[Q], r: usize) -> Result<Poly> {
    if r >= eigs.len() {
        return Err(Error::BadParam(format!("index {r} out of {} eigenvalues", eigs.len())));
    }
    for (i, a) in eigs.iter().enumerate() {
        if eigs[..i].contains(a) {
            return Err(Error::RepeatedEigenvalue(a.to_string()));
        }
    }
    let cr = &eigs[r];
    let mut p = Poly::constant(Q::one());
    for (j, cj) in eigs.iter().enumerate() {
        if j != r {
            p = (&p * &Poly::linear(cj)).scale(&(Q::one() / (cr - cj)));
        }
    }
    Ok(p)
}

/// Vogel parameters `(α, β, γ)` in the normalization where the adjoint
/// Casimir is `2(α+β+γ)`. Informational only.
pub fn vogel_parameters(algebra: AlgebraId) -> Option<[Q; 3]> {
    let n = algebra.n().map(|n| n as i64).unwrap_or(0);
    let exc = |m: Q| [qi(-2), &m + qi(4), &m * qi(2) + qi(4)];
    Some(match algebra.family() {
        Family::A => [qi(-2), qi(2), qi(n)],
        Family::B | Family::D => [qi(-2), qi(4), qi(n - 4)],
        Family::C => [qi(-2), qi(1), q(n + 4, 2)],
        Family::G2 => exc(q(-2, 3)),
        Family::F4 => exc(qi(1)),
        Family::E6 => exc(qi(2)),
        Family::E7 => exc(qi(4)),
        Family::E8 => exc(qi(8)),
    })
}

/// Both sides of the three partition-sum identities for `S^k hom(V)` and
/// `∧^k hom(V)` with `dim V = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurSums {
    pub sym_lhs: BigInt,
    pub sym_rhs: BigInt,
    pub alt_lhs: BigInt,
    pub alt_rhs: BigInt,
    pub virt_lhs: BigInt,
    pub virt_rhs: BigInt,
}

impl SchurSums {
    pub fn holds(&self) -> bool {
        self.sym_lhs == self.sym_rhs && self.alt_lhs == self.alt_rhs && self.virt_lhs == self.virt_rhs
    }
}

pub fn schur_sum_identity(n: u32, k: u32) -> SchurSums {
    let mut sym = BigInt::zero();
    let mut alt = BigInt::zero();
    let mut virt = BigInt::zero();
    for mu in Partition::all(k) {
        let d = hook_content_dim(&mu, n);
        let dc = hook_content_dim(&mu.conjugate(), n);
        sym += &d * &d;
        alt += &d * &dc;
        let diff = &d - &dc;
        virt += &diff * &diff;
    }
    let nn = (n as i64) * (n as i64);
    let k = k as i64;
    let sym_rhs = binomial(nn + k - 1, k);
    let alt_rhs = binomial(nn, k);
    SchurSums {
        sym_lhs: sym,
        alt_lhs: alt,
        virt_lhs: virt / 2,
        virt_rhs: &sym_rhs - &alt_rhs,
        sym_rhs,
        alt_rhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| qi(x)).collect()
    }

    fn dims(t: &DecompTable) -> Vec<u64> {
        t.constituents.iter().map(|c| c.dim).collect()
    }

    #[test]
    fn casimir_values() {
        for n in 2..=7 {
            let rs = RootSystem::new(AlgebraId::su(n).unwrap()).unwrap();
            assert_eq!(casimir_eigenvalue(&rs, rs.highest_root()).unwrap(), qi(2 * n as i64));
            for k in 1..=3i64 {
                let mut hw = vec![0; n as usize];
                hw[0] = k;
                hw[n as usize - 1] = -k;
                let c = casimir_eigenvalue(&rs, &Weight::from_ints(&hw)).unwrap();
                assert_eq!(c, qi(2 * k * (n as i64 + k - 1)));
            }
            assert!(casimir_eigenvalue(&rs, &Weight::zero(n as usize)).unwrap().is_zero());
        }
        for n in 5..=12 {
            let rs = RootSystem::new(AlgebraId::so(n).unwrap()).unwrap();
            assert_eq!(casimir_eigenvalue(&rs, rs.highest_root()).unwrap(), qi(2 * (n as i64 - 2)));
        }
        for n in (2..=10).step_by(2) {
            let rs = RootSystem::new(AlgebraId::sp(n).unwrap()).unwrap();
            assert_eq!(casimir_eigenvalue(&rs, rs.highest_root()).unwrap(), qi(n as i64 + 2));
        }
        let rs = RootSystem::new(AlgebraId::su(3).unwrap()).unwrap();
        assert!(matches!(
            casimir_eigenvalue(&rs, &Weight::from_ints(&[0, 0, 1])),
            Err(Error::NonDominantWeight(_))
        ));
    }

    #[test]
    fn split_examples() {
        let n = qi(5);
        assert_eq!(split_eigenvalue(&(qi(2) * (&n + qi(1)) * qi(2)), &(qi(2) * &n), &(qi(2) * &n)), qi(2));
        assert_eq!(split_eigenvalue(&qi(0), &qi(10), &qi(10)), qi(-10));
    }

    #[test]
    fn su_tables() {
        let t = tensor_square_table(AlgebraId::su(3).unwrap(), Part::Sym).unwrap();
        assert_eq!(dims(&t), vec![27, 8, 1]);
        assert_eq!(t.split_eigs(), qs(&[2, -3, -6]));
        let t = tensor_square_table(AlgebraId::su(4).unwrap(), Part::Alt).unwrap();
        assert_eq!(dims(&t), vec![45, 45, 15]);
        let t = tensor_square_table(AlgebraId::su(2).unwrap(), Part::Sym).unwrap();
        assert_eq!(dims(&t), vec![5, 1]);
        let t = tensor_square_table(AlgebraId::su(2).unwrap(), Part::Alt).unwrap();
        assert_eq!(dims(&t), vec![3]);
        for n in 3..=9i64 {
            let t = tensor_square_table(AlgebraId::su(n as u32).unwrap(), Part::Sym).unwrap();
            assert_eq!(t.get("g^(2)").unwrap().split_eig, Some(qi(2)));
            if n >= 4 {
                assert_eq!(t.get("g^(1^2)").unwrap().split_eig, Some(qi(-2)));
            }
            assert_eq!(t.get("adjoint").unwrap().split_eig, Some(qi(-n)));
            assert_eq!(t.get("trivial").unwrap().split_eig, Some(qi(-2 * n)));
            let t = tensor_square_table(AlgebraId::su(n as u32).unwrap(), Part::Alt).unwrap();
            assert_eq!(t.split_eigs(), qs(&[0, -n]));
        }
    }

    #[test]
    fn so_tables() {
        let t = tensor_square_table(AlgebraId::so(6).unwrap(), Part::Sym).unwrap();
        assert_eq!(dims(&t), vec![84, 15, 20, 1]);
        let su4 = tensor_square_table(AlgebraId::su(4).unwrap(), Part::Sym).unwrap();
        assert_eq!(t.dim_multiset(), su4.dim_multiset());
        let t = tensor_square_table(AlgebraId::so(6).unwrap(), Part::Alt).unwrap();
        let su4 = tensor_square_table(AlgebraId::su(4).unwrap(), Part::Alt).unwrap();
        assert_eq!(t.dim_multiset(), su4.dim_multiset());
        let t = tensor_square_table(AlgebraId::so(8).unwrap(), Part::Sym).unwrap();
        assert_eq!(dims(&t), vec![300, 35, 35, 35, 1]);
        assert_eq!(t.split_eigs(), qs(&[2, -4, -12]));
        assert!(tensor_square_table(AlgebraId::so(4).unwrap(), Part::Sym).is_err());
        for n in 5..=14i64 {
            let t = tensor_square_table(AlgebraId::so(n as u32).unwrap(), Part::Sym).unwrap();
            let eig = |tag: &str| t.get(tag).unwrap().split_eig.clone().unwrap();
            assert_eq!(eig("g^(2)"), qi(2));
            if n != 8 {
                assert_eq!(eig("wedge4V"), qi(-4));
                assert_eq!(t.get("wedge4V").unwrap().casimir, Some(qi(4 * (n - 4))));
            }
            assert_eq!(eig("S2bV"), qi(4 - n));
            assert_eq!(eig("trivial"), qi(4 - 2 * n));
            let t = tensor_square_table(AlgebraId::so(n as u32).unwrap(), Part::Alt).unwrap();
            assert_eq!(t.split_eigs(), qs(&[2 - n, 0]));
        }
    }

    #[test]
    fn sp_tables() {
        let t = tensor_square_table(AlgebraId::sp(4).unwrap(), Part::Sym).unwrap();
        assert_eq!(t.dim_multiset(), vec![(1, 1), (5, 1), (14, 1), (35, 1)]);
        assert!(t.get("wedge2bV").unwrap().note.is_some());
        // sp(4) = so(5)
        let so5 = tensor_square_table(AlgebraId::so(5).unwrap(), Part::Sym).unwrap();
        assert_eq!(t.dim_multiset(), so5.dim_multiset());
        let so5 = tensor_square_table(AlgebraId::so(5).unwrap(), Part::Alt).unwrap();
        let a = tensor_square_table(AlgebraId::sp(4).unwrap(), Part::Alt).unwrap();
        assert_eq!(a.dim_multiset(), so5.dim_multiset());
        let t = tensor_square_table(AlgebraId::sp(2).unwrap(), Part::Sym).unwrap();
        assert_eq!(dims(&t), vec![5, 1]);
        for n in (2..=12i64).step_by(2) {
            let id = AlgebraId::sp(n as u32).unwrap();
            let t = tensor_square_table(id, Part::Sym).unwrap();
            let gen = generic_roots(id, Part::Sym).unwrap();
            for c in &t.constituents {
                assert!(gen.contains(c.split_eig.as_ref().unwrap()));
            }
            let t = tensor_square_table(id, Part::Alt).unwrap();
            assert_eq!(t.get("adjoint").unwrap().split_eig, Some(q(-n - 2, 2)));
        }
    }

    #[test]
    fn dimension_sums_everywhere() {
        let mut ids = Vec::new();
        for n in 2..=15 {
            ids.push(AlgebraId::su(n).unwrap());
        }
        for n in 5..=22 {
            ids.push(AlgebraId::so(n).unwrap());
        }
        for n in (2..=20).step_by(2) {
            ids.push(AlgebraId::sp(n).unwrap());
        }
        for id in ids {
            for part in [Part::Sym, Part::Alt] {
                let t = tensor_square_table(id, part).unwrap();
                assert_eq!(t.dim_sum(), t.parent_dim, "{id} {part}");
            }
        }
    }

    #[test]
    fn exceptional() {
        let tables = exceptional_table();
        let expect: [(&[u64], &[u64]); 5] = [
            (&[1, 77, 27], &[14, 77]),
            (&[1, 1053, 324], &[52, 1274]),
            (&[1, 2430, 650], &[78, 2925]),
            (&[1, 7371, 1539], &[133, 8645]),
            (&[1, 27000, 3875], &[248, 30380]),
        ];
        for (i, (s, a)) in expect.iter().enumerate() {
            assert_eq!(dims(&tables[2 * i]), s.to_vec());
            assert_eq!(dims(&tables[2 * i + 1]), a.to_vec());
            for t in &tables[2 * i..2 * i + 2] {
                assert_eq!(t.dim_sum(), t.parent_dim);
            }
            assert_eq!(tables[2 * i].get("g^(2)").unwrap().split_eig, Some(qi(2)));
        }
    }

    #[test]
    fn adjoint_casimir_matches_vogel() {
        let ids = [
            AlgebraId::su(5).unwrap(),
            AlgebraId::so(9).unwrap(),
            AlgebraId::sp(6).unwrap(),
            AlgebraId::exceptional(Family::G2).unwrap(),
            AlgebraId::exceptional(Family::F4).unwrap(),
            AlgebraId::exceptional(Family::E6).unwrap(),
            AlgebraId::exceptional(Family::E7).unwrap(),
            AlgebraId::exceptional(Family::E8).unwrap(),
        ];
        for id in ids {
            let rs = RootSystem::new(id).unwrap();
            let [a, b, c] = vogel_parameters(id).unwrap();
            let t = a + b + c;
            assert_eq!(casimir_eigenvalue(&rs, rs.highest_root()).unwrap(), t * qi(2), "{id}");
        }
    }

    #[test]
    fn char_polys() {
        let su5 = characteristic_poly(AlgebraId::su(5).unwrap(), Part::Sym).unwrap();
        assert_eq!(su5.generic.roots(), qs(&[2, -2, -5, -10]).as_slice());
        let su3 = characteristic_poly(AlgebraId::su(3).unwrap(), Part::Sym).unwrap();
        assert_eq!(su3.minimal.roots(), qs(&[2, -3, -6]).as_slice());
        let so7 = characteristic_poly(AlgebraId::so(7).unwrap(), Part::Sym).unwrap();
        assert_eq!(so7.generic.roots(), qs(&[2, -4, -3, -10]).as_slice());
        let alt = characteristic_poly(AlgebraId::su(6).unwrap(), Part::Alt).unwrap();
        assert_eq!(alt.generic.roots(), qs(&[0, -6]).as_slice());
        for id in [
            AlgebraId::su(2).unwrap(),
            AlgebraId::su(3).unwrap(),
            AlgebraId::su(7).unwrap(),
            AlgebraId::so(5).unwrap(),
            AlgebraId::so(8).unwrap(),
            AlgebraId::so(11).unwrap(),
            AlgebraId::sp(2).unwrap(),
            AlgebraId::sp(8).unwrap(),
        ] {
            for part in [Part::Sym, Part::Alt] {
                let p = characteristic_poly(id, part).unwrap();
                assert!(p.minimal.poly().divides(&p.generic.poly()), "{id} {part}");
            }
        }
        assert!(characteristic_poly(AlgebraId::exceptional(Family::G2).unwrap(), Part::Sym).is_err());
    }

    #[test]
    fn lagrange() {
        let n = 4;
        let eigs = qs(&[2, -2, -n, -2 * n]);
        let p = lagrange_projector_poly(&eigs, 0).unwrap();
        let expect = Poly::from_roots(&qs(&[-2, -4, -8])).scale(&q(1, 240));
        assert_eq!(p, expect);
        let p = lagrange_projector_poly(&qs(&[0, -n]), 1).unwrap();
        assert_eq!(p, Poly::new(vec![qi(0), q(-1, n)]));
        assert_eq!(lagrange_projector_poly(&qs(&[1]), 0).unwrap(), Poly::constant(qi(1)));
        assert!(matches!(
            lagrange_projector_poly(&qs(&[1, 2, 1]), 0),
            Err(Error::RepeatedEigenvalue(_))
        ));
        for eigs in [qs(&[2, -4, -2, -8]), qs(&[2, -2, -5, -10]), vec![qi(2), qi(-1), q(-7, 2), qi(-8)]] {
            let mut sum = Poly::zero();
            for r in 0..eigs.len() {
                let p = lagrange_projector_poly(&eigs, r).unwrap();
                for (s, e) in eigs.iter().enumerate() {
                    assert_eq!(p.eval(e), if r == s { qi(1) } else { qi(0) });
                }
                sum = &sum + &p;
            }
            assert_eq!(sum, Poly::constant(qi(1)));
        }
    }

    #[test]
    fn schur_sums() {
        let s = schur_sum_identity(2, 2);
        assert_eq!((s.sym_lhs.clone(), s.sym_rhs.clone()), (10.into(), 10.into()));
        assert_eq!((s.alt_lhs.clone(), s.alt_rhs.clone()), (6.into(), 6.into()));
        let s = schur_sum_identity(2, 3);
        assert_eq!(s.virt_lhs, BigInt::from(16));
        assert_eq!(s.virt_rhs, BigInt::from(16));
        let sv = binomial(4, 3) - binomial(2, 3);
        assert_eq!(&sv * &sv, BigInt::from(16));
        for k in 1..=4 {
            assert_eq!(schur_sum_identity(1, k).sym_lhs, BigInt::one());
        }
        for n in 1..=7 {
            for k in 1..=6 {
                assert!(schur_sum_identity(n, k).holds(), "n={n} k={k}");
            }
        }
    }
}
