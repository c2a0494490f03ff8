//! The Weyl dimension formula and the closed-form dimension expressions.
//!
//! The closed forms are deliberately computed on their own (factorials,
//! binomials, cross ratios) rather than through [`weyl_dim`], so that the
//! tests comparing them are real cross-checks.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, qi, to_u64, Q};
use crate::rootsys::{RootSystem, Weight};

/// A dominant integral weight of a given root system.
#[derive(Clone, Debug)]
pub struct IrrepLabel {
    rs: Arc<RootSystem>,
    hw: Weight,
}

impl IrrepLabel {
    /// Validates `hw`. Type A (and G2) weights are projected onto the
    /// sum-zero hyperplane first, so `(1,1,0,0)` labels the same su(4)
    /// module as `(1/2,1/2,-1/2,-1/2)`.
    pub fn new(rs: Arc<RootSystem>, hw: Weight) -> Result<Self> {
        let hw = rs.normalize(&hw)?;
        rs.dynkin_labels(&hw)?;
        if !rs.is_dominant(&hw)? {
            return Err(Error::NonDominantWeight(hw.to_string()));
        }
        Ok(IrrepLabel { rs, hw })
    }

    pub fn from_labels(rs: Arc<RootSystem>, labels: &[i64]) -> Result<Self> {
        if labels.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                actual: labels.len(),
            });
        }
        let hw = rs.from_labels(labels);
        Self::new(rs, hw)
    }

    /// `k` times the highest root.
    pub fn theta_multiple(rs: Arc<RootSystem>, k: i64) -> Self {
        let hw = rs.highest_root().scale(&qi(k));
        Self::new(rs, hw).expect("multiples of the highest root are dominant")
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn hw(&self) -> &Weight {
        &self.hw
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.rs.algebra(), self.hw)
    }
}

/// One factor `1 + (λ, α)/(δ, α)` of the Weyl product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylFactor {
    pub root: Weight,
    /// `(λ, α)`
    pub numerator: Q,
    /// `(δ, α)`
    pub denominator: Q,
}

impl WeylFactor {
    pub fn value(&self) -> Q {
        Q::one() + &self.numerator / &self.denominator
    }
}

/// Factors of the Weyl product for positive roots not orthogonal to `λ`.
pub fn weyl_factors(label: &IrrepLabel) -> Vec<WeylFactor> {
    let rs = &label.rs;
    let delta = rs.two_delta().scale(&Q::new(1.into(), 2.into()));
    rs.positive_roots()
        .iter()
        .filter_map(|alpha| {
            let num = rs.inner_unchecked(&label.hw, alpha);
            (!num.is_zero()).then(|| WeylFactor {
                root: alpha.clone(),
                numerator: num,
                denominator: rs.inner_unchecked(&delta, alpha),
            })
        })
        .collect()
}

/// Weyl dimension `∏_{α>0} (λ+δ, α)/(δ, α)`, for every type.
pub fn weyl_dim(label: &IrrepLabel) -> u64 {
    let prod = weyl_factors(label)
        .iter()
        .fold(Q::one(), |acc, f| acc * f.value());
    to_u64(&prod).expect("Weyl dimension is a positive integer")
}

fn check_range(a: i64, b: i64, c: i64, d: i64) -> Result<()> {
    if a < b && b <= c && c < d {
        Ok(())
    } else {
        Err(Error::BadRange { a, b, c, d })
    }
}

/// The cross ratio `Φ_1(a,b;c,d) = (d-a)!(c-b)! / ((d-b)!(c-a)!)`.
fn phi1(a: i64, b: i64, c: i64, d: i64) -> Q {
    Q::new(
        factorial(d - a) * factorial(c - b),
        factorial(d - b) * factorial(c - a),
    )
}

/// `Φ_m(a,b;c,d) = ∏_{r<m} Φ_1(a,b;c+r,d+r)`, the Weyl-product block for a
/// region where the weight drops by `m`.
pub fn phi(m: u32, a: i64, b: i64, c: i64, d: i64) -> Result<Q> {
    check_range(a, b, c, d)?;
    if m == 0 {
        return Err(Error::BadParam("phi needs m >= 1".into()));
    }
    Ok((0..m as i64).fold(Q::one(), |acc, r| acc * phi1(a, b, c + r, d + r)))
}

/// Dimension of the su module with highest weight `(1^{b-a}, 0^{c-b}, (-1)^{d-c})`.
pub fn psi1(a: i64, b: i64, c: i64, d: i64) -> Result<Q> {
    check_range(a, b, c, d)?;
    let s = d - a + 1;
    Ok(Q::new(
        BigInt::from(c - b + 1) * binomial(s, d - c) * binomial(s, b - a),
        BigInt::from(s),
    ))
}

fn integral(x: Q, what: &str) -> Result<u64> {
    to_u64(&x).ok_or_else(|| Error::BadParam(format!("{what} evaluated to non-natural {x}")))
}

/// `dim g^(k)` for su(n): `(n+2k-1)/(n-1) C(n+k-2, k)^2`.
pub fn cartan_power_dim(n: u32, k: u32) -> Result<u64> {
    if n < 2 || k < 1 {
        return Err(Error::BadParam(format!("cartan_power_dim({n}, {k})")));
    }
    let (n, k) = (n as i64, k as i64);
    let c = binomial(n + k - 2, k);
    integral(
        Q::new(BigInt::from(n + 2 * k - 1) * &c * &c, BigInt::from(n - 1)),
        "cartan_power_dim",
    )
}

/// `dim g^(1^k)` for su(n): `(n-2k+1)/(n+1) C(n+1, k)^2`.
///
/// Accepts `2k <= n + 1`; at `n = 2k - 1` the module is absent and the
/// value is 0.
pub fn wedge_power_dim(n: u32, k: u32) -> Result<u64> {
    if n < 2 || k < 1 || 2 * k > n + 1 {
        return Err(Error::BadParam(format!("wedge_power_dim({n}, {k}) needs k <= n/2")));
    }
    let (n, k) = (n as i64, k as i64);
    let c = binomial(n + 1, k);
    integral(
        Q::new(BigInt::from(n - 2 * k + 1) * &c * &c, BigInt::from(n + 1)),
        "wedge_power_dim",
    )
}

/// `dim g^(1^k,-k)` for su(n), as `C(n-1,k) C(n+k,k)`.
pub fn mixed_dim(n: u32, k: u32) -> Result<u64> {
    if k < 1 || k + 1 > n {
        return Err(Error::BadParam(format!("mixed_dim({n}, {k}) needs 1 <= k <= n-1")));
    }
    let (n, k) = (n as i64, k as i64);
    integral(
        Q::from_integer(binomial(n - 1, k) * binomial(n + k, k)),
        "mixed_dim",
    )
}

/// The second printed form of [`mixed_dim`]: `∏_{r=1}^k (n²-r²) / (k!)²`.
pub fn mixed_dim_product(n: u32, k: u32) -> Result<u64> {
    if k < 1 || k + 1 > n {
        return Err(Error::BadParam(format!("mixed_dim({n}, {k}) needs 1 <= k <= n-1")));
    }
    let (n, k) = (n as i64, k as i64);
    let num = (1..=k).fold(BigInt::one(), |acc, r| acc * BigInt::from(n * n - r * r));
    let f = factorial(k);
    integral(Q::new(num, &f * &f), "mixed_dim_product")
}

/// Dimension of the constituent of `⊗²(∧^k C^n)` whose highest weight
/// changes after positions `k-r` and `k+r`:
/// `(2r+1)/(n+1) C(n+1, k-r) C(n+1, n-k-r)`.
pub fn wedge_tensor_component_dim(n: u32, k: u32, r: u32) -> Result<u64> {
    if k > n || r >= k.min(n - k) {
        return Err(Error::BadParam(format!(
            "wedge_tensor_component_dim({n}, {k}, {r}) needs r < min(k, n-k)"
        )));
    }
    let (n, k, r) = (n as i64, k as i64, r as i64);
    integral(
        Q::new(
            BigInt::from(2 * r + 1) * binomial(n + 1, k - r) * binomial(n + 1, n - k - r),
            BigInt::from(n + 1),
        ),
        "wedge_tensor_component_dim",
    )
}

/// A partition, stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::BadParam(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `k`, in reverse lexicographic order.
    pub fn all(k: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `dim S_μ(C^n)` by the hook content formula; 0 when a column of `μ` is
/// longer than `n`.
pub fn hook_content_dim(mu: &Partition, n: u32) -> BigInt {
    let conj = mu.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = j as i64 - i as i64;
            let arm = row as i64 - j as i64 - 1;
            let leg = conj.parts()[j] as i64 - i as i64 - 1;
            num *= BigInt::from(n as i64 + content);
            den *= BigInt::from(arm + leg + 1);
        }
    }
    if num.is_negative() || num.is_zero() {
        return BigInt::zero();
    }
    num / den
}

/// Dimension of the so(n) module with highest weight `(m^b, 0, ...)`:
/// `Φ_m(0,b;b,n-b-1) ∏_{1≤i≤j≤b} (2m+n-i-j)/(n-i-j)`.
///
/// The product is singular when `n = 2b` (the weight then splits into a
/// self-dual/anti-self-dual pair), which is reported as `BadParam`.
pub fn so_rect_dim(n: u32, m: u32, b: u32) -> Result<u64> {
    let rank = n / 2;
    if n < 5 || m < 1 || b < 1 || b > rank {
        return Err(Error::BadParam(format!("so_rect_dim({n}, {m}, {b})")));
    }
    if n == 2 * b {
        return Err(Error::BadParam(format!(
            "so_rect_dim({n}, {m}, {b}): formula is singular at n = 2b"
        )));
    }
    let (n, m, b) = (n as i64, m as i64, b as i64);
    let head = if b < n - b - 1 {
        phi(m as u32, 0, b, b, n - b - 1)?
    } else {
        Q::one()
    };
    let mut prod = head;
    for i in 1..=b {
        for j in i..=b {
            prod *= Q::new(BigInt::from(2 * m + n - i - j), BigInt::from(n - i - j));
        }
    }
    integral(prod, "so_rect_dim")
}

/// Polynomial in `n` with rational coefficients, used to state the `n → -n`
/// duality between closed forms as an identity of coefficient lists.
pub fn poly_in_n(roots_and_scale: (&[i64], Q)) -> Vec<Q> {
    let (roots, scale) = roots_and_scale;
    let mut coeffs = vec![scale];
    for &r in roots {
        // multiply by (n - r)
        let mut next = vec![Q::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * qi(r);
        }
        coeffs = next;
    }
    coeffs
}

/// Substitutes `n → -n` in a coefficient list.
pub fn negate_variable(coeffs: &[Q]) -> Vec<Q> {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
        .collect()
}
