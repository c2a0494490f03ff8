//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs as a plain binary (`harness = false`).

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use adjsq::casdecomp::{
    characteristic_poly, exceptional_table, schur_sum_identity, tensor_square_table, Part,
};
use adjsq::dimform::{weyl_dim, weyl_factors, IrrepLabel};
use adjsq::hwv::{generated_dim, h_vector, is_highest_weight_vector, so3_law, RealizedModule};
use adjsq::linalg::Matrix;
use adjsq::matrep::{
    generated_in_part, harmonic_decompose, harmonic_ops, highest_weight_vectors, minimal_roots,
    projector, realize, split_casimir_matrix, verify_annihilation,
};
use adjsq::oracle::{adjoint_character, decompose, sym_alt_square};
use adjsq::rational::{binomial, q, qi};
use adjsq::rootsys::{AlgebraId, Family, RootSystem};
use adjsq::Q;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| qi(x)).collect()
}

fn dims(t: &adjsq::casdecomp::DecompTable) -> Vec<u64> {
    t.constituents.iter().map(|c| c.dim).collect()
}

/// 1. Unitary tables for n = 2..10.
fn c1() -> Outcome {
    let start = Instant::now();
    for n in 2..=10i64 {
        let id = AlgebraId::su(n as u32).unwrap();
        let d = (n * n - 1) as u64;
        // closed forms written out independently
        let cartan = n * n * (n - 1) * (n + 3) / 4;
        let wedge = if n >= 4 { n * n * (n + 1) * (n - 3) / 4 } else { 0 };
        let adj = if n >= 3 { n * n - 1 } else { 0 };
        let mixed = if n >= 3 { (n * n - 1) * (n * n - 4) / 4 } else { 0 };
        let expect_sym: Vec<u64> = [cartan, wedge, adj, 1].iter().filter(|&&x| x > 0).map(|&x| x as u64).collect();
        let expect_alt: Vec<u64> =
            [mixed, mixed, n * n - 1].iter().filter(|&&x| x > 0).map(|&x| x as u64).collect();
        let s = tensor_square_table(id, Part::Sym).map_err(|e| e.to_string())?;
        let a = tensor_square_table(id, Part::Alt).map_err(|e| e.to_string())?;
        ensure(dims(&s) == expect_sym, || format!("su({n}) sym {:?}", dims(&s)))?;
        ensure(dims(&a) == expect_alt, || format!("su({n}) alt {:?}", dims(&a)))?;
        ensure(s.dim_sum() == d * (d + 1) / 2, || format!("su({n}) sym sum"))?;
        ensure(a.dim_sum() == d * (d - 1) / 2, || format!("su({n}) alt sum"))?;
    }
    let s3 = tensor_square_table(AlgebraId::su(3).unwrap(), Part::Sym).unwrap();
    ensure(dims(&s3) == vec![27, 8, 1], || "su(3) sym".into())?;
    within(start, Duration::from_secs(1))?;
    Ok("su(2..10) sums hold, su(3) sym = 27+8+1".into())
}

/// 2. Character stripping agrees with the tables.
fn c2() -> Outcome {
    let start = Instant::now();
    let mut ids: Vec<AlgebraId> = (2..=5).map(|n| AlgebraId::su(n).unwrap()).collect();
    ids.extend((5..=8).map(|n| AlgebraId::so(n).unwrap()));
    ids.extend([4, 6].map(|n| AlgebraId::sp(n).unwrap()));
    ids.push(AlgebraId::exceptional(Family::G2).unwrap());
    ids.push(AlgebraId::exceptional(Family::F4).unwrap());
    let mut checked = 0;
    for id in ids {
        let rs = Arc::new(RootSystem::new(id).unwrap());
        let (s, a) = sym_alt_square(&adjoint_character(rs));
        for (part, ch) in [(Part::Sym, s), (Part::Alt, a)] {
            let table = tensor_square_table(id, part).map_err(|e| e.to_string())?;
            let d = decompose(&ch).map_err(|e| e.to_string())?;
            ensure(d.dim_multiset() == table.dim_multiset(), || {
                format!("{id} {part}: oracle {:?} vs table {:?}", d.dim_multiset(), table.dim_multiset())
            })?;
            checked += 1;
        }
    }
    let spot = |id: AlgebraId, part: Part| {
        let rs = Arc::new(RootSystem::new(id).unwrap());
        let (s, a) = sym_alt_square(&adjoint_character(rs));
        let ch = if part == Part::Sym { s } else { a };
        decompose(&ch).unwrap().dim_multiset()
    };
    ensure(spot(AlgebraId::su(3).unwrap(), Part::Alt) == vec![(8, 1), (10, 2)], || "su(3) alt".into())?;
    ensure(
        spot(AlgebraId::so(8).unwrap(), Part::Sym) == vec![(1, 1), (35, 3), (300, 1)],
        || "so(8) sym".into(),
    )?;
    ensure(
        spot(AlgebraId::exceptional(Family::G2).unwrap(), Part::Sym) == vec![(1, 1), (27, 1), (77, 1)],
        || "G2 sym".into(),
    )?;
    within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} (algebra, part) pairs agree"))
}

/// 3. Characteristic polynomials annihilate the split Casimir on S²g.
fn c3() -> Outcome {
    let start = Instant::now();
    let cases = [
        (AlgebraId::su(3).unwrap(), qs(&[2, -3, -6])),
        (AlgebraId::su(4).unwrap(), qs(&[2, -2, -4, -8])),
        (AlgebraId::so(6).unwrap(), qs(&[2, -4, -2, -8])),
    ];
    for (id, roots) in &cases {
        let l = realize(*id).map_err(|e| e.to_string())?;
        let op = split_casimir_matrix(&l, Part::Sym);
        let r = verify_annihilation(&op, roots);
        ensure(r.is_zero(), || format!("{id}: residual {r}"))?;
    }
    let id = AlgebraId::sp(4).unwrap();
    let l = realize(id).unwrap();
    let op = split_casimir_matrix(&l, Part::Sym);
    let generic = characteristic_poly(id, Part::Sym).unwrap().generic;
    let mut found = minimal_roots(&op, generic.roots()).map_err(|e| e.to_string())?;
    let mut table = tensor_square_table(id, Part::Sym).unwrap().split_eigs();
    found.sort();
    table.sort();
    ensure(found == table, || format!("sp(4) minimal roots {found:?} vs table {table:?}"))?;
    let l = realize(AlgebraId::so(8).unwrap()).unwrap();
    let op = split_casimir_matrix(&l, Part::Sym);
    let r = verify_annihilation(&op, &qs(&[2, -4, -12]));
    ensure(op.dim == 406 && r.is_zero(), || format!("so(8): residual {r}"))?;
    within(start, Duration::from_secs(120))?;
    Ok("su(3), su(4), so(6) residual 0; sp(4) minimal roots = table; so(8) 406x406 cubic".into())
}

/// 4. Lagrange projectors.
fn c4() -> Outcome {
    let mut report = Vec::new();
    for (id, part, expect) in [
        (AlgebraId::su(3).unwrap(), Part::Sym, vec![27, 8, 1]),
        (AlgebraId::su(4).unwrap(), Part::Sym, vec![84, 20, 15, 1]),
        (AlgebraId::su(4).unwrap(), Part::Alt, vec![45, 45, 15]),
    ] {
        let l = realize(id).unwrap();
        let op = split_casimir_matrix(&l, part);
        let table = tensor_square_table(id, part).unwrap();
        let eigs = table.split_eigs();
        let ps: Vec<Matrix> = (0..eigs.len())
            .map(|r| projector(&op, &eigs, r))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let mut sum = Matrix::zeros(op.dim, op.dim);
        for (r, p) in ps.iter().enumerate() {
            sum = &sum + p;
            for (s, p2) in ps.iter().enumerate() {
                if r != s {
                    ensure(p.matmul(p2).is_zero(), || format!("{id} {part}: P{r}P{s} != 0"))?;
                }
            }
        }
        ensure(sum == Matrix::identity(op.dim), || format!("{id} {part}: sum != 1"))?;
        // Split each eigenspace into irreducibles through highest weight vectors.
        let mut got = Vec::new();
        for p in &ps {
            let rank = p.rank();
            let hws = highest_weight_vectors(&l, part, p).map_err(|e| e.to_string())?;
            let pieces: Vec<u64> = hws.iter().map(|(_, v)| generated_in_part(&l, part, v) as u64).collect();
            ensure(pieces.iter().sum::<u64>() == rank as u64, || {
                format!("{id} {part}: rank {rank} vs pieces {pieces:?}")
            })?;
            got.extend(pieces);
        }
        let mut a = got.clone();
        let mut b = expect.clone();
        a.sort();
        b.sort();
        let mut t = dims(&table);
        t.sort();
        ensure(a == b && b == t, || format!("{id} {part}: {got:?} vs {expect:?}"))?;
        report.push(format!("{id} {part} {got:?}"));
    }
    Ok(report.join("; "))
}

/// 5. Exceptional tables.
fn c5() -> Outcome {
    let start = Instant::now();
    let tables = exceptional_table();
    let sq = [77, 1053, 2430, 7371, 27000];
    let sym_star = [27, 324, 650, 1539, 3875];
    let alt_star = [77, 1274, 2925, 8645, 30380];
    let fams = [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8];
    for (i, fam) in fams.into_iter().enumerate() {
        let rs = Arc::new(RootSystem::new(AlgebraId::exceptional(fam).unwrap()).unwrap());
        let w = weyl_dim(&IrrepLabel::theta_multiple(rs, 2));
        ensure(w == sq[i], || format!("{fam:?}: weyl_dim(2θ) = {w}"))?;
        let s = &tables[2 * i];
        let a = &tables[2 * i + 1];
        ensure(s.get("g^(2)").unwrap().dim == sq[i], || format!("{fam:?} square"))?;
        ensure(s.get("star").unwrap().dim == sym_star[i], || format!("{fam:?} sym star"))?;
        ensure(a.get("star").unwrap().dim == alt_star[i], || format!("{fam:?} alt star"))?;
        ensure(s.dim_sum() == s.parent_dim && a.dim_sum() == a.parent_dim, || format!("{fam:?} sums"))?;
    }
    within(start, Duration::from_secs(5))?;
    Ok("G2 F4 E6 E7 E8 match".into())
}

/// 6. G2 through the positive-root product.
fn c6() -> Outcome {
    let rs = Arc::new(RootSystem::new(AlgebraId::exceptional(Family::G2).unwrap()).unwrap());
    let base: Vec<Q> = vec![q(3, 3), q(3, 4), q(3, 5), q(3, 6), q(6, 9)];
    for (k, expect) in [(1, 14u64), (2, 77), (3, 273)] {
        let label = IrrepLabel::theta_multiple(rs.clone(), k);
        let factors = weyl_factors(&label);
        ensure(factors.len() == 5, || format!("{k}θ: {} factors", factors.len()))?;
        let mut ratios: Vec<Q> = factors.iter().map(|f| &f.numerator / &f.denominator).collect();
        let mut want: Vec<Q> = base.iter().map(|r| r * qi(k)).collect();
        ratios.sort();
        want.sort();
        ensure(ratios == want, || format!("{k}θ ratios {ratios:?}"))?;
        let prod = factors.iter().fold(Q::one(), |acc, f| acc * f.value());
        ensure(prod == qi(expect as i64) && weyl_dim(&label) == expect, || format!("{k}θ: {prod}"))?;
    }
    Ok("14, 77, 273 from five factors".into())
}

/// 7. Partition-sum identities.
fn c7() -> Outcome {
    for n in 1..=4u32 {
        for k in 1..=4u32 {
            let s = schur_sum_identity(n, k);
            ensure(s.holds(), || format!("n={n} k={k}: {s:?}"))?;
        }
    }
    for n in 1..=4i64 {
        let s = schur_sum_identity(n as u32, 3);
        let v = binomial(n + 2, 3) - binomial(n, 3);
        ensure(s.virt_lhs == &v * &v, || format!("n={n}: virtual k=3"))?;
    }
    let s = schur_sum_identity(2, 3);
    ensure(s.virt_lhs == BigInt::from(16), || "n=2 k=3".into())?;
    Ok("n,k <= 4 hold; n=2 k=3 virtual 16 = 16".into())
}

/// 8. Harmonic tensors for so(5), so(6).
fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in [5usize, 6] {
        let ops = harmonic_ops(n).map_err(|e| e.to_string())?;
        let nq = qi(n as i64);
        ensure(
            ops.b13.matmul(&ops.b13_dual) == Matrix::identity(ops.s2v_dim()).scale(&nq),
            || format!("so({n}): b13 b13_dual != n"),
        )?;
        ensure(ops.p13.matmul(&ops.p13) == ops.p13, || format!("so({n}): p13 not idempotent"))?;
        let rank = (&Matrix::identity(ops.s2w_dim()) - &ops.p13).rank();
        let expect = n * (n - 3) * (n * n + n + 2) / 8;
        ensure(rank == expect, || format!("so({n}): harmonic rank {rank} vs {expect}"))?;
        for _ in 0..25 {
            let a: Vec<Q> = (0..ops.s2w_dim())
                .map(|_| q(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                .collect();
            let [c1, c2, c3] = harmonic_decompose(&ops, &a);
            let sum: Vec<Q> = (0..a.len()).map(|i| &c1[i] + &c2[i] + &c3[i]).collect();
            ensure(sum == a, || format!("so({n}): reassembly failed"))?;
            ensure(ops.b13.mul_vec(&c1).iter().all(Zero::is_zero), || "c1 not harmonic".into())?;
        }
        for w in ops.wedge4_span() {
            ensure(ops.b13.mul_vec(&w).iter().all(Zero::is_zero), || format!("so({n}): ∧⁴V not harmonic"))?;
        }
    }
    Ok("so(5), so(6): n·id, idempotent, ranks 40 and 99, 25 reassemblies each".into())
}

/// 9. Highest weight vector criterion.
fn c9() -> Outcome {
    let mut modules: Vec<RealizedModule> = (0..=3).map(|l| RealizedModule::su2_spin(l).unwrap()).collect();
    modules.push(RealizedModule::adjoint(AlgebraId::su(3).unwrap()).unwrap());
    for m in &modules {
        for i in 0..m.dim() {
            let v = m.basis_vector(i);
            let hw = is_highest_weight_vector(m, &v).map_err(|e| e.to_string())?;
            ensure(hw == m.is_extremal(i).unwrap(), || format!("{}: vector {i}", m.hw_label()))?;
        }
    }
    for l in 0..=3u32 {
        let m = &modules[l as usize];
        for k in 0..m.dim() {
            let weight = l as i64 - k as i64;
            let v = m.basis_vector(k);
            let vv: Vec<Q> = v.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect();
            let g = generated_dim(m, &vv).unwrap() as u64;
            let law = so3_law(l, weight).unwrap();
            ensure(g == law, || format!("l={l} m={weight}: {g} vs {law}"))?;
        }
    }
    // Riesz and eigenvalue identities on the top vector of each module.
    for m in &modules[1..] {
        let alg = m.algebra().clone();
        let rs = RootSystem::new(alg.algebra()).unwrap();
        let top = (0..m.dim()).find(|&i| rs.normalize(m.weight(i)).unwrap() == *m.hw_label().hw()).unwrap();
        let v = m.basis_vector(top);
        let hv = h_vector(m, &v).unwrap();
        let norm = m.pairing(&v, &v);
        let ll = rs.inner(m.hw_label().hw(), m.hw_label().hw()).unwrap();
        let hvv = m.represent(&hv).mul_vec(&v);
        ensure(hvv == v.iter().map(|x| x * &norm * &ll).collect::<Vec<_>>(), || "H_v v".into())?;
        let kappa = |x: &[Q], y: &[Q]| -> Q { x.iter().zip(alg.gram().mul_vec(y)).map(|(a, b)| a * b).sum() };
        for &h in alg.cartan_indices() {
            let mut e = vec![Q::zero(); alg.dim()];
            e[h] = Q::one();
            let lambda_h = m.pairing(&v, &m.action(h).mul_vec(&v)) / &norm;
            ensure(kappa(&hv, &e) / &norm == lambda_h, || "Riesz".into())?;
        }
        ensure(kappa(&hv, &hv) == &norm * &norm * &ll, || "κ(H_v,H_v)".into())?;
    }
    for n in 2..=4 {
        let l = realize(AlgebraId::su(n).unwrap()).unwrap();
        let e = &l.basis()[l.theta_index()];
        ensure(l.kappa(e, e).is_zero(), || format!("su({n}): κ(e_θ,e_θ) != 0"))?;
    }
    Ok("criterion exact on su(2) D^0..D^3 and su(3) adjoint; so3 law for l <= 3".into())
}

/// 10. The symplectic coefficient is surfaced.
fn c10() -> Outcome {
    let t = tensor_square_table(AlgebraId::sp(4).unwrap(), Part::Sym).unwrap();
    let c = t.get("wedge2bV").ok_or("missing wedge2bV")?;
    ensure(c.dim == 5 && c.note.as_deref().is_some_and(|n| n.contains("1/8")), || format!("{c:?}"))?;
    let mut d = dims(&t);
    d.sort();
    ensure(d == vec![1, 5, 14, 35] && t.dim_sum() == 55, || format!("{d:?}"))?;
    Ok("55 = 35+14+5+1, note present".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 unitary tables", c1),
        ("2 oracle equivalence", c2),
        ("3 split-Casimir spectra", c3),
        ("4 projector ranks", c4),
        ("5 exceptional table", c5),
        ("6 G2 worked example", c6),
        ("7 Schur identities", c7),
        ("8 harmonic machinery", c8),
        ("9 highest weight vectors", c9),
        ("10 symplectic note", c10),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match result {
            Ok(msg) => println!("PASS criterion {name} ({:.2}s): {msg}", t.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.2}s): {msg}", t.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
