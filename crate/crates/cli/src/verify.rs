//! Verification suites. Each suite returns independent checks; `all` runs
//! them on separate threads and the report sorts by check name.

use std::collections::BTreeSet;

use adjsq::casdecomp::{characteristic_poly, schur_sum_identity, Part};
use adjsq::hwv::{generated_dim, is_highest_weight_vector, so3_law, RealizedModule};
use adjsq::linalg::Matrix;
use adjsq::matrep::{
    generated_in_part, harmonic_decompose, harmonic_ops, highest_weight_vectors, minimal_roots, projector,
    realize, split_casimir_matrix, verify_annihilation,
};
use adjsq::rational::{binomial, fmt_q, q};
use adjsq::{AlgebraId, Family, Q};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::Check;
use crate::{lookup_table, Caps, CliError, Suite};

type Checks = Result<Vec<Check>, CliError>;

const SUITES: [Suite; 5] = [Suite::Casimir, Suite::Projectors, Suite::Harmonic, Suite::Hwv, Suite::Schur];

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Casimir => "casimir",
        Suite::Projectors => "projectors",
        Suite::Harmonic => "harmonic",
        Suite::Hwv => "hwv",
        Suite::Schur => "schur",
        Suite::All => "all",
    }
}

pub fn run_suites(
    suite: Suite,
    filter: Option<AlgebraId>,
    n: Option<u32>,
    caps: Caps,
) -> Result<(Vec<String>, Vec<Check>), CliError> {
    let chosen: Vec<Suite> = if suite == Suite::All {
        SUITES.iter().copied().filter(|&s| applies(s, filter)).collect()
    } else {
        if !applies(suite, filter) {
            let what = filter.map_or("this filter".into(), |id| id.name());
            return Err(CliError::Usage(format!("suite {} does not apply to {what}", suite_name(suite))));
        }
        vec![suite]
    };
    let results: Vec<Checks> = std::thread::scope(|scope| {
        let handles: Vec<_> = chosen.iter().map(|&s| scope.spawn(move || run_one(s, filter, n, caps))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    if checks.is_empty() {
        return Err(CliError::Usage("no checks selected".into()));
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok((chosen.iter().map(|&s| suite_name(s).to_string()).collect(), checks))
}

fn applies(s: Suite, filter: Option<AlgebraId>) -> bool {
    let Some(id) = filter else { return true };
    match s {
        Suite::Casimir | Suite::Projectors => realize(id).is_ok(),
        Suite::Harmonic => id.family() != Family::A && matches!(id.n(), Some(5..=8)) && id.family() != Family::C,
        Suite::Hwv => realize(id).is_ok(),
        Suite::Schur => false,
        Suite::All => true,
    }
}

fn run_one(s: Suite, filter: Option<AlgebraId>, n: Option<u32>, caps: Caps) -> Checks {
    match s {
        Suite::Casimir => casimir(&targets(filter, &[("su", 2), ("su", 3), ("su", 4), ("so", 5), ("so", 6), ("sp", 4)]), caps),
        Suite::Projectors => projectors(&targets(filter, &[("su", 3), ("su", 4), ("so", 5), ("sp", 4)]), caps),
        Suite::Harmonic => harmonic(filter.and_then(|id| id.n()).map_or(vec![5, 6], |n| vec![n as usize])),
        Suite::Hwv => hwv(filter),
        Suite::Schur => Ok(schur(n)),
        Suite::All => unreachable!("expanded by run_suites"),
    }
}

fn targets(filter: Option<AlgebraId>, defaults: &[(&str, u32)]) -> Vec<AlgebraId> {
    match filter {
        Some(id) => vec![id],
        None => defaults.iter().map(|&(f, n)| AlgebraId::parse(f, Some(n)).expect("default algebra")).collect(),
    }
}

fn check_size(id: AlgebraId, part: Part, caps: Caps) -> Result<(), CliError> {
    let d = part.parent_dim(id.dim() as u64);
    if d > caps.matrix {
        return Err(CliError::Cap(format!("{id} {part} operator is {d}x{d}, above cap {}; pass --max-dim", caps.matrix)));
    }
    Ok(())
}

fn factors(roots: &[Q]) -> String {
    roots
        .iter()
        .map(|r| {
            if r.is_zero() {
                "x".to_string()
            } else if *r < Q::zero() {
                format!("(x+{})", fmt_q(&-r))
            } else {
                format!("(x-{})", fmt_q(r))
            }
        })
        .collect()
}

fn sorted_set(xs: impl IntoIterator<Item = Q>) -> String {
    let set: BTreeSet<Q> = xs.into_iter().collect();
    let v: Vec<String> = set.iter().map(fmt_q).collect();
    format!("{{{}}}", v.join(", "))
}

fn casimir(ids: &[AlgebraId], caps: Caps) -> Checks {
    let mut out = Vec::new();
    for &id in ids {
        let l = realize(id)?;
        for part in [Part::Sym, Part::Alt] {
            check_size(id, part, caps)?;
            let op = split_casimir_matrix(&l, part);
            let polys = characteristic_poly(id, part)?;
            let r = verify_annihilation(&op, polys.minimal.roots());
            out.push(Check::eq(format!("casimir/{id}/{part}/annihilated by {}", factors(polys.minimal.roots())), "0", fmt_q(&r)));
            let found = minimal_roots(&op, polys.generic.roots())?;
            let table = lookup_table(id, part)?.split_eigs();
            out.push(Check::eq(format!("casimir/{id}/{part}/minimal roots"), sorted_set(table), sorted_set(found)));
        }
    }
    Ok(out)
}

fn dims_list(mut v: Vec<u64>) -> String {
    v.sort_unstable();
    format!("{v:?}")
}

fn projectors(ids: &[AlgebraId], caps: Caps) -> Checks {
    let mut out = Vec::new();
    for &id in ids {
        let l = realize(id)?;
        for part in [Part::Sym, Part::Alt] {
            check_size(id, part, caps)?;
            let op = split_casimir_matrix(&l, part);
            let table = lookup_table(id, part)?;
            let eigs: Vec<Q> = table.split_eigs();
            let ps = eigs.iter().enumerate().map(|(r, _)| projector(&op, &eigs, r)).collect::<Result<Vec<_>, _>>()?;
            let mut sum = Matrix::zeros(op.dim, op.dim);
            let mut orthogonal = true;
            for (r, p) in ps.iter().enumerate() {
                sum = &sum + p;
                orthogonal &= ps.iter().enumerate().all(|(s, p2)| r == s || p.matmul(p2).is_zero());
            }
            out.push(Check::eq(format!("projectors/{id}/{part}/orthogonal"), true, orthogonal));
            out.push(Check::eq(format!("projectors/{id}/{part}/sum is identity"), true, sum == Matrix::identity(op.dim)));
            let mut pieces = Vec::new();
            for p in &ps {
                for (_, v) in highest_weight_vectors(&l, part, p)? {
                    pieces.push(generated_in_part(&l, part, &v) as u64);
                }
            }
            let want = table.constituents.iter().map(|c| c.dim).collect();
            out.push(Check::eq(format!("projectors/{id}/{part}/irreducible ranks"), dims_list(want), dims_list(pieces)));
        }
    }
    Ok(out)
}

fn harmonic(ns: Vec<usize>) -> Checks {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in ns {
        let ops = harmonic_ops(n)?;
        let name = |s: &str| format!("harmonic/so({n})/{s}");
        let nn = Q::from_integer(n.into());
        let right = ops.b13.matmul(&ops.b13_dual) == Matrix::identity(ops.s2v_dim()).scale(&nn);
        out.push(Check::eq(name("contraction after dual is n"), true, right));
        out.push(Check::eq(name("p13 idempotent"), true, ops.p13.matmul(&ops.p13) == ops.p13));
        let rank = (&Matrix::identity(ops.s2w_dim()) - &ops.p13).rank();
        out.push(Check::eq(name("harmonic rank"), n * (n - 3) * (n * n + n + 2) / 8, rank));
        let mut ok = 0;
        let trials = 25;
        for _ in 0..trials {
            let a: Vec<Q> =
                (0..ops.s2w_dim()).map(|_| q(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
            let [h, m, low] = harmonic_decompose(&ops, &a);
            let back: Vec<Q> = (0..a.len()).map(|i| &h[i] + &m[i] + &low[i]).collect();
            if back == a && ops.b13.mul_vec(&h).iter().all(Zero::is_zero) {
                ok += 1;
            }
        }
        out.push(Check::eq(name("random tensors reassemble"), trials, ok));
        let wedge_ok = ops.wedge4_span().iter().all(|w| ops.b13.mul_vec(w).iter().all(Zero::is_zero));
        out.push(Check::eq(name("wedge4 is harmonic"), true, wedge_ok));
    }
    Ok(out)
}

fn hwv(filter: Option<AlgebraId>) -> Checks {
    let mut out = Vec::new();
    for l in 0..=3u32 {
        let m = RealizedModule::su2_spin(l)?;
        for k in 0..m.dim() {
            let weight = l as i64 - k as i64;
            let v = m.basis_vector(k);
            let vv: Vec<Q> = v.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect();
            out.push(Check::eq(
                format!("hwv/su(2)/l={l}/m={weight:+}/generated dim"),
                so3_law(l, weight)?,
                generated_dim(&m, &vv)?,
            ));
        }
    }
    let ids = match filter {
        Some(id) => vec![id],
        None => vec![AlgebraId::su(3)?],
    };
    for id in ids {
        let m = RealizedModule::adjoint(id)?;
        let mut agree = 0;
        for i in 0..m.dim() {
            if is_highest_weight_vector(&m, &m.basis_vector(i))? == m.is_extremal(i)? {
                agree += 1;
            }
        }
        out.push(Check::eq(format!("hwv/{id}/adjoint/criterion matches extremality"), m.dim(), agree));
    }
    Ok(out)
}

fn schur(n: Option<u32>) -> Vec<Check> {
    let ns: Vec<u32> = n.map_or((1..=4).collect(), |n| vec![n]);
    let mut out = Vec::new();
    for n in ns {
        for k in 1..=4u32 {
            let s = schur_sum_identity(n, k);
            out.push(Check::eq(format!("schur/n={n}/k={k}/sym"), &s.sym_rhs, &s.sym_lhs));
            out.push(Check::eq(format!("schur/n={n}/k={k}/alt"), &s.alt_rhs, &s.alt_lhs));
            out.push(Check::eq(format!("schur/n={n}/k={k}/virtual"), &s.virt_rhs, &s.virt_lhs));
        }
        let v = binomial(n as i64 + 2, 3) - binomial(n as i64, 3);
        out.push(Check::eq(format!("schur/n={n}/k=3/virtual is square"), &v * &v, schur_sum_identity(n, 3).virt_lhs));
    }
    out
}
