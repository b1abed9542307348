//! Acceptance criteria, one line of output per criterion.
//!
//! Expected values come from closed formulas or brute-force counts written
//! here, independent of the library's own oracles.

use std::collections::BTreeMap;
use std::process::ExitCode;

use godeaux_core::action::CyclicAction;
use godeaux_core::arith::{rat, Cyc5, Field, Rational};
use godeaux_core::linalg::{kernel_basis, Matrix};
use godeaux_core::poly::{Monomial, Polynomial, RingDescriptor, Substitution};
use godeaux_core::scenarios::{
    run_sc, run_z3, run_z4, run_z5, sc_data, sc_predicate, z3_data, Mode, VerificationReport,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const D: u32 = 12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn actual<'a>(r: &'a VerificationReport, id: &str) -> Result<&'a str, String> {
    r.check(id).map(|c| c.actual.as_str()).ok_or_else(|| format!("report {} lacks check {id}", r.scenario))
}

fn all_pass(r: &VerificationReport) -> Result<(), String> {
    r.validate()?;
    let bad: Vec<String> = r.failures().map(|c| format!("{}: expected {} got {}", c.id, c.expected, c.actual)).collect();
    ensure(bad.is_empty(), || bad.join("; "))
}

fn tuple(xs: &[u64]) -> String {
    format!("({})", xs.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
}

fn binom2(m: u32) -> u64 {
    (m as u64) * (m as u64).saturating_sub(1) / 2
}

fn zero_params() -> [Rational; 3] {
    [rat(0, 1), rat(0, 1), rat(0, 1)]
}

fn criterion_1() -> Outcome {
    let data = z3_data().map_err(|e| e.to_string())?;
    let g2 = data.parse("y0*z2 - y1*z1 + x2^3*y2").map_err(|e| e.to_string())?;
    ensure(data.relation("g2") == &g2, || format!("g2 is {}", data.relation("g2")))?;
    let v = |t: &str| data.parse(t).unwrap();
    let r = |n: &str| data.relation(n).clone();
    let identities = [
        &(&(&(&v("x2") * &r("g0")) - &(&v("y0") * &r("f2"))) - &(&v("y1") * &r("f1"))) + &(&v("y2") * &r("f0")),
        &(&(&(&v("x2") * &r("g1")) - &(&v("y0") * &r("f0"))) + &(&v("y2") * &r("f1"))) + &r("h0"),
        &(&(&(&v("x2") * &r("g2")) - &(&v("y0") * &r("f1"))) + &(&v("y1") * &r("f0"))) - &(&v("y2") * &r("f2")),
    ];
    for (k, p) in identities.iter().enumerate() {
        ensure(p.is_zero(), || format!("syzygy {} expands to {p}", k + 1))?;
    }
    let report = run_z3(&zero_params(), Mode::Symbolic, D, 42).map_err(|e| e.to_string())?;
    for k in 1..=3 {
        ensure(actual(&report, &format!("syzygy-{k}"))? == "0", || format!("report syzygy-{k} nonzero"))?;
    }
    Ok("three syzygies vanish with alpha, beta, gamma symbolic".into())
}

fn criterion_2() -> Outcome {
    let data = z3_data().map_err(|e| e.to_string())?;
    let ideal = data.presentation.restrict(&["f0", "f1", "f2", "h0"]).map_err(|e| e.to_string())?;
    let x2sq = data.parse("x2^2").unwrap();
    let mut sizes = Vec::new();
    for name in ["H0", "H1", "H2"] {
        let target = &x2sq * data.relation(name);
        let cert = ideal
            .reduces_to_zero(&target)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("x2^2*{name} not in the ideal"))?;
        // Recombine by hand rather than through the certificate helper.
        let mut sum = Polynomial::zero(data.presentation.descriptor());
        for (i, c) in &cert.cofactors {
            sum = &sum + &(c * &ideal.relations()[*i].poly);
        }
        ensure(sum == target, || format!("certificate for {name} recombines to {sum}"))?;
        sizes.push(cert.cofactors.len());
    }
    let report = run_z3(&zero_params(), Mode::Symbolic, D, 42).map_err(|e| e.to_string())?;
    all_pass(&report)?;
    Ok(format!("certificates verified, cofactor counts {sizes:?}"))
}

/// `h0(C, mM + iL)` on the ℤ/3 curve.
fn curve_dims(m: u32) -> [u64; 3] {
    match m {
        0 => [1, 0, 0],
        1 => [0, 0, 1],
        2 => [1, 2, 1],
        _ => [m as u64 - 1; 3],
    }
}

fn criterion_3() -> Outcome {
    let report = run_z3(&zero_params(), Mode::Numeric, D, 42).map_err(|e| e.to_string())?;
    let samples = report.config.get("samples").cloned().unwrap_or_default();
    ensure(samples.starts_with("(0,0,0) (1,1,1) "), || format!("samples are {samples}"))?;
    let count = samples.split(' ').count();
    ensure(count >= 3, || format!("only {count} samples"))?;
    for k in 0..count {
        for m in 1..=D {
            let want = curve_dims(m);
            let got = actual(&report, &format!("hilbert-s{k}-m{m}"))?;
            ensure(got == tuple(&want), || format!("sample {k} m={m}: {got}"))?;
            let total: u64 = want.iter().sum();
            let closed = match m {
                1 => 1,
                2 => 4,
                _ => 3 * (m as u64 - 1),
            };
            ensure(total == closed, || format!("table total at m={m}"))?;
            ensure(actual(&report, &format!("hilbert-total-s{k}-m{m}"))? == closed.to_string(), || {
                format!("sample {k} total at m={m}")
            })?;
        }
    }
    ensure(actual(&report, "hilbert-samples-agree")? == "true", || "samples disagree".into())?;
    Ok(format!("m = 1..{D} at samples {samples}"))
}

fn criterion_4() -> Outcome {
    let report = run_z3(&zero_params(), Mode::Numeric, D, 42).map_err(|e| e.to_string())?;
    let data = z3_data().map_err(|e| e.to_string())?;
    let count = report.config["samples"].split(' ').count();
    for k in 0..count {
        for row in &data.table {
            let dim = row.monomials.len() - row.listed_relations;
            ensure(dim as u64 == curve_dims(row.degree)[row.weight as usize], || {
                format!("listed table for ({},{}) has {dim} basis elements", row.degree, row.weight)
            })?;
            let id = format!("table-basis-s{k}-m{}-w{}", row.degree, row.weight);
            let want = format!("rank {dim}, dim {dim}");
            ensure(actual(&report, &id)? == want, || format!("{id}: {}", actual(&report, &id).unwrap()))?;
        }
        let id = format!("x2-injective-s{k}");
        ensure(actual(&report, &id)? == "injective", || format!("{id}: {}", actual(&report, &id).unwrap()))?;
    }
    Ok(format!("{} table pieces are bases; x2 injective up to m={D}", data.table.len()))
}

/// Monomials in x1..x4 (weights 1..4 mod 5) of degree m and weight 0.
fn z5_count(m: u32) -> u64 {
    let mut n = 0;
    for a in 0..=m {
        for b in 0..=m - a {
            for c in 0..=m - a - b {
                let d = m - a - b - c;
                n += (a + 2 * b + 3 * c + 4 * d).is_multiple_of(5) as u64;
            }
        }
    }
    n
}

fn criterion_5() -> Outcome {
    let report = run_z5(D).map_err(|e| e.to_string())?;
    all_pass(&report)?;
    for m in 0..=D {
        let want = match m {
            0 => 1,
            1 => 0,
            _ => 1 + binom2(m),
        };
        let counted = z5_count(m) - if m >= 5 { z5_count(m - 5) } else { 0 };
        ensure(counted == want, || format!("brute-force count at m={m} is {counted}"))?;
        let got = actual(&report, &format!("invariant-dim-m{m}"))?;
        ensure(got == format!("{want} {want}"), || format!("m={m}: {got}"))?;
    }
    ensure(actual(&report, "q-invariant")? == "fixed", || "q moved".into())?;
    ensure(actual(&report, "triple-points")? == "10", || "triple points".into())?;
    ensure(actual(&report, "no-quadruple-points")? == "0", || "quadruple points".into())?;
    Ok(format!("q invariant, 10 triple points, fixed points off q, dims to m={D}"))
}

/// Monomials of ℚ[x1,x2,x3,y1,y3] (degrees 1,1,1,2,2; weights 1,2,3,1,3 mod 4)
/// by degree and weight.
fn z4_ambient(max: u32) -> Vec<[i64; 4]> {
    let mut t = vec![[0i64; 4]; max as usize + 1];
    for a in 0..=max {
        for b in 0..=max - a {
            for c in 0..=max - a - b {
                let rest = max - a - b - c;
                for d in 0..=rest / 2 {
                    for e in 0..=(rest - 2 * d) / 2 {
                        let m = a + b + c + 2 * d + 2 * e;
                        let w = (a + 2 * b + 3 * c + d + 3 * e) % 4;
                        t[m as usize][w as usize] += 1;
                    }
                }
            }
        }
    }
    t
}

fn criterion_6() -> Outcome {
    let amb = z4_ambient(D);
    let at = |m: i64, w: i64| if m < 0 { 0 } else { amb[m as usize][w.rem_euclid(4) as usize] };
    let seeds = [42u64, 2024];
    let mut tables = Vec::new();
    for seed in seeds {
        let report = run_z4(seed, D).map_err(|e| e.to_string())?;
        all_pass(&report)?;
        ensure(actual(&report, "koszul")? == "true", || format!("koszul fails for seed {seed}"))?;
        let mut table = Vec::new();
        for m in 0..=D {
            let m_ = m as i64;
            // Complete intersection of weights 0 and 2 in degree 4.
            let ci: Vec<u64> =
                (0..4).map(|w| (at(m_, w) - at(m_ - 4, w) - at(m_ - 4, w - 2) + at(m_ - 8, w - 2)) as u64).collect();
            let closed: Vec<u64> = match m {
                0 => vec![1, 0, 0, 0],
                1 => vec![0, 1, 1, 1],
                _ => vec![1 + binom2(m); 4],
            };
            ensure(ci == closed, || format!("series count at m={m}: {ci:?}"))?;
            let got = actual(&report, &format!("dims-m{m}"))?.to_string();
            ensure(got == tuple(&closed), || format!("seed {seed} m={m}: {got}"))?;
            table.push(got);
        }
        tables.push(table);
    }
    ensure(tables[0] == tables[1], || "tables differ across seeds".into())?;
    Ok(format!("seeds {seeds:?}: complete intersection, identical tables to m={D}"))
}

fn criterion_7() -> Outcome {
    let report = run_sc(D).map_err(|e| e.to_string())?;
    all_pass(&report)?;
    for m in 0..=D {
        let want = match m {
            0 => 1,
            1 => 0,
            _ => 1 + binom2(m),
        };
        let got = actual(&report, &format!("v-dim-m{m}"))?;
        ensure(got == want.to_string(), || format!("dim V_{m} = {got}"))?;
    }
    let expect = [
        ("generator-census", "{2:2,3:4,4:4,5:3}"),
        ("relation-census", "{6:6,7:12,8:18,9:12,10:6}"),
        ("relation-census-high", "{11:0,12:0}"),
        ("relation-total", "54"),
        ("listed-generate", "none"),
    ];
    for (id, want) in expect {
        ensure(actual(&report, id)? == want, || format!("{id}: {}", actual(&report, id).unwrap()))?;
    }
    let members = report.checks.iter().filter(|c| c.id.starts_with("listed-member-") && c.actual == "true").count();
    ensure(members == 13, || format!("{members} of 13 listed generators are members"))?;
    Ok("V_m dims, generators {2:2,3:4,4:4,5:3}, 54 relations in degrees 6..10".into())
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

fn small_cyc5() -> impl Strategy<Value = Cyc5> {
    prop::collection::vec(small_rational(), 4).prop_map(Cyc5::from_coeffs)
}

fn poly_in(desc: std::sync::Arc<RingDescriptor>, degree: u32) -> impl Strategy<Value = Polynomial<Rational>> {
    let monos = godeaux_core::poly::enumerate_monomials(&desc, degree, None);
    prop::collection::vec(small_rational(), monos.len())
        .prop_map(move |cs| Polynomial::from_terms(&desc, monos.clone().into_iter().zip(cs)))
}

fn fail<T: std::fmt::Debug>(what: &str) -> impl Fn(proptest::test_runner::TestError<T>) -> String + '_ {
    move |e| format!("{what}: {e}")
}

fn criterion_8() -> Outcome {
    runner(64)
        .run(&(small_cyc5(), small_cyc5(), small_cyc5()), |(a, b, c)| {
            prop_assert_eq!((a.clone() + &b) * &c, a.clone() * &c + &(b.clone() * &c));
            prop_assert_eq!(a.clone() * &b, b.clone() * &a);
            if !a.is_zero() {
                prop_assert!((a.clone() * &a.inv().unwrap()).is_one());
            }
            Ok(())
        })
        .map_err(fail("cyclotomic field axioms"))?;

    let abc = RingDescriptor::new([("a", 1, 0), ("b", 1, 0), ("c", 1, 0)], 1, 1).unwrap();
    runner(24)
        .run(&(poly_in(abc.clone(), 2), poly_in(abc.clone(), 3), poly_in(abc.clone(), 1)), |(p, q, l)| {
            let images = vec![l.clone(), Polynomial::parse("a + 2*c", &abc).unwrap(), p.clone()];
            let mut s = Substitution::new(&abc, images).unwrap();
            let lhs = s.apply(&(&p * &q)).unwrap();
            let rhs = &s.apply(&p).unwrap() * &s.apply(&q).unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(fail("substitution homomorphism"))?;

    let z5 = RingDescriptor::new([("x1", 1, 1), ("x2", 1, 2), ("x3", 1, 3), ("x4", 1, 4)], 5, 5).unwrap();
    let action = CyclicAction::<Cyc5>::new(&z5).map_err(|e| e.to_string())?;
    let lin = |desc: std::sync::Arc<RingDescriptor>| {
        prop::collection::vec(small_cyc5(), 4).prop_map(move |cs| {
            Polynomial::from_terms(&desc, cs.into_iter().enumerate().map(|(i, c)| (Monomial::var(4, i), c)))
        })
    };
    runner(24)
        .run(&(lin(z5.clone()), lin(z5.clone()), 0i64..5), |(p, q, k)| {
            let lhs = action.act(k, &(&p * &q)).unwrap();
            let rhs = &action.act(k, &p).unwrap() * &action.act(k, &q).unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(fail("group action homomorphism"))?;

    let matrix = (1usize..6, 1usize..7)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..4, c), r).prop_map(move |rows| (c, rows)));
    runner(64)
        .run(&matrix, |(cols, rows)| {
            let rows = rows.into_iter().map(|r| r.into_iter().map(|x| rat(x, 1)).collect()).collect();
            let m = Matrix::from_rows(cols, rows).unwrap();
            prop_assert_eq!(m.rank() + kernel_basis(&m).len(), cols);
            Ok(())
        })
        .map_err(fail("rank-nullity"))?;

    let data = sc_data().map_err(|e| e.to_string())?;
    let pred = sc_predicate(&data).map_err(|e| e.to_string())?;
    let spaces = pred.subspaces(6).map_err(|e| e.to_string())?;
    let combo = |m: usize| {
        let basis = spaces[m].basis_polynomials();
        prop::collection::vec(-5i64..6, basis.len()).prop_map(move |cs| {
            basis.iter().zip(cs).fold(Polynomial::zero(basis[0].descriptor()), |acc, (b, c)| &acc + &b.scale(&rat(c, 1)))
        })
    };
    runner(16)
        .run(&(combo(2), combo(3), combo(3)), |(p, q, r)| {
            prop_assert_eq!(spaces[5].contains(&(&p * &q)), Some(true));
            prop_assert_eq!(spaces[6].contains(&(&q * &r)), Some(true));
            Ok(())
        })
        .map_err(fail("closure of glued sections"))?;

    let json = |r: VerificationReport| {
        let mut r = r;
        r.timing_ms = 0;
        serde_json::to_string(&r).unwrap()
    };
    let params = [rat(1, 3), rat(-2, 1), rat(5, 7)];
    let a = json(run_z3(&params, Mode::Both, 8, 9).map_err(|e| e.to_string())?);
    let b = json(run_z3(&params, Mode::Both, 8, 9).map_err(|e| e.to_string())?);
    ensure(a == b, || "z3 report differs between runs".into())?;
    let a = json(run_z4(9, 8).map_err(|e| e.to_string())?);
    let b = json(run_z4(9, 8).map_err(|e| e.to_string())?);
    ensure(a == b, || "z4 report differs between runs".into())?;
    Ok("field axioms, homomorphisms, rank-nullity, closure, deterministic reports".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Z/3 syzygies", criterion_1),
        ("Z/3 H-relations", criterion_2),
        ("Z/3 Hilbert table", criterion_3),
        ("Z/3 table bases and x2 injectivity", criterion_4),
        ("Z/5 quintic", criterion_5),
        ("Z/4 complete intersection", criterion_6),
        ("glued subring presentation", criterion_7),
        ("property suites", criterion_8),
    ];
    let mut results = BTreeMap::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = f();
        match &outcome {
            Ok(detail) => println!("criterion {} {name}: pass ({detail})", k + 1),
            Err(why) => println!("criterion {} {name}: FAIL ({why})", k + 1),
        }
        results.insert(k + 1, outcome.is_ok());
    }
    let passed = results.values().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
