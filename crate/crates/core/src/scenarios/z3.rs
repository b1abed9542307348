use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{oracle_curve_dim, render_tuple, z3_data, Check, ScenarioError, VerificationReport, Z3Data, Z3_RELATIONS};
use crate::action::CyclicAction;
use crate::arith::{rat, Cyc3, Rational};
use crate::poly::{Homogeneity, Polynomial};
use crate::quotient::GradedPresentation;

/// Which parts of the ℤ/3 suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Identities with α, β, γ kept as variables.
    Symbolic,
    /// Dimension checks at specialized parameter values.
    Numeric,
    Both,
}

impl Mode {
    fn symbolic(self) -> bool {
        self != Mode::Numeric
    }

    fn numeric(self) -> bool {
        self != Mode::Symbolic
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric => "numeric",
            Mode::Both => "both",
        })
    }
}

/// Values of (α, β, γ).
pub type Params = [Rational; 3];

/// Table placement `(degree, weight)` of each relation.
const PLACEMENT: [(u32, u32); 10] = [(4, 0), (4, 1), (4, 2), (5, 0), (5, 1), (5, 2), (6, 0), (6, 0), (6, 1), (6, 2)];

const SYZYGIES: [(&str, &str); 3] = [
    ("x2*g0 - y0*f2 - y1*f1 + y2*f0", "x2*g0 - y0*f2 - y1*f1 + y2*f0 = 0"),
    ("x2*g1 - y0*f0 + y2*f1 + h0", "x2*g1 - y0*f0 + y2*f1 + h0 = 0"),
    ("x2*g2 - y0*f1 + y1*f0 - y2*f2", "x2*g2 - y0*f1 + y1*f0 - y2*f2 = 0"),
];

/// The parameter samples for numeric checks: the given triple, (0,0,0),
/// (1,1,1) and a triple of integers in [−20, 20] drawn from `seed`, without
/// repeats.
pub fn z3_samples(params: &Params, seed: u64) -> Vec<Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Params = std::array::from_fn(|_| rat(rng.random_range(-20..=20), 1));
    let mut out: Vec<Params> = Vec::new();
    for p in [params.clone(), [rat(0, 1), rat(0, 1), rat(0, 1)], [rat(1, 1), rat(1, 1), rat(1, 1)], random] {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn param_map(p: &Params) -> BTreeMap<String, Rational> {
    ["alpha", "beta", "gamma"].iter().zip(p).map(|(n, v)| (n.to_string(), v.clone())).collect()
}

/// Expands a signed sum of `monomial*relation` terms written in the
/// relation names, e.g. `x2*g0 - y0*f2`.
fn expand_combination(data: &Z3Data, text: &str) -> Result<Polynomial<Rational>, ScenarioError> {
    let desc = data.presentation.descriptor();
    let mut acc = Polynomial::zero(desc);
    for chunk in text.replace(" - ", " + -").split(" + ") {
        let (neg, chunk) = match chunk.strip_prefix('-') {
            Some(c) => (true, c),
            None => (false, chunk),
        };
        let (factor, rel) = chunk.trim().rsplit_once('*').unwrap_or(("1", chunk.trim()));
        let term = &data.parse(factor)? * data.relation(rel);
        acc = if neg { &acc - &term } else { &acc + &term };
    }
    Ok(acc)
}

pub fn run_z3(params: &Params, mode: Mode, max_degree: u32, seed: u64) -> Result<VerificationReport, ScenarioError> {
    let start = Instant::now();
    let data = z3_data()?;
    let samples = z3_samples(params, seed);
    let mut config = BTreeMap::new();
    config.insert("max_degree".into(), max_degree.to_string());
    config.insert("mode".into(), mode.to_string());
    config.insert("params".into(), render_tuple(params.iter()));
    config.insert("seed".into(), seed.to_string());
    config.insert("bound".into(), format!("dimension checks cover degrees <= {max_degree} only"));
    config.insert("g2".into(), "g2 = y0*z2 - y1*z1 + x2^3*y2 (weight-homogeneous form)".into());
    if mode.numeric() {
        config.insert("samples".into(), samples.iter().map(|s| render_tuple(s.iter())).collect::<Vec<_>>().join(" "));
    } else {
        config.insert("skipped".into(), "Hilbert-table, basis and injectivity checks need numeric parameters".into());
    }
    let mut report = VerificationReport::new("z3", config);

    placement_checks(&data, &mut report)?;
    if mode.symbolic() {
        symbolic_checks(&data, &mut report)?;
    }
    if mode.numeric() {
        let per_sample: Vec<Result<SampleResult, ScenarioError>> = samples
            .par_iter()
            .enumerate()
            .map(|(k, s)| numeric_checks(&data, k, s, max_degree))
            .collect();
        let mut tables = Vec::new();
        for r in per_sample {
            let (checks, table) = r?;
            checks.into_iter().for_each(|c| report.push(c));
            tables.push(table);
        }
        let agree = tables.windows(2).all(|w| w[0] == w[1]);
        report.push(Check::new(
            "hilbert-samples-agree",
            format!("Hilbert tables agree across all {} parameter samples", tables.len()),
            "dimensions of R^m_w do not depend on (alpha, beta, gamma)",
            true,
            agree,
        ));
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn placement_checks(data: &Z3Data, report: &mut VerificationReport) -> Result<(), ScenarioError> {
    let desc3 = data.presentation.descriptor().with_field_order(3)?;
    let action = CyclicAction::<Cyc3>::new(&desc3)?;
    for (name, &(d, w)) in Z3_RELATIONS.iter().zip(&PLACEMENT) {
        let rel = data.relation(name);
        let actual = match rel.homogeneity() {
            Homogeneity::Homogeneous { degree, weight } => render_tuple([degree, weight]),
            other => format!("{other:?}").to_lowercase(),
        };
        report.push(Check::new(
            format!("placement-{name}"),
            format!("{name} = {rel} is bi-homogeneous of (degree, weight) ({d},{w})"),
            format!("{name} lies in R^{d}_{w}"),
            render_tuple([d, w]),
            actual,
        ));
        let lifted = rel.map_coefficients(&desc3, |c| Cyc3::from_rational(c.clone()))?;
        let weight = action.weight_of(&lifted)?.map_or("mixed".to_string(), |w| w.to_string());
        report.push(Check::new(
            format!("action-weight-{name}"),
            format!("the generator of Z/3 scales {name} by z3^{w}"),
            format!("{name} is a Z/3 eigenvector of weight {w}"),
            w,
            weight,
        ));
    }
    let displayed = data.parse("y0*z1 - y2*z2 + y2*x2^3")?;
    let homog = match displayed.homogeneity() {
        Homogeneity::Homogeneous { .. } => "homogeneous",
        _ => "inhomogeneous",
    };
    report.push(Check::new(
        "g2-alternative-form",
        "the alternative g2 = y0*z1 - y2*z2 + y2*x2^3 mixes weights, so g2 = y0*z2 - y1*z1 + x2^3*y2 is used",
        "g2 = y0*z2 - y1*z1 mod x2 in R^5_2",
        "inhomogeneous",
        homog,
    ));
    Ok(())
}

fn symbolic_checks(data: &Z3Data, report: &mut VerificationReport) -> Result<(), ScenarioError> {
    for (k, (expr, claim)) in SYZYGIES.iter().enumerate() {
        let value = expand_combination(data, expr)?;
        report.push(Check::new(
            format!("syzygy-{}", k + 1),
            format!("{expr} expands to zero with alpha, beta, gamma symbolic"),
            *claim,
            "0",
            value,
        ));
    }
    let small = data.presentation.restrict(&["f0", "f1", "f2", "h0"])?;
    let x2sq = data.parse("x2^2")?;
    for name in ["H0", "H1", "H2"] {
        let target = &x2sq * data.relation(name);
        let cert = small.reduces_to_zero(&target)?;
        let (verified, description) = match &cert {
            Some(c) => (
                c.recombine(&small) == target,
                format!("x2^2*{name} = {}", c.render(&small)),
            ),
            None => (false, format!("x2^2*{name} is not in (f0, f1, f2, h0) in degree 8")),
        };
        report.push(Check::new(
            format!("membership-x2sq-{name}"),
            description,
            format!("x2^2*{name} lies in the ideal (f0, f1, f2, h0)"),
            "certificate verified",
            if verified { "certificate verified" } else { "no certificate" },
        ));
    }
    Ok(())
}

/// Checks for one parameter sample and its dimension table.
type SampleResult = (Vec<Check>, Vec<Vec<u64>>);

fn numeric_checks(
    data: &Z3Data,
    k: usize,
    sample: &Params,
    max_degree: u32,
) -> Result<SampleResult, ScenarioError> {
    let pres: GradedPresentation<Rational> = data.presentation.specialize(&param_map(sample))?;
    let at = render_tuple(sample.iter());
    let mut checks = Vec::new();
    let pieces = pres.pieces(max_degree.max(6))?;
    let table: Vec<Vec<u64>> = pieces.iter().map(|row| row.iter().map(|p| p.dim() as u64).collect()).collect();
    for m in 1..=max_degree {
        checks.push(Check::new(
            format!("hilbert-s{k}-m{m}"),
            format!("dim R^{m}_w for w = 0,1,2 at (alpha,beta,gamma) = {at}"),
            format!("h0(C, {m}M + iL) per torsion weight i"),
            render_tuple((0..3).map(|w| oracle_curve_dim(m, w))),
            render_tuple(table[m as usize].iter()),
        ));
        let total = match m {
            1 => 1,
            2 => 4,
            _ => 3 * (m as u64 - 1),
        };
        checks.push(Check::new(
            format!("hilbert-total-s{k}-m{m}"),
            format!("dim R^{m} summed over weights at {at}"),
            format!("h0(C~, {m}M~) = 3({m}-1) for m >= 3, with 1 and 4 for m = 1, 2"),
            total,
            table[m as usize].iter().sum::<u64>(),
        ));
    }
    for row in &data.table {
        let piece = &pieces[row.degree as usize][row.weight as usize];
        let listed: Vec<Polynomial<Rational>> = row.monomials.clone();
        let rank = piece.rank_of(&listed).map_or("outside the piece".to_string(), |r| r.to_string());
        let expected_dim = row.monomials.len() - row.listed_relations;
        let names: Vec<String> = row.monomials.iter().map(|p| p.to_string()).collect();
        checks.push(Check::new(
            format!("table-basis-s{k}-m{}-w{}", row.degree, row.weight),
            format!(
                "listed monomials {{{}}} span R^{}_{} at {at}",
                names.join(", "),
                row.degree,
                row.weight
            ),
            format!("listed monomials of R^{}_{} with {} listed relations", row.degree, row.weight, row.listed_relations),
            format!("rank {expected_dim}, dim {expected_dim}"),
            format!("rank {rank}, dim {}", piece.dim()),
        ));
    }
    let kernel = pres.multiplication_kernel_degrees("x2", max_degree)?;
    let actual = if kernel.is_empty() {
        "injective".to_string()
    } else {
        format!("kernel at {}", kernel.iter().map(|(m, w)| format!("({m},{w})")).collect::<Vec<_>>().join(" "))
    };
    checks.push(Check::new(
        format!("x2-injective-s{k}"),
        format!("multiplication by x2 is injective R^m_w -> R^(m+1)_(w+2) for m + 1 <= {max_degree} at {at}"),
        "x2 is not a zero-divisor",
        "injective",
        actual,
    ));
    let mut table = table;
    table.truncate(max_degree as usize + 1);
    Ok((checks, table))
}

impl Z3Data {
    /// Presentation with (α, β, γ) set to `p`.
    pub fn specialize(&self, p: &Params) -> Result<GradedPresentation<Rational>, ScenarioError> {
        Ok(self.presentation.specialize(&param_map(p))?)
    }
}

