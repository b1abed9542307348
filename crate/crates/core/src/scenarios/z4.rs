use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{oracle_plurigenus, render_tuple, z4_descriptor, Check, ScenarioError, VerificationReport};
use crate::arith::{rat, Rational};
use crate::poly::{enumerate_monomials, Polynomial};
use crate::quotient::GradedPresentation;

/// Degree of both relations.
const RELATION_DEGREE: u32 = 4;
/// Torsion weights of `q₁` and `q₂`.
const RELATION_WEIGHTS: [u32; 2] = [0, 2];

/// A seeded complete intersection `(q₁, q₂)` in the ℤ/4 ring.
#[derive(Debug, Clone)]
pub struct Z4Sample {
    pub seed: u64,
    pub presentation: GradedPresentation<Rational>,
    /// Koszul outcome of each draw, in order; the last draw is the one kept.
    pub draws: Vec<bool>,
}

impl Z4Sample {
    pub fn koszul(&self) -> bool {
        *self.draws.last().expect("at least one draw")
    }
}

fn draw(rng: &mut ChaCha8Rng) -> Result<GradedPresentation<Rational>, ScenarioError> {
    let desc = z4_descriptor()?;
    let relations = RELATION_WEIGHTS.iter().enumerate().map(|(k, &w)| {
        let terms = enumerate_monomials(&desc, RELATION_DEGREE, Some(w))
            .into_iter()
            .map(|m| (m, rat(rng.random_range(-20..=20), 1)));
        (format!("q{}", k + 1), Polynomial::from_terms(&desc, terms))
    });
    let relations: Vec<_> = relations.collect();
    Ok(GradedPresentation::new(&desc, relations)?)
}

/// Draws integer coefficients in [−20, 20] from `seed`; a draw that fails
/// the Koszul check up to `max_degree` is replaced once.
pub fn z4_presentation(seed: u64, max_degree: u32) -> Result<Z4Sample, ScenarioError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::new();
    let mut presentation = draw(&mut rng)?;
    draws.push(koszul(&presentation, max_degree)?);
    if !draws[0] {
        presentation = draw(&mut rng)?;
        draws.push(koszul(&presentation, max_degree)?);
    }
    Ok(Z4Sample { seed, presentation, draws })
}

fn koszul(pres: &GradedPresentation<Rational>, max_degree: u32) -> Result<bool, ScenarioError> {
    Ok(pres.koszul_check(max_degree)?)
}

fn draws_note(sample: &Z4Sample) -> String {
    let outcome = |ok: &bool| if *ok { "koszul holds" } else { "koszul fails" };
    sample.draws.iter().enumerate().map(|(k, ok)| format!("draw {}: {}", k + 1, outcome(ok))).collect::<Vec<_>>().join("; ")
}

fn oracle_row(m: u32) -> Vec<u64> {
    match m {
        0 => vec![1, 0, 0, 0],
        1 => vec![0, 1, 1, 1],
        _ => vec![oracle_plurigenus(m); 4],
    }
}

pub fn run_z4(seed: u64, max_degree: u32) -> Result<VerificationReport, ScenarioError> {
    let start = Instant::now();
    let other_seed = seed.wrapping_add(1);
    let (first, second) = rayon::join(|| z4_presentation(seed, max_degree), || z4_presentation(other_seed, max_degree));
    let (first, second) = (first?, second?);
    let mut config = BTreeMap::new();
    config.insert("max_degree".into(), max_degree.to_string());
    config.insert("seed".into(), seed.to_string());
    config.insert("second_seed".into(), other_seed.to_string());
    config.insert("draws".into(), draws_note(&first));
    config.insert("second_draws".into(), draws_note(&second));
    config.insert("bound".into(), format!("dimension checks cover degrees <= {max_degree} only"));
    for r in first.presentation.relations() {
        config.insert(r.name.clone(), r.poly.to_string());
    }
    let mut report = VerificationReport::new("z4", config);

    report.push(Check::new(
        "koszul",
        format!("(q1, q2) from seed {seed} has the Hilbert function of a complete intersection up to degree {max_degree}"),
        "the canonical ring is a complete intersection of degree (4,4)",
        true,
        first.koszul(),
    ));
    let table = first.presentation.hilbert(max_degree)?;
    for m in 0..=max_degree {
        report.push(Check::new(
            format!("dims-m{m}"),
            format!("dim R^{m}_w for w = 0,1,2,3"),
            format!("h0(m K_X + i L) per torsion weight i, m = {m}"),
            render_tuple(oracle_row(m)),
            render_tuple(table.row(m)),
        ));
    }
    let table2 = second.presentation.hilbert(max_degree)?;
    report.push(Check::new(
        "seed-independence",
        format!("seed {other_seed} gives the same dimension table up to degree {max_degree}"),
        "dimensions do not depend on the generic choice of (q1, q2)",
        "identical",
        if table2 == table && second.koszul() { "identical".to_string() } else { "different".to_string() },
    ));
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
