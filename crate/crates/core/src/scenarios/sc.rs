use std::collections::BTreeMap;
use std::time::Instant;

use super::{oracle_plurigenus, render_census, sc_data, Check, ScData, ScenarioError, VerificationReport};
use crate::arith::Rational;
use crate::poly::Polynomial;
use crate::quotient::GradedPresentation;
use crate::subring::{Condition, GeneratorListReport, MembershipPredicate, Sign, SubringPresentation};

const EXPECTED_GENERATORS: &str = "{2:2,3:4,4:4,5:3}";
const EXPECTED_RELATIONS: &str = "{6:6,7:12,8:18,9:12,10:6}";
const EXPECTED_TOTAL: usize = 54;
/// Highest degree carrying an expected relation.
const LAST_RELATION_DEGREE: u32 = 10;

/// Sections of `k[a,b,c]` that glue across the boundary conic:
/// `g(a, b, c) ≡ h(a, b, c²) mod f` for some `h`, and
/// `g(a, 0, c) = (−1)^m g(0, −(a+c)/2, (c−3a)/2)`.
pub fn sc_predicate(data: &ScData) -> Result<MembershipPredicate<Rational>, ScenarioError> {
    let p = |t: &str| Polynomial::parse(t, &data.descriptor);
    let conditions = vec![
        Condition::CongruenceImage { image: vec![p("a")?, p("b")?, p("c^2")?], modulus: vec![data.f.clone()] },
        Condition::SubstitutionEquality {
            first: vec![p("a")?, p("0")?, p("c")?],
            second: vec![p("0")?, p("-1/2*a - 1/2*c")?, p("1/2*c - 3/2*a")?],
            sign: Sign::Parity,
        },
    ];
    Ok(MembershipPredicate::new(GradedPresentation::free(&data.descriptor), conditions)?)
}

/// Computed presentation of the glued subring plus the comparison with the
/// thirteen listed generators.
#[derive(Debug, Clone)]
pub struct ScBuild {
    pub data: ScData,
    pub presentation: SubringPresentation<Rational>,
    pub comparison: GeneratorListReport,
}

pub fn sc_build(max_degree: u32) -> Result<ScBuild, ScenarioError> {
    let data = sc_data()?;
    let pred = sc_predicate(&data)?;
    let claimed: Vec<Polynomial<Rational>> = data.claimed.iter().map(|(_, g)| g.clone()).collect();
    let (presentation, comparison) =
        rayon::join(|| pred.presentation(max_degree), || pred.verify_generator_list(&claimed, max_degree));
    Ok(ScBuild { data, presentation: presentation?, comparison: comparison? })
}

pub fn run_sc(max_degree: u32) -> Result<VerificationReport, ScenarioError> {
    if max_degree < LAST_RELATION_DEGREE {
        return Err(ScenarioError::DegreeTooSmall { min: LAST_RELATION_DEGREE, got: max_degree });
    }
    let start = Instant::now();
    let build = sc_build(max_degree)?;
    let pres = &build.presentation;
    let mut config = BTreeMap::new();
    config.insert("max_degree".into(), max_degree.to_string());
    config.insert("f".into(), build.data.f.to_string());
    config.insert("bound".into(), format!("generators and relations are computed up to degree {max_degree} only"));
    if let Some(w) = &pres.warning {
        config.insert("warning".into(), w.clone());
    }
    let mut report = VerificationReport::new("sc", config);

    for m in 0..=max_degree {
        report.push(Check::new(
            format!("v-dim-m{m}"),
            format!("dimension of the degree-{m} glued sections V_{m}"),
            format!("h0(m K_X) = P_{m}"),
            oracle_plurigenus(m),
            pres.hilbert[m as usize],
        ));
    }

    let pred = sc_predicate(&build.data)?;
    let subspaces = pred.subspaces(max_degree)?;
    let mut firsts: BTreeMap<u32, &Polynomial<Rational>> = BTreeMap::new();
    let mut lasts: BTreeMap<u32, &Polynomial<Rational>> = BTreeMap::new();
    for (g, d) in &pres.generators {
        firsts.entry(*d).or_insert(g);
        lasts.insert(*d, g);
    }
    for (&i, a) in &firsts {
        for (&j, b) in lasts.range(i..) {
            if i + j > max_degree {
                continue;
            }
            let product = *a * *b;
            let inside = subspaces[(i + j) as usize].contains(&product) == Some(true);
            report.push(Check::new(
                format!("closure-{i}x{j}"),
                format!("({a}) * ({b}) lies in V_{}", i + j),
                "V is closed under multiplication",
                true,
                inside,
            ));
        }
    }

    report.push(Check::new(
        "generator-census",
        "degrees of a minimal generating set of V",
        "the canonical ring embeds X in P(2^2,3^4,4^4,5^3)",
        EXPECTED_GENERATORS,
        render_census(&pres.generator_census()),
    ));
    for (check, (name, g)) in build.comparison.membership.iter().zip(&build.data.claimed) {
        report.push(Check::new(
            format!("listed-member-{name}"),
            format!("{name} = {g} lies in V_{}", check.degree),
            "each listed generator is a glued section",
            true,
            check.member,
        ));
    }
    let failures: Vec<String> = build
        .comparison
        .generation_failures
        .iter()
        .map(|f| format!("m={} dim {} of {}", f.degree, f.generated_dim, f.expected_dim))
        .collect();
    report.push(Check::new(
        "listed-generate",
        format!("the thirteen listed generators span V_m for every m <= {max_degree}"),
        "the listed polynomials generate the canonical ring",
        "none",
        if failures.is_empty() { "none".to_string() } else { failures.join("; ") },
    ));

    let census = &pres.relation_census;
    let low: BTreeMap<u32, usize> =
        census.range(..=LAST_RELATION_DEGREE).filter(|(_, &c)| c > 0).map(|(&d, &c)| (d, c)).collect();
    report.push(Check::new(
        "relation-census",
        "number of new minimal relations among the generators by degree",
        "54 relations in degrees 6, 7, 8, 9, 10",
        EXPECTED_RELATIONS,
        render_census(&low),
    ));
    if max_degree > LAST_RELATION_DEGREE {
        let high: BTreeMap<u32, usize> = census.range(LAST_RELATION_DEGREE + 1..).map(|(&d, &c)| (d, c)).collect();
        let zeros: BTreeMap<u32, usize> = high.keys().map(|&d| (d, 0)).collect();
        report.push(Check::new(
            "relation-census-high",
            format!("no new relations in degrees {}..{max_degree}", LAST_RELATION_DEGREE + 1),
            "no relations beyond degree 10",
            render_census(&zeros),
            render_census(&high),
        ));
    }
    report.push(Check::new(
        "relation-total",
        "total number of minimal relations found",
        "54 relations",
        EXPECTED_TOTAL,
        pres.total_relations(),
    ));
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
