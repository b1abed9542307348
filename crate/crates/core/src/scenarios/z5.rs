use std::collections::BTreeMap;
use std::time::Instant;

use super::{oracle_plurigenus, z5_data, Check, ScenarioError, VerificationReport, Z5Data};
use crate::action::{weight_space_dim, CyclicAction};
use crate::arith::{Cyc5, Field};
use crate::linalg::Matrix;
use crate::poly::{Monomial, Polynomial};
use crate::quotient::GradedPresentation;

/// `ℚ(ζ₅)[x₁..x₄]/(q)`; its weight-0 column is the invariant ring.
pub fn z5_invariant_presentation() -> Result<GradedPresentation<Cyc5>, ScenarioError> {
    let data = z5_data()?;
    Ok(GradedPresentation::new(&data.descriptor, [("q".to_string(), data.q)])?)
}

fn plane_row(data: &Z5Data, l: &Polynomial<Cyc5>) -> Vec<Cyc5> {
    (0..data.descriptor.len())
        .map(|i| l.coefficient(&Monomial::var(data.descriptor.len(), i)).cloned().unwrap_or_else(Cyc5::zero))
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

pub fn run_z5(max_degree: u32) -> Result<VerificationReport, ScenarioError> {
    let start = Instant::now();
    let data = z5_data()?;
    let mut config = BTreeMap::new();
    config.insert("max_degree".into(), max_degree.to_string());
    config.insert("bound".into(), format!("dimension checks cover degrees <= {max_degree} only"));
    let mut report = VerificationReport::new("z5", config);

    let action = CyclicAction::<Cyc5>::new(&data.descriptor)?;
    let moved = action.act(1, &data.q)?;
    report.push(Check::new(
        "q-invariant",
        "substituting x_i -> z5^i x_i permutes the five planes cyclically and fixes q",
        "q is G-invariant",
        "fixed",
        if moved == data.q { "fixed".to_string() } else { format!("moved to {moved}") },
    ));
    report.push(Check::new(
        "q-placement",
        "q is homogeneous of degree 5 and torsion weight 0",
        "q is an invariant quintic",
        "(5,0)",
        data.q.degree_and_weight().map_or("not homogeneous".into(), |(d, w)| format!("({d},{w})")),
    ));

    let rows: Vec<Vec<Cyc5>> = data.planes.iter().map(|l| plane_row(&data, l)).collect();
    let rank = |idx: &[usize]| {
        let m = Matrix::from_rows(data.descriptor.len(), idx.iter().map(|&i| rows[i].clone()).collect());
        m.expect("plane rows have one entry per variable").rank()
    };
    let triples = subsets(rows.len(), 3);
    let points = triples.iter().filter(|t| rank(t) == 3).count();
    report.push(Check::new(
        "triple-points",
        "triples of planes whose coefficient matrix has rank 3, so they meet in one point",
        "the five planes have exactly 10 triple points",
        10,
        points,
    ));
    let quadruples = subsets(rows.len(), 4);
    let violations = quadruples.iter().filter(|s| rank(s) < 4).count();
    report.push(Check::new(
        "no-quadruple-points",
        "4-subsets of planes with a common point (rank below 4)",
        "no four of the planes share a point",
        0,
        violations,
    ));

    for i in 0..data.descriptor.len() {
        let mut e = vec![0u32; data.descriptor.len()];
        e[i] = 5;
        let value = data.q.coefficient(&Monomial::new(e)).cloned().unwrap_or_else(Cyc5::zero);
        let name = &data.descriptor.var(i).name;
        report.push(Check::new(
            format!("fixed-point-e{}", i + 1),
            format!("q at the fixed point e{} is the coefficient of {name}^5, here {value}", i + 1),
            "the fixed points of G do not lie on q",
            "nonzero",
            if value.is_zero() { "zero" } else { "nonzero" },
        ));
    }

    let pieces = z5_invariant_presentation()?.pieces(max_degree)?;
    for m in 0..=max_degree {
        let predicted = weight_space_dim(&data.descriptor, m, 0)
            - if m >= 5 { weight_space_dim(&data.descriptor, m - 5, 0) } else { 0 };
        let exact = pieces[m as usize][0].dim();
        report.push(Check::new(
            format!("invariant-dim-m{m}"),
            format!("dim (S/(q))^G_{m} as weight count S_{m} - S_{{{m}-5}}, and by exact elimination"),
            format!("dim (S/(q))^G_{m} = P_{m}"),
            format!("{0} {0}", oracle_plurigenus(m)),
            format!("{predicted} {exact}"),
        ));
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
