use std::sync::Arc;

use super::ScenarioError;
use crate::arith::{Cyc5, Rational};
use crate::poly::{parse_named, Polynomial, RingDescriptor};
use crate::quotient::GradedPresentation;

const Z3_RING: &str = include_str!("../../fixtures/z3.ring");
const Z3_POLYS: &str = include_str!("../../fixtures/z3.poly");
const Z3_TABLE: &str = include_str!("../../fixtures/z3_table.txt");
const Z4_RING: &str = include_str!("../../fixtures/z4.ring");
const Z5_RING: &str = include_str!("../../fixtures/z5.ring");
const Z5_POLYS: &str = include_str!("../../fixtures/z5.poly");
const SC_RING: &str = include_str!("../../fixtures/sc.ring");
const SC_POLYS: &str = include_str!("../../fixtures/sc.poly");

/// Names of the ten relations of the ℤ/3 ring, in presentation order.
pub const Z3_RELATIONS: [&str; 10] = ["f0", "f1", "f2", "g0", "g1", "g2", "h0", "H0", "H1", "H2"];

/// Listed monomials of one graded piece of the ℤ/3 ring.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub degree: u32,
    pub weight: u32,
    pub monomials: Vec<Polynomial<Rational>>,
    /// Relations listed among the monomials; the piece has dimension
    /// `monomials.len() - listed_relations`.
    pub listed_relations: usize,
}

#[derive(Debug, Clone)]
pub struct Z3Data {
    /// Relations with α, β, γ as degree-0 variables.
    pub presentation: GradedPresentation<Rational>,
    pub f2_form: Polynomial<Rational>,
    pub table: Vec<TableRow>,
}

impl Z3Data {
    pub fn relation(&self, name: &str) -> &Polynomial<Rational> {
        &self.presentation.relation(name).expect("fixture relation").poly
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial<Rational>, ScenarioError> {
        Ok(Polynomial::parse(text, self.presentation.descriptor())?)
    }
}

#[derive(Debug, Clone)]
pub struct Z5Data {
    pub descriptor: Arc<RingDescriptor>,
    /// The five planes `l_k = Σ ξ^{ki} x_i`.
    pub planes: Vec<Polynomial<Cyc5>>,
    /// Their product.
    pub q: Polynomial<Cyc5>,
}

#[derive(Debug, Clone)]
pub struct ScData {
    pub descriptor: Arc<RingDescriptor>,
    pub f: Polynomial<Rational>,
    /// The thirteen claimed generators, named.
    pub claimed: Vec<(String, Polynomial<Rational>)>,
}

fn fixture<T>(what: &str, r: Result<T, impl std::fmt::Display>) -> Result<T, ScenarioError> {
    r.map_err(|e| ScenarioError::Fixture(format!("{what}: {e}")))
}

pub fn z3_data() -> Result<Z3Data, ScenarioError> {
    let desc = fixture("z3.ring", RingDescriptor::parse(Z3_RING))?;
    let mut named: Vec<(String, Polynomial<Rational>)> = fixture("z3.poly", parse_named(Z3_POLYS, &desc))?;
    let f2_at = named.iter().position(|(n, _)| n == "F2").ok_or_else(|| ScenarioError::Fixture("F2 missing".into()))?;
    let f2_form = named.remove(f2_at).1;
    let names: Vec<&str> = named.iter().map(|(n, _)| n.as_str()).collect();
    if names != Z3_RELATIONS {
        return Err(ScenarioError::Fixture(format!("unexpected relation list {names:?}")));
    }
    let presentation = GradedPresentation::new(&desc, named)?;
    let plain = desc.without_parameters();
    let mut table = Vec::new();
    for (lineno, raw) in Z3_TABLE.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let bad = || ScenarioError::Fixture(format!("z3_table.txt line {}", lineno + 1));
        let (head, rest) = line.split_once(':').ok_or_else(bad)?;
        let (monos, k) = rest.split_once(';').ok_or_else(bad)?;
        let mut mw = head.split_whitespace().map(str::parse::<u32>);
        let (Some(Ok(degree)), Some(Ok(weight)), None) = (mw.next(), mw.next(), mw.next()) else {
            return Err(bad());
        };
        let monomials = monos
            .split_whitespace()
            .map(|t| Polynomial::parse(t, &plain))
            .collect::<Result<Vec<_>, _>>()?;
        let listed_relations = k.trim().parse().map_err(|_| bad())?;
        table.push(TableRow { degree, weight, monomials, listed_relations });
    }
    Ok(Z3Data { presentation, f2_form, table })
}

pub fn z5_data() -> Result<Z5Data, ScenarioError> {
    let descriptor = fixture("z5.ring", RingDescriptor::parse(Z5_RING))?;
    let planes: Vec<Polynomial<Cyc5>> =
        fixture("z5.poly", parse_named(Z5_POLYS, &descriptor))?.into_iter().map(|(_, p)| p).collect();
    let q = planes.iter().fold(Polynomial::one(&descriptor), |acc, l| &acc * l);
    Ok(Z5Data { descriptor, planes, q })
}

pub fn z4_descriptor() -> Result<Arc<RingDescriptor>, ScenarioError> {
    fixture("z4.ring", RingDescriptor::parse(Z4_RING))
}

pub fn sc_data() -> Result<ScData, ScenarioError> {
    let descriptor = fixture("sc.ring", RingDescriptor::parse(SC_RING))?;
    let mut named = fixture("sc.poly", parse_named(SC_POLYS, &descriptor))?;
    if named.first().map(|(n, _)| n.as_str()) != Some("f") {
        return Err(ScenarioError::Fixture("sc.poly must start with f".into()));
    }
    let f = named.remove(0).1;
    Ok(ScData { descriptor, f, claimed: named })
}
