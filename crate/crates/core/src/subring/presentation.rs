use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{GradedSubspace, MembershipPredicate, SubringError};
use crate::arith::Field;
use crate::linalg::{kernel_basis, EchelonBasis, Matrix};
use crate::poly::{enumerate_monomials, Homogeneity, Monomial, Polynomial, RingDescriptor};

/// Generators, relation census and Hilbert data of a subring, truncated at
/// `max_degree`.
#[derive(Debug, Clone)]
pub struct SubringPresentation<F: Field> {
    pub max_degree: u32,
    /// `(generator, degree)`, degrees weakly increasing.
    pub generators: Vec<(Polynomial<F>, u32)>,
    /// Free weighted ring on the generator symbols `g{degree}_{k}`.
    pub free_ring: Arc<RingDescriptor>,
    /// Number of new minimal relations per degree `1..=max_degree`.
    pub relation_census: BTreeMap<u32, usize>,
    /// Representative new relations in the free ring, by degree.
    pub relations: BTreeMap<u32, Vec<Polynomial<F>>>,
    /// `dim V_m` for `0 ≤ m ≤ max_degree`.
    pub hilbert: Vec<usize>,
    /// Set when the census may be incomplete at this bound.
    pub warning: Option<String>,
}

impl<F: Field> SubringPresentation<F> {
    pub fn generator_census(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for (_, d) in &self.generators {
            *out.entry(*d).or_insert(0) += 1;
        }
        out
    }

    pub fn total_relations(&self) -> usize {
        self.relation_census.values().sum()
    }

    /// Relation census with zero entries dropped.
    pub fn nonzero_relation_census(&self) -> BTreeMap<u32, usize> {
        self.relation_census.iter().filter(|(_, &c)| c > 0).map(|(&d, &c)| (d, c)).collect()
    }
}

/// Membership of one claimed generator in `V` at its degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub index: usize,
    pub degree: u32,
    pub member: bool,
}

/// A degree where the claimed list fails to generate `V_m` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationFailure {
    pub degree: u32,
    pub expected_dim: usize,
    pub generated_dim: usize,
    /// Whether the generated piece stays inside `V_m`.
    pub contained: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorListReport {
    pub max_degree: u32,
    pub membership: Vec<GeneratorCheck>,
    pub generation_failures: Vec<GenerationFailure>,
}

impl GeneratorListReport {
    pub fn passed(&self) -> bool {
        self.membership.iter().all(|c| c.member) && self.generation_failures.is_empty()
    }
}

/// Spans, in each degree, of products of `gens` with the given spans in lower
/// degrees: `Σ_j gens_j · spans[m − deg_j]`, normal forms in `pieces[m]`.
fn product_span<F: Field>(
    m: u32,
    gens: &[(Polynomial<F>, u32)],
    spans: &[EchelonBasis<F>],
    subspaces: &[GradedSubspace<F>],
) -> EchelonBasis<F> {
    let piece = &subspaces[m as usize].piece;
    let mut out = EchelonBasis::new(piece.ambient_dim());
    for (g, d) in gens {
        if *d > m {
            continue;
        }
        let lower = &subspaces[(m - d) as usize].piece;
        for v in spans[(m - d) as usize].dense_rows() {
            let p = g * &lower.polynomial(&v);
            out.insert(piece.normal_form(&p).expect("degree m")).expect("lengths agree");
            if out.dim() == piece.dim() {
                return out;
            }
        }
    }
    out
}

fn constants<F: Field>(desc: &Arc<RingDescriptor>, subspaces: &[GradedSubspace<F>]) -> EchelonBasis<F> {
    let p0 = &subspaces[0].piece;
    let mut e = EchelonBasis::new(p0.ambient_dim());
    e.insert(p0.normal_form(&Polynomial::one(desc)).expect("degree 0")).expect("lengths agree");
    e
}

impl<F: Field> MembershipPredicate<F> {
    /// Minimal generators up to degree `max_degree`: in each degree, the
    /// canonical complement of the products of lower generators inside `V_m`.
    pub fn minimal_generators(&self, max_degree: u32) -> Result<Vec<(Polynomial<F>, u32)>, SubringError> {
        let subspaces = self.subspaces(max_degree)?;
        Ok(self.generators_from(&subspaces))
    }

    fn generators_from(&self, subspaces: &[GradedSubspace<F>]) -> Vec<(Polynomial<F>, u32)> {
        let mut gens: Vec<(Polynomial<F>, u32)> = Vec::new();
        // spans[m] = degree-m part of the subalgebra generated so far (= V_m
        // once degree m is processed).
        let mut spans: Vec<EchelonBasis<F>> = vec![constants(self.descriptor(), subspaces)];
        for m in 1..subspaces.len() as u32 {
            let v = &subspaces[m as usize];
            let mut products = product_span(m, &gens, &spans, subspaces);
            for row in v.basis.dense_rows() {
                let rem = products.reduce(row).expect("lengths agree");
                if rem.iter().all(Field::is_zero) {
                    continue;
                }
                products.insert(rem.clone()).expect("lengths agree");
                gens.push((v.piece.polynomial(&rem).normalized(), m));
            }
            spans.push(products);
        }
        gens
    }

    /// Generators, relation census and representative relations up to
    /// `max_degree`.
    pub fn presentation(&self, max_degree: u32) -> Result<SubringPresentation<F>, SubringError> {
        let subspaces = self.subspaces(max_degree)?;
        let generators = self.generators_from(&subspaces);
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        let free_ring = RingDescriptor::new(
            generators.iter().map(|(_, d)| {
                let k = counts.entry(*d).or_insert(0);
                *k += 1;
                (format!("g{d}_{k}"), *d, 0)
            }),
            1,
            self.descriptor().field_order(),
        )?;

        // Images of free monomials, as normal forms in the ambient pieces.
        let mut images: HashMap<Monomial, Polynomial<F>> = HashMap::new();
        images.insert(Monomial::one(free_ring.len()), Polynomial::one(self.descriptor()));
        let free_monomials: Vec<Vec<Monomial>> =
            (0..=max_degree).map(|m| enumerate_monomials(&free_ring, m, None)).collect();
        let mut evaluations: Vec<Vec<Vec<F>>> = Vec::new();
        for m in 0..=max_degree {
            let piece = &subspaces[m as usize].piece;
            let mut cols = Vec::new();
            for mono in &free_monomials[m as usize] {
                let image = match mono.exponents().iter().position(|&e| e > 0) {
                    None => Polynomial::one(self.descriptor()),
                    Some(j) => {
                        let rest = Monomial::var(free_ring.len(), j).quotient_of(mono);
                        let nf = piece.normal_form(&(&images[&rest] * &generators[j].0)).expect("degree m");
                        piece.polynomial(&nf)
                    }
                };
                cols.push(piece.coords(&image).expect("degree m"));
                images.insert(mono.clone(), image);
            }
            evaluations.push(cols);
        }

        let kernels: Vec<Vec<Vec<F>>> = evaluations
            .par_iter()
            .enumerate()
            .map(|(m, cols)| {
                let rows = subspaces[m].piece.ambient_dim();
                kernel_basis(&Matrix::from_columns(rows, cols).expect("equal lengths"))
            })
            .collect();

        let index: Vec<HashMap<&Monomial, usize>> = free_monomials
            .iter()
            .map(|ms| ms.iter().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        let new_relations: Vec<Vec<Vec<F>>> = (0..=max_degree as usize)
            .into_par_iter()
            .map(|m| {
                let len = free_monomials[m].len();
                let mut lower = EchelonBasis::new(len);
                'fill: for (j, (_, d)) in generators.iter().enumerate() {
                    let d = *d as usize;
                    if d > m {
                        continue;
                    }
                    let x = Monomial::var(free_ring.len(), j);
                    for k in &kernels[m - d] {
                        let mut v = vec![F::zero(); len];
                        for (c, mono) in k.iter().zip(&free_monomials[m - d]) {
                            if !c.is_zero() {
                                v[index[m][&mono.mul(&x)]] = c.clone();
                            }
                        }
                        lower.insert(v).expect("lengths agree");
                        if lower.dim() == kernels[m].len() {
                            break 'fill;
                        }
                    }
                }
                let mut fresh = Vec::new();
                for k in &kernels[m] {
                    let rem = lower.reduce(k.clone()).expect("lengths agree");
                    if rem.iter().any(|x| !x.is_zero()) {
                        lower.insert(rem.clone()).expect("lengths agree");
                        fresh.push(rem);
                    }
                }
                fresh
            })
            .collect();

        let mut relation_census = BTreeMap::new();
        let mut relations = BTreeMap::new();
        for (m, fresh) in new_relations.into_iter().enumerate().skip(1) {
            let m = m as u32;
            relation_census.insert(m, fresh.len());
            let polys: Vec<Polynomial<F>> = fresh
                .iter()
                .map(|v| {
                    Polynomial::from_terms(
                        &free_ring,
                        free_monomials[m as usize]
                            .iter()
                            .zip(v)
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(t, c)| (t.clone(), c.clone())),
                    )
                    .normalized()
                })
                .collect();
            if !polys.is_empty() {
                relations.insert(m, polys);
            }
        }

        let max_gen = generators.iter().map(|(_, d)| *d).max().unwrap_or(0);
        let mut reasons = Vec::new();
        if max_degree < 2 * max_gen {
            reasons.push(format!("bound {max_degree} is below twice the top generator degree {max_gen}"));
        }
        if generators.iter().any(|(_, d)| *d == max_degree) {
            reasons.push(format!("new generators appear at the bound {max_degree}"));
        }
        if relation_census.get(&max_degree).copied().unwrap_or(0) > 0 {
            reasons.push(format!("new relations appear at the bound {max_degree}"));
        }
        let warning = (!reasons.is_empty()).then(|| format!("census may be truncated: {}", reasons.join("; ")));

        Ok(SubringPresentation {
            max_degree,
            hilbert: subspaces.iter().map(GradedSubspace::dim).collect(),
            generators,
            free_ring,
            relation_census,
            relations,
            warning,
        })
    }

    /// Checks that every claimed polynomial lies in `V` and that together they
    /// generate `V_m` for all `m ≤ max_degree`.
    pub fn verify_generator_list(
        &self,
        claimed: &[Polynomial<F>],
        max_degree: u32,
    ) -> Result<GeneratorListReport, SubringError> {
        let top = claimed.iter().filter_map(Polynomial::degree_and_weight).map(|(d, _)| d).max().unwrap_or(0);
        let subspaces = self.subspaces(max_degree.max(top))?;
        let mut gens = Vec::new();
        let mut membership = Vec::new();
        for (index, p) in claimed.iter().enumerate() {
            let degree = match p.homogeneity() {
                Homogeneity::Homogeneous { degree: 0, .. } => return Err(SubringError::ConstantGenerator(index)),
                Homogeneity::Homogeneous { degree, .. } => degree,
                _ => return Err(SubringError::InhomogeneousGenerator(index)),
            };
            let member = subspaces[degree as usize].contains(p) == Some(true);
            membership.push(GeneratorCheck { index, degree, member });
            gens.push((p.clone(), degree));
        }
        let mut spans = vec![constants(self.descriptor(), &subspaces)];
        let mut generation_failures = Vec::new();
        for m in 1..=max_degree {
            let v = &subspaces[m as usize];
            let span = product_span(m, &gens, &spans, &subspaces);
            let generated_dim = span.dim();
            let contained = span.dense_rows().iter().all(|r| v.basis.contains(r).expect("lengths agree"));
            if !contained || generated_dim != v.dim() {
                generation_failures.push(GenerationFailure {
                    degree: m,
                    expected_dim: v.dim(),
                    generated_dim,
                    contained,
                });
            }
            // Keep the generated span even when wrong, so later degrees report
            // what the claimed list really produces.
            spans.push(span);
        }
        Ok(GeneratorListReport { max_degree, membership, generation_failures })
    }
}
