use std::sync::Arc;

use rayon::prelude::*;

use super::SubringError;
use crate::arith::Field;
use crate::linalg::{kernel_basis, EchelonBasis, Matrix};
use crate::poly::{enumerate_monomials, Monomial, Polynomial, RingDescriptor, Substitution};
use crate::quotient::{GradedPresentation, QuotientError, QuotientPiece};

/// Sign `ε(m)` in a substitution-equality condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// `ε(m) = (−1)^m`.
    Parity,
    /// `ε(m) = +1` or `−1` for every degree.
    Constant(i8),
}

impl Sign {
    fn at<F: Field>(self, m: u32) -> F {
        let negative = match self {
            Sign::Parity => m % 2 == 1,
            Sign::Constant(s) => s < 0,
        };
        if negative {
            -F::one()
        } else {
            F::one()
        }
    }
}

/// A condition that is linear on each graded piece.
#[derive(Debug, Clone)]
pub enum Condition<F: Field> {
    /// Torsion weight equals the given constant.
    Weight(u32),
    /// Membership in `k[image] + (modulus)` degree by degree, where `k[image]`
    /// is the subalgebra generated by the homogeneous `image` polynomials.
    CongruenceImage { image: Vec<Polynomial<F>>, modulus: Vec<Polynomial<F>> },
    /// `σ₁(g) = ε(m)·σ₂(g)`; `first[i]` and `second[i]` are the images of
    /// ambient variable `i`.
    SubstitutionEquality { first: Vec<Polynomial<F>>, second: Vec<Polynomial<F>>, sign: Sign },
}

/// Subspace `V_m` of the ambient piece in degree `m`, all weights.
///
/// Vectors are normal forms in the ambient monomial coordinates of `piece`.
#[derive(Debug, Clone)]
pub struct GradedSubspace<F: Field> {
    pub(super) piece: QuotientPiece<F>,
    pub(super) basis: EchelonBasis<F>,
}

impl<F: Field> GradedSubspace<F> {
    pub fn degree(&self) -> u32 {
        self.piece.degree()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn piece(&self) -> &QuotientPiece<F> {
        &self.piece
    }

    pub fn basis(&self) -> &EchelonBasis<F> {
        &self.basis
    }

    /// Basis elements as polynomials supported on standard monomials.
    pub fn basis_polynomials(&self) -> Vec<Polynomial<F>> {
        self.basis.dense_rows().iter().map(|v| self.piece.polynomial(v)).collect()
    }

    /// Whether the class of `p` lies in `V_m`. `None` when `p` does not live
    /// in this degree.
    pub fn contains(&self, p: &Polynomial<F>) -> Option<bool> {
        let nf = self.piece.normal_form(p)?;
        Some(self.basis.contains(&nf).expect("lengths agree"))
    }
}

/// A subring membership rule on an ambient graded ring.
#[derive(Debug, Clone)]
pub struct MembershipPredicate<F: Field> {
    ambient: GradedPresentation<F>,
    conditions: Vec<Condition<F>>,
}

impl<F: Field> MembershipPredicate<F> {
    pub fn new(ambient: GradedPresentation<F>, conditions: Vec<Condition<F>>) -> Result<Self, SubringError> {
        let desc = ambient.descriptor().clone();
        if desc.has_parameters() {
            return Err(QuotientError::Parameters.into());
        }
        for (index, c) in conditions.iter().enumerate() {
            let bad = |message: String| SubringError::InvalidCondition { index, message };
            match c {
                Condition::Weight(_) => {}
                Condition::CongruenceImage { image, modulus } => {
                    for p in image.iter().chain(modulus) {
                        if p.descriptor() != &desc {
                            return Err(bad("polynomial over a different ring".into()));
                        }
                        if p.degree_and_weight().is_none_or(|(d, _)| d == 0) {
                            return Err(bad(format!("'{p}' must be homogeneous of positive degree")));
                        }
                    }
                }
                Condition::SubstitutionEquality { first, second, .. } => {
                    if first.len() != desc.len() || second.len() != desc.len() {
                        return Err(bad("substitutions need one image per ambient variable".into()));
                    }
                    let target = first[0].descriptor();
                    if first.iter().chain(second).any(|p| p.descriptor() != target) {
                        return Err(bad("substitution images over different rings".into()));
                    }
                }
            }
        }
        Ok(MembershipPredicate { ambient, conditions })
    }

    pub fn ambient(&self) -> &GradedPresentation<F> {
        &self.ambient
    }

    pub fn descriptor(&self) -> &Arc<RingDescriptor> {
        self.ambient.descriptor()
    }

    pub fn conditions(&self) -> &[Condition<F>] {
        &self.conditions
    }

    /// `V_m`: the ambient classes in degree `m` satisfying every condition.
    pub fn subspace_basis(&self, m: u32) -> Result<GradedSubspace<F>, SubringError> {
        let piece = self.ambient.piece(m, None)?;
        let standard = piece.standard_monomials();
        let mut kept: Vec<Vec<F>> = (0..standard.len())
            .map(|i| {
                let mut v = vec![F::zero(); standard.len()];
                v[i] = F::one();
                v
            })
            .collect();
        for c in &self.conditions {
            if kept.is_empty() {
                break;
            }
            // Images of the current basis of V under the condition's map.
            let images = self.condition_images(c, m, &piece, &standard, &kept)?;
            let len = images.first().map_or(0, Vec::len);
            let kernel = kernel_basis(&Matrix::from_columns(len, &images).expect("equal lengths"));
            kept = kernel.iter().map(|k| crate::linalg::combine(standard.len(), k, &kept)).collect();
        }
        let index: Vec<usize> = standard.iter().map(|s| piece.monomials().iter().position(|t| t == s).unwrap()).collect();
        let mut basis = EchelonBasis::new(piece.ambient_dim());
        for v in kept {
            let mut full = vec![F::zero(); piece.ambient_dim()];
            for (x, &j) in v.into_iter().zip(&index) {
                full[j] = x;
            }
            basis.insert(full).expect("lengths agree");
        }
        Ok(GradedSubspace { piece, basis })
    }

    /// `V_m` for every `m ≤ max_degree`, computed in parallel.
    pub fn subspaces(&self, max_degree: u32) -> Result<Vec<GradedSubspace<F>>, SubringError> {
        (0..=max_degree).into_par_iter().map(|m| self.subspace_basis(m)).collect()
    }

    /// For each vector of `kept` (coordinates over `standard`), the image of
    /// the corresponding polynomial under the condition's linear map, whose
    /// kernel is the condition's subspace.
    fn condition_images(
        &self,
        c: &Condition<F>,
        m: u32,
        piece: &QuotientPiece<F>,
        standard: &[Monomial],
        kept: &[Vec<F>],
    ) -> Result<Vec<Vec<F>>, SubringError> {
        let desc = self.descriptor();
        let as_poly = |v: &Vec<F>| {
            Polynomial::from_terms(
                desc,
                standard.iter().zip(v).filter(|(_, x)| !x.is_zero()).map(|(s, x)| (s.clone(), x.clone())),
            )
        };
        Ok(match c {
            Condition::Weight(w) => {
                let w = w % desc.torsion_order();
                let off: Vec<usize> = (0..standard.len()).filter(|&i| standard[i].weight(desc) != w).collect();
                kept.iter().map(|v| off.iter().map(|&i| v[i].clone()).collect()).collect()
            }
            Condition::CongruenceImage { image, modulus } => {
                let allowed = self.congruence_span(m, piece, image, modulus);
                kept.iter()
                    .map(|v| allowed.reduce(piece.coords(&as_poly(v)).expect("same piece")).expect("lengths agree"))
                    .collect()
            }
            Condition::SubstitutionEquality { first, second, sign } => {
                let eps: F = sign.at(m);
                let mut s1 = Substitution::new(desc, first.clone())?;
                let mut s2 = Substitution::new(desc, second.clone())?;
                let diffs: Vec<Polynomial<F>> = kept
                    .iter()
                    .map(|v| {
                        let p = as_poly(v);
                        Ok(&s1.apply(&p)? - &s2.apply(&p)?.scale(&eps))
                    })
                    .collect::<Result<_, crate::poly::PolyError>>()?;
                let target = s1.target().clone();
                let monos = enumerate_monomials(&target, m, None);
                let mut support: Vec<Monomial> =
                    diffs.iter().flat_map(|p| p.terms().iter().map(|(t, _)| t.clone())).collect();
                support.extend(monos);
                support.sort_by(|a, b| b.grevlex_cmp(a, &target));
                support.dedup();
                diffs
                    .iter()
                    .map(|p| {
                        support.iter().map(|t| p.coefficient(t).cloned().unwrap_or_else(F::zero)).collect()
                    })
                    .collect()
            }
        })
    }

    /// Echelon basis of `k[image]_m + (modulus)_m + I_m` in the ambient
    /// monomial coordinates of `piece`.
    fn congruence_span(
        &self,
        m: u32,
        piece: &QuotientPiece<F>,
        image: &[Polynomial<F>],
        modulus: &[Polynomial<F>],
    ) -> EchelonBasis<F> {
        let desc = self.descriptor();
        let mut span = piece.ideal_basis().clone();
        let degrees: Vec<u32> = image.iter().map(|p| p.degree_and_weight().unwrap().0).collect();
        let sub = RingDescriptor::new(
            degrees.iter().enumerate().map(|(i, &d)| (format!("t{i}"), d, 0)),
            1,
            desc.field_order(),
        )
        .expect("valid auxiliary descriptor");
        for mono in enumerate_monomials(&sub, m, None) {
            let mut p = Polynomial::one(desc);
            for (g, &e) in image.iter().zip(mono.exponents()) {
                p = &p * &g.pow(e);
            }
            span.insert(piece.coords(&p).expect("homogeneous of degree m")).expect("lengths agree");
        }
        for f in modulus {
            let d = f.degree_and_weight().unwrap().0;
            if d > m {
                continue;
            }
            for u in enumerate_monomials(desc, m - d, None) {
                span.insert(piece.coords(&f.mul_monomial(&u)).expect("degree m")).expect("lengths agree");
            }
        }
        span
    }
}
