use std::collections::HashMap;
use std::sync::Arc;

use super::GradedPresentation;
use crate::arith::Field;
use crate::linalg::EchelonBasis;
use crate::poly::{enumerate_monomials, Monomial, Polynomial, RingDescriptor};

/// One graded piece `R_{m,w}` of a quotient ring: the ambient monomials and
/// an echelon basis of the ideal in their coordinates.
///
/// Monomials whose columns carry no pivot form the standard basis of the
/// quotient; normal forms are remainders against the ideal basis.
#[derive(Debug, Clone)]
pub struct QuotientPiece<F: Field> {
    desc: Arc<RingDescriptor>,
    degree: u32,
    weight: Option<u32>,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal: EchelonBasis<F>,
}

impl<F: Field> QuotientPiece<F> {
    pub(super) fn new(pres: &GradedPresentation<F>, m: u32, w: Option<u32>) -> Self {
        let desc = pres.descriptor().clone();
        let monomials = enumerate_monomials(&desc, m, w);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ideal = EchelonBasis::new(monomials.len());
        for prod in pres.ideal_spanning_set(m, w) {
            if ideal.dim() == monomials.len() {
                break;
            }
            let mut v = vec![F::zero(); monomials.len()];
            for (mono, c) in prod.poly.terms() {
                v[index[mono]] = c.clone();
            }
            ideal.insert(v).expect("lengths agree");
        }
        QuotientPiece { desc, degree: m, weight: w, monomials, index, ideal }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn weight(&self) -> Option<u32> {
        self.weight
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn ambient_dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.dim()
    }

    /// Dimension of the quotient piece.
    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.ideal_dim()
    }

    pub fn ideal_basis(&self) -> &EchelonBasis<F> {
        &self.ideal
    }

    /// Monomials not in the span of leading ideal columns; their classes
    /// form a basis of the quotient.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        self.ideal.free_columns().into_iter().map(|j| self.monomials[j].clone()).collect()
    }

    /// Coordinates of `p` over the ambient monomials, or `None` when `p` has
    /// a term outside this piece.
    pub fn coords(&self, p: &Polynomial<F>) -> Option<Vec<F>> {
        let mut v = vec![F::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            v[*self.index.get(m)?] = c.clone();
        }
        Some(v)
    }

    /// Remainder of `p` against the ideal, in ambient coordinates. Zero
    /// exactly when `p` vanishes in the quotient.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Option<Vec<F>> {
        Some(self.ideal.reduce(self.coords(p)?).expect("lengths agree"))
    }

    pub fn normal_form_monomial(&self, m: &Monomial) -> Vec<F> {
        let mut v = vec![F::zero(); self.monomials.len()];
        v[self.index[m]] = F::one();
        self.ideal.reduce(v).expect("lengths agree")
    }

    /// Polynomial with the given ambient coordinates.
    pub fn polynomial(&self, v: &[F]) -> Polynomial<F> {
        Polynomial::from_terms(
            &self.desc,
            self.monomials.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Rank of the classes of `polys` in the quotient piece, or `None` when
    /// some polynomial does not live in this piece.
    pub fn rank_of(&self, polys: &[Polynomial<F>]) -> Option<usize> {
        let mut span = self.ideal.clone();
        for p in polys {
            span.insert(self.coords(p)?).expect("lengths agree");
        }
        Some(span.dim() - self.ideal.dim())
    }
}
