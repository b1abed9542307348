//! Finitely presented bi-graded rings R = k[x]/(r₁, …, r_s), computed one
//! graded piece at a time by spanning `monomial × relation` and exact rank.

mod hilbert;
mod piece;

pub use hilbert::HilbertTable;
pub use piece::QuotientPiece;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::action::weight_space_table;
use crate::arith::Field;
use crate::linalg::{combine, in_span};
use crate::poly::{enumerate_monomials_capped, parse_named, Homogeneity, Monomial, PolyError, Polynomial, RingDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("relation '{0}' is not bi-homogeneous")]
    Inhomogeneous(String),
    #[error("relation '{0}' is zero")]
    ZeroRelation(String),
    #[error("polynomial is not bi-homogeneous")]
    InhomogeneousInput,
    #[error("the ring has symbolic parameters; specialize them first")]
    Parameters,
    #[error("unknown relation '{0}'")]
    UnknownRelation(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A named homogeneous relation with its bidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation<F: Field> {
    pub name: String,
    pub poly: Polynomial<F>,
    pub degree: u32,
    pub weight: u32,
}

/// A polynomial ring modulo homogeneous relations.
#[derive(Debug, Clone)]
pub struct GradedPresentation<F: Field> {
    desc: Arc<RingDescriptor>,
    relations: Vec<Relation<F>>,
}

/// One element `multiplier · relation` of an ideal spanning set.
#[derive(Debug, Clone)]
pub struct IdealProduct<F: Field> {
    pub relation: usize,
    pub multiplier: Monomial,
    pub poly: Polynomial<F>,
}

/// Witness that `p = Σ cofactorᵢ · relationᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate<F: Field> {
    /// `(relation index, cofactor)`, one entry per relation with a nonzero
    /// cofactor.
    pub cofactors: Vec<(usize, Polynomial<F>)>,
}

impl<F: Field> MembershipCertificate<F> {
    /// `Σ cofactorᵢ · relationᵢ`, which equals the certified polynomial.
    pub fn recombine(&self, pres: &GradedPresentation<F>) -> Polynomial<F> {
        let mut acc = Polynomial::zero(&pres.desc);
        for (i, c) in &self.cofactors {
            acc = &acc + &(c * &pres.relations[*i].poly);
        }
        acc
    }

    /// Human readable `cofactor*(name) + ...` form.
    pub fn render(&self, pres: &GradedPresentation<F>) -> String {
        self.cofactors
            .iter()
            .map(|(i, c)| format!("({c})*{}", pres.relations[*i].name))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<F: Field> GradedPresentation<F> {
    /// The free polynomial ring on `desc`.
    pub fn free(desc: &Arc<RingDescriptor>) -> Self {
        GradedPresentation { desc: desc.clone(), relations: Vec::new() }
    }

    pub fn new(
        desc: &Arc<RingDescriptor>,
        relations: impl IntoIterator<Item = (String, Polynomial<F>)>,
    ) -> Result<Self, QuotientError> {
        let mut out = Vec::new();
        for (name, poly) in relations {
            if poly.descriptor() != desc {
                return Err(PolyError::DescriptorMismatch.into());
            }
            match poly.homogeneity() {
                Homogeneity::Zero => return Err(QuotientError::ZeroRelation(name)),
                Homogeneity::Inhomogeneous => return Err(QuotientError::Inhomogeneous(name)),
                Homogeneity::Homogeneous { degree, weight } => out.push(Relation { name, poly, degree, weight }),
            }
        }
        Ok(GradedPresentation { desc: desc.clone(), relations: out })
    }

    /// Parses a combined file: ring-descriptor lines, plus `name = polynomial`
    /// relation lines.
    pub fn parse(text: &str) -> Result<Self, QuotientError> {
        // Blank out the other kind of line so reported line numbers stay right.
        let is_relation = |l: &str| l.split('#').next().unwrap().contains('=');
        let keep = |want: bool| -> String {
            text.lines().map(|l| if is_relation(l) == want { l } else { "" }).collect::<Vec<_>>().join("\n")
        };
        let desc = RingDescriptor::parse(&keep(false))?;
        let relations = parse_named(&keep(true), &desc)?;
        GradedPresentation::new(&desc, relations)
    }

    pub fn descriptor(&self) -> &Arc<RingDescriptor> {
        &self.desc
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn relation(&self, name: &str) -> Option<&Relation<F>> {
        self.relations.iter().find(|r| r.name == name)
    }

    /// The presentation keeping only the named relations, in the given order.
    pub fn restrict(&self, names: &[&str]) -> Result<Self, QuotientError> {
        let relations = names
            .iter()
            .map(|n| self.relation(n).cloned().ok_or_else(|| QuotientError::UnknownRelation(n.to_string())))
            .collect::<Result<_, _>>()?;
        Ok(GradedPresentation { desc: self.desc.clone(), relations })
    }

    /// Substitutes values for every degree-0 parameter, giving a presentation
    /// over the descriptor without parameters.
    pub fn specialize(&self, values: &BTreeMap<String, F>) -> Result<Self, QuotientError> {
        let target = self.desc.without_parameters();
        let mut images = BTreeMap::new();
        for v in self.desc.vars() {
            let image = if v.is_parameter() {
                let c = values.get(&v.name).ok_or_else(|| PolyError::MissingImage(v.name.clone()))?;
                Polynomial::constant(&target, c.clone())
            } else {
                Polynomial::var(&target, &v.name)?
            };
            images.insert(v.name.clone(), image);
        }
        let relations = self
            .relations
            .iter()
            .map(|r| Ok((r.name.clone(), r.poly.substitute(&images)?)))
            .collect::<Result<Vec<_>, PolyError>>()?;
        GradedPresentation::new(&target, relations)
    }

    /// Products `u · r` spanning the ideal in degree `m` (and weight `w`,
    /// when given), with parameter-free multipliers `u`.
    pub fn ideal_spanning_set(&self, m: u32, w: Option<u32>) -> Vec<IdealProduct<F>> {
        self.ideal_spanning_set_capped(m, w, 0)
    }

    /// As [`ideal_spanning_set`](Self::ideal_spanning_set), letting each
    /// parameter appear in `u` with exponent up to `param_cap`.
    pub fn ideal_spanning_set_capped(&self, m: u32, w: Option<u32>, param_cap: u32) -> Vec<IdealProduct<F>> {
        let d = self.desc.torsion_order();
        let mut out = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            if r.degree > m {
                continue;
            }
            let uw = w.map(|w| (w % d + d - r.weight) % d);
            for u in enumerate_monomials_capped(&self.desc, m - r.degree, uw, param_cap) {
                let poly = r.poly.mul_monomial(&u);
                out.push(IdealProduct { relation: i, multiplier: u, poly });
            }
        }
        out
    }

    /// Basis of the ideal in bidegree `(m, w)`, as polynomials in reduced
    /// echelon form over the monomials that occur. Parameters count as
    /// coefficient data: multipliers are parameter-free.
    pub fn ideal_piece(&self, m: u32, w: u32) -> Vec<Polynomial<F>> {
        let span: Vec<Polynomial<F>> = self.ideal_spanning_set(m, Some(w)).into_iter().map(|p| p.poly).collect();
        let cols = SupportColumns::new(&self.desc, span.iter());
        let mut basis = crate::linalg::EchelonBasis::new(cols.len());
        for p in &span {
            basis.insert(cols.coords(p)).expect("columns cover the support");
        }
        basis.dense_rows().iter().map(|v| cols.polynomial(&self.desc, v)).collect()
    }

    /// The graded piece in degree `m` and weight `w` (all weights when `None`).
    pub fn piece(&self, m: u32, w: Option<u32>) -> Result<QuotientPiece<F>, QuotientError> {
        if self.desc.has_parameters() {
            return Err(QuotientError::Parameters);
        }
        Ok(QuotientPiece::new(self, m, w))
    }

    pub fn quotient_dim(&self, m: u32, w: u32) -> Result<usize, QuotientError> {
        Ok(self.piece(m, Some(w))?.dim())
    }

    /// All pieces `(m, w)` for `m ≤ max_degree`, computed in parallel.
    pub fn pieces(&self, max_degree: u32) -> Result<Vec<Vec<QuotientPiece<F>>>, QuotientError> {
        if self.desc.has_parameters() {
            return Err(QuotientError::Parameters);
        }
        let d = self.desc.torsion_order();
        let jobs: Vec<(u32, u32)> = (0..=max_degree).flat_map(|m| (0..d).map(move |w| (m, w))).collect();
        let flat: Vec<QuotientPiece<F>> =
            jobs.par_iter().map(|&(m, w)| QuotientPiece::new(self, m, Some(w))).collect();
        let mut it = flat.into_iter();
        Ok((0..=max_degree).map(|_| it.by_ref().take(d as usize).collect()).collect())
    }

    pub fn hilbert(&self, max_degree: u32) -> Result<HilbertTable, QuotientError> {
        let pieces = self.pieces(max_degree)?;
        Ok(HilbertTable::new(
            self.desc.torsion_order(),
            pieces.iter().map(|row| row.iter().map(|p| p.dim() as u64).collect()).collect(),
        ))
    }

    /// Decides whether the homogeneous polynomial `p` lies in the ideal, and
    /// if so returns cofactors. Works with symbolic parameters: cofactor
    /// monomials carry each parameter to exponent at most 1.
    pub fn reduces_to_zero(&self, p: &Polynomial<F>) -> Result<Option<MembershipCertificate<F>>, QuotientError> {
        if p.descriptor() != &self.desc {
            return Err(PolyError::DescriptorMismatch.into());
        }
        let (m, w) = match p.homogeneity() {
            Homogeneity::Zero => return Ok(Some(MembershipCertificate { cofactors: Vec::new() })),
            Homogeneity::Inhomogeneous => return Err(QuotientError::InhomogeneousInput),
            Homogeneity::Homogeneous { degree, weight } => (degree, weight),
        };
        let span = self.ideal_spanning_set_capped(m, Some(w), 1);
        let cols = SupportColumns::new(&self.desc, span.iter().map(|s| &s.poly).chain([p]));
        let vectors: Vec<Vec<F>> = span.iter().map(|s| cols.coords(&s.poly)).collect();
        let target = cols.coords(p);
        let Some(coords) = in_span(&target, &vectors).expect("equal lengths") else {
            return Ok(None);
        };
        debug_assert_eq!(combine(cols.len(), &coords, &vectors), target);
        let mut by_relation: BTreeMap<usize, Vec<(Monomial, F)>> = BTreeMap::new();
        for (s, c) in span.into_iter().zip(coords) {
            if !c.is_zero() {
                by_relation.entry(s.relation).or_default().push((s.multiplier, c));
            }
        }
        let cofactors = by_relation
            .into_iter()
            .map(|(i, terms)| (i, Polynomial::from_terms(&self.desc, terms)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(Some(MembershipCertificate { cofactors }))
    }

    /// Quotient dimensions predicted for a regular sequence:
    /// `Σ_{S ⊆ relations} (−1)^|S| · dim k[x]_{m − deg S, w − wt S}`.
    pub fn koszul_prediction(&self, max_degree: u32) -> Vec<Vec<i64>> {
        let d = self.desc.torsion_order() as usize;
        let ambient = weight_space_table(&self.desc, max_degree);
        let mut out = vec![vec![0i64; d]; max_degree as usize + 1];
        let r = self.relations.len();
        for subset in 0u64..(1u64 << r) {
            let (mut deg, mut wt, mut sign) = (0u32, 0usize, 1i64);
            for (i, rel) in self.relations.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    deg += rel.degree;
                    wt += rel.weight as usize;
                    sign = -sign;
                }
            }
            for m in deg..=max_degree {
                for (w, slot) in out[m as usize].iter_mut().enumerate() {
                    *slot += sign * ambient[(m - deg) as usize][(w + d - wt % d) % d] as i64;
                }
            }
        }
        out
    }

    /// Entries `(m, w, predicted, actual)` where the Hilbert table departs
    /// from the regular-sequence prediction.
    pub fn koszul_mismatches(&self, max_degree: u32) -> Result<Vec<(u32, u32, i64, u64)>, QuotientError> {
        let table = self.hilbert(max_degree)?;
        let predicted = self.koszul_prediction(max_degree);
        let mut out = Vec::new();
        for m in 0..=max_degree {
            for w in 0..self.desc.torsion_order() {
                let (p, a) = (predicted[m as usize][w as usize], table.get(m, w));
                if p != a as i64 {
                    out.push((m, w, p, a));
                }
            }
        }
        Ok(out)
    }

    pub fn koszul_check(&self, max_degree: u32) -> Result<bool, QuotientError> {
        Ok(self.koszul_mismatches(max_degree)?.is_empty())
    }

    /// Bidegrees `(m, w)` with `m + deg v ≤ max_degree` on which
    /// multiplication by the variable `v` fails to be injective.
    pub fn multiplication_kernel_degrees(&self, var: &str, max_degree: u32) -> Result<Vec<(u32, u32)>, QuotientError> {
        let i = self
            .desc
            .index_of(var)
            .ok_or_else(|| PolyError::UnknownVariable { name: var.to_string(), position: None })?;
        let v = self.desc.var(i).clone();
        let pieces = self.pieces(max_degree)?;
        let d = self.desc.torsion_order();
        let x = Monomial::var(self.desc.len(), i);
        let mut bad = Vec::new();
        for m in 0..=max_degree.saturating_sub(v.degree) {
            if m + v.degree > max_degree {
                break;
            }
            for w in 0..d {
                let source = &pieces[m as usize][w as usize];
                let target = &pieces[(m + v.degree) as usize][((w + v.weight) % d) as usize];
                let images = source.standard_monomials().into_iter().map(|s| target.normal_form_monomial(&s.mul(&x)));
                let mut span = crate::linalg::EchelonBasis::new(target.ambient_dim());
                for img in images {
                    span.insert(img).expect("lengths agree");
                }
                if span.dim() != source.dim() {
                    bad.push((m, w));
                }
            }
        }
        Ok(bad)
    }

    pub fn multiplication_injectivity(&self, var: &str, max_degree: u32) -> Result<bool, QuotientError> {
        Ok(self.multiplication_kernel_degrees(var, max_degree)?.is_empty())
    }
}

/// Column indexing over the union of supports of a family of polynomials,
/// in descending monomial order.
struct SupportColumns {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl SupportColumns {
    fn new<'a, F: Field>(desc: &RingDescriptor, polys: impl Iterator<Item = &'a Polynomial<F>>) -> Self {
        let set: BTreeSet<Monomial> = polys.flat_map(|p| p.terms().iter().map(|(m, _)| m.clone())).collect();
        let mut monomials: Vec<Monomial> = set.into_iter().collect();
        monomials.sort_by(|a, b| b.grevlex_cmp(a, desc));
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        SupportColumns { monomials, index }
    }

    fn len(&self) -> usize {
        self.monomials.len()
    }

    fn coords<F: Field>(&self, p: &Polynomial<F>) -> Vec<F> {
        let mut v = vec![F::zero(); self.len()];
        for (m, c) in p.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    fn polynomial<F: Field>(&self, desc: &Arc<RingDescriptor>, v: &[F]) -> Polynomial<F> {
        Polynomial::from_terms(
            desc,
            self.monomials.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}
