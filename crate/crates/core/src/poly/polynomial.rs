use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Monomial, PolyError, RingDescriptor};
use crate::arith::Field;

/// Bi-graded homogeneity of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Homogeneity {
    Zero,
    Homogeneous { degree: u32, weight: u32 },
    Inhomogeneous,
}

/// A multivariate polynomial over `F`.
///
/// Terms are kept sorted in descending weighted grevlex order with no zero
/// coefficients, so equal polynomials have identical term vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    desc: Arc<RingDescriptor>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(desc: &Arc<RingDescriptor>) -> Self {
        Polynomial { desc: desc.clone(), terms: Vec::new() }
    }

    pub fn constant(desc: &Arc<RingDescriptor>, c: F) -> Self {
        Self::monomial(desc, Monomial::one(desc.len()), c)
    }

    pub fn one(desc: &Arc<RingDescriptor>) -> Self {
        Self::constant(desc, F::one())
    }

    pub fn monomial(desc: &Arc<RingDescriptor>, m: Monomial, c: F) -> Self {
        assert_eq!(m.len(), desc.len(), "monomial length does not match descriptor");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { desc: desc.clone(), terms }
    }

    /// The variable `name` as a polynomial.
    pub fn var(desc: &Arc<RingDescriptor>, name: &str) -> Result<Self, PolyError> {
        let i = desc
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable { name: name.to_string(), position: None })?;
        Ok(Self::var_at(desc, i))
    }

    pub fn var_at(desc: &Arc<RingDescriptor>, i: usize) -> Self {
        Self::monomial(desc, Monomial::var(desc.len(), i), F::one())
    }

    /// Sums the given terms, combining repeated monomials.
    pub fn from_terms(desc: &Arc<RingDescriptor>, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), desc.len(), "monomial length does not match descriptor");
            match acc.get_mut(&m) {
                Some(x) => *x += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(desc, acc)
    }

    fn from_map(desc: &Arc<RingDescriptor>, acc: HashMap<Monomial, F>) -> Self {
        let mut terms: Vec<(Monomial, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.grevlex_cmp(&a.0, desc));
        Polynomial { desc: desc.clone(), terms }
    }

    pub fn descriptor(&self) -> &Arc<RingDescriptor> {
        &self.desc
    }

    /// Terms in canonical (descending grevlex) order.
    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F> {
        self.terms
            .binary_search_by(|(t, _)| m.grevlex_cmp(t, &self.desc))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    fn check_same(&self, other: &Self) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.desc, &other.desc) || self.desc == other.desc {
            Ok(())
        } else {
            Err(PolyError::DescriptorMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.grevlex_cmp(&b[j].0, &self.desc)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.clone() - &b[j].1 } else { a[i].1.clone() + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { desc: self.desc.clone(), terms: out }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same(other)?;
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb;
                match acc.get_mut(&m) {
                    Some(x) => *x += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(&self.desc, acc))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.desc);
        }
        Polynomial {
            desc: self.desc.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c)).collect(),
        }
    }

    /// Multiplies by a monomial; monomial orders are multiplicative, so the
    /// term order is preserved.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            desc: self.desc.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.desc);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut it = self.terms.iter().map(|(m, _)| (m.degree(&self.desc), m.weight(&self.desc)));
        let Some(first) = it.next() else {
            return Homogeneity::Zero;
        };
        if it.all(|dw| dw == first) {
            Homogeneity::Homogeneous { degree: first.0, weight: first.1 }
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    /// `(degree, weight)` of a nonzero homogeneous polynomial.
    pub fn degree_and_weight(&self) -> Option<(u32, u32)> {
        match self.homogeneity() {
            Homogeneity::Homogeneous { degree, weight } => Some((degree, weight)),
            _ => None,
        }
    }

    /// Simultaneous substitution `v ↦ images[v]` for every variable.
    pub fn substitute(&self, images: &BTreeMap<String, Polynomial<F>>) -> Result<Self, PolyError> {
        let ordered = self
            .desc
            .vars()
            .iter()
            .map(|v| images.get(&v.name).cloned().ok_or_else(|| PolyError::MissingImage(v.name.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Substitution::new(&self.desc, ordered)?.apply(self)
    }

    /// Term filter keeping only monomials of torsion weight `w`.
    pub fn project_to_weight(&self, w: u32) -> Self {
        let w = w % self.desc.torsion_order();
        Polynomial {
            desc: self.desc.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.weight(&self.desc) == w).cloned().collect(),
        }
    }

    /// Rewrites the polynomial over another descriptor with the same variable
    /// list, converting coefficients with `f`.
    pub fn map_coefficients<G: Field>(
        &self,
        target: &Arc<RingDescriptor>,
        f: impl Fn(&F) -> G,
    ) -> Result<Polynomial<G>, PolyError> {
        if target.len() != self.desc.len() {
            return Err(PolyError::DescriptorMismatch);
        }
        Ok(Polynomial::from_terms(target, self.terms.iter().map(|(m, c)| (m.clone(), f(c)))))
    }

    /// Scales to the canonical representative of the line: integer-primitive
    /// with positive leading coefficient over ℚ.
    pub fn normalized(&self) -> Self {
        let coeffs: Vec<F> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        self.scale(&F::normalizing_factor(&coeffs))
    }
}

/// Simultaneous substitution with memoized monomial images.
pub struct Substitution<F: Field> {
    source: Arc<RingDescriptor>,
    target: Arc<RingDescriptor>,
    images: Vec<Polynomial<F>>,
    memo: HashMap<Monomial, Polynomial<F>>,
}

impl<F: Field> Substitution<F> {
    /// `images[i]` is the image of variable `i` of `source`; all images must
    /// share one descriptor.
    pub fn new(source: &Arc<RingDescriptor>, images: Vec<Polynomial<F>>) -> Result<Self, PolyError> {
        if images.len() != source.len() {
            let missing = source.vars().get(images.len()).map_or_else(String::new, |v| v.name.clone());
            return Err(PolyError::MissingImage(missing));
        }
        let Some(first) = images.first() else {
            return Err(PolyError::MissingImage(String::new()));
        };
        let target = first.desc.clone();
        if images.iter().any(|p| p.desc != target) {
            return Err(PolyError::DescriptorMismatch);
        }
        Ok(Substitution { source: source.clone(), target, images, memo: HashMap::new() })
    }

    pub fn target(&self) -> &Arc<RingDescriptor> {
        &self.target
    }

    /// Image of a single monomial.
    pub fn apply_monomial(&mut self, m: &Monomial) -> Polynomial<F> {
        if let Some(p) = self.memo.get(m) {
            return p.clone();
        }
        let image = match m.exponents().iter().position(|&e| e > 0) {
            None => Polynomial::one(&self.target),
            Some(i) => {
                let mut rest = m.exponents().to_vec();
                rest[i] -= 1;
                let rest_image = self.apply_monomial(&Monomial::new(rest));
                &rest_image * &self.images[i]
            }
        };
        self.memo.insert(m.clone(), image.clone());
        image
    }

    pub fn apply(&mut self, p: &Polynomial<F>) -> Result<Polynomial<F>, PolyError> {
        if p.desc != self.source {
            return Err(PolyError::DescriptorMismatch);
        }
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in &p.terms {
            let image = self.apply_monomial(m);
            for (t, x) in image.terms {
                let v = x * c;
                match acc.get_mut(&t) {
                    Some(y) => *y += &v,
                    None => {
                        acc.insert(t, v);
                    }
                }
            }
        }
        Ok(Polynomial::from_map(&self.target, acc))
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    /// Panics on descriptor mismatch; use [`Polynomial::checked_add`] to handle it.
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.checked_add(rhs).expect("polynomial descriptors differ")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.checked_sub(rhs).expect("polynomial descriptors differ")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.checked_mul(rhs).expect("polynomial descriptors differ")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            desc: self.desc.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
