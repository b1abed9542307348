use std::cmp::Ordering;

use super::RingDescriptor;

/// Exponent vector aligned with a [`RingDescriptor`]'s variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, desc: &RingDescriptor) -> u32 {
        self.0.iter().zip(desc.vars()).map(|(&e, v)| e * v.degree).sum()
    }

    pub fn weight(&self, desc: &RingDescriptor) -> u32 {
        let d = desc.torsion_order() as u64;
        (self.0.iter().zip(desc.vars()).map(|(&e, v)| e as u64 * v.weight as u64).sum::<u64>() % d) as u32
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    /// Weighted graded reverse-lexicographic comparison: higher weighted
    /// degree first, ties broken by the smaller exponent in the last
    /// differing variable.
    pub fn grevlex_cmp(&self, other: &Monomial, desc: &RingDescriptor) -> Ordering {
        self.degree(desc).cmp(&other.degree(desc)).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

/// All monomials of weighted degree `degree` (and torsion weight `weight`,
/// when given), in canonical descending grevlex order.
///
/// Degree-0 parameter variables take exponents up to 1.
pub fn enumerate_monomials(desc: &RingDescriptor, degree: u32, weight: Option<u32>) -> Vec<Monomial> {
    enumerate_monomials_capped(desc, degree, weight, 1)
}

/// As [`enumerate_monomials`] with an explicit exponent cap for parameters.
pub fn enumerate_monomials_capped(
    desc: &RingDescriptor,
    degree: u32,
    weight: Option<u32>,
    param_cap: u32,
) -> Vec<Monomial> {
    let d = desc.torsion_order();
    let mut out = Vec::new();
    let mut exps = vec![0u32; desc.len()];
    fill(desc, 0, degree, param_cap, &mut exps, &mut out);
    if let Some(w) = weight {
        let w = w % d;
        out.retain(|m| m.weight(desc) == w);
    }
    out.sort_by(|a, b| b.grevlex_cmp(a, desc));
    out
}

fn fill(desc: &RingDescriptor, i: usize, remaining: u32, cap: u32, exps: &mut [u32], out: &mut Vec<Monomial>) {
    if i == desc.len() {
        if remaining == 0 {
            out.push(Monomial(exps.to_vec()));
        }
        return;
    }
    let deg = desc.var(i).degree;
    let max = remaining.checked_div(deg).unwrap_or(cap);
    for e in 0..=max {
        exps[i] = e;
        fill(desc, i + 1, remaining - e * deg, cap, exps, out);
    }
    exps[i] = 0;
}
