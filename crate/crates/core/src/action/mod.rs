//! Diagonal ℤ/d actions through torsion weights: a generator acts on a
//! variable of weight `w` by multiplication with `root^w`.

use std::sync::Arc;

use thiserror::Error;

use crate::arith::Field;
use crate::poly::{Polynomial, PolyError, RingDescriptor, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("the coefficient field Q(z{field}) has no primitive {order}-th root of unity")]
    NoRoot { order: u32, field: u32 },
    #[error("{0} is not a primitive root of the expected order")]
    NotPrimitive(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The cyclic group ℤ/d acting diagonally on a ring descriptor.
#[derive(Debug, Clone)]
pub struct CyclicAction<F: Field> {
    desc: Arc<RingDescriptor>,
    root: F,
}

impl<F: Field> CyclicAction<F> {
    /// Action with the field's canonical primitive root of order
    /// `desc.torsion_order()`.
    pub fn new(desc: &Arc<RingDescriptor>) -> Result<Self, ActionError> {
        let order = desc.torsion_order();
        let root = F::primitive_root(order).ok_or(ActionError::NoRoot { order, field: F::ORDER })?;
        Self::with_root(desc, root)
    }

    /// Action with an explicit root, which must have exact order d.
    pub fn with_root(desc: &Arc<RingDescriptor>, root: F) -> Result<Self, ActionError> {
        let d = desc.torsion_order();
        let mut power = F::one();
        for k in 1..=d {
            power *= &root;
            if power.is_one() != (k == d) {
                return Err(ActionError::NotPrimitive(root.to_string()));
            }
        }
        Ok(CyclicAction { desc: desc.clone(), root })
    }

    pub fn order(&self) -> u32 {
        self.desc.torsion_order()
    }

    pub fn root(&self) -> &F {
        &self.root
    }

    /// Image of `p` under the `k`-th power of the generator.
    pub fn act(&self, k: i64, p: &Polynomial<F>) -> Result<Polynomial<F>, ActionError> {
        if p.descriptor() != &self.desc {
            return Err(PolyError::DescriptorMismatch.into());
        }
        let d = self.order() as i64;
        let images = (0..self.desc.len())
            .map(|i| {
                let e = (k.rem_euclid(d) * self.desc.var(i).weight as i64) % d;
                let c = self.root.pow(e).expect("root is a unit");
                Polynomial::var_at(&self.desc, i).scale(&c)
            })
            .collect();
        Ok(Substitution::new(&self.desc, images)?.apply(p)?)
    }

    /// The `w` with `act(1, p) = root^w · p`, or `None` when `p` mixes weights.
    /// The zero polynomial reports weight 0.
    pub fn weight_of(&self, p: &Polynomial<F>) -> Result<Option<u32>, ActionError> {
        let image = self.act(1, p)?;
        let mut scaled = p.clone();
        for w in 0..self.order() {
            if image == scaled {
                return Ok(Some(w));
            }
            scaled = scaled.scale(&self.root);
        }
        Ok(None)
    }
}

/// Number of monomials of degree `m` and torsion weight `w` (mod d), by
/// dynamic programming over the variables. Degree-0 parameters are ignored.
pub fn weight_space_dim(desc: &RingDescriptor, m: u32, w: u32) -> u64 {
    weight_space_table(desc, m)[m as usize][(w % desc.torsion_order()) as usize]
}

/// `table[k][w]` = number of monomials of degree `k` and weight `w`, for
/// `k ≤ max_degree`.
pub fn weight_space_table(desc: &RingDescriptor, max_degree: u32) -> Vec<Vec<u64>> {
    let d = desc.torsion_order() as usize;
    let n = max_degree as usize;
    let mut table = vec![vec![0u64; d]; n + 1];
    table[0][0] = 1;
    for v in desc.vars().iter().filter(|v| !v.is_parameter()) {
        let (dv, wv) = (v.degree as usize, v.weight as usize);
        // Unbounded knapsack: ascending degree lets the variable repeat.
        for k in dv..=n {
            for w in 0..d {
                let add = table[k - dv][(w + d - wv) % d];
                table[k][w] += add;
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::arith::{Cyc3, Cyc4, Cyc5, Rational};
    use crate::poly::enumerate_monomials;

    fn z5() -> Arc<RingDescriptor> {
        RingDescriptor::new([("x1", 1, 1), ("x2", 1, 2), ("x3", 1, 3), ("x4", 1, 4)], 5, 5).unwrap()
    }

    fn z4() -> Arc<RingDescriptor> {
        RingDescriptor::new([("x1", 1, 1), ("x2", 1, 2), ("x3", 1, 3), ("y1", 2, 1), ("y3", 2, 3)], 4, 4).unwrap()
    }

    fn z3() -> Arc<RingDescriptor> {
        RingDescriptor::new(
            [("x2", 1, 2), ("y0", 2, 0), ("y1", 2, 1), ("y2", 2, 2), ("z1", 3, 1), ("z2", 3, 2)],
            3,
            3,
        )
        .unwrap()
    }

    #[test]
    fn generator_scales_variables() {
        let d = z5();
        let a = CyclicAction::<Cyc5>::new(&d).unwrap();
        let x1 = Polynomial::parse("x1", &d).unwrap();
        assert_eq!(a.act(1, &x1).unwrap(), Polynomial::parse("z5*x1", &d).unwrap());
        let p = Polynomial::parse("x1^2*x3 + 1/3*x4 - z5*x2^5", &d).unwrap();
        assert_eq!(a.act(0, &p).unwrap(), p);
        assert_eq!(a.act(5, &p).unwrap(), p);
    }

    #[test]
    fn weights_of_polynomials() {
        let d = z3();
        let a = CyclicAction::<Cyc3>::new(&d).unwrap();
        assert_eq!(a.weight_of(&Polynomial::parse("x2^2*y1", &d).unwrap()).unwrap(), Some(2));
        let d5 = z5();
        let a5 = CyclicAction::<Cyc5>::new(&d5).unwrap();
        assert_eq!(a5.weight_of(&Polynomial::parse("x1 + x2", &d5).unwrap()).unwrap(), None);
    }

    #[test]
    fn roots_are_validated() {
        let d = z4();
        assert!(CyclicAction::<Cyc4>::with_root(&d, -Cyc4::one()).is_err());
        assert!(CyclicAction::<Cyc4>::with_root(&d, -Cyc4::zeta()).is_ok());
        let q = RingDescriptor::new([("x", 1, 1)], 3, 1).unwrap();
        assert_eq!(
            CyclicAction::<Rational>::new(&q).unwrap_err(),
            ActionError::NoRoot { order: 3, field: 1 }
        );
    }

    #[test]
    fn weight_space_examples() {
        assert_eq!(weight_space_dim(&z5(), 1, 0), 0);
        assert_eq!((0..4).map(|w| weight_space_dim(&z4(), 1, w)).collect::<Vec<_>>(), vec![0, 1, 1, 1]);
        assert_eq!(weight_space_dim(&z5(), 5, 0), 12);
    }

    #[test]
    fn weight_spaces_match_enumeration() {
        for desc in [z3(), z4(), z5()] {
            let table = weight_space_table(&desc, 9);
            for m in 0..=9u32 {
                let total = enumerate_monomials(&desc, m, None).len() as u64;
                assert_eq!(table[m as usize].iter().sum::<u64>(), total);
                for w in 0..desc.torsion_order() {
                    assert_eq!(table[m as usize][w as usize], enumerate_monomials(&desc, m, Some(w)).len() as u64);
                }
            }
        }
    }

    fn random_poly(desc: &Arc<RingDescriptor>, seed: &[i64]) -> Polynomial<Cyc5> {
        let ms = enumerate_monomials(desc, 2, None);
        Polynomial::from_terms(
            desc,
            ms.into_iter().zip(seed).map(|(m, &c)| (m, Cyc5::from_i64(c) + Cyc5::zeta_pow(c))),
        )
    }

    proptest! {
        #[test]
        fn action_is_a_ring_homomorphism(s in prop::collection::vec(-3i64..4, 10), t in prop::collection::vec(-3i64..4, 10), k in -7i64..8) {
            let d = z5();
            let a = CyclicAction::<Cyc5>::new(&d).unwrap();
            let (p, q) = (random_poly(&d, &s), random_poly(&d, &t));
            prop_assert_eq!(a.act(k, &(&p * &q)).unwrap(), &a.act(k, &p).unwrap() * &a.act(k, &q).unwrap());
            prop_assert_eq!(a.act(k, &(&p + &q)).unwrap(), &a.act(k, &p).unwrap() + &a.act(k, &q).unwrap());
            prop_assert_eq!(a.act(k + 5, &p).unwrap(), a.act(k, &p).unwrap());
        }
    }
}
