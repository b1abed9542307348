//! Multivariate polynomials over an exact field, bi-graded by a degree weight
//! and a torsion weight modulo `d`.

mod descriptor;
mod monomial;
mod polynomial;
mod text;

pub use descriptor::{RingDescriptor, Variable};
pub use monomial::{enumerate_monomials, enumerate_monomials_capped, Monomial};
pub use polynomial::{Homogeneity, Polynomial, Substitution};
pub use text::parse_named;

use thiserror::Error;

pub use crate::arith::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    DescriptorMismatch,
    #[error("no image given for variable '{0}'")]
    MissingImage(String),
    #[error("unknown variable '{name}'{}", position.map(|p| format!(" at position {p}")).unwrap_or_default())]
    UnknownVariable { name: String, position: Option<usize> },
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<PolyError> },
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;
    use std::sync::Arc;

    use proptest::prelude::*;

    use super::*;
    use crate::arith::{rat, Cyc5, Field, Rational};

    fn z3() -> Arc<RingDescriptor> {
        RingDescriptor::new(
            [("x2", 1, 2), ("y0", 2, 0), ("y1", 2, 1), ("y2", 2, 2), ("z1", 3, 1), ("z2", 3, 2)],
            3,
            1,
        )
        .unwrap()
    }

    fn abc() -> Arc<RingDescriptor> {
        RingDescriptor::new([("a", 1, 0), ("b", 1, 0), ("c", 1, 0)], 1, 1).unwrap()
    }

    fn p(text: &str, desc: &Arc<RingDescriptor>) -> Polynomial<Rational> {
        Polynomial::parse(text, desc).unwrap()
    }

    #[test]
    fn cancellation_and_products() {
        let d = z3();
        let sum = &p("y0*y2 - y1^2 + x2^4", &d) + &p("y1^2 - y0*y2", &d);
        assert_eq!(sum, p("x2^4", &d));
        let e = abc();
        assert_eq!(&p("a+b", &e) * &p("a-b", &e), p("a^2 - b^2", &e));
        let xz = &p("x2", &d) * &p("z1", &d);
        assert_eq!(xz.homogeneity(), Homogeneity::Homogeneous { degree: 4, weight: 0 });
    }

    #[test]
    fn degree_and_weight_of_relations() {
        let d = z3();
        assert_eq!(p("y1*z2 - y2*z1 + x2^3*y0", &d).degree_and_weight(), Some((5, 0)));
        assert_eq!(p("y0^3 - 2*y0*y1*y2 + y2^3", &d).degree_and_weight(), Some((6, 0)));
        assert_eq!(p("x2 + y0", &d).homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(Polynomial::<Rational>::zero(&d).homogeneity(), Homogeneity::Zero);
    }

    #[test]
    fn mismatched_descriptors_are_errors() {
        assert_eq!(p("a", &abc()).checked_add(&p("x2", &z3())), Err(PolyError::DescriptorMismatch));
    }

    #[test]
    fn substitution_restrictions() {
        let e = abc();
        let id_b0: BTreeMap<String, Polynomial<Rational>> =
            [("a", "a"), ("b", "0"), ("c", "c")].iter().map(|(k, v)| (k.to_string(), p(v, &e))).collect();
        assert!(p("a*b", &e).substitute(&id_b0).unwrap().is_zero());

        // (a, b, c) ↦ (0, -(a+c)/2, (c-3a)/2) on 3a²+3b²+c²:
        // 3(a+c)²/4 + (c-3a)²/4 = (12a² + 4c²)/4 = 3a² + c².
        let tau: BTreeMap<String, Polynomial<Rational>> =
            [("a", "0"), ("b", "-1/2*a - 1/2*c"), ("c", "1/2*c - 3/2*a")]
                .iter()
                .map(|(k, v)| (k.to_string(), p(v, &e)))
                .collect();
        let g = p("3*a^2 + 3*b^2 + c^2", &e);
        assert_eq!(g.substitute(&tau).unwrap(), p("3*a^2 + c^2", &e));
        assert_eq!(g.substitute(&id_b0).unwrap(), p("3*a^2 + c^2", &e));

        let mut partial = id_b0.clone();
        partial.remove("c");
        assert_eq!(g.substitute(&partial), Err(PolyError::MissingImage("c".into())));
    }

    #[test]
    fn cyclic_substitution_of_linear_form() {
        let d = RingDescriptor::new([("x1", 1, 1), ("x2", 1, 2), ("x3", 1, 3), ("x4", 1, 4)], 5, 5).unwrap();
        let l0: Polynomial<Cyc5> = Polynomial::parse("x1 + x2 + x3 + x4", &d).unwrap();
        let images: BTreeMap<String, Polynomial<Cyc5>> = (1..=4)
            .map(|i| (format!("x{i}"), Polynomial::parse(&format!("z5^{i}*x{i}"), &d).unwrap()))
            .collect();
        let l1: Polynomial<Cyc5> = Polynomial::parse("z5*x1 + z5^2*x2 + z5^3*x3 + z5^4*x4", &d).unwrap();
        assert_eq!(l0.substitute(&images).unwrap(), l1);
    }

    #[test]
    fn parse_and_render() {
        let e = abc();
        let f = p("a^2-6*a*b+b^2-c^2", &e);
        assert_eq!(f.to_string(), "a^2 - 6*a*b + b^2 - c^2");
        let g = p("12*b^3-a^2*c+6*a*b*c-b^2*c+8*a*c^2-4*b*c^2+c^3", &e);
        assert_eq!(p(&g.to_string(), &e), g);
        assert_eq!(g.degree_and_weight(), Some((3, 0)));
        let err = Polynomial::<Rational>::parse("", &e).unwrap_err();
        assert_eq!(err, PolyError::Parse(crate::arith::lex::ParseError::new(0, "empty input")));
        match Polynomial::<Rational>::parse("a + q", &e) {
            Err(PolyError::UnknownVariable { name, position }) => {
                assert_eq!(name, "q");
                assert_eq!(position, Some(4));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Polynomial::<Rational>::parse("a + * b", &e), Err(PolyError::Parse(_))));
    }

    #[test]
    fn cyclotomic_coefficients_render_and_reparse() {
        let d = RingDescriptor::new([("x1", 1, 1), ("x2", 1, 2)], 5, 5).unwrap();
        let q: Polynomial<Cyc5> = Polynomial::parse("(z5^2 - 1/2)*x1^2 - z5*x1*x2 + 3 + z5^3", &d).unwrap();
        let text = q.to_string();
        assert_eq!(Polynomial::<Cyc5>::parse(&text, &d).unwrap(), q);
    }

    #[test]
    fn normalization_is_primitive() {
        let e = abc();
        let g = p("-1/2*a^2 + 3/4*b*c", &e).normalized();
        assert_eq!(g, p("2*a^2 - 3*b*c", &e));
        assert_eq!(g.leading_term().unwrap().1, rat(2, 1));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial<Rational>> {
        let e = abc();
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..6, 1i64..4), 0..5).prop_map(move |terms| {
            Polynomial::from_terms(
                &e,
                terms.into_iter().map(|((i, j, k), n, d)| (Monomial::new(vec![i, j, k]), rat(n, d))),
            )
        })
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_homomorphism(f in small_poly(), g in small_poly(), s in prop::collection::vec(-3i64..4, 9)) {
            let e = abc();
            let lin = |i: usize| {
                Polynomial::from_terms(&e, (0..3).map(|j| (Monomial::var(3, j), rat(s[3 * i + j], 1))))
            };
            let images: BTreeMap<String, Polynomial<Rational>> =
                ["a", "b", "c"].iter().enumerate().map(|(i, n)| (n.to_string(), lin(i))).collect();
            let lhs = (&f * &g).substitute(&images).unwrap();
            let rhs = &f.substitute(&images).unwrap() * &g.substitute(&images).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = (&f + &g).substitute(&images).unwrap();
            let rhs = &f.substitute(&images).unwrap() + &g.substitute(&images).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn render_parse_round_trip(f in small_poly()) {
            let e = abc();
            prop_assert_eq!(Polynomial::<Rational>::parse(&f.to_string(), &e).unwrap(), f);
        }

        #[test]
        fn homogeneity_is_multiplicative(i in 0u32..4, j in 0u32..4) {
            let d = z3();
            let ms_i = enumerate_monomials(&d, 2 + i, Some(i % 3));
            let ms_j = enumerate_monomials(&d, 3 + j, Some((j + 1) % 3));
            let f = Polynomial::from_terms(&d, ms_i.into_iter().enumerate().map(|(k, m)| (m, rat(k as i64 + 1, 1))));
            let g = Polynomial::from_terms(&d, ms_j.into_iter().enumerate().map(|(k, m)| (m, rat(1, k as i64 + 1))));
            let (df, wf) = f.degree_and_weight().unwrap();
            let (dg, wg) = g.degree_and_weight().unwrap();
            prop_assert_eq!((&f * &g).degree_and_weight(), Some((df + dg, (wf + wg) % 3)));
        }
    }

    #[test]
    fn field_one_is_unit() {
        assert!(<Rational as Field>::one().is_one());
    }
}
