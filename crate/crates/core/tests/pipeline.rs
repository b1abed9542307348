use godeaux_core::arith::{rat, Rational};
use godeaux_core::poly::Polynomial;
use godeaux_core::quotient::GradedPresentation;
use godeaux_core::subring::{Condition, MembershipPredicate};

#[test]
fn twisted_cubic_from_text() {
    let text = "field Q\ntorsion_order 1\nx 1 0\ny 1 0\nz 1 0\nw 1 0\n\
                q0 = x*z - y^2\nq1 = x*w - y*z\nq2 = y*w - z^2\n";
    let pres = GradedPresentation::<Rational>::parse(text).unwrap();
    let table = pres.hilbert(6).unwrap();
    assert_eq!((0..=6).map(|m| table.total(m)).collect::<Vec<_>>(), [1, 4, 7, 10, 13, 16, 19]);
    assert!(!pres.koszul_check(4).unwrap());
}

#[test]
fn specialization_then_membership() {
    let text = "field Q\ntorsion_order 2\nx 1 1\ny 1 1\nt 0 0\nr = x^2 - t*y^2\n";
    let pres = GradedPresentation::<Rational>::parse(text).unwrap();
    let p = Polynomial::parse("x^3*y - t*x*y^3", pres.descriptor()).unwrap();
    let cert = pres.reduces_to_zero(&p).unwrap().expect("in the ideal");
    assert_eq!(cert.recombine(&pres), p);

    let at_one = pres.specialize(&[("t".to_string(), rat(1, 1))].into_iter().collect()).unwrap();
    assert_eq!(at_one.hilbert(3).unwrap().row(3), [0, 2]);
}

#[test]
fn even_part_of_a_polynomial_ring() {
    let text = "field Q\ntorsion_order 2\nu 1 1\nv 1 1\n";
    let pres = GradedPresentation::<Rational>::parse(text).unwrap();
    let pred = MembershipPredicate::new(pres, vec![Condition::Weight(0)]).unwrap();
    let p = pred.presentation(6).unwrap();
    assert_eq!(p.generators.len(), 3);
    assert_eq!(p.total_relations(), 1);
    assert_eq!(p.nonzero_relation_census().into_iter().collect::<Vec<_>>(), [(4, 1)]);
}
