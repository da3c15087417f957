//! Exact scalars: Gaussian rationals, Laurent polynomials in named
//! parameters, matrices over them, plus a few numeric helpers.

mod eigen;
mod gauss;
mod laurent;
mod matrix;
mod parse;
mod perm;

pub use eigen::{generalized_eigenvalues, symmetric_eigenvalues};
pub use gauss::GaussRat;
pub use laurent::{Monomial, Param, Scalar};
pub use matrix::Mat;
pub use perm::levi_civita;

use std::collections::HashMap;

/// Convenience builder for evaluation points: `point(&[("q", GaussRat::int(2))])`.
pub fn point(vals: &[(&str, GaussRat)]) -> HashMap<String, GaussRat> {
    vals.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        let names = ["q", "p", "kappa"];
        prop::collection::vec((-3i64..4, 1i64..4, 0usize..3, -2i32..3, any::<bool>()), 0..4).prop_map(
            move |terms| {
                terms
                    .into_iter()
                    .map(|(n, d, k, e, im)| {
                        let c = if im { GaussRat::complex((0, 1), (n, d)) } else { GaussRat::ratio(n, d) };
                        Scalar::term(Monomial::var(Param::new(names[k]), e), c)
                    })
                    .sum()
            },
        )
    }

    #[test]
    fn laurent_inverse_and_derivative() {
        let q = Scalar::param("q");
        let qi = q.inv_unit().unwrap();
        assert!((&q * &qi).is_one());
        let f = &q.pow(3) + &qi;
        let df = f.derivative(Param::new("q"));
        assert_eq!(df, &Scalar::int(3) * &q.pow(2) - Scalar::param_pow("q", -2));
    }

    #[test]
    fn evaluation_errors() {
        let f = Scalar::param_pow("q", -1);
        assert!(matches!(f.evaluate_at(&point(&[])), Err(crate::error::Error::MissingParameter(_))));
        assert!(matches!(
            f.evaluate_at(&point(&[("q", GaussRat::zero())])),
            Err(crate::error::Error::DivisionByZero(_))
        ));
        let g = Scalar::param("q") + Scalar::param("p");
        let s = g.specialize(&point(&[("q", GaussRat::int(2))])).unwrap();
        assert_eq!(s, Scalar::int(2) + Scalar::param("p"));
    }

    #[test]
    fn parse_examples() {
        let s = Scalar::parse("q^-1 - p").unwrap();
        assert_eq!(s, Scalar::param_pow("q", -1) - Scalar::param("p"));
        assert_eq!(Scalar::parse("(1 - q^-2)*i").unwrap().to_string(), "-i*q^-2 + i");
        assert!(Scalar::parse("1/(q+1)").is_err());
        assert!(Scalar::parse("q^99999999999").is_err());
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn display_roundtrip(a in small_scalar()) {
            prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_scalar(), b in small_scalar()) {
            let pt = point(&[("q", GaussRat::ratio(3, 2)), ("p", GaussRat::complex((1, 1), (1, 2))), ("kappa", GaussRat::int(-2))]);
            let lhs = (&a * &b).evaluate_at(&pt).unwrap();
            let rhs = &a.evaluate_at(&pt).unwrap() * &b.evaluate_at(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
