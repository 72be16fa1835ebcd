use num_rational::BigRational;
use proptest::prelude::*;

use zmult_core::corpus::bundled;
use zmult_core::deformation::{default_samples, mu_profile, GermFamily};
use zmult_core::equisingularity::discriminate;
use zmult_core::foliation::{vf_milnor, vf_multiplicity, VectorField};
use zmult_core::milnor::{milnor_number, truncated_dim_oracle, MilnorValue, OracleDim};
use zmult_core::monodromy::{invert_lefschetz, SSequence};
use zmult_core::{Coeff, LineDirection, Poly};

fn small_coeff() -> impl Strategy<Value = Coeff> {
    (-4i64..=4, -2i64..=2, 1i64..=3).prop_map(|(re, im, den)| Coeff::gaussian(re, im).scaled_by_ratio(1, den))
}

fn poly2(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((0..=max_exp, 0..=max_exp, small_coeff()), 0..max_terms)
        .prop_map(|ts| Poly::from_terms(2, ts.into_iter().map(|(a, b, c)| (vec![a, b], c))).unwrap())
}

/// Nonzero polynomial without constant term.
fn germ2() -> impl Strategy<Value = Poly> {
    poly2(4, 5).prop_filter("nonzero germ", |p| !p.is_zero() && p.constant_term() == Coeff::from_int(0))
}

fn invertible_matrix() -> impl Strategy<Value = [[i64; 2]; 2]> {
    [[-2i64..=2, -2i64..=2], [-2i64..=2, -2i64..=2]]
        .prop_filter("invertible", |m| m[0][0] * m[1][1] != m[0][1] * m[1][0])
}

fn linear_images(m: &[[i64; 2]; 2]) -> Vec<Poly> {
    let (x, y) = (Poly::var(2, 0), Poly::var(2, 1));
    m.iter().map(|row| &x.scale(&Coeff::from_int(row[0])) + &y.scale(&Coeff::from_int(row[1]))).collect()
}

fn plane_corpus() -> Vec<Poly> {
    bundled().iter().filter(|e| e.vars.len() == 2).map(|e| e.germ().unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly2(3, 4), g in poly2(3, 4), h in poly2(3, 4)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn order_is_a_valuation(f in germ2(), g in germ2()) {
        prop_assert_eq!((&f * &g).order().unwrap(), f.order().unwrap() + g.order().unwrap());
    }

    #[test]
    fn restriction_is_multiplicative(f in poly2(3, 4), g in poly2(3, 4), a in -3i64..=3, b in 1i64..=3) {
        let line = LineDirection::from_ints(&[a, b]).unwrap();
        let lhs = (&f * &g).restrict_to_line(&line).unwrap();
        let rhs = &f.restrict_to_line(&line).unwrap() * &g.restrict_to_line(&line).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn moebius_round_trip(values in proptest::collection::btree_map(1u32..=30, -100i64..=100, 0..10)) {
        let s: std::collections::BTreeMap<u32, i64> = values.into_iter().filter(|(_, v)| *v != 0).collect();
        let lam = SSequence::from_map(s.clone()).lefschetz(30);
        let back: std::collections::BTreeMap<u32, i64> = invert_lefschetz(&lam).nonzero().collect();
        prop_assert_eq!(back, s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn milnor_is_linear_coordinate_invariant(idx in 0usize..64, m in invertible_matrix()) {
        let corpus = plane_corpus();
        let f = &corpus[idx % corpus.len()];
        let g = f.substitute(&linear_images(&m)).unwrap();
        prop_assert_eq!(milnor_number(&g).unwrap().mu, milnor_number(f).unwrap().mu);
        prop_assert_eq!(g.order().unwrap(), f.order().unwrap());
    }

    #[test]
    fn engine_matches_oracle_on_random_germs(a in 2u32..=5, b in 2u32..=5, extra in poly2(6, 4)) {
        // Pure powers make most of these isolated; the rest must agree on
        // non-isolation too.
        let base = Poly::from_terms(2, [(vec![a, 0], Coeff::from_int(1)), (vec![0, b], Coeff::from_int(1))]).unwrap();
        let tail: Poly = Poly::from_terms(
            2,
            extra.terms().filter(|(m, _)| m.degree() >= 2).map(|(m, c)| (m.exponents().to_vec(), c.clone())),
        ).unwrap();
        let f = &base + &tail;
        prop_assume!(f.order().map(|k| k >= 2).unwrap_or(false));
        let mu = milnor_number(&f).unwrap().mu;
        let oracle = truncated_dim_oracle(&f.jacobian(), 40).unwrap();
        match mu {
            MilnorValue::Finite(m) => prop_assert_eq!(oracle, OracleDim::Dim(m as usize)),
            MilnorValue::NotIsolated => prop_assert_eq!(oracle, OracleDim::Unstable),
        }
    }

    #[test]
    fn engine_matches_oracle_in_three_variables(
        exps in [2u32..=4, 2u32..=4, 2u32..=4],
        extra in proptest::collection::vec(([0u32..=4, 0u32..=4, 0u32..=4], small_coeff()), 0..4),
    ) {
        // Tail terms above the weighted diagonal keep the germ semi-quasihomogeneous.
        let pure = (0..3).map(|i| {
            let mut e = vec![0; 3];
            e[i] = exps[i];
            (e, Coeff::from_int(1))
        });
        let above = |e: &[u32; 3]| {
            let l = exps.iter().product::<u32>();
            e.iter().zip(exps.iter()).map(|(ei, ai)| ei * (l / ai)).sum::<u32>() > l
        };
        let tail = extra.into_iter().filter(|(e, _)| above(e)).map(|(e, c)| (e.to_vec(), c));
        let f = Poly::from_terms(3, pure.chain(tail)).unwrap();
        let expected: u32 = exps.iter().map(|a| a - 1).product();
        prop_assert_eq!(milnor_number(&f).unwrap().mu, MilnorValue::Finite(expected as u64));
        prop_assert_eq!(truncated_dim_oracle(&f.jacobian(), 14).unwrap(), OracleDim::Dim(expected as usize));
    }

    #[test]
    fn mu_does_not_grow_near_zero(a in 2u32..=5, b in 2u32..=5, g in germ2()) {
        let base = Poly::from_terms(2, [(vec![a, 0], Coeff::from_int(1)), (vec![0, b], Coeff::from_int(1))]).unwrap();
        let fam = GermFamily::new(vec![(base, 0), (g, 1)]).unwrap();
        let ts = [BigRational::from_integer(0.into()), BigRational::new(1.into(), 1009.into())];
        let prof = mu_profile(&fam, &ts).unwrap();
        let mu0 = prof.samples[0].mu.finite().unwrap();
        if let MilnorValue::Finite(m) = prof.samples[1].mu {
            prop_assert!(m <= mu0, "{} > {}", m, mu0);
            prop_assert!(prof.jump.unwrap() >= 0);
        }
    }

    #[test]
    fn upper_tail_keeps_mu_constant(a in 2u32..=5, b in 2u32..=5, g in poly2(6, 5)) {
        let base = Poly::from_terms(2, [(vec![a, 0], Coeff::from_int(1)), (vec![0, b], Coeff::from_int(1))]).unwrap();
        let tail = Poly::from_terms(
            2,
            g.terms()
                .filter(|(m, _)| m.exponents()[0] * b + m.exponents()[1] * a > a * b)
                .map(|(m, c)| (m.exponents().to_vec(), c.clone())),
        ).unwrap();
        let fam = GermFamily::new(vec![(base, 0), (tail, 1)]).unwrap();
        let prof = mu_profile(&fam, &default_samples()).unwrap();
        prop_assert!(prof.is_constant());
        prop_assert_eq!(prof.samples[0].mu, MilnorValue::Finite(((a - 1) * (b - 1)) as u64));
    }

    #[test]
    fn discriminator_is_symmetric(i in 0usize..64, j in 0usize..64) {
        let corpus = plane_corpus();
        let (f, g) = (&corpus[i % corpus.len()], &corpus[j % corpus.len()]);
        let fg = discriminate(f, g).unwrap();
        let gf = discriminate(g, f).unwrap();
        prop_assert_eq!(fg.verdict, gf.verdict);
        prop_assert_eq!(fg.mu, [gf.mu[1], gf.mu[0]]);
    }

    #[test]
    fn discriminator_is_coordinate_invariant(i in 0usize..64, j in 0usize..64, m in invertible_matrix()) {
        let corpus = plane_corpus();
        let (f, g) = (&corpus[i % corpus.len()], &corpus[j % corpus.len()]);
        let moved = g.substitute(&linear_images(&m)).unwrap();
        prop_assert_eq!(discriminate(f, g).unwrap().verdict, discriminate(f, &moved).unwrap().verdict);
    }

    #[test]
    fn vector_field_invariants_under_linear_maps(idx in 0usize..64, m in invertible_matrix(), mix in invertible_matrix()) {
        let corpus = plane_corpus();
        let f = &corpus[idx % corpus.len()];
        let x = VectorField::hamiltonian(f).unwrap();
        let images = linear_images(&m);
        let pulled: Vec<Poly> = x.components().iter().map(|c| c.substitute(&images).unwrap()).collect();
        let mixed: Vec<Poly> = mix
            .iter()
            .map(|row| &pulled[0].scale(&Coeff::from_int(row[0])) + &pulled[1].scale(&Coeff::from_int(row[1])))
            .collect();
        let y = VectorField::new(mixed).unwrap();
        prop_assert_eq!(vf_milnor(&y).unwrap(), vf_milnor(&x).unwrap());
        prop_assert_eq!(vf_multiplicity(&y), vf_multiplicity(&x));
    }
}

#[test]
fn non_isolated_in_three_variables() {
    for text in ["x^2+y^2", "x*y*z", "x^2+2*x*y+y^2+z^3", "x^2*y+z^2", "x^3+y^3", "x^2+y^2*z^2", "x*y+x*z^2"] {
        let f = zmult_core::parse_poly(text, &["x", "y", "z"]).unwrap();
        assert_eq!(milnor_number(&f).unwrap().mu, MilnorValue::NotIsolated, "{text}");
        assert_eq!(truncated_dim_oracle(&f.jacobian(), 14).unwrap(), OracleDim::Unstable, "{text}");
    }
}

#[test]
fn gradient_field_multiplicity() {
    for e in bundled() {
        let f = e.germ().unwrap();
        let x = VectorField::gradient(&f).unwrap();
        assert_eq!(vf_multiplicity(&x), f.order().unwrap() - 1, "{}", e.name);
    }
}
