use std::cmp::Ordering;

use metabel::diffcom::{circ, derive, embed, metabelian_reduce, DiffMonomial, DiffPolynomial};
use metabel::enumerate::{enumerate_multilinear, for_each_multilinear, multilinear_count, shapes, Limits};
use metabel::mlieadm::{depolarize, mla_mul, mla_nf, mla_nf_term, mla_sym_generators, polarize};
use metabel::mnov::{nov_mul, nov_nf, nov_nf_term, nov_sym_generators};
use metabel::oracle::{consequence_basis, invariant_basis, ColumnRanking, IdentitySet};
use metabel::parse::{parse_poly, parse_term};
use metabel::poly::{apply_permutation, coef, Coefficient, Permutation, Polynomial};
use metabel::term::{format_term, term_order, OpSymbol, Signature, Term};
use proptest::prelude::*;

fn ops_of(sig: Signature) -> Vec<OpSymbol> {
    sig.ops().to_vec()
}

/// A term of degree `1..=max` over `x1..x{vars}`.
fn any_term(sig: Signature, max: usize, vars: u32) -> impl Strategy<Value = Term> {
    (1..=max).prop_flat_map(move |n| {
        let shape_count = shapes(n).len();
        (
            0..shape_count,
            prop::collection::vec(prop::sample::select(ops_of(sig)), n - 1),
            prop::collection::vec(1..=vars, n),
        )
            .prop_map(move |(s, ops, leaves)| shapes(n)[s].build(&ops, &leaves))
    })
}

/// A multilinear term of degree exactly `n` in `x1..xn`.
fn multilinear_term(sig: Signature, n: usize) -> impl Strategy<Value = Term> {
    let labels: Vec<u32> = (1..=n as u32).collect();
    (
        0..shapes(n).len(),
        prop::collection::vec(prop::sample::select(ops_of(sig)), n - 1),
        Just(labels).prop_shuffle(),
    )
        .prop_map(move |(s, ops, leaves)| shapes(n)[s].build(&ops, &leaves))
}

fn any_poly(sig: Signature, max: usize, vars: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-3i64..=3, any_term(sig, max, vars)), 0..5)
        .prop_map(|items| items.into_iter().map(|(c, t)| (coef(c), t)).collect())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn action_generators(n: usize) -> Vec<Permutation> {
    vec![Permutation::transposition(n, 1, 2), Permutation::long_cycle(n)]
}

// terms and polynomials

#[test]
fn format_parse_round_trip_exhaustive() {
    let limits = Limits::default();
    for (sig, n) in [(Signature::Star, 5), (Signature::Polarized, 4)] {
        for t in enumerate_multilinear(sig, n, &limits).unwrap() {
            assert_eq!(parse_term(&format_term(&t), sig).unwrap(), t);
        }
    }
}

#[test]
fn multilinear_counts_match_closed_form() {
    let catalan = [1u64, 1, 2, 5, 14, 42];
    let mut fact = 1u64;
    for n in 1..=6usize {
        fact *= n as u64;
        for sig in [Signature::Star, Signature::Polarized] {
            let expected = (sig.ops().len() as u64).pow(n as u32 - 1) * catalan[n - 1] * fact;
            let mut count = 0u64;
            for_each_multilinear(sig, n, |_| count += 1);
            assert_eq!(count, expected);
            assert_eq!(multilinear_count(sig, n), expected);
        }
    }
}

#[test]
fn term_order_is_strict_total() {
    let mut terms = enumerate_multilinear(Signature::Star, 4, &Limits::default()).unwrap();
    terms.sort_by(term_order);
    for i in 0..terms.len() {
        assert_eq!(term_order(&terms[i], &terms[i]), Ordering::Equal);
        for j in i + 1..terms.len() {
            assert_eq!(term_order(&terms[i], &terms[j]), Ordering::Less);
            assert_eq!(term_order(&terms[j], &terms[i]), Ordering::Greater);
        }
    }
}

proptest! {
    #[test]
    fn random_terms_round_trip(t in any_term(Signature::Polarized, 7, 4)) {
        prop_assert_eq!(parse_term(&format_term(&t), Signature::Polarized).unwrap(), t);
    }

    #[test]
    fn action_composes(
        p in any_poly(Signature::Star, 6, 6),
        (s, t) in (permutation(6), permutation(6)),
    ) {
        let once = apply_permutation(&apply_permutation(&p, &s).unwrap(), &t).unwrap();
        prop_assert_eq!(once, apply_permutation(&p, &t.compose(&s)).unwrap());
    }

    #[test]
    fn polynomial_arithmetic_laws(
        p in any_poly(Signature::Star, 4, 3),
        q in any_poly(Signature::Star, 4, 3),
        r in any_poly(Signature::Star, 4, 3),
        c in -4i64..=4,
    ) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        let c = coef(c);
        prop_assert_eq!((&p + &q).scale(&c), &p.scale(&c) + &q.scale(&c));
        prop_assert!((&p - &p).is_empty());
        prop_assert!((&p + &(-&p)).is_zero());
    }
}

// metabelian Novikov

proptest! {
    #[test]
    fn nov_nf_idempotent_and_linear(
        p in any_poly(Signature::Star, 6, 3),
        q in any_poly(Signature::Star, 6, 3),
        c in -3i64..=3,
    ) {
        let np = nov_nf(&p).unwrap().to_polynomial();
        prop_assert_eq!(nov_nf(&np).unwrap().to_polynomial(), np.clone());
        let c = coef(c);
        let lhs = nov_nf(&(&p.scale(&c) + &q)).unwrap().to_polynomial();
        let rhs = &np.scale(&c) + &nov_nf(&q).unwrap().to_polynomial();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nov_nf_equivariant(
        (t, s) in (1..=5usize).prop_flat_map(|n| (multilinear_term(Signature::Star, n), permutation(n))),
    ) {
        let p = Polynomial::from_term(t.clone());
        let direct = nov_nf(&apply_permutation(&p, &s).unwrap()).unwrap();
        let via = nov_nf(&apply_permutation(&nov_nf_term(&t).unwrap().to_polynomial(), &s).unwrap()).unwrap();
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn nov_table_matches_raw_products(
        u in any_term(Signature::Star, 4, 3),
        v in any_term(Signature::Star, 4, 3),
    ) {
        prop_assume!(u.degree() + v.degree() <= 6);
        let table = nov_mul(&nov_nf_term(&u).unwrap(), &nov_nf_term(&v).unwrap());
        prop_assert_eq!(table, nov_nf_term(&Term::star(u, v)).unwrap());
    }
}

#[test]
fn nov_generators_are_symmetric_except_literal_p32() {
    for n in 1..=7 {
        for g in nov_sym_generators(n) {
            let base = nov_nf(&g.poly).unwrap();
            assert!(!base.is_zero());
            let symmetric = n < 2
                || action_generators(n)
                    .iter()
                    .all(|s| nov_nf(&apply_permutation(&g.poly, s).unwrap()).unwrap() == base);
            assert_eq!(symmetric, g.label != "p_3,2", "{}", g.label);
        }
    }
}

#[test]
fn corrected_degree_three_generator_is_symmetric() {
    // image of x1''x2x3 + x2''x1x3 + x3''x1x2 plus p_3,1
    let p = parse_poly(
        "((x1*x2)*x3) + ((x2*x1)*x3) + ((x3*x1)*x2) - (x1*(x2*x3)) + (x3*(x2*x1))",
        None,
    )
    .unwrap();
    let base = nov_nf(&p).unwrap();
    for s in action_generators(3) {
        assert_eq!(nov_nf(&apply_permutation(&p, &s).unwrap()).unwrap(), base);
    }
    let mut expected = embed_poly(&nov_sym_generators(3).remove(0).poly);
    for (i, j, k) in [(1, 2, 3), (2, 1, 3), (3, 1, 2)] {
        let m = DiffMonomial::new(vec![(i, 2), (j, 0), (k, 0)]);
        expected.add_scaled(&DiffPolynomial::monomial(m), &coef(1));
    }
    assert_eq!(metabelian_reduce(&embed_poly(&p)).unwrap(), metabelian_reduce(&expected).unwrap());
}

fn embed_poly(p: &Polynomial) -> DiffPolynomial {
    let mut out = DiffPolynomial::zero();
    for (t, c) in p.iter() {
        out.add_scaled(&embed(t).unwrap(), c);
    }
    out
}

// differential model

fn diff_monomial() -> impl Strategy<Value = DiffMonomial> {
    prop::collection::vec((1u32..=4, 0u32..=3), 1..=4).prop_map(DiffMonomial::new)
}

proptest! {
    #[test]
    fn derivation_rule(a in diff_monomial(), b in diff_monomial()) {
        let u = DiffPolynomial::monomial(a);
        let v = DiffPolynomial::monomial(b);
        let mut leibniz = derive(&u).mul(&v);
        leibniz.add_scaled(&u.mul(&derive(&v)), &coef(1));
        prop_assert_eq!(derive(&u.mul(&v)), leibniz);
    }

    #[test]
    fn embedding_has_weight_minus_one(t in any_term(Signature::Star, 6, 6)) {
        for (m, _) in embed(&t).unwrap().iter() {
            prop_assert_eq!(m.weight(), -1);
        }
    }

    #[test]
    fn embedding_is_a_homomorphism_modulo_reduction(
        (u, v) in (1..=5usize).prop_flat_map(|a| (1..=6 - a).prop_flat_map(move |b| {
            (multilinear_term(Signature::Star, a), multilinear_term(Signature::Star, b)
                .prop_map(move |t| t.map_leaves(&|i| i + a as u32)))
        })),
    ) {
        let lhs = metabelian_reduce(&embed(&Term::star(u.clone(), v.clone())).unwrap()).unwrap();
        let rhs = metabelian_reduce(&circ(&embed(&u).unwrap(), &embed(&v).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

// metabelian Lie-admissible

proptest! {
    #[test]
    fn mla_nf_idempotent_and_linear(
        p in any_poly(Signature::Polarized, 6, 4),
        q in any_poly(Signature::Polarized, 6, 4),
        c in -3i64..=3,
    ) {
        let np = mla_nf(&p).unwrap();
        prop_assert_eq!(mla_nf(&np).unwrap(), np.clone());
        let c = coef(c);
        prop_assert_eq!(mla_nf(&(&p.scale(&c) + &q)).unwrap(), &np.scale(&c) + &mla_nf(&q).unwrap());
    }

    #[test]
    fn polarization_round_trips(
        p in any_poly(Signature::Star, 5, 3),
        q in any_poly(Signature::Polarized, 5, 3),
    ) {
        prop_assert_eq!(depolarize(&polarize(&p).unwrap()).unwrap(), p);
        let d = depolarize(&q).unwrap();
        prop_assert_eq!(depolarize(&polarize(&d).unwrap()).unwrap(), d);
    }

    #[test]
    fn mla_table_matches_raw_products(
        u in any_term(Signature::Polarized, 4, 3),
        v in any_term(Signature::Polarized, 4, 3),
        op in prop::sample::select(vec![OpSymbol::Bracket, OpSymbol::Brace]),
    ) {
        prop_assume!(u.degree() + v.degree() <= 6);
        let table = mla_mul(&mla_nf_term(&u).unwrap(), &mla_nf_term(&v).unwrap(), op).unwrap();
        prop_assert_eq!(table, mla_nf_term(&Term::node(op, u, v)).unwrap());
    }

    #[test]
    fn mla_nf_equivariant(
        (t, s) in (1..=5usize).prop_flat_map(|n| (multilinear_term(Signature::Polarized, n), permutation(n))),
    ) {
        let p = Polynomial::from_term(t);
        let direct = mla_nf(&apply_permutation(&p, &s).unwrap()).unwrap();
        let via = mla_nf(&apply_permutation(&mla_nf(&p).unwrap(), &s).unwrap()).unwrap();
        prop_assert_eq!(direct, via);
    }
}

#[test]
fn mla_generators_symmetric_iff_sequence_ends_white() {
    for n in 3..=6 {
        for g in mla_sym_generators(n) {
            let base = mla_nf(&g.poly).unwrap();
            assert!(!base.is_zero());
            let symmetric = action_generators(n)
                .iter()
                .all(|s| mla_nf(&apply_permutation(&g.poly, s).unwrap()).unwrap() == base);
            assert_eq!(symmetric, g.sequence.last() == Some(&OpSymbol::Brace), "{}", g.label);
        }
    }
}

// oracle

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]
    #[test]
    fn invariant_vectors_are_fixed(s in permutation(4)) {
        let ids = IdentitySet::mnov();
        let limits = Limits::default();
        let basis = consequence_basis(&ids, 4, &ColumnRanking::Default, &limits).unwrap();
        for v in invariant_basis(&ids, 4, &limits).unwrap() {
            let moved = basis.reduce(&apply_permutation(&v, &s).unwrap()).unwrap();
            prop_assert_eq!(moved, basis.reduce(&v).unwrap());
        }
    }
}

#[test]
fn coefficients_stay_exact() {
    let half: Coefficient = metabel::poly::ratio(1, 2);
    let p = polarize(&parse_poly("(x1*x2)", None).unwrap()).unwrap();
    assert!(p.iter().all(|(_, c)| *c == half));
}
