use std::collections::HashMap;

use proptest::prelude::*;
use wallcross_polyring::{
    parse_ideal_list, Ideal, Monomial, MonomialOrder, Polynomial, Rational, Ring,
};

fn ring3() -> Ring {
    Ring::new(["x", "y", "z"]).unwrap()
}

fn monomial_poly(r: &Ring, e: &[u32]) -> Polynomial {
    Polynomial::monomial(r, Monomial::from_exponents(e.to_vec()), Rational::from_integer(1.into()))
}

/// Minimal generators of a monomial ideal, used as a canonical form.
fn minimal_monomials(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort();
    ms.dedup();
    let all = ms.clone();
    ms.retain(|m| !all.iter().any(|o| o != m && o.divides(m)));
    ms
}

fn basis_monomials(i: &Ideal) -> Vec<Monomial> {
    let mut ms: Vec<Monomial> = i
        .basis()
        .polys
        .iter()
        .map(|p| {
            assert_eq!(p.terms().len(), 1, "monomial ideal basis must be monomial");
            p.terms()[0].0.clone()
        })
        .collect();
    ms.sort();
    ms
}

fn monomial_set() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..4)
}

fn small_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -3i64..4), 1..4)
}

fn build(r: &Ring, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        r,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e.clone()), Rational::from_integer((*c).into()))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn monomial_intersection_matches_lcm_rule(a in monomial_set(), b in monomial_set()) {
        let r = ring3();
        let ia = Ideal::new(&r, a.iter().map(|e| monomial_poly(&r, e)).collect()).unwrap();
        let ib = Ideal::new(&r, b.iter().map(|e| monomial_poly(&r, e)).collect()).unwrap();
        let oracle = minimal_monomials(
            a.iter()
                .flat_map(|x| b.iter().map(move |y| {
                    Monomial::from_exponents(x.clone()).lcm(&Monomial::from_exponents(y.clone()))
                }))
                .collect(),
        );
        prop_assert_eq!(basis_monomials(&ia.intersect(&ib)), oracle);
    }

    #[test]
    fn monomial_colon_matches_exponent_rule(a in monomial_set(), f in prop::collection::vec(0u32..3, 3)) {
        let r = ring3();
        let ia = Ideal::new(&r, a.iter().map(|e| monomial_poly(&r, e)).collect()).unwrap();
        let fm = Monomial::from_exponents(f.clone());
        let oracle = minimal_monomials(
            a.iter()
                .map(|e| {
                    let m = Monomial::from_exponents(e.clone());
                    m.div(&m.gcd(&fm))
                })
                .collect(),
        );
        let colon = ia.colon(&monomial_poly(&r, &f)).unwrap();
        prop_assert_eq!(basis_monomials(&colon), oracle);
    }

    #[test]
    fn normal_form_is_linear(p in small_poly(), q in small_poly()) {
        let r = ring3();
        let i = Ideal::new(
            &r,
            parse_ideal_list(&r, "(x^2 - y*z, y^2 - x + 1, x*z^2)", &HashMap::new()).unwrap(),
        ).unwrap();
        let (p, q) = (build(&r, &p), build(&r, &q));
        let lhs = i.normal_form(&(&p + &q));
        let rhs = i.normal_form(&(&i.normal_form(&p) + &i.normal_form(&q)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn colon_and_intersection_containments(a in small_poly(), b in small_poly(), f in small_poly()) {
        let r = ring3();
        let i = Ideal::new(&r, vec![build(&r, &a), build(&r, &b)]).unwrap();
        let f = build(&r, &f);
        prop_assume!(!f.is_zero());
        let colon = i.colon(&f).unwrap();
        prop_assert!(colon.contains_ideal(&i));
        for g in colon.generators() {
            prop_assert!(i.contains(&(&f * g)));
        }
        let j = Ideal::new(&r, vec![f.clone()]).unwrap();
        let meet = i.intersect(&j);
        prop_assert!(i.contains_ideal(&meet));
        prop_assert!(j.contains_ideal(&meet));
    }
}

#[test]
fn basis_is_independent_of_generator_order() {
    let r = ring3();
    let gens = parse_ideal_list(
        &r,
        "(x*y - z^2, x^2*z - y, y^3 - x*z, x + y + z - 1)",
        &HashMap::new(),
    )
    .unwrap();
    let reference = Ideal::new(&r, gens.clone()).unwrap().basis().clone();
    // all 24 permutations
    let mut idx: Vec<usize> = (0..gens.len()).collect();
    let mut count = 0;
    permute(&mut idx, 0, &mut |perm| {
        let permuted: Vec<Polynomial> = perm.iter().map(|&i| gens[i].clone()).collect();
        let b = Ideal::new(&r, permuted).unwrap().basis().clone();
        assert_eq!(b, reference);
        count += 1;
    });
    assert_eq!(count, 24);
    for order in [MonomialOrder::Lex(vec![0, 1, 2]), MonomialOrder::Block(vec![2])] {
        let b1 = Ideal::new(&r, gens.clone()).unwrap().basis_for(&order);
        let mut rev = gens.clone();
        rev.reverse();
        let b2 = Ideal::new(&r, rev).unwrap().basis_for(&order);
        assert_eq!(b1, b2);
    }
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}
