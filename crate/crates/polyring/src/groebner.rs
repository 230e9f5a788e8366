//! Buchberger's algorithm with the coprime-leading-term and chain criteria,
//! followed by inter-reduction to the unique reduced basis.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::{Monomial, MonomialOrder, Polynomial, Rational, Ring};

/// Terms sorted ascending under a fixed order, leading term last.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Monomial, Rational)>,
}

impl Sorted {
    fn new(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| order.compare(&a.0, &b.0));
        Sorted { terms }
    }

    fn lead(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self - c * m * g`
    fn sub_mul(&self, c: &Rational, m: &Monomial, g: &Sorted, order: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < g.terms.len() {
            let shifted = g.terms[j].0.mul(m);
            match order.compare(&self.terms[i].0, &shifted) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((shifted, -(c * &g.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &self.terms[i].1 - c * &g.terms[j].1;
                    if !v.is_zero() {
                        out.push((shifted, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for t in &g.terms[j..] {
            out.push((t.0.mul(m), -(c * &t.1)));
        }
        Sorted { terms: out }
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            let inv = lc.recip();
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
    }

    fn into_poly(self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms)
    }
}

/// Reduces the leading term of `p` until it is not divisible by any leading
/// monomial of `basis`. Lower terms are left alone.
fn top_reduce(p: Sorted, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
    let mut p = p;
    while let Some((lm, lc)) = p.lead().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.lead().is_some_and(|(gm, _)| gm.divides(&lm)));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.lead().expect("nonzero basis element");
                p = p.sub_mul(&(&lc / gc), &lm.div(gm), g, order);
            }
            None => break,
        }
    }
    p
}

/// Full reduction of `p` modulo `basis`; every remainder term is irreducible.
fn reduce(p: Sorted, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
    let mut p = p;
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.lead().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.lead().is_some_and(|(gm, _)| gm.divides(&lm)));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.lead().expect("nonzero basis element");
                let c = &lc / gc;
                let m = lm.div(gm);
                p = p.sub_mul(&c, &m, g, order);
            }
            None => {
                rem.push(p.terms.pop().expect("lead exists"));
            }
        }
    }
    rem.reverse();
    Sorted { terms: rem }
}

fn s_polynomial(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
    let (fm, fc) = f.lead().expect("nonzero");
    let (gm, gc) = g.lead().expect("nonzero");
    let l = fm.lcm(gm);
    let mut a = Sorted { terms: Vec::new() };
    a = a.sub_mul(&-fc.recip(), &l.div(fm), f, order);
    a.sub_mul(&gc.recip(), &l.div(gm), g, order)
}

/// Normal form of `p` with respect to `basis` under `order`. The result is
/// unique when `basis` is a Gröbner basis for `order`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let sorted: Vec<Sorted> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::new(g, order))
        .collect();
    reduce(Sorted::new(p, order), &sorted, order).into_poly(p.ring())
}

/// Unique reduced Gröbner basis of the ideal generated by `gens`: monic
/// elements, no term of any element divisible by another leading monomial,
/// sorted by descending leading monomial.
pub fn reduced_groebner_basis(
    ring: &Ring,
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Vec<Polynomial> {
    let mut basis: Vec<Sorted> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut s = reduce(Sorted::new(g, order), &basis, order);
        if !s.is_zero() {
            s.make_monic();
            basis.push(s);
        }
    }
    if basis.iter().any(|g| g.lead().is_some_and(|(m, _)| m.is_one())) {
        return vec![Polynomial::one(ring)];
    }

    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
        let la = basis[a.0].lead().unwrap().0.lcm(&basis[a.1].lead().unwrap().0);
        let lb = basis[b.0].lead().unwrap().0.lcm(&basis[b.1].lead().unwrap().0);
        order.compare(&la, &lb).then(a.cmp(b))
    }) {
        pairs.remove(&(i, j));
        let (mi, mj) = (&basis[i].lead().unwrap().0, &basis[j].lead().unwrap().0);
        if mi.is_coprime(mj) {
            continue;
        }
        let l = mi.lcm(mj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().unwrap().0.divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let mut s = top_reduce(s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if s.is_zero() {
            continue;
        }
        s.make_monic();
        if s.lead().unwrap().0.is_one() {
            return vec![Polynomial::one(ring)];
        }
        let n = basis.len();
        basis.push(s);
        for k in 0..n {
            pairs.insert((k, n));
        }
    }

    // minimize
    let mut keep: Vec<Sorted> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let gm = &g.lead().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = &h.lead().unwrap().0;
            k != idx && hm.divides(gm) && (hm != gm || k < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // inter-reduce
    for idx in 0..keep.len() {
        let others: Vec<Sorted> = keep
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = reduce(keep[idx].clone(), &others, order);
        r.make_monic();
        keep[idx] = r;
    }
    keep.sort_by(|a, b| order.compare(&b.lead().unwrap().0, &a.lead().unwrap().0));
    debug_assert!(keep.iter().all(|g| g.lead().is_some_and(|(_, c)| c.is_one())));
    keep.into_iter().map(|g| g.into_poly(ring)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_polynomial;

    fn polys(r: &Ring, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()
    }

    #[test]
    fn already_reduced() {
        let r = Ring::new(["x", "y"]).unwrap();
        let gb = reduced_groebner_basis(&r, &polys(&r, &["x", "y"]), &MonomialOrder::DegRevLex);
        let shown: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x", "y"]);
    }

    #[test]
    fn lex_example_by_hand() {
        // S(xy - 1, y^2 - 1) = y*(xy - 1) - x*(y^2 - 1) = x - y
        let r = Ring::new(["x", "y"]).unwrap();
        let gb = reduced_groebner_basis(
            &r,
            &polys(&r, &["x*y - 1", "y^2 - 1"]),
            &MonomialOrder::Lex(vec![0, 1]),
        );
        let shown: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x - y", "y^2 - 1"]);
    }

    #[test]
    fn zero_and_unit_ideals() {
        let r = Ring::new(["x"]).unwrap();
        assert!(reduced_groebner_basis(&r, &[], &MonomialOrder::DegRevLex).is_empty());
        let gb = reduced_groebner_basis(&r, &polys(&r, &["x", "x + 1"]), &MonomialOrder::DegRevLex);
        assert_eq!(gb, vec![Polynomial::one(&r)]);
    }

    #[test]
    fn normal_form_detects_membership() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let o = MonomialOrder::DegRevLex;
        let gb = reduced_groebner_basis(&r, &polys(&r, &["x^2 - y", "x*y - z"]), &o);
        let member = parse_polynomial(&r, "(x^2 - y)*(x + z) + (x*y - z)*y").unwrap();
        assert!(normal_form(&member, &gb, &o).is_zero());
        let outsider = parse_polynomial(&r, "x").unwrap();
        assert!(!normal_form(&outsider, &gb, &o).is_zero());
    }
}
