use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::{Monomial, MonomialOrder, PolyError, Rational, Ring};

/// Polynomial with exact rational coefficients.
///
/// Terms are kept sorted by descending degrevlex with no zero coefficients,
/// so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index), Rational::one())
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: BTreeMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| MonomialOrder::DegRevLex.compare(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in descending degrevlex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponents()[var]).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[var] > 0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // multiplying by a monomial preserves any term order
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            (e > 0).then(|| {
                let mut exps = m.exponents().to_vec();
                exps[var] -= 1;
                (Monomial::from_exponents(exps), c * Rational::from_integer(e.into()))
            })
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Replaces `var` by the constant `value`. The variable stays in the ring.
    pub fn substitute(&self, var: usize, value: &Rational) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            let e = std::mem::replace(&mut exps[var], 0);
            (Monomial::from_exponents(exps), c * pow_rational(value, e))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Replaces `var` by the polynomial `value` (same ring).
    pub fn compose(&self, var: usize, value: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            let e = std::mem::replace(&mut exps[var], 0);
            let rest = Polynomial::monomial(&self.ring, Monomial::from_exponents(exps), c.clone());
            acc = &acc + &(&rest * &value.pow(e));
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars(), "point arity does not match ring");
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exponents()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * pow_rational(x, e))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Coefficients of `self` viewed as a polynomial in `var`, lowest degree
    /// first. Each coefficient no longer involves `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            let e = std::mem::replace(&mut exps[var], 0) as usize;
            buckets[e].push((Monomial::from_exponents(exps), c.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(&self.ring, b))
            .collect()
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `mapping[i]`. Variables mapped to `None` must not occur.
    pub fn remap(&self, target: &Ring, mapping: &[Option<usize>]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                match mapping[i] {
                    Some(j) => exps[j] += e,
                    None => assert_eq!(e, 0, "remap drops a variable that occurs"),
                }
            }
            (Monomial::from_exponents(exps), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Moves the polynomial into another ring by matching variable names.
    pub fn to_ring(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        let mut mapping = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => mapping.push(Some(j)),
                None if !self.involves(i) => mapping.push(None),
                None => return Err(PolyError::UnknownVariable(name.clone())),
            }
        }
        Ok(self.remap(target, &mapping))
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ))
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        assert!(self.ring == other.ring, "ring mismatch: {} vs {}", self.ring, other.ring);
        let order = MonomialOrder::DegRevLex;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Rational| if negate_other { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.compare(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), sign(&b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.1 + sign(&b.1);
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }
}

pub(crate) fn pow_rational(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.ring == rhs.ring, "ring mismatch: {} vs {}", self.ring, rhs.ring);
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in ring.names().iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical text form, e.g. `x*y^2 - 3/2*z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn ring() -> Ring {
        Ring::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn display_is_canonical() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let p = &(&x * &y.pow(2)) - &z.scale(&rat(3, 2));
        assert_eq!(p.to_string(), "x*y^2 - 3/2*z");
        let q = &(&z - &x) + &Polynomial::constant(&r, rat(-1, 1));
        assert_eq!(q.to_string(), "-x + z - 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let lhs = (&x + &y).pow(2);
        let rhs = &(&x.pow(2) + &(&x * &y).scale(&rat(2, 1))) + &y.pow(2);
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn derivative_substitute_evaluate() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = &x.pow(3) * &y;
        assert_eq!(p.derivative(0).to_string(), "3*x^2*y");
        assert_eq!(p.substitute(1, &rat(2, 1)).to_string(), "2*x^3");
        assert_eq!(p.evaluate(&[rat(1, 2), rat(4, 1), rat(0, 1)]), rat(1, 2));
        let c = p.coefficients_in(0);
        assert_eq!(c.len(), 4);
        assert_eq!(c[3].to_string(), "y");
        assert_eq!(p.compose(1, &(&x + &y)).to_string(), "x^4 + x^3*y");
    }
}
