use std::fmt;
use std::sync::OnceLock;



use crate::groebner::{normal_form, reduced_groebner_basis};
use crate::{MonomialOrder, PolyError, Polynomial, Rational, Ring};

/// Reduced Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.polys, &self.order)
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }
}

/// Finitely generated ideal of a polynomial ring.
///
/// The reduced basis is computed lazily and cached once per value.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    basis: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            basis,
        }
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self, PolyError> {
        for g in &gens {
            if g.ring() != ring {
                return Err(PolyError::RingMismatch(ring.to_string(), g.ring().to_string()));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            basis: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            basis: OnceLock::new(),
        }
    }

    /// Ideal generated by all variables in `vars`.
    pub fn of_variables(ring: &Ring, vars: &[usize]) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vars.iter().map(|&v| Polynomial::var(ring, v)).collect(),
            basis: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Returns a copy with the reduced basis for `order` attached.
    pub fn groebner(&self, order: &MonomialOrder) -> Ideal {
        let out = Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            basis: OnceLock::new(),
        };
        let _ = out.basis.set(self.basis_for(order));
        out
    }

    /// Cached basis; degrevlex unless another order was attached.
    pub fn basis(&self) -> &GroebnerBasis {
        self.basis.get_or_init(|| GroebnerBasis {
            order: MonomialOrder::DegRevLex,
            polys: reduced_groebner_basis(&self.ring, &self.gens, &MonomialOrder::DegRevLex),
        })
    }

    /// Reduced basis for `order`, reusing the cache when it matches.
    pub fn basis_for(&self, order: &MonomialOrder) -> GroebnerBasis {
        match self.basis.get() {
            Some(b) if &b.order == order => b.clone(),
            _ if *order == MonomialOrder::DegRevLex => self.basis().clone(),
            _ => GroebnerBasis {
                order: order.clone(),
                polys: reduced_groebner_basis(&self.ring, &self.gens, order),
            },
        }
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.basis().normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        assert!(p.ring() == &self.ring, "ring mismatch: {} vs {}", p.ring(), self.ring);
        self.normal_form(p).is_zero()
    }

    /// `other ⊆ self`, checked generator by generator.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Equality of ideals via their reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.basis().polys == other.basis().polys
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        self.check(other);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        self.with_gens(gens)
    }

    pub fn add_generators(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().filter(|g| !g.is_zero()).cloned());
        self.with_gens(gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        self.check(other);
        let gens = self
            .gens
            .iter()
            .flat_map(|f| other.gens.iter().map(move |g| f * g))
            .collect();
        self.with_gens(gens)
    }

    pub fn power(&self, n: u32) -> Ideal {
        (0..n).fold(Ideal::unit(&self.ring), |acc, _| acc.product(self))
    }

    /// `I ∩ J`, as `(w·I + (1 − w)·J) ∩ ℚ[vars]` with an auxiliary `w`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(&self.ring);
        }
        let big = self.ring.with_aux_front();
        let n = self.ring.nvars();
        let up: Vec<Option<usize>> = (0..n).map(|i| Some(i + 1)).collect();
        let w = Polynomial::var(&big, 0);
        let one_minus_w = &Polynomial::one(&big) - &w;
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| &w * &g.remap(&big, &up))
            .collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_w * &g.remap(&big, &up)));
        let order = MonomialOrder::Block(vec![0]);
        let basis = reduced_groebner_basis(&big, &gens, &order);
        let down: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
        let kept = basis
            .into_iter()
            .filter(|g| !g.involves(0))
            .map(|g| g.remap(&self.ring, &down))
            .collect();
        self.with_gens(kept)
    }

    /// `(I : f) = { g : f·g ∈ I }`, computed as `(I ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal, PolyError> {
        f.check_ring(&Polynomial::zero(&self.ring))?;
        if f.is_zero() {
            return Err(PolyError::ZeroColon);
        }
        let principal = self.with_gens(vec![f.clone()]);
        let meet = self.intersect(&principal);
        let mut quotients = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            quotients.push(exact_quotient(g, f).expect("element of (f) is divisible by f"));
        }
        Ok(self.with_gens(quotients))
    }

    /// `(I : J)` as the intersection of the colons by each generator of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        self.check(other);
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.gens {
            acc = acc.intersect(&self.colon(g)?);
        }
        Ok(acc)
    }

    /// `I ∩ ℚ[remaining variables]`, kept in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Ideal {
        if vars.is_empty() {
            return self.clone();
        }
        let order = MonomialOrder::Block(vars.to_vec());
        let basis = self.basis_for(&order);
        let kept = basis
            .polys
            .into_iter()
            .filter(|g| vars.iter().all(|&v| !g.involves(v)))
            .collect();
        self.with_gens(kept)
    }

    /// Image under the substitution `var ↦ value`.
    pub fn substitute(&self, var: usize, value: &Rational) -> Ideal {
        self.with_gens(self.gens.iter().map(|g| g.substitute(var, value)).collect())
    }

    /// Same ideal, moved into `target` by variable name.
    pub fn to_ring(&self, target: &Ring) -> Result<Ideal, PolyError> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(target))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(target, gens)
    }

    fn with_gens(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        }
    }

    fn check(&self, other: &Ideal) {
        assert!(
            self.ring == other.ring,
            "ring mismatch: {} vs {}",
            self.ring,
            other.ring
        );
    }
}

/// Exact division `g / f` when `f` divides `g`; `None` otherwise.
pub(crate) fn exact_quotient(g: &Polynomial, f: &Polynomial) -> Option<Polynomial> {
    let order = MonomialOrder::DegRevLex;
    let (fm, fc) = f.leading_term(&order)?;
    let (fm, fc) = (fm.clone(), fc.clone());
    let mut rest = g.clone();
    let mut quotient = Polynomial::zero(g.ring());
    while let Some((gm, gc)) = rest.leading_term(&order) {
        if !fm.divides(gm) {
            return None;
        }
        let m = gm.div(&fm);
        let c = gc / &fc;
        quotient = &quotient + &Polynomial::monomial(g.ring(), m.clone(), c.clone());
        rest = &rest - &f.mul_monomial(&m, &c);
    }
    Some(quotient)
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self} in {}", self.ring)
    }
}

impl GroebnerBasis {
    /// Canonical text of each basis element.
    pub fn to_strings(&self) -> Vec<String> {
        self.polys.iter().map(|p| p.to_string()).collect()
    }
}

