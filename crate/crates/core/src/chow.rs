//! Truncated intersection rings of P³ and P³ × P̌³, the GRR computation of
//! `c₁` of the rank-6 bundle, and the divisor/curve lattice of the component
//! with its pairing, dual bases and K-signs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::rational::{rat, Rational};

const N: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChowError {
    #[error("degenerate basis: the pairing matrix is singular")]
    DegenerateBasis,
}

/// `Σ c[i][j]·H^i·H′^j` in `ℚ[H, H′]/(H⁴, H′⁴)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BigradedClass {
    c: [[Rational; N]; N],
}

impl BigradedClass {
    pub fn zero() -> Self {
        BigradedClass {
            c: std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Rational::one())
    }

    /// `coef·H^i·H′^j`; zero when an exponent exceeds 3.
    pub fn monomial(i: usize, j: usize, coef: Rational) -> Self {
        let mut out = Self::zero();
        if i < N && j < N {
            out.c[i][j] = coef;
        }
        out
    }

    pub fn h() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn h_prime() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn from_h_series(coeffs: &[Rational]) -> Self {
        let mut out = Self::zero();
        for (i, q) in coeffs.iter().enumerate().take(N) {
            out.c[i][0] = q.clone();
        }
        out
    }

    pub fn coefficient(&self, i: usize, j: usize) -> Rational {
        if i < N && j < N {
            self.c[i][j].clone()
        } else {
            Rational::zero()
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        BigradedClass {
            c: std::array::from_fn(|i| std::array::from_fn(|j| &self.c[i][j] * k)),
        }
    }

    /// Part of total degree `d`.
    pub fn degree_part(&self, d: usize) -> Self {
        let mut out = Self::zero();
        for i in 0..N {
            if d >= i && d - i < N {
                out.c[i][d - i] = self.c[i][d - i].clone();
            }
        }
        out
    }

    /// `exp(x)` for `x` without constant term, truncated.
    pub fn exp(&self) -> Self {
        assert!(self.c[0][0].is_zero(), "exp needs a nilpotent argument");
        let mut out = Self::one();
        let mut term = Self::one();
        for k in 1..=(2 * (N - 1)) {
            term = &term * self;
            term = term.scale(&rat(1, k as i64));
            out = &out + &term;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().flatten().all(Zero::is_zero)
    }
}

impl Add for &BigradedClass {
    type Output = BigradedClass;
    fn add(self, rhs: &BigradedClass) -> BigradedClass {
        BigradedClass {
            c: std::array::from_fn(|i| std::array::from_fn(|j| &self.c[i][j] + &rhs.c[i][j])),
        }
    }
}

impl Sub for &BigradedClass {
    type Output = BigradedClass;
    fn sub(self, rhs: &BigradedClass) -> BigradedClass {
        BigradedClass {
            c: std::array::from_fn(|i| std::array::from_fn(|j| &self.c[i][j] - &rhs.c[i][j])),
        }
    }
}

impl Mul for &BigradedClass {
    type Output = BigradedClass;
    fn mul(self, rhs: &BigradedClass) -> BigradedClass {
        let mut out = BigradedClass::zero();
        for i in 0..N {
            for j in 0..N {
                if self.c[i][j].is_zero() {
                    continue;
                }
                for k in 0..N - i {
                    for l in 0..N - j {
                        out.c[i + k][j + l] += &self.c[i][j] * &rhs.c[k][l];
                    }
                }
            }
        }
        out
    }
}

fn monomial_text(i: usize, j: usize) -> String {
    let part = |name: &str, e: usize| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    };
    format!("{}{}", part("H", i), part("H'", j))
}

impl fmt::Display for BigradedClass {
    /// Terms by total degree, then by the power of `H` descending:
    /// `1 + 2H + 11/6H^2 + H^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in 0..=2 * (N - 1) {
            for i in (0..N).rev() {
                if d < i || d - i >= N {
                    continue;
                }
                let q = &self.c[i][d - i];
                if q.is_zero() {
                    continue;
                }
                let mono = monomial_text(i, d - i);
                let abs = q.abs();
                let body = match (abs.is_one(), mono.is_empty()) {
                    (true, false) => mono,
                    (_, true) => abs.to_string(),
                    (false, false) => format!("{abs}{mono}"),
                };
                match (first, q.is_negative()) {
                    (true, false) => write!(f, "{body}")?,
                    (true, true) => write!(f, "-{body}")?,
                    (false, false) => write!(f, " + {body}")?,
                    (false, true) => write!(f, " - {body}")?,
                }
                first = false;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Todd class of P³, computed as `(H/(1 − e^{−H}))⁴` by inverting the power
/// series `(1 − e^{−H})/H`.
pub fn todd_p3() -> BigradedClass {
    // (1 − e^{−H})/H = Σ (−1)^k H^k/(k+1)!
    let mut series = Vec::with_capacity(N);
    let mut fact = Rational::one();
    for k in 0..N {
        fact *= rat(k as i64 + 1, 1);
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        series.push(sign / &fact);
    }
    let mut inv = vec![Rational::zero(); N];
    inv[0] = Rational::one() / &series[0];
    for n in 1..N {
        let acc = (1..=n).fold(Rational::zero(), |acc, k| acc + &series[k] * &inv[n - k]);
        inv[n] = -acc / &series[0];
    }
    let base = BigradedClass::from_h_series(&inv);
    let sq = &base * &base;
    &sq * &sq
}

/// `pr₂*` of a class on `P³ × P̌³`: `H³·H′^j ↦ H′^j`, every other monomial
/// goes to zero.
pub fn pushforward_h3(class: &BigradedClass) -> BigradedClass {
    let mut out = BigradedClass::zero();
    for j in 0..N {
        out.c[0][j] = class.c[3][j].clone();
    }
    out
}

/// Degree-4 part of `ch(O(d)|_I)·td(P³)`, where the incidence variety `I` is
/// the `(1,1)`-divisor, so `ch(O_I) = 1 − e^{−H−H′}`.
pub fn grr_degree4_integrand(twist: i64) -> BigradedClass {
    let h = BigradedClass::h();
    let hp = BigradedClass::h_prime();
    let ch_twist = h.scale(&rat(twist, 1)).exp();
    let ch_incidence = &BigradedClass::one() - &(&h + &hp).scale(&rat(-1, 1)).exp();
    (&(&ch_twist * &ch_incidence) * &todd_p3()).degree_part(4)
}

/// `c₁` of the pushforward of `O(twist)` from the incidence variety to P̌³.
pub fn grr_c1_pushforward_twist(twist: i64) -> BigradedClass {
    pushforward_h3(&grr_degree4_integrand(twist))
}

/// `c₁` of the rank-6 bundle with fibre `H⁰(V, O_V(2))`: `4H′`.
pub fn grr_c1_pushforward() -> BigradedClass {
    grr_c1_pushforward_twist(2)
}

/// A divisor class in the basis `(H, H′, A, E′)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass(pub [Rational; N]);

/// A curve class in the basis `(α, β, γ, δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveClass(pub [Rational; N]);

fn ints(v: [i64; N]) -> [Rational; N] {
    v.map(|x| rat(x, 1))
}

impl DivisorClass {
    pub fn from_ints(v: [i64; N]) -> Self {
        DivisorClass(ints(v))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        DivisorClass(std::array::from_fn(|i| &self.0[i] * k))
    }
}

impl CurveClass {
    pub fn from_ints(v: [i64; N]) -> Self {
        CurveClass(ints(v))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        CurveClass(std::array::from_fn(|i| &self.0[i] * k))
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Add for &CurveClass {
    type Output = CurveClass;
    fn add(self, rhs: &CurveClass) -> CurveClass {
        CurveClass(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &CurveClass {
    type Output = CurveClass;
    fn sub(self, rhs: &CurveClass) -> CurveClass {
        CurveClass(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

fn fmt_vec(v: &[Rational; N], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parts: Vec<String> = v.iter().map(|q| q.to_string()).collect();
    write!(f, "({})", parts.join(","))
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_vec(&self.0, f)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_vec(&self.0, f)
    }
}

// (α, β, γ, −δ) is dual to (H, H′, A, E′)
const METRIC: [i64; N] = [1, 1, 1, -1];

pub fn pair(d: &DivisorClass, c: &CurveClass) -> Rational {
    (0..N).fold(Rational::zero(), |acc, i| acc + &d.0[i] * &c.0[i] * rat(METRIC[i], 1))
}

/// `H, H′, A, E′, D, D′, E, K`.
pub fn named_divisors() -> BTreeMap<&'static str, DivisorClass> {
    [
        ("H", [1, 0, 0, 0]),
        ("H'", [0, 1, 0, 0]),
        ("A", [0, 0, 1, 0]),
        ("E'", [0, 0, 0, 1]),
        ("D", [0, 2, 1, 0]),
        ("D'", [2, 2, 1, -1]),
        ("E", [1, 1, 0, -1]),
        ("K", [-4, -8, -6, 1]),
    ]
    .into_iter()
    .map(|(k, v)| (k, DivisorClass::from_ints(v)))
    .collect()
}

pub fn divisor(name: &str) -> DivisorClass {
    named_divisors().remove(name).unwrap_or_else(|| panic!("unknown divisor {name}"))
}

/// Curves `c_j` with `pair(divs[i], c_j) = δ_ij`.
pub fn dual_curve_basis(divs: &[DivisorClass; N]) -> Result<[CurveClass; N], ChowError> {
    // rows of m are the divisors; columns of m⁻¹ give M·c_j
    let mut m: Vec<Vec<Rational>> = divs.iter().map(|d| d.0.to_vec()).collect();
    let mut inv: Vec<Vec<Rational>> = (0..N)
        .map(|i| (0..N).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..N {
        let pivot = (col..N).find(|&r| !m[r][col].is_zero()).ok_or(ChowError::DegenerateBasis)?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..N {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..N {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in 0..N {
                let (a, b) = (&m[col][j] * &factor, &inv[col][j] * &factor);
                m[r][j] -= a;
                inv[r][j] -= b;
            }
        }
    }
    Ok(std::array::from_fn(|j| {
        CurveClass(std::array::from_fn(|i| &inv[i][j] * rat(METRIC[i], 1)))
    }))
}

/// The extremal curves `ε, η, ζ, δ`, dual to `(H, H′, D, D′ + H′)`.
pub fn extremal_curves() -> [CurveClass; N] {
    let d = named_divisors();
    dual_curve_basis(&[
        d["H"].clone(),
        d["H'"].clone(),
        d["D"].clone(),
        &d["D'"] + &d["H'"],
    ])
    .expect("nef basis is nondegenerate")
}

pub const RAY_NAMES: [&str; N] = ["epsilon", "eta", "zeta", "delta"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayPairings {
    pub epsilon: String,
    pub eta: String,
    pub zeta: String,
    pub delta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoriReport {
    #[serde(rename = "K")]
    pub k: [String; N],
    pub pairings: RayPairings,
    pub negative_rays: Vec<String>,
    pub positive_rays: Vec<String>,
    /// the K-negative ray whose contraction leads to the second model
    #[serde(skip)]
    pub contraction_of_zeta: String,
}

impl MoriReport {
    pub fn values(&self) -> [&str; N] {
        [
            &self.pairings.epsilon,
            &self.pairings.eta,
            &self.pairings.zeta,
            &self.pairings.delta,
        ]
    }
}

impl fmt::Display for MoriReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "K = ({})", self.k.join(","))?;
        for (name, value) in RAY_NAMES.iter().zip(self.values()) {
            writeln!(f, "K.{name} = {value}")?;
        }
        writeln!(f, "K-negative rays: {}", self.negative_rays.join(", "))?;
        writeln!(f, "K-positive rays: {}", self.positive_rays.join(", "))?;
        writeln!(f, "contraction of zeta: {}", self.contraction_of_zeta)
    }
}

pub fn mori_report() -> MoriReport {
    let k = divisor("K");
    let values: Vec<Rational> = extremal_curves().iter().map(|c| pair(&k, c)).collect();
    let mut negative = Vec::new();
    let mut positive = Vec::new();
    for (name, v) in RAY_NAMES.iter().zip(&values) {
        if v.is_negative() {
            negative.push(name.to_string());
        } else if v.is_positive() {
            positive.push(name.to_string());
        }
    }
    MoriReport {
        k: std::array::from_fn(|i| k.0[i].to_string()),
        pairings: RayPairings {
            epsilon: values[0].to_string(),
            eta: values[1].to_string(),
            zeta: values[2].to_string(),
            delta: values[3].to_string(),
        },
        negative_rays: negative,
        positive_rays: positive,
        contraction_of_zeta: "C -> C'".to_string(),
    }
}
