//! λ-walls: the polynomial `Φ = Re Z(F)·Im Z(G) − Re Z(G)·Im Z(F)` in
//! `(a, b, s)`, implicit slopes of its zero set, the chamber structure for
//! the class `(1, 0, −2, 2)`, and sampling of walls for plotting.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;
use wallcross_polyring::Polynomial;

use crate::chern::{sheaf_library, ChernCharacter, ChernError, SheafSpec, StabilityPoint};
use crate::rational::{self, format_significant, sqrt_approx, sqrt_exact, Rational};
use crate::symbolic::{self, evaluate, A, B, S};
use crate::tiltwalls::{self, ConicLocus, WallLocus};

/// Significant digits of plotted decimals.
pub const PLOT_DIGITS: u32 = 12;
// digits kept in intermediate square roots
const SQRT_DIGITS: u32 = 60;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LambdaError {
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error("point is not on the wall (value {0})")]
    NotOnWall(Rational),
    #[error("the wall has a vertical tangent at this point")]
    VerticalTangent,
    #[error("chamber structure is only certified for the class 1,0,-2,2, got {0}")]
    UncertifiedClass(String),
    #[error("the wall polynomial vanishes identically")]
    IdenticallyZero,
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("empty beta range [{0}, {1}]")]
    EmptyRange(Rational, Rational),
}

/// A wall equation in `ℚ[a, b, s]` together with labels for the two
/// classes it compares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallPolynomial {
    poly: Polynomial,
    first: String,
    second: String,
}

impl WallPolynomial {
    pub fn new(poly: Polynomial, first: impl Into<String>, second: impl Into<String>) -> Self {
        WallPolynomial {
            poly,
            first: first.into(),
            second: second.into(),
        }
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn labels(&self) -> (&str, &str) {
        (&self.first, &self.second)
    }

    pub fn value_at(&self, p: &StabilityPoint) -> Result<Rational, LambdaError> {
        Ok(evaluate(&self.poly, &p.alpha_sq(), p.beta(), p.require_s()?))
    }

    /// `∂Φ/∂α = 2α·∂Φ/∂a` at `p`.
    pub fn alpha_derivative_at(&self, p: &StabilityPoint) -> Result<Rational, LambdaError> {
        let da = evaluate(&self.poly.derivative(A), &p.alpha_sq(), p.beta(), p.require_s()?);
        Ok(Rational::from_integer(2.into()) * p.alpha() * da)
    }

    /// `∂Φ/∂α` at `(α, β)` as a polynomial in `s`.
    pub fn alpha_derivative_in_s(&self, alpha: &Rational, beta: &Rational) -> Polynomial {
        let da = specialize(&self.poly.derivative(A), alpha, beta);
        da.scale(&(Rational::from_integer(2.into()) * alpha))
    }

    /// `dα/dβ = −(∂Φ/∂b)/(2α·∂Φ/∂a)` along the wall at `p`.
    pub fn slope_at(&self, p: &StabilityPoint) -> Result<Rational, LambdaError> {
        let value = self.value_at(p)?;
        if !value.is_zero() {
            return Err(LambdaError::NotOnWall(value));
        }
        let s = p.require_s()?;
        let a = p.alpha_sq();
        let db = evaluate(&self.poly.derivative(B), &a, p.beta(), s);
        let da = evaluate(&self.poly.derivative(A), &a, p.beta(), s);
        if da.is_zero() {
            return Err(LambdaError::VerticalTangent);
        }
        Ok(-db / (Rational::from_integer(2.into()) * p.alpha() * da))
    }

    /// The slope at `(α, β)` as a quotient `num/den` of polynomials in `s`,
    /// valid for every `s` where `den ≠ 0`. Fails unless the wall passes
    /// through `(α, β)` for all `s`.
    pub fn slope_in_s(&self, alpha: &Rational, beta: &Rational) -> Result<(Polynomial, Polynomial), LambdaError> {
        let value = specialize(&self.poly, alpha, beta);
        if !value.is_zero() {
            let witness = value.terms()[0].1.clone();
            return Err(LambdaError::NotOnWall(witness));
        }
        let num = -specialize(&self.poly.derivative(B), alpha, beta);
        let den = self.alpha_derivative_in_s(alpha, beta);
        if den.is_zero() {
            return Err(LambdaError::VerticalTangent);
        }
        Ok((num, den))
    }

    /// Coefficients `[c0, c1, c2]` of the wall as `c0 + c1·a + c2·a²` at
    /// fixed `(β, s)`.
    pub fn a_coefficients(&self, beta: &Rational, s: &Rational) -> [Rational; 3] {
        let p = self.poly.substitute(B, beta).substitute(S, s);
        let by_a = p.coefficients_in(A);
        std::array::from_fn(|i| by_a.get(i).map(|c| c.constant_term()).unwrap_or_else(Rational::zero))
    }
}

impl fmt::Display for WallPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl From<&ConicLocus> for WallPolynomial {
    fn from(c: &ConicLocus) -> Self {
        WallPolynomial::new(c.to_polynomial(), "nu", "0")
    }
}

fn specialize(p: &Polynomial, alpha: &Rational, beta: &Rational) -> Polynomial {
    p.substitute(A, &(alpha * alpha)).substitute(B, beta)
}

/// `(Re Z, Im Z)` of `v` in `ℚ[a, b, s]`.
pub fn central_charge(v: &ChernCharacter) -> (Polynomial, Polynomial) {
    let t = symbolic::twisted(v);
    let a = symbolic::var(A);
    let sixth = symbolic::constant(&Rational::new(1.into(), 6.into()));
    let half = symbolic::constant(&Rational::new(1.into(), 2.into()));
    let re = &(&(&a * &(&sixth + &symbolic::var(S))) * &t[1]) - &t[3];
    let im = &t[2] - &(&(&half * &a) * &t[0]);
    (re, im)
}

pub fn phi(f: &ChernCharacter, g: &ChernCharacter) -> WallPolynomial {
    let (re_f, im_f) = central_charge(f);
    let (re_g, im_g) = central_charge(g);
    let poly = &(&re_f * &im_g) - &(&re_g * &im_f);
    WallPolynomial::new(poly, f.to_string(), g.to_string())
}

pub fn phi_alpha_derivative_at(w: &WallPolynomial, p: &StabilityPoint) -> Result<Rational, LambdaError> {
    w.alpha_derivative_at(p)
}

pub fn wall_slope_at(w: &WallPolynomial, p: &StabilityPoint) -> Result<Rational, LambdaError> {
    w.slope_at(p)
}

/// The class `(1, 0, −2, 2)` of two disjoint lines.
pub fn skew_lines_class() -> ChernCharacter {
    sheaf_library(SheafSpec::SkewLinesIdeal).expect("fixed class")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WallId {
    W1,
    W2,
}

impl fmt::Display for WallId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WallId::W1 => "W1",
            WallId::W2 => "W2",
        })
    }
}

/// `W1 = Φ(O(−1), I_{P/V}(−2))` and `W2 = Φ(I_P(−1), O_V(−2))`.
pub fn skew_lines_wall(id: WallId) -> WallPolynomial {
    use SheafSpec::*;
    let (f, g) = match id {
        WallId::W1 => (LineBundle(-1), PlaneIdealPoints(-2, 1)),
        WallId::W2 => (IdealPoints(-1, 1), PlaneTwist(-2)),
    };
    phi(&sheaf_library(f).expect("fixed class"), &sheaf_library(g).expect("fixed class"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChamberLabel {
    ChamberI,
    ChamberII,
    ChamberIII,
    OnWall(WallId),
    OutsideRegion,
}

impl fmt::Display for ChamberLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChamberLabel::ChamberI => f.write_str("I"),
            ChamberLabel::ChamberII => f.write_str("II"),
            ChamberLabel::ChamberIII => f.write_str("III"),
            ChamberLabel::OnWall(w) => write!(f, "on {w}"),
            ChamberLabel::OutsideRegion => f.write_str("outside"),
        }
    }
}

/// Whether `p` lies in the open region `ν_{α,β}(v) > 0`, `β < 0`.
pub fn in_region(v: &ChernCharacter, p: &StabilityPoint) -> bool {
    if !p.beta().is_negative() {
        return false;
    }
    match v.nu_slope(p).finite() {
        Some(nu) => nu.is_positive(),
        None => false,
    }
}

/// Chamber of `p` for the class `(1, 0, −2, 2)`.
///
/// Both Φ increase with α where the walls meet the hyperbola, so a positive
/// Φ means "above" its wall. Inside the region `Φ₂ − Φ₁` equals the
/// numerator of `ν(v)`, hence `Φ₂ > Φ₁` and the sign pattern `(+, −)` never
/// occurs.
pub fn classify_chamber(v: &ChernCharacter, p: &StabilityPoint) -> Result<ChamberLabel, LambdaError> {
    if *v != skew_lines_class() {
        return Err(LambdaError::UncertifiedClass(v.to_string()));
    }
    p.require_s()?;
    if !in_region(v, p) {
        return Ok(ChamberLabel::OutsideRegion);
    }
    let phi1 = skew_lines_wall(WallId::W1).value_at(p)?;
    let phi2 = skew_lines_wall(WallId::W2).value_at(p)?;
    Ok(if phi1.is_zero() {
        ChamberLabel::OnWall(WallId::W1)
    } else if phi2.is_zero() {
        ChamberLabel::OnWall(WallId::W2)
    } else if phi1.is_positive() && phi2.is_positive() {
        ChamberLabel::ChamberI
    } else if phi2.is_positive() {
        ChamberLabel::ChamberII
    } else if phi1.is_negative() {
        ChamberLabel::ChamberIII
    } else {
        unreachable!("Phi2 > Phi1 throughout the region")
    })
}

/// Anything that is a polynomial of degree ≤ 2 in `a = α²` once `β` and `s`
/// are fixed.
pub trait AlphaQuadratic {
    fn a_coefficients(&self, beta: &Rational, s: &Rational) -> [Rational; 3];
    fn is_identically_zero(&self) -> bool;
}

impl AlphaQuadratic for WallPolynomial {
    fn a_coefficients(&self, beta: &Rational, s: &Rational) -> [Rational; 3] {
        WallPolynomial::a_coefficients(self, beta, s)
    }
    fn is_identically_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl AlphaQuadratic for WallLocus {
    fn a_coefficients(&self, beta: &Rational, _s: &Rational) -> [Rational; 3] {
        let zero = Rational::zero;
        match self {
            WallLocus::Circle {
                center_beta,
                radius_sq,
            } => {
                let d = beta - center_beta;
                [&d * &d - radius_sq, Rational::one(), zero()]
            }
            // a vertical line is not a graph over β
            WallLocus::VerticalLine { .. } | WallLocus::Empty => [Rational::one(), zero(), zero()],
            WallLocus::Everywhere => [zero(), zero(), zero()],
        }
    }
    fn is_identically_zero(&self) -> bool {
        matches!(self, WallLocus::Everywhere)
    }
}

impl AlphaQuadratic for ConicLocus {
    fn a_coefficients(&self, beta: &Rational, _s: &Rational) -> [Rational; 3] {
        [
            &self.b2_coeff * beta * beta + &self.b_coeff * beta + &self.constant,
            self.a_coeff.clone(),
            Rational::zero(),
        ]
    }
    fn is_identically_zero(&self) -> bool {
        [&self.a_coeff, &self.b2_coeff, &self.b_coeff, &self.constant]
            .iter()
            .all(|c| c.is_zero())
    }
}

/// Value of `a = α² > 0`: exact, or `root + sign·√disc` over `den` when the
/// discriminant is not a square.
enum PositiveRoot {
    Exact(Rational),
    Surd {
        base: Rational,
        sign: i8,
        disc: Rational,
        den: Rational,
    },
}

impl PositiveRoot {
    fn alpha(&self) -> (Rational, bool) {
        match self {
            PositiveRoot::Exact(a) => match sqrt_exact(a) {
                Some(r) => (r, true),
                None => (sqrt_approx(a, SQRT_DIGITS), false),
            },
            PositiveRoot::Surd { base, sign, disc, den } => {
                let root = sqrt_approx(disc, SQRT_DIGITS);
                let signed = if *sign > 0 { root } else { -root };
                let a = (base + signed) / den;
                (sqrt_approx(&a.max(Rational::zero()), SQRT_DIGITS), false)
            }
        }
    }
}

/// Positive roots of `c0 + c1·a + c2·a² = 0`, ascending. Positivity is decided
/// exactly before any square root is approximated.
fn positive_roots(c: &[Rational; 3]) -> Vec<PositiveRoot> {
    let [c0, c1, c2] = c;
    if c2.is_zero() {
        if c1.is_zero() {
            return Vec::new();
        }
        let a = -c0 / c1;
        return if a.is_positive() { vec![PositiveRoot::Exact(a)] } else { Vec::new() };
    }
    let disc = c1 * c1 - Rational::from_integer(4.into()) * c0 * c2;
    if disc.is_negative() {
        return Vec::new();
    }
    let den = Rational::from_integer(2.into()) * c2;
    if disc.is_zero() {
        let a = -c1 / &den;
        return if a.is_positive() { vec![PositiveRoot::Exact(a)] } else { Vec::new() };
    }
    let product = c0 / c2;
    let sum = -c1 / c2;
    // roots r± = (−c1 ± √disc)/den; the larger one takes the sign of den
    let larger = if den.is_positive() { 1 } else { -1 };
    let wanted: Vec<i8> = if product.is_negative() {
        vec![larger]
    } else if sum.is_positive() {
        if product.is_zero() {
            vec![larger]
        } else {
            vec![-larger, larger]
        }
    } else {
        Vec::new()
    };
    let exact = sqrt_exact(&disc);
    wanted
        .into_iter()
        .map(|sign| match &exact {
            Some(r) => {
                let signed = if sign > 0 { r.clone() } else { -r.clone() };
                PositiveRoot::Exact((-c1 + signed) / &den)
            }
            None => PositiveRoot::Surd {
                base: -c1.clone(),
                sign,
                disc: disc.clone(),
                den: den.clone(),
            },
        })
        .collect()
}

/// One sampled point of a wall. `alpha` is exact when `exact` is set and a
/// truncation of √a to many digits otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    pub beta: Rational,
    pub alpha: Rational,
    pub exact: bool,
}

impl SamplePoint {
    pub fn beta_decimal(&self) -> String {
        format_significant(&self.beta, PLOT_DIGITS)
    }
    pub fn alpha_decimal(&self) -> String {
        format_significant(&self.alpha, PLOT_DIGITS)
    }
}

fn sample_betas(beta_min: &Rational, beta_max: &Rational, count: usize) -> Result<Vec<Rational>, LambdaError> {
    if count < 2 {
        return Err(LambdaError::TooFewSamples(count));
    }
    if beta_min >= beta_max {
        return Err(LambdaError::EmptyRange(beta_min.clone(), beta_max.clone()));
    }
    let step = (beta_max - beta_min) / Rational::from_integer((count - 1).into());
    Ok((0..count)
        .map(|i| beta_min + &step * Rational::from_integer(i.into()))
        .collect())
}

/// Samples `w = 0` at `count` evenly spaced β in `[beta_min, beta_max]`,
/// keeping every root with `α² > 0`.
pub fn sample_wall<W: AlphaQuadratic + ?Sized>(
    w: &W,
    s: &Rational,
    beta_min: &Rational,
    beta_max: &Rational,
    count: usize,
) -> Result<Vec<SamplePoint>, LambdaError> {
    if w.is_identically_zero() {
        return Err(LambdaError::IdenticallyZero);
    }
    let mut out = Vec::new();
    for beta in sample_betas(beta_min, beta_max, count)? {
        for root in positive_roots(&w.a_coefficients(&beta, s)) {
            let (alpha, exact) = root.alpha();
            out.push(SamplePoint {
                beta: beta.clone(),
                alpha,
                exact,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlotCurve {
    W,
    W1,
    W2,
    Hyperbola,
}

impl PlotCurve {
    pub fn name(self) -> &'static str {
        match self {
            PlotCurve::W => "W",
            PlotCurve::W1 => "W1",
            PlotCurve::W2 => "W2",
            PlotCurve::Hyperbola => "hyperbola",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotRow {
    pub curve: PlotCurve,
    pub point: SamplePoint,
}

#[derive(Clone, Debug)]
pub struct PlotRequest {
    pub class: ChernCharacter,
    /// integral β-ray searched for tilt walls
    pub beta0: Rational,
    pub s: Rational,
    pub beta_min: Rational,
    pub beta_max: Rational,
    pub samples: usize,
}

impl Default for PlotRequest {
    fn default() -> Self {
        PlotRequest {
            class: skew_lines_class(),
            beta0: rational::rat(-2, 1),
            s: rational::rat(1, 3),
            beta_min: rational::rat(-4, 1),
            beta_max: rational::rat(-1, 1),
            samples: 61,
        }
    }
}

#[derive(Debug, Error)]
pub enum PlotError {
    #[error(transparent)]
    Lambda(#[from] LambdaError),
    #[error(transparent)]
    Tilt(#[from] tiltwalls::TiltError),
}

/// Rows for the hyperbola `ν(v) = 0`, the tilt walls found on the ray
/// `β = β₀`, and (for the class `(1, 0, −2, 2)`) the λ-walls W1 and W2
/// restricted to the region `ν > 0`, `β < 0`. Sorted by curve name, then β.
pub fn plot_rows(req: &PlotRequest) -> Result<Vec<PlotRow>, PlotError> {
    if !req.s.is_positive() {
        return Err(LambdaError::Chern(ChernError::NonPositiveS(req.s.clone())).into());
    }
    let sample = |w: &dyn AlphaQuadratic| sample_wall(w, &req.s, &req.beta_min, &req.beta_max, req.samples);
    let mut rows = Vec::new();
    let mut push = |curve: PlotCurve, pts: Vec<SamplePoint>| {
        rows.extend(pts.into_iter().map(|point| PlotRow { curve, point }));
    };

    push(PlotCurve::Hyperbola, sample(&tiltwalls::nu_zero_locus(&req.class))?);

    let mut loci: Vec<WallLocus> = Vec::new();
    for cand in tiltwalls::enumerate_destabilizers(&req.class, &req.beta0, 10)? {
        let locus = cand.wall()?;
        if matches!(locus, WallLocus::Circle { .. }) && !loci.contains(&locus) {
            loci.push(locus);
        }
    }
    for locus in &loci {
        push(PlotCurve::W, sample(locus)?);
    }

    if req.class == skew_lines_class() {
        for (curve, id) in [(PlotCurve::W1, WallId::W1), (PlotCurve::W2, WallId::W2)] {
            let pts = sample(&skew_lines_wall(id))?
                .into_iter()
                .filter(|pt| {
                    let p = StabilityPoint::new(pt.alpha.clone(), pt.beta.clone()).expect("alpha > 0");
                    in_region(&req.class, &p)
                })
                .collect();
            push(curve, pts);
        }
    }
    rows.sort_by(|x, y| {
        (x.curve.name(), &x.point.beta, &x.point.alpha).cmp(&(y.curve.name(), &y.point.beta, &y.point.alpha))
    });
    Ok(rows)
}

pub fn plot_csv(rows: &[PlotRow]) -> String {
    let mut out = String::from("wall,beta,alpha\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            row.curve.name(),
            row.point.beta_decimal(),
            row.point.alpha_decimal()
        ));
    }
    out
}

/// A minimal standalone SVG of the plotted curves.
pub fn plot_svg(rows: &[PlotRow], req: &PlotRequest) -> String {
    use num_traits::ToPrimitive;
    let (w, h, pad) = (640.0, 400.0, 40.0);
    let bmin = req.beta_min.to_f64().unwrap_or(0.0);
    let bmax = req.beta_max.to_f64().unwrap_or(1.0);
    let amax = rows
        .iter()
        .filter_map(|r| r.point.alpha.to_f64())
        .fold(1.0_f64, f64::max)
        * 1.1;
    let x = |b: f64| pad + (b - bmin) / (bmax - bmin) * (w - 2.0 * pad);
    let y = |a: f64| h - pad - a / amax * (h - 2.0 * pad);
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n\
         <line x1=\"{pad}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        h - pad,
        w - pad,
        h - pad
    );
    for (curve, colour, dash) in [
        (PlotCurve::Hyperbola, "gray", "4 3"),
        (PlotCurve::W, "black", ""),
        (PlotCurve::W1, "firebrick", ""),
        (PlotCurve::W2, "steelblue", ""),
    ] {
        let pts: Vec<String> = rows
            .iter()
            .filter(|r| r.curve == curve)
            .filter_map(|r| Some(format!("{:.2},{:.2}", x(r.point.beta.to_f64()?), y(r.point.alpha.to_f64()?))))
            .collect();
        if pts.is_empty() {
            continue;
        }
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{colour}\" stroke-dasharray=\"{dash}\" points=\"{}\"><title>{}</title></polyline>\n",
            pts.join(" "),
            curve.name()
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn point(alpha: Rational, beta: Rational, s: Rational) -> StabilityPoint {
        StabilityPoint::new(alpha, beta).unwrap().with_s(s).unwrap()
    }

    fn in_s(p: &Polynomial) -> Vec<Rational> {
        p.coefficients_in(S).iter().map(|c| c.constant_term()).collect()
    }

    #[test]
    fn phi_vanishes_at_the_intersection_point() {
        for id in [WallId::W1, WallId::W2] {
            let w = skew_lines_wall(id);
            for s in [rat(1, 6), rat(1, 3), rat(1, 1), rat(7, 2)] {
                assert_eq!(w.value_at(&point(rat(3, 2), rat(-5, 2), s)).unwrap(), Rational::zero());
            }
        }
        let v = skew_lines_class();
        assert!(phi(&v, &v).polynomial().is_zero());
    }

    #[test]
    fn derivatives_in_s() {
        let d1 = skew_lines_wall(WallId::W1).alpha_derivative_in_s(&rat(3, 2), &rat(-5, 2));
        assert_eq!(in_s(&d1), vec![rat(2, 1), rat(27, 8)]);
        let d2 = skew_lines_wall(WallId::W2).alpha_derivative_in_s(&rat(3, 2), &rat(-5, 2));
        assert_eq!(in_s(&d2), vec![rat(1, 2), rat(27, 8)]);
        let v = skew_lines_class();
        let p = point(rat(1, 1), rat(-3, 1), rat(1, 1));
        assert_eq!(phi_alpha_derivative_at(&phi(&v, &v), &p).unwrap(), Rational::zero());
    }

    #[test]
    fn slopes_at_one_third() {
        let p = point(rat(3, 2), rat(-5, 2), rat(1, 3));
        assert_eq!(wall_slope_at(&skew_lines_wall(WallId::W1), &p).unwrap(), rat(-16, 25));
        assert_eq!(wall_slope_at(&skew_lines_wall(WallId::W2), &p).unwrap(), rat(4, 13));
        let hyper = WallPolynomial::from(&tiltwalls::nu_zero_locus(&skew_lines_class()));
        assert_eq!(wall_slope_at(&hyper, &p).unwrap(), rat(-5, 3));
    }

    #[test]
    fn slope_errors() {
        let off = point(rat(1, 1), rat(-5, 2), rat(1, 3));
        assert!(matches!(
            wall_slope_at(&skew_lines_wall(WallId::W1), &off),
            Err(LambdaError::NotOnWall(_))
        ));
        // β = −5/2 line from a rank-zero class: ∂/∂a vanishes
        let line = WallPolynomial::from(&tiltwalls::nu_zero_locus(&sheaf_library(SheafSpec::PlaneTwist(-2)).unwrap()));
        let on = point(rat(1, 1), rat(-5, 2), rat(1, 3));
        assert_eq!(wall_slope_at(&line, &on), Err(LambdaError::VerticalTangent));
    }

    #[test]
    fn region_and_chamber_examples() {
        let v = skew_lines_class();
        let s = rat(1, 3);
        let label = |a: Rational, b: Rational| classify_chamber(&v, &point(a, b, s.clone())).unwrap();
        assert_eq!(label(rat(2, 1), rat(-5, 2)), ChamberLabel::OutsideRegion);
        assert_eq!(label(rat(3, 2), rat(-5, 2)), ChamberLabel::OutsideRegion);
        assert_eq!(label(rat(1, 1), rat(1, 2)), ChamberLabel::OutsideRegion);
        let inner = label(rat(1, 1), rat(-5, 2));
        assert!(matches!(inner, ChamberLabel::ChamberII | ChamberLabel::ChamberIII));

        let other: ChernCharacter = "1,0,0,0".parse().unwrap();
        assert!(matches!(
            classify_chamber(&other, &point(rat(1, 1), rat(-1, 1), s.clone())),
            Err(LambdaError::UncertifiedClass(_))
        ));
        let no_s = StabilityPoint::new(rat(1, 1), rat(-3, 1)).unwrap();
        assert!(classify_chamber(&v, &no_s).is_err());
    }

    #[test]
    fn phi_difference_is_the_nu_numerator() {
        let w1 = skew_lines_wall(WallId::W1);
        let w2 = skew_lines_wall(WallId::W2);
        let diff = w2.polynomial() - w1.polynomial();
        let num = tiltwalls::nu_zero_locus(&skew_lines_class()).to_polynomial();
        assert_eq!(diff, num);
    }

    #[test]
    fn sampling_examples() {
        let circle = WallLocus::Circle {
            center_beta: rat(-5, 2),
            radius_sq: rat(9, 4),
        };
        let pts = sample_wall(&circle, &rat(1, 3), &rat(-4, 1), &rat(-1, 1), 61).unwrap();
        let top = pts.iter().find(|p| p.beta == rat(-5, 2)).unwrap();
        assert!(top.exact);
        assert_eq!(top.alpha_decimal(), "1.5");
        assert!(pts.iter().all(|p| p.beta != rat(-4, 1) && p.beta != rat(-1, 1)));

        let hyper = tiltwalls::nu_zero_locus(&skew_lines_class());
        let pts = sample_wall(&hyper, &rat(1, 3), &rat(-3, 1), &rat(-2, 1), 3).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[0].alpha_decimal(), "2.2360679775");
        assert_eq!(pts[1].alpha_decimal(), "1.5");

        assert_eq!(
            sample_wall(&circle, &rat(1, 3), &rat(-4, 1), &rat(-1, 1), 1),
            Err(LambdaError::TooFewSamples(1))
        );
        assert_eq!(
            sample_wall(&WallLocus::Everywhere, &rat(1, 3), &rat(-4, 1), &rat(-1, 1), 5),
            Err(LambdaError::IdenticallyZero)
        );
    }

    #[test]
    fn positive_root_selection() {
        let roots = |c: [i64; 3]| {
            positive_roots(&c.map(|x| rat(x, 1)))
                .iter()
                .map(|r| r.alpha().0)
                .collect::<Vec<_>>()
        };
        // (a − 1)(a − 4)
        assert_eq!(roots([4, -5, 1]), vec![rat(1, 1), rat(2, 1)]);
        // −(a − 1)(a − 4)
        assert_eq!(roots([-4, 5, -1]), vec![rat(1, 1), rat(2, 1)]);
        // (a + 1)(a − 9)
        assert_eq!(roots([-9, -8, 1]), vec![rat(3, 1)]);
        // (a + 1)(a + 2)
        assert!(roots([2, 3, 1]).is_empty());
        // a(a − 4)
        assert_eq!(roots([0, -4, 1]), vec![rat(2, 1)]);
        assert!(roots([1, 0, 1]).is_empty());
    }

    #[test]
    fn default_plot_contains_the_top_point() {
        let req = PlotRequest::default();
        let csv = plot_csv(&plot_rows(&req).unwrap());
        assert!(csv.starts_with("wall,beta,alpha\n"));
        assert!(csv.lines().any(|l| l == "W,-2.5,1.5"));
        assert!(csv.lines().any(|l| l == "hyperbola,-2.5,1.5"));
        assert!(csv.lines().any(|l| l.starts_with("W1,")));
        assert!(csv.lines().any(|l| l.starts_with("W2,")));
        assert!(plot_svg(&plot_rows(&req).unwrap(), &req).contains("<polyline"));
    }
}
