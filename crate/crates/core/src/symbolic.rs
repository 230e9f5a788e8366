//! The ring `ℚ[a, b, s]` in which wall equations live: `a = α²`, `b = β`
//! and `s` the Bridgeland parameter.

use std::sync::OnceLock;

use wallcross_polyring::{Polynomial, Ring};

use crate::chern::ChernCharacter;
use crate::rational::Rational;

pub const A: usize = 0;
pub const B: usize = 1;
pub const S: usize = 2;

pub fn wall_ring() -> &'static Ring {
    static RING: OnceLock<Ring> = OnceLock::new();
    RING.get_or_init(|| Ring::new(["a", "b", "s"]).expect("valid ring"))
}

pub fn constant(q: &Rational) -> Polynomial {
    Polynomial::constant(wall_ring(), q.clone())
}

pub fn var(i: usize) -> Polynomial {
    Polynomial::var(wall_ring(), i)
}

/// `ch^b(v)` with `b` left symbolic.
pub fn twisted(v: &ChernCharacter) -> [Polynomial; 4] {
    let [c0, c1, c2, c3] = v.components().clone().map(|q| constant(&q));
    let b = var(B);
    let b2 = &b * &b;
    let b3 = &b2 * &b;
    let half = constant(&Rational::new(1.into(), 2.into()));
    let sixth = constant(&Rational::new(1.into(), 6.into()));
    let t1 = &c1 - &(&b * &c0);
    let t2 = &(&c2 - &(&b * &c1)) + &(&(&half * &b2) * &c0);
    let t3 = &(&(&c3 - &(&b * &c2)) + &(&(&half * &b2) * &c1)) - &(&(&sixth * &b3) * &c0);
    [c0, t1, t2, t3]
}

/// Evaluates a polynomial of `ℚ[a, b, s]` at `(a, b, s)`.
pub fn evaluate(p: &Polynomial, a: &Rational, b: &Rational, s: &Rational) -> Rational {
    p.evaluate(&[a.clone(), b.clone(), s.clone()])
}
