//! Exact certification that a polynomial has only real, nonpositive zeros.
//!
//! The verdict is computed over a primitive integer image of the input.
//! Sturm chains are built with negated pseudo-remainders, reduced to their
//! primitive part at every step to control coefficient growth; plain
//! rational remainders blow up past degree 12 or so. Multiple roots are
//! handled by splitting off the squarefree part (input divided by its GCD
//! with the derivative), certifying it by root counting, and recursing on
//! the cofactor.

use num::{Integer, One, Signed, Zero};

use super::{Property, PropertyReport, Site, Verdict, Witness};
use crate::poly::Poly;
use crate::scalar::{Int, Rat};

/// Ascending integer coefficients; nonempty with a nonzero last entry.
type ZPoly = Vec<Int>;

fn zdeg(p: &ZPoly) -> usize {
    p.len() - 1
}

fn trim(mut v: Vec<Int>) -> Option<ZPoly> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        None
    } else {
        Some(v)
    }
}

/// Positive GCD of all coefficients.
fn content(p: &ZPoly) -> Int {
    p.iter().fold(Int::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the (positive) content, keeping signs.
fn primitive(p: ZPoly) -> ZPoly {
    let c = content(&p);
    if c.is_one() {
        return p;
    }
    p.into_iter().map(|x| x / &c).collect()
}

/// Primitive integer image of a rational polynomial, same signs and roots.
/// Returns `None` for the zero polynomial.
fn to_primitive_int(p: &Poly) -> Option<ZPoly> {
    if p.is_zero() {
        return None;
    }
    let lcm = p
        .coeffs()
        .iter()
        .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<Int> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    trim(ints).map(primitive)
}

fn derivative_int(p: &ZPoly) -> Option<ZPoly> {
    if p.len() <= 1 {
        return None;
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Int::from(i))
            .collect(),
    )
}

/// Pseudo-remainder of `f` by `g`, scaled so the result is a positive
/// rational multiple of the true remainder (the divisor is sign-flipped to
/// a positive leading coefficient first, which leaves remainders intact).
/// Returns `None` when the remainder is zero.
fn pseudo_rem(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let g: ZPoly = if g.last().unwrap().is_negative() {
        g.iter().map(|c| -c).collect()
    } else {
        g.clone()
    };
    let dg = zdeg(&g);
    if zdeg(f) < dg {
        return trim(f.clone());
    }
    let lead = g.last().unwrap().clone();
    let mut rem = f.clone();
    while rem.len() > dg {
        let top = rem.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        let shift = rem.len() - dg;
        for (j, gc) in g[..dg].iter().enumerate() {
            rem[shift + j] -= &top * gc;
        }
    }
    trim(rem)
}

/// Sturm chain of `p`: starts `p, p'`, then each element is the negated,
/// primitive-part-reduced pseudo-remainder of the previous two.
fn sturm_chain(p: ZPoly) -> Vec<ZPoly> {
    let mut chain = vec![p];
    if let Some(d) = derivative_int(&chain[0]) {
        chain.push(d);
    }
    while chain.len() >= 2 {
        let f = &chain[chain.len() - 2];
        let g = &chain[chain.len() - 1];
        match pseudo_rem(f, g) {
            Some(r) => chain.push(primitive(r).iter().map(|c| -c).collect()),
            None => break,
        }
    }
    chain
}

fn sign_at_minus_infinity(p: &ZPoly) -> i8 {
    let lead = p.last().unwrap();
    let s = if lead.is_positive() { 1 } else { -1 };
    if zdeg(p).is_multiple_of(2) {
        s
    } else {
        -s
    }
}

fn sign_at_zero(p: &ZPoly) -> i8 {
    let c = &p[0];
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign variations, zeros skipped.
fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of a squarefree `p` in `(-inf, 0]`,
/// assuming `p(0) != 0`, as the difference of sign variations.
fn nonpositive_root_count(p: ZPoly) -> usize {
    let chain = sturm_chain(p);
    let at_inf = variations(chain.iter().map(sign_at_minus_infinity));
    let at_zero = variations(chain.iter().map(sign_at_zero));
    at_inf - at_zero
}

/// GCD of two integer polynomials, primitive with a positive leading
/// coefficient.
fn gcd_int(mut f: ZPoly, mut g: ZPoly) -> ZPoly {
    if zdeg(&f) < zdeg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    while let Some(r) = pseudo_rem(&f, &g) {
        f = g;
        g = primitive(r);
    }
    if g.last().unwrap().is_negative() {
        g.iter().map(|c| -c).collect()
    } else {
        g
    }
}

fn to_poly(p: &ZPoly) -> Poly {
    Poly::from_coeffs(p.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

/// Whether every zero of `p` (with multiplicity) is real and nonpositive.
/// Roots at the origin are split off first; the squarefree part is then
/// certified by Sturm root counting, and the cofactor recursively.
pub fn real_rooted_nonpositive(p: &Poly) -> PropertyReport {
    let property = Property::RealRootedNonpositive;
    let Some(valuation) = p.valuation() else {
        return PropertyReport {
            property,
            verdict: Verdict::NotApplicable,
            witness: None,
            modes: None,
            reason: Some("zero polynomial".to_string()),
            alpha: None,
            beta: None,
        };
    };
    let mut current = to_primitive_int(&p.div_x_pow(valuation)).expect("nonzero after stripping");
    loop {
        if zdeg(&current) == 0 {
            return PropertyReport {
                property,
                verdict: Verdict::Holds,
                witness: None,
                modes: None,
                reason: None,
                alpha: None,
                beta: None,
            };
        }
        let deriv = derivative_int(&current).expect("positive degree");
        let gcd = gcd_int(current.clone(), deriv);
        let squarefree = if zdeg(&gcd) == 0 {
            current.clone()
        } else {
            let (q, r) = to_poly(&current).div_rem(&to_poly(&gcd));
            assert!(r.is_zero(), "gcd must divide exactly");
            to_primitive_int(&q).expect("nonzero quotient")
        };
        let degree = zdeg(&squarefree);
        let count = nonpositive_root_count(squarefree);
        if count != degree {
            return PropertyReport {
                property,
                verdict: Verdict::Fails,
                witness: Some(Witness {
                    site: Site::RootCount,
                    indices: vec![],
                    lhs: Rat::from_integer(Int::from(degree)),
                    rhs: Rat::from_integer(Int::from(count)),
                }),
                modes: None,
                reason: None,
                alpha: None,
                beta: None,
            };
        }
        if zdeg(&gcd) == 0 {
            return PropertyReport {
                property,
                verdict: Verdict::Holds,
                witness: None,
                modes: None,
                reason: None,
                alpha: None,
                beta: None,
            };
        }
        current = gcd;
    }
}
