//! Dense univariate polynomial arithmetic over arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending power order: `coeffs[i]` is the
//! coefficient of `x^i`. Canonical form: the vector is empty for the zero
//! polynomial and otherwise ends with a nonzero entry. Every constructor
//! normalizes, so structural equality is polynomial equality and
//! `degree()` is `None` exactly for the zero polynomial.
//!
//! All values are immutable after construction and all operations are pure.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::scalar::{format_rat, Rat};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    fn normalized(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The zero polynomial (empty coefficient list).
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly {
            coeffs: vec![Rat::one()],
        }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// A constant polynomial (the zero polynomial when `c` is zero).
    pub fn constant(c: Rat) -> Self {
        Self::normalized(vec![c])
    }

    /// The monomial `c * x^power`.
    pub fn monomial(c: Rat, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); power + 1];
        coeffs[power] = c;
        Poly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        Self::normalized(coeffs)
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::normalized(coeffs.iter().map(|&c| crate::scalar::int(c)).collect())
    }

    /// Ascending coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Multiplicity of the root at 0, or `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exact Horner evaluation at `t`.
    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(i.into()))
            .collect();
        Self::normalized(coeffs)
    }

    /// The reversal `x^window * p(1/x)`: coefficient `i` of the result is
    /// coefficient `window - i` of `self`. Errors when the window is smaller
    /// than the degree.
    pub fn reverse(&self, window: usize) -> Result<Poly, Error> {
        if let Some(deg) = self.degree() {
            if deg > window {
                return Err(Error::ReverseWindow {
                    window,
                    degree: deg,
                });
            }
        }
        let mut coeffs = vec![Rat::zero(); window + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[window - i] = c.clone();
        }
        Ok(Self::normalized(coeffs))
    }

    /// Whether the coefficient sequence is symmetric about `window / 2`,
    /// i.e. `x^window * p(1/x) == p`. The zero polynomial is palindromic.
    pub fn is_palindromic(&self, window: usize) -> bool {
        match self.reverse(window) {
            Ok(rev) => rev == *self,
            Err(_) => false,
        }
    }

    /// Exact quotient of `self` by `(1 - x)`, computed by cumulative prefix
    /// sums of the coefficients. Errors unless `self(1) == 0`.
    pub fn div_one_minus_x(&self) -> Result<Poly, Error> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let mut quotient = Vec::with_capacity(self.coeffs.len() - 1);
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c;
            if i + 1 < self.coeffs.len() {
                quotient.push(acc.clone());
            }
        }
        if !acc.is_zero() {
            return Err(Error::DivisionInexact { remainder: acc });
        }
        Ok(Self::normalized(quotient))
    }

    /// Multiplies by the scalar `c`.
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn mul_x_pow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact quotient by `x^k`; panics if any of the low `k` coefficients is
    /// nonzero.
    pub fn div_x_pow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        assert!(
            self.coeffs[..k.min(self.coeffs.len())]
                .iter()
                .all(|c| c.is_zero()),
            "div_x_pow: low coefficients are not all zero"
        );
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// `self^e` by repeated multiplication.
    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: returns `(q, r)` with `self = q * divisor + r`
    /// and `deg r < deg divisor`. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let factor = &rem[k] / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = &factor * dc;
                rem[k - dd + j] -= t;
            }
            quot[k - dd] = factor;
        }
        rem.truncate(dd);
        (Self::normalized(quot), Self::normalized(rem))
    }

    /// Renders the polynomial with an arbitrary variable name, e.g.
    /// `"16 + 66*q + 36*q^2"`. Zero terms are skipped; unit coefficients
    /// print as the bare power.
    pub fn to_string_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rat::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = abs.is_one();
            if i == 0 {
                out.push_str(&format_rat(&abs));
            } else {
                if !unit {
                    out.push_str(&format_rat(&abs));
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with_var("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::normalized(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(coeffs.len().max(rhs.coeffs.len()), Rat::zero());
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Poly::normalized(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::normalized(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_i64s(coeffs)
    }

    #[test]
    fn constructors_normalize_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert_eq!(p(&[0, 0]), Poly::zero());
        assert!(Poly::constant(int(0)).is_zero());
        assert_eq!(Poly::monomial(int(0), 5), Poly::zero());
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[7]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn add_matches_known_sums() {
        // doubling
        assert_eq!(&p(&[1, 1]) + &p(&[1, 1]), p(&[2, 2]));
        // identity
        assert_eq!(&p(&[4, 0, 9]) + &Poly::zero(), p(&[4, 0, 9]));
        // assembling a decomposition: (1 + 7x + x^2) + x*(3 + 3x)
        let assembled = &p(&[1, 7, 1]) + &p(&[3, 3]).mul_x_pow(1);
        assert_eq!(assembled, p(&[1, 10, 4]));
    }

    #[test]
    fn mul_matches_known_products() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[5, -2, 3]) * &Poly::one(), p(&[5, -2, 3]));
        // q*(q + x) at q = 2
        assert_eq!(&p(&[2]) * &p(&[2, 1]), p(&[4, 2]));
    }

    #[test]
    fn derivative_power_rule() {
        assert_eq!(p(&[1, 4, 1]).derivative(), p(&[4, 2]));
        assert_eq!(p(&[9]).derivative(), Poly::zero());
        assert_eq!(Poly::zero().derivative(), Poly::zero());
        // d/dx (c + b x) = b at sampled rationals
        let b = rat(7, 3);
        let c = rat(-2, 5);
        let lin = Poly::from_coeffs(vec![c, b.clone()]);
        assert_eq!(lin.derivative(), Poly::constant(b));
    }

    #[test]
    fn reverse_flips_coefficients() {
        let lin = Poly::from_coeffs(vec![rat(1, 2), int(3)]);
        assert_eq!(
            lin.reverse(1).unwrap(),
            Poly::from_coeffs(vec![int(3), rat(1, 2)])
        );
        let pal = p(&[2, 9, 2]);
        assert_eq!(pal.reverse(2).unwrap(), pal);
        assert_eq!(p(&[16, 66, 36, 2]).reverse(3).unwrap(), p(&[2, 36, 66, 16]));
        // widening window shifts everything up
        assert_eq!(p(&[1, 1]).reverse(2).unwrap(), p(&[0, 1, 1]));
        assert!(matches!(
            p(&[1, 1, 1]).reverse(1),
            Err(Error::ReverseWindow { .. })
        ));
    }

    #[test]
    fn div_one_minus_x_by_prefix_sums() {
        assert_eq!(p(&[1, 0, -1]).div_one_minus_x().unwrap(), p(&[1, 1]));
        assert_eq!(
            p(&[81, 198, 0, -198, -81]).div_one_minus_x().unwrap(),
            p(&[81, 279, 279, 81])
        );
        assert!(matches!(
            p(&[1, 1]).div_one_minus_x(),
            Err(Error::DivisionInexact { .. })
        ));
        assert_eq!(Poly::zero().div_one_minus_x().unwrap(), Poly::zero());
    }

    #[test]
    fn eval_is_exact() {
        assert_eq!(p(&[1, 11, 11, 1]).eval(&int(1)), int(24));
        assert_eq!(p(&[7, -4, 9]).eval(&int(0)), int(7));
        // q*(q + x) at x = 1, q = 2
        let a2 = &p(&[2]) * &p(&[2, 1]);
        assert_eq!(a2.eval(&int(1)), int(6));
        assert_eq!(p(&[1, 2]).eval(&rat(1, 2)), int(2));
    }

    #[test]
    fn div_rem_recovers_factors() {
        let a = p(&[1, 3, 3, 1]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(r, Poly::zero());
        assert_eq!(&q * &b, a);

        let (q, r) = p(&[5, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(&(&q * &p(&[1, 1])) + &r, p(&[5, 0, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[6]));
    }

    #[test]
    fn display_renders_terms() {
        assert_eq!(
            p(&[16, 66, 36, 2]).to_string(),
            "16 + 66*x + 36*x^2 + 2*x^3"
        );
        assert_eq!(p(&[1, 1]).to_string(), "1 + x");
        assert_eq!(p(&[-78, -204, -78]).to_string(), "-78 - 204*x - 78*x^2");
        assert_eq!(p(&[0, 0, 1]).to_string(), "x^2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(
            Poly::from_coeffs(vec![rat(3, 2), rat(-1, 2)]).to_string(),
            "3/2 - 1/2*x"
        );
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(arb_rat(), 0..8).prop_map(Poly::from_coeffs)
    }

    proptest! {
        #[test]
        fn reverse_is_an_involution(q in arb_poly(), extra in 0usize..4) {
            let window = q.degree().unwrap_or(0) + extra;
            let twice = q.reverse(window).unwrap().reverse(window).unwrap();
            prop_assert_eq!(twice, q);
        }

        #[test]
        fn div_one_minus_x_inverts_multiplication(q in arb_poly()) {
            let one_minus_x = Poly::from_i64s(&[1, -1]);
            let product = &one_minus_x * &q;
            prop_assert_eq!(product.div_one_minus_x().unwrap(), q);
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), t in arb_rat()) {
            let lhs = (&a * &b).eval(&t);
            let rhs = a.eval(&t) * b.eval(&t);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn no_poly_carries_trailing_zeros(a in arb_poly(), b in arb_poly()) {
            for q in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(q.coeffs().last().is_none_or(|c| !c.is_zero()));
            }
        }
    }
}
