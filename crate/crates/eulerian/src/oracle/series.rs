//! Exact truncated power series in `z` whose coefficients are polynomials
//! in `x` over the rationals, and the exponential-generating-function
//! expansions built on them.
//!
//! The generating functions of interest all contain `(e^w - x) / (1 - x)`
//! for some `w` proportional to `(1 - x) z`. Expanded naively, the
//! `z`-coefficients are rational functions of `x`; rewriting
//! `e^w - x = (1 - x) + sum_{j >= 1} w^j / j!` and dividing the sum termwise
//! by `(1 - x)` leaves every coefficient a genuine polynomial, because each
//! `w^j` carries the factor `(1 - x)^j`. The kernels below are constructed
//! directly in that normalized form, so polynomiality holds at every order
//! by construction. Rational powers go through `exp(r * log(.))`, which
//! requires (and asserts) a unit constant term.

use num::One;

use crate::families::{FamilyKind, FamilySpec};
use crate::poly::Poly;
use crate::scalar::{factorial, Rat};
use crate::Error;

/// Power series in `z`, truncated after `z^order`, with `Poly` coefficients.
/// All arithmetic is exact modulo `z^{order+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesZ {
    coeffs: Vec<Poly>,
}

impl SeriesZ {
    /// The zero series truncated after `z^order`.
    pub fn zero(order: usize) -> Self {
        SeriesZ {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    /// Builds a series from explicit coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least order 0");
        SeriesZ { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &Poly {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    fn assert_same_order(&self, rhs: &Self) {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        SeriesZ {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Truncated convolution product.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        let order = self.order();
        let mut coeffs = vec![Poly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        SeriesZ { coeffs }
    }

    /// `exp` of a series with zero constant term, via
    /// `g_n = (1/n) * sum_{j=1}^{n} j f_j g_{n-j}`.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesConstantTerm {
                op: "exp",
                expected: "0",
            });
        }
        let order = self.order();
        let mut out = vec![Poly::one()];
        for n in 1..=order {
            let mut acc = Poly::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let weighted = self.coeffs[j].scale(&Rat::from_integer(j.into()));
                acc = &acc + &(&weighted * &out[n - j]);
            }
            out.push(acc.scale(&Rat::new(1.into(), n.into())));
        }
        Ok(SeriesZ { coeffs: out })
    }

    /// `log` of a series with unit constant term, via
    /// `h_n = f_n - (1/n) * sum_{j=1}^{n-1} j h_j f_{n-j}`.
    pub fn log(&self) -> Result<Self, Error> {
        if self.coeffs[0] != Poly::one() {
            return Err(Error::SeriesConstantTerm {
                op: "log",
                expected: "1",
            });
        }
        let order = self.order();
        let mut out = vec![Poly::zero()];
        for n in 1..=order {
            let mut acc = Poly::zero();
            for (j, h) in out.iter().enumerate().skip(1) {
                if h.is_zero() || self.coeffs[n - j].is_zero() {
                    continue;
                }
                let weighted = h.scale(&Rat::from_integer(j.into()));
                acc = &acc + &(&weighted * &self.coeffs[n - j]);
            }
            out.push(&self.coeffs[n] - &acc.scale(&Rat::new(1.into(), n.into())));
        }
        Ok(SeriesZ { coeffs: out })
    }

    /// Rational power `self^r = exp(r * log(self))` for series with unit
    /// constant term.
    pub fn pow_rat(&self, r: &Rat) -> Result<Self, Error> {
        if self.coeffs[0] != Poly::one() {
            return Err(Error::SeriesConstantTerm {
                op: "pow",
                expected: "1",
            });
        }
        let log = self.log()?;
        SeriesZ {
            coeffs: log.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
        .exp()
    }
}

/// The normalized kernel `(e^{s(x-1)z} - x) / (1 - x)` as a series with
/// polynomial coefficients: `1 - sum_{j>=1} s^j (x-1)^{j-1} z^j / j!`.
fn excedance_kernel(order: usize, s: &Rat) -> SeriesZ {
    let x_minus_one = Poly::from_i64s(&[-1, 1]);
    let mut coeffs = vec![Poly::one()];
    let mut power = Poly::one(); // (x-1)^{j-1}
    let mut scale = Rat::one(); // s^j / j!
    for j in 1..=order {
        scale = scale * s / Rat::from_integer(j.into());
        coeffs.push(power.scale(&-scale.clone()));
        power = &power * &x_minus_one;
    }
    SeriesZ::from_coeffs(coeffs)
}

/// The normalized kernel `(1 - x e^{q(1-x)z}) / (1 - x)`:
/// `1 - x * sum_{j>=1} q^j (1-x)^{j-1} z^j / j!`.
fn colored_kernel(order: usize, q: &Rat) -> SeriesZ {
    let one_minus_x = Poly::from_i64s(&[1, -1]);
    let mut coeffs = vec![Poly::one()];
    let mut power = Poly::one(); // (1-x)^{j-1}
    let mut scale = Rat::one(); // q^j / j!
    for j in 1..=order {
        scale = scale * q / Rat::from_integer(j.into());
        coeffs.push(power.scale(&-scale.clone()).mul_x_pow(1));
        power = &power * &one_minus_x;
    }
    SeriesZ::from_coeffs(coeffs)
}

/// Expands the family's exponential generating function to the given order
/// and returns `n! * [z^n]` for `n = 0 ..= order`. Supported closed forms:
///
/// * `q-eulerian`: `((1-x) / (e^{z(x-1)} - x))^q`
/// * `one-over-k`: `((1-x) / (e^{kz(x-1)} - x))^{1/k}`
/// * `hcd`: `e^{p(1-x)z} ((1-x) / (1 - x e^{q(1-x)z}))^r`
///
/// The indexing matches [`crate::families::generate`] exactly.
pub fn egf_coefficients(spec: &FamilySpec, order: usize) -> Result<Vec<Poly>, Error> {
    let series = match spec.kind() {
        FamilyKind::QEulerian => {
            let q = spec.param("q");
            excedance_kernel(order, &Rat::one()).pow_rat(&-q.clone())?
        }
        FamilyKind::OneOverK => {
            let k = spec.param("k");
            let exponent = -(Rat::one() / k);
            excedance_kernel(order, k).pow_rat(&exponent)?
        }
        FamilyKind::HcdPqr => {
            let (p, q, r) = (spec.param("p"), spec.param("q"), spec.param("r"));
            let mut linear = SeriesZ::zero(order);
            if order >= 1 {
                linear.coeffs[1] = Poly::from_coeffs(vec![p.clone(), -p.clone()]);
            }
            let exp_factor = linear.exp()?;
            exp_factor.mul(&colored_kernel(order, q).pow_rat(&-r.clone())?)
        }
        other => return Err(Error::UnsupportedFamily(other.as_str())),
    };
    Ok(series
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| c.scale(&Rat::from_integer(factorial(n))))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;
    use crate::scalar::{int, rat};

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_i64s(coeffs)
    }

    fn linear_test_series(order: usize) -> SeriesZ {
        // z * (1 + 2x) + z^2 * x
        let mut s = SeriesZ::zero(order);
        s.coeffs[1] = p(&[1, 2]);
        s.coeffs[2] = p(&[0, 1]);
        s
    }

    #[test]
    fn exp_log_roundtrip() {
        let f = linear_test_series(7);
        let g = f.exp().unwrap();
        assert_eq!(g.coeff(0), &Poly::one());
        assert_eq!(g.log().unwrap(), f);
    }

    #[test]
    fn add_and_mul_distribute() {
        let f = linear_test_series(6);
        let g = linear_test_series(6).exp().unwrap();
        let h = g.mul(&g).add(&f.mul(&g));
        assert_eq!(h, g.add(&f).mul(&g));
    }

    #[test]
    fn exp_requires_zero_constant_term() {
        assert!(SeriesZ::one(3).exp().is_err());
        assert!(SeriesZ::zero(3).log().is_err());
    }

    #[test]
    fn pow_rat_agrees_with_repeated_multiplication() {
        let f = linear_test_series(6).exp().unwrap();
        let squared = f.pow_rat(&int(2)).unwrap();
        assert_eq!(squared, f.mul(&f));

        let root = f.pow_rat(&rat(1, 2)).unwrap();
        assert_eq!(root.mul(&root), f);

        let inverse = f.pow_rat(&int(-1)).unwrap();
        assert_eq!(inverse.mul(&f), SeriesZ::one(6));
    }

    #[test]
    fn egf_constant_term_is_one() {
        for spec in [
            FamilySpec::q_eulerian(rat(1, 2)).unwrap(),
            FamilySpec::one_over_k(int(3)).unwrap(),
            FamilySpec::hcd(int(1), int(2), rat(3, 2)).unwrap(),
        ] {
            assert_eq!(egf_coefficients(&spec, 0).unwrap()[0], Poly::one());
        }
    }

    #[test]
    fn egf_matches_printed_low_rows_at_q_one() {
        let rows = egf_coefficients(&FamilySpec::q_eulerian(int(1)).unwrap(), 3).unwrap();
        assert_eq!(rows[1], p(&[1]));
        assert_eq!(rows[2], p(&[1, 1]));
        assert_eq!(rows[3], p(&[1, 4, 1]));
    }

    #[test]
    fn egf_matches_recurrence_generation() {
        for spec in [
            FamilySpec::q_eulerian(int(2)).unwrap(),
            FamilySpec::q_eulerian(rat(1, 2)).unwrap(),
            FamilySpec::one_over_k(int(2)).unwrap(),
            FamilySpec::hcd(int(1), int(1), int(2)).unwrap(),
            FamilySpec::hcd(int(1), int(2), rat(3, 2)).unwrap(),
        ] {
            assert_eq!(egf_coefficients(&spec, 8).unwrap(), generate(&spec, 8));
        }
    }

    #[test]
    fn egf_rejects_unsupported_families() {
        let spec = FamilySpec::type_b(int(1)).unwrap();
        assert!(matches!(
            egf_coefficients(&spec, 3),
            Err(Error::UnsupportedFamily(_))
        ));
    }
}
