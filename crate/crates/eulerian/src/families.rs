//! Recurrence generators for Eulerian-type polynomial families, their
//! symmetric decompositions, and the coupled recurrences for gamma
//! coordinates.
//!
//! Every family is driven through the single step
//! `f_{n+1} = (a n x + b x + c) f_n + a x (1 - x) f_n'`,
//! which acts on coefficients as
//! `f_{n+1,i} = (a i + c) f_{n,i} + (a (n - i) + a + b) f_{n,i-1}`.
//! A family is a triple `(a, b, c)`, a seed polynomial, and an index
//! convention (whether the published index runs one ahead of the raw
//! iteration).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::analysis::GammaVector;
use crate::poly::Poly;
use crate::scalar::Rat;
use crate::Error;

/// The polynomial families the generator knows how to drive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Raw `(a, b, c)` recurrence from the seed 1.
    GeneralAbc,
    /// `(q n x + (q r - p) x + p)` recurrence with derivative weight `q`.
    HcdPqr,
    /// Excedance/cycle `q`-analogue of the Eulerian polynomials.
    QEulerian,
    /// Reciprocals of the shifted q-Eulerian family.
    LiShanlan,
    /// `1/k`-Eulerian polynomials.
    OneOverK,
    /// Descent/negative-letter `q`-analogue over signed permutations.
    TypeBQ,
    /// `r`-colored Eulerian polynomials.
    RColored,
    /// Two-parameter generalized Eulerian polynomials.
    CarlitzScoville,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::GeneralAbc,
        FamilyKind::HcdPqr,
        FamilyKind::QEulerian,
        FamilyKind::LiShanlan,
        FamilyKind::OneOverK,
        FamilyKind::TypeBQ,
        FamilyKind::RColored,
        FamilyKind::CarlitzScoville,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::GeneralAbc => "general",
            FamilyKind::HcdPqr => "hcd",
            FamilyKind::QEulerian => "q-eulerian",
            FamilyKind::LiShanlan => "li-shanlan",
            FamilyKind::OneOverK => "one-over-k",
            FamilyKind::TypeBQ => "type-b",
            FamilyKind::RColored => "r-colored",
            FamilyKind::CarlitzScoville => "carlitz-scoville",
        }
    }

    /// Exact parameter names required by this family.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyKind::GeneralAbc => &["a", "b", "c"],
            FamilyKind::HcdPqr => &["p", "q", "r"],
            FamilyKind::QEulerian | FamilyKind::LiShanlan | FamilyKind::TypeBQ => &["q"],
            FamilyKind::OneOverK => &["k"],
            FamilyKind::RColored => &["r"],
            FamilyKind::CarlitzScoville => &["p", "q"],
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// A family plus concrete nonnegative rational parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    kind: FamilyKind,
    params: BTreeMap<String, Rat>,
}

impl FamilySpec {
    /// Validates that exactly the required parameter names are present and
    /// that all values are nonnegative.
    pub fn new(kind: FamilyKind, params: BTreeMap<String, Rat>) -> Result<Self, Error> {
        let expected = kind.param_names();
        let got: Vec<String> = params.keys().cloned().collect();
        if got.len() != expected.len() || !expected.iter().all(|n| params.contains_key(*n)) {
            return Err(Error::BadFamilyParams {
                kind: kind.as_str(),
                expected: expected.to_vec(),
                got,
            });
        }
        for (name, value) in &params {
            if value < &Rat::zero() {
                return Err(Error::NegativeParameter {
                    name: name.clone(),
                    value: value.clone(),
                });
            }
        }
        Ok(FamilySpec { kind, params })
    }

    fn from_pairs(kind: FamilyKind, pairs: &[(&str, Rat)]) -> Result<Self, Error> {
        Self::new(
            kind,
            pairs
                .iter()
                .map(|(n, v)| (n.to_string(), v.clone()))
                .collect(),
        )
    }

    pub fn general(a: Rat, b: Rat, c: Rat) -> Result<Self, Error> {
        Self::from_pairs(FamilyKind::GeneralAbc, &[("a", a), ("b", b), ("c", c)])
    }

    pub fn hcd(p: Rat, q: Rat, r: Rat) -> Result<Self, Error> {
        Self::from_pairs(FamilyKind::HcdPqr, &[("p", p), ("q", q), ("r", r)])
    }

    pub fn q_eulerian(q: Rat) -> Result<Self, Error> {
        Self::from_pairs(FamilyKind::QEulerian, &[("q", q)])
    }

    pub fn li_shanlan(q: Rat) -> Result<Self, Error> {
        Self::from_pairs(FamilyKind::LiShanlan, &[("q", q)])
    }

    pub fn one_over_k(k: Rat) -> Result<Self, Error> {
        Self::from_pairs(FamilyKind::OneOverK, &[("k", k)])
    }

    pub fn type_b(q: Rat) -> Result<Self, Error> {
        Self::from_pairs(FamilyKind::TypeBQ, &[("q", q)])
    }

    pub fn r_colored(r: Rat) -> Result<Self, Error> {
        Self::from_pairs(FamilyKind::RColored, &[("r", r)])
    }

    pub fn carlitz_scoville(p: Rat, q: Rat) -> Result<Self, Error> {
        Self::from_pairs(FamilyKind::CarlitzScoville, &[("p", p), ("q", q)])
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn params(&self) -> &BTreeMap<String, Rat> {
        &self.params
    }

    /// Parameter value by validated name. Panics on a name foreign to the
    /// family, which `new` has ruled out.
    pub fn param(&self, name: &str) -> &Rat {
        &self.params[name]
    }

    /// The `(a, b, c)` step, seed, and index convention this family reduces
    /// to:
    ///
    /// | family           | (a, b, c)          | seed | published index  |
    /// |------------------|--------------------|------|------------------|
    /// | general          | (a, b, c)          | 1    | direct           |
    /// | hcd              | (q, q r - p, p)    | 1    | direct           |
    /// | q-eulerian       | (1, 1, q)          | q    | one ahead        |
    /// | li-shanlan       | (1, q, 1)          | q    | direct           |
    /// | one-over-k       | (k, k, 1)          | 1    | one ahead        |
    /// | type-b           | (1 + q, q, 1)      | 1    | direct           |
    /// | r-colored        | (r, r - 1, 1)      | 1    | direct           |
    /// | carlitz-scoville | (1, p, q)          | 1    | direct           |
    ///
    /// "One ahead" means position `n` of [`generate`] holds the polynomial
    /// of published index `n`, with the seed sitting at position 1 and the
    /// defined base case 1 at position 0.
    ///
    /// For `hcd` the derived `b = q r - p` is negative when `q r < p`, and
    /// for `r-colored` when `r < 1`; generation still runs exactly there,
    /// but coefficient nonnegativity (and with it every order property) is
    /// only meaningful when `b >= 0`.
    pub fn reduction(&self) -> Reduction {
        let one = Rat::one();
        match self.kind {
            FamilyKind::GeneralAbc => Reduction {
                a: self.param("a").clone(),
                b: self.param("b").clone(),
                c: self.param("c").clone(),
                seed: Poly::one(),
                shifted: false,
            },
            FamilyKind::HcdPqr => {
                let (p, q, r) = (self.param("p"), self.param("q"), self.param("r"));
                Reduction {
                    a: q.clone(),
                    b: q * r - p,
                    c: p.clone(),
                    seed: Poly::one(),
                    shifted: false,
                }
            }
            FamilyKind::QEulerian => Reduction {
                a: one.clone(),
                b: one,
                c: self.param("q").clone(),
                seed: Poly::constant(self.param("q").clone()),
                shifted: true,
            },
            FamilyKind::LiShanlan => Reduction {
                a: one.clone(),
                b: self.param("q").clone(),
                c: one,
                seed: Poly::constant(self.param("q").clone()),
                shifted: false,
            },
            FamilyKind::OneOverK => Reduction {
                a: self.param("k").clone(),
                b: self.param("k").clone(),
                c: one,
                seed: Poly::one(),
                shifted: true,
            },
            FamilyKind::TypeBQ => {
                let q = self.param("q");
                Reduction {
                    a: q + &one,
                    b: q.clone(),
                    c: one,
                    seed: Poly::one(),
                    shifted: false,
                }
            }
            FamilyKind::RColored => {
                let r = self.param("r");
                Reduction {
                    a: r.clone(),
                    b: r - &one,
                    c: one,
                    seed: Poly::one(),
                    shifted: false,
                }
            }
            FamilyKind::CarlitzScoville => Reduction {
                a: one,
                b: self.param("p").clone(),
                c: self.param("q").clone(),
                seed: Poly::one(),
                shifted: false,
            },
        }
    }
}

/// A family reduced to the common recurrence step.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub seed: Poly,
    /// Published index runs one ahead of the raw iteration; position 0 of
    /// the generated list holds the constant base case 1.
    pub shifted: bool,
}

/// One step of the recurrence: given `f = f_n`, returns
/// `f_{n+1} = (a n x + b x + c) f + a x (1 - x) f'`, computed per
/// coefficient as `f_{n+1,i} = (a i + c) f_i + (a (n - i) + a + b) f_{i-1}`.
pub fn recurrence_step(a: &Rat, b: &Rat, c: &Rat, f: &Poly, n: usize) -> Poly {
    if f.is_zero() {
        return Poly::zero();
    }
    let len = f.coeffs().len() + 1;
    let n = Rat::from_integer(n.into());
    let mut coeffs = Vec::with_capacity(len);
    for i in 0..len {
        let i_rat = Rat::from_integer(i.into());
        let mut acc = Rat::zero();
        if i < len - 1 {
            acc += (a * &i_rat + c) * f.coeff(i);
        }
        if i > 0 {
            acc += (a * (&n - &i_rat) + a + b) * f.coeff(i - 1);
        }
        coeffs.push(acc);
    }
    Poly::from_coeffs(coeffs)
}

/// Generates the family at positions `0..=n_max` under its published index
/// convention (see [`FamilySpec::reduction`]).
pub fn generate(spec: &FamilySpec, n_max: usize) -> Vec<Poly> {
    let red = spec.reduction();
    let mut out = Vec::with_capacity(n_max + 1);
    if red.shifted {
        out.push(Poly::one());
        if n_max >= 1 {
            out.push(red.seed.clone());
        }
    } else {
        out.push(red.seed.clone());
    }
    let mut cur = red.seed;
    while out.len() <= n_max {
        let step_index = out.len() - if red.shifted { 2 } else { 1 };
        cur = recurrence_step(&red.a, &red.b, &red.c, &cur, step_index);
        out.push(cur.clone());
    }
    out
}

/// The unique split `f = a(x) + x b(x)` with both parts palindromic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymDecomp {
    /// Palindromic about `deg f / 2`; degree `deg f` whenever `f(0) != 0`.
    pub a_part: Poly,
    /// Palindromic about `(deg f - 1) / 2`; the zero polynomial exactly when
    /// `f` is palindromic.
    pub b_part: Poly,
}

/// Symmetric decomposition of `f` of degree `n`:
/// `a = (f - x^{n+1} f(1/x)) / (1 - x)` and `b = (x^n f(1/x) - f) / (1 - x)`.
/// Both divisions are always exact; this is asserted, not assumed.
pub fn sym_decomp(f: &Poly) -> SymDecomp {
    let Some(n) = f.degree() else {
        return SymDecomp {
            a_part: Poly::zero(),
            b_part: Poly::zero(),
        };
    };
    let rev = f.reverse(n).expect("window equals degree");
    let a_part = (f - &rev.mul_x_pow(1))
        .div_one_minus_x()
        .expect("f - x*rev vanishes at 1");
    let b_part = (&rev - f).div_one_minus_x().expect("rev - f vanishes at 1");
    debug_assert_eq!(&a_part + &b_part.mul_x_pow(1), *f);
    SymDecomp { a_part, b_part }
}

/// Runs the coupled recurrence system for the symmetric parts directly:
///
/// ```text
/// a_{n+1} = (a n x + c + c x) a_n + a x (1 - x) a_n' + (a - b + c) x b_n
/// b_{n+1} = (a n x - a x + b x + b) b_n + a x (1 - x) b_n' + (b - c) a_n
/// ```
///
/// from `a_0 = 1`, `b_0 = 0`. Index `n` of the result decomposes the
/// general-family polynomial `f_n`.
pub fn sym_decomp_recurrence(a: &Rat, b: &Rat, c: &Rat, n_max: usize) -> Vec<SymDecomp> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut a_n = Poly::one();
    let mut b_n = Poly::zero();
    out.push(SymDecomp {
        a_part: a_n.clone(),
        b_part: b_n.clone(),
    });
    // a x (1 - x), with the derivative weight folded in
    let x_shape = Poly::from_coeffs(vec![Rat::zero(), a.clone(), -a.clone()]);
    for n in 0..n_max {
        let n_rat = Rat::from_integer(n.into());
        let lin_a = Poly::from_coeffs(vec![c.clone(), a * &n_rat + c]);
        let lin_b = Poly::from_coeffs(vec![b.clone(), a * &n_rat - a + b]);
        let next_a = &(&(&lin_a * &a_n) + &(&x_shape * &a_n.derivative()))
            + &b_n.mul_x_pow(1).scale(&(a - b + c));
        let next_b = &(&(&lin_b * &b_n) + &(&x_shape * &b_n.derivative())) + &a_n.scale(&(b - c));
        a_n = next_a;
        b_n = next_b;
        out.push(SymDecomp {
            a_part: a_n.clone(),
            b_part: b_n.clone(),
        });
    }
    out
}

/// Gamma coordinates of the two symmetric parts of `f_n`: `alpha` expands
/// `a_n` in the basis `x^k (1+x)^{n-2k}` and `beta` expands `b_n` in
/// `x^k (1+x)^{n-1-2k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaPair {
    pub alpha: GammaVector,
    pub beta: GammaVector,
}

/// Runs the coordinate recurrence in the gamma basis:
///
/// ```text
/// alpha_{n+1,k} = (a k + c) alpha_{n,k} + 2 a (n - 2k + 2) alpha_{n,k-1} + (a - b + c) beta_{n,k-1}
/// beta_{n+1,k}  = (a k + b) beta_{n,k}  + 2 a (n - 2k + 1) beta_{n,k-1}  + (b - c) alpha_{n,k}
/// ```
///
/// from `alpha_{0,0} = 1`, `beta_{0,0} = 0`. Entry `n` of the result carries
/// `alpha` of length `floor(n/2) + 1` and `beta` of length
/// `floor((n-1)/2) + 1` (empty for `n = 0`).
pub fn gamma_recurrence(a: &Rat, b: &Rat, c: &Rat, n_max: usize) -> Vec<GammaPair> {
    let get = |v: &[Rat], k: isize| -> Rat {
        if k < 0 || k as usize >= v.len() {
            Rat::zero()
        } else {
            v[k as usize].clone()
        }
    };
    let mut alpha = vec![Rat::one()];
    let mut beta: Vec<Rat> = Vec::new();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(GammaPair {
        alpha: GammaVector::new(alpha.clone(), 0),
        beta: GammaVector::new(beta.clone(), 0),
    });
    for n in 0..n_max {
        let n_rat = Rat::from_integer(n.into());
        let two_a = a * Rat::from_integer(2.into());
        let mut next_alpha = Vec::with_capacity(n.div_ceil(2) + 1);
        for k in 0..=n.div_ceil(2) as isize {
            let k_rat = Rat::from_integer(k.into());
            let carry = &n_rat - &k_rat - &k_rat + Rat::from_integer(2.into());
            next_alpha.push(
                (a * &k_rat + c) * get(&alpha, k)
                    + &two_a * carry * get(&alpha, k - 1)
                    + (a - b + c) * get(&beta, k - 1),
            );
        }
        let mut next_beta = Vec::with_capacity(n / 2 + 1);
        for k in 0..=(n / 2) as isize {
            let k_rat = Rat::from_integer(k.into());
            let carry = &n_rat - &k_rat - &k_rat + Rat::one();
            next_beta.push(
                (a * &k_rat + b) * get(&beta, k)
                    + &two_a * carry * get(&beta, k - 1)
                    + (b - c) * get(&alpha, k),
            );
        }
        alpha = next_alpha;
        beta = next_beta;
        out.push(GammaPair {
            alpha: GammaVector::new(alpha.clone(), n + 1),
            beta: GammaVector::new(beta.clone(), n),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_i64s(coeffs)
    }

    fn general_polys(a: i64, b: i64, c: i64, n_max: usize) -> Vec<Poly> {
        generate(&FamilySpec::general(int(a), int(b), int(c)).unwrap(), n_max)
    }

    /// Closed forms for the first three steps from the seed 1.
    fn f123(a: &Rat, b: &Rat, c: &Rat) -> [Poly; 3] {
        let f1 = Poly::from_coeffs(vec![c.clone(), b.clone()]);
        let f2 = Poly::from_coeffs(vec![c * c, a * c + b * c + b * c + a * b, b * b]);
        let a2 = a * a;
        let f3 = Poly::from_coeffs(vec![
            c * c * c,
            &a2 * c + &a2 * b + int(3) * (a * b * c + b * c * c + a * c * c),
            &a2 * c + &a2 * b + int(3) * (a * b * c + b * b * c + a * b * b),
            b * b * b,
        ]);
        [f1, f2, f3]
    }

    #[test]
    fn step_from_seed_is_c_plus_bx() {
        for (a, b, c) in [(1, 1, 1), (2, 1, 1), (0, 3, 2), (5, 0, 4)] {
            let f1 = recurrence_step(&int(a), &int(b), &int(c), &Poly::one(), 0);
            assert_eq!(f1, p(&[c, b]));
        }
    }

    #[test]
    fn first_steps_match_closed_forms() {
        for (a, b, c) in [(1, 1, 1), (2, 1, 1), (3, 2, 1), (1, 3, 2), (0, 2, 2)] {
            let (a, b, c) = (int(a), int(b), int(c));
            let polys = generate(
                &FamilySpec::general(a.clone(), b.clone(), c.clone()).unwrap(),
                3,
            );
            let [f1, f2, f3] = f123(&a, &b, &c);
            assert_eq!(polys[1], f1);
            assert_eq!(polys[2], f2);
            assert_eq!(polys[3], f3);
        }
    }

    #[test]
    fn two_steps_at_2_1_1_give_type_b_row() {
        assert_eq!(general_polys(2, 1, 1, 2)[2], p(&[1, 6, 1]));
    }

    #[test]
    fn step_agrees_with_operator_form() {
        // (a n x + b x + c) f + a x (1 - x) f'
        let (a, b, c) = (rat(3, 2), rat(1, 3), int(2));
        let mut f = Poly::one();
        for n in 0..8usize {
            let n_rat = Rat::from_integer(n.into());
            let lin = Poly::from_coeffs(vec![c.clone(), &a * &n_rat + &b]);
            let x_shape = Poly::from_coeffs(vec![Rat::zero(), a.clone(), -a.clone()]);
            let operator = &(&lin * &f) + &(&x_shape * &f.derivative());
            let stepped = recurrence_step(&a, &b, &c, &f, n);
            assert_eq!(stepped, operator);
            f = stepped;
        }
    }

    #[test]
    fn q_eulerian_small_rows() {
        let polys = generate(&FamilySpec::q_eulerian(int(3)).unwrap(), 4);
        assert_eq!(polys[0], Poly::one());
        assert_eq!(polys[1], p(&[3]));
        assert_eq!(polys[2], p(&[9, 3]));
        assert_eq!(polys[3], p(&[27, 30, 3]));
        assert_eq!(polys[4], p(&[81, 201, 75, 3]));
    }

    #[test]
    fn q_eulerian_third_row_identity() {
        // q^3 + (3q^2 + q) x + q x^2 at sampled rationals
        for q in [rat(1, 2), int(1), int(2), rat(7, 3), int(5)] {
            let polys = generate(&FamilySpec::q_eulerian(q.clone()).unwrap(), 3);
            let expect = Poly::from_coeffs(vec![&q * &q * &q, int(3) * &q * &q + &q, q.clone()]);
            assert_eq!(polys[3], expect);
        }
    }

    #[test]
    fn q_eulerian_rows_at_two_three_four() {
        let a4 = |q: i64| generate(&FamilySpec::q_eulerian(int(q)).unwrap(), 4)[4].clone();
        assert_eq!(a4(2), p(&[16, 66, 36, 2]));
        assert_eq!(a4(3), p(&[81, 201, 75, 3]));
        assert_eq!(a4(4), p(&[256, 452, 128, 4]));
    }

    #[test]
    fn type_b_at_one_matches_classical_rows() {
        let polys = generate(&FamilySpec::type_b(int(1)).unwrap(), 4);
        assert_eq!(polys[1], p(&[1, 1]));
        assert_eq!(polys[2], p(&[1, 6, 1]));
        assert_eq!(polys[4], p(&[1, 76, 230, 76, 1]));
    }

    #[test]
    fn one_over_k_at_one_is_classical_eulerian() {
        let polys = generate(&FamilySpec::one_over_k(int(1)).unwrap(), 5);
        assert_eq!(polys[2], p(&[1, 1]));
        assert_eq!(polys[5], p(&[1, 26, 66, 26, 1]));
    }

    #[test]
    fn li_shanlan_is_reciprocal_of_shifted_q_eulerian() {
        for q in [rat(1, 2), int(1), int(2), int(3)] {
            let a_polys = generate(&FamilySpec::q_eulerian(q.clone()).unwrap(), 9);
            let l_polys = generate(&FamilySpec::li_shanlan(q.clone()).unwrap(), 8);
            for n in 0..=8usize {
                assert_eq!(l_polys[n], a_polys[n + 1].reverse(n).unwrap());
            }
        }
    }

    #[test]
    fn r_colored_reduces_to_type_a_and_type_b() {
        let type_a = generate(&FamilySpec::r_colored(int(1)).unwrap(), 5);
        assert_eq!(type_a[3], p(&[1, 4, 1]));
        assert_eq!(type_a[4], p(&[1, 11, 11, 1]));
        let type_b = generate(&FamilySpec::r_colored(int(2)).unwrap(), 4);
        assert_eq!(type_b, generate(&FamilySpec::type_b(int(1)).unwrap(), 4));
    }

    #[test]
    fn hcd_reduction_matches_direct_parameters() {
        // (p, q, r) = (1, 1, 2) reduces to (a, b, c) = (1, 1, 1)
        let hcd = generate(&FamilySpec::hcd(int(1), int(1), int(2)).unwrap(), 6);
        let gen = general_polys(1, 1, 1, 6);
        assert_eq!(hcd, gen);
    }

    #[test]
    fn spec_validation_rejects_bad_inputs() {
        let mut params = BTreeMap::new();
        params.insert("a".to_string(), int(1));
        assert!(matches!(
            FamilySpec::new(FamilyKind::GeneralAbc, params),
            Err(Error::BadFamilyParams { .. })
        ));
        assert!(matches!(
            FamilySpec::q_eulerian(int(-1)),
            Err(Error::NegativeParameter { .. })
        ));
        assert!("nope".parse::<FamilyKind>().is_err());
        assert_eq!(
            "q-eulerian".parse::<FamilyKind>().unwrap(),
            FamilyKind::QEulerian
        );
    }

    #[test]
    fn sym_decomp_examples() {
        let d = sym_decomp(&p(&[1, 10, 4]));
        assert_eq!(d.a_part, p(&[1, 7, 1]));
        assert_eq!(d.b_part, p(&[3, 3]));

        let d = sym_decomp(&p(&[81, 201, 75, 3]));
        assert_eq!(d.a_part, p(&[81, 279, 279, 81]));
        assert_eq!(d.b_part, p(&[-78, -204, -78]));

        let palindromic = p(&[2, 5, 5, 2]);
        let d = sym_decomp(&palindromic);
        assert_eq!(d.a_part, palindromic);
        assert_eq!(d.b_part, Poly::zero());

        let d = sym_decomp(&Poly::zero());
        assert_eq!(d.a_part, Poly::zero());
        assert_eq!(d.b_part, Poly::zero());
    }

    #[test]
    fn sym_decomp_parts_are_palindromic_and_reassemble() {
        for (a, b, c) in [(1, 1, 2), (2, 1, 1), (1, 3, 2), (0, 2, 1)] {
            for f in &general_polys(a, b, c, 10) {
                let d = sym_decomp(f);
                assert_eq!(&d.a_part + &d.b_part.mul_x_pow(1), *f);
                let deg = f.degree().unwrap();
                assert!(d.a_part.is_palindromic(deg));
                if deg > 0 {
                    assert!(d.b_part.is_palindromic(deg - 1));
                }
                // deg a = 1 + deg b unless b vanishes
                match d.b_part.degree() {
                    None => {}
                    Some(bd) => assert_eq!(d.a_part.degree(), Some(bd + 1)),
                }
            }
        }
    }

    #[test]
    fn recurrence_system_first_terms() {
        for (a, b, c) in [(1, 1, 1), (2, 1, 1), (1, 3, 2), (3, 2, 5)] {
            let (ar, br, cr) = (int(a), int(b), int(c));
            let decs = sym_decomp_recurrence(&ar, &br, &cr, 2);
            assert_eq!(
                decs[1].a_part,
                Poly::from_coeffs(vec![cr.clone(), cr.clone()])
            );
            assert_eq!(decs[1].b_part, Poly::constant(&br - &cr));
            let a2 = Poly::from_coeffs(vec![
                &cr * &cr,
                &ar * &br - &br * &br + &ar * &cr + int(2) * &br * &cr + &cr * &cr,
                &cr * &cr,
            ]);
            let b2 = Poly::constant(&br * &br - &cr * &cr) * Poly::from_i64s(&[1, 1]);
            assert_eq!(decs[2].a_part, a2);
            assert_eq!(decs[2].b_part, b2);
        }
    }

    #[test]
    fn recurrence_system_agrees_with_direct_decomposition() {
        // b > 0 keeps deg f_n = n, where the two routes coincide
        for (a, b, c) in [(1, 1, 1), (2, 1, 1), (1, 3, 2), (0, 2, 1), (3, 1, 4)] {
            let (ar, br, cr) = (int(a), int(b), int(c));
            let decs = sym_decomp_recurrence(&ar, &br, &cr, 10);
            for (n, f) in general_polys(a, b, c, 10).iter().enumerate() {
                assert_eq!(decs[n], sym_decomp(f), "(a,b,c)=({a},{b},{c}), n={n}");
            }
        }
    }

    #[test]
    fn recurrence_system_splits_about_nominal_degree() {
        // with b = 0 the polynomials degenerate below index degree; the
        // system still splits f_n about the nominal windows (n, n-1)
        let (a, b, c) = (int(4), int(0), int(3));
        let decs = sym_decomp_recurrence(&a, &b, &c, 8);
        for (n, f) in general_polys(4, 0, 3, 8).iter().enumerate() {
            assert_eq!(&decs[n].a_part + &decs[n].b_part.mul_x_pow(1), *f);
            assert!(decs[n].a_part.is_palindromic(n));
            if n > 0 {
                assert!(decs[n].b_part.is_palindromic(n - 1));
            }
        }
    }

    #[test]
    fn gamma_recurrence_first_terms() {
        let pairs = gamma_recurrence(&int(1), &int(1), &int(1), 2);
        assert_eq!(pairs[1].alpha.entries(), &[int(1)]);
        assert_eq!(pairs[1].beta.entries(), &[int(0)]);
        assert_eq!(pairs[2].alpha.entries(), &[int(1), int(2)]);
        assert_eq!(pairs[2].beta.entries(), &[int(0)]);

        let pairs = gamma_recurrence(&int(3), &int(2), &int(5), 1);
        assert_eq!(pairs[1].alpha.entries(), &[int(5)]);
        assert_eq!(pairs[1].beta.entries(), &[int(-3)]);
    }

    #[test]
    fn gamma_recurrence_reconstructs_symmetric_parts() {
        for (a, b, c) in [(1, 1, 1), (2, 1, 1), (1, 3, 2), (2, 2, 2)] {
            let (ar, br, cr) = (int(a), int(b), int(c));
            let pairs = gamma_recurrence(&ar, &br, &cr, 9);
            let decs = sym_decomp_recurrence(&ar, &br, &cr, 9);
            for n in 0..=9usize {
                assert_eq!(pairs[n].alpha.to_poly(), decs[n].a_part);
                assert_eq!(pairs[n].beta.to_poly(), decs[n].b_part);
            }
        }
    }

    #[test]
    fn equal_b_and_c_collapse_to_palindromic() {
        for (a, b) in [(1, 1), (2, 3), (3, 1)] {
            let pairs = gamma_recurrence(&int(a), &int(b), &int(b), 8);
            for (n, f) in general_polys(a, b, b, 8).iter().enumerate() {
                assert!(pairs[n].beta.entries().iter().all(|e| e.is_zero()));
                if let Some(deg) = f.degree() {
                    assert!(f.is_palindromic(deg));
                }
            }
        }
    }
}
