//! Independent brute-force oracles: exhaustive permutation and signed
//! permutation statistics, plus exact truncated generating-function
//! expansion (in [`series`]). These validate the recurrence generators
//! without sharing any code path with them.
//!
//! The enumeration caps are hard preconditions, not soft warnings: `10!`
//! and `2^8 * 8!` cross the desk-scale line.

pub mod series;

pub use series::{egf_coefficients, SeriesZ};

use itertools::Itertools;
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Poly;
use crate::scalar::{Int, Rat};
use crate::Error;

/// Dense bivariate polynomial with arbitrary-precision integer
/// coefficients, indexed by `(x power, q power)`. Counting oracles produce
/// these; substituting a rational for `q` yields a univariate [`Poly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Vec<Int>>,
}

impl BiPoly {
    fn accumulator(x_dim: usize, q_dim: usize) -> Self {
        BiPoly {
            coeffs: vec![vec![Int::zero(); q_dim]; x_dim],
        }
    }

    fn bump(&mut self, x_power: usize, q_power: usize) {
        self.coeffs[x_power][q_power] += 1;
    }

    /// Strips all-zero trailing rows and columns into a canonical shape.
    fn finalized(mut self) -> Self {
        while self
            .coeffs
            .last()
            .is_some_and(|row| row.iter().all(|c| c.is_zero()))
        {
            self.coeffs.pop();
        }
        let width = self
            .coeffs
            .iter()
            .map(|row| row.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1))
            .max()
            .unwrap_or(0);
        for row in &mut self.coeffs {
            row.truncate(width.max(1));
        }
        self
    }

    /// Rows of coefficients: `rows()[e][c]` multiplies `x^e q^c`.
    pub fn rows(&self) -> &[Vec<Int>] {
        &self.coeffs
    }

    pub fn coeff(&self, x_power: usize, q_power: usize) -> Int {
        self.coeffs
            .get(x_power)
            .and_then(|row| row.get(q_power))
            .cloned()
            .unwrap_or_else(Int::zero)
    }

    /// Substitutes a rational value for `q`.
    pub fn eval_q(&self, q: &Rat) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| {
                let mut acc = Rat::zero();
                let mut power = Rat::one();
                for c in row {
                    if !c.is_zero() {
                        acc += Rat::from_integer(c.clone()) * &power;
                    }
                    power *= q;
                }
                acc
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Full evaluation at rational `(x, q)`.
    pub fn eval_xq(&self, x: &Rat, q: &Rat) -> Rat {
        self.eval_q(q).eval(x)
    }

    /// Substitutes `q^c -> k^{n-c}`: turns a cycle-count grading into a
    /// complement grading.
    pub fn substitute_complement_power(&self, k: &Rat, n: usize) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| {
                let mut acc = Rat::zero();
                for (c, coeff) in row.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut power = Rat::one();
                    for _ in 0..n.saturating_sub(c) {
                        power *= k;
                    }
                    acc += Rat::from_integer(coeff.clone()) * power;
                }
                acc
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut visited = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut at = start;
        while !visited[at] {
            visited[at] = true;
            at = perm[at] - 1;
        }
    }
    cycles
}

/// Joint distribution of excedances and cycles over all `n!` permutations:
/// the coefficient of `x^e q^c` counts permutations with `e` positions
/// `i` where `pi(i) > i` and `c` cycles.
pub fn qeulerian_bruteforce(n: usize) -> Result<BiPoly, Error> {
    if !(1..=9).contains(&n) {
        return Err(Error::OracleRange {
            what: "qeulerian_bruteforce",
            min: 1,
            max: 9,
            n,
        });
    }
    let mut acc = BiPoly::accumulator(n, n + 1);
    for perm in (1..=n).permutations(n) {
        let exc = perm.iter().enumerate().filter(|(i, &v)| v > i + 1).count();
        acc.bump(exc, cycle_count(&perm));
    }
    Ok(acc.finalized())
}

/// Joint distribution of descents and negative letters over all `2^n n!`
/// signed permutations. A descent is a position `i` in `0..n` with
/// `pi(i) > pi(i+1)` on the padded word `(0, pi(1), ..., pi(n))`.
pub fn typeb_bruteforce(n: usize) -> Result<BiPoly, Error> {
    if !(1..=7).contains(&n) {
        return Err(Error::OracleRange {
            what: "typeb_bruteforce",
            min: 1,
            max: 7,
            n,
        });
    }
    let mut acc = BiPoly::accumulator(n + 1, n + 1);
    for perm in (1..=n as i64).permutations(n) {
        for mask in 0u32..(1 << n) {
            let mut descents = 0;
            let mut prev = 0i64;
            for (i, &v) in perm.iter().enumerate() {
                let value = if mask & (1 << i) != 0 { -v } else { v };
                if prev > value {
                    descents += 1;
                }
                prev = value;
            }
            acc.bump(descents, mask.count_ones() as usize);
        }
    }
    Ok(acc.finalized())
}

/// Distribution over all `m!` permutations of the number of positions `i`
/// with `pi(i) >= pi(i+1) + 2`.
pub fn big_descent_bruteforce(m: usize) -> Result<Poly, Error> {
    if !(2..=9).contains(&m) {
        return Err(Error::OracleRange {
            what: "big_descent_bruteforce",
            min: 2,
            max: 9,
            n: m,
        });
    }
    let mut counts = vec![Int::zero(); m];
    for perm in (1..=m).permutations(m) {
        let big = perm.windows(2).filter(|w| w[0] >= w[1] + 2).count();
        counts[big] += 1;
    }
    Ok(Poly::from_coeffs(
        counts.into_iter().map(Rat::from_integer).collect(),
    ))
}

/// `sum over permutations of x^{exc} k^{n - cyc}`, by reusing the joint
/// excedance/cycle distribution.
pub fn one_over_k_bruteforce(k: &Rat, n: usize) -> Result<Poly, Error> {
    Ok(qeulerian_bruteforce(n)?.substitute_complement_power(k, n))
}

/// Descent distribution over `n!` permutations (an independent statistic
/// equidistributed with excedances).
pub fn descent_bruteforce(n: usize) -> Result<Poly, Error> {
    if !(1..=9).contains(&n) {
        return Err(Error::OracleRange {
            what: "descent_bruteforce",
            min: 1,
            max: 9,
            n,
        });
    }
    let mut counts = vec![Int::zero(); n];
    for perm in (1..=n).permutations(n) {
        let des = perm.windows(2).filter(|w| w[0] > w[1]).count();
        counts[des] += 1;
    }
    Ok(Poly::from_coeffs(
        counts.into_iter().map(Rat::from_integer).collect(),
    ))
}

/// Sub-verdicts for the six-term ratio bound: each flag records one exact
/// cross-multiplied inequality, `conclusion` being the full statement
///
/// ```text
/// (l1 a1 + (l - l1) a3) / (l2 a2 + (l - l2) a4)
///   <= (l1 a3 + (l - l1) a5 + mu (a5 - a3)) / (l2 a4 + (l - l2) a6 + mu (a6 - a4))
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma2Verdict {
    /// `a1 / a2 <= (a3 + a5) / (a4 + a6)`
    pub mediant_step: bool,
    /// the convex-combination bound without the `mu` terms
    pub convex_step: bool,
    /// convex combination `<= a5/a6 <= (a5 - a3)/(a6 - a4)`
    pub tail_step: bool,
    pub conclusion: bool,
}

impl Lemma2Verdict {
    pub fn all_hold(&self) -> bool {
        self.mediant_step && self.convex_step && self.tail_step && self.conclusion
    }
}

fn le(a: &Rat, b: &Rat) -> bool {
    a <= b
}

/// Checks the six-term ratio bound under its hypotheses:
/// `a1/a2 <= a3/a4 <= a5/a6`, `a2/a3 <= a4/a5`, `a3 <= a5`, `a4 <= a6`
/// (all positive), with weights `0 < l2 <= l1 <= l` and `mu >= 0`.
/// Hypothesis violations are errors, distinct from a failing conclusion.
/// Every comparison is an exact cross-product.
pub fn lemma2_check(
    a: &[Rat; 6],
    l1: &Rat,
    l2: &Rat,
    l: &Rat,
    mu: &Rat,
) -> Result<Lemma2Verdict, Error> {
    let [a1, a2, a3, a4, a5, a6] = a;
    for (i, v) in a.iter().enumerate() {
        if !v.is_positive() {
            return Err(Error::HypothesisViolated(format!(
                "a{} must be positive, got {v}",
                i + 1
            )));
        }
    }
    let hypotheses: [(&str, bool); 7] = [
        ("a1/a2 <= a3/a4", le(&(a1 * a4), &(a2 * a3))),
        ("a3/a4 <= a5/a6", le(&(a3 * a6), &(a4 * a5))),
        ("a2/a3 <= a4/a5", le(&(a2 * a5), &(a3 * a4))),
        ("a3 <= a5", le(a3, a5)),
        ("a4 <= a6", le(a4, a6)),
        (
            "0 < l2 <= l1 <= l",
            l2.is_positive() && le(l2, l1) && le(l1, l),
        ),
        ("mu >= 0", !mu.is_negative()),
    ];
    for (name, ok) in hypotheses {
        if !ok {
            return Err(Error::HypothesisViolated(name.to_string()));
        }
    }

    let lam_minus_l1 = l - l1;
    let lam_minus_l2 = l - l2;
    let left_num = l1 * a1 + &lam_minus_l1 * a3;
    let left_den = l2 * a2 + &lam_minus_l2 * a4;
    let mid_num = l1 * a3 + &lam_minus_l1 * a5;
    let mid_den = l2 * a4 + &lam_minus_l2 * a6;
    let right_num = &mid_num + mu * (a5 - a3);
    let right_den = &mid_den + mu * (a6 - a4);
    debug_assert!(left_den.is_positive() && mid_den.is_positive() && right_den.is_positive());

    Ok(Lemma2Verdict {
        mediant_step: le(&(a1 * (a4 + a6)), &(a2 * (a3 + a5))),
        convex_step: le(&(&left_num * &mid_den), &(&left_den * &mid_num)),
        tail_step: le(&(&mid_num * a6), &(&mid_den * a5))
            && le(&(a5 * (a6 - a4)), &(a6 * (a5 - a3))),
        conclusion: le(&(&left_num * &right_den), &(&left_den * &right_num)),
    })
}

/// Outcome of a randomized campaign over hypothesis-satisfying tuples.
#[derive(Clone, Debug, Default)]
pub struct Lemma2SuiteOutcome {
    pub samples: usize,
    pub attempts: usize,
    /// Tuples `(a1..a6, l1, l2, l, mu)` whose conclusion failed.
    pub failures: Vec<([Rat; 6], Rat, Rat, Rat, Rat)>,
}

impl Lemma2SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Rejection-samples `samples` rational tuples satisfying the hypotheses
/// and checks the conclusion (and all sub-inequalities) on every one.
/// Deterministic for a fixed seed.
///
/// Candidates are small enough that the hypothesis filter runs on machine
/// integers; only accepted tuples are promoted to big rationals, where
/// [`lemma2_check`] re-verifies the hypotheses exactly anyway.
pub fn lemma2_random_suite(samples: usize, seed: u64) -> Lemma2SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = Lemma2SuiteOutcome::default();
    // x <= y and x*y <= u*v on fractions (numerator, denominator)
    let frac_le = |x: (i64, i64), y: (i64, i64)| x.0 * y.1 <= y.0 * x.1;
    let prod_le = |x: (i64, i64), y: (i64, i64), u: (i64, i64), v: (i64, i64)| {
        x.0 * y.0 * u.1 * v.1 <= u.0 * v.0 * x.1 * y.1
    };
    let promote = |(n, d): (i64, i64)| Rat::new(Int::from(n), Int::from(d));
    while outcome.samples < samples {
        outcome.attempts += 1;
        let raw: [(i64, i64); 6] =
            std::array::from_fn(|_| (rng.gen_range(1..=24), rng.gen_range(1..=8)));
        let [a1, a2, a3, a4, a5, a6] = raw;
        if !(prod_le(a1, a4, a2, a3)
            && prod_le(a3, a6, a4, a5)
            && prod_le(a2, a5, a3, a4)
            && frac_le(a3, a5)
            && frac_le(a4, a6))
        {
            continue;
        }
        let a: [Rat; 6] = raw.map(promote);
        let mut weights: [Rat; 3] =
            std::array::from_fn(|_| promote((rng.gen_range(1..=24), rng.gen_range(1..=8))));
        weights.sort();
        let [l2, l1, l] = weights;
        let mu = promote((rng.gen_range(0..=24), rng.gen_range(1..=8)));
        let verdict = lemma2_check(&a, &l1, &l2, &l, &mu)
            .expect("prefilter admits only hypothesis-satisfying tuples");
        outcome.samples += 1;
        if !verdict.all_hold() {
            outcome.failures.push((a, l1, l2, l, mu));
        }
    }
    outcome
}
