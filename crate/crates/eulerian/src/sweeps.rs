//! Parameter-sweep campaigns: grid the family parameters, filter each cell
//! by a claim's hypothesis, run the claimed property on every generated
//! polynomial, and record each failure with a replayable witness.
//!
//! Cells run concurrently with task-local state; outcomes merge by
//! concatenation and are sorted before reporting, so results are
//! deterministic regardless of scheduling.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};
use rayon::prelude::*;

use crate::analysis::{
    bi_gamma, darroch_bounds, gamma_vector_centered, ratio_monotone, real_rooted_nonpositive,
    unimodal, GammaVector, PropertyReport, Site, Witness,
};
use crate::families::{gamma_recurrence, generate, sym_decomp, FamilyKind, FamilySpec};
use crate::poly::Poly;
use crate::scalar::Rat;
use crate::Error;

/// Inclusive rational range with a positive step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: Rat,
    pub hi: Rat,
    pub step: Rat,
}

impl ParamRange {
    pub fn new(lo: Rat, hi: Rat, step: Rat) -> Self {
        ParamRange { lo, hi, step }
    }

    /// A single-point range.
    pub fn point(v: Rat) -> Self {
        ParamRange {
            lo: v.clone(),
            hi: v,
            step: Rat::one(),
        }
    }

    fn values(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        let mut v = self.lo.clone();
        while v <= self.hi {
            out.push(v.clone());
            v += &self.step;
        }
        out
    }
}

/// Named claims a sweep can assert on each hypothesis-satisfying cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Assertion {
    /// `a + c >= b >= c > 0` implies every `f_n` is bi-gamma-positive,
    /// certified through BOTH the gamma coordinate recurrence and direct
    /// decomposition plus extraction; the two routes must agree exactly.
    Theorem1BiGamma,
    /// Same hypothesis; the reciprocal `x^n f_n(1/x)` is ratio monotone.
    Theorem1RatioReciprocal,
    /// `a + b >= c >= b > 0` implies every `f_n` is ratio monotone.
    StatementIiRatio,
    /// `q + 2p >= q r >= 2p > 0` implies bi-gamma-positivity and a ratio
    /// monotone reciprocal.
    CorollaryHcdForward,
    /// `q (1 + r) >= 2p >= q r > 0` implies ratio monotonicity.
    CorollaryHcdReverse,
    /// Every generated polynomial has only real nonpositive zeros.
    RealRooted,
    /// Wherever real-rootedness holds, every mode sits inside the
    /// floor/ceil window of `f'(1)/f(1)`.
    DarrochModes,
    /// Inverted claim, checked at `n = n_max` only: bi-gamma-positivity
    /// must FAIL there; a violation records it unexpectedly holding.
    BiGammaFailsExpected,
}

impl Assertion {
    pub fn as_str(self) -> &'static str {
        match self {
            Assertion::Theorem1BiGamma => "theorem1-bigamma",
            Assertion::Theorem1RatioReciprocal => "theorem1-ratio-reciprocal",
            Assertion::StatementIiRatio => "statement2-ratio",
            Assertion::CorollaryHcdForward => "hcd-forward",
            Assertion::CorollaryHcdReverse => "hcd-reverse",
            Assertion::RealRooted => "real-rooted",
            Assertion::DarrochModes => "darroch-modes",
            Assertion::BiGammaFailsExpected => "bigamma-fails",
        }
    }

    /// The family an assertion's hypothesis is phrased over, if it is tied
    /// to one.
    fn required_family(self) -> Option<FamilyKind> {
        match self {
            Assertion::Theorem1BiGamma
            | Assertion::Theorem1RatioReciprocal
            | Assertion::StatementIiRatio => Some(FamilyKind::GeneralAbc),
            Assertion::CorollaryHcdForward | Assertion::CorollaryHcdReverse => {
                Some(FamilyKind::HcdPqr)
            }
            Assertion::RealRooted | Assertion::DarrochModes | Assertion::BiGammaFailsExpected => {
                None
            }
        }
    }

    /// Hypothesis filter over a concrete parameter cell. Boundary
    /// equalities are included; only the final `> 0` is strict.
    fn hypothesis(self, spec: &FamilySpec) -> bool {
        match self {
            Assertion::Theorem1BiGamma | Assertion::Theorem1RatioReciprocal => {
                let (a, b, c) = (spec.param("a"), spec.param("b"), spec.param("c"));
                a + c >= *b && b >= c && c > &Rat::zero()
            }
            Assertion::StatementIiRatio => {
                let (a, b, c) = (spec.param("a"), spec.param("b"), spec.param("c"));
                a + b >= *c && c >= b && b > &Rat::zero()
            }
            Assertion::CorollaryHcdForward => {
                let (p, q, r) = (spec.param("p"), spec.param("q"), spec.param("r"));
                let qr = q * r;
                let two_p = p + p;
                q + &two_p >= qr && qr >= two_p && p > &Rat::zero()
            }
            Assertion::CorollaryHcdReverse => {
                let (p, q, r) = (spec.param("p"), spec.param("q"), spec.param("r"));
                let qr = q * r;
                let two_p = p + p;
                q * (Rat::one() + r) >= two_p && two_p >= qr && qr > Rat::zero()
            }
            Assertion::RealRooted | Assertion::DarrochModes | Assertion::BiGammaFailsExpected => {
                true
            }
        }
    }
}

/// A family template with ranged parameters, a depth, and the claims to
/// assert on every cell.
#[derive(Clone, Debug)]
pub struct SweepPlan {
    pub family: FamilyKind,
    pub ranges: BTreeMap<String, ParamRange>,
    pub n_max: usize,
    pub assertions: Vec<Assertion>,
}

impl SweepPlan {
    fn validate(&self) -> Result<(), Error> {
        let expected = self.family.param_names();
        if self.ranges.len() != expected.len()
            || !expected.iter().all(|n| self.ranges.contains_key(*n))
        {
            return Err(Error::BadFamilyParams {
                kind: self.family.as_str(),
                expected: expected.to_vec(),
                got: self.ranges.keys().cloned().collect(),
            });
        }
        for (name, range) in &self.ranges {
            if range.lo > range.hi || !range.step.is_positive() {
                return Err(Error::BadRange { name: name.clone() });
            }
        }
        for assertion in &self.assertions {
            if let Some(required) = assertion.required_family() {
                if required != self.family {
                    return Err(Error::AssertionFamilyMismatch {
                        assertion: assertion.as_str(),
                        family: required.as_str(),
                    });
                }
            }
        }
        Ok(())
    }

    fn cells(&self) -> Result<Vec<FamilySpec>, Error> {
        let mut cells = vec![BTreeMap::new()];
        for (name, range) in &self.ranges {
            let values = range.values();
            let mut next = Vec::with_capacity(cells.len() * values.len());
            for cell in &cells {
                for v in &values {
                    let mut cell = cell.clone();
                    cell.insert(name.clone(), v.clone());
                    next.push(cell);
                }
            }
            cells = next;
        }
        cells
            .into_iter()
            .map(|params| FamilySpec::new(self.family, params))
            .collect()
    }
}

/// One failed claim: the parameter cell, the index, the property that broke,
/// and (when the property checker produced one) the exact witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub family: FamilyKind,
    pub params: Vec<(String, Rat)>,
    pub n: usize,
    pub property: String,
    pub witness: Option<Witness>,
}

/// Result of a campaign: empty `violations` means the campaign passed.
#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    /// Number of (cell, assertion) evaluations that passed the hypothesis
    /// filter and actually ran.
    pub cells_checked: usize,
    pub violations: Vec<Violation>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(mut self, other: SweepOutcome) -> SweepOutcome {
        self.cells_checked += other.cells_checked;
        self.violations.extend(other.violations);
        self
    }

    fn sorted(mut self) -> SweepOutcome {
        self.violations
            .sort_by(|x, y| (&x.params, x.n, &x.property).cmp(&(&y.params, y.n, &y.property)));
        self
    }
}

fn violation(spec: &FamilySpec, n: usize, property: &str, witness: Option<Witness>) -> Violation {
    Violation {
        family: spec.kind(),
        params: spec
            .params()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect(),
        n,
        property: property.to_string(),
        witness,
    }
}

fn require_holds(spec: &FamilySpec, n: usize, report: PropertyReport, out: &mut Vec<Violation>) {
    if !report.holds_verdict() {
        let name = report.property.as_str();
        out.push(violation(spec, n, name, report.witness));
    }
}

/// The reciprocal polynomial at the polynomial's own degree.
fn reciprocal(p: &Poly) -> Poly {
    match p.degree() {
        Some(d) => p.reverse(d).expect("window equals degree"),
        None => Poly::zero(),
    }
}

/// Direct-route gamma coordinates of both symmetric parts of `p`.
fn extracted_gammas(p: &Poly) -> (GammaVector, GammaVector) {
    let parts = sym_decomp(p);
    let n = p.degree().unwrap_or(0);
    let alpha = gamma_vector_centered(&parts.a_part, n).expect("a-part is palindromic");
    let beta = if n == 0 {
        GammaVector::new(Vec::new(), 0)
    } else {
        gamma_vector_centered(&parts.b_part, n - 1).expect("b-part is palindromic")
    };
    (alpha, beta)
}

fn check_cell(spec: &FamilySpec, n_max: usize, assertions: &[Assertion]) -> SweepOutcome {
    let mut outcome = SweepOutcome::default();
    let active: Vec<Assertion> = assertions
        .iter()
        .copied()
        .filter(|a| a.hypothesis(spec))
        .collect();
    if active.is_empty() {
        return outcome;
    }
    let polys = generate(spec, n_max);
    for assertion in active {
        outcome.cells_checked += 1;
        match assertion {
            Assertion::Theorem1BiGamma => {
                let red = spec.reduction();
                let pairs = gamma_recurrence(&red.a, &red.b, &red.c, n_max);
                for (n, f) in polys.iter().enumerate() {
                    let report = bi_gamma(f);
                    let (alpha, beta) = extracted_gammas(f);
                    if pairs[n].alpha.entries() != alpha.entries()
                        || pairs[n].beta.entries() != beta.entries()
                    {
                        outcome
                            .violations
                            .push(violation(spec, n, "gamma-route-mismatch", None));
                    }
                    if !pairs[n].alpha.is_nonnegative() || !pairs[n].beta.is_nonnegative() {
                        outcome.violations.push(violation(
                            spec,
                            n,
                            "gamma-recurrence-negative",
                            None,
                        ));
                    }
                    require_holds(spec, n, report, &mut outcome.violations);
                }
            }
            Assertion::Theorem1RatioReciprocal => {
                for (n, f) in polys.iter().enumerate() {
                    require_holds(
                        spec,
                        n,
                        ratio_monotone(&reciprocal(f)),
                        &mut outcome.violations,
                    );
                }
            }
            Assertion::StatementIiRatio | Assertion::CorollaryHcdReverse => {
                for (n, f) in polys.iter().enumerate() {
                    require_holds(spec, n, ratio_monotone(f), &mut outcome.violations);
                }
            }
            Assertion::CorollaryHcdForward => {
                for (n, f) in polys.iter().enumerate() {
                    require_holds(spec, n, bi_gamma(f), &mut outcome.violations);
                    require_holds(
                        spec,
                        n,
                        ratio_monotone(&reciprocal(f)),
                        &mut outcome.violations,
                    );
                }
            }
            Assertion::RealRooted => {
                for (n, f) in polys.iter().enumerate() {
                    require_holds(spec, n, real_rooted_nonpositive(f), &mut outcome.violations);
                }
            }
            Assertion::DarrochModes => {
                for (n, f) in polys.iter().enumerate() {
                    if !real_rooted_nonpositive(f).holds_verdict() {
                        continue;
                    }
                    let report = unimodal(f);
                    let Some(modes) = report.modes.clone() else {
                        require_holds(spec, n, report, &mut outcome.violations);
                        continue;
                    };
                    let (lower, upper) =
                        darroch_bounds(f).expect("real-rooted implies nonzero and nonnegative");
                    for mode in modes {
                        let mode_rat = Rat::from_integer(mode.into());
                        let lower_rat = Rat::from_integer(lower.clone());
                        let upper_rat = Rat::from_integer(upper.clone());
                        if mode_rat < lower_rat || mode_rat > upper_rat {
                            let (lhs, rhs) = if mode_rat < lower_rat {
                                (lower_rat, mode_rat)
                            } else {
                                (mode_rat, upper_rat)
                            };
                            outcome.violations.push(violation(
                                spec,
                                n,
                                "mode-outside-darroch-window",
                                Some(Witness {
                                    site: Site::ModeBound,
                                    indices: vec![mode],
                                    lhs,
                                    rhs,
                                }),
                            ));
                        }
                    }
                }
            }
            Assertion::BiGammaFailsExpected => {
                let report = bi_gamma(&polys[n_max]);
                if report.holds_verdict() {
                    outcome.violations.push(violation(
                        spec,
                        n_max,
                        "bigamma-unexpectedly-holds",
                        None,
                    ));
                }
            }
        }
    }
    outcome
}

/// Runs every assertion of the plan over the full parameter grid.
/// Violations are data, not errors; the `Err` arm is reserved for invalid
/// plans.
pub fn run_sweep(plan: &SweepPlan) -> Result<SweepOutcome, Error> {
    plan.validate()?;
    let cells = plan.cells()?;
    let outcome = cells
        .par_iter()
        .map(|spec| check_cell(spec, plan.n_max, &plan.assertions))
        .reduce(SweepOutcome::default, SweepOutcome::merge);
    Ok(outcome.sorted())
}

enum CorollaryCheck {
    BiGamma,
    RatioDirect,
    RatioReciprocal,
}

/// The published corollary grid:
///
/// * q-Eulerian: bi-gamma and reciprocal ratio monotonicity for
///   `q in {1/4, 1/2, 3/4, 1}`; direct ratio monotonicity for
///   `q in {1, 3/2, 2}`; depth 15.
/// * type B: bi-gamma and reciprocal ratio monotonicity for `q in {1,2,3}`;
///   direct ratio monotonicity for `q in {1/4, 1/2, 1}`; depth 10.
/// * r-colored: reciprocal ratio monotonicity for `r in {2,3,4}`; direct
///   for `r in {1, 3/2, 2}`; depth 12.
/// * 1/k: reciprocal ratio monotonicity for `k in {1,2,3}`; depth 12.
/// * Carlitz-Scoville grid `p, q in {1/2, 1, 3/2, 2}`: bi-gamma and
///   reciprocal ratio monotonicity where `1 + q >= p >= q > 0`, direct
///   ratio monotonicity where `1 + p >= q >= p > 0`; depth 12.
pub fn corollary_suite() -> SweepOutcome {
    let r = |n: i64, d: i64| Rat::new(n.into(), d.into());
    let mut jobs: Vec<(FamilySpec, usize, Vec<CorollaryCheck>)> = Vec::new();

    for q in [r(1, 4), r(1, 2), r(3, 4), r(1, 1)] {
        jobs.push((
            FamilySpec::q_eulerian(q).expect("valid"),
            15,
            vec![CorollaryCheck::BiGamma, CorollaryCheck::RatioReciprocal],
        ));
    }
    for q in [r(1, 1), r(3, 2), r(2, 1)] {
        jobs.push((
            FamilySpec::q_eulerian(q).expect("valid"),
            15,
            vec![CorollaryCheck::RatioDirect],
        ));
    }
    for q in [r(1, 1), r(2, 1), r(3, 1)] {
        jobs.push((
            FamilySpec::type_b(q).expect("valid"),
            10,
            vec![CorollaryCheck::BiGamma, CorollaryCheck::RatioReciprocal],
        ));
    }
    for q in [r(1, 4), r(1, 2), r(1, 1)] {
        jobs.push((
            FamilySpec::type_b(q).expect("valid"),
            10,
            vec![CorollaryCheck::RatioDirect],
        ));
    }
    for rr in [r(2, 1), r(3, 1), r(4, 1)] {
        jobs.push((
            FamilySpec::r_colored(rr).expect("valid"),
            12,
            vec![CorollaryCheck::RatioReciprocal],
        ));
    }
    for rr in [r(1, 1), r(3, 2), r(2, 1)] {
        jobs.push((
            FamilySpec::r_colored(rr).expect("valid"),
            12,
            vec![CorollaryCheck::RatioDirect],
        ));
    }
    for k in [r(1, 1), r(2, 1), r(3, 1)] {
        jobs.push((
            FamilySpec::one_over_k(k).expect("valid"),
            12,
            vec![CorollaryCheck::RatioReciprocal],
        ));
    }
    let grid = [r(1, 2), r(1, 1), r(3, 2), r(2, 1)];
    for p in &grid {
        for q in &grid {
            let one = Rat::one();
            let spec = FamilySpec::carlitz_scoville(p.clone(), q.clone()).expect("valid");
            if &one + q >= *p && p >= q && q.is_positive() {
                jobs.push((
                    spec.clone(),
                    12,
                    vec![CorollaryCheck::BiGamma, CorollaryCheck::RatioReciprocal],
                ));
            }
            if &one + p >= *q && q >= p && p.is_positive() {
                jobs.push((spec, 12, vec![CorollaryCheck::RatioDirect]));
            }
        }
    }

    jobs.par_iter()
        .map(|(spec, n_max, checks)| {
            let mut outcome = SweepOutcome {
                cells_checked: checks.len(),
                ..SweepOutcome::default()
            };
            let polys = generate(spec, *n_max);
            for (n, f) in polys.iter().enumerate() {
                for check in checks {
                    let report = match check {
                        CorollaryCheck::BiGamma => bi_gamma(f),
                        CorollaryCheck::RatioDirect => ratio_monotone(f),
                        CorollaryCheck::RatioReciprocal => ratio_monotone(&reciprocal(f)),
                    };
                    let property = match check {
                        CorollaryCheck::BiGamma => "bigamma",
                        CorollaryCheck::RatioDirect => "ratio",
                        CorollaryCheck::RatioReciprocal => "ratio-reciprocal",
                    };
                    if !report.holds_verdict() {
                        outcome
                            .violations
                            .push(violation(spec, n, property, report.witness));
                    }
                }
            }
            outcome
        })
        .reduce(SweepOutcome::default, SweepOutcome::merge)
        .sorted()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn int_range(lo: i64, hi: i64) -> ParamRange {
        ParamRange::new(int(lo), int(hi), int(1))
    }

    fn general_plan(assertions: Vec<Assertion>, n_max: usize) -> SweepPlan {
        let mut ranges = BTreeMap::new();
        ranges.insert("a".to_string(), int_range(0, 3));
        ranges.insert("b".to_string(), int_range(0, 3));
        ranges.insert("c".to_string(), int_range(0, 3));
        SweepPlan {
            family: FamilyKind::GeneralAbc,
            ranges,
            n_max,
            assertions,
        }
    }

    #[test]
    fn range_expansion_is_inclusive() {
        let range = ParamRange::new(int(0), int(2), Rat::new(1.into(), 2.into()));
        assert_eq!(range.values().len(), 5);
        assert_eq!(ParamRange::point(int(7)).values(), vec![int(7)]);
    }

    #[test]
    fn plan_validation_catches_mismatches() {
        let mut plan = general_plan(vec![Assertion::Theorem1BiGamma], 3);
        plan.ranges.remove("c");
        assert!(matches!(
            run_sweep(&plan),
            Err(Error::BadFamilyParams { .. })
        ));

        let mut plan = general_plan(vec![Assertion::Theorem1BiGamma], 3);
        plan.ranges.insert("c".to_string(), int_range(2, 1));
        assert!(matches!(run_sweep(&plan), Err(Error::BadRange { .. })));

        let mut plan = general_plan(vec![Assertion::CorollaryHcdForward], 3);
        plan.family = FamilyKind::GeneralAbc;
        assert!(matches!(
            run_sweep(&plan),
            Err(Error::AssertionFamilyMismatch { .. })
        ));
    }

    #[test]
    fn small_theorem_sweep_passes() {
        let plan = general_plan(
            vec![
                Assertion::Theorem1BiGamma,
                Assertion::Theorem1RatioReciprocal,
            ],
            8,
        );
        let outcome = run_sweep(&plan).unwrap();
        assert!(outcome.passed(), "violations: {:?}", outcome.violations);
        assert!(outcome.cells_checked > 0);
    }

    #[test]
    fn small_statement_two_sweep_passes() {
        let plan = general_plan(vec![Assertion::StatementIiRatio], 8);
        let outcome = run_sweep(&plan).unwrap();
        assert!(outcome.passed(), "violations: {:?}", outcome.violations);
    }

    #[test]
    fn expected_bigamma_failures_are_confirmed() {
        let mut ranges = BTreeMap::new();
        ranges.insert("q".to_string(), int_range(3, 4));
        let plan = SweepPlan {
            family: FamilyKind::QEulerian,
            ranges,
            n_max: 4,
            assertions: vec![Assertion::BiGammaFailsExpected],
        };
        let outcome = run_sweep(&plan).unwrap();
        assert!(outcome.passed(), "violations: {:?}", outcome.violations);
        assert_eq!(outcome.cells_checked, 2);

        // at q = 1 bi-gamma holds, so the inverted claim must report it
        let mut ranges = BTreeMap::new();
        ranges.insert("q".to_string(), int_range(1, 1));
        let plan = SweepPlan {
            family: FamilyKind::QEulerian,
            ranges,
            n_max: 4,
            assertions: vec![Assertion::BiGammaFailsExpected],
        };
        let outcome = run_sweep(&plan).unwrap();
        assert_eq!(outcome.violations.len(), 1);
        assert_eq!(outcome.violations[0].property, "bigamma-unexpectedly-holds");
    }

    #[test]
    fn real_rooted_and_darroch_sweep_passes() {
        let mut ranges = BTreeMap::new();
        ranges.insert("a".to_string(), int_range(1, 2));
        ranges.insert("b".to_string(), int_range(1, 2));
        ranges.insert("c".to_string(), int_range(1, 2));
        let plan = SweepPlan {
            family: FamilyKind::GeneralAbc,
            ranges,
            n_max: 8,
            assertions: vec![Assertion::RealRooted, Assertion::DarrochModes],
        };
        let outcome = run_sweep(&plan).unwrap();
        assert!(outcome.passed(), "violations: {:?}", outcome.violations);
    }

    #[test]
    fn hcd_corollary_sweeps_pass_on_a_small_grid() {
        let mut ranges = BTreeMap::new();
        ranges.insert("p".to_string(), int_range(1, 2));
        ranges.insert("q".to_string(), int_range(1, 2));
        ranges.insert("r".to_string(), int_range(1, 3));
        let plan = SweepPlan {
            family: FamilyKind::HcdPqr,
            ranges,
            n_max: 8,
            assertions: vec![
                Assertion::CorollaryHcdForward,
                Assertion::CorollaryHcdReverse,
            ],
        };
        let outcome = run_sweep(&plan).unwrap();
        assert!(outcome.passed(), "violations: {:?}", outcome.violations);
        assert!(outcome.cells_checked > 0);
    }

    #[test]
    fn violations_carry_replayable_witnesses() {
        // force a failure: direct ratio monotonicity outside its hypothesis
        let mut ranges = BTreeMap::new();
        ranges.insert("q".to_string(), int_range(4, 4));
        let plan = SweepPlan {
            family: FamilyKind::QEulerian,
            ranges,
            n_max: 4,
            assertions: vec![Assertion::RealRooted],
        };
        // real-rootedness does hold here; use the corollary engine instead
        let outcome = run_sweep(&plan).unwrap();
        assert!(outcome.passed());

        let spec = FamilySpec::q_eulerian(int(4)).unwrap();
        let polys = generate(&spec, 4);
        let report = ratio_monotone(&polys[4]);
        let witness = report.witness.expect("fails with witness");
        // the recorded products really are violated
        assert!(witness.lhs > witness.rhs);
    }
}
