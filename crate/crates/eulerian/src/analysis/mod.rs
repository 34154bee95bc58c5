//! Property certificates over exact coefficient sequences.
//!
//! Every checker returns a [`PropertyReport`]: a verdict plus, on failure, a
//! replayable witness naming the first violated inequality with both sides
//! evaluated exactly. Inequality checks never divide; everything is done by
//! cross-multiplication so zero denominators cannot arise mid-chain.

mod sturm;

pub use sturm::real_rooted_nonpositive;

use num::{One, Signed, Zero};

use crate::families::sym_decomp;
use crate::poly::Poly;
use crate::scalar::{Int, Rat};
use crate::Error;

/// Coordinates of a palindromic polynomial in the basis
/// `x^k (1+x)^{center_degree - 2k}`, `k = 0 ..= floor(center_degree / 2)`.
/// Entries may be negative; gamma-positivity is a separate verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    entries: Vec<Rat>,
    center_degree: usize,
}

impl GammaVector {
    pub fn new(entries: Vec<Rat>, center_degree: usize) -> Self {
        GammaVector {
            entries,
            center_degree,
        }
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn center_degree(&self) -> usize {
        self.center_degree
    }

    /// Index of the first negative entry, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.entries.iter().position(|e| e.is_negative())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    /// Expands the coordinates back into a polynomial.
    pub fn to_poly(&self) -> Poly {
        let one_plus_x = Poly::from_i64s(&[1, 1]);
        let mut acc = Poly::zero();
        for (k, entry) in self.entries.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let spread = self.center_degree.checked_sub(2 * k).unwrap_or_else(|| {
                panic!(
                    "gamma entry {k} exceeds basis for center {}",
                    self.center_degree
                )
            });
            acc = &acc + &one_plus_x.pow(spread as u32).scale(entry).mul_x_pow(k);
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

/// Which internal inequality chain a witness points into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Site {
    Coefficients,
    RatioChain1,
    RatioChain2,
    GammaAlpha,
    GammaBeta,
    RootCount,
    ModeBound,
}

impl Site {
    pub fn as_str(self) -> &'static str {
        match self {
            Site::Coefficients => "coefficients",
            Site::RatioChain1 => "ratio-chain-1",
            Site::RatioChain2 => "ratio-chain-2",
            Site::GammaAlpha => "gamma-alpha",
            Site::GammaBeta => "gamma-beta",
            Site::RootCount => "root-count",
            Site::ModeBound => "mode-bound",
        }
    }
}

/// The first violated inequality: the property required `lhs <= rhs`, and
/// the recorded exact values satisfy `lhs > rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub site: Site,
    pub indices: Vec<usize>,
    pub lhs: Rat,
    pub rhs: Rat,
}

impl Witness {
    fn violated(&self) -> bool {
        self.lhs > self.rhs
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Unimodal,
    LogConcave,
    Spiral,
    AlternatinglyIncreasing,
    RatioMonotone,
    BiGamma,
    RealRootedNonpositive,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Unimodal => "unimodal",
            Property::LogConcave => "log-concave",
            Property::Spiral => "spiral",
            Property::AlternatinglyIncreasing => "alt-increasing",
            Property::RatioMonotone => "ratio",
            Property::BiGamma => "bigamma",
            Property::RealRootedNonpositive => "real-rooted",
        }
    }
}

/// Structured verdict for one property on one polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Indices of maximal coefficients; populated by [`unimodal`] only.
    pub modes: Option<Vec<usize>>,
    /// Explanation when the verdict is `NotApplicable`.
    pub reason: Option<String>,
    /// Gamma coordinates of the symmetric parts; populated by [`bi_gamma`].
    pub alpha: Option<GammaVector>,
    pub beta: Option<GammaVector>,
}

impl PropertyReport {
    fn new(property: Property, verdict: Verdict) -> Self {
        PropertyReport {
            property,
            verdict,
            witness: None,
            modes: None,
            reason: None,
            alpha: None,
            beta: None,
        }
    }

    fn holds(property: Property) -> Self {
        Self::new(property, Verdict::Holds)
    }

    fn fails(property: Property, witness: Witness) -> Self {
        debug_assert!(witness.violated());
        let mut r = Self::new(property, Verdict::Fails);
        r.witness = Some(witness);
        r
    }

    fn not_applicable(property: Property, reason: String) -> Self {
        let mut r = Self::new(property, Verdict::NotApplicable);
        r.reason = Some(reason);
        r
    }

    pub fn holds_verdict(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Coefficient view used by the order properties: the zero polynomial is
/// treated as the constant 0. Returns the index of the first negative
/// coefficient as an error.
fn nonneg_coeffs(p: &Poly) -> Result<Vec<Rat>, usize> {
    if p.is_zero() {
        return Ok(vec![Rat::zero()]);
    }
    if let Some(index) = p.coeffs().iter().position(|c| c.is_negative()) {
        return Err(index);
    }
    Ok(p.coeffs().to_vec())
}

fn negative_reason(property: Property, index: usize) -> PropertyReport {
    PropertyReport::not_applicable(
        property,
        format!("coefficient at index {index} is negative"),
    )
}

/// Unimodality: coefficients rise to a maximal block and fall afterwards.
/// On success the report carries the full (contiguous) set of modes.
pub fn unimodal(p: &Poly) -> PropertyReport {
    let coeffs = match nonneg_coeffs(p) {
        Ok(c) => c,
        Err(i) => return negative_reason(Property::Unimodal, i),
    };
    let peak = coeffs
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.cmp(b).then(j.cmp(i)))
        .map(|(i, _)| i)
        .unwrap();
    // ascent up to the first maximal index
    for i in 0..peak {
        if coeffs[i] > coeffs[i + 1] {
            return PropertyReport::fails(
                Property::Unimodal,
                Witness {
                    site: Site::Coefficients,
                    indices: vec![i, i + 1, peak],
                    lhs: coeffs[i].clone(),
                    rhs: coeffs[i + 1].clone(),
                },
            );
        }
    }
    // descent afterwards
    for j in peak..coeffs.len() - 1 {
        if coeffs[j + 1] > coeffs[j] {
            return PropertyReport::fails(
                Property::Unimodal,
                Witness {
                    site: Site::Coefficients,
                    indices: vec![peak, j, j + 1],
                    lhs: coeffs[j + 1].clone(),
                    rhs: coeffs[j].clone(),
                },
            );
        }
    }
    let modes: Vec<usize> = (peak..coeffs.len())
        .take_while(|&i| coeffs[i] == coeffs[peak])
        .collect();
    let mut report = PropertyReport::holds(Property::Unimodal);
    report.modes = Some(modes);
    report
}

/// Log-concavity: `a_i^2 >= a_{i-1} a_{i+1}` for every interior index,
/// checked by exact cross-multiplication.
pub fn log_concave(p: &Poly) -> PropertyReport {
    let coeffs = match nonneg_coeffs(p) {
        Ok(c) => c,
        Err(i) => return negative_reason(Property::LogConcave, i),
    };
    for i in 1..coeffs.len().saturating_sub(1) {
        let square = &coeffs[i] * &coeffs[i];
        let sides = &coeffs[i - 1] * &coeffs[i + 1];
        if sides > square {
            return PropertyReport::fails(
                Property::LogConcave,
                Witness {
                    site: Site::Coefficients,
                    indices: vec![i - 1, i, i + 1],
                    lhs: sides,
                    rhs: square,
                },
            );
        }
    }
    PropertyReport::holds(Property::LogConcave)
}

fn interleaved_chain(property: Property, p: &Poly, order: &[usize]) -> PropertyReport {
    let coeffs = match nonneg_coeffs(p) {
        Ok(c) => c,
        Err(i) => return negative_reason(property, i),
    };
    for pair in order.windows(2) {
        let (i, j) = (pair[0], pair[1]);
        if coeffs[i] > coeffs[j] {
            return PropertyReport::fails(
                property,
                Witness {
                    site: Site::Coefficients,
                    indices: vec![i, j],
                    lhs: coeffs[i].clone(),
                    rhs: coeffs[j].clone(),
                },
            );
        }
    }
    PropertyReport::holds(property)
}

/// Spiral order: `a_n <= a_0 <= a_{n-1} <= a_1 <= ... <= a_{floor(n/2)}`.
pub fn spiral(p: &Poly) -> PropertyReport {
    let n = p.degree().unwrap_or(0);
    let mid = n / 2;
    let mut order = Vec::with_capacity(n + 1);
    let mut t = 0;
    loop {
        order.push(n - t);
        if n - t == mid {
            break;
        }
        order.push(t);
        if t == mid {
            break;
        }
        t += 1;
    }
    interleaved_chain(Property::Spiral, p, &order)
}

/// Alternating increase: `a_0 <= a_n <= a_1 <= a_{n-1} <= ... <=
/// a_{floor((n+1)/2)}`. Equals the spiral order of the reversal.
pub fn alternatingly_increasing(p: &Poly) -> PropertyReport {
    let n = p.degree().unwrap_or(0);
    let end = n.div_ceil(2);
    let mut order = Vec::with_capacity(n + 1);
    let mut t = 0;
    loop {
        order.push(t);
        if t == end {
            break;
        }
        order.push(n - t);
        if n - t == end {
            break;
        }
        t += 1;
    }
    interleaved_chain(Property::AlternatinglyIncreasing, p, &order)
}

/// Ratio monotonicity. Writing `a_0 ... a_n` for the coefficients, the two
/// chains
///
/// ```text
/// a_n/a_0 <= a_{n-1}/a_1 <= ... <= a_{n-m}/a_m <= 1,          m = floor((n-1)/2)
/// a_0/a_{n-1} <= a_1/a_{n-2} <= ... <= a_{m'-1}/a_{n-m'} <= 1, m' = floor(n/2)
/// ```
///
/// must both be nondecreasing and end at 1. All comparisons are exact
/// cross-products. Strictly positive coefficients are demanded up front:
/// the defining ratios are undefined at zero.
pub fn ratio_monotone(p: &Poly) -> PropertyReport {
    if p.is_zero() {
        return PropertyReport::not_applicable(
            Property::RatioMonotone,
            "zero polynomial has no positive coefficients".to_string(),
        );
    }
    if let Some(index) = p.coeffs().iter().position(|c| !c.is_positive()) {
        return PropertyReport::not_applicable(
            Property::RatioMonotone,
            format!("coefficient at index {index} is not strictly positive"),
        );
    }
    let a = p.coeffs();
    let n = a.len() - 1;
    if n == 0 {
        return PropertyReport::holds(Property::RatioMonotone);
    }

    // chain 1: consecutive links a_{n-i} a_{i+1} <= a_{n-i-1} a_i, then the
    // closing link a_{n-m} <= a_m.
    let m1 = (n - 1) / 2;
    for i in 0..m1 {
        let lhs = &a[n - i] * &a[i + 1];
        let rhs = &a[n - i - 1] * &a[i];
        if lhs > rhs {
            return PropertyReport::fails(
                Property::RatioMonotone,
                Witness {
                    site: Site::RatioChain1,
                    indices: vec![n - i, i + 1, n - i - 1, i],
                    lhs,
                    rhs,
                },
            );
        }
    }
    if a[n - m1] > a[m1] {
        return PropertyReport::fails(
            Property::RatioMonotone,
            Witness {
                site: Site::RatioChain1,
                indices: vec![n - m1, m1],
                lhs: a[n - m1].clone(),
                rhs: a[m1].clone(),
            },
        );
    }

    // chain 2: consecutive links a_{i-1} a_{n-i-1} <= a_i a_{n-i}, then the
    // closing link a_{m-1} <= a_{n-m}.
    let m2 = n / 2;
    for i in 1..m2 {
        let lhs = &a[i - 1] * &a[n - i - 1];
        let rhs = &a[i] * &a[n - i];
        if lhs > rhs {
            return PropertyReport::fails(
                Property::RatioMonotone,
                Witness {
                    site: Site::RatioChain2,
                    indices: vec![i - 1, n - i - 1, i, n - i],
                    lhs,
                    rhs,
                },
            );
        }
    }
    if m2 >= 1 && a[m2 - 1] > a[n - m2] {
        return PropertyReport::fails(
            Property::RatioMonotone,
            Witness {
                site: Site::RatioChain2,
                indices: vec![m2 - 1, n - m2],
                lhs: a[m2 - 1].clone(),
                rhs: a[n - m2].clone(),
            },
        );
    }
    PropertyReport::holds(Property::RatioMonotone)
}

/// Gamma coordinates about the polynomial's own degree. Errors unless the
/// input is palindromic. The zero polynomial yields an empty vector.
pub fn gamma_vector(p: &Poly) -> Result<GammaVector, Error> {
    match p.degree() {
        None => Ok(GammaVector::new(Vec::new(), 0)),
        Some(n) => gamma_vector_centered(p, n),
    }
}

/// Gamma coordinates about an explicit center degree `n >= deg p`, by the
/// peel-off algorithm: read the current `x^k` coefficient, subtract that
/// multiple of `x^k (1+x)^{n-2k}`, and repeat. The residual must reach
/// zero, which happens exactly for inputs palindromic about `n/2`.
pub fn gamma_vector_centered(p: &Poly, n: usize) -> Result<GammaVector, Error> {
    if !p.is_palindromic(n) {
        return Err(Error::NotPalindromic { center: n });
    }
    let one_plus_x = Poly::from_i64s(&[1, 1]);
    let mut residual = p.clone();
    let mut entries = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        let coeff = residual.coeff(k);
        if !coeff.is_zero() {
            let basis = one_plus_x
                .pow((n - 2 * k) as u32)
                .scale(&coeff)
                .mul_x_pow(k);
            residual = &residual - &basis;
        }
        entries.push(coeff);
    }
    assert!(
        residual.is_zero(),
        "palindromic peel-off left a nonzero residual"
    );
    Ok(GammaVector::new(entries, n))
}

/// Bi-gamma-positivity: both symmetric parts of `f = a + x b` must have
/// nonnegative gamma coordinates. The report carries both vectors.
pub fn bi_gamma(p: &Poly) -> PropertyReport {
    let parts = sym_decomp(p);
    let n = p.degree().unwrap_or(0);
    let alpha = gamma_vector_centered(&parts.a_part, n)
        .expect("symmetric part is palindromic about the parent degree");
    let beta = if n == 0 {
        GammaVector::new(Vec::new(), 0)
    } else {
        gamma_vector_centered(&parts.b_part, n - 1)
            .expect("symmetric part is palindromic about one below the parent degree")
    };
    let mut report = match (alpha.first_negative(), beta.first_negative()) {
        (Some(k), _) => PropertyReport::fails(
            Property::BiGamma,
            Witness {
                site: Site::GammaAlpha,
                indices: vec![k],
                lhs: Rat::zero(),
                rhs: alpha.entries()[k].clone(),
            },
        ),
        (None, Some(k)) => PropertyReport::fails(
            Property::BiGamma,
            Witness {
                site: Site::GammaBeta,
                indices: vec![k],
                lhs: Rat::zero(),
                rhs: beta.entries()[k].clone(),
            },
        ),
        (None, None) => PropertyReport::holds(Property::BiGamma),
    };
    report.alpha = Some(alpha);
    report.beta = Some(beta);
    report
}

/// Darroch bounds `floor(p'(1)/p(1))` and `ceil(p'(1)/p(1))`, computed
/// exactly. For a polynomial with only real nonpositive zeros every mode
/// lies between them. Errors on the zero polynomial or on negative
/// coefficients.
pub fn darroch_bounds(p: &Poly) -> Result<(Int, Int), Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial {
            operation: "darroch_bounds",
        });
    }
    if let Some(index) = p.coeffs().iter().position(|c| c.is_negative()) {
        return Err(Error::NegativeCoefficient { index });
    }
    let one = Rat::one();
    let ratio = p.derivative().eval(&one) / p.eval(&one);
    Ok((ratio.floor().to_integer(), ratio.ceil().to_integer()))
}
