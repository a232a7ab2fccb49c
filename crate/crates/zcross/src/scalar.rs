//! Exact scalar arithmetic for roots of unity and square-root magnitudes.
//!
//! Every coherence scalar handled by this crate has the shape `√m · e(r)`
//! with `m` a positive rational and `r` a rational exponent taken mod 1,
//! where `e(r) = exp(2πi·r)`.  Sums of such terms are compared exactly by
//! embedding them into a cyclotomic field: a sum `Σ cₖ e(k/N)` vanishes if
//! and only if the coefficient polynomial is divisible by the `N`-th
//! cyclotomic polynomial `Φ_N`.  Square roots of integers are themselves
//! cyclotomic numbers via quadratic Gauss sums (`√2 = ζ₈ + ζ₈⁻¹`,
//! `√p = Σₐ e(a²/p)` up to a factor of `i`), so no numerical approximation
//! ever enters an equality test.
//!
//! Floating point is used in exactly one place: [`snap_to_root`] resolves
//! which of the finitely many candidate roots of unity a Gauss sum equals,
//! with a certified error bound; the promise that the value *is* such a
//! root comes from the caller.

use num::rational::Ratio;
use num::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// Exact rational number used throughout the crate.
pub type Rational = Ratio<i64>;

/// Parse a rational from the serialization format `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().ok()?;
        let q: i64 = q.trim().parse().ok()?;
        if q == 0 {
            return None;
        }
        Some(Rational::new(p, q))
    } else {
        let p: i64 = s.parse().ok()?;
        Some(Rational::from_integer(p))
    }
}

/// Format a rational in lowest terms as `"p/q"` (or `"p"` when integral).
pub fn format_rational(r: Rational) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reduce a rational exponent into the canonical range `[0, 1)`.
fn reduce_mod_one(r: Rational) -> Rational {
    let f = r.floor();
    r - f
}

/// A root of unity `e(r) = exp(2πi·r)` stored by its exponent `r ∈ [0,1)`.
///
/// Multiplication of values corresponds to addition of exponents, which is
/// closed and exact on rationals mod 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    r: Rational,
}

impl Phase {
    /// The phase `e(r)`; the exponent is reduced mod 1.
    pub fn new(r: Rational) -> Self {
        Phase { r: reduce_mod_one(r) }
    }

    /// Convenience constructor for `e(num/den)`.
    pub fn of(num: i64, den: i64) -> Self {
        Phase::new(Rational::new(num, den))
    }

    /// The phase `1 = e(0)`.
    pub fn one() -> Self {
        Phase { r: Rational::zero() }
    }

    /// The phase `−1 = e(1/2)`.
    pub fn minus_one() -> Self {
        Phase::of(1, 2)
    }

    /// The sign `±1` as a phase.
    pub fn from_sign(sign: i8) -> Self {
        if sign >= 0 {
            Phase::one()
        } else {
            Phase::minus_one()
        }
    }

    /// Canonical exponent in `[0, 1)`.
    pub fn exponent(&self) -> Rational {
        self.r
    }

    pub fn is_one(&self) -> bool {
        self.r.is_zero()
    }

    /// Complex conjugate / multiplicative inverse `e(−r)`.
    pub fn inv(&self) -> Self {
        Phase::new(-self.r)
    }

    /// Integer power `e(n·r)`.
    pub fn pow(&self, n: i64) -> Self {
        Phase::new(self.r * Rational::from_integer(n))
    }

    /// The principal square root `e(r/2)` on the representative `r ∈ [0,1)`.
    ///
    /// Squaring the result always returns `self`; which of the two square
    /// roots is produced is a documented convention (halve the canonical
    /// exponent), e.g. `e(3/4) ↦ e(3/8)`, not `e(7/8)`.
    pub fn principal_sqrt(&self) -> Self {
        Phase { r: self.r / Rational::from_integer(2) }
    }

    /// If this phase is `±1`, return the sign.
    pub fn as_sign(&self) -> Option<i8> {
        if self.r.is_zero() {
            Some(1)
        } else if self.r == Rational::new(1, 2) {
            Some(-1)
        } else {
            None
        }
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", format_rational(self.r))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", format_rational(self.r))
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase::new(self.r + rhs.r)
    }
}

impl std::ops::MulAssign for Phase {
    fn mul_assign(&mut self, rhs: Phase) {
        *self = *self * rhs;
    }
}

impl std::ops::Div for Phase {
    type Output = Phase;
    fn div(self, rhs: Phase) -> Phase {
        self * rhs.inv()
    }
}

/// The exact value `√m · e(r)` with `m` a positive rational.
///
/// The magnitude is kept squared and under an implicit square root; it is
/// never evaluated.  Products multiply the magnitudes and add the
/// exponents.  Equality is componentwise, which is sound because `√m` is
/// positive real and `e(r)` has modulus one.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScaledScalar {
    /// Magnitude squared, `> 0`.
    pub m: Rational,
    /// Phase factor.
    pub phase: Phase,
}

impl ScaledScalar {
    pub fn new(m: Rational, phase: Phase) -> Self {
        assert!(m.is_positive(), "magnitude squared must be positive");
        ScaledScalar { m, phase }
    }

    pub fn one() -> Self {
        ScaledScalar { m: Rational::one(), phase: Phase::one() }
    }

    pub fn from_phase(p: Phase) -> Self {
        ScaledScalar { m: Rational::one(), phase: p }
    }

    /// `√n` for a positive integer (or rational) `n`.
    pub fn sqrt_of(n: Rational) -> Self {
        ScaledScalar::new(n, Phase::one())
    }

    /// Signed rational `c ≠ 0` as a scalar (`|c|·e(0)` or `|c|·e(1/2)`).
    pub fn from_rational(c: Rational) -> Self {
        assert!(!c.is_zero());
        if c.is_positive() {
            ScaledScalar::new(c * c, Phase::one())
        } else {
            ScaledScalar::new(c * c, Phase::minus_one())
        }
    }

    pub fn inv(&self) -> Self {
        ScaledScalar { m: Rational::one() / self.m, phase: self.phase.inv() }
    }

    pub fn conj(&self) -> Self {
        ScaledScalar { m: self.m, phase: self.phase.inv() }
    }

    /// Is this scalar a pure phase (magnitude 1)?
    pub fn as_phase(&self) -> Option<Phase> {
        if self.m.is_one() {
            Some(self.phase)
        } else {
            None
        }
    }
}

impl fmt::Debug for ScaledScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            write!(f, "{:?}", self.phase)
        } else {
            write!(f, "sqrt({})*{:?}", format_rational(self.m), self.phase)
        }
    }
}

impl std::ops::Mul for ScaledScalar {
    type Output = ScaledScalar;
    fn mul(self, rhs: ScaledScalar) -> ScaledScalar {
        ScaledScalar { m: self.m * rhs.m, phase: self.phase * rhs.phase }
    }
}

impl std::ops::MulAssign for ScaledScalar {
    fn mul_assign(&mut self, rhs: ScaledScalar) {
        *self = *self * rhs;
    }
}

impl std::ops::Div for ScaledScalar {
    type Output = ScaledScalar;
    fn div(self, rhs: ScaledScalar) -> ScaledScalar {
        self * rhs.inv()
    }
}

impl From<Phase> for ScaledScalar {
    fn from(p: Phase) -> Self {
        ScaledScalar::from_phase(p)
    }
}

// ---------------------------------------------------------------------------
// Cyclotomic sums
// ---------------------------------------------------------------------------

/// A formal sum `Σₖ cₖ·e(k/N)` with rational coefficients.
///
/// This is the exact house for Gauss sums and for the zero test underlying
/// all scalar-sum equalities.  Ring operations are exact; [`CycSum::eval`]
/// provides a float evaluation with a rigorous error bound for snapping.
#[derive(Clone, PartialEq, Eq)]
pub struct CycSum {
    /// Conductor `N ≥ 1`.
    pub n: u64,
    /// Coefficients `c₀..c_{N−1}` of `e(k/N)`.
    pub coeffs: Vec<Rational>,
}

impl CycSum {
    pub fn zero(n: u64) -> Self {
        CycSum { n, coeffs: vec![Rational::zero(); n as usize] }
    }

    /// The constant `c` (conductor 1).
    pub fn constant(c: Rational) -> Self {
        CycSum { n: 1, coeffs: vec![c] }
    }

    /// A single term `c·e(r)`.
    pub fn term(c: Rational, r: Phase) -> Self {
        let den = *r.exponent().denom() as u64;
        let num = *r.exponent().numer() as u64 % den;
        let mut s = CycSum::zero(den);
        s.coeffs[num as usize] = c;
        s
    }

    /// Lift to a (multiple) conductor `m` with `n | m`.
    pub fn lift(&self, m: u64) -> CycSum {
        assert!(m % self.n == 0);
        let k = m / self.n;
        let mut out = CycSum::zero(m);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * k as usize] = *c;
        }
        out
    }

    fn common(a: &CycSum, b: &CycSum) -> (CycSum, CycSum) {
        let l = num_integer::lcm(a.n, b.n);
        (a.lift(l), b.lift(l))
    }

    pub fn add(&self, other: &CycSum) -> CycSum {
        let (mut a, b) = CycSum::common(self, other);
        for i in 0..a.coeffs.len() {
            a.coeffs[i] = a.coeffs[i] + b.coeffs[i];
        }
        a
    }

    pub fn sub(&self, other: &CycSum) -> CycSum {
        let (mut a, b) = CycSum::common(self, other);
        for i in 0..a.coeffs.len() {
            a.coeffs[i] = a.coeffs[i] - b.coeffs[i];
        }
        a
    }

    pub fn mul(&self, other: &CycSum) -> CycSum {
        let (a, b) = CycSum::common(self, other);
        let n = a.n as usize;
        let mut out = CycSum::zero(a.n);
        for (i, ci) in a.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in b.coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                out.coeffs[k] = out.coeffs[k] + *ci * *cj;
            }
        }
        out
    }

    pub fn scale(&self, c: Rational) -> CycSum {
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x = *x * c;
        }
        out
    }

    /// Evaluate numerically, returning `(re, im, error_bound)`.
    ///
    /// The bound is `Σ|cₖ|·2⁻⁵⁰` per term: each addend `cₖ·e(k/N)` is
    /// computed in double precision, whose relative error is far below
    /// `2⁻⁵⁰`, so the accumulated absolute error is below the bound.
    pub fn eval(&self) -> (f64, f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        let mut bound = 0.0;
        let n = self.n as f64;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = *c.numer() as f64 / *c.denom() as f64;
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / n;
            re += cf * ang.cos();
            im += cf * ang.sin();
            bound += cf.abs() * (1.0 / (1u64 << 50) as f64);
        }
        (re, im, bound)
    }

    /// Exact zero test: reduce the coefficient polynomial mod `Φ_N`.
    ///
    /// The value `Σ cₖ ζ_N^k` vanishes iff `Φ_N` divides `Σ cₖ xᵏ` in ℚ[x].
    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(|c| c.is_zero()) {
            return true;
        }
        let phi = cyclotomic_polynomial(self.n);
        let rem = poly_rem(&self.coeffs, &phi);
        rem.iter().all(|c| c.is_zero())
    }

    pub fn eq_value(&self, other: &CycSum) -> bool {
        self.sub(other).is_zero()
    }
}

impl fmt::Debug for CycSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycSum(N={}; ", self.n)?;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*e({}/{})", format_rational(*c), k, self.n)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// Remainder of polynomial division by a monic integer polynomial.
///
/// `a` is given by coefficients `a[0] + a[1]x + …`; `m` likewise and monic.
fn poly_rem(a: &[Rational], m: &[i64]) -> Vec<Rational> {
    let deg_m = m.len() - 1;
    assert_eq!(m[deg_m], 1, "modulus must be monic");
    let mut r: Vec<Rational> = a.to_vec();
    while r.len() > deg_m {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - deg_m;
        if !lead.is_zero() {
            for (i, mi) in m.iter().enumerate() {
                if *mi != 0 {
                    r[shift + i] = r[shift + i] - lead * Rational::from_integer(*mi);
                }
            }
        }
        r.pop();
    }
    r
}

/// Exact division of integer polynomials known to divide evenly.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut num: Vec<i64> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd] == 1 || den[dd] == -1);
    let mut q = vec![0i64; num.len() - dd];
    while num.len() > dd {
        let shift = num.len() - 1 - dd;
        let c = num[num.len() - 1] / den[dd];
        q[shift] = c;
        for (i, d) in den.iter().enumerate() {
            num[shift + i] -= c * d;
        }
        assert_eq!(*num.last().unwrap(), 0);
        num.pop();
    }
    assert!(num.iter().all(|c| *c == 0), "division was not exact");
    q
}

static CYCLO_CACHE: Lazy<Mutex<HashMap<u64, Vec<i64>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The `n`-th cyclotomic polynomial `Φ_n` as integer coefficients
/// (constant term first), computed by dividing `xⁿ − 1` by all `Φ_d`
/// for proper divisors `d | n`.  Results are cached.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    if let Some(p) = CYCLO_CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![-1, 1]
    } else {
        // x^n − 1
        let mut p = vec![0i64; n as usize + 1];
        p[0] = -1;
        p[n as usize] = 1;
        let mut acc = p;
        for d in 1..n {
            if n % d == 0 {
                let phi_d = cyclotomic_polynomial(d);
                acc = poly_div_exact(&acc, &phi_d);
            }
        }
        acc
    };
    CYCLO_CACHE.lock().unwrap().insert(n, result.clone());
    result
}

// ---------------------------------------------------------------------------
// Square roots as cyclotomic numbers
// ---------------------------------------------------------------------------

/// Split a positive rational `m` as `m = ρ² · m₀` with `ρ` rational positive
/// and `m₀` squarefree positive integer; returns `(ρ, m₀)` so that
/// `√m = ρ·√m₀`.
pub fn sqrt_split(m: Rational) -> (Rational, u64) {
    assert!(m.is_positive());
    // √(p/q) = √(pq)/q
    let p = *m.numer();
    let q = *m.denom();
    let k = (p * q) as u64;
    let mut square = 1u64;
    let mut squarefree = 1u64;
    let mut rest = k;
    let mut f = 2u64;
    while f * f <= rest {
        if rest % f == 0 {
            let mut e = 0u32;
            while rest % f == 0 {
                rest /= f;
                e += 1;
            }
            square *= f.pow(e / 2);
            if e % 2 == 1 {
                squarefree *= f;
            }
        }
        f += 1;
    }
    if rest > 1 {
        squarefree *= rest;
    }
    (Rational::new(square as i64, q), squarefree)
}

/// `√m₀` for squarefree positive integer `m₀`, as an exact cyclotomic sum.
///
/// Built multiplicatively from prime square roots: `√2 = ζ₈ + ζ₈⁻¹`, and
/// for odd primes the quadratic Gauss sum `g_p = Σ_{a mod p} e(a²/p)`,
/// which equals `√p` for `p ≡ 1 (mod 4)` and `i·√p` for `p ≡ 3 (mod 4)`.
pub fn sqrt_as_cycsum(m0: u64) -> CycSum {
    let mut out = CycSum::constant(Rational::one());
    let mut rest = m0;
    let mut p = 2u64;
    while p <= rest {
        if rest % p == 0 {
            rest /= p;
            out = out.mul(&sqrt_prime(p));
        }
        p += 1;
    }
    out
}

fn sqrt_prime(p: u64) -> CycSum {
    if p == 2 {
        let mut s = CycSum::zero(8);
        s.coeffs[1] = Rational::one();
        s.coeffs[7] = Rational::one();
        return s;
    }
    let mut g = CycSum::zero(p);
    for a in 0..p {
        let k = (a * a) % p;
        g.coeffs[k as usize] = g.coeffs[k as usize] + Rational::one();
    }
    if p % 4 == 1 {
        g
    } else {
        // g = i·√p ⇒ √p = e(−1/4)·g = e(3/4)·g
        g.mul(&CycSum::term(Rational::one(), Phase::of(3, 4)))
    }
}

// ---------------------------------------------------------------------------
// Scalar sums and exact equality
// ---------------------------------------------------------------------------

/// A finite formal sum of `√m·e(r)` terms, the value space of every
/// coherence-equation side in this crate.
#[derive(Clone, Debug, Default)]
pub struct ScalarSum {
    pub terms: Vec<ScaledScalar>,
}

impl ScalarSum {
    pub fn zero() -> Self {
        ScalarSum { terms: Vec::new() }
    }

    pub fn from_scalar(s: ScaledScalar) -> Self {
        ScalarSum { terms: vec![s] }
    }

    pub fn push(&mut self, s: ScaledScalar) {
        self.terms.push(s);
    }

    pub fn negated(&self) -> ScalarSum {
        ScalarSum {
            terms: self
                .terms
                .iter()
                .map(|t| ScaledScalar { m: t.m, phase: t.phase * Phase::minus_one() })
                .collect(),
        }
    }

    /// Group terms by the squarefree part of the magnitude:
    /// returns `m₀ ↦ Σ ρ·e(r)` with each class a cyclotomic sum.
    fn classes(&self) -> HashMap<u64, CycSum> {
        let mut map: HashMap<u64, CycSum> = HashMap::new();
        for t in &self.terms {
            let (rho, m0) = sqrt_split(t.m);
            let piece = CycSum::term(rho, t.phase);
            map.entry(m0)
                .and_modify(|s| *s = s.add(&piece))
                .or_insert(piece);
        }
        map
    }

    /// Exact zero test.
    ///
    /// Fast path: each squarefree class vanishes separately (sufficient).
    /// Complete fallback: embed every `√m₀` as a cyclotomic number via
    /// Gauss sums and test the single combined sum, which also detects
    /// cross-class cancellations such as `√2 − (ζ₈ + ζ₈⁻¹)`.
    pub fn is_zero(&self) -> bool {
        let classes = self.classes();
        if classes.values().all(|s| s.is_zero()) {
            return true;
        }
        if classes.len() == 1 {
            // A single class: ρ-coefficients times √m₀ with √m₀ ≠ 0, so the
            // class test is exact.
            return false;
        }
        let mut total = CycSum::constant(Rational::zero());
        for (m0, s) in classes {
            total = total.add(&s.mul(&sqrt_as_cycsum(m0)));
        }
        total.is_zero()
    }

    pub fn eq_value(&self, other: &ScalarSum) -> bool {
        let mut diff = self.clone();
        diff.terms.extend(other.negated().terms);
        diff.is_zero()
    }

    /// Does this sum equal the single scalar `s`?
    pub fn eq_scalar(&self, s: ScaledScalar) -> bool {
        self.eq_value(&ScalarSum::from_scalar(s))
    }

    /// Does this sum equal the rational `c` (possibly zero)?
    pub fn eq_rational(&self, c: Rational) -> bool {
        if c.is_zero() {
            self.is_zero()
        } else {
            self.eq_scalar(ScaledScalar::from_rational(c))
        }
    }

    /// Convert to a cyclotomic sum, embedding all square roots.
    pub fn to_cycsum(&self) -> CycSum {
        let mut total = CycSum::constant(Rational::zero());
        for (m0, s) in self.classes() {
            total = total.add(&s.mul(&sqrt_as_cycsum(m0)));
        }
        total
    }
}

// ---------------------------------------------------------------------------
// Snapping
// ---------------------------------------------------------------------------

/// Errors from certified snapping.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum SnapError {
    #[error("value does not certify as sqrt({magnitude_sq})·(root of unity of order {order}); residual {residual:.3e} exceeds threshold {threshold:.3e}")]
    NoSnap { magnitude_sq: String, order: u64, residual: f64, threshold: f64 },
}

/// Resolve which root of unity a promised Gauss-type sum equals.
///
/// Precondition (caller's guarantee): the true value of `s` is
/// `√(magnitude_sq)·e(k/order)` for some integer `k`.  The value is
/// evaluated numerically, divided by `√magnitude_sq`, and matched against
/// the `order` candidate roots; the match is certified when the residual
/// plus the rigorous evaluation bound stays below half the minimal gap
/// `2·sin(π/order)` between distinct roots.  A failed certification means
/// the promise was violated (degenerate input or a bug) and is reported as
/// [`SnapError::NoSnap`].
pub fn snap_to_root(s: &CycSum, magnitude_sq: Rational, order: u64) -> Result<Phase, SnapError> {
    assert!(magnitude_sq.is_positive());
    assert!(order >= 1);
    let (re, im, bound) = s.eval();
    let mag = (*magnitude_sq.numer() as f64 / *magnitude_sq.denom() as f64).sqrt();
    let (wr, wi) = (re / mag, im / mag);
    let gap = 2.0 * (std::f64::consts::PI / order as f64).sin();
    let threshold = gap / 2.0 - bound / mag - 1e-9;
    let mut best: Option<(u64, f64)> = None;
    for k in 0..order {
        let ang = 2.0 * std::f64::consts::PI * k as f64 / order as f64;
        let d = ((wr - ang.cos()).powi(2) + (wi - ang.sin()).powi(2)).sqrt();
        if best.map_or(true, |(_, bd)| d < bd) {
            best = Some((k, d));
        }
    }
    let (k, d) = best.unwrap();
    if d < threshold {
        Ok(Phase::new(Rational::new(k as i64, order as i64)))
    } else {
        Err(SnapError::NoSnap {
            magnitude_sq: format_rational(magnitude_sq),
            order,
            residual: d,
            threshold,
        })
    }
}

// ---------------------------------------------------------------------------
// Exact cyclotomic field arithmetic (for matrix inversion / modularity)
// ---------------------------------------------------------------------------

/// The cyclotomic field `ℚ(ζ_N)` with elements represented as polynomials
/// in `ζ_N` of degree `< deg Φ_N`, reduced mod `Φ_N`.
///
/// Supports the exact linear algebra needed for associator inversion and
/// for modularity (invertibility of the unnormalized S-matrix).
pub struct CycField {
    pub n: u64,
    phi: Vec<i64>,
}

/// An element of a [`CycField`]; coefficients of `1, ζ, ζ², …`.
pub type FieldElem = Vec<Rational>;

impl CycField {
    pub fn new(n: u64) -> Self {
        CycField { n, phi: cyclotomic_polynomial(n) }
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> FieldElem {
        vec![Rational::zero(); self.degree()]
    }

    pub fn one(&self) -> FieldElem {
        let mut e = self.zero();
        if !e.is_empty() {
            e[0] = Rational::one();
        }
        e
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    /// Reduce a polynomial of arbitrary degree into the field.
    fn reduce(&self, p: &[Rational]) -> FieldElem {
        let mut r = poly_rem(p, &self.phi);
        r.resize(self.degree(), Rational::zero());
        r
    }

    /// Embed a cyclotomic sum whose conductor divides `N`.
    pub fn embed(&self, s: &CycSum) -> FieldElem {
        assert!(self.n % s.n == 0, "conductor {} does not divide field conductor {}", s.n, self.n);
        let lifted = s.lift(self.n);
        self.reduce(&lifted.coeffs)
    }

    pub fn embed_scalar_sum(&self, s: &ScalarSum) -> FieldElem {
        self.embed(&s.to_cycsum())
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a.iter().zip(b).map(|(x, y)| *x + *y).collect()
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a.iter().zip(b).map(|(x, y)| *x - *y).collect()
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let mut prod = vec![Rational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] = prod[i + j] + *x * *y;
            }
        }
        self.reduce(&prod)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in ℚ[x]
    /// against `Φ_N` (which is irreducible, so any nonzero element is a unit).
    pub fn inv(&self, a: &FieldElem) -> FieldElem {
        assert!(!self.is_zero(a), "division by zero in cyclotomic field");
        // Extended gcd of a (as polynomial) and Φ_N.
        let mut r0: Vec<Rational> =
            self.phi.iter().map(|c| Rational::from_integer(*c)).collect();
        let mut r1: Vec<Rational> = trim(a);
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd = nonzero constant (Φ_N irreducible, deg a < deg Φ_N).
        assert_eq!(r0.len(), 1, "unexpected nontrivial gcd with cyclotomic polynomial");
        let c = r0[0];
        let mut out: Vec<Rational> = s0.iter().map(|x| *x / c).collect();
        out.resize(self.degree(), Rational::zero());
        self.reduce(&out)
    }
}

fn trim(p: &[Rational]) -> Vec<Rational> {
    let mut v = p.to_vec();
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = out[i] + *x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] = out[i] - *x;
    }
    trim(&out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + *x * *y;
        }
    }
    trim(&out)
}

/// Division with remainder in ℚ[x]; `b` nonzero.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b);
    assert!(!b.is_empty());
    let mut r = trim(a);
    let db = b.len() - 1;
    let lead = b[db];
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let c = *r.last().unwrap() / lead;
        let shift = r.len() - 1 - db;
        q[shift] = c;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = r[shift + i] - c * *bi;
        }
        r = trim(&r);
        if r.len() <= shift + db {
            // degree dropped by at least one; loop continues correctly
        }
    }
    (trim(&q), r)
}

/// Gaussian elimination over a cyclotomic field.
///
/// Returns the inverse of the square matrix `m` (row-major), or `None`
/// when it is singular.
pub fn field_matrix_inverse(
    field: &CycField,
    m: &[Vec<FieldElem>],
) -> Option<Vec<Vec<FieldElem>>> {
    let n = m.len();
    let mut a: Vec<Vec<FieldElem>> = m.to_vec();
    let mut inv: Vec<Vec<FieldElem>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !field.is_zero(&a[r][col]))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pinv = field.inv(&a[col][col]);
        for j in 0..n {
            a[col][j] = field.mul(&a[col][j], &pinv);
            inv[col][j] = field.mul(&inv[col][j], &pinv);
        }
        for r in 0..n {
            if r != col && !field.is_zero(&a[r][col]) {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = field.mul(&f, &a[col][j]);
                    a[r][j] = field.sub(&a[r][j], &t);
                    let t = field.mul(&f, &inv[col][j]);
                    inv[r][j] = field.sub(&inv[r][j], &t);
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_arithmetic_is_exact() {
        let a = Phase::of(1, 3);
        let b = Phase::of(5, 6);
        assert_eq!(a * b, Phase::of(1, 6));
        assert_eq!(a.inv(), Phase::of(2, 3));
        assert!(Phase::of(7, 7).is_one());
    }

    #[test]
    fn principal_sqrt_convention() {
        assert_eq!(Phase::one().principal_sqrt(), Phase::one());
        assert_eq!(Phase::of(1, 4).principal_sqrt(), Phase::of(1, 8));
        // Halve the canonical exponent: e(3/4) ↦ e(3/8), not e(7/8).
        assert_eq!(Phase::of(3, 4).principal_sqrt(), Phase::of(3, 8));
    }

    #[test]
    fn principal_sqrt_squares_back() {
        for num in 0..24 {
            let p = Phase::of(num, 24);
            let s = p.principal_sqrt();
            assert_eq!(s * s, p);
        }
    }

    #[test]
    fn cyclotomic_polynomials_are_correct() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn sum_of_all_roots_is_zero() {
        for n in 2..20u64 {
            let mut s = CycSum::zero(n);
            for k in 0..n as usize {
                s.coeffs[k] = Rational::one();
            }
            assert!(s.is_zero(), "sum of all {}-th roots must vanish", n);
        }
    }

    #[test]
    fn gauss_sum_z3_snaps_to_i_sqrt3() {
        // Σ_{a∈ℤ₃} e(a²/3) = 1 + 2e(1/3) = i√3 = √3·e(1/4).
        let mut s = CycSum::zero(3);
        s.coeffs[0] = Rational::one();
        s.coeffs[1] = Rational::from_integer(2);
        let p = snap_to_root(&s, Rational::from_integer(3), 8).unwrap();
        assert_eq!(p, Phase::of(2, 8));
    }

    #[test]
    fn empty_gauss_sum_snaps_to_one() {
        let s = CycSum::constant(Rational::one());
        assert_eq!(snap_to_root(&s, Rational::one(), 8).unwrap(), Phase::one());
    }

    #[test]
    fn gauss_sum_z2_quarter_form() {
        // 1 + e(−1/4) = 1 − i = √2·e(−1/8) = √2·e(7/8).
        let s = CycSum::term(Rational::one(), Phase::one())
            .add(&CycSum::term(Rational::one(), Phase::of(-1, 4)));
        let p = snap_to_root(&s, Rational::from_integer(2), 8).unwrap();
        assert_eq!(p, Phase::of(7, 8));
    }

    #[test]
    fn snap_refuses_non_root() {
        // 1 + e(1/3) has modulus 1 but is not an 8th root of unity
        // of magnitude √3 (its modulus is 1, not √3).
        let s = CycSum::term(Rational::one(), Phase::one())
            .add(&CycSum::term(Rational::one(), Phase::of(1, 3)));
        assert!(snap_to_root(&s, Rational::from_integer(3), 8).is_err());
    }

    #[test]
    fn snap_is_idempotent() {
        let p = Phase::of(5, 8);
        let s = CycSum::term(Rational::one(), p);
        assert_eq!(snap_to_root(&s, Rational::one(), 8).unwrap(), p);
    }

    #[test]
    fn sqrt_embeddings_square_correctly() {
        for m0 in [2u64, 3, 5, 6, 7, 10, 11, 13, 15] {
            let s = sqrt_as_cycsum(m0);
            let sq = s.mul(&s);
            assert!(
                sq.eq_value(&CycSum::constant(Rational::from_integer(m0 as i64))),
                "(√{m0})² must equal {m0}"
            );
            // And the positive branch: numeric value is +√m0.
            let (re, im, _) = s.eval();
            assert!(im.abs() < 1e-9);
            assert!((re - (m0 as f64).sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn scalar_sum_cross_class_cancellation() {
        // √2 − (ζ₈ + ζ₈⁻¹) = 0 mixes the √2 class with pure phases.
        let mut s = ScalarSum::zero();
        s.push(ScaledScalar::sqrt_of(Rational::from_integer(2)));
        s.push(ScaledScalar { m: Rational::one(), phase: Phase::of(1 + 4, 8) }); // −ζ₈
        s.push(ScaledScalar { m: Rational::one(), phase: Phase::of(7 + 4, 8) }); // −ζ₈⁻¹
        assert!(s.is_zero());
    }

    #[test]
    fn scalar_sum_orthogonality_collapse() {
        // Σ_{c∈ℤ₃} e(c·k/3) = 3·δ_{k,0}.
        for k in 0..3 {
            let mut s = ScalarSum::zero();
            for c in 0..3 {
                s.push(ScaledScalar::from_phase(Phase::of(c * k, 3)));
            }
            if k == 0 {
                assert!(s.eq_rational(Rational::from_integer(3)));
            } else {
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn field_inverse_roundtrip() {
        let f = CycField::new(12);
        let x = f.embed(&CycSum::term(Rational::new(3, 2), Phase::of(1, 12))
            .add(&CycSum::term(Rational::from_integer(1), Phase::of(7, 12))));
        let xi = f.inv(&x);
        assert_eq!(f.mul(&x, &xi), f.one());
    }

    #[test]
    fn field_matrix_inverse_fourier() {
        // The 3×3 Fourier-type matrix e(ij/3)/√3 is unitary; its inverse is
        // the conjugate transpose.
        let f = CycField::new(12);
        let sqrt3inv = f.inv(&f.embed(&sqrt_as_cycsum(3)));
        let m: Vec<Vec<FieldElem>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let e = f.embed(&CycSum::term(Rational::one(), Phase::of(i * j, 3)));
                        f.mul(&e, &sqrt3inv)
                    })
                    .collect()
            })
            .collect();
        let inv = field_matrix_inverse(&f, &m).expect("unitary matrix must be invertible");
        for i in 0..3 {
            for j in 0..3 {
                let expect = {
                    let e = f.embed(&CycSum::term(Rational::one(), Phase::of(-(i as i64) * j, 3)));
                    f.mul(&e, &sqrt3inv)
                };
                assert_eq!(inv[i as usize][j as usize], expect);
            }
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let f = CycField::new(4);
        let one = f.one();
        let m = vec![vec![one.clone(), one.clone()], vec![one.clone(), one]];
        assert!(field_matrix_inverse(&f, &m).is_none());
    }

    #[test]
    fn rational_serialization_roundtrip() {
        for s in ["1/3", "-2/7", "5", "0"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(r), s);
        }
        assert_eq!(parse_rational("2/4").unwrap(), Rational::new(1, 2));
        assert!(parse_rational("1/0").is_none());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn phase_group_laws(a in 0i64..48, b in 0i64..48, c in 0i64..48) {
                let (x, y, z) = (Phase::of(a, 48), Phase::of(b, 48), Phase::of(c, 48));
                prop_assert_eq!((x * y) * z, x * (y * z));
                prop_assert_eq!(x * y, y * x);
                prop_assert!((x * x.inv()).is_one());
                prop_assert_eq!(x.pow(48), Phase::one());
            }

            #[test]
            fn cycsum_root_relations(n in 1u64..13, k in 0i64..13) {
                // Lifting to a larger conductor never changes the value.
                let k = k % n as i64;
                let a = CycSum::term(Rational::one(), Phase::of(k, n as i64));
                let b = a.lift(n * 3);
                prop_assert!(a.sub(&b).is_zero());
                // The full sum of n-th roots vanishes for n > 1.
                let mut full = CycSum::zero(n);
                for j in 0..n as i64 {
                    full = full.add(&CycSum::term(Rational::one(), Phase::of(j, n as i64)));
                }
                if n > 1 {
                    prop_assert!(full.sub(&CycSum::constant(Rational::zero())).is_zero());
                } else {
                    prop_assert!(full.sub(&CycSum::constant(Rational::one())).is_zero());
                }
            }

            #[test]
            fn scalar_sum_equality_respects_arithmetic(m in 1i64..11, r in 0i64..24, s in 0i64..24) {
                // √m·e(r) + √m·e(s) compared against the factored form.
                let x = ScaledScalar::new(Rational::from_integer(m), Phase::of(r, 24));
                let y = ScaledScalar::new(Rational::from_integer(m), Phase::of(s, 24));
                let mut lhs = ScalarSum::zero();
                lhs.push(x);
                lhs.push(y);
                let mut rhs = ScalarSum::zero();
                rhs.push(y);
                rhs.push(x);
                prop_assert!(lhs.eq_value(&rhs));
                // x - x = 0 even across different representations.
                let mut diff = ScalarSum::zero();
                diff.push(ScaledScalar::new(Rational::from_integer(4 * m), Phase::of(r, 24)));
                diff.push(ScaledScalar::new(Rational::from_integer(m), Phase::of(r + 12, 24)));
                diff.push(ScaledScalar::new(Rational::from_integer(m), Phase::of(r + 12, 24)));
                prop_assert!(diff.is_zero());
            }
        }
    }
}
