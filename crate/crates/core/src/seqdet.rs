//! The tridiagonal determinant families `P`, `Q`, `Cay` (with `Sylv` as its
//! top slice) and the Krawtchouk family `Kraw`, together with their zero
//! sets, factorization checks, the palindromic-pair checker, and a small set
//! of cross identities.
//!
//! Every family is available through two independent routes: scalar values
//! via the three-term continuant recurrence (or the defining binomial sum
//! for `Kraw`), and exact polynomials in `x` via the same recurrence over
//! the polynomial ring (or exact interpolation for `Kraw`).

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::poly::Poly;
use crate::roots::{rational_roots, RationalRoots};
use crate::scalar::{factorial, falling_factorial, gen_binomial, neg_one_pow, rat_to_i64, rint, rising_factorial, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    P,
    Q,
    Cay,
    Kraw,
    Sylv,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqDetError {
    #[error("band lengths inconsistent: diag {diag}, sub {sub}, super {sup}")]
    LengthMismatch { diag: usize, sub: usize, sup: usize },
    #[error("target {target} requires n with parity {expected}, got n = {n}")]
    ParityMismatch {
        target: &'static str,
        expected: &'static str,
        n: usize,
    },
}

/// Tridiagonal determinant by the three-term recurrence
/// `D_k = diag_k D_{k-1} - super_{k-1} sub_{k-1} D_{k-2}`, with `D_0 = 1`.
pub fn continuant<T>(sub: &[T], diag: &[T], sup: &[T]) -> Result<T, SeqDetError>
where
    T: Clone + One + std::ops::Mul<Output = T> + std::ops::Sub<Output = T>,
{
    let k = diag.len();
    if (k == 0 && !(sub.is_empty() && sup.is_empty()))
        || (k > 0 && (sub.len() != k - 1 || sup.len() != k - 1))
    {
        return Err(SeqDetError::LengthMismatch {
            diag: k,
            sub: sub.len(),
            sup: sup.len(),
        });
    }
    let mut prev = T::one();
    let mut cur = match diag.first() {
        None => return Ok(T::one()),
        Some(d) => d.clone(),
    };
    for i in 2..=k {
        let next = diag[i - 1].clone() * cur.clone()
            - sup[i - 2].clone() * sub[i - 2].clone() * prev.clone();
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `a(x) = 2x(2x - 1)`.
fn band_a(x: &Rat) -> Rat {
    let two_x = x + x;
    &two_x * &(&two_x - &Rat::one())
}

/// `b(x) = 2x(2x + 1)`.
fn band_b(x: &Rat) -> Rat {
    let two_x = x + x;
    &two_x * &(&two_x + &Rat::one())
}

/// Band entries of one of the tridiagonal families, 1-based in `i`.
/// `diag_coeff` multiplies `x`; `Cay` has a constant diagonal offset of zero
/// and `diag_coeff = 1`.
struct Bands {
    diag_coeff: Vec<Rat>,
    sup: Vec<Rat>,
    sub: Vec<Rat>,
}

fn bands(family: Family, k: usize, y: &Rat) -> Bands {
    let mut diag_coeff = Vec::with_capacity(k);
    let mut sup = Vec::new();
    let mut sub = Vec::new();
    match family {
        Family::P => {
            for i in 1..=k {
                diag_coeff.push(y - rint(4 * (i as i64 - 1)));
            }
            for i in 1..k {
                sup.push(band_a(&rint(i as i64)));
                sub.push(-band_a(&((y - rint(2 * (i as i64 - 1))) / rint(2))));
            }
        }
        Family::Q => {
            for i in 1..=k {
                diag_coeff.push(y - rint(2 + 4 * (i as i64 - 1)));
            }
            for i in 1..k {
                sup.push(band_b(&rint(i as i64)));
                sub.push(-band_b(&((y - rint(2 * i as i64)) / rint(2))));
            }
        }
        Family::Cay => {
            for _ in 1..=k {
                diag_coeff.push(Rat::one());
            }
            for i in 1..k {
                sup.push(rint(i as i64));
                sub.push(y - rint(i as i64 - 1));
            }
        }
        Family::Kraw | Family::Sylv => unreachable!("no tridiagonal bands"),
    }
    Bands {
        diag_coeff,
        sup,
        sub,
    }
}

/// `family_k(x; y)` as an exact scalar.
pub fn family_value(family: Family, k: usize, x: &Rat, y: &Rat) -> Rat {
    match family {
        Family::Kraw => kraw_value(k, x, y),
        Family::Sylv => family_value(Family::Cay, k + 1, x, &rint(k as i64)),
        _ => {
            let b = bands(family, k, y);
            let diag: Vec<Rat> = b.diag_coeff.iter().map(|c| c * x).collect();
            continuant(&b.sub, &diag, &b.sup).expect("bands are consistent by construction")
        }
    }
}

/// The whole prefix `family_0(x;y) .. family_K(x;y)` at a scalar `x`,
/// computed in one pass of the recurrence.
pub fn family_value_prefix(family: Family, up_to: usize, x: &Rat, y: &Rat) -> Vec<Rat> {
    match family {
        Family::Kraw => (0..=up_to).map(|k| kraw_value(k, x, y)).collect(),
        Family::Sylv => (0..=up_to)
            .map(|k| family_value(Family::Sylv, k, x, y))
            .collect(),
        _ => {
            let b = bands(family, up_to, y);
            let mut out = Vec::with_capacity(up_to + 1);
            out.push(Rat::one());
            if up_to == 0 {
                return out;
            }
            out.push(&b.diag_coeff[0] * x);
            for i in 2..=up_to {
                let next = &(&b.diag_coeff[i - 1] * x) * &out[i - 1]
                    - &(&b.sup[i - 2] * &b.sub[i - 2]) * &out[i - 2];
                out.push(next);
            }
            out
        }
    }
}

fn kraw_value(k: usize, x: &Rat, y: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for j in 0..=k {
        let term = gen_binomial(x, j as i64) * gen_binomial(&(y - x), (k - j) as i64);
        acc += term * neg_one_pow(j as i64);
    }
    acc
}

/// `family_k(x; y)` as an exact polynomial in `x`.
///
/// For `Sylv` the index `k` is interpreted as `n` and the result is
/// `Cay_{n+1}(x; n)`; the `y` argument is ignored.
pub fn family_poly(family: Family, k: usize, y: &Rat) -> Poly<Rat> {
    match family {
        Family::Kraw => {
            // Degree <= k, so k+1 exact evaluations determine it.
            let pts: Vec<(Rat, Rat)> = (0..=k as i64)
                .map(|x| (rint(x), kraw_value(k, &rint(x), y)))
                .collect();
            Poly::interpolate(&pts)
        }
        Family::Sylv => family_poly(Family::Cay, k + 1, &rint(k as i64)),
        _ => {
            let b = bands(family, k, y);
            let diag: Vec<Poly<Rat>> = b
                .diag_coeff
                .iter()
                .map(|c| Poly::monomial(c.clone(), 1))
                .collect();
            let sub: Vec<Poly<Rat>> = b.sub.iter().map(|c| Poly::constant(c.clone())).collect();
            let sup: Vec<Poly<Rat>> = b.sup.iter().map(|c| Poly::constant(c.clone())).collect();
            continuant(&sub, &diag, &sup).expect("bands are consistent by construction")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ZeroSetKind {
    /// The polynomial is identically zero: every `s` is a zero.
    AllOfC,
    FiniteSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSetResult {
    pub kind: ZeroSetKind,
    /// Rational zeros with multiplicity (empty for `AllOfC`).
    pub roots: Vec<(Rat, usize)>,
    /// Degree of the factor carrying no rational zero.
    pub unresolved_degree: usize,
}

impl ZeroSetResult {
    pub fn distinct_roots(&self) -> Vec<Rat> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }
}

/// Rational zero set of `family_k(x; n)` in `x`, detecting the identically
/// zero case structurally.
pub fn zero_set(family: Family, k: usize, n: &Rat) -> ZeroSetResult {
    let p = family_poly(family, k, n);
    if p.is_zero() {
        return ZeroSetResult {
            kind: ZeroSetKind::AllOfC,
            roots: Vec::new(),
            unresolved_degree: 0,
        };
    }
    let RationalRoots { roots, remainder } = rational_roots(&p).expect("nonzero polynomial");
    ZeroSetResult {
        kind: ZeroSetKind::FiniteSet,
        roots,
        unresolved_degree: remainder.degree().unwrap_or(0),
    }
}

/// Which associated sequence `a_k` divides the terms in the mirror identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AssocSeq {
    EvenFactorial,
    OddFactorial,
    Factorial,
    One,
}

impl AssocSeq {
    pub fn value(self, k: usize) -> Rat {
        match self {
            AssocSeq::EvenFactorial => factorial(2 * k),
            AssocSeq::OddFactorial => factorial(2 * k + 1),
            AssocSeq::Factorial => factorial(k),
            AssocSeq::One => Rat::one(),
        }
    }
}

/// Data of a mirror-symmetry check for one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PalindromeConfig {
    pub family: Family,
}

impl PalindromeConfig {
    pub fn for_family(family: Family) -> Self {
        PalindromeConfig { family }
    }

    pub fn assoc(&self) -> AssocSeq {
        match self.family {
            Family::P => AssocSeq::EvenFactorial,
            Family::Q => AssocSeq::OddFactorial,
            Family::Cay | Family::Sylv => AssocSeq::Factorial,
            Family::Kraw => AssocSeq::One,
        }
    }

    /// The degree `d(n)` of the mirror symmetry; `None` when it is not a
    /// non-negative integer for this `n`.
    pub fn degree(&self, n: usize) -> Option<usize> {
        match self.family {
            Family::P => (n % 2 == 0).then_some(n / 2),
            Family::Q => (n % 2 == 0 && n >= 2).then(|| (n - 2) / 2),
            Family::Cay | Family::Sylv | Family::Kraw => Some(n),
        }
    }

    /// The sign factor `theta(s)`; `None` when undefined for this `s`.
    pub fn sign_factor(&self, s: &Rat, n: usize) -> Option<Rat> {
        match self.family {
            Family::P => match n % 4 {
                0 => Some(Rat::one()),
                2 => (!s.is_zero()).then(|| sgn(s)),
                _ => None,
            },
            Family::Q => match n % 4 {
                0 => (!s.is_zero()).then(|| sgn(s)),
                2 => Some(Rat::one()),
                _ => None,
            },
            Family::Cay | Family::Sylv => {
                let v = rat_to_i64(s)?;
                let half = (n as i64 - v).div_euclid(2);
                ((n as i64 - v) % 2 == 0).then(|| neg_one_pow(half))
            }
            Family::Kraw => {
                let v = rat_to_i64(s)?;
                Some(neg_one_pow(v))
            }
        }
    }
}

fn sgn(s: &Rat) -> Rat {
    if s.is_positive() {
        Rat::one()
    } else {
        -Rat::one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PalinStatus {
    Pass,
    Fail,
    /// The degree map is not a non-negative integer at this `n`.
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct PalinCounterexample {
    pub s: String,
    pub k: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PalindromeReport {
    pub family: Family,
    pub n: usize,
    pub status: PalinStatus,
    /// Values of `s` the identity was checked on. When the terminating zero
    /// set is all of C, these are sample points; their number exceeds the
    /// degree of the identity in `s`, so agreement there is a proof.
    pub checked_s: Vec<String>,
    pub sampled: bool,
    pub counterexamples: Vec<PalinCounterexample>,
}

/// Check the mirror identity `p_k(s)/a_k = theta(s) p_{d-k}(s)/a_{d-k}` for
/// `k <= d` and the vanishing `p_k(s) = 0` for `d+1 <= k <= d+1+extra_tail`,
/// over every `s` in the zero set of `p_{d+1}(x; n)`.
pub fn check_palindromic(
    config: PalindromeConfig,
    n: usize,
    extra_tail: usize,
) -> PalindromeReport {
    let family = config.family;
    let Some(d) = config.degree(n) else {
        return PalindromeReport {
            family,
            n,
            status: PalinStatus::NotApplicable,
            checked_s: Vec::new(),
            sampled: false,
            counterexamples: Vec::new(),
        };
    };
    let zs = zero_set(family, d + 1, &rint(n as i64));
    let (s_values, sampled) = match zs.kind {
        ZeroSetKind::AllOfC => {
            // Enough integer samples to pin the polynomial identity exactly.
            let count = d + extra_tail + 2;
            let lo = -(count as i64 / 2);
            ((lo..lo + count as i64).map(rint).collect::<Vec<_>>(), true)
        }
        ZeroSetKind::FiniteSet => (zs.distinct_roots(), false),
    };

    let mut counterexamples = Vec::new();
    let y = rint(n as i64);
    for s in &s_values {
        let seq = family_value_prefix(family, d + 1 + extra_tail, s, &y);
        for (k, value) in seq.iter().enumerate().skip(d + 1) {
            if !value.is_zero() {
                counterexamples.push(PalinCounterexample {
                    s: s.to_string(),
                    k,
                    lhs: value.to_string(),
                    rhs: "0".to_string(),
                });
            }
        }
        let Some(theta) = config.sign_factor(s, n) else {
            counterexamples.push(PalinCounterexample {
                s: s.to_string(),
                k: 0,
                lhs: "undefined sign factor".to_string(),
                rhs: String::new(),
            });
            continue;
        };
        for k in 0..=d {
            let lhs = &seq[k] / config.assoc().value(k);
            let rhs = &theta * &(&seq[d - k] / config.assoc().value(d - k));
            if lhs != rhs {
                counterexamples.push(PalinCounterexample {
                    s: s.to_string(),
                    k,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }

    PalindromeReport {
        family,
        n,
        status: if counterexamples.is_empty() {
            PalinStatus::Pass
        } else {
            PalinStatus::Fail
        },
        checked_s: s_values.iter().map(|s| s.to_string()).collect(),
        sampled,
        counterexamples,
    }
}

/// For odd `n`, the mirror identity with candidate degree `(n-1)/2` must
/// fail for both choices of constant sign. Returns `true` when it does fail
/// (the expected outcome).
pub fn palindromic_fails_for_odd(family: Family, n: usize) -> bool {
    assert!(n % 2 == 1);
    assert!(matches!(family, Family::P | Family::Q));
    let d = (n - 1) / 2;
    let zs = zero_set(family, d + 1, &rint(n as i64));
    let roots = zs.distinct_roots();
    if roots.is_empty() {
        return false;
    }
    let assoc = PalindromeConfig::for_family(family).assoc();
    let y = rint(n as i64);
    for theta_sign in [Rat::one(), -Rat::one()] {
        let mut holds_everywhere = true;
        'outer: for s in &roots {
            let seq = family_value_prefix(family, d + 1, s, &y);
            for k in 0..=d {
                let lhs = &seq[k] / assoc.value(k);
                let rhs = &theta_sign * &(&seq[d - k] / assoc.value(d - k));
                if lhs != rhs {
                    holds_everywhere = false;
                    break 'outer;
                }
            }
        }
        if holds_everywhere {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FactorTarget {
    /// `P_{(n+2)/2}(x;n)` for even `n`: zero or a product of quadratics.
    PEven,
    /// `Q_{n/2}(x;n)` for even `n`: a product of quadratics or zero.
    QEven,
    /// `P_{(n+1)/2}(x;n)` for odd `n`: a full linear factorization.
    POdd,
    /// `Sylv(x;n) = prod (x - n + 2l)`.
    Sylv,
    /// `Kraw_{n+1}(x;n) = (-2)^{n+1} C(x, n+1)`.
    KrawNp1,
    /// `P_{(n+1)/2}(x;n)` expressed through two `Sylv` evaluations.
    PSylvProduct,
}

#[derive(Debug, Clone)]
pub struct FactorizationReport {
    pub target: FactorTarget,
    pub n: usize,
    pub equal: bool,
    /// Determinant-route polynomial.
    pub lhs: Poly<Rat>,
    /// Product-route polynomial.
    pub rhs: Poly<Rat>,
    /// The leading constant's closed form agrees with the direct product of
    /// diagonal coefficients (always true for targets without one).
    pub constant_closed_form_ok: bool,
}

fn prod_quadratics(offsets: impl Iterator<Item = i64>) -> Poly<Rat> {
    let mut acc = Poly::one();
    for c in offsets {
        // x^2 - c^2
        acc = &acc * &Poly::from_coeffs(vec![rint(-c * c), Rat::zero(), Rat::one()]);
    }
    acc
}

fn prod_linear(roots: impl Iterator<Item = Rat>) -> Poly<Rat> {
    let mut acc = Poly::one();
    for r in roots {
        acc = &acc * &Poly::from_coeffs(vec![-r, Rat::one()]);
    }
    acc
}

/// Verify one factorization identity coefficient-exactly, building both
/// sides independently.
pub fn verify_factorization(
    target: FactorTarget,
    n: usize,
) -> Result<FactorizationReport, SeqDetError> {
    let parity_err = |t: &'static str, expected: &'static str| SeqDetError::ParityMismatch {
        target: t,
        expected,
        n,
    };
    let ni = n as i64;
    let (lhs, rhs, constant_ok) = match target {
        FactorTarget::PEven => {
            if n % 2 != 0 {
                return Err(parity_err("PEven", "even"));
            }
            let lhs = family_poly(Family::P, (n + 2) / 2, &rint(ni));
            let alpha: Rat = (0..=ni / 2).map(|l| rint(ni - 4 * l)).product();
            let alpha_closed = if n % 4 == 0 {
                Rat::zero()
            } else {
                let pow: Rat = (0..(ni + 2) / 4).map(|_| rint(-4)).product();
                let sq: Rat = (0..=(ni - 2) / 4).map(|l| rint((1 + 2 * l) * (1 + 2 * l))).product();
                pow * sq
            };
            let rhs = if n % 4 == 0 {
                Poly::zero()
            } else {
                prod_quadratics((0..=(ni - 2) / 4).map(|l| 4 * l + 1)).scale(&alpha)
            };
            (lhs, rhs, alpha == alpha_closed)
        }
        FactorTarget::QEven => {
            if n % 2 != 0 {
                return Err(parity_err("QEven", "even"));
            }
            let lhs = family_poly(Family::Q, n / 2, &rint(ni));
            let beta: Rat = (0..=(ni - 2).max(-2) / 2)
                .map(|l| rint(ni - 2 - 4 * l))
                .product();
            let beta_closed = if n % 4 == 0 {
                let pow: Rat = (0..ni / 4).map(|_| rint(-4)).product();
                let sq: Rat = if ni >= 4 {
                    (0..=(ni - 4) / 4).map(|l| rint((1 + 2 * l) * (1 + 2 * l))).product()
                } else {
                    Rat::one()
                };
                pow * sq
            } else {
                Rat::zero()
            };
            let rhs = if n % 4 == 0 {
                let quad = if ni >= 4 {
                    prod_quadratics((0..=(ni - 4) / 4).map(|l| 4 * l + 3))
                } else {
                    Poly::one()
                };
                quad.scale(&beta)
            } else {
                Poly::zero()
            };
            (lhs, rhs, beta == beta_closed)
        }
        FactorTarget::POdd => {
            if n % 2 != 1 {
                return Err(parity_err("POdd", "odd"));
            }
            let lhs = family_poly(Family::P, (n + 1) / 2, &rint(ni));
            let gamma: Rat = (0..=(ni - 1) / 2).map(|l| rint(ni - 4 * l)).product();
            let odd_prod: Rat = (0..=(ni - 3) / 2).map(|l| rint(3 + 2 * l)).product();
            let gamma_closed = if n % 4 == 1 {
                neg_one_pow((ni - 1) / 4) * &odd_prod
            } else {
                neg_one_pow((ni + 1) / 4) * &odd_prod
            };
            let rhs =
                prod_linear((0..=(ni - 1) / 2).map(|l| rint(ni - 1 - 4 * l))).scale(&gamma);
            (lhs, rhs, gamma == gamma_closed)
        }
        FactorTarget::Sylv => {
            let lhs = family_poly(Family::Sylv, n, &rint(ni));
            let rhs = prod_linear((0..=ni).map(|l| rint(ni - 2 * l)));
            (lhs, rhs, true)
        }
        FactorTarget::KrawNp1 => {
            let lhs = family_poly(Family::Kraw, n + 1, &rint(ni));
            let c = {
                let pow: Rat = (0..=ni).map(|_| rint(-2)).product();
                pow / factorial(n + 1)
            };
            let rhs = prod_linear((0..=ni).map(rint)).scale(&c);
            (lhs, rhs, true)
        }
        FactorTarget::PSylvProduct => {
            if n % 2 != 1 {
                return Err(parity_err("PSylvProduct", "odd"));
            }
            let m = (n - 1) / 2;
            let lhs = family_poly(Family::P, (n + 1) / 2, &rint(ni));
            let sylv_half = family_value(Family::Sylv, m, &Rat::new(1.into(), 2.into()), &rint(0));
            let sylv_of_half_x =
                family_poly(Family::Sylv, m, &rint(0)).compose_scale(&Rat::new(1.into(), 2.into()));
            let two_pow: Rat = (0..=ni).map(|_| rint(2)).product();
            let rhs = sylv_of_half_x.scale(&(two_pow * sylv_half));
            (lhs, rhs, true)
        }
    };
    Ok(FactorizationReport {
        target,
        n,
        equal: lhs == rhs,
        lhs,
        rhs,
        constant_closed_form_ok: constant_ok,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IdentityKind {
    /// `Cay_k(x; x)` is the falling factorial of length `k`.
    CayFalling,
    /// `Cay_k(x; -x)` is the rising factorial of length `k`.
    CayRaising,
    /// `Cay_k(1; -1) = k!`.
    CayFactorial,
    /// `k! Kraw_k(x; y) = Cay_k(y - 2x; y)`.
    KrawFromCay,
    /// `Cay_k` as a binomial sum of falling and rising factorials.
    CayBinomialForm,
    /// `h_{k+1} = x/(k+1) h_k + (k-n-1)/(k+1) h_{k-1}` with `h_k = Cay_k/k!`.
    CayRecurrence,
}

/// Verify one polynomial identity for all `k <= k_max` by exact evaluation
/// on integer grids sized past the known degree bounds.
pub fn verify_identity(id: IdentityKind, k_max: usize) -> bool {
    assert!(k_max >= 1);
    for k in 0..=k_max {
        let ki = k as i64;
        let ok = match id {
            IdentityKind::CayFalling => (0..=ki).all(|x| {
                family_value(Family::Cay, k, &rint(x), &rint(x))
                    == falling_factorial(&rint(x), k)
            }),
            IdentityKind::CayRaising => (0..=ki).all(|x| {
                family_value(Family::Cay, k, &rint(x), &rint(-x))
                    == rising_factorial(&rint(x), k)
            }),
            IdentityKind::CayFactorial => {
                family_value(Family::Cay, k, &rint(1), &rint(-1)) == factorial(k)
            }
            IdentityKind::KrawFromCay => (0..=ki).all(|x| {
                (0..=ki).all(|y| {
                    &kraw_value(k, &rint(x), &rint(y)) * &factorial(k)
                        == family_value(Family::Cay, k, &rint(y - 2 * x), &rint(y))
                })
            }),
            IdentityKind::CayBinomialForm => (-ki..=ki).all(|x| {
                (-ki..=ki).all(|y| {
                    let xr = rint(x);
                    let yr = rint(y);
                    let mut acc = Rat::zero();
                    for j in 0..=k {
                        let half_sum = (&xr + &yr) / rint(2);
                        let half_diff = (&xr - &yr) / rint(2);
                        acc += gen_binomial(&rint(ki), j as i64)
                            * falling_factorial(&half_sum, j)
                            * rising_factorial(&half_diff, k - j);
                    }
                    acc == family_value(Family::Cay, k, &xr, &yr)
                })
            }),
            IdentityKind::CayRecurrence => {
                if k == 0 {
                    true
                } else {
                    (-(ki + 1)..=ki + 1).all(|x| {
                        (-(ki + 1)..=ki + 1).all(|n| {
                            let xr = rint(x);
                            let nr = rint(n);
                            let h = |j: usize| {
                                family_value(Family::Cay, j, &xr, &nr) / factorial(j)
                            };
                            let kp1 = rint(ki + 1);
                            h(k + 1)
                                == &xr / &kp1 * h(k)
                                    + (rint(ki) - &nr - Rat::one()) / &kp1 * h(k - 1)
                        })
                    })
                }
            }
        };
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn continuant_base_cases() {
        let empty: [Rat; 0] = [];
        assert_eq!(continuant(&empty, &empty, &empty).unwrap(), Rat::one());
        // 2x2: a1 a2 - b1 c1
        let d = [rint(2), rint(5)];
        let s = [rint(3)];
        let c = [rint(4)];
        assert_eq!(continuant(&c, &d, &s).unwrap(), rint(10 - 12));
        assert!(continuant(&c, &d, &[]).is_err());
    }

    #[test]
    fn family_poly_examples() {
        // P_1(x; 4) = 4x
        assert_eq!(
            family_poly(Family::P, 1, &rint(4)),
            Poly::from_coeffs(vec![Rat::zero(), rint(4)])
        );
        // P_2(x; 4) = 24 identically
        assert_eq!(family_poly(Family::P, 2, &rint(4)), Poly::constant(rint(24)));
        // Cay_2(x; y) = x^2 - y at y = 2
        assert_eq!(
            family_poly(Family::Cay, 2, &rint(2)),
            Poly::from_coeffs(vec![rint(-2), Rat::zero(), Rat::one()])
        );
        // Kraw_1(x; y) = y - 2x
        assert_eq!(
            family_poly(Family::Kraw, 1, &rint(7)),
            Poly::from_coeffs(vec![rint(7), rint(-2)])
        );
        // Sylv(x; 2) = x^3 - 4x
        assert_eq!(
            family_poly(Family::Sylv, 2, &rint(2)),
            Poly::from_coeffs(vec![rint(0), rint(-4), rint(0), rint(1)])
        );
    }

    #[test]
    fn zero_set_examples() {
        // P_3(x; 4) is identically zero
        let zs = zero_set(Family::P, 3, &rint(4));
        assert_eq!(zs.kind, ZeroSetKind::AllOfC);
        // Q_2(x; 4): zeros at ±3
        let zs = zero_set(Family::Q, 2, &rint(4));
        assert_eq!(zs.distinct_roots(), vec![rint(-3), rint(3)]);
        // Cay_3(x; 2): zeros at 0, ±2
        let zs = zero_set(Family::Cay, 3, &rint(2));
        assert_eq!(zs.distinct_roots(), vec![rint(-2), rint(0), rint(2)]);
    }

    #[test]
    fn palindromic_examples() {
        let p6 = check_palindromic(PalindromeConfig::for_family(Family::P), 6, 3);
        assert_eq!(p6.status, PalinStatus::Pass);
        assert_eq!(p6.checked_s.len(), 4); // s = ±1, ±5

        let cay2 = check_palindromic(PalindromeConfig::for_family(Family::Cay), 2, 3);
        assert_eq!(cay2.status, PalinStatus::Pass);
        // spot value: Cay_2(0;2) = -2 with theta(0) = -1
        assert_eq!(family_value(Family::Cay, 2, &rint(0), &rint(2)), rint(-2));

        let kraw3 = check_palindromic(PalindromeConfig::for_family(Family::Kraw), 3, 3);
        assert_eq!(kraw3.status, PalinStatus::Pass);
        assert_eq!(kraw3.checked_s.len(), 4); // s = 0..3

        let odd = check_palindromic(PalindromeConfig::for_family(Family::P), 5, 2);
        assert_eq!(odd.status, PalinStatus::NotApplicable);
    }

    #[test]
    fn negative_palindromic_for_odd_n() {
        assert!(palindromic_fails_for_odd(Family::P, 3));
        assert!(palindromic_fails_for_odd(Family::Q, 3));
    }

    #[test]
    fn factorization_examples() {
        let q4 = verify_factorization(FactorTarget::QEven, 4).unwrap();
        assert!(q4.equal && q4.constant_closed_form_ok);
        // both sides -4(x^2 - 9)
        assert_eq!(
            q4.lhs,
            Poly::from_coeffs(vec![rint(36), rint(0), rint(-4)])
        );

        let sylv2 = verify_factorization(FactorTarget::Sylv, 2).unwrap();
        assert!(sylv2.equal);

        let ps3 = verify_factorization(FactorTarget::PSylvProduct, 3).unwrap();
        assert!(ps3.equal);

        assert!(verify_factorization(FactorTarget::POdd, 4).is_err());
    }

    #[test]
    fn identity_examples() {
        assert!(verify_identity(IdentityKind::CayFactorial, 6));
        assert!(verify_identity(IdentityKind::KrawFromCay, 5));
        assert!(verify_identity(IdentityKind::CayFalling, 5));
        // Cay_3(4; 4) = 4 * 3 * 2
        assert_eq!(family_value(Family::Cay, 3, &rint(4), &rint(4)), rint(24));
    }

    #[test]
    fn parity_of_p_and_q() {
        for k in 0..=6 {
            for (x, y) in [(rat(3, 2), rint(5)), (rat(-7, 3), rat(9, 4))] {
                let sign = neg_one_pow(k as i64);
                assert_eq!(
                    family_value(Family::P, k, &-x.clone(), &y),
                    &sign * &family_value(Family::P, k, &x, &y)
                );
                assert_eq!(
                    family_value(Family::Q, k, &-x.clone(), &y),
                    &sign * &family_value(Family::Q, k, &x, &y)
                );
            }
        }
    }
}
