//! Power-series local solutions and hypergeometric polynomials.
//!
//! All series live in the variable `z = t^2`; converting to polynomials in
//! `t` doubles exponents (plus one for the odd solution `v` and for the
//! prefactor of `b`). Coefficients are exact rationals throughout.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::scalar::{factorial, rat, rat_to_i64, rint, rising_factorial, Rat};
use crate::sets;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series recurrence degenerates: gamma hits a nonpositive integer in range")]
    DegenerateGamma,
    #[error("the requested series does not terminate as a polynomial of admissible degree")]
    NotPolynomial,
    #[error("lower parameter of the hypergeometric term ratio vanishes before truncation")]
    UndefinedC,
}

/// Parameters `(a, q; alpha, beta, gamma, delta)` of the second-order
/// operator with regular singularities at `0, 1, a, infinity`; `epsilon` is
/// determined by `gamma + delta + epsilon = alpha + beta + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeunParams {
    pub a: Rat,
    pub q: Rat,
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub delta: Rat,
    pub epsilon: Rat,
}

impl HeunParams {
    pub fn new(a: Rat, q: Rat, alpha: Rat, beta: Rat, gamma: Rat, delta: Rat) -> Self {
        assert!(!a.is_zero() && !a.is_one(), "singular point a must avoid 0 and 1");
        let epsilon = &alpha + &beta + Rat::one() - &gamma - &delta;
        HeunParams {
            a,
            q,
            alpha,
            beta,
            gamma,
            delta,
            epsilon,
        }
    }
}

/// Coefficients `c_0 .. c_{count-1}` of the local series solution at 0,
/// normalized to `c_0 = 1`.
///
/// Forward recurrence: `c_1 = q / (a gamma)` and then
/// `P_k c_{k-1} - (Q_k + q) c_k + R_k c_{k+1} = 0` with
/// `P_k = (k-1+alpha)(k-1+beta)`,
/// `Q_k = k[(k-1+gamma)(1+a) + a delta + epsilon]`,
/// `R_k = (k+1)(k+gamma) a`.
pub fn heun_coefficients(p: &HeunParams, count: usize) -> Result<Vec<Rat>, SeriesError> {
    let mut coeffs = Vec::with_capacity(count);
    if count == 0 {
        return Ok(coeffs);
    }
    coeffs.push(Rat::one());
    let mut prev = Rat::zero(); // c_{-1}
    for k in 0..count - 1 {
        let kr = rint(k as i64);
        let r_k = (&kr + Rat::one()) * (&kr + &p.gamma) * &p.a;
        if r_k.is_zero() {
            return Err(SeriesError::DegenerateGamma);
        }
        let p_k = (&kr - Rat::one() + &p.alpha) * (&kr - Rat::one() + &p.beta);
        let q_k = &kr
            * ((&kr - Rat::one() + &p.gamma) * (Rat::one() + &p.a)
                + &p.a * &p.delta
                + &p.epsilon);
        let cur = coeffs[k].clone();
        let next = ((q_k + &p.q) * &cur - p_k * &prev) / r_k;
        prev = cur;
        coeffs.push(next);
    }
    Ok(coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UvKind {
    U,
    V,
}

/// The specific local parameters realized by the two solutions `u` and `v`.
pub fn uv_heun_params(kind: UvKind, s: &Rat, n: usize) -> HeunParams {
    let ni = n as i64;
    match kind {
        UvKind::U => HeunParams::new(
            rint(-1),
            -(rint(ni) * s) / rint(4),
            rat(-ni, 2),
            rat(-(ni - 1), 2),
            rat(1, 2),
            (rint(1 - ni) - s) / rint(2),
        ),
        UvKind::V => HeunParams::new(
            rint(-1),
            -(rint(ni - 2) * s) / rint(4),
            rat(-(ni - 1), 2),
            rat(-(ni - 2), 2),
            rat(3, 2),
            (rint(1 - ni) - s) / rint(2),
        ),
    }
}

/// Series coefficients of the even solution (`U_k`, multiplying `t^{2k}`)
/// or the odd solution (`V_k`, multiplying `t^{2k+1}`), by their dedicated
/// two-term-driven recurrence.
pub fn uv_coefficients(kind: UvKind, s: &Rat, n: usize, count: usize) -> Vec<Rat> {
    let ni = n as i64;
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(Rat::one());
    if count == 1 {
        return out;
    }
    let e0 = match kind {
        UvKind::U => rint(ni) * s / rint(2),
        UvKind::V => rint(ni - 2) * s / rint(6),
    };
    out.push(e0);
    for k in 1..count - 1 {
        let ki = k as i64;
        let (e_k, f_k) = match kind {
            UvKind::U => {
                let den = rint((2 * ki + 1) * (2 * ki + 2));
                (
                    rint(ni - 4 * ki) * s / &den,
                    rint((ni - 2 * ki + 1) * (ni - 2 * ki + 2)) / &den,
                )
            }
            UvKind::V => {
                let den = rint((2 * ki + 2) * (2 * ki + 3));
                (
                    rint(ni - 4 * ki - 2) * s / &den,
                    rint((ni - 2 * ki) * (ni - 2 * ki + 1)) / &den,
                )
            }
        };
        let next = e_k * &out[k] + f_k * &out[k - 1];
        out.push(next);
    }
    out
}

/// Generate `count` series coefficients of `F(a, b, c; z)` by the term
/// ratio `(a+j)(b+j) / ((c+j)(1+j))`.
///
/// Once a numerator factor hits zero the remaining coefficients are zero;
/// if `c + j` vanishes before that, the series is undefined.
fn f21_series(a: &Rat, b: &Rat, c: &Rat, count: usize) -> Result<Vec<Rat>, SeriesError> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(Rat::one());
    let mut term = Rat::one();
    for j in 0..count - 1 {
        let jr = rint(j as i64);
        let na = a + &jr;
        let nb = b + &jr;
        if na.is_zero() || nb.is_zero() {
            term = Rat::zero();
        }
        if !term.is_zero() {
            let nc = c + &jr;
            if nc.is_zero() {
                return Err(SeriesError::UndefinedC);
            }
            term = term * na * nb / (nc * (jr + Rat::one()));
        }
        out.push(term.clone());
    }
    Ok(out)
}

/// Terminating `F(a, b, c; z)` as z-coefficients. `NotPolynomial` if the
/// series has not terminated within `max_terms` coefficients.
fn f21_terminating(a: &Rat, b: &Rat, c: &Rat, max_terms: usize) -> Result<Vec<Rat>, SeriesError> {
    let coeffs = f21_series(a, b, c, max_terms + 1)?;
    if let Some(last) = coeffs.last() {
        if !last.is_zero() {
            return Err(SeriesError::NotPolynomial);
        }
    }
    Ok(coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgKind {
    A,
    B,
    CPlus,
    CMinus,
}

/// The connection constant `C(s; n)` splitting the two-dimensional kernel
/// into eigenlines, as a ratio of rising factorials evaluated as finite
/// products.
pub fn connection_constant(s: &Rat, n: usize) -> Result<Rat, SeriesError> {
    let ni = n as i64;
    if n % 4 == 2 && *s == rint(-1) {
        let m = n / 4;
        return Ok(rising_factorial(&rat(-ni, 2), m) / factorial(m));
    }
    let m_rat = (rint(ni) + s - Rat::one()) / rint(4);
    let Some(m) = rat_to_i64(&m_rat).filter(|v| *v >= 0) else {
        return Err(SeriesError::UndefinedC);
    };
    let m = m as usize;
    let denom_base = (rint(3 - ni) + s) / rint(4);
    let denom = rising_factorial(&denom_base, m);
    if denom.is_zero() {
        return Err(SeriesError::UndefinedC);
    }
    let num = rising_factorial(&rat(-ni, 2), m) * rising_factorial(&-m_rat.clone(), m);
    Ok(num / (denom * factorial(m)))
}

/// The even hypergeometric solution as a polynomial in `t`.
fn a_poly(s: &Rat, n: usize) -> Result<Poly<Rat>, SeriesError> {
    let ni = n as i64;
    if n % 4 == 2 && *s == rint(-1) {
        // Numerator and lower parameter coincide here; the series is cut at
        // the degree the kernel admits, which makes the pair of solutions
        // below it a fundamental system. Confirmed by kernel membership.
        let ell = n / 4;
        let coeffs: Vec<Rat> = (0..=ell)
            .map(|j| rising_factorial(&rat(-ni, 2), j) / factorial(j))
            .collect();
        return Ok(Poly::from_coeffs(coeffs).stretch(2));
    }
    let aa = rat(-ni, 2);
    let bb = -((rint(ni) + s - Rat::one()) / rint(4));
    let cc = (rint(3 - ni) + s) / rint(4);
    let z = f21_terminating(&aa, &bb, &cc, 2 * n + 8)?;
    let p = Poly::from_coeffs(z).stretch(2);
    if p.degree().unwrap_or(0) > n {
        return Err(SeriesError::NotPolynomial);
    }
    Ok(p)
}

/// The odd-prefactor hypergeometric solution as a polynomial in `t`.
fn b_poly(s: &Rat, n: usize) -> Result<Poly<Rat>, SeriesError> {
    let ni = n as i64;
    let e_rat = (rint(1 + ni) - s) / rint(2);
    let Some(e) = rat_to_i64(&e_rat).filter(|v| *v >= 0) else {
        return Err(SeriesError::NotPolynomial);
    };
    let aa = -((rint(ni) + s - Rat::one()) / rint(4));
    let bb = -((s - Rat::one()) / rint(2));
    let cc = (rint(5 + ni) - s) / rint(4);
    let z = f21_terminating(&aa, &bb, &cc, 2 * n + 8)?;
    let p = Poly::from_coeffs(z).stretch(2).mul_xk(e as usize);
    if p.degree().unwrap_or(0) > n {
        return Err(SeriesError::NotPolynomial);
    }
    Ok(p)
}

/// One of the four hypergeometric-side kernel polynomials.
pub fn hypergeom_poly(kind: HgKind, s: &Rat, n: usize) -> Result<Poly<Rat>, SeriesError> {
    match kind {
        HgKind::A => a_poly(s, n),
        HgKind::B => b_poly(s, n),
        HgKind::CPlus | HgKind::CMinus => {
            let admissible = match n % 4 {
                0 => sets::in_i0_minus(s, n),
                2 => sets::in_i2_minus(s, n),
                _ => false,
            };
            if !admissible {
                return Err(SeriesError::NotPolynomial);
            }
            let a = a_poly(s, n)?;
            let b = b_poly(s, n)?;
            let c = connection_constant(s, n)?;
            let scaled = b.scale(&c);
            Ok(match kind {
                HgKind::CPlus => &a + &scaled,
                _ => &a - &scaled,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    U,
    V,
    A,
    B,
}

/// Classification predicate: does the series of this kind terminate inside
/// polynomials of degree at most `n`?
pub fn is_polynomial(kind: PolyKind, s: &Rat, n: usize) -> bool {
    match kind {
        PolyKind::U => match n % 4 {
            0 => true,
            1 => sets::in_i1(s, n),
            2 => sets::in_i2_plus(s, n) || sets::in_i2_minus(s, n),
            _ => sets::in_i3(s, n),
        },
        PolyKind::V => match n % 4 {
            0 => sets::in_i0_plus(s, n) || sets::in_i0_minus(s, n),
            1 => sets::in_i1(s, n),
            2 => true,
            _ => sets::in_i3(s, n),
        },
        PolyKind::A => match n % 4 {
            0 => !sets::in_j0(s, n),
            1 => sets::in_i1(s, n),
            2 => !sets::in_j2(s, n),
            _ => sets::in_i3(s, n),
        },
        PolyKind::B => {
            // Prefactor exponent integral and >= 0, plus one of the two
            // numerator truncations; total degree is then automatically <= n.
            let ni = n as i64;
            let e = (rint(1 + ni) - s) / rint(2);
            let trunc_a = (rint(ni) + s - Rat::one()) / rint(4);
            let trunc_b = (s - Rat::one()) / rint(2);
            let nonneg_int = |r: &Rat| rat_to_i64(r).is_some_and(|v| v >= 0);
            nonneg_int(&e) && (nonneg_int(&trunc_a) || nonneg_int(&trunc_b))
        }
    }
}

/// The even solution as a polynomial, when it is one.
pub fn u_polynomial(s: &Rat, n: usize) -> Option<Poly<Rat>> {
    if !is_polynomial(PolyKind::U, s, n) {
        return None;
    }
    let coeffs = uv_coefficients(UvKind::U, s, n, n / 2 + 1);
    Some(Poly::from_coeffs(coeffs).stretch(2))
}

/// The odd solution as a polynomial, when it is one.
pub fn v_polynomial(s: &Rat, n: usize) -> Option<Poly<Rat>> {
    if !is_polynomial(PolyKind::V, s, n) {
        return None;
    }
    let count = if n == 0 { 1 } else { (n - 1) / 2 + 1 };
    let coeffs = uv_coefficients(UvKind::V, s, n, count);
    Some(Poly::from_coeffs(coeffs).stretch(2).mul_xk(1))
}

/// Termwise check of the two local-series reduction identities relating the
/// four-singularity series at accessory parameter zero to plain `2F1`
/// series: degree-halving in the argument.
pub fn maier_check(n: usize, terms: usize) -> bool {
    assert!(terms >= 1);
    let ni = n as i64;
    let zero = Rat::zero();
    // Even solution at s = 0 against F(-n/4, -(n-1)/4, 3/4; t^2).
    let even = {
        let params = uv_heun_params(UvKind::U, &zero, n);
        let heun = heun_coefficients(&params, terms).expect("gamma = 1/2 never degenerates");
        let gauss = f21_series(&rat(-ni, 4), &rat(-(ni - 1), 4), &rat(3, 4), terms / 2 + 1)
            .expect("lower parameter 3/4 never vanishes");
        compare_halved(&heun, &gauss, terms)
    };
    // Odd solution at s = 0 against F(-(n-1)/4, -(n-2)/4, 5/4; t^2).
    let odd = {
        let params = uv_heun_params(UvKind::V, &zero, n);
        let heun = heun_coefficients(&params, terms).expect("gamma = 3/2 never degenerates");
        let gauss = f21_series(&rat(-(ni - 1), 4), &rat(-(ni - 2), 4), &rat(5, 4), terms / 2 + 1)
            .expect("lower parameter 5/4 never vanishes");
        compare_halved(&heun, &gauss, terms)
    };
    even && odd
}

/// `heun[r]` must equal `gauss[r/2]` for even `r` and vanish for odd `r`.
fn compare_halved(heun: &[Rat], gauss: &[Rat], terms: usize) -> bool {
    for r in 0..terms.min(heun.len()) {
        let expected = if r % 2 == 0 {
            gauss.get(r / 2).cloned().unwrap_or_else(Rat::zero)
        } else {
            Rat::zero()
        };
        if heun[r] != expected {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heun_normalization_and_first_coefficient() {
        let p = HeunParams::new(rint(-1), rat(7, 3), rat(1, 2), rint(2), rat(1, 2), rint(1));
        let c = heun_coefficients(&p, 4).unwrap();
        assert_eq!(c[0], Rat::one());
        // c_1 = q / (a gamma)
        assert_eq!(c[1], rat(7, 3) / (rint(-1) * rat(1, 2)));
    }

    #[test]
    fn heun_degenerate_gamma() {
        // gamma = 0 kills the first recurrence step
        let p = HeunParams::new(rint(-1), rint(1), rint(1), rint(1), rint(0), rint(1));
        assert_eq!(heun_coefficients(&p, 3), Err(SeriesError::DegenerateGamma));
        // gamma = -1 kills a later one, but a short prefix is still fine
        let p = HeunParams::new(rint(-1), rint(1), rint(1), rint(1), rint(-1), rint(1));
        assert_eq!(heun_coefficients(&p, 5), Err(SeriesError::DegenerateGamma));
        assert!(heun_coefficients(&p, 1).is_ok());
    }

    #[test]
    fn heun_u_params_at_1_4() {
        let p = uv_heun_params(UvKind::U, &rint(1), 4);
        let c = heun_coefficients(&p, 5).unwrap();
        assert_eq!(c, vec![rint(1), rint(2), rint(1), rint(0), rint(0)]);
    }

    #[test]
    fn uv_first_terms() {
        for (s, n) in [(rint(3), 5usize), (rat(2, 7), 9), (rint(-2), 8)] {
            let u = uv_coefficients(UvKind::U, &s, n, 3);
            assert_eq!(u[1], rint(n as i64) * &s / rint(2));
            let ni = n as i64;
            let expected_u2 = (rint(ni * (ni - 4)) * &s * &s + rint(2 * ni * (ni - 1)))
                / rint(24);
            assert_eq!(u[2], expected_u2);
        }
        // v at n = 2 is t for every s
        let v = uv_coefficients(UvKind::V, &rat(13, 5), 2, 8);
        assert_eq!(v[0], Rat::one());
        assert!(v[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn hypergeom_examples() {
        let a = hypergeom_poly(HgKind::A, &rint(2), 4).unwrap();
        assert_eq!(
            a,
            Poly::from_coeffs(vec![rint(1), rint(0), rint(10), rint(0), rint(1)])
        );
        let b = hypergeom_poly(HgKind::B, &rint(1), 4).unwrap();
        assert_eq!(b, Poly::monomial(Rat::one(), 2));
        assert_eq!(
            hypergeom_poly(HgKind::A, &rint(1), 4),
            Err(SeriesError::UndefinedC)
        );
    }

    #[test]
    fn degenerate_even_solution() {
        // n = 6, s = -1: truncated coefficients with the shared parameter cancelled
        let a = hypergeom_poly(HgKind::A, &rint(-1), 6).unwrap();
        assert_eq!(a.degree(), Some(2));
        assert_eq!(a.coeff(0), Rat::one());
        assert_eq!(a.coeff(2), rint(-3));
        // matches the connection constant as its top coefficient
        let c = connection_constant(&rint(-1), 6).unwrap();
        assert_eq!(a.coeff(2), c);
    }

    #[test]
    fn polynomiality_classification() {
        assert!(is_polynomial(PolyKind::U, &rint(7), 4));
        assert!(!is_polynomial(PolyKind::U, &rint(0), 2));
        assert!(is_polynomial(PolyKind::V, &rint(0), 2));
        assert!(is_polynomial(PolyKind::A, &rat(1, 3), 4));
        assert!(!is_polynomial(PolyKind::A, &rint(1), 4));
        assert!(is_polynomial(PolyKind::B, &rint(1), 4));
    }

    #[test]
    fn u_polynomial_whole_square() {
        // u at (1, 4) is (1 + t^2)^2
        let u = u_polynomial(&rint(1), 4).unwrap();
        assert_eq!(
            u,
            Poly::from_coeffs(vec![rint(1), rint(0), rint(2), rint(0), rint(1)])
        );
    }

    #[test]
    fn maier_reductions() {
        assert!(maier_check(0, 5));
        assert!(maier_check(4, 10));
        assert!(maier_check(7, 10));
    }
}
