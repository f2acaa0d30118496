//! Exact scalar arithmetic over Q and Q(i).
//!
//! [`Rat`] is an arbitrary-precision rational (always stored reduced, with a
//! positive denominator). [`GaussRat`] is an element of Q(i). Both implement
//! the [`Scalar`] trait, which is what the polynomial and linear-algebra
//! layers are generic over.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number; reduced, denominator > 0 by construction.
pub type Rat = num_rational::BigRational;

/// Shorthand for a rational from an integer pair.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `k!` as a rational.
pub fn factorial(k: usize) -> Rat {
    let mut acc = BigInt::one();
    for j in 2..=k {
        acc *= BigInt::from(j);
    }
    Rat::from_integer(acc)
}

/// Rising factorial `base (base+1) ... (base+count-1)`; empty product is 1.
///
/// Evaluated as a finite product, so nonpositive bases are fine.
pub fn rising_factorial(base: &Rat, count: usize) -> Rat {
    let mut acc = Rat::one();
    let mut term = base.clone();
    for _ in 0..count {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// Falling factorial `base (base-1) ... (base-count+1)`; empty product is 1.
pub fn falling_factorial(base: &Rat, count: usize) -> Rat {
    let mut acc = Rat::one();
    let mut term = base.clone();
    for _ in 0..count {
        acc *= &term;
        term -= Rat::one();
    }
    acc
}

/// Generalized binomial coefficient `C(top, m)`.
///
/// `top (top-1) ... (top-m+1) / m!` for `m >= 1`, `1` for `m = 0`, and `0`
/// for negative `m`.
pub fn gen_binomial(top: &Rat, m: i64) -> Rat {
    if m < 0 {
        return Rat::zero();
    }
    let m = m as usize;
    falling_factorial(top, m) / factorial(m)
}

/// Errors from parsing exact scalars out of strings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part in rational literal")]
    BadInteger,
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

/// Parse a rational from `"p"` or `"p/q"` (decimal-free, base 10).
///
/// Never panics: a zero denominator or malformed digits come back as errors.
pub fn parse_rat(input: &str) -> Result<Rat, ParseRatError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ParseRatError::Empty);
    }
    let (numer_str, denom_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = BigInt::from_str(numer_str).map_err(|_| ParseRatError::BadInteger)?;
    let denom = match denom_str {
        Some(d) => BigInt::from_str(d).map_err(|_| ParseRatError::BadInteger)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ParseRatError::ZeroDenominator);
    }
    Ok(Rat::new(numer, denom))
}

/// If `r` is an integer, return it as `i64` (when it fits).
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        let n = r.numer();
        i64::try_from(n.clone()).ok()
    } else {
        None
    }
}

/// Field operations shared by `Rat` and `GaussRat`.
///
/// The extra methods beyond the arithmetic bounds are what exact elimination
/// needs: an embedding of Q, a pivot-size heuristic, and denominator
/// clearing so the fraction-free elimination runs on integral entries.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    /// Embed a rational into the field.
    fn from_rat(r: Rat) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Rough bit size; used only as a pivoting heuristic.
    fn bit_size(&self) -> u64;

    /// Scale a row by a nonzero rational so every entry becomes integral.
    fn clear_row_denominators(row: &mut [Self]);
}

fn rat_bit_size(r: &Rat) -> u64 {
    r.numer().magnitude().bits() + r.denom().magnitude().bits()
}

fn denominator_lcm<'a>(denoms: impl Iterator<Item = &'a BigInt>) -> BigInt {
    let mut acc = BigInt::one();
    for d in denoms {
        acc = acc.lcm(d);
    }
    acc
}

impl Scalar for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }

    fn inv(&self) -> Self {
        Rat::one() / self
    }

    fn bit_size(&self) -> u64 {
        rat_bit_size(self)
    }

    fn clear_row_denominators(row: &mut [Self]) {
        let lcm = denominator_lcm(row.iter().map(|r| r.denom()));
        if !lcm.is_one() {
            let f = Rat::from_integer(lcm);
            for x in row.iter_mut() {
                *x *= &f;
            }
        }
    }
}

/// Element of Q(i): `re + im * i` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_parts(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        GaussRat::new(rat(re_n, re_d), rat(im_n, im_d))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(rint(n), Rat::zero())
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The real part, if the imaginary part vanishes.
    pub fn as_rat(&self) -> Option<Rat> {
        self.is_real().then(|| self.re.clone())
    }

    pub fn scale(&self, f: &Rat) -> Self {
        GaussRat::new(&self.re * f, &self.im * f)
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::new(r, Rat::zero())
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        GaussRat::new(re, im)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, o: GaussRat) -> GaussRat {
        let n = o.norm_sqr();
        assert!(!n.is_zero(), "division by zero in Q(i)");
        let c = o.conj();
        let p = self * c;
        GaussRat::new(p.re / &n, p.im / &n)
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::new(Rat::one(), Rat::zero())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Scalar for GaussRat {
    fn from_rat(r: Rat) -> Self {
        GaussRat::from(r)
    }

    fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero in Q(i)");
        GaussRat::new(&self.re / &n, -(&self.im / &n))
    }

    fn bit_size(&self) -> u64 {
        rat_bit_size(&self.re) + rat_bit_size(&self.im)
    }

    fn clear_row_denominators(row: &mut [Self]) {
        let lcm = denominator_lcm(
            row.iter()
                .flat_map(|g| [g.re.denom(), g.im.denom()].into_iter()),
        );
        if !lcm.is_one() {
            let f = Rat::from_integer(lcm);
            for x in row.iter_mut() {
                *x = x.scale(&f);
            }
        }
    }
}

/// `(-1)^k` as a rational.
pub fn neg_one_pow(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Integer magnitude of a `BigUint` in bits (helper for root extraction).
pub fn biguint_bits(u: &BigUint) -> u64 {
    u.bits()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rising_factorial_values() {
        assert_eq!(rising_factorial(&rint(1), 3), rint(6));
        assert_eq!(rising_factorial(&rat(-1, 2), 2), rat(-1, 4));
        assert_eq!(rising_factorial(&rint(3), 0), rint(1));
    }

    #[test]
    fn gen_binomial_values() {
        assert_eq!(gen_binomial(&rint(5), 2), rint(10));
        assert_eq!(gen_binomial(&rint(-1), 2), rint(1));
        assert_eq!(gen_binomial(&rint(3), -1), rint(0));
        assert_eq!(gen_binomial(&rint(3), 0), rint(1));
    }

    #[test]
    fn parse_rat_accepts_p_over_q() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-12").unwrap(), rint(-12));
        assert_eq!(parse_rat(" 4/-6 ").unwrap(), rat(-2, 3));
        assert_eq!(parse_rat("7/0"), Err(ParseRatError::ZeroDenominator));
        assert_eq!(parse_rat(""), Err(ParseRatError::Empty));
        assert_eq!(parse_rat("1.5"), Err(ParseRatError::BadInteger));
    }

    #[test]
    fn parse_rat_round_trips_display() {
        for s in ["3/4", "-3/4", "0", "17", "-22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn gauss_arithmetic() {
        let i = GaussRat::i();
        assert_eq!(i.clone() * i.clone(), GaussRat::from_int(-1));
        let z = GaussRat::from_parts(1, 2, -3, 4);
        assert_eq!(z.clone() * z.inv(), GaussRat::one());
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_gauss() -> impl Strategy<Value = GaussRat> {
        (arb_rat(), arb_rat()).prop_map(|(re, im)| GaussRat::new(re, im))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn gauss_add_is_associative(a in arb_gauss(), b in arb_gauss(), c in arb_gauss()) {
            let lhs = (a.clone() + b.clone()) + c.clone();
            let rhs = a + (b + c);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gauss_mul_inverse(a in arb_gauss()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(a.clone() * a.inv(), GaussRat::one());
        }

        #[test]
        fn gauss_distributive(a in arb_gauss(), b in arb_gauss(), c in arb_gauss()) {
            let lhs = a.clone() * (b.clone() + c.clone());
            let rhs = a.clone() * b + a * c;
            prop_assert_eq!(lhs, rhs);
        }
    }
}
