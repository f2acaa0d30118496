//! Dense univariate polynomials over an exact scalar field.
//!
//! Coefficients are stored by ascending exponent with trailing zeros trimmed,
//! so the zero polynomial is canonically the empty coefficient vector and
//! [`Poly::degree`] returns `None` for it (the "degree minus infinity"
//! sentinel).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Rat, Scalar};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation; exact.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, f: &T) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.clone() * f.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_rat(Rat::from_integer(k.into())))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Multiply by `x^k`.
    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Substitute `x -> x^r`, spreading exponents by a factor of `r`.
    pub fn stretch(&self, r: usize) -> Self {
        assert!(r >= 1);
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); (self.coeffs.len() - 1) * r + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * r] = c.clone();
        }
        Poly { coeffs }
    }

    /// Substitute `x -> f * x`.
    pub fn compose_scale(&self, f: &T) -> Self {
        let mut power = T::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c.clone() * power.clone();
                power = power.clone() * f.clone();
                out
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Divide by the monic linear factor `x - root`; returns `(quotient, remainder)`.
    pub fn div_linear(&self, root: &T) -> (Poly<T>, T) {
        if self.is_zero() {
            return (Poly::zero(), T::zero());
        }
        let mut quotient = vec![T::zero(); self.coeffs.len() - 1];
        let mut carry = T::zero();
        for k in (0..self.coeffs.len()).rev() {
            let value = self.coeffs[k].clone() + carry.clone() * root.clone();
            if k == 0 {
                return (Poly::from_coeffs(quotient), value);
            }
            quotient[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Map coefficients into another scalar field.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Exact interpolation through distinct nodes (Newton's divided differences).
    pub fn interpolate(points: &[(T, T)]) -> Poly<T> {
        let n = points.len();
        if n == 0 {
            return Poly::zero();
        }
        // Divided-difference coefficients.
        let mut dd: Vec<T> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = dd[i].clone() - dd[i - 1].clone();
                let den = points[i].0.clone() - points[i - level].0.clone();
                assert!(!den.is_zero(), "interpolation nodes must be distinct");
                dd[i] = num / den;
            }
        }
        // Horner assembly of the Newton form.
        let mut acc = Poly::constant(dd[n - 1].clone());
        for i in (0..n - 1).rev() {
            let lin = Poly::from_coeffs(vec![-points[i].0.clone(), T::one()]);
            acc = &(&acc * &lin) + &Poly::constant(dd[i].clone());
        }
        acc
    }

    /// Render with the given variable name, e.g. `1 + 10*t^2 + t^4`.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = c.to_string();
            let part = match k {
                0 => coeff,
                _ => {
                    let power = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{k}")
                    };
                    if c.is_one() {
                        power
                    } else {
                        format!("{coeff}*{power}")
                    }
                }
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + o.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - o.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: Poly<T>) -> Poly<T> {
        &self + &o
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: Poly<T>) -> Poly<T> {
        &self - &o
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: Poly<T>) -> Poly<T> {
        &self * &o
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(coeffs.iter().map(|&c| rint(c)).collect())
    }

    #[test]
    fn eval_examples() {
        // x^2 - 4 at 2
        assert_eq!(p(&[-4, 0, 1]).eval(&rint(2)), rint(0));
        // zero polynomial anywhere
        assert_eq!(Poly::<Rat>::zero().eval(&rint(7)), rint(0));
        // 4x at 3/2
        assert_eq!(p(&[0, 4]).eval(&rat(3, 2)), rint(6));
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Poly::<Rat>::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3, 0]).degree(), Some(2));
    }

    #[test]
    fn arithmetic_and_division() {
        let a = p(&[-4, 0, 1]); // x^2 - 4
        let (q, r) = a.div_linear(&rint(2));
        assert_eq!(q, p(&[2, 1]));
        assert_eq!(r, rint(0));
        let back = &q * &p(&[-2, 1]);
        assert_eq!(back, a);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let target = p(&[1, -3, 0, 2]);
        let pts: Vec<(Rat, Rat)> = (0..4).map(|k| (rint(k), target.eval(&rint(k)))).collect();
        assert_eq!(Poly::interpolate(&pts), target);
    }

    #[test]
    fn stretch_and_compose() {
        let a = p(&[1, 2, 1]); // 1 + 2z + z^2
        assert_eq!(a.stretch(2), p(&[1, 0, 2, 0, 1]));
        let b = p(&[0, 0, 1]); // x^2
        assert_eq!(b.compose_scale(&rat(1, 2)), Poly::from_coeffs(vec![rint(0), rint(0), rat(1, 4)]));
    }
}
