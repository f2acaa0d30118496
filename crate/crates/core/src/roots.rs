//! Rational root extraction for polynomials over Q.
//!
//! Classical candidate search: after clearing denominators to a primitive
//! integer polynomial, every rational root `r/q` in lowest terms has
//! `r | constant term` and `q | leading coefficient`. Candidate numerators
//! are enumerated from the prime factorization of the constant term and
//! pruned by the smaller of the Cauchy and Fujiwara root bounds; each
//! confirmed root is divided out with multiplicity.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::scalar::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
}

/// Rational roots with multiplicity, plus the root-free remainder factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoots {
    /// `(root, multiplicity)`, sorted ascending by root.
    pub roots: Vec<(Rat, usize)>,
    /// What is left of the (primitive) polynomial after all rational roots
    /// are divided out; its degree is the unresolved degree.
    pub remainder: Poly<Rat>,
}

impl RationalRoots {
    pub fn remainder_degree(&self) -> usize {
        self.remainder.degree().unwrap_or(0)
    }
}

/// All rational roots of `p`, each divided out with its multiplicity.
pub fn rational_roots(p: &Poly<Rat>) -> Result<RationalRoots, RootsError> {
    if p.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let mut work = primitive_integer(p);
    let mut roots: Vec<(Rat, usize)> = Vec::new();

    // Powers of x first.
    let zero_mult = work.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((Rat::zero(), zero_mult));
        work = Poly::from_coeffs(work.coeffs()[zero_mult..].to_vec());
    }

    // Candidates are enumerated once, from the stripped polynomial; every
    // root of a quotient is a root of the original, so one pass suffices.
    if work.degree().unwrap_or(0) >= 1 {
        for cand in candidates(&work) {
            let mut mult = 0;
            loop {
                if work.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (q, r) = work.div_linear(&cand);
                if r.is_zero() {
                    work = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                roots.push((cand, mult));
            }
        }
        work = primitive_integer(&work);
    }

    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RationalRoots {
        roots,
        remainder: work,
    })
}

/// Scale to integer coefficients with content 1 (sign of the leading
/// coefficient preserved).
fn primitive_integer(p: &Poly<Rat>) -> Poly<Rat> {
    if p.is_zero() {
        return Poly::zero();
    }
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    Poly::from_coeffs(
        ints.into_iter()
            .map(|c| Rat::from_integer(c / &content))
            .collect(),
    )
}

/// Upper bound on the magnitude of any root of a primitive integer
/// polynomial: the smaller of the Cauchy bound `1 + max|c_i|/|c_d|` and a
/// Fujiwara-style bound `1 + 2 max_k (|c_{d-k}|/|c_d|)^{1/k}`.
fn root_bound(coeffs: &[BigInt]) -> BigUint {
    let d = coeffs.len() - 1;
    let lead = coeffs[d].magnitude();
    let cauchy: BigUint = BigUint::one()
        + coeffs
            .iter()
            .map(|c| c.magnitude().div_ceil(lead))
            .max()
            .unwrap();
    let mut fujiwara = BigUint::one();
    for k in 1..=d {
        let mag = coeffs[d - k].magnitude();
        if mag.is_zero() {
            continue;
        }
        let ratio = mag.div_ceil(lead);
        let root = ratio.nth_root(k as u32) + BigUint::one();
        if root > fujiwara {
            fujiwara = root;
        }
    }
    fujiwara = fujiwara * BigUint::from(2u32) + BigUint::one();
    cauchy.min(fujiwara)
}

/// All candidate rational roots of a primitive integer polynomial with
/// nonzero constant term, in lowest terms, sorted by magnitude.
fn candidates(p: &Poly<Rat>) -> Vec<Rat> {
    let coeffs: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer().clone()).collect();
    let lead = coeffs.last().unwrap().magnitude().clone();
    let constant = coeffs.first().unwrap().magnitude().clone();
    debug_assert!(!constant.is_zero(), "x factors are stripped beforehand");
    let bound = root_bound(&coeffs);

    let constant_factors = trial_factor(&constant);
    let mut out = Vec::new();
    for q in &divisors(&lead, None) {
        // A root r/q in lowest terms satisfies |r| <= bound * q.
        let numer_limit = &bound * q;
        for r in divisors_from_factors(&constant_factors, Some(&numer_limit)) {
            if !r.gcd(q).is_one() {
                continue;
            }
            for sign in [1i64, -1] {
                out.push(Rat::new(
                    BigInt::from(sign) * BigInt::from(r.clone()),
                    BigInt::from(q.clone()),
                ));
            }
        }
    }
    out.sort_by(|a, b| {
        let (an, ad) = (a.numer().magnitude(), a.denom().magnitude());
        let (bn, bd) = (b.numer().magnitude(), b.denom().magnitude());
        (an * bd).cmp(&(bn * ad)).then_with(|| a.cmp(b))
    });
    out.dedup();
    out
}

/// Divisors of `n`, optionally only those `<= limit`.
///
/// Trial division runs over 2 and odd numbers up to 10^6; a surviving
/// cofactor is kept as a single atomic factor, so the enumeration is
/// complete whenever that cofactor is 1 or prime.
fn divisors(n: &BigUint, limit: Option<&BigUint>) -> Vec<BigUint> {
    divisors_from_factors(&trial_factor(n), limit)
}

fn divisors_from_factors(
    factors: &[(BigUint, usize)],
    limit: Option<&BigUint>,
) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e + 1));
        for d in &out {
            let mut v = d.clone();
            next.push(v.clone());
            for _ in 0..*e {
                v *= p;
                if limit.is_some_and(|l| &v > l) {
                    break;
                }
                next.push(v.clone());
            }
        }
        out = next;
        assert!(
            out.len() <= 1 << 20,
            "divisor enumeration exceeded its cap; coefficients too composite"
        );
    }
    out.sort();
    out.dedup();
    out
}

fn trial_factor(n: &BigUint) -> Vec<(BigUint, usize)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let push = |p: BigUint, e: usize, out: &mut Vec<(BigUint, usize)>| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let two = BigUint::from(2u32);
    let mut e = 0;
    while (&n % &two).is_zero() {
        n /= &two;
        e += 1;
    }
    push(two, e, &mut out);
    let mut d = BigUint::from(3u32);
    let bound = BigUint::from(1_000_000u64);
    while &d * &d <= n && d <= bound {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        push(d.clone(), e, &mut out);
        d += BigUint::from(2u32);
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(coeffs.iter().map(|&c| rint(c)).collect())
    }

    #[test]
    fn cubic_with_zero_root() {
        // x^3 - 4x -> {-2, 0, 2}
        let r = rational_roots(&p(&[0, -4, 0, 1])).unwrap();
        assert_eq!(
            r.roots,
            vec![(rint(-2), 1), (rint(0), 1), (rint(2), 1)]
        );
        assert_eq!(r.remainder_degree(), 0);
    }

    #[test]
    fn irreducible_quadratic() {
        let r = rational_roots(&p(&[1, 0, 1])).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.remainder_degree(), 2);
    }

    #[test]
    fn double_root() {
        // (x-1)^2
        let r = rational_roots(&p(&[1, -2, 1])).unwrap();
        assert_eq!(r.roots, vec![(rint(1), 2)]);
        assert_eq!(r.remainder_degree(), 0);
    }

    #[test]
    fn fractional_roots() {
        // (2x-1)(3x-1) = 6x^2 - 5x + 1
        let r = rational_roots(&p(&[1, -5, 6])).unwrap();
        assert_eq!(r.roots, vec![(rat(1, 3), 1), (rat(1, 2), 1)]);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(
            rational_roots(&Poly::zero()),
            Err(RootsError::ZeroPolynomial)
        );
    }

    #[test]
    fn factorial_sized_constant_terms_stay_fast() {
        // prod_{l=1}^{25} (x - l): a 25!-sized constant term must not blow
        // up the candidate enumeration
        let mut poly = Poly::one();
        for l in 1..=25i64 {
            poly = &poly * &p(&[-l, 1]);
        }
        let r = rational_roots(&poly).unwrap();
        assert_eq!(r.roots.len(), 25);
        assert!(r.roots.iter().all(|(_, m)| *m == 1));
        assert_eq!(r.remainder_degree(), 0);
    }

    #[test]
    fn reconstruction_property() {
        // lead * prod (x - root)^mult * remainder == primitive(p) up to constant
        let poly = p(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        let r = rational_roots(&poly).unwrap();
        let mut rebuilt = r.remainder.clone();
        for (root, mult) in &r.roots {
            for _ in 0..*mult {
                rebuilt = &rebuilt * &Poly::from_coeffs(vec![-root.clone(), rint(1)]);
            }
        }
        assert_eq!(rebuilt, poly);
        for (root, _) in &r.roots {
            assert!(poly.eval(root).is_zero());
        }
    }
}
