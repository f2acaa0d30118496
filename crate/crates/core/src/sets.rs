//! The integer parameter sets attached to each residue class of `n` mod 4.
//!
//! For fixed `n`, membership of a rational `s` in one of these finite sets
//! governs polynomiality of series solutions, kernel dimensions, and the
//! decomposition of kernels under the order-8 group. All sets contain only
//! integers, so non-integer rationals are never members.

use crate::scalar::{rat_to_i64, Rat};

fn as_int(s: &Rat) -> Option<i64> {
    rat_to_i64(s)
}

/// `{3 + 4j : 0 <= j <= n/4 - 1}`, for `n ≡ 0 (mod 4)`.
pub fn in_i0_plus(s: &Rat, n: usize) -> bool {
    debug_assert_eq!(n % 4, 0);
    let Some(v) = as_int(s) else { return false };
    v.rem_euclid(4) == 3 && v >= 3 && v as usize + 1 <= n
}

/// `{-(3 + 4j) : 0 <= j <= n/4 - 1}`, for `n ≡ 0 (mod 4)`.
pub fn in_i0_minus(s: &Rat, n: usize) -> bool {
    in_i0_plus(&-s.clone(), n)
}

/// `{1 + 4j : 0 <= j <= n/4 - 1}`, for `n ≡ 0 (mod 4)`.
pub fn in_j0(s: &Rat, n: usize) -> bool {
    debug_assert_eq!(n % 4, 0);
    let Some(v) = as_int(s) else { return false };
    v.rem_euclid(4) == 1 && v >= 1 && v as usize + 3 <= n
}

/// `{±4j : 0 <= j <= floor(n/4)}`, for `n ≡ 1 (mod 4)`.
pub fn in_i1(s: &Rat, n: usize) -> bool {
    debug_assert_eq!(n % 4, 1);
    let Some(v) = as_int(s) else { return false };
    v.rem_euclid(4) == 0 && v.unsigned_abs() as usize <= 4 * (n / 4)
}

/// `{1 + 4j : 0 <= j <= floor(n/4)}`, for `n ≡ 2 (mod 4)`.
pub fn in_i2_plus(s: &Rat, n: usize) -> bool {
    debug_assert_eq!(n % 4, 2);
    let Some(v) = as_int(s) else { return false };
    v.rem_euclid(4) == 1 && v >= 1 && (v as usize) <= 1 + 4 * (n / 4)
}

/// `{-(1 + 4j) : 0 <= j <= floor(n/4)}`, for `n ≡ 2 (mod 4)`.
pub fn in_i2_minus(s: &Rat, n: usize) -> bool {
    in_i2_plus(&-s.clone(), n)
}

/// `{3 + 4j : 0 <= j <= floor(n/4) - 1}`, for `n ≡ 2 (mod 4)`.
pub fn in_j2(s: &Rat, n: usize) -> bool {
    debug_assert_eq!(n % 4, 2);
    let Some(v) = as_int(s) else { return false };
    if n / 4 == 0 {
        return false;
    }
    v.rem_euclid(4) == 3 && v >= 3 && (v as usize) <= 3 + 4 * (n / 4 - 1)
}

/// `{±(2 + 4j) : 0 <= j <= floor(n/4)}`, for `n ≡ 3 (mod 4)`.
pub fn in_i3(s: &Rat, n: usize) -> bool {
    debug_assert_eq!(n % 4, 3);
    let Some(v) = as_int(s) else { return false };
    v.rem_euclid(4) == 2 && v != 0 && v.unsigned_abs() as usize <= 2 + 4 * (n / 4)
}

/// Every member of the sets above for this `n`, ascending and deduplicated.
/// Useful for building verification grids.
pub fn all_special_values(n: usize) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::new();
    let in_any = |v: i64| {
        let s = Rat::from_integer(v.into());
        match n % 4 {
            0 => in_i0_plus(&s, n) || in_i0_minus(&s, n) || in_j0(&s, n),
            1 => in_i1(&s, n),
            2 => in_i2_plus(&s, n) || in_i2_minus(&s, n) || in_j2(&s, n),
            _ => in_i3(&s, n),
        }
    };
    let top = n as i64 + 1;
    for v in -top..=top {
        if in_any(v) {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rint;

    #[test]
    fn small_sets() {
        // n = 4: I0+ = {3}, I0- = {-3}, J0 = {1}
        assert!(in_i0_plus(&rint(3), 4));
        assert!(!in_i0_plus(&rint(7), 4));
        assert!(in_i0_minus(&rint(-3), 4));
        assert!(in_j0(&rint(1), 4));
        assert!(!in_j0(&rint(5), 4));

        // n = 1: I1 = {0}; n = 5: I1 = {0, ±4}
        assert!(in_i1(&rint(0), 1));
        assert!(!in_i1(&rint(4), 1));
        assert!(in_i1(&rint(-4), 5));

        // n = 2: I2± = {±1}, J2 empty; n = 6: J2 = {3}
        assert!(in_i2_plus(&rint(1), 2));
        assert!(in_i2_minus(&rint(-1), 2));
        assert!(!in_j2(&rint(3), 2));
        assert!(in_j2(&rint(3), 6));

        // n = 3: I3 = {±2}; n = 7: I3 = {±2, ±6}
        assert!(in_i3(&rint(2), 3));
        assert!(in_i3(&rint(-6), 7));
        assert!(!in_i3(&rint(0), 7));
    }

    #[test]
    fn non_integers_are_never_members() {
        let s = crate::scalar::rat(1, 3);
        assert!(!in_j0(&s, 4));
        assert!(!in_i2_plus(&s, 2));
    }

    #[test]
    fn special_value_grids() {
        assert_eq!(all_special_values(4), vec![-3, 1, 3]);
        assert_eq!(all_special_values(7), vec![-6, -2, 2, 6]);
    }
}
