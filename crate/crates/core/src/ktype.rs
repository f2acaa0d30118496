//! Parameter-set membership and degree-progression lists for the
//! decomposition indexed by the five irreducibles, cross-checked against
//! the exact kernels.
//!
//! For the two-dimensional irreducible the literal membership lattice
//! `{s even, n odd, n > |s|}` over-counts: the kernel vanishes unless
//! additionally `s ≡ n - 1 (mod 4)`. The corrected predicate is what this
//! module returns, with a flag raised wherever the two disagree, so the
//! discrepancy stays auditable.

use serde::Serialize;

use crate::rep::{MChar, Model};
use crate::scalar::{rat_to_i64, Rat};
use crate::sets;
use crate::solver::{hom_dim, Irr, SolverError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SetTag {
    I0Plus,
    I0Minus,
    J0,
    I1,
    I2Plus,
    I2Minus,
    J2,
    I3,
    /// Not in any listed set, but the residue class admits generic
    /// parameters (even `n`).
    Generic,
    /// Odd `n` outside the listed sets: the kernel is zero.
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamClass {
    pub n_mod4: usize,
    pub set_tag: SetTag,
}

/// The unique set containing `s` for this `n` (the sets within one residue
/// class are pairwise disjoint).
pub fn param_class(s: &Rat, n: usize) -> ParamClass {
    let tag = match n % 4 {
        0 => {
            if sets::in_i0_plus(s, n) {
                SetTag::I0Plus
            } else if sets::in_i0_minus(s, n) {
                SetTag::I0Minus
            } else if sets::in_j0(s, n) {
                SetTag::J0
            } else {
                SetTag::Generic
            }
        }
        1 => {
            if sets::in_i1(s, n) {
                SetTag::I1
            } else {
                SetTag::Empty
            }
        }
        2 => {
            if sets::in_i2_plus(s, n) {
                SetTag::I2Plus
            } else if sets::in_i2_minus(s, n) {
                SetTag::I2Minus
            } else if sets::in_j2(s, n) {
                SetTag::J2
            } else {
                SetTag::Generic
            }
        }
        _ => {
            if sets::in_i3(s, n) {
                SetTag::I3
            } else {
                SetTag::Empty
            }
        }
    };
    ParamClass {
        n_mod4: n % 4,
        set_tag: tag,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SigmaMembership {
    /// Membership per the corrected predicate.
    pub member: bool,
    /// True where the literal and corrected predicates disagree (only
    /// possible for the two-dimensional irreducible).
    pub discrepancy: bool,
}

/// Does the degree-`n` module contribute to the decomposition attached to
/// `sigma` at this `s`?
pub fn sigma_member(sigma: &Irr, s: &Rat, n: usize) -> SigmaMembership {
    let v = rat_to_i64(s);
    let member = |m: bool| SigmaMembership {
        member: m,
        discrepancy: false,
    };
    match sigma {
        Irr::Char(MChar::PP) => member(n % 4 == 0),
        Irr::Char(MChar::MM) => member(n % 4 == 2),
        Irr::Char(MChar::PM) => {
            let Some(v) = v else { return member(false) };
            let plus = v >= 3 && v.rem_euclid(4) == 3 && n % 4 == 0 && (n as i64) > v;
            let minus = v <= -1 && (-v).rem_euclid(4) == 1 && n % 4 == 2 && (n as i64) > -v;
            member(plus || minus)
        }
        Irr::Char(MChar::MP) => {
            let Some(v) = v else { return member(false) };
            let plus = v >= 1 && v.rem_euclid(4) == 1 && n % 4 == 2 && (n as i64) > v;
            let minus = v <= -3 && (-v).rem_euclid(4) == 3 && n % 4 == 0 && (n as i64) > -v;
            member(plus || minus)
        }
        Irr::H => {
            let Some(v) = v else { return member(false) };
            let literal = v.rem_euclid(2) == 0 && n % 2 == 1 && (n as i64) > v.abs();
            let corrected = literal && v.rem_euclid(4) == (n as i64 - 1).rem_euclid(4);
            SigmaMembership {
                member: corrected,
                discrepancy: literal != corrected,
            }
        }
    }
}

/// The ascending degree list for `sigma` at `s`, intersected with
/// `[0, n_max]`; empty when `s` is off the admissible lattice.
pub fn ktype_degrees(sigma: &Irr, s: &Rat, n_max: usize) -> Vec<usize> {
    let start: Option<usize> = match sigma {
        Irr::Char(MChar::PP) => Some(0),
        Irr::Char(MChar::MM) => Some(2),
        Irr::Char(MChar::PM) => rat_to_i64(s)
            .filter(|v| v.rem_euclid(4) == 3)
            .map(|v| v.unsigned_abs() as usize + 1),
        Irr::Char(MChar::MP) => rat_to_i64(s)
            .filter(|v| v.rem_euclid(4) == 1)
            .map(|v| v.unsigned_abs() as usize + 1),
        Irr::H => rat_to_i64(s)
            .filter(|v| v.rem_euclid(2) == 0)
            .map(|v| v.unsigned_abs() as usize + 1),
    };
    match start {
        Some(d0) => (d0..=n_max).step_by(4).collect(),
        None => Vec::new(),
    }
}

/// Degree label and its half-integer spin label `n/2`.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeLabel {
    pub n: usize,
    pub spin: String,
}

pub fn degree_labels(degrees: &[usize]) -> Vec<DegreeLabel> {
    degrees
        .iter()
        .map(|&n| DegreeLabel {
            n,
            spin: if n % 2 == 0 {
                (n / 2).to_string()
            } else {
                format!("{n}/2")
            },
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct KtypeCrosscheck {
    pub sigma: String,
    pub s: String,
    pub n_max: usize,
    pub degrees: Vec<usize>,
    /// Degrees where the list and the kernel multiplicities disagree.
    pub mismatches: Vec<usize>,
    /// Degrees where the literal membership lattice disagrees with the
    /// corrected one.
    pub literal_discrepancies: Vec<usize>,
    /// Both model kernels gave the same multiplicity everywhere.
    pub models_agree: bool,
    pub agree: bool,
}

/// Compare the degree list against the kernel multiplicity `hom_dim` for
/// every `n <= n_max`, in both models.
pub fn ktype_crosscheck(
    sigma: &Irr,
    s: &Rat,
    n_max: usize,
) -> Result<KtypeCrosscheck, SolverError> {
    let degrees = ktype_degrees(sigma, s, n_max);
    let mut mismatches = Vec::new();
    let mut literal_discrepancies = Vec::new();
    let mut models_agree = true;
    for n in 0..=n_max {
        let listed = degrees.contains(&n);
        let h2 = hom_dim(Model::II, s, n, sigma)?;
        let h1 = hom_dim(Model::I, s, n, sigma)?;
        if h1 != h2 {
            models_agree = false;
        }
        if listed != (h2 == 1) {
            mismatches.push(n);
        }
        let membership = sigma_member(sigma, s, n);
        if membership.discrepancy {
            literal_discrepancies.push(n);
        }
        // Membership and the degree list must tell the same story.
        if membership.member != listed {
            mismatches.push(n);
        }
    }
    mismatches.sort_unstable();
    mismatches.dedup();
    let agree = mismatches.is_empty() && models_agree;
    Ok(KtypeCrosscheck {
        sigma: sigma.token().to_string(),
        s: s.to_string(),
        n_max,
        degrees,
        mismatches,
        literal_discrepancies,
        models_agree,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    #[test]
    fn param_class_examples() {
        assert_eq!(param_class(&rint(3), 4).set_tag, SetTag::I0Plus);
        assert_eq!(param_class(&rint(1), 4).set_tag, SetTag::J0);
        assert_eq!(param_class(&rint(0), 7).set_tag, SetTag::Empty);
        assert_eq!(param_class(&rat(1, 3), 6).set_tag, SetTag::Generic);
    }

    #[test]
    fn sigma_member_examples() {
        let m = sigma_member(&Irr::Char(MChar::PM), &rint(3), 8);
        assert!(m.member && !m.discrepancy);

        let m = sigma_member(&Irr::H, &rint(0), 3);
        assert!(!m.member && m.discrepancy);

        let m = sigma_member(&Irr::H, &rint(0), 5);
        assert!(m.member && !m.discrepancy);
    }

    #[test]
    fn degree_list_examples() {
        assert_eq!(
            ktype_degrees(&Irr::Char(MChar::PP), &rat(1, 3), 12),
            vec![0, 4, 8, 12]
        );
        assert_eq!(ktype_degrees(&Irr::H, &rint(0), 13), vec![1, 5, 9, 13]);
        assert_eq!(
            ktype_degrees(&Irr::Char(MChar::PM), &rint(-1), 14),
            vec![2, 6, 10, 14]
        );
        assert_eq!(
            ktype_degrees(&Irr::Char(MChar::MP), &rint(1), 14),
            vec![2, 6, 10, 14]
        );
    }

    #[test]
    fn crosscheck_examples() {
        let r = ktype_crosscheck(&Irr::Char(MChar::PP), &rint(2), 16).unwrap();
        assert!(r.agree, "mismatches: {:?}", r.mismatches);

        let r = ktype_crosscheck(&Irr::H, &rint(2), 15).unwrap();
        assert!(r.agree);
        assert_eq!(r.degrees, vec![3, 7, 11, 15]);

        let r = ktype_crosscheck(&Irr::Char(MChar::MP), &rint(1), 14).unwrap();
        assert!(r.agree);
        assert_eq!(r.degrees, vec![2, 6, 10, 14]);

        // the literal lattice over-counts at (0, 3)
        let r = ktype_crosscheck(&Irr::H, &rint(0), 7).unwrap();
        assert!(r.agree);
        assert_eq!(r.literal_discrepancies, vec![3, 7]);
    }
}
