//! Machine-checkable verification suites.
//!
//! Each suite runs a list of named checks and returns a serializable
//! report; a check fails with a recorded counterexample rather than a
//! panic, so a report is always produced. Check ordering and all sample
//! points are deterministic, which keeps serialized reports byte-stable
//! across runs.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::ktype::{ktype_crosscheck, ktype_degrees};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::rep::{
    charpoly_eplus_eminus, dpi_matrix, operator_matrix, pi_action, stored_scale, Generator,
    GroupElt, MChar, Model,
};
use crate::scalar::{
    factorial, neg_one_pow, rat, rat_to_i64, rint, GaussRat, Rat,
};
use crate::seqdet::{
    check_palindromic, continuant, family_poly, family_value, family_value_prefix,
    palindromic_fails_for_odd, verify_factorization, verify_identity, Family, FactorTarget,
    IdentityKind, PalinStatus, PalindromeConfig,
};
use crate::series::{
    connection_constant, heun_coefficients, hypergeom_poly, is_polynomial, maier_check,
    uv_coefficients, uv_heun_params, HgKind, PolyKind, UvKind,
};
use crate::sets;
use crate::solver::{
    basis_match, expected_constituents, expected_dimension, hom_dim, m_rep_classify,
    solution_space, transfer_check, Irr,
};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub status: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    fn new(suite: &str, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        SuiteReport {
            suite: suite.to_string(),
            status: if failed == 0 { "pass" } else { "fail" }.to_string(),
            passed,
            failed,
            checks,
        }
    }

    pub fn pass(&self) -> bool {
        self.failed == 0
    }
}

/// A check that scans a grid and keeps the first few failures as detail.
struct Check {
    id: String,
    failures: Vec<String>,
    cases: usize,
}

impl Check {
    fn new(id: &str) -> Self {
        Check {
            id: id.to_string(),
            failures: Vec::new(),
            cases: 0,
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 8 {
            self.failures.push(describe());
        }
    }

    fn finish(self) -> CheckResult {
        let pass = self.failures.is_empty();
        let detail = if pass {
            format!("{} cases", self.cases)
        } else {
            format!("{} cases; counterexamples: {}", self.cases, self.failures.join("; "))
        };
        CheckResult {
            id: self.id,
            pass,
            detail,
        }
    }
}

/// Deterministic pseudo-random rationals with small numerators and
/// denominators (xorshift-style; reproducible by construction).
pub fn sample_rats(count: usize, seed: u64) -> Vec<Rat> {
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count)
        .map(|_| {
            let n = (next() % 19) as i64 - 9;
            let d = (next() % 5) as i64 + 1;
            rat(if n == 0 { 1 } else { n }, d)
        })
        .collect()
}

fn generic_rationals() -> Vec<Rat> {
    vec![rat(1, 3), rat(7, 2), rat(-9, 5), rat(12, 7), rat(-1, 6)]
}

/// Laplace cofactor expansion; the brute-force determinant oracle, kept
/// independent of the continuant recurrence it checks.
fn laplace_det(a: &Matrix<Rat>) -> Rat {
    let n = a.rows();
    if n == 0 {
        return Rat::one();
    }
    if n == 1 {
        return a[(0, 0)].clone();
    }
    let mut acc = Rat::zero();
    for j in 0..n {
        if a[(0, j)].is_zero() {
            continue;
        }
        let minor = Matrix::from_rows(
            (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| a[(i, c)].clone())
                        .collect()
                })
                .collect(),
        );
        let term = a[(0, j)].clone() * laplace_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

// ---------------------------------------------------------------------------
// determinants suite
// ---------------------------------------------------------------------------

pub fn suite_determinants(max_n: usize) -> SuiteReport {
    let mut checks = Vec::new();

    // Triple equality: characteristic polynomial, top continuant, product.
    let mut c = Check::new("sylvester_triple_equality");
    for n in 0..=max_n {
        let ni = n as i64;
        let from_charpoly = charpoly_eplus_eminus(n);
        let from_continuant = family_poly(Family::Sylv, n, &rint(ni));
        let mut product = Poly::one();
        for l in 0..=ni {
            product = &product * &Poly::from_coeffs(vec![rint(-(ni - 2 * l)), Rat::one()]);
        }
        c.case(from_charpoly == from_continuant && from_continuant == product, || {
            format!("n={n}")
        });
    }
    checks.push(c.finish());

    let even_targets = [
        ("factorization_p_even", FactorTarget::PEven),
        ("factorization_q_even", FactorTarget::QEven),
    ];
    for (id, target) in even_targets {
        let mut c = Check::new(id);
        for n in (0..=max_n).step_by(2) {
            let r = verify_factorization(target, n).expect("parity checked");
            c.case(r.equal && r.constant_closed_form_ok, || {
                format!("n={n}: lhs={} rhs={}", r.lhs, r.rhs)
            });
        }
        checks.push(c.finish());
    }
    let odd_targets = [
        ("factorization_p_odd", FactorTarget::POdd),
        ("factorization_p_through_sylvester", FactorTarget::PSylvProduct),
    ];
    for (id, target) in odd_targets {
        let mut c = Check::new(id);
        for n in (1..=max_n).step_by(2) {
            let r = verify_factorization(target, n).expect("parity checked");
            c.case(r.equal && r.constant_closed_form_ok, || {
                format!("n={n}: lhs={} rhs={}", r.lhs, r.rhs)
            });
        }
        checks.push(c.finish());
    }
    let mut c = Check::new("factorization_kraw_top");
    for n in 0..=max_n {
        let r = verify_factorization(FactorTarget::KrawNp1, n).expect("no parity constraint");
        c.case(r.equal, || format!("n={n}"));
    }
    checks.push(c.finish());

    // Cross identities of the continuant families.
    for (id, kind, k_max) in [
        ("identity_cay_falling", IdentityKind::CayFalling, 12),
        ("identity_cay_raising", IdentityKind::CayRaising, 12),
        ("identity_cay_factorial", IdentityKind::CayFactorial, 20),
        ("identity_kraw_from_cay", IdentityKind::KrawFromCay, 12),
        ("identity_cay_binomial_form", IdentityKind::CayBinomialForm, 10),
        ("identity_cay_recurrence", IdentityKind::CayRecurrence, 20),
    ] {
        let mut c = Check::new(id);
        c.case(verify_identity(kind, k_max), || format!("k_max={k_max}"));
        checks.push(c.finish());
    }

    // Sign flip of the argument.
    let mut c = Check::new("parity_p_q");
    let xs = sample_rats(20, 11);
    let ys = sample_rats(20, 23);
    for k in 0..=12usize {
        for (x, y) in xs.iter().zip(ys.iter()) {
            let sign = neg_one_pow(k as i64);
            let okp = family_value(Family::P, k, &-x.clone(), y)
                == &sign * &family_value(Family::P, k, x, y);
            let okq = family_value(Family::Q, k, &-x.clone(), y)
                == &sign * &family_value(Family::Q, k, x, y);
            c.case(okp && okq, || format!("k={k} x={x} y={y}"));
        }
    }
    checks.push(c.finish());

    // Odd-n relation between the two families.
    let mut c = Check::new("odd_n_q_equals_signed_p");
    for n in (1..=max_n.max(1)).step_by(2) {
        let ni = n as i64;
        let p = family_poly(Family::P, (n + 1) / 2, &rint(ni));
        let q = family_poly(Family::Q, (n + 1) / 2, &rint(ni));
        c.case(q == p.scale(&neg_one_pow((ni + 1) / 2)), || format!("n={n}"));
    }
    checks.push(c.finish());

    // Continuant recurrence against the brute-force cofactor oracle.
    let mut c = Check::new("continuant_vs_cofactor");
    let entries = sample_rats(200, 57);
    let mut idx = 0;
    let mut take = |k: usize| -> Vec<Rat> {
        let v = entries[idx..idx + k].to_vec();
        idx += k;
        v
    };
    for size in 0..=6usize {
        let diag = take(size);
        let sub = take(size.saturating_sub(1));
        let sup = take(size.saturating_sub(1));
        let via_recurrence = continuant(&sub, &diag, &sup).unwrap();
        let mut m = Matrix::zero(size, size);
        for i in 0..size {
            m[(i, i)] = diag[i].clone();
            if i + 1 < size {
                m[(i, i + 1)] = sup[i].clone();
                m[(i + 1, i)] = sub[i].clone();
            }
        }
        c.case(via_recurrence == laplace_det(&m), || format!("size={size}"));
    }
    checks.push(c.finish());

    SuiteReport::new("determinants", checks)
}

// ---------------------------------------------------------------------------
// palindromic suite
// ---------------------------------------------------------------------------

pub fn suite_palindromic(max_n: usize) -> SuiteReport {
    let mut checks = Vec::new();

    for (id, family) in [
        ("palindromic_p", Family::P),
        ("palindromic_q", Family::Q),
    ] {
        let mut c = Check::new(id);
        for n in (0..=max_n).step_by(2) {
            let r = check_palindromic(PalindromeConfig::for_family(family), n, 3);
            // NotApplicable (degree map undefined at this n) is a skip.
            c.case(r.status != PalinStatus::Fail, || {
                format!("n={n}: {:?}", r.counterexamples.first())
            });
        }
        checks.push(c.finish());
    }
    for (id, family) in [
        ("palindromic_cay", Family::Cay),
        ("palindromic_kraw", Family::Kraw),
    ] {
        let mut c = Check::new(id);
        for n in 0..=max_n {
            let r = check_palindromic(PalindromeConfig::for_family(family), n, 3);
            c.case(r.status == PalinStatus::Pass, || {
                format!("n={n}: {:?}", r.counterexamples.first())
            });
        }
        checks.push(c.finish());
    }

    // For odd n the mirror identity must genuinely fail somewhere.
    let mut c = Check::new("palindromic_fails_for_some_odd_n");
    for family in [Family::P, Family::Q] {
        let any_fail = (1..=9usize).step_by(2).any(|n| palindromic_fails_for_odd(family, n));
        c.case(any_fail, || format!("{family:?}: no odd n <= 9 fails"));
    }
    checks.push(c.finish());

    // Refined factorial value tables, matched value by value.
    let mut c = Check::new("factorial_values_p");
    for n in (0..=max_n).step_by(2) {
        let ni = n as i64;
        if n % 4 == 0 {
            let p = family_poly(Family::P, n / 2, &rint(ni));
            c.case(p == Poly::constant(factorial(n)), || format!("n={n}: {p}"));
        } else {
            let mut s = 1;
            while s <= ni - 2 {
                let plus = family_value(Family::P, n / 2, &rint(s), &rint(ni));
                let minus = family_value(Family::P, n / 2, &rint(-s), &rint(ni));
                c.case(plus == factorial(n), || format!("n={n} s={s}"));
                c.case(minus == -factorial(n), || format!("n={n} s={}", -s));
                s += 4;
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("factorial_values_q");
    for n in (2..=max_n).step_by(2) {
        let ni = n as i64;
        if n % 4 == 0 {
            let mut s = 3;
            while s <= ni - 1 {
                let plus = family_value(Family::Q, (n - 2) / 2, &rint(s), &rint(ni));
                let minus = family_value(Family::Q, (n - 2) / 2, &rint(-s), &rint(ni));
                c.case(plus == factorial(n - 1), || format!("n={n} s={s}"));
                c.case(minus == -factorial(n - 1), || format!("n={n} s={}", -s));
                s += 4;
            }
        } else {
            let q = family_poly(Family::Q, (n - 2) / 2, &rint(ni));
            c.case(q == Poly::constant(factorial(n - 1)), || format!("n={n}: {q}"));
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("factorial_values_cay");
    for n in 0..=max_n {
        let ni = n as i64;
        // walk s over the zero set {n - 2l : 0 <= l <= n}
        let mut s = -ni;
        while s <= ni {
            let value = family_value(Family::Cay, n, &rint(s), &rint(ni));
            let theta = neg_one_pow((ni - s) / 2);
            c.case(value == &theta * &factorial(n), || format!("n={n} s={s}"));
            // the explicit sign table by residue of s mod 4
            let expected_sign = match (n % 4, s.rem_euclid(4)) {
                (0, 0) | (1, 1) | (2, 2) | (3, 3) => Rat::one(),
                (0, 2) | (1, 3) | (2, 0) | (3, 1) => -Rat::one(),
                _ => unreachable!("s and n share parity on the zero set"),
            };
            c.case(theta == expected_sign, || format!("sign table n={n} s={s}"));
            s += 2;
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("factorial_values_kraw");
    for n in 0..=max_n {
        for s in 0..=n as i64 {
            let value = family_value(Family::Kraw, n, &rint(s), &rint(n as i64));
            let expected = neg_one_pow(s);
            c.case(value == expected, || format!("n={n} s={s}"));
        }
    }
    checks.push(c.finish());

    SuiteReport::new("palindromic", checks)
}

// ---------------------------------------------------------------------------
// solver suite
// ---------------------------------------------------------------------------

fn solver_s_grid(n: usize) -> Vec<Rat> {
    let mut s_values: Vec<Rat> = sets::all_special_values(n).into_iter().map(rint).collect();
    s_values.extend(generic_rationals());
    s_values
}

pub fn suite_solver(max_n: usize) -> SuiteReport {
    let mut checks = Vec::new();
    let transfer_max = max_n.min(20);

    let mut dim_check = Check::new("dimension_classification");
    let mut model_dim_check = Check::new("model_dimensions_agree");
    let mut mrep_check = Check::new("mrep_classification");
    let mut hom_check = Check::new("hom_multiplicities_complete");
    let mut basis_check = Check::new("predicted_bases_span_kernels");
    for n in 0..=max_n {
        for s in solver_s_grid(n) {
            let mut dims = [0usize; 2];
            for (mi, model) in [Model::I, Model::II].into_iter().enumerate() {
                let space = solution_space(model, &s, n);
                dims[mi] = space.dim();
                dim_check.case(space.dim() == expected_dimension(model, &s, n), || {
                    format!(
                        "({model:?}, s={s}, n={n}): dim {} expected {}",
                        space.dim(),
                        expected_dimension(model, &s, n)
                    )
                });

                match m_rep_classify(model, &s, n) {
                    Ok(m) => {
                        let mut got = m.kinds();
                        let mut want = expected_constituents(model, &s, n);
                        got.sort_by_key(|k| k.token());
                        want.sort_by_key(|k| k.token());
                        mrep_check.case(got == want, || {
                            format!("({model:?}, s={s}, n={n}): got {got:?} want {want:?}")
                        });
                        mrep_check.case(m.total_dim() == space.dim(), || {
                            format!("({model:?}, s={s}, n={n}): constituent dims")
                        });
                    }
                    Err(e) => mrep_check.case(false, || {
                        format!("({model:?}, s={s}, n={n}): {e}")
                    }),
                }

                let mut total = 0usize;
                let mut ok = true;
                for sigma in Irr::ALL {
                    match hom_dim(model, &s, n, &sigma) {
                        Ok(h) => {
                            if h > 1 {
                                ok = false;
                            }
                            total += h * sigma.dim();
                        }
                        Err(_) => ok = false,
                    }
                }
                hom_check.case(ok && total == space.dim(), || {
                    format!("({model:?}, s={s}, n={n}): sum {total} dim {}", space.dim())
                });

                match basis_match(model, &s, n) {
                    Ok(b) => basis_check.case(b, || format!("({model:?}, s={s}, n={n})")),
                    Err(e) => basis_check.case(false, || {
                        format!("({model:?}, s={s}, n={n}): {e}")
                    }),
                }
            }
            model_dim_check.case(dims[0] == dims[1], || {
                format!("(s={s}, n={n}): dims {dims:?}")
            });
        }
    }
    checks.push(dim_check.finish());
    checks.push(model_dim_check.finish());
    checks.push(mrep_check.finish());
    checks.push(hom_check.finish());
    checks.push(basis_check.finish());

    // Two-dimensional kernels at odd n: the full trace vector of the
    // restricted action must be (±2 on ±identity, 0 elsewhere).
    let mut c = Check::new("odd_n_two_dim_trace_vector");
    for n in (1..=max_n).step_by(2) {
        for s in sets::all_special_values(n).into_iter().map(rint) {
            for model in [Model::I, Model::II] {
                let space = solution_space(model, &s, n);
                if space.dim() != 2 {
                    continue;
                }
                match crate::solver::restricted_traces(model, n, &space) {
                    Ok(traces) => {
                        let ok = traces.iter().all(|((j, negate), tr)| {
                            let expected = if *j == 0 {
                                GaussRat::from(rint(if *negate { -2 } else { 2 }))
                            } else {
                                GaussRat::zero()
                            };
                            *tr == expected
                        });
                        c.case(ok, || format!("({model:?}, s={s}, n={n}): {traces:?}"));
                    }
                    Err(e) => c.case(false, || format!("({model:?}, s={s}, n={n}): {e}")),
                }
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("cayley_transfer_rows");
    let mut scalar_matches = 0usize;
    let mut scalar_mismatches: Vec<String> = Vec::new();
    for n in (0..=transfer_max).step_by(2) {
        let mut s_values: Vec<Rat> = sets::all_special_values(n).into_iter().map(rint).collect();
        s_values.extend([rat(1, 3), rat(7, 2), rint(2)]);
        for s in s_values {
            match transfer_check(&s, n) {
                Ok(r) => {
                    c.case(r.all_proportional, || {
                        format!("(s={s}, n={n}): {:?}", r.rows)
                    });
                    for row in &r.rows {
                        if let Some(ex) = &row.exact_scalar {
                            if ex.matches {
                                scalar_matches += 1;
                            } else if scalar_mismatches.len() < 8 {
                                scalar_mismatches.push(format!(
                                    "(s={s}, n={n}): computed {} formula {}",
                                    ex.computed, ex.formula
                                ));
                            }
                        }
                    }
                }
                Err(e) => c.case(false, || format!("(s={s}, n={n}): {e}")),
            }
        }
    }
    checks.push(c.finish());
    // The exact-scalar comparison is informational: mismatches are recorded,
    // not failed.
    checks.push(CheckResult {
        id: "cayley_transfer_exact_scalar_report".to_string(),
        pass: true,
        detail: if scalar_mismatches.is_empty() {
            format!("{scalar_matches} scalars matched the factorial-ratio formula; 0 mismatches")
        } else {
            format!(
                "{scalar_matches} matched; mismatches (reported, not failed): {}",
                scalar_mismatches.join("; ")
            )
        },
    });

    SuiteReport::new("solver", checks)
}

// ---------------------------------------------------------------------------
// ktype suite
// ---------------------------------------------------------------------------

pub fn suite_ktype(n_max: usize, s_bound: i64) -> SuiteReport {
    let mut checks = Vec::new();

    let admissible = |sigma: &Irr, v: i64| -> bool {
        match sigma {
            Irr::Char(MChar::PP) | Irr::Char(MChar::MM) => true,
            Irr::Char(MChar::PM) => v.rem_euclid(4) == 3,
            Irr::Char(MChar::MP) => v.rem_euclid(4) == 1,
            Irr::H => v.rem_euclid(2) == 0,
        }
    };

    let mut agree_check = Check::new("ktype_crosscheck");
    let mut model_check = Check::new("ktype_model_independence");
    let mut discrepancy_points: Vec<String> = Vec::new();
    for sigma in Irr::ALL {
        for v in -s_bound..=s_bound {
            if !admissible(&sigma, v) {
                continue;
            }
            let s = rint(v);
            match ktype_crosscheck(&sigma, &s, n_max) {
                Ok(r) => {
                    agree_check.case(r.mismatches.is_empty(), || {
                        format!("({}, s={v}): mismatch at n in {:?}", sigma.token(), r.mismatches)
                    });
                    model_check.case(r.models_agree, || {
                        format!("({}, s={v})", sigma.token())
                    });
                    for n in &r.literal_discrepancies {
                        if discrepancy_points.len() < 24 {
                            discrepancy_points.push(format!("(s={v}, n={n})"));
                        }
                    }
                }
                Err(e) => agree_check.case(false, || format!("({}, s={v}): {e}", sigma.token())),
            }
        }
    }
    checks.push(agree_check.finish());
    checks.push(model_check.finish());
    checks.push(CheckResult {
        id: "h_membership_literal_vs_corrected".to_string(),
        pass: true,
        detail: if discrepancy_points.is_empty() {
            "no discrepancy points in range".to_string()
        } else {
            format!(
                "literal lattice over-counts at: {} (membership resolved by the kernel)",
                discrepancy_points.join(", ")
            )
        },
    });

    let mut c = Check::new("ktype_degree_symmetry");
    for v in [1i64, 5, 9, 13, -3, -7, -11] {
        let pm = ktype_degrees(&Irr::Char(MChar::PM), &rint(-v), n_max);
        let mp = ktype_degrees(&Irr::Char(MChar::MP), &rint(v), n_max);
        c.case(pm == mp, || format!("s={v}: {mp:?} vs {pm:?}"));
    }
    checks.push(c.finish());

    SuiteReport::new("ktype", checks)
}

// ---------------------------------------------------------------------------
// appendix suite: series machinery and the representation-theoretic layer
// ---------------------------------------------------------------------------

pub fn suite_appendix(max_n: usize) -> SuiteReport {
    let mut checks = Vec::new();

    let mut c = Check::new("heun_to_gauss_reduction");
    for n in 0..=max_n.min(12) {
        c.case(maier_check(n, 30), || format!("n={n}"));
    }
    checks.push(c.finish());

    // Determinant prefixes against series coefficients.
    let mut c = Check::new("series_determinant_bridge");
    for n in 0..=max_n.min(30) {
        let ni = n as i64;
        for s in sample_rats(10, 1000 + n as u64) {
            let u = uv_coefficients(UvKind::U, &s, n, 16);
            let v = uv_coefficients(UvKind::V, &s, n, 16);
            let p = family_value_prefix(Family::P, 15, &s, &rint(ni));
            let q = family_value_prefix(Family::Q, 15, &s, &rint(ni));
            for k in 0..=15usize {
                c.case(p[k] == &u[k] * &factorial(2 * k), || {
                    format!("P: (s={s}, n={n}, k={k})")
                });
                c.case(q[k] == &v[k] * &factorial(2 * k + 1), || {
                    format!("Q: (s={s}, n={n}, k={k})")
                });
            }
        }
    }
    checks.push(c.finish());

    // The general local-series recurrence specializes to the dedicated ones.
    let mut c = Check::new("heun_specializes_to_uv");
    let s_list = sample_rats(30, 321);
    for (i, s) in s_list.iter().enumerate() {
        let n = (i * 7) % 31;
        let hu = heun_coefficients(&uv_heun_params(UvKind::U, s, n), 15).unwrap();
        let du = uv_coefficients(UvKind::U, s, n, 15);
        c.case(hu == du, || format!("u: (s={s}, n={n})"));
        let hv = heun_coefficients(&uv_heun_params(UvKind::V, s, n), 15).unwrap();
        let dv = uv_coefficients(UvKind::V, s, n, 15);
        c.case(hv == dv, || format!("v: (s={s}, n={n})"));
    }
    checks.push(c.finish());

    // Polynomiality classification against the kernel oracle.
    let mut c = Check::new("polynomiality_matches_kernel_oracle");
    for n in 0..=max_n.min(20) {
        let ni = n as i64;
        for v in -(ni + 2)..=(ni + 2) {
            let s = rint(v);
            for kind in [PolyKind::U, PolyKind::V, PolyKind::A, PolyKind::B] {
                let predicted = is_polynomial(kind, &s, n);
                let oracle = polynomiality_oracle(kind, &s, n);
                c.case(predicted == oracle, || {
                    format!("({kind:?}, s={v}, n={n}): predicted {predicted} oracle {oracle}")
                });
            }
        }
    }
    checks.push(c.finish());

    // The connection constant is the top retained series coefficient.
    let mut c = Check::new("connection_constant_is_top_coefficient");
    for n in 0..=max_n.min(22) {
        if n % 2 != 0 {
            continue;
        }
        for s in sets::all_special_values(n).into_iter().map(rint) {
            let in_minus = match n % 4 {
                0 => sets::in_i0_minus(&s, n),
                _ => sets::in_i2_minus(&s, n),
            };
            if !in_minus {
                continue;
            }
            let a = hypergeom_poly(HgKind::A, &s, n).expect("defined on the minus set");
            let cc = connection_constant(&s, n).expect("defined on the minus set");
            let top = rat_to_i64(&((rint(n as i64) + &s - Rat::one()) / rint(2))).unwrap();
            c.case(a.coeff(top as usize) == cc, || format!("(s={s}, n={n})"));
        }
    }
    checks.push(c.finish());

    // Lie bracket relations of the generator matrices.
    let mut c = Check::new("sl2_commutator_relations");
    for n in 0..=max_n.min(30) {
        let ep = dpi_matrix(Generator::EPlus, n);
        let em = dpi_matrix(Generator::EMinus, n);
        let e0 = dpi_matrix(Generator::EZero, n);
        let comm =
            |a: &Matrix<Rat>, b: &Matrix<Rat>| a.matmul(b).add(&b.matmul(a).scale(&rint(-1)));
        c.case(
            comm(&e0, &ep) == ep.scale(&rint(2))
                && comm(&e0, &em) == em.scale(&rint(-2))
                && comm(&ep, &em) == e0,
            || format!("n={n}"),
        );
    }
    checks.push(c.finish());

    // Group action is multiplicative up to scalars for scaled elements.
    let mut c = Check::new("projective_multiplicativity");
    let seeds = sample_rats(1024, 777);
    let mut cursor = 0usize;
    let next_gauss = |cursor: &mut usize| {
        let g = GaussRat::new(seeds[*cursor].clone(), seeds[*cursor + 1].clone());
        *cursor += 2;
        g
    };
    for trial in 0..20 {
        let n = 1 + (trial % 8);
        let mk = |cursor: &mut usize| loop {
            let entries = [
                [next_gauss(cursor), next_gauss(cursor)],
                [next_gauss(cursor), next_gauss(cursor)],
            ];
            let det = entries[0][0].clone() * entries[1][1].clone()
                - entries[0][1].clone() * entries[1][0].clone();
            if !det.is_zero() {
                return GroupElt::new(entries, true);
            }
        };
        let g = mk(&mut cursor);
        let h = mk(&mut cursor);
        let p: Poly<GaussRat> = Poly::from_coeffs(
            (0..=n).map(|k| GaussRat::from(rat(k as i64 + 1, 2))).collect(),
        );
        let gh = g.mul(&h);
        let one_step = pi_action(&gh, n, &p).unwrap().poly;
        let two_step = pi_action(&g, n, &pi_action(&h, n, &p).unwrap().poly).unwrap().poly;
        // two_step = lambda * one_step for a nonzero scalar lambda
        let ok = match one_step.coeffs().iter().position(|c| !c.is_zero()) {
            Some(idx) => {
                let lambda = two_step.coeff(idx) / one_step.coeff(idx);
                !lambda.is_zero() && two_step == one_step.scale(&lambda)
            }
            None => two_step.is_zero(),
        };
        c.case(ok, || format!("trial {trial} (n={n})"));
    }
    checks.push(c.finish());

    // Intertwining of the two stored operators by the Cayley action.
    let mut c = Check::new("cayley_intertwines_operators");
    for n in 0..=max_n.min(16) {
        // K = matrix of the scaled Cayley action on degree <= n
        let mut k_matrix = Matrix::<GaussRat>::zero(n + 1, n + 1);
        for j in 0..=n {
            let basis: Poly<GaussRat> = Poly::monomial(GaussRat::one(), j);
            let image = pi_action(&crate::rep::cayley_k0(), n, &basis).unwrap().poly;
            let col: Vec<GaussRat> = (0..=n).map(|k| image.coeff(k)).collect();
            k_matrix.set_column(j, &col);
        }
        let ratio = stored_scale(Model::I) / stored_scale(Model::II); // -i
        for s in sample_rats(10, 90 + n as u64) {
            let o1 = operator_matrix(Model::I, &s, n);
            let o2 = operator_matrix(Model::II, &s, n);
            let lift = |m: &Matrix<Rat>| {
                let mut out = Matrix::<GaussRat>::zero(n + 1, n + 1);
                for i in 0..=n {
                    for j in 0..=n {
                        out[(i, j)] = GaussRat::from(m[(i, j)].clone());
                    }
                }
                out
            };
            let lhs = lift(&o1).matmul(&k_matrix);
            let rhs = k_matrix.matmul(&lift(&o2)).scale(&ratio);
            c.case(lhs == rhs, || format!("(s={s}, n={n})"));
        }
    }
    checks.push(c.finish());

    SuiteReport::new("appendix", checks)
}

/// Kernel-membership oracle for polynomiality: truncate the series at
/// degree `n`, require membership in the exact kernel and a window of five
/// vanishing coefficients beyond the truncation.
fn polynomiality_oracle(kind: PolyKind, s: &Rat, n: usize) -> bool {
    let ni = n as i64;
    match kind {
        PolyKind::U => {
            let coeffs = uv_coefficients(UvKind::U, s, n, n / 2 + 6);
            let truncated = Poly::from_coeffs(coeffs[..=n / 2].to_vec()).stretch(2);
            let window_ok = coeffs[n / 2 + 1..].iter().all(|c| c.is_zero());
            window_ok && in_kernel(Model::I, s, n, &truncated)
        }
        PolyKind::V => {
            let top = if n == 0 { 0 } else { (n - 1) / 2 };
            let coeffs = uv_coefficients(UvKind::V, s, n, top + 6);
            let truncated = Poly::from_coeffs(coeffs[..=top].to_vec()).stretch(2).mul_xk(1);
            let window_ok = coeffs[top + 1..].iter().all(|c| c.is_zero());
            // degree of the truncation must stay within n (odd exponents)
            let degree_ok = truncated.degree().unwrap_or(0) <= n;
            window_ok && degree_ok && in_kernel(Model::I, s, n, &truncated)
        }
        PolyKind::A => {
            let aa = rat(-ni, 2);
            let bb = -((rint(ni) + s - Rat::one()) / rint(4));
            let cc = (rint(3 - ni) + s) / rint(4);
            match f21_series_for_oracle(&aa, &bb, &cc, n / 2 + 6) {
                Some(z) => {
                    let truncated = Poly::from_coeffs(z[..=n / 2].to_vec()).stretch(2);
                    let window_ok = z[n / 2 + 1..].iter().all(|c| c.is_zero());
                    window_ok && in_kernel(Model::II, s, n, &truncated)
                }
                None => false,
            }
        }
        PolyKind::B => {
            let e = (rint(1 + ni) - s) / rint(2);
            let Some(e) = rat_to_i64(&e).filter(|v| *v >= 0) else {
                return false;
            };
            let e = e as usize;
            if e > n {
                return false;
            }
            let aa = -((rint(ni) + s - Rat::one()) / rint(4));
            let bb = -((s - Rat::one()) / rint(2));
            let cc = (rint(5 + ni) - s) / rint(4);
            let top = (n - e) / 2;
            match f21_series_for_oracle(&aa, &bb, &cc, top + 6) {
                Some(z) => {
                    let truncated = Poly::from_coeffs(z[..=top].to_vec()).stretch(2).mul_xk(e);
                    let window_ok = z[top + 1..].iter().all(|c| c.is_zero());
                    window_ok && in_kernel(Model::II, s, n, &truncated)
                }
                None => false,
            }
        }
    }
}

fn f21_series_for_oracle(a: &Rat, b: &Rat, c: &Rat, count: usize) -> Option<Vec<Rat>> {
    // Same term-ratio walk as the series module, reimplemented against the
    // raw ratio so the oracle does not share the implementation under test.
    let mut out = Vec::with_capacity(count);
    out.push(Rat::one());
    let mut term = Rat::one();
    for j in 0..count.saturating_sub(1) {
        let jr = rint(j as i64);
        let na = a + &jr;
        let nb = b + &jr;
        if na.is_zero() || nb.is_zero() {
            term = Rat::zero();
        }
        if !term.is_zero() {
            let nc = c + &jr;
            if nc.is_zero() {
                return None;
            }
            term = term * na * nb / (nc * (jr + Rat::one()));
        }
        out.push(term.clone());
    }
    Some(out)
}

fn in_kernel(model: Model, s: &Rat, n: usize, p: &Poly<Rat>) -> bool {
    if p.degree().unwrap_or(0) > n {
        return false;
    }
    let m = operator_matrix(model, s, n);
    let v: Vec<Rat> = (0..=n).map(|k| p.coeff(k)).collect();
    m.mul_vec(&v).iter().all(|x| x.is_zero())
}

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

/// Named suite selector for the command-line surface.
pub fn run_suites(which: &str, max_n: Option<usize>) -> Option<Vec<SuiteReport>> {
    let report = match which {
        "determinants" => vec![suite_determinants(max_n.unwrap_or(40))],
        "palindromic" => vec![suite_palindromic(max_n.unwrap_or(40))],
        "solver" => vec![suite_solver(max_n.unwrap_or(24))],
        "ktype" => vec![suite_ktype(max_n.unwrap_or(25), 13)],
        "appendix" => vec![suite_appendix(max_n.unwrap_or(40))],
        "all" => vec![
            suite_determinants(max_n.unwrap_or(40)),
            suite_palindromic(max_n.unwrap_or(40)),
            suite_solver(max_n.map(|m| m.min(24)).unwrap_or(24)),
            suite_ktype(max_n.unwrap_or(25), 13),
            suite_appendix(max_n.unwrap_or(40)),
        ],
        _ => return None,
    };
    Some(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(suite_determinants(8).pass());
        assert!(suite_palindromic(8).pass());
        assert!(suite_appendix(6).pass());
    }

    #[test]
    fn small_solver_suite_passes() {
        let r = suite_solver(6);
        assert!(r.pass(), "{:?}", r.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    }

    #[test]
    fn small_ktype_suite_passes() {
        let r = suite_ktype(9, 5);
        assert!(r.pass(), "{:?}", r.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    }

    #[test]
    fn sample_rats_is_deterministic() {
        assert_eq!(sample_rats(5, 42), sample_rats(5, 42));
    }
}
