//! Exact kernels of the realized operators, their predicted dimensions,
//! the classification of the order-8 group action on them, Hom
//! multiplicities, and the Cayley transfer between the two models.
//!
//! Ground truth is always the exact kernel computed by elimination; the
//! case tables are treated as predictions under test.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::rep::{cayley_k0, m_element, operator_matrix, pi_action, MChar, Model, RepError};
use crate::scalar::{rat_to_i64, rint, rising_factorial, GaussRat, Rat};
use crate::series::{
    hypergeom_poly, u_polynomial, v_polynomial, HgKind, SeriesError,
};
use crate::sets;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("kernel is not stable under the group action; this indicates a bug")]
    NotInvariant,
    #[error("transfer check requires even n, got {0}")]
    ParityMismatch(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Exact kernel of the realized operator at `(model, s, n)`.
#[derive(Debug, Clone)]
pub struct SolutionSpace {
    pub model: Model,
    pub s: Rat,
    pub n: usize,
    /// Echelon-normalized basis: lowest-degree nonzero coefficient is 1.
    pub basis: Vec<Poly<Rat>>,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coefficient vectors of the basis, padded to length `n + 1`.
    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis
            .iter()
            .map(|p| (0..=self.n).map(|k| p.coeff(k)).collect())
            .collect()
    }
}

/// Kernel basis by exact elimination.
pub fn solution_space(model: Model, s: &Rat, n: usize) -> SolutionSpace {
    let m = operator_matrix(model, s, n);
    let basis: Vec<Poly<Rat>> = m
        .nullspace()
        .into_iter()
        .map(Poly::from_coeffs)
        .collect();
    assert!(
        basis.len() <= 2,
        "kernel dimension above 2 should be impossible; anomaly at ({model:?}, {s}, {n})"
    );
    SolutionSpace {
        model,
        s: s.clone(),
        n,
        basis,
    }
}

/// The predicted kernel dimension from the residue of `n` mod 4 and the
/// integer parameter sets.
pub fn expected_dimension(_model: Model, s: &Rat, n: usize) -> usize {
    match n % 4 {
        0 => {
            if sets::in_i0_plus(s, n) || sets::in_i0_minus(s, n) {
                2
            } else {
                1
            }
        }
        1 => {
            if sets::in_i1(s, n) {
                2
            } else {
                0
            }
        }
        2 => {
            if sets::in_i2_plus(s, n) || sets::in_i2_minus(s, n) {
                2
            } else {
                1
            }
        }
        _ => {
            if sets::in_i3(s, n) {
                2
            } else {
                0
            }
        }
    }
}

/// An irreducible of the order-8 group: one of four characters or the
/// two-dimensional representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Irr {
    Char(MChar),
    H,
}

impl Irr {
    pub const ALL: [Irr; 5] = [
        Irr::Char(MChar::PP),
        Irr::Char(MChar::PM),
        Irr::Char(MChar::MP),
        Irr::Char(MChar::MM),
        Irr::H,
    ];

    pub fn dim(&self) -> usize {
        match self {
            Irr::Char(_) => 1,
            Irr::H => 2,
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            Irr::Char(c) => c.token(),
            Irr::H => "H",
        }
    }
}

/// One irreducible constituent of a kernel, with spanning vectors.
#[derive(Debug, Clone)]
pub struct Constituent {
    pub kind: Irr,
    pub span: Vec<Poly<GaussRat>>,
}

/// Decomposition of a kernel under the order-8 group.
#[derive(Debug, Clone)]
pub struct MRep {
    pub constituents: Vec<Constituent>,
}

impl MRep {
    pub fn kinds(&self) -> Vec<Irr> {
        self.constituents.iter().map(|c| c.kind).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.constituents.iter().map(|c| c.kind.dim()).sum()
    }

    pub fn token(&self) -> String {
        if self.constituents.is_empty() {
            "0".to_string()
        } else {
            let mut tokens: Vec<&str> =
                self.constituents.iter().map(|c| c.kind.token()).collect();
            tokens.sort();
            tokens.join("+")
        }
    }
}

/// Character of the kernel: the trace of the restricted action of each of
/// the eight group elements, indexed by `(j, negated)`.
pub(crate) fn restricted_traces(
    model: Model,
    n: usize,
    space: &SolutionSpace,
) -> Result<Vec<((usize, bool), GaussRat)>, SolverError> {
    let d = space.dim();
    let basis_cols: Vec<Vec<GaussRat>> = space
        .basis_vectors()
        .into_iter()
        .map(|v| v.into_iter().map(GaussRat::from).collect())
        .collect();
    let mut b = Matrix::<GaussRat>::zero(n + 1, d);
    for (j, col) in basis_cols.iter().enumerate() {
        b.set_column(j, col);
    }
    let mut out = Vec::with_capacity(8);
    for j in 0..4 {
        for negate in [false, true] {
            let g = m_element(model, j, negate);
            let mut restricted = Matrix::<GaussRat>::zero(d, d);
            for (i, basis_poly) in space.basis.iter().enumerate() {
                let lifted = basis_poly.map(|c| GaussRat::from(c.clone()));
                let image = pi_action(&g, n, &lifted)?;
                let image_vec: Vec<GaussRat> =
                    (0..=n).map(|k| image.poly.coeff(k)).collect();
                let coords = b.solve(&image_vec).ok_or(SolverError::NotInvariant)?;
                restricted.set_column(i, &coords);
            }
            out.push(((j, negate), restricted.trace()));
        }
    }
    Ok(out)
}

fn char_value_on(sigma: &Irr, model: Model, j: usize, negate: bool, n_parity_irrelevant: ()) -> GaussRat {
    let _ = n_parity_irrelevant;
    match sigma {
        Irr::Char(c) => {
            GaussRat::from(rint(crate::rep::character_value(*c, model, j)))
        }
        Irr::H => {
            if j == 0 {
                GaussRat::from(rint(if negate { -2 } else { 2 }))
            } else {
                GaussRat::zero()
            }
        }
    }
}

/// Multiplicity of each irreducible in the kernel, by the exact character
/// inner product `(1/8) sum_g chi_rep(g) chi_sigma(g)` over the eight
/// group elements.
fn multiplicities(
    model: Model,
    traces: &[((usize, bool), GaussRat)],
) -> Result<Vec<(Irr, usize)>, SolverError> {
    let eighth = GaussRat::from(Rat::new(1.into(), 8.into()));
    let mut out = Vec::with_capacity(5);
    for sigma in Irr::ALL {
        let mut acc = GaussRat::zero();
        for ((j, negate), tr) in traces {
            let cv = char_value_on(&sigma, model, *j, *negate, ());
            acc = acc + tr.clone() * cv;
        }
        let m = acc * eighth.clone();
        let m_int = m
            .as_rat()
            .and_then(|r| rat_to_i64(&r))
            .filter(|v| *v >= 0)
            .ok_or(SolverError::NotInvariant)?;
        out.push((sigma, m_int as usize));
    }
    Ok(out)
}

/// Classify the group action on the kernel: character constituents with
/// spanning vectors, or the two-dimensional irreducible.
pub fn m_rep_classify(model: Model, s: &Rat, n: usize) -> Result<MRep, SolverError> {
    let space = solution_space(model, s, n);
    let d = space.dim();
    if d == 0 {
        return Ok(MRep {
            constituents: Vec::new(),
        });
    }
    let traces = restricted_traces(model, n, &space)?;
    let mults = multiplicities(model, &traces)?;
    let total: usize = mults.iter().map(|(irr, m)| irr.dim() * m).sum();
    if total != d {
        return Err(SolverError::NotInvariant);
    }

    let lifted_basis: Vec<Poly<GaussRat>> = space
        .basis
        .iter()
        .map(|p| p.map(|c| GaussRat::from(c.clone())))
        .collect();

    let mut constituents = Vec::new();
    for (sigma, mult) in mults {
        if mult == 0 {
            continue;
        }
        match sigma {
            Irr::H => {
                constituents.push(Constituent {
                    kind: Irr::H,
                    span: lifted_basis.clone(),
                });
            }
            Irr::Char(c) => {
                // Joint eigenvectors: stack (R_g - chi(g) I) over the three
                // nontrivial labeled elements and take the nullspace in
                // kernel coordinates.
                let restricted = restricted_matrices(model, n, &space)?;
                let mut stacked_rows: Vec<Vec<GaussRat>> = Vec::new();
                for j in 1..4 {
                    let chi = GaussRat::from(rint(crate::rep::character_value(c, model, j)));
                    let r = &restricted[j];
                    for row in 0..d {
                        let mut v: Vec<GaussRat> =
                            (0..d).map(|col| r[(row, col)].clone()).collect();
                        v[row] = v[row].clone() - chi.clone();
                        stacked_rows.push(v);
                    }
                }
                let stacked = Matrix::from_rows(stacked_rows);
                let coords = stacked.nullspace();
                if coords.len() != mult {
                    return Err(SolverError::NotInvariant);
                }
                let span = coords
                    .into_iter()
                    .map(|co| {
                        let mut acc: Poly<GaussRat> = Poly::zero();
                        for (basis_poly, w) in lifted_basis.iter().zip(co) {
                            acc = &acc + &basis_poly.scale(&w);
                        }
                        acc
                    })
                    .collect();
                constituents.push(Constituent {
                    kind: Irr::Char(c),
                    span,
                });
            }
        }
    }
    Ok(MRep { constituents })
}

/// Restricted action matrices of the four positively-labeled elements in
/// the kernel basis.
fn restricted_matrices(
    model: Model,
    n: usize,
    space: &SolutionSpace,
) -> Result<Vec<Matrix<GaussRat>>, SolverError> {
    let d = space.dim();
    let mut b = Matrix::<GaussRat>::zero(n + 1, d);
    for (j, col) in space.basis_vectors().into_iter().enumerate() {
        let col: Vec<GaussRat> = col.into_iter().map(GaussRat::from).collect();
        b.set_column(j, &col);
    }
    let mut out = Vec::with_capacity(4);
    for j in 0..4 {
        let g = m_element(model, j, false);
        let mut restricted = Matrix::<GaussRat>::zero(d, d);
        for (i, basis_poly) in space.basis.iter().enumerate() {
            let lifted = basis_poly.map(|c| GaussRat::from(c.clone()));
            let image = pi_action(&g, n, &lifted)?;
            let image_vec: Vec<GaussRat> = (0..=n).map(|k| image.poly.coeff(k)).collect();
            let coords = b.solve(&image_vec).ok_or(SolverError::NotInvariant)?;
            restricted.set_column(i, &coords);
        }
        out.push(restricted);
    }
    Ok(out)
}

/// Multiplicity of `sigma` in the kernel (0 or 1).
pub fn hom_dim(model: Model, s: &Rat, n: usize, sigma: &Irr) -> Result<usize, SolverError> {
    let space = solution_space(model, s, n);
    if space.dim() == 0 {
        return Ok(0);
    }
    let traces = restricted_traces(model, n, &space)?;
    let mults = multiplicities(model, &traces)?;
    let m = mults
        .into_iter()
        .find(|(irr, _)| irr == sigma)
        .map(|(_, m)| m)
        .unwrap_or(0);
    assert!(m <= 1, "multiplicities must be 0 or 1");
    Ok(m)
}

/// The predicted constituent list for `(model, s, n)` from the case tables.
pub fn expected_constituents(_model: Model, s: &Rat, n: usize) -> Vec<Irr> {
    match n % 4 {
        0 => {
            if sets::in_i0_plus(s, n) {
                vec![Irr::Char(MChar::PP), Irr::Char(MChar::PM)]
            } else if sets::in_i0_minus(s, n) {
                vec![Irr::Char(MChar::PP), Irr::Char(MChar::MP)]
            } else {
                vec![Irr::Char(MChar::PP)]
            }
        }
        1 => {
            if sets::in_i1(s, n) {
                vec![Irr::H]
            } else {
                vec![]
            }
        }
        2 => {
            if sets::in_i2_plus(s, n) {
                vec![Irr::Char(MChar::MM), Irr::Char(MChar::MP)]
            } else if sets::in_i2_minus(s, n) {
                vec![Irr::Char(MChar::MM), Irr::Char(MChar::PM)]
            } else {
                vec![Irr::Char(MChar::MM)]
            }
        }
        _ => {
            if sets::in_i3(s, n) {
                vec![Irr::H]
            } else {
                vec![]
            }
        }
    }
}

/// The explicitly predicted kernel polynomials for `(model, s, n)`.
pub fn predicted_basis(model: Model, s: &Rat, n: usize) -> Result<Vec<Poly<Rat>>, SolverError> {
    let a = || hypergeom_poly(HgKind::A, s, n).map_err(SolverError::from);
    let b = || hypergeom_poly(HgKind::B, s, n).map_err(SolverError::from);
    let cp = || hypergeom_poly(HgKind::CPlus, s, n).map_err(SolverError::from);
    let cm = || hypergeom_poly(HgKind::CMinus, s, n).map_err(SolverError::from);
    let u = || u_polynomial(s, n).ok_or(SolverError::Series(SeriesError::NotPolynomial));
    let v = || v_polynomial(s, n).ok_or(SolverError::Series(SeriesError::NotPolynomial));
    Ok(match (model, n % 4) {
        (Model::II, 0) => {
            if sets::in_i0_plus(s, n) {
                vec![a()?, b()?]
            } else if sets::in_i0_minus(s, n) {
                vec![cp()?, cm()?]
            } else if sets::in_j0(s, n) {
                vec![b()?]
            } else {
                vec![a()?]
            }
        }
        (Model::II, 2) => {
            if sets::in_i2_plus(s, n) {
                vec![a()?, b()?]
            } else if sets::in_i2_minus(s, n) {
                vec![cp()?, cm()?]
            } else if sets::in_j2(s, n) {
                vec![b()?]
            } else {
                vec![a()?]
            }
        }
        (Model::II, 1) => {
            if sets::in_i1(s, n) {
                vec![a()?, b()?]
            } else {
                vec![]
            }
        }
        (Model::II, _) => {
            if sets::in_i3(s, n) {
                vec![a()?, b()?]
            } else {
                vec![]
            }
        }
        (Model::I, 0) => {
            if sets::in_i0_plus(s, n) || sets::in_i0_minus(s, n) {
                vec![u()?, v()?]
            } else {
                vec![u()?]
            }
        }
        (Model::I, 2) => {
            if sets::in_i2_plus(s, n) || sets::in_i2_minus(s, n) {
                vec![u()?, v()?]
            } else {
                vec![v()?]
            }
        }
        (Model::I, 1) => {
            if sets::in_i1(s, n) {
                vec![u()?, v()?]
            } else {
                vec![]
            }
        }
        (Model::I, _) => {
            if sets::in_i3(s, n) {
                vec![u()?, v()?]
            } else {
                vec![]
            }
        }
    })
}

/// Does the explicitly predicted basis lie in the computed kernel and span
/// it?
pub fn basis_match(model: Model, s: &Rat, n: usize) -> Result<bool, SolverError> {
    let predicted = predicted_basis(model, s, n)?;
    let space = solution_space(model, s, n);
    if predicted.len() != space.dim() {
        return Ok(false);
    }
    let op = operator_matrix(model, s, n);
    for p in &predicted {
        if p.is_zero() {
            return Ok(false);
        }
        if p.degree().unwrap_or(0) > n {
            return Ok(false);
        }
        let vec: Vec<Rat> = (0..=n).map(|k| p.coeff(k)).collect();
        if !op.mul_vec(&vec).iter().all(|x| x.is_zero()) {
            return Ok(false);
        }
    }
    // Independence of the predicted vectors.
    if !predicted.is_empty() {
        let m = Matrix::from_rows(
            predicted
                .iter()
                .map(|p| (0..=n).map(|k| p.coeff(k)).collect())
                .collect(),
        );
        if m.rank() != predicted.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactScalarCheck {
    /// Scalar computed from the unit-determinant Cayley action.
    pub computed: String,
    /// Ratio of rising factorials it is predicted to equal.
    pub formula: String,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransferRow {
    pub source: &'static str,
    pub target: &'static str,
    pub proportional: bool,
    /// The projective scalar relating image and target (from the scaled
    /// representative action).
    pub scalar: String,
    pub exact_scalar: Option<ExactScalarCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransferReport {
    pub s: String,
    pub n: usize,
    pub rows: Vec<TransferRow>,
    pub all_proportional: bool,
}

/// Check every applicable transfer row at even `n`: the Cayley action must
/// send each hypergeometric-side kernel polynomial into the line of the
/// predicted series-side solution. For the plain even-solution row with
/// `n ≡ 0 (mod 4)` the exact unit-determinant scalar is additionally
/// computed and compared against its predicted factorial ratio; a mismatch
/// there is reported, not asserted.
pub fn transfer_check(s: &Rat, n: usize) -> Result<TransferReport, SolverError> {
    if n % 2 != 0 {
        return Err(SolverError::ParityMismatch(n));
    }
    let mut planned_rows: Vec<(&'static str, HgKind, &'static str)> = Vec::new();
    if n % 4 == 0 {
        if !sets::in_i0_minus(s, n) && !sets::in_j0(s, n) {
            planned_rows.push(("a", HgKind::A, "u"));
        }
        if sets::in_j0(s, n) {
            planned_rows.push(("b", HgKind::B, "u"));
        }
        if sets::in_i0_minus(s, n) {
            planned_rows.push(("c+", HgKind::CPlus, "u"));
            planned_rows.push(("c-", HgKind::CMinus, "v"));
        }
        if sets::in_i0_plus(s, n) {
            planned_rows.push(("b", HgKind::B, "v"));
        }
    } else {
        if !sets::in_i2_minus(s, n) && !sets::in_j2(s, n) {
            planned_rows.push(("a", HgKind::A, "v"));
        }
        if sets::in_j2(s, n) {
            planned_rows.push(("b", HgKind::B, "v"));
        }
        if sets::in_i2_minus(s, n) {
            planned_rows.push(("c+", HgKind::CPlus, "v"));
            planned_rows.push(("c-", HgKind::CMinus, "u"));
        }
        if sets::in_i2_plus(s, n) {
            planned_rows.push(("b", HgKind::B, "u"));
        }
    }

    let k0 = cayley_k0();
    let mut rows = Vec::new();
    for (source_name, kind, target_name) in planned_rows {
        let source = hypergeom_poly(kind, s, n)?;
        let target = match target_name {
            "u" => u_polynomial(s, n),
            _ => v_polynomial(s, n),
        }
        .ok_or(SolverError::Series(SeriesError::NotPolynomial))?;
        let lifted = source.map(|c| GaussRat::from(c.clone()));
        let image = pi_action(&k0, n, &lifted)?.poly;
        // image = mu * target?
        let mu = match target.coeffs().iter().position(|c| !c.is_zero()) {
            Some(idx) => {
                let t = GaussRat::from(target.coeff(idx));
                image.coeff(idx) / t
            }
            None => GaussRat::zero(),
        };
        let target_lifted = target.map(|c| GaussRat::from(c.clone()));
        let proportional = !mu.is_zero() && image == target_lifted.scale(&mu);

        let exact_scalar = if n % 4 == 0 && source_name == "a" {
            // Unit-determinant scaling: (1/sqrt 2)^n = 2^{-n/2}.
            let mut half_pow = Rat::one();
            for _ in 0..n / 2 {
                half_pow /= rint(2);
            }
            let computed = mu.clone().scale(&half_pow);
            let ni = n as i64;
            let m = n / 4;
            let num = rising_factorial(&(rint(2 - ni) / rint(4)), m);
            let den = rising_factorial(&((rint(3 - ni) + s) / rint(4)), m);
            if den.is_zero() {
                None
            } else {
                let formula = num / den;
                Some(ExactScalarCheck {
                    computed: computed.to_string(),
                    matches: computed == GaussRat::from(formula.clone()),
                    formula: formula.to_string(),
                })
            }
        } else {
            None
        };

        rows.push(TransferRow {
            source: source_name,
            target: target_name,
            proportional,
            scalar: mu.to_string(),
            exact_scalar,
        });
    }

    let all_proportional = rows.iter().all(|r| r.proportional);
    Ok(TransferReport {
        s: s.to_string(),
        n,
        rows,
        all_proportional,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn solution_space_examples() {
        // (II, 2, 4): dim 1, basis proportional to 1 + 10 t^2 + t^4
        let sp = solution_space(Model::II, &rint(2), 4);
        assert_eq!(sp.dim(), 1);
        let b = &sp.basis[0];
        assert_eq!(b.coeff(0), rint(1));
        assert_eq!(b.coeff(2), rint(10));
        assert_eq!(b.coeff(4), rint(1));

        // (I, 5, 2): dim 1, basis {t}
        let sp = solution_space(Model::I, &rint(5), 2);
        assert_eq!(sp.dim(), 1);
        assert_eq!(sp.basis[0], Poly::monomial(Rat::one(), 1));

        // (II, 0, 1): dim 2
        assert_eq!(solution_space(Model::II, &rint(0), 1).dim(), 2);
    }

    #[test]
    fn expected_dimension_examples() {
        assert_eq!(expected_dimension(Model::II, &rint(1), 4), 1);
        assert_eq!(expected_dimension(Model::I, &rint(3), 4), 2);
        assert_eq!(expected_dimension(Model::II, &rint(7), 3), 0);
        assert_eq!(expected_dimension(Model::II, &rat(1, 3), 6), 1);
    }

    #[test]
    fn classify_examples() {
        // (I, 0, 4) -> (+,+)
        let m = m_rep_classify(Model::I, &rint(0), 4).unwrap();
        assert_eq!(m.kinds(), vec![Irr::Char(MChar::PP)]);

        // (I, 5, 2) -> (-,-)
        let m = m_rep_classify(Model::I, &rint(5), 2).unwrap();
        assert_eq!(m.kinds(), vec![Irr::Char(MChar::MM)]);

        // (II, 0, 1) -> H
        let m = m_rep_classify(Model::II, &rint(0), 1).unwrap();
        assert_eq!(m.kinds(), vec![Irr::H]);
    }

    #[test]
    fn hom_dim_examples() {
        assert_eq!(
            hom_dim(Model::II, &rint(1), 6, &Irr::Char(MChar::MP)).unwrap(),
            1
        );
        assert_eq!(hom_dim(Model::II, &rint(3), 3, &Irr::H).unwrap(), 0);
        for s in [rint(0), rint(2), rat(1, 3), rat(-9, 5), rint(7)] {
            assert_eq!(
                hom_dim(Model::I, &s, 4, &Irr::Char(MChar::PP)).unwrap(),
                1
            );
        }
    }

    #[test]
    fn basis_match_examples() {
        assert!(basis_match(Model::II, &rint(1), 4).unwrap());
        assert!(basis_match(Model::I, &rint(1), 4).unwrap());
        assert!(basis_match(Model::II, &rint(-3), 4).unwrap());
    }

    #[test]
    fn transfer_examples() {
        // (s=1, n=4): s in J0, so the b -> u row applies
        let r = transfer_check(&rint(1), 4).unwrap();
        assert!(r.all_proportional);
        assert_eq!(r.rows.len(), 1);
        assert_eq!((r.rows[0].source, r.rows[0].target), ("b", "u"));

        // (s=2, n=4): generic, a -> u with the exact scalar -2
        let r = transfer_check(&rint(2), 4).unwrap();
        assert!(r.all_proportional);
        let ex = r.rows[0].exact_scalar.as_ref().unwrap();
        assert_eq!(ex.formula, "-2");
        assert!(ex.matches, "computed {} vs formula {}", ex.computed, ex.formula);

        assert!(transfer_check(&rint(0), 3).is_err());
    }
}
