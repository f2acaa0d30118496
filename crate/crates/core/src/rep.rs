//! The polynomial model of SU(2) and the two realized second-order
//! operators.
//!
//! `pi_n` acts on polynomials of degree at most `n` by
//! `(pi_n(g) p)(t) = (ct + d)^n p((at + b) / (ct + d))` where `(a b; c d)`
//! is the inverse of `g`. Projective representatives (determinant != 1) act
//! through the adjugate instead, which is the same map up to a known
//! `det^n` factor.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::scalar::{rint, GaussRat, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Model {
    I,
    II,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("polynomial degree {degree} exceeds the module degree {n}")]
    DegreeTooHigh { degree: usize, n: usize },
}

/// A 2x2 invertible matrix over Q(i), possibly only a projective
/// (scaled) representative of the intended group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElt {
    pub entries: [[GaussRat; 2]; 2],
    pub projective: bool,
}

impl GroupElt {
    pub fn new(entries: [[GaussRat; 2]; 2], projective: bool) -> Self {
        let g = GroupElt {
            entries,
            projective,
        };
        assert!(!g.det().is_zero(), "group element must be invertible");
        g
    }

    pub fn identity() -> Self {
        GroupElt::new(
            [
                [GaussRat::one(), GaussRat::zero()],
                [GaussRat::zero(), GaussRat::one()],
            ],
            false,
        )
    }

    pub fn det(&self) -> GaussRat {
        self.entries[0][0].clone() * self.entries[1][1].clone()
            - self.entries[0][1].clone() * self.entries[1][0].clone()
    }

    /// `det(g) * g^{-1}`.
    pub fn adjugate(&self) -> [[GaussRat; 2]; 2] {
        [
            [self.entries[1][1].clone(), -self.entries[0][1].clone()],
            [-self.entries[1][0].clone(), self.entries[0][0].clone()],
        ]
    }

    pub fn mul(&self, o: &GroupElt) -> GroupElt {
        let mut out = [
            [GaussRat::zero(), GaussRat::zero()],
            [GaussRat::zero(), GaussRat::zero()],
        ];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = self.entries[i][0].clone() * o.entries[0][j].clone()
                    + self.entries[i][1].clone() * o.entries[1][j].clone();
            }
        }
        GroupElt::new(out, self.projective || o.projective)
    }

    pub fn neg(&self) -> GroupElt {
        let e = &self.entries;
        GroupElt::new(
            [
                [-e[0][0].clone(), -e[0][1].clone()],
                [-e[1][0].clone(), -e[1][1].clone()],
            ],
            self.projective,
        )
    }
}

/// The four labeled order-8 group elements of each model, times `sign`.
///
/// Model I: `m0 = 1`, `m1 = diag(i, -i)`, `m2 = (0 1; -1 0)`,
/// `m3 = (0 i; i 0)`. Model II is the same set relabeled by conjugation
/// with the Cayley element: `m1 <-> m2` and `m3 -> -m3`.
pub fn m_element(model: Model, j: usize, negate: bool) -> GroupElt {
    assert!(j < 4);
    let i = GaussRat::i;
    let zero = GaussRat::zero;
    let one = GaussRat::one;
    let entries = match (model, j) {
        (_, 0) => [[one(), zero()], [zero(), one()]],
        (Model::I, 1) | (Model::II, 2) => [[i(), zero()], [zero(), -i()]],
        (Model::I, 2) | (Model::II, 1) => [[zero(), one()], [-one(), zero()]],
        (Model::I, 3) => [[zero(), i()], [i(), zero()]],
        (Model::II, 3) => [[zero(), -i()], [-i(), zero()]],
        _ => unreachable!(),
    };
    let g = GroupElt::new(entries, false);
    if negate {
        g.neg()
    } else {
        g
    }
}

/// The Cayley element as its sqrt(2)-scaled integral representative
/// `(i 1; -1 -i)`, determinant 2, flagged projective.
pub fn cayley_k0() -> GroupElt {
    let i = GaussRat::i();
    GroupElt::new(
        [
            [i.clone(), GaussRat::one()],
            [-GaussRat::one(), -i],
        ],
        true,
    )
}

/// Result of a group action on a polynomial; `projective` marks a result
/// known only up to a nonzero scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiAction {
    pub poly: Poly<GaussRat>,
    pub projective: bool,
}

/// `pi_n(g) p`, exact for determinant-1 elements; for a scaled
/// representative the result is `det(g)^n` times the unscaled action and is
/// flagged projective.
pub fn pi_action(g: &GroupElt, n: usize, p: &Poly<GaussRat>) -> Result<PiAction, RepError> {
    if let Some(d) = p.degree() {
        if d > n {
            return Err(RepError::DegreeTooHigh { degree: d, n });
        }
    }
    // Scalar matrices act by a power of the scalar; in particular -1 acts
    // as (-1)^n. Handled directly, cross-checked against the generic
    // formula in tests.
    if g.entries[0][1].is_zero()
        && g.entries[1][0].is_zero()
        && g.entries[0][0] == g.entries[1][1]
    {
        let mut factor = GaussRat::one();
        for _ in 0..n {
            factor = factor * g.entries[0][0].clone();
        }
        return Ok(PiAction {
            poly: p.scale(&factor),
            projective: g.projective || g.det() != GaussRat::one(),
        });
    }
    let adj = g.adjugate();
    let (a, b) = (adj[0][0].clone(), adj[0][1].clone());
    let (c, d) = (adj[1][0].clone(), adj[1][1].clone());
    let lin_num = Poly::from_coeffs(vec![b, a]); // a t + b
    let lin_den = Poly::from_coeffs(vec![d, c]); // c t + d
    // Powers of both linear forms up to n.
    let mut num_pows = Vec::with_capacity(n + 1);
    let mut den_pows = Vec::with_capacity(n + 1);
    num_pows.push(Poly::<GaussRat>::one());
    den_pows.push(Poly::<GaussRat>::one());
    for k in 1..=n {
        num_pows.push(&num_pows[k - 1] * &lin_num);
        den_pows.push(&den_pows[k - 1] * &lin_den);
    }
    let mut out = Poly::zero();
    for k in 0..=n {
        let coeff = p.coeff(k);
        if coeff.is_zero() {
            continue;
        }
        out = &out + &(&num_pows[k] * &den_pows[n - k]).scale(&coeff);
    }
    let projective = g.projective || g.det() != GaussRat::one();
    Ok(PiAction {
        poly: out,
        projective,
    })
}

/// Exact (determinant-1) action of the Cayley element for even `n`, where
/// the scale factor `(1/sqrt 2)^n = 2^{-n/2}` is rational.
pub fn pi_k0_exact(n: usize, p: &Poly<GaussRat>) -> Result<Poly<GaussRat>, RepError> {
    assert!(n % 2 == 0, "exact Cayley action needs even n");
    let raw = pi_action(&cayley_k0(), n, p)?;
    let mut scale = Rat::one();
    for _ in 0..n / 2 {
        scale /= rint(2);
    }
    Ok(raw.poly.scale(&GaussRat::from(scale)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    EPlus,
    EMinus,
    EZero,
}

/// Matrix of the generator action on the monomial basis `1, t, ..., t^n`:
/// `EPlus = -d/dt`, `EMinus = -n t + t^2 d/dt`, `EZero = -2t d/dt + n`.
pub fn dpi_matrix(gen: Generator, n: usize) -> Matrix<Rat> {
    let mut m = Matrix::zero(n + 1, n + 1);
    for j in 0..=n {
        let ji = j as i64;
        match gen {
            Generator::EPlus => {
                if j >= 1 {
                    m[(j - 1, j)] = rint(-ji);
                }
            }
            Generator::EMinus => {
                if j + 1 <= n {
                    m[(j + 1, j)] = rint(ji - n as i64);
                }
            }
            Generator::EZero => {
                m[(j, j)] = rint(n as i64 - 2 * ji);
            }
        }
    }
    m
}

/// Second-order operator with polynomial coefficients,
/// `c2(t) D^2 + c1(t) D + c0(t)`.
pub(crate) struct DiffOp {
    pub c2: Poly<Rat>,
    pub c1: Poly<Rat>,
    pub c0: Poly<Rat>,
}

impl DiffOp {
    pub fn apply(&self, p: &Poly<Rat>) -> Poly<Rat> {
        let dp = p.derivative();
        let ddp = dp.derivative();
        &(&(&self.c2 * &ddp) + &(&self.c1 * &dp)) + &(&self.c0 * p)
    }
}

pub(crate) fn operator_diffop(model: Model, s: &Rat, n: usize) -> DiffOp {
    let ni = n as i64;
    match model {
        // (1 - t^4) D^2 + 2((n-1) t^2 + s) t D - n ((n-1) t^2 + s)
        Model::I => DiffOp {
            c2: Poly::from_coeffs(vec![rint(1), rint(0), rint(0), rint(0), rint(-1)]),
            c1: Poly::from_coeffs(vec![
                rint(0),
                s + s,
                rint(0),
                rint(2 * (ni - 1)),
            ]),
            c0: Poly::from_coeffs(vec![-(rint(ni) * s), rint(0), rint(-ni * (ni - 1))]),
        },
        // 2 (1 - t^2) t D^2 + ((s + 3n - 3) t^2 + (s - n + 1)) D - n (s + n - 1) t
        Model::II => DiffOp {
            c2: Poly::from_coeffs(vec![rint(0), rint(2), rint(0), rint(-2)]),
            c1: Poly::from_coeffs(vec![
                s + rint(1 - ni),
                rint(0),
                s + rint(3 * ni - 3),
            ]),
            c0: Poly::from_coeffs(vec![rint(0), -(rint(ni) * (s + rint(ni - 1)))]),
        },
    }
}

/// The stored normalization of each model's operator relative to the raw
/// generator expression; kernels are insensitive to it, intertwining
/// scalars are not.
pub fn stored_scale(model: Model) -> GaussRat {
    match model {
        Model::I => GaussRat::new(Rat::zero(), rint(-2)), // -2i
        Model::II => GaussRat::from(rint(2)),
    }
}

/// Matrix of the realized operator on the monomial basis; entries rational
/// because of the stored normalization.
pub fn operator_matrix(model: Model, s: &Rat, n: usize) -> Matrix<Rat> {
    let op = operator_diffop(model, s, n);
    let mut m = Matrix::zero(n + 1, n + 1);
    for j in 0..=n {
        let image = op.apply(&Poly::monomial(Rat::one(), j));
        assert!(
            image.degree().unwrap_or(0) <= n,
            "operator must preserve degree <= n"
        );
        let mut col = vec![Rat::zero(); n + 1];
        for (k, c) in image.coeffs().iter().enumerate() {
            col[k] = c.clone();
        }
        m.set_column(j, &col);
    }
    m
}

/// Apply the realized operator directly to a polynomial (no matrix).
pub fn operator_apply(model: Model, s: &Rat, n: usize, p: &Poly<Rat>) -> Poly<Rat> {
    operator_diffop(model, s, n).apply(p)
}

/// The four one-dimensional characters of the order-8 group, labeled by a
/// pair of signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MChar {
    PP,
    PM,
    MP,
    MM,
}

impl MChar {
    pub const ALL: [MChar; 4] = [MChar::PP, MChar::PM, MChar::MP, MChar::MM];

    pub fn token(self) -> &'static str {
        match self {
            MChar::PP => "pp",
            MChar::PM => "pm",
            MChar::MP => "mp",
            MChar::MM => "mm",
        }
    }

    pub fn pretty(self) -> &'static str {
        match self {
            MChar::PP => "(+,+)",
            MChar::PM => "(+,-)",
            MChar::MP => "(-,+)",
            MChar::MM => "(-,-)",
        }
    }

    fn row(self) -> usize {
        match self {
            MChar::PP => 0,
            MChar::PM => 1,
            MChar::MP => 2,
            MChar::MM => 3,
        }
    }
}

const CHAR_TABLE_I: [[i64; 4]; 4] = [
    [1, 1, 1, 1],
    [1, -1, -1, 1],
    [1, -1, 1, -1],
    [1, 1, -1, -1],
];

const CHAR_TABLE_II: [[i64; 4]; 4] = [
    [1, 1, 1, 1],
    [1, -1, -1, 1],
    [1, -1, 1, -1],
    [1, 1, -1, -1],
];

/// Character value on the `j`-th labeled element of the given model; both
/// signs of the element share the value.
pub fn character_value(ch: MChar, model: Model, j: usize) -> i64 {
    assert!(j < 4);
    match model {
        Model::I => CHAR_TABLE_I[ch.row()][j],
        Model::II => CHAR_TABLE_II[ch.row()][j],
    }
}

/// Characteristic polynomial of the symmetric-sum generator matrix
/// `dpi_n(EPlus) + dpi_n(EMinus)`, exact.
pub fn charpoly_eplus_eminus(n: usize) -> Poly<Rat> {
    let m = dpi_matrix(Generator::EPlus, n).add(&dpi_matrix(Generator::EMinus, n));
    m.charpoly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn gauss_poly(coeffs: &[(i64, i64)]) -> Poly<GaussRat> {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&(re, im)| GaussRat::new(rint(re), rint(im)))
                .collect(),
        )
    }

    #[test]
    fn identity_acts_trivially() {
        let p = gauss_poly(&[(1, 0), (2, 3), (0, -1)]);
        let r = pi_action(&GroupElt::identity(), 4, &p).unwrap();
        assert_eq!(r.poly, p);
        assert!(!r.projective);
    }

    #[test]
    fn labeled_element_actions() {
        // m1 (model I) on t with n = 1: -i t
        let t = gauss_poly(&[(0, 0), (1, 0)]);
        let r = pi_action(&m_element(Model::I, 1, false), 1, &t).unwrap();
        assert_eq!(r.poly, gauss_poly(&[(0, 0), (0, -1)]));

        // m2 (model I): p -> t^n p(-1/t); on t^2 + 1 with n = 2: 1 + t^2
        let p = gauss_poly(&[(1, 0), (0, 0), (1, 0)]);
        let r = pi_action(&m_element(Model::I, 2, false), 2, &p).unwrap();
        assert_eq!(r.poly, p);

        // m3 (model I): p -> (-i t)^n p(1/t); on t with n = 1: -i
        let r = pi_action(&m_element(Model::I, 3, false), 1, &t).unwrap();
        assert_eq!(r.poly, gauss_poly(&[(0, -1)]));
    }

    #[test]
    fn scaled_cayley_on_square() {
        // On t^2 with n = 4 the scaled Cayley action lands in the line of
        // (1 + t^2)^2.
        let p = gauss_poly(&[(0, 0), (0, 0), (1, 0)]);
        let r = pi_action(&cayley_k0(), 4, &p).unwrap();
        assert!(r.projective);
        let square = gauss_poly(&[(1, 0), (0, 0), (2, 0), (0, 0), (1, 0)]);
        // r = lambda * (1 + t^2)^2 for some nonzero lambda
        let lambda = r.poly.coeff(0);
        assert!(!lambda.is_zero());
        assert_eq!(r.poly, square.scale(&lambda));
    }

    #[test]
    fn degree_guard() {
        let p = gauss_poly(&[(0, 0), (0, 0), (1, 0)]);
        assert_eq!(
            pi_action(&GroupElt::identity(), 1, &p),
            Err(RepError::DegreeTooHigh { degree: 2, n: 1 })
        );
    }

    #[test]
    fn dpi_examples() {
        let ep = dpi_matrix(Generator::EPlus, 2);
        assert_eq!(ep[(0, 1)], rint(-1));
        assert_eq!(ep[(1, 2)], rint(-2));
        let e0 = dpi_matrix(Generator::EZero, 3);
        assert_eq!(
            (0..4).map(|i| e0[(i, i)].clone()).collect::<Vec<_>>(),
            vec![rint(3), rint(1), rint(-1), rint(-3)]
        );
        let em = dpi_matrix(Generator::EMinus, 1);
        assert_eq!(em[(1, 0)], rint(-1));
        assert_eq!(em[(0, 1)], rint(0));
    }

    #[test]
    fn sl2_commutators() {
        for n in 0..=8 {
            let ep = dpi_matrix(Generator::EPlus, n);
            let em = dpi_matrix(Generator::EMinus, n);
            let e0 = dpi_matrix(Generator::EZero, n);
            let comm = |a: &Matrix<Rat>, b: &Matrix<Rat>| {
                a.matmul(b).add(&b.matmul(a).scale(&rint(-1)))
            };
            assert_eq!(comm(&e0, &ep), ep.scale(&rint(2)));
            assert_eq!(comm(&e0, &em), em.scale(&rint(-2)));
            assert_eq!(comm(&ep, &em), e0);
        }
    }

    #[test]
    fn operator_matrix_examples() {
        // Model II, n = 1: 1 -> -s t, t -> s
        let s = rat(5, 3);
        let m = operator_matrix(Model::II, &s, 1);
        assert_eq!(m[(1, 0)], -s.clone());
        assert_eq!(m[(0, 1)], s.clone());
        // Model I, n = 2: t -> 0 for every s
        let m = operator_matrix(Model::I, &s, 2);
        assert!(m.column(1).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn operator_matrix_matches_direct_application() {
        let s = rat(-7, 4);
        let coeff_pool = crate::verify::sample_rats(200, 4242);
        let mut cursor = 0;
        for trial in 0..20 {
            let model = if trial % 2 == 0 { Model::I } else { Model::II };
            let n = 1 + trial % 7;
            let p = Poly::from_coeffs(coeff_pool[cursor..cursor + n + 1].to_vec());
            cursor += n + 1;
            let m = operator_matrix(model, &s, n);
            let via_matrix = m.mul_vec(&(0..=n).map(|k| p.coeff(k)).collect::<Vec<_>>());
            let direct = operator_apply(model, &s, n, &p);
            for k in 0..=n {
                assert_eq!(via_matrix[k], direct.coeff(k));
            }
        }
    }

    #[test]
    fn negative_identity_acts_by_parity_sign() {
        let minus_one = GroupElt::identity().neg();
        for n in 0..=5usize {
            let p = gauss_poly(&[(1, 2), (3, -1), (0, 4)]);
            if p.degree().unwrap() > n {
                continue;
            }
            let fast = pi_action(&minus_one, n, &p).unwrap().poly;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(fast, p.scale(&GaussRat::from_int(sign)));
            // cross-check against the generic formula via m1 * m1 = -1
            let m1 = m_element(Model::I, 1, false);
            let twice = pi_action(&m1, n, &pi_action(&m1, n, &p).unwrap().poly)
                .unwrap()
                .poly;
            assert_eq!(fast, twice);
        }
    }

    #[test]
    fn quaternion_structure() {
        // eight elements close under multiplication; squares of m1..m3 are -1
        let minus_one = GroupElt::identity().neg();
        for j in 1..4 {
            let m = m_element(Model::I, j, false);
            assert_eq!(m.mul(&m), minus_one);
        }
        assert_eq!(
            m_element(Model::I, 1, false).mul(&m_element(Model::I, 2, false)),
            m_element(Model::I, 3, false)
        );
        // closure
        let all: Vec<GroupElt> = (0..4)
            .flat_map(|j| [m_element(Model::I, j, false), m_element(Model::I, j, true)])
            .collect();
        for a in &all {
            for b in &all {
                let prod = a.mul(b);
                assert!(all.iter().any(|g| *g == prod));
            }
        }
    }

    #[test]
    fn cayley_conjugation_relabels_elements() {
        // adj(S) * m_j^I * S = 2 * m_j^II, S the scaled Cayley representative
        let s_elt = cayley_k0();
        let adj = GroupElt::new(s_elt.adjugate(), true);
        for j in 0..4 {
            let lhs = adj.mul(&m_element(Model::I, j, false)).mul(&s_elt);
            let rhs = m_element(Model::II, j, false);
            let two = GaussRat::from(rint(2));
            let scaled: Vec<GaussRat> = rhs
                .entries
                .iter()
                .flatten()
                .map(|e| e.clone() * two.clone())
                .collect();
            let got: Vec<GaussRat> = lhs.entries.iter().flatten().cloned().collect();
            assert_eq!(got, scaled);
        }
        // (scaled k0)^2 = -2 * identity
        let sq = s_elt.mul(&s_elt);
        assert_eq!(sq.entries[0][0], GaussRat::from(rint(-2)));
        assert_eq!(sq.entries[1][1], GaussRat::from(rint(-2)));
        assert!(sq.entries[0][1].is_zero() && sq.entries[1][0].is_zero());
        assert_eq!(s_elt.det(), GaussRat::from(rint(2)));
    }

    #[test]
    fn characters_are_homomorphisms() {
        for model in [Model::I, Model::II] {
            let elements: Vec<(GroupElt, usize)> = (0..4)
                .flat_map(|j| {
                    [
                        (m_element(model, j, false), j),
                        (m_element(model, j, true), j),
                    ]
                })
                .collect();
            for ch in MChar::ALL {
                for (a, ja) in &elements {
                    for (b, jb) in &elements {
                        let prod = a.mul(b);
                        let jp = elements
                            .iter()
                            .find(|(g, _)| *g == prod)
                            .map(|(_, j)| *j)
                            .expect("closed under multiplication");
                        assert_eq!(
                            character_value(ch, model, *ja) * character_value(ch, model, *jb),
                            character_value(ch, model, jp)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn character_spot_values() {
        assert_eq!(character_value(MChar::PM, Model::I, 1), -1);
        assert_eq!(character_value(MChar::MM, Model::II, 2), -1);
        for j in 0..4 {
            assert_eq!(character_value(MChar::PP, Model::I, j), 1);
            assert_eq!(character_value(MChar::PP, Model::II, j), 1);
        }
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(
            charpoly_eplus_eminus(1),
            Poly::from_coeffs(vec![rint(-1), rint(0), rint(1)])
        );
        assert_eq!(
            charpoly_eplus_eminus(2),
            Poly::from_coeffs(vec![rint(0), rint(-4), rint(0), rint(1)])
        );
        // n = 4: x (x^2 - 4)(x^2 - 16)
        let expected = Poly::from_coeffs(vec![
            rint(0),
            rint(64),
            rint(0),
            rint(-20),
            rint(0),
            rint(1),
        ]);
        assert_eq!(charpoly_eplus_eminus(4), expected);
    }
}
