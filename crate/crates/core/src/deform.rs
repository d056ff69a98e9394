//! Deformation matrices built from factorized Weyl-group elements, exact
//! verification of the five defining constraints, and deformed simple roots.

use crate::error::Error;
use crate::ring::{GaussRat, RingMatrix, RingScalar};
use crate::weyl::{Color, RootSystem, WeylElement};
use serde::Serialize;
use std::collections::BTreeSet;

/// An element written as sigma_minus * sigma_plus, with each factor a product
/// of commuting simple reflections of one color. Both factors are involutions.
#[derive(Clone, Debug)]
pub struct FactorizedElement {
    pub v_minus: BTreeSet<usize>,
    pub v_plus: BTreeSet<usize>,
    pub sigma_minus: WeylElement,
    pub sigma_plus: WeylElement,
    pub sigma: WeylElement,
    pub order: usize,
}

/// Build a factorized element from vertex subsets of the two colors.
pub fn factorize(
    rs: &RootSystem,
    v_minus: &[usize],
    v_plus: &[usize],
) -> Result<FactorizedElement, Error> {
    for &i in v_minus {
        if i == 0 || i > rs.rank {
            return Err(Error::IndexOutOfRange(i, rs.rank));
        }
        if rs.color(i) != Color::Minus {
            return Err(Error::WrongColor(i));
        }
    }
    for &i in v_plus {
        if i == 0 || i > rs.rank {
            return Err(Error::IndexOutOfRange(i, rs.rank));
        }
        if rs.color(i) != Color::Plus {
            return Err(Error::WrongColor(i));
        }
    }
    let v_minus: BTreeSet<usize> = v_minus.iter().copied().collect();
    let v_plus: BTreeSet<usize> = v_plus.iter().copied().collect();
    let wm: Vec<usize> = v_minus.iter().copied().collect();
    let wp: Vec<usize> = v_plus.iter().copied().collect();
    let sigma_minus = rs.compose(&wm)?;
    let sigma_plus = rs.compose(&wp)?;
    let sigma = sigma_minus.mul(&sigma_plus);
    let order = sigma.order()?;
    Ok(FactorizedElement {
        v_minus,
        v_plus,
        sigma_minus,
        sigma_plus,
        sigma,
        order,
    })
}

/// Exponent placement in the deformation ansatz.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AnsatzVariant {
    /// Real shift at power h/2, imaginary part at powers +-h/4.  This is the
    /// assignment that reproduces the explicit E8 matrix at h = 8.
    Standard,
    /// Real shift at power h/4, imaginary part at powers +-h/2.  Kept for
    /// comparison; the imaginary part cancels identically because sigma^{h/2}
    /// is an involution.
    Literal,
}

/// Matrix over R sending simple roots to deformed simple roots, row i holding
/// the coordinates of the image of alpha_{i+1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeformMatrix {
    pub mat: RingMatrix,
}

impl DeformMatrix {
    pub fn size(&self) -> usize {
        self.mat.size()
    }

    pub fn entry(&self, i: usize, j: usize) -> &RingScalar {
        &self.mat.0[i - 1][j - 1]
    }

    pub fn identity(n: usize) -> Self {
        DeformMatrix {
            mat: RingMatrix::identity(n),
        }
    }

    /// All kappa-components vanish: no root acquires an imaginary part.
    pub fn is_trivial(&self) -> bool {
        self.mat
            .0
            .iter()
            .all(|row| row.iter().all(RingScalar::is_kappa_free))
    }

    /// Numeric matrix at real eps, each entry as [re, im].
    pub fn eval_pairs(&self, eps: f64) -> Vec<Vec<[f64; 2]>> {
        self.mat
            .eval(eps)
            .into_iter()
            .map(|row| row.into_iter().map(|z| [z.re, z.im]).collect())
            .collect()
    }

    pub fn to_json_rows(&self) -> Vec<Vec<RingScalar>> {
        self.mat.0.clone()
    }
}

/// theta = c*I + (1-c)*sigma^{h/2} + i*kappa*(sigma^{h/4} - sigma^{-h/4}).
///
/// Requires 4 | h; the matrix is a polynomial in sigma, so it commutes with
/// sigma by construction.
pub fn build_theta(fe: &FactorizedElement) -> Result<DeformMatrix, Error> {
    build_theta_variant(fe, AnsatzVariant::Standard)
}

pub fn build_theta_variant(
    fe: &FactorizedElement,
    variant: AnsatzVariant,
) -> Result<DeformMatrix, Error> {
    let h = fe.order;
    if h % 4 != 0 {
        return Err(Error::AnsatzInapplicable(h));
    }
    let (real_pow, imag_pow) = match variant {
        AnsatzVariant::Standard => (h / 2, h / 4),
        AnsatzVariant::Literal => (h / 4, h / 2),
    };
    let real_shift = fe.sigma.pow(real_pow);
    let imag_plus = fe.sigma.pow(imag_pow);
    let imag_minus = fe.sigma.pow(h - imag_pow);

    let n = fe.sigma.rank();
    let c = RingScalar::c();
    let lam = RingScalar::lambda0();
    let ik = &RingScalar::i() * &RingScalar::kappa();

    let diff: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| imag_plus.matrix[i][j] - imag_minus.matrix[i][j])
                .collect()
        })
        .collect();

    let mat = RingMatrix::identity(n)
        .scale(&c)
        .add(&RingMatrix::from_int_matrix(&real_shift.matrix).scale(&lam))
        .add(&RingMatrix::from_int_matrix(&diff).scale(&ik));
    Ok(DeformMatrix { mat })
}

/// Exact verdicts for the five defining constraints.
#[derive(Clone, Debug, Serialize)]
pub struct ConstraintReport {
    pub intertwine_minus: bool,
    pub intertwine_plus: bool,
    pub commutes_with_sigma: bool,
    pub antiunitary: bool,
    pub det_value: RingScalar,
    pub det_ok: bool,
    pub limit_ok: bool,
}

impl ConstraintReport {
    pub fn all_pass(&self) -> bool {
        self.intertwine_minus
            && self.intertwine_plus
            && self.commutes_with_sigma
            && self.antiunitary
            && self.det_ok
            && self.limit_ok
    }
}

/// Check all five constraints symbolically over R.
pub fn verify_constraints(theta: &DeformMatrix, fe: &FactorizedElement) -> ConstraintReport {
    let t = &theta.mat;
    let tc = t.conj();
    let sm = RingMatrix::from_int_matrix(&fe.sigma_minus.matrix);
    let sp = RingMatrix::from_int_matrix(&fe.sigma_plus.matrix);
    let s = RingMatrix::from_int_matrix(&fe.sigma.matrix);

    // theta^* sigma_pm = sigma_pm theta, in row convention: S.conj(T) = T.S
    let intertwine_minus = sm.mul(&tc) == t.mul(&sm);
    let intertwine_plus = sp.mul(&tc) == t.mul(&sp);
    let commutes_with_sigma = t.mul(&s) == s.mul(&t);
    let antiunitary = tc.mul(t).is_identity();
    let det_value = t.det();
    let det_ok = det_value.is_plus_minus_one();

    let limit = t.eval_limit();
    let n = t.size();
    let limit_ok = (0..n).all(|i| {
        (0..n).all(|j| {
            let expect = if i == j {
                GaussRat::one()
            } else {
                GaussRat::zero()
            };
            limit[i][j] == expect
        })
    });

    ConstraintReport {
        intertwine_minus,
        intertwine_plus,
        commutes_with_sigma,
        antiunitary,
        det_value,
        det_ok,
        limit_ok,
    }
}

/// Deformed simple roots alpha~_i = theta(alpha_i) as RingScalar coordinate
/// vectors over the simple-root basis (the rows of theta).
pub fn deform_simple_roots(theta: &DeformMatrix, rs: &RootSystem) -> Vec<Vec<RingScalar>> {
    assert_eq!(theta.size(), rs.rank, "dimension mismatch");
    theta.mat.0.clone()
}
