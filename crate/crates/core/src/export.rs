//! Numeric export of deformed root data for downstream model studies.
//! No dynamics are solved here; the optional potential value is a plumbing
//! check on a single sample point.

use crate::deform::DeformMatrix;
use crate::error::Error;
use crate::reduced::{deformed_space, ReducedRootSpace};
use crate::weyl::RootSystem;
use num::complex::Complex64;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Calogero,
    Toda,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelParams {
    /// Oscillator frequency (calogero).
    pub omega: f64,
    /// Uniform coupling g assigned to every root (calogero).
    pub coupling: f64,
    /// Mass parameter (toda).
    pub mass: f64,
    /// Coupling beta (toda).
    pub beta: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            omega: 1.0,
            coupling: 1.0,
            mass: 1.0,
            beta: 1.0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelExport {
    pub model: ModelKind,
    pub system: String,
    pub epsilon: f64,
    pub order: usize,
    pub v_minus: Vec<usize>,
    pub v_plus: Vec<usize>,
    pub params: ModelParams,
    /// Complex coordinates of the deformed root space, entries as [re, im].
    pub roots: Vec<Vec<[f64; 2]>>,
    /// Deformed simple roots, entries as [re, im].
    pub simple_roots: Vec<Vec<[f64; 2]>>,
    /// Integer marks (highest-root coordinates) with n0 = 1 prepended.
    /// The affine Toda sum runs over i = 0..rank; included as metadata only.
    pub marks: Vec<i64>,
    pub marks_note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_point: Option<Vec<f64>>,
    /// Potential value at the sample point as [re, im], when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub potential: Option<[f64; 2]>,
}

fn pairs(rows: Vec<Vec<Complex64>>) -> Vec<Vec<[f64; 2]>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

/// Build the export record. For calogero with a sample point, evaluates
/// V(q) = (omega^2/4) sum (a~.q)^2 + sum g / (a~.q)^2 over the deformed set.
#[allow(clippy::too_many_arguments)]
pub fn export_model(
    rs: &RootSystem,
    space: &ReducedRootSpace,
    theta: &DeformMatrix,
    v_minus: &[usize],
    v_plus: &[usize],
    epsilon: f64,
    model: ModelKind,
    params: ModelParams,
    sample_point: Option<Vec<f64>>,
) -> Result<ModelExport, Error> {
    let def = deformed_space(theta, space);
    let roots_num = def.numeric(epsilon);
    let simple_num: Vec<Vec<Complex64>> = theta.mat.eval(epsilon);

    let mut marks = vec![1i64];
    marks.extend(rs.highest_root().0.iter().copied());

    let potential = match (&model, &sample_point) {
        (ModelKind::Calogero, Some(q)) => {
            if q.len() != rs.rank {
                return Err(Error::Usage(format!(
                    "sample point must have {} coordinates",
                    rs.rank
                )));
            }
            let mut v = Complex64::new(0.0, 0.0);
            for row in &roots_num {
                let dot: Complex64 = row
                    .iter()
                    .zip(q)
                    .map(|(z, &x)| z * x)
                    .sum();
                if dot.norm() < 1e-12 {
                    return Err(Error::SingularSamplePoint(format!("{:?}", row)));
                }
                v += dot * dot * (params.omega * params.omega / 4.0);
                v += params.coupling / (dot * dot);
            }
            Some([v.re, v.im])
        }
        _ => None,
    };

    Ok(ModelExport {
        model,
        system: rs.name.clone(),
        epsilon,
        order: space.order,
        v_minus: v_minus.to_vec(),
        v_plus: v_plus.to_vec(),
        params,
        roots: pairs(roots_num),
        simple_roots: pairs(simple_num),
        marks,
        marks_note: "integer marks of the highest root with n0 = 1; \
                     exported as metadata, no model properties are derived"
            .into(),
        sample_point,
        potential,
    })
}
