//! Systematic enumeration of bicolored candidates for a root system,
//! classifying each by order, ansatz applicability, constraint satisfaction,
//! invariance, and triviality.

use crate::deform::{build_theta, factorize, verify_constraints, ConstraintReport};
use crate::error::Error;
use crate::reduced::{check_invariance, reduced_root_space};
use crate::ring::RingScalar;
use crate::weyl::{Color, RootSystem};
use rayon::prelude::*;
use serde::Serialize;

pub const RANK_GUARD: usize = 16;

/// One candidate subset pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub v_minus: Vec<usize>,
    pub v_plus: Vec<usize>,
}

/// Classification record for one candidate; fields past an inapplicable
/// ansatz stay absent rather than defaulted.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateClassification {
    pub v_minus: Vec<usize>,
    pub v_plus: Vec<usize>,
    pub order: usize,
    pub ansatz_applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constraints: Option<ConstraintReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trivial: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub det: Option<RingScalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_set_size: Option<usize>,
}

/// All 2^|V-| x 2^|V+| subset pairs, ordered by (minus bitmask, plus bitmask).
pub fn enumerate_candidates(rs: &RootSystem, force: bool) -> Result<Vec<Candidate>, Error> {
    if rs.rank > RANK_GUARD && !force {
        return Err(Error::RankGuard(rs.rank, RANK_GUARD));
    }
    let minus = rs.vertices_of_color(Color::Minus);
    let plus = rs.vertices_of_color(Color::Plus);
    let mut out = Vec::with_capacity(1usize << (minus.len() + plus.len()));
    for mm in 0u64..(1 << minus.len()) {
        for pm in 0u64..(1 << plus.len()) {
            let v_minus = minus
                .iter()
                .enumerate()
                .filter(|(k, _)| mm >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let v_plus = plus
                .iter()
                .enumerate()
                .filter(|(k, _)| pm >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            out.push(Candidate { v_minus, v_plus });
        }
    }
    Ok(out)
}

/// Classify one candidate: factorize, order, and when 4 | order also build
/// theta, verify constraints, compute the reduced space, and check invariance.
pub fn classify(rs: &RootSystem, cand: &Candidate) -> CandidateClassification {
    let fe = factorize(rs, &cand.v_minus, &cand.v_plus)
        .expect("candidate subsets come from the coloring");
    let order = fe.order;
    if order % 4 != 0 {
        return CandidateClassification {
            v_minus: cand.v_minus.clone(),
            v_plus: cand.v_plus.clone(),
            order,
            ansatz_applicable: false,
            constraints: None,
            invariant: None,
            trivial: None,
            det: None,
            root_set_size: None,
        };
    }
    let theta = build_theta(&fe).expect("order divisible by 4");
    let constraints = verify_constraints(&theta, &fe);
    let space = reduced_root_space(rs, &fe, false);
    let inv = check_invariance(rs, &fe, &space);
    CandidateClassification {
        v_minus: cand.v_minus.clone(),
        v_plus: cand.v_plus.clone(),
        order,
        ansatz_applicable: true,
        det: Some(constraints.det_value.clone()),
        invariant: Some(inv.invariant_minus && inv.invariant_plus),
        trivial: Some(theta.is_trivial()),
        root_set_size: Some(space.root_set.len()),
        constraints: Some(constraints),
    }
}

/// Classify every candidate; work runs in parallel but results merge in
/// enumeration order, so reports are byte-identical across runs.
pub fn scan(rs: &RootSystem, force: bool) -> Result<Vec<CandidateClassification>, Error> {
    let cands = enumerate_candidates(rs, force)?;
    Ok(cands.par_iter().map(|c| classify(rs, c)).collect())
}

/// JSON-lines report, one classification per line.
pub fn scan_report(rs: &RootSystem, force: bool) -> Result<String, Error> {
    let rows = scan(rs, force)?;
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(&row)?);
        out.push('\n');
    }
    Ok(out)
}
