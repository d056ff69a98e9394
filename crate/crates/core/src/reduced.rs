//! Reduced Coxeter orbits, the reduced root space, invariance under the
//! involutory factors, and the deformed root space.

use crate::deform::{DeformMatrix, FactorizedElement};
use crate::ring::RingScalar;
use crate::weyl::{Root, RootSystem};
use num::complex::Complex64;
use serde::Serialize;
use std::collections::BTreeSet;

/// Orbits of sigma~ through the simple roots, and their union.
#[derive(Clone, Debug, Serialize)]
pub struct ReducedRootSpace {
    /// One orbit per vertex, each of length exactly h~.
    pub orbits: Vec<Vec<Root>>,
    /// Deduplicated union of the orbits.
    pub root_set: BTreeSet<Root>,
    /// Order h~ of the generating element.
    pub order: usize,
    /// Rank of the ambient system.
    pub rank: usize,
    /// Whether orbits were seeded with gamma_i = c_i alpha_i instead of alpha_i.
    pub use_gamma: bool,
}

impl ReducedRootSpace {
    /// Size counted with multiplicity: rank * h~.
    pub fn multiset_size(&self) -> usize {
        self.rank * self.order
    }
}

/// The orbit {gamma_i, sigma~ gamma_i, ..., sigma~^{h-1} gamma_i}.
/// Seeds with gamma_i = c_i alpha_i when `use_gamma`, else alpha_i.
pub fn reduced_orbit(
    rs: &RootSystem,
    fe: &FactorizedElement,
    i: usize,
    use_gamma: bool,
) -> Vec<Root> {
    let seed = if use_gamma {
        Root::simple(rs.rank, i).scale(rs.sign(i))
    } else {
        Root::simple(rs.rank, i)
    };
    let mut orbit = Vec::with_capacity(fe.order);
    let mut cur = seed;
    for _ in 0..fe.order {
        orbit.push(cur.clone());
        cur = cur.apply(&fe.sigma);
    }
    orbit
}

/// All orbits plus the deduplicated root set.
pub fn reduced_root_space(
    rs: &RootSystem,
    fe: &FactorizedElement,
    use_gamma: bool,
) -> ReducedRootSpace {
    let orbits: Vec<Vec<Root>> = (1..=rs.rank)
        .map(|i| reduced_orbit(rs, fe, i, use_gamma))
        .collect();
    let root_set = orbits.iter().flatten().cloned().collect();
    ReducedRootSpace {
        orbits,
        root_set,
        order: fe.order,
        rank: rs.rank,
        use_gamma,
    }
}

/// Per-factor invariance verdict with witness identities for the simple roots.
#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub invariant_minus: bool,
    pub invariant_plus: bool,
    /// For each simple root i (index order): the image sigma~_pm(alpha_i) and,
    /// where it lies in the reduced space, the first (n, j) with
    /// sigma~_pm(alpha_i) = sigma~^n(seed_j).
    pub witnesses_minus: Vec<Witness>,
    pub witnesses_plus: Vec<Witness>,
    /// Roots of the reduced space mapped outside it, per factor.
    pub offending_minus: Vec<Root>,
    pub offending_plus: Vec<Root>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub vertex: usize,
    pub image: Root,
    /// (power n, seed vertex j), searched n ascending then j ascending.
    pub identity: Option<(usize, usize)>,
}

/// Test sigma~_pm Delta~ = Delta~ as exact set equality for both factors.
pub fn check_invariance(
    rs: &RootSystem,
    fe: &FactorizedElement,
    space: &ReducedRootSpace,
) -> InvarianceReport {
    let check = |factor: &crate::weyl::WeylElement| -> (bool, Vec<Witness>, Vec<Root>) {
        let image_set: BTreeSet<Root> = space.root_set.iter().map(|r| r.apply(factor)).collect();
        let invariant = image_set == space.root_set;
        let offending: Vec<Root> = space
            .root_set
            .iter()
            .filter(|r| !space.root_set.contains(&r.apply(factor)))
            .cloned()
            .collect();
        let witnesses = (1..=rs.rank)
            .map(|i| {
                let image = Root::simple(rs.rank, i).apply(factor);
                let mut identity = None;
                'outer: for n in 0..space.order {
                    for (j0, orbit) in space.orbits.iter().enumerate() {
                        if orbit[n] == image {
                            identity = Some((n, j0 + 1));
                            break 'outer;
                        }
                    }
                }
                Witness {
                    vertex: i,
                    image,
                    identity,
                }
            })
            .collect();
        (invariant, witnesses, offending)
    };
    let (invariant_minus, witnesses_minus, offending_minus) = check(&fe.sigma_minus);
    let (invariant_plus, witnesses_plus, offending_plus) = check(&fe.sigma_plus);
    InvarianceReport {
        invariant_minus,
        invariant_plus,
        witnesses_minus,
        witnesses_plus,
        offending_minus,
        offending_plus,
    }
}

/// The deformed root space: theta-images of the reduced roots, symbolic plus
/// an optional numeric view.
#[derive(Clone, Debug)]
pub struct DeformedSpace {
    /// Roots of the reduced set in their canonical order.
    pub base_roots: Vec<Root>,
    /// Symbolic coordinates of theta(root) over the simple-root basis.
    pub symbolic: Vec<Vec<RingScalar>>,
}

impl DeformedSpace {
    pub fn len(&self) -> usize {
        self.base_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base_roots.is_empty()
    }

    /// Numeric coordinates at real eps.
    pub fn numeric(&self, eps: f64) -> Vec<Vec<Complex64>> {
        self.symbolic
            .iter()
            .map(|row| row.iter().map(|x| x.eval(eps)).collect())
            .collect()
    }
}

/// Replace every root of the reduced set by its theta-image.
pub fn deformed_space(theta: &DeformMatrix, space: &ReducedRootSpace) -> DeformedSpace {
    let base_roots: Vec<Root> = space.root_set.iter().cloned().collect();
    let n = space.rank;
    let symbolic = base_roots
        .iter()
        .map(|r| {
            (0..n)
                .map(|j| {
                    let mut acc = RingScalar::zero();
                    for i in 0..n {
                        if r.0[i] != 0 {
                            let term = &RingScalar::from_int(r.0[i]) * &theta.mat.0[i][j];
                            acc = &acc + &term;
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    DeformedSpace {
        base_roots,
        symbolic,
    }
}

/// Apply the antilinear operator x -> sigma~_pm(conj(x)) to a numeric vector.
pub fn antilinear_apply(factor: &crate::weyl::WeylElement, x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|i| x[i].conj() * factor.matrix[i][j] as f64)
                .sum()
        })
        .collect()
}

/// Check that an antilinear operator permutes the numeric root set within
/// `tol`, returning the permutation, or None when some image has no match.
pub fn permutation_under(
    factor: &crate::weyl::WeylElement,
    numeric: &[Vec<Complex64>],
    tol: f64,
) -> Option<Vec<usize>> {
    let dist = |a: &[Complex64], b: &[Complex64]| -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).norm_sqr())
            .sum::<f64>()
            .sqrt()
    };
    let mut used = vec![false; numeric.len()];
    let mut perm = Vec::with_capacity(numeric.len());
    for row in numeric {
        let image = antilinear_apply(factor, row);
        let mut best: Option<(usize, f64)> = None;
        for (k, cand) in numeric.iter().enumerate() {
            if used[k] {
                continue;
            }
            let d = dist(&image, cand);
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((k, d));
            }
        }
        match best {
            Some((k, d)) if d < tol => {
                used[k] = true;
                perm.push(k);
            }
            _ => return None,
        }
    }
    Some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::{build_theta, factorize};

    fn setup() -> (RootSystem, FactorizedElement) {
        let rs = RootSystem::catalog("E8").unwrap();
        let fe = factorize(&rs, &[3, 5, 7], &[2, 4, 6, 8]).unwrap();
        (rs, fe)
    }

    fn root(coords: [i64; 8]) -> Root {
        Root(coords.to_vec())
    }

    #[test]
    fn orbit_anchor_entries() {
        let (rs, fe) = setup();
        // sigma~^3(alpha_1) = a1+a2+2a3+3a4+2a5+2a6+a7+a8
        let o1 = reduced_orbit(&rs, &fe, 1, false);
        assert_eq!(o1[3], root([1, 1, 2, 3, 2, 2, 1, 1]));
        // sigma~^2(alpha_3) = -(a3+a4+a5+a6)
        let o3 = reduced_orbit(&rs, &fe, 3, false);
        assert_eq!(o3[2], root([0, 0, -1, -1, -1, -1, 0, 0]));
        // sigma~^4(alpha_2) = -alpha_8
        let o2 = reduced_orbit(&rs, &fe, 2, false);
        assert_eq!(o2[4], root([0, 0, 0, 0, 0, 0, 0, -1]));
    }

    #[test]
    fn orbit_closes_at_order() {
        let (rs, fe) = setup();
        for i in 1..=8 {
            let orbit = reduced_orbit(&rs, &fe, i, false);
            assert_eq!(orbit.len(), 8);
            assert_eq!(orbit[7].apply(&fe.sigma), orbit[0]);
        }
    }

    #[test]
    fn e8_example_has_64_roots() {
        let (rs, fe) = setup();
        let space = reduced_root_space(&rs, &fe, false);
        assert_eq!(space.root_set.len(), 64);
        assert_eq!(space.multiset_size(), 64);
        // all orbit entries lie in the full root system
        let all = rs.all_roots();
        for orbit in &space.orbits {
            for r in orbit {
                assert!(all.contains(r));
            }
        }
    }

    #[test]
    fn gamma_seed_covers_same_set_up_to_sign() {
        let (rs, fe) = setup();
        let a = reduced_root_space(&rs, &fe, false);
        let b = reduced_root_space(&rs, &fe, true);
        assert_eq!(a.root_set.len(), b.root_set.len());
        let abs_set = |s: &ReducedRootSpace| -> BTreeSet<Root> {
            s.root_set
                .iter()
                .map(|r| if r.height() < 0 { r.neg() } else { r.clone() })
                .collect()
        };
        assert_eq!(abs_set(&a), abs_set(&b));
    }

    #[test]
    fn full_coxeter_recovers_everything() {
        let rs = RootSystem::catalog("E8").unwrap();
        let fe = factorize(&rs, &[1, 3, 5, 7], &[2, 4, 6, 8]).unwrap();
        let space = reduced_root_space(&rs, &fe, false);
        assert_eq!(space.multiset_size(), 240);
        assert_eq!(&space.root_set, rs.all_roots());
    }

    #[test]
    fn identity_element_gives_simple_roots() {
        let rs = RootSystem::catalog("E8").unwrap();
        let fe = factorize(&rs, &[], &[]).unwrap();
        let space = reduced_root_space(&rs, &fe, false);
        let expect: BTreeSet<Root> = (1..=8).map(|i| Root::simple(8, i)).collect();
        assert_eq!(space.root_set, expect);
    }

    #[test]
    fn invariance_witnesses_match_reference() {
        let (rs, fe) = setup();
        let space = reduced_root_space(&rs, &fe, false);
        let rep = check_invariance(&rs, &fe, &space);
        assert!(rep.invariant_minus);
        assert!(rep.invariant_plus);
        assert!(rep.offending_minus.is_empty());
        assert!(rep.offending_plus.is_empty());
        // sigma~_- alpha_4 = a3+a4+a5 = sigma~^3 alpha_6
        let w4 = &rep.witnesses_minus[3];
        assert_eq!(w4.image, root([0, 0, 1, 1, 1, 0, 0, 0]));
        assert_eq!(w4.identity, Some((3, 6)));
        // sigma~_+ alpha_1 = a1+a4 = sigma~ alpha_1
        let w1 = &rep.witnesses_plus[0];
        assert_eq!(w1.image, root([1, 0, 0, 1, 0, 0, 0, 0]));
        assert_eq!(w1.identity, Some((1, 1)));
        // sigma~_+ alpha_8 = -alpha_8
        let w8 = &rep.witnesses_plus[7];
        assert_eq!(w8.image, root([0, 0, 0, 0, 0, 0, 0, -1]));
    }

    #[test]
    fn non_invariant_candidate_reports_offenders() {
        // found by scanning: not every candidate keeps the reduced set stable
        let rs = RootSystem::catalog("E8").unwrap();
        let mut found = false;
        'outer: for mm in 0u32..16 {
            for pm in 0u32..16 {
                let vm: Vec<usize> = [1usize, 3, 5, 7]
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mm >> k & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let vp: Vec<usize> = [2usize, 4, 6, 8]
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| pm >> k & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let fe = factorize(&rs, &vm, &vp).unwrap();
                let space = reduced_root_space(&rs, &fe, false);
                let rep = check_invariance(&rs, &fe, &space);
                if !rep.invariant_minus || !rep.invariant_plus {
                    assert!(!rep.offending_minus.is_empty() || !rep.offending_plus.is_empty());
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(found, "expected at least one non-invariant candidate");
    }

    #[test]
    fn deformed_space_limits_and_counts() {
        let (rs, fe) = setup();
        let theta = build_theta(&fe).unwrap();
        let space = reduced_root_space(&rs, &fe, false);
        let def = deformed_space(&theta, &space);
        assert_eq!(def.len(), 64);
        // eps = 0 reproduces the undeformed roots exactly
        let num0 = def.numeric(0.0);
        for (row, base) in num0.iter().zip(&def.base_roots) {
            for (z, &b) in row.iter().zip(&base.0) {
                assert!((z.re - b as f64).abs() < 1e-12);
                assert!(z.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn antilinear_operators_permute_deformed_set() {
        let (rs, fe) = setup();
        let theta = build_theta(&fe).unwrap();
        let space = reduced_root_space(&rs, &fe, false);
        let def = deformed_space(&theta, &space);
        let num = def.numeric(1.0);
        for factor in [&fe.sigma_minus, &fe.sigma_plus] {
            let perm = permutation_under(factor, &num, 1e-6).expect("must permute");
            // applying twice is the identity permutation
            let mut twice: Vec<usize> = perm.iter().map(|&k| perm[k]).collect();
            let ident: Vec<usize> = (0..perm.len()).collect();
            assert_eq!(twice, ident);
            twice.clear();
        }
    }
}
