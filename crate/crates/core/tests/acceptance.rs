//! Acceptance suite: one test per criterion, each printing a pass line.
//! Symbolic checks are exact; numeric checks carry their stated tolerances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootdeform::{
    build_theta, check_invariance, classify, deform_simple_roots, deformed_space, factorize,
    orbit_table_cells, reduced_root_space, scan_report, verify_constraints, Candidate, CPoly,
    Color, GaussRat, Root, RootSystem, RingScalar, SuperscriptStyle,
};
use std::collections::BTreeSet;

fn e8() -> RootSystem {
    RootSystem::catalog("E8").unwrap()
}

fn paper_element(rs: &RootSystem) -> rootdeform::FactorizedElement {
    factorize(rs, &[3, 5, 7], &[2, 4, 6, 8]).unwrap()
}

/// a + b*c + i*m*kappa with integer a, b, m; the shape of every reference
/// theta entry.
fn entry(a: i64, b: i64, m: i64) -> RingScalar {
    RingScalar {
        p: CPoly::from_coeffs(vec![GaussRat::from_int(a), GaussRat::from_int(b)]),
        q: CPoly::from_coeffs(vec![GaussRat::from_parts(0, 1, m, 1)]),
    }
}

/// The explicit 8x8 deformation matrix, entries as (a, b, m) triples.
fn reference_theta() -> Vec<Vec<RingScalar>> {
    let rows: [[(i64, i64, i64); 8]; 8] = [
        // 1, l, 2l-ik, 3-3c, 3l-ik, 3-3c, 2l-ik, l        (l = 1-c)
        [(1, 0, 0), (1, -1, 0), (2, -2, -1), (3, -3, 0), (3, -3, -1), (3, -3, 0), (2, -2, -1), (1, -1, 0)],
        // 0, c, 0, ik, 2ik, ik, 0, -l
        [(0, 0, 0), (0, 1, 0), (0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 0, 1), (0, 0, 0), (-1, 1, 0)],
        // 0, 0, c-ik, -2ik, -2ik, -2ik, -ik-l, 0
        [(0, 0, 0), (0, 0, 0), (0, 1, -1), (0, 0, -2), (0, 0, -2), (0, 0, -2), (-1, 1, -1), (0, 0, 0)],
        // 0, ik, 2ik, c+2ik, 2ik, 2ik-l, 2ik, ik
        [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 2), (0, 0, 2), (-1, 1, 2), (0, 0, 2), (0, 0, 1)],
        // 0, -2ik, -2ik, -2ik, 2(c-ik)-1, -2ik, -2ik, -2ik
        [(0, 0, 0), (0, 0, -2), (0, 0, -2), (0, 0, -2), (-1, 2, -2), (0, 0, -2), (0, 0, -2), (0, 0, -2)],
        // 0, ik, 2ik, 2ik-l, 2ik, c+2ik, 2ik, ik
        [(0, 0, 0), (0, 0, 1), (0, 0, 2), (-1, 1, 2), (0, 0, 2), (0, 1, 2), (0, 0, 2), (0, 0, 1)],
        // 0, 0, -l-ik, -2ik, -2ik, -2ik, c-ik, 0
        [(0, 0, 0), (0, 0, 0), (-1, 1, -1), (0, 0, -2), (0, 0, -2), (0, 0, -2), (0, 1, -1), (0, 0, 0)],
        // 0, -l, 0, ik, 2ik, ik, 0, c
        [(0, 0, 0), (-1, 1, 0), (0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 0, 1), (0, 0, 0), (0, 1, 0)],
    ];
    rows.iter()
        .map(|row| row.iter().map(|&(a, b, m)| entry(a, b, m)).collect())
        .collect()
}

fn reference_element_matrix() -> Vec<Vec<i64>> {
    vec![
        vec![1, 0, 0, 1, 0, 0, 0, 0],
        vec![0, 0, 1, 1, 0, 0, 0, 0],
        vec![0, -1, -1, -1, 0, 0, 0, 0],
        vec![0, 1, 1, 1, 1, 1, 0, 0],
        vec![0, 0, 0, -1, -1, -1, 0, 0],
        vec![0, 0, 0, 1, 1, 1, 1, 1],
        vec![0, 0, 0, 0, 0, -1, -1, -1],
        vec![0, 0, 0, 0, 0, 1, 1, 0],
    ]
}

#[test]
fn criterion_01_element_reproduction() {
    let rs = e8();
    let w = rs.compose(&[3, 5, 7, 2, 4, 6, 8]).unwrap();
    assert_eq!(w.matrix, reference_element_matrix());
    assert_eq!(w.order().unwrap(), 8);
    println!("criterion 01 PASS: element matrix reproduced entry-for-entry, order 8");
}

#[test]
fn criterion_02_theta_reproduction() {
    let rs = e8();
    let fe = paper_element(&rs);
    let theta = build_theta(&fe).unwrap();
    let expect = reference_theta();
    for i in 0..8 {
        for j in 0..8 {
            assert_eq!(
                theta.mat.0[i][j],
                expect[i][j],
                "entry ({},{})",
                i + 1,
                j + 1
            );
        }
    }
    println!("criterion 02 PASS: all 64 theta entries exact");
}

#[test]
fn criterion_03_constraint_suite() {
    let rs = e8();
    let fe = paper_element(&rs);
    let theta = build_theta(&fe).unwrap();
    let rep = verify_constraints(&theta, &fe);
    assert!(rep.intertwine_minus);
    assert!(rep.intertwine_plus);
    assert!(rep.commutes_with_sigma);
    assert!(rep.antiunitary);
    assert!(rep.det_ok);
    assert!(rep.limit_ok);
    // limit evaluation exact: c = 1 yields the identity over Q(i)
    let limit = theta.mat.eval_limit();
    for i in 0..8 {
        for j in 0..8 {
            let expect = if i == j { GaussRat::one() } else { GaussRat::zero() };
            assert_eq!(limit[i][j], expect);
        }
    }
    println!("criterion 03 PASS: all five constraints hold symbolically, limit identity exact");
}

#[test]
fn criterion_04_deformed_roots() {
    let rs = e8();
    let fe = paper_element(&rs);
    let theta = build_theta(&fe).unwrap();
    let roots = deform_simple_roots(&theta, &rs);
    // coordinates per displayed alpha~_i, encoded as (a, b, m) with
    // value = a + b*c + i*m*kappa
    let z = (0, 0, 0);
    let expect: [[(i64, i64, i64); 8]; 8] = [
        [(1, 0, 0), (1, -1, 0), (2, -2, -1), (3, -3, 0), (3, -3, -1), (3, -3, 0), (2, -2, -1), (1, -1, 0)],
        [z, (0, 1, 0), z, (0, 0, 1), (0, 0, 2), (0, 0, 1), z, (-1, 1, 0)],
        [z, z, (0, 1, -1), (0, 0, -2), (0, 0, -2), (0, 0, -2), (-1, 1, -1), z],
        [z, (0, 0, 1), (0, 0, 2), (0, 1, 2), (0, 0, 2), (-1, 1, 2), (0, 0, 2), (0, 0, 1)],
        [z, (0, 0, -2), (0, 0, -2), (0, 0, -2), (-1, 2, -2), (0, 0, -2), (0, 0, -2), (0, 0, -2)],
        [z, (0, 0, 1), (0, 0, 2), (-1, 1, 2), (0, 0, 2), (0, 1, 2), (0, 0, 2), (0, 0, 1)],
        [z, z, (-1, 1, -1), (0, 0, -2), (0, 0, -2), (0, 0, -2), (0, 1, -1), z],
        [z, (-1, 1, 0), z, (0, 0, 1), (0, 0, 2), (0, 0, 1), z, (0, 1, 0)],
    ];
    for i in 0..8 {
        for j in 0..8 {
            let (a, b, m) = expect[i][j];
            assert_eq!(roots[i][j], entry(a, b, m), "alpha~_{} coordinate {}", i + 1, j + 1);
        }
    }
    println!("criterion 04 PASS: all eight deformed simple roots exact");
}

#[test]
fn criterion_05_orbit_table() {
    let rs = e8();
    let fe = paper_element(&rs);
    let space = reduced_root_space(&rs, &fe, false);
    let cells = orbit_table_cells(&space, SuperscriptStyle::Plain).unwrap();
    let expect: [[&str; 8]; 7] = [
        ["1;4", "3;4", "-2;3;4", "2;3;4;5;6", "-4;5;6", "4;5;6;7;8", "-6;7;8", "6;7"],
        ["1;2;3;4^2;5;6", "5;6", "-3;4;5;6", "3;4;5;6;7;8", "-2;3;4;5;6;7;8", "2;3;4;5;6;7", "-4;5;6;7", "4;5"],
        ["1;2;3^2;4^3;5^2;6^2;7;8", "7;8", "-5;6;7;8", "5;6;7", "-3;4;5;6;7", "3;4;5", "-2;3;4;5", "2;3"],
        ["1;2;3^2;4^3;5^3;6^3;7^2;8", "-8", "-7", "-6", "-5", "-4", "-3", "-2"],
        ["1;2;3^2;4^3;5^3;6^2;7^2;8", "-6;7", "6;7;8", "-4;5;6;7;8", "4;5;6", "-2;3;4;5;6", "2;3;4", "-3;4"],
        ["1;2;3^2;4^2;5^2;6;7", "-4;5", "4;5;6;7", "-2;3;4;5;6;7", "2;3;4;5;6;7;8", "-3;4;5;6;7;8", "3;4;5;6", "-5;6"],
        ["1;3;4;5", "-2;3", "2;3;4;5", "-3;4;5", "3;4;5;6;7", "-5;6;7", "5;6;7;8", "-7;8"],
    ];
    assert_eq!(cells.len(), 7);
    for n in 0..7 {
        for i in 0..8 {
            assert_eq!(cells[n][i], expect[n][i], "cell (sigma~^{}, alpha_{})", n + 1, i + 1);
        }
    }
    // in-text expansion anchors
    assert_eq!(space.orbits[0][3], Root(vec![1, 1, 2, 3, 2, 2, 1, 1]));
    assert_eq!(space.orbits[2][2], Root(vec![0, 0, -1, -1, -1, -1, 0, 0]));
    println!("criterion 05 PASS: all 56 orbit-table cells match in compact notation");
}

#[test]
fn criterion_06_invariance() {
    let rs = e8();
    let fe = paper_element(&rs);
    let space = reduced_root_space(&rs, &fe, false);
    let rep = check_invariance(&rs, &fe, &space);
    assert!(rep.invariant_minus);
    assert!(rep.invariant_plus);
    assert_eq!(space.root_set.len(), 64);

    let r = |v: [i64; 8]| Root(v.to_vec());
    // sigma~_- relations: image and (power, seed) witness where referenced
    let minus_expect: [([i64; 8], Option<(usize, usize)>); 8] = [
        ([1, 0, 0, 0, 0, 0, 0, 0], Some((0, 1))),
        ([0, 1, 1, 0, 0, 0, 0, 0], Some((3, 8))),
        ([0, 0, -1, 0, 0, 0, 0, 0], None),
        ([0, 0, 1, 1, 1, 0, 0, 0], Some((3, 6))),
        ([0, 0, 0, 0, -1, 0, 0, 0], None),
        ([0, 0, 0, 0, 1, 1, 1, 0], Some((3, 4))),
        ([0, 0, 0, 0, 0, 0, -1, 0], None),
        ([0, 0, 0, 0, 0, 0, 1, 1], Some((3, 2))),
    ];
    for (i, (img, wit)) in minus_expect.iter().enumerate() {
        let w = &rep.witnesses_minus[i];
        assert_eq!(w.image, r(*img), "sigma~_- alpha_{}", i + 1);
        if let Some(expected) = wit {
            assert_eq!(w.identity, Some(*expected), "witness for sigma~_- alpha_{}", i + 1);
        }
        assert!(space.root_set.contains(&w.image));
    }
    let plus_expect: [([i64; 8], Option<(usize, usize)>); 8] = [
        ([1, 0, 0, 1, 0, 0, 0, 0], Some((1, 1))),
        ([0, -1, 0, 0, 0, 0, 0, 0], None),
        ([0, 1, 1, 1, 0, 0, 0, 0], Some((5, 7))),
        ([0, 0, 0, -1, 0, 0, 0, 0], None),
        ([0, 0, 0, 1, 1, 1, 0, 0], Some((5, 5))),
        ([0, 0, 0, 0, 0, -1, 0, 0], None),
        ([0, 0, 0, 0, 0, 1, 1, 1], Some((5, 3))),
        ([0, 0, 0, 0, 0, 0, 0, -1], None),
    ];
    for (i, (img, wit)) in plus_expect.iter().enumerate() {
        let w = &rep.witnesses_plus[i];
        assert_eq!(w.image, r(*img), "sigma~_+ alpha_{}", i + 1);
        if let Some(expected) = wit {
            assert_eq!(w.identity, Some(*expected), "witness for sigma~_+ alpha_{}", i + 1);
        }
        assert!(space.root_set.contains(&w.image));
    }
    println!("criterion 06 PASS: all invariance relations and witnesses reproduced, 64 roots");
}

#[test]
fn criterion_07_order_scan() {
    let rs = e8();
    let cases: [(&[usize], &[usize], usize); 4] = [
        (&[1, 3, 7], &[4, 6, 8], 4),
        (&[1, 3, 5, 7], &[4, 6, 8], 12),
        (&[1, 3, 7], &[2, 4, 6, 8], 20),
        (&[1, 3, 5, 7], &[2, 4, 8], 24),
    ];
    for (vm, vp, h) in cases {
        let rec = classify(
            &rs,
            &Candidate {
                v_minus: vm.to_vec(),
                v_plus: vp.to_vec(),
            },
        );
        assert_eq!(rec.order, h, "minus {:?} plus {:?}", vm, vp);
        assert!(rec.ansatz_applicable);
    }
    let rec = classify(
        &rs,
        &Candidate {
            v_minus: vec![1, 3, 5, 7],
            v_plus: vec![2, 4, 6, 8],
        },
    );
    assert_eq!(rec.order, 30);
    assert!(!rec.ansatz_applicable);

    let start = std::time::Instant::now();
    let report = scan_report(&rs, false).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(report.lines().count(), 256);
    assert!(
        elapsed.as_secs() < 60,
        "scan took {:?}, budget is 60 s",
        elapsed
    );
    println!(
        "criterion 07 PASS: orders 4/12/20/24 on listed subsets, order 30 inapplicable, 256-candidate scan in {:?}",
        elapsed
    );
}

#[test]
fn criterion_08_oracle_equivalence() {
    for name in ["A2", "A3", "D4", "E6", "E7", "E8", "B2", "G2"] {
        let rs = RootSystem::catalog(name).unwrap();
        let vm = rs.vertices_of_color(Color::Minus);
        let vp = rs.vertices_of_color(Color::Plus);
        let fe = factorize(&rs, &vm, &vp).unwrap();
        assert_eq!(fe.order, rs.coxeter_number, "{}", name);
        // gamma seeds: Coxeter orbits through gamma_i = c_i alpha_i partition
        // the full root system
        let space = reduced_root_space(&rs, &fe, true);
        assert_eq!(space.multiset_size(), rs.rank * rs.coxeter_number, "{}", name);
        assert_eq!(&space.root_set, rs.all_roots(), "{}", name);
    }
    // spot counts
    for (name, count) in [("A2", 6), ("G2", 12), ("E8", 240)] {
        assert_eq!(RootSystem::catalog(name).unwrap().all_roots().len(), count);
    }
    println!("criterion 08 PASS: full-Coxeter reduced spaces equal the brute-force root sets");
}

fn random_scalar(rng: &mut ChaCha8Rng) -> RingScalar {
    let poly = |rng: &mut ChaCha8Rng| {
        let deg = rng.gen_range(0..4usize);
        CPoly::from_coeffs(
            (0..deg)
                .map(|_| {
                    GaussRat::from_parts(
                        rng.gen_range(-6..7),
                        rng.gen_range(1..4),
                        rng.gen_range(-6..7),
                        rng.gen_range(1..4),
                    )
                })
                .collect(),
        )
    };
    RingScalar {
        p: poly(rng),
        q: poly(rng),
    }
}

#[test]
fn criterion_09_property_suite() {
    // ring axioms and conjugation homomorphism, 10^3 randomized elements
    let mut rng = ChaCha8Rng::seed_from_u64(20260823);
    for _ in 0..1000 {
        let a = random_scalar(&mut rng);
        let b = random_scalar(&mut rng);
        let c = random_scalar(&mut rng);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        assert_eq!(a.conj().conj(), a);
        // eval homomorphism within 1e-9
        let eps = rng.gen_range(-2.0..2.0);
        let lhs = (&a * &b).eval(eps);
        let rhs = a.eval(eps) * b.eval(eps);
        assert!((lhs - rhs).norm() < 1e-9);
    }

    // reflection involutions and same-color commutation, exhaustively
    for name in ["A1", "A2", "A3", "A5", "D4", "D5", "E6", "E7", "E8", "B2", "G2"] {
        let rs = RootSystem::catalog(name).unwrap();
        for i in 1..=rs.rank {
            let s = rs.simple_reflection(i).unwrap();
            assert!(s.mul(&s).is_identity(), "{} sigma_{}", name, i);
        }
        for i in 1..=rs.rank {
            for j in 1..=rs.rank {
                if rs.color(i) == rs.color(j) {
                    let si = rs.simple_reflection(i).unwrap();
                    let sj = rs.simple_reflection(j).unwrap();
                    assert_eq!(si.mul(&sj).matrix, sj.mul(&si).matrix, "{} [{},{}]", name, i, j);
                }
            }
        }
    }

    // antilinear operators act as involutive permutations of the deformed set
    let rs = e8();
    let fe = paper_element(&rs);
    let theta = build_theta(&fe).unwrap();
    let space = reduced_root_space(&rs, &fe, false);
    let def = deformed_space(&theta, &space);
    for eps in [0.3, 1.0, 2.0] {
        let num = def.numeric(eps);
        for factor in [&fe.sigma_minus, &fe.sigma_plus] {
            let perm = rootdeform::reduced::permutation_under(factor, &num, 1e-9)
                .unwrap_or_else(|| panic!("no permutation at eps = {}", eps));
            for (r, &k) in perm.iter().enumerate() {
                assert_eq!(perm[k], r, "involution fails at eps = {}", eps);
            }
        }
    }
    println!("criterion 09 PASS: ring axioms, homomorphisms, reflections, antilinear involutions");
}

#[test]
fn criterion_10_determinism() {
    let rs = e8();
    let a = scan_report(&rs, false).unwrap();
    let b = scan_report(&rs, false).unwrap();
    assert_eq!(a.as_bytes(), b.as_bytes());
    println!("criterion 10 PASS: repeated scans byte-identical");
}

#[test]
fn reduced_set_membership_oracle() {
    // every reduced root lies inside the brute-force root system
    let rs = e8();
    let fe = paper_element(&rs);
    let space = reduced_root_space(&rs, &fe, false);
    let all: &BTreeSet<Root> = rs.all_roots();
    for r in &space.root_set {
        assert!(all.contains(r));
    }
}
