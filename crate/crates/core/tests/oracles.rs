mod common;

use std::collections::BTreeSet;

use cohomotopy::abelian::{
    ext_group, extensions, groups_of_order, hom_group, integer_kernel, smith_normal_form, subgroup_types, AbelianGroup,
    IntegerMatrix,
};
use cohomotopy::rpcohomology::{binomial_mod2, cohomology_rp, CoefficientGroup};
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::*;

fn g(s: &str) -> AbelianGroup {
    s.parse().unwrap()
}

/// Unimodular iff the Smith form is the identity.
fn is_unimodular(m: &IntegerMatrix) -> bool {
    let s = smith_normal_form(m);
    s.invariants.len() == m.rows() && s.invariants.iter().all(|&x| x == 1)
}

#[test]
fn smith_form_matches_determinantal_divisors() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..400 {
        let rows = random_matrix(&mut rng, 5, 12);
        let m = IntegerMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        let engine: Vec<i64> = s.invariants.iter().copied().filter(|&x| x != 0).collect();
        assert_eq!(engine, determinantal_invariants(&rows), "{rows:?}");
        assert_eq!(&(&s.left * &m) * &s.right, s.diagonal_matrix());
        assert_eq!(&s.left * &s.left_inverse, IntegerMatrix::identity(m.rows()));
        assert_eq!(&s.right * &s.right_inverse, IntegerMatrix::identity(m.cols()));
        assert!(is_unimodular(&s.left));
        for w in engine.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
    }
}

#[test]
fn frozen_smith_forms() {
    // values from the determinantal oracle
    let cases: [(&[&[i64]], &[i64]); 4] = [
        (&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]], &[2, 6, 12]),
        (&[&[6, 4], &[4, 6]], &[2, 10]),
        (&[&[0, 0], &[0, 0]], &[]),
        (&[&[3, 0, 0], &[0, 5, 0]], &[1, 15]),
    ];
    for (rows, want) in cases {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        assert_eq!(determinantal_invariants(&rows), want);
        let s = smith_normal_form(&IntegerMatrix::from_rows(&rows));
        let engine: Vec<i64> = s.invariants.iter().copied().filter(|&x| x != 0).collect();
        assert_eq!(engine, want);
    }
}

#[test]
fn integer_kernel_is_kernel() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..200 {
        let rows = random_matrix(&mut rng, 4, 6);
        let m = IntegerMatrix::from_rows(&rows);
        let k = integer_kernel(&m);
        assert!((&m * &k).is_zero());
        let rank = determinantal_invariants(&rows).len();
        assert_eq!(k.cols(), m.cols() - rank);
    }
}

#[test]
fn hom_and_ext_with_integers() {
    for n in 1..=24u64 {
        let c = AbelianGroup::cyclic(n);
        assert_eq!(hom_group(&AbelianGroup::z(), &c), c);
        assert_eq!(hom_group(&c, &AbelianGroup::z()), g("0"));
        assert_eq!(ext_group(&c, &AbelianGroup::z()), c);
        assert_eq!(ext_group(&AbelianGroup::z(), &c), g("0"));
    }
    assert_eq!(hom_group(&g("Z⊕Z2"), &g("Z4⊕Z")), g("Z2⊕Z4⊕Z"));
}

/// Every subgroup, found by adjoining one element at a time starting from
/// the trivial subgroup, reported as torsion profiles.
fn subgroup_profiles(group: &AbelianGroup) -> BTreeSet<Vec<usize>> {
    let all = elements(group);
    let n = group.order().unwrap() as i64;
    let zero = vec![0; orders(group).len()];
    let adjoin = |h: &BTreeSet<Vec<i64>>, x: &Vec<i64>| -> BTreeSet<Vec<i64>> {
        let mut out = BTreeSet::new();
        for k in 0..n {
            for y in h {
                let v: Vec<i64> = y.iter().zip(x).map(|(a, b)| a + k * b).collect();
                out.insert(normalize(group, &v));
            }
        }
        out
    };
    let mut seen = BTreeSet::from([BTreeSet::from([zero])]);
    let mut frontier: Vec<BTreeSet<Vec<i64>>> = seen.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for x in all.iter().filter(|x| !h.contains(*x)) {
            let bigger = adjoin(&h, x);
            if seen.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    seen.iter()
        .map(|h| (1..=n).map(|k| h.iter().filter(|x| scale(group, k, x).iter().all(|&v| v == 0)).count()).collect())
        .collect()
}

#[test]
fn subgroup_types_match_enumeration() {
    for order in 1..=16 {
        for group in groups_of_order(order) {
            let n = order as i64;
            let engine: BTreeSet<Vec<usize>> =
                subgroup_types(&group).unwrap().iter().map(|h| torsion_profile(h, n)).collect();
            assert_eq!(engine, subgroup_profiles(&group), "{group}");
        }
    }
}

#[test]
fn extensions_match_enumeration() {
    let small = ["0", "Z2", "Z3", "Z4", "Z2⊕Z2"];
    for a in small {
        for q in small {
            let (a, q) = (g(a), g(q));
            let n = a.order().unwrap() * q.order().unwrap();
            let oracle: BTreeSet<AbelianGroup> = groups_of_order(n)
                .into_iter()
                .filter(|candidate| {
                    // some subgroup of type a with quotient of type q
                    let all = elements(candidate);
                    let target_sub = torsion_profile(&a, n as i64);
                    let target_quot = torsion_profile(&q, n as i64);
                    let mut subgroups: BTreeSet<BTreeSet<Vec<i64>>> = BTreeSet::new();
                    for x in &all {
                        for y in &all {
                            let mut h = BTreeSet::new();
                            for i in 0..n as i64 {
                                for j in 0..n as i64 {
                                    let v: Vec<i64> = x.iter().zip(y).map(|(s, t)| i * s + j * t).collect();
                                    h.insert(normalize(candidate, &v));
                                }
                            }
                            subgroups.insert(h);
                        }
                    }
                    subgroups.iter().any(|h| {
                        let sub: Vec<usize> = (1..=n as i64)
                            .map(|k| h.iter().filter(|v| scale(candidate, k, v).iter().all(|&c| c == 0)).count())
                            .collect();
                        let quot: Vec<usize> = (1..=n as i64)
                            .map(|k| all.iter().filter(|v| h.contains(&scale(candidate, k, v))).count() / h.len())
                            .collect();
                        sub == target_sub && quot == target_quot
                    })
                })
                .collect();
            assert_eq!(extensions(&a, &q).unwrap(), oracle, "{a} by {q}");
        }
    }
}

#[test]
fn lucas_matches_pascal() {
    let mut row = vec![1u64];
    for j in 0..64u32 {
        for (i, &c) in row.iter().enumerate() {
            assert_eq!(binomial_mod2(j, i as u32), c % 2 == 1, "C({j},{i})");
        }
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = (row[i - 1] + row[i]) % 2;
        }
        row = next;
    }
}

/// `H^p(RP^n; Z_m)` from the cochain complex `Z_m -> Z_m -> ...` with
/// coboundary `δ^p` multiplication by `1 + (-1)^{p+1}`.
fn cochain_profile(n: u32, p: u32, m: i64) -> Vec<usize> {
    let coboundary = |k: i64| -> i64 { if (0..n as i64).contains(&k) && k % 2 == 1 { 2 } else { 0 } };
    let out_factor = coboundary(p as i64);
    let in_factor = coboundary(p as i64 - 1);
    let kernel: Vec<i64> = (0..m).filter(|x| (out_factor * x) % m == 0).collect();
    let image: BTreeSet<i64> = (0..m).map(|x| (in_factor * x) % m).collect();
    (1..=m).map(|k| kernel.iter().filter(|x| image.contains(&((k * *x) % m))).count() / image.len()).collect()
}

#[test]
fn cohomology_matches_cochains() {
    for m in 2..=24u64 {
        let coeffs = CoefficientGroup::mod_n(m).unwrap();
        for n in 1..=12 {
            for p in 0..=n {
                let engine = cohomology_rp(n, p as i64, &coeffs);
                assert_eq!(torsion_profile(&engine, m as i64), cochain_profile(n, p, m as i64), "n={n} p={p} m={m}");
            }
        }
    }
}
