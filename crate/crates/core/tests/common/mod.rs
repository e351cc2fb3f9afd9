#![allow(dead_code)]

use std::collections::BTreeSet;

use cohomotopy::abelian::{AbelianGroup, GroupHom, IntegerMatrix};
use cohomotopy::ahss::{apply_d2, build_e2, Bidegree, CellKind, Mode, SpectralSequencePage, StemTable};
use rand::rngs::StdRng;
use rand::Rng;

// ---------------------------------------------------------------------------
// E3 diagrams for d = 2m and d = 2m+1, left four and right six columns.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Golden {
    Zero,
    Z2,
    Z,
    /// Zero or Z2.
    Star,
}

use Golden::{Star as S, Zero as O, Z as ZZ, Z2 as T};

const LEFT: [[Golden; 4]; 3] = [[ZZ, O, O, O], [S, S, S, S], [S, S, S, S]];

/// Rows 0, -1, -2 of the right six columns.
fn right_block(d: u32) -> [[Golden; 6]; 3] {
    let m = d / 2;
    match (d % 2, m % 2) {
        (0, 1) => [[T, O, O, O, T, ZZ], [O, S, S, S, O, T], [S, S, S, S, S, S]],
        (0, 0) => [[O, O, T, O, T, ZZ], [S, S, O, S, T, T], [S, S, S, S, T, S]],
        (1, 1) => [[O, O, O, T, O, T], [S, S, S, O, T, T], [S, S, S, S, S, T]],
        _ => [[O, T, O, O, O, T], [S, O, S, S, T, O], [S, S, S, S, S, S]],
    }
}

/// Every cell the diagrams print for this `d`, keyed by bidegree.
pub fn golden_cells(d: u32) -> Vec<(Bidegree, Golden)> {
    let top = d as i64 - 1;
    let mut out = Vec::new();
    for (row, q) in [0i64, -1, -2].into_iter().enumerate() {
        for (p, &g) in LEFT[row].iter().enumerate() {
            out.push((Bidegree::new(p as i64, q), g));
        }
        for (j, &g) in right_block(d)[row].iter().enumerate() {
            out.push((Bidegree::new(top - 5 + j as i64, q), g));
        }
    }
    out
}

pub fn e3(d: u32, mode: Mode) -> SpectralSequencePage {
    apply_d2(&build_e2(d, &StemTable::standard(), -3, mode).unwrap()).unwrap()
}

/// Checks one page against the diagrams; returns a description of each mismatch.
pub fn golden_mismatches(d: u32, page: &SpectralSequencePage) -> Vec<String> {
    let z2 = AbelianGroup::cyclic(2);
    let mut bad = Vec::new();
    for (b, want) in golden_cells(d) {
        let cell = page.get(b).unwrap();
        let ok = match want {
            Golden::Star => match &cell.kind {
                CellKind::Exact(g) => g.is_trivial() || *g == z2,
                CellKind::SubquotientOf(g) => *g == z2,
            },
            other => {
                let expected = match other {
                    Golden::Zero => AbelianGroup::trivial(),
                    Golden::Z2 => z2.clone(),
                    _ => AbelianGroup::z(),
                };
                cell.as_exact() == Some(&expected)
            }
        };
        if !ok {
            bad.push(format!("d={d} {b}: expected {want:?}, engine {:?}", cell.kind));
        }
    }
    bad
}

// ---------------------------------------------------------------------------
// Invariant factors from determinantal divisors.

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Nonzero diagonal of the Smith form: `d_k / d_{k-1}` with `d_k` the gcd of
/// all `k x k` minors.
pub fn determinantal_invariants(rows: &[Vec<i64>]) -> Vec<i64> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    let mut divisors = vec![1i64];
    for k in 1..=r.min(c) {
        let mut g = 0;
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let minor: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j]).collect()).collect();
                g = gcd(g, det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| w[1] / w[0]).collect()
}

pub fn random_matrix(rng: &mut StdRng, max_dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let r = rng.gen_range(1..=max_dim);
    let c = rng.gen_range(1..=max_dim);
    (0..r).map(|_| (0..c).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

// ---------------------------------------------------------------------------
// Finite groups by listing their elements.

pub fn orders(g: &AbelianGroup) -> Vec<i64> {
    g.invariant_factors().iter().map(|&f| f as i64).collect()
}

pub fn elements(g: &AbelianGroup) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for n in orders(g) {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..n).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn normalize(g: &AbelianGroup, v: &[i64]) -> Vec<i64> {
    v.iter().zip(orders(g)).map(|(&x, n)| x.rem_euclid(n)).collect()
}

pub fn scale(g: &AbelianGroup, k: i64, v: &[i64]) -> Vec<i64> {
    normalize(g, &v.iter().map(|x| x * k).collect::<Vec<_>>())
}

pub fn apply(f: &GroupHom, v: &[i64]) -> Vec<i64> {
    normalize(f.target(), &f.matrix().apply(v))
}

/// Number of elements killed by `n`, for each `n` up to `limit`. These counts
/// pin down a finite abelian group.
pub fn torsion_profile(g: &AbelianGroup, limit: i64) -> Vec<usize> {
    (1..=limit)
        .map(|n| orders(g).iter().map(|&m| gcd(n, m) as usize).product())
        .collect()
}

/// `ker(g) / im(f)` profile by direct enumeration.
pub fn quotient_profile_by_enumeration(f: &GroupHom, g: &GroupHom, limit: i64) -> Vec<usize> {
    let middle = f.target().clone();
    let kernel: Vec<Vec<i64>> = elements(&middle).into_iter().filter(|x| apply(g, x).iter().all(|&c| c == 0)).collect();
    let image: BTreeSet<Vec<i64>> = elements(f.source()).iter().map(|x| apply(f, x)).collect();
    (1..=limit)
        .map(|n| kernel.iter().filter(|x| image.contains(&scale(&middle, n, x))).count() / image.len())
        .collect()
}

pub fn random_finite_group(rng: &mut StdRng, max_order: u64) -> AbelianGroup {
    loop {
        let factors: Vec<u64> = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(2..=8)).collect();
        let g = AbelianGroup::from_cyclic_orders(&factors);
        if g.order().unwrap() <= max_order {
            return g;
        }
    }
}

/// A random map, each generator sent to an allowed element.
pub fn random_hom_into(
    rng: &mut StdRng,
    source: &AbelianGroup,
    target: &AbelianGroup,
    allowed: &[Vec<i64>],
) -> GroupHom {
    let rows = target.generator_count();
    let mut m = IntegerMatrix::zeros(rows, source.generator_count());
    for (j, &order) in source.invariant_factors().iter().enumerate() {
        let fits: Vec<&Vec<i64>> = allowed.iter().filter(|x| scale(target, order as i64, x).iter().all(|&c| c == 0)).collect();
        let pick = fits[rng.gen_range(0..fits.len())];
        for i in 0..rows {
            m[(i, j)] = pick[i];
        }
    }
    GroupHom::new(source.clone(), target.clone(), m).expect("images respect generator orders")
}
