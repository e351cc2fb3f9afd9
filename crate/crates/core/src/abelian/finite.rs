//! Isomorphism-type bookkeeping for finite abelian groups: primary parts,
//! subgroup types and the groups admitting a given two-step filtration.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use super::group::AbelianGroup;
use super::AbelianError;

/// Largest order for which extensions are decided by element enumeration.
pub const MAX_ENUMERATION_ORDER: u64 = 1 << 12;

fn prime_factorization(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

/// For each prime, the exponents of the cyclic `p`-power summands in
/// decreasing order. Fails on infinite groups.
pub fn primary_parts(g: &AbelianGroup) -> Result<BTreeMap<u64, Vec<u32>>, AbelianError> {
    if !g.is_finite() {
        return Err(AbelianError::Infinite(g.clone()));
    }
    let mut out: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for f in g.torsion_factors() {
        for (p, e) in prime_factorization(f) {
            out.entry(p).or_default().push(e);
        }
    }
    for parts in out.values_mut() {
        parts.sort_unstable_by(|a, b| b.cmp(a));
    }
    Ok(out)
}

pub fn from_primary_parts(parts: &BTreeMap<u64, Vec<u32>>) -> AbelianGroup {
    let orders: Vec<u64> = parts
        .iter()
        .flat_map(|(&p, es)| es.iter().map(move |&e| p.pow(e)))
        .collect();
    AbelianGroup::from_cyclic_orders(&orders)
}

/// All partitions (decreasing, positive parts) dominated part-by-part by `bound`.
fn partitions_inside(bound: &[u32]) -> Vec<Vec<u32>> {
    fn go(bound: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if i == bound.len() {
            return;
        }
        for part in 1..=cap.min(bound[i]) {
            cur.push(part);
            go(bound, i + 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(bound, 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn cartesian(choices: Vec<(u64, Vec<Vec<u32>>)>) -> Vec<BTreeMap<u64, Vec<u32>>> {
    let mut acc = vec![BTreeMap::new()];
    for (p, options) in choices {
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for partial in &acc {
            for opt in &options {
                let mut m: BTreeMap<u64, Vec<u32>> = partial.clone();
                if !opt.is_empty() {
                    m.insert(p, opt.clone());
                }
                next.push(m);
            }
        }
        acc = next;
    }
    acc
}

/// Isomorphism types of subgroups of a finite group. For finite abelian
/// groups these are also the quotient types and the subquotient types.
pub fn subgroup_types(g: &AbelianGroup) -> Result<BTreeSet<AbelianGroup>, AbelianError> {
    let parts = primary_parts(g)?;
    let choices = parts.into_iter().map(|(p, lam)| (p, partitions_inside(&lam))).collect();
    Ok(cartesian(choices).iter().map(from_primary_parts).collect())
}

/// Every abelian group of order `n`.
pub fn groups_of_order(n: u64) -> Vec<AbelianGroup> {
    let choices = prime_factorization(n)
        .into_iter()
        .map(|(p, e)| (p, partitions_of(e)))
        .collect();
    cartesian(choices).iter().map(from_primary_parts).collect()
}

/// Elements of a finite group in normal form, indexed in mixed radix.
struct Elements {
    factors: Vec<u64>,
    order: usize,
}

impl Elements {
    fn new(g: &AbelianGroup) -> Self {
        let factors: Vec<u64> = g.torsion_factors().collect();
        let order = factors.iter().product::<u64>() as usize;
        Elements { factors, order }
    }

    fn decode(&self, mut idx: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&f| {
                let c = idx as u64 % f;
                idx /= f as usize;
                c
            })
            .collect()
    }

    fn encode(&self, coords: &[u64]) -> usize {
        let mut idx = 0usize;
        for (&c, &f) in coords.iter().zip(&self.factors).rev() {
            idx = idx * f as usize + c as usize;
        }
        idx
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = x.iter().zip(&y).zip(&self.factors).map(|((a, b), f)| (a + b) % f).collect();
        self.encode(&sum)
    }

    fn scale(&self, k: u64, a: usize) -> usize {
        let x = self.decode(a);
        let v: Vec<u64> = x.iter().zip(&self.factors).map(|(a, f)| (a * (k % f)) % f).collect();
        self.encode(&v)
    }

    /// Smallest subgroup containing `base` and `extra`.
    fn span(&self, base: &[bool], extra: usize) -> Vec<bool> {
        let mut member = base.to_vec();
        let mut queue: VecDeque<usize> = VecDeque::new();
        if !member[extra] {
            member[extra] = true;
            queue.push_back(extra);
        }
        let gens: Vec<usize> = (0..self.order).filter(|&i| base[i]).chain([extra]).collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.add(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        member
    }

    fn subgroups(&self) -> Vec<Vec<bool>> {
        let mut zero = vec![false; self.order];
        zero[0] = true;
        let mut seen: HashSet<Vec<bool>> = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        let mut out = Vec::new();
        while let Some(h) = queue.pop_front() {
            for g in 0..self.order {
                if h[g] {
                    continue;
                }
                let bigger = self.span(&h, g);
                if seen.insert(bigger.clone()) {
                    queue.push_back(bigger);
                }
            }
            out.push(h);
        }
        out
    }

    /// Type of `{x : x in H}` (when `quotient` is false) or of `G/H`, read off
    /// from the sizes of the `p^j`-torsion layers.
    fn layer_type(&self, h: &[bool], quotient: bool) -> AbelianGroup {
        let h_size = h.iter().filter(|&&b| b).count();
        let size = if quotient { self.order / h_size } else { h_size };
        let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (p, _) in prime_factorization(size as u64) {
            let mut conj = Vec::new();
            let mut prev = 1usize;
            let mut pj = 1u64;
            loop {
                pj *= p;
                let count = (0..self.order)
                    .filter(|&x| if quotient { h[self.scale(pj, x)] } else { h[x] && self.scale(pj, x) == 0 })
                    .count();
                let layer = if quotient { count / h_size } else { count };
                if layer == prev {
                    break;
                }
                conj.push((layer / prev).ilog(p as usize));
                prev = layer;
            }
            // conj[j] counts the parts of size > j
            let len = conj.first().copied().unwrap_or(0);
            let lam: Vec<u32> = (0..len).map(|i| conj.iter().filter(|&&c| c > i).count() as u32).collect();
            parts.insert(p, lam);
        }
        from_primary_parts(&parts)
    }
}

/// Groups `G` that contain a subgroup isomorphic to `sub` with quotient
/// isomorphic to `quotient`.
pub fn extensions(sub: &AbelianGroup, quotient: &AbelianGroup) -> Result<BTreeSet<AbelianGroup>, AbelianError> {
    if sub.is_trivial() {
        return Ok(BTreeSet::from([quotient.clone()]));
    }
    if quotient.is_trivial() {
        return Ok(BTreeSet::from([sub.clone()]));
    }
    if quotient.torsion_factors().next().is_none() {
        // free quotients split
        return Ok(BTreeSet::from([sub.direct_sum(quotient)]));
    }
    let (Some(a), Some(b)) = (sub.order(), quotient.order()) else {
        return Err(AbelianError::UnboundedExtension { sub: sub.clone(), quotient: quotient.clone() });
    };
    let n = a * b;
    if n > MAX_ENUMERATION_ORDER {
        return Err(AbelianError::TooLarge(n));
    }
    let mut out = BTreeSet::new();
    for candidate in groups_of_order(n) {
        let el = Elements::new(&candidate);
        let found = el.subgroups().iter().any(|h| {
            h.iter().filter(|&&x| x).count() as u64 == a
                && el.layer_type(h, false) == *sub
                && el.layer_type(h, true) == *quotient
        });
        if found {
            out.insert(candidate);
        }
    }
    Ok(out)
}

/// Groups with a filtration whose successive quotients are `layers`, listed
/// from the deepest (the subgroup) outward.
pub fn iterated_extensions(layers: &[AbelianGroup]) -> Result<BTreeSet<AbelianGroup>, AbelianError> {
    let mut acc = BTreeSet::from([AbelianGroup::trivial()]);
    for layer in layers {
        let mut next = BTreeSet::new();
        for g in &acc {
            next.extend(extensions(g, layer)?);
        }
        acc = next;
    }
    Ok(acc)
}
