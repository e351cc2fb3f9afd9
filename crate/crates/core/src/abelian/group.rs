use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::IntegerMatrix;
use super::snf::cokernel_factors;
use super::AbelianError;

/// A finitely generated abelian group in invariant-factor normal form.
///
/// The factor list holds the finite invariant factors in increasing
/// divisibility order followed by one `0` per infinite cyclic summand.
/// No factor equals 1, so two groups are isomorphic iff their lists agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

pub type FinitelyGeneratedAbelianGroup = AbelianGroup;

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new() }
    }

    /// The infinite cyclic group.
    pub fn z() -> Self {
        AbelianGroup { factors: vec![0] }
    }

    /// `Z/n`; `cyclic(0)` is `Z` and `cyclic(1)` is trivial.
    pub fn cyclic(n: u64) -> Self {
        match n {
            1 => Self::trivial(),
            n => AbelianGroup { factors: vec![n] },
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { factors: vec![0; rank] }
    }

    /// Normalizes a direct sum of cyclic groups of the given orders
    /// (0 meaning infinite cyclic).
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let diag: Vec<i64> = orders.iter().map(|&o| o as i64).collect();
        let n = diag.len();
        Self::from_presentation(&IntegerMatrix::diagonal(n, n, &diag))
    }

    /// The cokernel of a relation matrix whose rows index generators and whose
    /// columns are relations.
    pub fn from_presentation(relations: &IntegerMatrix) -> Self {
        AbelianGroup { factors: cokernel_factors(relations) }
    }

    /// Accepts a list that is already in normal form.
    pub fn from_invariant_factors(factors: Vec<u64>) -> Result<Self, AbelianError> {
        let first_zero = factors.iter().position(|&f| f == 0).unwrap_or(factors.len());
        let (finite, free) = factors.split_at(first_zero);
        let valid = finite.iter().all(|&f| f >= 2)
            && free.iter().all(|&f| f == 0)
            && finite.windows(2).all(|w| w[1] % w[0] == 0);
        if valid {
            Ok(AbelianGroup { factors })
        } else {
            Err(AbelianError::NotNormalForm(factors))
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of cyclic generators in the normal form.
    pub fn generator_count(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().filter(|&&f| f == 0).count()
    }

    pub fn is_finite(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        if self.is_finite() {
            Some(self.factors.iter().product())
        } else {
            None
        }
    }

    pub fn torsion_factors(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().copied().filter(|&f| f != 0)
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = self.factors.clone();
        orders.extend_from_slice(&other.factors);
        Self::from_cyclic_orders(&orders)
    }

    /// The relation matrix `diag(factors)` for the normal-form generators.
    pub(crate) fn relation_matrix(&self) -> IntegerMatrix {
        let n = self.factors.len();
        let diag: Vec<i64> = self.factors.iter().map(|&f| f as i64).collect();
        IntegerMatrix::diagonal(n, n, &diag)
    }

    /// Reduces a coordinate vector on the normal-form generators to its
    /// canonical representative.
    pub(crate) fn reduce(&self, v: &mut [i64]) {
        for (x, &f) in v.iter_mut().zip(&self.factors) {
            if f != 0 {
                *x = x.rem_euclid(f as i64);
            }
        }
    }
}

impl PartialOrd for AbelianGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders finite groups by order first, then infinite groups by rank.
impl Ord for AbelianGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rank(), self.order(), &self.factors).cmp(&(other.rank(), other.order(), &other.factors))
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `Hom(a, b)` in normal form.
pub fn hom_group(a: &AbelianGroup, b: &AbelianGroup) -> AbelianGroup {
    let mut orders = Vec::new();
    for &m in &a.factors {
        for &n in &b.factors {
            match (m, n) {
                (0, n) => orders.push(n),
                (_, 0) => {}
                (m, n) => orders.push(gcd(m, n)),
            }
        }
    }
    AbelianGroup::from_cyclic_orders(&orders)
}

/// `Ext(a, b)` in normal form.
pub fn ext_group(a: &AbelianGroup, b: &AbelianGroup) -> AbelianGroup {
    let mut orders = Vec::new();
    for &m in &a.factors {
        if m == 0 {
            continue;
        }
        for &n in &b.factors {
            match n {
                0 => orders.push(m),
                n => orders.push(gcd(m, n)),
            }
        }
    }
    AbelianGroup::from_cyclic_orders(&orders)
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        for (i, &n) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "⊕")?;
            }
            match n {
                0 => write!(f, "Z")?,
                n => write!(f, "Z{n}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for AbelianGroup {
    type Err = AbelianError;

    /// Parses `0`, `Z`, `Z24`, `Z2⊕Z4`, `Z2+Z` (the sum need not be normalized).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut orders = Vec::new();
        for part in s.split(['⊕', '+']) {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .ok_or_else(|| AbelianError::Parse(s.to_string()))?;
            if digits.is_empty() {
                orders.push(0);
            } else {
                let n: u64 = digits.parse().map_err(|_| AbelianError::Parse(s.to_string()))?;
                if n == 0 {
                    return Err(AbelianError::Parse(s.to_string()));
                }
                orders.push(n);
            }
        }
        Ok(Self::from_cyclic_orders(&orders))
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
