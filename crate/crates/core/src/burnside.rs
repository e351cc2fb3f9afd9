//! The Burnside ring of `Z2`, degrees of equivariant maps between
//! representation spheres, and symbolic class descriptors.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("ParityViolation: total degree {total} and fixed degree {fixed} differ mod 2")]
    ParityViolation { total: i64, fixed: i64 },
}

/// `a[Z2] + b[pt]`, with `[Z2]` the free orbit and `[pt]` the fixed point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BurnsideElement {
    pub a: i64,
    pub b: i64,
}

impl BurnsideElement {
    pub const ZERO: Self = BurnsideElement { a: 0, b: 0 };
    pub const ONE: Self = BurnsideElement { a: 0, b: 1 };
    pub const FREE: Self = BurnsideElement { a: 1, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        BurnsideElement { a, b }
    }

    /// `(|X|, |X^{Z2}|)`: the underlying degree and the degree on fixed points.
    pub const fn marks(self) -> (i64, i64) {
        (2 * self.a + self.b, self.b)
    }

    pub fn from_degrees(total: i64, fixed: i64) -> Result<Self, BurnsideError> {
        if (total - fixed).rem_euclid(2) != 0 {
            return Err(BurnsideError::ParityViolation { total, fixed });
        }
        Ok(BurnsideElement { a: (total - fixed) / 2, b: fixed })
    }
}

impl Mul for BurnsideElement {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        BurnsideElement {
            a: 2 * self.a * rhs.a + self.a * rhs.b + rhs.a * self.b,
            b: self.b * rhs.b,
        }
    }
}

impl Add for BurnsideElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        BurnsideElement { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => f.write_str("0"),
            (a, 0) => write!(f, "{a}[Z2]"),
            (0, b) => write!(f, "{b}[pt]"),
            (a, b) => write!(f, "{a}[Z2] + {b}[pt]"),
        }
    }
}

pub fn burnside_mul(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement {
    x * y
}

/// Restriction `π^0_{S^1}(*) ≅ Z -> A(Z2)` of `n` times the identity.
pub fn res_s1_to_z2(n: i64) -> BurnsideElement {
    BurnsideElement { a: 0, b: n }
}

/// `R^m ⊕ R̃^n` as a `Z2`-representation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepresentationDescriptor {
    pub trivial_dim: u32,
    pub twisted_dim: u32,
}

impl RepresentationDescriptor {
    pub const fn new(trivial_dim: u32, twisted_dim: u32) -> Self {
        RepresentationDescriptor { trivial_dim, twisted_dim }
    }

    pub const fn dim(self) -> u32 {
        self.trivial_dim + self.twisted_dim
    }
}

impl Add for RepresentationDescriptor {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        RepresentationDescriptor {
            trivial_dim: self.trivial_dim + rhs.trivial_dim,
            twisted_dim: self.twisted_dim + rhs.twisted_dim,
        }
    }
}

impl fmt::Display for RepresentationDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |base: &str, n: u32| if n == 1 { base.to_string() } else { format!("{base}^{n}") };
        match (self.trivial_dim, self.twisted_dim) {
            (0, 0) => f.write_str("0"),
            (m, 0) => f.write_str(&power("R", m)),
            (0, n) => f.write_str(&power("R̃", n)),
            (m, n) => write!(f, "{}⊕{}", power("R", m), power("R̃", n)),
        }
    }
}

/// A stable map `S^source -> S^target` tracked only by its representations
/// and a name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantClassDescriptor {
    pub source: RepresentationDescriptor,
    pub target: RepresentationDescriptor,
    pub label: String,
}

impl EquivariantClassDescriptor {
    pub fn new(source: RepresentationDescriptor, target: RepresentationDescriptor, label: impl Into<String>) -> Self {
        EquivariantClassDescriptor { source, target, label: label.into() }
    }

    pub fn identity() -> Self {
        Self::new(RepresentationDescriptor::default(), RepresentationDescriptor::default(), "id")
    }

    pub fn smash(&self, other: &Self) -> Self {
        Self::new(self.source + other.source, self.target + other.target, format!("{}∧{}", self.label, other.label))
    }

    /// `(i, d)` with the class in `π^i_{Z2}(R̃^d)`: trivial summands cancel
    /// stably, leaving `i` trivial target dimensions and `d` twisted source ones.
    pub fn group_home(&self) -> (i64, i64) {
        (
            self.target.trivial_dim as i64 - self.source.trivial_dim as i64,
            self.source.twisted_dim as i64 - self.target.twisted_dim as i64,
        )
    }

    pub fn group_home_label(&self) -> String {
        let (i, d) = self.group_home();
        format!("π^{i}_{{Z2,H}}(*;R̃^{d})")
    }

    /// Same ambient group after stable cancellation of common summands.
    pub fn stably_equal(&self, other: &Self) -> bool {
        self.group_home() == other.group_home()
    }
}

impl fmt::Display for EquivariantClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ({})^+ -> ({})^+", self.label, self.source, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let x = BurnsideElement::new(3, -2);
        assert_eq!(BurnsideElement::ONE * x, x);
        assert_eq!(BurnsideElement::FREE * BurnsideElement::FREE, BurnsideElement::new(2, 0));
        assert_eq!(burnside_mul(BurnsideElement::new(1, 2), BurnsideElement::new(3, 4)), BurnsideElement::new(16, 8));
    }

    #[test]
    fn marks_and_inverse() {
        assert_eq!(BurnsideElement::ONE.marks(), (1, 1));
        assert_eq!(BurnsideElement::FREE.marks(), (2, 0));
        assert_eq!(BurnsideElement::new(3, 2).marks(), (8, 2));
        assert_eq!(BurnsideElement::from_degrees(1, 1), Ok(BurnsideElement::ONE));
        assert_eq!(BurnsideElement::from_degrees(2, 0), Ok(BurnsideElement::FREE));
        assert_eq!(
            BurnsideElement::from_degrees(3, 0),
            Err(BurnsideError::ParityViolation { total: 3, fixed: 0 })
        );
        assert_eq!(BurnsideElement::from_degrees(-3, 1), Ok(BurnsideElement::new(-2, 1)));
    }

    #[test]
    fn restriction() {
        assert_eq!(res_s1_to_z2(1), BurnsideElement::ONE);
        assert_eq!(res_s1_to_z2(0), BurnsideElement::ZERO);
        assert_eq!(res_s1_to_z2(-4), BurnsideElement::new(0, -4));
    }

    #[test]
    fn smash_of_example_classes() {
        let f = EquivariantClassDescriptor::new(RepresentationDescriptor::new(0, 2), RepresentationDescriptor::new(2, 0), "f");
        let g = EquivariantClassDescriptor::new(RepresentationDescriptor::new(1, 4), RepresentationDescriptor::new(4, 0), "Res g");
        let h = f.smash(&g);
        assert_eq!(h.source, RepresentationDescriptor::new(1, 6));
        assert_eq!(h.target, RepresentationDescriptor::new(6, 0));
        assert_eq!(h.label, "f∧Res g");
        assert_eq!(h.group_home(), (5, 6));
        assert_eq!(h.group_home_label(), "π^5_{Z2,H}(*;R̃^6)");
        assert_eq!(h.to_string(), "f∧Res g: (R⊕R̃^6)^+ -> (R^6)^+");
    }

    #[test]
    fn identity_changes_only_label() {
        let f = EquivariantClassDescriptor::new(RepresentationDescriptor::new(0, 2), RepresentationDescriptor::new(2, 0), "f");
        let s = f.smash(&EquivariantClassDescriptor::identity());
        assert_eq!((s.source, s.target), (f.source, f.target));
        assert_eq!(s.label, "f∧id");
    }
}
