use serde::{Deserialize, Serialize};

use super::group::AbelianGroup;
use super::matrix::IntegerMatrix;
use super::snf::{integer_kernel, lattice_quotient_factors};
use super::AbelianError;

/// A homomorphism between groups in normal form, stored as the images of the
/// source generators: column `j` holds the target coordinates of generator `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHom {
    source: AbelianGroup,
    target: AbelianGroup,
    matrix: IntegerMatrix,
}

impl GroupHom {
    /// Validates dimensions and well-definedness, then reduces the entries to
    /// canonical representatives.
    pub fn new(
        source: AbelianGroup,
        target: AbelianGroup,
        matrix: IntegerMatrix,
    ) -> Result<Self, AbelianError> {
        if matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count() {
            return Err(AbelianError::DimensionMismatch {
                expected: (target.generator_count(), source.generator_count()),
                found: (matrix.rows(), matrix.cols()),
            });
        }
        let mut matrix = matrix;
        for (j, &m) in source.invariant_factors().iter().enumerate() {
            let mut col = matrix.column(j);
            if m != 0 {
                let mut scaled: Vec<i64> = col.iter().map(|x| x * m as i64).collect();
                target.reduce(&mut scaled);
                if scaled.iter().any(|&x| x != 0) {
                    return Err(AbelianError::NotWellDefined { generator: j });
                }
            }
            target.reduce(&mut col);
            for (i, x) in col.into_iter().enumerate() {
                matrix[(i, j)] = x;
            }
        }
        Ok(GroupHom { source, target, matrix })
    }

    pub fn zero(source: AbelianGroup, target: AbelianGroup) -> Self {
        let matrix = IntegerMatrix::zeros(target.generator_count(), source.generator_count());
        GroupHom { source, target, matrix }
    }

    pub fn identity(group: AbelianGroup) -> Self {
        let n = group.generator_count();
        GroupHom { source: group.clone(), target: group, matrix: IntegerMatrix::identity(n) }
    }

    /// A map between cyclic groups sending the generator to `k` times the
    /// generator. Either side may be trivial.
    pub fn cyclic(source: AbelianGroup, target: AbelianGroup, k: i64) -> Result<Self, AbelianError> {
        assert!(source.is_cyclic() && target.is_cyclic(), "cyclic map between non-cyclic groups");
        let entries = vec![k; source.generator_count() * target.generator_count()];
        let matrix = IntegerMatrix::from_row_major(target.generator_count(), source.generator_count(), entries)
            .expect("shape follows from generator counts");
        Self::new(source, target, matrix)
    }

    pub fn source(&self) -> &AbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &AbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Image of a coordinate vector, reduced in the target.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = self.matrix.apply(v);
        self.target.reduce(&mut out);
        out
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom, AbelianError> {
        if self.target != other.source {
            return Err(AbelianError::Incompatible {
                left: self.target.clone(),
                right: other.source.clone(),
            });
        }
        GroupHom::new(self.source.clone(), other.target.clone(), &other.matrix * &self.matrix)
    }

    /// Lift of the kernel to `Z^{source generators}`, as generating columns.
    fn kernel_lattice(&self) -> IntegerMatrix {
        let stacked = self.matrix.hstack(&self.target.relation_matrix());
        integer_kernel(&stacked).top_rows(self.source.generator_count())
    }

    pub fn kernel(&self) -> AbelianGroup {
        let factors = lattice_quotient_factors(&self.kernel_lattice(), &self.source.relation_matrix())
            .expect("source relations lie in the kernel of a well-defined map");
        AbelianGroup::from_cyclic_orders(&factors)
    }

    pub fn image(&self) -> AbelianGroup {
        let relations = self.target.relation_matrix();
        let outer = self.matrix.hstack(&relations);
        let factors = lattice_quotient_factors(&outer, &relations).expect("relations lie in the image lattice");
        AbelianGroup::from_cyclic_orders(&factors)
    }

    pub fn cokernel(&self) -> AbelianGroup {
        AbelianGroup::from_presentation(&self.matrix.hstack(&self.target.relation_matrix()))
    }
}

/// `ker(outgoing) / im(incoming)` for composable maps `A -> B -> C` whose
/// composite vanishes.
pub fn kernel_mod_image(incoming: &GroupHom, outgoing: &GroupHom) -> Result<AbelianGroup, AbelianError> {
    if incoming.target != outgoing.source {
        return Err(AbelianError::Incompatible {
            left: incoming.target.clone(),
            right: outgoing.source.clone(),
        });
    }
    if !incoming.then(outgoing)?.is_zero() {
        return Err(AbelianError::CompositionNonzero);
    }
    let middle = &incoming.target;
    let boundaries = incoming.matrix.hstack(&middle.relation_matrix());
    let factors = lattice_quotient_factors(&outgoing.kernel_lattice(), &boundaries)
        .expect("image lies in the kernel once the composite vanishes");
    Ok(AbelianGroup::from_cyclic_orders(&factors))
}
