//! Smith normal form over the integers with tracked unimodular transforms.

use super::matrix::IntegerMatrix;

/// Result of [`smith_normal_form`]: `left * m * right` is the diagonal matrix
/// whose diagonal is `invariants`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    /// Diagonal entries, length `min(rows, cols)`. Nonnegative, each divides
    /// the next, zeros last.
    pub invariants: Vec<i64>,
    pub left: IntegerMatrix,
    pub left_inverse: IntegerMatrix,
    pub right: IntegerMatrix,
    pub right_inverse: IntegerMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariants.iter().take_while(|&&d| d != 0).count()
    }

    /// The diagonal matrix with the shape of the input.
    pub fn diagonal_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::diagonal(self.left.rows(), self.right.rows(), &self.invariants)
    }
}

struct Reducer {
    a: IntegerMatrix,
    p: IntegerMatrix,
    p_inv: IntegerMatrix,
    q: IntegerMatrix,
    q_inv: IntegerMatrix,
}

/// `(g, s, u)` with `g = gcd(a, b) = s a + u b` and `g > 0`.
fn bezout(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1, 0);
    let (mut u0, mut u1) = (0, 1);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (u0, u1) = (u1, u0 - q * u1);
    }
    if r0 < 0 {
        (-r0, -s0, -u0)
    } else {
        (r0, s0, u0)
    }
}

/// A unimodular 2x2 step sending `(a, b)` to `(gcd, 0)`, with its inverse.
/// Exact divisibility uses a plain elimination so entries stay small.
fn clearing_step(a: i64, b: i64) -> ([i64; 4], [i64; 4]) {
    if b % a == 0 {
        let k = b / a;
        return ([1, 0, -k, 1], [1, 0, k, 1]);
    }
    let (g, s, u) = bezout(a, b);
    let (x, y) = (a / g, b / g);
    // [[s, u], [-y, x]] has determinant s x + u y = 1
    ([s, u, -y, x], [x, -u, y, s])
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.p.swap_rows(i, j);
        self.p_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.q.swap_cols(i, j);
        self.q_inv.swap_rows(i, j);
    }

    /// Applies `step` to rows `t`, `i`.
    fn combine_rows(&mut self, t: usize, i: usize, step: [i64; 4], inverse: [i64; 4]) {
        self.a.combine_rows(t, i, step);
        self.p.combine_rows(t, i, step);
        // right-multiply by the inverse: columns t, i
        let [x, y, z, w] = inverse;
        self.p_inv.combine_cols(t, i, [x, z, y, w]);
    }

    /// Applies `step` to columns `t`, `j`.
    fn combine_cols(&mut self, t: usize, j: usize, step: [i64; 4], inverse: [i64; 4]) {
        self.a.combine_cols(t, j, step);
        self.q.combine_cols(t, j, step);
        let [x, y, z, w] = inverse;
        self.q_inv.combine_rows(t, j, [x, z, y, w]);
    }

    /// row[dst] += row[src]
    fn add_row(&mut self, dst: usize, src: usize) {
        self.a.add_row_multiple(dst, src, 1);
        self.p.add_row_multiple(dst, src, 1);
        self.p_inv.add_col_multiple(src, dst, -1);
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        self.p.negate_row(r);
        self.p_inv.negate_col(r);
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a[(i, j)].abs();
                if v != 0 && best.is_none_or(|(bi, bj)| v < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears row and column `t` outside the pivot and makes the pivot divide
    /// the remaining submatrix. Returns false when the submatrix is zero.
    fn settle_pivot(&mut self, t: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.min_pivot(t) else {
                return false;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..self.a.rows() {
                let (a, b) = (self.a[(t, t)], self.a[(i, t)]);
                if b != 0 {
                    let (step, inverse) = clearing_step(a, b);
                    self.combine_rows(t, i, step, inverse);
                }
            }
            for j in t + 1..self.a.cols() {
                let (a, b) = (self.a[(t, t)], self.a[(t, j)]);
                if b != 0 {
                    let (step, inverse) = clearing_step(a, b);
                    self.combine_cols(t, j, step, inverse);
                }
            }
            for i in t + 1..self.a.rows() {
                clean &= self.a[(i, t)] == 0;
            }
            if !clean {
                continue;
            }
            let pivot = self.a[(t, t)];

            let offender = (t + 1..self.a.rows())
                .find(|&i| (t + 1..self.a.cols()).any(|j| self.a[(i, j)] % pivot != 0));
            match offender {
                Some(i) => self.add_row(t, i),
                None => {
                    if pivot < 0 {
                        self.negate_row(t);
                    }
                    return true;
                }
            }
        }
    }
}

/// Computes the Smith normal form of `m` together with unimodular `left`,
/// `right` (and their inverses) such that `left * m * right` is diagonal.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let (r, c) = (m.rows(), m.cols());
    let mut red = Reducer {
        a: m.clone(),
        p: IntegerMatrix::identity(r),
        p_inv: IntegerMatrix::identity(r),
        q: IntegerMatrix::identity(c),
        q_inv: IntegerMatrix::identity(c),
    };
    let n = r.min(c);
    for t in 0..n {
        if !red.settle_pivot(t) {
            break;
        }
    }
    let invariants = (0..n).map(|i| red.a[(i, i)]).collect();
    SmithDecomposition {
        invariants,
        left: red.p,
        left_inverse: red.p_inv,
        right: red.q,
        right_inverse: red.q_inv,
    }
}

/// A basis of the integer null space of `m`, as columns.
pub fn integer_kernel(m: &IntegerMatrix) -> IntegerMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let cols: Vec<usize> = (rank..m.cols()).collect();
    snf.right.select_columns(&cols)
}

/// Invariant factors of `Z^n / span(relations)` where the relations are the
/// columns of an `n x k` matrix. Trailing entries of 0 are free summands;
/// factors equal to 1 are dropped.
pub fn cokernel_factors(relations: &IntegerMatrix) -> Vec<u64> {
    let snf = smith_normal_form(relations);
    let n = relations.rows();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let d = snf.invariants.get(i).copied().unwrap_or(0);
        if d != 1 {
            out.push(d.unsigned_abs());
        }
    }
    out
}

/// Invariant factors of the lattice quotient `span(outer) / span(inner)`,
/// both given by generating columns in a common `Z^n`. Returns `None` when
/// `inner` is not contained in `outer`.
pub fn lattice_quotient_factors(outer: &IntegerMatrix, inner: &IntegerMatrix) -> Option<Vec<u64>> {
    assert_eq!(outer.rows(), inner.rows(), "ambient dimension mismatch");
    let snf = smith_normal_form(outer);
    let rank = snf.rank();
    // Columns of left_inverse scaled by the invariants form a basis of span(outer).
    let transformed = &snf.left * inner;
    let mut coords = IntegerMatrix::zeros(rank, inner.cols());
    for j in 0..inner.cols() {
        for i in 0..outer.rows() {
            let w = transformed[(i, j)];
            if i < rank {
                let d = snf.invariants[i];
                if w % d != 0 {
                    return None;
                }
                coords[(i, j)] = w / d;
            } else if w != 0 {
                return None;
            }
        }
    }
    Some(cokernel_factors(&coords))
}
