//! Box minimization as a linear system in non-negative variables.
//!
//! Minimizing xᵀMx over [0,1]^n reduces to the 2n×4n system A·s = b over
//! s = (x, y, u, v) ≥ 0 with block layout
//!
//! ```text
//!     A = [ -M  -I  I  0 ]      b = [ 0 ]
//!         [  I   0  0  I ]          [ e ]
//! ```
//!
//! so row i encodes u_i = (Mx)_i + y_i and row n+i encodes x_i + v_i = 1.
//! A solution is *complementary* when x_i·u_i = 0 and y_i·v_i = 0 for all i;
//! for every such solution xᵀMx = −eᵀy holds exactly, and some complementary
//! basic feasible solution attains the box minimum. Enumerating one column
//! per complementary pair — 2^{2n} patterns — and solving each restricted
//! square system exactly therefore recovers the minimum; singular patterns
//! fall back to elimination with free variables pinned to zero.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::traits::{Signed, Zero};

use crate::encoding::EncodingStats;
use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::RatMatrix;
use crate::matrix::{mat_vec, quadratic_form, SymmetricIntMatrix};
use crate::rational::{pow2, Rational, RationalVector};

/// Patterns per instance grow as 4^n; this keeps enumeration desk-scale.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 12;

/// The system A·s = b over the variable blocks (x, y, u, v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcpSystem {
    n: usize,
    a: Vec<Vec<BigInt>>, // 2n × 4n
    b: Vec<BigInt>,      // 2n
}

impl LcpSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        2 * self.n
    }

    pub fn cols(&self) -> usize {
        4 * self.n
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.a
    }

    pub fn rhs(&self) -> &[BigInt] {
        &self.b
    }

    // column ids of the four blocks
    pub fn x_col(&self, i: usize) -> usize {
        i
    }

    pub fn y_col(&self, i: usize) -> usize {
        self.n + i
    }

    pub fn u_col(&self, i: usize) -> usize {
        2 * self.n + i
    }

    pub fn v_col(&self, i: usize) -> usize {
        3 * self.n + i
    }

    /// The submatrix of the chosen columns, as exact rationals.
    pub fn columns_matrix(&self, cols: &[usize]) -> RatMatrix {
        RatMatrix::from_fn(self.rows(), cols.len(), |r, c| {
            Rational::from_integer(self.a[r][cols[c]].clone())
        })
    }

    pub fn rhs_rational(&self) -> RationalVector {
        self.b
            .iter()
            .map(|v| Rational::from_integer(v.clone()))
            .collect()
    }

    /// Exact residual check A·s = b.
    pub fn is_solution(&self, s: &[Rational]) -> bool {
        if s.len() != self.cols() {
            return false;
        }
        self.a.iter().zip(self.b.iter()).all(|(row, b)| {
            let acc = row
                .iter()
                .zip(s.iter())
                .filter(|(a, sj)| !a.is_zero() && !sj.is_zero())
                .fold(Rational::zero(), |acc, (a, sj)| {
                    acc + Rational::from_integer(a.clone()) * sj
                });
            acc == Rational::from_integer(b.clone())
        })
    }
}

/// Assembles A and b for the given matrix.
pub fn build_system(m: &SymmetricIntMatrix) -> LcpSystem {
    let n = m.n();
    let mut a = vec![vec![BigInt::zero(); 4 * n]; 2 * n];
    let mut b = vec![BigInt::zero(); 2 * n];
    for i in 0..n {
        for (j, slot) in a[i].iter_mut().enumerate().take(n) {
            *slot = -m.get(i, j).clone();
        }
        a[i][n + i] = BigInt::from(-1);
        a[i][2 * n + i] = BigInt::from(1);
        a[n + i][i] = BigInt::from(1);
        a[n + i][3 * n + i] = BigInt::from(1);
        b[n + i] = BigInt::from(1);
    }
    LcpSystem { n, a, b }
}

/// A feasible complementary solution s = (x, y, u, v), with basis metadata
/// when it came out of a nonsingular restricted solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementarySolution {
    n: usize,
    s: RationalVector,
    support: BTreeSet<usize>,
    basis: Option<BTreeSet<usize>>,
    basis_det: Option<BigInt>,
}

impl ComplementarySolution {
    /// Validates A·s = b, s ≥ 0 and both complementarity products exactly.
    pub fn new(
        sys: &LcpSystem,
        s: RationalVector,
        basis: Option<BTreeSet<usize>>,
        basis_det: Option<BigInt>,
    ) -> Result<Self> {
        let n = sys.n();
        if s.len() != 4 * n {
            return Err(Error::DimensionMismatch {
                expected: 4 * n,
                got: s.len(),
            });
        }
        if s.iter().any(|v| v.is_negative()) || !sys.is_solution(&s) {
            return Err(Error::NotComplementaryFeasible);
        }
        for i in 0..n {
            let x_u = !s[sys.x_col(i)].is_zero() && !s[sys.u_col(i)].is_zero();
            let y_v = !s[sys.y_col(i)].is_zero() && !s[sys.v_col(i)].is_zero();
            if x_u || y_v {
                return Err(Error::NotComplementaryFeasible);
            }
        }
        let support = s
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_positive())
            .map(|(j, _)| j)
            .collect();
        Ok(Self {
            n,
            s,
            support,
            basis,
            basis_det,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> &[Rational] {
        &self.s
    }

    pub fn x_part(&self) -> &[Rational] {
        &self.s[..self.n]
    }

    pub fn y_part(&self) -> &[Rational] {
        &self.s[self.n..2 * self.n]
    }

    pub fn u_part(&self) -> &[Rational] {
        &self.s[2 * self.n..3 * self.n]
    }

    pub fn v_part(&self) -> &[Rational] {
        &self.s[3 * self.n..]
    }

    /// Column indices with a strictly positive coordinate.
    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn basis(&self) -> Option<&BTreeSet<usize>> {
        self.basis.as_ref()
    }

    pub fn basis_det(&self) -> Option<&BigInt> {
        self.basis_det.as_ref()
    }

    /// −eᵀy; equals xᵀMx for every feasible complementary solution.
    pub fn objective(&self) -> Rational {
        -self.y_part().iter().sum::<Rational>()
    }
}

/// How a minimum was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    LcpEnumeration,
    FaceOracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::LcpEnumeration => "lcp-enumeration",
            Method::FaceOracle => "oracle",
        })
    }
}

/// Exact global minimum of xᵀMx over the unit box, with a complementary
/// witness at the minimizer.
#[derive(Clone, Debug)]
pub struct MinimizationResult {
    pub gamma: Rational,
    pub argmin: RationalVector,
    pub witness: ComplementarySolution,
    pub method: Method,
}

fn pattern_columns(sys: &LcpSystem, pattern: usize) -> Vec<usize> {
    let n = sys.n();
    let mut cols = Vec::with_capacity(2 * n);
    for i in 0..n {
        // bit i: x_i over u_i
        cols.push(if pattern & (1 << i) != 0 {
            sys.x_col(i)
        } else {
            sys.u_col(i)
        });
    }
    for i in 0..n {
        // bit n+i: y_i over v_i
        cols.push(if pattern & (1 << (n + i)) != 0 {
            sys.y_col(i)
        } else {
            sys.v_col(i)
        });
    }
    cols
}

fn solve_pattern(sys: &LcpSystem, pattern: usize) -> Option<ComplementarySolution> {
    let cols = pattern_columns(sys, pattern);
    let restricted = sys.columns_matrix(&cols);
    let rhs = sys.rhs_rational();
    let out = restricted.solve_square(&rhs);
    let (z, basis, basis_det) = match out.solution {
        Some(z) => {
            assert!(
                out.det.is_integer(),
                "integer matrices have integer determinants"
            );
            let det = out.det.to_integer();
            (z, Some(cols.iter().copied().collect()), Some(det))
        }
        None => {
            let z = restricted.solve_free_zero(&rhs)?;
            (z, None, None)
        }
    };
    if z.iter().any(|v| v.is_negative()) {
        return None;
    }
    let mut s = vec![Rational::zero(); sys.cols()];
    for (slot, value) in cols.iter().zip(z) {
        s[*slot] = value;
    }
    let sol = ComplementarySolution::new(sys, s, basis, basis_det)
        .expect("a pattern solve yields a feasible complementary solution");
    Some(sol)
}

/// All distinct complementary solutions found over the 2^{2n} column
/// patterns, in pattern order. Always non-empty: the all-(u, v) pattern
/// yields s = (0, 0, 0, e).
pub fn enumerate_complementary_solutions(
    m: &SymmetricIntMatrix,
) -> Result<Vec<ComplementarySolution>> {
    enumerate_complementary_solutions_with_limit(m, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_complementary_solutions_with_limit(
    m: &SymmetricIntMatrix,
    limit: usize,
) -> Result<Vec<ComplementarySolution>> {
    let n = m.n();
    if n > limit || 2 * n >= usize::BITS as usize {
        return Err(Error::DimensionLimit { n, limit });
    }
    let sys = build_system(m);
    let count = 1usize << (2 * n);
    let found = exec::filter_map_indexed(count, |pattern| solve_pattern(&sys, pattern));
    let mut seen: BTreeSet<RationalVector> = BTreeSet::new();
    Ok(found
        .into_iter()
        .filter(|sol| seen.insert(sol.s().to_vec()))
        .collect())
}

/// Exact box minimum by complementary enumeration; ties resolve to the
/// lexicographically smallest x-part.
pub fn solve_box_qp_lcp(m: &SymmetricIntMatrix) -> Result<MinimizationResult> {
    solve_box_qp_lcp_with_limit(m, DEFAULT_ENUMERATION_LIMIT)
}

pub fn solve_box_qp_lcp_with_limit(
    m: &SymmetricIntMatrix,
    limit: usize,
) -> Result<MinimizationResult> {
    let solutions = enumerate_complementary_solutions_with_limit(m, limit)?;
    let mut best: Option<(Rational, ComplementarySolution)> = None;
    for sol in solutions {
        let value = quadratic_form(m, sol.x_part())?;
        let better = match &best {
            None => true,
            Some((bv, bs)) => (&value, sol.x_part()) < (bv, bs.x_part()),
        };
        if better {
            best = Some((value, sol));
        }
    }
    let (gamma, witness) = best.expect("the trivial pattern always solves");
    Ok(MinimizationResult {
        gamma,
        argmin: witness.x_part().to_vec(),
        witness,
        method: Method::LcpEnumeration,
    })
}

/// Assembles the complementary witness at a candidate optimum x̄:
/// ȳ = max(0, −Mx̄) componentwise, ū = Mx̄ + ȳ, v̄ = e − x̄. A complementarity
/// failure means x̄ is not a KKT point of the box problem.
pub fn kkt_witness(m: &SymmetricIntMatrix, xbar: &[Rational]) -> Result<ComplementarySolution> {
    let n = m.n();
    if xbar.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: xbar.len(),
        });
    }
    let one = Rational::from_integer(BigInt::from(1));
    for (i, x) in xbar.iter().enumerate() {
        if x.is_negative() || x > &one {
            return Err(Error::OutsideBox { index: i });
        }
    }
    let mx = mat_vec(m, xbar)?;
    let y: RationalVector = mx
        .iter()
        .map(|v| {
            if v.is_negative() {
                -v.clone()
            } else {
                Rational::zero()
            }
        })
        .collect();
    let u: RationalVector = mx.iter().zip(&y).map(|(a, b)| a + b).collect();
    let v: RationalVector = xbar.iter().map(|x| &one - x).collect();
    for i in 0..n {
        let x_u = !xbar[i].is_zero() && !u[i].is_zero();
        let y_v = !y[i].is_zero() && !v[i].is_zero();
        if x_u || y_v {
            return Err(Error::ComplementarityViolation { index: i });
        }
    }
    let mut s = Vec::with_capacity(4 * n);
    s.extend(xbar.iter().cloned());
    s.extend(y);
    s.extend(u);
    s.extend(v);
    ComplementarySolution::new(&build_system(m), s, None, None)
}

/// Shrinks the support of a feasible complementary solution along exact
/// kernel directions of the support columns until those columns are
/// independent. Every step zeroes at least one coordinate, so at most 2n
/// steps occur, and the objective −eᵀy is invariant along each move.
pub fn purify_to_bfs(
    sys: &LcpSystem,
    sol: &ComplementarySolution,
) -> Result<ComplementarySolution> {
    // revalidate: callers may hand-build inputs
    let mut current = ComplementarySolution::new(sys, sol.s().to_vec(), None, None)
        .map_err(|_| Error::NotComplementaryFeasible)?;
    let objective = current.objective();
    for _ in 0..=2 * sys.n() {
        let support: Vec<usize> = current.support().iter().copied().collect();
        let Some(kernel) = sys.columns_matrix(&support).kernel_vector() else {
            return Ok(current);
        };
        // first zero hit in each direction: s_j + r·k_j = 0 at r = −s_j/k_j
        let mut forward: Option<Rational> = None;
        let mut backward: Option<Rational> = None;
        for (k, col) in kernel.iter().zip(&support) {
            if k.is_zero() {
                continue;
            }
            let r = -(&current.s[*col] / k);
            if k.is_negative() {
                forward = Some(forward.map_or(r.clone(), |f| f.min(r)));
            } else {
                backward = Some(backward.map_or(r.clone(), |b| b.max(r)));
            }
        }
        let step = forward
            .or(backward)
            .expect("a kernel vector is nonzero somewhere on the support");
        let mut s = current.s().to_vec();
        for (k, col) in kernel.iter().zip(&support) {
            s[*col] += &step * k;
        }
        let next = ComplementarySolution::new(sys, s, None, None)
            .expect("a kernel move up to the first zero stays feasible");
        debug_assert!(next.support().len() < current.support().len());
        debug_assert_eq!(next.objective(), objective);
        current = next;
    }
    Err(Error::PurificationStalled)
}

/// |det B| ≤ 2^{2L−1} for the recorded basis determinant.
pub fn check_basis_determinant_bound(
    sol: &ComplementarySolution,
    stats: &EncodingStats,
) -> Result<bool> {
    let det = sol.basis_det().ok_or(Error::NoBasisRecorded)?;
    Ok(det.abs() <= pow2(2 * stats.bits - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::encoding_length;
    use crate::rational::{rat, ratio};

    fn m(rows: &[&[i64]]) -> SymmetricIntMatrix {
        SymmetricIntMatrix::from_i64_rows(rows).unwrap()
    }

    fn rv(vals: &[(i64, i64)]) -> RationalVector {
        vals.iter().map(|&(p, q)| ratio(p, q)).collect()
    }

    #[test]
    fn build_system_one_by_one() {
        let sys = build_system(&m(&[&[0]]));
        assert_eq!(
            sys.matrix()[0],
            vec![0.into(), (-1).into(), 1.into(), 0.into()]
        );
        assert_eq!(
            sys.matrix()[1],
            vec![1.into(), 0.into(), 0.into(), 1.into()]
        );
        assert_eq!(sys.rhs(), &[BigInt::from(0), BigInt::from(1)]);

        let neg = build_system(&m(&[&[-1]]));
        assert_eq!(
            neg.matrix()[0],
            vec![1.into(), (-1).into(), 1.into(), 0.into()]
        );
    }

    #[test]
    fn uv_columns_form_identity() {
        let sys = build_system(&m(&[&[2, -3], &[-3, 5]]));
        for i in 0..2 {
            for r in 0..4 {
                let u = &sys.matrix()[r][sys.u_col(i)];
                let v = &sys.matrix()[r][sys.v_col(i)];
                assert_eq!(*u == BigInt::from(1), r == i);
                assert_eq!(*v == BigInt::from(1), r == 2 + i);
            }
        }
    }

    #[test]
    fn enumerate_negative_one_by_one() {
        let sols = enumerate_complementary_solutions(&m(&[&[-1]])).unwrap();
        let trivial = rv(&[(0, 1), (0, 1), (0, 1), (1, 1)]);
        let active = rv(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(sols.len(), 2);
        assert!(sols.iter().any(|s| s.s() == trivial.as_slice()));
        assert!(sols.iter().any(|s| s.s() == active.as_slice()));
        // the inconsistent (u, y) pattern emits nothing; duplicates collapse
    }

    #[test]
    fn enumerate_always_contains_trivial_solution() {
        let positive: &[&[i64]] = &[&[3, 1], &[1, 4]];
        let negative: &[&[i64]] = &[&[-2, 0], &[0, -2]];
        for rows in [positive, negative] {
            let mat = m(rows);
            let sols = enumerate_complementary_solutions(&mat).unwrap();
            let trivial: RationalVector = (0..8)
                .map(|j| if j >= 6 { rat(1) } else { rat(0) })
                .collect();
            assert!(sols.iter().any(|s| s.s() == trivial.as_slice()));
        }
    }

    #[test]
    fn enumerate_finds_adversarial_witness() {
        let sols = enumerate_complementary_solutions(&m(&[&[16, -8], &[-8, 3]])).unwrap();
        let expected = rv(&[
            (1, 2),
            (1, 1),
            (0, 1),
            (1, 1),
            (0, 1),
            (0, 1),
            (1, 2),
            (0, 1),
        ]);
        assert!(sols.iter().any(|s| s.s() == expected.as_slice()));
    }

    #[test]
    fn enumerate_rejects_oversized_input() {
        let big = SymmetricIntMatrix::zeros(13).unwrap();
        assert!(matches!(
            enumerate_complementary_solutions(&big),
            Err(Error::DimensionLimit { n: 13, limit: 12 })
        ));
    }

    #[test]
    fn solve_box_qp_examples() {
        let zero = solve_box_qp_lcp(&m(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(zero.gamma, rat(0));

        let neg = solve_box_qp_lcp(&m(&[&[1, -2], &[-2, 1]])).unwrap();
        assert_eq!(neg.gamma, rat(-2));
        assert_eq!(neg.argmin, vec![rat(1), rat(1)]);

        let adv = solve_box_qp_lcp(&m(&[&[16, -8], &[-8, 3]])).unwrap();
        assert_eq!(adv.gamma, rat(-1));
        assert_eq!(adv.argmin, vec![ratio(1, 2), rat(1)]);
        assert_eq!(adv.method, Method::LcpEnumeration);
    }

    #[test]
    fn objective_matches_quadratic_form() {
        let mat = m(&[&[1, -2], &[-2, 1]]);
        for sol in enumerate_complementary_solutions(&mat).unwrap() {
            assert_eq!(sol.objective(), quadratic_form(&mat, sol.x_part()).unwrap());
        }
    }

    #[test]
    fn kkt_witness_adversarial_point() {
        let w = kkt_witness(&m(&[&[16, -8], &[-8, 3]]), &rv(&[(1, 2), (1, 1)])).unwrap();
        assert_eq!(w.y_part(), rv(&[(0, 1), (1, 1)]).as_slice());
        assert_eq!(w.u_part(), rv(&[(0, 1), (0, 1)]).as_slice());
        assert_eq!(w.v_part(), rv(&[(1, 2), (0, 1)]).as_slice());
    }

    #[test]
    fn kkt_witness_at_origin_is_trivial() {
        let w = kkt_witness(&m(&[&[0, 1], &[1, 0]]), &[rat(0), rat(0)]).unwrap();
        assert_eq!(w.s()[..6], vec![rat(0); 6]);
        assert_eq!(w.v_part(), &[rat(1), rat(1)]);
    }

    #[test]
    fn kkt_witness_one_dimensional() {
        let w = kkt_witness(&m(&[&[-1]]), &[rat(1)]).unwrap();
        assert_eq!(w.s(), rv(&[(1, 1), (1, 1), (0, 1), (0, 1)]).as_slice());
    }

    #[test]
    fn kkt_witness_rejects_non_kkt_point() {
        // at x = 1/2 for M = [[-1]]: y = 1/2 but v = 1/2, so y·v ≠ 0
        assert!(matches!(
            kkt_witness(&m(&[&[-1]]), &[ratio(1, 2)]),
            Err(Error::ComplementarityViolation { index: 0 })
        ));
    }

    #[test]
    fn kkt_witness_rejects_points_outside_box() {
        assert!(matches!(
            kkt_witness(&m(&[&[-1]]), &[rat(2)]),
            Err(Error::OutsideBox { index: 0 })
        ));
        assert!(matches!(
            kkt_witness(&m(&[&[-1]]), &[rat(-1)]),
            Err(Error::OutsideBox { index: 0 })
        ));
    }

    #[test]
    fn purify_keeps_bfs_unchanged() {
        let mat = m(&[&[16, -8], &[-8, 3]]);
        let sys = build_system(&mat);
        for sol in enumerate_complementary_solutions(&mat).unwrap() {
            if sys
                .columns_matrix(&sol.support().iter().copied().collect::<Vec<_>>())
                .kernel_vector()
                .is_none()
            {
                let purified = purify_to_bfs(&sys, &sol).unwrap();
                assert_eq!(purified.s(), sol.s());
            }
        }
    }

    #[test]
    fn purify_shrinks_dependent_midpoint() {
        // midpoint of (0,0,0,1) and (1,0,0,0) for M = [[0]]
        let mat = m(&[&[0]]);
        let sys = build_system(&mat);
        let mid =
            ComplementarySolution::new(&sys, rv(&[(1, 2), (0, 1), (0, 1), (1, 2)]), None, None)
                .unwrap();
        let purified = purify_to_bfs(&sys, &mid).unwrap();
        let support: Vec<usize> = purified.support().iter().copied().collect();
        assert!(sys.columns_matrix(&support).kernel_vector().is_none());
        assert_eq!(
            quadratic_form(&mat, purified.x_part()).unwrap(),
            quadratic_form(&mat, mid.x_part()).unwrap()
        );
    }

    #[test]
    fn purify_rejects_infeasible_input() {
        // s = (1, 1, 0, 0) solves the system of M = [[-1]] but not M = [[2]]
        let sys = build_system(&m(&[&[-1]]));
        let good =
            ComplementarySolution::new(&sys, rv(&[(1, 1), (1, 1), (0, 1), (0, 1)]), None, None)
                .unwrap();
        let other = build_system(&m(&[&[2]]));
        assert!(matches!(
            purify_to_bfs(&other, &good),
            Err(Error::NotComplementaryFeasible)
        ));
    }

    #[test]
    fn determinant_bound_identity_basis() {
        let mat = m(&[&[0]]);
        let stats = encoding_length(&mat);
        let sols = enumerate_complementary_solutions(&mat).unwrap();
        let trivial = sols
            .iter()
            .find(|s| s.basis_det().is_some() && s.x_part()[0].is_zero())
            .expect("the (u, v) pattern is nonsingular");
        assert_eq!(trivial.basis_det(), Some(&BigInt::from(1)));
        assert!(check_basis_determinant_bound(trivial, &stats).unwrap());
    }

    #[test]
    fn determinant_bound_active_basis() {
        // (x, y) pattern for M = [[-1]]: B = [[1, -1], [1, 0]], det = 1
        let mat = m(&[&[-1]]);
        let stats = encoding_length(&mat);
        for sol in enumerate_complementary_solutions(&mat).unwrap() {
            if let Some(det) = sol.basis_det() {
                assert!(det.abs() <= pow2(2 * stats.bits - 1));
                assert!(check_basis_determinant_bound(&sol, &stats).unwrap());
            }
        }
    }

    #[test]
    fn determinant_bound_requires_basis() {
        let mat = m(&[&[0]]);
        let sys = build_system(&mat);
        let no_basis =
            ComplementarySolution::new(&sys, rv(&[(0, 1), (0, 1), (0, 1), (1, 1)]), None, None)
                .unwrap();
        assert!(matches!(
            check_basis_determinant_bound(&no_basis, &encoding_length(&mat)),
            Err(Error::NoBasisRecorded)
        ));
    }
}
