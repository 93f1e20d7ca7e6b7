//! Membership test for finitely generated submonoids of `Z^n`: decides
//! whether a target vector is a nonnegative integer combination of a fixed
//! list of generator vectors.
//!
//! Linearly independent generators admit at most one candidate coefficient
//! vector, recovered exactly by a Cramer solve on the Gram matrix. Dependent
//! generators fall back to the Contejean-Devie procedure, which enumerates
//! the minimal nonnegative solutions of the homogenized system; the target
//! is representable iff some minimal solution uses the homogenizing column
//! exactly once.

use std::collections::HashSet;

/// True iff `target` is a nonnegative integer combination of `gens`.
/// All generator vectors must have the same length as `target`.
pub(crate) fn is_nonneg_combination(gens: &[Vec<i64>], target: &[i64]) -> bool {
    debug_assert!(gens.iter().all(|g| g.len() == target.len()));
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    match independent_solve(gens, target) {
        Some(answer) => answer,
        None => dependent_search(gens, target),
    }
}

fn dot64(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// Fraction-free Gaussian elimination; exact for integer matrices.
fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                // Exact division is the Bareiss invariant: every entry stays
                // a determinant of a minor of the original matrix.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// `Some(answer)` when the generators are linearly independent (nonsingular
/// Gram matrix), `None` otherwise. The Gram solve only sees the projection
/// onto the generator span, so a full verification against the target
/// vector itself closes the gap.
fn independent_solve(gens: &[Vec<i64>], target: &[i64]) -> Option<bool> {
    let k = gens.len();
    let gram: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| dot64(&gens[i], &gens[j])).collect())
        .collect();
    let det = det_bareiss(gram.clone());
    if det == 0 {
        return None;
    }
    let rhs: Vec<i128> = (0..k).map(|i| dot64(&gens[i], target)).collect();
    let mut coeffs = Vec::with_capacity(k);
    for i in 0..k {
        let mut m = gram.clone();
        for (row, &r) in m.iter_mut().zip(&rhs) {
            row[i] = r;
        }
        let di = det_bareiss(m);
        if di % det != 0 {
            return Some(false);
        }
        let q = di / det;
        if q < 0 {
            return Some(false);
        }
        coeffs.push(q);
    }
    for (r, &t) in target.iter().enumerate() {
        let s: i128 = (0..k).map(|j| coeffs[j] * gens[j][r] as i128).sum();
        if s != t as i128 {
            return Some(false);
        }
    }
    Some(true)
}

fn dominates(c: &[i128], m: &[i128]) -> bool {
    c.iter().zip(m).all(|(a, b)| a >= b)
}

/// Contejean-Devie search over the homogeneous system whose columns are the
/// generators plus `-target`. A solution using the last column exactly once
/// writes the target as a nonnegative combination of the generators, and
/// every such solution sits above a minimal one with the same property, so
/// restricting the last coordinate to at most 1 loses nothing.
fn dependent_search(gens: &[Vec<i64>], target: &[i64]) -> bool {
    let dim = target.len();
    let k = gens.len();
    let mut cols: Vec<Vec<i128>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| x as i128).collect())
        .collect();
    cols.push(target.iter().map(|&x| -(x as i128)).collect());
    let t_idx = k;
    let value = |c: &[i128]| -> Vec<i128> {
        let mut v = vec![0i128; dim];
        for (cj, col) in c.iter().zip(&cols) {
            for (vi, &x) in v.iter_mut().zip(col) {
                *vi += cj * x;
            }
        }
        v
    };
    let mut minimal: Vec<Vec<i128>> = Vec::new();
    let mut frontier: Vec<Vec<i128>> = Vec::new();
    let mut seen: HashSet<Vec<i128>> = HashSet::new();
    for j in 0..=k {
        let mut c = vec![0i128; k + 1];
        c[j] = 1;
        seen.insert(c.clone());
        frontier.push(c);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in frontier.drain(..) {
            if minimal.iter().any(|m| dominates(&c, m)) {
                continue;
            }
            let v = value(&c);
            if v.iter().all(|&x| x == 0) {
                if c[t_idx] == 1 {
                    return true;
                }
                minimal.push(c);
                continue;
            }
            for (j, col) in cols.iter().enumerate() {
                // Branch only against the defect; this is the termination
                // and completeness criterion of the search.
                if dot(&v, col) < 0 {
                    let mut c2 = c.clone();
                    c2[j] += 1;
                    if c2[t_idx] > 1 {
                        continue;
                    }
                    if seen.insert(c2.clone()) {
                        next.push(c2);
                    }
                }
            }
        }
        frontier = next;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_target_is_always_representable() {
        assert!(is_nonneg_combination(&[], &[0, 0]));
        assert!(is_nonneg_combination(&[vec![-1, 2]], &[0, 0]));
    }

    #[test]
    fn empty_generator_list_spans_only_zero() {
        assert!(!is_nonneg_combination(&[], &[1]));
    }

    #[test]
    fn one_dimensional_numerical_semigroup() {
        // Generators 2 and 3 are linearly dependent in Z^1, so this
        // exercises the Contejean-Devie path.
        let gens = vec![vec![2], vec![3]];
        assert!(!is_nonneg_combination(&gens, &[1]));
        assert!(is_nonneg_combination(&gens, &[2]));
        assert!(is_nonneg_combination(&gens, &[5]));
        assert!(is_nonneg_combination(&gens, &[7]));
    }

    #[test]
    fn independent_generators_require_integer_coefficients() {
        let gens = vec![vec![1, 1], vec![1, -1]];
        assert!(is_nonneg_combination(&gens, &[2, 0]));
        // (1,0) needs coefficient 1/2 on each generator.
        assert!(!is_nonneg_combination(&gens, &[1, 0]));
        // (0,2) needs a negative coefficient.
        assert!(!is_nonneg_combination(&gens, &[0, 2]));
    }

    #[test]
    fn projection_alone_is_not_membership() {
        // The Gram solve for target (1,1) against the single generator
        // (1,0) yields coefficient 1; the verification pass must reject it.
        assert!(!is_nonneg_combination(&[vec![1, 0]], &[1, 1]));
    }

    #[test]
    fn dependent_generators_in_the_plane() {
        let gens = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        assert!(is_nonneg_combination(&gens, &[2, 1]));
        assert!(!is_nonneg_combination(&gens, &[-1, 0]));
        let gens = vec![vec![2, 0], vec![0, 2], vec![1, 1]];
        assert!(is_nonneg_combination(&gens, &[3, 3]));
        assert!(!is_nonneg_combination(&gens, &[1, 0]));
    }

    /// Brute force over coefficient vectors. Sound as an oracle when every
    /// generator is nonnegative and nonzero: each unit of coefficient adds
    /// at least 1 to the coordinate sum, so coefficients are bounded by the
    /// coordinate sum of the target.
    fn brute_force(gens: &[Vec<i64>], target: &[i64]) -> bool {
        let cap: i64 = target.iter().sum();
        fn rec(gens: &[Vec<i64>], rest: &[i64], cap: i64) -> bool {
            if rest.iter().all(|&x| x == 0) {
                return true;
            }
            let Some(g) = gens.first() else { return false };
            for c in 0..=cap {
                let reduced: Vec<i64> = rest.iter().zip(g).map(|(&r, &x)| r - c * x).collect();
                if reduced.iter().all(|&x| x >= 0) && rec(&gens[1..], &reduced, cap) {
                    return true;
                }
            }
            false
        }
        rec(gens, target, cap)
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force_on_nonnegative_generators(
            gens in proptest::collection::vec(
                proptest::collection::vec(0i64..4, 2).prop_filter(
                    "nonzero generator",
                    |g| g.iter().any(|&x| x != 0),
                ),
                1..4,
            ),
            target in proptest::collection::vec(0i64..10, 2),
        ) {
            prop_assert_eq!(
                is_nonneg_combination(&gens, &target),
                brute_force(&gens, &target)
            );
        }

        #[test]
        fn random_combinations_are_members(
            gens in proptest::collection::vec(
                proptest::collection::vec(-3i64..4, 3).prop_filter(
                    "nonzero generator",
                    |g| g.iter().any(|&x| x != 0),
                ),
                1..4,
            ),
            coeffs in proptest::collection::vec(0i64..5, 4),
        ) {
            let target: Vec<i64> = (0..3)
                .map(|r| gens.iter().zip(&coeffs).map(|(g, &c)| c * g[r]).sum())
                .collect();
            prop_assert!(is_nonneg_combination(&gens, &target));
        }
    }
}
