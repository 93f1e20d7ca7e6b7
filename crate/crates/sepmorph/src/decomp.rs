//! The adjoint class `D = C + K` of a curve class and its decompositions
//! `D = 2*D0 + D1` with both parts effective, ranked by the objective
//! `(D0^2 - D0.K)/2`. The maximizing decomposition drives every obstruction
//! rule downstream.

use crate::lattice::DivisorClass;
use crate::{Error, Result};

/// Hard cap on the candidate `D1` grid, guarding user lattices of high
/// rank with large coordinates.
const MAX_CANDIDATES: u128 = 4_000_000;

/// A choice `d = 2*d0 + d1` with both parts effective. `d1` may be zero,
/// which represents an empty residual curve. The objective is
/// `(d0^2 - d0.K)/2`, always a nonnegative integer for stored values.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub struct Decomposition {
    pub d: DivisorClass,
    pub d0: DivisorClass,
    pub d1: DivisorClass,
    pub objective: i64,
}

/// The class `c + K` on the surface of `c`. The input must be effective.
pub fn adjoint_divisor_class(c: &DivisorClass) -> Result<DivisorClass> {
    if !c.is_effective() {
        return Err(Error::NotEffective(c.to_string()));
    }
    c.add(&c.surface.canonical_class())
}

/// All decompositions `d = 2*d0 + d1` with `d0`, `d1` effective, the
/// objective a nonnegative integer, and every `d1` coordinate of absolute
/// value at most `bound`. Sorted by decreasing objective, ties broken by
/// lexicographically smallest `d1` coordinates. An empty result means no
/// decomposition exists within the bound.
pub fn enumerate_decompositions(d: &DivisorClass, bound: i64) -> Result<Vec<Decomposition>> {
    if bound < 0 {
        return Err(Error::InvalidInput(format!(
            "decomposition bound must be nonnegative, got {bound}"
        )));
    }
    if !d.is_effective() {
        return Err(Error::NotEffective(d.to_string()));
    }
    let rank = d.surface.rank;
    let width = 2u128 * bound as u128 + 1;
    if width.pow(rank as u32) > MAX_CANDIDATES {
        return Err(Error::InvalidInput(format!(
            "decomposition search space exceeds {MAX_CANDIDATES} candidates"
        )));
    }
    let mut out = Vec::new();
    let mut candidate = vec![-bound; rank];
    loop {
        if let Some(dec) = try_decomposition(d, &candidate)? {
            out.push(dec);
        }
        // Odometer step over the box [-bound, bound]^rank.
        let mut i = 0;
        loop {
            if i == rank {
                out.sort_by(|a, b| {
                    b.objective
                        .cmp(&a.objective)
                        .then_with(|| a.d1.coords.cmp(&b.d1.coords))
                });
                return Ok(out);
            }
            if candidate[i] < bound {
                candidate[i] += 1;
                break;
            }
            candidate[i] = -bound;
            i += 1;
        }
    }
}

fn try_decomposition(d: &DivisorClass, d1_coords: &[i64]) -> Result<Option<Decomposition>> {
    // d1 must match d componentwise mod 2 for d0 = (d - d1)/2 to be integral.
    let mut d0_coords = Vec::with_capacity(d1_coords.len());
    for (&total, &part) in d.coords.iter().zip(d1_coords) {
        let rest = total - part;
        if rest.rem_euclid(2) != 0 {
            return Ok(None);
        }
        d0_coords.push(rest / 2);
    }
    let d0 = DivisorClass::new(d.surface.clone(), d0_coords)?;
    let d1 = DivisorClass::new(d.surface.clone(), d1_coords.to_vec())?;
    if !d0.is_effective() || !d1.is_effective() {
        return Ok(None);
    }
    let numerator = d0.self_intersection() - d0.canonical_pairing();
    if numerator.rem_euclid(2) != 0 {
        return Ok(None);
    }
    let objective = numerator / 2;
    if objective < 0 {
        return Ok(None);
    }
    Ok(Some(Decomposition {
        d: d.clone(),
        d0,
        d1,
        objective,
    }))
}

/// The head of [`enumerate_decompositions`] with the bound set to the
/// largest coordinate magnitude of `d`.
pub fn maximize_decomposition(d: &DivisorClass) -> Result<Decomposition> {
    let bound = d.coords.iter().map(|x| x.abs()).max().unwrap_or(0);
    enumerate_decompositions(d, bound)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoDecomposition(d.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{builtin_surface, SurfaceLattice};

    #[test]
    fn adjoint_classes_on_builtins() {
        let p = builtin_surface("P2").unwrap();
        let adj = adjoint_divisor_class(&p.divisor(&[7]).unwrap()).unwrap();
        assert_eq!(adj.coords, vec![4]);
        let adj = adjoint_divisor_class(&p.divisor(&[3]).unwrap()).unwrap();
        assert!(adj.is_zero());
        let q = builtin_surface("QuadricEllipsoid").unwrap();
        let adj = adjoint_divisor_class(&q.divisor(&[5, 5]).unwrap()).unwrap();
        assert_eq!(adj.coords, vec![3, 3]);
        assert!(matches!(
            adjoint_divisor_class(&p.divisor(&[-2]).unwrap()),
            Err(Error::NotEffective(_))
        ));
    }

    #[test]
    fn enumeration_on_the_plane() {
        let p = builtin_surface("P2").unwrap();
        let list = enumerate_decompositions(&p.divisor(&[4]).unwrap(), 4).unwrap();
        assert_eq!(list.len(), 3);
        assert_eq!(list[0].d0.coords, vec![2]);
        assert!(list[0].d1.is_zero());
        assert_eq!(list[0].objective, 5);
        assert_eq!(list[1].objective, 2);
        assert_eq!(list[2].objective, 0);

        let list = enumerate_decompositions(&p.divisor(&[3]).unwrap(), 3).unwrap();
        assert_eq!(list[0].d0.coords, vec![1]);
        assert_eq!(list[0].d1.coords, vec![1]);
        assert_eq!(list[0].objective, 2);
    }

    #[test]
    fn enumeration_on_the_quadric() {
        let q = builtin_surface("QuadricEllipsoid").unwrap();
        let list = enumerate_decompositions(&q.divisor(&[3, 3]).unwrap(), 3).unwrap();
        // Objective of d0 = (1,1): (d0.d0 - d0.K)/2 = (2 + 4)/2 = 3.
        assert_eq!(list[0].d0.coords, vec![1, 1]);
        assert_eq!(list[0].d1.coords, vec![1, 1]);
        assert_eq!(list[0].objective, 3);
        // Tie between d1 = (1,3) and d1 = (3,1) resolves lexicographically.
        assert_eq!(list[1].d1.coords, vec![1, 3]);
        assert_eq!(list[2].d1.coords, vec![3, 1]);
    }

    #[test]
    fn empty_enumeration_within_small_bound() {
        let p = builtin_surface("P2").unwrap();
        // Degree 3 needs an odd d1, impossible with bound 0.
        let list = enumerate_decompositions(&p.divisor(&[3]).unwrap(), 0).unwrap();
        assert!(list.is_empty());
    }

    #[test]
    fn reconstruction_invariant() {
        let p = builtin_surface("P2").unwrap();
        let q = builtin_surface("QuadricEllipsoid").unwrap();
        let mut classes = Vec::new();
        for deg in 0..=40 {
            classes.push(p.divisor(&[deg]).unwrap());
        }
        for a in 0..=12 {
            for b in 0..=12 {
                classes.push(q.divisor(&[a, b]).unwrap());
            }
        }
        for d in classes {
            let bound = d.coords.iter().map(|x| x.abs()).max().unwrap();
            let list = enumerate_decompositions(&d, bound).unwrap();
            let best = maximize_decomposition(&d).unwrap();
            for dec in &list {
                let rebuilt = dec.d0.scale(2).add(&dec.d1).unwrap();
                assert_eq!(rebuilt.coords, d.coords);
                assert!(dec.objective >= 0);
                assert!(best.objective >= dec.objective);
            }
            assert_eq!(list[0], best);
        }
    }

    #[test]
    fn plane_maximizer_closed_form() {
        let p = builtin_surface("P2").unwrap();
        for deg in 0..=37 {
            let d = p.divisor(&[deg]).unwrap();
            let best = maximize_decomposition(&d).unwrap();
            assert_eq!(best.d0.coords, vec![deg / 2]);
            assert_eq!(best.d1.coords, vec![deg % 2]);
        }
    }

    #[test]
    fn quadric_maximizer_closed_form() {
        let q = builtin_surface("QuadricEllipsoid").unwrap();
        for deg in 0..=38i64 {
            let d = q.divisor(&[deg, deg]).unwrap();
            let best = maximize_decomposition(&d).unwrap();
            let half = deg / 2;
            assert_eq!(best.d0.coords, vec![half, half]);
            let rem = deg % 2;
            assert_eq!(best.d1.coords, vec![rem, rem]);
        }
    }

    #[test]
    fn adjoint_then_maximize_matches_curve_degree_formulas() {
        let p = builtin_surface("P2").unwrap();
        // Odd curve degree 2s+1: d0 of degree s-1, empty d1.
        for s in 2..=18i64 {
            let curve = p.divisor(&[2 * s + 1]).unwrap();
            let best = maximize_decomposition(&adjoint_divisor_class(&curve).unwrap()).unwrap();
            assert_eq!(best.d0.coords, vec![s - 1]);
            assert!(best.d1.is_zero());
        }
        // Even curve degree 2s: d0 of degree s-2, d1 a line.
        for s in 2..=20i64 {
            let curve = p.divisor(&[2 * s]).unwrap();
            let best = maximize_decomposition(&adjoint_divisor_class(&curve).unwrap()).unwrap();
            assert_eq!(best.d0.coords, vec![s - 2]);
            assert_eq!(best.d1.coords, vec![1]);
        }
        let q = builtin_surface("QuadricEllipsoid").unwrap();
        // Bidegree (d,d): d0 = (s-1,s-1) with d1 empty for d = 2s and
        // d1 = (1,1) for d = 2s+1.
        for d in 4..=40i64 {
            let curve = q.divisor(&[d, d]).unwrap();
            let best = maximize_decomposition(&adjoint_divisor_class(&curve).unwrap()).unwrap();
            let s = d / 2;
            if d % 2 == 0 {
                assert_eq!(best.d0.coords, vec![s - 1, s - 1]);
                assert!(best.d1.is_zero());
            } else {
                assert_eq!(best.d0.coords, vec![s - 1, s - 1]);
                assert_eq!(best.d1.coords, vec![1, 1]);
            }
        }
    }

    #[test]
    fn zero_class_decomposes_trivially() {
        let p = builtin_surface("P2").unwrap();
        let best = maximize_decomposition(&p.zero_class()).unwrap();
        assert!(best.d0.is_zero() && best.d1.is_zero());
        assert_eq!(best.objective, 0);
    }

    #[test]
    fn odd_objective_candidates_are_skipped() {
        // Unit form with zero canonical class: d0 = (1) has odd numerator
        // and is not a valid part, leaving only d0 = 0.
        let s = SurfaceLattice::new("odd", vec![vec![1]], vec![0], 1, vec![vec![1]], true)
            .unwrap();
        let best = maximize_decomposition(&s.divisor(&[2]).unwrap()).unwrap();
        assert!(best.d0.is_zero());
        assert_eq!(best.d1.coords, vec![2]);
        assert_eq!(best.objective, 0);
    }
}
