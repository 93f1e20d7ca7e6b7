//! Integer intersection theory on the Picard lattice of an ambient real
//! surface: the pairing, the canonical class, Riemann-Roch lower bounds,
//! adjunction genus, effective-cone membership, and the three ambient
//! conditions every obstruction below assumes.
//!
//! Entry magnitudes are capped so that all pairings fit in `i64` exactly;
//! intermediate products run in `i128`.

use std::fmt;
use std::sync::Arc;

use crate::monoid::is_nonneg_combination;
use crate::{Error, Result};

/// Largest lattice rank accepted from any source.
pub const MAX_RANK: usize = 16;
/// Largest absolute value accepted for Gram entries, class coordinates,
/// and generator coordinates. Keeps every pairing inside `i64`.
pub const MAX_ENTRY: i64 = 100_000;

/// Picard-lattice data of an ambient surface: intersection form, canonical
/// class, holomorphic Euler characteristic, and a generating set of the
/// effective cone as a monoid.
///
/// Values are immutable after construction and shared through [`Arc`];
/// every operation on them is a pure function, safe from any thread.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub struct SurfaceLattice {
    pub name: String,
    pub rank: usize,
    /// Symmetric `rank` x `rank` intersection form.
    pub gram: Vec<Vec<i64>>,
    /// Coordinates of the canonical class in the lattice basis.
    pub canonical: Vec<i64>,
    /// Holomorphic Euler characteristic of the structure sheaf.
    pub chi: i64,
    /// Monoid generators of the effective cone used by this tool.
    pub effective_generators: Vec<Vec<i64>>,
    /// True for surfaces loaded from a definition file: the lattice shape
    /// is validated but the existence of a real surface with this data is
    /// the user's assertion, not ours.
    pub user_asserted: bool,
}

impl SurfaceLattice {
    pub fn new(
        name: impl Into<String>,
        gram: Vec<Vec<i64>>,
        canonical: Vec<i64>,
        chi: i64,
        effective_generators: Vec<Vec<i64>>,
        user_asserted: bool,
    ) -> Result<Arc<Self>> {
        let name = name.into();
        let rank = gram.len();
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidLattice(format!(
                "rank must be between 1 and {MAX_RANK}, got {rank}"
            )));
        }
        for row in &gram {
            if row.len() != rank {
                return Err(Error::InvalidLattice(format!(
                    "gram matrix is not {rank} x {rank}"
                )));
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidLattice(format!(
                        "gram matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        if canonical.len() != rank {
            return Err(Error::InvalidLattice(format!(
                "canonical class has length {}, expected {rank}",
                canonical.len()
            )));
        }
        if effective_generators.is_empty() {
            return Err(Error::InvalidLattice(
                "effective generator list is empty".into(),
            ));
        }
        for (i, g) in effective_generators.iter().enumerate() {
            if g.len() != rank {
                return Err(Error::InvalidLattice(format!(
                    "effective generator {i} has length {}, expected {rank}",
                    g.len()
                )));
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidLattice(format!(
                    "effective generator {i} is the zero vector"
                )));
            }
        }
        let all_entries = gram
            .iter()
            .flatten()
            .chain(&canonical)
            .chain(effective_generators.iter().flatten())
            .chain(std::iter::once(&chi));
        for &x in all_entries {
            if x.abs() > MAX_ENTRY {
                return Err(Error::InvalidLattice(format!(
                    "entry {x} exceeds the supported magnitude {MAX_ENTRY}"
                )));
            }
        }
        Ok(Arc::new(SurfaceLattice {
            name,
            rank,
            gram,
            canonical,
            chi,
            effective_generators,
            user_asserted,
        }))
    }

    /// Bilinear pairing of two coordinate vectors under the Gram matrix.
    /// Entry caps guarantee the result fits in `i64`.
    fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc: i128 = 0;
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                acc += ai as i128 * self.gram[i][j] as i128 * bj as i128;
            }
        }
        i64::try_from(acc).expect("pairing bounded by entry caps")
    }

    /// The three ambient conditions: positive Euler characteristic,
    /// nonnegative canonical self-intersection, and anticanonical class
    /// nonnegative against every effective generator (hence against every
    /// effective class, by linearity).
    pub fn setup_conditions(&self) -> SetupVerdict {
        let chi_ok = self.chi >= 1;
        let k_square_ok = self.pairing(&self.canonical, &self.canonical) >= 0;
        let nef_anticanonical_ok = self
            .effective_generators
            .iter()
            .all(|g| -self.pairing(&self.canonical, g) >= 0);
        SetupVerdict {
            chi_ok,
            k_square_ok,
            nef_anticanonical_ok,
            overall: chi_ok && k_square_ok && nef_anticanonical_ok,
        }
    }

    pub fn canonical_class(self: &Arc<Self>) -> DivisorClass {
        DivisorClass {
            surface: Arc::clone(self),
            coords: self.canonical.clone(),
        }
    }

    pub fn zero_class(self: &Arc<Self>) -> DivisorClass {
        DivisorClass {
            surface: Arc::clone(self),
            coords: vec![0; self.rank],
        }
    }

    /// Convenience constructor for a class on this surface.
    pub fn divisor(self: &Arc<Self>, coords: &[i64]) -> Result<DivisorClass> {
        DivisorClass::new(Arc::clone(self), coords.to_vec())
    }

    /// Structural match against the built-in projective plane, ignoring
    /// the user-asserted flag. Closed-form rules dispatch on this.
    pub fn is_builtin_p2(&self) -> bool {
        self.same_data(&builtin_surface("P2").expect("builtin"))
    }

    /// Structural match against the built-in quadric ellipsoid.
    pub fn is_builtin_quadric(&self) -> bool {
        self.same_data(&builtin_surface("QuadricEllipsoid").expect("builtin"))
    }

    fn same_data(&self, other: &SurfaceLattice) -> bool {
        self.name == other.name
            && self.rank == other.rank
            && self.gram == other.gram
            && self.canonical == other.canonical
            && self.chi == other.chi
            && self.effective_generators == other.effective_generators
    }
}

/// Outcome of [`SurfaceLattice::setup_conditions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[non_exhaustive]
pub struct SetupVerdict {
    pub chi_ok: bool,
    pub k_square_ok: bool,
    pub nef_anticanonical_ok: bool,
    /// Conjunction of the three flags.
    pub overall: bool,
}

impl SetupVerdict {
    /// Names of the failed conditions, empty when overall holds.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.chi_ok {
            out.push("chi_ok");
        }
        if !self.k_square_ok {
            out.push("k_square_ok");
        }
        if !self.nef_anticanonical_ok {
            out.push("nef_anticanonical_ok");
        }
        out
    }
}

/// An integer divisor class in the basis of its surface's lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub struct DivisorClass {
    pub surface: Arc<SurfaceLattice>,
    pub coords: Vec<i64>,
}

impl DivisorClass {
    pub fn new(surface: Arc<SurfaceLattice>, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != surface.rank {
            return Err(Error::InvalidInput(format!(
                "class {} has length {}, surface {} has rank {}",
                fmt_coords(&coords),
                coords.len(),
                surface.name,
                surface.rank
            )));
        }
        if let Some(&x) = coords.iter().find(|x| x.abs() > MAX_ENTRY) {
            return Err(Error::InvalidInput(format!(
                "coordinate {x} exceeds the supported magnitude {MAX_ENTRY}"
            )));
        }
        Ok(DivisorClass { surface, coords })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    fn same_surface(&self, other: &DivisorClass) -> bool {
        Arc::ptr_eq(&self.surface, &other.surface) || *self.surface == *other.surface
    }

    /// Intersection number of two classes on the same surface.
    pub fn intersect(&self, other: &DivisorClass) -> Result<i64> {
        if !self.same_surface(other) {
            return Err(Error::SurfaceMismatch {
                left: self.surface.name.clone(),
                right: other.surface.name.clone(),
            });
        }
        Ok(self.surface.pairing(&self.coords, &other.coords))
    }

    /// Self-intersection number.
    pub fn self_intersection(&self) -> i64 {
        self.surface.pairing(&self.coords, &self.coords)
    }

    /// Pairing with the canonical class of the surface.
    pub fn canonical_pairing(&self) -> i64 {
        self.surface.pairing(&self.coords, &self.surface.canonical)
    }

    /// Guaranteed dimension lower bound for global sections of this class
    /// under the ambient conditions: `chi + (D.D - D.K)/2`.
    pub fn rr_lower_bound(&self) -> Result<i64> {
        let n = self.self_intersection() - self.canonical_pairing();
        if n.rem_euclid(2) != 0 {
            return Err(Error::ParityViolation {
                what: "D.D - D.K".into(),
                value: n,
            });
        }
        Ok(self.surface.chi + n / 2)
    }

    /// Arithmetic genus of a curve in this class: `(D.D + D.K)/2 + 1`.
    pub fn adjunction_genus(&self) -> Result<i64> {
        let n = self.self_intersection() + self.canonical_pairing();
        if n.rem_euclid(2) != 0 {
            return Err(Error::ParityViolation {
                what: "D.D + D.K".into(),
                value: n,
            });
        }
        let genus = n / 2 + 1;
        if genus < 0 {
            return Err(Error::NegativeGenus {
                class: self.to_string(),
                genus,
            });
        }
        Ok(genus)
    }

    /// Membership in the monoid generated by the surface's effective
    /// generators. The zero class is effective (empty combination).
    pub fn is_effective(&self) -> bool {
        is_nonneg_combination(&self.surface.effective_generators, &self.coords)
    }

    /// Componentwise sum; both classes must live on the same surface.
    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        if !self.same_surface(other) {
            return Err(Error::SurfaceMismatch {
                left: self.surface.name.clone(),
                right: other.surface.name.clone(),
            });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(DivisorClass {
            surface: Arc::clone(&self.surface),
            coords,
        })
    }

    /// Componentwise integer scaling.
    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass {
            surface: Arc::clone(&self.surface),
            coords: self.coords.iter().map(|&x| k * x).collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_coords(&self.coords))
    }
}

fn fmt_coords(coords: &[i64]) -> String {
    let inner: Vec<String> = coords.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// The two surfaces with fixed data: the real projective plane `P2`
/// (rank 1, self-intersection 1, canonical class -3H) and the quadric
/// ellipsoid `QuadricEllipsoid` (rank 2, hyperbolic form, canonical class
/// (-2,-2)). Curves on the ellipsoid carry bidegrees `(d,d)`.
pub fn builtin_surface(name: &str) -> Result<Arc<SurfaceLattice>> {
    match name {
        "P2" => SurfaceLattice::new(
            "P2",
            vec![vec![1]],
            vec![-3],
            1,
            vec![vec![1]],
            false,
        ),
        "QuadricEllipsoid" => SurfaceLattice::new(
            "QuadricEllipsoid",
            vec![vec![0, 1], vec![1, 0]],
            vec![-2, -2],
            1,
            vec![vec![1, 0], vec![0, 1]],
            false,
        ),
        other => Err(Error::UnknownSurface(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p2() -> Arc<SurfaceLattice> {
        builtin_surface("P2").unwrap()
    }

    fn quadric() -> Arc<SurfaceLattice> {
        builtin_surface("QuadricEllipsoid").unwrap()
    }

    #[test]
    fn builtin_catalog() {
        let p = p2();
        assert_eq!(p.rank, 1);
        assert_eq!(p.canonical, vec![-3]);
        let q = quadric();
        assert_eq!(q.rank, 2);
        assert_eq!(q.canonical, vec![-2, -2]);
        assert!(matches!(
            builtin_surface("K3ish"),
            Err(Error::UnknownSurface(_))
        ));
        assert!(p.is_builtin_p2() && !p.is_builtin_quadric());
        assert!(q.is_builtin_quadric() && !q.is_builtin_p2());
    }

    #[test]
    fn intersection_numbers() {
        let p = p2();
        let h = p.divisor(&[1]).unwrap();
        assert_eq!(h.intersect(&h).unwrap(), 1);
        let q = quadric();
        let a = q.divisor(&[1, 0]).unwrap();
        let b = q.divisor(&[0, 1]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), 1);
        let c = q.divisor(&[2, 2]).unwrap();
        assert_eq!(c.intersect(&c).unwrap(), 8);
    }

    #[test]
    fn surfaces_must_match() {
        let h = p2().divisor(&[1]).unwrap();
        let a = quadric().divisor(&[1, 0]).unwrap();
        assert!(matches!(
            h.intersect(&a),
            Err(Error::SurfaceMismatch { .. })
        ));
        assert!(matches!(h.add(&a), Err(Error::SurfaceMismatch { .. })));
    }

    #[test]
    fn canonical_pairings() {
        let p = p2();
        assert_eq!(p.divisor(&[2]).unwrap().canonical_pairing(), -6);
        assert_eq!(p.zero_class().canonical_pairing(), 0);
        let q = quadric();
        assert_eq!(q.divisor(&[1, 1]).unwrap().canonical_pairing(), -4);
    }

    #[test]
    fn riemann_roch_lower_bounds() {
        let p = p2();
        assert_eq!(p.zero_class().rr_lower_bound().unwrap(), 1);
        assert_eq!(p.divisor(&[2]).unwrap().rr_lower_bound().unwrap(), 6);
        let q = quadric();
        assert_eq!(q.divisor(&[1, 1]).unwrap().rr_lower_bound().unwrap(), 4);
        // Monomial-count oracles: degree-k forms in 3 variables on the
        // plane, bidegree (a,b) monomials on the quadric.
        for k in 0..=20 {
            let d = p.divisor(&[k]).unwrap();
            assert_eq!(d.rr_lower_bound().unwrap(), (k + 1) * (k + 2) / 2);
        }
        for a in 0..=20 {
            for b in 0..=20 {
                let d = q.divisor(&[a, b]).unwrap();
                assert_eq!(d.rr_lower_bound().unwrap(), (a + 1) * (b + 1));
            }
        }
    }

    #[test]
    fn adjunction_genus_closed_forms() {
        let p = p2();
        assert_eq!(p.divisor(&[1]).unwrap().adjunction_genus().unwrap(), 0);
        assert_eq!(p.divisor(&[5]).unwrap().adjunction_genus().unwrap(), 6);
        let q = quadric();
        assert_eq!(q.divisor(&[4, 4]).unwrap().adjunction_genus().unwrap(), 9);
        for d in 1..=30 {
            let plane = p.divisor(&[d]).unwrap();
            assert_eq!(plane.adjunction_genus().unwrap(), (d - 1) * (d - 2) / 2);
            let quad = q.divisor(&[d, d]).unwrap();
            assert_eq!(quad.adjunction_genus().unwrap(), (d - 1) * (d - 1));
        }
    }

    #[test]
    fn negative_genus_is_rejected() {
        // (2,0) on the quadric: D.D = 0, D.K = -4, genus -1. Plane classes
        // never go negative, (k-1)(k-2)/2 >= 0 for every integer k.
        let q = quadric();
        assert!(matches!(
            q.divisor(&[2, 0]).unwrap().adjunction_genus(),
            Err(Error::NegativeGenus { genus: -1, .. })
        ));
        assert_eq!(q.divisor(&[1, 0]).unwrap().adjunction_genus().unwrap(), 0);
        let p = p2();
        assert_eq!(p.divisor(&[-1]).unwrap().adjunction_genus().unwrap(), 3);
    }

    #[test]
    fn parity_violations_are_hard_errors() {
        // Rank-1 lattice with unit form and zero canonical class: D.D - D.K
        // is odd for odd classes.
        let s = SurfaceLattice::new("odd", vec![vec![1]], vec![0], 1, vec![vec![1]], true)
            .unwrap();
        let d = s.divisor(&[1]).unwrap();
        assert!(matches!(
            d.rr_lower_bound(),
            Err(Error::ParityViolation { .. })
        ));
        assert!(matches!(
            d.adjunction_genus(),
            Err(Error::ParityViolation { .. })
        ));
    }

    #[test]
    fn effectivity_on_builtins() {
        let p = p2();
        assert!(p.divisor(&[3]).unwrap().is_effective());
        assert!(!p.divisor(&[-1]).unwrap().is_effective());
        let q = quadric();
        assert!(!q.divisor(&[2, -1]).unwrap().is_effective());
        assert!(q.divisor(&[0, 0]).unwrap().is_effective());
        assert!(q.divisor(&[7, 0]).unwrap().is_effective());
    }

    #[test]
    fn setup_conditions_on_builtins_and_custom() {
        assert!(p2().setup_conditions().overall);
        assert!(quadric().setup_conditions().overall);
        let degenerate =
            SurfaceLattice::new("flat", vec![vec![1]], vec![-3], 0, vec![vec![1]], true)
                .unwrap();
        let verdict = degenerate.setup_conditions();
        assert!(!verdict.chi_ok);
        assert!(!verdict.overall);
        assert_eq!(verdict.failures(), vec!["chi_ok"]);
    }

    #[test]
    fn lattice_shape_is_validated() {
        assert!(matches!(
            SurfaceLattice::new("bad", vec![vec![0, 1], vec![2, 0]], vec![0, 0], 1,
                vec![vec![1, 0]], true),
            Err(Error::InvalidLattice(_))
        ));
        assert!(matches!(
            SurfaceLattice::new("bad", vec![vec![1]], vec![0, 0], 1, vec![vec![1]], true),
            Err(Error::InvalidLattice(_))
        ));
        assert!(matches!(
            SurfaceLattice::new("bad", vec![vec![1]], vec![0], 1, vec![], true),
            Err(Error::InvalidLattice(_))
        ));
        assert!(matches!(
            SurfaceLattice::new("bad", vec![vec![1]], vec![0], 1, vec![vec![0]], true),
            Err(Error::InvalidLattice(_))
        ));
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_and_bilinear(
            a in proptest::collection::vec(-20i64..21, 2),
            b in proptest::collection::vec(-20i64..21, 2),
            c in proptest::collection::vec(-20i64..21, 2),
        ) {
            let q = quadric();
            let da = q.divisor(&a).unwrap();
            let db = q.divisor(&b).unwrap();
            let dc = q.divisor(&c).unwrap();
            prop_assert_eq!(da.intersect(&db).unwrap(), db.intersect(&da).unwrap());
            let sum = da.add(&db).unwrap();
            prop_assert_eq!(
                sum.intersect(&dc).unwrap(),
                da.intersect(&dc).unwrap() + db.intersect(&dc).unwrap()
            );
            prop_assert_eq!(
                da.scale(3).intersect(&dc).unwrap(),
                3 * da.intersect(&dc).unwrap()
            );
        }
    }
}
