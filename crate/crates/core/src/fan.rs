//! Fans of smooth compact toric varieties.
//!
//! A fan is given by its rays (primitive lattice vectors) and its maximal
//! cones (index sets into the ray list). Only simplicial presentations with
//! full-dimensional maximal cones are supported, which is automatic for the
//! smooth compact case and turns smoothness into a determinant check. The
//! ray order is authoritative: it fixes the coordinate order `x_0..x_{r-1}`
//! of the homogeneous coordinate ring, so files must not be reordered.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::feasible_eq_nonneg;
use crate::matrix::Matrix;
use crate::{Int, IntMatrix, Rat};

/// A fan presented by rays and maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    name: String,
    dim: usize,
    rays: Vec<Vec<Int>>,
    max_cones: Vec<Vec<usize>>,
}

/// A face of the fan, i.e. a subset of some maximal cone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    pub ray_indices: Vec<usize>,
}

/// Outcome of [`Fan::validate`].
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub is_simplicial: bool,
    pub is_smooth: bool,
    pub is_complete: bool,
    /// `(what, reason)` pairs; empty exactly when all three flags hold.
    pub failures: Vec<(String, String)>,
}

impl ValidationReport {
    pub fn all_good(&self) -> bool {
        self.is_simplicial && self.is_smooth && self.is_complete
    }
}

fn fmt_indices(c: &[usize]) -> String {
    let inner: Vec<String> = c.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl Fan {
    /// Structural construction: ray lengths must match `dim` and cone
    /// indices must be in range. Semantic defects (non-primitive rays,
    /// wrong cone sizes, ...) are left for [`Fan::validate`] to report.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        rays: Vec<Vec<Int>>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Fan> {
        if dim == 0 {
            return Err(Error::Input("fan dimension must be at least 1".into()));
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != dim {
                return Err(Error::Shape(format!(
                    "ray {i} has {} coordinates, expected {dim}",
                    ray.len()
                )));
            }
        }
        let mut cones = max_cones;
        for cone in &mut cones {
            cone.sort_unstable();
            if let Some(&bad) = cone.iter().find(|&&ix| ix >= rays.len()) {
                return Err(Error::Shape(format!(
                    "cone {} references ray {bad}, but there are only {} rays",
                    fmt_indices(cone),
                    rays.len()
                )));
            }
        }
        Ok(Fan {
            name: name.into(),
            dim,
            rays,
            max_cones: cones,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Ambient lattice rank `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of rays `r`.
    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// The `r x n` matrix whose rows are the ray generators; its cokernel
    /// is the divisor class group.
    pub fn ray_matrix(&self) -> IntMatrix {
        Matrix::from_rows(self.rays.clone()).expect("rays are rectangular")
    }

    /// Structural equality ignoring the name.
    pub fn same_structure(&self, other: &Fan) -> bool {
        self.dim == other.dim && self.rays == other.rays && self.max_cones == other.max_cones
    }

    fn cone_matrix(&self, cone: &[usize]) -> IntMatrix {
        Matrix::from_rows(cone.iter().map(|&i| self.rays[i].clone()).collect())
            .expect("cone rows are rectangular")
    }

    /// Checks the hypotheses needed of the target variety: simplicial,
    /// smooth (all cone determinants `±1`) and complete (every wall borders
    /// exactly two maximal cones and cone interiors are pairwise disjoint).
    pub fn validate(&self) -> ValidationReport {
        let mut failures: Vec<(String, String)> = Vec::new();
        let n = self.dim;

        let mut rays_ok = true;
        for (i, ray) in self.rays.iter().enumerate() {
            if ray.iter().all(Zero::is_zero) {
                failures.push((format!("ray {i}"), "zero vector".into()));
                rays_ok = false;
                continue;
            }
            let gcd = ray
                .iter()
                .fold(Int::zero(), |acc, c| Integer::gcd(&acc, &c.clone()));
            if !gcd.is_one() {
                failures.push((format!("ray {i}"), format!("not primitive (gcd {gcd})")));
                rays_ok = false;
            }
        }
        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                if self.rays[i] == self.rays[j] {
                    failures.push((format!("rays {i},{j}"), "duplicate rays".into()));
                    rays_ok = false;
                }
            }
        }

        let mut is_simplicial = true;
        let mut dets_unit = true;
        let mut cones_sound = true;
        for cone in &self.max_cones {
            let id = format!("cone {}", fmt_indices(cone));
            let distinct: BTreeSet<usize> = cone.iter().copied().collect();
            if distinct.len() != cone.len() {
                failures.push((id, "repeated ray index".into()));
                is_simplicial = false;
                cones_sound = false;
                continue;
            }
            if cone.len() != n {
                failures.push((id, format!("has {} rays, expected {n}", cone.len())));
                is_simplicial = false;
                cones_sound = false;
                continue;
            }
            let det = self.cone_matrix(cone).det();
            if det.is_zero() {
                failures.push((id, "rays linearly dependent".into()));
                is_simplicial = false;
                cones_sound = false;
            } else if !det.abs().is_one() {
                failures.push((id, format!("determinant {det}, not unimodular")));
                dets_unit = false;
            }
        }

        let is_smooth = is_simplicial && dets_unit && rays_ok;
        let is_complete = if cones_sound && rays_ok {
            self.check_complete(&mut failures)
        } else {
            if cones_sound {
                // ray defects already recorded; completeness is unreliable
                failures.push(("fan".into(), "completeness not decidable".into()));
            }
            false
        };

        ValidationReport {
            is_simplicial,
            is_smooth,
            is_complete,
            failures,
        }
    }

    fn check_complete(&self, failures: &mut Vec<(String, String)>) -> bool {
        let n = self.dim;
        let mut ok = true;
        if self.max_cones.is_empty() {
            failures.push(("fan".into(), "no maximal cones".into()));
            return false;
        }
        // every wall ((n-1)-face) must lie in exactly two maximal cones
        let mut walls: BTreeSet<Vec<usize>> = BTreeSet::new();
        for cone in &self.max_cones {
            for omit in 0..n {
                let mut wall = cone.clone();
                wall.remove(omit);
                walls.insert(wall);
            }
        }
        for wall in &walls {
            let bordering = self
                .max_cones
                .iter()
                .filter(|cone| wall.iter().all(|i| cone.contains(i)))
                .count();
            if bordering != 2 {
                failures.push((
                    format!("wall {}", fmt_indices(wall)),
                    format!("borders {bordering} maximal cones, expected 2"),
                ));
                ok = false;
            }
        }
        // cone interiors must be pairwise disjoint: an interior point common
        // to two cones is a nonnegative solution of an exact linear program
        for a in 0..self.max_cones.len() {
            for b in a + 1..self.max_cones.len() {
                if self.interiors_overlap(&self.max_cones[a], &self.max_cones[b]) {
                    failures.push((
                        format!(
                            "cones {},{}",
                            fmt_indices(&self.max_cones[a]),
                            fmt_indices(&self.max_cones[b])
                        ),
                        "interiors overlap".into(),
                    ));
                    ok = false;
                }
            }
        }
        ok
    }

    /// Interiors of two full-dimensional simplicial cones intersect iff
    /// `sum lambda_i u_i = sum mu_j w_j` has a solution with all
    /// coefficients >= 1 (scaling makes strict positivity equivalent).
    fn interiors_overlap(&self, a: &[usize], b: &[usize]) -> bool {
        let n = self.dim;
        let to_rat = |v: &Int| Ratio::from_integer(v.clone());
        let mut rows: Vec<Vec<Rat>> = vec![Vec::with_capacity(a.len() + b.len()); n];
        let mut rhs: Vec<Rat> = vec![Ratio::zero(); n];
        for coord in 0..n {
            for &i in a {
                rows[coord].push(to_rat(&self.rays[i][coord]));
                rhs[coord] = rhs[coord].clone() - to_rat(&self.rays[i][coord]);
            }
            for &j in b {
                rows[coord].push(-to_rat(&self.rays[j][coord]));
                rhs[coord] = rhs[coord].clone() + to_rat(&self.rays[j][coord]);
            }
        }
        feasible_eq_nonneg(&rows, &rhs)
    }

    /// All faces: subsets of maximal cones, deduplicated and sorted.
    pub fn faces(&self) -> Vec<Cone> {
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for cone in &self.max_cones {
            let k = cone.len();
            for mask in 0u64..(1u64 << k) {
                let subset: Vec<usize> = (0..k)
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| cone[b])
                    .collect();
                set.insert(subset);
            }
        }
        set.into_iter()
            .map(|ray_indices| Cone { ray_indices })
            .collect()
    }
}

fn e(dim: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::zero(); dim];
    v[i] = Int::one();
    v
}

/// Names of the built-in fans, parameters instantiated.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "projective:1",
        "projective:2",
        "projective:3",
        "product_p1_p1",
        "hirzebruch:1",
        "hirzebruch:2",
        "hirzebruch:3",
        "p112",
    ]
}

/// Builds a catalog fan from a `family:parameter` name.
///
/// Supported: `projective:n` (projective n-space), `product_p1_p1`,
/// `hirzebruch:a` and `p112` (the weighted projective plane P(1,1,2),
/// simplicial and complete but not smooth).
pub fn catalog(name: &str) -> Result<Fan> {
    let (family, param) = match name.split_once(':') {
        Some((f, p)) => (f, Some(p)),
        None => (name, None),
    };
    let parse_param = |p: Option<&str>| -> Result<i64> {
        p.ok_or_else(|| Error::UnknownCatalog(name.into()))?
            .parse::<i64>()
            .map_err(|_| Error::UnknownCatalog(name.into()))
    };
    match family {
        "projective" => {
            let n = parse_param(param)?;
            if n < 1 {
                return Err(Error::Input(format!(
                    "projective:{n}: parameter must be at least 1"
                )));
            }
            let n = n as usize;
            let mut rays: Vec<Vec<Int>> = (0..n).map(|i| e(n, i)).collect();
            rays.push(vec![-Int::one(); n]);
            let max_cones: Vec<Vec<usize>> = (0..=n)
                .map(|omit| (0..=n).filter(|&i| i != omit).collect())
                .collect();
            Fan::new(format!("projective:{n}"), n, rays, max_cones)
        }
        "product_p1_p1" if param.is_none() => Fan::new(
            "product_p1_p1",
            2,
            vec![
                vec![Int::one(), Int::zero()],
                vec![-Int::one(), Int::zero()],
                vec![Int::zero(), Int::one()],
                vec![Int::zero(), -Int::one()],
            ],
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
        ),
        "hirzebruch" => {
            let a = parse_param(param)?;
            if a < 0 {
                return Err(Error::Input(format!(
                    "hirzebruch:{a}: parameter must be nonnegative"
                )));
            }
            Fan::new(
                format!("hirzebruch:{a}"),
                2,
                vec![
                    vec![Int::one(), Int::zero()],
                    vec![Int::zero(), Int::one()],
                    vec![-Int::one(), Int::from(a)],
                    vec![Int::zero(), -Int::one()],
                ],
                vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
            )
        }
        "p112" if param.is_none() => Fan::new(
            "p112",
            2,
            vec![
                vec![Int::one(), Int::zero()],
                vec![Int::zero(), Int::one()],
                vec![-Int::one(), Int::from(-2)],
            ],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        ),
        _ => Err(Error::UnknownCatalog(name.into())),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FanFile {
    name: String,
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

/// Parses the fan file format. Trailing data and non-integer numerals are
/// rejected by the JSON layer.
pub fn parse_fan(text: &str) -> Result<Fan> {
    let file: FanFile =
        serde_json::from_str(text).map_err(|err| Error::Parse(format!("fan file: {err}")))?;
    Fan::new(
        file.name,
        file.dim,
        file.rays
            .into_iter()
            .map(|ray| ray.into_iter().map(Int::from).collect())
            .collect(),
        file.max_cones,
    )
}

/// Canonical serialization: field order fixed, cone indices ascending,
/// pretty-printed with a trailing newline. Parsing then re-serializing a
/// canonical file is byte-identical.
pub fn fan_to_canonical_json(fan: &Fan) -> Result<String> {
    let rays: Option<Vec<Vec<i64>>> = fan
        .rays
        .iter()
        .map(|ray| ray.iter().map(ToPrimitive::to_i64).collect())
        .collect();
    let file = FanFile {
        name: fan.name.clone(),
        dim: fan.dim,
        rays: rays.ok_or_else(|| Error::Input("ray coordinate exceeds i64".into()))?,
        max_cones: fan.max_cones.clone(),
    };
    let body = serde_json::to_string_pretty(&file).expect("fan serialization cannot fail");
    Ok(body + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan_p2() -> Fan {
        catalog("projective:2").unwrap()
    }

    #[test]
    fn projective_plane_validates() {
        let report = fan_p2().validate();
        assert!(report.is_simplicial);
        assert!(report.is_smooth);
        assert!(report.is_complete);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn p112_is_not_smooth() {
        let report = catalog("p112").unwrap().validate();
        assert!(report.is_simplicial);
        assert!(!report.is_smooth);
        assert!(report.is_complete);
        assert!(!report.failures.is_empty());
        // det((1,0),(-1,-2)) = -2 on cone {0,2}
        assert!(report
            .failures
            .iter()
            .any(|(what, why)| what == "cone {0,2}" && why.contains("-2")));
    }

    #[test]
    fn deleted_cone_breaks_completeness() {
        let fan = fan_p2();
        let reduced = Fan::new(
            "broken",
            2,
            fan.rays().to_vec(),
            fan.max_cones()[1..].to_vec(),
        )
        .unwrap();
        let report = reduced.validate();
        assert!(report.is_smooth);
        assert!(!report.is_complete);
        // walls 0 and 1 of the removed cone now border a single cone each
        assert!(report.failures.iter().filter(|(w, _)| w.starts_with("wall")).count() >= 2);
    }

    #[test]
    fn overlapping_interiors_detected() {
        // duplicate the first cone: wall counts stay even but interiors overlap
        let fan = fan_p2();
        let mut cones = fan.max_cones().to_vec();
        cones.push(cones[0].clone());
        let doubled = Fan::new("doubled", 2, fan.rays().to_vec(), cones).unwrap();
        let report = doubled.validate();
        assert!(!report.is_complete);
        assert!(report
            .failures
            .iter()
            .any(|(_, why)| why.contains("interiors overlap")));
    }

    #[test]
    fn malformed_input_reported_not_crashed() {
        // non-primitive ray and an undersized cone
        let fan = Fan::new(
            "bad",
            2,
            vec![
                vec![Int::from(2), Int::from(0)],
                vec![Int::from(0), Int::from(1)],
                vec![Int::from(2), Int::from(0)],
            ],
            vec![vec![0, 1], vec![2]],
        )
        .unwrap();
        let report = fan.validate();
        assert!(!report.is_smooth);
        assert!(!report.is_complete);
        assert!(report.failures.iter().any(|(_, w)| w.contains("not primitive")));
        assert!(report.failures.iter().any(|(_, w)| w.contains("duplicate rays")));
        assert!(report.failures.iter().any(|(_, w)| w.contains("expected 2")));
    }

    #[test]
    fn faces_counts() {
        let line = catalog("projective:1").unwrap();
        let faces = line.faces();
        assert_eq!(faces.len(), 3); // empty, {0}, {1}
        assert_eq!(faces[0].ray_indices, Vec::<usize>::new());

        assert_eq!(fan_p2().faces().len(), 7);

        let f1 = catalog("hirzebruch:1").unwrap();
        assert_eq!(f1.faces().len(), 9);
    }

    #[test]
    fn catalog_contents() {
        let p1 = catalog("projective:1").unwrap();
        assert_eq!(p1.rays(), &[vec![Int::one()], vec![-Int::one()]]);

        let p2 = fan_p2();
        assert_eq!(p2.rays()[2], vec![Int::from(-1), Int::from(-1)]);

        let f1 = catalog("hirzebruch:1").unwrap();
        assert_eq!(f1.rays()[2], vec![Int::from(-1), Int::from(1)]);
        assert!(f1.validate().all_good());

        assert!(catalog("projective").is_err());
        assert!(catalog("projective:x").is_err());
        assert!(catalog("mystery:3").is_err());
        assert!(catalog("projective:0").is_err());
    }

    #[test]
    fn every_catalog_fan_validates() {
        for name in catalog_names() {
            let fan = catalog(name).unwrap();
            let report = fan.validate();
            assert!(report.is_simplicial, "{name} simplicial");
            assert!(report.is_complete, "{name} complete");
            assert_eq!(report.is_smooth, name != "p112", "{name} smoothness");
        }
    }

    #[test]
    fn file_round_trip_is_byte_identical() {
        for name in catalog_names() {
            let fan = catalog(name).unwrap();
            let text = fan_to_canonical_json(&fan).unwrap();
            let reparsed = parse_fan(&text).unwrap();
            assert!(reparsed.same_structure(&fan));
            assert_eq!(fan_to_canonical_json(&reparsed).unwrap(), text);
        }
    }

    #[test]
    fn parser_rejects_junk() {
        assert!(parse_fan("{}").is_err());
        assert!(parse_fan("null").is_err());
        // trailing data
        let good = fan_to_canonical_json(&fan_p2()).unwrap();
        assert!(parse_fan(&format!("{good} 1")).is_err());
        // NaN-like token
        assert!(parse_fan(r#"{"name":"x","dim":1,"rays":[[NaN]],"max_cones":[]}"#).is_err());
        // float where an integer is required
        assert!(
            parse_fan(r#"{"name":"x","dim":1,"rays":[[1.5]],"max_cones":[[0]]}"#).is_err()
        );
        // out-of-range cone index is a structural error
        assert!(
            parse_fan(r#"{"name":"x","dim":1,"rays":[[1],[-1]],"max_cones":[[0,7]]}"#).is_err()
        );
    }

    #[test]
    fn unsorted_cells_are_canonicalized() {
        let text = r#"{"name":"x","dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[1,0],[2,1],[0,2]]}"#;
        let fan = parse_fan(text).unwrap();
        assert_eq!(fan.max_cones()[0], vec![0, 1]);
        let canon = fan_to_canonical_json(&fan).unwrap();
        let again = parse_fan(&canon).unwrap();
        assert_eq!(fan_to_canonical_json(&again).unwrap(), canon);
    }

    #[test]
    fn ray_deletion_breaks_every_catalog_fan() {
        // deleting any single ray (and the cones through it) breaks
        // completeness or well-formedness
        for name in catalog_names() {
            let fan = catalog(name).unwrap();
            for omit in 0..fan.ray_count() {
                let rays: Vec<Vec<Int>> = fan
                    .rays()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != omit)
                    .map(|(_, r)| r.clone())
                    .collect();
                let cones: Vec<Vec<usize>> = fan
                    .max_cones()
                    .iter()
                    .filter(|c| !c.contains(&omit))
                    .map(|c| {
                        c.iter()
                            .map(|&i| if i > omit { i - 1 } else { i })
                            .collect()
                    })
                    .collect();
                let mutated = Fan::new("mutated", fan.dim(), rays, cones).unwrap();
                assert!(
                    !mutated.validate().is_complete,
                    "{name}: omitting ray {omit}"
                );
            }
        }
    }
}
