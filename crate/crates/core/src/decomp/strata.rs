//! Abstract stratified-map bookkeeping: a proper map is recorded by its
//! source dimension together with the (stratum dimension, fiber dimension)
//! pairs of a stratification of the target. Semismallness is the linear
//! condition 2·fiber ≤ codim on every stratum; smallness asks for strict
//! inequality wherever the fiber is positive. For two semismall maps to the
//! same target the fibre product has dimension bounded by the common source
//! dimension — the estimate max(f₁ + f₂ + min(d₁, d₂)) over stratum pairs is
//! what makes convolution of decomposition classes stay in degree ≤ n.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// A proper surjective map recorded by target strata. `strata` lists
/// (stratum dimension, fiber dimension over that stratum); the dense stratum
/// has dimension equal to `source_dim` (the map is generically finite on it,
/// fiber 0 for a birational map, but any fiber value is accepted — the
/// verdict logic decides what it implies).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDescriptor {
    source_dim: usize,
    strata: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct MapDescriptorDto {
    source_dim: usize,
    strata: Vec<StratumDto>,
}

#[derive(Serialize, Deserialize)]
struct StratumDto {
    dim: usize,
    fiber: usize,
}

impl MapDescriptor {
    /// Requires exactly one dense stratum (dimension equal to `source_dim`)
    /// and no stratum exceeding the source dimension.
    pub fn new(source_dim: usize, strata: Vec<(usize, usize)>) -> Result<Self> {
        let dense = strata.iter().filter(|(d, _)| *d == source_dim).count();
        if dense != 1 {
            return Err(Error::Validation(format!(
                "a stratification needs exactly one dense stratum of dimension {source_dim}, found {dense}"
            )));
        }
        if let Some((d, _)) = strata.iter().find(|(d, _)| *d > source_dim) {
            return Err(Error::Validation(format!(
                "stratum dimension {d} exceeds the source dimension {source_dim}"
            )));
        }
        Ok(MapDescriptor { source_dim, strata })
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn strata(&self) -> &[(usize, usize)] {
        &self.strata
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let dto: MapDescriptorDto = serde_json::from_str(text).map_err(|e| Error::Json {
            context: "map descriptor".to_string(),
            source: e,
        })?;
        MapDescriptor::new(
            dto.source_dim,
            dto.strata.into_iter().map(|s| (s.dim, s.fiber)).collect(),
        )
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "source_dim": self.source_dim,
            "strata": self
                .strata
                .iter()
                .map(|&(dim, fiber)| serde_json::json!({"dim": dim, "fiber": fiber}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Outcome of the dimension test. `Small` maps need no perverse shift at
/// all; `Semismall` ones decompose with middle-perversity summands only;
/// `Neither` admits no such decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Small,
    Semismall,
    Neither,
}

impl Verdict {
    pub fn is_semismall(self) -> bool {
        !matches!(self, Verdict::Neither)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match self {
            Verdict::Small => "small",
            Verdict::Semismall => "semismall",
            Verdict::Neither => "neither",
        };
        f.write_str(word)
    }
}

/// Tests 2·fiber ≤ codim on every stratum; the verdict upgrades to `Small`
/// when equality never occurs with positive fiber dimension.
pub fn check_semismall(map: &MapDescriptor) -> Verdict {
    let n = map.source_dim;
    let mut relevant_positive = false;
    for &(dim, fiber) in &map.strata {
        let codim = n - dim;
        if 2 * fiber > codim {
            return Verdict::Neither;
        }
        if fiber > 0 && 2 * fiber == codim {
            relevant_positive = true;
        }
    }
    if relevant_positive {
        Verdict::Semismall
    } else {
        Verdict::Small
    }
}

/// Dimension bound for the fibre product of two semismall maps with common
/// target: max over stratum pairs of f₁ + f₂ + min(d₁, d₂). Both maps must
/// be semismall and share the source dimension; the result never exceeds it.
pub fn fibre_product_dim_bound(left: &MapDescriptor, right: &MapDescriptor) -> Result<usize> {
    if left.source_dim != right.source_dim {
        return Err(Error::Validation(format!(
            "fibre product of maps with different source dimensions {} and {}",
            left.source_dim, right.source_dim
        )));
    }
    for (side, map) in [("left", left), ("right", right)] {
        if !check_semismall(map).is_semismall() {
            return Err(Error::Validation(format!(
                "{side} map is not semismall; the fibre product bound does not apply"
            )));
        }
    }
    let n = left.source_dim;
    let mut bound = 0;
    for &(d1, f1) in &left.strata {
        for &(d2, f2) in &right.strata {
            bound = bound.max(f1 + f2 + d1.min(d2));
        }
    }
    if bound > n {
        // 2f_i <= n - d_i for both maps forces f1 + f2 + min(d1,d2) <= n.
        return Err(Error::Validation(format!(
            "fibre product bound {bound} exceeds the source dimension {n}"
        )));
    }
    Ok(bound)
}

/// The Hilbert–Chow stratification of Sym^n X for a surface X: the cycle
/// type ν gives a stratum of dimension 2·l(ν) with fiber n − l(ν).
pub fn hilbert_map_descriptor(n: u32) -> MapDescriptor {
    let strata = crate::combinatorics::partitions(n)
        .iter()
        .map(|nu| (2 * nu.len() as usize, (n - nu.len()) as usize))
        .collect();
    MapDescriptor::new(2 * n as usize, strata).expect("the full-length partition is dense")
}

/// Strata of the nested Hilbert scheme X^[n,n+1] over Sym^n X × X: the pair
/// (a, j) marks cycle type a with the distinguished point on (j = 0) or off
/// the cycle support.
pub fn nested_map_descriptor(n: u32) -> Result<MapDescriptor> {
    if n == 0 {
        return Err(Error::Domain(
            "the nested Hilbert scheme X^[n,n+1] needs n >= 1".to_string(),
        ));
    }
    let mut strata = Vec::new();
    for a in crate::combinatorics::partitions(n) {
        let l = a.len() as usize;
        strata.push((2 * l + 2, (n - a.len()) as usize));
        let mut sizes: Vec<u32> = a.parts().to_vec();
        sizes.dedup();
        for _ in sizes {
            strata.push((2 * l, (n - a.len() + 1) as usize));
        }
    }
    MapDescriptor::new(2 * n as usize + 2, strata)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blowup_of_a_surface_point_is_semismall_not_small() {
        let blowup = MapDescriptor::new(2, vec![(2, 0), (0, 1)]).unwrap();
        assert_eq!(check_semismall(&blowup), Verdict::Semismall);
    }

    #[test]
    fn threefold_blowdown_to_a_point_curve_fails() {
        let map = MapDescriptor::new(3, vec![(3, 0), (0, 2)]).unwrap();
        assert_eq!(check_semismall(&map), Verdict::Neither);
        assert!(!check_semismall(&map).is_semismall());
    }

    #[test]
    fn isomorphisms_are_small() {
        let id = MapDescriptor::new(4, vec![(4, 0)]).unwrap();
        assert_eq!(check_semismall(&id), Verdict::Small);
    }

    #[test]
    fn hilbert_chow_is_small_only_for_one_point() {
        assert_eq!(check_semismall(&hilbert_map_descriptor(1)), Verdict::Small);
        for n in 2..=6 {
            assert_eq!(
                check_semismall(&hilbert_map_descriptor(n)),
                Verdict::Semismall,
                "n={n}"
            );
        }
    }

    #[test]
    fn nested_descriptor_is_semismall() {
        for n in 1..=5 {
            let map = nested_map_descriptor(n).unwrap();
            assert!(check_semismall(&map).is_semismall(), "n={n}");
        }
    }

    #[test]
    fn fibre_product_of_blowups_fills_the_source() {
        let blowup = MapDescriptor::new(2, vec![(2, 0), (0, 1)]).unwrap();
        assert_eq!(fibre_product_dim_bound(&blowup, &blowup).unwrap(), 2);
    }

    #[test]
    fn fibre_product_rejects_bad_inputs() {
        let blowup = MapDescriptor::new(2, vec![(2, 0), (0, 1)]).unwrap();
        let other = MapDescriptor::new(4, vec![(4, 0)]).unwrap();
        assert!(fibre_product_dim_bound(&blowup, &other).is_err());
        let bad = MapDescriptor::new(3, vec![(3, 0), (0, 2)]).unwrap();
        let id3 = MapDescriptor::new(3, vec![(3, 0)]).unwrap();
        assert!(fibre_product_dim_bound(&bad, &id3).is_err());
    }

    #[test]
    fn descriptor_validation() {
        assert!(MapDescriptor::new(2, vec![(0, 1)]).is_err());
        assert!(MapDescriptor::new(2, vec![(2, 0), (2, 0)]).is_err());
        assert!(MapDescriptor::new(2, vec![(2, 0), (3, 0)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let map = hilbert_map_descriptor(3);
        let text = map.to_json_value().to_string();
        assert_eq!(MapDescriptor::from_json_str(&text).unwrap(), map);
        assert!(MapDescriptor::from_json_str("{\"source_dim\": 2}").is_err());
    }
}
