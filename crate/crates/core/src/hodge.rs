//! Abstract smooth varieties as grids of Hodge numbers.
//!
//! A [`HodgeDatum`] is all the engine ever knows about a variety: a name, a
//! dimension, a properness flag, and the grid h^{p,q} for 0 ≤ p,q ≤ dim.
//! Betti numbers, Poincaré/Hodge polynomials, and the Euler characteristic
//! are derived views. Grids must be symmetric (h^{p,q} = h^{q,p}); loaders
//! reject violations naming the offending (p,q).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::GradedPoly;
use crate::rational::rat;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HodgeDatum {
    name: String,
    dim: usize,
    proper: bool,
    hodge: Vec<Vec<u64>>,
}

/// Shared handle to a Hodge datum; decomposition terms hold these.
pub type Atom = Arc<HodgeDatum>;

#[derive(Serialize, Deserialize)]
struct HodgeDatumDto {
    name: String,
    dim: usize,
    proper: bool,
    hodge: Vec<Vec<u64>>,
}

impl HodgeDatum {
    pub fn new(name: impl Into<String>, dim: usize, proper: bool, hodge: Vec<Vec<u64>>) -> Result<Self> {
        let name = name.into();
        if hodge.len() != dim + 1 {
            return Err(Error::HodgeGrid {
                name,
                detail: format!("expected {} rows, found {}", dim + 1, hodge.len()),
            });
        }
        for (p, row) in hodge.iter().enumerate() {
            if row.len() != dim + 1 {
                return Err(Error::HodgeGrid {
                    name,
                    detail: format!("row {} has {} entries, expected {}", p, row.len(), dim + 1),
                });
            }
        }
        for p in 0..=dim {
            for q in (p + 1)..=dim {
                if hodge[p][q] != hodge[q][p] {
                    return Err(Error::AsymmetricHodge {
                        name,
                        p,
                        q,
                        found: hodge[p][q],
                        mirror: hodge[q][p],
                    });
                }
            }
        }
        Ok(HodgeDatum {
            name,
            dim,
            proper,
            hodge,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn hodge_number(&self, p: usize, q: usize) -> u64 {
        self.hodge[p][q]
    }

    /// b_i = Σ_{p+q=i} h^{p,q}.
    pub fn betti(&self, i: usize) -> u64 {
        let mut acc = 0;
        for p in 0..=self.dim.min(i) {
            let q = i - p;
            if q <= self.dim {
                acc += self.hodge[p][q];
            }
        }
        acc
    }

    /// The full Betti vector (b_0, …, b_{2·dim}).
    pub fn betti_vector(&self) -> Vec<u64> {
        (0..=2 * self.dim).map(|i| self.betti(i)).collect()
    }

    /// e = Σ (−1)^{p+q} h^{p,q}.
    pub fn euler(&self) -> i64 {
        let mut acc: i64 = 0;
        for (p, row) in self.hodge.iter().enumerate() {
            for (q, &h) in row.iter().enumerate() {
                let signed = h as i64;
                if (p + q) % 2 == 0 {
                    acc += signed;
                } else {
                    acc -= signed;
                }
            }
        }
        acc
    }

    /// Total rank of cohomology Σ b_i.
    pub fn total_betti(&self) -> u64 {
        self.hodge.iter().flatten().sum()
    }

    /// P(z) = Σ b_i z^i.
    pub fn poincare_poly(&self) -> GradedPoly {
        let mut acc = GradedPoly::zero();
        for i in 0..=2 * self.dim {
            let b = self.betti(i);
            if b > 0 {
                acc = acc.add(&GradedPoly::z_monomial(i as u32, rat(b as i64)));
            }
        }
        acc
    }

    /// h(x,y) = Σ h^{p,q} x^p y^q.
    pub fn hodge_poly(&self) -> GradedPoly {
        let mut acc = GradedPoly::zero();
        for (p, row) in self.hodge.iter().enumerate() {
            for (q, &h) in row.iter().enumerate() {
                if h > 0 {
                    acc = acc.add(&GradedPoly::xy_monomial(p as u32, q as u32, rat(h as i64)));
                }
            }
        }
        acc
    }

    pub fn from_json_str(text: &str, context: &str) -> Result<Self> {
        let dto: HodgeDatumDto = serde_json::from_str(text).map_err(|source| Error::Json {
            context: context.to_string(),
            source,
        })?;
        HodgeDatum::new(dto.name, dto.dim, dto.proper, dto.hodge)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "dim": self.dim,
            "proper": self.proper,
            "hodge": self.hodge,
        })
    }

    // -- standard atoms ----------------------------------------------------

    pub fn point() -> Atom {
        Arc::new(HodgeDatum::new("pt", 0, true, vec![vec![1]]).unwrap())
    }

    pub fn projective_line() -> Atom {
        Arc::new(HodgeDatum::new("P1", 1, true, vec![vec![1, 0], vec![0, 1]]).unwrap())
    }

    /// Smooth proper curve of genus g: h^{0,0} = h^{1,1} = 1, h^{1,0} = h^{0,1} = g.
    pub fn curve(name: impl Into<String>, genus: u64) -> Atom {
        Arc::new(HodgeDatum::new(name, 1, true, vec![vec![1, genus], vec![genus, 1]]).unwrap())
    }

    pub fn projective_plane() -> Atom {
        Arc::new(
            HodgeDatum::new(
                "P2",
                2,
                true,
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            )
            .unwrap(),
        )
    }

    /// Abelian surface: h^{p,q} = C(2,p)·C(2,q).
    pub fn abelian_surface() -> Atom {
        Arc::new(
            HodgeDatum::new(
                "A",
                2,
                true,
                vec![vec![1, 2, 1], vec![2, 4, 2], vec![1, 2, 1]],
            )
            .unwrap(),
        )
    }

    /// Minimal resolution of a rational double point with r exceptional
    /// curves: open surface with b = (1, 0, r, 0, 0), all of weight (1,1).
    pub fn ale_surface(r: u64) -> Atom {
        Arc::new(
            HodgeDatum::new(
                format!("ALE{r}"),
                2,
                false,
                vec![vec![1, 0, 0], vec![0, r, 0], vec![0, 0, 0]],
            )
            .unwrap(),
        )
    }

    /// Contractible affine quotient C^{2l}/Γ: cohomology is rank 1 in
    /// degree 0; not proper. Named by its dimension 2l.
    pub fn affine_quotient(l: usize) -> Atom {
        let dim = 2 * l;
        let mut grid = vec![vec![0u64; dim + 1]; dim + 1];
        grid[0][0] = 1;
        Arc::new(HodgeDatum::new(format!("affine_quotient({dim})"), dim, false, grid).unwrap())
    }
}
