//! Dimensions and types of `G/P`, `Q`-cycles, `P`-cycles and `Q`-towers.
//!
//! A marking lists the nodes removed from the Levi factor, so
//! `dim G/P = |positive roots| - |positive roots supported off the marking|`.
//! All counts here come from closed forms on the components of the
//! unmarked subdiagram.

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinDiagram, Marking, SimpleFactor};
use crate::error::Result;

/// Two standard parabolic subgroups `P`, `Q` over a common Borel subgroup.
/// `P ∩ Q` is then parabolic with marking `psi_p ∪ psi_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicPair {
    diagram: DynkinDiagram,
    psi_p: Marking,
    psi_q: Marking,
}

impl ParabolicPair {
    pub fn new(diagram: DynkinDiagram, psi_p: Marking, psi_q: Marking) -> Result<Self> {
        diagram.check_marking(&psi_p)?;
        diagram.check_marking(&psi_q)?;
        Ok(ParabolicPair {
            diagram,
            psi_p,
            psi_q,
        })
    }

    /// Convenience constructor from a diagram string and two node lists.
    pub fn parse(diagram: &str, psi_p: &str, psi_q: &str) -> Result<Self> {
        ParabolicPair::new(diagram.parse()?, Marking::parse(psi_p)?, Marking::parse(psi_q)?)
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn psi_p(&self) -> &Marking {
        &self.psi_p
    }

    pub fn psi_q(&self) -> &Marking {
        &self.psi_q
    }

    /// Marking of `P ∩ Q`.
    pub fn intersection_marking(&self) -> Marking {
        self.psi_p.union(&self.psi_q)
    }

    /// The pair with the roles of `P` and `Q` exchanged.
    pub fn transposed(&self) -> ParabolicPair {
        ParabolicPair {
            diagram: self.diagram.clone(),
            psi_p: self.psi_q.clone(),
            psi_q: self.psi_p.clone(),
        }
    }

    /// The same `P` with `Q` replaced by the parabolic of `psi_q`.
    pub fn with_q(&self, psi_q: Marking) -> ParabolicPair {
        ParabolicPair {
            diagram: self.diagram.clone(),
            psi_p: self.psi_p.clone(),
            psi_q,
        }
    }
}

/// `dim_C G/P` for the parabolic with marking `psi`.
pub fn dim_flag(d: &DynkinDiagram, psi: &Marking) -> usize {
    let total: usize = d.factors().iter().map(|f| f.positive_root_count()).sum();
    let levi = d.all_nodes().difference(psi);
    total - d.positive_root_count_of(&levi)
}

/// The `Q`-cycle `P_s = p(q^{-1}(s))` through the base point, as a marked
/// diagram of its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDescriptor {
    /// Canonical diagram string of the cycle's semisimple part; empty for a
    /// point.
    #[serde(rename = "type")]
    pub type_string: String,
    /// Marking on `type_string`'s own node numbering.
    pub marking: Marking,
    pub dim: usize,
    pub is_point: bool,
    pub is_whole_space: bool,
}

impl CycleDescriptor {
    /// The cycle's own diagram, `None` for a point cycle.
    pub fn diagram(&self) -> Option<DynkinDiagram> {
        if self.type_string.is_empty() {
            None
        } else {
            Some(self.type_string.parse().expect("cycle type strings are canonical"))
        }
    }

    /// `dim_flag` evaluated inside the cycle's own type and marking.
    pub fn intrinsic_dim(&self) -> usize {
        self.diagram().map_or(0, |d| dim_flag(&d, &self.marking))
    }
}

/// Describes the `Q`-cycles on `G/P`.
///
/// Their type is `L_Q / (L_Q ∩ P)`: the components of the diagram with
/// `psi_q` removed that meet `psi_p`, each marked at `psi_p`. Components
/// missing `psi_p` collapse to points and are dropped.
pub fn cycle_descriptor(pair: &ParabolicPair) -> CycleDescriptor {
    let d = pair.diagram();
    let levi_q = d.all_nodes().difference(pair.psi_q());
    let mut parts: Vec<(SimpleFactor, Vec<usize>)> = d
        .components_of(&levi_q)
        .into_iter()
        .filter(|comp| comp.iter().any(|&n| pair.psi_p().contains(n)))
        .map(|comp| {
            let (factor, labellings) = d.identify_component(&comp);
            let marking = labellings
                .iter()
                .map(|labels| {
                    labels
                        .iter()
                        .enumerate()
                        .filter(|(_, &g)| pair.psi_p().contains(g))
                        .map(|(j, _)| j + 1)
                        .collect::<Vec<_>>()
                })
                .min()
                .expect("at least one labelling");
            (factor, marking)
        })
        .collect();
    parts.sort();

    let mut marking = Vec::new();
    let mut offset = 0;
    for (factor, local) in &parts {
        marking.extend(local.iter().map(|j| j + offset));
        offset += factor.rank();
    }
    let type_string = parts
        .iter()
        .map(|(f, _)| f.to_string())
        .collect::<Vec<_>>()
        .join("x");

    CycleDescriptor {
        type_string,
        marking: marking.into_iter().collect(),
        dim: dim_flag(d, &pair.intersection_marking()) - dim_flag(d, pair.psi_q()),
        is_point: pair.psi_p().is_subset(pair.psi_q()),
        is_whole_space: pair.psi_q().is_empty(),
    }
}

/// Dimension of the `P`-cycle `Q_x = q(p^{-1}(x))` in `G/Q`.
pub fn dual_cycle_dim(pair: &ParabolicPair) -> usize {
    let d = pair.diagram();
    dim_flag(d, &pair.intersection_marking()) - dim_flag(d, pair.psi_p())
}

/// Dimensions of the `Q`-towers over a base point.
///
/// Level `j` is an iterated fiber product: each step pulls back a fiber of
/// `p` (a `P`-cycle, dimension `l_dual`) and then a fiber of `q` (a `Q`-cycle,
/// dimension `k_cycle`), so `dim T^j = j (k + l)`. This is derived from the
/// construction, not a tabulated value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerDims {
    pub k_cycle: usize,
    pub l_dual: usize,
}

impl TowerDims {
    pub fn tower_dim_at(&self, level: usize) -> usize {
        level * (self.k_cycle + self.l_dual)
    }
}

pub fn tower_dims(pair: &ParabolicPair) -> TowerDims {
    TowerDims {
        k_cycle: cycle_descriptor(pair).dim,
        l_dual: dual_cycle_dim(pair),
    }
}
