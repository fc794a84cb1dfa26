//! Reduction of `Q` mod `P`, cycle-connectivity, minimal chain length and the
//! exception tables.
//!
//! Weyl subgroups attached to a marking are always generated by the
//! reflections of the UNMARKED nodes (the Levi factor).

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinDiagram, Family, Marking};
use crate::error::{Error, Result};
use crate::geometry::ParabolicPair;
use crate::roots::RootSystem;
use crate::weyl::{ElementKey, WeylLimit};

/// Whether every path from a node of `psi_p` to a node of `psi_q` passes
/// through `chi`. On a forest this is the same as asking that every connected
/// subdiagram meeting both markings meets `chi`.
pub fn is_separating(pair: &ParabolicPair, chi: &Marking) -> bool {
    let d = pair.diagram();
    pair.psi_p().iter().all(|p| {
        pair.psi_q().iter().all(|q| match d.tree_path(p, q) {
            Some(path) => path.iter().any(|&n| chi.contains(n)),
            None => true,
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionResult {
    pub reduced_marking: Marking,
    pub is_already_reduced: bool,
    /// For each kept node, a path from `psi_p` on which it is the first node
    /// of `psi_q`.
    pub forced_witnesses: BTreeMap<usize, Vec<usize>>,
}

/// The smallest subset of `psi_q` separating `psi_p` and `psi_q`: the nodes
/// of `psi_q` that are the first `psi_q` node on some path starting in
/// `psi_p`.
pub fn reduction(pair: &ParabolicPair) -> ReductionResult {
    let d = pair.diagram();
    let mut forced_witnesses = BTreeMap::new();
    for q in pair.psi_q().iter() {
        let witness = pair.psi_p().iter().find_map(|p| {
            let path = d.tree_path(p, q)?;
            let shielded = path[..path.len() - 1]
                .iter()
                .any(|&n| pair.psi_q().contains(n));
            (!shielded).then_some(path)
        });
        if let Some(path) = witness {
            forced_witnesses.insert(q, path);
        }
    }
    let reduced_marking: Marking = forced_witnesses.keys().copied().collect();
    ReductionResult {
        is_already_reduced: &reduced_marking == pair.psi_q(),
        reduced_marking,
        forced_witnesses,
    }
}

const BRUTE_FORCE_MAX: usize = 20;

/// Exhaustive reduction: every subset of `psi_q` is tested for separation by
/// deleting it and checking that no component of what remains meets both
/// markings. Returns the unique inclusion-minimal separating subset.
pub fn brute_force_reduction(pair: &ParabolicPair) -> Result<Marking> {
    let q_nodes = pair.psi_q().to_vec();
    assert!(
        q_nodes.len() <= BRUTE_FORCE_MAX,
        "brute force reduction limited to {BRUTE_FORCE_MAX} marked nodes"
    );
    let d = pair.diagram();
    let separating: Vec<Marking> = Marking::all_subsets_of(&q_nodes)
        .into_iter()
        .filter(|chi| separates_by_components(d, pair, chi))
        .collect();
    let minimal: Vec<&Marking> = separating
        .iter()
        .filter(|chi| {
            !separating
                .iter()
                .any(|other| other != *chi && other.is_subset(chi))
        })
        .collect();
    match minimal.as_slice() {
        [only] => Ok((*only).clone()),
        many => Err(Error::NonUniqueMinimum {
            candidates: many.iter().map(|m| m.to_vec()).collect(),
        }),
    }
}

fn separates_by_components(d: &DynkinDiagram, pair: &ParabolicPair, chi: &Marking) -> bool {
    let rest = d.all_nodes().difference(chi);
    d.components_of(&rest).iter().all(|comp| {
        !(comp.iter().any(|&n| pair.psi_p().contains(n))
            && comp.iter().any(|&n| pair.psi_q().contains(n)))
    })
}

/// Any two points of `G/P` are joined by a chain of `Q`-cycles exactly when
/// the markings are disjoint, i.e. no proper parabolic contains both `P` and
/// `Q`.
pub fn is_cycle_connected(pair: &ParabolicPair) -> bool {
    pair.psi_p().is_disjoint(pair.psi_q())
}

/// Marking of the parabolic generated by `P` and `Q`; `G/P` maps onto the
/// space of chain-equivalence classes, which is `G/R` for this `R`.
pub fn connectivity_quotient(pair: &ParabolicPair) -> Marking {
    pair.psi_p().intersection(pair.psi_q())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainAnalysis {
    pub connected: bool,
    /// Least `j` with `S_j = W`; absent when the sets stabilize below `W`.
    pub minimal_n: Option<usize>,
    /// `|S_j|` for `j = 0, 1, ...` up to saturation or stabilization.
    pub reachable_sizes: Vec<usize>,
    /// Largest Schubert cell dimension in `G/P` met by `S_j`.
    pub reachable_dims: Vec<usize>,
    pub quotient_marking: Marking,
    /// False when `max_k` was hit before the sets stopped growing.
    pub complete: bool,
}

/// Reachability by chains of `Q`-cycles, modelled in the Weyl group.
///
/// `S_0 = W_P` and `S_j = W_P W_Q S_{j-1}`, where `W_P`, `W_Q` are generated
/// by the unmarked nodes. The points reachable from the base point by
/// `j`-chains form the union of Schubert cells `B S_j P / P`.
pub fn chain_analysis(
    pair: &ParabolicPair,
    rs: &RootSystem,
    max_k: usize,
    limit: WeylLimit,
) -> Result<ChainAnalysis> {
    let d = pair.diagram();
    assert_eq!(d, rs.diagram(), "root system must belong to the pair's diagram");
    let all = d.all_nodes();
    let order = d.weyl_order_of(&all);
    limit.check(order)?;
    let total = order as usize;

    let levi_p = all.difference(pair.psi_p());
    let levi_q = all.difference(pair.psi_q());
    let reach_dim = |set: &HashSet<ElementKey>| {
        set.iter()
            .map(|w| rs.min_coset_length(w, &levi_p))
            .max()
            .unwrap_or(0)
    };

    let mut current = rs.close_left(HashSet::from([rs.identity_key()]), &levi_p);
    let mut sizes = vec![current.len()];
    let mut dims = vec![reach_dim(&current)];
    let mut minimal_n = (current.len() == total).then_some(0);
    let mut complete = minimal_n.is_some();

    let mut j = 0;
    while !complete && j < max_k {
        j += 1;
        let before = current.len();
        current = rs.close_left(rs.close_left(current, &levi_q), &levi_p);
        sizes.push(current.len());
        dims.push(reach_dim(&current));
        if current.len() == total {
            minimal_n = Some(j);
            complete = true;
        } else if current.len() == before {
            complete = true;
        }
    }

    Ok(ChainAnalysis {
        connected: current.len() == total,
        minimal_n,
        reachable_sizes: sizes,
        reachable_dims: dims,
        quotient_marking: connectivity_quotient(pair),
        complete,
    })
}

/// Position of the complement of the open orbit, read off from how the
/// marking meets its image under the diagram involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryClass {
    AffineCell,
    CodimAtLeastTwo,
    CodimOne,
}

pub fn boundary_codim_class(d: &DynkinDiagram, psi_p: &Marking) -> BoundaryClass {
    let image = psi_p.map(&d.diagram_involution_table());
    if &image == psi_p {
        BoundaryClass::AffineCell
    } else if image.is_disjoint(psi_p) {
        BoundaryClass::CodimAtLeastTwo
    } else {
        BoundaryClass::CodimOne
    }
}

/// Cases where the automorphism group of `G/P~` is larger than `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LargerAutomorphism {
    None,
    /// `CP^{2n-1}` under `Sp(n)`.
    OddSymplecticProjective,
    /// Spinor variety under `SO(2n+1)`.
    SpinorOddOrthogonal,
    /// The 5-dimensional quadric under `G2`.
    G2Quadric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionFlags {
    /// Integral varieties of `G/(P ∩ Q)` need not be open pieces of cycles.
    pub mok_zhang_exception: bool,
    /// Looked up on the reduction of `P` mod `Q`.
    pub larger_automorphism_case: LargerAutomorphism,
    /// `(B_l, a_1)` with `Q` at `{a_l}`: the table entry `{a_{i-1}, a_l}`
    /// has index 0 here, so it is reported but not flagged.
    pub degenerate_b_match: bool,
}

/// Table lookups, applied factor by factor to the restricted markings.
pub fn exception_flags(pair: &ParabolicPair) -> ExceptionFlags {
    let d = pair.diagram();
    let p_tilde = reduction(&pair.transposed()).reduced_marking;
    let mut flags = ExceptionFlags {
        mok_zhang_exception: false,
        larger_automorphism_case: LargerAutomorphism::None,
        degenerate_b_match: false,
    };
    for (idx, factor) in d.factors().iter().enumerate() {
        let l = factor.rank();
        let p = d.restrict_local(pair.psi_p(), idx).to_vec();
        let q = d.restrict_local(pair.psi_q(), idx).to_vec();
        let pt = d.restrict_local(&p_tilde, idx).to_vec();
        let hit = match (factor.family(), p.as_slice()) {
            (Family::B, &[i]) if i >= 2 => q == [i - 1, l],
            (Family::B, &[1]) => {
                if q == [l] {
                    flags.degenerate_b_match = true;
                }
                false
            }
            (Family::C, &[i]) => i == l && q == [l - 1],
            (Family::F, &[1]) => q == [3],
            (Family::G, &[2]) => q == [1],
            _ => false,
        };
        flags.mok_zhang_exception |= hit;

        if flags.larger_automorphism_case == LargerAutomorphism::None {
            flags.larger_automorphism_case = match (factor.family(), pt.as_slice()) {
                (Family::C, [1]) => LargerAutomorphism::OddSymplecticProjective,
                (Family::B, &[i]) if i == l => LargerAutomorphism::SpinorOddOrthogonal,
                (Family::G, [1]) => LargerAutomorphism::G2Quadric,
                _ => LargerAutomorphism::None,
            };
        }
    }
    flags
}
