//! Root systems generated from the Cartan matrix.
//!
//! The full root list is `positive ++ negative`: index `r < N` is the `r`-th
//! positive root and `r + N` its negative, where `N = |positive roots|`.
//! Positive roots are ordered by height, then by coefficient vector in
//! descending lexicographic order, so the simple root `a_i` sits at index
//! `i - 1`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::dynkin::{DynkinDiagram, Marking};

/// Index into the full root list.
pub type RootIdx = u32;

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coords: Box<[i32]>,
}

impl Root {
    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Nodes with a nonzero coefficient.
    pub fn support(&self) -> Marking {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    roots: Vec<Root>,
    positive_count: usize,
    lookup: HashMap<Box<[i32]>, RootIdx>,
    /// `reflections[i][r]` = index of `s_{i+1}(root r)`.
    reflections: Vec<Vec<RootIdx>>,
}

/// Builds the root system of `diagram` by closing the simple roots under
/// simple reflections.
pub fn generate_roots(diagram: &DynkinDiagram) -> RootSystem {
    RootSystem::new(diagram.clone())
}

impl RootSystem {
    pub fn new(diagram: DynkinDiagram) -> Self {
        let n = diagram.rank();
        let cartan = diagram.cartan_matrix();

        let simple: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| i32::from(i == j)).collect())
            .collect();
        let mut seen: HashSet<Vec<i32>> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i32>> = simple.into_iter().collect();
        let mut positive = Vec::new();
        while let Some(beta) = queue.pop_front() {
            for k in 0..n {
                let pairing: i32 = (0..n).map(|i| beta[i] * cartan[i][k]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut image = beta.clone();
                image[k] -= pairing;
                if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
            positive.push(beta);
        }
        positive.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let positive_count = positive.len();
        let negative: Vec<Vec<i32>> = positive
            .iter()
            .map(|r| r.iter().map(|c| -c).collect())
            .collect();
        let roots: Vec<Root> = positive
            .into_iter()
            .chain(negative)
            .map(|c| Root {
                coords: c.into_boxed_slice(),
            })
            .collect();
        let lookup: HashMap<Box<[i32]>, RootIdx> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i as RootIdx))
            .collect();

        let reflections = (0..n)
            .map(|k| {
                roots
                    .iter()
                    .map(|r| {
                        let pairing: i32 = (0..n).map(|i| r.coords[i] * cartan[i][k]).sum();
                        let mut image = r.coords.to_vec();
                        image[k] -= pairing;
                        lookup[image.as_slice()]
                    })
                    .collect()
            })
            .collect();

        RootSystem {
            diagram,
            roots,
            positive_count,
            lookup,
            reflections,
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.positive_count]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, idx: RootIdx) -> &Root {
        &self.roots[idx as usize]
    }

    pub fn is_positive(&self, idx: RootIdx) -> bool {
        (idx as usize) < self.positive_count
    }

    pub fn negate(&self, idx: RootIdx) -> RootIdx {
        let n = self.positive_count as RootIdx;
        if idx < n {
            idx + n
        } else {
            idx - n
        }
    }

    /// Index of the simple root of `node` (1-based).
    pub fn simple(&self, node: usize) -> RootIdx {
        (node - 1) as RootIdx
    }

    pub fn index_of(&self, coords: &[i32]) -> Option<RootIdx> {
        self.lookup.get(coords).copied()
    }

    /// Root permutation induced by the simple reflection of `node`.
    pub fn reflection_table(&self, node: usize) -> &[RootIdx] {
        &self.reflections[node - 1]
    }

    pub fn reflect(&self, node: usize, idx: RootIdx) -> RootIdx {
        self.reflections[node - 1][idx as usize]
    }

    /// Highest root of factor `index`.
    pub fn highest_root(&self, factor: usize) -> &Root {
        let nodes = self.diagram.factor_nodes(factor);
        self.positive_roots()
            .iter()
            .filter(|r| r.support().iter().all(|n| nodes.contains(&n)))
            .max_by_key(|r| r.height())
            .expect("every factor has roots")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        generate_roots(&s.parse().unwrap())
    }

    #[test]
    fn a2_roots() {
        let r = rs("A2");
        let coords: Vec<&[i32]> = r.positive_roots().iter().map(|r| r.coords()).collect();
        assert_eq!(coords, vec![&[1, 0][..], &[0, 1], &[1, 1]]);
    }

    #[test]
    fn g2_roots_and_highest() {
        let r = rs("G2");
        assert_eq!(r.positive_count(), 6);
        assert_eq!(r.highest_root(0).coords(), &[3, 2]);
    }

    #[test]
    fn b3_count_and_highest() {
        let r = rs("B3");
        assert_eq!(r.positive_count(), 9);
        assert_eq!(r.highest_root(0).coords(), &[1, 2, 2]);
        assert_eq!(rs("C3").highest_root(0).coords(), &[2, 2, 1]);
        assert_eq!(rs("F4").highest_root(0).coords(), &[2, 3, 4, 2]);
        assert_eq!(rs("E8").highest_root(0).coords(), &[2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn simple_roots_come_first() {
        let r = rs("E6");
        for node in 1..=6 {
            let mut expect = vec![0; 6];
            expect[node - 1] = 1;
            assert_eq!(r.root(r.simple(node)).coords(), expect.as_slice());
        }
    }

    #[test]
    fn closed_form_counts() {
        for s in ["A1", "A5", "A8", "B2", "B8", "C3", "C8", "D4", "D8", "E6", "E7", "E8", "F4", "G2", "A2xG2xD4"] {
            let d: DynkinDiagram = s.parse().unwrap();
            let expected: usize = d.factors().iter().map(|f| f.positive_root_count()).sum();
            assert_eq!(generate_roots(&d).positive_count(), expected, "{s}");
        }
    }

    #[test]
    fn reflection_table_properties() {
        for s in ["B3", "G2", "F4", "D5", "A2xB2"] {
            let r = rs(s);
            for node in 1..=r.rank() {
                let t = r.reflection_table(node);
                let a = r.simple(node);
                assert_eq!(t[a as usize], r.negate(a));
                for (i, &img) in t.iter().enumerate() {
                    assert_eq!(t[img as usize] as usize, i);
                    if i < r.positive_count() && i as RootIdx != a {
                        assert!(r.is_positive(img));
                    }
                }
            }
        }
    }

    #[test]
    fn roots_never_mixed_sign_and_connected_support() {
        for s in ["E7", "C4xA2", "D6"] {
            let r = rs(s);
            let d = r.diagram();
            for root in r.roots() {
                let pos = root.coords().iter().all(|&c| c >= 0);
                let neg = root.coords().iter().all(|&c| c <= 0);
                assert!(pos ^ neg);
                assert_eq!(d.components_of(&root.support()).len(), 1);
            }
        }
    }
}
