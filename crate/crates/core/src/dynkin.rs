//! Dynkin diagrams of finite type, markings, and the diagram involution.
//!
//! Nodes carry global ids `1..=n`, assigned factor by factor in Bourbaki
//! order. The edge lists per family are:
//!
//! | family | edges (Bourbaki numbering)                                  |
//! |--------|-------------------------------------------------------------|
//! | `A_l`  | `i - (i+1)`                                                 |
//! | `B_l`  | `i - (i+1)` for `i < l-1`, `(l-1) => l` (`a_l` short)        |
//! | `C_l`  | `i - (i+1)` for `i < l-1`, `(l-1) <= l` (`a_l` long)         |
//! | `D_l`  | `i - (i+1)` for `i <= l-2`, `(l-2) - l`                      |
//! | `E_l`  | `1-3, 3-4, 4-5, ..., (l-1)-l, 2-4`                          |
//! | `F_4`  | `1-2, 2 => 3, 3-4` (`a_1, a_2` long)                         |
//! | `G_2`  | `1 <= 2` triple (`a_1` short)                               |
//!
//! Arrows point toward the shorter root. The Cartan matrix follows the
//! Bourbaki convention `a_ij = <a_i, a_j^vee>`, so a multiple bond from a long
//! node `L` to a short node `S` of multiplicity `m` gives `a_LS = -m` and
//! `a_SL = -1`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
    }

    /// Whether `rank` is admissible. Low-rank coincidences are canonicalized
    /// away: `B2` is accepted while `C2` is not, and `D` starts at 4.
    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// One simple factor `X_l` of a semisimple type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleFactor {
    family: Family,
    rank: usize,
}

impl SimpleFactor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::RankOutOfBounds {
                family: family.letter(),
                rank,
            });
        }
        Ok(SimpleFactor { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges in local numbering `1..=rank`.
    pub fn local_edges(&self) -> Vec<Edge> {
        let l = self.rank;
        let single = |a: usize, b: usize| Edge {
            source: a,
            target: b,
            multiplicity: 1,
        };
        match self.family {
            Family::A => (1..l).map(|i| single(i, i + 1)).collect(),
            Family::B => {
                let mut e: Vec<Edge> = (1..l - 1).map(|i| single(i, i + 1)).collect();
                e.push(Edge {
                    source: l - 1,
                    target: l,
                    multiplicity: 2,
                });
                e
            }
            Family::C => {
                let mut e: Vec<Edge> = (1..l - 1).map(|i| single(i, i + 1)).collect();
                e.push(Edge {
                    source: l,
                    target: l - 1,
                    multiplicity: 2,
                });
                e
            }
            Family::D => {
                let mut e: Vec<Edge> = (1..l - 1).map(|i| single(i, i + 1)).collect();
                e.push(single(l - 2, l));
                e
            }
            Family::E => {
                let mut e = vec![single(1, 3), single(2, 4)];
                e.extend((3..l).map(|i| single(i, i + 1)));
                e
            }
            Family::F => vec![
                single(1, 2),
                Edge {
                    source: 2,
                    target: 3,
                    multiplicity: 2,
                },
                single(3, 4),
            ],
            Family::G => vec![Edge {
                source: 2,
                target: 1,
                multiplicity: 3,
            }],
        }
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match (self.family, l) {
            (Family::A, _) => l * (l + 1) / 2,
            (Family::B, _) | (Family::C, _) => l * l,
            (Family::D, _) => l * (l - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    /// Classical order of the Weyl group (saturating at `u128::MAX`).
    pub fn weyl_order(&self) -> u128 {
        let l = self.rank as u128;
        let fact = |n: u128| (1..=n).fold(1u128, |acc, k| acc.saturating_mul(k));
        let pow2 = |e: u128| {
            if e >= 127 {
                u128::MAX
            } else {
                1u128 << e
            }
        };
        match (self.family, self.rank) {
            (Family::A, _) => fact(l + 1),
            (Family::B, _) | (Family::C, _) => pow2(l).saturating_mul(fact(l)),
            (Family::D, _) => pow2(l - 1).saturating_mul(fact(l)),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
            (Family::F, _) => 1_152,
            (Family::G, _) => 12,
        }
    }

    /// The diagram involution `a -> -w0(a)` in local numbering.
    pub fn involution_local(&self, i: usize) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l + 1 - i,
            Family::D if l % 2 == 1 && i == l - 1 => l,
            Family::D if l % 2 == 1 && i == l => l - 1,
            Family::E if l == 6 => match i {
                1 => 6,
                6 => 1,
                3 => 5,
                5 => 3,
                other => other,
            },
            _ => i,
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A bond between two nodes. For multiple bonds the arrow runs from
/// `source` (long root) to `target` (short root); single bonds store the
/// smaller id as `source`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub multiplicity: u8,
}

/// A set of diagram nodes, kept in ascending order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Marking(BTreeSet<usize>);

impl Marking {
    pub fn empty() -> Self {
        Marking(BTreeSet::new())
    }

    /// Parses `"2,4"`. The empty string and `"-"` denote the empty marking.
    /// Ids must be strictly ascending.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(Marking::empty());
        }
        let mut nodes = BTreeSet::new();
        let mut last = 0usize;
        for token in text.split(',') {
            let token = token.trim();
            let node: usize = token.parse().map_err(|_| Error::MarkingSyntax {
                token: token.to_string(),
            })?;
            if node <= last && !nodes.is_empty() {
                return Err(Error::MarkingOrder {
                    token: token.to_string(),
                });
            }
            last = node;
            nodes.insert(node);
        }
        Ok(Marking(nodes))
    }

    pub fn contains(&self, node: usize) -> bool {
        self.0.contains(&node)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Marking) -> Marking {
        Marking(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &Marking) -> Marking {
        Marking(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &Marking) -> Marking {
        Marking(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &Marking) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Marking) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Image under a node map given as `map[node - 1]`.
    pub fn map(&self, map: &[usize]) -> Marking {
        self.iter().map(|n| map[n - 1]).collect()
    }

    /// All subsets of `nodes`, ordered lexicographically as sorted lists.
    pub fn all_subsets_of(nodes: &[usize]) -> Vec<Marking> {
        let mut out: Vec<Marking> = (0u64..(1u64 << nodes.len()))
            .map(|mask| {
                nodes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &n)| n)
                    .collect()
            })
            .collect();
        out.sort_by_key(|m| m.to_vec());
        out
    }
}

impl FromIterator<usize> for Marking {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Marking(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for Marking {
    fn from(nodes: [usize; N]) -> Self {
        nodes.into_iter().collect()
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The Dynkin diagram of a semisimple type, possibly a product of factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    factors: Vec<SimpleFactor>,
    offsets: Vec<usize>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
    cartan: Vec<Vec<i32>>,
}

/// Parses a diagram string such as `"A2xG2"` (case-insensitive).
pub fn parse_diagram_spec(text: &str) -> Result<DynkinDiagram> {
    text.parse()
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let syntax = |token: &str| Error::DiagramSyntax {
            text: text.to_string(),
            token: token.to_string(),
        };
        let mut factors = Vec::new();
        for token in text.split(['x', 'X']) {
            let mut chars = token.chars();
            let letter = chars.next().ok_or_else(|| syntax(token))?;
            let digits = chars.as_str();
            let family = match Family::from_letter(letter) {
                Some(f) => f,
                None if letter.is_ascii_alphabetic() => {
                    return Err(Error::UnknownFamily {
                        family: letter.to_ascii_uppercase().to_string(),
                        token: token.to_string(),
                    })
                }
                None => return Err(syntax(token)),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax(token));
            }
            let rank: usize = digits.parse().map_err(|_| syntax(token))?;
            factors.push(SimpleFactor::new(family, rank)?);
        }
        Ok(DynkinDiagram::from_factors(factors))
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl DynkinDiagram {
    pub fn from_factors(factors: Vec<SimpleFactor>) -> Self {
        let mut offsets = Vec::with_capacity(factors.len());
        let mut edges = Vec::new();
        let mut offset = 0;
        for factor in &factors {
            offsets.push(offset);
            edges.extend(factor.local_edges().into_iter().map(|e| Edge {
                source: e.source + offset,
                target: e.target + offset,
                multiplicity: e.multiplicity,
            }));
            offset += factor.rank();
        }
        let n = offset;
        let mut adjacency = vec![Vec::new(); n];
        let mut cartan = vec![vec![0i32; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for e in &edges {
            adjacency[e.source - 1].push(e.target);
            adjacency[e.target - 1].push(e.source);
            cartan[e.source - 1][e.target - 1] = -(e.multiplicity as i32);
            cartan[e.target - 1][e.source - 1] = -1;
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        DynkinDiagram {
            factors,
            offsets,
            edges,
            adjacency,
            cartan,
        }
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.adjacency.len()
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank()
    }

    pub fn all_nodes(&self) -> Marking {
        self.nodes().collect()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node - 1]
    }

    /// Index of the factor owning `node`.
    pub fn factor_of(&self, node: usize) -> usize {
        self.offsets
            .iter()
            .rposition(|&off| off < node)
            .expect("node ids start at 1")
    }

    /// Nodes of factor `index` as global ids.
    pub fn factor_nodes(&self, index: usize) -> std::ops::RangeInclusive<usize> {
        let off = self.offsets[index];
        off + 1..=off + self.factors[index].rank()
    }

    /// `(factor index, local index)` of a global node id.
    pub fn local_index(&self, node: usize) -> (usize, usize) {
        let f = self.factor_of(node);
        (f, node - self.offsets[f])
    }

    pub fn global_node(&self, factor: usize, local: usize) -> usize {
        self.offsets[factor] + local
    }

    /// Cartan matrix, `cartan_matrix()[i-1][j-1] = a_ij`.
    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        self.cartan[i - 1][j - 1]
    }

    pub fn check_marking(&self, marking: &Marking) -> Result<()> {
        match marking.iter().find(|&n| n == 0 || n > self.rank()) {
            Some(node) => Err(Error::NodeOutOfRange {
                node,
                diagram: self.to_string(),
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// Restriction of `marking` to factor `index`, in local numbering.
    pub fn restrict_local(&self, marking: &Marking, index: usize) -> Marking {
        let off = self.offsets[index];
        marking
            .iter()
            .filter(|n| self.factor_nodes(index).contains(n))
            .map(|n| n - off)
            .collect()
    }

    /// The involution `a -> -w0(a)` as a table: entry `i - 1` is the image of
    /// node `i`.
    pub fn diagram_involution_table(&self) -> Vec<usize> {
        self.nodes()
            .map(|node| {
                let (f, local) = self.local_index(node);
                self.global_node(f, self.factors[f].involution_local(local))
            })
            .collect()
    }

    /// The unique simple path from `a` to `b`, or `None` when they lie in
    /// different factors.
    pub fn tree_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        if self.factor_of(a) != self.factor_of(b) {
            return None;
        }
        let mut parent = vec![0usize; self.rank() + 1];
        let mut queue = VecDeque::from([a]);
        parent[a] = a;
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for &v in self.neighbors(u) {
                if parent[v] == 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    /// Connected components of the subgraph induced on `nodes`, each sorted,
    /// ordered by smallest member.
    pub fn components_of(&self, nodes: &Marking) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in nodes.iter() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in self.neighbors(u) {
                    if nodes.contains(v) && seen.insert(v) {
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Identifies a connected set of nodes as a simple type and returns every
    /// labelling `labels[local - 1] = global node` that matches the Bourbaki
    /// Cartan matrix of that type.
    pub fn identify_component(&self, component: &[usize]) -> (SimpleFactor, Vec<Vec<usize>>) {
        let r = component.len();
        for family in Family::ALL {
            if !family.admits_rank(r) {
                continue;
            }
            let factor = SimpleFactor { family, rank: r };
            let model = DynkinDiagram::from_factors(vec![factor]);
            let mut labellings = Vec::new();
            let mut current = Vec::with_capacity(r);
            self.match_labels(&model, component, &mut current, &mut labellings);
            if !labellings.is_empty() {
                return (factor, labellings);
            }
        }
        panic!("subdiagram {component:?} of {self} is not of finite type");
    }

    fn match_labels(
        &self,
        model: &DynkinDiagram,
        component: &[usize],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let depth = current.len();
        if depth == component.len() {
            out.push(current.clone());
            return;
        }
        for &g in component {
            if current.contains(&g) {
                continue;
            }
            let fits = current.iter().enumerate().all(|(k, &h)| {
                model.cartan[depth][k] == self.cartan_entry(g, h)
                    && model.cartan[k][depth] == self.cartan_entry(h, g)
            });
            if fits {
                current.push(g);
                self.match_labels(model, component, current, out);
                current.pop();
            }
        }
    }

    /// Product of the classical Weyl group orders of the components spanned
    /// by `generators`.
    pub fn weyl_order_of(&self, generators: &Marking) -> u128 {
        self.components_of(generators)
            .iter()
            .map(|c| self.identify_component(c).0.weyl_order())
            .fold(1u128, |acc, o| acc.saturating_mul(o))
    }

    /// Number of positive roots supported on `nodes`, from closed forms.
    pub fn positive_root_count_of(&self, nodes: &Marking) -> usize {
        self.components_of(nodes)
            .iter()
            .map(|c| self.identify_component(c).0.positive_root_count())
            .sum()
    }
}
