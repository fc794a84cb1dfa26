//! Weyl group elements, parabolic subgroups `W_I` and products of subsets.
//!
//! An element `w` is stored by its canonical key: the tuple of root indices
//! `(w(a_1), ..., w(a_n))`. The simple roots span the root lattice, so the key
//! determines `w`, and left multiplication by a simple reflection is a table
//! lookup on each entry.

use std::collections::{HashSet, VecDeque};
use std::env;

use rayon::prelude::*;

use crate::dynkin::Marking;
use crate::error::{Error, Result};
use crate::roots::{RootIdx, RootSystem};

pub type ElementKey = Box<[RootIdx]>;

/// Environment variable overriding the default enumeration guard.
pub const WEYL_LIMIT_ENV: &str = "PARHOM_WEYL_LIMIT";

/// Upper bound on the number of group elements an enumeration may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeylLimit(pub u128);

impl WeylLimit {
    pub const DEFAULT: WeylLimit = WeylLimit(1_000_000);

    /// The default limit, overridden by `PARHOM_WEYL_LIMIT` when it parses.
    pub fn from_env() -> WeylLimit {
        env::var(WEYL_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(WeylLimit)
            .unwrap_or(WeylLimit::DEFAULT)
    }

    pub fn check(self, estimated: u128) -> Result<()> {
        if estimated > self.0 {
            Err(Error::GuardLimit {
                estimated,
                limit: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for WeylLimit {
    fn default() -> Self {
        WeylLimit::DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    key: ElementKey,
    length: usize,
}

impl WeylElement {
    pub fn key(&self) -> &[RootIdx] {
        &self.key
    }

    pub fn length(&self) -> usize {
        self.length
    }
}

/// A set of Weyl group elements; `generators` is present when the set is the
/// parabolic subgroup generated by those simple reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylSubset {
    elements: HashSet<ElementKey>,
    generators: Option<Marking>,
}

impl WeylSubset {
    pub fn from_keys(elements: HashSet<ElementKey>) -> Self {
        WeylSubset {
            elements,
            generators: None,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, key: &[RootIdx]) -> bool {
        self.elements.contains(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementKey> {
        self.elements.iter()
    }

    pub fn generators(&self) -> Option<&Marking> {
        self.generators.as_ref()
    }

    pub fn is_subset(&self, other: &WeylSubset) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn into_keys(self) -> HashSet<ElementKey> {
        self.elements
    }
}

impl RootSystem {
    pub fn identity_key(&self) -> ElementKey {
        (0..self.rank() as RootIdx).collect()
    }

    pub fn simple_reflection_key(&self, node: usize) -> ElementKey {
        self.reflection_table(node)[..self.rank()].into()
    }

    /// `w(root)` for the element with key `w`.
    pub fn apply(&self, w: &[RootIdx], root: RootIdx) -> RootIdx {
        let c = self.root(root).coords();
        let n = self.rank();
        let mut image = vec![0i32; n];
        for (k, &ck) in c.iter().enumerate() {
            if ck != 0 {
                for (t, v) in self.root(w[k]).coords().iter().enumerate() {
                    image[t] += ck * v;
                }
            }
        }
        self.index_of(&image)
            .expect("a Weyl element maps roots to roots")
    }

    /// Whether `w(root)` is positive, without resolving the image's index.
    fn maps_to_positive(&self, w: &[RootIdx], root: RootIdx) -> bool {
        let c = self.root(root).coords();
        for t in 0..self.rank() {
            let v: i32 = c
                .iter()
                .enumerate()
                .filter(|(_, &ck)| ck != 0)
                .map(|(k, &ck)| ck * self.root(w[k]).coords()[t])
                .sum();
            if v != 0 {
                return v > 0;
            }
        }
        unreachable!("roots are nonzero")
    }

    /// Key of the product `a * b`.
    pub fn compose(&self, a: &[RootIdx], b: &[RootIdx]) -> ElementKey {
        b.iter().map(|&r| self.apply(a, r)).collect()
    }

    /// Key of `s_node * w`.
    pub fn left_reflect(&self, node: usize, w: &[RootIdx]) -> ElementKey {
        let t = self.reflection_table(node);
        w.iter().map(|&r| t[r as usize]).collect()
    }

    /// Key of `w * s_node`.
    pub fn right_reflect(&self, w: &[RootIdx], node: usize) -> ElementKey {
        self.reflection_table(node)[..self.rank()]
            .iter()
            .map(|&r| self.apply(w, r))
            .collect()
    }

    pub fn inverse(&self, w: &[RootIdx]) -> ElementKey {
        // w^{-1}(a_j) is the root r with w(r) = a_j
        let mut inv = vec![0 as RootIdx; self.rank()];
        for r in 0..self.roots().len() as RootIdx {
            let img = self.apply(w, r);
            if (img as usize) < self.rank() {
                inv[img as usize] = r;
            }
        }
        inv.into_boxed_slice()
    }

    /// Inversion count `|{a > 0 : w(a) < 0}|`.
    pub fn length(&self, w: &[RootIdx]) -> usize {
        (0..self.positive_count() as RootIdx)
            .filter(|&r| !self.maps_to_positive(w, r))
            .count()
    }

    pub fn element(&self, key: ElementKey) -> WeylElement {
        let length = self.length(&key);
        WeylElement { key, length }
    }

    /// The minimal-length representative of the coset `w W_I`.
    pub fn min_coset_rep(&self, w: &[RootIdx], generators: &Marking) -> ElementKey {
        let mut cur: ElementKey = w.into();
        while let Some(node) = generators
            .iter()
            .find(|&i| !self.is_positive(cur[i - 1]))
        {
            cur = self.right_reflect(&cur, node);
        }
        cur
    }

    /// Length of the minimal representative of `w W_I`, the dimension of the
    /// corresponding Schubert cell in `G/P_I`.
    pub fn min_coset_length(&self, w: &[RootIdx], generators: &Marking) -> usize {
        self.length(&self.min_coset_rep(w, generators))
    }

    /// The subgroup generated by `{s_i : i in generators}`.
    pub fn enumerate_weyl(&self, generators: &Marking, limit: WeylLimit) -> Result<WeylSubset> {
        self.diagram().check_marking(generators)?;
        limit.check(self.diagram().weyl_order_of(generators))?;
        let seed = HashSet::from([self.identity_key()]);
        let elements = self.close_left(seed, generators);
        Ok(WeylSubset {
            elements,
            generators: Some(generators.clone()),
        })
    }

    /// Closes `seed` under left multiplication by the given simple
    /// reflections, i.e. computes `W_I * seed`.
    pub fn close_left(&self, seed: HashSet<ElementKey>, generators: &Marking) -> HashSet<ElementKey> {
        let mut set = seed;
        let mut queue: VecDeque<ElementKey> = set.iter().cloned().collect();
        while let Some(w) = queue.pop_front() {
            for node in generators.iter() {
                let next = self.left_reflect(node, &w);
                if !set.contains(&next) {
                    set.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        set
    }

    /// The longest element `w0`, built by right-multiplying simple
    /// reflections while some simple root is still sent to a positive root.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity_key();
        while let Some(node) = (1..=self.rank()).find(|&i| self.is_positive(w[i - 1])) {
            w = self.right_reflect(&w, node);
        }
        self.element(w)
    }

    /// The involution `a_i -> -w0(a_i)` as a node table (entry `i - 1` is the
    /// image of node `i`).
    pub fn involution_via_w0(&self) -> Vec<usize> {
        let w0 = self.longest_element();
        w0.key()
            .iter()
            .map(|&r| {
                let img = self.negate(r) as usize;
                assert!(img < self.rank(), "-w0 maps simple roots to simple roots");
                img + 1
            })
            .collect()
    }
}

pub fn enumerate_weyl(rs: &RootSystem, generators: &Marking, limit: WeylLimit) -> Result<WeylSubset> {
    rs.enumerate_weyl(generators, limit)
}

pub fn longest_element(rs: &RootSystem) -> WeylElement {
    rs.longest_element()
}

pub fn involution_via_w0(rs: &RootSystem) -> Vec<usize> {
    rs.involution_via_w0()
}

pub fn min_coset_length(w: &WeylElement, generators: &Marking, rs: &RootSystem) -> usize {
    rs.min_coset_length(w.key(), generators)
}

const PRODUCT_SHARD: usize = 64;

/// `{ab : a in A, b in B}`. Work is sharded across threads; the result is a
/// set and does not depend on the sharding.
pub fn product_set(rs: &RootSystem, a: &WeylSubset, b: &WeylSubset, limit: WeylLimit) -> Result<WeylSubset> {
    let left: Vec<&ElementKey> = a.iter().collect();
    let right: Vec<&ElementKey> = b.iter().collect();
    let elements = left
        .par_chunks(PRODUCT_SHARD)
        .map(|chunk| {
            let mut part = HashSet::new();
            for x in chunk {
                for y in &right {
                    part.insert(rs.compose(x, y));
                }
            }
            part
        })
        .reduce(HashSet::new, |mut acc, part| {
            if acc.len() < part.len() {
                return part.into_iter().chain(acc).collect();
            }
            acc.extend(part);
            acc
        });
    limit.check(elements.len() as u128)?;
    Ok(WeylSubset::from_keys(elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::generate_roots;

    fn rs(s: &str) -> RootSystem {
        generate_roots(&s.parse().unwrap())
    }

    fn whole(r: &RootSystem) -> WeylSubset {
        r.enumerate_weyl(&r.diagram().all_nodes(), WeylLimit::DEFAULT).unwrap()
    }

    #[test]
    fn group_orders() {
        for (s, order) in [("A3", 24), ("B3", 48), ("C3", 48), ("D4", 192), ("G2", 12), ("F4", 1152), ("A1xA2", 12)] {
            assert_eq!(whole(&rs(s)).len(), order, "{s}");
        }
        let a3 = rs("A3");
        assert_eq!(a3.enumerate_weyl(&Marking::from([1, 3]), WeylLimit::DEFAULT).unwrap().len(), 4);
        assert_eq!(a3.enumerate_weyl(&Marking::empty(), WeylLimit::DEFAULT).unwrap().len(), 1);
    }

    #[test]
    fn guard_limit() {
        let e7 = rs("E7");
        let err = e7.enumerate_weyl(&e7.diagram().all_nodes(), WeylLimit::DEFAULT).unwrap_err();
        assert_eq!(err, Error::GuardLimit { estimated: 2_903_040, limit: 1_000_000 });
        assert_eq!(err.exit_code(), 3);
        let a3 = rs("A3");
        assert!(a3.enumerate_weyl(&a3.diagram().all_nodes(), WeylLimit(23)).is_err());
    }

    #[test]
    fn longest_elements() {
        let a1 = rs("A1");
        let w0 = a1.longest_element();
        assert_eq!(w0.key(), &*a1.simple_reflection_key(1));
        assert_eq!(w0.length(), 1);
        assert_eq!(rs("A3").longest_element().length(), 6);

        // B3: w0 = -1, so every simple root goes to its negative
        let b3 = rs("B3");
        let w0 = b3.longest_element();
        assert_eq!(w0.length(), 9);
        for node in 1..=3 {
            assert_eq!(w0.key()[node - 1], b3.negate(b3.simple(node)));
        }
        for r in 0..b3.roots().len() as RootIdx {
            assert_eq!(b3.apply(w0.key(), r), b3.negate(r));
        }
    }

    #[test]
    fn longest_element_is_max_length_of_bfs() {
        for s in ["A3", "B3", "G2", "A1xA2"] {
            let r = rs(s);
            let w = whole(&r);
            let best = w.iter().max_by_key(|k| r.length(k)).unwrap();
            assert_eq!(**best, *r.longest_element().key());
        }
    }

    #[test]
    fn involutions_via_w0() {
        assert_eq!(rs("A3").involution_via_w0(), vec![3, 2, 1]);
        assert_eq!(rs("C3").involution_via_w0(), vec![1, 2, 3]);
        assert_eq!(rs("D5").involution_via_w0(), vec![1, 2, 3, 5, 4]);
    }

    #[test]
    fn min_coset_lengths() {
        let a3 = rs("A3");
        let w0 = a3.longest_element();
        let levi = Marking::from([1, 3]);
        assert_eq!(min_coset_length(&w0, &levi, &a3), 4);
        // brute force over the coset w0 W_I
        let wi = a3.enumerate_weyl(&levi, WeylLimit::DEFAULT).unwrap();
        let brute = wi.iter().map(|u| a3.length(&a3.compose(w0.key(), u))).min().unwrap();
        assert_eq!(brute, 4);

        let id = a3.element(a3.identity_key());
        assert_eq!(min_coset_length(&id, &levi, &a3), 0);

        let a2 = rs("A2");
        let s1s2 = a2.compose(&a2.simple_reflection_key(1), &a2.simple_reflection_key(2));
        assert_eq!(a2.min_coset_length(&s1s2, &Marking::empty()), 2);
    }

    #[test]
    fn min_coset_rep_matches_brute_force_everywhere() {
        for s in ["A3", "B3", "G2", "A1xB2"] {
            let r = rs(s);
            let w = whole(&r);
            for gens in Marking::all_subsets_of(&r.diagram().all_nodes().to_vec()) {
                let wi = r.enumerate_weyl(&gens, WeylLimit::DEFAULT).unwrap();
                for x in w.iter() {
                    let brute = wi.iter().map(|u| r.length(&r.compose(x, u))).min().unwrap();
                    let fast = r.min_coset_length(x, &gens);
                    assert_eq!(fast, brute);
                    assert!(fast <= r.length(x));
                    assert_eq!(fast == r.length(x), *r.min_coset_rep(x, &gens) == **x);
                }
            }
        }
    }

    #[test]
    fn product_sets() {
        let a3 = rs("A3");
        let l = WeylLimit::DEFAULT;
        let w13 = a3.enumerate_weyl(&Marking::from([1, 3]), l).unwrap();
        let w23 = a3.enumerate_weyl(&Marking::from([2, 3]), l).unwrap();
        let e = a3.enumerate_weyl(&Marking::empty(), l).unwrap();
        assert_eq!(product_set(&a3, &w13, &w23, l).unwrap().len(), 12);
        assert_eq!(product_set(&a3, &w13, &e, l).unwrap().into_keys(), w13.clone().into_keys());
        let all = whole(&a3);
        assert_eq!(product_set(&a3, &w13, &all, l).unwrap().len(), 24);
        assert!(product_set(&a3, &w13, &w23, WeylLimit(11)).is_err());
    }

    #[test]
    fn product_is_independent_of_thread_count() {
        let f4 = rs("F4");
        let l = WeylLimit::DEFAULT;
        let a = f4.enumerate_weyl(&Marking::from([1, 2, 3]), l).unwrap();
        let b = f4.enumerate_weyl(&Marking::from([2, 3, 4]), l).unwrap();
        let par = product_set(&f4, &a, &b, l).unwrap();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| product_set(&f4, &a, &b, l).unwrap());
        assert_eq!(par, single);
        let mut seq = HashSet::new();
        for x in a.iter() {
            for y in b.iter() {
                seq.insert(f4.compose(x, y));
            }
        }
        assert_eq!(par.into_keys(), seq);
    }

    #[test]
    fn left_and_right_reflections_agree_with_compose() {
        let r = rs("F4");
        let w = whole(&r);
        for x in w.iter().take(200) {
            for node in 1..=4 {
                let s = r.simple_reflection_key(node);
                assert_eq!(r.left_reflect(node, x), r.compose(&s, x));
                assert_eq!(r.right_reflect(x, node), r.compose(x, &s));
            }
            assert_eq!(r.compose(x, &r.inverse(x)), r.identity_key());
        }
    }
}
