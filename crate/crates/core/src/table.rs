//! Materialized groups: every element indexed, with a full multiplication
//! table. Used where a search touches many subgroups of one small group.

use std::collections::HashMap;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{big, PermGroup};
use crate::perm::Permutation;

/// Bitset over element indices of an [`ElementTable`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(len: usize) -> Self {
        ElementSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    /// Inserts `i`, returning true when it was absent.
    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        let w = &mut self.words[(i / 64) as usize];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

/// A subgroup of a tabulated group.
#[derive(Clone, Debug)]
pub struct TableSubgroup {
    pub set: ElementSet,
    pub members: Vec<u32>,
    pub generators: Vec<u32>,
}

impl TableSubgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }
}

pub struct ElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u64>,
    identity: u32,
}

impl ElementTable {
    /// Largest order tabulated; the table holds `order^2` entries.
    pub const LIMIT: u64 = 2048;

    pub fn build(group: &PermGroup, caps: &Caps) -> Result<Self> {
        let limit = Caps {
            enumeration: caps.enumeration.min(Self::LIMIT),
            ..*caps
        };
        let elements = group.elements(&limit)?;
        Ok(Self::from_elements(elements))
    }

    /// Tabulates a list that is already closed under multiplication.
    pub fn from_elements(elements: Vec<Permutation>) -> Self {
        let n = elements.len();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        let mut mul = vec![0u32; n * n];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                mul[a * n + b] = index[&x.then(y)];
            }
        }
        let identity = index[&Permutation::identity(elements[0].degree())];
        let inv = elements.iter().map(|x| index[&x.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        ElementTable {
            elements,
            index,
            mul,
            inv,
            orders,
            identity,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.elements.len() + b as usize]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn element(&self, a: u32) -> &Permutation {
        &self.elements[a as usize]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn element_order(&self, a: u32) -> u64 {
        self.orders[a as usize]
    }

    pub fn conjugate(&self, x: u32, by: u32) -> u32 {
        self.mul(self.mul(self.inverse(by), x), by)
    }

    pub fn trivial_subgroup(&self) -> TableSubgroup {
        let mut set = ElementSet::empty(self.len());
        set.insert(self.identity);
        TableSubgroup {
            set,
            members: vec![self.identity],
            generators: Vec::new(),
        }
    }

    pub fn whole(&self) -> TableSubgroup {
        let mut set = ElementSet::empty(self.len());
        for i in 0..self.len() as u32 {
            set.insert(i);
        }
        TableSubgroup {
            set,
            members: (0..self.len() as u32).collect(),
            generators: Vec::new(),
        }
    }

    /// `<h, g>`. Old members only need multiplying by `g`; new members by
    /// every generator.
    pub fn extend(&self, h: &TableSubgroup, g: u32) -> TableSubgroup {
        let mut set = h.set.clone();
        let mut members = h.members.clone();
        let mut generators = h.generators.clone();
        generators.push(g);
        let old = members.len();
        for k in 0..old {
            let x = self.mul(members[k], g);
            if set.insert(x) {
                members.push(x);
            }
        }
        let mut head = old;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &s in &generators {
                let y = self.mul(x, s);
                if set.insert(y) {
                    members.push(y);
                }
            }
        }
        TableSubgroup {
            set,
            members,
            generators,
        }
    }

    pub fn generated(&self, gens: &[u32]) -> TableSubgroup {
        gens.iter()
            .fold(self.trivial_subgroup(), |h, &g| {
                if h.set.contains(g) {
                    h
                } else {
                    self.extend(&h, g)
                }
            })
    }

    /// One representative per conjugacy class (the smallest index in the
    /// class), classes listed by first appearance.
    pub fn class_representatives(&self, group_generators: &[u32]) -> Vec<u32> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut reps = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            reps.push(start);
            seen[start as usize] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &g in group_generators {
                    let y = self.conjugate(x, g);
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        stack.push(y);
                    }
                }
            }
        }
        reps
    }

    /// Indices of the generators of `group`, which must be tabulated here.
    pub fn generator_indices(&self, group: &PermGroup) -> Result<Vec<u32>> {
        group
            .generators()
            .iter()
            .map(|g| {
                self.index_of(g)
                    .ok_or_else(|| Error::NotSubgroup(g.to_string()))
            })
            .collect()
    }

    pub fn to_group(&self, sub: &TableSubgroup) -> PermGroup {
        let degree = self.elements[0].degree();
        let gens = sub
            .generators
            .iter()
            .map(|&g| self.element(g).clone())
            .collect();
        PermGroup::new(degree, gens).expect("tabulated elements share one degree")
    }

    pub fn order_big(&self) -> num_bigint::BigUint {
        big(self.len() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4_table() -> (PermGroup, ElementTable) {
        let g = PermGroup::from_cycles(4, &["(1 2)", "(1 2 3 4)"]).unwrap();
        let t = ElementTable::build(&g, &Caps::default()).unwrap();
        (g, t)
    }

    #[test]
    fn table_is_a_group_law() {
        let (_, t) = s4_table();
        assert_eq!(t.len(), 24);
        for a in 0..24 {
            assert_eq!(t.mul(a, t.inverse(a)), t.identity());
            assert_eq!(t.mul(t.identity(), a), a);
        }
    }

    #[test]
    fn five_classes_in_s4() {
        let (g, t) = s4_table();
        let gens = t.generator_indices(&g).unwrap();
        assert_eq!(t.class_representatives(&gens).len(), 5);
    }

    #[test]
    fn extension_matches_generation() {
        let (g, t) = s4_table();
        let gens = t.generator_indices(&g).unwrap();
        let whole = t.generated(&gens);
        assert_eq!(whole.order(), 24);
        let c = t.generated(&gens[1..]);
        assert_eq!(c.order(), 4);
        assert_eq!(t.extend(&c, gens[0]).order(), 24);
        assert!(c.set.is_subset(&whole.set));
        assert!(!whole.set.is_subset(&c.set));
    }
}
