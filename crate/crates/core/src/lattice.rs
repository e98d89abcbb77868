//! Complete subgroup lattices of small groups.

use std::collections::HashSet;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::table::{ElementSet, ElementTable, TableSubgroup};

fn lattice_table(group: &PermGroup, caps: &Caps) -> Result<ElementTable> {
    let order = group.order();
    if order > caps.lattice.into() {
        return Err(Error::LatticeCap {
            order,
            cap: caps.lattice,
        });
    }
    ElementTable::build(group, caps)
}

/// Every subgroup, as the closure of the cyclic subgroups under joins.
/// Sorted by order, then by element indices.
pub(crate) fn table_lattice(table: &ElementTable) -> Vec<TableSubgroup> {
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut cyclic: Vec<TableSubgroup> = Vec::new();
    for i in 0..table.len() as u32 {
        let c = table.generated(&[i]);
        if seen.insert(c.set.clone()) {
            cyclic.push(c);
        }
    }
    let mut all = cyclic.clone();
    let mut head = 0;
    while head < all.len() {
        let h = all[head].clone();
        head += 1;
        for c in &cyclic {
            if c.set.is_subset(&h.set) {
                continue;
            }
            let generator = *c.generators.first().expect("nontrivial cyclic subgroup");
            let join = table.extend(&h, generator);
            if seen.insert(join.set.clone()) {
                all.push(join);
            }
        }
    }
    for h in &mut all {
        h.members.sort_unstable();
    }
    all.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    all
}

pub(crate) fn table_maximal(all: &[TableSubgroup], order: usize) -> Vec<TableSubgroup> {
    let proper: Vec<&TableSubgroup> = all.iter().filter(|h| h.order() < order).collect();
    proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.order() > h.order() && h.set.is_subset(&k.set))
        })
        .map(|h| (*h).clone())
        .collect()
}

pub fn all_subgroups(group: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let table = lattice_table(group, caps)?;
    Ok(table_lattice(&table)
        .iter()
        .map(|h| table.to_group(h))
        .collect())
}

/// Proper subgroups that are maximal under inclusion.
pub fn maximal_subgroups(group: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let table = lattice_table(group, caps)?;
    let all = table_lattice(&table);
    Ok(table_maximal(&all, table.len())
        .iter()
        .map(|h| table.to_group(h))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::big;

    fn orders(groups: &[PermGroup]) -> Vec<u64> {
        groups.iter().map(|g| g.order_u64().unwrap()).collect()
    }

    #[test]
    fn cyclic_six() {
        let c6 = PermGroup::from_cycles(6, &["(1 2 3 4 5 6)"]).unwrap();
        assert_eq!(orders(&all_subgroups(&c6, &Caps::default()).unwrap()), vec![1, 2, 3, 6]);
    }

    #[test]
    fn s3_has_six_subgroups() {
        let s3 = PermGroup::from_cycles(3, &["(1 2)", "(1 2 3)"]).unwrap();
        let subs = all_subgroups(&s3, &Caps::default()).unwrap();
        assert_eq!(orders(&subs), vec![1, 2, 2, 2, 3, 6]);
        let max = maximal_subgroups(&s3, &Caps::default()).unwrap();
        assert_eq!(orders(&max), vec![2, 2, 2, 3]);
    }

    #[test]
    fn prime_cyclic_maximal_is_trivial() {
        let c7 = PermGroup::from_cycles(7, &["(1 2 3 4 5 6 7)"]).unwrap();
        let max = maximal_subgroups(&c7, &Caps::default()).unwrap();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].order(), big(1));
    }

    #[test]
    fn s4_lattice_size() {
        // S4 has 30 subgroups.
        let s4 = PermGroup::from_cycles(4, &["(1 2)", "(1 2 3 4)"]).unwrap();
        assert_eq!(all_subgroups(&s4, &Caps::default()).unwrap().len(), 30);
    }

    #[test]
    fn lattice_cap() {
        let s5 = PermGroup::from_cycles(5, &["(1 2)", "(1 2 3 4 5)"]).unwrap();
        assert!(matches!(
            all_subgroups(&s5, &Caps::default()),
            Err(Error::LatticeCap { .. })
        ));
    }
}
