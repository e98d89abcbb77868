//! Order, exponent, `|G|/exp(G)`, minimal generator count, Sylow subgroups
//! and structural flags of a permutation group.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{big, PermGroup};
use crate::perm::Permutation;
use crate::table::{ElementSet, ElementTable, TableSubgroup};

/// How an exponent was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExponentMethod {
    /// lcm of element orders over the full element stream
    Enumeration,
    /// product of Sylow subgroup exponents
    SylowProduct,
}

/// Exponent and maximal element order, both from one pass over the elements.
pub fn exponent_and_max_order(group: &PermGroup, caps: &Caps) -> Result<(BigUint, BigUint)> {
    let mut exponent = 1u64;
    let mut max_order = 1u64;
    let _ = group.try_for_each_element(caps, |g| {
        let m = g.order();
        exponent = exponent.lcm(&m);
        max_order = max_order.max(m);
        ControlFlow::<()>::Continue(())
    })?;
    Ok((big(exponent), big(max_order)))
}

pub fn exponent(group: &PermGroup, caps: &Caps) -> Result<BigUint> {
    exponent_and_max_order(group, caps).map(|(e, _)| e)
}

pub fn max_element_order(group: &PermGroup, caps: &Caps) -> Result<BigUint> {
    exponent_and_max_order(group, caps).map(|(_, m)| m)
}

/// Exponent by enumeration when the group is within the cap, otherwise as the
/// product of the exponents of its Sylow subgroups.
pub fn exponent_with_method(group: &PermGroup, caps: &Caps) -> Result<(BigUint, ExponentMethod)> {
    if group.enumerable_order(caps).is_ok() {
        return Ok((exponent(group, caps)?, ExponentMethod::Enumeration));
    }
    let mut product = BigUint::one();
    for (p, _) in group.order_factorization() {
        let sylow = sylow(group, p)?;
        product *= exponent(&sylow, caps)?;
    }
    Ok((product, ExponentMethod::SylowProduct))
}

/// `|G| / exp(G)`. A non-integral ratio means the exponent computation is
/// broken and is reported as an internal error.
pub fn ratio_e(group: &PermGroup, caps: &Caps) -> Result<BigUint> {
    let (exp, _) = exponent_with_method(group, caps)?;
    exact_ratio(&group.order(), &exp)
}

fn exact_ratio(order: &BigUint, exponent: &BigUint) -> Result<BigUint> {
    let (q, r) = order.div_rem(exponent);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "exponent {exponent} does not divide order {order}"
        )));
    }
    Ok(q)
}

pub fn smallest_prime(group: &PermGroup) -> Option<u64> {
    group.order_factorization().keys().next().copied()
}

/// A Sylow `p`-subgroup. Starts from the `p`-part of an element whose
/// `p`-part has the largest order, then repeatedly adjoins a `p`-element that
/// normalizes the current subgroup without lying in it. Elements are streamed
/// from the stabilizer chain, never stored.
pub fn sylow(group: &PermGroup, p: u64) -> Result<PermGroup> {
    let order = group.order();
    let target = arith::p_part(&order, p);
    if target.is_one() {
        return Err(Error::PrimeDoesNotDivide { prime: p, order });
    }
    let chain = group.chain();

    let mut best: Option<(u64, Permutation)> = None;
    let _ = chain.try_for_each_element(|g| {
        let m = g.order();
        let mut pm = 1;
        let mut rest = m;
        while rest % p == 0 {
            rest /= p;
            pm *= p;
        }
        if best.as_ref().is_none_or(|(b, _)| pm > *b) {
            best = Some((pm, g.pow(rest)));
        }
        ControlFlow::<()>::Continue(())
    });
    let (_, start) = best.expect("group has an identity element");
    let mut sylow = group.subgroup(vec![start])?;

    while sylow.order() < target {
        let found = chain.try_for_each_element(|g| {
            let y = PermGroup::p_power_part(g, p);
            if !sylow.contains(&y) && sylow.is_normalized_by(&y) {
                ControlFlow::Break(y)
            } else {
                ControlFlow::Continue(())
            }
        });
        let ControlFlow::Break(y) = found else {
            return Err(Error::Internal(format!(
                "no p-element normalizes a {p}-subgroup of order {}",
                sylow.order()
            )));
        };
        let mut gens = sylow.generators().to_vec();
        gens.push(y);
        sylow = group.subgroup(gens)?;
    }
    if sylow.order() != target {
        return Err(Error::Internal(format!(
            "Sylow {p}-subgroup has order {} instead of {target}",
            sylow.order()
        )));
    }
    Ok(sylow)
}

/// One Sylow subgroup for each prime dividing the order.
pub fn sylow_system(group: &PermGroup) -> Result<BTreeMap<u64, PermGroup>> {
    group
        .order_factorization()
        .into_keys()
        .map(|p| Ok((p, sylow(group, p)?)))
        .collect()
}

/// Frattini subgroup of a `p`-group: the normal closure of the commutators of
/// generator pairs and the `p`-th powers of the generators.
pub fn frattini_pgroup(group: &PermGroup, p: u64) -> Result<PermGroup> {
    let order = group.order();
    if arith::exact_log(&order, p).is_none() {
        return Err(Error::NotPGroup { prime: p, order });
    }
    let gens = group.generators();
    let mut seeds = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        seeds.push(a.pow(p));
        for b in &gens[i + 1..] {
            seeds.push(a.commutator(b));
        }
    }
    seeds.retain(|s| !s.is_identity());
    group.normal_closure(&seeds)
}

/// Minimal generator count of a `p`-group via the Burnside basis theorem:
/// `log_p [P : Frattini(P)]`.
pub fn d_pgroup(group: &PermGroup, p: u64) -> Result<usize> {
    let frattini = frattini_pgroup(group, p)?;
    let index = group.order() / frattini.order();
    arith::exact_log(&index, p)
        .map(|k| k as usize)
        .ok_or_else(|| Error::Internal(format!("Frattini index {index} is not a power of {p}")))
}

/// Minimal generator count. Prime-power orders take the Frattini route and
/// confirm it with an explicit generating tuple; everything else goes through
/// [`min_generators_exhaustive`].
pub fn min_generators(group: &PermGroup, caps: &Caps) -> Result<usize> {
    let order = group.enumerable_order(caps)?;
    if order == 1 {
        return Ok(0);
    }
    let factors = group.order_factorization();
    if factors.len() == 1 {
        let p = *factors.keys().next().expect("one prime");
        return d_pgroup_with_witness(group, p);
    }
    min_generators_exhaustive(group, caps)
}

fn d_pgroup_with_witness(group: &PermGroup, p: u64) -> Result<usize> {
    let frattini = frattini_pgroup(group, p)?;
    let d = d_pgroup(group, p)?;
    let mut span = frattini.generators().to_vec();
    let mut witness = Vec::new();
    for g in group.generators() {
        let current = group.subgroup(span.clone())?;
        if !current.contains(g) {
            span.push(g.clone());
            witness.push(g.clone());
        }
    }
    let generated = group.subgroup(witness.clone())?;
    if witness.len() != d || generated.order() != group.order() {
        return Err(Error::Internal(format!(
            "Frattini count {d} not confirmed: {} chosen generators span order {}",
            witness.len(),
            generated.order()
        )));
    }
    Ok(d)
}

/// Least `k` such that some `k` elements generate the group, by exhaustive
/// search. The first generator ranges over conjugacy class representatives
/// and each later one over elements outside the subgroup generated so far.
/// Small groups search the subgroups reachable with `k` generators level by
/// level on a multiplication table, trying one element per right coset.
pub fn min_generators_exhaustive(group: &PermGroup, caps: &Caps) -> Result<usize> {
    let order = group.enumerable_order(caps)?;
    if order == 1 {
        return Ok(0);
    }
    if order <= ElementTable::LIMIT {
        let table = ElementTable::build(group, caps)?;
        let gens = table.generator_indices(group)?;
        Ok(table_min_generators(&table, &gens))
    } else {
        chain_min_generators(group, caps)
    }
}

pub(crate) fn table_min_generators(table: &ElementTable, group_gens: &[u32]) -> usize {
    let n = table.len();
    if n == 1 {
        return 0;
    }
    let mut reps = table.class_representatives(group_gens);
    reps.sort_by_key(|&r| std::cmp::Reverse(table.element_order(r)));

    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut level: Vec<TableSubgroup> = Vec::new();
    for r in reps {
        let h = table.generated(&[r]);
        if h.order() == n {
            return 1;
        }
        if seen.insert(h.set.clone()) {
            level.push(h);
        }
    }
    let mut k = 1;
    loop {
        let mut next = Vec::new();
        let mut seen_next: HashSet<ElementSet> = HashSet::new();
        for h in &level {
            let mut covered = h.set.clone();
            for g in 0..n as u32 {
                if covered.contains(g) {
                    continue;
                }
                // <h, g> = <h, x g> for every x in h
                for &x in &h.members {
                    covered.insert(table.mul(x, g));
                }
                let joined = table.extend(h, g);
                if joined.order() == n {
                    return k + 1;
                }
                if seen_next.insert(joined.set.clone()) {
                    next.push(joined);
                }
            }
        }
        level = next;
        k += 1;
    }
}

fn chain_min_generators(group: &PermGroup, caps: &Caps) -> Result<usize> {
    let order = group.order();
    let elements = group.elements(caps)?;
    let mut reps = class_representatives_of(group, &elements);
    reps.sort_by_key(|r| std::cmp::Reverse(r.order()));

    fn search(
        group: &PermGroup,
        elements: &[Permutation],
        order: &BigUint,
        gens: &mut Vec<Permutation>,
        budget: usize,
    ) -> Result<bool> {
        let current = group.subgroup(gens.clone())?;
        if &current.order() == order {
            return Ok(true);
        }
        if gens.len() == budget {
            return Ok(false);
        }
        for g in elements {
            if current.contains(g) {
                continue;
            }
            gens.push(g.clone());
            let done = search(group, elements, order, gens, budget)?;
            gens.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    for k in 1.. {
        for r in &reps {
            if search(group, &elements, &order, &mut vec![r.clone()], k)? {
                return Ok(k);
            }
        }
    }
    unreachable!("every finite group is finitely generated")
}

fn class_representatives_of(group: &PermGroup, elements: &[Permutation]) -> Vec<Permutation> {
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let inverses: Vec<Permutation> = group.generators().iter().map(Permutation::inverse).collect();
    let mut seen = vec![false; elements.len()];
    let mut reps = Vec::new();
    for start in 0..elements.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        reps.push(elements[start].clone());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for (s, s_inv) in group.generators().iter().zip(&inverses) {
                let c = s_inv.then(&elements[i]).then(s);
                let j = index[&c];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    reps
}

/// One element from each conjugacy class, by orbits of conjugation over the
/// element stream.
pub fn conjugacy_class_representatives(group: &PermGroup, caps: &Caps) -> Result<Vec<Permutation>> {
    let elements = group.elements(caps)?;
    Ok(class_representatives_of(group, &elements))
}

/// Derived series reaches the trivial group.
pub fn is_solvable(group: &PermGroup) -> bool {
    let mut current = group.clone();
    loop {
        if current.is_trivial() || current.order().is_one() {
            return true;
        }
        let next = current.derived_subgroup();
        if next.order() == current.order() {
            return false;
        }
        current = next;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralFlags {
    pub cyclic: bool,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub all_sylow_cyclic: bool,
}

pub fn structural_flags(group: &PermGroup, caps: &Caps) -> Result<StructuralFlags> {
    let (_, max_order) = exponent_and_max_order(group, caps)?;
    let sylows = sylow_system(group)?;
    flags_from_parts(group, &max_order, &sylows, caps)
}

fn flags_from_parts(
    group: &PermGroup,
    max_order: &BigUint,
    sylows: &BTreeMap<u64, PermGroup>,
    caps: &Caps,
) -> Result<StructuralFlags> {
    let mut all_sylow_cyclic = true;
    for p in sylows.values() {
        let (_, m) = exponent_and_max_order(p, caps)?;
        all_sylow_cyclic &= m == p.order();
    }
    Ok(StructuralFlags {
        cyclic: *max_order == group.order(),
        abelian: group.is_abelian(),
        nilpotent: sylows.values().all(|p| p.is_normal_in(group)),
        solvable: is_solvable(group),
        all_sylow_cyclic,
    })
}

/// Data for one Sylow subgroup `P` with `|P| = p^a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowData {
    pub prime: u64,
    pub power: u32,
    #[serde(with = "crate::bigser")]
    pub exponent: BigUint,
    #[serde(rename = "E", with = "crate::bigser")]
    pub ratio_e: BigUint,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInvariants {
    #[serde(with = "crate::bigser")]
    pub order: BigUint,
    #[serde(with = "crate::bigser")]
    pub exponent: BigUint,
    pub exponent_method: ExponentMethod,
    #[serde(rename = "E", with = "crate::bigser")]
    pub ratio_e: BigUint,
    pub d: usize,
    pub smallest_prime: Option<u64>,
    #[serde(with = "crate::bigser")]
    pub max_element_order: BigUint,
    pub flags: StructuralFlags,
    pub sylow: Vec<SylowData>,
}

/// A group together with its invariants and the Sylow system they were
/// computed from.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub group: PermGroup,
    pub invariants: GroupInvariants,
    pub sylows: BTreeMap<u64, PermGroup>,
}

pub fn analyze(group: &PermGroup, caps: &Caps) -> Result<Analysis> {
    let order = group.order();
    let (exponent, max_element_order) = exponent_and_max_order(group, caps)?;
    let ratio_e = exact_ratio(&order, &exponent)?;
    let d = min_generators(group, caps)?;
    let sylows = sylow_system(group)?;
    let flags = flags_from_parts(group, &max_element_order, &sylows, caps)?;
    let mut sylow_data = Vec::new();
    for (&p, sub) in &sylows {
        let sub_exp = self::exponent(sub, caps)?;
        let sub_order = sub.order();
        sylow_data.push(SylowData {
            prime: p,
            power: arith::exact_log(&sub_order, p).expect("Sylow order is a prime power"),
            ratio_e: exact_ratio(&sub_order, &sub_exp)?,
            exponent: sub_exp,
            d: d_pgroup(sub, p)?,
        });
    }
    let invariants = GroupInvariants {
        smallest_prime: sylows.keys().next().copied(),
        order,
        exponent,
        exponent_method: ExponentMethod::Enumeration,
        ratio_e,
        d,
        max_element_order,
        flags,
        sylow: sylow_data,
    };
    Ok(Analysis {
        group: group.clone(),
        invariants,
        sylows,
    })
}

pub fn invariants_report(group: &PermGroup, caps: &Caps) -> Result<GroupInvariants> {
    analyze(group, caps).map(|a| a.invariants)
}

impl GroupInvariants {
    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }
}
