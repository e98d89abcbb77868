use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::chain::StabilizerChain;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and shared between clones.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Arc<StabilizerChain>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// Group generated by cycle-notation strings.
    pub fn from_cycles(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|t| Permutation::parse_cycles(t, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| Arc::new(StabilizerChain::build(self.degree, &self.generators)))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    /// Prime factorization of the order, read off the basic orbit lengths.
    pub fn order_factorization(&self) -> BTreeMap<u64, u32> {
        let mut out = BTreeMap::new();
        for len in self.chain().orbit_sizes() {
            for (p, e) in crate::arith::factorize(len as u64) {
                *out.entry(p).or_insert(0) += e;
            }
        }
        out
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// The order as a `u64`, provided it is within the enumeration cap.
    pub fn enumerable_order(&self, caps: &Caps) -> Result<u64> {
        let order = self.order();
        match order.to_u64() {
            Some(n) if n <= caps.enumeration => Ok(n),
            _ => Err(Error::EnumerationCap {
                order,
                cap: caps.enumeration,
            }),
        }
    }

    pub fn elements(&self, caps: &Caps) -> Result<Vec<Permutation>> {
        let n = self.enumerable_order(caps)?;
        let mut out = Vec::with_capacity(n as usize);
        let _ = self.chain().try_for_each_element(|g| {
            out.push(g.clone());
            ControlFlow::<()>::Continue(())
        });
        Ok(out)
    }

    /// Streams the elements without collecting them.
    pub fn try_for_each_element<B>(
        &self,
        caps: &Caps,
        f: impl FnMut(&Permutation) -> ControlFlow<B>,
    ) -> Result<ControlFlow<B>> {
        self.enumerable_order(caps)?;
        Ok(self.chain().try_for_each_element(f))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    /// The group generated by `gens`; containment in `self` is not checked.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        PermGroup::new(self.degree, gens)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// True when conjugation by `g` maps `self` into itself.
    pub fn is_normalized_by(&self, g: &Permutation) -> bool {
        self.generators
            .iter()
            .all(|n| self.contains(&n.conjugate_by(g)))
    }

    /// True when `self` is normalized by every generator of `other`.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        other.generators.iter().all(|g| self.is_normalized_by(g))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().enumerate().all(|(i, a)| {
            gens[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    /// Smallest subgroup containing `seeds` and closed under conjugation by the
    /// generators of `self`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        for s in seeds {
            if s.degree() != self.degree {
                return Err(Error::DegreeMismatch {
                    left: self.degree,
                    right: s.degree(),
                });
            }
            if !self.contains(s) {
                return Err(Error::NotSubgroup(s.to_string()));
            }
        }
        let mut gens: Vec<Permutation> = Vec::new();
        let mut closure = PermGroup::trivial(self.degree);
        let mut queue: Vec<Permutation> = seeds.to_vec();
        while let Some(x) = queue.pop() {
            if closure.contains(&x) {
                continue;
            }
            for g in &self.generators {
                queue.push(x.conjugate_by(g));
            }
            gens.push(x);
            closure = PermGroup::new(self.degree, gens.clone())?;
        }
        Ok(closure)
    }

    /// Normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = &self.generators;
        let mut commutators = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    commutators.push(c);
                }
            }
        }
        self.normal_closure(&commutators)
            .expect("commutators of generators lie in the group")
    }

    /// `g^m` with `m` the `p'`-part of the order of `g`: a generator of the
    /// Sylow `p`-subgroup of `<g>`.
    pub(crate) fn p_power_part(g: &Permutation, p: u64) -> Permutation {
        let mut rest = g.order();
        while rest.is_multiple_of(p) {
            rest /= p;
        }
        g.pow(rest)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field(
                "generators",
                &self
                    .generators
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

pub(crate) fn big(n: u64) -> BigUint {
    BigUint::from(n)
}
