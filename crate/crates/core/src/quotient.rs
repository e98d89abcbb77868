//! Actions on right cosets and quotient groups.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use crate::chain::StabilizerChain;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A homomorphism given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: PermGroup,
    image: PermGroup,
    generator_images: Vec<Permutation>,
}

impl Homomorphism {
    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    /// Image of the product of source generators listed in `word`.
    pub fn image_of_word(&self, word: &[usize]) -> Permutation {
        word.iter()
            .fold(self.image.identity(), |acc, &k| acc.then(&self.generator_images[k]))
    }
}

/// Lexicographically least base image among the elements of the right coset
/// `H x`, where `chain` belongs to `H`. Two elements lie in the same coset
/// exactly when their canonical representatives agree.
pub fn canonical_coset_rep(chain: &StabilizerChain, x: &Permutation) -> Permutation {
    let mut x = x.clone();
    for level in chain.levels() {
        let best = level
            .orbit()
            .iter()
            .copied()
            .min_by_key(|&d| x.image(d))
            .expect("orbit contains the base point");
        x = level.left_multiply_transversal(best, &x);
    }
    x
}

/// Action of `group` on the right cosets of `subgroup`, as a group of degree
/// `[group : subgroup]`. Coset `k` is the `k`-th coset reached by a
/// breadth-first search from `subgroup` itself.
pub fn coset_action(group: &PermGroup, subgroup: &PermGroup, caps: &Caps) -> Result<Homomorphism> {
    if subgroup.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: subgroup.degree(),
        });
    }
    if let Some(g) = subgroup.generators().iter().find(|g| !group.contains(g)) {
        return Err(Error::NotSubgroup(g.to_string()));
    }
    let index = group.order() / subgroup.order();
    match index.to_u64() {
        Some(i) if i <= caps.coset => {}
        _ => {
            return Err(Error::CosetCap {
                index,
                cap: caps.coset,
            })
        }
    }

    let chain = subgroup.chain();
    let gens = group.generators();
    let start = canonical_coset_rep(chain, &group.identity());
    let mut reps = vec![start.clone()];
    let mut lookup: HashMap<Permutation, u32> = HashMap::from([(start, 0)]);
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut head = 0;
    while head < reps.len() {
        let rep = reps[head].clone();
        head += 1;
        for (k, s) in gens.iter().enumerate() {
            let c = canonical_coset_rep(chain, &rep.then(s));
            let next = lookup.len() as u32;
            let target = *lookup.entry(c.clone()).or_insert_with(|| {
                reps.push(c);
                next
            });
            images[k].push(target);
        }
    }
    let degree = reps.len();
    let generator_images = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    let image = PermGroup::new(degree, generator_images.clone())?;
    Ok(Homomorphism {
        source: group.clone(),
        image,
        generator_images,
    })
}

/// `group / normal` as a permutation group. Normality is verified. The
/// quotient by the trivial subgroup is `group` itself.
pub fn quotient(group: &PermGroup, normal: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    if let Some(g) = normal.generators().iter().find(|g| !group.contains(g)) {
        return Err(Error::NotSubgroup(g.to_string()));
    }
    for s in group.generators() {
        for n in normal.generators() {
            let c = n.conjugate_by(s);
            if !normal.contains(&c) {
                return Err(Error::NotNormal(c.to_string()));
            }
        }
    }
    if normal.is_trivial() {
        return Ok(group.clone());
    }
    let hom = coset_action(group, normal, caps)?;
    let image = hom.image;
    if image.order() * normal.order() != group.order() {
        return Err(Error::Internal(format!(
            "quotient of order {} by {} has order {}",
            group.order(),
            normal.order(),
            image.order()
        )));
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::big;

    fn s4() -> PermGroup {
        PermGroup::from_cycles(4, &["(1 2)", "(1 2 3 4)"]).unwrap()
    }

    fn klein() -> PermGroup {
        PermGroup::from_cycles(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap()
    }

    #[test]
    fn s4_mod_klein_has_order_six() {
        let q = quotient(&s4(), &klein(), &Caps::default()).unwrap();
        assert_eq!(q.order(), big(6));
        assert_eq!(q.degree(), 6);
    }

    #[test]
    fn c6_mod_c2_has_order_three() {
        let c6 = PermGroup::from_cycles(6, &["(1 2 3 4 5 6)"]).unwrap();
        let c2 = PermGroup::from_cycles(6, &["(1 4)(2 5)(3 6)"]).unwrap();
        assert_eq!(quotient(&c6, &c2, &Caps::default()).unwrap().order(), big(3));
    }

    #[test]
    fn quotient_by_trivial_is_the_group() {
        let q = quotient(&s4(), &PermGroup::trivial(4), &Caps::default()).unwrap();
        assert_eq!(q.order(), big(24));
    }

    #[test]
    fn quotient_requires_normality() {
        let c2 = PermGroup::from_cycles(4, &["(1 2)"]).unwrap();
        assert!(matches!(
            quotient(&s4(), &c2, &Caps::default()),
            Err(Error::NotNormal(_))
        ));
    }

    #[test]
    fn coset_action_on_point_stabilizer_is_natural_degree() {
        let stab = PermGroup::from_cycles(4, &["(1 2)", "(1 2 3)"]).unwrap();
        let hom = coset_action(&s4(), &stab, &Caps::default()).unwrap();
        assert_eq!(hom.image().degree(), 4);
        assert_eq!(hom.image().order(), big(24));
    }

    #[test]
    fn coset_action_rejects_non_subgroup_and_cap() {
        let a4 = PermGroup::from_cycles(4, &["(1 2 3)", "(2 3 4)"]).unwrap();
        assert!(matches!(
            coset_action(&a4, &s4(), &Caps::default()),
            Err(Error::NotSubgroup(_))
        ));
        let caps = Caps {
            coset: 3,
            ..Caps::default()
        };
        assert!(matches!(
            coset_action(&s4(), &klein(), &caps),
            Err(Error::CosetCap { .. })
        ));
    }

    #[test]
    fn coset_action_is_multiplicative_on_words() {
        // Modulo a normal subgroup the action is faithful, so the image of g
        // has order equal to the least m with g^m in the kernel.
        let hom = coset_action(&s4(), &klein(), &Caps::default()).unwrap();
        let words: [&[usize]; 4] = [&[0, 1], &[1, 1, 0], &[0, 1, 0, 1, 1], &[1, 0, 0, 1]];
        for w in words {
            let g = w
                .iter()
                .fold(s4().identity(), |acc, &k| acc.then(&s4().generators()[k]));
            let m = (1..).find(|&m| klein().contains(&g.pow(m))).unwrap();
            assert_eq!(hom.image_of_word(w).order(), m);
        }
    }

    #[test]
    fn canonical_rep_identifies_cosets() {
        let k = klein();
        let g = Permutation::parse_cycles("(1 2 3)", 4).unwrap();
        let reps: Vec<_> = k
            .elements(&Caps::default())
            .unwrap()
            .iter()
            .map(|n| canonical_coset_rep(k.chain(), &n.then(&g)))
            .collect();
        assert!(reps.windows(2).all(|w| w[0] == w[1]));
        assert_ne!(reps[0], canonical_coset_rep(k.chain(), &k.identity()));
    }
}
