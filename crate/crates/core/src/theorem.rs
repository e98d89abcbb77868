//! Exact checks of the generator bound `p^(d-2) <= E` (with `E = |G|/exp(G)`
//! and `p` the smallest prime dividing `|G|`) and of the facts it rests on.
//!
//! Negative powers never appear: `p^(d-2) <= E` is compared as
//! `p^d <= E * p^2`, and the nilpotent bound `p^(d-1) <= E` as
//! `p^d <= E * p`. Every comparison is between big integers.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{big, PermGroup};
use crate::invariants::{self, Analysis, GroupInvariants};
use crate::lattice;
use crate::perm::Permutation;
use crate::quotient;
use crate::table::ElementTable;

/// Groups up to this order also get their regular representation built
/// explicitly to confirm the parity formula.
pub const REGULAR_CROSSCHECK_LIMIT: u64 = 60;

fn pow(p: u64, k: usize) -> BigUint {
    big(p).pow(k as u32)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    /// False only for the trivial group, where no prime divides the order.
    pub applicable: bool,
    pub holds: bool,
    pub equality: bool,
    pub prime: Option<u64>,
    pub d: usize,
    /// `p^d`
    #[serde(with = "crate::bigser::option")]
    pub lhs_scaled: Option<BigUint>,
    /// `E * p^2`
    #[serde(with = "crate::bigser::option")]
    pub rhs_scaled: Option<BigUint>,
    /// noncyclic and `exp(G) = |G|`
    pub predicted_equality: bool,
    pub consistent: bool,
}

pub fn theorem_verdict(inv: &GroupInvariants) -> TheoremVerdict {
    let predicted_equality = !inv.flags.cyclic && inv.exponent == inv.order;
    let Some(p) = inv.smallest_prime else {
        return TheoremVerdict {
            applicable: false,
            holds: false,
            equality: false,
            prime: None,
            d: inv.d,
            lhs_scaled: None,
            rhs_scaled: None,
            predicted_equality,
            consistent: true,
        };
    };
    let lhs = pow(p, inv.d);
    let rhs = &inv.ratio_e * pow(p, 2);
    let equality = lhs == rhs;
    TheoremVerdict {
        applicable: true,
        holds: lhs <= rhs,
        equality,
        prime: Some(p),
        d: inv.d,
        lhs_scaled: Some(lhs),
        rhs_scaled: Some(rhs),
        predicted_equality,
        consistent: equality == predicted_equality,
    }
}

pub fn check_theorem(group: &PermGroup, caps: &Caps) -> Result<TheoremVerdict> {
    Ok(theorem_verdict(&invariants::invariants_report(group, caps)?))
}

/// One step of the greedy chain `x_1, ..., x_i` from the nilpotent bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub length: usize,
    #[serde(with = "crate::bigser")]
    pub index: BigUint,
    /// `index * p^(length-1) <= E`
    pub within_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub holds: bool,
    pub equality: bool,
    /// `p^d`
    #[serde(with = "crate::bigser")]
    pub lhs_scaled: BigUint,
    /// `E * p`
    #[serde(with = "crate::bigser")]
    pub rhs_scaled: BigUint,
    pub max_order_is_exponent: bool,
    pub chain: Vec<ChainStep>,
}

/// Nilpotent bound `p^(d-1) <= E`, plus its two proof ingredients: an element
/// of order `exp(G)` exists, and a greedy chain `x_1 = x`, `x_(i+1)` outside
/// `<x_1, ..., x_i>`, keeps `[G : <x_1..x_i>] <= E / p^(i-1)`.
pub fn check_lemma(analysis: &Analysis, caps: &Caps) -> Result<LemmaReport> {
    let inv = &analysis.invariants;
    if !inv.flags.nilpotent {
        return Err(Error::NotNilpotent);
    }
    let p = inv.smallest_prime.ok_or(Error::TrivialGroup)?;
    let group = &analysis.group;
    let lhs = pow(p, inv.d);
    let rhs = &inv.ratio_e * big(p);

    let elements = group.elements(caps)?;
    let max_order = inv.max_element_order.to_u64().expect("enumerable");
    let x = elements
        .iter()
        .find(|g| g.order() == max_order)
        .expect("an element realizes the maximal order");
    let mut gens = vec![x.clone()];
    let mut chain = Vec::new();
    loop {
        let sub = group.subgroup(gens.clone())?;
        let index = &inv.order / sub.order();
        let within_bound = &index * pow(p, gens.len() - 1) <= inv.ratio_e;
        chain.push(ChainStep {
            length: gens.len(),
            index,
            within_bound,
        });
        match elements.iter().find(|g| !sub.contains(g)) {
            Some(g) => gens.push(g.clone()),
            None => break,
        }
    }
    let chain_ok = chain.iter().all(|s| s.within_bound);
    let max_order_is_exponent = inv.max_element_order == inv.exponent;
    Ok(LemmaReport {
        holds: lhs <= rhs && chain_ok && max_order_is_exponent,
        equality: lhs == rhs,
        lhs_scaled: lhs,
        rhs_scaled: rhs,
        max_order_is_exponent,
        chain,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativityReport {
    pub holds: bool,
    #[serde(rename = "E", with = "crate::bigser")]
    pub ratio_e: BigUint,
    #[serde(with = "crate::bigser")]
    pub product: BigUint,
    /// `(p, E(P))` per Sylow subgroup
    pub factors: Vec<(u64, String)>,
}

/// `E(G)` equals the product of `E(P)` over a Sylow system. The exponent of
/// `G` must come from full enumeration, never from the Sylow product itself.
pub fn check_multiplicativity(analysis: &Analysis) -> Result<MultiplicativityReport> {
    let inv = &analysis.invariants;
    if inv.exponent_method != invariants::ExponentMethod::Enumeration {
        return Err(Error::Internal(
            "multiplicativity needs an enumerated exponent".into(),
        ));
    }
    let product = inv
        .sylow
        .iter()
        .fold(BigUint::one(), |acc, s| acc * &s.ratio_e);
    Ok(MultiplicativityReport {
        holds: product == inv.ratio_e,
        ratio_e: inv.ratio_e.clone(),
        product,
        factors: inv
            .sylow
            .iter()
            .map(|s| (s.prime, s.ratio_e.to_string()))
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionSample {
    pub subgroup: String,
    pub subgroup_order: String,
    pub normal: String,
    pub normal_order: String,
    #[serde(rename = "quotient_E")]
    pub quotient_e: String,
    pub divides: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedSample {
    pub subgroup: String,
    pub normal: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionSampleReport {
    pub seed: u64,
    pub requested: usize,
    pub samples: Vec<SectionSample>,
    pub skipped: Vec<SkippedSample>,
}

impl SectionSampleReport {
    /// Enough samples were evaluated and every one divides.
    pub fn holds(&self) -> bool {
        self.samples.len() >= self.requested && self.samples.iter().all(|s| s.divides)
    }
}

/// Samples sections `H/N` of `G` and records whether `E(H/N)` divides `E(G)`.
/// Subgroups: `G`, each Sylow subgroup, then subgroups generated by one or two
/// random elements. Normal subgroups of each `H`: trivial, `H'`, and normal
/// closures of random elements of `H`. Samples whose index or order passes a
/// cap are listed as skipped.
pub fn check_section_divisibility(
    analysis: &Analysis,
    sample_count: usize,
    seed: u64,
    caps: &Caps,
) -> Result<SectionSampleReport> {
    let group = &analysis.group;
    let e_g = &analysis.invariants.ratio_e;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SectionSampleReport {
        seed,
        requested: sample_count,
        samples: Vec::new(),
        skipped: Vec::new(),
    };

    let mut subgroups: Vec<(String, PermGroup)> = vec![("G".into(), group.clone())];
    for (p, s) in &analysis.sylows {
        subgroups.push((format!("Sylow({p})"), s.clone()));
    }
    let max_attempts = 20 * sample_count.max(1);
    let mut attempts = 0;
    let mut next_random = 0usize;
    let mut k = 0;
    while report.samples.len() < sample_count && attempts < max_attempts {
        if k == subgroups.len() {
            let sub = if next_random.is_multiple_of(2) {
                group.subgroup(vec![group.random_element(&mut rng)])?
            } else {
                group.subgroup(vec![group.random_element(&mut rng), group.random_element(&mut rng)])?
            };
            subgroups.push((format!("random#{next_random}"), sub));
            next_random += 1;
        }
        let (h_name, h) = subgroups[k].clone();
        k += 1;

        let mut normals: Vec<(String, PermGroup)> = vec![
            ("1".into(), PermGroup::trivial(group.degree())),
            ("derived".into(), h.derived_subgroup()),
        ];
        for j in 0..2 {
            let r = h.random_element(&mut rng);
            normals.push((format!("ncl(r{j})"), h.normal_closure(&[r])?));
        }
        for (n_name, n) in normals {
            attempts += 1;
            let evaluated = quotient::quotient(&h, &n, caps)
                .and_then(|q| invariants::ratio_e(&q, caps).map(|e| (q, e)));
            match evaluated {
                Ok((_, e_q)) => report.samples.push(SectionSample {
                    subgroup: h_name.clone(),
                    subgroup_order: h.order().to_string(),
                    normal: n_name,
                    normal_order: n.order().to_string(),
                    divides: (e_g % &e_q).is_zero(),
                    quotient_e: e_q.to_string(),
                }),
                Err(err) if err.is_cap() => report.skipped.push(SkippedSample {
                    subgroup: h_name.clone(),
                    normal: n_name,
                    reason: err.to_string(),
                }),
                Err(err) => return Err(err),
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star3Report {
    pub holds: bool,
    pub equality: bool,
    /// `p^2 * prod p_i^(d(P_i) - 1)`
    #[serde(with = "crate::bigser")]
    pub lhs: BigUint,
    /// `p^d`
    #[serde(with = "crate::bigser")]
    pub rhs: BigUint,
    /// `prod p_i^(d(P_i) - 1)`, which the nilpotent bound puts below `E`
    #[serde(with = "crate::bigser")]
    pub sylow_bound: BigUint,
    pub e_dominates_sylow_bound: bool,
}

/// The base-`p` logarithmic inequality
/// `sum (d(P_i) - 1) log p_i / log p >= d - 2`, exponentiated: multiply both
/// sides by `log p`, exponentiate, and multiply by `p^2` to get
/// `p^2 * prod p_i^(d(P_i) - 1) >= p^d`.
pub fn check_star3(analysis: &Analysis) -> Result<Star3Report> {
    let inv = &analysis.invariants;
    let p = inv.smallest_prime.ok_or(Error::TrivialGroup)?;
    let sylow_bound = inv
        .sylow
        .iter()
        .fold(BigUint::one(), |acc, s| acc * pow(s.prime, s.d - 1));
    let lhs = pow(p, 2) * &sylow_bound;
    let rhs = pow(p, inv.d);
    Ok(Star3Report {
        holds: lhs >= rhs,
        equality: lhs == rhs,
        e_dominates_sylow_bound: inv.ratio_e >= sylow_bound,
        lhs,
        rhs,
        sylow_bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlReport {
    pub holds: bool,
    pub d: usize,
    pub max_sylow_d: usize,
}

/// `d(G) <= 1 + max_p d(P_p)`.
pub fn check_gl_bound(analysis: &Analysis) -> Result<GlReport> {
    let inv = &analysis.invariants;
    if inv.smallest_prime.is_none() {
        return Err(Error::TrivialGroup);
    }
    let max_sylow_d = inv.sylow.iter().map(|s| s.d).max().unwrap_or(0);
    Ok(GlReport {
        holds: inv.d <= 1 + max_sylow_d,
        d: inv.d,
        max_sylow_d,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionReport {
    pub holds: bool,
    /// `E` is even, so there is nothing to check.
    pub vacuous: bool,
    pub solvable: bool,
    /// Order of the generator of the cyclic Sylow 2-subgroup.
    pub sylow2_generator_order: Option<u64>,
    /// Parity of that generator in the regular representation, from
    /// `(m - 1) * |G| / m` with `m` its order.
    pub regular_image_odd: Option<bool>,
    /// The same parity read off an explicitly built regular representation.
    pub regular_image_odd_explicit: Option<bool>,
    /// Index of the even part of the regular representation.
    pub parity_kernel_index: Option<u64>,
}

/// Parity of `g` acting on `G` by right multiplication. Every cycle has
/// length `m = ord(g)` and there are `|G|/m` of them.
pub fn regular_parity_is_odd(element_order: u64, group_order: u64) -> bool {
    ((element_order - 1) * (group_order / element_order)) % 2 == 1
}

/// Odd `E(G)` forces solvability. When `|G|` is even the Sylow 2-subgroup
/// is then cyclic; its generator acts as an odd permutation in the regular
/// representation, so the even part of that representation has index 2.
pub fn check_proposition(analysis: &Analysis, caps: &Caps) -> Result<PropositionReport> {
    let inv = &analysis.invariants;
    let solvable = inv.flags.solvable;
    if inv.ratio_e.is_even() {
        return Ok(PropositionReport {
            holds: true,
            vacuous: true,
            solvable,
            sylow2_generator_order: None,
            regular_image_odd: None,
            regular_image_odd_explicit: None,
            parity_kernel_index: None,
        });
    }
    let mut report = PropositionReport {
        holds: solvable,
        vacuous: false,
        solvable,
        sylow2_generator_order: None,
        regular_image_odd: None,
        regular_image_odd_explicit: None,
        parity_kernel_index: None,
    };
    let Some(sylow2) = analysis.sylows.get(&2) else {
        return Ok(report);
    };
    let group = &analysis.group;
    let n = group.enumerable_order(caps)?;
    let p_order = sylow2.order().to_u64().expect("enumerable");
    let x = sylow2
        .elements(caps)?
        .into_iter()
        .find(|g| g.order() == p_order);
    let Some(x) = x else {
        // Odd E(G) with a noncyclic Sylow 2-subgroup contradicts E = prod E(P).
        report.holds = false;
        return Ok(report);
    };
    let m = x.order();
    let odd = regular_parity_is_odd(m, n);
    report.sylow2_generator_order = Some(m);
    report.regular_image_odd = Some(odd);

    let elements = group.elements(caps)?;
    if n <= REGULAR_CROSSCHECK_LIMIT {
        let image = regular_image(&elements, &x);
        report.regular_image_odd_explicit = Some(image.is_odd());
    }
    let even = elements
        .iter()
        .filter(|g| !regular_parity_is_odd(g.order(), n))
        .count() as u64;
    report.parity_kernel_index = Some(n / even);
    report.holds = solvable
        && odd
        && report.regular_image_odd_explicit.is_none_or(|e| e == odd)
        && even * 2 == n;
    Ok(report)
}

/// Right multiplication by `g` on a listed group, as a permutation of the
/// list positions.
pub fn regular_image(elements: &[Permutation], g: &Permutation) -> Permutation {
    let index: HashMap<&Permutation, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e, i as u32))
        .collect();
    let images = elements.iter().map(|e| index[&e.then(g)]).collect();
    Permutation::from_images(images).expect("right multiplication is a bijection")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DMaximalReport {
    pub d_maximal: bool,
    pub d: usize,
    pub maximal_subgroups: usize,
    /// Largest `d(M)` over maximal subgroups `M`.
    pub max_d_of_maximal: Option<usize>,
    /// `d(G) > d(M)` for every maximal `M`; weaker than `d_maximal`.
    pub exceeds_maximal: bool,
}

/// A group is d-maximal when every proper subgroup needs fewer generators.
/// Every proper subgroup lies in a maximal one, but `d` is not monotone, so
/// the check runs over the whole lattice and reports the maximal subgroups
/// separately.
pub fn is_d_maximal(group: &PermGroup, caps: &Caps) -> Result<DMaximalReport> {
    let order = group.order();
    if order > caps.lattice.into() {
        return Err(Error::LatticeCap {
            order,
            cap: caps.lattice,
        });
    }
    let table = ElementTable::build(group, caps)?;
    let all = lattice::table_lattice(&table);
    let d = invariants::min_generators(group, caps)?;
    let maximal = lattice::table_maximal(&all, table.len());
    let mut max_d_of_maximal = None;
    for m in &maximal {
        let dm = invariants::min_generators(&table.to_group(m), caps)?;
        max_d_of_maximal = max_d_of_maximal.max(Some(dm));
    }
    let mut d_maximal = true;
    for h in all.iter().filter(|h| h.order() < table.len()) {
        if invariants::min_generators(&table.to_group(h), caps)? >= d {
            d_maximal = false;
            break;
        }
    }
    Ok(DMaximalReport {
        d_maximal,
        exceeds_maximal: max_d_of_maximal.is_none_or(|m| m < d),
        d,
        maximal_subgroups: maximal.len(),
        max_d_of_maximal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::analyze;

    fn g(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(degree, gens).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    fn s3() -> PermGroup {
        g(3, &["(1 2)", "(1 2 3)"])
    }

    fn s4() -> PermGroup {
        g(4, &["(1 2)", "(1 2 3 4)"])
    }

    fn c2_cubed() -> PermGroup {
        g(6, &["(1 2)", "(3 4)", "(5 6)"])
    }

    fn psl2_5() -> PermGroup {
        g(6, &["(1 2 3 4 5)", "(1 6)(2 5)"])
    }

    fn q8() -> PermGroup {
        g(8, &["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"])
    }

    fn power_auto_3_2() -> PermGroup {
        g(6, &["(1 2 3)", "(4 5 6)", "(2 3)(5 6)"])
    }

    fn c12() -> PermGroup {
        g(12, &["(1 2 3 4 5 6 7 8 9 10 11 12)"])
    }

    fn a(group: &PermGroup) -> Analysis {
        analyze(group, &caps()).unwrap()
    }

    #[test]
    fn theorem_examples() {
        let v = check_theorem(&s3(), &caps()).unwrap();
        assert!(v.applicable && v.holds && v.equality && v.predicted_equality && v.consistent);
        assert_eq!((v.lhs_scaled, v.rhs_scaled), (Some(big(4)), Some(big(4))));

        let v = check_theorem(&c2_cubed(), &caps()).unwrap();
        assert!(v.holds && !v.equality && v.consistent);
        assert_eq!((v.lhs_scaled, v.rhs_scaled), (Some(big(8)), Some(big(16))));

        let v = check_theorem(&psl2_5(), &caps()).unwrap();
        assert!(v.holds && !v.equality && !v.predicted_equality);
        assert_eq!((v.lhs_scaled, v.rhs_scaled), (Some(big(4)), Some(big(8))));

        let v = check_theorem(&PermGroup::trivial(1), &caps()).unwrap();
        assert!(!v.applicable);
    }

    #[test]
    fn lemma_examples() {
        let r = check_lemma(&a(&q8()), &caps()).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!((r.lhs_scaled.clone(), r.rhs_scaled.clone()), (big(4), big(4)));

        let r = check_lemma(&a(&c2_cubed()), &caps()).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!(r.lhs_scaled, big(8));
        assert_eq!(r.chain.len(), 3);

        let r = check_lemma(&a(&c12()), &caps()).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!(r.chain.len(), 1);

        assert!(matches!(check_lemma(&a(&s4()), &caps()), Err(Error::NotNilpotent)));
    }

    #[test]
    fn multiplicativity_examples() {
        let r = check_multiplicativity(&a(&s4())).unwrap();
        assert!(r.holds);
        assert_eq!(r.ratio_e, big(2));
        assert_eq!(r.factors, vec![(2, "2".into()), (3, "1".into())]);
        let r = check_multiplicativity(&a(&psl2_5())).unwrap();
        assert!(r.holds);
        assert_eq!(r.factors, vec![(2, "2".into()), (3, "1".into()), (5, "1".into())]);
        assert!(check_multiplicativity(&a(&q8())).unwrap().holds);
    }

    #[test]
    fn section_samples() {
        let r = check_section_divisibility(&a(&s4()), 20, 7, &caps()).unwrap();
        assert!(r.holds());
        assert!(r.samples.len() >= 20);
        let first = &r.samples[0];
        assert_eq!((first.subgroup.as_str(), first.normal.as_str()), ("G", "1"));
        assert_eq!(first.quotient_e, "2");
        // S4 / A4 has E = 1, S4 / V4 = S3 has E = 1.
        assert!(r.samples.iter().all(|s| s.divides));
        let again = check_section_divisibility(&a(&s4()), 20, 7, &caps()).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn s4_mod_klein_and_d8_mod_center() {
        let klein = g(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let q = quotient::quotient(&s4(), &klein, &caps()).unwrap();
        assert_eq!(invariants::ratio_e(&q, &caps()).unwrap(), big(1));
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let center = g(4, &["(1 3)(2 4)"]);
        let q = quotient::quotient(&d8, &center, &caps()).unwrap();
        assert_eq!(q.order(), big(4));
        assert_eq!(invariants::ratio_e(&q, &caps()).unwrap(), big(2));
    }

    #[test]
    fn star3_examples() {
        let r = check_star3(&a(&s3())).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(4), big(4)));
        let r = check_star3(&a(&power_auto_3_2())).unwrap();
        assert!(r.holds);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(12), big(8)));
        let r = check_star3(&a(&c12())).unwrap();
        assert!(r.holds);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(4), big(2)));
    }

    #[test]
    fn gl_examples() {
        let r = check_gl_bound(&a(&power_auto_3_2())).unwrap();
        assert_eq!((r.holds, r.d, r.max_sylow_d), (true, 3, 2));
        let r = check_gl_bound(&a(&s4())).unwrap();
        assert_eq!((r.holds, r.d, r.max_sylow_d), (true, 2, 2));
        let r = check_gl_bound(&a(&c12())).unwrap();
        assert_eq!((r.holds, r.d, r.max_sylow_d), (true, 1, 1));
    }

    #[test]
    fn proposition_examples() {
        let r = check_proposition(&a(&g(2, &["(1 2)"])), &caps()).unwrap();
        assert!(r.holds && !r.vacuous);
        assert_eq!(r.regular_image_odd, Some(true));
        assert_eq!(r.regular_image_odd_explicit, Some(true));

        let r = check_proposition(&a(&s3()), &caps()).unwrap();
        assert!(r.holds && !r.vacuous);
        assert_eq!(r.sylow2_generator_order, Some(2));
        assert_eq!(r.regular_image_odd_explicit, Some(true));
        assert_eq!(r.parity_kernel_index, Some(2));

        let a5 = g(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let r = check_proposition(&a(&a5), &caps()).unwrap();
        assert!(r.holds && r.vacuous);
    }

    #[test]
    fn parity_formula() {
        assert!(regular_parity_is_odd(2, 2));
        assert!(regular_parity_is_odd(2, 6));
        assert!(!regular_parity_is_odd(2, 4));
        assert!(!regular_parity_is_odd(3, 6));
        assert!(regular_parity_is_odd(4, 12));
    }

    #[test]
    fn d_maximal_examples() {
        assert!(is_d_maximal(&c2_cubed(), &caps()).unwrap().d_maximal);
        let r = is_d_maximal(&s4(), &caps()).unwrap();
        assert!(!r.d_maximal);
        assert_eq!(r.d, 2);
        assert!(is_d_maximal(&g(7, &["(1 2 3 4 5 6 7)"]), &caps()).unwrap().d_maximal);
    }
}
