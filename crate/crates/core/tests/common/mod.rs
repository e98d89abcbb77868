//! Brute-force reference implementations. Nothing here calls the library's
//! group algorithms; permutations are plain image vectors (0-based) and
//! products apply the left factor first.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

pub type Images = Vec<u32>;

pub fn compose(p: &Images, q: &Images) -> Images {
    p.iter().map(|&i| q[i as usize]).collect()
}

pub fn identity(n: usize) -> Images {
    (0..n as u32).collect()
}

/// Every element of the group generated by `gens`, identity first.
pub fn closure(degree: usize, gens: &[Images]) -> Vec<Images> {
    let id = identity(degree);
    let mut seen: HashSet<Images> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

/// Order by repeated multiplication.
pub fn element_order(p: &Images) -> u64 {
    let id = identity(p.len());
    let mut x = p.clone();
    let mut k = 1;
    while x != id {
        x = compose(&x, p);
        k += 1;
    }
    k
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `(exponent, max element order)` of a listed group.
pub fn exponent_and_max(elements: &[Images]) -> (u64, u64) {
    elements.iter().map(element_order).fold((1, 1), |(e, m), o| (lcm(e, o), m.max(o)))
}

/// Parity of a permutation from its cycle count.
pub fn is_odd(p: &Images) -> bool {
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for s in 0..p.len() {
        if !seen[s] {
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x] as usize;
            }
        }
    }
    (p.len() - cycles) % 2 == 1
}

/// Right multiplication by `g` on the listed group, as a permutation of
/// positions.
pub fn regular_image(elements: &[Images], g: &Images) -> Images {
    let index: HashMap<&Images, u32> = elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
    elements.iter().map(|e| index[&compose(e, g)]).collect()
}

/// Minimal number of generators by breadth-first search over subgroups:
/// level `k` holds every subgroup generated by `k` elements, and level
/// `k + 1` adjoins one element to each of them. Elements in one right coset
/// of a subgroup give the same extension, so one per coset is tried.
pub fn min_generators(elements: &[Images]) -> usize {
    let n = elements.len();
    if n == 1 {
        return 0;
    }
    let index: HashMap<&Images, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = index[&compose(&elements[a], &elements[b])] as u32;
        }
    }
    let id = index[&identity(elements[0].len())];

    // (membership, members, generators)
    type Sub = (Vec<bool>, Vec<usize>, Vec<usize>);
    let extend = |h: &Sub, g: usize| -> Sub {
        let (mut set, mut members, mut gens) = (h.0.clone(), h.1.clone(), h.2.clone());
        gens.push(g);
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &s in &gens {
                let y = mul[x * n + s] as usize;
                if !set[y] {
                    set[y] = true;
                    members.push(y);
                }
            }
        }
        (set, members, gens)
    };
    let mut trivial = vec![false; n];
    trivial[id] = true;
    let mut level: Vec<Sub> = vec![(trivial, vec![id], Vec::new())];
    for k in 1.. {
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut next = Vec::new();
        for h in &level {
            let mut done = h.0.clone();
            for g in 0..n {
                if done[g] {
                    continue;
                }
                for &x in &h.1 {
                    done[mul[x * n + g] as usize] = true;
                }
                let sub = extend(h, g);
                if sub.1.len() == n {
                    return k;
                }
                if seen.insert(sub.0.clone()) {
                    next.push(sub);
                }
            }
        }
        level = next;
    }
    unreachable!()
}

/// Largest lcm over all partitions of `n`.
pub fn landau_brute(n: u64) -> u64 {
    fn go(rest: u64, max_part: u64, acc: u64) -> u64 {
        if rest == 0 {
            return acc;
        }
        (1..=max_part.min(rest))
            .map(|k| go(rest - k, k, lcm(acc, k)))
            .max()
            .unwrap()
    }
    go(n, n, 1)
}

pub fn lcm_upto(n: u64) -> u64 {
    (1..=n).fold(1, lcm)
}

/// Images of the library permutation, for feeding the oracles.
pub fn images_of(p: &grpexp::Permutation) -> Images {
    p.images().to_vec()
}

pub fn gens_of(g: &grpexp::PermGroup) -> Vec<Images> {
    g.generators().iter().map(images_of).collect()
}
