//! Stabilizer chains built by the deterministic Schreier-Sims algorithm.
//!
//! Each level stores its basic orbit as a Schreier tree (one generator label
//! per orbit point) so transversal elements are rebuilt on demand; this keeps
//! memory linear in the degree even for regular actions on thousands of
//! points.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use rand::Rng;

use crate::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
pub struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    inverses: Vec<Permutation>,
    orbit: Vec<usize>,
    labels: Vec<u32>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            generators: Vec::new(),
            inverses: Vec::new(),
            orbit: Vec::new(),
            labels: vec![NOT_IN_ORBIT; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn add_generator(&mut self, g: Permutation) {
        self.inverses.push(g.inverse());
        self.generators.push(g);
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        self.labels.iter_mut().for_each(|l| *l = NOT_IN_ORBIT);
        self.orbit.clear();
        self.labels[self.base_point] = ROOT;
        self.orbit.push(self.base_point);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for (k, s) in self.generators.iter().enumerate() {
                let y = s.image(x);
                if self.labels[y] == NOT_IN_ORBIT {
                    self.labels[y] = k as u32;
                    self.orbit.push(y);
                }
            }
        }
    }

    /// 0-based base point of this level.
    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Basic orbit in breadth-first order.
    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }

    pub fn in_orbit(&self, point: usize) -> bool {
        self.labels[point] != NOT_IN_ORBIT
    }

    /// Transversal element mapping the base point to `point`.
    pub fn transversal(&self, point: usize) -> Option<Permutation> {
        if !self.in_orbit(point) {
            return None;
        }
        let mut path = Vec::new();
        let mut x = point;
        while self.labels[x] != ROOT {
            let k = self.labels[x] as usize;
            path.push(k);
            x = self.inverses[k].image(x);
        }
        let mut u = Permutation::identity(self.labels.len());
        for &k in path.iter().rev() {
            u = u.then(&self.generators[k]);
        }
        Some(u)
    }

    /// `g * u^-1` where `u` is the transversal element for `g(base)`.
    fn strip(&self, g: &Permutation) -> Option<Permutation> {
        let mut x = g.image(self.base_point);
        if !self.in_orbit(x) {
            return None;
        }
        let mut h = g.clone();
        while self.labels[x] != ROOT {
            let k = self.labels[x] as usize;
            h = h.then(&self.inverses[k]);
            x = self.inverses[k].image(x);
        }
        Some(h)
    }

    /// `u * g` for the transversal element `u` reaching `point`.
    pub(crate) fn left_multiply_transversal(&self, point: usize, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        let mut x = point;
        while self.labels[x] != ROOT {
            let k = self.labels[x] as usize;
            h = self.generators[k].then(&h);
            x = self.inverses[k].image(x);
        }
        h
    }

    fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.labels.len()];
        for &x in &self.orbit[1..] {
            let k = self.labels[x] as usize;
            children[self.inverses[k].image(x)].push(x);
        }
        children
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Runs Schreier-Sims on `generators`. Base points are chosen as the
    /// smallest point moved by the generator (or residue) that forces a new
    /// level, so the chain is a deterministic function of the input order.
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<&Permutation> = generators.iter().filter(|g| !g.is_identity()).collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.image(l.base_point) == l.base_point) {
                let b = g.first_moved_point().expect("nontrivial");
                chain.levels.push(Level::new(b, degree));
            }
        }
        let bases: Vec<usize> = chain.levels.iter().map(|l| l.base_point).collect();
        for g in &gens {
            for (i, level) in chain.levels.iter_mut().enumerate() {
                if bases[..i].iter().all(|&b| g.image(b) == b) {
                    level.inverses.push(g.inverse());
                    level.generators.push((*g).clone());
                }
            }
        }
        for level in chain.levels.iter_mut() {
            level.rebuild_orbit();
        }

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            match chain.find_missing_generator(i as usize) {
                Some((h, j)) => {
                    if j == chain.levels.len() {
                        let b = h.first_moved_point().expect("nontrivial residue");
                        chain.levels.push(Level::new(b, degree));
                    }
                    for level in &mut chain.levels[i as usize + 1..=j] {
                        level.add_generator(h.clone());
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        chain
    }

    /// Finds a Schreier generator at `level` that does not sift through the
    /// levels below it. Returns the residue and the level where sifting stopped.
    fn find_missing_generator(&self, level: usize) -> Option<(Permutation, usize)> {
        let l = &self.levels[level];
        for &x in &l.orbit {
            let u = l.transversal(x).expect("orbit point");
            for (k, s) in l.generators.iter().enumerate() {
                let y = s.image(x);
                if l.labels[y] == k as u32 && l.inverses[k].image(y) == x {
                    // tree edge: the Schreier generator is trivial
                    continue;
                }
                let schreier = l.strip(&u.then(s)).expect("orbit is closed");
                let (h, j) = self.sift_from(schreier, level + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            match level.strip(&g) {
                Some(h) => g = h,
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    /// Sifts `g` through every level, returning the residue and the index of
    /// the level where it dropped out (`levels().len()` when it passed all).
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(g.clone(), 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift(g);
        j == self.levels.len() && h.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// 0-based base points.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Level::orbit_len).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit_len()))
    }

    /// Uniformly distributed element, built as a product of random
    /// transversal elements.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let x = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.then(&level.transversal(x).expect("orbit point"));
        }
        g
    }

    /// Visits every group element exactly once. Products are formed by walking
    /// the Schreier trees, one composition per visited element.
    pub fn try_for_each_element<B>(
        &self,
        mut f: impl FnMut(&Permutation) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let children: Vec<Vec<Vec<usize>>> = self.levels.iter().map(Level::children).collect();
        self.visit(
            self.levels.len(),
            &Permutation::identity(self.degree),
            &children,
            &mut f,
        )
    }

    fn visit<B>(
        &self,
        depth: usize,
        prefix: &Permutation,
        children: &[Vec<Vec<usize>>],
        f: &mut impl FnMut(&Permutation) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if depth == 0 {
            return f(prefix);
        }
        let level = &self.levels[depth - 1];
        let mut stack = vec![(level.base_point, prefix.clone())];
        while let Some((x, product)) = stack.pop() {
            self.visit(depth - 1, &product, children, f)?;
            for &y in &children[depth - 1][x] {
                let k = level.labels[y] as usize;
                stack.push((y, product.then(&level.generators[k])));
            }
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perms(texts: &[&str], n: usize) -> Vec<Permutation> {
        texts
            .iter()
            .map(|t| Permutation::parse_cycles(t, n).unwrap())
            .collect()
    }

    fn closure_size(gens: &[Permutation], n: usize) -> usize {
        let mut seen = HashSet::new();
        let mut queue = vec![Permutation::identity(n)];
        seen.insert(Permutation::identity(n));
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn s4_order() {
        let gens = perms(&["(1 2)", "(1 2 3 4)"], 4);
        let chain = StabilizerChain::build(4, &gens);
        assert_eq!(chain.order(), BigUint::from(24u32));
        assert_eq!(closure_size(&gens, 4), 24);
        assert_eq!(chain.base()[0], 0);
    }

    #[test]
    fn empty_generators_give_trivial_chain() {
        let chain = StabilizerChain::build(5, &[]);
        assert!(chain.levels().is_empty());
        assert_eq!(chain.order(), BigUint::from(1u32));
        let mut count = 0;
        let _ = chain.try_for_each_element(|g| {
            assert!(g.is_identity());
            count += 1;
            ControlFlow::<()>::Continue(())
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn cyclic_five_has_one_level() {
        let chain = StabilizerChain::build(5, &perms(&["(1 2 3 4 5)"], 5));
        assert_eq!(chain.orbit_sizes(), vec![5]);
    }

    #[test]
    fn generators_sift_to_identity() {
        let gens = perms(&["(1 2 3 4 5 6 7)", "(1 2)(3 6)", "(2 5 7)"], 7);
        let chain = StabilizerChain::build(7, &gens);
        for g in &gens {
            assert!(chain.contains(g));
        }
        assert_eq!(chain.order(), BigUint::from(closure_size(&gens, 7)));
    }

    #[test]
    fn enumeration_visits_each_element_once() {
        let gens = perms(&["(1 2 3)(4 5)", "(2 6)(1 3)"], 6);
        let chain = StabilizerChain::build(6, &gens);
        let mut seen = HashSet::new();
        let _ = chain.try_for_each_element(|g| {
            assert!(seen.insert(g.clone()));
            ControlFlow::<()>::Continue(())
        });
        assert_eq!(BigUint::from(seen.len()), chain.order());
        assert_eq!(seen.len(), closure_size(&gens, 6));
        for g in &seen {
            assert!(chain.contains(g));
        }
    }

    #[test]
    fn transversal_maps_base_point() {
        let gens = perms(&["(1 2)", "(1 2 3 4 5)"], 5);
        let chain = StabilizerChain::build(5, &gens);
        for level in chain.levels() {
            for &x in level.orbit() {
                let u = level.transversal(x).unwrap();
                assert_eq!(u.image(level.base_point()), x);
                assert_eq!(level.left_multiply_transversal(x, &gens[0]), u.then(&gens[0]));
            }
        }
    }
}
