//! Permutations of `{1, ..., n}` stored as image tables.
//!
//! Points are 1-based in every textual form (cycle notation, reports) and
//! 0-based in memory. Products apply the left factor first:
//! `compose(p, q)` maps `i` to `q(p(i))`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotBijection(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images, as written in documentation.
    pub fn from_images_one_based(images: &[u32]) -> Result<Self> {
        let zero_based = images
            .iter()
            .map(|&x| x.checked_sub(1).ok_or(Error::NotBijection(images.len())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(zero_based)
    }

    /// Builds a permutation of `degree` points from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::PointOutOfRange {
                        point: a as u64 + 1,
                        degree,
                    });
                }
                if used[a] {
                    return Err(Error::DuplicatePoint(a + 1));
                }
                used[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// 0-based image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Smallest 0-based point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .position(|(i, &x)| i as u32 != x)
    }

    /// The product "apply `self`, then `other`".
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked version of [`Permutation::compose`] for callers that already
    /// know the degrees agree.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .then(&other.inverse())
            .then(self)
            .then(other)
    }

    /// Disjoint cycles (0-based), including fixed points as 1-cycles,
    /// each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// Least `m >= 1` with `self^m = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image(x);
            }
            order = order.lcm(&len);
        }
        order
    }

    /// True when the permutation is odd.
    pub fn is_odd(&self) -> bool {
        let cycles = self.cycle_lengths().len();
        (self.degree() - cycles) % 2 == 1
    }

    /// Parses the cycle grammar `"()" | cycle+` with `cycle := "(" int (" " int)* ")"`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let malformed = |pos: usize, reason: &'static str| Error::MalformedCycles {
            text: text.to_owned(),
            pos,
            reason,
        };
        if text == "()" {
            return Ok(Permutation::identity(degree));
        }
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(malformed(0, "empty input"));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(malformed(pos, "expected '('"));
            }
            pos += 1;
            let mut cycle = Vec::new();
            loop {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(malformed(pos, "expected a point"));
                }
                let point: u64 = text[start..pos]
                    .parse()
                    .map_err(|_| malformed(start, "point does not fit in 64 bits"))?;
                if point == 0 || point > degree as u64 {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                cycle.push(point as usize - 1);
                match bytes.get(pos) {
                    Some(b' ') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    Some(_) => return Err(malformed(pos, "expected ' ' or ')'")),
                    None => return Err(malformed(pos, "unterminated cycle")),
                }
            }
            cycles.push(cycle);
        }
        Permutation::from_cycles(degree, &cycles)
    }

    /// Cycle notation with fixed points omitted; the identity is `"()"`.
    pub fn format_cycles(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn compose_identity_left() {
        let q = p("(1 3 5)(2 4)", 5);
        assert_eq!(Permutation::identity(5).compose(&q).unwrap(), q);
    }

    #[test]
    fn transposition_is_involution() {
        let t = p("(1 2)", 2);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_applies_left_first() {
        // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        let got = p("(1 2 3)", 3).compose(&p("(1 2)", 3)).unwrap();
        assert_eq!(got, p("(2 3)", 3));
        assert_eq!(got.images(), &[0, 2, 1]);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = p("(1 2)", 2).compose(&p("(1 2)", 3)).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn element_orders() {
        assert_eq!(Permutation::identity(7).order(), 1);
        assert_eq!(p("(1 2 3)(4 5)", 5).order(), 6);
        assert_eq!(p("(1 2 3 4)(5 6 7)(8 9)", 9).order(), 12);
    }

    #[test]
    fn order_matches_repeated_composition() {
        let g = p("(1 2 3 4)(5 6 7)(8 9)", 9);
        let mut x = g.clone();
        let mut m = 1;
        while !x.is_identity() {
            x = x.then(&g);
            m += 1;
        }
        assert_eq!(m, g.order());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("()", 4), Permutation::identity(4));
        assert_eq!(
            p("(1 2 3)(4 5)", 5),
            Permutation::from_images_one_based(&[2, 3, 1, 5, 4]).unwrap()
        );
        assert!(matches!(
            Permutation::parse_cycles("(1 2)(1 3)", 3),
            Err(Error::DuplicatePoint(1))
        ));
    }

    #[test]
    fn parse_rejects_grammar_violations() {
        for bad in ["", "(", "(1 2", "(1  2)", "( 1 2)", "(1 2) (3 4)", "(1,2)", "(-1 2)", "(1 2)()", "1 2"] {
            assert!(
                matches!(
                    Permutation::parse_cycles(bad, 5),
                    Err(Error::MalformedCycles { .. })
                ),
                "{bad:?} accepted"
            );
        }
        assert!(matches!(
            Permutation::parse_cycles("(1 4)", 3),
            Err(Error::PointOutOfRange { point: 4, degree: 3 })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(0 1)", 3),
            Err(Error::PointOutOfRange { point: 0, .. })
        ));
    }

    #[test]
    fn one_cycles_are_fixed_points() {
        assert_eq!(p("(3)", 4), Permutation::identity(4));
        assert_eq!(p("(2)(1 3)", 4).to_string(), "(1 3)");
    }

    #[test]
    fn format_sorts_by_smallest_point() {
        assert_eq!(p("(5 4)(3 1 2)", 6).to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn parity() {
        assert!(p("(1 2)", 3).is_odd());
        assert!(!p("(1 2 3)", 3).is_odd());
        assert!(p("(1 2 3 4)", 4).is_odd());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..=50).prop_flat_map(|n| {
            Just((0..n as u32).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn format_parse_round_trip(g in arb_perm()) {
            let text = g.format_cycles();
            prop_assert_eq!(Permutation::parse_cycles(&text, g.degree()).unwrap(), g);
        }

        #[test]
        fn inverse_cancels(g in arb_perm()) {
            prop_assert!(g.then(&g.inverse()).is_identity());
            prop_assert!(g.inverse().then(&g).is_identity());
        }

        #[test]
        fn pow_by_order_is_identity(g in arb_perm()) {
            prop_assert!(g.pow(g.order()).is_identity());
        }
    }
}
