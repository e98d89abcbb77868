//! Permutation realizations of standard group families.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{big, PermGroup};
use crate::perm::Permutation;

/// Right regular representation of `Q8` on the labels
/// `1, -1, i, -i, j, -j, k, -k` (points 1 to 8): right multiplication by `i`
/// and by `j`, as one-based image tables.
pub const QUATERNION_I: [u32; 8] = [3, 4, 2, 1, 8, 7, 5, 6];
pub const QUATERNION_J: [u32; 8] = [5, 6, 7, 8, 2, 1, 4, 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(usize),
    ElementaryAbelian { p: usize, k: usize },
    /// Dihedral group of order `2n` acting on an `n`-gon.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    /// `PSL_2(p)` on the projective line; infinity is point `p + 1`.
    Psl2(usize),
    /// `(C_q)^n` extended by the involution inverting every element.
    PowerAuto { q: usize, n: usize },
    DirectProduct(Vec<FamilySpec>),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn cycle(points: impl IntoIterator<Item = usize>) -> Vec<usize> {
    points.into_iter().collect()
}

impl FamilySpec {
    /// Builds a family from its name and integer parameters. Direct products
    /// are assembled with [`FamilySpec::DirectProduct`] or parsed by
    /// [`FamilySpec::parse`].
    pub fn from_params(family: &str, params: &[usize]) -> Result<FamilySpec> {
        let want = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(invalid(format!(
                    "{family} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match family {
            "cyclic" => {
                want(1)?;
                FamilySpec::Cyclic(params[0])
            }
            "elementary_abelian" => {
                want(2)?;
                FamilySpec::ElementaryAbelian {
                    p: params[0],
                    k: params[1],
                }
            }
            "dihedral" => {
                want(1)?;
                FamilySpec::Dihedral(params[0])
            }
            "symmetric" => {
                want(1)?;
                FamilySpec::Symmetric(params[0])
            }
            "alternating" => {
                want(1)?;
                FamilySpec::Alternating(params[0])
            }
            "quaternion8" => {
                want(0)?;
                FamilySpec::Quaternion8
            }
            "psl2" => {
                want(1)?;
                FamilySpec::Psl2(params[0])
            }
            "power_auto" => {
                want(2)?;
                FamilySpec::PowerAuto {
                    q: params[0],
                    n: params[1],
                }
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Parses `family` or `family:a,b`, e.g. `psl2:7` or `quaternion8`.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let (family, params) = match text.split_once(':') {
            Some((f, p)) => (f, p),
            None => (text, ""),
        };
        let params = params
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| invalid(format!("bad parameter {s:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::from_params(family, &params)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Cyclic(n) | FamilySpec::Symmetric(n) | FamilySpec::Alternating(n) if n < 1 => {
                Err(invalid("n must be at least 1"))
            }
            FamilySpec::ElementaryAbelian { p, k } => {
                if !is_prime(p as u64) {
                    Err(invalid(format!("{p} is not prime")))
                } else if k < 1 {
                    Err(invalid("k must be at least 1"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Dihedral(n) if n < 3 => Err(invalid("dihedral needs n >= 3")),
            FamilySpec::Psl2(p) if p == 2 || !is_prime(p as u64) => {
                Err(invalid(format!("psl2 needs an odd prime, got {p}")))
            }
            FamilySpec::PowerAuto { q, n } => {
                if q == 2 || !is_prime(q as u64) {
                    Err(invalid(format!("power_auto needs an odd prime q, got {q}")))
                } else if n < 1 {
                    Err(invalid("power_auto needs n >= 1"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::DirectProduct(ref factors) => {
                if factors.is_empty() {
                    return Err(invalid("direct product of no factors"));
                }
                factors.iter().try_for_each(FamilySpec::validate)
            }
            _ => Ok(()),
        }
    }

    pub fn degree(&self) -> usize {
        match *self {
            FamilySpec::Cyclic(n)
            | FamilySpec::Dihedral(n)
            | FamilySpec::Symmetric(n)
            | FamilySpec::Alternating(n) => n,
            FamilySpec::ElementaryAbelian { p, k } => p * k,
            FamilySpec::Quaternion8 => 8,
            FamilySpec::Psl2(p) => p + 1,
            FamilySpec::PowerAuto { q, n } => q * n,
            FamilySpec::DirectProduct(ref f) => f.iter().map(FamilySpec::degree).sum(),
        }
    }

    /// Order predicted by the family's formula.
    pub fn expected_order(&self) -> BigUint {
        let factorial = |n: usize| (1..=n as u64).fold(BigUint::one(), |a, k| a * k);
        match *self {
            FamilySpec::Cyclic(n) => big(n as u64),
            FamilySpec::ElementaryAbelian { p, k } => big(p as u64).pow(k as u32),
            FamilySpec::Dihedral(n) => big(2 * n as u64),
            FamilySpec::Symmetric(n) => factorial(n),
            FamilySpec::Alternating(n) if n < 2 => BigUint::one(),
            FamilySpec::Alternating(n) => factorial(n) / 2u32,
            FamilySpec::Quaternion8 => big(8),
            FamilySpec::Psl2(p) => {
                let p = p as u64;
                big(p * (p * p - 1) / 2)
            }
            FamilySpec::PowerAuto { q, n } => big(q as u64).pow(n as u32) * 2u32,
            FamilySpec::DirectProduct(ref f) => f.iter().map(FamilySpec::expected_order).product(),
        }
    }

    fn generators(&self) -> Result<Vec<Permutation>> {
        let degree = self.degree();
        let from = |cycles: Vec<Vec<usize>>| Permutation::from_cycles(degree, &cycles);
        let gens = match *self {
            FamilySpec::Cyclic(1) => Vec::new(),
            FamilySpec::Cyclic(n) => vec![from(vec![cycle(0..n)])?],
            FamilySpec::ElementaryAbelian { p, k } => (0..k)
                .map(|b| from(vec![cycle(b * p..(b + 1) * p)]))
                .collect::<Result<_>>()?,
            FamilySpec::Dihedral(n) => {
                // Reflection fixing point 1: i -> -i mod n.
                let reflection = (1..n).filter(|&i| i < n - i).map(|i| vec![i, n - i]).collect();
                vec![from(vec![cycle(0..n)])?, from(reflection)?]
            }
            FamilySpec::Symmetric(1) => Vec::new(),
            FamilySpec::Symmetric(2) => vec![from(vec![vec![0, 1]])?],
            FamilySpec::Symmetric(n) => vec![from(vec![vec![0, 1]])?, from(vec![cycle(0..n)])?],
            FamilySpec::Alternating(n) if n < 3 => Vec::new(),
            FamilySpec::Alternating(3) => vec![from(vec![vec![0, 1, 2]])?],
            FamilySpec::Alternating(n) => {
                let long = if n % 2 == 1 { cycle(0..n) } else { cycle(1..n) };
                vec![from(vec![vec![0, 1, 2]])?, from(vec![long])?]
            }
            FamilySpec::Quaternion8 => vec![
                Permutation::from_images_one_based(&QUATERNION_I)?,
                Permutation::from_images_one_based(&QUATERNION_J)?,
            ],
            FamilySpec::Psl2(p) => {
                // Residue x is point x; infinity is point p.
                let inf = p;
                let inverse = |x: usize| (1..p).find(|y| x * y % p == 1).expect("p is prime");
                let shift = (0..p).map(|x| ((x + 1) % p) as u32).chain([inf as u32]);
                let invert = (0..=p).map(|x| {
                    (if x == 0 {
                        inf
                    } else if x == inf {
                        0
                    } else {
                        (p - inverse(x)) % p
                    }) as u32
                });
                vec![
                    Permutation::from_images(shift.collect())?,
                    Permutation::from_images(invert.collect())?,
                ]
            }
            FamilySpec::PowerAuto { q, n } => {
                let mut gens: Vec<Permutation> = (0..n)
                    .map(|b| from(vec![cycle(b * q..(b + 1) * q)]))
                    .collect::<Result<_>>()?;
                let inversion = (0..n)
                    .flat_map(|b| {
                        (1..q)
                            .filter(move |&i| i < q - i)
                            .map(move |i| vec![b * q + i, b * q + q - i])
                    })
                    .collect();
                gens.push(from(inversion)?);
                gens
            }
            FamilySpec::DirectProduct(ref factors) => {
                let mut gens = Vec::new();
                let mut offset = 0;
                for f in factors {
                    let fd = f.degree();
                    for g in f.generators()? {
                        let mut images: Vec<u32> = (0..degree as u32).collect();
                        for i in 0..fd {
                            images[offset + i] = (offset + g.image(i)) as u32;
                        }
                        gens.push(Permutation::from_images(images)?);
                    }
                    offset += fd;
                }
                gens
            }
        };
        Ok(gens)
    }

    /// The group, with its order checked against [`expected_order`] and
    /// family relations asserted where the construction relies on them.
    ///
    /// [`expected_order`]: FamilySpec::expected_order
    pub fn build(&self) -> Result<PermGroup> {
        self.validate()?;
        let group = PermGroup::new(self.degree(), self.generators()?)?;
        if let FamilySpec::PowerAuto { n, .. } = *self {
            let t = &group.generators()[n];
            for a in &group.generators()[..n] {
                if a.conjugate_by(t) != a.inverse() {
                    return Err(Error::Internal(format!("{self}: t does not invert {a}")));
                }
            }
        }
        let expected = self.expected_order();
        if group.order() != expected {
            return Err(Error::Internal(format!(
                "{self} has order {}, expected {expected}",
                group.order()
            )));
        }
        Ok(group)
    }

    /// Short conventional name, e.g. `C5xS3`, `PSL2(7)`, `D10` (order 10).
    pub fn name(&self) -> String {
        match *self {
            FamilySpec::Cyclic(n) => format!("C{n}"),
            FamilySpec::ElementaryAbelian { p, k } => format!("C{p}^{k}"),
            FamilySpec::Dihedral(n) => format!("D{}", 2 * n),
            FamilySpec::Symmetric(n) => format!("S{n}"),
            FamilySpec::Alternating(n) => format!("A{n}"),
            FamilySpec::Quaternion8 => "Q8".into(),
            FamilySpec::Psl2(p) => format!("PSL2({p})"),
            FamilySpec::PowerAuto { q, n } => format!("C{q}^{n}:C2"),
            FamilySpec::DirectProduct(ref f) => {
                f.iter().map(FamilySpec::name).collect::<Vec<_>>().join("x")
            }
        }
    }
}

/// The `family:params` form accepted by [`FamilySpec::parse`]; direct
/// products list their factors joined by ` x `.
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            FamilySpec::ElementaryAbelian { p, k } => write!(f, "elementary_abelian:{p},{k}"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            FamilySpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            FamilySpec::Alternating(n) => write!(f, "alternating:{n}"),
            FamilySpec::Quaternion8 => write!(f, "quaternion8"),
            FamilySpec::Psl2(p) => write!(f, "psl2:{p}"),
            FamilySpec::PowerAuto { q, n } => write!(f, "power_auto:{q},{n}"),
            FamilySpec::DirectProduct(ref factors) => {
                let parts: Vec<String> = factors.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

/// Expected values attached to a corpus entry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expectations {
    pub order: Option<BigUint>,
    pub exponent: Option<BigUint>,
    pub ratio_e: Option<BigUint>,
    pub d: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: FamilySpec,
    pub expect: Expectations,
}

fn entry(spec: FamilySpec) -> CorpusEntry {
    let mut expect = Expectations {
        order: Some(spec.expected_order()),
        ..Expectations::default()
    };
    match spec {
        FamilySpec::Psl2(_) => {
            expect.ratio_e = Some(big(2));
            expect.d = Some(2);
        }
        FamilySpec::PowerAuto { q, n } => {
            expect.exponent = Some(big(2 * q as u64));
            expect.ratio_e = Some(big(q as u64).pow(n as u32 - 1));
            expect.d = Some(n + 1);
        }
        FamilySpec::Cyclic(n) => {
            expect.exponent = Some(big(n as u64));
            expect.d = Some(usize::from(n > 1));
        }
        FamilySpec::ElementaryAbelian { p, k } => {
            expect.exponent = Some(big(p as u64));
            expect.d = Some(k);
        }
        _ => {}
    }
    CorpusEntry {
        name: spec.name(),
        spec,
        expect,
    }
}

/// The bundled verification corpus, in catalog order.
pub fn corpus() -> Vec<CorpusEntry> {
    use FamilySpec::*;
    let mut specs = Vec::new();
    specs.extend((1..=30).map(Cyclic));
    for (p, max_k) in [(2, 6), (3, 3), (5, 2), (7, 2)] {
        specs.extend((2..=max_k).map(|k| ElementaryAbelian { p, k }));
    }
    specs.extend((3..=20).map(Dihedral));
    specs.extend((3..=8).map(Symmetric));
    specs.extend((4..=6).map(Alternating));
    specs.push(Quaternion8);
    specs.extend([5, 7, 11, 13].map(Psl2));
    specs.extend((1..=5).map(|n| PowerAuto { q: 3, n }));
    specs.extend((1..=3).map(|n| PowerAuto { q: 5, n }));

    let c = Cyclic;
    let products: Vec<Vec<FamilySpec>> = vec![
        vec![c(2), c(4)],
        vec![c(2), c(6)],
        vec![c(2), c(8)],
        vec![c(4), c(4)],
        vec![c(3), c(6)],
        vec![c(3), c(9)],
        vec![c(4), c(6)],
        vec![c(6), c(6)],
        vec![c(2), c(10)],
        vec![c(2), c(2), c(4)],
        vec![c(2), c(4), c(4)],
        vec![Symmetric(3), c(2)],
        vec![Symmetric(3), c(3)],
        vec![Symmetric(3), c(4)],
        vec![Symmetric(3), c(5)],
        vec![Symmetric(3), c(7)],
        vec![Dihedral(5), c(3)],
        vec![Dihedral(7), c(3)],
        vec![Dihedral(11), c(3)],
        vec![Dihedral(5), c(4)],
        vec![Symmetric(3), Symmetric(3)],
        vec![Symmetric(3), Symmetric(3), Symmetric(3)],
        vec![Symmetric(3), Dihedral(4)],
        vec![Symmetric(4), c(2)],
        vec![Symmetric(4), c(3)],
        vec![Symmetric(4), Symmetric(3)],
        vec![Alternating(4), c(2)],
        vec![Alternating(4), c(3)],
        vec![Alternating(4), Alternating(4)],
        vec![Quaternion8, c(2)],
        vec![Quaternion8, c(3)],
        vec![Quaternion8, c(4)],
        vec![Quaternion8, Quaternion8],
        vec![Dihedral(4), c(2)],
        vec![Dihedral(4), c(4)],
        vec![Dihedral(4), Dihedral(4)],
        vec![Alternating(5), c(2)],
        vec![Alternating(5), c(3)],
        vec![Alternating(5), Symmetric(3)],
        vec![Symmetric(5), c(2)],
        vec![Psl2(7), c(2)],
        vec![Psl2(7), c(3)],
        vec![Alternating(6), c(2)],
        vec![Psl2(11), c(2)],
        vec![PowerAuto { q: 3, n: 2 }, c(2)],
        vec![PowerAuto { q: 3, n: 3 }, c(5)],
        vec![PowerAuto { q: 5, n: 2 }, c(3)],
        vec![ElementaryAbelian { p: 3, k: 2 }, Symmetric(3)],
    ];
    specs.extend(products.into_iter().map(DirectProduct));
    specs.into_iter().map(entry).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::invariants::{self, invariants_report};
    use std::collections::HashSet;

    #[test]
    fn every_corpus_family_has_its_order() {
        let corpus = corpus();
        assert!(corpus.len() >= 110, "{}", corpus.len());
        let names: HashSet<_> = corpus.iter().map(|e| e.name.clone()).collect();
        assert_eq!(names.len(), corpus.len());
        for e in &corpus {
            let g = e.spec.build().unwrap();
            assert_eq!(Some(g.order()), e.expect.order, "{}", e.name);
        }
    }

    #[test]
    fn quaternion_tables() {
        let q = FamilySpec::Quaternion8.build().unwrap();
        let r = invariants_report(&q, &Caps::default()).unwrap();
        assert_eq!((r.exponent.clone(), r.d), (big(4), 2));
        // i^2 = j^2 = -1, which is point 2.
        let i = &q.generators()[0];
        let j = &q.generators()[1];
        assert_eq!(i.pow(2), j.pow(2));
        assert_eq!(i.pow(2).image(0), 1);
    }

    #[test]
    fn psl2_values() {
        let caps = Caps::default();
        for p in [5, 7, 11, 13] {
            let g = FamilySpec::Psl2(p).build().unwrap();
            let r = invariants_report(&g, &caps).unwrap();
            assert_eq!(r.ratio_e, big(2), "p = {p}");
            assert!(!r.flags.solvable);
        }
        let r = invariants_report(&FamilySpec::Psl2(5).build().unwrap(), &caps).unwrap();
        assert_eq!((r.order_u64(), r.d), (Some(60), 2));
        assert!(FamilySpec::Psl2(3).build().unwrap().order() == big(12));
    }

    #[test]
    fn power_auto_values() {
        let caps = Caps::default();
        for n in 1..=5 {
            let g = FamilySpec::PowerAuto { q: 3, n }.build().unwrap();
            let r = invariants_report(&g, &caps).unwrap();
            assert_eq!(r.d, n + 1, "n = {n}");
            assert_eq!(r.ratio_e, big(3).pow(n as u32 - 1));
            assert_eq!(r.exponent, big(6));
        }
    }

    #[test]
    fn coprime_product_is_cyclic() {
        let g = FamilySpec::DirectProduct(vec![FamilySpec::Cyclic(2), FamilySpec::Cyclic(3)])
            .build()
            .unwrap();
        assert_eq!(g.degree(), 5);
        assert_eq!(invariants::max_element_order(&g, &Caps::default()).unwrap(), big(6));
    }

    #[test]
    fn small_cases_and_parity_of_alternating() {
        for n in 1..=7 {
            let a = FamilySpec::Alternating(n).build().unwrap();
            assert!(a.generators().iter().all(|g| !g.is_odd()));
            FamilySpec::Symmetric(n).build().unwrap();
        }
        assert_eq!(FamilySpec::Cyclic(1).build().unwrap().order(), big(1));
    }

    #[test]
    fn invalid_parameters() {
        for bad in ["psl2:4", "psl2:2", "power_auto:9,2", "power_auto:3,0", "dihedral:2", "cyclic:0",
            "elementary_abelian:6,2", "cyclic", "nonsense:3", "cyclic:x"]
        {
            assert!(
                matches!(FamilySpec::parse(bad), Err(Error::InvalidFamily(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn display_round_trips_through_parse() {
        for e in corpus() {
            if let FamilySpec::DirectProduct(_) = e.spec {
                continue;
            }
            assert_eq!(FamilySpec::parse(&e.spec.to_string()).unwrap(), e.spec);
        }
    }
}
