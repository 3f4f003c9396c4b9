//! Named graph families.
//!
//! A generator is addressed by a family name and integer parameters, written
//! `family:p1,p2` on the command line (`cycle:9`, `johnson:5,2`, `heawood`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::{colex_masks, SubsetIndexer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `path:n`
    Path,
    /// `cycle:n`, n >= 3
    Cycle,
    /// `complete:n`
    Complete,
    /// `empty:n`
    Empty,
    /// `complete_bipartite:m,n`
    CompleteBipartite,
    /// `johnson:n,k`
    Johnson,
    /// `kneser:n,k`, k-subsets adjacent when disjoint
    Kneser,
    /// Kneser(5,2)
    Petersen,
    /// LCF [5,-5]^7
    Heawood,
    /// Cayley graph of Z4 x Z4 with connection set ±(1,0), ±(0,1), ±(1,1)
    Shrikhande,
    /// `rook:m,n`, the Cartesian product K_m □ K_n
    Rook,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Empty,
        Family::CompleteBipartite,
        Family::Johnson,
        Family::Kneser,
        Family::Petersen,
        Family::Heawood,
        Family::Shrikhande,
        Family::Rook,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Johnson => "johnson",
            Family::Kneser => "kneser",
            Family::Petersen => "petersen",
            Family::Heawood => "heawood",
            Family::Shrikhande => "shrikhande",
            Family::Rook => "rook",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Path | Family::Cycle | Family::Complete | Family::Empty => 1,
            Family::CompleteBipartite | Family::Johnson | Family::Kneser | Family::Rook => 2,
            Family::Petersen | Family::Heawood | Family::Shrikhande => 0,
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let alias = match lower.as_str() {
            "bipartite" | "kmn" => "complete_bipartite",
            "k" => "complete",
            "p" => "path",
            "c" => "cycle",
            other => other,
        };
        Family::ALL
            .into_iter()
            .find(|f| f.name() == alias)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family plus its parameters, parsed from `family:p1,p2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph> {
        generate(self.family, &self.params)
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = match s.split_once(':') {
            Some((name, rest)) => (name, rest.trim()),
            None => (s, ""),
        };
        let family: Family = name.parse()?;
        let params = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| Error::BadParameters {
                        family: family.name().into(),
                        reason: format!("`{p}` is not a non-negative integer"),
                    })
                })
                .collect::<Result<_>>()?
        };
        Ok(GeneratorSpec { family, params })
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(usize::to_string).collect();
            write!(f, ":{}", ps.join(","))?;
        }
        Ok(())
    }
}

fn bad(family: Family, reason: impl Into<String>) -> Error {
    Error::BadParameters {
        family: family.name().into(),
        reason: reason.into(),
    }
}

/// Builds a member of a named family. Vertex counts are capped at 4096.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    if params.len() != family.arity() {
        return Err(bad(
            family,
            format!(
                "expected {} parameter(s), got {}",
                family.arity(),
                params.len()
            ),
        ));
    }
    const MAX_ORDER: usize = 4096;
    let too_big = |n: usize| n > MAX_ORDER;
    let g = match family {
        Family::Path => {
            let n = params[0];
            if too_big(n) {
                return Err(bad(family, "too many vertices"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?
        }
        Family::Cycle => {
            let n = params[0];
            if n < 3 || too_big(n) {
                return Err(bad(family, "need 3 <= n <= 4096"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        Family::Complete | Family::Empty => {
            let n = params[0];
            if too_big(n) {
                return Err(bad(family, "too many vertices"));
            }
            let complete = family == Family::Complete;
            Graph::from_fn(n, |_, _| complete)
        }
        Family::CompleteBipartite => {
            let (m, n) = (params[0], params[1]);
            if too_big(m + n) {
                return Err(bad(family, "too many vertices"));
            }
            Graph::from_fn(m + n, |u, v| (u < m) != (v < m))
        }
        Family::Johnson | Family::Kneser => {
            let (n, k) = (params[0], params[1]);
            if k > n || n >= 64 {
                return Err(bad(family, "need 0 <= k <= n < 64"));
            }
            let order = SubsetIndexer::new(n, k)?.count();
            if too_big(order) {
                return Err(bad(family, "too many vertices"));
            }
            let masks: Vec<u64> = colex_masks(n, k).collect();
            let johnson = family == Family::Johnson;
            Graph::from_fn(order, |a, b| {
                let common = (masks[a] & masks[b]).count_ones() as usize;
                if johnson {
                    common + 1 == k
                } else {
                    common == 0
                }
            })
        }
        Family::Petersen => generate(Family::Kneser, &[5, 2])?,
        Family::Heawood => {
            let n = 14;
            let cycle = (0..n).map(|i| (i, (i + 1) % n));
            let chords = (0..n).step_by(2).map(|i| (i, (i + 5) % n));
            Graph::from_edges(n, cycle.chain(chords))?
        }
        Family::Shrikhande => {
            let id = |i: usize, j: usize| 4 * (i % 4) + (j % 4);
            let edges = (0..4).flat_map(|i| {
                (0..4).flat_map(move |j| {
                    [(1, 0), (0, 1), (1, 1)].map(|(di, dj)| (id(i, j), id(i + di, j + dj)))
                })
            });
            Graph::from_edges(16, edges)?
        }
        Family::Rook => {
            let (m, n) = (params[0], params[1]);
            if too_big(m * n) {
                return Err(bad(family, "too many vertices"));
            }
            Graph::from_fn(m * n, |u, v| u / n == v / n || u % n == v % n)
        }
    };
    let spec = GeneratorSpec {
        family,
        params: params.to_vec(),
    };
    Ok(g.with_name(spec.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::binomial;

    fn gen(s: &str) -> Graph {
        s.parse::<GeneratorSpec>().unwrap().build().unwrap()
    }

    fn srg_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
        let d = g.regular_degree()?;
        let (mut lambda, mut mu) = (None, None);
        for u in 0..g.order() {
            for v in (u + 1)..g.order() {
                let common = g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).count();
                let slot = if g.has_edge(u, v) {
                    &mut lambda
                } else {
                    &mut mu
                };
                match *slot {
                    None => *slot = Some(common),
                    Some(c) if c != common => return None,
                    _ => {}
                }
            }
        }
        Some((g.order(), d, lambda?, mu?))
    }

    #[test]
    fn family_sizes() {
        let c9 = gen("cycle:9");
        assert_eq!(
            (c9.order(), c9.size(), c9.regular_degree()),
            (9, 9, Some(2))
        );

        let j52 = gen("johnson:5,2");
        assert_eq!((j52.order(), j52.regular_degree()), (10, Some(6)));

        let p1 = gen("path:1");
        assert_eq!((p1.order(), p1.size()), (1, 0));

        for n in 1..9 {
            let k = gen(&format!("complete:{n}"));
            assert_eq!(k.size() as u64, binomial(n, 2));
        }
        let k24 = gen("complete_bipartite:2,4");
        assert_eq!((k24.order(), k24.size()), (6, 8));

        let rook = gen("rook:3,5");
        assert_eq!(rook.regular_degree(), Some(2 + 4));
    }

    #[test]
    fn johnson_degrees_match_closed_form() {
        for n in 1..9 {
            for k in 0..=n {
                let j = gen(&format!("johnson:{n},{k}"));
                assert_eq!(j.order() as u64, binomial(n, k));
                assert_eq!(j.regular_degree(), Some(k * (n - k)));
            }
        }
    }

    #[test]
    fn petersen_is_srg_10_3_0_1() {
        let p = gen("petersen");
        assert_eq!(srg_parameters(&p), Some((10, 3, 0, 1)));
        assert_eq!(p.girth(), Some(5));
    }

    #[test]
    fn heawood_structure() {
        let h = gen("heawood");
        assert_eq!(h.order(), 14);
        assert_eq!(h.regular_degree(), Some(3));
        assert!(h.is_bipartite());
        assert_eq!(h.girth(), Some(6));
    }

    #[test]
    fn shrikhande_and_rook_are_srg_16_6_2_2() {
        let s = gen("shrikhande");
        let r = gen("rook:4,4");
        assert_eq!(srg_parameters(&s), Some((16, 6, 2, 2)));
        assert_eq!(srg_parameters(&r), Some((16, 6, 2, 2)));
        // Shrikhande has no K_4, the rook's graph does: not isomorphic.
        let has_k4 = |g: &Graph| {
            (0..g.order()).any(|a| {
                g.neighbors(a).iter().any(|&b| {
                    g.neighbors(b).iter().any(|&c| {
                        g.has_edge(a, c)
                            && g.neighbors(c)
                                .iter()
                                .any(|&d| d != a && d != b && g.has_edge(a, d) && g.has_edge(b, d))
                    })
                })
            })
        };
        assert!(!has_k4(&s));
        assert!(has_k4(&r));
    }

    #[test]
    fn handshake_identity() {
        for spec in [
            "path:7",
            "cycle:11",
            "complete:6",
            "complete_bipartite:3,4",
            "johnson:6,3",
            "kneser:7,3",
            "petersen",
            "heawood",
            "shrikhande",
            "rook:4,4",
            "empty:4",
        ] {
            let g = gen(spec);
            assert_eq!(2 * g.size(), g.degrees().iter().sum::<usize>(), "{spec}");
        }
    }

    #[test]
    fn bad_specs() {
        assert!(matches!(
            "octahedron:3".parse::<GeneratorSpec>(),
            Err(Error::UnknownFamily(_))
        ));
        assert!(gen_err("cycle:2"));
        assert!(gen_err("johnson:3,4"));
        assert!(gen_err("cycle"));
        assert!("cycle:x".parse::<GeneratorSpec>().is_err());
    }

    fn gen_err(s: &str) -> bool {
        s.parse::<GeneratorSpec>().unwrap().build().is_err()
    }

    #[test]
    fn spec_display_roundtrip() {
        let s: GeneratorSpec = "johnson:5,2".parse().unwrap();
        assert_eq!(s.to_string(), "johnson:5,2");
        assert_eq!(gen("heawood").name(), Some("heawood"));
    }
}
