//! Built-in matroid corpus: uniform matroids, cycle and cocycle matroids of
//! small connected graphs, rational matrices, and two non-representable
//! paving matroids.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::{subsets_of_size, ElementSet};
use crate::graph::{connected_graphs, Multigraph};
use crate::matroid::{GroundSet, Matroid};
use crate::rational::{rat, rat_int};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Uniform,
    Cycle,
    Cocycle,
    Matrix,
    Explicit,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub family: Family,
    pub matroid: Matroid,
    /// Where the fixture comes from, for reports.
    pub provenance: String,
    /// Present for cycle and cocycle fixtures.
    pub graph: Option<Multigraph>,
}

impl Fixture {
    pub fn representable_over_q(&self) -> bool {
        self.matroid.representable_over_q()
    }
}

/// `U_{k,n}` for `0 <= k <= n`, `1 <= n <= max_size`.
pub fn uniform_upto(max_size: usize) -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        for k in 0..=n {
            out.push(Fixture {
                name: format!("U({k},{n})"),
                family: Family::Uniform,
                matroid: Matroid::uniform(k, n).expect("k <= n"),
                provenance: "uniform matroid".into(),
                graph: None,
            });
        }
    }
    out
}

/// Connected simple graphs on `1..=max_vertices` vertices up to isomorphism,
/// named `G{v}.{i}` in canonical order.
pub fn connected_graphs_upto(max_vertices: usize) -> Vec<(String, Multigraph)> {
    let mut out = Vec::new();
    for v in 1..=max_vertices {
        for (i, g) in connected_graphs(v).into_iter().enumerate() {
            out.push((format!("G{v}.{i}"), g.to_multigraph()));
        }
    }
    out
}

pub fn cycle_matroids_upto(max_vertices: usize) -> Vec<Fixture> {
    connected_graphs_upto(max_vertices)
        .into_iter()
        .map(|(name, g)| Fixture {
            name: format!("M({name})"),
            family: Family::Cycle,
            matroid: Matroid::graphic(g.clone()).expect("valid graph"),
            provenance: format!("cycle matroid of connected graph {name}"),
            graph: Some(g),
        })
        .collect()
}

pub fn cocycle_matroids_upto(max_vertices: usize) -> Vec<Fixture> {
    connected_graphs_upto(max_vertices)
        .into_iter()
        .map(|(name, g)| Fixture {
            name: format!("M*({name})"),
            family: Family::Cocycle,
            matroid: Matroid::graphic(g.clone()).expect("valid graph").dual(),
            provenance: format!("cocycle matroid of connected graph {name}"),
            graph: Some(g),
        })
        .collect()
}

/// Random small integer matrices; zero and repeated columns are allowed.
pub fn matrix_samples(seed: u64, count: usize) -> Vec<Fixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let rows = rng.gen_range(2..=4);
            let cols = rng.gen_range(rows..=8);
            let columns = (0..cols)
                .map(|_| (0..rows).map(|_| rat_int(rng.gen_range(-2..=2))).collect())
                .collect();
            Fixture {
                name: format!("A{i}"),
                family: Family::Matrix,
                matroid: Matroid::linear(columns, GroundSet::numbered(cols).expect("small"))
                    .expect("well-formed columns"),
                provenance: format!("random {rows}x{cols} integer matrix, seed {seed}"),
                graph: None,
            }
        })
        .collect()
}

/// `U_{k,n}` as the column matroid of a Vandermonde matrix.
pub fn uniform_as_matrix(k: usize, n: usize) -> Result<Matroid> {
    let columns = (0..n)
        .map(|t| (0..k).map(|j| rat_int((t as i64 + 1).pow(j as u32))).collect())
        .collect();
    Matroid::linear(columns, GroundSet::numbered(n)?)
}

/// Rank-`rank` paving matroid whose only dependent `rank`-sets are `hyperplanes`.
pub fn paving(ground: GroundSet, rank: usize, hyperplanes: &[ElementSet]) -> Result<Matroid> {
    let n = ground.len();
    let mut circuits: Vec<ElementSet> = hyperplanes.to_vec();
    circuits.extend(subsets_of_size(n, rank + 1).filter(|s| !hyperplanes.iter().any(|h| h.is_subset_of(*s))));
    Matroid::from_circuits(ground, circuits)
}

/// The Fano plane: representable only in characteristic two.
pub fn fano() -> Fixture {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    let hyperplanes: Vec<ElementSet> = lines.iter().map(|l| ElementSet::from_indices(l.iter().copied())).collect();
    Fixture {
        name: "fano".into(),
        family: Family::Explicit,
        matroid: paving(GroundSet::numbered(7).expect("small"), 3, &hyperplanes).expect("Fano axioms"),
        provenance: "Fano plane, explicit circuits".into(),
        graph: None,
    }
}

/// The Vámos matroid: not representable over any field.
pub fn vamos() -> Fixture {
    let labels = ["a", "a'", "b", "b'", "c", "c'", "d", "d'"];
    let pair = |i: usize| [2 * i, 2 * i + 1];
    let hyperplanes: Vec<ElementSet> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
        .iter()
        .map(|&(x, y)| ElementSet::from_indices(pair(x).into_iter().chain(pair(y))))
        .collect();
    let ground = GroundSet::new(labels.iter().map(|s| s.to_string()).collect()).expect("distinct");
    Fixture {
        name: "vamos".into(),
        family: Family::Explicit,
        matroid: paving(ground, 4, &hyperplanes).expect("Vámos axioms"),
        provenance: "Vámos matroid, explicit circuits".into(),
        graph: None,
    }
}

/// The non-Fano configuration: the seven nonzero 0/1 vectors of Q^3.
pub fn non_fano() -> Fixture {
    let columns = (1..8u32)
        .map(|b| (0..3).map(|j| rat_int(i64::from(b >> j & 1))).collect())
        .collect();
    Fixture {
        name: "nonfano".into(),
        family: Family::Matrix,
        matroid: Matroid::linear(columns, GroundSet::numbered(7).expect("small")).expect("valid"),
        provenance: "nonzero 0/1 vectors in Q^3".into(),
        graph: None,
    }
}

fn named_graph(name: &str, g: Multigraph, cocycle: bool) -> Fixture {
    let m = Matroid::graphic(g.clone()).expect("valid graph");
    Fixture {
        name: name.into(),
        family: if cocycle { Family::Cocycle } else { Family::Cycle },
        matroid: if cocycle { m.dual() } else { m },
        provenance: format!("{} matroid of {name}", if cocycle { "cocycle" } else { "cycle" }),
        graph: Some(g),
    }
}

/// Fixtures addressable by name on the command line.
pub fn by_name(name: &str) -> Option<Fixture> {
    let lower = name.to_ascii_lowercase();
    Some(match lower.as_str() {
        "fano" => fano(),
        "vamos" => vamos(),
        "nonfano" => non_fano(),
        "k4" => named_graph("k4", Multigraph::complete(4), false),
        "k5" => named_graph("k5", Multigraph::complete(5), false),
        "k33" => named_graph(
            "k33",
            Multigraph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
                .expect("valid"),
            false,
        ),
        "k4*" => named_graph("k4*", Multigraph::complete(4), true),
        "k5*" => named_graph("k5*", Multigraph::complete(5), true),
        "diamond" => {
            let d = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).expect("valid");
            named_graph("diamond", d, false)
        }
        "pg" => {
            // projective-plane-like rational configuration with a 3/2 entry
            let cols = vec![
                vec![rat_int(1), rat_int(0), rat_int(0)],
                vec![rat_int(0), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(0), rat_int(1)],
                vec![rat_int(1), rat_int(1), rat_int(0)],
                vec![rat_int(1), rat(3, 2), rat_int(1)],
                vec![rat_int(0), rat_int(1), rat_int(1)],
            ];
            Fixture {
                name: "pg".into(),
                family: Family::Matrix,
                matroid: Matroid::linear(cols, GroundSet::numbered(6).expect("small")).expect("valid"),
                provenance: "rational 3x6 configuration".into(),
                graph: None,
            }
        }
        _ => {
            {
                let rest = lower.strip_prefix('u')?;
                let (k, n) = rest.trim_matches(|c| c == '(' || c == ')').split_once(',')?;
                let (k, n) = (k.trim().parse().ok()?, n.trim().parse().ok()?);
                Fixture {
                    name: format!("U({k},{n})"),
                    family: Family::Uniform,
                    matroid: Matroid::uniform(k, n).ok()?,
                    provenance: "uniform matroid".into(),
                    graph: None,
                }
            }
        }
    })
}

pub const NAMED: &[&str] = &["fano", "vamos", "nonfano", "k4", "k5", "k33", "k4*", "k5*", "diamond", "pg"];

/// The default corpus: uniform `n <= 9`, cycle and cocycle matroids of
/// connected graphs `v <= 6`, 20 random matrices, and the named fixtures.
pub fn standard_corpus(seed: u64) -> Vec<Fixture> {
    let mut out = uniform_upto(9);
    out.extend(cycle_matroids_upto(6));
    out.extend(cocycle_matroids_upto(6));
    out.extend(matrix_samples(seed, 20));
    out.extend(NAMED.iter().filter_map(|n| by_name(n)));
    out
}
