//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! measured runtime and limit; the process exits nonzero if any fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matroid_lc::arrangement::{bounded_regions_2d, CentralArrangement};
use matroid_lc::complexes::{bc_complex, in_equals_reduced_bc_of_free_dual, independence_complex};
use matroid_lc::fixtures::{self, Family, Fixture};
use matroid_lc::flats::{nbc_counts, reduced_char_poly, whitney_numbers};
use matroid_lc::graph::{all_graphs, connected_graphs, random_connected_graph, Multigraph, SimpleGraph};
use matroid_lc::graph_invariants::{
    chromatic_polynomial_with, cocycle_matroid, reliability_data, ChromaticCache, ChromaticMethod,
};
use matroid_lc::matroid::{GroundSet, Representation};
use matroid_lc::rational::{rat, rat_int};
use matroid_lc::report::{check_fixtures, sampled_orderings, CorpusSummary};
use matroid_lc::{ElementOrder, IntPolynomial, IntSeq, Matroid};

const SEED: u64 = 20240;
const ORDERINGS: usize = 20;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

struct Gate {
    failed: Vec<u32>,
}

impl Gate {
    fn run(&mut self, id: u32, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let o = f();
        let took = start.elapsed();
        let in_time = limit.is_none_or(|l| took <= l);
        let ok = o.ok && in_time;
        let limit = limit.map_or(String::new(), |l| format!(" (limit {:.0} s)", l.as_secs_f64()));
        println!(
            "{} [{id:>2}] {title}: {}; {:.2} s{limit}",
            if ok { "PASS" } else { "FAIL" },
            o.detail,
            took.as_secs_f64()
        );
        if !ok {
            self.failed.push(id);
        }
    }
}

fn ones(len: usize) -> IntSeq {
    IntSeq(vec![BigInt::from(1); len])
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    for r in 1..=7usize {
        let m = Matroid::uniform(r + 1, r + 2).unwrap();
        let h_in = independence_complex(&m).unwrap().h_vector();
        let h_bc = bc_complex(&m, &ElementOrder::identity(r + 2)).unwrap().h_vector();
        // h_0..h_r; the top entry is 1 for IN and 0 for the cone BC
        let head = |h: &IntSeq| IntSeq(h.values()[..=r].to_vec());
        if head(&h_in) != ones(r + 1) || head(&h_bc) != ones(r + 1) {
            bad.push(format!("U({},{}) h(IN)={:?} h(BC)={:?}", r + 1, r + 2, h_in, h_bc));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "7 matroids, all ones".into() } else { bad.join("; ") })
}

fn theorem_corpus() -> Vec<Fixture> {
    let mut c = fixtures::cycle_matroids_upto(6);
    c.extend(fixtures::uniform_upto(9));
    c
}

fn criterion_2(s: &CorpusSummary) -> Outcome {
    let bad: Vec<_> = s.reports.iter().filter(|r| !r.h_vectors_ok()).map(|r| r.name.clone()).collect();
    outcome(
        bad.is_empty(),
        format!(
            "{} matroids x {} orderings, {} violations {:?}",
            s.reports.len(),
            s.orderings,
            bad.len(),
            bad
        ),
    )
}

fn criterion_3(s: &CorpusSummary) -> Outcome {
    let bad: Vec<_> = s.reports.iter().filter(|r| !r.f_vectors_ok()).map(|r| r.name.clone()).collect();
    outcome(bad.is_empty(), format!("{} matroids, {} violations {:?}", s.reports.len(), bad.len(), bad))
}

fn criterion_4(corpus: &[Fixture]) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (i, f) in corpus.iter().enumerate().filter(|(_, f)| f.matroid.len() <= 10) {
        let w = whitney_numbers(&f.matroid).unwrap().values;
        for o in sampled_orderings(f.matroid.len(), ORDERINGS, SEED ^ 4, i as u64) {
            checked += 1;
            if nbc_counts(&f.matroid, &o).unwrap() != w {
                bad.push(f.name.clone());
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} (matroid, ordering) pairs, mismatches {bad:?}"))
}

fn criterion_5() -> Outcome {
    let mut ms: Vec<(String, Matroid)> = Vec::new();
    for n in 1..=7 {
        for k in 0..=n {
            ms.push((format!("U({k},{n})"), Matroid::uniform(k, n).unwrap()));
        }
    }
    for v in 1..=5 {
        for (i, g) in all_graphs(v).into_iter().enumerate() {
            if g.edge_count() > 0 {
                ms.push((format!("G{v}#{i}"), Matroid::graphic(g.to_multigraph()).unwrap()));
            }
        }
    }
    let bad: Vec<_> = ms
        .iter()
        .filter(|(_, m)| !in_equals_reduced_bc_of_free_dual(m, "p").unwrap())
        .map(|(n, _)| n.clone())
        .collect();
    outcome(bad.is_empty(), format!("{} matroids, face sets equal except {bad:?}", ms.len()))
}

/// Proper k-colorings by backtracking.
fn count_colorings(g: &SimpleGraph, k: usize) -> u64 {
    fn go(g: &SimpleGraph, k: usize, colors: &mut Vec<usize>) -> u64 {
        let v = colors.len();
        if v == g.n() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            if (0..v).all(|u| !g.has_edge(u, v) || colors[u] != c) {
                colors.push(c);
                total += go(g, k, colors);
                colors.pop();
            }
        }
        total
    }
    go(g, k, &mut Vec::new())
}

fn criterion_6() -> Outcome {
    let cache = ChromaticCache::new();
    let graphs: Vec<SimpleGraph> = (1..=8).flat_map(connected_graphs).collect();
    let mut bad = Vec::new();
    let mut oracle_mismatch = Vec::new();
    let mut brute = 0;
    for (i, g) in graphs.iter().enumerate() {
        let mg = g.to_multigraph();
        let data = chromatic_polynomial_with(&mg, &cache, ChromaticMethod::DeletionContraction).unwrap();
        if !data.coefficients_ok() {
            bad.push(i);
        }
        if g.n() <= 6 {
            let via_matroid = chromatic_polynomial_with(&mg, &cache, ChromaticMethod::CycleMatroid).unwrap();
            if via_matroid.poly != data.poly {
                oracle_mismatch.push(i);
            }
        } else if i % 20 == 0 {
            brute += 1;
            for k in [3, 4] {
                if data.poly.eval_i64(k as i64) != BigInt::from(count_colorings(g, k)) {
                    oracle_mismatch.push(i);
                }
            }
        }
    }
    outcome(
        bad.is_empty() && oracle_mismatch.is_empty(),
        format!(
            "{} graphs (all connected, v<=8; {brute} recounted by backtracking), violations {bad:?}, oracle mismatches {oracle_mismatch:?}",
            graphs.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut graphs: Vec<Multigraph> = (1..=8)
        .flat_map(connected_graphs)
        .filter(|g| g.edge_count() <= 12)
        .map(|g| g.to_multigraph())
        .collect();
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    // sparse graphs on 9..=13 vertices, and multigraphs with parallel edges
    while graphs.len() < exhaustive + 200 {
        let v = rng.gen_range(9..=13);
        let g = random_connected_graph(v, rng.gen_range(0.0..0.15), &mut rng);
        if g.edge_count() <= 12 {
            graphs.push(g.to_multigraph());
        }
    }
    for _ in 0..50 {
        let v = rng.gen_range(2..=6);
        let base = random_connected_graph(v, 0.3, &mut rng).to_multigraph();
        let mut edges = base.edges().to_vec();
        while edges.len() < 12 && rng.gen_bool(0.7) {
            let e = edges[rng.gen_range(0..edges.len())];
            edges.push(e);
        }
        graphs.push(Multigraph::from_edges(v, &edges).unwrap());
    }
    let mut bad = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let rel = reliability_data(g).unwrap();
        let h = independence_complex(&cocycle_matroid(g).unwrap()).unwrap().h_vector();
        if rel.hseq != h {
            bad.push(i);
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} graphs with e <= 12 ({exhaustive} exhaustive v<=8, 200 sampled 9<=v<=13, 50 multigraphs), mismatches {bad:?}",
            graphs.len()
        ),
    )
}

fn signed_nbc_poly(m: &Matroid) -> IntPolynomial {
    let top = m.full_rank();
    let nbc = nbc_counts(m, &ElementOrder::identity(m.len())).unwrap();
    let coeffs = (0..=top)
        .map(|d| {
            let i = top - d;
            let c = nbc.get(i);
            if i.is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

fn criterion_8(s: &CorpusSummary, corpus: &[Fixture]) -> Outcome {
    let mut bad = Vec::new();
    for (r, f) in s.reports.iter().zip(corpus) {
        if !r.boolean_oracle_matches || signed_nbc_poly(&f.matroid) != r.char_poly {
            bad.push(r.name.clone());
        }
    }
    outcome(bad.is_empty(), format!("{} matroids, disagreements {bad:?}", corpus.len()))
}

fn with_parallel_copies(f: &Fixture, rng: &mut ChaCha8Rng) -> Matroid {
    let n = f.matroid.len();
    let copies: Vec<usize> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..n)).collect();
    match f.matroid.representation() {
        Representation::Graphic(g) => {
            let mut edges = g.edges().to_vec();
            edges.extend(copies.iter().map(|&i| g.edges()[i]));
            Matroid::graphic(Multigraph::from_edges(g.vertex_count(), &edges).unwrap()).unwrap()
        }
        Representation::LinearRational { columns, .. } => {
            let mut cols = columns.clone();
            for &i in &copies {
                let s = rat(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=3));
                cols.push(columns[i].iter().map(|x| x * &s).collect());
            }
            Matroid::linear(cols.clone(), GroundSet::numbered(cols.len()).unwrap()).unwrap()
        }
        _ => unreachable!("only graphic and matrix fixtures are sampled"),
    }
}

fn criterion_9() -> Outcome {
    let mut pool: Vec<Fixture> = fixtures::cycle_matroids_upto(5);
    pool.extend(fixtures::matrix_samples(SEED ^ 9, 20));
    for (k, n) in [(2, 5), (3, 6), (3, 7), (4, 7)] {
        pool.push(Fixture {
            name: format!("U({k},{n}) as matrix"),
            family: Family::Matrix,
            matroid: fixtures::uniform_as_matrix(k, n).unwrap(),
            provenance: "Vandermonde".into(),
            graph: None,
        });
    }
    pool.retain(|f| f.matroid.full_rank() > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let mut bad = Vec::new();
    for t in 0..50 {
        let f = &pool[rng.gen_range(0..pool.len())];
        let before = reduced_char_poly(&f.matroid).unwrap();
        let extended = with_parallel_copies(f, &mut rng);
        let after = reduced_char_poly(&extended).unwrap();
        let simplified = reduced_char_poly(&extended.simplify()).unwrap();
        if before != after || before != simplified {
            bad.push(format!("trial {t} on {}", f.name));
        }
    }
    outcome(bad.is_empty(), format!("50 trials, changes {bad:?}"))
}

fn random_forms(rng: &mut ChaCha8Rng) -> Vec<Vec<num_rational::BigRational>> {
    let n = rng.gen_range(3..=8);
    let mut forms: Vec<Vec<num_rational::BigRational>> = Vec::new();
    while forms.len() < n {
        let f: Vec<_> = (0..3).map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=2))).collect();
        let zero = f.iter().all(|x| x == &rat_int(0));
        let parallel = forms.iter().any(|g| matroid_lc::rational::proportional(g, &f));
        if !zero && !parallel {
            forms.push(f);
        }
    }
    forms
}

/// Checks every infinity choice; returns (decones checked, failures, bounded counts).
fn check_arrangement(forms: Vec<Vec<num_rational::BigRational>>, failures: &mut Vec<String>, tag: &str) -> Vec<usize> {
    let n = forms.len();
    let c = CentralArrangement::new(forms, GroundSet::numbered(n).unwrap()).unwrap();
    let chi_bar = reduced_char_poly(&c.matroid().unwrap()).unwrap();
    let mut counts = Vec::new();
    for inf in 0..n {
        let a = c.decone(inf).unwrap();
        let chi = a.char_poly().unwrap();
        if chi != chi_bar {
            failures.push(format!("{tag}: chi_A != reduced chi at infinity {inf}"));
        }
        if a.is_essential() {
            let b = bounded_regions_2d(&a).unwrap();
            if BigInt::from(b) != chi.eval_i64(1) {
                failures.push(format!("{tag}: {b} bounded regions, chi_A(1) = {}", chi.eval_i64(1)));
            }
            counts.push(b);
        }
    }
    counts
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let mut failures = Vec::new();
    let mut decones = 0;
    for t in 0..30 {
        let forms = random_forms(&mut rng);
        decones += check_arrangement(forms, &mut failures, &format!("random #{t}")).len();
    }
    for n in 3..=8i64 {
        let generic = (1..=n).map(|t| vec![rat_int(1), rat_int(t), rat_int(t * t)]).collect();
        let counts = check_arrangement(generic, &mut failures, &format!("generic n={n}"));
        let expected = binomial(n as usize - 2, 2);
        if counts.iter().any(|&b| b != expected) {
            failures.push(format!("generic n={n}: bounded {counts:?}, expected {expected}"));
        }
        decones += counts.len();

        let mut concurrent: Vec<_> = (1..n).map(|a| vec![rat_int(1), rat_int(a), rat_int(0)]).collect();
        concurrent.push(vec![rat_int(0), rat_int(0), rat_int(1)]);
        let counts = check_arrangement(concurrent, &mut failures, &format!("concurrent n={n}"));
        // sending the extra plane to infinity leaves n-1 lines through one point
        if counts.last() != Some(&0) {
            failures.push(format!("concurrent n={n}: bounded {counts:?}"));
        }
        decones += counts.len();
    }
    outcome(failures.is_empty(), format!("{decones} decones, failures {failures:?}"))
}

fn criterion_11(s: &CorpusSummary) -> Outcome {
    let mut bad = Vec::new();
    for r in &s.reports {
        let first = &r.orderings[0].bc;
        if r.orderings.iter().any(|o| o.bc.f != first.f || o.bc.h != first.h) {
            bad.push(r.name.clone());
        }
    }
    outcome(bad.is_empty(), format!("{} matroids x {} orderings, ordering-dependent {bad:?}", s.reports.len(), s.orderings))
}

fn main() {
    let mut gate = Gate { failed: Vec::new() };
    let mins = |m: u64| Some(Duration::from_secs(60 * m));

    gate.run(1, "uniform U(r+1,r+2) h-vectors all ones", Some(Duration::from_secs(1)), criterion_1);

    let mut summary = None;
    gate.run(2, "h-vectors of IN and BC on graphs v<=6 and uniform n<=9", mins(5), || {
        let s = check_fixtures(&theorem_corpus(), ORDERINGS, SEED).unwrap();
        let o = criterion_2(&s);
        summary = Some(s);
        o
    });
    let summary = summary.expect("criterion 2 ran");
    gate.run(3, "f-vectors strictly log-concave on the same corpus", None, || criterion_3(&summary));

    let whole = fixtures::standard_corpus(SEED);
    gate.run(4, "Whitney numbers equal NBC counts, n<=10", None, || criterion_4(&whole));
    gate.run(5, "IN(M) equals reduced BC of the free dual extension", None, criterion_5);
    gate.run(6, "chromatic coefficients, connected graphs v<=8", mins(10), criterion_6);
    gate.run(7, "reliability h-sequence equals h(IN) of the cocycle matroid", None, criterion_7);
    let mut whole_summary = None;
    gate.run(8, "characteristic polynomial: Mobius, Boolean, signed NBC", None, || {
        let s = check_fixtures(&whole, ORDERINGS, SEED ^ 1).unwrap();
        let o = criterion_8(&s, &whole);
        whole_summary = Some(s);
        o
    });
    let whole_summary = whole_summary.expect("criterion 8 ran");

    gate.run(9, "reduced characteristic polynomial under parallel copies", None, criterion_9);
    gate.run(10, "decone identity and bounded regions of line arrangements", None, criterion_10);
    gate.run(11, "BC f and h independent of the ordering", None, || criterion_11(&whole_summary));

    if !gate.failed.is_empty() {
        println!("acceptance: {} criteria failed: {:?}", gate.failed.len(), gate.failed);
        std::process::exit(1);
    }
    println!("acceptance: all 11 criteria passed");
}
