//! Per-matroid theorem reports: h- and f-vectors of both complexes with
//! their verdicts, plus the identities tying them to the characteristic
//! polynomial.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::complexes::{bc_complex, f_to_h, independence_complex};
use crate::fixtures::Fixture;
use crate::flats::{bc_h_from_charpoly, char_poly, char_poly_boolean, reduced_char_poly, whitney_numbers};
use crate::matroid::Matroid;
use crate::order::ElementOrder;
use crate::poly::IntPolynomial;
use crate::sequence::{IntSeq, LogConcavityVerdict};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// Representable over Q: the log-concavity statements are theorems.
    Theorem,
    /// No rational representation known: the same checks are conjectures.
    Conjecture,
}

impl CheckKind {
    pub fn label(self) -> &'static str {
        match self {
            CheckKind::Theorem => "theorem check",
            CheckKind::Conjecture => "conjecture check (not Q-representable)",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VectorPair {
    pub f: IntSeq,
    pub h: IntSeq,
    pub f_verdict: LogConcavityVerdict,
    pub h_verdict: LogConcavityVerdict,
}

impl VectorPair {
    fn new(f: IntSeq, top: usize) -> Result<Self> {
        let h = f_to_h(&f, top)?;
        Ok(Self {
            f_verdict: LogConcavityVerdict::of(&f),
            h_verdict: LogConcavityVerdict::of(&h),
            f,
            h,
        })
    }

    fn to_json(&self) -> Value {
        json!({
            "f": self.f.to_strings(),
            "h": self.h.to_strings(),
            "f_verdict": self.f_verdict,
            "h_verdict": self.h_verdict,
        })
    }
}

#[derive(Clone, Debug)]
pub struct OrderingReport {
    pub order: ElementOrder,
    pub bc: VectorPair,
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub name: String,
    pub kind: CheckKind,
    pub size: usize,
    pub rank: usize,
    pub has_loop: bool,
    pub labels: Vec<String>,
    pub independence: VectorPair,
    pub orderings: Vec<OrderingReport>,
    pub char_poly: IntPolynomial,
    pub reduced_char_poly: Option<IntPolynomial>,
    pub whitney: IntSeq,
    /// NBC counts equal the Whitney numbers under every ordering.
    pub nbc_matches_whitney: bool,
    /// Möbius and Boolean-expansion characteristic polynomials agree.
    pub boolean_oracle_matches: bool,
    /// `χ̄(q+1)` gives the BC h-vector; `None` when `χ̄` is undefined (rank 0).
    pub bc_h_matches_charpoly: Option<bool>,
    /// f of BC is the same for every ordering.
    pub ordering_independent: bool,
}

impl TheoremReport {
    /// h-vectors of IN and of BC under every ordering are nonnegative,
    /// log-concave, without internal zeros.
    pub fn h_vectors_ok(&self) -> bool {
        self.independence.h_verdict.h_vector_ok()
            && self.orderings.iter().all(|o| o.bc.h_verdict.h_vector_ok())
    }

    /// f-vectors strictly log-concave. BC is empty for matroids with loops,
    /// so only IN is judged there.
    pub fn f_vectors_ok(&self) -> bool {
        self.independence.f_verdict.f_vector_ok()
            && (self.has_loop || self.orderings.iter().all(|o| o.bc.f_verdict.f_vector_ok()))
    }

    pub fn identities_ok(&self) -> bool {
        self.nbc_matches_whitney
            && self.boolean_oracle_matches
            && self.bc_h_matches_charpoly != Some(false)
            && self.ordering_independent
    }

    pub fn passed(&self) -> bool {
        self.h_vectors_ok() && self.f_vectors_ok() && self.identities_ok()
    }

    /// Short descriptions of every failed check.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.independence.h_verdict.h_vector_ok() {
            out.push(format!("h(IN) = {:?}", self.independence.h));
        }
        if !self.independence.f_verdict.f_vector_ok() {
            out.push(format!("f(IN) = {:?} not strictly log-concave", self.independence.f));
        }
        for o in &self.orderings {
            if !o.bc.h_verdict.h_vector_ok() {
                out.push(format!("h(BC) = {:?} under order {:?}", o.bc.h, o.order.order()));
            }
            if !self.has_loop && !o.bc.f_verdict.f_vector_ok() {
                out.push(format!("f(BC) = {:?} under order {:?}", o.bc.f, o.order.order()));
            }
        }
        if !self.nbc_matches_whitney {
            out.push("NBC counts differ from Whitney numbers".into());
        }
        if !self.boolean_oracle_matches {
            out.push("Möbius and Boolean-expansion characteristic polynomials differ".into());
        }
        if self.bc_h_matches_charpoly == Some(false) {
            out.push("h(BC) differs from the coefficients of the shifted reduced polynomial".into());
        }
        if !self.ordering_independent {
            out.push("BC f-vector depends on the ordering".into());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "label": self.kind.label(),
            "representable_over_q": self.kind == CheckKind::Theorem,
            "size": self.size,
            "rank": self.rank,
            "has_loop": self.has_loop,
            "labels": self.labels,
            "independence_complex": self.independence.to_json(),
            "broken_circuit_complex": self.orderings.iter().map(|o| {
                let mut v = o.bc.to_json();
                v["order"] = json!(o.order.order().iter().map(|&i| self.labels[i].clone()).collect::<Vec<_>>());
                v
            }).collect::<Vec<_>>(),
            "char_poly": self.char_poly.to_json(),
            "reduced_char_poly": self.reduced_char_poly.as_ref().map(|p| p.to_json()),
            "whitney_numbers": self.whitney.to_strings(),
            "checks": {
                "h_vectors": self.h_vectors_ok(),
                "f_vectors_strict": self.f_vectors_ok(),
                "nbc_matches_whitney": self.nbc_matches_whitney,
                "boolean_oracle_matches": self.boolean_oracle_matches,
                "bc_h_matches_charpoly": self.bc_h_matches_charpoly,
                "ordering_independent": self.ordering_independent,
            },
            "passed": self.passed(),
            "failures": self.failures(),
        })
    }
}

/// Build the report for `m` under each ordering (the intrinsic order is used
/// when `orderings` is empty).
pub fn theorem_report(name: &str, m: &Matroid, orderings: &[ElementOrder]) -> Result<TheoremReport> {
    let top = m.full_rank();
    let identity = [ElementOrder::identity(m.len())];
    let orderings = if orderings.is_empty() { &identity[..] } else { orderings };

    let independence = VectorPair::new(independence_complex(m)?.f_vector(), top)?;
    let chi = char_poly(m)?;
    let boolean_oracle_matches = chi == char_poly_boolean(m)?;
    let whitney = whitney_numbers(m)?.values;
    let reduced = if m.has_loop() || top > 0 {
        Some(reduced_char_poly(m)?)
    } else {
        None
    };
    let bc_h = reduced.as_ref().map(|_| bc_h_from_charpoly(m)).transpose()?;

    let mut reports = Vec::with_capacity(orderings.len());
    for o in orderings {
        let f = bc_complex(m, o)?.f_vector();
        reports.push(OrderingReport {
            order: o.clone(),
            bc: VectorPair::new(f, top)?,
        });
    }
    let nbc_matches_whitney = reports.iter().all(|r| r.bc.f == whitney);
    let ordering_independent = reports.windows(2).all(|w| w[0].bc.f == w[1].bc.f);
    let bc_h_matches_charpoly = bc_h.map(|h| reports.iter().all(|r| r.bc.h == h));

    Ok(TheoremReport {
        name: name.to_string(),
        kind: if m.representable_over_q() {
            CheckKind::Theorem
        } else {
            CheckKind::Conjecture
        },
        size: m.len(),
        rank: top,
        has_loop: m.has_loop(),
        labels: m.ground().labels().to_vec(),
        independence,
        orderings: reports,
        char_poly: chi,
        reduced_char_poly: reduced,
        whitney,
        nbc_matches_whitney,
        boolean_oracle_matches,
        bc_h_matches_charpoly,
        ordering_independent,
    })
}

/// `k` random orderings for the fixture at `index`, from a stream of `seed`
/// reserved for that index; the identity when `k == 0`.
pub fn sampled_orderings(n: usize, k: usize, seed: u64, index: u64) -> Vec<ElementOrder> {
    if k == 0 {
        return vec![ElementOrder::identity(n)];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    (0..k).map(|_| ElementOrder::random(n, &mut rng)).collect()
}

#[derive(Clone, Debug)]
pub struct CorpusSummary {
    pub seed: u64,
    pub orderings: usize,
    pub reports: Vec<TheoremReport>,
}

impl CorpusSummary {
    fn of_kind(&self, kind: CheckKind) -> impl Iterator<Item = &TheoremReport> {
        self.reports.iter().filter(move |r| r.kind == kind)
    }

    /// Every theorem check passes and every identity holds, including on
    /// conjecture checks.
    pub fn passed(&self) -> bool {
        self.of_kind(CheckKind::Theorem).all(TheoremReport::passed)
            && self.reports.iter().all(TheoremReport::identities_ok)
    }

    pub fn to_json(&self) -> Value {
        let section = |kind| {
            let rs: Vec<&TheoremReport> = self.of_kind(kind).collect();
            json!({
                "label": kind.label(),
                "count": rs.len(),
                "passed": rs.iter().filter(|r| r.passed()).count(),
                "results": rs.iter().filter(|r| kind == CheckKind::Conjecture || !r.passed()).map(|r| json!({
                    "name": r.name,
                    "size": r.size,
                    "rank": r.rank,
                    "passed": r.passed(),
                    "failures": r.failures(),
                })).collect::<Vec<_>>(),
            })
        };
        json!({
            "seed": self.seed,
            "orderings_per_matroid": self.orderings,
            "matroids": self.reports.len(),
            "theorem_checks": section(CheckKind::Theorem),
            "conjecture_checks": section(CheckKind::Conjecture),
            "pass": self.passed(),
        })
    }
}

/// Reports for every fixture, computed in parallel and kept in input order.
pub fn check_fixtures(fixtures: &[Fixture], orderings: usize, seed: u64) -> Result<CorpusSummary> {
    let reports = fixtures
        .par_iter()
        .enumerate()
        .map(|(i, f)| {
            let orders = sampled_orderings(f.matroid.len(), orderings, seed, i as u64);
            theorem_report(&f.name, &f.matroid, &orders)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusSummary {
        seed,
        orderings,
        reports,
    })
}
