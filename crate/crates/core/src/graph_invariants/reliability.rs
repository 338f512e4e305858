use num_bigint::BigInt;

use crate::bits::check_cap;
use crate::graph::Multigraph;
use crate::poly::IntPolynomial;
use crate::sequence::IntSeq;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReliabilityData {
    /// `f_i`: edge sets of size `i` whose removal leaves the graph connected.
    pub fseq: IntSeq,
    /// h-sequence, `Rel(p) = p^{v-1} Σ h_i (1-p)^i`.
    pub hseq: IntSeq,
    /// `Rel(p)` as a polynomial in `p`.
    pub polynomial: IntPolynomial,
    pub edges: usize,
    pub vertices: usize,
}

/// Reliability polynomial of a connected loopless multigraph, by exhaustive
/// enumeration of removed edge sets.
pub fn reliability_data(g: &Multigraph) -> Result<ReliabilityData> {
    if g.has_self_loop() {
        return Err(Error::domain("reliability is not defined here for graphs with self-loops"));
    }
    if !g.is_connected() {
        return Err(Error::domain("reliability needs a connected graph"));
    }
    let e = g.edge_count();
    let v = g.vertex_count();
    check_cap("reliability enumeration", e)?;
    let d = e + 1 - v;

    let mut f = vec![0u64; d + 1];
    for kept in 0u64..1 << e {
        if g.forest_rank(kept) == v - 1 {
            f[e - kept.count_ones() as usize] += 1;
        }
    }
    let fseq = IntSeq(f.iter().map(|&x| BigInt::from(x)).collect());

    let p = IntPolynomial::q();
    let one_minus_p = IntPolynomial::from_i64(&[1, -1]);
    let polynomial = fseq
        .values()
        .iter()
        .enumerate()
        .fold(IntPolynomial::zero(), |acc, (i, fi)| {
            let term = (&p.pow(e - i) * &one_minus_p.pow(i)).scale(fi);
            &acc + &term
        });

    // Rel(p) / p^{v-1}, then p = 1 - x
    let quotient = polynomial.exact_div_q_pow(v - 1)?;
    let in_x = quotient.compose(&one_minus_p);
    if in_x.degree().is_some_and(|deg| deg > d) {
        return Err(Error::invariant(format!(
            "h-sequence has degree {:?} beyond e - v + 1 = {d}",
            in_x.degree()
        )));
    }
    let hseq = IntSeq((0..=d).map(|i| in_x.coeff(i)).collect());

    Ok(ReliabilityData {
        fseq,
        hseq,
        polynomial,
        edges: e,
        vertices: v,
    })
}
