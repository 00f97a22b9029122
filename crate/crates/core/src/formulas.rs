//! Closed-form bowtie counts and the asymptotic values they are compared to.
//!
//! For `T_2`-like graphs with parts `V1`, `V2`, `b_i` edges inside `V_i`
//! (triangle-free) and within-part degrees `d(v)`, every bowtie has exactly two
//! bad edges and
//!
//! ```text
//! f = 2(n−4) b1 b2 + Σ_i [ Σ_{v ∈ V_i} C(d(v), 2) · v'(v'−2) + C(b_i, 2) · v' ]
//! ```
//!
//! with `v' = |V_{3−i}|`. The three terms are bowties with one bad edge per
//! part, two adjacent bad edges in one part, and two bad edges in one part
//! (adjacent or not) sharing an apex on the other side.

use serde::Serialize;

use crate::constructions::{ex_bowtie, PartitionSpec};
use crate::counting::Count;
use crate::error::{Error, Result};

fn c2(x: i128) -> i128 {
    x * (x - 1) / 2
}

fn overflow() -> Error {
    Error::Overflow("formula evaluation")
}

/// `f` from part sizes, bad-edge counts and `Σ C(d(v), 2)` per part.
fn f_core(v1: usize, v2: usize, b1: usize, b2: usize, s1: Count, s2: Count) -> Result<Count> {
    let to = |x: u128| i128::try_from(x).map_err(|_| overflow());
    let (v1, v2, b1, b2) = (v1 as i128, v2 as i128, b1 as i128, b2 as i128);
    let (s1, s2) = (to(s1)?, to(s2)?);
    let n = v1 + v2;
    let mul = |a: i128, b: i128| a.checked_mul(b).ok_or_else(overflow);
    let cross = mul(mul(2 * (n - 4), b1)?, b2)?;
    let within = |s: i128, b: i128, other: i128| -> Result<i128> {
        mul(s, other * (other - 2))?
            .checked_add(mul(c2(b), other)?)
            .ok_or_else(overflow)
    };
    let total = [within(s1, b1, v2)?, within(s2, b2, v1)?]
        .into_iter()
        .try_fold(cross, i128::checked_add)
        .ok_or_else(overflow)?;
    u128::try_from(total).map_err(|_| {
        Error::PreconditionViolated(format!(
            "formula is negative ({total}) for parts of {v1} and {v2} vertices"
        ))
    })
}

fn sum_c2(degrees: &[usize]) -> Count {
    degrees.iter().map(|&d| crate::counting::choose2(d as u128)).sum()
}

/// `f` evaluated on the degrees prescribed by `spec`.
pub fn f_value(spec: &PartitionSpec) -> Result<Count> {
    spec.validate()?;
    f_core(
        spec.v1,
        spec.v2,
        spec.bad_edges(1),
        spec.bad_edges(2),
        sum_c2(spec.part(1)),
        sum_c2(spec.part(2)),
    )
}

/// The bowtie count of a `T_2`-like graph with triangle-free parts, from
/// its within-part degrees. Same algebra as [`f_value`].
pub fn count_formula_extremal(
    v1: usize,
    v2: usize,
    b1: usize,
    b2: usize,
    part1_degrees: &[usize],
    part2_degrees: &[usize],
) -> Result<Count> {
    for (i, (v, b, d)) in [(v1, b1, part1_degrees), (v2, b2, part2_degrees)].into_iter().enumerate() {
        if d.len() != v || d.iter().sum::<usize>() != 2 * b {
            return Err(Error::PreconditionViolated(format!(
                "part {} degrees do not describe {b} edges on {v} vertices",
                i + 1
            )));
        }
    }
    f_core(v1, v2, b1, b2, sum_c2(part1_degrees), sum_c2(part2_degrees))
}

/// `Σ C(d, 2)` over the near-regular rounding of `2b` on `v` vertices.
pub fn near_regular_c2_sum(v: usize, b: usize) -> Count {
    if v == 0 {
        return 0;
    }
    let (d, r) = ((2 * b / v) as u128, (2 * b % v) as u128);
    r * crate::counting::choose2(d + 1) + (v as u128 - r) * crate::counting::choose2(d)
}

/// `f` with both parts near-regular.
pub fn f_near_regular(v1: usize, v2: usize, b1: usize, b2: usize) -> Result<Count> {
    f_core(v1, v2, b1, b2, near_regular_c2_sum(v1, b1), near_regular_c2_sum(v2, b2))
}

/// `2(q+1) = dn + m` with `0 <= m < n`, and the split `e1 + e2 = q + 1`
/// with `e1 = ⌊dn/4 + min(m, n/2)/2⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaParams {
    pub n: usize,
    pub q: usize,
    pub d: usize,
    pub m: usize,
    pub e1: usize,
    pub e2: usize,
}

impl FormulaParams {
    pub fn new(n: usize, q: usize) -> Result<Self> {
        ex_bowtie(n)?;
        let twice = 2 * (q + 1);
        let (d, m) = (twice / n, twice % n);
        let e1 = (d * n + (2 * m).min(n)) / 4;
        Ok(FormulaParams { n, q, d, m, e1, e2: q + 1 - e1 })
    }
}

/// `(n/2) [C(e1,2) + C(e2,2) + m C(d+1,2) n/2 + (n−m) C(d,2) n/2 + 4 e1 e2]`,
/// rounded half-up when it is not an integer.
pub fn asymptotic_h(p: &FormulaParams) -> Result<Count> {
    let c = |x: usize| crate::counting::choose2(x as u128);
    let (n, m) = (p.n as u128, p.m as u128);
    let (e1, e2) = (p.e1 as u128, p.e2 as u128);
    let terms = [
        Some(2 * c(p.e1)),
        Some(2 * c(p.e2)),
        m.checked_mul(c(p.d + 1)).and_then(|x| x.checked_mul(n)),
        (n - m).checked_mul(c(p.d)).and_then(|x| x.checked_mul(n)),
        e1.checked_mul(e2).and_then(|x| x.checked_mul(8)),
    ];
    let twice_bracket = terms
        .into_iter()
        .try_fold(0u128, |acc, t| acc.checked_add(t?))
        .ok_or_else(overflow)?;
    let scaled = twice_bracket.checked_mul(n).ok_or_else(overflow)?;
    Ok((scaled + 2) / 4)
}

/// `⌊9 q² n / 8⌋`, the leading term when `n ≪ q ≪ n²`.
pub fn asymptotic_h_simple(n: usize, q: usize) -> Count {
    9 * (q as u128).pow(2) * n as u128 / 8
}

/// `⌊(q+1)² (13n/4 + 13)⌋`, valid for `q <= n²/20`.
pub fn upper_bound_value(n: usize, q: usize) -> Result<Count> {
    if 20 * q as u128 > (n as u128).pow(2) {
        return Err(Error::RegimeViolated(format!("q = {q} exceeds n²/20 for n = {n}")));
    }
    Ok((q as u128 + 1).pow(2) * (13 * n as u128 + 52) / 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_examples() {
        let spec = PartitionSpec::new(4, 4, vec![1, 1, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(f_value(&spec), Ok(0));
        let spec = PartitionSpec::new(4, 4, vec![1, 1, 1, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(f_value(&spec), Ok(4));
        let spec = PartitionSpec::new(3, 2, vec![1, 2, 1, 0, 0]).unwrap();
        assert_eq!(f_value(&spec), Ok(2));
    }

    #[test]
    fn count_formula_examples() {
        assert_eq!(count_formula_extremal(3, 3, 1, 1, &[1, 1, 0], &[1, 1, 0]), Ok(4));
        assert_eq!(count_formula_extremal(3, 3, 2, 0, &[1, 2, 1], &[0, 0, 0]), Ok(6));
        assert!(count_formula_extremal(3, 3, 2, 0, &[1, 1, 1], &[0, 0, 0]).is_err());
        assert_eq!(f_near_regular(3, 3, 2, 0), Ok(6));
    }

    #[test]
    fn negative_formula_is_rejected() {
        // Σ C(d,2) larger than C(b,2) cannot come from a real degree
        // sequence, and with one vertex opposite it drives f below zero
        assert!(matches!(
            f_core(4, 1, 1, 0, 5, 0),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn params_and_asymptotics() {
        let p = FormulaParams::new(100, 60).unwrap();
        assert_eq!((p.d, p.m, p.e1, p.e2), (1, 22, 36, 25));
        assert_eq!(asymptotic_h(&p), Ok(281_500));
        let p = FormulaParams::new(100, 0).unwrap();
        assert_eq!((p.d, p.m, p.e1, p.e2), (0, 2, 1, 0));
        assert_eq!(asymptotic_h(&p), Ok(0));
        assert!(FormulaParams::new(4, 0).is_err());
    }

    #[test]
    fn simple_and_upper_bound() {
        assert_eq!(asymptotic_h_simple(1000, 100), 11_250_000);
        assert_eq!(asymptotic_h_simple(50, 0), 0);
        assert_eq!(upper_bound_value(100, 3), Ok(5408));
        assert_eq!(upper_bound_value(20, 0), Ok(78));
        assert!(matches!(upper_bound_value(10, 6), Err(Error::RegimeViolated(_))));
    }
}
