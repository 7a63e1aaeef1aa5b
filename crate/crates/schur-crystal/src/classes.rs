//! Classical partition classes and a shared backtracking enumerator.
//!
//! Predicates here are the textbook side of the equinumerosity statements:
//! strict / a-strict / a-regular / a-class-regular partitions, the
//! Rogers-Ramanujan classes R, R' and T_{a,b}, Andrews' three-parameter
//! families A_{l,k,a} and B_{l,k,a}, the refined class B°_{4,3,3}, the
//! arithmetic descriptions of Schur_3 and Schur_5, and the restricted
//! p-strict class RP_p.
//!
//! Every class in this file is decided by inequalities on part values,
//! multiplicities and congruences alone. Enumeration goes part-by-part in
//! decreasing order; all the conditions are stable under appending smaller
//! parts, so prefixes can be pruned exactly.

use thiserror::Error;

use crate::partitions::{OddModulus, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("parameter a must be >= 1")]
    BadStrictness,
    #[error("T_{{a,b}} needs 1 <= a and 2*a <= b, got a={a}, b={b}")]
    BadCongruenceClass { a: u64, b: u64 },
    #[error("Andrews parameters need l/2 < a <= k and k >= l, got l={l}, k={k}, a={a}")]
    BadAndrewsParams { l: u64, k: u64, a: u64 },
}

/// `m_i(lambda) <= 1` for all `i`.
pub fn is_strict(lam: &Partition) -> bool {
    lam.parts().windows(2).all(|w| w[0] > w[1])
}

/// Repeated part values must be multiples of `a`.
pub fn is_a_strict(lam: &Partition, a: u64) -> bool {
    debug_assert!(a >= 1);
    lam.parts()
        .windows(2)
        .all(|w| w[0] > w[1] || w[0] % a == 0)
}

/// `m_i(lambda) < a` for all `i`.
pub fn is_a_regular(lam: &Partition, a: u64) -> bool {
    if a == 0 {
        return lam.is_empty();
    }
    lam.multiplicity_map().values().all(|&c| c < a)
}

/// No part divisible by `a`.
pub fn is_a_class_regular(lam: &Partition, a: u64) -> bool {
    debug_assert!(a >= 1);
    lam.parts().iter().all(|&v| v % a != 0)
}

/// `D_p`: strict partitions with no part divisible by `p`.
pub fn is_d_class(lam: &Partition, m: &OddModulus) -> bool {
    is_strict(lam) && is_a_class_regular(lam, m.p())
}

/// `R`: adjacent parts differ by at least 2 (the classical
/// Rogers-Ramanujan gap condition).
pub fn is_rr_gap(lam: &Partition) -> bool {
    lam.parts().windows(2).all(|w| w[0] - w[1] >= 2)
}

/// `R'`: members of `R` with no part equal to 1.
pub fn is_rr_gap_prime(lam: &Partition) -> bool {
    is_rr_gap(lam) && lam.multiplicity(1) == 0
}

/// `T_{a,b}`: partitions whose parts are congruent to `+-a` mod `b`.
pub fn is_congruence_class(lam: &Partition, a: u64, b: u64) -> bool {
    debug_assert!(a >= 1 && b > a);
    lam.parts()
        .iter()
        .all(|&v| v % b == a % b || v % b == (b - a % b) % b)
}

/// Parameters `(l, k, a)` for the three-parameter families. Both class
/// formulas make sense whenever `l/2 < a` and `k >= 1`; the equinumerosity
/// theorem additionally asks for `a <= k >= l`, which refined classes like
/// the one at `(4, 3, 3)` deliberately violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AndrewsParams {
    pub l: u64,
    pub k: u64,
    pub a: u64,
}

impl AndrewsParams {
    pub fn new(l: u64, k: u64, a: u64) -> Result<Self, ClassError> {
        // l/2 < a as integers: 2a > l
        if 2 * a <= l || k == 0 {
            return Err(ClassError::BadAndrewsParams { l, k, a });
        }
        Ok(AndrewsParams { l, k, a })
    }

    /// Whether the pair of classes is covered by the equinumerosity theorem.
    pub fn theorem_applies(&self) -> bool {
        self.a <= self.k && self.k >= self.l
    }
}

/// `A_{l,k,a}`: the congruence side of Andrews' theorem. For even `l` these
/// are `(l+1)`-strict partitions avoiding the residues `0, +-(2a-l)(l+1)/2`
/// mod `(2k-l+1)(l+1)`; odd `l` additionally switches to `(l+1)/2`-strict
/// and excludes parts `l+1` mod `2(l+1)`.
pub fn is_andrews_a(lam: &Partition, prm: &AndrewsParams) -> bool {
    let AndrewsParams { l, k, a } = *prm;
    let modulus = (2 * k - l + 1) * (l + 1);
    let res = ((2 * a - l) * (l + 1) / 2) % modulus;
    let excluded = |v: u64| {
        let r = v % modulus;
        r == 0 || r == res || r == (modulus - res) % modulus
    };
    let strictness_ok = if l % 2 == 0 {
        is_a_strict(lam, l + 1)
    } else {
        is_a_strict(lam, (l + 1) / 2) && lam.parts().iter().all(|&v| v % (2 * (l + 1)) != l + 1)
    };
    strictness_ok && !lam.parts().iter().any(|&v| excluded(v))
}

/// `B_{l,k,a}`: the gap side. `(l+1)`-strict with
/// (B1) `lambda_i - lambda_{i+k-1} >= l+1`, strictly when `lambda_i` is a
///      multiple of `l+1`, and
/// (B2) `sum_{i=1}^{l+1} m_i <= a-1` together with
///      `sum_{i=j}^{l-j+1} m_i <= a-j` for `1 <= j <= (l+1)/2`.
pub fn is_andrews_b(lam: &Partition, prm: &AndrewsParams) -> bool {
    let AndrewsParams { l, k, a } = *prm;
    if !is_a_strict(lam, l + 1) {
        return false;
    }
    if k >= 1 {
        let gap = (k - 1) as usize;
        for i in 1..=lam.len().saturating_sub(gap) {
            let hi = lam.part(i);
            let lo = lam.part(i + gap);
            let diff = hi - lo;
            if diff < l + 1 || (diff == l + 1 && hi % (l + 1) == 0) {
                return false;
            }
        }
    }
    let window_sum = |lo: u64, hi: u64| -> u64 {
        if lo > hi {
            0
        } else {
            (lo..=hi).map(|v| lam.multiplicity(v)).sum()
        }
    };
    if a == 0 || window_sum(1, l + 1) > a - 1 {
        return false;
    }
    for j in 1..=(l + 1) / 2 {
        if l + 1 < j + j {
            break;
        }
        if a < j || window_sum(j, l + 1 - j) > a - j {
            return false;
        }
    }
    true
}

/// `B°_{4,3,3}`: 5-strict partitions with the refined conditions
/// (C1) `lambda_i - lambda_{i+2} >= 5`, strictly when `lambda_i` is a
///      multiple of 5, and for every `j >= 0`
/// (C2) `m_{5j+3} + m_{5j+2} <= 1`,
/// (C3) `m_{5j+6} + m_{5j+4} <= 1`,
/// (C4) `m_{5j+11} + m_{5j+10} + m_{5j+5} + m_{5j+4} <= 3`.
pub fn is_b433_refined(lam: &Partition) -> bool {
    if !is_a_strict(lam, 5) {
        return false;
    }
    for i in 1..=lam.len().saturating_sub(2) {
        let hi = lam.part(i);
        let diff = hi - lam.part(i + 2);
        if diff < 5 || (diff == 5 && hi % 5 == 0) {
            return false;
        }
    }
    let m = |v: u64| lam.multiplicity(v);
    let top = lam.max_part();
    for j in 0..=top / 5 + 1 {
        let b = 5 * j;
        if m(b + 3) + m(b + 2) > 1 {
            return false;
        }
        if m(b + 6) + m(b + 4) > 1 {
            return false;
        }
        if m(b + 11) + m(b + 10) + m(b + 5) + m(b + 4) > 3 {
            return false;
        }
    }
    true
}

/// `Schur_3`: adjacent gaps at least 3, strictly below a multiple of 3.
pub fn is_schur3(lam: &Partition) -> bool {
    for i in 1..lam.len() {
        let hi = lam.part(i);
        let diff = hi - lam.part(i + 1);
        if diff < 3 || (diff == 3 && hi % 3 == 0) {
            return false;
        }
    }
    true
}

/// The subpatterns excluded by `Schur_5` besides its gap condition:
/// `(3,2)`, `(11,9,5)`, `(10,6,4)`, `(11,10,5,4)` and their 5-step shifts.
pub const SCHUR5_PATTERNS: [&[u64]; 4] = [&[3, 2], &[11, 9, 5], &[10, 6, 4], &[11, 10, 5, 4]];

/// True iff `lam` contains `Shift^k_step(pattern)` as consecutive parts for
/// some `k >= 0`.
pub fn matches_shifted_pattern(lam: &Partition, pattern: &Partition, step: u64) -> bool {
    if pattern.is_empty() {
        return true;
    }
    let mut k = 0i64;
    loop {
        let shifted = match pattern.shift(step, k) {
            Ok(s) => s,
            Err(_) => return false,
        };
        if shifted.min_part() > lam.max_part() {
            return false;
        }
        if lam.matches_subpattern(&shifted) {
            return true;
        }
        k += 1;
    }
}

/// `Schur_5`: strict partitions with
/// (D1) `lambda_i - lambda_{i+2} >= 5`, strictly when `lambda_i` or
///      `lambda_i + lambda_{i+1}` is a multiple of 5, and
/// (D2) avoiding all 5-step shifts of the four base subpatterns.
pub fn is_schur5(lam: &Partition) -> bool {
    if !is_strict(lam) {
        return false;
    }
    for i in 1..=lam.len().saturating_sub(2) {
        let hi = lam.part(i);
        let diff = hi - lam.part(i + 2);
        let strict_needed = hi % 5 == 0 || (hi + lam.part(i + 1)) % 5 == 0;
        if diff < 5 || (diff == 5 && strict_needed) {
            return false;
        }
    }
    SCHUR5_PATTERNS.iter().all(|pat| {
        let pattern = Partition::new(pat.to_vec()).expect("static pattern");
        !matches_shifted_pattern(lam, &pattern, 5)
    })
}

/// `RP_p`: p-strict partitions with `lambda_i - lambda_{i+1} <= p` for all
/// `i <= l(lambda)` (reading `lambda_{l+1} = 0`), strictly when `lambda_i`
/// is a multiple of `p`.
pub fn is_restricted_p_strict(lam: &Partition, m: &OddModulus) -> bool {
    let p = m.p();
    if !is_a_strict(lam, p) {
        return false;
    }
    for i in 1..=lam.len() {
        let hi = lam.part(i);
        let diff = hi - lam.part(i + 1);
        if diff > p || (diff == p && hi % p == 0) {
            return false;
        }
    }
    true
}

/// Backtracking enumeration of partitions of every size up to `max_n`.
///
/// `step_ok(prefix, next)` decides whether `next` may be appended below the
/// current prefix; it is called with `next <= prefix.last()`. `emit_ok`
/// filters complete partitions (conditions that only bind at the boundary,
/// like the last-part rule of `RP_p`). The visitor receives each accepted
/// partition exactly once, in lexicographically decreasing order per size
/// class interleaved across sizes.
pub fn for_each_partition_upto(
    max_n: u64,
    step_ok: &dyn Fn(&[u64], u64) -> bool,
    emit_ok: &dyn Fn(&[u64]) -> bool,
    visit: &mut dyn FnMut(&[u64], u64),
) {
    fn rec(
        prefix: &mut Vec<u64>,
        sum: u64,
        max_n: u64,
        step_ok: &dyn Fn(&[u64], u64) -> bool,
        emit_ok: &dyn Fn(&[u64]) -> bool,
        visit: &mut dyn FnMut(&[u64], u64),
    ) {
        if emit_ok(prefix) {
            visit(prefix, sum);
        }
        let cap = prefix.last().copied().unwrap_or(max_n).min(max_n - sum);
        for v in (1..=cap).rev() {
            if !step_ok(prefix, v) {
                continue;
            }
            prefix.push(v);
            rec(prefix, sum + v, max_n, step_ok, emit_ok, visit);
            prefix.pop();
        }
    }
    let mut prefix = Vec::new();
    rec(&mut prefix, 0, max_n, step_ok, emit_ok, visit);
}

/// Counts per size `0..=max_n` for a class described by its step filter,
/// emission filter, and (for safety) a final predicate re-check.
pub fn tally_upto(
    max_n: u64,
    step_ok: &dyn Fn(&[u64], u64) -> bool,
    emit_ok: &dyn Fn(&[u64]) -> bool,
) -> Vec<u64> {
    let mut tally = vec![0u64; max_n as usize + 1];
    for_each_partition_upto(max_n, step_ok, emit_ok, &mut |_, sum| {
        tally[sum as usize] += 1;
    });
    tally
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parts;

    fn p(v: u64) -> OddModulus {
        OddModulus::new(v).unwrap()
    }

    #[test]
    fn d_class_examples() {
        assert!(!is_d_class(&parts(&[7, 3]), &p(7)));
        assert!(is_d_class(&parts(&[8, 3]), &p(7)));
        assert!(!is_d_class(&parts(&[8, 8]), &p(7)));
    }

    #[test]
    fn schur3_examples() {
        assert!(!is_schur3(&parts(&[6, 3])));
        assert!(is_schur3(&parts(&[7, 3])));
        assert!(is_schur3(&parts(&[6, 2])));
        assert!(!is_schur3(&parts(&[9, 6, 3])));
    }

    #[test]
    fn schur5_examples() {
        // (D2) base patterns match themselves
        assert!(!is_schur5(&parts(&[3, 2])));
        assert!(!is_schur5(&parts(&[11, 9, 5])));
        assert!(!is_schur5(&parts(&[16, 14, 10])));
        // (D1) strictness trigger: 11 + 9 = 20 is a multiple of 5
        assert!(!is_schur5(&parts(&[11, 9, 6])));
        assert!(is_schur5(&parts(&[11, 9, 4])));
        assert!(is_schur5(&parts(&[12, 9, 6])));
    }

    #[test]
    fn rr_classes() {
        assert!(is_rr_gap(&parts(&[5, 2])));
        assert!(!is_rr_gap(&parts(&[5, 4])));
        assert!(!is_rr_gap_prime(&parts(&[3, 1])));
        assert!(is_congruence_class(&parts(&[6, 1, 1]), 1, 5));
        assert!(!is_congruence_class(&parts(&[3, 1]), 1, 5));
        assert!(is_congruence_class(&parts(&[8, 3, 2]), 2, 5));
    }

    #[test]
    fn andrews_ab_duplicate_rr() {
        // (l,k,a) = (0,2,2) reproduces R and T_{1,5}
        let prm = AndrewsParams::new(0, 2, 2).unwrap();
        for n in 0..=18u64 {
            let via_b = tally_upto(n, &|pre, v| pre.last().map_or(true, |&l| l >= v), &|pre| {
                is_andrews_b(&Partition::new(pre.to_vec()).unwrap(), &prm)
            });
            let via_r = tally_upto(n, &|pre, v| pre.last().map_or(true, |&l| l >= v), &|pre| {
                is_rr_gap(&Partition::new(pre.to_vec()).unwrap())
            });
            assert_eq!(via_b[n as usize], via_r[n as usize]);
        }
        assert!(is_andrews_a(&parts(&[6, 1, 1]), &prm));
        assert!(!is_andrews_a(&parts(&[5, 1]), &prm));
    }

    #[test]
    fn andrews_params_validation() {
        assert!(AndrewsParams::new(0, 2, 2).is_ok());
        let refined = AndrewsParams::new(4, 3, 3).unwrap();
        assert!(!refined.theorem_applies());
        assert!(AndrewsParams::new(2, 2, 2).unwrap().theorem_applies());
        assert!(AndrewsParams::new(2, 3, 1).is_err()); // 2a <= l
    }

    #[test]
    fn b433_examples() {
        // (C2) with j = 0: at most one part from {2, 3}
        assert!(!is_b433_refined(&parts(&[8, 3, 2])));
        assert!(is_b433_refined(&parts(&[8, 3])));
        // (C1) strict gap below a multiple of 5
        assert!(!is_b433_refined(&parts(&[10, 7, 5])));
        assert!(is_b433_refined(&parts(&[11, 7, 5])));
    }

    #[test]
    fn restricted_p_strict_boundary() {
        let m = p(3);
        assert!(is_restricted_p_strict(&parts(&[4, 2]), &m));
        assert!(!is_restricted_p_strict(&parts(&[6]), &m));
        assert!(!is_restricted_p_strict(&parts(&[3, 3]), &m));
        assert!(is_restricted_p_strict(&parts(&[3, 2, 1]), &m));
        assert!(!is_restricted_p_strict(&parts(&[5, 1]), &m));
    }

    #[test]
    fn glaisher_identity_small() {
        // |D_p(n)| equals the number of partitions into odd parts not
        // divisible by p, here checked naively for p = 3, n <= 24.
        let m = p(3);
        let all = |pre: &[u64], v: u64| pre.last().map_or(true, |&l| l >= v) && v > 0;
        let d = tally_upto(24, &all, &|pre| {
            is_d_class(&Partition::new(pre.to_vec()).unwrap(), &m)
        });
        let odd = tally_upto(24, &all, &|pre| {
            pre.iter().all(|&v| v % 2 == 1 && v % 3 != 0)
        });
        assert_eq!(d, odd);
    }

    #[test]
    fn shifted_pattern_matching() {
        let base = parts(&[6, 3]);
        assert!(matches_shifted_pattern(&parts(&[9, 6]), &base, 3));
        assert!(matches_shifted_pattern(&parts(&[10, 9, 6, 2]), &base, 3));
        assert!(matches_shifted_pattern(&parts(&[10, 6, 3]), &base, 3));
        assert!(!matches_shifted_pattern(&parts(&[10, 6, 2]), &base, 3));
    }
}
