//! Membership and structural facts for the class `S_p`.
//!
//! Fix an odd `p = 2h + 1 >= 3`. A partition belongs to `S_p` when it is
//! p-strict, satisfies the h-step gap condition
//! `lambda_i - lambda_{i+h} >= p`, and avoids three families of two-part
//! configurations indexed by `k` and a distance `d`:
//!
//! - (S3)  `lambda_i = pk + d`   and `lambda_{i+d}   = pk - d`        (k >= 1),
//! - (S4)  `lambda_i = pk + h+d` and `lambda_{i+d}   = pk + h+1-d`    (k >= 0),
//! - (S5)  `lambda_i = pk + p+d` and `lambda_{i+h+d} = pk - d`        (k >= 1).
//!
//! Three equivalent readings are implemented independently and kept apart
//! on purpose: `sp_membership` uses the redundant index ranges
//! (`1 <= d <= h` for (S3)/(S4), `0 <= d <= h` for (S5)), the theorem form
//! trims the ranges to `d < h` and compensates by sharpening the gap
//! inequality at multiples of `p`, and the compact form recognises the bad
//! configurations by sum and difference alone: a pair `lambda_i, lambda_j`
//! with `lambda_i + lambda_j` divisible by `p` is forbidden exactly when
//! `lambda_i - lambda_j` is `2(j-i)` or `2(j-i)-1` (for `j-i < h`) or
//! `2(j-i)+1` (for `h <= j-i <= 2h`). Their pointwise agreement is a test
//! target, not an implementation shortcut.

use thiserror::Error;

use crate::classes::{is_a_strict, is_andrews_b, AndrewsParams};
use crate::partitions::{OddModulus, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpError {
    #[error("operation requires membership in S_{p}, but {lam} is not a member")]
    NotMember { p: u64, lam: String },
}

/// Membership via the five conditions with redundant index ranges.
pub fn sp_membership(lam: &Partition, m: &OddModulus) -> bool {
    let (p, h) = (m.p(), m.h());
    if !is_a_strict(lam, p) {
        return false;
    }
    let l = lam.len();
    // (S2)': h-step gap
    for i in 1..=l.saturating_sub(h as usize) {
        if lam.part(i) - lam.part(i + h as usize) < p {
            return false;
        }
    }
    for i in 1..=l {
        let v1 = lam.part(i);
        let max_gap = (2 * h) as usize;
        for g in 1..=max_gap.min(l - i) {
            let v2 = lam.part(i + g);
            let d = g as u64;
            if d <= h {
                // (S3): v1 = pk + d, v2 = pk - d with k >= 1
                if v1 > d && (v1 - d) % p == 0 {
                    let k = (v1 - d) / p;
                    if k >= 1 && v2 + d == p * k {
                        return false;
                    }
                }
                // (S4): v1 = pk + h + d, v2 = pk + h + 1 - d with k >= 0
                if v1 >= h + d && (v1 - h - d) % p == 0 {
                    let k = (v1 - h - d) / p;
                    if p * k + h + 1 == v2 + d {
                        return false;
                    }
                }
            }
            if d >= h {
                // (S5): v1 = pk + p + d', v2 = pk - d' at distance h + d',
                // with d' = g - h and k >= 1
                let dp = d - h;
                if v1 >= p + dp && (v1 - p - dp) % p == 0 {
                    let k = (v1 - p - dp) / p;
                    if k >= 1 && v2 + dp == p * k {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Membership via the trimmed ranges `1 <= d < h` plus the sharpened gap
/// condition: `lambda_i - lambda_{i+h} > p` whenever `lambda_i` is a
/// multiple of `p`.
pub fn sp_membership_theorem_form(lam: &Partition, m: &OddModulus) -> bool {
    let (p, h) = (m.p(), m.h());
    if !is_a_strict(lam, p) {
        return false;
    }
    let l = lam.len();
    for i in 1..=l.saturating_sub(h as usize) {
        let v1 = lam.part(i);
        let diff = v1 - lam.part(i + h as usize);
        if diff < p || (diff == p && v1 % p == 0) {
            return false;
        }
    }
    for i in 1..=l {
        let v1 = lam.part(i);
        for d in 1..h {
            // (S3)
            if (i + d as usize) <= l && v1 > d && (v1 - d) % p == 0 {
                let k = (v1 - d) / p;
                if k >= 1 && lam.part(i + d as usize) + d == p * k {
                    return false;
                }
            }
            // (S4)
            if (i + d as usize) <= l && v1 >= h + d && (v1 - h - d) % p == 0 {
                let k = (v1 - h - d) / p;
                if p * k + h + 1 == lam.part(i + d as usize) + d {
                    return false;
                }
            }
            // (S5)
            if (i + (h + d) as usize) <= l && v1 >= p + d && (v1 - p - d) % p == 0 {
                let k = (v1 - p - d) / p;
                if k >= 1 && lam.part(i + (h + d) as usize) + d == p * k {
                    return false;
                }
            }
        }
    }
    true
}

/// Membership via the sum/difference reading of the forbidden pairs.
pub fn sp_membership_compact(lam: &Partition, m: &OddModulus) -> bool {
    let (p, h) = (m.p(), m.h());
    if !is_a_strict(lam, p) {
        return false;
    }
    let l = lam.len();
    for i in 1..=l.saturating_sub(h as usize) {
        if lam.part(i) - lam.part(i + h as usize) < p {
            return false;
        }
    }
    for i in 1..=l {
        let v1 = lam.part(i);
        for j in (i + 1)..=l.min(i + 2 * h as usize) {
            let v2 = lam.part(j);
            if (v1 + v2) % p != 0 {
                continue;
            }
            let g = (j - i) as u64;
            let diff = v1 - v2;
            if g < h && (diff == 2 * g || diff == 2 * g - 1) {
                return false;
            }
            if g >= h && diff == 2 * g + 1 {
                return false;
            }
        }
    }
    true
}

/// Window-local membership: every two-block restriction
/// `restrict(lambda, (j-1)p - h, jp + h)` for `j >= 1` must itself lie in
/// `S_p`; this recovers global membership.
pub fn sp_local_membership(lam: &Partition, m: &OddModulus) -> bool {
    let (p, h) = (m.p() as i64, m.h() as i64);
    let top = lam.max_part() as i64;
    let mut j = 1i64;
    while (j - 1) * p - h <= top {
        let window = lam.restrict((j - 1) * p - h, j * p + h);
        if !sp_membership(&window, m) {
            return false;
        }
        j += 1;
    }
    true
}

/// The strengthened multiplicity bounds that hold on all of `S_p`: for every
/// `j >= 0`,
/// (1) `sum_{k = jp+h+1-d}^{jp+h+d} m_k <= d` for `1 <= d <= h`, and
/// (2) `sum_{k = jp-d}^{jp+p+d} m_k <= h + d` for `0 <= d <= h`.
///
/// Errors if the precondition `lam` in `S_p` fails.
pub fn indnum_bounds_hold(lam: &Partition, m: &OddModulus) -> Result<bool, SpError> {
    if !sp_membership(lam, m) {
        return Err(SpError::NotMember {
            p: m.p(),
            lam: lam.to_string(),
        });
    }
    let (p, h) = (m.p() as i64, m.h() as i64);
    let top = lam.max_part() as i64;
    let window_sum = |lo: i64, hi: i64| -> i64 {
        (lo.max(1)..=hi)
            .map(|v| lam.multiplicity(v as u64) as i64)
            .sum()
    };
    let mut j = 0i64;
    while j * p <= top + p {
        for d in 1..=h {
            if window_sum(j * p + h + 1 - d, j * p + h + d) > d {
                return Ok(false);
            }
        }
        for d in 0..=h {
            if window_sum(j * p - d, j * p + p + d) > h + d {
                return Ok(false);
            }
        }
        j += 1;
    }
    Ok(true)
}

/// `S_p` is contained in Andrews' gap class `B_{p-1, h+1, h+1}`; returns
/// whether the implication holds for this particular partition.
pub fn andrews_b_envelope_holds(lam: &Partition, m: &OddModulus) -> bool {
    if !sp_membership(lam, m) {
        return true;
    }
    let prm = AndrewsParams::new(m.p() - 1, m.h() + 1, m.h() + 1)
        .expect("p-1, h+1, h+1 are always admissible");
    is_andrews_b(lam, &prm)
}

fn extension_ok(m: &OddModulus, prefix: &[u64], v: u64) -> bool {
    let (p, h) = (m.p(), m.h());
    let l = prefix.len();
    if let Some(&last) = prefix.last() {
        if v == last && v % p != 0 {
            return false;
        }
    }
    // gap condition against the part h positions above
    if l >= h as usize && prefix[l - h as usize] - v < p {
        return false;
    }
    // pair conditions where the new part is the lower element
    let max_gap = (2 * h) as usize;
    for g in 1..=max_gap.min(l) {
        let v1 = prefix[l - g];
        let d = g as u64;
        if d <= h {
            if v1 > d && (v1 - d) % p == 0 {
                let k = (v1 - d) / p;
                if k >= 1 && v + d == p * k {
                    return false;
                }
            }
            if v1 >= h + d && (v1 - h - d) % p == 0 {
                let k = (v1 - h - d) / p;
                if p * k + h + 1 == v + d {
                    return false;
                }
            }
        }
        if d >= h {
            let dp = d - h;
            if v1 >= p + dp && (v1 - p - dp) % p == 0 {
                let k = (v1 - p - dp) / p;
                if k >= 1 && v + dp == p * k {
                    return false;
                }
            }
        }
    }
    true
}

/// Visits every member of `S_p` with size at most `max_n` exactly once.
///
/// Candidates descend over p-strict part choices and are pruned by the same
/// pair conditions that define the class; since every prefix of a member is
/// a member, the recursion tree is exactly the set being enumerated.
pub fn for_each_sp_upto(m: &OddModulus, max_n: u64, visit: &mut dyn FnMut(&[u64], u64)) {
    fn rec(
        m: &OddModulus,
        prefix: &mut Vec<u64>,
        sum: u64,
        max_n: u64,
        visit: &mut dyn FnMut(&[u64], u64),
    ) {
        visit(prefix, sum);
        let cap = prefix.last().copied().unwrap_or(max_n).min(max_n - sum);
        for v in (1..=cap).rev() {
            if extension_ok(m, prefix, v) {
                prefix.push(v);
                rec(m, prefix, sum + v, max_n, visit);
                prefix.pop();
            }
        }
    }
    let mut prefix = Vec::new();
    rec(m, &mut prefix, 0, max_n, visit);
}

/// All members of `S_p` of size exactly `n`, lexicographically decreasing.
pub fn enumerate_sp(m: &OddModulus, n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_sp_upto(m, n, &mut |prefix, sum| {
        if sum == n {
            out.push(Partition::new(prefix.to_vec()).expect("enumerated prefix is sorted"));
        }
    });
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `|S_p(n)|` for all `n <= max_n` in a single sweep.
pub fn sp_counts_upto(m: &OddModulus, max_n: u64) -> Vec<u64> {
    let mut tally = vec![0u64; max_n as usize + 1];
    for_each_sp_upto(m, max_n, &mut |_, sum| tally[sum as usize] += 1);
    tally
}

/// Members of `S_p` of each size `0..=max_n`, grouped by size.
pub fn enumerate_sp_by_size(m: &OddModulus, max_n: u64) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new(); max_n as usize + 1];
    for_each_sp_upto(m, max_n, &mut |prefix, sum| {
        out[sum as usize]
            .push(Partition::new(prefix.to_vec()).expect("enumerated prefix is sorted"));
    });
    for layer in &mut out {
        layer.sort_unstable_by(|a, b| b.cmp(a));
    }
    out
}

/// All p-strict partitions supported on `[lo, hi]` with at most `max_len`
/// parts (`max_len = h` gives the auxiliary window domain).
pub fn enumerate_window_p_strict(
    m: &OddModulus,
    lo: i64,
    hi: i64,
    max_len: usize,
) -> Vec<Partition> {
    let p = m.p();
    let lo = lo.max(1) as u64;
    if hi < lo as i64 {
        return vec![Partition::empty()];
    }
    let hi = hi as u64;
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    fn rec(
        p: u64,
        v: u64,
        lo: u64,
        max_len: usize,
        current: &mut Vec<u64>,
        out: &mut Vec<Partition>,
    ) {
        if v < lo {
            out.push(Partition::new(current.clone()).expect("sorted window parts"));
            return;
        }
        let budget = max_len - current.len();
        let max_copies = if v % p == 0 { budget } else { budget.min(1) };
        for copies in (0..=max_copies).rev() {
            for _ in 0..copies {
                current.push(v);
            }
            rec(p, v - 1, lo, max_len, current, out);
            for _ in 0..copies {
                current.pop();
            }
        }
    }
    rec(p, hi, lo, max_len, &mut current, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// The members of `S_p` supported on `[lo, hi]`.
pub fn enumerate_sp_window(m: &OddModulus, lo: i64, hi: i64) -> Vec<Partition> {
    // ceil to the longest conceivable window member: h per block window
    let width_blocks = ((hi - lo).max(0) as u64 / m.p() + 2) as usize;
    enumerate_window_p_strict(m, lo, hi, width_blocks * m.h() as usize)
        .into_iter()
        .filter(|lam| sp_membership(lam, m))
        .collect()
}
