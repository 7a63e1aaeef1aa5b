//! Block decomposition `lambda -> (lambda^+, lambda^-)` and its inverse.
//!
//! Fix `p = 2h + 1` and a block index `j >= 0`. The block window is
//! `[jp - h, jp + h]`. On the auxiliary domain (p-strict window partitions
//! with at most `h` parts) define
//!
//! ```text
//! a_i = -i + sum_{k = jp-i}^{jp+i} m_k(lambda),   0 <= i <= h,
//! i0  = min { i : a_i = 0 }.
//! ```
//!
//! The split flips multiplicities across the centre for `i <= i0` and keeps
//! them for `i > i0`:
//!
//! ```text
//! m_{jp+i}(lambda^+) = 1 - m_{jp-i}(lambda)   (i <= i0),   m_{jp+i}(lambda) otherwise,
//! m_{jp-i}(lambda^-) = 1 - m_{jp+i}(lambda)   (i <= i0),   m_{jp-i}(lambda) otherwise.
//! ```
//!
//! The inverse max-selects `j0` from the partial sums `b_i` of the halves,
//! places `b_{j0}` copies of `jp` at the centre, and undoes the flip.
//! Restricted to the `S_p` members of the window these maps are mutually
//! inverse bijections; on the wider auxiliary domain the split is still
//! defined but no longer injective.

use thiserror::Error;

use crate::partitions::{OddModulus, Partition};
use crate::sp_class::sp_membership;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("{lam} is not supported on the block-{j} window [{lo}, {hi}]")]
    OffWindow { lam: String, j: u64, lo: i64, hi: i64 },
    #[error("{lam} is not p-strict for p = {p}")]
    NotPStrict { lam: String, p: u64 },
    #[error("{lam} has {len} parts; the block domain allows at most h = {h}")]
    TooLong { lam: String, len: usize, h: u64 },
    #[error("block 0 has an empty lower half; got nonempty minus component {lam}")]
    NonemptyMinusAtZero { lam: String },
    #[error("component {lam} must be a strict partition on [{lo}, {hi}]")]
    BadComponent { lam: String, lo: i64, hi: i64 },
    #[error("{lam} must be an S_{p} member of its window")]
    NotSpWindowMember { lam: String, p: u64 },
}

/// The data computed while splitting one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSplit {
    pub j: u64,
    /// `a_0 ..= a_h`.
    pub a: Vec<i64>,
    pub i0: usize,
    pub plus: Partition,
    pub minus: Partition,
}

/// The data computed while recombining one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recomposition {
    pub j: u64,
    /// `b_0 ..= b_h`.
    pub b: Vec<i64>,
    pub j0: usize,
    pub result: Partition,
}

pub fn window_bounds(m: &OddModulus, j: u64) -> (i64, i64) {
    let (p, h) = (m.p() as i64, m.h() as i64);
    ((j as i64) * p - h, (j as i64) * p + h)
}

fn check_window_domain(lam: &Partition, m: &OddModulus, j: u64) -> Result<(), BlockError> {
    let (lo, hi) = window_bounds(m, j);
    if !lam.supported_on(lo, hi) {
        return Err(BlockError::OffWindow {
            lam: lam.to_string(),
            j,
            lo,
            hi,
        });
    }
    if !crate::classes::is_a_strict(lam, m.p()) {
        return Err(BlockError::NotPStrict {
            lam: lam.to_string(),
            p: m.p(),
        });
    }
    if lam.len() > m.h() as usize {
        return Err(BlockError::TooLong {
            lam: lam.to_string(),
            len: lam.len(),
            h: m.h(),
        });
    }
    Ok(())
}

/// The a-profile `a_0 ..= a_h` of a window partition.
pub fn a_profile(lam: &Partition, m: &OddModulus, j: u64) -> Vec<i64> {
    let (p, h) = (m.p() as i64, m.h() as i64);
    let c = (j as i64) * p;
    (0..=h)
        .map(|i| {
            let sum: i64 = (c - i..=c + i)
                .filter(|&v| v >= 1)
                .map(|v| lam.multiplicity(v as u64) as i64)
                .sum();
            sum - i
        })
        .collect()
}

/// Splits one block into its halves, returning the full working data.
pub fn split_block(lam: &Partition, m: &OddModulus, j: u64) -> Result<BlockSplit, BlockError> {
    check_window_domain(lam, m, j)?;
    let (p, h) = (m.p(), m.h());
    let a = a_profile(lam, m, j);
    if j == 0 {
        // a_0 = m_0 = 0 forces i0 = 0: the split is the identity on the
        // clipped window [1, h]
        debug_assert!(a.iter().all(|&x| x <= 0) && a[0] == 0);
        return Ok(BlockSplit {
            j,
            a,
            i0: 0,
            plus: lam.restrict(1, h as i64),
            minus: Partition::empty(),
        });
    }
    let i0 = a
        .iter()
        .position(|&ai| ai == 0)
        .expect("a_0 >= 0, a_h <= 0 and steps lie in {-1,0,1}, so a_i hits 0");
    let c = j * p;
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in 1..=h {
        let (above, below) = (lam.multiplicity(c + i), lam.multiplicity(c - i));
        let (m_plus, m_minus) = if (i as usize) <= i0 {
            (1 - below, 1 - above)
        } else {
            (above, below)
        };
        if m_plus == 1 {
            plus.push(c + i);
        }
        if m_minus == 1 {
            minus.push(c - i);
        }
    }
    plus.sort_unstable_by(|x, y| y.cmp(x));
    minus.sort_unstable_by(|x, y| y.cmp(x));
    Ok(BlockSplit {
        j,
        a,
        i0,
        plus: Partition::new(plus).expect("sorted distinct window values"),
        minus: Partition::new(minus).expect("sorted distinct window values"),
    })
}

/// `lambda -> (lambda^+, lambda^-)` on the block-`j` window.
pub fn decompose(
    lam: &Partition,
    m: &OddModulus,
    j: u64,
) -> Result<(Partition, Partition), BlockError> {
    split_block(lam, m, j).map(|s| (s.plus, s.minus))
}

fn check_half(
    lam: &Partition,
    lo: i64,
    hi: i64,
) -> Result<(), BlockError> {
    if !lam.supported_on(lo, hi) || !crate::classes::is_strict(lam) {
        return Err(BlockError::BadComponent {
            lam: lam.to_string(),
            lo,
            hi,
        });
    }
    Ok(())
}

/// The inverse map on halves, with its working data.
pub fn recompose_full(
    plus: &Partition,
    minus: &Partition,
    m: &OddModulus,
    j: u64,
) -> Result<Recomposition, BlockError> {
    let (p, h) = (m.p(), m.h());
    if j == 0 {
        if !minus.is_empty() {
            return Err(BlockError::NonemptyMinusAtZero {
                lam: minus.to_string(),
            });
        }
        check_half(plus, 1, h as i64)?;
        return Ok(Recomposition {
            j,
            b: vec![0; h as usize + 1],
            j0: 0,
            result: plus.clone(),
        });
    }
    let c = j * p;
    check_half(plus, c as i64 + 1, (c + h) as i64)?;
    check_half(minus, (c - h) as i64, c as i64 - 1)?;
    let b: Vec<i64> = (0..=h as i64)
        .map(|i| {
            let above: i64 = (1..=i).map(|t| plus.multiplicity(c + t as u64) as i64).sum();
            let below: i64 = (1..=i).map(|t| minus.multiplicity(c - t as u64) as i64).sum();
            above + below - i
        })
        .collect();
    let bmax = *b.iter().max().expect("nonempty profile");
    let j0 = b.iter().position(|&bi| bi == bmax).expect("max is attained");
    let mut parts = Vec::new();
    debug_assert!(bmax >= 0, "b_0 = 0 keeps the maximum non-negative");
    for _ in 0..bmax {
        parts.push(c);
    }
    for i in 1..=h {
        let (above, below) = (plus.multiplicity(c + i), minus.multiplicity(c - i));
        let (m_above, m_below) = if (i as usize) <= j0 {
            (1 - below, 1 - above)
        } else {
            (above, below)
        };
        if m_above == 1 {
            parts.push(c + i);
        }
        if m_below == 1 {
            parts.push(c - i);
        }
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Ok(Recomposition {
        j,
        b,
        j0,
        result: Partition::new(parts).expect("sorted window values"),
    })
}

/// `Theta_j(plus, minus)`: the recombined block partition.
pub fn recompose(
    plus: &Partition,
    minus: &Partition,
    m: &OddModulus,
    j: u64,
) -> Result<Partition, BlockError> {
    recompose_full(plus, minus, m, j).map(|r| r.result)
}

/// Window characterisation: a window partition in the auxiliary domain lies
/// in `S_p` iff no `d` has `a_d = 1` and `a_{d-1} = 0`.
pub fn window_membership_by_profile(
    lam: &Partition,
    m: &OddModulus,
    j: u64,
) -> Result<bool, BlockError> {
    check_window_domain(lam, m, j)?;
    if j == 0 {
        return Ok(true);
    }
    let a = a_profile(lam, m, j);
    Ok(!(1..a.len()).any(|d| a[d] == 1 && a[d - 1] == 0))
}

/// Zigzag agreement at the upper edge: for `lam` in the block-`j` window
/// class and `mu` in the block-`(j+1)` window class, membership of
/// `mu ⊔ lam` and of `mu ⊔ lam^+` in `S_p` coincide. Returns the two truth
/// values for auditing.
pub fn zigzag_plus_pair(
    lam: &Partition,
    mu: &Partition,
    m: &OddModulus,
    j: u64,
) -> Result<(bool, bool), BlockError> {
    check_sp_window(lam, m, j)?;
    check_sp_window(mu, m, j + 1)?;
    let (plus, _) = decompose(lam, m, j)?;
    let whole = mu.union(lam);
    let replaced = mu.union(&plus);
    Ok((sp_membership(&whole, m), sp_membership(&replaced, m)))
}

fn check_sp_window(lam: &Partition, m: &OddModulus, j: u64) -> Result<(), BlockError> {
    check_window_domain(lam, m, j)?;
    if !sp_membership(lam, m) {
        return Err(BlockError::NotSpWindowMember {
            lam: lam.to_string(),
            p: m.p(),
        });
    }
    Ok(())
}

/// All four zigzag memberships for an adjacent pair: upper block `u` at
/// index `j + 1`, lower block `v` at index `j`. Returns membership of
/// `u ⊔ v`, `u ⊔ v^+`, `u^- ⊔ v`, `u^- ⊔ v^+`; the theorem asserts they are
/// all equal.
pub fn zigzag_quadruple(
    u: &Partition,
    v: &Partition,
    m: &OddModulus,
    j: u64,
) -> Result<[bool; 4], BlockError> {
    check_sp_window(v, m, j)?;
    check_sp_window(u, m, j + 1)?;
    let (v_plus, _) = decompose(v, m, j)?;
    let (_, u_minus) = decompose(u, m, j + 1)?;
    Ok([
        sp_membership(&u.union(v), m),
        sp_membership(&u.union(&v_plus), m),
        sp_membership(&u_minus.union(v), m),
        sp_membership(&u_minus.union(&v_plus), m),
    ])
}

/// The partial-sum identity for the upper half of a split: writing
/// `D+ = sum_{k=c}^h m_{jp+k}(lambda)` and `D- = sum_{k=1-c}^h m_{jp+k}(lambda)`,
///
/// ```text
/// sum_{k=c}^h m_{jp+k}(lambda^+) = D+ + a_{c-1} = D- - (c-1)        (c <= i0)
///                                = D+          = D- - (c-1) - a_{c-1} (c > i0)
/// ```
///
/// and in both cases the left side dominates `D+` and `D- - (c-1)`.
pub fn direct_calc_holds(
    lam: &Partition,
    m: &OddModulus,
    j: u64,
    c: u64,
) -> Result<bool, BlockError> {
    assert!(c >= 1 && c <= m.h(), "c must lie in [1, h]");
    let split = split_block(lam, m, j)?;
    let (p, h) = (m.p(), m.h());
    let centre = j * p;
    let upper_sum = |lam: &Partition, from: i64| -> i64 {
        (from..=h as i64)
            .map(|k| {
                let v = centre as i64 + k;
                if v >= 1 {
                    lam.multiplicity(v as u64) as i64
                } else {
                    0
                }
            })
            .sum()
    };
    let lhs = upper_sum(&split.plus, c as i64);
    let d_plus = upper_sum(lam, c as i64);
    let d_minus = upper_sum(lam, 1 - c as i64);
    let a_prev = split.a[c as usize - 1];
    let identity = if (c as usize) <= split.i0 {
        lhs == d_plus + a_prev && lhs == d_minus - (c as i64 - 1)
    } else {
        lhs == d_plus && lhs == d_minus - (c as i64 - 1) - a_prev
    };
    let dominance = lhs >= d_plus && lhs >= d_minus - (c as i64 - 1);
    Ok(identity && dominance)
}

/// The auxiliary window domain: p-strict on the block window with at most
/// `h` parts.
pub fn enumerate_window_domain(m: &OddModulus, j: u64) -> Vec<Partition> {
    let (lo, hi) = window_bounds(m, j);
    crate::sp_class::enumerate_window_p_strict(m, lo, hi, m.h() as usize)
}

/// The `S_p` members of the block window.
pub fn enumerate_sp_block(m: &OddModulus, j: u64) -> Vec<Partition> {
    enumerate_window_domain(m, j)
        .into_iter()
        .filter(|lam| sp_membership(lam, m))
        .collect()
}
