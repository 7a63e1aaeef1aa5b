//! Core partition type and structural primitives.
//!
//! A partition is a weakly decreasing list of positive integers. Everything
//! else in this crate is built out of a handful of primitives on them:
//!
//! - `m_i(lambda)`: multiplicity of the part value `i`,
//! - `Shift^k_a`: add `k*a` to every part,
//! - subpattern matching: equality against a run of consecutive parts,
//! - `restrict(lambda, a, b)`: keep exactly the parts with values in `[a, b]`,
//! - reflection `mu_i = p*k - lambda_{l+1-i}` inside a window below `p*k`.
//!
//! Parts are `u64` with checked arithmetic; anything that could wrap is an
//! error, not a silent truncation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive, found 0 at position {0} (1-based)")]
    ZeroPart(usize),
    #[error("parts must be weakly decreasing: position {pos} holds {value} after {prev}")]
    NotDecreasing { pos: usize, value: u64, prev: u64 },
    #[error("partition size overflows 64 bits")]
    SizeOverflow,
    #[error("shift by {k} steps of {a} is undefined: part {part} would become non-positive")]
    ShiftUnderflow { part: u64, a: u64, k: i64 },
    #[error("shift by {k} steps of {a} overflows 64 bits on part {part}")]
    ShiftOverflow { part: u64, a: u64, k: i64 },
    #[error("reflection needs p*k = {bound} to exceed the largest part {largest}")]
    ReflectionBound { bound: u64, largest: u64 },
    #[error("cannot parse {text:?} as a partition: {reason}")]
    Parse { text: String, reason: String },
    #[error("an odd modulus must be an odd integer >= 3, got {0}")]
    BadModulus(u64),
}

/// Validated odd modulus `p = 2h + 1 >= 3`; the parameter of every class
/// and crystal in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OddModulus {
    p: u64,
    h: u64,
}

impl OddModulus {
    pub fn new(p: u64) -> Result<Self, PartitionError> {
        if p < 3 || p % 2 == 0 {
            return Err(PartitionError::BadModulus(p));
        }
        Ok(OddModulus { p, h: (p - 1) / 2 })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    /// Operator index set `{0, 1, ..., h}`.
    pub fn index_count(&self) -> usize {
        self.h as usize + 1
    }
}

impl fmt::Display for OddModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// A partition: weakly decreasing positive parts, the empty list being the
/// empty partition.
///
/// The canonical representation is the sorted part list; multiplicity and
/// window views are derived from it on demand. `Ord` is lexicographic on the
/// part list, so sorting a set of partitions descending gives the
/// lexicographically decreasing order used for all canonical output.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self, PartitionError> {
        let mut sum: u64 = 0;
        for (idx, &v) in parts.iter().enumerate() {
            if v == 0 {
                return Err(PartitionError::ZeroPart(idx + 1));
            }
            if idx > 0 && parts[idx - 1] < v {
                return Err(PartitionError::NotDecreasing {
                    pos: idx + 1,
                    value: v,
                    prev: parts[idx - 1],
                });
            }
            sum = sum.checked_add(v).ok_or(PartitionError::SizeOverflow)?;
        }
        Ok(Partition { parts })
    }

    /// Internal constructor for parts already known to be sorted and positive.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&v| v > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a multiplicity assignment `value -> count`.
    pub fn from_multiplicities<I: IntoIterator<Item = (u64, u64)>>(
        mults: I,
    ) -> Result<Self, PartitionError> {
        let mut parts = Vec::new();
        let map: BTreeMap<u64, u64> = mults.into_iter().collect();
        for (&v, &c) in map.iter().rev() {
            if c == 0 {
                continue;
            }
            if v == 0 {
                return Err(PartitionError::ZeroPart(parts.len() + 1));
            }
            for _ in 0..c {
                parts.push(v);
            }
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// `l(lambda)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`, the sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// 1-based part accessor with the usual convention `lambda_i = 0` for
    /// `i > l(lambda)`.
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// `m_i(lambda)`, the number of parts equal to `value`.
    pub fn multiplicity(&self, value: u64) -> u64 {
        if value == 0 {
            return 0;
        }
        // parts are sorted descending; count the run equal to `value`
        let start = self.parts.partition_point(|&x| x > value);
        let end = self.parts.partition_point(|&x| x >= value);
        (end - start) as u64
    }

    pub fn contains_part(&self, value: u64) -> bool {
        self.multiplicity(value) > 0
    }

    /// The multiplicity view `value -> m_value(lambda)`.
    pub fn multiplicity_map(&self) -> BTreeMap<u64, u64> {
        let mut map = BTreeMap::new();
        for &v in &self.parts {
            *map.entry(v).or_insert(0) += 1;
        }
        map
    }

    pub fn max_part(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn min_part(&self) -> u64 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// `lambda ⊔ {value}`: insert one copy of `value`.
    pub fn with_part(&self, value: u64) -> Partition {
        debug_assert!(value > 0);
        let mut parts = self.parts.clone();
        let pos = parts.partition_point(|&x| x >= value);
        parts.insert(pos, value);
        Partition { parts }
    }

    /// `lambda \ {value}`: remove one copy of `value`, or `None` if absent.
    pub fn without_part(&self, value: u64) -> Option<Partition> {
        let pos = self.parts.iter().position(|&x| x == value)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Multiset union. The parts of the two operands may interleave.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    parts.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    parts.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Partition { parts }
    }

    /// `Shift^k_a(lambda)`: add `k*a` to every part. The shift of the empty
    /// partition is empty for every `k`; otherwise every shifted part must
    /// stay positive.
    pub fn shift(&self, a: u64, k: i64) -> Result<Partition, PartitionError> {
        if self.is_empty() || k == 0 {
            return Ok(self.clone());
        }
        let step = (a as i128) * (k as i128);
        let mut parts = Vec::with_capacity(self.parts.len());
        for &v in &self.parts {
            let shifted = v as i128 + step;
            if shifted <= 0 {
                return Err(PartitionError::ShiftUnderflow { part: v, a, k });
            }
            if shifted > u64::MAX as i128 {
                return Err(PartitionError::ShiftOverflow { part: v, a, k });
            }
            parts.push(shifted as u64);
        }
        Ok(Partition { parts })
    }

    /// `restrict(lambda, lo, hi)`: keep exactly the parts with value in
    /// `[lo, hi]`. Bounds may be negative or inverted; the window then clips
    /// to nothing.
    pub fn restrict(&self, lo: i64, hi: i64) -> Partition {
        let lo = lo.max(1) as u64;
        if hi < lo as i64 {
            return Partition::empty();
        }
        let hi = hi as u64;
        let parts: Vec<u64> = self
            .parts
            .iter()
            .copied()
            .filter(|&v| v >= lo && v <= hi)
            .collect();
        Partition { parts }
    }

    /// Reflection `mu_i = p*k - lambda_{l+1-i}` for `p*k > lambda_1`.
    pub fn reflect(&self, m: &OddModulus, k: u64) -> Result<Partition, PartitionError> {
        let bound = m
            .p()
            .checked_mul(k)
            .ok_or(PartitionError::SizeOverflow)?;
        if !self.is_empty() && bound <= self.max_part() {
            return Err(PartitionError::ReflectionBound {
                bound,
                largest: self.max_part(),
            });
        }
        let parts: Vec<u64> = self.parts.iter().rev().map(|&v| bound - v).collect();
        Ok(Partition { parts })
    }

    /// True iff `pattern` occurs as a run of consecutive parts of `self`.
    /// The empty pattern matches vacuously.
    pub fn matches_subpattern(&self, pattern: &Partition) -> bool {
        let k = pattern.parts.len();
        if k == 0 {
            return true;
        }
        if k > self.parts.len() {
            return false;
        }
        self.parts.windows(k).any(|w| w == pattern.parts.as_slice())
    }

    /// True iff every part lies in the value window `[lo, hi]`.
    pub fn supported_on(&self, lo: i64, hi: i64) -> bool {
        self.parts
            .iter()
            .all(|&v| v as i64 >= lo && v as i64 <= hi)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses the textual format: comma-separated decreasing integers, the
    /// empty string for the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in trimmed.split(',') {
            let v: u64 = piece.trim().parse().map_err(|e| PartitionError::Parse {
                text: s.to_string(),
                reason: format!("{piece:?}: {e}"),
            })?;
            parts.push(v);
        }
        Partition::new(parts)
    }
}

/// One slot of a subpattern template: either a fixed part value or a
/// wildcard over a contiguous value range.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TemplateEntry {
    Fixed(u64),
    Wild { lo: u64, hi: u64 },
}

/// A subpattern with wildcard slots, e.g. `16,8..13,5`. Templates are a
/// display and expansion convenience; semantic pattern sets are always the
/// expanded partition lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubpatternTemplate {
    pub entries: Vec<TemplateEntry>,
}

impl SubpatternTemplate {
    pub fn fixed(parts: &[u64]) -> Self {
        SubpatternTemplate {
            entries: parts.iter().map(|&v| TemplateEntry::Fixed(v)).collect(),
        }
    }

    /// Number of concrete instantiations.
    pub fn count(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| match e {
                TemplateEntry::Fixed(_) => 1,
                TemplateEntry::Wild { lo, hi } => hi - lo + 1,
            })
            .product()
    }

    /// All instantiations that form valid weakly decreasing patterns.
    pub fn expand(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.entries.len());
        self.expand_rec(0, &mut current, &mut out);
        out
    }

    fn expand_rec(&self, idx: usize, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if idx == self.entries.len() {
            out.push(Partition::from_sorted_unchecked(current.clone()));
            return;
        }
        let feasible = |v: u64, current: &[u64]| -> bool {
            v > 0 && current.last().map_or(true, |&prev| prev >= v)
        };
        match self.entries[idx] {
            TemplateEntry::Fixed(v) => {
                if feasible(v, current) {
                    current.push(v);
                    self.expand_rec(idx + 1, current, out);
                    current.pop();
                }
            }
            TemplateEntry::Wild { lo, hi } => {
                for v in (lo..=hi).rev() {
                    if feasible(v, current) {
                        current.push(v);
                        self.expand_rec(idx + 1, current, out);
                        current.pop();
                    }
                }
            }
        }
    }
}

impl fmt::Display for SubpatternTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            match e {
                TemplateEntry::Fixed(v) => write!(f, "{v}")?,
                TemplateEntry::Wild { lo, hi } => write!(f, "{lo}..{hi}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Convenience macro-free constructor used pervasively in tests.
pub fn parts(list: &[u64]) -> Partition {
    Partition::new(list.to_vec()).expect("literal partition must be valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_counts_runs() {
        assert_eq!(parts(&[5, 5, 2]).multiplicity(5), 2);
        assert_eq!(Partition::empty().multiplicity(3), 0);
        assert_eq!(parts(&[7, 4, 4, 1]).multiplicity(4), 2);
        assert_eq!(parts(&[7, 4, 4, 1]).multiplicity(6), 0);
    }

    #[test]
    fn accessors_agree() {
        let lam = parts(&[9, 6, 3]);
        assert_eq!(lam.len(), 3);
        assert_eq!(lam.size(), 18);
        assert_eq!(lam.part(1), 9);
        assert_eq!(lam.part(4), 0);
    }

    #[test]
    fn construction_rejects_bad_lists() {
        assert!(Partition::new(vec![3, 0]).is_err());
        assert!(Partition::new(vec![3, 5]).is_err());
        assert!(Partition::new(vec![5, 5, 1]).is_ok());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(parts(&[6, 3]).shift(3, 1).unwrap(), parts(&[9, 6]));
        assert_eq!(Partition::empty().shift(5, 7).unwrap(), Partition::empty());
        assert!(matches!(
            parts(&[6, 3]).shift(3, -1),
            Err(PartitionError::ShiftUnderflow { .. })
        ));
    }

    #[test]
    fn subpattern_examples() {
        assert!(parts(&[9, 6, 3]).matches_subpattern(&parts(&[6, 3])));
        assert!(!parts(&[9, 6, 3]).matches_subpattern(&parts(&[9, 3])));
        assert!(parts(&[9, 6, 3]).matches_subpattern(&Partition::empty()));
        // a pattern matches itself starting at the first part
        assert!(parts(&[3, 2]).matches_subpattern(&parts(&[3, 2])));
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(parts(&[9, 6, 3, 1]).restrict(3, 6), parts(&[6, 3]));
        assert_eq!(parts(&[9, 6, 3, 1]).restrict(-2, 2), parts(&[1]));
        assert_eq!(Partition::empty().restrict(1, 100), Partition::empty());
        let lam = parts(&[9, 6, 3, 1]);
        assert_eq!(lam.restrict(3, 6).restrict(3, 6), lam.restrict(3, 6));
    }

    #[test]
    fn reflect_examples() {
        let p7 = OddModulus::new(7).unwrap();
        let p5 = OddModulus::new(5).unwrap();
        assert_eq!(parts(&[6, 3]).reflect(&p7, 1).unwrap(), parts(&[4, 1]));
        assert_eq!(Partition::empty().reflect(&p5, 2).unwrap(), Partition::empty());
        assert_eq!(parts(&[4, 3]).reflect(&p5, 1).unwrap(), parts(&[2, 1]));
        assert!(parts(&[8, 3]).reflect(&p7, 1).is_err());
        // involution where defined
        let lam = parts(&[6, 3]);
        assert_eq!(lam.reflect(&p7, 1).unwrap().reflect(&p7, 1).unwrap(), lam);
    }

    #[test]
    fn shift_preserves_subpattern_matching() {
        let lam = parts(&[9, 6, 3]);
        let mu = parts(&[6, 3]);
        let a = 3;
        for k in 0..4 {
            let ls = lam.shift(a, k).unwrap();
            let ms = mu.shift(a, k).unwrap();
            assert_eq!(ls.matches_subpattern(&ms), lam.matches_subpattern(&mu));
        }
    }

    #[test]
    fn parse_round_trip() {
        let lam: Partition = "9,6,3".parse().unwrap();
        assert_eq!(lam, parts(&[9, 6, 3]));
        assert_eq!(lam.to_string(), "9,6,3");
        let empty: Partition = "".parse().unwrap();
        assert_eq!(empty, Partition::empty());
        assert_eq!(empty.to_string(), "");
        assert!("3,x".parse::<Partition>().is_err());
        assert!("3,5".parse::<Partition>().is_err());
    }

    #[test]
    fn modulus_validation() {
        assert!(OddModulus::new(3).is_ok());
        assert!(OddModulus::new(4).is_err());
        assert!(OddModulus::new(1).is_err());
        let m = OddModulus::new(7).unwrap();
        assert_eq!(m.h(), 3);
        assert_eq!(m.index_count(), 4);
    }

    #[test]
    fn template_expansion() {
        let t = SubpatternTemplate {
            entries: vec![
                TemplateEntry::Fixed(14),
                TemplateEntry::Wild { lo: 9, hi: 13 },
                TemplateEntry::Fixed(8),
                TemplateEntry::Fixed(6),
            ],
        };
        let expanded = t.expand();
        assert_eq!(expanded.len(), 5);
        assert_eq!(t.count(), 5);
        assert!(expanded.contains(&parts(&[14, 9, 8, 6])));
        assert_eq!(t.to_string(), "14,9..13,8,6");
    }

    #[test]
    fn union_interleaves() {
        assert_eq!(
            parts(&[7, 3]).union(&parts(&[5, 3, 1])),
            parts(&[7, 5, 3, 3, 1])
        );
    }
}
