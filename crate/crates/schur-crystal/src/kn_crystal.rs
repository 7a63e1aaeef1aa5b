//! Letter and word crystals `B^{n,1}` and `B^{n,s}`, the ground-state path,
//! and the bridge `Psi` into the junction windows of `S_p`.
//!
//! Letters are `{1, ..., n, 0, -n, ..., -1}`, ordered
//! `1 < 2 < ... < n < 0 < -n < ... < -1`. The letter crystal is the chain
//!
//! ```text
//! 1 -1-> 2 -2-> ... -(n-1)-> n -n-> 0 -n-> -n -(n-1)-> ... -1-> -1
//! ```
//!
//! A word `i_1 ... i_s` lies in `B^{n,s}` when consecutive letters weakly
//! increase (ties only at 0) and every pair `i_k = t`, `i_l = -t` satisfies
//! `l - k > s - t`. Indices `1..=n` act through the tensor rule on letters;
//! index 0 rotates: raising drops a leading 1 and appends -1, lowering drops
//! a trailing -1 and prepends 1.
//!
//! The semi-infinite ground-state path `... ⊗ 0^s ⊗ 0^s ⊗ x_K ⊗ ... ⊗ x_0`
//! is well formed because the ground word has `phi = eps` in every index;
//! operators are evaluated on a finite window headed by an anchor factor
//! with `eps = 0`, `phi = eps(ground)`, which reproduces the infinite
//! tensor rule exactly.

use std::fmt;

use thiserror::Error;

use crate::partitions::{OddModulus, Partition};
use crate::precrystal::{tensor_rule, FactorStats, Precrystal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnError {
    #[error("letter {0} is out of range for n = {1}")]
    BadLetter(i32, u32),
    #[error("word length {got} does not match s = {s}")]
    BadLength { got: usize, s: usize },
    #[error("word {0} violates the defining conditions of B^{{n,s}}")]
    NotAWord(String),
    #[error("the letter 0 has no image under the part-value map")]
    ZeroLetter,
    #[error("value {0} is outside the junction window")]
    OffWindow(u64),
    #[error("{lam} is not a member of the junction window class")]
    NotWindowMember { lam: String },
}

/// The letter crystal `B^{n,1}` on `{-n, ..., n}` with operators `1..=n`
/// (index 0 is unused at the letter level).
#[derive(Debug, Clone, Copy)]
pub struct LetterCrystal {
    pub n: u32,
}

impl LetterCrystal {
    pub fn letters(&self) -> Vec<i32> {
        let n = self.n as i32;
        (-n..=n).collect()
    }

    /// Position in the order `1 < ... < n < 0 < -n < ... < -1`.
    pub fn order_rank(&self, v: i32) -> u32 {
        let n = self.n as i32;
        debug_assert!(v.abs() <= n);
        if v > 0 {
            (v - 1) as u32
        } else if v == 0 {
            self.n
        } else {
            (2 * n + 1 + v) as u32
        }
    }
}

impl Precrystal for LetterCrystal {
    type Elem = i32;

    fn rank(&self) -> usize {
        self.n as usize + 1
    }

    fn raise(&self, b: &i32, i: usize) -> Option<i32> {
        let n = self.n as i32;
        let i = i as i32;
        if i == 0 || i > n {
            return None;
        }
        if i == n {
            match *b {
                v if v == -n => Some(0),
                0 => Some(n),
                _ => None,
            }
        } else if *b == i + 1 || *b == -i {
            Some(*b - 1)
        } else {
            None
        }
    }

    fn lower(&self, b: &i32, i: usize) -> Option<i32> {
        let n = self.n as i32;
        let i = i as i32;
        if i == 0 || i > n {
            return None;
        }
        if i == n {
            match *b {
                v if v == n => Some(0),
                0 => Some(-n),
                _ => None,
            }
        } else if *b == i || *b == -(i + 1) {
            Some(*b + 1)
        } else {
            None
        }
    }
}

/// A word of `s` letters, leftmost first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnWord(pub Vec<i32>);

impl fmt::Display for KnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, v) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The word crystal `B^{n,s}` with operators `0..=n`.
#[derive(Debug, Clone, Copy)]
pub struct WordCrystal {
    pub n: u32,
    pub s: usize,
}

impl WordCrystal {
    pub fn new(n: u32, s: usize) -> Self {
        assert!(s >= 1 && s <= n as usize, "need 1 <= s <= n");
        WordCrystal { n, s }
    }

    pub fn letter_crystal(&self) -> LetterCrystal {
        LetterCrystal { n: self.n }
    }

    /// The defining membership test.
    pub fn contains(&self, w: &KnWord) -> bool {
        if w.0.len() != self.s {
            return false;
        }
        let lc = self.letter_crystal();
        let n = self.n as i32;
        if w.0.iter().any(|&v| v.abs() > n) {
            return false;
        }
        for k in 1..w.0.len() {
            let (a, b) = (w.0[k - 1], w.0[k]);
            if lc.order_rank(a) > lc.order_rank(b) || (a == b && a != 0) {
                return false;
            }
        }
        for k in 0..w.0.len() {
            let t = w.0[k];
            if t <= 0 {
                continue;
            }
            for l in (k + 1)..w.0.len() {
                if w.0[l] == -t && (l - k) as i32 <= self.s as i32 - t {
                    return false;
                }
            }
        }
        true
    }

    /// The ground-state word `0^s`.
    pub fn ground(&self) -> KnWord {
        KnWord(vec![0; self.s])
    }

    /// Every member of `B^{n,s}` in ascending order.
    pub fn all_words(&self) -> Vec<KnWord> {
        let letters = self.letter_crystal().letters();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.s);
        fn rec(
            wc: &WordCrystal,
            letters: &[i32],
            cur: &mut Vec<i32>,
            out: &mut Vec<KnWord>,
        ) {
            if cur.len() == wc.s {
                let w = KnWord(cur.clone());
                if wc.contains(&w) {
                    out.push(w);
                }
                return;
            }
            for &v in letters {
                cur.push(v);
                rec(wc, letters, cur, out);
                cur.pop();
            }
        }
        rec(self, &letters, &mut cur, &mut out);
        out.sort_unstable();
        out
    }

    fn letter_stats(&self, w: &KnWord, i: usize) -> Vec<FactorStats> {
        let lc = self.letter_crystal();
        w.0.iter()
            .map(|v| FactorStats {
                eps: lc.eps(v, i) as i64,
                phi: lc.phi(v, i) as i64,
            })
            .collect()
    }

    fn audit(&self, w: KnWord, source: &KnWord, i: usize) -> KnWord {
        assert!(
            self.contains(&w),
            "operator {i} led from {source} outside B^{{{},{}}}: {w}",
            self.n,
            self.s
        );
        w
    }
}

impl Precrystal for WordCrystal {
    type Elem = KnWord;

    fn rank(&self) -> usize {
        self.n as usize + 1
    }

    fn raise(&self, w: &KnWord, i: usize) -> Option<KnWord> {
        debug_assert!(self.contains(w), "not a word of B^{{n,s}}: {w}");
        if i == 0 {
            if w.0.first() != Some(&1) {
                return None;
            }
            let mut v = w.0[1..].to_vec();
            v.push(-1);
            return Some(self.audit(KnWord(v), w, i));
        }
        let decision = tensor_rule(&self.letter_stats(w, i));
        let k = decision.raise_at?;
        let mut v = w.0.clone();
        v[k] = self
            .letter_crystal()
            .raise(&v[k], i)
            .expect("selected letter admits the raise");
        Some(self.audit(KnWord(v), w, i))
    }

    fn lower(&self, w: &KnWord, i: usize) -> Option<KnWord> {
        debug_assert!(self.contains(w), "not a word of B^{{n,s}}: {w}");
        if i == 0 {
            if w.0.last() != Some(&-1) {
                return None;
            }
            let mut v = vec![1];
            v.extend_from_slice(&w.0[..self.s - 1]);
            return Some(self.audit(KnWord(v), w, i));
        }
        let decision = tensor_rule(&self.letter_stats(w, i));
        let k = decision.lower_at?;
        let mut v = w.0.clone();
        v[k] = self
            .letter_crystal()
            .lower(&v[k], i)
            .expect("selected letter admits the lower");
        Some(self.audit(KnWord(v), w, i))
    }

    fn eps(&self, w: &KnWord, i: usize) -> u64 {
        if i == 0 {
            // rotations terminate immediately or after one step
            let mut count = 0;
            let mut cur = w.clone();
            while let Some(next) = self.raise(&cur, 0) {
                cur = next;
                count += 1;
                assert!(count <= 2 * self.s as u64, "raise_0 runaway");
            }
            count
        } else {
            tensor_rule(&self.letter_stats(w, i)).eps as u64
        }
    }

    fn phi(&self, w: &KnWord, i: usize) -> u64 {
        if i == 0 {
            let mut count = 0;
            let mut cur = w.clone();
            while let Some(next) = self.lower(&cur, 0) {
                cur = next;
                count += 1;
                assert!(count <= 2 * self.s as u64, "lower_0 runaway");
            }
            count
        } else {
            tensor_rule(&self.letter_stats(w, i)).phi as u64
        }
    }
}

/// Part-value map `r_j` from nonzero letters (with `n = h`) onto
/// `[(j-1)p + 1, jp - 1]`.
pub fn r_map(m: &OddModulus, j: u64, letter: i32) -> Result<u64, KnError> {
    assert!(j >= 1, "junction windows start at j = 1");
    let h = m.h() as i32;
    if letter == 0 {
        return Err(KnError::ZeroLetter);
    }
    if letter.abs() > h {
        return Err(KnError::BadLetter(letter, m.h() as u32));
    }
    let p = m.p();
    if letter > 0 {
        Ok(j * p - (h as u64 + 1 - letter as u64))
    } else {
        Ok((j - 1) * p + (h + 1 + letter) as u64)
    }
}

/// Inverse of [`r_map`] on the junction window.
pub fn r_map_inverse(m: &OddModulus, j: u64, value: u64) -> Result<i32, KnError> {
    assert!(j >= 1, "junction windows start at j = 1");
    let (p, h) = (m.p(), m.h());
    let (lo, hi) = ((j - 1) * p + 1, j * p - 1);
    if value < lo || value > hi {
        return Err(KnError::OffWindow(value));
    }
    if value >= j * p - h {
        Ok((h + 1 + value - j * p) as i64 as i32)
    } else {
        Ok((value as i64 - ((j - 1) * p + h + 1) as i64) as i32)
    }
}

/// `Psi`: words of `B^{h,s}` to junction-window partitions. Positive
/// letters map to the upper half, negative letters to the lower half, zeros
/// vanish.
pub fn psi(m: &OddModulus, j: u64, w: &KnWord) -> Result<Partition, KnError> {
    assert!(j >= 1, "junction windows start at j = 1");
    let s = w.0.len();
    if s == 0 || s > m.h() as usize {
        return Err(KnError::BadLength {
            got: s,
            s: m.h() as usize,
        });
    }
    let wc = WordCrystal::new(m.h() as u32, s);
    if !wc.contains(w) {
        return Err(KnError::NotAWord(w.to_string()));
    }
    let a = w.0.iter().position(|&v| v <= 0).unwrap_or(s); // a - 1 in 1-based terms
    let b = w.0.iter().rposition(|&v| v >= 0).map_or(0, |k| k + 1);
    let mut parts = Vec::new();
    for k in (0..a).rev() {
        parts.push(r_map(m, j, w.0[k])?);
    }
    for k in (b..s).rev() {
        parts.push(r_map(m, j, w.0[k])?);
    }
    Ok(Partition::new(parts).expect("image parts are sorted"))
}

/// Inverse of [`psi`] for `s = h`.
pub fn psi_inverse(m: &OddModulus, j: u64, lam: &Partition) -> Result<KnWord, KnError> {
    assert!(j >= 1, "junction windows start at j = 1");
    let (p, h) = (m.p() as i64, m.h() as i64);
    let (lo, hi) = ((j as i64 - 1) * p + 1, j as i64 * p - 1);
    if !lam.supported_on(lo, hi) || !crate::sp_class::sp_membership(lam, m) {
        return Err(KnError::NotWindowMember {
            lam: lam.to_string(),
        });
    }
    let upper = lam
        .parts()
        .iter()
        .filter(|&&v| v as i64 >= j as i64 * p - h)
        .count();
    let l = lam.len();
    let mut letters = Vec::with_capacity(h as usize);
    for k in (1..=upper).rev() {
        letters.push(r_map_inverse(m, j, lam.part(k))?);
    }
    for _ in 0..(h as usize - l) {
        letters.push(0);
    }
    for k in ((upper + 1)..=l).rev() {
        letters.push(r_map_inverse(m, j, lam.part(k))?);
    }
    let w = KnWord(letters);
    let wc = WordCrystal::new(m.h() as u32, m.h() as usize);
    if !wc.contains(&w) {
        return Err(KnError::NotAWord(w.to_string()));
    }
    Ok(w)
}

/// A semi-infinite tensor power of one word crystal anchored at its ground
/// word: `... ⊗ g ⊗ g ⊗ x_{K-1} ⊗ ... ⊗ x_0`. Factor `k` counts from the
/// right; factors beyond the stored ones equal the ground word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KyotoPath {
    pub factors: Vec<KnWord>,
}

impl fmt::Display for KyotoPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "...")?;
        for w in self.factors.iter().rev() {
            write!(f, "⊗{w}")?;
        }
        Ok(())
    }
}

/// The path crystal `⊗' (B^{n,s}, 0^s)`.
#[derive(Debug, Clone, Copy)]
pub struct PathCrystal {
    pub word: WordCrystal,
}

impl PathCrystal {
    pub fn new(n: u32, s: usize) -> Self {
        PathCrystal {
            word: WordCrystal::new(n, s),
        }
    }

    pub fn ground_path(&self) -> KyotoPath {
        KyotoPath {
            factors: Vec::new(),
        }
    }

    fn trim(&self, mut path: KyotoPath) -> KyotoPath {
        let g = self.word.ground();
        while path.factors.last() == Some(&g) {
            path.factors.pop();
        }
        path
    }

    /// Factor statistics left to right: anchor, ground buffer, then the
    /// stored factors from the far end down to position 0.
    fn stats(&self, path: &KyotoPath, i: usize) -> Vec<FactorStats> {
        let g = self.word.ground();
        let ground_eps = self.word.eps(&g, i) as i64;
        let mut stats = Vec::with_capacity(path.factors.len() + 2);
        stats.push(FactorStats {
            eps: 0,
            phi: ground_eps,
        });
        stats.push(FactorStats {
            eps: ground_eps,
            phi: self.word.phi(&g, i) as i64,
        });
        for w in path.factors.iter().rev() {
            stats.push(FactorStats {
                eps: self.word.eps(w, i) as i64,
                phi: self.word.phi(w, i) as i64,
            });
        }
        stats
    }

    fn apply(&self, path: &KyotoPath, i: usize, lower: bool) -> Option<KyotoPath> {
        let stats = self.stats(path, i);
        let decision = tensor_rule(&stats);
        let k = if lower {
            decision.lower_at?
        } else {
            decision.raise_at?
        };
        assert!(k >= 1, "the anchor factor is never selected");
        let len = path.factors.len();
        let mut factors = path.factors.clone();
        if k == 1 {
            // the buffer ground factor: the action extends the support
            let g = self.word.ground();
            let moved = if lower {
                self.word.lower(&g, i)
            } else {
                self.word.raise(&g, i)
            }
            .expect("selected factor admits the move");
            factors.push(moved);
        } else {
            let pos = len - (k - 1); // k = 2 is the leftmost stored factor
            let moved = if lower {
                self.word.lower(&factors[pos], i)
            } else {
                self.word.raise(&factors[pos], i)
            }
            .expect("selected factor admits the move");
            factors[pos] = moved;
        }
        Some(self.trim(KyotoPath { factors }))
    }
}

impl Precrystal for PathCrystal {
    type Elem = KyotoPath;

    fn rank(&self) -> usize {
        self.word.n as usize + 1
    }

    fn raise(&self, path: &KyotoPath, i: usize) -> Option<KyotoPath> {
        self.apply(path, i, false)
    }

    fn lower(&self, path: &KyotoPath, i: usize) -> Option<KyotoPath> {
        self.apply(path, i, true)
    }

    fn eps(&self, path: &KyotoPath, i: usize) -> u64 {
        tensor_rule(&self.stats(path, i)).eps as u64
    }

    fn phi(&self, path: &KyotoPath, i: usize) -> u64 {
        tensor_rule(&self.stats(path, i)).phi as u64
    }
}

/// Outcome of checking the ground-state path against reference counts.
#[derive(Debug, Clone)]
pub struct KyotoCheck {
    /// `phi_i(ground) = eps_i(ground)` for every index.
    pub ground_balanced: bool,
    pub layer_counts: Vec<u64>,
    pub reference_counts: Vec<u64>,
    pub pass: bool,
}

/// Verifies the ground word is balanced and that BFS layer counts from the
/// ground path match the class counts: `|S_p(n)|` (equivalently `|D_p(n)|`,
/// `|RP_p(n)|`) for every depth up to `depth`.
pub fn kyoto_ground_check(m: &OddModulus, s: usize, depth: usize) -> KyotoCheck {
    let pc = PathCrystal::new(m.h() as u32, s);
    let g = pc.word.ground();
    let ground_balanced =
        (0..pc.rank()).all(|i| pc.word.eps(&g, i) == pc.word.phi(&g, i));
    let graph = crate::precrystal::crystal_graph(&pc, vec![pc.ground_path()], depth);
    let mut layer_counts: Vec<u64> = graph.layer_sizes().iter().map(|&c| c as u64).collect();
    layer_counts.resize(depth + 1, 0);
    let reference_counts: Vec<u64> = crate::sp_class::sp_counts_upto(m, depth as u64);
    let pass = ground_balanced && layer_counts == reference_counts;
    KyotoCheck {
        ground_balanced,
        layer_counts,
        reference_counts,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parts;

    #[test]
    fn letter_chain() {
        let lc = LetterCrystal { n: 3 };
        assert_eq!(lc.lower(&3, 3), Some(0));
        assert_eq!(lc.lower(&0, 3), Some(-3));
        assert_eq!(lc.lower(&3, 1), None);
        assert_eq!(lc.raise(&-2, 2), Some(-3));
        // full chain walk: 1 -> 2 -> ... -> -1 takes 2n steps
        let mut cur = 1;
        let mut steps = 0;
        'outer: loop {
            for i in 1..=3usize {
                if let Some(next) = lc.lower(&cur, i) {
                    cur = next;
                    steps += 1;
                    continue 'outer;
                }
            }
            break;
        }
        assert_eq!((cur, steps), (-1, 6));
        assert_eq!(lc.phi(&3, 3), 2);
        assert_eq!(lc.eps(&-3, 3), 2);
    }

    #[test]
    fn letter_graph_is_a_path() {
        // the crystal graph of the letter chain from the source 1 is a
        // path through all 2n + 1 letters
        let lc = LetterCrystal { n: 3 };
        let g = crate::precrystal::crystal_graph(&lc, vec![1], 10);
        assert_eq!(g.layer_sizes(), vec![1; 7]);
        assert_eq!(g.edges.len(), 6);
        let colors: Vec<usize> = {
            let mut edges = g.edges.clone();
            edges.sort_by_key(|e| e.from);
            edges.iter().map(|e| e.color).collect()
        };
        assert_eq!(colors, vec![1, 2, 3, 3, 2, 1]);
    }

    #[test]
    fn word_membership_examples() {
        let wc = WordCrystal::new(3, 3);
        assert!(!wc.contains(&KnWord(vec![1, 0, -1])));
        assert!(wc.contains(&KnWord(vec![0, 0, 0])));
        assert!(wc.contains(&KnWord(vec![2, 0, -1])));
        assert!(!wc.contains(&KnWord(vec![0, 2, -1])));
        assert!(!wc.contains(&KnWord(vec![1, 1, 0])));
    }

    #[test]
    fn zero_arrows() {
        let wc = WordCrystal::new(3, 3);
        assert_eq!(
            wc.lower(&KnWord(vec![2, 0, -1]), 0),
            Some(KnWord(vec![1, 2, 0]))
        );
        assert_eq!(wc.raise(&KnWord(vec![0, 0, 0]), 0), None);
        assert_eq!(
            wc.raise(&KnWord(vec![1, 2, 0]), 0),
            Some(KnWord(vec![2, 0, -1]))
        );
    }

    #[test]
    fn top_arrow_on_ground() {
        let wc = WordCrystal::new(3, 3);
        assert_eq!(
            wc.lower(&KnWord(vec![0, 0, 0]), 3),
            Some(KnWord(vec![0, 0, -3]))
        );
        let g = KnWord(vec![0, 0, 0]);
        for i in 0..=3usize {
            assert_eq!(wc.eps(&g, i), wc.phi(&g, i));
        }
    }

    #[test]
    fn word_ops_close_in_the_set() {
        for (n, s) in [(2u32, 2usize), (3, 2), (3, 3), (4, 3)] {
            let wc = WordCrystal::new(n, s);
            for w in wc.all_words() {
                for i in 0..wc.rank() {
                    if let Some(next) = wc.lower(&w, i) {
                        assert!(wc.contains(&next));
                        assert_eq!(wc.raise(&next, i), Some(w.clone()));
                    }
                    if let Some(prev) = wc.raise(&w, i) {
                        assert_eq!(wc.lower(&prev, i), Some(w.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn r_map_examples() {
        let p7 = OddModulus::new(7).unwrap();
        assert_eq!(r_map(&p7, 1, 2), Ok(5));
        assert_eq!(r_map(&p7, 1, -1), Ok(3));
        assert_eq!(r_map(&p7, 2, 3), Ok(13));
        assert!(r_map(&p7, 1, 0).is_err());
        for v in [-3i32, -2, -1, 1, 2, 3] {
            let val = r_map(&p7, 2, v).unwrap();
            assert_eq!(r_map_inverse(&p7, 2, val), Ok(v));
        }
    }

    #[test]
    fn psi_examples() {
        let p7 = OddModulus::new(7).unwrap();
        assert_eq!(
            psi(&p7, 1, &KnWord(vec![0, 0, 0])).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            psi(&p7, 1, &KnWord(vec![2, 0, -1])).unwrap(),
            parts(&[5, 3])
        );
        let w = psi_inverse(&p7, 1, &parts(&[5, 3])).unwrap();
        assert_eq!(w, KnWord(vec![2, 0, -1]));
    }

    #[test]
    fn psi_is_a_bijection_onto_the_window() {
        for p in [5u64, 7, 9] {
            let m = OddModulus::new(p).unwrap();
            let h = m.h();
            let wc = WordCrystal::new(h as u32, h as usize);
            for j in [1u64, 2] {
                let words = wc.all_words();
                let mut images: Vec<Partition> = words
                    .iter()
                    .map(|w| psi(&m, j, w).unwrap())
                    .collect();
                images.sort_unstable();
                images.dedup();
                assert_eq!(images.len(), words.len(), "Psi not injective at p={p}");
                let mut window = crate::sp_class::enumerate_sp_window(
                    &m,
                    ((j - 1) * p + 1) as i64,
                    (j * p - 1) as i64,
                );
                window.sort_unstable();
                assert_eq!(images, window, "Psi image mismatch at p={p} j={j}");
                for w in &words {
                    assert_eq!(psi_inverse(&m, j, &psi(&m, j, w).unwrap()).unwrap(), *w);
                }
            }
        }
    }

    #[test]
    fn path_crystal_first_layers() {
        // n = h = 2, s = 1: layer counts follow |S_5(n)|
        let check = kyoto_ground_check(&OddModulus::new(5).unwrap(), 1, 8);
        assert!(check.ground_balanced);
        assert!(check.pass, "{:?}", check);
    }
}
