//! The insertion map `beta0` and the strict class it carves out of `S_p`.
//!
//! On the block-1 window `[p - h, p + h]` the map rewrites the repeated
//! parts `p^z` as the staircase `p+z-1, p+z-3, ..., p-(z-1)` and then folds
//! the remaining parts back in, working outward at distances
//! `i = 1, ..., h` from the centre. If only one side `p ± i` is occupied the
//! staircase spreads by one and the part drops in; if both sides are
//! occupied it spreads by two and a balanced pair drops in. The result is a
//! strict partition on the same window with the same size and length.
//!
//! Conjugating by p-step shifts gives `beta^(j)` on every block window, and
//! the image of `S_p` under the blockwise map is the strict class whose
//! membership this module decides three ways: by inverse-insertion search
//! (the image form), by avoiding the finite set of window configurations
//! that are not block images (the pattern form), and for small moduli by
//! explicit textbook predicates.

use std::collections::HashMap;

use thiserror::Error;

use crate::classes::{is_strict, matches_shifted_pattern};
use crate::partitions::{OddModulus, Partition, SubpatternTemplate, TemplateEntry};
use crate::sp_class::{enumerate_sp_window, sp_membership};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("{lam} is not in the S_p window class of block {j}")]
    NotInWindowClass { lam: String, j: u64 },
    #[error("{lam} is not a member of S_p for p = {p}")]
    NotSpMember { lam: String, p: u64 },
}

/// `beta0` on the block-1 window `[p - h, p + h]`.
pub fn beta_insert(lam: &Partition, m: &OddModulus) -> Result<Partition, SchurError> {
    let (p, h) = (m.p(), m.h());
    let (lo, hi) = ((p - h) as i64, (p + h) as i64);
    if !lam.supported_on(lo, hi) || !sp_membership(lam, m) {
        return Err(SchurError::NotInWindowClass {
            lam: lam.to_string(),
            j: 1,
        });
    }
    let z = lam.multiplicity(p) as i64;
    // offsets from p; the staircase z-1, z-3, ..., -(z-1)
    let mut offsets: Vec<i64> = (0..z).map(|t| z - 1 - 2 * t).collect();
    for i in 1..=h as i64 {
        let above = lam.contains_part((p as i64 + i) as u64);
        let below = lam.contains_part((p as i64 - i) as u64);
        let spread = |offsets: &mut Vec<i64>, from: i64, by: i64| {
            for o in offsets.iter_mut() {
                if o.abs() >= from {
                    *o += by * o.signum();
                }
            }
        };
        match (above, below) {
            (false, false) => {}
            (true, false) => {
                spread(&mut offsets, i, 1);
                offsets.push(i);
            }
            (false, true) => {
                spread(&mut offsets, i, 1);
                offsets.push(-i);
            }
            (true, true) => {
                let m_above = offsets.iter().filter(|&&o| o == i).count();
                let m_below = offsets.iter().filter(|&&o| o == -i).count();
                assert_eq!(
                    m_above, m_below,
                    "insertion invariant broken at distance {i}: {lam}"
                );
                let mult = m_above as i64;
                spread(&mut offsets, i, 2);
                offsets.push(mult + i);
                offsets.push(-(mult + i));
            }
        }
    }
    offsets.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<u64> = offsets.iter().map(|&o| (p as i64 + o) as u64).collect();
    let out = Partition::new(parts).expect("offsets sorted strictly decreasing");
    assert!(
        is_strict(&out) && out.supported_on(lo, hi),
        "insertion output {out} must be strict on the window"
    );
    assert_eq!(out.size(), lam.size(), "insertion must preserve size");
    assert_eq!(out.len(), lam.len(), "insertion must preserve length");
    Ok(out)
}

/// `beta^(j)`: the insertion conjugated onto the block-`j` window.
pub fn beta_block(lam: &Partition, m: &OddModulus, j: u64) -> Result<Partition, SchurError> {
    let p = m.p();
    let down = lam
        .shift(p, 1 - j as i64)
        .map_err(|_| SchurError::NotInWindowClass {
            lam: lam.to_string(),
            j,
        })?;
    let inserted = beta_insert(&down, m).map_err(|_| SchurError::NotInWindowClass {
        lam: lam.to_string(),
        j,
    })?;
    Ok(inserted
        .shift(p, j as i64 - 1)
        .expect("shifting back stays positive"))
}

/// Inverse-insertion tables for the canonical window, plus everything the
/// image class needs.
pub struct SchurMachine {
    pub m: OddModulus,
    /// block-1 window image -> preimage
    preimage: HashMap<Partition, Partition>,
}

impl SchurMachine {
    pub fn new(m: OddModulus) -> Self {
        let (p, h) = (m.p() as i64, m.h() as i64);
        let mut preimage = HashMap::new();
        for nu in enumerate_sp_window(&m, p - h, p + h) {
            let image = beta_insert(&nu, &m).expect("window member is in the domain");
            let clash = preimage.insert(image, nu);
            assert!(clash.is_none(), "insertion must be injective");
        }
        SchurMachine { m, preimage }
    }

    /// Blockwise image of an `S_p` member.
    pub fn image(&self, nu: &Partition) -> Result<Partition, SchurError> {
        if !sp_membership(nu, &self.m) {
            return Err(SchurError::NotSpMember {
                lam: nu.to_string(),
                p: self.m.p(),
            });
        }
        let (p, h) = (self.m.p() as i64, self.m.h() as i64);
        let top_block = (nu.max_part() as i64 + h) / p;
        let mut out = Partition::empty();
        for j in 0..=top_block as u64 {
            let block = nu.restrict(j as i64 * p - h, j as i64 * p + h);
            out = out.union(&beta_block(&block, &self.m, j)?);
        }
        Ok(out)
    }

    /// Image-form membership: block-by-block inverse insertion, then a
    /// membership check on the reassembled preimage. Returns the preimage.
    pub fn preimage_of(&self, lam: &Partition) -> Option<Partition> {
        if !is_strict(lam) {
            return None;
        }
        let (p, h) = (self.m.p() as i64, self.m.h() as i64);
        let top_block = (lam.max_part() as i64 + h) / p;
        let mut nu = lam.restrict(1, h);
        for j in 1..=top_block {
            let block = lam.restrict(j * p - h, j * p + h);
            if block.is_empty() {
                continue;
            }
            let canonical = block.shift(self.m.p(), 1 - j).ok()?;
            let pre = self.preimage.get(&canonical)?;
            nu = nu.union(&pre.shift(self.m.p(), j - 1).expect("shift back up"));
        }
        sp_membership(&nu, &self.m).then_some(nu)
    }

    pub fn contains(&self, lam: &Partition) -> bool {
        self.preimage_of(lam).is_some()
    }

    /// The window configurations that are not block images, canonicalised
    /// by downward p-shifts: the union of the one-block complement on
    /// `[p - h, p + h]` and the two-block complement on `[p - h, 2p + h]`.
    pub fn forbidden_sets(&self) -> ForbiddenSets {
        let (p, h) = (self.m.p() as i64, self.m.h() as i64);
        let mut raw: Vec<Partition> = Vec::new();
        for w in strict_window_subsets(p - h, p + h) {
            if !w.is_empty() && !self.preimage.contains_key(&w) {
                raw.push(canonical_shift(&w, self.m.p()));
            }
        }
        for w in strict_window_subsets(p - h, 2 * p + h) {
            if w.is_empty() {
                continue;
            }
            if !self.two_block_image(&w) {
                raw.push(canonical_shift(&w, self.m.p()));
            }
        }
        raw.sort_unstable();
        raw.dedup();
        let reduced: Vec<Partition> = raw
            .iter()
            .filter(|mu| {
                !raw.iter().any(|nu| {
                    nu != *mu
                        && nu.len() < mu.len()
                        && matches_shifted_pattern(mu, nu, self.m.p())
                })
            })
            .cloned()
            .collect();
        let curated = curated_patterns(self.m.p());
        ForbiddenSets {
            raw,
            reduced,
            curated,
        }
    }

    fn two_block_image(&self, w: &Partition) -> bool {
        let (p, h) = (self.m.p() as i64, self.m.h() as i64);
        let lower = w.restrict(p - h, p + h);
        let upper = w.restrict(2 * p - h, 2 * p + h);
        let Some(nu1) = self.preimage.get(&lower) else {
            return false;
        };
        let Some(nu2_canonical) = upper
            .shift(self.m.p(), -1)
            .ok()
            .and_then(|c| self.preimage.get(&c))
        else {
            return false;
        };
        let nu2 = nu2_canonical.shift(self.m.p(), 1).expect("shift back up");
        sp_membership(&nu1.union(&nu2), &self.m)
    }
}

/// All strict partitions supported on `[lo, hi]`.
pub fn strict_window_subsets(lo: i64, hi: i64) -> Vec<Partition> {
    let lo = lo.max(1) as u64;
    if hi < lo as i64 {
        return vec![Partition::empty()];
    }
    let hi = hi as u64;
    let values: Vec<u64> = (lo..=hi).rev().collect();
    let mut out = Vec::with_capacity(1 << values.len());
    for mask in 0u32..(1 << values.len()) {
        let parts: Vec<u64> = values
            .iter()
            .enumerate()
            .filter(|(idx, _)| mask & (1 << idx) != 0)
            .map(|(_, &v)| v)
            .collect();
        out.push(Partition::from_sorted_unchecked(parts));
    }
    out
}

/// Shift a pattern down by whole p-steps as far as positivity allows.
pub fn canonical_shift(pattern: &Partition, p: u64) -> Partition {
    let mut cur = pattern.clone();
    while cur.min_part() > p {
        cur = cur.shift(p, -1).expect("all parts exceed p");
    }
    cur
}

/// The raw and reduced window-complement pattern sets; `curated` carries the
/// explicit textbook lists for the moduli that have them.
pub struct ForbiddenSets {
    pub raw: Vec<Partition>,
    pub reduced: Vec<Partition>,
    pub curated: Option<Vec<SubpatternTemplate>>,
}

/// Pattern-avoidance membership against a pattern set: strict, and no
/// pattern occurs as a shifted consecutive run.
pub fn schur_membership_by_avoidance(
    lam: &Partition,
    m: &OddModulus,
    patterns: &[Partition],
) -> bool {
    is_strict(lam)
        && !patterns
            .iter()
            .any(|pat| matches_shifted_pattern(lam, pat, m.p()))
}

fn wild(lo: u64, hi: u64) -> TemplateEntry {
    TemplateEntry::Wild { lo, hi }
}

fn fixed(v: u64) -> TemplateEntry {
    TemplateEntry::Fixed(v)
}

/// The explicit pattern lists for p = 3, 5, 7; the expanded p = 7 list has
/// 39 members.
pub fn curated_patterns(p: u64) -> Option<Vec<SubpatternTemplate>> {
    match p {
        3 => Some(vec![SubpatternTemplate::fixed(&[6, 3])]),
        5 => Some(
            crate::classes::SCHUR5_PATTERNS
                .iter()
                .map(|pat| SubpatternTemplate::fixed(pat))
                .collect(),
        ),
        7 => Some(vec![
            SubpatternTemplate::fixed(&[4, 3]),
            SubpatternTemplate::fixed(&[5, 3, 2]),
            SubpatternTemplate::fixed(&[5, 4, 2]),
            SubpatternTemplate::fixed(&[9, 6, 5, 1]),
            SubpatternTemplate::fixed(&[9, 7, 5, 1]),
            SubpatternTemplate::fixed(&[13, 9, 7, 5]),
            SubpatternTemplate::fixed(&[14, 9, 7, 5]),
            SubpatternTemplate::fixed(&[13, 9, 8, 5]),
            SubpatternTemplate::fixed(&[14, 9, 8, 5]),
            SubpatternTemplate {
                entries: vec![fixed(14), wild(9, 13), fixed(8), fixed(6)],
            },
            SubpatternTemplate::fixed(&[15, 13, 8, 6]),
            SubpatternTemplate {
                entries: vec![fixed(15), fixed(13), wild(8, 12), fixed(7)],
            },
            SubpatternTemplate::fixed(&[14, 13, 9, 6, 5]),
            SubpatternTemplate::fixed(&[15, 13, 9, 6, 5]),
            SubpatternTemplate::fixed(&[16, 13, 12, 7]),
            SubpatternTemplate::fixed(&[16, 14, 12, 7]),
            SubpatternTemplate::fixed(&[15, 14, 9, 6, 5]),
            SubpatternTemplate {
                entries: vec![fixed(15), fixed(14), wild(8, 13), fixed(7), fixed(6)],
            },
            SubpatternTemplate::fixed(&[16, 15, 12, 7, 6]),
            SubpatternTemplate::fixed(&[16, 15, 12, 8, 6]),
            SubpatternTemplate::fixed(&[16, 15, 12, 8, 7]),
            SubpatternTemplate::fixed(&[16, 14, 13, 7, 6, 5]),
            SubpatternTemplate::fixed(&[16, 15, 13, 7, 6, 5]),
            SubpatternTemplate::fixed(&[16, 15, 14, 7, 6, 5]),
            SubpatternTemplate::fixed(&[16, 15, 14, 8, 6, 5]),
            SubpatternTemplate::fixed(&[16, 15, 14, 8, 7, 5]),
        ]),
        _ => None,
    }
}

/// The residue triples `(lambda_i, lambda_{i+1}, lambda_{i+2}) mod 7` that
/// exempt a gap-7 window from the sharpened inequality at modulus 7: the
/// cyclic rotations of `(1,4,2)` and `(3,6,5)`, plus the two rotations of
/// `(1,0,6)` whose window endpoints stay off the multiples of 7. The third
/// rotation `(0,6,1)` is genuinely forbidden (both endpoints would be
/// multiples of 7), and omitting the two zero-containing exemptions breaks
/// the count identity with `D_7` first at size 22, witness `(8,7,6,1)`.
pub const SCHUR7_RESIDUE_TRIPLES: [(u64, u64, u64); 8] = [
    (1, 4, 2),
    (2, 1, 4),
    (3, 6, 5),
    (4, 2, 1),
    (5, 3, 6),
    (6, 5, 3),
    (1, 0, 6),
    (6, 1, 0),
];

fn schur7_expanded_patterns() -> &'static [Partition] {
    use std::sync::OnceLock;
    static PATTERNS: OnceLock<Vec<Partition>> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        curated_patterns(7)
            .unwrap()
            .iter()
            .flat_map(|t| t.expand())
            .collect()
    })
}

/// The explicit p = 7 membership predicate: strict, the refined gap
/// condition, and avoidance of the 39 curated patterns.
pub fn is_schur7_explicit(lam: &Partition) -> bool {
    if !is_strict(lam) {
        return false;
    }
    for i in 1..=lam.len().saturating_sub(3) {
        let diff = lam.part(i) - lam.part(i + 3);
        if diff < 7 {
            return false;
        }
        if diff == 7 {
            let f1a = (0..=2).any(|j| {
                let front: u64 = (0..=j).map(|t| lam.part(i + t)).sum();
                let back: u64 = (3 - j..=3).map(|t| lam.part(i + t)).sum();
                front % 7 == 0 || back % 7 == 0
            });
            let triple = (
                lam.part(i) % 7,
                lam.part(i + 1) % 7,
                lam.part(i + 2) % 7,
            );
            let f1b = !SCHUR7_RESIDUE_TRIPLES.contains(&triple);
            if f1a && f1b {
                return false;
            }
        }
    }
    !schur7_expanded_patterns()
        .iter()
        .any(|pat| matches_shifted_pattern(lam, pat, 7))
}

/// Folds single-position contiguous runs of patterns into wildcard
/// templates; presentation only, the expanded set is the semantic object.
pub fn to_templates(patterns: &[Partition]) -> Vec<SubpatternTemplate> {
    let mut remaining: Vec<Vec<u64>> = patterns.iter().map(|p| p.parts().to_vec()).collect();
    remaining.sort_unstable();
    remaining.dedup();
    let mut out: Vec<SubpatternTemplate> = Vec::new();
    let mut used = vec![false; remaining.len()];
    for slot in 0..remaining.iter().map(|p| p.len()).max().unwrap_or(0) {
        let mut groups: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
        for (idx, pat) in remaining.iter().enumerate() {
            if used[idx] || slot >= pat.len() {
                continue;
            }
            let mut key = pat.clone();
            key.remove(slot);
            key.push(pat.len() as u64); // keep lengths apart
            groups.entry(key).or_default().push(idx);
        }
        let mut groups: Vec<(Vec<u64>, Vec<usize>)> = groups.into_iter().collect();
        groups.sort_unstable();
        for (_, members) in groups {
            if members.len() < 2 {
                continue;
            }
            let mut values: Vec<u64> = members.iter().map(|&i| remaining[i][slot]).collect();
            values.sort_unstable();
            let contiguous = values.windows(2).all(|w| w[1] == w[0] + 1);
            if !contiguous {
                continue;
            }
            let sample = &remaining[members[0]];
            let entries: Vec<TemplateEntry> = sample
                .iter()
                .enumerate()
                .map(|(t, &v)| {
                    if t == slot {
                        wild(values[0], *values.last().unwrap())
                    } else {
                        fixed(v)
                    }
                })
                .collect();
            out.push(SubpatternTemplate { entries });
            for &i in &members {
                used[i] = true;
            }
        }
    }
    for (idx, pat) in remaining.iter().enumerate() {
        if !used[idx] {
            out.push(SubpatternTemplate::fixed(pat));
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{is_schur3, is_schur5};
    use crate::partitions::parts;

    fn m(p: u64) -> OddModulus {
        OddModulus::new(p).unwrap()
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(beta_insert(&parts(&[5, 5]), &m(5)).unwrap(), parts(&[6, 4]));
        assert_eq!(
            beta_insert(&parts(&[7, 7, 7]), &m(7)).unwrap(),
            parts(&[9, 7, 5])
        );
        assert_eq!(
            beta_insert(&parts(&[8, 7, 7]), &m(7)).unwrap(),
            parts(&[9, 8, 5])
        );
        assert_eq!(
            beta_insert(&parts(&[7, 7, 6]), &m(7)).unwrap(),
            parts(&[9, 6, 5])
        );
        assert_eq!(
            beta_insert(&parts(&[10, 7, 7]), &m(7)).unwrap(),
            parts(&[10, 8, 6])
        );
        // fixed points when the centre has multiplicity at most one
        assert_eq!(
            beta_insert(&parts(&[10, 7]), &m(7)).unwrap(),
            parts(&[10, 7])
        );
        assert_eq!(beta_insert(&Partition::empty(), &m(7)).unwrap(), Partition::empty());
    }

    #[test]
    fn shifted_insertion() {
        assert_eq!(
            beta_block(&parts(&[14, 14]), &m(7), 2).unwrap(),
            parts(&[15, 13])
        );
        assert_eq!(
            beta_block(&parts(&[12, 10]), &m(5), 2).unwrap(),
            parts(&[12, 10])
        );
        assert_eq!(beta_block(&Partition::empty(), &m(5), 3).unwrap(), Partition::empty());
        assert_eq!(beta_block(&parts(&[2, 1]), &m(5), 0).unwrap(), parts(&[2, 1]));
    }

    #[test]
    fn image_membership_examples() {
        let machine = SchurMachine::new(m(5));
        assert_eq!(machine.preimage_of(&parts(&[6, 4])), Some(parts(&[5, 5])));
        assert_eq!(machine.preimage_of(&parts(&[3, 2])), None);
        let machine7 = SchurMachine::new(m(7));
        assert_eq!(
            machine7.preimage_of(&parts(&[9, 8, 6])),
            Some(parts(&[9, 7, 7]))
        );
    }

    #[test]
    fn forward_image_round_trips() {
        for p in [3u64, 5, 7] {
            let md = m(p);
            let machine = SchurMachine::new(md);
            crate::sp_class::for_each_sp_upto(&md, 26, &mut |prefix, _| {
                let nu = Partition::new(prefix.to_vec()).unwrap();
                let image = machine.image(&nu).unwrap();
                assert_eq!(image.size(), nu.size());
                assert_eq!(image.len(), nu.len());
                assert!(crate::classes::is_strict(&image));
                assert_eq!(machine.preimage_of(&image), Some(nu));
            });
        }
    }

    #[test]
    fn image_matches_textbook_classes_small() {
        let m3 = SchurMachine::new(m(3));
        let m5 = SchurMachine::new(m(5));
        let all = |pre: &[u64], v: u64| pre.last().map_or(true, |&l| l >= v);
        crate::classes::for_each_partition_upto(24, &all, &|pre| {
            pre.windows(2).all(|w| w[0] > w[1])
        }, &mut |prefix, _| {
            let lam = Partition::new(prefix.to_vec()).unwrap();
            assert_eq!(m3.contains(&lam), is_schur3(&lam), "p=3 at {lam}");
            assert_eq!(m5.contains(&lam), is_schur5(&lam), "p=5 at {lam}");
        });
    }

    #[test]
    fn curated_seven_expands_to_39() {
        let templates = curated_patterns(7).unwrap();
        let expanded: Vec<Partition> = templates.iter().flat_map(|t| t.expand()).collect();
        assert_eq!(expanded.len(), 39);
        let total: u64 = templates.iter().map(|t| t.count()).sum();
        assert_eq!(total, 39);
    }

    #[test]
    fn curated_patterns_are_derived_complements() {
        for p in [3u64, 5, 7] {
            let machine = SchurMachine::new(m(p));
            let sets = machine.forbidden_sets();
            for template in curated_patterns(p).unwrap() {
                for pattern in template.expand() {
                    let canon = canonical_shift(&pattern, p);
                    assert!(
                        sets.raw.binary_search(&canon).is_ok(),
                        "curated pattern {pattern} is not in the raw complements at p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn avoidance_agrees_with_image_small() {
        for p in [3u64, 5, 7] {
            let machine = SchurMachine::new(m(p));
            let sets = machine.forbidden_sets();
            let md = m(p);
            let all = |pre: &[u64], v: u64| pre.last().map_or(true, |&l| l >= v);
            crate::classes::for_each_partition_upto(26, &all, &|pre| {
                pre.windows(2).all(|w| w[0] > w[1])
            }, &mut |prefix, _| {
                let lam = Partition::new(prefix.to_vec()).unwrap();
                assert_eq!(
                    schur_membership_by_avoidance(&lam, &md, &sets.raw),
                    machine.contains(&lam),
                    "p={p} at {lam}"
                );
                assert_eq!(
                    schur_membership_by_avoidance(&lam, &md, &sets.reduced),
                    machine.contains(&lam),
                    "reduced set disagrees at p={p}, {lam}"
                );
            });
        }
    }

    #[test]
    fn explicit_seven_agrees_with_image_small() {
        let machine = SchurMachine::new(m(7));
        let all = |pre: &[u64], v: u64| pre.last().map_or(true, |&l| l >= v);
        crate::classes::for_each_partition_upto(30, &all, &|pre| {
            pre.windows(2).all(|w| w[0] > w[1])
        }, &mut |prefix, _| {
            let lam = Partition::new(prefix.to_vec()).unwrap();
            assert_eq!(
                is_schur7_explicit(&lam),
                machine.contains(&lam),
                "explicit form disagrees at {lam}"
            );
        });
    }

    #[test]
    fn zero_residue_exemptions_are_forced() {
        // dropping the two zero-containing residue triples undercounts the
        // class at size 22: (8,7,6,1) is an insertion image (its blockwise
        // preimage is itself, a valid member) but has a gap-7 window firing
        // the partial-sum trigger with residues (1,0,6)
        let machine = SchurMachine::new(m(7));
        let witness = parts(&[8, 7, 6, 1]);
        assert_eq!(machine.preimage_of(&witness), Some(witness.clone()));
        assert!(is_schur7_explicit(&witness));
        let front_sums_fire = (0..=2usize).any(|j| {
            let front: u64 = (0..=j).map(|t| witness.part(1 + t)).sum();
            let back: u64 = (3 - j..=3).map(|t| witness.part(1 + t)).sum();
            front % 7 == 0 || back % 7 == 0
        });
        assert!(front_sums_fire);
        assert!(SCHUR7_RESIDUE_TRIPLES.contains(&(1, 0, 6)));
    }

    #[test]
    fn template_folding_round_trips() {
        let machine = SchurMachine::new(m(5));
        let sets = machine.forbidden_sets();
        let templates = to_templates(&sets.reduced);
        let mut expanded: Vec<Partition> =
            templates.iter().flat_map(|t| t.expand()).collect();
        expanded.sort_unstable();
        expanded.dedup();
        assert_eq!(expanded, sets.reduced);
    }
}
