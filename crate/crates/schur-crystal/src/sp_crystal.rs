//! The precrystal structure on `S_p` with operator indices `0 ..= h`.
//!
//! Elements factor through their block windows. Write
//! `lambda^(j) = restrict(lambda, jp - h, jp + h)` and split each block into
//! halves. Two bracketings of the same data drive the operators:
//!
//! - for `i < h`, the factor sequence (leftmost first)
//!   `..., plus_2, minus_2, plus_1, minus_1, plus_0` carries the half-window
//!   operators below, and the tensor rule picks the factor to act on;
//! - for `i = h`, the same data regrouped as
//!   `w_j = minus_j ⊔ plus_{j-1}` (one factor per junction `j >= 1`) carries
//!   the explicit move `(j-1)p + h  <->  jp - h`.
//!
//! After acting on one factor the touched block(s) are recombined with
//! `Theta_j` and spliced back into the partition. Every defined lowering
//! step grows the size by exactly one box.
//!
//! The infinite tail of empty blocks is truncated: an empty half pair
//! contributes `phi - eps = 0` for every index, its raise statistics vanish
//! against its partner, and among tail maximisers of a lowering step the
//! rightmost one lies in the first appended block. One buffer block beyond
//! the support therefore makes the finite computation agree with the
//! infinite product; `extra_blocks` widens the window for the truncation
//! soundness checks.

use crate::block_decomp::{recompose, split_block, window_bounds, BlockError};
use crate::partitions::{OddModulus, Partition};
use crate::precrystal::{tensor_rule, FactorStats, Precrystal, TensorDecision};
use crate::sp_class::sp_membership;

/// Which half of a block window a factor lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfKind {
    /// Values `jp + 1 ..= jp + h` (also block 0, whose window clips to `[1, h]`).
    Plus,
    /// Values `jp - h ..= jp - 1`, for `j >= 1`.
    Minus,
}

/// The half-window precrystal with indices `0 ..= h-1`.
#[derive(Debug, Clone, Copy)]
pub struct HalfWindow {
    pub m: OddModulus,
    pub j: u64,
    pub kind: HalfKind,
}

impl HalfWindow {
    fn centre(&self) -> u64 {
        self.j * self.m.p()
    }

    /// Closed-form statistics; every value is 0 or 1.
    pub fn stats(&self, lam: &Partition, i: usize) -> FactorStats {
        let c = self.centre();
        let i = i as u64;
        let has = |v: u64| lam.contains_part(v);
        let (eps, phi) = match (self.kind, i) {
            (HalfKind::Plus, 0) => {
                let e = has(c + 1);
                (e, !e)
            }
            (HalfKind::Plus, i) => (
                !has(c + i) && has(c + i + 1),
                has(c + i) && !has(c + i + 1),
            ),
            (HalfKind::Minus, 0) => {
                let e = !has(c - 1);
                (e, !e)
            }
            (HalfKind::Minus, i) => (
                has(c - i) && !has(c - i - 1),
                !has(c - i) && has(c - i - 1),
            ),
        };
        FactorStats {
            eps: eps as i64,
            phi: phi as i64,
        }
    }
}

impl Precrystal for HalfWindow {
    type Elem = Partition;

    fn rank(&self) -> usize {
        self.m.h() as usize
    }

    fn raise(&self, lam: &Partition, i: usize) -> Option<Partition> {
        let c = self.centre();
        let i = i as u64;
        match (self.kind, i) {
            (HalfKind::Plus, 0) => lam.without_part(c + 1),
            (HalfKind::Plus, i) => {
                (!lam.contains_part(c + i) && lam.contains_part(c + i + 1))
                    .then(|| lam.without_part(c + i + 1).unwrap().with_part(c + i))
            }
            (HalfKind::Minus, 0) => {
                (!lam.contains_part(c - 1)).then(|| lam.with_part(c - 1))
            }
            (HalfKind::Minus, i) => {
                (lam.contains_part(c - i) && !lam.contains_part(c - i - 1))
                    .then(|| lam.without_part(c - i).unwrap().with_part(c - i - 1))
            }
        }
    }

    fn lower(&self, lam: &Partition, i: usize) -> Option<Partition> {
        let c = self.centre();
        let i = i as u64;
        match (self.kind, i) {
            (HalfKind::Plus, 0) => {
                (!lam.contains_part(c + 1)).then(|| lam.with_part(c + 1))
            }
            (HalfKind::Plus, i) => {
                (lam.contains_part(c + i) && !lam.contains_part(c + i + 1))
                    .then(|| lam.without_part(c + i).unwrap().with_part(c + i + 1))
            }
            (HalfKind::Minus, 0) => lam.without_part(c - 1),
            (HalfKind::Minus, i) => {
                (!lam.contains_part(c - i) && lam.contains_part(c - i - 1))
                    .then(|| lam.without_part(c - i - 1).unwrap().with_part(c - i))
            }
        }
    }

    fn eps(&self, lam: &Partition, i: usize) -> u64 {
        self.stats(lam, i).eps as u64
    }

    fn phi(&self, lam: &Partition, i: usize) -> u64 {
        self.stats(lam, i).phi as u64
    }
}

/// The junction-window precrystal on `S_p^{(j-1)p+1, jp-1}` with indices
/// `0 ..= h`: indices below `h` act through the half tensor
/// `minus_j ⊗ plus_{j-1}`, index `h` moves a part between `(j-1)p + h` and
/// `jp - h`.
#[derive(Debug, Clone, Copy)]
pub struct JunctionWindow {
    pub m: OddModulus,
    pub j: u64,
}

impl JunctionWindow {
    fn halves(&self) -> (HalfWindow, HalfWindow) {
        (
            HalfWindow {
                m: self.m,
                j: self.j,
                kind: HalfKind::Minus,
            },
            HalfWindow {
                m: self.m,
                j: self.j - 1,
                kind: HalfKind::Plus,
            },
        )
    }

    fn split(&self, w: &Partition) -> (Partition, Partition) {
        let (p, h) = (self.m.p() as i64, self.m.h() as i64);
        let j = self.j as i64;
        (
            w.restrict(j * p - h, j * p - 1),
            w.restrict((j - 1) * p + 1, (j - 1) * p + h),
        )
    }

    fn upper_move_value(&self) -> u64 {
        self.j * self.m.p() - self.m.h()
    }

    fn lower_move_value(&self) -> u64 {
        (self.j - 1) * self.m.p() + self.m.h()
    }

    pub fn stats(&self, w: &Partition, i: usize) -> FactorStats {
        if (i as u64) < self.m.h() {
            let (mi, pl) = self.halves();
            let (wm, wp) = self.split(w);
            tensor_decision_pair(&mi, &wm, &pl, &wp, i).into()
        } else {
            let up = w.contains_part(self.upper_move_value());
            let down = w.contains_part(self.lower_move_value());
            FactorStats {
                eps: (up && !down) as i64,
                phi: (down && !up) as i64,
            }
        }
    }
}

fn tensor_decision_pair(
    a: &HalfWindow,
    xa: &Partition,
    b: &HalfWindow,
    xb: &Partition,
    i: usize,
) -> TensorDecision {
    tensor_rule(&[a.stats(xa, i), b.stats(xb, i)])
}

impl From<TensorDecision> for FactorStats {
    fn from(d: TensorDecision) -> Self {
        FactorStats {
            eps: d.eps,
            phi: d.phi,
        }
    }
}

impl Precrystal for JunctionWindow {
    type Elem = Partition;

    fn rank(&self) -> usize {
        self.m.h() as usize + 1
    }

    fn raise(&self, w: &Partition, i: usize) -> Option<Partition> {
        if (i as u64) < self.m.h() {
            let (mi, pl) = self.halves();
            let (wm, wp) = self.split(w);
            let d = tensor_decision_pair(&mi, &wm, &pl, &wp, i);
            let k = d.raise_at?;
            let (nm, np) = if k == 0 {
                (mi.raise(&wm, i).expect("selected factor"), wp)
            } else {
                (wm, pl.raise(&wp, i).expect("selected factor"))
            };
            Some(nm.union(&np))
        } else {
            let (hi, lo) = (self.upper_move_value(), self.lower_move_value());
            (w.contains_part(hi) && !w.contains_part(lo))
                .then(|| w.without_part(hi).unwrap().with_part(lo))
        }
    }

    fn lower(&self, w: &Partition, i: usize) -> Option<Partition> {
        if (i as u64) < self.m.h() {
            let (mi, pl) = self.halves();
            let (wm, wp) = self.split(w);
            let d = tensor_decision_pair(&mi, &wm, &pl, &wp, i);
            let k = d.lower_at?;
            let (nm, np) = if k == 0 {
                (mi.lower(&wm, i).expect("selected factor"), wp)
            } else {
                (wm, pl.lower(&wp, i).expect("selected factor"))
            };
            Some(nm.union(&np))
        } else {
            let (hi, lo) = (self.upper_move_value(), self.lower_move_value());
            (w.contains_part(lo) && !w.contains_part(hi))
                .then(|| w.without_part(lo).unwrap().with_part(hi))
        }
    }

    fn eps(&self, w: &Partition, i: usize) -> u64 {
        self.stats(w, i).eps as u64
    }

    fn phi(&self, w: &Partition, i: usize) -> u64 {
        self.stats(w, i).phi as u64
    }
}

/// The crystal on `S_p` itself. `extra_blocks >= 1` empty blocks beyond the
/// support are kept in every factor sequence.
#[derive(Debug, Clone, Copy)]
pub struct SpCrystal {
    pub m: OddModulus,
    pub extra_blocks: usize,
}

/// Which factor a tensor position refers to.
#[derive(Debug, Clone, Copy)]
enum FactorSlot {
    Half { j: u64, kind: HalfKind },
    Junction { j: u64 },
}

impl SpCrystal {
    pub fn new(m: OddModulus) -> Self {
        SpCrystal { m, extra_blocks: 1 }
    }

    pub fn with_extra_blocks(m: OddModulus, extra_blocks: usize) -> Self {
        assert!(extra_blocks >= 1, "at least one buffer block is required");
        SpCrystal { m, extra_blocks }
    }

    /// Block index of a part value.
    pub fn block_of(&self, v: u64) -> u64 {
        (v + self.m.h()) / self.m.p()
    }

    fn top_block(&self, lam: &Partition) -> u64 {
        lam.parts().first().map_or(0, |&v| self.block_of(v))
    }

    /// Half pairs `(plus_j, minus_j)` for `j = 0 ..= top`.
    fn half_pairs(&self, lam: &Partition, top: u64) -> Vec<(Partition, Partition)> {
        (0..=top)
            .map(|j| {
                let (lo, hi) = window_bounds(&self.m, j);
                let block = lam.restrict(lo, hi);
                let split = split_block(&block, &self.m, j)
                    .expect("blocks of an S_p element lie in the window domain");
                (split.plus, split.minus)
            })
            .collect()
    }

    /// The factor slots for operator index `i`, leftmost first, including
    /// the truncation buffer.
    fn slots(&self, lam: &Partition, i: usize) -> Vec<FactorSlot> {
        let n = self.top_block(lam);
        if (i as u64) < self.m.h() {
            let top = n + self.extra_blocks as u64;
            let mut slots = Vec::with_capacity(2 * top as usize + 1);
            for j in (1..=top).rev() {
                slots.push(FactorSlot::Half {
                    j,
                    kind: HalfKind::Plus,
                });
                slots.push(FactorSlot::Half {
                    j,
                    kind: HalfKind::Minus,
                });
            }
            slots.push(FactorSlot::Half {
                j: 0,
                kind: HalfKind::Plus,
            });
            slots
        } else {
            let top = n + self.extra_blocks as u64 + 1;
            (1..=top)
                .rev()
                .map(|j| FactorSlot::Junction { j })
                .collect()
        }
    }

    fn slot_element(
        &self,
        pairs: &[(Partition, Partition)],
        slot: &FactorSlot,
    ) -> Partition {
        let pair = |j: u64| -> (Partition, Partition) {
            pairs
                .get(j as usize)
                .cloned()
                .unwrap_or((Partition::empty(), Partition::empty()))
        };
        match slot {
            FactorSlot::Half { j, kind: HalfKind::Plus } => pair(*j).0,
            FactorSlot::Half { j, kind: HalfKind::Minus } => pair(*j).1,
            FactorSlot::Junction { j } => pair(*j).1.union(&pair(*j - 1).0),
        }
    }

    fn slot_stats(&self, slot: &FactorSlot, x: &Partition, i: usize) -> FactorStats {
        match slot {
            FactorSlot::Half { j, kind } => HalfWindow {
                m: self.m,
                j: *j,
                kind: *kind,
            }
            .stats(x, i),
            FactorSlot::Junction { j } => JunctionWindow { m: self.m, j: *j }.stats(x, i),
        }
    }

    fn decision(&self, lam: &Partition, i: usize) -> (TensorDecision, Vec<FactorSlot>) {
        let top = self.top_block(lam) + self.extra_blocks as u64 + 1;
        let pairs = self.half_pairs(lam, top);
        let slots = self.slots(lam, i);
        let stats: Vec<FactorStats> = slots
            .iter()
            .map(|s| self.slot_stats(s, &self.slot_element(&pairs, s), i))
            .collect();
        (tensor_rule(&stats), slots)
    }

    fn replace_window(&self, lam: &Partition, j: u64, new_block: &Partition) -> Partition {
        let (lo, hi) = window_bounds(&self.m, j);
        let kept: Vec<u64> = lam
            .parts()
            .iter()
            .copied()
            .filter(|&v| (v as i64) < lo || (v as i64) > hi)
            .collect();
        Partition::from_sorted_unchecked(kept).union(new_block)
    }

    fn apply(&self, lam: &Partition, i: usize, lower: bool) -> Option<Partition> {
        debug_assert!(
            sp_membership(lam, &self.m),
            "operators require an S_{} member, got {lam}",
            self.m.p()
        );
        let top = self.top_block(lam) + self.extra_blocks as u64 + 1;
        let pairs = self.half_pairs(lam, top);
        let (decision, slots) = self.decision(lam, i);
        let k = if lower {
            decision.lower_at?
        } else {
            decision.raise_at?
        };
        let result = match slots[k] {
            FactorSlot::Half { j, kind } => {
                let ops = HalfWindow {
                    m: self.m,
                    j,
                    kind,
                };
                let x = self.slot_element(&pairs, &slots[k]);
                let moved = if lower {
                    ops.lower(&x, i).expect("selected factor admits the move")
                } else {
                    ops.raise(&x, i).expect("selected factor admits the move")
                };
                let (plus, minus) = match kind {
                    HalfKind::Plus => (moved, pairs[j as usize].1.clone()),
                    HalfKind::Minus => (pairs[j as usize].0.clone(), moved),
                };
                let block = recompose(&plus, &minus, &self.m, j)
                    .expect("half components stay in their windows");
                self.replace_window(lam, j, &block)
            }
            FactorSlot::Junction { j } => {
                let ops = JunctionWindow { m: self.m, j };
                let x = self.slot_element(&pairs, &slots[k]);
                let moved = if lower {
                    ops.lower(&x, i).expect("selected factor admits the move")
                } else {
                    ops.raise(&x, i).expect("selected factor admits the move")
                };
                let (new_minus_j, new_plus_below) = (
                    moved.restrict(
                        (j * self.m.p() - self.m.h()) as i64,
                        (j * self.m.p() - 1) as i64,
                    ),
                    moved.restrict(
                        ((j - 1) * self.m.p() + 1) as i64,
                        ((j - 1) * self.m.p() + self.m.h()) as i64,
                    ),
                );
                let upper_block =
                    recompose(&pairs[j as usize].0, &new_minus_j, &self.m, j)
                        .expect("upper junction half stays in its window");
                let lower_pair = pairs
                    .get(j as usize - 1)
                    .cloned()
                    .unwrap_or((Partition::empty(), Partition::empty()));
                let lower_block = recompose(&new_plus_below, &lower_pair.1, &self.m, j - 1)
                    .expect("lower junction half stays in its window");
                let step = self.replace_window(lam, j, &upper_block);
                self.replace_window(&step, j - 1, &lower_block)
            }
        };
        debug_assert!(
            sp_membership(&result, &self.m),
            "operator output {result} left S_{}",
            self.m.p()
        );
        Some(result)
    }

    /// The junction factorisation `lambda -> (w_1, w_2, ...)`,
    /// `w_j = minus_j ⊔ plus_{j-1}`, trailing empties trimmed.
    pub fn block_factorize(&self, lam: &Partition) -> Vec<Partition> {
        let top = self.top_block(lam) + 1;
        let pairs = self.half_pairs(lam, top);
        let mut out: Vec<Partition> = (1..=top)
            .map(|j| {
                pairs[j as usize]
                    .1
                    .union(&pairs[j as usize - 1].0)
            })
            .collect();
        while out.last().is_some_and(|w| w.is_empty()) {
            out.pop();
        }
        out
    }

    /// Inverse of [`Self::block_factorize`].
    pub fn block_recombine(&self, ws: &[Partition]) -> Result<Partition, BlockError> {
        let (p, h) = (self.m.p() as i64, self.m.h() as i64);
        for (idx, w) in ws.iter().enumerate() {
            let j = idx as i64 + 1;
            let (lo, hi) = ((j - 1) * p + 1, j * p - 1);
            if !w.supported_on(lo, hi) || !sp_membership(w, &self.m) {
                return Err(BlockError::BadComponent {
                    lam: w.to_string(),
                    lo,
                    hi,
                });
            }
        }
        let half = |idx: i64, upper: bool| -> Partition {
            if idx < 1 || idx > ws.len() as i64 {
                return Partition::empty();
            }
            let w = &ws[idx as usize - 1];
            if upper {
                w.restrict(idx * p - h, idx * p - 1)
            } else {
                w.restrict((idx - 1) * p + 1, (idx - 1) * p + h)
            }
        };
        let mut result = Partition::empty();
        for j in 0..=ws.len() as i64 {
            let plus = half(j + 1, false);
            let minus = half(j, true);
            let block = recompose(&plus, &minus, &self.m, j as u64)?;
            result = result.union(&block);
        }
        debug_assert!(sp_membership(&result, &self.m));
        Ok(result)
    }

    /// The weight data exposed for an element: `phi_i - eps_i` per operator
    /// index. The empty partition carries `(1, 0, ..., 0)`.
    pub fn weight_vector(&self, lam: &Partition) -> Vec<i64> {
        (0..self.rank())
            .map(|i| {
                let d = self.decision(lam, i).0;
                d.phi - d.eps
            })
            .collect()
    }

    /// Compares the flat factor selection with pairwise and triple
    /// regroupings of the same statistics; associativity of the tensor rule
    /// demands agreement, including the index acted on.
    pub fn bracketing_agreement(&self, lam: &Partition, i: usize) -> bool {
        let top = self.top_block(lam) + self.extra_blocks as u64 + 1;
        let pairs = self.half_pairs(lam, top);
        let slots = self.slots(lam, i);
        let stats: Vec<FactorStats> = slots
            .iter()
            .map(|s| self.slot_stats(s, &self.slot_element(&pairs, s), i))
            .collect();
        let flat = tensor_rule(&stats);
        (2..=3).all(|g| crate::precrystal::nested_rule(&stats, g) == flat)
    }

    /// Checks the one-box law at `(lam, i)`: if the lowering is defined, the
    /// size grows by exactly one, membership is preserved, and the touched
    /// data recombines consistently. Returns false on any violation.
    pub fn one_box_audit(&self, lam: &Partition, i: usize) -> bool {
        match self.lower(lam, i) {
            None => true,
            Some(next) => {
                next.size() == lam.size() + 1 && sp_membership(&next, &self.m)
            }
        }
    }
}

impl Precrystal for SpCrystal {
    type Elem = Partition;

    fn rank(&self) -> usize {
        self.m.index_count()
    }

    fn raise(&self, lam: &Partition, i: usize) -> Option<Partition> {
        self.apply(lam, i, false)
    }

    fn lower(&self, lam: &Partition, i: usize) -> Option<Partition> {
        self.apply(lam, i, true)
    }

    fn eps(&self, lam: &Partition, i: usize) -> u64 {
        self.decision(lam, i).0.eps as u64
    }

    fn phi(&self, lam: &Partition, i: usize) -> u64 {
        self.decision(lam, i).0.phi as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parts;
    use crate::precrystal::audit_axioms;
    use crate::sp_class::enumerate_sp_by_size;

    fn m(p: u64) -> OddModulus {
        OddModulus::new(p).unwrap()
    }

    #[test]
    fn lowering_chain_from_empty() {
        let c = SpCrystal::new(m(5));
        let l0 = c.lower(&Partition::empty(), 0).unwrap();
        assert_eq!(l0, parts(&[1]));
        let l1 = c.lower(&l0, 1).unwrap();
        assert_eq!(l1, parts(&[2]));
        let l2 = c.lower(&l1, 2).unwrap();
        assert_eq!(l2, parts(&[3]));
    }

    #[test]
    fn weight_of_the_empty_partition() {
        let c = SpCrystal::new(m(5));
        assert_eq!(c.weight_vector(&Partition::empty()), vec![1, 0, 0]);
    }

    #[test]
    fn zero_lowering_examples() {
        let c = SpCrystal::new(m(5));
        assert_eq!(c.lower(&parts(&[4]), 0), Some(parts(&[5])));
        assert_eq!(c.raise(&parts(&[5]), 0), Some(parts(&[4])));
        assert_eq!(c.raise(&parts(&[1]), 0), Some(Partition::empty()));
        for i in 0..3 {
            assert_eq!(c.raise(&Partition::empty(), i), None);
        }
    }

    #[test]
    fn half_window_case_tables() {
        let p5 = m(5);
        let plus = HalfWindow {
            m: p5,
            j: 1,
            kind: HalfKind::Plus,
        };
        assert_eq!(plus.lower(&Partition::empty(), 0), Some(parts(&[6])));
        let minus = HalfWindow {
            m: p5,
            j: 1,
            kind: HalfKind::Minus,
        };
        assert_eq!(minus.lower(&parts(&[4]), 1), None);
        assert_eq!(minus.raise(&parts(&[4]), 1), Some(parts(&[3])));
    }

    #[test]
    fn junction_window_moves() {
        let p5 = m(5);
        let w = JunctionWindow { m: p5, j: 1 };
        assert_eq!(w.lower(&parts(&[2]), 2), Some(parts(&[3])));
        assert_eq!(w.raise(&parts(&[3]), 2), Some(parts(&[2])));
        assert_eq!(w.lower(&Partition::empty(), 2), None);
    }

    #[test]
    fn bfs_layers_match_class_sets() {
        for p in [3u64, 5, 7] {
            let md = m(p);
            let c = SpCrystal::new(md);
            let depth = 14;
            let g = crate::precrystal::crystal_graph(&c, vec![Partition::empty()], depth);
            let expected = enumerate_sp_by_size(&md, depth as u64);
            assert_eq!(g.layers.len(), depth + 1, "p={p}");
            for (n, layer) in g.layers.iter().enumerate() {
                let mut got: Vec<Partition> =
                    layer.iter().map(|&id| g.nodes[id].clone()).collect();
                got.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(got, expected[n], "p={p}, layer {n}");
            }
        }
    }

    #[test]
    fn one_box_and_axioms_small() {
        for p in [3u64, 5, 7] {
            let md = m(p);
            let c = SpCrystal::new(md);
            for layer in enumerate_sp_by_size(&md, 12) {
                for lam in layer {
                    for i in 0..c.rank() {
                        assert!(c.one_box_audit(&lam, i), "p={p} lam={lam} i={i}");
                    }
                    audit_axioms(&c, &lam);
                }
            }
        }
    }

    #[test]
    fn truncation_window_is_stable() {
        for p in [5u64, 7] {
            let md = m(p);
            let narrow = SpCrystal::new(md);
            let wide = SpCrystal::with_extra_blocks(md, 5);
            for layer in enumerate_sp_by_size(&md, 14) {
                for lam in layer {
                    for i in 0..narrow.rank() {
                        assert_eq!(
                            narrow.lower(&lam, i),
                            wide.lower(&lam, i),
                            "lower p={p} lam={lam} i={i}"
                        );
                        assert_eq!(
                            narrow.raise(&lam, i),
                            wide.raise(&lam, i),
                            "raise p={p} lam={lam} i={i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_round_trip() {
        for p in [3u64, 5, 7] {
            let md = m(p);
            let c = SpCrystal::new(md);
            for layer in enumerate_sp_by_size(&md, 16) {
                for lam in layer {
                    let ws = c.block_factorize(&lam);
                    for (idx, w) in ws.iter().enumerate() {
                        let j = idx as i64 + 1;
                        assert!(w.supported_on(
                            (j - 1) * p as i64 + 1,
                            j * p as i64 - 1
                        ));
                        assert!(sp_membership(w, &md), "junction {w} left the class");
                    }
                    assert_eq!(c.block_recombine(&ws).unwrap(), lam, "p={p}");
                }
            }
        }
    }
}
