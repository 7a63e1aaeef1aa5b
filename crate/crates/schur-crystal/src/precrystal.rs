//! Partial raising/lowering operators, the tensor product rule, and crystal
//! graphs.
//!
//! A precrystal is a set with indexed partial operators `raise_i` / `lower_i`
//! that are pseudo-inverse (`raise_i(b) = b'` iff `lower_i(b') = b`) and
//! locally nilpotent, so the statistics
//! `eps_i(b) = #{times raise_i applies}` and `phi_i(b) = #{times lower_i
//! applies}` are finite. "Undefined" is an explicit `None`, never an error.
//!
//! On a product `b_1 ⊗ ... ⊗ b_m` (leftmost factor first) the operators act
//! on a single factor selected by the max formula
//!
//! ```text
//! eps_i(b) = max_k [ eps_i(b_k) - sum_{u<k} (phi_i(b_u) - eps_i(b_u)) ]
//! phi_i(b) = max_k [ phi_i(b_k) + sum_{u>k} (phi_i(b_u) - eps_i(b_u)) ]
//! ```
//!
//! with `raise` applied at the smallest maximiser and `lower` at the largest.
//! The equivalent signature algorithm writes `-^eps +^phi` per factor,
//! cancels adjacent `+-` pairs, and reads the answer off the surviving
//! `-^a +^b`: `raise` targets the rightmost `-`, `lower` the leftmost `+`.
//! Both are implemented; agreement is a property-test target.

use std::collections::HashMap;
use std::fmt::Debug;
use std::fmt::Write as _;
use std::hash::Hash;

use rayon::prelude::*;

/// Indexed partial operators with finite statistics.
pub trait Precrystal {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    /// Number of operator indices; operators are indexed by `0..rank()`.
    fn rank(&self) -> usize;

    fn raise(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;

    fn lower(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;

    /// `eps_i(b)`: how many times `raise_i` applies.
    fn eps(&self, b: &Self::Elem, i: usize) -> u64 {
        let mut count = 0;
        let mut cur = b.clone();
        while let Some(next) = self.raise(&cur, i) {
            cur = next;
            count += 1;
            assert!(count < 1_000_000, "raise_{i} does not terminate");
        }
        count
    }

    /// `phi_i(b)`: how many times `lower_i` applies.
    fn phi(&self, b: &Self::Elem, i: usize) -> u64 {
        let mut count = 0;
        let mut cur = b.clone();
        while let Some(next) = self.lower(&cur, i) {
            cur = next;
            count += 1;
            assert!(count < 1_000_000, "lower_{i} does not terminate");
        }
        count
    }
}

/// Per-factor statistics for one operator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorStats {
    pub eps: i64,
    pub phi: i64,
}

/// The outcome of the tensor rule over a factor sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorDecision {
    pub eps: i64,
    pub phi: i64,
    /// Factor index acted on by `raise` (smallest maximiser), if any.
    pub raise_at: Option<usize>,
    /// Factor index acted on by `lower` (largest maximiser), if any.
    pub lower_at: Option<usize>,
}

/// Max-formula evaluation of the tensor rule.
pub fn tensor_rule(stats: &[FactorStats]) -> TensorDecision {
    assert!(!stats.is_empty(), "tensor rule needs at least one factor");
    let mut eps_best = i64::MIN;
    let mut raise_at = 0usize;
    let mut prefix = 0i64;
    for (k, s) in stats.iter().enumerate() {
        let val = s.eps - prefix;
        if val > eps_best {
            eps_best = val;
            raise_at = k;
        }
        prefix += s.phi - s.eps;
    }
    let mut phi_best = i64::MIN;
    let mut lower_at = 0usize;
    let mut suffix = 0i64;
    for (k, s) in stats.iter().enumerate().rev() {
        let val = s.phi + suffix;
        if val > phi_best {
            phi_best = val;
            lower_at = k;
        }
        suffix += s.phi - s.eps;
    }
    debug_assert!(eps_best >= 0 && phi_best >= 0);
    TensorDecision {
        eps: eps_best,
        phi: phi_best,
        raise_at: (eps_best > 0).then_some(raise_at),
        lower_at: (phi_best > 0).then_some(lower_at),
    }
}

/// Signature-algorithm evaluation of the tensor rule: independent of
/// `tensor_rule` and kept that way.
pub fn signature_rule(stats: &[FactorStats]) -> TensorDecision {
    // surviving stack entries: sign and owning factor
    let mut stack: Vec<(char, usize)> = Vec::new();
    for (k, s) in stats.iter().enumerate() {
        for _ in 0..s.eps {
            // '-' cancels a '+' immediately to its left
            if stack.last().map(|&(c, _)| c) == Some('+') {
                stack.pop();
            } else {
                stack.push(('-', k));
            }
        }
        for _ in 0..s.phi {
            stack.push(('+', k));
        }
    }
    let eps = stack.iter().filter(|&&(c, _)| c == '-').count() as i64;
    let phi = stack.len() as i64 - eps;
    let raise_at = stack
        .iter()
        .rev()
        .find(|&&(c, _)| c == '-')
        .map(|&(_, k)| k);
    let lower_at = stack.iter().find(|&&(c, _)| c == '+').map(|&(_, k)| k);
    TensorDecision {
        eps,
        phi,
        raise_at,
        lower_at,
    }
}

/// Evaluates the tensor rule with the factors grouped into consecutive
/// chunks of `group_size`: chunk statistics are combined first, the rule
/// picks a chunk, and the choice is resolved inside it. Associativity of
/// the tensor product makes this agree with the flat rule; the agreement is
/// a test target.
pub fn nested_rule(stats: &[FactorStats], group_size: usize) -> TensorDecision {
    assert!(group_size >= 1);
    let chunks: Vec<&[FactorStats]> = stats.chunks(group_size).collect();
    let outer_stats: Vec<FactorStats> = chunks
        .iter()
        .map(|c| {
            let d = tensor_rule(c);
            FactorStats {
                eps: d.eps,
                phi: d.phi,
            }
        })
        .collect();
    let outer = tensor_rule(&outer_stats);
    let resolve = |chunk_idx: Option<usize>, lower: bool| -> Option<usize> {
        let g = chunk_idx?;
        let inner = tensor_rule(chunks[g]);
        let local = if lower { inner.lower_at } else { inner.raise_at };
        local.map(|k| g * group_size + k)
    };
    TensorDecision {
        eps: outer.eps,
        phi: outer.phi,
        raise_at: resolve(outer.raise_at, false),
        lower_at: resolve(outer.lower_at, true),
    }
}

/// An ordered product of component precrystals acting on element tuples.
pub struct TensorProduct<P: Precrystal> {
    pub factors: Vec<P>,
}

impl<P: Precrystal> TensorProduct<P> {
    pub fn new(factors: Vec<P>) -> Self {
        assert!(!factors.is_empty());
        TensorProduct { factors }
    }

    pub fn stats(&self, b: &[P::Elem], i: usize) -> Vec<FactorStats> {
        self.factors
            .iter()
            .zip(b)
            .map(|(f, x)| FactorStats {
                eps: f.eps(x, i) as i64,
                phi: f.phi(x, i) as i64,
            })
            .collect()
    }
}

impl<P: Precrystal> Precrystal for TensorProduct<P> {
    type Elem = Vec<P::Elem>;

    fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).min().unwrap_or(0)
    }

    fn raise(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        debug_assert_eq!(b.len(), self.factors.len());
        let decision = tensor_rule(&self.stats(b, i));
        let k = decision.raise_at?;
        let lifted = self.factors[k]
            .raise(&b[k], i)
            .expect("selected factor admits the raise");
        let mut out = b.clone();
        out[k] = lifted;
        Some(out)
    }

    fn lower(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        debug_assert_eq!(b.len(), self.factors.len());
        let decision = tensor_rule(&self.stats(b, i));
        let k = decision.lower_at?;
        let lowered = self.factors[k]
            .lower(&b[k], i)
            .expect("selected factor admits the lower");
        let mut out = b.clone();
        out[k] = lowered;
        Some(out)
    }

    fn eps(&self, b: &Self::Elem, i: usize) -> u64 {
        tensor_rule(&self.stats(b, i)).eps as u64
    }

    fn phi(&self, b: &Self::Elem, i: usize) -> u64 {
        tensor_rule(&self.stats(b, i)).phi as u64
    }
}

/// A colored edge `from --color--> to` between node ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphEdge {
    pub from: usize,
    pub color: usize,
    pub to: usize,
}

/// A layered crystal graph produced by breadth-first application of the
/// lowering operators.
#[derive(Debug, Clone)]
pub struct CrystalGraph<E> {
    pub nodes: Vec<E>,
    /// Node ids grouped by the BFS layer in which they first appeared.
    pub layers: Vec<Vec<usize>>,
    pub edges: Vec<GraphEdge>,
}

impl<E> CrystalGraph<E> {
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }
}

/// BFS from `seeds`, applying every lowering operator up to `depth` times.
/// Layer `n` holds the elements first reached after `n` steps; edges into
/// already-visited elements are still recorded. Expansion within a layer is
/// parallel, then canonically re-sorted, so the output is deterministic.
pub fn crystal_graph<P: Precrystal>(
    structure: &P,
    seeds: Vec<P::Elem>,
    depth: usize,
) -> CrystalGraph<P::Elem>
where
    P: Sync,
{
    let mut ids: HashMap<P::Elem, usize> = HashMap::new();
    let mut nodes: Vec<P::Elem> = Vec::new();
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut edges: Vec<GraphEdge> = Vec::new();

    let mut frontier: Vec<P::Elem> = seeds;
    frontier.sort_unstable();
    frontier.dedup();
    for x in &frontier {
        ids.insert(x.clone(), nodes.len());
        nodes.push(x.clone());
    }
    layers.push((0..nodes.len()).collect());

    for _ in 0..depth {
        if frontier.is_empty() {
            break;
        }
        let expansions: Vec<(P::Elem, usize, P::Elem)> = frontier
            .par_iter()
            .flat_map_iter(|x| {
                (0..structure.rank()).filter_map(move |i| {
                    structure.lower(x, i).map(|y| (x.clone(), i, y))
                })
            })
            .collect();
        let mut new_layer: Vec<usize> = Vec::new();
        let mut next_frontier: Vec<P::Elem> = Vec::new();
        let mut fresh: Vec<&(P::Elem, usize, P::Elem)> = expansions.iter().collect();
        fresh.sort_unstable_by(|a, b| a.2.cmp(&b.2).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
        for (_, _, y) in &fresh {
            if !ids.contains_key(y) {
                ids.insert(y.clone(), nodes.len());
                new_layer.push(nodes.len());
                nodes.push(y.clone());
                next_frontier.push(y.clone());
            }
        }
        for (x, i, y) in &expansions {
            edges.push(GraphEdge {
                from: ids[x],
                color: *i,
                to: ids[y],
            });
        }
        if new_layer.is_empty() {
            break;
        }
        layers.push(new_layer);
        frontier = next_frontier;
    }
    edges.sort_unstable();
    edges.dedup();
    CrystalGraph {
        nodes,
        layers,
        edges,
    }
}

/// Renders a crystal graph in DOT syntax with stable node order.
pub fn to_dot<E>(graph: &CrystalGraph<E>, name: &str, label: impl Fn(&E) -> String) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=TB;");
    let _ = writeln!(out, "  node [shape=box];");
    for (id, node) in graph.nodes.iter().enumerate() {
        let text = label(node).replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(out, "  n{id} [label=\"{text}\"];");
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.color);
    }
    out.push_str("}\n");
    out
}

/// Audits the pseudo-inverse and counting axioms at one element; panics with
/// a description on violation. Used by verification sweeps.
pub fn audit_axioms<P: Precrystal>(structure: &P, b: &P::Elem) {
    for i in 0..structure.rank() {
        if let Some(up) = structure.raise(b, i) {
            let back = structure.lower(&up, i);
            assert!(
                back.as_ref() == Some(b),
                "lower_{i}(raise_{i}(x)) != x at {b:?}"
            );
        }
        if let Some(down) = structure.lower(b, i) {
            let back = structure.raise(&down, i);
            assert!(
                back.as_ref() == Some(b),
                "raise_{i}(lower_{i}(x)) != x at {b:?}"
            );
            assert_eq!(
                structure.eps(&down, i),
                structure.eps(b, i) + 1,
                "eps_{i} must grow by one under lower at {b:?}"
            );
            assert_eq!(
                structure.phi(&down, i) + 1,
                structure.phi(b, i),
                "phi_{i} must shrink by one under lower at {b:?}"
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The chain 1 -> 2 -> ... -> n with a single operator.
    struct Chain {
        n: u64,
    }

    impl Precrystal for Chain {
        type Elem = u64;

        fn rank(&self) -> usize {
            1
        }

        fn raise(&self, b: &u64, _i: usize) -> Option<u64> {
            (*b > 1).then(|| b - 1)
        }

        fn lower(&self, b: &u64, _i: usize) -> Option<u64> {
            (*b < self.n).then(|| b + 1)
        }
    }

    #[test]
    fn chain_statistics() {
        let c = Chain { n: 3 };
        assert_eq!(c.eps(&1, 0), 0);
        assert_eq!(c.phi(&1, 0), 2);
        audit_axioms(&c, &2);
    }

    #[test]
    fn tensor_rule_on_two_letter_chain() {
        // B = {1, 2}: eps(1) = 0, phi(1) = 1, eps(2) = 1, phi(2) = 0
        let t = TensorProduct::new(vec![Chain { n: 2 }, Chain { n: 2 }]);
        // 1 ⊗ 1
        let d = tensor_rule(&t.stats(&vec![1, 1], 0));
        assert_eq!((d.eps, d.phi), (0, 2));
        assert_eq!(d.lower_at, Some(0));
        assert_eq!(d.raise_at, None);
        assert_eq!(t.lower(&vec![1, 1], 0), Some(vec![2, 1]));
        // 2 ⊗ 1
        let d = tensor_rule(&t.stats(&vec![2, 1], 0));
        assert_eq!((d.eps, d.phi), (1, 1));
        assert_eq!(t.raise(&vec![2, 1], 0), Some(vec![1, 1]));
        assert_eq!(t.lower(&vec![2, 1], 0), Some(vec![2, 2]));
        // pseudo-inverse round trip
        assert_eq!(t.lower(&t.raise(&vec![2, 1], 0).unwrap(), 0), Some(vec![2, 1]));
        // single factor: plain statistics
        let single = TensorProduct::new(vec![Chain { n: 2 }]);
        let d = tensor_rule(&single.stats(&vec![2], 0));
        assert_eq!((d.eps, d.phi), (1, 0));
    }

    #[test]
    fn signature_rule_matches_examples() {
        let stats = [
            FactorStats { eps: 0, phi: 1 },
            FactorStats { eps: 0, phi: 1 },
        ];
        let d = signature_rule(&stats);
        assert_eq!((d.eps, d.phi, d.raise_at, d.lower_at), (0, 2, None, Some(0)));
        let unit = [FactorStats { eps: 0, phi: 0 }];
        let d = signature_rule(&unit);
        assert_eq!((d.eps, d.phi, d.raise_at, d.lower_at), (0, 0, None, None));
        let mixed = [
            FactorStats { eps: 1, phi: 0 },
            FactorStats { eps: 0, phi: 1 },
        ];
        let d = signature_rule(&mixed);
        assert_eq!((d.eps, d.phi), (1, 1));
        assert_eq!(d.raise_at, Some(0));
        assert_eq!(d.lower_at, Some(1));
    }

    #[test]
    fn bfs_layers_on_chain() {
        let c = Chain { n: 4 };
        let g = crystal_graph(&c, vec![1], 10);
        assert_eq!(g.layer_sizes(), vec![1, 1, 1, 1]);
        assert_eq!(g.edges.len(), 3);
        let dot = to_dot(&g, "chain", |x| x.to_string());
        assert!(dot.contains("n0 -> n1"));
    }
}
