//! Young graphs.
//!
//! The node set of `Y(n, b)` consists of carry pairs `(u, w)`, standing for
//! `(c_j, c_{k−j+1})` while a palintiple is read from both ends at once. An
//! edge labelled `(d_low, d_high) = (d_j, d_{k−j})` leads from `(u, w)` to
//! `(u', w') = (c_{j+1}, c_{k−j})` when the schoolbook recurrence holds at
//! both mirrored positions:
//!
//! ```text
//! n·d_high + u  = d_low  + b·u'
//! n·d_low  + w' = d_high + b·w
//! ```
//!
//! A walk from the start `(0, 0)` whose first edge has nonzero labels spells
//! a palintiple when it stops at an even-terminal node (`u = w`) or at an
//! odd-terminal node admitting a middle digit `d` with `(n−1)·d = b·w − u`.
//! The graph keeps only nodes lying on such a walk.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::instance::Palintiple;
use crate::search::enumerate_length;

/// Default node bound for canonical labelling.
pub const DEFAULT_NODE_BOUND: usize = 64;

const LEAF_BUDGET: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YoungError {
    #[error("invalid parameters: need 2 <= n < b, got n = {n}, b = {b}")]
    InvalidParameters { n: u64, b: u64 },
    #[error("Y({n},{b}) is empty: no ({n},{b})-palintiple of any length exists")]
    Degenerate { n: u64, b: u64 },
    #[error("graph too large for canonical labelling ({nodes} nodes, bound {bound})")]
    SizeExceeded { nodes: usize, bound: usize },
}

pub type Node = (u64, u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub d_low: u64,
    pub d_high: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungGraph {
    n: u64,
    b: u64,
    nodes: Vec<Node>,
    start: usize,
    even: Vec<bool>,
    odd: Vec<bool>,
    edges: Vec<Edge>,
}

fn transitions(n: u64, b: u64, (u, w): Node) -> impl Iterator<Item = (u64, u64, Node)> {
    (0..b).filter_map(move |d_high| {
        let t = n * d_high + u;
        let (d_low, u2) = (t % b, t / b);
        let rhs = d_high + b * w;
        let lhs = n * d_low;
        (rhs >= lhs && rhs - lhs < n).then(|| (d_low, d_high, (u2, rhs - lhs)))
    })
}

fn middle_digit(n: u64, b: u64, (u, w): Node) -> Option<u64> {
    let num = b * w;
    if num < u || !(num - u).is_multiple_of(n - 1) {
        return None;
    }
    let d = (num - u) / (n - 1);
    (d < b).then_some(d)
}

fn is_even_terminal((u, w): Node) -> bool {
    u == w
}

/// Builds `Y(n, b)`, pruned to nodes on some accepting walk.
pub fn build_young_graph(n: u64, b: u64) -> Result<YoungGraph, YoungError> {
    if n < 2 || b <= n {
        return Err(YoungError::InvalidParameters { n, b });
    }
    let start: Node = (0, 0);
    let terminal = |v: Node| is_even_terminal(v) || middle_digit(n, b, v).is_some();

    // nodes reachable after at least one step (first edge with nonzero labels)
    let mut reach: BTreeSet<Node> = BTreeSet::new();
    let mut queue: VecDeque<Node> = VecDeque::new();
    for (dl, dh, v) in transitions(n, b, start) {
        if dl != 0 && dh != 0 && reach.insert(v) {
            queue.push_back(v);
        }
    }
    let mut succ: BTreeMap<Node, Vec<(u64, u64, Node)>> = BTreeMap::new();
    succ.insert(start, transitions(n, b, start).collect());
    while let Some(v) = queue.pop_front() {
        let out: Vec<_> = transitions(n, b, v).collect();
        for &(_, _, x) in &out {
            if reach.insert(x) {
                queue.push_back(x);
            }
        }
        succ.insert(v, out);
    }

    // nodes that can reach a terminal
    let known: BTreeSet<Node> = succ.keys().copied().chain(reach.iter().copied()).collect();
    let mut pred: BTreeMap<Node, Vec<Node>> = BTreeMap::new();
    for (&v, out) in &succ {
        for &(_, _, x) in out {
            pred.entry(x).or_default().push(v);
        }
    }
    let mut coreach: BTreeSet<Node> = known.iter().copied().filter(|v| terminal(*v)).collect();
    let mut queue: VecDeque<Node> = coreach.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        for &p in pred.get(&v).into_iter().flatten() {
            if coreach.insert(p) {
                queue.push_back(p);
            }
        }
    }

    let live: BTreeSet<Node> = reach.intersection(&coreach).copied().collect();
    if live.is_empty() {
        return Err(YoungError::Degenerate { n, b });
    }
    let mut keep = live;
    keep.insert(start);
    let nodes: Vec<Node> = keep.into_iter().collect();
    let index: BTreeMap<Node, usize> = nodes.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut edges = Vec::new();
    for (i, &v) in nodes.iter().enumerate() {
        for (d_low, d_high, x) in transitions(n, b, v) {
            if let Some(&j) = index.get(&x) {
                edges.push(Edge { from: i, to: j, d_low, d_high });
            }
        }
    }
    edges.sort();
    Ok(YoungGraph {
        n,
        b,
        start: index[&start],
        even: nodes.iter().map(|v| is_even_terminal(*v)).collect(),
        odd: nodes.iter().map(|v| middle_digit(n, b, *v).is_some()).collect(),
        nodes,
        edges,
    })
}

impl YoungGraph {
    pub fn multiplier(&self) -> u64 {
        self.n
    }

    pub fn base(&self) -> u64 {
        self.b
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_even_terminal(&self, i: usize) -> bool {
        self.even[i]
    }

    pub fn is_odd_terminal(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of edges from `i` to `j`.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.edges.iter().filter(|e| e.from == i && e.to == j).count()
    }

    pub fn skeleton(&self) -> Skeleton {
        Skeleton { start: self.start, even: self.even.clone(), odd: self.odd.clone(), matrix: self.matrix() }
    }

    fn matrix(&self) -> Vec<Vec<u32>> {
        let m = self.nodes.len();
        let mut mat = vec![vec![0u32; m]; m];
        for e in &self.edges {
            mat[e.from][e.to] += 1;
        }
        mat
    }

    /// Distinct edge labels `(d_low, d_high)`.
    pub fn labels(&self) -> BTreeSet<(u64, u64)> {
        self.edges.iter().map(|e| (e.d_low, e.d_high)).collect()
    }

    /// Palintiples of `length` digits spelled by accepting walks, sorted by
    /// value.
    pub fn accepted_paths(&self, length: usize) -> Vec<Palintiple> {
        assert!(length >= 2);
        let mut out_edges: Vec<Vec<&Edge>> = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            out_edges[e.from].push(e);
        }
        let mut out = Vec::new();
        let mut low = Vec::new();
        let mut high = Vec::new();
        self.walk(self.start, length, &out_edges, &mut low, &mut high, &mut out);
        out.sort();
        out
    }

    fn walk(
        &self,
        at: usize,
        length: usize,
        out_edges: &[Vec<&Edge>],
        low: &mut Vec<u64>,
        high: &mut Vec<u64>,
        out: &mut Vec<Palintiple>,
    ) {
        if low.len() == length / 2 {
            let middle = if length.is_multiple_of(2) {
                if !self.even[at] {
                    return;
                }
                None
            } else {
                match middle_digit(self.n, self.b, self.nodes[at]) {
                    Some(d) => Some(d),
                    None => return,
                }
            };
            let mut digits = low.clone();
            digits.extend(middle);
            digits.extend(high.iter().rev());
            out.push(Palintiple::from_lsf(self.n, self.b, digits).expect("accepting walk yields a palintiple"));
            return;
        }
        for e in &out_edges[at] {
            if low.is_empty() && (e.d_low == 0 || e.d_high == 0) {
                continue;
            }
            low.push(e.d_low);
            high.push(e.d_high);
            self.walk(e.to, length, out_edges, low, high, out);
            low.pop();
            high.pop();
        }
    }

    /// Graphviz rendering. Nodes are `"u,w"`; one extra periphery for each
    /// terminal flag (even, then odd); the start node is a box. Edge labels
    /// are `"d_low,d_high"`.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"Y({},{})\" {{", self.n, self.b);
        let _ = writeln!(s, "  // edge labels are (d_low, d_high) = (d_j, d_(k-j))");
        for (i, (u, w)) in self.nodes.iter().enumerate() {
            let peripheries = 1 + self.even[i] as usize + self.odd[i] as usize;
            let shape = if i == self.start { "box" } else { "ellipse" };
            let _ = writeln!(
                s,
                "  \"{u},{w}\" [shape={shape}, peripheries={peripheries}, even={}, odd={}];",
                self.even[i], self.odd[i]
            );
        }
        for e in &self.edges {
            let (fu, fw) = self.nodes[e.from];
            let (tu, tw) = self.nodes[e.to];
            let _ = writeln!(s, "  \"{fu},{fw}\" -> \"{tu},{tw}\" [label=\"{},{}\"];", e.d_low, e.d_high);
        }
        s.push_str("}\n");
        s
    }

    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            multiplier: self.n,
            base: self.b,
            nodes: self.nodes.iter().map(|(u, w)| [*u, *w]).collect(),
            start: [self.nodes[self.start].0, self.nodes[self.start].1],
            even_terminal: self.even.clone(),
            odd_terminal: self.odd.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| GraphEdge {
                    from: [self.nodes[e.from].0, self.nodes[e.from].1],
                    to: [self.nodes[e.to].0, self.nodes[e.to].1],
                    label: [e.d_low, e.d_high],
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphEdge {
    pub from: [u64; 2],
    pub to: [u64; 2],
    pub label: [u64; 2],
}

/// JSON view of a graph.
#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub multiplier: u64,
    pub base: u64,
    pub nodes: Vec<[u64; 2]>,
    pub start: [u64; 2],
    pub even_terminal: Vec<bool>,
    pub odd_terminal: Vec<bool>,
    pub edges: Vec<GraphEdge>,
}

// ---------------------------------------------------------------------------
// Canonical labelling

/// Byte encoding of (node count, start index, flag vectors, multiplicity
/// matrix) under a canonical node order. Labels are not part of it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// The label-free structure that isomorphism looks at: start node, terminal
/// flags and the edge multiplicity matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub start: usize,
    pub even: Vec<bool>,
    pub odd: Vec<bool>,
    /// `matrix[i][j]` = number of edges `i → j`.
    pub matrix: Vec<Vec<u32>>,
}

impl Skeleton {
    pub fn node_count(&self) -> usize {
        self.matrix.len()
    }

    /// Node `i` of `self` becomes node `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Skeleton {
        let m = self.node_count();
        let mut out = Skeleton {
            start: perm[self.start],
            even: vec![false; m],
            odd: vec![false; m],
            matrix: vec![vec![0; m]; m],
        };
        for i in 0..m {
            out.even[perm[i]] = self.even[i];
            out.odd[perm[i]] = self.odd[i];
            for j in 0..m {
                out.matrix[perm[i]][perm[j]] = self.matrix[i][j];
            }
        }
        out
    }

    /// Canonical form by colour refinement plus individualisation, keeping
    /// the lexicographically least encoding over all discrete leaves.
    pub fn canonical_form(&self, bound: usize) -> Result<CanonicalForm, YoungError> {
        let m = self.node_count();
        if m > bound {
            return Err(YoungError::SizeExceeded { nodes: m, bound });
        }
        let initial: Vec<(bool, bool, bool)> = (0..m).map(|i| (i == self.start, self.even[i], self.odd[i])).collect();
        let mut search = Canon { g: self, best: None, leaves: 0 };
        search.explore(rank(&initial));
        if search.leaves > LEAF_BUDGET {
            return Err(YoungError::SizeExceeded { nodes: m, bound });
        }
        Ok(CanonicalForm(search.best.expect("at least one leaf")))
    }

    /// Isomorphism by trying every bijection. Exponential; for small
    /// graphs and cross-checking only.
    pub fn brute_force_isomorphic(&self, other: &Skeleton) -> bool {
        let m = self.node_count();
        if m != other.node_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..m).collect();
        loop {
            if self.permuted(&perm) == *other {
                return true;
            }
            // next permutation in lexicographic order
            let Some(i) = (1..m).rev().find(|&i| perm[i - 1] < perm[i]) else {
                return false;
            };
            let j = (i..m).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
    }
}

pub fn canonical_form(g: &YoungGraph) -> Result<CanonicalForm, YoungError> {
    canonical_form_bounded(g, DEFAULT_NODE_BOUND)
}

pub fn canonical_form_bounded(g: &YoungGraph, bound: usize) -> Result<CanonicalForm, YoungError> {
    g.skeleton().canonical_form(bound)
}

pub fn isomorphic(a: &YoungGraph, b: &YoungGraph) -> Result<bool, YoungError> {
    if a.node_count() != b.node_count() || a.edges.len() != b.edges.len() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Dense ranks of arbitrary ordered keys.
fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

struct Canon<'a> {
    g: &'a Skeleton,
    best: Option<Vec<u8>>,
    leaves: usize,
}

impl Canon<'_> {
    fn refine(&self, mut colours: Vec<usize>) -> Vec<usize> {
        let m = colours.len();
        loop {
            let cells = colours.iter().max().map_or(0, |c| c + 1);
            let sigs: Vec<(usize, Vec<(usize, u32)>, Vec<(usize, u32)>)> = (0..m)
                .map(|i| {
                    let mut out: Vec<(usize, u32)> =
                        (0..m).filter(|&j| self.g.matrix[i][j] > 0).map(|j| (colours[j], self.g.matrix[i][j])).collect();
                    let mut inc: Vec<(usize, u32)> =
                        (0..m).filter(|&j| self.g.matrix[j][i] > 0).map(|j| (colours[j], self.g.matrix[j][i])).collect();
                    out.sort_unstable();
                    inc.sort_unstable();
                    (colours[i], out, inc)
                })
                .collect();
            colours = rank(&sigs);
            if colours.iter().max().map_or(0, |c| c + 1) == cells {
                return colours;
            }
        }
    }

    fn explore(&mut self, colours: Vec<usize>) {
        if self.leaves > LEAF_BUDGET {
            return;
        }
        let colours = self.refine(colours);
        let m = colours.len();
        let mut counts = vec![0usize; m];
        for &c in &colours {
            counts[c] += 1;
        }
        let Some(target) = (0..m).find(|&c| counts[c] > 1) else {
            self.leaves += 1;
            let enc = self.encode(&colours);
            if self.best.as_ref().is_none_or(|b| enc < *b) {
                self.best = Some(enc);
            }
            return;
        };
        for v in (0..m).filter(|&v| colours[v] == target) {
            let split: Vec<usize> = colours
                .iter()
                .enumerate()
                .map(|(i, &c)| if c > target || (c == target && i != v) { c + 1 } else { c })
                .collect();
            self.explore(split);
        }
    }

    fn encode(&self, colours: &[usize]) -> Vec<u8> {
        let m = colours.len();
        let mut order = vec![0usize; m];
        for (v, &c) in colours.iter().enumerate() {
            order[c] = v;
        }
        let mut enc = Vec::with_capacity(8 + 2 * m + 4 * m * m);
        enc.extend((m as u32).to_be_bytes());
        enc.extend((colours[self.g.start] as u32).to_be_bytes());
        enc.extend(order.iter().map(|&v| self.g.even[v] as u8));
        enc.extend(order.iter().map(|&v| self.g.odd[v] as u8));
        for &i in &order {
            for &j in &order {
                enc.extend(self.g.matrix[i][j].to_be_bytes());
            }
        }
        enc
    }
}

// ---------------------------------------------------------------------------
// Graph classes

/// Whether `g` is isomorphic to `Y(9, 10)`.
pub fn is_1089_graph(g: &YoungGraph) -> bool {
    let reference = build_young_graph(9, 10).expect("Y(9,10) is not empty");
    isomorphic(g, &reference).unwrap_or(false)
}

/// Returns the node count `m` when every ordered pair of distinct nodes is
/// joined by an edge, every node carries a loop and is both even- and
/// odd-terminal.
pub fn is_complete(g: &YoungGraph) -> Option<usize> {
    let m = g.node_count();
    if m < 2 {
        return None;
    }
    let mat = g.matrix();
    let joined = (0..m).all(|i| (0..m).all(|j| mat[i][j] > 0));
    let flags = (0..m).all(|i| g.even[i] && g.odd[i]);
    (joined && flags).then_some(m)
}

// ---------------------------------------------------------------------------
// Carry/digit correspondence

/// Carries `c_k ..= c_1` with leading zeros removed.
pub fn nontrivial_carries(p: &Palintiple) -> Vec<u64> {
    let msf = p.carries_msf();
    let body = &msf[..msf.len() - 1];
    let first = body.iter().position(|c| *c != 0).unwrap_or(body.len());
    body[first..].to_vec()
}

#[derive(Debug, Clone, Serialize)]
pub struct CarryCounterexample {
    pub palintiple: String,
    pub carries: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    pub lower: [u64; 2],
    pub upper: [u64; 2],
    pub max_len: usize,
    pub upper_count: usize,
    pub lower_count: usize,
    /// Every upper palintiple's nontrivial carries spell a lower palintiple.
    pub carries_are_palintiples: bool,
    /// Every lower palintiple occurs as such a carry sequence.
    pub palintiples_are_carries: bool,
    pub carry_counterexamples: Vec<CarryCounterexample>,
    pub missing_palintiples: Vec<String>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.carries_are_palintiples && self.palintiples_are_carries
    }
}

/// Compares `(n̂, b̂)`-palintiples of length `<= max_len` with
/// `(n, b)`-palintiples of length `<= max_len − 1`.
pub fn correspondence_check(n: u64, b: u64, nhat: u64, bhat: u64, max_len: usize) -> CorrespondenceReport {
    assert!(max_len >= 3, "max_len must allow at least one derived length");
    let upper: Vec<Palintiple> = (2..=max_len).flat_map(|l| enumerate_length(nhat, bhat, l)).collect();
    let lower: Vec<Palintiple> = (2..max_len).flat_map(|l| enumerate_length(n, b, l)).collect();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut carry_counterexamples = Vec::new();
    for p in &upper {
        let c = nontrivial_carries(p);
        if Palintiple::new(n, b, &c).is_ok() {
            seen.insert(c);
        } else {
            carry_counterexamples.push(CarryCounterexample { palintiple: p.literal(), carries: p.carries_msf() });
        }
    }
    let missing: Vec<String> = lower
        .iter()
        .filter(|p| !seen.contains(&p.digits_msf()))
        .map(|p| p.literal())
        .collect();
    CorrespondenceReport {
        lower: [n, b],
        upper: [nhat, bhat],
        max_len,
        upper_count: upper.len(),
        lower_count: lower.len(),
        carries_are_palintiples: carry_counterexamples.is_empty(),
        palintiples_are_carries: missing.is_empty(),
        carry_counterexamples,
        missing_palintiples: missing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(n: u64, b: u64) -> YoungGraph {
        build_young_graph(n, b).unwrap()
    }

    #[test]
    fn graph_of_1089() {
        let g = y(9, 10);
        assert_eq!(g.nodes(), &[(0, 0), (0, 8), (8, 0), (8, 8)]);
        assert!(is_1089_graph(&g));
        assert_eq!(is_complete(&g), None);
    }

    #[test]
    fn empty_graph() {
        assert_eq!(build_young_graph(2, 4), Err(YoungError::Degenerate { n: 2, b: 4 }));
        assert!(matches!(build_young_graph(4, 4), Err(YoungError::InvalidParameters { .. })));
    }

    #[test]
    fn walks_match_enumeration() {
        for (n, b) in [(4, 10), (9, 10), (2, 3), (2, 5), (3, 14)] {
            let g = y(n, b);
            for l in 2..=7 {
                assert_eq!(g.accepted_paths(l), enumerate_length(n, b, l), "({n},{b}) length {l}");
            }
        }
    }

    #[test]
    fn hoey_graphs_are_isomorphic() {
        assert!(isomorphic(&y(3, 14), &y(3, 22)).unwrap());
        assert!(!isomorphic(&y(9, 10), &y(2, 5)).unwrap());
        assert!(!is_1089_graph(&y(3, 14)));
    }

    #[test]
    fn complete_graph() {
        assert_eq!(is_complete(&y(2, 5)), Some(2));
        assert_eq!(is_complete(&y(3, 14)), None);
    }

    #[test]
    fn kendrick_criterion() {
        for b in 3..=16u64 {
            for n in 2..b {
                let is_1089 = build_young_graph(n, b).is_ok_and(|g| is_1089_graph(&g));
                assert_eq!(is_1089, b % (n + 1) == 0, "({n},{b})");
            }
        }
    }

    #[test]
    fn labels_become_nodes() {
        let labels = y(2, 3).labels();
        let nodes: BTreeSet<Node> = y(3, 14).nodes().iter().copied().collect();
        assert_eq!(labels, nodes);
    }

    #[test]
    fn correspondence() {
        assert!(correspondence_check(2, 3, 3, 14, 6).passed());
        let r = correspondence_check(2, 5, 9, 107, 4);
        assert!(!r.carries_are_palintiples && r.palintiples_are_carries);
        assert_eq!(r.carry_counterexamples[0].carries, vec![6, 2, 0]);
    }

    #[test]
    fn size_bound() {
        let g = y(9, 10);
        assert_eq!(canonical_form_bounded(&g, 3), Err(YoungError::SizeExceeded { nodes: 4, bound: 3 }));
    }

    #[test]
    fn dot_output() {
        let dot = y(9, 10).to_dot();
        assert!(dot.starts_with("digraph \"Y(9,10)\" {"));
        assert!(dot.contains("\"0,0\" -> \"8,0\" [label=\"1,9\"];"));
    }

    #[test]
    fn carries_trimmed() {
        let p = Palintiple::new(55, 1728, &[220, 1477, 26, 4]).unwrap();
        assert_eq!(nontrivial_carries(&p), vec![47, 7]);
    }
}
