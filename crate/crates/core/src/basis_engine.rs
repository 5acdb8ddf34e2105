//! Two-trie backtracking over `(p+1)`-combinations of q-sets.
//!
//! The first trie `T1` holds every index tuple `i1 < ... < ik` with `k <= p`
//! that extends to a `p`-tuple, and caches at each leaf the core of the
//! family of edges containing the union of the chosen q-sets. The second trie
//! `T2` (tuples of length up to `p+1`) is never built: it is walked depth
//! first while `p+2` cursors into `T1` track the tuple prefix and the tuples
//! obtained by omitting each chosen index. At a `T2` leaf the cursors
//! `I_1..I_{p+1}` sit on the cached cores of the `p+1` support sets.

use serde::Serialize;
use smallvec::SmallVec;

use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::hypercore::Hypergraph;
use crate::VertexSet;

/// Answers core queries for the implicit family `H_P` of edges containing `P`.
pub trait CoreProvider {
    /// Size of the vertex universe.
    fn universe(&self) -> usize;

    /// The core of `H_P`, or `None` when `H_P` is empty.
    fn core_of(&self, p: &VertexSet) -> Option<VertexSet>;

    /// Whether `H_P` is empty.
    fn is_empty_for(&self, p: &VertexSet) -> bool {
        self.core_of(p).is_none()
    }

    /// Rough description of what one call costs.
    fn cost(&self) -> ProviderCost;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProviderCost {
    pub name: &'static str,
    /// Approximate number of word operations per call.
    pub work: usize,
}

impl CoreProvider for Hypergraph {
    fn universe(&self) -> usize {
        self.n()
    }

    fn core_of(&self, p: &VertexSet) -> Option<VertexSet> {
        self.core_containing(p)
    }

    fn is_empty_for(&self, p: &VertexSet) -> bool {
        !self.edges().iter().any(|e| p.is_subset(e))
    }

    fn cost(&self) -> ProviderCost {
        ProviderCost { name: "edge scan", work: self.m() * (self.n() / 64 + 1) }
    }
}

/// How the first trie is stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum T1Storage {
    /// Eager when the leaf count is at most `eager_leaf_limit`.
    #[default]
    Auto,
    /// Build every node and leaf core before the traversal.
    Eager,
    /// Address nodes by their index tuple and compute leaf cores on demand.
    Implicit,
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Refuse to run when `C(N, p)` exceeds this.
    pub leaf_budget: u64,
    pub eager_leaf_limit: u64,
    pub storage: T1Storage,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self { leaf_budget: 1_000_000_000, eager_leaf_limit: 1 << 20, storage: T1Storage::Auto }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `(p,q)`-Helly: every nontrivial basis needs `|core(H_S^∪)| >= q`.
    Plain,
    /// Hereditary: every nontrivial starlike basis needs `core(H_S^∪)` to meet `ext(S)`.
    Hereditary,
}

/// A nontrivial basis violating the tested condition. `support_cores[i]` is
/// the core for the support set that omits `members[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisViolation {
    pub members: Vec<VertexSet>,
    pub support_cores: Vec<VertexSet>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    /// Number of distinct q-sets, `N`.
    pub qsets: usize,
    pub t1_nodes: u64,
    pub t1_leaves: u64,
    pub t2_nodes: u64,
    pub t2_leaves: u64,
    pub implicit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineOutcome {
    pub holds: bool,
    pub violation: Option<BasisViolation>,
    pub stats: EngineStats,
}

/// `Σ_{k=0..p} C(N-p+k, k)`, the node count of `T1`.
pub fn t1_node_count(n: u64, p: u64) -> u64 {
    if n < p {
        return 0;
    }
    (0..=p).fold(0u64, |acc, k| acc.saturating_add(binomial(n - p + k, k)))
}

/// Decides the `(p,q)`-Helly condition over all nontrivial bases drawn from `qsets`.
pub fn run_plain<P: CoreProvider + ?Sized>(
    qsets: Vec<VertexSet>,
    p: usize,
    q: usize,
    provider: &P,
    config: &EngineConfig,
) -> Result<EngineOutcome> {
    run(qsets, p, q, provider, config, Mode::Plain)
}

/// Decides the hereditary `(p,q)`-Helly condition over all nontrivial starlike bases.
pub fn run_hereditary<P: CoreProvider + ?Sized>(
    qsets: Vec<VertexSet>,
    p: usize,
    q: usize,
    provider: &P,
    config: &EngineConfig,
) -> Result<EngineOutcome> {
    run(qsets, p, q, provider, config, Mode::Hereditary)
}

pub fn run<P: CoreProvider + ?Sized>(
    mut qsets: Vec<VertexSet>,
    p: usize,
    q: usize,
    provider: &P,
    config: &EngineConfig,
    mode: Mode,
) -> Result<EngineOutcome> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("p and q must be positive"));
    }
    if let Some(bad) = qsets.iter().find(|s| s.len() != q) {
        return Err(Error::invalid(format!("{bad} is not a {q}-set")));
    }
    if let Some(bad) = qsets.iter().find(|s| s.bound() > provider.universe()) {
        return Err(Error::invalid(format!("{bad} leaves the vertex universe")));
    }
    qsets.sort();
    qsets.dedup();
    let n_q = qsets.len();
    let mut stats = EngineStats { qsets: n_q, ..Default::default() };
    if n_q <= p {
        return Ok(EngineOutcome { holds: true, violation: None, stats });
    }
    let leaves = binomial(n_q as u64, p as u64);
    if leaves > config.leaf_budget {
        return Err(Error::BudgetExceeded(format!(
            "C({n_q}, {p}) = {leaves} trie leaves exceeds the budget of {}",
            config.leaf_budget
        )));
    }
    let eager = match config.storage {
        T1Storage::Eager => true,
        T1Storage::Implicit => false,
        T1Storage::Auto => leaves <= config.eager_leaf_limit,
    };
    let ctx = Context { qsets: &qsets, p, q, mode };
    if eager {
        let trie = TrieT1::build(&qsets, p, provider)?;
        stats.t1_nodes = trie.node_count() as u64;
        stats.t1_leaves = trie.leaf_count() as u64;
        traverse(&trie, &ctx, provider.universe(), stats)
    } else {
        stats.implicit = true;
        let store = ImplicitT1 { qsets: &qsets, provider };
        traverse(&store, &ctx, provider.universe(), stats)
    }
}

struct Context<'a> {
    qsets: &'a [VertexSet],
    p: usize,
    q: usize,
    mode: Mode,
}

/// Navigation over `T1` shared by both storage modes.
trait Store {
    type Cursor: Clone;
    fn root(&self) -> Self::Cursor;
    fn first_child(&self, c: &mut Self::Cursor);
    fn next_sibling(&self, c: &mut Self::Cursor);
    fn parent(&self, c: &mut Self::Cursor);
    /// Whether the family for the node's union is empty. `union` is the
    /// union of the q-sets on the node's tuple.
    fn is_dead(&self, c: &Self::Cursor, union: &VertexSet) -> bool;
    fn leaf_core<'s>(&'s self, c: &'s mut Self::Cursor) -> Result<Option<&'s VertexSet>>;
}

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Node {
    parent: u32,
    first_child: u32,
    next_sibling: u32,
    slot: u32,
    dead: bool,
}

/// The first trie, fully materialized. Children are kept in sorted sibling
/// lists and leaves carry the cached core (or `None` for an empty family).
pub struct TrieT1 {
    nodes: Vec<Node>,
    leaves: Vec<Option<VertexSet>>,
}

impl TrieT1 {
    /// Runs the backtracking over all index tuples and stores its results.
    /// `qsets` must already be sorted and distinct.
    pub fn build<P: CoreProvider + ?Sized>(qsets: &[VertexSet], p: usize, provider: &P) -> Result<Self> {
        let mut trie = TrieT1 { nodes: Vec::new(), leaves: Vec::new() };
        trie.nodes.push(Node { parent: NONE, first_child: NONE, next_sibling: NONE, slot: NONE, dead: false });
        if qsets.len() >= p {
            let mut union = Union::new(provider.universe(), p);
            trie.grow(0, 0, 0, qsets, p, provider, &mut union)?;
        }
        Ok(trie)
    }

    #[allow(clippy::too_many_arguments)]
    fn grow<P: CoreProvider + ?Sized>(
        &mut self,
        node: u32,
        depth: usize,
        start: usize,
        qsets: &[VertexSet],
        p: usize,
        provider: &P,
        union: &mut Union,
    ) -> Result<()> {
        let last = qsets.len() - p + depth;
        let parent_dead = self.nodes[node as usize].dead;
        let mut prev = NONE;
        for letter in start..=last {
            let id = self.nodes.len() as u32;
            self.nodes.push(Node { parent: node, first_child: NONE, next_sibling: NONE, slot: NONE, dead: parent_dead });
            if prev == NONE {
                self.nodes[node as usize].first_child = id;
            } else {
                self.nodes[prev as usize].next_sibling = id;
            }
            prev = id;
            union.add(&qsets[letter]);
            if depth + 1 == p {
                let core = if parent_dead { None } else { checked_core(provider, &union.set)? };
                self.nodes[id as usize].dead = core.is_none();
                self.nodes[id as usize].slot = self.leaves.len() as u32;
                self.leaves.push(core);
            } else {
                if !parent_dead && provider.is_empty_for(&union.set) {
                    self.nodes[id as usize].dead = true;
                }
                self.grow(id, depth + 1, letter + 1, qsets, p, provider, union)?;
            }
            union.remove(&qsets[letter]);
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    /// Leaf cores in lexicographic order of their index tuples.
    pub fn leaf_cores(&self) -> &[Option<VertexSet>] {
        &self.leaves
    }
}

impl Store for TrieT1 {
    type Cursor = u32;

    fn root(&self) -> u32 {
        0
    }

    #[inline]
    fn first_child(&self, c: &mut u32) {
        *c = self.nodes[*c as usize].first_child;
        debug_assert_ne!(*c, NONE);
    }

    #[inline]
    fn next_sibling(&self, c: &mut u32) {
        *c = self.nodes[*c as usize].next_sibling;
        debug_assert_ne!(*c, NONE);
    }

    #[inline]
    fn parent(&self, c: &mut u32) {
        *c = self.nodes[*c as usize].parent;
    }

    fn is_dead(&self, c: &u32, _union: &VertexSet) -> bool {
        self.nodes[*c as usize].dead
    }

    fn leaf_core<'s>(&'s self, c: &'s mut u32) -> Result<Option<&'s VertexSet>> {
        let slot = self.nodes[*c as usize].slot;
        debug_assert_ne!(slot, NONE);
        Ok(self.leaves[slot as usize].as_ref())
    }
}

/// `T1` addressed by index tuples; leaf cores are computed when a cursor
/// first asks for them and kept until the cursor moves.
struct ImplicitT1<'a, P: ?Sized> {
    qsets: &'a [VertexSet],
    provider: &'a P,
}

#[derive(Clone, Default)]
struct TupleCursor {
    letters: SmallVec<[u32; 8]>,
    cached: Option<Option<VertexSet>>,
}

impl<P: CoreProvider + ?Sized> Store for ImplicitT1<'_, P> {
    type Cursor = TupleCursor;

    fn root(&self) -> TupleCursor {
        TupleCursor::default()
    }

    fn first_child(&self, c: &mut TupleCursor) {
        let next = c.letters.last().map_or(0, |&l| l + 1);
        c.letters.push(next);
        c.cached = None;
    }

    fn next_sibling(&self, c: &mut TupleCursor) {
        *c.letters.last_mut().expect("the root has no siblings") += 1;
        c.cached = None;
    }

    fn parent(&self, c: &mut TupleCursor) {
        c.letters.pop();
        c.cached = None;
    }

    fn is_dead(&self, _c: &TupleCursor, union: &VertexSet) -> bool {
        self.provider.is_empty_for(union)
    }

    fn leaf_core<'s>(&'s self, c: &'s mut TupleCursor) -> Result<Option<&'s VertexSet>> {
        if c.cached.is_none() {
            let mut union = VertexSet::new();
            for &l in &c.letters {
                union.union_with(&self.qsets[l as usize]);
            }
            c.cached = Some(checked_core(self.provider, &union)?);
        }
        Ok(c.cached.as_ref().and_then(Option::as_ref))
    }
}

fn checked_core<P: CoreProvider + ?Sized>(provider: &P, union: &VertexSet) -> Result<Option<VertexSet>> {
    let core = provider.core_of(union);
    if let Some(c) = &core {
        if !union.is_subset(c) {
            return Err(Error::ProviderInconsistent(format!("core {c} of a nonempty family misses part of {union}")));
        }
    }
    Ok(core)
}

/// Union of the chosen q-sets with per-vertex occurrence counts. `shared`
/// counts the vertices lying in more than one but fewer than `p+1` sets.
struct Union {
    counts: Vec<u32>,
    set: VertexSet,
    shared: usize,
    p: u32,
}

impl Union {
    fn new(n: usize, p: usize) -> Self {
        Self { counts: vec![0; n], set: VertexSet::new(), shared: 0, p: p as u32 }
    }

    #[inline]
    fn is_shared(&self, c: u32) -> bool {
        c >= 2 && c <= self.p
    }

    fn add(&mut self, s: &VertexSet) {
        for v in s {
            let c = self.counts[v as usize];
            if c == 0 {
                self.set.insert(v);
            }
            self.shared = self.shared + self.is_shared(c + 1) as usize - self.is_shared(c) as usize;
            self.counts[v as usize] = c + 1;
        }
    }

    fn remove(&mut self, s: &VertexSet) {
        for v in s {
            let c = self.counts[v as usize];
            if c == 1 {
                self.set.remove(v);
            }
            self.shared = self.shared + self.is_shared(c - 1) as usize - self.is_shared(c) as usize;
            self.counts[v as usize] = c - 1;
        }
    }
}

/// The cursors `I_0..I_{p+1}` with the three update rules of the traversal.
struct IteratorBank<C> {
    its: Vec<C>,
    p: usize,
}

impl<C: Clone> IteratorBank<C> {
    /// From a node at depth `k` to its first child.
    fn first_child<S: Store<Cursor = C>>(&mut self, store: &S, k: usize) {
        for l in 1..k {
            store.first_child(&mut self.its[l]);
        }
        if k >= 1 {
            let mut c = self.its[0].clone();
            store.next_sibling(&mut c);
            self.its[k] = c;
        }
        self.its[k + 1] = self.its[0].clone();
        if k < self.p {
            store.first_child(&mut self.its[0]);
        }
    }

    /// From a node at depth `k` to its next sibling.
    fn next_sibling<S: Store<Cursor = C>>(&mut self, store: &S, k: usize) {
        if k <= self.p {
            store.next_sibling(&mut self.its[0]);
        }
        for l in 1..k {
            store.next_sibling(&mut self.its[l]);
        }
    }

    /// From a node at depth `k` to its parent.
    fn parent<S: Store<Cursor = C>>(&mut self, store: &S, k: usize) {
        if k - 1 < self.p {
            store.parent(&mut self.its[0]);
        }
        for l in 1..k {
            store.parent(&mut self.its[l]);
        }
    }
}

fn traverse<S: Store>(store: &S, ctx: &Context<'_>, universe: usize, mut stats: EngineStats) -> Result<EngineOutcome> {
    let (p, n_q) = (ctx.p, ctx.qsets.len() as i64);
    let mut bank = IteratorBank { its: vec![store.root(); p + 2], p };
    let mut tuple: Vec<usize> = Vec::with_capacity(p + 1);
    let mut union = Union::new(universe, p);
    // Largest letter allowed at 1-based position t of a T2 tuple.
    let bound = |t: usize| n_q - (p as i64 + 1) + t as i64 - 1;
    let mut expand = true;
    loop {
        let k = tuple.len();
        if k <= p && expand {
            let letter = if k == 0 { 0 } else { tuple[k - 1] + 1 };
            debug_assert!(letter as i64 <= bound(k + 1));
            bank.first_child(store, k);
            tuple.push(letter);
            union.add(&ctx.qsets[letter]);
        } else {
            loop {
                let k = tuple.len();
                if k == 0 {
                    return Ok(EngineOutcome { holds: true, violation: None, stats });
                }
                let last = tuple[k - 1];
                if (last as i64) < bound(k) {
                    bank.next_sibling(store, k);
                    union.remove(&ctx.qsets[last]);
                    tuple[k - 1] = last + 1;
                    union.add(&ctx.qsets[last + 1]);
                    break;
                }
                bank.parent(store, k);
                union.remove(&ctx.qsets[last]);
                tuple.pop();
            }
        }
        stats.t2_nodes += 1;
        let k = tuple.len();
        if k == p + 1 {
            stats.t2_leaves += 1;
            if let Some(v) = evaluate_leaf(store, &mut bank, ctx, &union, &tuple)? {
                return Ok(EngineOutcome { holds: false, violation: Some(v), stats });
            }
            expand = false;
        } else {
            expand = !store.is_dead(&bank.its[0], &union.set);
        }
    }
}

fn evaluate_leaf<S: Store>(
    store: &S,
    bank: &mut IteratorBank<S::Cursor>,
    ctx: &Context<'_>,
    union: &Union,
    tuple: &[usize],
) -> Result<Option<BasisViolation>> {
    let p = ctx.p;
    if ctx.mode == Mode::Hereditary && union.shared != 0 {
        return Ok(None);
    }
    let mut cores: SmallVec<[&VertexSet; 8]> = SmallVec::new();
    for c in bank.its[1..=p + 1].iter_mut() {
        match store.leaf_core(c)? {
            Some(core) => cores.push(core),
            None => return Ok(None),
        }
    }
    let violated = match ctx.mode {
        Mode::Plain => {
            let mut acc = cores[0].clone();
            for c in &cores[1..] {
                if acc.len() < ctx.q {
                    break;
                }
                acc.intersect_with(c);
            }
            acc.len() < ctx.q
        }
        Mode::Hereditary => {
            let mut acc: VertexSet =
                union.set.iter().filter(|&v| union.counts[v as usize] as usize <= p).collect();
            for c in &cores {
                acc.intersect_with(c);
                if acc.is_empty() {
                    break;
                }
            }
            acc.is_empty()
        }
    };
    Ok(violated.then(|| BasisViolation {
        members: tuple.iter().map(|&i| ctx.qsets[i].clone()).collect(),
        support_cores: cores.iter().map(|&c| c.clone()).collect(),
    }))
}
