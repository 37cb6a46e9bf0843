//! Beaded partition diagrams, optionally carrying a tie partition over their blocks.
//!
//! Boundary points are indexed `0..n` for the top row and `n..2n` for the bottom row.
//! A diagram stores one block label per point, numbered by first occurrence, so two
//! equal diagrams are equal as values. Beads live on blocks, ties are a partition of
//! block indices (also numbered by first occurrence).
//!
//! The product `a.compose(b)` stacks `a` above `b`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{FramoidError, Result};
use crate::word::GenSymbol;

/// A boundary point, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pt {
    Top(usize),
    Bot(usize),
}

impl Pt {
    pub fn index(self, n: usize) -> usize {
        match self {
            Pt::Top(i) => i - 1,
            Pt::Bot(i) => n + i - 1,
        }
    }

    pub fn from_index(p: usize, n: usize) -> Pt {
        if p < n {
            Pt::Top(p + 1)
        } else {
            Pt::Bot(p - n + 1)
        }
    }

    pub fn position(self) -> usize {
        match self {
            Pt::Top(i) | Pt::Bot(i) => i,
        }
    }

    pub fn is_top(self) -> bool {
        matches!(self, Pt::Top(_))
    }
}

impl fmt::Display for Pt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pt::Top(i) => write!(f, "t{i}"),
            Pt::Bot(i) => write!(f, "b{i}"),
        }
    }
}

/// What happens to beads sitting on one-point blocks after a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BeadPolicy {
    #[default]
    Keep,
    DropOnSingletons,
}

/// What happens to ties touching one-point blocks after a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TiePolicy {
    #[default]
    Keep,
    UntieSingletons,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ComposePolicy {
    pub beads: BeadPolicy,
    pub ties: TiePolicy,
}

impl ComposePolicy {
    pub const KEEP: ComposePolicy = ComposePolicy {
        beads: BeadPolicy::Keep,
        ties: TiePolicy::Keep,
    };
}

/// Most specific structural class a diagram belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    Permutation,
    PlanarMatching,
    Matching,
    GenericPartition,
}

/// Partition of the block indices of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TiePartition {
    pub classes: Vec<Vec<usize>>,
}

/// Residues of the closed components removed by a product.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LoopRecord {
    counts: BTreeMap<u32, u64>,
}

impl LoopRecord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, residue: u32) {
        *self.counts.entry(residue).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: &LoopRecord) {
        for (&r, &c) in &other.counts {
            *self.counts.entry(r).or_insert(0) += c;
        }
    }

    pub fn count(&self, residue: u32) -> u64 {
        self.counts.get(&residue).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&r, &c)| (r, c))
    }
}

impl fmt::Display for LoopRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (r, c)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}:{c}")?;
        }
        write!(f, "}}")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so results do not depend on union order
            if ra < rb {
                self.parent[rb] = ra;
            } else {
                self.parent[ra] = rb;
            }
        }
    }
}

const UNSET: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: u8,
    d: u8,
    labels: Vec<u8>,
    beads: Vec<u8>,
    ties: Option<Vec<u8>>,
}

impl Diagram {
    /// Builds a diagram from arbitrary block labels, renumbering everything canonically.
    /// `beads[b]` and `ties[b]` are indexed by the raw label `b`.
    fn from_raw(
        n: usize,
        d: u32,
        raw_labels: &[usize],
        raw_beads: &[u32],
        raw_ties: Option<&[usize]>,
    ) -> Diagram {
        let mut relabel = vec![UNSET; raw_beads.len()];
        let mut labels = Vec::with_capacity(2 * n);
        let mut beads = Vec::new();
        let mut order = Vec::new();
        for &raw in raw_labels {
            if relabel[raw] == UNSET {
                relabel[raw] = beads.len();
                beads.push((raw_beads[raw] % d) as u8);
                order.push(raw);
            }
            labels.push(relabel[raw] as u8);
        }
        let ties = raw_ties.map(|t| {
            let mut class_id: BTreeMap<usize, u8> = BTreeMap::new();
            order
                .iter()
                .map(|&raw| {
                    let next = class_id.len() as u8;
                    *class_id.entry(t[raw]).or_insert(next)
                })
                .collect()
        });
        Diagram {
            n: n as u8,
            d: d as u8,
            labels,
            beads,
            ties,
        }
    }

    fn check_params(n: usize, d: u32) -> Result<()> {
        if n == 0 || n > 100 {
            return Err(FramoidError::InvalidParameters(format!("n={n} outside 1..=100")));
        }
        if d == 0 || d > 255 {
            return Err(FramoidError::InvalidParameters(format!("d={d} outside 1..=255")));
        }
        Ok(())
    }

    /// Builds a diagram from explicit blocks (bead values are reduced mod d).
    pub fn from_blocks(
        n: usize,
        d: u32,
        blocks: &[(Vec<Pt>, u32)],
        ties: Option<&[Vec<usize>]>,
    ) -> Result<Diagram> {
        Self::check_params(n, d)?;
        let mut raw = vec![UNSET; 2 * n];
        for (b, (pts, _)) in blocks.iter().enumerate() {
            if pts.is_empty() {
                return Err(FramoidError::Parse(format!("block {b} is empty")));
            }
            for &p in pts {
                if p.position() == 0 || p.position() > n {
                    return Err(FramoidError::Parse(format!("point {p} outside 1..={n}")));
                }
                let i = p.index(n);
                if raw[i] != UNSET {
                    return Err(FramoidError::Parse(format!("point {p} appears twice")));
                }
                raw[i] = b;
            }
        }
        if raw.contains(&UNSET) {
            return Err(FramoidError::Parse("blocks do not cover every point".into()));
        }
        let beads: Vec<u32> = blocks.iter().map(|(_, k)| *k).collect();
        let tie_labels = match ties {
            None => None,
            Some(classes) => {
                let mut t = vec![UNSET; blocks.len()];
                for (c, class) in classes.iter().enumerate() {
                    for &b in class {
                        if b >= blocks.len() || t[b] != UNSET {
                            return Err(FramoidError::Parse(format!(
                                "tie classes are not a partition of the blocks (block {b})"
                            )));
                        }
                        t[b] = c;
                    }
                }
                if t.contains(&UNSET) {
                    return Err(FramoidError::Parse("tie classes miss a block".into()));
                }
                Some(t)
            }
        };
        Ok(Self::from_raw(n, d, &raw, &beads, tie_labels.as_deref()))
    }

    pub fn identity(n: usize, d: u32, tied: bool) -> Diagram {
        let labels: Vec<usize> = (0..n).chain(0..n).collect();
        let beads = vec![0; n];
        let ties: Vec<usize> = (0..n).collect();
        Self::from_raw(n, d, &labels, &beads, tied.then_some(&ties[..]))
    }

    /// The diagram of a single generator symbol. Tie symbols (e, f, q, w) produce tied
    /// diagrams, all others untied ones.
    pub fn generator(sym: GenSymbol, n: usize, d: u32) -> Result<Diagram> {
        Self::check_params(n, d)?;
        sym.check_range(n)?;
        let mut labels: Vec<usize> = (0..n).chain(0..n).collect();
        let mut beads = vec![0u32; n];
        let mut ties: Vec<usize> = (0..n).collect();
        let break_strand = |i: usize, labels: &mut Vec<usize>, beads: &mut Vec<u32>| {
            let fresh = beads.len();
            beads.push(0);
            labels[n + i] = fresh;
            fresh
        };
        let tied = sym.is_tie_kind();
        match sym {
            GenSymbol::T(i) | GenSymbol::F(i) => {
                let i = i - 1;
                labels[i + 1] = i;
                labels[n + i] = i + 1;
                if matches!(sym, GenSymbol::F(_)) {
                    ties[i + 1] = i;
                }
            }
            GenSymbol::S(i) => {
                let i = i - 1;
                labels[n + i] = i + 1;
                labels[n + i + 1] = i;
            }
            GenSymbol::O(i, k) => beads[i - 1] = k,
            GenSymbol::R(i) | GenSymbol::Q(i) => {
                let fresh = break_strand(i - 1, &mut labels, &mut beads);
                ties.push(if matches!(sym, GenSymbol::Q(_)) { i - 1 } else { fresh });
            }
            GenSymbol::P(i) | GenSymbol::W(i) => {
                for j in 0..i {
                    let fresh = break_strand(j, &mut labels, &mut beads);
                    let tie_with_top = matches!(sym, GenSymbol::W(_)) && j == i - 1;
                    ties.push(if tie_with_top { j } else { fresh });
                }
            }
            GenSymbol::E(i, j) => ties[j - 1] = i - 1,
        }
        Ok(Self::from_raw(n, d, &labels, &beads, tied.then_some(&ties[..])))
    }

    /// Identity with strands `i` and `j` fused into a single block (set-partition generator).
    pub fn merged_strands(i: usize, j: usize, n: usize, d: u32) -> Result<Diagram> {
        Self::check_params(n, d)?;
        GenSymbol::E(i, j).check_range(n)?;
        let mut labels: Vec<usize> = (0..n).chain(0..n).collect();
        labels[j - 1] = i - 1;
        labels[n + j - 1] = i - 1;
        Ok(Self::from_raw(n, d, &labels, &vec![0; n], None))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn d(&self) -> u32 {
        self.d as u32
    }

    pub fn num_blocks(&self) -> usize {
        self.beads.len()
    }

    pub fn is_tied(&self) -> bool {
        self.ties.is_some()
    }

    pub fn bead(&self, block: usize) -> u32 {
        self.beads[block] as u32
    }

    pub fn beads(&self) -> impl Iterator<Item = u32> + '_ {
        self.beads.iter().map(|&b| b as u32)
    }

    pub fn block_of(&self, p: Pt) -> usize {
        self.labels[p.index(self.n())] as usize
    }

    /// Tie class of a block (`None` for untied diagrams).
    pub fn tie_class(&self, block: usize) -> Option<usize> {
        self.ties.as_ref().map(|t| t[block] as usize)
    }

    /// Blocks as sorted point lists, in canonical block order.
    pub fn blocks(&self) -> Vec<Vec<Pt>> {
        let n = self.n();
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (p, &b) in self.labels.iter().enumerate() {
            out[b as usize].push(Pt::from_index(p, n));
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks()];
        for &b in &self.labels {
            sizes[b as usize] += 1;
        }
        sizes
    }

    pub fn tie_partition(&self) -> Option<TiePartition> {
        self.ties.as_ref().map(|t| {
            let count = t.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
            let mut classes = vec![Vec::new(); count];
            for (b, &c) in t.iter().enumerate() {
                classes[c as usize].push(b);
            }
            TiePartition { classes }
        })
    }

    /// The diagram is stored canonically already; this returns a copy, kept so call
    /// sites can say what they mean.
    pub fn canonicalize(&self) -> Diagram {
        self.clone()
    }

    pub fn encoding(&self) -> String {
        self.to_string()
    }

    pub fn erase_beads(&self) -> Diagram {
        let mut out = self.clone();
        out.beads.iter_mut().for_each(|b| *b = 0);
        out
    }

    pub fn erase_ties(&self) -> Diagram {
        let mut out = self.clone();
        out.ties = None;
        out
    }

    /// Adds the all-singleton tie partition to an untied diagram.
    pub fn with_trivial_ties(&self) -> Diagram {
        let mut out = self.clone();
        if out.ties.is_none() {
            out.ties = Some((0..out.beads.len() as u8).collect());
        }
        out
    }

    pub fn with_modulus(&self, d: u32) -> Result<Diagram> {
        Self::check_params(self.n(), d)?;
        let labels: Vec<usize> = self.labels.iter().map(|&l| l as usize).collect();
        let beads: Vec<u32> = self.beads().collect();
        let ties: Option<Vec<usize>> = self
            .ties
            .as_ref()
            .map(|t| t.iter().map(|&c| c as usize).collect());
        Ok(Self::from_raw(self.n(), d, &labels, &beads, ties.as_deref()))
    }

    /// Top-bottom reflection.
    pub fn mirror(&self) -> Diagram {
        let n = self.n();
        let labels: Vec<usize> = (0..2 * n)
            .map(|p| self.labels[(p + n) % (2 * n)] as usize)
            .collect();
        let beads: Vec<u32> = self.beads().collect();
        let ties: Option<Vec<usize>> = self
            .ties
            .as_ref()
            .map(|t| t.iter().map(|&c| c as usize).collect());
        Self::from_raw(n, self.d(), &labels, &beads, ties.as_deref())
    }

    /// Noncrossing test on the boundary read as top 1..n followed by bottom n..1.
    pub fn is_planar(&self) -> bool {
        let n = self.n();
        let order: Vec<usize> = (0..n).chain((n..2 * n).rev()).collect();
        let mut remaining = self.block_sizes();
        let mut stack: Vec<usize> = Vec::new();
        let mut opened = vec![false; self.num_blocks()];
        for p in order {
            let b = self.labels[p] as usize;
            if !opened[b] {
                opened[b] = true;
                stack.push(b);
            } else if stack.last() != Some(&b) {
                return false;
            }
            remaining[b] -= 1;
            if remaining[b] == 0 {
                stack.pop();
            }
        }
        true
    }

    pub fn classify(&self) -> FamilyTag {
        let n = self.n();
        let sizes = self.block_sizes();
        if sizes.iter().any(|&s| s > 2) {
            return FamilyTag::GenericPartition;
        }
        let through = (0..n).all(|i| {
            let b = self.labels[i];
            sizes[b as usize] == 2 && self.labels[n..].contains(&b)
        });
        if through {
            FamilyTag::Permutation
        } else if sizes.iter().all(|&s| s == 2) && self.is_planar() {
            FamilyTag::PlanarMatching
        } else {
            FamilyTag::Matching
        }
    }

    pub fn compose(&self, other: &Diagram) -> Result<(Diagram, LoopRecord)> {
        self.compose_with(other, ComposePolicy::KEEP)
    }

    pub fn compose_with(
        &self,
        other: &Diagram,
        policy: ComposePolicy,
    ) -> Result<(Diagram, LoopRecord)> {
        if self.n != other.n || self.d != other.d {
            return Err(FramoidError::Mismatch(format!(
                "(n,d)=({},{}) vs ({},{})",
                self.n, self.d, other.n, other.d
            )));
        }
        if self.is_tied() != other.is_tied() {
            return Err(FramoidError::Mismatch("tied with untied".into()));
        }
        let mut loops = LoopRecord::new();
        let out = self.compose_raw(other, policy, &mut |r| loops.add(r));
        Ok((out, loops))
    }

    /// Product without operand checks; every removed closed component is reported
    /// through `on_loop` with its bead residue.
    pub(crate) fn compose_raw(
        &self,
        other: &Diagram,
        policy: ComposePolicy,
        on_loop: &mut dyn FnMut(u32),
    ) -> Diagram {
        let n = self.n();
        let d = self.d();
        let mut uf = UnionFind::new(3 * n);
        // a: top stays, bottom goes to the middle layer 2n..3n
        // b: top goes to the middle layer, bottom stays
        let map_a = |p: usize| if p < n { p } else { p + n };
        let map_b = |p: usize| if p < n { p + 2 * n } else { p };
        let mut first_a = vec![UNSET; self.num_blocks()];
        for p in 0..2 * n {
            let (b, q) = (self.labels[p] as usize, map_a(p));
            if first_a[b] == UNSET {
                first_a[b] = q;
            } else {
                uf.union(first_a[b], q);
            }
        }
        let mut first_b = vec![UNSET; other.num_blocks()];
        for p in 0..2 * n {
            let (b, q) = (other.labels[p] as usize, map_b(p));
            if first_b[b] == UNSET {
                first_b[b] = q;
            } else {
                uf.union(first_b[b], q);
            }
        }
        let mut bead = vec![0u32; 3 * n];
        for (b, &q) in first_a.iter().enumerate() {
            let r = uf.find(q);
            bead[r] = (bead[r] + self.beads[b] as u32) % d;
        }
        for (b, &q) in first_b.iter().enumerate() {
            let r = uf.find(q);
            bead[r] = (bead[r] + other.beads[b] as u32) % d;
        }
        let mut comp = vec![UNSET; 3 * n];
        let mut labels = Vec::with_capacity(2 * n);
        let mut beads: Vec<u8> = Vec::new();
        let mut sizes: Vec<u8> = Vec::new();
        for p in 0..2 * n {
            let r = uf.find(p);
            if comp[r] == UNSET {
                comp[r] = beads.len();
                beads.push(bead[r] as u8);
                sizes.push(0);
            }
            sizes[comp[r]] += 1;
            labels.push(comp[r] as u8);
        }
        let boundary = beads.len();
        let mut components = boundary;
        for m in 2 * n..3 * n {
            let r = uf.find(m);
            if comp[r] == UNSET {
                comp[r] = components;
                components += 1;
                on_loop(bead[r]);
            }
        }
        if policy.beads == BeadPolicy::DropOnSingletons {
            for (b, s) in beads.iter_mut().zip(&sizes) {
                if *s == 1 {
                    *b = 0;
                }
            }
        }
        let ties = match (&self.ties, &other.ties) {
            (Some(ta), Some(tb)) => {
                let mut tuf = UnionFind::new(components);
                let mut rep_a = vec![UNSET; ta.len()];
                for (b, &c) in ta.iter().enumerate() {
                    let cid = comp[uf.find(first_a[b])];
                    let c = c as usize;
                    if rep_a[c] == UNSET {
                        rep_a[c] = cid;
                    } else {
                        tuf.union(rep_a[c], cid);
                    }
                }
                let mut rep_b = vec![UNSET; tb.len()];
                for (b, &c) in tb.iter().enumerate() {
                    let cid = comp[uf.find(first_b[b])];
                    let c = c as usize;
                    if rep_b[c] == UNSET {
                        rep_b[c] = cid;
                    } else {
                        tuf.union(rep_b[c], cid);
                    }
                }
                let mut class_of_root = vec![UNSET; components];
                let mut next = 0usize;
                let mut out = Vec::with_capacity(boundary);
                for (b, &size) in sizes.iter().enumerate() {
                    let untie = policy.ties == TiePolicy::UntieSingletons && size == 1;
                    if untie {
                        out.push(next as u8);
                        next += 1;
                        continue;
                    }
                    let r = tuf.find(b);
                    if class_of_root[r] == UNSET {
                        class_of_root[r] = next;
                        next += 1;
                    }
                    out.push(class_of_root[r] as u8);
                }
                Some(out)
            }
            _ => None,
        };
        Diagram {
            n: self.n,
            d: self.d,
            labels,
            beads,
            ties,
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};d={};blocks=[", self.n, self.d)?;
        for (b, pts) in self.blocks().iter().enumerate() {
            if b > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (k, p) in pts.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}:{}", self.beads[b])?;
        }
        write!(f, "];ties=[")?;
        if let Some(tp) = self.tie_partition() {
            for (c, class) in tp.classes.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                let items: Vec<String> = class.iter().map(|b| b.to_string()).collect();
                write!(f, "[{}]", items.join(","))?;
            }
        }
        write!(f, "]")
    }
}

fn parse_point(s: &str) -> Result<Pt> {
    let bad = || FramoidError::Parse(format!("bad point `{s}`"));
    let (head, num) = s.split_at(1);
    let i: usize = num.parse().map_err(|_| bad())?;
    match head {
        "t" => Ok(Pt::Top(i)),
        "b" => Ok(Pt::Bot(i)),
        _ => Err(bad()),
    }
}

impl FromStr for Diagram {
    type Err = FramoidError;

    fn from_str(s: &str) -> Result<Diagram> {
        let bad = |what: &str| FramoidError::Parse(format!("{what} in `{s}`"));
        let mut fields = s.trim().split(';');
        let mut take = |key: &str| -> Result<String> {
            let field = fields.next().ok_or_else(|| bad("missing field"))?;
            field
                .strip_prefix(key)
                .map(str::to_string)
                .ok_or_else(|| bad(&format!("expected `{key}`")))
        };
        let n: usize = take("n=")?.parse().map_err(|_| bad("bad n"))?;
        let d: u32 = take("d=")?.parse().map_err(|_| bad("bad d"))?;
        let blocks_src = take("blocks=")?;
        let ties_src = take("ties=")?;
        let inner = blocks_src
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("blocks not bracketed"))?;
        let mut blocks = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let open = rest.strip_prefix('{').ok_or_else(|| bad("expected `{`"))?;
            let close = open.find('}').ok_or_else(|| bad("unclosed block"))?;
            let pts = open[..close]
                .split(',')
                .map(parse_point)
                .collect::<Result<Vec<_>>>()?;
            let after = open[close + 1..]
                .strip_prefix(':')
                .ok_or_else(|| bad("missing bead"))?;
            let end = after.find(',').unwrap_or(after.len());
            let k: u32 = after[..end].parse().map_err(|_| bad("bad bead"))?;
            blocks.push((pts, k));
            rest = after[end..].strip_prefix(',').unwrap_or(&after[end..]);
        }
        let ties_inner = ties_src
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("ties not bracketed"))?;
        let ties: Option<Vec<Vec<usize>>> = if ties_inner.is_empty() {
            None
        } else {
            let mut classes = Vec::new();
            for chunk in ties_inner.split("],") {
                let body = chunk.trim_start_matches('[').trim_end_matches(']');
                let class = body
                    .split(',')
                    .map(|x| x.parse::<usize>().map_err(|_| bad("bad tie index")))
                    .collect::<Result<Vec<_>>>()?;
                classes.push(class);
            }
            Some(classes)
        };
        Diagram::from_blocks(n, d, &blocks, ties.as_deref())
    }
}
