//! Backtracking search for (strong) homomorphisms between finite graphs.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};
use crate::name::Name;

/// An owned vertex assignment, domain name ↦ codomain name.
pub type Mapping = BTreeMap<Name, Name>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    /// Maps edges to edges.
    Homomorphism,
    /// Maps edges to edges and non-edges to non-edges.
    Strong,
}

/// A total map between the vertex sets of two graphs, tagged with the
/// strongest property it was verified to have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap<'a> {
    domain: &'a Graph,
    codomain: &'a Graph,
    images: Vec<usize>,
    kind: MapKind,
}

impl<'a> VertexMap<'a> {
    /// Classifies `images` (codomain index per domain index). Returns `None`
    /// when the map is not total or not a homomorphism.
    pub fn classify(domain: &'a Graph, codomain: &'a Graph, images: Vec<usize>) -> Option<Self> {
        if images.len() != domain.len() || images.iter().any(|&c| c >= codomain.len()) {
            return None;
        }
        let mut strong = true;
        for u in 0..domain.len() {
            for v in 0..domain.len() {
                let e = domain.has_edge_idx(u, v);
                let f = codomain.has_edge_idx(images[u], images[v]);
                if e && !f {
                    return None;
                }
                if e != f {
                    strong = false;
                }
            }
        }
        let kind = if strong { MapKind::Strong } else { MapKind::Homomorphism };
        Some(VertexMap { domain, codomain, images, kind })
    }

    pub fn domain(&self) -> &'a Graph {
        self.domain
    }

    pub fn codomain(&self) -> &'a Graph {
        self.codomain
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn is_strong(&self) -> bool {
        self.kind == MapKind::Strong
    }

    /// Codomain index of every domain vertex, in domain order.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, v: &str) -> Option<&'a Name> {
        let i = self.domain.index_of(v)?;
        Some(self.codomain.name(self.images[i]))
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    pub fn to_mapping(&self) -> Mapping {
        self.domain
            .vertices()
            .iter()
            .zip(&self.images)
            .map(|(v, &c)| (v.clone(), self.codomain.name(c).clone()))
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.len()];
        self.images.iter().all(|&c| !std::mem::replace(&mut seen[c], true))
    }
}

/// Extra requirements on the maps produced by [`enumerate_homomorphisms`].
#[derive(Clone, Debug, Default)]
pub struct Constraints {
    /// Prescribed images, domain name ↦ codomain name.
    pub fixed: Vec<(Name, Name)>,
    /// Two domain vertices that must receive different images.
    pub distinct: Option<(Name, Name)>,
    /// Require the map to be injective.
    pub injective: bool,
    /// Restrict images to these codomain vertices.
    pub within: Option<Vec<Name>>,
}

/// Lazily enumerates the homomorphisms `g → h` (strong ones if `strong` is
/// set) that satisfy `constraints`.
///
/// Domain vertices are assigned in breadth-first order over the underlying
/// undirected graph, starting from the least unassigned vertex of each
/// component; candidate images are tried in ascending order. Each partial
/// assignment is checked against all already assigned vertices, so the
/// first map yielded is reproducible.
pub fn enumerate_homomorphisms<'a>(
    g: &'a Graph,
    h: &'a Graph,
    strong: bool,
    constraints: &Constraints,
) -> Result<Homomorphisms<'a>> {
    let lookup = |graph: &Graph, v: &Name| {
        graph
            .index_of(v.as_str())
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    };
    let allowed = match &constraints.within {
        Some(list) => {
            let mut mask = vec![false; h.len()];
            for v in list {
                mask[lookup(h, v)?] = true;
            }
            mask
        }
        None => vec![true; h.len()],
    };
    let mut candidates: Vec<Vec<usize>> = vec![(0..h.len()).filter(|&c| allowed[c]).collect(); g.len()];
    for (a, b) in &constraints.fixed {
        let i = lookup(g, a)?;
        let c = lookup(h, b)?;
        candidates[i].retain(|&x| x == c);
    }
    let distinct = match &constraints.distinct {
        Some((a, b)) => Some((lookup(g, a)?, lookup(g, b)?)),
        None => None,
    };
    let mut search = HomSearch::new(g, h, strong);
    search.candidates = candidates;
    search.distinct = distinct;
    search.injective = constraints.injective;
    Ok(search.into_iter())
}

/// Index-level search configuration.
pub(crate) struct HomSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    strong: bool,
    pub(crate) candidates: Vec<Vec<usize>>,
    pub(crate) distinct: Option<(usize, usize)>,
    pub(crate) injective: bool,
}

impl<'a> HomSearch<'a> {
    pub(crate) fn new(g: &'a Graph, h: &'a Graph, strong: bool) -> Self {
        HomSearch {
            g,
            h,
            strong,
            candidates: vec![(0..h.len()).collect(); g.len()],
            distinct: None,
            injective: false,
        }
    }

    /// Restricts all images to the codomain vertices flagged in `mask`.
    pub(crate) fn within_mask(mut self, mask: &[bool]) -> Self {
        for c in &mut self.candidates {
            c.retain(|&x| mask[x]);
        }
        self
    }

    pub(crate) fn into_iter(self) -> Homomorphisms<'a> {
        let order = bfs_order(self.g);
        let n = self.g.len();
        let mut position = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        Homomorphisms {
            g: self.g,
            h: self.h,
            strong: self.strong,
            order,
            position,
            candidates: self.candidates,
            distinct: self.distinct,
            injective: self.injective,
            image: vec![usize::MAX; n],
            used: vec![0; self.h.len()],
            cursor: vec![0; n],
            depth: 0,
            state: State::Fresh,
        }
    }

    pub(crate) fn first(self) -> Option<Vec<usize>> {
        self.into_iter().next_images()
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut nbrs: Vec<usize> = g.out_neighbors(u).iter().chain(g.in_neighbors(u)).copied().collect();
            nbrs.sort_unstable();
            nbrs.dedup();
            for w in nbrs {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Iterator over homomorphisms; see [`enumerate_homomorphisms`].
pub struct Homomorphisms<'a> {
    g: &'a Graph,
    h: &'a Graph,
    strong: bool,
    order: Vec<usize>,
    position: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    distinct: Option<(usize, usize)>,
    injective: bool,
    image: Vec<usize>,
    used: Vec<u32>,
    cursor: Vec<usize>,
    depth: usize,
    state: State,
}

impl<'a> Homomorphisms<'a> {
    fn consistent(&self, v: usize, c: usize) -> bool {
        let (g, h) = (self.g, self.h);
        if self.injective && self.used[c] > 0 {
            return false;
        }
        let lv = g.has_edge_idx(v, v);
        let lc = h.has_edge_idx(c, c);
        if (lv && !lc) || (self.strong && lv != lc) {
            return false;
        }
        let pv = self.position[v];
        if let Some((a, b)) = self.distinct {
            let other = if a == v { Some(b) } else if b == v { Some(a) } else { None };
            if let Some(o) = other {
                if o == v || (self.position[o] < pv && self.image[o] == c) {
                    return false;
                }
            }
        }
        for &w in &self.order[..pv] {
            let d = self.image[w];
            let (e1, f1) = (g.has_edge_idx(v, w), h.has_edge_idx(c, d));
            let (e2, f2) = (g.has_edge_idx(w, v), h.has_edge_idx(d, c));
            if (e1 && !f1) || (e2 && !f2) {
                return false;
            }
            if self.strong && (e1 != f1 || e2 != f2) {
                return false;
            }
        }
        true
    }

    fn unassign(&mut self, v: usize) {
        let c = self.image[v];
        if c != usize::MAX {
            self.used[c] -= 1;
            self.image[v] = usize::MAX;
        }
    }

    /// Advances to the next map and returns its image vector.
    pub(crate) fn next_images(&mut self) -> Option<Vec<usize>> {
        let n = self.order.len();
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if n == 0 {
                    self.state = State::Done;
                    return Some(Vec::new());
                }
                self.depth = 0;
                self.cursor[0] = 0;
            }
            State::Running => {}
        }
        loop {
            let v = self.order[self.depth];
            self.unassign(v);
            let mut placed = false;
            while self.cursor[self.depth] < self.candidates[v].len() {
                let c = self.candidates[v][self.cursor[self.depth]];
                self.cursor[self.depth] += 1;
                if self.consistent(v, c) {
                    self.image[v] = c;
                    self.used[c] += 1;
                    placed = true;
                    break;
                }
            }
            if placed {
                if self.depth + 1 == n {
                    return Some(self.image.clone());
                }
                self.depth += 1;
                self.cursor[self.depth] = 0;
            } else if self.depth == 0 {
                self.state = State::Done;
                return None;
            } else {
                self.depth -= 1;
            }
        }
    }
}

impl<'a> Iterator for Homomorphisms<'a> {
    type Item = VertexMap<'a>;

    fn next(&mut self) -> Option<VertexMap<'a>> {
        let images = self.next_images()?;
        let kind = if self.strong { MapKind::Strong } else { MapKind::Homomorphism };
        Some(VertexMap {
            domain: self.g,
            codomain: self.h,
            images,
            kind,
        })
    }
}
