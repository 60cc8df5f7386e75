//! Satisfaction of identities and implications in a graph algebra.
//!
//! Implications are decided by a backtracking search for a countermodel:
//! an assignment satisfying every premise identity and falsifying the
//! consequence. Each identity is tested as soon as its last variable is
//! assigned. The countermodel reported is the least one when variables are
//! taken in sorted order and values are ordered `∞` first, then vertices.

use std::collections::BTreeSet;

use super::compiled::{Code, INF};
use super::{eval, Assignment, Element, Identity, Implication};
use crate::error::{Error, Result};
use crate::graph::{Graph, HomSearch};
use crate::name::Name;
use crate::term::{term_graph, Term};

/// The exhaustive searches refuse inputs with more than this many variables
/// on a graph with more than [`GUARD_VERTICES`] vertices unless forced.
pub const GUARD_VARIABLES: usize = 8;
pub const GUARD_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Decide through the homomorphism sets of the two term graphs.
    #[default]
    Fast,
    /// Evaluate both sides under every assignment into `V ∪ {∞}`.
    Brute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Satisfaction {
    Holds,
    /// A countermodel: the premise holds and the consequence fails.
    Violated(Assignment),
}

impl Satisfaction {
    pub fn holds(&self) -> bool {
        matches!(self, Satisfaction::Holds)
    }

    pub fn countermodel(&self) -> Option<&Assignment> {
        match self {
            Satisfaction::Holds => None,
            Satisfaction::Violated(h) => Some(h),
        }
    }
}

pub fn satisfies_identity(g: &Graph, id: &Identity, mode: Mode) -> Result<bool> {
    Checker::new(g).identity(id, mode)
}

pub fn satisfies_implication(g: &Graph, imp: &Implication) -> Result<Satisfaction> {
    Checker::new(g).implication(imp)
}

/// Satisfaction checks against one graph, optionally lifting the capacity
/// guard.
#[derive(Clone, Copy, Debug)]
pub struct Checker<'g> {
    graph: &'g Graph,
    force: bool,
}

impl<'g> Checker<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Checker { graph, force: false }
    }

    pub fn force(mut self, force: bool) -> Self {
        self.force = force;
        self
    }

    fn guard(&self, nvars: usize) -> Result<()> {
        if !self.force && nvars > GUARD_VARIABLES && self.graph.len() > GUARD_VERTICES {
            return Err(Error::Capacity(format!(
                "{nvars} variables over {} vertices; pass force to run anyway",
                self.graph.len()
            )));
        }
        Ok(())
    }

    pub fn identity(&self, id: &Identity, mode: Mode) -> Result<bool> {
        self.guard(id.vars().len())?;
        match mode {
            Mode::Brute => Ok(self.identity_brute(id)),
            Mode::Fast => self.identity_fast(id),
        }
    }

    fn identity_brute(&self, id: &Identity) -> bool {
        let slots: Vec<Name> = id.vars().into_iter().collect();
        let l = Code::new(&id.left, &slots);
        let r = Code::new(&id.right, &slots);
        let n = self.graph.len() as u32;
        let mut vals = vec![INF; slots.len()];
        let mut stack = Vec::new();
        loop {
            if l.eval(self.graph, &vals, &mut stack) != r.eval(self.graph, &vals, &mut stack) {
                return false;
            }
            // odometer over INF, 0, 1, …, n-1
            let mut k = 0;
            loop {
                if k == vals.len() {
                    return true;
                }
                vals[k] = match vals[k] {
                    INF if n > 0 => 0,
                    v if v != INF && v + 1 < n => v + 1,
                    _ => INF,
                };
                if vals[k] != INF {
                    break;
                }
                k += 1;
            }
        }
    }

    /// All maps `var(t) → V` that are homomorphisms `G(t) → g`, listed over
    /// the sorted variables of `t`, and the position of `L(t)`.
    fn hom_set(&self, t: &Term) -> Result<(Vec<Vec<usize>>, usize)> {
        let tg = term_graph(t)?;
        let root = tg.graph.index_of(tg.root.as_str()).expect("root is a vertex");
        let mut it = HomSearch::new(&tg.graph, self.graph, false).into_iter();
        let mut homs = Vec::new();
        while let Some(h) = it.next_images() {
            homs.push(h);
        }
        homs.sort_unstable();
        Ok((homs, root))
    }

    fn identity_fast(&self, id: &Identity) -> Result<bool> {
        let (lt, rt) = (id.left.is_trivial(), id.right.is_trivial());
        if lt && rt {
            return Ok(true);
        }
        if lt || rt {
            let other = if lt { &id.right } else { &id.left };
            return Ok(self.hom_set(other)?.0.is_empty());
        }
        let (hl, rl) = self.hom_set(&id.left)?;
        let (hr, rr) = self.hom_set(&id.right)?;
        if hl.is_empty() && hr.is_empty() {
            return Ok(true);
        }
        if hl.is_empty() != hr.is_empty() || id.left.vars() != id.right.vars() {
            return Ok(false);
        }
        Ok(hl == hr && hl.iter().all(|h| h[rl] == h[rr]))
    }

    /// Decides `imp`, reporting the least countermodel when it fails.
    pub fn implication(&self, imp: &Implication) -> Result<Satisfaction> {
        let vars = imp.vars();
        self.guard(vars.len())?;
        let problem = Problem::new(self.graph, imp, &vars);
        Ok(match problem.least_countermodel() {
            None => Satisfaction::Holds,
            Some(vals) => Satisfaction::Violated(problem.assignment(&vals)),
        })
    }

    /// The least assignment on which the two sides of `id` differ.
    pub fn identity_countermodel(&self, id: &Identity) -> Result<Option<Assignment>> {
        let imp = Implication::new(Vec::new(), id.clone());
        Ok(self.implication(&imp)?.countermodel().cloned())
    }

    /// Whether `imp` holds under the given assignment, which must bind every
    /// variable of `imp`.
    pub fn holds_under(&self, imp: &Implication, h: &Assignment) -> Result<bool> {
        for id in &imp.premise {
            if eval(self.graph, &id.left, h)? != eval(self.graph, &id.right, h)? {
                return Ok(true);
            }
        }
        let c = &imp.consequence;
        Ok(eval(self.graph, &c.left, h)? == eval(self.graph, &c.right, h)?)
    }
}

/// An identity to satisfy (`equal`) or to falsify.
struct Condition {
    left: Code,
    right: Code,
    equal: bool,
    slots: Vec<usize>,
}

impl Condition {
    fn test(&self, g: &Graph, vals: &[u32], stack: &mut Vec<u32>) -> bool {
        (self.left.eval(g, vals, stack) == self.right.eval(g, vals, stack)) == self.equal
    }
}

struct Problem<'a> {
    graph: &'a Graph,
    slots: Vec<Name>,
    conditions: Vec<Condition>,
    /// Assignment order for the existence search.
    order: Vec<usize>,
}

impl<'a> Problem<'a> {
    fn new(graph: &'a Graph, imp: &Implication, vars: &BTreeSet<Name>) -> Self {
        let slots: Vec<Name> = vars.iter().cloned().collect();
        let condition = |id: &Identity, equal: bool| {
            let left = Code::new(&id.left, &slots);
            let right = Code::new(&id.right, &slots);
            let mut s = left.slots_used();
            s.extend(right.slots_used());
            s.sort_unstable();
            s.dedup();
            Condition { left, right, equal, slots: s }
        };
        let mut conditions: Vec<Condition> = imp.premise.iter().map(|id| condition(id, true)).collect();
        conditions.push(condition(&imp.consequence, false));
        let order = greedy_order(slots.len(), &conditions);
        Problem { graph, slots, conditions, order }
    }

    fn values(&self) -> impl Iterator<Item = u32> {
        std::iter::once(INF).chain(0..self.graph.len() as u32)
    }

    /// Searches for a countermodel extending `fixed`.
    fn extend(&self, fixed: &[Option<u32>]) -> Option<Vec<u32>> {
        let free: Vec<usize> = self.order.iter().copied().filter(|&s| fixed[s].is_none()).collect();
        let mut position = vec![usize::MAX; self.slots.len()];
        for (k, &s) in free.iter().enumerate() {
            position[s] = k;
        }
        let mut vals: Vec<u32> = fixed.iter().map(|v| v.unwrap_or(INF)).collect();
        let mut stack = Vec::new();
        let mut at_level: Vec<Vec<usize>> = vec![Vec::new(); free.len()];
        for (c, cond) in self.conditions.iter().enumerate() {
            match cond.slots.iter().map(|&s| position[s]).filter(|&p| p != usize::MAX).max() {
                Some(level) => at_level[level].push(c),
                None => {
                    if !cond.test(self.graph, &vals, &mut stack) {
                        return None;
                    }
                }
            }
        }
        let values: Vec<u32> = self.values().collect();
        self.dfs(0, &free, &at_level, &values, &mut vals, &mut stack)
            .then_some(vals)
    }

    fn dfs(
        &self,
        level: usize,
        free: &[usize],
        at_level: &[Vec<usize>],
        values: &[u32],
        vals: &mut [u32],
        stack: &mut Vec<u32>,
    ) -> bool {
        if level == free.len() {
            return true;
        }
        let slot = free[level];
        for &v in values {
            vals[slot] = v;
            if at_level[level].iter().all(|&c| self.conditions[c].test(self.graph, vals, stack))
                && self.dfs(level + 1, free, at_level, values, vals, stack)
            {
                return true;
            }
        }
        false
    }

    /// The lexicographically least countermodel, fixing one slot at a time.
    fn least_countermodel(&self) -> Option<Vec<u32>> {
        let mut fixed: Vec<Option<u32>> = vec![None; self.slots.len()];
        let mut witness = self.extend(&fixed)?;
        for k in 0..self.slots.len() {
            for v in self.values() {
                if v == witness[k] {
                    fixed[k] = Some(v);
                    break;
                }
                fixed[k] = Some(v);
                if let Some(w) = self.extend(&fixed) {
                    witness = w;
                    break;
                }
            }
        }
        Some(witness)
    }

    fn assignment(&self, vals: &[u32]) -> Assignment {
        self.slots
            .iter()
            .zip(vals)
            .map(|(s, &v)| {
                let e = if v == INF { Element::Inf } else { Element::Vertex(self.graph.name(v as usize).clone()) };
                (s.clone(), e)
            })
            .collect()
    }
}

/// Consequence variables first, then whichever variable completes the most
/// conditions, then the most connected to those already placed.
fn greedy_order(n: usize, conditions: &[Condition]) -> Vec<usize> {
    let consequence = &conditions.last().expect("consequence present").slots;
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degree = vec![0usize; n];
    for c in conditions {
        for &s in &c.slots {
            degree[s] += 1;
        }
    }
    for _ in 0..n {
        let mut best: Option<((bool, usize, usize, usize), usize)> = None;
        for v in (0..n).filter(|&v| !placed[v]) {
            let mut completes = 0;
            let mut touching = 0;
            for c in conditions.iter().filter(|c| c.slots.contains(&v)) {
                if c.slots.iter().all(|&s| s == v || placed[s]) {
                    completes += 1;
                }
                if c.slots.iter().any(|&s| placed[s]) {
                    touching += 1;
                }
            }
            let score = (consequence.contains(&v), completes, touching, degree[v]);
            if best.as_ref().is_none_or(|(b, _)| score > *b) {
                best = Some((score, v));
            }
        }
        let (_, v) = best.expect("an unplaced variable remains");
        placed[v] = true;
        order.push(v);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g0() -> Graph {
        Graph::from_indices(2, &[(0, 1), (1, 0), (1, 1)])
    }

    fn k3() -> Graph {
        Graph::from_fn(3, |i, j| i != j)
    }

    fn id(s: &str) -> Identity {
        Identity::parse(s).unwrap()
    }

    fn imp(s: &str) -> Implication {
        Implication::parse(s).unwrap()
    }

    #[test]
    fn identities_in_g0() {
        let g = g0();
        for mode in [Mode::Brute, Mode::Fast] {
            assert!(satisfies_identity(&g, &id("x x =~ x x"), mode).unwrap());
            assert!(!satisfies_identity(&g, &id("x x =~ x"), mode).unwrap());
            assert!(satisfies_identity(&g, &id("x inf =~ inf y"), mode).unwrap());
            assert!(!satisfies_identity(&g, &id("x y =~ y x"), mode).unwrap());
        }
    }

    #[test]
    fn extension_by_inf_matters() {
        // one looped vertex: x y and x agree on V but not when y is ∞
        let g = Graph::from_indices(1, &[(0, 0)]);
        for mode in [Mode::Brute, Mode::Fast] {
            assert!(!satisfies_identity(&g, &id("x =~ x y"), mode).unwrap());
            assert!(satisfies_identity(&g, &id("x y =~ x (y y)"), mode).unwrap());
        }
    }

    #[test]
    fn fast_and_brute_agree_on_small_terms() {
        let terms: Vec<Term> = ["x", "y", "inf", "x x", "x y", "y x", "x (y x)", "x y x", "x (x y)", "x (y y)", "(x y) (y x)", "x inf"]
            .iter()
            .map(|s| Term::parse(s).unwrap())
            .collect();
        let graphs = [g0(), k3(), Graph::from_indices(2, &[(0, 1)]), Graph::from_indices(1, &[(0, 0)]), Graph::empty()];
        for g in &graphs {
            for a in &terms {
                for b in &terms {
                    let i = Identity::new(a.clone(), b.clone());
                    assert_eq!(
                        satisfies_identity(g, &i, Mode::Fast).unwrap(),
                        satisfies_identity(g, &i, Mode::Brute).unwrap(),
                        "{i} on {g:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn implication_with_countermodel_on_k3() {
        let g = k3();
        let i = imp("(x (y z)) =~ x & (z x) =~ inf -> (x (y y)) =~ (x y)");
        let s = satisfies_implication(&g, &i).unwrap();
        let h = s.countermodel().expect("violated").clone();
        assert!(!Checker::new(&g).holds_under(&i, &h).unwrap());
        // least countermodel: x, y, z in order
        assert_eq!(h[&Name::from("x")], Element::vertex("0"));
        assert_eq!(h[&Name::from("y")], Element::vertex("1"));
        assert_eq!(h[&Name::from("z")], Element::vertex("0"));
    }

    #[test]
    fn empty_premise_is_the_identity() {
        let g = g0();
        for i in ["x x =~ inf", "x y =~ x", "x (y x) =~ x y", "x =~ x"] {
            let i = id(i);
            let direct = satisfies_identity(&g, &i, Mode::Brute).unwrap();
            let via = Checker::new(&g).identity_countermodel(&i).unwrap().is_none();
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn least_countermodel_is_lexicographically_least() {
        let graphs = [g0(), k3(), Graph::from_indices(3, &[(0, 1), (1, 2), (2, 2)])];
        let imps = [
            imp("x y =~ x -> y x =~ y"),
            imp("x y =~ x & y z =~ y -> x z =~ x"),
            imp("-> x (y z) =~ x y"),
            imp("x y =~ x -> x =~ inf"),
        ];
        for g in &graphs {
            for i in &imps {
                let slots: Vec<Name> = i.vars().into_iter().collect();
                let mut all = Vec::new();
                let mut values: Vec<Element> = vec![Element::Inf];
                values.extend(g.vertices().iter().cloned().map(Element::Vertex));
                let mut idx = vec![0usize; slots.len()];
                'outer: loop {
                    let h: Assignment = slots.iter().cloned().zip(idx.iter().map(|&k| values[k].clone())).collect();
                    if !Checker::new(g).holds_under(i, &h).unwrap() {
                        all.push(idx.clone());
                    }
                    for k in (0..idx.len()).rev() {
                        idx[k] += 1;
                        if idx[k] < values.len() {
                            continue 'outer;
                        }
                        idx[k] = 0;
                    }
                    break;
                }
                let got = satisfies_implication(g, i).unwrap();
                match all.first() {
                    None => assert!(got.holds()),
                    Some(least) => {
                        let h = got.countermodel().unwrap();
                        let want: Assignment = slots.iter().cloned().zip(least.iter().map(|&k| values[k].clone())).collect();
                        assert_eq!(h, &want, "{i}");
                    }
                }
            }
        }
    }

    #[test]
    fn capacity_guard() {
        let g = Graph::from_fn(9, |i, j| i != j);
        let big = imp("a b =~ a & c d =~ c & e f =~ e & g h =~ g -> i a =~ i");
        assert!(satisfies_implication(&g, &big).unwrap_err().is_capacity());
        assert!(Checker::new(&g).force(true).implication(&big).is_ok());
        let small = imp("a b =~ a -> b a =~ b");
        assert!(satisfies_implication(&g, &small).is_ok());
    }

    #[test]
    fn constant_premises_and_consequences() {
        let g = g0();
        assert!(satisfies_implication(&g, &imp("inf =~ inf -> inf =~ inf")).unwrap().holds());
        assert!(satisfies_implication(&Graph::empty(), &imp("-> x =~ inf")).unwrap().holds());
        assert!(satisfies_implication(&g, &imp("x =~ inf -> x x =~ inf")).unwrap().holds());
    }
}
