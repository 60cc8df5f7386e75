use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::Graph;

impl Graph {
    /// Strongly connected components as ascending index lists, ordered by
    /// least member.
    pub fn scc_indices(&self) -> Vec<Vec<usize>> {
        let mut pg = DiGraph::<(), ()>::with_capacity(self.len(), self.edge_count());
        let nodes: Vec<_> = (0..self.len()).map(|_| pg.add_node(())).collect();
        for (i, j) in self.edge_indices() {
            pg.add_edge(nodes[i], nodes[j], ());
        }
        let mut comps: Vec<Vec<usize>> = tarjan_scc(&pg)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
                c.sort_unstable();
                c
            })
            .collect();
        comps.sort_unstable_by_key(|c| c[0]);
        comps
    }

    /// Source components: no edge `(u, v)` with `u` outside and `v` inside.
    pub fn source_indices(&self) -> Vec<Vec<usize>> {
        let comps = self.scc_indices();
        let mut comp_of = vec![0; self.len()];
        for (k, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = k;
            }
        }
        let mut entered = vec![false; comps.len()];
        for (u, v) in self.edge_indices() {
            if comp_of[u] != comp_of[v] {
                entered[comp_of[v]] = true;
            }
        }
        comps
            .into_iter()
            .zip(entered)
            .filter_map(|(c, e)| (!e).then_some(c))
            .collect()
    }
}
