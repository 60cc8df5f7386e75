//! Terms compiled to postfix code over variable slots, evaluated on vertex
//! indices with [`INF`] standing for `∞`.

use crate::graph::Graph;
use crate::name::Name;
use crate::term::Term;

pub(crate) const INF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
enum Op {
    Var(u32),
    Inf,
    App,
}

#[derive(Clone, Debug)]
pub(crate) struct Code {
    ops: Vec<Op>,
}

impl Code {
    /// Compiles `t`; every variable of `t` must appear in `slots`.
    pub(crate) fn new(t: &Term, slots: &[Name]) -> Code {
        let mut ops = Vec::with_capacity(2 * t.size());
        emit(t, slots, &mut ops);
        Code { ops }
    }

    pub(crate) fn eval(&self, g: &Graph, vals: &[u32], stack: &mut Vec<u32>) -> u32 {
        stack.clear();
        for op in &self.ops {
            match *op {
                Op::Var(k) => stack.push(vals[k as usize]),
                Op::Inf => stack.push(INF),
                Op::App => {
                    let b = stack.pop().expect("well-formed code");
                    let a = stack.last_mut().expect("well-formed code");
                    if *a != INF && (b == INF || !g.has_edge_idx(*a as usize, b as usize)) {
                        *a = INF;
                    }
                }
            }
        }
        stack[0]
    }

    pub(crate) fn slots_used(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .ops
            .iter()
            .filter_map(|op| match op {
                Op::Var(k) => Some(*k as usize),
                _ => None,
            })
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

fn emit(t: &Term, slots: &[Name], ops: &mut Vec<Op>) {
    match t {
        Term::Var(x) => {
            let k = slots.binary_search(x).expect("variable has a slot");
            ops.push(Op::Var(k as u32));
        }
        Term::Inf => ops.push(Op::Inf),
        Term::App(l, r) => {
            emit(l, slots, ops);
            emit(r, slots, ops);
            ops.push(Op::App);
        }
    }
}
