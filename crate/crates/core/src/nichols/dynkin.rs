//! Generalized Dynkin diagrams of diagonal braidings and the minimal
//! finiteness lookup the tables need: vertices labeled q_ii, edges labeled
//! q_ij q_ji when that product is not 1.
//!
//! The lookup is deliberately small. A vertex label 1 forces infinite
//! dimension. When every vertex and every edge carries -1, a disjoint union
//! of simple paths is finite (type A_1 components contribute 2, type A_2
//! components 8) and any cycle is infinite. Everything else is reported as
//! not-in-lookup rather than guessed.

use crate::cyclo::Cyclo;
use serde::{Deserialize, Serialize};

/// Shape of one path component in the all-minus-one case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathType {
    /// Isolated vertex (Cartan A1); Nichols dimension 2 at q = -1.
    A1,
    /// Two joined vertices (Cartan A2); Nichols dimension 8 at q = -1.
    A2,
    /// A longer simple path of the given vertex count.
    Path(usize),
}

impl PathType {
    /// Nichols dimension of the component at q = -1, when known: 2^(number
    /// of positive roots) for Cartan type A_n.
    pub fn dim(&self) -> u64 {
        let n = match self {
            PathType::A1 => 1u32,
            PathType::A2 => 2,
            PathType::Path(k) => *k as u32,
        };
        2u64.pow(n * (n + 1) / 2)
    }
}

/// Verdict of the diagram lookup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DynkinVerdict {
    /// All labels -1 and the graph is a disjoint union of simple paths.
    Finite {
        components: Vec<PathType>,
        predicted_dim: u64,
    },
    /// Some vertex has q_ii = 1.
    InfiniteVertexOne { vertex: usize },
    /// All labels -1 but the graph contains a cycle.
    InfiniteCycle,
    /// Outside the lookup; no verdict either way.
    NotInLookup,
}

/// A labeled generalized Dynkin diagram with its verdict.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DynkinData {
    pub vertex_labels: Vec<Cyclo>,
    /// (i, j, q_ij * q_ji) for i < j with the product not equal to 1.
    pub edges: Vec<(usize, usize, Cyclo)>,
    pub verdict: DynkinVerdict,
}

/// Builds the labeled diagram of a q-matrix and runs the lookup.
pub fn dynkin(q: &[Vec<Cyclo>]) -> DynkinData {
    let d = q.len();
    for row in q {
        assert_eq!(row.len(), d, "q-matrix must be square");
    }
    let vertex_labels: Vec<Cyclo> = (0..d).map(|i| q[i][i].clone()).collect();
    let mut edges = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            let label = &q[i][j] * &q[j][i];
            if !label.is_one() {
                edges.push((i, j, label));
            }
        }
    }
    let verdict = lookup(&vertex_labels, &edges, d);
    DynkinData {
        vertex_labels,
        edges,
        verdict,
    }
}

fn lookup(vertices: &[Cyclo], edges: &[(usize, usize, Cyclo)], d: usize) -> DynkinVerdict {
    if let Some(v) = vertices.iter().position(|q| q.is_one()) {
        return DynkinVerdict::InfiniteVertexOne { vertex: v };
    }
    let minus_one = Cyclo::from_int(-1);
    let all_minus = vertices.iter().all(|q| *q == minus_one)
        && edges.iter().all(|(_, _, l)| *l == minus_one);
    if !all_minus {
        return DynkinVerdict::NotInLookup;
    }
    // connected components; paths have max degree 2 and |edges| = |vertices| - 1
    let mut adj = vec![Vec::new(); d];
    for (i, j, _) in edges {
        adj[*i].push(*j);
        adj[*j].push(*i);
    }
    let mut seen = vec![false; d];
    let mut components = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut verts = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            verts.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let edge_count: usize = verts.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        let is_path = edge_count == verts.len() - 1 && verts.iter().all(|&v| adj[v].len() <= 2);
        if !is_path {
            return DynkinVerdict::InfiniteCycle;
        }
        components.push(match verts.len() {
            1 => PathType::A1,
            2 => PathType::A2,
            k => PathType::Path(k),
        });
    }
    let predicted_dim = components.iter().map(|c| c.dim()).product();
    DynkinVerdict::Finite {
        components,
        predicted_dim,
    }
}
