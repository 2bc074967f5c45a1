//! Maximal clique enumeration on small dense graphs.
//!
//! Bron–Kerbosch with pivoting over `u128` bitsets; the cluster-tilting
//! searches never exceed 128 vertices (the default budgets are far below).

use alloc::vec::Vec;

/// Undirected graph on at most 128 vertices, adjacency as bitmasks.
#[derive(Debug, Clone)]
pub struct DenseGraph {
    n: usize,
    adj: Vec<u128>,
}

impl DenseGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 128, "dense graph limited to 128 vertices");
        DenseGraph {
            n,
            adj: alloc::vec![0; n],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1u128 << v;
        self.adj[v] |= 1u128 << u;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    fn all_vertices(&self) -> u128 {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    /// All maximal cliques, each as a bitmask, in ascending mask order.
    /// The empty graph (no vertices) yields no cliques.
    pub fn maximal_cliques(&self) -> Vec<u128> {
        let mut out = Vec::new();
        if self.n == 0 {
            return out;
        }
        self.bron_kerbosch(0, self.all_vertices(), 0, &mut out);
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(&self, r: u128, p: u128, x: u128, out: &mut Vec<u128>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        // Pivot on the vertex of P ∪ X with the most neighbours in P.
        let mut pivot_nb = 0u128;
        let mut best = usize::MAX;
        let mut cand = p | x;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let nb = self.adj[v] & p;
            let missing = (p & !nb).count_ones() as usize;
            if best == usize::MAX || missing < best {
                best = missing;
                pivot_nb = nb;
            }
        }
        let mut work = p & !pivot_nb;
        let mut p = p;
        let mut x = x;
        while work != 0 {
            let v = work.trailing_zeros() as usize;
            let bit = 1u128 << v;
            work &= work - 1;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }
}

/// Iterate the vertex indices set in a mask.
pub fn mask_members(mut mask: u128) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
