//! Slow reference implementations over `Vec<bool>` adjacency, written without
//! the crate's bitset machinery.

#![allow(dead_code)]

use ocdom::Graph;

pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for e in g.edges() {
            adj[e.u()][e.v()] = true;
            adj[e.v()][e.u()] = true;
        }
        Naive { n, adj }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn with_toggled(&self, pairs: &[(usize, usize)]) -> Naive {
        let mut adj = self.adj.clone();
        for &(u, v) in pairs {
            adj[u][v] = !adj[u][v];
            adj[v][u] = !adj[v][u];
        }
        Naive { n: self.n, adj }
    }

    pub fn dominates(&self, inside: &[bool]) -> bool {
        (0..self.n).all(|v| inside[v] || (0..self.n).any(|u| inside[u] && self.adj[u][v]))
    }

    /// Connectivity of the subgraph induced by the vertices with `keep[v]`.
    pub fn induced_connected(&self, keep: &[bool]) -> bool {
        let Some(start) = (0..self.n).find(|&v| keep[v]) else {
            return true;
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if keep[v] && self.adj[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        (0..self.n).all(|v| !keep[v] || seen[v])
    }

    pub fn is_connected(&self) -> bool {
        self.induced_connected(&vec![true; self.n])
    }

    fn members(&self, mask: u64) -> Vec<bool> {
        (0..self.n).map(|v| mask >> v & 1 == 1).collect()
    }

    /// Minimum size and the numerically least mask of that size.
    fn best(&self, outer_connected: bool) -> (usize, u64) {
        let mut best: Option<(usize, u64)> = None;
        for mask in 0u64..(1 << self.n) {
            let inside = self.members(mask);
            if !self.dominates(&inside) {
                continue;
            }
            if outer_connected {
                let outside: Vec<bool> = inside.iter().map(|b| !b).collect();
                if !self.induced_connected(&outside) {
                    continue;
                }
            }
            let size = mask.count_ones() as usize;
            if best.is_none_or(|(s, _)| size < s) {
                best = Some((size, mask));
            }
        }
        best.expect("the full vertex set always qualifies")
    }

    pub fn gamma_tilde(&self) -> (usize, Vec<usize>) {
        let (size, mask) = self.best(true);
        (size, (0..self.n).filter(|&v| mask >> v & 1 == 1).collect())
    }

    pub fn gamma_plain(&self) -> (usize, Vec<usize>) {
        let (size, mask) = self.best(false);
        (size, (0..self.n).filter(|&v| mask >> v & 1 == 1).collect())
    }
}

/// All `k`-subsets of `items`, in any order.
pub fn subsets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = subsets(&items[1..], k - 1);
    for s in &mut out {
        s.insert(0, items[0]);
    }
    out.extend(subsets(&items[1..], k));
    out
}

/// Smallest number of edge removals raising the naive number, if at most `k_max`.
pub fn naive_bondage(g: &Naive, k_max: usize) -> Option<usize> {
    let base = g.gamma_tilde().0;
    let edges = g.edges();
    (1..=k_max.min(edges.len())).find(|&k| {
        subsets(&edges, k)
            .iter()
            .any(|s| g.with_toggled(s).gamma_tilde().0 > base)
    })
}

/// Smallest number of edge additions lowering the naive number, if at most `k_max`.
pub fn naive_reinforcement(g: &Naive, k_max: usize) -> Option<usize> {
    let base = g.gamma_tilde().0;
    let mut non_edges = Vec::new();
    for u in 0..g.n {
        for v in u + 1..g.n {
            if !g.adj[u][v] {
                non_edges.push((u, v));
            }
        }
    }
    (1..=k_max.min(non_edges.len())).find(|&k| {
        subsets(&non_edges, k)
            .iter()
            .any(|s| g.with_toggled(s).gamma_tilde().0 < base)
    })
}

/// Graph on `n` vertices whose edges are the set bits of `code` over the
/// lexicographic pair order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut pairs = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                pairs.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_pairs(n, &pairs).unwrap()
}

pub fn random_graph<R: rand::Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_pairs(n, &pairs).unwrap()
}

/// Star orders (each at least 2) summing to `order`.
pub fn random_star_orders<R: rand::Rng>(rng: &mut R, order: usize) -> Vec<usize> {
    let mut left = order;
    let mut out = Vec::new();
    while left > 0 {
        let k = if left <= 3 { left } else { rng.gen_range(2..=left - 2) };
        out.push(k);
        left -= k;
    }
    out
}
