use std::fmt;

/// Undirected simple graph on vertices `0..n`, stored as a dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph::from_fn(n, |_, _| true)
    }

    /// Builds the graph whose edges are the pairs `i < j` with `f(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = SimpleGraph::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if f(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.n && j < self.n, "bad edge ({i}, {j})");
        self.adj[i * self.n + j] = true;
        self.adj[j * self.n + i] = true;
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&e| e).count() / 2
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        SimpleGraph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    pub fn complement(&self) -> SimpleGraph {
        SimpleGraph::from_fn(self.n, |i, j| !self.has_edge(i, j))
    }

    /// Cycle `C_n` on `0..n` (n >= 3).
    pub fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1))
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
        SimpleGraph::from_fn(a + b, |i, j| (i < a) != (j < a))
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| ((i + 1)..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect();
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}
