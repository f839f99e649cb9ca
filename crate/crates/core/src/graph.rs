//! Small undirected labeled graphs with bitset adjacency rows.

use crate::setcore::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    rows: Vec<SubsetMask>,
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph {
            labels,
            rows: vec![SubsetMask::empty(n); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &SubsetMask {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(SubsetMask::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| {
                self.rows[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Connected components as vertex masks, ordered by least vertex.
    pub fn components(&self) -> Vec<SubsetMask> {
        let n = self.vertex_count();
        let mut seen = SubsetMask::empty(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let comp = self.reach(start, &SubsetMask::full(n));
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach(&self, start: usize, within: &SubsetMask) -> SubsetMask {
        let mut comp = SubsetMask::empty(self.vertex_count());
        comp.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in self.rows[u].intersection(within).iter() {
                if !comp.contains(v) {
                    comp.insert(v);
                    stack.push(v);
                }
            }
        }
        comp
    }

    /// Whether the subgraph induced by `vertices` is connected (the empty set counts as connected).
    pub fn induces_connected(&self, vertices: &SubsetMask) -> bool {
        match vertices.first() {
            None => true,
            Some(s) => self.reach(s, vertices) == *vertices,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected(&SubsetMask::full(self.vertex_count()))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|u| self.degree(u) == n - 1)
    }

    /// If the graph is exactly a path on all of its vertices (at least two),
    /// the vertex sequence starting from the smaller endpoint.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n < 2 || self.edge_count() != n - 1 || !self.is_connected() {
            return None;
        }
        if (0..n).any(|u| self.degree(u) > 2) {
            return None;
        }
        let start = (0..n).find(|&u| self.degree(u) == 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while order.len() < n {
            let next = self.rows[cur].iter().find(|&v| v != prev)?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    /// Whether some connected component contains a cycle.
    pub fn has_cycle(&self) -> bool {
        self.components().iter().any(|c| {
            let edges: usize = c.iter().map(|u| self.degree(u)).sum::<usize>() / 2;
            edges >= c.len()
        })
    }

    /// Whether the vertices in `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &SubsetMask) -> bool {
        vertices.iter().all(|u| {
            let mut others = vertices.clone();
            others.remove(u);
            others.is_subset(&self.rows[u])
        })
    }

    /// Graphviz rendering; vertices appear in index order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (i, label) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{i} [label={}];\n", quote(label)));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  n{u} -- n{v};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.labels,
            "edges": self.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        })
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}
