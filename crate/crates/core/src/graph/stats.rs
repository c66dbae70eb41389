use std::collections::BTreeMap;

use super::Graph;

/// Vertex counts `n_d` per degree `d`, including `d = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub counts: BTreeMap<usize, usize>,
    pub n: usize,
    pub m: usize,
}

impl DegreeStats {
    pub fn of(g: &Graph) -> Self {
        let mut counts = BTreeMap::new();
        for d in g.degrees() {
            *counts.entry(d).or_insert(0) += 1;
        }
        DegreeStats {
            counts,
            n: g.vertex_count(),
            m: g.edge_count(),
        }
    }

    pub fn count(&self, d: usize) -> usize {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// `n_d / n`, or 0 for the empty graph.
    pub fn fraction(&self, d: usize) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.count(d) as f64 / self.n as f64
        }
    }

    pub fn degree_sum(&self) -> usize {
        self.counts.iter().map(|(d, c)| d * c).sum()
    }
}

/// Edge counts keyed by the sorted degree pair `(k, l)`, `k <= l`, of their endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePairStats {
    pub counts: BTreeMap<(usize, usize), usize>,
}

impl EdgePairStats {
    pub fn of(g: &Graph) -> Self {
        let mut counts = BTreeMap::new();
        for (i, j) in g.edges() {
            let (a, b) = (g.degree(i), g.degree(j));
            *counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        EdgePairStats { counts }
    }

    pub fn count(&self, k: usize, l: usize) -> usize {
        self.counts.get(&(k.min(l), k.max(l))).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Edges joining two degree-2 vertices.
    pub fn e22(&self) -> usize {
        self.count(2, 2)
    }
}
