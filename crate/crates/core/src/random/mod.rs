//! Seeded random graph models.
//!
//! Every generator takes a [`Seed`] and draws from a ChaCha8 stream:
//! the key is expanded from `master` by `ChaCha8Rng::seed_from_u64`, and
//! `stream` selects one of the 2^64 independent ChaCha streams under that
//! key. Equal seeds give equal graphs on the same build.

mod weighted;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

use crate::graph::Graph;

pub use weighted::WeightedIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed {
    pub master: u64,
    pub stream: u64,
}

impl Seed {
    pub fn new(master: u64, stream: u64) -> Self {
        Seed { master, stream }
    }

    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.stream);
        rng
    }
}

/// Preferential-attachment tree on `n` vertices.
///
/// Vertex 1 joins vertex 0; each later vertex `t` joins one earlier vertex
/// `i` with probability `d_i^alpha / sum_j d_j^alpha` over the current
/// degrees. `alpha = 0` delegates to [`recursive_tree`] (same stream usage,
/// so the same graph) and `alpha = 1` samples a uniform edge endpoint.
///
/// # Panics
/// If `n == 0` or `alpha` is not finite.
pub fn ba_tree(n: usize, alpha: f64, seed: Seed) -> Graph {
    assert!(n >= 1, "tree needs at least one vertex");
    assert!(alpha.is_finite(), "alpha must be finite");
    if alpha == 0.0 {
        return recursive_tree(n, seed);
    }
    let mut rng = seed.rng();
    if alpha == 1.0 {
        return linear_attachment(n, &mut rng);
    }
    if n == 1 {
        return Graph::empty(1);
    }
    let mut edges = Vec::with_capacity(n - 1);
    edges.push((0, 1));
    let mut degree = vec![0u32; n];
    degree[0] = 1;
    degree[1] = 1;
    let mut index = WeightedIndex::with_capacity(n);
    index.push(1.0);
    index.push(1.0);
    for t in 2..n {
        let parent = index.sample(&mut rng);
        degree[parent] += 1;
        index.set(parent, (degree[parent] as f64).powf(alpha));
        degree[t] = 1;
        index.push(1.0);
        edges.push((parent, t));
    }
    Graph::from_valid_edges(n, edges)
}

/// `alpha = 1`: vertex `i` appears `d_i` times in the endpoint list, so a
/// uniform endpoint is a degree-proportional vertex.
fn linear_attachment(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let mut endpoints = Vec::with_capacity(2 * (n - 1));
    let mut edges = Vec::with_capacity(n - 1);
    endpoints.extend([0, 1]);
    edges.push((0, 1));
    for t in 2..n {
        let parent = endpoints[rng.random_range(0..endpoints.len())];
        endpoints.extend([parent, t]);
        edges.push((parent, t));
    }
    Graph::from_valid_edges(n, edges)
}

/// Random recursive tree: vertex `t >= 1` joins a uniformly random earlier vertex.
///
/// # Panics
/// If `n == 0`.
pub fn recursive_tree(n: usize, seed: Seed) -> Graph {
    assert!(n >= 1, "tree needs at least one vertex");
    let mut rng = seed.rng();
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|t| {
            let parent = if t == 1 { 0 } else { rng.random_range(0..t) };
            (parent, t)
        })
        .collect();
    Graph::from_valid_edges(n, edges)
}

/// G(n, p): each of the `n(n-1)/2` pairs is an edge independently with
/// probability `p`. Skips over non-edges with geometric gaps, so the cost is
/// proportional to the number of edges drawn.
///
/// # Panics
/// If `p` is outside `[0, 1]`.
pub fn erdos_renyi(n: usize, p: f64, seed: Seed) -> Graph {
    assert!((0.0..=1.0).contains(&p), "p must be in [0, 1], got {p}");
    if p == 0.0 || n < 2 {
        return Graph::empty(n);
    }
    if p == 1.0 {
        return Graph::from_valid_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))));
    }
    let mut rng = seed.rng();
    let gap = Geometric::new(p).expect("0 < p < 1");
    let mut edges = Vec::new();
    // pairs (i, j), i < j, enumerated column by column: (0,1), (0,2), (1,2), (0,3), ...
    let (mut i, mut j) = (0u64, 1u64);
    let n = n as u64;
    let mut skip = gap.sample(&mut rng);
    loop {
        // advance `skip` pairs from (i, j)
        i = i.saturating_add(skip);
        while i >= j {
            i -= j;
            j += 1;
            if j >= n {
                return Graph::from_valid_edges(n as usize, edges);
            }
        }
        edges.push((i as usize, j as usize));
        i += 1;
        if i >= j {
            i = 0;
            j += 1;
            if j >= n {
                return Graph::from_valid_edges(n as usize, edges);
            }
        }
        skip = gap.sample(&mut rng);
    }
}
