//! Dynamic discrete distribution over a growing set of indices.

use rand::Rng;

/// Number of weight updates between full rebuilds of the prefix-sum tree.
const REBUILD_INTERVAL: usize = 1 << 16;

/// Sampler over indices `0..len()` with probability proportional to their
/// weight, backed by a Fenwick (binary indexed) tree of partial sums.
///
/// Sampling, appending and updating are all `O(log capacity)`. Floating-point
/// drift in the partial sums is discarded by rebuilding the tree from the
/// stored weights every 2^16 updates.
#[derive(Debug, Clone)]
pub struct WeightedIndex {
    weights: Vec<f64>,
    // tree[i] (1-based) holds the sum of weights[i - lsb(i) .. i]
    tree: Vec<f64>,
    total: f64,
    updates: usize,
}

impl WeightedIndex {
    pub fn with_capacity(capacity: usize) -> Self {
        WeightedIndex {
            weights: Vec::with_capacity(capacity),
            tree: vec![0.0; capacity + 1],
            total: 0.0,
            updates: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Appends index `len()` with the given weight.
    ///
    /// # Panics
    /// If the weight is not finite and positive, or capacity is exhausted.
    pub fn push(&mut self, weight: f64) {
        assert!(weight.is_finite() && weight > 0.0, "weight must be positive, got {weight}");
        assert!(self.weights.len() < self.capacity(), "capacity exhausted");
        self.weights.push(0.0);
        self.set(self.weights.len() - 1, weight);
    }

    pub fn capacity(&self) -> usize {
        self.tree.len() - 1
    }

    /// Replaces the weight of an existing index.
    pub fn set(&mut self, i: usize, weight: f64) {
        assert!(weight.is_finite() && weight > 0.0, "weight must be positive, got {weight}");
        let delta = weight - self.weights[i];
        self.weights[i] = weight;
        self.total += delta;
        let mut k = i + 1;
        while k < self.tree.len() {
            self.tree[k] += delta;
            k += k & k.wrapping_neg();
        }
        self.updates += 1;
        if self.updates % REBUILD_INTERVAL == 0 {
            self.rebuild();
        }
    }

    /// Recomputes every partial sum and the total from the stored weights.
    pub fn rebuild(&mut self) {
        self.tree.fill(0.0);
        for (i, &w) in self.weights.iter().enumerate() {
            self.tree[i + 1] = w;
        }
        for k in 1..self.tree.len() {
            let parent = k + (k & k.wrapping_neg());
            if parent < self.tree.len() {
                self.tree[parent] += self.tree[k];
            }
        }
        self.total = self.weights.iter().sum();
    }

    /// Smallest index whose inclusive prefix sum exceeds `target`.
    fn search(&self, mut target: f64) -> usize {
        let mut pos = 0;
        let mut step = (self.tree.len() - 1).next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next < self.tree.len() && self.tree[next] <= target {
                pos = next;
                target -= self.tree[next];
            }
            step >>= 1;
        }
        // pos is the count of entries whose cumulative sum is <= target
        pos.min(self.weights.len() - 1)
    }

    /// Draws an index with probability `weight(i) / total()`.
    ///
    /// # Panics
    /// If empty.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        assert!(!self.weights.is_empty(), "cannot sample from an empty index");
        let u: f64 = rng.random::<f64>() * self.total;
        self.search(u)
    }
}
