use super::{Graph, GraphError};

/// Star `S_n`: vertex 0 joined to vertices `1..n`.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameters(format!(
            "star needs n >= 2, got {n}"
        )));
    }
    Ok(Graph::from_valid_edges(n, (1..n).map(|v| (0, v))))
}

/// Path `P_n` with edges `(i, i + 1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameters("path needs n >= 1".into()));
    }
    Ok(Graph::from_valid_edges(n, (0..n - 1).map(|i| (i, i + 1))))
}

/// Double star `S_{p,q}` on `p + q` vertices.
///
/// Vertex 0 is a center of degree `p`, vertex 1 a center of degree `q`. The
/// two centers are adjacent; vertices `2..p+1` hang off center 0 and the
/// remaining `q - 1` vertices hang off center 1.
pub fn double_star(p: usize, q: usize) -> Result<Graph, GraphError> {
    if p < 1 || q < 1 || p + q < 3 {
        return Err(GraphError::InvalidParameters(format!(
            "double star needs p, q >= 1 and p + q >= 3, got ({p}, {q})"
        )));
    }
    let n = p + q;
    let left = (2..p + 1).map(|v| (0, v));
    let right = (p + 1..n).map(|v| (1, v));
    Ok(Graph::from_valid_edges(
        n,
        std::iter::once((0, 1)).chain(left).chain(right),
    ))
}
