//! Partial injective maps from guest tree vertices to host vertices, and
//! vertex paths inside a host graph.

use crate::graph::{vbit, Graph, VertexSet};
use crate::{LksError, Result};

/// A partial injective, adjacency-preserving map from guest to host vertices.
#[derive(Clone, Debug)]
pub struct Embedding {
    assignment: Vec<Option<usize>>,
    used: VertexSet,
}

impl Embedding {
    /// Empty embedding for a guest on `guest_order` vertices.
    pub fn new(guest_order: usize) -> Self {
        Embedding {
            assignment: vec![None; guest_order],
            used: 0,
        }
    }

    pub fn guest_order(&self) -> usize {
        self.assignment.len()
    }

    pub fn host_of(&self, guest: usize) -> Option<usize> {
        self.assignment.get(guest).copied().flatten()
    }

    pub fn is_assigned(&self, guest: usize) -> bool {
        self.host_of(guest).is_some()
    }

    /// Host vertices already in use.
    pub fn used_hosts(&self) -> VertexSet {
        self.used
    }

    /// Assigns `guest -> host`; both must be fresh.
    pub fn assign(&mut self, guest: usize, host: usize) -> Result<()> {
        if guest >= self.assignment.len() {
            return Err(LksError::InvalidEmbedding(format!(
                "guest vertex {guest} out of range"
            )));
        }
        if self.assignment[guest].is_some() {
            return Err(LksError::InvalidEmbedding(format!(
                "guest vertex {guest} already assigned"
            )));
        }
        if self.used & vbit(host) != 0 {
            return Err(LksError::InvalidEmbedding(format!(
                "host vertex {host} already used"
            )));
        }
        self.assignment[guest] = Some(host);
        self.used |= vbit(host);
        Ok(())
    }

    /// Removes the assignment of `guest`, if any.
    pub fn unassign(&mut self, guest: usize) {
        if let Some(h) = self.assignment[guest].take() {
            self.used &= !vbit(h);
        }
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(|a| a.is_some())
    }

    pub fn unassigned(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_none())
            .map(|(i, _)| i)
    }

    /// `(guest, host)` pairs of the assigned part, sorted by guest id.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.assignment
            .iter()
            .enumerate()
            .filter_map(|(g, a)| a.map(|h| (g, h)))
            .collect()
    }

    /// JSON-friendly view as an array of `[guest, host]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.pairs())
    }
}

/// A path in a host graph, stored as its ordered vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostPath {
    vertices: Vec<usize>,
}

impl HostPath {
    /// Validates consecutive adjacency and distinctness against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(LksError::InvalidPath("empty vertex sequence".into()));
        }
        let mut seen: VertexSet = 0;
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(LksError::VertexOutOfRange(v, g.vertex_count()));
            }
            if seen & vbit(v) != 0 {
                return Err(LksError::InvalidPath(format!("vertex {v} repeats")));
            }
            seen |= vbit(v);
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(LksError::InvalidPath(format!(
                    "{} and {} not adjacent in host",
                    w[0], w[1]
                )));
            }
        }
        Ok(HostPath { vertices })
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().fold(0, |acc, &v| acc | vbit(v))
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("non-empty")
    }

    pub fn reversed(&self) -> HostPath {
        let mut v = self.vertices.clone();
        v.reverse();
        HostPath { vertices: v }
    }

    /// Drops the last vertex. Errors on single-vertex paths.
    pub fn trimmed_end(&self) -> Result<HostPath> {
        if self.vertices.len() < 2 {
            return Err(LksError::InvalidPath("cannot trim single-vertex path".into()));
        }
        Ok(HostPath {
            vertices: self.vertices[..self.vertices.len() - 1].to_vec(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assign_and_injectivity() {
        let mut e = Embedding::new(3);
        e.assign(0, 5).unwrap();
        assert!(e.assign(1, 5).is_err());
        assert!(e.assign(0, 6).is_err());
        e.assign(1, 6).unwrap();
        assert!(!e.is_total());
        e.assign(2, 0).unwrap();
        assert!(e.is_total());
        assert_eq!(e.pairs(), vec![(0, 5), (1, 6), (2, 0)]);
    }

    #[test]
    fn path_validation() {
        let g = Graph::path(4).unwrap();
        assert!(HostPath::new(&g, vec![0, 1, 2, 3]).is_ok());
        assert!(HostPath::new(&g, vec![0, 2]).is_err());
        assert!(HostPath::new(&g, vec![0, 1, 0]).is_err());
        let p = HostPath::new(&g, vec![1, 2, 3]).unwrap();
        assert_eq!(p.length(), 2);
        assert_eq!(p.reversed().vertices(), &[3, 2, 1]);
        assert_eq!(p.trimmed_end().unwrap().vertices(), &[1, 2]);
    }
}
