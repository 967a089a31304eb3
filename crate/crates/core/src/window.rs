//! Finite windows into locally infinite curve graphs.

use std::collections::HashMap;
use std::hash::Hash;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum WindowError {
    #[error("duplicate vertex key at id {0}")]
    DuplicateKey(usize),
    #[error("vertex keys not sorted at id {0}")]
    Unsorted(usize),
    #[error("edge ({0}, {1}) out of range or a loop")]
    BadEdge(usize, usize),
    #[error("vertex id {0} does not match its position")]
    BadId(usize),
    #[error("basepoint is not a window vertex")]
    MissingBasepoint,
    #[error("expected instance {expected:?}, found {found:?}")]
    Instance { expected: String, found: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Induced subgraph on a finite vertex set with sorted canonical keys.
#[derive(Clone, Debug)]
pub struct Window<K> {
    pub instance: String,
    pub basepoint: K,
    /// Height bound (Farey) or word bound (S0,5).
    pub bound: u64,
    pub vertices: Vec<K>,
    /// Optional provenance per vertex.
    pub words: Vec<Option<String>>,
    pub graph: Graph,
    index: HashMap<K, usize>,
}

impl<K: PartialEq> PartialEq for Window<K> {
    fn eq(&self, o: &Self) -> bool {
        self.instance == o.instance
            && self.basepoint == o.basepoint
            && self.bound == o.bound
            && self.vertices == o.vertices
            && self.words == o.words
            && self.graph == o.graph
    }
}

impl<K: Clone + Ord + Hash> Window<K> {
    /// `vertices` must be sorted and distinct.
    pub fn new(
        instance: &str,
        basepoint: K,
        bound: u64,
        vertices: Vec<K>,
        words: Vec<Option<String>>,
        graph: Graph,
    ) -> Result<Self, WindowError> {
        for i in 1..vertices.len() {
            match vertices[i - 1].cmp(&vertices[i]) {
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => return Err(WindowError::DuplicateKey(i)),
                std::cmp::Ordering::Greater => return Err(WindowError::Unsorted(i)),
            }
        }
        let index: HashMap<K, usize> = vertices.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        if !index.contains_key(&basepoint) {
            return Err(WindowError::MissingBasepoint);
        }
        assert_eq!(words.len(), vertices.len());
        assert_eq!(graph.len(), vertices.len());
        Ok(Self { instance: instance.to_string(), basepoint, bound, vertices, words, graph, index })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn basepoint_index(&self) -> usize {
        self.index[&self.basepoint]
    }
}

#[derive(Serialize, Deserialize)]
struct VertexJson<K> {
    id: usize,
    key: K,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    word: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct WindowJson<K> {
    instance: String,
    basepoint: K,
    bound: u64,
    vertices: Vec<VertexJson<K>>,
    edges: Vec<[usize; 2]>,
}

impl<K: Clone + Ord + Hash + Serialize + DeserializeOwned> Window<K> {
    pub fn to_json_value(&self) -> serde_json::Value {
        let j = WindowJson {
            instance: self.instance.clone(),
            basepoint: self.basepoint.clone(),
            bound: self.bound,
            vertices: self
                .vertices
                .iter()
                .zip(&self.words)
                .enumerate()
                .map(|(id, (k, w))| VertexJson { id, key: k.clone(), word: w.clone() })
                .collect(),
            edges: self.graph.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        };
        serde_json::to_value(j).expect("window serializes")
    }

    pub fn from_json_str(s: &str, instance: &str) -> Result<Self, WindowError> {
        let j: WindowJson<K> = serde_json::from_str(s)?;
        if j.instance != instance {
            return Err(WindowError::Instance { expected: instance.into(), found: j.instance });
        }
        let n = j.vertices.len();
        let mut keys = Vec::with_capacity(n);
        let mut words = Vec::with_capacity(n);
        for (i, v) in j.vertices.into_iter().enumerate() {
            if v.id != i {
                return Err(WindowError::BadId(v.id));
            }
            keys.push(v.key);
            words.push(v.word);
        }
        let mut g = Graph::new(n);
        for [a, b] in j.edges {
            if a >= n || b >= n || a == b {
                return Err(WindowError::BadEdge(a, b));
            }
            g.add_edge(a, b);
        }
        Window::new(instance, j.basepoint, j.bound, keys, words, g)
    }
}

/// Graphviz rendering with vertex labels.
pub fn to_dot(name: &str, labels: &[String], g: &Graph) -> String {
    let mut s = format!("graph {name} {{\n");
    for (i, l) in labels.iter().enumerate() {
        s.push_str(&format!("  {i} [label=\"{}\"];\n", l.replace('"', "'")));
    }
    for (a, b) in g.edges() {
        s.push_str(&format!("  {a} -- {b};\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let w = Window::new("toy", 5u32, 2, vec![1u32, 5, 9], vec![None, Some("x".into()), None], g).unwrap();
        let s = serde_json::to_string(&w.to_json_value()).unwrap();
        let back: Window<u32> = Window::from_json_str(&s, "toy").unwrap();
        assert_eq!(back, w);
        assert!(Window::<u32>::from_json_str(&s, "other").is_err());
    }

    #[test]
    fn unsorted_keys_rejected() {
        let g = Graph::new(2);
        assert!(matches!(
            Window::new("toy", 1u32, 0, vec![2, 1], vec![None, None], g),
            Err(WindowError::Unsorted(1))
        ));
    }
}
