//! Finite quivers with labeled vertices and arrow multiplicities.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite quiver without loops or 2-cycles. Vertices are kept sorted by
/// label; arrows are kept sorted by `(src, dst)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledQuiver<L> {
    vertices: Vec<L>,
    arrows: BTreeMap<(usize, usize), u32>,
}

impl<L: Ord + Clone> LabeledQuiver<L> {
    /// Builds a quiver from labels and `(src, dst, mult)` arrows given by
    /// label. Zero multiplicities are dropped; repeated arrows add up.
    pub fn new(labels: impl IntoIterator<Item = L>, arrows: impl IntoIterator<Item = (L, L, u32)>) -> Result<Self>
    where
        L: fmt::Debug,
    {
        let vertices: Vec<L> = labels.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let mut q = LabeledQuiver {
            vertices,
            arrows: BTreeMap::new(),
        };
        for (s, t, m) in arrows {
            if m == 0 {
                continue;
            }
            let a = q
                .index_of(&s)
                .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {s:?}")))?;
            let b = q
                .index_of(&t)
                .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {t:?}")))?;
            if a == b {
                return Err(Error::InvalidQuiver(format!("loop at {s:?}")));
            }
            *q.arrows.entry((a, b)).or_insert(0) += m;
        }
        if let Some(&(a, b)) = q.arrows.keys().find(|&&(a, b)| q.arrows.contains_key(&(b, a))) {
            return Err(Error::InvalidQuiver(format!(
                "2-cycle between {:?} and {:?}",
                q.vertices[a], q.vertices[b]
            )));
        }
        Ok(q)
    }

    pub fn vertices(&self) -> &[L] {
        &self.vertices
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.vertices.binary_search(label).ok()
    }

    /// `(src, dst, mult)` by vertex index.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.arrows.iter().map(|(&(a, b), &m)| (a, b, m))
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn multiplicity(&self, src: &L, dst: &L) -> u32 {
        match (self.index_of(src), self.index_of(dst)) {
            (Some(a), Some(b)) => self.arrows.get(&(a, b)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// Arrows as label triples, in index order.
    pub fn labeled_arrows(&self) -> Vec<(L, L, u32)> {
        self.arrows()
            .map(|(a, b, m)| (self.vertices[a].clone(), self.vertices[b].clone(), m))
            .collect()
    }

    /// Relabels every vertex; fails if `f` is not injective.
    pub fn map_labels<M: Ord + Clone + fmt::Debug>(&self, f: impl Fn(&L) -> M) -> Result<LabeledQuiver<M>> {
        let labels: Vec<M> = self.vertices.iter().map(&f).collect();
        if labels.iter().collect::<BTreeSet<_>>().len() != labels.len() {
            return Err(Error::InvalidQuiver("relabeling is not injective".into()));
        }
        let arrows: Vec<_> = self
            .arrows()
            .map(|(a, b, m)| (labels[a].clone(), labels[b].clone(), m))
            .collect();
        LabeledQuiver::new(labels, arrows)
    }

    pub fn to_doc(&self, label: impl Fn(&L) -> String) -> QuiverDoc {
        QuiverDoc {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, l)| DocVertex { id, label: label(l) })
                .collect(),
            arrows: self
                .arrows()
                .map(|(src, dst, mult)| DocArrow { src, dst, mult })
                .collect(),
        }
    }
}

/// Serialized form of a `LabeledQuiver`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<DocVertex>,
    pub arrows: Vec<DocArrow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocVertex {
    pub id: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocArrow {
    pub src: usize,
    pub dst: usize,
    pub mult: u32,
}

impl QuiverDoc {
    /// Rebuilds a quiver labeled by the label strings.
    pub fn to_quiver(&self) -> Result<LabeledQuiver<String>> {
        let label = |id: usize| {
            self.vertices
                .iter()
                .find(|v| v.id == id)
                .map(|v| v.label.clone())
                .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex id {id}")))
        };
        let arrows = self
            .arrows
            .iter()
            .map(|a| Ok((label(a.src)?, label(a.dst)?, a.mult)))
            .collect::<Result<Vec<_>>>()?;
        LabeledQuiver::new(self.vertices.iter().map(|v| v.label.clone()), arrows)
    }

    /// DOT digraph; an arrow of multiplicity `d` becomes `d` parallel edges.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        for v in &self.vertices {
            let _ = writeln!(out, "  v{} [label=\"{}\"];", v.id, v.label.replace('"', "\\\""));
        }
        for a in &self.arrows {
            for _ in 0..a.mult {
                let _ = writeln!(out, "  v{} -> v{};", a.src, a.dst);
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_two_cycles() {
        assert!(LabeledQuiver::new([1, 2], [(1, 1, 1)]).is_err());
        assert!(LabeledQuiver::new([1, 2], [(1, 2, 1), (2, 1, 1)]).is_err());
        assert!(LabeledQuiver::new([1, 2], [(1, 3, 1)]).is_err());
        let q = LabeledQuiver::new([2, 1], [(1, 2, 2), (2, 1, 0)]).unwrap();
        assert_eq!(q.vertices(), &[1, 2]);
        assert_eq!(q.multiplicity(&1, &2), 2);
        assert_eq!(q.multiplicity(&2, &1), 0);
    }

    #[test]
    fn doc_round_trip_and_dot() {
        let q = LabeledQuiver::new(["a", "b", "c"], [("a", "b", 2), ("c", "b", 1)]).unwrap();
        let doc = q.to_doc(|l| l.to_string());
        let json = serde_json::to_string(&doc).unwrap();
        let back: QuiverDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_quiver().unwrap(), q.map_labels(|l| l.to_string()).unwrap());
        let dot = doc.to_dot("Q");
        assert_eq!(dot.matches("v0 -> v1").count(), 2);
        assert_eq!(dot.matches("->").count(), 3);
    }
}
