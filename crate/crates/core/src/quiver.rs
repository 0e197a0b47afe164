//! Quiver presentations, double quivers and vertex gluing.
//!
//! Vertices are positive integer labels. Arrow order is list order and is
//! significant: it fixes the ordering used by the quiver bivector and the
//! moment map product.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(Vertex),
    #[error("arrow `{arrow}` references unknown vertex {vertex}")]
    DanglingVertex { arrow: String, vertex: Vertex },
    #[error("arrow name `{0}` is reserved or not an identifier")]
    ReservedName(String),
    #[error("vertex labels must be positive, got {0}")]
    NonPositiveVertex(Vertex),
    #[error("order is not a permutation of the arrows: {0}")]
    BadOrder(String),
    #[error("vertex {0} is not present")]
    MissingVertex(Vertex),
    #[error("cannot glue vertex {0} to itself")]
    SameVertex(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub tail: Vertex,
    pub head: Vertex,
}

/// A finite quiver with an ordered arrow list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuiverPresentation {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
}

fn valid_arrow_name(name: &str) -> bool {
    let mut chars = name.chars();
    let first_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic());
    first_ok
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !name.starts_with("e_")
        && !name.starts_with("g_")
        && name != "d"
        && name != "D"
        && name != "E"
}

impl QuiverPresentation {
    pub fn new(vertices: Vec<Vertex>, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if v == 0 {
                return Err(QuiverError::NonPositiveVertex(v));
            }
            if !seen.insert(v) {
                return Err(QuiverError::DuplicateVertex(v));
            }
        }
        let mut names = BTreeSet::new();
        for a in &arrows {
            if !valid_arrow_name(&a.name) {
                return Err(QuiverError::ReservedName(a.name.clone()));
            }
            if !names.insert(a.name.clone()) {
                return Err(QuiverError::DuplicateArrow(a.name.clone()));
            }
            for v in [a.tail, a.head] {
                if !seen.contains(&v) {
                    return Err(QuiverError::DanglingVertex {
                        arrow: a.name.clone(),
                        vertex: v,
                    });
                }
            }
        }
        let mut vertices = vertices;
        vertices.sort_unstable();
        Ok(Self { vertices, arrows })
    }

    /// The quiver with one arrow `a: 1 -> 2`.
    pub fn basic() -> Self {
        Self::new(
            vec![1, 2],
            vec![Arrow {
                name: "a".into(),
                tail: 1,
                head: 2,
            }],
        )
        .expect("basic quiver is valid")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn double(&self) -> DoubleQuiver {
        DoubleQuiver::new(self.clone())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverDoc {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    #[serde(default)]
    order: Option<Vec<String>>,
}

#[derive(Serialize)]
struct QuiverDocOut<'a> {
    vertices: &'a [Vertex],
    arrows: &'a [Arrow],
}

/// Parses a quiver description document.
pub fn parse_quiver(text: &str) -> Result<QuiverPresentation, QuiverError> {
    let doc: QuiverDoc = serde_json::from_str(text).map_err(|e| QuiverError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut arrows = doc.arrows;
    if let Some(order) = doc.order {
        let mut by_name: BTreeMap<String, Arrow> = BTreeMap::new();
        for a in arrows {
            let name = a.name.clone();
            if by_name.insert(name.clone(), a).is_some() {
                return Err(QuiverError::DuplicateArrow(name));
            }
        }
        let mut ordered = Vec::with_capacity(order.len());
        for name in &order {
            match by_name.remove(name) {
                Some(a) => ordered.push(a),
                None => return Err(QuiverError::BadOrder(name.clone())),
            }
        }
        if let Some((name, _)) = by_name.into_iter().next() {
            return Err(QuiverError::BadOrder(format!("arrow `{name}` missing from order")));
        }
        arrows = ordered;
    }
    QuiverPresentation::new(doc.vertices, arrows)
}

/// Serializes a quiver; arrows are written in their order so no `order` key is needed.
pub fn serialize_quiver(q: &QuiverPresentation) -> String {
    serde_json::to_string_pretty(&QuiverDocOut {
        vertices: &q.vertices,
        arrows: &q.arrows,
    })
    .expect("quiver serialization cannot fail")
        + "\n"
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleArrow {
    pub name: String,
    pub tail: Vertex,
    pub head: Vertex,
    /// +1 for original arrows, -1 for reversed ones.
    pub sign: i8,
}

/// The double of a quiver. Arrow `2k` is the k-th original arrow and `2k+1`
/// its reverse, so `star(i) = i ^ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleQuiver {
    base: QuiverPresentation,
    arrows: Vec<DoubleArrow>,
}

impl DoubleQuiver {
    fn new(base: QuiverPresentation) -> Self {
        let mut arrows = Vec::with_capacity(2 * base.arrows.len());
        for a in &base.arrows {
            arrows.push(DoubleArrow {
                name: a.name.clone(),
                tail: a.tail,
                head: a.head,
                sign: 1,
            });
            arrows.push(DoubleArrow {
                name: format!("{}*", a.name),
                tail: a.head,
                head: a.tail,
                sign: -1,
            });
        }
        Self { base, arrows }
    }

    pub fn base(&self) -> &QuiverPresentation {
        &self.base
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.base.vertices
    }

    pub fn arrows(&self) -> &[DoubleArrow] {
        &self.arrows
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn tail(&self, i: usize) -> Vertex {
        self.arrows[i].tail
    }

    pub fn head(&self, i: usize) -> Vertex {
        self.arrows[i].head
    }

    pub fn name(&self, i: usize) -> &str {
        &self.arrows[i].name
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.arrows[i].sign
    }

    pub fn star(i: usize) -> usize {
        i ^ 1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_position(&self, v: Vertex) -> Option<usize> {
        self.base.vertices.binary_search(&v).ok()
    }
}

/// Result of gluing two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexGluing {
    pub source: QuiverPresentation,
    pub glued: QuiverPresentation,
    pub vertex_map: BTreeMap<Vertex, Vertex>,
    /// The two glued source vertices, in the order given by the caller.
    pub pair: (Vertex, Vertex),
}

impl VertexGluing {
    pub fn map(&self, v: Vertex) -> Vertex {
        self.vertex_map[&v]
    }

    pub fn glued_vertex(&self) -> Vertex {
        self.pair.0.min(self.pair.1)
    }
}

/// Glues `v` and `w`; the glued vertex keeps the smaller label.
pub fn fuse_vertices(
    q: &QuiverPresentation,
    v: Vertex,
    w: Vertex,
) -> Result<VertexGluing, QuiverError> {
    if v == w {
        return Err(QuiverError::SameVertex(v));
    }
    for x in [v, w] {
        if !q.has_vertex(x) {
            return Err(QuiverError::MissingVertex(x));
        }
    }
    let keep = v.min(w);
    let drop = v.max(w);
    let vertex_map: BTreeMap<Vertex, Vertex> = q
        .vertices
        .iter()
        .map(|&x| (x, if x == drop { keep } else { x }))
        .collect();
    let vertices = q.vertices.iter().copied().filter(|&x| x != drop).collect();
    let arrows = q
        .arrows
        .iter()
        .map(|a| Arrow {
            name: a.name.clone(),
            tail: vertex_map[&a.tail],
            head: vertex_map[&a.head],
        })
        .collect();
    let glued = QuiverPresentation::new(vertices, arrows)?;
    Ok(VertexGluing {
        source: q.clone(),
        glued,
        vertex_map,
        pair: (v, w),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(name: &str, tail: Vertex, head: Vertex) -> Arrow {
        Arrow {
            name: name.into(),
            tail,
            head,
        }
    }

    #[test]
    fn double_of_one_arrow() {
        let d = QuiverPresentation::basic().double();
        assert_eq!(d.num_arrows(), 2);
        assert_eq!((d.name(0), d.tail(0), d.head(0), d.sign(0)), ("a", 1, 2, 1));
        assert_eq!((d.name(1), d.tail(1), d.head(1), d.sign(1)), ("a*", 2, 1, -1));
    }

    #[test]
    fn double_of_empty_and_loop() {
        let empty = QuiverPresentation::new(vec![], vec![]).unwrap().double();
        assert_eq!(empty.num_arrows(), 0);
        let lp = QuiverPresentation::new(vec![1], vec![arrow("b", 1, 1)])
            .unwrap()
            .double();
        assert_eq!((lp.tail(1), lp.head(1), lp.sign(1)), (1, 1, -1));
        assert_eq!(lp.name(1), "b*");
    }

    #[test]
    fn involution_and_sign_laws() {
        let q = QuiverPresentation::new(
            vec![1, 2, 3],
            vec![arrow("a", 1, 2), arrow("b", 2, 3), arrow("c", 3, 3)],
        )
        .unwrap();
        let d = q.double();
        for i in 0..d.num_arrows() {
            let s = DoubleQuiver::star(i);
            assert_eq!(DoubleQuiver::star(s), i);
            assert_eq!(d.sign(s), -d.sign(i));
            assert_eq!(d.head(s), d.tail(i));
            assert_eq!(d.tail(s), d.head(i));
        }
    }

    #[test]
    fn fusion_relabels() {
        let g = fuse_vertices(&QuiverPresentation::basic(), 1, 2).unwrap();
        assert_eq!(g.glued.vertices(), &[1]);
        assert_eq!(g.glued.arrows(), &[arrow("a", 1, 1)]);

        let q = QuiverPresentation::new(vec![1, 2, 3], vec![arrow("a", 1, 2), arrow("b", 2, 3)])
            .unwrap();
        let g = fuse_vertices(&q, 2, 3).unwrap();
        assert_eq!(g.glued.vertices(), &[1, 2]);
        assert_eq!(g.glued.arrows(), &[arrow("a", 1, 2), arrow("b", 2, 2)]);
        assert_eq!(
            fuse_vertices(&q, 1, 1).unwrap_err(),
            QuiverError::SameVertex(1)
        );
        assert_eq!(
            fuse_vertices(&q, 1, 7).unwrap_err(),
            QuiverError::MissingVertex(7)
        );
    }

    #[test]
    fn parse_examples() {
        let q = parse_quiver(r#"{"vertices":[1,2],"arrows":[{"name":"a","tail":1,"head":2}]}"#)
            .unwrap();
        assert_eq!(q, QuiverPresentation::basic());

        match parse_quiver("{\"vertices\": [1,2],\n \"arrows\": [ oops ]}") {
            Err(QuiverError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        let dup = r#"{"vertices":[1],"arrows":[{"name":"a","tail":1,"head":1},{"name":"a","tail":1,"head":1}]}"#;
        assert_eq!(
            parse_quiver(dup).unwrap_err(),
            QuiverError::DuplicateArrow("a".into())
        );
        let dangling = r#"{"vertices":[1],"arrows":[{"name":"a","tail":1,"head":4}]}"#;
        assert!(matches!(
            parse_quiver(dangling),
            Err(QuiverError::DanglingVertex { vertex: 4, .. })
        ));
        let starred = r#"{"vertices":[1],"arrows":[{"name":"a*","tail":1,"head":1}]}"#;
        assert!(matches!(parse_quiver(starred), Err(QuiverError::ReservedName(_))));
    }

    #[test]
    fn order_key_reorders() {
        let text = r#"{"vertices":[1,2],"arrows":[{"name":"a","tail":1,"head":2},{"name":"b","tail":2,"head":1}],"order":["b","a"]}"#;
        let q = parse_quiver(text).unwrap();
        assert_eq!(q.arrows()[0].name, "b");
        let bad = r#"{"vertices":[1,2],"arrows":[{"name":"a","tail":1,"head":2}],"order":["z"]}"#;
        assert!(matches!(parse_quiver(bad), Err(QuiverError::BadOrder(_))));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn quiver_strategy() -> impl Strategy<Value = QuiverPresentation> {
            (1u32..5).prop_flat_map(|n| {
                proptest::collection::vec((1..=n, 1..=n), 0..6).prop_map(move |ends| {
                    let arrows = ends
                        .into_iter()
                        .enumerate()
                        .map(|(i, (t, h))| arrow(&format!("x{i}"), t, h))
                        .collect();
                    QuiverPresentation::new((1..=n).collect(), arrows).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn parse_serialize_roundtrip(q in quiver_strategy()) {
                let text = serialize_quiver(&q);
                prop_assert_eq!(parse_quiver(&text).unwrap(), q);
            }

            #[test]
            fn fusion_counts(q in quiver_strategy()) {
                if q.vertices().len() >= 2 {
                    let (v, w) = (q.vertices()[0], q.vertices()[q.vertices().len() - 1]);
                    let g = fuse_vertices(&q, w, v).unwrap();
                    prop_assert_eq!(g.glued.vertices().len(), q.vertices().len() - 1);
                    prop_assert_eq!(g.glued.arrows().len(), q.arrows().len());
                    for (a, b) in q.arrows().iter().zip(g.glued.arrows()) {
                        prop_assert_eq!(&a.name, &b.name);
                    }
                }
            }
        }
    }
}
