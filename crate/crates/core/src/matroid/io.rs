//! The matroid file format.
//!
//! ```json
//! {"name": "U36", "type": "uniform", "rank": 3, "size": 6}
//! {"type": "graphic", "edges": [["u", "v"], ["v", "w"]]}
//! {"type": "linear", "field": 2, "matrix": [[1, 0, 1], [0, 1, 1]]}
//! {"type": "circuits", "circuits": [["a", "b", "c"]], "elements": ["a", "b", "c", "d"]}
//! {"type": "direct_sum", "parts": [ ... ]}
//! ```
//!
//! Element labels are strings and ids are assigned in file order. `labels`
//! (or `elements` for circuit and basis families) may be given explicitly; it
//! is required to name coloops that appear in no circuit.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Matroid, Representation};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatroidFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Body {
    Graphic {
        edges: Vec<[String; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertices: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Uniform {
        rank: usize,
        size: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Linear {
        field: u8,
        matrix: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Circuits {
        circuits: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        elements: Option<Vec<String>>,
    },
    Bases {
        bases: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        elements: Option<Vec<String>>,
    },
    DirectSum {
        parts: Vec<MatroidFile>,
    },
}

fn family_labels(family: &[Vec<String>], explicit: Option<Vec<String>>) -> Vec<String> {
    let mut labels = explicit.unwrap_or_default();
    for set in family {
        for l in set {
            if !labels.contains(l) {
                labels.push(l.clone());
            }
        }
    }
    labels
}

fn family_sets(family: &[Vec<String>], labels: &[String]) -> Result<Vec<ElementSet>> {
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    family
        .iter()
        .map(|set| {
            set.iter()
                .map(|l| index.get(l.as_str()).copied().ok_or_else(|| Error::UnknownElement(l.clone())))
                .collect()
        })
        .collect()
}

impl MatroidFile {
    pub fn parse(text: &str) -> Result<Matroid> {
        let file: MatroidFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.into_matroid()
    }

    pub fn into_matroid(self) -> Result<Matroid> {
        let m = match self.body {
            Body::Graphic { edges, vertices, labels } => {
                let mut vs = vertices.unwrap_or_default();
                for [u, v] in &edges {
                    for x in [u, v] {
                        if !vs.contains(x) {
                            vs.push(x.clone());
                        }
                    }
                }
                let ids: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|[u, v]| {
                        let pos = |x: &String| vs.iter().position(|y| y == x).expect("vertex added above");
                        (pos(u), pos(v))
                    })
                    .collect();
                match labels {
                    Some(l) => Matroid::graphic_with_labels(vs, ids, l)?,
                    None => Matroid::graphic(vs, ids)?,
                }
            }
            Body::Uniform { rank, size, labels } => {
                let labels = labels.unwrap_or_else(|| (0..size).map(|i| i.to_string()).collect());
                if labels.len() != size {
                    return Err(Error::InvalidMatroid(format!(
                        "uniform matroid of size {size} given {} labels",
                        labels.len()
                    )));
                }
                Matroid::uniform_with_labels(rank, labels)?
            }
            Body::Linear { field, matrix, labels } => {
                let cols = matrix.first().map_or(0, Vec::len);
                let labels = labels.unwrap_or_else(|| (0..cols).map(|i| i.to_string()).collect());
                Matroid::linear_with_labels(field, matrix, labels)?
            }
            Body::Circuits { circuits, elements } => {
                let labels = family_labels(&circuits, elements);
                let sets = family_sets(&circuits, &labels)?;
                Matroid::from_circuits_with_labels(labels, sets)?
            }
            Body::Bases { bases, elements } => {
                let labels = family_labels(&bases, elements);
                let sets = family_sets(&bases, &labels)?;
                Matroid::from_bases_with_labels(labels, sets)?
            }
            Body::DirectSum { parts } => {
                let parts = parts.into_iter().map(MatroidFile::into_matroid).collect::<Result<Vec<_>>>()?;
                Matroid::direct_sum(parts)?
            }
        };
        Ok(match self.name {
            Some(n) => m.with_name(n),
            None => m,
        })
    }

    pub fn from_matroid(m: &Matroid) -> Self {
        let labels = m.labels().to_vec();
        let family = |sets: &[ElementSet]| -> Vec<Vec<String>> { sets.iter().map(|s| m.set_labels(*s)).collect() };
        let body = match m.representation() {
            Representation::Graphic { vertices, edges } => Body::Graphic {
                edges: edges
                    .iter()
                    .map(|&(u, v)| [vertices[u].clone(), vertices[v].clone()])
                    .collect(),
                vertices: Some(vertices.clone()),
                labels: Some(labels),
            },
            Representation::Uniform { rank, size } => Body::Uniform {
                rank: *rank,
                size: *size,
                labels: Some(labels),
            },
            Representation::Linear { field, rows } => Body::Linear {
                field: *field,
                matrix: rows
                    .iter()
                    .map(|r| r.iter().map(|&x| i64::from(x)).collect())
                    .collect(),
                labels: Some(labels),
            },
            Representation::Circuits(c) => Body::Circuits {
                circuits: family(c),
                elements: Some(labels),
            },
            Representation::Bases(b) => Body::Bases {
                bases: family(b),
                elements: Some(labels),
            },
            Representation::DirectSum(parts) => Body::DirectSum {
                parts: parts.iter().map(MatroidFile::from_matroid).collect(),
            },
        };
        MatroidFile {
            name: m.name().map(str::to_string),
            body,
        }
    }
}

impl Matroid {
    pub fn from_json(text: &str) -> Result<Matroid> {
        MatroidFile::parse(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&MatroidFile::from_matroid(self)).expect("matroid files always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_type() {
        let u = Matroid::from_json(r#"{"name":"U36","type":"uniform","rank":3,"size":6}"#).unwrap();
        assert_eq!((u.size(), u.full_rank(), u.name()), (6, 3, Some("U36")));

        let g = Matroid::from_json(r#"{"type":"graphic","edges":[["u","v"],["v","w"]]}"#).unwrap();
        assert_eq!(g.labels(), ["u-v", "v-w"]);
        assert_eq!(g.full_rank(), 2);

        let l = Matroid::from_json(r#"{"type":"linear","field":2,"matrix":[[1,0,1],[0,1,1]]}"#).unwrap();
        assert_eq!(l.full_rank(), 2);

        let c = Matroid::from_json(
            r#"{"type":"circuits","circuits":[["a","b","c"]],"elements":["a","b","c","d"]}"#,
        )
        .unwrap();
        assert_eq!(c.size(), 4);
        assert_eq!(c.full_rank(), 3);

        let b = Matroid::from_json(r#"{"type":"bases","bases":[["x"],["y"]]}"#).unwrap();
        assert_eq!(b.full_rank(), 1);

        let d = Matroid::from_json(
            r#"{"type":"direct_sum","parts":[{"type":"uniform","rank":1,"size":1},{"type":"uniform","rank":2,"size":3}]}"#,
        )
        .unwrap();
        assert_eq!(d.full_rank(), 3);
    }

    #[test]
    fn reports_parse_positions_and_bad_labels() {
        let err = Matroid::from_json("{\"type\": \"uniform\",\n \"rank\": }").unwrap_err();
        assert!(matches!(&err, Error::Parse(msg) if msg.contains("line 2")), "{err}");
        let err = Matroid::from_json(r#"{"type":"circuits","circuits":[["a"]],"elements":["a","a"]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidMatroid(_)));
        let err = Matroid::from_json(r#"{"type":"uniform","rank":1,"size":2,"labels":["a"]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidMatroid(_)));
    }

    #[test]
    fn round_trip_preserves_the_object() {
        let texts = [
            r#"{"name":"p","type":"graphic","edges":[["a","b"],["a","b"],["b","b"]]}"#,
            r#"{"type":"linear","field":3,"matrix":[[1,0,1,1],[0,1,1,-1]]}"#,
            r#"{"type":"bases","bases":[["a","b"],["a","c"],["b","c"]]}"#,
            r#"{"type":"direct_sum","parts":[{"type":"uniform","rank":1,"size":2},{"type":"uniform","rank":1,"size":2}]}"#,
        ];
        for t in texts {
            let m = Matroid::from_json(t).unwrap();
            let again = Matroid::from_json(&m.to_json()).unwrap();
            assert_eq!(m, again, "{t}");
        }
    }
}
