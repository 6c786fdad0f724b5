//! Instance and result file formats.
//!
//! Instances are TOML documents:
//!
//! ```toml
//! name = "k4"                 # optional
//! vertices = 4
//! edges = [[0, 1, 1], [0, 2, 1], [0, 3, 1], [1, 2, 1], [1, 3, 1], [2, 3, 1]]
//! A = [0, 1]
//! B = [2, 3]                  # optional, defaults to empty
//! rotation = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]   # optional
//! seed = 7                    # optional
//! ```
//!
//! Results are JSON; counts are decimal strings.

use dpaths_graph::{Edge, Graph, Instance, PlanarEmbedding};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: usize,
    pub edges: Vec<[u64; 3]>,
    #[serde(rename = "A", default)]
    pub a: Vec<usize>,
    #[serde(rename = "B", default)]
    pub b: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn emit(&self) -> String {
        toml::to_string(self).expect("instance files always serialize")
    }

    pub fn graph(&self) -> Result<Graph, CliError> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, &[u, v, len]) in self.edges.iter().enumerate() {
            for x in [u, v] {
                if x as usize >= self.vertices {
                    return Err(CliError::Parse(format!(
                        "edges[{i}]: vertex {x} is not below vertices = {}",
                        self.vertices
                    )));
                }
            }
            edges.push(Edge::new(u as usize, v as usize, len));
        }
        Graph::new(self.vertices, edges).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn instance(&self) -> Result<Instance, CliError> {
        for (field, list) in [("A", &self.a), ("B", &self.b)] {
            if let Some((i, &v)) = list.iter().enumerate().find(|(_, &v)| v >= self.vertices) {
                return Err(CliError::Parse(format!(
                    "{field}[{i}]: vertex {v} is not below vertices = {}",
                    self.vertices
                )));
            }
        }
        Ok(Instance::new(self.graph()?, self.a.clone(), self.b.clone()))
    }

    pub fn embedding(&self) -> Result<Option<PlanarEmbedding>, CliError> {
        let Some(rotation) = &self.rotation else {
            return Ok(None);
        };
        if rotation.len() != self.vertices {
            return Err(CliError::Parse(format!(
                "rotation: {} entries for {} vertices",
                rotation.len(),
                self.vertices
            )));
        }
        Ok(Some(PlanarEmbedding {
            rotation: rotation.clone(),
        }))
    }

    pub fn from_instance(instance: &Instance, name: Option<String>, seed: Option<u64>) -> Self {
        InstanceFile {
            name,
            vertices: instance.graph.vertex_count(),
            edges: instance
                .graph
                .edges()
                .iter()
                .map(|e| [e.u as u64, e.v as u64, e.length])
                .collect(),
            a: instance.a.clone(),
            b: instance.b.clone(),
            rotation: None,
            seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LengthField {
    Finite(u64),
    Word(String),
}

impl LengthField {
    pub fn from_option(length: Option<u64>) -> Self {
        length.map_or_else(
            || LengthField::Word("infeasible".into()),
            LengthField::Finite,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentPoly {
    pub lambda: u64,
    pub terminals: usize,
    pub length_offset: i64,
    /// Coefficients in increasing degree.
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub engine: String,
    pub max_work: f64,
}

/// Fields that vary between runs and are ignored when comparing results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    pub threads: usize,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub command: String,
    pub length: LengthField,
    pub count: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<[usize; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<ComponentPoly>>,
    pub config: ConfigEcho,
    pub run: RunInfo,
}

impl ResultFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("results always serialize")
    }

    /// JSON text without the run section.
    pub fn stable_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("results always serialize");
        value.as_object_mut().expect("object").remove("run");
        serde_json::to_string_pretty(&value).expect("values always serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MisResult {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub alpha: usize,
    pub count: String,
    pub method: String,
}
