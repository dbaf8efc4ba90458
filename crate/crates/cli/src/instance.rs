//! The JSON documents the CLI reads: problem instances, packings, and
//! family pairs for the uncrossing trace command.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use arbopack_core::graph::{MixedGraph, RootBounds, VertexSet};
use arbopack_core::pack::{Packing, Tree};
use arbopack_core::pieo::SetFamily;
use serde::Deserialize;

/// A problem with an input file; always maps to the usage exit code.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| InputError(format!("cannot parse {}: {e}", path.display())))
}

/// A packing instance: a mixed graph plus `k` and optional root bounds.
/// Repeated pairs are parallel elements; `f` defaults to 0 and `g` to `k`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
    #[serde(default)]
    pub arcs: Vec<(String, String)>,
    pub k: u64,
    #[serde(default)]
    pub f: BTreeMap<String, u64>,
    #[serde(default)]
    pub g: BTreeMap<String, u64>,
}

impl InstanceDocument {
    pub fn load(path: &Path) -> Result<InstanceDocument, InputError> {
        read_json(path)
    }

    pub fn build(&self) -> Result<(MixedGraph, RootBounds), InputError> {
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|(u, v)| (u.as_str(), v.as_str()))
            .collect();
        let arcs: Vec<(&str, &str)> = self
            .arcs
            .iter()
            .map(|(u, v)| (u.as_str(), v.as_str()))
            .collect();
        let graph = MixedGraph::new(&vertices, &edges, &arcs)
            .map_err(|e| InputError(format!("invalid graph: {e}")))?;
        if self.k == 0 {
            return Err(InputError("k must be positive".to_string()));
        }
        let mut f = vec![0u64; graph.vertex_count()];
        let mut g = vec![self.k; graph.vertex_count()];
        for (name, &value) in &self.f {
            let v = graph
                .vertex_index(name)
                .ok_or_else(|| InputError(format!("unknown vertex `{name}` in f")))?;
            f[v] = value;
        }
        for (name, &value) in &self.g {
            let v = graph
                .vertex_index(name)
                .ok_or_else(|| InputError(format!("unknown vertex `{name}` in g")))?;
            g[v] = value;
        }
        for v in 0..graph.vertex_count() {
            if f[v] > g[v] {
                return Err(InputError(format!(
                    "f({name}) = {} exceeds g({name}) = {}",
                    f[v],
                    g[v],
                    name = graph.vertex_name(v)
                )));
            }
        }
        let bounds = RootBounds::new(self.k, f, g)
            .map_err(|e| InputError(format!("invalid root bounds: {e}")))?;
        Ok((graph, bounds))
    }
}

#[derive(Debug, Deserialize)]
struct TreeDocument {
    root: String,
    #[serde(default)]
    edges: Vec<usize>,
    #[serde(default)]
    arcs: Vec<usize>,
}

/// A packing as emitted by `solve`: per tree, the root name plus stable
/// element indices into the instance. Unknown extra fields (for example an
/// attached trace) are ignored.
#[derive(Debug, Deserialize)]
pub struct PackingDocument {
    trees: Vec<TreeDocument>,
}

impl PackingDocument {
    pub fn load(path: &Path) -> Result<PackingDocument, InputError> {
        read_json(path)
    }

    pub fn build(&self, graph: &MixedGraph) -> Result<Packing, InputError> {
        let trees = self
            .trees
            .iter()
            .map(|t| {
                let root = graph
                    .vertex_index(&t.root)
                    .ok_or_else(|| InputError(format!("unknown root vertex `{}`", t.root)))?;
                Ok(Tree {
                    root,
                    edges: t.edges.clone(),
                    arcs: t.arcs.clone(),
                })
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        Ok(Packing { trees })
    }
}

/// Input for `pieo-trace`: a ground set and two families of disjoint
/// subsets of it.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieoDocument {
    pub ground: Vec<String>,
    pub f1: Vec<Vec<String>>,
    pub f2: Vec<Vec<String>>,
}

impl PieoDocument {
    pub fn load(path: &Path) -> Result<PieoDocument, InputError> {
        read_json(path)
    }

    /// Resolves both families against the ground set.
    pub fn build(&self) -> Result<(Vec<String>, SetFamily, SetFamily), InputError> {
        if self.ground.is_empty() {
            return Err(InputError("ground set must be nonempty".to_string()));
        }
        if self.ground.len() > 64 {
            return Err(InputError(format!(
                "{} ground elements exceed the supported maximum of 64",
                self.ground.len()
            )));
        }
        let mut index = BTreeMap::new();
        for (i, name) in self.ground.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(InputError(format!("duplicate ground element `{name}`")));
            }
        }
        let to_family = |sets: &[Vec<String>]| -> Result<SetFamily, InputError> {
            let members = sets
                .iter()
                .map(|set| {
                    let mut out = VertexSet::EMPTY;
                    for name in set {
                        let &i = index
                            .get(name.as_str())
                            .ok_or_else(|| InputError(format!("unknown element `{name}`")))?;
                        out.insert(i);
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>, InputError>>()?;
            SetFamily::new(members).map_err(|e| InputError(format!("invalid family: {e}")))
        };
        Ok((self.ground.clone(), to_family(&self.f1)?, to_family(&self.f2)?))
    }
}
