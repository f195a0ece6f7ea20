//! JSON interchange file for a coloured k-out graph.
//!
//! ```json
//! {"n": 3, "k": 1, "q": 3,
//!  "edges": [{"id": 0, "owner": 0, "target": 1, "colour": 2, "special": false}, ...]}
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::colouring::Colouring;
use crate::model::graph::MultiGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: usize,
    pub owner: usize,
    pub target: usize,
    pub colour: usize,
    pub special: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterchangeFile {
    pub n: usize,
    pub k: usize,
    pub q: usize,
    pub edges: Vec<EdgeRecord>,
    /// Free-form run metadata echoed by the CLI; ignored on read.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<serde_json::Value>,
}

impl InterchangeFile {
    pub fn new(g: &MultiGraph, c: &Colouring) -> Self {
        let edges = g
            .edges()
            .map(|e| EdgeRecord {
                id: e.id,
                owner: e.owner,
                target: e.target,
                colour: c.colour(e.id),
                special: c.is_special(e.id),
            })
            .collect();
        InterchangeFile { n: g.n(), k: g.k(), q: c.q(), edges, config: None }
    }

    /// Rebuilds the graph and colouring. Edges may be listed in any order but
    /// every id in `0..kn` must appear once with `owner = id / k`.
    pub fn decode(&self) -> Result<(MultiGraph, Colouring)> {
        let len = self.n * self.k;
        if self.edges.len() != len {
            return Err(Error::Malformed(format!("expected {len} edges, found {}", self.edges.len())));
        }
        let mut slots: Vec<Option<&EdgeRecord>> = vec![None; len];
        for rec in &self.edges {
            if rec.id >= len {
                return Err(Error::Malformed(format!("edge id {} out of range", rec.id)));
            }
            if rec.owner != rec.id / self.k {
                return Err(Error::Malformed(format!("edge {} must be owned by {}", rec.id, rec.id / self.k)));
            }
            if slots[rec.id].replace(rec).is_some() {
                return Err(Error::Malformed(format!("duplicate edge id {}", rec.id)));
            }
        }
        let recs: Vec<&EdgeRecord> = slots.into_iter().map(|r| r.unwrap()).collect();
        let g = MultiGraph::from_targets(self.n, self.k, recs.iter().map(|r| r.target).collect())?;
        let flags: Vec<(usize, bool)> = recs.iter().map(|r| (r.colour, r.special)).collect();
        let c = Colouring::from_flags(self.q, &flags)?;
        Ok((g, c))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }
}
