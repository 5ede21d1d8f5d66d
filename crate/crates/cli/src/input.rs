//! Reading graphs from names, strings, files and stdin.

use std::io::Read;

use gspkit::graph::{named_graph, parse_graph, parse_graph6};
use gspkit::{Error, GraphFormat, MultiGraph, Result};

#[derive(clap::Args, Debug, Clone, serde::Serialize)]
pub struct GraphInput {
    /// A built-in graph: petersen, dodecahedron, k4, k5, theta(n), bouquet(n),
    /// doubled_triangle, cycle(n), path(n), prism(n), wheel(n).
    #[arg(long)]
    pub named: Option<String>,

    /// A graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,

    /// A file holding one graph (`-` for stdin).
    #[arg(long)]
    pub graph: Option<String>,

    /// Format of `--graph`.
    #[arg(long, default_value = "graph6")]
    pub input_format: String,
}

impl GraphInput {
    pub fn is_given(&self) -> bool {
        self.named.is_some() || self.graph6.is_some() || self.graph.is_some()
    }

    /// A short label for reports.
    pub fn label(&self) -> String {
        if let Some(n) = &self.named {
            n.clone()
        } else if let Some(s) = &self.graph6 {
            s.clone()
        } else {
            self.graph.clone().unwrap_or_default()
        }
    }

    pub fn load(&self) -> Result<MultiGraph> {
        let given = [self.named.is_some(), self.graph6.is_some(), self.graph.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(Error::InvalidInput(
                "give exactly one of --named, --graph6, --graph".into(),
            ));
        }
        if let Some(n) = &self.named {
            return named_graph(n);
        }
        if let Some(s) = &self.graph6 {
            return parse_graph6(s);
        }
        let format: GraphFormat = self.input_format.parse()?;
        let path = self.graph.as_deref().unwrap_or("-");
        parse_graph(format, &read_source(path)?)
    }
}

/// Reads a file, or stdin for `-`.
pub fn read_source(path: &str) -> Result<String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("reading {path}: {e}")))?;
    }
    Ok(s)
}
