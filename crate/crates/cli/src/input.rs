use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use ntcover::geometry::{intersection_graph, ShapeSet};
use ntcover::graph::WeightedGraph;
use ntcover::io::{
    detect_format, parse_graph_with, parse_instance, parse_shapes, GraphReadOptions, Instance,
    InstanceFormat,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Decide from the `p` header line.
    Auto,
    Graph,
    Shapes,
}

/// An instance as a graph, keeping the shapes it was built from.
pub struct Loaded {
    pub graph: WeightedGraph,
    pub shapes: Option<(ShapeSet, Vec<usize>)>,
}

pub fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

pub fn load(path: &Path, format: Format, weight_scale: Option<u64>) -> Result<Loaded> {
    let text = read_text(path)?;
    let opts = GraphReadOptions { weight_scale };
    let instance = match format {
        Format::Graph => parse_graph_with(&text, opts).map(Instance::Graph),
        Format::Shapes => parse_shapes(&text).map(Instance::Shapes),
        Format::Auto => match detect_format(&text) {
            Some(InstanceFormat::Graph) => parse_graph_with(&text, opts).map(Instance::Graph),
            _ => parse_instance(&text),
        },
    }
    .with_context(|| path.display().to_string())?;
    Ok(match instance {
        Instance::Graph(graph) => Loaded {
            graph,
            shapes: None,
        },
        Instance::Shapes(set) => {
            let (graph, map) = intersection_graph(&set)?;
            Loaded {
                graph,
                shapes: Some((set, map)),
            }
        }
    })
}
