//! Coloring files: `{"graph": <spec>, "colors": "RRB..."}`.
//!
//! Colors are listed in canonical edge order. Readers also accept
//! `"colors": [0, 1, ...]` with 0 = red and 1 = blue; writers always emit
//! the string form.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::colorings::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graphs::{Graph, GraphSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ColorList {
    Text(String),
    Bits(Vec<u8>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub graph: GraphSpec,
    pub colors: ColorList,
}

impl ColoringFile {
    pub fn new(g: &Graph, c: &EdgeColoring) -> Self {
        ColoringFile { graph: g.spec().clone(), colors: ColorList::Text(c.to_string()) }
    }

    pub fn load(&self) -> Result<(Graph, EdgeColoring)> {
        let g = self.graph.build()?;
        let colors = match &self.colors {
            ColorList::Text(s) => parse_colors(s)?,
            ColorList::Bits(bits) => {
                bits.iter().map(|&b| Color::try_from(b).map_err(Error::Parse)).collect::<Result<_>>()?
            }
        };
        let c = EdgeColoring::new(&g, colors)?;
        Ok((g, c))
    }
}

/// Parses an `R`/`B` string (whitespace ignored).
pub fn parse_colors(s: &str) -> Result<Vec<Color>> {
    s.chars()
        .filter(|ch| !ch.is_whitespace())
        .map(|ch| Color::from_char(ch).ok_or_else(|| Error::Parse(format!("bad color character {ch:?}"))))
        .collect()
}

pub fn coloring_from_str(g: &Graph, s: &str) -> Result<EdgeColoring> {
    EdgeColoring::new(g, parse_colors(s)?)
}

pub fn to_json_string(g: &Graph, c: &EdgeColoring) -> String {
    let mut s = serde_json::to_string_pretty(&ColoringFile::new(g, c)).expect("plain data");
    s.push('\n');
    s
}

pub fn from_json_str(s: &str) -> Result<(Graph, EdgeColoring)> {
    let file: ColoringFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    file.load()
}

pub fn read_coloring(path: impl AsRef<Path>) -> Result<(Graph, EdgeColoring)> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_json_str(&text)
}

pub fn write_coloring(path: impl AsRef<Path>, g: &Graph, c: &EdgeColoring) -> Result<()> {
    write_text(path, &to_json_string(g, c))
}

pub fn write_text(path: impl AsRef<Path>, text: &str) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
