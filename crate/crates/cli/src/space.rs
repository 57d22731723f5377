use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use ltm_core::orbit_space::{self, FacePoset};

use crate::error::CliError;

/// An orbit space named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Space {
    Polygon(usize),
    /// A disk with `m >= 2` boundary vertices; the 2-gon is allowed here.
    Disk(usize),
    Simplex(usize),
    Prism,
    File(PathBuf),
}

impl FromStr for Space {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let number = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| format!("expected a number after ':', got {v:?}"))
        };
        match s.split_once(':') {
            None if s == "prism" => Ok(Space::Prism),
            Some(("polygon", v)) => number(v).map(Space::Polygon),
            Some(("disk", v)) => number(v).map(Space::Disk),
            Some(("simplex", v)) => number(v).map(Space::Simplex),
            Some(("file", v)) if !v.is_empty() => Ok(Space::File(PathBuf::from(v))),
            _ => Err(format!(
                "unknown space {s:?}; use polygon:M, disk:M, simplex:N, prism or file:PATH"
            )),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Polygon(m) => write!(f, "polygon:{m}"),
            Space::Disk(m) => write!(f, "disk:{m}"),
            Space::Simplex(n) => write!(f, "simplex:{n}"),
            Space::Prism => write!(f, "prism"),
            Space::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl Space {
    pub fn build(&self) -> Result<FacePoset, CliError> {
        Ok(match self {
            Space::Polygon(m) => orbit_space::build_polygon(*m)?,
            Space::Disk(m) => orbit_space::build_boundary_disk(*m)?,
            Space::Simplex(n) => orbit_space::build_simplex(*n)?,
            Space::Prism => orbit_space::build_prism()?,
            Space::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
                orbit_space::parse_poset(&text)?
            }
        })
    }

    /// Polygons and disks have `m` boundary vertices.
    pub fn boundary_vertices(&self) -> Option<usize> {
        match self {
            Space::Polygon(m) | Space::Disk(m) => Some(*m),
            Space::Simplex(2) => Some(3),
            _ => None,
        }
    }
}
