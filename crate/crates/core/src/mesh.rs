//! Sampled meshes of patches and graphs, and their OBJ / PLY / CSV writers.
//!
//! Vertices are the cell centres of an `n × n` parameter grid in row-major
//! order (`v` outer, `u` inner). Patch samples outside the region are
//! dropped; a quad is emitted when all four of its corners survive.

use std::io::{self, Write};

use serde::Serialize;

use crate::catalog::{graph_eval, EntireGraph};
use crate::minkowski::Point3;
use crate::report::fmt_f64;
use crate::verify::{causal_classify, classify_patch, Causal, Window, TAU_LIGHT};
use crate::weierstrass::SurfacePatch;

/// Per-vertex causal label. `Unclassified` marks samples whose
/// finite-difference stencil leaves the region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexLabel {
    Spacelike,
    Timelike,
    Lightlike,
    Unclassified,
}

impl VertexLabel {
    pub fn code(self) -> u8 {
        match self {
            VertexLabel::Spacelike => 0,
            VertexLabel::Timelike => 1,
            VertexLabel::Lightlike => 2,
            VertexLabel::Unclassified => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexLabel::Spacelike => "spacelike",
            VertexLabel::Timelike => "timelike",
            VertexLabel::Lightlike => "lightlike",
            VertexLabel::Unclassified => "unclassified",
        }
    }
}

impl From<Causal> for VertexLabel {
    fn from(c: Causal) -> Self {
        match c {
            Causal::Spacelike => VertexLabel::Spacelike,
            Causal::Timelike => VertexLabel::Timelike,
            Causal::Lightlike => VertexLabel::Lightlike,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeshVertex {
    pub u: f64,
    pub v: f64,
    pub point: Point3,
    pub label: VertexLabel,
    /// Conformal factor for patches; metric discriminant for graphs.
    pub lambda: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Mesh {
    pub grid: usize,
    pub vertices: Vec<MeshVertex>,
    /// Zero-based quads, counter-clockwise in the parameter plane.
    pub faces: Vec<[usize; 4]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Ply,
    Csv,
}

impl Mesh {
    fn from_grid(n: usize, mut sample: impl FnMut(usize, usize) -> Option<MeshVertex>) -> Mesh {
        let mut index = vec![None; n * n];
        let mut vertices = Vec::new();
        for j in 0..n {
            for i in 0..n {
                if let Some(v) = sample(i, j) {
                    index[j * n + i] = Some(vertices.len());
                    vertices.push(v);
                }
            }
        }
        let mut faces = Vec::new();
        for j in 0..n.saturating_sub(1) {
            for i in 0..n - 1 {
                let q = [index[j * n + i], index[j * n + i + 1], index[(j + 1) * n + i + 1], index[(j + 1) * n + i]];
                if let [Some(a), Some(b), Some(c), Some(d)] = q {
                    faces.push([a, b, c, d]);
                }
            }
        }
        Mesh { grid: n, vertices, faces }
    }

    /// Placed points of a patch over the cell centres of its region rectangle.
    pub fn from_patch(p: &SurfacePatch, n: usize) -> Mesh {
        let rect = p.region().rect;
        let h = 1e-3 * (rect.u_max - rect.u_min).min(rect.v_max - rect.v_min) / n.max(1) as f64;
        Mesh::from_grid(n, |i, j| {
            let z = rect.cell_center(n, i, j);
            let point = p.placed_point(z).ok().filter(|q| q.is_finite())?;
            let label = classify_patch(p, z, h, TAU_LIGHT)
                .map(|l| l.label.into())
                .unwrap_or(VertexLabel::Unclassified);
            Some(MeshVertex {
                u: z.re,
                v: z.im,
                point,
                label,
                lambda: p.conformal_factor(z).unwrap_or(f64::NAN),
            })
        })
    }

    /// Points of an entire graph over the cell centres of the window.
    pub fn from_graph(g: &EntireGraph, window: Window, n: usize) -> Mesh {
        Mesh::from_grid(n, |i, j| {
            let (a, b) = window.cell(n, i, j);
            let l = causal_classify(g, a, b);
            Some(MeshVertex {
                u: a,
                v: b,
                point: graph_eval(g, a, b),
                label: l.label.into(),
                lambda: l.discriminant,
            })
        })
    }

    pub fn label_counts(&self) -> [usize; 4] {
        let mut c = [0; 4];
        for v in &self.vertices {
            c[v.label.code() as usize] += 1;
        }
        c
    }

    pub fn write(&self, format: MeshFormat, w: &mut impl Write) -> io::Result<()> {
        match format {
            MeshFormat::Obj => self.write_obj(w),
            MeshFormat::Ply => self.write_ply(w),
            MeshFormat::Csv => self.write_csv(w),
        }
    }

    /// Positions as `(x, y, t)`, so the time axis is vertical, and 1-based quads.
    pub fn write_obj(&self, w: &mut impl Write) -> io::Result<()> {
        writeln!(w, "# zmc mesh: {} vertices, {} faces, axes (x, y, t)", self.vertices.len(), self.faces.len())?;
        for v in &self.vertices {
            let p = v.point;
            writeln!(w, "v {} {} {}", fmt_f64(p.x), fmt_f64(p.y), fmt_f64(p.t))?;
        }
        for f in &self.faces {
            writeln!(w, "f {} {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1)?;
        }
        Ok(())
    }

    /// Binary little-endian PLY: double `x, y, z` (`z` = time) and a uchar label.
    pub fn write_ply(&self, w: &mut impl Write) -> io::Result<()> {
        write!(
            w,
            "ply\nformat binary_little_endian 1.0\ncomment labels: 0 spacelike, 1 timelike, 2 lightlike, 3 unclassified\n\
             element vertex {}\nproperty double x\nproperty double y\nproperty double z\nproperty uchar label\n\
             element face {}\nproperty list uchar int vertex_indices\nend_header\n",
            self.vertices.len(),
            self.faces.len()
        )?;
        for v in &self.vertices {
            for c in [v.point.x, v.point.y, v.point.t] {
                w.write_all(&c.to_le_bytes())?;
            }
            w.write_all(&[v.label.code()])?;
        }
        for f in &self.faces {
            w.write_all(&[4u8])?;
            for k in f {
                let k = i32::try_from(*k).map_err(|_| io::Error::other("mesh too large for PLY indices"))?;
                w.write_all(&k.to_le_bytes())?;
            }
        }
        Ok(())
    }

    pub fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        writeln!(w, "u,v,t,x,y,label,lambda")?;
        for v in &self.vertices {
            writeln!(
                w,
                "{},{},{},{},{},{},{}",
                fmt_f64(v.u),
                fmt_f64(v.v),
                fmt_f64(v.point.t),
                fmt_f64(v.point.x),
                fmt_f64(v.point.y),
                v.label.name(),
                fmt_f64(v.lambda)
            )?;
        }
        Ok(())
    }
}
