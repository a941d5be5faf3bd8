//! Admissible two-point-flux meshes: 1D intervals and 2D tensor-product
//! rectangles of the device cross-section, with contact tagging.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::physics::ScalingSet;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MeshError {
    #[error("invalid resolution: {0}")]
    InvalidResolution(String),
    #[error("invalid geometry field `{field}`: {message}")]
    InvalidGeometry { field: &'static str, message: String },
    #[error("inconsistent contact configuration: {0}")]
    InconsistentConfig(String),
}

/// Electrode arrangement of the cross-section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContactConfig {
    /// Electrodes on the left and right vertical edges.
    Side,
    /// Electrodes of length `h_E` on the top surface at both ends.
    Top,
    /// Side and top electrodes together.
    Mixed,
}

impl ContactConfig {
    pub fn label(self) -> &'static str {
        match self {
            ContactConfig::Side => "SC",
            ContactConfig::Top => "TC",
            ContactConfig::Mixed => "MC",
        }
    }
}

/// Device cross-section and its resolution. Lengths in m.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySpec {
    /// 1 for an interval along the channel, 2 for the x-z cross-section.
    pub dimension: usize,
    pub contact_config: ContactConfig,
    /// Distance between the inner electrode edges, `h_C`.
    pub channel_length: f64,
    /// Layer thickness `h_T`.
    pub thickness: f64,
    /// Out-of-plane width `h_W`; multiplies currents.
    pub width: f64,
    /// Top electrode length `h_E`; the domain extends by this much on each side.
    #[serde(default)]
    pub electrode_length: f64,
    /// Cells along x between the electrodes.
    pub cells_x: usize,
    /// Cells along z (ignored in 1D).
    #[serde(default = "one")]
    pub cells_z: usize,
    /// Ratio of neighbouring cell widths growing away from the contacts.
    #[serde(default = "unit")]
    pub grading: f64,
}

fn one() -> usize {
    1
}

fn unit() -> f64 {
    1.0
}

impl GeometrySpec {
    /// Columns covered by each top electrode.
    pub fn electrode_columns(&self) -> usize {
        if self.electrode_length <= 0.0 {
            return 0;
        }
        let cols = (self.cells_x as f64 * self.electrode_length / self.channel_length).round() as usize;
        cols.max(1)
    }

    /// Every violated constraint, as `(field path, message)`.
    pub fn violations(&self, prefix: &str) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let mut push = |f: &str, m: String| out.push((format!("{prefix}.{f}"), m));
        if self.dimension != 1 && self.dimension != 2 {
            push("dimension", format!("must be 1 or 2, got {}", self.dimension));
        }
        for (f, v) in [("channel_length", self.channel_length), ("thickness", self.thickness), ("width", self.width)] {
            if !(v > 0.0 && v.is_finite()) {
                push(f, format!("must be positive, got {v}"));
            }
        }
        if !(self.electrode_length >= 0.0 && self.electrode_length.is_finite()) {
            push("electrode_length", format!("must be non-negative, got {}", self.electrode_length));
        }
        if self.cells_x < 2 {
            push("cells_x", format!("need at least 2 cells, got {}", self.cells_x));
        }
        if self.dimension == 2 && self.cells_z < 1 {
            push("cells_z", "need at least 1 cell".into());
        }
        if !(self.grading >= 1.0 && self.grading.is_finite()) {
            push("grading", format!("must be >= 1, got {}", self.grading));
        }
        match self.contact_config {
            ContactConfig::Side if self.electrode_length > 0.0 => {
                push("electrode_length", "side contacts require electrode_length = 0".into())
            }
            ContactConfig::Top | ContactConfig::Mixed if self.electrode_length <= 0.0 => {
                push("electrode_length", "top and mixed contacts need a positive electrode length".into())
            }
            _ => {}
        }
        if self.dimension == 1 && self.contact_config != ContactConfig::Side {
            push("contact_config", "1D geometries only support side contacts".into());
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryTag {
    Contact(usize),
    Insulating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceKind {
    Interior { k: usize, l: usize },
    Boundary { k: usize, tag: BoundaryTag },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub id: usize,
    /// `(x, z)` in scaled length; `z = 0` in 1D.
    pub center: [f64; 2],
    pub measure: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Face {
    pub id: usize,
    pub measure: f64,
    /// Distance between the adjacent centers, or from the center to the face.
    pub distance: f64,
    /// `measure / distance`.
    pub transmissibility: f64,
    pub kind: FaceKind,
    pub center: [f64; 2],
    /// Unit normal pointing from `k` towards `l` (or outwards).
    pub normal: [f64; 2],
}

impl Face {
    fn new(id: usize, measure: f64, distance: f64, kind: FaceKind, center: [f64; 2], normal: [f64; 2]) -> Self {
        Face { id, measure, distance, transmissibility: measure / distance, kind, center, normal }
    }

    pub fn inner_cell(&self) -> usize {
        match self.kind {
            FaceKind::Interior { k, .. } | FaceKind::Boundary { k, .. } => k,
        }
    }
}

/// Cells, faces and boundary tags of a tensor-product mesh in scaled
/// coordinates. Cells are numbered with z running fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibleMesh {
    pub cells: Vec<Cell>,
    pub faces: Vec<Face>,
    pub dimension: usize,
    /// Column and row face coordinates.
    pub x_nodes: Vec<f64>,
    pub z_nodes: Vec<f64>,
    pub domain_measure: f64,
    pub contact_count: usize,
}

impl AdmissibleMesh {
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn columns(&self) -> usize {
        self.x_nodes.len() - 1
    }

    pub fn rows(&self) -> usize {
        self.z_nodes.len() - 1
    }

    /// Cell id of column `i`, row `j`.
    pub fn cell_index(&self, i: usize, j: usize) -> usize {
        i * self.rows() + j
    }

    /// Adjacent cells of a face.
    pub fn cell_of_face(&self, face: usize) -> (usize, Option<usize>) {
        match self.faces[face].kind {
            FaceKind::Interior { k, l } => (k, Some(l)),
            FaceKind::Boundary { k, .. } => (k, None),
        }
    }

    pub fn boundary_tag(&self, face: usize) -> Option<BoundaryTag> {
        match self.faces[face].kind {
            FaceKind::Boundary { tag, .. } => Some(tag),
            FaceKind::Interior { .. } => None,
        }
    }

    /// Faces tagged with the given contact.
    pub fn contact_faces(&self, contact: usize) -> impl Iterator<Item = &Face> + '_ {
        self.faces
            .iter()
            .filter(move |f| matches!(f.kind, FaceKind::Boundary { tag: BoundaryTag::Contact(c), .. } if c == contact))
    }

    /// Largest `|K - L|` over interior faces.
    pub fn bandwidth(&self) -> usize {
        self.faces
            .iter()
            .filter_map(|f| match f.kind {
                FaceKind::Interior { k, l } => Some(k.abs_diff(l)),
                FaceKind::Boundary { .. } => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// `|sin|` of the angle between the segment `x_K -> x_L` and the face normal.
    pub fn orthogonality_residual(&self, face: usize) -> f64 {
        let f = &self.faces[face];
        match f.kind {
            FaceKind::Interior { k, l } => {
                let (a, b) = (self.cells[k].center, self.cells[l].center);
                let d = [b[0] - a[0], b[1] - a[1]];
                let len = d[0].hypot(d[1]);
                (d[0] * f.normal[1] - d[1] * f.normal[0]).abs() / len
            }
            FaceKind::Boundary { .. } => 0.0,
        }
    }

    /// `|sum m_K - |Omega|| / |Omega|`.
    pub fn measure_error(&self) -> f64 {
        let sum: f64 = self.cells.iter().map(|c| c.measure).sum();
        ((sum - self.domain_measure) / self.domain_measure).abs()
    }

    /// Check the structural invariants.
    pub fn validate(&self) -> Result<(), String> {
        for c in &self.cells {
            if !(c.measure > 0.0) {
                return Err(format!("cell {} has measure {}", c.id, c.measure));
            }
        }
        for (i, f) in self.faces.iter().enumerate() {
            if !(f.measure > 0.0 && f.distance > 0.0 && f.transmissibility > 0.0) {
                return Err(format!("face {i} has non-positive geometry"));
            }
            if f.transmissibility != f.measure / f.distance {
                return Err(format!("face {i} transmissibility differs from measure/distance"));
            }
            if let FaceKind::Interior { k, l } = f.kind {
                if k == l {
                    return Err(format!("face {i} connects cell {k} to itself"));
                }
            }
            if self.orthogonality_residual(i) > 1e-12 {
                return Err(format!("face {i} is not orthogonal"));
            }
        }
        if self.measure_error() > 1e-12 {
            return Err(format!("cell measures miss the domain by {}", self.measure_error()));
        }
        Ok(())
    }

    /// Plain-text dump with 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "dimension {}", self.dimension);
        let _ = writeln!(s, "cells {}", self.cells.len());
        for c in &self.cells {
            let _ = writeln!(s, "{} {:.16e} {:.16e} {:.16e}", c.id, c.center[0], c.center[1], c.measure);
        }
        let _ = writeln!(s, "faces {}", self.faces.len());
        for f in &self.faces {
            let kind = match f.kind {
                FaceKind::Interior { k, l } => format!("interior {k} {l}"),
                FaceKind::Boundary { k, tag: BoundaryTag::Contact(c) } => format!("contact {k} {c}"),
                FaceKind::Boundary { k, tag: BoundaryTag::Insulating } => format!("insulating {k} -"),
            };
            let _ = writeln!(
                s,
                "{} {} {:.16e} {:.16e} {:.16e}",
                f.id, kind, f.measure, f.distance, f.transmissibility
            );
        }
        s
    }
}

/// Cell widths of `n` cells covering `length`, growing geometrically by
/// `grading` from both ends towards the middle.
pub fn graded_widths(n: usize, length: f64, grading: f64) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|i| grading.powi(i.min(n - 1 - i) as i32)).collect();
    let total: f64 = raw.iter().sum();
    raw.iter().map(|w| w * length / total).collect()
}

fn nodes_from_widths(start: f64, widths: &[f64]) -> Vec<f64> {
    let mut nodes = Vec::with_capacity(widths.len() + 1);
    let mut x = start;
    nodes.push(x);
    for w in widths {
        x += w;
        nodes.push(x);
    }
    nodes
}

/// 1D mesh of `[0, length]` (scaled) with contacts 0 and 1 at the ends.
pub fn build_interval_mesh(length: f64, n_cells: usize, grading: f64) -> Result<AdmissibleMesh, MeshError> {
    if n_cells < 2 {
        return Err(MeshError::InvalidResolution(format!("need at least 2 cells, got {n_cells}")));
    }
    if !(grading >= 1.0 && grading.is_finite()) {
        return Err(MeshError::InvalidGeometry { field: "grading", message: format!("must be >= 1, got {grading}") });
    }
    if !(length > 0.0 && length.is_finite()) {
        return Err(MeshError::InvalidGeometry { field: "channel_length", message: format!("must be positive, got {length}") });
    }
    let mut x_nodes = nodes_from_widths(0.0, &graded_widths(n_cells, length, grading));
    // Pin the far end so the partition is exact.
    *x_nodes.last_mut().unwrap() = length;
    let side = Sides { left: Some(0), right: Some(1), top_left: None, top_right: None, electrode_columns: 0 };
    Ok(assemble(1, x_nodes, vec![0.0, 1.0], &side))
}

/// Mesh of the device cross-section described by `geom`, scaled by `scale.length`.
pub fn build_device_mesh(geom: &GeometrySpec, scale: &ScalingSet) -> Result<AdmissibleMesh, MeshError> {
    if geom.contact_config == ContactConfig::Side && geom.electrode_length > 0.0 {
        return Err(MeshError::InconsistentConfig("side contacts with a positive electrode length".into()));
    }
    if let Some((field, message)) = geom.violations("geometry").into_iter().next() {
        return Err(if field.ends_with("cells_x") || field.ends_with("cells_z") {
            MeshError::InvalidResolution(message)
        } else {
            MeshError::InconsistentConfig(format!("{field}: {message}"))
        });
    }
    let l = scale.length;
    let channel = geom.channel_length / l;
    if geom.dimension == 1 {
        return build_interval_mesh(channel, geom.cells_x, geom.grading);
    }
    let electrode = geom.electrode_length / l;
    let ne = geom.electrode_columns();
    let mut widths = Vec::with_capacity(geom.cells_x + 2 * ne);
    widths.extend(std::iter::repeat_n(electrode / ne.max(1) as f64, ne));
    widths.extend(graded_widths(geom.cells_x, channel, geom.grading));
    widths.extend(std::iter::repeat_n(electrode / ne.max(1) as f64, ne));
    let mut x_nodes = nodes_from_widths(0.0, &widths);
    // Electrode edges fall exactly on mesh lines.
    if ne > 0 {
        x_nodes[ne] = electrode;
        let n = x_nodes.len();
        x_nodes[n - 1 - ne] = electrode + channel;
    }
    *x_nodes.last_mut().unwrap() = channel + 2.0 * electrode;
    let thickness = geom.thickness / l;
    let mut z_nodes = nodes_from_widths(0.0, &graded_widths(geom.cells_z, thickness, 1.0));
    *z_nodes.last_mut().unwrap() = thickness;
    let sides = match geom.contact_config {
        ContactConfig::Side => Sides { left: Some(0), right: Some(1), top_left: None, top_right: None, electrode_columns: 0 },
        ContactConfig::Top => Sides { left: None, right: None, top_left: Some(0), top_right: Some(1), electrode_columns: ne },
        ContactConfig::Mixed => {
            Sides { left: Some(0), right: Some(1), top_left: Some(0), top_right: Some(1), electrode_columns: ne }
        }
    };
    Ok(assemble(2, x_nodes, z_nodes, &sides))
}

struct Sides {
    left: Option<usize>,
    right: Option<usize>,
    top_left: Option<usize>,
    top_right: Option<usize>,
    electrode_columns: usize,
}

fn tag(c: Option<usize>) -> BoundaryTag {
    c.map_or(BoundaryTag::Insulating, BoundaryTag::Contact)
}

fn assemble(dimension: usize, x_nodes: Vec<f64>, z_nodes: Vec<f64>, sides: &Sides) -> AdmissibleMesh {
    let nx = x_nodes.len() - 1;
    let nz = z_nodes.len() - 1;
    let xc: Vec<f64> = x_nodes.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    let zc: Vec<f64> = z_nodes.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    let dx: Vec<f64> = x_nodes.windows(2).map(|w| w[1] - w[0]).collect();
    let dz: Vec<f64> = z_nodes.windows(2).map(|w| w[1] - w[0]).collect();
    let id = |i: usize, j: usize| i * nz + j;
    let two_d = dimension == 2;

    let mut cells = Vec::with_capacity(nx * nz);
    for i in 0..nx {
        for j in 0..nz {
            let measure = if two_d { dx[i] * dz[j] } else { dx[i] };
            cells.push(Cell { id: id(i, j), center: [xc[i], if two_d { zc[j] } else { 0.0 }], measure });
        }
    }

    let mut faces: Vec<Face> = Vec::new();
    let mut push = |measure: f64, distance: f64, kind: FaceKind, center: [f64; 2], normal: [f64; 2]| {
        let n = faces.len();
        faces.push(Face::new(n, measure, distance, kind, center, normal));
    };
    let height = |j: usize| if two_d { dz[j] } else { 1.0 };
    let zpos = |j: usize| if two_d { zc[j] } else { 0.0 };
    // Faces normal to x.
    for j in 0..nz {
        push(height(j), 0.5 * dx[0], FaceKind::Boundary { k: id(0, j), tag: tag(sides.left) }, [x_nodes[0], zpos(j)], [-1.0, 0.0]);
        for i in 0..nx - 1 {
            push(
                height(j),
                xc[i + 1] - xc[i],
                FaceKind::Interior { k: id(i, j), l: id(i + 1, j) },
                [x_nodes[i + 1], zpos(j)],
                [1.0, 0.0],
            );
        }
        push(
            height(j),
            0.5 * dx[nx - 1],
            FaceKind::Boundary { k: id(nx - 1, j), tag: tag(sides.right) },
            [x_nodes[nx], zpos(j)],
            [1.0, 0.0],
        );
    }
    // Faces normal to z.
    if two_d {
        for i in 0..nx {
            push(dx[i], 0.5 * dz[0], FaceKind::Boundary { k: id(i, 0), tag: BoundaryTag::Insulating }, [xc[i], z_nodes[0]], [0.0, -1.0]);
            for j in 0..nz - 1 {
                push(dx[i], zc[j + 1] - zc[j], FaceKind::Interior { k: id(i, j), l: id(i, j + 1) }, [xc[i], z_nodes[j + 1]], [0.0, 1.0]);
            }
            let top = if i < sides.electrode_columns {
                tag(sides.top_left)
            } else if i >= nx - sides.electrode_columns {
                tag(sides.top_right)
            } else {
                BoundaryTag::Insulating
            };
            push(dx[i], 0.5 * dz[nz - 1], FaceKind::Boundary { k: id(i, nz - 1), tag: top }, [xc[i], z_nodes[nz]], [0.0, 1.0]);
        }
    }

    let lx = x_nodes[nx] - x_nodes[0];
    let domain_measure = if two_d { lx * (z_nodes[nz] - z_nodes[0]) } else { lx };
    let contact_count = 2;
    AdmissibleMesh { cells, faces, dimension, x_nodes, z_nodes, domain_measure, contact_count }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cell_interval() {
        let m = build_interval_mesh(1.0, 2, 1.0).unwrap();
        assert_eq!(m.cells.len(), 2);
        assert_eq!(m.faces.len(), 3);
        assert_eq!(m.cells[0].measure, 0.5);
        let interior = m.faces.iter().find(|f| matches!(f.kind, FaceKind::Interior { .. })).unwrap();
        assert_eq!(interior.transmissibility, 2.0);
        m.validate().unwrap();
    }

    #[test]
    fn rejects_single_cell() {
        assert!(matches!(build_interval_mesh(1.0, 1, 1.0), Err(MeshError::InvalidResolution(_))));
    }

    #[test]
    fn graded_widths_are_mirrored() {
        let w = graded_widths(7, 1.0, 1.3);
        for i in 0..7 {
            assert_eq!(w[i], w[6 - i]);
        }
        assert!(w[3] > w[2] && w[2] > w[1] && w[1] > w[0]);
    }
}
