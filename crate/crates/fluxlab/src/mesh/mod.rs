//! Simplicial 1-D/2-D meshes of the canonical test domains.
//!
//! Meshes are immutable after construction and carry everything the operators
//! need: intrinsic vertex coordinates, cells, per-vertex boundary flags,
//! periodic identifications (circle, torus), and the homology generator cycles
//! known from the construction. Periodic domains are realized through
//! identification tables, not duplicated seams, so assembled operators are
//! exactly translation-symmetric; cell geometry is always computed from
//! coordinates unwrapped around the cell's first vertex (cells must span less
//! than half a period per axis, which every generator guarantees).

mod generators;
mod io;

pub use generators::{gen_annulus, gen_circle, gen_disk, gen_flat_torus, gen_interval, gen_strip};

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A closed loop of vertices traversing consecutive mesh edges; the first
/// vertex is repeated at the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleLoop {
    vertices: Vec<usize>,
}

impl CycleLoop {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidArgument(
                "cycle needs at least two edges".into(),
            ));
        }
        if vertices.first() != vertices.last() {
            return Err(Error::InvalidArgument(
                "cycle must close: first vertex != last".into(),
            ));
        }
        Ok(CycleLoop { vertices })
    }

    /// Vertex list including the repeated closing vertex.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn n_edges(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Consecutive (from, to) pairs around the loop.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Simplicial mesh with boundary markers, optional periodic identifications,
/// and construction-time generator cycles.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    dim: usize,
    coords: Vec<[f64; 2]>,
    edges: Vec<[usize; 2]>,
    triangles: Vec<[usize; 3]>,
    boundary: Vec<bool>,
    periods: [Option<f64>; 2],
    cycles: Vec<CycleLoop>,
    // derived at construction
    adjacency: Vec<Vec<usize>>,
    edge_table: Vec<(usize, usize, u8)>,
}

impl Mesh {
    /// Build and validate a mesh from raw parts. `edges` is used for 1-D
    /// meshes, `triangles` for 2-D; the other list must be empty.
    pub fn from_parts(
        dim: usize,
        coords: Vec<[f64; 2]>,
        edges: Vec<[usize; 2]>,
        triangles: Vec<[usize; 3]>,
        boundary: Vec<bool>,
        periods: [Option<f64>; 2],
        cycles: Vec<CycleLoop>,
    ) -> Result<Self> {
        let mut mesh = Mesh {
            dim,
            coords,
            edges,
            triangles,
            boundary,
            periods,
            cycles,
            adjacency: Vec::new(),
            edge_table: Vec::new(),
        };
        mesh.build_tables()?;
        mesh.validate()?;
        Ok(mesh)
    }

    fn build_tables(&mut self) -> Result<()> {
        let n = self.coords.len();
        let mut counts: BTreeMap<(usize, usize), u8> = BTreeMap::new();
        let mut note = |a: usize, b: usize| -> Result<()> {
            if a == b {
                return Err(Error::InvalidMesh(format!("degenerate edge ({a},{a})")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidMesh(format!(
                    "edge ({a},{b}) references a vertex out of range (n={n})"
                )));
            }
            let key = (a.min(b), a.max(b));
            *counts.entry(key).or_insert(0) += 1;
            Ok(())
        };
        match self.dim {
            1 => {
                for e in &self.edges {
                    note(e[0], e[1])?;
                }
            }
            2 => {
                for t in &self.triangles {
                    note(t[0], t[1])?;
                    note(t[1], t[2])?;
                    note(t[2], t[0])?;
                }
            }
            d => return Err(Error::InvalidMesh(format!("unsupported dimension {d}"))),
        }
        self.edge_table = counts.into_iter().map(|((a, b), c)| (a, b, c)).collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b, _) in &self.edge_table {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        self.adjacency = adjacency;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_vertices(&self) -> usize {
        self.coords.len()
    }

    pub fn n_cells(&self) -> usize {
        if self.dim == 1 {
            self.edges.len()
        } else {
            self.triangles.len()
        }
    }

    pub fn coords(&self) -> &[[f64; 2]] {
        &self.coords
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn boundary_flags(&self) -> &[bool] {
        &self.boundary
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary[v]
    }

    pub fn n_boundary_vertices(&self) -> usize {
        self.boundary.iter().filter(|&&b| b).count()
    }

    pub fn periods(&self) -> [Option<f64>; 2] {
        self.periods
    }

    pub fn generator_cycles(&self) -> &[CycleLoop] {
        &self.cycles
    }

    /// Sorted undirected edge list with incident cell counts (2-D) or
    /// multiplicities (1-D).
    pub fn edge_table(&self) -> &[(usize, usize, u8)] {
        &self.edge_table
    }

    pub fn n_edges_undirected(&self) -> usize {
        self.edge_table.len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency
            .get(a)
            .is_some_and(|list| list.binary_search(&b).is_ok())
    }

    /// V − E + F with F = 0 for 1-D meshes.
    pub fn euler_characteristic(&self) -> i64 {
        let v = self.n_vertices() as i64;
        let e = self.n_edges_undirected() as i64;
        let f = if self.dim == 2 {
            self.triangles.len() as i64
        } else {
            0
        };
        v - e + f
    }

    /// Minimum-image coordinate difference `to − from`, unwrapped across
    /// periodic axes.
    pub fn delta(&self, from: usize, to: usize) -> [f64; 2] {
        let a = self.coords[from];
        let b = self.coords[to];
        let mut d = [b[0] - a[0], b[1] - a[1]];
        for ax in 0..2 {
            if let Some(p) = self.periods[ax] {
                if d[ax] > p / 2.0 {
                    d[ax] -= p;
                } else if d[ax] < -p / 2.0 {
                    d[ax] += p;
                }
            }
        }
        d
    }

    /// Minimum-image Euclidean distance between two vertices.
    pub fn distance(&self, a: usize, b: usize) -> f64 {
        let d = self.delta(a, b);
        d[0].hypot(d[1])
    }

    /// Largest minimum-image distance from `v` to any vertex.
    pub fn extent_from(&self, v: usize) -> f64 {
        (0..self.n_vertices())
            .map(|u| self.distance(v, u))
            .fold(0.0, f64::max)
    }

    /// Coordinate extent of the mesh: for each axis the bounding range, or the
    /// half-period on wrapped axes. Returns the diagonal length.
    pub fn diameter_bound(&self) -> f64 {
        let mut span = [0.0_f64; 2];
        for ax in 0..2 {
            if let Some(p) = self.periods[ax] {
                span[ax] = p / 2.0;
            } else {
                let lo = self.coords.iter().map(|c| c[ax]).fold(f64::INFINITY, f64::min);
                let hi = self
                    .coords
                    .iter()
                    .map(|c| c[ax])
                    .fold(f64::NEG_INFINITY, f64::max);
                span[ax] = hi - lo;
            }
        }
        span[0].hypot(span[1])
    }

    /// Edge length (1-D cell).
    pub fn edge_length(&self, cell: usize) -> f64 {
        let [a, b] = self.edges[cell];
        self.distance(a, b)
    }

    /// Unwrapped corner coordinates of a triangle, anchored at its first
    /// vertex.
    pub fn triangle_coords(&self, cell: usize) -> [[f64; 2]; 3] {
        let [a, b, c] = self.triangles[cell];
        let pa = self.coords[a];
        let db = self.delta(a, b);
        let dc = self.delta(a, c);
        [
            pa,
            [pa[0] + db[0], pa[1] + db[1]],
            [pa[0] + dc[0], pa[1] + dc[1]],
        ]
    }

    /// Signed area of a triangle from unwrapped coordinates.
    pub fn triangle_signed_area(&self, cell: usize) -> f64 {
        let [p0, p1, p2] = self.triangle_coords(cell);
        ((p1[0] - p0[0]) * (p2[1] - p0[1]) - (p1[1] - p0[1]) * (p2[0] - p0[0])) / 2.0
    }

    /// Cell measure: edge length in 1-D, triangle area in 2-D.
    pub fn cell_measure(&self, cell: usize) -> f64 {
        if self.dim == 1 {
            self.edge_length(cell)
        } else {
            self.triangle_signed_area(cell)
        }
    }

    pub fn total_measure(&self) -> f64 {
        (0..self.n_cells()).map(|c| self.cell_measure(c)).sum()
    }

    pub fn max_edge_length(&self) -> f64 {
        self.edge_table
            .iter()
            .map(|&(a, b, _)| self.distance(a, b))
            .fold(0.0, f64::max)
    }

    /// Boundary edges of a 2-D mesh (edges with exactly one incident
    /// triangle).
    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        if self.dim != 2 {
            return Vec::new();
        }
        self.edge_table
            .iter()
            .filter(|&&(_, _, c)| c == 1)
            .map(|&(a, b, _)| (a, b))
            .collect()
    }

    /// Graph component id per vertex, counted from 0 in vertex order.
    pub fn components(&self) -> Vec<usize> {
        let n = self.n_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn n_components(&self) -> usize {
        self.components().iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Structural validation of every mesh invariant. Generators call this;
    /// it is also exposed for loaded meshes and tests.
    pub fn validate(&self) -> Result<()> {
        let n = self.n_vertices();
        if n < 2 {
            return Err(Error::InvalidMesh("fewer than two vertices".into()));
        }
        if self.boundary.len() != n {
            return Err(Error::InvalidMesh("boundary flag length mismatch".into()));
        }
        if let Some(i) = self
            .coords
            .iter()
            .position(|c| !c[0].is_finite() || !c[1].is_finite())
        {
            return Err(Error::InvalidMesh(format!("non-finite coordinate at vertex {i}")));
        }
        for ax in 0..2 {
            if let Some(p) = self.periods[ax] {
                if !(p > 0.0) {
                    return Err(Error::InvalidMesh(format!("non-positive period on axis {ax}")));
                }
                if let Some(i) = self
                    .coords
                    .iter()
                    .position(|c| c[ax] < 0.0 || c[ax] >= p)
                {
                    return Err(Error::InvalidMesh(format!(
                        "vertex {i} outside fundamental domain [0,{p}) on axis {ax}"
                    )));
                }
            }
        }
        match self.dim {
            1 => {
                if !self.triangles.is_empty() {
                    return Err(Error::InvalidMesh("1-D mesh with triangles".into()));
                }
                if self.edges.is_empty() {
                    return Err(Error::InvalidMesh("1-D mesh without edges".into()));
                }
                let mut degree = vec![0usize; n];
                for (c, e) in self.edges.iter().enumerate() {
                    if e[0] >= n || e[1] >= n || e[0] == e[1] {
                        return Err(Error::InvalidMesh(format!("bad edge cell {c}")));
                    }
                    degree[e[0]] += 1;
                    degree[e[1]] += 1;
                    let len = self.edge_length(c);
                    if !(len > 0.0) {
                        return Err(Error::InvalidMesh(format!(
                            "edge cell {c} has non-positive length {len}"
                        )));
                    }
                }
                for &(a, b, c) in &self.edge_table {
                    if c > 1 {
                        return Err(Error::InvalidMesh(format!("duplicate edge ({a},{b})")));
                    }
                }
                for (v, &d) in degree.iter().enumerate() {
                    match d {
                        0 => {
                            return Err(Error::InvalidMesh(format!("isolated vertex {v}")));
                        }
                        1 | 2 => {}
                        d => {
                            return Err(Error::InvalidMesh(format!(
                                "vertex {v} has degree {d}; 1-D manifolds allow at most 2"
                            )));
                        }
                    }
                    let flagged = self.boundary[v];
                    let derived = d == 1;
                    if flagged != derived {
                        return Err(Error::InvalidMesh(format!(
                            "boundary flag mismatch at vertex {v}: flagged {flagged}, degree {d}"
                        )));
                    }
                }
            }
            2 => {
                if !self.edges.is_empty() {
                    return Err(Error::InvalidMesh("2-D mesh with 1-D edge cells".into()));
                }
                if self.triangles.is_empty() {
                    return Err(Error::InvalidMesh("2-D mesh without triangles".into()));
                }
                let mut touched = vec![false; n];
                let mut directed: BTreeMap<(usize, usize), usize> = BTreeMap::new();
                for (c, t) in self.triangles.iter().enumerate() {
                    if t[0] == t[1] || t[1] == t[2] || t[2] == t[0] {
                        return Err(Error::InvalidMesh(format!("degenerate triangle {c}")));
                    }
                    let area = self.triangle_signed_area(c);
                    if !(area > 0.0) {
                        return Err(Error::InvalidMesh(format!(
                            "triangle {c} is not counterclockwise (signed area {area})"
                        )));
                    }
                    for k in 0..3 {
                        touched[t[k]] = true;
                        *directed.entry((t[k], t[(k + 1) % 3])).or_insert(0) += 1;
                    }
                }
                if let Some(v) = touched.iter().position(|&t| !t) {
                    return Err(Error::InvalidMesh(format!("isolated vertex {v}")));
                }
                for (&(a, b), &cnt) in &directed {
                    if cnt > 1 {
                        return Err(Error::InvalidMesh(format!(
                            "directed edge ({a},{b}) used {cnt} times: inconsistent orientation"
                        )));
                    }
                }
                let mut on_boundary = vec![false; n];
                for &(a, b, cnt) in &self.edge_table {
                    match cnt {
                        1 => {
                            on_boundary[a] = true;
                            on_boundary[b] = true;
                        }
                        2 => {}
                        c => {
                            return Err(Error::InvalidMesh(format!(
                                "edge ({a},{b}) shared by {c} triangles"
                            )));
                        }
                    }
                }
                for v in 0..n {
                    if self.boundary[v] != on_boundary[v] {
                        return Err(Error::InvalidMesh(format!(
                            "boundary flag mismatch at vertex {v}"
                        )));
                    }
                }
            }
            d => return Err(Error::InvalidMesh(format!("unsupported dimension {d}"))),
        }
        for (k, cycle) in self.cycles.iter().enumerate() {
            for (a, b) in cycle.edge_pairs() {
                if a >= n || b >= n {
                    return Err(Error::InvalidMesh(format!(
                        "cycle {k} references vertex out of range"
                    )));
                }
                if !self.has_edge(a, b) {
                    return Err(Error::InvalidMesh(format!(
                        "cycle {k} step ({a},{b}) is not a mesh edge"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Uniform midpoint refinement. Edges are bisected; every triangle splits
    /// into four children. Boundary flags and generator cycles lift to the
    /// refined mesh; periodic coordinates wrap back into the fundamental
    /// domain.
    pub fn refine(&self) -> Result<Mesh> {
        let n = self.n_vertices();
        let mut coords = self.coords.clone();
        let mut midpoint: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut boundary_edge: BTreeMap<(usize, usize), bool> = BTreeMap::new();
        if self.dim == 2 {
            for &(a, b, cnt) in &self.edge_table {
                boundary_edge.insert((a, b), cnt == 1);
            }
        }
        let mut mid_of = |mesh: &Mesh, coords: &mut Vec<[f64; 2]>, u: usize, v: usize| -> usize {
            let key = (u.min(v), u.max(v));
            *midpoint.entry(key).or_insert_with(|| {
                let (lo, hi) = key;
                let d = mesh.delta(lo, hi);
                let mut p = [
                    mesh.coords[lo][0] + d[0] / 2.0,
                    mesh.coords[lo][1] + d[1] / 2.0,
                ];
                for ax in 0..2 {
                    if let Some(per) = mesh.periods[ax] {
                        p[ax] = p[ax].rem_euclid(per);
                    }
                }
                coords.push(p);
                coords.len() - 1
            })
        };

        let mut edges = Vec::new();
        let mut triangles = Vec::new();
        match self.dim {
            1 => {
                for &[a, b] in &self.edges {
                    let m = mid_of(self, &mut coords, a, b);
                    edges.push([a, m]);
                    edges.push([m, b]);
                }
            }
            _ => {
                for &[a, b, c] in &self.triangles {
                    let mab = mid_of(self, &mut coords, a, b);
                    let mbc = mid_of(self, &mut coords, b, c);
                    let mca = mid_of(self, &mut coords, c, a);
                    triangles.push([a, mab, mca]);
                    triangles.push([b, mbc, mab]);
                    triangles.push([c, mca, mbc]);
                    triangles.push([mab, mbc, mca]);
                }
            }
        }

        let mut boundary = vec![false; coords.len()];
        boundary[..n].copy_from_slice(&self.boundary);
        if self.dim == 2 {
            for (&key, &idx) in &midpoint {
                if boundary_edge.get(&key).copied().unwrap_or(false) {
                    boundary[idx] = true;
                }
            }
        }

        let cycles = self
            .cycles
            .iter()
            .map(|cycle| {
                let mut verts = Vec::with_capacity(cycle.vertices.len() * 2 - 1);
                for (a, b) in cycle.edge_pairs() {
                    let key = (a.min(b), a.max(b));
                    verts.push(a);
                    verts.push(midpoint[&key]);
                }
                verts.push(cycle.vertices[0]);
                CycleLoop::new(verts)
            })
            .collect::<Result<Vec<_>>>()?;

        Mesh::from_parts(
            self.dim,
            coords,
            edges,
            triangles,
            boundary,
            self.periods,
            cycles,
        )
    }

    /// Copy of the mesh with all coordinates shifted. Not available on
    /// periodic meshes (the fundamental domain is pinned at the origin).
    pub fn translated(&self, dx: f64, dy: f64) -> Result<Mesh> {
        if self.periods.iter().any(Option::is_some) {
            return Err(Error::InvalidArgument(
                "cannot translate a periodic mesh".into(),
            ));
        }
        let coords = self
            .coords
            .iter()
            .map(|c| [c[0] + dx, c[1] + dy])
            .collect();
        Mesh::from_parts(
            self.dim,
            coords,
            self.edges.clone(),
            self.triangles.clone(),
            self.boundary.clone(),
            self.periods,
            self.cycles.clone(),
        )
    }

    /// Disjoint union of two meshes of equal dimension (no shared vertices).
    /// Periodic meshes are not supported here.
    pub fn disjoint_union(a: &Mesh, b: &Mesh) -> Result<Mesh> {
        if a.dim != b.dim {
            return Err(Error::InvalidArgument(
                "disjoint union needs equal dimensions".into(),
            ));
        }
        if a.periods.iter().any(Option::is_some) || b.periods.iter().any(Option::is_some) {
            return Err(Error::InvalidArgument(
                "disjoint union of periodic meshes is not supported".into(),
            ));
        }
        let off = a.n_vertices();
        let mut coords = a.coords.clone();
        coords.extend_from_slice(&b.coords);
        let mut edges = a.edges.clone();
        edges.extend(b.edges.iter().map(|e| [e[0] + off, e[1] + off]));
        let mut triangles = a.triangles.clone();
        triangles.extend(
            b.triangles
                .iter()
                .map(|t| [t[0] + off, t[1] + off, t[2] + off]),
        );
        let mut boundary = a.boundary.clone();
        boundary.extend_from_slice(&b.boundary);
        let mut cycles = a.cycles.clone();
        for c in &b.cycles {
            cycles.push(CycleLoop::new(
                c.vertices().iter().map(|&v| v + off).collect(),
            )?);
        }
        Mesh::from_parts(a.dim, coords, edges, triangles, boundary, a.periods, cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refine_circle_halves_edges() {
        let mesh = gen_circle(4, 1.0).unwrap();
        let fine = mesh.refine().unwrap();
        assert_eq!(fine.n_cells(), 8);
        let expect = std::f64::consts::PI / 4.0;
        for c in 0..fine.n_cells() {
            assert!((fine.edge_length(c) - expect).abs() < 1e-14);
        }
        assert_eq!(fine.generator_cycles().len(), 1);
        assert_eq!(fine.generator_cycles()[0].n_edges(), 8);
    }

    #[test]
    fn refine_disk_quadruples_triangles() {
        let mesh = gen_disk(1, 1.0).unwrap();
        let fine = mesh.refine().unwrap();
        assert_eq!(fine.triangles().len(), mesh.triangles().len() * 4);
        assert_eq!(fine.euler_characteristic(), 1);
    }

    #[test]
    fn refine_preserves_topology() {
        for mesh in [
            gen_circle(6, 2.0).unwrap(),
            gen_interval(5, 1.0).unwrap(),
            gen_disk(2, 1.0).unwrap(),
            gen_annulus(0.5, 1.0, 3).unwrap(),
            gen_flat_torus(4, 3, 2.0, 1.0).unwrap(),
            gen_strip(3, 2, 3.0, 1.0).unwrap(),
        ] {
            let fine = mesh.refine().unwrap();
            assert_eq!(fine.euler_characteristic(), mesh.euler_characteristic());
            assert_eq!(fine.generator_cycles().len(), mesh.generator_cycles().len());
            assert!(
                (fine.max_edge_length() - mesh.max_edge_length() / 2.0).abs()
                    < 1e-13 * mesh.max_edge_length()
            );
        }
    }

    #[test]
    fn refined_annulus_cycle_still_closed() {
        let mesh = gen_annulus(0.5, 1.0, 2).unwrap();
        let base_len = mesh.generator_cycles()[0].n_edges();
        let fine = mesh.refine().unwrap();
        let cyc = &fine.generator_cycles()[0];
        assert_eq!(cyc.n_edges(), base_len * 2);
        assert_eq!(cyc.vertices().first(), cyc.vertices().last());
        fine.validate().unwrap();
    }

    #[test]
    fn disjoint_union_two_disks() {
        let a = gen_disk(1, 1.0).unwrap();
        let b = a.translated(5.0, 0.0).unwrap();
        let u = Mesh::disjoint_union(&a, &b).unwrap();
        assert_eq!(u.n_components(), 2);
        assert_eq!(u.n_vertices(), a.n_vertices() * 2);
        assert_eq!(u.euler_characteristic(), 2);
    }

    #[test]
    fn torus_min_image_distance_wraps() {
        let mesh = gen_flat_torus(4, 4, 1.0, 1.0).unwrap();
        // vertices 0 and 3 sit 3 steps apart in x, 1 step via wrap
        assert!((mesh.distance(0, 3) - 0.25).abs() < 1e-15);
    }
}
