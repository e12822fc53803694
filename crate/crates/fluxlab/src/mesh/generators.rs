//! Generators for the canonical test domains.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::{CycleLoop, Mesh};

/// Skew of the triangular lattice behind `gen_disk`. The lattice is
/// intentionally scalene: with equilateral cells the two cotangent weights
/// opposite each vertex coincide and the cell-averaged flux identity becomes
/// discretely exact, which leaves refinement studies with nothing to measure.
const DISK_SKEW: [f64; 2] = [0.45, 0.95];

/// Uniform periodic 1-D mesh of a circle with the given radius, parameterized
/// by arclength. One generator cycle through all vertices.
pub fn gen_circle(n: usize, radius: f64) -> Result<Mesh> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "gen_circle needs n >= 3, got {n}"
        )));
    }
    if !(radius > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "gen_circle needs radius > 0, got {radius}"
        )));
    }
    let circumference = 2.0 * std::f64::consts::PI * radius;
    let h = circumference / n as f64;
    let coords = (0..n).map(|j| [j as f64 * h, 0.0]).collect();
    let edges = (0..n).map(|j| [j, (j + 1) % n]).collect();
    let mut cycle: Vec<usize> = (0..n).collect();
    cycle.push(0);
    Mesh::from_parts(
        1,
        coords,
        edges,
        Vec::new(),
        vec![false; n],
        [Some(circumference), None],
        vec![CycleLoop::new(cycle)?],
    )
}

/// Uniform 1-D mesh of `[0, length]` with both endpoints flagged boundary.
pub fn gen_interval(n: usize, length: f64) -> Result<Mesh> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "gen_interval needs n >= 2, got {n}"
        )));
    }
    if !(length > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "gen_interval needs length > 0, got {length}"
        )));
    }
    let h = length / (n - 1) as f64;
    let coords = (0..n).map(|j| [j as f64 * h, 0.0]).collect();
    let edges = (0..n - 1).map(|j| [j, j + 1]).collect();
    let mut boundary = vec![false; n];
    boundary[0] = true;
    boundary[n - 1] = true;
    Mesh::from_parts(1, coords, edges, Vec::new(), boundary, [None, None], Vec::new())
}

fn hex_dist(m: i64, n: i64) -> i64 {
    m.abs().max(n.abs()).max((m + n).abs())
}

/// Triangulated disk: `rings` concentric hexagonal rings of a triangular
/// lattice around a center vertex. Ring `k` carries `6k` vertices; the outer
/// ring is the boundary. The corner of the outermost ring along the first
/// lattice axis sits at distance `radius` from the center (the five other
/// corners differ by the lattice skew, within about ten percent).
pub fn gen_disk(rings: usize, radius: f64) -> Result<Mesh> {
    if rings < 1 {
        return Err(Error::InvalidArgument(format!(
            "gen_disk needs rings >= 1, got {rings}"
        )));
    }
    if !(radius > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "gen_disk needs radius > 0, got {radius}"
        )));
    }
    let s = radius / rings as f64;
    let a1 = [s, 0.0];
    let a2 = [s * DISK_SKEW[0], s * DISK_SKEW[1]];
    let rings = rings as i64;

    let mut index: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut coords: Vec<[f64; 2]> = Vec::new();
    let mut boundary = Vec::new();
    // ring-by-ring vertex order: center first, then rings outward
    let mut ring_sites: Vec<Vec<(i64, i64)>> = vec![Vec::new(); rings as usize + 1];
    for m in -rings..=rings {
        for n in -rings..=rings {
            let d = hex_dist(m, n);
            if d <= rings {
                ring_sites[d as usize].push((m, n));
            }
        }
    }
    // order each ring by angle around the center for a deterministic layout
    for (k, sites) in ring_sites.iter_mut().enumerate() {
        if k > 0 {
            sites.sort_by(|&(m1, n1), &(m2, n2)| {
                let p1 = [m1 as f64 * a1[0] + n1 as f64 * a2[0], n1 as f64 * a2[1]];
                let p2 = [m2 as f64 * a1[0] + n2 as f64 * a2[0], n2 as f64 * a2[1]];
                f64::atan2(p1[1], p1[0])
                    .partial_cmp(&f64::atan2(p2[1], p2[0]))
                    .unwrap()
            });
        }
        for &(m, n) in sites.iter() {
            index.insert((m, n), coords.len());
            coords.push([m as f64 * a1[0] + n as f64 * a2[0], n as f64 * a2[1]]);
            boundary.push(k as i64 == rings);
        }
    }

    let mut triangles = Vec::new();
    for m in -rings..=rings {
        for n in -rings..=rings {
            // upward cell (m,n)-(m+1,n)-(m,n+1) and downward cell
            if hex_dist(m, n).max(hex_dist(m + 1, n)).max(hex_dist(m, n + 1)) <= rings {
                triangles.push([index[&(m, n)], index[&(m + 1, n)], index[&(m, n + 1)]]);
            }
            if hex_dist(m + 1, n)
                .max(hex_dist(m + 1, n + 1))
                .max(hex_dist(m, n + 1))
                <= rings
            {
                triangles.push([
                    index[&(m + 1, n)],
                    index[&(m + 1, n + 1)],
                    index[&(m, n + 1)],
                ]);
            }
        }
    }

    Mesh::from_parts(
        2,
        coords,
        Vec::new(),
        triangles,
        boundary,
        [None, None],
        Vec::new(),
    )
}

/// Triangulated annulus between two concentric circles; both circles are
/// boundary, and the inner circle is the single generator cycle. The angular
/// vertex count is chosen so cells are roughly isotropic (at least eight).
pub fn gen_annulus(r_in: f64, r_out: f64, rings: usize) -> Result<Mesh> {
    if !(r_in > 0.0) || !(r_out > r_in) {
        return Err(Error::InvalidArgument(format!(
            "gen_annulus needs 0 < r_in < r_out, got ({r_in}, {r_out})"
        )));
    }
    if rings < 2 {
        return Err(Error::InvalidArgument(format!(
            "gen_annulus needs rings >= 2, got {rings}"
        )));
    }
    let dr = (r_out - r_in) / (rings - 1) as f64;
    let m = ((2.0 * std::f64::consts::PI * r_in / dr).round() as usize).max(8);

    let mut coords = Vec::with_capacity(rings * m);
    let mut boundary = Vec::with_capacity(rings * m);
    for k in 0..rings {
        let r = r_in + k as f64 * dr;
        for j in 0..m {
            let th = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
            coords.push([r * th.cos(), r * th.sin()]);
            boundary.push(k == 0 || k == rings - 1);
        }
    }
    let mut triangles = Vec::new();
    for k in 0..rings - 1 {
        let lo = k * m;
        let hi = (k + 1) * m;
        for j in 0..m {
            let j1 = (j + 1) % m;
            triangles.push([lo + j, hi + j, hi + j1]);
            triangles.push([lo + j, hi + j1, lo + j1]);
        }
    }
    let mut cycle: Vec<usize> = (0..m).collect();
    cycle.push(0);
    Mesh::from_parts(
        2,
        coords,
        Vec::new(),
        triangles,
        boundary,
        [None, None],
        vec![CycleLoop::new(cycle)?],
    )
}

/// Uniform periodic triangulation of the flat rectangular torus. No boundary;
/// two generator cycles (one row loop, one column loop).
pub fn gen_flat_torus(nx: usize, ny: usize, lx: f64, ly: f64) -> Result<Mesh> {
    if nx < 3 || ny < 3 {
        return Err(Error::InvalidArgument(format!(
            "gen_flat_torus needs nx, ny >= 3, got ({nx}, {ny})"
        )));
    }
    if !(lx > 0.0) || !(ly > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "gen_flat_torus needs positive side lengths, got ({lx}, {ly})"
        )));
    }
    let hx = lx / nx as f64;
    let hy = ly / ny as f64;
    let at = |i: usize, j: usize| (j % ny) * nx + (i % nx);
    let mut coords = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            coords.push([i as f64 * hx, j as f64 * hy]);
        }
    }
    let mut triangles = Vec::with_capacity(2 * nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            triangles.push([at(i, j), at(i + 1, j), at(i + 1, j + 1)]);
            triangles.push([at(i, j), at(i + 1, j + 1), at(i, j + 1)]);
        }
    }
    let mut row: Vec<usize> = (0..nx).map(|i| at(i, 0)).collect();
    row.push(at(0, 0));
    let mut col: Vec<usize> = (0..ny).map(|j| at(0, j)).collect();
    col.push(at(0, 0));
    Mesh::from_parts(
        2,
        coords,
        Vec::new(),
        triangles,
        vec![false; nx * ny],
        [Some(lx), Some(ly)],
        vec![CycleLoop::new(row)?, CycleLoop::new(col)?],
    )
}

/// Uniform triangulated rectangle `[0,length] × [0,width]`; the whole frame is
/// boundary. `n_long`/`n_wide` count vertices along each side.
pub fn gen_strip(n_long: usize, n_wide: usize, length: f64, width: f64) -> Result<Mesh> {
    if n_long < 2 || n_wide < 2 {
        return Err(Error::InvalidArgument(format!(
            "gen_strip needs vertex counts >= 2, got ({n_long}, {n_wide})"
        )));
    }
    if !(length > 0.0) || !(width > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "gen_strip needs positive side lengths, got ({length}, {width})"
        )));
    }
    let hx = length / (n_long - 1) as f64;
    let hy = width / (n_wide - 1) as f64;
    let at = |i: usize, j: usize| j * n_long + i;
    let mut coords = Vec::with_capacity(n_long * n_wide);
    let mut boundary = Vec::with_capacity(n_long * n_wide);
    for j in 0..n_wide {
        for i in 0..n_long {
            coords.push([i as f64 * hx, j as f64 * hy]);
            boundary.push(i == 0 || i == n_long - 1 || j == 0 || j == n_wide - 1);
        }
    }
    let mut triangles = Vec::with_capacity(2 * (n_long - 1) * (n_wide - 1));
    for j in 0..n_wide - 1 {
        for i in 0..n_long - 1 {
            triangles.push([at(i, j), at(i + 1, j), at(i + 1, j + 1)]);
            triangles.push([at(i, j), at(i + 1, j + 1), at(i, j + 1)]);
        }
    }
    Mesh::from_parts(
        2,
        coords,
        Vec::new(),
        triangles,
        boundary,
        [None, None],
        Vec::new(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_uniform_subdivision() {
        let mesh = gen_circle(4, 1.0).unwrap();
        assert_eq!(mesh.n_cells(), 4);
        for c in 0..4 {
            assert!((mesh.edge_length(c) - std::f64::consts::PI / 2.0).abs() < 1e-15);
        }
        assert_eq!(mesh.n_boundary_vertices(), 0);
    }

    #[test]
    fn circle_minimum_size() {
        assert_eq!(gen_circle(3, 1.0).unwrap().generator_cycles().len(), 1);
        assert!(matches!(
            gen_circle(2, 1.0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn interval_cases() {
        let two = gen_interval(2, 1.0).unwrap();
        assert_eq!(two.n_cells(), 1);
        assert_eq!(two.n_boundary_vertices(), 2);
        let five = gen_interval(5, 2.0).unwrap();
        assert_eq!(five.n_cells(), 4);
        for c in 0..4 {
            assert!((five.edge_length(c) - 0.5).abs() < 1e-15);
        }
        assert!(matches!(
            gen_interval(1, 1.0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn disk_small_and_euler() {
        let one = gen_disk(1, 1.0).unwrap();
        assert_eq!(one.n_vertices(), 7);
        assert_eq!(one.triangles().len(), 6);
        for c in 0..one.n_cells() {
            assert!(one.triangle_signed_area(c) > 0.0);
        }
        let three = gen_disk(3, 1.0).unwrap();
        assert_eq!(three.euler_characteristic(), 1);
        assert!(three.generator_cycles().is_empty());
        // boundary vertex count equals the outermost ring size
        for rings in 1..=4 {
            let mesh = gen_disk(rings, 1.0).unwrap();
            assert_eq!(mesh.n_boundary_vertices(), 6 * rings);
        }
        assert!(gen_disk(0, 1.0).is_err());
    }

    #[test]
    fn disk_counts_match_lattice_formula() {
        for rings in 1..=5 {
            let mesh = gen_disk(rings, 2.0).unwrap();
            assert_eq!(mesh.n_vertices(), 1 + 3 * rings * (rings + 1));
            assert_eq!(mesh.triangles().len(), 6 * rings * rings);
        }
    }

    #[test]
    fn annulus_cases() {
        let two = gen_annulus(0.5, 1.0, 2).unwrap();
        assert_eq!(two.generator_cycles().len(), 1);
        let three = gen_annulus(0.5, 1.0, 3).unwrap();
        assert_eq!(three.euler_characteristic(), 0);
        assert!(matches!(
            gen_annulus(1.0, 0.5, 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn torus_cases() {
        let t = gen_flat_torus(3, 3, 1.0, 1.0).unwrap();
        assert!(t.boundary_edges().is_empty());
        assert_eq!(t.n_boundary_vertices(), 0);
        let t44 = gen_flat_torus(4, 4, 1.0, 1.0).unwrap();
        assert_eq!(t44.euler_characteristic(), 0);
        let t43 = gen_flat_torus(4, 3, 2.0, 1.0).unwrap();
        assert_eq!(t43.generator_cycles().len(), 2);
        assert!(gen_flat_torus(2, 3, 1.0, 1.0).is_err());
    }

    #[test]
    fn strip_cases() {
        let s = gen_strip(2, 2, 1.0, 1.0).unwrap();
        assert_eq!(s.triangles().len(), 2);
        let long = gen_strip(10, 2, 20.0, 1.0).unwrap();
        let xs: Vec<f64> = long.coords().iter().map(|c| c[0]).collect();
        let ys: Vec<f64> = long.coords().iter().map(|c| c[1]).collect();
        let w = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let h = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!((w / h - 20.0).abs() < 1e-12);
        assert!(matches!(
            gen_strip(1, 2, 1.0, 1.0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn all_generators_validate() {
        gen_circle(12, 0.7).unwrap().validate().unwrap();
        gen_interval(9, 3.0).unwrap().validate().unwrap();
        gen_disk(4, 1.5).unwrap().validate().unwrap();
        gen_annulus(0.3, 1.2, 4).unwrap().validate().unwrap();
        gen_flat_torus(5, 7, 2.0, 3.0).unwrap().validate().unwrap();
        gen_strip(7, 3, 5.0, 1.0).unwrap().validate().unwrap();
    }
}
