//! Vertex and cell fields over a mesh.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mesh::Mesh;

/// One complex value per vertex. Houses solution candidates `f`, logarithms
/// `φ`, potentials-as-fields, and anything else sampled at vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField {
    values: Vec<Complex64>,
}

impl ComplexField {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "non-finite field value at vertex {i}"
            )));
        }
        Ok(ComplexField { values })
    }

    pub fn constant(n: usize, value: Complex64) -> Self {
        ComplexField {
            values: vec![value; n],
        }
    }

    pub fn ones(n: usize) -> Self {
        Self::constant(n, Complex64::new(1.0, 0.0))
    }

    /// Sample a function of the vertex coordinates. 1-D meshes pass `[x, 0]`.
    pub fn from_fn(mesh: &Mesh, f: impl Fn([f64; 2]) -> Complex64) -> Self {
        ComplexField {
            values: mesh.coords().iter().map(|&p| f(p)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Index of the entry of maximum modulus; ties break to the lowest index.
    pub fn argmax_abs(&self) -> usize {
        let mut best = 0;
        let mut best_abs = -1.0;
        for (i, v) in self.values.iter().enumerate() {
            let a = v.norm();
            if a > best_abs {
                best_abs = a;
                best = i;
            }
        }
        best
    }

    /// First vertex with |f| == 0, if any.
    pub fn first_zero(&self) -> Option<usize> {
        self.values.iter().position(|v| v.norm() == 0.0)
    }

    /// Plain-text export: one `index re im` line per vertex.
    pub fn write_columns(&self, w: &mut impl Write) -> Result<()> {
        for (i, v) in self.values.iter().enumerate() {
            writeln!(w, "{} {} {}", i, v.re, v.im)?;
        }
        Ok(())
    }

    pub fn read_columns(r: &mut impl BufRead) -> Result<Self> {
        let mut values = Vec::new();
        for (ln, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let idx: usize = it
                .next()
                .ok_or_else(|| Error::Format(format!("line {}: missing index", ln + 1)))?
                .parse()
                .map_err(|_| Error::Format(format!("line {}: bad index", ln + 1)))?;
            if idx != values.len() {
                return Err(Error::Format(format!(
                    "line {}: expected vertex {} got {}",
                    ln + 1,
                    values.len(),
                    idx
                )));
            }
            let re: f64 = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Format(format!("line {}: bad re", ln + 1)))?;
            let im: f64 = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Format(format!("line {}: bad im", ln + 1)))?;
            values.push(Complex64::new(re, im));
        }
        ComplexField::new(values)
    }
}

impl std::ops::Index<usize> for ComplexField {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.values[i]
    }
}

impl std::ops::IndexMut<usize> for ComplexField {
    fn index_mut(&mut self, i: usize) -> &mut Complex64 {
        &mut self.values[i]
    }
}

/// One complex vector per cell: a scalar per edge in 1-D (stored in the first
/// slot), a 2-vector per triangle in 2-D.
#[derive(Debug, Clone, PartialEq)]
pub struct CellVectorField {
    dim: usize,
    values: Vec<[Complex64; 2]>,
}

impl CellVectorField {
    pub fn zeros(dim: usize, n_cells: usize) -> Self {
        CellVectorField {
            dim,
            values: vec![[Complex64::ZERO; 2]; n_cells],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[[Complex64; 2]] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [[Complex64; 2]] {
        &mut self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values
            .iter()
            .map(|v| (v[0].norm_sqr() + v[1].norm_sqr()).sqrt())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<usize> for CellVectorField {
    type Output = [Complex64; 2];
    fn index(&self, i: usize) -> &[Complex64; 2] {
        &self.values[i]
    }
}

impl std::ops::IndexMut<usize> for CellVectorField {
    fn index_mut(&mut self, i: usize) -> &mut [Complex64; 2] {
        &mut self.values[i]
    }
}

/// Real dot of a complex cell vector with a real geometric vector.
pub(crate) fn dot_real(v: &[Complex64; 2], g: [f64; 2]) -> Complex64 {
    v[0] * g[0] + v[1] * g[1]
}

/// A `[0,1]`-valued real test function with one value per vertex. Used to
/// localize the weak identity; constructed by `identity::cutoff_family` or
/// directly from values.
#[derive(Debug, Clone, PartialEq)]
pub struct Cutoff {
    values: Vec<f64>,
}

impl Cutoff {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(i) = values
            .iter()
            .position(|&v| !v.is_finite() || !(0.0..=1.0).contains(&v))
        {
            return Err(Error::InvalidArgument(format!(
                "cutoff value out of [0,1] at vertex {i}"
            )));
        }
        Ok(Cutoff { values })
    }

    pub fn constant_one(n: usize) -> Self {
        Cutoff {
            values: vec![1.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// View as a complex vertex field (imaginary parts are exactly zero).
    pub fn as_field(&self) -> ComplexField {
        ComplexField {
            values: self.values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }
}

impl std::ops::Index<usize> for Cutoff {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.values[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        let err = ComplexField::new(vec![Complex64::new(f64::NAN, 0.0)]);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn cutoff_range_enforced() {
        assert!(Cutoff::new(vec![0.0, 0.5, 1.0]).is_ok());
        assert!(Cutoff::new(vec![1.5]).is_err());
        assert!(Cutoff::new(vec![-0.1]).is_err());
    }

    #[test]
    fn columns_round_trip() {
        let f = ComplexField::new(vec![
            Complex64::new(1.5, -2.25),
            Complex64::new(0.1, 0.0),
        ])
        .unwrap();
        let mut buf = Vec::new();
        f.write_columns(&mut buf).unwrap();
        let g = ComplexField::read_columns(&mut buf.as_slice()).unwrap();
        assert_eq!(f, g);
    }
}
