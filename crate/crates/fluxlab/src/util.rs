//! Small numeric helpers shared across modules.

use num_complex::Complex64;

/// Neumaier compensated accumulator for f64 sums whose terms cancel.
#[derive(Debug, Clone, Copy, Default)]
pub struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated complex accumulator (independent real/imag parts).
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexAccumulator {
    re: Accumulator,
    im: Accumulator,
}

impl ComplexAccumulator {
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// log2(prev / next): the observed convergence order across one uniform
/// refinement (h halved).
pub fn observed_order(prev: f64, next: f64) -> f64 {
    (prev / next).log2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_cancels() {
        let mut acc = Accumulator::default();
        acc.add(1e16);
        acc.add(1.0);
        acc.add(-1e16);
        assert_eq!(acc.value(), 1.0);
    }

    #[test]
    fn order_of_exact_halving() {
        assert!((observed_order(4.0, 1.0) - 2.0).abs() < 1e-15);
    }
}
