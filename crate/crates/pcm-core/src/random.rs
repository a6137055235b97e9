use rand::Rng;

use crate::matrix::BinaryMatrix;

impl BinaryMatrix {
    /// Uniform random matrix with each bit set with probability `density`.
    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, density: f64, rng: &mut R) -> Self {
        let mut h = BinaryMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if rng.gen_bool(density) {
                    h.set(i, j, true);
                }
            }
        }
        h
    }

    /// Random matrix resampled until its rows are independent.
    pub fn random_full_rank<R: Rng + ?Sized>(
        rows: usize,
        cols: usize,
        density: f64,
        rng: &mut R,
    ) -> Self {
        loop {
            let h = Self::random(rows, cols, density, rng);
            if h.is_full_row_rank() {
                return h;
            }
        }
    }
}
