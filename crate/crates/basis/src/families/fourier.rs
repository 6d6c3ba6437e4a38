use num_complex::Complex64;
use std::f64::consts::PI;

/// Circle harmonic `e^{-i m phi} / sqrt(2 pi)`.
pub fn fourier(m: i64, phi: f64) -> Complex64 {
    Complex64::from_polar(1.0 / (2.0 * PI).sqrt(), -(m as f64) * phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let c = 1.0 / (2.0 * PI).sqrt();
        assert!((fourier(0, 1.234) - c).norm() < 1e-16);
        assert!((fourier(1, 0.0) - c).norm() < 1e-16);
        assert!((fourier(3, PI) + c).norm() < 1e-15);
    }
}
