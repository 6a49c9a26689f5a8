//! Unit conversions between laboratory and atomic units, Coulomb scaling,
//! and the photon-number estimate for multiphoton ionization.
//!
//! Everything downstream of the I/O boundary works in atomic units; GHz and
//! seconds appear only here and in the CLI layer.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Atomic unit of angular frequency in rad/s (CODATA 2018, E_h / hbar).
pub const OMEGA_AU_RAD_PER_S: f64 = 4.134137334e16;

/// Driving angular frequency in atomic units. Always positive.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Frequency(f64);

impl Frequency {
    /// Construct from a value already in atomic units.
    pub fn from_au(omega: f64) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(Error::Domain(format!("frequency must be positive, got {omega}")));
        }
        Ok(Frequency(omega))
    }

    /// Convert a laboratory frequency in GHz (cycles, not angular) to a.u.
    pub fn from_ghz(f_ghz: f64) -> Result<Self> {
        if !(f_ghz > 0.0) {
            return Err(Error::Domain(format!("frequency must be positive, got {f_ghz} GHz")));
        }
        Ok(Frequency(2.0 * std::f64::consts::PI * f_ghz * 1.0e9 / OMEGA_AU_RAD_PER_S))
    }

    /// Angular frequency in atomic units.
    #[inline]
    pub fn au(self) -> f64 {
        self.0
    }

    /// Back to laboratory GHz.
    pub fn to_ghz(self) -> f64 {
        self.0 * OMEGA_AU_RAD_PER_S / (2.0 * std::f64::consts::PI * 1.0e9)
    }

    /// One driving period T = 2 pi / omega, in atomic units of time.
    pub fn period(self) -> f64 {
        2.0 * std::f64::consts::PI / self.0
    }
}

/// Classically scaled drive parameters: omega0 = omega n0^3, F0 = F n0^4.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaledParams {
    pub omega0: f64,
    pub f0: f64,
}

/// Scale (omega, F) to the classical parameters of principal quantum number n0.
pub fn scale(omega: Frequency, field_au: f64, n0: u32) -> Result<ScaledParams> {
    if n0 < 1 {
        return Err(Error::Domain("n0 must be at least 1".into()));
    }
    let n = n0 as f64;
    Ok(ScaledParams { omega0: omega.au() * n.powi(3), f0: field_au * n.powi(4) })
}

/// Minimal number of photons to climb from the level (n0, delta) to the
/// continuum edge E = 0: ceil(|E| / omega).
pub fn photon_number(n0: u32, delta: f64, omega: Frequency) -> Result<u32> {
    let n_eff = n0 as f64 - delta;
    if !(n_eff > 0.0) {
        return Err(Error::Domain(format!("n0 = {n0} does not exceed quantum defect {delta}")));
    }
    let binding = 1.0 / (2.0 * n_eff * n_eff);
    Ok((binding / omega.au()).ceil() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ghz_to_au_reference_values() {
        // hand arithmetic from the CODATA constant:
        // 2 pi * 36e9 / 4.134137334e16 = 5.47135e-6
        let w = Frequency::from_ghz(36.0).unwrap();
        assert!((w.au() - 5.4715e-6).abs() / 5.4715e-6 < 1e-4);
        let w = Frequency::from_ghz(8.867).unwrap();
        assert!((w.au() - 1.3475e-6).abs() / 1.3475e-6 < 1e-4);
        // the frequency whose lab value is the atomic unit itself
        let f_unit_ghz = OMEGA_AU_RAD_PER_S / (2.0 * std::f64::consts::PI * 1.0e9);
        let w = Frequency::from_ghz(f_unit_ghz).unwrap();
        assert!((w.au() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ghz_round_trip() {
        for &f in &[0.001, 1.0, 8.867, 36.0, 9.95, 1.0e4] {
            let w = Frequency::from_ghz(f).unwrap();
            assert!((w.to_ghz() - f).abs() / f < 1e-12);
        }
    }

    #[test]
    fn rejects_nonpositive_frequency() {
        assert!(Frequency::from_ghz(0.0).is_err());
        assert!(Frequency::from_ghz(-3.0).is_err());
        assert!(Frequency::from_au(f64::NAN).is_err());
    }

    #[test]
    fn scaling_reference_values() {
        // Rb experiment at 12.6 GHz, n0 = 89: scaled frequency near 1.35
        let w = Frequency::from_ghz(12.6).unwrap();
        let s = scale(w, 0.0, 89).unwrap();
        assert!((s.omega0 - 1.35).abs() < 0.01);

        // identity in atomic units
        let s = scale(Frequency::from_au(1.0).unwrap(), 1.0, 1).unwrap();
        assert_eq!(s.omega0, 1.0);
        assert_eq!(s.f0, 1.0);

        // 36 GHz at n0 = 57
        let w = Frequency::from_ghz(36.0).unwrap();
        let s = scale(w, 0.0, 57).unwrap();
        assert!((s.omega0 - 1.013).abs() < 0.002);
    }

    #[test]
    fn scaling_is_homogeneous() {
        let w = Frequency::from_ghz(36.0).unwrap();
        for &lambda in &[0.5, 2.0, 7.25, 1.0e3] {
            let a = scale(Frequency::from_au(w.au() * lambda).unwrap(), 3.0e-9 * lambda, 63).unwrap();
            let b = scale(w, 3.0e-9, 63).unwrap();
            assert!((a.omega0 - lambda * b.omega0).abs() <= 4.0 * f64::EPSILON * a.omega0);
            assert!((a.f0 - lambda * b.f0).abs() <= 4.0 * f64::EPSILON * a.f0);
        }
    }

    #[test]
    fn photon_number_reference_values() {
        let w36 = Frequency::from_ghz(36.0).unwrap();
        // order 150 ... 10 over n0 = 25 ... 100
        assert_eq!(photon_number(25, 0.0, w36).unwrap(), 147);
        assert_eq!(photon_number(100, 0.0, w36).unwrap(), 10);
        // one-photon ionization of the ground state
        let w = Frequency::from_au(0.5).unwrap();
        assert_eq!(photon_number(1, 0.0, w).unwrap(), 1);
    }

    #[test]
    fn photon_number_rejects_n_below_defect() {
        let w = Frequency::from_ghz(36.0).unwrap();
        assert!(photon_number(3, 3.131, w).is_err());
        assert!(photon_number(3, 3.0, w).is_err());
    }

    #[test]
    fn photon_number_monotonicity() {
        let w36 = Frequency::from_ghz(36.0).unwrap();
        let mut prev = u32::MAX;
        for n0 in 20..=120 {
            let n = photon_number(n0, 0.0, w36).unwrap();
            assert!(n <= prev, "photon number must not increase with n0");
            prev = n;
        }
        let mut prev = u32::MAX;
        for k in 1..=60 {
            let w = Frequency::from_ghz(2.0 * k as f64).unwrap();
            let n = photon_number(40, 0.0, w).unwrap();
            assert!(n <= prev, "photon number must not increase with omega");
            prev = n;
        }
    }
}
