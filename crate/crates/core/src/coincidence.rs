//! Three numerical coincidences between mass ratios and the calendar.
//! These are the only floating-point computations in the crate.

use crate::check::Check;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CoincidenceInputs {
    /// neutron / proton mass
    pub mass_ratio_np: f64,
    /// electron / proton mass
    pub mass_ratio_ep: f64,
    pub days_per_year: f64,
    pub tilt_degrees: f64,
}

impl Default for CoincidenceInputs {
    fn default() -> Self {
        CoincidenceInputs {
            mass_ratio_np: 1.001378,
            mass_ratio_ep: 0.000544617,
            days_per_year: 365.24,
            tilt_degrees: 23.44,
        }
    }
}

/// `1 + 1/(2·days)`.
pub fn np_value(days: f64) -> f64 {
    1.0 + 1.0 / (2.0 * days)
}

/// `sin(tilt)/(2·days)`.
pub fn ep_value(tilt_degrees: f64, days: f64) -> f64 {
    tilt_degrees.to_radians().sin() / (2.0 * days)
}

pub fn np_coincidence() -> f64 {
    np_value(CoincidenceInputs::default().days_per_year)
}

pub fn ep_coincidence() -> f64 {
    let i = CoincidenceInputs::default();
    ep_value(i.tilt_degrees, i.days_per_year)
}

/// Degrees, minutes and seconds of an angle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Dms {
    pub degrees: u32,
    pub minutes: u32,
    pub seconds: f64,
}

impl Dms {
    pub fn from_degrees(x: f64) -> Dms {
        let degrees = x.trunc();
        let m = (x - degrees) * 60.0;
        let minutes = m.trunc();
        Dms { degrees: degrees as u32, minutes: minutes as u32, seconds: (m - minutes) * 60.0 }
    }

    pub fn to_degrees(self) -> f64 {
        self.degrees as f64 + self.minutes as f64 / 60.0 + self.seconds / 3600.0
    }
}

impl std::fmt::Display for Dms {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}d {}' {:.1}\"", self.degrees, self.minutes, self.seconds)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TiltInversion {
    pub sin_theta: f64,
    pub theta_degrees: f64,
    pub theta_dms: Dms,
}

/// The tilt that would make the electron/proton coincidence exact.
pub fn tilt_inversion_for(i: &CoincidenceInputs) -> TiltInversion {
    let sin_theta = 2.0 * i.days_per_year * i.mass_ratio_ep;
    let theta_degrees = sin_theta.asin().to_degrees();
    TiltInversion { sin_theta, theta_degrees, theta_dms: Dms::from_degrees(theta_degrees) }
}

pub fn tilt_inversion() -> TiltInversion {
    tilt_inversion_for(&CoincidenceInputs::default())
}

fn within(name: &str, printed: f64, got: f64, tol: f64, digits: usize) -> Check {
    Check {
        name: name.to_string(),
        expected: format!("{printed:.digits$} +/- {tol:e}"),
        actual: format!("{got:.prec$}", prec = digits + 3),
        pass: (got - printed).abs() <= tol,
    }
}

/// `coincidence.np`
pub fn np_checks() -> Vec<Check> {
    let i = CoincidenceInputs::default();
    let v = np_coincidence();
    vec![
        within("1 + 1/(2*365.24)", 1.001369, v, 5e-7, 6),
        within("close to m(n)/m(p)", i.mass_ratio_np, v, 1e-5, 6),
    ]
}

/// `coincidence.ep`
pub fn ep_checks() -> Vec<Check> {
    let i = CoincidenceInputs::default();
    let v = ep_coincidence();
    vec![
        within("sin(23.44 deg)/(2*365.24)", 0.000544558, v, 5e-10, 9),
        within("close to m(e)/m(p)", i.mass_ratio_ep, v, 1e-7, 9),
    ]
}

/// `coincidence.tilt`
pub fn tilt_checks() -> Vec<Check> {
    let t = tilt_inversion();
    let printed = Dms { degrees: 23, minutes: 26, seconds: 33.7 };
    let arcsec = (t.theta_degrees - printed.to_degrees()).abs() * 3600.0;
    vec![
        within("sin(theta) = 2*365.24*0.000544617", 0.3978318, t.sin_theta, 5e-8, 7),
        within("theta in degrees", 23.442704, t.theta_degrees, 5e-6, 6),
        Check {
            name: "theta in degrees, minutes, seconds".to_string(),
            expected: format!("{printed} +/- 0.1\""),
            actual: t.theta_dms.to_string(),
            pass: arcsec <= 0.1,
        },
        Check {
            name: "sin(arcsin) round trip".to_string(),
            expected: "< 1e-12".to_string(),
            actual: format!("{:e}", (t.theta_degrees.to_radians().sin() - t.sin_theta).abs()),
            pass: (t.theta_degrees.to_radians().sin() - t.sin_theta).abs() < 1e-12,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn printed_values() {
        assert_eq!(format!("{:.6}", np_coincidence()), "1.001369");
        assert_eq!(format!("{:.9}", ep_coincidence()), "0.000544558");
        let t = tilt_inversion();
        assert_eq!(format!("{:.7}", t.sin_theta), "0.3978318");
        assert!((t.theta_degrees - 23.442704).abs() < 5e-6);
        assert_eq!(t.theta_dms.to_string(), "23d 26' 33.7\"");
    }

    #[test]
    fn limits() {
        assert!((np_value(1e15) - 1.0).abs() < 1e-14);
        assert_eq!(ep_value(0.0, 365.24), 0.0);
    }

    #[test]
    fn all_checks_pass() {
        for c in np_checks().into_iter().chain(ep_checks()).chain(tilt_checks()) {
            assert!(c.pass, "{c}");
        }
    }

    proptest! {
        #[test]
        fn dms_round_trip(x in 0.0f64..90.0) {
            prop_assert!((Dms::from_degrees(x).to_degrees() - x).abs() < 1e-9);
        }

        #[test]
        fn inversion_round_trip(ep in 1e-5f64..1e-3) {
            let i = CoincidenceInputs { mass_ratio_ep: ep, ..CoincidenceInputs::default() };
            let t = tilt_inversion_for(&i);
            prop_assert!((t.theta_degrees.to_radians().sin() - t.sin_theta).abs() < 1e-12);
            prop_assert!((ep_value(t.theta_degrees, i.days_per_year) - ep).abs() < 1e-15);
        }
    }
}
