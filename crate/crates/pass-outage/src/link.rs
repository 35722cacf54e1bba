//! Physical-layer constants and instantaneous rate models.
//!
//! The line-of-sight user (U1) sees a spherical-wave link with free-space
//! factor `eta = c^2 / (16 pi^2 fc^2)` and squared-distance path loss. The
//! blocked user (U2) sees a Rayleigh-faded link with path-loss exponent
//! `alpha` and no `eta` factor; that asymmetry is part of the model, not a
//! bug. `rho` is the dimensionless transmit SNR.
//!
//! OMA serves the two users in `M = 2` TDMA slots (a 1/M rate pre-log);
//! NOMA superposes them with power fractions `alpha1 < alpha2`,
//! `alpha1 + alpha2 = 1`, and the near user applies SIC.

use crate::Error;
use std::f64::consts::PI;

/// Number of TDMA slots under OMA; one per user.
pub const OMA_SLOTS: f64 = 2.0;

/// Carrier frequency, propagation speed, and NLoS path-loss exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    carrier_frequency_hz: f64,
    speed_of_light_m_s: f64,
    pathloss_exponent: f64,
}

impl ChannelParams {
    pub fn new(
        carrier_frequency_hz: f64,
        speed_of_light_m_s: f64,
        pathloss_exponent: f64,
    ) -> Result<Self, Error> {
        if !carrier_frequency_hz.is_finite() || carrier_frequency_hz <= 0.0 {
            return Err(Error::NonPositive {
                name: "carrier_frequency_hz",
                value: carrier_frequency_hz,
            });
        }
        if !speed_of_light_m_s.is_finite() || speed_of_light_m_s <= 0.0 {
            return Err(Error::NonPositive {
                name: "speed_of_light_m_s",
                value: speed_of_light_m_s,
            });
        }
        if !pathloss_exponent.is_finite() || pathloss_exponent < 2.0 {
            return Err(Error::PathlossExponentTooSmall {
                value: pathloss_exponent,
            });
        }
        Ok(Self {
            carrier_frequency_hz,
            speed_of_light_m_s,
            pathloss_exponent,
        })
    }

    pub fn carrier_frequency_hz(&self) -> f64 {
        self.carrier_frequency_hz
    }

    pub fn speed_of_light_m_s(&self) -> f64 {
        self.speed_of_light_m_s
    }

    pub fn pathloss_exponent(&self) -> f64 {
        self.pathloss_exponent
    }

    /// Free-space factor `eta = c^2 / (16 pi^2 fc^2)`, in m^2.
    pub fn eta(&self) -> f64 {
        let lam_over_4pi = self.speed_of_light_m_s / (4.0 * PI * self.carrier_frequency_hz);
        lam_over_4pi * lam_over_4pi
    }
}

impl Default for ChannelParams {
    /// 10 GHz carrier, c = 3e8 m/s, path-loss exponent 6 (the CLI defaults).
    /// The rounded speed of light reproduces the usual dB cutoffs exactly;
    /// pass the CODATA value to `new` if you need it.
    fn default() -> Self {
        Self {
            carrier_frequency_hz: 1e10,
            speed_of_light_m_s: 3e8,
            pathloss_exponent: 6.0,
        }
    }
}

/// OMA (two-slot TDMA) or power-domain NOMA, with the target rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AccessScheme {
    Oma {
        target_rate_bps_hz: f64,
    },
    Noma {
        /// Power fraction of the near (LoS) user, in (0, 0.5).
        power_split_near: f64,
        /// Power fraction of the far user; `near + far = 1`.
        power_split_far: f64,
        target_rate_bps_hz: f64,
    },
}

impl AccessScheme {
    pub fn oma(target_rate_bps_hz: f64) -> Result<Self, Error> {
        if !target_rate_bps_hz.is_finite() || target_rate_bps_hz <= 0.0 {
            return Err(Error::NonPositive {
                name: "target_rate_bps_hz",
                value: target_rate_bps_hz,
            });
        }
        Ok(AccessScheme::Oma { target_rate_bps_hz })
    }

    /// Builds a NOMA scheme from the near user's power fraction.
    ///
    /// Enforces `0 < near < far` and the feasibility condition
    /// `far - near * (2^rate - 1) > 0`; the latter also guarantees the near
    /// user's SIC stage can decode the far user's signal whenever its own
    /// link supports the target rate.
    pub fn noma(power_split_near: f64, target_rate_bps_hz: f64) -> Result<Self, Error> {
        if !target_rate_bps_hz.is_finite() || target_rate_bps_hz <= 0.0 {
            return Err(Error::NonPositive {
                name: "target_rate_bps_hz",
                value: target_rate_bps_hz,
            });
        }
        if !power_split_near.is_finite() || power_split_near <= 0.0 || power_split_near >= 0.5 {
            return Err(Error::UnorderedPowerSplit {
                near: power_split_near,
            });
        }
        let power_split_far = 1.0 - power_split_near;
        if power_split_far - power_split_near * (target_rate_bps_hz.exp2() - 1.0) <= 0.0 {
            return Err(Error::InfeasiblePowerSplit {
                near: power_split_near,
                target_rate_bps_hz,
            });
        }
        Ok(AccessScheme::Noma {
            power_split_near,
            power_split_far,
            target_rate_bps_hz,
        })
    }

    pub fn target_rate_bps_hz(&self) -> f64 {
        match *self {
            AccessScheme::Oma { target_rate_bps_hz }
            | AccessScheme::Noma {
                target_rate_bps_hz, ..
            } => target_rate_bps_hz,
        }
    }

    pub fn is_noma(&self) -> bool {
        matches!(self, AccessScheme::Noma { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            AccessScheme::Oma { .. } => "OMA",
            AccessScheme::Noma { .. } => "NOMA",
        }
    }
}

/// LoS rate under OMA: `(1/M) log2(1 + eta rho / z1)`.
pub fn rate_los_oma(z1: f64, rho: f64, params: &ChannelParams) -> f64 {
    (1.0 + params.eta() * rho / z1).log2() / OMA_SLOTS
}

/// Faded NLoS rate under OMA: `(1/M) log2(1 + rho |h|^2 z2^(-alpha/2))`.
pub fn rate_nlos_oma(z2: f64, rho: f64, h2sq: f64, params: &ChannelParams) -> f64 {
    let gain = z2.powf(-params.pathloss_exponent() / 2.0);
    (1.0 + rho * h2sq * gain).log2() / OMA_SLOTS
}

/// Near user's own rate under NOMA (after SIC): `log2(1 + a1 rho eta / z)`.
pub fn rate_noma_near(
    z: f64,
    rho: f64,
    params: &ChannelParams,
    scheme: &AccessScheme,
) -> Result<f64, Error> {
    let AccessScheme::Noma {
        power_split_near, ..
    } = scheme
    else {
        return Err(Error::ModeMismatch { expected: "NOMA" });
    };
    Ok((1.0 + power_split_near * rho * params.eta() / z).log2())
}

/// Rate at which the near user decodes the far user's signal before SIC.
pub fn rate_noma_sic(
    z: f64,
    rho: f64,
    params: &ChannelParams,
    scheme: &AccessScheme,
) -> Result<f64, Error> {
    let AccessScheme::Noma {
        power_split_near,
        power_split_far,
        ..
    } = scheme
    else {
        return Err(Error::ModeMismatch { expected: "NOMA" });
    };
    let g = rho * params.eta() / z;
    Ok((1.0 + power_split_far * g / (power_split_near * g + 1.0)).log2())
}

/// Far user's rate under NOMA, treating the near user's signal as
/// interference.
pub fn rate_noma_far(
    z: f64,
    rho: f64,
    h2sq: f64,
    params: &ChannelParams,
    scheme: &AccessScheme,
) -> Result<f64, Error> {
    let AccessScheme::Noma {
        power_split_near,
        power_split_far,
        ..
    } = scheme
    else {
        return Err(Error::ModeMismatch { expected: "NOMA" });
    };
    let g = rho * h2sq * z.powf(-params.pathloss_exponent() / 2.0);
    Ok((1.0 + power_split_far * g / (power_split_near * g + 1.0)).log2())
}

/// Fading threshold coefficient: the far user is in outage iff
/// `|h|^2 < varpi * z^(alpha/2)`.
///
/// OMA: `(2^(M R) - 1) / rho`. NOMA: `(2^R - 1) / (rho (a2 - a1 (2^R - 1)))`.
pub fn threshold_varpi(scheme: &AccessScheme, rho: f64) -> Result<f64, Error> {
    if !rho.is_finite() || rho <= 0.0 {
        return Err(Error::NonPositive {
            name: "rho",
            value: rho,
        });
    }
    match *scheme {
        AccessScheme::Oma { target_rate_bps_hz } => {
            Ok(((OMA_SLOTS * target_rate_bps_hz).exp2() - 1.0) / rho)
        }
        AccessScheme::Noma {
            power_split_near,
            power_split_far,
            target_rate_bps_hz,
        } => {
            let gamma = target_rate_bps_hz.exp2() - 1.0;
            let denom = power_split_far - power_split_near * gamma;
            if denom <= 0.0 {
                return Err(Error::InfeasiblePowerSplit {
                    near: power_split_near,
                    target_rate_bps_hz,
                });
            }
            Ok(gamma / (rho * denom))
        }
    }
}

/// Squared-distance boundary for the LoS user: outage iff `Z > boundary`.
///
/// OMA: `eta rho / (2^(M R) - 1)`. NOMA: `a1 eta rho / (2^R - 1)`.
pub fn los_outage_boundary(scheme: &AccessScheme, rho: f64, params: &ChannelParams) -> f64 {
    match *scheme {
        AccessScheme::Oma { target_rate_bps_hz } => {
            params.eta() * rho / ((OMA_SLOTS * target_rate_bps_hz).exp2() - 1.0)
        }
        AccessScheme::Noma {
            power_split_near,
            target_rate_bps_hz,
            ..
        } => power_split_near * params.eta() * rho / (target_rate_bps_hz.exp2() - 1.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params() -> ChannelParams {
        ChannelParams::default()
    }

    fn noma() -> AccessScheme {
        AccessScheme::noma(0.1, 1.0).unwrap()
    }

    #[test]
    fn eta_value_and_scaling() {
        // Independent route: lambda = 3 cm at 10 GHz, eta = (lambda/4pi)^2.
        let oracle = (0.03f64 * 0.03) / (16.0 * PI * PI);
        let eta = params().eta();
        assert!((eta - oracle).abs() <= 1e-10 * oracle);
        assert!((eta - 5.6993e-6).abs() < 1e-9);

        let doubled = ChannelParams::new(2e10, 3e8, 6.0).unwrap();
        assert!((doubled.eta() - eta / 4.0).abs() < 1e-12 * eta);
    }

    #[test]
    fn channel_params_validation() {
        assert!(ChannelParams::new(0.0, 3e8, 6.0).is_err());
        assert!(ChannelParams::new(1e10, 3e8, 1.5).is_err());
    }

    #[test]
    fn oma_rates_spot_values() {
        let p = params();
        assert_eq!(rate_los_oma(25.0, 0.0, &p), 0.0);
        // z1 = eta * rho makes the SNR term exactly 1.
        let rho = 1e7;
        let z1 = p.eta() * rho;
        assert!((rate_los_oma(z1, rho, &p) - 0.5).abs() < 1e-12);
        // Frozen direct evaluation: 0.5 * log2(1 + eta * 1e8 / 25).
        let r = rate_los_oma(25.0, 1e8, &p);
        assert!((r - 2.286).abs() < 1e-3, "{r}");

        assert_eq!(rate_nlos_oma(100.0, 1e8, 0.0, &p), 0.0);
        assert!((rate_nlos_oma(1.0, 1.0, 1.0, &p) - 0.5).abs() < 1e-15);
    }

    /// The OMA far-user outage event `{rate < R}` is exactly
    /// `{|h|^2 < varpi1 * z^(alpha/2)}`.
    #[test]
    fn oma_far_outage_event_inverts_cleanly() {
        let p = params();
        let scheme = AccessScheme::oma(1.0).unwrap();
        let rho = 1e9;
        let varpi = threshold_varpi(&scheme, rho).unwrap();
        for z in [150.0f64, 400.0, 900.0] {
            let crit = varpi * z.powf(3.0);
            for h2sq in [crit * 0.999, crit * 1.001] {
                let in_outage = rate_nlos_oma(z, rho, h2sq, &p) < 1.0;
                assert_eq!(in_outage, h2sq < crit, "z={z} h2sq={h2sq}");
            }
        }
    }

    #[test]
    fn noma_rates_spot_values() {
        let p = params();
        let s = noma();
        assert_eq!(rate_noma_near(25.0, 0.0, &p, &s).unwrap(), 0.0);
        // alpha1 * rho * eta = z makes the rate exactly 1 bit/s/Hz.
        let z = 30.0;
        let rho = z / (0.1 * p.eta());
        assert!((rate_noma_near(z, rho, &p, &s).unwrap() - 1.0).abs() < 1e-12);
        // Frozen direct evaluation at z=25, rho=1e9.
        let r = rate_noma_near(25.0, 1e9, &p, &s).unwrap();
        assert!((r - 4.573).abs() < 1e-3, "{r}");

        // Interference-limited ceiling log2(1 + a2/a1) = log2(10).
        let ceiling = 10f64.log2();
        let r = rate_noma_sic(25.0, 1e18, &p, &s).unwrap();
        assert!((r - ceiling).abs() < 1e-6, "{r}");
        assert_eq!(rate_noma_sic(25.0, 0.0, &p, &s).unwrap(), 0.0);

        assert_eq!(rate_noma_far(100.0, 1e9, 0.0, &p, &s).unwrap(), 0.0);
        let r = rate_noma_far(100.0, 1e9, 1e12, &p, &s).unwrap();
        assert!((r - ceiling).abs() < 1e-3, "{r}");
    }

    /// The pre-SIC decode rate has the same form as the far user's rate with
    /// the fading power replaced by eta and the path-loss power set to 2.
    #[test]
    fn sic_rate_is_far_rate_with_los_gain() {
        let p2 = ChannelParams::new(1e10, 3e8, 2.0).unwrap();
        let p6 = params();
        let s = noma();
        for (z, rho) in [(30.0, 1e8), (120.0, 3e9), (800.0, 5e10)] {
            let sic = rate_noma_sic(z, rho, &p6, &s).unwrap();
            let far = rate_noma_far(z, rho, p6.eta(), &p2, &s).unwrap();
            assert!((sic - far).abs() < 1e-12);
        }
    }

    #[test]
    fn noma_requires_matching_mode() {
        let p = params();
        let oma = AccessScheme::oma(1.0).unwrap();
        assert!(rate_noma_near(25.0, 1e8, &p, &oma).is_err());
        assert!(rate_noma_sic(25.0, 1e8, &p, &oma).is_err());
        assert!(rate_noma_far(25.0, 1e8, 1.0, &p, &oma).is_err());
    }

    #[test]
    fn scheme_construction_enforces_invariants() {
        assert!(AccessScheme::noma(0.5, 1.0).is_err());
        assert!(AccessScheme::noma(0.0, 1.0).is_err());
        assert!(AccessScheme::noma(-0.1, 1.0).is_err());
        // far - near (2^R - 1) = 0.9 - 0.1 * 15 < 0 at R = 4.
        assert!(matches!(
            AccessScheme::noma(0.1, 4.0),
            Err(Error::InfeasiblePowerSplit { .. })
        ));
        let AccessScheme::Noma {
            power_split_near,
            power_split_far,
            ..
        } = noma()
        else {
            unreachable!()
        };
        assert_eq!(power_split_near + power_split_far, 1.0);
    }

    #[test]
    fn varpi_spot_values() {
        let oma = AccessScheme::oma(1.0).unwrap();
        assert!((threshold_varpi(&oma, 1.0).unwrap() - 3.0).abs() < 1e-15);
        assert!((threshold_varpi(&noma(), 1.0).unwrap() - 1.25).abs() < 1e-12);
        // 1/rho scaling.
        let v1 = threshold_varpi(&oma, 1e8).unwrap();
        let v2 = threshold_varpi(&oma, 2e8).unwrap();
        assert!((v1 / v2 - 2.0).abs() < 1e-12);
        assert!(threshold_varpi(&oma, 0.0).is_err());
    }

    #[test]
    fn los_boundary_spot_values() {
        let p = params();
        let oma = AccessScheme::oma(1.0).unwrap();
        // Inverting the boundary at the CASS support maximum lands on the
        // zero-outage SNR.
        let rho_star = 225.0 * 3.0 / p.eta();
        let a = los_outage_boundary(&oma, rho_star, &p);
        assert!((a - 225.0).abs() < 1e-9 * 225.0);
        // Linear in rho.
        let a1 = los_outage_boundary(&oma, 1e8, &p);
        let a2 = los_outage_boundary(&oma, 2e8, &p);
        assert!((a2 - 2.0 * a1).abs() < 1e-9 * a1);
        // NOMA boundary: a1 * eta * rho for R = 1.
        let b = los_outage_boundary(&noma(), 1e8, &p);
        assert!((b - 0.1 * p.eta() * 1e8).abs() < 1e-9 * b);
    }

    /// OMA carries the 1/M pre-log, NOMA does not: at high SNR the LoS rate
    /// grows by 1/2 bit per log2-fold of rho under OMA and 1 bit under NOMA.
    #[test]
    fn prelog_slopes() {
        let p = params();
        let s = noma();
        let (lo, hi) = (1e12, 4e12);
        let oma_slope =
            (rate_los_oma(25.0, hi, &p) - rate_los_oma(25.0, lo, &p)) / (hi / lo).log2();
        let noma_slope = (rate_noma_near(25.0, hi, &p, &s).unwrap()
            - rate_noma_near(25.0, lo, &p, &s).unwrap())
            / (hi / lo).log2();
        assert!((oma_slope - 0.5).abs() < 1e-3, "{oma_slope}");
        assert!((noma_slope - 1.0).abs() < 1e-3, "{noma_slope}");
    }

    proptest! {
        /// Rates are nonnegative and nondecreasing in rho and fading power.
        #[test]
        fn rates_monotone(
            z in 26.0f64..1500.0,
            rho in 1.0f64..1e12,
            h2sq in 0.0f64..50.0,
        ) {
            let p = params();
            let s = noma();
            let factor = 1.7;
            prop_assert!(rate_los_oma(z, rho, &p) >= 0.0);
            prop_assert!(rate_los_oma(z, rho * factor, &p) >= rate_los_oma(z, rho, &p));
            prop_assert!(rate_nlos_oma(z, rho, h2sq, &p) >= 0.0);
            prop_assert!(
                rate_nlos_oma(z, rho, h2sq + 1.0, &p) >= rate_nlos_oma(z, rho, h2sq, &p)
            );
            let near = rate_noma_near(z, rho, &p, &s).unwrap();
            prop_assert!(near >= 0.0);
            prop_assert!(rate_noma_near(z, rho * factor, &p, &s).unwrap() >= near);
            let far = rate_noma_far(z, rho, h2sq, &p, &s).unwrap();
            prop_assert!(far >= 0.0);
            prop_assert!(rate_noma_far(z, rho, h2sq + 1.0, &p, &s).unwrap() >= far);
        }
    }
}
