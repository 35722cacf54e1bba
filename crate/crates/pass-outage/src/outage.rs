//! Closed-form outage probabilities, high-SNR behavior, and the
//! PASS-vs-CASS performance gaps.
//!
//! The LoS user's outage is an exact distribution-function lookup: with a
//! bounded squared-distance support, `P_out = 1 - F(boundary)` and the
//! outage hits exactly zero once the boundary passes the support maximum.
//! The faded user's outage is
//!
//! ```text
//! P_out = 1 - sum over segments of  int e^(-varpi z^(alpha/2)) f(z) dz
//! ```
//!
//! integrated per piecewise segment with the Chebyshev-Gauss rule. The
//! high-SNR expansion keeps the first term only: `P_out ~ c / rho` with
//! `c = omega * E[Z^(alpha/2)]`, which fixes the diversity order of the
//! faded user at one, while the LoS user's outage is exactly zero beyond a
//! finite SNR threshold.

use crate::geometry::{RoomGeometry, SquaredDistanceDistribution, SquaredDistanceKind};
use crate::link::{los_outage_boundary, threshold_varpi, AccessScheme, ChannelParams, OMA_SLOTS};
use crate::quadrature::QuadratureRule;
use crate::Error;

/// Conventional fixed antenna (CASS) or pinching antenna (PASS).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemKind {
    Cass,
    Pass,
}

impl SystemKind {
    pub const ALL: [SystemKind; 2] = [SystemKind::Cass, SystemKind::Pass];

    pub fn label(&self) -> &'static str {
        match self {
            SystemKind::Cass => "CASS",
            SystemKind::Pass => "PASS",
        }
    }
}

/// Which user a query targets: U1 has the LoS link, U2 the faded one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UserId {
    User1,
    User2,
}

impl UserId {
    pub const ALL: [UserId; 2] = [UserId::User1, UserId::User2];

    pub fn index(&self) -> u8 {
        match self {
            UserId::User1 => 1,
            UserId::User2 => 2,
        }
    }
}

/// Everything needed to evaluate one outage probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutageQuery {
    pub system: SystemKind,
    pub scheme: AccessScheme,
    pub user: UserId,
    pub rho_linear: f64,
    pub geometry: RoomGeometry,
    pub channel: ChannelParams,
    pub quadrature_order: usize,
}

impl OutageQuery {
    /// The squared-distance law this (system, user) pair experiences.
    pub fn distance_kind(&self) -> SquaredDistanceKind {
        match (self.system, self.user) {
            (SystemKind::Cass, UserId::User1) => SquaredDistanceKind::CenterToSameRoom,
            (SystemKind::Cass, UserId::User2) => SquaredDistanceKind::CenterToAdjacentRoom,
            (SystemKind::Pass, UserId::User1) => SquaredDistanceKind::PinchedToSameRoom,
            (SystemKind::Pass, UserId::User2) => SquaredDistanceKind::PinchedToAdjacentRoom,
        }
    }

    pub fn distance_distribution(&self) -> SquaredDistanceDistribution {
        SquaredDistanceDistribution::new(self.distance_kind(), self.geometry)
    }
}

/// Probabilities within a few ulps of zero collapse to exact zero so that
/// the bounded-support cutoff of the LoS user is exact.
const ZERO_SNAP: f64 = 8.0 * f64::EPSILON;

/// Closed-form outage probability for the query.
pub fn outage_probability(q: &OutageQuery) -> Result<f64, Error> {
    if !q.rho_linear.is_finite() || q.rho_linear <= 0.0 {
        return Err(Error::NonPositive {
            name: "rho_linear",
            value: q.rho_linear,
        });
    }
    let dist = q.distance_distribution();
    match q.user {
        UserId::User1 => {
            let boundary = los_outage_boundary(&q.scheme, q.rho_linear, &q.channel);
            if boundary >= dist.support().hi {
                return Ok(0.0);
            }
            let p = 1.0 - dist.cumulative(boundary);
            Ok(if p < ZERO_SNAP {
                0.0
            } else {
                p.clamp(0.0, 1.0)
            })
        }
        UserId::User2 => {
            let varpi = threshold_varpi(&q.scheme, q.rho_linear)?;
            let half_alpha = q.channel.pathloss_exponent() / 2.0;
            let rule = QuadratureRule::chebyshev_gauss(q.quadrature_order)?;
            let mut kept = 0.0;
            for seg in dist.segments() {
                kept += rule.integrate(seg.lo, seg.hi, |z| {
                    (-varpi * z.powf(half_alpha)).exp() * dist.density(z)
                })?;
            }
            Ok((1.0 - kept).clamp(0.0, 1.0))
        }
    }
}

/// First-order high-SNR model: `c / rho` for U2, plus U1's cutoff SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticModel {
    /// Coefficient of the faded user's `c / rho` tail.
    pub u2_coefficient: f64,
    /// SNR beyond which the LoS user's outage is exactly zero.
    pub u1_zero_threshold_rho: f64,
}

impl AsymptoticModel {
    pub fn derive(
        system: SystemKind,
        scheme: &AccessScheme,
        geometry: &RoomGeometry,
        channel: &ChannelParams,
        quadrature_order: usize,
    ) -> Result<Self, Error> {
        Ok(Self {
            u2_coefficient: asymptotic_coefficient(
                system,
                scheme,
                geometry,
                channel,
                quadrature_order,
            )?,
            u1_zero_threshold_rho: zero_outage_threshold_u1(system, scheme, geometry, channel),
        })
    }
}

/// SNR-free weight of the `c / rho` tail: `omega1 = 2^(M R) - 1` under OMA,
/// `omega2 = (2^R - 1) / (a2 - a1 (2^R - 1))` under NOMA. Equals
/// `varpi * rho`.
fn asymptotic_omega(scheme: &AccessScheme) -> Result<f64, Error> {
    threshold_varpi(scheme, 1.0)
}

/// `c = omega * E[Z^(alpha/2)]` over the faded user's distance law, by
/// segment-wise quadrature.
pub fn asymptotic_coefficient(
    system: SystemKind,
    scheme: &AccessScheme,
    geometry: &RoomGeometry,
    channel: &ChannelParams,
    quadrature_order: usize,
) -> Result<f64, Error> {
    let omega = asymptotic_omega(scheme)?;
    let kind = match system {
        SystemKind::Cass => SquaredDistanceKind::CenterToAdjacentRoom,
        SystemKind::Pass => SquaredDistanceKind::PinchedToAdjacentRoom,
    };
    let dist = SquaredDistanceDistribution::new(kind, *geometry);
    let half_alpha = channel.pathloss_exponent() / 2.0;
    let rule = QuadratureRule::chebyshev_gauss(quadrature_order)?;
    let mut moment = 0.0;
    for seg in dist.segments() {
        moment += rule.integrate(seg.lo, seg.hi, |z| z.powf(half_alpha) * dist.density(z))?;
    }
    Ok(omega * moment)
}

/// Evaluates the model's `c / rho` tail. May exceed 1 at low SNR; the value
/// is reported raw.
pub fn outage_asymptotic_u2(model: &AsymptoticModel, rho: f64) -> f64 {
    model.u2_coefficient / rho
}

/// SNR beyond which the LoS user's outage is exactly zero:
/// `support_max * (2^(M R) - 1) / eta` (OMA) or
/// `support_max * (2^R - 1) / (a1 eta)` (NOMA), with the support maximum
/// `d^2 + D^2/2` (CASS) or `d^2 + D^2/4` (PASS).
pub fn zero_outage_threshold_u1(
    system: SystemKind,
    scheme: &AccessScheme,
    geometry: &RoomGeometry,
    channel: &ChannelParams,
) -> f64 {
    let kind = match system {
        SystemKind::Cass => SquaredDistanceKind::CenterToSameRoom,
        SystemKind::Pass => SquaredDistanceKind::PinchedToSameRoom,
    };
    let support_max = SquaredDistanceDistribution::new(kind, *geometry)
        .support()
        .hi;
    match *scheme {
        AccessScheme::Oma { target_rate_bps_hz } => {
            support_max * ((OMA_SLOTS * target_rate_bps_hz).exp2() - 1.0) / channel.eta()
        }
        AccessScheme::Noma {
            power_split_near,
            target_rate_bps_hz,
            ..
        } => support_max * (target_rate_bps_hz.exp2() - 1.0) / (power_split_near * channel.eta()),
    }
}

/// Fitted log-log slope of the outage curve between two SNRs (in dB),
/// negated so a diversity-one curve returns ~1.
#[allow(clippy::too_many_arguments)]
pub fn diversity_order_estimate(
    system: SystemKind,
    scheme: &AccessScheme,
    user: UserId,
    rho_low_db: f64,
    rho_high_db: f64,
    geometry: &RoomGeometry,
    channel: &ChannelParams,
    quadrature_order: usize,
) -> Result<f64, Error> {
    if !(rho_high_db - rho_low_db).is_finite() || rho_high_db <= rho_low_db {
        return Err(Error::InvertedInterval {
            a: rho_low_db,
            b: rho_high_db,
        });
    }
    let op_at = |db: f64| -> Result<f64, Error> {
        let p = outage_probability(&OutageQuery {
            system,
            scheme: *scheme,
            user,
            rho_linear: crate::linear_from_db(db),
            geometry: *geometry,
            channel: *channel,
            quadrature_order,
        })?;
        if p <= 0.0 {
            return Err(Error::ZeroOutageInSlope { rho_db: db });
        }
        Ok(p)
    };
    let lo = op_at(rho_low_db)?;
    let hi = op_at(rho_high_db)?;
    Ok(-(hi.log10() - lo.log10()) / ((rho_high_db - rho_low_db) / 10.0))
}

/// LoS-user outage gap `OP(CASS) - OP(PASS)` at one SNR; nonnegative for
/// every feasible scheme because the pinched antenna's distance law
/// stochastically dominates the centered one.
pub fn gap_u1(
    scheme: &AccessScheme,
    rho: f64,
    geometry: &RoomGeometry,
    channel: &ChannelParams,
) -> f64 {
    let boundary = los_outage_boundary(scheme, rho, channel);
    let pinched =
        SquaredDistanceDistribution::new(SquaredDistanceKind::PinchedToSameRoom, *geometry);
    let centered =
        SquaredDistanceDistribution::new(SquaredDistanceKind::CenterToSameRoom, *geometry);
    pinched.cumulative(boundary) - centered.cumulative(boundary)
}

/// Faded-user asymptotic gap `(c_PASS - c_CASS) / rho`: positive (PASS is
/// slightly worse for U2) and vanishing at high SNR.
pub fn gap_u2_asymptotic(
    scheme: &AccessScheme,
    rho: f64,
    geometry: &RoomGeometry,
    channel: &ChannelParams,
    quadrature_order: usize,
) -> Result<f64, Error> {
    let c_pass = asymptotic_coefficient(
        SystemKind::Pass,
        scheme,
        geometry,
        channel,
        quadrature_order,
    )?;
    let c_cass = asymptotic_coefficient(
        SystemKind::Cass,
        scheme,
        geometry,
        channel,
        quadrature_order,
    )?;
    Ok((c_pass - c_cass) / rho)
}
