//! Conformance between the hand-substituted t-domain segment forms and the
//! generic segment integrator, with one form written out locally as an
//! independent cross-check.

use pass_outage::geometry::{RoomGeometry, SquaredDistanceDistribution, SquaredDistanceKind};
use pass_outage::link::{threshold_varpi, AccessScheme, ChannelParams};
use pass_outage::quadrature::QuadratureRule;
use pass_outage::validate::conformance_suite;
use std::f64::consts::FRAC_PI_2;

/// The first faded-segment form of the centered system, written out here
/// by hand: coefficient D^2/8 (half-width), midpoint d^2 + 3 D^2/8, bracket
/// pi/2 - asin(sqrt(2/(t+3))), square-root weight folded in. Its node sum
/// over 1/D^2 must equal the generic integral of
/// exp(-varpi z^(alpha/2)) f(z) over [d^2 + D^2/4, d^2 + D^2/2] at rounding
/// level.
#[test]
fn first_segment_form_written_out_locally() {
    let geometry = RoomGeometry::new(20.0, 5.0).unwrap();
    let channel = ChannelParams::default();
    let scheme = AccessScheme::oma(1.0).unwrap();
    let rho = 1e8;
    let varpi = threshold_varpi(&scheme, rho).unwrap();
    let alpha = channel.pathloss_exponent();
    let side = geometry.side_length_m();
    let dd = side * side;
    let d2 = geometry.antenna_height_m() * geometry.antenna_height_m();

    let rule = QuadratureRule::chebyshev_gauss(100).unwrap();
    let explicit: f64 = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .map(|(&t, &w)| {
            let z = dd / 8.0 * t + d2 + 3.0 * dd / 8.0;
            w * (dd / 8.0)
                * (-varpi * z.powf(alpha / 2.0)).exp()
                * (FRAC_PI_2 - (2.0 / (t + 3.0)).sqrt().asin())
                * (1.0 - t * t).sqrt()
        })
        .sum::<f64>()
        / dd;

    let dist =
        SquaredDistanceDistribution::new(SquaredDistanceKind::CenterToAdjacentRoom, geometry);
    let seg = dist.segments().next().unwrap();
    assert_eq!((seg.lo, seg.hi), (d2 + dd / 4.0, d2 + dd / 2.0));
    let generic = rule
        .integrate(seg.lo, seg.hi, |z| {
            (-varpi * z.powf(alpha / 2.0)).exp() * dist.pdf(z).unwrap()
        })
        .unwrap();

    assert!(
        (explicit - generic).abs() < 1e-12,
        "explicit {explicit} vs generic {generic}"
    );
}

/// All sixteen segment forms (three centered + five pinched, under both
/// threshold coefficients) agree at 1e-12, across geometries.
#[test]
fn all_segment_forms_agree_across_geometries() {
    for (side, height) in [(20.0, 5.0), (30.0, 5.0), (7.0, 3.0)] {
        let geometry = RoomGeometry::new(side, height).unwrap();
        let checks = conformance_suite(&geometry, &ChannelParams::default()).unwrap();
        assert_eq!(checks.len(), 16);
        for c in &checks {
            assert!(
                c.passed(),
                "D={side} d={height} {}: {:.3e}",
                c.name,
                c.statistic
            );
        }
    }
}

/// The segment decomposition reassembles the faded user's outage: summing
/// the generic segment integrals and subtracting from one reproduces
/// `outage_probability` bit-for-bit at the same order.
#[test]
fn segment_sum_reassembles_the_outage_probability() {
    use pass_outage::outage::{outage_probability, OutageQuery, SystemKind, UserId};
    let geometry = RoomGeometry::default();
    let channel = ChannelParams::default();
    let scheme = AccessScheme::noma(0.1, 1.0).unwrap();
    let rho = 1e9;
    let varpi = threshold_varpi(&scheme, rho).unwrap();
    let rule = QuadratureRule::chebyshev_gauss(100).unwrap();
    let dist =
        SquaredDistanceDistribution::new(SquaredDistanceKind::PinchedToAdjacentRoom, geometry);
    let mut kept = 0.0;
    for seg in dist.segments() {
        kept += rule
            .integrate(seg.lo, seg.hi, |z| {
                (-varpi * z.powf(3.0)).exp() * dist.pdf(z).unwrap()
            })
            .unwrap();
    }
    let reassembled = (1.0 - kept).clamp(0.0, 1.0);
    let direct = outage_probability(&OutageQuery {
        system: SystemKind::Pass,
        scheme,
        user: UserId::User2,
        rho_linear: rho,
        geometry,
        channel,
        quadrature_order: 100,
    })
    .unwrap();
    assert_eq!(reassembled, direct);
}
