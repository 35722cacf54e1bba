//! Zero-outage SNR thresholds of the LoS user.
//!
//! The LoS link has no fading and a bounded squared-distance support, so
//! beyond a finite SNR its outage probability is exactly zero. Run with:
//!
//! ```bash
//! cargo run --release --example thresholds
//! ```

use pass_outage::geometry::RoomGeometry;
use pass_outage::link::{AccessScheme, ChannelParams};
use pass_outage::outage::{
    outage_probability, zero_outage_threshold_u1, OutageQuery, SystemKind, UserId,
};
use pass_outage::{db_from_linear, DEFAULT_QUADRATURE_ORDER};

fn main() {
    let geometry = RoomGeometry::default();
    let channel = ChannelParams::default();
    let oma = AccessScheme::oma(1.0).unwrap();
    let noma = AccessScheme::noma(0.1, 1.0).unwrap();

    println!(
        "room side {} m, antenna height {} m, carrier {} GHz",
        geometry.side_length_m(),
        geometry.antenna_height_m(),
        channel.carrier_frequency_hz() / 1e9
    );
    println!("system scheme  threshold        OP(0.5 dB below)  OP(at threshold)");

    for system in SystemKind::ALL {
        for scheme in [oma, noma] {
            let rho_star = zero_outage_threshold_u1(system, &scheme, &geometry, &channel);
            let op_at = |rho: f64| {
                outage_probability(&OutageQuery {
                    system,
                    scheme,
                    user: UserId::User1,
                    rho_linear: rho,
                    geometry,
                    channel,
                    quadrature_order: DEFAULT_QUADRATURE_ORDER,
                })
                .unwrap()
            };
            println!(
                "{:<6} {:<6}  {:>8.2} dB      {:<16.6e}  {}",
                system.label(),
                scheme.label(),
                db_from_linear(rho_star),
                op_at(rho_star * 10f64.powf(-0.05)),
                op_at(rho_star)
            );
        }
    }
}
