//! High-SNR behavior of the faded user: fitted diversity order and the
//! first-order tail coefficient.
//!
//! ```bash
//! cargo run --release --example diversity_order
//! ```

use pass_outage::link::{AccessScheme, ChannelParams};
use pass_outage::outage::{
    diversity_order_estimate, outage_asymptotic_u2, outage_probability, AsymptoticModel,
    OutageQuery, SystemKind, UserId,
};
use pass_outage::{db_from_linear, geometry::RoomGeometry, linear_from_db};

fn main() {
    let geometry = RoomGeometry::default();
    let channel = ChannelParams::default();
    let order = 2000; // high quadrature order so the fit sees the model, not rule bias

    println!(
        "{:<10} {:>12} {:>16} {:>22} {:>16}",
        "case", "tail coeff", "slope 110-120 dB", "analytic/tail @115 dB", "U1 cutoff"
    );
    for (scheme, tag) in [
        (AccessScheme::oma(1.0).unwrap(), "OMA"),
        (AccessScheme::noma(0.1, 1.0).unwrap(), "NOMA"),
    ] {
        for system in SystemKind::ALL {
            let model =
                AsymptoticModel::derive(system, &scheme, &geometry, &channel, order).unwrap();
            let slope = diversity_order_estimate(
                system,
                &scheme,
                UserId::User2,
                110.0,
                120.0,
                &geometry,
                &channel,
                order,
            )
            .unwrap();
            let rho = linear_from_db(115.0);
            let exact = outage_probability(&OutageQuery {
                system,
                scheme,
                user: UserId::User2,
                rho_linear: rho,
                geometry,
                channel,
                quadrature_order: order,
            })
            .unwrap();
            println!(
                "{:<10} {:>12.4e} {:>16.4} {:>22.4} {:>13.2} dB",
                format!("{} {tag}", system.label()),
                model.u2_coefficient,
                slope,
                exact / outage_asymptotic_u2(&model, rho),
                db_from_linear(model.u1_zero_threshold_rho)
            );
        }
    }
    println!("\nA slope of 1.0 is diversity order one: no spatial diversity for the faded link.");
}
