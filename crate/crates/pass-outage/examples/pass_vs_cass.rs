//! How much the sliding antenna buys: the LoS-user outage gap and the
//! faded user's (small) penalty.
//!
//! ```bash
//! cargo run --release --example pass_vs_cass
//! ```

use pass_outage::link::{AccessScheme, ChannelParams};
use pass_outage::outage::{gap_u1, gap_u2_asymptotic, zero_outage_threshold_u1, SystemKind};
use pass_outage::{db_from_linear, geometry::RoomGeometry, linear_from_db};

fn main() {
    let geometry = RoomGeometry::default();
    let channel = ChannelParams::default();

    for (scheme, tag) in [
        (AccessScheme::oma(1.0).unwrap(), "OMA"),
        (AccessScheme::noma(0.1, 1.0).unwrap(), "NOMA"),
    ] {
        // Scan the LoS-user gap OP(CASS) - OP(PASS) on a 0.1 dB grid.
        let mut best = (0.0, 0.0);
        for i in 0..=400 {
            let db = 60.0 + 0.1 * i as f64;
            let g = gap_u1(&scheme, linear_from_db(db), &geometry, &channel);
            if g > best.1 {
                best = (db, g);
            }
        }
        let pass_thr = db_from_linear(zero_outage_threshold_u1(
            SystemKind::Pass,
            &scheme,
            &geometry,
            &channel,
        ));
        let cass_thr = db_from_linear(zero_outage_threshold_u1(
            SystemKind::Cass,
            &scheme,
            &geometry,
            &channel,
        ));
        println!("{tag}:");
        println!(
            "  LoS-user gap peaks at {:.1} dB with value {:.4} (1/pi = {:.4})",
            best.0,
            best.1,
            1.0 / std::f64::consts::PI
        );
        println!("  zero-outage thresholds: PASS {pass_thr:.2} dB, CASS {cass_thr:.2} dB");

        // The faded user pays a small, vanishing asymptotic penalty.
        for db in [90.0, 100.0, 110.0] {
            let g =
                gap_u2_asymptotic(&scheme, linear_from_db(db), &geometry, &channel, 100).unwrap();
            println!("  faded-user asymptotic gap at {db:.0} dB: {g:.3e}");
        }
        println!();
    }
}
