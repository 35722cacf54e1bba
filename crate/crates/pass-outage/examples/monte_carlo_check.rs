//! Analytic outage vs the seeded Monte-Carlo oracle.
//!
//! ```bash
//! cargo run --release --example monte_carlo_check
//! ```

use pass_outage::link::{AccessScheme, ChannelParams};
use pass_outage::montecarlo::{simulate_outage, McConfig};
use pass_outage::outage::{outage_probability, OutageQuery, SystemKind, UserId};
use pass_outage::{geometry::RoomGeometry, linear_from_db};
use std::time::Instant;

fn main() {
    let trials = 1_000_000;
    let seed = 2024;
    println!("{trials} trials per point, seed {seed}\n");
    println!(
        "{:<22} {:>6}  {:>12} {:>12} {:>10} {:>8}",
        "case", "SNR dB", "analytic", "simulated", "stderr", "|z|"
    );

    let start = Instant::now();
    for (system, scheme, label) in [
        (
            SystemKind::Cass,
            AccessScheme::oma(1.0).unwrap(),
            "CASS OMA",
        ),
        (
            SystemKind::Pass,
            AccessScheme::oma(1.0).unwrap(),
            "PASS OMA",
        ),
        (
            SystemKind::Cass,
            AccessScheme::noma(0.1, 1.0).unwrap(),
            "CASS NOMA",
        ),
        (
            SystemKind::Pass,
            AccessScheme::noma(0.1, 1.0).unwrap(),
            "PASS NOMA",
        ),
    ] {
        for user in UserId::ALL {
            for snr_db in [75.0, 90.0] {
                let q = OutageQuery {
                    system,
                    scheme,
                    user,
                    rho_linear: linear_from_db(snr_db),
                    geometry: RoomGeometry::default(),
                    channel: ChannelParams::default(),
                    quadrature_order: 1000,
                };
                let analytic = outage_probability(&q).unwrap();
                let est = simulate_outage(&q, &McConfig::new(trials, seed)).unwrap();
                let z = if est.stderr > 0.0 {
                    (analytic - est.p_hat).abs() / est.stderr
                } else {
                    0.0
                };
                println!(
                    "{:<22} {:>6}  {:>12.6e} {:>12.6e} {:>10.2e} {:>8.2}",
                    format!("{label} U{}", user.index()),
                    snr_db,
                    analytic,
                    est.p_hat,
                    est.stderr,
                    z
                );
            }
        }
    }
    println!("\nelapsed: {:?}", start.elapsed());
}
