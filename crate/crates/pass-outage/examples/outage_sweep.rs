//! Closed-form outage curves over an SNR grid, with the high-SNR tail.
//!
//! ```bash
//! cargo run --release --example outage_sweep
//! ```
//!
//! The `pass-outage sweep` binary writes the same data as CSV.

use pass_outage::geometry::RoomGeometry;
use pass_outage::link::{AccessScheme, ChannelParams};
use pass_outage::outage::{SystemKind, UserId};
use pass_outage::sweep::{run_sweep, SweepConfig};

fn main() {
    let config = SweepConfig {
        snr_start_db: 60.0,
        snr_stop_db: 110.0,
        snr_step_db: 5.0,
        systems: SystemKind::ALL.to_vec(),
        schemes: vec![AccessScheme::oma(1.0).unwrap()],
        users: UserId::ALL.to_vec(),
        geometry: RoomGeometry::default(),
        channel: ChannelParams::default(),
        quadrature_order: 100,
        mc_trials: 0,
        mc_seed: 1,
    };

    println!("OMA outage probabilities (analytic; U2 tail in parentheses)\n");
    println!(
        "{:>6}  {:>12} {:>12}  {:>12} {:>28}",
        "SNR dB", "CASS U1", "PASS U1", "CASS U2", "PASS U2"
    );
    let rows = run_sweep(&config).unwrap();
    for &snr in &config.snr_grid_db() {
        let cell = |system: SystemKind, user: UserId| {
            rows.iter()
                .find(|r| r.snr_db == snr && r.system == system && r.user == user)
                .unwrap()
        };
        let u2 = |system| {
            let r = cell(system, UserId::User2);
            format!("{:.4e} (~{:.4e})", r.op_analytic, r.op_asymptotic.unwrap())
        };
        println!(
            "{:>6}  {:>12.4e} {:>12.4e}  {:>26} {:>26}",
            snr,
            cell(SystemKind::Cass, UserId::User1).op_analytic,
            cell(SystemKind::Pass, UserId::User1).op_analytic,
            u2(SystemKind::Cass),
            u2(SystemKind::Pass),
        );
    }
    println!("\nNote: the tail approximation c/rho is only meaningful at high SNR.");
}
