//! Writes all six study figures as CSV files (and one SVG chart) into
//! `./figures/`.
//!
//! ```bash
//! cargo run --release --example reproduce_figures
//! ```
//!
//! The `pass-outage reproduce` subcommand does the same one figure at a
//! time with configurable parameters.

use pass_outage::chart::render_log_chart;
use pass_outage::figures::{reproduce, FigureConfig, FigureId};
use std::fs;

fn main() -> std::io::Result<()> {
    let dir = std::path::Path::new("figures");
    fs::create_dir_all(dir)?;

    let config = FigureConfig {
        mc_trials: 50_000,
        ..FigureConfig::default()
    };

    for figure in FigureId::ALL {
        let out = reproduce(figure, &config).expect("reproduction failed");
        let path = dir.join(format!("{}.csv", figure.name()));
        fs::write(&path, &out.csv)?;
        println!("wrote {} ({})", path.display(), figure.description());

        if figure == FigureId::Fig2 {
            let svg = render_log_chart(
                figure.description(),
                "transmit SNR (dB)",
                &out.series,
                1e-12,
            );
            let path = dir.join("fig2.svg");
            fs::write(&path, svg)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}
