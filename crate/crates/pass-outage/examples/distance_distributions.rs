//! The four squared-distance laws: supports, densities, and a sampling
//! cross-check.
//!
//! ```bash
//! cargo run --release --example distance_distributions
//! ```

use pass_outage::geometry::{RoomGeometry, SquaredDistanceDistribution, SquaredDistanceKind};
use pass_outage::montecarlo::{ks_statistic, sample_squared_distance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let geometry = RoomGeometry::default();
    println!(
        "rooms {0} x {0} m, antenna height {1} m\n",
        geometry.side_length_m(),
        geometry.antenna_height_m()
    );

    for kind in SquaredDistanceKind::ALL {
        let dist = SquaredDistanceDistribution::new(kind, geometry);
        let support = dist.support();
        println!("{kind:?}");
        println!(
            "  support [{}, {}] m^2, {} segment(s)",
            support.lo,
            support.hi,
            dist.segments().count()
        );

        let probes = [
            support.lo + 0.1 * support.length(),
            support.lo + 0.5 * support.length(),
            support.lo + 0.9 * support.length(),
        ];
        for z in probes {
            println!(
                "  z = {z:>8.2}: pdf {:.6e}  cdf {:.6}",
                dist.pdf(z).unwrap(),
                dist.cdf(z).unwrap()
            );
        }

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut samples: Vec<f64> = (0..200_000)
            .map(|_| sample_squared_distance(kind, &geometry, &mut rng))
            .collect();
        let ks = ks_statistic(&dist, &mut samples);
        println!("  KS vs 2e5 samples: {ks:.5}\n");
    }
}
