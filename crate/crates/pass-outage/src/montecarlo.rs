//! Seeded, scheduling-independent Monte-Carlo outage oracle.
//!
//! Every trial draws its randomness from ChaCha8 streams keyed by
//! `(seed, trial index, substream)`, so trial `i` sees the same numbers no
//! matter how trials are batched or which thread runs them. Three
//! substreams per trial keep the draws independent: the near user's
//! position, the far user's position, and the fading power.
//!
//! Per trial: U1 uniform in room 1, U2 uniform in room 2, `|h|^2`
//! unit-mean exponential (Rayleigh envelope), the antenna at the room
//! center (CASS) or pinched at U1's x-coordinate (PASS); the target user's
//! instantaneous rate is compared against the target rate.

use crate::geometry::{sample_position, squared_distance, Room, SquaredDistanceKind};
use crate::link::{rate_los_oma, rate_nlos_oma, rate_noma_far, rate_noma_near, AccessScheme};
use crate::outage::{OutageQuery, SystemKind, UserId};
use crate::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Trial count, seed, and batch size for one simulation run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub trials: u64,
    pub seed: u64,
    pub batch_size: u64,
}

impl McConfig {
    pub fn new(trials: u64, seed: u64) -> Self {
        Self {
            trials,
            seed,
            batch_size: 65_536,
        }
    }
}

/// Monte-Carlo estimate with its normal-approximation standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub p_hat: f64,
    pub stderr: f64,
    pub trials: u64,
}

const SUBSTREAMS_PER_TRIAL: u64 = 4;
const STREAM_USER1: u64 = 0;
const STREAM_USER2: u64 = 1;
const STREAM_FADING: u64 = 2;

fn trial_stream(seed: u64, trial: u64, substream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial.wrapping_mul(SUBSTREAMS_PER_TRIAL) + substream);
    rng
}

/// Unit-mean exponential via inverse CDF, with `u in (0, 1]` so the log is
/// always finite.
fn exponential_unit_mean<R: Rng>(rng: &mut R) -> f64 {
    let u: f64 = 1.0 - rng.random::<f64>();
    -u.ln()
}

/// Estimates the outage probability of the query by simulation.
pub fn simulate_outage(q: &OutageQuery, mc: &McConfig) -> Result<McEstimate, Error> {
    if mc.trials == 0 || mc.batch_size == 0 {
        return Err(Error::ZeroTrials);
    }
    if !q.rho_linear.is_finite() || q.rho_linear <= 0.0 {
        return Err(Error::NonPositive {
            name: "rho_linear",
            value: q.rho_linear,
        });
    }
    // Surface an infeasible scheme before spending trials.
    crate::link::threshold_varpi(&q.scheme, q.rho_linear)?;

    let batches: Vec<(u64, u64)> = (0..mc.trials)
        .step_by(mc.batch_size as usize)
        .map(|start| (start, (start + mc.batch_size).min(mc.trials)))
        .collect();

    let outages: u64 = batches
        .par_iter()
        .map(|&(start, end)| {
            let mut count = 0u64;
            for trial in start..end {
                if trial_in_outage(q, mc.seed, trial) {
                    count += 1;
                }
            }
            count
        })
        .sum();

    let p_hat = outages as f64 / mc.trials as f64;
    Ok(McEstimate {
        p_hat,
        stderr: (p_hat * (1.0 - p_hat) / mc.trials as f64).sqrt(),
        trials: mc.trials,
    })
}

fn trial_in_outage(q: &OutageQuery, seed: u64, trial: u64) -> bool {
    let mut rng_u1 = trial_stream(seed, trial, STREAM_USER1);
    let u1 = sample_position(Room::One, &q.geometry, &mut rng_u1);

    let antenna = match q.system {
        SystemKind::Cass => q.geometry.center_antenna(),
        SystemKind::Pass => q.geometry.pinched_antenna_at(u1.x_m),
    };

    let rate = match q.user {
        UserId::User1 => {
            let z1 = squared_distance(antenna, u1.point());
            match q.scheme {
                AccessScheme::Oma { .. } => rate_los_oma(z1, q.rho_linear, &q.channel),
                AccessScheme::Noma { .. } => {
                    rate_noma_near(z1, q.rho_linear, &q.channel, &q.scheme)
                        .expect("scheme checked above")
                }
            }
        }
        UserId::User2 => {
            let mut rng_u2 = trial_stream(seed, trial, STREAM_USER2);
            let u2 = sample_position(Room::Two, &q.geometry, &mut rng_u2);
            let mut rng_h = trial_stream(seed, trial, STREAM_FADING);
            let h2sq = exponential_unit_mean(&mut rng_h);
            let z2 = squared_distance(antenna, u2.point());
            match q.scheme {
                AccessScheme::Oma { .. } => rate_nlos_oma(z2, q.rho_linear, h2sq, &q.channel),
                AccessScheme::Noma { .. } => {
                    rate_noma_far(z2, q.rho_linear, h2sq, &q.channel, &q.scheme)
                        .expect("scheme checked above")
                }
            }
        }
    };

    rate < q.scheme.target_rate_bps_hz()
}

/// Draws one squared distance of the given kind; the sampling counterpart
/// of the closed-form laws, used for distribution validation.
pub fn sample_squared_distance<R: Rng + ?Sized>(
    kind: SquaredDistanceKind,
    geometry: &crate::geometry::RoomGeometry,
    rng: &mut R,
) -> f64 {
    let u1 = sample_position(Room::One, geometry, rng);
    match kind {
        SquaredDistanceKind::CenterToSameRoom => {
            squared_distance(geometry.center_antenna(), u1.point())
        }
        SquaredDistanceKind::CenterToAdjacentRoom => {
            let u2 = sample_position(Room::Two, geometry, rng);
            squared_distance(geometry.center_antenna(), u2.point())
        }
        SquaredDistanceKind::PinchedToSameRoom => {
            squared_distance(geometry.pinched_antenna_at(u1.x_m), u1.point())
        }
        SquaredDistanceKind::PinchedToAdjacentRoom => {
            let u2 = sample_position(Room::Two, geometry, rng);
            squared_distance(geometry.pinched_antenna_at(u1.x_m), u2.point())
        }
    }
}

/// Kolmogorov-Smirnov statistic of `samples` against the distribution's
/// CDF. Sorts a copy of the samples.
pub fn ks_statistic(
    dist: &crate::geometry::SquaredDistanceDistribution,
    samples: &mut [f64],
) -> f64 {
    samples.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite samples"));
    let n = samples.len() as f64;
    let mut ks: f64 = 0.0;
    for (i, &x) in samples.iter().enumerate() {
        let f = dist.cumulative(x);
        let lo = i as f64 / n;
        let hi = (i + 1) as f64 / n;
        ks = ks.max((f - lo).abs()).max((f - hi).abs());
    }
    ks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RoomGeometry;
    use crate::link::ChannelParams;
    use crate::outage::{outage_probability, zero_outage_threshold_u1};
    use crate::{linear_from_db, DEFAULT_QUADRATURE_ORDER};

    fn query(system: SystemKind, scheme: AccessScheme, user: UserId, rho: f64) -> OutageQuery {
        OutageQuery {
            system,
            scheme,
            user,
            rho_linear: rho,
            geometry: RoomGeometry::default(),
            channel: ChannelParams::default(),
            quadrature_order: DEFAULT_QUADRATURE_ORDER,
        }
    }

    #[test]
    fn vanishing_snr_means_certain_outage() {
        let q = query(
            SystemKind::Cass,
            AccessScheme::oma(1.0).unwrap(),
            UserId::User2,
            1e-12,
        );
        let est = simulate_outage(&q, &McConfig::new(10_000, 3)).unwrap();
        assert_eq!(est.p_hat, 1.0);
        assert_eq!(est.stderr, 0.0);
    }

    /// No fading on the LoS link: beyond the bounded-support threshold the
    /// simulated outage frequency is exactly zero.
    #[test]
    fn u1_outage_is_exactly_zero_beyond_threshold() {
        let scheme = AccessScheme::oma(1.0).unwrap();
        let rho_star = zero_outage_threshold_u1(
            SystemKind::Cass,
            &scheme,
            &RoomGeometry::default(),
            &ChannelParams::default(),
        );
        let q = query(SystemKind::Cass, scheme, UserId::User1, rho_star * 1.001);
        let est = simulate_outage(&q, &McConfig::new(200_000, 11)).unwrap();
        assert_eq!(est.p_hat, 0.0);
    }

    #[test]
    fn batch_size_does_not_change_the_estimate() {
        let q = query(
            SystemKind::Pass,
            AccessScheme::noma(0.1, 1.0).unwrap(),
            UserId::User2,
            linear_from_db(85.0),
        );
        let mut reference = None;
        for batch_size in [1_000, 7_777, 65_536, 1_000_000] {
            let est = simulate_outage(
                &q,
                &McConfig {
                    trials: 100_000,
                    seed: 5,
                    batch_size,
                },
            )
            .unwrap();
            match reference {
                None => reference = Some(est.p_hat),
                Some(p) => assert_eq!(p, est.p_hat, "batch_size {batch_size}"),
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_the_estimate() {
        let q = query(
            SystemKind::Cass,
            AccessScheme::oma(1.0).unwrap(),
            UserId::User2,
            linear_from_db(80.0),
        );
        let mc = McConfig {
            trials: 100_000,
            seed: 9,
            batch_size: 1_000,
        };
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| simulate_outage(&q, &mc).unwrap());
        let many = rayon::ThreadPoolBuilder::new()
            .num_threads(8)
            .build()
            .unwrap()
            .install(|| simulate_outage(&q, &mc).unwrap());
        assert_eq!(single.p_hat, many.p_hat);
    }

    #[test]
    fn zero_trials_is_an_error() {
        let q = query(
            SystemKind::Cass,
            AccessScheme::oma(1.0).unwrap(),
            UserId::User2,
            1e8,
        );
        assert!(simulate_outage(&q, &McConfig::new(0, 1)).is_err());
    }

    #[test]
    fn simulation_agrees_with_analysis_at_mid_snr() {
        let q = query(
            SystemKind::Cass,
            AccessScheme::oma(1.0).unwrap(),
            UserId::User2,
            linear_from_db(80.0),
        );
        let analytic = outage_probability(&q).unwrap();
        let est = simulate_outage(&q, &McConfig::new(200_000, 17)).unwrap();
        assert!(
            (analytic - est.p_hat).abs() <= 3.0 * est.stderr,
            "analytic {analytic} vs {} (se {})",
            est.p_hat,
            est.stderr
        );
    }

    /// The PASS LoS link depends only on the y-offset, so the simulated
    /// outage matches the one-dimensional law directly.
    #[test]
    fn pass_u1_matches_the_one_dimensional_law() {
        let scheme = AccessScheme::oma(1.0).unwrap();
        let geometry = RoomGeometry::default();
        let channel = ChannelParams::default();
        let rho = linear_from_db(77.0);
        let q = query(SystemKind::Pass, scheme, UserId::User1, rho);
        let est = simulate_outage(&q, &McConfig::new(400_000, 23)).unwrap();
        let boundary = crate::link::los_outage_boundary(&scheme, rho, &channel);
        let dist = crate::geometry::SquaredDistanceDistribution::new(
            SquaredDistanceKind::PinchedToSameRoom,
            geometry,
        );
        let expected = 1.0 - dist.cumulative(boundary);
        assert!(
            (expected - est.p_hat).abs() <= 3.0 * est.stderr,
            "{expected} vs {} (se {})",
            est.p_hat,
            est.stderr
        );
    }

    #[test]
    fn sampled_distances_match_moments_and_support() {
        let geometry = RoomGeometry::default();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let n = 1_000_000;
        let mut sum = 0.0;
        for _ in 0..n {
            let z = sample_squared_distance(
                SquaredDistanceKind::PinchedToSameRoom,
                &geometry,
                &mut rng,
            );
            assert!((25.0..=125.0).contains(&z));
            sum += z;
        }
        let mean = sum / n as f64;
        // E[Z3] = d^2 + D^2/12; sd(Z3) = D^2 / sqrt(180).
        let expected = 25.0 + 400.0 / 12.0;
        let bound = 3.0 * (400.0 / 180f64.sqrt()) / (n as f64).sqrt();
        assert!((mean - expected).abs() < bound, "mean {mean}");
    }

    /// Over 100 independent seeds the studentized error is roughly
    /// standard normal, so its empirical spread sits near one.
    #[test]
    fn estimates_are_calibrated_across_seeds() {
        let q = query(
            SystemKind::Cass,
            AccessScheme::oma(1.0).unwrap(),
            UserId::User2,
            linear_from_db(78.0),
        );
        let p = outage_probability(&q).unwrap();
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        let seeds = 100;
        for seed in 0..seeds {
            let est = simulate_outage(&q, &McConfig::new(20_000, seed)).unwrap();
            let t = (est.p_hat - p) / est.stderr;
            sum += t;
            sum_sq += t * t;
        }
        let n = seeds as f64;
        let sd = ((sum_sq - sum * sum / n) / (n - 1.0)).sqrt();
        assert!(
            (0.8..=1.25).contains(&sd),
            "studentized spread {sd} out of range"
        );
    }
}
