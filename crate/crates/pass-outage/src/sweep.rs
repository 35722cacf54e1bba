//! SNR sweeps over the (system, scheme, user) grid with a fixed CSV schema.
//!
//! Schema: `snr_db,system,scheme,user,op_analytic,op_asymptotic,op_mc,mc_stderr,mc_trials`
//! with empty fields where a column does not apply (no asymptote for the
//! LoS user, no MC columns when `mc_trials == 0`). Row order is
//! lexicographic in the tuple (snr_db, system, scheme, user). Floats are
//! written in scientific notation with 13 significant digits; outage values
//! below 1e-12 are written as plain `0` to keep quadrature noise out of the
//! file. Output is byte-identical for identical configurations.

use crate::link::{AccessScheme, ChannelParams};
use crate::montecarlo::{simulate_outage, McConfig, McEstimate};
use crate::outage::{outage_probability, AsymptoticModel, OutageQuery, SystemKind, UserId};
use crate::{geometry::RoomGeometry, Error};

pub const CSV_HEADER: &str =
    "snr_db,system,scheme,user,op_analytic,op_asymptotic,op_mc,mc_stderr,mc_trials";

/// Outage values below this are written as `0`.
pub const CSV_ZERO_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub snr_start_db: f64,
    pub snr_stop_db: f64,
    pub snr_step_db: f64,
    pub systems: Vec<SystemKind>,
    pub schemes: Vec<AccessScheme>,
    pub users: Vec<UserId>,
    pub geometry: RoomGeometry,
    pub channel: ChannelParams,
    pub quadrature_order: usize,
    pub mc_trials: u64,
    pub mc_seed: u64,
}

impl Default for SweepConfig {
    /// 60..=120 dB in 1 dB steps over every case, analytic only.
    fn default() -> Self {
        Self {
            snr_start_db: 60.0,
            snr_stop_db: 120.0,
            snr_step_db: 1.0,
            systems: SystemKind::ALL.to_vec(),
            schemes: vec![
                AccessScheme::oma(1.0).expect("static scheme"),
                AccessScheme::noma(0.1, 1.0).expect("static scheme"),
            ],
            users: UserId::ALL.to_vec(),
            geometry: RoomGeometry::default(),
            channel: ChannelParams::default(),
            quadrature_order: crate::DEFAULT_QUADRATURE_ORDER,
            mc_trials: 0,
            mc_seed: 1,
        }
    }
}

impl SweepConfig {
    pub fn snr_grid_db(&self) -> Vec<f64> {
        let steps = ((self.snr_stop_db - self.snr_start_db) / self.snr_step_db + 1e-9) as usize;
        (0..=steps)
            .map(|k| self.snr_start_db + k as f64 * self.snr_step_db)
            .collect()
    }

    fn validate(&self) -> Result<(), Error> {
        if !self.snr_step_db.is_finite() || self.snr_step_db <= 0.0 {
            return Err(Error::NonPositive {
                name: "snr_step_db",
                value: self.snr_step_db,
            });
        }
        if self.snr_start_db > self.snr_stop_db {
            return Err(Error::InvertedInterval {
                a: self.snr_start_db,
                b: self.snr_stop_db,
            });
        }
        if self.systems.is_empty() {
            return Err(Error::EmptySelection { what: "systems" });
        }
        if self.schemes.is_empty() {
            return Err(Error::EmptySelection { what: "schemes" });
        }
        if self.users.is_empty() {
            return Err(Error::EmptySelection { what: "users" });
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub snr_db: f64,
    pub system: SystemKind,
    pub scheme: AccessScheme,
    pub user: UserId,
    pub op_analytic: f64,
    pub op_asymptotic: Option<f64>,
    pub mc: Option<McEstimate>,
}

/// Evaluates the whole grid. Rows come back already in CSV order.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>, Error> {
    config.validate()?;
    let grid = config.snr_grid_db();
    let mut rows = Vec::new();
    for &system in &config.systems {
        for scheme in &config.schemes {
            // One tail model per (system, scheme); reused across the grid.
            let model = AsymptoticModel::derive(
                system,
                scheme,
                &config.geometry,
                &config.channel,
                config.quadrature_order,
            )?;
            for &user in &config.users {
                for &snr_db in &grid {
                    let q = OutageQuery {
                        system,
                        scheme: *scheme,
                        user,
                        rho_linear: crate::linear_from_db(snr_db),
                        geometry: config.geometry,
                        channel: config.channel,
                        quadrature_order: config.quadrature_order,
                    };
                    let op_analytic = outage_probability(&q)?;
                    let op_asymptotic = match user {
                        UserId::User1 => None,
                        UserId::User2 => {
                            Some(crate::outage::outage_asymptotic_u2(&model, q.rho_linear))
                        }
                    };
                    let mc = if config.mc_trials > 0 {
                        Some(simulate_outage(
                            &q,
                            &McConfig::new(config.mc_trials, config.mc_seed),
                        )?)
                    } else {
                        None
                    };
                    rows.push(SweepRow {
                        snr_db,
                        system,
                        scheme: *scheme,
                        user,
                        op_analytic,
                        op_asymptotic,
                        mc,
                    });
                }
            }
        }
    }
    rows.sort_by(|a, b| {
        a.snr_db
            .partial_cmp(&b.snr_db)
            .expect("finite snr")
            .then(a.system.label().cmp(b.system.label()))
            .then(a.scheme.label().cmp(b.scheme.label()))
            .then(a.user.index().cmp(&b.user.index()))
    });
    Ok(rows)
}

/// Scientific notation with 13 significant digits; exact zero as `0`.
pub fn fmt_float(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v:.12e}")
    }
}

fn fmt_op(v: f64) -> String {
    if v < CSV_ZERO_FLOOR {
        "0".to_string()
    } else {
        fmt_float(v)
    }
}

pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let asym = r.op_asymptotic.map(fmt_op).unwrap_or_default();
        let (mc, se, trials) = match &r.mc {
            Some(est) => (
                fmt_op(est.p_hat),
                fmt_float(est.stderr),
                est.trials.to_string(),
            ),
            None => (String::new(), String::new(), String::new()),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            fmt_float(r.snr_db),
            r.system.label(),
            r.scheme.label(),
            r.user.index(),
            fmt_op(r.op_analytic),
            asym,
            mc,
            se,
            trials
        ));
    }
    out
}
