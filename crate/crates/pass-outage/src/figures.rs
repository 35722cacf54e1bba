//! Reproduction of the study's six figures as CSV tables (plus optional
//! charts).
//!
//! Figures 2-4 are outage-vs-SNR sweeps and reuse the fixed sweep schema;
//! figures 5-7 compare the two deployments per user across room sizes
//! `D = 20 m` and `D = 30 m` and carry their own columns, including the
//! CASS-PASS gap the comparison is about:
//!
//! * `fig2` — OMA, both systems, both users, analytic + asymptote (+ MC).
//! * `fig3` — the same under NOMA.
//! * `fig4` — PASS only, OMA vs NOMA, both users.
//! * `fig5` — LoS user under OMA: `snr_db,side_length_m,op_cass_u1,op_pass_u1,gap_u1`.
//! * `fig6` — faded user under OMA: analytic, asymptotes, and the
//!   asymptotic gap.
//! * `fig7` — LoS user under NOMA, same columns as `fig5`.

use crate::chart::Series;
use crate::link::{AccessScheme, ChannelParams};
use crate::outage::{
    gap_u1, gap_u2_asymptotic, outage_asymptotic_u2, outage_probability, AsymptoticModel,
    OutageQuery, SystemKind, UserId,
};
use crate::sweep::{fmt_float, render_csv, run_sweep, SweepConfig};
use crate::{geometry::RoomGeometry, linear_from_db, Error};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
}

impl FigureId {
    pub const ALL: [FigureId; 6] = [
        FigureId::Fig2,
        FigureId::Fig3,
        FigureId::Fig4,
        FigureId::Fig5,
        FigureId::Fig6,
        FigureId::Fig7,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
            FigureId::Fig6 => "fig6",
            FigureId::Fig7 => "fig7",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            FigureId::Fig2 => "outage vs SNR, CASS and PASS, OMA",
            FigureId::Fig3 => "outage vs SNR, CASS and PASS, NOMA",
            FigureId::Fig4 => "outage vs SNR in PASS, OMA vs NOMA",
            FigureId::Fig5 => "LoS-user CASS-PASS outage gap, OMA, D in {20, 30} m",
            FigureId::Fig6 => "faded-user asymptotics and gap, OMA, D in {20, 30} m",
            FigureId::Fig7 => "LoS-user CASS-PASS outage gap, NOMA, D in {20, 30} m",
        }
    }
}

impl FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fig2" => Ok(FigureId::Fig2),
            "fig3" => Ok(FigureId::Fig3),
            "fig4" => Ok(FigureId::Fig4),
            "fig5" => Ok(FigureId::Fig5),
            "fig6" => Ok(FigureId::Fig6),
            "fig7" => Ok(FigureId::Fig7),
            other => Err(format!("unknown figure id '{other}' (expected fig2..fig7)")),
        }
    }
}

/// CSV text plus the curves for the optional chart.
#[derive(Debug, Clone)]
pub struct FigureOutput {
    pub csv: String,
    pub series: Vec<Series>,
}

#[derive(Debug, Clone)]
pub struct FigureConfig {
    pub channel: ChannelParams,
    pub geometry: RoomGeometry,
    pub quadrature_order: usize,
    pub mc_trials: u64,
    pub mc_seed: u64,
}

impl Default for FigureConfig {
    fn default() -> Self {
        Self {
            channel: ChannelParams::default(),
            geometry: RoomGeometry::default(),
            quadrature_order: crate::DEFAULT_QUADRATURE_ORDER,
            mc_trials: 100_000,
            mc_seed: 1,
        }
    }
}

pub fn reproduce(figure: FigureId, config: &FigureConfig) -> Result<FigureOutput, Error> {
    match figure {
        FigureId::Fig2 => sweep_figure(config, SystemKind::ALL.to_vec(), vec![oma()?]),
        FigureId::Fig3 => sweep_figure(config, SystemKind::ALL.to_vec(), vec![noma()?]),
        FigureId::Fig4 => sweep_figure(config, vec![SystemKind::Pass], vec![oma()?, noma()?]),
        FigureId::Fig5 => u1_gap_figure(config, oma()?),
        FigureId::Fig6 => u2_asymptotic_figure(config, oma()?),
        FigureId::Fig7 => u1_gap_figure(config, noma()?),
    }
}

fn oma() -> Result<AccessScheme, Error> {
    AccessScheme::oma(1.0)
}

fn noma() -> Result<AccessScheme, Error> {
    AccessScheme::noma(0.1, 1.0)
}

fn sweep_figure(
    config: &FigureConfig,
    systems: Vec<SystemKind>,
    schemes: Vec<AccessScheme>,
) -> Result<FigureOutput, Error> {
    let sweep = SweepConfig {
        systems: systems.clone(),
        schemes: schemes.clone(),
        geometry: config.geometry,
        channel: config.channel,
        quadrature_order: config.quadrature_order,
        mc_trials: config.mc_trials,
        mc_seed: config.mc_seed,
        ..SweepConfig::default()
    };
    let rows = run_sweep(&sweep)?;

    let mut series: Vec<Series> = Vec::new();
    for &system in &systems {
        for scheme in &schemes {
            for user in UserId::ALL {
                let label = format!("{} {} U{}", system.label(), scheme.label(), user.index());
                let pts: Vec<(f64, f64)> = rows
                    .iter()
                    .filter(|r| {
                        r.system == system && r.scheme.label() == scheme.label() && r.user == user
                    })
                    .map(|r| (r.snr_db, r.op_analytic))
                    .collect();
                series.push(Series {
                    name: label.clone(),
                    points: pts,
                });
                if user == UserId::User2 {
                    let pts = rows
                        .iter()
                        .filter(|r| {
                            r.system == system
                                && r.scheme.label() == scheme.label()
                                && r.user == user
                        })
                        .filter_map(|r| r.op_asymptotic.map(|a| (r.snr_db, a)))
                        .collect();
                    series.push(Series {
                        name: format!("{label} asymptote"),
                        points: pts,
                    });
                }
            }
        }
    }
    Ok(FigureOutput {
        csv: render_csv(&rows),
        series,
    })
}

fn comparison_geometries(config: &FigureConfig) -> Result<Vec<RoomGeometry>, Error> {
    let height = config.geometry.antenna_height_m();
    Ok(vec![
        RoomGeometry::new(20.0, height)?,
        RoomGeometry::new(30.0, height)?,
    ])
}

fn u1_gap_figure(config: &FigureConfig, scheme: AccessScheme) -> Result<FigureOutput, Error> {
    let mut csv = String::from("snr_db,side_length_m,op_cass_u1,op_pass_u1,gap_u1\n");
    let mut series = Vec::new();
    for geometry in comparison_geometries(config)? {
        let side = geometry.side_length_m();
        let mut gap_pts = Vec::new();
        for i in 0..=400 {
            let db = 60.0 + i as f64 * 0.1;
            let rho = linear_from_db(db);
            let op = |system| {
                outage_probability(&OutageQuery {
                    system,
                    scheme,
                    user: UserId::User1,
                    rho_linear: rho,
                    geometry,
                    channel: config.channel,
                    quadrature_order: config.quadrature_order,
                })
            };
            let cass = op(SystemKind::Cass)?;
            let pass = op(SystemKind::Pass)?;
            let gap = gap_u1(&scheme, rho, &geometry, &config.channel);
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                fmt_float(db),
                fmt_float(side),
                fmt_float(cass),
                fmt_float(pass),
                fmt_float(gap)
            ));
            gap_pts.push((db, gap));
        }
        series.push(Series {
            name: format!("gap, D = {side} m"),
            points: gap_pts,
        });
    }
    Ok(FigureOutput { csv, series })
}

fn u2_asymptotic_figure(
    config: &FigureConfig,
    scheme: AccessScheme,
) -> Result<FigureOutput, Error> {
    let mut csv = String::from(
        "snr_db,side_length_m,op_cass_u2,op_pass_u2,op_asym_cass_u2,op_asym_pass_u2,gap_u2_asymptotic\n",
    );
    let mut series = Vec::new();
    for geometry in comparison_geometries(config)? {
        let side = geometry.side_length_m();
        let cass_model = AsymptoticModel::derive(
            SystemKind::Cass,
            &scheme,
            &geometry,
            &config.channel,
            config.quadrature_order,
        )?;
        let pass_model = AsymptoticModel::derive(
            SystemKind::Pass,
            &scheme,
            &geometry,
            &config.channel,
            config.quadrature_order,
        )?;
        let mut gap_pts = Vec::new();
        for db in 60..=120 {
            let rho = linear_from_db(db as f64);
            let op = |system| {
                outage_probability(&OutageQuery {
                    system,
                    scheme,
                    user: UserId::User2,
                    rho_linear: rho,
                    geometry,
                    channel: config.channel,
                    quadrature_order: config.quadrature_order,
                })
            };
            let cass = op(SystemKind::Cass)?;
            let pass = op(SystemKind::Pass)?;
            let gap = gap_u2_asymptotic(
                &scheme,
                rho,
                &geometry,
                &config.channel,
                config.quadrature_order,
            )?;
            csv.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                fmt_float(db as f64),
                fmt_float(side),
                fmt_float(cass),
                fmt_float(pass),
                fmt_float(outage_asymptotic_u2(&cass_model, rho)),
                fmt_float(outage_asymptotic_u2(&pass_model, rho)),
                fmt_float(gap)
            ));
            gap_pts.push((db as f64, gap));
        }
        series.push(Series {
            name: format!("asymptotic gap, D = {side} m"),
            points: gap_pts,
        });
    }
    Ok(FigureOutput { csv, series })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fast_config() -> FigureConfig {
        FigureConfig {
            mc_trials: 0,
            ..FigureConfig::default()
        }
    }

    #[test]
    fn figure_ids_parse_case_insensitively() {
        assert_eq!("Fig2".parse::<FigureId>().unwrap(), FigureId::Fig2);
        assert_eq!("fig7".parse::<FigureId>().unwrap(), FigureId::Fig7);
        assert!("fig8".parse::<FigureId>().is_err());
    }

    #[test]
    fn fig2_has_six_curves() {
        let out = reproduce(FigureId::Fig2, &fast_config()).unwrap();
        assert_eq!(out.series.len(), 6);
        assert!(out.csv.starts_with(crate::sweep::CSV_HEADER));
        // 61 grid points x 2 systems x 2 users.
        assert_eq!(out.csv.lines().count(), 1 + 61 * 4);
    }

    #[test]
    fn fig4_keeps_noma_u1_above_oma_u1() {
        let out = reproduce(FigureId::Fig4, &fast_config()).unwrap();
        let find = |name: &str| {
            out.series
                .iter()
                .find(|s| s.name == name)
                .unwrap_or_else(|| panic!("missing series {name}"))
        };
        let oma_u1 = find("PASS OMA U1");
        let noma_u1 = find("PASS NOMA U1");
        for (a, b) in oma_u1.points.iter().zip(&noma_u1.points) {
            assert_eq!(a.0, b.0);
            assert!(b.1 >= a.1 - 1e-12, "at {} dB", a.0);
        }
    }

    #[test]
    fn fig6_gap_column_is_positive_and_inverse_in_snr() {
        let out = reproduce(FigureId::Fig6, &fast_config()).unwrap();
        let mut rows = out.csv.lines().skip(1);
        let parse = |line: &str| {
            let cells: Vec<&str> = line.split(',').collect();
            (
                cells[0].parse::<f64>().unwrap(),
                cells[6].parse::<f64>().unwrap(),
            )
        };
        let (db0, gap0) = parse(rows.next().unwrap());
        assert_eq!(db0, 60.0);
        assert!(gap0 > 0.0);
        for line in out.csv.lines().skip(1) {
            let (db, gap) = parse(line);
            assert!(gap > 0.0, "gap at {db} dB");
        }
        // 10 dB higher means 10x smaller.
        let col: Vec<(f64, f64)> = out.csv.lines().skip(1).map(parse).collect();
        let at = |db: f64| col.iter().find(|(x, _)| *x == db).unwrap().1;
        assert!((at(70.0) / at(80.0) - 10.0).abs() < 1e-9);
    }

    #[test]
    fn fig5_gap_is_nonnegative_with_interior_maximum() {
        let out = reproduce(FigureId::Fig5, &fast_config()).unwrap();
        for s in &out.series {
            let max = s
                .points
                .iter()
                .cloned()
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap();
            assert!(s.points.iter().all(|&(_, g)| g >= 0.0));
            assert!(max.1 > 0.3, "{}: max {}", s.name, max.1);
            assert!(
                max.0 > s.points.first().unwrap().0 && max.0 < s.points.last().unwrap().0,
                "{}: argmax on the boundary",
                s.name
            );
        }
    }
}
