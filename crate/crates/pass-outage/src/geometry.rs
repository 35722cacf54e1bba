//! Two-room coordinate model and the exact squared-distance distributions.
//!
//! Room 1 occupies `x in [-D/2, D/2]`, room 2 occupies `x in [D/2, 3D/2]`,
//! both with `y in [-D/2, D/2]` and users on the floor plane `z = 0`. The
//! serving antenna sits at height `d`: either fixed at the center of room 1
//! (`[0, 0, d]`) or pinched onto a waveguide running along the x-axis at the
//! served user's x-coordinate (`[x1, 0, d]`).
//!
//! With users placed uniformly, the squared antenna-user distance follows
//! one of four piecewise laws, each obtained from the area of the room
//! square covered by a disk of radius `sqrt(z - d^2)` around the antenna's
//! floor projection (or, for the pinched cases, from the one-dimensional
//! offsets that remain after the antenna tracks `x1`):
//!
//! * [`SquaredDistanceKind::CenterToSameRoom`] — center antenna to a user in
//!   room 1; support `[d^2, d^2 + D^2/2]`.
//! * [`SquaredDistanceKind::CenterToAdjacentRoom`] — center antenna to a
//!   user in room 2; support `[d^2 + D^2/4, d^2 + 5 D^2/2]`.
//! * [`SquaredDistanceKind::PinchedToSameRoom`] — pinched antenna to the
//!   user it tracks; only the y-offset is random, support
//!   `[d^2, d^2 + D^2/4]`.
//! * [`SquaredDistanceKind::PinchedToAdjacentRoom`] — antenna pinched at
//!   `x1` to the user in room 2; the x-offset is a triangular difference of
//!   two uniforms, support `[d^2, d^2 + 17 D^2/4]`.
//!
//! Piecewise branches are half-open `[lo, hi)`: evaluation at a boundary
//! uses the right branch. All evaluators are pure functions of
//! `(kind, geometry)`; nothing is precomputed or cached.

use crate::Error;
use rand::Rng;
use std::f64::consts::PI;

/// Side length `D` and antenna height `d` of the two-room layout, meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoomGeometry {
    side_length_m: f64,
    antenna_height_m: f64,
}

impl RoomGeometry {
    pub fn new(side_length_m: f64, antenna_height_m: f64) -> Result<Self, Error> {
        if !side_length_m.is_finite() {
            return Err(Error::NonFinite {
                name: "side_length_m",
            });
        }
        if !antenna_height_m.is_finite() {
            return Err(Error::NonFinite {
                name: "antenna_height_m",
            });
        }
        if side_length_m <= 0.0 {
            return Err(Error::NonPositive {
                name: "side_length_m",
                value: side_length_m,
            });
        }
        if antenna_height_m <= 0.0 {
            return Err(Error::NonPositive {
                name: "antenna_height_m",
                value: antenna_height_m,
            });
        }
        Ok(Self {
            side_length_m,
            antenna_height_m,
        })
    }

    pub fn side_length_m(&self) -> f64 {
        self.side_length_m
    }

    pub fn antenna_height_m(&self) -> f64 {
        self.antenna_height_m
    }

    /// Fixed antenna at the ceiling center of room 1.
    pub fn center_antenna(&self) -> Point3 {
        Point3 {
            x_m: 0.0,
            y_m: 0.0,
            z_m: self.antenna_height_m,
        }
    }

    /// Waveguide antenna pinched at the given x-coordinate.
    pub fn pinched_antenna_at(&self, x_m: f64) -> Point3 {
        Point3 {
            x_m,
            y_m: 0.0,
            z_m: self.antenna_height_m,
        }
    }
}

impl Default for RoomGeometry {
    /// 20 m rooms with a 5 m waveguide height (the CLI defaults).
    fn default() -> Self {
        Self {
            side_length_m: 20.0,
            antenna_height_m: 5.0,
        }
    }
}

/// A point in the room coordinate system, meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3 {
    pub x_m: f64,
    pub y_m: f64,
    pub z_m: f64,
}

/// A user location; users always lie in the floor plane `z = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UserPosition {
    pub x_m: f64,
    pub y_m: f64,
}

impl UserPosition {
    pub fn point(&self) -> Point3 {
        Point3 {
            x_m: self.x_m,
            y_m: self.y_m,
            z_m: 0.0,
        }
    }
}

/// Which of the two rooms a user occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Room {
    /// The room containing the antenna, `x in [-D/2, D/2]`.
    One,
    /// The adjacent (blocked) room, `x in [D/2, 3D/2]`.
    Two,
}

/// Euclidean squared distance in m^2.
pub fn squared_distance(a: Point3, b: Point3) -> f64 {
    let dx = a.x_m - b.x_m;
    let dy = a.y_m - b.y_m;
    let dz = a.z_m - b.z_m;
    dx * dx + dy * dy + dz * dz
}

/// Draws a user position uniformly over the given room's floor.
pub fn sample_position<R: Rng + ?Sized>(
    room: Room,
    geometry: &RoomGeometry,
    rng: &mut R,
) -> UserPosition {
    let half = geometry.side_length_m / 2.0;
    let x_range = match room {
        Room::One => (-half, half),
        Room::Two => (half, 3.0 * half),
    };
    UserPosition {
        x_m: rng.random_range(x_range.0..x_range.1),
        y_m: rng.random_range(-half..half),
    }
}

/// Closed interval of squared distances, m^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, z: f64) -> bool {
        z >= self.lo && z <= self.hi
    }
}

/// Selects one of the four squared-distance laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SquaredDistanceKind {
    CenterToSameRoom,
    CenterToAdjacentRoom,
    PinchedToSameRoom,
    PinchedToAdjacentRoom,
}

impl SquaredDistanceKind {
    pub const ALL: [SquaredDistanceKind; 4] = [
        SquaredDistanceKind::CenterToSameRoom,
        SquaredDistanceKind::CenterToAdjacentRoom,
        SquaredDistanceKind::PinchedToSameRoom,
        SquaredDistanceKind::PinchedToAdjacentRoom,
    ];
}

/// One of the four squared-distance laws, evaluable exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquaredDistanceDistribution {
    kind: SquaredDistanceKind,
    geometry: RoomGeometry,
}

impl SquaredDistanceDistribution {
    pub fn new(kind: SquaredDistanceKind, geometry: RoomGeometry) -> Self {
        Self { kind, geometry }
    }

    pub fn kind(&self) -> SquaredDistanceKind {
        self.kind
    }

    pub fn geometry(&self) -> &RoomGeometry {
        &self.geometry
    }

    /// Segment boundaries of the piecewise law, in increasing order.
    /// `boundaries[0]` is the support minimum, the last entry its maximum.
    fn boundaries(&self) -> ([f64; 6], usize) {
        let d2 = self.geometry.antenna_height_m * self.geometry.antenna_height_m;
        let dd = self.geometry.side_length_m * self.geometry.side_length_m;
        let mut b = [0.0; 6];
        let n = match self.kind {
            SquaredDistanceKind::CenterToSameRoom => {
                b[..3].copy_from_slice(&[d2, d2 + dd / 4.0, d2 + dd / 2.0]);
                3
            }
            SquaredDistanceKind::CenterToAdjacentRoom => {
                b[..4].copy_from_slice(&[
                    d2 + dd / 4.0,
                    d2 + dd / 2.0,
                    d2 + 2.25 * dd,
                    d2 + 2.5 * dd,
                ]);
                4
            }
            SquaredDistanceKind::PinchedToSameRoom => {
                b[..2].copy_from_slice(&[d2, d2 + dd / 4.0]);
                2
            }
            SquaredDistanceKind::PinchedToAdjacentRoom => {
                b.copy_from_slice(&[
                    d2,
                    d2 + dd / 4.0,
                    d2 + dd,
                    d2 + 1.25 * dd,
                    d2 + 4.0 * dd,
                    d2 + 4.25 * dd,
                ]);
                6
            }
        };
        (b, n)
    }

    /// Support of the law (squared meters).
    pub fn support(&self) -> Interval {
        let (b, n) = self.boundaries();
        Interval {
            lo: b[0],
            hi: b[n - 1],
        }
    }

    /// The maximal intervals on which the density is a single closed form.
    pub fn segments(&self) -> impl Iterator<Item = Interval> + '_ {
        let (b, n) = self.boundaries();
        (0..n - 1).map(move |i| Interval {
            lo: b[i],
            hi: b[i + 1],
        })
    }

    /// Probability density at `z` (per m^2); zero outside the support.
    pub fn pdf(&self, z: f64) -> Result<f64, Error> {
        if z.is_nan() {
            return Err(Error::NonFinite { name: "z" });
        }
        Ok(self.density(z))
    }

    /// Cumulative probability at `z`; clamps to 0 below and 1 above the
    /// support.
    pub fn cdf(&self, z: f64) -> Result<f64, Error> {
        if z.is_nan() {
            return Err(Error::NonFinite { name: "z" });
        }
        Ok(self.cumulative(z))
    }

    pub(crate) fn density(&self, z: f64) -> f64 {
        let d = self.geometry.side_length_m;
        let dd = d * d;
        let d2 = self.geometry.antenna_height_m * self.geometry.antenna_height_m;
        let zeta = z - d2;
        match self.kind {
            SquaredDistanceKind::CenterToSameRoom => {
                if zeta < 0.0 || zeta >= dd / 2.0 {
                    0.0
                } else if zeta < dd / 4.0 {
                    PI / dd
                } else {
                    // Derivative of the clipped-disk area: the sqrt terms of
                    // the area formula cancel, leaving the arcsine alone.
                    (4.0 * safe_asin(d / (2.0 * zeta.sqrt())) - PI) / dd
                }
            }
            SquaredDistanceKind::CenterToAdjacentRoom => {
                if zeta < dd / 4.0 || zeta >= 2.5 * dd {
                    0.0
                } else if zeta < dd / 2.0 {
                    (PI / 2.0 - safe_asin(d / (2.0 * zeta.sqrt()))) / dd
                } else if zeta < 2.25 * dd {
                    safe_asin(d / (2.0 * zeta.sqrt())) / dd
                } else {
                    let r = zeta.sqrt();
                    (safe_asin(d / (2.0 * r)) + safe_asin(3.0 * d / (2.0 * r)) - PI / 2.0) / dd
                }
            }
            SquaredDistanceKind::PinchedToSameRoom => {
                if zeta < 0.0 || zeta >= dd / 4.0 {
                    0.0
                } else {
                    // Divergent (integrable) at the support minimum.
                    1.0 / (d * zeta.sqrt())
                }
            }
            SquaredDistanceKind::PinchedToAdjacentRoom => {
                if zeta < 0.0 || zeta >= 4.25 * dd {
                    0.0
                } else if zeta < dd / 4.0 {
                    zeta.sqrt() / (dd * d)
                } else if zeta < dd {
                    0.5 / dd
                } else if zeta < 1.25 * dd {
                    let g = sqrt_nonneg(zeta - dd, dd);
                    0.5 / dd - 2.0 * g / (dd * d) + 2.0 * (g / d).atan() / dd
                } else if zeta < 4.0 * dd {
                    let s = sqrt_nonneg(4.0 * zeta - dd, dd);
                    (2.0 * PI - 1.0) / (2.0 * dd) - 2.0 * (s / d).atan() / dd
                } else {
                    let delta = sqrt_nonneg(zeta - 4.0 * dd, dd);
                    let s = sqrt_nonneg(4.0 * zeta - dd, dd);
                    delta / (dd * d) - 0.5 / dd
                        + 2.0 * ((d / s).atan() - (delta / (2.0 * d)).atan()) / dd
                }
            }
        }
    }

    pub(crate) fn cumulative(&self, z: f64) -> f64 {
        let d = self.geometry.side_length_m;
        let dd = d * d;
        let d2 = self.geometry.antenna_height_m * self.geometry.antenna_height_m;
        let zeta = z - d2;
        match self.kind {
            SquaredDistanceKind::CenterToSameRoom => {
                if zeta < 0.0 {
                    0.0
                } else if zeta < dd / 4.0 {
                    // Disk of radius sqrt(zeta) fully inside the square.
                    PI * zeta / dd
                } else if zeta < dd / 2.0 {
                    // Disk area minus the four segments cut off by the walls.
                    let eps = sqrt_nonneg(zeta - dd / 4.0, dd);
                    let hbar = 2.0 * d * eps + 4.0 * zeta * safe_asin(d / (2.0 * zeta.sqrt()));
                    (hbar - PI * zeta) / dd
                } else {
                    1.0
                }
            }
            SquaredDistanceKind::CenterToAdjacentRoom => {
                if zeta < dd / 4.0 {
                    0.0
                } else if zeta < dd / 2.0 {
                    // Lens between the disk and the near wall of room 2.
                    let eps = sqrt_nonneg(zeta - dd / 4.0, dd);
                    (zeta * (PI / 2.0 - safe_asin(d / (2.0 * zeta.sqrt()))) - d * eps / 2.0) / dd
                } else if zeta < 2.25 * dd {
                    // Disk reaches past both near corners of room 2.
                    let eps = sqrt_nonneg(zeta - dd / 4.0, dd);
                    (d * eps / 2.0 - dd / 2.0 + zeta * safe_asin(d / (2.0 * zeta.sqrt()))) / dd
                } else if zeta < 2.5 * dd {
                    // Disk also reaches past the far wall.
                    let r = zeta.sqrt();
                    let eps = sqrt_nonneg(zeta - dd / 4.0, dd);
                    let eps_far = sqrt_nonneg(zeta - 2.25 * dd, dd);
                    let iota = d * eps - dd
                        + 3.0 * d * eps_far
                        + 2.0
                            * zeta
                            * (safe_asin(d / (2.0 * r)) + safe_asin(3.0 * d / (2.0 * r))
                                - PI / 2.0);
                    iota / (2.0 * dd)
                } else {
                    1.0
                }
            }
            SquaredDistanceKind::PinchedToSameRoom => {
                if zeta < 0.0 {
                    0.0
                } else if zeta < dd / 4.0 {
                    2.0 * zeta.sqrt() / d
                } else {
                    1.0
                }
            }
            SquaredDistanceKind::PinchedToAdjacentRoom => {
                // x-offset is triangular on [0, 2D] with peak D; y-offset is
                // uniform. Branches follow the disk radius crossing the
                // triangle's knee (zeta = D^2 + y^2) and its end
                // (zeta = 4 D^2 + y^2).
                if zeta < 0.0 {
                    0.0
                } else if zeta < dd / 4.0 {
                    2.0 * zeta.powf(1.5) / (3.0 * dd * d)
                } else if zeta < dd {
                    zeta / (2.0 * dd) - 1.0 / 24.0
                } else if zeta < 1.25 * dd {
                    let g = sqrt_nonneg(zeta - dd, dd);
                    2.0 * zeta * ((g / d).atan() - d * g / zeta) / dd + zeta / (2.0 * dd)
                        - 4.0 * g.powi(3) / (3.0 * dd * d)
                        - 1.0 / 24.0
                } else if zeta < 4.0 * dd {
                    let s = sqrt_nonneg(4.0 * zeta - dd, dd);
                    zeta * PI / dd
                        - 2.0 * zeta * ((s / d).atan() - d * s / (4.0 * zeta)) / dd
                        - zeta / (2.0 * dd)
                        - 23.0 / 24.0
                } else if zeta < 4.25 * dd {
                    let delta = sqrt_nonneg(zeta - 4.0 * dd, dd);
                    let s = sqrt_nonneg(4.0 * zeta - dd, dd);
                    -23.0 / 24.0 - zeta / (2.0 * dd) + zeta * delta / (dd * d)
                        - delta.powi(3) / (3.0 * dd * d)
                        + s / (2.0 * d)
                        + 2.0 * zeta * ((d / s).atan() - (delta / (2.0 * d)).atan()) / dd
                } else {
                    1.0
                }
            }
        }
    }
}

/// `asin` with the argument clamped into `[-1, 1]` when within 1e-12 of the
/// boundary. Larger violations indicate an internal inconsistency.
fn safe_asin(x: f64) -> f64 {
    if x > 1.0 {
        assert!(x - 1.0 <= 1e-12, "asin argument {x} exceeds 1");
        return std::f64::consts::FRAC_PI_2;
    }
    if x < -1.0 {
        assert!(-1.0 - x <= 1e-12, "asin argument {x} below -1");
        return -std::f64::consts::FRAC_PI_2;
    }
    x.asin()
}

/// Square root that tolerates rounding-level negative inputs relative to
/// the geometry scale.
fn sqrt_nonneg(x: f64, scale: f64) -> f64 {
    if x < 0.0 {
        assert!(x > -1e-9 * scale, "sqrt argument {x} is negative");
        return 0.0;
    }
    x.sqrt()
}
