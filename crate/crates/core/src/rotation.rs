//! Rotation representations and sphere geometry.
//!
//! Unit quaternions double-cover SO(3): `q` and `-q` give the same rotation,
//! and rotations with angle `w < pi` have a unique representative in the
//! upper hemisphere `q0 > 0`. Points with `q0 = 0` (angle `pi`) have no such
//! representative; conversions signal that instead of picking a sign.
//! Sphere points generalize to `S^{M-1}` for the cap machinery: the set
//! `{p : p_1 >= r}` is the closed geodesic ball of radius `arccos(r) < pi/2`
//! around the north pole.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RotationError {
    #[error("quaternion norm {0} departs from 1 beyond 1e-12")]
    NotUnitQuaternion(f64),
    #[error("axis norm {0} departs from 1 beyond 1e-12")]
    NotUnitAxis(f64),
    #[error("angle {0} outside [0, pi]")]
    AngleRange(f64),
    #[error("matrix is not a rotation: {0}")]
    NotRotation(String),
    #[error("rotation angle is pi: no unique hemisphere representative")]
    EquatorAmbiguity,
    #[error("point norm {0} departs from 1 beyond 1e-12")]
    NotUnitPoint(f64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("cap parameter {0} outside (0, 1)")]
    CapParameter(f64),
    #[error("point is antipodal to the pole: radial chart undefined")]
    Antipode,
    #[error("vector is not tangent at the base point (v.base = {0})")]
    NotTangent(f64),
    #[error("tangent vector norm {0} exceeds the chart radius pi")]
    TangentTooLong(f64),
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Unit quaternion, scalar-first `(q0, q1, q2, q3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion {
    q: [f64; 4],
}

impl UnitQuaternion {
    pub fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Result<Self, RotationError> {
        let n = norm(&[q0, q1, q2, q3]);
        if (n - 1.0).abs() > 1e-12 {
            return Err(RotationError::NotUnitQuaternion(n));
        }
        Ok(Self { q: [q0, q1, q2, q3] })
    }

    pub fn identity() -> Self {
        Self { q: [1.0, 0.0, 0.0, 0.0] }
    }

    pub fn components(&self) -> [f64; 4] {
        self.q
    }

    pub fn scalar_part(&self) -> f64 {
        self.q[0]
    }

    pub fn negate(&self) -> Self {
        Self { q: [-self.q[0], -self.q[1], -self.q[2], -self.q[3]] }
    }

    /// Hamilton product, right-handed convention with `(1,0,0,0)` identity.
    pub fn hamilton(&self, other: &Self) -> Self {
        let [a0, a1, a2, a3] = self.q;
        let [b0, b1, b2, b3] = other.q;
        Self {
            q: [
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            ],
        }
    }

    /// Angle `w = 2 arccos(q0)` of the represented rotation (hemisphere rep).
    pub fn angle(&self) -> f64 {
        2.0 * self.q[0].clamp(-1.0, 1.0).acos()
    }
}

/// Axis-angle pair with angle in `[0, pi]` and unit axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    pub angle: f64,
    pub axis: [f64; 3],
}

impl AxisAngle {
    pub fn new(angle: f64, axis: [f64; 3]) -> Result<Self, RotationError> {
        if !(0.0..=std::f64::consts::PI).contains(&angle) {
            return Err(RotationError::AngleRange(angle));
        }
        let n = norm(&axis);
        if (n - 1.0).abs() > 1e-12 {
            return Err(RotationError::NotUnitAxis(n));
        }
        Ok(Self { angle, axis })
    }
}

/// Hemisphere representative of the rotation `(w, n)`:
/// `q0 = cos(w/2) >= 0`, vector part `sin(w/2) n`.
pub fn axisangle_to_quat(aa: &AxisAngle) -> UnitQuaternion {
    let half = 0.5 * aa.angle;
    let (s, c) = half.sin_cos();
    UnitQuaternion { q: [c, s * aa.axis[0], s * aa.axis[1], s * aa.axis[2]] }
}

/// 3x3 orthogonal matrix with determinant +1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix {
    m: [[f64; 3]; 3],
}

impl RotationMatrix {
    pub fn new(m: [[f64; 3]; 3]) -> Result<Self, RotationError> {
        // R^T R = I within 1e-10
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for k in 0..3 {
                    s += m[k][i] * m[k][j];
                }
                let target = if i == j { 1.0 } else { 0.0 };
                if (s - target).abs() > 1e-10 {
                    return Err(RotationError::NotRotation(format!(
                        "(R^T R)[{i}][{j}] = {s}, expected {target}"
                    )));
                }
            }
        }
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det - 1.0).abs() > 1e-10 {
            return Err(RotationError::NotRotation(format!("det = {det}")));
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        Self { m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] }
    }

    pub fn entries(&self) -> &[[f64; 3]; 3] {
        &self.m
    }

    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        let mut out = [0.0; 3];
        for i in 0..3 {
            out[i] = self.m[i][0] * v[0] + self.m[i][1] * v[1] + self.m[i][2] * v[2];
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    out[i][j] += self.m[i][k] * other.m[k][j];
                }
            }
        }
        Self { m: out }
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                d = d.max((self.m[i][j] - other.m[i][j]).abs());
            }
        }
        d
    }
}

/// Conjugation map `v -> q v q^{-1}`, expanded into the standard matrix.
/// `q` and `-q` produce the same matrix.
pub fn quat_to_rotmat(q: &UnitQuaternion) -> RotationMatrix {
    let [w, x, y, z] = q.components();
    RotationMatrix {
        m: [
            [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - z * w), 2.0 * (x * z + y * w)],
            [2.0 * (x * y + z * w), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - x * w)],
            [2.0 * (x * z - y * w), 2.0 * (y * z + x * w), 1.0 - 2.0 * (x * x + y * y)],
        ],
    }
}

/// Upper-hemisphere quaternion of a rotation with angle `w < pi`.
/// Rotations with trace `-1` (angle `pi`) sit on the equator of the double
/// cover and are rejected.
pub fn rotmat_to_quat(r: &RotationMatrix) -> Result<UnitQuaternion, RotationError> {
    let tr = r.trace();
    if tr <= -1.0 + 1e-9 {
        return Err(RotationError::EquatorAmbiguity);
    }
    let w = 0.5 * (1.0 + tr).sqrt();
    let m = r.entries();
    let inv = 1.0 / (4.0 * w);
    let q = UnitQuaternion {
        q: [w, (m[2][1] - m[1][2]) * inv, (m[0][2] - m[2][0]) * inv, (m[1][0] - m[0][1]) * inv],
    };
    let n = norm(&q.q);
    Ok(UnitQuaternion { q: [q.q[0] / n, q.q[1] / n, q.q[2] / n, q.q[3] / n] })
}

/// Unit vector in `R^M`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint {
    coords: Vec<f64>,
}

impl SpherePoint {
    pub fn new(coords: Vec<f64>) -> Result<Self, RotationError> {
        let n = norm(&coords);
        if (n - 1.0).abs() > 1e-12 {
            return Err(RotationError::NotUnitPoint(n));
        }
        Ok(Self { coords })
    }

    /// `(1, 0, ..., 0)`.
    pub fn north_pole(dim: usize) -> Self {
        let mut coords = vec![0.0; dim];
        coords[0] = 1.0;
        Self { coords }
    }

    pub fn from_quat(q: &UnitQuaternion) -> Self {
        Self { coords: q.components().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// First coordinate, the height over the equator of the cap condition.
    pub fn first(&self) -> f64 {
        self.coords[0]
    }
}

/// `arccos(p . q)`, the great-circle distance in `[0, pi]`.
pub fn geodesic_dist(p: &SpherePoint, q: &SpherePoint) -> Result<f64, RotationError> {
    if p.dim() != q.dim() {
        return Err(RotationError::DimMismatch(p.dim(), q.dim()));
    }
    Ok(dot(p.coords(), q.coords()).clamp(-1.0, 1.0).acos())
}

/// Closed-cap membership `p_1 >= r`, `r in (0, 1)`.
pub fn in_cap(p: &SpherePoint, r: f64) -> Result<bool, RotationError> {
    if !(0.0 < r && r < 1.0) {
        return Err(RotationError::CapParameter(r));
    }
    Ok(p.first() >= r)
}

/// Polar radius `arccos(p_1)` about the north pole; undefined at the
/// antipode.
pub fn radial_coordinate(p: &SpherePoint) -> Result<f64, RotationError> {
    if p.first() <= -1.0 + 1e-12 {
        return Err(RotationError::Antipode);
    }
    Ok(p.first().clamp(-1.0, 1.0).acos())
}

/// Great-circle exponential map: `cos|v| base + sin|v| v/|v|` for a tangent
/// vector `v` (`v . base = 0`).
pub fn exp_map(base: &SpherePoint, v: &[f64]) -> Result<SpherePoint, RotationError> {
    if v.len() != base.dim() {
        return Err(RotationError::DimMismatch(v.len(), base.dim()));
    }
    let nv = norm(v);
    let tangency = dot(base.coords(), v);
    if tangency.abs() > 1e-10 * (1.0 + nv) {
        return Err(RotationError::NotTangent(tangency));
    }
    if nv >= std::f64::consts::PI {
        return Err(RotationError::TangentTooLong(nv));
    }
    if nv == 0.0 {
        return Ok(base.clone());
    }
    let (s, c) = nv.sin_cos();
    let coords: Vec<f64> = base
        .coords()
        .iter()
        .zip(v)
        .map(|(b, t)| c * b + s * t / nv)
        .collect();
    // renormalize against rounding so the invariant holds exactly enough
    let n = norm(&coords);
    Ok(SpherePoint { coords: coords.into_iter().map(|x| x / n).collect() })
}

/// Spherical linear interpolation between two unit vectors, `s in [0, 1]`.
/// Stays inside any cap containing both endpoints (geodesic convexity for
/// radius < pi/2).
pub fn slerp(a: &SpherePoint, b: &SpherePoint, s: f64) -> Result<SpherePoint, RotationError> {
    if a.dim() != b.dim() {
        return Err(RotationError::DimMismatch(a.dim(), b.dim()));
    }
    let omega = dot(a.coords(), b.coords()).clamp(-1.0, 1.0).acos();
    if omega < 1e-12 {
        return Ok(a.clone());
    }
    let so = omega.sin();
    let (wa, wb) = (((1.0 - s) * omega).sin() / so, (s * omega).sin() / so);
    let coords: Vec<f64> = a.coords().iter().zip(b.coords()).map(|(x, y)| wa * x + wb * y).collect();
    let n = norm(&coords);
    Ok(SpherePoint { coords: coords.into_iter().map(|x| x / n).collect() })
}
