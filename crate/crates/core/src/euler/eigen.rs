//! Characteristic decomposition of the Euler flux Jacobian.
//!
//! Field order: `u - c`, `u` (entropy), `u` (shear, `D = 4` only), `u + c`.

use super::{enthalpy, velocity};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenSystem<const D: usize> {
    pub lambda: [f64; D],
    /// Rows are left eigenvectors.
    pub left: [[f64; D]; D],
    /// Columns are right eigenvectors: `right[i][k]` is component `i` of field `k`.
    pub right: [[f64; D]; D],
    pub u: f64,
    pub v: f64,
    pub c: f64,
    pub h: f64,
}

/// Eigenvalues at a state, in field order.
#[inline(always)]
pub fn eigenvalues<const D: usize>(u: f64, c: f64) -> [f64; D] {
    let mut l = [u; D];
    l[0] = u - c;
    l[D - 1] = u + c;
    l
}

impl<const D: usize> EigenSystem<D> {
    /// Eigen-system at velocity `(u, v)` and total enthalpy `h`.
    pub fn at(u: f64, v: f64, h: f64, gamma: f64) -> Result<Self> {
        let q2 = if D == 4 { u * u + v * v } else { u * u };
        let c2 = (gamma - 1.0) * (h - 0.5 * q2);
        if !(c2 > 0.0) || !c2.is_finite() {
            return Err(Error::Inadmissible(format!("imaginary sound speed: H = {h}, u = {u}, v = {v}")));
        }
        let c = c2.sqrt();
        let b1 = (gamma - 1.0) / c2;
        let b2 = 0.5 * b1 * q2;
        let mut left = [[0.0; D]; D];
        let mut right = [[0.0; D]; D];
        let e = D - 1;
        // u - c
        right[0][0] = 1.0;
        right[1][0] = u - c;
        right[e][0] = h - u * c;
        left[0][0] = 0.5 * (b2 + u / c);
        left[0][1] = 0.5 * (-b1 * u - 1.0 / c);
        left[0][e] = 0.5 * b1;
        // entropy
        right[0][1] = 1.0;
        right[1][1] = u;
        right[e][1] = 0.5 * q2;
        left[1][0] = 1.0 - b2;
        left[1][1] = b1 * u;
        left[1][e] = -b1;
        // u + c
        right[0][e] = 1.0;
        right[1][e] = u + c;
        right[e][e] = h + u * c;
        left[e][0] = 0.5 * (b2 - u / c);
        left[e][1] = 0.5 * (-b1 * u + 1.0 / c);
        left[e][e] = 0.5 * b1;
        if D == 4 {
            right[2][0] = v;
            right[2][1] = v;
            right[2][e] = v;
            left[0][2] = -0.5 * b1 * v;
            left[1][2] = b1 * v;
            left[e][2] = -0.5 * b1 * v;
            // shear
            right[2][2] = 1.0;
            right[e][2] = v;
            left[2][0] = -v;
            left[2][2] = 1.0;
        }
        Ok(Self { lambda: eigenvalues(u, c), left, right, u, v, c, h })
    }

    /// Project a conservative vector onto field `k`.
    #[inline(always)]
    pub fn project(&self, k: usize, x: &[f64; D]) -> f64 {
        let l = &self.left[k];
        let mut s = 0.0;
        for i in 0..D {
            s += l[i] * x[i];
        }
        s
    }

    /// `sum_k w_k r_k`
    #[inline(always)]
    pub fn compose(&self, w: &[f64; D]) -> [f64; D] {
        let mut out = [0.0; D];
        for i in 0..D {
            let row = &self.right[i];
            let mut s = 0.0;
            for k in 0..D {
                s += row[k] * w[k];
            }
            out[i] = s;
        }
        out
    }
}

/// Linearisation state between two nodes: Roe average when the flow converges
/// (`u_L > u_R`), otherwise the state of the arithmetic conservative average.
pub fn average_state<const D: usize>(ul: &[f64; D], ur: &[f64; D], gamma: f64) -> Result<EigenSystem<D>> {
    let (vl, vr) = (velocity(ul), velocity(ur));
    if vl > vr {
        let (sl, sr) = (ul[0].sqrt(), ur[0].sqrt());
        let w = 1.0 / (sl + sr);
        let u = (sl * vl + sr * vr) * w;
        let v = if D == 4 { (sl * ul[2] / ul[0] + sr * ur[2] / ur[0]) * w } else { 0.0 };
        let h = (sl * enthalpy(ul, gamma) + sr * enthalpy(ur, gamma)) * w;
        EigenSystem::at(u, v, h, gamma)
    } else {
        let mut m = [0.0; D];
        for i in 0..D {
            m[i] = 0.5 * (ul[i] + ur[i]);
        }
        let v = if D == 4 { m[2] / m[0] } else { 0.0 };
        EigenSystem::at(m[1] / m[0], v, enthalpy(&m, gamma), gamma)
    }
}
