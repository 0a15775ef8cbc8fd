//! Hermitian eigendecomposition by cyclic Jacobi rotations, and the PSD
//! square root built on top of it.
//!
//! Sides never exceed 32 here, so robustness wins over speed: sweeps stop
//! when the off-diagonal Frobenius norm drops below [`tol::JACOBI_OFF_TOL`],
//! with a hard cap of [`tol::JACOBI_MAX_SWEEPS`] sweeps.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qcore::Op;
use crate::tol;

fn off_diagonal_norm(n: usize, a: &[Complex64]) -> f64 {
    let mut sum = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                sum += a[r * n + c].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Eigendecomposition of a Hermitian matrix given as a row-major slice.
///
/// Returns eigenvalues sorted in descending order and the matching
/// eigenvectors as the columns of a row-major `n × n` matrix.
pub(crate) fn herm_eig_raw(n: usize, m: &[Complex64]) -> Result<(Vec<f64>, Vec<Complex64>)> {
    assert_eq!(m.len(), n * n, "matrix shape");
    let mut dev: f64 = 0.0;
    for r in 0..n {
        for c in r..n {
            dev = dev.max((m[r * n + c] - m[c * n + r].conj()).norm());
        }
    }
    if dev > tol::EIG_HERM_TOL {
        return Err(Error::NotHermitian(dev));
    }

    // Work on the Hermitian average so the tiny allowed asymmetry cannot
    // leak into the rotations.
    let mut a: Vec<Complex64> = vec![Complex64::ZERO; n * n];
    for r in 0..n {
        for c in 0..n {
            a[r * n + c] = 0.5 * (m[r * n + c] + m[c * n + r].conj());
        }
    }
    let mut v = vec![Complex64::ZERO; n * n];
    for r in 0..n {
        v[r * n + r] = Complex64::ONE;
    }

    for _ in 0..tol::JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(n, &a) <= tol::JACOBI_OFF_TOL {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                rotate(n, &mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j]
            .re
            .partial_cmp(&a[i * n + i].re)
            .expect("finite eigenvalues")
    });
    let evals: Vec<f64> = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut vecs = vec![Complex64::ZERO; n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vecs[r * n + new_col] = v[r * n + old_col];
        }
    }
    Ok((evals, vecs))
}

/// One Jacobi rotation annihilating the `(p, q)` entry.
fn rotate(n: usize, a: &mut [Complex64], v: &mut [Complex64], p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r < 1e-300 {
        return;
    }
    let phase = apq / r;
    let phase_conj = phase.conj();
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s * phase_conj * akq;
        a[k * n + q] = s * akp + c * phase_conj * akq;
        a[p * n + k] = a[k * n + p].conj();
        a[q * n + k] = a[k * n + q].conj();
    }
    a[p * n + p] = Complex64::new(c * c * app + s * s * aqq - 2.0 * s * c * r, 0.0);
    a[q * n + q] = Complex64::new(s * s * app + c * c * aqq + 2.0 * s * c * r, 0.0);
    a[p * n + q] = Complex64::ZERO;
    a[q * n + p] = Complex64::ZERO;

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * phase_conj * vkq;
        v[k * n + q] = s * vkp + c * phase_conj * vkq;
    }
}

/// Eigendecomposition of a Hermitian operator.
///
/// Eigenvalues come back sorted in descending order; the second component is
/// the unitary whose columns are the matching eigenvectors.
pub fn herm_eig(h: &Op) -> Result<(Vec<f64>, Op)> {
    let (evals, vecs) = herm_eig_raw(h.side(), h.entries())?;
    let v = Op::new(h.labels().to_vec(), vecs)?;
    Ok((evals, v))
}

/// Positive-semidefinite square root.
///
/// Eigenvalues slightly below zero (floating-point noise) are clamped to
/// zero; anything below [`tol::PSD_SQRT_ERROR_FLOOR`] is rejected.
pub fn psd_sqrt(rho: &Op) -> Result<Op> {
    let n = rho.side();
    let (evals, vecs) = herm_eig_raw(n, rho.entries())?;
    if let Some(&min) = evals.last() {
        if min < tol::PSD_SQRT_ERROR_FLOOR {
            return Err(Error::NotPsd(min));
        }
    }
    let roots: Vec<f64> = evals.iter().map(|&l| l.max(0.0).sqrt()).collect();
    // V √Λ V†, then symmetrize to keep the result exactly Hermitian.
    let mut m = vec![Complex64::ZERO; n * n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = Complex64::ZERO;
            for (k, &root) in roots.iter().enumerate() {
                acc += vecs[r * n + k] * root * vecs[c * n + k].conj();
            }
            m[r * n + c] = acc;
        }
    }
    for r in 0..n {
        for c in r..n {
            let sym = 0.5 * (m[r * n + c] + m[c * n + r].conj());
            m[r * n + c] = sym;
            m[c * n + r] = sym.conj();
        }
    }
    Op::new(rho.labels().to_vec(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{Ket, Qubit::*};

    #[test]
    fn pauli_z_spectrum() {
        let (evals, v) = herm_eig(&Op::pauli_z(A)).unwrap();
        assert_eq!(evals, vec![1.0, -1.0]);
        assert!(v.unitary_deviation() < 1e-12);
    }

    #[test]
    fn tilted_pauli_spectrum_is_plus_minus_one() {
        // σ_n̂ for n̂ = (sin 1.1 cos 0.4, sin 1.1 sin 0.4, cos 1.1)
        let (st, ct) = (1.1f64.sin(), 1.1f64.cos());
        let (cp, sp) = (0.4f64.cos(), 0.4f64.sin());
        let sigma = &(&Op::pauli_x(A).scaled((st * cp).into())
            + &Op::pauli_y(A).scaled((st * sp).into()))
            + &Op::pauli_z(A).scaled(ct.into());
        let (evals, _) = herm_eig(&sigma).unwrap();
        assert!((evals[0] - 1.0).abs() < 1e-12);
        assert!((evals[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = vec![Complex64::ZERO; 4];
        m[1] = Complex64::new(0.5, 0.0);
        let op = Op::new(vec![A], m).unwrap();
        assert!(matches!(herm_eig(&op), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn reconstructs_random_hermitian() {
        // Deterministic pseudo-random Hermitian matrix, side 8.
        let n = 8;
        let mut m = vec![Complex64::ZERO; n * n];
        let mut x = 0.37f64;
        let mut next = || {
            x = (x * 997.0 + 0.1234).fract();
            x - 0.5
        };
        for r in 0..n {
            for c in r..n {
                let val = if r == c {
                    Complex64::new(next(), 0.0)
                } else {
                    Complex64::new(next(), next())
                };
                m[r * n + c] = val;
                m[c * n + r] = val.conj();
            }
        }
        let (evals, vecs) = herm_eig_raw(n, &m).unwrap();
        // ‖VΛV† − H‖_max
        let mut dev: f64 = 0.0;
        for r in 0..n {
            for c in 0..n {
                let mut acc = Complex64::ZERO;
                for k in 0..n {
                    acc += vecs[r * n + k] * evals[k] * vecs[c * n + k].conj();
                }
                dev = dev.max((acc - m[r * n + c]).norm());
            }
        }
        assert!(dev < 1e-12, "reconstruction deviation {dev}");
    }

    #[test]
    fn eigen_residual_per_pair() {
        let rho = Ket::bell_psi_plus(A, B).outer();
        let (evals, v) = herm_eig(&rho).unwrap();
        let n = rho.side();
        for (k, &lambda) in evals.iter().enumerate() {
            let mut res = 0.0f64;
            for r in 0..n {
                let mut hv = Complex64::ZERO;
                for c in 0..n {
                    hv += rho.get(r, c) * v.get(c, k);
                }
                res += (hv - lambda * v.get(r, k)).norm_sqr();
            }
            assert!(res.sqrt() < 1e-10);
        }
    }

    #[test]
    fn sqrt_of_identity() {
        let i4 = Op::identity(vec![A, B]).unwrap();
        assert!(psd_sqrt(&i4).unwrap().max_abs_diff(&i4) < 1e-13);
    }

    #[test]
    fn sqrt_of_diagonal() {
        let mut m = vec![Complex64::ZERO; 16];
        for (k, val) in [4.0, 1.0, 0.0, 0.0].into_iter().enumerate() {
            m[k * 4 + k] = Complex64::new(val, 0.0);
        }
        let op = Op::new(vec![A, B], m).unwrap();
        let root = psd_sqrt(&op).unwrap();
        for (k, want) in [2.0, 1.0, 0.0, 0.0].into_iter().enumerate() {
            assert!((root.get(k, k).re - want).abs() < 1e-13);
        }
    }

    #[test]
    fn sqrt_is_idempotent_on_projectors() {
        let proj = Ket::plus(A).outer();
        assert!(psd_sqrt(&proj).unwrap().max_abs_diff(&proj.clone()) < 1e-12);
    }

    #[test]
    fn sqrt_rejects_indefinite_input() {
        assert!(matches!(
            psd_sqrt(&Op::pauli_z(A)),
            Err(Error::NotPsd(_))
        ));
    }
}
