use super::CsrMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug)]
pub struct CgOptions {
    /// Target for `||b - A x|| / ||b||`.
    pub tol: f64,
    /// Defaults to `10 n` when `None`.
    pub max_iter: Option<usize>,
}

impl Default for CgOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CgOutcome<T> {
    pub x: Vec<T>,
    pub iterations: usize,
    /// Relative residual of the returned iterate, recomputed from `b - A x`.
    pub residual: f64,
}

#[inline]
fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

#[inline]
fn norm<T: Real>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

/// Jacobi-preconditioned conjugate gradients from a zero initial guess.
///
/// Converged iterates are confirmed against the true residual; if the
/// recursively updated residual has drifted the iteration restarts from it.
pub fn cg_solve<T: Real>(a: &CsrMatrix<T>, b: &[T], opts: CgOptions) -> Result<CgOutcome<T>> {
    let n = a.dim();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    let diag = a.diagonal();
    if let Some(row) = diag.iter().position(|d| d.is_zero()) {
        return Err(Error::ZeroDiagonal(row));
    }
    let inv_diag: Vec<T> = diag.iter().map(|&d| d.recip()).collect();

    let b_norm = norm(b);
    if b_norm.is_zero() {
        return Ok(CgOutcome {
            x: vec![T::zero(); n],
            iterations: 0,
            residual: 0.0,
        });
    }
    let tol = T::lit(opts.tol);
    let max_iter = opts.max_iter.unwrap_or(10 * n.max(1));

    let mut x = vec![T::zero(); n];
    let mut r = b.to_vec();
    let mut z: Vec<T> = r.iter().zip(&inv_diag).map(|(&r, &d)| r * d).collect();
    let mut p = z.clone();
    let mut ap = vec![T::zero(); n];
    let mut rz = dot(&r, &z);
    let mut rel = T::one();

    for it in 1..=max_iter {
        a.matvec_into(&p, &mut ap)?;
        let alpha = rz / dot(&p, &ap);
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        rel = norm(&r) / b_norm;

        let mut restart = false;
        if rel <= tol {
            a.matvec_into(&x, &mut ap)?;
            for i in 0..n {
                r[i] = b[i] - ap[i];
            }
            rel = norm(&r) / b_norm;
            if rel <= tol {
                return Ok(CgOutcome {
                    x,
                    iterations: it,
                    residual: rel.to_f64().unwrap_or(f64::NAN),
                });
            }
            restart = true;
        }

        for i in 0..n {
            z[i] = r[i] * inv_diag[i];
        }
        let rz_next = dot(&r, &z);
        if restart {
            p.copy_from_slice(&z);
        } else {
            let beta = rz_next / rz;
            for i in 0..n {
                p[i] = z[i] + beta * p[i];
            }
        }
        rz = rz_next;
    }

    Err(Error::SolverDidNotConverge {
        iterations: max_iter,
        residual: rel.to_f64().unwrap_or(f64::NAN),
    })
}
