//! Jacobi polynomials P_j^{(α,β)} by the three-term recurrence.

use crate::error::{Error, Result};

fn check_params(alpha: f64, beta: f64) -> Result<()> {
    if alpha > -1.0 && beta > -1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "Jacobi parameters must exceed -1 (alpha={alpha}, beta={beta})"
        )))
    }
}

/// Fills `out[0..=jmax]` with P_0 .. P_jmax at `x`.
fn fill(jmax: usize, alpha: f64, beta: f64, x: f64, out: &mut [f64]) {
    out[0] = 1.0;
    if jmax == 0 {
        return;
    }
    let ab = alpha + beta;
    out[1] = (alpha + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
    for n in 2..=jmax {
        let nf = n as f64;
        let s = 2.0 * nf + ab;
        let a1 = 2.0 * nf * (nf + ab) * (s - 2.0);
        let a2 = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
        let a3 = 2.0 * (nf + alpha - 1.0) * (nf + beta - 1.0) * s;
        out[n] = (a2 * out[n - 1] - a3 * out[n - 2]) / a1;
    }
}

/// Jacobi polynomial P_j^{(α,β)}(x).
pub fn jacobi_p(j: usize, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    check_params(alpha, beta)?;
    let mut buf = vec![0.0; j + 1];
    fill(j, alpha, beta, x, &mut buf);
    Ok(buf[j])
}

/// All of P_0 .. P_jmax at `x` in one recurrence sweep.
pub fn jacobi_all(jmax: usize, alpha: f64, beta: f64, x: f64) -> Result<Vec<f64>> {
    check_params(alpha, beta)?;
    let mut buf = vec![0.0; jmax + 1];
    fill(jmax, alpha, beta, x, &mut buf);
    Ok(buf)
}

/// Values and first two x-derivatives of P_0 .. P_jmax at `x`.
///
/// Uses d/dx P_j^{(α,β)} = (j+α+β+1)/2 · P_{j-1}^{(α+1,β+1)}.
pub fn jacobi_all_with_derivatives(
    jmax: usize,
    alpha: f64,
    beta: f64,
    x: f64,
) -> Result<Vec<[f64; 3]>> {
    check_params(alpha, beta)?;
    let mut p0 = vec![0.0; jmax + 1];
    let mut p1 = vec![0.0; jmax + 1];
    let mut p2 = vec![0.0; jmax + 1];
    fill(jmax, alpha, beta, x, &mut p0);
    fill(jmax, alpha + 1.0, beta + 1.0, x, &mut p1);
    fill(jmax, alpha + 2.0, beta + 2.0, x, &mut p2);
    let ab = alpha + beta;
    Ok((0..=jmax)
        .map(|j| {
            let jf = j as f64;
            let d1 = if j >= 1 { 0.5 * (jf + ab + 1.0) * p1[j - 1] } else { 0.0 };
            let d2 = if j >= 2 {
                0.25 * (jf + ab + 1.0) * (jf + ab + 2.0) * p2[j - 2]
            } else {
                0.0
            };
            [p0[j], d1, d2]
        })
        .collect())
}
