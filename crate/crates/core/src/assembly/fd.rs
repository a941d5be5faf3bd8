//! Central-difference Jacobian, grouped so that one pair of residual
//! evaluations recovers every column of a color class of the band.

use crate::linalg::BandMatrix;

use super::{AssemblyError, Assembler, TimeStep};

/// Band Jacobian of [`Assembler::assemble`] by central differences with
/// relative step `1e-6`.
pub fn finite_difference_jacobian(
    asm: &Assembler<'_>,
    values: &[f64],
    applied: &[f64],
    step: &TimeStep<'_>,
) -> Result<BandMatrix, AssemblyError> {
    let n = asm.size();
    let b = asm.band();
    let colors = (2 * b + 1).min(n);
    let h: Vec<f64> = values.iter().map(|x| 1e-6 * x.abs().max(1.0)).collect();
    let mut jac = BandMatrix::zeros(n, b, b);
    let mut xp = values.to_vec();
    let mut xm = values.to_vec();
    for color in 0..colors {
        for j in (color..n).step_by(colors) {
            xp[j] = values[j] + h[j];
            xm[j] = values[j] - h[j];
        }
        let rp = asm.assemble(&xp, applied, step, false)?.residual;
        let rm = asm.assemble(&xm, applied, step, false)?.residual;
        for j in (color..n).step_by(colors) {
            xp[j] = values[j];
            xm[j] = values[j];
            for i in j.saturating_sub(b)..=(j + b).min(n - 1) {
                jac.set(i, j, (rp[i] - rm[i]) / (2.0 * h[j]));
            }
        }
    }
    Ok(jac)
}
