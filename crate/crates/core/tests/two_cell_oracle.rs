mod common;

use common::two_cell::{deviation, mesh, trace_deviation};
use memdd::device::ContactModel;

#[test]
fn mesh_matches_the_oracle_geometry() {
    let m = mesh();
    let tau: Vec<f64> = m.faces.iter().map(|f| f.transmissibility).collect();
    assert!(tau.contains(&2.0) && tau.iter().filter(|t| **t == 4.0).count() == 2, "{}", m.to_text());
    assert!(m.cells.iter().all(|c| c.measure == 0.5));
}

#[test]
fn ohmic_residual_and_jacobian_match_oracle() {
    let d = deviation(ContactModel::Ohmic);
    assert!(d.residual <= 1e-14 && d.jacobian <= 1e-14, "{d:?}");
}

#[test]
fn schottky_residual_and_jacobian_match_oracle() {
    let d = deviation(ContactModel::Schottky);
    assert!(d.residual <= 1e-14 && d.jacobian <= 1e-14, "{d:?}");
}

#[test]
fn schottky_traces_match_oracle() {
    assert!(trace_deviation() <= 1e-14, "{}", trace_deviation());
}
