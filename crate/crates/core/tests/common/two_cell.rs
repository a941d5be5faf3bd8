//! Two-cell device matching `scripts/oracles/two_cell.py`, and the comparison
//! of its assembled residual and Jacobian against the frozen oracle values.

use memdd::assembly::{Assembler, TimeStep};
use memdd::device::{ContactModel, Device, DirichletData, Doping, VoltageProtocol};
use memdd::mesh::{build_interval_mesh, AdmissibleMesh};
use memdd::physics::{DimensionlessParams, ScaledCarrier, ScalingSet, Species, StatisticsKind};

#[path = "../data/two_cell_oracle.rs"]
#[allow(clippy::excessive_precision)]
mod oracle;

pub const VALUES: [f64; 8] = [5.0 / 16.0, -3.0 / 16.0, 1.0 / 16.0, 7.0 / 16.0, 9.0 / 16.0, 1.0 / 8.0, -1.0 / 4.0, 11.0 / 16.0];
pub const PREV: [f64; 8] = [1.0 / 4.0, -1.0 / 8.0, 0.0, 3.0 / 8.0, 1.0 / 2.0, 1.0 / 16.0, -3.0 / 16.0, 5.0 / 8.0];
pub const APPLIED: [f64; 2] = [0.0, 0.75];
pub const TAU: f64 = 0.125;

pub fn mesh() -> AdmissibleMesh {
    build_interval_mesh(1.0, 2, 1.0).unwrap()
}

pub fn device(model: ContactModel, mesh: &AdmissibleMesh) -> Device {
    let carrier = |species, charge, statistics, prefactor, shift, mobility| ScaledCarrier {
        species,
        charge,
        statistics,
        prefactor,
        shift,
        mobility,
    };
    Device {
        params: DimensionlessParams { lambda: 0.75, nu: 0.5, delta_n: 0.5, delta_p: 0.25 },
        scaling: ScalingSet::new(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0),
        carriers: [
            carrier(Species::Electron, -1.0, StatisticsKind::FermiDiracOneHalf, 1.25, 0.5, 1.0),
            carrier(Species::Hole, 1.0, StatisticsKind::FermiDiracOneHalf, 0.75, -0.75, 0.625),
            carrier(Species::Defect, 1.0, StatisticsKind::FermiDiracMinusOne, 2.0, 0.25, 1.0),
        ],
        doping: Doping::uniform(1.0, 0.375, mesh.cell_count()),
        model,
        dirichlet: DirichletData { psi: 0.125, phi: 0.0, psi_gradient: [0.25, 0.0], phi_gradient: [-0.125, 0.0] },
        velocities: [1.5, 0.5],
        signals: vec![VoltageProtocol::Constant { value: 0.0, duration: None }; 2],
        area_factor: 1.0,
        domain_measure: mesh.domain_measure,
    }
}

/// Largest relative deviation of the residual and of the Jacobian from the
/// oracle. Entries the oracle has as zero count against the row maximum.
#[derive(Debug, Clone, Copy)]
pub struct Deviation {
    pub residual: f64,
    pub jacobian: f64,
}

fn relative(got: f64, want: f64, row_scale: f64) -> f64 {
    if want == 0.0 {
        got.abs() / row_scale
    } else {
        ((got - want) / want).abs()
    }
}

pub fn deviation(model: ContactModel) -> Deviation {
    let mesh = mesh();
    let device = device(model, &mesh);
    let asm = Assembler::new(&device, &mesh);
    let out = asm.assemble(&VALUES, &APPLIED, &TimeStep { prev: &PREV, tau: TAU }, true).unwrap();
    let (res, jac) = match model {
        ContactModel::Ohmic => (oracle::OHMIC_RESIDUAL, oracle::OHMIC_JACOBIAN),
        ContactModel::Schottky => (oracle::SCHOTTKY_RESIDUAL, oracle::SCHOTTKY_JACOBIAN),
    };
    let dense = out.jacobian.unwrap().to_dense();
    let mut d = Deviation { residual: 0.0, jacobian: 0.0 };
    for i in 0..8 {
        d.residual = d.residual.max(relative(out.residual[i], res[i], 1.0));
        let row_scale = jac[i].iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        for j in 0..8 {
            d.jacobian = d.jacobian.max(relative(dense[i][j], jac[i][j], row_scale));
        }
    }
    d
}

/// Largest relative deviation of the Schottky trace densities.
pub fn trace_deviation() -> f64 {
    let mesh = mesh();
    let device = device(ContactModel::Schottky, &mesh);
    let asm = Assembler::new(&device, &mesh);
    let traces = asm.boundary_traces(&VALUES, &APPLIED).unwrap();
    let mut worst = 0.0_f64;
    for t in traces {
        for a in 0..2 {
            let want = oracle::SCHOTTKY_TRACE_DENSITY[t.contact][a];
            worst = worst.max(((t.density[a] - want) / want).abs());
        }
    }
    worst
}
