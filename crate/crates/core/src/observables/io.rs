//! CSV output of sweeps and snapshots. Numbers use 17 significant digits.

use std::io::{Read, Write};

use crate::assembly::{Assembler, DeviceState};

use super::{space_charge, space_charge_scale};

/// One accepted time step of a sweep, in physical units except for the
/// dimensionless entropy, dissipation and mean ion density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub t: f64,
    pub voltage: f64,
    /// Current into the device at the swept (right) contact, A.
    pub current: f64,
    /// Current into the device at the grounded (left) contact, A.
    pub current_left: f64,
    pub entropy: f64,
    pub dissipation: f64,
    pub ion_mass: f64,
}

const SWEEP_HEADER: [&str; 7] = ["t_s", "V_V", "I_A", "entropy", "dissipation", "ion_mass", "I_left_A"];

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_sweep_csv<W: Write>(out: W, rows: &[SweepRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.write_record([r.t, r.voltage, r.current, r.entropy, r.dissipation, r.ion_mass, r.current_left].map(num))?;
    }
    w.flush()?;
    Ok(())
}

fn column(headers: &csv::StringRecord, name: &str) -> csv::Result<usize> {
    headers.iter().position(|h| h == name).ok_or_else(|| {
        csv::Error::from(std::io::Error::new(std::io::ErrorKind::InvalidData, format!("missing column `{name}`")))
    })
}

fn parse(field: Option<&str>) -> csv::Result<f64> {
    let s = field.unwrap_or("");
    s.trim().parse().map_err(|_| {
        csv::Error::from(std::io::Error::new(std::io::ErrorKind::InvalidData, format!("not a number: `{s}`")))
    })
}

pub fn read_sweep_csv<R: Read>(input: R) -> csv::Result<Vec<SweepRow>> {
    let mut r = csv::Reader::from_reader(input);
    let headers = r.headers()?.clone();
    let idx: Vec<usize> = SWEEP_HEADER.iter().map(|h| column(&headers, h)).collect::<csv::Result<_>>()?;
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let v: Vec<f64> = idx.iter().map(|&i| parse(rec.get(i))).collect::<csv::Result<_>>()?;
        out.push(SweepRow {
            t: v[0],
            voltage: v[1],
            current: v[2],
            entropy: v[3],
            dissipation: v[4],
            ion_mass: v[5],
            current_left: v[6],
        });
    }
    Ok(out)
}

/// Cell fields at one instant in physical units: positions in m, densities in
/// 1/m^3, `psi` in V and space charge in C/m^3.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub t: f64,
    pub x: Vec<f64>,
    /// Present for 2D meshes.
    pub z: Option<Vec<f64>>,
    pub n_n: Vec<f64>,
    pub n_p: Vec<f64>,
    pub n_a: Vec<f64>,
    pub psi: Vec<f64>,
    pub space_charge: Vec<f64>,
}

impl Snapshot {
    pub fn capture(asm: &Assembler<'_>, state: &DeviceState) -> Snapshot {
        let device = asm.device;
        let s = &device.scaling;
        let dens = state.densities(device);
        let scale = [s.electron_density, s.doping_density, s.defect_density];
        let rho = space_charge(asm, state);
        let q = space_charge_scale(asm);
        let two_d = asm.mesh.dimension == 2;
        Snapshot {
            t: state.time,
            x: asm.mesh.cells.iter().map(|c| c.center[0] * s.length).collect(),
            z: two_d.then(|| asm.mesh.cells.iter().map(|c| c.center[1] * s.length).collect()),
            n_n: dens.iter().map(|d| d[0] * scale[0]).collect(),
            n_p: dens.iter().map(|d| d[1] * scale[1]).collect(),
            n_a: dens.iter().map(|d| d[2] * scale[2]).collect(),
            psi: (0..state.cells()).map(|k| state.psi(k) * s.thermal_voltage).collect(),
            space_charge: rho.iter().map(|r| r * q).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Space charge integrated over each column of a 2D snapshot, as
    /// `(x, charge per unit area)` in (m, C/m^2), ordered by `x`. Cells of a
    /// column must be stored consecutively from the bottom, as meshes do.
    pub fn column_charges(&self) -> Option<Vec<(f64, f64)>> {
        let z = self.z.as_ref()?;
        let mut out: Vec<(f64, f64)> = Vec::new();
        let mut k = 0;
        while k < self.len() {
            let x = self.x[k];
            let (mut node, mut q) = (0.0, 0.0);
            while k < self.len() && self.x[k] == x {
                let dz = 2.0 * (z[k] - node);
                node += dz;
                q += self.space_charge[k] * dz;
                k += 1;
            }
            out.push((x, q));
        }
        Some(out)
    }

    /// Density of species index `a` (0 = n, 1 = p, 2 = a).
    pub fn density(&self, a: usize) -> &[f64] {
        match a {
            0 => &self.n_n,
            1 => &self.n_p,
            _ => &self.n_a,
        }
    }
}

pub fn write_snapshot<W: Write>(out: W, snap: &Snapshot) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["x_m"];
    if snap.z.is_some() {
        header.push("z_m");
    }
    header.extend(["n_n", "n_p", "n_a", "psi_V", "space_charge"]);
    w.write_record(&header)?;
    for k in 0..snap.len() {
        let mut rec = vec![num(snap.x[k])];
        if let Some(z) = &snap.z {
            rec.push(num(z[k]));
        }
        rec.extend([snap.n_n[k], snap.n_p[k], snap.n_a[k], snap.psi[k], snap.space_charge[k]].map(num));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Read a snapshot written by [`write_snapshot`]; the time is not stored in
/// the file and is set to `t`.
pub fn read_snapshot<R: Read>(input: R, t: f64) -> csv::Result<Snapshot> {
    let mut r = csv::Reader::from_reader(input);
    let headers = r.headers()?.clone();
    let has_z = headers.iter().any(|h| h == "z_m");
    let mut names = vec!["x_m"];
    if has_z {
        names.push("z_m");
    }
    names.extend(["n_n", "n_p", "n_a", "psi_V", "space_charge"]);
    let idx: Vec<usize> = names.iter().map(|h| column(&headers, h)).collect::<csv::Result<_>>()?;
    let mut cols: Vec<Vec<f64>> = vec![Vec::new(); names.len()];
    for rec in r.records() {
        let rec = rec?;
        for (c, &i) in idx.iter().enumerate() {
            cols[c].push(parse(rec.get(i))?);
        }
    }
    let mut it = cols.into_iter();
    let x = it.next().unwrap();
    let z = if has_z { it.next() } else { None };
    let mut next = || it.next().unwrap();
    Ok(Snapshot { t, x, z, n_n: next(), n_p: next(), n_a: next(), psi: next(), space_charge: next() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_round_trip_is_exact() {
        let rows = vec![
            SweepRow { t: 0.1, voltage: 1.0 / 3.0, current: -2.5e-9, current_left: 2.5e-9, entropy: 7.0, dissipation: 0.0, ion_mass: 6.4e-5 },
            SweepRow { t: 0.2, voltage: 13.0, current: 1e-300, current_left: -1e-300, entropy: 1e10, dissipation: 3.3, ion_mass: 6.4e-5 },
        ];
        let mut buf = Vec::new();
        write_sweep_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("t_s,V_V,I_A,entropy,dissipation,ion_mass"));
        assert_eq!(read_sweep_csv(&buf[..]).unwrap(), rows);
    }

    #[test]
    fn snapshot_round_trip_is_exact() {
        let snap = Snapshot {
            t: 13.0,
            x: vec![0.1, 0.2],
            z: Some(vec![0.0, 1e-9]),
            n_n: vec![1e20, 2e20],
            n_p: vec![3.0, 4.0],
            n_a: vec![5e23, 6e23],
            psi: vec![-4.0, -4.1],
            space_charge: vec![0.5, -0.25],
        };
        let mut buf = Vec::new();
        write_snapshot(&mut buf, &snap).unwrap();
        assert_eq!(read_snapshot(&buf[..], 13.0).unwrap(), snap);
    }

    #[test]
    fn column_charges_integrate_over_z() {
        // Two columns with cell heights 1 and 3.
        let snap = Snapshot {
            t: 0.0,
            x: vec![0.5, 0.5, 1.5, 1.5],
            z: Some(vec![0.5, 2.5, 0.5, 2.5]),
            n_n: vec![0.0; 4],
            n_p: vec![0.0; 4],
            n_a: vec![0.0; 4],
            psi: vec![0.0; 4],
            space_charge: vec![1.0, 2.0, -1.0, 0.0],
        };
        assert_eq!(snap.column_charges().unwrap(), vec![(0.5, 7.0), (1.5, -1.0)]);
    }
}
