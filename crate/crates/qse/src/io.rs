//! JSON file formats for channels and states.
//!
//! Channel (Kraus) files: `{"d": int, "kraus": [matrix, ...], "label": str}`.
//! Choi files: `{"d": int, "sigma": matrix}`.
//! State files: `{"d": int, "rho": matrix}`.
//! A matrix is a list of rows, each row a list of `[re, im]` pairs. Writers
//! use shortest round-trip float encoding, so values survive a save/load
//! cycle bit-exactly.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::channel::{ChoiMatrix, KrausSet};
use crate::entropy::DensityOperator;
use crate::error::{QseError, Result};
use crate::linalg::CMatrix;

type MatrixRepr = Vec<Vec<[f64; 2]>>;

fn matrix_to_repr(m: &CMatrix) -> MatrixRepr {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

fn repr_to_matrix(repr: &MatrixRepr) -> Result<CMatrix> {
    let rows = repr.len();
    if rows == 0 {
        return Err(QseError::Format("matrix has no rows".into()));
    }
    let cols = repr[0].len();
    if cols == 0 || repr.iter().any(|r| r.len() != cols) {
        return Err(QseError::Format("matrix rows have inconsistent lengths".into()));
    }
    let m = CMatrix::from_fn(rows, cols, |i, j| Complex64::new(repr[i][j][0], repr[i][j][1]));
    if !crate::linalg::all_finite(&m) {
        return Err(QseError::Format("matrix contains non-finite entries".into()));
    }
    Ok(m)
}

#[derive(Serialize, Deserialize)]
struct KrausFile {
    d: usize,
    kraus: Vec<MatrixRepr>,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct ChoiFile {
    d: usize,
    sigma: MatrixRepr,
}

#[derive(Serialize, Deserialize)]
struct StateFile {
    d: usize,
    rho: MatrixRepr,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyFile {
    Kraus(KrausFile),
    Choi(ChoiFile),
    State(StateFile),
}

/// Content loaded from a qse JSON file.
#[derive(Debug, Clone)]
pub enum LoadedObject {
    Kraus(KrausSet),
    Choi(ChoiMatrix),
    State(DensityOperator),
}

impl LoadedObject {
    /// Interpret the object as a channel, converting Choi form to Kraus form.
    pub fn into_kraus(self) -> Result<KrausSet> {
        match self {
            LoadedObject::Kraus(k) => Ok(k),
            LoadedObject::Choi(c) => c.to_kraus(),
            LoadedObject::State(_) => {
                Err(QseError::Format("expected a channel file, found a state file".into()))
            }
        }
    }

    /// Interpret the object as a state for entropy evaluation; a channel is
    /// represented by its rescaled dynamical matrix.
    pub fn into_state(self) -> Result<DensityOperator> {
        match self {
            LoadedObject::Kraus(k) => Ok(k.to_choi()?.sigma().clone()),
            LoadedObject::Choi(c) => Ok(c.sigma().clone()),
            LoadedObject::State(rho) => Ok(rho),
        }
    }
}

/// Load and validate any of the three file kinds.
pub fn load_object(path: &Path) -> Result<LoadedObject> {
    let text = fs::read_to_string(path)?;
    let parsed: AnyFile = serde_json::from_str(&text)
        .map_err(|e| QseError::Format(format!("{}: {e}", path.display())))?;
    match parsed {
        AnyFile::Kraus(f) => {
            let ops = f.kraus.iter().map(repr_to_matrix).collect::<Result<Vec<_>>>()?;
            for op in &ops {
                if op.shape() != (f.d, f.d) {
                    return Err(QseError::Format(format!(
                        "Kraus operator has shape {:?}, expected {d}x{d} from the d field",
                        op.shape(),
                        d = f.d
                    )));
                }
            }
            Ok(LoadedObject::Kraus(KrausSet::new(ops, f.label)?))
        }
        AnyFile::Choi(f) => {
            let sigma = repr_to_matrix(&f.sigma)?;
            Ok(LoadedObject::Choi(ChoiMatrix::from_matrix(sigma, f.d)?))
        }
        AnyFile::State(f) => {
            let rho = repr_to_matrix(&f.rho)?;
            if rho.shape() != (f.d, f.d) {
                return Err(QseError::Format("state dimension disagrees with the d field".into()));
            }
            Ok(LoadedObject::State(DensityOperator::new(rho)?))
        }
    }
}

pub fn save_kraus(path: &Path, kraus: &KrausSet) -> Result<()> {
    let file = KrausFile {
        d: kraus.dim(),
        kraus: kraus.operators().iter().map(matrix_to_repr).collect(),
        label: kraus.label().to_string(),
    };
    write_json(path, &file)
}

pub fn save_choi(path: &Path, choi: &ChoiMatrix) -> Result<()> {
    let file = ChoiFile { d: choi.d(), sigma: matrix_to_repr(choi.sigma().matrix()) };
    write_json(path, &file)
}

pub fn save_state(path: &Path, rho: &DensityOperator) -> Result<()> {
    let file = StateFile { d: rho.dim(), rho: matrix_to_repr(rho.matrix()) };
    write_json(path, &file)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{random_channel, random_density};
    use crate::linalg::max_abs;

    #[test]
    fn kraus_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("chan.json");
        let chan = random_channel(2, 3, 1).unwrap();
        save_kraus(&path, &chan).unwrap();
        let loaded = load_object(&path).unwrap().into_kraus().unwrap();
        assert_eq!(loaded.len(), chan.len());
        assert_eq!(loaded.label(), chan.label());
        for (a, b) in chan.operators().iter().zip(loaded.operators()) {
            assert_eq!(a, b, "entries must round-trip bit-exactly");
        }
    }

    #[test]
    fn choi_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("choi.json");
        let choi = random_channel(2, 2, 2).unwrap().to_choi().unwrap();
        save_choi(&path, &choi).unwrap();
        match load_object(&path).unwrap() {
            LoadedObject::Choi(c) => {
                assert!(max_abs(&(c.sigma().matrix() - choi.sigma().matrix())) == 0.0);
            }
            _ => panic!("expected a Choi file"),
        }
    }

    #[test]
    fn state_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("state.json");
        let rho = random_density(3, 3).unwrap();
        save_state(&path, &rho).unwrap();
        match load_object(&path).unwrap() {
            LoadedObject::State(r) => assert!(max_abs(&(r.matrix() - rho.matrix())) == 0.0),
            _ => panic!("expected a state file"),
        }
    }

    #[test]
    fn invalid_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(&path, "{\"d\": 2}").unwrap();
        assert!(load_object(&path).is_err());

        // a non-CPTP sigma is rejected on load
        std::fs::write(
            &path,
            r#"{"d": 2, "sigma": [[[1.0,0],[0,0],[0,0],[0,0]],[[0,0],[0.5,0],[0,0],[0,0]],[[0,0],[0,0],[-0.5,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]]]}"#,
        )
        .unwrap();
        assert!(load_object(&path).is_err());
    }
}
