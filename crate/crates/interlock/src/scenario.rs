//! Scenario files: a JSON document wrapping a [`Scenario`] with a schema
//! version, optional gait tuning overrides and an optional expected
//! outcome for CI use. Unknown fields are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::InvalidConfig;
use crate::gait::{GaitTuning, Outcome};
use crate::model::{validate, Scenario};

pub const SCENARIO_SCHEMA_VERSION: u32 = 1;

/// On-disk scenario document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub schema_version: u32,
    pub scenario: Scenario,
    /// Optional gait-model calibration overrides.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tuning: Option<GaitTuning>,
    /// When present, `simulate` exits nonzero unless the run ends in this
    /// outcome.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_outcome: Option<Outcome>,
}

impl ScenarioFile {
    pub fn new(scenario: Scenario) -> Self {
        ScenarioFile {
            schema_version: SCENARIO_SCHEMA_VERSION,
            scenario,
            tuning: None,
            expected_outcome: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("scenario serializes");
        s.push('\n');
        s
    }
}

/// Why a scenario file could not be used.
#[derive(Debug, Error)]
pub enum ScenarioFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: schema_version {found} unsupported (expected {expected})")]
    SchemaVersion {
        path: String,
        found: u32,
        expected: u32,
    },
    #[error("{path}: {source}")]
    Invalid {
        path: String,
        source: InvalidConfig,
    },
}

/// Load, version-check and validate a scenario file.
pub fn load_scenario_file(path: &Path) -> Result<ScenarioFile, ScenarioFileError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioFileError::Io {
        path: display.clone(),
        source,
    })?;
    let file: ScenarioFile =
        serde_json::from_str(&text).map_err(|source| ScenarioFileError::Parse {
            path: display.clone(),
            source,
        })?;
    if file.schema_version != SCENARIO_SCHEMA_VERSION {
        return Err(ScenarioFileError::SchemaVersion {
            path: display,
            found: file.schema_version,
            expected: SCENARIO_SCHEMA_VERSION,
        });
    }
    let scenario = validate(file.scenario.clone()).map_err(|source| ScenarioFileError::Invalid {
        path: display,
        source,
    })?;
    Ok(ScenarioFile { scenario, ..file })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let file = ScenarioFile::new(Scenario::flat_beach());
        let json = file.to_json();
        let parsed: ScenarioFile = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, file);
    }

    #[test]
    fn unknown_fields_rejected() {
        let mut json = serde_json::to_value(ScenarioFile::new(Scenario::flat_beach())).unwrap();
        json.as_object_mut()
            .unwrap()
            .insert("surprise".into(), serde_json::json!(1));
        let err = serde_json::from_value::<ScenarioFile>(json);
        assert!(err.is_err());
    }

    #[test]
    fn wrong_schema_version_rejected() {
        let dir = std::env::temp_dir().join("interlock_scenario_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("wrong_version.json");
        let mut file = ScenarioFile::new(Scenario::flat_beach());
        file.schema_version = 99;
        std::fs::write(&path, file.to_json()).unwrap();
        let err = load_scenario_file(&path).unwrap_err();
        assert!(matches!(err, ScenarioFileError::SchemaVersion { .. }));
    }
}
