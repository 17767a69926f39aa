//! Shared conventions for serialized reports.
//!
//! Every report carries `"schema": 1` and serializes exact rational values
//! as strings (`"3"`, `"-5/2"`) so that no consumer is tempted to round
//! them through floating point.

use serde::Serializer;

use crate::scalar::Scalar;

/// Version tag embedded in every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

/// Serializes a `Scalar` field as its exact decimal-fraction string.
pub mod scalar_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Scalar, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }
}

/// Serializes an optional `Scalar` field as an exact string when present.
pub mod opt_scalar_string {
    use super::*;

    pub fn serialize<S: Serializer>(
        value: &Option<Scalar>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.serialize_str(&v.to_string()),
            None => serializer.serialize_none(),
        }
    }
}

/// Serializes an optional closed interval of `Scalar`s as a string pair.
pub mod opt_scalar_interval {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(
        value: &Option<[Scalar; 2]>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some([lo, hi]) => {
                let mut seq = serializer.serialize_seq(Some(2))?;
                seq.serialize_element(&lo.to_string())?;
                seq.serialize_element(&hi.to_string())?;
                seq.end()
            }
            None => serializer.serialize_none(),
        }
    }
}

/// Serializes a list of `Scalar`s as exact strings.
pub mod scalar_vec_string {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(value: &[Scalar], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(value.len()))?;
        for v in value {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }
}
