//! JSON input formats and output encoding.
//!
//! * fan: `{"rank": n, "rays": [[..], ..], "max_cones": [[i, ..], ..]}` with
//!   0-based ray indices;
//! * matrix: row-major `[[..], ..]`;
//! * weights: `{"rank": r, "weights": [[..], ..]}`, optionally with
//!   `"monomials": [{"perm": [..], "scalars": ["p/q", ..]}, ..]`.
//!
//! Integers may be JSON numbers or decimal strings. Output writes integers
//! that fit in `i64` as numbers and larger ones as strings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::fans::{Fan, FanError};
use crate::groups::{GroupError, MonomialMatrix};
use crate::intlin::{IntMatrix, IntVector};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid fan: {0}")]
    Fan(#[from] FanError),
    #[error("invalid monomial matrix {index}: {source}")]
    Monomial { index: usize, source: GroupError },
    #[error("bad rational {0:?}, expected \"p/q\"")]
    Rational(String),
    #[error("{0}")]
    Shape(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// An integer read from a JSON number or decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IntVisitor;

        impl<'de> Visitor<'de> for IntVisitor {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                BigInt::from_str(v.trim())
                    .map(JsonInt)
                    .map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }

        deserializer.deserialize_any(IntVisitor)
    }
}

/// A rational read from `"p/q"`, `"p"` or an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRational(pub BigRational);

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match Value::deserialize(deserializer)? {
            Value::Number(n) => n
                .as_i64()
                .map(|v| JsonRational(BigRational::from_integer(v.into())))
                .ok_or_else(|| {
                    de::Error::custom(format!(
                        "non-integer number {n}; write rationals as \"p/q\""
                    ))
                }),
            Value::String(s) => parse_rational(&s)
                .map(JsonRational)
                .map_err(de::Error::custom),
            other => Err(de::Error::custom(format!(
                "expected a rational, found {other}"
            ))),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, InputError> {
    let s = s.trim();
    let bad = || InputError::Rational(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
    }
}

fn to_vector(row: Vec<JsonInt>) -> IntVector {
    row.into_iter().map(|x| x.0).collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FanFile {
    rank: usize,
    rays: Vec<Vec<JsonInt>>,
    max_cones: Vec<Vec<usize>>,
}

pub fn parse_fan(text: &str) -> Result<Fan, InputError> {
    let file: FanFile = serde_json::from_str(text)?;
    let rays = file.rays.into_iter().map(to_vector).collect();
    Ok(Fan::from_ray_indices(file.rank, rays, &file.max_cones)?)
}

fn rows_to_matrix(rows: Vec<Vec<JsonInt>>) -> Result<IntMatrix, InputError> {
    let cols = rows.first().map_or(0, Vec::len);
    IntMatrix::from_rows(cols, rows.into_iter().map(to_vector).collect())
        .map_err(|e| InputError::Shape(e.to_string()))
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, InputError> {
    rows_to_matrix(serde_json::from_str(text)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MonomialFile {
    perm: Vec<usize>,
    scalars: Vec<JsonRational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightsFile {
    rank: usize,
    weights: Vec<Vec<JsonInt>>,
    #[serde(default)]
    monomials: Vec<MonomialFile>,
}

/// A weight matrix together with optional monomial matrices.
#[derive(Clone, Debug)]
pub struct WeightsInput {
    pub weights: IntMatrix,
    pub monomials: Vec<MonomialMatrix>,
}

/// Reads a weights object; a bare matrix is accepted too.
pub fn parse_weights(text: &str) -> Result<WeightsInput, InputError> {
    let value: Value = serde_json::from_str(text)?;
    if value.is_array() {
        return Ok(WeightsInput {
            weights: rows_to_matrix(serde_json::from_value(value)?)?,
            monomials: Vec::new(),
        });
    }
    let file: WeightsFile = serde_json::from_str(text)?;
    if file.rank != file.weights.len() {
        return Err(InputError::Shape(format!(
            "rank is {} but {} weight rows were given",
            file.rank,
            file.weights.len()
        )));
    }
    let width = file.weights.first().map(Vec::len);
    let weights = rows_to_matrix(file.weights)?;
    let monomials = file
        .monomials
        .into_iter()
        .enumerate()
        .map(|(index, m)| {
            if let Some(w) = width {
                if m.perm.len() != w {
                    return Err(InputError::Shape(format!(
                        "monomial matrix {index} has size {}, weights have {w} columns",
                        m.perm.len()
                    )));
                }
            }
            MonomialMatrix::new(m.perm, m.scalars.into_iter().map(|s| s.0).collect())
                .map_err(|source| InputError::Monomial { index, source })
        })
        .collect::<Result<_, _>>()?;
    Ok(WeightsInput { weights, monomials })
}

pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn vector_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

pub fn matrix_json(a: &IntMatrix) -> Value {
    Value::Array(a.row_vectors().iter().map(|r| vector_json(r)).collect())
}

pub fn rational_json(q: &BigRational) -> Value {
    json!(q.to_string())
}

pub fn fan_json(f: &Fan) -> Value {
    json!({
        "rank": f.rank(),
        "rays": f.rays().iter().map(|r| vector_json(r)).collect::<Vec<_>>(),
        "max_cones": f.max_cone_ray_indices(),
    })
}
