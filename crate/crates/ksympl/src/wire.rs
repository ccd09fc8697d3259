//! JSON wire formats for batch runs.
//!
//! Conventions, chosen so that repeated runs are byte-identical and every
//! value survives a round trip:
//!
//! * Scalars are JSON strings: exact rationals as `"n"` or `"n/d"`, floats
//!   as 17-significant-digit scientific notation. On input, plain JSON
//!   integers are accepted by both backends; non-integral JSON numbers only
//!   by the float backend (they have no exact reading).
//! * Complex entries are two-element arrays `[re, im]`.
//! * Matrices are arrays of rows.
//! * Homogeneous polynomials are objects keyed by comma-joined exponent
//!   vectors (`"2,0,0"`), mapping to coefficient scalars.
//! * Dimension bounds that may exceed 2⁵³ are decimal strings.
//! * Objects are emitted with alphabetically sorted keys.
//!
//! Parsers report the path of the offending field (`$.forms[0][1][2]`)
//! so batch failures are diagnosable.

use num_complex::Complex;
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::hk::{IntersectionModel, ObstructionVerdict};
use crate::ksymplectic::{
    KSymplecticReport, Normalization, QuadraticFormOnSpan, TwoFormSpan, Witness,
};
use crate::linalg::{HomogeneousPoly, Mat};
use crate::scalar::{Complexify, QuadExt, Scalar};

/// A malformed document, with the JSON path of the offending field.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{path}: {message}")]
pub struct WireError {
    pub path: String,
    pub message: String,
}

fn err(path: &str, message: impl Into<String>) -> WireError {
    WireError {
        path: path.to_string(),
        message: message.into(),
    }
}

/// Parses a JSON document, mapping syntax errors to a diagnostic at `$`.
pub fn parse_document(text: &str) -> Result<Value, WireError> {
    serde_json::from_str(text).map_err(|e| err("$", e.to_string()))
}

// ---------------------------------------------------------------------------
// Scalar atoms
// ---------------------------------------------------------------------------

/// A scalar backend with a JSON atom representation.
pub trait WireScalar: Scalar {
    /// Whether entries of this backend are `[re, im]` pairs.
    const COMPLEX: bool;

    fn from_atom(value: &Value, path: &str) -> Result<Self, WireError>;

    fn to_atom(&self) -> Value;
}

impl WireScalar for BigRational {
    const COMPLEX: bool = false;

    fn from_atom(value: &Value, path: &str) -> Result<Self, WireError> {
        match value {
            Value::String(text) => text.parse().map_err(|_| {
                err(path, format!("expected a rational like \"3/4\", got {text:?}"))
            }),
            Value::Number(number) => {
                if let Some(n) = number.as_i64() {
                    Ok(<Self as Scalar>::from_int(n))
                } else if let Some(n) = number.as_u64() {
                    Ok(Self::from_integer(n.into()))
                } else {
                    Err(err(
                        path,
                        format!(
                            "{number} has no exact reading; write it as a \
                             rational string"
                        ),
                    ))
                }
            }
            other => Err(err(path, format!("expected a scalar, got {other}"))),
        }
    }

    fn to_atom(&self) -> Value {
        Value::String(self.render())
    }
}

impl WireScalar for f64 {
    const COMPLEX: bool = false;

    fn from_atom(value: &Value, path: &str) -> Result<Self, WireError> {
        match value {
            Value::Number(number) => number
                .as_f64()
                .ok_or_else(|| err(path, format!("{number} is out of f64 range"))),
            Value::String(text) => text
                .parse()
                .map_err(|_| err(path, format!("expected a number, got {text:?}"))),
            other => Err(err(path, format!("expected a scalar, got {other}"))),
        }
    }

    fn to_atom(&self) -> Value {
        Value::String(self.render())
    }
}

fn complex_from_atom<S: WireScalar>(
    value: &Value,
    path: &str,
) -> Result<Complex<S>, WireError> {
    let Value::Array(pair) = value else {
        return Err(err(path, format!("expected [re, im], got {value}")));
    };
    if pair.len() != 2 {
        return Err(err(
            path,
            format!("expected [re, im], got {} elements", pair.len()),
        ));
    }
    Ok(Complex::new(
        S::from_atom(&pair[0], &format!("{path}[0]"))?,
        S::from_atom(&pair[1], &format!("{path}[1]"))?,
    ))
}

impl WireScalar for Complex<BigRational> {
    const COMPLEX: bool = true;

    fn from_atom(value: &Value, path: &str) -> Result<Self, WireError> {
        complex_from_atom(value, path)
    }

    fn to_atom(&self) -> Value {
        Value::Array(vec![self.re.to_atom(), self.im.to_atom()])
    }
}

impl WireScalar for Complex<f64> {
    const COMPLEX: bool = true;

    fn from_atom(value: &Value, path: &str) -> Result<Self, WireError> {
        complex_from_atom(value, path)
    }

    fn to_atom(&self) -> Value {
        Value::Array(vec![self.re.to_atom(), self.im.to_atom()])
    }
}

// ---------------------------------------------------------------------------
// Field helpers
// ---------------------------------------------------------------------------

fn get<'a>(object: &'a Value, field: &str, path: &str) -> Result<&'a Value, WireError> {
    let Value::Object(map) = object else {
        return Err(err(path, format!("expected an object, got {object}")));
    };
    map.get(field)
        .ok_or_else(|| err(&format!("{path}.{field}"), "missing field"))
}

fn get_usize(object: &Value, field: &str, path: &str) -> Result<usize, WireError> {
    let fpath = format!("{path}.{field}");
    get(object, field, path)?
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| err(&fpath, "expected a non-negative integer"))
}

fn get_bool(object: &Value, field: &str, path: &str) -> Result<bool, WireError> {
    let fpath = format!("{path}.{field}");
    get(object, field, path)?
        .as_bool()
        .ok_or_else(|| err(&fpath, "expected a boolean"))
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Parses an `rows × cols` matrix from an array of rows.
pub fn parse_matrix<S: WireScalar>(
    value: &Value,
    path: &str,
    rows: usize,
    cols: usize,
) -> Result<Mat<S>, WireError> {
    let Value::Array(row_values) = value else {
        return Err(err(path, format!("expected an array of rows, got {value}")));
    };
    if row_values.len() != rows {
        return Err(err(
            path,
            format!("expected {rows} rows, got {}", row_values.len()),
        ));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in row_values.iter().enumerate() {
        let Value::Array(cells) = row else {
            return Err(err(&format!("{path}[{i}]"), "expected an array row"));
        };
        if cells.len() != cols {
            return Err(err(
                &format!("{path}[{i}]"),
                format!("expected {cols} entries, got {}", cells.len()),
            ));
        }
        for (j, cell) in cells.iter().enumerate() {
            entries.push(S::from_atom(cell, &format!("{path}[{i}][{j}]"))?);
        }
    }
    Ok(Mat::from_fn(rows, cols, |i, j| entries[i * cols + j].clone()))
}

/// Serializes a matrix as an array of rows of scalar atoms.
pub fn matrix_to_value<S: WireScalar>(m: &Mat<S>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array((0..m.cols()).map(|j| m[(i, j)].to_atom()).collect())
            })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Two-form spans
// ---------------------------------------------------------------------------

/// Reads the `scalars` tag of a span document, for backend dispatch before
/// the typed parse.
pub fn scalars_tag(value: &Value) -> Result<&str, WireError> {
    get(value, "scalars", "$")?
        .as_str()
        .ok_or_else(|| err("$.scalars", "expected \"real\" or \"complex\""))
}

fn expected_tag<S: WireScalar>() -> &'static str {
    if S::COMPLEX {
        "complex"
    } else {
        "real"
    }
}

/// Parses `{"dimV": N, "forms": [matrix, ...], "scalars": "real"|"complex",
/// "real_structure": bool}`.
pub fn parse_two_form_span<S: WireScalar>(
    value: &Value,
) -> Result<TwoFormSpan<S>, WireError> {
    let tag = scalars_tag(value)?;
    if tag != expected_tag::<S>() {
        return Err(err(
            "$.scalars",
            format!("expected {:?} for this backend, got {tag:?}", expected_tag::<S>()),
        ));
    }
    let dim_v = get_usize(value, "dimV", "$")?;
    let real_structure = get_bool(value, "real_structure", "$")?;
    let Value::Array(forms) = get(value, "forms", "$")? else {
        return Err(err("$.forms", "expected an array of matrices"));
    };
    let basis = forms
        .iter()
        .enumerate()
        .map(|(i, form)| parse_matrix(form, &format!("$.forms[{i}]"), dim_v, dim_v))
        .collect::<Result<Vec<_>, _>>()?;
    TwoFormSpan::new(basis, real_structure).map_err(|e| err("$.forms", e.to_string()))
}

/// Serializes a span to the document shape accepted by
/// [`parse_two_form_span`].
pub fn span_to_value<S: WireScalar>(span: &TwoFormSpan<S>) -> Value {
    json!({
        "dimV": span.dim_v(),
        "forms": span.basis().iter().map(matrix_to_value).collect::<Vec<_>>(),
        "scalars": expected_tag::<S>(),
        "real_structure": span.real_structure(),
    })
}

// ---------------------------------------------------------------------------
// Quadratic forms and verification reports
// ---------------------------------------------------------------------------

fn normalization_to_value(normalization: &Normalization) -> Value {
    match normalization {
        Normalization::LeadingCoefficientOne { exponent } => json!({
            "convention": "leading_coefficient_one",
            "exponent": exponent,
        }),
        Normalization::PositiveConstant => json!({"convention": "positive_constant"}),
        Normalization::PositiveOnWitness { witness } => json!({
            "convention": "positive_on_witness",
            "witness": witness,
        }),
        Normalization::AsSupplied => json!({"convention": "as_supplied"}),
    }
}

/// Serializes an extracted quadratic form with its constant and the
/// normalization that fixed the representative.
pub fn quadratic_form_to_value<S: WireScalar>(q: &QuadraticFormOnSpan<S>) -> Value {
    json!({
        "gram": matrix_to_value(&q.gram),
        "c": q.c.to_atom(),
        "normalization": normalization_to_value(&q.normalization),
    })
}

fn quad_ext_to_value<S: WireScalar>(x: &QuadExt<S>) -> Value {
    json!({
        "a": x.a.to_atom(),
        "b": x.b.to_atom(),
        "e": x.e.to_atom(),
    })
}

fn witness_to_value<S>(witness: &Witness<S>) -> Value
where
    S: Complexify + WireScalar,
    S::C: WireScalar,
{
    match witness {
        Witness::WrongRankForm {
            coeffs,
            rank,
            expected_rank,
        } => json!({
            "kind": "wrong_rank_form",
            "coeffs": coeffs.iter().map(WireScalar::to_atom).collect::<Vec<_>>(),
            "rank": rank,
            "expected_rank": expected_rank,
        }),
        Witness::SampledNullForm {
            coeffs,
            rank,
            expected_rank,
        } => json!({
            "kind": "sampled_null_form",
            "coeffs": coeffs.iter().map(quad_ext_to_value).collect::<Vec<_>>(),
            "rank": rank,
            "expected_rank": expected_rank,
        }),
        Witness::NotPower { witness_exponent } => json!({
            "kind": "not_power",
            "witness_exponent": witness_exponent,
        }),
        Witness::AmbiguousFactor { nullspace_dim } => json!({
            "kind": "ambiguous_factor",
            "nullspace_dim": nullspace_dim,
        }),
        Witness::IdenticallyDegenerate => json!({"kind": "identically_degenerate"}),
    }
}

/// Serializes a verification report with every field of the decision.
pub fn report_to_value<S>(report: &KSymplecticReport<S>) -> Value
where
    S: Complexify + WireScalar,
    S::C: WireScalar,
{
    json!({
        "is_k_symplectic": report.is_k_symplectic,
        "q": report.q.as_ref().map(quadratic_form_to_value),
        "q_nondegenerate": report.q_nondegenerate,
        "signature": report.signature.map(|(m, p, z)| json!([m, p, z])),
        "witness": report.witness.as_ref().map(witness_to_value),
        "samples_checked": report.samples_checked,
        "notes": &report.notes,
    })
}

// ---------------------------------------------------------------------------
// Homogeneous polynomials and intersection models
// ---------------------------------------------------------------------------

fn parse_exponent_key(key: &str, path: &str, num_vars: usize) -> Result<Vec<u16>, WireError> {
    let parts: Vec<&str> = key.split(',').collect();
    if parts.len() != num_vars {
        return Err(err(
            path,
            format!(
                "exponent key {key:?} has {} entries, expected {num_vars}",
                parts.len()
            ),
        ));
    }
    parts
        .iter()
        .map(|part| {
            part.trim().parse().map_err(|_| {
                err(path, format!("exponent key {key:?} is not comma-joined integers"))
            })
        })
        .collect()
}

/// Parses `{"<e1,e2,...>": scalar, ...}` into a homogeneous polynomial of
/// the expected shape.
pub fn parse_homogeneous_poly<S: WireScalar>(
    value: &Value,
    path: &str,
    num_vars: usize,
    degree: u32,
) -> Result<HomogeneousPoly<S>, WireError> {
    let Value::Object(map) = value else {
        return Err(err(path, format!("expected an exponent → coefficient object, got {value}")));
    };
    let mut poly = HomogeneousPoly::zero(num_vars, degree);
    for (key, coeff_value) in map {
        let entry_path = format!("{path}.{key}");
        let expo = parse_exponent_key(key, &entry_path, num_vars)?;
        let total: u32 = expo.iter().map(|&e| u32::from(e)).sum();
        if total != degree {
            return Err(err(
                &entry_path,
                format!("exponents sum to {total}, expected degree {degree}"),
            ));
        }
        let coeff = S::from_atom(coeff_value, &entry_path)?;
        poly.add_term(expo, coeff);
    }
    Ok(poly)
}

/// Serializes a homogeneous polynomial as an exponent-keyed object.
pub fn poly_to_value<S: WireScalar>(p: &HomogeneousPoly<S>) -> Value {
    let mut map = Map::new();
    for (expo, coeff) in p.terms() {
        let key = expo
            .iter()
            .map(u16::to_string)
            .collect::<Vec<_>>()
            .join(",");
        map.insert(key, coeff.to_atom());
    }
    Value::Object(map)
}

/// Parses `{"b2": k, "n": n, "top_poly": {...}, "kahler_class": [...]}`
/// (the Kähler class is optional).
pub fn parse_intersection_model<S: WireScalar>(
    value: &Value,
) -> Result<IntersectionModel<S>, WireError> {
    let b2 = get_usize(value, "b2", "$")?;
    let n = get_usize(value, "n", "$")?;
    if n == 0 {
        return Err(err("$.n", "expected a positive integer"));
    }
    let top_poly = parse_homogeneous_poly(
        get(value, "top_poly", "$")?,
        "$.top_poly",
        b2,
        2 * n as u32,
    )?;
    let model = IntersectionModel::new(b2, n, top_poly)
        .map_err(|e| err("$.top_poly", e.to_string()))?;
    match value.get("kahler_class") {
        None | Some(Value::Null) => Ok(model),
        Some(Value::Array(coords)) => {
            if coords.len() != b2 {
                return Err(err(
                    "$.kahler_class",
                    format!("expected {b2} coordinates, got {}", coords.len()),
                ));
            }
            let kappa = coords
                .iter()
                .enumerate()
                .map(|(i, c)| S::from_atom(c, &format!("$.kahler_class[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(model.with_kahler_class(kappa))
        }
        Some(other) => Err(err(
            "$.kahler_class",
            format!("expected an array of coordinates, got {other}"),
        )),
    }
}

/// Serializes a model to the document shape accepted by
/// [`parse_intersection_model`]. Multilinear tables are a library-level
/// feature and stay off the wire.
pub fn intersection_model_to_value<S: WireScalar>(
    model: &IntersectionModel<S>,
) -> Value {
    json!({
        "b2": model.b2,
        "n": model.n,
        "top_poly": poly_to_value(&model.top_poly),
        "kahler_class": model
            .kahler_class
            .as_ref()
            .map(|k| k.iter().map(WireScalar::to_atom).collect::<Vec<_>>()),
    })
}

// ---------------------------------------------------------------------------
// Verdicts and classifications
// ---------------------------------------------------------------------------

/// Serializes an obstruction verdict; bounds that can exceed 2⁵³ go out as
/// decimal strings.
pub fn obstruction_verdict_to_value(verdict: &ObstructionVerdict) -> Value {
    json!({
        "b2": verdict.b2,
        "manifold_dim_c": verdict.manifold_dim_c,
        "naive_torus_bound": verdict.naive_torus_bound.to_string(),
        "clifford_signatures": [
            verdict.clifford_signatures.0,
            verdict.clifford_signatures.1,
        ],
        "refined_b1_bound": verdict.refined_b1_bound.to_string(),
        "refined_torus_dim_c_bound": verdict.refined_torus_dim_c_bound.to_string(),
        "max_proper_subvariety_dim_c": verdict.max_proper_subvariety_dim_c,
        "torus_possible": verdict.torus_possible,
        "narrative": &verdict.narrative,
    })
}

/// Renders any serializable value (e.g. an [`crate::clifford::AlgebraDescription`])
/// with sorted keys, then pretty-prints deterministically with a trailing
/// newline.
pub fn to_output_string(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("valid JSON tree");
    text.push('\n');
    text
}
