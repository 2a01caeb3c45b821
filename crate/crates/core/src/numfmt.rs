//! Output formatting for floating-point reports.
//!
//! All user-facing floats carry 15 significant digits. Rounding to 15
//! digits and then printing the shortest round-trip representation never
//! produces more than 15 digits, so the JSON stays a plain number.

use serde::Serializer;

/// Rounds `x` to 15 significant decimal digits.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

pub fn serialize_sig15<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(sig15(*x))
}

pub fn serialize_opt_sig15<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&sig15(*v)),
        None => s.serialize_none(),
    }
}

/// Text rendering with 15 significant digits, in scientific notation
/// outside `[1e-4, 1e15)`.
pub fn fmt15(x: f64) -> String {
    let r = sig15(x);
    if r != 0.0 && r.is_finite() && !(1e-4..1e15).contains(&r.abs()) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}
