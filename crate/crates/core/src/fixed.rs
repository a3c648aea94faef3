//! Exact decimal rendering of ratios with a fixed number of places.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// Renders `num / den` with `places` decimals, rounding half-up.
pub fn format_fixed(num: u64, den: u64, places: u32) -> String {
    assert!(den > 0, "zero denominator");
    let scale = 10u128.pow(places);
    let scaled = num as u128 * scale;
    let mut q = scaled / den as u128;
    if 2 * (scaled % den as u128) >= den as u128 {
        q += 1;
    }
    let int = q / scale;
    if places == 0 {
        return int.to_string();
    }
    format!("{int}.{:0width$}", q % scale, width = places as usize)
}

/// A ratio shown with a fixed number of decimals; serializes as a JSON number
/// with exactly those digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixed {
    pub value: Ratio<u64>,
    pub places: u32,
}

impl Fixed {
    pub fn new(value: Ratio<u64>, places: u32) -> Fixed {
        Fixed { value, places }
    }

    pub fn as_f64(&self) -> f64 {
        *self.value.numer() as f64 / *self.value.denom() as f64
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_fixed(*self.value.numer(), *self.value.denom(), self.places))
    }
}

impl Serialize for Fixed {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(self.to_string()).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}
