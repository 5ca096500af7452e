//! Generalized Pell numbers and the closed forms for snowflake endpoints,
//! perimeter, area, bounding square and dimension.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::arith::QuadraticSurd;
use crate::error::{domain, Result};
use crate::path::{sigma_circ, PathWord};
use crate::snowflake::q_word;
use crate::word::fib_number;

/// `P^[i](0) = -i`, `P^[i](1) = i + 1`, `P^[i](n) = 2P^[i](n-1) + P^[i](n-2)`.
/// For `i = 0` these are the Pell numbers.
pub fn pell_number(n: u32, i: u64) -> BigInt {
    let mut a = -BigInt::from(i);
    let mut b = BigInt::from(i) + 1;
    for _ in 0..n {
        let next = &b * 2 + &a;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `P^[i](n)` from its closed form in `Q(sqrt 2)`:
///
/// `((1+sqrt2)^n (sqrt2 - (2-2sqrt2)i) - (1-sqrt2)^n (sqrt2 + (2+2sqrt2)i)) / 4`.
pub fn pell_number_closed_form(n: u32, i: u64) -> Option<BigInt> {
    let i = i as i64;
    let up = QuadraticSurd::from_ints(1, 1, 1, 2);
    let down = QuadraticSurd::from_ints(1, -1, 1, 2);
    let c_up = QuadraticSurd::from_ints(-2 * i, 1 + 2 * i, 1, 2);
    let c_down = QuadraticSurd::from_ints(2 * i, 1 + 2 * i, 1, 2);
    let diff = up
        .pow(n as u64)
        .mul(&c_up)
        .sub(&down.pow(n as u64).mul(&c_down));
    diff.scale(&BigRational::new(1.into(), 4.into()))
        .to_integer()
}

/// The Pell parameter `k` attached to the family `i`: `(i-2)/2` for even `i`,
/// `(i-3)/2` for odd `i`.
pub fn pell_parameter(i: u64) -> Result<u64> {
    match i {
        0 => domain("family parameter i must be >= 1"),
        1 => domain("the i = 1 family has no Pell parameter (its snowflakes are not simple)"),
        _ if i % 2 == 0 => Ok((i - 2) / 2),
        _ => Ok((i - 3) / 2),
    }
}

fn check_order(n: u32) -> Result<()> {
    if n < 1 {
        return domain(format!("snowflake order must be >= 1, got {n}"));
    }
    Ok(())
}

/// An exact lattice vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointVector {
    pub x: BigInt,
    pub y: BigInt,
}

impl EndpointVector {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }
}

impl std::fmt::Display for EndpointVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for EndpointVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&JsonInt(&self.x))?;
        t.serialize_element(&JsonInt(&self.y))?;
        t.end()
    }
}

/// Serializes a big integer as a bare JSON number.
pub struct JsonInt<'a>(pub &'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n: serde_json::Number = self.0.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(serializer)
    }
}

/// Endpoint of `Σ°_0(q_m^[i])` from the closed form in the numbers
/// `P^[k](n)`, `m = 3n + r`.
pub fn endpoint_formula(m: u32, i: u64) -> Result<EndpointVector> {
    if m < 1 {
        return domain("endpoint needs a q index m >= 1");
    }
    let k = pell_parameter(i)?;
    let n = (m - 1) / 3;
    let p = |j: u32| pell_number(j, k);
    let sign = |v: BigInt| if n % 2 == 0 { v } else { -v };
    let even_n = n % 2 == 0;
    let v = match ((m - 1) % 3, i % 2 == 0) {
        (0, true) => EndpointVector::new(p(n + 1) + p(n), 0),
        (1, true) => EndpointVector::new(p(n + 1), sign(p(n + 1))),
        (2, true) => EndpointVector::new(p(n + 2), sign(p(n + 1))),
        (0, false) if even_n => EndpointVector::new(p(n + 1) + p(n), 0),
        (0, false) => EndpointVector::new(0, p(n + 1) + p(n)),
        (1, false) if even_n => EndpointVector::new(p(n + 2), p(n + 1)),
        (1, false) => EndpointVector::new(p(n + 1), p(n + 2)),
        _ => EndpointVector::new(p(n + 2), p(n + 2)),
    };
    Ok(v)
}

/// Endpoint of `Σ°_0(q_m^[i])` by tracing the path.
pub fn endpoint_trace(m: u32, i: u64) -> Result<EndpointVector> {
    if m < 1 {
        return domain("endpoint needs a q index m >= 1");
    }
    let q = q_word(m, i)?.word;
    Ok(displacement_of(&sigma_circ(0, &q)?))
}

fn displacement_of(w: &PathWord) -> EndpointVector {
    let d = w.displacement();
    EndpointVector::new(d.x, d.y)
}

/// `4 F_{3n-1}^[i]` (even `i`) or `4 F_{3n+1}^[i]` (odd `i`).
pub fn perimeter(n: u32, i: u64) -> Result<BigInt> {
    check_order(n)?;
    let idx = if i % 2 == 0 { 3 * n - 1 } else { 3 * n + 1 };
    Ok(BigInt::from(fib_number(idx, i)?) * 4)
}

/// `P^[k](n+1)^2 + P^[k](n)^2` (even `i`) or `P^[k](n+2)^2 + P^[k](n+1)^2`
/// (odd `i`).
pub fn area(n: u32, i: u64) -> Result<BigInt> {
    check_order(n)?;
    let k = pell_parameter(i)?;
    let s = if i % 2 == 0 { n } else { n + 1 };
    let (a, b) = (pell_number(s + 1, k), pell_number(s, k));
    Ok(&a * &a + &b * &b)
}

/// `A(n) = 6A(n-1) - A(n-2)`.
pub fn area_recurrence_holds(n: u32, i: u64) -> Result<bool> {
    if n < 3 {
        return domain(format!("area recurrence needs n >= 3, got {n}"));
    }
    Ok(area(n, i)? == area(n - 1, i)? * 6 - area(n - 2, i)?)
}

/// Side of the smallest axis-parallel square containing the snowflake:
/// `2P^[k](n+1) - 1` (even `i`) or `P^[k](n+1) + P^[k](n+2)` (odd `i`).
pub fn bounding_square_side(n: u32, i: u64) -> Result<BigInt> {
    check_order(n)?;
    let k = pell_parameter(i)?;
    Ok(if i % 2 == 0 {
        pell_number(n + 1, k) * 2 - 1
    } else {
        pell_number(n + 1, k) + pell_number(n + 2, k)
    })
}

fn ln_big(v: &BigInt) -> f64 {
    // keep 60 significant bits, account for the rest in the exponent
    let bits = v.bits();
    let shift = bits.saturating_sub(60);
    let mantissa = (v.abs() >> shift).to_f64().unwrap_or(f64::NAN);
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln(perimeter) / ln(bounding side)` of the order-`n` snowflake, computed
/// from exact integers.
pub fn dimension_estimate(i: u64, n: u32) -> Result<f64> {
    let per = perimeter(n, i)?;
    let side = bounding_square_side(n, i)?;
    if side <= BigInt::from(1) {
        return domain(format!("bounding side {side} too small for a log quotient"));
    }
    Ok(ln_big(&per) / ln_big(&side))
}

/// `ln(L(n+1)/L(n)) / ln(S(n+1)/S(n))` for perimeter `L` and side `S`.
pub fn dimension_ratio_estimate(i: u64, n: u32) -> Result<f64> {
    let num = ln_big(&perimeter(n + 1, i)?) - ln_big(&perimeter(n, i)?);
    let den = ln_big(&bounding_square_side(n + 1, i)?) - ln_big(&bounding_square_side(n, i)?);
    Ok(num / den)
}

/// `3 ln(phi) / ln(1 + sqrt 2)`.
pub fn dimension_limit() -> f64 {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    3.0 * phi.ln() / (1.0 + 2f64.sqrt()).ln()
}

/// The closed-form metrics of one snowflake.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub n: u32,
    pub i: u64,
    pub perimeter: BigInt,
    pub area: BigInt,
    pub bounding_side: BigInt,
    /// Endpoint of the side word `Σ°_0(q)` whose fourth power is the boundary,
    /// from the closed form.
    pub endpoint: EndpointVector,
    pub dimension_estimate: f64,
}

pub fn metrics_report(n: u32, i: u64) -> Result<MetricsReport> {
    check_order(n)?;
    let side_index = if i % 2 == 0 { 3 * n } else { 3 * n + 2 };
    Ok(MetricsReport {
        n,
        i,
        perimeter: perimeter(n, i)?,
        area: area(n, i)?,
        bounding_side: bounding_square_side(n, i)?,
        endpoint: endpoint_formula(side_index, i)?,
        dimension_estimate: dimension_estimate(i, n)?,
    })
}

impl Serialize for MetricsReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("MetricsReport", 5)?;
        s.serialize_field("perimeter", &JsonInt(&self.perimeter))?;
        s.serialize_field("area", &JsonInt(&self.area))?;
        s.serialize_field("bounding_side", &JsonInt(&self.bounding_side))?;
        s.serialize_field("endpoint", &self.endpoint)?;
        s.serialize_field("dimension_estimate", &self.dimension_estimate)?;
        s.end()
    }
}
