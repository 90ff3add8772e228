//! JSON encodings of polynomials, marked bases, Gröbner fans and reports.
//!
//! Coefficients are written as decimal strings so that arbitrarily large
//! numerators survive the round trip; plain JSON integers are accepted on input.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::MatrixOrdering;
use crate::error::{Error, Result};
use crate::fan::GroebnerCone;
use crate::groebner::{MarkedBasis, MarkedPolynomial};
use crate::semigroup::AffineSemigroup;
use crate::{Cone, LatticeVector, QPolynomial, Rational};

#[derive(Serialize, Deserialize)]
struct TermDto {
    exp: LatticeVector,
    num: Value,
    den: Value,
}

#[derive(Serialize, Deserialize)]
struct PolyDto {
    terms: Vec<TermDto>,
}

#[derive(Serialize, Deserialize)]
struct ElementDto {
    poly: PolyDto,
    mark: LatticeVector,
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string().parse().map_err(|_| Error::Parse(n.to_string())),
        other => Err(Error::Parse(format!("expected an integer, got {other}"))),
    }
}

fn poly_dto(f: &QPolynomial) -> PolyDto {
    PolyDto {
        terms: f
            .terms()
            .iter()
            .map(|(e, c)| TermDto {
                exp: *e,
                num: Value::String(c.numer().to_string()),
                den: Value::String(c.denom().to_string()),
            })
            .collect(),
    }
}

fn poly_from_dto(ctx: &Arc<AffineSemigroup>, dto: PolyDto) -> Result<QPolynomial> {
    let mut terms = Vec::with_capacity(dto.terms.len());
    for t in dto.terms {
        let den = parse_int(&t.den)?;
        if den == BigInt::from(0) {
            return Err(Error::Parse("zero denominator".into()));
        }
        terms.push((t.exp, Rational::new(parse_int(&t.num)?, den)));
    }
    QPolynomial::from_terms(ctx, terms)
}

pub fn polynomial_to_json(f: &QPolynomial) -> Value {
    serde_json::to_value(poly_dto(f)).expect("polynomial serializes")
}

pub fn polynomial_from_json(ctx: &Arc<AffineSemigroup>, v: &Value) -> Result<QPolynomial> {
    let dto: PolyDto = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    poly_from_dto(ctx, dto)
}

/// Ordered list of {poly, mark}.
pub fn marked_basis_to_json(b: &MarkedBasis<Rational>) -> Value {
    let elems: Vec<ElementDto> =
        b.elements().iter().map(|e| ElementDto { poly: poly_dto(&e.poly), mark: e.mark }).collect();
    serde_json::to_value(elems).expect("basis serializes")
}

/// Reads a basis back; the context and ordering are not part of the encoding.
pub fn marked_basis_from_json(v: &Value, ordering: &MatrixOrdering) -> Result<MarkedBasis<Rational>> {
    let dtos: Vec<ElementDto> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let ctx = ordering.context();
    let elements = dtos
        .into_iter()
        .map(|d| Ok(MarkedPolynomial { poly: poly_from_dto(ctx, d.poly)?, mark: d.mark }))
        .collect::<Result<Vec<_>>>()?;
    MarkedBasis::new(elements, ordering.clone())
}

/// {"support": …, "cones": [{"rays", "multiplicity", "basis"}]} in angular order.
pub fn groebner_fan_to_json(support: &Cone, cones: &[GroebnerCone<Rational>]) -> Value {
    let mut sorted: Vec<&GroebnerCone<Rational>> = cones.iter().collect();
    sorted.sort_by(|a, b| crate::lattice::angular_cmp(a.cone.ray1(), b.cone.ray1()));
    let cones: Vec<Value> = sorted
        .iter()
        .map(|gc| {
            json!({
                "rays": [gc.cone.ray1(), gc.cone.ray2()],
                "multiplicity": gc.multiplicity(),
                "basis": marked_basis_to_json(&gc.basis),
            })
        })
        .collect();
    json!({ "support": support, "cones": cones })
}
