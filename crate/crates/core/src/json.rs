//! JSON interchange for matrices, parameters, words and certificates.
//!
//! Rationals are strings `"p/q"`. A Gaussian integer is `[re, im]`, with
//! each part a JSON number when it fits in an `i64` and a decimal string
//! otherwise. A Gaussian rational is `{"num": [re, im], "den": q}`; on input
//! the integer shorthand `[re, im]` is also accepted. A 4×4 matrix is
//! `{"rows": [[entry; 4]; 4]}` or the bare row array.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::arith::{format_rat, parse_rat, GaussInt, GaussRat, Rat};
use crate::cover::{CoverCertificate, PieceCertificate, Polygon, Region};
use crate::error::{Error, Result};
use crate::form::GroupElement;
use crate::heisenberg::{HeisPoint, Mat2};
use crate::langlands::LanglandsParams;
use crate::stab_words::StabWord;
use crate::word::GeneratorWord;

fn err(path: &str, what: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {what}"))
}

pub fn bigint_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn bigint_from_json(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| err(path, format!("{n} is not an integer"))),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| err(path, format!("{s:?} is not an integer"))),
        other => Err(err(path, format!("expected an integer, found {other}"))),
    }
}

pub fn rat_to_json(r: &Rat) -> Value {
    json!(format_rat(r))
}

pub fn rat_from_json(v: &Value, path: &str) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s).map_err(|e| err(path, e)),
        Value::Number(_) => Ok(Rat::from_integer(bigint_from_json(v, path)?)),
        other => Err(err(path, format!("expected a rational, found {other}"))),
    }
}

pub fn gauss_int_to_json(z: &GaussInt) -> Value {
    json!([bigint_to_json(&z.re), bigint_to_json(&z.im)])
}

pub fn gauss_int_from_json(v: &Value, path: &str) -> Result<GaussInt> {
    match v.as_array().map(Vec::as_slice) {
        Some([re, im]) => Ok(GaussInt::new(
            bigint_from_json(re, &format!("{path}[0]"))?,
            bigint_from_json(im, &format!("{path}[1]"))?,
        )),
        _ => Err(err(path, "expected [re, im]")),
    }
}

pub fn gauss_rat_to_json(z: &GaussRat) -> Value {
    json!({"num": gauss_int_to_json(z.numer()), "den": bigint_to_json(z.denom())})
}

pub fn gauss_rat_from_json(v: &Value, path: &str) -> Result<GaussRat> {
    if v.is_array() {
        return Ok(GaussRat::from_int(gauss_int_from_json(v, path)?));
    }
    let obj = v
        .as_object()
        .ok_or_else(|| err(path, "expected [re, im] or {\"num\", \"den\"}"))?;
    let num = gauss_int_from_json(
        obj.get("num").ok_or_else(|| err(path, "missing \"num\""))?,
        &format!("{path}.num"),
    )?;
    let den = match obj.get("den") {
        Some(d) => bigint_from_json(d, &format!("{path}.den"))?,
        None => BigInt::from(1),
    };
    if den == BigInt::from(0) {
        return Err(err(&format!("{path}.den"), "zero denominator"));
    }
    Ok(GaussRat::new(num, den))
}

pub fn matrix_to_json(g: &GroupElement) -> Value {
    let rows: Vec<Value> = g
        .rows()
        .iter()
        .map(|row| Value::Array(row.iter().map(gauss_rat_to_json).collect()))
        .collect();
    json!({ "rows": rows })
}

fn square_from_json<const N: usize>(v: &Value, path: &str) -> Result<[[GaussRat; N]; N]> {
    let (rows, path) = match v.get("rows") {
        Some(r) => (r, format!("{path}.rows")),
        None => (v, path.to_string()),
    };
    let rows = rows
        .as_array()
        .filter(|r| r.len() == N)
        .ok_or_else(|| err(&path, format!("expected {N} rows")))?;
    let mut out: [[GaussRat; N]; N] =
        std::array::from_fn(|_| std::array::from_fn(|_| GaussRat::zero()));
    for (i, row) in rows.iter().enumerate() {
        let row_path = format!("{path}[{i}]");
        let row = row
            .as_array()
            .filter(|r| r.len() == N)
            .ok_or_else(|| err(&row_path, format!("expected {N} entries")))?;
        for (j, x) in row.iter().enumerate() {
            out[i][j] = gauss_rat_from_json(x, &format!("{row_path}[{j}]"))?;
        }
    }
    Ok(out)
}

pub fn matrix_from_json(v: &Value, path: &str) -> Result<GroupElement> {
    Ok(GroupElement::from_rows(square_from_json::<4>(v, path)?))
}

pub fn mat2_from_json(v: &Value, path: &str) -> Result<Mat2> {
    square_from_json::<2>(v, path)
}

pub fn mat2_to_json(m: &Mat2) -> Value {
    let rows: Vec<Value> = m
        .iter()
        .map(|row| Value::Array(row.iter().map(gauss_rat_to_json).collect()))
        .collect();
    json!({ "rows": rows })
}

pub fn parse_json(text: &str, source: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{source}: {e}")))
}

pub fn heis_point_to_json(p: &HeisPoint) -> Value {
    json!({
        "xi": [gauss_rat_to_json(&p.xi[0]), gauss_rat_to_json(&p.xi[1])],
        "nu": rat_to_json(&p.nu),
    })
}

pub fn params_to_json(p: &LanglandsParams) -> Value {
    json!({
        "scalar_unit": gauss_int_to_json(&p.scalar_unit),
        "tau": [gauss_rat_to_json(&p.tau[0]), gauss_rat_to_json(&p.tau[1])],
        "t": rat_to_json(&p.t),
        "r": rat_to_json(&p.r),
        "u": mat2_to_json(&p.u),
    })
}

pub fn word_to_json(w: &GeneratorWord) -> Value {
    let letters: Vec<Value> =
        w.0.iter()
            .map(|l| json!({"generator": l.generator.name(), "exp": bigint_to_json(&l.exp)}))
            .collect();
    json!({"text": w.to_string(), "letters": letters})
}

pub fn stab_word_to_json(w: &StabWord) -> Value {
    json!({
        "word": word_to_json(&w.word),
        "scalar_unit": gauss_int_to_json(&w.scalar_unit),
        "parity": w.parity.name(),
    })
}

fn polygon_to_json(p: &Polygon) -> Value {
    Value::Array(
        p.vertices
            .iter()
            .map(|q| json!([rat_to_json(&q[0]), rat_to_json(&q[1])]))
            .collect(),
    )
}

pub fn region_to_json(r: &Region) -> Value {
    json!({
        "xi1": polygon_to_json(&r.xi1),
        "xi2": polygon_to_json(&r.xi2),
        "t": [rat_to_json(&r.t_lo), rat_to_json(&r.t_hi)],
    })
}

pub fn piece_to_json(p: &PieceCertificate) -> Value {
    let leaves: Vec<Value> = p
        .leaves
        .iter()
        .map(|l| json!({"box": region_to_json(&l.region), "sphere": l.sphere_id, "margin": rat_to_json(&l.margin)}))
        .collect();
    let uncovered: Vec<Value> = p
        .uncovered
        .iter()
        .map(|u| {
            let witness = match &u.witness {
                Some((a, b, t)) => json!({
                    "xi1": [rat_to_json(&a[0]), rat_to_json(&a[1])],
                    "xi2": [rat_to_json(&b[0]), rat_to_json(&b[1])],
                    "t": rat_to_json(t),
                }),
                None => Value::Null,
            };
            json!({"box": region_to_json(&u.region), "witness": witness})
        })
        .collect();
    let mut m = Map::new();
    m.insert("piece".into(), json!(p.piece));
    m.insert("complete".into(), json!(p.is_complete()));
    m.insert("depth".into(), json!(p.depth));
    m.insert("leaf_count".into(), json!(p.leaf_count()));
    if let Some(min) = p.min_margin() {
        m.insert("min_margin".into(), rat_to_json(min));
    }
    m.insert("leaves".into(), Value::Array(leaves));
    m.insert("uncovered".into(), Value::Array(uncovered));
    Value::Object(m)
}

pub fn certificate_to_json(c: &CoverCertificate) -> Value {
    json!({
        "max_depth": c.max_depth,
        "complete": c.is_complete(),
        "depth": c.depth(),
        "leaf_count": c.leaf_count(),
        "pieces": c.pieces.iter().map(piece_to_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::generators;

    #[test]
    fn matrices_roundtrip() {
        for (_, g) in generators::all() {
            let v = matrix_to_json(&g);
            assert_eq!(matrix_from_json(&v, "m").unwrap(), g);
        }
        let half = GroupElement::identity().scale(&GaussRat::from_rat(&rat(1, 2)));
        assert_eq!(matrix_from_json(&matrix_to_json(&half), "m").unwrap(), half);
    }

    #[test]
    fn shorthand_and_big_values() {
        let v: Value = serde_json::from_str(
            r#"[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0],[0,0]],[[0,0],[0,0],[1,0],[0,0]],[[0,0],[0,0],[0,0],["1",0]]]"#,
        )
        .unwrap();
        assert!(matrix_from_json(&v, "m").unwrap().is_identity());
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let z = GaussInt::new(big.clone(), -1);
        let j = gauss_int_to_json(&z);
        assert_eq!(j[0], json!(big.to_string()));
        assert_eq!(gauss_int_from_json(&j, "z").unwrap(), z);
    }

    #[test]
    fn errors_carry_positions() {
        let v: Value = serde_json::from_str(r#"{"rows": [[1,2,3,4]]}"#).unwrap();
        let e = matrix_from_json(&v, "m").unwrap_err().to_string();
        assert!(e.contains("m.rows"), "{e}");
        let v: Value = serde_json::from_str(
            r#"[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0],[0,0]],[[0,0],[0,0],[1,0],[0,0]],[[0,0],[0,0],[0,0],[1.5,0]]]"#,
        )
        .unwrap();
        let e = matrix_from_json(&v, "m").unwrap_err().to_string();
        assert!(e.contains("m[3][3][0]"), "{e}");
        let e = parse_json("{\n  \"rows\": [", "file.json")
            .unwrap_err()
            .to_string();
        assert!(e.contains("line 2"), "{e}");
    }
}
