//! Bialgebra spec files: JSON structure constants with exact scalar literals.

use std::fmt;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use skewverify_core::bialg::{Bialgebra, Cobraiding};
use skewverify_core::exactla::{Field, LinMap, Scalar, Space};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

/// A scalar literal as written in the file: a string (`"-3/4"`) or an
/// integer. Floats are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Literal(pub String);

impl Serialize for Literal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Literal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a scalar as a string such as \"-3/4\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Literal, E> {
                Ok(Literal(v.to_string()))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Literal, E> {
                Ok(Literal(v.to_string()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Literal, E> {
                Ok(Literal(v.to_string()))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Literal, E> {
                Err(E::custom(format!(
                    "floating-point scalar {v}; write exact scalars as strings"
                )))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    /// Row `i·n + j` holds the coefficients of `eᵢeⱼ`.
    pub mu: Vec<Vec<Literal>>,
    /// Row `i` holds `Δ(eᵢ)` with column `j·n + k` the coefficient of `eⱼ⊗eₖ`.
    pub delta: Vec<Vec<Literal>>,
    pub eps: Vec<Literal>,
    pub eta: Vec<Literal>,
    /// Entry `i·n + j` is `r(eᵢ⊗eⱼ)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Literal>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rbar: Option<Vec<Literal>>,
}

fn invalid(field: impl Into<String>, msg: impl Into<String>) -> CliError {
    CliError::Validation {
        field: field.into(),
        msg: msg.into(),
    }
}

pub fn parse_spec_str(text: &str) -> Result<BialgebraSpec, CliError> {
    let spec: BialgebraSpec = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    spec.validate()?;
    Ok(spec)
}

pub fn parse_spec(path: &Path) -> Result<BialgebraSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_spec_str(&text)
}

impl BialgebraSpec {
    pub fn field(&self) -> Result<Field, CliError> {
        match self.field {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { p } => Field::prime(p).map_err(|e| invalid("field", e.to_string())),
        }
    }

    /// Shapes, basis names and scalar literals; the algebraic laws are left
    /// to the bialgebra suite.
    pub fn validate(&self) -> Result<(), CliError> {
        let n = self.dim;
        let field = self.field()?;
        if n == 0 {
            return Err(invalid("dim", "must be at least 1"));
        }
        if self.basis.len() != n {
            return Err(invalid(
                "basis",
                format!("{} names for dimension {n}", self.basis.len()),
            ));
        }
        for (i, b) in self.basis.iter().enumerate() {
            if b.is_empty() || self.basis[..i].contains(b) {
                return Err(invalid(format!("basis[{i}]"), format!("empty or repeated name {b:?}")));
            }
        }
        let table = |name: &str, rows: &[Vec<Literal>], nrows: usize, ncols: usize| -> Result<(), CliError> {
            if rows.len() != nrows {
                return Err(invalid(name, format!("{} rows, expected {nrows}", rows.len())));
            }
            for (i, row) in rows.iter().enumerate() {
                if row.len() != ncols {
                    return Err(invalid(
                        format!("{name}[{i}]"),
                        format!("{} entries, expected {ncols}", row.len()),
                    ));
                }
                for (j, x) in row.iter().enumerate() {
                    field
                        .parse(&x.0)
                        .map_err(|_| invalid(format!("{name}[{i}][{j}]"), format!("bad scalar {:?}", x.0)))?;
                }
            }
            Ok(())
        };
        let vector = |name: &str, v: &[Literal], len: usize| -> Result<(), CliError> {
            if v.len() != len {
                return Err(invalid(name, format!("{} entries, expected {len}", v.len())));
            }
            for (i, x) in v.iter().enumerate() {
                field
                    .parse(&x.0)
                    .map_err(|_| invalid(format!("{name}[{i}]"), format!("bad scalar {:?}", x.0)))?;
            }
            Ok(())
        };
        table("mu", &self.mu, n * n, n)?;
        table("delta", &self.delta, n, n * n)?;
        vector("eps", &self.eps, n)?;
        vector("eta", &self.eta, n)?;
        if let Some(r) = &self.r {
            vector("r", r, n * n)?;
        }
        match (&self.r, &self.rbar) {
            (None, Some(_)) => return Err(invalid("rbar", "given without r")),
            (_, Some(rbar)) => vector("rbar", rbar, n * n)?,
            _ => {}
        }
        Ok(())
    }

    pub fn space(&self) -> Space {
        Space::with_basis("B", self.basis.clone())
    }

    fn scalars(&self, field: Field, v: &[Literal]) -> Vec<Scalar> {
        v.iter()
            .map(|x| field.parse(&x.0).expect("validated literal"))
            .collect()
    }

    pub fn bialgebra(&self) -> Result<Bialgebra, CliError> {
        self.validate()?;
        let field = self.field()?;
        let b = self.space();
        let k = Space::unit();
        let bb = b.tensor(&b);
        let cols =
            |rows: &[Vec<Literal>]| -> Vec<Vec<Scalar>> { rows.iter().map(|r| self.scalars(field, r)).collect() };
        let sparse = |v: &[Scalar]| -> Vec<(usize, Scalar)> {
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect()
        };
        let mu = cols(&self.mu);
        let delta = cols(&self.delta);
        let eps = self.scalars(field, &self.eps);
        let eta = self.scalars(field, &self.eta);
        Bialgebra::new(
            b.clone(),
            field,
            LinMap::from_fn(bb.clone(), b.clone(), field, |j| sparse(&mu[j])),
            LinMap::from_fn(k.clone(), b.clone(), field, |_| sparse(&eta)),
            LinMap::from_fn(b.clone(), bb.clone(), field, |i| sparse(&delta[i])),
            LinMap::from_fn(b.clone(), k.clone(), field, |i| sparse(&[eps[i].clone()])),
        )
        .map_err(|e| invalid("structure maps", e.to_string()))
    }

    /// The cobraiding, if the file has one. A missing `rbar` is computed as
    /// the convolution inverse of `r`.
    pub fn cobraiding(&self, b: &Bialgebra) -> Result<Option<Cobraiding>, skewverify_core::Error> {
        let Some(r) = &self.r else { return Ok(None) };
        let field = b.field();
        let table = |v: &[Literal]| -> Vec<Vec<Scalar>> {
            let s = self.scalars(field, v);
            s.chunks(self.dim).map(<[Scalar]>::to_vec).collect()
        };
        let r = b.functional(&table(r))?;
        match &self.rbar {
            Some(rbar) => Ok(Some(Cobraiding {
                r,
                rbar: b.functional(&table(rbar))?,
            })),
            None => b.cobraiding(r).map(Some),
        }
    }

    /// A `BialgebraSpec` describing `b` (and `c`), as written to fixture files.
    pub fn from_bialgebra(name: Option<String>, b: &Bialgebra, c: Option<&Cobraiding>) -> Self {
        let n = b.dim();
        let lit = |s: Scalar| Literal(s.to_string());
        let column =
            |m: &LinMap, j: usize, len: usize| -> Vec<Literal> { (0..len).map(|i| lit(m.entry(i, j))).collect() };
        let functional = |m: &LinMap| -> Vec<Literal> { (0..n * n).map(|j| lit(m.entry(0, j))).collect() };
        BialgebraSpec {
            name,
            field: match b.field() {
                Field::Rational => FieldSpec::Rational,
                Field::Prime { p } => FieldSpec::Prime { p },
            },
            dim: n,
            basis: (0..n).map(|i| b.space().basis_name(i)).collect(),
            mu: (0..n * n).map(|j| column(b.mu(), j, n)).collect(),
            delta: (0..n).map(|i| column(b.delta(), i, n * n)).collect(),
            eps: (0..n).map(|i| lit(b.eps().entry(0, i))).collect(),
            eta: column(b.eta(), 0, n),
            r: c.map(|c| functional(&c.r)),
            rbar: c.map(|c| functional(&c.rbar)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use skewverify_core::bialg::{bicharacter_cobraiding, cyclic_group_algebra};

    #[test]
    fn round_trips_through_json() {
        let q = Field::Rational;
        let (b, c) = bicharacter_cobraiding(2, &q.from_i64(-1), q).unwrap();
        let spec = BialgebraSpec::from_bialgebra(Some("z2".into()), &b, Some(&c));
        let text = serde_json::to_string_pretty(&spec).unwrap();
        let back = parse_spec_str(&text).unwrap();
        assert_eq!(back, spec);
        let b2 = back.bialgebra().unwrap();
        assert_eq!(b2.mu(), b.mu());
        assert_eq!(b2.delta(), b.delta());
        assert_eq!(back.cobraiding(&b2).unwrap().unwrap(), c);
    }

    #[test]
    fn missing_rbar_is_computed() {
        let q = Field::Rational;
        let (b, c) = bicharacter_cobraiding(2, &q.from_i64(-1), q).unwrap();
        let mut spec = BialgebraSpec::from_bialgebra(None, &b, Some(&c));
        spec.rbar = None;
        assert_eq!(spec.cobraiding(&b).unwrap().unwrap().rbar, c.rbar);
    }

    #[test]
    fn rejects_floats_and_bad_shapes() {
        let b = cyclic_group_algebra(2, Field::Rational);
        let spec = BialgebraSpec::from_bialgebra(None, &b, None);
        let mut v = serde_json::to_value(&spec).unwrap();
        v["eps"][0] = serde_json::json!(1.5);
        let err = parse_spec_str(&v.to_string()).unwrap_err();
        assert!(matches!(err, CliError::Parse { .. }), "{err}");

        let mut bad = spec.clone();
        bad.mu.pop();
        assert!(matches!(bad.validate(), Err(CliError::Validation { ref field, .. }) if field == "mu"));

        let mut bad = spec.clone();
        bad.eta[1] = Literal("1/0".into());
        assert!(matches!(bad.validate(), Err(CliError::Validation { ref field, .. }) if field == "eta[1]"));

        let mut bad = spec;
        bad.rbar = Some(vec![]);
        assert!(bad.validate().is_err());
    }

    #[test]
    fn truncated_file_reports_position() {
        let err = parse_spec_str("{\n  \"field\": {\"kind\": \"rational\"},\n  \"dim\": 2,\n  \"basis\": [\"e\"")
            .unwrap_err();
        match err {
            CliError::Parse { line, .. } => assert_eq!(line, 4),
            other => panic!("{other}"),
        }
    }
}
