//! JSON files describing representations.
//!
//! ```json
//! {"p": 3, "r": 1, "dim": 2, "generators": [[[1, 1], [0, 1]]], "basepoint": [1, 0]}
//! ```
//!
//! Over F_p entries are integers; over F_{p^r} each entry is its coefficient array
//! in the power basis (constant term first). Integers are also accepted there and
//! read as elements of F_p.

use serde::{Deserialize, Serialize};

use super::{basepoint_violations, Rep};
use crate::error::{Error, Result};
use crate::ff::{FieldCtx, FieldElem, Matrix, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(u64),
    Coeffs(Vec<u64>),
}

fn default_r() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub p: u64,
    #[serde(default = "default_r")]
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
    pub dim: usize,
    pub generators: Vec<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Vec<Entry>>,
}

fn entry(ctx: &FieldCtx, e: &Entry, path: &str) -> Result<FieldElem> {
    let elem = match e {
        Entry::Int(n) if *n < ctx.p() => Ok(ctx.from_int(*n)),
        Entry::Int(n) => Err(Error::Input(format!(
            "{path}: {n} is not a residue mod {}",
            ctx.p()
        ))),
        Entry::Coeffs(c) => ctx
            .from_coeffs(c.clone())
            .map_err(|err| Error::Input(format!("{path}: {err}"))),
    }?;
    Ok(elem)
}

fn vector(ctx: &FieldCtx, row: &[Entry], len: usize, path: &str) -> Result<Vector> {
    if row.len() != len {
        return Err(Error::Input(format!(
            "{path}: expected {len} entries, found {}",
            row.len()
        )));
    }
    row.iter()
        .enumerate()
        .map(|(j, e)| entry(ctx, e, &format!("{path}[{j}]")))
        .collect()
}

fn to_entry(ctx: &FieldCtx, x: &FieldElem) -> Entry {
    if ctx.r() == 1 {
        Entry::Int(x.coeffs()[0])
    } else {
        Entry::Coeffs(x.coeffs().to_vec())
    }
}

impl RepFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn field(&self) -> Result<FieldCtx> {
        let ctx = match &self.modulus {
            Some(m) => FieldCtx::with_modulus(self.p, m.clone()),
            None => FieldCtx::new(self.p, self.r),
        }
        .map_err(|e| Error::Input(format!("field: {e}")))?;
        if ctx.r() != self.r {
            return Err(Error::Input(format!(
                "modulus has degree {}, but r = {}",
                ctx.r(),
                self.r
            )));
        }
        Ok(ctx)
    }

    /// The representation and optional basepoint, validated.
    pub fn to_rep(&self) -> Result<(Rep, Option<Vector>)> {
        let ctx = self.field()?;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (g, rows) in self.generators.iter().enumerate() {
            if rows.len() != self.dim {
                return Err(Error::Input(format!(
                    "generators[{g}]: expected {} rows, found {}",
                    self.dim,
                    rows.len()
                )));
            }
            let rows = rows
                .iter()
                .enumerate()
                .map(|(i, row)| vector(&ctx, row, self.dim, &format!("generators[{g}][{i}]")))
                .collect::<Result<Vec<_>>>()?;
            gens.push(Matrix::from_rows(rows, self.dim)?);
        }
        let rep = Rep::new(ctx.clone(), self.dim, gens)?;
        let basepoint = match &self.basepoint {
            None => None,
            Some(v) => {
                let v = vector(&ctx, v, self.dim, "basepoint")?;
                let bad = basepoint_violations(&rep, &v);
                if !bad.is_empty() {
                    return Err(Error::InvalidRep(bad));
                }
                Some(v)
            }
        };
        Ok((rep, basepoint))
    }

    pub fn from_rep(rep: &Rep, basepoint: Option<&[FieldElem]>) -> Self {
        let ctx = rep.ctx();
        let generators = rep
            .generators()
            .iter()
            .map(|g| {
                (0..g.rows())
                    .map(|i| g.row(i).iter().map(|x| to_entry(ctx, x)).collect())
                    .collect()
            })
            .collect();
        Self {
            p: ctx.p(),
            r: ctx.r(),
            modulus: (ctx.r() > 1).then(|| ctx.modulus().to_vec()),
            dim: rep.dim(),
            generators,
            basepoint: basepoint.map(|v| v.iter().map(|x| to_entry(ctx, x)).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{basic_rep, big_rep, Violation};

    #[test]
    fn round_trip() {
        let f3 = FieldCtx::prime(3).unwrap();
        let b = basic_rep(&f3, 2);
        let file = RepFile::from_rep(b.rep(), Some(b.basepoint()));
        let back = RepFile::from_json(&file.to_json()).unwrap();
        let (rep, bp) = back.to_rep().unwrap();
        assert_eq!(&rep, b.rep());
        assert_eq!(bp.as_deref(), Some(b.basepoint()));

        let f9 = FieldCtx::new(3, 2).unwrap();
        let big = big_rep(&f9, 1).unwrap();
        let text = RepFile::from_rep(&big, None).to_json();
        assert!(text.contains("modulus"));
        let (rep, _) = RepFile::from_json(&text).unwrap().to_rep().unwrap();
        assert_eq!(rep, big);
    }

    #[test]
    fn errors_name_their_location() {
        let bad_order = r#"{"p": 3, "dim": 2, "generators": [[[1, 1], [0, 1]], [[2, 0], [0, 2]]]}"#;
        let err = RepFile::from_json(bad_order).unwrap().to_rep().unwrap_err();
        assert_eq!(
            err,
            Error::InvalidRep(vec![Violation::WrongOrder { generator: 1, p: 3 }])
        );

        let bad_entry = r#"{"p": 3, "dim": 2, "generators": [[[1, 5], [0, 1]]]}"#;
        let err = RepFile::from_json(bad_entry).unwrap().to_rep().unwrap_err();
        assert_eq!(
            err.to_string(),
            "input error: generators[0][0][1]: 5 is not a residue mod 3"
        );

        let ragged = r#"{"p": 2, "dim": 2, "generators": [[[1, 1], [0]]]}"#;
        assert!(RepFile::from_json(ragged).unwrap().to_rep().is_err());

        let syntax = "{\"p\": 2,\n \"dim\": }";
        let err = RepFile::from_json(syntax).unwrap_err();
        assert!(err.to_string().contains("line 2"));

        let not_fixed =
            r#"{"p": 2, "dim": 2, "generators": [[[1, 1], [0, 1]]], "basepoint": [0, 1]}"#;
        let err = RepFile::from_json(not_fixed).unwrap().to_rep().unwrap_err();
        assert_eq!(
            err,
            Error::InvalidRep(vec![Violation::BasepointNotFixed { generator: 0 }])
        );
    }
}
