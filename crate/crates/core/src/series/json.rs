use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::floor::check_exponent;
use super::qseries::QSeries;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct Wire {
    floor: i64,
    order: i64,
    coeffs: Vec<(i64, Vec<(u32, String)>)>,
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut coeffs: Vec<(i64, Vec<(u32, String)>)> = Vec::new();
        for (q, z, c) in self.terms() {
            match coeffs.last_mut() {
                Some((lq, v)) if *lq == q => v.push((z, c.to_string())),
                _ => coeffs.push((q, vec![(z, c.to_string())])),
            }
        }
        Wire {
            floor: self.floor(),
            order: self.order(),
            coeffs,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(de)?;
        from_wire(w).map_err(D::Error::custom)
    }
}

fn from_wire(w: Wire) -> Result<QSeries> {
    if w.floor > 0 {
        return Err(Error::Parse("floor must be <= 0".into()));
    }
    check_exponent(w.floor)?;
    let mut terms = Vec::new();
    let mut last: Option<i64> = None;
    for (q, zs) in w.coeffs {
        if q < w.floor || q > w.order || last.is_some_and(|l| l >= q) {
            return Err(Error::Parse(format!("q-exponent {q} out of order or range")));
        }
        last = Some(q);
        for (z, c) in zs {
            let v: BigInt = c
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {c:?}")))?;
            terms.push((q, z, v));
        }
    }
    let s = QSeries::from_terms(w.order, terms)?;
    let lift = QSeries::monomial(BigInt::from(0), 0, w.floor, w.order);
    Ok(&s + &lift)
}

impl QSeries {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serializes")
    }

    pub fn from_json(s: &str) -> Result<QSeries> {
        let w: Wire = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        from_wire(w)
    }
}
