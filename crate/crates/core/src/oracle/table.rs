//! Count tables keyed by the statistics the sweeps tally, and their JSON form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::composition::{parse_usize_list, Composition};
use crate::error::{Error, Result};
use crate::exact::ExactInteger;
use crate::partition::{IntegerPartition, PartitionSequence};
use crate::perm::Permutation;

/// What a table row counts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TallyKey {
    /// Product (or vertical) of the given cycle type.
    CycleType(IntegerPartition),
    /// `alpha`-separated, with `d_i` cycles inside block `i`.
    DVector(Vec<usize>),
    /// `alpha`-separated with the given `alpha`-type.
    AlphaType(PartitionSequence),
    /// `alpha`-separated, any cycle counts.
    Separated,
    /// Vertical of type `lambda` with `a` exceedances.
    CycleTypeExc { lambda: IntegerPartition, a: usize },
    AlphaTypeExc { lambda: PartitionSequence, a: usize },
    /// Number of non-trivial anti-exceedances.
    Ne(usize),
    /// One exact product permutation.
    Product(Permutation),
    /// Plane permutations with vertical `pi`, diagonal of type `eta`, `a` exceedances.
    PlaneCell { pi: Permutation, eta: IntegerPartition, a: usize },
}

impl fmt::Display for TallyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TallyKey::CycleType(l) => write!(f, "type:{l}"),
            TallyKey::DVector(d) => {
                let d: Vec<String> = d.iter().map(usize::to_string).collect();
                write!(f, "d:{}", d.join(","))
            }
            TallyKey::AlphaType(l) => write!(f, "alpha-type:{l}"),
            TallyKey::Separated => write!(f, "separated"),
            TallyKey::CycleTypeExc { lambda, a } => write!(f, "type-exc:{lambda};a={a}"),
            TallyKey::AlphaTypeExc { lambda, a } => write!(f, "alpha-type-exc:{lambda};a={a}"),
            TallyKey::Ne(v) => write!(f, "ne:{v}"),
            TallyKey::Product(p) => write!(f, "product:{p}"),
            TallyKey::PlaneCell { pi, eta, a } => write!(f, "plane:{pi};eta={eta};a={a}"),
        }
    }
}

fn field<'a>(s: &'a str, name: &str) -> Result<&'a str> {
    s.strip_prefix(name)
        .ok_or_else(|| Error::Parse(format!("expected {name:?} in {s:?}")))
}

fn parse_num(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|e| Error::Parse(format!("bad count {s:?}: {e}")))
}

impl FromStr for TallyKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "separated" {
            return Ok(TallyKey::Separated);
        }
        let (tag, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad tally key {s:?}")))?;
        Ok(match tag {
            "type" => TallyKey::CycleType(body.parse()?),
            "d" => TallyKey::DVector(parse_usize_list(body)?),
            "alpha-type" => TallyKey::AlphaType(body.parse()?),
            "ne" => TallyKey::Ne(parse_num(body)?),
            "product" => TallyKey::Product(body.parse()?),
            "type-exc" | "alpha-type-exc" => {
                let (l, a) = body
                    .rsplit_once(';')
                    .ok_or_else(|| Error::Parse(format!("bad tally key {s:?}")))?;
                let a = parse_num(field(a, "a=")?)?;
                if tag == "type-exc" {
                    TallyKey::CycleTypeExc { lambda: l.parse()?, a }
                } else {
                    TallyKey::AlphaTypeExc { lambda: l.parse()?, a }
                }
            }
            "plane" => {
                let mut it = body.split(';');
                let (Some(pi), Some(eta), Some(a), None) = (it.next(), it.next(), it.next(), it.next())
                else {
                    return Err(Error::Parse(format!("bad tally key {s:?}")));
                };
                TallyKey::PlaneCell {
                    pi: pi.parse()?,
                    eta: field(eta, "eta=")?.parse()?,
                    a: parse_num(field(a, "a=")?)?,
                }
            }
            _ => return Err(Error::Parse(format!("unknown tally key {s:?}"))),
        })
    }
}

/// Exact counts keyed by [`TallyKey`]. Serialized as `[[key, "count"], ...]`
/// in key order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    rows: BTreeMap<TallyKey, ExactInteger>,
}

impl CountTable {
    pub fn new() -> Self {
        CountTable::default()
    }

    pub fn add(&mut self, key: TallyKey, count: impl Into<BigInt>) {
        *self.rows.entry(key).or_default() += count.into();
    }

    /// Count for `key`, zero when absent.
    pub fn get(&self, key: &TallyKey) -> ExactInteger {
        self.rows.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TallyKey, &ExactInteger)> {
        self.rows.iter()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows whose key satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&TallyKey) -> bool) -> CountTable {
        CountTable {
            rows: self
                .rows
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn sum(&self) -> ExactInteger {
        self.rows.values().sum()
    }

    /// Componentwise sum; associative and commutative.
    pub fn merge(&mut self, other: &CountTable) {
        for (k, v) in &other.rows {
            *self.rows.entry(k.clone()).or_default() += v;
        }
    }
}

impl FromIterator<(TallyKey, ExactInteger)> for CountTable {
    fn from_iter<I: IntoIterator<Item = (TallyKey, ExactInteger)>>(iter: I) -> Self {
        let mut t = CountTable::new();
        for (k, v) in iter {
            t.add(k, v);
        }
        t
    }
}

impl Serialize for CountTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.rows.len()))?;
        for (k, v) in &self.rows {
            seq.serialize_element(&(k.to_string(), v.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for CountTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: Vec<(String, String)> = Vec::deserialize(d)?;
        let mut table = CountTable::new();
        for (k, v) in rows {
            let key: TallyKey = k.parse().map_err(D::Error::custom)?;
            let count: BigInt = v.parse().map_err(D::Error::custom)?;
            table.add(key, count);
        }
        Ok(table)
    }
}

/// The sweep an [`OracleResult`] came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    /// All ordered pairs of long cycles.
    Pairs,
    /// All long cycles `s` against one fixed diagonal.
    FixedDiagonal,
    /// All ordered pairs of long cycles, tallied by exact product.
    PairHistogram,
    /// All plane permutations, tallied by (vertical, diagonal type, exceedances).
    PlaneHistogram,
    /// Factorizations of one target permutation into two long cycles.
    Factorizations,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleQuery {
    pub kind: SweepKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Composition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<Permutation>,
}

impl OracleQuery {
    pub fn pairs(n: usize, alpha: Option<Composition>) -> Self {
        OracleQuery { kind: SweepKind::Pairs, n, alpha, diagonal: None }
    }

    /// Canonical text form, also the cache key.
    pub fn canonical(&self) -> String {
        let kind = match self.kind {
            SweepKind::Pairs => "pairs",
            SweepKind::FixedDiagonal => "fixed-diagonal",
            SweepKind::PairHistogram => "pair-histogram",
            SweepKind::PlaneHistogram => "plane-histogram",
            SweepKind::Factorizations => "factorizations",
        };
        let mut s = format!("{kind} n={}", self.n);
        if let Some(a) = &self.alpha {
            s.push_str(&format!(" alpha={a}"));
        }
        if let Some(d) = &self.diagonal {
            s.push_str(&format!(" diagonal={d}"));
        }
        s
    }
}

/// One sweep's output. `total` is the size of the enumerated space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub n: usize,
    pub query: OracleQuery,
    pub table: CountTable,
    #[serde(with = "crate::exact::serde_str::integer")]
    pub total: ExactInteger,
    pub version: String,
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_roundtrip_through_text() {
        let keys = vec![
            TallyKey::CycleType("2+2".parse().unwrap()),
            TallyKey::DVector(vec![1, 2]),
            TallyKey::AlphaType("[2 | 1+1]".parse().unwrap()),
            TallyKey::Separated,
            TallyKey::CycleTypeExc { lambda: "3+1".parse().unwrap(), a: 2 },
            TallyKey::AlphaTypeExc { lambda: "[1 | 2+1]".parse().unwrap(), a: 0 },
            TallyKey::Ne(3),
            TallyKey::Product("(1 2)(3)".parse().unwrap()),
            TallyKey::PlaneCell {
                pi: "(1 3)(2)".parse().unwrap(),
                eta: "3".parse().unwrap(),
                a: 1,
            },
        ];
        for k in keys {
            let text = k.to_string();
            assert_eq!(text.parse::<TallyKey>().unwrap(), k, "{text}");
        }
        assert!("bogus:1".parse::<TallyKey>().is_err());
    }

    #[test]
    fn table_json_uses_strings() {
        let mut t = CountTable::new();
        t.add(TallyKey::CycleType("4".parse().unwrap()), 6);
        t.add(TallyKey::CycleType("2+2".parse().unwrap()), 6);
        t.add(TallyKey::CycleType("4".parse().unwrap()), 4);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"[["type:2+2","6"],["type:4","10"]]"#);
        assert_eq!(serde_json::from_str::<CountTable>(&json).unwrap(), t);
    }

    #[test]
    fn merge_is_componentwise() {
        let k = TallyKey::Ne(1);
        let mut a: CountTable = [(k.clone(), BigInt::from(2))].into_iter().collect();
        let b: CountTable = [(k.clone(), BigInt::from(3)), (TallyKey::Ne(0), BigInt::from(1))]
            .into_iter()
            .collect();
        a.merge(&b);
        assert_eq!(a.get(&k), BigInt::from(5));
        assert_eq!(a.sum(), BigInt::from(6));
    }
}
