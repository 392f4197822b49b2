//! Catalogs of pairwise non-isomorphic solutions and their JSON-lines form.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, ClassificationReport};
use crate::error::{Error, Result};
use crate::solution::Solution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolutionClass {
    /// square-free 2-reductive
    Sf2r,
    Sf2rInv,
    /// multipermutation level at most 2
    TwoPerm,
    TwoPermInv,
    TwoRed,
    TwoRedInv,
    /// multipermutation level at most 1
    Perm,
}

impl SolutionClass {
    pub const ALL: [SolutionClass; 7] = [
        SolutionClass::Sf2r,
        SolutionClass::Sf2rInv,
        SolutionClass::TwoPerm,
        SolutionClass::TwoPermInv,
        SolutionClass::TwoRed,
        SolutionClass::TwoRedInv,
        SolutionClass::Perm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SolutionClass::Sf2r => "sf2r",
            SolutionClass::Sf2rInv => "sf2r-inv",
            SolutionClass::TwoPerm => "2perm",
            SolutionClass::TwoPermInv => "2perm-inv",
            SolutionClass::TwoRed => "2red",
            SolutionClass::TwoRedInv => "2red-inv",
            SolutionClass::Perm => "perm",
        }
    }

    pub fn involutive_only(self) -> bool {
        matches!(
            self,
            SolutionClass::Sf2rInv | SolutionClass::TwoPermInv | SolutionClass::TwoRedInv
        )
    }

    /// Membership test on an arbitrary solution, used by the oracle.
    pub fn contains(self, report: &ClassificationReport) -> bool {
        let inv_ok = !self.involutive_only() || report.involutive;
        let base = match self {
            SolutionClass::Sf2r | SolutionClass::Sf2rInv => report.square_free && report.two_reductive,
            SolutionClass::TwoPerm | SolutionClass::TwoPermInv => report.two_permutational,
            SolutionClass::TwoRed | SolutionClass::TwoRedInv => report.two_reductive,
            SolutionClass::Perm => matches!(report.mpl, Some(0..=1)),
        };
        report.braid && base && inv_ok
    }
}

impl fmt::Display for SolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolutionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SolutionClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

impl Serialize for SolutionClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for SolutionClass {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Where an entry came from: the index of its square-free base in the
/// matching square-free catalog and the isotope pair applied to that base.
/// Square-free catalogs and oracle output carry `base_index: null` and the
/// identity pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Provenance {
    pub base_index: Option<usize>,
    pub pi1: String,
    pub pi2: String,
}

impl Provenance {
    pub fn none() -> Provenance {
        Provenance {
            base_index: None,
            pi1: "id".to_string(),
            pi2: "id".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub solution: Solution,
    pub flags: ClassificationReport,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn new(solution: Solution, provenance: Provenance) -> CatalogEntry {
        let flags = classify(&solution);
        CatalogEntry {
            solution,
            flags,
            provenance,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Header {
    schema: u32,
    n: usize,
    class: SolutionClass,
    count: usize,
}

const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub n: usize,
    pub class: SolutionClass,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn solutions(&self) -> impl Iterator<Item = &Solution> {
        self.entries.iter().map(|e| &e.solution)
    }

    /// Entries whose flags pass `keep`, with the class relabeled.
    pub fn filtered(&self, class: SolutionClass, keep: impl Fn(&CatalogEntry) -> bool) -> Catalog {
        Catalog {
            n: self.n,
            class,
            entries: self.entries.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        let header = Header {
            schema: SCHEMA,
            n: self.n,
            class: self.class,
            count: self.entries.len(),
        };
        serde_json::to_writer(&mut out, &header)?;
        out.write_all(b"\n")?;
        for entry in &self.entries {
            serde_json::to_writer(&mut out, entry)?;
            out.write_all(b"\n")?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_jsonl_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    pub fn read_jsonl<R: BufRead>(input: R) -> Result<Catalog> {
        let mut lines = input.lines();
        let first = lines
            .next()
            .ok_or_else(|| Error::CatalogFormat("empty file".to_string()))??;
        let header: Header = serde_json::from_str(&first)?;
        if header.schema != SCHEMA {
            return Err(Error::CatalogFormat(format!(
                "unsupported schema {}",
                header.schema
            )));
        }
        let mut entries = Vec::with_capacity(header.count);
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let entry: CatalogEntry = serde_json::from_str(&line)?;
            if entry.solution.n() != header.n {
                return Err(Error::CatalogFormat(format!(
                    "entry of size {} in a catalog of size {}",
                    entry.solution.n(),
                    header.n
                )));
            }
            entries.push(entry);
        }
        if entries.len() != header.count {
            return Err(Error::CatalogFormat(format!(
                "header announces {} entries, found {}",
                header.count,
                entries.len()
            )));
        }
        Ok(Catalog {
            n: header.n,
            class: header.class,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn class_names_round_trip() {
        for c in SolutionClass::ALL {
            assert_eq!(c.as_str().parse::<SolutionClass>().unwrap(), c);
        }
        assert!(matches!("3perm".parse::<SolutionClass>(), Err(Error::UnknownClass(_))));
    }

    #[test]
    fn membership() {
        let base = classify(&samples::two_block_base());
        assert!(SolutionClass::Sf2rInv.contains(&base));
        assert!(SolutionClass::TwoRed.contains(&base));
        assert!(!SolutionClass::Perm.contains(&base));
        let ex = classify(&samples::irretractable_five());
        assert!(SolutionClass::ALL.iter().all(|c| !c.contains(&ex)));
    }

    #[test]
    fn jsonl_round_trip() {
        let cat = Catalog {
            n: 4,
            class: SolutionClass::Sf2r,
            entries: vec![
                CatalogEntry::new(Solution::trivial(4), Provenance::none()),
                CatalogEntry::new(
                    samples::two_block_base(),
                    Provenance {
                        base_index: Some(0),
                        pi1: "(0,1)".into(),
                        pi2: "id".into(),
                    },
                ),
            ],
        };
        let text = cat.to_jsonl_string();
        let first = text.lines().next().unwrap();
        assert_eq!(first, r#"{"schema":1,"n":4,"class":"sf2r","count":2}"#);
        assert!(text.lines().nth(2).unwrap().contains(r#""provenance":{"base_index":0,"pi1":"(0,1)","pi2":"id"}"#));
        let back = Catalog::read_jsonl(text.as_bytes()).unwrap();
        assert_eq!(back, cat);
        assert_eq!(back.to_jsonl_string(), text);
    }

    #[test]
    fn malformed_catalogs() {
        assert!(Catalog::read_jsonl("".as_bytes()).is_err());
        let bad = r#"{"schema":2,"n":1,"class":"perm","count":0}"#;
        assert!(matches!(Catalog::read_jsonl(bad.as_bytes()), Err(Error::CatalogFormat(_))));
        let short = r#"{"schema":1,"n":1,"class":"perm","count":1}"#;
        assert!(matches!(Catalog::read_jsonl(short.as_bytes()), Err(Error::CatalogFormat(_))));
    }
}
