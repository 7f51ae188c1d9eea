//! Built-in knot table and the knot file format.
//!
//! A knot file is a JSON record:
//!
//! ```json
//! { "name": "trefoil", "strands": 4, "word": [2, 2, 2], "notes": "tb = 1" }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::front::PlatBraid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub strands: usize,
    pub word: Vec<usize>,
    #[serde(default)]
    pub notes: String,
}

impl KnotRecord {
    pub fn braid(&self) -> Result<PlatBraid> {
        PlatBraid::new(self.strands, self.word.clone())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let rec: KnotRecord = serde_json::from_str(text).map_err(|e| Error::KnotFile(e.to_string()))?;
        rec.braid().map_err(|e| Error::KnotFile(e.to_string()))?;
        Ok(rec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("knot record serializes")
    }
}

pub const M10_161_WORD: [usize; 35] =
    [4, 5, 2, 3, 4, 5, 6, 7, 8, 9, 1, 1, 4, 5, 6, 7, 8, 9, 2, 3, 4, 5, 6, 7, 5, 6, 7, 3, 4, 4, 1, 2, 6, 7, 8];

pub const M10_139_WORD: [usize; 38] = [
    6, 7, 8, 9, 10, 11, 12, 13, 13, 5, 7, 9, 11, 2, 4, 6, 8, 10, 11, 13, 12, 10, 11, 9, 10, 8, 9, 7, 8, 6, 7, 5, 6, 4,
    5, 3, 4, 2,
];

pub fn table() -> Vec<KnotRecord> {
    vec![
        KnotRecord {
            name: "m10_161".into(),
            strands: 10,
            word: M10_161_WORD.to_vec(),
            notes: "nondestabilizable Legendrian m(10_161) with nonmaximal tb; characteristic algebra nonvanishing"
                .into(),
        },
        KnotRecord {
            name: "m10_139".into(),
            strands: 14,
            word: M10_139_WORD.to_vec(),
            notes: "Legendrian m(10_139) with nonmaximal tb; contact homology vanishes over Z[t,t^-1]".into(),
        },
        KnotRecord {
            name: "unknot".into(),
            strands: 2,
            word: vec![],
            notes: "standard Legendrian unknot, tb = -1".into(),
        },
    ]
}

pub fn lookup(name: &str) -> Result<KnotRecord> {
    table().into_iter().find(|k| k.name == name).ok_or_else(|| Error::UnknownKnot(name.to_string()))
}

pub fn builtin(name: &str) -> Result<PlatBraid> {
    lookup(name)?.braid()
}
