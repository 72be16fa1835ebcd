//! Bundled germs with known Milnor numbers.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{parse_poly, Poly};

const CORPUS_JSON: &str = include_str!("../data/corpus.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub poly: String,
    pub vars: Vec<String>,
    pub mu: u64,
}

impl CorpusEntry {
    pub fn germ(&self) -> Result<Poly> {
        Ok(parse_poly(&self.poly, &self.vars)?)
    }
}

pub fn bundled() -> Vec<CorpusEntry> {
    serde_json::from_str(CORPUS_JSON).expect("bundled corpus is valid JSON")
}

pub fn find(name: &str) -> Option<CorpusEntry> {
    bundled().into_iter().find(|e| e.name == name)
}
