//! Catalog files: `{"groups":[{"name","degree","generators","expect"?}]}`.

use std::collections::HashSet;
use std::path::Path;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::constructions::{self, FamilySpec};
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// The bundled corpus as shipped; kept identical to [`corpus_catalog`].
pub const BUNDLED_CORPUS: &str = include_str!("../data/corpus.json");

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::bigser::option")]
    pub order: Option<BigUint>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::bigser::option")]
    pub exponent: Option<BigUint>,
    #[serde(
        rename = "E",
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::bigser::option"
    )]
    pub ratio_e: Option<BigUint>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::bigser::option")]
    pub d: Option<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expect>,
}

impl CatalogEntry {
    pub fn group(&self) -> Result<PermGroup> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        PermGroup::from_cycles(self.degree, &gens)
    }

    /// Entry for a built family, generators in cycle notation.
    pub fn from_group(name: &str, group: &PermGroup, expect: Option<Expect>) -> CatalogEntry {
        CatalogEntry {
            name: name.to_string(),
            degree: group.degree(),
            generators: group.generators().iter().map(|g| g.format_cycles()).collect(),
            expect,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub groups: Vec<CatalogEntry>,
}

impl Catalog {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serializes");
        s.push('\n');
        s
    }
}

/// Parses catalog text. Every generator is checked against its degree and
/// names must be unique; `origin` labels diagnostics.
pub fn parse_catalog_str(text: &str, origin: &Path) -> Result<Vec<CatalogEntry>> {
    let fail = |message: String| Error::Catalog {
        path: origin.to_path_buf(),
        message,
    };
    let catalog: Catalog = serde_json::from_str(text)
        .map_err(|e| fail(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let mut seen = HashSet::new();
    for (i, entry) in catalog.groups.iter().enumerate() {
        if !seen.insert(entry.name.as_str()) {
            return Err(fail(format!("group #{i}: duplicate name {:?}", entry.name)));
        }
        entry.group().map_err(|e| Error::Entry {
            name: entry.name.clone(),
            source: Box::new(fail(format!("group #{i}: {e}"))),
        })?;
    }
    Ok(catalog.groups)
}

pub fn parse_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_catalog_str(&text, path)
}

fn expect_of(e: &constructions::Expectations) -> Expect {
    Expect {
        order: e.order.clone(),
        exponent: e.exponent.clone(),
        ratio_e: e.ratio_e.clone(),
        d: e.d.map(|d| BigUint::from(d as u64)),
    }
}

/// The corpus rebuilt from its family definitions.
pub fn corpus_catalog() -> Result<Catalog> {
    let groups = constructions::corpus()
        .iter()
        .map(|e| {
            let group = e.spec.build()?;
            Ok(CatalogEntry::from_group(&e.name, &group, Some(expect_of(&e.expect))))
        })
        .collect::<Result<_>>()?;
    Ok(Catalog { groups })
}

pub fn bundled_corpus() -> Vec<CatalogEntry> {
    parse_catalog_str(BUNDLED_CORPUS, Path::new("<bundled corpus>"))
        .expect("bundled corpus is valid")
}

/// Single-entry catalog for one family, named by `name` or the family's
/// conventional name; the expected order is recorded.
pub fn family_catalog(spec: &FamilySpec, name: Option<&str>) -> Result<Catalog> {
    let group = spec.build()?;
    let expect = Expect {
        order: Some(spec.expected_order()),
        ..Expect::default()
    };
    let name = name.map_or_else(|| spec.name(), str::to_string);
    Ok(Catalog {
        groups: vec![CatalogEntry::from_group(&name, &group, Some(expect))],
    })
}
