//! Embedded reference fixtures: the quadruple orbit table, the 82-row Burch
//! table, the face-orbit grid, the nine gluing rows, the 24-face catalog,
//! and the single pinned enumeration extra. Each file is checksummed at
//! load; reproduction must not depend on anything external.

use std::sync::OnceLock;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::kunz::{FaceCatalogEntry, FaceDelta, FaceId, Quadruple};
use crate::semigroup::NumericalSemigroup;

const TABLE1_JSON: &str = include_str!("fixtures/table1.json");
const TABLE3_JSON: &str = include_str!("fixtures/table3.json");
const TABLE4_JSON: &str = include_str!("fixtures/table4.json");
const TABLE5_JSON: &str = include_str!("fixtures/table5.json");
const CATALOG_JSON: &str = include_str!("fixtures/catalog.json");
const EXTRAS_JSON: &str = include_str!("fixtures/enumeration_extras.json");

const CHECKSUMS: [(&str, &str, &str); 6] = [
    ("table1.json", TABLE1_JSON, "50f58da25d2b2961eb18332791e526909bb748e97da9fcb8c15786ef1dba8219"),
    ("table3.json", TABLE3_JSON, "ead9f4d28968587d5bf5b79974aa3483f7ce13efc95e8a1c845cca91403230bb"),
    ("table4.json", TABLE4_JSON, "1c83625cc7accb8f93f885ddc784855f9fb635c9f78dbfe7951e40076a7dcd91"),
    ("table5.json", TABLE5_JSON, "b573bdf294e3356416b55c45d4d546631c5d92cc455796229e5c6162545da6da"),
    ("catalog.json", CATALOG_JSON, "87cc437fe00fb16e77ca209c4204894ca8c15141809ae2b9a164ad2e61641ac4"),
    ("enumeration_extras.json", EXTRAS_JSON, "ee480f1d549c044d0894dd1ce19803e3d43077377390a8eb63d82f463839f417"),
];

fn verify_checksums() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    CHECKED.get_or_init(|| {
        for (name, content, expected) in CHECKSUMS {
            let digest = hex_digest(content.as_bytes());
            if digest != expected {
                panic!("{}", Error::CorruptCatalog(format!("{name}: sha256 {digest} != {expected}")));
            }
        }
    });
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn parse<T: for<'de> Deserialize<'de>>(name: &str, content: &str) -> T {
    verify_checksums();
    serde_json::from_str(content)
        .unwrap_or_else(|e| panic!("{}", Error::CorruptCatalog(format!("{name}: {e}"))))
}

// --- table 1 -----------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub representative: Quadruple,
    pub cells: Vec<Quadruple>,
}

#[derive(Deserialize)]
struct Table1Json {
    rows: Vec<Table1RowJson>,
}

#[derive(Deserialize)]
struct Table1RowJson {
    representative: [u8; 4],
    cells: Vec<[u8; 4]>,
}

pub fn table1_rows() -> &'static [Table1Row] {
    static ROWS: OnceLock<Vec<Table1Row>> = OnceLock::new();
    ROWS.get_or_init(|| {
        let raw: Table1Json = parse("table1.json", TABLE1_JSON);
        raw.rows
            .into_iter()
            .map(|r| Table1Row {
                representative: Quadruple::new(r.representative).expect("fixture quadruple"),
                cells: r
                    .cells
                    .into_iter()
                    .map(|c| Quadruple::new(c).expect("fixture quadruple"))
                    .collect(),
            })
            .collect()
    })
}

// --- table 3 -----------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Table3Row {
    pub no: u32,
    pub semigroup: NumericalSemigroup,
    pub burch: bool,
}

#[derive(Deserialize)]
struct Table3Json {
    rows: Vec<Table3RowJson>,
}

#[derive(Deserialize)]
struct Table3RowJson {
    no: u32,
    generators: Vec<i64>,
    burch: bool,
}

pub fn table3_rows() -> &'static [Table3Row] {
    static ROWS: OnceLock<Vec<Table3Row>> = OnceLock::new();
    ROWS.get_or_init(|| {
        let raw: Table3Json = parse("table3.json", TABLE3_JSON);
        raw.rows
            .into_iter()
            .map(|r| Table3Row {
                no: r.no,
                semigroup: NumericalSemigroup::new(&r.generators).expect("fixture generators"),
                burch: r.burch,
            })
            .collect()
    })
}

// --- table 4 -----------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Table4Row {
    pub sigma: i64,
    pub faces: Vec<FaceId>,
}

#[derive(Deserialize)]
struct Table4Json {
    rows: Vec<Table4RowJson>,
}

#[derive(Deserialize)]
struct Table4RowJson {
    sigma: i64,
    faces: Vec<u8>,
}

pub fn table4_rows() -> &'static [Table4Row] {
    static ROWS: OnceLock<Vec<Table4Row>> = OnceLock::new();
    ROWS.get_or_init(|| {
        let raw: Table4Json = parse("table4.json", TABLE4_JSON);
        raw.rows
            .into_iter()
            .map(|r| Table4Row { sigma: r.sigma, faces: r.faces.into_iter().map(FaceId).collect() })
            .collect()
    })
}

// --- table 5 -----------------------------------------------------------

#[derive(Clone, Debug, Deserialize)]
pub struct Table5Row {
    pub multiplicity: i64,
    pub base: Vec<i64>,
    pub b: i64,
    /// d of the base module I₁ = (1, t^d)
    pub module_exponent: i64,
    pub generators: Vec<i64>,
    pub canonical: Vec<i64>,
    pub transferred: Vec<i64>,
}

#[derive(Deserialize)]
struct Table5Json {
    rows: Vec<Table5Row>,
}

pub fn table5_rows() -> &'static [Table5Row] {
    static ROWS: OnceLock<Vec<Table5Row>> = OnceLock::new();
    ROWS.get_or_init(|| parse::<Table5Json>("table5.json", TABLE5_JSON).rows)
}

// --- catalog -----------------------------------------------------------

#[derive(Deserialize)]
struct CatalogJson {
    faces: Vec<CatalogFaceJson>,
}

#[derive(Deserialize)]
struct CatalogFaceJson {
    id: u8,
    sigma: i64,
    source: u8,
    pairs: Vec<(u8, u8)>,
    sample: Vec<i64>,
}

pub(crate) fn catalog_entries() -> Vec<FaceCatalogEntry> {
    let raw: CatalogJson = parse("catalog.json", CATALOG_JSON);
    raw.faces
        .into_iter()
        .map(|f| FaceCatalogEntry {
            id: FaceId(f.id),
            delta: FaceDelta::new(9, f.pairs).expect("fixture pairs"),
            sigma: f.sigma,
            source: FaceId(f.source),
            sample: NumericalSemigroup::new(&f.sample).expect("fixture sample"),
        })
        .collect()
}

// --- enumeration extras ------------------------------------------------

/// A Δ-set the reference classification counts although it fails R4.
#[derive(Clone, Debug)]
pub struct EnumerationExtra {
    pub quadruple: Quadruple,
    pub delta: FaceDelta,
}

#[derive(Deserialize)]
struct ExtrasJson {
    extras: Vec<ExtraJson>,
}

#[derive(Deserialize)]
struct ExtraJson {
    quadruple: [u8; 4],
    pairs: Vec<(u8, u8)>,
}

pub fn enumeration_extras() -> &'static [EnumerationExtra] {
    static EXTRAS: OnceLock<Vec<EnumerationExtra>> = OnceLock::new();
    EXTRAS.get_or_init(|| {
        let raw: ExtrasJson = parse("enumeration_extras.json", EXTRAS_JSON);
        raw.extras
            .into_iter()
            .map(|e| EnumerationExtra {
                quadruple: Quadruple::new(e.quadruple).expect("fixture quadruple"),
                delta: FaceDelta::new(9, e.pairs).expect("fixture pairs"),
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksums_hold() {
        verify_checksums();
    }

    #[test]
    fn fixture_shapes() {
        assert_eq!(table1_rows().len(), 14);
        assert_eq!(table3_rows().len(), 82);
        assert_eq!(table4_rows().len(), 6);
        assert_eq!(table5_rows().len(), 9);
        assert_eq!(catalog_entries().len(), 24);
        assert_eq!(enumeration_extras().len(), 1);
    }

    #[test]
    fn table3_numbering_is_consistent() {
        let rows = table3_rows();
        assert_eq!(rows.first().unwrap().no, 1);
        assert_eq!(rows.last().unwrap().no, 120);
        assert!(rows.windows(2).all(|w| w[0].no < w[1].no));
        assert_eq!(rows.iter().filter(|r| !r.burch).count(), 7);
    }

    #[test]
    fn every_table3_sample_has_multiplicity_9() {
        for row in table3_rows() {
            assert_eq!(row.semigroup.multiplicity(), 9, "no. {}", row.no);
        }
    }
}
