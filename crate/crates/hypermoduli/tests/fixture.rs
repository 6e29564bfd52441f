use std::path::Path;

use hypermoduli::fixture::{encode_table, load_table};
use hypermoduli_core::a4::{verify_locus, EntryStatus, LocusTable};

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/locus_table.json");

// HYPERMODULI_BLESS=1 rewrites the fixture from the built-in table
#[test]
fn fixture_matches_builtin() {
    let builtin = LocusTable::builtin();
    if std::env::var_os("HYPERMODULI_BLESS").is_some() {
        let text = serde_json::to_string_pretty(&encode_table(&builtin)).unwrap();
        std::fs::write(FIXTURE, text + "\n").unwrap();
    }
    assert_eq!(load_table(Path::new(FIXTURE)).unwrap(), builtin);
}

#[test]
fn statuses_agree_with_recomputation() {
    let table = load_table(Path::new(FIXTURE)).unwrap();
    for e in &table.entries {
        let report = verify_locus(&table, e.genus).unwrap();
        for c in &e.components {
            let matches = report
                .check(&format!("{} matches transcription", c.invariant))
                .unwrap()
                .passed;
            assert_eq!(
                matches,
                c.status == EntryStatus::Verified,
                "g = {}, {}",
                e.genus,
                c.invariant
            );
            assert!(
                report
                    .check(&format!("{} matches table", c.invariant))
                    .unwrap()
                    .passed
            );
        }
        if let Some(s) = &e.special {
            let name = format!("special value at mu = {} matches transcription", s.mu);
            assert_eq!(
                report.check(&name).unwrap().passed,
                s.status == EntryStatus::Verified,
                "g = {}",
                e.genus
            );
        }
    }
}
