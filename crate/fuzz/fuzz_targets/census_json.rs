#![no_main]
//! Fuzzes the census JSON schemas: Schubert cell censuses
//! `{"q":…,"n":…,"k":…,"cells":[…]}` and rank censuses
//! `{"q":…,"n":…,"m":…,"ranks":[…]}`.

use libfuzzer_sys::fuzz_target;
use schubert::oracle::{CellCensusReport, RankCensusReport};

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if input.len() > 65536 {
        return;
    }
    if let Ok(report) = CellCensusReport::from_json_str(input) {
        let json = report.to_json_string();
        assert_eq!(
            CellCensusReport::from_json_str(&json).expect("emitted JSON parses"),
            report
        );
    }
    if let Ok(report) = RankCensusReport::from_json_str(input) {
        let json = report.to_json_string();
        assert_eq!(
            RankCensusReport::from_json_str(&json).expect("emitted JSON parses"),
            report
        );
    }
});
