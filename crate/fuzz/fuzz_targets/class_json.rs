#![no_main]
//! Fuzzes the class JSON schema
//! `{"terms":[{"diagram":[2,1],"coeff":3},…],"k":…,"n":…}`.

use libfuzzer_sys::fuzz_target;
use schubert::ring::CohomologyClass;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if input.len() > 65536 {
        return;
    }
    if let Ok(class) = CohomologyClass::from_json_str(input) {
        let json = class.to_json_string();
        let reparsed = CohomologyClass::from_json_str(&json).expect("emitted JSON parses");
        assert_eq!(reparsed, class);
        assert_eq!(reparsed.to_json_string(), json);
    }
});
