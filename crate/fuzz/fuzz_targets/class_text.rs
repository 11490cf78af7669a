#![no_main]
//! Fuzzes the class text form `3*[2,1] + 1*[1,1,1]` against a fixed
//! rectangle. Accepted inputs must round-trip through the canonical form.

use libfuzzer_sys::fuzz_target;
use schubert::ring::CohomologyClass;
use schubert::young::RectangleContext;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if input.len() > 4096 {
        return;
    }
    let ctx = RectangleContext::new(4, 8).expect("valid rectangle");
    if let Ok(class) = CohomologyClass::from_text(ctx, input) {
        let canonical = class.to_text();
        let reparsed = CohomologyClass::from_text(ctx, &canonical).expect("canonical form parses");
        assert_eq!(reparsed, class);
        // The pretty form parses to the same class as well.
        let pretty = class.to_string();
        assert_eq!(CohomologyClass::from_text(ctx, &pretty).expect("pretty form parses"), class);
    }
});
