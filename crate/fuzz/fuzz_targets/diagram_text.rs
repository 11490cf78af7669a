#![no_main]
//! Fuzzes the comma-separated diagram notation. Accepted inputs must
//! normalize to a form that survives a display/parse round trip.

use libfuzzer_sys::fuzz_target;
use schubert::young::YoungDiagram;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(diagram) = input.parse::<YoungDiagram>() {
        let printed = diagram.to_string();
        let reparsed: YoungDiagram = printed.parse().expect("printed diagrams always parse");
        assert_eq!(reparsed, diagram);
        // Normalized parts are weakly decreasing with no trailing zeros.
        assert!(diagram.parts().windows(2).all(|w| w[0] >= w[1]));
        assert!(diagram.parts().last().is_none_or(|&p| p > 0));
    }
});
