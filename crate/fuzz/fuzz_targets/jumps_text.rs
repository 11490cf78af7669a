#![no_main]
//! Fuzzes jumping-number parsing and, where a rectangle admits them, the
//! bijection with diagrams and rank tables.

use libfuzzer_sys::fuzz_target;
use schubert::young::{
    diagram_from_jumps, jumps_from_diagram, jumps_from_rank_table, rank_table_from_jumps,
    JumpingNumbers, RectangleContext,
};

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(jumps) = input.parse::<JumpingNumbers>() else {
        return;
    };
    let printed = jumps.to_string();
    assert_eq!(printed.parse::<JumpingNumbers>().expect("round trip"), jumps);

    let k = jumps.len() as u32;
    let Some(&max) = jumps.indices().last() else {
        return;
    };
    if k == 0 || max > 64 {
        return;
    }
    for n in [max, max + 1] {
        if k < n {
            let ctx = RectangleContext::new(k, n).expect("1 <= k < n");
            let diagram = diagram_from_jumps(&jumps, ctx).expect("valid jumps convert");
            assert_eq!(jumps_from_diagram(&diagram, ctx).expect("diagram fits"), jumps);
            let table = rank_table_from_jumps(&jumps, ctx).expect("valid jumps tabulate");
            assert_eq!(jumps_from_rank_table(&table), jumps);
        }
    }
});
