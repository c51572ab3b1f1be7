#![no_main]
use libfuzzer_sys::fuzz_target;
use pfaffschub::coxeter::{parse_fpf, Permutation};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = Permutation::parse_cycles(s) {
        let back = Permutation::parse_cycles(&w.to_cycle_string()).unwrap();
        assert_eq!(back, w);
    }
    for n in [2, 6] {
        if let Ok(z) = parse_fpf(s, n) {
            assert!(z.is_fpf_involution());
        }
    }
});
