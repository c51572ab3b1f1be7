#![no_main]
use libfuzzer_sys::fuzz_target;
use pfaffschub::polyring::{Polynomial, TermOrder};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = Polynomial::from_json(s) {
        let j = f.to_json(TermOrder::RevLex).to_string();
        assert_eq!(Polynomial::from_json(&j).unwrap(), f);
    }
});
