#![no_main]
use libfuzzer_sys::fuzz_target;
use pfaffschub::polyring::{Polynomial, TermOrder};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = Polynomial::parse(s) {
        for order in [TermOrder::RevLex, TermOrder::DegLex] {
            assert_eq!(Polynomial::parse(&f.to_text(order)).unwrap(), f);
        }
    }
});
