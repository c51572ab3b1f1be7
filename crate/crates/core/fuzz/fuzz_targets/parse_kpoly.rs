#![no_main]
use libfuzzer_sys::fuzz_target;
use pfaffschub::groebner::KPolynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(k) = KPolynomial::parse(s) {
        assert_eq!(KPolynomial::parse(&k.to_text()).unwrap(), k);
    }
});
