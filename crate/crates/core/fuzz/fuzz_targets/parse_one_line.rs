#![no_main]
use libfuzzer_sys::fuzz_target;
use pfaffschub::coxeter::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = Permutation::parse_one_line(s) {
        assert_eq!(Permutation::parse_one_line(&w.to_one_line()).unwrap(), w);
        assert_eq!(w.compose(&w.inverse()).unwrap(), Permutation::identity());
    }
});
