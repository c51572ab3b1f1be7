#![no_main]
use libfuzzer_sys::fuzz_target;
use pfaffschub::verify::Replay;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = Replay::from_json(s) {
        assert_eq!(Replay::from_json(&r.to_json()).unwrap(), r);
    }
});
