#![no_main]
use libfuzzer_sys::fuzz_target;
use pfaffschub::coxeter::Diagram;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(d) = Diagram::parse_cells(s) {
        assert_eq!(Diagram::parse_cells(&d.to_cells_string()).unwrap(), d);
    }
});
