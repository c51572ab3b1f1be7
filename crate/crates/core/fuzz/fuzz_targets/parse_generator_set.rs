#![no_main]
use libfuzzer_sys::fuzz_target;
use pfaffschub::groebner::MonomialIdeal;
use pfaffschub::schubert_ideals::GeneratorSet;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = GeneratorSet::from_json(s) {
        assert_eq!(GeneratorSet::from_json(&g.to_json()).unwrap(), g);
    }
    if let Ok(m) = serde_json::from_str::<MonomialIdeal>(s) {
        let again: MonomialIdeal = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(again, m);
    }
});
