#![no_main]

use bkit::wire;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    let Ok(v) = wire::parse_document(s) else { return };
    if let Ok(x) = wire::parse_module(&v) {
        let again = wire::parse_module(&wire::module_to_json(&x)).expect("serialized value parses");
        assert_eq!(again, x);
    }
});
