#![no_main]

use libfuzzer_sys::fuzz_target;
use ntcover::io::parse_result;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = parse_result(text) {
        let _ = doc.to_claim();
        let json = serde_json::to_string_pretty(&doc).expect("document serializes");
        assert_eq!(parse_result(&json).as_ref(), Ok(&doc));
    }
});
