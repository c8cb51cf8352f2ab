#![no_main]

use libfuzzer_sys::fuzz_target;
use ntcover::geometry::intersection_graph;
use ntcover::io::{parse_shapes, serialize_shapes};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(set) = parse_shapes(text) {
        let canonical = serialize_shapes(&set);
        let back = parse_shapes(&canonical).expect("canonical shape file parses");
        assert_eq!(back, set);
        assert_eq!(serialize_shapes(&back), canonical);
        if set.len() <= 64 {
            let _ = intersection_graph(&set);
        }
    }
});
