#![no_main]

use libfuzzer_sys::fuzz_target;
use ntcover::io::{parse_instance, serialize_graph, serialize_shapes, Instance};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(instance) = parse_instance(text) {
        let canonical = match &instance {
            Instance::Graph(g) => serialize_graph(g),
            Instance::Shapes(s) => serialize_shapes(s),
        };
        assert_eq!(parse_instance(&canonical).as_ref(), Ok(&instance));
    }
});
