#![no_main]

use libfuzzer_sys::fuzz_target;
use ntcover::io::{parse_graph, parse_graph_with, serialize_graph, GraphReadOptions};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph(text) {
        let canonical = serialize_graph(&g);
        let back = parse_graph(&canonical).expect("canonical graph file parses");
        assert_eq!(back, g);
        assert_eq!(serialize_graph(&back), canonical);
    }
    let scaled = GraphReadOptions {
        weight_scale: Some(1000),
    };
    if let Ok(g) = parse_graph_with(text, scaled) {
        assert_eq!(parse_graph(&serialize_graph(&g)).as_ref(), Ok(&g));
    }
});
