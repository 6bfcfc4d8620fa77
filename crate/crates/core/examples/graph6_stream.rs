//! Round-trips graphs through graph6 and reads a stream with bad lines.

use pstlab::graph::{encode_graph6, parse_graph6, parse_graph6_stream, Graph};

fn main() {
    for g in [Graph::complete(2), Graph::path(3), Graph::cycle(5), Graph::hypercube(3)] {
        let s = encode_graph6(&g);
        assert_eq!(parse_graph6(&s).unwrap(), g);
        println!("{s:<6} {} vertices, {} edges", g.n(), g.edge_count());
    }
    let stream = ">>graph6<<A_\nBw\n\nB~\nC~\n";
    for (line, parsed) in parse_graph6_stream(stream) {
        match parsed {
            Ok(g) => println!("line {line}: {} vertices, {} edges", g.n(), g.edge_count()),
            Err(e) => println!("line {line}: {e}"),
        }
    }
}
