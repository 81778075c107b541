//! graph6 encoding: size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

impl Graph {
    /// Parses one graph6 line. A leading `>>graph6<<` header and trailing
    /// whitespace are ignored.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let text = text.trim_end();
        let text = text.strip_prefix(HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(Error::MalformedInput("empty graph6 string".into()));
        }
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(Error::MalformedInput(format!(
                "byte {b:#x} outside the graph6 range"
            )));
        }
        let (n, body) = if bytes[0] != 126 {
            ((bytes[0] - 63) as usize, &bytes[1..])
        } else if bytes.len() >= 4 && bytes[1] != 126 {
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        } else if bytes.len() >= 8 && bytes[1] == 126 {
            let n = bytes[2..8]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[8..])
        } else {
            return Err(Error::MalformedInput("truncated graph6 size header".into()));
        };
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange { n, limit: MAX_ORDER });
        }
        let bits = n * (n - 1) / 2;
        let need = bits.div_ceil(6);
        if body.len() != need {
            return Err(Error::MalformedInput(format!(
                "graph6 body has {} bytes, order {n} needs {need}",
                body.len()
            )));
        }
        let mut g = Graph::empty(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if (byte >> (5 - k % 6)) & 1 == 1 {
                    g.add_edge_mut(i, j);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// graph6 encoding with zero padding bits.
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out: Vec<u8> = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are ASCII")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_by_hand() {
        // n = 4 -> 'C'; six edge bits all set -> 63 + 63 = '~'
        let g = Graph::from_graph6("C~").unwrap();
        assert_eq!((g.order(), g.size()), (4, 6));
        assert_eq!(g.to_graph6(), "C~");
    }

    #[test]
    fn five_vertex_example_round_trips() {
        let g = Graph::from_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.to_graph6(), "D?{");
        // bits 6..9 are the column of vertex 4
        assert_eq!(g.degree(4), 4);
    }

    #[test]
    fn header_and_whitespace_are_tolerated() {
        let g = Graph::from_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            Graph::from_graph6(""),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            Graph::from_graph6("C"),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            Graph::from_graph6("C~~"),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            Graph::from_graph6("~"),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            Graph::from_graph6("C\u{7}"),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            Graph::from_graph6("?"),
            Err(Error::OrderOutOfRange { .. })
        ));
        // 1000 vertices in the four-byte form
        assert!(matches!(
            Graph::from_graph6("~?OG"),
            Err(Error::OrderOutOfRange { .. })
        ));
    }

    #[test]
    fn long_form_header() {
        let g = Graph::empty(100);
        let s = g.to_graph6();
        assert!(s.starts_with('~'));
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
    }

    proptest::proptest! {
        #[test]
        fn round_trip(n in 1usize..80, seed in proptest::prelude::any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.3) {
                        g.add_edge_mut(u, v);
                    }
                }
            }
            let s = g.to_graph6();
            let back = Graph::from_graph6(&s).unwrap();
            proptest::prop_assert_eq!(&back, &g);
            proptest::prop_assert_eq!(back.to_graph6(), s);
        }
    }
}
