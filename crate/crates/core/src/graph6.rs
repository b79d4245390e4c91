//! graph6 encoding for graphs with at most 16 vertices (single size byte).
//!
//! The upper triangle is written column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte with the
//! most significant bit first and each byte offset by 63.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some((pos, &b)) = bytes
        .iter()
        .enumerate()
        .find(|(_, b)| !(63..=126).contains(*b))
    {
        return Err(Error::MalformedRecord(format!(
            "byte {b} at offset {pos} is outside 63..=126"
        )));
    }
    let (&size, data) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedRecord("empty record".into()))?;
    let n = (size - OFFSET) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "graph6 records with n={n} are not supported (1..={MAX_VERTICES})"
        )));
    }
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Error::TruncatedRecord {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Error::MalformedRecord(format!(
            "{} trailing bytes after {expected} data bytes",
            data.len() - expected
        )));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "n={n} exceeds {MAX_VERTICES}"
        )));
    }
    let mut data = vec![0u8; data_len(n)];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + OFFSET) as char);
    out.extend(data.into_iter().map(|b| (b + OFFSET) as char));
    Ok(out)
}

/// Reads one graph per non-empty line.
pub fn read_all<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(decode(line.trim())?);
    }
    Ok(out)
}

/// Writes one newline-terminated record per graph.
pub fn write_all<W: Write>(mut writer: W, graphs: &[Graph]) -> Result<()> {
    for g in graphs {
        writeln!(writer, "{}", encode(g)?)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_small_examples() {
        let k2 = decode("A_").unwrap();
        assert_eq!(k2.n(), 2);
        assert_eq!(k2.edges(), vec![(0, 1)]);

        let k4 = decode("C~").unwrap();
        assert!(k4.same_edges(&Graph::complete(4).unwrap()));

        let e2 = decode("A?").unwrap();
        assert_eq!(e2.n(), 2);
        assert_eq!(e2.edge_count(), 0);

        // size byte 'B' = 66 encodes three vertices
        let e3 = decode("B?").unwrap();
        assert_eq!((e3.n(), e3.edge_count()), (3, 0));
    }

    #[test]
    fn encode_small_examples() {
        assert_eq!(encode(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(encode(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(encode(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(encode(&Graph::empty(3).unwrap()).unwrap(), "B?");
    }

    #[test]
    fn known_geng_records() {
        // K3, P3 centred on vertex 2, and the 5-cycle 0-1-2-3-4.
        assert_eq!(decode("Bw").unwrap().edge_count(), 3);
        let p = decode("BW").unwrap();
        assert_eq!(p.edges(), vec![(0, 2), (1, 2)]);
        let c5 = decode("Dhc").unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            decode("C"),
            Err(Error::TruncatedRecord {
                expected: 1,
                found: 0
            })
        ));
        assert!(matches!(decode("C "), Err(Error::MalformedRecord(_))));
        assert!(matches!(decode("C\u{7f}"), Err(Error::MalformedRecord(_))));
        assert!(matches!(decode(""), Err(Error::MalformedRecord(_))));
        assert!(matches!(decode("~~~"), Err(Error::UnsupportedSize(_))));
        assert!(matches!(decode("C~~"), Err(Error::MalformedRecord(_))));
    }

    #[test]
    fn pad_bits_are_ignored() {
        // n=3 has 3 data bits; the low three bits of the byte are padding.
        let clean = decode("Bw").unwrap();
        let noisy = decode("B~").unwrap();
        assert!(clean.same_edges(&noisy));
    }

    #[test]
    fn sixteen_vertex_round_trip() {
        let g = Graph::cycle(16).unwrap();
        let s = encode(&g).unwrap();
        assert_eq!(s.len(), 1 + 20);
        assert!(decode(&s).unwrap().same_edges(&g));
    }
}
