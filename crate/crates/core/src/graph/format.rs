//! graph6 and plain edge-list text formats.

use crate::error::{Error, Result};

use super::Graph;

const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;
const SMALL_N_MAX: usize = 62;
const MEDIUM_N_MAX: usize = 258_047;

fn g6_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 { offset, msg: msg.into() }
}

/// Decodes the size prefix, returning `(n, bytes consumed)`.
fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| g6_err(0, "empty record"))?;
    if first != MAX_BYTE {
        return Ok(((first - BIAS) as usize, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&MAX_BYTE) { (2, 6) } else { (1, 3) };
    if bytes.len() < start + width {
        return Err(g6_err(bytes.len(), "truncated size field"));
    }
    let n = bytes[start..start + width].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
    Ok((n, start + width))
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= SMALL_N_MAX {
        out.push(n as u8 + BIAS);
        return;
    }
    let width = if n <= MEDIUM_N_MAX {
        out.push(MAX_BYTE);
        3
    } else {
        out.extend([MAX_BYTE, MAX_BYTE]);
        6
    };
    for k in (0..width).rev() {
        out.push(((n >> (6 * k)) & 0x3f) as u8 + BIAS);
    }
}

/// Parses a single graph6 record. A trailing newline is tolerated; `n = 0` is rejected.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(i) = bytes.iter().position(|&b| !(BIAS..=MAX_BYTE).contains(&b)) {
        return Err(g6_err(i, format!("byte {} outside [63, 126]", bytes[i])));
    }
    let (n, header) = decode_size(bytes)?;
    if n == 0 {
        return Err(g6_err(0, "empty graph (n = 0) is not accepted"));
    }
    let nbits = n * (n - 1) / 2;
    let expected = header + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(g6_err(
            bytes.len().min(expected),
            format!("expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }
    let data = &bytes[header..];
    let mut adj = vec![Vec::new(); n];
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..nbits {
        let byte = data[k / 6] - BIAS;
        if byte >> (5 - k % 6) & 1 == 1 {
            adj[i].push(j);
            adj[j].push(i);
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[data.len() - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(bytes.len() - 1, "nonzero padding bits"));
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adj(adj))
}

/// Parses one graph6 record per non-blank line; results carry 1-based line numbers.
pub fn parse_graph6_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l.trim())))
        .collect()
}

/// Encodes `g` as graph6, using the multi-byte size field for `n > 62`.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the `n m` header plus `m` lines of `u v`. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, msg: String| Error::EdgeList { line, msg };
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            let tok = it.next().ok_or_else(|| err(line, format!("missing {what}")))?;
            tok.parse().map_err(|_| err(line, format!("invalid {what} {tok:?}")))
        };
        let a = next("first integer")?;
        let b = next("second integer")?;
        if it.next().is_some() {
            return Err(err(line, "trailing tokens".into()));
        }
        Ok((a, b))
    };

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing \"n m\" header".into()))?;
    let (n, m) = pair(hline, header)?;
    if n == 0 {
        return Err(err(hline, "empty graph (n = 0) is not accepted".into()));
    }
    let mut adj = vec![Vec::new(); n];
    let mut last_line = hline;
    let mut count = 0;
    for (line, l) in lines {
        last_line = line;
        if count == m {
            return Err(err(line, format!("more than the declared {m} edges")));
        }
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        if adj[u].contains(&v) {
            return Err(err(line, format!("duplicate edge {{{u},{v}}}")));
        }
        adj[u].push(v);
        adj[v].push(u);
        count += 1;
    }
    if count != m {
        return Err(err(last_line, format!("declared {m} edges, found {count}")));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adj(adj))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
