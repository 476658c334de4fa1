//! Text formats: `.gr` graphs, set-cover instances, separator lines.
//!
//! External vertex ids are 1-indexed everywhere; internal ids are 0-indexed.

use std::collections::HashSet;
use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::graph::{Graph, Separator, VertexSet};
use crate::hardness::{GadgetGraph, SetCoverInstance};

fn number(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {tok:?}")))
}

/// Parses a `.gr` graph: optional `c` comment lines, a `p <tag> <n> <m>`
/// header, then exactly `m` lines `u v` with 1-indexed endpoints.
pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() || toks[0] == "c" {
            continue;
        }
        let Some((n, m, _)) = header else {
            if toks[0] != "p" || toks.len() != 4 {
                return Err(Error::parse(line, "expected header \"p <tag> <n> <m>\""));
            }
            let n = number(toks[2], line, "vertex count")?;
            let m = number(toks[3], line, "edge count")?;
            header = Some((n, m, line));
            continue;
        };
        if toks.len() != 2 {
            return Err(Error::parse(line, "expected an edge \"u v\""));
        }
        let u = number(toks[0], line, "vertex id")?;
        let v = number(toks[1], line, "vertex id")?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::parse(line, format!("index out of range 1..={n}")));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
        }
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than {m} edges")));
        }
        edges.push((u - 1, v - 1));
    }
    let Some((n, m, hline)) = header else {
        return Err(Error::parse(text.lines().count().max(1), "missing header"));
    };
    if edges.len() != m {
        return Err(Error::parse(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges).map_err(|e| Error::parse(hline, e.to_string()))
}

/// Writes `c` comment lines, the `p tw` header, and the edges in
/// lexicographic order.
pub fn write_gr(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("c ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("p tw {} {}\n", g.n(), g.m()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Gadget graph in `.gr` form with a comment per vertex label.
pub fn write_gadget(gg: &GadgetGraph) -> String {
    let comments: Vec<String> = gg
        .labels()
        .into_iter()
        .map(|(label, v)| format!("{label} {}", v + 1))
        .collect();
    write_gr(&gg.graph, &comments)
}

/// Parses `u <|U|> <|F|> <k>` followed by one line per set listing its
/// 1-indexed elements. The universe is `1..=|U|`.
pub fn parse_set_cover(text: &str) -> Result<SetCoverInstance> {
    let mut lines = text.lines().enumerate().skip_while(|(_, l)| {
        let t = l.trim();
        t.is_empty() || t == "c" || t.starts_with("c ")
    });
    let Some((hidx, header)) = lines.next() else {
        return Err(Error::parse(1, "missing header"));
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "u" {
        return Err(Error::parse(
            hidx + 1,
            "expected header \"u <|U|> <|F|> <k>\"",
        ));
    }
    let nu = number(toks[1], hidx + 1, "universe size")?;
    let nf = number(toks[2], hidx + 1, "family size")?;
    let k = number(toks[3], hidx + 1, "budget")?;
    let mut family = Vec::with_capacity(nf);
    // one line per set; a blank line is the empty set
    for (idx, l) in lines {
        if family.len() == nf {
            if l.trim().is_empty() {
                continue;
            }
            return Err(Error::parse(idx + 1, format!("more than {nf} sets")));
        }
        let set = l
            .split_whitespace()
            .map(|t| {
                let z = number(t, idx + 1, "element id")?;
                if z == 0 || z > nu {
                    return Err(Error::parse(
                        idx + 1,
                        format!("element {z} outside 1..={nu}"),
                    ));
                }
                Ok(z)
            })
            .collect::<Result<Vec<_>>>()?;
        family.push(set);
    }
    family.resize(nf, Vec::new());
    SetCoverInstance::new((1..=nu).collect(), family, k)
}

/// Inverse of [`parse_set_cover`] for instances whose universe is `1..=|U|`.
pub fn write_set_cover(inst: &SetCoverInstance) -> String {
    let mut out = format!(
        "u {} {} {}\n",
        inst.universe().len(),
        inst.family().len(),
        inst.budget()
    );
    for set in inst.family() {
        let line: Vec<String> = set.iter().map(|z| z.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Ascending 1-indexed ids separated by single spaces.
pub fn format_separator(s: &Separator) -> String {
    let ids: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
    ids.join(" ")
}

/// Parses a comma- or space-separated list of 1-indexed ids.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let v: usize = t
                .parse()
                .map_err(|_| Error::invalid(format!("bad vertex id {t:?}")))?;
            if v == 0 || v > n {
                return Err(Error::invalid(format!("vertex {v} outside 1..={n}")));
            }
            Ok(v - 1)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    /// One separator per line, ids separated by spaces.
    #[default]
    Lines,
    /// One JSON object per line.
    Json,
}

/// Writes separators one per line, flushing after each so consumers can
/// observe the delay between outputs.
pub struct SeparatorWriter<W: Write> {
    out: W,
    format: OutputFormat,
    count: u64,
}

impl<W: Write> SeparatorWriter<W> {
    pub fn new(out: W, format: OutputFormat) -> Self {
        SeparatorWriter {
            out,
            format,
            count: 0,
        }
    }

    pub fn write(&mut self, s: &Separator) -> io::Result<()> {
        match self.format {
            OutputFormat::Lines => writeln!(self.out, "{}", format_separator(s))?,
            OutputFormat::Json => {
                let ids: Vec<usize> = s.iter().map(|v| v + 1).collect();
                let obj = serde_json::json!({ "separator": ids, "size": ids.len() });
                writeln!(self.out, "{obj}")?;
            }
        }
        self.out.flush()?;
        self.count += 1;
        Ok(())
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Summary line for the diagnostics channel.
    pub fn summary(&self) -> String {
        format!("# count={}", self.count)
    }
}

/// Renders a separator stream as text (no summary line).
pub fn write_separators<'a>(stream: impl IntoIterator<Item = &'a Separator>) -> String {
    let mut buf = Vec::new();
    let mut w = SeparatorWriter::new(&mut buf, OutputFormat::Lines);
    for s in stream {
        w.write(s).expect("writing to memory");
    }
    String::from_utf8(buf).expect("ascii output")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_gr("p tw 3 2\n1 2\n2 3").unwrap(), p3());
        assert_eq!(parse_gr("c x\np tw 4 4\n1 2\n1 3\n2 4\n3 4").unwrap(), c4());
        assert_eq!(
            parse_gr("p tw 2 1\n1 3"),
            Err(Error::Parse {
                line: 2,
                message: "index out of range 1..=2".into()
            })
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_gr("1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_gr("p tw 3 2\n1 2\n2 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_gr("p tw 3 2\n1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_gr("p tw 3 1\n1 2\n2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_gr("p tw 3 1\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_gr("p tw x 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_gr("").is_err());
    }

    #[test]
    fn write_is_bit_exact() {
        assert_eq!(write_gr(&p3(), &["x".into()]), "c x\np tw 3 2\n1 2\n2 3\n");
    }

    #[test]
    fn separator_lines() {
        assert_eq!(write_separators(&[Separator::from([1, 2])]), "2 3\n");
        assert_eq!(write_separators(&[]), "");
        let mut buf = Vec::new();
        let mut w = SeparatorWriter::new(&mut buf, OutputFormat::Json);
        w.write(&Separator::from([0, 4])).unwrap();
        assert_eq!(w.summary(), "# count=1");
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"separator\":[1,5],\"size\":2}\n"
        );
    }

    #[test]
    fn set_cover_format() {
        let inst = parse_set_cover("u 2 2 1\n1 2\n1\n").unwrap();
        assert_eq!(inst.universe(), &[1, 2]);
        assert_eq!(inst.family(), &[vec![1, 2], vec![1]]);
        assert_eq!(inst.budget(), 1);
        assert_eq!(write_set_cover(&inst), "u 2 2 1\n1 2\n1\n");
        assert!(parse_set_cover("u 2 1 1\n3\n").is_err());
        assert!(parse_set_cover("u 2 1 1\n1\n2\n").is_err());
        assert_eq!(
            parse_set_cover("u 1 1 0\n").unwrap().family(),
            &[Vec::<usize>::new()]
        );
        let inst = parse_set_cover("c demo\nu 2 3 2\n1\n\n2\n").unwrap();
        assert_eq!(inst.family(), &[vec![1], vec![], vec![2]]);
        assert_eq!(write_set_cover(&inst), "u 2 3 2\n1\n\n2\n");
    }

    #[test]
    fn gadget_comments() {
        let inst = parse_set_cover("u 2 2 1\n1 2\n1\n").unwrap();
        let text = write_gadget(&crate::hardness::build_gadget(&inst));
        assert!(text.starts_with("c a 1\nc b 2\nc z1 3\nc z2 4\nc u1 5\nc w1 6\nc v1 7\n"));
        assert!(text.contains("p tw 10 15\n"));
        assert_eq!(parse_gr(&text).unwrap().m(), 15);
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(
            parse_vertex_list("1,3 2", 3).unwrap(),
            VertexSet::from([0, 1, 2])
        );
        assert!(parse_vertex_list("0", 3).is_err());
        assert!(parse_vertex_list("4", 3).is_err());
        assert!(parse_vertex_list("", 3).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn gr_round_trip(n in 1usize..12, bits in any::<u64>()) {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits >> (i % 64) & 1 == 1 {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            let g = Graph::new(n, edges).unwrap();
            prop_assert_eq!(parse_gr(&write_gr(&g, &[])).unwrap(), g);
        }
    }
}
