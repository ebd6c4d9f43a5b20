use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format: a header line `n m`, followed by `m`
/// lines `u v` with 0-based endpoints. Blank lines and `#` comments are
/// ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::EdgeList { line, message: format!("expected two integers, got {:?}", l) });
        }
        let num = |s: &str| s.parse::<usize>().map_err(|e| Error::EdgeList { line, message: format!("{s:?}: {e}") });
        Ok((num(fields[0])?, num(fields[1])?))
    };

    let (hline, header) = lines.next().ok_or(Error::EdgeList { line: 0, message: "missing header".into() })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        g.add_edge(u, v).map_err(|e| Error::EdgeList { line, message: e.to_string() })?;
        count += 1;
    }
    if count != m || g.m() != m {
        return Err(Error::EdgeList {
            line: hline,
            message: format!("header declares {m} edges, found {count} lines ({} distinct edges)", g.m()),
        });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_edge_list("3 1\n0 5\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list(""), Err(Error::EdgeList { line: 0, .. })));
        assert!(matches!(parse_edge_list("2 2\n0 1\n1 0\n"), Err(Error::EdgeList { .. })));
    }
}
