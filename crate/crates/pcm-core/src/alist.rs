use crate::error::AlistError;
use crate::matrix::BinaryMatrix;

/// A parsed alist file: dimensions, degree lists and both adjacencies.
///
/// Index lists are 1-based, as in the file format. A document produced by
/// [`parse_alist`] is always cross-consistent: the column and row
/// adjacencies describe the same matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlistDocument {
    pub n: usize,
    pub m: usize,
    pub max_col_degree: usize,
    pub max_row_degree: usize,
    pub col_degrees: Vec<usize>,
    pub row_degrees: Vec<usize>,
    /// For each column, the 1-based rows with a one in that column.
    pub col_indices: Vec<Vec<usize>>,
    /// For each row, the 1-based columns with a one in that row.
    pub row_indices: Vec<Vec<usize>>,
}

impl AlistDocument {
    /// Canonical document for a matrix: ascending indices, no padding.
    pub fn from_matrix(h: &BinaryMatrix) -> Self {
        let (m, n) = (h.rows(), h.cols());
        let row_indices: Vec<Vec<usize>> = (0..m)
            .map(|i| h.row_indices(i).iter().map(|&j| j + 1).collect())
            .collect();
        let mut col_indices: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, row) in row_indices.iter().enumerate() {
            for &j in row {
                col_indices[j - 1].push(i + 1);
            }
        }
        let col_degrees: Vec<usize> = col_indices.iter().map(Vec::len).collect();
        let row_degrees: Vec<usize> = row_indices.iter().map(Vec::len).collect();
        AlistDocument {
            n,
            m,
            max_col_degree: col_degrees.iter().copied().max().unwrap_or(0),
            max_row_degree: row_degrees.iter().copied().max().unwrap_or(0),
            col_degrees,
            row_degrees,
            col_indices,
            row_indices,
        }
    }

    /// Materializes the document as a packed matrix.
    pub fn to_matrix(&self) -> BinaryMatrix {
        let mut h = BinaryMatrix::zero(self.m, self.n);
        for (i, row) in self.row_indices.iter().enumerate() {
            for &j in row {
                h.set(i, j - 1, true);
            }
        }
        h
    }

    pub fn total_ones(&self) -> usize {
        self.row_degrees.iter().sum()
    }

    /// Serializes in canonical form: single spaces, LF endings, no padding.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push_str(&format!("{} {}\n", self.n, self.m));
        out.push_str(&format!("{} {}\n", self.max_col_degree, self.max_row_degree));
        out.push_str(&join(&self.col_degrees));
        out.push('\n');
        out.push_str(&join(&self.row_degrees));
        out.push('\n');
        for list in self.col_indices.iter().chain(self.row_indices.iter()) {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            out.push_str(&join(&sorted));
            out.push('\n');
        }
        out
    }
}

/// Writes a matrix as canonical alist text.
pub fn write_alist(h: &BinaryMatrix) -> String {
    AlistDocument::from_matrix(h).to_text()
}

/// Parses alist text, accepting both the zero-padded and unpadded dialects.
pub fn parse_alist(input: &[u8]) -> Result<AlistDocument, AlistError> {
    if let Some(pos) = input.iter().position(|&b| !b.is_ascii()) {
        return Err(AlistError::new(format!("non-ASCII byte at offset {pos}")));
    }
    let text = std::str::from_utf8(input).expect("ascii is valid utf8");
    let mut lines: Vec<&str> = text.lines().map(str::trim).collect();
    while lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }

    let mut header = lines.iter().copied().filter(|l| !l.is_empty());
    let mut next_header = |what: &str| -> Result<&str, AlistError> {
        header
            .next()
            .ok_or_else(|| AlistError::new(format!("missing {what} line")))
    };

    let dims = parse_ints(next_header("dimension")?, "dimension line")?;
    let [n, m] = dims[..] else {
        return Err(AlistError::new("dimension line must hold exactly two integers"));
    };
    if n == 0 || m == 0 || m > n {
        return Err(AlistError::new(format!(
            "invalid dimensions n={n} m={m} (need 1 <= m <= n)"
        )));
    }
    let maxes = parse_ints(next_header("max degree")?, "max degree line")?;
    let [max_col_degree, max_row_degree] = maxes[..] else {
        return Err(AlistError::new("max degree line must hold exactly two integers"));
    };
    let col_degrees = parse_ints(next_header("column degree")?, "column degrees")?;
    let row_degrees = parse_ints(next_header("row degree")?, "row degrees")?;
    if col_degrees.len() != n {
        return Err(AlistError::new(format!(
            "expected {n} column degrees, found {}",
            col_degrees.len()
        )));
    }
    if row_degrees.len() != m {
        return Err(AlistError::new(format!(
            "expected {m} row degrees, found {}",
            row_degrees.len()
        )));
    }
    let col_total: usize = col_degrees.iter().sum();
    let row_total: usize = row_degrees.iter().sum();
    if col_total != row_total {
        return Err(AlistError::new(format!(
            "degree sums disagree: columns {col_total}, rows {row_total}"
        )));
    }

    // Adjacency lines, one list per line. Zero-degree lists may appear as
    // blank lines, so try the verbatim tail first and fall back to the
    // blank-stripped tail.
    let header_end = {
        let mut seen = 0;
        let mut idx = 0;
        while seen < 4 {
            if !lines[idx].is_empty() {
                seen += 1;
            }
            idx += 1;
        }
        idx
    };
    // Trailing zero-degree lists may have been stripped with the trailing
    // blank lines, so pad the verbatim tail back out with empties.
    let mut tail: Vec<&str> = lines[header_end..].to_vec();
    while tail.len() < n + m {
        tail.push("");
    }
    let nonblank: Vec<&str> = tail.iter().copied().filter(|l| !l.is_empty()).collect();
    let adjacency: &[&str] = if tail.len() == n + m {
        &tail
    } else if nonblank.len() == n + m {
        &nonblank
    } else {
        return Err(AlistError::new(format!(
            "expected {} adjacency lines, found {}",
            n + m,
            tail.len()
        )));
    };

    let parse_lists = |lines: &[&str],
                           degrees: &[usize],
                           max_degree: usize,
                           bound: usize,
                           what: &str|
     -> Result<Vec<Vec<usize>>, AlistError> {
        let mut out = Vec::with_capacity(degrees.len());
        for (k, (&line, &degree)) in lines.iter().zip(degrees).enumerate() {
            if degree > max_degree {
                return Err(AlistError::new(format!(
                    "{what} {k} has degree {degree} above declared maximum {max_degree}"
                )));
            }
            let tokens = parse_ints(line, "adjacency list")?;
            let entries: Vec<usize> = {
                let mut e = tokens.clone();
                while e.last() == Some(&0) {
                    e.pop();
                }
                e
            };
            if entries.contains(&0) {
                return Err(AlistError::new(format!(
                    "{what} {k}: zero entries are only allowed as trailing padding"
                )));
            }
            if entries.len() != degree {
                return Err(AlistError::new(format!(
                    "{what} {k}: {} entries but declared degree {degree}",
                    entries.len()
                )));
            }
            if tokens.len() != entries.len() && tokens.len() > max_degree {
                return Err(AlistError::new(format!(
                    "{what} {k}: padded list longer than maximum degree {max_degree}"
                )));
            }
            if let Some(&bad) = entries.iter().find(|&&e| e > bound) {
                return Err(AlistError::new(format!(
                    "{what} {k}: index {bad} out of range 1..={bound}"
                )));
            }
            out.push(entries);
        }
        Ok(out)
    };

    let col_indices = parse_lists(&adjacency[..n], &col_degrees, max_col_degree, m, "column")?;
    let row_indices = parse_lists(&adjacency[n..], &row_degrees, max_row_degree, n, "row")?;

    // cross-consistency: both adjacencies must describe the same matrix
    let mut from_cols: Vec<(usize, usize)> = Vec::with_capacity(col_total);
    for (j, list) in col_indices.iter().enumerate() {
        for &i in list {
            from_cols.push((i, j + 1));
        }
    }
    let mut from_rows: Vec<(usize, usize)> = Vec::with_capacity(row_total);
    for (i, list) in row_indices.iter().enumerate() {
        for &j in list {
            from_rows.push((i + 1, j));
        }
    }
    from_cols.sort_unstable();
    from_rows.sort_unstable();
    if from_cols != from_rows {
        return Err(AlistError::new(
            "column and row adjacencies describe different matrices",
        ));
    }
    if from_cols.windows(2).any(|w| w[0] == w[1]) {
        return Err(AlistError::new("duplicate entry in adjacency list"));
    }

    Ok(AlistDocument {
        n,
        m,
        max_col_degree,
        max_row_degree,
        col_degrees,
        row_degrees,
        col_indices,
        row_indices,
    })
}

fn parse_ints(line: &str, what: &str) -> Result<Vec<usize>, AlistError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| AlistError::new(format!("{what}: non-integer token {tok:?}")))
        })
        .collect()
}
