//! The `.mx` matrix document format.
//!
//! ```text
//! # comments run to end of line
//! A = [ 1 2 1 ; 0 1 0 ; 1 1 1 ]
//! c = [ 3/2-1/3i ; -i ]
//! ```
//!
//! Entries are separated by whitespace or commas, rows by `;`. Layout across
//! lines is free.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::scalar::parse_scalar;
use crate::{ExactMatrix, GaussianRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct MxError {
    pub source_name: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for MxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}: {}", self.source_name, self.message)
        } else {
            write!(
                f,
                "{}:{}:{}: {}",
                self.source_name, self.line, self.column, self.message
            )
        }
    }
}

/// Named matrices in file order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MatrixDocument {
    entries: Vec<(String, ExactMatrix)>,
}

impl MatrixDocument {
    pub fn get(&self, name: &str) -> Option<&ExactMatrix> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ExactMatrix)> {
        self.entries.iter().map(|(n, m)| (n.as_str(), m))
    }

    pub fn insert(&mut self, name: &str, m: ExactMatrix) {
        match self.entries.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = m,
            None => self.entries.push((name.to_string(), m)),
        }
    }

    pub fn parse(text: &str, source_name: &str) -> Result<Self, MxError> {
        Parser {
            chars: text.char_indices().collect(),
            text,
            pos: 0,
            source_name,
        }
        .document()
    }

    pub fn read(path: &Path) -> Result<Self, MxError> {
        let name = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| MxError {
            source_name: name.clone(),
            line: 0,
            column: 0,
            message: format!("cannot read file: {e}"),
        })?;
        Self::parse(&text, &name)
    }
}

/// Renders a document that parses back to the same matrices.
impl fmt::Display for MatrixDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, m) in &self.entries {
            let rows: Vec<String> = m
                .row_slices()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            writeln!(f, "{name} = [ {} ]", rows.join(" ; "))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    text: &'a str,
    pos: usize,
    source_name: &'a str,
}

impl Parser<'_> {
    fn location(&self, index: usize) -> (usize, usize) {
        let byte = self.chars.get(index).map_or(self.text.len(), |(b, _)| *b);
        let before = &self.text[..byte];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, column)
    }

    fn error_at<T>(&self, index: usize, message: impl Into<String>) -> Result<T, MxError> {
        let (line, column) = self.location(index);
        Err(MxError {
            source_name: self.source_name.to_string(),
            line,
            column,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn skip_space(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while !matches!(self.peek(), None | Some('\n')) {
                    self.pos += 1;
                }
            } else if c.is_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<(), MxError> {
        self.skip_space();
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            self.error_at(self.pos, format!("expected '{want}'"))
        }
    }

    fn document(mut self) -> Result<MatrixDocument, MxError> {
        let mut doc = MatrixDocument::default();
        loop {
            self.skip_space();
            if self.peek().is_none() {
                return Ok(doc);
            }
            let start = self.pos;
            let name = self.identifier()?;
            if doc.get(&name).is_some() {
                return self.error_at(start, format!("matrix {name} defined twice"));
            }
            self.expect('=')?;
            self.expect('[')?;
            let m = self.body()?;
            doc.entries.push((name, m));
        }
    }

    fn identifier(&mut self) -> Result<String, MxError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            let ok = if self.pos == start {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_' || c == '\''
            };
            if !ok {
                break;
            }
            self.pos += 1;
        }
        if self.pos == start {
            return self.error_at(start, "expected a matrix name");
        }
        Ok(self.chars[start..self.pos].iter().map(|(_, c)| c).collect())
    }

    fn body(&mut self) -> Result<ExactMatrix, MxError> {
        let open = self.pos - 1;
        let mut rows: Vec<Vec<GaussianRational>> = vec![Vec::new()];
        loop {
            self.skip_space();
            match self.peek() {
                None => return self.error_at(open, "unterminated matrix"),
                Some(']') => {
                    self.pos += 1;
                    break;
                }
                Some(';') => {
                    self.pos += 1;
                    rows.push(Vec::new());
                }
                Some(',') => self.pos += 1,
                Some(_) => {
                    let value = self.scalar()?;
                    rows.last_mut().expect("nonempty").push(value);
                }
            }
        }
        if rows.iter().any(Vec::is_empty) {
            return self.error_at(open, "matrix has an empty row");
        }
        let width = rows[0].len();
        if let Some(bad) = rows.iter().position(|r| r.len() != width) {
            return self.error_at(
                open,
                format!("row {} has {} entries, expected {width}", bad + 1, rows[bad].len()),
            );
        }
        Ok(ExactMatrix::from_rows(rows))
    }

    fn scalar(&mut self) -> Result<GaussianRational, MxError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_whitespace() || matches!(c, ';' | ']' | ',' | '#') {
                break;
            }
            self.pos += 1;
        }
        let token: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        parse_scalar(&token).or_else(|e| {
            let offset = token[..e.position.min(token.len())].chars().count();
            self.error_at(start + offset, e.message)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_worked_example() {
        let doc = MatrixDocument::parse(
            "# AXB = C\nA = [ 1 2 1 ; 0 1 0 ; 1 1 1 ]\nB = [1, 1; 1, 1;\n 2, 2]\nc = [3/2-1/3i ; -i]\n",
            "t.mx",
        )
        .unwrap();
        assert_eq!(doc.names().collect::<Vec<_>>(), ["A", "B", "c"]);
        assert_eq!(doc.get("B").unwrap().shape(), crate::Shape(3, 2));
        assert_eq!(doc.get("c").unwrap().get(2, 1), &GaussianRational::from_integers(0, -1));
    }

    #[test]
    fn errors_name_line_and_column() {
        let err = MatrixDocument::parse("A = [1 2]\nB = [1 2x]\n", "bad.mx").unwrap_err();
        assert_eq!((err.line, err.column), (2, 9));
        assert!(err.to_string().starts_with("bad.mx:2:9:"));

        let err = MatrixDocument::parse("A = [1 2 ; 3]", "r.mx").unwrap_err();
        assert!(err.message.contains("row 2"));
        let err = MatrixDocument::parse("A = [1]\nA = [2]", "d.mx").unwrap_err();
        assert_eq!(err.line, 2);
        let err = MatrixDocument::parse("A = [1 2", "u.mx").unwrap_err();
        assert!(err.message.contains("unterminated"));
        let err = MatrixDocument::parse("A = [1/0]", "z.mx").unwrap_err();
        assert_eq!(err.column, 8);
        assert!(MatrixDocument::parse("A [1]", "e.mx").is_err());
        assert!(MatrixDocument::parse("A = []", "e.mx").is_err());
    }

    #[test]
    fn display_round_trips() {
        let text = "X = [ -7 1 1 ; -1 0 0 ; 0 1/2 1+i ]\n";
        let doc = MatrixDocument::parse(text, "x.mx").unwrap();
        assert_eq!(doc.to_string(), text);
        assert_eq!(MatrixDocument::parse(&doc.to_string(), "x.mx").unwrap(), doc);
    }
}
