//! Shared helpers for the line-oriented text formats.
//!
//! All three formats use the same lexical conventions: one directive per
//! line, whitespace-separated tokens, `#` comment lines, and blank lines
//! ignored. Positions are 1-based.

use crate::error::ParseError;

/// A token with its 1-based column.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

/// One significant (non-blank, non-comment) line.
#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    pub fn token(&self, idx: usize, what: &str) -> Result<Token<'a>, ParseError> {
        self.tokens.get(idx).copied().ok_or_else(|| {
            let column = self
                .tokens
                .last()
                .map(|t| t.column + t.text.len())
                .unwrap_or(1);
            ParseError::new(self.number, column, format!("expected {what}"))
        })
    }

    pub fn expect_len(&self, len: usize) -> Result<(), ParseError> {
        if self.tokens.len() > len {
            let extra = self.tokens[len];
            return Err(ParseError::new(
                self.number,
                extra.column,
                format!("unexpected token `{}`", extra.text),
            ));
        }
        Ok(())
    }

    pub fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError::new(self.number, column, message)
    }
}

/// Splits input into significant lines, dropping comments and blanks.
pub(crate) fn significant_lines(input: &str) -> Vec<Line<'_>> {
    let mut lines = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = Vec::new();
        let mut col = 0;
        for (start, chunk) in split_with_offsets(raw) {
            let _ = col;
            col = start;
            tokens.push(Token {
                text: chunk,
                column: start + 1,
            });
        }
        lines.push(Line {
            number: idx + 1,
            tokens,
        });
    }
    lines
}

fn split_with_offsets(raw: &str) -> impl Iterator<Item = (usize, &str)> {
    raw.split_whitespace().map(move |chunk| {
        // offset_from is safe: chunk borrows from raw
        let start = chunk.as_ptr() as usize - raw.as_ptr() as usize;
        (start, chunk)
    })
}

pub(crate) fn parse_usize(tok: Token<'_>, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.text.parse::<usize>().map_err(|_| {
        ParseError::new(
            line,
            tok.column,
            format!("expected {what}, got `{}`", tok.text),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_comments_and_blanks() {
        let lines = significant_lines("# header\n\n  \na b\n # more\nc\n");
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].number, 4);
        assert_eq!(lines[0].tokens[1].text, "b");
        assert_eq!(lines[1].tokens[0].text, "c");
    }

    #[test]
    fn columns_are_one_based() {
        let lines = significant_lines("  dom   7");
        let toks = &lines[0].tokens;
        assert_eq!(toks[0].column, 3);
        assert_eq!(toks[1].column, 9);
    }
}
