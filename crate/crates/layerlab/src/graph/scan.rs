//! Tiny cursor over input text shared by the hand-written parsers.

use super::model::GraphError;

pub(crate) struct Scanner<'a> {
    text: &'a str,
    pos: usize,
    format: &'static str,
}

impl<'a> Scanner<'a> {
    pub fn new(text: &'a str, format: &'static str) -> Self {
        Scanner {
            text,
            pos: 0,
            format,
        }
    }

    pub fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    /// Move forward by `n` bytes; callers pass lengths measured on `rest()`.
    pub fn advance(&mut self, n: usize) {
        self.pos = (self.pos + n).min(self.text.len());
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    pub fn error(&self, message: impl Into<String>) -> GraphError {
        GraphError::parse_at(self.format, self.text, self.pos, message)
    }

    pub fn skip_ws(&mut self) {
        let rest = self.rest();
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
    }

    /// Skip spaces and tabs but stop at line breaks.
    pub fn skip_inline_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == ' ' || c == '\t' || c == '\r' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn eat(&mut self, expected: char) -> bool {
        if self.peek() == Some(expected) {
            self.pos += expected.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, expected: &str) -> bool {
        if self.rest().starts_with(expected) {
            self.pos += expected.len();
            true
        } else {
            false
        }
    }

    pub fn expect_str(&mut self, expected: &str) -> Result<(), GraphError> {
        if self.eat_str(expected) {
            Ok(())
        } else {
            let found: String = self.rest().chars().take(expected.len().max(8)).collect();
            Err(self.error(format!("expected {expected:?}, found {found:?}")))
        }
    }

    pub fn parse_u32(&mut self) -> Result<u32, GraphError> {
        let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        let value: u32 = digits
            .parse()
            .map_err(|_| self.error(format!("number {digits:?} is out of range")))?;
        self.pos += digits.len();
        Ok(value)
    }
}
