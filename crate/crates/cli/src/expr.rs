//! Parser for moment expressions such as `w[1,1]*w[1,2]^2` or `w[1,2] w[3,4]`.

use wishart_moments::{Flavor, MomentSpec};

use crate::CliError;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn error(&self, message: impl Into<String>) -> CliError {
        CliError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn number(&mut self) -> Result<u32, CliError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| CliError::Syntax {
                position: start,
                message: "integer is too large".into(),
            })
    }
}

/// Parses `text` into a spec of the given flavor and dimension.
///
/// Factors are `w[a,b]` with an optional `^k` (k ≥ 1), separated by `*` or
/// whitespace. Positions in syntax errors are byte offsets into `text`.
pub fn parse_moment_expression(
    text: &str,
    flavor: Flavor,
    p: usize,
) -> Result<MomentSpec, CliError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        if !factors.is_empty() && cur.peek() == Some('*') {
            cur.pos += 1;
            cur.skip_ws();
        }
        if cur.peek() != Some('w') {
            return Err(cur.error("expected a factor `w[i,j]`"));
        }
        cur.pos += 1;
        cur.expect('[')?;
        let a = cur.number()?;
        cur.expect(',')?;
        let b = cur.number()?;
        cur.expect(']')?;
        let mut power = 1;
        cur.skip_ws();
        if cur.peek() == Some('^') {
            cur.pos += 1;
            let at = cur.pos;
            power = cur.number()?;
            if power == 0 {
                return Err(CliError::Syntax {
                    position: at,
                    message: "exponent must be at least 1".into(),
                });
            }
        }
        factors.extend(std::iter::repeat_n((a, b), power as usize));
    }
    if factors.is_empty() {
        return Err(cur.error("expected at least one factor"));
    }
    Ok(MomentSpec::new(flavor, p, factors)?)
}
