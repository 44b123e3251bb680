//! Splitting session text into commands and mapping offsets to positions.

/// One command with the position of its first character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub text: String,
    pub line: usize,
    pub col: usize,
}

impl Command {
    pub fn new(text: &str) -> Command {
        Command {
            text: text.to_string(),
            line: 1,
            col: 1,
        }
    }

    /// Line and column of the byte offset `idx` within the command text.
    pub fn pos_at(&self, idx: usize) -> (usize, usize) {
        let (mut line, mut col) = (self.line, self.col);
        for c in self.text[..idx.min(self.text.len())].chars() {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    /// First word and the byte offset where the remainder starts.
    pub fn verb(&self) -> (&str, usize) {
        let t = &self.text;
        let end = t.find(char::is_whitespace).unwrap_or(t.len());
        let rest = t[end..]
            .find(|c: char| !c.is_whitespace())
            .map(|k| end + k)
            .unwrap_or(t.len());
        (&t[..end], rest)
    }
}

/// Splits on `;` and newlines outside brackets; `#` starts a comment.
pub fn split_commands(src: &str) -> Vec<Command> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start: Option<(usize, usize)> = None;
    let (mut line, mut col) = (1usize, 1usize);
    let mut depth = 0i32;
    let mut comment = false;
    let mut flush = |cur: &mut String, start: &mut Option<(usize, usize)>| {
        let text = cur.trim_end().to_string();
        if let Some((l, c)) = start.take() {
            if !text.is_empty() {
                out.push(Command {
                    text,
                    line: l,
                    col: c,
                });
            }
        }
        cur.clear();
    };
    for ch in src.chars() {
        if comment {
            if ch == '\n' {
                comment = false;
            } else {
                col += 1;
                continue;
            }
        }
        match ch {
            '#' => comment = true,
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        let boundary = (ch == ';' || ch == '\n') && depth <= 0;
        if boundary {
            flush(&mut cur, &mut start);
            depth = 0;
        } else if !comment {
            if start.is_none() && !ch.is_whitespace() {
                start = Some((line, col));
            }
            if start.is_some() {
                cur.push(ch);
            }
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    flush(&mut cur, &mut start);
    out
}

/// Splits at top-level whitespace and commas, returning byte offsets.
pub fn split_args(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start: Option<usize> = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        let sep = depth == 0 && (ch.is_whitespace() || ch == ',');
        if sep {
            if let Some(b) = start.take() {
                out.push((b, &s[b..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out
}

/// Byte offset of the first top-level occurrence of `pat`.
pub fn find_top_level(s: &str, pat: char) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == pat && depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Byte offset of the bracket closing the one opened at `open`.
pub fn matching_close(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s[open..].char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth == 0 {
                    return Some(open + i);
                }
            }
            _ => {}
        }
    }
    None
}
