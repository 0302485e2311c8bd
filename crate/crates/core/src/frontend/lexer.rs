use super::report::SourceSpan;

/// Words that can never be identifiers.
pub const RESERVED: &[&str] = &[
    "Unit", "Void", "tt", "Pi", "in", "set", "Top", "Bot", "fst", "snd", "abort",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    KwUnit,
    KwVoid,
    KwTt,
    KwPi,
    KwIn,
    KwSet,
    KwTop,
    KwBot,
    KwFst,
    KwSnd,
    KwAbort,
    LParen,
    RParen,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    LAngle,
    RAngle,
    Backslash,
    Dot,
    Comma,
    Colon,
    Eq,
    Star,
    /// `>>`
    SeqArrow,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::KwUnit => "`Unit`".into(),
            Tok::KwVoid => "`Void`".into(),
            Tok::KwTt => "`tt`".into(),
            Tok::KwPi => "`Pi`".into(),
            Tok::KwIn => "`in`".into(),
            Tok::KwSet => "`set`".into(),
            Tok::KwTop => "`Top`".into(),
            Tok::KwBot => "`Bot`".into(),
            Tok::KwFst => "`fst`".into(),
            Tok::KwSnd => "`snd`".into(),
            Tok::KwAbort => "`abort`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LAngle => "`<`".into(),
            Tok::RAngle => "`>`".into(),
            Tok::Backslash => "`\\`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Star => "`*`".into(),
            Tok::SeqArrow => "`>>`".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub tok: Tok,
    pub line: u32,
    pub col: u32,
    pub col_end: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
}

impl ParseError {
    pub fn new(span: SourceSpan, message: impl Into<String>) -> ParseError {
        ParseError {
            span,
            message: message.into(),
        }
    }
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    col: u32,
}

impl Scanner {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<char> {
        self.chars.get(self.pos + 1).copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars[self.pos];
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }
}

/// Tokenizes the input. Line endings are normalized, `--` starts a comment
/// running to the end of the line. Positions are 1-based and may be offset
/// for text embedded in a larger file.
pub fn lex(
    text: &str,
    file: &str,
    start_line: u32,
    start_col: u32,
) -> Result<Vec<Spanned>, ParseError> {
    let text = text.replace("\r\n", "\n");
    let mut s = Scanner {
        chars: text.chars().collect(),
        pos: 0,
        line: start_line,
        col: start_col,
    };
    let mut toks = Vec::new();
    while let Some(c) = s.peek() {
        let (l, co) = (s.line, s.col);
        if c.is_whitespace() {
            s.bump();
            continue;
        }
        if c == '-' {
            if s.peek2() == Some('-') {
                while let Some(c) = s.peek() {
                    if c == '\n' {
                        break;
                    }
                    s.bump();
                }
                continue;
            }
            return Err(ParseError::new(
                SourceSpan::point(file, l, co),
                "unexpected character `-`",
            ));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(c) = s.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                    word.push(s.bump());
                } else {
                    break;
                }
            }
            let tok = match word.as_str() {
                "Unit" => Tok::KwUnit,
                "Void" => Tok::KwVoid,
                "tt" => Tok::KwTt,
                "Pi" => Tok::KwPi,
                "in" => Tok::KwIn,
                "set" => Tok::KwSet,
                "Top" => Tok::KwTop,
                "Bot" => Tok::KwBot,
                "fst" => Tok::KwFst,
                "snd" => Tok::KwSnd,
                "abort" => Tok::KwAbort,
                _ => Tok::Ident(word),
            };
            toks.push(Spanned {
                tok,
                line: l,
                col: co,
                col_end: s.col,
            });
            continue;
        }
        let c = s.bump();
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '<' => Tok::LAngle,
            '>' => {
                if s.peek() == Some('>') {
                    s.bump();
                    Tok::SeqArrow
                } else {
                    Tok::RAngle
                }
            }
            '\\' => Tok::Backslash,
            '.' => Tok::Dot,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '=' => Tok::Eq,
            '*' => Tok::Star,
            other => {
                return Err(ParseError::new(
                    SourceSpan::point(file, l, co),
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        toks.push(Spanned {
            tok,
            line: l,
            col: co,
            col_end: s.col,
        });
    }
    Ok(toks)
}

/// Shared cursor over the token stream.
pub struct Cursor<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    pub file: &'a str,
    end_line: u32,
    end_col: u32,
}

impl<'a> Cursor<'a> {
    pub fn new(
        text: &str,
        file: &'a str,
        start_line: u32,
        start_col: u32,
    ) -> Result<Cursor<'a>, ParseError> {
        let toks = lex(text, file, start_line, start_col)?;
        let (end_line, end_col) = toks
            .last()
            .map(|t| (t.line, t.col_end))
            .unwrap_or((start_line, start_col));
        Ok(Cursor {
            toks,
            pos: 0,
            file,
            end_line,
            end_col,
        })
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn here(&self) -> SourceSpan {
        match self.toks.get(self.pos) {
            Some(t) => SourceSpan {
                file: self.file.to_string(),
                line_start: t.line,
                col_start: t.col,
                line_end: t.line,
                col_end: t.col_end,
            },
            None => SourceSpan::point(self.file, self.end_line, self.end_col),
        }
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.here(), message)
    }

    pub fn expect(&mut self, tok: Tok) -> Result<Spanned, ParseError> {
        match self.peek() {
            Some(t) if *t == tok => Ok(self.next().unwrap()),
            Some(t) => {
                let msg = format!("expected {}, found {}", tok.describe(), t.describe());
                Err(self.error(msg))
            }
            None => Err(self.error(format!("expected {}, found end of input", tok.describe()))),
        }
    }

    /// Accepts `>`. A `>>` token (as in `<a, <b, c>>`) is split: one `>` is
    /// consumed here and the other is left for the next caller.
    pub fn expect_rangle(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::RAngle) => {
                self.next();
                Ok(())
            }
            Some(Tok::SeqArrow) => {
                let t = &mut self.toks[self.pos];
                t.tok = Tok::RAngle;
                t.col += 1;
                Ok(())
            }
            Some(t) => {
                let msg = format!("expected {}, found {}", Tok::RAngle.describe(), t.describe());
                Err(self.error(msg))
            }
            None => Err(self.error("expected `>`, found end of input".to_string())),
        }
    }

    pub fn expect_ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(_)) => match self.next().unwrap().tok {
                Tok::Ident(s) => Ok(s),
                _ => unreachable!(),
            },
            Some(t) => {
                let msg = format!("expected an identifier, found {}", t.describe());
                Err(self.error(msg))
            }
            None => Err(self.error("expected an identifier, found end of input")),
        }
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(format!(
                "unexpected {} after a complete input",
                self.peek().unwrap().describe()
            )))
        }
    }
}
