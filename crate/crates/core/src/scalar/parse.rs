//! Expression grammar for scalars: integers, rationals `a/b`, declared
//! identifiers, `+ - * ^` with nonnegative integer exponents, unary minus,
//! and parentheses. Precedence: `^` binds tightest, then unary minus, then
//! `*`, then binary `+`/`-`.
//!
//! Identifiers resolve against a [`SymbolTable`]: coordinates, parameters,
//! function symbols, and jets written `f_xy` (symbol, underscore, then a
//! concatenation of coordinate names).

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;

use super::{Indet, Rational, Scalar};

/// Declared names an expression may reference.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolTable {
    pub coords: Vec<Arc<str>>,
    pub params: Vec<Arc<str>>,
    pub symbols: Vec<Arc<str>>,
}

impl SymbolTable {
    pub fn coords_only(names: &[&str]) -> Self {
        SymbolTable {
            coords: names.iter().map(|s| Arc::from(*s)).collect(),
            params: Vec::new(),
            symbols: Vec::new(),
        }
    }

    fn coord_index(&self, name: &str) -> Option<u32> {
        self.coords.iter().position(|c| &**c == name).map(|i| i as u32)
    }

    /// Resolve an identifier, including the jet form `f_<coords>`.
    fn resolve(&self, name: &str) -> Option<Indet> {
        if let Some(i) = self.coord_index(name) {
            return Some(Indet::Coord(i));
        }
        if let Some(p) = self.params.iter().find(|p| &***p == name) {
            return Some(Indet::Param(p.clone()));
        }
        if let Some(s) = self.symbols.iter().find(|s| &***s == name) {
            return Some(Indet::Jet {
                symbol: s.clone(),
                index: Box::new([]),
            });
        }
        let (head, tail) = name.split_once('_')?;
        let symbol = self.symbols.iter().find(|s| &***s == head)?.clone();
        let index = self.match_coord_sequence(tail)?;
        Some(Indet::jet(symbol, index))
    }

    /// Split `tail` into a sequence of coordinate names, longest match first
    /// with backtracking.
    fn match_coord_sequence(&self, tail: &str) -> Option<Vec<u32>> {
        if tail.is_empty() {
            return Some(Vec::new());
        }
        let mut candidates: Vec<(usize, u32)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| tail.starts_with(&***c))
            .map(|(i, c)| (c.len(), i as u32))
            .collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0));
        for (len, i) in candidates {
            if let Some(mut rest) = self.match_coord_sequence(&tail[len..]) {
                rest.insert(0, i);
                return Some(rest);
            }
        }
        None
    }
}

/// Parse failure with byte offset into the source text plus a description of
/// what was expected and what was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "at offset {}: expected {}, found {}",
            self.offset, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = BigInt::from_str(&text[start..i]).expect("digits form an integer");
                out.push((start, Tok::Int(n)));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(ParseError {
                    offset: i,
                    expected: "a token".into(),
                    found: format!("'{c}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    table: &'a SymbolTable,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Int(n)) => format!("integer {n}"),
            Some(Tok::Ident(s)) => format!("identifier '{s}'"),
            Some(t) => format!("{t:?}"),
        }
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.into(),
            found: self.found(),
        }
    }

    fn eat(&mut self, t: &Tok, expected: &str) -> Result<(), ParseError> {
        if self.peek() == Some(t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(expected))
        }
    }

    fn sum(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Scalar, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.err("a small nonnegative integer exponent"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Scalar, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                // A rational literal a/b.
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            if d == 0.into() {
                                return Err(ParseError {
                                    offset: self.offset(),
                                    expected: "a nonzero denominator".into(),
                                    found: "0".into(),
                                });
                            }
                            Ok(Scalar::constant(Rational::new(n, d)))
                        }
                        _ => Err(self.err("an integer denominator")),
                    }
                } else {
                    Ok(Scalar::constant(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                let off = self.offset();
                self.pos += 1;
                match self.table.resolve(&name) {
                    Some(v) => Ok(Scalar::indet(v)),
                    None => Err(ParseError {
                        offset: off,
                        expected: "a declared coordinate, parameter, or symbol".into(),
                        found: format!("identifier '{name}'"),
                    }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.sum()?;
                self.eat(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.err("an integer, identifier, or '('")),
        }
    }
}

/// Parse an expression under the grammar against the given declarations.
pub fn parse_scalar(text: &str, table: &SymbolTable) -> Result<Scalar, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        table,
        end: text.len(),
    };
    let s = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.err("end of expression"));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> SymbolTable {
        SymbolTable {
            coords: vec!["x".into(), "y".into()],
            params: vec!["lambda".into()],
            symbols: vec!["f".into(), "g".into()],
        }
    }

    #[test]
    fn parses_basic_expressions() {
        let t = table();
        let s = parse_scalar("3*x^2 - 1/2*y + lambda", &t).unwrap();
        let expect = &(&(&Scalar::int(3) * &Scalar::coord(0).pow(2))
            - &(&Scalar::constant(super::super::ratio(1, 2)) * &Scalar::coord(1)))
            + &Scalar::param("lambda");
        assert_eq!(s, expect);
    }

    #[test]
    fn precedence_of_unary_minus_and_power() {
        let t = table();
        // ^ binds tighter than unary minus: -x^2 = -(x^2)
        let s = parse_scalar("-x^2", &t).unwrap();
        assert_eq!(s, -&Scalar::coord(0).pow(2));
        let s = parse_scalar("-(x)^2*y", &t).unwrap();
        assert_eq!(s, &(-&Scalar::coord(0).pow(2)) * &Scalar::coord(1));
    }

    #[test]
    fn jets_round_trip() {
        let t = table();
        let s = parse_scalar("f_xy + g_xx", &t).unwrap();
        let expect = &Scalar::jet("f", &[0, 1]) + &Scalar::jet("g", &[0, 0]);
        assert_eq!(s, expect);
        let printed = s.render(&t.coords);
        assert_eq!(parse_scalar(&printed, &t).unwrap(), s);
    }

    #[test]
    fn undeclared_name_is_an_error() {
        let t = table();
        let e = parse_scalar("x + z", &t).unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.expected.contains("declared"));
    }

    #[test]
    fn rational_literals_only_between_integers() {
        let t = table();
        assert!(parse_scalar("2/3", &t).is_ok());
        assert!(parse_scalar("x/2", &t).is_err());
        assert!(parse_scalar("1/0", &t).is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let t = table();
        for src in [
            "0",
            "-1/3",
            "x^3*y - 2*x + 7",
            "lambda^2*f_x - g",
            "f_xxy*x*y^2 + 1/2",
        ] {
            let s = parse_scalar(src, &t).unwrap();
            let printed = s.render(&t.coords);
            assert_eq!(parse_scalar(&printed, &t).unwrap(), s, "source {src}");
        }
    }
}
