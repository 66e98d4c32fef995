//! Text form of polynomials: a small recursive-descent parser and the
//! canonical printer.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyQ;
use crate::error::{Error, Result};

/// Accepted input grammar, printed by the CLI on usage errors.
pub const GRAMMAR: &str = "\
expr     := term (('+' | '-') term)*
term     := unary (('*' | '/')? unary)*      juxtaposition multiplies: 4x^3
unary    := ('+' | '-') unary | factor
factor   := base ('^' nat)?
base     := int | 'x' | '(' expr ')'
division is allowed only by nonzero constants: 5x/3, (x+1)/2";

const MAX_EXPONENT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            'x' => Tok::X,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse {
                    position: i,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<PolyQ> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyQ> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(Error::Parse {
                            position: at,
                            message: "division by a non-constant expression".into(),
                        });
                    }
                    if d.is_zero() {
                        return Err(Error::Parse {
                            position: at,
                            message: "division by zero".into(),
                        });
                    }
                    acc = acc.scale(&d.leading().recip());
                }
                Tok::Int(_) | Tok::X | Tok::LParen => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<PolyQ> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.factor(),
        }
    }

    fn factor(&mut self) -> Result<PolyQ> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let Tok::Int(e) = self.peek().clone() else {
            return self.err("exponent must be a nonnegative integer");
        };
        let e: u64 = match u64::try_from(&e) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return self.err(format!("exponent larger than {MAX_EXPONENT}")),
        };
        self.bump();
        if *self.peek() == Tok::Caret {
            return self.err("chained exponents need parentheses");
        }
        Ok(base.pow(e as u32))
    }

    fn base(&mut self) -> Result<PolyQ> {
        match self.bump() {
            Tok::Int(n) => Ok(PolyQ::constant(BigRational::from_integer(n))),
            Tok::X => Ok(PolyQ::x()),
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => self.err("unexpected end of input"),
            t => {
                self.pos -= 1;
                self.err(format!("unexpected {}", describe(&t)))
            }
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Int(_) => "number",
        Tok::X => "'x'",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::End => "end of input",
    }
}

/// Parses and fully expands a polynomial expression in `x`.
pub fn parse_poly(text: &str) -> Result<PolyQ> {
    let mut parser = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let poly = parser.expr()?;
    if *parser.peek() != Tok::End {
        let what = describe(parser.peek());
        return parser.err(format!("unexpected {what}"));
    }
    Ok(poly)
}

impl FromStr for PolyQ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

/// Canonical form: descending powers, explicit signs, reduced fractions.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "{mag}*")?;
                }
            }
            if k == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{k}")?;
            }
        }
        Ok(())
    }
}
