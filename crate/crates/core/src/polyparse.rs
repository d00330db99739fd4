//! Text syntax for Laurent polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ['^' ['-'] digits]
//! atom   := digits | 'x' digits | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-x1^2` is `-(x1^2)`. Division is
//! only allowed by a monomial with an invertible coefficient.

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::{CoeffRing, LaurentPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected {
        expected: &'static str,
        found: String,
    },
    #[error("missing '*' between factors (write e.g. 2*x1 instead of 2x1)")]
    ImplicitMultiplication,
    #[error("exponent must be an integer literal; chained '^' is not allowed")]
    ChainedPower,
    #[error("exponent out of range")]
    ExponentRange,
    #[error("variable x{index} out of range for {arity} variables")]
    VariableRange { index: usize, arity: usize },
    #[error("divisor is not a monomial")]
    NonMonomialDivisor,
    #[error("divisor coefficient {0} is not invertible")]
    NonUnitDivisor(BigInt),
    #[error("negative power of a non-monomial")]
    NegativePower,
    #[error("{0}")]
    Arithmetic(String),
}

/// A parse or evaluation failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(offset: usize, kind: ParseErrorKind) -> Self {
        ParseError { offset, kind }
    }
}

pub type Result<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("integer {n}"),
            Token::Var(i) => format!("x{i}"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_end = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                let end = digits_end(i);
                let n: BigInt = src[i..end].parse().expect("ascii digits");
                if end < bytes.len() && (bytes[end] == b'x' || bytes[end] == b'(') {
                    return Err(ParseError::new(end, ParseErrorKind::ImplicitMultiplication));
                }
                i = end;
                out.push((start, Token::Int(n)));
                continue;
            }
            b'x' => {
                let end = digits_end(i + 1);
                if end == i + 1 {
                    return Err(ParseError::new(
                        i + 1,
                        ParseErrorKind::Unexpected {
                            expected: "variable index",
                            found: describe_at(src, i + 1),
                        },
                    ));
                }
                let index = src[i + 1..end]
                    .parse()
                    .map_err(|_| ParseError::new(i + 1, ParseErrorKind::ExponentRange))?;
                i = end;
                out.push((start, Token::Var(index)));
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().unwrap();
                return Err(ParseError::new(i, ParseErrorKind::UnexpectedChar(ch)));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

fn describe_at(src: &str, i: usize) -> String {
    src[i..]
        .chars()
        .next()
        .map(|c| format!("{c:?}"))
        .unwrap_or_else(|| "end of input".into())
}

/// Parse tree of a polynomial expression; every node records the byte
/// offset where it starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    Int(usize, BigInt),
    Var(usize, usize),
    Neg(usize, Box<PolyExpr>),
    Add(usize, Box<PolyExpr>, Box<PolyExpr>),
    Sub(usize, Box<PolyExpr>, Box<PolyExpr>),
    Mul(usize, Box<PolyExpr>, Box<PolyExpr>),
    /// Offset is that of the divisor.
    Div(usize, Box<PolyExpr>, Box<PolyExpr>),
    Pow(usize, Box<PolyExpr>, i64),
}

impl PolyExpr {
    pub fn offset(&self) -> usize {
        match self {
            PolyExpr::Int(o, _)
            | PolyExpr::Var(o, _)
            | PolyExpr::Neg(o, _)
            | PolyExpr::Add(o, ..)
            | PolyExpr::Sub(o, ..)
            | PolyExpr::Mul(o, ..)
            | PolyExpr::Div(o, ..)
            | PolyExpr::Pow(o, ..) => *o,
        }
    }

    /// Expands the expression in `arity` variables over `ring`.
    pub fn evaluate(&self, arity: usize, ring: &CoeffRing) -> Result<LaurentPoly> {
        let arith = |o: usize| {
            move |e: PolyError| ParseError::new(o, ParseErrorKind::Arithmetic(e.to_string()))
        };
        Ok(match self {
            PolyExpr::Int(_, n) => LaurentPoly::constant(arity, ring.clone(), n.clone()),
            PolyExpr::Var(o, index) => {
                if *index == 0 || *index > arity {
                    return Err(ParseError::new(
                        *o,
                        ParseErrorKind::VariableRange {
                            index: *index,
                            arity,
                        },
                    ));
                }
                LaurentPoly::variable(arity, ring.clone(), index - 1)
            }
            PolyExpr::Neg(_, a) => a.evaluate(arity, ring)?.neg(),
            PolyExpr::Add(o, a, b) => a
                .evaluate(arity, ring)?
                .add(&b.evaluate(arity, ring)?)
                .map_err(arith(*o))?,
            PolyExpr::Sub(o, a, b) => a
                .evaluate(arity, ring)?
                .sub(&b.evaluate(arity, ring)?)
                .map_err(arith(*o))?,
            PolyExpr::Mul(o, a, b) => a
                .evaluate(arity, ring)?
                .mul(&b.evaluate(arity, ring)?)
                .map_err(arith(*o))?,
            PolyExpr::Div(at, a, b) => {
                let at = *at;
                let num = a.evaluate(arity, ring)?;
                let den = b.evaluate(arity, ring)?;
                let (_, c) = den
                    .as_monomial()
                    .ok_or_else(|| ParseError::new(at, ParseErrorKind::NonMonomialDivisor))?;
                if ring.invert(c).is_none() {
                    return Err(ParseError::new(
                        at,
                        ParseErrorKind::NonUnitDivisor(c.clone()),
                    ));
                }
                num.div_monomial(&den).map_err(arith(at))?
            }
            PolyExpr::Pow(o, a, n) => {
                let base = a.evaluate(arity, ring)?;
                base.pow_signed(*n).map_err(|e| match e {
                    PolyError::NegativePower => ParseError::new(*o, ParseErrorKind::NegativePower),
                    PolyError::NonUnitMonomial(c) => {
                        ParseError::new(*o, ParseErrorKind::NonUnitDivisor(c))
                    }
                    other => arith(*o)(other),
                })?
            }
        })
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    src_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(self.src_len)
    }

    fn found(&self) -> String {
        self.peek()
            .map(Token::describe)
            .unwrap_or_else(|| "end of input".into())
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::new(
            self.offset(),
            ParseErrorKind::Unexpected {
                expected,
                found: self.found(),
            },
        )
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.term()?;
        loop {
            let o = self.offset();
            if self.eat(&Token::Plus) {
                lhs = PolyExpr::Add(o, Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Token::Minus) {
                lhs = PolyExpr::Sub(o, Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.unary()?;
        loop {
            let o = self.offset();
            if self.eat(&Token::Star) {
                lhs = PolyExpr::Mul(o, Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(&Token::Slash) {
                let divisor_at = self.offset();
                lhs = PolyExpr::Div(divisor_at, Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(
                self.peek(),
                Some(Token::Var(_) | Token::LParen | Token::Int(_))
            ) {
                return Err(ParseError::new(o, ParseErrorKind::ImplicitMultiplication));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<PolyExpr> {
        let o = self.offset();
        if self.eat(&Token::Minus) {
            return Ok(PolyExpr::Neg(o, Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<PolyExpr> {
        let base = self.atom()?;
        let o = self.offset();
        if !self.eat(&Token::Caret) {
            return Ok(base);
        }
        let negative = self.eat(&Token::Minus);
        let n = match self.peek() {
            Some(Token::Int(n)) => n.clone(),
            Some(Token::LParen | Token::Var(_)) => {
                return Err(ParseError::new(self.offset(), ParseErrorKind::ChainedPower))
            }
            _ => return Err(self.unexpected("integer exponent")),
        };
        let exp_at = self.offset();
        self.pos += 1;
        let n: i64 = i64::try_from(if negative { -n } else { n })
            .map_err(|_| ParseError::new(exp_at, ParseErrorKind::ExponentRange))?;
        if self.peek() == Some(&Token::Caret) {
            return Err(ParseError::new(self.offset(), ParseErrorKind::ChainedPower));
        }
        Ok(PolyExpr::Pow(o, Box::new(base), n))
    }

    fn atom(&mut self) -> Result<PolyExpr> {
        let o = self.offset();
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(PolyExpr::Int(o, n))
            }
            Some(Token::Var(i)) => {
                self.pos += 1;
                Ok(PolyExpr::Var(o, i))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Token::RParen) {
                    return Err(self.unexpected("')'"));
                }
                Ok(inner)
            }
            _ => Err(self.unexpected("integer, variable or '('")),
        }
    }
}

/// Parses `src` into a tree without evaluating it.
pub fn parse_expr(src: &str) -> Result<PolyExpr> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        src_len: src.len(),
    };
    let e = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.unexpected("operator or end of input"));
    }
    Ok(e)
}

/// Parses and expands a polynomial in `arity` variables over `Z`.
pub fn parse_poly(src: &str, arity: usize) -> Result<LaurentPoly> {
    parse_poly_in(src, arity, &CoeffRing::Exact)
}

pub fn parse_poly_in(src: &str, arity: usize, ring: &CoeffRing) -> Result<LaurentPoly> {
    parse_expr(src)?.evaluate(arity, ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ExponentVector;
    use proptest::prelude::*;

    const APERY: &str = "(1+x1)*(1+x2)*(1+x1+x2)/(x1*x2)";

    fn kind(src: &str, d: usize) -> (usize, ParseErrorKind) {
        let e = parse_poly(src, d).unwrap_err();
        (e.offset, e.kind)
    }

    #[test]
    fn apery_polynomial() {
        let a = parse_poly(APERY, 2).unwrap();
        assert_eq!(a.len(), 8);
        assert_eq!(a.constant_term(), BigInt::from(3));
        assert_eq!(
            a.coefficient(&ExponentVector::new(vec![-1, 0])).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn negative_exponent() {
        let a = parse_poly("x1 + x1^-1", 1).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.support(), vec![vec![-1].into(), vec![1].into()]);
    }

    #[test]
    fn non_monomial_divisor() {
        assert_eq!(
            kind("(1+x1)/(1+x2)", 2),
            (7, ParseErrorKind::NonMonomialDivisor)
        );
    }

    #[test]
    fn non_unit_divisor() {
        assert!(matches!(
            kind("x1/(2*x1)", 1).1,
            ParseErrorKind::NonUnitDivisor(_)
        ));
        // 2 is a unit mod 5
        let ring = CoeffRing::modular(5, 2).unwrap();
        let a = parse_poly_in("x1/(2*x1)", 1, &ring).unwrap();
        assert_eq!(a.constant_term(), BigInt::from(13));
        assert!(parse_poly("-x1/(-x1)", 1).unwrap().constant_term() == BigInt::from(1));
    }

    #[test]
    fn precedence() {
        let a = parse_poly("-x1^2", 1).unwrap();
        assert_eq!(a, parse_poly("-(x1*x1)", 1).unwrap());
        let b = parse_poly("1 - 2*x1^3 + x1", 1).unwrap();
        assert_eq!(b.to_string(), "1 + x1 - 2*x1^3");
        let c = parse_poly("(x1+1)^2 * 3", 1).unwrap();
        assert_eq!(c.to_string(), "3 + 6*x1 + 3*x1^2");
        let d = parse_poly("x1^-2*x1^2", 1).unwrap();
        assert_eq!(d.to_string(), "1");
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            kind("x3 + 1", 2),
            (0, ParseErrorKind::VariableRange { index: 3, arity: 2 })
        );
        assert_eq!(kind("2x1", 1), (1, ParseErrorKind::ImplicitMultiplication));
        assert_eq!(
            kind("x1 x1", 1),
            (3, ParseErrorKind::ImplicitMultiplication)
        );
        assert_eq!(kind("x1^2^3", 1), (4, ParseErrorKind::ChainedPower));
        assert_eq!(kind("x1^(2)", 1), (3, ParseErrorKind::ChainedPower));
        assert_eq!(kind("(1+x1", 1).0, 5);
        assert_eq!(kind("1 + ", 1).0, 4);
        assert_eq!(kind("1 $ 2", 1), (2, ParseErrorKind::UnexpectedChar('$')));
        assert_eq!(kind("(1+x1)^-1", 1), (6, ParseErrorKind::NegativePower));
        assert!(matches!(kind("x", 1).1, ParseErrorKind::Unexpected { .. }));
    }

    #[test]
    fn implicit_multiplication_message_suggests_star() {
        let e = parse_poly("2x1", 1).unwrap_err();
        assert!(e.to_string().contains("2*x1"));
    }

    fn small_poly(d: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-4i64..=4, d), -20i64..=20), 0..7).prop_map(
            move |terms| {
                LaurentPoly::from_terms(
                    d,
                    CoeffRing::Exact,
                    terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
                )
                .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(
            (d, a) in (1usize..4).prop_flat_map(|d| small_poly(d).prop_map(move |a| (d, a)))
        ) {
            prop_assert_eq!(parse_poly(&a.to_string(), d).unwrap(), a);
        }

        #[test]
        fn whitespace_is_insignificant(spaces in prop::collection::vec(0usize..3, 40)) {
            let src = APERY;
            let mut spaced = String::new();
            let mut gaps = spaces.iter().cycle();
            for ch in src.chars() {
                if "()+-*/^".contains(ch) {
                    spaced.push_str(&" ".repeat(*gaps.next().unwrap()));
                    spaced.push(ch);
                    spaced.push_str(&" ".repeat(*gaps.next().unwrap()));
                } else {
                    spaced.push(ch);
                }
            }
            prop_assert_eq!(parse_poly(&spaced, 2).unwrap(), parse_poly(src, 2).unwrap());
        }
    }
}
