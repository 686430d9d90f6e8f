//! Text front-end for algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' INT)? | '-' factor | '(' expr ')' ('^' INT)?
//! atom   := INT | 'w' ('[' INT ']')? '(' INT ',' INT ')'
//! ```
//!
//! Whitespace is ignored. `w(i,j)` is a base class (for `r = 1` it may also
//! name a fibre class, `j > m`); `w[l](i,j)` is the class in fibre layer `l`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;

use crate::{make_generator, Error, Generator, Layer, Params, Polynomial, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression {
    Int(BigInt),
    Atom(Generator),
    Neg(Box<Expression>),
    Add(Box<Expression>, Box<Expression>),
    Sub(Box<Expression>, Box<Expression>),
    Mul(Box<Expression>, Box<Expression>),
    Pow(Box<Expression>, u32),
}

pub fn parse(text: &str, params: &Params) -> Result<Expression> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, params };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(e)
}

pub fn evaluate(e: &Expression, params: &Params) -> Result<Polynomial> {
    let params = *params;
    Ok(match e {
        Expression::Int(c) => Polynomial::constant(params, c.clone()),
        Expression::Atom(g) => Polynomial::from_generator(params, *g)?,
        Expression::Neg(x) => -evaluate(x, &params)?,
        Expression::Add(a, b) => evaluate(a, &params)?.try_add(&evaluate(b, &params)?)?,
        Expression::Sub(a, b) => evaluate(a, &params)?.try_add(&-evaluate(b, &params)?)?,
        Expression::Mul(a, b) => evaluate(a, &params)?.multiply(&evaluate(b, &params)?)?,
        Expression::Pow(x, k) => evaluate(x, &params)?.pow(*k)?,
    })
}

/// Parses and evaluates in one step.
pub fn evaluate_str(text: &str, params: &Params) -> Result<Polynomial> {
    evaluate(&parse(text, params)?, params)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    params: &'a Params,
}

impl Parser<'_> {
    fn syntax(&self, message: String) -> Error {
        Error::Syntax { position: self.pos, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(x) => format!("'{}'", x as char),
                None => "end of input".to_string(),
            };
            Err(self.syntax(format!("expected '{}', found {found}", c as char)))
        }
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an integer".to_string()));
        }
        Ok(core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small_int(&mut self) -> Result<u32> {
        let start = self.pos;
        let text = self.digits()?;
        text.parse::<u32>()
            .map_err(|_| Error::Syntax { position: start, message: format!("integer {text} is too large") })
    }

    fn expr(&mut self) -> Result<Expression> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expression::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expression::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expression> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = Expression::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expression> {
        if self.eat(b'-') {
            return Ok(Expression::Neg(Box::new(self.factor()?)));
        }
        let base = if self.eat(b'(') {
            let inner = self.expr()?;
            self.expect(b')')?;
            inner
        } else {
            self.atom()?
        };
        if self.eat(b'^') {
            let k = self.small_int()?;
            return Ok(Expression::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expression> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let text = self.digits()?;
                Ok(Expression::Int(text.parse().expect("ascii digits")))
            }
            Some(b'w') => {
                let start = self.pos;
                self.pos += 1;
                let layer = if self.eat(b'[') {
                    let l = self.small_int()?;
                    self.expect(b']')?;
                    Some(l)
                } else {
                    None
                };
                self.expect(b'(')?;
                let i = self.small_int()?;
                self.expect(b',')?;
                let j = self.small_int()?;
                self.expect(b')')?;
                let layer = match layer {
                    Some(l) => Layer::Fiber(l),
                    None if self.params.r() == 1 && j > self.params.m() => Layer::Fiber(1),
                    None => Layer::Base,
                };
                make_generator(layer, i, j, self.params)
                    .map(Expression::Atom)
                    .map_err(|e| Error::InvalidAtom { position: start, source: Box::new(e) })
            }
            Some(c) => Err(self.syntax(format!("unexpected '{}'", c as char))),
            None => Err(self.syntax("unexpected end of input".to_string())),
        }
    }
}
