//! Parser for polynomial text in `h`, `u` and `v`, such as
//! `v + h*u^2 - 1/2*h^2*(v - 1)`.

use exactalg::{ri, Poly2, Rat, RingElem, Series};

use crate::error::CrystalError;

/// Parses `text` as an element of `Q[u, v][[h]]` truncated at `h^order`.
pub fn parse_poly_series(text: &str, order: usize) -> Result<Series<Poly2<Rat>>, CrystalError> {
    let mut p = Parser { s: text.as_bytes(), i: 0, order };
    let v = p.expr()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    order: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> CrystalError {
        CrystalError::Parse(format!("{} at byte {}", msg, self.i))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<Series<Poly2<Rat>>, CrystalError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                self.term()?.neg_ref()
            }
            Some(b'+') => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = acc.add_ref(&self.term()?);
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Series<Poly2<Rat>>, CrystalError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = acc.mul_ref(&self.power()?);
                }
                Some(b'/') => {
                    self.i += 1;
                    let d = self.number()?;
                    if d == ri(0) {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&d.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Series<Poly2<Rat>>, CrystalError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let e = self.number()?;
            if !e.is_integer() || e < ri(0) || e > ri(64) {
                return Err(self.err("exponent must be an integer in 0..=64"));
            }
            let e: u32 = e.to_integer().try_into().map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Series<Poly2<Rat>>, CrystalError> {
        let k = self.order;
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(v)
            }
            Some(b'h') => {
                self.i += 1;
                Ok(Series::var(k))
            }
            Some(b'u') => {
                self.i += 1;
                Ok(Series::constant(k, Poly2::u()))
            }
            Some(b'v') => {
                self.i += 1;
                Ok(Series::constant(k, Poly2::v()))
            }
            Some(c) if c.is_ascii_digit() => Ok(Series::constant(k, Poly2::constant(self.number()?))),
            _ => Err(self.err("expected a number, a variable or '('")),
        }
    }

    fn number(&mut self) -> Result<Rat, CrystalError> {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a number"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.i]).expect("ascii digits");
        txt.parse::<Rat>().map_err(|_| self.err("bad number"))
    }
}
