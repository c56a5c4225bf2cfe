use super::{CharClassError, Mod2Poly, Monomial, SWRing};

/// Parses `poly := "0" | term (" + " term)*`, `term := factor ("*" factor)*`,
/// `factor := "w" INDEX ("^" EXP)?`.
///
/// Whitespace between tokens is ignored. The unit term `1` is accepted
/// because the canonical printer emits it for the constant polynomial.
pub fn parse_poly(text: &str, ring: SWRing) -> Result<Mod2Poly, CharClassError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.peek() == Some(b'0') {
        p.pos += 1;
        p.skip_ws();
        return match p.peek() {
            None => Ok(Mod2Poly::zero(ring)),
            Some(_) => Err(p.err("unexpected input after 0")),
        };
    }
    let mut monomials = Vec::new();
    loop {
        monomials.push(p.term(ring)?);
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => {
                p.pos += 1;
                p.skip_ws();
            }
            Some(_) => return Err(p.err("expected '+' or end of input")),
        }
    }
    Mod2Poly::from_monomials(ring, monomials)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> CharClassError {
        CharClassError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn term(&mut self, ring: SWRing) -> Result<Monomial, CharClassError> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        loop {
            pairs.push(self.factor(ring)?);
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                break;
            }
        }
        Ok(Monomial::from_exponents(pairs))
    }

    fn factor(&mut self, ring: SWRing) -> Result<(u32, u32), CharClassError> {
        if self.peek() != Some(b'w') {
            return Err(self.err("expected generator 'w<index>'"));
        }
        self.pos += 1;
        let index = self.number()?;
        ring.check(index)?;
        self.skip_ws();
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            self.number()?
        } else {
            1
        };
        Ok((index, exp))
    }

    fn number(&mut self) -> Result<u32, CharClassError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a positive integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<u32>() {
            Ok(0) | Err(_) => Err(CharClassError::Syntax {
                pos: start,
                msg: format!("'{digits}' is not a positive integer"),
            }),
            Ok(n) => Ok(n),
        }
    }
}
