//! Graph and product expression parsing.
//!
//! Grammar:
//!
//! ```text
//! expr := atom | atom " x " atom
//! atom := P<n> | C<n> | K<n> | K<p>,<q> | S<n> | W<n>
//!       | T:(<u>-<v>,...) | file:<path>
//! ```
//!
//! The product separator is the three ASCII bytes `" x "`. Everything is
//! matched byte for byte; no Unicode lookalikes are accepted.

use std::fmt;

use geoprod_core::FamilySpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Family(FamilySpec),
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Single(Atom),
    Product(Atom, Atom),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where matching stopped.
    pub position: usize,
    pub expected: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}",
            self.position, self.expected
        )
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn done(&self) -> bool {
        self.pos == self.text.len()
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let digits: usize = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("a number"));
        }
        let slice = &self.rest()[..digits];
        let value: usize = slice.parse().map_err(|_| self.err("a smaller number"))?;
        self.pos += digits;
        Ok(value)
    }
}

const ATOM_HELP: &str = "a graph atom: P<n>, C<n>, K<n>, K<p>,<q>, S<n>, W<n>, T:(<u>-<v>,...), or file:<path>";

fn parse_atom(c: &mut Cursor) -> Result<Atom, ParseError> {
    if c.eat("file:") {
        let rest = c.rest();
        let end = rest.find(" x ").unwrap_or(rest.len());
        if end == 0 {
            return Err(c.err("a file path"));
        }
        let path = rest[..end].to_string();
        c.pos += end;
        return Ok(Atom::File(path));
    }
    if c.eat("T:(") {
        let mut edges = Vec::new();
        loop {
            let u = c.number()?;
            if !c.eat("-") {
                return Err(c.err("'-' between the endpoints of a tree edge"));
            }
            let v = c.number()?;
            edges.push((u, v));
            if c.eat(",") {
                continue;
            }
            if c.eat(")") {
                break;
            }
            return Err(c.err("',' or ')' after a tree edge"));
        }
        return Ok(Atom::Family(FamilySpec::Tree(edges)));
    }
    let letter = match c.rest().chars().next() {
        Some(l @ ('P' | 'C' | 'K' | 'S' | 'W')) => l,
        _ => return Err(c.err(ATOM_HELP)),
    };
    c.pos += 1;
    let n = c.number()?;
    let spec = match letter {
        'P' => FamilySpec::Path(n),
        'C' => FamilySpec::Cycle(n),
        'K' => {
            if c.eat(",") {
                FamilySpec::CompleteBipartite(n, c.number()?)
            } else {
                FamilySpec::Complete(n)
            }
        }
        'S' => FamilySpec::Star(n),
        'W' => FamilySpec::Wheel(n),
        _ => unreachable!(),
    };
    Ok(Atom::Family(spec))
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut c = Cursor { text, pos: 0 };
    let left = parse_atom(&mut c)?;
    if c.done() {
        return Ok(Expr::Single(left));
    }
    if !c.eat(" x ") {
        return Err(c.err("end of input or the product separator \" x \""));
    }
    let right = parse_atom(&mut c)?;
    if !c.done() {
        return Err(c.err("end of input"));
    }
    Ok(Expr::Product(left, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(text: &str) -> FamilySpec {
        match parse_expression(text) {
            Ok(Expr::Single(Atom::Family(spec))) => spec,
            other => panic!("expected a single family for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn atoms_parse() {
        assert_eq!(family("P5"), FamilySpec::Path(5));
        assert_eq!(family("C12"), FamilySpec::Cycle(12));
        assert_eq!(family("K4"), FamilySpec::Complete(4));
        assert_eq!(family("K2,3"), FamilySpec::CompleteBipartite(2, 3));
        assert_eq!(family("S6"), FamilySpec::Star(6));
        assert_eq!(family("W6"), FamilySpec::Wheel(6));
        assert_eq!(
            family("T:(0-1,0-2,0-3,3-4)"),
            FamilySpec::Tree(vec![(0, 1), (0, 2), (0, 3), (3, 4)])
        );
    }

    #[test]
    fn products_parse() {
        let e = parse_expression("K3 x C4").unwrap();
        assert_eq!(
            e,
            Expr::Product(
                Atom::Family(FamilySpec::Complete(3)),
                Atom::Family(FamilySpec::Cycle(4))
            )
        );
        let e = parse_expression("K2,3 x T:(0-1,1-2)").unwrap();
        assert_eq!(
            e,
            Expr::Product(
                Atom::Family(FamilySpec::CompleteBipartite(2, 3)),
                Atom::Family(FamilySpec::Tree(vec![(0, 1), (1, 2)]))
            )
        );
    }

    #[test]
    fn file_atoms_keep_their_path() {
        assert_eq!(
            parse_expression("file:/tmp/g.edges").unwrap(),
            Expr::Single(Atom::File("/tmp/g.edges".to_string()))
        );
        assert_eq!(
            parse_expression("file:g.edges x P3").unwrap(),
            Expr::Product(
                Atom::File("g.edges".to_string()),
                Atom::Family(FamilySpec::Path(3))
            )
        );
    }

    #[test]
    fn non_ascii_separator_is_rejected() {
        let err = parse_expression("K3 \u{22a0} C4").unwrap_err();
        assert_eq!(err.position, 2);
        assert!(err.expected.contains("\" x \""), "{err}");
    }

    #[test]
    fn errors_carry_position_and_expectation() {
        let err = parse_expression("Q5").unwrap_err();
        assert_eq!(err.position, 0);

        let err = parse_expression("P").unwrap_err();
        assert_eq!(err.position, 1);
        assert_eq!(err.expected, "a number");

        let err = parse_expression("T:(0-1,2)").unwrap_err();
        assert_eq!(err.position, 8);

        let err = parse_expression("K3 x ").unwrap_err();
        assert_eq!(err.position, 5);

        let err = parse_expression("P3 x P4 x P5").unwrap_err();
        assert_eq!(err.position, 7);
        assert_eq!(err.expected, "end of input");
    }
}
