//! Textual diagram language, plus matrix and report serialization.
//!
//! Terms are s-expressions over the generator atoms:
//!
//! ```text
//! term    := atom | "(seq" term term ")" | "(par" term term ")"
//! atom    := "(z" INT INT phases ")" | "(w)" | "(tau)" | "(taui)"
//!          | "(id)" | "(swap)" | "(cap)" | "(cup)"
//!          | "(h)" | "(hdag)" | "(tri)" | "(trii)"
//!          | "(bind" INT INT ")" | "(split" INT INT ")" | "(empty)"
//! phases  := "[" complex ("," complex)* "]" | "[]"    ; [] is (1,...,1)
//! complex := FLOAT | FLOAT ("+"|"-") FLOAT "i"        ; no spaces inside
//! ```
//!
//! The wire dimension is not part of the text; `parse` takes it as an
//! argument and applies it to every single-dimension atom. Binder and
//! splitter atoms carry their own dimensions.

use num_complex::Complex64;

use crate::diagram::{Diagram, Generator, Node};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::phase::PhaseVector;
use crate::rules::VerificationReport;

// ---------------------------------------------------------------------------
// lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Word(String),
    Number(String),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i;
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                out.push(Token {
                    tok: Tok::LParen,
                    pos,
                });
                i += 1;
            }
            b')' => {
                out.push(Token {
                    tok: Tok::RParen,
                    pos,
                });
                i += 1;
            }
            b'[' => {
                out.push(Token {
                    tok: Tok::LBracket,
                    pos,
                });
                i += 1;
            }
            b']' => {
                out.push(Token {
                    tok: Tok::RBracket,
                    pos,
                });
                i += 1;
            }
            b',' => {
                out.push(Token {
                    tok: Tok::Comma,
                    pos,
                });
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Word(text[pos..i].to_string()),
                    pos,
                });
            }
            c if c.is_ascii_digit() || c == b'-' || c == b'+' || c == b'.' => {
                while i < bytes.len()
                    && matches!(
                        bytes[i],
                        b'0'..=b'9' | b'.' | b'e' | b'E' | b'+' | b'-' | b'i'
                    )
                {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Number(text[pos..i].to_string()),
                    pos,
                });
            }
            c => return Err(err(pos, format!("unexpected character '{}'", c as char))),
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// parser

struct Parser {
    tokens: Vec<Token>,
    index: usize,
    dim: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index)
    }

    fn here(&self) -> usize {
        self.peek().map(|t| t.pos).unwrap_or(self.end)
    }

    fn next(&mut self) -> Result<Token> {
        let tok = self
            .tokens
            .get(self.index)
            .cloned()
            .ok_or_else(|| err(self.end, "unexpected end of input"))?;
        self.index += 1;
        Ok(tok)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<usize> {
        let tok = self.next()?;
        if tok.tok == want {
            Ok(tok.pos)
        } else {
            Err(err(tok.pos, format!("expected {what}")))
        }
    }

    fn integer(&mut self, what: &str) -> Result<usize> {
        let tok = self.next()?;
        match &tok.tok {
            Tok::Number(text) => text
                .parse::<usize>()
                .map_err(|_| err(tok.pos, format!("expected {what}, got '{text}'"))),
            _ => Err(err(tok.pos, format!("expected {what}"))),
        }
    }

    fn term(&mut self) -> Result<Diagram> {
        let open = self.expect(Tok::LParen, "'('")?;
        let head = self.next()?;
        let word = match &head.tok {
            Tok::Word(w) => w.clone(),
            _ => return Err(err(head.pos, "expected a form name after '('")),
        };
        let diagram = match word.as_str() {
            "seq" => {
                let upper = self.term()?;
                let lower_pos = self.here();
                let lower = self.term()?;
                Diagram::seq(upper, lower).map_err(|e| err(lower_pos, e.to_string()))?
            }
            "par" => {
                let left = self.term()?;
                let right = self.term()?;
                Diagram::par(left, right)
            }
            "z" => {
                let inputs = self.integer("spider input count")?;
                let outputs = self.integer("spider output count")?;
                let phase = self.phases()?;
                Diagram::z_spider(inputs, outputs, phase).map_err(|e| err(open, e.to_string()))?
            }
            "bind" => {
                let s = self.integer("binder dimension")?;
                let t = self.integer("binder dimension")?;
                Diagram::binder(s, t).map_err(|e| err(open, e.to_string()))?
            }
            "split" => {
                let s = self.integer("splitter dimension")?;
                let t = self.integer("splitter dimension")?;
                Diagram::splitter(s, t).map_err(|e| err(open, e.to_string()))?
            }
            "empty" => Diagram::empty(),
            simple => {
                let build = match simple {
                    "w" => Diagram::w(self.dim),
                    "tau" => Diagram::braid(self.dim),
                    "taui" => Diagram::braid_inv(self.dim),
                    "id" => Diagram::identity(self.dim),
                    "swap" => Diagram::swap(self.dim),
                    "cap" => Diagram::cap(self.dim),
                    "cup" => Diagram::cup(self.dim),
                    "h" => Diagram::hadamard(self.dim),
                    "hdag" => Diagram::hadamard_dagger(self.dim),
                    "tri" => Diagram::triangle(self.dim),
                    "trii" => Diagram::triangle_inv(self.dim),
                    _ => return Err(err(head.pos, format!("unknown generator '{word}'"))),
                };
                build.map_err(|e| err(head.pos, e.to_string()))?
            }
        };
        self.expect(Tok::RParen, "')'")?;
        Ok(diagram)
    }

    fn phases(&mut self) -> Result<PhaseVector> {
        let open = self.expect(Tok::LBracket, "'['")?;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::RBracket)) {
            self.next()?;
            return Ok(PhaseVector::ones(self.dim));
        }
        let mut entries = Vec::new();
        loop {
            let tok = self.next()?;
            match &tok.tok {
                Tok::Number(text) => {
                    let value = parse_complex(text)
                        .ok_or_else(|| err(tok.pos, format!("bad complex literal '{text}'")))?;
                    entries.push(value);
                }
                _ => return Err(err(tok.pos, "expected a complex literal")),
            }
            let sep = self.next()?;
            match sep.tok {
                Tok::Comma => continue,
                Tok::RBracket => break,
                _ => return Err(err(sep.pos, "expected ',' or ']'")),
            }
        }
        if entries.len() != self.dim - 1 {
            return Err(err(
                open,
                format!(
                    "phase list has {} entries, dimension {} needs {}",
                    entries.len(),
                    self.dim,
                    self.dim - 1
                ),
            ));
        }
        Ok(PhaseVector::new(entries))
    }
}

/// Parse a term at wire dimension `d`.
pub fn parse(text: &str, d: usize) -> Result<Diagram> {
    if d < 1 {
        return Err(err(0, "dimension must be at least 1"));
    }
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        dim: d,
        end: text.len(),
    };
    let diagram = parser.term()?;
    if let Some(extra) = parser.peek() {
        return Err(err(extra.pos, "trailing input after term"));
    }
    Ok(diagram)
}

/// `a+bi` / `a-bi` / bare float, no interior spaces.
fn parse_complex(text: &str) -> Option<Complex64> {
    if let Some(body) = text.strip_suffix('i') {
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
                split = Some(i);
                break;
            }
        }
        let at = split?;
        let re: f64 = body[..at].parse().ok()?;
        let im: f64 = body[at..].parse().ok()?;
        Some(Complex64::new(re, im))
    } else {
        text.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0))
    }
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

// ---------------------------------------------------------------------------
// printer

/// Print a diagram in the term language. The diagram must be expressible at
/// a single wire dimension (binder/splitter atoms carry their own); the
/// result parses back to a structurally identical diagram.
pub fn print(diagram: &Diagram) -> Result<String> {
    check_uniform(diagram)?;
    let mut out = String::new();
    write_term(diagram, &mut out);
    Ok(out)
}

fn check_uniform(diagram: &Diagram) -> Result<()> {
    let mut seen: Option<usize> = None;
    let mut clash: Option<(usize, usize)> = None;
    diagram.for_each_generator(&mut |g| {
        let dim = match g {
            Generator::ZSpider { phase, .. } => Some(phase.dim()),
            Generator::W { dim }
            | Generator::Braid { dim }
            | Generator::BraidInv { dim }
            | Generator::Identity { dim }
            | Generator::Cap { dim }
            | Generator::Cup { dim }
            | Generator::Hadamard { dim }
            | Generator::HadamardDagger { dim }
            | Generator::Triangle { dim }
            | Generator::TriangleInv { dim } => Some(*dim),
            Generator::Swap { left, right } => {
                if left != right && clash.is_none() {
                    clash = Some((*left, *right));
                }
                Some(*left)
            }
            Generator::Binder { .. } | Generator::Splitter { .. } => None,
        };
        if let Some(d) = dim {
            match seen {
                None => seen = Some(d),
                Some(prev) if prev != d && clash.is_none() => clash = Some((prev, d)),
                _ => {}
            }
        }
    });
    match clash {
        Some((a, b)) => Err(Error::MixedDimensions(a, b)),
        None => Ok(()),
    }
}

fn write_term(diagram: &Diagram, out: &mut String) {
    match diagram.node() {
        Node::Empty => out.push_str("(empty)"),
        Node::Seq(a, b) => {
            out.push_str("(seq ");
            write_term(a, out);
            out.push(' ');
            write_term(b, out);
            out.push(')');
        }
        Node::Par(a, b) => {
            out.push_str("(par ");
            write_term(a, out);
            out.push(' ');
            write_term(b, out);
            out.push(')');
        }
        Node::Leaf(g) => write_leaf(g, out),
    }
}

fn write_leaf(g: &Generator, out: &mut String) {
    match g {
        Generator::ZSpider {
            inputs,
            outputs,
            phase,
        } => {
            out.push_str(&format!("(z {inputs} {outputs} ["));
            for (i, z) in phase.entries().iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&format_complex(*z));
            }
            out.push_str("])");
        }
        Generator::W { .. } => out.push_str("(w)"),
        Generator::Braid { .. } => out.push_str("(tau)"),
        Generator::BraidInv { .. } => out.push_str("(taui)"),
        Generator::Identity { .. } => out.push_str("(id)"),
        Generator::Swap { .. } => out.push_str("(swap)"),
        Generator::Cap { .. } => out.push_str("(cap)"),
        Generator::Cup { .. } => out.push_str("(cup)"),
        Generator::Hadamard { .. } => out.push_str("(h)"),
        Generator::HadamardDagger { .. } => out.push_str("(hdag)"),
        Generator::Triangle { .. } => out.push_str("(tri)"),
        Generator::TriangleInv { .. } => out.push_str("(trii)"),
        Generator::Binder { s, t } => out.push_str(&format!("(bind {s} {t})")),
        Generator::Splitter { s, t } => out.push_str(&format!("(split {s} {t})")),
    }
}

// ---------------------------------------------------------------------------
// serialization

/// Shape header line, then one row per line of `re,im;re,im;...`.
pub fn matrix_to_text(m: &ComplexMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if c > 0 {
                out.push(';');
            }
            let z = m.get(r, c);
            out.push_str(&format!("{},{}", z.re, z.im));
        }
        out.push('\n');
    }
    out
}

/// One machine-readable line per verification cell.
pub fn report_line(report: &VerificationReport) -> String {
    report.to_string()
}

/// `verified N cells: P passed, F failed`
pub fn report_summary(reports: &[VerificationReport]) -> String {
    let failed = reports.iter().filter(|r| !r.pass).count();
    format!(
        "verified {} cells: {} passed, {} failed",
        reports.len(),
        reports.len() - failed,
        failed
    )
}
