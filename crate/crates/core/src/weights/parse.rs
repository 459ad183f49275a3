//! Lexer and recursive-descent parser for weight formulas.

use num_bigint::BigInt;

use super::{Clause, Expr, Guard, WeightError, WeightFormula};
use crate::poly::VarSet;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Nat(BigInt),
    Ident(String),
    K,
    Else,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Colon,
    Semi,
    Eq,
    Le,
    Ge,
    Lt,
    Gt,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, WeightError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let mut push = |tok, len: usize, i: &mut usize, col: &mut usize| {
            out.push(Token { tok, line: l0, col: c0 });
            *i += len;
            *col += len;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                col += i - start;
                out.push(Token {
                    tok: Tok::Nat(digits.parse().expect("digit run")),
                    line: l0,
                    col: c0,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                col += i - start;
                let tok = match word.as_str() {
                    "k" => Tok::K,
                    "else" => Tok::Else,
                    _ => Tok::Ident(word),
                };
                out.push(Token { tok, line: l0, col: c0 });
            }
            '<' if chars.get(i + 1) == Some(&'=') => push(Tok::Le, 2, &mut i, &mut col),
            '>' if chars.get(i + 1) == Some(&'=') => push(Tok::Ge, 2, &mut i, &mut col),
            '<' => push(Tok::Lt, 1, &mut i, &mut col),
            '>' => push(Tok::Gt, 1, &mut i, &mut col),
            '=' => push(Tok::Eq, 1, &mut i, &mut col),
            '+' => push(Tok::Plus, 1, &mut i, &mut col),
            '-' => push(Tok::Minus, 1, &mut i, &mut col),
            '*' => push(Tok::Star, 1, &mut i, &mut col),
            '^' => push(Tok::Caret, 1, &mut i, &mut col),
            '(' => push(Tok::LParen, 1, &mut i, &mut col),
            ')' => push(Tok::RParen, 1, &mut i, &mut col),
            ':' => push(Tok::Colon, 1, &mut i, &mut col),
            ';' => push(Tok::Semi, 1, &mut i, &mut col),
            other => {
                return Err(WeightError::Syntax {
                    line,
                    col,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    out.push(Token {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    vars: &'a VarSet,
}

pub(super) fn parse(src: &str, vars: &VarSet) -> Result<WeightFormula, WeightError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        vars,
    };
    let mut clauses = Vec::new();
    let mut seen_catch_all = false;
    loop {
        let at = p.here().clone();
        let clause = p.clause()?;
        if seen_catch_all {
            return Err(WeightError::ClauseAfterCatchAll {
                line: at.line,
                col: at.col,
            });
        }
        seen_catch_all = clause.guard == Guard::Always;
        clauses.push(clause);
        match p.here().tok {
            Tok::Semi => p.pos += 1,
            Tok::End => break,
            _ => return Err(p.unexpected("`;` or end of input")),
        }
    }
    if !seen_catch_all {
        return Err(WeightError::MissingCatchAll);
    }
    Ok(WeightFormula { clauses })
}

impl Parser<'_> {
    fn here(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_tok(&self, ahead: usize) -> &Tok {
        let i = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn unexpected(&self, wanted: &str) -> WeightError {
        let t = self.here();
        let found = match &t.tok {
            Tok::End => "end of input".to_string(),
            other => format!("{other:?}"),
        };
        WeightError::Syntax {
            line: t.line,
            col: t.col,
            msg: format!("expected {wanted}, found {found}"),
        }
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), WeightError> {
        if self.here().tok == tok {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn nat(&mut self) -> Result<BigInt, WeightError> {
        if let Tok::Nat(n) = &self.here().tok {
            let n = n.clone();
            self.pos += 1;
            Ok(n)
        } else {
            Err(self.unexpected("a nonnegative integer"))
        }
    }

    fn small_nat(&mut self) -> Result<u64, WeightError> {
        let t = self.here().clone();
        let n = self.nat()?;
        u64::try_from(n).map_err(|_| WeightError::Syntax {
            line: t.line,
            col: t.col,
            msg: "integer too large here".to_string(),
        })
    }

    fn clause(&mut self) -> Result<Clause, WeightError> {
        let guard = match (self.peek_tok(0), self.peek_tok(1)) {
            (Tok::Else, _) => {
                self.pos += 1;
                self.expect(Tok::Colon, "`:` after `else`")?;
                Guard::Always
            }
            (Tok::K, Tok::Eq | Tok::Le | Tok::Ge | Tok::Lt | Tok::Gt) => {
                self.pos += 1;
                let op = self.here().tok.clone();
                self.pos += 1;
                let c = self.small_nat()?;
                self.expect(Tok::Colon, "`:` after guard")?;
                match op {
                    Tok::Eq => Guard::Eq(c),
                    Tok::Le => Guard::Le(c),
                    Tok::Ge => Guard::Ge(c),
                    Tok::Lt => Guard::Lt(c),
                    _ => Guard::Gt(c),
                }
            }
            _ => Guard::Always,
        };
        let expr = self.expr()?;
        Ok(Clause { guard, expr })
    }

    fn expr(&mut self) -> Result<Expr, WeightError> {
        let mut acc = self.term()?;
        loop {
            match self.here().tok {
                Tok::Plus => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, WeightError> {
        let mut acc = self.factor()?;
        while self.here().tok == Tok::Star {
            self.pos += 1;
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, WeightError> {
        let base = self.atom()?;
        if self.here().tok == Tok::Caret {
            self.pos += 1;
            let t = self.here().clone();
            let e = self.small_nat()?;
            let e = u32::try_from(e).map_err(|_| WeightError::Syntax {
                line: t.line,
                col: t.col,
                msg: "exponent too large".to_string(),
            })?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, WeightError> {
        let t = self.here().clone();
        match t.tok {
            Tok::Nat(n) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Tok::K => {
                self.pos += 1;
                Ok(Expr::Index)
            }
            Tok::Ident(name) => {
                if !self.vars.contains(&name) {
                    return Err(WeightError::UnknownIdentifier {
                        line: t.line,
                        col: t.col,
                        name,
                    });
                }
                self.pos += 1;
                Ok(Expr::Var(name))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, `k`, a variable or `(`")),
        }
    }
}
