//! Text form of algebra elements.
//!
//! ```text
//! expr   := term ( '+' term )*
//! term   := factor ( ( ws | '*' ) factor )*
//! factor := '0' | '1' | tvar ( '^' int )? | ident | '(' ... ')'
//! ```
//!
//! A parenthesised atom such as `(k1 k2)` is a single generator symbol; its
//! inner whitespace is collapsed to single spaces before lookup.

use std::collections::HashMap;

use super::{Element, FreeMfDGA, Term};
use crate::error::AlgebraError;
use crate::laurent::Monomial;

fn err(offset: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Expression {
        offset,
        message: message.into(),
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '.'
}

/// Collapse runs of whitespace inside a symbol.
pub(crate) fn canonical_symbol(s: &str) -> String {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
        format!("({})", inner.split_whitespace().collect::<Vec<_>>().join(" "))
    } else {
        s.to_string()
    }
}

/// Parse an element over the given generator symbols and T-variable names.
pub fn parse_element(text: &str, symbols: &[String], t_names: &[String]) -> Result<Element, AlgebraError> {
    let gens: HashMap<String, usize> = symbols
        .iter()
        .enumerate()
        .map(|(i, s)| (canonical_symbol(s), i))
        .collect();
    let tvars: HashMap<&str, usize> = t_names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Element::zero();
    let mut i = 0;
    let mut coef = vec![0i32; t_names.len()];
    let mut word = Vec::new();
    let mut zero = false;
    let mut factors = 0usize;
    let at = |i: usize| chars.get(i).map(|x| x.0).unwrap_or(text.len());

    loop {
        while i < chars.len() && chars[i].1.is_whitespace() {
            i += 1;
        }
        if i >= chars.len() || chars[i].1 == '+' {
            if factors == 0 {
                return Err(err(at(i), "expected a term"));
            }
            if !zero {
                out.toggle(Term::new(Monomial(coef.clone()), word.clone()));
            }
            if i >= chars.len() {
                break;
            }
            i += 1;
            coef.iter_mut().for_each(|e| *e = 0);
            word.clear();
            zero = false;
            factors = 0;
            continue;
        }
        let start = i;
        let c = chars[i].1;
        if c == '*' {
            if factors == 0 {
                return Err(err(at(i), "`*` without a left factor"));
            }
            i += 1;
            continue;
        }
        factors += 1;
        if c == '(' {
            let mut depth = 0;
            while i < chars.len() {
                match chars[i].1 {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    _ => {}
                }
                i += 1;
            }
            if i >= chars.len() {
                return Err(err(at(start), "unbalanced parenthesis"));
            }
            i += 1;
            let sym: String = chars[start..i].iter().map(|x| x.1).collect();
            let key = canonical_symbol(&sym);
            match gens.get(&key) {
                Some(&g) => word.push(g),
                None => return Err(AlgebraError::UnknownGenerator(key)),
            }
            continue;
        }
        if !is_ident_char(c) {
            return Err(err(at(i), format!("unexpected character `{c}`")));
        }
        while i < chars.len() && is_ident_char(chars[i].1) {
            i += 1;
        }
        let tok: String = chars[start..i].iter().map(|x| x.1).collect();
        if let Some(&g) = gens.get(&tok) {
            word.push(g);
        } else if let Some(&v) = tvars.get(tok.as_str()) {
            let mut exp = 1i32;
            if i < chars.len() && chars[i].1 == '^' {
                i += 1;
                let s = i;
                if i < chars.len() && chars[i].1 == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let num: String = chars[s..i].iter().map(|x| x.1).collect();
                exp = num
                    .parse()
                    .map_err(|_| err(at(s), format!("bad exponent `{num}`")))?;
            }
            coef[v] += exp;
        } else if tok == "1" {
        } else if tok == "0" {
            zero = true;
        } else if tok.chars().all(|c| c.is_ascii_digit()) {
            return Err(err(at(start), format!("unexpected number `{tok}`")));
        } else {
            return Err(AlgebraError::UnknownGenerator(tok));
        }
    }
    Ok(out)
}

/// Render an element in the grammar above, terms in canonical order.
pub fn render_element(dga: &FreeMfDGA, x: &Element) -> String {
    render_with(x, &dga.t_names, |g| dga.generators[g].symbol.clone())
}

pub(crate) fn render_with(x: &Element, t_names: &[String], sym: impl Fn(usize) -> String) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.terms()
        .map(|t| {
            let mut parts = Vec::new();
            let c = t.coef.render(t_names);
            if !c.is_empty() {
                parts.push(c);
            }
            parts.extend(t.word.iter().map(|&g| sym(g)));
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join(" ")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
