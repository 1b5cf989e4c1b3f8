//! Signed Gauss codes.
//!
//! Circles are separated by `;`. A circle is a sequence of tokens
//! `O<label><sign>` / `U<label><sign>`; a `*` in front of a token puts the
//! basepoint in the gap just before it, otherwise the basepoint sits before
//! the first token. Whitespace is ignored.

use std::collections::BTreeMap;

use thiserror::Error;

use super::{BasedGaussDiagram, ChordId, End, Endpoint, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected {found} at byte {at}, expected {expected}")]
    Syntax { at: usize, found: String, expected: &'static str },
    #[error("label {label} has two {end} tokens")]
    Duplicate { label: ChordId, end: char },
    #[error("label {label} has no {end} partner")]
    MissingPartner { label: ChordId, end: char },
    #[error("label {label} has different signs on its O and U tokens")]
    SignMismatch { label: ChordId },
    #[error("circle {circle} has more than one basepoint marker")]
    MultipleBasepoints { circle: usize },
    #[error("circle {circle} has a basepoint marker with no endpoint after it")]
    DanglingBasepoint { circle: usize },
    #[error("label {label} is signed, but arrow codes carry no signs")]
    UnexpectedSign { label: ChordId },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SignMode {
    Required,
    Forbidden,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct CircleTokens {
    pub tokens: Vec<(Endpoint, Option<Sign>)>,
    /// Number of tokens written before the basepoint marker.
    pub base: usize,
}

fn end_char(end: End) -> char {
    match end {
        End::Tail => 'O',
        End::Head => 'U',
    }
}

pub(crate) fn tokenize(text: &str, mode: SignMode) -> Result<Vec<CircleTokens>, ParseError> {
    let bytes = text.as_bytes();
    let mut circles = vec![CircleTokens::default()];
    let mut marker: Option<usize> = None;
    let mut i = 0;
    let syntax = |at: usize, expected: &'static str| {
        let found = text[at..].chars().next().map_or("end of input".to_string(), |c| format!("{c:?}"));
        ParseError::Syntax { at, found, expected }
    };
    let close = |circles: &mut Vec<CircleTokens>, marker: &mut Option<usize>| -> Result<(), ParseError> {
        let cur = circles.last_mut().unwrap();
        if let Some(m) = marker.take() {
            if m >= cur.tokens.len() {
                return Err(ParseError::DanglingBasepoint { circle: circles.len() - 1 });
            }
            cur.base = m;
        }
        Ok(())
    };
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b';' => {
                close(&mut circles, &mut marker)?;
                circles.push(CircleTokens::default());
                i += 1;
            }
            b'*' => {
                if marker.is_some() {
                    return Err(ParseError::MultipleBasepoints { circle: circles.len() - 1 });
                }
                marker = Some(circles.last().unwrap().tokens.len());
                i += 1;
            }
            b'O' | b'o' | b'U' | b'u' => {
                let end = if c.eq_ignore_ascii_case(&b'O') { End::Tail } else { End::Head };
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                    i += 1;
                }
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(syntax(i, "a chord label"));
                }
                let label: ChordId = text[start..i].parse().map_err(|_| syntax(start, "a label that fits in 32 bits"))?;
                while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                    i += 1;
                }
                let sign = match bytes.get(i) {
                    Some(b'+') => Some(Sign::Pos),
                    Some(b'-') => Some(Sign::Neg),
                    _ => None,
                };
                match (mode, sign) {
                    (SignMode::Required, None) => return Err(syntax(i, "'+' or '-'")),
                    (SignMode::Forbidden, Some(_)) => return Err(ParseError::UnexpectedSign { label }),
                    _ => {}
                }
                if sign.is_some() {
                    i += 1;
                }
                circles.last_mut().unwrap().tokens.push((Endpoint { chord: label, end }, sign));
            }
            _ => return Err(syntax(i, "'O', 'U', '*' or ';'")),
        }
    }
    close(&mut circles, &mut marker)?;
    Ok(circles)
}

type Assembled = (Vec<Vec<Endpoint>>, BTreeMap<ChordId, Option<Sign>>);

/// Checks that every label has one O and one U token (with equal signs when
/// signed) and returns the based words together with the sign table.
pub(crate) fn assemble(
    circles: &[CircleTokens],
) -> Result<Assembled, ParseError> {
    let mut seen: BTreeMap<ChordId, [Option<Option<Sign>>; 2]> = BTreeMap::new();
    for circle in circles {
        for &(ep, sign) in &circle.tokens {
            let slot = &mut seen.entry(ep.chord).or_default()[ep.end as usize];
            if slot.is_some() {
                return Err(ParseError::Duplicate { label: ep.chord, end: end_char(ep.end) });
            }
            *slot = Some(sign);
        }
    }
    let mut signs = BTreeMap::new();
    for (&label, ends) in &seen {
        match ends {
            [Some(a), Some(b)] => {
                if a != b {
                    return Err(ParseError::SignMismatch { label });
                }
                signs.insert(label, *a);
            }
            [None, _] => return Err(ParseError::MissingPartner { label, end: 'O' }),
            [_, None] => return Err(ParseError::MissingPartner { label, end: 'U' }),
        }
    }
    let words = circles
        .iter()
        .map(|c| {
            let mut w: Vec<Endpoint> = c.tokens.iter().map(|t| t.0).collect();
            w.rotate_left(c.base);
            w
        })
        .collect();
    Ok((words, signs))
}

/// Parses a signed Gauss code.
pub fn parse_gauss_code(text: &str) -> Result<BasedGaussDiagram, ParseError> {
    let circles = tokenize(text, SignMode::Required)?;
    let (words, signs) = assemble(&circles)?;
    let signs = signs.into_iter().map(|(k, s)| (k, s.expect("signs are required"))).collect();
    let offsets = circles.iter().map(|c| c.base).collect();
    let g = BasedGaussDiagram::new(words, signs).expect("assembled words are consistent");
    Ok(g.with_display_offsets(offsets))
}

pub(crate) fn write_circle(out: &mut String, word: &[Endpoint], offset: usize, sign_of: impl Fn(ChordId) -> Option<Sign>) {
    let len = word.len();
    for i in 0..len {
        if offset != 0 && i == offset {
            out.push('*');
        }
        let ep = word[(i + len - offset) % len];
        out.push(end_char(ep.end));
        out.push_str(&ep.chord.to_string());
        match sign_of(ep.chord) {
            Some(Sign::Pos) => out.push('+'),
            Some(Sign::Neg) => out.push('-'),
            None => {}
        }
    }
}

impl BasedGaussDiagram {
    /// Serializes to a signed Gauss code; `parse_gauss_code` inverts this.
    pub fn to_code(&self) -> String {
        let mut out = String::new();
        for (ci, word) in self.words().iter().enumerate() {
            if ci > 0 {
                out.push(';');
            }
            let offset = self.display_offsets()[ci] % word.len().max(1);
            write_circle(&mut out, word, offset, |id| self.sign(id).ok());
        }
        out
    }
}
