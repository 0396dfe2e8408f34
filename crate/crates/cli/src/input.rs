use presmat::groebner::IdealBasis;
use presmat::matrices::PolyMatrix;
use presmat::ring::{MonomialOrder, Polynomial, Ring, RingContext};
use serde::Deserialize;
use std::path::Path;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub vars: Vec<String>,
    #[serde(default)]
    pub order: Option<String>,
}

/// `{"ring": {...}, "matrix": [[...]]}` or `{"ring": {...}, "ideal": [...]}`.
/// The ring may be omitted, in which case the variables are taken in order
/// of first appearance.
#[derive(Debug, Deserialize)]
pub struct InputDoc {
    #[serde(default)]
    pub ring: Option<RingSpec>,
    #[serde(default)]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub ideal: Option<Vec<String>>,
}

#[derive(Debug)]
pub enum Payload {
    Matrix(PolyMatrix),
    Ideal(IdealBasis),
}

#[derive(Debug)]
pub struct Input {
    pub ring: Ring,
    pub payload: Payload,
    pub bytes: Vec<u8>,
}

#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn parse_order(name: &str) -> Result<MonomialOrder, InputError> {
    match name.to_ascii_lowercase().as_str() {
        "grevlex" => Ok(MonomialOrder::GrevLex),
        "lex" => Ok(MonomialOrder::Lex),
        other => Err(InputError(format!("unknown monomial order `{other}` (expected grevlex or lex)"))),
    }
}

/// 1-based line of the first occurrence of `needle` in `text`.
fn line_of(text: &str, needle: &str) -> Option<usize> {
    text.find(needle).map(|pos| text[..pos].matches('\n').count() + 1)
}

fn infer_vars<'a>(texts: impl Iterator<Item = &'a String>) -> Vec<String> {
    let mut vars: Vec<String> = Vec::new();
    for t in texts {
        let mut chars = t.char_indices().peekable();
        while let Some((i, c)) = chars.next() {
            if c.is_ascii_alphabetic() {
                let mut end = i + c.len_utf8();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let name = &t[i..end];
                if !vars.iter().any(|v| v == name) {
                    vars.push(name.to_string());
                }
            }
        }
    }
    vars
}

pub fn parse_document(label: &str, text: &str, order_override: Option<MonomialOrder>) -> Result<Input, InputError> {
    let doc: InputDoc = serde_json::from_str(text)
        .map_err(|e| InputError(format!("{label}:{}:{}: {e}", e.line(), e.column())))?;
    let texts: Vec<&String> = match (&doc.matrix, &doc.ideal) {
        (Some(m), None) => m.iter().flatten().collect(),
        (None, Some(i)) => i.iter().collect(),
        (Some(_), Some(_)) => return Err(InputError(format!("{label}: give either `matrix` or `ideal`, not both"))),
        (None, None) => return Err(InputError(format!("{label}: expected a `matrix` or an `ideal` field"))),
    };
    let (vars, order) = match &doc.ring {
        Some(r) => (r.vars.clone(), r.order.as_deref().map(parse_order).transpose()?),
        None => (infer_vars(texts.iter().copied()), None),
    };
    let order = order_override.or(order).unwrap_or(MonomialOrder::GrevLex);
    let ring = RingContext::new(&vars, order)
        .map_err(|e| InputError(format!("{label}:{}: {e}", line_of(text, "\"vars\"").unwrap_or(1))))?;
    let parse = |s: &String, place: String| -> Result<Polynomial, InputError> {
        ring.parse(s).map_err(|e| {
            let line = line_of(text, &format!("\"{s}\"")).unwrap_or(1);
            InputError(format!("{label}:{line}: {place}: {e}"))
        })
    };
    let payload = if let Some(rows) = &doc.matrix {
        if rows.is_empty() {
            return Err(InputError(format!("{label}: the matrix has no rows")));
        }
        let mut parsed = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rows[0].len() {
                return Err(InputError(format!(
                    "{label}:{}: row {i} has {} entries, row 0 has {}",
                    line_of(text, "\"matrix\"").unwrap_or(1),
                    row.len(),
                    rows[0].len()
                )));
            }
            let mut out = Vec::with_capacity(row.len());
            for (j, s) in row.iter().enumerate() {
                out.push(parse(s, format!("matrix[{i}][{j}]"))?);
            }
            parsed.push(out);
        }
        Payload::Matrix(PolyMatrix::from_rows(&ring, parsed).map_err(|e| InputError(format!("{label}: {e}")))?)
    } else {
        let gens = doc.ideal.as_ref().unwrap();
        let mut out = Vec::with_capacity(gens.len());
        for (i, s) in gens.iter().enumerate() {
            out.push(parse(s, format!("ideal[{i}]"))?);
        }
        Payload::Ideal(IdealBasis::new(&ring, out).map_err(|e| InputError(format!("{label}: {e}")))?)
    };
    Ok(Input { ring, payload, bytes: text.as_bytes().to_vec() })
}

pub fn read_input(path: &Path, order_override: Option<MonomialOrder>) -> Result<Input, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_document(&path.display().to_string(), &text, order_override)
}
