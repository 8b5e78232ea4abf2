//! Line-oriented text format for codes.
//!
//! ```text
//! field GF(4)
//! length 7
//! kind linear
//! rows
//! 1 0 0 0 2 3 1
//! ```
//!
//! `kind` is `linear`, `additive` or `symplectic`; symplectic rows carry
//! `2 * length` entries read as `(a | b)`. Additive files may state
//! `gamma <g>`, which must equal the generator used by Φ. Blank lines and
//! text after `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::{LinearCode, Linearity, Phi, SymplecticCode};
use crate::error::{Error, Result};
use crate::fmatrix::FqMatrix;
use crate::gf::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeFile {
    Linear(LinearCode),
    Additive(LinearCode),
    Symplectic(SymplecticCode),
}

impl CodeFile {
    pub fn kind(&self) -> &'static str {
        match self {
            CodeFile::Linear(_) => "linear",
            CodeFile::Additive(_) => "additive",
            CodeFile::Symplectic(_) => "symplectic",
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            CodeFile::Linear(c) | CodeFile::Additive(c) => c.field(),
            CodeFile::Symplectic(c) => c.field(),
        }
    }

    /// Wraps a code according to its linearity.
    pub fn from_code(c: LinearCode) -> CodeFile {
        match c.linearity() {
            Linearity::Linear => CodeFile::Linear(c),
            Linearity::Additive => CodeFile::Additive(c),
        }
    }
}

fn syntax(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::BadSyntax(format!("line {line}: {msg}"))
}

pub fn parse(text: &str) -> Result<CodeFile> {
    let mut field: Option<Field> = None;
    let mut length: Option<usize> = None;
    let mut kind: Option<String> = None;
    let mut gamma: Option<(usize, u8)> = None;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let mut in_rows = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if in_rows {
            let f = field.as_ref().unwrap();
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| syntax(line_no, format!("'{tok}' is not an integer")))?;
                if v >= f.q() {
                    return Err(Error::BadRange(format!("line {line_no}: entry {v} not in {f}")));
                }
                row.push(v as u8);
            }
            rows.push(row);
            continue;
        }
        let mut parts = line.split_whitespace();
        let key = parts.next().unwrap();
        let value = parts.next();
        if parts.next().is_some() {
            return Err(syntax(line_no, "trailing tokens"));
        }
        match (key, value) {
            ("field", Some(v)) => {
                let q = v
                    .strip_prefix("GF(")
                    .and_then(|s| s.strip_suffix(')'))
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| syntax(line_no, format!("expected GF(q), got '{v}'")))?;
                field = Some(Field::gf(q).map_err(|e| syntax(line_no, e))?);
            }
            ("length", Some(v)) => {
                length = Some(v.parse().map_err(|_| syntax(line_no, format!("bad length '{v}'")))?);
            }
            ("kind", Some(v)) => {
                if !matches!(v, "linear" | "additive" | "symplectic") {
                    return Err(syntax(line_no, format!("unknown kind '{v}'")));
                }
                kind = Some(v.to_string());
            }
            ("gamma", Some(v)) => {
                gamma = Some((line_no, v.parse().map_err(|_| syntax(line_no, format!("bad gamma '{v}'")))?));
            }
            ("rows", None) => {
                if field.is_none() || length.is_none() || kind.is_none() {
                    return Err(syntax(line_no, "'rows' before field, length and kind"));
                }
                in_rows = true;
            }
            _ => return Err(syntax(line_no, format!("unexpected '{line}'"))),
        }
    }

    let field = field.ok_or_else(|| syntax(0, "missing 'field'"))?;
    let n = length.ok_or_else(|| syntax(0, "missing 'length'"))?;
    let kind = kind.ok_or_else(|| syntax(0, "missing 'kind'"))?;
    if !in_rows {
        return Err(syntax(0, "missing 'rows'"));
    }
    let cols = if kind == "symplectic" { 2 * n } else { n };
    for (i, r) in rows.iter().enumerate() {
        if r.len() != cols {
            return Err(Error::DimensionMismatch(format!("row {} has {} entries, expected {cols}", i + 1, r.len())));
        }
    }
    match kind.as_str() {
        "linear" => Ok(CodeFile::Linear(LinearCode::new(&field, n, &rows)?)),
        "symplectic" => Ok(CodeFile::Symplectic(SymplecticCode::new(&field, n, &rows)?)),
        _ => {
            let phi = Phi::new(&field)?;
            if let Some((line_no, g)) = gamma {
                if g != phi.gamma() {
                    return Err(syntax(line_no, format!("gamma {g} differs from the field generator {}", phi.gamma())));
                }
            }
            Ok(CodeFile::Additive(LinearCode::additive(&field, n, &rows)?))
        }
    }
}

pub fn render(file: &CodeFile) -> String {
    let mut out = String::new();
    let (field, n, gen): (&Field, usize, &FqMatrix) = match file {
        CodeFile::Linear(c) | CodeFile::Additive(c) => (c.field(), c.n(), c.generator()),
        CodeFile::Symplectic(c) => (c.field(), c.n(), c.generator()),
    };
    writeln!(out, "field {field}").unwrap();
    writeln!(out, "length {n}").unwrap();
    writeln!(out, "kind {}", file.kind()).unwrap();
    if let CodeFile::Additive(_) = file {
        writeln!(out, "gamma {}", field.generator()).unwrap();
    }
    writeln!(out, "rows").unwrap();
    for r in gen.iter_rows() {
        let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn read(path: &Path) -> Result<CodeFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        Error::BadSyntax(m) => Error::BadSyntax(format!("{}: {m}", path.display())),
        Error::BadRange(m) => Error::BadRange(format!("{}: {m}", path.display())),
        Error::DimensionMismatch(m) => Error::DimensionMismatch(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn write(path: &Path, file: &CodeFile) -> Result<()> {
    std::fs::write(path, render(file)).map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))
}
