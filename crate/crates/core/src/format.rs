//! Line-oriented instance files.
//!
//! ```text
//! # comment
//! field: Q
//! order: lex x1 > x2
//! provenance: binary-counter n=2
//! generators:
//!   R1: x1*x2 - x2^2
//!   x1
//! target: x1^2*x2 - x1*x2^2
//! certificate: t1*t2
//! rules:
//!   x1 ~ x2
//! query: x1^2 ~ x2^2
//! ```
//!
//! `field` and `order` come first; the order line also fixes the variable
//! roster. List items are indented. Unknown keys, repeated keys and
//! unparsable polynomials are errors.

use std::fmt;
use std::sync::Arc;

use crate::algmem::SubalgebraPresentation;
use crate::poly::{
    is_valid_name, parse_monomial, BaseOrder, Field, Monomial, MonomialOrder, PolyRing, Polynomial, VariableContext,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

/// Parses `Q` or `F<p>`.
pub fn parse_field(text: &str) -> Option<Field> {
    match text.trim() {
        "Q" => Some(Field::Rational),
        s => s.strip_prefix('F').and_then(|p| p.parse().ok()).and_then(|p| Field::prime(p).ok()),
    }
}

/// Parses an order descriptor such as `grevlex x1 > x2` or
/// `block lex x1 > x2 ; grlex t1 > t2` into the roster and the order.
pub fn parse_order_descriptor(text: &str) -> Result<(VariableContext, MonomialOrder), String> {
    let text = text.trim();
    let (is_block, body) = match text.strip_prefix("block ") {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let mut names = Vec::new();
    let mut blocks = Vec::new();
    let mut orders = Vec::new();
    for (k, seg) in body.split(';').enumerate() {
        let seg = seg.trim();
        let (name, vars) = seg.split_once(char::is_whitespace).unwrap_or((seg, ""));
        let base = BaseOrder::from_name(name).ok_or_else(|| format!("unknown order '{name}'"))?;
        let vars: Vec<String> = if vars.trim().is_empty() {
            Vec::new()
        } else {
            vars.split('>').map(|v| v.trim().to_string()).collect()
        };
        if let Some(bad) = vars.iter().find(|v| !is_valid_name(v)) {
            return Err(format!("invalid variable name '{bad}'"));
        }
        blocks.push((format!("b{}", k + 1), vars.len()));
        orders.push((vars.len(), base));
        names.extend(vars);
    }
    if !is_block && orders.len() != 1 {
        return Err("several segments need the 'block' keyword".into());
    }
    let vars = VariableContext::with_blocks(names, blocks).map_err(|e| e.to_string())?;
    let order = if is_block { MonomialOrder::Block(orders) } else { MonomialOrder::Base(orders[0].1) };
    Ok((vars, order))
}

/// A parsed instance file.
#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub ring: Arc<PolyRing>,
    pub order: MonomialOrder,
    pub provenance: Option<String>,
    pub generators: Vec<Polynomial>,
    /// Optional label per generator.
    pub labels: Vec<Option<String>>,
    pub target: Option<Polynomial>,
    /// A polynomial in the tag ring of the generators.
    pub certificate: Option<Polynomial>,
    pub rules: Vec<(Monomial, Monomial)>,
    pub query: Option<(Monomial, Monomial)>,
}

impl InstanceFile {
    /// An instance with no sections.
    pub fn new(ring: &Arc<PolyRing>, order: MonomialOrder) -> InstanceFile {
        InstanceFile {
            ring: ring.clone(),
            order,
            provenance: None,
            generators: Vec::new(),
            labels: Vec::new(),
            target: None,
            certificate: None,
            rules: Vec::new(),
            query: None,
        }
    }

    pub fn presentation(&self) -> SubalgebraPresentation {
        SubalgebraPresentation::new(&self.ring, self.generators.clone()).expect("generators live in the file's ring")
    }

    pub fn parse(text: &str) -> Result<InstanceFile, FormatError> {
        InstanceFile::parse_with_field(text, None)
    }

    /// Like [`InstanceFile::parse`], with `field` replacing the declared field.
    pub fn parse_with_field(text: &str, field_override: Option<Field>) -> Result<InstanceFile, FormatError> {
        #[derive(PartialEq)]
        enum Section {
            None,
            Generators,
            Rules,
        }
        let mut field = None;
        let mut file: Option<InstanceFile> = None;
        let mut section = Section::None;
        let mut seen: Vec<String> = Vec::new();
        let mut pending_cert: Option<(usize, String)> = None;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let content = raw.split('#').next().unwrap();
            if content.trim().is_empty() {
                continue;
            }
            if content.starts_with([' ', '\t']) {
                let item = content.trim();
                let Some(f) = file.as_mut() else { return err(line_no, "list item before the header") };
                match section {
                    Section::Generators => {
                        let (label, poly) = match item.split_once(':') {
                            Some((l, p)) if is_valid_name(l.trim()) => (Some(l.trim().to_string()), p),
                            _ => (None, item),
                        };
                        let p = f.ring.parse(poly).map_err(|e| FormatError { line: line_no, message: e.to_string() })?;
                        f.generators.push(p);
                        f.labels.push(label);
                    }
                    Section::Rules => f.rules.push(parse_rule(&f.ring, item, line_no)?),
                    Section::None => return err(line_no, "indented line outside a list section"),
                }
                continue;
            }
            section = Section::None;
            let Some((key, value)) = content.split_once(':') else {
                return err(line_no, format!("expected 'key: value', found '{}'", content.trim()));
            };
            let (key, value) = (key.trim(), value.trim());
            if seen.iter().any(|s| s == key) {
                return err(line_no, format!("repeated key '{key}'"));
            }
            seen.push(key.to_string());
            match (key, seen.len()) {
                ("field", 1) => {
                    let declared = parse_field(value).ok_or_else(|| FormatError {
                        line: line_no,
                        message: format!("unknown field '{value}' (expected Q or F<p> with p prime)"),
                    })?;
                    field = Some(field_override.unwrap_or(declared));
                }
                ("field", _) => return err(line_no, "'field' must be the first key"),
                ("order", 2) => {
                    let (vars, order) =
                        parse_order_descriptor(value).map_err(|m| FormatError { line: line_no, message: m })?;
                    let ring = PolyRing::new(field.unwrap(), vars);
                    file = Some(InstanceFile::new(&ring, order));
                }
                ("order", _) => return err(line_no, "'order' must follow 'field'"),
                _ if file.is_none() => return err(line_no, "header must start with 'field' and 'order'"),
                ("provenance", _) => file.as_mut().unwrap().provenance = Some(value.to_string()),
                ("generators" | "rules", _) if !value.is_empty() => {
                    return err(line_no, format!("'{key}' starts an indented list"));
                }
                ("generators", _) => section = Section::Generators,
                ("rules", _) => section = Section::Rules,
                ("target", _) => {
                    let f = file.as_mut().unwrap();
                    f.target = Some(f.ring.parse(value).map_err(|e| FormatError { line: line_no, message: e.to_string() })?);
                }
                ("certificate", _) => pending_cert = Some((line_no, value.to_string())),
                ("query", _) => {
                    let f = file.as_mut().unwrap();
                    f.query = Some(parse_rule(&f.ring, value, line_no)?);
                }
                _ => return err(line_no, format!("unknown key '{key}'")),
            }
        }
        let Some(mut file) = file else { return err(0, "missing 'field' and 'order' header") };
        if let Some((line, text)) = pending_cert {
            let tags = file.presentation().tag_ring();
            file.certificate = Some(tags.parse(&text).map_err(|e| FormatError { line, message: e.to_string() })?);
        }
        Ok(file)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out += &format!("field: {}\n", self.ring.field());
        out += &format!("order: {}\n", self.ring.order_descriptor(&self.order));
        if let Some(p) = &self.provenance {
            out += &format!("provenance: {p}\n");
        }
        if !self.generators.is_empty() {
            out += "generators:\n";
            for (g, l) in self.generators.iter().zip(&self.labels) {
                match l {
                    Some(l) => out += &format!("  {l}: {g}\n"),
                    None => out += &format!("  {g}\n"),
                }
            }
        }
        if let Some(t) = &self.target {
            out += &format!("target: {t}\n");
        }
        if let Some(c) = &self.certificate {
            out += &format!("certificate: {c}\n");
        }
        if !self.rules.is_empty() {
            out += "rules:\n";
            for (a, b) in &self.rules {
                out += &format!("  {} ~ {}\n", self.ring.format_monomial(a), self.ring.format_monomial(b));
            }
        }
        if let Some((a, b)) = &self.query {
            out += &format!("query: {} ~ {}\n", self.ring.format_monomial(a), self.ring.format_monomial(b));
        }
        out
    }
}

impl fmt::Display for InstanceFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_rule(ring: &Arc<PolyRing>, text: &str, line: usize) -> Result<(Monomial, Monomial), FormatError> {
    let Some((a, b)) = text.split_once('~') else { return err(line, "expected 'm ~ m'") };
    let mono = |s: &str| parse_monomial(ring, s.trim()).map_err(|e| FormatError { line, message: e.to_string() });
    Ok((mono(a)?, mono(b)?))
}
