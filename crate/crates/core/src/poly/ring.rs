use std::collections::HashSet;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use super::{BaseOrder, Coefficient, Field, Monomial, MonomialOrder, PolyError, Polynomial};

/// A named, contiguous run of variables inside a [`VariableContext`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarBlock {
    pub name: String,
    pub range: Range<usize>,
}

/// Ordered variable names, partitioned into consecutive blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    blocks: Vec<VarBlock>,
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableContext {
    /// A context with a single block holding every variable.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        Self::with_blocks(names, vec![("all".to_string(), n)])
    }

    /// `blocks` lists `(name, length)` pairs covering the names in order.
    pub fn with_blocks(names: Vec<String>, blocks: Vec<(String, usize)>) -> Result<Self, PolyError> {
        let mut seen = HashSet::new();
        for name in &names {
            if !is_valid_name(name) {
                return Err(PolyError::InvalidVariableName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        let mut start = 0;
        let mut out = Vec::with_capacity(blocks.len());
        for (name, len) in blocks {
            out.push(VarBlock { name, range: start..start + len });
            start += len;
        }
        if start != names.len() {
            return Err(PolyError::BlocksDoNotCover);
        }
        Ok(VariableContext { names, blocks: out })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn blocks(&self) -> &[VarBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A polynomial ring: coefficient field plus variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Field,
    vars: VariableContext,
}

impl PolyRing {
    pub fn new(field: Field, vars: VariableContext) -> Arc<PolyRing> {
        Arc::new(PolyRing { field, vars })
    }

    /// Shorthand for a single-block ring over the given names.
    pub fn with_names<S: Into<String>>(
        field: Field,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<PolyRing>, PolyError> {
        Ok(PolyRing::new(field, VariableContext::new(names)?))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &VariableContext {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn names(&self) -> &[String] {
        self.vars.names()
    }

    /// Rings are compatible when field and variable names agree.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || (self.field == other.field && self.vars.names == other.vars.names)
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: Coefficient) -> Polynomial {
        Polynomial::from_terms(self, [(Monomial::one(self.nvars()), c)]).expect("constant fits ring")
    }

    pub fn int(self: &Arc<Self>, n: i64) -> Polynomial {
        self.constant(self.field.from_int(n))
    }

    pub fn var(self: &Arc<Self>, index: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::var(self.nvars(), index))
    }

    pub fn var_named(self: &Arc<Self>, name: &str) -> Result<Polynomial, PolyError> {
        let i = self.vars.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.var(i))
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial, PolyError> {
        super::parse::parse_polynomial(self, text).map_err(PolyError::Parse)
    }

    /// Text form of an order over this ring's variables, e.g.
    /// `lex x1 > x2` or `block lex x1 > x2 ; grlex t1 > t2`.
    pub fn order_descriptor(&self, order: &MonomialOrder) -> String {
        let segment = |base: BaseOrder, range: Range<usize>| {
            let vars: Vec<&str> = self.names()[range].iter().map(String::as_str).collect();
            if vars.is_empty() {
                base.name().to_string()
            } else {
                format!("{} {}", base.name(), vars.join(" > "))
            }
        };
        match order {
            MonomialOrder::Base(o) => segment(*o, 0..self.nvars()),
            MonomialOrder::Block(blocks) => {
                let mut start = 0;
                let parts: Vec<String> = blocks
                    .iter()
                    .map(|(len, o)| {
                        let s = segment(*o, start..start + len);
                        start += len;
                        s
                    })
                    .collect();
                format!("block {}", parts.join(" ; "))
            }
        }
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (name, &e) in self.names().iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_and_bad_names() {
        assert!(VariableContext::new(["x", "x"]).is_err());
        assert!(VariableContext::new(["1x"]).is_err());
        assert!(VariableContext::new(["x_1", "Y2"]).is_ok());
    }

    #[test]
    fn blocks_must_cover() {
        let names = vec!["x".to_string(), "t".to_string()];
        assert!(VariableContext::with_blocks(names.clone(), vec![("x".into(), 1)]).is_err());
        let ctx = VariableContext::with_blocks(names, vec![("x".into(), 1), ("t".into(), 1)]).unwrap();
        assert_eq!(ctx.blocks()[1].range, 1..2);
    }

    #[test]
    fn descriptor_lists_variables() {
        let ring = PolyRing::with_names(Field::Rational, ["x1", "x2", "t1"]).unwrap();
        let o = MonomialOrder::Block(vec![(2, BaseOrder::Lex), (1, BaseOrder::GrLex)]);
        assert_eq!(ring.order_descriptor(&o), "block lex x1 > x2 ; grlex t1");
        assert_eq!(ring.order_descriptor(&MonomialOrder::grevlex()), "grevlex x1 > x2 > t1");
    }
}
