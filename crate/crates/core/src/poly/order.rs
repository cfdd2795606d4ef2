use std::cmp::Ordering;
use std::fmt;

use super::{Monomial, PolyError};

/// Orders used on a single block of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    GrLex,
    GrevLex,
}

impl BaseOrder {
    pub fn name(&self) -> &'static str {
        match self {
            BaseOrder::Lex => "lex",
            BaseOrder::GrLex => "grlex",
            BaseOrder::GrevLex => "grevlex",
        }
    }

    pub fn from_name(name: &str) -> Option<BaseOrder> {
        match name {
            "lex" => Some(BaseOrder::Lex),
            "grlex" => Some(BaseOrder::GrLex),
            "grevlex" => Some(BaseOrder::GrevLex),
            _ => None,
        }
    }

    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            BaseOrder::Lex => lex(a, b),
            BaseOrder::GrLex => degree(a).cmp(&degree(b)).then_with(|| lex(a, b)),
            BaseOrder::GrevLex => degree(a).cmp(&degree(b)).then_with(|| revlex(a, b)),
        }
    }
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

/// Reverse lexicographic tie-break: the smaller last differing exponent wins.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// A monomial order on exponent vectors.
///
/// `Block` compares consecutive blocks of variables in turn, each with its own
/// base order; with blocks `[x; t]` every monomial involving `x` beats every
/// pure `t`-monomial, which makes it an elimination order for `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Base(BaseOrder),
    Block(Vec<(usize, BaseOrder)>),
}

impl MonomialOrder {
    pub fn lex() -> MonomialOrder {
        MonomialOrder::Base(BaseOrder::Lex)
    }

    pub fn grlex() -> MonomialOrder {
        MonomialOrder::Base(BaseOrder::GrLex)
    }

    pub fn grevlex() -> MonomialOrder {
        MonomialOrder::Base(BaseOrder::GrevLex)
    }

    /// Total order on raw exponent slices of equal length.
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Base(o) => o.cmp(a, b),
            MonomialOrder::Block(blocks) => {
                let mut start = 0;
                for (len, o) in blocks {
                    let end = start + len;
                    let c = o.cmp(&a[start..end], &b[start..end]);
                    if c != Ordering::Equal {
                        return c;
                    }
                    start = end;
                }
                Ordering::Equal
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    /// Checked comparison; fails when the monomials do not fit this order.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.nvars() != b.nvars() {
            return Err(PolyError::ContextMismatch);
        }
        self.check_nvars(a.nvars())?;
        Ok(self.cmp(a, b))
    }

    pub fn check_nvars(&self, nvars: usize) -> Result<(), PolyError> {
        match self {
            MonomialOrder::Base(_) => Ok(()),
            MonomialOrder::Block(blocks) => {
                let total: usize = blocks.iter().map(|(len, _)| len).sum();
                if total == nvars {
                    Ok(())
                } else {
                    Err(PolyError::OrderMismatch { order_vars: total, ring_vars: nvars })
                }
            }
        }
    }

    /// Same shape with every block switched to `base`.
    pub fn with_base(&self, base: BaseOrder) -> MonomialOrder {
        match self {
            MonomialOrder::Base(_) => MonomialOrder::Base(base),
            MonomialOrder::Block(blocks) => {
                MonomialOrder::Block(blocks.iter().map(|(len, _)| (*len, base)).collect())
            }
        }
    }

    /// The blocks as `(length, order)`, treating a base order as one block.
    pub fn blocks(&self, nvars: usize) -> Vec<(usize, BaseOrder)> {
        match self {
            MonomialOrder::Base(o) => vec![(nvars, *o)],
            MonomialOrder::Block(blocks) => blocks.clone(),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Base(o) => write!(f, "{}", o.name()),
            MonomialOrder::Block(blocks) => {
                write!(f, "block")?;
                for (i, (len, o)) in blocks.iter().enumerate() {
                    let sep = if i == 0 { " " } else { "; " };
                    write!(f, "{sep}{}({len})", o.name())?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        assert_eq!(MonomialOrder::lex().cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn reflexive_equal() {
        for o in [MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()] {
            assert_eq!(o.cmp(&m(&[2, 1]), &m(&[2, 1])), Ordering::Equal);
        }
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::Block(vec![(1, BaseOrder::Lex), (1, BaseOrder::Lex)]);
        // t1^5 against x1
        assert_eq!(o.cmp(&m(&[0, 5]), &m(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn grevlex_versus_grlex() {
        // x1*x3 vs x2^2: grlex says x1*x3 bigger, grevlex says x2^2 bigger
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::grlex().cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::grevlex().cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn compare_rejects_mismatch() {
        assert!(MonomialOrder::lex().compare(&m(&[1]), &m(&[1, 0])).is_err());
        let o = MonomialOrder::Block(vec![(1, BaseOrder::Lex)]);
        assert!(o.compare(&m(&[1, 0]), &m(&[1, 0])).is_err());
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::lex(),
            MonomialOrder::grlex(),
            MonomialOrder::grevlex(),
            MonomialOrder::Block(vec![(2, BaseOrder::Lex), (2, BaseOrder::GrLex)]),
            MonomialOrder::Block(vec![(1, BaseOrder::GrevLex), (3, BaseOrder::GrevLex)]),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_monomial_orders(
            a in prop::collection::vec(0u32..5, 4),
            b in prop::collection::vec(0u32..5, 4),
            c in prop::collection::vec(0u32..5, 4),
        ) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for o in orders() {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&(&a * &c), &(&b * &c)), Ordering::Greater);
                }
                prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
                // transitivity
                if ab != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
                }
            }
        }

        #[test]
        fn block_order_is_elimination(
            t in prop::collection::vec(0u32..9, 2),
            i in 0usize..2,
        ) {
            let o = MonomialOrder::Block(vec![(2, BaseOrder::Lex), (2, BaseOrder::GrLex)]);
            let mut xi = vec![0, 0, 0, 0];
            xi[i] = 1;
            let tm = vec![0, 0, t[0], t[1]];
            prop_assert_eq!(o.cmp(&m(&xi), &m(&tm)), Ordering::Greater);
        }
    }
}
