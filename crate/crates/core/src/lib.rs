//! Subalgebra membership for polynomial rings over exact fields.
//!
//! The crate is organised bottom-up: [`poly`] holds the arithmetic substrate,
//! [`groebner`] Buchberger's algorithm and normal forms, [`algmem`] the
//! tag-variable membership test and degree bounds, [`monalg`] the monomial
//! case, [`sagbi`] subduction and completion, and [`instances`] reductions
//! and generated hard instances. [`format`] reads and writes instance files.

pub mod algmem;
pub mod format;
pub mod groebner;
pub mod instances;
pub mod monalg;
pub mod poly;
pub mod sagbi;

#[cfg(test)]
pub(crate) mod testing;
