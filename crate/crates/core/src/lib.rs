//! Exact computations for finite real and complex reflection groups.

pub mod chars;
pub mod classes;
pub mod coxeter;
pub mod error;
pub mod exact;
pub mod group;
pub mod hecke;
pub mod imprim;
pub mod invariants;
pub mod table;

pub use chars::{CharTableGd1n, DPartition, Partition};
pub use coxeter::{CoxeterMatrix, CoxeterSystem, FiniteType};
pub use error::{Error, Result};
pub use exact::{Cyclotomic, Laurent, Matrix, Poly, Rational, RationalFunction, UvLaurent};
pub use group::{FiniteGroup, PointSet};
pub use hecke::{BraidWord, HeckeElement, LinkInvariant};
pub use imprim::{ImprimGroup, ImprimParams, MonomialElement};
pub use invariants::{ClassFunction, DegreeData};
pub use table::ShephardToddRecord;
