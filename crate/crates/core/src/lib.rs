//! Minimal straight-line programs for zeta and Möbius transforms on finite
//! posets and lattices.
//!
//! The pipeline is: describe a poset by its Hasse diagram ([`Poset`]),
//! derive lattice structure ([`LatticeInfo`]), compile a program
//! ([`transforms`]) either from a join-irreducible order or from an
//! injective edge labeling ([`labeling`]), then check it against the exact
//! ζ/μ matrices ([`oracle`]).
//!
//! ```
//! use zeta_slp::{generators, oracle, transforms, Kind, LatticeInfo};
//!
//! let lattice = LatticeInfo::new(&generators::figure1()).unwrap();
//! let order = transforms::order_by_height(&lattice);
//! let program = transforms::compile_zeta_bjorklund(&lattice, &order);
//! assert_eq!(program.len(), lattice.poset().edge_count());
//! assert!(oracle::verify_slp(lattice.poset(), &program, Kind::Zeta).unwrap().is_match());
//! ```

pub mod bits;
pub mod error;
pub mod generators;
pub mod labeling;
pub mod lattice;
pub mod oracle;
pub mod par;
pub mod poset;
pub mod slp;
pub mod transforms;

pub use error::{Error, Result};
pub use labeling::{EdgeLabeling, RisingChainReport};
pub use lattice::{JirOrder, LatticeInfo};
pub use oracle::{TransformMatrix, Verdict};
pub use par::Strategy;
pub use poset::{ElemId, Poset};
pub use slp::{Kind, Op, Slp, Statement, Value};
