//! Exact counts of ordered factorizations of the full cycle `(1 2 ⋯ n)` into
//! permutations of prescribed cycle types.
//!
//! Four independent routes compute the same integer:
//!
//! * a sum of hook characters ([`characters::count_fullcycle_characters`]),
//! * ρ-coefficients against odd elementary symmetric functions
//!   ([`engines::count_theorem1`]),
//! * a genus-stratified sum of positive terms ([`engines::count_ps`]),
//! * brute-force enumeration in `S_n` ([`oracle::count_bruteforce`]).
//!
//! ```
//! use fullcycle::{count, Engine, FactorizationProblem, Partition};
//!
//! let t = Partition::new(vec![2, 1, 1]).unwrap();
//! let problem = FactorizationProblem::new(vec![t.clone(), t.clone(), t]).unwrap();
//! assert_eq!(count(&problem, Engine::Auto).unwrap(), 16.into());
//! ```

pub mod arith;
pub mod characters;
pub mod cli;
pub mod engines;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod polynomial;

pub use arith::{ExactInt, ExactRational};
pub use engines::{count, count_with_budget, genus_of, Engine, FactorizationProblem, GenusData};
pub use error::{Error, Result};
pub use partitions::Partition;
