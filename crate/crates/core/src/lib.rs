//! Young-Fibonacci combinatorics: snakeshapes, tableaux, the insertion
//! correspondence, growth diagrams, evacuation, weak orders on tableaux and
//! the two Kostka-number analogues, with the classical Young side alongside.

pub mod chains_growth;
pub mod error;
pub mod fibokostka;
pub mod par;
pub mod poset;
pub mod snakeshape;
pub mod verify;
pub mod yfposet;
pub mod yfinsertion;
pub mod yftableau;
pub mod youngside;

pub use error::{Error, Result};
pub use par::Exec;
pub use poset::{FinitePoset, RankedPoset};
pub use snakeshape::Snakeshape;
pub use yfinsertion::Permutation;
pub use yftableau::{Column, YfTableau};
