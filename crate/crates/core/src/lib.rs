pub mod borelrep;
pub mod error;
pub mod exactfield;
pub mod fock;
pub mod lweights;
pub mod rootsys;
pub mod rootvectors;

pub use error::{Error, Result};
