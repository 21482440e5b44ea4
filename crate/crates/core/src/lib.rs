//! Commutator theory for finite loops.
//!
//! Loops are given by Cayley tables on `0..n`. The crate computes inner and
//! total inner mapping groups, normal subloops, the commutator `[A,B]_Q` of
//! normal subloops from sets of inner words, derived and associator
//! subloops, and the central, congruence and Bruck series.
//!
//! ```
//! use loopcomm::{corpus, CommutatorConfig, CommutatorEngine, SubloopSet};
//!
//! let q = corpus::ex_z22();
//! let h = SubloopSet::from_elements(&q, &[0, 1, 2, 3]).unwrap();
//! let e = CommutatorEngine::new(&q, &CommutatorConfig::default()).unwrap();
//! assert_eq!(e.commutator(&h, &h).unwrap().to_vec(), vec![0, 2]);
//! ```

pub mod commutator;
pub mod corpus;
pub mod elemset;
pub mod error;
pub mod loopcore;
pub mod normal;
pub mod permgrp;
pub mod verify;
pub mod words;

pub use commutator::{
    commutator, CommutatorConfig, CommutatorEngine, SeriesKind, SeriesReport, WordSpec,
};
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use loopcore::{Loop, SubloopSet};
pub use normal::NormalSubloop;
pub use permgrp::{GroupClosure, Perm};
