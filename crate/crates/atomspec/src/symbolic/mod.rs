//! The two countable built-in spaces, implemented through decidable set
//! descriptors: the chain-with-top counterexample space (`omega`) and the
//! atom spectrum of graded `k[x]` (`graded`).

pub mod graded;
pub mod omega;
