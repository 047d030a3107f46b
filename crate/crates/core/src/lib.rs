//! Frames of Dyck paths and exact lattice-path counting.
//!
//! A Dyck path is labelled by its *frame*: the number of lattice nodes it
//! touches at each level. This crate decides which integer sequences are
//! frames, builds a canonical path for every frame, counts the paths sharing
//! a frame, and uses those counts to enumerate (colored) Dyck and Motzkin
//! paths exactly. Every closed form is checked against brute-force
//! enumeration in [`paths`].
//!
//! ```
//! use dyck_frames::{Frame, RawSequence, counting};
//!
//! let frame: Frame = "3,4,3,1".parse::<RawSequence>().unwrap().try_into().unwrap();
//! assert_eq!(counting::frame_cardinality(&frame), 6u32.into());
//! assert_eq!(frame.canonical_representative().to_string(), "UUUDDUDDUD");
//! ```

pub mod counting;
mod error;
pub mod frames;
mod limits;
pub mod paths;
pub mod verify;

pub use counting::{ColorSpec, Count, FootTable};
pub use error::{ColorKind, Enumeration, Error, Result};
pub use frames::{Frame, RawSequence};
pub use limits::Limits;
pub use paths::{LevelSequence, Path, Step};
