use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which enumeration a [`Error::ResourceLimit`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enumeration {
    DyckHalfLength,
    MotzkinLength,
    FrameHalfLength,
}

impl fmt::Display for Enumeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Enumeration::DyckHalfLength => "Dyck half-length",
            Enumeration::MotzkinLength => "Motzkin length",
            Enumeration::FrameHalfLength => "frame half-length",
        })
    }
}

/// Color vector a [`Error::MissingColor`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorKind {
    Horizontal,
    Up,
    Down,
}

impl fmt::Display for ColorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColorKind::Horizontal => "horizontal",
            ColorKind::Up => "up",
            ColorKind::Down => "down",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed path at step {position}: {reason}")]
    MalformedPath {
        position: usize,
        reason: &'static str,
    },

    #[error("path contains a horizontal step at position {position}; a Dyck path is required")]
    NotDyck { position: usize },

    #[error("malformed sequence {text:?}: {reason}")]
    MalformedSequence { text: String, reason: &'static str },

    #[error("sequence {0} would get a negative entry")]
    Underflow(String),

    #[error("sequence {0} does not start with 2 and is not a lifting")]
    NotLifted(String),

    #[error("sequence {0} is not the frame of any Dyck path")]
    NotAdmissible(String),

    #[error("{what} {requested} exceeds the enumeration cap {cap}")]
    ResourceLimit {
        what: Enumeration,
        requested: usize,
        cap: usize,
    },

    #[error("no {kind} color count given for level {level}")]
    MissingColor { kind: ColorKind, level: usize },
}
