use crate::error::{Enumeration, Error, Result};

/// Caps on the exhaustive enumerators.
///
/// Path and frame enumeration is exponential in its size argument. Requests
/// above a cap fail with [`Error::ResourceLimit`] instead of exhausting
/// memory or running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub dyck_half_length: usize,
    pub motzkin_length: usize,
    pub frame_half_length: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dyck_half_length: 16,
            motzkin_length: 14,
            frame_half_length: 20,
        }
    }
}

impl Limits {
    /// No caps at all.
    pub fn unbounded() -> Self {
        Limits {
            dyck_half_length: usize::MAX,
            motzkin_length: usize::MAX,
            frame_half_length: usize::MAX,
        }
    }

    pub fn check(&self, what: Enumeration, requested: usize) -> Result<()> {
        let cap = match what {
            Enumeration::DyckHalfLength => self.dyck_half_length,
            Enumeration::MotzkinLength => self.motzkin_length,
            Enumeration::FrameHalfLength => self.frame_half_length,
        };
        if requested > cap {
            Err(Error::ResourceLimit {
                what,
                requested,
                cap,
            })
        } else {
            Ok(())
        }
    }
}
