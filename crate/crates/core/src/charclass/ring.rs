use std::fmt;

use serde::{Deserialize, Serialize};

use super::CharClassError;

/// Descriptor of a Stiefel–Whitney polynomial ring.
///
/// `w_j` is a generator exactly when `min_gen <= j <= max_gen`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SWRing {
    min_gen: u32,
    max_gen: Option<u32>,
}

impl SWRing {
    pub fn new(min_gen: u32, max_gen: Option<u32>) -> Result<Self, CharClassError> {
        if !(1..=2).contains(&min_gen) {
            return Err(CharClassError::InvalidRing(format!(
                "min_gen must be 1 or 2, got {min_gen}"
            )));
        }
        if let Some(m) = max_gen {
            if m < min_gen {
                return Err(CharClassError::InvalidRing(format!(
                    "max_gen {m} is below min_gen {min_gen}"
                )));
            }
        }
        Ok(SWRing { min_gen, max_gen })
    }

    /// `H^*(BSO(m); Z_2) = Z_2[w_2, ..., w_m]`.
    pub fn oriented(m: u32) -> Result<Self, CharClassError> {
        Self::new(2, Some(m))
    }

    /// `H^*(BO(m); Z_2) = Z_2[w_1, ..., w_m]`.
    pub fn unoriented(m: u32) -> Result<Self, CharClassError> {
        Self::new(1, Some(m))
    }

    pub fn oriented_unbounded() -> Self {
        SWRing { min_gen: 2, max_gen: None }
    }

    pub fn unoriented_unbounded() -> Self {
        SWRing { min_gen: 1, max_gen: None }
    }

    pub fn min_gen(&self) -> u32 {
        self.min_gen
    }

    pub fn max_gen(&self) -> Option<u32> {
        self.max_gen
    }

    pub fn is_oriented(&self) -> bool {
        self.min_gen == 2
    }

    pub fn contains(&self, index: u32) -> bool {
        index >= self.min_gen && self.max_gen.map_or(true, |m| index <= m)
    }

    pub(crate) fn bounded_max(&self) -> Result<u32, CharClassError> {
        self.max_gen.ok_or(CharClassError::UnboundedRing(*self))
    }

    pub(crate) fn check(&self, index: u32) -> Result<(), CharClassError> {
        if self.contains(index) {
            Ok(())
        } else {
            Err(CharClassError::GeneratorOutOfRange { index, ring: *self })
        }
    }
}

impl fmt::Display for SWRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max_gen {
            Some(m) => write!(f, "Z2[w{}..w{}]", self.min_gen, m),
            None => write!(f, "Z2[w{}..]", self.min_gen),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_invariants() {
        assert!(SWRing::new(0, Some(4)).is_err());
        assert!(SWRing::new(3, Some(4)).is_err());
        assert!(SWRing::oriented(1).is_err());
        let r = SWRing::oriented(6).unwrap();
        assert!(!r.contains(1));
        assert!(r.contains(2) && r.contains(6));
        assert!(!r.contains(7));
        assert!(SWRing::unoriented(3).unwrap().contains(1));
        assert!(SWRing::oriented_unbounded().contains(1000));
    }
}
