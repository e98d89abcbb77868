use serde::{Deserialize, Serialize};

/// Size limits for the brute-force parts of the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group order whose elements may be listed.
    pub enumeration: u64,
    /// Largest index for which a coset action is built.
    pub coset: u64,
    /// Largest group order for which the full subgroup lattice is built.
    pub lattice: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: 200_000,
            coset: 20_000,
            lattice: 100,
        }
    }
}
