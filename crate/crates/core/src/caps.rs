use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

/// Size limits for the exponential algorithms in this crate.
///
/// Exceeding a cap is always reported as an error, never as a truncated result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group enumerated by permutation closure or built as a product.
    pub closure: usize,
    /// Largest group whose full subgroup lattice is enumerated.
    pub lattice: usize,
    /// Largest number of subgroups kept in one lattice.
    pub lattice_size: usize,
    /// Isomorphism search refuses when both groups exceed this order.
    pub iso: usize,
    /// Largest group whose automorphism group is enumerated.
    pub aut: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { closure: 10080, lattice: 128, lattice_size: 20000, iso: 256, aut: 64 }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("closure", self.closure),
            ("lattice", self.lattice),
            ("lattice_size", self.lattice_size),
            ("iso", self.iso),
            ("aut", self.aut),
        ];
        for (name, value) in fields {
            if value == 0 {
                return Err(GroupError::ParameterOutOfRange(format!("cap {name} must be positive")));
            }
        }
        Ok(())
    }

    pub(crate) fn check(&self, what: &str, order: usize, cap: usize) -> Result<()> {
        if order > cap {
            return Err(GroupError::OrderCapExceeded { what: what.to_string(), order, cap });
        }
        Ok(())
    }
}
