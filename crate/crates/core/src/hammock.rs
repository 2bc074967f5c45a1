//! Knitting oracle: Hom dimensions in the mesh category of ℤQ.
//!
//! This recomputes what [`crate::derived::DerivedCategory::hom_dim`] computes
//! through the Euler form, by an entirely different route: the hammock of a
//! fixed source object is knitted slice by slice through the meshes of ℤQ.
//! For a target Y with mesh τY → E → Y, the count satisfies
//! h(Y) = Σ_{Z→Y} h(Z) − h(τY), corrected by +1 at Y = X (the identity) and
//! clamped at zero at Y = X\[1\], the one place where the connecting morphism
//! of the Auslander–Reiten triangle survives composition.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::derived::{DerivedCategory, DerivedObject};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowExceeded {
    pub twist_distance: i64,
    pub window: i64,
}

impl fmt::Display for WindowExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "twist distance {} exceeds the knitting window {}",
            self.twist_distance, self.window
        )
    }
}

impl core::error::Error for WindowExceeded {}

/// Mesh-category Hom computation over a bounded twist window.
pub struct HammockOracle<'a> {
    cat: &'a DerivedCategory,
    window: i64,
    /// Height function on vertices: c_u = c_v + 1 for every arrow u → v, so
    /// slice(i, l) = c_i − 2l increases by exactly one along ℤQ arrows.
    heights: Vec<i64>,
}

impl<'a> HammockOracle<'a> {
    pub fn new(cat: &'a DerivedCategory) -> Self {
        Self::with_window(cat, cat.window())
    }

    pub fn with_window(cat: &'a DerivedCategory, window: i64) -> Self {
        let quiver = cat.quiver();
        let n = quiver.rank();
        let mut heights = alloc::vec![i64::MIN; n];
        heights[0] = 0;
        // The diagram is a tree: propagate from vertex 1.
        for _ in 0..n {
            for &(u, v) in quiver.arrows() {
                if heights[u - 1] != i64::MIN {
                    heights[v - 1] = heights[u - 1] - 1;
                } else if heights[v - 1] != i64::MIN {
                    heights[u - 1] = heights[v - 1] + 1;
                }
            }
        }
        assert!(heights.iter().all(|&c| c != i64::MIN));
        HammockOracle {
            cat,
            window,
            heights,
        }
    }

    fn slice(&self, x: DerivedObject) -> i64 {
        self.heights[x.vertex - 1] - 2 * x.twist
    }

    /// dim Hom(X, Y) by knitting. Errors if the twist distance exceeds the
    /// window.
    pub fn hom_dim(&self, x: DerivedObject, y: DerivedObject) -> Result<u64, WindowExceeded> {
        let delta = y.twist - x.twist;
        if delta.abs() > self.window {
            return Err(WindowExceeded {
                twist_distance: delta.abs(),
                window: self.window,
            });
        }
        // Normalize the source to twist 0; Hom is τ-equivariant.
        let x = DerivedObject::new(x.vertex, 0);
        let y = DerivedObject::new(y.vertex, delta);
        let start = self.slice(x);
        let target = self.slice(y);
        if target < start || (x != y && target == start) {
            // Nonzero morphisms strictly increase the slice.
            return Ok(0);
        }

        let quiver = self.cat.quiver();
        let mut values: BTreeMap<DerivedObject, i64> = BTreeMap::new();
        for s in start..=target {
            for v in 1..=quiver.rank() {
                if (self.heights[v - 1] - s).rem_euclid(2) != 0 {
                    continue;
                }
                let l = (self.heights[v - 1] - s) / 2;
                let obj = DerivedObject::new(v, l);
                let mut naive: i64 = 0;
                for &(a, b) in quiver.arrows() {
                    // Mesh predecessors of (v, l): (w, l) for arrows v→w and
                    // (w, l+1) for arrows w→v.
                    if a == v {
                        naive += values.get(&DerivedObject::new(b, l)).copied().unwrap_or(0);
                    }
                    if b == v {
                        naive += values
                            .get(&DerivedObject::new(a, l + 1))
                            .copied()
                            .unwrap_or(0);
                    }
                }
                naive -= values
                    .get(&DerivedObject::new(v, l + 1))
                    .copied()
                    .unwrap_or(0);
                let value = if obj == x {
                    naive + 1
                } else {
                    debug_assert!(naive >= -1, "mesh recursion out of range at {obj:?}");
                    naive.max(0)
                };
                values.insert(obj, value);
            }
        }
        Ok(values.get(&y).copied().unwrap_or(0) as u64)
    }
}
