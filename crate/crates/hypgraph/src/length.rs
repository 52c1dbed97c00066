//! Exact lengths on the 1/8 grid.
//!
//! Every metric quantity in this crate (offsets, distances, diameters,
//! hyperbolicity constants) is an integer count of 1/8-edge units, so all
//! arithmetic is exact and comparisons never see floating point.

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

/// Number of 1/8 units in one edge.
pub const UNITS_PER_EDGE: u32 = 8;

/// An exact non-negative length in units of 1/8 edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EighthLength(u32);

impl EighthLength {
    pub const ZERO: EighthLength = EighthLength(0);
    /// One full edge (8 units).
    pub const EDGE: EighthLength = EighthLength(UNITS_PER_EDGE);

    pub const fn from_units(units: u32) -> Self {
        EighthLength(units)
    }

    /// Whole-edge count to exact length.
    pub const fn from_edges(edges: u32) -> Self {
        EighthLength(edges * UNITS_PER_EDGE)
    }

    /// Quarter-edge count to exact length (2 units per quarter).
    pub const fn from_quarters(quarters: u32) -> Self {
        EighthLength(quarters * 2)
    }

    pub const fn units(self) -> u32 {
        self.0
    }

    /// True when the value lies on the 1/4 grid.
    pub const fn is_quarter_multiple(self) -> bool {
        self.0 % 2 == 0
    }

    /// Quarter-edge count; `None` when the value is off the 1/4 grid.
    pub const fn as_quarters(self) -> Option<u32> {
        if self.0 % 2 == 0 {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        self.0.checked_sub(rhs.0).map(EighthLength)
    }

    /// |self − rhs|.
    pub fn abs_diff(self, rhs: Self) -> Self {
        EighthLength(self.0.abs_diff(rhs.0))
    }
}

impl Add for EighthLength {
    type Output = EighthLength;
    fn add(self, rhs: Self) -> Self {
        EighthLength(self.0 + rhs.0)
    }
}

impl AddAssign for EighthLength {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

impl Sub for EighthLength {
    type Output = EighthLength;
    fn sub(self, rhs: Self) -> Self {
        EighthLength(self.0.checked_sub(rhs.0).expect("length underflow"))
    }
}

/// Reduced fraction rendering: "0", "1", "3/2", "9/4", "11/8", ...
impl fmt::Display for EighthLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fraction_string(self.0 as u64, 8))
    }
}

impl fmt::Debug for EighthLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}u]", self, self.0)
    }
}

/// A value on the 1/4 grid, counted in quarter edges. Used for the closed-form
/// bounds (A, b1, b2) where everything is a multiple of 1/4.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Quarter(u64);

impl Quarter {
    pub const ZERO: Quarter = Quarter(0);
    pub const ONE: Quarter = Quarter(4);
    pub const THREE_QUARTERS: Quarter = Quarter(3);

    pub const fn from_quarters(quarters: u64) -> Self {
        Quarter(quarters)
    }

    pub const fn quarters(self) -> u64 {
        self.0
    }

    pub fn to_eighths(self) -> EighthLength {
        EighthLength::from_units(u32::try_from(self.0 * 2).expect("quarter value too large"))
    }
}

impl fmt::Display for Quarter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fraction_string(self.0, 4))
    }
}

impl fmt::Debug for Quarter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}q]", self, self.0)
    }
}

/// Reduced "p/q" string for numerator/denominator, "p" when the denominator
/// reduces to 1.
pub fn fraction_string(numerator: u64, denominator: u64) -> String {
    let g = gcd(numerator, denominator);
    let (p, q) = (numerator / g, denominator / g);
    if q == 1 {
        format!("{p}")
    } else {
        format!("{p}/{q}")
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}
