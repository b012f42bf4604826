//! The left-invariant coframe of SU(3) and the bitmask representation of
//! basis monomials.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Number of left-invariant 1-forms on SU(3).
pub const COFRAME_DIM: usize = 8;

/// The eight basis 1-forms, in their frozen order.
///
/// | index | symbol |
/// |-------|--------|
/// | 0 | β₁ |
/// | 1 | β₂ |
/// | 2 | η₁ |
/// | 3 | θ₁ |
/// | 4 | η₂ |
/// | 5 | θ₂ |
/// | 6 | η₃ |
/// | 7 | θ₃ |
///
/// β₁, β₂ span the isotropy directions of T²; (η_i, θ_i) span the i-th root
/// space of the reductive complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoframeIndex {
    Beta1 = 0,
    Beta2 = 1,
    Eta1 = 2,
    Theta1 = 3,
    Eta2 = 4,
    Theta2 = 5,
    Eta3 = 6,
    Theta3 = 7,
}

impl CoframeIndex {
    pub const ALL: [CoframeIndex; COFRAME_DIM] = [
        CoframeIndex::Beta1,
        CoframeIndex::Beta2,
        CoframeIndex::Eta1,
        CoframeIndex::Theta1,
        CoframeIndex::Eta2,
        CoframeIndex::Theta2,
        CoframeIndex::Eta3,
        CoframeIndex::Theta3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CoframeIndex::Beta1 => "β₁",
            CoframeIndex::Beta2 => "β₂",
            CoframeIndex::Eta1 => "η₁",
            CoframeIndex::Theta1 => "θ₁",
            CoframeIndex::Eta2 => "η₂",
            CoframeIndex::Theta2 => "θ₂",
            CoframeIndex::Eta3 => "η₃",
            CoframeIndex::Theta3 => "θ₃",
        }
    }

    /// η of the given root slot (0, 1, 2).
    pub fn eta(slot: usize) -> Self {
        Self::ALL[2 + 2 * slot]
    }

    /// θ of the given root slot (0, 1, 2).
    pub fn theta(slot: usize) -> Self {
        Self::ALL[3 + 2 * slot]
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, CoframeIndex::Beta1 | CoframeIndex::Beta2)
    }
}

impl fmt::Display for CoframeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A basis monomial `e^{i₁} ∧ … ∧ e^{i_k}` with `i₁ < … < i_k`, stored as a
/// bitmask over the coframe.
///
/// Ordering is by degree, then lexicographic on the increasing index tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Blade(u8);

/// Bits of the vertical (isotropy) directions β₁, β₂.
pub const VERTICAL_MASK: u8 = 0b0000_0011;
/// Bits of the six horizontal directions.
pub const HORIZONTAL_MASK: u8 = 0b1111_1100;

impl Blade {
    pub const ONE: Blade = Blade(0);

    pub fn from_bits(bits: u8) -> Self {
        Blade(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn generator(i: CoframeIndex) -> Self {
        Blade(1 << i.index())
    }

    /// Builds a blade from strictly increasing indices.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u8;
        let mut last: Option<usize> = None;
        for &i in indices {
            if i >= COFRAME_DIM || last.is_some_and(|l| l >= i) {
                return None;
            }
            bits |= 1 << i;
            last = Some(i);
        }
        Some(Blade(bits))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..COFRAME_DIM).filter(move |i| self.0 & (1 << i) != 0)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_horizontal(self) -> bool {
        self.0 & VERTICAL_MASK == 0
    }

    /// `self ∧ other = sign · (self ∪ other)`; `None` when they share a factor.
    pub fn wedge(self, other: Blade) -> Option<(Blade, i8)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // count inversions: pairs (i in self, j in other) with i > j
        let mut swaps = 0u32;
        for j in other.indices() {
            swaps += ((self.0 as u16) >> (j + 1)).count_ones();
        }
        let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
        Some((Blade(self.0 | other.0), sign))
    }

    pub fn symbols(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        self.indices()
            .map(|i| CoframeIndex::ALL[i].symbol())
            .collect::<Vec<_>>()
            .join("∧")
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols())
    }
}
