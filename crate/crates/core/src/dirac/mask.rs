use serde::{Deserialize, Serialize};

use crate::kinematics::EnergySign;

/// Which blocks of the interaction matrix are switched on, keyed by the
/// energy signs of the row and column state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelMask {
    /// `V^{+,s;+,s'}`
    pub pos_pos: bool,
    /// `V^{−,s;−,s'}`
    pub neg_neg: bool,
    /// `V^{+,s;−,s'}`
    pub pos_neg: bool,
    /// `V^{−,s;+,s'}`
    pub neg_pos: bool,
}

impl ChannelMask {
    pub const ALL: ChannelMask = ChannelMask { pos_pos: true, neg_neg: true, pos_neg: true, neg_pos: true };
    pub const NONE: ChannelMask = ChannelMask { pos_pos: false, neg_neg: false, pos_neg: false, neg_pos: false };
    /// Only couplings within the positive and within the negative spectrum.
    pub const SAME_SIGN: ChannelMask = ChannelMask { pos_pos: true, neg_neg: true, pos_neg: false, neg_pos: false };
    /// Only couplings between the positive and negative spectrum.
    pub const CROSS_SIGN: ChannelMask = ChannelMask { pos_pos: false, neg_neg: false, pos_neg: true, neg_pos: true };

    pub fn allows(&self, row: EnergySign, col: EnergySign) -> bool {
        use EnergySign::*;
        match (row, col) {
            (Positive, Positive) => self.pos_pos,
            (Negative, Negative) => self.neg_neg,
            (Positive, Negative) => self.pos_neg,
            (Negative, Positive) => self.neg_pos,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Self::NONE
    }

    /// Bit encoding used by the C interface: bit 0 `++`, bit 1 `−−`,
    /// bit 2 `+−`, bit 3 `−+`.
    pub fn bits(&self) -> u32 {
        self.pos_pos as u32 | (self.neg_neg as u32) << 1 | (self.pos_neg as u32) << 2 | (self.neg_pos as u32) << 3
    }

    pub fn from_bits(bits: u32) -> Self {
        Self { pos_pos: bits & 1 != 0, neg_neg: bits & 2 != 0, pos_neg: bits & 4 != 0, neg_pos: bits & 8 != 0 }
    }
}

impl Default for ChannelMask {
    fn default() -> Self {
        Self::ALL
    }
}
