use crate::scalar::Real;
use std::fmt;

/// Which kinematical group an object belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Galilei,
    ParaGalileiPlus,
    ParaGalileiMinus,
}

impl Family {
    pub const ALL: [Family; 3] = [
        Family::Galilei,
        Family::ParaGalileiPlus,
        Family::ParaGalileiMinus,
    ];

    pub fn is_para(self) -> bool {
        !matches!(self, Family::Galilei)
    }

    /// The ± of the Para-Galilei brackets ([P_i,H] = ±ω²K_i). Galilei reports +1
    /// but never uses it.
    pub fn sign<T: Real>(self) -> T {
        match self {
            Family::ParaGalileiMinus => -T::one(),
            _ => T::one(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Galilei => "galilei",
            Family::ParaGalileiPlus => "paragalilei_plus",
            Family::ParaGalileiMinus => "paragalilei_minus",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
