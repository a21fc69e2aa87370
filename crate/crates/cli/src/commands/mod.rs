pub mod center;
pub mod check;
pub mod lattice;
pub mod measure;
pub mod model;
pub mod simulate;

use clap::ValueEnum;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelAction {
    Show,
    Validate,
    Smatrix,
    Tmatrix,
    Verlinde,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Protocol {
    HalfBraid,
    RPhase,
    FPhase,
}

impl Protocol {
    pub fn name(self) -> &'static str {
        match self {
            Protocol::HalfBraid => "half-braid",
            Protocol::RPhase => "r-phase",
            Protocol::FPhase => "f-phase",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}
