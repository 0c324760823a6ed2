//! Reproduction of the reference energy tables.
//!
//! Tables 2 and 3 list s-wave levels by `n`; Tables 1, 4 and 5 use labels
//! "Nx" meaning `n = N` with orbital letter `x`. Table 1 is not reproduced by
//! the closed-form spectrum, so its rows are reported, never asserted.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::format::{Cell, Frame};
use crate::error::{Error, Result};
use crate::oracle::numerov::{numerov_eigenvalue, CentrifugalMode, NumerovProblem};
use crate::oracle::OracleReport;
use crate::potential::{PotentialParams, QuantumState};
use crate::spectrum::energy_eigenvalue;

/// Absolute tolerance for printed energies.
pub const TABLE_TOLERANCE: f64 = 1e-6;

/// Relative tolerance of the Numerov check on Table 1.
pub const NUMEROV_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// The closed-form results the tables were built to present.
    Present,
    /// Asymptotic iteration method values quoted for comparison.
    Aim,
    /// Nikiforov-Uvarov values quoted for comparison.
    Nu,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Present => "present",
            Method::Aim => "aim",
            Method::Nu => "nu",
        })
    }
}

struct Printed {
    table: u8,
    label: &'static str,
    alpha: f64,
    method: Method,
    value: f64,
}

#[rustfmt::skip]
const PRINTED: &[Printed] = &[
    // table 1
    Printed { table: 1, label: "1s", alpha: 0.002, method: Method::Present, value: 18.50038334 },
    Printed { table: 1, label: "1s", alpha: 0.02, method: Method::Present, value: 18.61121709 },
    Printed { table: 1, label: "1s", alpha: 0.2, method: Method::Present, value: 19.73743352 },
    Printed { table: 1, label: "1s", alpha: 0.4, method: Method::Present, value: 21.02713244 },
    Printed { table: 1, label: "1s", alpha: 0.8, method: Method::Present, value: 23.72899708 },
    Printed { table: 1, label: "1s", alpha: 1.2, method: Method::Present, value: 26.59648864 },
    Printed { table: 1, label: "2s", alpha: 0.002, method: Method::Present, value: 18.50858178 },
    Printed { table: 1, label: "2s", alpha: 0.02, method: Method::Present, value: 18.69348948 },
    Printed { table: 1, label: "2s", alpha: 0.2, method: Method::Present, value: 20.58899614 },
    Printed { table: 1, label: "2s", alpha: 0.4, method: Method::Present, value: 22.79449204 },
    Printed { table: 1, label: "2s", alpha: 0.8, method: Method::Present, value: 27.52159072 },
    Printed { table: 1, label: "2s", alpha: 1.2, method: Method::Present, value: 32.67406160 },
    Printed { table: 1, label: "2p", alpha: 0.002, method: Method::Present, value: 18.50858258 },
    Printed { table: 1, label: "2p", alpha: 0.02, method: Method::Present, value: 18.69357133 },
    Printed { table: 1, label: "2p", alpha: 0.2, method: Method::Present, value: 20.59752395 },
    Printed { table: 1, label: "2p", alpha: 0.4, method: Method::Present, value: 22.83011829 },
    Printed { table: 1, label: "2p", alpha: 0.8, method: Method::Present, value: 27.67609429 },
    Printed { table: 1, label: "2p", alpha: 1.2, method: Method::Present, value: 33.04821322 },
    Printed { table: 1, label: "3s", alpha: 0.002, method: Method::Present, value: 18.51678180 },
    Printed { table: 1, label: "3s", alpha: 0.02, method: Method::Present, value: 18.77592188 },
    Printed { table: 1, label: "3s", alpha: 0.2, method: Method::Present, value: 21.45655875 },
    Printed { table: 1, label: "3s", alpha: 0.4, method: Method::Present, value: 24.62585164 },
    Printed { table: 1, label: "3s", alpha: 0.8, method: Method::Present, value: 31.57018435 },
    Printed { table: 1, label: "3s", alpha: 1.2, method: Method::Present, value: 39.32763454 },
    Printed { table: 1, label: "3p", alpha: 0.002, method: Method::Present, value: 18.51678262 },
    Printed { table: 1, label: "3p", alpha: 0.02, method: Method::Present, value: 18.77600388 },
    Printed { table: 1, label: "3p", alpha: 0.2, method: Method::Present, value: 21.46523908 },
    Printed { table: 1, label: "3p", alpha: 0.4, method: Method::Present, value: 24.66269723 },
    Printed { table: 1, label: "3p", alpha: 0.8, method: Method::Present, value: 31.73441612 },
    Printed { table: 1, label: "3p", alpha: 1.2, method: Method::Present, value: 39.73447216 },
    Printed { table: 1, label: "3d", alpha: 0.002, method: Method::Present, value: 18.51678425 },
    Printed { table: 1, label: "3d", alpha: 0.02, method: Method::Present, value: 18.77616788 },
    Printed { table: 1, label: "3d", alpha: 0.2, method: Method::Present, value: 21.48259499 },
    Printed { table: 1, label: "3d", alpha: 0.4, method: Method::Present, value: 24.73630368 },
    Printed { table: 1, label: "3d", alpha: 0.8, method: Method::Present, value: 32.06125854 },
    Printed { table: 1, label: "3d", alpha: 1.2, method: Method::Present, value: 40.53875474 },
    Printed { table: 1, label: "4s", alpha: 0.002, method: Method::Present, value: 18.52498345 },
    Printed { table: 1, label: "4s", alpha: 0.02, method: Method::Present, value: 18.85851426 },
    Printed { table: 1, label: "4s", alpha: 0.2, method: Method::Present, value: 22.34012135 },
    Printed { table: 1, label: "4s", alpha: 0.4, method: Method::Present, value: 26.52121126 },
    Printed { table: 1, label: "4s", alpha: 0.8, method: Method::Present, value: 35.87477799 },
    Printed { table: 1, label: "4s", alpha: 1.2, method: Method::Present, value: 46.55720749 },
    Printed { table: 1, label: "4p", alpha: 0.002, method: Method::Present, value: 18.52498425 },
    Printed { table: 1, label: "4p", alpha: 0.02, method: Method::Present, value: 18.85859642 },
    Printed { table: 1, label: "4p", alpha: 0.2, method: Method::Present, value: 22.34895421 },
    Printed { table: 1, label: "4p", alpha: 0.4, method: Method::Present, value: 26.55927615 },
    Printed { table: 1, label: "4p", alpha: 0.8, method: Method::Present, value: 36.04873794 },
    Printed { table: 1, label: "4p", alpha: 1.2, method: Method::Present, value: 46.99673112 },
    Printed { table: 1, label: "4d", alpha: 0.002, method: Method::Present, value: 18.52498588 },
    Printed { table: 1, label: "4d", alpha: 0.02, method: Method::Present, value: 18.85876072 },
    Printed { table: 1, label: "4d", alpha: 0.2, method: Method::Present, value: 22.36661499 },
    Printed { table: 1, label: "4d", alpha: 0.4, method: Method::Present, value: 26.63531596 },
    Printed { table: 1, label: "4d", alpha: 0.8, method: Method::Present, value: 36.39487055 },
    Printed { table: 1, label: "4d", alpha: 1.2, method: Method::Present, value: 47.86516178 },
    Printed { table: 1, label: "4f", alpha: 0.002, method: Method::Present, value: 18.52498834 },
    Printed { table: 1, label: "4f", alpha: 0.02, method: Method::Present, value: 18.85900721 },
    Printed { table: 1, label: "4f", alpha: 0.2, method: Method::Present, value: 22.39309395 },
    Printed { table: 1, label: "4f", alpha: 0.4, method: Method::Present, value: 26.7491527 },
    Printed { table: 1, label: "4f", alpha: 0.8, method: Method::Present, value: 36.90974960 },
    Printed { table: 1, label: "4f", alpha: 1.2, method: Method::Present, value: 49.14313806 },
    // table 2
    Printed { table: 2, label: "0", alpha: 0.2, method: Method::Present, value: 16.10494172 },
    Printed { table: 2, label: "0", alpha: 0.2, method: Method::Aim, value: 16.10494173 },
    Printed { table: 2, label: "0", alpha: 0.2, method: Method::Nu, value: 16.10494172 },
    Printed { table: 2, label: "0", alpha: 0.02, method: Method::Present, value: 15.78149898 },
    Printed { table: 2, label: "0", alpha: 0.02, method: Method::Aim, value: 15.78149898 },
    Printed { table: 2, label: "0", alpha: 0.02, method: Method::Nu, value: 15.78149898 },
    Printed { table: 2, label: "0", alpha: 0.002, method: Method::Present, value: 15.7495163 },
    Printed { table: 2, label: "0", alpha: 0.002, method: Method::Aim, value: 15.74951629 },
    Printed { table: 2, label: "0", alpha: 0.002, method: Method::Nu, value: 15.74951629 },
    Printed { table: 2, label: "1", alpha: 0.2, method: Method::Present, value: 16.83082621 },
    Printed { table: 2, label: "1", alpha: 0.2, method: Method::Aim, value: 16.83082621 },
    Printed { table: 2, label: "1", alpha: 0.2, method: Method::Nu, value: 16.83082621 },
    Printed { table: 2, label: "1", alpha: 0.02, method: Method::Present, value: 15.8526429 },
    Printed { table: 2, label: "1", alpha: 0.02, method: Method::Aim, value: 15.85264289 },
    Printed { table: 2, label: "1", alpha: 0.02, method: Method::Nu, value: 15.85264289 },
    Printed { table: 2, label: "1", alpha: 0.002, method: Method::Present, value: 15.75661628 },
    Printed { table: 2, label: "1", alpha: 0.002, method: Method::Aim, value: 15.75661628 },
    Printed { table: 2, label: "1", alpha: 0.002, method: Method::Nu, value: 15.75661628 },
    Printed { table: 2, label: "2", alpha: 0.2, method: Method::Present, value: 17.5727107 },
    Printed { table: 2, label: "2", alpha: 0.2, method: Method::Aim, value: 17.57271070 },
    Printed { table: 2, label: "2", alpha: 0.2, method: Method::Nu, value: 17.57271070 },
    Printed { table: 2, label: "2", alpha: 0.02, method: Method::Present, value: 15.9239468 },
    Printed { table: 2, label: "2", alpha: 0.02, method: Method::Aim, value: 15.92394680 },
    Printed { table: 2, label: "2", alpha: 0.02, method: Method::Nu, value: 15.92394680 },
    Printed { table: 2, label: "2", alpha: 0.002, method: Method::Present, value: 15.76371788 },
    Printed { table: 2, label: "2", alpha: 0.002, method: Method::Aim, value: 15.76371786 },
    Printed { table: 2, label: "2", alpha: 0.002, method: Method::Nu, value: 15.76371786 },
    Printed { table: 2, label: "3", alpha: 0.2, method: Method::Present, value: 18.33059519 },
    Printed { table: 2, label: "3", alpha: 0.2, method: Method::Aim, value: 18.33059518 },
    Printed { table: 2, label: "3", alpha: 0.2, method: Method::Nu, value: 18.33059518 },
    Printed { table: 2, label: "3", alpha: 0.02, method: Method::Present, value: 15.99541072 },
    Printed { table: 2, label: "3", alpha: 0.02, method: Method::Aim, value: 15.99541071 },
    Printed { table: 2, label: "3", alpha: 0.02, method: Method::Nu, value: 15.99541071 },
    Printed { table: 2, label: "3", alpha: 0.002, method: Method::Present, value: 15.77082105 },
    Printed { table: 2, label: "3", alpha: 0.002, method: Method::Aim, value: 15.77082105 },
    Printed { table: 2, label: "3", alpha: 0.002, method: Method::Nu, value: 15.77082105 },
    Printed { table: 2, label: "4", alpha: 0.2, method: Method::Present, value: 19.10447968 },
    Printed { table: 2, label: "4", alpha: 0.2, method: Method::Aim, value: 19.10447967 },
    Printed { table: 2, label: "4", alpha: 0.2, method: Method::Nu, value: 19.10447967 },
    Printed { table: 2, label: "4", alpha: 0.02, method: Method::Present, value: 16.06703462 },
    Printed { table: 2, label: "4", alpha: 0.02, method: Method::Aim, value: 16.06703463 },
    Printed { table: 2, label: "4", alpha: 0.02, method: Method::Nu, value: 16.06703463 },
    Printed { table: 2, label: "4", alpha: 0.002, method: Method::Present, value: 15.77792584 },
    Printed { table: 2, label: "4", alpha: 0.002, method: Method::Aim, value: 15.77792584 },
    Printed { table: 2, label: "4", alpha: 0.002, method: Method::Nu, value: 15.77792584 },
    Printed { table: 2, label: "5", alpha: 0.2, method: Method::Present, value: 19.89436415 },
    Printed { table: 2, label: "5", alpha: 0.2, method: Method::Aim, value: 19.89436416 },
    Printed { table: 2, label: "5", alpha: 0.2, method: Method::Nu, value: 19.89436416 },
    Printed { table: 2, label: "5", alpha: 0.02, method: Method::Present, value: 16.13881855 },
    Printed { table: 2, label: "5", alpha: 0.02, method: Method::Aim, value: 16.13881854 },
    Printed { table: 2, label: "5", alpha: 0.02, method: Method::Nu, value: 16.13881854 },
    Printed { table: 2, label: "5", alpha: 0.002, method: Method::Present, value: 15.78503222 },
    Printed { table: 2, label: "5", alpha: 0.002, method: Method::Aim, value: 15.78503222 },
    Printed { table: 2, label: "5", alpha: 0.002, method: Method::Nu, value: 15.78503222 },
    Printed { table: 2, label: "6", alpha: 0.2, method: Method::Present, value: 20.70024864 },
    Printed { table: 2, label: "6", alpha: 0.2, method: Method::Aim, value: 20.70024864 },
    Printed { table: 2, label: "6", alpha: 0.2, method: Method::Nu, value: 20.70024864 },
    Printed { table: 2, label: "6", alpha: 0.02, method: Method::Present, value: 16.21076245 },
    Printed { table: 2, label: "6", alpha: 0.02, method: Method::Aim, value: 16.21076245 },
    Printed { table: 2, label: "6", alpha: 0.02, method: Method::Nu, value: 16.21076245 },
    Printed { table: 2, label: "6", alpha: 0.002, method: Method::Present, value: 15.79214021 },
    Printed { table: 2, label: "6", alpha: 0.002, method: Method::Aim, value: 15.79214021 },
    Printed { table: 2, label: "6", alpha: 0.002, method: Method::Nu, value: 15.79214021 },
    // table 3
    Printed { table: 3, label: "0", alpha: 1.2, method: Method::Present, value: 18.02560022 },
    Printed { table: 3, label: "0", alpha: 1.2, method: Method::Nu, value: 18.02560022 },
    Printed { table: 3, label: "0", alpha: 0.8, method: Method::Present, value: 17.23163309 },
    Printed { table: 3, label: "0", alpha: 0.8, method: Method::Nu, value: 17.23163309 },
    Printed { table: 3, label: "0", alpha: 0.4, method: Method::Present, value: 16.47211972 },
    Printed { table: 3, label: "0", alpha: 0.4, method: Method::Nu, value: 16.47211973 },
    Printed { table: 3, label: "1", alpha: 1.2, method: Method::Present, value: 22.87051711 },
    Printed { table: 3, label: "1", alpha: 1.2, method: Method::Nu, value: 22.8705171 },
    Printed { table: 3, label: "1", alpha: 0.8, method: Method::Present, value: 20.32991862 },
    Printed { table: 3, label: "1", alpha: 0.8, method: Method::Nu, value: 20.32991862 },
    Printed { table: 3, label: "1", alpha: 0.4, method: Method::Present, value: 17.95616358 },
    Printed { table: 3, label: "1", alpha: 0.4, method: Method::Nu, value: 17.95616357 },
    Printed { table: 3, label: "2", alpha: 1.2, method: Method::Present, value: 28.29143400 },
    Printed { table: 3, label: "2", alpha: 1.2, method: Method::Nu, value: 28.29143398 },
    Printed { table: 3, label: "2", alpha: 0.8, method: Method::Present, value: 23.68420415 },
    Printed { table: 3, label: "2", alpha: 0.8, method: Method::Nu, value: 23.68420415 },
    Printed { table: 3, label: "2", alpha: 0.4, method: Method::Present, value: 19.50420741 },
    Printed { table: 3, label: "2", alpha: 0.4, method: Method::Nu, value: 19.50420742 },
    Printed { table: 3, label: "3", alpha: 1.2, method: Method::Present, value: 34.28835088 },
    Printed { table: 3, label: "3", alpha: 1.2, method: Method::Nu, value: 34.28835086 },
    Printed { table: 3, label: "3", alpha: 0.8, method: Method::Present, value: 27.29448969 },
    Printed { table: 3, label: "3", alpha: 0.8, method: Method::Nu, value: 27.2944896 },
    Printed { table: 3, label: "3", alpha: 0.4, method: Method::Present, value: 21.11625128 },
    Printed { table: 3, label: "3", alpha: 0.4, method: Method::Nu, value: 21.11625126 },
    Printed { table: 3, label: "4", alpha: 1.2, method: Method::Present, value: 40.86126776 },
    Printed { table: 3, label: "4", alpha: 1.2, method: Method::Nu, value: 40.86126774 },
    Printed { table: 3, label: "4", alpha: 0.8, method: Method::Present, value: 31.16077521 },
    Printed { table: 3, label: "4", alpha: 0.8, method: Method::Nu, value: 31.16077522 },
    Printed { table: 3, label: "4", alpha: 0.4, method: Method::Present, value: 22.79229512 },
    Printed { table: 3, label: "4", alpha: 0.4, method: Method::Nu, value: 22.7922951 },
    Printed { table: 3, label: "5", alpha: 1.2, method: Method::Present, value: 48.01018464 },
    Printed { table: 3, label: "5", alpha: 1.2, method: Method::Nu, value: 48.01018462 },
    Printed { table: 3, label: "5", alpha: 0.8, method: Method::Present, value: 35.28306075 },
    Printed { table: 3, label: "5", alpha: 0.8, method: Method::Nu, value: 35.28306074 },
    Printed { table: 3, label: "5", alpha: 0.4, method: Method::Present, value: 24.53233896 },
    Printed { table: 3, label: "5", alpha: 0.4, method: Method::Nu, value: 24.53233894 },
    Printed { table: 3, label: "6", alpha: 1.2, method: Method::Present, value: 55.73510152 },
    Printed { table: 3, label: "6", alpha: 1.2, method: Method::Nu, value: 55.7351015 },
    Printed { table: 3, label: "6", alpha: 0.8, method: Method::Present, value: 39.66134628 },
    Printed { table: 3, label: "6", alpha: 0.8, method: Method::Nu, value: 39.66134628 },
    Printed { table: 3, label: "6", alpha: 0.4, method: Method::Present, value: 26.33638282 },
    Printed { table: 3, label: "6", alpha: 0.4, method: Method::Nu, value: 26.33638278 },
    // table 4
    Printed { table: 4, label: "1s", alpha: 1.2, method: Method::Present, value: 22.87051711 },
    Printed { table: 4, label: "1s", alpha: 1.2, method: Method::Nu, value: 22.87051710 },
    Printed { table: 4, label: "1s", alpha: 0.8, method: Method::Present, value: 20.32991862 },
    Printed { table: 4, label: "1s", alpha: 0.8, method: Method::Nu, value: 20.32991862 },
    Printed { table: 4, label: "1s", alpha: 0.4, method: Method::Present, value: 17.95616358 },
    Printed { table: 4, label: "1s", alpha: 0.4, method: Method::Nu, value: 17.95616357 },
    Printed { table: 4, label: "1s", alpha: 0.2, method: Method::Present, value: 16.83082621 },
    Printed { table: 4, label: "2s", alpha: 1.2, method: Method::Present, value: 28.29143400 },
    Printed { table: 4, label: "2s", alpha: 1.2, method: Method::Nu, value: 28.29143398 },
    Printed { table: 4, label: "2s", alpha: 0.8, method: Method::Present, value: 23.68420415 },
    Printed { table: 4, label: "2s", alpha: 0.8, method: Method::Nu, value: 23.68420415 },
    Printed { table: 4, label: "2s", alpha: 0.4, method: Method::Present, value: 19.50420741 },
    Printed { table: 4, label: "2s", alpha: 0.4, method: Method::Nu, value: 19.50420742 },
    Printed { table: 4, label: "2s", alpha: 0.2, method: Method::Present, value: 17.57271070 },
    Printed { table: 4, label: "2p", alpha: 1.2, method: Method::Present, value: 28.64395420 },
    Printed { table: 4, label: "2p", alpha: 1.2, method: Method::Nu, value: 28.64395419 },
    Printed { table: 4, label: "2p", alpha: 0.8, method: Method::Present, value: 23.82847893 },
    Printed { table: 4, label: "2p", alpha: 0.8, method: Method::Nu, value: 23.82847894 },
    Printed { table: 4, label: "2p", alpha: 0.4, method: Method::Present, value: 19.53712285 },
    Printed { table: 4, label: "2p", alpha: 0.4, method: Method::Nu, value: 19.53712286 },
    Printed { table: 4, label: "2p", alpha: 0.2, method: Method::Present, value: 17.58054181 },
    Printed { table: 4, label: "3s", alpha: 1.2, method: Method::Present, value: 34.28835088 },
    Printed { table: 4, label: "3s", alpha: 1.2, method: Method::Nu, value: 34.28835086 },
    Printed { table: 4, label: "3s", alpha: 0.8, method: Method::Present, value: 27.29448969 },
    Printed { table: 4, label: "3s", alpha: 0.8, method: Method::Nu, value: 27.2944896 },
    Printed { table: 4, label: "3s", alpha: 0.4, method: Method::Present, value: 21.11625128 },
    Printed { table: 4, label: "3s", alpha: 0.4, method: Method::Nu, value: 21.11625126 },
    Printed { table: 4, label: "3s", alpha: 0.2, method: Method::Present, value: 18.33059519 },
    Printed { table: 4, label: "3p", alpha: 1.2, method: Method::Present, value: 34.67512504 },
    Printed { table: 4, label: "3p", alpha: 1.2, method: Method::Nu, value: 34.67512504 },
    Printed { table: 4, label: "3p", alpha: 0.8, method: Method::Present, value: 27.44896379 },
    Printed { table: 4, label: "3p", alpha: 0.8, method: Method::Nu, value: 27.44896381 },
    Printed { table: 4, label: "3p", alpha: 0.4, method: Method::Present, value: 21.15044541 },
    Printed { table: 4, label: "3p", alpha: 0.4, method: Method::Nu, value: 21.15044543 },
    Printed { table: 4, label: "3p", alpha: 0.2, method: Method::Present, value: 18.33858624 },
    Printed { table: 4, label: "3d", alpha: 1.2, method: Method::Present, value: 35.43921159 },
    Printed { table: 4, label: "3d", alpha: 1.2, method: Method::Nu, value: 35.43921159 },
    Printed { table: 4, label: "3d", alpha: 0.8, method: Method::Present, value: 27.75631555 },
    Printed { table: 4, label: "3d", alpha: 0.8, method: Method::Nu, value: 27.75631556 },
    Printed { table: 4, label: "3d", alpha: 0.4, method: Method::Present, value: 21.21875332 },
    Printed { table: 4, label: "3d", alpha: 0.4, method: Method::Nu, value: 21.2187533 },
    Printed { table: 4, label: "3d", alpha: 0.2, method: Method::Present, value: 18.35456400 },
    Printed { table: 4, label: "4s", alpha: 1.2, method: Method::Present, value: 40.86126776 },
    Printed { table: 4, label: "4s", alpha: 1.2, method: Method::Nu, value: 40.86126774 },
    Printed { table: 4, label: "4s", alpha: 0.8, method: Method::Present, value: 31.16077521 },
    Printed { table: 4, label: "4s", alpha: 0.8, method: Method::Nu, value: 31.16077522 },
    Printed { table: 4, label: "4s", alpha: 0.4, method: Method::Present, value: 22.79229512 },
    Printed { table: 4, label: "4s", alpha: 0.4, method: Method::Nu, value: 22.7922951 },
    Printed { table: 4, label: "4s", alpha: 0.2, method: Method::Present, value: 19.10447968 },
    Printed { table: 4, label: "4p", alpha: 1.2, method: Method::Present, value: 41.28229588 },
    Printed { table: 4, label: "4p", alpha: 1.2, method: Method::Nu, value: 41.28229584 },
    Printed { table: 4, label: "4p", alpha: 0.8, method: Method::Present, value: 31.32544867 },
    Printed { table: 4, label: "4p", alpha: 0.8, method: Method::Nu, value: 31.32544868 },
    Printed { table: 4, label: "4p", alpha: 0.4, method: Method::Present, value: 22.82776799 },
    Printed { table: 4, label: "4p", alpha: 0.4, method: Method::Nu, value: 22.8277680 },
    Printed { table: 4, label: "4p", alpha: 0.2, method: Method::Present, value: 19.11263069 },
    Printed { table: 4, label: "4d", alpha: 1.2, method: Method::Present, value: 42.11348591 },
    Printed { table: 4, label: "4d", alpha: 1.2, method: Method::Nu, value: 42.11348590 },
    Printed { table: 4, label: "4d", alpha: 0.8, method: Method::Present, value: 31.65300784 },
    Printed { table: 4, label: "4d", alpha: 0.8, method: Method::Nu, value: 31.65300783 },
    Printed { table: 4, label: "4d", alpha: 0.4, method: Method::Present, value: 22.89862722 },
    Printed { table: 4, label: "4d", alpha: 0.4, method: Method::Nu, value: 22.89862721 },
    Printed { table: 4, label: "4d", alpha: 0.2, method: Method::Present, value: 19.12892818 },
    Printed { table: 4, label: "4f", alpha: 1.2, method: Method::Present, value: 43.33519178 },
    Printed { table: 4, label: "4f", alpha: 1.2, method: Method::Nu, value: 43.33519178 },
    Printed { table: 4, label: "4f", alpha: 0.8, method: Method::Present, value: 32.14003976 },
    Printed { table: 4, label: "4f", alpha: 0.8, method: Method::Nu, value: 32.14003977 },
    Printed { table: 4, label: "4f", alpha: 0.4, method: Method::Present, value: 23.00470172 },
    Printed { table: 4, label: "4f", alpha: 0.4, method: Method::Nu, value: 23.00470171 },
    Printed { table: 4, label: "4f", alpha: 0.2, method: Method::Present, value: 19.15336296 },
    // table 5
    Printed { table: 5, label: "1s", alpha: 0.2, method: Method::Present, value: 16.83082621 },
    Printed { table: 5, label: "1s", alpha: 0.2, method: Method::Nu, value: 16.83082621 },
    Printed { table: 5, label: "1s", alpha: 0.02, method: Method::Present, value: 15.8526429 },
    Printed { table: 5, label: "1s", alpha: 0.02, method: Method::Nu, value: 15.85264289 },
    Printed { table: 5, label: "1s", alpha: 0.002, method: Method::Present, value: 15.75661628 },
    Printed { table: 5, label: "1s", alpha: 0.002, method: Method::Nu, value: 15.75661628 },
    Printed { table: 5, label: "2s", alpha: 0.2, method: Method::Present, value: 17.5727107 },
    Printed { table: 5, label: "2s", alpha: 0.2, method: Method::Nu, value: 17.5727107 },
    Printed { table: 5, label: "2s", alpha: 0.02, method: Method::Present, value: 15.9239468 },
    Printed { table: 5, label: "2s", alpha: 0.02, method: Method::Nu, value: 15.9239468 },
    Printed { table: 5, label: "2s", alpha: 0.002, method: Method::Present, value: 15.76371788 },
    Printed { table: 5, label: "2s", alpha: 0.002, method: Method::Nu, value: 15.76371786 },
    Printed { table: 5, label: "2p", alpha: 0.2, method: Method::Present, value: 17.58054181 },
    Printed { table: 5, label: "2p", alpha: 0.2, method: Method::Nu, value: 17.58054181 },
    Printed { table: 5, label: "2p", alpha: 0.02, method: Method::Present, value: 15.92402152 },
    Printed { table: 5, label: "2p", alpha: 0.02, method: Method::Nu, value: 15.92402153 },
    Printed { table: 5, label: "2p", alpha: 0.002, method: Method::Present, value: 15.76371861 },
    Printed { table: 5, label: "2p", alpha: 0.002, method: Method::Nu, value: 15.76371860 },
    Printed { table: 5, label: "3s", alpha: 0.2, method: Method::Present, value: 18.33059519 },
    Printed { table: 5, label: "3s", alpha: 0.2, method: Method::Nu, value: 18.33059518 },
    Printed { table: 5, label: "3s", alpha: 0.02, method: Method::Present, value: 15.99541072 },
    Printed { table: 5, label: "3s", alpha: 0.02, method: Method::Nu, value: 15.99541071 },
    Printed { table: 5, label: "3s", alpha: 0.002, method: Method::Present, value: 15.77082105 },
    Printed { table: 5, label: "3s", alpha: 0.002, method: Method::Nu, value: 15.77082105 },
    Printed { table: 5, label: "3p", alpha: 0.2, method: Method::Present, value: 18.33858624 },
    Printed { table: 5, label: "3p", alpha: 0.2, method: Method::Nu, value: 18.33858626 },
    Printed { table: 5, label: "3p", alpha: 0.02, method: Method::Present, value: 15.99548559 },
    Printed { table: 5, label: "3p", alpha: 0.02, method: Method::Nu, value: 15.9954856 },
    Printed { table: 5, label: "3p", alpha: 0.002, method: Method::Present, value: 15.77082179 },
    Printed { table: 5, label: "3p", alpha: 0.002, method: Method::Nu, value: 15.77082179 },
    Printed { table: 5, label: "3d", alpha: 0.2, method: Method::Present, value: 18.35456400 },
    Printed { table: 5, label: "3d", alpha: 0.2, method: Method::Nu, value: 18.35456399 },
    Printed { table: 5, label: "3d", alpha: 0.02, method: Method::Present, value: 15.99563535 },
    Printed { table: 5, label: "3d", alpha: 0.02, method: Method::Nu, value: 15.99563534 },
    Printed { table: 5, label: "3d", alpha: 0.002, method: Method::Present, value: 15.77082329 },
    Printed { table: 5, label: "3d", alpha: 0.002, method: Method::Nu, value: 15.77082328 },
    Printed { table: 5, label: "4s", alpha: 0.2, method: Method::Present, value: 19.10447968 },
    Printed { table: 5, label: "4s", alpha: 0.2, method: Method::Nu, value: 19.10447967 },
    Printed { table: 5, label: "4s", alpha: 0.02, method: Method::Present, value: 16.06703462 },
    Printed { table: 5, label: "4s", alpha: 0.02, method: Method::Nu, value: 16.06703463 },
    Printed { table: 5, label: "4s", alpha: 0.002, method: Method::Present, value: 15.77792584 },
    Printed { table: 5, label: "4s", alpha: 0.002, method: Method::Nu, value: 15.77792584 },
    Printed { table: 5, label: "4p", alpha: 0.2, method: Method::Present, value: 19.11263069 },
    Printed { table: 5, label: "4p", alpha: 0.2, method: Method::Nu, value: 19.1126307 },
    Printed { table: 5, label: "4p", alpha: 0.02, method: Method::Present, value: 16.06710967 },
    Printed { table: 5, label: "4p", alpha: 0.02, method: Method::Nu, value: 16.06710967 },
    Printed { table: 5, label: "4p", alpha: 0.002, method: Method::Present, value: 15.77792658 },
    Printed { table: 5, label: "4p", alpha: 0.002, method: Method::Nu, value: 15.77792658 },
    Printed { table: 5, label: "4d", alpha: 0.2, method: Method::Present, value: 19.12892818 },
    Printed { table: 5, label: "4d", alpha: 0.2, method: Method::Nu, value: 19.12892817 },
    Printed { table: 5, label: "4d", alpha: 0.02, method: Method::Present, value: 16.06725975 },
    Printed { table: 5, label: "4d", alpha: 0.02, method: Method::Nu, value: 16.06725974 },
    Printed { table: 5, label: "4d", alpha: 0.002, method: Method::Present, value: 15.77792808 },
    Printed { table: 5, label: "4d", alpha: 0.002, method: Method::Nu, value: 15.77792806 },
    Printed { table: 5, label: "4f", alpha: 0.2, method: Method::Present, value: 19.15336296 },
    Printed { table: 5, label: "4f", alpha: 0.2, method: Method::Nu, value: 19.15336297 },
    Printed { table: 5, label: "4f", alpha: 0.02, method: Method::Present, value: 16.06748486 },
    Printed { table: 5, label: "4f", alpha: 0.02, method: Method::Nu, value: 16.06748485 },
    Printed { table: 5, label: "4f", alpha: 0.002, method: Method::Present, value: 15.77793030 },
    Printed { table: 5, label: "4f", alpha: 0.002, method: Method::Nu, value: 15.77793030 },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Pass,
    Fail,
    KnownDiscrepancy,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "pass",
            RowStatus::Fail => "fail",
            RowStatus::KnownDiscrepancy => "known-discrepancy",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowDef {
    pub label: String,
    pub state: QuantumState,
    pub alpha: f64,
    pub method: Method,
    pub printed: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableSpec {
    pub id: u8,
    /// Well depths, mass and `ħ`; `alpha` is taken from each row.
    pub params: PotentialParams,
    pub rows: Vec<RowDef>,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub def: RowDef,
    /// `closed_form` is the computed energy, `oracle` the printed value.
    pub report: OracleReport,
    pub status: RowStatus,
}

fn parse_label(table: u8, label: &str) -> Result<QuantumState> {
    if table == 2 || table == 3 {
        let n = label
            .parse()
            .map_err(|_| Error::Config(format!("table {table}: bad level index `{label}`")))?;
        Ok(QuantumState::new(n, 0))
    } else {
        QuantumState::from_label(label)
    }
}

impl TableSpec {
    pub const IDS: [u8; 5] = [1, 2, 3, 4, 5];

    /// The published table `id` (1 to 5).
    pub fn published(id: u8) -> Result<Self> {
        let (v3, v4) = match id {
            1 => (0.5, 0.5),
            2..=5 => (0.0, 0.0),
            _ => return Err(Error::invalid("table", format!("expected 1..=5, got {id}"))),
        };
        let params = PotentialParams::new(5.0, 3.0, v3, v4, 0.2, 10.0, 1.0)?;
        let rows = PRINTED
            .iter()
            .filter(|p| p.table == id)
            .map(|p| {
                Ok(RowDef {
                    label: p.label.to_string(),
                    state: parse_label(id, p.label)?,
                    alpha: p.alpha,
                    method: p.method,
                    printed: p.value,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            id,
            params,
            rows,
            tolerance: TABLE_TOLERANCE,
        })
    }

    pub fn all_published() -> Vec<Self> {
        Self::IDS
            .iter()
            .map(|&id| Self::published(id).expect("built-in table data parses"))
            .collect()
    }

    pub fn with_tolerance(self, tolerance: f64) -> Self {
        Self { tolerance, ..self }
    }

    /// Rows of this table are reported without being asserted.
    pub fn report_only(&self) -> bool {
        self.id == 1
    }

    pub fn params_at(&self, alpha: f64) -> Result<PotentialParams> {
        self.params.with("alpha", alpha)
    }

    fn caption(&self) -> String {
        let p = &self.params;
        format!(
            "table {}: V1={} V2={} V3={} V4={} mu={} hbar={}",
            self.id, p.v1, p.v2, p.v3, p.v4, p.mu, p.hbar
        )
    }
}

/// Evaluates every row of `spec` with the closed-form spectrum and compares
/// against the printed value at the absolute tolerance `spec.tolerance`.
pub fn reproduce_table(spec: &TableSpec) -> Result<Vec<TableRow>> {
    spec.rows
        .iter()
        .map(|def| {
            let params = spec.params_at(def.alpha)?;
            let computed = energy_eigenvalue(&params, def.state)?.energy;
            let quantity = format!("table {} {} alpha={} {}", spec.id, def.label, def.alpha, def.method);
            let report = OracleReport::absolute(quantity, computed, def.printed, spec.tolerance);
            let status = match (report.pass, spec.report_only()) {
                (true, _) => RowStatus::Pass,
                (false, true) => RowStatus::KnownDiscrepancy,
                (false, false) => RowStatus::Fail,
            };
            Ok(TableRow {
                def: def.clone(),
                report,
                status,
            })
        })
        .collect()
}

/// Numerov eigenvalue of the approximated radial equation for one row,
/// compared with the closed form at relative tolerance [`NUMEROV_TOLERANCE`].
pub fn numerov_check(params: &PotentialParams, state: QuantumState, mode: CentrifugalMode) -> Result<OracleReport> {
    let closed = energy_eigenvalue(params, state)?.energy;
    let problem = NumerovProblem::auto(*params, state.l, mode, state.n)?;
    let numeric = numerov_eigenvalue(&problem, state.n)?.energy;
    let quantity = format!("numerov {} alpha={}", state.label(), params.alpha);
    Ok(OracleReport::relative(quantity, closed, numeric, NUMEROV_TOLERANCE))
}

/// Numerov cross-check of the computed values of a report-only table.
pub fn numerov_crosscheck(spec: &TableSpec) -> Result<Vec<OracleReport>> {
    spec.rows
        .iter()
        .filter(|r| r.method == Method::Present)
        .map(|r| numerov_check(&spec.params_at(r.alpha)?, r.state, CentrifugalMode::Approximated))
        .collect()
}

/// Output block for a reproduced table, with Numerov columns when given.
pub fn table_frame(spec: &TableSpec, rows: &[TableRow], numerov: Option<&[OracleReport]>) -> Frame {
    let mut columns = vec![
        "table", "label", "n", "l", "alpha", "method", "printed", "computed", "abs_error", "tolerance", "status",
    ];
    if numerov.is_some() {
        columns.extend(["numerov", "numerov_rel_error", "numerov_pass"]);
    }
    let mut frame = Frame::new(spec.caption(), &columns);
    frame.comment("energies from the closed-form spectrum; labels Nx mean n = N");
    frame.comment(format!("absolute tolerance {}", super::format::sig10(spec.tolerance)));
    if spec.report_only() {
        frame.comment("known-discrepancy: printed values are not reproduced by the closed form; rows are reported, not asserted");
        frame.comment(format!(
            "numerov columns: shooting solution of the approximated radial equation, relative tolerance {}",
            super::format::sig10(NUMEROV_TOLERANCE)
        ));
    }
    let mut present = numerov.map(|n| n.iter());
    for row in rows {
        let mut cells: Vec<Cell> = vec![
            u32::from(spec.id).into(),
            row.def.label.as_str().into(),
            row.def.state.n.into(),
            row.def.state.l.into(),
            row.def.alpha.into(),
            row.def.method.to_string().into(),
            row.def.printed.into(),
            row.report.closed_form.into(),
            row.report.abs_error.into(),
            spec.tolerance.into(),
            row.status.to_string().into(),
        ];
        if let Some(iter) = present.as_mut() {
            match (row.def.method, iter.next()) {
                (Method::Present, Some(check)) => {
                    cells.extend([check.oracle.into(), check.rel_error.into(), check.pass.into()]);
                }
                _ => cells.extend([Cell::Text(String::new()), Cell::Text(String::new()), Cell::Text(String::new())]),
            }
        }
        frame.push(cells);
    }
    frame
}
